//! Transformations, `S(A, B)` semigroups and related families.
//!
//! Points are `0..n` internally and `1..=n` in text. Composition is left to
//! right: `x.then(y)` sends `p` to `y(x(p))`, so a product of maps of equal
//! rank keeps the kernel of its first factor and the image of its last.
//!
//! For a set `A` of `r`-subsets and a set `B` of partitions with `r` classes,
//! `S(A, B)` is generated by all maps with image in `A` and kernel in `B`.
//! Its rank-`r` part is a Rees matrix semigroup over `S_r` whose structure
//! matrix is indexed by `A × B`, non-zero exactly where `a` is a transversal
//! of `b`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graham::bipartite_dot;
use crate::group::{FiniteGroup, GroupElement};
use crate::oracle::{self, Magma};
use crate::perm::Permutation;
use crate::rank::minimal_generating_set;
use crate::rees::{ReesMatrixSemigroup, RmsElement, StructureMatrix};

/// Largest degree accepted by the enumerating constructors.
pub const MAX_ENUMERATION_DEGREE: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transformation(Vec<u8>);

impl Transformation {
    pub fn identity(n: usize) -> Self {
        Transformation((0..n as u8).collect())
    }

    /// From 0-based images.
    pub fn from_images(images: Vec<u8>) -> Result<Self> {
        let n = images.len();
        if images.iter().any(|&x| x as usize >= n) {
            return Err(Error::Usage(format!("{images:?} leaves the point set")));
        }
        Ok(Transformation(images))
    }

    /// Parses one-line notation `[2 3 1 1]` (1-based).
    pub fn parse(text: &str) -> Result<Self> {
        let body = text
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Usage(format!("`{text}` is not a transformation literal")))?;
        let points: Vec<usize> = body
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse::<usize>()
                    .map_err(|_| Error::Usage(format!("bad point `{s}` in `{text}`")))
            })
            .collect::<Result<_>>()?;
        let n = points.len();
        if n == 0 || points.iter().any(|&p| p == 0 || p > n) {
            return Err(Error::Usage(format!("`{text}` has a point outside 1..={n}")));
        }
        Ok(Transformation(points.into_iter().map(|p| (p - 1) as u8).collect()))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, p: usize) -> usize {
        self.0[p] as usize
    }

    pub fn images(&self) -> &[u8] {
        &self.0
    }

    pub fn then(&self, other: &Transformation) -> Transformation {
        debug_assert_eq!(self.degree(), other.degree());
        Transformation(self.0.iter().map(|&x| other.0[x as usize]).collect())
    }

    /// Sorted image set.
    pub fn image(&self) -> Vec<usize> {
        let mut seen = vec![false; self.degree()];
        for &x in &self.0 {
            seen[x as usize] = true;
        }
        (0..self.degree()).filter(|&p| seen[p]).collect()
    }

    pub fn kernel(&self) -> KernelPartition {
        KernelPartition::from_labels(&self.0)
    }

    pub fn rank(&self) -> usize {
        self.image().len()
    }
}

impl fmt::Display for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|&x| (x + 1).to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

pub fn compose(x: &Transformation, y: &Transformation) -> Result<Transformation> {
    if x.degree() != y.degree() {
        return Err(Error::Usage(format!(
            "degrees {} and {} differ",
            x.degree(),
            y.degree()
        )));
    }
    Ok(x.then(y))
}

/// `(image, kernel, rank)` of a transformation.
pub fn image_and_kernel(x: &Transformation) -> (Vec<usize>, KernelPartition, usize) {
    let image = x.image();
    let rank = image.len();
    (image, x.kernel(), rank)
}

/// A partition of `0..n`; classes are numbered by their smallest point.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KernelPartition {
    class_of: Vec<u8>,
    classes: usize,
}

impl KernelPartition {
    /// Partition by equal labels.
    pub fn from_labels<T: PartialEq>(labels: &[T]) -> Self {
        let mut class_of = vec![0u8; labels.len()];
        let mut reps: Vec<usize> = Vec::new();
        for p in 0..labels.len() {
            match reps.iter().position(|&q| labels[q] == labels[p]) {
                Some(c) => class_of[p] = c as u8,
                None => {
                    class_of[p] = reps.len() as u8;
                    reps.push(p);
                }
            }
        }
        KernelPartition {
            class_of,
            classes: reps.len(),
        }
    }

    /// Parses `1,4,7|2,5|3,6` on `n` points.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let mut labels = vec![usize::MAX; n];
        for (c, class) in text.trim().split('|').enumerate() {
            let mut empty = true;
            for s in class.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                let p: usize = s
                    .parse()
                    .map_err(|_| Error::Usage(format!("bad point `{s}` in partition `{text}`")))?;
                if p == 0 || p > n {
                    return Err(Error::Usage(format!("point {p} out of range 1..={n} in `{text}`")));
                }
                if labels[p - 1] != usize::MAX {
                    return Err(Error::Usage(format!("point {p} appears twice in `{text}`")));
                }
                labels[p - 1] = c;
                empty = false;
            }
            if empty {
                return Err(Error::Usage(format!("empty class in partition `{text}`")));
            }
        }
        if let Some(p) = labels.iter().position(|&c| c == usize::MAX) {
            return Err(Error::Usage(format!("point {} missing from partition `{text}`", p + 1)));
        }
        Ok(Self::from_labels(&labels))
    }

    pub fn degree(&self) -> usize {
        self.class_of.len()
    }

    pub fn weight(&self) -> usize {
        self.classes
    }

    pub fn class_of(&self, p: usize) -> usize {
        self.class_of[p] as usize
    }

    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.classes];
        for (p, &c) in self.class_of.iter().enumerate() {
            out[c as usize].push(p);
        }
        out
    }

    /// Whether `set` meets every class exactly once.
    pub fn is_transversal(&self, set: &[usize]) -> bool {
        let mut hit = vec![false; self.classes];
        for &p in set {
            let c = self.class_of(p);
            if hit[c] {
                return false;
            }
            hit[c] = true;
        }
        hit.iter().all(|&h| h)
    }
}

impl fmt::Display for KernelPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let classes: Vec<String> = self
            .classes()
            .iter()
            .map(|c| c.iter().map(|p| (p + 1).to_string()).collect::<Vec<_>>().join(","))
            .collect();
        f.write_str(&classes.join("|"))
    }
}

/// Parses `1,2,3` into a sorted 0-based subset of `0..n`.
pub fn parse_subset(text: &str, n: usize) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for s in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let p: usize = s
            .parse()
            .map_err(|_| Error::Usage(format!("bad point `{s}` in `{text}`")))?;
        if p == 0 || p > n {
            return Err(Error::Usage(format!("point {p} out of range 1..={n} in `{text}`")));
        }
        out.push(p - 1);
    }
    out.sort_unstable();
    let len = out.len();
    out.dedup();
    if out.len() != len {
        return Err(Error::Usage(format!("repeated point in `{text}`")));
    }
    Ok(out)
}

pub fn format_subset(set: &[usize]) -> String {
    set.iter().map(|p| (p + 1).to_string()).collect::<Vec<_>>().join(",")
}

/// Full transformation monoid `T_n` as a magma.
#[derive(Clone, Copy, Debug)]
pub struct FullTransformations;

impl Magma for FullTransformations {
    type Elem = Transformation;

    fn multiply(&self, a: &Transformation, b: &Transformation) -> Transformation {
        a.then(b)
    }
}

/// A partial injection of `0..n`; `None` marks an undefined point.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialInjection(Vec<Option<u8>>);

impl PartialInjection {
    pub fn new(values: Vec<Option<u8>>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n];
        for &v in values.iter().flatten() {
            let v = v as usize;
            if v >= n || seen[v] {
                return Err(Error::Usage(format!("{values:?} is not a partial injection")));
            }
            seen[v] = true;
        }
        Ok(PartialInjection(values))
    }

    /// Parses `[2 - 1]` (1-based, `-` undefined).
    pub fn parse(text: &str) -> Result<Self> {
        let body = text
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Usage(format!("`{text}` is not a partial map literal")))?;
        let parts: Vec<&str> = body.split_whitespace().collect();
        let n = parts.len();
        let values = parts
            .iter()
            .map(|s| match *s {
                "-" => Ok(None),
                s => match s.parse::<usize>() {
                    Ok(p) if (1..=n).contains(&p) => Ok(Some((p - 1) as u8)),
                    _ => Err(Error::Usage(format!("bad point `{s}` in `{text}`"))),
                },
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(values)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, p: usize) -> Option<usize> {
        self.0[p].map(usize::from)
    }

    pub fn then(&self, other: &PartialInjection) -> PartialInjection {
        PartialInjection(self.0.iter().map(|v| v.and_then(|x| other.0[x as usize])).collect())
    }

    pub fn domain(&self) -> Vec<usize> {
        (0..self.degree()).filter(|&p| self.0[p].is_some()).collect()
    }

    pub fn image(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.0.iter().flatten().map(|&x| x as usize).collect();
        out.sort_unstable();
        out
    }

    pub fn rank(&self) -> usize {
        self.0.iter().flatten().count()
    }
}

impl fmt::Display for PartialInjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|v| v.map_or_else(|| "-".to_string(), |x| (x + 1).to_string()))
            .collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// Symmetric inverse monoid `I_n` as a magma.
#[derive(Clone, Copy, Debug)]
pub struct PartialInjections;

impl Magma for PartialInjections {
    type Elem = PartialInjection;

    fn multiply(&self, a: &PartialInjection, b: &PartialInjection) -> PartialInjection {
        a.then(b)
    }
}

/// The data `(n, A, B)` of an `S(A, B)` semigroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SabInstance {
    n: usize,
    r: usize,
    images: Vec<Vec<usize>>,
    kernels: Vec<KernelPartition>,
}

impl SabInstance {
    /// Checks that all images have one size `r`, all kernels weight `r`,
    /// and that neither list repeats an entry.
    pub fn new(n: usize, images: Vec<Vec<usize>>, kernels: Vec<KernelPartition>) -> Result<Self> {
        if images.is_empty() || kernels.is_empty() {
            return Err(Error::Usage("S(A,B) needs at least one image and one kernel".into()));
        }
        let r = images[0].len();
        for a in &images {
            if a.len() != r || a.iter().any(|&p| p >= n) {
                return Err(Error::Usage(format!(
                    "image {{{}}} is not an {r}-subset of 1..={n}",
                    format_subset(a)
                )));
            }
        }
        for b in &kernels {
            if b.degree() != n || b.weight() != r {
                return Err(Error::Usage(format!(
                    "partition {b} does not have {r} classes on {n} points"
                )));
            }
        }
        for (k, a) in images.iter().enumerate() {
            if images[..k].contains(a) {
                return Err(Error::Usage(format!("image {{{}}} listed twice", format_subset(a))));
            }
        }
        for (k, b) in kernels.iter().enumerate() {
            if kernels[..k].contains(b) {
                return Err(Error::Usage(format!("partition {b} listed twice")));
            }
        }
        Ok(SabInstance { n, r, images, kernels })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn images(&self) -> &[Vec<usize>] {
        &self.images
    }

    pub fn kernels(&self) -> &[KernelPartition] {
        &self.kernels
    }

    fn require_formula_range(&self) -> Result<()> {
        if self.r <= 2 {
            return Err(Error::Unsupported(format!(
                "r = {} is not covered: for r = 2 the group S_2 is cyclic of rank 1 rather than 2, \
                 so the S(A,B) rank formula does not apply",
                self.r
            )));
        }
        if self.r >= self.n {
            return Err(Error::Unsupported(format!(
                "r = {} must be smaller than n = {}",
                self.r, self.n
            )));
        }
        Ok(())
    }

    /// The map sending class `s` of kernel `b` to the `perm(s)`-th point of
    /// image `a`.
    pub fn lift(&self, b: usize, perm: &Permutation, a: usize) -> Transformation {
        let kernel = &self.kernels[b];
        let image = &self.images[a];
        Transformation(
            (0..self.n)
                .map(|p| image[perm.apply(kernel.class_of(p))] as u8)
                .collect(),
        )
    }
}

/// All `|A|·|B|·r!` generators, kernels outermost, then images, then
/// permutations in lexicographic order.
pub fn sab_generators(inst: &SabInstance) -> Vec<Transformation> {
    let perms = Permutation::all(inst.r);
    let mut out = Vec::with_capacity(inst.images.len() * inst.kernels.len() * perms.len());
    for b in 0..inst.kernels.len() {
        for a in 0..inst.images.len() {
            for p in &perms {
                out.push(inst.lift(b, p, a));
            }
        }
    }
    out
}

/// Statistics of the transversal graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TransversalStats {
    pub v0: usize,
    pub v_plus_a: usize,
    pub v_plus_b: usize,
    pub max_degree: usize,
}

/// Bipartite graph on `A ∪ B` with `a ~ b` when `a` is a transversal of `b`.
#[derive(Clone, Debug)]
pub struct TransversalGraph {
    /// `adjacent[a][b]`
    pub adjacent: Vec<Vec<bool>>,
    pub stats: TransversalStats,
    labels_a: Vec<String>,
    labels_b: Vec<String>,
}

impl TransversalGraph {
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (a, row) in self.adjacent.iter().enumerate() {
            for (b, &adj) in row.iter().enumerate() {
                if adj {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn degree_a(&self, a: usize) -> usize {
        self.adjacent[a].iter().filter(|&&x| x).count()
    }

    pub fn degree_b(&self, b: usize) -> usize {
        self.adjacent.iter().filter(|row| row[b]).count()
    }

    /// Undirected DOT: kernels as boxes, images as circles.
    pub fn to_dot(&self) -> String {
        let edges: Vec<(usize, usize, Option<String>)> = self.edges().into_iter().map(|(a, b)| (a, b, None)).collect();
        bipartite_dot("transversal", &self.labels_b, &self.labels_a, &edges, false)
    }
}

pub fn transversal_graph(inst: &SabInstance) -> TransversalGraph {
    let adjacent: Vec<Vec<bool>> = inst
        .images
        .iter()
        .map(|a| inst.kernels.iter().map(|b| b.is_transversal(a)).collect())
        .collect();
    let mut graph = TransversalGraph {
        adjacent,
        stats: TransversalStats {
            v0: 0,
            v_plus_a: 0,
            v_plus_b: 0,
            max_degree: 0,
        },
        labels_a: inst
            .images
            .iter()
            .map(|a| format!("{{{}}}", format_subset(a)))
            .collect(),
        labels_b: inst.kernels.iter().map(|b| format!("({b})")).collect(),
    };
    let da: Vec<usize> = (0..inst.images.len()).map(|a| graph.degree_a(a)).collect();
    let db: Vec<usize> = (0..inst.kernels.len()).map(|b| graph.degree_b(b)).collect();
    graph.stats = TransversalStats {
        v0: da.iter().chain(&db).filter(|&&d| d == 0).count(),
        v_plus_a: da.iter().filter(|&&d| d > 0).count(),
        v_plus_b: db.iter().filter(|&&d| d > 0).count(),
        max_degree: da.iter().chain(&db).copied().max().unwrap_or(0),
    };
    graph
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SabCase {
    /// Maximum degree at least two.
    Connected,
    /// Maximum degree one: a Brandt-like matching.
    Matching,
    /// No transversals at all.
    Empty,
}

impl fmt::Display for SabCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SabCase::Connected => "MD>=2",
            SabCase::Matching => "MD=1",
            SabCase::Empty => "MD=0",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SabRank {
    pub value: usize,
    pub case: SabCase,
    pub stats: TransversalStats,
}

impl SabRank {
    pub fn machine_line(&self) -> String {
        format!(
            "rank={} case={} v0={} v_plus_A={} v_plus_B={} max_degree={}",
            self.value, self.case, self.stats.v0, self.stats.v_plus_a, self.stats.v_plus_b, self.stats.max_degree
        )
    }
}

/// `max(v+(A), v+(B)) + v0` when the maximum degree is at least two, one
/// more when it is one, and `|A||B|r!` when there are no transversals.
pub fn sab_rank(inst: &SabInstance) -> Result<SabRank> {
    inst.require_formula_range()?;
    let stats = transversal_graph(inst).stats;
    let base = stats.v_plus_a.max(stats.v_plus_b) + stats.v0;
    let (value, case) = match stats.max_degree {
        0 => (
            inst.images.len() * inst.kernels.len() * factorial(inst.r),
            SabCase::Empty,
        ),
        1 => (base + 1, SabCase::Matching),
        _ => (base, SabCase::Connected),
    };
    Ok(SabRank { value, case, stats })
}

fn factorial(r: usize) -> usize {
    (1..=r).product()
}

/// The rank-`r` principal factor of `S(A, B)` as `M0[S_r; B, A; P]`.
#[derive(Clone, Debug)]
pub struct SabPrincipal {
    pub rms: ReesMatrixSemigroup,
    inst: SabInstance,
}

impl SabPrincipal {
    /// The transformation represented by a non-zero element.
    pub fn lift(&self, x: &RmsElement) -> Option<Transformation> {
        let RmsElement::Triple { i, g, lambda } = *x else {
            return None;
        };
        let perm = self.rms.group().permutation(g)?;
        Some(self.inst.lift(i, perm, lambda))
    }
}

/// Rows are indexed by images, columns by kernels; `p_{a,b}` is the
/// permutation sending the `u`-th point of `a` to the class of `b` that
/// contains it.
pub fn sab_principal_rms(inst: &SabInstance) -> Result<SabPrincipal> {
    inst.require_formula_range()?;
    let group = Arc::new(FiniteGroup::symmetric(inst.r)?);
    let mut rows = Vec::with_capacity(inst.images.len());
    for a in &inst.images {
        let row = inst
            .kernels
            .iter()
            .map(|b| {
                if !b.is_transversal(a) {
                    return Ok(None);
                }
                let perm = Permutation::from_images(a.iter().map(|&p| b.class_of(p) as u8).collect())?;
                Ok(group.element_of(&perm))
            })
            .collect::<Result<Vec<Option<GroupElement>>>>()?;
        rows.push(row);
    }
    let rms = ReesMatrixSemigroup::new(group, StructureMatrix::from_rows(rows)?)?;
    Ok(SabPrincipal {
        rms,
        inst: inst.clone(),
    })
}

/// A minimum-size generating set of `S(A, B)`, checked against the closure
/// of all generators.
pub fn sab_minimal_generators(inst: &SabInstance, closure_cap: u64) -> Result<Vec<Transformation>> {
    let principal = sab_principal_rms(inst)?;
    let mut out: Vec<Transformation> = minimal_generating_set(&principal.rms)?
        .iter()
        .filter_map(|x| principal.lift(x))
        .collect();
    out.sort();
    let expected = sab_rank(inst)?.value;
    if out.len() != expected {
        return Err(Error::Internal(format!(
            "lifted generating set has {} elements, formula gives {expected}",
            out.len()
        )));
    }
    let full = oracle::closure(&FullTransformations, &sab_generators(inst), closure_cap)?;
    if !oracle::verify_generates(&FullTransformations, &full, &out, closure_cap)? {
        return Err(Error::Internal("lifted generating set does not generate S(A,B)".into()));
    }
    Ok(out)
}

/// Stirling number of the second kind.
pub fn stirling2(n: usize, r: usize) -> u64 {
    let mut row = vec![0u64; r + 1];
    row[0] = 1;
    for m in 1..=n {
        for k in (1..=r.min(m)).rev() {
            row[k] = k as u64 * row[k] + row[k - 1];
        }
        row[0] = 0;
    }
    row[r]
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i as u64 + 1))
}

/// Every map of rank exactly `r` on `n` points: a generating set of
/// `K(n, r) = { α ∈ T_n : |im α| ≤ r }`.
pub fn knr(n: usize, r: usize) -> Result<Vec<Transformation>> {
    if !(1 < r && r < n) {
        return Err(Error::Usage(format!("K(n,r) needs 1 < r < n, got n = {n}, r = {r}")));
    }
    if n > 6 {
        return Err(Error::Size(format!("K({n},{r}) enumeration is limited to n ≤ 6")));
    }
    let mut out = Vec::new();
    let mut images = vec![0u8; n];
    loop {
        let t = Transformation(images.clone());
        if t.rank() == r {
            out.push(t);
        }
        let Some(pos) = (0..n).rev().find(|&p| (images[p] as usize) < n - 1) else {
            break;
        };
        images[pos] += 1;
        for later in images.iter_mut().skip(pos + 1) {
            *later = 0;
        }
    }
    Ok(out)
}

/// `r`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for p in start..n {
            cur.push(p);
            go(p + 1, n, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, r, &mut Vec::new(), &mut out);
    out
}

/// For every `r`-subset `D`, partial identities on `D` twisted by disjoint
/// transpositions: one map per transposition `(d_1 d_2), (d_3 d_4), …`, or
/// all six permutations of `D` when `r = 3`.
pub fn inverse_extremal(n: usize, r: usize) -> Result<Vec<PartialInjection>> {
    if !(2 < r && r <= n) {
        return Err(Error::Usage(format!("need 2 < r ≤ n, got n = {n}, r = {r}")));
    }
    if n > MAX_ENUMERATION_DEGREE {
        return Err(Error::Size(format!("degree {n} above {MAX_ENUMERATION_DEGREE}")));
    }
    let mut out = Vec::new();
    for d in subsets(n, r) {
        let perms: Vec<Permutation> = if r == 3 {
            Permutation::all(3)
        } else {
            (0..r / 2)
                .map(|k| {
                    let mut images: Vec<u8> = (0..r as u8).collect();
                    images.swap(2 * k, 2 * k + 1);
                    Permutation::from_images(images).expect("transposition")
                })
                .collect()
        };
        for p in perms {
            let mut values = vec![None; n];
            for (u, &point) in d.iter().enumerate() {
                values[point] = Some(d[p.apply(u)] as u8);
            }
            out.push(PartialInjection(values));
        }
    }
    Ok(out)
}

/// `C(n, r)·max(2, ⌊r/2⌋)`.
pub fn inverse_rank_bound(n: usize, r: usize) -> u64 {
    binomial(n, r) * (r / 2).max(2) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(text: &str) -> Transformation {
        Transformation::parse(text).unwrap()
    }

    fn example35() -> SabInstance {
        let n = 7;
        let images = ["1,2,3", "1,6,7", "5,6,7", "2,4,6", "1,2,5"]
            .iter()
            .map(|s| parse_subset(s, n).unwrap())
            .collect();
        let kernels = ["1,4,7|2,5|3,6", "1,2,3|4,5,6|7", "1,2|4,6,7|3,5"]
            .iter()
            .map(|s| KernelPartition::parse(s, n).unwrap())
            .collect();
        SabInstance::new(n, images, kernels).unwrap()
    }

    #[test]
    fn composition_is_left_to_right() {
        assert_eq!(compose(&t("[2 3 1 1]"), &t("[1 1 2 2]")).unwrap(), t("[1 2 1 1]"));
        assert_eq!(
            compose(&Transformation::identity(3), &t("[3 3 1]")).unwrap(),
            t("[3 3 1]")
        );
        assert_eq!(compose(&t("[2 2 2]"), &t("[3 1 1]")).unwrap(), t("[1 1 1]"));
        assert!(compose(&t("[1 2]"), &t("[1 2 3]")).is_err());
    }

    #[test]
    fn image_kernel_rank() {
        let (image, kernel, rank) = image_and_kernel(&t("[1 1 2 3]"));
        assert_eq!(image, vec![0, 1, 2]);
        assert_eq!(kernel.to_string(), "1,2|3|4");
        assert_eq!(rank, 3);
        assert_eq!(Transformation::identity(4).rank(), 4);
        assert_eq!(t("[2 2 2 2]").rank(), 1);
    }

    #[test]
    fn partitions_parse_and_print() {
        let b = KernelPartition::parse("3,6|1,4,7|2,5", 7).unwrap();
        assert_eq!(b.to_string(), "1,4,7|2,5|3,6");
        assert!(b.is_transversal(&[0, 1, 2]));
        assert!(!b.is_transversal(&[0, 3, 1]));
        assert!(KernelPartition::parse("1,2|2,3", 3).is_err());
        assert!(KernelPartition::parse("1,2", 3).is_err());
        assert!(KernelPartition::parse("1,2||3", 3).is_err());
    }

    #[test]
    fn example35_graph() {
        let inst = example35();
        let g = transversal_graph(&inst);
        assert_eq!(
            g.stats,
            TransversalStats {
                v0: 2,
                v_plus_a: 4,
                v_plus_b: 2,
                max_degree: 3
            }
        );
        assert!(g.adjacent[0][0]);
        assert_eq!(g.edges().len(), 4);
        assert_eq!(sab_generators(&inst).len(), 90);
        let r = sab_rank(&inst).unwrap();
        assert_eq!((r.value, r.case), (6, SabCase::Connected));
    }

    #[test]
    fn single_edge_instance() {
        let n = 4;
        let inst = SabInstance::new(
            n,
            vec![parse_subset("1,2,3", n).unwrap()],
            vec![KernelPartition::parse("1|2|3,4", n).unwrap()],
        )
        .unwrap();
        let g = transversal_graph(&inst);
        assert_eq!(g.stats.max_degree, 1);
        assert_eq!(sab_rank(&inst).unwrap().value, 2);
        let gens = sab_generators(&inst);
        assert_eq!(gens.len(), 6);
        assert_eq!(
            oracle::closure(&FullTransformations, &gens, 1_000_000).unwrap().len(),
            6
        );
        assert_eq!(sab_minimal_generators(&inst, 1_000_000).unwrap().len(), 2);
    }

    #[test]
    fn small_r_is_rejected() {
        let n = 3;
        let inst = SabInstance::new(
            n,
            vec![parse_subset("1,2", n).unwrap()],
            vec![KernelPartition::parse("1|2,3", n).unwrap()],
        )
        .unwrap();
        let err = sab_rank(&inst).unwrap_err();
        assert!(matches!(err, Error::Unsupported(ref m) if m.contains("cyclic")));
    }

    #[test]
    fn principal_factor_matches_transformations() {
        let inst = example35();
        let p = sab_principal_rms(&inst).unwrap();
        let elems: Vec<RmsElement> = p.rms.elements().filter(|x| *x != RmsElement::Zero).collect();
        for x in elems.iter().step_by(7) {
            for y in elems.iter().step_by(5) {
                let xy = p.lift(x).unwrap().then(&p.lift(y).unwrap());
                match p.rms.multiply(x, y) {
                    RmsElement::Zero => assert!(xy.rank() < 3),
                    z => assert_eq!(p.lift(&z).unwrap(), xy),
                }
            }
        }
        for e in p.rms.idempotents() {
            let m = p.lift(&e).unwrap();
            assert_eq!(m.then(&m), m);
        }
    }

    #[test]
    fn stirling_numbers() {
        assert_eq!(stirling2(4, 2), 7);
        assert_eq!(stirling2(5, 5), 1);
        assert_eq!(stirling2(6, 3), 90);
        assert_eq!(stirling2(3, 0), 0);
        // Kernels of weight 2 on 4 points counted directly.
        let kernels: std::collections::HashSet<_> = knr(4, 2).unwrap().iter().map(|m| m.kernel()).collect();
        assert_eq!(kernels.len(), 7);
    }

    #[test]
    fn knr_sizes() {
        // S(4,2) kernels × 4·3 injective class labellings.
        assert_eq!(knr(4, 2).unwrap().len(), 84);
        assert!(knr(4, 4).is_err());
        assert!(knr(7, 3).is_err());
    }

    #[test]
    fn inverse_extremal_counts() {
        assert_eq!(inverse_rank_bound(4, 3), 8);
        assert_eq!(inverse_extremal(4, 3).unwrap().len(), 24);
        let five = inverse_extremal(5, 5).unwrap();
        assert_eq!(five.len(), 2);
        assert_eq!(five[0].to_string(), "[2 1 3 4 5]");
        assert_eq!(inverse_rank_bound(6, 6), 3);
        let p = PartialInjection::parse("[2 - 1]").unwrap();
        assert_eq!(p.then(&p).to_string(), "[- - 2]");
        assert!(PartialInjection::parse("[1 1]").is_err());
    }
}
