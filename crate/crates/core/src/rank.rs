//! Ranks of Rees matrix semigroups and explicit minimal generating sets.
//!
//! For `S = M0[G; I, Λ; P]` with `P` non-zero, let `I'`, `Λ'` be the
//! isolated vertices of the Graham–Houghton graph, `n` the number of
//! non-trivial components and `H_1, …, H_n` the block subgroups of the
//! normal form. Then
//!
//! ```text
//! rank(S) = max(|I \ I'|, |Λ \ Λ'|, σ_min + n - 1) + |I'| + |Λ'|
//! σ_min   = min over g_1..g_n of rank(G : ∪ g_k H_k g_k^-1)
//! ```
//!
//! and `rank(S) = |G||I||Λ|` when `P` is zero.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graham::{graham_normal_form, GrahamNormalForm, Vertex};
use crate::group::{FiniteGroup, GroupElement, GroupSubset, RelativeRank};
use crate::oracle::{self, AbstractSemigroup, DEFAULT_PRODUCT_CAP, DEFAULT_SEARCH_BUDGET};
use crate::rees::{ReesMatrixSemigroup, RmsElement};

/// Default limit on conjugator tuples examined by [`sigma_min`].
pub const DEFAULT_TUPLE_CAP: u64 = 1_000_000;

/// How conjugator tuples are enumerated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SigmaSearch {
    /// Every tuple `(g_2, …, g_n)` in `G^(n-1)`.
    Exhaustive,
    /// One conjugator per distinct conjugate of each `H_k`.
    ConjugacyClasses,
}

#[derive(Clone, Debug)]
pub struct RankOptions {
    pub sigma_search: SigmaSearch,
    pub tuple_cap: u64,
    pub closure_cap: u64,
    pub search_budget: u64,
}

impl Default for RankOptions {
    fn default() -> Self {
        RankOptions {
            sigma_search: SigmaSearch::ConjugacyClasses,
            tuple_cap: DEFAULT_TUPLE_CAP,
            closure_cap: DEFAULT_PRODUCT_CAP,
            search_budget: DEFAULT_SEARCH_BUDGET,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaMinResult {
    pub value: usize,
    /// `g_1, …, g_n` with `g_1` the identity.
    pub conjugators: Vec<GroupElement>,
    /// A set `X` of size `value` completing the conjugated union to `G`.
    pub complement: GroupSubset,
}

/// Reusable `σ_min` search that remembers relative ranks by union.
pub struct SigmaMinSearch<'g> {
    group: &'g FiniteGroup,
    memo: HashMap<FixedBitSet, RelativeRank>,
}

impl<'g> SigmaMinSearch<'g> {
    pub fn new(group: &'g FiniteGroup) -> Self {
        SigmaMinSearch {
            group,
            memo: HashMap::new(),
        }
    }

    fn relative_rank(&mut self, union: &FixedBitSet) -> &RelativeRank {
        let group = self.group;
        self.memo
            .entry(union.clone())
            .or_insert_with(|| group.relative_rank(&GroupSubset::from_bits(union.clone(), false)))
    }

    /// Minimum of `rank(G : ∪ g_k H_k g_k^-1)` with `g_1` fixed to the
    /// identity; ties go to the first tuple in lexicographic order.
    pub fn run(&mut self, subgroups: &[GroupSubset], mode: SigmaSearch, tuple_cap: u64) -> Result<SigmaMinResult> {
        let g = self.group;
        if subgroups.is_empty() {
            return Err(Error::Usage("σ_min needs at least one subgroup".into()));
        }
        // Per position: the candidate conjugators and the conjugated sets.
        let mut options: Vec<Vec<(GroupElement, FixedBitSet)>> = Vec::with_capacity(subgroups.len());
        options.push(vec![(g.identity(), subgroups[0].bits().clone())]);
        for h in &subgroups[1..] {
            let mut list: Vec<(GroupElement, FixedBitSet)> = Vec::new();
            let mut seen = HashSet::new();
            for x in g.elements() {
                let bits = g.conjugate_subset(h, x).bits().clone();
                match mode {
                    SigmaSearch::Exhaustive => list.push((x, bits)),
                    SigmaSearch::ConjugacyClasses => {
                        if seen.insert(bits.clone()) {
                            list.push((x, bits));
                        }
                    }
                }
            }
            options.push(list);
        }
        let tuples = options
            .iter()
            .try_fold(1u64, |acc, o| acc.checked_mul(o.len() as u64))
            .unwrap_or(u64::MAX);
        if tuples > tuple_cap {
            return Err(Error::budget("σ_min conjugator tuples", tuple_cap));
        }

        let mut best: Option<SigmaMinResult> = None;
        let mut digits = vec![0usize; options.len()];
        loop {
            let mut union = FixedBitSet::with_capacity(g.order());
            for (pos, &d) in digits.iter().enumerate() {
                union.union_with(&options[pos][d].1);
            }
            let rr = self.relative_rank(&union);
            if best.as_ref().is_none_or(|b| rr.value < b.value) {
                best = Some(SigmaMinResult {
                    value: rr.value,
                    conjugators: digits.iter().enumerate().map(|(pos, &d)| options[pos][d].0).collect(),
                    complement: rr.witness.clone(),
                });
                if rr.value == 0 {
                    break;
                }
            }
            // Odometer, last position fastest.
            let mut pos = options.len();
            loop {
                if pos == 0 {
                    return Ok(best.expect("at least one tuple"));
                }
                pos -= 1;
                digits[pos] += 1;
                if digits[pos] < options[pos].len() {
                    break;
                }
                digits[pos] = 0;
            }
        }
        Ok(best.expect("at least one tuple"))
    }
}

pub fn sigma_min(group: &FiniteGroup, subgroups: &[GroupSubset]) -> Result<SigmaMinResult> {
    sigma_min_with(group, subgroups, SigmaSearch::ConjugacyClasses, DEFAULT_TUPLE_CAP)
}

pub fn sigma_min_with(
    group: &FiniteGroup,
    subgroups: &[GroupSubset],
    mode: SigmaSearch,
    tuple_cap: u64,
) -> Result<SigmaMinResult> {
    SigmaMinSearch::new(group).run(subgroups, mode, tuple_cap)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankCase {
    ZeroMatrix,
    General,
}

impl fmt::Display for RankCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RankCase::ZeroMatrix => "zero-matrix",
            RankCase::General => "general",
        })
    }
}

/// The quantities entering the rank formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Ingredients {
    /// `|I \ I'|`
    pub i_connected: usize,
    /// `|Λ \ Λ'|`
    pub lambda_connected: usize,
    pub n: usize,
    pub sigma_min: usize,
    pub isolated_i: usize,
    pub isolated_lambda: usize,
}

#[derive(Clone, Debug)]
pub struct RankReport {
    pub value: usize,
    pub case: RankCase,
    pub ingredients: Ingredients,
    pub sigma: Option<SigmaMinResult>,
    /// Filled in by callers that also build a generating set.
    pub witness: Vec<RmsElement>,
}

impl RankReport {
    /// `rank=<v> n=<n> sigma_min=<s> isolated_I=<a> isolated_L=<b>`
    pub fn machine_line(&self) -> String {
        let g = &self.ingredients;
        format!(
            "rank={} n={} sigma_min={} isolated_I={} isolated_L={}",
            self.value, g.n, g.sigma_min, g.isolated_i, g.isolated_lambda
        )
    }
}

pub fn rank_rms(s: &ReesMatrixSemigroup) -> Result<RankReport> {
    rank_rms_with(s, &RankOptions::default())
}

pub fn rank_rms_with(s: &ReesMatrixSemigroup, opts: &RankOptions) -> Result<RankReport> {
    if s.matrix().is_zero() {
        return Ok(zero_matrix_report(s));
    }
    let gnf = graham_normal_form(s)?;
    rank_from_normal_form(&gnf, opts)
}

fn zero_matrix_report(s: &ReesMatrixSemigroup) -> RankReport {
    RankReport {
        value: s.group().order() * s.i_count() * s.lambda_count(),
        case: RankCase::ZeroMatrix,
        ingredients: Ingredients {
            i_connected: 0,
            lambda_connected: 0,
            n: 0,
            sigma_min: 0,
            isolated_i: s.i_count(),
            isolated_lambda: s.lambda_count(),
        },
        sigma: None,
        witness: Vec::new(),
    }
}

/// The rank formula evaluated on a normal form (any spanning forest).
pub fn rank_from_normal_form(gnf: &GrahamNormalForm, opts: &RankOptions) -> Result<RankReport> {
    let s = &gnf.normalized;
    if gnf.blocks.is_empty() {
        return Ok(zero_matrix_report(s));
    }
    let sigma = SigmaMinSearch::new(s.group()).run(&gnf.subgroups(), opts.sigma_search, opts.tuple_cap)?;
    let d = &gnf.decomposition;
    let ingredients = Ingredients {
        i_connected: s.i_count() - d.isolated_i.len(),
        lambda_connected: s.lambda_count() - d.isolated_lambda.len(),
        n: gnf.blocks.len(),
        sigma_min: sigma.value,
        isolated_i: d.isolated_i.len(),
        isolated_lambda: d.isolated_lambda.len(),
    };
    let value = ingredients
        .i_connected
        .max(ingredients.lambda_connected)
        .max(sigma.value + ingredients.n - 1)
        + ingredients.isolated_i
        + ingredients.isolated_lambda;
    Ok(RankReport {
        value,
        case: RankCase::General,
        ingredients,
        sigma: Some(sigma),
        witness: Vec::new(),
    })
}

/// Rank of a semigroup generated by a regular maximal `J`-class with `i`
/// `R`-classes, `j` `L`-classes and maximal subgroup `h`, when `h` has rank
/// at most two.
pub fn rank_via_unique_max_jclass(
    i: usize,
    j: usize,
    h: &FiniteGroup,
    one_idempotent_per_class: bool,
) -> Result<usize> {
    let base = i.max(j);
    match h.rank().value {
        0 | 1 => Ok(base),
        2 if i == j && one_idempotent_per_class => Ok(base + 1),
        2 => Ok(base),
        r => Err(Error::Unsupported(format!(
            "maximal subgroup of rank {r}; only ranks up to 2 are covered, use the general rank computation"
        ))),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum ArcKind {
    Extra,
    Closing,
    ExcessI,
    Pair,
    ExcessLambda,
    Cycle(usize),
}

/// A generator `(i, ·, λ)` of the regular part, seen as an arc `i -> λ`.
#[derive(Clone, Copy, Debug)]
struct GenArc {
    i: usize,
    lambda: usize,
    kind: ArcKind,
}

pub fn minimal_generating_set(s: &ReesMatrixSemigroup) -> Result<Vec<RmsElement>> {
    minimal_generating_set_with(s, &RankOptions::default())
}

/// A generating set of size `rank_rms(s)`, checked by closure.
///
/// In normal-form coordinates a set of non-zero elements of the regular
/// part is read as arcs `i -> λ` added to the matrix arcs `λ -> j`; it
/// generates the regular part exactly when this digraph is strongly
/// connected and its closed walks carry every element of `G`. The arcs are
/// a cycle through a maximum matching of each spanning tree, one arc per
/// leftover row or column, and extra arcs up to `σ_min + n - 1`; the
/// `σ_min` complement elements are placed on some of these arcs and the
/// others carry the block conjugators only. Isolated rows and columns are
/// reached through one fixed connected row and column.
pub fn minimal_generating_set_with(s: &ReesMatrixSemigroup, opts: &RankOptions) -> Result<Vec<RmsElement>> {
    let target: Vec<RmsElement> = s.enumerate_elements(crate::rees::DEFAULT_ELEMENT_CAP)?.collect();
    if s.matrix().is_zero() {
        return Ok(target.into_iter().filter(|x| *x != RmsElement::Zero).collect());
    }
    let gnf = graham_normal_form(s)?;
    let report = rank_from_normal_form(&gnf, opts)?;
    let sigma = report.sigma.as_ref().expect("general case");
    let verify = |set: &[RmsElement]| -> Result<bool> { oracle::verify_generates(s, &target, set, opts.closure_cap) };

    if let Some(set) = construct(&gnf, sigma, report.value)? {
        if set.len() == report.value && verify(&set)? {
            return Ok(set);
        }
    }

    // Exhaustive fallback among sets meeting every row and column.
    let abstract_s = AbstractSemigroup::from_elements(s, target.clone())?;
    let exact = oracle::exact_rank(&abstract_s, Some(report.value), opts.search_budget)?;
    if exact.value != report.value {
        return Err(Error::Internal(format!(
            "rank formula gives {} but exhaustive search found {}",
            report.value, exact.value
        )));
    }
    let set: Vec<RmsElement> = exact.witness.iter().map(|&id| *abstract_s.element(id)).collect();
    if !verify(&set)? {
        return Err(Error::Internal("fallback witness does not generate".into()));
    }
    Ok(set)
}

/// Maximum matching of each spanning tree, leaves first; pairs `(λ, j)`
/// ordered by block then by `λ`.
fn tree_matching(gnf: &GrahamNormalForm) -> Vec<Vec<(usize, usize)>> {
    gnf.forest
        .trees
        .iter()
        .map(|tree| {
            let mut matched: HashSet<Vertex> = HashSet::new();
            let mut pairs = Vec::new();
            for v in tree.order.iter().rev() {
                let Some(&p) = tree.parent.get(v) else { continue };
                if !matched.contains(v) && !matched.contains(&p) {
                    matched.insert(*v);
                    matched.insert(p);
                    pairs.push(match (*v, p) {
                        (Vertex::Lambda(l), Vertex::I(i)) | (Vertex::I(i), Vertex::Lambda(l)) => (l, i),
                        _ => unreachable!("bipartite"),
                    });
                }
            }
            pairs.sort_unstable();
            pairs
        })
        .collect()
}

fn construct(gnf: &GrahamNormalForm, sigma: &SigmaMinResult, rank: usize) -> Result<Option<Vec<RmsElement>>> {
    let q = &gnf.normalized;
    let g = q.group();
    let d = &gnf.decomposition;
    let matching = tree_matching(gnf);
    let pairs: Vec<(usize, usize)> = matching.iter().flatten().copied().collect();
    let m = pairs.len();

    let matched_i: HashSet<usize> = pairs.iter().map(|p| p.1).collect();
    let matched_l: HashSet<usize> = pairs.iter().map(|p| p.0).collect();
    let free_i: Vec<usize> = gnf
        .blocks
        .iter()
        .flat_map(|b| b.is.iter())
        .copied()
        .filter(|i| !matched_i.contains(i))
        .collect();
    let free_l: Vec<usize> = gnf
        .blocks
        .iter()
        .flat_map(|b| b.lambdas.iter())
        .copied()
        .filter(|l| !matched_l.contains(l))
        .collect();

    let mut arcs = Vec::new();
    for t in 0..m {
        let kind = if t + 1 == m {
            ArcKind::Closing
        } else {
            ArcKind::Cycle(t)
        };
        arcs.push(GenArc {
            i: pairs[t].1,
            lambda: pairs[(t + 1) % m].0,
            kind,
        });
    }
    for (&i, &lambda) in free_i.iter().zip(&free_l) {
        arcs.push(GenArc {
            i,
            lambda,
            kind: ArcKind::Pair,
        });
    }
    for &i in free_i.iter().skip(free_l.len()) {
        arcs.push(GenArc {
            i,
            lambda: pairs[0].0,
            kind: ArcKind::ExcessI,
        });
    }
    for &lambda in free_l.iter().skip(free_i.len()) {
        arcs.push(GenArc {
            i: pairs[0].1,
            lambda,
            kind: ArcKind::ExcessLambda,
        });
    }
    let regular_target = rank - d.isolated_i.len() - d.isolated_lambda.len();
    let mut t = 0;
    while arcs.len() < regular_target {
        arcs.push(GenArc {
            i: pairs[t % m].1,
            lambda: pairs[(t + 1) % m].0,
            kind: ArcKind::Extra,
        });
        t += 1;
    }
    if arcs.len() != regular_target {
        return Ok(None);
    }

    let rank_key = |k: ArcKind| match k {
        ArcKind::Extra => (0, 0),
        ArcKind::Closing => (1, 0),
        ArcKind::ExcessI => (2, 0),
        ArcKind::Pair => (3, 0),
        ArcKind::ExcessLambda => (4, 0),
        ArcKind::Cycle(t) => (5, usize::MAX - t),
    };
    let mut preference: Vec<usize> = (0..arcs.len()).collect();
    preference.sort_by_key(|&a| rank_key(arcs[a].kind));

    let block_of_i: HashMap<usize, usize> = gnf
        .blocks
        .iter()
        .enumerate()
        .flat_map(|(k, b)| b.is.iter().map(move |&i| (i, k)))
        .collect();
    let block_of_l: HashMap<usize, usize> = gnf
        .blocks
        .iter()
        .enumerate()
        .flat_map(|(k, b)| b.lambdas.iter().map(move |&l| (l, k)))
        .collect();
    let xs: Vec<GroupElement> = sigma.complement.iter().collect();
    let conj = &sigma.conjugators;

    const MAX_PLACEMENTS: usize = 20_000;
    let mut tried = 0;
    let mut choice: Vec<usize> = (0..xs.len()).collect();
    if xs.len() > arcs.len() {
        return Ok(None);
    }
    loop {
        tried += 1;
        let mut labels = vec![g.identity(); arcs.len()];
        for (slot, &x) in choice.iter().zip(&xs) {
            labels[preference[*slot]] = x;
        }
        let elements: Vec<RmsElement> = arcs
            .iter()
            .zip(&labels)
            .map(|(a, &t)| {
                let ga = conj[block_of_i[&a.i]];
                let gb = conj[block_of_l[&a.lambda]];
                RmsElement::triple(a.i, g.multiply(g.multiply(g.inverse(ga), t), gb), a.lambda)
            })
            .collect();
        let distinct: HashSet<&RmsElement> = elements.iter().collect();
        if distinct.len() == elements.len() && regular_part_generated(gnf, &elements, pairs[0].0) {
            let mut out = elements;
            let (i_star, l_star) = (pairs[0].1, pairs[0].0);
            for &l in &d.isolated_lambda {
                out.push(RmsElement::triple(i_star, g.identity(), l));
            }
            for &i in &d.isolated_i {
                out.push(RmsElement::triple(i, g.identity(), l_star));
            }
            let mut out: Vec<RmsElement> = out.iter().map(|x| gnf.witness.unmap(g, x)).collect();
            out.sort();
            return Ok(Some(out));
        }
        if tried >= MAX_PLACEMENTS || !next_combination(&mut choice, arcs.len()) {
            return Ok(None);
        }
    }
}

fn next_combination(choice: &mut [usize], n: usize) -> bool {
    let k = choice.len();
    for pos in (0..k).rev() {
        if choice[pos] < n - k + pos {
            choice[pos] += 1;
            for later in pos + 1..k {
                choice[later] = choice[later - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Whether the given elements (normal-form coordinates) generate every
/// `(i, g, λ)` with `i`, `λ` connected: the arc digraph must be strongly
/// connected and its closed walks must carry all of `G`.
fn regular_part_generated(gnf: &GrahamNormalForm, elements: &[RmsElement], base: usize) -> bool {
    let q = &gnf.normalized;
    let g = q.group();
    // Arcs as (from, to, label).
    let mut arcs: Vec<(Vertex, Vertex, GroupElement)> = Vec::new();
    for x in elements {
        if let RmsElement::Triple { i, g: label, lambda } = *x {
            arcs.push((Vertex::I(i), Vertex::Lambda(lambda), label));
        }
    }
    for (l, i, label) in q.matrix().nonzero() {
        arcs.push((Vertex::Lambda(l), Vertex::I(i), label));
    }
    let vertices: Vec<Vertex> = gnf
        .blocks
        .iter()
        .flat_map(|b| {
            b.is.iter()
                .map(|&i| Vertex::I(i))
                .chain(b.lambdas.iter().map(|&l| Vertex::Lambda(l)))
        })
        .collect();
    let mut out: HashMap<Vertex, Vec<usize>> = HashMap::new();
    let mut inc: HashMap<Vertex, Vec<usize>> = HashMap::new();
    for (k, a) in arcs.iter().enumerate() {
        out.entry(a.0).or_default().push(k);
        inc.entry(a.1).or_default().push(k);
    }
    let root = Vertex::Lambda(base);
    let mut potential: HashMap<Vertex, GroupElement> = HashMap::from([(root, g.identity())]);
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for &k in out.get(&v).map(Vec::as_slice).unwrap_or(&[]) {
            let (_, w, label) = arcs[k];
            if !potential.contains_key(&w) {
                potential.insert(w, g.multiply(potential[&v], label));
                queue.push_back(w);
            }
        }
    }
    let mut back: HashSet<Vertex> = HashSet::from([root]);
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for &k in inc.get(&v).map(Vec::as_slice).unwrap_or(&[]) {
            if back.insert(arcs[k].0) {
                queue.push_back(arcs[k].0);
            }
        }
    }
    if vertices.iter().any(|v| !potential.contains_key(v) || !back.contains(v)) {
        return false;
    }
    let gens: Vec<GroupElement> = arcs
        .iter()
        .map(|&(u, v, label)| g.multiply(g.multiply(potential[&u], label), g.inverse(potential[&v])))
        .collect();
    g.closure_bits(&gens).count_ones(..) == g.order()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rees::StructureMatrix;
    use std::sync::Arc;

    fn rms(group: FiniteGroup, rows: Vec<Vec<Option<usize>>>) -> ReesMatrixSemigroup {
        let rows = rows
            .into_iter()
            .map(|r| r.into_iter().map(|e| e.map(GroupElement::new)).collect())
            .collect();
        ReesMatrixSemigroup::new(Arc::new(group), StructureMatrix::from_rows(rows).unwrap()).unwrap()
    }

    fn check_witness(s: &ReesMatrixSemigroup) -> usize {
        let report = rank_rms(s).unwrap();
        let gens = minimal_generating_set(s).unwrap();
        assert_eq!(gens.len(), report.value);
        let all: Vec<_> = s.elements().collect();
        assert!(oracle::verify_generates(s, &all, &gens, DEFAULT_PRODUCT_CAP).unwrap());
        report.value
    }

    #[test]
    fn sigma_min_basic_cases() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert_eq!(sigma_min(&s3, &[s3.whole()]).unwrap().value, 0);
        let trivial = s3.subgroup_closure(&s3.empty_subset());
        assert_eq!(
            sigma_min(&s3, &[trivial.clone(), trivial.clone(), trivial])
                .unwrap()
                .value,
            2
        );
        let a3 = s3.subgroup_closure(&s3.subset([s3.parse_literal("(1 2 3)").unwrap()]));
        let r = sigma_min(&s3, &[a3]).unwrap();
        assert_eq!(r.value, 1);
        assert_eq!(r.conjugators, vec![s3.identity()]);
        assert!(sigma_min(&s3, &[]).is_err());
    }

    #[test]
    fn sigma_min_two_transposition_subgroups() {
        // Two conjugates of <(1 2)> that differ generate S_3.
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let h = s3.subgroup_closure(&s3.subset([s3.parse_literal("(1 2)").unwrap()]));
        for mode in [SigmaSearch::Exhaustive, SigmaSearch::ConjugacyClasses] {
            let r = sigma_min_with(&s3, &[h.clone(), h.clone()], mode, DEFAULT_TUPLE_CAP).unwrap();
            assert_eq!(r.value, 0);
        }
        assert!(matches!(
            sigma_min_with(&s3, &[h.clone(), h.clone(), h], SigmaSearch::Exhaustive, 10),
            Err(Error::Budget { .. })
        ));
    }

    #[test]
    fn zero_matrix_rank() {
        let s = rms(FiniteGroup::cyclic(2).unwrap(), vec![vec![None, None]]);
        let r = rank_rms(&s).unwrap();
        assert_eq!(r.value, 4);
        assert_eq!(r.case, RankCase::ZeroMatrix);
        assert_eq!(check_witness(&s), 4);
    }

    #[test]
    fn brandt_over_s3() {
        let g = FiniteGroup::symmetric(3).unwrap();
        let s = rms(
            g,
            (0..4)
                .map(|l| (0..4).map(|i| (l == i).then_some(0)).collect())
                .collect(),
        );
        let r = rank_rms(&s).unwrap();
        assert_eq!(r.value, 5);
        assert_eq!(r.machine_line(), "rank=5 n=4 sigma_min=2 isolated_I=0 isolated_L=0");
        assert_eq!(check_witness(&s), 5);
    }

    #[test]
    fn idempotent_generated_three_by_five() {
        // Entries (1 2) and (1 2 3) generate S_3; Λ has 3 rows, I has 5 columns.
        let g = FiniteGroup::symmetric(3).unwrap();
        let t = g.parse_literal("(1 2)").unwrap().index();
        let c = g.parse_literal("(1 2 3)").unwrap().index();
        let s = rms(
            g,
            vec![
                vec![Some(0), Some(0), Some(0), Some(0), Some(0)],
                vec![Some(t), None, Some(0), None, Some(0)],
                vec![Some(c), Some(0), None, Some(0), None],
            ],
        );
        assert_eq!(rank_rms(&s).unwrap().value, 5);
        assert_eq!(check_witness(&s), 5);
    }

    #[test]
    fn non_regular_matrix_counts_isolated_vertices() {
        let s = rms(
            FiniteGroup::cyclic(3).unwrap(),
            vec![vec![Some(1), None, None], vec![None, None, None]],
        );
        let r = rank_rms(&s).unwrap();
        // One block (1×1, H = C_3): max(1, 1, 0 + 0) + 2 + 1.
        assert_eq!(r.value, 4);
        assert_eq!(r.ingredients.isolated_i, 2);
        assert_eq!(check_witness(&s), 4);
    }

    #[test]
    fn unique_max_jclass_cases() {
        let s2 = FiniteGroup::symmetric(2).unwrap();
        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert_eq!(rank_via_unique_max_jclass(7, 6, &s2, false).unwrap(), 7);
        assert_eq!(rank_via_unique_max_jclass(4, 4, &s3, true).unwrap(), 5);
        assert_eq!(rank_via_unique_max_jclass(3, 5, &s3, false).unwrap(), 5);
        let v = FiniteGroup::from_table(
            &[vec![0, 1, 2, 3], vec![1, 0, 3, 2], vec![2, 3, 0, 1], vec![3, 2, 1, 0]],
            "V4",
        )
        .unwrap();
        assert_eq!(rank_via_unique_max_jclass(2, 2, &v, true).unwrap(), 3);
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let c2_cubed = {
            // C_2^3 has rank 3.
            let table: Vec<Vec<usize>> = (0..8).map(|a| (0..8).map(|b| a ^ b).collect()).collect();
            FiniteGroup::from_table(&table, "C2^3").unwrap()
        };
        assert_eq!(rank_via_unique_max_jclass(1, 1, &c2, true).unwrap(), 1);
        assert!(matches!(
            rank_via_unique_max_jclass(2, 2, &c2_cubed, true),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn combinations_in_lex_order() {
        let mut c = vec![0, 1];
        let mut seen = vec![c.clone()];
        while next_combination(&mut c, 4) {
            seen.push(c.clone());
        }
        assert_eq!(seen.len(), 6);
        assert_eq!(seen.last().unwrap(), &vec![2, 3]);
        let mut empty: Vec<usize> = Vec::new();
        assert!(!next_combination(&mut empty, 3));
    }
}
