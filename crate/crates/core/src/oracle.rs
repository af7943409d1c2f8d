//! Brute-force ground truth for small semigroups.
//!
//! Everything here works from explicit element lists and multiplication
//! tables: closure under products, Green's relations from strongly connected
//! components of Cayley graphs, principal factors, their identification with
//! Rees matrix semigroups, and exact rank by pruned exhaustive search.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt::Debug;
use std::hash::Hash;
use std::sync::Arc;

use fixedbitset::FixedBitSet;
use petgraph::algo::tarjan_scc;
use petgraph::graph::{DiGraph, NodeIndex};

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupElement};
use crate::rank::{minimal_generating_set, rank_rms};
use crate::rees::{ReesMatrixSemigroup, RmsElement, StructureMatrix};

/// Default limit on the number of products formed by [`closure`].
pub const DEFAULT_PRODUCT_CAP: u64 = 2_000_000;

/// Largest semigroup for which a full multiplication table is built.
pub const DEFAULT_TABLE_CAP: usize = 4096;

/// Default limit on search nodes visited by [`exact_rank`].
pub const DEFAULT_SEARCH_BUDGET: u64 = 20_000_000;

/// A set with an associative binary operation and possibly a zero.
///
/// When a zero is present it is treated as free: it belongs to every
/// generated subsemigroup without being counted as a generator.
pub trait Magma {
    type Elem: Clone + Eq + Hash + Ord + Debug;

    fn multiply(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn zero(&self) -> Option<Self::Elem> {
        None
    }
}

impl Magma for ReesMatrixSemigroup {
    type Elem = RmsElement;

    fn multiply(&self, a: &RmsElement, b: &RmsElement) -> RmsElement {
        ReesMatrixSemigroup::multiply(self, a, b)
    }

    fn zero(&self) -> Option<RmsElement> {
        Some(RmsElement::Zero)
    }
}

impl Magma for FiniteGroup {
    type Elem = GroupElement;

    fn multiply(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        FiniteGroup::multiply(self, *a, *b)
    }
}

/// The subsemigroup generated by `gens`, sorted.
pub fn closure<M: Magma>(m: &M, gens: &[M::Elem], cap: u64) -> Result<Vec<M::Elem>> {
    let mut seen: HashSet<M::Elem> = HashSet::new();
    let mut queue = VecDeque::new();
    let mut gen_list: Vec<M::Elem> = Vec::new();
    for g in gens.iter().chain(m.zero().as_ref()) {
        if seen.insert(g.clone()) {
            queue.push_back(g.clone());
        }
    }
    for g in gens {
        if !gen_list.contains(g) {
            gen_list.push(g.clone());
        }
    }
    let mut products = 0u64;
    while let Some(x) = queue.pop_front() {
        for g in &gen_list {
            products += 1;
            if products > cap {
                return Err(Error::budget("closure products", cap));
            }
            let y = m.multiply(&x, g);
            if !seen.contains(&y) {
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    let mut out: Vec<M::Elem> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

/// Whether `x` generates exactly the sorted element list `target`.
pub fn verify_generates<M: Magma>(m: &M, target: &[M::Elem], x: &[M::Elem], cap: u64) -> Result<bool> {
    Ok(closure(m, x, cap)? == target)
}

/// A finite semigroup given by canonical element ids and a full product
/// table. Ids follow the `Ord` order of the elements.
#[derive(Clone, Debug)]
pub struct AbstractSemigroup<E> {
    elements: Vec<E>,
    index: HashMap<E, usize>,
    table: Vec<u32>,
    zero: Option<usize>,
    generators: Vec<usize>,
}

impl<E: Clone + Eq + Hash + Ord + Debug> AbstractSemigroup<E> {
    /// Closure of `gens` with its multiplication table.
    pub fn generated_by<M: Magma<Elem = E>>(m: &M, gens: &[E], cap: u64) -> Result<Self> {
        let elements = closure(m, gens, cap)?;
        Self::with_generators(m, elements, gens)
    }

    /// Table of an already closed element list; every element counts as a
    /// generator for the Cayley graphs.
    pub fn from_elements<M: Magma<Elem = E>>(m: &M, elements: Vec<E>) -> Result<Self> {
        let gens = elements.clone();
        Self::with_generators(m, elements, &gens)
    }

    fn with_generators<M: Magma<Elem = E>>(m: &M, mut elements: Vec<E>, gens: &[E]) -> Result<Self> {
        elements.sort();
        elements.dedup();
        let n = elements.len();
        if n > DEFAULT_TABLE_CAP {
            return Err(Error::Size(format!(
                "semigroup with {n} elements exceeds the table cap {DEFAULT_TABLE_CAP}"
            )));
        }
        let index: HashMap<E, usize> = elements.iter().cloned().enumerate().map(|(k, e)| (e, k)).collect();
        let mut table = Vec::with_capacity(n * n);
        for a in &elements {
            for b in &elements {
                let c = m.multiply(a, b);
                let id = *index
                    .get(&c)
                    .ok_or_else(|| Error::Usage(format!("element list is not closed: {c:?}")))?;
                table.push(id as u32);
            }
        }
        let zero = m.zero().and_then(|z| index.get(&z).copied());
        let mut generators: Vec<usize> = gens.iter().filter_map(|g| index.get(g).copied()).collect();
        generators.sort_unstable();
        generators.dedup();
        Ok(AbstractSemigroup {
            elements,
            index,
            table,
            zero,
            generators,
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn element(&self, id: usize) -> &E {
        &self.elements[id]
    }

    pub fn id_of(&self, e: &E) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn product(&self, a: usize, b: usize) -> usize {
        self.table[a * self.elements.len() + b] as usize
    }

    pub fn zero(&self) -> Option<usize> {
        self.zero
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn is_idempotent(&self, a: usize) -> bool {
        self.product(a, a) == a
    }

    /// Exhaustive associativity check.
    pub fn is_associative(&self) -> bool {
        let n = self.len();
        (0..n).all(|a| {
            (0..n).all(|b| {
                let ab = self.product(a, b);
                (0..n).all(|c| self.product(ab, c) == self.product(a, self.product(b, c)))
            })
        })
    }

    /// Ids of the subsemigroup generated by `ids` (zero included for free).
    pub fn generated(&self, ids: &[usize]) -> FixedBitSet {
        let mut seen = FixedBitSet::with_capacity(self.len());
        let mut stack = Vec::new();
        for &x in ids.iter().chain(self.zero.as_ref()) {
            if !seen.contains(x) {
                seen.insert(x);
                stack.push(x);
            }
        }
        while let Some(x) = stack.pop() {
            let row = &self.table[x * self.len()..(x + 1) * self.len()];
            for &g in ids {
                let y = row[g] as usize;
                if !seen.contains(y) {
                    seen.insert(y);
                    stack.push(y);
                }
            }
        }
        seen
    }

    pub fn generates(&self, ids: &[usize]) -> bool {
        self.generated(ids).count_ones(..) == self.len()
    }
}

/// Facts about one `J`-class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JClassInfo {
    pub members: Vec<usize>,
    /// Indices into [`GreenStructure::r_classes`].
    pub r_classes: Vec<usize>,
    /// Indices into [`GreenStructure::l_classes`].
    pub l_classes: Vec<usize>,
    pub idempotents: Vec<usize>,
    pub regular: bool,
    pub maximal: bool,
    /// The class of a free zero.
    pub is_zero: bool,
}

/// Green's `R`, `L` and `J` relations. Classes are numbered by their
/// smallest member.
#[derive(Clone, Debug)]
pub struct GreenStructure {
    pub r_of: Vec<usize>,
    pub l_of: Vec<usize>,
    pub j_of: Vec<usize>,
    pub r_classes: Vec<Vec<usize>>,
    pub l_classes: Vec<Vec<usize>>,
    pub j_classes: Vec<JClassInfo>,
    /// Idempotent count per `R`-class.
    pub r_idempotents: Vec<usize>,
    /// Idempotent count per `L`-class.
    pub l_idempotents: Vec<usize>,
}

impl GreenStructure {
    pub fn maximal_classes(&self) -> impl Iterator<Item = (usize, &JClassInfo)> {
        self.j_classes
            .iter()
            .enumerate()
            .filter(|(_, j)| j.maximal && !j.is_zero)
    }
}

fn classes_from_scc(n: usize, sccs: Vec<Vec<NodeIndex>>) -> (Vec<usize>, Vec<Vec<usize>>) {
    let mut classes: Vec<Vec<usize>> = sccs
        .into_iter()
        .map(|c| {
            let mut v: Vec<usize> = c.into_iter().map(|x| x.index()).collect();
            v.sort_unstable();
            v
        })
        .collect();
    classes.sort_by_key(|c| c[0]);
    let mut of = vec![0; n];
    for (k, c) in classes.iter().enumerate() {
        for &x in c {
            of[x] = k;
        }
    }
    (of, classes)
}

/// `R`, `L` and `J` from the right, left and two-sided Cayley graphs over
/// the semigroup's generators. Each vertex reaches itself, which plays the
/// role of the adjoined identity.
pub fn green_structure<E: Clone + Eq + Hash + Ord + Debug>(s: &AbstractSemigroup<E>) -> GreenStructure {
    let n = s.len();
    let mut right: DiGraph<(), ()> = DiGraph::with_capacity(n, n * s.generators().len());
    let mut left: DiGraph<(), ()> = DiGraph::with_capacity(n, n * s.generators().len());
    let mut both: DiGraph<(), ()> = DiGraph::with_capacity(n, 2 * n * s.generators().len());
    for _ in 0..n {
        right.add_node(());
        left.add_node(());
        both.add_node(());
    }
    for x in 0..n {
        for &g in s.generators() {
            let xg = NodeIndex::new(s.product(x, g));
            let gx = NodeIndex::new(s.product(g, x));
            let xi = NodeIndex::new(x);
            right.add_edge(xi, xg, ());
            left.add_edge(xi, gx, ());
            both.add_edge(xi, xg, ());
            both.add_edge(xi, gx, ());
        }
    }
    let (r_of, r_classes) = classes_from_scc(n, tarjan_scc(&right));
    let (l_of, l_classes) = classes_from_scc(n, tarjan_scc(&left));
    let (j_of, j_members) = classes_from_scc(n, tarjan_scc(&both));

    let mut has_incoming = vec![false; j_members.len()];
    for e in both.raw_edges() {
        let (a, b) = (j_of[e.source().index()], j_of[e.target().index()]);
        if a != b {
            has_incoming[b] = true;
        }
    }
    let mut r_idempotents = vec![0; r_classes.len()];
    let mut l_idempotents = vec![0; l_classes.len()];
    for x in (0..n).filter(|&x| s.is_idempotent(x)) {
        r_idempotents[r_of[x]] += 1;
        l_idempotents[l_of[x]] += 1;
    }
    let j_classes = j_members
        .into_iter()
        .enumerate()
        .map(|(k, members)| {
            let mut rs: Vec<usize> = members.iter().map(|&x| r_of[x]).collect();
            rs.sort_unstable();
            rs.dedup();
            let mut ls: Vec<usize> = members.iter().map(|&x| l_of[x]).collect();
            ls.sort_unstable();
            ls.dedup();
            let idempotents: Vec<usize> = members.iter().copied().filter(|&x| s.is_idempotent(x)).collect();
            JClassInfo {
                is_zero: members.len() == 1 && Some(members[0]) == s.zero(),
                r_classes: rs,
                l_classes: ls,
                regular: !idempotents.is_empty(),
                idempotents,
                maximal: !has_incoming[k],
                members,
            }
        })
        .collect();
    GreenStructure {
        r_of,
        l_of,
        j_of,
        r_classes,
        l_classes,
        j_classes,
        r_idempotents,
        l_idempotents,
    }
}

/// `J ∪ {0}` with `s·t` kept when `s, t, st ∈ J` and sent to zero otherwise.
#[derive(Clone, Debug)]
pub struct PrincipalFactor {
    pub j_class: usize,
    /// Semigroup ids of the members of `J`, sorted; local index = position.
    pub members: Vec<usize>,
    table: Vec<Option<u32>>,
}

impl PrincipalFactor {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Product of two local indices, `None` for zero.
    pub fn product(&self, a: usize, b: usize) -> Option<usize> {
        self.table[a * self.members.len() + b].map(|x| x as usize)
    }

    /// All products are zero.
    pub fn is_null(&self) -> bool {
        self.table.iter().all(Option::is_none)
    }

    pub fn local_index(&self, id: usize) -> Option<usize> {
        self.members.binary_search(&id).ok()
    }
}

impl Magma for PrincipalFactor {
    type Elem = Option<usize>;

    fn multiply(&self, a: &Option<usize>, b: &Option<usize>) -> Option<usize> {
        match (a, b) {
            (Some(a), Some(b)) => self.product(*a, *b),
            _ => None,
        }
    }

    fn zero(&self) -> Option<Option<usize>> {
        Some(None)
    }
}

pub fn principal_factor<E: Clone + Eq + Hash + Ord + Debug>(
    s: &AbstractSemigroup<E>,
    green: &GreenStructure,
    j: usize,
) -> PrincipalFactor {
    let members = green.j_classes[j].members.clone();
    let n = members.len();
    let mut table = Vec::with_capacity(n * n);
    for &a in &members {
        for &b in &members {
            let c = s.product(a, b);
            table.push((green.j_of[c] == j).then(|| members.binary_search(&c).expect("member") as u32));
        }
    }
    PrincipalFactor {
        j_class: j,
        members,
        table,
    }
}

/// A regular principal factor identified with `M0[H; I, Λ; P]` where `I`
/// indexes its `R`-classes, `Λ` its `L`-classes and `H` is the group
/// `H`-class of a chosen idempotent.
#[derive(Clone, Debug)]
pub struct Coordinatization {
    pub rms: ReesMatrixSemigroup,
    /// Image of each local index of the principal factor.
    pub to_rms: Vec<RmsElement>,
    from_rms: HashMap<RmsElement, usize>,
}

impl Coordinatization {
    /// Local index of a non-zero Rees matrix element.
    pub fn local_of(&self, x: &RmsElement) -> Option<usize> {
        self.from_rms.get(x).copied()
    }
}

/// Coordinates for a regular principal factor, checked to be an
/// isomorphism on all pairs; `None` for a null factor.
pub fn coordinatize<E: Clone + Eq + Hash + Ord + Debug>(
    s: &AbstractSemigroup<E>,
    green: &GreenStructure,
    pf: &PrincipalFactor,
) -> Result<Option<Coordinatization>> {
    let info = &green.j_classes[pf.j_class];
    let Some(&e) = info.idempotents.first() else {
        return Ok(None);
    };
    let in_class = |x: usize, r: usize, l: usize| green.r_of[x] == r && green.l_of[x] == l;
    let (re, le) = (green.r_of[e], green.l_of[e]);
    let h_members: Vec<usize> = info.members.iter().copied().filter(|&x| in_class(x, re, le)).collect();
    let h_pos: HashMap<usize, usize> = h_members.iter().enumerate().map(|(k, &x)| (x, k)).collect();
    let h_table: Vec<Vec<usize>> = h_members
        .iter()
        .map(|&a| {
            h_members
                .iter()
                .map(|&b| h_pos.get(&s.product(a, b)).copied())
                .collect::<Option<Vec<usize>>>()
        })
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::Internal("maximal subgroup is not closed".into()))?;
    let group = Arc::new(FiniteGroup::from_table(&h_table, format!("H{}", h_members.len()))?);

    let find = |pred: &dyn Fn(usize) -> bool| (0..s.len()).find(|&x| pred(x));
    let mut left_unit = Vec::new(); // (r_i, s_i) with s_i r_i = e
    for &r in &info.r_classes {
        let ri = info
            .members
            .iter()
            .copied()
            .find(|&x| in_class(x, r, le))
            .ok_or_else(|| Error::Internal("R-class misses the L-class of the idempotent".into()))?;
        let si = if ri == e {
            None
        } else {
            find(&|x| s.product(x, ri) == e)
        };
        if ri != e && si.is_none() {
            return Err(Error::Internal("no left inverse for a row representative".into()));
        }
        left_unit.push((ri, si));
    }
    let mut right_unit = Vec::new(); // (q_λ, t_λ) with q_λ t_λ = e
    for &l in &info.l_classes {
        let ql = info
            .members
            .iter()
            .copied()
            .find(|&x| in_class(x, re, l))
            .ok_or_else(|| Error::Internal("L-class misses the R-class of the idempotent".into()))?;
        let tl = if ql == e {
            None
        } else {
            find(&|x| s.product(ql, x) == e)
        };
        if ql != e && tl.is_none() {
            return Err(Error::Internal("no right inverse for a column representative".into()));
        }
        right_unit.push((ql, tl));
    }

    let mut rows = Vec::with_capacity(info.l_classes.len());
    for &(ql, _) in &right_unit {
        let row = left_unit
            .iter()
            .map(|&(ri, _)| h_pos.get(&s.product(ql, ri)).map(|&k| GroupElement::new(k)))
            .collect();
        rows.push(row);
    }
    let rms = ReesMatrixSemigroup::new(group, StructureMatrix::from_rows(rows)?)?;

    let mut to_rms = Vec::with_capacity(pf.len());
    for &x in &pf.members {
        let i = info.r_classes.binary_search(&green.r_of[x]).expect("row");
        let lambda = info.l_classes.binary_search(&green.l_of[x]).expect("column");
        let mut g = x;
        if let Some(si) = left_unit[i].1 {
            g = s.product(si, g);
        }
        if let Some(tl) = right_unit[lambda].1 {
            g = s.product(g, tl);
        }
        let g = *h_pos
            .get(&g)
            .ok_or_else(|| Error::Internal("coordinate falls outside the maximal subgroup".into()))?;
        to_rms.push(RmsElement::triple(i, GroupElement::new(g), lambda));
    }
    let from_rms: HashMap<RmsElement, usize> = to_rms.iter().cloned().enumerate().map(|(k, x)| (x, k)).collect();
    if from_rms.len() != pf.len() || rms.size() != pf.len() + 1 {
        return Err(Error::Internal("coordinates are not a bijection".into()));
    }
    for a in 0..pf.len() {
        for b in 0..pf.len() {
            let expected = pf.product(a, b).map_or(RmsElement::Zero, |c| to_rms[c]);
            if rms.multiply(&to_rms[a], &to_rms[b]) != expected {
                return Err(Error::Internal("coordinates do not preserve products".into()));
            }
        }
    }
    Ok(Some(Coordinatization { rms, to_rms, from_rms }))
}

/// `Σ rank(J*)` over the maximal non-zero `J`-classes: `|J|` for a null
/// factor, the Rees matrix rank of the coordinatized factor otherwise.
pub fn maximal_jclass_lower_bound<E: Clone + Eq + Hash + Ord + Debug>(s: &AbstractSemigroup<E>) -> Result<usize> {
    let green = green_structure(s);
    let mut total = 0;
    for (j, _) in green.maximal_classes() {
        let pf = principal_factor(s, &green, j);
        total += match coordinatize(s, &green, &pf)? {
            None => pf.len(),
            Some(c) => rank_rms(&c.rms)?.value,
        };
    }
    Ok(total)
}

/// Union of minimal generating sets of the maximal principal factors,
/// as semigroup ids. It generates `S` whenever the maximal classes do.
pub fn maximal_jclass_witness<E: Clone + Eq + Hash + Ord + Debug>(s: &AbstractSemigroup<E>) -> Result<Vec<usize>> {
    let green = green_structure(s);
    let mut out = Vec::new();
    for (j, _) in green.maximal_classes() {
        let pf = principal_factor(s, &green, j);
        match coordinatize(s, &green, &pf)? {
            None => out.extend(pf.members.iter().copied()),
            Some(c) => {
                for x in minimal_generating_set(&c.rms)? {
                    if let Some(local) = c.local_of(&x) {
                        out.push(pf.members[local]);
                    }
                }
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactRank {
    pub value: usize,
    /// Lexicographically first generating set of minimal size, as ids.
    pub witness: Vec<usize>,
    /// The coverage bound the search started from.
    pub lower_bound: usize,
}

/// One maximal regular class whose `R`- and `L`-classes every generating
/// set must meet.
struct CoverBlock {
    rows: Vec<usize>,
    cols: Vec<usize>,
}

struct Search<'a, E> {
    s: &'a AbstractSemigroup<E>,
    candidates: Vec<usize>,
    blocks: Vec<CoverBlock>,
    /// Per id: (block, row slot, col slot) if in a cover block.
    place: Vec<Option<(usize, usize, usize)>>,
    row_hits: Vec<Vec<usize>>,
    col_hits: Vec<Vec<usize>>,
    /// Last candidate position that can still cover each row/col.
    row_last: Vec<Vec<usize>>,
    col_last: Vec<Vec<usize>>,
    chosen: Vec<usize>,
    forced: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl<E: Clone + Eq + Hash + Ord + Debug> Search<'_, E> {
    fn needed(&self) -> usize {
        self.blocks
            .iter()
            .enumerate()
            .map(|(b, _)| {
                let r = self.row_hits[b].iter().filter(|&&c| c == 0).count();
                let c = self.col_hits[b].iter().filter(|&&c| c == 0).count();
                r.max(c)
            })
            .sum()
    }

    fn coverable(&self, next: usize) -> bool {
        (0..self.blocks.len()).all(|b| {
            self.row_hits[b]
                .iter()
                .zip(&self.row_last[b])
                .all(|(&h, &last)| h > 0 || last >= next)
                && self.col_hits[b]
                    .iter()
                    .zip(&self.col_last[b])
                    .all(|(&h, &last)| h > 0 || last >= next)
        })
    }

    fn toggle(&mut self, id: usize, add: bool) {
        if let Some((b, r, c)) = self.place[id] {
            if add {
                self.row_hits[b][r] += 1;
                self.col_hits[b][c] += 1;
            } else {
                self.row_hits[b][r] -= 1;
                self.col_hits[b][c] -= 1;
            }
        }
    }

    fn run(&mut self, k: usize, start: usize) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::budget("exact rank search nodes", self.budget));
        }
        let slots = k - self.chosen.len();
        if self.needed() > slots || !self.coverable(start) {
            return Ok(false);
        }
        if slots == 0 {
            let mut gens = self.forced.clone();
            gens.extend_from_slice(&self.chosen);
            return Ok(self.s.generates(&gens));
        }
        for pos in start..self.candidates.len() {
            if self.candidates.len() - pos < slots {
                break;
            }
            let id = self.candidates[pos];
            self.chosen.push(id);
            self.toggle(id, true);
            let found = self.run(k, pos + 1)?;
            if found {
                return Ok(true);
            }
            self.toggle(id, false);
            self.chosen.pop();
        }
        Ok(false)
    }
}

/// Smallest `k` (up to `hint_upper`, default `|S|`) such that some
/// `k`-subset generates `S`, with the lexicographically first such subset.
///
/// The search starts from a bound computed without any rank formula: a
/// maximal `J`-class with null principal factor must be included whole,
/// and a generating set meets every `R`- and `L`-class of each maximal
/// regular `J`-class. Candidate sets that cannot meet these classes with
/// the remaining slots are pruned.
pub fn exact_rank<E: Clone + Eq + Hash + Ord + Debug>(
    s: &AbstractSemigroup<E>,
    hint_upper: Option<usize>,
    budget: u64,
) -> Result<ExactRank> {
    let green = green_structure(s);
    let mut forced = Vec::new();
    let mut blocks = Vec::new();
    let mut place = vec![None; s.len()];
    for (j, info) in green.maximal_classes() {
        let pf = principal_factor(s, &green, j);
        if !info.regular || pf.is_null() {
            forced.extend(info.members.iter().copied());
            continue;
        }
        let b = blocks.len();
        for &x in &info.members {
            let r = info.r_classes.binary_search(&green.r_of[x]).expect("row");
            let c = info.l_classes.binary_search(&green.l_of[x]).expect("col");
            place[x] = Some((b, r, c));
        }
        blocks.push(CoverBlock {
            rows: info.r_classes.clone(),
            cols: info.l_classes.clone(),
        });
    }
    forced.sort_unstable();
    let candidates: Vec<usize> = (0..s.len())
        .filter(|&x| Some(x) != s.zero() && forced.binary_search(&x).is_err())
        .collect();
    let mut row_last: Vec<Vec<usize>> = blocks.iter().map(|b| vec![0; b.rows.len()]).collect();
    let mut col_last: Vec<Vec<usize>> = blocks.iter().map(|b| vec![0; b.cols.len()]).collect();
    for (pos, &x) in candidates.iter().enumerate() {
        if let Some((b, r, c)) = place[x] {
            row_last[b][r] = pos;
            col_last[b][c] = pos;
        }
    }
    let lower_bound = forced.len() + blocks.iter().map(|b| b.rows.len().max(b.cols.len())).sum::<usize>();
    let upper = hint_upper.unwrap_or(forced.len() + candidates.len());
    let mut search = Search {
        s,
        row_hits: blocks.iter().map(|b| vec![0; b.rows.len()]).collect(),
        col_hits: blocks.iter().map(|b| vec![0; b.cols.len()]).collect(),
        candidates,
        blocks,
        place,
        row_last,
        col_last,
        chosen: Vec::new(),
        forced,
        nodes: 0,
        budget,
    };
    for k in lower_bound..=upper {
        let extra = k - search.forced.len();
        if extra > search.candidates.len() {
            break;
        }
        if search.run(extra, 0)? {
            let mut witness = search.forced.clone();
            witness.extend_from_slice(&search.chosen);
            witness.sort_unstable();
            return Ok(ExactRank {
                value: k,
                witness,
                lower_bound,
            });
        }
    }
    Err(Error::budget("no generating set within the upper bound", upper as u64))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Full transformation monoid on two points as a raw magma.
    struct T2;

    impl Magma for T2 {
        type Elem = [u8; 2];

        fn multiply(&self, a: &[u8; 2], b: &[u8; 2]) -> [u8; 2] {
            [b[a[0] as usize], b[a[1] as usize]]
        }
    }

    fn t2() -> AbstractSemigroup<[u8; 2]> {
        AbstractSemigroup::from_elements(&T2, vec![[0, 0], [0, 1], [1, 0], [1, 1]]).unwrap()
    }

    #[test]
    fn closure_of_group_generators() {
        let g = FiniteGroup::symmetric(3).unwrap();
        let gens = [g.parse_literal("(1 2)").unwrap(), g.parse_literal("(1 2 3)").unwrap()];
        assert_eq!(closure(&g, &gens, DEFAULT_PRODUCT_CAP).unwrap().len(), 6);
        assert_eq!(closure(&g, &[g.identity()], DEFAULT_PRODUCT_CAP).unwrap().len(), 1);
        assert!(matches!(closure(&g, &gens, 3), Err(Error::Budget { .. })));
    }

    #[test]
    fn green_structure_of_t2() {
        let s = t2();
        assert!(s.is_associative());
        let green = green_structure(&s);
        assert_eq!(green.j_classes.len(), 2);
        let constants = &green.j_classes[green.j_of[0]];
        assert_eq!(constants.members, vec![0, 3]);
        assert!(!constants.maximal);
        let perms = &green.j_classes[green.j_of[1]];
        assert_eq!(perms.members, vec![1, 2]);
        assert!(perms.maximal && perms.regular);
        // Constants share their kernel, so they are R-related but not L-related.
        assert_eq!(green.r_of[0], green.r_of[3]);
        assert_ne!(green.l_of[0], green.l_of[3]);
    }

    #[test]
    fn group_is_one_jclass() {
        let g = FiniteGroup::symmetric(3).unwrap();
        let s = AbstractSemigroup::from_elements(&g, g.elements().collect()).unwrap();
        let green = green_structure(&s);
        assert_eq!(green.j_classes.len(), 1);
        assert_eq!(maximal_jclass_lower_bound(&s).unwrap(), 2);
        let exact = exact_rank(&s, None, DEFAULT_SEARCH_BUDGET).unwrap();
        assert_eq!(exact.value, 2);
    }

    #[test]
    fn principal_factor_of_brandt_is_coordinatized() {
        let g = Arc::new(FiniteGroup::cyclic(2).unwrap());
        let rms = ReesMatrixSemigroup::new(g.clone(), StructureMatrix::identity(2, g.identity()).unwrap()).unwrap();
        let s = AbstractSemigroup::from_elements(&rms, rms.elements().collect()).unwrap();
        let green = green_structure(&s);
        let maxes: Vec<usize> = green.maximal_classes().map(|(j, _)| j).collect();
        assert_eq!(maxes.len(), 1);
        let pf = principal_factor(&s, &green, maxes[0]);
        assert_eq!(pf.len(), 8);
        let c = coordinatize(&s, &green, &pf).unwrap().unwrap();
        assert_eq!(c.rms.i_count(), 2);
        assert_eq!(c.rms.group().order(), 2);
        assert_eq!(maximal_jclass_lower_bound(&s).unwrap(), 2);
    }

    #[test]
    fn null_classes_are_forced() {
        let g = Arc::new(FiniteGroup::cyclic(2).unwrap());
        let rms = ReesMatrixSemigroup::new(g, StructureMatrix::zero(1, 2).unwrap()).unwrap();
        let s = AbstractSemigroup::from_elements(&rms, rms.elements().collect()).unwrap();
        assert_eq!(maximal_jclass_lower_bound(&s).unwrap(), 4);
        let exact = exact_rank(&s, None, DEFAULT_SEARCH_BUDGET).unwrap();
        assert_eq!((exact.value, exact.lower_bound), (4, 4));
    }

    #[test]
    fn verify_generates_matches_closure() {
        let g = FiniteGroup::cyclic(4).unwrap();
        let all: Vec<_> = g.elements().collect();
        assert!(verify_generates(&g, &all, &[GroupElement::new(1)], DEFAULT_PRODUCT_CAP).unwrap());
        assert!(!verify_generates(&g, &all, &[GroupElement::new(2)], DEFAULT_PRODUCT_CAP).unwrap());
        assert!(!verify_generates(&g, &all, &[], DEFAULT_PRODUCT_CAP).unwrap());
    }
}
