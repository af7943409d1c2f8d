//! Finite groups stored as multiplication tables.
//!
//! Every group carries a dense table of element indices. Groups built from
//! permutations also keep the permutation of each element so that elements
//! can be read and written in cycle notation.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Largest group order accepted by the default constructors.
pub const DEFAULT_ORDER_CAP: usize = 5040;

/// Above this order the associativity check in [`FiniteGroup::from_table`]
/// is skipped.
const ASSOCIATIVITY_CHECK_LIMIT: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement(u32);

impl GroupElement {
    pub const fn new(index: usize) -> Self {
        GroupElement(index as u32)
    }

    pub const fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Clone, Debug)]
pub struct FiniteGroup {
    order: usize,
    product: Vec<u32>,
    inverse: Vec<u32>,
    identity: GroupElement,
    name: String,
    perms: Option<PermData>,
}

#[derive(Clone, Debug)]
struct PermData {
    degree: usize,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, u32>,
}

impl FiniteGroup {
    /// The symmetric group on `r` points, elements in lexicographic one-line
    /// order (identity first).
    pub fn symmetric(r: usize) -> Result<Self> {
        Self::symmetric_with_cap(r, DEFAULT_ORDER_CAP)
    }

    pub fn symmetric_with_cap(r: usize, cap: usize) -> Result<Self> {
        if !(1..=8).contains(&r) {
            return Err(Error::Size(format!("symmetric group degree {r} outside 1..=8")));
        }
        let order: usize = (1..=r).product();
        if order > cap {
            return Err(Error::Size(format!("S_{r} has order {order}, above the cap {cap}")));
        }
        Self::from_sorted_permutations(r, Permutation::all(r), format!("S{r}"))
    }

    /// The cyclic group of order `m`; element `k` is the `k`-th power of a
    /// fixed generator.
    pub fn cyclic(m: usize) -> Result<Self> {
        if m == 0 || m > DEFAULT_ORDER_CAP {
            return Err(Error::Size(format!(
                "cyclic group order {m} outside 1..={DEFAULT_ORDER_CAP}"
            )));
        }
        let mut product = Vec::with_capacity(m * m);
        for a in 0..m {
            for b in 0..m {
                product.push(((a + b) % m) as u32);
            }
        }
        let inverse = (0..m).map(|a| ((m - a) % m) as u32).collect();
        Ok(FiniteGroup {
            order: m,
            product,
            inverse,
            identity: GroupElement(0),
            name: format!("C{m}"),
            perms: None,
        })
    }

    /// The dihedral group of order `2m` acting on an `m`-gon (`m >= 3`).
    pub fn dihedral(m: usize) -> Result<Self> {
        if m < 3 {
            return Err(Error::Size(format!("dihedral group needs m >= 3, got {m}")));
        }
        let rotation = Permutation::from_images((0..m).map(|i| ((i + 1) % m) as u8).collect())?;
        let reflection = Permutation::from_images((0..m).map(|i| ((m - i) % m) as u8).collect())?;
        let mut g = Self::from_permutations(m, &[rotation, reflection], DEFAULT_ORDER_CAP)?;
        g.name = format!("D{}", 2 * m);
        Ok(g)
    }

    /// The permutation group generated by `gens`, elements in lexicographic
    /// one-line order.
    pub fn from_permutations(degree: usize, gens: &[Permutation], cap: usize) -> Result<Self> {
        if gens.iter().any(|p| p.degree() != degree) {
            return Err(Error::Usage("generator degree mismatch".into()));
        }
        let id = Permutation::identity(degree);
        let mut seen: HashMap<Permutation, ()> = HashMap::new();
        seen.insert(id.clone(), ());
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let y = x.then(g);
                if !seen.contains_key(&y) {
                    if seen.len() >= cap {
                        return Err(Error::Size(format!("permutation group exceeds cap {cap}")));
                    }
                    seen.insert(y.clone(), ());
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<Permutation> = seen.into_keys().collect();
        elements.sort();
        let name = format!("<{} perms on {degree}>", gens.len());
        Self::from_sorted_permutations(degree, elements, name)
    }

    fn from_sorted_permutations(degree: usize, elements: Vec<Permutation>, name: String) -> Result<Self> {
        let order = elements.len();
        let index: HashMap<Permutation, u32> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i as u32))
            .collect();
        let mut product = Vec::with_capacity(order * order);
        for a in &elements {
            for b in &elements {
                let ab = a.then(b);
                let k = *index
                    .get(&ab)
                    .ok_or_else(|| Error::Internal("permutation set not closed".into()))?;
                product.push(k);
            }
        }
        let inverse = elements.iter().map(|p| index[&p.inverse()]).collect();
        let identity = GroupElement(index[&Permutation::identity(degree)]);
        Ok(FiniteGroup {
            order,
            product,
            inverse,
            identity,
            name,
            perms: Some(PermData {
                degree,
                elements,
                index,
            }),
        })
    }

    /// Builds a group from a Cayley table of 0-based indices, verifying the
    /// group axioms (associativity only up to order 200).
    pub fn from_table(table: &[Vec<usize>], name: impl Into<String>) -> Result<Self> {
        let order = table.len();
        if order == 0 {
            return Err(Error::Usage("empty group table".into()));
        }
        if order > DEFAULT_ORDER_CAP {
            return Err(Error::Size(format!(
                "group order {order} above cap {DEFAULT_ORDER_CAP}"
            )));
        }
        let mut product = Vec::with_capacity(order * order);
        for (a, row) in table.iter().enumerate() {
            if row.len() != order {
                return Err(Error::Usage(format!(
                    "table row {a} has {} entries, expected {order}",
                    row.len()
                )));
            }
            for &x in row {
                if x >= order {
                    return Err(Error::Usage(format!("table entry {x} out of range")));
                }
                product.push(x as u32);
            }
        }
        let at = |a: usize, b: usize| product[a * order + b] as usize;
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or_else(|| Error::Usage("table has no two-sided identity".into()))?;
        let mut inverse = Vec::with_capacity(order);
        for x in 0..order {
            let y = (0..order)
                .find(|&y| at(x, y) == identity && at(y, x) == identity)
                .ok_or_else(|| Error::Usage(format!("element {x} has no inverse")))?;
            inverse.push(y as u32);
        }
        if order <= ASSOCIATIVITY_CHECK_LIMIT {
            for a in 0..order {
                for b in 0..order {
                    let ab = at(a, b);
                    for c in 0..order {
                        if at(ab, c) != at(a, at(b, c)) {
                            return Err(Error::Usage(format!("table is not associative at ({a},{b},{c})")));
                        }
                    }
                }
            }
        }
        Ok(FiniteGroup {
            order,
            product,
            inverse,
            identity: GroupElement::new(identity),
            name: name.into(),
            perms: None,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn identity(&self) -> GroupElement {
        self.identity
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order).map(GroupElement::new)
    }

    pub fn multiply(&self, a: GroupElement, b: GroupElement) -> GroupElement {
        GroupElement(self.product[a.index() * self.order + b.index()])
    }

    pub fn inverse(&self, a: GroupElement) -> GroupElement {
        GroupElement(self.inverse[a.index()])
    }

    /// `g x g^-1`.
    pub fn conjugate(&self, g: GroupElement, x: GroupElement) -> GroupElement {
        self.multiply(self.multiply(g, x), self.inverse(g))
    }

    /// Row `a` of the Cayley table as indices.
    pub fn table_row(&self, a: GroupElement) -> impl Iterator<Item = usize> + '_ {
        self.product[a.index() * self.order..(a.index() + 1) * self.order]
            .iter()
            .map(|&x| x as usize)
    }

    pub fn is_valid(&self, a: GroupElement) -> bool {
        a.index() < self.order
    }

    /// Degree of the permutation representation, if the group has one.
    pub fn permutation_degree(&self) -> Option<usize> {
        self.perms.as_ref().map(|p| p.degree)
    }

    pub fn permutation(&self, a: GroupElement) -> Option<&Permutation> {
        self.perms.as_ref().map(|p| &p.elements[a.index()])
    }

    pub fn element_of(&self, p: &Permutation) -> Option<GroupElement> {
        self.perms
            .as_ref()
            .and_then(|d| d.index.get(p))
            .map(|&k| GroupElement(k))
    }

    /// Canonical text form: cycle notation for permutation groups, `g<k>`
    /// otherwise.
    pub fn literal(&self, a: GroupElement) -> String {
        match self.permutation(a) {
            Some(p) => p.to_string(),
            None => format!("g{}", a.index()),
        }
    }

    /// Reads `e`, `g<k>`, or (for permutation groups) a cycle or one-line
    /// permutation.
    pub fn parse_literal(&self, text: &str) -> Result<GroupElement> {
        let text = text.trim();
        if text == "e" {
            return Ok(self.identity);
        }
        if let Some(k) = text.strip_prefix('g') {
            let k: usize = k
                .parse()
                .map_err(|_| Error::Usage(format!("bad element literal `{text}`")))?;
            if k >= self.order {
                return Err(Error::Usage(format!("element g{k} out of range for {}", self.name)));
            }
            return Ok(GroupElement::new(k));
        }
        match &self.perms {
            Some(data) => {
                let p = Permutation::parse(text, data.degree)?;
                self.element_of(&p)
                    .ok_or_else(|| Error::Usage(format!("`{text}` is not an element of {}", self.name)))
            }
            None => Err(Error::Usage(format!(
                "`{text}` is not an element literal of {}",
                self.name
            ))),
        }
    }

    pub fn empty_subset(&self) -> GroupSubset {
        GroupSubset::empty(self.order)
    }

    pub fn subset(&self, elements: impl IntoIterator<Item = GroupElement>) -> GroupSubset {
        GroupSubset::from_elements(self.order, elements)
    }

    pub fn whole(&self) -> GroupSubset {
        let mut s = self.subset(self.elements());
        s.is_subgroup = true;
        s
    }

    /// The smallest subgroup containing `seed`.
    pub fn subgroup_closure(&self, seed: &GroupSubset) -> GroupSubset {
        let gens: Vec<GroupElement> = seed.iter().collect();
        GroupSubset {
            members: self.closure_bits(&gens),
            is_subgroup: true,
        }
    }

    /// Subgroup generated by `gens` as a bit set.
    pub(crate) fn closure_bits(&self, gens: &[GroupElement]) -> FixedBitSet {
        let mut members = FixedBitSet::with_capacity(self.order);
        members.insert(self.identity.index());
        let mut stack = vec![self.identity];
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.multiply(x, g);
                if !members.contains(y.index()) {
                    members.insert(y.index());
                    stack.push(y);
                }
            }
        }
        members
    }

    /// `{ g a g^-1 : a in subset }`.
    pub fn conjugate_subset(&self, subset: &GroupSubset, g: GroupElement) -> GroupSubset {
        let mut out = GroupSubset::from_elements(self.order, subset.iter().map(|a| self.conjugate(g, a)));
        out.is_subgroup = subset.is_subgroup;
        out
    }

    /// Minimal number of generators, with the lexicographically first
    /// generating set of that size.
    pub fn rank(&self) -> RelativeRank {
        self.relative_rank(&self.empty_subset())
    }

    /// Minimal `|X|` with `<A ∪ X> = G`.
    ///
    /// Subsets are tried in increasing size and lexicographic index order;
    /// an element already inside the running closure is never added.
    pub fn relative_rank(&self, base: &GroupSubset) -> RelativeRank {
        let base_gens = self.reduce_generators(base.iter());
        let closure = self.closure_bits(&base_gens);
        for k in 0..=self.order {
            let mut chosen = Vec::with_capacity(k);
            let mut gens = base_gens.clone();
            if self.search_completion(k, 0, &closure, &mut gens, &mut chosen) {
                return RelativeRank {
                    value: k,
                    witness: self.subset(chosen),
                };
            }
        }
        unreachable!("the whole group always generates itself")
    }

    fn search_completion(
        &self,
        k: usize,
        start: usize,
        closure: &FixedBitSet,
        gens: &mut Vec<GroupElement>,
        chosen: &mut Vec<GroupElement>,
    ) -> bool {
        if chosen.len() == k {
            return closure.count_ones(..) == self.order;
        }
        for x in start..self.order {
            if closure.contains(x) {
                continue;
            }
            let x = GroupElement::new(x);
            gens.push(x);
            chosen.push(x);
            let next = self.closure_bits(gens);
            if self.search_completion(k, x.index() + 1, &next, gens, chosen) {
                return true;
            }
            gens.pop();
            chosen.pop();
        }
        false
    }

    /// Greedily drops elements already generated by earlier ones.
    pub(crate) fn reduce_generators(&self, elements: impl Iterator<Item = GroupElement>) -> Vec<GroupElement> {
        let mut gens = Vec::new();
        let mut closure = self.closure_bits(&gens);
        for a in elements {
            if !closure.contains(a.index()) {
                gens.push(a);
                closure = self.closure_bits(&gens);
            }
        }
        gens
    }
}

impl fmt::Display for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (order {})", self.name, self.order)
    }
}

/// Result of a (relative) rank search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelativeRank {
    pub value: usize,
    pub witness: GroupSubset,
}

/// A subset of a finite group, optionally known to be a subgroup.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupSubset {
    members: FixedBitSet,
    is_subgroup: bool,
}

impl GroupSubset {
    pub fn empty(order: usize) -> Self {
        GroupSubset {
            members: FixedBitSet::with_capacity(order),
            is_subgroup: false,
        }
    }

    pub fn from_elements(order: usize, elements: impl IntoIterator<Item = GroupElement>) -> Self {
        let mut s = Self::empty(order);
        for a in elements {
            s.members.insert(a.index());
        }
        s
    }

    pub(crate) fn from_bits(members: FixedBitSet, is_subgroup: bool) -> Self {
        GroupSubset { members, is_subgroup }
    }

    pub fn contains(&self, a: GroupElement) -> bool {
        self.members.contains(a.index())
    }

    pub fn len(&self) -> usize {
        self.members.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_clear()
    }

    /// Set only by constructors that verified closure.
    pub fn is_subgroup(&self) -> bool {
        self.is_subgroup
    }

    pub fn iter(&self) -> impl Iterator<Item = GroupElement> + '_ {
        self.members.ones().map(GroupElement::new)
    }

    pub fn bits(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn union(&self, other: &GroupSubset) -> GroupSubset {
        let mut members = self.members.clone();
        members.union_with(&other.members);
        GroupSubset {
            members,
            is_subgroup: false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> FiniteGroup {
        FiniteGroup::symmetric(3).unwrap()
    }

    fn el(g: &FiniteGroup, s: &str) -> GroupElement {
        g.parse_literal(s).unwrap()
    }

    #[test]
    fn symmetric_groups() {
        let g = s3();
        assert_eq!(g.order(), 6);
        assert_eq!(g.identity(), GroupElement::new(0));
        assert_eq!(FiniteGroup::symmetric(1).unwrap().order(), 1);
        let s4 = FiniteGroup::symmetric(4).unwrap();
        assert_eq!(s4.order(), 24);
        assert_eq!(s4.rank().value, 2);
        assert!(FiniteGroup::symmetric(0).is_err());
        assert!(FiniteGroup::symmetric(9).is_err());
        // S_8 is within the degree range but above the default order cap.
        assert!(matches!(FiniteGroup::symmetric(8), Err(Error::Size(_))));
    }

    #[test]
    fn cyclic_groups() {
        let c1 = FiniteGroup::cyclic(1).unwrap();
        assert_eq!(c1.order(), 1);
        assert_eq!(c1.rank().value, 0);
        let c6 = FiniteGroup::cyclic(6).unwrap();
        assert_eq!(c6.rank().value, 1);
        let c2 = FiniteGroup::cyclic(2).unwrap();
        assert!(c2.elements().all(|x| c2.inverse(x) == x));
    }

    #[test]
    fn symmetric_two_is_cyclic() {
        let s2 = FiniteGroup::symmetric(2).unwrap();
        assert_eq!(s2.rank().value, 1);
    }

    #[test]
    fn closure_examples() {
        let g = s3();
        let c = g.subgroup_closure(&g.subset([el(&g, "(1 2 3)")]));
        assert_eq!(c.len(), 3);
        assert!(c.contains(el(&g, "(1 3 2)")) && c.contains(g.identity()));
        assert!(c.is_subgroup());
        let trivial = g.subgroup_closure(&g.empty_subset());
        assert_eq!(trivial.iter().collect::<Vec<_>>(), vec![g.identity()]);
        let all = g.subgroup_closure(&g.subset([el(&g, "(1 2)"), el(&g, "(1 2 3)")]));
        assert_eq!(all.len(), 6);
    }

    #[test]
    fn conjugation_uses_g_x_ginv() {
        let g = s3();
        let a = g.subgroup_closure(&g.subset([el(&g, "(1 2)")]));
        assert_eq!(g.conjugate_subset(&a, g.identity()), a);
        // (1 2 3)(1 2)(1 3 2) read left to right is (1 3).
        let c = g.conjugate_subset(&a, el(&g, "(1 2 3)"));
        assert_eq!(c, g.subgroup_closure(&g.subset([el(&g, "(1 3)")])));
        assert!(c.is_subgroup());
        for x in g.elements() {
            assert_eq!(g.conjugate_subset(&a, x).len(), a.len());
        }
    }

    #[test]
    fn relative_rank_examples() {
        let g = s3();
        assert_eq!(g.relative_rank(&g.whole()).value, 0);
        assert_eq!(g.relative_rank(&g.empty_subset()).value, 2);
        let s4 = FiniteGroup::symmetric(4).unwrap();
        let evens: Vec<GroupElement> = s4
            .elements()
            .filter(|&x| {
                s4.permutation(x)
                    .unwrap()
                    .cycles()
                    .iter()
                    .map(|c| c.len() - 1)
                    .sum::<usize>()
                    % 2
                    == 0
            })
            .collect();
        let a4 = s4.subgroup_closure(&s4.subset(evens));
        assert_eq!(a4.len(), 12);
        let rr = s4.relative_rank(&a4);
        assert_eq!(rr.value, 1);
        let witness: Vec<_> = rr.witness.iter().collect();
        assert_eq!(s4.subgroup_closure(&a4.union(&rr.witness)).len(), 24);
        assert!(!a4.contains(witness[0]));
    }

    #[test]
    fn rank_witness_generates() {
        for g in [
            s3(),
            FiniteGroup::symmetric(4).unwrap(),
            FiniteGroup::dihedral(4).unwrap(),
        ] {
            let r = g.rank();
            assert_eq!(g.subgroup_closure(&r.witness).len(), g.order());
            assert_eq!(r.witness.len(), r.value);
        }
    }

    #[test]
    fn table_groups_validate() {
        let klein = vec![vec![0, 1, 2, 3], vec![1, 0, 3, 2], vec![2, 3, 0, 1], vec![3, 2, 1, 0]];
        let v4 = FiniteGroup::from_table(&klein, "V4").unwrap();
        assert_eq!(v4.rank().value, 2);
        assert_eq!(v4.literal(GroupElement::new(2)), "g2");
        assert_eq!(v4.parse_literal("g3").unwrap(), GroupElement::new(3));
        let bad = vec![vec![0, 1], vec![0, 1]];
        assert!(FiniteGroup::from_table(&bad, "bad").is_err());
    }

    #[test]
    fn literals_round_trip() {
        let g = FiniteGroup::symmetric(4).unwrap();
        for x in g.elements() {
            assert_eq!(g.parse_literal(&g.literal(x)).unwrap(), x);
        }
        assert_eq!(g.parse_literal("e").unwrap(), g.identity());
        assert_eq!(g.literal(g.parse_literal("(1 2)(3 4)").unwrap()), "(1 2)(3 4)");
        assert!(g.parse_literal("(1 5)").is_err());
    }
}
