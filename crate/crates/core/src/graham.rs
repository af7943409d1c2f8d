//! Graham–Houghton graphs and Graham normal form.
//!
//! The graph of `M0[G; I, Λ; P]` is bipartite on `I ∪ Λ` with an edge for
//! every non-zero `p_{λi}`; the edge `(λ, i)` carries `p_{λi}` and its
//! reverse carries the inverse. Normalization rescales `P` along a spanning
//! forest with a vertex potential `φ` so that every forest edge is labelled
//! by the identity, then the components are laid out as diagonal blocks.

use std::collections::{BTreeMap, VecDeque};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupElement, GroupSubset};
use crate::rees::{ReesMatrixSemigroup, RmsElement, StructureMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vertex {
    I(usize),
    Lambda(usize),
}

/// A positively oriented edge `(λ, i)` labelled `p_{λi}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GhEdge {
    pub lambda: usize,
    pub i: usize,
    pub label: GroupElement,
}

#[derive(Clone, Debug)]
pub struct GhGraph {
    i_count: usize,
    lambda_count: usize,
    edges: Vec<GhEdge>,
    /// Edge indices incident to each `i`, in increasing `λ`.
    at_i: Vec<Vec<usize>>,
    /// Edge indices incident to each `λ`, in increasing `i`.
    at_lambda: Vec<Vec<usize>>,
}

impl GhGraph {
    pub fn build(s: &ReesMatrixSemigroup) -> Self {
        let m = s.matrix();
        let edges: Vec<GhEdge> = m
            .nonzero()
            .map(|(lambda, i, label)| GhEdge { lambda, i, label })
            .collect();
        let mut at_i = vec![Vec::new(); m.i_count()];
        let mut at_lambda = vec![Vec::new(); m.lambda_count()];
        for (k, e) in edges.iter().enumerate() {
            at_lambda[e.lambda].push(k);
        }
        // Row-major order lists edges by λ first; re-sort per `i`.
        for (k, e) in edges.iter().enumerate() {
            at_i[e.i].push(k);
        }
        for list in &mut at_i {
            list.sort_by_key(|&k| edges[k].lambda);
        }
        GhGraph {
            i_count: m.i_count(),
            lambda_count: m.lambda_count(),
            edges,
            at_i,
            at_lambda,
        }
    }

    pub fn i_count(&self) -> usize {
        self.i_count
    }

    pub fn lambda_count(&self) -> usize {
        self.lambda_count
    }

    /// Positively oriented edges, one per geometric edge.
    pub fn edges(&self) -> &[GhEdge] {
        &self.edges
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        (0..self.i_count)
            .map(Vertex::I)
            .chain((0..self.lambda_count).map(Vertex::Lambda))
    }

    pub fn degree(&self, v: Vertex) -> usize {
        match v {
            Vertex::I(i) => self.at_i[i].len(),
            Vertex::Lambda(l) => self.at_lambda[l].len(),
        }
    }

    /// Neighbours of `v` with the index of the connecting geometric edge.
    pub fn neighbours(&self, v: Vertex) -> impl Iterator<Item = (Vertex, usize)> + '_ {
        let (list, to_other): (&Vec<usize>, fn(&GhEdge) -> Vertex) = match v {
            Vertex::I(i) => (&self.at_i[i], |e| Vertex::Lambda(e.lambda)),
            Vertex::Lambda(l) => (&self.at_lambda[l], |e| Vertex::I(e.i)),
        };
        list.iter().map(move |&k| (to_other(&self.edges[k]), k))
    }

    /// Label of the directed edge `from -> to`, if present.
    pub fn label(&self, group: &FiniteGroup, from: Vertex, to: Vertex) -> Option<GroupElement> {
        match (from, to) {
            (Vertex::Lambda(l), Vertex::I(i)) => self.find(l, i).map(|e| e.label),
            (Vertex::I(i), Vertex::Lambda(l)) => self.find(l, i).map(|e| group.inverse(e.label)),
            _ => None,
        }
    }

    fn find(&self, lambda: usize, i: usize) -> Option<&GhEdge> {
        self.at_lambda[lambda]
            .iter()
            .map(|&k| &self.edges[k])
            .find(|e| e.i == i)
    }

    /// DOT rendering: `I` vertices as boxes, `Λ` vertices as circles, edges
    /// oriented `λ -> i` and labelled with `p_{λi}`.
    pub fn to_dot(&self, group: &FiniteGroup) -> String {
        let i_labels: Vec<String> = (1..=self.i_count).map(|k| k.to_string()).collect();
        let l_labels: Vec<String> = (1..=self.lambda_count).map(|k| k.to_string()).collect();
        let edges: Vec<(usize, usize, Option<String>)> = self
            .edges
            .iter()
            .map(|e| (e.lambda, e.i, Some(group.literal(e.label))))
            .collect();
        bipartite_dot("gh", &i_labels, &l_labels, &edges, true)
    }
}

/// Shared DOT writer for bipartite graphs on `I ∪ Λ`.
pub(crate) fn bipartite_dot(
    name: &str,
    i_labels: &[String],
    lambda_labels: &[String],
    edges: &[(usize, usize, Option<String>)],
    directed: bool,
) -> String {
    let (kind, arrow) = if directed { ("digraph", "->") } else { ("graph", "--") };
    let mut out = String::new();
    let _ = writeln!(out, "{kind} {name} {{");
    for (k, label) in i_labels.iter().enumerate() {
        let _ = writeln!(out, "  i{} [shape=box, label=\"{}\"];", k + 1, label);
    }
    for (k, label) in lambda_labels.iter().enumerate() {
        let _ = writeln!(out, "  l{} [shape=circle, label=\"{}\"];", k + 1, label);
    }
    for (lambda, i, label) in edges {
        match label {
            Some(text) => {
                let _ = writeln!(out, "  l{} {arrow} i{} [label=\"{}\"];", lambda + 1, i + 1, text);
            }
            None => {
                let _ = writeln!(out, "  l{} {arrow} i{};", lambda + 1, i + 1);
            }
        }
    }
    out.push_str("}\n");
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    /// Sorted `I` indices.
    pub is: Vec<usize>,
    /// Sorted `Λ` indices.
    pub lambdas: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentDecomposition {
    /// Non-trivial components, ordered by their smallest `λ`.
    pub components: Vec<Component>,
    pub isolated_i: Vec<usize>,
    pub isolated_lambda: Vec<usize>,
}

impl ComponentDecomposition {
    pub fn component_of(&self, v: Vertex) -> Option<usize> {
        self.components.iter().position(|c| match v {
            Vertex::I(i) => c.is.binary_search(&i).is_ok(),
            Vertex::Lambda(l) => c.lambdas.binary_search(&l).is_ok(),
        })
    }
}

/// Connected components by breadth-first search from each unvisited `λ`
/// in increasing order; isolated vertices are split off.
pub fn decompose(graph: &GhGraph) -> ComponentDecomposition {
    let mut seen_i = vec![false; graph.i_count()];
    let mut seen_l = vec![false; graph.lambda_count()];
    let mut components = Vec::new();
    for start in 0..graph.lambda_count() {
        if seen_l[start] || graph.degree(Vertex::Lambda(start)) == 0 {
            continue;
        }
        let mut comp = Component {
            is: Vec::new(),
            lambdas: Vec::new(),
        };
        seen_l[start] = true;
        let mut queue = VecDeque::from([Vertex::Lambda(start)]);
        while let Some(v) = queue.pop_front() {
            match v {
                Vertex::I(i) => comp.is.push(i),
                Vertex::Lambda(l) => comp.lambdas.push(l),
            }
            for (w, _) in graph.neighbours(v) {
                let seen = match w {
                    Vertex::I(i) => &mut seen_i[i],
                    Vertex::Lambda(l) => &mut seen_l[l],
                };
                if !*seen {
                    *seen = true;
                    queue.push_back(w);
                }
            }
        }
        comp.is.sort_unstable();
        comp.lambdas.sort_unstable();
        components.push(comp);
    }
    ComponentDecomposition {
        components,
        isolated_i: (0..graph.i_count())
            .filter(|&i| graph.degree(Vertex::I(i)) == 0)
            .collect(),
        isolated_lambda: (0..graph.lambda_count())
            .filter(|&l| graph.degree(Vertex::Lambda(l)) == 0)
            .collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tree {
    pub root: Vertex,
    /// Vertices in traversal order, root first.
    pub order: Vec<Vertex>,
    pub parent: BTreeMap<Vertex, Vertex>,
}

/// One spanning tree per non-trivial component, in component order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanningForest {
    pub trees: Vec<Tree>,
}

impl SpanningForest {
    /// Geometric forest edges as `(λ, i)` pairs.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.trees
            .iter()
            .flat_map(|t| t.parent.iter())
            .map(|(&child, &parent)| match (child, parent) {
                (Vertex::I(i), Vertex::Lambda(l)) | (Vertex::Lambda(l), Vertex::I(i)) => (l, i),
                _ => unreachable!("bipartite"),
            })
            .collect()
    }
}

fn component_root(c: &Component) -> Vertex {
    // Components with edges always meet I.
    Vertex::I(c.is[0])
}

/// Breadth-first trees rooted at each component's smallest `i`.
pub fn spanning_forest(graph: &GhGraph, decomposition: &ComponentDecomposition) -> SpanningForest {
    let trees = decomposition
        .components
        .iter()
        .map(|c| {
            let root = component_root(c);
            let mut order = vec![root];
            let mut parent = BTreeMap::new();
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for (w, _) in graph.neighbours(v) {
                    if w != root && !parent.contains_key(&w) {
                        parent.insert(w, v);
                        order.push(w);
                        queue.push_back(w);
                    }
                }
            }
            Tree { root, order, parent }
        })
        .collect();
    SpanningForest { trees }
}

/// Kruskal forest taking geometric edges (indices into [`GhGraph::edges`])
/// in the given order; trees are then oriented from each component's
/// smallest `i`.
pub fn spanning_forest_from_edges(
    graph: &GhGraph,
    decomposition: &ComponentDecomposition,
    edge_order: &[usize],
) -> Result<SpanningForest> {
    let key = |v: Vertex| match v {
        Vertex::I(i) => i,
        Vertex::Lambda(l) => graph.i_count() + l,
    };
    let mut uf: Vec<usize> = (0..graph.i_count() + graph.lambda_count()).collect();
    fn find(uf: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while uf[r] != r {
            r = uf[r];
        }
        let mut y = x;
        while uf[y] != r {
            let next = uf[y];
            uf[y] = r;
            y = next;
        }
        r
    }
    let mut chosen: BTreeMap<Vertex, Vec<Vertex>> = BTreeMap::new();
    for &k in edge_order {
        let e = graph
            .edges()
            .get(k)
            .ok_or_else(|| Error::Usage(format!("edge index {k} out of range")))?;
        let (a, b) = (Vertex::Lambda(e.lambda), Vertex::I(e.i));
        let (ra, rb) = (find(&mut uf, key(a)), find(&mut uf, key(b)));
        if ra != rb {
            uf[ra] = rb;
            chosen.entry(a).or_default().push(b);
            chosen.entry(b).or_default().push(a);
        }
    }
    let mut trees = Vec::new();
    for c in &decomposition.components {
        let root = component_root(c);
        let mut order = vec![root];
        let mut parent = BTreeMap::new();
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &w in chosen.get(&v).map(Vec::as_slice).unwrap_or(&[]) {
                if w != root && !parent.contains_key(&w) {
                    parent.insert(w, v);
                    order.push(w);
                    queue.push_back(w);
                }
            }
        }
        if order.len() != c.is.len() + c.lambdas.len() {
            return Err(Error::Usage("edge order does not span every component".into()));
        }
        trees.push(Tree { root, order, parent });
    }
    Ok(SpanningForest { trees })
}

/// The rescaling `(i, g, λ) ↦ (i, φ(i) g φ(λ)^-1, λ)` between a semigroup
/// and its normalized form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizationWitness {
    pub potential_i: Vec<GroupElement>,
    pub potential_lambda: Vec<GroupElement>,
}

impl NormalizationWitness {
    pub fn potential(&self, v: Vertex) -> GroupElement {
        match v {
            Vertex::I(i) => self.potential_i[i],
            Vertex::Lambda(l) => self.potential_lambda[l],
        }
    }

    /// Original coordinates to normalized coordinates.
    pub fn map(&self, group: &FiniteGroup, x: &RmsElement) -> RmsElement {
        match *x {
            RmsElement::Zero => RmsElement::Zero,
            RmsElement::Triple { i, g, lambda } => {
                let h = group.multiply(
                    group.multiply(self.potential_i[i], g),
                    group.inverse(self.potential_lambda[lambda]),
                );
                RmsElement::triple(i, h, lambda)
            }
        }
    }

    /// Normalized coordinates back to original coordinates.
    pub fn unmap(&self, group: &FiniteGroup, x: &RmsElement) -> RmsElement {
        match *x {
            RmsElement::Zero => RmsElement::Zero,
            RmsElement::Triple { i, g, lambda } => {
                let h = group.multiply(
                    group.multiply(group.inverse(self.potential_i[i]), g),
                    self.potential_lambda[lambda],
                );
                RmsElement::triple(i, h, lambda)
            }
        }
    }
}

/// Rescales `P` so that every forest edge is labelled by the identity.
///
/// Potentials start at the identity on each root and on isolated vertices;
/// a child `i` of `λ` gets `φ(λ) p_{λi}` and a child `λ` of `i` gets
/// `φ(i) p_{λi}^-1`. The new matrix is `q_{λi} = φ(λ) p_{λi} φ(i)^-1`.
pub fn normalize(
    s: &ReesMatrixSemigroup,
    forest: &SpanningForest,
) -> Result<(ReesMatrixSemigroup, NormalizationWitness)> {
    let g = s.group();
    let p = s.matrix();
    let mut potential_i = vec![g.identity(); s.i_count()];
    let mut potential_lambda = vec![g.identity(); s.lambda_count()];
    for tree in &forest.trees {
        for &v in &tree.order[1..] {
            let parent = tree.parent[&v];
            match (parent, v) {
                (Vertex::Lambda(l), Vertex::I(i)) => {
                    let entry = p
                        .entry(l, i)
                        .ok_or_else(|| Error::Usage("forest edge is not a graph edge".into()))?;
                    potential_i[i] = g.multiply(potential_lambda[l], entry);
                }
                (Vertex::I(i), Vertex::Lambda(l)) => {
                    let entry = p
                        .entry(l, i)
                        .ok_or_else(|| Error::Usage("forest edge is not a graph edge".into()))?;
                    potential_lambda[l] = g.multiply(potential_i[i], g.inverse(entry));
                }
                _ => return Err(Error::Usage("forest edge joins two vertices of one side".into())),
            }
        }
    }
    let mut q = p.clone();
    for (l, i, entry) in p.nonzero() {
        let value = g.multiply(g.multiply(potential_lambda[l], entry), g.inverse(potential_i[i]));
        q.set(l, i, Some(value));
    }
    Ok((
        s.with_matrix(q)?,
        NormalizationWitness {
            potential_i,
            potential_lambda,
        },
    ))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub is: Vec<usize>,
    pub lambdas: Vec<usize>,
    /// Subgroup generated by the block's normalized entries.
    pub subgroup: GroupSubset,
}

#[derive(Clone, Debug)]
pub struct GrahamNormalForm {
    /// Same index sets as the input, normalized structure matrix.
    pub normalized: ReesMatrixSemigroup,
    pub decomposition: ComponentDecomposition,
    pub forest: SpanningForest,
    pub witness: NormalizationWitness,
    pub blocks: Vec<Block>,
    /// Row order of the block-diagonal layout (`λ` indices).
    pub lambda_order: Vec<usize>,
    /// Column order of the block-diagonal layout (`i` indices).
    pub i_order: Vec<usize>,
}

impl GrahamNormalForm {
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn subgroups(&self) -> Vec<GroupSubset> {
        self.blocks.iter().map(|b| b.subgroup.clone()).collect()
    }

    /// `C_1 ⊕ … ⊕ C_n ⊕ C_N` with rows and columns permuted.
    pub fn block_matrix(&self) -> StructureMatrix {
        self.normalized.matrix().permute(&self.lambda_order, &self.i_order)
    }

    /// Checks that the permuted matrix has no non-zero entry outside the
    /// diagonal blocks and that every forest edge is the identity.
    pub fn verify_shape(&self) -> bool {
        let q = self.normalized.matrix();
        let one = self.normalized.group().identity();
        let block_of_i = |i: usize| self.blocks.iter().position(|b| b.is.contains(&i));
        let block_of_l = |l: usize| self.blocks.iter().position(|b| b.lambdas.contains(&l));
        let off_block_zero = q
            .nonzero()
            .all(|(l, i, _)| block_of_l(l).is_some() && block_of_l(l) == block_of_i(i));
        let forest_ones = self.forest.edges().iter().all(|&(l, i)| q.entry(l, i) == Some(one));
        off_block_zero && forest_ones
    }

    /// Human-readable layout used by the `normalize` subcommand.
    pub fn describe(&self) -> String {
        let g = self.normalized.group();
        let mut out = String::new();
        let _ = writeln!(out, "blocks {}", self.blocks.len());
        for (k, b) in self.blocks.iter().enumerate() {
            let _ = writeln!(
                out,
                "block {} I={} L={} H_order={}",
                k + 1,
                one_based(&b.is),
                one_based(&b.lambdas),
                b.subgroup.len()
            );
        }
        let _ = writeln!(out, "isolated_I={}", one_based(&self.decomposition.isolated_i));
        let _ = writeln!(out, "isolated_L={}", one_based(&self.decomposition.isolated_lambda));
        let _ = writeln!(out, "row_order={}", one_based(&self.lambda_order));
        let _ = writeln!(out, "col_order={}", one_based(&self.i_order));
        let m = self.block_matrix();
        let _ = writeln!(out, "matrix {} {}", m.lambda_count(), m.i_count());
        for row in m.rows() {
            let cells: Vec<String> = row
                .iter()
                .map(|e| e.map_or_else(|| "0".to_string(), |x| g.literal(x)))
                .collect();
            let _ = writeln!(out, "{}", cells.join(" "));
        }
        out
    }
}

fn one_based(xs: &[usize]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| (x + 1).to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

pub fn graham_normal_form(s: &ReesMatrixSemigroup) -> Result<GrahamNormalForm> {
    let graph = GhGraph::build(s);
    let decomposition = decompose(&graph);
    let forest = spanning_forest(&graph, &decomposition);
    graham_normal_form_with(s, decomposition, forest)
}

/// Normal form built from a caller-chosen spanning forest.
pub fn graham_normal_form_with(
    s: &ReesMatrixSemigroup,
    decomposition: ComponentDecomposition,
    forest: SpanningForest,
) -> Result<GrahamNormalForm> {
    let (normalized, witness) = normalize(s, &forest)?;
    let g = normalized.group();
    let q = normalized.matrix();
    let blocks: Vec<Block> = decomposition
        .components
        .iter()
        .map(|c| {
            let entries = c
                .lambdas
                .iter()
                .flat_map(|&l| c.is.iter().filter_map(move |&i| q.entry(l, i)));
            Block {
                is: c.is.clone(),
                lambdas: c.lambdas.clone(),
                subgroup: g.subgroup_closure(&g.subset(entries)),
            }
        })
        .collect();
    let lambda_order = blocks
        .iter()
        .flat_map(|b| b.lambdas.iter().copied())
        .chain(decomposition.isolated_lambda.iter().copied())
        .collect();
    let i_order = blocks
        .iter()
        .flat_map(|b| b.is.iter().copied())
        .chain(decomposition.isolated_i.iter().copied())
        .collect();
    Ok(GrahamNormalForm {
        normalized,
        decomposition,
        forest,
        witness,
        blocks,
        lambda_order,
        i_order,
    })
}

/// `⟨E(S)⟩` described through the normal form: zero together with every
/// `(i, h, λ)` (normalized coordinates) with `i, λ` in block `k` and
/// `h ∈ H_k`.
#[derive(Clone, Debug)]
pub struct IdempotentGenerated<'a> {
    gnf: &'a GrahamNormalForm,
}

pub fn idempotent_generated(gnf: &GrahamNormalForm) -> IdempotentGenerated<'_> {
    IdempotentGenerated { gnf }
}

impl IdempotentGenerated<'_> {
    /// Membership test in original coordinates.
    pub fn contains(&self, x: &RmsElement) -> bool {
        let g = self.gnf.normalized.group();
        match self.gnf.witness.map(g, x) {
            RmsElement::Zero => true,
            RmsElement::Triple { i, g: h, lambda } => self
                .gnf
                .blocks
                .iter()
                .any(|b| b.is.contains(&i) && b.lambdas.contains(&lambda) && b.subgroup.contains(h)),
        }
    }

    pub fn size(&self) -> usize {
        1 + self
            .gnf
            .blocks
            .iter()
            .map(|b| b.is.len() * b.lambdas.len() * b.subgroup.len())
            .sum::<usize>()
    }

    /// All elements in original coordinates, sorted, zero first.
    pub fn elements(&self) -> Vec<RmsElement> {
        let g = self.gnf.normalized.group();
        let mut out = vec![RmsElement::Zero];
        for b in &self.gnf.blocks {
            for &i in &b.is {
                for &l in &b.lambdas {
                    for h in b.subgroup.iter() {
                        out.push(self.gnf.witness.unmap(g, &RmsElement::triple(i, h, l)));
                    }
                }
            }
        }
        out.sort();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    fn rms(group: FiniteGroup, rows: Vec<Vec<Option<usize>>>) -> ReesMatrixSemigroup {
        let rows = rows
            .into_iter()
            .map(|r| r.into_iter().map(|e| e.map(GroupElement::new)).collect())
            .collect();
        ReesMatrixSemigroup::new(Arc::new(group), StructureMatrix::from_rows(rows).unwrap()).unwrap()
    }

    #[test]
    fn zero_matrix_graph_is_edgeless() {
        let s = rms(FiniteGroup::cyclic(2).unwrap(), vec![vec![None, None]; 3]);
        let graph = GhGraph::build(&s);
        assert!(graph.edges().is_empty());
        let d = decompose(&graph);
        assert!(d.components.is_empty());
        assert_eq!(d.isolated_i, vec![0, 1]);
        assert_eq!(d.isolated_lambda, vec![0, 1, 2]);
        let gnf = graham_normal_form(&s).unwrap();
        assert_eq!(gnf.block_count(), 0);
        assert!(gnf.block_matrix().is_zero());
    }

    #[test]
    fn edge_counts_and_isolation() {
        let s = rms(
            FiniteGroup::cyclic(3).unwrap(),
            vec![vec![Some(1), None, None], vec![Some(0), Some(2), None]],
        );
        let graph = GhGraph::build(&s);
        assert_eq!(graph.edges().len(), s.idempotents().len());
        assert_eq!(graph.degree(Vertex::I(2)), 0);
        assert!(!s.matrix().is_regular());
        let g = s.group();
        assert_eq!(
            graph.label(g, Vertex::Lambda(0), Vertex::I(0)),
            Some(GroupElement::new(1))
        );
        assert_eq!(
            graph.label(g, Vertex::I(0), Vertex::Lambda(0)),
            Some(GroupElement::new(2))
        );
        assert_eq!(graph.label(g, Vertex::I(2), Vertex::Lambda(0)), None);
    }

    #[test]
    fn identity_pattern_components() {
        let s = rms(
            FiniteGroup::cyclic(2).unwrap(),
            (0..4)
                .map(|l| (0..4).map(|i| (l == i).then_some(0)).collect())
                .collect(),
        );
        let d = decompose(&GhGraph::build(&s));
        assert_eq!(d.components.len(), 4);
        for (k, c) in d.components.iter().enumerate() {
            assert_eq!(c.is, vec![k]);
            assert_eq!(c.lambdas, vec![k]);
        }
        let gnf = graham_normal_form(&s).unwrap();
        assert!(gnf.blocks.iter().all(|b| b.subgroup.len() == 1));
    }

    #[test]
    fn full_matrix_has_one_component() {
        let k = 3;
        let s = rms(FiniteGroup::cyclic(5).unwrap(), vec![vec![Some(1); k]; k]);
        let graph = GhGraph::build(&s);
        let d = decompose(&graph);
        assert_eq!(d.components.len(), 1);
        let forest = spanning_forest(&graph, &d);
        assert_eq!(forest.trees[0].order.len(), 2 * k);
        assert_eq!(forest.edges().len(), 2 * k - 1);
    }

    #[test]
    fn single_edge_forest() {
        let s = rms(FiniteGroup::cyclic(2).unwrap(), vec![vec![Some(1)]]);
        let graph = GhGraph::build(&s);
        let forest = spanning_forest(&graph, &decompose(&graph));
        assert_eq!(forest.edges(), vec![(0, 0)]);
    }

    #[test]
    fn normalization_on_c2_example() {
        // P = [[1, 1], [1, a]]; tree {(λ1,i1), (λ1,i2), (λ2,i1)} leaves the
        // non-tree entry at a.
        let s = rms(
            FiniteGroup::cyclic(2).unwrap(),
            vec![vec![Some(0), Some(0)], vec![Some(0), Some(1)]],
        );
        let graph = GhGraph::build(&s);
        let d = decompose(&graph);
        let forest = spanning_forest(&graph, &d);
        let mut edges = forest.edges();
        edges.sort();
        assert_eq!(edges, vec![(0, 0), (0, 1), (1, 0)]);
        let (u, w) = normalize(&s, &forest).unwrap();
        assert_eq!(u.matrix(), s.matrix());
        assert!(w
            .potential_i
            .iter()
            .chain(&w.potential_lambda)
            .all(|&x| x == GroupElement::new(0)));
    }

    #[test]
    fn witness_map_is_an_isomorphism() {
        let g = FiniteGroup::symmetric(3).unwrap();
        let s = rms(
            g,
            vec![
                vec![Some(3), None, Some(1)],
                vec![Some(5), Some(2), None],
                vec![None, None, None],
            ],
        );
        let gnf = graham_normal_form(&s).unwrap();
        assert!(gnf.verify_shape());
        let grp = s.group();
        let elems: Vec<_> = s.elements().collect();
        for x in &elems {
            assert_eq!(gnf.witness.unmap(grp, &gnf.witness.map(grp, x)), *x);
            for y in &elems {
                let lhs = gnf.witness.map(grp, &s.multiply(x, y));
                let rhs = gnf
                    .normalized
                    .multiply(&gnf.witness.map(grp, x), &gnf.witness.map(grp, y));
                assert_eq!(lhs, rhs);
            }
        }
        // Normalization keeps the unlabelled graph.
        let before: Vec<_> = s.matrix().nonzero().map(|(l, i, _)| (l, i)).collect();
        let after: Vec<_> = gnf.normalized.matrix().nonzero().map(|(l, i, _)| (l, i)).collect();
        assert_eq!(before, after);
    }

    #[test]
    fn kruskal_forest_spans() {
        let s = rms(
            FiniteGroup::cyclic(4).unwrap(),
            vec![vec![Some(1), Some(2), None], vec![Some(3), Some(1), Some(1)]],
        );
        let graph = GhGraph::build(&s);
        let d = decompose(&graph);
        let order: Vec<usize> = (0..graph.edges().len()).rev().collect();
        let forest = spanning_forest_from_edges(&graph, &d, &order).unwrap();
        assert_eq!(forest.edges().len(), 4);
        assert!(spanning_forest_from_edges(&graph, &d, &[0]).is_err());
        let gnf = graham_normal_form_with(&s, d, forest).unwrap();
        assert!(gnf.verify_shape());
    }

    #[test]
    fn dot_output_is_stable() {
        let s = rms(FiniteGroup::symmetric(3).unwrap(), vec![vec![Some(1), None]]);
        let dot = GhGraph::build(&s).to_dot(s.group());
        assert_eq!(
            dot,
            "digraph gh {\n  i1 [shape=box, label=\"1\"];\n  i2 [shape=box, label=\"2\"];\n  \
             l1 [shape=circle, label=\"1\"];\n  l1 -> i1 [label=\"(2 3)\"];\n}\n"
        );
    }
}
