//! Writes the Graham–Houghton graph of a structure matrix as DOT.
//!
//! `cargo run --example gh_graph_dot | dot -Tsvg > gh.svg`

use std::sync::Arc;

use semigroup_rank::graham::{decompose, GhGraph};
use semigroup_rank::group::FiniteGroup;
use semigroup_rank::rees::{ReesMatrixSemigroup, StructureMatrix};

fn main() -> semigroup_rank::Result<()> {
    let g = Arc::new(FiniteGroup::cyclic(4)?);
    let x = |k: usize| Some(g.elements().nth(k).expect("element"));
    let matrix = StructureMatrix::from_rows(vec![
        vec![x(1), x(0), None, None],
        vec![None, x(3), None, None],
        vec![None, None, x(2), None],
    ])?;
    let s = ReesMatrixSemigroup::new(g.clone(), matrix)?;
    let graph = GhGraph::build(&s);
    let d = decompose(&graph);
    eprintln!(
        "{} components, isolated I {:?}, isolated Λ {:?}",
        d.components.len(),
        d.isolated_i,
        d.isolated_lambda
    );
    print!("{}", graph.to_dot(s.group()));
    Ok(())
}
