//! Rank of a Rees matrix semigroup with its ingredients and a verified
//! minimum generating set.

use std::sync::Arc;

use semigroup_rank::group::FiniteGroup;
use semigroup_rank::oracle::{verify_generates, DEFAULT_PRODUCT_CAP};
use semigroup_rank::rank::{minimal_generating_set, rank_rms};
use semigroup_rank::rees::{ReesMatrixSemigroup, StructureMatrix};

fn main() -> semigroup_rank::Result<()> {
    let g = Arc::new(FiniteGroup::symmetric(3)?);
    let e = Some(g.identity());
    let t = Some(g.parse_literal("(1 2)")?);
    let matrix = StructureMatrix::from_rows(vec![
        vec![e, t, None, None],
        vec![e, e, None, None],
        vec![None, None, e, None],
    ])?;
    let s = ReesMatrixSemigroup::new(g, matrix)?;
    println!("{} elements\n{}", s.size(), s.format_matrix());

    let report = rank_rms(&s)?;
    println!("{}", report.machine_line());

    let gens = minimal_generating_set(&s)?;
    for x in &gens {
        println!("  {}", s.format_element(x));
    }
    let all: Vec<_> = s.elements().collect();
    println!("generates: {}", verify_generates(&s, &all, &gens, DEFAULT_PRODUCT_CAP)?);
    Ok(())
}
