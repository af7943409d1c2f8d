//! Graham normal form: spanning forest, normalizing potentials and the
//! block-diagonal layout.

use std::sync::Arc;

use semigroup_rank::graham::{graham_normal_form, idempotent_generated};
use semigroup_rank::group::FiniteGroup;
use semigroup_rank::rees::{ReesMatrixSemigroup, StructureMatrix};

fn main() -> semigroup_rank::Result<()> {
    let g = Arc::new(FiniteGroup::dihedral(4)?);
    let x = |s: &str| g.parse_literal(s).map(Some);
    let matrix = StructureMatrix::from_rows(vec![
        vec![x("(1 2 3 4)")?, None, x("(2 4)")?],
        vec![None, x("(1 3)")?, None],
        vec![x("(1 3)(2 4)")?, None, x("e")?],
    ])?;
    let s = ReesMatrixSemigroup::new(g.clone(), matrix)?;
    let gnf = graham_normal_form(&s)?;
    print!("{}", gnf.describe());

    println!("forest edges (λ, i): {:?}", gnf.forest.edges());
    let ig = idempotent_generated(&gnf);
    println!("idempotent-generated part: {} of {} elements", ig.size(), s.size());
    Ok(())
}
