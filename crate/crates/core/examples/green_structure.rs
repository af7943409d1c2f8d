//! Green's relations and exact rank of a small semigroup by brute force.

use std::sync::Arc;

use semigroup_rank::group::FiniteGroup;
use semigroup_rank::oracle::{exact_rank, green_structure, AbstractSemigroup, DEFAULT_SEARCH_BUDGET};
use semigroup_rank::rees::{ReesMatrixSemigroup, StructureMatrix};

fn main() -> semigroup_rank::Result<()> {
    let g = Arc::new(FiniteGroup::symmetric(3)?);
    let s = ReesMatrixSemigroup::new(g.clone(), StructureMatrix::identity(4, g.identity())?)?;
    let table = AbstractSemigroup::from_elements(&s, s.elements().collect())?;
    let green = green_structure(&table);
    for (j, class) in green.j_classes.iter().enumerate() {
        println!(
            "J{j}: {} elements, {} R-classes, {} L-classes, {} idempotents, regular {}, maximal {}",
            class.members.len(),
            class.r_classes.len(),
            class.l_classes.len(),
            class.idempotents.len(),
            class.regular,
            class.maximal
        );
    }
    let exact = exact_rank(&table, None, DEFAULT_SEARCH_BUDGET)?;
    let witness: Vec<String> = exact
        .witness
        .iter()
        .map(|&id| s.format_element(table.element(id)))
        .collect();
    println!(
        "exact rank {} (search started at {}): {}",
        exact.value,
        exact.lower_bound,
        witness.join(" | ")
    );
    Ok(())
}
