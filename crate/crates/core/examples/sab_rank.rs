//! S(A, B): the transversal graph, its rank and six generators replacing
//! all ninety.

use semigroup_rank::oracle::{closure, DEFAULT_PRODUCT_CAP};
use semigroup_rank::transform::{
    parse_subset, sab_generators, sab_minimal_generators, sab_rank, transversal_graph, FullTransformations,
    KernelPartition, SabInstance,
};

fn main() -> semigroup_rank::Result<()> {
    let n = 7;
    let images = ["1,2,3", "1,6,7", "5,6,7", "2,4,6", "1,2,5"]
        .iter()
        .map(|a| parse_subset(a, n))
        .collect::<Result<Vec<_>, _>>()?;
    let kernels = ["1,4,7|2,5|3,6", "1,2,3|4,5,6|7", "1,2|4,6,7|3,5"]
        .iter()
        .map(|b| KernelPartition::parse(b, n))
        .collect::<Result<Vec<_>, _>>()?;
    let inst = SabInstance::new(n, images, kernels)?;

    let graph = transversal_graph(&inst);
    println!("edges (image, kernel): {:?}", graph.edges());
    println!("{}", sab_rank(&inst)?.machine_line());

    let gens = sab_minimal_generators(&inst, DEFAULT_PRODUCT_CAP)?;
    for t in &gens {
        println!("  {t}");
    }
    let full = closure(&FullTransformations, &sab_generators(&inst), DEFAULT_PRODUCT_CAP)?;
    println!(
        "{} maps generated by {} of {}",
        full.len(),
        gens.len(),
        sab_generators(&inst).len()
    );
    Ok(())
}
