//! K(n, r), the maps of rank at most r: its rank equals the number of
//! r-class partitions, since every kernel class needs its own generator.

use semigroup_rank::oracle::{green_structure, maximal_jclass_witness, AbstractSemigroup, DEFAULT_PRODUCT_CAP};
use semigroup_rank::transform::{knr, stirling2, FullTransformations};

fn main() -> semigroup_rank::Result<()> {
    for (n, r) in [(3, 2), (4, 2), (4, 3)] {
        let s = AbstractSemigroup::generated_by(&FullTransformations, &knr(n, r)?, DEFAULT_PRODUCT_CAP)?;
        let green = green_structure(&s);
        let kernels: usize = green.maximal_classes().map(|(_, c)| c.r_classes.len()).sum();
        let witness = maximal_jclass_witness(&s)?;
        println!(
            "K({n},{r}): {} maps, {kernels} kernels, S({n},{r}) = {}, witness of {} generates: {}",
            s.len(),
            stirling2(n, r),
            witness.len(),
            s.generates(&witness)
        );
    }
    Ok(())
}
