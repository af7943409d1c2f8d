//! Partial injections permuting each r-subset: the maximal J-classes force
//! C(n, r)·max(2, ⌊r/2⌋) generators.

use semigroup_rank::oracle::{
    maximal_jclass_lower_bound, maximal_jclass_witness, AbstractSemigroup, DEFAULT_PRODUCT_CAP,
};
use semigroup_rank::transform::{inverse_extremal, inverse_rank_bound, PartialInjections};

fn main() -> semigroup_rank::Result<()> {
    for (n, r) in [(4, 3), (5, 3), (5, 4)] {
        let gens = inverse_extremal(n, r)?;
        let s = AbstractSemigroup::generated_by(&PartialInjections, &gens, DEFAULT_PRODUCT_CAP)?;
        let bound = maximal_jclass_lower_bound(&s)?;
        let witness = maximal_jclass_witness(&s)?;
        println!(
            "n={n} r={r}: {} elements, bound {bound} (closed form {}), witness of {} generates: {}",
            s.len(),
            inverse_rank_bound(n, r),
            witness.len(),
            s.generates(&witness)
        );
    }
    if let Some(x) = inverse_extremal(4, 3)?.get(1) {
        println!("sample generator {x}");
    }
    Ok(())
}
