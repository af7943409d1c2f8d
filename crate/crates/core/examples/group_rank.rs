//! Ranks, relative ranks and subgroup closure in small groups.

use semigroup_rank::group::FiniteGroup;

fn main() -> semigroup_rank::Result<()> {
    for g in [
        FiniteGroup::symmetric(4)?,
        FiniteGroup::dihedral(5)?,
        FiniteGroup::cyclic(12)?,
    ] {
        let r = g.rank();
        let gens: Vec<String> = r.witness.iter().map(|x| g.literal(x)).collect();
        println!("{g}: rank {} generated by {}", r.value, gens.join(", "));
    }

    let s4 = FiniteGroup::symmetric(4)?;
    let a = s4.parse_literal("(1 2 3)")?;
    let b = s4.parse_literal("(1 2)")?;
    // Products read left to right: apply (1 2 3) first.
    println!("(1 2 3)(1 2) = {}", s4.literal(s4.multiply(a, b)));

    let h = s4.subgroup_closure(&s4.subset([a]));
    let rr = s4.relative_rank(&h);
    println!(
        "rank(S4 : <(1 2 3)>) = {} using {}",
        rr.value,
        rr.witness.iter().map(|x| s4.literal(x)).collect::<Vec<_>>().join(", ")
    );
    Ok(())
}
