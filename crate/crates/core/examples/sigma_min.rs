//! σ_min: how many extra group elements a family of conjugated subgroups
//! needs to generate the whole group.

use semigroup_rank::group::FiniteGroup;
use semigroup_rank::rank::{sigma_min_with, SigmaSearch, DEFAULT_TUPLE_CAP};

fn main() -> semigroup_rank::Result<()> {
    let g = FiniteGroup::symmetric(4)?;
    let sub = |lits: &[&str]| -> semigroup_rank::Result<_> {
        let xs = lits.iter().map(|l| g.parse_literal(l)).collect::<Result<Vec<_>, _>>()?;
        Ok(g.subgroup_closure(&g.subset(xs)))
    };
    let families = [
        vec![sub(&[])?, sub(&[])?],
        vec![sub(&["(1 2)"])?, sub(&["(1 2)"])?],
        vec![sub(&["(1 2)"])?, sub(&["(1 2)"])?, sub(&["(1 2)"])?],
        vec![sub(&["(1 2 3 4)"])?, sub(&["(1 2)"])?],
    ];
    for hs in &families {
        let orders: Vec<usize> = hs.iter().map(|h| h.len()).collect();
        let r = sigma_min_with(&g, hs, SigmaSearch::ConjugacyClasses, DEFAULT_TUPLE_CAP)?;
        let conj: Vec<String> = r.conjugators.iter().map(|&x| g.literal(x)).collect();
        let extra: Vec<String> = r.complement.iter().map(|x| g.literal(x)).collect();
        println!(
            "orders {orders:?}: σ_min = {} via [{}] plus {{{}}}",
            r.value,
            conj.join(", "),
            extra.join(", ")
        );
    }
    Ok(())
}
