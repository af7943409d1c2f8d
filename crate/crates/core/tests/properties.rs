use std::sync::Arc;

use proptest::prelude::*;
use semigroup_rank::cli::parse_input;
use semigroup_rank::group::{FiniteGroup, GroupElement};
use semigroup_rank::oracle::{
    closure, coordinatize, exact_rank, green_structure, principal_factor, verify_generates, AbstractSemigroup,
    DEFAULT_PRODUCT_CAP, DEFAULT_SEARCH_BUDGET,
};
use semigroup_rank::perm::Permutation;
use semigroup_rank::rank::{minimal_generating_set, rank_rms};
use semigroup_rank::rees::{ReesMatrixSemigroup, RmsElement, StructureMatrix};
use semigroup_rank::selftest::{check_invariance, check_normal_form, random_sab, small_groups};
use semigroup_rank::transform::{sab_minimal_generators, sab_rank, Transformation};

fn group_strategy(max_order: usize) -> impl Strategy<Value = Arc<FiniteGroup>> {
    let groups: Vec<Arc<FiniteGroup>> = small_groups().into_iter().filter(|g| g.order() <= max_order).collect();
    proptest::sample::select(groups)
}

/// Rees matrix semigroups with `|Λ|, |I| ≤ dim`; `None` entries are zero.
fn rms_strategy(max_order: usize, dim: usize, regular: bool) -> impl Strategy<Value = ReesMatrixSemigroup> {
    (group_strategy(max_order), 1..=dim, 1..=dim).prop_flat_map(move |(g, lambdas, is)| {
        let order = g.order();
        let entry = prop_oneof![1 => Just(None), 2 => (0..order).prop_map(Some)];
        proptest::collection::vec(proptest::collection::vec(entry, is), lambdas).prop_filter_map(
            "needs a regular matrix",
            move |rows| {
                let rows: Vec<Vec<Option<GroupElement>>> = rows
                    .into_iter()
                    .map(|r| r.into_iter().map(|e| e.map(GroupElement::new)).collect())
                    .collect();
                let m = StructureMatrix::from_rows(rows).ok()?;
                if regular && !m.is_regular() {
                    return None;
                }
                ReesMatrixSemigroup::new(g.clone(), m).ok()
            },
        )
    })
}

fn perm_strategy(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n as u8).collect::<Vec<u8>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn permutations_form_a_group(a in perm_strategy(6), b in perm_strategy(6), c in perm_strategy(6)) {
        prop_assert_eq!(a.then(&b).then(&c), a.then(&b.then(&c)));
        prop_assert!(a.then(&a.inverse()).is_identity());
        for x in 0..6 {
            prop_assert_eq!(a.then(&b).apply(x), b.apply(a.apply(x)));
        }
        prop_assert_eq!(Permutation::parse(&a.to_string(), 6).unwrap(), a);
    }

    #[test]
    fn relative_rank_witness_completes_the_subgroup(g in group_strategy(8), seed in 0usize..64) {
        let x = GroupElement::new(seed % g.order());
        let h = g.subgroup_closure(&g.subset([x]));
        let rr = g.relative_rank(&h);
        prop_assert_eq!(rr.witness.len(), rr.value);
        prop_assert_eq!(g.subgroup_closure(&h.union(&rr.witness)), g.whole());
        prop_assert!(rr.value <= g.rank().value);
        let y = GroupElement::new((seed * 7) % g.order());
        let conj = g.conjugate_subset(&h, y);
        prop_assert_eq!(g.subgroup_closure(&conj), conj);
    }

    #[test]
    fn generating_sets_have_rank_size(s in rms_strategy(6, 4, false)) {
        let report = rank_rms(&s).unwrap();
        let gens = minimal_generating_set(&s).unwrap();
        prop_assert_eq!(gens.len(), report.value);
        let all: Vec<RmsElement> = s.elements().collect();
        prop_assert!(verify_generates(&s, &all, &gens, DEFAULT_PRODUCT_CAP).unwrap());
    }

    #[test]
    fn normal_form_is_an_isomorphism(s in rms_strategy(8, 5, false)) {
        prop_assert!(check_normal_form(&s).is_ok(), "{:?}", check_normal_form(&s));
    }

    #[test]
    fn rank_is_invariant(s in rms_strategy(8, 5, false), seed in any::<u64>()) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        prop_assert!(check_invariance(&mut rng, &s).is_ok());
    }

    #[test]
    fn regular_matrices_give_one_r_class_per_index(s in rms_strategy(6, 4, true)) {
        let table = AbstractSemigroup::from_elements(&s, s.elements().collect()).unwrap();
        let green = green_structure(&table);
        let zero = table.zero().unwrap();
        let nonzero_r: std::collections::BTreeSet<usize> =
            (0..table.len()).filter(|&x| x != zero).map(|x| green.r_of[x]).collect();
        let nonzero_l: std::collections::BTreeSet<usize> =
            (0..table.len()).filter(|&x| x != zero).map(|x| green.l_of[x]).collect();
        prop_assert_eq!(nonzero_r.len(), s.i_count());
        prop_assert_eq!(nonzero_l.len(), s.lambda_count());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn exact_rank_matches_formula_on_principal_factor(s in rms_strategy(3, 3, true)) {
        let table = AbstractSemigroup::from_elements(&s, s.elements().collect()).unwrap();
        let exact = exact_rank(&table, None, DEFAULT_SEARCH_BUDGET).unwrap();
        prop_assert_eq!(exact.value, rank_rms(&s).unwrap().value);
        let green = green_structure(&table);
        let (j, _) = green.maximal_classes().next().unwrap();
        let pf = principal_factor(&table, &green, j);
        let c = coordinatize(&table, &green, &pf).unwrap().unwrap();
        prop_assert_eq!(rank_rms(&c.rms).unwrap().value, exact.value);
    }

    #[test]
    fn sab_generators_have_rank_size(seed in any::<u64>(), n in 4usize..=5) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let inst = random_sab(&mut rng, n, 3);
        let gens = sab_minimal_generators(&inst, DEFAULT_PRODUCT_CAP).unwrap();
        prop_assert_eq!(gens.len(), sab_rank(&inst).unwrap().value);
    }

    #[test]
    fn transformation_rank_is_image_size(images in proptest::collection::vec(0u8..6, 6)) {
        let t = Transformation::from_images(images).unwrap();
        prop_assert_eq!(t.rank(), t.image().len());
        prop_assert_eq!(t.kernel().weight(), t.rank());
        prop_assert_eq!(Transformation::parse(&t.to_string()).unwrap(), t);
    }

    #[test]
    fn idempotent_closure_is_idempotent_generated(s in rms_strategy(6, 4, false)) {
        let c = closure(&s, &s.idempotents(), DEFAULT_PRODUCT_CAP).unwrap();
        let gnf = semigroup_rank::graham::graham_normal_form(&s).unwrap();
        let ig = semigroup_rank::graham::idempotent_generated(&gnf);
        prop_assert_eq!(ig.size(), c.len());
        prop_assert!(c.iter().all(|x| ig.contains(x)));
    }

    #[test]
    fn input_text_round_trips(s in rms_strategy(6, 4, false)) {
        let m = s.matrix();
        let rows: Vec<String> = m
            .rows()
            .map(|r| r.iter().map(|e| e.map_or("0".to_string(), |x| format!("g{}", x.index()))).collect::<Vec<_>>().join(" "))
            .collect();
        let text = format!(
            "rms\ngroup {}\nmatrix {} {}\n{}\n",
            group_line(s.group()),
            m.lambda_count(),
            m.i_count(),
            rows.join("\n")
        );
        let job = parse_input(&text).unwrap();
        prop_assert_eq!(parse_input(&job.to_text()).unwrap().to_text(), job.to_text());
    }
}

/// `group` directive for the groups built by `small_groups`, written as a
/// multiplication table so that any of them can be fed back to the parser.
fn group_line(g: &FiniteGroup) -> String {
    let rows: Vec<String> = g
        .elements()
        .map(|a| g.table_row(a).map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
        .collect();
    format!("table {}\n{}", g.order(), rows.join("\n"))
}
