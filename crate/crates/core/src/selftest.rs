//! Acceptance checks, runnable from the library, the test suite and
//! `sgrank selftest`. Every check compares the rank machinery against
//! brute-force closure or exhaustive search; random instances come from a
//! fixed seed so runs are reproducible.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::Arc;
use std::time::{Duration, Instant};

use fixedbitset::FixedBitSet;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graham::{
    decompose, graham_normal_form, graham_normal_form_with, idempotent_generated, spanning_forest_from_edges, GhGraph,
};
use crate::group::{FiniteGroup, GroupElement, GroupSubset};
use crate::oracle::{
    self, exact_rank, green_structure, maximal_jclass_lower_bound, maximal_jclass_witness, AbstractSemigroup,
    DEFAULT_PRODUCT_CAP, DEFAULT_SEARCH_BUDGET,
};
use crate::perm::Permutation;
use crate::rank::{
    minimal_generating_set, rank_from_normal_form, rank_rms, RankOptions, SigmaMinSearch, SigmaSearch,
    DEFAULT_TUPLE_CAP,
};
use crate::rees::{ReesMatrixSemigroup, RmsElement, StructureMatrix};
use crate::transform::{
    inverse_extremal, inverse_rank_bound, knr, parse_subset, sab_generators, sab_minimal_generators, sab_principal_rms,
    sab_rank, stirling2, transversal_graph, FullTransformations, KernelPartition, PartialInjections, SabInstance,
};

const SEED: u64 = 0x5eed_2024;

#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub number: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "criterion {:>2} {:<28} {} ({}) [{:.2}s]",
            self.number,
            self.name,
            if self.passed { "PASS" } else { "FAIL" },
            self.detail,
            self.elapsed.as_secs_f64()
        )
    }
}

type Check = std::result::Result<String, String>;

fn timed(number: usize, name: &'static str, limit: Option<Duration>, f: impl FnOnce() -> Check) -> CriterionResult {
    let start = Instant::now();
    let outcome = f();
    let elapsed = start.elapsed();
    let (mut passed, mut detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    if let Some(limit) = limit {
        if elapsed > limit {
            passed = false;
            detail = format!("{detail}; over the {}s limit", limit.as_secs());
        }
    }
    CriterionResult {
        number,
        name,
        passed,
        detail,
        elapsed,
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: fmt::Display>(e: E) -> String {
    e.to_string()
}

/// The instance with `n = 7`, five 3-element images and three 3-class
/// kernels used throughout the docs and tests.
pub fn example_sab() -> SabInstance {
    let n = 7;
    let images = ["1,2,3", "1,6,7", "5,6,7", "2,4,6", "1,2,5"]
        .iter()
        .map(|s| parse_subset(s, n).expect("image"))
        .collect();
    let kernels = ["1,4,7|2,5|3,6", "1,2,3|4,5,6|7", "1,2|4,6,7|3,5"]
        .iter()
        .map(|s| KernelPartition::parse(s, n).expect("kernel"))
        .collect();
    SabInstance::new(n, images, kernels).expect("valid instance")
}

/// Groups of order at most 8 used for random instances.
pub fn small_groups() -> Vec<Arc<FiniteGroup>> {
    let perm = |s: &str, n: usize| Permutation::parse(s, n).expect("perm");
    let mut out: Vec<FiniteGroup> = (1..=8).map(|m| FiniteGroup::cyclic(m).expect("cyclic")).collect();
    out.push(FiniteGroup::symmetric(3).expect("S3"));
    out.push(FiniteGroup::dihedral(4).expect("D8"));
    out.push(FiniteGroup::from_permutations(4, &[perm("(1 2)", 4), perm("(3 4)", 4)], 8).expect("V4"));
    out.push(FiniteGroup::from_permutations(6, &[perm("(1 2)", 6), perm("(3 4 5 6)", 6)], 8).expect("C2xC4"));
    out.push(
        FiniteGroup::from_permutations(6, &[perm("(1 2)", 6), perm("(3 4)", 6), perm("(5 6)", 6)], 8).expect("C2^3"),
    );
    out.into_iter().map(Arc::new).collect()
}

/// A random Rees matrix semigroup over `group` with `|Λ|, |I| ≤ max_dim`.
pub fn random_rms<R: Rng>(rng: &mut R, group: Arc<FiniteGroup>, max_dim: usize) -> ReesMatrixSemigroup {
    let lambdas = rng.gen_range(1..=max_dim);
    let is = rng.gen_range(1..=max_dim);
    let zero_chance = [0.0, 0.3, 0.6, 0.85][rng.gen_range(0..4)];
    let rows = (0..lambdas)
        .map(|_| {
            (0..is)
                .map(|_| {
                    if rng.gen_bool(zero_chance) {
                        None
                    } else {
                        Some(GroupElement::new(rng.gen_range(0..group.order())))
                    }
                })
                .collect()
        })
        .collect();
    ReesMatrixSemigroup::new(group, StructureMatrix::from_rows(rows).expect("matrix")).expect("rms")
}

/// A random `S(A, B)` instance on `n` points with `r`-element images and
/// `r`-class kernels.
pub fn random_sab<R: Rng>(rng: &mut R, n: usize, r: usize) -> SabInstance {
    let points: Vec<usize> = (0..n).collect();
    let image_count = rng.gen_range(1..=4);
    let kernel_count = rng.gen_range(1..=4);
    let mut images: Vec<Vec<usize>> = Vec::new();
    for _ in 0..image_count {
        let mut a: Vec<usize> = points.choose_multiple(rng, r).copied().collect();
        a.sort_unstable();
        if !images.contains(&a) {
            images.push(a);
        }
    }
    let mut kernels: Vec<KernelPartition> = Vec::new();
    for _ in 0..kernel_count {
        let mut labels: Vec<usize> = (0..r).collect();
        labels.extend((r..n).map(|_| rng.gen_range(0..r)));
        labels.shuffle(rng);
        let b = KernelPartition::from_labels(&labels);
        if !kernels.contains(&b) {
            kernels.push(b);
        }
    }
    SabInstance::new(n, images, kernels).expect("valid random instance")
}

fn all_elements(s: &ReesMatrixSemigroup) -> Vec<RmsElement> {
    s.elements().collect()
}

fn table(s: &ReesMatrixSemigroup) -> std::result::Result<AbstractSemigroup<RmsElement>, String> {
    AbstractSemigroup::from_elements(s, all_elements(s)).map_err(err)
}

pub fn criterion_1() -> CriterionResult {
    timed(1, "example S(A,B) end to end", Some(Duration::from_secs(60)), || {
        let inst = example_sab();
        let rank = sab_rank(&inst).map_err(err)?;
        ensure(rank.value == 6, || format!("sab rank {} instead of 6", rank.value))?;
        let all = sab_generators(&inst);
        ensure(all.len() == 90, || format!("{} generators instead of 90", all.len()))?;
        let gens = sab_minimal_generators(&inst, DEFAULT_PRODUCT_CAP).map_err(err)?;
        ensure(gens.len() == 6, || format!("{} generators emitted", gens.len()))?;
        let full = oracle::closure(&FullTransformations, &all, DEFAULT_PRODUCT_CAP).map_err(err)?;
        let small = oracle::closure(&FullTransformations, &gens, DEFAULT_PRODUCT_CAP).map_err(err)?;
        ensure(full == small, || "closure of the 6 generators differs".into())?;
        Ok(format!("rank 6, 6 generators close to all {} elements", full.len()))
    })
}

pub fn criterion_2() -> CriterionResult {
    timed(2, "transversal graph statistics", None, || {
        let graph = transversal_graph(&example_sab());
        let s = graph.stats;
        ensure((s.v0, s.v_plus_a, s.v_plus_b, s.max_degree) == (2, 4, 2, 3), || {
            format!("got {s:?}")
        })?;
        Ok(format!(
            "v0={} v+A={} v+B={} max degree {}",
            s.v0, s.v_plus_a, s.v_plus_b, s.max_degree
        ))
    })
}

fn brandt(group: Arc<FiniteGroup>, size: usize) -> ReesMatrixSemigroup {
    let p = StructureMatrix::identity(size, group.identity()).expect("identity matrix");
    ReesMatrixSemigroup::new(group, p).expect("brandt")
}

pub fn criterion_3() -> CriterionResult {
    timed(3, "Brandt semigroup over S_3", Some(Duration::from_secs(30)), || {
        let s = brandt(Arc::new(FiniteGroup::symmetric(3).map_err(err)?), 4);
        let formula = rank_rms(&s).map_err(err)?.value;
        let exact = exact_rank(&table(&s)?, None, DEFAULT_SEARCH_BUDGET).map_err(err)?;
        ensure(formula == 5 && exact.value == 5, || {
            format!("formula {formula}, exhaustive {}", exact.value)
        })?;
        Ok(format!(
            "formula 5, exhaustive 5 from coverage bound {}",
            exact.lower_bound
        ))
    })
}

/// A 3×5 matrix over `S_3`, all rows and columns linked, with entries
/// `(1 2)` and `(1 2 3)` beside identities.
pub fn three_by_five() -> ReesMatrixSemigroup {
    let g = FiniteGroup::symmetric(3).expect("S3");
    let e = Some(g.identity());
    let t = Some(g.parse_literal("(1 2)").expect("t"));
    let c = Some(g.parse_literal("(1 2 3)").expect("c"));
    let rows = vec![
        vec![e, e, e, e, e],
        vec![t, None, e, None, e],
        vec![c, e, None, e, None],
    ];
    ReesMatrixSemigroup::new(Arc::new(g), StructureMatrix::from_rows(rows).expect("matrix")).expect("rms")
}

pub fn criterion_4() -> CriterionResult {
    timed(4, "idempotent-generated 3x5", Some(Duration::from_secs(10)), || {
        let s = three_by_five();
        let gnf = graham_normal_form(&s).map_err(err)?;
        ensure(gnf.block_count() == 1, || "matrix is not connected".into())?;
        let value = rank_rms(&s).map_err(err)?.value;
        let witness = minimal_generating_set(&s).map_err(err)?;
        let ok = oracle::verify_generates(&s, &all_elements(&s), &witness, DEFAULT_PRODUCT_CAP).map_err(err)?;
        ensure(value == 5 && witness.len() == 5 && ok, || {
            format!("rank {value}, witness of {} generates: {ok}", witness.len())
        })?;
        Ok("rank 5 with a verified 5-element witness".into())
    })
}

pub fn criterion_5() -> CriterionResult {
    timed(5, "zero structure matrix", None, || {
        let cases = [
            (FiniteGroup::cyclic(2), 1, 2, 4),
            (FiniteGroup::symmetric(3), 2, 2, 24),
            (FiniteGroup::cyclic(1), 3, 3, 9),
        ];
        let mut seen = Vec::new();
        for (group, lambdas, is, expected) in cases {
            let group = Arc::new(group.map_err(err)?);
            let name = group.name().to_string();
            let s = ReesMatrixSemigroup::new(group, StructureMatrix::zero(lambdas, is).map_err(err)?).map_err(err)?;
            let formula = rank_rms(&s).map_err(err)?.value;
            let exact = exact_rank(&table(&s)?, None, DEFAULT_SEARCH_BUDGET).map_err(err)?.value;
            ensure(formula == expected && exact == expected, || {
                format!("{name} {is}x{lambdas}: formula {formula}, exhaustive {exact}, expected {expected}")
            })?;
            seen.push(expected.to_string());
        }
        Ok(format!("ranks {} agree with exhaustive search", seen.join(", ")))
    })
}

/// Checks the normal form of one instance; returns a reason on failure.
/// Returns the number of product pairs compared.
pub fn check_normal_form(s: &ReesMatrixSemigroup) -> std::result::Result<usize, String> {
    let gnf = graham_normal_form(s).map_err(err)?;
    let g = s.group();
    let n = &gnf.normalized;
    let elements = all_elements(s);
    let mapped: Vec<RmsElement> = elements.iter().map(|x| gnf.witness.map(g, x)).collect();
    let distinct: HashSet<&RmsElement> = mapped.iter().collect();
    ensure(distinct.len() == elements.len(), || {
        "witness map is not injective".into()
    })?;
    for (x, fx) in elements.iter().zip(&mapped) {
        ensure(gnf.witness.unmap(g, fx) == *x, || "unmap is not the inverse".into())?;
        for (y, fy) in elements.iter().zip(&mapped) {
            ensure(gnf.witness.map(g, &s.multiply(x, y)) == n.multiply(fx, fy), || {
                format!("products differ at {} {}", s.format_element(x), s.format_element(y))
            })?;
        }
    }
    for (lambda, i) in gnf.forest.edges() {
        ensure(n.matrix().entry(lambda, i) == Some(g.identity()), || {
            format!(
                "forest edge ({}, {}) is not labelled by the identity",
                lambda + 1,
                i + 1
            )
        })?;
    }
    ensure(gnf.verify_shape(), || "block layout is not block diagonal".into())?;
    let expected = oracle::closure(s, &s.idempotents(), DEFAULT_PRODUCT_CAP).map_err(err)?;
    let mut got = idempotent_generated(&gnf).elements();
    got.sort_unstable();
    ensure(got == expected, || {
        format!(
            "idempotent-generated part has {} elements, closure {}",
            got.len(),
            expected.len()
        )
    })?;
    Ok(elements.len() * elements.len())
}

pub fn criterion_6() -> CriterionResult {
    timed(6, "normal form properties", None, || {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 6);
        let groups = small_groups();
        let trials = 120;
        let mut pairs = 0;
        for t in 0..trials {
            let group = groups.choose(&mut rng).expect("groups").clone();
            let s = random_rms(&mut rng, group, 5);
            pairs += check_normal_form(&s)
                .map_err(|e| format!("trial {t} over {}: {e}\n{}", s.group(), s.format_matrix()))?;
        }
        Ok(format!("{trials} random instances, {pairs} product pairs, no failures"))
    })
}

pub fn criterion_7() -> CriterionResult {
    timed(7, "S(A,B) rank vs Rees rank", Some(Duration::from_secs(300)), || {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 7);
        let trials = 60;
        for t in 0..trials {
            let n = rng.gen_range(4..=6);
            let inst = random_sab(&mut rng, n, 3);
            let direct = sab_rank(&inst).map_err(err)?.value;
            let principal = sab_principal_rms(&inst).map_err(err)?;
            let via_rms = rank_rms(&principal.rms).map_err(err)?.value;
            ensure(direct == via_rms, || {
                format!("trial {t}: {direct} vs {via_rms} on {inst:?}")
            })?;
        }
        Ok(format!("{trials} random instances agree"))
    })
}

pub fn criterion_8() -> CriterionResult {
    timed(8, "K(4,2)", None, || {
        let gens = knr(4, 2).map_err(err)?;
        let s = AbstractSemigroup::generated_by(&FullTransformations, &gens, DEFAULT_PRODUCT_CAP).map_err(err)?;
        let green = green_structure(&s);
        let maximal: Vec<_> = green.maximal_classes().collect();
        ensure(maximal.len() == 1, || format!("{} maximal classes", maximal.len()))?;
        let kernels = maximal[0].1.r_classes.len();
        let witness = maximal_jclass_witness(&s).map_err(err)?;
        ensure(s.generates(&witness), || "witness does not generate".into())?;
        let expected = stirling2(4, 2) as usize;
        ensure(kernels == expected && witness.len() == expected, || {
            format!("{kernels} kernel classes, witness of {}", witness.len())
        })?;
        Ok(format!(
            "rank 7: {kernels} kernels force 7 generators and a 7-element set generates"
        ))
    })
}

pub fn criterion_9() -> CriterionResult {
    timed(9, "inverse extremal n=4 r=3", None, || {
        let gens = inverse_extremal(4, 3).map_err(err)?;
        let s = AbstractSemigroup::generated_by(&PartialInjections, &gens, DEFAULT_PRODUCT_CAP).map_err(err)?;
        let bound = maximal_jclass_lower_bound(&s).map_err(err)?;
        let expected = inverse_rank_bound(4, 3) as usize;
        ensure(bound == expected && expected == 8, || {
            format!("bound {bound}, expected {expected}")
        })?;
        let witness = maximal_jclass_witness(&s).map_err(err)?;
        let elems: Vec<_> = witness.iter().map(|&id| s.element(id).clone()).collect();
        let ok =
            oracle::verify_generates(&PartialInjections, s.elements(), &elems, DEFAULT_PRODUCT_CAP).map_err(err)?;
        ensure(ok && witness.len() == 8, || {
            format!("witness of {} generates: {ok}", witness.len())
        })?;
        Ok(format!(
            "bound 8 met by an 8-element witness of a {}-element semigroup",
            s.len()
        ))
    })
}

/// Every subgroup of `g`, found as closures of pairs of elements.
pub fn two_generated_subgroups(g: &FiniteGroup) -> Vec<GroupSubset> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for a in g.elements() {
        for b in g.elements() {
            let bits = g.closure_bits(&[a, b]);
            if seen.insert(bits.clone()) {
                out.push(GroupSubset::from_bits(bits, true));
            }
        }
    }
    out
}

fn tuples(count: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..count).map(move |k| {
                    let mut t = t.clone();
                    t.push(k);
                    t
                })
            })
            .collect();
    }
    out
}

fn sigma_checks(g: &FiniteGroup, subgroups: &[GroupSubset]) -> std::result::Result<usize, String> {
    let whole = g.whole();
    let group_rank = g.rank().value;
    let mut pruned = SigmaMinSearch::new(g);
    let mut unpruned = SigmaMinSearch::new(g);
    let mut generates: HashMap<FixedBitSet, bool> = HashMap::new();
    let mut checked = 0;
    for len in 1..=3 {
        for t in tuples(subgroups.len(), len) {
            let hs: Vec<GroupSubset> = t.iter().map(|&k| subgroups[k].clone()).collect();
            let a = pruned
                .run(&hs, SigmaSearch::ConjugacyClasses, DEFAULT_TUPLE_CAP)
                .map_err(err)?;
            let b = unpruned
                .run(&hs, SigmaSearch::Exhaustive, DEFAULT_TUPLE_CAP)
                .map_err(err)?;
            ensure(a.value == b.value, || {
                format!("pruned {} vs unpruned {}", a.value, b.value)
            })?;
            ensure(a.value <= group_rank, || {
                format!("σ_min {} above rank {group_rank}", a.value)
            })?;
            // Does some conjugated union (first entry unconjugated) generate?
            let mut any = false;
            for conj in tuples(g.order(), len - 1) {
                let mut union = hs[0].clone();
                for (h, &x) in hs[1..].iter().zip(&conj) {
                    union = union.union(&g.conjugate_subset(h, GroupElement::new(x)));
                }
                let gen = *generates
                    .entry(union.bits().clone())
                    .or_insert_with(|| g.subgroup_closure(&union) == whole);
                if gen {
                    any = true;
                    break;
                }
            }
            ensure((a.value == 0) == any, || {
                format!("σ_min {} but a generating conjugate union exists: {any}", a.value)
            })?;
            checked += 1;
        }
    }
    Ok(checked)
}

pub fn criterion_10() -> CriterionResult {
    timed(10, "sigma_min properties", Some(Duration::from_secs(300)), || {
        let mut total = 0;
        for r in [3, 4] {
            let g = FiniteGroup::symmetric(r).map_err(err)?;
            let subgroups = two_generated_subgroups(&g);
            let expected = if r == 3 { 6 } else { 30 };
            ensure(subgroups.len() == expected, || {
                format!("S_{r} has {} subgroups", subgroups.len())
            })?;
            total += sigma_checks(&g, &subgroups).map_err(|e| format!("S_{r}: {e}"))?;
        }
        Ok(format!("{total} subgroup tuples checked"))
    })
}

fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// Checks that the rank of `s` survives relabelling, automorphisms,
/// transposition and a different spanning forest.
pub fn check_invariance<R: Rng>(rng: &mut R, s: &ReesMatrixSemigroup) -> std::result::Result<usize, String> {
    let base = rank_rms(s).map_err(err)?.value;
    let g = s.group();
    let m = s.matrix();
    let same = |label: &str, other: StructureMatrix| -> std::result::Result<(), String> {
        let value = rank_rms(&s.with_matrix(other).map_err(err)?).map_err(err)?.value;
        ensure(value == base, || format!("{label}: {value} instead of {base}"))
    };
    same(
        "row and column permutation",
        m.permute(
            &random_permutation(rng, m.lambda_count()),
            &random_permutation(rng, m.i_count()),
        ),
    )?;
    let x = GroupElement::new(rng.gen_range(0..g.order()));
    same("inner automorphism", m.map_entries(|a| g.conjugate(x, a)))?;
    same(
        "inversion composed with transpose",
        m.transpose().map_entries(|a| g.inverse(a)),
    )?;
    same("transpose", m.transpose())?;
    // Power maps a -> a^k with k coprime to the order are automorphisms of
    // a cyclic group.
    let order = g.order();
    if let Some(gen) = g.elements().find(|&a| g.closure_bits(&[a]).count_ones(..) == order) {
        {
            let coprime: Vec<usize> = (1..order.max(2)).filter(|k| gcd(*k, order) == 1).collect();
            let k = *coprime.choose(rng).unwrap_or(&1);
            let mut power = vec![g.identity(); order];
            let mut a = g.identity();
            let mut ak = g.identity();
            let step = (0..k).fold(g.identity(), |acc, _| g.multiply(acc, gen));
            for _ in 0..order {
                power[a.index()] = ak;
                a = g.multiply(a, gen);
                ak = g.multiply(ak, step);
            }
            same("power automorphism", m.map_entries(|a| power[a.index()]))?;
        }
    }
    let graph = GhGraph::build(s);
    let mut order: Vec<usize> = (0..graph.edges().len()).collect();
    order.shuffle(rng);
    let decomposition = decompose(&graph);
    let forest = spanning_forest_from_edges(&graph, &decomposition, &order).map_err(err)?;
    let gnf = graham_normal_form_with(s, decomposition, forest).map_err(err)?;
    if !s.matrix().is_zero() {
        let value = rank_from_normal_form(&gnf, &RankOptions::default()).map_err(err)?.value;
        ensure(value == base, || {
            format!("other spanning forest: {value} instead of {base}")
        })?;
    }
    Ok(base)
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn criterion_11() -> CriterionResult {
    timed(11, "rank invariance", None, || {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 11);
        let groups = small_groups();
        let trials = 60;
        for t in 0..trials {
            let group = groups.choose(&mut rng).expect("groups").clone();
            let s = random_rms(&mut rng, group, 5);
            check_invariance(&mut rng, &s)
                .map_err(|e| format!("trial {t} over {}: {e}\n{}", s.group(), s.format_matrix()))?;
        }
        Ok(format!("{trials} random instances, no failures"))
    })
}

/// All criteria in order.
pub fn run_all() -> Vec<CriterionResult> {
    vec![
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(),
        criterion_8(),
        criterion_9(),
        criterion_10(),
        criterion_11(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subgroup_counts() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert_eq!(two_generated_subgroups(&s3).len(), 6);
    }

    #[test]
    fn random_instances_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            let inst = random_sab(&mut rng, 5, 3);
            assert_eq!(inst.r(), 3);
        }
        let groups = small_groups();
        assert!(groups.iter().all(|g| g.order() <= 8));
    }
}
