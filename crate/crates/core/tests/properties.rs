use std::collections::BTreeMap;
use std::sync::OnceLock;

use proptest::prelude::*;

use kirillov::classification::{depth, heisenberg_quotient, is_character, metaplectic_degree_bound, BoundReason, DegreeBound, DepthClass};
use kirillov::degeneration::{
    check_horizontal, check_simple, cocharacter_limit, horizontal_degenerations, levi_orbit_stabilizer_lie,
    stabilizer_monotonicity_check, RootDatum,
};
use kirillov::exact::{frac, is_zero_vec, neg_vec, rat, Rational, Subspace};
use kirillov::lie::catalog;
use kirillov::orbits::{
    canonical_form, coadjoint_act, conjugate_functional, dual_functional, n_stabilizer, orbit_dimension, replay,
    same_orbit, skew_form, torus_conjugate,
};
use kirillov::polarization::{is_polarization, is_subordinate, stabilizes_flag, vergne_polarization};
use kirillov::{LeviAction, LieAlgebra};

const CASES: u32 = 200;

fn catalog_names() -> Vec<&'static str> {
    vec!["gl_upper:3", "gl_upper:4", "gl_upper:5", "sp:2", "sp:3", "heis:1", "heis:2", "heis:3"]
}

fn entry(name: &str) -> &'static catalog::CatalogEntry {
    static ENTRIES: OnceLock<BTreeMap<&'static str, catalog::CatalogEntry>> = OnceLock::new();
    let entries = ENTRIES.get_or_init(|| catalog_names().into_iter().map(|n| (n, catalog::lookup(n).unwrap())).collect());
    &entries[name]
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| frac(n, d))
}

fn vector(dim: usize) -> impl Strategy<Value = Vec<Rational>> {
    proptest::collection::vec(small_rational(), dim)
}

/// A catalog entry together with a random functional and a random algebra element.
fn algebra_with_pair() -> impl Strategy<Value = (String, Vec<Rational>, Vec<Rational>)> {
    proptest::sample::select(catalog_names()).prop_flat_map(|name| {
        let dim = entry(name).algebra.dim();
        (Just(name.to_string()), vector(dim), vector(dim))
    })
}

fn algebra_with_functional() -> impl Strategy<Value = (String, Vec<Rational>)> {
    proptest::sample::select(catalog_names()).prop_flat_map(|name| {
        let dim = entry(name).algebra.dim();
        (Just(name.to_string()), vector(dim))
    })
}

/// A complete flag refining the lower central series, with each layer ordered by
/// the sort keys in `keys`.
fn refined_flag(alg: &LieAlgebra, keys: &[u32]) -> Vec<Subspace> {
    let series = alg.lower_central_series();
    let mut flag = Vec::new();
    let mut span = Subspace::zero(alg.dim());
    let mut offset = 0;
    for term in series.iter().rev().skip(1) {
        let mut filtered = Vec::new();
        let mut grow = span.clone();
        for v in term.basis() {
            if !grow.contains(&v) {
                grow = grow.sum(&Subspace::span(alg.dim(), vec![v.clone()]));
                filtered.push(v.clone());
            }
        }
        let mut order: Vec<usize> = (0..filtered.len()).collect();
        order.sort_by_key(|&i| (keys[(offset + i) % keys.len()], i));
        offset += filtered.len();
        for i in order {
            span = span.sum(&Subspace::span(alg.dim(), vec![filtered[i].clone()]));
            flag.push(span.clone());
        }
    }
    flag
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(CASES))]

    #[test]
    fn skew_form_rank_is_even((name, psi) in algebra_with_functional()) {
        let alg = &entry(&name).algebra;
        let form = skew_form(&alg, &psi);
        prop_assert!(form.is_antisymmetric());
        prop_assert_eq!(form.rank() % 2, 0);
    }

    #[test]
    fn orbit_and_stabilizer_dims_add_up((name, psi) in algebra_with_functional()) {
        let alg = &entry(&name).algebra;
        prop_assert_eq!(orbit_dimension(&alg, &psi) + n_stabilizer(&alg, &psi).dim(), alg.dim());
    }

    #[test]
    fn vergne_output_is_a_polarization(
        (name, psi) in algebra_with_functional(),
        keys in proptest::collection::vec(0u32..1000, 16),
    ) {
        let alg = &entry(&name).algebra;
        let flag = refined_flag(&alg, &keys);
        let pol = vergne_polarization(&alg, &psi, &flag).unwrap();
        prop_assert!(pol.subordinate_certificate && pol.maximal_certificate);
        prop_assert!(is_polarization(&alg, &psi, &pol.subspace).unwrap());
        prop_assert_eq!(2 * pol.subspace.dim(), 2 * alg.dim() - orbit_dimension(&alg, &psi));
    }

    #[test]
    fn coadjoint_points_are_found_with_replayable_witness((name, psi, y) in algebra_with_pair()) {
        let alg = &entry(&name).algebra;
        let target = coadjoint_act(&alg, &y, &psi);
        let witness = same_orbit(&alg, &psi, &target).unwrap();
        prop_assert!(witness.is_some());
        prop_assert_eq!(replay(&alg, &witness.unwrap(), &psi), target);
    }

    #[test]
    fn canonical_form_is_idempotent_and_orbit_constant((name, psi, y) in algebra_with_pair()) {
        let alg = &entry(&name).algebra;
        let canon = canonical_form(&alg, &psi);
        prop_assert_eq!(canonical_form(&alg, &canon), canon.clone());
        prop_assert_eq!(canonical_form(&alg, &coadjoint_act(&alg, &y, &psi)), canon);
    }

    #[test]
    fn depth_is_sign_invariant((name, psi) in algebra_with_functional()) {
        let alg = &entry(&name).algebra;
        prop_assert_eq!(depth(&alg, &psi), depth(&alg, &neg_vec(&psi)));
        prop_assert!(depth(&alg, &psi).depth < alg.lower_central_series().len());
    }

    #[test]
    fn levi_stabilizer_is_a_subalgebra((name, psi) in algebra_with_functional()) {
        let e = entry(&name);
        let s = levi_orbit_stabilizer_lie(&e.algebra, &e.levi, &psi);
        prop_assert!(e.levi.is_subalgebra(&s));
        prop_assert!(s.contains_subspace(&e.levi.kernel_of_action()));
    }

    #[test]
    fn same_orbit_is_symmetric_and_transitive(
        (name, psi, y1) in algebra_with_pair(),
        seed in proptest::collection::vec(small_rational(), 10),
    ) {
        let alg = &entry(&name).algebra;
        let y2: Vec<Rational> = (0..alg.dim()).map(|i| seed[i % seed.len()].clone()).collect();
        let a = coadjoint_act(&alg, &y1, &psi);
        let b = coadjoint_act(&alg, &y2, &psi);
        let ab = same_orbit(&alg, &a, &b).unwrap();
        let ba = same_orbit(&alg, &b, &a).unwrap();
        prop_assert!(ab.is_some() && ba.is_some());
        prop_assert_eq!(replay(&alg, &ab.unwrap(), &a), b.clone());
        prop_assert_eq!(replay(&alg, &ba.unwrap(), &b), a);
    }

    #[test]
    fn dual_and_conjugate_preserve_orbit_dimension(
        (name, psi) in algebra_with_functional(),
        t in proptest::collection::vec((1i64..=4, 1i64..=3, any::<bool>()), 5),
    ) {
        let e = entry(&name);
        let dim = orbit_dimension(&e.algebra, &psi);
        prop_assert_eq!(orbit_dimension(&e.algebra, &dual_functional(&psi)), dim);
        let torus: Vec<Rational> = (0..e.levi.torus_rank())
            .map(|k| { let (n, d, s) = t[k % t.len()]; frac(if s { n } else { -n }, d) })
            .collect();
        let conj = torus_conjugate(&e.levi, &torus, &psi).unwrap();
        prop_assert_eq!(orbit_dimension(&e.algebra, &conj), dim);
        prop_assert_eq!(
            levi_orbit_stabilizer_lie(&e.algebra, &e.levi, &conj).dim(),
            levi_orbit_stabilizer_lie(&e.algebra, &e.levi, &psi).dim()
        );
    }

    #[test]
    fn subordination_is_linear((name, psi) in algebra_with_functional()) {
        let alg = &entry(&name).algebra;
        let center = alg.center();
        let derived = alg.lower_central_series()[1].clone();
        for h in [center, Subspace::full(alg.dim()), derived] {
            prop_assert_eq!(is_subordinate(&alg, &psi, &h).unwrap(), is_subordinate(&alg, &neg_vec(&psi), &h).unwrap());
        }
    }

    #[test]
    fn character_iff_zero_orbit((name, psi) in algebra_with_functional()) {
        let alg = &entry(&name).algebra;
        let char_class = depth(&alg, &psi).classification == DepthClass::Character;
        prop_assert_eq!(char_class, orbit_dimension(&alg, &psi) == 0 && !is_zero_vec(&psi));
        prop_assert_eq!(is_character(&alg, &psi), char_class);
    }

    #[test]
    fn heisenberg_quotient_preserves_orbit_dimension((name, psi) in algebra_with_functional()) {
        let alg = &entry(&name).algebra;
        if depth(&alg, &psi).depth == 2 {
            let q = heisenberg_quotient(&alg, &psi).unwrap();
            prop_assert!(q.is_non_degenerate());
            prop_assert_eq!(q.final_algebra.center().dim(), 1);
            prop_assert!(q.central_coefficient != rat(0));
            prop_assert_eq!(q.pairing.rank(), orbit_dimension(&alg, &psi));
        } else {
            prop_assert!(heisenberg_quotient(&alg, &psi).is_err());
        }
    }

    #[test]
    fn exactly_one_always_has_a_certificate((name, psi) in algebra_with_functional()) {
        let e = entry(&name);
        let s = levi_orbit_stabilizer_lie(&e.algebra, &e.levi, &psi);
        let bound = metaplectic_degree_bound(&e.algebra, &e.levi, &s, &psi, &[]);
        if bound.bound == DegreeBound::ExactlyOne {
            match &bound.reason {
                BoundReason::Character => prop_assert!(depth(&e.algebra, &psi).depth <= 1),
                BoundReason::FlagStable(pol) => {
                    prop_assert!(is_polarization(&e.algebra, &psi, &pol.subspace).unwrap());
                    prop_assert!(stabilizes_flag(&e.levi, &s, &pol.subspace));
                }
                other => prop_assert!(false, "unexpected reason {:?}", other),
            }
        }
    }

    #[test]
    fn limits_keep_zero_weight_support(
        (name, psi) in algebra_with_functional(),
        lambda in proptest::collection::vec(-2i64..=2, 5),
    ) {
        let e = entry(&name);
        let lambda = &lambda[..e.levi.torus_rank()];
        if let Some(limit) = cocharacter_limit(e.levi.weights(), lambda, &psi) {
            for (i, alpha) in e.levi.weights().iter().enumerate() {
                let w: i64 = -alpha.iter().zip(lambda).map(|(a, l)| a * l).sum::<i64>();
                if w == 0 {
                    prop_assert_eq!(&limit[i], &psi[i]);
                } else {
                    prop_assert_eq!(&limit[i], &rat(0));
                }
            }
        }
    }
}

fn gl_degeneration_pairs(
    n: usize,
    max_support: u32,
) -> (LieAlgebra, LeviAction, Vec<(Vec<Rational>, Vec<i64>, Vec<Rational>)>) {
    let (alg, levi) = catalog::gl_upper(n).unwrap();
    let mut pairs = Vec::new();
    let coords = alg.dim();
    // Sums of distinct coordinate functionals supported on small index sets.
    for mask in 1u32..(1 << coords) {
        if mask.count_ones() > max_support {
            continue;
        }
        let psi: Vec<Rational> = (0..coords).map(|i| frac(((mask >> i) & 1) as i64, 1)).collect();
        for (lambda, limit) in horizontal_degenerations(&alg, &levi, &psi, 1).unwrap() {
            pairs.push((psi.clone(), lambda, limit));
        }
    }
    (alg, levi, pairs)
}

#[test]
fn horizontal_pairs_satisfy_monotonicity_and_subsumption() {
    for (n, max_support) in [(4, 3), (5, 2)] {
        let (alg, levi, pairs) = gl_degeneration_pairs(n, max_support);
        assert!(!pairs.is_empty());
        let rd = RootDatum::gl(n).unwrap();
        for (psi, lambda, psi0) in &pairs {
            assert!(stabilizer_monotonicity_check(&alg, &levi, psi, psi0), "{psi:?} ~> {psi0:?}");
            let cert = check_horizontal(&alg, &levi, psi, psi0, lambda).unwrap();
            assert!(cert.is_horizontal());
            let simple = check_simple(&alg, &levi, &rd, psi, psi0, lambda).unwrap();
            assert!(!simple.is_simple() || simple.is_horizontal());
        }
    }
}

#[test]
fn catalog_actions_are_derivations() {
    // Construction already validates; rebuild the checks independently here.
    for name in catalog_names() {
        let e = entry(name);
        let n = e.algebra.dim();
        for d in e.levi.action() {
            for i in 0..n {
                for j in 0..n {
                    let ei: Vec<Rational> = kirillov::exact::unit_vec(n, i);
                    let ej: Vec<Rational> = kirillov::exact::unit_vec(n, j);
                    let lhs = d.mul_vec(&e.algebra.bracket(&ei, &ej));
                    let r1 = e.algebra.bracket(&d.mul_vec(&ei), &ej);
                    let r2 = e.algebra.bracket(&ei, &d.mul_vec(&ej));
                    let rhs: Vec<Rational> = r1.iter().zip(&r2).map(|(a, b)| a + b).collect();
                    assert_eq!(lhs, rhs, "{name}");
                }
            }
        }
        let series = e.algebra.lower_central_series();
        for w in series.windows(2) {
            assert!(e.algebra.is_ideal(&w[0]));
            assert!(w[0].contains_subspace(&w[1]) && w[0].dim() > w[1].dim());
        }
    }
}

#[test]
fn heisenberg_vergne_contains_center() {
    for m in 1..=3 {
        let alg = catalog::heisenberg(m).unwrap();
        let z: Vec<Rational> = (0..2 * m + 1).map(|i| frac((i == 2 * m) as i64 * 3, 2)).collect();
        for keys in [[0u32, 1, 2, 3, 4, 5, 6], [6, 5, 4, 3, 2, 1, 0], [3, 1, 4, 1, 5, 9, 2]] {
            let pol = vergne_polarization(&alg, &z, &refined_flag(&alg, &keys)).unwrap();
            assert!(pol.subspace.contains_subspace(&alg.center()));
            assert_eq!(pol.subspace.dim(), m + 1);
        }
    }
}

#[test]
fn nilpotent_levi_conjugation_preserves_orbit_dimension() {
    let (alg, levi) = catalog::heisenberg_sl2().unwrap();
    let psi = vec![frac(1, 2), frac(-3, 1), frac(2, 1)];
    for g in [[1i64, 0, 0], [0, 2, 0], [-3, 0, 0]] {
        let g: Vec<Rational> = g.iter().map(|&x| frac(x, 1)).collect();
        let conj = conjugate_functional(&levi, &g, &psi).unwrap();
        assert_eq!(orbit_dimension(&alg, &conj), orbit_dimension(&alg, &psi));
    }
}
