//! Property suites: exact randomized checks of the field axioms, canonical
//! forms and text round-trips, plus the structural invariants the modules
//! promise (duality laws, basis and generator independence, Molien
//! consistency).

use proptest::prelude::*;

use tqs::cyclic_sing::{from_weights, CyclicType, WeightedAction};
use tqs::exact::{
    cyclotomic_polynomial, euler_phi, format_cyclo, parse_cyclo, Cyclo, Rational,
};
use tqs::hjcf::{hj_eval, hj_expand, is_critical_pair, is_critical_pair_arith, mod_inverse};
use tqs::invariant::{
    cotangent_action, fundamental_invariants, invariant_basis, jacobian_det, molien_dimensions,
    singularity_of_group, GroupSingularity,
};
use tqs::matgrp::{
    pseudoreflection_subgroup, quotient_structure, FiniteMatrixGroup, Mat2, QuotientStructure,
};

const CONDUCTORS: [u32; 14] = [1, 2, 3, 4, 5, 6, 8, 9, 12, 15, 16, 20, 24, 60];

fn arb_conductor() -> impl Strategy<Value = u32> {
    proptest::sample::select(&CONDUCTORS[..])
}

fn arb_cyclo(n: u32) -> impl Strategy<Value = Cyclo> {
    let phi = euler_phi(u64::from(n)) as usize;
    proptest::collection::vec((-9i64..=9, 1i64..=4), phi).prop_map(move |coeffs| {
        let mut acc = Cyclo::zero(n).unwrap();
        for (k, (num, den)) in coeffs.into_iter().enumerate() {
            let c = Cyclo::root_of_unity(n, k as i64)
                .unwrap()
                .scale(&Rational::new(num.into(), den.into()));
            acc = acc.add(&c).unwrap();
        }
        acc
    })
}

fn arb_cyclo_any() -> impl Strategy<Value = Cyclo> {
    arb_conductor().prop_flat_map(arb_cyclo)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn field_axioms_hold_exactly(
        (a, b, c) in arb_conductor().prop_flat_map(|n| (arb_cyclo(n), arb_cyclo(n), arb_cyclo(n)))
    ) {
        // associativity, commutativity, distributivity
        prop_assert_eq!(
            a.add(&b).unwrap().add(&c).unwrap(),
            a.add(&b.add(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(
            a.mul(&b).unwrap().mul(&c).unwrap(),
            a.mul(&b.mul(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap()).unwrap(),
            a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
        );
    }

    #[test]
    fn parse_print_round_trip(x in arb_cyclo_any()) {
        let s = format_cyclo(&x);
        let back = parse_cyclo(&s).unwrap();
        // bit-exact canonical form: equal coefficient vectors after embedding
        // into the original conductor (plain rationals print without one)
        let back = back.embed(x.conductor()).unwrap();
        prop_assert_eq!(back.coeffs(), x.coeffs());
        prop_assert_eq!(format_cyclo(&back), s);
    }

    #[test]
    fn embedding_is_multiplicative(
        (a, b, m) in arb_conductor().prop_flat_map(|n| {
            let mult = proptest::sample::select(
                [1u32, 2, 3, 4, 6].iter().map(|k| k * n).filter(|&m| m <= 120).collect::<Vec<_>>()
            );
            (arb_cyclo(n), arb_cyclo(n), mult)
        })
    ) {
        let lhs = a.mul(&b).unwrap().embed(m).unwrap();
        let rhs = a.embed(m).unwrap().mul(&b.embed(m).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        let sum_lhs = a.add(&b).unwrap().embed(m).unwrap();
        let sum_rhs = a.embed(m).unwrap().add(&b.embed(m).unwrap()).unwrap();
        prop_assert_eq!(sum_lhs, sum_rhs);
    }
}

proptest! {
    // the contract asks for 1000 random nonzero inversions
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn inverse_times_self_is_one(x in arb_cyclo_any()) {
        prop_assume!(!x.is_zero());
        let inv = x.inv().unwrap();
        prop_assert!(x.mul(&inv).unwrap().is_one());
    }
}

#[test]
fn cyclotomic_polynomial_vanishes_on_its_root() {
    // Phi_N(zeta_N) = 0 inside conductor N, and again after embedding into 2N
    for n in 1..=60u32 {
        let phi_n = cyclotomic_polynomial(n);
        for (label, z) in [
            ("direct", Cyclo::zeta(n).unwrap()),
            ("embedded", Cyclo::zeta(n).unwrap().embed(2 * n).unwrap()),
        ] {
            let mut acc = Cyclo::zero(z.conductor()).unwrap();
            let mut power = Cyclo::one(z.conductor()).unwrap();
            for c in phi_n.coeffs() {
                acc = acc
                    .add(&power.scale(&Rational::from_integer(c.clone())))
                    .unwrap();
                power = power.mul(&z).unwrap();
            }
            assert!(acc.is_zero(), "Phi_{}({}) != 0", n, label);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn expansion_laws_on_random_pairs(n in 2u64..400, k in 0u64..400) {
        let d = 1 + k % (n - 1);
        prop_assume!(num_integer::gcd(n, d) == 1);
        // round trip
        let e = hj_expand(n, d).unwrap();
        let v = hj_eval(&e).unwrap();
        prop_assert_eq!(v, Rational::new(n.into(), d.into()));
        // symmetry law: palindromic iff d^2 = 1 mod n
        let palindromic = e.iter().eq(e.iter().rev());
        prop_assert_eq!(palindromic, (d * d) % n == 1);
        // reversal duality
        let b = mod_inverse(d, n).unwrap();
        let mut rev = e.clone();
        rev.reverse();
        prop_assert_eq!(hj_expand(n, b).unwrap(), rev);
        // the two critical-pair criteria agree
        prop_assert_eq!(
            is_critical_pair(n, d).unwrap(),
            is_critical_pair_arith(n, d).unwrap()
        );
    }

    #[test]
    fn weight_normalization_is_generator_independent(a in 1u64..=60, e1 in 0u64..60, e2 in 0u64..60, k in 1u64..60) {
        let (e1, e2) = (e1 % a, e2 % a);
        prop_assume!(num_integer::gcd(num_integer::gcd(a, e1), e2) == 1);
        prop_assume!(num_integer::gcd(k, a) == 1);
        let w = WeightedAction::new(a, e1, e2).unwrap();
        let wk = WeightedAction::new(a, k * e1 % a, k * e2 % a).unwrap();
        prop_assert_eq!(from_weights(&w), from_weights(&wk));
    }
}

// ---------------------------------------------------------------------------
// deterministic structural properties
// ---------------------------------------------------------------------------

fn mu8_a4_prime() -> FiniteMatrixGroup {
    let (_, gens) = tqs::catalog::family_generators(
        &tqs::catalog::FamilySpec::new(tqs::catalog::Family::MuA4, 4, None).unwrap(),
    )
    .unwrap();
    FiniteMatrixGroup::generate(&gens, 1000).unwrap()
}

/// Replacing (f1, f2) by another valid fundamental pair must not change the
/// normalized singularity type.
#[test]
fn cotangent_type_is_basis_independent() {
    let g = mu8_a4_prime();
    let p = pseudoreflection_subgroup(&g).unwrap();
    assert_eq!(p.order(), 16); // G(4,2,2)
    let QuotientStructure::Cyclic { order, generator } = quotient_structure(&g, &p).unwrap()
    else {
        panic!("expected a cyclic quotient");
    };
    let (f1, f2) = fundamental_invariants(&p).unwrap();
    let classify = |fa: &tqs::invariant::Poly2, fb: &tqs::invariant::Poly2| {
        let cm = cotangent_action(&g, &p, &generator, fa, fb).unwrap();
        type_of_matrix(&cm, order)
    };
    let base = classify(&f1, &f2);
    // swap-resistant combinations with nonzero Jacobian
    let f1_alt = f1.add(&f2).unwrap();
    assert!(!jacobian_det(&f1_alt, &f2).unwrap().is_zero());
    assert_eq!(classify(&f1_alt, &f2), base);
    let f2_alt = f2.add(&f1).unwrap();
    assert_eq!(classify(&f1, &f2_alt), base);
    assert_eq!(base, CyclicType::new(6, 5).unwrap());
}

/// Any coset generator of G/P must give the same normalized type.
#[test]
fn cotangent_type_is_generator_independent() {
    let g = mu8_a4_prime();
    let p = pseudoreflection_subgroup(&g).unwrap();
    let QuotientStructure::Cyclic { order, generator } = quotient_structure(&g, &p).unwrap()
    else {
        panic!("expected a cyclic quotient");
    };
    let (f1, f2) = fundamental_invariants(&p).unwrap();
    let base = type_of_matrix(&cotangent_action(&g, &p, &generator, &f1, &f2).unwrap(), order);
    // omega * p for p in P, and omega^k for k coprime to the order
    for p_elem in p.elements().take(6) {
        let omega2 = generator.mul(p_elem).unwrap();
        let cm = cotangent_action(&g, &p, &omega2, &f1, &f2).unwrap();
        assert_eq!(type_of_matrix(&cm, order), base);
    }
    for k in [5u64] {
        assert_eq!(num_integer::gcd(k, order), 1);
        let omega_k = generator.pow(k).unwrap();
        let cm = cotangent_action(&g, &p, &omega_k, &f1, &f2).unwrap();
        assert_eq!(type_of_matrix(&cm, order), base);
    }
}

fn type_of_matrix(cm: &Mat2, order: u64) -> CyclicType {
    // normalize through the same route the pipeline takes
    let tr = cm.trace();
    let det = cm.det();
    let l = num_integer::lcm(u64::from(cm.conductor()), order) as u32;
    let tr = tr.embed(l).unwrap();
    let det = det.embed(l).unwrap();
    for k in 0..order {
        let lam = Cyclo::root_of_unity(l, ((u64::from(l) / order) * k) as i64).unwrap();
        let val = lam
            .mul(&lam)
            .unwrap()
            .sub(&tr.mul(&lam).unwrap())
            .unwrap()
            .add(&det)
            .unwrap();
        if val.is_zero() {
            let other = tr.sub(&lam).unwrap();
            let (o1, k1) = lam.root_of_unity_log().unwrap();
            let (o2, k2) = other.root_of_unity_log().unwrap();
            let a = num_integer::lcm(o1, o2);
            let w = WeightedAction::new(a, k1 * (a / o1), k2 * (a / o2)).unwrap();
            return from_weights(&w);
        }
    }
    panic!("no eigenvalue found");
}

/// The count of linearly independent Reynolds averages must equal the Molien
/// dimension, degree by degree, for a selection of reflection groups.
#[test]
fn molien_dimensions_match_reynolds_ranks() {
    let groups: Vec<(String, FiniteMatrixGroup, usize)> = vec![
        ("G(2,2,2)".into(), tqs::catalog::g_mp2(2, 2).unwrap(), 6),
        ("G(4,2,2)".into(), tqs::catalog::g_mp2(4, 2).unwrap(), 8),
        ("G(3,1,2)".into(), tqs::catalog::g_mp2(3, 1).unwrap(), 8),
        ("G(6,6,2)".into(), tqs::catalog::g_mp2(6, 6).unwrap(), 8),
        ("ST4".into(), tqs::catalog::st_group(4).unwrap(), 8),
        ("ST5".into(), tqs::catalog::st_group(5).unwrap(), 12),
    ];
    for (name, p, bound) in groups {
        let dims = molien_dimensions(&p, bound).unwrap();
        for k in 0..=bound {
            let basis = invariant_basis(&p, k as u32).unwrap();
            assert_eq!(basis.len() as u64, dims[k], "{} degree {}", name, k);
        }
    }
}

/// Chevalley-Shephard-Todd: the fundamental degrees multiply to the group
/// order for every reflection group produced by the family constructors.
#[test]
fn fundamental_degree_products() {
    for (m, p_div) in [(2u64, 2u64), (4, 2), (4, 4), (6, 2), (3, 3), (5, 5)] {
        let p = tqs::catalog::g_mp2(m, p_div).unwrap();
        let (f1, f2) = fundamental_invariants(&p).unwrap();
        let d1 = u64::from(f1.homogeneous_degree().unwrap());
        let d2 = u64::from(f2.homogeneous_degree().unwrap());
        assert_eq!(d1 * d2, p.order(), "G({},{},2)", m, p_div);
        assert!(!jacobian_det(&f1, &f2).unwrap().is_zero());
    }
}

fn assert_same_classification(
    label: &str,
    base: &GroupSingularity,
    other: &GroupSingularity,
) {
    assert_eq!(
        base.is_type_r(),
        other.is_type_r(),
        "{}: type-R verdict changed",
        label
    );
    if let (
        GroupSingularity::Classified { quotient: a, .. },
        GroupSingularity::Classified { quotient: b, .. },
    ) = (base, other)
    {
        assert_eq!(a, b, "{}: normalized type changed", label);
    }
}

/// Different admissible coset-generator choices for the mixed families give
/// conjugate groups; the engine must classify them identically.
#[test]
fn mixed_family_phi_independence() {
    use tqs::catalog::{family_generators, Family, FamilySpec};
    for (family, q, m) in [
        (Family::DC, 2, Some(2u64)),
        (Family::DD, 1, Some(1)),
        (Family::A4D2, 4, None),
        (Family::S4A4, 2, None),
    ] {
        let spec = FamilySpec::new(family, q, m).unwrap();
        let (_, gens) = family_generators(&spec).unwrap();
        let g = FiniteMatrixGroup::generate(&gens, 10_000).unwrap();
        let base = singularity_of_group(&g).unwrap();
        // the mixed generator w = zeta * h may be replaced by w * k for k in
        // K and by w^{-1}; both generate the same element set
        let w = gens.last().unwrap().clone();
        let k_gens = &gens[..gens.len() - 1];
        for variant in [w.mul(&k_gens[0]).unwrap(), w.inverse().unwrap()] {
            let mut alt = k_gens.to_vec();
            alt.push(variant);
            let g2 = FiniteMatrixGroup::generate(&alt, 10_000).unwrap();
            assert_eq!(g2.order(), g.order(), "{} variant order", spec);
            let sing = singularity_of_group(&g2).unwrap();
            assert_same_classification(&spec.to_string(), &base, &sing);
        }
    }
    // for the order-3 quotient of A4-D2 the two identifications
    // zeta -> [t] and zeta -> [t^2] give genuinely different (conjugate)
    // element sets; both must classify identically
    let spec = FamilySpec::new(Family::A4D2, 4, None).unwrap();
    let (cond, gens) = family_generators(&spec).unwrap();
    let g = FiniteMatrixGroup::generate(&gens, 10_000).unwrap();
    let base = singularity_of_group(&g).unwrap();
    let w = gens.last().unwrap().clone();
    // w = zeta_{6q} t, so zeta_{6q} t^2 = w^2 * zeta_{6q}^{-1}
    let zeta_inv = Cyclo::root_of_unity(24, -1)
        .unwrap()
        .embed(cond)
        .unwrap();
    let w_swapped = w.mul(&w).unwrap().scalar_mul(&zeta_inv).unwrap();
    let mut alt = gens[..gens.len() - 1].to_vec();
    alt.push(w_swapped);
    let g2 = FiniteMatrixGroup::generate(&alt, 10_000).unwrap();
    assert_eq!(g2.order(), g.order());
    assert!(g2.elements().any(|m| !g.contains(m)), "expected a different embedding");
    let sing = singularity_of_group(&g2).unwrap();
    assert_same_classification("A4-D2 phi swap", &base, &sing);
}

/// The closure is independent of generator order, and subgroup orders divide
/// the group order.
#[test]
fn closure_and_lagrange() {
    let (_, gens) = tqs::catalog::family_generators(
        &tqs::catalog::FamilySpec::new(tqs::catalog::Family::MuS4, 2, None).unwrap(),
    )
    .unwrap();
    let g1 = FiniteMatrixGroup::generate(&gens, 1000).unwrap();
    let mut rev = gens.clone();
    rev.reverse();
    let g2 = FiniteMatrixGroup::generate(&rev, 1000).unwrap();
    assert_eq!(g1.order(), g2.order());
    assert!(g1.elements().all(|m| g2.contains(m)));
    let p = pseudoreflection_subgroup(&g1).unwrap();
    assert_eq!(g1.order() % p.order(), 0);
}
