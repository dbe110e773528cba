use proptest::prelude::*;
use purecone_core::exactcore::BinPoly;
use purecone_core::intpoly::{
    certificate_step2, certificate_step3, certificate_step3_at, membership, rectangle_defect,
    sample_d_elements, sampled_int_check, step3_bound, u_n, valuation, KPoly, Place, RatFunc2,
    Valuation,
};

fn nonzero_poly() -> impl Strategy<Value = BinPoly> {
    (1u64..1 << 16).prop_map(BinPoly::from_u64)
}

fn ratfunc() -> impl Strategy<Value = RatFunc2> {
    (0u64..1 << 12, nonzero_poly()).prop_map(|(n, d)| RatFunc2::new(BinPoly::from_u64(n), d).unwrap())
}

fn add_valuations(a: Valuation, b: Valuation) -> Valuation {
    match (a, b) {
        (Valuation::Finite(x), Valuation::Finite(y)) => Valuation::Finite(x + y),
        _ => Valuation::Infinity,
    }
}

/// `Infinity` compares above every finite value.
fn at_least_min(v: Valuation, a: Valuation, b: Valuation) -> bool {
    match (a.finite(), b.finite()) {
        (Some(x), Some(y)) => v.at_least(x.min(y)),
        (Some(x), None) | (None, Some(x)) => v.at_least(x),
        (None, None) => v == Valuation::Infinity,
    }
}

proptest! {
    #[test]
    fn valuations_are_additive(f in ratfunc(), g in ratfunc()) {
        for place in [Place::Zero, Place::One] {
            let vf = valuation(&f, place);
            let vg = valuation(&g, place);
            prop_assert_eq!(valuation(&(&f * &g), place), add_valuations(vf, vg));
            prop_assert!(at_least_min(valuation(&(&f + &g), place), vf, vg));
        }
    }

    #[test]
    fn membership_matches_definition(f in ratfunc()) {
        let flags = membership(&f);
        let v0 = valuation(&f, Place::Zero);
        let v1 = valuation(&f, Place::One);
        prop_assert_eq!(flags.in_t, v0.at_least(0) && v1.at_least(0));
        prop_assert_eq!(flags.in_m, v0.at_least(1) && v1.at_least(1));
        prop_assert_eq!(flags.in_m2, v0.at_least(2) && v1.at_least(2));
        // D = F2 + M
        let shifted = &f + &RatFunc2::one();
        prop_assert_eq!(flags.in_d, flags.in_m || membership(&shifted).in_m);
    }
}

#[test]
fn valuation_examples() {
    assert_eq!(valuation(&RatFunc2::t(), Place::Zero), Valuation::Finite(1));
    assert_eq!(valuation(&RatFunc2::t(), Place::One), Valuation::Finite(0));
    for n in 1..6 {
        let u = u_n(n);
        assert_eq!(valuation(&u, Place::Zero), Valuation::Finite(1));
        assert_eq!(valuation(&u, Place::One), Valuation::Finite(n as i64 + 1));
        let flags = membership(&u);
        assert!(flags.in_m && !flags.in_m2);
    }
    assert_eq!(valuation(&RatFunc2::one(), Place::One), Valuation::Finite(0));
    let m = membership(&RatFunc2::m());
    assert!(m.in_m && !m.in_m2 && m.in_d);
    let t = membership(&RatFunc2::t());
    assert!(t.in_t && !t.in_d);
}

#[test]
fn special_polynomials() {
    let m = RatFunc2::m();
    assert_eq!(KPoly::q().eval(&m), &m + &RatFunc2::one());
    assert!(KPoly::g().eval(&RatFunc2::zero()).is_zero());
    assert_eq!(KPoly::x().eval(&m), m);
}

#[test]
fn step2_holds_for_small_n() {
    for n in 1..=10 {
        let cert = certificate_step2(n).unwrap();
        assert_eq!(cert.q_v0, Valuation::Finite(1));
        assert!(cert.g_membership.in_m && !cert.g_membership.in_m2);
        assert!(cert.decomposition_holds);
    }
    let c = certificate_step2(1).unwrap();
    let m = RatFunc2::m();
    let w = RatFunc2::from_poly(BinPoly::t_plus_one());
    assert_eq!(c.q_value, &(&m * &w.pow(2)) + &(&m.pow(3) * &w.pow(4)));
    assert!(certificate_step2(0).is_err());
}

#[test]
fn step3_bounds_and_containment() {
    assert_eq!(step3_bound(&[KPoly::x()]), 1);
    assert!(certificate_step3(&[KPoly::x()]).all_in_m());
    assert_eq!(step3_bound(&[KPoly::g()]), 3);
    let g = certificate_step3(&[KPoly::g()]);
    assert!(g.all_in_n1() && g.all_in_m());
    // q is not integer-valued on D: the t-adic condition fails while the
    // (t+1)-adic one still holds
    assert_eq!(step3_bound(&[KPoly::q()]), 2);
    let q = certificate_step3(&[KPoly::q()]);
    assert!(q.all_in_n1() && !q.all_in_m());
    assert_eq!(step3_bound(&[]), 1);
    assert!(certificate_step3(&[]).records.is_empty());
    for hs in [vec![KPoly::x()], vec![KPoly::g()], vec![KPoly::q()], vec![KPoly::g(), KPoly::x()]] {
        let base = certificate_step3(&hs);
        let next = certificate_step3_at(&hs, base.n + 1);
        assert_eq!(base.all_in_n1(), next.all_in_n1());
        assert_eq!(base.all_in_m(), next.all_in_m());
    }
}

#[test]
fn rectangle_examples() {
    let r = rectangle_defect(&[(KPoly::x(), KPoly::x())], 1).unwrap();
    assert_eq!(r.value, u_n(1).pow(2));
    assert!(r.value_in_m2 && !r.comparison_in_m2);
    for n in 1..5 {
        let r = rectangle_defect(&[(KPoly::g(), KPoly::one())], n).unwrap();
        assert!(r.value.is_zero() && r.value_in_m2);
    }
}

#[test]
fn sampled_elements_of_d() {
    let samples = sample_d_elements();
    assert!(samples.len() >= 200);
    let check = sampled_int_check(&samples);
    assert!(check.passed(), "{check:?}");
    for x in &samples {
        let sq = &(x * x) + x;
        assert!(membership(&sq).in_m);
    }
}
