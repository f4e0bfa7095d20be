use a3z_exact::rat;
use a3z_lattice::{mirror, LatticeLabel, TwistLabel};
use a3z_series::dd::{dd, pi, Dd};
use a3z_series::triple::{class_sums_with, combine, ClassSums};
use a3z_series::{
    check_identity, eval_ez2, eval_frak_t, eval_l4, eval_phi_alpha, eval_zeta, eval_zeta3, IdentityId, IdentityParams,
    LatticeSeriesSpec, NumericValue, Precision, Schedule, C,
};
use proptest::prelude::*;

const CUT: usize = 48;

fn sums(t: &[f64; 6]) -> ClassSums {
    class_sums_with(t, CUT, Schedule::default()).unwrap()
}

fn near(a: &NumericValue, b: &NumericValue, c: C) -> bool {
    (a.value - b.value - c).abs() <= a.error_bound() + b.error_bound()
}

fn tuple() -> impl Strategy<Value = [f64; 6]> {
    proptest::array::uniform6(prop::sample::select(vec![1.0, 1.5, 2.0, 2.5, 3.0, 4.0]))
        .prop_filter("absolutely convergent", |t| a3z_series::triple::check_guard(t).is_ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn mirror_symmetry(t in tuple()) {
        let a = sums(&t);
        let b = sums(&mirror(&t));
        for lat in [LatticeLabel::P, LatticeLabel::L1, LatticeLabel::Q] {
            for tw in [TwistLabel::Zero, TwistLabel::Lam1, TwistLabel::Lam2, TwistLabel::Lam3] {
                let lhs = combine(&a, tw, lat);
                let rhs = combine(&b, tw.conj(), lat);
                prop_assert!(near(&lhs, &rhs, C::ZERO), "{t:?} {tw:?} {lat:?}");
            }
        }
    }

    #[test]
    fn lattice_decompositions(t in tuple()) {
        let s = sums(&t);
        let v = |tw, lat| combine(&s, tw, lat);
        let p = v(TwistLabel::Zero, LatticeLabel::P);
        let l2 = v(TwistLabel::Lam2, LatticeLabel::P);
        let l1 = v(TwistLabel::Lam1, LatticeLabel::P);
        let l3 = v(TwistLabel::Lam3, LatticeLabel::P);
        let so6 = v(TwistLabel::Zero, LatticeLabel::L1);
        let pu4 = v(TwistLabel::Zero, LatticeLabel::Q);
        let half = |c: C| c.scale(dd(0.5));
        let quarter = |c: C| c.scale(dd(0.25));
        prop_assert!((so6.value - half(p.value + l2.value)).abs() <= so6.error_bound() + p.error_bound() + l2.error_bound());
        let q = quarter(p.value - l1.value + l2.value - l3.value);
        prop_assert!((pu4.value - q).abs() <= pu4.error_bound() + p.error_bound() + 2.0 * l1.error_bound());
    }

    #[test]
    fn untwisted_values_are_real(t in tuple()) {
        let s = sums(&t);
        for lat in [LatticeLabel::P, LatticeLabel::L1, LatticeLabel::Q] {
            let v = combine(&s, TwistLabel::Zero, lat);
            prop_assert!(v.im().abs() <= v.rounding_slack);
        }
    }

    #[test]
    fn conjugate_twists(t in tuple()) {
        let s = sums(&t);
        let a = combine(&s, TwistLabel::Lam1, LatticeLabel::P);
        let b = combine(&s, TwistLabel::Lam3, LatticeLabel::P);
        prop_assert!((a.value - b.value.conj()).abs() <= a.error_bound() + b.error_bound());
    }

    #[test]
    fn harmonic_product(s1 in 1.5f64..4.0, s2 in 1.5f64..4.0) {
        let p = Precision::default();
        let z = |s| eval_zeta(s, &p).unwrap().re();
        let lhs = eval_ez2(s1, s2, &p).unwrap().re() + eval_ez2(s2, s1, &p).unwrap().re() + z(s1 + s2);
        prop_assert!((lhs - z(s1) * z(s2)).abs() < 1e-12);
    }
}

#[test]
fn doubling_cutoff_within_reported_bound() {
    let t = [2.0, 2.0, 3.0, 2.0, 2.0, 3.0];
    let lo = Precision::default().with_cutoff(100);
    let hi = Precision::default().with_cutoff(200);
    for tw in [TwistLabel::Zero, TwistLabel::Lam1] {
        let a = eval_zeta3(&LatticeSeriesSpec::new(t, tw, LatticeLabel::P), &lo).unwrap();
        let b = eval_zeta3(&LatticeSeriesSpec::new(t, tw, LatticeLabel::P), &hi).unwrap();
        assert!((a.value - b.value).abs() <= a.error_bound());
    }
    let a = eval_zeta(3.0, &lo).unwrap();
    let b = eval_zeta(3.0, &hi).unwrap();
    assert!((a.value - b.value).abs() <= a.error_bound() + 1e-30);
}

#[test]
fn one_dimensional_constants() {
    let p = Precision::default();
    let pi2: Dd = pi() * pi();
    let close = |v: &NumericValue, re: Dd, im: Dd| (v.value - C::new(re, im)).abs() < 1e-28;
    assert!(close(&eval_zeta(2.0, &p).unwrap(), pi2 / 6.0, dd(0.0)));
    assert!(close(&eval_phi_alpha(2.0, &rat(1, 2), &p).unwrap(), -pi2 / 12.0, dd(0.0)));
    let catalan = dd(0.915_965_594_177_219);
    let q = eval_phi_alpha(2.0, &rat(1, 4), &p).unwrap();
    assert!((q.value - C::new(-pi2 / 48.0, catalan)).abs() < 1e-15);
    let a = eval_phi_alpha(3.0, &rat(1, 4), &p).unwrap();
    let b = eval_phi_alpha(3.0, &rat(3, 4), &p).unwrap();
    assert!((a.value - b.value.conj()).abs() < 1e-28);
    assert!((eval_l4(1.0, &p).unwrap().value - C::real(pi() / 4.0)).abs() < 1e-12);
    assert!(close(&eval_l4(3.0, &p).unwrap(), pi().powi(3) / 32.0, dd(0.0)));
}

#[test]
fn ez2_sum_formula() {
    // ζ₂(1,2) = ζ(3)
    let p = Precision::default();
    let v = eval_ez2(1.0, 2.0, &p).unwrap();
    assert!((v.re() - eval_zeta(3.0, &p).unwrap().re()).abs() < 1e-20);
}

#[test]
fn frak_t_two_zeta_five() {
    let p = Precision::default();
    let v = eval_frak_t(1, 3.0, 1, C::ONE, C::ONE, &p).unwrap();
    assert!((v.re() - 2.0 * eval_zeta(5.0, &p).unwrap().re()).abs() < 1e-20);
}

#[test]
fn identity_examples() {
    let p = Precision::default();
    let fp = IdentityParams { p: 2, ..Default::default() };
    assert!(check_identity(IdentityId::FourierPfrac, &fp, 0.0, &p).unwrap() < 1e-6);
    let dr = IdentityParams { p: 2, q: 2, s: 2.5, x: C::from_f64(0.0, 1.0), ..Default::default() };
    assert!(check_identity(IdentityId::DoubleRelation, &dr, std::f64::consts::FRAC_PI_2, &p).unwrap() < 1e-6);
    let m = IdentityParams { s: 2.5, x: C::from_f64(-1.0, 0.0), y: C::from_f64(-1.0, 0.0), ..Default::default() };
    assert!(check_identity(IdentityId::Master, &m, 0.0, &p).unwrap() < 1e-6);
    assert!("unknown".parse::<IdentityId>().is_err());
}
