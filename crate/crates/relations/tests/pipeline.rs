use a3z_algebra::{expr_eval_numeric, parse_constant, parse_shifted, Numeric};
use a3z_lattice::{LatticeLabel, TwistLabel};
use a3z_relations::{derive_evaluation, theorem_rhs, verify_relation, witten_value, Part, RelationParams, TheoremId, Verdict};
use a3z_series::{eval_zeta3, LatticeSeriesSpec, Precision};

fn golden(key: &str) -> String {
    let doc: serde_json::Value = serde_json::from_str(include_str!("../../cli/data/golden.json")).unwrap();
    doc[key]["expr"].as_str().unwrap().to_string()
}

#[test]
fn derive_a3_k1() {
    let d = derive_evaluation(1, TheoremId::A3).unwrap();
    assert_eq!(d.tuple, [2, 3, 3, 3, 3, 3]);
    assert_eq!(d.coefficient, -2);
    assert_eq!(d.part, Part::Value);
    assert_eq!(d.value, parse_constant(&golden("a3_k1")).unwrap(), "{}", d.value);
}

#[test]
fn derive_lam2_k1() {
    let d = derive_evaluation(1, TheoremId::SU4Lam2).unwrap();
    assert_eq!(d.value, parse_constant(&golden("su4_lam2_k1")).unwrap(), "{}", d.value);
}

#[test]
fn derive_lam1_k1_gives_real_part() {
    let d = derive_evaluation(1, TheoremId::SU4Lam1).unwrap();
    assert_eq!(d.part, Part::RealPart);
    assert_eq!(d.value, parse_constant(&golden("su4_lam1_k1")).unwrap(), "{}", d.value);
    let d3 = derive_evaluation(1, TheoremId::SU4Lam3).unwrap();
    assert_eq!(d3.value, d.value);
}

#[test]
fn derive_pu4_k1() {
    let d = derive_evaluation(1, TheoremId::PU4).unwrap();
    assert_eq!(d.value, parse_constant(&golden("pu4_k1")).unwrap(), "{}", d.value);
}

#[test]
fn symbolic_all_two_relations() {
    let p = RelationParams::uniform(2);
    for (th, key) in [(TheoremId::SO6, "so6_all2_relation"), (TheoremId::SU4Lam1, "lam1_all2_relation"), (TheoremId::PU4, "pu4_all2_relation")] {
        let rhs = theorem_rhs(th, &p).unwrap();
        assert_eq!(rhs, parse_shifted(&golden(key)).unwrap(), "{th}: {rhs}");
    }
}

#[test]
fn witten_k1() {
    let (z, w) = witten_value(1).unwrap();
    let prec = Precision::default();
    let num = eval_zeta3(&LatticeSeriesSpec::new([2.0; 6], TwistLabel::Zero, LatticeLabel::P), &prec).unwrap();
    let v = expr_eval_numeric(Numeric::Constant(&z), &prec).unwrap();
    assert!((v.value - num.value).abs() < 1e-12);
    assert_eq!(w, z.scale(&a3z_exact::Gaussian::real(a3z_exact::int(144))));
}

#[test]
fn verify_all_two() {
    let prec = Precision::default();
    for th in TheoremId::ALL {
        let r = verify_relation(th, &RelationParams::uniform(2), 2.0, &prec, 1e-6).unwrap();
        assert!(r.passed, "{th}: residual {:e}", r.residual);
    }
    let r = verify_relation(TheoremId::SU4Lam1, &RelationParams::uniform(2), 2.5, &prec, 1e-6).unwrap();
    assert!(r.passed && r.lhs.im().abs() < 1e-6);
}

#[test]
fn degenerate_all_odd() {
    let r = verify_relation(TheoremId::A3, &RelationParams::uniform(3), 3.0, &Precision::default(), 1e-6).unwrap();
    assert_eq!(r.verdict, Verdict::Degenerate);
    assert!(r.passed, "lhs {:?} rhs {:?}", r.lhs.value.to_f64(), r.rhs.value.to_f64());
}

#[test]
fn unit_parameters_are_not_verified_numerically() {
    assert!(verify_relation(TheoremId::A3, &RelationParams::uniform(1), 2.0, &Precision::default(), 1e-6).is_err());
}

#[test]
fn derive_higher_k_matches_golden() {
    for (k, th, key) in [
        (2, TheoremId::A3, "a3_k2"),
        (3, TheoremId::A3, "a3_k3"),
        (4, TheoremId::A3, "a3_k4"),
        (2, TheoremId::SU4Lam2, "su4_lam2_k2"),
        (3, TheoremId::SU4Lam2, "su4_lam2_k3"),
    ] {
        let d = derive_evaluation(k, th).unwrap();
        assert_eq!(d.value, parse_constant(&golden(key)).unwrap(), "{key}: {}", d.value);
    }
}

#[test]
fn derive_k5_against_six_entry_reading() {
    let d = derive_evaluation(5, TheoremId::A3).unwrap();
    assert_eq!(d.tuple, [10, 11, 11, 11, 11, 11]);
    assert_eq!(d.value, parse_constant(&golden("a3_k5")).unwrap(), "{}", d.value);
}

#[test]
fn derived_values_match_series() {
    let prec = Precision::default();
    for k in 1..=2 {
        for th in [TheoremId::A3, TheoremId::SU4Lam2, TheoremId::PU4, TheoremId::SU4Lam1] {
            let d = derive_evaluation(k, th).unwrap();
            let (tw, lat) = th.context();
            let t = d.tuple.map(|e| e as f64);
            let series = eval_zeta3(&LatticeSeriesSpec::new(t, tw, lat), &prec).unwrap();
            let closed = expr_eval_numeric(Numeric::Constant(&d.value), &prec).unwrap();
            assert!((closed.re() - series.re()).abs() < 1e-6 * series.re().abs() + series.error_bound(), "{th} k={k}");
            if d.part == Part::Value {
                assert!(series.im().abs() <= series.error_bound());
            }
        }
    }
}

#[test]
fn stuffle_steps_hold_numerically() {
    use a3z_relations::STUFFLE_TRIPLES;
    let prec = Precision::default();
    let base = [3.0, 3.0, 3.0, 3.0, 3.0, 3.0];
    for tr in STUFFLE_TRIPLES {
        let [i, j, l] = tr;
        let (mut a, mut b, mut c) = (base, base, base);
        a[j] -= 1.0;
        b[l] -= 1.0;
        c[i] -= 1.0;
        for tw in [TwistLabel::Zero, TwistLabel::Lam1] {
            let z = |t: [f64; 6]| eval_zeta3(&LatticeSeriesSpec::new(t, tw, LatticeLabel::P), &prec).unwrap();
            let (za, zb, zc) = (z(a), z(b), z(c));
            let r = (za.value - zb.value + zc.value).abs();
            assert!(r < 1e-8 + za.error_bound() + zb.error_bound() + zc.error_bound(), "{tr:?} {tw}: {r:e}");
        }
    }
}

#[test]
fn uniform_values_are_pure_pi_powers() {
    let prec = Precision { cutoff: 200, ..Precision::default() };
    for lattice in [LatticeLabel::P, LatticeLabel::L1, LatticeLabel::Q] {
        for twist in TwistLabel::ALL {
            let v = a3z_relations::lattice_uniform_value(1, twist, lattice).unwrap();
            assert_eq!(v.terms.len(), 1, "{twist:?} {lattice:?}: {v}");
            let m = v.terms.keys().next().unwrap();
            assert!(m.factors.is_empty() && m.pi_pow == 12, "{v}");
            let num = eval_zeta3(&LatticeSeriesSpec::new([2.0; 6], twist, lattice), &prec).unwrap();
            let sym = expr_eval_numeric(Numeric::Constant(&v), &prec).unwrap();
            assert!((num.value - sym.value).abs() <= num.error_bound() + 1e-12, "{twist:?} {lattice:?}");
        }
    }
    assert_eq!(a3z_relations::lattice_uniform_value(1, TwistLabel::Zero, LatticeLabel::Q).unwrap(), parse_constant(&golden("pu4_all2")).unwrap());
}
