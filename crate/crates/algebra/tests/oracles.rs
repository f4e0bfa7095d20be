use a3z_algebra::{
    expr_eval_numeric, parse_constant, parse_shifted, specialize, t_closed, ConstMonomial, ConstantExpression, Factor,
    Numeric, SUPPORTED_PAIRS,
};
use a3z_exact::{rat, zeta_even_closed, Gaussian};
use a3z_series::{eval_frak_t, eval_zeta, Precision};
use proptest::prelude::*;

#[test]
fn closed_forms_match_brute_force() {
    let prec = Precision::default();
    for (x, y) in SUPPORTED_PAIRS {
        for p in 1..=3 {
            for q in 1..=3 {
                let t = t_closed(p, 0, q, x, y).unwrap();
                for s in [1.5, 2.0, 2.5] {
                    let closed = expr_eval_numeric(Numeric::Shifted(&t, s), &prec).unwrap();
                    let brute = eval_frak_t(p, s, q, x.to_c(), y.to_c(), &prec).unwrap();
                    let d = (closed.value - brute.value).abs();
                    assert!(d < 1e-20, "({x},{y}) p={p} q={q} s={s}: {d:e}");
                }
            }
        }
    }
}

#[test]
fn shifted_argument_matches_brute_force() {
    let prec = Precision::default();
    for (x, y) in SUPPORTED_PAIRS {
        let t = t_closed(2, 1, 3, x, y).unwrap();
        let closed = expr_eval_numeric(Numeric::Shifted(&t, 1.5), &prec).unwrap();
        let brute = eval_frak_t(2, 2.5, 3, x.to_c(), y.to_c(), &prec).unwrap();
        assert!((closed.value - brute.value).abs() < 1e-20);
    }
}

#[test]
fn even_zeta_elimination() {
    let prec = Precision::default();
    for n in (2..=16).step_by(2) {
        let z = zeta_even_closed(n).unwrap();
        let e = ConstantExpression::monomial(ConstMonomial::pi(z.pi_pow), Gaussian::real(z.coeff));
        let v = expr_eval_numeric(Numeric::Constant(&e), &prec).unwrap();
        assert!((v.re() - eval_zeta(n as f64, &prec).unwrap().re()).abs() < 1e-15, "n={n}");
    }
}

#[test]
fn specialising_unit_exponents_gives_two_zeta_five() {
    let t = t_closed(1, 0, 1, a3z_algebra::Root4::One, a3z_algebra::Root4::One).unwrap();
    let c = specialize(&t, 3).unwrap();
    let want = ConstantExpression::monomial(ConstMonomial::new(0, vec![Factor::zeta(5)]), Gaussian::real(rat(2, 1)));
    assert_eq!(c, want);
}

fn factor() -> impl Strategy<Value = Factor> {
    (2u32..12, any::<bool>()).prop_map(|(a, z)| if z { Factor::zeta(a) } else { Factor::l4(a) })
}

fn gaussian() -> impl Strategy<Value = Gaussian> {
    (-20i64..20, 1i64..9, -20i64..20, 1i64..9).prop_map(|(a, b, c, d)| Gaussian::new(rat(a, b), rat(c, d)))
}

fn constant() -> impl Strategy<Value = ConstantExpression> {
    proptest::collection::vec((0u32..14, proptest::collection::vec(factor(), 0..3), gaussian()), 0..6).prop_map(|ts| {
        let mut e = ConstantExpression::zero();
        for (p, f, c) in ts {
            e.add_term(ConstMonomial::new(p, f), &c);
        }
        e
    })
}

proptest! {
    #[test]
    fn constant_text_round_trip(e in constant()) {
        prop_assert_eq!(parse_constant(&e.to_string()).unwrap(), e);
    }

    #[test]
    fn normalize_is_idempotent(e in constant()) {
        let n = e.normalize();
        prop_assert!(n.is_normalized());
        prop_assert_eq!(n.normalize(), n);
    }

    #[test]
    fn shifted_text_round_trip(p in 1u32..5, q in 1u32..5, a in -2i64..4, idx in 0usize..10) {
        let (x, y) = SUPPORTED_PAIRS[idx];
        let t = t_closed(p, a, q, x, y).unwrap();
        prop_assert_eq!(parse_shifted(&t.to_string()).unwrap(), t.clone());
        prop_assert_eq!(t_closed(p, a, q, x.conj(), y.conj()).unwrap(), t.conj());
    }
}
