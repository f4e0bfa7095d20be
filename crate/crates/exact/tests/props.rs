use a3z_exact::{bernoulli_number, bernoulli_poly, rat, BigRational, Gaussian};
use proptest::prelude::*;

fn small_rat() -> impl Strategy<Value = BigRational> {
    (-50i64..50, 1i64..30).prop_map(|(n, d)| rat(n, d))
}

fn gaussian() -> impl Strategy<Value = Gaussian> {
    (small_rat(), small_rat()).prop_map(|(a, b)| Gaussian::new(a, b))
}

proptest! {
    #[test]
    fn conj_is_multiplicative(a in gaussian(), b in gaussian()) {
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
    }

    #[test]
    fn conj_is_involution(a in gaussian()) {
        prop_assert_eq!(a.conj().conj(), a);
    }

    #[test]
    fn bernoulli_poly_translation(n in 1usize..14, x in small_rat()) {
        // B_n(x+1) - B_n(x) = n x^{n-1}
        let one = rat(1, 1);
        let lhs = bernoulli_poly(n, &(&x + &one)) - bernoulli_poly(n, &x);
        let mut xp = rat(1, 1);
        for _ in 0..n - 1 { xp *= &x; }
        prop_assert_eq!(lhs, xp * rat(n as i64, 1));
    }

    #[test]
    fn bernoulli_poly_reflection(n in 0usize..14, x in small_rat()) {
        let one = rat(1, 1);
        let l = bernoulli_poly(n, &(&one - &x));
        let r = bernoulli_poly(n, &x);
        if n % 2 == 0 { prop_assert_eq!(l, r) } else { prop_assert_eq!(l, -r) }
    }
}

#[test]
fn odd_bernoulli_vanish() {
    for n in (3..41).step_by(2) {
        assert_eq!(bernoulli_number(n), rat(0, 1));
    }
}
