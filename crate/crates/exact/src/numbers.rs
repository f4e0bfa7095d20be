use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{int, pow2, ExactError};

/// A rational multiple of a power of π.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiRational {
    pub coeff: BigRational,
    pub pi_pow: u32,
}

#[derive(Default)]
struct Tables {
    bernoulli: Vec<BigRational>,
    euler: Vec<BigInt>,
}

fn tables() -> &'static RwLock<Tables> {
    static T: OnceLock<RwLock<Tables>> = OnceLock::new();
    T.get_or_init(|| RwLock::new(Tables::default()))
}

pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, j| a * BigInt::from(j))
}

/// Bₙ with B₁ = −1/2.
pub fn bernoulli_number(n: usize) -> BigRational {
    if let Some(b) = tables().read().unwrap().bernoulli.get(n) {
        return b.clone();
    }
    let mut t = tables().write().unwrap();
    while t.bernoulli.len() <= n {
        let m = t.bernoulli.len();
        let b = if m == 0 {
            BigRational::one()
        } else {
            let s = (0..m).fold(BigRational::zero(), |acc, k| {
                acc + &t.bernoulli[k] * BigRational::from_integer(binomial(m as i64 + 1, k as i64))
            });
            -s / int(m as i64 + 1)
        };
        t.bernoulli.push(b);
    }
    t.bernoulli[n].clone()
}

/// Eₙ (secant numbers with alternating sign; E₂ = −1).
pub fn euler_number(n: usize) -> BigInt {
    if let Some(e) = tables().read().unwrap().euler.get(n) {
        return e.clone();
    }
    let mut t = tables().write().unwrap();
    while t.euler.len() <= n {
        let m = t.euler.len();
        let e = if m == 0 {
            BigInt::one()
        } else if m % 2 == 1 {
            BigInt::zero()
        } else {
            -(0..m)
                .step_by(2)
                .fold(BigInt::zero(), |acc, k| acc + binomial(m as i64, k as i64) * &t.euler[k])
        };
        t.euler.push(e);
    }
    t.euler[n].clone()
}

pub fn bernoulli_poly(n: usize, x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    let mut xp = BigRational::one();
    for k in (0..=n).rev() {
        acc += bernoulli_number(k) * BigRational::from_integer(binomial(n as i64, k as i64)) * &xp;
        xp *= x;
    }
    acc
}

/// ζ(n) for even n ≥ 0 as a rational multiple of πⁿ.
pub fn zeta_even_closed(n: i64) -> Result<PiRational, ExactError> {
    if n < 0 || n % 2 != 0 {
        return Err(ExactError::Domain(format!("zeta_even_closed needs even n >= 0, got {n}")));
    }
    if n == 0 {
        return Ok(PiRational { coeff: crate::rat(-1, 2), pi_pow: 0 });
    }
    let k = n / 2;
    let sign = if k % 2 == 1 { 1 } else { -1 };
    let c = bernoulli_number(n as usize) * pow2(n) * int(sign)
        / BigRational::from_integer(factorial(n as u32) * 2);
    Ok(PiRational { coeff: c, pi_pow: n as u32 })
}

/// L(n, χ₄) for odd n ≥ 1 as a rational multiple of πⁿ.
pub fn l4_odd_closed(n: i64) -> Result<PiRational, ExactError> {
    if n < 1 || n % 2 == 0 {
        return Err(ExactError::Domain(format!("l4_odd_closed needs odd n >= 1, got {n}")));
    }
    let k = (n - 1) / 2;
    let sign = if k % 2 == 0 { 1 } else { -1 };
    let num = euler_number(2 * k as usize) * sign;
    let den = (BigInt::one() << (2 * (k + 1)) as u32) * factorial(2 * k as u32);
    Ok(PiRational { coeff: BigRational::new(num, den), pi_pow: n as u32 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    #[test]
    fn bernoulli_values() {
        assert_eq!(bernoulli_number(0), int(1));
        assert_eq!(bernoulli_number(1), rat(-1, 2));
        assert_eq!(bernoulli_number(2), rat(1, 6));
        assert_eq!(bernoulli_number(12), rat(-691, 2730));
        assert_eq!(bernoulli_number(13), int(0));
    }

    #[test]
    fn euler_values() {
        let e: Vec<i64> = [1, 0, -1, 0, 5, 0, -61, 0, 1385].to_vec();
        for (n, v) in e.into_iter().enumerate() {
            assert_eq!(euler_number(n), BigInt::from(v));
        }
    }

    #[test]
    fn bernoulli_poly_values() {
        assert_eq!(bernoulli_poly(0, &rat(5, 7)), int(1));
        assert_eq!(bernoulli_poly(1, &rat(1, 2)), int(0));
        assert_eq!(bernoulli_poly(2, &rat(1, 4)), rat(-1, 48));
    }

    #[test]
    fn recurrence_holds_to_40() {
        for n in 1..=40i64 {
            let s = (0..=n).fold(BigRational::zero(), |a, k| {
                a + BigRational::from_integer(binomial(n + 1, k)) * bernoulli_number(k as usize)
            });
            assert!(s.is_zero(), "n = {n}");
        }
    }

    #[test]
    fn endpoint_difference() {
        for n in 0..20 {
            let d = bernoulli_poly(n, &int(1)) - bernoulli_poly(n, &int(0));
            assert_eq!(d, if n == 1 { int(1) } else { int(0) });
        }
    }

    #[test]
    fn zeta_even() {
        assert_eq!(zeta_even_closed(2).unwrap(), PiRational { coeff: rat(1, 6), pi_pow: 2 });
        assert_eq!(zeta_even_closed(0).unwrap(), PiRational { coeff: rat(-1, 2), pi_pow: 0 });
        assert_eq!(
            zeta_even_closed(12).unwrap(),
            PiRational { coeff: rat(691, 638512875), pi_pow: 12 }
        );
        assert!(zeta_even_closed(3).is_err());
        assert!(zeta_even_closed(-2).is_err());
    }

    #[test]
    fn l4_odd() {
        assert_eq!(l4_odd_closed(1).unwrap().coeff, rat(1, 4));
        assert_eq!(l4_odd_closed(3).unwrap().coeff, rat(1, 32));
        assert_eq!(l4_odd_closed(5).unwrap(), PiRational { coeff: rat(5, 1536), pi_pow: 5 });
        assert!(l4_odd_closed(2).is_err());
    }

    #[test]
    fn binomial_edges() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(5, 6), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
        assert_eq!(binomial(4, -1), BigInt::zero());
    }
}
