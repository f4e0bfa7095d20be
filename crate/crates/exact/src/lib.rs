//! Exact arithmetic used by every symbolic layer: big rationals, Gaussian
//! rationals, Bernoulli and Euler numbers, and the closed forms of ζ(2k) and
//! L(2k+1, χ₄).

mod gaussian;
mod numbers;

pub use gaussian::Gaussian;
pub use numbers::{
    bernoulli_number, bernoulli_poly, binomial, euler_number, factorial, l4_odd_closed,
    zeta_even_closed, PiRational,
};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("domain error: {0}")]
    Domain(String),
}

/// `n/d` as a reduced big rational.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// 2^e for any integer e.
pub fn pow2(e: i64) -> BigRational {
    let p = BigInt::from(1) << e.unsigned_abs();
    if e >= 0 {
        BigRational::from_integer(p)
    } else {
        BigRational::new(BigInt::from(1), p)
    }
}

/// Parse "n" or "n/d".
pub fn parse_rational(s: &str) -> Result<BigRational, ExactError> {
    let s = s.trim();
    let bad = || ExactError::Domain(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d == BigInt::from(0) {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Nearest f64 to a big rational, robust to huge numerators/denominators.
pub fn rational_to_f64(r: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    if let Some(v) = r.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    let n = r.numer().bits() as i64;
    let d = r.denom().bits() as i64;
    let shift = n - d;
    let scaled = r / pow2(shift);
    scaled.to_f64().unwrap_or(f64::NAN) * 2f64.powi(shift as i32)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("-3/6").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational("17").unwrap(), int(17));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn pow2_both_signs() {
        assert_eq!(pow2(3), int(8));
        assert_eq!(pow2(-3), rat(1, 8));
        assert_eq!(pow2(0), int(1));
    }

    #[test]
    fn huge_rational_to_f64() {
        let big = BigRational::new(BigInt::from(1) << 2000u32, (BigInt::from(1) << 1999u32) * 3);
        assert!((rational_to_f64(&big) - 2.0 / 3.0).abs() < 1e-15);
    }
}
