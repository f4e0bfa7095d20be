use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact element of Q(i).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Gaussian {
    pub re: BigRational,
    pub im: BigRational,
}

impl Gaussian {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Gaussian { re, im }
    }

    pub fn real(re: BigRational) -> Self {
        Gaussian { re, im: BigRational::zero() }
    }

    pub fn i() -> Self {
        Gaussian { re: BigRational::zero(), im: BigRational::one() }
    }

    /// i^k for any integer k.
    pub fn i_pow(k: i64) -> Self {
        let one = BigRational::one;
        let zero = BigRational::zero;
        match k.rem_euclid(4) {
            0 => Gaussian::new(one(), zero()),
            1 => Gaussian::new(zero(), one()),
            2 => Gaussian::new(-one(), zero()),
            _ => Gaussian::new(zero(), -one()),
        }
    }

    pub fn conj(&self) -> Self {
        Gaussian { re: self.re.clone(), im: -&self.im }
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Gaussian { re: &self.re * r, im: &self.im * r }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (crate::rational_to_f64(&self.re), crate::rational_to_f64(&self.im))
    }
}

impl Zero for Gaussian {
    fn zero() -> Self {
        Gaussian::default()
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for Gaussian {
    fn one() -> Self {
        Gaussian::real(BigRational::one())
    }
}

impl From<BigRational> for Gaussian {
    fn from(r: BigRational) -> Self {
        Gaussian::real(r)
    }
}

impl Add for Gaussian {
    type Output = Gaussian;
    fn add(self, o: Gaussian) -> Gaussian {
        Gaussian { re: self.re + o.re, im: self.im + o.im }
    }
}

impl<'a> Add<&'a Gaussian> for &'a Gaussian {
    type Output = Gaussian;
    fn add(self, o: &Gaussian) -> Gaussian {
        Gaussian { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl AddAssign<&Gaussian> for Gaussian {
    fn add_assign(&mut self, o: &Gaussian) {
        self.re += &o.re;
        self.im += &o.im;
    }
}

impl SubAssign<&Gaussian> for Gaussian {
    fn sub_assign(&mut self, o: &Gaussian) {
        self.re -= &o.re;
        self.im -= &o.im;
    }
}

impl Sub for Gaussian {
    type Output = Gaussian;
    fn sub(self, o: Gaussian) -> Gaussian {
        Gaussian { re: self.re - o.re, im: self.im - o.im }
    }
}

impl<'a> Sub<&'a Gaussian> for &'a Gaussian {
    type Output = Gaussian;
    fn sub(self, o: &Gaussian) -> Gaussian {
        Gaussian { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}

impl Neg for Gaussian {
    type Output = Gaussian;
    fn neg(self) -> Gaussian {
        Gaussian { re: -self.re, im: -self.im }
    }
}

impl<'a> Mul<&'a Gaussian> for &'a Gaussian {
    type Output = Gaussian;
    fn mul(self, o: &Gaussian) -> Gaussian {
        Gaussian {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

impl Mul for Gaussian {
    type Output = Gaussian;
    fn mul(self, o: Gaussian) -> Gaussian {
        &self * &o
    }
}

impl fmt::Display for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}*i", self.im),
            (false, false) => {
                let sign = if self.im.is_negative() { '-' } else { '+' };
                write!(f, "({}{}{}*i)", self.re, sign, self.im.abs())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    #[test]
    fn i_squared() {
        assert_eq!(&Gaussian::i() * &Gaussian::i(), -Gaussian::one());
        assert_eq!(Gaussian::i_pow(-1), Gaussian::i_pow(3));
    }

    #[test]
    fn display_forms() {
        assert_eq!(Gaussian::real(rat(1, 6)).to_string(), "1/6");
        assert_eq!(Gaussian::new(rat(0, 1), rat(-1, 2)).to_string(), "-1/2*i");
        assert_eq!(Gaussian::new(rat(1, 2), rat(-3, 4)).to_string(), "(1/2-3/4*i)");
    }
}
