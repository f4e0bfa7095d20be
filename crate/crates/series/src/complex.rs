use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use crate::dd::{dd, to_f64, Dd};

/// Complex double-double.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct C {
    pub re: Dd,
    pub im: Dd,
}

impl Default for C {
    fn default() -> Self {
        C::ZERO
    }
}

impl C {
    pub const ZERO: C = C { re: Dd::from_f64(0.0), im: Dd::from_f64(0.0) };
    pub const ONE: C = C { re: Dd::from_f64(1.0), im: Dd::from_f64(0.0) };

    pub fn new(re: Dd, im: Dd) -> C {
        C { re, im }
    }

    pub fn real(re: Dd) -> C {
        C { re, im: dd(0.0) }
    }

    pub fn from_f64(re: f64, im: f64) -> C {
        C { re: dd(re), im: dd(im) }
    }

    /// i^k, exact.
    pub fn i_pow(k: i64) -> C {
        match k.rem_euclid(4) {
            0 => C::from_f64(1.0, 0.0),
            1 => C::from_f64(0.0, 1.0),
            2 => C::from_f64(-1.0, 0.0),
            _ => C::from_f64(0.0, -1.0),
        }
    }

    /// e^{iθ}.
    pub fn cis(theta: Dd) -> C {
        let (s, c) = theta.sin_cos();
        C { re: c, im: s }
    }

    pub fn conj(self) -> C {
        C { re: self.re, im: -self.im }
    }

    pub fn scale(self, r: Dd) -> C {
        C { re: self.re * r, im: self.im * r }
    }

    pub fn abs(self) -> f64 {
        to_f64(self.re).hypot(to_f64(self.im))
    }

    pub fn to_f64(self) -> (f64, f64) {
        (to_f64(self.re), to_f64(self.im))
    }

    pub fn inv(self) -> C {
        let d = self.re * self.re + self.im * self.im;
        C { re: self.re / d, im: -self.im / d }
    }

    pub fn powi(self, n: i64) -> C {
        let mut base = if n < 0 { self.inv() } else { self };
        let mut k = n.unsigned_abs();
        let mut acc = C::ONE;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            k >>= 1;
        }
        acc
    }

    /// Distance from 1, used to decide whether a phase is trivial.
    pub fn dist_one(self) -> f64 {
        (self - C::ONE).abs()
    }
}

impl Add for C {
    type Output = C;
    fn add(self, o: C) -> C {
        C { re: self.re + o.re, im: self.im + o.im }
    }
}

impl AddAssign for C {
    fn add_assign(&mut self, o: C) {
        self.re += o.re;
        self.im += o.im;
    }
}

impl Sub for C {
    type Output = C;
    fn sub(self, o: C) -> C {
        C { re: self.re - o.re, im: self.im - o.im }
    }
}

impl SubAssign for C {
    fn sub_assign(&mut self, o: C) {
        self.re -= o.re;
        self.im -= o.im;
    }
}

impl Neg for C {
    type Output = C;
    fn neg(self) -> C {
        C { re: -self.re, im: -self.im }
    }
}

impl Mul for C {
    type Output = C;
    fn mul(self, o: C) -> C {
        C { re: self.re * o.re - self.im * o.im, im: self.re * o.im + self.im * o.re }
    }
}

impl Mul<Dd> for C {
    type Output = C;
    fn mul(self, r: Dd) -> C {
        self.scale(r)
    }
}

impl Mul<f64> for C {
    type Output = C;
    fn mul(self, r: f64) -> C {
        C { re: self.re * r, im: self.im * r }
    }
}
