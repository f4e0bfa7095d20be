//! Double-double arithmetic: an unevaluated sum hi + lo with |lo| ≤ ulp(hi)/2,
//! plus exp/ln/pow, conversion from exact rationals and decimal rendering.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use a3z_exact::BigRational;

pub const EPS: f64 = 1.0 / (1u128 << 104) as f64;

#[derive(Clone, Copy, Default, PartialEq)]
pub struct Dd {
    hi: f64,
    lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Dd {
    pub const fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    /// Normalised sum of two doubles.
    pub fn new_add(a: f64, b: f64) -> Dd {
        let (hi, lo) = two_sum(a, b);
        Dd { hi, lo }
    }

    pub fn hi(self) -> f64 {
        self.hi
    }

    pub fn lo(self) -> f64 {
        self.lo
    }

    pub fn abs(self) -> Dd {
        if self.hi < 0.0 {
            -self
        } else {
            self
        }
    }

    pub fn recip(self) -> Dd {
        Dd::from_f64(1.0) / self
    }

    pub fn powi(self, n: i32) -> Dd {
        let mut base = if n < 0 { self.recip() } else { self };
        let mut e = n.unsigned_abs();
        let mut acc = Dd::from_f64(1.0);
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    pub fn sqrt(self) -> Dd {
        if self.hi <= 0.0 {
            return Dd::from_f64(self.hi.sqrt());
        }
        let x = self.hi.sqrt();
        let (p, e) = two_prod(x, x);
        let r = ((self.hi - p) - e + self.lo) / (2.0 * x);
        Dd::new_add(x, r)
    }

    pub fn sin_cos(self) -> (Dd, Dd) {
        let half_pi = pi() * 0.5;
        let k = (self.hi / std::f64::consts::FRAC_PI_2).round();
        let r = self - half_pi * k;
        let r2 = r * r;
        let mut s = r;
        let mut c = Dd::from_f64(1.0);
        let mut ts = r;
        let mut tc = Dd::from_f64(1.0);
        for j in 1..=16 {
            let j = j as f64;
            ts = -ts * r2 / ((2.0 * j) * (2.0 * j + 1.0));
            tc = -tc * r2 / ((2.0 * j - 1.0) * (2.0 * j));
            s += ts;
            c += tc;
        }
        match (k as i64).rem_euclid(4) {
            0 => (s, c),
            1 => (c, -s),
            2 => (-s, -c),
            _ => (-c, s),
        }
    }
}

impl From<f64> for Dd {
    fn from(x: f64) -> Dd {
        Dd::from_f64(x)
    }
}

impl fmt::Debug for Dd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Dd({:e} + {:e})", self.hi, self.lo)
    }
}

impl fmt::Display for Dd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&to_decimal(*self, 32))
    }
}

impl PartialOrd for Dd {
    fn partial_cmp(&self, other: &Dd) -> Option<Ordering> {
        match self.hi.partial_cmp(&other.hi)? {
            Ordering::Equal => self.lo.partial_cmp(&other.lo),
            o => Some(o),
        }
    }
}

impl Neg for Dd {
    type Output = Dd;
    fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }
}

impl Add for Dd {
    type Output = Dd;
    fn add(self, b: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, b.hi);
        let (t, f) = two_sum(self.lo, b.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s, e + f);
        Dd { hi, lo }
    }
}

impl Sub for Dd {
    type Output = Dd;
    fn sub(self, b: Dd) -> Dd {
        self + (-b)
    }
}

impl Mul for Dd {
    type Output = Dd;
    fn mul(self, b: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, b.hi);
        let e = e + (self.hi * b.lo + self.lo * b.hi);
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }
}

impl Div for Dd {
    type Output = Dd;
    fn div(self, b: Dd) -> Dd {
        let q1 = self.hi / b.hi;
        let r = self - b * q1;
        let q2 = r.hi / b.hi;
        let r = r - b * q2;
        let q3 = r.hi / b.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo } + Dd::from_f64(q3)
    }
}

macro_rules! scalar_ops {
    ($($tr:ident $f:ident $atr:ident $af:ident),*) => {$(
        impl $tr<f64> for Dd {
            type Output = Dd;
            fn $f(self, b: f64) -> Dd {
                $tr::$f(self, Dd::from_f64(b))
            }
        }
        impl $tr<Dd> for f64 {
            type Output = Dd;
            fn $f(self, b: Dd) -> Dd {
                $tr::$f(Dd::from_f64(self), b)
            }
        }
        impl $atr for Dd {
            fn $af(&mut self, b: Dd) {
                *self = $tr::$f(*self, b);
            }
        }
        impl $atr<f64> for Dd {
            fn $af(&mut self, b: f64) {
                *self = $tr::$f(*self, Dd::from_f64(b));
            }
        }
    )*};
}

scalar_ops!(Add add AddAssign add_assign, Sub sub SubAssign sub_assign, Mul mul MulAssign mul_assign, Div div DivAssign div_assign);

impl std::iter::Sum for Dd {
    fn sum<I: Iterator<Item = Dd>>(it: I) -> Dd {
        it.fold(Dd::default(), |a, b| a + b)
    }
}

pub fn dd(x: f64) -> Dd {
    Dd::from(x)
}

pub fn pi() -> Dd {
    Dd { hi: std::f64::consts::PI, lo: 1.2246467991473532e-16 }
}

fn ln2() -> Dd {
    Dd { hi: std::f64::consts::LN_2, lo: 2.3190468138462996e-17 }
}

fn ldexp(x: Dd, e: i32) -> Dd {
    let f = 2f64.powi(e);
    Dd { hi: x.hi * f, lo: x.lo * f }
}

pub fn exp(x: Dd) -> Dd {
    if x.hi() > 709.0 {
        return Dd::from(f64::INFINITY);
    }
    if x.hi() < -745.0 {
        return Dd::from(0.0);
    }
    let n = (x.hi() / std::f64::consts::LN_2).round();
    let r = (x - ln2() * n) / 256.0;
    // expm1 Taylor on |r| < 1.4e-3, then (1+s)^2 - 1 = s(2+s)
    let mut term = r;
    let mut s = r;
    for k in 2..=16 {
        term = term * r / (k as f64);
        s += term;
    }
    for _ in 0..8 {
        s = s * (s + 2.0);
    }
    let sum = s + 1.0;
    ldexp(sum, n as i32)
}

pub fn ln(x: Dd) -> Dd {
    assert!(x.hi() > 0.0, "ln of non-positive value");
    let mut y = Dd::from(x.hi().ln());
    for _ in 0..2 {
        y = y + x * exp(-y) - 1.0;
    }
    y
}

/// n^{-s}; integer s goes through repeated multiplication.
pub fn inv_pow(n: f64, s: Dd) -> Dd {
    if s.lo() == 0.0 && s.hi().fract() == 0.0 && s.hi().abs() < 1024.0 {
        return Dd::from(n).powi(-(s.hi() as i32));
    }
    exp(-s * ln(Dd::from(n)))
}

pub fn from_rational(r: &BigRational) -> Dd {
    let hi = a3z_exact::rational_to_f64(r);
    if !hi.is_finite() || hi == 0.0 {
        return Dd::from(hi);
    }
    let rest = r - BigRational::from_float(hi).expect("finite");
    Dd::new_add(hi, a3z_exact::rational_to_f64(&rest))
}

pub fn to_f64(x: Dd) -> f64 {
    x.hi() + x.lo()
}

/// Scientific notation with `digits` significant digits.
pub fn to_decimal(x: Dd, digits: usize) -> String {
    let v = x.hi();
    if v == 0.0 {
        return "0".into();
    }
    if !v.is_finite() {
        return format!("{v}");
    }
    let neg = v < 0.0;
    let mut y = if neg { -x } else { x };
    let mut e = y.hi().log10().floor() as i32;
    y = if e >= 0 { y / Dd::from(10.0).powi(e) } else { y * Dd::from(10.0).powi(-e) };
    while y.hi() >= 10.0 {
        y /= 10.0;
        e += 1;
    }
    while y.hi() < 1.0 {
        y *= 10.0;
        e -= 1;
    }
    let mut ds = Vec::with_capacity(digits + 1);
    for _ in 0..=digits {
        let d = y.hi().floor().clamp(0.0, 9.0);
        ds.push(d as u8);
        y = (y - d) * 10.0;
    }
    // round on the guard digit
    if ds[digits] >= 5 {
        let mut i = digits;
        loop {
            if i == 0 {
                ds.insert(0, 1);
                e += 1;
                break;
            }
            i -= 1;
            if ds[i] == 9 {
                ds[i] = 0;
            } else {
                ds[i] += 1;
                break;
            }
        }
    }
    ds.truncate(digits);
    let mut s = String::new();
    if neg {
        s.push('-');
    }
    s.push((b'0' + ds[0]) as char);
    if digits > 1 {
        s.push('.');
        for d in &ds[1..] {
            s.push((b'0' + d) as char);
        }
    }
    s.push_str(&format!("e{e}"));
    s
}
