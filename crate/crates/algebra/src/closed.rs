use std::fmt;
use std::str::FromStr;

use a3z_exact::{binomial, int, l4_odd_closed, pow2, zeta_even_closed, BigRational, Gaussian};
use a3z_series::C;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::expr::{ConstMonomial, ConstantExpression, Family, ShiftedCombination};
use crate::AlgebraError;

/// A fourth root of unity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Root4 {
    One,
    I,
    MinusOne,
    MinusI,
}

impl Root4 {
    pub fn exponent(self) -> i64 {
        match self {
            Root4::One => 0,
            Root4::I => 1,
            Root4::MinusOne => 2,
            Root4::MinusI => 3,
        }
    }

    pub fn from_exponent(e: i64) -> Root4 {
        [Root4::One, Root4::I, Root4::MinusOne, Root4::MinusI][e.rem_euclid(4) as usize]
    }

    pub fn conj(self) -> Root4 {
        Root4::from_exponent(-self.exponent())
    }

    pub fn mul(self, o: Root4) -> Root4 {
        Root4::from_exponent(self.exponent() + o.exponent())
    }

    pub fn to_c(self) -> C {
        C::i_pow(self.exponent())
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Root4::One => "1",
            Root4::I => "i",
            Root4::MinusOne => "-1",
            Root4::MinusI => "-i",
        }
    }
}

impl fmt::Display for Root4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Root4 {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Self, AlgebraError> {
        match s.trim() {
            "1" => Ok(Root4::One),
            "i" => Ok(Root4::I),
            "-1" => Ok(Root4::MinusOne),
            "-i" => Ok(Root4::MinusI),
            o => Err(AlgebraError::Domain(format!("not a fourth root of unity: {o:?}"))),
        }
    }
}

impl Serialize for Root4 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for Root4 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

use Root4::{MinusI, MinusOne, One, I};

/// The (x, y) pairs with a closed form for 𝔗(p, s, q; x, y).
pub const SUPPORTED_PAIRS: [(Root4, Root4); 10] = [
    (One, One),
    (MinusOne, One),
    (One, MinusOne),
    (MinusOne, MinusOne),
    (MinusOne, I),
    (MinusI, MinusOne),
    (MinusI, I),
    (MinusOne, MinusI),
    (I, MinusOne),
    (I, MinusI),
];

/// A Gaussian rational times π^pi_pow.
pub type PiConst = (Gaussian, u32);

fn real(r: BigRational) -> Gaussian {
    Gaussian::real(r)
}

fn sign(e: i64) -> BigRational {
    int(if e.rem_euclid(2) == 0 { 1 } else { -1 })
}

/// ζ(n) for even n ≥ 0.
pub fn zeta_even_const(n: u32) -> PiConst {
    let z = zeta_even_closed(n as i64).expect("even argument");
    (real(z.coeff), z.pi_pow)
}

/// φ(n) = (2^{1−n} − 1)ζ(n) for even n ≥ 0, with φ(0) = −1/2.
pub fn phi_even_const(n: u32) -> PiConst {
    let z = zeta_even_closed(n as i64).expect("even argument");
    (real((pow2(1 - n as i64) - int(1)) * z.coeff), z.pi_pow)
}

/// Λ(l; sign·i): −1 at l = 0, 2^{1−l}(2^{1−l}−1)ζ(l) for even l, 2·sign·i·L(l, χ₄) for odd l.
pub fn lambda_const(l: u32, sign_i: i64) -> PiConst {
    if l == 0 {
        return (real(int(-1)), 0);
    }
    if l.is_multiple_of(2) {
        let z = zeta_even_closed(l as i64).expect("even argument");
        let f = pow2(1 - l as i64);
        return (real(f.clone() * (f - int(1)) * z.coeff), z.pi_pow);
    }
    let c = l4_odd_closed(l as i64).expect("odd argument");
    (Gaussian::new(int(0), int(2 * sign_i) * c.coeff), c.pi_pow)
}

pub fn lambda_value(l: u32, sign_i: i64) -> ConstantExpression {
    let (c, p) = lambda_const(l, sign_i);
    ConstantExpression::monomial(ConstMonomial::pi(p), c)
}

#[derive(Clone, Copy)]
enum Kind {
    Zeta,
    Phi,
    Quarter(i64),
}

fn put(sc: &mut ShiftedCombination, kind: Kind, shift: i64, coef: &Gaussian, pi: u32) {
    match kind {
        Kind::Zeta => sc.add_term(Family::Zeta, shift, pi, 0, coef),
        Kind::Phi => {
            sc.add_term(Family::Zeta, shift, pi, 1, &coef.scale(&pow2(1 - shift)));
            sc.add_term(Family::Zeta, shift, pi, 0, &-coef.clone());
        }
        Kind::Quarter(sg) => {
            sc.add_term(Family::Zeta, shift, pi, 2, &coef.scale(&pow2(1 - 2 * shift)));
            sc.add_term(Family::Zeta, shift, pi, 1, &coef.scale(&-pow2(-shift)));
            sc.add_term(Family::L4, shift, pi, 0, &(coef * &Gaussian::new(int(0), int(sg))));
        }
    }
}

/// φ(s+k) = (2^{1−k}u − 1)ζ(s+k).
pub fn phi_reduce(k: i64) -> ShiftedCombination {
    let mut sc = ShiftedCombination::zero();
    put(&mut sc, Kind::Phi, k, &real(int(1)), 0);
    sc
}

/// φ(s+k; ±1/4) = (2^{1−2k}u² − 2^{−k}u)ζ(s+k) ± iL(s+k, χ₄).
pub fn phi_quarter_reduce(k: i64, sign: i64) -> ShiftedCombination {
    let mut sc = ShiftedCombination::zero();
    put(&mut sc, Kind::Quarter(sign.signum()), k, &real(int(1)), 0);
    sc
}

fn binom(n: i64, k: i64) -> BigRational {
    BigRational::from_integer(binomial(n, k))
}

/// Closed form of 𝔗(p, s+a, q; x, y) in the {ζ, L4} basis.
pub fn t_closed(p: u32, a: i64, q: u32, x: Root4, y: Root4) -> Result<ShiftedCombination, AlgebraError> {
    if p == 0 || q == 0 {
        return Err(AlgebraError::Domain(format!("t_closed needs p, q >= 1, got ({p}, {q})")));
    }
    let (pi, qi) = (p as i64, q as i64);
    let n = pi + qi;
    let mut sc = ShiftedCombination::zero();

    let even = match (x, y) {
        (One, One) => Some((false, Kind::Zeta, Kind::Zeta)),
        (MinusOne, One) => Some((true, Kind::Zeta, Kind::Phi)),
        (One, MinusOne) => Some((false, Kind::Phi, Kind::Phi)),
        (MinusOne, MinusOne) => Some((true, Kind::Phi, Kind::Zeta)),
        (MinusOne, I) => Some((true, Kind::Quarter(1), Kind::Quarter(-1))),
        (MinusOne, MinusI) => Some((true, Kind::Quarter(-1), Kind::Quarter(1))),
        _ => None,
    };
    if let Some((phi_weights, f1, f2)) = even {
        let cf = if phi_weights { phi_even_const } else { zeta_even_const };
        let two = real(sign(pi) * int(2));
        for k in 0..=pi / 2 {
            let (c, pw) = cf(2 * k as u32);
            put(&mut sc, f1, a + n - 2 * k, &(&two * &c).scale(&binom(n - 1 - 2 * k, qi - 1)), pw);
        }
        for k in 0..=qi / 2 {
            let (c, pw) = cf(2 * k as u32);
            put(&mut sc, f2, a + n - 2 * k, &(&two * &c).scale(&binom(n - 1 - 2 * k, pi - 1)), pw);
        }
        return Ok(sc);
    }

    let (sg, f1, f2) = match (x, y) {
        (MinusI, MinusOne) => (-1, Kind::Phi, Kind::Quarter(-1)),
        (MinusI, I) => (-1, Kind::Quarter(1), Kind::Phi),
        (I, MinusOne) => (1, Kind::Phi, Kind::Quarter(1)),
        (I, MinusI) => (1, Kind::Quarter(-1), Kind::Phi),
        _ => return Err(AlgebraError::Domain(format!("no closed form for (x, y) = ({x}, {y})"))),
    };
    let sgn = real(sign(pi));
    for l in 0..=pi {
        let (c, pw) = lambda_const(l as u32, sg);
        put(&mut sc, f1, a + n - l, &(&sgn * &c).scale(&(sign(l) * binom(n - 1 - l, qi - 1))), pw);
    }
    for l in 0..=qi {
        let (c, pw) = lambda_const(l as u32, sg);
        put(&mut sc, f2, a + n - l, &(&sgn * &c).scale(&binom(n - 1 - l, pi - 1)), pw);
    }
    Ok(sc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use a3z_exact::rat;

    #[test]
    fn phi_reduce_examples() {
        let k0 = phi_reduce(0);
        assert_eq!(k0.terms[&(0, Family::Zeta)].terms[&(0, 1)], real(int(2)));
        assert_eq!(k0.terms[&(0, Family::Zeta)].terms[&(0, 0)], real(int(-1)));
        let k3 = phi_reduce(3);
        assert_eq!(k3.terms[&(3, Family::Zeta)].terms[&(0, 1)], real(rat(1, 4)));
    }

    #[test]
    fn quarter_reduce_conjugate_pair() {
        let p = phi_quarter_reduce(0, 1);
        let m = phi_quarter_reduce(0, -1);
        assert_eq!(p.conj(), m);
        assert_eq!(p.terms[&(0, Family::Zeta)].terms[&(0, 2)], real(int(2)));
        assert_eq!(p.terms[&(0, Family::L4)].terms[&(0, 0)], Gaussian::i());
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(lambda_value(2, 1), ConstantExpression::monomial(ConstMonomial::pi(2), real(rat(-1, 24))));
        assert_eq!(lambda_value(1, 1), ConstantExpression::monomial(ConstMonomial::pi(1), Gaussian::new(int(0), rat(1, 2))));
        assert_eq!(lambda_value(0, -1), ConstantExpression::constant(real(int(-1))));
    }

    #[test]
    fn t_closed_unit_exponents() {
        let t = t_closed(1, 0, 1, One, One).unwrap();
        let mut want = ShiftedCombination::zero();
        want.add_term(Family::Zeta, 2, 0, 0, &real(int(2)));
        assert_eq!(t, want);
    }

    #[test]
    fn t_closed_conjugation() {
        for (x, y) in SUPPORTED_PAIRS {
            for (p, q) in [(1, 1), (2, 3), (3, 2)] {
                let a = t_closed(p, 1, q, x, y).unwrap();
                let b = t_closed(p, 1, q, x.conj(), y.conj()).unwrap();
                assert_eq!(a.conj(), b, "({x}, {y}) p={p} q={q}");
            }
        }
    }

    #[test]
    fn unsupported_pair() {
        assert!(matches!(t_closed(2, 0, 2, I, I), Err(AlgebraError::Domain(_))));
    }

    #[test]
    fn root_parsing() {
        for r in [One, I, MinusOne, MinusI] {
            assert_eq!(r.as_str().parse::<Root4>().unwrap(), r);
        }
        assert!("2".parse::<Root4>().is_err());
    }
}
