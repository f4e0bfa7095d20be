use std::collections::BTreeMap;
use std::fmt;

use a3z_exact::{l4_odd_closed, zeta_even_closed, Gaussian};
use num_traits::Zero;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Zeta,
    L4,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::Zeta => "zeta",
            Family::L4 => "L4",
        }
    }

    pub fn parse(s: &str) -> Option<Family> {
        match s {
            "zeta" => Some(Family::Zeta),
            "L4" => Some(Family::L4),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// ζ(arg) or L(arg, χ₄).  Ordered by argument, ζ before L4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Factor {
    pub arg: u32,
    pub family: Family,
}

impl Factor {
    pub fn zeta(arg: u32) -> Self {
        Factor { arg, family: Family::Zeta }
    }

    pub fn l4(arg: u32) -> Self {
        Factor { arg, family: Family::L4 }
    }

    /// True when the factor has a rational-times-π-power closed form.
    pub fn reducible(&self) -> bool {
        match self.family {
            Family::Zeta => self.arg.is_multiple_of(2),
            Family::L4 => self.arg % 2 == 1,
        }
    }
}

/// π^pi_pow times a sorted multiset of factors.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConstMonomial {
    pub factors: Vec<Factor>,
    pub pi_pow: u32,
}

impl ConstMonomial {
    pub fn new(pi_pow: u32, mut factors: Vec<Factor>) -> Self {
        factors.sort();
        ConstMonomial { factors, pi_pow }
    }

    pub fn pi(pi_pow: u32) -> Self {
        ConstMonomial { factors: Vec::new(), pi_pow }
    }

    pub fn mul(&self, o: &ConstMonomial) -> ConstMonomial {
        let mut f = self.factors.clone();
        f.extend_from_slice(&o.factors);
        ConstMonomial::new(self.pi_pow + o.pi_pow, f)
    }
}

fn add_into<K: Ord>(map: &mut BTreeMap<K, Gaussian>, k: K, c: &Gaussian) {
    if c.is_zero() {
        return;
    }
    *map.entry(k).or_default() += c;
}

fn prune<K: Ord + Clone>(map: &mut BTreeMap<K, Gaussian>) {
    map.retain(|_, v| !v.is_zero());
}

/// Finite sum of Gaussian-rational multiples of constant monomials.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ConstantExpression {
    pub terms: BTreeMap<ConstMonomial, Gaussian>,
}

impl ConstantExpression {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Gaussian) -> Self {
        Self::monomial(ConstMonomial::pi(0), c)
    }

    pub fn monomial(m: ConstMonomial, c: Gaussian) -> Self {
        let mut e = Self::zero();
        e.add_term(m, &c);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: ConstMonomial, c: &Gaussian) {
        add_into(&mut self.terms, m, c);
        prune(&mut self.terms);
    }

    pub fn add(&self, o: &ConstantExpression) -> ConstantExpression {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            add_into(&mut out.terms, m.clone(), c);
        }
        prune(&mut out.terms);
        out
    }

    pub fn sub(&self, o: &ConstantExpression) -> ConstantExpression {
        self.add(&o.scale(&-Gaussian::real(a3z_exact::int(1))))
    }

    pub fn scale(&self, c: &Gaussian) -> ConstantExpression {
        let mut out = Self::zero();
        for (m, v) in &self.terms {
            add_into(&mut out.terms, m.clone(), &(v * c));
        }
        prune(&mut out.terms);
        out
    }

    pub fn mul(&self, o: &ConstantExpression) -> ConstantExpression {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                add_into(&mut out.terms, m1.mul(m2), &(c1 * c2));
            }
        }
        prune(&mut out.terms);
        out.normalize()
    }

    pub fn conj(&self) -> ConstantExpression {
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = v.conj();
        }
        out
    }

    pub fn real_part(&self) -> ConstantExpression {
        let mut out = Self::zero();
        for (m, v) in &self.terms {
            add_into(&mut out.terms, m.clone(), &Gaussian::real(v.re.clone()));
        }
        prune(&mut out.terms);
        out
    }

    pub fn imag_part(&self) -> ConstantExpression {
        let mut out = Self::zero();
        for (m, v) in &self.terms {
            add_into(&mut out.terms, m.clone(), &Gaussian::real(v.im.clone()));
        }
        prune(&mut out.terms);
        out
    }

    pub fn is_real(&self) -> bool {
        self.terms.values().all(Gaussian::is_real)
    }

    /// Replace every even ζ and odd L4 factor by its π-power closed form.
    pub fn normalize(&self) -> ConstantExpression {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut pi_pow = m.pi_pow;
            let mut kept = Vec::new();
            for f in &m.factors {
                let closed = match f.family {
                    Family::Zeta if f.arg % 2 == 0 => zeta_even_closed(f.arg as i64).ok(),
                    Family::L4 if f.arg % 2 == 1 => l4_odd_closed(f.arg as i64).ok(),
                    _ => None,
                };
                match closed {
                    Some(pr) => {
                        coeff = coeff.scale(&pr.coeff);
                        pi_pow += pr.pi_pow;
                    }
                    None => kept.push(*f),
                }
            }
            add_into(&mut out.terms, ConstMonomial::new(pi_pow, kept), &coeff);
        }
        prune(&mut out.terms);
        out
    }

    pub fn is_normalized(&self) -> bool {
        self.terms.keys().all(|m| m.factors.iter().all(|f| !f.reducible()))
    }
}

/// Polynomial in π and u = 2⁻ˢ with Gaussian-rational coefficients, keyed (pi_pow, u_pow).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SymbolicCoefficient {
    pub terms: BTreeMap<(u32, u32), Gaussian>,
}

impl SymbolicCoefficient {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, pi_pow: u32, u_pow: u32, c: &Gaussian) {
        add_into(&mut self.terms, (pi_pow, u_pow), c);
        prune(&mut self.terms);
    }

    /// Terms in display order: descending u power, then ascending π power.
    pub fn ordered(&self) -> Vec<(u32, u32, &Gaussian)> {
        let mut v: Vec<_> = self.terms.iter().map(|(&(p, u), c)| (p, u, c)).collect();
        v.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
        v
    }
}

/// Σ over (shift k, family) of a symbolic coefficient times ζ(s+k) or L(s+k, χ₄).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ShiftedCombination {
    pub terms: BTreeMap<(i64, Family), SymbolicCoefficient>,
}

impl ShiftedCombination {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, family: Family, shift: i64, pi_pow: u32, u_pow: u32, c: &Gaussian) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry((shift, family)).or_default();
        e.add_term(pi_pow, u_pow, c);
        if e.is_zero() {
            self.terms.remove(&(shift, family));
        }
    }

    /// self += scale · π^pi_shift · other
    pub fn add_scaled(&mut self, other: &ShiftedCombination, scale: &Gaussian, pi_shift: u32) {
        for (&(shift, fam), coef) in &other.terms {
            for (&(p, u), c) in &coef.terms {
                self.add_term(fam, shift, p + pi_shift, u, &(c * scale));
            }
        }
    }

    pub fn add(&self, o: &ShiftedCombination) -> ShiftedCombination {
        let mut out = self.clone();
        out.add_scaled(o, &Gaussian::real(a3z_exact::int(1)), 0);
        out
    }

    pub fn scale(&self, c: &Gaussian) -> ShiftedCombination {
        let mut out = Self::zero();
        out.add_scaled(self, c, 0);
        out
    }

    pub fn conj(&self) -> ShiftedCombination {
        let mut out = self.clone();
        for coef in out.terms.values_mut() {
            for v in coef.terms.values_mut() {
                *v = v.conj();
            }
        }
        out
    }

    pub fn real_part(&self) -> ShiftedCombination {
        let mut out = Self::zero();
        for (&(shift, fam), coef) in &self.terms {
            for (&(p, u), c) in &coef.terms {
                out.add_term(fam, shift, p, u, &Gaussian::real(c.re.clone()));
            }
        }
        out
    }

    pub fn min_shift(&self) -> Option<i64> {
        self.terms.keys().map(|k| k.0).min()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use a3z_exact::{int, rat};

    fn g(n: i64, d: i64) -> Gaussian {
        Gaussian::real(rat(n, d))
    }

    #[test]
    fn normalize_reduces_even_zeta_and_odd_l4() {
        let mut e = ConstantExpression::zero();
        e.add_term(ConstMonomial::new(0, vec![Factor::zeta(2)]), &g(1, 1));
        e.add_term(ConstMonomial::new(1, vec![Factor::l4(3), Factor::zeta(3)]), &g(2, 1));
        let n = e.normalize();
        assert!(n.is_normalized());
        assert_eq!(n.terms[&ConstMonomial::pi(2)], g(1, 6));
        assert_eq!(n.terms[&ConstMonomial::new(4, vec![Factor::zeta(3)])], g(1, 16));
        assert_eq!(n.normalize(), n);
    }

    #[test]
    fn cancellation_removes_terms() {
        let mut e = ConstantExpression::constant(g(1, 2));
        e.add_term(ConstMonomial::pi(0), &g(-1, 2));
        assert!(e.is_zero());
        let mut s = ShiftedCombination::zero();
        s.add_term(Family::Zeta, 2, 0, 1, &g(3, 1));
        s.add_term(Family::Zeta, 2, 0, 1, &g(-3, 1));
        assert!(s.is_zero());
    }

    #[test]
    fn product_of_symbolic_factors() {
        let z3 = ConstantExpression::monomial(ConstMonomial::new(0, vec![Factor::zeta(3)]), g(1, 1));
        let sq = z3.mul(&z3);
        let m = ConstMonomial::new(0, vec![Factor::zeta(3), Factor::zeta(3)]);
        assert_eq!(sq.terms[&m], Gaussian::real(int(1)));
    }

    #[test]
    fn real_and_imaginary_parts() {
        let e = ConstantExpression::constant(Gaussian::new(rat(1, 2), rat(3, 4)));
        assert_eq!(e.real_part(), ConstantExpression::constant(g(1, 2)));
        assert_eq!(e.imag_part(), ConstantExpression::constant(g(3, 4)));
        assert_eq!(e.conj().conj(), e);
    }
}
