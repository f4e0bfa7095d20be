use std::collections::HashMap;

use a3z_exact::{pow2, Gaussian};
use a3z_series::dd::{dd, exp, from_rational, ln, pi, Dd, EPS};
use a3z_series::{eval_l4, eval_zeta, NumericValue, Precision, C};

use crate::expr::{ConstMonomial, ConstantExpression, Factor, Family, ShiftedCombination};
use crate::AlgebraError;

/// Substitute s = s0, reducing even ζ and odd L4 to π-powers.
pub fn specialize(c: &ShiftedCombination, s0: i64) -> Result<ConstantExpression, AlgebraError> {
    let mut out = ConstantExpression::zero();
    for (&(shift, fam), coef) in &c.terms {
        let arg = s0 + shift;
        let bad = match fam {
            Family::Zeta => arg <= 1,
            Family::L4 => arg <= 0,
        };
        if bad {
            return Err(AlgebraError::Singularity(format!("{}({arg}) at s = {s0}", fam.as_str())));
        }
        let f = Factor { arg: arg as u32, family: fam };
        for (&(p, u), v) in &coef.terms {
            let w = v.scale(&pow2(-s0 * u as i64));
            out.add_term(ConstMonomial::new(p, vec![f]), &w);
        }
    }
    Ok(out.normalize())
}

/// What to evaluate: a constant, or a shifted combination at real s.
#[derive(Debug, Clone, Copy)]
pub enum Numeric<'a> {
    Constant(&'a ConstantExpression),
    Shifted(&'a ShiftedCombination, f64),
}

fn gauss_c(g: &Gaussian) -> C {
    C::new(from_rational(&g.re), from_rational(&g.im))
}

struct Factors<'a> {
    prec: &'a Precision,
    memo: HashMap<(Family, u64), NumericValue>,
}

impl Factors<'_> {
    fn get(&mut self, fam: Family, arg: f64) -> Result<NumericValue, AlgebraError> {
        let key = (fam, arg.to_bits());
        if let Some(v) = self.memo.get(&key) {
            return Ok(*v);
        }
        let v = match fam {
            Family::Zeta => eval_zeta(arg, self.prec)?,
            Family::L4 => eval_l4(arg, self.prec)?,
        };
        self.memo.insert(key, v);
        Ok(v)
    }
}

/// Value and first-order error of a product of factor values.
fn product(vals: &[NumericValue]) -> (C, f64) {
    let mut value = C::ONE;
    let mut err = 0.0;
    for (i, v) in vals.iter().enumerate() {
        value = value * v.value;
        let others: f64 = vals.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, w)| w.value.abs()).product();
        err += v.error_bound() * others;
    }
    (value, err)
}

pub fn expr_eval_numeric(e: Numeric<'_>, prec: &Precision) -> Result<NumericValue, AlgebraError> {
    let mut f = Factors { prec, memo: HashMap::new() };
    let mut value = C::ZERO;
    let mut bound = 0.0;
    let mut mag = 0.0;
    let pi_pow = |k: u32| -> Dd { pi().powi(k as i32) };
    match e {
        Numeric::Constant(c) => {
            for (m, g) in &c.terms {
                let vals = m
                    .factors
                    .iter()
                    .map(|fa| f.get(fa.family, fa.arg as f64))
                    .collect::<Result<Vec<_>, _>>()?;
                let (v, err) = product(&vals);
                let w = gauss_c(g).scale(pi_pow(m.pi_pow));
                value += w * v;
                bound += w.abs() * err;
                mag += (w * v).abs();
            }
        }
        Numeric::Shifted(sc, s0) => {
            let u = if s0.fract() == 0.0 { dd(2.0).powi(-(s0 as i32)) } else { exp(-dd(s0) * ln(dd(2.0))) };
            for (&(shift, fam), coef) in &sc.terms {
                let arg = s0 + shift as f64;
                let v = f.get(fam, arg)?;
                let mut w = C::ZERO;
                for (&(p, up), g) in &coef.terms {
                    w += gauss_c(g).scale(pi_pow(p) * u.powi(up as i32));
                }
                value += w * v.value;
                bound += w.abs() * v.error_bound();
                mag += (w * v.value).abs();
            }
        }
    }
    Ok(NumericValue::new(value, bound, 16.0 * EPS * mag))
}
