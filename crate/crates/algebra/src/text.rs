//! Canonical text form.  Constants: `(1/6)*pi^2 + (2)*zeta(3)`; shifted
//! combinations: `[(2)*u^1 + (-1)]*zeta(s) + [(0+1*i)]*L4(s+2)`.

use std::fmt;

use a3z_exact::{int, parse_rational, BigRational, Gaussian};
use num_traits::{Signed, Zero};

use crate::expr::{ConstMonomial, ConstantExpression, Factor, Family, ShiftedCombination};
use crate::AlgebraError;

pub fn gaussian_text(g: &Gaussian) -> String {
    match (g.re.is_zero(), g.im.is_zero()) {
        (_, true) => g.re.to_string(),
        (true, false) => format!("{}*i", g.im),
        (false, false) => {
            let sign = if g.im.is_negative() { '-' } else { '+' };
            format!("{}{}{}*i", g.re, sign, g.im.abs())
        }
    }
}

fn shift_text(k: i64) -> String {
    match k {
        0 => "s".into(),
        k if k > 0 => format!("s+{k}"),
        k => format!("s-{}", -k),
    }
}

impl fmt::Display for ConstantExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (m, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({})", gaussian_text(c))?;
            if m.pi_pow > 0 {
                write!(f, "*pi^{}", m.pi_pow)?;
            }
            for fa in &m.factors {
                write!(f, "*{}({})", fa.family, fa.arg)?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for ShiftedCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (&(shift, fam), coef)) in self.terms.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            f.write_str("[")?;
            for (j, (p, u, c)) in coef.ordered().into_iter().enumerate() {
                if j > 0 {
                    f.write_str(" + ")?;
                }
                write!(f, "({})", gaussian_text(c))?;
                if p > 0 {
                    write!(f, "*pi^{p}")?;
                }
                if u > 0 {
                    write!(f, "*u^{u}")?;
                }
            }
            write!(f, "]*{}({})", fam, shift_text(shift))?;
        }
        Ok(())
    }
}

fn perr(msg: impl Into<String>) -> AlgebraError {
    AlgebraError::Parse(msg.into())
}

/// Split on " + " outside brackets.
fn split_terms(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let b = s.as_bytes();
    let mut i = 0;
    while i < b.len() {
        match b[i] {
            b'(' | b'[' => depth += 1,
            b')' | b']' => depth -= 1,
            b' ' if depth == 0 && s[i..].starts_with(" + ") => {
                out.push(&s[start..i]);
                i += 3;
                start = i;
                continue;
            }
            _ => {}
        }
        i += 1;
    }
    out.push(&s[start..]);
    out
}

/// Index of the bracket closing the one at position 0.
fn closing(s: &str) -> Result<usize, AlgebraError> {
    let mut depth = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => {
                depth -= 1;
                if depth == 0 {
                    return Ok(i);
                }
            }
            _ => {}
        }
    }
    Err(perr(format!("unbalanced brackets in {s:?}")))
}

fn rational(s: &str) -> Result<BigRational, AlgebraError> {
    parse_rational(s.trim_start_matches('+')).map_err(|e| perr(e.to_string()))
}

pub fn parse_gaussian(s: &str) -> Result<Gaussian, AlgebraError> {
    let s = s.trim();
    let Some(body) = s.strip_suffix("*i") else {
        return Ok(Gaussian::real(rational(s)?));
    };
    match body.rfind(['+', '-']).filter(|&i| i > 0) {
        Some(i) => Ok(Gaussian::new(rational(&body[..i])?, rational(&body[i..])?)),
        None => Ok(Gaussian::new(int(0), rational(body)?)),
    }
}

/// Leading "(coeff)" and the remaining "*..." factors.
fn coeff_and_rest(t: &str) -> Result<(Gaussian, Vec<&str>), AlgebraError> {
    let t = t.trim();
    if !t.starts_with('(') {
        return Err(perr(format!("term must start with a parenthesised coefficient: {t:?}")));
    }
    let end = closing(t)?;
    let c = parse_gaussian(&t[1..end])?;
    let rest = &t[end + 1..];
    let parts = if rest.is_empty() {
        Vec::new()
    } else {
        rest.strip_prefix('*').ok_or_else(|| perr(format!("expected '*' in {t:?}")))?.split('*').collect()
    };
    Ok((c, parts))
}

fn power(part: &str, base: &str) -> Option<Result<u32, AlgebraError>> {
    let rest = part.strip_prefix(base)?;
    if rest.is_empty() {
        return Some(Ok(1));
    }
    Some(rest.strip_prefix('^').and_then(|e| e.parse().ok()).ok_or_else(|| perr(format!("bad power {part:?}"))))
}

fn family_call(part: &str) -> Option<(Family, &str)> {
    for fam in [Family::Zeta, Family::L4] {
        if let Some(inner) = part.strip_prefix(fam.as_str()).and_then(|r| r.strip_prefix('(')).and_then(|r| r.strip_suffix(')')) {
            return Some((fam, inner));
        }
    }
    None
}

pub fn parse_constant(s: &str) -> Result<ConstantExpression, AlgebraError> {
    let mut out = ConstantExpression::zero();
    if s.trim() == "0" {
        return Ok(out);
    }
    for t in split_terms(s.trim()) {
        let (c, parts) = coeff_and_rest(t)?;
        let mut pi_pow = 0;
        let mut factors = Vec::new();
        for part in parts {
            if let Some(p) = power(part, "pi") {
                pi_pow += p?;
            } else if let Some((family, arg)) = family_call(part) {
                let arg = arg.parse().map_err(|_| perr(format!("bad argument {arg:?}")))?;
                factors.push(Factor { arg, family });
            } else {
                return Err(perr(format!("unknown factor {part:?}")));
            }
        }
        out.add_term(ConstMonomial::new(pi_pow, factors), &c);
    }
    Ok(out)
}

fn parse_shift(s: &str) -> Result<i64, AlgebraError> {
    let bad = || perr(format!("bad shifted argument {s:?}"));
    let rest = s.strip_prefix('s').ok_or_else(bad)?;
    if rest.is_empty() {
        return Ok(0);
    }
    if let Some(k) = rest.strip_prefix('+') {
        return k.parse().map_err(|_| bad());
    }
    rest.strip_prefix('-').and_then(|k| k.parse::<i64>().ok()).map(|k| -k).ok_or_else(bad)
}

pub fn parse_shifted(s: &str) -> Result<ShiftedCombination, AlgebraError> {
    let mut out = ShiftedCombination::zero();
    if s.trim() == "0" {
        return Ok(out);
    }
    for t in split_terms(s.trim()) {
        let t = t.trim();
        if !t.starts_with('[') {
            return Err(perr(format!("term must start with '[': {t:?}")));
        }
        let end = closing(t)?;
        let call = t[end + 1..].strip_prefix('*').ok_or_else(|| perr(format!("expected '*' in {t:?}")))?;
        let (fam, arg) = family_call(call).ok_or_else(|| perr(format!("unknown family in {call:?}")))?;
        let shift = parse_shift(arg)?;
        for ct in split_terms(&t[1..end]) {
            let (c, parts) = coeff_and_rest(ct)?;
            let (mut p, mut u) = (0, 0);
            for part in parts {
                if let Some(e) = power(part, "pi") {
                    p += e?;
                } else if let Some(e) = power(part, "u") {
                    u += e?;
                } else {
                    return Err(perr(format!("unknown coefficient factor {part:?}")));
                }
            }
            out.add_term(fam, shift, p, u, &c);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed::{phi_quarter_reduce, phi_reduce, t_closed, SUPPORTED_PAIRS};
    use crate::eval::specialize;
    use a3z_exact::rat;

    #[test]
    fn renders_phi() {
        assert_eq!(phi_reduce(0).to_string(), "[(2)*u^1 + (-1)]*zeta(s)");
        assert_eq!(phi_quarter_reduce(1, -1).to_string(), "[(1/2)*u^2 + (-1/2)*u^1]*zeta(s+1) + [(-1*i)]*L4(s+1)");
    }

    #[test]
    fn gaussian_forms() {
        for g in [Gaussian::new(rat(1, 2), rat(-3, 4)), Gaussian::new(int(0), rat(-1, 3)), Gaussian::new(rat(-5, 1), rat(2, 7))] {
            assert_eq!(parse_gaussian(&gaussian_text(&g)).unwrap(), g);
        }
    }

    #[test]
    fn round_trip_closed_forms() {
        for (x, y) in SUPPORTED_PAIRS {
            let t = t_closed(2, -1, 3, x, y).unwrap();
            assert_eq!(parse_shifted(&t.to_string()).unwrap(), t);
            let c = specialize(&t, 4).unwrap();
            assert_eq!(parse_constant(&c.to_string()).unwrap(), c);
        }
        assert_eq!(parse_shifted("0").unwrap(), ShiftedCombination::zero());
    }

    #[test]
    fn parse_errors() {
        assert!(parse_constant("(1/2)*foo(3)").is_err());
        assert!(parse_shifted("[(1)]*zeta(t)").is_err());
        assert!(parse_constant("(1/2").is_err());
    }
}
