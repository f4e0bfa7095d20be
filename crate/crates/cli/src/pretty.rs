//! Typeset rendering for terminal output.  The canonical parseable form is
//! the `Display` of the expression types.

use a3z_algebra::{gaussian_text, ConstantExpression, Family};

fn superscript(n: u32) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string().chars().map(|c| DIGITS[c.to_digit(10).unwrap_or(0) as usize]).collect()
}

/// `(1103/145332633600)·π¹² + (2)·ζ(3)·L(4,χ₄)`
pub fn constant(e: &ConstantExpression) -> String {
    if e.is_zero() {
        return "0".into();
    }
    let mut parts = Vec::new();
    for (m, c) in &e.terms {
        let mut s = format!("({})", gaussian_text(c));
        match m.pi_pow {
            0 => {}
            1 => s.push_str("·π"),
            k => s.push_str(&format!("·π{}", superscript(k))),
        }
        for f in &m.factors {
            match f.family {
                Family::Zeta => s.push_str(&format!("·ζ({})", f.arg)),
                Family::L4 => s.push_str(&format!("·L({},χ₄)", f.arg)),
            }
        }
        parts.push(s);
    }
    parts.join(" + ")
}

pub fn tuple<T: std::fmt::Display>(t: &[T]) -> String {
    let v: Vec<String> = t.iter().map(|x| x.to_string()).collect();
    format!("({})", v.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;
    use a3z_algebra::parse_constant;

    #[test]
    fn pi_power_display() {
        let e = parse_constant("(1103/145332633600)*pi^12").unwrap();
        assert_eq!(constant(&e), "(1103/145332633600)·π¹²");
        let e = parse_constant("(1/2)*pi^1*L4(3) + (-1)*zeta(3)").unwrap();
        assert_eq!(constant(&e), "(-1)·ζ(3) + (1/2)·π·L(3,χ₄)");
    }
}
