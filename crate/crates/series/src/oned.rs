//! One-dimensional Dirichlet series Σ zⁿ n⁻ˢ with |z| = 1.
//!
//! The first `cutoff − 1` terms are summed directly; the remainder comes from
//! Euler–Maclaurin when z = 1 and from the expansion
//!   Σ_{n≥N} zⁿ (N/n)ˢ = z^N Σ_k (−1)ᵏ (s)ₖ/k! N⁻ᵏ Li₋ₖ(z)
//! otherwise (Li₀ replaced by 1/(1−z), which includes n = N).

use std::sync::OnceLock;

use a3z_exact::{bernoulli_number, factorial, BigRational};

use crate::complex::C;
use crate::dd::{dd, from_rational, inv_pow, to_f64, Dd, EPS};
use crate::value::{NumericValue, Precision, SeriesError};

const EM_TERMS: usize = 40;
const LI_TERMS: usize = 28;

/// Below this distance from 1 a phase counts as trivial.
const PHASE_ONE: f64 = 1e-12;

fn em_coeffs() -> &'static [Dd] {
    static T: OnceLock<Vec<Dd>> = OnceLock::new();
    T.get_or_init(|| {
        (0..=EM_TERMS)
            .map(|k| {
                let b = bernoulli_number(2 * k) / BigRational::from_integer(factorial(2 * k as u32));
                from_rational(&b)
            })
            .collect()
    })
}

/// Coefficients of Li₋ₖ(z) as polynomials in w = z/(1−z).
fn li_neg_polys() -> &'static [Vec<Dd>] {
    static T: OnceLock<Vec<Vec<Dd>>> = OnceLock::new();
    T.get_or_init(|| {
        let mut out: Vec<Vec<f64>> = vec![vec![0.0, 1.0]];
        for k in 0..LI_TERMS {
            let a = &out[k];
            let mut b = vec![0.0; a.len() + 1];
            for j in 1..a.len() {
                b[j] += j as f64 * a[j];
                b[j + 1] += j as f64 * a[j];
            }
            out.push(b);
        }
        out.into_iter().map(|v| v.into_iter().map(dd).collect()).collect()
    })
}

#[derive(Debug, Clone, Copy)]
pub struct Tail {
    pub value: C,
    pub bound: f64,
}

/// Σ_{n≥n0} zⁿ (n0/n)ˢ.  For z = 1 this needs s > 1.
pub fn tail_scaled(s: Dd, z: C, n0: u64) -> Tail {
    assert!(n0 >= 1);
    if z.dist_one() < PHASE_ONE {
        em_tail_scaled(s, n0)
    } else {
        phased_tail_scaled(s, z, n0)
    }
}

fn em_tail_scaled(s: Dd, n0: u64) -> Tail {
    // small starts: peel terms so the expansion is used at n ≥ 12
    if n0 < 12 {
        let mut acc = dd(0.0);
        let n0f = n0 as f64;
        for n in n0..12 {
            acc += inv_pow(n as f64 / n0f, s);
        }
        let t = em_tail_scaled(s, 12);
        let f = inv_pow(12.0 / n0f, s);
        return Tail { value: C::real(acc + t.value.re * f), bound: t.bound * to_f64(f) };
    }
    let x = n0 as f64;
    let c = em_coeffs();
    let mut value = dd(x) / (s - 1.0) + 0.5;
    let mut poch = s;
    let mut xp = dd(1.0) / x;
    let mut last = f64::INFINITY;
    let mut bound = 0.0;
    for k in 1..=EM_TERMS {
        let t = c[k] * poch * xp;
        let a = to_f64(t).abs();
        if a > last {
            bound = last;
            break;
        }
        value += t;
        last = a;
        bound = a;
        if a < 1e-34 * to_f64(value).abs() {
            break;
        }
        poch = poch * (s + (2 * k - 1) as f64) * (s + (2 * k) as f64);
        xp /= x * x;
    }
    Tail { value: C::real(value), bound }
}

/// Euler–Maclaurin correction weights B₂ₖ/(2k)!·(s)₂ₖ₋₁ for k = 1, 2, … kept while
/// the terms at x shrink, with the size of the first omitted term relative to x^{−s}.
pub fn em_tail_terms(s: Dd, x: f64) -> (Vec<Dd>, f64) {
    let c = em_coeffs();
    let mut out = Vec::new();
    let mut poch = s;
    let mut xp = 1.0 / x;
    let mut last = f64::INFINITY;
    for k in 1..=EM_TERMS {
        let w = c[k] * poch;
        let a = to_f64(w).abs() * xp;
        if a > last || a < 1e-34 {
            return (out, a.min(last));
        }
        out.push(w);
        last = a;
        poch = poch * (s + (2 * k - 1) as f64) * (s + (2 * k) as f64);
        xp /= x * x;
    }
    (out, last)
}

fn phased_tail_scaled(s: Dd, z: C, n0: u64) -> Tail {
    let one_minus = C::ONE - z;
    let w = z * one_minus.inv();
    let polys = li_neg_polys();
    let nf = n0 as f64;
    let mut sum = one_minus.inv();
    let mut coef = dd(1.0); // (−1)^k (s)_k / k! / n0^k
    let mut last = sum.abs();
    let mut bound = last;
    for (k, p) in polys.iter().enumerate().skip(1).take(LI_TERMS) {
        coef = -coef * (s + (k - 1) as f64) / (k as f64 * nf);
        let mut li = C::ZERO;
        for a in p.iter().rev() {
            li = li * w + C::real(*a);
        }
        let t = li * coef;
        let mag = t.abs();
        // Li₋ₖ(−1) vanishes for even k, so zero terms say nothing about convergence
        if mag == 0.0 {
            continue;
        }
        if mag > last && k > 2 {
            break;
        }
        sum += t;
        last = mag;
        bound = mag;
        if mag < 1e-34 * sum.abs() {
            break;
        }
    }
    let zn = z.powi(n0 as i64);
    Tail { value: zn * sum, bound }
}

/// Σ_{n≥n0} zⁿ n⁻ˢ.
pub fn tail(s: Dd, z: C, n0: u64) -> Tail {
    let t = tail_scaled(s, z, n0);
    let f = inv_pow(n0 as f64, s);
    Tail { value: t.value.scale(f), bound: t.bound * to_f64(f) }
}

/// Σ_{n≥1} zⁿ n⁻ˢ.
pub fn polylog(s: Dd, z: C, prec: &Precision) -> Result<NumericValue, SeriesError> {
    let trivial = z.dist_one() < PHASE_ONE;
    if trivial && s.hi() <= 1.0 {
        return Err(SeriesError::Convergence(format!("Σ n^-s with s = {}", to_f64(s))));
    }
    if !trivial && s.hi() <= 0.0 {
        return Err(SeriesError::Domain(format!("phased series needs s > 0, got {}", to_f64(s))));
    }
    let n = prec.cutoff as u64;
    let mut acc = C::ZERO;
    let mut zn = C::ONE;
    let mut majorant = 0.0;
    for k in 1..n {
        zn = if trivial { C::ONE } else { zn * z };
        let p = inv_pow(k as f64, s);
        majorant += to_f64(p);
        acc += zn.scale(p);
    }
    let t = tail(s, z, n);
    Ok(NumericValue::new(acc + t.value, t.bound, 4.0 * n as f64 * EPS * majorant))
}

/// Λ_j(z) = lim Σ_{0<|l|≤L} zˡ l⁻ʲ (symmetric partial sums).
pub fn two_sided(j: i64, z: C, prec: &Precision) -> Result<NumericValue, SeriesError> {
    if j < 1 {
        return Err(SeriesError::Domain(format!("two-sided sum needs j >= 1, got {j}")));
    }
    if z.dist_one() < PHASE_ONE {
        if j % 2 == 1 {
            return Ok(NumericValue::exact(C::ZERO));
        }
        return Ok(polylog(dd(j as f64), C::ONE, prec)?.scale_c(C::from_f64(2.0, 0.0)));
    }
    let a = polylog(dd(j as f64), z, prec)?;
    let b = polylog(dd(j as f64), z.conj(), prec)?;
    let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
    Ok(a.add(&b.scale_c(C::from_f64(sign, 0.0))))
}

pub fn eval_zeta(s: f64, prec: &Precision) -> Result<NumericValue, SeriesError> {
    if s <= 1.0 {
        return Err(SeriesError::Convergence(format!("zeta({s}) is at or left of the pole")));
    }
    polylog(dd(s), C::ONE, prec)
}

/// φ(s) = Σ (−1)ⁿ n⁻ˢ.
pub fn eval_phi(s: f64, prec: &Precision) -> Result<NumericValue, SeriesError> {
    if s <= 0.0 {
        return Err(SeriesError::Domain(format!("phi needs s > 0, got {s}")));
    }
    polylog(dd(s), C::from_f64(-1.0, 0.0), prec)
}

/// φ(s; α) = Σ e^{2πinα} n⁻ˢ for α ∈ {1/4, 1/2, 3/4}.
pub fn eval_phi_alpha(s: f64, alpha: &BigRational, prec: &Precision) -> Result<NumericValue, SeriesError> {
    let four = alpha * BigRational::from_integer(4.into());
    let k: Option<i64> = if four.is_integer() { four.to_integer().try_into().ok() } else { None };
    let z = match k {
        Some(k @ 1..=3) => C::i_pow(k),
        _ => return Err(SeriesError::Domain(format!("unsupported alpha {alpha}"))),
    };
    if s <= 0.0 {
        return Err(SeriesError::Domain(format!("phi(s; alpha) needs s > 0, got {s}")));
    }
    polylog(dd(s), z, prec)
}

/// L(s, χ₄) = Im Li_s(i).
pub fn eval_l4(s: f64, prec: &Precision) -> Result<NumericValue, SeriesError> {
    if s <= 0.0 {
        return Err(SeriesError::Domain(format!("L(s, chi4) needs s > 0, got {s}")));
    }
    let v = polylog(dd(s), C::i_pow(1), prec)?;
    Ok(NumericValue::new(C::real(v.value.im), v.tail_bound, v.rounding_slack))
}

/// Plain f64 Hurwitz tail Σ_{n≥n0} n⁻ˢ, used by majorant bounds.
pub fn hurwitz_tail_f64(s: f64, n0: u64) -> f64 {
    if s <= 1.0 {
        return f64::INFINITY;
    }
    let t = tail(dd(s), C::ONE, n0.max(1));
    to_f64(t.value.re) + t.bound
}

/// ζ(s) in f64, +∞ at or left of the pole.
pub fn zeta_f64(s: f64) -> f64 {
    hurwitz_tail_f64(s, 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dd::pi;
    use a3z_exact::rat;

    fn p() -> Precision {
        Precision::default()
    }

    #[test]
    fn zeta_two() {
        let v = eval_zeta(2.0, &p()).unwrap();
        let exact = pi() * pi() / 6.0;
        assert!((v.value.re - exact).abs().hi() < 1e-30);
        assert!(v.tail_bound < 1e-25);
    }

    #[test]
    fn zeta_pole_rejected() {
        assert!(matches!(eval_zeta(1.0, &p()), Err(SeriesError::Convergence(_))));
    }

    #[test]
    fn zeta_eleven_against_direct_sum() {
        let v = eval_zeta(11.0, &p()).unwrap();
        let direct: f64 = (1..=800).map(|n| (n as f64).powi(-11)).sum();
        assert!((v.re() - direct).abs() < 1e-15);
    }

    #[test]
    fn zeta_non_integer() {
        // ζ(2.5) = 1.341487257250917179756769702...
        let v = eval_zeta(2.5, &p()).unwrap();
        assert!((v.re() - 1.341_487_257_250_917).abs() < 1e-15);
    }

    #[test]
    fn phi_matches_eta_relation() {
        let v = eval_phi(2.0, &p()).unwrap();
        assert!((v.value.re + pi() * pi() / 12.0).abs().hi() < 1e-30);
    }

    #[test]
    fn l4_values() {
        let v = eval_l4(1.0, &p()).unwrap();
        assert!((v.value.re - pi() / 4.0).abs().hi() < 1e-28);
        let cat = eval_l4(2.0, &p()).unwrap();
        assert!((cat.re() - 0.915_965_594_177_219).abs() < 1e-15);
        let v3 = eval_l4(3.0, &p()).unwrap();
        assert!((v3.value.re - pi() * pi() * pi() / 32.0).abs().hi() < 1e-28);
        assert!(eval_l4(0.0, &p()).is_err());
    }

    #[test]
    fn phi_quarter() {
        let v = eval_phi_alpha(2.0, &rat(1, 4), &p()).unwrap();
        assert!((v.value.re + pi() * pi() / 48.0).abs().hi() < 1e-28);
        assert!((v.im() - 0.915_965_594_177_219).abs() < 1e-15);
        let a = eval_phi_alpha(3.0, &rat(1, 4), &p()).unwrap();
        let b = eval_phi_alpha(3.0, &rat(3, 4), &p()).unwrap();
        assert!((a.value.conj() - b.value).abs() < 1e-28);
        assert!(eval_phi_alpha(2.0, &rat(1, 3), &p()).is_err());
    }

    #[test]
    fn two_sided_bernoulli() {
        // Σ_{l≠0} l^{-2} = π²/3
        let v = two_sided(2, C::ONE, &p()).unwrap();
        assert!((v.value.re - pi() * pi() / 3.0).abs().hi() < 1e-28);
        assert_eq!(two_sided(1, C::ONE, &p()).unwrap().value, C::ZERO);
        // Σ_{l≠0} i^l / l = iπ/2
        let v = two_sided(1, C::i_pow(1), &p()).unwrap();
        assert!((v.value.im - pi() / 2.0).abs().hi() < 1e-28);
        assert!(v.value.re.abs().hi() < 1e-28);
    }

    #[test]
    fn generic_phase_tail() {
        // Σ e^{in}/n² against a long direct sum of the symmetric companion
        let z = C::cis(dd(1.0));
        let v = polylog(dd(2.0), z, &p()).unwrap();
        let mut re = 0.0;
        for n in 1..2_000_000u64 {
            re += (n as f64).cos() / (n as f64).powi(2);
        }
        // Re Li₂(e^{i}) = π²/6 − π/2 + 1/4
        let exact = std::f64::consts::PI.powi(2) / 6.0 - std::f64::consts::PI / 2.0 + 0.25;
        assert!((v.re() - exact).abs() < 1e-15);
        assert!((re - exact).abs() < 1e-6);
    }
}
