//! Lattice triple sums
//!   Σ_{m∈ℕ³} w(m) / (m₁^{s₁} m₂^{s₂} m₃^{s₃} (m₁+m₂)^{s₄} (m₂+m₃)^{s₅} (m₁+m₂+m₃)^{s₆})
//! where the weight w depends only on the class e = (3m₁+2m₂+m₃) mod 4.
//! Four class sums per exponent tuple cover every twist and lattice.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use a3z_lattice::{class_index, lattice_member, twist_phase, LatticeLabel, TwistLabel};
use serde::Serialize;

use crate::complex::C;
use crate::dd::{dd, to_f64, Dd};
use crate::oned::{hurwitz_tail_f64, zeta_f64};
use crate::par::{map_range, Schedule};
use crate::value::{NumericValue, Precision, SeriesError};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LatticeSeriesSpec {
    pub exponents: [f64; 6],
    pub twist: TwistLabel,
    pub lattice: LatticeLabel,
}

impl LatticeSeriesSpec {
    pub fn new(exponents: [f64; 6], twist: TwistLabel, lattice: LatticeLabel) -> Self {
        LatticeSeriesSpec { exponents, twist, lattice }
    }
}

/// Untwisted sums over each class e, with bounds shared by all four.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassSums {
    pub sums: [Dd; 4],
    pub tail_bound: f64,
    pub rounding_slack: f64,
}

/// Sufficient condition for absolute convergence.
pub fn check_guard(s: &[f64; 6]) -> Result<(), SeriesError> {
    let fail = |why: &str| Err(SeriesError::Convergence(format!("exponents {s:?}: {why}")));
    if s.iter().any(|&x| !x.is_finite() || x < 1.0) {
        return fail("every exponent must be >= 1");
    }
    if s[0] + s[3] + s[5] <= 3.0 {
        return fail("s1 + s4 + s6 must exceed 3");
    }
    if s[2] + s[4] + s[5] <= 3.0 {
        return fail("s3 + s5 + s6 must exceed 3");
    }
    if s[1] + s[3] + s[4] + s[5] <= 3.0 {
        return fail("s2 + s4 + s5 + s6 must exceed 3");
    }
    if s.iter().sum::<f64>() <= 6.0 {
        return fail("total weight must exceed 6");
    }
    Ok(())
}

/// Majorant for the complement of the box [1, N)³: bound each of the three
/// slabs m_j ≥ N, splitting (a+b)^{−σ} ≤ 2^{−σ} a^{−σ/2} b^{−σ/2} where needed.
pub fn tail_majorant(s: &[f64; 6], n: usize) -> f64 {
    let n = n as u64;
    let h = |x: f64| hurwitz_tail_f64(x, n);
    let z = zeta_f64;
    let two = |x: f64| 2f64.powf(-x);
    let slab1 = h(s[0] + s[3] + s[5]) * two(s[4]) * z(s[1] + s[4] / 2.0) * z(s[2] + s[4] / 2.0);
    let slab3 = h(s[2] + s[4] + s[5]) * two(s[3]) * z(s[1] + s[3] / 2.0) * z(s[0] + s[3] / 2.0);
    let slab2 = h(s[1] + s[3] / 2.0 + s[4] / 2.0 + s[5]) * two(s[3] + s[4]) * z(s[0] + s[3] / 2.0) * z(s[2] + s[4] / 2.0);
    slab1 + slab2 + slab3
}

fn powers(s: f64, len: usize) -> Vec<f64> {
    (0..len).map(|k| if k == 0 { 0.0 } else { (k as f64).powf(-s) }).collect()
}

/// Class sums over the box m ∈ [1, N)³ with N = cutoff.
pub fn class_sums_with(s: &[f64; 6], cutoff: usize, schedule: Schedule) -> Result<ClassSums, SeriesError> {
    check_guard(s)?;
    let n = cutoff;
    let a = powers(s[0], n);
    let b = powers(s[1], n);
    let c = powers(s[2], n);
    let d4 = powers(s[3], 2 * n);
    let d5 = powers(s[4], 2 * n);
    let d6 = powers(s[5], 3 * n);
    let row = |m1: usize| -> [Dd; 4] {
        let mut out = [dd(0.0); 4];
        for m2 in 1..n {
            let mut acc = [0.0f64; 4];
            let d5r = &d5[m2..];
            let d6r = &d6[m1 + m2..];
            for m3 in 1..n {
                acc[m3 & 3] += c[m3] * d5r[m3] * d6r[m3];
            }
            let w = a[m1] * b[m2] * d4[m1 + m2];
            let base = 3 * m1 + 2 * m2;
            for (r, v) in acc.iter().enumerate() {
                out[(base + r) & 3] += dd(w * v);
            }
        }
        out
    };
    let rows = map_range(1, n, schedule, row);
    let mut sums = [dd(0.0); 4];
    for r in rows {
        for e in 0..4 {
            sums[e] += r[e];
        }
    }
    let majorant: f64 = sums.iter().map(|x| to_f64(*x)).sum();
    Ok(ClassSums {
        sums,
        tail_bound: tail_majorant(s, n),
        rounding_slack: (n + 8) as f64 * f64::EPSILON * majorant,
    })
}

type CacheKey = ([u64; 6], usize);

fn cache() -> &'static Mutex<HashMap<CacheKey, ClassSums>> {
    static CACHE: OnceLock<Mutex<HashMap<CacheKey, ClassSums>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Memoised class sums keyed by exponent bits and cutoff.
pub fn class_sums(s: &[f64; 6], prec: &Precision) -> Result<ClassSums, SeriesError> {
    let key = (s.map(f64::to_bits), prec.cutoff);
    if let Some(v) = cache().lock().expect("cache poisoned").get(&key) {
        return Ok(*v);
    }
    let v = class_sums_with(s, prec.cutoff, Schedule::default())?;
    cache().lock().expect("cache poisoned").insert(key, v);
    Ok(v)
}

/// Weight of class e for a twist on a lattice: the phase of any representative
/// of the class if it lies in the lattice, zero otherwise.
pub fn class_weights(twist: TwistLabel, lattice: LatticeLabel) -> [C; 4] {
    let mut out = [C::ZERO; 4];
    for m3 in 1..=4 {
        let m = [1, 1, m3];
        let e = class_index(m) as usize;
        if lattice_member(lattice, m) {
            let (re, im) = twist_phase(twist, m).to_f64();
            out[e] = C::from_f64(re, im);
        }
    }
    out
}

pub fn combine(sums: &ClassSums, twist: TwistLabel, lattice: LatticeLabel) -> NumericValue {
    let w = class_weights(twist, lattice);
    let mut value = C::ZERO;
    for e in 0..4 {
        value += w[e].scale(sums.sums[e]);
    }
    NumericValue::new(value, sums.tail_bound, sums.rounding_slack)
}

pub fn eval_zeta3(spec: &LatticeSeriesSpec, prec: &Precision) -> Result<NumericValue, SeriesError> {
    let sums = class_sums(&spec.exponents, prec)?;
    Ok(combine(&sums, spec.twist, spec.lattice))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dd::pi;

    fn p() -> Precision {
        Precision::default()
    }

    const ALL2: [f64; 6] = [2.0; 6];

    fn z3(t: [f64; 6], tw: TwistLabel, l: LatticeLabel) -> NumericValue {
        eval_zeta3(&LatticeSeriesSpec::new(t, tw, l), &p()).unwrap()
    }

    fn close(a: &NumericValue, b: C, extra: f64) -> bool {
        (a.value - b).abs() <= a.error_bound() + extra
    }

    #[test]
    fn guard_rejects_boundary() {
        assert!(check_guard(&[1.0, 1.0, 1.0, 1.0, 1.0, 1.0]).is_err());
        assert!(check_guard(&[0.5, 2.0, 2.0, 2.0, 2.0, 2.0]).is_err());
        assert!(check_guard(&[1.0, 2.0, 1.0, 1.0, 2.0, 1.0]).is_err());
        assert!(check_guard(&ALL2).is_ok());
    }

    #[test]
    fn pu4_all_two() {
        let v = z3(ALL2, TwistLabel::Zero, LatticeLabel::Q);
        let exact = pi().powi(12) * dd(1103.0) / 145332633600.0;
        assert!(close(&v, C::real(exact), 1e-20));
    }

    #[test]
    fn so6_all_two() {
        let v = z3(ALL2, TwistLabel::Zero, LatticeLabel::L1);
        let exact = pi().powi(12) * dd(10411.0) / 1307674368000.0;
        assert!(close(&v, C::real(exact), 1e-20));
    }

    #[test]
    fn lam2_twist_from_lattice_decomposition() {
        let p_ = z3(ALL2, TwistLabel::Zero, LatticeLabel::P);
        let l1 = z3(ALL2, TwistLabel::Zero, LatticeLabel::L1);
        let t2 = z3(ALL2, TwistLabel::Lam2, LatticeLabel::P);
        let d = (t2.value - (l1.value.scale(dd(2.0)) - p_.value)).abs();
        assert!(d <= 3.0 * (t2.error_bound() + l1.error_bound() + p_.error_bound()));
    }

    #[test]
    fn schedules_agree_bitwise() {
        let t = [2.0, 3.0, 2.0, 2.5, 2.0, 3.0];
        let a = class_sums_with(&t, 64, Schedule::Sequential).unwrap();
        let b = class_sums_with(&t, 64, Schedule::default()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn doubling_cutoff_stays_within_bound() {
        let t = [2.0, 3.0, 3.0, 3.0, 3.0, 3.0];
        let a = class_sums_with(&t, 80, Schedule::default()).unwrap();
        let b = class_sums_with(&t, 160, Schedule::default()).unwrap();
        let total = |c: &ClassSums| c.sums.iter().copied().fold(dd(0.0), |x, y| x + y);
        assert!(to_f64(total(&a) - total(&b)).abs() <= a.tail_bound + a.rounding_slack);
    }
}
