use a3z_algebra::{expr_eval_numeric, Numeric};
use a3z_series::{eval_zeta3, LatticeSeriesSpec, NumericValue, Precision, C};

use crate::lhs::{lhs_terms, merge_terms, Exponent, Term};
use crate::rhs::theorem_rhs;
use crate::{RelationError, RelationParams, TheoremId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Passed,
    Failed,
    /// Left-hand side cancels identically; passes when the right-hand side vanishes.
    Degenerate,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub theorem: TheoremId,
    pub params: RelationParams,
    pub s_value: f64,
    pub lhs: NumericValue,
    pub rhs: NumericValue,
    pub residual: f64,
    pub passed: bool,
    pub tolerance: f64,
    pub verdict: Verdict,
}

/// Tolerance for "both sides vanish" in the degenerate case.
const DEGENERATE_TOL: f64 = 1e-8;

fn instantiated(params: &RelationParams, s0: f64) -> Vec<Term> {
    let s = if s0.fract() == 0.0 { Exponent::Int(s0 as u32) } else { Exponent::S };
    lhs_terms(params).iter().map(|r| (r.sign, r.instantiate(params, s))).collect()
}

pub fn verify_relation(
    theorem: TheoremId,
    params: &RelationParams,
    s0: f64,
    prec: &Precision,
    tol: f64,
) -> Result<VerificationReport, RelationError> {
    if params.min() < 2 {
        return Err(RelationError::Domain(format!(
            "numeric verification needs every parameter >= 2; {params:?} is assembled symbolically only"
        )));
    }
    if s0.is_nan() || s0 < 2.0 {
        return Err(RelationError::Domain(format!("numeric verification needs s >= 2, got {s0}")));
    }
    let (twist, lattice) = theorem.context();
    let rows = instantiated(params, s0);
    let degenerate = s0.fract() == 0.0 && merge_terms(&rows, theorem).is_empty();

    let mut lhs = NumericValue::exact(C::ZERO);
    for (sign, t) in &rows {
        let spec = LatticeSeriesSpec::new(t.map(|e| e.value(s0)), twist, lattice);
        let v = eval_zeta3(&spec, prec)?;
        lhs = if *sign > 0 { lhs.add(&v) } else { lhs.sub(&v) };
    }
    let sc = theorem_rhs(theorem, params)?;
    let rhs = expr_eval_numeric(Numeric::Shifted(&sc, s0), prec)?;
    let residual = (lhs.value - rhs.value).abs();
    let slack = lhs.error_bound() + rhs.error_bound();
    let (passed, verdict) = if degenerate {
        let ok = lhs.value.abs() <= DEGENERATE_TOL + slack && rhs.value.abs() <= DEGENERATE_TOL + slack;
        (ok, Verdict::Degenerate)
    } else {
        let ok = residual <= tol + slack;
        (ok, if ok { Verdict::Passed } else { Verdict::Failed })
    };
    Ok(VerificationReport { theorem, params: *params, s_value: s0, lhs, rhs, residual, passed, tolerance: tol, verdict })
}
