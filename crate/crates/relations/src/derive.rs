use a3z_algebra::{specialize, ConstantExpression};
use a3z_exact::{BigInt, BigRational, Gaussian};
use a3z_lattice::{LatticeLabel, TwistLabel};

use crate::lhs::{lhs_terms, merge_terms, pair_conjugates, stuffle_collapse, Exponent, Term};
use crate::rhs::theorem_rhs;
use crate::{RelationError, RelationParams, TheoremId};

/// Which part of the series the closed form gives.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Part {
    Value,
    /// The λ₁/λ₃ relations pair a series with its complex conjugate, so only
    /// the real part is determined.
    RealPart,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Derivation {
    pub k: u32,
    pub theorem: TheoremId,
    pub tuple: [u32; 6],
    pub coefficient: i64,
    pub part: Part,
    pub value: ConstantExpression,
}

fn as_ints(t: &[Exponent; 6]) -> Result<[u32; 6], RelationError> {
    let mut out = [0; 6];
    for (o, e) in out.iter_mut().zip(t) {
        *o = e.int().ok_or_else(|| RelationError::Collapse("symbolic exponent left after collapse".into()))?;
    }
    Ok(out)
}

fn single(terms: &[Term]) -> Option<Term> {
    match terms {
        [t] => Some(*t),
        _ => None,
    }
}

fn divide(e: &ConstantExpression, d: i64) -> ConstantExpression {
    e.scale(&Gaussian::real(BigRational::new(BigInt::from(1), BigInt::from(d))))
}

/// Closed form for the series at (2k, 2k+1, 2k+1, 2k+1, 2k+1, 2k+1) from the
/// relation with (p,q,a,b,c) = (2k+1, 2k, 2k+1, 2k+1, 2k+1) at s = 2k+1.
pub fn derive_evaluation(k: u32, target: TheoremId) -> Result<Derivation, RelationError> {
    if k == 0 {
        return Err(RelationError::Domain("k must be >= 1".into()));
    }
    let (o, e) = (2 * k + 1, 2 * k);
    let params = RelationParams { p: o, q: e, a: o, b: o, c: o };
    let rows: Vec<Term> = lhs_terms(&params).iter().map(|r| (r.sign, r.instantiate(&params, Exponent::Int(o)))).collect();
    let collapsed = stuffle_collapse(&merge_terms(&rows, target), target);
    let (coefficient, tuple, part) = match single(&collapsed) {
        Some((c, t)) => (c, t, Part::Value),
        None if !target.symmetric() => {
            let (paired, rest) = pair_conjugates(&collapsed);
            match (single(&paired), rest.is_empty()) {
                (Some((c, t)), true) => (c, t, Part::RealPart),
                _ => return Err(RelationError::Collapse(format!("{} terms remain for {target}, k={k}", collapsed.len()))),
            }
        }
        None => return Err(RelationError::Collapse(format!("{} terms remain for {target}, k={k}", collapsed.len()))),
    };
    let rhs = specialize(&theorem_rhs(target, &params)?, o as i64)?;
    Ok(Derivation { k, theorem: target, tuple: as_ints(&tuple)?, coefficient, part, value: divide(&rhs, coefficient) })
}

/// ζ₃((2k)⁶) in the context of `target` from the relation with all
/// parameters and s equal to 2k, where every row merges onto one series.
pub fn uniform_evaluation(k: u32, target: TheoremId) -> Result<Derivation, RelationError> {
    if k == 0 {
        return Err(RelationError::Domain("k must be >= 1".into()));
    }
    let params = RelationParams::uniform(2 * k);
    let rows: Vec<Term> = lhs_terms(&params).iter().map(|r| (r.sign, r.instantiate(&params, Exponent::Int(2 * k)))).collect();
    let merged = merge_terms(&rows, target);
    let Some((c, t)) = single(&merged) else {
        return Err(RelationError::Collapse(format!("{} terms remain for {target}, k={k}", merged.len())));
    };
    let rhs = specialize(&theorem_rhs(target, &params)?, 2 * k as i64)?;
    Ok(Derivation { k, theorem: target, tuple: as_ints(&t)?, coefficient: c, part: Part::Value, value: divide(&rhs, c) })
}

fn su4_theorem(twist: TwistLabel) -> TheoremId {
    match twist {
        TwistLabel::Zero => TheoremId::A3,
        TwistLabel::Lam1 => TheoremId::SU4Lam1,
        TwistLabel::Lam2 => TheoremId::SU4Lam2,
        TwistLabel::Lam3 => TheoremId::SU4Lam3,
    }
}

/// ζ₃((2k)⁶, ν; G) for any lattice, through the lattice indicator
/// 1_G = Σ w_c χᶜ applied to the four twisted SU(4) values.
pub fn lattice_uniform_value(k: u32, twist: TwistLabel, lattice: LatticeLabel) -> Result<ConstantExpression, RelationError> {
    let mut out = ConstantExpression::zero();
    for (c, w) in lattice.character_weights() {
        let d = uniform_evaluation(k, su4_theorem(twist.add(c)))?;
        out = out.add(&d.value.scale(&Gaussian::real(w)));
    }
    Ok(out.normalize())
}

/// ζ₃((2k)⁶; A₃) and the Witten zeta value ζ_W(2k; su(4)) = 12^{2k} ζ₃((2k)⁶; A₃).
pub fn witten_value(k: u32) -> Result<(ConstantExpression, ConstantExpression), RelationError> {
    let z = uniform_evaluation(k, TheoremId::A3)?.value;
    let scale = Gaussian::real(BigRational::from_integer(BigInt::from(12).pow(2 * k)));
    let w = z.scale(&scale);
    Ok((z, w))
}
