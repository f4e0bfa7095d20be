//! Exact symbolic algebra over the basis {π, u = 2⁻ˢ, ζ(odd), L(even, χ₄)}.

mod closed;
mod eval;
mod expr;
mod serial;
mod text;

pub use closed::{
    lambda_const, lambda_value, phi_even_const, phi_quarter_reduce, phi_reduce, t_closed, zeta_even_const, PiConst, Root4,
    SUPPORTED_PAIRS,
};
pub use eval::{expr_eval_numeric, specialize, Numeric};
pub use expr::{ConstMonomial, ConstantExpression, Factor, Family, ShiftedCombination, SymbolicCoefficient};
pub use serial::GaussianJson;
pub use text::{gaussian_text, parse_constant, parse_gaussian, parse_shifted};

use a3z_series::SeriesError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum AlgebraError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("singularity: {0}")]
    Singularity(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Series(#[from] SeriesError),
}
