//! Numerical evaluation of the series behind the A₃ lattice zeta-functions.

pub mod complex;
pub mod dd;
pub mod double;
pub mod identity;
pub mod oned;
pub mod par;
pub mod triple;
mod value;

pub use complex::C;
pub use identity::{check_identity, IdentityId, IdentityParams};
pub use double::{eval_ez2, eval_frak_t, eval_tornheim};
pub use oned::{eval_l4, eval_phi, eval_phi_alpha, eval_zeta, polylog, two_sided};
pub use par::Schedule;
pub use triple::{eval_zeta3, LatticeSeriesSpec};
pub use value::{NumericValue, Precision, SeriesError, NATIVE_BITS};
