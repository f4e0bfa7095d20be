use serde::Serialize;

use crate::complex::C;
use crate::dd::{to_decimal, EPS};

/// Bits carried by the double-double representation.
pub const NATIVE_BITS: u32 = 106;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SeriesError {
    #[error("series does not converge absolutely: {0}")]
    Convergence(String),
    #[error("domain error: {0}")]
    Domain(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Precision {
    pub significand_bits: u32,
    pub cutoff: usize,
}

impl Default for Precision {
    fn default() -> Self {
        Precision { significand_bits: 128, cutoff: 400 }
    }
}

impl Precision {
    pub fn new(significand_bits: u32, cutoff: usize) -> Result<Self, SeriesError> {
        if significand_bits < 64 {
            return Err(SeriesError::Domain(format!("precision {significand_bits} < 64 bits")));
        }
        if cutoff < 16 {
            return Err(SeriesError::Domain(format!("cutoff {cutoff} < 16")));
        }
        Ok(Precision { significand_bits, cutoff })
    }

    pub fn with_cutoff(self, cutoff: usize) -> Self {
        Precision { cutoff: cutoff.max(16), ..self }
    }

    /// Requests above the native width are served at the native width.
    pub fn effective_bits(&self) -> u32 {
        self.significand_bits.min(NATIVE_BITS)
    }

    pub fn unit_roundoff(&self) -> f64 {
        EPS.max(2f64.powi(-(self.effective_bits() as i32)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NumericValue {
    pub value: C,
    pub tail_bound: f64,
    pub rounding_slack: f64,
}

impl NumericValue {
    pub fn new(value: C, tail_bound: f64, rounding_slack: f64) -> Self {
        NumericValue { value, tail_bound, rounding_slack }
    }

    pub fn exact(value: C) -> Self {
        NumericValue { value, tail_bound: 0.0, rounding_slack: value.abs() * EPS }
    }

    pub fn error_bound(&self) -> f64 {
        self.tail_bound + self.rounding_slack
    }

    pub fn re(&self) -> f64 {
        self.value.to_f64().0
    }

    pub fn im(&self) -> f64 {
        self.value.to_f64().1
    }

    pub fn add(&self, o: &NumericValue) -> NumericValue {
        NumericValue {
            value: self.value + o.value,
            tail_bound: self.tail_bound + o.tail_bound,
            rounding_slack: self.rounding_slack + o.rounding_slack,
        }
    }

    pub fn sub(&self, o: &NumericValue) -> NumericValue {
        self.add(&o.scale_c(C::from_f64(-1.0, 0.0)))
    }

    /// Multiply by an exactly known constant.
    pub fn scale_c(&self, c: C) -> NumericValue {
        let a = c.abs();
        NumericValue {
            value: self.value * c,
            tail_bound: self.tail_bound * a,
            rounding_slack: self.rounding_slack * a + (self.value * c).abs() * EPS,
        }
    }

    pub fn decimal(&self, digits: usize) -> (String, String) {
        (to_decimal(self.value.re, digits), to_decimal(self.value.im, digits))
    }
}

impl std::fmt::Display for NumericValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let (re, im) = self.decimal(30);
        write!(f, "{re} + {im}*i  (± {:.2e})", self.error_bound())
    }
}
