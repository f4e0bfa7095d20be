use std::path::Path;

use a3z_series::{NumericValue, Precision};
use serde_json::{json, Value};

use crate::CliError;

#[derive(Debug, Clone)]
pub struct ReportDocument {
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    pub error_bound: Option<f64>,
    pub duration_ms: u128,
}

pub fn bound_text(b: f64) -> String {
    format!("{b:.3e}")
}

/// Significant digits printed for a value at this precision.
pub fn digits(prec: &Precision) -> usize {
    (prec.effective_bits() as f64 * std::f64::consts::LOG10_2).floor() as usize
}

pub fn numeric_json(v: &NumericValue, prec: &Precision) -> Value {
    let (re, im) = v.decimal(digits(prec));
    json!({ "re": re, "im": im, "error_bound": bound_text(v.error_bound()) })
}

impl ReportDocument {
    pub fn to_json(&self) -> Value {
        json!({
            "version": env!("CARGO_PKG_VERSION"),
            "command": self.command,
            "inputs": self.inputs,
            "result": self.result,
            "error_bound": self.error_bound.map(bound_text),
            "duration_ms": self.duration_ms as u64,
        })
    }
}

pub fn export_json(report: &ReportDocument, path: &Path) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(&report.to_json()).expect("report serializes");
    std::fs::write(path, text + "\n").map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}
