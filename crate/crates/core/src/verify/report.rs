use serde::{Deserialize, Serialize};

/// How a check compares `computed` with `target`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Absolute,
    Relative,
    /// Pass if either error is within tolerance.
    Either,
}

/// Numerical side information attached to a report.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Diagnostics {
    pub subdivisions: usize,
    pub evaluations: usize,
    pub error_estimate: f64,
    pub eps_samples: Vec<(f64, f64)>,
}

/// Outcome of one check. Field names are stable; one JSON object per line.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub name: String,
    pub target: f64,
    pub computed: f64,
    pub abs_err: f64,
    pub rel_err: f64,
    pub tol: f64,
    pub mode: Mode,
    pub passed: bool,
    pub diagnostics: Diagnostics,
}

impl VerificationReport {
    pub fn new(name: impl Into<String>, target: f64, computed: f64, tol: f64, mode: Mode) -> Self {
        let abs_err = (computed - target).abs();
        let rel_err = if target != 0.0 { abs_err / target.abs() } else if abs_err == 0.0 { 0.0 } else { f64::INFINITY };
        let passed = match mode {
            Mode::Absolute => abs_err <= tol,
            Mode::Relative => rel_err <= tol,
            Mode::Either => abs_err <= tol || rel_err <= tol,
        };
        VerificationReport {
            name: name.into(),
            target,
            computed,
            abs_err,
            rel_err,
            tol,
            mode,
            passed,
            diagnostics: Diagnostics::default(),
        }
    }

    /// A check that could not produce a number.
    pub fn failed(name: impl Into<String>, target: f64, tol: f64, mode: Mode, why: &str) -> Self {
        let mut r = Self::new(name, target, f64::NAN, tol, mode);
        r.passed = false;
        r.name = format!("{} ({why})", r.name);
        r
    }

    pub fn with_diagnostics(mut self, d: Diagnostics) -> Self {
        self.diagnostics = d;
        self
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}
