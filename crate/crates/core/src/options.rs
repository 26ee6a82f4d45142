use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Numerical policy shared by every evaluation and verification routine.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalOptions {
    /// Relative tail threshold for hypergeometric series truncation.
    pub series_tol: f64,
    /// |z| above which 2F1 is evaluated through a transformation instead of the direct series.
    pub transform_threshold: f64,
    /// Step for first-derivative central differences.
    pub fd_step: f64,
    /// Step for second derivatives and nested first-derivative operators.
    pub fd_step_second: f64,
    /// Absolute tolerance for quadrature and for the tail bound beyond the cutoff.
    pub quad_tol: f64,
    /// Integration range in tau is [-quad_cutoff, quad_cutoff].
    pub quad_cutoff: f64,
    /// Hard cap on the number of series terms.
    pub max_terms: usize,
}

impl Default for EvalOptions {
    fn default() -> Self {
        Self {
            series_tol: 1e-16,
            transform_threshold: 0.5,
            fd_step: 1e-4,
            fd_step_second: 1e-3,
            quad_tol: 1e-10,
            quad_cutoff: 40.0,
            max_terms: 10_000,
        }
    }
}

impl EvalOptions {
    pub fn validate(&self) -> Result<()> {
        let positive = [
            ("series_tol", self.series_tol),
            ("transform_threshold", self.transform_threshold),
            ("fd_step", self.fd_step),
            ("fd_step_second", self.fd_step_second),
            ("quad_tol", self.quad_tol),
            ("quad_cutoff", self.quad_cutoff),
        ];
        for (name, v) in positive {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::InvalidOptions(format!("{name} must be finite and > 0, got {v}")));
            }
        }
        if self.transform_threshold >= 1.0 {
            return Err(Error::InvalidOptions(format!(
                "transform_threshold must lie in (0, 1), got {}",
                self.transform_threshold
            )));
        }
        if self.max_terms == 0 {
            return Err(Error::InvalidOptions("max_terms must be at least 1".into()));
        }
        Ok(())
    }

    pub fn with_fd_step(self, fd_step: f64) -> Self {
        Self { fd_step, ..self }
    }

    pub fn with_max_terms(self, max_terms: usize) -> Self {
        Self { max_terms, ..self }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_valid() {
        EvalOptions::default().validate().unwrap();
    }

    #[test]
    fn rejects_bad_threshold() {
        let o = EvalOptions { transform_threshold: 1.0, ..Default::default() };
        assert!(o.validate().is_err());
        let o = EvalOptions { fd_step: 0.0, ..Default::default() };
        assert!(o.validate().is_err());
        let o = EvalOptions { max_terms: 0, ..Default::default() };
        assert!(o.validate().is_err());
    }
}
