use std::fmt;

use super::VerifyError;

/// Values within this distance of zero are "boundary", never violations.
pub const STRICT_MARGIN: f64 = 1e-12;

/// Outcome of one sign check, given the margin oriented so positive is good.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    Pass,
    Boundary,
    Violation,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Boundary => "boundary",
            Status::Violation => "violation",
        })
    }
}

pub fn classify(oriented_margin: f64) -> Status {
    if oriented_margin.is_nan() || oriented_margin < -STRICT_MARGIN {
        Status::Violation
    } else if oriented_margin <= STRICT_MARGIN {
        Status::Boundary
    } else {
        Status::Pass
    }
}

/// Arithmetic grid `start, start + step, ...` up to and including `stop`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    pub start: f64,
    pub stop: f64,
    pub step: f64,
}

impl Grid {
    pub fn new(start: f64, stop: f64, step: f64) -> Result<Self, VerifyError> {
        if !(start.is_finite() && stop.is_finite() && step.is_finite()) {
            return Err(VerifyError::BadGrid("grid bounds must be finite".into()));
        }
        if step <= 0.0 {
            return Err(VerifyError::BadGrid(format!(
                "step must be positive, got {step}"
            )));
        }
        if stop < start {
            return Err(VerifyError::BadGrid(format!(
                "stop {stop} below start {start}"
            )));
        }
        Ok(Grid { start, stop, step })
    }

    pub fn len(&self) -> usize {
        ((self.stop - self.start) / self.step + 1e-9).floor() as usize + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn points(&self) -> Vec<f64> {
        (0..self.len())
            .map(|k| self.start + k as f64 * self.step)
            .collect()
    }

    /// Largest grid point.
    pub fn last(&self) -> f64 {
        self.start + (self.len() - 1) as f64 * self.step
    }
}

impl fmt::Display for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}] step {}", self.start, self.stop, self.step)
    }
}
