use serde::{Deserialize, Serialize};

use super::FuzzyError;

/// Piecewise-linear membership function over a real universe.
///
/// Coincident breakpoints are allowed and produce shoulders: `tri(0, 0, 0.5)`
/// is 1 at the left edge and falls to 0 at 0.5.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "points", rename_all = "lowercase")]
pub enum MembershipFunction {
    Triangular([f64; 3]),
    Trapezoidal([f64; 4]),
}

impl MembershipFunction {
    pub fn triangular(a: f64, b: f64, c: f64) -> Result<Self, FuzzyError> {
        let mf = MembershipFunction::Triangular([a, b, c]);
        mf.validate()?;
        Ok(mf)
    }

    pub fn trapezoidal(a: f64, b: f64, c: f64, d: f64) -> Result<Self, FuzzyError> {
        let mf = MembershipFunction::Trapezoidal([a, b, c, d]);
        mf.validate()?;
        Ok(mf)
    }

    pub fn breakpoints(&self) -> &[f64] {
        match self {
            MembershipFunction::Triangular(p) => p,
            MembershipFunction::Trapezoidal(p) => p,
        }
    }

    /// Closed support `[first, last]` breakpoint.
    pub fn support(&self) -> (f64, f64) {
        let p = self.breakpoints();
        (p[0], p[p.len() - 1])
    }

    pub fn validate(&self) -> Result<(), FuzzyError> {
        let p = self.breakpoints();
        if p.iter().any(|v| !v.is_finite()) {
            return Err(FuzzyError::InvalidMembership(format!(
                "non-finite breakpoint in {p:?}"
            )));
        }
        if p.windows(2).any(|w| w[0] > w[1]) {
            return Err(FuzzyError::InvalidMembership(format!(
                "breakpoints must be non-decreasing, got {p:?}"
            )));
        }
        Ok(())
    }

    /// Degree of membership of `x`, always in `[0, 1]`.
    pub fn eval(&self, x: f64) -> f64 {
        match *self {
            MembershipFunction::Triangular([a, b, c]) => ramp_up(x, a, b).min(ramp_down(x, b, c)),
            MembershipFunction::Trapezoidal([a, b, c, d]) => {
                ramp_up(x, a, b).min(ramp_down(x, c, d))
            }
        }
    }
}

/// Rising edge from 0 at `lo` to 1 at `hi`; 1 for `x >= hi`. A vertical edge
/// (`lo == hi`) is 1 from `hi` onwards and 0 before it.
fn ramp_up(x: f64, lo: f64, hi: f64) -> f64 {
    if x >= hi {
        1.0
    } else if x <= lo {
        0.0
    } else {
        (x - lo) / (hi - lo)
    }
}

fn ramp_down(x: f64, hi: f64, lo_end: f64) -> f64 {
    if x <= hi {
        1.0
    } else if x >= lo_end {
        0.0
    } else {
        (lo_end - x) / (lo_end - hi)
    }
}
