use crate::ems::ControllerKind;
use crate::params::NanogridParams;

use super::SimError;

/// Everything needed to reproduce one closed-loop run, profiles referenced by path.
#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub name: String,
    pub params: NanogridParams,
    pub soc_init_pct: f64,
    /// Path of the available-PV profile, relative to the scenario file.
    pub pv_profile: String,
    pub load_profile: String,
    /// Scales every load sample.
    pub load_multiplier: f64,
    pub controller: ControllerKind,
    pub dt_s: f64,
    pub duration_s: f64,
    /// Time constant of the battery-power measurement filter the controller reads.
    /// Zero means the controller sees the previous step's power unfiltered.
    pub meas_tau_s: f64,
}

impl Scenario {
    pub fn validate(&self) -> Result<(), SimError> {
        self.params.validate()?;
        let bad = |msg: String| Err(SimError::InvalidScenario(msg));
        if !(self.dt_s.is_finite() && self.dt_s > 0.0) {
            return bad(format!("dt_s must be positive, got {}", self.dt_s));
        }
        if !(self.duration_s.is_finite() && self.duration_s >= self.dt_s) {
            return bad(format!(
                "duration_s ({}) must be at least dt_s ({})",
                self.duration_s, self.dt_s
            ));
        }
        if !(self.load_multiplier.is_finite() && self.load_multiplier > 0.0) {
            return bad(format!(
                "load_multiplier must be positive, got {}",
                self.load_multiplier
            ));
        }
        if !(0.0..=100.0).contains(&self.soc_init_pct) {
            return bad(format!("soc_init_pct {} outside [0, 100]", self.soc_init_pct));
        }
        if !(self.meas_tau_s.is_finite() && self.meas_tau_s >= 0.0) {
            return bad(format!("meas_tau_s must be >= 0, got {}", self.meas_tau_s));
        }
        Ok(())
    }

    /// Number of records a run produces: `floor(duration / dt) + 1`.
    pub fn steps(&self) -> usize {
        // Guard against 0.3 / 0.1 = 2.9999999999999996.
        (self.duration_s / self.dt_s + 1e-9).floor() as usize + 1
    }

    /// Output file stem, `<name>_<controller>`.
    pub fn stem(&self) -> String {
        format!("{}_{}", self.name, self.controller)
    }

    pub fn with_controller(&self, controller: ControllerKind) -> Scenario {
        Scenario {
            controller,
            ..self.clone()
        }
    }
}
