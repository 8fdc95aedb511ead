//! Supervisory energy management: battery state in, bus-frequency command out.

mod flc;
pub mod normalize;
mod proportional;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::fuzzy::FuzzyError;
use crate::params::{NanogridParams, ParamsError};

pub use flc::{
    bottom_system, headroom_variable, shift_variable, top_system, CalibratedSubsystem,
    FlcController, RULE_TABLE,
};
pub use proportional::ProportionalController;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum EmsError {
    #[error(transparent)]
    Fuzzy(#[from] FuzzyError),
    #[error(transparent)]
    Params(#[from] ParamsError),
    #[error("invalid battery state: {0}")]
    InvalidState(String),
}

/// Battery SOC and power. `p_bat > 0` is charging.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BatteryState {
    soc: f64,
    p_bat: f64,
}

impl BatteryState {
    pub fn new(soc: f64, p_bat: f64) -> Result<Self, EmsError> {
        if !(0.0..=100.0).contains(&soc) {
            return Err(EmsError::InvalidState(format!("soc {soc} outside [0, 100]")));
        }
        if !p_bat.is_finite() {
            return Err(EmsError::InvalidState(format!("battery power {p_bat}")));
        }
        Ok(BatteryState { soc, p_bat })
    }

    pub fn soc(&self) -> f64 {
        self.soc
    }

    pub fn p_bat(&self) -> f64 {
        self.p_bat
    }

    pub fn p_charge(&self) -> f64 {
        self.p_bat.max(0.0)
    }

    pub fn p_discharge(&self) -> f64 {
        (-self.p_bat).max(0.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrequencyCommand {
    /// Non-negative shift requesting PV curtailment.
    pub d_omega_plus: f64,
    /// Non-positive shift requesting auxiliary power.
    pub d_omega_minus: f64,
    pub omega_cmd: f64,
}

impl FrequencyCommand {
    pub fn new(omega_nominal: f64, d_omega_plus: f64, d_omega_minus: f64) -> Self {
        FrequencyCommand {
            d_omega_plus,
            d_omega_minus,
            omega_cmd: omega_nominal + d_omega_plus + d_omega_minus,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ControllerKind {
    #[default]
    Flc,
    Proportional,
}

impl ControllerKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ControllerKind::Flc => "flc",
            ControllerKind::Proportional => "proportional",
        }
    }
}

impl fmt::Display for ControllerKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ControllerKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "flc" => Ok(ControllerKind::Flc),
            "proportional" => Ok(ControllerKind::Proportional),
            other => Err(format!(
                "unknown controller `{other}` (expected `flc` or `proportional`)"
            )),
        }
    }
}

/// Either supervisory controller, selected by [`ControllerKind`].
#[derive(Debug, Clone, PartialEq)]
pub enum Controller {
    Flc(Box<FlcController>),
    Proportional(ProportionalController),
}

impl Controller {
    pub fn new(kind: ControllerKind, params: NanogridParams) -> Result<Self, EmsError> {
        Ok(match kind {
            ControllerKind::Flc => Controller::Flc(Box::new(FlcController::new(params)?)),
            ControllerKind::Proportional => {
                Controller::Proportional(ProportionalController::new(params)?)
            }
        })
    }

    pub fn kind(&self) -> ControllerKind {
        match self {
            Controller::Flc(_) => ControllerKind::Flc,
            Controller::Proportional(_) => ControllerKind::Proportional,
        }
    }

    pub fn command(&self, state: &BatteryState) -> Result<FrequencyCommand, EmsError> {
        match self {
            Controller::Flc(c) => c.command(state),
            Controller::Proportional(c) => Ok(c.command(state)),
        }
    }
}

/// One fuzzy supervisor step with the given parameters.
pub fn ems_step(state: &BatteryState, params: &NanogridParams) -> Result<FrequencyCommand, EmsError> {
    FlcController::new(*params)?.command(state)
}

/// One proportional-baseline step.
pub fn proportional_step(
    state: &BatteryState,
    params: &NanogridParams,
) -> Result<FrequencyCommand, EmsError> {
    Ok(ProportionalController::new(*params)?.command(state))
}
