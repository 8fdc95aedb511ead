use crate::params::NanogridParams;

use super::normalize::{soc_high_headroom, soc_low_headroom};
use super::{BatteryState, EmsError, FrequencyCommand};

/// Conventional droop-style baseline: shifts proportional to SOC headroom only.
///
/// It has no view of battery power, so it cannot keep charging or discharging
/// power inside their limits.
#[derive(Debug, Clone, PartialEq)]
pub struct ProportionalController {
    params: NanogridParams,
}

impl ProportionalController {
    pub fn new(params: NanogridParams) -> Result<Self, EmsError> {
        params.validate()?;
        Ok(ProportionalController { params })
    }

    pub fn command(&self, state: &BatteryState) -> FrequencyCommand {
        let p = &self.params;
        let plus = p.shift_plus_max() * (1.0 - soc_high_headroom(state.soc(), p));
        let minus = -p.shift_minus_max() * (1.0 - soc_low_headroom(state.soc(), p));
        FrequencyCommand::new(p.omega_nominal, plus, minus)
    }
}
