//! Quasi-static unit models on the shared AC bus.
//!
//! Inverter inner loops are assumed settled within a step, so the commanded
//! frequency is the bus frequency. The EV battery is the grid-forming slack unit.

use crate::ems::BatteryState;
use crate::params::NanogridParams;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ModelError {
    #[error("battery slack power {p_bat} W exceeds {limit} W; scenario is mis-sized")]
    SlackOverload { p_bat: f64, limit: f64 },
}

/// Bus operating point for one step. `p_bat > 0` is charging.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BusState {
    pub omega: f64,
    pub p_pv_avail: f64,
    pub p_pv: f64,
    pub p_aux: f64,
    pub p_load: f64,
    pub p_bat: f64,
}

/// PV output after over-frequency droop curtailment.
pub fn pv_power(omega: f64, p_avail: f64, params: &NanogridParams) -> f64 {
    let curtail = (omega - params.omega_nominal).max(0.0) / params.m_pv;
    (p_avail - curtail).clamp(0.0, p_avail)
}

/// Output of the floating auxiliary unit under under-frequency droop.
pub fn aux_power(omega: f64, params: &NanogridParams) -> f64 {
    ((params.omega_nominal - omega).max(0.0) / params.m_aux).clamp(0.0, params.aux_rating_w)
}

/// Units respond to `omega`; the battery closes the balance.
pub fn grid_step(
    omega: f64,
    p_avail: f64,
    p_load: f64,
    params: &NanogridParams,
) -> Result<BusState, ModelError> {
    let p_pv = pv_power(omega, p_avail, params);
    let p_aux = aux_power(omega, params);
    let p_bat = p_pv + p_aux - p_load;
    let limit = 4.0 * params.charge_max_w;
    if p_bat.abs() > limit {
        return Err(ModelError::SlackOverload { p_bat, limit });
    }
    Ok(BusState {
        omega,
        p_pv_avail: p_avail,
        p_pv,
        p_aux,
        p_load,
        p_bat,
    })
}

/// Unclamped coulomb-counting SOC after `dt_s` seconds at constant voltage and unit efficiency.
pub fn integrate_soc(soc: f64, p_bat: f64, dt_s: f64, params: &NanogridParams) -> f64 {
    soc + 100.0 * p_bat * (dt_s / 3600.0) / params.energy_wh()
}

/// SOC after `dt_s` seconds, clamped to `[0, 100]`.
pub fn battery_soc_update(state: &BatteryState, dt_s: f64, params: &NanogridParams) -> f64 {
    integrate_soc(state.soc(), state.p_bat(), dt_s, params).clamp(0.0, 100.0)
}
