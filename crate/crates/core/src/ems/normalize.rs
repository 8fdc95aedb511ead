//! Battery headroom normalisation feeding the two fuzzy subsystems.
//!
//! All four quantities are 0 at the limit being protected and 1 when there is
//! full headroom, and are clamped to `[0, 1]`.

use crate::params::NanogridParams;

fn unit(x: f64) -> f64 {
    x.clamp(0.0, 1.0)
}

/// Headroom below the upper SOC limit, `(SOC_max - soc) / (SOC_max - SOC_min)`.
pub fn soc_high_headroom(soc: f64, params: &NanogridParams) -> f64 {
    unit((params.soc_max_pct - soc) / (params.soc_max_pct - params.soc_min_pct))
}

/// Headroom below the charging-power limit.
pub fn charge_headroom(p_charge: f64, params: &NanogridParams) -> f64 {
    unit((params.charge_max_w - p_charge) / params.charge_max_w)
}

/// Headroom above the lower SOC limit, `(soc - SOC_min) / (SOC_min+10 - SOC_min)`.
pub fn soc_low_headroom(soc: f64, params: &NanogridParams) -> f64 {
    unit((soc - params.soc_min_pct) / (params.soc_min_plus10_pct - params.soc_min_pct))
}

/// Headroom below the discharging-power limit.
pub fn discharge_headroom(p_discharge: f64, params: &NanogridParams) -> f64 {
    unit((params.discharge_max_w - p_discharge) / params.discharge_max_w)
}
