//! Nanogrid ratings, battery limits and droop coefficients.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
#[error("invalid nanogrid parameters: {0}")]
pub struct ParamsError(pub String);

/// Every constant the controller and the unit models share.
///
/// Defaults are the simulated system of the reference nanogrid: a 2230 W PV
/// array, a 1 kW floating turbine and a 100 Ah / 120 V EV battery.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct NanogridParams {
    pub pv_rating_w: f64,
    pub aux_rating_w: f64,
    pub capacity_ah: f64,
    pub voltage_v: f64,
    pub soc_max_pct: f64,
    pub soc_min_plus10_pct: f64,
    pub soc_min_pct: f64,
    pub charge_max_w: f64,
    pub discharge_max_w: f64,
    /// Nominal bus angular frequency, rad/s.
    pub omega_nominal: f64,
    /// PV active-power droop, rad/s per W.
    pub m_pv: f64,
    /// Auxiliary active-power droop, rad/s per W.
    pub m_aux: f64,
    /// Reactive-power droop, V/Var. Carried for completeness; no reactive path is simulated.
    pub n_q: f64,
}

impl Default for NanogridParams {
    fn default() -> Self {
        NanogridParams {
            pv_rating_w: 2230.0,
            aux_rating_w: 1000.0,
            capacity_ah: 100.0,
            voltage_v: 120.0,
            soc_max_pct: 95.0,
            soc_min_plus10_pct: 50.0,
            soc_min_pct: 40.0,
            charge_max_w: 1000.0,
            discharge_max_w: 1000.0,
            omega_nominal: 314.16,
            m_pv: 0.75e-4,
            m_aux: 0.75e-4,
            n_q: 0.75e-4,
        }
    }
}

impl NanogridParams {
    /// Largest positive frequency shift: the one that fully curtails a rated PV array.
    pub fn shift_plus_max(&self) -> f64 {
        self.m_pv * self.pv_rating_w
    }

    /// Magnitude of the largest negative shift: the one that fully dispatches the auxiliary unit.
    pub fn shift_minus_max(&self) -> f64 {
        self.m_aux * self.aux_rating_w
    }

    /// Battery energy capacity in Wh.
    pub fn energy_wh(&self) -> f64 {
        self.capacity_ah * self.voltage_v
    }

    pub fn omega_min(&self) -> f64 {
        self.omega_nominal - self.shift_minus_max()
    }

    pub fn omega_max(&self) -> f64 {
        self.omega_nominal + self.shift_plus_max()
    }

    pub fn validate(&self) -> Result<(), ParamsError> {
        let positive = [
            ("pv_rating_w", self.pv_rating_w),
            ("aux_rating_w", self.aux_rating_w),
            ("capacity_ah", self.capacity_ah),
            ("voltage_v", self.voltage_v),
            ("charge_max_w", self.charge_max_w),
            ("discharge_max_w", self.discharge_max_w),
            ("omega_nominal", self.omega_nominal),
            ("m_pv", self.m_pv),
            ("m_aux", self.m_aux),
        ];
        for (name, v) in positive {
            if !(v.is_finite() && v > 0.0) {
                return Err(ParamsError(format!("{name} must be positive, got {v}")));
            }
        }
        if !self.n_q.is_finite() {
            return Err(ParamsError(format!("n_q must be finite, got {}", self.n_q)));
        }
        let (lo, mid, hi) = (self.soc_min_pct, self.soc_min_plus10_pct, self.soc_max_pct);
        if !(0.0 <= lo && lo < mid && mid < hi && hi <= 100.0) {
            return Err(ParamsError(format!(
                "need 0 <= soc_min ({lo}) < soc_min_plus10 ({mid}) < soc_max ({hi}) <= 100"
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derived_bounds() {
        let p = NanogridParams::default();
        assert!((p.shift_plus_max() - 0.167250).abs() < 1e-12);
        assert!((p.shift_minus_max() - 0.075).abs() < 1e-12);
        assert_eq!(p.energy_wh(), 12000.0);
        assert!((p.omega_min() - 314.085).abs() < 1e-9);
        assert!((p.omega_max() - 314.32725).abs() < 1e-9);
        p.validate().unwrap();
    }

    #[test]
    fn validation() {
        let p = NanogridParams {
            soc_min_pct: 60.0,
            ..NanogridParams::default()
        };
        assert!(p.validate().is_err());
        let p = NanogridParams {
            m_pv: 0.0,
            ..NanogridParams::default()
        };
        assert!(p.validate().is_err());
    }
}
