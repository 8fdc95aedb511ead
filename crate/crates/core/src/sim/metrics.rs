use serde::{Deserialize, Serialize};

use crate::params::NanogridParams;

use super::{SimError, TimeStepRecord};

/// Relative overshoot of a power limit tolerated for short excursions.
pub const POWER_BAND: f64 = 0.05;
/// Longest run of consecutive in-band steps that is not counted.
pub const MAX_BAND_STEPS: usize = 3;
/// SOC overshoot tolerated beyond either SOC limit, in percentage points.
pub const SOC_BAND_PCT: f64 = 0.1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SummaryMetrics {
    pub max_charge_power_w: f64,
    pub max_discharge_power_w: f64,
    pub min_soc_pct: f64,
    pub max_soc_pct: f64,
    pub soc_start_pct: f64,
    pub soc_end_pct: f64,
    pub min_omega_rad_s: f64,
    pub max_omega_rad_s: f64,
    pub curtailed_energy_wh: f64,
    pub aux_energy_wh: f64,
    pub charging_fraction: f64,
    pub charge_violations: usize,
    pub discharge_violations: usize,
    pub soc_high_violations: usize,
    pub soc_low_violations: usize,
}

/// Steps at which `values` breaks `limit`.
///
/// A step above `limit * (1 + POWER_BAND)` always counts. A step above `limit` but
/// inside the band counts only when it belongs to a run of more than
/// `MAX_BAND_STEPS` consecutive over-limit steps.
pub fn count_power_violations(values: impl IntoIterator<Item = f64>, limit: f64) -> usize {
    let band = limit * (1.0 + POWER_BAND);
    let mut count = 0;
    let mut run = 0usize;
    let mut run_in_band = 0usize;
    let flush = |run: usize, in_band: usize, count: &mut usize| {
        if run > MAX_BAND_STEPS {
            *count += in_band;
        }
    };
    for v in values {
        if v > limit {
            run += 1;
            if v > band {
                count += 1;
            } else {
                run_in_band += 1;
            }
        } else {
            flush(run, run_in_band, &mut count);
            run = 0;
            run_in_band = 0;
        }
    }
    flush(run, run_in_band, &mut count);
    count
}

/// Aggregates a trace. Energies treat each record's powers as constant over `dt_s`.
pub fn summarize(
    trace: &[TimeStepRecord],
    params: &NanogridParams,
    dt_s: f64,
) -> Result<SummaryMetrics, SimError> {
    let (first, last) = match (trace.first(), trace.last()) {
        (Some(f), Some(l)) => (f, l),
        _ => return Err(SimError::EmptyTrace),
    };
    let hours = dt_s / 3600.0;
    let mut m = SummaryMetrics {
        max_charge_power_w: 0.0,
        max_discharge_power_w: 0.0,
        min_soc_pct: f64::INFINITY,
        max_soc_pct: f64::NEG_INFINITY,
        soc_start_pct: first.soc,
        soc_end_pct: last.soc,
        min_omega_rad_s: f64::INFINITY,
        max_omega_rad_s: f64::NEG_INFINITY,
        curtailed_energy_wh: 0.0,
        aux_energy_wh: 0.0,
        charging_fraction: 0.0,
        charge_violations: 0,
        discharge_violations: 0,
        soc_high_violations: 0,
        soc_low_violations: 0,
    };
    let mut charging = 0usize;
    for r in trace {
        if r.p_bat > 0.0 {
            m.max_charge_power_w = m.max_charge_power_w.max(r.p_bat);
        } else if r.p_bat < 0.0 {
            m.max_discharge_power_w = m.max_discharge_power_w.max(-r.p_bat);
        }
        m.min_soc_pct = m.min_soc_pct.min(r.soc);
        m.max_soc_pct = m.max_soc_pct.max(r.soc);
        m.min_omega_rad_s = m.min_omega_rad_s.min(r.omega);
        m.max_omega_rad_s = m.max_omega_rad_s.max(r.omega);
        m.curtailed_energy_wh += (r.p_pv_avail - r.p_pv) * hours;
        m.aux_energy_wh += r.p_aux * hours;
        if r.p_bat > 0.0 {
            charging += 1;
        }
        if r.soc > params.soc_max_pct + SOC_BAND_PCT {
            m.soc_high_violations += 1;
        }
        if r.soc < params.soc_min_pct - SOC_BAND_PCT {
            m.soc_low_violations += 1;
        }
    }
    m.charging_fraction = charging as f64 / trace.len() as f64;
    m.charge_violations =
        count_power_violations(trace.iter().map(|r| r.p_bat), params.charge_max_w);
    m.discharge_violations =
        count_power_violations(trace.iter().map(|r| -r.p_bat), params.discharge_max_w);
    Ok(m)
}
