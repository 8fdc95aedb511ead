//! Fixed-step closed-loop simulation.
//!
//! Each step the controller reads the battery state measured over the previous
//! step, commands a bus frequency, the units respond through their droop curves,
//! the battery closes the balance and its SOC is integrated over `dt`.

mod metrics;
mod scenario;

use crate::ems::{BatteryState, Controller, EmsError};
use crate::io::{IoError, Profile};
use crate::model::{grid_step, integrate_soc, ModelError};
use crate::params::ParamsError;

pub use metrics::{
    count_power_violations, summarize, SummaryMetrics, MAX_BAND_STEPS, POWER_BAND, SOC_BAND_PCT,
};
pub use scenario::Scenario;

#[derive(Debug, thiserror::Error)]
pub enum SimError {
    #[error("invalid scenario: {0}")]
    InvalidScenario(String),
    #[error(transparent)]
    Params(#[from] ParamsError),
    #[error(transparent)]
    Profile(#[from] IoError),
    #[error("available PV {p_avail} W at t={t_s} s exceeds the {rating} W rating")]
    PvAboveRating { t_s: f64, p_avail: f64, rating: f64 },
    #[error(transparent)]
    Controller(#[from] EmsError),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("cannot summarise an empty trace")]
    EmptyTrace,
}

/// One row of a simulation trace. `soc` is the value at `t_s`, before the step.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimeStepRecord {
    pub t_s: f64,
    pub p_pv_avail: f64,
    pub p_pv: f64,
    pub p_aux: f64,
    pub p_load: f64,
    pub p_bat: f64,
    pub soc: f64,
    pub omega: f64,
    pub d_omega_plus: f64,
    pub d_omega_minus: f64,
}

/// First-order low-pass on the battery power the controller sees.
#[derive(Debug, Clone, Copy)]
struct PowerMeter {
    alpha: f64,
    value: f64,
}

impl PowerMeter {
    fn new(tau_s: f64, dt_s: f64) -> Self {
        let alpha = if tau_s > 0.0 {
            1.0 - (-dt_s / tau_s).exp()
        } else {
            1.0
        };
        PowerMeter { alpha, value: 0.0 }
    }

    fn update(&mut self, p: f64) {
        if self.alpha >= 1.0 {
            self.value = p;
        } else {
            self.value += self.alpha * (p - self.value);
        }
    }
}

/// Runs `scenario` against the given PV-availability and (unscaled) load profiles.
pub fn run_scenario(
    scenario: &Scenario,
    pv: &Profile,
    load: &Profile,
) -> Result<Vec<TimeStepRecord>, SimError> {
    scenario.validate()?;
    let params = &scenario.params;
    let controller = Controller::new(scenario.controller, *params)?;
    let dt = scenario.dt_s;
    let steps = scenario.steps();

    let mut soc = scenario.soc_init_pct;
    let mut meter = PowerMeter::new(scenario.meas_tau_s, dt);
    let mut trace = Vec::with_capacity(steps);
    let mut clamp_events = 0usize;

    for k in 0..steps {
        let t = k as f64 * dt;
        let p_avail = pv.sample(t)?;
        if p_avail > params.pv_rating_w {
            return Err(SimError::PvAboveRating {
                t_s: t,
                p_avail,
                rating: params.pv_rating_w,
            });
        }
        let p_load = load.sample(t)? * scenario.load_multiplier;

        let cmd = controller.command(&BatteryState::new(soc, meter.value)?)?;
        let bus = grid_step(cmd.omega_cmd, p_avail, p_load, params)?;
        trace.push(TimeStepRecord {
            t_s: t,
            p_pv_avail: bus.p_pv_avail,
            p_pv: bus.p_pv,
            p_aux: bus.p_aux,
            p_load: bus.p_load,
            p_bat: bus.p_bat,
            soc,
            omega: bus.omega,
            d_omega_plus: cmd.d_omega_plus,
            d_omega_minus: cmd.d_omega_minus,
        });

        let next = integrate_soc(soc, bus.p_bat, dt, params);
        if !(0.0..=100.0).contains(&next) {
            clamp_events += 1;
            log::warn!(
                "{}: SOC {next:.4}% clamped at t={t} s",
                scenario.name
            );
        }
        soc = next.clamp(0.0, 100.0);
        meter.update(bus.p_bat);
    }
    if clamp_events > 0 {
        log::warn!("{}: {clamp_events} SOC clamping events", scenario.name);
    }
    Ok(trace)
}
