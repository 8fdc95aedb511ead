//! Islanded AC nanogrid with communication-free energy management.
//!
//! A PV array, a floating auxiliary turbine and a load share an AC bus formed by
//! an EV battery inverter. A fuzzy supervisor inside the EV unit shifts the bus
//! frequency; the PV droop curtails on over-frequency and the auxiliary droop
//! injects on under-frequency, keeping the battery inside its SOC and power limits
//! without any link between the units.
//!
//! ## Layout
//!
//! - [`fuzzy`]: general two-input Mamdani inference
//! - [`ems`]: SOC/power normalisation, the fuzzy supervisor and a proportional baseline
//! - [`model`]: droop responses of the units and battery SOC integration
//! - [`sim`]: fixed-step closed loop, traces and summary metrics
//! - [`io`]: profiles, scenario files and output writers
//! - [`commands`]: what the `nanogrid` binary runs
//!
//! ## Examples
//!
//! Each capability has a runnable example:
//!
//! ```bash
//! cargo run -p nanogrid --example fuzzy_inference
//! cargo run -p nanogrid --example supervisor_surface
//! cargo run -p nanogrid --example droop_response
//! cargo run -p nanogrid --example high_soc_day
//! cargo run -p nanogrid --example low_soc_heavy_load
//! cargo run -p nanogrid --example compare_controllers
//! cargo run -p nanogrid --example custom_profiles
//! cargo run -p nanogrid --example export_fis
//! cargo run -p nanogrid --example generate_profiles
//! ```

pub mod commands;
pub mod ems;
pub mod fuzzy;
pub mod io;
pub mod model;
pub mod params;
pub mod scenarios;
pub mod sim;

use std::path::PathBuf;

pub use ems::{BatteryState, Controller, ControllerKind, FrequencyCommand};
pub use params::NanogridParams;
pub use sim::{run_scenario, summarize, Scenario, SummaryMetrics, TimeStepRecord};

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Io(#[from] io::IoError),
    #[error(transparent)]
    Sim(#[from] sim::SimError),
    #[error(transparent)]
    Ems(#[from] ems::EmsError),
    #[error("cannot write {}: {source}", path.display())]
    Write {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("output: {0}")]
    Stdout(#[from] std::io::Error),
}
