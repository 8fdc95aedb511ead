//! Profiles, scenario files, trace and summary output.

mod config;
mod format;
mod output;
mod profile;
pub mod synthetic;

use std::path::{Path, PathBuf};

pub use config::{
    load_scenario_file, parse_scenario, parse_scenario_named, render_scenario,
    DEFAULT_DURATION_S, DEFAULT_MEAS_TAU_S,
};
pub use format::{fmt_g, fmt_g6};
pub use output::{
    parse_fis, parse_summary, render_fis, render_summary, render_trace, write_outputs, FisDump,
    RunArtifacts, TRACE_HEADER,
};
pub use profile::{load_profile, sample_profile, Profile, PROFILE_HEADER};

use crate::sim::Scenario;

#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error("{source_name}:{line}: {message}")]
    Parse {
        source_name: String,
        line: usize,
        message: String,
    },
    #[error("{0}")]
    Validation(String),
    #[error("t={t} s is outside profile `{profile}` range [{start}, {end}]")]
    ProfileOutOfRange {
        profile: String,
        t: f64,
        start: f64,
        end: f64,
    },
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl IoError {
    pub(crate) fn io(path: &Path, source: std::io::Error) -> Self {
        IoError::Io {
            path: path.to_path_buf(),
            source,
        }
    }
}

/// A scenario together with its two profiles, resolved relative to the scenario file.
#[derive(Debug, Clone, PartialEq)]
pub struct LoadedScenario {
    pub scenario: Scenario,
    pub pv: Profile,
    pub load: Profile,
}

impl LoadedScenario {
    pub fn from_file(path: &Path) -> Result<Self, IoError> {
        let scenario = load_scenario_file(path)?;
        let base = path.parent().unwrap_or_else(|| Path::new("."));
        Self::resolve(scenario, base)
    }

    pub fn resolve(scenario: Scenario, base: &Path) -> Result<Self, IoError> {
        let pv = load_profile(&base.join(&scenario.pv_profile))?;
        let load = load_profile(&base.join(&scenario.load_profile))?;
        Ok(LoadedScenario { scenario, pv, load })
    }
}
