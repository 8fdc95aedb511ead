//! Scenario files shipped in the crate's `scenarios/` directory.

use std::path::PathBuf;

use crate::io::{IoError, LoadedScenario};

/// Battery starts just below its upper SOC limit; normal load.
pub const SCENARIO1_HIGH_SOC: &str = "scenario1_high_soc";
/// Battery starts at its lower SOC limit; load scaled by four.
pub const SCENARIO2_LOW_SOC_4X: &str = "scenario2_low_soc_4x";
/// Mid SOC, clear sky, light load: the surplus exceeds the charging-power limit.
pub const STRESS_CHARGE: &str = "stress_charge";
/// No PV and no load.
pub const DEAD_NETWORK: &str = "dead_network";

pub const ALL: [&str; 4] = [
    SCENARIO1_HIGH_SOC,
    SCENARIO2_LOW_SOC_4X,
    STRESS_CHARGE,
    DEAD_NETWORK,
];

pub fn dir() -> PathBuf {
    PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/scenarios"))
}

pub fn path(name: &str) -> PathBuf {
    dir().join(format!("{name}.toml"))
}

pub fn load(name: &str) -> Result<LoadedScenario, IoError> {
    LoadedScenario::from_file(&path(name))
}
