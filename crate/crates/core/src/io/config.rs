//! Flat `key = value` scenario files (a TOML subset).
//!
//! ```text
//! name = "scenario1_high_soc"
//! pv_profile = "pv_default.csv"
//! load_profile = "load_default.csv"
//! soc_init_pct = 94.9
//! params.soc_max_pct = 95.0
//! ```

use std::fmt::Write as _;
use std::path::Path;

use serde::Deserialize;

use super::IoError;
use crate::ems::ControllerKind;
use crate::params::NanogridParams;
use crate::sim::Scenario;

pub const DEFAULT_DURATION_S: f64 = 12.0 * 3600.0;
pub const DEFAULT_MEAS_TAU_S: f64 = 10.0;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawScenario {
    #[serde(default = "default_name")]
    name: String,
    pv_profile: String,
    load_profile: String,
    #[serde(default = "one")]
    load_multiplier: f64,
    soc_init_pct: f64,
    controller: Option<String>,
    #[serde(default = "one")]
    dt_s: f64,
    #[serde(default = "default_duration")]
    duration_s: f64,
    #[serde(default = "default_tau")]
    meas_tau_s: f64,
    #[serde(default)]
    params: NanogridParams,
}

fn default_name() -> String {
    "scenario".to_string()
}

fn one() -> f64 {
    1.0
}

fn default_duration() -> f64 {
    DEFAULT_DURATION_S
}

fn default_tau() -> f64 {
    DEFAULT_MEAS_TAU_S
}

/// Line number (1-based) of a byte offset.
fn line_of(text: &str, offset: usize) -> usize {
    text[..offset.min(text.len())].matches('\n').count() + 1
}

pub(crate) fn toml_error(source_name: &str, text: &str, err: toml::de::Error) -> IoError {
    let line = err.span().map(|s| line_of(text, s.start)).unwrap_or(0);
    IoError::Parse {
        source_name: source_name.to_string(),
        line,
        message: err.message().to_string(),
    }
}

/// Parses a scenario, filling omitted fields with defaults and the nanogrid
/// parameters with the reference values.
pub fn parse_scenario(text: &str) -> Result<Scenario, IoError> {
    parse_scenario_named("<scenario>", text)
}

pub fn parse_scenario_named(source_name: &str, text: &str) -> Result<Scenario, IoError> {
    let raw: RawScenario =
        toml::from_str(text).map_err(|e| toml_error(source_name, text, e))?;
    let controller = match raw.controller {
        None => ControllerKind::default(),
        Some(s) => s.parse().map_err(IoError::Validation)?,
    };
    let scenario = Scenario {
        name: raw.name,
        params: raw.params,
        soc_init_pct: raw.soc_init_pct,
        pv_profile: raw.pv_profile,
        load_profile: raw.load_profile,
        load_multiplier: raw.load_multiplier,
        controller,
        dt_s: raw.dt_s,
        duration_s: raw.duration_s,
        meas_tau_s: raw.meas_tau_s,
    };
    scenario
        .validate()
        .map_err(|e| IoError::Validation(e.to_string()))?;
    Ok(scenario)
}

pub fn load_scenario_file(path: &Path) -> Result<Scenario, IoError> {
    let text = std::fs::read_to_string(path).map_err(|e| IoError::io(path, e))?;
    parse_scenario_named(&path.display().to_string(), &text)
}

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            '\r' => out.push_str("\\r"),
            c if c.is_control() => {
                let _ = write!(out, "\\u{:04X}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

/// Shortest round-tripping float literal that TOML accepts.
pub(crate) fn float(v: f64) -> String {
    format!("{v:?}")
}

/// Renders every field, including all parameters, so that
/// `parse_scenario(&render_scenario(s)) == s`.
pub fn render_scenario(s: &Scenario) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "name = {}", quote(&s.name));
    let _ = writeln!(out, "pv_profile = {}", quote(&s.pv_profile));
    let _ = writeln!(out, "load_profile = {}", quote(&s.load_profile));
    let _ = writeln!(out, "load_multiplier = {}", float(s.load_multiplier));
    let _ = writeln!(out, "soc_init_pct = {}", float(s.soc_init_pct));
    let _ = writeln!(out, "controller = {}", quote(s.controller.as_str()));
    let _ = writeln!(out, "dt_s = {}", float(s.dt_s));
    let _ = writeln!(out, "duration_s = {}", float(s.duration_s));
    let _ = writeln!(out, "meas_tau_s = {}", float(s.meas_tau_s));
    let p = &s.params;
    let fields = [
        ("pv_rating_w", p.pv_rating_w),
        ("aux_rating_w", p.aux_rating_w),
        ("capacity_ah", p.capacity_ah),
        ("voltage_v", p.voltage_v),
        ("soc_max_pct", p.soc_max_pct),
        ("soc_min_plus10_pct", p.soc_min_plus10_pct),
        ("soc_min_pct", p.soc_min_pct),
        ("charge_max_w", p.charge_max_w),
        ("discharge_max_w", p.discharge_max_w),
        ("omega_nominal", p.omega_nominal),
        ("m_pv", p.m_pv),
        ("m_aux", p.m_aux),
        ("n_q", p.n_q),
    ];
    for (k, v) in fields {
        let _ = writeln!(out, "params.{k} = {}", float(v));
    }
    out
}
