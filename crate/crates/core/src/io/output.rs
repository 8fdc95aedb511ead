use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::config::{float, toml_error};
use super::format::fmt_g6;
use super::IoError;
use crate::fuzzy::FuzzySystem;
use crate::sim::{SummaryMetrics, TimeStepRecord};

pub const TRACE_HEADER: &str = "t_s,p_pv_avail_w,p_pv_w,p_aux_w,p_load_w,p_bat_w,soc_pct,omega_rad_s,d_omega_plus,d_omega_minus";

pub fn render_trace(trace: &[TimeStepRecord]) -> String {
    let mut out = String::with_capacity(80 * (trace.len() + 1));
    out.push_str(TRACE_HEADER);
    out.push('\n');
    for r in trace {
        let fields = [
            r.t_s,
            r.p_pv_avail,
            r.p_pv,
            r.p_aux,
            r.p_load,
            r.p_bat,
            r.soc,
            r.omega,
            r.d_omega_plus,
            r.d_omega_minus,
        ];
        for (i, v) in fields.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str(&fmt_g6(*v));
        }
        out.push('\n');
    }
    out
}

/// Flat `key = value` summary, one field per line in declaration order.
pub fn render_summary(m: &SummaryMetrics) -> String {
    let mut out = String::new();
    let floats = [
        ("max_charge_power_w", m.max_charge_power_w),
        ("max_discharge_power_w", m.max_discharge_power_w),
        ("min_soc_pct", m.min_soc_pct),
        ("max_soc_pct", m.max_soc_pct),
        ("soc_start_pct", m.soc_start_pct),
        ("soc_end_pct", m.soc_end_pct),
        ("min_omega_rad_s", m.min_omega_rad_s),
        ("max_omega_rad_s", m.max_omega_rad_s),
        ("curtailed_energy_wh", m.curtailed_energy_wh),
        ("aux_energy_wh", m.aux_energy_wh),
        ("charging_fraction", m.charging_fraction),
    ];
    for (k, v) in floats {
        let _ = writeln!(out, "{k} = {}", float(v));
    }
    let counts = [
        ("charge_violations", m.charge_violations),
        ("discharge_violations", m.discharge_violations),
        ("soc_high_violations", m.soc_high_violations),
        ("soc_low_violations", m.soc_low_violations),
    ];
    for (k, v) in counts {
        let _ = writeln!(out, "{k} = {v}");
    }
    out
}

pub fn parse_summary(text: &str) -> Result<SummaryMetrics, IoError> {
    toml::from_str(text).map_err(|e| toml_error("<summary>", text, e))
}

/// Paths of the files produced by [`write_outputs`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunArtifacts {
    pub trace: PathBuf,
    pub summary: PathBuf,
}

/// Writes `<stem>.trace.csv` and `<stem>.summary.txt` under `dir`, creating it if needed.
pub fn write_outputs(
    trace: &[TimeStepRecord],
    metrics: &SummaryMetrics,
    dir: &Path,
    stem: &str,
) -> Result<RunArtifacts, IoError> {
    std::fs::create_dir_all(dir).map_err(|e| IoError::io(dir, e))?;
    let artifacts = RunArtifacts {
        trace: dir.join(format!("{stem}.trace.csv")),
        summary: dir.join(format!("{stem}.summary.txt")),
    };
    write_file(&artifacts.trace, &render_trace(trace))?;
    write_file(&artifacts.summary, &render_summary(metrics))?;
    Ok(artifacts)
}

pub(crate) fn write_file(path: &Path, contents: &str) -> Result<(), IoError> {
    std::fs::write(path, contents).map_err(|e| IoError::io(path, e))
}

/// Both supervisory fuzzy systems, as dumped for audit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FisDump {
    pub overcharge: FuzzySystem,
    pub overdischarge: FuzzySystem,
}

pub fn render_fis(dump: &FisDump) -> Result<String, IoError> {
    toml::to_string(dump).map_err(|e| IoError::Validation(format!("cannot render systems: {e}")))
}

pub fn parse_fis(text: &str) -> Result<FisDump, IoError> {
    toml::from_str(text).map_err(|e| toml_error("<fis>", text, e))
}
