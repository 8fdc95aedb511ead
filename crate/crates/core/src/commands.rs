//! The operations behind the `nanogrid` binary, usable without a process boundary.

use std::io::Write;
use std::path::Path;

use crate::ems::{bottom_system, top_system, ControllerKind};
use crate::io::{render_fis, render_summary, write_outputs, FisDump, LoadedScenario, RunArtifacts};
use crate::params::NanogridParams;
use crate::sim::{run_scenario, summarize, Scenario, SummaryMetrics};
use crate::Error;

#[derive(Debug, Clone, PartialEq)]
pub struct RunReport {
    pub scenario: Scenario,
    pub metrics: SummaryMetrics,
    pub artifacts: RunArtifacts,
}

fn execute(loaded: &LoadedScenario, out_dir: &Path) -> Result<RunReport, Error> {
    let scenario = &loaded.scenario;
    let trace = run_scenario(scenario, &loaded.pv, &loaded.load)?;
    let metrics = summarize(&trace, &scenario.params, scenario.dt_s)?;
    let artifacts = write_outputs(&trace, &metrics, out_dir, &scenario.stem())?;
    Ok(RunReport {
        scenario: scenario.clone(),
        metrics,
        artifacts,
    })
}

/// Runs one scenario file, writes its trace and summary, and prints the summary.
pub fn cmd_run(
    scenario_path: &Path,
    out_dir: &Path,
    controller: Option<ControllerKind>,
    stdout: &mut dyn Write,
) -> Result<RunReport, Error> {
    let mut loaded = LoadedScenario::from_file(scenario_path)?;
    if let Some(kind) = controller {
        loaded.scenario.controller = kind;
    }
    let report = execute(&loaded, out_dir)?;
    writeln!(stdout, "# {}", report.scenario.stem())?;
    stdout.write_all(render_summary(&report.metrics).as_bytes())?;
    Ok(report)
}

/// Runs a scenario under both controllers (concurrently) and prints a comparison table.
pub fn cmd_compare(
    scenario_path: &Path,
    out_dir: &Path,
    stdout: &mut dyn Write,
) -> Result<[RunReport; 2], Error> {
    let loaded = LoadedScenario::from_file(scenario_path)?;
    let variant = |kind| LoadedScenario {
        scenario: loaded.scenario.with_controller(kind),
        ..loaded.clone()
    };
    let flc = variant(ControllerKind::Flc);
    let prop = variant(ControllerKind::Proportional);
    let (flc, prop) = std::thread::scope(|s| {
        let a = s.spawn(|| execute(&flc, out_dir));
        let b = s.spawn(|| execute(&prop, out_dir));
        (
            a.join().expect("flc run panicked"),
            b.join().expect("proportional run panicked"),
        )
    });
    let reports = [flc?, prop?];
    stdout.write_all(comparison_table(&reports).as_bytes())?;
    Ok(reports)
}

pub fn comparison_table(reports: &[RunReport]) -> String {
    let mut out = format!(
        "{:<14}{:>8}{:>8}{:>8}{:>8}{:>10}{:>10}{:>12}{:>12}{:>10}\n",
        "controller", "chg_v", "dis_v", "soc_hi", "soc_lo", "min_soc", "max_soc", "max|p_bat|", "aux_wh", "chg_frac"
    );
    for r in reports {
        let m = &r.metrics;
        out.push_str(&format!(
            "{:<14}{:>8}{:>8}{:>8}{:>8}{:>10.3}{:>10.3}{:>12.1}{:>12.1}{:>10.3}\n",
            r.scenario.controller.as_str(),
            m.charge_violations,
            m.discharge_violations,
            m.soc_high_violations,
            m.soc_low_violations,
            m.min_soc_pct,
            m.max_soc_pct,
            m.max_charge_power_w.max(m.max_discharge_power_w),
            m.aux_energy_wh,
            m.charging_fraction,
        ));
    }
    out
}

pub fn fis_dump(params: &NanogridParams) -> Result<FisDump, Error> {
    Ok(FisDump {
        overcharge: top_system(params).map_err(crate::ems::EmsError::from)?,
        overdischarge: bottom_system(params).map_err(crate::ems::EmsError::from)?,
    })
}

/// Writes both fuzzy systems built from `params` to `out_path`.
pub fn cmd_dump_fis(out_path: &Path, params: &NanogridParams) -> Result<(), Error> {
    let text = render_fis(&fis_dump(params)?)?;
    std::fs::write(out_path, text).map_err(|e| Error::Write {
        path: out_path.to_path_buf(),
        source: e,
    })
}
