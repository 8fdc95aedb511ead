//! A scenario assembled in code: a cloudy afternoon with a step in load.

use nanogrid::io::{write_outputs, Profile};
use nanogrid::{run_scenario, summarize, ControllerKind, NanogridParams, Scenario};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let pv = Profile::new(
        "cloudy",
        vec![
            (0.0, 1900.0),
            (1800.0, 2100.0),
            (2400.0, 600.0),
            (3600.0, 500.0),
            (4200.0, 2000.0),
            (7200.0, 1200.0),
        ],
    )?;
    let load = Profile::new("step", vec![(0.0, 300.0), (3000.0, 300.0), (3060.0, 900.0), (7200.0, 900.0)])?;

    let scenario = Scenario {
        name: "cloudy_afternoon".into(),
        params: NanogridParams::default(),
        soc_init_pct: 70.0,
        pv_profile: String::new(),
        load_profile: String::new(),
        load_multiplier: 1.0,
        controller: ControllerKind::Flc,
        dt_s: 1.0,
        duration_s: 7200.0,
        meas_tau_s: 10.0,
    };

    let trace = run_scenario(&scenario, &pv, &load)?;
    println!("{:>6} {:>8} {:>8} {:>8} {:>8} {:>10}", "t_min", "pv_av", "pv", "aux", "p_bat", "omega");
    for r in trace.iter().step_by(600) {
        println!(
            "{:>6.0} {:>8.1} {:>8.1} {:>8.1} {:>+8.1} {:>10.5}",
            r.t_s / 60.0,
            r.p_pv_avail,
            r.p_pv,
            r.p_aux,
            r.p_bat,
            r.omega
        );
    }

    let metrics = summarize(&trace, &scenario.params, scenario.dt_s)?;
    let out = std::env::temp_dir().join("nanogrid_custom");
    let files = write_outputs(&trace, &metrics, &out, &scenario.stem())?;
    println!();
    println!("max charge {:.1} W, curtailed {:.1} Wh", metrics.max_charge_power_w, metrics.curtailed_energy_wh);
    println!("wrote {} and {}", files.trace.display(), files.summary.display());
    Ok(())
}
