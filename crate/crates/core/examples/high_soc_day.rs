//! Twelve hours starting at 94.9% SOC under the default PV and load profiles.
//!
//! The battery cannot absorb the midday surplus, so the supervisor raises the bus
//! frequency and the PV inverter curtails. The auxiliary unit never runs.

use nanogrid::{run_scenario, scenarios, summarize};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let loaded = scenarios::load(scenarios::SCENARIO1_HIGH_SOC)?;
    let s = &loaded.scenario;
    let trace = run_scenario(s, &loaded.pv, &loaded.load)?;

    println!("{:>4} {:>8} {:>8} {:>8} {:>8} {:>8} {:>10}", "h", "pv_av", "pv", "load", "p_bat", "soc", "omega");
    for r in trace.iter().step_by(3600) {
        println!(
            "{:>4.0} {:>8.1} {:>8.1} {:>8.1} {:>+8.1} {:>8.3} {:>10.5}",
            r.t_s / 3600.0,
            r.p_pv_avail,
            r.p_pv,
            r.p_load,
            r.p_bat,
            r.soc,
            r.omega
        );
    }

    let m = summarize(&trace, &s.params, s.dt_s)?;
    println!();
    println!("max SOC            {:.3} %", m.max_soc_pct);
    println!("curtailed energy   {:.1} Wh", m.curtailed_energy_wh);
    println!("auxiliary energy   {:.1} Wh", m.aux_energy_wh);
    println!("max |p_bat|        {:.1} W", m.max_charge_power_w.max(m.max_discharge_power_w));
    Ok(())
}
