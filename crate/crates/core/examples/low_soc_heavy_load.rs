//! Twelve hours starting at the 40% SOC floor with four times the default load.
//!
//! The supervisor lowers the bus frequency so the auxiliary unit covers the
//! deficit, and the battery spends most of the day charging.

use nanogrid::{run_scenario, scenarios, summarize};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let loaded = scenarios::load(scenarios::SCENARIO2_LOW_SOC_4X)?;
    let s = &loaded.scenario;
    let trace = run_scenario(s, &loaded.pv, &loaded.load)?;

    println!("{:>4} {:>8} {:>8} {:>8} {:>8} {:>8} {:>10}", "h", "pv", "aux", "load", "p_bat", "soc", "omega");
    for r in trace.iter().step_by(3600) {
        println!(
            "{:>4.0} {:>8.1} {:>8.1} {:>8.1} {:>+8.1} {:>8.3} {:>10.5}",
            r.t_s / 3600.0,
            r.p_pv,
            r.p_aux,
            r.p_load,
            r.p_bat,
            r.soc,
            r.omega
        );
    }

    let m = summarize(&trace, &s.params, s.dt_s)?;
    println!();
    println!("SOC {:.3} % -> {:.3} % (min {:.3} %)", m.soc_start_pct, m.soc_end_pct, m.min_soc_pct);
    println!("auxiliary energy   {:.1} Wh", m.aux_energy_wh);
    println!("charging fraction  {:.3}", m.charging_fraction);
    println!("power violations   {} charge, {} discharge", m.charge_violations, m.discharge_violations);
    Ok(())
}
