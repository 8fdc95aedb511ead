//! Static droop responses of the PV and auxiliary units, and the battery balance.

use nanogrid::model::{aux_power, grid_step, pv_power};
use nanogrid::NanogridParams;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let params = NanogridParams::default();
    let (p_avail, p_load) = (1800.0, 600.0);

    println!("PV available {p_avail} W, load {p_load} W");
    println!("{:>10} {:>10} {:>9} {:>9} {:>9}", "omega", "d_omega", "p_pv", "p_aux", "p_bat");
    let lo = params.omega_min();
    let hi = params.omega_max();
    for i in 0..=12 {
        let omega = lo + (hi - lo) * i as f64 / 12.0;
        let bus = grid_step(omega, p_avail, p_load, &params)?;
        println!(
            "{omega:>10.5} {:>+10.5} {:>9.1} {:>9.1} {:>+9.1}",
            omega - params.omega_nominal,
            bus.p_pv,
            bus.p_aux,
            bus.p_bat
        );
    }

    println!();
    println!(
        "full curtailment at +{:.5} rad/s: p_pv = {}",
        params.shift_plus_max(),
        pv_power(params.omega_max(), params.pv_rating_w, &params)
    );
    println!(
        "full auxiliary at -{:.5} rad/s: p_aux = {:.6}",
        params.shift_minus_max(),
        aux_power(params.omega_min(), &params)
    );
    Ok(())
}
