//! The two supervisory fuzzy subsystems and the commands they produce.
//!
//! Prints the over-charge shift surface over its normalised inputs, then the
//! full frequency command for a few battery states.

use nanogrid::ems::{ems_step, proportional_step, FlcController};
use nanogrid::{BatteryState, NanogridParams};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let params = NanogridParams::default();
    let flc = FlcController::new(params)?;

    println!("upward shift (rad/s); rows: SOC headroom, columns: charge-power headroom");
    let grid = [0.0, 0.25, 0.5, 0.75, 1.0];
    print!("{:>6}", "");
    for b in grid {
        print!("{b:>9.2}");
    }
    println!();
    for a in grid {
        print!("{a:>6.2}");
        for b in grid {
            print!("{:>9.5}", flc.shift_plus(a, b)?);
        }
        println!();
    }

    println!();
    println!(
        "{:>6} {:>8} | {:>9} {:>9} {:>9} | {:>9}",
        "soc", "p_bat", "flc +", "flc -", "omega", "prop omega"
    );
    for (soc, p_bat) in [
        (60.0, 0.0),
        (94.0, 300.0),
        (80.0, 950.0),
        (47.0, -200.0),
        (41.0, -900.0),
        (40.0, 0.0),
    ] {
        let state = BatteryState::new(soc, p_bat)?;
        let cmd = ems_step(&state, &params)?;
        let prop = proportional_step(&state, &params)?;
        println!(
            "{soc:>6.1} {p_bat:>8.1} | {:>9.5} {:>9.5} {:>9.5} | {:>9.5}",
            cmd.d_omega_plus, cmd.d_omega_minus, cmd.omega_cmd, prop.omega_cmd
        );
    }
    Ok(())
}
