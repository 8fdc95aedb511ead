//! Fuzzy supervisor against an SOC-proportional frequency shift on every bundled scenario.
//!
//! The proportional law ignores battery power, so on the light-load stress day it
//! lets charging power run past its limit.

use nanogrid::commands::cmd_compare;
use nanogrid::scenarios;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let out = std::env::temp_dir().join("nanogrid_compare");
    let mut stdout = std::io::stdout().lock();
    for name in scenarios::ALL {
        println!("== {name}");
        cmd_compare(&scenarios::path(name), &out, &mut stdout)?;
        println!();
    }
    println!("traces and summaries in {}", out.display());
    Ok(())
}
