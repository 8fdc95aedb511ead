//! Regenerates the bundled PV and load profiles.
//!
//! ```bash
//! cargo run -p nanogrid --example generate_profiles -- crates/core/scenarios
//! ```

use std::path::PathBuf;

use nanogrid::io::synthetic::{clear_sky_pv_profile, default_load_profile, default_pv_profile};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("nanogrid_profiles"));
    std::fs::create_dir_all(&dir)?;

    for profile in [default_pv_profile(), default_load_profile(), clear_sky_pv_profile()] {
        let path = dir.join(format!("{}.csv", profile.name()));
        std::fs::write(&path, profile.to_csv())?;
        println!(
            "{:<14} {} samples, peak {:.1} W -> {}",
            profile.name(),
            profile.len(),
            profile.max_value(),
            path.display()
        );
    }
    Ok(())
}
