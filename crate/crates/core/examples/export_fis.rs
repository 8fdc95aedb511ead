//! Writes both supervisory fuzzy systems to a TOML file and reads them back.

use nanogrid::commands::cmd_dump_fis;
use nanogrid::io::parse_fis;
use nanogrid::NanogridParams;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::temp_dir().join("nanogrid_fis.toml");
    cmd_dump_fis(&path, &NanogridParams::default())?;
    let dump = parse_fis(&std::fs::read_to_string(&path)?)?;

    for system in [&dump.overcharge, &dump.overdischarge] {
        let [a, b] = system.inputs();
        let out = system.output();
        println!(
            "{}: ({}, {}) -> {} on [{}, {}]",
            system.name(),
            a.name(),
            b.name(),
            out.name(),
            out.universe().0,
            out.universe().1
        );
        for rule in system.rules() {
            let clauses: Vec<String> = rule.antecedent.iter().map(|c| format!("{} is {}", c.var, c.term)).collect();
            println!("  if {} then {}", clauses.join(" and "), rule.consequent);
        }
    }
    println!("written to {}", path.display());
    Ok(())
}
