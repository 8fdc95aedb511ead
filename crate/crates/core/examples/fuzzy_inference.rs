//! A general two-input Mamdani system built from scratch.
//!
//! Fan speed from room temperature and humidity, with the intermediate rule
//! activations printed next to the crisp output.

use nanogrid::fuzzy::{FuzzySystem, LinguisticVariable, MembershipFunction as Mf, Rule, Term};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let temperature = LinguisticVariable::new(
        "temperature",
        (10.0, 40.0),
        vec![
            Term::new("cool", Mf::trapezoidal(10.0, 10.0, 18.0, 24.0)?),
            Term::new("warm", Mf::triangular(20.0, 26.0, 32.0)?),
            Term::new("hot", Mf::trapezoidal(28.0, 34.0, 40.0, 40.0)?),
        ],
    )?;
    let humidity = LinguisticVariable::new(
        "humidity",
        (0.0, 100.0),
        vec![
            Term::new("dry", Mf::trapezoidal(0.0, 0.0, 30.0, 55.0)?),
            Term::new("humid", Mf::trapezoidal(45.0, 70.0, 100.0, 100.0)?),
        ],
    )?;
    let fan = LinguisticVariable::new(
        "fan_pct",
        (0.0, 100.0),
        vec![
            Term::new("off", Mf::triangular(0.0, 0.0, 30.0)?),
            Term::new("medium", Mf::triangular(20.0, 50.0, 80.0)?),
            Term::new("full", Mf::triangular(70.0, 100.0, 100.0)?),
        ],
    )?;

    let system = FuzzySystem::builder("fan", temperature, humidity, fan)
        .rule(Rule::and(&[("temperature", "cool")], "off"))
        .rule(Rule::and(&[("temperature", "warm"), ("humidity", "dry")], "off"))
        .rule(Rule::and(&[("temperature", "warm"), ("humidity", "humid")], "medium"))
        .rule(Rule::or(&[("temperature", "hot"), ("humidity", "humid")], "medium").weighted(0.5))
        .rule(Rule::and(&[("temperature", "hot")], "full"))
        .build()?;

    println!("fuzzify 27 C: {:?}", system.inputs()[0].fuzzify(27.0));
    println!();
    println!("{:>6} {:>6} {:>8}   rule activations", "temp", "rh", "fan %");
    for (t, h) in [(15.0, 40.0), (24.0, 30.0), (27.0, 65.0), (31.0, 50.0), (37.0, 80.0)] {
        let inf = system.evaluate(t, h)?;
        let acts: Vec<String> = inf.rule_activations.iter().map(|a| format!("{a:.2}")).collect();
        println!("{t:>6.1} {h:>6.1} {:>8.2}   [{}]", inf.crisp, acts.join(", "));
    }
    Ok(())
}
