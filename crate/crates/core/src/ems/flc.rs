//! The two-subsystem fuzzy supervisor.
//!
//! The top subsystem watches SOC headroom below the upper limit and charging-power
//! headroom, and raises the bus frequency so PV droop curtails. The bottom one watches
//! SOC headroom above the lower limit and discharging-power headroom, and lowers the
//! frequency so the auxiliary droop injects.

use crate::fuzzy::{FuzzyError, FuzzySystem, LinguisticVariable, MembershipFunction, Rule, Term};
use crate::params::NanogridParams;

use super::normalize::{charge_headroom, discharge_headroom, soc_high_headroom, soc_low_headroom};
use super::{BatteryState, EmsError, FrequencyCommand};

pub const ZERO: &str = "zero";
pub const SMALL: &str = "small";
pub const LARGE: &str = "large";
pub const LOW: &str = "low";
pub const MED: &str = "med";
pub const HIGH: &str = "high";

/// Output term assigned to each (SOC headroom, power headroom) cell.
/// Rows are SOC terms, columns power terms, both ordered low/med/high.
pub const RULE_TABLE: [[&str; 3]; 3] = [
    [LARGE, LARGE, LARGE],
    [LARGE, SMALL, ZERO],
    [LARGE, ZERO, ZERO],
];

fn tri(a: f64, b: f64, c: f64) -> Result<MembershipFunction, FuzzyError> {
    MembershipFunction::triangular(a, b, c)
}

/// Three-term partition of a normalised `[0, 1]` headroom input.
pub fn headroom_variable(name: &str) -> Result<LinguisticVariable, FuzzyError> {
    LinguisticVariable::new(
        name,
        (0.0, 1.0),
        vec![
            Term::new(LOW, tri(0.0, 0.0, 0.5)?),
            Term::new(MED, tri(0.0, 0.5, 1.0)?),
            Term::new(HIGH, tri(0.5, 1.0, 1.0)?),
        ],
    )
}

/// Frequency-shift magnitude over `[0, span]` rad/s.
pub fn shift_variable(name: &str, span: f64) -> Result<LinguisticVariable, FuzzyError> {
    LinguisticVariable::new(
        name,
        (0.0, span),
        vec![
            Term::new(ZERO, tri(0.0, 0.0, 0.4 * span)?),
            Term::new(SMALL, tri(0.2 * span, 0.5 * span, 0.8 * span)?),
            Term::new(LARGE, tri(0.6 * span, span, span)?),
        ],
    )
}

/// Rules realising [`RULE_TABLE`]. A row or column whose cells share one output
/// becomes a single-clause rule; the remaining cells become two-clause AND rules.
fn table_rules(soc_var: &str, power_var: &str) -> Vec<Rule> {
    let labels = [LOW, MED, HIGH];
    let uniform = |cells: [&str; 3]| cells.iter().all(|&c| c == cells[0]);
    let full_row: Vec<bool> = (0..3).map(|r| uniform(RULE_TABLE[r])).collect();
    let full_col: Vec<bool> = (0..3)
        .map(|c| uniform([RULE_TABLE[0][c], RULE_TABLE[1][c], RULE_TABLE[2][c]]))
        .collect();

    let mut rules = Vec::new();
    for r in (0..3).filter(|&r| full_row[r]) {
        rules.push(Rule::and(&[(soc_var, labels[r])], RULE_TABLE[r][0]));
    }
    for c in (0..3).filter(|&c| full_col[c]) {
        rules.push(Rule::and(&[(power_var, labels[c])], RULE_TABLE[0][c]));
    }
    for r in (0..3).filter(|&r| !full_row[r]) {
        for c in (0..3).filter(|&c| !full_col[c]) {
            rules.push(Rule::and(
                &[(soc_var, labels[r]), (power_var, labels[c])],
                RULE_TABLE[r][c],
            ));
        }
    }
    rules
}

/// Over-charge protection: `(ΔSOC₁, ΔP_charge) → Δω₊` magnitude.
pub fn top_system(params: &NanogridParams) -> Result<FuzzySystem, FuzzyError> {
    FuzzySystem::builder(
        "overcharge",
        headroom_variable("soc_high_headroom")?,
        headroom_variable("charge_headroom")?,
        shift_variable("shift_plus", params.shift_plus_max())?,
    )
    .rules(table_rules("soc_high_headroom", "charge_headroom"))
    .build()
}

/// Over-discharge protection: `(ΔSOC₂, ΔP_discharge) → |Δω₋|`.
pub fn bottom_system(params: &NanogridParams) -> Result<FuzzySystem, FuzzyError> {
    FuzzySystem::builder(
        "overdischarge",
        headroom_variable("soc_low_headroom")?,
        headroom_variable("discharge_headroom")?,
        shift_variable("shift_minus", params.shift_minus_max())?,
    )
    .rules(table_rules("soc_low_headroom", "discharge_headroom"))
    .build()
}

/// One fuzzy subsystem plus the affine map from raw centroid to shift magnitude.
///
/// With `c` the raw centroid, `c0` the centroid of the `zero` term as it appears in
/// the aggregate (clipped at its activation) and `c1` likewise for `large`, the shift
/// is `bound * clamp((c - c0) / (c1 - c0), 0, 1)`. An aggregate made only of `zero`
/// therefore maps to exactly 0 and one made only of `large` to exactly `bound`.
#[derive(Debug, Clone, PartialEq)]
pub struct CalibratedSubsystem {
    system: FuzzySystem,
    bound: f64,
    zero: usize,
    large: usize,
}

impl CalibratedSubsystem {
    pub fn new(system: FuzzySystem, bound: f64) -> Result<Self, FuzzyError> {
        let out = system.output();
        let find = |name: &str| {
            out.term_index(name).ok_or_else(|| FuzzyError::UnknownTerm {
                var: out.name().to_string(),
                term: name.to_string(),
            })
        };
        let zero = find(ZERO)?;
        let large = find(LARGE)?;
        Ok(CalibratedSubsystem {
            system,
            bound,
            zero,
            large,
        })
    }

    pub fn system(&self) -> &FuzzySystem {
        &self.system
    }

    pub fn bound(&self) -> f64 {
        self.bound
    }

    /// Shift magnitude in `[0, bound]` for inputs already in `[0, 1]`.
    pub fn shift(&self, soc_headroom: f64, power_headroom: f64) -> Result<f64, FuzzyError> {
        let inf = self.system.evaluate(soc_headroom, power_headroom)?;
        let acts = &inf.term_activations;
        let others_idle = |keep: usize| acts.iter().enumerate().all(|(i, &a)| i == keep || a <= 0.0);
        if acts[self.zero] > 0.0 && others_idle(self.zero) {
            return Ok(0.0);
        }
        if acts[self.large] > 0.0 && others_idle(self.large) {
            return Ok(self.bound);
        }
        let c0 = self
            .system
            .term_centroid(self.zero, inf.term_activations[self.zero])?;
        let c1 = self
            .system
            .term_centroid(self.large, inf.term_activations[self.large])?;
        let frac = ((inf.crisp - c0) / (c1 - c0)).clamp(0.0, 1.0);
        Ok(self.bound * frac)
    }
}

/// Fuzzy supervisory controller living in the EV unit.
#[derive(Debug, Clone, PartialEq)]
pub struct FlcController {
    params: NanogridParams,
    top: CalibratedSubsystem,
    bottom: CalibratedSubsystem,
}

impl FlcController {
    pub fn new(params: NanogridParams) -> Result<Self, EmsError> {
        params.validate()?;
        let top = CalibratedSubsystem::new(top_system(&params)?, params.shift_plus_max())?;
        let bottom =
            CalibratedSubsystem::new(bottom_system(&params)?, params.shift_minus_max())?;
        Ok(FlcController {
            params,
            top,
            bottom,
        })
    }

    pub fn params(&self) -> &NanogridParams {
        &self.params
    }

    pub fn top(&self) -> &CalibratedSubsystem {
        &self.top
    }

    pub fn bottom(&self) -> &CalibratedSubsystem {
        &self.bottom
    }

    /// Δω₊ in `[0, Δω₊_max]`.
    pub fn shift_plus(&self, soc_high: f64, charge: f64) -> Result<f64, EmsError> {
        Ok(self.top.shift(soc_high, charge)?)
    }

    /// Δω₋ in `[-Δω₋_max, 0]`.
    pub fn shift_minus(&self, soc_low: f64, discharge: f64) -> Result<f64, EmsError> {
        Ok(0.0 - self.bottom.shift(soc_low, discharge)?)
    }

    pub fn command(&self, state: &BatteryState) -> Result<FrequencyCommand, EmsError> {
        let p = &self.params;
        let plus = self.shift_plus(
            soc_high_headroom(state.soc(), p),
            charge_headroom(state.p_charge(), p),
        )?;
        let minus = self.shift_minus(
            soc_low_headroom(state.soc(), p),
            discharge_headroom(state.p_discharge(), p),
        )?;
        Ok(FrequencyCommand::new(p.omega_nominal, plus, minus))
    }
}
