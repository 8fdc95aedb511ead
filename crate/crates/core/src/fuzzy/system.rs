use serde::{Deserialize, Serialize};

use super::{FuzzyError, LinguisticVariable, Rule};

/// Default number of output-universe samples used for centroid integration.
pub const DEFAULT_RESOLUTION: usize = 1001;

/// Aggregate areas below this are treated as empty.
const EMPTY_AREA: f64 = 1e-12;

/// How a rule's activation shapes its consequent term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Implication {
    /// `min(activation, mf(y))`, classic Mamdani.
    #[default]
    Clip,
    /// `activation * mf(y)` (Larsen).
    Product,
}

impl Implication {
    #[inline]
    fn apply(self, activation: f64, degree: f64) -> f64 {
        match self {
            Implication::Clip => activation.min(degree),
            Implication::Product => activation * degree,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
struct CompiledRule {
    clauses: Vec<(usize, usize)>,
    consequent: usize,
}

/// Two-input, one-output Mamdani system.
///
/// The output universe is sampled once at construction (midpoint rule, `resolution`
/// cells) and every centroid is computed against those cached samples, so repeated
/// calls are bit-identical.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawSystem")]
pub struct FuzzySystem {
    name: String,
    inputs: [LinguisticVariable; 2],
    output: LinguisticVariable,
    rules: Vec<Rule>,
    resolution: usize,
    #[serde(default)]
    implication: Implication,
    #[serde(skip)]
    compiled: Vec<CompiledRule>,
    #[serde(skip)]
    grid: Vec<f64>,
    #[serde(skip)]
    term_samples: Vec<Vec<f64>>,
}

#[derive(Deserialize)]
struct RawSystem {
    name: String,
    inputs: [LinguisticVariable; 2],
    output: LinguisticVariable,
    rules: Vec<Rule>,
    resolution: usize,
    #[serde(default)]
    implication: Implication,
}

impl TryFrom<RawSystem> for FuzzySystem {
    type Error = FuzzyError;

    fn try_from(raw: RawSystem) -> Result<Self, Self::Error> {
        let [a, b] = raw.inputs;
        FuzzySystem::builder(raw.name, a, b, raw.output)
            .rules(raw.rules)
            .resolution(raw.resolution)
            .implication(raw.implication)
            .build()
    }
}

pub struct FuzzySystemBuilder {
    name: String,
    inputs: [LinguisticVariable; 2],
    output: LinguisticVariable,
    rules: Vec<Rule>,
    resolution: usize,
    implication: Implication,
}

impl FuzzySystemBuilder {
    pub fn rule(mut self, rule: Rule) -> Self {
        self.rules.push(rule);
        self
    }

    pub fn rules(mut self, rules: impl IntoIterator<Item = Rule>) -> Self {
        self.rules.extend(rules);
        self
    }

    pub fn resolution(mut self, n: usize) -> Self {
        self.resolution = n;
        self
    }

    pub fn implication(mut self, implication: Implication) -> Self {
        self.implication = implication;
        self
    }

    pub fn build(self) -> Result<FuzzySystem, FuzzyError> {
        if self.resolution < 2 {
            return Err(FuzzyError::InvalidRule(format!(
                "resolution {} too small",
                self.resolution
            )));
        }
        if self.inputs[0].name() == self.inputs[1].name() {
            return Err(FuzzyError::InvalidRule(format!(
                "both inputs are named `{}`",
                self.inputs[0].name()
            )));
        }
        let mut compiled = Vec::with_capacity(self.rules.len());
        for rule in &self.rules {
            rule.check_weight()?;
            let mut clauses = Vec::with_capacity(rule.antecedent.len());
            for clause in &rule.antecedent {
                let var = self
                    .inputs
                    .iter()
                    .position(|v| v.name() == clause.var)
                    .ok_or_else(|| FuzzyError::UnknownVariable(clause.var.clone()))?;
                let term = self.inputs[var].term_index(&clause.term).ok_or_else(|| {
                    FuzzyError::UnknownTerm {
                        var: clause.var.clone(),
                        term: clause.term.clone(),
                    }
                })?;
                clauses.push((var, term));
            }
            let consequent =
                self.output
                    .term_index(&rule.consequent)
                    .ok_or_else(|| FuzzyError::UnknownTerm {
                        var: self.output.name().to_string(),
                        term: rule.consequent.clone(),
                    })?;
            compiled.push(CompiledRule {
                clauses,
                consequent,
            });
        }

        let (lo, hi) = self.output.universe();
        let step = (hi - lo) / self.resolution as f64;
        let grid: Vec<f64> = (0..self.resolution)
            .map(|i| lo + (i as f64 + 0.5) * step)
            .collect();
        let term_samples = self
            .output
            .terms()
            .iter()
            .map(|t| grid.iter().map(|&y| t.mf.eval(y)).collect())
            .collect();

        Ok(FuzzySystem {
            name: self.name,
            inputs: self.inputs,
            output: self.output,
            rules: self.rules,
            resolution: self.resolution,
            implication: self.implication,
            compiled,
            grid,
            term_samples,
        })
    }
}

/// Result of one inference, with the intermediate activations exposed.
#[derive(Debug, Clone, PartialEq)]
pub struct Inference {
    pub crisp: f64,
    /// Activation of each rule, in rule order.
    pub rule_activations: Vec<f64>,
    /// Max activation per output term, in term order.
    pub term_activations: Vec<f64>,
}

impl FuzzySystem {
    pub fn builder(
        name: impl Into<String>,
        first: LinguisticVariable,
        second: LinguisticVariable,
        output: LinguisticVariable,
    ) -> FuzzySystemBuilder {
        FuzzySystemBuilder {
            name: name.into(),
            inputs: [first, second],
            output,
            rules: Vec::new(),
            resolution: DEFAULT_RESOLUTION,
            implication: Implication::Clip,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn inputs(&self) -> &[LinguisticVariable; 2] {
        &self.inputs
    }

    pub fn output(&self) -> &LinguisticVariable {
        &self.output
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn resolution(&self) -> usize {
        self.resolution
    }

    pub fn implication(&self) -> Implication {
        self.implication
    }

    /// Crisp output for the two inputs.
    pub fn infer(&self, first: f64, second: f64) -> Result<f64, FuzzyError> {
        self.evaluate(first, second).map(|inf| inf.crisp)
    }

    pub fn evaluate(&self, first: f64, second: f64) -> Result<Inference, FuzzyError> {
        let (rule_activations, term_activations) = self.activations(first, second);
        let crisp = self.centroid(&term_activations)?;
        Ok(Inference {
            crisp,
            rule_activations,
            term_activations,
        })
    }

    fn activations(&self, first: f64, second: f64) -> (Vec<f64>, Vec<f64>) {
        let degrees = [self.inputs[0].degrees(first), self.inputs[1].degrees(second)];
        let mut per_term = vec![0.0_f64; self.output.terms().len()];
        let per_rule = self
            .compiled
            .iter()
            .zip(&self.rules)
            .map(|(c, rule)| {
                let firing = rule
                    .connective
                    .combine(c.clauses.iter().map(|&(v, t)| degrees[v][t]));
                let act = rule.weight * firing;
                per_term[c.consequent] = per_term[c.consequent].max(act);
                act
            })
            .collect();
        (per_rule, per_term)
    }

    /// Centroid of the aggregate built from per-term activations.
    pub fn centroid(&self, term_activations: &[f64]) -> Result<f64, FuzzyError> {
        let mut num = 0.0;
        let mut den = 0.0;
        for (i, &y) in self.grid.iter().enumerate() {
            let mut mu: f64 = 0.0;
            for (t, &act) in term_activations.iter().enumerate() {
                mu = mu.max(self.implication.apply(act, self.term_samples[t][i]));
            }
            num += y * mu;
            den += mu;
        }
        let cell = self.output.width() / self.resolution as f64;
        if den * cell < EMPTY_AREA {
            return Err(FuzzyError::EmptyAggregate);
        }
        Ok(num / den)
    }

    /// Centroid of a single output term shaped at `height`.
    ///
    /// Uses the same sampled path as [`FuzzySystem::centroid`], so a lone term firing
    /// at `height` gives a bit-identical value. At `height == 0` the limit shape (the
    /// flat indicator of the term's sampled support) is used, which keeps the value
    /// continuous in `height`.
    pub fn term_centroid(&self, term: usize, height: f64) -> Result<f64, FuzzyError> {
        let samples = &self.term_samples[term];
        if height > 0.0 {
            let mut num = 0.0;
            let mut den = 0.0;
            for (y, &s) in self.grid.iter().zip(samples) {
                let mu = 0.0_f64.max(self.implication.apply(height, s));
                num += y * mu;
                den += mu;
            }
            let cell = self.output.width() / self.resolution as f64;
            if den * cell < EMPTY_AREA {
                return Err(FuzzyError::EmptyAggregate);
            }
            return Ok(num / den);
        }
        let mut num = 0.0;
        let mut den = 0.0;
        for (y, &s) in self.grid.iter().zip(samples) {
            if s > 0.0 {
                num += y;
                den += 1.0;
            }
        }
        if den == 0.0 {
            return Err(FuzzyError::EmptyAggregate);
        }
        Ok(num / den)
    }

    /// Scans an `n × n` grid over both input universes and returns the first point
    /// at which no rule fires.
    pub fn uncovered_point(&self, n: usize) -> Option<(f64, f64)> {
        let n = n.max(2);
        let (a0, a1) = self.inputs[0].universe();
        let (b0, b1) = self.inputs[1].universe();
        for i in 0..n {
            let x = a0 + (a1 - a0) * i as f64 / (n - 1) as f64;
            for j in 0..n {
                let y = b0 + (b1 - b0) * j as f64 / (n - 1) as f64;
                let (_, per_term) = self.activations(x, y);
                if per_term.iter().all(|&a| a <= 0.0) {
                    return Some((x, y));
                }
            }
        }
        None
    }
}
