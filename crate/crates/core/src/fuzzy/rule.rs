use serde::{Deserialize, Serialize};

use super::FuzzyError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Connective {
    /// Minimum t-norm.
    #[default]
    And,
    /// Maximum s-norm.
    Or,
}

impl Connective {
    pub fn combine(self, degrees: impl IntoIterator<Item = f64>) -> f64 {
        let mut iter = degrees.into_iter();
        let Some(first) = iter.next() else {
            return 0.0;
        };
        match self {
            Connective::And => iter.fold(first, f64::min),
            Connective::Or => iter.fold(first, f64::max),
        }
    }
}

/// `variable IS term`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Clause {
    pub var: String,
    pub term: String,
}

/// `IF clause (AND|OR clause)* THEN output IS consequent`, scaled by `weight`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Rule {
    pub antecedent: Vec<Clause>,
    #[serde(default)]
    pub connective: Connective,
    pub consequent: String,
    #[serde(default = "unit_weight")]
    pub weight: f64,
}

fn unit_weight() -> f64 {
    1.0
}

impl Rule {
    /// Conjunctive rule with unit weight.
    pub fn and(clauses: &[(&str, &str)], consequent: &str) -> Self {
        Rule::with(Connective::And, clauses, consequent)
    }

    pub fn or(clauses: &[(&str, &str)], consequent: &str) -> Self {
        Rule::with(Connective::Or, clauses, consequent)
    }

    fn with(connective: Connective, clauses: &[(&str, &str)], consequent: &str) -> Self {
        Rule {
            antecedent: clauses
                .iter()
                .map(|(v, t)| Clause {
                    var: (*v).to_string(),
                    term: (*t).to_string(),
                })
                .collect(),
            connective,
            consequent: consequent.to_string(),
            weight: 1.0,
        }
    }

    pub fn weighted(mut self, weight: f64) -> Self {
        self.weight = weight;
        self
    }

    pub(crate) fn check_weight(&self) -> Result<(), FuzzyError> {
        if !(0.0..=1.0).contains(&self.weight) {
            return Err(FuzzyError::InvalidRule(format!(
                "weight {} outside [0, 1]",
                self.weight
            )));
        }
        if self.antecedent.is_empty() {
            return Err(FuzzyError::InvalidRule("empty antecedent".into()));
        }
        Ok(())
    }
}
