use serde::{Deserialize, Serialize};

use super::{FuzzyError, MembershipFunction};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Term {
    pub name: String,
    pub mf: MembershipFunction,
}

impl Term {
    pub fn new(name: impl Into<String>, mf: MembershipFunction) -> Self {
        Term {
            name: name.into(),
            mf,
        }
    }
}

/// A named real-valued quantity and its linguistic terms.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawVariable")]
pub struct LinguisticVariable {
    name: String,
    universe: [f64; 2],
    terms: Vec<Term>,
}

#[derive(Deserialize)]
struct RawVariable {
    name: String,
    universe: [f64; 2],
    terms: Vec<Term>,
}

impl TryFrom<RawVariable> for LinguisticVariable {
    type Error = FuzzyError;

    fn try_from(raw: RawVariable) -> Result<Self, Self::Error> {
        LinguisticVariable::new(raw.name, (raw.universe[0], raw.universe[1]), raw.terms)
    }
}

impl LinguisticVariable {
    pub fn new(
        name: impl Into<String>,
        universe: (f64, f64),
        terms: Vec<Term>,
    ) -> Result<Self, FuzzyError> {
        let name = name.into();
        let (lo, hi) = universe;
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(FuzzyError::InvalidVariable {
                name,
                reason: format!("universe [{lo}, {hi}] is not a proper interval"),
            });
        }
        if terms.is_empty() {
            return Err(FuzzyError::InvalidVariable {
                name,
                reason: "no terms".into(),
            });
        }
        for (i, term) in terms.iter().enumerate() {
            term.mf.validate()?;
            if terms[..i].iter().any(|t| t.name == term.name) {
                return Err(FuzzyError::InvalidVariable {
                    name,
                    reason: format!("duplicate term `{}`", term.name),
                });
            }
            let (a, b) = term.mf.support();
            if a < lo || b > hi {
                return Err(FuzzyError::InvalidVariable {
                    name,
                    reason: format!(
                        "term `{}` support [{a}, {b}] leaves universe [{lo}, {hi}]",
                        term.name
                    ),
                });
            }
        }
        Ok(LinguisticVariable {
            name,
            universe: [lo, hi],
            terms,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn universe(&self) -> (f64, f64) {
        (self.universe[0], self.universe[1])
    }

    pub fn width(&self) -> f64 {
        self.universe[1] - self.universe[0]
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn term_index(&self, name: &str) -> Option<usize> {
        self.terms.iter().position(|t| t.name == name)
    }

    /// Degree of `x` in every term, in term order.
    pub fn degrees(&self, x: f64) -> Vec<f64> {
        self.terms.iter().map(|t| t.mf.eval(x)).collect()
    }

    /// Term name → degree pairs.
    pub fn fuzzify(&self, x: f64) -> Vec<(&str, f64)> {
        self.terms
            .iter()
            .map(|t| (t.name.as_str(), t.mf.eval(x)))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn three_term() -> LinguisticVariable {
        let tri = |a, b, c| MembershipFunction::triangular(a, b, c).unwrap();
        LinguisticVariable::new(
            "x",
            (0.0, 1.0),
            vec![
                Term::new("low", tri(0.0, 0.0, 0.5)),
                Term::new("med", tri(0.0, 0.5, 1.0)),
                Term::new("high", tri(0.5, 1.0, 1.0)),
            ],
        )
        .unwrap()
    }

    #[test]
    fn fuzzify_partition_points() {
        let v = three_term();
        assert_eq!(v.fuzzify(0.5), vec![("low", 0.0), ("med", 1.0), ("high", 0.0)]);
        assert_eq!(v.fuzzify(0.75), vec![("low", 0.0), ("med", 0.5), ("high", 0.5)]);
        assert_eq!(v.fuzzify(0.0), vec![("low", 1.0), ("med", 0.0), ("high", 0.0)]);
    }

    #[test]
    fn rejects_duplicates_and_out_of_universe() {
        let tri = |a, b, c| MembershipFunction::triangular(a, b, c).unwrap();
        let dup = LinguisticVariable::new(
            "x",
            (0.0, 1.0),
            vec![Term::new("a", tri(0.0, 0.0, 1.0)), Term::new("a", tri(0.0, 1.0, 1.0))],
        );
        assert!(dup.is_err());
        let outside =
            LinguisticVariable::new("x", (0.0, 1.0), vec![Term::new("a", tri(0.0, 1.0, 2.0))]);
        assert!(outside.is_err());
        assert!(LinguisticVariable::new("x", (0.0, 1.0), vec![]).is_err());
        assert!(LinguisticVariable::new("x", (1.0, 1.0), vec![Term::new("a", tri(1.0, 1.0, 1.0))]).is_err());
    }
}
