//! Mamdani fuzzy inference.
//!
//! Min/max connectives, clip implication, max aggregation and centroid
//! defuzzification over a uniformly sampled output universe.

mod membership;
mod rule;
mod system;
mod variable;

pub use membership::MembershipFunction;
pub use rule::{Clause, Connective, Rule};
pub use system::{FuzzySystem, FuzzySystemBuilder, Implication, Inference, DEFAULT_RESOLUTION};
pub use variable::{LinguisticVariable, Term};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum FuzzyError {
    #[error("invalid membership function: {0}")]
    InvalidMembership(String),
    #[error("invalid linguistic variable `{name}`: {reason}")]
    InvalidVariable { name: String, reason: String },
    #[error("invalid rule: {0}")]
    InvalidRule(String),
    #[error("rule references unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("variable `{var}` has no term `{term}`")]
    UnknownTerm { var: String, term: String },
    #[error("no rule fired; the aggregate output set is empty")]
    EmptyAggregate,
}
