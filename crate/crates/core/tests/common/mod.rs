//! Brute-force reference implementations shared by the integration tests.
//!
//! Nothing here calls into the library's evaluation code: membership degrees,
//! rule firing, aggregation and the centroid are recomputed from scratch with a
//! million-sample midpoint sum.

#![allow(dead_code, clippy::needless_range_loop)]

use nanogrid::fuzzy::{
    Connective, FuzzySystem, Implication, LinguisticVariable, MembershipFunction, Rule, Term,
};
use rand::Rng;

pub const ORACLE_SAMPLES: usize = 1_000_000;

#[derive(Debug, Clone, Copy)]
pub enum Shape {
    Tri(f64, f64, f64),
    Trap(f64, f64, f64, f64),
}

fn rise(x: f64, a: f64, b: f64) -> f64 {
    if x < a {
        0.0
    } else if x >= b {
        1.0
    } else {
        (x - a) / (b - a)
    }
}

fn fall(x: f64, c: f64, d: f64) -> f64 {
    if x > d {
        0.0
    } else if x <= c {
        1.0
    } else {
        (d - x) / (d - c)
    }
}

impl Shape {
    pub fn degree(self, x: f64) -> f64 {
        match self {
            Shape::Tri(a, b, c) => Shape::Trap(a, b, b, c).degree(x),
            Shape::Trap(a, b, c, d) => {
                if x < a || x > d {
                    0.0
                } else {
                    rise(x, a, b).min(fall(x, c, d))
                }
            }
        }
    }

    pub fn support(self) -> (f64, f64) {
        match self {
            Shape::Tri(a, _, c) => (a, c),
            Shape::Trap(a, _, _, d) => (a, d),
        }
    }

    fn to_library(self) -> MembershipFunction {
        match self {
            Shape::Tri(a, b, c) => MembershipFunction::triangular(a, b, c).unwrap(),
            Shape::Trap(a, b, c, d) => MembershipFunction::trapezoidal(a, b, c, d).unwrap(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct RefRule {
    /// `(input index, term index)` pairs.
    pub clauses: Vec<(usize, usize)>,
    pub or: bool,
    pub weight: f64,
    pub consequent: usize,
}

#[derive(Debug, Clone)]
pub struct RefSystem {
    pub inputs: [(f64, f64, Vec<Shape>); 2],
    pub output: (f64, f64, Vec<Shape>),
    pub rules: Vec<RefRule>,
    pub product: bool,
}

impl RefSystem {
    pub fn term_activations(&self, x: [f64; 2]) -> Vec<f64> {
        let mut acts = vec![0.0_f64; self.output.2.len()];
        for r in &self.rules {
            let degrees = r.clauses.iter().map(|&(v, t)| self.inputs[v].2[t].degree(x[v]));
            let firing = if r.or {
                degrees.fold(0.0_f64, f64::max)
            } else {
                degrees.fold(1.0_f64, f64::min)
            };
            let a = r.weight * firing;
            if a > acts[r.consequent] {
                acts[r.consequent] = a;
            }
        }
        acts
    }

    /// Centroid of the aggregate; `None` when its area is below 1e-12.
    pub fn centroid(&self, acts: &[f64]) -> Option<f64> {
        let (lo, hi, terms) = &self.output;
        let h = (hi - lo) / ORACLE_SAMPLES as f64;
        let (mut num, mut den) = (0.0, 0.0);
        for i in 0..ORACLE_SAMPLES {
            let y = lo + (i as f64 + 0.5) * h;
            let mut mu = 0.0_f64;
            for (t, &a) in terms.iter().zip(acts) {
                if a > 0.0 {
                    let d = t.degree(y);
                    mu = mu.max(if self.product { a * d } else { a.min(d) });
                }
            }
            num += y * mu;
            den += mu;
        }
        (den * h >= 1e-12).then(|| num / den)
    }

    pub fn infer(&self, x: [f64; 2]) -> Option<f64> {
        self.centroid(&self.term_activations(x))
    }

    pub fn width(&self) -> f64 {
        self.output.1 - self.output.0
    }

    pub fn to_library(&self) -> FuzzySystem {
        let var = |name: &str, (lo, hi, terms): &(f64, f64, Vec<Shape>)| {
            LinguisticVariable::new(
                name,
                (*lo, *hi),
                terms
                    .iter()
                    .enumerate()
                    .map(|(i, s)| Term::new(format!("t{i}"), s.to_library()))
                    .collect(),
            )
            .unwrap()
        };
        let names = ["x", "y"];
        let rules = self.rules.iter().map(|r| {
            let clauses: Vec<(String, String)> = r
                .clauses
                .iter()
                .map(|&(v, t)| (names[v].to_string(), format!("t{t}")))
                .collect();
            let refs: Vec<(&str, &str)> =
                clauses.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
            let cons = format!("t{}", r.consequent);
            let rule = if r.or {
                Rule::or(&refs, &cons)
            } else {
                Rule::and(&refs, &cons)
            };
            assert_eq!(rule.connective, if r.or { Connective::Or } else { Connective::And });
            rule.weighted(r.weight)
        });
        FuzzySystem::builder(
            "reference",
            var("x", &self.inputs[0]),
            var("y", &self.inputs[1]),
            var("z", &self.output),
        )
        .rules(rules)
        .implication(if self.product {
            Implication::Product
        } else {
            Implication::Clip
        })
        .build()
        .unwrap()
    }
}

/// A shape whose sloped edges each span at least 2% of the universe, optionally
/// with a shoulder on the universe boundary.
fn random_shape(rng: &mut impl Rng, lo: f64, hi: f64) -> Shape {
    let w = hi - lo;
    let gaps: Vec<f64> = (0..3).map(|_| rng.random_range(0.02..0.3) * w).collect();
    let span: f64 = gaps.iter().sum();
    let start = lo + rng.random_range(0.0..=(w - span));
    let mut p = [start; 4];
    for i in 0..3 {
        p[i + 1] = p[i] + gaps[i];
    }
    match rng.random_range(0..5) {
        0 => {
            p[0] = lo;
            p[1] = lo;
        }
        1 => {
            p[2] = hi;
            p[3] = hi;
        }
        _ => {}
    }
    if rng.random_bool(0.5) {
        Shape::Trap(p[0], p[1], p[2], p[3])
    } else {
        Shape::Tri(p[0], p[1], p[3])
    }
}

fn random_variable(rng: &mut impl Rng) -> (f64, f64, Vec<Shape>) {
    let lo = rng.random_range(-10.0..10.0);
    let hi = lo + rng.random_range(0.5..20.0);
    let n = rng.random_range(2..=4);
    (lo, hi, (0..n).map(|_| random_shape(rng, lo, hi)).collect())
}

pub fn random_system(rng: &mut impl Rng, product: bool) -> RefSystem {
    let inputs = [random_variable(rng), random_variable(rng)];
    let output = random_variable(rng);
    let n_rules = rng.random_range(1..=6);
    let rules = (0..n_rules)
        .map(|_| {
            let mut clauses = Vec::new();
            for v in 0..2 {
                if clauses.is_empty() || rng.random_bool(0.7) {
                    clauses.push((v, rng.random_range(0..inputs[v].2.len())));
                }
            }
            RefRule {
                clauses,
                or: rng.random_bool(0.3),
                weight: rng.random_range(0.2..=1.0),
                consequent: rng.random_range(0..output.2.len()),
            }
        })
        .collect();
    RefSystem {
        inputs,
        output,
        rules,
        product,
    }
}

/// Draws systems and inputs until `count` cases with a non-empty aggregate exist.
pub fn random_cases(rng: &mut impl Rng, count: usize) -> Vec<(RefSystem, [f64; 2], f64)> {
    let mut cases = Vec::with_capacity(count);
    while cases.len() < count {
        let product = rng.random_bool(0.2);
        let sys = random_system(rng, product);
        let x = [
            rng.random_range(sys.inputs[0].0..=sys.inputs[0].1),
            rng.random_range(sys.inputs[1].0..=sys.inputs[1].1),
        ];
        let acts = sys.term_activations(x);
        // Keep clear of the empty-aggregate threshold.
        if acts.iter().all(|&a| a < 0.05) {
            continue;
        }
        if let Some(c) = sys.centroid(&acts) {
            cases.push((sys, x, c));
        }
    }
    cases
}

// The supervisory controller, rebuilt independently.

pub const OMEGA_0: f64 = 314.16;
pub const SHIFT_PLUS_MAX: f64 = 0.75e-4 * 2230.0;
pub const SHIFT_MINUS_MAX: f64 = 0.75e-4 * 1000.0;

const Z: usize = 0;
const S: usize = 1;
const L: usize = 2;

/// Rows: SOC headroom low/med/high; columns: power headroom low/med/high.
pub const SUPERVISOR_TABLE: [[usize; 3]; 3] = [[L, L, L], [L, S, Z], [L, Z, Z]];

pub fn supervisor(span: f64) -> RefSystem {
    let unit = || {
        (
            0.0,
            1.0,
            vec![
                Shape::Tri(0.0, 0.0, 0.5),
                Shape::Tri(0.0, 0.5, 1.0),
                Shape::Tri(0.5, 1.0, 1.0),
            ],
        )
    };
    let rule = |clauses: Vec<(usize, usize)>, consequent| RefRule {
        clauses,
        or: false,
        weight: 1.0,
        consequent,
    };
    // The all-Large low row and low column as single-clause rules, then the inner cells.
    let mut rules = vec![rule(vec![(0, 0)], L), rule(vec![(1, 0)], L)];
    for i in 1..3 {
        for j in 1..3 {
            rules.push(rule(vec![(0, i), (1, j)], SUPERVISOR_TABLE[i][j]));
        }
    }
    RefSystem {
        inputs: [unit(), unit()],
        output: (
            0.0,
            span,
            vec![
                Shape::Tri(0.0, 0.0, 0.4 * span),
                Shape::Tri(0.2 * span, 0.5 * span, 0.8 * span),
                Shape::Tri(0.6 * span, span, span),
            ],
        ),
        rules,
        product: false,
    }
}

/// Centroid of one output term clipped at `height`; its support's midpoint at zero height.
fn clipped_term_centroid(sys: &RefSystem, term: usize, height: f64) -> f64 {
    if height <= 0.0 {
        let (a, b) = sys.output.2[term].support();
        return 0.5 * (a + b);
    }
    let mut acts = vec![0.0; sys.output.2.len()];
    acts[term] = height;
    sys.centroid(&acts).unwrap()
}

/// Calibrated shift magnitude in `[0, span]`.
pub fn supervisor_shift(sys: &RefSystem, a: f64, b: f64) -> f64 {
    let acts = sys.term_activations([a, b]);
    let c = sys.centroid(&acts).unwrap();
    let c0 = clipped_term_centroid(sys, Z, acts[Z]);
    let c1 = clipped_term_centroid(sys, L, acts[L]);
    sys.width() * ((c - c0) / (c1 - c0)).clamp(0.0, 1.0)
}
