use std::fmt::Write as _;
use std::path::Path;

use super::format::fmt_g6;
use super::IoError;

pub const PROFILE_HEADER: &str = "t_s,power_w";

/// Piecewise-linear power time series.
#[derive(Debug, Clone, PartialEq)]
pub struct Profile {
    name: String,
    t: Vec<f64>,
    values: Vec<f64>,
}

impl Profile {
    pub fn new(name: impl Into<String>, samples: Vec<(f64, f64)>) -> Result<Self, IoError> {
        let name = name.into();
        if samples.len() < 2 {
            return Err(IoError::Validation(format!(
                "profile `{name}` needs at least 2 samples, got {}",
                samples.len()
            )));
        }
        for (i, &(t, v)) in samples.iter().enumerate() {
            if !t.is_finite() || !v.is_finite() {
                return Err(IoError::Validation(format!(
                    "profile `{name}` sample {i} is not finite"
                )));
            }
            if v < 0.0 {
                return Err(IoError::Validation(format!(
                    "profile `{name}` has negative power {v} at t={t}"
                )));
            }
            if i > 0 && t <= samples[i - 1].0 {
                return Err(IoError::Validation(format!(
                    "profile `{name}` time not strictly increasing at t={t}"
                )));
            }
        }
        let (t, values) = samples.into_iter().unzip();
        Ok(Profile { name, t, values })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn len(&self) -> usize {
        self.t.len()
    }

    pub fn is_empty(&self) -> bool {
        self.t.is_empty()
    }

    pub fn start(&self) -> f64 {
        self.t[0]
    }

    pub fn end(&self) -> f64 {
        self.t[self.t.len() - 1]
    }

    pub fn samples(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.t.iter().copied().zip(self.values.iter().copied())
    }

    pub fn max_value(&self) -> f64 {
        self.values.iter().copied().fold(0.0, f64::max)
    }

    /// Linear interpolation, exact at sample times.
    pub fn sample(&self, t: f64) -> Result<f64, IoError> {
        if !(t >= self.start() && t <= self.end()) {
            return Err(IoError::ProfileOutOfRange {
                profile: self.name.clone(),
                t,
                start: self.start(),
                end: self.end(),
            });
        }
        // first index with self.t[i] > t
        let i = self.t.partition_point(|&ti| ti <= t);
        if i == 0 {
            return Ok(self.values[0]);
        }
        let k = i - 1;
        if self.t[k] == t || k + 1 == self.t.len() {
            return Ok(self.values[k]);
        }
        let (t0, t1) = (self.t[k], self.t[k + 1]);
        let (v0, v1) = (self.values[k], self.values[k + 1]);
        Ok(v0 + (v1 - v0) * (t - t0) / (t1 - t0))
    }

    /// Parses `t_s,power_w` text. The header is required.
    pub fn parse(name: impl Into<String>, text: &str) -> Result<Self, IoError> {
        let name = name.into();
        let mut lines = text.lines().enumerate();
        match lines.next() {
            Some((_, h)) if h.trim() == PROFILE_HEADER => {}
            Some((_, h)) => {
                return Err(IoError::Parse {
                    source_name: name,
                    line: 1,
                    message: format!("expected header `{PROFILE_HEADER}`, found `{}`", h.trim()),
                })
            }
            None => {
                return Err(IoError::Validation(format!("profile `{name}` is empty")));
            }
        }
        let mut samples = Vec::new();
        for (idx, line) in lines {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let parse_err = |message: String| IoError::Parse {
                source_name: name.clone(),
                line: idx + 1,
                message,
            };
            let mut fields = line.split(',');
            let (Some(t), Some(v), None) = (fields.next(), fields.next(), fields.next()) else {
                return Err(parse_err(format!("expected 2 fields in `{line}`")));
            };
            let t: f64 = t
                .trim()
                .parse()
                .map_err(|e| parse_err(format!("bad time `{t}`: {e}")))?;
            let v: f64 = v
                .trim()
                .parse()
                .map_err(|e| parse_err(format!("bad power `{v}`: {e}")))?;
            samples.push((t, v));
        }
        Profile::new(name, samples)
    }

    pub fn load(path: &Path) -> Result<Self, IoError> {
        let text = std::fs::read_to_string(path).map_err(|e| IoError::io(path, e))?;
        Profile::parse(path.display().to_string(), &text)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::with_capacity(16 * self.len() + 16);
        out.push_str(PROFILE_HEADER);
        out.push('\n');
        for (t, v) in self.samples() {
            let _ = writeln!(out, "{},{}", fmt_g6(t), fmt_g6(v));
        }
        out
    }
}

/// Reads a profile file.
pub fn load_profile(path: &Path) -> Result<Profile, IoError> {
    Profile::load(path)
}

/// Interpolated profile value at `t`.
pub fn sample_profile(profile: &Profile, t: f64) -> Result<f64, IoError> {
    profile.sample(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_two_rows() {
        let p = Profile::parse("p", "t_s,power_w\n0,0\n3600,500\n").unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.sample(1800.0).unwrap(), 250.0);
        assert_eq!(p.sample(0.0).unwrap(), 0.0);
        assert_eq!(p.sample(3600.0).unwrap(), 500.0);
        assert!(matches!(
            p.sample(4000.0),
            Err(IoError::ProfileOutOfRange { .. })
        ));
        assert!(p.sample(-1.0).is_err());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            Profile::parse("p", "t_s,power_w\n3600,1\n0,0\n"),
            Err(IoError::Validation(_))
        ));
        assert!(matches!(
            Profile::parse("p", "t_s,power_w\n"),
            Err(IoError::Validation(_))
        ));
        assert!(matches!(
            Profile::parse("p", "t_s,power_w\n0,1\n10,-1\n"),
            Err(IoError::Validation(_))
        ));
        match Profile::parse("p", "t_s,power_w\n0,1\n10,abc\n") {
            Err(IoError::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            Profile::parse("p", "time,value\n0,1\n1,1\n"),
            Err(IoError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            Profile::parse("p", "t_s,power_w\n0,1,2\n"),
            Err(IoError::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn tolerates_crlf() {
        let p = Profile::parse("p", "t_s,power_w\r\n0,1\r\n60,2\r\n").unwrap();
        assert_eq!(p.sample(30.0).unwrap(), 1.5);
    }

    proptest! {
        #[test]
        fn exact_at_samples_and_bounded_between(
            steps in proptest::collection::vec((1.0f64..100.0, 0.0f64..3000.0), 2..30),
            frac in 0.0f64..1.0,
        ) {
            let mut t = 0.0;
            let samples: Vec<_> = steps.iter().map(|&(dt, v)| { t += dt; (t, v) }).collect();
            let p = Profile::new("p", samples.clone()).unwrap();
            for &(t, v) in &samples {
                prop_assert_eq!(p.sample(t).unwrap(), v);
            }
            for w in samples.windows(2) {
                let tm = w[0].0 + frac * (w[1].0 - w[0].0);
                let v = p.sample(tm).unwrap();
                let (lo, hi) = (w[0].1.min(w[1].1), w[0].1.max(w[1].1));
                prop_assert!(v >= lo - 1e-9 && v <= hi + 1e-9);
            }
        }
    }
}
