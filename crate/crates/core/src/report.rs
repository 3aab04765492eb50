//! Structured pass/fail reports with concrete witnesses.

use std::fmt;

/// A concrete counterexample: the tuple that broke a condition, the two sides
/// of the comparison when there is one, and a human-readable note.
#[derive(Debug, Clone, PartialEq)]
pub struct Witness {
    pub point: Vec<f64>,
    pub sides: Option<(f64, f64)>,
    pub detail: String,
}

impl Witness {
    pub fn new(point: Vec<f64>, sides: Option<(f64, f64)>, detail: impl Into<String>) -> Self {
        Witness {
            point,
            sides,
            detail: detail.into(),
        }
    }

    pub fn at(point: Vec<f64>) -> Self {
        Witness::new(point, None, "")
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.point.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", fmt_num(*p))?;
        }
        write!(f, ")")?;
        if let Some((l, r)) = self.sides {
            write!(f, " lhs={} rhs={}", fmt_num(l), fmt_num(r))?;
        }
        if !self.detail.is_empty() {
            write!(f, " [{}]", self.detail)?;
        }
        Ok(())
    }
}

/// Compact number formatting, roughly `%.12g`.
pub fn fmt_num(v: f64) -> String {
    if v.is_nan() {
        return "nan".into();
    }
    if v.is_infinite() {
        return if v > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if v == 0.0 {
        return "0".into();
    }
    let exp = v.abs().log10().floor() as i32;
    if !(-5..12).contains(&exp) {
        let s = format!("{:.11e}", v);
        let (mant, e) = s.split_once('e').unwrap_or((&s, "0"));
        let mant = trim_zeros(mant);
        let e: i32 = e.parse().unwrap_or(0);
        return format!("{mant}e{}{:02}", if e < 0 { '-' } else { '+' }, e.abs());
    }
    let decimals = (11 - exp).max(0) as usize;
    trim_zeros(&format!("{:.*}", decimals, v)).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// How much of the tuple space a condition examined.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coverage {
    Exhaustive { tuples: u64 },
    Sampled { seed: u64, samples: u64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConditionResult {
    pub name: String,
    pub passed: bool,
    pub witness: Option<Witness>,
    pub coverage: Coverage,
}

impl ConditionResult {
    pub fn pass(name: impl Into<String>, tuples: u64) -> Self {
        ConditionResult {
            name: name.into(),
            passed: true,
            witness: None,
            coverage: Coverage::Exhaustive { tuples },
        }
    }

    pub fn fail(name: impl Into<String>, tuples: u64, witness: Witness) -> Self {
        ConditionResult {
            name: name.into(),
            passed: false,
            witness: Some(witness),
            coverage: Coverage::Exhaustive { tuples },
        }
    }

    /// Pass when `witness` is `None`.
    pub fn from_search(name: impl Into<String>, tuples: u64, witness: Option<Witness>) -> Self {
        ConditionResult {
            name: name.into(),
            passed: witness.is_none(),
            witness,
            coverage: Coverage::Exhaustive { tuples },
        }
    }

    pub fn with_coverage(mut self, coverage: Coverage) -> Self {
        self.coverage = coverage;
        self
    }
}

/// A fact that is reported alongside a verdict but does not decide it.
#[derive(Debug, Clone, PartialEq)]
pub struct Observation {
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct CheckReport {
    pub subject: String,
    pub conditions: Vec<ConditionResult>,
    pub observations: Vec<Observation>,
}

impl CheckReport {
    pub fn new(subject: impl Into<String>) -> Self {
        CheckReport {
            subject: subject.into(),
            ..Default::default()
        }
    }

    pub fn push(&mut self, condition: ConditionResult) -> &mut Self {
        self.conditions.push(condition);
        self
    }

    pub fn observe(&mut self, name: impl Into<String>, holds: bool, detail: impl Into<String>) {
        self.observations.push(Observation {
            name: name.into(),
            holds,
            detail: detail.into(),
        });
    }

    pub fn passed(&self) -> bool {
        self.conditions.iter().all(|c| c.passed)
    }

    pub fn condition(&self, name: &str) -> Option<&ConditionResult> {
        self.conditions.iter().find(|c| c.name == name)
    }

    pub fn observation(&self, name: &str) -> Option<&Observation> {
        self.observations.iter().find(|o| o.name == name)
    }

    pub fn failing(&self) -> impl Iterator<Item = &ConditionResult> {
        self.conditions.iter().filter(|c| !c.passed)
    }

    /// Witness of the first failing condition.
    pub fn first_witness(&self) -> Option<&Witness> {
        self.failing().find_map(|c| c.witness.as_ref())
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}: {}",
            self.subject,
            if self.passed() { "PASS" } else { "FAIL" }
        )?;
        for c in &self.conditions {
            match &c.witness {
                Some(w) if !c.passed => writeln!(f, "  FAIL {} @ {}", c.name, w)?,
                _ => writeln!(f, "  {} {}", if c.passed { "PASS" } else { "FAIL" }, c.name)?,
            }
        }
        for o in &self.observations {
            writeln!(f, "  note {}: {} {}", o.name, o.holds, o.detail)?;
        }
        Ok(())
    }
}
