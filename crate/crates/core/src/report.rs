//! Named pass/fail checks with counterexample witnesses.

use std::fmt;

use crate::error::Result;
use crate::field::Field;
use crate::linmap::LinMap;

/// Where two sides of a checked identity first disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// A matrix entry: the input basis vector (domain multi-index), the output
    /// coordinate (codomain multi-index), and both sides' coefficients.
    Entry {
        domain: Vec<usize>,
        codomain: Vec<usize>,
        input: String,
        output: String,
        lhs: String,
        rhs: String,
    },
    Message(String),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Entry {
                domain,
                codomain,
                input,
                output,
                lhs,
                rhs,
            } => write!(
                f,
                "at input {input} {domain:?}, coefficient of {output} {codomain:?}: {lhs} ≠ {rhs}"
            ),
            Witness::Message(m) => write!(f, "{m}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(Witness),
    /// Not evaluated or not applicable, with the reason.
    Skipped(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub outcome: Outcome,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }

    pub fn failed(&self) -> bool {
        matches!(self.outcome, Outcome::Fail(_))
    }

    pub fn witness(&self) -> Option<&Witness> {
        match &self.outcome {
            Outcome::Fail(w) => Some(w),
            _ => None,
        }
    }
}

/// Ordered list of checks. Failures carry exactly one witness; passes carry none.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn checks(&self) -> &[Check] {
        &self.checks
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }

    /// No check failed. Skipped checks do not count as failures.
    pub fn all_passed(&self) -> bool {
        !self.checks.iter().any(Check::failed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.failed())
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// `true` iff the named check exists and passed.
    pub fn passed(&self, name: &str) -> bool {
        self.get(name).is_some_and(Check::passed)
    }

    /// `true` iff the named check exists and failed.
    pub fn failed(&self, name: &str) -> bool {
        self.get(name).is_some_and(Check::failed)
    }

    pub fn push(&mut self, name: impl Into<String>, outcome: Outcome) {
        self.checks.push(Check {
            name: name.into(),
            outcome,
        });
    }

    pub fn pass(&mut self, name: impl Into<String>) {
        self.push(name, Outcome::Pass);
    }

    pub fn fail(&mut self, name: impl Into<String>, message: impl Into<String>) {
        self.push(name, Outcome::Fail(Witness::Message(message.into())));
    }

    pub fn skip(&mut self, name: impl Into<String>, reason: impl Into<String>) {
        self.push(name, Outcome::Skipped(reason.into()));
    }

    /// Records a boolean condition with a message used as witness on failure.
    pub fn condition(
        &mut self,
        name: impl Into<String>,
        ok: bool,
        message: impl FnOnce() -> String,
    ) {
        if ok {
            self.pass(name);
        } else {
            self.fail(name, message());
        }
    }

    /// Checks `lhs = rhs` entrywise, recording the first differing entry on failure.
    pub fn equal<K: Field>(
        &mut self,
        name: impl Into<String>,
        lhs: &LinMap<K>,
        rhs: &LinMap<K>,
    ) -> Result<bool> {
        let outcome = map_outcome(lhs, rhs)?;
        let ok = outcome == Outcome::Pass;
        self.push(name, outcome);
        Ok(ok)
    }

    /// Checks several identities under one name; the first failing pair is the witness.
    pub fn all_equal<K: Field>(
        &mut self,
        name: impl Into<String>,
        pairs: &[(&LinMap<K>, &LinMap<K>)],
    ) -> Result<bool> {
        for (lhs, rhs) in pairs {
            let outcome = map_outcome(lhs, rhs)?;
            if outcome != Outcome::Pass {
                self.push(name, outcome);
                return Ok(false);
            }
        }
        self.pass(name);
        Ok(true)
    }

    /// Appends every check of `other`, prefixing names with `prefix`.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for c in other.checks {
            self.checks.push(Check {
                name: format!("{prefix}{}", c.name),
                outcome: c.outcome,
            });
        }
    }

    /// Turns every check of `other` into a skip with the given reason.
    pub fn absorb_skipped(&mut self, prefix: &str, names: &[&str], reason: &str) {
        for n in names {
            self.skip(format!("{prefix}{n}"), reason);
        }
    }
}

/// Outcome of comparing two maps entrywise.
pub fn map_outcome<K: Field>(lhs: &LinMap<K>, rhs: &LinMap<K>) -> Result<Outcome> {
    Ok(match lhs.first_difference(rhs)? {
        None => Outcome::Pass,
        Some(d) => Outcome::Fail(Witness::Entry {
            domain: lhs.domain().multi_index(d.col),
            codomain: lhs.codomain().multi_index(d.row),
            input: lhs.domain().label(d.col),
            output: lhs.codomain().label(d.row),
            lhs: d.lhs.to_string(),
            rhs: d.rhs.to_string(),
        }),
    })
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match &c.outcome {
                Outcome::Pass => writeln!(f, "PASS {}", c.name)?,
                Outcome::Fail(w) => writeln!(f, "FAIL {}: {w}", c.name)?,
                Outcome::Skipped(r) => writeln!(f, "SKIP {}: {r}", c.name)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
    use crate::space::Space;

    #[test]
    fn equal_records_witness() {
        let v = Space::new("V", vec!["a".into(), "b".into()]);
        let id = LinMap::<Rational>::identity(&v);
        let bad = id.with_entry(1, 1, Rational::from_i64(0)).unwrap();
        let mut r = Report::new();
        assert!(r.equal("same", &id, &id).unwrap());
        assert!(!r.equal("different", &id, &bad).unwrap());
        assert!(r.passed("same"));
        assert!(r.failed("different"));
        assert!(!r.all_passed());
        match r.get("different").unwrap().witness().unwrap() {
            Witness::Entry {
                input, lhs, rhs, ..
            } => {
                assert_eq!(input, "b");
                assert_eq!((lhs.as_str(), rhs.as_str()), ("1", "0"));
            }
            other => panic!("unexpected witness {other:?}"),
        }
        assert_eq!(r.failures().count(), 1);
    }

    #[test]
    fn skipped_checks_do_not_fail() {
        let mut r = Report::new();
        r.skip("later", "not applicable");
        assert!(r.all_passed());
        assert!(!r.passed("later"));
    }
}
