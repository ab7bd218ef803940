use std::fmt;

use crate::linalg::{is_zero_vector, Vector};

/// One failed instance of an identity: which identity, at which basis tuple,
/// and the exact difference `lhs - rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Violation {
    pub axiom: String,
    pub witness: Vec<usize>,
    pub discrepancy: Vector,
}

/// Failures of a check, sorted by `(axiom, witness)`.
///
/// An empty report means every checked identity holds.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ViolationReport {
    violations: Vec<Violation>,
}

impl ViolationReport {
    pub fn new(mut violations: Vec<Violation>) -> Self {
        violations.retain(|v| !is_zero_vector(&v.discrepancy));
        violations.sort();
        violations.dedup();
        ViolationReport { violations }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn len(&self) -> usize {
        self.violations.len()
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    pub fn into_violations(self) -> Vec<Violation> {
        self.violations
    }

    /// Concatenates reports, keeping the canonical order.
    pub fn merge(reports: impl IntoIterator<Item = ViolationReport>) -> Self {
        Self::new(reports.into_iter().flat_map(|r| r.violations).collect())
    }

    /// Prefixes every axiom id with `prefix`.
    pub fn prefixed(self, prefix: &str) -> Self {
        Self::new(
            self.violations
                .into_iter()
                .map(|mut v| {
                    v.axiom = format!("{prefix}{}", v.axiom);
                    v
                })
                .collect(),
        )
    }

    pub fn filter(self, mut keep: impl FnMut(&Violation) -> bool) -> Self {
        ViolationReport {
            violations: self.violations.into_iter().filter(|v| keep(v)).collect(),
        }
    }

    pub fn has_witness(&self, axiom_prefix: &str, witness: &[usize]) -> bool {
        self.violations
            .iter()
            .any(|v| v.axiom.starts_with(axiom_prefix) && v.witness == witness)
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self.witness.iter().map(ToString::to_string).collect();
        let d: Vec<String> = self.discrepancy.iter().map(ToString::to_string).collect();
        write!(f, "{}\t({})\t[{}]", self.axiom, w.join(","), d.join(", "))
    }
}

impl fmt::Display for ViolationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.violations {
            writeln!(f, "{v}")?;
        }
        Ok(())
    }
}
