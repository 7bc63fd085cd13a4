//! Pass/fail reports for axiom checks.

use std::fmt;

use crate::linalg::{Field, Matrix};

/// Outcome of a single identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub name: String,
    pub passed: bool,
    /// Description of the first failing tensor index.
    pub witness: Option<String>,
}

/// A list of axiom checks plus informational properties that do not affect
/// the verdict (for example commutativity of a Frobenius algebra).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
    pub properties: Vec<(String, bool)>,
}

impl AxiomReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn property(&self, name: &str) -> Option<bool> {
        self.properties.iter().find(|(n, _)| n == name).map(|(_, v)| *v)
    }

    pub fn push(&mut self, name: impl Into<String>, witness: Option<String>) {
        self.checks.push(AxiomCheck { name: name.into(), passed: witness.is_none(), witness });
    }

    pub fn push_property(&mut self, name: impl Into<String>, value: bool) {
        self.properties.push((name.into(), value));
    }

    /// Appends all checks of `other`, prefixing their names.
    pub fn extend_prefixed(&mut self, prefix: &str, other: AxiomReport) {
        for mut c in other.checks {
            c.name = format!("{prefix}.{}", c.name);
            self.checks.push(c);
        }
        for (n, v) in other.properties {
            self.properties.push((format!("{prefix}.{n}"), v));
        }
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match &c.witness {
                None => writeln!(f, "{:<28} pass", c.name)?,
                Some(w) => writeln!(f, "{:<28} FAIL {w}", c.name)?,
            }
        }
        for (n, v) in &self.properties {
            writeln!(f, "{n:<28} {v}")?;
        }
        Ok(())
    }
}

/// Labels of a tensor basis: one label list per factor, first factor most significant.
#[derive(Clone, Debug)]
pub struct TensorLabels<'a> {
    pub factors: Vec<&'a [String]>,
}

impl<'a> TensorLabels<'a> {
    pub fn new(factors: Vec<&'a [String]>) -> Self {
        Self { factors }
    }

    pub fn dim(&self) -> usize {
        self.factors.iter().map(|f| f.len()).product()
    }

    pub fn label(&self, mut index: usize) -> String {
        if self.factors.is_empty() {
            return "1".into();
        }
        let mut parts = Vec::with_capacity(self.factors.len());
        for f in self.factors.iter().rev() {
            parts.push(f[index % f.len()].as_str());
            index /= f.len();
        }
        parts.reverse();
        parts.join("⊗")
    }

    /// Formats a coordinate vector in this basis, e.g. `2*y + 1⊗x`.
    pub fn format_vector<F: Field>(&self, field: &F, v: &[F::Elem]) -> String {
        let terms: Vec<String> = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !field.is_zero(c))
            .map(|(i, c)| {
                if field.is_one(c) {
                    self.label(i)
                } else {
                    format!("{}*{}", field.format(c), self.label(i))
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

/// Compares two maps with the same shape; on mismatch describes the first
/// input basis tensor on which they differ.
pub fn compare_maps<F: Field>(
    lhs: &Matrix<F>,
    rhs: &Matrix<F>,
    input: &TensorLabels<'_>,
    output: &TensorLabels<'_>,
) -> Option<String> {
    if (lhs.rows(), lhs.cols()) != (rhs.rows(), rhs.cols()) {
        return Some(format!(
            "shape {}x{} vs {}x{}",
            lhs.rows(),
            lhs.cols(),
            rhs.rows(),
            rhs.cols()
        ));
    }
    let f = lhs.field();
    for c in 0..lhs.cols() {
        let a = lhs.column(c);
        let b = rhs.column(c);
        if a != b {
            return Some(format!(
                "at {}: lhs = {}, rhs = {}",
                input.label(c),
                output.format_vector(f, &a),
                output.format_vector(f, &b)
            ));
        }
    }
    None
}
