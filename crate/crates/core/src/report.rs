//! Verification reports shared by the birig and plethory suites.

use std::fmt;

use serde::{Deserialize, Serialize};

/// The first input on which a law failed, with both sides rendered in the
/// Schur basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub input: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawResult {
    pub law: String,
    pub cases: usize,
    pub counterexample: Option<Counterexample>,
}

impl LawResult {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub max_degree: usize,
    pub laws: Vec<LawResult>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.laws.iter().all(LawResult::passed)
    }

    pub fn law(&self, name: &str) -> Option<&LawResult> {
        self.laws.iter().find(|l| l.law == name)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for law in &self.laws {
            match &law.counterexample {
                None => writeln!(f, "PASS {} ({} cases)", law.law, law.cases)?,
                Some(cx) => {
                    writeln!(f, "FAIL {} at {}", law.law, cx.input)?;
                    writeln!(f, "  lhs = {}", cx.lhs)?;
                    writeln!(f, "  rhs = {}", cx.rhs)?;
                }
            }
        }
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{verdict} suite {} (max degree {})", self.suite, self.max_degree)
    }
}

/// One check on one input, as produced by a verifier worker.
pub(crate) struct Outcome {
    pub(crate) law: &'static str,
    pub(crate) failure: Option<Counterexample>,
}

impl Outcome {
    pub(crate) fn new<T: PartialEq>(
        law: &'static str,
        lhs: &T,
        rhs: &T,
        render: impl FnOnce() -> Counterexample,
    ) -> Self {
        Outcome {
            law,
            failure: (lhs != rhs).then(render),
        }
    }
}

/// Folds per-input outcomes, supplied in canonical input order, into one
/// result per law, keeping the first counterexample of each.
pub(crate) fn aggregate(
    suite: &str,
    max_degree: usize,
    law_order: &[&'static str],
    outcomes: impl IntoIterator<Item = Outcome>,
) -> Report {
    let mut laws: Vec<LawResult> = law_order
        .iter()
        .map(|&law| LawResult {
            law: law.to_string(),
            cases: 0,
            counterexample: None,
        })
        .collect();
    for o in outcomes {
        let entry = laws
            .iter_mut()
            .find(|l| l.law == o.law)
            .expect("outcome for a registered law");
        entry.cases += 1;
        if entry.counterexample.is_none() {
            entry.counterexample = o.failure;
        }
    }
    Report {
        suite: suite.to_string(),
        max_degree,
        laws,
    }
}
