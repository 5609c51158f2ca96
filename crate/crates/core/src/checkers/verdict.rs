use serde::Serialize;

/// Marks a verdict that decides homology isomorphism in place of weak equivalence.
pub const HOMOLOGY_SURROGATE: &str = "homology-surrogate";
/// Marks a verdict about a universally quantified property tested on samples.
pub const SAMPLED_SURROGATE: &str = "sampled-surrogate";

/// A labelled piece of evidence attached to a verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub label: String,
    pub detail: String,
}

/// Outcome of one check. Failing verdicts carry at least one witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub claim: String,
    pub pass: bool,
    pub flags: Vec<String>,
    pub witnesses: Vec<Witness>,
}

impl Verdict {
    pub fn new(claim: impl Into<String>, pass: bool) -> Self {
        Self { claim: claim.into(), pass, flags: Vec::new(), witnesses: Vec::new() }
    }

    pub fn flag(mut self, flag: &str) -> Self {
        if !self.flags.iter().any(|f| f == flag) {
            self.flags.push(flag.to_string());
        }
        self
    }

    pub fn witness(mut self, label: impl Into<String>, detail: impl Into<String>) -> Self {
        self.witnesses.push(Witness { label: label.into(), detail: detail.into() });
        self
    }

    pub fn detail(&self, label: &str) -> Option<&str> {
        self.witnesses.iter().find(|w| w.label == label).map(|w| w.detail.as_str())
    }
}
