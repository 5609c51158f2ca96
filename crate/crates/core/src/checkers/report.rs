//! Reports: one entry per checked instance.

use serde::Serialize;
use serde_json::Value;

use super::verdict::Verdict;

#[derive(Debug, Clone, Serialize)]
pub struct Instance {
    /// Sort key; reports list instances in key order.
    pub key: String,
    pub inputs: Value,
    pub verdicts: Vec<Verdict>,
    pub millis: String,
}

impl Instance {
    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub suite: String,
    pub seed: String,
    pub instances: Vec<Instance>,
}

impl CheckReport {
    pub fn new(suite: &str, seed: u64) -> Self {
        Self { suite: suite.into(), seed: seed.to_string(), instances: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.instances.iter().all(Instance::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = (&Instance, &Verdict)> {
        self.instances.iter().flat_map(|i| i.verdicts.iter().filter(|v| !v.pass).map(move |v| (i, v)))
    }

    pub fn sort(&mut self) {
        self.instances.sort_by(|a, b| a.key.cmp(&b.key));
    }
}
