//! Multi-indices `(n_1, …, n_e)` and the groups `Σ_{n_1} × … × Σ_{n_e}`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::engine::FinGroup;
use crate::error::{invalid, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct MultiIndex(Vec<usize>);

impl MultiIndex {
    /// Rejects the empty sequence and the all-zero index.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(invalid("multi-index of length 0"));
        }
        if parts.iter().all(|&p| p == 0) {
            return Err(invalid("multi-index with all entries zero"));
        }
        Ok(Self(parts))
    }

    /// Like [`MultiIndex::new`] but allows the all-zero index, as needed for
    /// the lower end of `0 ≤ k ≤ n`.
    pub fn with_zeros(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(invalid("multi-index of length 0"));
        }
        Ok(Self(parts))
    }

    pub fn single(n: usize) -> Result<Self> {
        Self::new(vec![n])
    }

    /// Parses a comma-separated list such as `2,1`.
    pub fn parse(text: &str) -> Result<Self> {
        let parts = text
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| invalid(format!("bad multi-index entry `{p}`"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&p| p == 0)
    }

    /// Componentwise `self ≤ other`.
    pub fn leq(&self, other: &Self) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Componentwise difference; `None` unless `other ≤ self`.
    pub fn minus(&self, other: &Self) -> Option<Self> {
        other.leq(self).then(|| Self(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    /// Block of each position after expanding block `i` into `n_i` positions.
    pub fn blocks(&self) -> Vec<usize> {
        self.0.iter().enumerate().flat_map(|(i, &n)| std::iter::repeat_n(i, n)).collect()
    }

    /// `∏ (n_i + 1)`.
    pub fn box_count(&self) -> usize {
        self.0.iter().map(|n| n + 1).product()
    }

    /// All `k` with `0 ≤ k ≤ self`, in lexicographic order.
    pub fn below(&self) -> Vec<MultiIndex> {
        let mut out = vec![Vec::new()];
        for &n in &self.0 {
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<usize>| {
                    (0..=n).map(move |k| {
                        let mut p = prefix.clone();
                        p.push(k);
                        p
                    })
                })
                .collect();
        }
        out.into_iter().map(Self).collect()
    }

    /// `Σ_{n_1} × … × Σ_{n_e}` acting blockwise on `0..total`.
    pub fn group(&self) -> FinGroup {
        let factors: Vec<FinGroup> = self
            .0
            .iter()
            .map(|&n| if n == 0 { FinGroup::trivial() } else { FinGroup::symmetric_any(n) })
            .collect();
        FinGroup::product(&factors).expect("nonempty product")
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation_and_parsing() {
        assert!(MultiIndex::new(vec![]).is_err());
        assert!(MultiIndex::new(vec![0, 0]).is_err());
        assert_eq!(MultiIndex::parse("2, 1").unwrap().parts(), &[2, 1]);
        assert!(MultiIndex::parse("2,x").is_err());
    }

    #[test]
    fn groups_and_boxes() {
        let n = MultiIndex::new(vec![2, 1]).unwrap();
        assert_eq!(n.group().order(), 2);
        assert_eq!(n.group().degree(), 3);
        assert_eq!(n.blocks(), vec![0, 0, 1]);
        assert_eq!(n.box_count(), 6);
        assert_eq!(n.below().len(), 6);
        assert_eq!(MultiIndex::new(vec![0, 3]).unwrap().group().order(), 6);
    }
}
