//! Finitely presented abelian groups `ℤ^g / im R`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use super::matrix::IntMatrix;
use super::snf::smith_normal_form;
use crate::error::{mismatch, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FPAbelianGroup {
    gens: usize,
    /// `gens` rows; each column is a relation. Zero columns are dropped.
    relations: IntMatrix,
    rank: usize,
    torsion: Vec<BigInt>,
}

impl fmt::Debug for FPAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} <{} gens, {} rels>", self, self.gens, self.relations.cols())
    }
}

impl fmt::Display for FPAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

impl FPAbelianGroup {
    pub fn new(gens: usize, relations: IntMatrix) -> Result<Self> {
        if relations.rows() != gens {
            return Err(mismatch(format!(
                "relation matrix has {} rows for {gens} generators",
                relations.rows()
            )));
        }
        let relations = relations.without_zero_columns();
        let snf = smith_normal_form(&relations);
        let torsion = snf.torsion();
        Ok(Self { gens, rank: gens - snf.rank, torsion, relations })
    }

    pub fn free(gens: usize) -> Self {
        Self { gens, relations: IntMatrix::zeros(gens, 0), rank: gens, torsion: Vec::new() }
    }

    pub fn zero() -> Self {
        Self::free(0)
    }

    /// `ℤ^rank ⊕ ⊕ ℤ/t`, one generator per summand.
    pub fn from_invariants(rank: usize, torsion: &[u64]) -> Result<Self> {
        let gens = rank + torsion.len();
        let mut rel = IntMatrix::zeros(gens, torsion.len());
        for (i, &t) in torsion.iter().enumerate() {
            rel.set(rank + i, i, BigInt::from(t));
        }
        Self::new(gens, rel)
    }

    pub fn gens(&self) -> usize {
        self.gens
    }

    pub fn relations(&self) -> &IntMatrix {
        &self.relations
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Torsion coefficients `t_1 | t_2 | …`, all at least 2.
    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn torsion_u64(&self) -> Vec<u64> {
        self.torsion.iter().map(|t| t.to_u64().expect("torsion coefficient fits in u64")).collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    /// Same isomorphism type.
    pub fn isomorphic(&self, other: &Self) -> bool {
        self.rank == other.rank && self.torsion == other.torsion
    }

    /// Whether the invariants agree with a fresh reduction of the relations.
    pub fn normal_form_consistent(&self) -> bool {
        let snf = smith_normal_form(&self.relations);
        let torsion: Vec<BigInt> = snf.diagonal().into_iter().filter(|x| !x.is_one()).collect();
        self.rank == self.gens - snf.rank
            && torsion == self.torsion
            && self.torsion.iter().all(|t| *t > BigInt::one())
            && self.torsion.windows(2).all(|w| (&w[1] % &w[0]).is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_forms() {
        assert_eq!(FPAbelianGroup::zero().to_string(), "0");
        assert_eq!(FPAbelianGroup::free(1).to_string(), "Z");
        assert_eq!(FPAbelianGroup::free(2).to_string(), "Z^2");
        assert_eq!(FPAbelianGroup::from_invariants(1, &[2]).unwrap().to_string(), "Z + Z/2");
    }

    #[test]
    fn presentation_invariants() {
        // <a, b | 2a, 3b> = Z/6
        let g = FPAbelianGroup::new(2, IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]])).unwrap();
        assert_eq!(g.rank(), 0);
        assert_eq!(g.torsion_u64(), vec![6]);
        assert!(g.normal_form_consistent());
        // <a | a> = 0
        assert!(FPAbelianGroup::new(1, IntMatrix::from_rows(&[vec![1]])).unwrap().is_trivial());
    }
}
