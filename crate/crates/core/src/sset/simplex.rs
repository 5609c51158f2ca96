//! Simplices in Eilenberg–Zilber normal form and monotone-map arithmetic.
//!
//! A simplex of dimension `k` is `σ* x` for a nondegenerate cell `x` of
//! dimension `m` and a monotone surjection `σ: [k] -> [m]`. The surjection is
//! stored as its value table; the degeneracy word `s_{j1} … s_{jr}`
//! (`j1 > … > jr`) is the set `{t : σ(t) = σ(t + 1)}` listed in decreasing order.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{structural, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex {
    /// Dimension of the underlying nondegenerate cell.
    pub base: usize,
    /// Index of that cell among the nondegenerate cells of dimension `base`.
    pub id: usize,
    /// `σ: [dim] -> [base]`, monotone and surjective.
    pub surj: Vec<usize>,
}

impl Simplex {
    pub fn nondegenerate(base: usize, id: usize) -> Self {
        Self { base, id, surj: (0..=base).collect() }
    }

    pub fn dim(&self) -> usize {
        self.surj.len() - 1
    }

    pub fn is_degenerate(&self) -> bool {
        self.dim() != self.base
    }

    pub fn word(&self) -> Degeneracy {
        Degeneracy::from_surjection(&self.surj)
    }

    /// Builds `s_word (cell)` from a degeneracy word.
    pub fn from_word(word: &Degeneracy, base: usize, id: usize) -> Result<Self> {
        Ok(Self { base, id, surj: word.to_surjection(base)? })
    }

    /// `σ* self` for a monotone surjection `σ` onto `[self.dim()]`.
    pub fn degenerate(&self, sigma: &[usize]) -> Self {
        Self { base: self.base, id: self.id, surj: compose(&self.surj, sigma) }
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}:{}", self.word(), self.base, self.id)
    }
}

/// A degeneracy word in normal form: strictly decreasing indices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default, Serialize, Deserialize)]
pub struct Degeneracy(pub Vec<usize>);

impl Degeneracy {
    pub fn identity() -> Self {
        Self(Vec::new())
    }

    pub fn new(indices: Vec<usize>) -> Result<Self> {
        if indices.windows(2).any(|w| w[0] <= w[1]) {
            return Err(structural(format!("degeneracy word {indices:?} is not strictly decreasing")));
        }
        Ok(Self(indices))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn from_surjection(sigma: &[usize]) -> Self {
        let mut j: Vec<usize> = (0..sigma.len().saturating_sub(1))
            .filter(|&t| sigma[t] == sigma[t + 1])
            .collect();
        j.reverse();
        Self(j)
    }

    /// The surjection `[base + len] -> [base]` of this word applied to a `base`-cell.
    pub fn to_surjection(&self, base: usize) -> Result<Vec<usize>> {
        let k = base + self.len();
        if self.0.first().is_some_and(|&j| j >= k) {
            return Err(structural(format!("degeneracy index {} too large for dimension {k}", self.0[0])));
        }
        let mut sigma = Vec::with_capacity(k + 1);
        let mut value = 0;
        for t in 0..=k {
            sigma.push(value);
            if t < k && !self.0.contains(&t) {
                value += 1;
            }
        }
        Ok(sigma)
    }
}

impl fmt::Display for Degeneracy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in &self.0 {
            write!(f, "s{j}")?;
        }
        Ok(())
    }
}

/// `g ∘ f` for maps given by value tables.
pub fn compose(g: &[usize], f: &[usize]) -> Vec<usize> {
    f.iter().map(|&i| g[i]).collect()
}

/// Epi-mono factorization `φ = ι ∘ τ` of a monotone map.
pub fn epi_mono(phi: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut iota: Vec<usize> = Vec::with_capacity(phi.len());
    let mut tau = Vec::with_capacity(phi.len());
    for &v in phi {
        if iota.last() != Some(&v) {
            iota.push(v);
        }
        tau.push(iota.len() - 1);
    }
    (iota, tau)
}

/// The coface `δ_i: [k - 1] -> [k]` skipping `i`.
pub fn coface(k: usize, i: usize) -> Vec<usize> {
    (0..k).map(|t| if t < i { t } else { t + 1 }).collect()
}

/// All monotone surjections `[k] -> [m]`, ordered lexicographically by
/// their degeneracy index sets (increasing).
pub fn surjections(k: usize, m: usize) -> Vec<Vec<usize>> {
    if m > k {
        return Vec::new();
    }
    subsets(k, k - m)
        .into_iter()
        .map(|j| surjection_with_repeats(k, &j))
        .collect()
}

/// The surjection out of `[k]` identifying `t` and `t + 1` exactly for `t ∈ j`.
pub fn surjection_with_repeats(k: usize, j: &[usize]) -> Vec<usize> {
    let mut sigma = Vec::with_capacity(k + 1);
    let mut value = 0;
    for t in 0..=k {
        sigma.push(value);
        if t < k && !j.contains(&t) {
            value += 1;
        }
    }
    sigma
}

/// `size`-element subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(size);
    fn go(start: usize, n: usize, size: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == size {
            out.push(current.clone());
            return;
        }
        for v in start..n {
            if n - v < size - current.len() {
                break;
            }
            current.push(v);
            go(v + 1, n, size, current, out);
            current.pop();
        }
    }
    go(0, n, size, &mut current, &mut out);
    out
}

/// Repeat set `{t : σ(t) = σ(t + 1)}` in increasing order.
pub fn repeats(sigma: &[usize]) -> Vec<usize> {
    (0..sigma.len().saturating_sub(1))
        .filter(|&t| sigma[t] == sigma[t + 1])
        .collect()
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut r: usize = 1;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_round_trip() {
        let w = Degeneracy::new(vec![3, 1]).unwrap();
        let sigma = w.to_surjection(2).unwrap();
        assert_eq!(sigma, vec![0, 1, 1, 2, 2]);
        assert_eq!(Degeneracy::from_surjection(&sigma), w);
        assert!(Degeneracy::new(vec![1, 1]).is_err());
        assert!(Degeneracy::new(vec![5]).unwrap().to_surjection(1).is_err());
    }

    #[test]
    fn surjection_counts() {
        for k in 0..6 {
            for m in 0..=k {
                assert_eq!(surjections(k, m).len(), binomial(k, m));
            }
        }
        assert!(surjections(1, 2).is_empty());
    }

    #[test]
    fn factorization() {
        let (iota, tau) = epi_mono(&[1, 1, 3]);
        assert_eq!(iota, vec![1, 3]);
        assert_eq!(tau, vec![0, 0, 1]);
        assert_eq!(compose(&iota, &tau), vec![1, 1, 3]);
    }
}
