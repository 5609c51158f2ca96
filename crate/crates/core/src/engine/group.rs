//! Finite groups stored by full composition table.
//!
//! Every group carries a faithful permutation representation of some degree.
//! For `Σn` that is the defining action on `0..n`; a product `∏ Σ_{n_i}` acts
//! blockwise on `0..Σ n_i`. The place-permutation actions on tensor powers are
//! read off this representation.

use std::collections::HashMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, structural, Result};

/// A permutation of `0..len`, `p[i]` being the image of `i`.
pub type Perm = Vec<usize>;

fn compose_perm(g: &[usize], h: &[usize]) -> Perm {
    h.iter().map(|&i| g[i]).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FinGroup {
    degree: usize,
    /// Elements in lexicographic order of their permutations; index 0 is the identity.
    perms: Vec<Perm>,
    table: Vec<Vec<usize>>,
    inverse: Vec<usize>,
}

impl FinGroup {
    /// Builds the group from the full element list. The list must be closed
    /// under composition; the axioms are checked by table scan.
    pub fn from_permutations(degree: usize, mut perms: Vec<Perm>) -> Result<Self> {
        if perms.is_empty() {
            return Err(invalid("a group has at least one element"));
        }
        for p in &perms {
            if p.len() != degree {
                return Err(structural("permutation of the wrong degree"));
            }
            let mut seen = vec![false; degree];
            for &i in p {
                if i >= degree || std::mem::replace(&mut seen[i], true) {
                    return Err(structural(format!("{p:?} is not a permutation")));
                }
            }
        }
        perms.sort();
        perms.dedup();
        let index: HashMap<&Perm, usize> = perms.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let n = perms.len();
        let mut table = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                let c = compose_perm(&perms[a], &perms[b]);
                table[a][b] = *index
                    .get(&c)
                    .ok_or_else(|| structural("element list is not closed under composition"))?;
            }
        }
        let identity: Perm = (0..degree).collect();
        if perms[0] != identity {
            return Err(structural("element list lacks the identity"));
        }
        let mut inverse = vec![usize::MAX; n];
        for a in 0..n {
            inverse[a] = (0..n)
                .find(|&b| table[a][b] == 0)
                .ok_or_else(|| structural("element without inverse"))?;
        }
        let group = Self { degree, perms, table, inverse };
        group.check_axioms()?;
        Ok(group)
    }

    /// Re-verifies closure, associativity, identity and inverses from the table.
    pub fn check_axioms(&self) -> Result<()> {
        let n = self.order();
        for a in 0..n {
            if self.table[0][a] != a || self.table[a][0] != a {
                return Err(structural("identity law fails"));
            }
            if self.table[a][self.inverse[a]] != 0 || self.table[self.inverse[a]][a] != 0 {
                return Err(structural("inverse law fails"));
            }
            for b in 0..n {
                if self.table[a][b] >= n {
                    return Err(structural("table not closed"));
                }
                for c in 0..n {
                    if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]] {
                        return Err(structural("associativity fails"));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn trivial() -> Self {
        Self::from_permutations(0, vec![vec![]]).expect("trivial group")
    }

    /// `Σn` acting on `0..n`. `n = 0` is rejected: pushout powers start at 1.
    pub fn symmetric(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(invalid("symmetric group of degree 0 is excluded"));
        }
        Ok(Self::symmetric_any(n))
    }

    pub(crate) fn symmetric_any(n: usize) -> Self {
        let mut perms = Vec::new();
        let mut p: Perm = (0..n).collect();
        loop {
            perms.push(p.clone());
            if !next_permutation(&mut p) {
                break;
            }
        }
        Self::from_permutations(n, perms).expect("symmetric group")
    }

    /// Direct product acting blockwise; elements in lexicographic order.
    pub fn product(groups: &[FinGroup]) -> Result<Self> {
        if groups.is_empty() {
            return Err(invalid("empty group product"));
        }
        let degree = groups.iter().map(|g| g.degree).sum();
        let mut perms: Vec<Perm> = vec![vec![]];
        let mut offset = 0;
        for g in groups {
            let mut next = Vec::with_capacity(perms.len() * g.order());
            for prefix in &perms {
                for q in &g.perms {
                    let mut p = prefix.clone();
                    p.extend(q.iter().map(|&i| i + offset));
                    next.push(p);
                }
            }
            perms = next;
            offset += g.degree;
        }
        Self::from_permutations(degree, perms)
    }

    pub fn order(&self) -> usize {
        self.perms.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn perm(&self, a: usize) -> &Perm {
        &self.perms[a]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn index_of(&self, p: &[usize]) -> Option<usize> {
        self.perms.binary_search_by(|q| q.as_slice().cmp(p)).ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    /// The subgroup generated by the given elements.
    pub fn generated(&self, gens: &[usize]) -> Result<FinGroup> {
        let mut members = vec![self.identity()];
        let mut seen = vec![false; self.order()];
        seen[self.identity()] = true;
        let mut i = 0;
        while i < members.len() {
            let a = members[i];
            for &g in gens {
                let b = self.mul(a, g);
                if !std::mem::replace(&mut seen[b], true) {
                    members.push(b);
                }
            }
            i += 1;
        }
        FinGroup::from_permutations(self.degree, members.iter().map(|&a| self.perm(a).clone()).collect())
    }

    /// Subgroups generated by at most two elements, without repeats. For
    /// groups of order at most 6 these are all subgroups.
    pub fn subgroups(&self) -> Vec<FinGroup> {
        let mut found: Vec<FinGroup> = Vec::new();
        for a in self.elements() {
            for b in a..self.order() {
                let h = self.generated(&[a, b]).expect("closure of a subset of a group");
                if !found.contains(&h) {
                    found.push(h);
                }
            }
        }
        found.sort_by_key(|h| (h.order(), h.perms.clone()));
        found
    }
}

/// Advances `p` to the next permutation in lexicographic order.
fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// `Σn`; see [`FinGroup::symmetric`].
pub fn symmetric_group(n: usize) -> Result<FinGroup> {
    FinGroup::symmetric(n)
}

pub fn group_product(groups: &[FinGroup]) -> Result<FinGroup> {
    FinGroup::product(groups)
}

/// A group homomorphism given by its element table.
#[derive(Debug, Clone)]
pub struct Homomorphism {
    pub source: Arc<FinGroup>,
    pub target: Arc<FinGroup>,
    pub map: Vec<usize>,
}

impl Homomorphism {
    pub fn new(source: Arc<FinGroup>, target: Arc<FinGroup>, map: Vec<usize>) -> Result<Self> {
        if map.len() != source.order() || map.iter().any(|&m| m >= target.order()) {
            return Err(structural("homomorphism table has the wrong shape"));
        }
        for a in source.elements() {
            for b in source.elements() {
                if map[source.mul(a, b)] != target.mul(map[a], map[b]) {
                    return Err(structural(format!(
                        "map is not a homomorphism at elements ({a}, {b})"
                    )));
                }
            }
        }
        Ok(Self { source, target, map })
    }

    /// Embedding of a group whose permutation representation is literally a
    /// subset of the target's (same degree).
    pub fn by_permutations(source: Arc<FinGroup>, target: Arc<FinGroup>) -> Result<Self> {
        if source.degree() != target.degree() {
            return Err(structural("subgroup permutations have a different degree"));
        }
        let map = source
            .elements()
            .map(|a| {
                target
                    .index_of(source.perm(a))
                    .ok_or_else(|| structural("permutation not in the target group"))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(source, target, map)
    }

    pub fn identity(g: Arc<FinGroup>) -> Self {
        let map = g.elements().collect();
        Self { source: g.clone(), target: g, map }
    }

    pub fn trivial_into(target: Arc<FinGroup>) -> Self {
        Self { source: Arc::new(FinGroup::trivial()), target, map: vec![0] }
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target.order()];
        self.map.iter().all(|&m| !std::mem::replace(&mut seen[m], true))
    }

    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    /// Left cosets `g·H` of the image, enumerated by scanning `G` in element
    /// order; each representative is the least element of its coset.
    pub fn left_cosets(&self) -> Vec<Coset> {
        let g = &self.target;
        let mut assigned = vec![false; g.order()];
        let mut cosets = Vec::new();
        for a in g.elements() {
            if assigned[a] {
                continue;
            }
            let mut members: Vec<usize> = self.map.iter().map(|&h| g.mul(a, h)).collect();
            members.sort_unstable();
            members.dedup();
            for &m in &members {
                assigned[m] = true;
            }
            cosets.push(Coset { representative: a, members });
        }
        cosets
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coset {
    pub representative: usize,
    pub members: Vec<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subgroups_of_small_symmetric_groups() {
        // S3 has 1 + 3 + 1 + 1 subgroups, S2 × S2 has 5
        assert_eq!(FinGroup::symmetric(3).unwrap().subgroups().len(), 6);
        let v4 = FinGroup::product(&[FinGroup::symmetric(2).unwrap(), FinGroup::symmetric(2).unwrap()]).unwrap();
        assert_eq!(v4.subgroups().len(), 5);
    }

    #[test]
    fn symmetric_orders() {
        assert!(symmetric_group(0).is_err());
        assert_eq!(symmetric_group(1).unwrap().order(), 1);
        assert_eq!(symmetric_group(3).unwrap().order(), 6);
        assert_eq!(symmetric_group(4).unwrap().order(), 24);
    }

    #[test]
    fn products() {
        let s2 = symmetric_group(2).unwrap();
        let s1 = symmetric_group(1).unwrap();
        let p = group_product(&[s2.clone(), s1]).unwrap();
        assert_eq!(p.order(), 2);
        assert_eq!(p.degree(), 3);
        assert_eq!(p.perm(1), &vec![1, 0, 2]);
        let q = group_product(&[s2.clone(), s2]).unwrap();
        assert_eq!(q.order(), 4);
        assert!(group_product(&[]).is_err());
    }

    #[test]
    fn rejects_non_closed_lists() {
        assert!(FinGroup::from_permutations(3, vec![vec![0, 1, 2], vec![1, 2, 0]]).is_err());
    }

    #[test]
    fn cosets_of_s2_in_s3() {
        let s3 = Arc::new(symmetric_group(3).unwrap());
        let s2 = Arc::new(FinGroup::from_permutations(3, vec![vec![0, 1, 2], vec![1, 0, 2]]).unwrap());
        let emb = Homomorphism::by_permutations(s2, s3.clone()).unwrap();
        let cosets = emb.left_cosets();
        assert_eq!(cosets.len(), 3);
        for c in &cosets {
            assert_eq!(c.members.len(), 2);
            assert_eq!(c.representative, c.members[0]);
        }
    }

    #[test]
    fn rejects_non_homomorphism() {
        let s2 = Arc::new(symmetric_group(2).unwrap());
        let s3 = Arc::new(symmetric_group(3).unwrap());
        // send the transposition to a 3-cycle
        let three_cycle = s3.index_of(&[1, 2, 0]).unwrap();
        assert!(Homomorphism::new(s2, s3, vec![0, three_cycle]).is_err());
    }
}
