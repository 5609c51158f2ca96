//! Smith normal form with unimodular transforms, and the lattice operations
//! built on it (kernels, images, solving `A z = w` over the integers).
//!
//! The reduction first runs in `i64` with checked arithmetic and restarts in
//! `BigInt` on the first overflow.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::matrix::IntMatrix;

trait Scalar: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn abs_lt(&self, other: &Self) -> bool;
    fn sub_mul(&self, q: &Self, x: &Self) -> Option<Self>;
    fn add(&self, x: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
    /// Truncated quotient.
    fn quot(&self, p: &Self) -> Option<Self>;
    fn divides(&self, x: &Self) -> bool;
    fn to_big(&self) -> BigInt;
}

impl Scalar for i64 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn abs_lt(&self, other: &Self) -> bool {
        self.unsigned_abs() < other.unsigned_abs()
    }
    fn sub_mul(&self, q: &Self, x: &Self) -> Option<Self> {
        self.checked_sub(q.checked_mul(*x)?)
    }
    fn add(&self, x: &Self) -> Option<Self> {
        self.checked_add(*x)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn quot(&self, p: &Self) -> Option<Self> {
        self.checked_div(*p)
    }
    fn divides(&self, x: &Self) -> bool {
        x.checked_rem(*self).is_some_and(|r| r == 0)
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Scalar for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn abs_lt(&self, other: &Self) -> bool {
        self.abs() < other.abs()
    }
    fn sub_mul(&self, q: &Self, x: &Self) -> Option<Self> {
        Some(self - q * x)
    }
    fn add(&self, x: &Self) -> Option<Self> {
        Some(self + x)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn quot(&self, p: &Self) -> Option<Self> {
        Some(self / p)
    }
    fn divides(&self, x: &Self) -> bool {
        Zero::is_zero(&(x % self))
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

/// `U · A · V = D` with `U`, `V` unimodular, `D` diagonal with
/// `d_0 | d_1 | …`, all `d_i ≥ 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
    pub v_inv: IntMatrix,
    /// Number of nonzero diagonal entries.
    pub rank: usize,
}

impl SnfResult {
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rank).map(|i| self.d.get(i, i).clone()).collect()
    }

    /// Diagonal entries greater than one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.diagonal().into_iter().filter(|x| !x.is_one()).collect()
    }

    /// Recomputes `U·A·V`, `U·U⁻¹` and `V·V⁻¹` and checks the diagonal shape.
    pub fn verify(&self, a: &IntMatrix) -> bool {
        let uav = self.u.mul(a).and_then(|ua| ua.mul(&self.v));
        let shape_ok = (0..self.d.rows()).all(|r| {
            (0..self.d.cols()).all(|c| {
                let x = self.d.get(r, c);
                if r != c || r >= self.rank {
                    Zero::is_zero(x)
                } else {
                    Signed::is_positive(x)
                }
            })
        });
        let chain_ok = (1..self.rank).all(|i| {
            let prev = self.d.get(i - 1, i - 1);
            Zero::is_zero(&(self.d.get(i, i) % prev))
        });
        shape_ok
            && chain_ok
            && uav.is_ok_and(|m| m == self.d)
            && self.u.mul(&self.u_inv).is_ok_and(|m| m.is_identity())
            && self.v.mul(&self.v_inv).is_ok_and(|m| m.is_identity())
    }
}

struct Work<S> {
    d: Vec<Vec<S>>,
    u: Vec<Vec<S>>,
    u_inv: Vec<Vec<S>>,
    v: Vec<Vec<S>>,
    v_inv: Vec<Vec<S>>,
}

fn identity<S: Scalar>(n: usize) -> Vec<Vec<S>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { S::one() } else { S::zero() }).collect())
        .collect()
}

impl<S: Scalar> Work<S> {
    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        self.d.swap(a, b);
        self.u.swap(a, b);
        for row in &mut self.u_inv {
            row.swap(a, b);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for row in &mut self.d {
            row.swap(a, b);
        }
        for row in &mut self.v {
            row.swap(a, b);
        }
        self.v_inv.swap(a, b);
    }

    /// row_i -= q · row_t
    fn row_sub(&mut self, i: usize, t: usize, q: &S) -> Option<()> {
        for c in 0..self.d[i].len() {
            self.d[i][c] = self.d[i][c].sub_mul(q, &self.d[t][c])?;
        }
        for c in 0..self.u[i].len() {
            self.u[i][c] = self.u[i][c].sub_mul(q, &self.u[t][c])?;
        }
        // U⁻¹: col_t += q · col_i
        for row in &mut self.u_inv {
            let neg_q = q.neg()?;
            row[t] = row[t].sub_mul(&neg_q, &row[i])?;
        }
        Some(())
    }

    /// col_j -= q · col_t
    fn col_sub(&mut self, j: usize, t: usize, q: &S) -> Option<()> {
        for row in &mut self.d {
            row[j] = row[j].sub_mul(q, &row[t])?;
        }
        for row in &mut self.v {
            row[j] = row[j].sub_mul(q, &row[t])?;
        }
        // V⁻¹: row_t += q · row_j
        let neg_q = q.neg()?;
        for c in 0..self.v_inv[t].len() {
            self.v_inv[t][c] = self.v_inv[t][c].sub_mul(&neg_q, &self.v_inv[j][c])?;
        }
        Some(())
    }

    /// row_t += row_i
    fn row_add(&mut self, t: usize, i: usize) -> Option<()> {
        for c in 0..self.d[t].len() {
            self.d[t][c] = self.d[t][c].add(&self.d[i][c])?;
        }
        for c in 0..self.u[t].len() {
            self.u[t][c] = self.u[t][c].add(&self.u[i][c])?;
        }
        // U⁻¹: col_i -= col_t
        for row in &mut self.u_inv {
            row[i] = row[i].sub_mul(&S::one(), &row[t])?;
        }
        Some(())
    }

    fn negate_row(&mut self, t: usize) -> Option<()> {
        for c in 0..self.d[t].len() {
            self.d[t][c] = self.d[t][c].neg()?;
        }
        for c in 0..self.u[t].len() {
            self.u[t][c] = self.u[t][c].neg()?;
        }
        for row in &mut self.u_inv {
            row[t] = row[t].neg()?;
        }
        Some(())
    }
}

fn reduce<S: Scalar>(a: Vec<Vec<S>>, m: usize, n: usize) -> Option<(Work<S>, usize)> {
    let mut w = Work { d: a, u: identity(m), u_inv: identity(m), v: identity(n), v_inv: identity(n) };
    let mut t = 0;
    while t < m.min(n) {
        // smallest nonzero entry of the remaining block
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                let x = &w.d[i][j];
                if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs_lt(&w.d[bi][bj])) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        loop {
            for i in t + 1..m {
                if !w.d[i][t].is_zero() {
                    let q = w.d[i][t].quot(&w.d[t][t])?;
                    w.row_sub(i, t, &q)?;
                }
            }
            for j in t + 1..n {
                if !w.d[t][j].is_zero() {
                    let q = w.d[t][j].quot(&w.d[t][t])?;
                    w.col_sub(j, t, &q)?;
                }
            }
            // a remainder smaller than the pivot becomes the new pivot
            let mut smaller: Option<(usize, usize)> = None;
            for i in t + 1..m {
                if !w.d[i][t].is_zero() && smaller.is_none_or(|(a, b)| w.d[i][t].abs_lt(&w.d[a][b])) {
                    smaller = Some((i, t));
                }
            }
            for j in t + 1..n {
                if !w.d[t][j].is_zero() && smaller.is_none_or(|(a, b)| w.d[t][j].abs_lt(&w.d[a][b])) {
                    smaller = Some((t, j));
                }
            }
            if let Some((i, j)) = smaller {
                if i != t {
                    w.swap_rows(t, i);
                } else {
                    w.swap_cols(t, j);
                }
                continue;
            }
            let offender = (t + 1..m).find(|&i| (t + 1..n).any(|j| !w.d[t][t].divides(&w.d[i][j])));
            match offender {
                Some(i) => w.row_add(t, i)?,
                None => break,
            }
        }
        if w.d[t][t].is_negative() {
            w.negate_row(t)?;
        }
        t += 1;
    }
    Some((w, t))
}

fn to_matrix<S: Scalar>(rows: &[Vec<S>], r: usize, c: usize) -> IntMatrix {
    let entries = rows.iter().flatten().map(|x| x.to_big()).collect();
    IntMatrix::from_big_rows(r, c, entries).expect("shape")
}

fn finish<S: Scalar>(w: Work<S>, rank: usize, m: usize, n: usize) -> SnfResult {
    SnfResult {
        d: to_matrix(&w.d, m, n),
        u: to_matrix(&w.u, m, m),
        v: to_matrix(&w.v, n, n),
        u_inv: to_matrix(&w.u_inv, m, m),
        v_inv: to_matrix(&w.v_inv, n, n),
        rank,
    }
}

/// Smith normal form. In builds with debug assertions (tests included) the
/// transforms are re-multiplied and checked on every call.
pub fn smith_normal_form(a: &IntMatrix) -> SnfResult {
    let (m, n) = (a.rows(), a.cols());
    let small = a.to_i64().map(|flat| {
        (0..m)
            .map(|r| flat[r * n..(r + 1) * n].to_vec())
            .collect::<Vec<Vec<i64>>>()
    });
    let result = match small.and_then(|rows| reduce(rows, m, n)) {
        Some((w, rank)) => finish(w, rank, m, n),
        None => {
            let rows: Vec<Vec<BigInt>> = (0..m).map(|r| a.row(r)).collect();
            let (w, rank) = reduce(rows, m, n).expect("BigInt arithmetic does not overflow");
            finish(w, rank, m, n)
        }
    };
    debug_assert!(result.verify(a), "Smith normal form transforms failed verification");
    result
}

/// Basis (as columns) of `{z : A z = 0}`.
pub fn kernel_basis(a: &IntMatrix) -> IntMatrix {
    let s = smith_normal_form(a);
    s.v.column_range(s.rank, a.cols())
}

/// Lattice basis (as columns) of the column span of `A`.
pub fn image_basis(a: &IntMatrix) -> IntMatrix {
    let s = smith_normal_form(a);
    let cols: Vec<Vec<BigInt>> = (0..s.rank)
        .map(|i| {
            let di = s.d.get(i, i);
            s.u_inv.column(i).into_iter().map(|x| x * di).collect()
        })
        .collect();
    IntMatrix::from_columns(a.rows(), &cols)
}

/// Some integer `z` with `A z = w`, if one exists.
pub fn solve(a: &IntMatrix, w: &[BigInt]) -> Option<Vec<BigInt>> {
    let s = smith_normal_form(a);
    solve_with(&s, a.cols(), w)
}

pub(crate) fn solve_with(s: &SnfResult, cols: usize, w: &[BigInt]) -> Option<Vec<BigInt>> {
    let uw = s.u.mul_vec(w);
    let mut y = vec![<BigInt as Zero>::zero(); cols];
    for (i, x) in uw.iter().enumerate() {
        if i < s.rank {
            let di = s.d.get(i, i);
            if !Zero::is_zero(&(x % di)) {
                return None;
            }
            y[i] = x / di;
        } else if !Zero::is_zero(x) {
            return None;
        }
    }
    Some(s.v.mul_vec(&y))
}

/// Whether every column of `b` lies in the column lattice of `a`.
pub fn columns_in_lattice(a: &IntMatrix, b: &IntMatrix) -> bool {
    if b.cols() == 0 {
        return true;
    }
    let s = smith_normal_form(a);
    (0..b.cols()).all(|c| solve_with(&s, a.cols(), &b.column(c)).is_some())
}

/// Invariant factors as machine integers where possible (for reports).
pub fn diagonal_i64(s: &SnfResult) -> Vec<Option<i64>> {
    s.diagonal().iter().map(|x| x.to_i64()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(a: &IntMatrix) -> Vec<BigInt> {
        smith_normal_form(a).diagonal()
    }

    #[test]
    fn small_examples() {
        assert_eq!(diag(&IntMatrix::identity(2)), vec![BigInt::from(1), BigInt::from(1)]);
        assert_eq!(diag(&IntMatrix::from_rows(&[vec![2, 4], vec![6, 8]])), vec![BigInt::from(2), BigInt::from(4)]);
        assert!(diag(&IntMatrix::zeros(2, 3)).is_empty());
        assert!(diag(&IntMatrix::zeros(0, 3)).is_empty());
    }

    #[test]
    fn divisibility_repair() {
        // diag(2, 3) is not in normal form: gcd forces (1, 6)
        let s = smith_normal_form(&IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]));
        assert_eq!(s.diagonal(), vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        let big = i64::MAX / 2;
        let a = IntMatrix::from_rows(&[vec![big, big - 1], vec![big - 2, 3]]);
        let s = smith_normal_form(&a);
        assert!(s.verify(&a));
        assert_eq!(s.rank, 2);
    }

    #[test]
    fn kernel_and_solve() {
        let a = IntMatrix::from_rows(&[vec![1, 1, 0], vec![0, 1, 1]]);
        let k = kernel_basis(&a);
        assert_eq!(k.cols(), 1);
        assert!(a.mul(&k).unwrap().is_zero());
        let w = vec![BigInt::from(2), BigInt::from(3)];
        let z = solve(&a, &w).unwrap();
        assert_eq!(a.mul_vec(&z), w);
        let two = IntMatrix::from_rows(&[vec![2]]);
        assert!(solve(&two, &[BigInt::from(1)]).is_none());
        assert_eq!(image_basis(&IntMatrix::from_rows(&[vec![2, 4]])).column(0), vec![BigInt::from(2)]);
    }
}
