//! Fraction-free exact linear algebra: Bareiss determinants over any
//! integral domain with exact division, integer matrix rank, and kernel
//! vectors of rank-deficient integer matrices. No rational arithmetic.

use crate::poly::IntPoly;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// The few ring operations Bareiss elimination needs. `exact_div` may assume
/// divisibility (guaranteed by the algorithm) and must panic-free return the
/// exact quotient or `None` on a broken invariant.
pub trait BareissRing: Clone + PartialEq {
    fn ring_zero() -> Self;
    fn ring_one() -> Self;
    fn ring_is_zero(&self) -> bool;
    fn ring_mul(&self, rhs: &Self) -> Self;
    fn ring_sub(&self, rhs: &Self) -> Self;
    fn ring_neg(&self) -> Self;
    fn ring_exact_div(&self, rhs: &Self) -> Option<Self>;
}

impl BareissRing for BigInt {
    fn ring_zero() -> Self {
        BigInt::zero()
    }
    fn ring_one() -> Self {
        BigInt::one()
    }
    fn ring_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn ring_mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn ring_sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn ring_neg(&self) -> Self {
        -self
    }
    fn ring_exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() || (self % rhs) != BigInt::zero() {
            None
        } else {
            Some(self / rhs)
        }
    }
}

impl BareissRing for IntPoly {
    fn ring_zero() -> Self {
        IntPoly::zero()
    }
    fn ring_one() -> Self {
        IntPoly::one()
    }
    fn ring_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn ring_mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn ring_sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn ring_neg(&self) -> Self {
        -self
    }
    fn ring_exact_div(&self, rhs: &Self) -> Option<Self> {
        self.exact_div(rhs)
    }
}

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
/// Every division is exact over the coefficient ring; a failed division
/// would indicate a bug and panics.
pub fn bareiss_det<T: BareissRing>(mut a: Vec<Vec<T>>) -> T {
    let n = a.len();
    if n == 0 {
        return T::ring_one();
    }
    debug_assert!(a.iter().all(|r| r.len() == n));
    let mut sign_flip = false;
    let mut prev = T::ring_one();
    for k in 0..n - 1 {
        if a[k][k].ring_is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].ring_is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign_flip = !sign_flip;
                }
                None => return T::ring_zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[k][k]
                    .ring_mul(&a[i][j])
                    .ring_sub(&a[i][k].ring_mul(&a[k][j]));
                a[i][j] = num
                    .ring_exact_div(&prev)
                    .expect("Bareiss division must be exact");
            }
            a[i][k] = T::ring_zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign_flip {
        det.ring_neg()
    } else {
        det
    }
}

/// Determinant by cofactor expansion along the first row. Exponential; used
/// as an independent oracle against the elimination route on small matrices.
pub fn cofactor_det<T: BareissRing>(a: &[Vec<T>]) -> T {
    let n = a.len();
    if n == 0 {
        return T::ring_one();
    }
    if n == 1 {
        return a[0][0].clone();
    }
    let mut acc = T::ring_zero();
    for j in 0..n {
        if a[0][j].ring_is_zero() {
            continue;
        }
        let minor: Vec<Vec<T>> = (1..n)
            .map(|i| {
                (0..n)
                    .filter(|&c| c != j)
                    .map(|c| a[i][c].clone())
                    .collect()
            })
            .collect();
        let term = a[0][j].ring_mul(&cofactor_det(&minor));
        acc = if j % 2 == 0 {
            acc.ring_sub(&term.ring_neg())
        } else {
            acc.ring_sub(&term)
        };
    }
    acc
}

/// Fraction-free determinant over `i128` with overflow checking; returns
/// `None` when any intermediate product would overflow, in which case the
/// caller falls back to big integers.
pub fn bareiss_det_i128(mut a: Vec<Vec<i128>>) -> Option<i128> {
    let n = a.len();
    if n == 0 {
        return Some(1);
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return Some(0),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[k][k]
                    .checked_mul(a[i][j])?
                    .checked_sub(a[i][k].checked_mul(a[k][j])?)?;
                a[i][j] = num / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    Some(sign * a[n - 1][n - 1])
}

/// Rank of an integer matrix, by fraction-free elimination.
pub fn rank_bigint(mut a: Vec<Vec<BigInt>>) -> usize {
    let rows = a.len();
    if rows == 0 {
        return 0;
    }
    let cols = a[0].len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    let mut col = 0;
    while rank < rows && col < cols {
        let pivot = (rank..rows).find(|&i| !a[i][col].is_zero());
        let Some(p) = pivot else {
            col += 1;
            continue;
        };
        a.swap(rank, p);
        for i in rank + 1..rows {
            for j in col + 1..cols {
                let num = &a[rank][col] * &a[i][j] - &a[i][col] * &a[rank][j];
                a[i][j] = num / &prev;
            }
            a[i][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
        col += 1;
    }
    rank
}

/// For a set of columns with rank exactly `len-1` (a circuit), returns an
/// integer dependency `λ` with `Σ λ_i·col_i = 0` and all entries nonzero.
/// Computed by Cramer-style signed maximal minors.
pub fn circuit_dependency(cols: &[Vec<BigInt>]) -> Option<Vec<BigInt>> {
    let k = cols.len();
    if k == 0 {
        return None;
    }
    let dim = cols[0].len();
    // Choose k-1 rows that make the (k-1) x k system full rank, then the
    // dependency entries are the alternating-sign maximal minors.
    let mut rows: Vec<usize> = Vec::new();
    for r in 0..dim {
        if rows.len() == k - 1 {
            break;
        }
        let mut cand = rows.clone();
        cand.push(r);
        let sub: Vec<Vec<BigInt>> = cand
            .iter()
            .map(|&i| cols.iter().map(|c| c[i].clone()).collect())
            .collect();
        if rank_bigint(sub) == cand.len() {
            rows.push(r);
        }
    }
    if rows.len() != k - 1 {
        return None;
    }
    let mut dep = Vec::with_capacity(k);
    for skip in 0..k {
        let minor: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|&i| {
                (0..k)
                    .filter(|&j| j != skip)
                    .map(|j| cols[j][i].clone())
                    .collect()
            })
            .collect();
        let d = bareiss_det(minor);
        dep.push(if skip % 2 == 0 { d } else { -d });
    }
    if dep.iter().any(|x| x.is_zero()) {
        return None;
    }
    // Normalize the leading sign for determinism.
    if dep[0].is_negative() {
        for x in &mut dep {
            *x = -&*x;
        }
    }
    Some(dep)
}
