//! Dense univariate polynomials with arbitrary-precision integer
//! coefficients, plus the coefficient-sequence predicates (palindromic,
//! trapezoidal, log-concave, ultra-log-concave) the conjectures are
//! stated in. All comparisons are exact; ultra-log-concavity is decided
//! by cross-multiplied integers, never rationals.

use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// `coeffs[i]` is the coefficient of `t^i`. The vector is trimmed: the last
/// stored coefficient is nonzero unless the polynomial is zero (empty vec).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        IntPoly::from_coeffs(vec![c.into()])
    }

    /// `c · t^deg`
    pub fn monomial(c: impl Into<BigInt>, deg: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = c.into();
        IntPoly::from_coeffs(coeffs)
    }

    pub fn from_coeffs<T: Into<BigInt>>(coeffs: Vec<T>) -> Self {
        let mut p = IntPoly {
            coeffs: coeffs.into_iter().map(Into::into).collect(),
        };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiply by `t^k`.
    pub fn shifted(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// `p(-t)`.
    pub fn compose_neg_t(&self) -> IntPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
            .collect();
        IntPoly { coeffs }
    }

    pub fn pow(&self, mut e: usize) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact division: returns `Some(q)` with `self = q·d` or `None` when no
    /// such integer-coefficient quotient exists.
    pub fn exact_div(&self, d: &IntPoly) -> Option<IntPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let (n, m) = (self.coeffs.len(), d.coeffs.len());
        if n < m {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); n - m + 1];
        let lead = &d.coeffs[m - 1];
        for k in (0..=n - m).rev() {
            let top = rem[k + m - 1].clone();
            if top.is_zero() {
                continue;
            }
            if (&top % lead) != BigInt::zero() {
                return None;
            }
            let q = &top / lead;
            for (i, dc) in d.coeffs.iter().enumerate() {
                rem[k + i] -= &q * dc;
            }
            quot[k] = q;
        }
        if rem.iter().all(BigInt::is_zero) {
            Some(IntPoly::from_coeffs(quot))
        } else {
            None
        }
    }

    /// Canonical representative of the `±t^k` unit class: divide out the
    /// lowest power of `t`, then negate if the constant term is negative.
    pub fn canonical(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let low = self.coeffs.iter().position(|c| !c.is_zero()).unwrap();
        let mut coeffs: Vec<BigInt> = self.coeffs[low..].to_vec();
        if coeffs[0].is_negative() {
            for c in &mut coeffs {
                *c = -&*c;
            }
        }
        IntPoly { coeffs }
    }

    /// Equality up to multiplication by `±t^k`.
    pub fn equiv_up_to_units(&self, other: &IntPoly) -> bool {
        self.canonical() == other.canonical()
    }

    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    fn require_nonnegative(&self) -> Result<()> {
        if self.coeffs.iter().any(|c| c.is_negative()) {
            return Err(Error::input(format!(
                "predicate requires nonnegative coefficients, got {self}"
            )));
        }
        Ok(())
    }

    /// `a_k^2 ≥ a_{k-1}·a_{k+1}` for all internal `k`, and no zero lies
    /// strictly between two nonzero coefficients.
    pub fn is_log_concave_no_internal_zeros(&self) -> Result<bool> {
        self.require_nonnegative()?;
        let a = &self.coeffs;
        if a.len() <= 1 {
            return Ok(true);
        }
        for k in 1..a.len() - 1 {
            if &a[k] * &a[k] < &a[k - 1] * &a[k + 1] {
                return Ok(false);
            }
        }
        if let Some(first) = a.iter().position(|c| !c.is_zero()) {
            let last = a.iter().rposition(|c| !c.is_zero()).unwrap();
            if a[first..=last].iter().any(BigInt::is_zero) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Strict increase, then a plateau, then strict decrease; either side may
    /// be empty, so constant and single-entry sequences qualify.
    pub fn is_trapezoidal(&self) -> Result<bool> {
        self.require_nonnegative()?;
        let a = &self.coeffs;
        if a.len() <= 1 {
            return Ok(true);
        }
        let mut i = 0;
        while i + 1 < a.len() && a[i] < a[i + 1] {
            i += 1;
        }
        let mut j = a.len() - 1;
        while j > 0 && a[j - 1] > a[j] {
            j -= 1;
        }
        Ok(i <= j && a[i..=j].iter().all(|c| *c == a[i]))
    }

    /// Log-concavity of `a_k / C(d,k)`, decided by cross-multiplication:
    /// `a_k²·C(d,k-1)·C(d,k+1) ≥ a_{k-1}·a_{k+1}·C(d,k)²`.
    pub fn is_ultra_log_concave(&self) -> Result<bool> {
        self.require_nonnegative()?;
        let a = &self.coeffs;
        if a.len() <= 2 {
            return Ok(true);
        }
        let d = a.len() - 1;
        for k in 1..d {
            let lhs = &a[k] * &a[k] * binomial(d, k - 1) * binomial(d, k + 1);
            let rhs = &a[k - 1] * &a[k + 1] * binomial(d, k) * binomial(d, k);
            if lhs < rhs {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if i == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// `t - 1` raised to a power shows up in the volume expansion.
pub fn t_minus_one_pow(e: usize) -> IntPoly {
    IntPoly::from_coeffs(vec![-1, 1]).pow(e)
}

/// `(1 + t)^e`, the factor forced by symmetric edge multiplicities.
pub fn one_plus_t_pow(e: usize) -> IntPoly {
    IntPoly::from_coeffs(vec![1, 1]).pow(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(cs: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(cs.to_vec())
    }

    #[test]
    fn ring_basics() {
        let one_plus_t = p(&[1, 1]);
        assert_eq!(&one_plus_t * &one_plus_t, p(&[1, 2, 1]));
        assert_eq!(&p(&[3, 1]) * &IntPoly::zero(), IntPoly::zero());
        // (t-1)^2 + 3(t-1) + 3 = t^2 + t + 1
        let tm1 = p(&[-1, 1]);
        let got = &(&(&tm1 * &tm1) + &tm1.scale(&BigInt::from(3))) + &IntPoly::constant(3);
        assert_eq!(got, p(&[1, 1, 1]));
    }

    #[test]
    fn eval_and_neg_t() {
        let q = p(&[1, -1, 1]);
        assert_eq!(q.eval(&BigInt::from(2)), BigInt::from(3));
        assert_eq!(q.compose_neg_t(), p(&[1, 1, 1]));
        assert_eq!(p(&[0, 2, 0, 5]).compose_neg_t(), p(&[0, -2, 0, -5]));
    }

    #[test]
    fn palindromic() {
        assert!(p(&[1, 1, 1]).is_palindromic());
        assert!(p(&[2, 2]).is_palindromic());
        assert!(!p(&[1, 2]).is_palindromic());
    }

    #[test]
    fn log_concave() {
        assert!(p(&[1, 1, 1]).is_log_concave_no_internal_zeros().unwrap());
        assert!(!p(&[1, 0, 1]).is_log_concave_no_internal_zeros().unwrap());
        assert!(p(&[3, 6, 3]).is_log_concave_no_internal_zeros().unwrap());
        assert!(p(&[-1, 1]).is_log_concave_no_internal_zeros().is_err());
    }

    #[test]
    fn trapezoidal() {
        assert!(p(&[1, 3, 3, 1]).is_trapezoidal().unwrap());
        assert!(!p(&[1, 2, 1, 2]).is_trapezoidal().unwrap());
        assert!(p(&[1, 1, 1]).is_trapezoidal().unwrap());
        assert!(p(&[5]).is_trapezoidal().unwrap());
        assert!(!p(&[1, 1, 2]).is_trapezoidal().unwrap());
        assert!(p(&[1, 2, 2, 1]).is_trapezoidal().unwrap());
    }

    #[test]
    fn ultra_log_concave() {
        assert!(!p(&[1, 1, 1]).is_ultra_log_concave().unwrap());
        assert!(p(&[1, 2, 1]).is_ultra_log_concave().unwrap());
        assert!(p(&[3, 6, 3]).is_ultra_log_concave().unwrap());
    }

    #[test]
    fn units() {
        assert!(p(&[0, 0, 1, -1, 1]).equiv_up_to_units(&p(&[1, -1, 1])));
        assert!(p(&[-1, 1, -1]).equiv_up_to_units(&p(&[1, -1, 1])));
        assert!(!p(&[1, 1]).equiv_up_to_units(&p(&[1, -1])));
    }

    #[test]
    fn exact_division() {
        let prod = &p(&[1, 1]).pow(3) * &p(&[3, 0, 2]);
        assert_eq!(prod.exact_div(&one_plus_t_pow(3)), Some(p(&[3, 0, 2])));
        assert_eq!(p(&[1, 1, 1]).exact_div(&p(&[1, 1])), None);
    }

    fn coeff_vec() -> impl Strategy<Value = Vec<i64>> {
        prop::collection::vec(0..=100i64, 0..12)
    }

    proptest! {
        #[test]
        fn canonical_is_idempotent(cs in prop::collection::vec(-50..=50i64, 0..10)) {
            let q = p(&cs);
            prop_assert_eq!(q.canonical().canonical(), q.canonical());
        }

        #[test]
        fn equiv_is_equivalence(a in prop::collection::vec(-9..=9i64, 0..6),
                                shift in 0usize..4, sign in prop::bool::ANY) {
            let q = p(&a);
            let unit = if sign { -&q.shifted(shift) } else { q.shifted(shift) };
            prop_assert!(q.equiv_up_to_units(&q));
            prop_assert!(q.equiv_up_to_units(&unit));
            prop_assert!(unit.equiv_up_to_units(&q));
        }

        /// The predicates agree with direct brute-force transcriptions of
        /// their defining inequalities.
        #[test]
        fn predicates_match_brute_force(cs in coeff_vec()) {
            let q = p(&cs);
            let a = q.coeffs().to_vec();
            let n = a.len();

            let lc = (1..n.saturating_sub(1))
                .all(|k| &a[k] * &a[k] >= &a[k - 1] * &a[k + 1]);
            let nz: Vec<usize> = (0..n).filter(|&i| !a[i].is_zero()).collect();
            let no_internal = nz.windows(2).all(|w| w[1] == w[0] + 1);
            prop_assert_eq!(
                q.is_log_concave_no_internal_zeros().unwrap(),
                lc && (nz.is_empty() || no_internal)
            );

            // trapezoidal: exists k <= m with strict < before, = between, strict > after
            let mut trap = n <= 1;
            for k in 0..n {
                for m in k..n {
                    let inc = (0..k).all(|i| a[i] < a[i + 1]);
                    let flat = (k..m).all(|i| a[i] == a[i + 1]);
                    let dec = (m..n - 1).all(|i| a[i] > a[i + 1]);
                    if inc && flat && dec {
                        trap = true;
                    }
                }
            }
            prop_assert_eq!(q.is_trapezoidal().unwrap(), trap);

            if n >= 1 {
                let d = n - 1;
                let ulc = (1..d.max(1)).all(|k| {
                    &a[k] * &a[k] * binomial(d, k - 1) * binomial(d, k + 1)
                        >= &a[k - 1] * &a[k + 1] * binomial(d, k) * binomial(d, k)
                });
                prop_assert_eq!(q.is_ultra_log_concave().unwrap(), ulc);
                // ultra-log-concave implies the plain log-concavity
                // inequalities (binomials are themselves log-concave)
                if ulc {
                    prop_assert!(lc);
                }
            }
        }
    }
}
