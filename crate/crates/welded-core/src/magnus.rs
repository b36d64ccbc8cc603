//! Truncated Magnus series: formal power series in noncommuting symbols
//! `X_1 .. X_n` with integer coefficients, truncated above a fixed degree.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Word over strand symbols (1-based indices).
pub type MagnusWord = Vec<usize>;

/// A truncated series: coefficient map over words of length `<= q`.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedSeries {
    pub q: usize,
    terms: BTreeMap<MagnusWord, BigInt>,
}

impl TruncatedSeries {
    pub fn one(q: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Vec::new(), BigInt::one());
        TruncatedSeries { q, terms }
    }

    /// The meridian symbol `1 + X_i`.
    pub fn meridian(i: usize, q: usize) -> Self {
        let mut s = Self::one(q);
        if q >= 1 {
            s.terms.insert(alloc::vec![i], BigInt::one());
        }
        s
    }

    pub fn coeff(&self, w: &[usize]) -> BigInt {
        self.terms.get(w).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MagnusWord, &BigInt)> {
        self.terms.iter()
    }

    pub fn mul(&self, rhs: &TruncatedSeries) -> TruncatedSeries {
        debug_assert_eq!(self.q, rhs.q);
        let mut out: BTreeMap<MagnusWord, BigInt> = BTreeMap::new();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &rhs.terms {
                if w1.len() + w2.len() > self.q {
                    continue;
                }
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                let e = out.entry(w).or_insert_with(BigInt::zero);
                *e += c1 * c2;
            }
        }
        out.retain(|_, c| !c.is_zero());
        TruncatedSeries {
            q: self.q,
            terms: out,
        }
    }

    /// Inverse of a series with constant term 1.
    pub fn inverse(&self) -> TruncatedSeries {
        debug_assert!(self.coeff(&[]).is_one(), "inverse needs constant term 1");
        let mut y = self.clone();
        y.terms.remove(&Vec::new()); // Y = S - 1
        let mut out = Self::one(self.q);
        let mut power = Self::one(self.q);
        let mut sign = BigInt::one();
        for _ in 0..self.q {
            power = power.mul(&y);
            if power.terms.is_empty() {
                break;
            }
            sign = -sign;
            for (w, c) in &power.terms {
                let e = out.terms.entry(w.clone()).or_insert_with(BigInt::zero);
                *e += &sign * c;
            }
        }
        out.terms.retain(|_, c| !c.is_zero());
        out
    }

    pub fn pow(&self, e: i64) -> TruncatedSeries {
        let base = if e >= 0 { self.clone() } else { self.inverse() };
        let mut out = Self::one(self.q);
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// Restrict to words of length `< len` (used by stabilization checks);
    /// the result's truncation degree is `len - 1` so that restrictions of
    /// series with different `q` compare equal.
    pub fn truncated_below(&self, len: usize) -> TruncatedSeries {
        TruncatedSeries {
            q: len.saturating_sub(1),
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.len() < len)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn meridian_inverse() {
        let m = TruncatedSeries::meridian(1, 4);
        let inv = m.inverse();
        // 1 - X + X^2 - X^3 + X^4
        for k in 0..=4usize {
            let w = alloc::vec![1; k];
            let want = if k % 2 == 0 { 1 } else { -1 };
            assert_eq!(inv.coeff(&w), BigInt::from(want));
        }
        assert_eq!(m.mul(&inv), TruncatedSeries::one(4));
        assert_eq!(inv.mul(&m), TruncatedSeries::one(4));
    }

    #[test]
    fn commutator_coefficients() {
        // [m1, m2] = m1^-1 m2^-1 m1 m2 = 1 + X1X2 - X2X1 + ...
        let q = 2;
        let m1 = TruncatedSeries::meridian(1, q);
        let m2 = TruncatedSeries::meridian(2, q);
        let c = m1.inverse().mul(&m2.inverse()).mul(&m1).mul(&m2);
        assert_eq!(c.coeff(&[1, 2]), BigInt::from(1));
        assert_eq!(c.coeff(&[2, 1]), BigInt::from(-1));
        assert_eq!(c.coeff(&[1]), BigInt::zero());
        assert_eq!(c.coeff(&[2]), BigInt::zero());
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let m = TruncatedSeries::meridian(1, 3);
        assert_eq!(m.pow(3), m.mul(&m).mul(&m));
        assert_eq!(m.pow(-2), m.inverse().mul(&m.inverse()));
        assert_eq!(m.pow(0), TruncatedSeries::one(3));
    }
}
