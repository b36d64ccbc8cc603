//! Integer-coefficient Laurent polynomials in one variable `t`, plus the
//! fraction-free (Bareiss) determinant over `Z[t]` used by the Alexander
//! polynomial computation.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Laurent polynomial over `Z`; the zero polynomial is the empty map.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    /// `c * t^e`, dropped if `c == 0`.
    pub fn monomial(e: i64, c: BigInt) -> Self {
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert(e, c);
        }
        LaurentPoly { coeffs: m }
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, BigInt::from(c));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(e).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.coeffs.get(&e).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Multiply by `t^k`.
    pub fn shifted(&self, k: i64) -> Self {
        LaurentPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, c)| (e + k, c.clone()))
                .collect(),
        }
    }

    /// Value at `t = 1`: the coefficient sum.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// Value of `d/dt` at `t = 1`.
    pub fn derivative_eval_one(&self) -> BigInt {
        self.coeffs.iter().map(|(e, c)| BigInt::from(*e) * c).sum()
    }

    /// Canonical unit-normal representative: multiply by `±t^k` so the lowest
    /// exponent is 0 and the leading (highest-degree) coefficient is positive.
    pub fn canonical(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let lo = self.min_exp().unwrap();
        let mut p = self.shifted(-lo);
        if p.coeffs.values().next_back().unwrap().is_negative() {
            p = -&p;
        }
        p
    }

    /// Dense coefficient vector; requires `min_exp >= 0`.
    pub(crate) fn to_dense(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        assert!(
            self.min_exp().unwrap() >= 0,
            "negative exponent in dense conversion"
        );
        let hi = self.max_exp().unwrap() as usize;
        let mut v = vec![BigInt::zero(); hi + 1];
        for (e, c) in &self.coeffs {
            v[*e as usize] = c.clone();
        }
        v
    }

    pub(crate) fn from_dense(v: &[BigInt]) -> Self {
        let mut p = Self::zero();
        for (e, c) in v.iter().enumerate() {
            p.add_term(e as i64, c.clone());
        }
        p
    }
}

impl fmt::Display for LaurentPoly {
    /// Terms as `c*t^e` in ascending exponent order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.coeffs {
            if first {
                first = false;
                if *e == 0 {
                    write!(f, "{c}")?;
                } else {
                    write!(f, "{c}*t^{e}")?;
                }
            } else {
                let abs = c.abs();
                let sign = if c.is_negative() { "-" } else { "+" };
                if *e == 0 {
                    write!(f, " {sign} {abs}")?;
                } else {
                    write!(f, " {sign} {abs}*t^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &rhs.coeffs {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.coeffs {
            self.add_term(*e, c.clone());
        }
    }
}

// ---- dense Z[t] arithmetic for the determinant ----

fn dense_trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn dense_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    dense_trim(&mut out);
    out
}

fn dense_sub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(BigInt::zero);
        let y = b.get(i).cloned().unwrap_or_else(BigInt::zero);
        out.push(x - y);
    }
    dense_trim(&mut out);
    out
}

/// Exact division in `Z[t]`; panics if the division is not exact
/// (which would indicate a bug in the Bareiss pivoting).
fn dense_div_exact(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    assert!(!b.is_empty(), "division by zero polynomial");
    if a.is_empty() {
        return Vec::new();
    }
    let mut rem: Vec<BigInt> = a.to_vec();
    assert!(rem.len() >= b.len(), "nonexact division (degree)");
    let mut q = vec![BigInt::zero(); rem.len() - b.len() + 1];
    let lead = b.last().unwrap();
    for i in (0..q.len()).rev() {
        let c = rem[i + b.len() - 1].clone();
        if c.is_zero() {
            continue;
        }
        let (quot, r) = num_integer::Integer::div_rem(&c, lead);
        assert!(r.is_zero(), "nonexact division (coefficient)");
        for (j, y) in b.iter().enumerate() {
            let t = &quot * y;
            rem[i + j] -= t;
        }
        q[i] = quot;
    }
    assert!(
        rem.iter().all(|c| c.is_zero()),
        "nonexact division (remainder)"
    );
    dense_trim(&mut q);
    q
}

/// Determinant of a square matrix over `Z[t]` by fraction-free Bareiss
/// elimination. Entries may carry negative exponents of `t`; each row is
/// cleared by a power of `t` first, so the result is correct up to a unit
/// `±t^k` (which is all the Alexander computation needs).
pub fn det_bareiss_up_to_unit(matrix: &[Vec<LaurentPoly>]) -> LaurentPoly {
    let n = matrix.len();
    if n == 0 {
        return LaurentPoly::one();
    }
    // Clear negative exponents row by row.
    let mut m: Vec<Vec<Vec<BigInt>>> = Vec::with_capacity(n);
    for row in matrix {
        assert_eq!(row.len(), n, "matrix must be square");
        let shift = row
            .iter()
            .filter_map(|p| p.min_exp())
            .min()
            .unwrap_or(0)
            .min(0);
        m.push(row.iter().map(|p| p.shifted(-shift).to_dense()).collect());
    }

    let mut sign_flip = false;
    let mut prev: Vec<BigInt> = vec![BigInt::one()];
    for k in 0..n - 1 {
        if m[k][k].is_empty() {
            let Some(piv) = (k + 1..n).find(|&i| !m[i][k].is_empty()) else {
                return LaurentPoly::zero();
            };
            m.swap(k, piv);
            sign_flip = !sign_flip;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = dense_sub(
                    &dense_mul(&m[i][j], &m[k][k]),
                    &dense_mul(&m[i][k], &m[k][j]),
                );
                let skip_division = num.is_empty() || (prev.len() == 1 && prev[0].is_one());
                m[i][j] = if skip_division {
                    num
                } else {
                    dense_div_exact(&num, &prev)
                };
            }
            m[i][k] = Vec::new();
        }
        prev = m[k][k].clone();
    }
    let mut det = LaurentPoly::from_dense(&m[n - 1][n - 1]);
    if sign_flip {
        det = -&det;
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn arithmetic_basics() {
        let a = p(&[(0, 1), (1, 2)]);
        let b = p(&[(-1, 3), (1, -2)]);
        assert_eq!(&a + &b, p(&[(-1, 3), (0, 1)]));
        assert_eq!(&a * &b, p(&[(-1, 3), (0, 6), (1, -2), (2, -4)]));
        assert_eq!(&a - &a, LaurentPoly::zero());
        assert_eq!(a.eval_one(), BigInt::from(3));
        assert_eq!(a.derivative_eval_one(), BigInt::from(2));
    }

    #[test]
    fn canonical_representative() {
        let a = p(&[(-2, -2), (0, 1)]); // -2 t^-2 + 1
        assert_eq!(a.canonical(), p(&[(0, 2), (2, -1)]).canonical());
        assert_eq!(a.canonical(), p(&[(0, -2), (2, 1)]));
        assert_eq!(LaurentPoly::zero().canonical(), LaurentPoly::zero());
    }

    #[test]
    fn display_ascending() {
        let a = p(&[(2, -1), (0, 2), (1, 1)]);
        assert_eq!(alloc::format!("{a}"), "2 + 1*t^1 - 1*t^2");
    }

    #[test]
    fn det_2x2() {
        // [[t, 1], [1, t]] -> t^2 - 1
        let m = alloc::vec![
            alloc::vec![p(&[(1, 1)]), p(&[(0, 1)])],
            alloc::vec![p(&[(0, 1)]), p(&[(1, 1)])],
        ];
        assert_eq!(
            det_bareiss_up_to_unit(&m).canonical(),
            p(&[(0, -1), (2, 1)]).canonical()
        );
    }

    #[test]
    fn det_with_negative_exponents() {
        // [[t^-1, -1], [1-t, t]] ~ 1 + t(1-t) up to unit
        let m = alloc::vec![
            alloc::vec![p(&[(-1, 1)]), p(&[(0, -1)])],
            alloc::vec![p(&[(0, 1), (1, -1)]), p(&[(1, 1)])],
        ];
        // det = 2 - t up to unit; canonical form is t - 2
        let d = det_bareiss_up_to_unit(&m).canonical();
        assert_eq!(d, p(&[(0, -2), (1, 1)]));
    }

    #[test]
    fn det_singular() {
        let m = alloc::vec![
            alloc::vec![p(&[(0, 1)]), p(&[(0, 1)])],
            alloc::vec![p(&[(0, 1)]), p(&[(0, 1)])],
        ];
        assert!(det_bareiss_up_to_unit(&m).is_zero());
    }

    #[test]
    fn det_4x4_integer() {
        // Vandermonde-ish integer check against a known value.
        let rows = [[1i64, 1, 1, 1], [1, 2, 4, 8], [1, 3, 9, 27], [1, 4, 16, 64]];
        let m: Vec<Vec<LaurentPoly>> = rows
            .iter()
            .map(|r| r.iter().map(|&c| p(&[(0, c)])).collect())
            .collect();
        // prod_{i<j} (x_j - x_i) with x = 1,2,3,4 -> 12
        assert_eq!(det_bareiss_up_to_unit(&m), p(&[(0, 12)]));
    }
}
