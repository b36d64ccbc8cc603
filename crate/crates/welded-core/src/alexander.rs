//! Alexander polynomial of welded long knots, normalization, and the
//! coefficients `alpha_k` of the expansion of the normalized polynomial
//! in powers of `(1 - t)`.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::diagram::GaussDiagram;
use crate::error::{Error, Result};
use crate::group::{fox_matrix, wirtinger};
use crate::laurent::{det_bareiss_up_to_unit, LaurentPoly};

/// Alexander polynomial of a welded long knot (1-strand diagram), as the
/// canonical unit-normal representative (lowest exponent 0, positive
/// leading coefficient).
///
/// With `c` relations and `c + 1` generators, the column of the first arc
/// is deleted and the determinant of the remaining `c x c` matrix is taken
/// by fraction-free elimination; for Wirtinger-type presentations this
/// realizes the gcd of the `(m-1)`-minors up to units.
pub fn alexander(d: &GaussDiagram) -> Result<LaurentPoly> {
    if d.strand_count() != 1 {
        return Err(Error::WrongStrandCount {
            expected: 1,
            got: d.strand_count(),
        });
    }
    let p = wirtinger(d);
    if p.relations.is_empty() {
        return Ok(LaurentPoly::one());
    }
    let m = fox_matrix(&p);
    let skip = p.first_arc[0];
    let sub: Vec<Vec<LaurentPoly>> = m
        .into_iter()
        .map(|row| {
            row.into_iter()
                .enumerate()
                .filter(|(j, _)| *j != skip)
                .map(|(_, e)| e)
                .collect()
        })
        .collect();
    Ok(det_bareiss_up_to_unit(&sub).canonical())
}

/// Like [`alexander`] but deleting an arbitrary generator column; used by
/// the column-choice independence test.
pub fn alexander_deleting_column(d: &GaussDiagram, col: usize) -> Result<LaurentPoly> {
    if d.strand_count() != 1 {
        return Err(Error::WrongStrandCount {
            expected: 1,
            got: d.strand_count(),
        });
    }
    let p = wirtinger(d);
    if col >= p.generators {
        return Err(Error::IndexOutOfRange(format!(
            "column {col} of {}",
            p.generators
        )));
    }
    if p.relations.is_empty() {
        return Ok(LaurentPoly::one());
    }
    let m = fox_matrix(&p);
    let sub: Vec<Vec<LaurentPoly>> = m
        .into_iter()
        .map(|row| {
            row.into_iter()
                .enumerate()
                .filter(|(j, _)| *j != col)
                .map(|(_, e)| e)
                .collect()
        })
        .collect();
    Ok(det_bareiss_up_to_unit(&sub).canonical())
}

/// A normalized Alexander polynomial: the pair `(delta, shift)` represents
/// `t^shift * delta`, with value 1 and derivative 0 at `t = 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Normalized {
    pub delta: LaurentPoly,
    pub shift: i64,
}

/// Fix the sign so the value at 1 is 1 and compute the exponent shift
/// killing the derivative at 1. Errors when `|delta(1)| != 1`, which signals
/// a non-long-knot input or an internal bug.
pub fn normalize(delta: &LaurentPoly) -> Result<Normalized> {
    let v = delta.eval_one();
    let delta = if v == BigInt::one() {
        delta.clone()
    } else if v == -BigInt::one() {
        -delta
    } else {
        return Err(Error::NotNormalizable(format!("delta(1) = {v}")));
    };
    let d1 = delta.derivative_eval_one();
    let shift = i64::try_from(-d1)
        .map_err(|_| Error::NotNormalizable("derivative at 1 out of range".into()))?;
    Ok(Normalized { delta, shift })
}

/// Coefficients `alpha_2 .. alpha_kmax` of `1 + sum_k alpha_k (1-t)^k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlphaSeries {
    pub kmax: usize,
    /// `coeffs[0] = alpha_2`, ..., `coeffs[kmax-2] = alpha_kmax`.
    pub coeffs: Vec<BigInt>,
}

impl AlphaSeries {
    pub fn alpha(&self, k: usize) -> &BigInt {
        &self.coeffs[k - 2]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

fn binomial(n: u64, k: u64) -> BigInt {
    let mut out = BigInt::one();
    for i in 0..k.min(n) {
        out = out * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    if k > n {
        BigInt::zero()
    } else {
        out
    }
}

/// Expand the normalized polynomial at `t = 1`: substitute `t = 1 - u`
/// exactly, multiply by the truncated series for `(1-u)^shift`, and read
/// off the coefficients of `u^2 .. u^kmax`. Exact integer arithmetic.
pub fn alpha_coeffs(norm: &Normalized, kmax: usize) -> AlphaSeries {
    assert!(kmax >= 2);
    let cap = kmax + 1;
    // P(1-u) for the polynomial part, truncated at degree kmax.
    let mut p_sub = alloc::vec![BigInt::zero(); cap];
    for (e, c) in norm.delta.terms() {
        // delta has min exponent 0 by canonicalization; tolerate shifts anyway.
        let e = u64::try_from(*e).expect("canonical polynomial has nonnegative exponents");
        for j in 0..cap as u64 {
            if j > e {
                break;
            }
            let mut term = binomial(e, j) * c;
            if j % 2 == 1 {
                term = -term;
            }
            p_sub[j as usize] += term;
        }
    }
    // (1-u)^shift truncated: nonnegative shift is a polynomial, negative
    // shift uses (1-u)^{-N} = sum_j C(N-1+j, j) u^j.
    let mut q = alloc::vec![BigInt::zero(); cap];
    if norm.shift >= 0 {
        let m = norm.shift as u64;
        for (j, item) in q.iter_mut().enumerate() {
            let mut term = binomial(m, j as u64);
            if j % 2 == 1 {
                term = -term;
            }
            *item = term;
        }
    } else {
        let n = (-norm.shift) as u64;
        for (j, item) in q.iter_mut().enumerate() {
            *item = binomial(n - 1 + j as u64, j as u64);
        }
    }
    let mut s = alloc::vec![BigInt::zero(); cap];
    for i in 0..cap {
        for j in 0..cap - i {
            if !p_sub[i].is_zero() && !q[j].is_zero() {
                s[i + j] += &p_sub[i] * &q[j];
            }
        }
    }
    debug_assert!(s[0].is_one() && s[1].is_zero(), "normalization violated");
    AlphaSeries {
        kmax,
        coeffs: s[2..=kmax].to_vec(),
    }
}

/// `alpha_2 .. alpha_kmax` of a welded long knot in one call.
pub fn alphas_of_long_knot(d: &GaussDiagram, kmax: usize) -> Result<AlphaSeries> {
    let delta = alexander(d)?;
    let norm = normalize(&delta)?;
    Ok(alpha_coeffs(&norm, kmax))
}
