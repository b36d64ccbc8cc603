//! Welded Milnor invariants via longitudes and truncated Magnus expansion.
//!
//! Arc expressions are anchored at the strand tops: the last arc of each
//! strand is its meridian and the Wirtinger conjugations are propagated
//! downward, iterating enough times for all coefficients below the
//! truncation to stabilize. The longitude of strand `j` is the product of
//! `expr(over-arc)^sign` over the under-endpoints met walking the strand,
//! corrected by `m_j^{-f}` where `f` is the degree-1 coefficient of `X_j`
//! (the preferred-longitude framing correction).
//!
//! `mu(I)` then reads the coefficient of `X_{i_1} ... X_{i_{k-1}}` in the
//! longitude of `i_k`, with an overall sign `(-1)^{|I|}`. These conventions
//! are pinned jointly by: `mu(ij)` equals the welded linking number, R1-move
//! invariance, and the table anchors (the degree-2 formula for `mu(123)`
//! and the degree-3 evaluation tables).

use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::diagram::GaussDiagram;
use crate::error::{Error, Result};
use crate::group::arc_structure;
use crate::magnus::TruncatedSeries;

/// A Milnor index sequence: the last entry names the longitude component,
/// the prefix names the Magnus word. Length between 2 and 5.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MilnorIndex(pub Vec<usize>);

impl MilnorIndex {
    pub fn new(seq: Vec<usize>) -> Result<Self> {
        if seq.len() < 2 || seq.len() > 5 {
            return Err(Error::Unsupported(alloc::format!(
                "Milnor index length {} outside 2..=5",
                seq.len()
            )));
        }
        if seq.contains(&0) {
            return Err(Error::IndexOutOfRange("Milnor index contains 0".into()));
        }
        Ok(MilnorIndex(seq))
    }
}

/// Arc expressions in the meridians, iterated to depth `iters`.
fn arc_expressions(d: &GaussDiagram, q: usize, iters: usize) -> Vec<TruncatedSeries> {
    let arcs = arc_structure(d);
    let meridian_of_arc = |a: usize| TruncatedSeries::meridian(arcs.arc_strand[a], q);
    let mut expr: Vec<TruncatedSeries> = (0..arcs.arc_count).map(meridian_of_arc).collect();
    for _ in 0..iters {
        let mut next: Vec<TruncatedSeries> = (0..arcs.arc_count).map(meridian_of_arc).collect();
        // Top-anchored: the last arc of each strand is its meridian; walk
        // the sites backwards, expressing each incoming arc from the
        // outgoing one: in = y^{s} out y^{-s} for a crossing of sign s.
        for &(cid, a_in, a_out) in arcs.sites.iter().rev() {
            let sign = d.chord(cid).unwrap().sign.to_i64();
            let y = &expr[arcs.over_arc[&cid]];
            let conj = y.pow(sign);
            let conj_inv = y.pow(-sign);
            next[a_in] = conj.mul(&next[a_out]).mul(&conj_inv);
        }
        expr = next;
    }
    expr
}

/// The (framing-corrected) longitude of strand `j` as a truncated series of
/// degree `q <= 5`.
pub fn longitude(d: &GaussDiagram, j: usize, q: usize) -> Result<TruncatedSeries> {
    longitude_with_iters(d, j, q, q + 1)
}

/// Longitude with an explicit iteration depth (the stabilization property
/// tests compare successive depths).
pub fn longitude_with_iters(
    d: &GaussDiagram,
    j: usize,
    q: usize,
    iters: usize,
) -> Result<TruncatedSeries> {
    if j == 0 || j > d.strand_count() {
        return Err(Error::IndexOutOfRange(alloc::format!(
            "strand {j} of {}",
            d.strand_count()
        )));
    }
    if q > 5 {
        return Err(Error::Unsupported("truncation degree above 5".into()));
    }
    let expr = arc_expressions(d, q, iters);
    let arcs = arc_structure(d);
    let info = d.endpoint_info();
    let mut ell = TruncatedSeries::one(q);
    for &e in d.strand(j).unwrap() {
        let (cid, role) = info[&e];
        if matches!(role, crate::diagram::Role::Under) {
            let sign = d.chord(cid).unwrap().sign.to_i64();
            ell = ell.mul(&expr[arcs.over_arc[&cid]].pow(sign));
        }
    }
    let f = ell.coeff(&[j]);
    let f = i64::try_from(f).map_err(|_| Error::Unsupported("framing out of range".into()))?;
    let mj = TruncatedSeries::meridian(j, q);
    Ok(ell.mul(&mj.pow(-f)))
}

/// The welded Milnor invariant `mu(I)`.
pub fn milnor_mu(d: &GaussDiagram, index: &MilnorIndex) -> Result<BigInt> {
    let seq = &index.0;
    for &i in seq {
        if i > d.strand_count() {
            return Err(Error::IndexOutOfRange(alloc::format!(
                "strand {i} of {}",
                d.strand_count()
            )));
        }
    }
    let q = seq.len();
    let ell = longitude(d, seq[q - 1], q)?;
    let c = ell.coeff(&seq[..q - 1]);
    Ok(if q.is_multiple_of(2) { c } else { -c })
}

/// Convenience: `mu` over a slice.
pub fn mu(d: &GaussDiagram, seq: &[usize]) -> Result<BigInt> {
    milnor_mu(d, &MilnorIndex::new(seq.to_vec())?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::invariants::linking;

    #[test]
    fn trivial_longitudes() {
        let t = GaussDiagram::new_trivial(3).unwrap();
        for j in 1..=3 {
            assert_eq!(longitude(&t, j, 3).unwrap(), TruncatedSeries::one(3));
        }
        assert_eq!(mu(&t, &[1, 2]).unwrap(), BigInt::from(0));
        assert_eq!(mu(&t, &[1, 2, 3]).unwrap(), BigInt::from(0));
    }

    #[test]
    fn z12_longitude() {
        let z = catalog::z_surgery(1, 2, 2, false);
        let ell = longitude(&z, 2, 3).unwrap();
        assert_eq!(ell.coeff(&[]), BigInt::from(1));
        assert_eq!(ell.coeff(&[1]), BigInt::from(1));
        assert_eq!(
            longitude(&z, 2, 6),
            Err(crate::Error::Unsupported(
                "truncation degree above 5".into()
            ))
        );
    }

    #[test]
    fn mu_two_matches_linking_on_corpus() {
        for d in catalog::small_corpus() {
            let n = d.strand_count();
            for i in 1..=n {
                for j in 1..=n {
                    if i != j {
                        assert_eq!(
                            mu(&d, &[i, j]).unwrap(),
                            BigInt::from(linking(&d, i, j).unwrap()),
                            "mu({i}{j}) vs linking"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn stabilization_under_extra_iterations() {
        for d in catalog::small_corpus() {
            if d.strand_count() < 2 {
                continue;
            }
            let q = 4;
            for j in 1..=d.strand_count() {
                let a = longitude_with_iters(&d, j, q, q + 1).unwrap();
                let b = longitude_with_iters(&d, j, q, q + 3).unwrap();
                assert_eq!(
                    a.truncated_below(q),
                    b.truncated_below(q),
                    "coefficients below q must be stable"
                );
            }
        }
    }

    #[test]
    fn stabilization_under_larger_truncation() {
        // coefficients of words of length < q agree between truncations q and q+1
        for d in catalog::small_corpus() {
            if d.strand_count() != 2 || d.chord_count() == 0 {
                continue;
            }
            for j in 1..=2 {
                let q = 3;
                let a = longitude(&d, j, q).unwrap();
                let b = longitude(&d, j, q + 1).unwrap();
                assert_eq!(a.truncated_below(q), b.truncated_below(q), "strand {j}");
            }
        }
    }

    #[test]
    fn length_five_indices_compute_and_are_stable() {
        let d = catalog::gen_surgery(crate::GenName::TO1, &[], 1, 2)
            .stack(&catalog::z_surgery(1, 2, 2, false))
            .unwrap();
        let idx = [1usize, 2, 1, 2, 1];
        let v = mu(&d, &idx).unwrap();
        let a = longitude_with_iters(&d, 1, 5, 6).unwrap();
        let b = longitude_with_iters(&d, 1, 5, 8).unwrap();
        assert_eq!(a, b);
        // invariant under a kink insertion
        let k = crate::moves::apply_move(
            &d,
            &crate::moves::MoveSpec::R1Insert {
                strand: 1,
                at: 2,
                over_first: false,
                sign: crate::diagram::Sign::Neg,
            },
        )
        .unwrap();
        assert_eq!(mu(&k, &idx).unwrap(), v);
    }

    #[test]
    fn index_bounds() {
        let z = catalog::z_surgery(1, 2, 2, false);
        assert!(mu(&z, &[1, 3]).is_err());
        assert!(MilnorIndex::new(alloc::vec![1]).is_err());
        assert!(MilnorIndex::new(alloc::vec![1, 2, 1, 2, 1, 2]).is_err());
    }
}
