//! Finite-type degree testing by alternating sums over virtualization
//! subsets: an invariant `v` has degree `<= d` when for every set `S` of
//! `d + 1` classical crossings,
//!
//! ```text
//!   sum_{S' subset of S} (-1)^{|S'|} v(L_{S'}) = 0.
//! ```
//!
//! Subsets of size `d + 1` are enumerated exhaustively when the evaluation
//! count fits the budget, otherwise sampled uniformly with a fixed seed.

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::diagram::{ChordId, GaussDiagram};
use crate::error::{Error, Result};
use crate::invariants::Descriptor;
use crate::rng::SplitMix64;

/// Default evaluation budget: exhaustive for diagrams with <= 9 chords at
/// degree <= 3 within seconds.
pub const DEFAULT_BUDGET: u64 = 2_000_000;

/// Result of one alternating-sum test.
#[derive(Clone, Debug)]
pub struct FtReport {
    pub invariant: Descriptor,
    pub degree: usize,
    /// Number of `(d+1)`-subsets evaluated.
    pub subsets_tested: u64,
    pub exhaustive: bool,
    pub seed: u64,
    /// Largest absolute alternating sum seen (0 when the invariant passes).
    pub max_violation: BigInt,
    /// A subset witnessing a nonzero sum, if any.
    pub witness: Option<Vec<ChordId>>,
}

impl FtReport {
    pub fn passed(&self) -> bool {
        self.max_violation.is_zero()
    }

    pub fn to_json(&self) -> String {
        let witness = match &self.witness {
            None => "null".into(),
            Some(w) => {
                let parts: Vec<String> = w.iter().map(|c| alloc::format!("{}", c.0)).collect();
                alloc::format!("[{}]", parts.join(","))
            }
        };
        alloc::format!(
            "{{\"invariant\":\"{}\",\"degree\":{},\"subsets_tested\":{},\"exhaustive\":{},\"seed\":{},\"max_violation\":{},\"witness\":{}}}",
            self.invariant.key(),
            self.degree,
            self.subsets_tested,
            self.exhaustive,
            self.seed,
            self.max_violation,
            witness
        )
    }
}

fn binomial_u128(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let mut out: u128 = 1;
    for i in 0..k.min(n - k) {
        out = out.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    out
}

fn alternating_sum(d: &GaussDiagram, subset: &[ChordId], nu: &Descriptor) -> Result<BigInt> {
    let mut total = BigInt::zero();
    let m = subset.len();
    for mask in 0u32..(1 << m) {
        let chosen: Vec<ChordId> = (0..m)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| subset[i])
            .collect();
        let v = nu.eval(&d.virtualize(&chosen)?)?;
        if chosen.len().is_multiple_of(2) {
            total += v;
        } else {
            total -= v;
        }
    }
    Ok(total)
}

/// Test whether `nu` kills all alternating sums over `(degree + 1)`-subsets
/// of the chords of `d`.
pub fn ft_test(
    d: &GaussDiagram,
    nu: &Descriptor,
    degree: usize,
    budget: u64,
    seed: u64,
) -> Result<FtReport> {
    let ids = d.chord_ids();
    let size = degree + 1;
    if ids.len() < size {
        return Err(Error::Unsupported(alloc::format!(
            "need at least {size} chords, diagram has {}",
            ids.len()
        )));
    }
    let per_subset = 1u128 << size;
    let total_subsets = binomial_u128(ids.len() as u64, size as u64);
    let exhaustive = total_subsets.saturating_mul(per_subset) <= budget as u128;
    let mut report = FtReport {
        invariant: nu.clone(),
        degree,
        subsets_tested: 0,
        exhaustive,
        seed,
        max_violation: BigInt::zero(),
        witness: None,
    };
    let consider = |subset: &[ChordId], report: &mut FtReport| -> Result<()> {
        let s = alternating_sum(d, subset, nu)?;
        report.subsets_tested += 1;
        if s.abs() > report.max_violation {
            report.max_violation = s.abs();
            report.witness = Some(subset.to_vec());
        }
        Ok(())
    };
    if exhaustive {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let subset: Vec<ChordId> = idx.iter().map(|&i| ids[i]).collect();
            consider(&subset, &mut report)?;
            // next combination
            let mut k = size;
            loop {
                if k == 0 {
                    return Ok(report);
                }
                k -= 1;
                if idx[k] < ids.len() - (size - k) {
                    idx[k] += 1;
                    for j in k + 1..size {
                        idx[j] = idx[j - 1] + 1;
                    }
                    break;
                }
            }
        }
    } else {
        let mut rng = SplitMix64::new(seed);
        let samples = (budget / (per_subset as u64)).max(1);
        for _ in 0..samples {
            let mut pick: Vec<usize> = Vec::with_capacity(size);
            while pick.len() < size {
                let c = rng.below(ids.len() as u64) as usize;
                if !pick.contains(&c) {
                    pick.push(c);
                }
            }
            pick.sort_unstable();
            let subset: Vec<ChordId> = pick.iter().map(|&i| ids[i]).collect();
            consider(&subset, &mut report)?;
        }
        Ok(report)
    }
}

/// Smallest `d <= dmax` such that `ft_test` passes on every diagram of the
/// corpus; `dmax + 1` when none does.
pub fn degree_bound(
    corpus: &[GaussDiagram],
    nu: &Descriptor,
    dmax: usize,
    budget: u64,
    seed: u64,
) -> Result<usize> {
    'outer: for d in 0..=dmax {
        for diagram in corpus {
            if diagram.chord_count() < d + 1 {
                continue;
            }
            let r = ft_test(diagram, nu, d, budget, seed)?;
            if !r.passed() {
                continue 'outer;
            }
        }
        return Ok(d);
    }
    Ok(dmax + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn linking_is_degree_one() {
        let nu = Descriptor::Link(1, 2);
        for d in catalog::ft_corpus() {
            if d.chord_count() < 2 || d.strand_count() < 2 {
                continue;
            }
            let r = ft_test(&d, &nu, 1, DEFAULT_BUDGET, 1).unwrap();
            assert!(r.exhaustive);
            assert!(r.passed(), "violation {:?}", r.witness);
        }
    }

    #[test]
    fn linking_is_not_degree_zero() {
        let z = catalog::z_surgery(1, 2, 2, false);
        let r = ft_test(&z, &Descriptor::Link(1, 2), 0, DEFAULT_BUDGET, 1).unwrap();
        assert_eq!(r.max_violation, BigInt::from(1));
        assert_eq!(r.witness.as_ref().map(Vec::len), Some(1));
        assert!(!r.passed());
    }

    #[test]
    fn degree_bound_of_linking() {
        let corpus = catalog::ft_corpus();
        let b = degree_bound(&corpus, &Descriptor::Link(1, 2), 3, DEFAULT_BUDGET, 1).unwrap();
        assert_eq!(b, 1);
    }

    #[test]
    fn degree_bounds_of_closure_and_milnor_invariants() {
        let corpus = catalog::ft_corpus();
        let close = Descriptor::Close(crate::ClosureList::from_signed(&[1, 2]).unwrap(), 2);
        assert_eq!(
            degree_bound(&corpus, &close, 3, DEFAULT_BUDGET, 1).unwrap(),
            2
        );
        let mu123 = Descriptor::Mu(alloc::vec![1, 2, 3]);
        let three: Vec<_> = corpus
            .iter()
            .filter(|d| d.strand_count() == 3)
            .cloned()
            .collect();
        assert_eq!(
            degree_bound(&three, &mu123, 3, DEFAULT_BUDGET, 1).unwrap(),
            2
        );
    }

    #[test]
    fn sampling_is_deterministic() {
        let d = catalog::ft_corpus().remove(0);
        // force sampling with a tiny budget
        let a = ft_test(&d, &Descriptor::Link(1, 2), 1, 16, 7).unwrap();
        let b = ft_test(&d, &Descriptor::Link(1, 2), 1, 16, 7).unwrap();
        assert!(!a.exhaustive);
        assert_eq!(a.subsets_tested, b.subsets_tested);
        assert_eq!(a.max_violation, b.max_violation);
        assert_eq!(a.witness, b.witness);
    }

    #[test]
    fn too_few_chords_is_an_error() {
        let z = catalog::z_surgery(1, 2, 2, false);
        assert!(ft_test(&z, &Descriptor::Link(1, 2), 3, DEFAULT_BUDGET, 1).is_err());
    }

    #[test]
    fn report_json_shape() {
        let z = catalog::z_surgery(1, 2, 2, false);
        let r = ft_test(&z, &Descriptor::Link(1, 2), 0, DEFAULT_BUDGET, 9).unwrap();
        let j = r.to_json();
        assert!(j.contains("\"invariant\":\"LINK:1,2\""));
        assert!(j.contains("\"max_violation\":1"));
        assert!(j.contains("\"seed\":9"));
    }
}
