//! All named invariants behind one façade: welded linking numbers, closure
//! invariants `I_{R;k}`, the degree-2 combinations `phi, alpha, beta, gamma`,
//! the two-strand degree-3 combinations `gamma_1..gamma_3`, the closed
//! formula for `mu(123)`, and bundled invariant vectors.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::alexander::alphas_of_long_knot;
use crate::diagram::{ClosureList, GaussDiagram};
use crate::error::{Error, Result};
use crate::milnor::{milnor_mu, MilnorIndex};

/// Welded linking number `mu(ij)`: the signed count of chords passing over
/// from strand `i` to strand `j`.
pub fn linking(d: &GaussDiagram, i: usize, j: usize) -> Result<i64> {
    if i == j {
        return Err(Error::Unsupported("linking needs distinct strands".into()));
    }
    let n = d.strand_count();
    if i == 0 || j == 0 || i > n || j > n {
        return Err(Error::IndexOutOfRange(format!("strands ({i},{j}) of {n}")));
    }
    let strand_of = d.endpoint_strand();
    Ok(d.chords()
        .filter(|(_, c)| strand_of[&c.over] == i && strand_of[&c.under] == j)
        .map(|(_, c)| c.sign.to_i64())
        .sum())
}

/// Closure invariant `I_{R;k}(L) = alpha_k(Cl_R(L))`.
pub fn closure_invariant(d: &GaussDiagram, list: &ClosureList, k: usize) -> Result<BigInt> {
    if !(2..=16).contains(&k) {
        return Err(Error::Unsupported(format!("closure invariant order {k}")));
    }
    let closed = d.closure(list)?;
    let alphas = alphas_of_long_knot(&closed, k.max(2))?;
    Ok(alphas.alpha(k).clone())
}

fn cl(signed: &[i64]) -> ClosureList {
    ClosureList::from_signed(signed).expect("static list")
}

fn i2(d: &GaussDiagram, signed: &[i64]) -> Result<BigInt> {
    closure_invariant(d, &cl(signed), 2)
}

fn i3(d: &GaussDiagram, signed: &[i64]) -> Result<BigInt> {
    closure_invariant(d, &cl(signed), 3)
}

/// `phi_{i,j,k}`: the coefficient combination attached to `G_{i,j,k}`.
pub fn phi(d: &GaussDiagram, i: usize, j: usize, k: usize) -> Result<BigInt> {
    check_distinct(&[i, j, k])?;
    let (i, j, k) = (i as i64, j as i64, k as i64);
    Ok(
        i2(d, &[-j, i, k])? - i2(d, &[i, k])? - i2(d, &[-i, j])? - i2(d, &[-j, k])?
            + i2(d, &[i])?
            + i2(d, &[j])?
            + i2(d, &[k])?
            - BigInt::from(
                linking(d, j as usize, i as usize)? * linking(d, k as usize, i as usize)?,
            ),
    )
}

/// `alpha_{i,j} = I_{(i,j);2} - I_{(i);2} - I_{(j);2}`, the exponent of
/// `A_{i,j}` in the degree-2 normal form.
pub fn alpha2(d: &GaussDiagram, i: usize, j: usize) -> Result<BigInt> {
    check_distinct(&[i, j])?;
    let (i, j) = (i as i64, j as i64);
    Ok(i2(d, &[i, j])? - i2(d, &[i])? - i2(d, &[j])?)
}

/// `beta_{i,j} = I_{(ī,j);2} - I_{(i);2} - I_{(j);2}`.
pub fn beta2(d: &GaussDiagram, i: usize, j: usize) -> Result<BigInt> {
    check_distinct(&[i, j])?;
    let (i, j) = (i as i64, j as i64);
    Ok(i2(d, &[-i, j])? - i2(d, &[i])? - i2(d, &[j])?)
}

/// `gamma_{i,j} = I_{(i,j);2} - I_{(i,j̄);2}`.
pub fn gamma2(d: &GaussDiagram, i: usize, j: usize) -> Result<BigInt> {
    check_distinct(&[i, j])?;
    let (i, j) = (i as i64, j as i64);
    Ok(i2(d, &[i, j])? - i2(d, &[i, -j])?)
}

/// Which length-4 Milnor invariants feed the two-strand degree-3
/// combinations and the w4 exponent system. Both candidate pairs are
/// genuine invariants and both close the round-trip, so the choice is a
/// switch: `mu(1121)/mu(2212)`, whose differences give the exponents
/// directly, or `mu(1211)/mu(2122)`, inverted through the rank-7
/// evaluation matrix.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum MuVariant {
    /// `mu(1121)` and `mu(2212)`: their differences are the exponents.
    #[default]
    Direct,
    /// `mu(1211)` and `mu(2122)`: inverted through the evaluation matrix.
    Matrix,
}

impl MuVariant {
    pub fn first_index(self) -> [usize; 4] {
        match self {
            MuVariant::Direct => [1, 1, 2, 1],
            MuVariant::Matrix => [1, 2, 1, 1],
        }
    }

    pub fn second_index(self) -> [usize; 4] {
        match self {
            MuVariant::Direct => [2, 2, 1, 2],
            MuVariant::Matrix => [2, 1, 2, 2],
        }
    }
}

fn mu4(d: &GaussDiagram, idx: [usize; 4]) -> Result<BigInt> {
    milnor_mu(d, &MilnorIndex::new(idx.to_vec())?)
}

fn check_two_strands(d: &GaussDiagram) -> Result<()> {
    if d.strand_count() != 2 {
        return Err(Error::WrongStrandCount {
            expected: 2,
            got: d.strand_count(),
        });
    }
    Ok(())
}

/// `gamma_1 = -I_{(1,2);3} + I_{(1);3} + I_{(2);3} + mu(1121)` (two strands).
pub fn gamma41(d: &GaussDiagram, variant: MuVariant) -> Result<BigInt> {
    check_two_strands(d)?;
    Ok(-i3(d, &[1, 2])? + i3(d, &[1])? + i3(d, &[2])? + mu4(d, variant.first_index())?)
}

/// `gamma_2 = I_{(2̄,1);3} - I_{(1);3} - I_{(2);3} + I_{(1);2} + I_{(2);2}`.
pub fn gamma42(d: &GaussDiagram) -> Result<BigInt> {
    check_two_strands(d)?;
    Ok(i3(d, &[-2, 1])? - i3(d, &[1])? - i3(d, &[2])? + i2(d, &[1])? + i2(d, &[2])?)
}

/// `gamma_3 = -I_{(2,1);3} + I_{(2̄,1);3} + mu(2212)`.
pub fn gamma43(d: &GaussDiagram, variant: MuVariant) -> Result<BigInt> {
    check_two_strands(d)?;
    Ok(-i3(d, &[2, 1])? + i3(d, &[-2, 1])? + mu4(d, variant.second_index())?)
}

/// The right-hand side of the closed formula for `mu(123)` (three strands).
pub fn mu123_formula(d: &GaussDiagram) -> Result<BigInt> {
    if d.strand_count() != 3 {
        return Err(Error::WrongStrandCount {
            expected: 3,
            got: d.strand_count(),
        });
    }
    let mu = |a: usize, b: usize| -> Result<BigInt> { Ok(BigInt::from(linking(d, a, b)?)) };
    Ok(
        mu(2, 1)? * mu(1, 3)? - mu(1, 2)? * mu(2, 3)? - mu(1, 3)? * mu(2, 3)? + i2(d, &[-1, 3, 2])?
            - i2(d, &[3, 2])?
            - i2(d, &[-3, 1])?
            - i2(d, &[-1, 2])?
            + i2(d, &[3])?
            + i2(d, &[1])?
            + i2(d, &[2])?,
    )
}

fn check_distinct(ix: &[usize]) -> Result<()> {
    for (a, x) in ix.iter().enumerate() {
        if *x == 0 {
            return Err(Error::IndexOutOfRange("strand index 0".into()));
        }
        for y in &ix[a + 1..] {
            if x == y {
                return Err(Error::Unsupported(
                    "indices must be pairwise distinct".into(),
                ));
            }
        }
    }
    Ok(())
}

/// Descriptor of one invariant in a vector (also the `ft-check` target).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Descriptor {
    Link(usize, usize),
    Close(ClosureList, usize),
    Phi(usize, usize, usize),
    Alpha2(usize, usize),
    Beta2(usize, usize),
    Gamma2(usize, usize),
    Gamma41,
    Gamma42,
    Gamma43,
    Mu(Vec<usize>),
}

impl Descriptor {
    /// Stable key naming: `LINK:i,j`, `CLOSE:[1,-2]:2`, `PHI:i,j,k`,
    /// `MU:1,1,2,1`, `GAMMA41`, ...
    pub fn key(&self) -> String {
        match self {
            Descriptor::Link(i, j) => format!("LINK:{i},{j}"),
            Descriptor::Close(l, k) => format!("CLOSE:{}:{k}", l.key_string()),
            Descriptor::Phi(i, j, k) => format!("PHI:{i},{j},{k}"),
            Descriptor::Alpha2(i, j) => format!("ALPHA2:{i},{j}"),
            Descriptor::Beta2(i, j) => format!("BETA2:{i},{j}"),
            Descriptor::Gamma2(i, j) => format!("GAMMA2:{i},{j}"),
            Descriptor::Gamma41 => "GAMMA41".into(),
            Descriptor::Gamma42 => "GAMMA42".into(),
            Descriptor::Gamma43 => "GAMMA43".into(),
            Descriptor::Mu(seq) => {
                let parts: Vec<String> = seq.iter().map(|i| i.to_string()).collect();
                format!("MU:{}", parts.join(","))
            }
        }
    }

    pub fn parse(s: &str) -> Result<Descriptor> {
        let (kind, rest) = s.split_once(':').unwrap_or((s, ""));
        let ints = |t: &str| -> Result<Vec<usize>> {
            t.split(',')
                .map(|p| {
                    p.trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad index `{p}`")))
                })
                .collect()
        };
        Ok(match kind {
            "LINK" => {
                let v = ints(rest)?;
                if v.len() != 2 {
                    return Err(Error::Parse("LINK takes two indices".into()));
                }
                Descriptor::Link(v[0], v[1])
            }
            "CLOSE" => {
                let (list, k) = rest
                    .rsplit_once(':')
                    .ok_or_else(|| Error::Parse("CLOSE:[list]:k".into()))?;
                Descriptor::Close(
                    ClosureList::parse(list)?,
                    k.parse()
                        .map_err(|_| Error::Parse(format!("bad order `{k}`")))?,
                )
            }
            "PHI" => {
                let v = ints(rest)?;
                if v.len() != 3 {
                    return Err(Error::Parse("PHI takes three indices".into()));
                }
                Descriptor::Phi(v[0], v[1], v[2])
            }
            "ALPHA2" => {
                let v = ints(rest)?;
                Descriptor::Alpha2(v[0], v[1])
            }
            "BETA2" => {
                let v = ints(rest)?;
                Descriptor::Beta2(v[0], v[1])
            }
            "GAMMA2" => {
                let v = ints(rest)?;
                Descriptor::Gamma2(v[0], v[1])
            }
            "GAMMA41" => Descriptor::Gamma41,
            "GAMMA42" => Descriptor::Gamma42,
            "GAMMA43" => Descriptor::Gamma43,
            "MU" => Descriptor::Mu(ints(rest)?),
            _ => return Err(Error::Parse(format!("unknown invariant `{s}`"))),
        })
    }

    /// Evaluate this invariant on a diagram.
    pub fn eval(&self, d: &GaussDiagram) -> Result<BigInt> {
        match self {
            Descriptor::Link(i, j) => Ok(BigInt::from(linking(d, *i, *j)?)),
            Descriptor::Close(l, k) => closure_invariant(d, l, *k),
            Descriptor::Phi(i, j, k) => phi(d, *i, *j, *k),
            Descriptor::Alpha2(i, j) => alpha2(d, *i, *j),
            Descriptor::Beta2(i, j) => beta2(d, *i, *j),
            Descriptor::Gamma2(i, j) => gamma2(d, *i, *j),
            Descriptor::Gamma41 => gamma41(d, MuVariant::default()),
            Descriptor::Gamma42 => gamma42(d),
            Descriptor::Gamma43 => gamma43(d, MuVariant::default()),
            Descriptor::Mu(seq) => milnor_mu(d, &MilnorIndex::new(seq.clone())?),
        }
    }
}

/// All configured invariant values of a diagram at a given degree bound:
/// the equivalence-class fingerprint.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InvariantVector {
    pub degree: usize,
    pub entries: BTreeMap<Descriptor, BigInt>,
}

impl InvariantVector {
    /// Stable JSON emission with the canonical key names.
    pub fn to_json(&self) -> String {
        let mut s = format!("{{\"degree\":{},\"entries\":{{", self.degree);
        for (k, (d, v)) in self.entries.iter().enumerate() {
            if k > 0 {
                s.push(',');
            }
            s.push_str(&format!("\"{}\":{}", d.key(), v));
        }
        s.push_str("}}");
        s
    }

    pub fn is_zero(&self) -> bool {
        self.entries.values().all(|v| v.is_zero())
    }

    /// Entries differing between two vectors.
    pub fn diff(&self, other: &InvariantVector) -> Vec<(Descriptor, BigInt, BigInt)> {
        let mut out = Vec::new();
        for (d, v) in &self.entries {
            let w = other.entries.get(d).cloned().unwrap_or_else(BigInt::zero);
            if *v != w {
                out.push((d.clone(), v.clone(), w));
            }
        }
        for (d, w) in &other.entries {
            if !self.entries.contains_key(d) && !w.is_zero() {
                out.push((d.clone(), BigInt::zero(), w.clone()));
            }
        }
        out
    }
}

/// The classifying family at each degree.
///
/// * degree 1: all linking numbers;
/// * degree 2: adds the closure invariants of the degree-2 classification:
///   `I_{(i);2}`, `I_{(i,j);2}`, `I_{(i,j̄);2}`, `I_{(ī,j);2}` over ordered
///   pairs, and `I_{(j̄,i,k);2}` over triples with `j < k`;
/// * degree 3 (two strands only): adds the degree-3 list
///   `I_{(1,2);3}, I_{(2,1);3}, I_{(2̄,1);3}, I_{(1);3}, I_{(2);3}` and the
///   two length-4 Milnor invariants of the configured [`MuVariant`].
pub fn family(n: usize, degree: usize, variant: MuVariant) -> Result<Vec<Descriptor>> {
    if !(1..=3).contains(&degree) {
        return Err(Error::Unsupported(format!("degree {degree}")));
    }
    if degree == 3 && n != 2 {
        return Err(Error::Unsupported(
            "degree 3 classification needs two strands".into(),
        ));
    }
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                out.push(Descriptor::Link(i, j));
            }
        }
    }
    if degree >= 2 {
        for i in 1..=n as i64 {
            out.push(Descriptor::Close(cl(&[i]), 2));
        }
        for i in 1..=n as i64 {
            for j in 1..=n as i64 {
                if i == j {
                    continue;
                }
                out.push(Descriptor::Close(cl(&[i, j]), 2));
                out.push(Descriptor::Close(cl(&[i, -j]), 2));
                out.push(Descriptor::Close(cl(&[-i, j]), 2));
            }
        }
        for i in 1..=n as i64 {
            for j in 1..=n as i64 {
                for k in j + 1..=n as i64 {
                    if i == j || i == k {
                        continue;
                    }
                    out.push(Descriptor::Close(cl(&[-j, i, k]), 2));
                }
            }
        }
    }
    if degree >= 3 {
        for list in [&[1, 2][..], &[2, 1], &[-2, 1], &[1], &[2]] {
            out.push(Descriptor::Close(cl(list), 3));
        }
        out.push(Descriptor::Mu(variant.first_index().to_vec()));
        out.push(Descriptor::Mu(variant.second_index().to_vec()));
    }
    Ok(out)
}

/// The complete classifying family of `d` at degree `degree`, evaluated.
pub fn invariant_vector(d: &GaussDiagram, degree: usize) -> Result<InvariantVector> {
    invariant_vector_with(d, degree, MuVariant::default())
}

pub fn invariant_vector_with(
    d: &GaussDiagram,
    degree: usize,
    variant: MuVariant,
) -> Result<InvariantVector> {
    let fam = family(d.strand_count(), degree, variant)?;
    let mut entries = BTreeMap::new();
    for desc in fam {
        let v = desc.eval(d)?;
        entries.insert(desc, v);
    }
    Ok(InvariantVector { degree, entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn linking_basics() {
        let z = catalog::z_surgery(1, 2, 2, false);
        assert_eq!(linking(&z, 1, 2).unwrap(), 1);
        assert_eq!(linking(&z, 2, 1).unwrap(), 0);
        let t = GaussDiagram::new_trivial(2).unwrap();
        assert_eq!(linking(&t, 1, 2).unwrap(), 0);
        assert!(linking(&z, 1, 1).is_err());
        // stack additivity
        let zz = z.stack(&catalog::z_surgery(1, 2, 2, true)).unwrap();
        assert_eq!(linking(&zz, 1, 2).unwrap(), 0);
    }

    #[test]
    fn section4_pair_matrix() {
        // columns A_{1,2}, B_{1,2}, C_{1,2}, E_1, E_2 against the three rows
        let cols = [
            catalog::gen_surgery(crate::GenName::A, &[1, 2], 1, 2),
            catalog::gen_surgery(crate::GenName::B, &[1, 2], 1, 2),
            catalog::gen_surgery(crate::GenName::C, &[1, 2], 1, 2),
            catalog::gen_surgery(crate::GenName::E, &[1], 1, 2),
            catalog::gen_surgery(crate::GenName::E, &[2], 1, 2),
        ];
        let want = [
            [1, 0, -1, 1, 1], // I_{(1,2̄);2}
            [0, 1, 0, 1, 1],  // I_{(1̄,2);2}
            [1, 0, 0, 1, 1],  // I_{(1,2);2}
        ];
        let rows: [&[i64]; 3] = [&[1, -2], &[-1, 2], &[1, 2]];
        for (r, list) in rows.iter().enumerate() {
            for (c, d) in cols.iter().enumerate() {
                assert_eq!(i2(d, list).unwrap(), big(want[r][c]), "row {r} col {c}");
            }
        }
    }

    #[test]
    fn e_generator_diagonal() {
        let e1 = catalog::gen_surgery(crate::GenName::E, &[1], 1, 2);
        assert_eq!(i2(&e1, &[1]).unwrap(), big(1));
        assert_eq!(i2(&e1, &[2]).unwrap(), big(0));
        let e1m = catalog::gen_surgery(crate::GenName::E, &[1], -1, 2);
        assert_eq!(i2(&e1m, &[1]).unwrap(), big(-1));
    }

    #[test]
    fn g_display_values() {
        let g = catalog::gen_surgery(crate::GenName::G, &[1, 2, 3], 1, 3);
        assert_eq!(i2(&g, &[-2, 1, 3]).unwrap(), big(1));
        assert_eq!(i2(&g, &[-3, 1, 2]).unwrap(), big(-1));
        for list in [
            &[1, 2, 3][..],
            &[1, 3, 2],
            &[-1, 2, 3],
            &[-1, 3, 2],
            &[1, -2, 3],
            &[-1, -3, -2],
        ] {
            assert_eq!(i2(&g, list).unwrap(), big(0), "list {list:?}");
        }
    }

    #[test]
    fn notation_combination_values() {
        let a12 = catalog::gen_surgery(crate::GenName::A, &[1, 2], 1, 2);
        assert_eq!(alpha2(&a12, 1, 2).unwrap(), big(1));
        let c12 = catalog::gen_surgery(crate::GenName::C, &[1, 2], 1, 2);
        assert_eq!(gamma2(&c12, 1, 2).unwrap(), big(1));
        assert_eq!(i2(&c12, &[1, -2]).unwrap(), big(-1));
        let g = catalog::gen_surgery(crate::GenName::G, &[1, 2, 3], 1, 3);
        assert_eq!(phi(&g, 1, 2, 3).unwrap(), big(1));
        assert!(phi(&g, 1, 2, 2).is_err());
    }

    #[test]
    fn gamma4_combinations_on_generators() {
        let t = GaussDiagram::new_trivial(2).unwrap();
        for v in [MuVariant::Direct, MuVariant::Matrix] {
            assert_eq!(gamma41(&t, v).unwrap(), big(0));
            assert_eq!(gamma43(&t, v).unwrap(), big(0));
        }
        assert_eq!(gamma42(&t).unwrap(), big(0));

        // F_1 column: I_(2b,1);3 = 1, I_(1);3 = 1, I_(2);3 = 0, degree-2 rows 0
        let f1 = catalog::gen_surgery(crate::GenName::F, &[1], 1, 2);
        assert_eq!(gamma42(&f1).unwrap(), big(0));

        // TO_1: gamma_1 = -I_(1,2);3 + mu-term: -1 + 1 = 0 under the
        // direct pair, -1 + (-2) = -3 under the matrix pair
        let to1 = catalog::gen_surgery(crate::GenName::TO1, &[], 1, 2);
        assert_eq!(gamma41(&to1, MuVariant::Direct).unwrap(), big(0));
        assert_eq!(gamma41(&to1, MuVariant::Matrix).unwrap(), big(-3));
        assert!(gamma41(&GaussDiagram::new_trivial(3).unwrap(), MuVariant::Direct).is_err());
    }

    #[test]
    fn mu123_formula_on_anchors() {
        let t = GaussDiagram::new_trivial(3).unwrap();
        assert_eq!(mu123_formula(&t).unwrap(), big(0));
        let g312 = catalog::gen_surgery(crate::GenName::G, &[3, 1, 2], 1, 3);
        assert_eq!(mu123_formula(&g312).unwrap(), big(1));
        assert_eq!(crate::milnor::mu(&g312, &[1, 2, 3]).unwrap(), big(1));
        assert!(mu123_formula(&GaussDiagram::new_trivial(2).unwrap()).is_err());
    }

    #[test]
    fn vector_families() {
        let z = catalog::z_surgery(1, 2, 2, false);
        let v = invariant_vector(&z, 1).unwrap();
        assert_eq!(v.entries.len(), 2);
        assert_eq!(v.entries[&Descriptor::Link(1, 2)], big(1));
        assert_eq!(v.entries[&Descriptor::Link(2, 1)], big(0));

        let t = GaussDiagram::new_trivial(2).unwrap();
        assert!(invariant_vector(&t, 2).unwrap().is_zero());
        assert!(invariant_vector(&t, 3).unwrap().is_zero());
        assert!(invariant_vector(&GaussDiagram::new_trivial(3).unwrap(), 3).is_err());
        assert!(invariant_vector(&t, 4).is_err());
    }

    #[test]
    fn json_stability() {
        let z = catalog::z_surgery(1, 2, 2, false);
        let v = invariant_vector(&z, 1).unwrap();
        assert_eq!(
            v.to_json(),
            "{\"degree\":1,\"entries\":{\"LINK:1,2\":1,\"LINK:2,1\":0}}"
        );
    }

    #[test]
    fn descriptor_keys_round_trip() {
        let descs = [
            Descriptor::Link(1, 2),
            Descriptor::Close(cl(&[1, -2]), 2),
            Descriptor::Phi(1, 2, 3),
            Descriptor::Alpha2(1, 2),
            Descriptor::Gamma41,
            Descriptor::Mu(alloc::vec![1, 1, 2, 1]),
        ];
        for d in descs {
            assert_eq!(Descriptor::parse(&d.key()).unwrap(), d);
        }
        assert_eq!(
            Descriptor::parse("CLOSE:[1,-2]:2").unwrap().key(),
            "CLOSE:[1,-2]:2"
        );
        assert!(Descriptor::parse("BOGUS:1").is_err());
    }
}
