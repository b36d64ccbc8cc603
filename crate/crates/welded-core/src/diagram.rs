//! Gauss-diagram representation of welded string links and the structural
//! operations on it: stacking, reversal, deletion, closure, virtualization.
//!
//! Strands are numbered `1..=n` and carry ordered endpoint sequences (the
//! order along the strand orientation). Every endpoint belongs to exactly one
//! chord slot. Virtual crossings are never stored: in the Gauss-diagram model
//! of welded objects they carry no information and the Detour move is free.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Opaque endpoint token; ordering along a strand is carried solely by the
/// strand sequences, never by the token value.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct EndpointId(pub u32);

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ChordId(pub u32);

/// Sign of a classical crossing.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn to_i64(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Chord {
    pub over: EndpointId,
    pub under: EndpointId,
    pub sign: Sign,
}

/// Which slot of its chord an endpoint occupies.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Role {
    Over,
    Under,
}

/// One entry of a closure list: a strand index, possibly overlined (reversed).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ClosureEntry {
    pub index: usize,
    pub reversed: bool,
}

/// Sequence of pairwise-distinct, possibly overlined strand indices.
///
/// Any length in `1..=n` is allowed: the classifying invariants need
/// full-length closures as well as proper sublists.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ClosureList {
    entries: Vec<ClosureEntry>,
}

impl ClosureList {
    pub fn new(entries: Vec<ClosureEntry>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidDiagram(
                "closure list must be nonempty".into(),
            ));
        }
        let mut seen = BTreeSet::new();
        for e in &entries {
            if !seen.insert(e.index) {
                return Err(Error::InvalidDiagram(format!(
                    "closure list repeats strand {}",
                    e.index
                )));
            }
        }
        Ok(ClosureList { entries })
    }

    /// Signed-index shorthand: `&[1, -2]` means `(1, 2̄)`.
    pub fn from_signed(ids: &[i64]) -> Result<Self> {
        let entries = ids
            .iter()
            .map(|&v| {
                if v == 0 {
                    Err(Error::InvalidDiagram(
                        "strand index 0 in closure list".into(),
                    ))
                } else {
                    Ok(ClosureEntry {
                        index: v.unsigned_abs() as usize,
                        reversed: v < 0,
                    })
                }
            })
            .collect::<Result<Vec<_>>>()?;
        ClosureList::new(entries)
    }

    pub fn entries(&self) -> &[ClosureEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Stable text form: comma-separated signed indices, e.g. `[1,-2]`.
    pub fn key_string(&self) -> String {
        let mut s = String::from("[");
        for (k, e) in self.entries.iter().enumerate() {
            if k > 0 {
                s.push(',');
            }
            if e.reversed {
                s.push('-');
            }
            s.push_str(&e.index.to_string());
        }
        s.push(']');
        s
    }

    pub fn parse(text: &str) -> Result<Self> {
        let inner = text.trim().trim_start_matches('[').trim_end_matches(']');
        let ids = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad closure entry `{p}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        ClosureList::from_signed(&ids)
    }
}

/// Immutable Gauss diagram of an `n`-strand welded string link.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GaussDiagram {
    strands: Vec<Vec<EndpointId>>,
    chords: BTreeMap<ChordId, Chord>,
}

impl GaussDiagram {
    /// The trivial diagram of `n` intervals, no crossing. Rejects `n == 0`.
    pub fn new_trivial(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidDiagram(
                "strand count must be positive".into(),
            ));
        }
        Ok(GaussDiagram {
            strands: alloc::vec![Vec::new(); n],
            chords: BTreeMap::new(),
        })
    }

    /// Build and validate a diagram from raw parts.
    pub fn new(strands: Vec<Vec<EndpointId>>, chords: BTreeMap<ChordId, Chord>) -> Result<Self> {
        let d = GaussDiagram { strands, chords };
        d.validate()?;
        Ok(d)
    }

    fn validate(&self) -> Result<()> {
        if self.strands.is_empty() {
            return Err(Error::InvalidDiagram(
                "strand count must be positive".into(),
            ));
        }
        let mut seen: BTreeSet<EndpointId> = BTreeSet::new();
        for s in &self.strands {
            for &e in s {
                if !seen.insert(e) {
                    return Err(Error::InvalidDiagram(format!(
                        "endpoint {e:?} occurs twice"
                    )));
                }
            }
        }
        let mut used: BTreeSet<EndpointId> = BTreeSet::new();
        for (id, c) in &self.chords {
            if c.over == c.under {
                return Err(Error::InvalidDiagram(format!(
                    "chord {id:?} has equal endpoints"
                )));
            }
            for e in [c.over, c.under] {
                if !seen.contains(&e) {
                    return Err(Error::InvalidDiagram(format!(
                        "chord {id:?} references endpoint {e:?} not on any strand"
                    )));
                }
                if !used.insert(e) {
                    return Err(Error::InvalidDiagram(format!(
                        "endpoint {e:?} used by more than one chord slot"
                    )));
                }
            }
        }
        if used.len() != seen.len() {
            return Err(Error::InvalidDiagram(
                "every strand endpoint must occur in exactly one chord slot".into(),
            ));
        }
        Ok(())
    }

    pub fn strand_count(&self) -> usize {
        self.strands.len()
    }

    pub fn chord_count(&self) -> usize {
        self.chords.len()
    }

    /// Endpoint sequence of strand `i` (1-based), in orientation order.
    pub fn strand(&self, i: usize) -> Result<&[EndpointId]> {
        self.check_strand(i)?;
        Ok(&self.strands[i - 1])
    }

    pub fn chords(&self) -> impl Iterator<Item = (ChordId, &Chord)> {
        self.chords.iter().map(|(id, c)| (*id, c))
    }

    pub fn chord(&self, id: ChordId) -> Option<&Chord> {
        self.chords.get(&id)
    }

    pub fn chord_ids(&self) -> Vec<ChordId> {
        self.chords.keys().copied().collect()
    }

    fn check_strand(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.strands.len() {
            return Err(Error::IndexOutOfRange(format!(
                "strand {i} of {}",
                self.strands.len()
            )));
        }
        Ok(())
    }

    /// Strand (1-based) carrying each endpoint.
    pub fn endpoint_strand(&self) -> BTreeMap<EndpointId, usize> {
        let mut m = BTreeMap::new();
        for (si, s) in self.strands.iter().enumerate() {
            for &e in s {
                m.insert(e, si + 1);
            }
        }
        m
    }

    /// Chord and role of each endpoint.
    pub fn endpoint_info(&self) -> BTreeMap<EndpointId, (ChordId, Role)> {
        let mut m = BTreeMap::new();
        for (&id, c) in &self.chords {
            m.insert(c.over, (id, Role::Over));
            m.insert(c.under, (id, Role::Under));
        }
        m
    }

    fn fresh_base(&self) -> u32 {
        self.strands
            .iter()
            .flat_map(|s| s.iter())
            .map(|e| e.0)
            .max()
            .map_or(0, |m| m + 1)
    }

    /// Stacking product: strand `i` of the result is strand `i` of `self`
    /// followed by strand `i` of `other`; chords are disjointly unioned with
    /// freshened identifiers.
    pub fn stack(&self, other: &GaussDiagram) -> Result<GaussDiagram> {
        if self.strand_count() != other.strand_count() {
            return Err(Error::WrongStrandCount {
                expected: self.strand_count(),
                got: other.strand_count(),
            });
        }
        let base = self.fresh_base();
        let cbase = self.chords.keys().map(|c| c.0).max().map_or(0, |m| m + 1);
        let mut strands = self.strands.clone();
        for (i, s) in other.strands.iter().enumerate() {
            strands[i].extend(s.iter().map(|e| EndpointId(e.0 + base)));
        }
        let mut chords = self.chords.clone();
        for (k, (_, c)) in other.chords.iter().enumerate() {
            chords.insert(
                ChordId(cbase + k as u32),
                Chord {
                    over: EndpointId(c.over.0 + base),
                    under: EndpointId(c.under.0 + base),
                    sign: c.sign,
                },
            );
        }
        Ok(GaussDiagram { strands, chords })
    }

    /// Reverse the orientation of strand `i`: its endpoint sequence is
    /// reversed and every chord with exactly one endpoint on strand `i` has
    /// its sign negated. Over/under roles never change.
    pub fn reverse_component(&self, i: usize) -> Result<GaussDiagram> {
        self.check_strand(i)?;
        let on: BTreeSet<EndpointId> = self.strands[i - 1].iter().copied().collect();
        let mut strands = self.strands.clone();
        strands[i - 1].reverse();
        let chords = self
            .chords
            .iter()
            .map(|(&id, c)| {
                let hits = on.contains(&c.over) as u8 + on.contains(&c.under) as u8;
                let sign = if hits == 1 { c.sign.flip() } else { c.sign };
                (id, Chord { sign, ..*c })
            })
            .collect();
        Ok(GaussDiagram { strands, chords })
    }

    /// Reversal in the sense of arrow calculus, used by [`Self::closure`]:
    /// a chord's sign flips exactly when its under endpoint lies on the
    /// reversed strand (head reversal carries a bead; tail reversal is free).
    fn reverse_for_closure(&self, i: usize) -> Result<GaussDiagram> {
        self.check_strand(i)?;
        let on: BTreeSet<EndpointId> = self.strands[i - 1].iter().copied().collect();
        let mut strands = self.strands.clone();
        strands[i - 1].reverse();
        let chords = self
            .chords
            .iter()
            .map(|(&id, c)| {
                let sign = if on.contains(&c.under) {
                    c.sign.flip()
                } else {
                    c.sign
                };
                (id, Chord { sign, ..*c })
            })
            .collect();
        Ok(GaussDiagram { strands, chords })
    }

    /// Remove strand `i` along with every chord touching it; remaining
    /// strands are renumbered preserving order.
    pub fn delete_component(&self, i: usize) -> Result<GaussDiagram> {
        self.check_strand(i)?;
        if self.strand_count() == 1 {
            return Err(Error::InvalidDiagram(
                "cannot delete the only strand".into(),
            ));
        }
        let on: BTreeSet<EndpointId> = self.strands[i - 1].iter().copied().collect();
        let dead: BTreeSet<EndpointId> = self
            .chords
            .values()
            .filter(|c| on.contains(&c.over) || on.contains(&c.under))
            .flat_map(|c| [c.over, c.under])
            .collect();
        let mut strands = Vec::with_capacity(self.strands.len() - 1);
        for (si, s) in self.strands.iter().enumerate() {
            if si + 1 == i {
                continue;
            }
            strands.push(s.iter().copied().filter(|e| !dead.contains(e)).collect());
        }
        let chords = self
            .chords
            .iter()
            .filter(|(_, c)| !dead.contains(&c.over))
            .map(|(&id, c)| (id, *c))
            .collect();
        Ok(GaussDiagram { strands, chords })
    }

    /// Close the diagram along the list `R`: delete unlisted components,
    /// reverse the flagged ones, then concatenate the listed strands in list
    /// order into one strand. The connecting arcs cross only virtually and
    /// contribute nothing.
    pub fn closure(&self, list: &ClosureList) -> Result<GaussDiagram> {
        for e in list.entries() {
            self.check_strand(e.index)?;
        }
        let keep: BTreeSet<usize> = list.entries().iter().map(|e| e.index).collect();
        let mut d = self.clone();
        for i in (1..=self.strand_count()).rev() {
            if !keep.contains(&i) {
                d = d.delete_component(i)?;
            }
        }
        // Position of each kept original index after order-preserving renumbering.
        let order: Vec<usize> = {
            let mut v: Vec<usize> = keep.iter().copied().collect();
            v.sort_unstable();
            v
        };
        let pos = |orig: usize| order.iter().position(|&x| x == orig).unwrap() + 1;
        for e in list.entries() {
            if e.reversed {
                d = d.reverse_for_closure(pos(e.index))?;
            }
        }
        let mut strand = Vec::new();
        for e in list.entries() {
            strand.extend_from_slice(&d.strands[pos(e.index) - 1]);
        }
        Ok(GaussDiagram {
            strands: alloc::vec![strand],
            chords: d.chords,
        })
    }

    /// Replace the classical crossings in `ids` by virtual ones: in the Gauss
    /// model, delete those chords.
    pub fn virtualize(&self, ids: &[ChordId]) -> Result<GaussDiagram> {
        let mut dead = BTreeSet::new();
        for id in ids {
            let c = self
                .chords
                .get(id)
                .ok_or_else(|| Error::IndexOutOfRange(format!("unknown chord {id:?}")))?;
            dead.insert(c.over);
            dead.insert(c.under);
        }
        let idset: BTreeSet<ChordId> = ids.iter().copied().collect();
        let strands = self
            .strands
            .iter()
            .map(|s| s.iter().copied().filter(|e| !dead.contains(e)).collect())
            .collect();
        let chords = self
            .chords
            .iter()
            .filter(|(id, _)| !idset.contains(id))
            .map(|(&id, c)| (id, *c))
            .collect();
        Ok(GaussDiagram { strands, chords })
    }

    /// Canonical form for equality up to chord renaming: per strand, the
    /// sequence of (first-mention chord index, role, sign).
    pub fn canonical_key(&self) -> Vec<Vec<(u32, Role, Sign)>> {
        let info = self.endpoint_info();
        let mut names: BTreeMap<ChordId, u32> = BTreeMap::new();
        let mut out = Vec::with_capacity(self.strands.len());
        for s in &self.strands {
            let mut row = Vec::with_capacity(s.len());
            for e in s {
                let (cid, role) = info[e];
                let next = names.len() as u32;
                let idx = *names.entry(cid).or_insert(next);
                row.push((idx, role, self.chords[&cid].sign));
            }
            out.push(row);
        }
        out
    }

    /// Structural equality up to chord renaming.
    pub fn same_diagram(&self, other: &GaussDiagram) -> bool {
        self.strand_count() == other.strand_count() && self.canonical_key() == other.canonical_key()
    }

    /// Internal constructor for modules in this crate that build diagrams
    /// they know to be valid.
    pub(crate) fn from_parts_unchecked(
        strands: Vec<Vec<EndpointId>>,
        chords: BTreeMap<ChordId, Chord>,
    ) -> GaussDiagram {
        GaussDiagram { strands, chords }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn trivial_diagram() {
        let d = GaussDiagram::new_trivial(2).unwrap();
        assert_eq!(d.strand_count(), 2);
        assert_eq!(d.chord_count(), 0);
        assert!(GaussDiagram::new_trivial(0).is_err());
    }

    #[test]
    fn stack_unit_laws() {
        let z = catalog::z_surgery(1, 2, 2, false);
        let triv = GaussDiagram::new_trivial(2).unwrap();
        assert!(z.stack(&triv).unwrap().same_diagram(&z));
        assert!(triv.stack(&z).unwrap().same_diagram(&z));
        let zz = z.stack(&z).unwrap();
        assert_eq!(zz.chord_count(), 2);
        assert!(triv.stack(&GaussDiagram::new_trivial(3).unwrap()).is_err());
    }

    #[test]
    fn stack_associative_up_to_renaming() {
        let a = catalog::z_surgery(1, 2, 2, false);
        let b = catalog::z_surgery(2, 1, 2, true);
        let c = catalog::z_surgery(1, 2, 2, true);
        let l = a.stack(&b).unwrap().stack(&c).unwrap();
        let r = a.stack(&b.stack(&c).unwrap()).unwrap();
        assert!(l.same_diagram(&r));
    }

    #[test]
    fn reverse_involution_and_sign() {
        let z = catalog::z_surgery(1, 2, 2, false);
        let r = z.reverse_component(2).unwrap();
        let back = r.reverse_component(2).unwrap();
        assert!(back.same_diagram(&z));
        let (_, c) = r.chords().next().unwrap();
        assert_eq!(c.sign, Sign::Neg);
        assert!(z.reverse_component(3).is_err());
    }

    #[test]
    fn reverse_chord_free_strand() {
        let z = catalog::z_surgery(1, 2, 3, false);
        let r = z.reverse_component(3).unwrap();
        let (_, c) = r.chords().next().unwrap();
        assert_eq!(c.sign, Sign::Pos);
        assert_eq!(crate::invariants::linking(&r, 1, 2).unwrap(), 1);
    }

    #[test]
    fn delete_component_cases() {
        let z = catalog::z_surgery(1, 2, 2, false);
        let d = z.delete_component(2).unwrap();
        assert_eq!(d.strand_count(), 1);
        assert_eq!(d.chord_count(), 0);

        let t = GaussDiagram::new_trivial(3)
            .unwrap()
            .delete_component(1)
            .unwrap();
        assert_eq!(t.strand_count(), 2);

        let one = z.delete_component(1).unwrap();
        assert!(one.delete_component(1).is_err());
    }

    #[test]
    fn delete_commutes_for_distinct_indices() {
        let d = catalog::z_surgery(1, 2, 3, false)
            .stack(&catalog::z_surgery(2, 3, 3, false))
            .unwrap();
        let a = d.delete_component(3).unwrap().delete_component(1).unwrap();
        let b = d.delete_component(1).unwrap().delete_component(2).unwrap();
        assert!(a.same_diagram(&b));
    }

    #[test]
    fn closure_keeps_only_fully_listed_chords() {
        let d = catalog::z_surgery(1, 2, 3, false)
            .stack(&catalog::z_surgery(2, 3, 3, false))
            .unwrap();
        let c = d
            .closure(&ClosureList::from_signed(&[1, 2]).unwrap())
            .unwrap();
        assert_eq!(c.strand_count(), 1);
        assert_eq!(c.chord_count(), 1);
        let t = GaussDiagram::new_trivial(3)
            .unwrap()
            .closure(&ClosureList::from_signed(&[2, -1]).unwrap())
            .unwrap();
        assert_eq!(t.chord_count(), 0);
        assert!(d.closure(&ClosureList::from_signed(&[4]).unwrap()).is_err());
        assert!(ClosureList::from_signed(&[1, 1]).is_err());
        assert!(ClosureList::from_signed(&[]).is_err());
    }

    #[test]
    fn virtualize_cases() {
        let z = catalog::z_surgery(1, 2, 2, false);
        let all = z.chord_ids();
        let t = z.virtualize(&all).unwrap();
        assert_eq!(t.chord_count(), 0);
        assert!(t.strand(1).unwrap().is_empty());
        assert!(z.virtualize(&[]).unwrap().same_diagram(&z));
        assert_eq!(crate::invariants::linking(&t, 1, 2).unwrap(), 0);
        assert!(z.virtualize(&[ChordId(99)]).is_err());
    }

    #[test]
    fn closure_list_text() {
        let l = ClosureList::from_signed(&[1, -2]).unwrap();
        assert_eq!(l.key_string(), "[1,-2]");
        assert_eq!(ClosureList::parse("[1,-2]").unwrap(), l);
        assert_eq!(ClosureList::parse("1, -2").unwrap(), l);
    }

    #[test]
    fn validation_rejects_bad_parts() {
        // dangling endpoint
        let mut chords = BTreeMap::new();
        chords.insert(
            ChordId(0),
            Chord {
                over: EndpointId(0),
                under: EndpointId(1),
                sign: Sign::Pos,
            },
        );
        assert!(
            GaussDiagram::new(alloc::vec![alloc::vec![EndpointId(0)]], chords.clone()).is_err()
        );
        // endpoint in two slots
        chords.insert(
            ChordId(1),
            Chord {
                over: EndpointId(1),
                under: EndpointId(2),
                sign: Sign::Pos,
            },
        );
        let strands = alloc::vec![alloc::vec![EndpointId(0), EndpointId(1), EndpointId(2)]];
        assert!(GaussDiagram::new(strands, chords).is_err());
    }
}
