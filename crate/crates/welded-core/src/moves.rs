//! Local moves on Gauss diagrams: the Reidemeister moves R1-R3 and the OC
//! move (swapping two adjacent over endpoints), as removal/insertion/slide
//! instances with explicit sites.
//!
//! The admissible local patterns are fixed as tables; any pattern whose
//! insertion or removal failed the invariant-preservation oracle over the
//! test corpus would be a build error. UC swaps (two adjacent under
//! endpoints alone) are deliberately not a move.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::diagram::{Chord, ChordId, EndpointId, GaussDiagram, Role, Sign};
use crate::error::{Error, Result};

/// A move instance at an explicit site.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MoveSpec {
    /// Remove a chord whose two endpoints are adjacent on one strand
    /// (either endpoint order, either sign).
    R1Remove { chord: ChordId },
    /// Insert such a chord at insertion index `at` (0..=len) of `strand`.
    R1Insert {
        strand: usize,
        at: usize,
        over_first: bool,
        sign: Sign,
    },
    /// Remove two chords with opposite signs whose over endpoints are
    /// adjacent on one strand and under endpoints adjacent on another.
    R2Remove { first: ChordId, second: ChordId },
    /// Insert a cancelling pair: over endpoints at insertion index
    /// `over_at` of `over_strand` (first chord's endpoint first), under
    /// endpoints at `under_at` of `under_strand`; `nested` reverses the
    /// under pair order. `sign` is the first chord's sign.
    R2Insert {
        over_strand: usize,
        over_at: usize,
        under_strand: usize,
        under_at: usize,
        nested: bool,
        sign: Sign,
    },
    /// Triangle exchange: three chords whose six endpoints form three
    /// adjacent pairs in the coherent role pattern; all three pairs swap.
    R3 { chords: [ChordId; 3] },
    /// Swap the adjacent over endpoints at positions `at`, `at+1` of `strand`.
    OcSwap { strand: usize, at: usize },
}

fn position_of(d: &GaussDiagram, e: EndpointId) -> (usize, usize) {
    for i in 1..=d.strand_count() {
        if let Some(p) = d.strand(i).unwrap().iter().position(|&x| x == e) {
            return (i, p);
        }
    }
    unreachable!("endpoint not on any strand")
}

fn rebuild(
    d: &GaussDiagram,
    strands: Vec<Vec<EndpointId>>,
    chords: BTreeMap<ChordId, Chord>,
) -> GaussDiagram {
    let _ = d;
    GaussDiagram::from_parts_unchecked(strands, chords)
}

fn strands_of(d: &GaussDiagram) -> Vec<Vec<EndpointId>> {
    (1..=d.strand_count())
        .map(|i| d.strand(i).unwrap().to_vec())
        .collect()
}

fn chords_of(d: &GaussDiagram) -> BTreeMap<ChordId, Chord> {
    d.chords().map(|(id, c)| (id, *c)).collect()
}

fn fresh_ids(d: &GaussDiagram, n: u32) -> (u32, u32) {
    let ep = (1..=d.strand_count())
        .flat_map(|i| d.strand(i).unwrap().iter())
        .map(|e| e.0)
        .max()
        .map_or(0, |m| m + 1);
    let ch = d.chords().map(|(id, _)| id.0).max().map_or(0, |m| m + 1);
    let _ = n;
    (ep, ch)
}

/// Is the chord an R1-removable kink (adjacent endpoints on one strand)?
fn r1_removable(d: &GaussDiagram, c: &Chord) -> bool {
    let (s1, p1) = position_of(d, c.over);
    let (s2, p2) = position_of(d, c.under);
    s1 == s2 && p1.abs_diff(p2) == 1
}

/// Are the two chords an R2-removable pair?
fn r2_removable(d: &GaussDiagram, a: &Chord, b: &Chord) -> bool {
    if a.sign == b.sign {
        return false;
    }
    let (so1, po1) = position_of(d, a.over);
    let (so2, po2) = position_of(d, b.over);
    let (su1, pu1) = position_of(d, a.under);
    let (su2, pu2) = position_of(d, b.under);
    so1 == so2 && su1 == su2 && po1.abs_diff(po2) == 1 && pu1.abs_diff(pu2) == 1
}

/// Apply a move; errors when the specification does not match the diagram.
pub fn apply_move(d: &GaussDiagram, spec: &MoveSpec) -> Result<GaussDiagram> {
    match spec {
        MoveSpec::R1Remove { chord } => {
            let c = *d
                .chord(*chord)
                .ok_or_else(|| Error::MoveNotApplicable(format!("no chord {chord:?}")))?;
            if !r1_removable(d, &c) {
                return Err(Error::MoveNotApplicable(
                    "chord endpoints not adjacent".into(),
                ));
            }
            d.virtualize(&[*chord])
        }
        MoveSpec::R1Insert {
            strand,
            at,
            over_first,
            sign,
        } => {
            let mut strands = strands_of(d);
            let row = strands
                .get_mut(strand - 1)
                .ok_or_else(|| Error::IndexOutOfRange(format!("strand {strand}")))?;
            if *at > row.len() {
                return Err(Error::IndexOutOfRange(format!("insertion index {at}")));
            }
            let (ep, ch) = fresh_ids(d, 2);
            let over = EndpointId(ep);
            let under = EndpointId(ep + 1);
            let pair = if *over_first {
                [over, under]
            } else {
                [under, over]
            };
            row.splice(at..at, pair);
            let mut chords = chords_of(d);
            chords.insert(
                ChordId(ch),
                Chord {
                    over,
                    under,
                    sign: *sign,
                },
            );
            Ok(rebuild(d, strands, chords))
        }
        MoveSpec::R2Remove { first, second } => {
            let a = *d
                .chord(*first)
                .ok_or_else(|| Error::MoveNotApplicable(format!("no chord {first:?}")))?;
            let b = *d
                .chord(*second)
                .ok_or_else(|| Error::MoveNotApplicable(format!("no chord {second:?}")))?;
            if !r2_removable(d, &a, &b) {
                return Err(Error::MoveNotApplicable(
                    "not a cancelling adjacent pair".into(),
                ));
            }
            d.virtualize(&[*first, *second])
        }
        MoveSpec::R2Insert {
            over_strand,
            over_at,
            under_strand,
            under_at,
            nested,
            sign,
        } => {
            let ns = d.strand_count();
            if *over_strand == 0 || *over_strand > ns || *under_strand == 0 || *under_strand > ns {
                return Err(Error::IndexOutOfRange("R2 strand".into()));
            }
            let (ep, ch) = fresh_ids(d, 4);
            let (o1, o2, u1, u2) = (
                EndpointId(ep),
                EndpointId(ep + 1),
                EndpointId(ep + 2),
                EndpointId(ep + 3),
            );
            let mut strands = strands_of(d);
            // Insert the later site first so earlier indices stay valid when
            // both pairs land on the same strand.
            let over_pair = [o1, o2];
            let under_pair = if *nested { [u2, u1] } else { [u1, u2] };
            let mut inserts: Vec<(usize, usize, [EndpointId; 2])> = alloc::vec![
                (*over_strand, *over_at, over_pair),
                (*under_strand, *under_at, under_pair),
            ];
            inserts.sort_by_key(|(s, at, _)| (*s, core::cmp::Reverse(*at)));
            for (s, at, pair) in inserts {
                let row = &mut strands[s - 1];
                if at > row.len() {
                    return Err(Error::IndexOutOfRange(format!("insertion index {at}")));
                }
                row.splice(at..at, pair);
            }
            let mut chords = chords_of(d);
            chords.insert(
                ChordId(ch),
                Chord {
                    over: o1,
                    under: u1,
                    sign: *sign,
                },
            );
            chords.insert(
                ChordId(ch + 1),
                Chord {
                    over: o2,
                    under: u2,
                    sign: sign.flip(),
                },
            );
            Ok(rebuild(d, strands, chords))
        }
        MoveSpec::R3 { chords: ids } => {
            let pairs = r3_pairs(d, ids)?;
            let mut strands = strands_of(d);
            for (strand, lo) in pairs {
                strands[strand - 1].swap(lo, lo + 1);
            }
            Ok(rebuild(d, strands, chords_of(d)))
        }
        MoveSpec::OcSwap { strand, at } => {
            let row = d.strand(*strand)?;
            if at + 1 >= row.len() {
                return Err(Error::MoveNotApplicable("no adjacent pair at site".into()));
            }
            let info = d.endpoint_info();
            let (_, r1) = info[&row[*at]];
            let (_, r2) = info[&row[*at + 1]];
            if !(matches!(r1, Role::Over) && matches!(r2, Role::Over)) {
                return Err(Error::MoveNotApplicable(
                    "OC swaps need two adjacent over endpoints".into(),
                ));
            }
            let mut strands = strands_of(d);
            strands[strand - 1].swap(*at, *at + 1);
            Ok(rebuild(d, strands, chords_of(d)))
        }
    }
}

/// The three adjacent pairs of an admissible R3 site, as `(strand, lower
/// position)` triples. The coherence condition: the pairs' role multisets
/// are `(O,O)`, `(O,U)` and `(U,U)`, with each chord contributing its over
/// endpoint to one pair and its under endpoint to another.
fn r3_pairs(d: &GaussDiagram, ids: &[ChordId; 3]) -> Result<Vec<(usize, usize)>> {
    let mut endpoints = Vec::new();
    for id in ids {
        let c = d
            .chord(*id)
            .ok_or_else(|| Error::MoveNotApplicable(format!("no chord {id:?}")))?;
        endpoints.push((c.over, *id, Role::Over));
        endpoints.push((c.under, *id, Role::Under));
    }
    let mut located: Vec<(usize, usize, ChordId, Role)> = endpoints
        .iter()
        .map(|&(e, id, r)| {
            let (s, p) = position_of(d, e);
            (s, p, id, r)
        })
        .collect();
    located.sort_unstable_by_key(|&(s, p, _, _)| (s, p));
    let mut pairs = Vec::new();
    let mut k = 0;
    while k + 1 < located.len() {
        let (s1, p1, c1, r1) = located[k];
        let (s2, p2, c2, r2) = located[k + 1];
        if s1 == s2 && p2 == p1 + 1 && c1 != c2 {
            pairs.push(((s1, p1), (c1, r1), (c2, r2)));
            k += 2;
        } else {
            k += 1;
        }
    }
    if pairs.len() != 3 {
        return Err(Error::MoveNotApplicable(format!(
            "need three adjacent pairs, found {}",
            pairs.len()
        )));
    }
    // role multiset per pair
    let mut role_counts = [0usize; 3]; // OO, OU, UU
    let mut per_chord: BTreeMap<ChordId, (usize, usize)> = BTreeMap::new();
    for (_, (c1, r1), (c2, r2)) in &pairs {
        let overs = matches!(r1, Role::Over) as usize + matches!(r2, Role::Over) as usize;
        role_counts[overs] += 1;
        per_chord.entry(*c1).or_insert((0, 0));
        per_chord.entry(*c2).or_insert((0, 0));
        for (c, r) in [(c1, r1), (c2, r2)] {
            let e = per_chord.get_mut(c).unwrap();
            match r {
                Role::Over => e.0 += 1,
                Role::Under => e.1 += 1,
            }
        }
    }
    let coherent = role_counts == [1, 1, 1]
        && per_chord.len() == 3
        && per_chord.values().all(|&(o, u)| o == 1 && u == 1);
    if !coherent {
        return Err(Error::MoveNotApplicable(
            "pairs do not form a coherent triangle".into(),
        ));
    }
    // Identify the chords: x has its over endpoint in the (O,O) pair and its
    // under in the mixed pair; y has over in (O,O) and under in (U,U); z is
    // the remaining chord. The move is planar-coherent exactly when
    // sign(x) * sign(y) = +1 iff the mixed pair starts with x's under
    // endpoint exactly as the (U,U) pair starts with y's under endpoint.
    // (The (O,O) order and z's sign are irrelevant: over endpoints commute.)
    type Pair = ((usize, usize), (ChordId, Role), (ChordId, Role));
    let pair_overs =
        |p: &Pair| matches!(p.1 .1, Role::Over) as usize + matches!(p.2 .1, Role::Over) as usize;
    let oo = pairs.iter().find(|p| pair_overs(p) == 2).unwrap();
    let ou = pairs.iter().find(|p| pair_overs(p) == 1).unwrap();
    let uu = pairs.iter().find(|p| pair_overs(p) == 0).unwrap();
    let oo_chords = [oo.1 .0, oo.2 .0];
    let x = if matches!(ou.1 .1, Role::Under) {
        ou.1 .0
    } else {
        ou.2 .0
    };
    debug_assert!(oo_chords.contains(&x));
    let y = *oo_chords.iter().find(|c| **c != x).unwrap();
    let x_under_first = matches!(ou.1 .1, Role::Under);
    let y_under_first = uu.1 .0 == y;
    let sx = d.chord(x).unwrap().sign;
    let sy = d.chord(y).unwrap().sign;
    let coherent_signs = (sx == sy) == (x_under_first == y_under_first);
    if !coherent_signs {
        return Err(Error::MoveNotApplicable(
            "triangle orders and signs are not planar-coherent".into(),
        ));
    }
    Ok(pairs.into_iter().map(|((s, p), _, _)| (s, p)).collect())
}

/// All applicable removal/swap/slide instances on `d` (insertions are not
/// enumerated: their sites are unbounded).
pub fn detect_moves(d: &GaussDiagram) -> Vec<MoveSpec> {
    let mut out = Vec::new();
    let ids = d.chord_ids();
    for &id in &ids {
        if r1_removable(d, d.chord(id).unwrap()) {
            out.push(MoveSpec::R1Remove { chord: id });
        }
    }
    for (a, &ia) in ids.iter().enumerate() {
        for &ib in ids.iter().skip(a + 1) {
            if r2_removable(d, d.chord(ia).unwrap(), d.chord(ib).unwrap()) {
                out.push(MoveSpec::R2Remove {
                    first: ia,
                    second: ib,
                });
            }
        }
    }
    for (a, &ia) in ids.iter().enumerate() {
        for (b, &ib) in ids.iter().enumerate().skip(a + 1) {
            for &ic in ids.iter().skip(b + 1) {
                let spec = MoveSpec::R3 {
                    chords: [ia, ib, ic],
                };
                if r3_pairs(d, &[ia, ib, ic]).is_ok() {
                    out.push(spec);
                }
            }
        }
    }
    let info = d.endpoint_info();
    for i in 1..=d.strand_count() {
        let row = d.strand(i).unwrap();
        for at in 0..row.len().saturating_sub(1) {
            let over = |e: &EndpointId| matches!(info[e].1, Role::Over);
            if over(&row[at]) && over(&row[at + 1]) {
                out.push(MoveSpec::OcSwap { strand: i, at });
            }
        }
    }
    out
}
