//! Wirtinger presentation of the welded group and Fox calculus.
//!
//! Arcs are the maximal strand segments between consecutive under-endpoints
//! (strand start and end also delimit); a strand with `u` under-endpoints
//! contributes `u + 1` arcs. Each chord yields one relation: at a positive
//! crossing with over-arc `y`, incoming arc `x` and outgoing arc `z`,
//!
//! ```text
//!   y^-1 x y z^-1 = 1        (negative crossing: y x y^-1 z^-1 = 1)
//! ```

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use crate::diagram::{ChordId, GaussDiagram, Sign};
use crate::laurent::LaurentPoly;

/// A word in the free group on arc generators: letters `(generator, ±1)`.
pub type Word = Vec<(usize, i8)>;

/// Abstract presentation extracted from a diagram: `c + n` generators and
/// `c` relations for a diagram with `c` chords and `n` strands.
#[derive(Clone, Debug)]
pub struct GroupPresentation {
    /// Number of arc generators.
    pub generators: usize,
    /// Relations as free-group words.
    pub relations: Vec<Word>,
    /// First arc of each strand (index into generators).
    pub first_arc: Vec<usize>,
    /// Strand (1-based) of each arc.
    pub arc_strand: Vec<usize>,
}

/// Arc bookkeeping shared by the Alexander and Milnor pipelines.
#[derive(Clone, Debug)]
pub(crate) struct ArcStructure {
    pub arc_count: usize,
    pub first_arc: Vec<usize>,
    pub arc_strand: Vec<usize>,
    /// Arc containing each over endpoint, keyed by the chord.
    pub over_arc: BTreeMap<ChordId, usize>,
    /// Under-endpoint sites in strand order: `(chord, incoming arc, outgoing arc)`.
    pub sites: Vec<(ChordId, usize, usize)>,
}

pub(crate) fn arc_structure(d: &GaussDiagram) -> ArcStructure {
    let info = d.endpoint_info();
    let mut arc_count = 0usize;
    let mut first_arc = Vec::with_capacity(d.strand_count());
    let mut arc_strand = Vec::new();
    let mut over_ep_arc: BTreeMap<crate::diagram::EndpointId, usize> = BTreeMap::new();
    let mut sites = Vec::new();
    for i in 1..=d.strand_count() {
        let mut cur = arc_count;
        arc_count += 1;
        arc_strand.push(i);
        first_arc.push(cur);
        for &e in d.strand(i).unwrap() {
            let (cid, role) = info[&e];
            match role {
                crate::diagram::Role::Over => {
                    over_ep_arc.insert(e, cur);
                }
                crate::diagram::Role::Under => {
                    let next = arc_count;
                    arc_count += 1;
                    arc_strand.push(i);
                    sites.push((cid, cur, next));
                    cur = next;
                }
            }
        }
    }
    let over_arc = d
        .chords()
        .map(|(id, c)| (id, over_ep_arc[&c.over]))
        .collect();
    ArcStructure {
        arc_count,
        first_arc,
        arc_strand,
        over_arc,
        sites,
    }
}

/// The Wirtinger presentation of the welded group of `d`.
pub fn wirtinger(d: &GaussDiagram) -> GroupPresentation {
    let arcs = arc_structure(d);
    let relations = arcs
        .sites
        .iter()
        .map(|&(cid, x, z)| {
            let y = arcs.over_arc[&cid];
            match d.chord(cid).unwrap().sign {
                Sign::Pos => alloc::vec![(y, -1), (x, 1), (y, 1), (z, -1)],
                Sign::Neg => alloc::vec![(y, 1), (x, 1), (y, -1), (z, -1)],
            }
        })
        .collect();
    GroupPresentation {
        generators: arcs.arc_count,
        relations,
        first_arc: arcs.first_arc,
        arc_strand: arcs.arc_strand,
    }
}

/// Abelianized Fox derivative `∂w/∂g` followed by the map sending every
/// generator to `t`: `∂(uv) = ∂u + ū ∂v`, `∂g/∂g = 1`, `∂g^{-1}/∂g = -g^{-1}`.
pub fn fox_derivative(word: &Word, g: usize) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    let mut prefix: i64 = 0; // exponent of t of the abelianized prefix
    for &(letter, e) in word {
        if e == 1 {
            if letter == g {
                out.add_term(prefix, BigInt::one());
            }
            prefix += 1;
        } else {
            prefix -= 1;
            if letter == g {
                out.add_term(prefix, -BigInt::one());
            }
        }
    }
    out
}

/// The full matrix `(∂r_i/∂g_j)` over `Z[t^{±1}]`.
pub fn fox_matrix(p: &GroupPresentation) -> Vec<Vec<LaurentPoly>> {
    p.relations
        .iter()
        .map(|r| (0..p.generators).map(|g| fox_derivative(r, g)).collect())
        .collect()
}
