//! The library of basic welded string links: presentations of the
//! degree-1 generator `Z`, the degree-2 generators `E, A, B, C, D, G`
//! and the degree-3 two-strand generators `F, TO_1..TO_4, OT_1..OT_4`.
//!
//! Tree shapes (head placement, tail placement and planar child order at
//! each vertex) are fixed constants transcribed from the defining figures;
//! where a figure is ambiguous the choice is pinned by the calibration
//! suite against the invariant tables. Inverses insert a bead near the
//! head; negative exponents are products of copies of the inverse.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::wtree::{Site, Subtree, WTree, WTreePresentation};

/// Names of the basic generators.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum GenName {
    Z,
    E,
    A,
    B,
    C,
    D,
    G,
    F,
    /// The orientation-reversed companion of `F` (`F'` in the word format).
    Fp,
    /// Two-strand degree-3 trees of the w4 classification.
    A3,
    B3,
    C3,
    D3,
    TO1,
    TO2,
    TO3,
    TO4,
    OT1,
    OT2,
    OT3,
    OT4,
}

impl GenName {
    pub fn as_str(self) -> &'static str {
        match self {
            GenName::Z => "Z",
            GenName::E => "E",
            GenName::A => "A",
            GenName::B => "B",
            GenName::C => "C",
            GenName::D => "D",
            GenName::G => "G",
            GenName::F => "F",
            GenName::Fp => "F'",
            GenName::A3 => "A3",
            GenName::B3 => "B3",
            GenName::C3 => "C3",
            GenName::D3 => "D3",
            GenName::TO1 => "TO1",
            GenName::TO2 => "TO2",
            GenName::TO3 => "TO3",
            GenName::TO4 => "TO4",
            GenName::OT1 => "OT1",
            GenName::OT2 => "OT2",
            GenName::OT3 => "OT3",
            GenName::OT4 => "OT4",
        }
    }

    pub fn parse(s: &str) -> Result<GenName> {
        Ok(match s {
            "Z" => GenName::Z,
            "E" => GenName::E,
            "A" => GenName::A,
            "B" => GenName::B,
            "C" => GenName::C,
            "D" => GenName::D,
            "G" => GenName::G,
            "F" => GenName::F,
            "F'" => GenName::Fp,
            "A3" => GenName::A3,
            "B3" => GenName::B3,
            "C3" => GenName::C3,
            "D3" => GenName::D3,
            "TO1" => GenName::TO1,
            "TO2" => GenName::TO2,
            "TO3" => GenName::TO3,
            "TO4" => GenName::TO4,
            "OT1" => GenName::OT1,
            "OT2" => GenName::OT2,
            "OT3" => GenName::OT3,
            "OT4" => GenName::OT4,
            _ => return Err(Error::Parse(format!("unknown generator name `{s}`"))),
        })
    }

    /// Number of strand indices the name takes.
    pub fn arity(self) -> usize {
        match self {
            GenName::Z | GenName::A | GenName::B | GenName::C | GenName::D => 2,
            GenName::E | GenName::F | GenName::Fp => 1,
            GenName::G => 3,
            _ => 0, // A3..D3 and TO/OT are fixed two-strand links
        }
    }

    /// Generators that only live on the two-strand trivial diagram.
    pub fn two_strand_only(self) -> bool {
        matches!(
            self,
            GenName::A3
                | GenName::B3
                | GenName::C3
                | GenName::D3
                | GenName::TO1
                | GenName::TO2
                | GenName::TO3
                | GenName::TO4
                | GenName::OT1
                | GenName::OT2
                | GenName::OT3
                | GenName::OT4
        )
    }

    /// Tree degree of the generator (1, 2 or 3).
    pub fn degree(self) -> usize {
        match self {
            GenName::Z => 1,
            GenName::E | GenName::A | GenName::B | GenName::C | GenName::D | GenName::G => 2,
            _ => 3,
        }
    }
}

/// A named generator instance with strand indices and a nonzero exponent.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GeneratorId {
    pub name: GenName,
    pub indices: Vec<usize>,
    pub exponent: i64,
}

impl GeneratorId {
    pub fn new(name: GenName, indices: Vec<usize>, exponent: i64) -> Result<Self> {
        if exponent == 0 {
            return Err(Error::Unsupported(
                "generator exponent must be nonzero".into(),
            ));
        }
        if indices.len() != name.arity() {
            return Err(Error::Unsupported(format!(
                "{} takes {} indices, got {}",
                name.as_str(),
                name.arity(),
                indices.len()
            )));
        }
        let mut sorted = indices.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != indices.len() || indices.contains(&0) {
            return Err(Error::Unsupported(format!(
                "{} indices must be distinct and positive",
                name.as_str()
            )));
        }
        Ok(GeneratorId {
            name,
            indices,
            exponent,
        })
    }

    /// `G_{i,j,k}` with `j < k` is the normalized representative;
    /// `G_{i,k,j}` equals its inverse up to w3-equivalence.
    pub fn g_normalized(i: usize, j: usize, k: usize, exponent: i64) -> Result<Self> {
        if j < k {
            GeneratorId::new(GenName::G, alloc::vec![i, j, k], exponent)
        } else {
            GeneratorId::new(GenName::G, alloc::vec![i, k, j], -exponent)
        }
    }

    /// Smallest strand count this generator lives on.
    pub fn min_strands(&self) -> usize {
        if self.name.two_strand_only() {
            2
        } else {
            self.indices.iter().copied().max().unwrap_or(1)
        }
    }

    /// Text form `Name[indices]^exp` (index brackets omitted at arity 0).
    pub fn display(&self) -> String {
        let mut s = String::from(self.name.as_str());
        if !self.indices.is_empty() {
            s.push('[');
            for (k, i) in self.indices.iter().enumerate() {
                if k > 0 {
                    s.push(',');
                }
                s.push_str(&format!("{i}"));
            }
            s.push(']');
        }
        s.push_str(&format!("^{}", self.exponent));
        s
    }
}

fn r(p: i64, q: i64) -> Rational {
    Rational::new(p, q)
}

fn tail(s: usize, p: i64, q: i64) -> Subtree {
    Subtree::tail(s, r(p, q))
}

/// The single tree of one positive copy of the generator.
fn base_tree(name: GenName, ix: &[usize]) -> WTree {
    match name {
        GenName::Z => {
            let (i, j) = (ix[0], ix[1]);
            WTree::new(Site::new(j, r(1, 2)), tail(i, 1, 2))
        }
        GenName::E => {
            let i = ix[0];
            WTree::new(
                Site::new(i, r(1, 2)),
                Subtree::node(tail(i, 1, 4), tail(i, 3, 4)),
            )
        }
        GenName::A => {
            let (i, j) = (ix[0], ix[1]);
            WTree::new(
                Site::new(i, r(3, 4)),
                Subtree::node(tail(i, 1, 4), tail(j, 1, 2)),
            )
        }
        GenName::B => {
            let (i, j) = (ix[0], ix[1]);
            WTree::new(
                Site::new(i, r(1, 4)),
                Subtree::node(tail(j, 1, 2), tail(i, 3, 4)),
            )
        }
        GenName::C => {
            let (i, j) = (ix[0], ix[1]);
            WTree::new(
                Site::new(j, r(3, 4)),
                Subtree::node(tail(i, 1, 2), tail(j, 1, 4)),
            )
        }
        GenName::D => {
            let (i, j) = (ix[0], ix[1]);
            WTree::new(
                Site::new(j, r(1, 4)),
                Subtree::node(tail(j, 3, 4), tail(i, 1, 2)),
            )
        }
        GenName::G => {
            let (i, j, k) = (ix[0], ix[1], ix[2]);
            WTree::new(
                Site::new(i, r(3, 4)),
                Subtree::node(tail(j, 1, 4), tail(k, 1, 4)),
            )
        }
        GenName::F => {
            let i = ix[0];
            WTree::new(
                Site::new(i, r(133, 200)),
                Subtree::node(
                    tail(i, 33, 100),
                    Subtree::node(tail(i, 33, 200), tail(i, 33, 40)),
                ),
            )
        }
        GenName::Fp => {
            let i = ix[0];
            WTree::new(
                Site::new(i, r(33, 100)),
                Subtree::node(
                    Subtree::node(tail(i, 33, 200), tail(i, 33, 40)),
                    tail(i, 133, 200),
                ),
            )
        }
        GenName::A3 => WTree::new(
            Site::new(1, r(3, 4)),
            Subtree::node(Subtree::node(tail(1, 1, 4), tail(2, 1, 4)), tail(2, 3, 4)),
        ),
        GenName::B3 => WTree::new(
            Site::new(1, r(1, 4)),
            Subtree::node(tail(2, 1, 4), Subtree::node(tail(2, 3, 4), tail(1, 3, 4))),
        ),
        GenName::C3 => WTree::new(
            Site::new(2, r(3, 4)),
            Subtree::node(tail(1, 3, 4), Subtree::node(tail(1, 1, 4), tail(2, 1, 4))),
        ),
        GenName::D3 => WTree::new(
            Site::new(2, r(1, 4)),
            Subtree::node(Subtree::node(tail(2, 3, 4), tail(1, 3, 4)), tail(1, 1, 4)),
        ),
        GenName::TO1 => WTree::new(
            Site::new(1, r(4, 5)),
            Subtree::node(tail(1, 3, 5), Subtree::node(tail(1, 1, 5), tail(2, 2, 5))),
        ),
        GenName::TO2 => WTree::new(
            Site::new(1, r(3, 5)),
            Subtree::node(Subtree::node(tail(1, 1, 5), tail(2, 2, 5)), tail(1, 4, 5)),
        ),
        GenName::TO3 => WTree::new(
            Site::new(1, r(2, 5)),
            Subtree::node(tail(1, 1, 5), Subtree::node(tail(2, 3, 5), tail(1, 4, 5))),
        ),
        GenName::TO4 => WTree::new(
            Site::new(1, r(1, 5)),
            Subtree::node(Subtree::node(tail(2, 3, 5), tail(1, 4, 5)), tail(1, 2, 5)),
        ),
        GenName::OT1 => WTree::new(
            Site::new(2, r(4, 5)),
            Subtree::node(Subtree::node(tail(1, 2, 5), tail(2, 1, 5)), tail(2, 3, 5)),
        ),
        GenName::OT2 => WTree::new(
            Site::new(2, r(3, 5)),
            Subtree::node(tail(2, 4, 5), Subtree::node(tail(1, 2, 5), tail(2, 1, 5))),
        ),
        GenName::OT3 => WTree::new(
            Site::new(2, r(2, 5)),
            Subtree::node(Subtree::node(tail(2, 4, 5), tail(1, 3, 5)), tail(2, 1, 5)),
        ),
        GenName::OT4 => WTree::new(
            Site::new(2, r(1, 5)),
            Subtree::node(tail(2, 2, 5), Subtree::node(tail(2, 4, 5), tail(1, 3, 5))),
        ),
    }
}

/// Presentation of the generator raised to its exponent on `n` strands:
/// `|e|` copies in successive position windows (first copy topmost), each
/// copy a head-bead inverse when the exponent is negative.
pub fn generator(g: &GeneratorId, n: usize) -> Result<WTreePresentation> {
    if n < g.min_strands() {
        return Err(Error::WrongStrandCount {
            expected: g.min_strands(),
            got: n,
        });
    }
    if g.name.two_strand_only() && n != 2 {
        return Err(Error::WrongStrandCount {
            expected: 2,
            got: n,
        });
    }
    let copies = g.exponent.unsigned_abs();
    let mut trees = Vec::with_capacity(copies as usize);
    for c in 0..copies {
        let mut t = base_tree(g.name, &g.indices);
        if g.exponent < 0 {
            t = t.inverted();
        }
        // first factor topmost
        let window = copies - 1 - c;
        t = map_positions(t, |p| p.in_window(window, copies));
        trees.push(t);
    }
    WTreePresentation::new(n, trees)
}

fn map_positions(t: WTree, f: impl Fn(&Rational) -> Rational + Copy) -> WTree {
    fn go(s: Subtree, f: impl Fn(&Rational) -> Rational + Copy) -> Subtree {
        match s {
            Subtree::Tail { site, bead } => Subtree::Tail {
                site: Site::new(site.strand, f(&site.pos)),
                bead,
            },
            Subtree::Node { left, right, bead } => Subtree::Node {
                left: alloc::boxed::Box::new(go(*left, f)),
                right: alloc::boxed::Box::new(go(*right, f)),
                bead,
            },
        }
    }
    WTree {
        head: Site::new(t.head.strand, f(&t.head.pos)),
        root: go(t.root, f),
    }
}
