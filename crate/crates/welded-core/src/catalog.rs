//! Named diagrams used throughout the test suites and the CLI: generator
//! surgeries, the worked examples, and small corpora for property and
//! finite-type testing.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::diagram::{Chord, ChordId, ClosureList, EndpointId, GaussDiagram, Sign};
use crate::generators::{generator, GenName, GeneratorId};
use crate::wtree::surgery;

/// Surgery along a single (possibly beaded) arrow from strand `i` to strand
/// `j` on `n` strands: one chord, over on `i`, under on `j`.
pub fn z_surgery(i: usize, j: usize, n: usize, negative: bool) -> GaussDiagram {
    gen_surgery(GenName::Z, &[i, j], if negative { -1 } else { 1 }, n)
}

/// Surgery of a named generator power; panics on invalid arguments
/// (test/CLI convenience).
pub fn gen_surgery(name: GenName, indices: &[usize], exponent: i64, n: usize) -> GaussDiagram {
    let g = GeneratorId::new(name, indices.to_vec(), exponent).expect("valid generator");
    surgery(&generator(&g, n).expect("valid strand count")).expect("valid presentation")
}

/// One-chord kink on `strand`: both endpoints on the same strand,
/// over endpoint first when `over_first`.
pub fn kink(n: usize, strand: usize, over_first: bool, sign: Sign) -> GaussDiagram {
    let over = EndpointId(0);
    let under = EndpointId(1);
    let mut strands = alloc::vec![Vec::new(); n];
    strands[strand - 1] = if over_first {
        alloc::vec![over, under]
    } else {
        alloc::vec![under, over]
    };
    let mut chords = BTreeMap::new();
    chords.insert(ChordId(0), Chord { over, under, sign });
    GaussDiagram::new(strands, chords).expect("valid kink")
}

/// The two-strand links of the non-commutativity example: `D` closes to the
/// long knot `K` with `alpha_2 = 1`, while the commuted product `D'` closes
/// trivially.
pub fn nonab_d() -> GaussDiagram {
    z_surgery(1, 2, 2, false)
        .stack(&z_surgery(2, 1, 2, false))
        .unwrap()
}

pub fn nonab_d_prime() -> GaussDiagram {
    z_surgery(2, 1, 2, false)
        .stack(&z_surgery(1, 2, 2, false))
        .unwrap()
}

/// The welded long knot `K = Cl_{(1,2)}(D)`.
pub fn long_knot_k() -> GaussDiagram {
    nonab_d()
        .closure(&ClosureList::from_signed(&[1, 2]).unwrap())
        .unwrap()
}

/// The three-strand diagram with two arrows into strand 1 (tails on strands
/// 2 and 3, the strand-2 head above the strand-3 head); its closure
/// `Cl_{(2̄,1,3)}` is a long knot with `alpha_2 = ±1`, the pivot of the
/// degree-2 evaluation of products of arrows.
pub fn triple_arrows_figure() -> GaussDiagram {
    // stack: Z(3,1) below Z(2,1), so the strand-2 head sits above.
    z_surgery(3, 1, 3, false)
        .stack(&z_surgery(2, 1, 3, false))
        .unwrap()
}

/// `K_1 = Cl_{(1,2̄)}` of the worked closure example (the surgery of
/// `A_{1,2}`); an E-shaped long knot with `alpha_2 = 1`.
pub fn k1() -> GaussDiagram {
    gen_surgery(GenName::A, &[1, 2], 1, 2)
        .closure(&ClosureList::from_signed(&[1, -2]).unwrap())
        .unwrap()
}

/// `K_2 = Cl_{(2̄,1̄)}` of the same example, the orientation reverse of `K_1`.
pub fn k2() -> GaussDiagram {
    gen_surgery(GenName::A, &[1, 2], 1, 2)
        .closure(&ClosureList::from_signed(&[-2, -1]).unwrap())
        .unwrap()
}

/// Small mixed corpus for structural and property tests.
pub fn small_corpus() -> Vec<GaussDiagram> {
    let mut out = alloc::vec![
        GaussDiagram::new_trivial(1).unwrap(),
        GaussDiagram::new_trivial(2).unwrap(),
        GaussDiagram::new_trivial(3).unwrap(),
        z_surgery(1, 2, 2, false),
        z_surgery(2, 1, 2, true),
        nonab_d(),
        nonab_d_prime(),
        long_knot_k(),
        triple_arrows_figure(),
        k1(),
        k2(),
        kink(2, 1, true, Sign::Pos),
        gen_surgery(GenName::E, &[1], 1, 2),
        gen_surgery(GenName::A, &[1, 2], 1, 2),
        gen_surgery(GenName::B, &[1, 2], -1, 2),
        gen_surgery(GenName::C, &[1, 2], 1, 2),
        gen_surgery(GenName::D, &[2, 1], 1, 2),
        gen_surgery(GenName::G, &[3, 1, 2], 1, 3),
    ];
    out.push(out[13].stack(&out[3]).unwrap()); // A12 . Z12
    out.push(
        z_surgery(1, 3, 3, false)
            .stack(&z_surgery(2, 3, 3, false))
            .unwrap(),
    );
    out
}

/// One-strand diagrams for Alexander-pipeline tests.
pub fn long_knot_corpus() -> Vec<GaussDiagram> {
    let trefoil =
        crate::gauss_text::parse_gauss("n=1\n1: O a + U b + O c + U a + O b + U c +\n").unwrap();
    alloc::vec![
        GaussDiagram::new_trivial(1).unwrap(),
        long_knot_k(),
        k1(),
        k2(),
        trefoil,
        gen_surgery(GenName::E, &[1], 1, 1),
        gen_surgery(GenName::F, &[1], 1, 1),
        kink(1, 1, false, Sign::Neg),
    ]
}

/// Diagrams with at most 9 chords for exhaustive finite-type testing.
pub fn ft_corpus() -> Vec<GaussDiagram> {
    alloc::vec![
        z_surgery(1, 2, 3, false)
            .stack(&z_surgery(2, 3, 3, false))
            .unwrap()
            .stack(&z_surgery(3, 1, 3, true))
            .unwrap()
            .stack(&z_surgery(1, 2, 3, false))
            .unwrap(),
        gen_surgery(GenName::E, &[1], 1, 3)
            .stack(&z_surgery(1, 3, 3, false))
            .unwrap(),
        gen_surgery(GenName::A, &[1, 2], 1, 3)
            .stack(&z_surgery(2, 1, 3, false))
            .unwrap(),
        gen_surgery(GenName::G, &[3, 1, 2], 1, 3)
            .stack(&z_surgery(2, 3, 3, false))
            .unwrap(),
        nonab_d()
            .stack(&gen_surgery(GenName::E, &[2], 1, 2))
            .unwrap(),
        triple_arrows_figure(),
    ]
}
