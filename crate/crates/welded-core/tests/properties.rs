//! Property-based tests: structural laws of the diagram operations, format
//! round-trips, and move invariance of the invariant suite.

use proptest::prelude::*;

use welded_core::diagram::{Chord, ChordId, EndpointId, GaussDiagram, Sign};
use welded_core::gauss_text::{emit_gauss, parse_gauss};
use welded_core::invariants::{invariant_vector, linking};
use welded_core::moves::{apply_move, detect_moves, MoveSpec};

#[derive(Clone, Debug)]
struct RawChord {
    over_strand: usize,
    under_strand: usize,
    over_slot: usize,
    under_slot: usize,
    negative: bool,
}

fn raw_chord(n: usize) -> impl Strategy<Value = RawChord> {
    (0..n, 0..n, 0..64usize, 0..64usize, any::<bool>()).prop_map(
        |(over_strand, under_strand, over_slot, under_slot, negative)| RawChord {
            over_strand,
            under_strand,
            over_slot,
            under_slot,
            negative,
        },
    )
}

fn diagram(n: usize, max_chords: usize) -> impl Strategy<Value = GaussDiagram> {
    prop::collection::vec(raw_chord(n), 0..=max_chords).prop_map(move |raws| {
        let mut strands: Vec<Vec<EndpointId>> = vec![Vec::new(); n];
        let mut chords = std::collections::BTreeMap::new();
        for (k, r) in raws.iter().enumerate() {
            let over = EndpointId(2 * k as u32);
            let under = EndpointId(2 * k as u32 + 1);
            let at = r.over_slot % (strands[r.over_strand].len() + 1);
            strands[r.over_strand].insert(at, over);
            let at = r.under_slot % (strands[r.under_strand].len() + 1);
            strands[r.under_strand].insert(at, under);
            chords.insert(
                ChordId(k as u32),
                Chord {
                    over,
                    under,
                    sign: if r.negative { Sign::Neg } else { Sign::Pos },
                },
            );
        }
        GaussDiagram::new(strands, chords).expect("constructed valid")
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn gauss_text_round_trip(d in diagram(3, 6)) {
        let text = emit_gauss(&d);
        let back = parse_gauss(&text).unwrap();
        prop_assert!(back.same_diagram(&d));
        prop_assert_eq!(emit_gauss(&back), text);
    }

    #[test]
    fn stack_unit_and_associativity(a in diagram(2, 3), b in diagram(2, 3), c in diagram(2, 3)) {
        let triv = GaussDiagram::new_trivial(2).unwrap();
        prop_assert!(a.stack(&triv).unwrap().same_diagram(&a));
        prop_assert!(triv.stack(&a).unwrap().same_diagram(&a));
        let l = a.stack(&b).unwrap().stack(&c).unwrap();
        let r = a.stack(&b.stack(&c).unwrap()).unwrap();
        prop_assert!(l.same_diagram(&r));
    }

    #[test]
    fn reverse_is_involutive(d in diagram(3, 6), i in 1usize..=3) {
        let twice = d.reverse_component(i).unwrap().reverse_component(i).unwrap();
        prop_assert!(twice.same_diagram(&d));
    }

    #[test]
    fn delete_commutes(d in diagram(3, 5)) {
        let a = d.delete_component(3).unwrap().delete_component(1).unwrap();
        let b = d.delete_component(1).unwrap().delete_component(2).unwrap();
        prop_assert!(a.same_diagram(&b));
    }

    #[test]
    fn linking_additive_under_stack(a in diagram(3, 4), b in diagram(3, 4)) {
        let s = a.stack(&b).unwrap();
        for i in 1..=3usize {
            for j in 1..=3usize {
                if i != j {
                    prop_assert_eq!(
                        linking(&s, i, j).unwrap(),
                        linking(&a, i, j).unwrap() + linking(&b, i, j).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn closure_keeps_fully_listed_chords(d in diagram(3, 6)) {
        let list = welded_core::ClosureList::from_signed(&[2, -1]).unwrap();
        let closed = d.closure(&list).unwrap();
        let strand_of = d.endpoint_strand();
        let expected = d
            .chords()
            .filter(|(_, c)| strand_of[&c.over] != 3 && strand_of[&c.under] != 3)
            .count();
        prop_assert_eq!(closed.chord_count(), expected);
    }

    #[test]
    fn detected_moves_preserve_degree_two_vector(d in diagram(3, 5)) {
        let before = invariant_vector(&d, 2).unwrap();
        for m in detect_moves(&d) {
            let after = apply_move(&d, &m).unwrap();
            prop_assert_eq!(&before, &invariant_vector(&after, 2).unwrap(), "{:?}", m);
        }
    }

    #[test]
    fn random_insertions_preserve_degree_two_vector(
        d in diagram(2, 4),
        strand in 1usize..=2,
        at in 0usize..32,
        over_first in any::<bool>(),
        nested in any::<bool>(),
        neg in any::<bool>(),
    ) {
        let before = invariant_vector(&d, 2).unwrap();
        let sign = if neg { Sign::Neg } else { Sign::Pos };
        let r1 = MoveSpec::R1Insert {
            strand,
            at: at % (d.strand(strand).unwrap().len() + 1),
            over_first,
            sign,
        };
        let after = apply_move(&d, &r1).unwrap();
        prop_assert_eq!(&before, &invariant_vector(&after, 2).unwrap());

        let other = 3 - strand;
        let r2 = MoveSpec::R2Insert {
            over_strand: strand,
            over_at: at % (d.strand(strand).unwrap().len() + 1),
            under_strand: other,
            under_at: (at / 2) % (d.strand(other).unwrap().len() + 1),
            nested,
            sign,
        };
        let after = apply_move(&d, &r2).unwrap();
        prop_assert_eq!(&before, &invariant_vector(&after, 2).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    // The classification theorems are for arbitrary welded string links,
    // not only generator words: the realized normal form of any diagram
    // must reproduce its classifying vector.
    #[test]
    fn normal_form_roundtrips_on_arbitrary_diagrams(d in diagram(3, 5)) {
        for degree in [1usize, 2] {
            let r = welded_core::normal_form::verify_roundtrip(
                &d,
                degree,
                welded_core::invariants::MuVariant::default(),
            )
            .unwrap();
            prop_assert!(r.matches, "degree {} mismatches {:?}", degree, r.mismatches);
        }
    }

    #[test]
    fn w4_roundtrips_on_arbitrary_two_strand_diagrams(d in diagram(2, 4)) {
        let r = welded_core::normal_form::verify_roundtrip(
            &d,
            3,
            welded_core::invariants::MuVariant::default(),
        )
        .unwrap();
        prop_assert!(r.matches, "mismatches {:?}", r.mismatches);
    }
}
