use proptest::prelude::*;

use arcnum::oracle::{brute_force_arc_number, random_diagram};
use arcnum::stars::is_star_ordering;
use arcnum::{
    arc_number, extract_star, greedy_partition, is_embedded_partition, is_star, make_star,
    make_truncated_star, minimal_greedy_partition, minimal_partition, reach_table, verify_witness,
    ChordDiagram, ChordId, Gap,
};

fn diagram(max_n: usize) -> impl Strategy<Value = ChordDiagram> {
    (0..=max_n, any::<u64>()).prop_map(|(n, seed)| random_diagram(n, seed))
}

fn nonempty(max_n: usize) -> impl Strategy<Value = ChordDiagram> {
    (1..=max_n, any::<u64>()).prop_map(|(n, seed)| random_diagram(n, seed))
}

fn holds_whole_chord(d: &ChordDiagram, positions: &[usize]) -> bool {
    positions.iter().any(|&p| positions.contains(&d.partner(p)))
}

fn assert_involution(d: &ChordDiagram) {
    for p in 0..d.num_positions() {
        assert_ne!(d.partner(p), p);
        assert_eq!(d.partner(d.partner(p)), p);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn constructors_keep_the_involution(d in diagram(20), mask in any::<u32>()) {
        assert_involution(&ChordDiagram::parse(&d.to_gauss_word()).unwrap());
        let keep: Vec<ChordId> = d.chords().filter(|c| mask >> (c.0 % 32) & 1 == 1).collect();
        let (sub, map) = d.subdiagram(&keep).unwrap();
        assert_involution(&sub);
        prop_assert_eq!(sub.num_chords(), keep.len());
        prop_assert!(map.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn canonical_form_is_idempotent_and_rotation_invariant(d in diagram(16), shift in 0usize..64) {
        let canonical = d.canonical_form();
        prop_assert_eq!(ChordDiagram::parse(&canonical).unwrap().canonical_form(), canonical.clone());
        let rotated = d.rotate(shift);
        prop_assert_eq!(rotated.canonical_form(), canonical);
        prop_assert!(rotated.is_equivalent(&d));
    }

    #[test]
    fn reach_is_front_maximal(d in nonempty(64)) {
        let table = reach_table(&d).unwrap();
        let size = d.num_positions();
        let mut advance = 0;
        for g in 0..size {
            let arc = table.f_arc(Gap(g));
            let mut positions: Vec<usize> = arc.positions().collect();
            prop_assert!(!positions.is_empty());
            prop_assert!(!holds_whole_chord(&d, &positions));
            positions.push((arc.end.0 + 1) % size);
            prop_assert!(holds_whole_chord(&d, &positions));
            advance += (table.as_slice()[(g + 1) % size] + size - table.as_slice()[g]) % size;
        }
        prop_assert_eq!(advance, size);
    }

    #[test]
    fn every_greedy_partition_is_embedded(d in nonempty(64)) {
        for g in 0..d.num_positions() {
            let greedy = greedy_partition(&d, Gap(g)).unwrap();
            prop_assert_eq!(greedy.partition.cuts()[0], Gap(g));
            prop_assert!(is_embedded_partition(&d, greedy.partition.cuts()).unwrap());
            prop_assert_eq!(greedy.obstructions.len() + 1, greedy.partition.len());
            for o in &greedy.obstructions {
                prop_assert_eq!(d.partner(o.back), o.front);
                prop_assert!(o.arc.contains(o.back));
                prop_assert_eq!(o.front, (o.end().0 + 1) % d.num_positions());
            }
            // spans of distinct obstructions never share a position
            let mut owner = vec![usize::MAX; d.num_positions()];
            for (i, o) in greedy.obstructions.iter().enumerate() {
                for p in o.span().positions() {
                    prop_assert_eq!(owner[p], usize::MAX);
                    owner[p] = i;
                }
            }
        }
    }

    #[test]
    fn minimal_cuts_are_all_needed(d in nonempty(64)) {
        let partition = minimal_partition(&d);
        prop_assert_eq!(partition.len(), arc_number(&d));
        let cuts = partition.cuts();
        for skip in 0..cuts.len() {
            let fewer: Vec<Gap> = cuts.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &g)| g).collect();
            prop_assert!(!is_embedded_partition(&d, &fewer).unwrap());
        }
    }

    #[test]
    fn greedy_matches_brute_force(d in diagram(8)) {
        prop_assert_eq!(arc_number(&d), brute_force_arc_number(&d).unwrap());
    }

    #[test]
    fn subdiagrams_never_need_more_arcs(d in diagram(40), mask in any::<u64>()) {
        let keep: Vec<ChordId> = d.chords().filter(|c| mask >> (c.0 % 64) & 1 == 1).collect();
        let (sub, _) = d.subdiagram(&keep).unwrap();
        prop_assert!(arc_number(&sub) <= arc_number(&d));
    }

    #[test]
    fn extracted_witnesses_certify_the_arc_number(d in nonempty(48)) {
        let arcs = arc_number(&d);
        match extract_star(&d) {
            Ok(w) => {
                prop_assert!(arcs >= 3);
                prop_assert_eq!(w.params.a, arcs - 2);
                prop_assert!(verify_witness(&w).unwrap());
                prop_assert!(is_star_ordering(&d, &w.crossings, w.params).unwrap());
                let mut distinct = w.crossings.clone();
                distinct.sort();
                distinct.dedup();
                prop_assert_eq!(distinct.len(), w.crossings.len());
                // a subdiagram certifies a lower bound on its host
                let (sub, _) = d.subdiagram(&w.crossings).unwrap();
                prop_assert_eq!(arc_number(&sub), arcs);
            }
            Err(e) => {
                prop_assert!(arcs <= 2, "{}: {}", d.to_gauss_word(), e);
            }
        }
    }
}

#[test]
fn stars_with_positive_a_have_arc_number_a_plus_two() {
    for t in 1..=7 {
        for a in 1..=5 {
            let star = make_star(t, a).unwrap();
            assert_eq!(arc_number(&star), a + 2, "S({t},{a})");
            let recognised = is_star(&star).unwrap();
            assert!(make_star(recognised.t, recognised.a)
                .unwrap()
                .is_equivalent(&star));
        }
    }
}

#[test]
fn small_zero_stars_have_arc_number_two() {
    for t in 1..=3 {
        assert_eq!(arc_number(&make_star(t, 0).unwrap()), 2);
    }
    // S(4,0): every proper arc covers at most 4 of its 10 positions
    assert_eq!(
        brute_force_arc_number(&make_star(4, 0).unwrap()).unwrap(),
        3
    );
}

#[test]
fn full_truncation_is_a_smaller_star() {
    for a in 1..=5 {
        let truncated = make_truncated_star(a, a + 1).unwrap();
        assert!(truncated.is_equivalent(&make_star(1, a - 1).unwrap()));
    }
}

#[test]
fn extraction_handles_large_diagrams() {
    let mut certified = 0;
    for seed in 0..40 {
        let d = random_diagram(300, seed);
        let w = extract_star(&d).unwrap();
        assert!(verify_witness(&w).unwrap());
        assert_eq!(w.params.a + 2, arc_number(&d));
        certified += 1;
    }
    assert_eq!(certified, 40);
}

#[test]
fn greedy_witness_partition_starts_minimal() {
    let d = ChordDiagram::parse("DAABBCCD").unwrap();
    let greedy = minimal_greedy_partition(&d);
    assert_eq!(greedy.partition.len(), 4);
    assert_eq!(greedy.obstructions.len(), 3);
}
