//! Naive reference implementations for small diagrams.
//!
//! Nothing here touches the reach table or the greedy walk: arc numbers come
//! from trying every cut set, stars from trying every chord subset.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::diagram::{ChordDiagram, ChordId};
use crate::error::{Error, Result};
use crate::stars::{make_star, star_ordering, StarParams, StarWitness};

/// Largest chord count accepted by the subset searches.
pub const MAX_SUBSET_CHORDS: usize = 8;
/// Largest chord count accepted by [`enumerate_diagrams`].
pub const MAX_CENSUS_CHORDS: usize = 6;

fn guard(what: &'static str, n: usize, max: usize) -> Result<()> {
    if n > max {
        return Err(Error::SizeGuard { what, n, max });
    }
    Ok(())
}

/// Calls `visit` with every `k`-subset of `0..n` in lexicographic order
/// until it returns `true`.
fn any_subset(n: usize, k: usize, mut visit: impl FnMut(&[usize]) -> bool) -> bool {
    if k > n {
        return false;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if visit(&idx) {
            return true;
        }
        let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
            return false;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Cutting at the sorted gaps `cuts` leaves no arc holding a whole chord.
fn cuts_are_proper(diagram: &ChordDiagram, cuts: &[usize]) -> bool {
    let size = diagram.num_positions();
    let k = cuts.len();
    (0..k).all(|i| {
        let from = cuts[i];
        let to = if k == 1 {
            from + size
        } else if i + 1 < k {
            cuts[i + 1]
        } else {
            cuts[0] + size
        };
        let arc: Vec<usize> = (from + 1..=to).map(|p| p % size).collect();
        arc.iter().all(|&p| !arc.contains(&diagram.partner(p)))
    })
}

/// Arc number by exhaustive search over cut sets of increasing size.
pub fn brute_force_arc_number(diagram: &ChordDiagram) -> Result<usize> {
    guard(
        "brute-force arc number",
        diagram.num_chords(),
        MAX_SUBSET_CHORDS,
    )?;
    let size = diagram.num_positions();
    if size == 0 {
        return Ok(1);
    }
    (1..=size)
        .find(|&k| any_subset(size, k, |cuts| cuts_are_proper(diagram, cuts)))
        .ok_or_else(|| Error::Internal("cutting every gap must succeed".into()))
}

/// First chord subset inducing `S(t, a)` for some `t`, smallest `t` first.
pub fn brute_force_find_star(diagram: &ChordDiagram, a: usize) -> Result<Option<StarWitness<'_>>> {
    if a < 1 {
        return Err(Error::InvalidStarParams("star search needs a >= 1".into()));
    }
    let n = diagram.num_chords();
    guard("brute-force star search", n, MAX_SUBSET_CHORDS)?;
    for t in 1.. {
        let params = StarParams { t, a };
        let m = params.num_chords();
        if m > n {
            break;
        }
        let target = make_star(t, a)?.canonical_sequence();
        let mut found = None;
        any_subset(n, m, |subset| {
            let chords: Vec<ChordId> = subset.iter().map(|&c| ChordId(c)).collect();
            let (sub, _) = diagram.subdiagram(&chords).expect("chords in range");
            if sub.canonical_sequence() == target {
                found = Some(chords);
                true
            } else {
                false
            }
        });
        if let Some(chords) = found {
            let crossings = star_ordering(diagram, &chords, params)?.ok_or_else(|| {
                Error::Internal("equivalent subdiagram has no star ordering".into())
            })?;
            return Ok(Some(StarWitness {
                params,
                crossings,
                host: diagram,
            }));
        }
    }
    Ok(None)
}

/// Every perfect matching of `2n` positions, each exactly once.
pub fn enumerate_diagrams(n: usize) -> Result<impl Iterator<Item = ChordDiagram>> {
    guard("census", n, MAX_CENSUS_CHORDS)?;
    let mut out = Vec::new();
    let mut partner = vec![usize::MAX; 2 * n];
    matchings(&mut partner, &mut out);
    Ok(out.into_iter())
}

/// One representative per equivalence class, in order of first appearance.
pub fn enumerate_canonical(n: usize) -> Result<impl Iterator<Item = ChordDiagram>> {
    let mut seen = std::collections::HashSet::new();
    Ok(enumerate_diagrams(n)?.filter(move |d| seen.insert(d.canonical_sequence())))
}

fn matchings(partner: &mut [usize], out: &mut Vec<ChordDiagram>) {
    let Some(p) = partner.iter().position(|&q| q == usize::MAX) else {
        out.push(ChordDiagram::from_partner(partner.to_vec()).expect("complete matching"));
        return;
    };
    for q in p + 1..partner.len() {
        if partner[q] == usize::MAX {
            partner[p] = q;
            partner[q] = p;
            matchings(partner, out);
            partner[p] = usize::MAX;
            partner[q] = usize::MAX;
        }
    }
}

/// Uniform random diagram with `n` chords.
///
/// Shuffles the positions `0..2n` with a ChaCha8 generator seeded from
/// `seed`, then pairs consecutive entries of the shuffled list.
pub fn random_diagram(n: usize, seed: u64) -> ChordDiagram {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut positions: Vec<usize> = (0..2 * n).collect();
    positions.shuffle(&mut rng);
    let mut partner = vec![0; 2 * n];
    for pair in positions.chunks_exact(2) {
        partner[pair[0]] = pair[1];
        partner[pair[1]] = pair[0];
    }
    ChordDiagram::from_partner(partner).expect("shuffled pairing is an involution")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(word: &str) -> ChordDiagram {
        ChordDiagram::parse(word).unwrap()
    }

    #[test]
    fn brute_force_arc_numbers() {
        assert_eq!(brute_force_arc_number(&d("AABBCC")).unwrap(), 3);
        assert_eq!(brute_force_arc_number(&d("ABCABC")).unwrap(), 2);
        assert_eq!(brute_force_arc_number(&d("AA")).unwrap(), 2);
        assert_eq!(brute_force_arc_number(&d("")).unwrap(), 1);
        assert_eq!(brute_force_arc_number(&d("DAABBCCD")).unwrap(), 4);
        assert!(matches!(
            brute_force_arc_number(&random_diagram(9, 0)),
            Err(Error::SizeGuard { n: 9, .. })
        ));
    }

    #[test]
    fn oracle_on_stars() {
        for t in 1..=3 {
            for a in 0..=2 {
                let star = make_star(t, a).unwrap();
                if star.num_chords() <= MAX_SUBSET_CHORDS {
                    assert_eq!(brute_force_arc_number(&star).unwrap(), a + 2, "S({t},{a})");
                }
            }
        }
    }

    #[test]
    fn brute_force_stars() {
        let s21 = make_star(2, 1).unwrap();
        let w = brute_force_find_star(&s21, 1).unwrap().unwrap();
        assert_eq!(w.params, StarParams { t: 2, a: 1 });
        assert!(crate::stars::is_star_ordering(&s21, &w.crossings, w.params).unwrap());

        assert!(brute_force_find_star(&d("ABAB"), 1).unwrap().is_none());

        let s12 = make_star(1, 2).unwrap();
        let w = brute_force_find_star(&s12, 1).unwrap().unwrap();
        assert_eq!(w.params.t, 1);
        assert!(brute_force_find_star(&s12, 0).is_err());
    }

    #[test]
    fn census_counts() {
        let words: Vec<String> = enumerate_diagrams(2)
            .unwrap()
            .map(|d| d.to_gauss_word())
            .collect();
        assert_eq!(words, ["AABB", "ABAB", "ABBA"]);
        assert_eq!(enumerate_diagrams(0).unwrap().count(), 1);
        assert_eq!(
            enumerate_diagrams(1)
                .unwrap()
                .map(|d| d.to_gauss_word())
                .collect::<Vec<_>>(),
            ["AA"]
        );
        let mut double_factorial = 1;
        for n in 1..=MAX_CENSUS_CHORDS {
            double_factorial *= 2 * n - 1;
            assert_eq!(enumerate_diagrams(n).unwrap().count(), double_factorial);
        }
        assert!(enumerate_diagrams(7).is_err());
        // AABB and ABBA are rotations of each other
        assert_eq!(enumerate_canonical(2).unwrap().count(), 2);
    }

    #[test]
    fn random_diagrams() {
        assert!(random_diagram(0, 42).is_empty());
        assert_eq!(random_diagram(3, 1), random_diagram(3, 1));
        let d = random_diagram(5, 7);
        assert_eq!(d.num_chords(), 5);
        for p in 0..10 {
            assert_ne!(d.partner(p), p);
            assert_eq!(d.partner(d.partner(p)), p);
        }
    }
}
