//! Star diagrams `S(t, a)` and star-subdiagram witnesses.
//!
//! `S(t, a)` has `m = 1 + (a + 1) t` chords on `2m` positions, chord `c_j`
//! joining positions `j` and `j + 2t - 1` for every even `j`. Its star
//! ordering visits `c_j, c_{j+2t}, c_{j+4t}, ...`, each chord starting just
//! after the previous one ends. A diagram contains some `S(t, a)` with
//! `a >= 1` exactly when its arc number is at least `a + 2`.

use std::fmt;

use crate::arcs::{minimal_greedy_partition, ObstructedArc, ReachTable};
use crate::diagram::{ChordDiagram, ChordId};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StarParams {
    pub t: usize,
    pub a: usize,
}

impl StarParams {
    pub fn new(t: usize, a: usize) -> Result<Self> {
        if t < 1 {
            return Err(Error::InvalidStarParams(format!("t must be >= 1, got {t}")));
        }
        Ok(Self { t, a })
    }

    pub fn num_chords(&self) -> usize {
        1 + (self.a + 1) * self.t
    }
}

impl fmt::Display for StarParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t={} a={}", self.t, self.a)
    }
}

/// Builds `S(t, a)`.
pub fn make_star(t: usize, a: usize) -> Result<ChordDiagram> {
    let params = StarParams::new(t, a)?;
    Ok(star_diagram(params))
}

fn star_diagram(params: StarParams) -> ChordDiagram {
    let size = 2 * params.num_chords();
    let mut partner = vec![0; size];
    for j in (0..size).step_by(2) {
        let k = (j + 2 * params.t - 1) % size;
        partner[j] = k;
        partner[k] = j;
    }
    ChordDiagram::from_partner(partner).expect("star generator yields an involution")
}

/// Chords of `S(t, a)` in star ordering starting at `c_0`.
fn star_ordering_of_generator(star: &ChordDiagram, params: StarParams) -> Vec<ChordId> {
    let size = star.num_positions();
    (0..params.num_chords())
        .map(|i| star.chord_at((2 * params.t * i) % size))
        .collect()
}

/// The first `n` chords of a star ordering of `S(t, a)`, `1 <= n <= 1 + (a+1)t`.
pub fn truncate_star(t: usize, a: usize, n: usize) -> Result<ChordDiagram> {
    let params = StarParams::new(t, a)?;
    if n < 1 || n > params.num_chords() {
        return Err(Error::InvalidStarParams(format!(
            "cannot keep {n} of {} chords",
            params.num_chords()
        )));
    }
    let star = star_diagram(params);
    let mut order = star_ordering_of_generator(&star, params);
    order.truncate(n);
    Ok(star.subdiagram(&order)?.0)
}

/// The truncated star `S_a^n`, taken from the least `t` with
/// `1 + (a+1)t > n`. Which `t` is used does not matter up to equivalence.
pub fn make_truncated_star(a: usize, n: usize) -> Result<ChordDiagram> {
    if n < 1 {
        return Err(Error::InvalidStarParams("truncation needs n >= 1".into()));
    }
    let t = n.div_ceil(a + 1).max(1);
    truncate_star(t, a, n)
}

/// Star parameters of `diagram` if it is equivalent to some `S(t, a)`.
pub fn is_star(diagram: &ChordDiagram) -> Option<StarParams> {
    let n = diagram.num_chords();
    if n < 2 {
        return None;
    }
    let canonical = diagram.canonical_sequence();
    (1..n).filter(|&t| (n - 1).is_multiple_of(t)).find_map(|t| {
        let params = StarParams {
            t,
            a: (n - 1) / t - 1,
        };
        (star_diagram(params).canonical_sequence() == canonical).then_some(params)
    })
}

/// Reorders `chords` of `host` into a star ordering of `S(params)`, if the
/// chords induce that star.
pub fn star_ordering(
    host: &ChordDiagram,
    chords: &[ChordId],
    params: StarParams,
) -> Result<Option<Vec<ChordId>>> {
    let (sub, map) = host.subdiagram(chords)?;
    let m = params.num_chords();
    if sub.num_chords() != m {
        return Ok(None);
    }
    let size = 2 * m;
    let step = 2 * params.t;
    for first in 0..size {
        let consistent = (0..m).all(|i| {
            let back = (first + step * i) % size;
            sub.partner(back) == (back + step - 1) % size
        });
        if consistent {
            let order = (0..m)
                .map(|i| host.chord_at(map[(first + step * i) % size]))
                .collect();
            return Ok(Some(order));
        }
    }
    Ok(None)
}

/// Whether `chords`, in the given order, is a star ordering of an induced
/// `S(params)`.
pub fn is_star_ordering(
    host: &ChordDiagram,
    chords: &[ChordId],
    params: StarParams,
) -> Result<bool> {
    let (sub, map) = host.subdiagram(chords)?;
    let m = params.num_chords();
    if chords.len() != m || sub.num_chords() != m {
        return Ok(false);
    }
    let size = 2 * m;
    let step = 2 * params.t;
    let Some(anchor) = (0..size).find(|&s| host.chord_at(map[s]) == chords[0]) else {
        return Ok(false);
    };
    for first in [anchor, sub.partner(anchor)] {
        let ok = chords.iter().enumerate().all(|(i, &c)| {
            let back = (first + step * i) % size;
            let front = (back + step - 1) % size;
            sub.partner(back) == front && host.chord_at(map[back]) == c
        });
        if ok {
            return Ok(true);
        }
    }
    Ok(false)
}

/// A set of host chords, in star ordering, inducing `S(t, a)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarWitness<'h> {
    pub params: StarParams,
    pub crossings: Vec<ChordId>,
    pub host: &'h ChordDiagram,
}

impl StarWitness<'_> {
    pub fn labels(&self) -> Vec<String> {
        self.crossings.iter().map(|&c| self.host.label(c)).collect()
    }

    /// Canonical word of the induced subdiagram.
    pub fn induced_word(&self) -> Result<String> {
        Ok(self.host.subdiagram(&self.crossings)?.0.canonical_form())
    }
}

impl fmt::Display for StarWitness<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} chords={}", self.params, self.labels().join(","))
    }
}

/// Checks that the witness chords induce `S(t, a)` in the host.
pub fn verify_witness(witness: &StarWitness<'_>) -> Result<bool> {
    let (sub, _) = witness.host.subdiagram(&witness.crossings)?;
    Ok(witness.crossings.len() == witness.params.num_chords()
        && sub.canonical_sequence() == star_diagram(witness.params).canonical_sequence())
}

/// Finds a star subdiagram certifying the arc number of `diagram`.
///
/// Starting from a minimal greedy partition with `a + 2` arcs, keeps
/// growing f-arcs around the circle and records each obstructing crossing
/// `c_1, c_2, ...`. Once the front end of the newest crossing `c_k` falls
/// outside the span of `c_{k - x(a+1)}` for the least such `x`, the chords
/// `c_{k - x(a+1)}, ..., c_k` form `S(x, a)`. The returned crossings keep
/// that cyclic order, rotated to start at the chord seen first from
/// position 0.
pub fn extract_star(diagram: &ChordDiagram) -> Result<StarWitness<'_>> {
    let greedy = minimal_greedy_partition(diagram);
    let arc_number = greedy.partition.len();
    if arc_number <= 2 {
        return Err(Error::NoStar(arc_number));
    }
    let a = arc_number - 2;
    let period = a + 1;
    let table = ReachTable::new(diagram)?;
    let mut stages: Vec<ObstructedArc> = greedy.obstructions;
    if stages.len() != period {
        return Err(Error::Internal(format!(
            "minimal partition with {arc_number} arcs has {} f-arcs",
            stages.len()
        )));
    }
    let mut seen = vec![false; diagram.num_chords()];
    for stage in &stages {
        if std::mem::replace(&mut seen[stage.chord.0], true) {
            return Err(Error::Internal("repeated obstructing crossing".into()));
        }
    }

    let mut cut = *greedy.partition.cuts().last().expect("nonempty partition");
    while stages.len() < diagram.num_chords() {
        let newest = table.obstruction(diagram, cut);
        cut = newest.end();
        if std::mem::replace(&mut seen[newest.chord.0], true) {
            return Err(Error::Internal(format!(
                "obstructing crossing {} repeated at stage {}",
                diagram.label(newest.chord),
                stages.len() + 1
            )));
        }
        stages.push(newest);
        let k = stages.len();

        let escaped = (1..)
            .take_while(|x| x * period < k)
            .find(|x| !stages[k - 1 - x * period].span().contains(newest.front));
        if let Some(t) = escaped {
            let mut crossings: Vec<ChordId> = stages[k - 1 - t * period..]
                .iter()
                .map(|s| s.chord)
                .collect();
            // any cyclic shift of a star ordering is one; lead with the earliest chord
            let lead = (0..crossings.len())
                .min_by_key(|&i| crossings[i])
                .unwrap_or(0);
            crossings.rotate_left(lead);
            let witness = StarWitness {
                params: StarParams { t, a },
                crossings,
                host: diagram,
            };
            if !verify_witness(&witness)? {
                return Err(Error::Internal(format!(
                    "extracted chords {} do not induce {}",
                    witness.labels().join(","),
                    witness.params
                )));
            }
            return Ok(witness);
        }
    }
    Err(Error::Internal(format!(
        "no star found within {} stages",
        diagram.num_chords()
    )))
}
