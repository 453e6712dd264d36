//! Front-maximal arcs, greedy embedded partitions and the arc number.
//!
//! Everything here works in the discrete model: a cut point is a [`Gap`], and
//! the arc following cut `g` covers positions `g + 1, g + 2, ...`. An arc is
//! properly embedded when it holds at most one end of every chord.

use std::fmt;

use crate::diagram::{ChordDiagram, ChordId, CircularArc, Gap};
use crate::error::{Error, Result};

/// For every start gap `g`, the end gap of the longest properly embedded
/// arc beginning right after `g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReachTable {
    reach: Vec<usize>,
}

impl ReachTable {
    /// Two-pointer sweep over all start gaps, O(n) overall.
    ///
    /// The window `(g, g + len]` only ever grows at the front and shrinks at
    /// the back, since a sub-arc of a properly embedded arc is properly
    /// embedded.
    pub fn new(diagram: &ChordDiagram) -> Result<Self> {
        let size = diagram.num_positions();
        if size == 0 {
            return Err(Error::EmptyDiagram);
        }
        let partner = diagram.partners();
        let mut reach = Vec::with_capacity(size);
        let mut len = 0usize;
        for g in 0..size {
            len = len.saturating_sub(1);
            let first = g + 1;
            loop {
                let next = (first + len) % size;
                // the position completes a chord iff its partner is already in the window
                let partner_offset = (partner[next] + size - first % size) % size;
                if partner_offset < len {
                    break;
                }
                len += 1;
            }
            reach.push((g + len) % size);
        }
        Ok(Self { reach })
    }

    pub fn modulus(&self) -> usize {
        self.reach.len()
    }

    pub fn reach(&self, start: Gap) -> Gap {
        Gap(self.reach[start.0])
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.reach
    }

    /// The f-arc following `start`.
    pub fn f_arc(&self, start: Gap) -> CircularArc {
        CircularArc::new(start, self.reach(start), self.modulus())
    }

    /// The f-arc following `start` with its obstructing crossing.
    pub fn obstruction(&self, diagram: &ChordDiagram, start: Gap) -> ObstructedArc {
        let arc = self.f_arc(start);
        let front = (arc.end.0 + 1) % self.modulus();
        let back = diagram.partner(front);
        debug_assert!(
            arc.contains(back),
            "obstructing chord must start inside the f-arc"
        );
        ObstructedArc {
            arc,
            chord: diagram.chord_at(front),
            back,
            front,
        }
    }

    /// Number of arcs in the greedy partition started at `start`.
    fn greedy_count(&self, start: usize) -> usize {
        let size = self.modulus();
        let mut travelled = 0;
        let mut cut = start;
        let mut count = 1;
        loop {
            let next = self.reach[cut];
            travelled += (next + size - cut) % size;
            if travelled >= size {
                return count;
            }
            cut = next;
            count += 1;
        }
    }
}

/// Computes the reach table of a nonempty diagram.
pub fn reach_table(diagram: &ChordDiagram) -> Result<ReachTable> {
    ReachTable::new(diagram)
}

/// An f-arc and the chord that stops it from growing further forward.
///
/// `front` is the position just past the arc, `back` its partner, which
/// always lies inside the arc.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ObstructedArc {
    pub arc: CircularArc,
    pub chord: ChordId,
    pub back: usize,
    pub front: usize,
}

impl ObstructedArc {
    pub fn start(&self) -> Gap {
        self.arc.start
    }

    pub fn end(&self) -> Gap {
        self.arc.end
    }

    /// Positions strictly between the back and front ends of the obstructing
    /// chord; a properly embedded sub-arc of the f-arc.
    pub fn span(&self) -> CircularArc {
        let m = self.arc.modulus;
        CircularArc::new(Gap(self.back), Gap((self.front + m - 1) % m), m)
    }
}

/// Cut gaps in cyclic order, starting from the gap the partition was grown
/// from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    cuts: Vec<Gap>,
}

impl Partition {
    pub fn new(cuts: Vec<Gap>) -> Self {
        assert!(!cuts.is_empty(), "a partition has at least one cut");
        Self { cuts }
    }

    pub fn cuts(&self) -> &[Gap] {
        &self.cuts
    }

    /// Number of arcs, equal to the number of cuts.
    pub fn len(&self) -> usize {
        self.cuts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn sorted_indices(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.cuts.iter().map(|g| g.0).collect();
        v.sort_unstable();
        v
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .sorted_indices()
            .iter()
            .map(|g| g.to_string())
            .collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Partition grown from one start gap, with the obstruction of every f-arc.
/// The closing arc back to the start has no obstruction record.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyPartition {
    pub partition: Partition,
    pub obstructions: Vec<ObstructedArc>,
}

fn check_gap(diagram: &ChordDiagram, gap: Gap) -> Result<()> {
    if gap.0 >= diagram.num_gaps() {
        return Err(Error::GapOutOfRange {
            gap: gap.0,
            gaps: diagram.num_gaps(),
        });
    }
    Ok(())
}

/// Places a cut at `start`, then repeatedly cuts at the end of the f-arc
/// from the previous cut until the next f-arc would reach `start` again.
pub fn greedy_partition(diagram: &ChordDiagram, start: Gap) -> Result<GreedyPartition> {
    check_gap(diagram, start)?;
    let table = ReachTable::new(diagram)?;
    Ok(greedy_from_table(diagram, &table, start))
}

pub(crate) fn greedy_from_table(
    diagram: &ChordDiagram,
    table: &ReachTable,
    start: Gap,
) -> GreedyPartition {
    let size = table.modulus();
    let mut cuts = vec![start];
    let mut obstructions = Vec::new();
    let mut travelled = 0;
    let mut cut = start;
    loop {
        let arc = table.f_arc(cut);
        travelled += arc.len();
        if travelled >= size {
            break;
        }
        obstructions.push(table.obstruction(diagram, cut));
        cut = arc.end;
        cuts.push(cut);
    }
    GreedyPartition {
        partition: Partition::new(cuts),
        obstructions,
    }
}

/// Least number of properly embedded arcs covering the circle.
///
/// The empty diagram has arc number 1 by convention.
pub fn arc_number(diagram: &ChordDiagram) -> usize {
    match ReachTable::new(diagram) {
        Ok(table) => minimal_start(&table).1,
        Err(_) => 1,
    }
}

/// Least start gap whose greedy partition is minimal, and its arc count.
fn minimal_start(table: &ReachTable) -> (Gap, usize) {
    let mut best = (Gap(0), usize::MAX);
    for g in 0..table.modulus() {
        let count = table.greedy_count(g);
        if count < best.1 {
            best = (Gap(g), count);
        }
    }
    best
}

/// A minimal embedded partition; ties broken by least start gap.
pub fn minimal_partition(diagram: &ChordDiagram) -> Partition {
    minimal_greedy_partition(diagram).partition
}

/// The greedy partition behind [`minimal_partition`], with obstructions.
pub fn minimal_greedy_partition(diagram: &ChordDiagram) -> GreedyPartition {
    match ReachTable::new(diagram) {
        Ok(table) => {
            let (start, _) = minimal_start(&table);
            greedy_from_table(diagram, &table, start)
        }
        Err(_) => GreedyPartition {
            partition: Partition::new(vec![Gap(0)]),
            obstructions: Vec::new(),
        },
    }
}

/// Whether cutting at `cuts` leaves only properly embedded arcs.
pub fn is_embedded_partition(diagram: &ChordDiagram, cuts: &[Gap]) -> Result<bool> {
    for &g in cuts {
        check_gap(diagram, g)?;
    }
    if cuts.is_empty() {
        return Ok(false);
    }
    let size = diagram.num_positions();
    if size == 0 {
        return Ok(true);
    }
    let mut is_cut = vec![false; size];
    for g in cuts {
        is_cut[g.0] = true;
    }
    // component label of each position, counting cuts passed since the first cut
    let first = cuts.iter().map(|g| g.0).min().expect("nonempty");
    let mut component = vec![0usize; size];
    let mut current = 0;
    for step in 1..=size {
        let p = (first + step) % size;
        component[p] = current;
        if is_cut[p] {
            current += 1;
        }
    }
    Ok(diagram.chords().all(|c| {
        let (p, q) = diagram.chord_ends(c);
        component[p] != component[q]
    }))
}

/// The f-arc after `start` and its obstructing crossing.
pub fn obstructing_crossing(diagram: &ChordDiagram, start: Gap) -> Result<ObstructedArc> {
    check_gap(diagram, start)?;
    let table = ReachTable::new(diagram)?;
    Ok(table.obstruction(diagram, start))
}
