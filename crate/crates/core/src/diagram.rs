//! Undecorated chord diagrams: positions on an oriented circle paired by a
//! fixed-point-free involution.
//!
//! Positions are `0..2n` in the preferred orientation. The open arc between
//! position `g` and `g + 1` (mod `2n`) is gap `g`; cut points live in gaps.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Identifier of a chord (full crossing): its rank by first occurrence
/// when the circle is read from position 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChordId(pub usize);

/// Index of the open arc between positions `g` and `g + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gap(pub usize);

/// The positions strictly after `start` up to and including `end`, walking
/// forward around a circle of `modulus` positions. `start == end` is empty.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CircularArc {
    pub start: Gap,
    pub end: Gap,
    pub modulus: usize,
}

impl CircularArc {
    pub fn new(start: Gap, end: Gap, modulus: usize) -> Self {
        Self {
            start,
            end,
            modulus,
        }
    }

    /// Number of positions covered.
    pub fn len(&self) -> usize {
        if self.modulus == 0 {
            return 0;
        }
        (self.end.0 + self.modulus - self.start.0) % self.modulus
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, position: usize) -> bool {
        if self.modulus == 0 {
            return false;
        }
        let offset = (position + self.modulus - self.start.0 - 1) % self.modulus;
        offset < self.len()
    }

    /// Covered positions in walking order.
    pub fn positions(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.len()).map(move |i| (self.start.0 + i) % self.modulus)
    }
}

/// Membership of `position` in `arc`.
pub fn arc_contains_position(arc: &CircularArc, position: usize) -> bool {
    arc.contains(position)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChordDiagram {
    partner: Vec<usize>,
    chord_at: Vec<usize>,
    ends: Vec<(usize, usize)>,
    labels: Option<Vec<String>>,
}

impl ChordDiagram {
    pub fn empty() -> Self {
        Self {
            partner: Vec::new(),
            chord_at: Vec::new(),
            ends: Vec::new(),
            labels: None,
        }
    }

    /// Builds a diagram from its partner involution.
    pub fn from_partner(partner: Vec<usize>) -> Result<Self> {
        let size = partner.len();
        if !size.is_multiple_of(2) {
            return Err(Error::NotInvolution(format!(
                "odd number of positions ({size})"
            )));
        }
        for (p, &q) in partner.iter().enumerate() {
            if q >= size || q == p || partner[q] != p {
                return Err(Error::NotInvolution(format!(
                    "position {p} is paired with {q}"
                )));
            }
        }
        let mut chord_at = vec![usize::MAX; size];
        let mut ends = Vec::with_capacity(size / 2);
        for p in 0..size {
            if chord_at[p] == usize::MAX {
                let id = ends.len();
                chord_at[p] = id;
                chord_at[partner[p]] = id;
                ends.push((p, partner[p]));
            }
        }
        Ok(Self {
            partner,
            chord_at,
            ends,
            labels: None,
        })
    }

    /// Attaches display labels, one per chord in first-occurrence order.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.num_chords() {
            return Err(Error::NotInvolution(format!(
                "{} labels for {} chords",
                labels.len(),
                self.num_chords()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// Parses a Gauss word.
    ///
    /// Text containing whitespace or commas is split into alphanumeric
    /// tokens; otherwise every character is a token.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        let tokens: Vec<&str> = if text.contains(|c: char| c.is_whitespace() || c == ',') {
            text.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .collect()
        } else {
            text.char_indices()
                .map(|(i, c)| &text[i..i + c.len_utf8()])
                .collect()
        };
        if let Some(bad) = tokens
            .iter()
            .find(|t| !t.chars().all(|c| c.is_ascii_alphanumeric()))
        {
            return Err(Error::MalformedWord(format!("invalid token {bad:?}")));
        }

        let mut seen: HashMap<&str, Vec<usize>> = HashMap::new();
        let mut order = Vec::new();
        for (p, &t) in tokens.iter().enumerate() {
            let slot = seen.entry(t).or_default();
            if slot.is_empty() {
                order.push(t);
            }
            slot.push(p);
        }
        for &t in &order {
            let count = seen[t].len();
            if count != 2 {
                return Err(Error::MalformedWord(format!(
                    "token {t:?} occurs {count} time{}",
                    if count == 1 { "" } else { "s" }
                )));
            }
        }
        if !tokens.len().is_multiple_of(2) {
            return Err(Error::MalformedWord(format!(
                "odd token count {}",
                tokens.len()
            )));
        }

        let mut partner = vec![0; tokens.len()];
        for &t in &order {
            let (p, q) = (seen[t][0], seen[t][1]);
            partner[p] = q;
            partner[q] = p;
        }
        let labels = order.iter().map(|t| t.to_string()).collect();
        Self::from_partner(partner)?.with_labels(labels)
    }

    pub fn num_chords(&self) -> usize {
        self.ends.len()
    }

    pub fn num_positions(&self) -> usize {
        self.partner.len()
    }

    pub fn is_empty(&self) -> bool {
        self.partner.is_empty()
    }

    /// Number of gaps; the empty diagram has a single gap.
    pub fn num_gaps(&self) -> usize {
        self.partner.len().max(1)
    }

    pub fn partner(&self, position: usize) -> usize {
        self.partner[position]
    }

    pub fn partners(&self) -> &[usize] {
        &self.partner
    }

    pub fn chord_at(&self, position: usize) -> ChordId {
        ChordId(self.chord_at[position])
    }

    /// Both positions of a chord, first occurrence first.
    pub fn chord_ends(&self, chord: ChordId) -> (usize, usize) {
        self.ends[chord.0]
    }

    pub fn chords(&self) -> impl Iterator<Item = ChordId> {
        (0..self.num_chords()).map(ChordId)
    }

    pub fn label(&self, chord: ChordId) -> String {
        match &self.labels {
            Some(labels) => labels[chord.0].clone(),
            None => token_for(chord.0, self.num_chords()),
        }
    }

    pub fn chord_by_label(&self, label: &str) -> Option<ChordId> {
        self.chords().find(|&c| self.label(c) == label)
    }

    /// Emits the word with chords renamed by first occurrence.
    pub fn to_gauss_word(&self) -> String {
        render_sequence(&self.chord_at, self.num_chords())
    }

    /// The same diagram read starting from position `shift`.
    pub fn rotate(&self, shift: usize) -> Self {
        let size = self.num_positions();
        if size == 0 {
            return Self::empty();
        }
        let shift = shift % size;
        let partner = (0..size)
            .map(|q| (self.partner[(q + shift) % size] + size - shift) % size)
            .collect();
        let rotated = Self::from_partner(partner).expect("rotation preserves the involution");
        match &self.labels {
            Some(_) => {
                let labels = rotated
                    .ends
                    .iter()
                    .map(|&(p, _)| self.label(self.chord_at((p + shift) % size)))
                    .collect();
                rotated.with_labels(labels).expect("label count unchanged")
            }
            None => rotated,
        }
    }

    /// First-occurrence relabeling of the word read from position `shift`.
    fn relabeled_from(&self, shift: usize, out: &mut Vec<usize>) {
        let size = self.num_positions();
        let mut rename = vec![usize::MAX; self.num_chords()];
        let mut next = 0;
        out.clear();
        for q in 0..size {
            let c = self.chord_at[(q + shift) % size];
            if rename[c] == usize::MAX {
                rename[c] = next;
                next += 1;
            }
            out.push(rename[c]);
        }
    }

    /// Lexicographically least relabeled rotation, as chord indices.
    pub fn canonical_sequence(&self) -> Vec<usize> {
        let mut best = Vec::new();
        self.relabeled_from(0, &mut best);
        let mut candidate = Vec::with_capacity(best.len());
        for shift in 1..self.num_positions() {
            self.relabeled_from(shift, &mut candidate);
            if candidate < best {
                std::mem::swap(&mut best, &mut candidate);
            }
        }
        best
    }

    /// Canonical Gauss word: equal for two diagrams iff they agree up to
    /// rotation and relabeling.
    pub fn canonical_form(&self) -> String {
        render_sequence(&self.canonical_sequence(), self.num_chords())
    }

    pub fn is_equivalent(&self, other: &Self) -> bool {
        self.num_positions() == other.num_positions()
            && self.canonical_sequence() == other.canonical_sequence()
    }

    /// Restriction to a set of chords. Returns the subdiagram and, for each
    /// of its positions, the host position it came from.
    pub fn subdiagram(&self, chords: &[ChordId]) -> Result<(Self, Vec<usize>)> {
        let mut keep = vec![false; self.num_chords()];
        for c in chords {
            if c.0 >= self.num_chords() {
                return Err(Error::UnknownChord(format!("#{}", c.0)));
            }
            keep[c.0] = true;
        }
        let map: Vec<usize> = (0..self.num_positions())
            .filter(|&p| keep[self.chord_at[p]])
            .collect();
        let mut new_of_old = vec![usize::MAX; self.num_positions()];
        for (new, &old) in map.iter().enumerate() {
            new_of_old[old] = new;
        }
        let partner = map
            .iter()
            .map(|&old| new_of_old[self.partner[old]])
            .collect();
        let sub = Self::from_partner(partner)?;
        let sub = match &self.labels {
            Some(_) => {
                let labels = sub
                    .ends
                    .iter()
                    .map(|&(p, _)| self.label(self.chord_at(map[p])))
                    .collect();
                sub.with_labels(labels)?
            }
            None => sub,
        };
        Ok((sub, map))
    }

    /// Restriction to chords named by label.
    pub fn subdiagram_by_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<(Self, Vec<usize>)> {
        let chords = labels
            .iter()
            .map(|l| {
                self.chord_by_label(l.as_ref())
                    .ok_or_else(|| Error::UnknownChord(l.as_ref().to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        self.subdiagram(&chords)
    }
}

impl fmt::Display for ChordDiagram {
    /// The word with the diagram's own labels.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tokens: Vec<String> = (0..self.num_positions())
            .map(|p| self.label(self.chord_at(p)))
            .collect();
        if tokens.iter().all(|t| t.len() == 1) {
            write!(f, "{}", tokens.concat())
        } else {
            write!(f, "{}", tokens.join(" "))
        }
    }
}

/// Letters up to 26 chords, 1-based decimals beyond.
fn token_for(index: usize, num_chords: usize) -> String {
    if num_chords <= 26 {
        char::from(b'A' + index as u8).to_string()
    } else {
        (index + 1).to_string()
    }
}

fn render_sequence(seq: &[usize], num_chords: usize) -> String {
    let tokens = seq.iter().map(|&c| token_for(c, num_chords));
    if num_chords <= 26 {
        tokens.collect()
    } else {
        tokens.collect::<Vec<_>>().join(" ")
    }
}
