//! Arc numbers of undecorated chord diagrams.
//!
//! A chord diagram is given by a Gauss word such as `ABCABC`. Its arc number
//! is the least number of arcs the circle can be cut into so that no arc
//! holds both ends of a chord. This crate computes it in quadratic time with
//! a greedy front-maximal walk, returns a minimal set of cut points, and
//! extracts a star subdiagram that certifies the value.
//!
//! ```
//! use arcnum::{arc_number, extract_star, ChordDiagram};
//!
//! let d = ChordDiagram::parse("DAABBCCD").unwrap();
//! assert_eq!(arc_number(&d), 4);
//! let witness = extract_star(&d).unwrap();
//! assert_eq!((witness.params.t, witness.params.a), (1, 2));
//! ```

pub mod arcs;
pub mod diagram;
pub mod error;
pub mod oracle;
pub mod stars;

pub use arcs::{
    arc_number, greedy_partition, is_embedded_partition, minimal_greedy_partition,
    minimal_partition, obstructing_crossing, reach_table, GreedyPartition, ObstructedArc,
    Partition, ReachTable,
};
pub use diagram::{arc_contains_position, ChordDiagram, ChordId, CircularArc, Gap};
pub use error::{Error, Result};
pub use stars::{
    extract_star, is_star, make_star, make_truncated_star, truncate_star, verify_witness,
    StarParams, StarWitness,
};
