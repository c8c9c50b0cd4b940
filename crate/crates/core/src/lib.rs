//! Greedy defining sets of ordered graphs and Latin squares.
//!
//! The first-fit (greedy) coloring of a graph processes the vertices in a
//! fixed order and gives each the smallest color absent from its colored
//! neighborhood. A *greedy defining set* is a pre-colored vertex subset
//! that makes the run finish with an optimal number of colors; the
//! *greedy defining number* is the smallest size of such a set. Pre-colored
//! subsets steering the run towards a fixed target coloring are exactly the
//! transversals of the target's *descents*, which turns defining-set
//! questions into hitting-set questions.
//!
//! The crate provides:
//!
//! * [`greedy`] — the coloring engine, descent enumeration and defining-set
//!   verification;
//! * [`chromatic`] — exact chromatic numbers at desk scale;
//! * [`exact`] — minimum hitting set, minimum vertex cover, and the greedy
//!   defining number for one coloring or over all colorings, with an
//!   independent brute-force oracle;
//! * [`forest`] — the polynomial-time defining number of ordered forests;
//! * [`reductions`] — executable reductions from vertex cover, with
//!   solution maps in both directions;
//! * [`latin`] — Latin squares as greedily colored rook's graphs: descent
//!   triples, the row/column/entry cover graphs, defining-set search, a
//!   size bound, and exhaustive minima for tiny orders;
//! * [`sharing`] — a key-sharing scheme whose shares are fragments of
//!   defining sets and whose recovery is a greedy completion;
//! * [`io`] — the text file formats used by the CLI.

pub mod chromatic;
pub mod error;
pub mod exact;
pub mod forest;
pub mod graph;
pub mod greedy;
pub mod io;
pub mod latin;
pub mod reductions;
pub mod sharing;

pub use error::{Error, Result};
pub use graph::{OrderedGraph, PartialColoring, ProperColoring, SimpleGraph};
pub use greedy::{find_descents, greedy_color, is_gds, is_transversal, Descent, GreedyOutcome};
pub use latin::{LatinSquare, PartialLatinSquare};
