//! Latin squares viewed as greedily colored rook's graphs: descent triples,
//! the row/column/entry cover graphs, defining-set search and verification,
//! the size bound, and exhaustive minima for tiny orders.

pub mod cover;
pub mod descent;
pub mod gds;
pub mod square;

pub use cover::{
    bound_report, build_cover_graph, gds_from_cover, gds_size_bound, BoundReport, CoverGraph,
    CoverKind, MAX_BOUND_ORDER,
};
pub use descent::{cell_vertex, latin_descents, to_ordered_instance, vertex_cell, LatinDescent};
pub use gds::{
    g_number, min_latin_gds, min_latin_gds_with_mode, verify_latin_gds, GdsMode, LatinGdsResult,
    MAX_EXACT_GDS_ORDER, MAX_G_NUMBER_ORDER,
};
pub use square::{
    for_each_latin_square, greedy_complete, greedy_square, random_latin, Cell, Completion,
    LatinSquare, PartialLatinSquare,
};
