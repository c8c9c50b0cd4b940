//! Descents of a Latin square and the bridge to the ordered-graph view.
//!
//! A square is the same thing as a proper n-coloring of the rook's graph on
//! its cells (same row or same column means adjacent) processed in
//! row-major order. Under that view a descent consists of three cells: a
//! cell `(i,j;y)`, its row mate `(i,k;x)` and its column mate `(r,j;x)`
//! with `k > j`, `r > i` and `x < y` — the two places the smaller entry
//! `x` would have to move through for the greedy fill to pick `y` at
//! `(i,j)`.

use crate::error::Result;
use crate::graph::{OrderedGraph, ProperColoring, SimpleGraph};

use super::square::{Cell, LatinSquare};

/// A Latin-square descent. Both mates carry the same smaller entry `x`;
/// the row mate sits to the right of the head, the column mate below it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LatinDescent {
    pub y_cell: Cell,
    pub row_mate: Cell,
    pub col_mate: Cell,
}

impl LatinDescent {
    pub fn low_entry(&self) -> usize {
        self.row_mate.entry
    }

    pub fn high_entry(&self) -> usize {
        self.y_cell.entry
    }

    pub fn cells(&self) -> [Cell; 3] {
        [self.y_cell, self.row_mate, self.col_mate]
    }

    /// The three positions as a sorted list of `(row, col)` pairs.
    pub fn positions(&self) -> Vec<(usize, usize)> {
        let mut v: Vec<(usize, usize)> =
            self.cells().iter().map(|c| (c.row, c.col)).collect();
        v.sort_unstable();
        v
    }
}

/// Enumerates all descents of `l`, ordered by head cell and then by the
/// smaller entry. For each head `(i,j;y)` and each `x < y` the row and
/// column both hold `x` exactly once, so the scan is `O(n^3)`.
pub fn latin_descents(l: &LatinSquare) -> Vec<LatinDescent> {
    let n = l.n();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            let y = l.entry(i, j);
            for x in 1..y {
                let k = l.column_of(i, x);
                let r = l.row_of(j, x);
                if k > j && r > i {
                    out.push(LatinDescent {
                        y_cell: Cell::new(i, j, y),
                        row_mate: Cell::new(i, k, x),
                        col_mate: Cell::new(r, j, x),
                    });
                }
            }
        }
    }
    out
}

/// Vertex id of cell `(row, col)` in the row-major rook's-graph encoding.
pub fn cell_vertex(n: usize, row: usize, col: usize) -> usize {
    (row - 1) * n + col
}

/// Inverse of [`cell_vertex`].
pub fn vertex_cell(n: usize, v: usize) -> (usize, usize) {
    ((v - 1) / n + 1, (v - 1) % n + 1)
}

/// Encodes the square as an ordered graph plus coloring: the rook's graph
/// on its n² cells in row-major order, colored by entries. The chromatic
/// number is `n` (each row is a clique and the entries color it).
pub fn to_ordered_instance(l: &LatinSquare) -> Result<(OrderedGraph, ProperColoring)> {
    let n = l.n();
    let mut edges = Vec::with_capacity(n * n * (n - 1));
    for row in 1..=n {
        for a in 1..=n {
            for b in a + 1..=n {
                edges.push((cell_vertex(n, row, a), cell_vertex(n, row, b)));
            }
        }
    }
    for col in 1..=n {
        for a in 1..=n {
            for b in a + 1..=n {
                edges.push((cell_vertex(n, a, col), cell_vertex(n, b, col)));
            }
        }
    }
    let graph = SimpleGraph::new(n * n, edges)?;
    let mut colors = Vec::with_capacity(n * n);
    for row in 1..=n {
        for col in 1..=n {
            colors.push(l.entry(row, col));
        }
    }
    let coloring = ProperColoring::new(&graph, colors)?;
    Ok((OrderedGraph::with_identity_order(graph), coloring))
}
