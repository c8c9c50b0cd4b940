//! The three auxiliary cover graphs of a Latin square.
//!
//! Each descent projects onto a pair of entries sharing the head's row, a
//! pair of entries sharing the head's column, and the pair of cells holding
//! the smaller entry. Collecting those pairs per row, per column and per
//! entry yields three graphs, each a disjoint union of n components on n
//! vertices. A vertex cover of any one of them, read back as cells, meets
//! every descent and is therefore a greedy defining set of the square.

use crate::error::{Error, Result};
use crate::exact::min_vertex_cover;
use crate::graph::SimpleGraph;

use super::descent::latin_descents;
use super::square::{Cell, LatinSquare, PartialLatinSquare};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverKind {
    /// One component per row; vertices are entries.
    Row,
    /// One component per column; vertices are entries.
    Col,
    /// One component per entry; vertices are the rows holding it.
    Entry,
}

impl CoverKind {
    pub const ALL: [CoverKind; 3] = [CoverKind::Row, CoverKind::Col, CoverKind::Entry];
}

impl std::fmt::Display for CoverKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CoverKind::Row => write!(f, "rows"),
            CoverKind::Col => write!(f, "cols"),
            CoverKind::Entry => write!(f, "entries"),
        }
    }
}

/// A cover graph: `n` components, each on vertex keys `1..=n`, plus the map
/// from `(component, key)` back to the cell it stands for.
#[derive(Debug, Clone)]
pub struct CoverGraph {
    kind: CoverKind,
    n: usize,
    /// `edges[c]` holds the `(key, key)` pairs of component `c + 1`,
    /// deduplicated and sorted, with the smaller key first.
    edges: Vec<Vec<(usize, usize)>>,
    /// `cells[c][k]` is the cell represented by key `k + 1` of component
    /// `c + 1`; a bijection onto the n² cells.
    cells: Vec<Vec<Cell>>,
}

impl CoverGraph {
    pub fn kind(&self) -> CoverKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn component_edges(&self, component: usize) -> &[(usize, usize)] {
        &self.edges[component - 1]
    }

    pub fn edge_count(&self) -> usize {
        self.edges.iter().map(Vec::len).sum()
    }

    pub fn cell_of(&self, component: usize, key: usize) -> Cell {
        self.cells[component - 1][key - 1]
    }

    /// The `(component, key)` vertex standing for `cell`.
    pub fn vertex_of(&self, l: &LatinSquare, row: usize, col: usize) -> (usize, usize) {
        let entry = l.entry(row, col);
        match self.kind {
            CoverKind::Row => (row, entry),
            CoverKind::Col => (col, entry),
            CoverKind::Entry => (entry, row),
        }
    }

    /// Exact minimum vertex cover, solved per component, returned as cells
    /// in row-major order.
    pub fn min_cover(&self) -> Result<Vec<Cell>> {
        let mut out = Vec::new();
        for comp in 1..=self.n {
            let edges = self.component_edges(comp).to_vec();
            let graph = SimpleGraph::new(self.n, edges)?;
            for key in min_vertex_cover(&graph)? {
                out.push(self.cell_of(comp, key));
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    /// Maximal-matching 2-approximate cover (both endpoints of each matched
    /// edge), returned as cells in row-major order.
    pub fn greedy_cover(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for comp in 1..=self.n {
            let mut used = vec![false; self.n + 1];
            for &(a, b) in self.component_edges(comp) {
                if !used[a] && !used[b] {
                    used[a] = true;
                    used[b] = true;
                    out.push(self.cell_of(comp, a));
                    out.push(self.cell_of(comp, b));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// True when the given `(component, key)` set covers every edge.
    fn covers(&self, chosen: &[Vec<bool>]) -> bool {
        (1..=self.n).all(|comp| {
            self.component_edges(comp)
                .iter()
                .all(|&(a, b)| chosen[comp - 1][a] || chosen[comp - 1][b])
        })
    }
}

/// Builds the cover graph of the requested kind by projecting each descent.
pub fn build_cover_graph(l: &LatinSquare, kind: CoverKind) -> CoverGraph {
    let n = l.n();
    let mut edges: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for d in latin_descents(l) {
        let x = d.low_entry();
        let y = d.high_entry();
        let (comp, a, b) = match kind {
            CoverKind::Row => (d.y_cell.row, x, y),
            CoverKind::Col => (d.y_cell.col, x, y),
            CoverKind::Entry => (x, d.row_mate.row, d.col_mate.row),
        };
        edges[comp - 1].push((a.min(b), a.max(b)));
    }
    for list in &mut edges {
        list.sort_unstable();
        list.dedup();
    }

    let mut cells: Vec<Vec<Cell>> = vec![Vec::with_capacity(n); n];
    for comp in 1..=n {
        for key in 1..=n {
            let cell = match kind {
                CoverKind::Row => Cell::new(comp, l.column_of(comp, key), key),
                CoverKind::Col => Cell::new(l.row_of(comp, key), comp, key),
                CoverKind::Entry => Cell::new(key, l.column_of(key, comp), comp),
            };
            cells[comp - 1].push(cell);
        }
    }
    CoverGraph { kind, n, edges, cells }
}

/// Turns a vertex cover of the chosen cover graph, given as `(row, col)`
/// positions, into a greedy defining set of `l`.
pub fn gds_from_cover(
    l: &LatinSquare,
    kind: CoverKind,
    cover: &[(usize, usize)],
) -> Result<PartialLatinSquare> {
    let n = l.n();
    let graph = build_cover_graph(l, kind);
    let mut chosen = vec![vec![false; n + 1]; n];
    for &(row, col) in cover {
        if row == 0 || row > n || col == 0 || col > n {
            return Err(Error::invalid(format!(
                "cover cell ({row},{col}) is outside the order-{n} grid"
            )));
        }
        let (comp, key) = graph.vertex_of(l, row, col);
        chosen[comp - 1][key] = true;
    }
    if !graph.covers(&chosen) {
        return Err(Error::invalid(format!(
            "the given cells are not a vertex cover of the {kind} graph"
        )));
    }
    let gds = PartialLatinSquare::from_cells(
        n,
        cover.iter().map(|&(r, c)| l.cell(r, c)),
    )?;
    // A cover always meets every descent; anything else is a bug above.
    let positions: Vec<(usize, usize)> = gds.cells().map(|c| (c.row, c.col)).collect();
    for d in latin_descents(l) {
        if !d.positions().iter().any(|p| positions.contains(p)) {
            return Err(Error::internal(format!(
                "cover-derived set misses the descent at {}",
                d.y_cell
            )));
        }
    }
    Ok(gds)
}

/// Order limit for the exact mode of [`bound_report`].
pub const MAX_BOUND_ORDER: usize = 8;

/// Comparison of an entry-graph cover against the `n² - n·ln(4n)/4` size
/// bound; the cover's cells are a greedy defining set.
#[derive(Debug, Clone)]
pub struct BoundReport {
    pub n: usize,
    pub cover_size: usize,
    pub bound: f64,
    pub holds: bool,
    pub exact: bool,
    pub cells: Vec<Cell>,
}

/// The bound itself: `n² - n·ln(4n)/4`.
pub fn gds_size_bound(n: usize) -> f64 {
    let nf = n as f64;
    nf * nf - nf * (4.0 * nf).ln() / 4.0
}

/// Covers the entry graph (exactly per component when `exact`, otherwise
/// with the flagged 2-approximation) and checks the size bound.
pub fn bound_report(l: &LatinSquare, exact: bool) -> Result<BoundReport> {
    let n = l.n();
    if exact && n > MAX_BOUND_ORDER {
        return Err(Error::Capability {
            operation: "bound_report",
            limit: MAX_BOUND_ORDER,
            actual: n,
        });
    }
    let graph = build_cover_graph(l, CoverKind::Entry);
    let cells = if exact { graph.min_cover()? } else { graph.greedy_cover() };
    let bound = gds_size_bound(n);
    Ok(BoundReport {
        n,
        cover_size: cells.len(),
        bound,
        holds: (cells.len() as f64) <= bound,
        exact,
        cells,
    })
}
