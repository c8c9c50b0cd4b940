//! Greedy defining sets of Latin squares: verification, minimum search and
//! the minimum over all squares of a given order.

use crate::error::{Error, Result};
use crate::exact::{min_hitting_set, SetFamily};

use super::descent::{cell_vertex, latin_descents, vertex_cell};
use super::square::{
    for_each_latin_square, greedy_complete, Completion, LatinSquare, PartialLatinSquare,
};

/// Order limit for the exact mode of [`min_latin_gds`].
pub const MAX_EXACT_GDS_ORDER: usize = 6;
/// Order limit for [`g_number`] (the order-4 case already enumerates 576
/// squares).
pub const MAX_G_NUMBER_ORDER: usize = 4;

/// Decides whether `d` is a greedy defining set of `l`, by running the
/// greedy completion and comparing against `l`. The descent-transversal
/// characterization is evaluated independently as a cross-check; the two
/// must agree, anything else is reported as an internal error.
pub fn verify_latin_gds(l: &LatinSquare, d: &PartialLatinSquare) -> Result<bool> {
    if !d.agrees_with(l) {
        return Err(Error::invalid(
            "the defining set does not agree with the square".to_string(),
        ));
    }
    let by_completion = match greedy_complete(d) {
        Completion::Complete(sq) => sq == *l,
        Completion::Stuck { .. } => false,
    };
    let positions: Vec<(usize, usize)> = d.cells().map(|c| (c.row, c.col)).collect();
    let by_transversal = latin_descents(l)
        .iter()
        .all(|desc| desc.positions().iter().any(|p| positions.contains(p)));
    if by_completion != by_transversal {
        return Err(Error::internal(format!(
            "greedy completion ({by_completion}) and descent transversal ({by_transversal}) disagree"
        )));
    }
    Ok(by_completion)
}

/// How [`min_latin_gds_with_mode`] should trade exactness against order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GdsMode {
    /// Exact for orders up to [`MAX_EXACT_GDS_ORDER`], heuristic beyond.
    Auto,
    /// Exact or a capability error.
    Exact,
    /// Greedy transversal at any order, flagged non-optimal.
    Heuristic,
}

/// A defining set found by [`min_latin_gds_with_mode`]; minimal exactly
/// when `exact` is set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatinGdsResult {
    pub size: usize,
    pub cells: PartialLatinSquare,
    pub exact: bool,
}

/// Minimum greedy defining set in the default [`GdsMode::Auto`] mode.
pub fn min_latin_gds(l: &LatinSquare) -> Result<LatinGdsResult> {
    min_latin_gds_with_mode(l, GdsMode::Auto)
}

pub fn min_latin_gds_with_mode(l: &LatinSquare, mode: GdsMode) -> Result<LatinGdsResult> {
    let n = l.n();
    let use_exact = match mode {
        GdsMode::Auto => n <= MAX_EXACT_GDS_ORDER,
        GdsMode::Exact => {
            if n > MAX_EXACT_GDS_ORDER {
                return Err(Error::Capability {
                    operation: "min_latin_gds",
                    limit: MAX_EXACT_GDS_ORDER,
                    actual: n,
                });
            }
            true
        }
        GdsMode::Heuristic => false,
    };

    let cells = if use_exact {
        let sets: Vec<Vec<usize>> = latin_descents(l)
            .iter()
            .map(|d| d.positions().iter().map(|&(r, c)| cell_vertex(n, r, c)).collect())
            .collect();
        min_hitting_set(&SetFamily::from_sets(sets))?
            .into_iter()
            .map(|v| vertex_cell(n, v))
            .collect()
    } else {
        greedy_transversal_positions(l)
    };

    let gds = PartialLatinSquare::from_cells(n, cells.iter().map(|&(r, c)| l.cell(r, c)))?;
    if !verify_latin_gds(l, &gds)? {
        return Err(Error::internal("computed transversal is not a defining set".to_string()));
    }
    Ok(LatinGdsResult { size: gds.len(), cells: gds, exact: use_exact })
}

/// Greedy max-coverage transversal of the descent triples; ties go to the
/// smallest cell in row-major order.
fn greedy_transversal_positions(l: &LatinSquare) -> Vec<(usize, usize)> {
    let descents = latin_descents(l);
    let mut covered = vec![false; descents.len()];
    let mut remaining = descents.len();
    let mut chosen: Vec<(usize, usize)> = Vec::new();
    while remaining > 0 {
        let mut gain: std::collections::BTreeMap<(usize, usize), usize> = Default::default();
        for (i, d) in descents.iter().enumerate() {
            if covered[i] {
                continue;
            }
            for p in d.positions() {
                *gain.entry(p).or_default() += 1;
            }
        }
        let (&pos, _) = gain
            .iter()
            .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(a.0)))
            .expect("uncovered descents have cells");
        chosen.push(pos);
        for (i, d) in descents.iter().enumerate() {
            if !covered[i] && d.positions().contains(&pos) {
                covered[i] = true;
                remaining -= 1;
            }
        }
    }
    chosen.sort_unstable();
    chosen
}

/// The minimum greedy defining set size over every order-`n` Latin square.
pub fn g_number(n: usize) -> Result<usize> {
    if n == 0 {
        return Err(Error::invalid("order must be at least 1"));
    }
    if n > MAX_G_NUMBER_ORDER {
        return Err(Error::Capability {
            operation: "g_number",
            limit: MAX_G_NUMBER_ORDER,
            actual: n,
        });
    }
    let mut best: Option<usize> = None;
    let mut err: Option<Error> = None;
    for_each_latin_square(n, |square| {
        if err.is_some() || best == Some(0) {
            return;
        }
        match min_latin_gds_with_mode(square, GdsMode::Exact) {
            Ok(r) => {
                if best.is_none_or(|b| r.size < b) {
                    best = Some(r.size);
                }
            }
            Err(e) => err = Some(e),
        }
    })?;
    if let Some(e) = err {
        return Err(e);
    }
    best.ok_or_else(|| Error::internal("no Latin square of this order".to_string()))
}
