//! Exact chromatic number for desk-scale graphs.
//!
//! Edgeless and bipartite graphs are recognized directly at any size; the
//! general case runs a backtracking k-colorability search seeded with an
//! exact maximum-clique lower bound and a first-fit upper bound, and is
//! guarded at [`MAX_CHROMATIC_VERTICES`] vertices.

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// Vertex limit for the backtracking search (non-bipartite inputs only).
pub const MAX_CHROMATIC_VERTICES: usize = 24;

/// Computes χ(G) exactly.
pub fn chromatic_number(g: &SimpleGraph) -> Result<usize> {
    let n = g.n();
    if n == 0 {
        return Err(Error::invalid("chromatic number requires at least one vertex"));
    }
    if g.edge_count() == 0 {
        return Ok(1);
    }
    if g.bipartition().is_some() {
        return Ok(2);
    }
    if n > MAX_CHROMATIC_VERTICES {
        return Err(Error::Capability {
            operation: "chromatic_number",
            limit: MAX_CHROMATIC_VERTICES,
            actual: n,
        });
    }

    // Bitmask adjacency over vertices 0..n-1.
    let adj: Vec<u32> = (1..=n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | (1 << (u - 1))))
        .collect();

    let lower = max_clique_size(&adj, n).max(3);
    let upper = first_fit_bound(g);
    for k in lower..=upper {
        if k_colorable(&adj, n, k) {
            return Ok(k);
        }
    }
    Ok(upper)
}

/// Largest color used by a first-fit run in vertex order; a valid upper bound.
fn first_fit_bound(g: &SimpleGraph) -> usize {
    let n = g.n();
    let mut colors = vec![0usize; n + 1];
    let mut best = 0;
    for v in 1..=n {
        let mut used = 0u64;
        for &u in g.neighbors(v) {
            if colors[u] != 0 && colors[u] <= 64 {
                used |= 1 << (colors[u] - 1);
            }
        }
        let c = (used.trailing_ones() as usize) + 1;
        colors[v] = c;
        best = best.max(c);
    }
    best
}

/// Exact maximum clique via Bron–Kerbosch with pivoting on bitmasks.
fn max_clique_size(adj: &[u32], n: usize) -> usize {
    fn expand(adj: &[u32], r: u32, mut p: u32, mut x: u32, best: &mut u32) {
        if p == 0 && x == 0 {
            *best = (*best).max(r.count_ones());
            return;
        }
        if r.count_ones() + p.count_ones() <= *best {
            return;
        }
        // Pivot on the vertex of P ∪ X with the most neighbors in P.
        let mut pivot = usize::MAX;
        let mut pivot_deg = u32::MAX;
        let mut scan = p | x;
        while scan != 0 {
            let v = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            let outside = (p & !adj[v]).count_ones();
            if pivot == usize::MAX || outside < pivot_deg {
                pivot = v;
                pivot_deg = outside;
            }
        }
        let mut candidates = p & !adj[pivot];
        while candidates != 0 {
            let v = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            let bit = 1u32 << v;
            expand(adj, r | bit, p & adj[v], x & adj[v], best);
            p &= !bit;
            x |= bit;
        }
    }

    let mut best = 0;
    let all = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    expand(adj, 0, all, 0, &mut best);
    best as usize
}

/// Backtracking k-colorability with a static degree-descending vertex order
/// and new-color symmetry breaking.
fn k_colorable(adj: &[u32], n: usize, k: usize) -> bool {
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(adj[v].count_ones()));

    fn assign(adj: &[u32], order: &[usize], colors: &mut [usize], idx: usize, used: usize, k: usize) -> bool {
        if idx == order.len() {
            return true;
        }
        let v = order[idx];
        let mut banned = 0u64;
        let mut nb = adj[v];
        while nb != 0 {
            let u = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            if colors[u] != 0 {
                banned |= 1 << (colors[u] - 1);
            }
        }
        let cap = k.min(used + 1);
        for c in 1..=cap {
            if banned & (1 << (c - 1)) == 0 {
                colors[v] = c;
                if assign(adj, order, colors, idx + 1, used.max(c), k) {
                    return true;
                }
                colors[v] = 0;
            }
        }
        false
    }

    let mut colors = vec![0usize; n];
    assign(adj, &order, &mut colors, 0, 0, k)
}
