//! Seeded instance generators and small independent oracles shared by the
//! integration suites.

#![allow(dead_code)]

use gds_core::graph::{OrderedGraph, SimpleGraph};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_permutation(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    let mut order: Vec<usize> = (1..=n).collect();
    for k in (1..n).rev() {
        let r = rng.random_range(0..=k);
        order.swap(k, r);
    }
    order
}

/// G(n, p) with independent edges.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> SimpleGraph {
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.random::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    SimpleGraph::new(n, edges).expect("generated edges are simple")
}

/// Uniform random attachment tree on `n` vertices.
pub fn random_tree(rng: &mut ChaCha8Rng, n: usize) -> SimpleGraph {
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for v in 2..=n {
        let parent = rng.random_range(1..v);
        edges.push((parent, v));
    }
    SimpleGraph::new(n, edges).expect("attachment edges form a tree")
}

/// A connected graph: a random tree plus extra random edges.
pub fn random_connected_graph(rng: &mut ChaCha8Rng, n: usize, extra_p: f64) -> SimpleGraph {
    let tree = random_tree(rng, n);
    let mut edges: Vec<(usize, usize)> = tree.edges().to_vec();
    for u in 1..=n {
        for v in u + 1..=n {
            if !tree.has_edge(u, v) && rng.random::<f64>() < extra_p {
                edges.push((u, v));
            }
        }
    }
    SimpleGraph::new(n, edges).expect("still simple")
}

/// A connected bipartite graph: a random tree plus extra edges between
/// opposite sides of its bipartition.
pub fn random_connected_bipartite(rng: &mut ChaCha8Rng, n: usize, extra_p: f64) -> SimpleGraph {
    let tree = random_tree(rng, n);
    let side = tree.bipartition().expect("trees are bipartite");
    let mut edges: Vec<(usize, usize)> = tree.edges().to_vec();
    for u in 1..=n {
        for v in u + 1..=n {
            if side[u] != side[v] && !tree.has_edge(u, v) && rng.random::<f64>() < extra_p {
                edges.push((u, v));
            }
        }
    }
    SimpleGraph::new(n, edges).expect("still simple")
}

pub fn with_random_order(rng: &mut ChaCha8Rng, g: SimpleGraph) -> OrderedGraph {
    let order = random_permutation(rng, g.n());
    OrderedGraph::new(g, &order).expect("permutation order")
}

/// All proper colorings of `g` into `1..=k`, by plain backtracking in
/// vertex order. Test-local on purpose: it shares no code with the
/// library's coloring enumeration.
pub fn proper_colorings(g: &SimpleGraph, k: usize) -> Vec<Vec<usize>> {
    fn rec(g: &SimpleGraph, k: usize, colors: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let v = colors.len() + 1;
        if v > g.n() {
            out.push(colors.clone());
            return;
        }
        'next: for c in 1..=k {
            for &u in g.neighbors(v) {
                if u < v && colors[u - 1] == c {
                    continue 'next;
                }
            }
            colors.push(c);
            rec(g, k, colors, out);
            colors.pop();
        }
    }
    let mut out = Vec::new();
    rec(g, k, &mut Vec::new(), &mut out);
    out
}

/// Exhaustive minimum hitting set size by subset enumeration over the
/// universe, for cross-checking the branch-and-bound solver.
pub fn exhaustive_min_hitting_size(universe: &[usize], sets: &[Vec<usize>]) -> Option<usize> {
    if sets.iter().any(|s| s.is_empty()) {
        return None;
    }
    let u = universe.len();
    assert!(u <= 20, "exhaustive oracle is for tiny universes");
    let masks: Vec<u32> = sets
        .iter()
        .map(|s| {
            s.iter().fold(0u32, |m, e| {
                m | (1 << universe.binary_search(e).expect("member of universe"))
            })
        })
        .collect();
    (0u32..(1 << u))
        .filter(|&chosen| masks.iter().all(|&m| m & chosen != 0))
        .map(|chosen| chosen.count_ones() as usize)
        .min()
}
