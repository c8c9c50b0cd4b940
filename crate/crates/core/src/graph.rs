//! Graphs with a total processing order, plus the coloring value types.
//!
//! Vertices are identified by `1..=n` throughout, matching the text file
//! formats and keeping printed output aligned with the usual cell notation
//! for Latin squares.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// An undirected simple graph on vertices `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    /// Canonical `(u, v)` with `u < v`, sorted and deduplicated.
    edges: Vec<(usize, usize)>,
    /// `adj[v]` is sorted; index 0 is unused.
    adj: Vec<Vec<usize>>,
}

impl SimpleGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut canon: Vec<(usize, usize)> = Vec::new();
        for (u, v) in edges {
            if u == 0 || v == 0 || u > n || v > n {
                return Err(Error::invalid(format!(
                    "edge ({u}, {v}) references a vertex outside 1..={n}"
                )));
            }
            if u == v {
                return Err(Error::invalid(format!("self-loop at vertex {u}")));
            }
            canon.push((u.min(v), u.max(v)));
        }
        canon.sort_unstable();
        if canon.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::invalid("duplicate edge".to_string()));
        }
        let mut adj = vec![Vec::new(); n + 1];
        for &(u, v) in &canon {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(SimpleGraph { n, edges: canon, adj })
    }

    /// A complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let edges = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v)));
        SimpleGraph::new(n, edges).expect("complete graph is always valid")
    }

    /// A path `1 - 2 - ... - n`.
    pub fn path(n: usize) -> Self {
        SimpleGraph::new(n, (1..n).map(|u| (u, u + 1))).expect("path is always valid")
    }

    /// A cycle `1 - 2 - ... - n - 1` (requires `n >= 3`).
    pub fn cycle(n: usize) -> Self {
        let edges = (1..n).map(|u| (u, u + 1)).chain(std::iter::once((n, 1)));
        SimpleGraph::new(n, edges).expect("cycle is always valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Connected components, each listed in ascending vertex order; the
    /// components themselves are ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n + 1];
        let mut comps = Vec::new();
        for root in 1..=self.n {
            if seen[root] {
                continue;
            }
            let mut comp = vec![root];
            seen[root] = true;
            let mut head = 0;
            while head < comp.len() {
                let v = comp[head];
                head += 1;
                for &u in &self.adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// A forest has exactly `n - #components` edges.
    pub fn is_acyclic(&self) -> bool {
        self.edge_count() + self.components().len() == self.n
    }

    /// Two-colors the graph with sides 1 and 2, or returns `None` if an odd
    /// cycle exists. Each component's smallest vertex goes to side 1.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut side = vec![0u8; self.n + 1];
        for root in 1..=self.n {
            if side[root] != 0 {
                continue;
            }
            side[root] = 1;
            let mut queue = vec![root];
            let mut head = 0;
            while head < queue.len() {
                let v = queue[head];
                head += 1;
                for &u in &self.adj[v] {
                    if side[u] == 0 {
                        side[u] = 3 - side[v];
                        queue.push(u);
                    } else if side[u] == side[v] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }
}

/// A simple graph together with a total processing order σ.
///
/// `position(v)` is the 1-based slot at which the greedy coloring visits
/// vertex `v`; `vertex_at(p)` inverts it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedGraph {
    graph: SimpleGraph,
    position: Vec<usize>,
    by_position: Vec<usize>,
}

impl OrderedGraph {
    /// `processing_order` lists the vertices in the order the greedy
    /// coloring visits them, and must be a permutation of `1..=n`.
    pub fn new(graph: SimpleGraph, processing_order: &[usize]) -> Result<Self> {
        let n = graph.n();
        if processing_order.len() != n {
            return Err(Error::invalid(format!(
                "processing order lists {} vertices, expected {n}",
                processing_order.len()
            )));
        }
        let mut position = vec![0usize; n + 1];
        for (idx, &v) in processing_order.iter().enumerate() {
            if v == 0 || v > n {
                return Err(Error::invalid(format!("order references unknown vertex {v}")));
            }
            if position[v] != 0 {
                return Err(Error::invalid(format!("vertex {v} appears twice in the order")));
            }
            position[v] = idx + 1;
        }
        let mut by_position = vec![0usize; n + 1];
        for v in 1..=n {
            by_position[position[v]] = v;
        }
        Ok(OrderedGraph { graph, position, by_position })
    }

    /// Processing order `1, 2, ..., n`.
    pub fn with_identity_order(graph: SimpleGraph) -> Self {
        let order: Vec<usize> = (1..=graph.n()).collect();
        OrderedGraph::new(graph, &order).expect("identity order is always valid")
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        self.graph.edges()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        self.graph.neighbors(v)
    }

    pub fn position(&self, v: usize) -> usize {
        self.position[v]
    }

    pub fn vertex_at(&self, pos: usize) -> usize {
        self.by_position[pos]
    }

    /// Vertices in processing order.
    pub fn processing_order(&self) -> impl Iterator<Item = usize> + '_ {
        self.by_position[1..].iter().copied()
    }
}

/// A partial assignment of positive colors to vertices; the pre-coloring a
/// greedy run starts from.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PartialColoring {
    assignment: BTreeMap<usize, usize>,
}

impl PartialColoring {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut s = PartialColoring::new();
        for (v, c) in pairs {
            s.insert(v, c)?;
        }
        Ok(s)
    }

    pub fn insert(&mut self, v: usize, color: usize) -> Result<()> {
        if v == 0 {
            return Err(Error::invalid("vertex identifiers start at 1"));
        }
        if color == 0 {
            return Err(Error::invalid(format!("vertex {v}: colors start at 1")));
        }
        if let Some(&old) = self.assignment.get(&v) {
            if old != color {
                return Err(Error::invalid(format!(
                    "vertex {v} assigned both color {old} and color {color}"
                )));
            }
        }
        self.assignment.insert(v, color);
        Ok(())
    }

    pub fn get(&self, v: usize) -> Option<usize> {
        self.assignment.get(&v).copied()
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    /// `(vertex, color)` pairs in ascending vertex order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.assignment.iter().map(|(&v, &c)| (v, c))
    }

    pub fn domain(&self) -> impl Iterator<Item = usize> + '_ {
        self.assignment.keys().copied()
    }

    /// Checks that every keyed vertex exists in `g`.
    pub fn validate_on(&self, g: &OrderedGraph) -> Result<()> {
        for (v, _) in self.iter() {
            if v > g.n() {
                return Err(Error::invalid(format!(
                    "defining set references vertex {v}, but the graph has {} vertices",
                    g.n()
                )));
            }
        }
        Ok(())
    }
}

/// A total proper coloring; `num_colors` is the largest color used.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProperColoring {
    /// 1-based; index 0 unused.
    colors: Vec<usize>,
    k: usize,
}

impl ProperColoring {
    /// `colors[i]` is the color of vertex `i + 1`.
    pub fn new(g: &SimpleGraph, colors: Vec<usize>) -> Result<Self> {
        if colors.len() != g.n() {
            return Err(Error::invalid(format!(
                "coloring lists {} vertices, expected {}",
                colors.len(),
                g.n()
            )));
        }
        if let Some(i) = colors.iter().position(|&c| c == 0) {
            return Err(Error::invalid(format!("vertex {}: colors start at 1", i + 1)));
        }
        let mut full = Vec::with_capacity(g.n() + 1);
        full.push(0);
        full.extend_from_slice(&colors);
        for &(u, v) in g.edges() {
            if full[u] == full[v] {
                return Err(Error::invalid(format!(
                    "coloring is not proper: adjacent vertices {u} and {v} share color {}",
                    full[u]
                )));
            }
        }
        let k = full[1..].iter().copied().max().unwrap_or(0);
        Ok(ProperColoring { colors: full, k })
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn num_colors(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.colors.len() - 1
    }

    /// Colors of vertices `1..=n`, without the unused slot 0.
    pub fn as_slice(&self) -> &[usize] {
        &self.colors[1..]
    }

    /// True when `partial` agrees with this coloring on its whole domain.
    pub fn extends(&self, partial: &PartialColoring) -> bool {
        partial.iter().all(|(v, c)| v <= self.n() && self.colors[v] == c)
    }

    /// The restriction of this coloring to `vertices`.
    pub fn restrict(&self, vertices: impl IntoIterator<Item = usize>) -> PartialColoring {
        let mut s = PartialColoring::new();
        for v in vertices {
            s.insert(v, self.colors[v]).expect("restriction of a proper coloring is valid");
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_self_loops_and_duplicates() {
        assert!(SimpleGraph::new(3, [(1, 1)]).is_err());
        assert!(SimpleGraph::new(3, [(1, 2), (2, 1)]).is_err());
        assert!(SimpleGraph::new(3, [(1, 4)]).is_err());
    }

    #[test]
    fn order_must_be_a_permutation() {
        let g = SimpleGraph::path(3);
        assert!(OrderedGraph::new(g.clone(), &[1, 2, 2]).is_err());
        assert!(OrderedGraph::new(g.clone(), &[1, 2]).is_err());
        let og = OrderedGraph::new(g, &[2, 3, 1]).unwrap();
        assert_eq!(og.position(2), 1);
        assert_eq!(og.vertex_at(3), 1);
    }

    #[test]
    fn bipartition_and_acyclicity() {
        let p4 = SimpleGraph::path(4);
        assert!(p4.is_acyclic());
        let side = p4.bipartition().unwrap();
        assert_eq!(&side[1..], &[1, 2, 1, 2]);

        let c5 = SimpleGraph::cycle(5);
        assert!(!c5.is_acyclic());
        assert!(c5.bipartition().is_none());
    }

    #[test]
    fn proper_coloring_validation() {
        let g = SimpleGraph::path(3);
        assert!(ProperColoring::new(&g, vec![1, 1, 2]).is_err());
        let c = ProperColoring::new(&g, vec![1, 2, 1]).unwrap();
        assert_eq!(c.num_colors(), 2);
        assert!(c.extends(&PartialColoring::from_pairs([(2, 2)]).unwrap()));
        assert!(!c.extends(&PartialColoring::from_pairs([(2, 1)]).unwrap()));
    }
}
