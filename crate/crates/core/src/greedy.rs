//! The first-fit coloring engine, descent enumeration and greedy-defining-set
//! verification.
//!
//! A *descent* of a properly colored ordered graph is a vertex `v` of color
//! `j` together with all of its color-`i` neighbors (for some `i < j`), in
//! the case where every one of those neighbors comes after `v` in the
//! processing order. When the greedy run reaches `v` it would pick a color
//! `<= i` instead of `j`, so any pre-coloring steering the run towards the
//! target coloring must touch at least one vertex of every descent. The
//! converse holds as well: a pre-coloring consistent with the target is
//! defining exactly when it is a transversal of the descents.

use crate::chromatic::chromatic_number;
use crate::error::{Error, Result};
use crate::graph::{OrderedGraph, PartialColoring, ProperColoring};

/// Result of a greedy run: the completed color map, the largest color used,
/// and whether the result is proper. Pre-colored vertices keep their input
/// colors; the engine itself never creates a conflict, so `proper` is false
/// only when two adjacent pre-colored vertices share a color.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyOutcome {
    colors: Vec<usize>,
    max_color: usize,
    proper: bool,
}

impl GreedyOutcome {
    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn max_color(&self) -> usize {
        self.max_color
    }

    pub fn is_proper(&self) -> bool {
        self.proper
    }

    /// Colors of vertices `1..=n`.
    pub fn as_slice(&self) -> &[usize] {
        &self.colors[1..]
    }

    /// True when the outcome reproduces `target` exactly.
    pub fn matches(&self, target: &ProperColoring) -> bool {
        self.as_slice() == target.as_slice()
    }
}

/// Runs the first-fit coloring of `g` from the pre-coloring `s`.
///
/// Vertices outside `s` are visited in increasing σ-position and receive the
/// smallest positive color absent from all currently colored neighbors.
/// Pre-colored neighbors count even when they come later in the order.
pub fn greedy_color(g: &OrderedGraph, s: &PartialColoring) -> Result<GreedyOutcome> {
    s.validate_on(g)?;
    let n = g.n();
    let mut colors = vec![0usize; n + 1];
    for (v, c) in s.iter() {
        colors[v] = c;
    }
    let mut used = vec![false; n + 2];
    for p in 1..=n {
        let v = g.vertex_at(p);
        if colors[v] != 0 {
            continue;
        }
        let cap = g.neighbors(v).len() + 1;
        for &u in g.neighbors(v) {
            let c = colors[u];
            if c >= 1 && c <= cap {
                used[c] = true;
            }
        }
        let choice = (1..=cap).find(|&c| !used[c]).expect("first-fit always finds a color");
        used[1..=cap].fill(false);
        colors[v] = choice;
    }
    let max_color = colors[1..].iter().copied().max().unwrap_or(0);
    let proper = g.edges().iter().all(|&(u, v)| colors[u] != colors[v]);
    Ok(GreedyOutcome { colors, max_color, proper })
}

/// A descent: `head` of color `high` whose full set of `low`-colored
/// neighbors (`tail`, possibly empty) lies entirely after `head` in σ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Descent {
    pub head: usize,
    /// All `low`-colored neighbors of `head`, ascending by vertex id.
    pub tail: Vec<usize>,
    pub low: usize,
    pub high: usize,
}

impl Descent {
    /// The vertex set `{head} ∪ tail`.
    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        std::iter::once(self.head).chain(self.tail.iter().copied())
    }

    /// The vertex set as a sorted list.
    pub fn vertex_set(&self) -> Vec<usize> {
        let mut vs: Vec<usize> = self.vertices().collect();
        vs.sort_unstable();
        vs
    }
}

/// Enumerates all descents of `(g, c)`, ordered by head position and then by
/// the low color.
pub fn find_descents(g: &OrderedGraph, c: &ProperColoring) -> Result<Vec<Descent>> {
    validate_coloring(g, c)?;
    let n = g.n();
    let mut descents = Vec::new();
    // Scratch buckets per neighbor color: earliest position seen and members.
    let mut min_pos = vec![usize::MAX; n + 1];
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for v in 1..=n {
        let cv = c.color(v);
        if cv == 1 {
            continue;
        }
        let mut touched = Vec::new();
        for &u in g.neighbors(v) {
            let cu = c.color(u);
            if cu < cv {
                if members[cu].is_empty() {
                    touched.push(cu);
                }
                min_pos[cu] = min_pos[cu].min(g.position(u));
                members[cu].push(u);
            }
        }
        let pos_v = g.position(v);
        for low in 1..cv {
            if members[low].is_empty() {
                // Vacuous case: no low-colored neighbor at all.
                descents.push(Descent { head: v, tail: Vec::new(), low, high: cv });
            } else if min_pos[low] > pos_v {
                let mut tail = members[low].clone();
                tail.sort_unstable();
                descents.push(Descent { head: v, tail, low, high: cv });
            }
        }
        for low in touched {
            min_pos[low] = usize::MAX;
            members[low].clear();
        }
    }
    descents.sort_by_key(|d| (g.position(d.head), d.low));
    Ok(descents)
}

fn validate_coloring(g: &OrderedGraph, c: &ProperColoring) -> Result<()> {
    if c.n() != g.n() {
        return Err(Error::invalid(format!(
            "coloring has {} vertices, graph has {}",
            c.n(),
            g.n()
        )));
    }
    for &(u, v) in g.edges() {
        if c.color(u) == c.color(v) {
            return Err(Error::invalid(format!(
                "coloring is not proper on this graph: vertices {u} and {v} share color {}",
                c.color(u)
            )));
        }
    }
    Ok(())
}

/// True when every descent's vertex set contains a vertex of `sv`.
pub fn is_transversal(sv: &[usize], descents: &[Descent]) -> bool {
    descents
        .iter()
        .all(|d| d.vertices().any(|v| sv.contains(&v)))
}

/// Decides whether `s` is a greedy defining set of `(g, σ)`.
///
/// Without a target, the run must end proper with its largest color at most
/// the chromatic number. With a target coloring the run must reproduce it
/// exactly; `s` must agree with the target on its domain, and the target
/// itself is expected to be an optimal proper coloring.
pub fn is_gds(g: &OrderedGraph, s: &PartialColoring, target: Option<&ProperColoring>) -> Result<bool> {
    match target {
        Some(t) => {
            validate_coloring(g, t)?;
            if !t.extends(s) {
                return Err(Error::invalid(
                    "defining set disagrees with the target coloring".to_string(),
                ));
            }
            let outcome = greedy_color(g, s)?;
            Ok(outcome.matches(t))
        }
        None => {
            let outcome = greedy_color(g, s)?;
            if !outcome.is_proper() {
                return Ok(false);
            }
            let chi = chromatic_number(g.graph())?;
            Ok(outcome.max_color() <= chi)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::SimpleGraph;

    fn identity(g: SimpleGraph) -> OrderedGraph {
        OrderedGraph::with_identity_order(g)
    }

    #[test]
    fn path_three_without_defining_set() {
        let g = identity(SimpleGraph::path(3));
        let out = greedy_color(&g, &PartialColoring::new()).unwrap();
        assert_eq!(out.as_slice(), &[1, 2, 1]);
        assert_eq!(out.max_color(), 2);
        assert!(out.is_proper());
    }

    #[test]
    fn later_precolored_neighbor_counts() {
        let g = identity(SimpleGraph::path(2));
        let s = PartialColoring::from_pairs([(2, 1)]).unwrap();
        let out = greedy_color(&g, &s).unwrap();
        assert_eq!(out.as_slice(), &[2, 1]);
    }

    #[test]
    fn triangle_uses_three_colors() {
        let g = identity(SimpleGraph::complete(3));
        let out = greedy_color(&g, &PartialColoring::new()).unwrap();
        assert_eq!(out.as_slice(), &[1, 2, 3]);
    }

    #[test]
    fn unknown_vertex_in_defining_set() {
        let g = identity(SimpleGraph::path(2));
        let s = PartialColoring::from_pairs([(5, 1)]).unwrap();
        assert!(matches!(greedy_color(&g, &s), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn conflicting_precoloring_reported_not_raised() {
        let g = identity(SimpleGraph::path(2));
        let s = PartialColoring::from_pairs([(1, 1), (2, 1)]).unwrap();
        let out = greedy_color(&g, &s).unwrap();
        assert!(!out.is_proper());
    }

    #[test]
    fn descents_on_path_three() {
        let g = identity(SimpleGraph::path(3));
        let c = ProperColoring::new(g.graph(), vec![1, 2, 1]).unwrap();
        assert!(find_descents(&g, &c).unwrap().is_empty());

        let c = ProperColoring::new(g.graph(), vec![2, 1, 2]).unwrap();
        let ds = find_descents(&g, &c).unwrap();
        assert_eq!(ds.len(), 1);
        assert_eq!(ds[0].head, 1);
        assert_eq!(ds[0].tail, vec![2]);
        assert_eq!((ds[0].low, ds[0].high), (1, 2));
    }

    #[test]
    fn singleton_descent_on_isolated_vertex() {
        // P2 plus an isolated vertex 3, order v1 v2 v3, colors (1, 2, 2).
        let g = identity(SimpleGraph::new(3, [(1, 2)]).unwrap());
        let c = ProperColoring::new(g.graph(), vec![1, 2, 2]).unwrap();
        let ds = find_descents(&g, &c).unwrap();
        assert!(ds.iter().any(|d| d.head == 3 && d.tail.is_empty() && d.low == 1 && d.high == 2));
    }

    #[test]
    fn star_with_leaves_first_has_three_descents() {
        // Leaves 1, 2, 3, center 4; identity order processes the leaves first.
        let g = identity(SimpleGraph::new(4, [(1, 4), (2, 4), (3, 4)]).unwrap());
        let c = ProperColoring::new(g.graph(), vec![2, 2, 2, 1]).unwrap();
        let ds = find_descents(&g, &c).unwrap();
        assert_eq!(ds.len(), 3);
        for (d, head) in ds.iter().zip([1, 2, 3]) {
            assert_eq!(d.head, head);
            assert_eq!(d.tail, vec![4]);
        }
    }

    #[test]
    fn improper_coloring_is_an_input_error() {
        // (1, 1) is proper on the edgeless graph but not on K2.
        let edgeless = SimpleGraph::new(2, []).unwrap();
        let c = ProperColoring::new(&edgeless, vec![1, 1]).unwrap();
        let k2 = identity(SimpleGraph::complete(2));
        assert!(matches!(find_descents(&k2, &c), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn transversal_basics() {
        assert!(is_transversal(&[], &[]));
        let d = Descent { head: 1, tail: vec![2], low: 1, high: 2 };
        assert!(is_transversal(&[2], std::slice::from_ref(&d)));
        assert!(!is_transversal(&[3], std::slice::from_ref(&d)));
    }

    #[test]
    fn is_gds_with_and_without_target() {
        let p3 = identity(SimpleGraph::path(3));
        let target = ProperColoring::new(p3.graph(), vec![1, 2, 1]).unwrap();
        assert!(is_gds(&p3, &PartialColoring::new(), Some(&target)).unwrap());

        let p2 = identity(SimpleGraph::path(2));
        let target = ProperColoring::new(p2.graph(), vec![2, 1]).unwrap();
        assert!(!is_gds(&p2, &PartialColoring::new(), Some(&target)).unwrap());

        // C6 processed in the order v1 v4 v2 v5 v3 v6 needs three colors.
        let c6 = OrderedGraph::new(SimpleGraph::cycle(6), &[1, 4, 2, 5, 3, 6]).unwrap();
        assert!(!is_gds(&c6, &PartialColoring::new(), None).unwrap());

        // Colors beyond the chromatic number make the run fail, not error.
        let s = PartialColoring::from_pairs([(1, 5)]).unwrap();
        assert!(!is_gds(&p2, &s, None).unwrap());

        // Disagreement with the target is an input error.
        let target = ProperColoring::new(p2.graph(), vec![1, 2]).unwrap();
        let s = PartialColoring::from_pairs([(1, 2)]).unwrap();
        assert!(matches!(is_gds(&p2, &s, Some(&target)), Err(Error::InvalidInput(_))));
    }
}
