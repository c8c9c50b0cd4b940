//! Executable reductions from vertex cover to greedy-defining-number
//! questions, with solution maps in both directions.
//!
//! Two constructions are provided. The *clique* construction targets the
//! fixed-coloring problem: the input graph F is placed next to a clique of
//! the same order, every vertex gets its own color, and the order is rigged
//! so that the descents are exactly the copies of F's edges. The
//! *incidence* construction targets the uncolored problem on connected
//! bipartite graphs: vertices and edges of F are each duplicated, copies
//! are wired by incidence, and for either 2-coloring the descents are an
//! edge copy together with its two endpoint copies — so defining sets
//! correspond to vertex covers of F under both colorings.

use crate::error::{Error, Result};
use crate::graph::{OrderedGraph, PartialColoring, ProperColoring, SimpleGraph};
use crate::greedy::{greedy_color, is_gds};

/// The clique construction for a fixed target coloring.
///
/// Instance layout on `2n` vertices, where `n = |V(F)|`:
/// * vertices `1..=n` form a clique; vertex `i` sits at position `i` and is
///   colored `i`;
/// * vertex `n + v` is the copy of F's vertex `v`, colored `v`, at position
///   `2n - v + 1` (so F copies run in reverse color order);
/// * the copy of `v` is joined to clique vertex `i < v` exactly when `v`
///   and `i` are *not* adjacent in F, and F's own edges are kept between
///   the copies.
///
/// Every color `i < v` then appears in the copy's neighborhood exactly
/// once: on the earlier clique vertex when `iv` is a non-edge, or on the
/// later copy of `i` when `iv` is an edge of F. The descents are therefore
/// the F-edge copies, each of size two.
#[derive(Debug, Clone)]
pub struct CliqueInstance {
    graph: OrderedGraph,
    coloring: ProperColoring,
    f: SimpleGraph,
}

pub fn clique_instance(f: &SimpleGraph) -> CliqueInstance {
    let n = f.n();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            edges.push((i, j));
        }
    }
    for &(u, v) in f.edges() {
        edges.push((n + u, n + v));
    }
    for v in 1..=n {
        for i in 1..v {
            if !f.has_edge(i, v) {
                edges.push((i, n + v));
            }
        }
    }
    let graph = SimpleGraph::new(2 * n, edges).expect("construction yields a simple graph");

    let mut order: Vec<usize> = (1..=n).collect();
    order.extend((1..=n).rev().map(|v| n + v));
    let graph = OrderedGraph::new(graph, &order).expect("block order is a permutation");

    let mut colors: Vec<usize> = (1..=n).collect();
    colors.extend(1..=n);
    let coloring = ProperColoring::new(graph.graph(), colors).expect("distinct colors per part");
    CliqueInstance { graph, coloring, f: f.clone() }
}

impl CliqueInstance {
    pub fn graph(&self) -> &OrderedGraph {
        &self.graph
    }

    pub fn coloring(&self) -> &ProperColoring {
        &self.coloring
    }

    pub fn f(&self) -> &SimpleGraph {
        &self.f
    }

    /// Instance vertex holding the copy of F's vertex `v`.
    pub fn copy_of(&self, v: usize) -> usize {
        self.f.n() + v
    }

    /// F's vertex behind an instance vertex, when it is a copy.
    pub fn original(&self, instance_vertex: usize) -> Option<usize> {
        (instance_vertex > self.f.n()).then(|| instance_vertex - self.f.n())
    }

    /// Lifts a vertex cover of F to a defining set for the instance's
    /// coloring: the copies of the cover, with their target colors.
    pub fn gds_from_cover(&self, cover: &[usize]) -> Result<PartialColoring> {
        check_cover(&self.f, cover)?;
        PartialColoring::from_pairs(cover.iter().map(|&v| (self.copy_of(v), v)))
    }

    /// Projects a defining set for the instance back to a vertex cover of
    /// F (clique-side vertices sit in no descent and are dropped).
    pub fn cover_from_gds(&self, s: &PartialColoring) -> Result<Vec<usize>> {
        if !is_gds(&self.graph, s, Some(&self.coloring))? {
            return Err(Error::invalid(
                "the given set is not defining for the instance coloring".to_string(),
            ));
        }
        let mut cover: Vec<usize> = s.domain().filter_map(|v| self.original(v)).collect();
        cover.sort_unstable();
        cover.dedup();
        check_cover(&self.f, &cover)
            .map_err(|_| Error::internal("defining set projected to a non-cover".to_string()))?;
        Ok(cover)
    }
}

/// The incidence construction for the uncolored problem.
///
/// For a connected F with `nv` vertices and `m >= 1` edges, the instance is
/// a connected bipartite graph on `2nv + 2m` vertices whose processing
/// order equals the vertex numbering:
///
/// ```text
///   1..=m                 edge copies on side Y   (descents' heads when side X is colored 1)
///   m+1..=2m              edge copies on side X
///   2m+1..=2m+nv          vertex copies on side Y
///   2m+nv+1..=2m+2nv      vertex copies on side X
/// ```
///
/// A Y-edge copy is adjacent to the X-copies of its endpoints, an X-edge
/// copy to the Y-copies of its endpoints, and the two copies of each vertex
/// are joined.
#[derive(Debug, Clone)]
pub struct IncidenceInstance {
    graph: OrderedGraph,
    f: SimpleGraph,
}

pub fn incidence_instance(f: &SimpleGraph) -> Result<IncidenceInstance> {
    if f.edge_count() == 0 {
        return Err(Error::invalid("the input graph needs at least one edge"));
    }
    if !f.is_connected() {
        return Err(Error::invalid("the input graph must be connected"));
    }
    let nv = f.n();
    let m = f.edge_count();
    let y_edge = |idx: usize| idx + 1;
    let x_edge = |idx: usize| m + idx + 1;
    let y_vertex = |v: usize| 2 * m + v;
    let x_vertex = |v: usize| 2 * m + nv + v;

    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (idx, &(u, v)) in f.edges().iter().enumerate() {
        edges.push((y_edge(idx), x_vertex(u)));
        edges.push((y_edge(idx), x_vertex(v)));
        edges.push((x_edge(idx), y_vertex(u)));
        edges.push((x_edge(idx), y_vertex(v)));
    }
    for v in 1..=nv {
        edges.push((y_vertex(v), x_vertex(v)));
    }
    let graph = SimpleGraph::new(2 * nv + 2 * m, edges)?;
    Ok(IncidenceInstance {
        graph: OrderedGraph::with_identity_order(graph),
        f: f.clone(),
    })
}

/// Which block an incidence-instance vertex belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IncidenceVertex {
    /// Copy of edge `edges()[idx]` on side Y.
    YEdge(usize),
    /// Copy of edge `edges()[idx]` on side X.
    XEdge(usize),
    /// Copy of vertex `v` on side Y.
    YVertex(usize),
    /// Copy of vertex `v` on side X.
    XVertex(usize),
}

impl IncidenceInstance {
    pub fn graph(&self) -> &OrderedGraph {
        &self.graph
    }

    pub fn f(&self) -> &SimpleGraph {
        &self.f
    }

    pub fn y_edge_copy(&self, idx: usize) -> usize {
        idx + 1
    }

    pub fn x_edge_copy(&self, idx: usize) -> usize {
        self.f.edge_count() + idx + 1
    }

    pub fn y_vertex_copy(&self, v: usize) -> usize {
        2 * self.f.edge_count() + v
    }

    pub fn x_vertex_copy(&self, v: usize) -> usize {
        2 * self.f.edge_count() + self.f.n() + v
    }

    pub fn classify(&self, instance_vertex: usize) -> IncidenceVertex {
        let m = self.f.edge_count();
        let nv = self.f.n();
        if instance_vertex <= m {
            IncidenceVertex::YEdge(instance_vertex - 1)
        } else if instance_vertex <= 2 * m {
            IncidenceVertex::XEdge(instance_vertex - m - 1)
        } else if instance_vertex <= 2 * m + nv {
            IncidenceVertex::YVertex(instance_vertex - 2 * m)
        } else {
            IncidenceVertex::XVertex(instance_vertex - 2 * m - nv)
        }
    }

    /// The 2-coloring with side X colored 1.
    pub fn primary_coloring(&self) -> ProperColoring {
        self.two_coloring(1)
    }

    /// The 2-coloring with side X colored 2.
    pub fn mirrored_coloring(&self) -> ProperColoring {
        self.two_coloring(2)
    }

    fn two_coloring(&self, x_color: usize) -> ProperColoring {
        let y_color = 3 - x_color;
        let colors: Vec<usize> = (1..=self.graph.n())
            .map(|v| match self.classify(v) {
                IncidenceVertex::XEdge(_) | IncidenceVertex::XVertex(_) => x_color,
                IncidenceVertex::YEdge(_) | IncidenceVertex::YVertex(_) => y_color,
            })
            .collect();
        ProperColoring::new(self.graph.graph(), colors).expect("sides are independent sets")
    }

    /// Lifts a vertex cover of F to a defining set: the X-side copies of
    /// the cover, colored 1 (matching [`Self::primary_coloring`]).
    pub fn gds_from_cover(&self, cover: &[usize]) -> Result<PartialColoring> {
        check_cover(&self.f, cover)?;
        PartialColoring::from_pairs(cover.iter().map(|&v| (self.x_vertex_copy(v), 1)))
    }

    /// Projects a defining set of the instance back to a vertex cover of
    /// F. Edge copies map to their lower-numbered endpoint; copies on the
    /// descent-free side are dropped.
    pub fn cover_from_gds(&self, s: &PartialColoring) -> Result<Vec<usize>> {
        if !is_gds(&self.graph, s, None)? {
            return Err(Error::invalid(
                "the given set is not a greedy defining set of the instance".to_string(),
            ));
        }
        // The run lands on one of the two 2-colorings; descents live on the
        // side colored 2, of the shape {edge copy, endpoint, endpoint}.
        let outcome = greedy_color(&self.graph, s)?;
        let x_is_one = outcome.color(self.x_vertex_copy(1)) == 1;
        let mut cover: Vec<usize> = Vec::new();
        for v in s.domain() {
            match self.classify(v) {
                IncidenceVertex::YEdge(idx) if x_is_one => {
                    let (a, b) = self.f.edges()[idx];
                    cover.push(a.min(b));
                }
                IncidenceVertex::XVertex(v) if x_is_one => cover.push(v),
                IncidenceVertex::XEdge(idx) if !x_is_one => {
                    let (a, b) = self.f.edges()[idx];
                    cover.push(a.min(b));
                }
                IncidenceVertex::YVertex(v) if !x_is_one => cover.push(v),
                _ => {}
            }
        }
        cover.sort_unstable();
        cover.dedup();
        check_cover(&self.f, &cover)
            .map_err(|_| Error::internal("defining set projected to a non-cover".to_string()))?;
        Ok(cover)
    }
}

fn check_cover(f: &SimpleGraph, cover: &[usize]) -> Result<()> {
    for &v in cover {
        if v == 0 || v > f.n() {
            return Err(Error::invalid(format!("cover vertex {v} is not in the graph")));
        }
    }
    for &(u, v) in f.edges() {
        if !cover.contains(&u) && !cover.contains(&v) {
            return Err(Error::invalid(format!(
                "the given set is not a vertex cover: edge ({u}, {v}) is uncovered"
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{gdn, gdn_fixed, min_vertex_cover};
    use crate::greedy::find_descents;

    #[test]
    fn clique_instance_on_one_edge() {
        let f = SimpleGraph::path(2);
        let inst = clique_instance(&f);
        // K2 plus a disjoint copy of the edge; no cross edges at all.
        assert_eq!(inst.graph().n(), 4);
        assert_eq!(inst.graph().edges(), &[(1, 2), (3, 4)]);

        let ds = find_descents(inst.graph(), inst.coloring()).unwrap();
        assert_eq!(ds.len(), 1);
        assert_eq!(ds[0].vertex_set(), vec![3, 4]);

        let r = gdn_fixed(inst.graph(), inst.coloring()).unwrap();
        assert_eq!(r.size, 1);
        assert_eq!(r.size, min_vertex_cover(&f).unwrap().len());
    }

    #[test]
    fn clique_instance_trivial_and_path() {
        let single = SimpleGraph::new(1, []).unwrap();
        let inst = clique_instance(&single);
        assert!(find_descents(inst.graph(), inst.coloring()).unwrap().is_empty());
        assert_eq!(gdn_fixed(inst.graph(), inst.coloring()).unwrap().size, 0);

        let f = SimpleGraph::path(3);
        let inst = clique_instance(&f);
        let r = gdn_fixed(inst.graph(), inst.coloring()).unwrap();
        assert_eq!(r.size, min_vertex_cover(&f).unwrap().len());
        assert_eq!(r.size, 1);
    }

    #[test]
    fn descent_shapes() {
        let f = SimpleGraph::new(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (2, 5)]).unwrap();
        let inst = clique_instance(&f);
        let ds = find_descents(inst.graph(), inst.coloring()).unwrap();
        assert_eq!(ds.len(), f.edge_count());
        assert!(ds.iter().all(|d| d.vertex_set().len() == 2));

        let inst = incidence_instance(&f).unwrap();
        for coloring in [inst.primary_coloring(), inst.mirrored_coloring()] {
            let ds = find_descents(inst.graph(), &coloring).unwrap();
            assert_eq!(ds.len(), f.edge_count());
            assert!(ds.iter().all(|d| d.vertex_set().len() == 3));
        }
    }

    #[test]
    fn incidence_instance_examples() {
        let p2 = SimpleGraph::path(2);
        let inst = incidence_instance(&p2).unwrap();
        assert_eq!(inst.graph().n(), 6);
        assert_eq!(inst.graph().edges().len(), 6);
        assert!(inst.graph().graph().is_connected());
        assert!(inst.graph().graph().bipartition().is_some());
        assert_eq!(gdn(inst.graph()).unwrap().size, 1);

        let k3 = SimpleGraph::complete(3);
        let inst = incidence_instance(&k3).unwrap();
        assert_eq!(gdn(inst.graph()).unwrap().size, 2);

        let star = SimpleGraph::new(4, [(1, 2), (1, 3), (1, 4)]).unwrap();
        let inst = incidence_instance(&star).unwrap();
        assert_eq!(gdn(inst.graph()).unwrap().size, 1);

        let disconnected = SimpleGraph::new(3, [(1, 2)]).unwrap();
        assert!(incidence_instance(&disconnected).is_err());
    }

    #[test]
    fn cover_to_gds_and_back() {
        let p2 = SimpleGraph::path(2);
        let inst = incidence_instance(&p2).unwrap();
        let s = inst.gds_from_cover(&[1]).unwrap();
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![(inst.x_vertex_copy(1), 1)]);
        assert!(is_gds(inst.graph(), &s, None).unwrap());

        // The Y-side edge copy carries color 2 in the primary coloring.
        let s = PartialColoring::from_pairs([(inst.y_edge_copy(0), 2)]).unwrap();
        assert_eq!(inst.cover_from_gds(&s).unwrap(), vec![1]);

        let k3 = SimpleGraph::complete(3);
        let inst = incidence_instance(&k3).unwrap();
        let s = inst.gds_from_cover(&[1, 2]).unwrap();
        assert_eq!(s.len(), 2);
        assert!(is_gds(inst.graph(), &s, None).unwrap());
        assert_eq!(inst.cover_from_gds(&s).unwrap(), vec![1, 2]);

        let p3 = SimpleGraph::path(3);
        let inst = clique_instance(&p3);
        let s = inst.gds_from_cover(&[2]).unwrap();
        assert!(is_gds(inst.graph(), &s, Some(inst.coloring())).unwrap());
        assert_eq!(inst.cover_from_gds(&s).unwrap(), vec![2]);

        let p2 = SimpleGraph::path(2);
        let inst = clique_instance(&p2);
        let s = PartialColoring::from_pairs([(inst.copy_of(2), 2)]).unwrap();
        assert_eq!(inst.cover_from_gds(&s).unwrap(), vec![2]);

        // A non-cover is rejected before any lifting happens.
        assert!(inst.gds_from_cover(&[]).is_err());
    }
}
