//! Polynomial-time greedy defining numbers for forests.
//!
//! For a 2-colored tree the descents are exactly the color-2 vertices whose
//! neighbors all come later in the order, each together with its full
//! neighborhood. A minimum defining set can always be drawn from the color-1
//! vertices, so the problem becomes: find a minimum color-1 set dominating
//! the descent heads inside the subgraph induced by the descents. That
//! subgraph is a forest, and a leaf-directed peeling solves it exactly:
//!
//!  * a color-1 vertex with no remaining head neighbor is useless — drop it;
//!  * a head of degree 1 can only be dominated by its unique neighbor —
//!    take that neighbor and retire every head it dominates;
//!  * otherwise every leaf is color-1 and every head has degree ≥ 2; a
//!    color-1 leaf dominates a single head which has another dominator, so
//!    dropping the leaf keeps some optimum reachable.
//!
//! One vertex is removed per step (the one with smallest σ-position among
//! its kind, for determinism), so the whole run is `O(n log n)`.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::exact::GdnResult;
use crate::graph::{OrderedGraph, PartialColoring, ProperColoring};

/// A connected acyclic ordered graph with one of its proper 2-colorings
/// (a single vertex carries color 1).
#[derive(Debug, Clone)]
pub struct TreeInstance {
    tree: OrderedGraph,
    /// 1-based; index 0 unused.
    colors: Vec<u8>,
}

impl TreeInstance {
    /// `colors[i]` is the color of vertex `i + 1`, drawn from `{1, 2}`.
    pub fn new(tree: OrderedGraph, colors: Vec<u8>) -> Result<Self> {
        let g = tree.graph();
        if g.n() == 0 {
            return Err(Error::invalid("tree must have at least one vertex"));
        }
        if !g.is_acyclic() {
            return Err(Error::invalid("graph contains a cycle"));
        }
        if !g.is_connected() {
            return Err(Error::invalid("graph is not connected"));
        }
        if colors.len() != g.n() {
            return Err(Error::invalid(format!(
                "coloring lists {} vertices, expected {}",
                colors.len(),
                g.n()
            )));
        }
        if g.n() == 1 {
            if colors[0] != 1 {
                return Err(Error::invalid("a single vertex is colored 1"));
            }
        } else if let Some(i) = colors.iter().position(|&c| c != 1 && c != 2) {
            return Err(Error::invalid(format!("vertex {}: colors must be 1 or 2", i + 1)));
        }
        let mut padded = Vec::with_capacity(g.n() + 1);
        padded.push(0);
        padded.extend_from_slice(&colors);
        for &(u, v) in g.edges() {
            if padded[u] == padded[v] {
                return Err(Error::invalid(format!(
                    "coloring is not proper: vertices {u} and {v} share color {}",
                    padded[u]
                )));
            }
        }
        Ok(TreeInstance { tree, colors: padded })
    }

    pub fn tree(&self) -> &OrderedGraph {
        &self.tree
    }

    pub fn color(&self, v: usize) -> u8 {
        self.colors[v]
    }

    pub fn coloring(&self) -> ProperColoring {
        let colors: Vec<usize> = self.colors[1..].iter().map(|&c| c as usize).collect();
        ProperColoring::new(self.tree.graph(), colors).expect("validated at construction")
    }
}

/// Minimum greedy defining set for the tree's fixed 2-coloring; the witness
/// consists of color-1 vertices only.
pub fn tree_gdn_fixed(t: &TreeInstance) -> Result<GdnResult> {
    let comp: Vec<usize> = (1..=t.tree.n()).collect();
    let k = peel_component(&t.tree, &t.colors, &comp)?;
    let witness = PartialColoring::from_pairs(k.iter().map(|&v| (v, 1)))?;
    Ok(GdnResult { size: k.len(), witness })
}

/// Result of [`forest_gdn`]: the minimum size, the witness pre-coloring
/// (all color 1), and the optimal coloring the witness steers the greedy
/// run towards.
#[derive(Debug, Clone)]
pub struct ForestGdn {
    pub size: usize,
    pub witness: PartialColoring,
    pub target: ProperColoring,
}

/// Minimum greedy defining set of an ordered forest: each component is
/// solved for both of its 2-colorings and the cheaper side is kept.
pub fn forest_gdn(f: &OrderedGraph) -> Result<ForestGdn> {
    let g = f.graph();
    if g.n() == 0 {
        return Err(Error::invalid("forest must have at least one vertex"));
    }
    if !g.is_acyclic() {
        return Err(Error::invalid("graph contains a cycle"));
    }
    let side = g.bipartition().expect("forests are bipartite");

    let mut scratch = vec![0u8; g.n() + 1];
    let mut target = vec![1usize; g.n() + 1];
    let mut witness_vertices: Vec<usize> = Vec::new();
    for comp in g.components() {
        if comp.len() == 1 {
            continue; // colored 1 in the target; no descents either way
        }
        for &v in &comp {
            scratch[v] = side[v];
        }
        let ka = peel_component(f, &scratch, &comp)?;
        for &v in &comp {
            scratch[v] = 3 - side[v];
        }
        let kb = peel_component(f, &scratch, &comp)?;
        let flip = kb.len() < ka.len() || (kb.len() == ka.len() && kb < ka);
        let chosen = if flip { kb } else { ka };
        for &v in &comp {
            target[v] = if flip { 3 - side[v] } else { side[v] } as usize;
        }
        witness_vertices.extend(chosen);
    }

    witness_vertices.sort_unstable();
    let witness = PartialColoring::from_pairs(witness_vertices.iter().map(|&v| (v, 1)))?;
    let target = ProperColoring::new(g, target[1..].to_vec())?;
    Ok(ForestGdn { size: witness_vertices.len(), witness, target })
}

/// Peels one component: returns a minimum color-1 set dominating the
/// descent heads of the component under `colors`.
fn peel_component(g: &OrderedGraph, colors: &[u8], comp: &[usize]) -> Result<Vec<usize>> {
    let n = g.n();
    // Descent heads: color-2 vertices whose every neighbor comes later.
    let mut in_d = vec![false; n + 1];
    let mut heads = 0usize;
    for &v in comp {
        if colors[v] == 2
            && g.neighbors(v).iter().all(|&u| g.position(u) > g.position(v))
        {
            in_d[v] = true;
            heads += 1;
        }
    }
    if heads == 0 {
        return Ok(Vec::new());
    }

    // H: the subgraph induced by the heads and their neighborhoods. All of
    // its edges join a head to a color-1 vertex.
    let mut in_h = vec![false; n + 1];
    for &v in comp {
        if in_d[v] {
            in_h[v] = true;
            for &u in g.neighbors(v) {
                in_h[u] = true;
            }
        }
    }
    let mut deg = vec![0usize; n + 1];
    let mut alive = vec![false; n + 1];
    let mut alive_count = 0usize;
    for &v in comp {
        if in_h[v] {
            alive[v] = true;
            alive_count += 1;
            deg[v] = g.neighbors(v).iter().filter(|&&u| in_h[u]).count();
        }
    }

    let mut head_leaves: BinaryHeap<Reverse<(usize, usize)>> = BinaryHeap::new();
    let mut one_leaves: BinaryHeap<Reverse<(usize, usize)>> = BinaryHeap::new();
    let mut isolated: Vec<usize> = Vec::new();
    for &v in comp {
        if !alive[v] {
            continue;
        }
        if in_d[v] {
            if deg[v] == 0 {
                return Err(Error::internal(format!(
                    "descent head {v} has no neighbor in the induced subgraph"
                )));
            }
            if deg[v] == 1 {
                head_leaves.push(Reverse((g.position(v), v)));
            }
        } else if deg[v] == 1 {
            one_leaves.push(Reverse((g.position(v), v)));
        }
    }

    let mut k: Vec<usize> = Vec::new();
    while alive_count > 0 {
        // Isolated color-1 vertices dominate nothing.
        if let Some(u) = isolated.pop() {
            if alive[u] {
                alive[u] = false;
                alive_count -= 1;
            }
            continue;
        }
        // A head of degree 1 forces its unique neighbor into K.
        if let Some(v) = pop_valid(&mut head_leaves, &alive, &deg, 1) {
            let u = g
                .neighbors(v)
                .iter()
                .copied()
                .find(|&u| alive[u] && in_h[u])
                .ok_or_else(|| Error::internal(format!("leaf head {v} lost its neighbor")))?;
            alive[u] = false;
            alive_count -= 1;
            k.push(u);
            let dominated: Vec<usize> = g
                .neighbors(u)
                .iter()
                .copied()
                .filter(|&w| alive[w] && in_h[w])
                .collect();
            for w in dominated {
                alive[w] = false;
                alive_count -= 1;
                for &x in g.neighbors(w) {
                    if alive[x] && in_h[x] {
                        deg[x] -= 1;
                        match deg[x] {
                            1 => one_leaves.push(Reverse((g.position(x), x))),
                            0 => isolated.push(x),
                            _ => {}
                        }
                    }
                }
            }
            continue;
        }
        // Every head has degree >= 2; shed the earliest color-1 leaf.
        if let Some(l) = pop_valid(&mut one_leaves, &alive, &deg, 1) {
            alive[l] = false;
            alive_count -= 1;
            let w = g
                .neighbors(l)
                .iter()
                .copied()
                .find(|&w| alive[w] && in_h[w])
                .ok_or_else(|| Error::internal(format!("leaf {l} lost its neighbor")))?;
            deg[w] -= 1;
            match deg[w] {
                1 => head_leaves.push(Reverse((g.position(w), w))),
                0 => {
                    return Err(Error::internal(format!(
                        "descent head {w} became isolated while still present"
                    )))
                }
                _ => {}
            }
            continue;
        }
        return Err(Error::internal("peeling stalled with vertices remaining".to_string()));
    }

    k.sort_unstable();
    Ok(k)
}

fn pop_valid(
    heap: &mut BinaryHeap<Reverse<(usize, usize)>>,
    alive: &[bool],
    deg: &[usize],
    want: usize,
) -> Option<usize> {
    while let Some(&Reverse((_, v))) = heap.peek() {
        if alive[v] && deg[v] == want {
            heap.pop();
            return Some(v);
        }
        heap.pop();
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{gdn, gdn_fixed};
    use crate::graph::SimpleGraph;
    use crate::greedy::is_gds;

    fn star_leaves_first() -> OrderedGraph {
        OrderedGraph::with_identity_order(SimpleGraph::new(4, [(1, 4), (2, 4), (3, 4)]).unwrap())
    }

    #[test]
    fn path_three_alternating_from_two() {
        let t = TreeInstance::new(
            OrderedGraph::with_identity_order(SimpleGraph::path(3)),
            vec![2, 1, 2],
        )
        .unwrap();
        let r = tree_gdn_fixed(&t).unwrap();
        assert_eq!(r.size, 1);
        assert_eq!(r.witness.iter().collect::<Vec<_>>(), vec![(2, 1)]);
    }

    #[test]
    fn star_center_colored_one() {
        let t = TreeInstance::new(star_leaves_first(), vec![2, 2, 2, 1]).unwrap();
        let r = tree_gdn_fixed(&t).unwrap();
        assert_eq!(r.size, 1);
        assert_eq!(r.witness.iter().collect::<Vec<_>>(), vec![(4, 1)]);
    }

    #[test]
    fn path_four_without_descent_heads() {
        let t = TreeInstance::new(
            OrderedGraph::with_identity_order(SimpleGraph::path(4)),
            vec![1, 2, 1, 2],
        )
        .unwrap();
        assert_eq!(tree_gdn_fixed(&t).unwrap().size, 0);
    }

    #[test]
    fn tree_fixed_matches_exact_solver() {
        let t = TreeInstance::new(star_leaves_first(), vec![2, 2, 2, 1]).unwrap();
        let fixed = gdn_fixed(t.tree(), &t.coloring()).unwrap();
        assert_eq!(tree_gdn_fixed(&t).unwrap().size, fixed.size);
    }

    #[test]
    fn forest_examples() {
        let single = OrderedGraph::with_identity_order(SimpleGraph::new(1, []).unwrap());
        assert_eq!(forest_gdn(&single).unwrap().size, 0);

        let p3 = OrderedGraph::with_identity_order(SimpleGraph::path(3));
        assert_eq!(forest_gdn(&p3).unwrap().size, 0);

        let cyclic = OrderedGraph::with_identity_order(SimpleGraph::cycle(4));
        assert!(matches!(forest_gdn(&cyclic), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn two_leaves_first_stars() {
        // Each star's center sees all of its leaves earlier, so the greedy
        // run succeeds unaided: the minimum over both colorings is zero per
        // component, confirmed against the coloring-enumeration solver.
        let edges = [(1, 4), (2, 4), (3, 4), (5, 8), (6, 8), (7, 8)];
        let f = OrderedGraph::with_identity_order(SimpleGraph::new(8, edges).unwrap());
        let r = forest_gdn(&f).unwrap();
        assert_eq!(r.size, 0);
        assert_eq!(gdn(&f).unwrap().size, 0);
        assert!(is_gds(&f, &r.witness, Some(&r.target)).unwrap());
    }

    #[test]
    fn witness_is_defining_for_target() {
        // Orders that put leaves ahead of their neighbors create descents.
        let edges = [(1, 2), (2, 3), (3, 4), (3, 5), (5, 6)];
        let g = OrderedGraph::new(SimpleGraph::new(6, edges).unwrap(), &[6, 4, 1, 5, 3, 2]).unwrap();
        let r = forest_gdn(&g).unwrap();
        assert!(is_gds(&g, &r.witness, Some(&r.target)).unwrap());
        assert_eq!(r.size, gdn(&g).unwrap().size);
    }
}
