//! Exact desk-scale solvers: minimum hitting set, minimum vertex cover, and
//! the greedy defining number for a fixed coloring or over all colorings.
//!
//! All solvers are deterministic and tie-break toward the lexicographically
//! smallest witness. Size guards raise capability errors instead of silently
//! degrading to heuristics.

use crate::chromatic::chromatic_number;
use crate::error::{Error, Result};
use crate::graph::{OrderedGraph, PartialColoring, ProperColoring, SimpleGraph};
use crate::greedy::{find_descents, greedy_color};

/// Universe limit for [`min_hitting_set`]; families with more elements are
/// still accepted while they stay under [`MAX_HITTING_SETS`] member sets.
pub const MAX_HITTING_UNIVERSE: usize = 64;
pub const MAX_HITTING_SETS: usize = 10_000;
/// Vertex limit for [`min_vertex_cover`].
pub const MAX_COVER_VERTICES: usize = 40;
/// Vertex limit for [`gdn`] when the graph is not 2-colorable. Bipartite
/// inputs have only two proper colorings per component and are handled at
/// any size.
pub const MAX_GDN_VERTICES: usize = 12;
/// Cap on the number of optimal-palette colorings [`gdn`] will enumerate.
pub const MAX_GDN_COLORINGS: usize = 1 << 20;
/// Vertex limit for [`brute_force_gdn_oracle`].
pub const MAX_ORACLE_VERTICES: usize = 9;

/// A family of non-empty subsets of a finite universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetFamily {
    universe: Vec<usize>,
    sets: Vec<Vec<usize>>,
}

impl SetFamily {
    pub fn new(
        universe: impl IntoIterator<Item = usize>,
        sets: impl IntoIterator<Item = Vec<usize>>,
    ) -> Result<Self> {
        let mut universe: Vec<usize> = universe.into_iter().collect();
        universe.sort_unstable();
        universe.dedup();
        let mut clean = Vec::new();
        for mut set in sets {
            set.sort_unstable();
            set.dedup();
            for &e in &set {
                if universe.binary_search(&e).is_err() {
                    return Err(Error::invalid(format!(
                        "set member {e} is not in the universe"
                    )));
                }
            }
            clean.push(set);
        }
        Ok(SetFamily { universe, sets: clean })
    }

    /// Builds a family whose universe is the union of the given sets.
    pub fn from_sets(sets: impl IntoIterator<Item = Vec<usize>>) -> Self {
        let sets: Vec<Vec<usize>> = sets.into_iter().collect();
        let universe: Vec<usize> = sets.iter().flatten().copied().collect();
        SetFamily::new(universe, sets).expect("union universe always contains all members")
    }

    pub fn universe(&self) -> &[usize] {
        &self.universe
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }
}

/// A minimum set result from one of the exact solvers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GdnResult {
    pub size: usize,
    pub witness: PartialColoring,
}

/// Computes a minimum-cardinality subset of the universe that intersects
/// every member set, by branch and bound: branch on the elements of an
/// uncovered set, prune against a greedy incumbent and a disjoint-set lower
/// bound.
pub fn min_hitting_set(family: &SetFamily) -> Result<Vec<usize>> {
    if family.universe.len() > MAX_HITTING_UNIVERSE && family.sets.len() > MAX_HITTING_SETS {
        return Err(Error::Capability {
            operation: "min_hitting_set",
            limit: MAX_HITTING_UNIVERSE,
            actual: family.universe.len(),
        });
    }
    if family.sets.iter().any(|s| s.is_empty()) {
        return Err(Error::InfeasibleFamily);
    }

    // Work over element indices 0..u; index order equals value order.
    let universe = &family.universe;
    let to_idx = |e: usize| universe.binary_search(&e).expect("validated member");
    let mut sets: Vec<Vec<usize>> = family
        .sets
        .iter()
        .map(|s| s.iter().map(|&e| to_idx(e)).collect())
        .collect();
    sets.sort();
    sets.dedup();

    let u = universe.len();
    let mut occ: Vec<Vec<usize>> = vec![Vec::new(); u];
    for (si, set) in sets.iter().enumerate() {
        for &e in set {
            occ[e].push(si);
        }
    }

    let mut solver = HittingSolver {
        sets: &sets,
        occ: &occ,
        hits: vec![0u32; sets.len()],
        uncovered: sets.len(),
        banned: vec![false; u],
        chosen: Vec::new(),
        best: greedy_hitting_set(&sets, &occ, u),
        scratch: vec![false; u],
    };
    solver.branch();
    let mut best = solver.best;
    best.sort_unstable();
    Ok(best.into_iter().map(|e| universe[e]).collect())
}

struct HittingSolver<'a> {
    sets: &'a [Vec<usize>],
    occ: &'a [Vec<usize>],
    hits: Vec<u32>,
    uncovered: usize,
    banned: Vec<bool>,
    chosen: Vec<usize>,
    best: Vec<usize>,
    scratch: Vec<bool>,
}

impl HittingSolver<'_> {
    fn branch(&mut self) {
        if self.uncovered == 0 {
            let mut candidate = self.chosen.clone();
            candidate.sort_unstable();
            let mut incumbent = self.best.clone();
            incumbent.sort_unstable();
            if candidate.len() < incumbent.len()
                || (candidate.len() == incumbent.len() && candidate < incumbent)
            {
                self.best = candidate;
            }
            return;
        }
        if self.chosen.len() + self.disjoint_lower_bound() > self.best.len() {
            return;
        }
        // Branch on the uncovered set with the fewest usable elements.
        let mut target = usize::MAX;
        let mut target_open = usize::MAX;
        for (si, set) in self.sets.iter().enumerate() {
            if self.hits[si] > 0 {
                continue;
            }
            let open = set.iter().filter(|&&e| !self.banned[e]).count();
            if open < target_open {
                target = si;
                target_open = open;
            }
        }
        if target_open == 0 {
            return; // every element of some uncovered set is banned
        }
        let elements: Vec<usize> = self.sets[target]
            .iter()
            .copied()
            .filter(|&e| !self.banned[e])
            .collect();
        let mut banned_here = Vec::new();
        for e in elements {
            self.choose(e);
            self.branch();
            self.unchoose(e);
            self.banned[e] = true;
            banned_here.push(e);
        }
        for e in banned_here {
            self.banned[e] = false;
        }
    }

    fn choose(&mut self, e: usize) {
        self.chosen.push(e);
        for &si in &self.occ[e] {
            if self.hits[si] == 0 {
                self.uncovered -= 1;
            }
            self.hits[si] += 1;
        }
    }

    fn unchoose(&mut self, e: usize) {
        self.chosen.pop();
        for &si in &self.occ[e] {
            self.hits[si] -= 1;
            if self.hits[si] == 0 {
                self.uncovered += 1;
            }
        }
    }

    /// Pairwise-disjoint uncovered sets each need their own element.
    fn disjoint_lower_bound(&mut self) -> usize {
        let mut bound = 0;
        let mut marked = Vec::new();
        for (si, set) in self.sets.iter().enumerate() {
            if self.hits[si] > 0 {
                continue;
            }
            if set.iter().all(|&e| !self.scratch[e]) {
                bound += 1;
                for &e in set {
                    self.scratch[e] = true;
                    marked.push(e);
                }
            }
        }
        for e in marked {
            self.scratch[e] = false;
        }
        bound
    }
}

/// Greedy max-coverage incumbent for the branch and bound.
fn greedy_hitting_set(sets: &[Vec<usize>], occ: &[Vec<usize>], u: usize) -> Vec<usize> {
    let mut covered = vec![false; sets.len()];
    let mut remaining = sets.len();
    let mut chosen = Vec::new();
    while remaining > 0 {
        let mut best_e = usize::MAX;
        let mut best_gain = 0usize;
        for (e, sets_of_e) in occ.iter().enumerate().take(u) {
            let gain = sets_of_e.iter().filter(|&&si| !covered[si]).count();
            if gain > best_gain {
                best_gain = gain;
                best_e = e;
            }
        }
        chosen.push(best_e);
        for &si in &occ[best_e] {
            if !covered[si] {
                covered[si] = true;
                remaining -= 1;
            }
        }
    }
    chosen
}

/// Computes a minimum vertex cover of `h`, branching on a maximum-degree
/// vertex and pruning with a maximal-matching lower bound.
pub fn min_vertex_cover(h: &SimpleGraph) -> Result<Vec<usize>> {
    if h.n() > MAX_COVER_VERTICES {
        return Err(Error::Capability {
            operation: "min_vertex_cover",
            limit: MAX_COVER_VERTICES,
            actual: h.n(),
        });
    }
    let mut solver = CoverSolver {
        graph: h,
        alive: vec![true; h.n() + 1],
        deg: (0..=h.n()).map(|v| if v == 0 { 0 } else { h.degree(v) }).collect(),
        chosen: Vec::new(),
        best: (1..=h.n()).filter(|&v| h.degree(v) > 0).collect(),
    };
    solver.branch();
    let mut best = solver.best;
    best.sort_unstable();
    Ok(best)
}

struct CoverSolver<'a> {
    graph: &'a SimpleGraph,
    alive: Vec<bool>,
    deg: Vec<usize>,
    chosen: Vec<usize>,
    best: Vec<usize>,
}

impl CoverSolver<'_> {
    fn branch(&mut self) {
        let v = match (1..=self.graph.n())
            .filter(|&v| self.alive[v] && self.deg[v] > 0)
            .max_by_key(|&v| (self.deg[v], std::cmp::Reverse(v)))
        {
            Some(v) => v,
            None => {
                let mut candidate = self.chosen.clone();
                candidate.sort_unstable();
                let mut incumbent = self.best.clone();
                incumbent.sort_unstable();
                if candidate.len() < incumbent.len()
                    || (candidate.len() == incumbent.len() && candidate < incumbent)
                {
                    self.best = candidate;
                }
                return;
            }
        };
        if self.chosen.len() + self.matching_lower_bound() > self.best.len() {
            return;
        }

        // Branch A: v joins the cover.
        self.remove(v);
        self.chosen.push(v);
        self.branch();
        self.chosen.pop();
        self.restore(v);

        // Branch B: v stays out, so all its alive neighbors join.
        let nbrs: Vec<usize> = self
            .graph
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| self.alive[u])
            .collect();
        self.remove(v);
        for &u in &nbrs {
            self.remove(u);
            self.chosen.push(u);
        }
        self.branch();
        for &u in nbrs.iter().rev() {
            self.chosen.pop();
            self.restore(u);
        }
        self.restore(v);
    }

    fn remove(&mut self, v: usize) {
        self.alive[v] = false;
        for &u in self.graph.neighbors(v) {
            if self.alive[u] {
                self.deg[u] -= 1;
            }
        }
    }

    fn restore(&mut self, v: usize) {
        self.alive[v] = true;
        for &u in self.graph.neighbors(v) {
            if self.alive[u] {
                self.deg[u] += 1;
            }
        }
    }

    fn matching_lower_bound(&self) -> usize {
        let mut used = vec![false; self.graph.n() + 1];
        let mut bound = 0;
        for &(u, v) in self.graph.edges() {
            if self.alive[u] && self.alive[v] && !used[u] && !used[v] {
                used[u] = true;
                used[v] = true;
                bound += 1;
            }
        }
        bound
    }
}

/// Minimum greedy defining set for the fixed target coloring `c`: a minimum
/// hitting set over the vertex sets of the descents, returned as a
/// `c`-consistent pre-coloring.
pub fn gdn_fixed(g: &OrderedGraph, c: &ProperColoring) -> Result<GdnResult> {
    let chi = chromatic_number(g.graph())?;
    if c.num_colors() != chi {
        return Err(Error::invalid(format!(
            "target coloring uses {} colors but the chromatic number is {chi}",
            c.num_colors()
        )));
    }
    let descents = find_descents(g, c)?;
    let sets: Vec<Vec<usize>> = descents.iter().map(|d| d.vertex_set()).collect();
    let witness_vertices = min_hitting_set(&SetFamily::from_sets(sets))?;
    Ok(GdnResult {
        size: witness_vertices.len(),
        witness: c.restrict(witness_vertices),
    })
}

/// Minimum greedy defining set size over all optimal colorings.
///
/// A successful greedy run from a defining set lands on some proper coloring
/// with colors in `1..=χ`, and the set is then defining for that exact
/// coloring. Descents are local to connected components, so each component's
/// colorings are enumerated independently and the per-component minima sum.
pub fn gdn(g: &OrderedGraph) -> Result<GdnResult> {
    let chi = chromatic_number(g.graph())?;
    if chi >= 3 && g.n() > MAX_GDN_VERTICES {
        return Err(Error::Capability {
            operation: "gdn",
            limit: MAX_GDN_VERTICES,
            actual: g.n(),
        });
    }

    let mut total = 0usize;
    let mut witness = PartialColoring::new();
    let mut budget = MAX_GDN_COLORINGS;
    for comp in g.graph().components() {
        let best = best_over_component_colorings(g, &comp, chi, &mut budget)?;
        total += best.len();
        for (v, c) in best {
            witness.insert(v, c)?;
        }
    }
    Ok(GdnResult { size: total, witness })
}

/// Enumerates the proper colorings of one component into `1..=chi` and
/// returns the smallest hitting-set witness, as `(vertex, color)` pairs.
fn best_over_component_colorings(
    g: &OrderedGraph,
    comp: &[usize],
    chi: usize,
    budget: &mut usize,
) -> Result<Vec<(usize, usize)>> {
    // BFS order within the component so that every vertex after the first
    // has a colored neighbor; enumeration cost then tracks the output count.
    let mut order = vec![comp[0]];
    {
        let mut seen: std::collections::BTreeSet<usize> = [comp[0]].into();
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &u in g.neighbors(v) {
                if seen.insert(u) {
                    order.push(u);
                }
            }
        }
    }

    let mut search = ColoringSearch {
        g,
        comp,
        order: &order,
        chi,
        colors: vec![0usize; g.n() + 1],
        best: None,
        budget,
    };
    search.assign(0)?;
    search
        .best
        .ok_or_else(|| Error::internal("component admits no proper coloring".to_string()))
}

struct ColoringSearch<'a> {
    g: &'a OrderedGraph,
    comp: &'a [usize],
    order: &'a [usize],
    chi: usize,
    colors: Vec<usize>,
    best: Option<Vec<(usize, usize)>>,
    budget: &'a mut usize,
}

impl ColoringSearch<'_> {
    fn assign(&mut self, idx: usize) -> Result<()> {
        if matches!(&self.best, Some(b) if b.is_empty()) {
            return Ok(()); // this component cannot beat zero
        }
        if idx == self.order.len() {
            return self.complete();
        }
        let v = self.order[idx];
        for c in 1..=self.chi {
            if self.g.neighbors(v).iter().any(|&u| self.colors[u] == c) {
                continue;
            }
            self.colors[v] = c;
            self.assign(idx + 1)?;
            self.colors[v] = 0;
        }
        Ok(())
    }

    fn complete(&mut self) -> Result<()> {
        if *self.budget == 0 {
            return Err(Error::Capability {
                operation: "gdn",
                limit: MAX_GDN_COLORINGS,
                actual: MAX_GDN_COLORINGS + 1,
            });
        }
        *self.budget -= 1;
        let sets = component_descent_sets(self.g, self.comp, &self.colors);
        let hs = min_hitting_set(&SetFamily::from_sets(sets))?;
        let candidate: Vec<(usize, usize)> =
            hs.into_iter().map(|v| (v, self.colors[v])).collect();
        let better = match &self.best {
            None => true,
            Some(b) => candidate.len() < b.len() || (candidate.len() == b.len() && candidate < *b),
        };
        if better {
            self.best = Some(candidate);
        }
        Ok(())
    }
}

/// Vertex sets of the descents inside one component; mirrors
/// [`find_descents`] on a scratch color array.
fn component_descent_sets(g: &OrderedGraph, comp: &[usize], colors: &[usize]) -> Vec<Vec<usize>> {
    let mut sets = Vec::new();
    for &v in comp {
        let cv = colors[v];
        if cv == 1 {
            continue;
        }
        for low in 1..cv {
            let mut tail = Vec::new();
            let mut all_later = true;
            for &u in g.neighbors(v) {
                if colors[u] == low {
                    if g.position(u) < g.position(v) {
                        all_later = false;
                        break;
                    }
                    tail.push(u);
                }
            }
            if all_later {
                tail.push(v);
                tail.sort_unstable();
                sets.push(tail);
            }
        }
    }
    sets
}

/// Independent brute-force oracle: the smallest `k` such that some vertex
/// subset of size `k`, under some assignment of colors in `1..=χ`, makes the
/// greedy run finish proper within `χ` colors. Enumerates subsets in
/// increasing size and checks each with a direct greedy run, staying off the
/// descent/hitting-set path entirely.
pub fn brute_force_gdn_oracle(g: &OrderedGraph) -> Result<usize> {
    let n = g.n();
    if n > MAX_ORACLE_VERTICES {
        return Err(Error::Capability {
            operation: "brute_force_gdn_oracle",
            limit: MAX_ORACLE_VERTICES,
            actual: n,
        });
    }
    let chi = chromatic_number(g.graph())?;
    for k in 0..=n {
        let mut subset: Vec<usize> = Vec::with_capacity(k);
        if try_subsets(g, chi, k, 1, &mut subset)? {
            return Ok(k);
        }
    }
    Err(Error::internal("a full optimal coloring is always a defining set".to_string()))
}

fn try_subsets(
    g: &OrderedGraph,
    chi: usize,
    k: usize,
    from: usize,
    subset: &mut Vec<usize>,
) -> Result<bool> {
    if subset.len() == k {
        return try_assignments(g, chi, subset, &mut Vec::new());
    }
    for v in from..=g.n() {
        if g.n() - v + 1 < k - subset.len() {
            break;
        }
        subset.push(v);
        if try_subsets(g, chi, k, v + 1, subset)? {
            subset.pop();
            return Ok(true);
        }
        subset.pop();
    }
    Ok(false)
}

fn try_assignments(
    g: &OrderedGraph,
    chi: usize,
    subset: &[usize],
    colors: &mut Vec<usize>,
) -> Result<bool> {
    if colors.len() == subset.len() {
        let s = PartialColoring::from_pairs(subset.iter().copied().zip(colors.iter().copied()))?;
        let outcome = greedy_color(g, &s)?;
        return Ok(outcome.is_proper() && outcome.max_color() <= chi);
    }
    for c in 1..=chi {
        colors.push(c);
        if try_assignments(g, chi, subset, colors)? {
            colors.pop();
            return Ok(true);
        }
        colors.pop();
    }
    Ok(false)
}
