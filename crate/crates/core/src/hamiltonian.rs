//! Hamiltonian cycle search, cyclic spine orders, and edge-only
//! subhamiltonian completion.

use std::collections::VecDeque;

use crate::augment::AugmentationTrace;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A cycle through every vertex of its host graph, each exactly once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HamiltonianCycle {
    order: Vec<usize>,
}

impl HamiltonianCycle {
    /// Wraps `order` after checking it is a permutation of the vertices with
    /// consecutive members (cyclically) adjacent in `g`.
    pub fn new(g: &Graph, order: &[usize]) -> Result<Self> {
        let n = g.vertex_count();
        if order.len() != n {
            return Err(Error::PreconditionViolated(format!(
                "cycle covers {} of {} vertices",
                order.len(),
                n
            )));
        }
        let mut seen = vec![false; n];
        for &v in order {
            if v >= n || seen[v] {
                return Err(Error::PreconditionViolated(format!(
                    "vertex {v} repeated or out of range"
                )));
            }
            seen[v] = true;
        }
        for i in 0..n {
            let (u, v) = (order[i], order[(i + 1) % n]);
            if !g.has_edge(u, v) {
                return Err(Error::PreconditionViolated(format!(
                    "consecutive vertices {u} and {v} are not adjacent"
                )));
            }
        }
        Ok(Self { order: order.to_vec() })
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }
}

/// A cyclic order of a vertex set, stored canonically: the smallest id
/// first and, for three or more vertices, the second element smaller than
/// the last, which kills the reflection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicOrder {
    order: Vec<usize>,
}

impl CyclicOrder {
    pub fn new(seq: &[usize]) -> Self {
        if seq.is_empty() {
            return Self { order: Vec::new() };
        }
        let k = seq.len();
        let start = (0..k).min_by_key(|&i| seq[i]).expect("nonempty");
        let mut order: Vec<usize> = (0..k).map(|i| seq[(start + i) % k]).collect();
        if k >= 3 && order[1] > order[k - 1] {
            order[1..].reverse();
        }
        Self { order }
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// `position[v]` = index of `v` along the cycle, for vertices it contains.
    pub fn positions(&self, n: usize) -> Vec<Option<usize>> {
        let mut pos = vec![None; n];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = Some(i);
        }
        pos
    }
}

/// Result of a Hamiltonian cycle search, with the explored node count for
/// reporting.
#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub cycle: Option<HamiltonianCycle>,
    pub nodes_explored: u64,
}

pub const DEFAULT_SEARCH_BUDGET: u64 = 10_000_000;

/// Exhaustive Hamiltonian cycle search with the default node budget.
/// `Ok(None)` means the graph has no Hamiltonian cycle.
pub fn hamiltonian_cycle(g: &Graph) -> Result<Option<HamiltonianCycle>> {
    hamiltonian_cycle_with_budget(g, DEFAULT_SEARCH_BUDGET).map(|o| o.cycle)
}

/// Backtracking search over partial paths, extending the endpoint with the
/// fewest candidate extensions first. Prunes on stranded low-degree vertices
/// and on the unvisited subgraph disconnecting. Exceeding `budget` search
/// nodes is an error, distinct from an exact negative answer.
pub fn hamiltonian_cycle_with_budget(g: &Graph, budget: u64) -> Result<SearchOutcome> {
    let n = g.vertex_count();
    if n < 3 {
        return Ok(SearchOutcome { cycle: None, nodes_explored: 0 });
    }
    if (0..n).any(|v| g.degree(v) < 2) {
        return Ok(SearchOutcome { cycle: None, nodes_explored: 0 });
    }

    let start = (0..n).max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v))).unwrap();

    let mut state = Search {
        g,
        visited: vec![false; n],
        path: VecDeque::with_capacity(n),
        unvisited_deg: (0..n).map(|v| g.degree(v)).collect(),
        nodes: 0,
        budget,
        scratch: Scratch::new(n),
    };
    state.visit_front(start);
    let found = state.run()?;
    let cycle = if found {
        let order: Vec<usize> = state.path.iter().copied().collect();
        Some(HamiltonianCycle::new(g, &order).expect("search returns a valid cycle"))
    } else {
        None
    };
    Ok(SearchOutcome { cycle, nodes_explored: state.nodes })
}

struct Search<'a> {
    g: &'a Graph,
    visited: Vec<bool>,
    path: VecDeque<usize>,
    /// degree of each vertex into the unvisited set
    unvisited_deg: Vec<usize>,
    nodes: u64,
    budget: u64,
    scratch: Scratch,
}

/// Reusable buffers for the per-node articulation analysis.
struct Scratch {
    disc: Vec<usize>,
    low: Vec<usize>,
    parent: Vec<usize>,
    next_edge: Vec<usize>,
    split: Vec<usize>,
    stack: Vec<usize>,
    edge_stack: Vec<(usize, usize)>,
}

impl Scratch {
    fn new(n: usize) -> Self {
        Self {
            disc: vec![usize::MAX; n],
            low: vec![0; n],
            parent: vec![usize::MAX; n],
            next_edge: vec![0; n],
            split: vec![0; n],
            stack: Vec::with_capacity(n),
            edge_stack: Vec::new(),
        }
    }
}

impl Search<'_> {
    fn visit_front(&mut self, v: usize) {
        self.visited[v] = true;
        self.path.push_front(v);
        for &w in self.g.neighbors(v) {
            self.unvisited_deg[w] -= 1;
        }
    }

    fn visit_back(&mut self, v: usize) {
        self.visited[v] = true;
        self.path.push_back(v);
        for &w in self.g.neighbors(v) {
            self.unvisited_deg[w] -= 1;
        }
    }

    fn unvisit(&mut self, front: bool) {
        let v = if front { self.path.pop_front() } else { self.path.pop_back() }.unwrap();
        self.visited[v] = false;
        for &w in self.g.neighbors(v) {
            self.unvisited_deg[w] += 1;
        }
    }

    fn candidates(&self, end: usize) -> Vec<usize> {
        let mut c: Vec<usize> = self
            .g
            .neighbors(end)
            .iter()
            .copied()
            .filter(|&w| !self.visited[w])
            .collect();
        // fewest onward moves first
        c.sort_by_key(|&w| (self.unvisited_deg[w], w));
        c
    }

    /// Dead-branch tests on the unvisited subgraph `U`. The completion of
    /// the current path induces a Hamiltonian path of `U` whose ends attach
    /// to the path's endpoints, so the branch is dead when any of these
    /// fail:
    ///   - every unvisited vertex keeps two usable connections,
    ///   - `U` is connected,
    ///   - no cut vertex splits `U` into three or more parts,
    ///   - the block tree of `U` is a path (at most two leaf blocks),
    ///   - the path endpoints reach the interiors of opposite leaf blocks.
    fn prune(&mut self) -> bool {
        let n = self.g.vertex_count();
        let front = *self.path.front().unwrap();
        let back = *self.path.back().unwrap();
        for (v, &done) in self.visited.iter().enumerate() {
            if done {
                continue;
            }
            let mut avail = self.unvisited_deg[v];
            if self.g.has_edge(v, front) {
                avail += 1;
            }
            if front != back && self.g.has_edge(v, back) {
                avail += 1;
            }
            if avail < 2 {
                return true;
            }
        }

        // articulation structure of U by one depth-first pass
        let g = self.g;
        let visited = &self.visited;
        let s = &mut self.scratch;
        for v in 0..n {
            s.disc[v] = usize::MAX;
            s.next_edge[v] = 0;
            s.split[v] = 0;
        }
        s.stack.clear();
        s.edge_stack.clear();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut root_children = 0usize;
        let mut timer = 0usize;
        let mut started = false;

        for origin in 0..n {
            if visited[origin] || s.disc[origin] != usize::MAX {
                continue;
            }
            if started {
                return true; // U disconnected
            }
            started = true;
            let root = origin;
            s.disc[root] = timer;
            s.low[root] = timer;
            timer += 1;
            s.parent[root] = usize::MAX;
            s.stack.push(root);
            while let Some(&v) = s.stack.last() {
                if s.next_edge[v] < g.degree(v) {
                    let w = g.neighbors(v)[s.next_edge[v]];
                    s.next_edge[v] += 1;
                    if visited[w] {
                        continue;
                    }
                    if s.disc[w] == usize::MAX {
                        s.parent[w] = v;
                        s.disc[w] = timer;
                        s.low[w] = timer;
                        timer += 1;
                        s.edge_stack.push((v, w));
                        s.stack.push(w);
                    } else if w != s.parent[v] && s.disc[w] < s.disc[v] {
                        s.edge_stack.push((v, w));
                        s.low[v] = s.low[v].min(s.disc[w]);
                    }
                } else {
                    s.stack.pop();
                    let p = s.parent[v];
                    if p == usize::MAX {
                        continue;
                    }
                    s.low[p] = s.low[p].min(s.low[v]);
                    if p == root {
                        root_children += 1;
                    }
                    if s.low[v] >= s.disc[p] {
                        s.split[p] += 1;
                        let mut verts = Vec::new();
                        while let Some(e) = s.edge_stack.pop() {
                            for x in [e.0, e.1] {
                                if !verts.contains(&x) {
                                    verts.push(x);
                                }
                            }
                            if e == (p, v) {
                                break;
                            }
                        }
                        blocks.push(verts);
                    }
                }
            }
        }
        let unvisited_total = n - self.path.len();
        if !started {
            return false; // U empty; closure handled by the caller
        }
        if timer != unvisited_total {
            return true; // disconnected
        }
        // parts left behind by deleting v: dfs children with low >= disc,
        // plus the rest of U above v for non-roots
        for (v, &done) in visited.iter().enumerate() {
            if done || s.disc[v] == usize::MAX {
                continue;
            }
            let parts = if s.parent[v] == usize::MAX { root_children } else { s.split[v] + 1 };
            if parts >= 3 {
                return true;
            }
        }
        let s = &self.scratch;
        let is_art = |v: usize| {
            if s.parent[v] == usize::MAX {
                root_children >= 2
            } else {
                s.split[v] >= 1
            }
        };
        if blocks.len() >= 2 {
            // the block tree must be a path and the endpoints must attach to
            // the interiors of opposite leaf blocks
            let mut leaves: Vec<&Vec<usize>> = Vec::new();
            for b in &blocks {
                let arts = b.iter().filter(|&&v| is_art(v)).count();
                if arts <= 1 {
                    leaves.push(b);
                }
            }
            if leaves.len() > 2 {
                return true;
            }
            if leaves.len() == 2 {
                let reach = |end: usize, leaf: &[usize]| {
                    leaf.iter().any(|&v| !is_art(v) && g.has_edge(end, v))
                };
                let f1 = reach(front, leaves[0]);
                let f2 = reach(front, leaves[1]);
                let b1 = reach(back, leaves[0]);
                let b2 = reach(back, leaves[1]);
                if !((f1 && b2) || (f2 && b1)) {
                    return true;
                }
            }
        } else {
            // one block: each endpoint still needs an attachment into U
            let attach = |end: usize| g.neighbors(end).iter().any(|&w| !visited[w]);
            if !attach(front) || !attach(back) {
                return true;
            }
        }
        false
    }

    fn run(&mut self) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded(self.budget));
        }
        let n = self.g.vertex_count();
        if self.path.len() == n {
            let front = *self.path.front().unwrap();
            let back = *self.path.back().unwrap();
            return Ok(self.g.has_edge(front, back));
        }
        if self.prune() {
            return Ok(false);
        }
        let front = *self.path.front().unwrap();
        let back = *self.path.back().unwrap();
        let front_cands = self.candidates(front);
        let back_cands = self.candidates(back);
        let (extend_front, cands) = if front_cands.len() <= back_cands.len() {
            (true, front_cands)
        } else {
            (false, back_cands)
        };
        for v in cands {
            if extend_front {
                self.visit_front(v);
            } else {
                self.visit_back(v);
            }
            if self.run()? {
                return Ok(true);
            }
            self.unvisit(extend_front);
        }
        Ok(false)
    }
}

/// The cyclic order induced on the original vertices by a Hamiltonian cycle
/// of an augmented graph, after deleting the trace's added vertices.
pub fn spine_order(c: &HamiltonianCycle, t: &AugmentationTrace) -> Result<CyclicOrder> {
    let total = c.order().len();
    let expected = t.original_vertex_count + t.added_vertices.len();
    if total != expected {
        return Err(Error::TraceMismatch(format!(
            "cycle has {total} vertices, trace expects {expected}"
        )));
    }
    let mut is_added = vec![false; total];
    for av in &t.added_vertices {
        if av.id >= total || av.id < t.original_vertex_count {
            return Err(Error::TraceMismatch(format!(
                "added vertex {} outside the augmented range",
                av.id
            )));
        }
        is_added[av.id] = true;
    }
    let kept: Vec<usize> = c.order().iter().copied().filter(|&v| !is_added[v]).collect();
    if kept.len() != t.original_vertex_count {
        return Err(Error::TraceMismatch(
            "cycle does not contain every original vertex".into(),
        ));
    }
    Ok(CyclicOrder::new(&kept))
}

/// Adds an edge between every pair of consecutive nonadjacent vertices of
/// `o`, so that `o` becomes a Hamiltonian cycle of the (still planar) result.
pub fn subhamiltonian_completion(g: &Graph, o: &CyclicOrder) -> Result<Graph> {
    let n = g.vertex_count();
    if o.len() != n || o.positions(n).iter().any(Option::is_none) {
        return Err(Error::PreconditionViolated(
            "order does not cover exactly the graph's vertices".into(),
        ));
    }
    if crate::layout::assign_pages(g, o, 2).is_none() {
        return Err(Error::NotSubhamiltonianOrder);
    }
    let mut completed = g.clone();
    let order = o.as_slice();
    for i in 0..n {
        let (u, v) = (order[i], order[(i + 1) % n]);
        if u != v && !completed.has_edge(u, v) {
            completed.insert_edge(u, v);
        }
    }
    Ok(completed)
}
