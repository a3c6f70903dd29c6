//! Finite simple undirected graphs on dense integer vertices.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// A finite simple undirected graph with vertices `0..n`.
///
/// No loops, no parallel edges. Edges are stored canonically as `(min, max)`
/// pairs, so the edge set has plain set semantics. Values are immutable
/// through the public API; algorithms that grow a graph build a new one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: BTreeSet<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph on vertices `0..n` from an edge list, rejecting loops,
    /// duplicate pairs and out-of-range endpoints.
    pub fn new(n: usize, edge_list: &[(usize, usize)]) -> Result<Self> {
        let mut edges = BTreeSet::new();
        for &(u, v) in edge_list {
            if u == v {
                return Err(Error::LoopEdge((u, v)));
            }
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { edge: (u, v), n });
            }
            let e = (u.min(v), u.max(v));
            if !edges.insert(e) {
                return Err(Error::DuplicateEdge((u, v)));
            }
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Self { vertex_count: n, edges, adj })
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Self { vertex_count: n, edges: BTreeSet::new(), adj: vec![Vec::new(); n] }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical `(min, max)` order, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_vec(&self) -> Vec<(usize, usize)> {
        self.edges.iter().copied().collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.edges.contains(&(u.min(v), u.max(v)))
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Same edge set with `extra` fresh vertices appended after the current range.
    pub fn with_extra_vertices(&self, extra: usize) -> Self {
        let mut g = self.clone();
        g.vertex_count += extra;
        g.adj.resize(g.vertex_count, Vec::new());
        g
    }

    /// Same vertex set plus one edge. Panics on loops or duplicates; callers
    /// are internal constructions that add genuinely new edges.
    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.vertex_count && v < self.vertex_count);
        let inserted = self.edges.insert((u.min(v), u.max(v)));
        assert!(inserted, "edge ({u}, {v}) already present");
        let pos = self.adj[u].binary_search(&v).unwrap_err();
        self.adj[u].insert(pos, v);
        let pos = self.adj[v].binary_search(&u).unwrap_err();
        self.adj[v].insert(pos, u);
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.vertex_count];
        let mut out = Vec::new();
        for start in 0..self.vertex_count {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut head = 0;
            while head < comp.len() {
                let v = comp[head];
                head += 1;
                for &w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Number of connected components after deleting the marked vertices.
    /// Deleted vertices count toward nothing; an empty remainder yields 0.
    pub fn component_count_excluding(&self, excluded: &[bool]) -> usize {
        debug_assert_eq!(excluded.len(), self.vertex_count);
        let mut seen = vec![false; self.vertex_count];
        let mut count = 0;
        let mut stack = Vec::new();
        for start in 0..self.vertex_count {
            if seen[start] || excluded[start] {
                continue;
            }
            count += 1;
            seen[start] = true;
            stack.push(start);
            while let Some(v) = stack.pop() {
                for &w in self.neighbors(v) {
                    if !seen[w] && !excluded[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    }

    /// Induced subgraph on `verts` (sorted, deduplicated by the caller),
    /// relabeled to the dense range `0..verts.len()`. Returns the graph and
    /// the dense-to-original vertex map.
    pub fn induced_dense(&self, verts: &[usize]) -> (Graph, Vec<usize>) {
        debug_assert!(verts.windows(2).all(|w| w[0] < w[1]));
        let index = |v: usize| verts.binary_search(&v).ok();
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            if let (Some(a), Some(b)) = (index(u), index(v)) {
                edges.push((a, b));
            }
        }
        let g = Graph::new(verts.len(), &edges).expect("induced subgraph of a valid graph");
        (g, verts.to_vec())
    }
}
