//! Constructors for the application graph families and for test corpora.

use std::collections::BTreeMap;

use crate::graph::Graph;

/// Complete binary tree of the given depth, vertices numbered level by level
/// left to right (heap order), plus a path through each level's vertices in
/// that order.
pub fn x_tree(depth: u32) -> Graph {
    let n = (1usize << (depth + 1)) - 1;
    let mut edges = Vec::new();
    for k in 0..n {
        if 2 * k + 2 < n {
            edges.push((k, 2 * k + 1));
            edges.push((k, 2 * k + 2));
        }
    }
    for level in 1..=depth {
        let first = (1usize << level) - 1;
        let last = (1usize << (level + 1)) - 2;
        for v in first..last {
            edges.push((v, v + 1));
        }
    }
    Graph::new(n, &edges).expect("x-tree edges are simple")
}

/// X-tree plus, per level path, an edge closing the path into a cycle,
/// skipped when the endpoints are already adjacent.
pub fn extended_x_tree(depth: u32) -> Graph {
    let g = x_tree(depth);
    let mut edges = g.edge_vec();
    for level in 1..=depth {
        let first = (1usize << level) - 1;
        let last = (1usize << (level + 1)) - 2;
        if last > first && !g.has_edge(first, last) {
            edges.push((first, last));
        }
    }
    Graph::new(g.vertex_count(), &edges).expect("extended x-tree edges are simple")
}

/// The `rows x cols` grid (product of two paths), vertices in row-major
/// order.
pub fn grid(rows: usize, cols: usize) -> Graph {
    assert!(rows >= 1 && cols >= 1);
    let id = |r: usize, c: usize| r * cols + c;
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                edges.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < rows {
                edges.push((id(r, c), id(r + 1, c)));
            }
        }
    }
    Graph::new(rows * cols, &edges).expect("grid edges are simple")
}

/// For each original canonical edge, its interior path vertices in order
/// from the smaller endpoint.
pub type SubdivisionMap = BTreeMap<(usize, usize), Vec<usize>>;

/// Replaces every edge by a path with `per_edge` fresh interior vertices,
/// numbered consecutively edge by edge in canonical edge order.
pub fn subdivide(g: &Graph, per_edge: usize) -> (Graph, SubdivisionMap) {
    let n = g.vertex_count();
    let mut map = SubdivisionMap::new();
    let mut edges = Vec::new();
    let mut next = n;
    for (u, v) in g.edges() {
        if per_edge == 0 {
            edges.push((u, v));
            map.insert((u, v), Vec::new());
            continue;
        }
        let path: Vec<usize> = (next..next + per_edge).collect();
        next += per_edge;
        edges.push((u, path[0]));
        for w in path.windows(2) {
            edges.push((w[0], w[1]));
        }
        edges.push((*path.last().unwrap(), v));
        map.insert((u, v), path);
    }
    let sub = Graph::new(next, &edges).expect("subdivision edges are simple");
    (sub, map)
}

/// Contracts every subdivision path back to a single edge; inverse of
/// `subdivide` up to the original vertex set.
pub fn contract_subdivision(sub: &Graph, original_n: usize, map: &SubdivisionMap) -> Graph {
    let mut interior = vec![false; sub.vertex_count()];
    for path in map.values() {
        for &v in path {
            interior[v] = true;
        }
    }
    let mut edges: Vec<(usize, usize)> = map.keys().copied().collect();
    for (u, v) in sub.edges() {
        if !interior[u] && !interior[v] {
            // an edge untouched by the map survives as-is
            if !edges.contains(&(u, v)) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(original_n, &edges).expect("contraction of a valid subdivision")
}
