//! Planarity testing that constructs a rotation system, plus face extraction
//! and outerplanarity.

use std::collections::BTreeSet;

use crate::connectivity::blocks_and_cutpoints;
use crate::error::Result;
use crate::graph::Graph;
use crate::rotation::{validate_embedding, FaceSet, RotationSystem};

/// Builds a plane rotation system for `g`, or `None` when `g` is not planar.
///
/// Works block by block with an incremental face-based insertion scheme:
/// start from a cycle, then repeatedly route a path of some unembedded
/// bridge through a face whose boundary contains all of the bridge's
/// attachments, always serving a bridge with the fewest admissible faces.
/// Block embeddings are spliced together at cutpoints. Deterministic for a
/// fixed input.
pub fn planar_embed(g: &Graph) -> Option<RotationSystem> {
    let n = g.vertex_count();
    if n >= 3 && g.edge_count() > 3 * n - 6 {
        return None;
    }
    let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); n];
    let tree = blocks_and_cutpoints(g);
    for block in &tree.blocks {
        match block.vertices.len() {
            1 => {}
            2 => {
                let (u, v) = (block.vertices[0], block.vertices[1]);
                splice(&mut rotation, u, vec![v]);
                splice(&mut rotation, v, vec![u]);
            }
            _ => {
                let (h, back) = g.induced_dense(&block.vertices);
                let local = embed_biconnected(&h)?;
                for (i, rot) in local.into_iter().enumerate() {
                    let mapped: Vec<usize> = rot.into_iter().map(|x| back[x]).collect();
                    splice(&mut rotation, back[i], mapped);
                }
            }
        }
    }
    Some(RotationSystem::new(rotation))
}

/// Appends a block's fan at `v` to the rotation built so far, rotated to
/// start at its smallest neighbor. Appending drops the fan into one corner
/// of the embedding already present, which keeps the union plane.
fn splice(rotation: &mut [Vec<usize>], v: usize, mut incoming: Vec<usize>) {
    if incoming.is_empty() {
        return;
    }
    let start = (0..incoming.len()).min_by_key(|&i| incoming[i]).unwrap();
    incoming.rotate_left(start);
    rotation[v].extend(incoming);
}

/// The face walks of a validated embedding, with the designated outer face.
pub fn faces(g: &Graph, rs: &RotationSystem) -> Result<FaceSet> {
    validate_embedding(g, rs)
}

/// True iff `g` stays planar after adding an apex vertex adjacent to every
/// vertex, which characterizes outerplanarity.
pub fn is_outerplanar(g: &Graph) -> bool {
    outerplanar_order(g).is_some()
}

/// For an outerplanar graph, a cyclic vertex order along which every edge is
/// a non-crossing chord, i.e. a one-page spine. Read off as the rotation at
/// a fresh apex vertex joined to everything: in a plane embedding of the
/// apexed graph the spokes fan out in exactly that boundary order.
pub fn outerplanar_order(g: &Graph) -> Option<crate::hamiltonian::CyclicOrder> {
    let n = g.vertex_count();
    let mut edges = g.edge_vec();
    for v in 0..n {
        edges.push((v, n));
    }
    let apexed = Graph::new(n + 1, &edges).expect("apex construction is simple");
    let rs = planar_embed(&apexed)?;
    Some(crate::hamiltonian::CyclicOrder::new(rs.rotation(n)))
}

/// One unembedded bridge of the graph relative to the embedded subgraph:
/// either a chord between two embedded vertices or a component of the
/// unembedded vertices with its attachment edges.
#[derive(Debug)]
struct Bridge {
    attachments: Vec<usize>,
    interior: Vec<usize>,
}

struct Embedder<'a> {
    g: &'a Graph,
    rotation: Vec<Vec<usize>>,
    in_h: Vec<bool>,
    h_edges: BTreeSet<(usize, usize)>,
    /// faces as simple cycles; grows by one per embedded path
    faces: Vec<Vec<usize>>,
}

fn embed_biconnected(g: &Graph) -> Option<Vec<Vec<usize>>> {
    let n = g.vertex_count();
    debug_assert!(n >= 3);
    if g.edge_count() > 3 * n - 6 {
        return None;
    }

    let cycle = find_cycle(g);
    let mut emb = Embedder {
        g,
        rotation: vec![Vec::new(); n],
        in_h: vec![false; n],
        h_edges: BTreeSet::new(),
        faces: Vec::new(),
    };
    let k = cycle.len();
    for i in 0..k {
        let v = cycle[i];
        emb.in_h[v] = true;
        emb.rotation[v] = vec![cycle[(i + k - 1) % k], cycle[(i + 1) % k]];
        emb.h_edges.insert(canon(v, cycle[(i + 1) % k]));
    }
    let mut reversed = cycle.clone();
    reversed.reverse();
    emb.faces.push(cycle);
    emb.faces.push(reversed);

    loop {
        let bridges = emb.bridges();
        if bridges.is_empty() {
            debug_assert_eq!(emb.h_edges.len(), g.edge_count());
            return Some(emb.rotation);
        }
        // bridge with the fewest admissible faces; none admissible => nonplanar
        let mut pick: Option<(usize, usize)> = None; // (bridge, face)
        let mut fewest = usize::MAX;
        for (bi, b) in bridges.iter().enumerate() {
            let mut first = None;
            let mut count = 0;
            for (fi, f) in emb.faces.iter().enumerate() {
                if b.attachments.iter().all(|a| f.contains(a)) {
                    count += 1;
                    if first.is_none() {
                        first = Some(fi);
                    }
                }
            }
            if count == 0 {
                return None;
            }
            if count < fewest {
                fewest = count;
                pick = Some((bi, first.unwrap()));
            }
        }
        let (bi, fi) = pick.expect("at least one bridge");
        let path = emb.path_through(&bridges[bi]);
        emb.embed_path(&path, fi);
    }
}

fn canon(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

/// Deterministic cycle: depth-first from vertex 0 over sorted adjacency,
/// closed at the first back edge.
fn find_cycle(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    let mut next_child = vec![0usize; n];
    depth[0] = 0;
    let mut stack = vec![0usize];
    while let Some(&v) = stack.last() {
        if next_child[v] == g.degree(v) {
            stack.pop();
            continue;
        }
        let w = g.neighbors(v)[next_child[v]];
        next_child[v] += 1;
        if depth[w] == usize::MAX {
            parent[w] = v;
            depth[w] = depth[v] + 1;
            stack.push(w);
        } else if w != parent[v] && depth[w] < depth[v] {
            // back edge: walk v up to w
            let mut cycle = vec![v];
            let mut cur = v;
            while cur != w {
                cur = parent[cur];
                cycle.push(cur);
            }
            cycle.reverse();
            return cycle;
        }
    }
    unreachable!("a 2-connected graph on 3+ vertices contains a cycle")
}

impl Embedder<'_> {
    /// All bridges of the graph relative to the embedded subgraph, in
    /// canonical order.
    fn bridges(&self) -> Vec<Bridge> {
        let g = self.g;
        let n = g.vertex_count();
        let mut out = Vec::new();
        for (u, v) in g.edges() {
            if self.in_h[u] && self.in_h[v] && !self.h_edges.contains(&(u, v)) {
                out.push(Bridge { attachments: vec![u, v], interior: Vec::new() });
            }
        }
        let mut seen = vec![false; n];
        for s in 0..n {
            if self.in_h[s] || seen[s] {
                continue;
            }
            let mut interior = vec![s];
            seen[s] = true;
            let mut head = 0;
            let mut attachments = BTreeSet::new();
            while head < interior.len() {
                let v = interior[head];
                head += 1;
                for &w in g.neighbors(v) {
                    if self.in_h[w] {
                        attachments.insert(w);
                    } else if !seen[w] {
                        seen[w] = true;
                        interior.push(w);
                    }
                }
            }
            interior.sort_unstable();
            out.push(Bridge { attachments: attachments.into_iter().collect(), interior });
        }
        out.sort_by(|a, b| (&a.attachments, &a.interior).cmp(&(&b.attachments, &b.interior)));
        out
    }

    /// A path across the bridge between two distinct attachments, interior
    /// vertices unembedded. Breadth-first from the smallest attachment.
    fn path_through(&self, b: &Bridge) -> Vec<usize> {
        if b.interior.is_empty() {
            return b.attachments.clone();
        }
        let g = self.g;
        let x = b.attachments[0];
        let mut parent = vec![usize::MAX; g.vertex_count()];
        let mut queue = std::collections::VecDeque::new();
        for &w in g.neighbors(x) {
            if !self.in_h[w] && b.interior.binary_search(&w).is_ok() && parent[w] == usize::MAX {
                parent[w] = x;
                queue.push_back(w);
            }
        }
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if self.in_h[w] {
                    if w != x {
                        // found the far attachment; rebuild x .. v, w
                        let mut path = vec![w, v];
                        let mut cur = v;
                        while parent[cur] != x {
                            cur = parent[cur];
                            path.push(cur);
                        }
                        path.push(x);
                        path.reverse();
                        return path;
                    }
                } else if parent[w] == usize::MAX {
                    parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
        unreachable!("bridge of a 2-connected graph reaches a second attachment")
    }

    /// Routes `path` through face `fi`, splitting it in two and updating the
    /// rotations at both endpoints and along the interior.
    fn embed_path(&mut self, path: &[usize], fi: usize) {
        let face = self.faces[fi].clone();
        let len = face.len();
        let x = path[0];
        let y = *path.last().unwrap();
        let px = face.iter().position(|&v| v == x).expect("endpoint on face");
        let py = face.iter().position(|&v| v == y).expect("endpoint on face");

        let walk_arc = |from: usize, to: usize| {
            let mut out = vec![face[from]];
            let mut i = from;
            while i != to {
                i = (i + 1) % len;
                out.push(face[i]);
            }
            out
        };
        let arc_xy = walk_arc(px, py);
        let arc_yx = walk_arc(py, px);
        let interior = &path[1..path.len() - 1];

        // the face enters x from `before_x` and leaves y toward its successor;
        // new edges slot into exactly those corners
        let before_x = face[(px + len - 1) % len];
        let before_y = face[(py + len - 1) % len];
        insert_after_in(&mut self.rotation[x], before_x, path[1]);
        insert_after_in(&mut self.rotation[y], before_y, path[path.len() - 2]);

        for (i, &p) in interior.iter().enumerate() {
            let prev = if i == 0 { x } else { interior[i - 1] };
            let next = if i + 1 == interior.len() { y } else { interior[i + 1] };
            self.rotation[p] = vec![prev, next];
            self.in_h[p] = true;
        }
        for w in path.windows(2) {
            self.h_edges.insert(canon(w[0], w[1]));
        }

        let mut face_a = arc_xy;
        face_a.extend(interior.iter().rev());
        let mut face_b = arc_yx;
        face_b.extend(interior.iter());
        self.faces[fi] = face_a;
        self.faces.push(face_b);
    }
}

fn insert_after_in(rot: &mut Vec<usize>, anchor: usize, new: usize) {
    let i = rot.iter().position(|&x| x == anchor).expect("anchor in rotation");
    rot.insert(i + 1, new);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k_n(n: usize) -> Graph {
        let mut e = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                e.push((u, v));
            }
        }
        Graph::new(n, &e).unwrap()
    }

    fn grid(m: usize, n: usize) -> Graph {
        crate::generators::grid(m, n)
    }

    #[test]
    fn k4_embeds_with_four_triangular_faces() {
        let g = k_n(4);
        let rs = planar_embed(&g).unwrap();
        let fs = validate_embedding(&g, &rs).unwrap();
        assert_eq!(fs.len(), 4);
        assert!(fs.faces().iter().all(|f| f.len() == 3));
    }

    #[test]
    fn k5_is_not_planar() {
        assert!(planar_embed(&k_n(5)).is_none());
    }

    #[test]
    fn k33_is_not_planar() {
        let g = Graph::new(
            6,
            &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)],
        )
        .unwrap();
        assert!(planar_embed(&g).is_none());
    }

    #[test]
    fn grid_3x3_has_five_faces() {
        let g = grid(3, 3);
        let rs = planar_embed(&g).unwrap();
        let fs = validate_embedding(&g, &rs).unwrap();
        assert_eq!(fs.len(), 5);
    }

    #[test]
    fn c4_has_two_faces_of_length_four() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let rs = planar_embed(&g).unwrap();
        let fs = faces(&g, &rs).unwrap();
        assert_eq!(fs.len(), 2);
        assert!(fs.faces().iter().all(|f| f.len() == 4));
    }

    #[test]
    fn bowtie_outer_walk_passes_the_cutpoint_twice() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
        let rs = planar_embed(&g).unwrap();
        let fs = faces(&g, &rs).unwrap();
        assert_eq!(fs.len(), 3);
        let mut lens: Vec<usize> = fs.faces().iter().map(|f| f.len()).collect();
        lens.sort_unstable();
        assert_eq!(lens, vec![3, 3, 6]);
        let outer = fs.face(fs.outer_face_index());
        assert_eq!(outer.iter().filter(|&&v| v == 0).count(), 2);
    }

    #[test]
    fn disconnected_and_tree_graphs_embed() {
        let g = Graph::new(7, &[(0, 1), (1, 2), (3, 4), (4, 5), (5, 3)]).unwrap();
        let rs = planar_embed(&g).unwrap();
        assert!(validate_embedding(&g, &rs).is_ok());
    }

    #[test]
    fn every_embedding_passes_validation() {
        // a mix of planar shapes, including ones with cutpoints
        let shapes: Vec<Graph> = vec![
            k_n(4),
            grid(2, 5),
            grid(4, 4),
            Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 2), (0, 3)])
                .unwrap(),
            Graph::new(8, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3), (5, 6), (6, 7)])
                .unwrap(),
        ];
        for g in shapes {
            let rs = planar_embed(&g).expect("planar");
            validate_embedding(&g, &rs).expect("valid embedding");
        }
    }

    #[test]
    fn dense_planar_graph_embeds() {
        // maximal planar graph on 8 vertices: stacked triangulation
        let mut edges = vec![(0, 1), (1, 2), (2, 0)];
        let mut faces_list = vec![[0, 1, 2], [0, 1, 2], [0, 1, 2]];
        // stack vertices 3..8 into a fixed sequence of faces
        for v in 3..8 {
            let f = faces_list[v % faces_list.len()];
            edges.extend([(f[0], v), (f[1], v), (f[2], v)]);
            faces_list.push([f[0], f[1], v]);
            faces_list.push([f[1], f[2], v]);
            faces_list.push([f[0], f[2], v]);
        }
        let g = Graph::new(8, &edges).unwrap();
        assert_eq!(g.edge_count(), 3 + 5 * 3);
        let rs = planar_embed(&g).unwrap();
        validate_embedding(&g, &rs).unwrap();
    }

    #[test]
    fn outerplanarity_examples() {
        let c6 = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        assert!(is_outerplanar(&c6));
        assert!(!is_outerplanar(&k_n(4)));
        assert!(!is_outerplanar(&grid(3, 3)));
        assert!(is_outerplanar(&Graph::empty(0)));
        assert!(is_outerplanar(&Graph::new(2, &[(0, 1)]).unwrap()));
    }

    #[test]
    fn apex_edge_screen_matches_embedding() {
        // nonplanar by edge count alone
        let g = k_n(5);
        assert!(g.edge_count() > 3 * g.vertex_count() - 6);
        assert!(planar_embed(&g).is_none());
    }

    #[test]
    fn sparse_nonplanar_graphs_are_rejected() {
        // Petersen: 15 edges, well under the 3n-6 screen, still nonplanar
        let petersen = Graph::new(
            10,
            &[
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
            ],
        )
        .unwrap();
        assert!(planar_embed(&petersen).is_none());

        // K4,4 and a K3,3 subdivision
        let mut k44 = Vec::new();
        for u in 0..4 {
            for v in 4..8 {
                k44.push((u, v));
            }
        }
        assert!(planar_embed(&Graph::new(8, &k44).unwrap()).is_none());

        let k33 = Graph::new(
            6,
            &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)],
        )
        .unwrap();
        let (sub, _) = crate::generators::subdivide(&k33, 1);
        assert!(planar_embed(&sub).is_none());
    }
}
