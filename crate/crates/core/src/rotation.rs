//! Combinatorial plane embeddings as rotation systems, and their faces.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A plane embedding given as the clockwise cyclic order of neighbors around
/// each vertex.
///
/// Face traversal convention, fixed once and used everywhere: from the
/// directed edge `(u, v)`, the next edge is `(v, w)` where `w` is the
/// neighbor immediately after `u` in the rotation at `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationSystem {
    rotation: Vec<Vec<usize>>,
}

impl RotationSystem {
    pub fn new(rotation: Vec<Vec<usize>>) -> Self {
        Self { rotation }
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    /// Clockwise neighbor order at `v`.
    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    /// The neighbor immediately after `u` in the rotation at `v` (cyclic).
    pub fn successor(&self, v: usize, u: usize) -> Option<usize> {
        let rot = &self.rotation[v];
        let i = rot.iter().position(|&x| x == u)?;
        Some(rot[(i + 1) % rot.len()])
    }

    /// Inserts `new` into the rotation at `v` directly after `anchor`.
    pub(crate) fn insert_after(&mut self, v: usize, anchor: usize, new: usize) {
        let rot = &mut self.rotation[v];
        let i = rot.iter().position(|&x| x == anchor).expect("anchor in rotation");
        rot.insert(i + 1, new);
    }

    /// Inserts `new` into the rotation at `v` directly before `anchor`.
    pub(crate) fn insert_before(&mut self, v: usize, anchor: usize, new: usize) {
        let rot = &mut self.rotation[v];
        let i = rot.iter().position(|&x| x == anchor).expect("anchor in rotation");
        rot.insert(i, new);
    }

    /// Inserts `new` at a fixed index of the stored rotation list at `v`.
    pub(crate) fn insert_at(&mut self, v: usize, index: usize, new: usize) {
        self.rotation[v].insert(index, new);
    }

    pub(crate) fn push_vertex(&mut self, rotation: Vec<usize>) {
        self.rotation.push(rotation);
    }

    /// Drops all vertices with id `>= keep`, removing them from the remaining
    /// rotations. Insertions into a `Vec` are undone exactly, so this restores
    /// the pre-augmentation rotations bit for bit.
    pub(crate) fn truncated(&self, keep: usize) -> Self {
        let rotation = self.rotation[..keep]
            .iter()
            .map(|rot| rot.iter().copied().filter(|&u| u < keep).collect())
            .collect();
        Self { rotation }
    }
}

/// The face walks of a plane embedding.
///
/// Each walk `[v0, v1, .., vk]` stands for the directed boundary edges
/// `(v0,v1), (v1,v2), .., (vk,v0)`; every directed edge of the graph lies on
/// exactly one walk. Walks start at their lexicographically smallest directed
/// edge and are listed in ascending order of that edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceSet {
    faces: Vec<Vec<usize>>,
    outer_face_index: usize,
}

impl FaceSet {
    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn face(&self, i: usize) -> &[usize] {
        &self.faces[i]
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// Index of the designated unbounded face: a face of maximum boundary
    /// length, ties broken by smallest contained vertex id, then by index.
    pub fn outer_face_index(&self) -> usize {
        self.outer_face_index
    }
}

fn pick_outer_face(faces: &[Vec<usize>]) -> usize {
    let mut best = 0;
    for (i, f) in faces.iter().enumerate() {
        let key = (f.len(), std::cmp::Reverse(f.iter().min().copied().unwrap_or(usize::MAX)));
        let best_key = (
            faces[best].len(),
            std::cmp::Reverse(faces[best].iter().min().copied().unwrap_or(usize::MAX)),
        );
        if key > best_key {
            best = i;
        }
    }
    best
}

/// Traces every face walk of `(g, rs)` under the next-edge-clockwise rule.
/// Assumes the rotation lists match the graph; `validate_embedding` checks that.
fn trace_faces(g: &Graph, rs: &RotationSystem) -> Vec<Vec<usize>> {
    // successor lookup: for directed edge (u, v), next directed edge is
    // (v, succ) with succ the neighbor after u at v.
    let mut succ: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for v in 0..g.vertex_count() {
        let rot = rs.rotation(v);
        let k = rot.len();
        for i in 0..k {
            succ.insert((v, rot[i]), rot[(i + 1) % k]);
        }
    }
    let mut traced: BTreeMap<(usize, usize), bool> = BTreeMap::new();
    for (u, v) in g.edges() {
        traced.insert((u, v), false);
        traced.insert((v, u), false);
    }
    let darts: Vec<(usize, usize)> = traced.keys().copied().collect();
    let mut faces = Vec::new();
    for &start in &darts {
        if traced[&start] {
            continue;
        }
        let mut walk = Vec::new();
        let mut dart = start;
        loop {
            *traced.get_mut(&dart).expect("dart exists") = true;
            walk.push(dart.0);
            let (u, v) = dart;
            let w = succ[&(v, u)];
            dart = (v, w);
            if dart == start {
                break;
            }
        }
        faces.push(walk);
    }
    faces
}

/// Checks that `rs` is a genus-zero (plane) embedding of `g` and returns its
/// faces.
///
/// Each rotation must list exactly the neighbors of its vertex, once each,
/// and the face walks must satisfy the Euler relation. With the unbounded
/// face counted once, the relation reads `V - E + F = 1 + C` for `C`
/// connected components; it is checked here component by component.
pub fn validate_embedding(g: &Graph, rs: &RotationSystem) -> Result<FaceSet> {
    if rs.vertex_count() != g.vertex_count() {
        return Err(Error::InconsistentRotation {
            vertex: rs.vertex_count().min(g.vertex_count()),
            detail: format!(
                "rotation covers {} vertices, graph has {}",
                rs.vertex_count(),
                g.vertex_count()
            ),
        });
    }
    for v in 0..g.vertex_count() {
        let mut listed: Vec<usize> = rs.rotation(v).to_vec();
        listed.sort_unstable();
        if listed.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InconsistentRotation {
                vertex: v,
                detail: "a neighbor appears twice".into(),
            });
        }
        if listed != g.neighbors(v) {
            return Err(Error::InconsistentRotation {
                vertex: v,
                detail: "listed neighbors differ from the graph".into(),
            });
        }
    }

    let faces = trace_faces(g, rs);

    // Euler per connected component: V - E + F = 2 whenever the component
    // has an edge. A face walk belongs to the component of its first vertex.
    let comps = g.components();
    let mut comp_of = vec![0usize; g.vertex_count()];
    for (ci, comp) in comps.iter().enumerate() {
        for &v in comp {
            comp_of[v] = ci;
        }
    }
    let mut face_count = vec![0usize; comps.len()];
    for f in &faces {
        face_count[comp_of[f[0]]] += 1;
    }
    let mut edge_count = vec![0usize; comps.len()];
    for (u, _) in g.edges() {
        edge_count[comp_of[u]] += 1;
    }
    for (ci, comp) in comps.iter().enumerate() {
        if edge_count[ci] == 0 {
            continue;
        }
        let (v, e, f) = (comp.len() as i64, edge_count[ci] as i64, face_count[ci] as i64);
        if v - e + f != 2 {
            return Err(Error::NotPlaneEmbedding(format!(
                "component containing vertex {}: V - E + F = {} - {} + {} != 2",
                comp[0], v, e, f
            )));
        }
    }

    let outer = pick_outer_face(&faces);
    Ok(FaceSet { faces, outer_face_index: outer })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Graph {
        Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    /// A plane rotation for K4: vertex 3 in the middle of triangle 0,1,2.
    fn k4_rotation() -> RotationSystem {
        RotationSystem::new(vec![
            vec![1, 3, 2],
            vec![2, 3, 0],
            vec![0, 3, 1],
            vec![0, 1, 2],
        ])
    }

    #[test]
    fn triangle_has_two_faces() {
        let g = Graph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let rs = RotationSystem::new(vec![vec![1, 2], vec![2, 0], vec![0, 1]]);
        let fs = validate_embedding(&g, &rs).unwrap();
        assert_eq!(fs.len(), 2);
        assert!(fs.faces().iter().all(|f| f.len() == 3));
    }

    #[test]
    fn k4_plane_rotation_has_four_triangles() {
        let fs = validate_embedding(&k4(), &k4_rotation()).unwrap();
        assert_eq!(fs.len(), 4);
        assert!(fs.faces().iter().all(|f| f.len() == 3));
    }

    #[test]
    fn k4_with_one_rotation_reversed_fails_euler() {
        let mut rot = k4_rotation().rotations().to_vec();
        rot[3].reverse();
        let rs = RotationSystem::new(rot);
        assert!(matches!(
            validate_embedding(&k4(), &rs),
            Err(Error::NotPlaneEmbedding(_))
        ));
    }

    #[test]
    fn missing_neighbor_is_inconsistent() {
        let g = Graph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let rs = RotationSystem::new(vec![vec![1], vec![2, 0], vec![0, 1]]);
        assert!(matches!(
            validate_embedding(&g, &rs),
            Err(Error::InconsistentRotation { vertex: 0, .. })
        ));
    }

    #[test]
    fn face_walk_lengths_sum_to_twice_edges() {
        let fs = validate_embedding(&k4(), &k4_rotation()).unwrap();
        let total: usize = fs.faces().iter().map(|f| f.len()).sum();
        assert_eq!(total, 2 * k4().edge_count());
    }

    #[test]
    fn disconnected_triangles_validate() {
        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        let rs = RotationSystem::new(vec![
            vec![1, 2],
            vec![2, 0],
            vec![0, 1],
            vec![4, 5],
            vec![5, 3],
            vec![3, 4],
        ]);
        let fs = validate_embedding(&g, &rs).unwrap();
        assert_eq!(fs.len(), 4);
    }

    #[test]
    fn isolated_vertices_are_fine() {
        let g = Graph::new(2, &[]).unwrap();
        let rs = RotationSystem::new(vec![vec![], vec![]]);
        let fs = validate_embedding(&g, &rs).unwrap();
        assert_eq!(fs.len(), 0);
    }
}
