//! Triangle classification, the nicely-planar test, augmentation of a
//! 2-connected block to a 3-connected plane graph without separating
//! triangles, and stellation of nontriangular faces.

use crate::connectivity::{is_k_connected, separating_pairs};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::planar::planar_embed;
use crate::rotation::{validate_embedding, RotationSystem};

/// Why a vertex was added during augmentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    /// Placed in the face corner at `at` between its rotation-consecutive
    /// neighbors `prev` and `next`, joined to all three.
    Wedge { at: usize, prev: usize, next: usize },
    /// Placed inside the face with this boundary walk, joined to every
    /// boundary vertex.
    FaceCenter { face: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AddedVertex {
    pub id: usize,
    pub provenance: Provenance,
}

/// Record of everything augmentation added, sufficient to roll the augmented
/// graph back to the original exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AugmentationTrace {
    pub original_vertex_count: usize,
    /// in ascending id order; ids are `original_vertex_count..`
    pub added_vertices: Vec<AddedVertex>,
    /// every added edge has at least one added endpoint
    pub added_edges: Vec<(usize, usize)>,
}

impl AugmentationTrace {
    pub fn empty(original_vertex_count: usize) -> Self {
        Self { original_vertex_count, added_vertices: Vec::new(), added_edges: Vec::new() }
    }

    pub fn is_empty(&self) -> bool {
        self.added_vertices.is_empty()
    }

    /// Composes this trace with one recorded on top of its result.
    pub fn chain(&self, later: &AugmentationTrace) -> Result<AugmentationTrace> {
        if later.original_vertex_count != self.original_vertex_count + self.added_vertices.len() {
            return Err(Error::TraceMismatch(format!(
                "second trace starts at {} vertices, first ends at {}",
                later.original_vertex_count,
                self.original_vertex_count + self.added_vertices.len()
            )));
        }
        let mut added_vertices = self.added_vertices.clone();
        added_vertices.extend(later.added_vertices.iter().cloned());
        let mut added_edges = self.added_edges.clone();
        added_edges.extend(later.added_edges.iter().copied());
        Ok(AugmentationTrace {
            original_vertex_count: self.original_vertex_count,
            added_vertices,
            added_edges,
        })
    }
}

/// Deletes the trace's added vertices (and their edges) from an augmented
/// graph and embedding, restoring the originals bit for bit.
pub fn rollback(
    g: &Graph,
    rs: &RotationSystem,
    trace: &AugmentationTrace,
) -> Result<(Graph, RotationSystem)> {
    let keep = trace.original_vertex_count;
    let expected: Vec<usize> = (keep..g.vertex_count()).collect();
    let actual: Vec<usize> = trace.added_vertices.iter().map(|a| a.id).collect();
    if actual != expected {
        return Err(Error::TraceMismatch(format!(
            "trace ids {actual:?} do not form the range {keep}..{}",
            g.vertex_count()
        )));
    }
    let mut kept_edges = Vec::new();
    let mut removed_edges = Vec::new();
    for (u, v) in g.edges() {
        if u < keep && v < keep {
            kept_edges.push((u, v));
        } else {
            removed_edges.push((u, v));
        }
    }
    let mut declared: Vec<(usize, usize)> = trace
        .added_edges
        .iter()
        .map(|&(u, v)| (u.min(v), u.max(v)))
        .collect();
    declared.sort_unstable();
    declared.dedup();
    if declared != removed_edges {
        return Err(Error::TraceMismatch(
            "edges incident to added vertices differ from the trace".into(),
        ));
    }
    let original = Graph::new(keep, &kept_edges).expect("subgraph of a valid graph");
    Ok((original, rs.truncated(keep)))
}

/// All 3-cliques of `g`, each once, as ascending triples in ascending order.
pub fn enumerate_triangles(g: &Graph) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for (u, v) in g.edges() {
        for &w in g.neighbors(v) {
            if w > v && g.has_edge(u, w) {
                out.push((u, v, w));
            }
        }
    }
    out.sort_unstable();
    out
}

/// Triangles whose vertex deletion strictly increases the number of
/// connected components.
pub fn separating_triangles(g: &Graph) -> Vec<(usize, usize, usize)> {
    let before = g.components().len();
    let mut excluded = vec![false; g.vertex_count()];
    let mut out = Vec::new();
    for t in enumerate_triangles(g) {
        let (a, b, c) = t;
        excluded[a] = true;
        excluded[b] = true;
        excluded[c] = true;
        if g.component_count_excluding(&excluded) > before {
            out.push(t);
        }
        excluded[a] = false;
        excluded[b] = false;
        excluded[c] = false;
    }
    out
}

/// Whether a planar 2-connected block has no separating triangles, which for
/// such blocks is the nicely-planar property. Graphs on at most two vertices
/// qualify trivially.
pub fn is_nicely_planar_block(g: &Graph) -> Result<bool> {
    if g.vertex_count() <= 2 {
        return Ok(true);
    }
    if !is_k_connected(g, 2).map_err(|_| Error::NotTwoConnected)? {
        return Err(Error::NotTwoConnected);
    }
    if planar_embed(g).is_none() {
        return Err(Error::NotPlanar);
    }
    Ok(separating_triangles(g).is_empty())
}

/// Augments a 2-connected plane block with no separating triangles to a
/// 3-connected plane graph with no separating triangles that contains the
/// input as an induced subgraph.
///
/// While a separating pair `{u, v}` remains, the connected components
/// `G_1..G_n` of `g - {u, v}` are read off in the clockwise order of the
/// edges joining them to `v`; between each consecutive pair of components a
/// fresh vertex is added in the corresponding face corner at `v`, joined to
/// `v` and to the two component vertices flanking the corner. Every round
/// strictly decreases the number of separating pairs.
pub fn lemma1_augment(
    g: &Graph,
    rs: &RotationSystem,
) -> Result<(Graph, RotationSystem, AugmentationTrace)> {
    if g.vertex_count() < 3 || !is_k_connected(g, 2).unwrap_or(false) {
        return Err(Error::PreconditionViolated("input block is not 2-connected".into()));
    }
    if validate_embedding(g, rs).is_err() {
        return Err(Error::PreconditionViolated(
            "rotation system is not a plane embedding of the input".into(),
        ));
    }
    if !separating_triangles(g).is_empty() {
        return Err(Error::PreconditionViolated("input has separating triangles".into()));
    }

    let mut g = g.clone();
    let mut rs = rs.clone();
    let mut trace = AugmentationTrace::empty(g.vertex_count());

    let mut pairs = separating_pairs(&g)?;
    while !pairs.is_empty() {
        let (p, q) = pairs[0];
        let (center, other) = if g.degree(q) > g.degree(p) { (q, p) } else { (p, q) };
        split_corners_at(&mut g, &mut rs, center, other, &mut trace)?;

        if validate_embedding(&g, &rs).is_err() {
            return Err(Error::InternalGuaranteeViolated(
                "augmentation step broke the plane embedding".into(),
            ));
        }

        // every separating pair of the augmented graph already separated the
        // input, so rechecking the previous round's list is exhaustive
        let mut excluded = vec![false; g.vertex_count()];
        let remaining: Vec<(usize, usize)> = pairs
            .iter()
            .copied()
            .filter(|&(u, v)| {
                excluded[u] = true;
                excluded[v] = true;
                let separates = g.component_count_excluding(&excluded) >= 2;
                excluded[u] = false;
                excluded[v] = false;
                separates
            })
            .collect();
        debug_assert_eq!(
            remaining,
            separating_pairs(&g).expect("augmented graph stays 2-connected"),
            "augmentation created a separating pair outside the previous list"
        );
        if remaining.len() >= pairs.len() {
            return Err(Error::InternalGuaranteeViolated(
                "separating pair count failed to decrease".into(),
            ));
        }
        pairs = remaining;
    }

    Ok((g, rs, trace))
}

/// One augmentation round for the separating pair `{center, other}`: adds a
/// wedge vertex between each pair of consecutive components around `center`.
fn split_corners_at(
    g: &mut Graph,
    rs: &mut RotationSystem,
    center: usize,
    other: usize,
    trace: &mut AugmentationTrace,
) -> Result<()> {
    let n = g.vertex_count();

    // component of every vertex of g - {center, other}
    let mut comp = vec![usize::MAX; n];
    {
        let mut next = 0;
        let mut stack = Vec::new();
        for s in 0..n {
            if s == center || s == other || comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            stack.push(s);
            while let Some(v) = stack.pop() {
                for &w in g.neighbors(v) {
                    if w != center && w != other && comp[w] == usize::MAX {
                        comp[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
    }

    let rot = rs.rotation(center).to_vec();
    let len = rot.len();

    // anchored linear scan of the rotation at `center`: just after the edge
    // to `other` when that edge exists, otherwise at the component boundary
    // with the smallest neighbor id
    let start = if g.has_edge(center, other) {
        let iu = rot.iter().position(|&x| x == other).expect("neighbor in rotation");
        (iu + 1) % len
    } else {
        let mut boundaries: Vec<usize> = (0..len)
            .filter(|&i| comp[rot[i]] != comp[rot[(i + len - 1) % len]])
            .collect();
        boundaries.sort_by_key(|&i| rot[i]);
        *boundaries.first().ok_or_else(|| {
            Error::InternalGuaranteeViolated(
                "separation components are not interleaved at the separation vertex".into(),
            )
        })?
    };
    let scan: Vec<(usize, usize)> = (0..len)
        .map(|i| ((start + i) % len, rot[(start + i) % len]))
        .filter(|&(_, w)| w != other)
        .collect();

    // maximal runs of one component; contiguity is a planarity consequence
    let mut runs: Vec<(usize, usize, usize)> = Vec::new(); // (comp, first_scan_idx, last_scan_idx)
    for (i, &(_, w)) in scan.iter().enumerate() {
        match runs.last_mut() {
            Some(r) if r.0 == comp[w] => r.2 = i,
            _ => runs.push((comp[w], i, i)),
        }
    }
    let mut seen: Vec<usize> = runs.iter().map(|r| r.0).collect();
    seen.sort_unstable();
    seen.dedup();
    if seen.len() != runs.len() {
        return Err(Error::InternalGuaranteeViolated(
            "edges toward one separation component are not consecutive".into(),
        ));
    }
    if runs.len() < 2 {
        return Err(Error::InternalGuaranteeViolated(
            "separation vertex sees fewer than two components".into(),
        ));
    }

    // one wedge vertex per consecutive run pair
    let base = g.vertex_count();
    let count = runs.len() - 1;
    *g = g.with_extra_vertices(count);

    let mut inserts_at_center: Vec<(usize, usize)> = Vec::new(); // (rot position, new id)
    for j in 0..count {
        let fresh = base + j;
        let last_prev = runs[j].2;
        let first_next = runs[j + 1].1;
        let prev = scan[last_prev].1;
        let next = scan[first_next].1;

        g.insert_edge(fresh, prev);
        g.insert_edge(fresh, next);
        g.insert_edge(fresh, center);

        rs.insert_before(prev, center, fresh);
        rs.insert_after(next, center, fresh);
        rs.push_vertex(vec![prev, next, center]);
        inserts_at_center.push((scan[last_prev].0, fresh));

        trace.added_vertices.push(AddedVertex {
            id: fresh,
            provenance: Provenance::Wedge { at: center, prev, next },
        });
        trace.added_edges.push((fresh, prev));
        trace.added_edges.push((fresh, next));
        trace.added_edges.push((fresh, center));
    }

    // splice the wedge vertices into the rotation at `center`, descending so
    // earlier insertions do not shift later positions
    inserts_at_center.sort_by_key(|&(pos, _)| std::cmp::Reverse(pos));
    for (pos, fresh) in inserts_at_center {
        rs.insert_at(center, pos + 1, fresh);
    }

    Ok(())
}

/// Stellates every nontriangular face of a 2-connected plane graph: a fresh
/// vertex inside each such face, joined to every vertex of its boundary.
/// The result is a triangulation. Rolling the trace back restores the input.
pub fn stellate(
    g: &Graph,
    rs: &RotationSystem,
) -> Result<(Graph, RotationSystem, AugmentationTrace)> {
    let faces = validate_embedding(g, rs)?;
    if g.vertex_count() < 3 || !is_k_connected(g, 2).unwrap_or(false) {
        return Err(Error::NotTwoConnected);
    }

    let mut g = g.clone();
    let mut rs = rs.clone();
    let mut trace = AugmentationTrace::empty(g.vertex_count());

    for walk in faces.faces() {
        let len = walk.len();
        if len <= 3 {
            continue;
        }
        {
            let mut sorted = walk.clone();
            sorted.sort_unstable();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::NotTwoConnected);
            }
        }
        let fresh = g.vertex_count();
        g = g.with_extra_vertices(1);
        for i in 0..len {
            let here = walk[i];
            let before = walk[(i + len - 1) % len];
            g.insert_edge(fresh, here);
            // the face corner at `here` lies between `before` and the walk's
            // next vertex; the fresh spoke goes right after `before`
            rs.insert_after(here, before, fresh);
            trace.added_edges.push((fresh, here));
        }
        // spokes of the center run against the walk direction
        let mut center_rot = Vec::with_capacity(len);
        center_rot.push(walk[0]);
        center_rot.extend(walk[1..].iter().rev());
        rs.push_vertex(center_rot);
        trace
            .added_vertices
            .push(AddedVertex { id: fresh, provenance: Provenance::FaceCenter { face: walk.clone() } });
    }

    let check = validate_embedding(&g, &rs).map_err(|e| {
        Error::InternalGuaranteeViolated(format!("stellation broke the embedding: {e}"))
    })?;
    if check.faces().iter().any(|f| f.len() != 3) {
        return Err(Error::InternalGuaranteeViolated(
            "stellation left a nontriangular face".into(),
        ));
    }
    if g.edge_count() != 3 * g.vertex_count() - 6 {
        return Err(Error::InternalGuaranteeViolated(
            "stellation did not reach E = 3V - 6".into(),
        ));
    }
    Ok((g, rs, trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar::faces;

    fn k4() -> Graph {
        Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn c4() -> Graph {
        Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    fn c6() -> Graph {
        Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap()
    }

    fn octahedron() -> Graph {
        Graph::new(
            6,
            &[
                (0, 2), (0, 3), (0, 4), (0, 5),
                (1, 2), (1, 3), (1, 4), (1, 5),
                (2, 4), (2, 5), (3, 4), (3, 5),
            ],
        )
        .unwrap()
    }

    /// Triangle {0,1,2} with pendants 0-3, 0-4, 0-5 plus a disjoint triangle
    /// {6,7,8}. Deleting the first triangle turns 2 components into 4.
    fn bonnet() -> Graph {
        Graph::new(
            9,
            &[(0, 1), (1, 2), (2, 0), (0, 3), (0, 4), (0, 5), (6, 7), (7, 8), (8, 6)],
        )
        .unwrap()
    }

    #[test]
    fn k4_has_four_triangles() {
        assert_eq!(enumerate_triangles(&k4()).len(), 4);
    }

    #[test]
    fn c6_has_none() {
        assert!(enumerate_triangles(&c6()).is_empty());
    }

    #[test]
    fn octahedron_has_eight() {
        assert_eq!(enumerate_triangles(&octahedron()).len(), 8);
    }

    #[test]
    fn bonnet_triangle_is_separating() {
        assert_eq!(separating_triangles(&bonnet()), vec![(0, 1, 2)]);
    }

    #[test]
    fn k4_triangles_are_not_separating() {
        assert!(separating_triangles(&k4()).is_empty());
    }

    #[test]
    fn stuffed_octahedron_face_is_separating() {
        // vertex 6 inside face {0,2,4} of the octahedron
        let mut edges = octahedron().edge_vec();
        edges.extend([(6, 0), (6, 2), (6, 4)]);
        let g = Graph::new(7, &edges).unwrap();
        assert_eq!(separating_triangles(&g), vec![(0, 2, 4)]);
    }

    #[test]
    fn wheel_is_nicely_planar() {
        let w4 = Graph::new(
            5,
            &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (4, 2), (4, 3)],
        )
        .unwrap();
        assert!(is_nicely_planar_block(&w4).unwrap());
    }

    #[test]
    fn stuffed_octahedron_is_not() {
        let mut edges = octahedron().edge_vec();
        edges.extend([(6, 0), (6, 2), (6, 4)]);
        let g = Graph::new(7, &edges).unwrap();
        assert!(!is_nicely_planar_block(&g).unwrap());
    }

    #[test]
    fn lemma1_leaves_k4_alone() {
        let g = k4();
        let rs = planar_embed(&g).unwrap();
        let (g2, rs2, trace) = lemma1_augment(&g, &rs).unwrap();
        assert_eq!(g2, g);
        assert_eq!(rs2, rs);
        assert!(trace.is_empty());
    }

    #[test]
    fn lemma1_augments_c4() {
        let g = c4();
        let rs = planar_embed(&g).unwrap();
        let (g2, rs2, trace) = lemma1_augment(&g, &rs).unwrap();
        assert!(!trace.is_empty());
        assert!(validate_embedding(&g2, &rs2).is_ok());
        assert!(is_k_connected(&g2, 3).unwrap());
        assert!(separating_triangles(&g2).is_empty());
        assert!(separating_pairs(&g2).unwrap().is_empty());
        // rollback restores the input exactly
        let (g0, rs0) = rollback(&g2, &rs2, &trace).unwrap();
        assert_eq!(g0, g);
        assert_eq!(rs0, rs);
    }

    #[test]
    fn lemma1_augments_grid_2x3() {
        let g = Graph::new(6, &[(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5)]).unwrap();
        let rs = planar_embed(&g).unwrap();
        let (g2, rs2, _) = lemma1_augment(&g, &rs).unwrap();
        assert!(is_k_connected(&g2, 3).unwrap());
        assert!(separating_triangles(&g2).is_empty());
        assert!(validate_embedding(&g2, &rs2).is_ok());
    }

    #[test]
    fn lemma1_rejects_non_blocks() {
        let path = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let rs = planar_embed(&path).unwrap();
        assert!(matches!(
            lemma1_augment(&path, &rs),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn stellating_c4_gives_the_octahedron() {
        let g = c4();
        let rs = planar_embed(&g).unwrap();
        let (g2, rs2, trace) = stellate(&g, &rs).unwrap();
        assert_eq!(g2.vertex_count(), 6);
        assert_eq!(g2.edge_count(), 12);
        let fs = faces(&g2, &rs2).unwrap();
        assert_eq!(fs.len(), 8);
        assert!(fs.faces().iter().all(|f| f.len() == 3));
        let (g0, rs0) = rollback(&g2, &rs2, &trace).unwrap();
        assert_eq!(g0, g);
        assert_eq!(rs0, rs);
    }

    #[test]
    fn stellating_k4_is_identity() {
        let g = k4();
        let rs = planar_embed(&g).unwrap();
        let (g2, rs2, trace) = stellate(&g, &rs).unwrap();
        assert_eq!(g2, g);
        assert_eq!(rs2, rs);
        assert!(trace.is_empty());
    }

    #[test]
    fn stellating_wheel_outer_face() {
        let w4 = Graph::new(
            5,
            &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (4, 2), (4, 3)],
        )
        .unwrap();
        let rs = planar_embed(&w4).unwrap();
        let (g2, rs2, _) = stellate(&w4, &rs).unwrap();
        assert_eq!(g2.vertex_count(), 6);
        assert_eq!(g2.edge_count(), 12);
        let fs = faces(&g2, &rs2).unwrap();
        assert_eq!(fs.len(), 8);
    }

    #[test]
    fn chained_trace_rolls_back_in_one_step() {
        let g = c4();
        let rs = planar_embed(&g).unwrap();
        let (g1, rs1, t1) = lemma1_augment(&g, &rs).unwrap();
        let (g2, rs2, t2) = stellate(&g1, &rs1).unwrap();
        let t = t1.chain(&t2).unwrap();
        let (g0, rs0) = rollback(&g2, &rs2, &t).unwrap();
        assert_eq!(g0, g);
        assert_eq!(rs0, rs);
    }
}
