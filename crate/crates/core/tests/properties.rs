//! Property tests for the structural invariants.

use proptest::prelude::*;

use bookem::augment::AugmentationTrace;
use bookem::generators::{contract_subdivision, subdivide};
use bookem::hamiltonian::{spine_order, CyclicOrder, HamiltonianCycle};
use bookem::layout::{assign_pages, conflict_graph, verify_layout};
use bookem::planar::planar_embed;
use bookem::rotation::validate_embedding;
use bookem::Graph;

/// Sparse random graph on up to `max_n` vertices.
fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))).collect();
        proptest::sample::subsequence(pairs.clone(), 0..=pairs.len())
            .prop_map(move |edges| Graph::new(n, &edges).unwrap())
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    /// Every accepted rotation system's face walks cover each directed edge
    /// once, so their lengths sum to twice the edge count.
    #[test]
    fn face_walks_cover_each_directed_edge_once(g in graph_strategy(9)) {
        if let Some(rs) = planar_embed(&g) {
            let fs = validate_embedding(&g, &rs).expect("constructed embeddings validate");
            let total: usize = fs.faces().iter().map(|f| f.len()).sum();
            prop_assert_eq!(total, 2 * g.edge_count());
        }
    }

    /// Rebuilding a graph from its canonical edge list is the identity.
    #[test]
    fn edge_list_round_trip(g in graph_strategy(10)) {
        let rebuilt = Graph::new(g.vertex_count(), &g.edge_vec()).unwrap();
        prop_assert_eq!(rebuilt, g);
    }

    /// A two-page assignment succeeds exactly when the conflict graph is
    /// bipartite, and every success passes the verifier.
    #[test]
    fn two_page_assignment_is_bipartition((g, seq) in graph_strategy(8)
        .prop_flat_map(|g| {
            let n = g.vertex_count();
            (Just(g), permutation(n))
        }))
    {
        let o = CyclicOrder::new(&seq);
        let cg = conflict_graph(&g, &o);
        let odd_cycle_free = is_bipartite_reference(&cg);
        match assign_pages(&g, &o, 2) {
            Some(layout) => {
                prop_assert!(odd_cycle_free);
                prop_assert!(layout.page_count <= 2);
                prop_assert!(verify_layout(&g, &layout).unwrap().is_empty());
            }
            None => prop_assert!(!odd_cycle_free),
        }
    }

    /// Deleting trace vertices from a cycle preserves the relative cyclic
    /// order of the survivors.
    #[test]
    fn spine_order_preserves_relative_order(
        (total, seq) in (4usize..12).prop_flat_map(|total| (Just(total), permutation(total))),
        kept in 3usize..11,
    ) {
        prop_assume!(kept < total);
        // host graph: the cycle itself
        let edges: Vec<(usize, usize)> =
            (0..total).map(|i| (seq[i], seq[(i + 1) % total])).collect();
        let host = Graph::new(total, &edges).unwrap();
        let c = HamiltonianCycle::new(&host, &seq).unwrap();
        let mut trace = AugmentationTrace::empty(kept);
        for id in kept..total {
            trace.added_vertices.push(bookem::augment::AddedVertex {
                id,
                provenance: bookem::augment::Provenance::Wedge { at: 0, prev: 0, next: 0 },
            });
        }
        let o = spine_order(&c, &trace).unwrap();
        let survivors: Vec<usize> = seq.iter().copied().filter(|&v| v < kept).collect();
        prop_assert_eq!(o, CyclicOrder::new(&survivors));
    }

    /// Subdividing and then contracting is the identity on graphs.
    #[test]
    fn subdivision_contracts_back(g in graph_strategy(8), per_edge in 0usize..3) {
        let (sub, map) = subdivide(&g, per_edge);
        prop_assert_eq!(contract_subdivision(&sub, g.vertex_count(), &map), g);
    }

    /// Canonicalization is invariant under rotation and reflection.
    #[test]
    fn cyclic_order_canonical_form(seq in (3usize..10).prop_flat_map(permutation), shift in 0usize..10) {
        let k = seq.len();
        let rotated: Vec<usize> = (0..k).map(|i| seq[(i + shift) % k]).collect();
        let mut reflected = seq.clone();
        reflected.reverse();
        let canon = CyclicOrder::new(&seq);
        prop_assert_eq!(&CyclicOrder::new(&rotated), &canon);
        prop_assert_eq!(&CyclicOrder::new(&reflected), &canon);
        let order = canon.as_slice();
        prop_assert_eq!(order[0], *seq.iter().min().unwrap());
        if order.len() >= 3 {
            prop_assert!(order[1] < order[order.len() - 1]);
        }
    }
}

/// Reference bipartiteness by exhaustive 2-coloring over components, kept
/// free of the library's BFS bipartition.
fn is_bipartite_reference(g: &Graph) -> bool {
    let n = g.vertex_count();
    let mut color = vec![None::<bool>; n];
    for start in 0..n {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(false);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &w in g.neighbors(v) {
                match color[w] {
                    None => {
                        color[w] = Some(!color[v].unwrap());
                        stack.push(w);
                    }
                    Some(c) => {
                        if c == color[v].unwrap() {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}
