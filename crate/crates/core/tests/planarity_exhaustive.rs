//! Exhaustive cross-check of the planarity tester on every graph with six
//! vertices, against an independent minor-based decision. On six vertices a
//! K5 minor needs four singleton branch sets plus one singleton or adjacent
//! pair, and a K3,3 minor needs six singletons, so both are enumerable
//! directly; by Wagner's theorem a graph is planar exactly when it has
//! neither.

use bookem::planar::planar_embed;
use bookem::rotation::validate_embedding;
use bookem::Graph;

const N: usize = 6;

fn pairs() -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in 0..N {
        for v in (u + 1)..N {
            out.push((u, v));
        }
    }
    out
}

fn has_k5_minor(g: &Graph) -> bool {
    let verts: Vec<usize> = (0..N).collect();
    // five singleton branch sets
    for skip in 0..=N {
        let chosen: Vec<usize> = verts.iter().copied().filter(|&v| v != skip).take(5).collect();
        if chosen.len() == 5
            && chosen
                .iter()
                .enumerate()
                .all(|(i, &u)| chosen[i + 1..].iter().all(|&v| g.has_edge(u, v)))
        {
            return true;
        }
    }
    // one adjacent-pair branch set plus four singletons
    for (a, b) in pairs() {
        if !g.has_edge(a, b) {
            continue;
        }
        let rest: Vec<usize> = (0..N).filter(|&v| v != a && v != b).collect();
        if rest.len() != 4 {
            continue;
        }
        let pair_hits = |v: usize| g.has_edge(a, v) || g.has_edge(b, v);
        let singletons_ok = rest
            .iter()
            .enumerate()
            .all(|(i, &u)| rest[i + 1..].iter().all(|&v| g.has_edge(u, v)));
        if singletons_ok && rest.iter().all(|&v| pair_hits(v)) {
            return true;
        }
    }
    false
}

fn has_k33_minor(g: &Graph) -> bool {
    // six branch vertices on six vertices: a spanning K3,3 subgraph
    for mask in 0..(1u32 << N) {
        if mask.count_ones() != 3 {
            continue;
        }
        let left: Vec<usize> = (0..N).filter(|&v| mask & (1 << v) != 0).collect();
        let right: Vec<usize> = (0..N).filter(|&v| mask & (1 << v) == 0).collect();
        if left.iter().all(|&u| right.iter().all(|&v| g.has_edge(u, v))) {
            return true;
        }
    }
    false
}

#[test]
fn planarity_matches_the_minor_criterion_on_all_six_vertex_graphs() {
    let all_pairs = pairs();
    let mut planar_count = 0;
    for mask in 0..(1u32 << all_pairs.len()) {
        let edges: Vec<(usize, usize)> = all_pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::new(N, &edges).unwrap();
        let minor_free = !has_k5_minor(&g) && !has_k33_minor(&g);
        match planar_embed(&g) {
            Some(rs) => {
                assert!(
                    minor_free,
                    "embedded a graph with a forbidden minor: {edges:?}"
                );
                validate_embedding(&g, &rs).expect("accepted embeddings validate");
                planar_count += 1;
            }
            None => {
                assert!(
                    !minor_free,
                    "rejected a planar graph: {edges:?}"
                );
            }
        }
    }
    // sanity: most six-vertex graphs are planar, but not all
    assert!(planar_count > 30_000 && planar_count < (1 << 15), "{planar_count}");
}
