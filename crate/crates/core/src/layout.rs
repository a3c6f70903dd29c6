//! Book layouts: chord conflicts, page assignment, verification, the exact
//! pagenumber oracle, and the two-page embedding pipelines.

use std::collections::BTreeMap;

use crate::augment::{lemma1_augment, separating_triangles, stellate};
use crate::connectivity::{blocks_and_cutpoints, merge_layouts, BlockData};
use crate::error::{Error, Result};
use crate::generators::subdivide;
use crate::graph::Graph;
use crate::hamiltonian::{
    hamiltonian_cycle_with_budget, spine_order, CyclicOrder, DEFAULT_SEARCH_BUDGET,
};
use crate::planar::planar_embed;

/// A book embedding: a cyclic spine order plus a page for every edge.
///
/// Valid iff no two edges on the same page interleave in the spine order;
/// `verify_layout` is the arbiter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BookLayout {
    pub spine: CyclicOrder,
    /// canonical `(min, max)` edge -> page index >= 1
    pub pages: BTreeMap<(usize, usize), usize>,
    pub page_count: usize,
}

impl BookLayout {
    pub fn empty() -> Self {
        Self { spine: CyclicOrder::new(&[]), pages: BTreeMap::new(), page_count: 0 }
    }
}

/// Whether chords `(a, b)` and `(c, d)` interleave around a cycle given the
/// position of every endpoint: exactly one of `c`, `d` falls strictly inside
/// the arc from `a` to `b`. All four endpoints must be distinct.
fn chords_interleave(pa: usize, pb: usize, pc: usize, pd: usize) -> bool {
    let (lo, hi) = (pa.min(pb), pa.max(pb));
    let inside = |x: usize| lo < x && x < hi;
    inside(pc) != inside(pd)
}

/// The conflict graph of `g` under the cyclic order `o`: one vertex per edge
/// of `g` (in canonical edge order), adjacent when the chords interleave.
///
/// Panics if `o` does not order exactly the vertices of `g`.
pub fn conflict_graph(g: &Graph, o: &CyclicOrder) -> Graph {
    let pos = order_positions(g, o);
    let edges = g.edge_vec();
    let mut conflicts = Vec::new();
    for i in 0..edges.len() {
        let (a, b) = edges[i];
        for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
            if a == c || a == d || b == c || b == d {
                continue;
            }
            if chords_interleave(pos[a], pos[b], pos[c], pos[d]) {
                conflicts.push((i, j));
            }
        }
    }
    Graph::new(edges.len(), &conflicts).expect("conflict graph is simple")
}

fn order_positions(g: &Graph, o: &CyclicOrder) -> Vec<usize> {
    let n = g.vertex_count();
    assert_eq!(o.len(), n, "order must cover exactly the graph's vertices");
    let pos = o.positions(n);
    assert!(pos.iter().all(Option::is_some), "order must cover exactly the graph's vertices");
    pos.into_iter().map(Option::unwrap).collect()
}

/// Proper `k`-page assignment of the edges of `g` under the spine order `o`,
/// or `None` when `k` pages cannot avoid same-page crossings. Two pages are
/// decided by a bipartition test of the conflict graph.
pub fn assign_pages(g: &Graph, o: &CyclicOrder, k: usize) -> Option<BookLayout> {
    assert!(k >= 1, "page budget must be at least 1");
    let cg = conflict_graph(g, o);
    let m = cg.vertex_count();
    let colors: Vec<usize> = if m == 0 {
        Vec::new()
    } else if k == 1 {
        if cg.edge_count() > 0 {
            return None;
        }
        vec![1; m]
    } else if k == 2 {
        bipartition(&cg)?
    } else {
        color_with(&cg, k)?
    };
    let edges = g.edge_vec();
    let pages: BTreeMap<(usize, usize), usize> =
        edges.iter().copied().zip(colors.iter().copied()).collect();
    let page_count = colors.iter().copied().max().unwrap_or(0);
    Some(BookLayout { spine: o.clone(), pages, page_count })
}

/// 2-coloring by BFS, component roots on page 1.
fn bipartition(cg: &Graph) -> Option<Vec<usize>> {
    let n = cg.vertex_count();
    let mut color = vec![0usize; n];
    for start in 0..n {
        if color[start] != 0 {
            continue;
        }
        color[start] = 1;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &w in cg.neighbors(v) {
                if color[w] == 0 {
                    color[w] = 3 - color[v];
                    queue.push_back(w);
                } else if color[w] == color[v] {
                    return None;
                }
            }
        }
    }
    Some(color)
}

/// Exact backtracking k-coloring; colors form a prefix 1..=c of the palette.
fn color_with(cg: &Graph, k: usize) -> Option<Vec<usize>> {
    let n = cg.vertex_count();
    // high-degree vertices first
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(cg.degree(v)), v));
    let mut color = vec![0usize; n];
    fn go(cg: &Graph, order: &[usize], at: usize, used: usize, k: usize, color: &mut [usize]) -> bool {
        if at == order.len() {
            return true;
        }
        let v = order[at];
        let limit = (used + 1).min(k);
        for c in 1..=limit {
            if cg.neighbors(v).iter().any(|&w| color[w] == c) {
                continue;
            }
            color[v] = c;
            if go(cg, order, at + 1, used.max(c), k, color) {
                return true;
            }
            color[v] = 0;
        }
        false
    }
    go(cg, &order, 0, 0, k, &mut color).then_some(color)
}

/// A pair of same-page edges that interleave in the spine order.
pub type Violation = ((usize, usize), (usize, usize));

/// Lists every same-page interleaving pair of `l` on `g`; empty means the
/// layout is a valid book embedding.
pub fn verify_layout(g: &Graph, l: &BookLayout) -> Result<Vec<Violation>> {
    let vertices: Vec<usize> = (0..g.vertex_count()).collect();
    verify_layout_on(&vertices, &g.edge_vec(), l)
}

/// Verification against explicit vertex and edge lists, so block-local
/// layouts (whose vertex ids are not dense) can be checked too.
pub(crate) fn verify_layout_on(
    vertices: &[usize],
    edges: &[(usize, usize)],
    l: &BookLayout,
) -> Result<Vec<Violation>> {
    let mut spine_sorted: Vec<usize> = l.spine.as_slice().to_vec();
    spine_sorted.sort_unstable();
    if spine_sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::CoverageError("spine repeats a vertex".into()));
    }
    if spine_sorted != vertices {
        return Err(Error::CoverageError(
            "spine does not cover exactly the graph's vertices".into(),
        ));
    }
    let keys: Vec<(usize, usize)> = l.pages.keys().copied().collect();
    if keys != edges {
        return Err(Error::CoverageError(
            "page map does not cover exactly the graph's edges".into(),
        ));
    }
    if l.pages.values().any(|&p| p < 1) {
        return Err(Error::CoverageError("page indices start at 1".into()));
    }
    let distinct = {
        let mut v: Vec<usize> = l.pages.values().copied().collect();
        v.sort_unstable();
        v.dedup();
        v.len()
    };
    if distinct != l.page_count {
        return Err(Error::CoverageError(format!(
            "page_count is {} but {} distinct pages are used",
            l.page_count, distinct
        )));
    }

    let mut pos: BTreeMap<usize, usize> = BTreeMap::new();
    for (i, &v) in l.spine.as_slice().iter().enumerate() {
        pos.insert(v, i);
    }
    let mut violations = Vec::new();
    for i in 0..edges.len() {
        let (a, b) = edges[i];
        for j in (i + 1)..edges.len() {
            let (c, d) = edges[j];
            if l.pages[&edges[i]] != l.pages[&edges[j]] {
                continue;
            }
            if a == c || a == d || b == c || b == d {
                continue;
            }
            if chords_interleave(pos[&a], pos[&b], pos[&c], pos[&d]) {
                violations.push((edges[i], edges[j]));
            }
        }
    }
    Ok(violations)
}

pub const ORACLE_DEFAULT_CAP: usize = 9;

/// Exact book thickness by minimizing the conflict graph's chromatic number
/// over all `(n-1)!/2` canonical cyclic orders. Desk-scale only: errs above
/// `n_cap` vertices.
pub fn pagenumber_oracle(g: &Graph, n_cap: usize) -> Result<usize> {
    let n = g.vertex_count();
    if n > n_cap {
        return Err(Error::TooLarge { n, cap: n_cap });
    }
    if g.edge_count() == 0 {
        return Ok(0);
    }
    if n <= 3 {
        return Ok(1);
    }

    let mut best = usize::MAX;
    let mut rest: Vec<usize> = (1..n).collect();
    let mut seq = Vec::with_capacity(n);
    loop {
        // reflection: keep orders whose second element is below the last
        if rest[0] < rest[n - 2] {
            seq.clear();
            seq.push(0);
            seq.extend_from_slice(&rest);
            let order = CyclicOrder::new(&seq);
            let cg = conflict_graph(g, &order);
            if cg.edge_count() == 0 {
                return Ok(1);
            }
            let lb = clique_lower_bound(&cg).max(2);
            if lb < best {
                for k in lb..best {
                    if color_with(&cg, k).is_some() {
                        best = k;
                        break;
                    }
                }
            }
        }
        if !next_permutation(&mut rest) {
            break;
        }
    }
    Ok(best)
}

/// Size of a greedily grown clique: a valid lower bound for the chromatic
/// number.
fn clique_lower_bound(g: &Graph) -> usize {
    let n = g.vertex_count();
    if n == 0 {
        return 0;
    }
    let mut verts: Vec<usize> = (0..n).collect();
    verts.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut clique: Vec<usize> = Vec::new();
    for &v in &verts {
        if clique.iter().all(|&u| g.has_edge(u, v)) {
            clique.push(v);
        }
    }
    clique.len()
}

fn next_permutation(seq: &mut [usize]) -> bool {
    let n = seq.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && seq[i - 1] >= seq[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while seq[j] <= seq[i - 1] {
        j -= 1;
    }
    seq.swap(i - 1, j);
    seq[i..].reverse();
    true
}

/// Counters reported by the two-page pipeline.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PipelineStats {
    pub blocks: usize,
    pub augmentation_vertices: usize,
    pub search_nodes: u64,
}

/// Two-page book embedding of a planar graph whose blocks have no separating
/// triangles.
///
/// Per block: embed, augment to 3-connectivity without separating triangles,
/// stellate to a triangulation, find a Hamiltonian cycle, restrict its order
/// to the block's own vertices, and 2-color the resulting chord conflicts.
/// Block layouts are then spine-merged across the block-cutpoint tree.
pub fn two_page_embed(g: &Graph) -> Result<BookLayout> {
    two_page_embed_with_stats(g).map(|(l, _)| l)
}

pub fn two_page_embed_with_stats(g: &Graph) -> Result<(BookLayout, PipelineStats)> {
    let mut stats = PipelineStats::default();
    if g.vertex_count() == 0 {
        return Ok((BookLayout::empty(), stats));
    }
    if planar_embed(g).is_none() {
        return Err(Error::NotPlanar);
    }
    let tree = blocks_and_cutpoints(g);
    let mut per_block = BTreeMap::new();
    for (i, block) in tree.blocks.iter().enumerate() {
        per_block.insert(i, embed_block(g, block, &mut stats)?);
    }
    let layout = merge_layouts(&tree, &per_block)?;
    Ok((layout, stats))
}

fn embed_block(g: &Graph, block: &BlockData, stats: &mut PipelineStats) -> Result<BookLayout> {
    stats.blocks += 1;
    if block.vertices.len() == 1 {
        return Ok(BookLayout {
            spine: CyclicOrder::new(&block.vertices),
            pages: BTreeMap::new(),
            page_count: 0,
        });
    }
    if block.vertices.len() == 2 {
        let mut pages = BTreeMap::new();
        pages.insert((block.vertices[0], block.vertices[1]), 1);
        return Ok(BookLayout { spine: CyclicOrder::new(&block.vertices), pages, page_count: 1 });
    }

    let (h, back) = g.induced_dense(&block.vertices);
    if let Some(&(a, b, c)) = separating_triangles(&h).first() {
        return Err(Error::NotNicelyPlanar((back[a], back[b], back[c])));
    }
    // outerplanar blocks take a single page: the spine is the boundary
    // order around a fresh apex
    if let Some(order) = crate::planar::outerplanar_order(&h) {
        if let Some(local) = assign_pages(&h, &order, 1) {
            return Ok(relabel_block_layout(&local, &back));
        }
    }
    let rs = planar_embed(&h).ok_or_else(|| {
        Error::InternalGuaranteeViolated("block of a planar graph failed to embed".into())
    })?;
    let (g1, rs1, trace1) = lemma1_augment(&h, &rs)?;
    let (g2, _rs2, trace2) = stellate(&g1, &rs1)?;
    let trace = trace1.chain(&trace2)?;
    stats.augmentation_vertices += trace.added_vertices.len();
    let outcome = hamiltonian_cycle_with_budget(&g2, DEFAULT_SEARCH_BUDGET)?;
    stats.search_nodes += outcome.nodes_explored;
    let cycle = outcome.cycle.ok_or_else(|| {
        Error::InternalGuaranteeViolated(
            "stellated augmentation has no Hamiltonian cycle".into(),
        )
    })?;
    let order = spine_order(&cycle, &trace)?;
    let local = assign_pages(&h, &order, 2).ok_or_else(|| {
        Error::InternalGuaranteeViolated("restricted spine order needs more than two pages".into())
    })?;
    Ok(relabel_block_layout(&local, &back))
}

/// Maps a block-local layout back to the host graph's vertex ids; `back` is
/// strictly increasing, so relative cyclic order is preserved.
fn relabel_block_layout(local: &BookLayout, back: &[usize]) -> BookLayout {
    let spine: Vec<usize> = local.spine.as_slice().iter().map(|&v| back[v]).collect();
    let pages: BTreeMap<(usize, usize), usize> = local
        .pages
        .iter()
        .map(|(&(u, v), &p)| {
            let (a, b) = (back[u], back[v]);
            ((a.min(b), a.max(b)), p)
        })
        .collect();
    BookLayout { spine: CyclicOrder::new(&spine), pages, page_count: local.page_count }
}

/// A two-page embedding of a once-per-edge subdivision of a planar graph,
/// with the count of subdivision vertices whose two path edges change page.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomeomorphicLayout {
    pub subdivided: Graph,
    /// original canonical edge -> its interior path vertices, in order from
    /// the smaller endpoint
    pub subdivision_map: BTreeMap<(usize, usize), Vec<usize>>,
    pub layout: BookLayout,
    pub spine_crossings: usize,
}

/// Subdivides every edge of a planar graph exactly once (making all cycles
/// even) and embeds the result in two pages.
pub fn homeomorphic_two_page(g: &Graph) -> Result<HomeomorphicLayout> {
    if planar_embed(g).is_none() {
        return Err(Error::NotPlanar);
    }
    let (subdivided, map) = subdivide(g, 1);
    let layout = match two_page_embed(&subdivided) {
        Ok(l) => l,
        Err(Error::NotNicelyPlanar(t)) => {
            return Err(Error::InternalGuaranteeViolated(format!(
                "subdivision kept a separating triangle {t:?}"
            )))
        }
        Err(e) => return Err(e),
    };
    let mut crossings = 0;
    for (&(u, v), path) in &map {
        let mut walk = Vec::with_capacity(path.len() + 2);
        walk.push(u);
        walk.extend_from_slice(path);
        walk.push(v);
        for w in walk.windows(3) {
            let e1 = (w[0].min(w[1]), w[0].max(w[1]));
            let e2 = (w[1].min(w[2]), w[1].max(w[2]));
            if layout.pages[&e1] != layout.pages[&e2] {
                crossings += 1;
            }
        }
    }
    Ok(HomeomorphicLayout { subdivided, subdivision_map: map, layout, spine_crossings: crossings })
}
