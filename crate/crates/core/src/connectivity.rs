//! Cutpoints, blocks, the block-cutpoint tree, small-k connectivity tests,
//! and spine merging of per-block book layouts.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::layout::{verify_layout_on, BookLayout};

/// One block: a maximal nonseparable subgraph, carried as explicit vertex and
/// edge lists in the host graph's vertex ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockData {
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

/// Blocks and cutpoints of a graph together with their incidence.
///
/// The intersection structure of blocks and cutpoint singletons is a forest;
/// it is a tree exactly when the graph is connected. Every edge of the graph
/// lies in exactly one block, and the cutpoints are exactly the vertices
/// contained in two or more blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockCutTree {
    pub blocks: Vec<BlockData>,
    pub cutpoints: Vec<usize>,
    /// For each cutpoint, the ascending indices of the blocks containing it.
    pub incidence: BTreeMap<usize, Vec<usize>>,
}

impl BlockCutTree {
    pub fn block_indices_at(&self, v: usize) -> &[usize] {
        self.incidence.get(&v).map(Vec::as_slice).unwrap_or(&[])
    }
}

/// Computes blocks and cutpoints by a single depth-first search with
/// lowpoint values. Isolated vertices form single-vertex blocks. Blocks are
/// reported sorted by their vertex lists, so indices are deterministic.
pub fn blocks_and_cutpoints(g: &Graph) -> BlockCutTree {
    let n = g.vertex_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut parent = vec![usize::MAX; n];
    let mut timer = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut raw_blocks: Vec<Vec<(usize, usize)>> = Vec::new();

    // Iterative DFS; child_idx tracks progress through each adjacency list.
    let mut child_idx = vec![0usize; n];
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        if g.degree(root) == 0 {
            disc[root] = timer;
            timer += 1;
            raw_blocks.push(Vec::new()); // placeholder, resolved below
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        let mut stack = vec![root];
        while let Some(&v) = stack.last() {
            if child_idx[v] < g.degree(v) {
                let w = g.neighbors(v)[child_idx[v]];
                child_idx[v] += 1;
                if disc[w] == usize::MAX {
                    parent[w] = v;
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    edge_stack.push((v, w));
                    stack.push(w);
                } else if w != parent[v] && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&p) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        // edges down to (p, v) form one biconnected component
                        let mut comp = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            comp.push(e);
                            if e == (p, v) {
                                break;
                            }
                        }
                        raw_blocks.push(comp);
                    }
                }
            }
        }
    }

    let mut blocks: Vec<BlockData> = Vec::new();
    let mut singles = 0;
    for comp in raw_blocks {
        if comp.is_empty() {
            singles += 1;
            continue;
        }
        let mut verts: Vec<usize> = comp.iter().flat_map(|&(u, v)| [u, v]).collect();
        verts.sort_unstable();
        verts.dedup();
        let mut edges: Vec<(usize, usize)> =
            comp.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        edges.sort_unstable();
        blocks.push(BlockData { vertices: verts, edges });
    }
    if singles > 0 {
        for v in 0..n {
            if g.degree(v) == 0 {
                blocks.push(BlockData { vertices: vec![v], edges: Vec::new() });
            }
        }
    }
    blocks.sort_by(|a, b| a.vertices.cmp(&b.vertices));

    let mut membership: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, b) in blocks.iter().enumerate() {
        for &v in &b.vertices {
            membership.entry(v).or_default().push(i);
        }
    }
    let mut cutpoints = Vec::new();
    let mut incidence = BTreeMap::new();
    for (v, ids) in membership {
        if ids.len() >= 2 {
            cutpoints.push(v);
            incidence.insert(v, ids);
        }
    }
    BlockCutTree { blocks, cutpoints, incidence }
}

/// True iff no set of fewer than `k` vertices disconnects `g`, by exhaustive
/// deletion. Requires more than `k` vertices.
pub fn is_k_connected(g: &Graph, k: usize) -> Result<bool> {
    let n = g.vertex_count();
    if n <= k {
        return Err(Error::TooSmall { n, k });
    }
    if !g.is_connected() {
        return Ok(false);
    }
    let mut excluded = vec![false; n];
    // subsets of size 1..k; sizes beyond 2 never arise for k <= 3
    let mut subset: Vec<usize> = Vec::new();
    fn rec(g: &Graph, start: usize, left: usize, subset: &mut Vec<usize>, excluded: &mut [bool]) -> bool {
        if left == 0 {
            return g.component_count_excluding(excluded) <= 1;
        }
        for v in start..g.vertex_count() {
            excluded[v] = true;
            subset.push(v);
            let ok = rec(g, v + 1, left - 1, subset, excluded);
            subset.pop();
            excluded[v] = false;
            if !ok {
                return false;
            }
        }
        true
    }
    for size in 1..k {
        if !rec(g, 0, size, &mut subset, &mut excluded) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All pairs `{u, v}` whose deletion disconnects the 2-connected graph `g`,
/// in ascending canonical order.
pub fn separating_pairs(g: &Graph) -> Result<Vec<(usize, usize)>> {
    if !is_k_connected(g, 2).map_err(|_| Error::NotTwoConnected)? {
        return Err(Error::NotTwoConnected);
    }
    let n = g.vertex_count();
    let mut excluded = vec![false; n];
    let mut pairs = Vec::new();
    for u in 0..n {
        excluded[u] = true;
        for v in (u + 1)..n {
            excluded[v] = true;
            if g.component_count_excluding(&excluded) >= 2 {
                pairs.push((u, v));
            }
            excluded[v] = false;
        }
        excluded[u] = false;
    }
    Ok(pairs)
}

/// Merges verified per-block layouts into one layout of the whole graph.
///
/// Blocks are spliced along the spine by a depth-first walk of the
/// block-cutpoint tree: a child block's spine is rotated so its connecting
/// cutpoint comes first and the remainder is inserted right after that
/// cutpoint's position in the order built so far. Components are laid out
/// consecutively. Pages are reused, never summed, so the page count of the
/// result is the maximum over the blocks.
pub fn merge_layouts(
    t: &BlockCutTree,
    per_block: &BTreeMap<usize, BookLayout>,
) -> Result<BookLayout> {
    use crate::hamiltonian::CyclicOrder;

    for (i, block) in t.blocks.iter().enumerate() {
        let layout = per_block
            .get(&i)
            .ok_or_else(|| Error::PreconditionViolated(format!("no layout for block {i}")))?;
        let ok = verify_layout_on(&block.vertices, &block.edges, layout)
            .map(|violations| violations.is_empty())
            .unwrap_or(false);
        if !ok {
            return Err(Error::InvalidBlockLayout(i));
        }
    }

    // group blocks by connected component, identified by smallest vertex
    let mut comp_of_block: BTreeMap<usize, usize> = BTreeMap::new(); // repr -> first block
    let mut comp_blocks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    {
        // union-find over vertices touched by blocks
        let mut parent: BTreeMap<usize, usize> = BTreeMap::new();
        fn find(parent: &mut BTreeMap<usize, usize>, v: usize) -> usize {
            let p = *parent.get(&v).unwrap_or(&v);
            if p == v {
                v
            } else {
                let r = find(parent, p);
                parent.insert(v, r);
                r
            }
        }
        for b in &t.blocks {
            let r0 = find(&mut parent, b.vertices[0]);
            for &v in &b.vertices[1..] {
                let rv = find(&mut parent, v);
                if rv != r0 {
                    parent.insert(rv, r0);
                }
            }
        }
        for (i, b) in t.blocks.iter().enumerate() {
            let r = find(&mut parent, b.vertices[0]);
            comp_blocks.entry(r).or_default().push(i);
            comp_of_block.insert(i, r);
        }
    }

    let mut spine: Vec<usize> = Vec::new();
    let mut pages: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut page_count = 0;

    for (_, block_ids) in comp_blocks {
        // root block: contains the component's smallest vertex, smallest index wins
        let smallest = block_ids.iter().map(|&i| t.blocks[i].vertices[0]).min().unwrap();
        let root = *block_ids
            .iter()
            .find(|&&i| t.blocks[i].vertices.contains(&smallest))
            .unwrap();

        let mut visited: BTreeMap<usize, bool> =
            block_ids.iter().map(|&i| (i, false)).collect();
        let mut component_spine: Vec<usize> = Vec::new();

        // splice `block`'s spine into component_spine; `via` is the cutpoint
        // shared with the part already placed (None for the root)
        let mut stack: Vec<(usize, Option<usize>)> = vec![(root, None)];
        while let Some((bi, via)) = stack.pop() {
            if visited[&bi] {
                continue;
            }
            visited.insert(bi, true);
            let layout = &per_block[&bi];
            let order = layout.spine.as_slice().to_vec();
            match via {
                None => component_spine.extend_from_slice(&order),
                Some(c) => {
                    let at = order.iter().position(|&x| x == c).expect("cutpoint on spine");
                    let mut rest: Vec<usize> = Vec::with_capacity(order.len() - 1);
                    rest.extend_from_slice(&order[at + 1..]);
                    rest.extend_from_slice(&order[..at]);
                    let pos = component_spine
                        .iter()
                        .position(|&x| x == c)
                        .expect("cutpoint already placed");
                    component_spine.splice(pos + 1..pos + 1, rest);
                }
            }
            for (&e, &p) in &layout.pages {
                pages.insert(e, p);
            }
            page_count = page_count.max(layout.page_count);

            // children: other blocks at this block's cutpoints, ascending;
            // pushed in reverse so the stack pops them in ascending order
            let mut children: Vec<(usize, usize)> = Vec::new();
            for &v in &t.blocks[bi].vertices {
                for &other in t.block_indices_at(v) {
                    if !visited[&other] {
                        children.push((other, v));
                    }
                }
            }
            children.sort_unstable();
            children.dedup();
            for &(child, cut) in children.iter().rev() {
                stack.push((child, Some(cut)));
            }
        }
        spine.extend(component_spine);
    }

    Ok(BookLayout { spine: CyclicOrder::new(&spine), pages, page_count })
}
