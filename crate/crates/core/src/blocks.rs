//! Biconnected components (blocks), cut vertices and bridges.

use crate::graph::SignedGraph;

/// Block structure of a graph. Isolated vertices form no block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Vertex set of each block, sorted.
    pub blocks: Vec<Vec<usize>>,
    /// Edges `(u, v)` with `u < v` of each block, sorted.
    pub block_edges: Vec<Vec<(usize, usize)>>,
    pub cut_vertices: Vec<usize>,
    pub bridges: Vec<(usize, usize)>,
    /// For each block, the cut vertices it contains (block-cut tree adjacency).
    pub block_cuts: Vec<Vec<usize>>,
}

impl BlockDecomposition {
    pub fn is_bridge_block(&self, b: usize) -> bool {
        self.block_edges[b].len() == 1
    }
}

pub fn block_decompose(g: &SignedGraph) -> BlockDecomposition {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let mut time = 0usize;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut block_edges: Vec<Vec<(usize, usize)>> = Vec::new();

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        // (vertex, parent, next neighbor index)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(&(u, parent, idx)) = stack.last() {
            if idx < g.degree(u) {
                let v = g.neighbors(u)[idx].0;
                stack.last_mut().expect("nonempty").2 += 1;
                if v == parent {
                    continue;
                }
                if disc[v] == usize::MAX {
                    edge_stack.push((u, v));
                    disc[v] = time;
                    low[v] = time;
                    time += 1;
                    if u == root {
                        root_children += 1;
                    }
                    stack.push((v, u, 0));
                } else if disc[v] < disc[u] {
                    edge_stack.push((u, v));
                    low[u] = low[u].min(disc[v]);
                }
            } else {
                stack.pop();
                if parent == usize::MAX {
                    continue;
                }
                low[parent] = low[parent].min(low[u]);
                if low[u] >= disc[parent] {
                    if parent != root {
                        is_cut[parent] = true;
                    }
                    let mut edges = Vec::new();
                    while let Some(e) = edge_stack.pop() {
                        edges.push((e.0.min(e.1), e.0.max(e.1)));
                        if e == (parent, u) {
                            break;
                        }
                    }
                    edges.sort_unstable();
                    block_edges.push(edges);
                }
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }

    // deterministic order: by smallest edge
    block_edges.sort();
    let blocks: Vec<Vec<usize>> = block_edges
        .iter()
        .map(|edges| {
            let mut vs: Vec<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
            vs.sort_unstable();
            vs.dedup();
            vs
        })
        .collect();
    let cut_vertices: Vec<usize> = (0..n).filter(|&v| is_cut[v]).collect();
    let bridges = block_edges.iter().filter(|e| e.len() == 1).map(|e| e[0]).collect();
    let block_cuts = blocks
        .iter()
        .map(|b| b.iter().copied().filter(|&v| is_cut[v]).collect())
        .collect();
    BlockDecomposition {
        blocks,
        block_edges,
        cut_vertices,
        bridges,
        block_cuts,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use crate::graph::Sign::Plus as P;

    #[test]
    fn k4_bullet_is_one_block() {
        let d = block_decompose(&generate::k4_bullet());
        assert_eq!(d.blocks, vec![vec![0, 1, 2, 3, 4]]);
        assert!(d.cut_vertices.is_empty());
        assert!(d.bridges.is_empty());
    }

    #[test]
    fn two_triangles_and_a_bridge() {
        let g = SignedGraph::from_edges(
            6,
            &[
                (0, 1, P),
                (1, 2, P),
                (0, 2, P),
                (2, 3, P),
                (3, 4, P),
                (4, 5, P),
                (3, 5, P),
            ],
        )
        .unwrap();
        let d = block_decompose(&g);
        assert_eq!(d.blocks.len(), 3);
        assert_eq!(d.bridges, vec![(2, 3)]);
        assert_eq!(d.cut_vertices, vec![2, 3]);
    }

    #[test]
    fn tree_edges_are_bridges() {
        let g = SignedGraph::from_edges(5, &[(0, 1, P), (1, 2, P), (1, 3, P), (3, 4, P)]).unwrap();
        let d = block_decompose(&g);
        assert_eq!(d.blocks.len(), 4);
        assert_eq!(d.bridges.len(), 4);
        assert_eq!(d.cut_vertices, vec![1, 3]);
    }
}
