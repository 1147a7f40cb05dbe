use std::fmt;

use crate::blocks::block_decompose;
use crate::graph::SignedGraph;

/// Block shapes that the reductions cannot handle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BadBlockKind {
    /// Triangle with at least two vertices of degree 2 in the host graph.
    C3Star,
    /// 4-cycle with at least three vertices of degree 2 in the host graph.
    C4Star,
    /// K4 with one subdivided edge.
    K4Bullet,
    K4,
}

impl fmt::Display for BadBlockKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BadBlockKind::C3Star => "C3*",
            BadBlockKind::C4Star => "C4*",
            BadBlockKind::K4Bullet => "K4•",
            BadBlockKind::K4 => "K4",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BadBlock {
    pub kind: BadBlockKind,
    /// Sorted vertices of the block.
    pub vertices: Vec<usize>,
}

impl fmt::Display for BadBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<String> = self.vertices.iter().map(usize::to_string).collect();
        write!(f, "{} on {{{}}}", self.kind, vs.join(","))
    }
}

/// Classifies a block by its size and degrees.
fn classify(g: &SignedGraph, vertices: &[usize], edges: &[(usize, usize)]) -> Option<BadBlockKind> {
    let host_twos = vertices.iter().filter(|&&v| g.degree(v) == 2).count();
    match (vertices.len(), edges.len()) {
        (3, 3) if host_twos >= 2 => Some(BadBlockKind::C3Star),
        (4, 4) if host_twos >= 3 => Some(BadBlockKind::C4Star),
        (4, 6) => Some(BadBlockKind::K4),
        (5, 7) => {
            let deg = |v: usize| edges.iter().filter(|&&(a, b)| a == v || b == v).count();
            let mut ds: Vec<usize> = vertices.iter().map(|&v| deg(v)).collect();
            ds.sort_unstable();
            // with this degree sequence the graph is K4 with one edge subdivided
            (ds == [2, 3, 3, 3, 3]).then_some(BadBlockKind::K4Bullet)
        }
        _ => None,
    }
}

pub fn detect_bad_blocks(g: &SignedGraph) -> Vec<BadBlock> {
    let bd = block_decompose(g);
    bd.blocks
        .iter()
        .zip(&bd.block_edges)
        .filter_map(|(vs, es)| {
            classify(g, vs, es).map(|kind| BadBlock {
                kind,
                vertices: vs.clone(),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use crate::graph::Sign;

    fn graph(n: usize, edges: &[(usize, usize)]) -> SignedGraph {
        let es: Vec<_> = edges.iter().map(|&(a, b)| (a, b, Sign::Plus)).collect();
        SignedGraph::from_edges(n, &es).unwrap()
    }

    fn kinds(g: &SignedGraph) -> Vec<BadBlockKind> {
        detect_bad_blocks(g).into_iter().map(|b| b.kind).collect()
    }

    #[test]
    fn named_shapes() {
        assert_eq!(kinds(&generate::cycle(3, true).unwrap()), vec![BadBlockKind::C3Star]);
        assert_eq!(kinds(&generate::cycle(4, false).unwrap()), vec![BadBlockKind::C4Star]);
        assert_eq!(kinds(&generate::k4_minus()), vec![BadBlockKind::K4]);
        assert_eq!(kinds(&generate::k4_bullet()), vec![BadBlockKind::K4Bullet]);
        assert!(kinds(&generate::cycle(5, true).unwrap()).is_empty());
        assert!(kinds(&generate::neg_cube()).is_empty());
    }

    #[test]
    fn host_degrees_matter() {
        // two 5-cycles sharing vertex 0
        let g = graph(
            9,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (0, 5),
                (5, 6),
                (6, 7),
                (7, 8),
                (8, 0),
            ],
        );
        assert!(kinds(&g).is_empty());
        // triangle 0,1,2 with a pendant path at 0: still C3*
        let g = graph(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4)]);
        assert_eq!(kinds(&g), vec![BadBlockKind::C3Star]);
        // triangle with pendants at two corners: not bad
        let g = graph(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 4)]);
        assert!(kinds(&g).is_empty());
        // 4-cycle with pendants at two corners: not bad
        let g = graph(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (2, 5)]);
        assert!(kinds(&g).is_empty());
    }
}
