//! Named graph families and a reproducible random subcubic generator.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph};

use Sign::{Minus as M, Plus as P};

/// Generator families accepted by [`generate`].
#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    K4Minus,
    K4Bullet,
    NegCycle(usize),
    PosCycle(usize),
    NegCube,
    RandomSubcubic { n: usize, seed: u64, neg_prob: f64 },
}

pub fn generate(family: &Family) -> Result<SignedGraph> {
    match *family {
        Family::K4Minus => Ok(k4_minus()),
        Family::K4Bullet => Ok(k4_bullet()),
        Family::NegCycle(k) => cycle(k, true),
        Family::PosCycle(k) => cycle(k, false),
        Family::NegCube => Ok(neg_cube()),
        Family::RandomSubcubic { n, seed, neg_prob } => random_subcubic(n, seed, neg_prob),
    }
}

pub fn k4_minus() -> SignedGraph {
    let mut edges = Vec::new();
    for u in 0..4 {
        for v in u + 1..4 {
            edges.push((u, v, M));
        }
    }
    SignedGraph::from_edges(4, &edges).expect("simple")
}

/// Vertex ids of the K4 with one subdivided edge, as used by [`k4_bullet`].
pub mod k4b {
    pub const X: usize = 0;
    pub const Y: usize = 1;
    pub const Z: usize = 2;
    pub const W: usize = 3;
    /// The subdivision vertex (degree 2), adjacent to `X` and `W`.
    pub const T: usize = 4;
}

/// K4 on `x, y, z, w` with `xw` subdivided by `t`; every edge negative
/// except `xt`.
pub fn k4_bullet() -> SignedGraph {
    k4_bullet_signed([M, M, M, M, M, M, P])
}

/// K4• with signs in the order `xy, xz, yz, yw, zw, wt, xt`.
pub fn k4_bullet_signed(s: [Sign; 7]) -> SignedGraph {
    use k4b::*;
    SignedGraph::from_edges(
        5,
        &[
            (X, Y, s[0]),
            (X, Z, s[1]),
            (Y, Z, s[2]),
            (Y, W, s[3]),
            (Z, W, s[4]),
            (W, T, s[5]),
            (X, T, s[6]),
        ],
    )
    .expect("simple")
}

/// Cycle `0-1-…-(k-1)-0`; when `negative`, exactly the edge `01` is negative.
pub fn cycle(k: usize, negative: bool) -> Result<SignedGraph> {
    if k < 3 {
        return Err(Error::InvalidParam(format!("cycle length {k} < 3")));
    }
    let signs: Vec<Sign> = (0..k).map(|i| if negative && i == 0 { M } else { P }).collect();
    cycle_with_signs(&signs)
}

/// Cycle whose edge `i` joins `i` and `i+1 (mod k)` with sign `signs[i]`.
pub fn cycle_with_signs(signs: &[Sign]) -> Result<SignedGraph> {
    let k = signs.len();
    if k < 3 {
        return Err(Error::InvalidParam(format!("cycle length {k} < 3")));
    }
    let edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k, signs[i])).collect();
    SignedGraph::from_edges(k, &edges)
}

/// The 3-cube with every 4-face negative. Inner square `0..4`, outer square
/// `4..8`, spokes `i - (i+4)`.
pub fn neg_cube() -> SignedGraph {
    SignedGraph::from_edges(
        8,
        &[
            (0, 1, P),
            (1, 2, P),
            (2, 3, M),
            (0, 3, P),
            (4, 5, P),
            (5, 6, M),
            (6, 7, P),
            (4, 7, P),
            (0, 4, M),
            (1, 5, P),
            (2, 6, P),
            (3, 7, P),
        ],
    )
    .expect("simple")
}

/// Random connected simple graph of maximum degree 3.
///
/// Every vertex draws 1 to 3 half-edges, half-edges are paired uniformly at
/// random, and loops or repeated pairs are discarded. The largest component
/// is kept and relabelled in increasing order, so the result may have fewer
/// than `n` vertices. Each edge is negative with probability `neg_prob`.
pub fn random_subcubic(n: usize, seed: u64, neg_prob: f64) -> Result<SignedGraph> {
    if n < 1 {
        return Err(Error::InvalidParam("n must be at least 1".into()));
    }
    if !(0.0..=1.0).contains(&neg_prob) {
        return Err(Error::InvalidParam(format!(
            "negative probability {neg_prob} outside [0, 1]"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points = Vec::new();
    for v in 0..n {
        let d = rng.gen_range(1..=3);
        points.extend(std::iter::repeat_n(v, d));
    }
    points.shuffle(&mut rng);
    let mut g = SignedGraph::empty(n);
    for pair in points.chunks_exact(2) {
        let (u, v) = (pair[0], pair[1]);
        if u == v || g.has_edge(u, v) {
            continue;
        }
        let s = if rng.gen_bool(neg_prob) { M } else { P };
        g.add_edge(u, v, s)?;
    }
    let comps = g.components();
    let largest = comps
        .iter()
        .max_by_key(|c| (c.len(), std::cmp::Reverse(c[0])))
        .expect("n >= 1");
    Ok(g.induced(largest).0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_bullet_shape() {
        let g = k4_bullet();
        assert_eq!((g.n(), g.m()), (5, 7));
        let two: Vec<usize> = (0..5).filter(|&v| g.degree(v) == 2).collect();
        assert_eq!(two, vec![k4b::T]);
        let pos: Vec<_> = g.edges().into_iter().filter(|e| e.2 == P).collect();
        assert_eq!(pos.len(), 1);
        assert!(pos[0].0 == k4b::T || pos[0].1 == k4b::T);
    }

    #[test]
    fn neg_cube_faces() {
        let g = neg_cube();
        assert_eq!((g.n(), g.m()), (8, 12));
        let faces = [
            [0, 1, 2, 3],
            [4, 5, 6, 7],
            [0, 1, 5, 4],
            [1, 2, 6, 5],
            [2, 3, 7, 6],
            [3, 0, 4, 7],
        ];
        for f in faces {
            let mut prod = P;
            for i in 0..4 {
                prod = prod * g.sign(f[i], f[(i + 1) % 4]).expect("face edge");
            }
            assert_eq!(prod, M, "face {f:?}");
        }
    }

    #[test]
    fn neg_cycle_has_odd_negatives() {
        let g = cycle(5, true).unwrap();
        let neg = g.edges().iter().filter(|e| e.2 == M).count();
        assert_eq!(neg % 2, 1);
        assert!(cycle(2, true).is_err());
    }

    #[test]
    fn random_is_reproducible_and_subcubic() {
        for seed in 0..50 {
            let a = random_subcubic(20, seed, 0.5).unwrap();
            let b = random_subcubic(20, seed, 0.5).unwrap();
            assert_eq!(a, b);
            assert!(a.is_subcubic());
            assert!(a.is_connected());
        }
        assert!(random_subcubic(0, 1, 0.5).is_err());
    }
}
