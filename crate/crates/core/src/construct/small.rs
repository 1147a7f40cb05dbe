//! Explicit colorings of the small graphs the reductions stop at.

use super::bad_blocks::{detect_bad_blocks, BadBlockKind};
use crate::color::{verify, ColorSet, Coloring, DemandMap, SignedSet};
use crate::cycles::cycle_walk;
use crate::error::{Error, Result};
use crate::exact::search_coloring;
use crate::generate;
use crate::graph::{BalancedWitness, Sign, SignedGraph};

use Sign::{Minus as M, Plus as P};

fn is_short_cycle(g: &SignedGraph) -> bool {
    let n = g.n();
    (n == 3 || n == 4) && g.m() == n && g.is_connected() && (0..n).all(|v| g.degree(v) == 2)
}

fn is_k4_bullet(g: &SignedGraph) -> bool {
    g.n() == 5 && g.is_connected() && detect_bad_blocks(g).iter().any(|b| b.kind == BadBlockKind::K4Bullet)
}

/// Colorings of the triangle, the 4-cycle and K4• for every signature.
///
/// Cycles get 4 colors at the first vertex of the walk (and the last, for
/// the 4-cycle) and 3 elsewhere; K4• gets 3 colors everywhere.
pub fn small_case_table(g: &SignedGraph) -> Result<Coloring> {
    let f = if is_short_cycle(g) {
        cycle_table(g)?
    } else if is_k4_bullet(g) {
        k4_bullet_table(g)?
    } else {
        return Err(Error::InvalidParam(
            "small_case_table needs an underlying triangle, 4-cycle or K4•".into(),
        ));
    };
    verify(g, &f, &f.demands()).map_err(|v| Error::Internal(format!("small case table: {v}")))?;
    Ok(f)
}

fn cycle_table(g: &SignedGraph) -> Result<Coloring> {
    let order = cycle_walk(g).expect("checked to be a cycle");
    let sizes: &[usize] = if g.n() == 3 { &[4, 3, 3] } else { &[4, 3, 3, 4] };
    match g.balance_check() {
        BalancedWitness::Switching(s) => {
            let mut sets = vec![ColorSet::empty(5); g.n()];
            for (i, &v) in order.iter().enumerate() {
                let base = ColorSet::first(5, 4).take(sizes[i]);
                sets[v] = if s[v] == M { base.neg() } else { base };
            }
            Coloring::new(5, sets)
        }
        BalancedWitness::NegCycle(_) => {
            let table: &[&[u8]] = if g.n() == 3 {
                &[&[1, 2, 3, 4], &[1, 2, 5], &[3, 4, 5]]
            } else {
                &[&[1, 2, 3, 4], &[1, 2, 5], &[3, 4, 5], &[1, 2, 3, 4]]
            };
            let mut classes = vec![Vec::new(); g.n()];
            for (i, &v) in order.iter().enumerate() {
                classes[v] = table[i].to_vec();
            }
            // every color class is a path, so any signature works
            Coloring::from_unsigned(g, 5, &classes)
        }
    }
}

/// Vertex roles of K4• in the order x, y, z, w, t.
type Labels = [usize; 5];

fn k4_bullet_table(g: &SignedGraph) -> Result<Coloring> {
    let t = (0..5).find(|&v| g.degree(v) == 2).expect("K4• has a 2-vertex");
    let tn: Vec<usize> = g.neighbors(t).iter().map(|&(w, _)| w).collect();
    let others: Vec<usize> = (0..5).filter(|&v| v != t && !tn.contains(&v)).collect();
    let sg = |a: usize, b: usize| g.sign(a, b).expect("K4• edge");
    let mut contractible = None;
    for (x, w) in [(tn[0], tn[1]), (tn[1], tn[0])] {
        for (y, z) in [(others[0], others[1]), (others[1], others[0])] {
            let lab: Labels = [x, y, z, w, t];
            let t1 = sg(x, y) * sg(y, z) * sg(z, x);
            let t2 = sg(w, y) * sg(y, z) * sg(z, w);
            let q = sg(x, t) * sg(t, w) * sg(w, z) * sg(z, x);
            match (t1, t2, q) {
                (P, P, P) => {
                    let BalancedWitness::Switching(s) = g.balance_check() else {
                        unreachable!("all cycles positive");
                    };
                    let base = ColorSet::first(5, 3);
                    return Coloring::new(5, (0..5).map(|v| if s[v] == M { base.neg() } else { base }).collect());
                }
                (M, M, M) => return table_route(g, lab),
                // only yz negative: contract xt, then xw
                (M, M, P) => contractible = contractible.or(Some((lab, (y, z), (x, w)))),
                // only xy negative: contract xt, then zw
                (M, P, P) => contractible = contractible.or(Some((lab, (x, y), (z, w)))),
                _ => {}
            }
        }
    }
    if let Some((lab, minus, second)) = contractible {
        return contraction_route(g, lab, minus, second);
    }
    // no table coloring for the remaining class; search finds one
    search_coloring(g, 5, &DemandMap::constant(5, 3))?
        .ok_or_else(|| Error::Internal("K4• signature without a (5,3)-coloring".into()))
}

/// Signature on `g`'s edges that is negative exactly on `minus`.
fn signature(g: &SignedGraph, minus: &[(usize, usize)]) -> SignedGraph {
    let edges: Vec<(usize, usize, Sign)> = g
        .edges()
        .into_iter()
        .map(|(a, b, _)| {
            let neg = minus.iter().any(|&(x, y)| (x, y) == (a, b) || (x, y) == (b, a));
            (a, b, if neg { M } else { P })
        })
        .collect();
    SignedGraph::from_edges(g.n(), &edges).expect("same edges")
}

fn unswitch(g: &SignedGraph, target: &SignedGraph, f: Coloring) -> Result<Coloring> {
    let s = g
        .switching_to(target)?
        .ok_or_else(|| Error::Internal("K4• signature class mismatch".into()))?;
    Ok(f.switched(|v| s[v]))
}

/// Table coloring of the signature where only `xt` is positive.
fn table_route(g: &SignedGraph, lab: Labels) -> Result<Coloring> {
    let [x, y, z, w, t] = lab;
    let target = signature(g, &[(x, y), (x, z), (y, z), (y, w), (z, w), (w, t)]);
    let mut sets = vec![ColorSet::empty(5); 5];
    sets[x] = ColorSet::new(5, &[1, 2, 3])?;
    sets[y] = ColorSet::new(5, &[-2, -4, -5])?;
    sets[z] = ColorSet::new(5, &[-1, -3, 5])?;
    sets[w] = ColorSet::new(5, &[1, 2, 4])?;
    // {3,4,5} here would break the edge wt
    sets[t] = ColorSet::new(5, &[3, -4, 5])?;
    unswitch(g, &target, Coloring::new(5, sets)?)
}

/// Contracts `xt` and then `second` down to a negative triangle.
fn contraction_route(g: &SignedGraph, lab: Labels, minus: (usize, usize), second: (usize, usize)) -> Result<Coloring> {
    let [x, _, _, _, t] = lab;
    let target = signature(g, &[minus]);
    let (h1, m1) = target.contract_positive_edge(x, t)?;
    let (h2, m2) = h1.contract_positive_edge(m1[second.0], m1[second.1])?;
    let tri = small_case_table(&h2)?;
    let sets = (0..5).map(|v| tri.get(m2[m1[v]]).take(3)).collect();
    unswitch(g, &target, Coloring::new(5, sets)?)
}

/// Set for the degree-1 vertex `v` inside its available set: for each
/// absolute value in turn, `+i` if available, else `-i`, until `q` colors.
pub fn extend_pendant(g: &SignedGraph, sets: &[Option<ColorSet>], v: usize, q: usize) -> Result<ColorSet> {
    let &[(u, s)] = g.neighbors(v) else {
        return Err(Error::InvalidParam(format!(
            "vertex {v} has degree {}, not 1",
            g.degree(v)
        )));
    };
    let fu = sets[u].ok_or_else(|| Error::InvalidParam(format!("neighbor {u} of {v} is uncolored")))?;
    let p = fu.p();
    let forbidden = match s {
        M => fu.signed(),
        P => fu.neg().signed(),
    };
    let avail = SignedSet::all(p).minus(forbidden);
    let mut picked = Vec::with_capacity(q);
    for i in 1..=p as i8 {
        if picked.len() == q {
            break;
        }
        if avail.contains(i) {
            picked.push(i);
        } else if avail.contains(-i) {
            picked.push(-i);
        }
    }
    if picked.len() < q {
        return Err(Error::DemandExceeded {
            vertex: v,
            demand: q,
            available: picked.len(),
        });
    }
    ColorSet::new(p, &picked)
}

/// A (3,2)-coloring of a graph on at most 4 vertices, or `None` when it is
/// switching equivalent to (K4,−).
///
/// The graph is completed to a K4 that is not (K4,−); two of its positive
/// triangles share an edge, which after switching is positive and can be
/// contracted, leaving a triangle.
pub fn color_32_small(g: &SignedGraph) -> Result<Option<Coloring>> {
    let n = g.n();
    if n > 4 {
        return Err(Error::InvalidParam(format!("expected at most 4 vertices, got {n}")));
    }
    let mut missing = Vec::new();
    for a in 0..4 {
        for b in a + 1..4 {
            if a >= n || b >= n || !g.has_edge(a, b) {
                missing.push((a, b));
            }
        }
    }
    let k4_minus = generate::k4_minus();
    let mut full = None;
    for mask in 0u32..1 << missing.len() {
        let mut k = SignedGraph::empty(4);
        for (a, b, s) in g.edges() {
            k.add_edge(a, b, s)?;
        }
        for (i, &(a, b)) in missing.iter().enumerate() {
            k.add_edge(a, b, if mask >> i & 1 == 1 { M } else { P })?;
        }
        if !k.switching_equivalent(&k4_minus)? {
            full = Some(k);
            break;
        }
    }
    let Some(k) = full else {
        return Ok(None);
    };
    let tri_sign = |a: usize, b: usize, c: usize| {
        k.sign(a, b).expect("complete") * k.sign(b, c).expect("complete") * k.sign(a, c).expect("complete")
    };
    let (a, b) = (0..4)
        .flat_map(|a| (a + 1..4).map(move |b| (a, b)))
        .find(|&(a, b)| (0..4).filter(|&c| c != a && c != b).all(|c| tri_sign(a, b, c) == P))
        .ok_or_else(|| Error::Internal("no two positive triangles share an edge".into()))?;
    let flip_a = k.sign(a, b) == Some(M);
    let k2 = if flip_a { k.switch_at(&[a])? } else { k };
    let (h, map) = k2.contract_positive_edge(a, b)?;
    let tri = search_coloring(&h, 3, &DemandMap::constant(3, 2))?
        .ok_or_else(|| Error::Internal("triangle without a (3,2)-coloring".into()))?;
    let sets = (0..n)
        .map(|v| {
            let s = tri.get(map[v]);
            if flip_a && v == a {
                s.neg()
            } else {
                s
            }
        })
        .collect();
    let f = Coloring::new(3, sets)?;
    verify(g, &f, &DemandMap::constant(n, 2)).map_err(|v| Error::Internal(format!("4-vertex route: {v}")))?;
    Ok(Some(f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{cycle_with_signs, k4_bullet_signed};

    fn all_signs<const E: usize>() -> Vec<[Sign; E]> {
        (0..1u32 << E)
            .map(|m| std::array::from_fn(|i| if m >> i & 1 == 1 { M } else { P }))
            .collect()
    }

    #[test]
    fn cycles_every_signature() {
        for s in all_signs::<3>() {
            let g = cycle_with_signs(&s).unwrap();
            let f = small_case_table(&g).unwrap();
            let mut sizes: Vec<usize> = f.sets().iter().map(|c| c.len()).collect();
            sizes.sort_unstable();
            assert_eq!(sizes, vec![3, 3, 4]);
        }
        for s in all_signs::<4>() {
            let g = cycle_with_signs(&s).unwrap();
            let f = small_case_table(&g).unwrap();
            assert_eq!(f.demands().0, vec![4, 3, 3, 4]);
        }
        let f = small_case_table(&generate::cycle(4, false).unwrap()).unwrap();
        assert!(f.sets().iter().all(|s| s.is_subset_of(ColorSet::first(5, 4).signed())));
    }

    #[test]
    fn k4_bullet_every_signature() {
        for s in all_signs::<7>() {
            let g = k4_bullet_signed(s);
            let f = small_case_table(&g).unwrap();
            assert_eq!(verify(&g, &f, &DemandMap::constant(5, 3)), Ok(()), "{s:?}");
        }
    }

    #[test]
    fn k4_bullet_fig1a_is_the_table() {
        let f = small_case_table(&generate::k4_bullet()).unwrap();
        assert_eq!(f.get(generate::k4b::X), ColorSet::new(5, &[1, 2, 3]).unwrap());
        assert_eq!(f.get(generate::k4b::T), ColorSet::new(5, &[3, -4, 5]).unwrap());
    }

    #[test]
    fn rejects_other_graphs() {
        assert!(small_case_table(&generate::cycle(5, true).unwrap()).is_err());
        assert!(small_case_table(&generate::k4_minus()).is_err());
    }

    #[test]
    fn pendant_examples() {
        let g = SignedGraph::from_edges(2, &[(0, 1, M)]).unwrap();
        let sets = [Some(ColorSet::new(5, &[1, 2, 3]).unwrap()), None];
        assert_eq!(
            extend_pendant(&g, &sets, 1, 5).unwrap(),
            ColorSet::new(5, &[-1, -2, -3, 4, 5]).unwrap()
        );
        let g = SignedGraph::from_edges(2, &[(0, 1, P)]).unwrap();
        let sets = [Some(ColorSet::new(5, &[1, 2, 3, 4]).unwrap()), None];
        assert_eq!(
            extend_pendant(&g, &sets, 1, 3).unwrap(),
            ColorSet::new(5, &[1, 2, 3]).unwrap()
        );
        assert!(extend_pendant(&g, &sets, 0, 3).is_err());
    }

    #[test]
    fn four_vertices() {
        assert_eq!(color_32_small(&generate::k4_minus()).unwrap(), None);
        // every signature of K4 and of K4 minus an edge
        for s in all_signs::<6>() {
            let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
            let edges: Vec<_> = pairs.iter().zip(s).map(|(&(a, b), s)| (a, b, s)).collect();
            let g = SignedGraph::from_edges(4, &edges).unwrap();
            let res = color_32_small(&g).unwrap();
            assert_eq!(res.is_none(), g.switching_equivalent(&generate::k4_minus()).unwrap());
            let g5 = SignedGraph::from_edges(4, &edges[1..]).unwrap();
            assert!(color_32_small(&g5).unwrap().is_some());
        }
        assert!(color_32_small(&SignedGraph::empty(1)).unwrap().is_some());
    }
}
