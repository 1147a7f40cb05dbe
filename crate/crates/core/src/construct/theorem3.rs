//! `(5,3)`-colorings of subcubic signed graphs other than (K4,−).

use super::bad_blocks::{detect_bad_blocks, BadBlock};
use super::small::{color_32_small, small_case_table};
use super::theorem5::color_theorem5;
use crate::color::{lift_32_to_53, verify, ColorSet, Coloring, DemandMap, SignedPermutation};
use crate::error::{Error, Result};
use crate::exact::search_coloring;
use crate::graph::SignedGraph;

const Q: usize = 3;

/// A verified `(5,3)`-coloring, or `None` when some component is switching
/// equivalent to (K4,−).
pub fn color_53(g: &SignedGraph) -> Result<Option<Coloring>> {
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) > 3) {
        return Err(Error::NotSubcubic(v, g.degree(v)));
    }
    let mut sets = vec![ColorSet::empty(5); g.n()];
    for comp in g.components() {
        let (h, map) = g.induced(&comp);
        let Some(part) = component(&h)? else {
            return Ok(None);
        };
        for (i, &v) in map.iter().enumerate() {
            sets[v] = part[i];
        }
    }
    let f = Coloring::new(5, sets)?;
    verify(g, &f, &DemandMap::constant(g.n(), Q)).map_err(|v| Error::Internal(format!("(5,3)-coloring: {v}")))?;
    Ok(Some(f))
}

fn cut(sets: Vec<ColorSet>) -> Vec<ColorSet> {
    sets.into_iter().map(|s| s.take(Q)).collect()
}

/// Colors a connected graph.
fn component(g: &SignedGraph) -> Result<Option<Vec<ColorSet>>> {
    if g.n() <= 4 {
        return match color_32_small(g)? {
            Some(f) => Ok(Some(lift_32_to_53(&f)?.sets().to_vec())),
            None => Ok(None),
        };
    }
    let bad = detect_bad_blocks(g);
    if bad.is_empty() {
        return Ok(Some(cut(color_theorem5(g)?.sets().to_vec())));
    }
    if g.n() == 5 && g.m() == 7 {
        // the whole graph is K4 with a subdivided edge
        return Ok(Some(cut(small_case_table(g)?.sets().to_vec())));
    }
    peel(g, &bad[0]).map(Some)
}

/// Removes a bad block except its attachment vertex, colors the rest and
/// then the block, matched up at the attachment vertex.
fn peel(g: &SignedGraph, block: &BadBlock) -> Result<Vec<ColorSet>> {
    let inside = |v: usize| block.vertices.binary_search(&v).is_ok();
    let c = *block
        .vertices
        .iter()
        .find(|&&v| g.neighbors(v).iter().any(|&(w, _)| !inside(w)))
        .ok_or_else(|| Error::Internal(format!("{block} has no attachment vertex")))?;
    let removed: Vec<usize> = block.vertices.iter().copied().filter(|&v| v != c).collect();
    let (rest, rest_map) = g.delete_vertices(&removed);
    let rest_sets =
        component(&rest)?.ok_or_else(|| Error::Internal(format!("peeling {block} left a copy of (K4,-)")))?;
    let (h, h_map) = g.induced(&block.vertices);
    let hc = h_map
        .iter()
        .position(|&v| v == c)
        .expect("attachment lies in the block");
    let held = rest_sets[rest_map.iter().position(|&v| v == c).expect("attachment survives")];

    let mut h_sets = cut(small_case_table(&h)?.sets().to_vec());
    let pi = SignedPermutation::mapping(5, h_sets[hc], held)?;
    h_sets = h_sets.into_iter().map(|s| pi.apply_set(s)).collect();
    let mut fixed = vec![None; h.n()];
    fixed[hc] = Some(held);
    if !fits(&h, &h_sets, &fixed) {
        h_sets = pinned_search(&h, hc, held)?;
    }

    let mut sets = vec![ColorSet::empty(5); g.n()];
    for (i, &v) in rest_map.iter().enumerate() {
        sets[v] = rest_sets[i];
    }
    for (i, &v) in h_map.iter().enumerate() {
        sets[v] = h_sets[i];
    }
    Ok(sets)
}

fn fits(h: &SignedGraph, sets: &[ColorSet], fixed: &[Option<ColorSet>]) -> bool {
    let f = match Coloring::new(5, sets.to_vec()) {
        Ok(f) => f,
        Err(_) => return false,
    };
    verify(h, &f, &DemandMap::constant(h.n(), Q)).is_ok()
        && fixed.iter().zip(sets).all(|(want, &got)| want.is_none_or(|w| w == got))
}

/// Searches the block again and moves the attachment vertex onto its held
/// set; any block coloring can be transported this way.
fn pinned_search(h: &SignedGraph, hc: usize, held: ColorSet) -> Result<Vec<ColorSet>> {
    let f = search_coloring(h, 5, &DemandMap::constant(h.n(), Q))?
        .ok_or_else(|| Error::Internal("bad block without a (5,3)-coloring".into()))?;
    let pi = SignedPermutation::mapping(5, f.get(hc), held)?;
    Ok(f.sets().iter().map(|&s| pi.apply_set(s)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use crate::graph::Sign;

    fn check(g: &SignedGraph) {
        let f = color_53(g).unwrap().expect("colorable");
        assert!(verify(g, &f, &DemandMap::constant(g.n(), 3)).is_ok());
    }

    #[test]
    fn k4_minus_has_none() {
        assert_eq!(color_53(&generate::k4_minus()).unwrap(), None);
        let switched = generate::k4_minus().switch_at(&[0, 2]).unwrap();
        assert_eq!(color_53(&switched).unwrap(), None);
    }

    #[test]
    fn named_graphs() {
        check(&generate::k4_bullet());
        check(&generate::neg_cube());
        for k in 3..9 {
            check(&generate::cycle(k, true).unwrap());
            check(&generate::cycle(k, false).unwrap());
        }
    }

    #[test]
    fn five_cycle_with_pendant_triangle() {
        let m = Sign::Minus;
        let g = SignedGraph::from_edges(
            8,
            &[
                (0, 1, m),
                (1, 2, m),
                (2, 3, m),
                (3, 4, m),
                (4, 0, m),
                (0, 5, m),
                (5, 6, m),
                (6, 7, m),
                (7, 5, m),
            ],
        )
        .unwrap();
        assert!(!detect_bad_blocks(&g).is_empty());
        check(&g);
    }

    #[test]
    fn disconnected_with_k4_minus() {
        let mut edges = generate::k4_minus().edges();
        edges.push((4, 5, Sign::Minus));
        let g = SignedGraph::from_edges(6, &edges).unwrap();
        assert_eq!(color_53(&g).unwrap(), None);
    }

    #[test]
    fn random_graphs() {
        for seed in 0..200 {
            let g = generate::random_subcubic(5 + seed as usize % 26, seed, 0.5).unwrap();
            let k4 = generate::k4_minus();
            if g.same_underlying(&k4) && g.switching_equivalent(&k4).unwrap() {
                assert_eq!(color_53(&g).unwrap(), None);
            } else {
                check(&g);
            }
        }
    }
}
