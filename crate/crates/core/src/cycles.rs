//! Colorings of signed cycles by dynamic programming over color-set states.

use std::collections::HashMap;

use crate::color::{all_color_sets, ColorSet, Coloring, SignedSet, MAX_P};
use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph};

/// Which pairs of `q`-sets may sit on the ends of a positive or negative edge.
#[derive(Debug, Clone)]
pub struct TransferRelation {
    p: usize,
    q: usize,
    states: Vec<ColorSet>,
    index: HashMap<ColorSet, usize>,
}

impl TransferRelation {
    pub fn new(p: usize, q: usize) -> Result<TransferRelation> {
        if p == 0 || p > MAX_P || q > p {
            return Err(Error::InvalidParam(format!(
                "need 1 <= q <= p <= {MAX_P}, got p={p} q={q}"
            )));
        }
        let states = all_color_sets(p, q);
        let index = states.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        Ok(TransferRelation { p, q, states, index })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn states(&self) -> &[ColorSet] {
        &self.states
    }

    pub fn allowed(&self, a: ColorSet, b: ColorSet, s: Sign) -> bool {
        match s {
            Sign::Plus => !b.intersects(a.neg().signed()),
            Sign::Minus => !b.intersects(a.signed()),
        }
    }

    /// Indices of the states allowed next to `states[a]` across an edge of sign `s`.
    pub fn successors(&self, a: usize, s: Sign) -> Vec<usize> {
        let a = self.states[a];
        let forbidden = match s {
            Sign::Plus => a.neg().signed(),
            Sign::Minus => a.signed(),
        };
        let avail = SignedSet::all(self.p).minus(forbidden);
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(self.q);
        self.fill(avail, 1, &mut cur, &mut out);
        out.sort_unstable();
        out
    }

    fn fill(&self, avail: SignedSet, i: usize, cur: &mut Vec<i8>, out: &mut Vec<usize>) {
        if cur.len() == self.q {
            let s = ColorSet::new(self.p, cur).expect("antipodal-free by construction");
            out.push(self.index[&s]);
            return;
        }
        if self.p + 1 - i < self.q - cur.len() {
            return;
        }
        let c = i as i8;
        for x in [c, -c] {
            if avail.contains(x) {
                cur.push(x);
                self.fill(avail, i + 1, cur, out);
                cur.pop();
            }
        }
        self.fill(avail, i + 1, cur, out);
    }
}

/// A `(p, q)`-coloring of the cycle `0-1-…-(k-1)-0` whose edge `i` joins
/// `i` and `i+1 mod k` with sign `signs[i]`, or `None` if there is none.
pub fn color_cycle(signs: &[Sign], p: usize, q: usize) -> Result<Option<Coloring>> {
    let k = signs.len();
    if k < 3 {
        return Err(Error::InvalidParam(format!("cycle length {k} < 3")));
    }
    if q > p {
        return Err(Error::InvalidParam(format!("q={q} exceeds p={p}")));
    }
    let rel = TransferRelation::new(p, q)?;
    let start = rel.index[&ColorSet::first(p, q)];
    let mut succ_cache: HashMap<(usize, Sign), Vec<usize>> = HashMap::new();
    let mut succ =
        |a: usize, s: Sign| -> Vec<usize> { succ_cache.entry((a, s)).or_insert_with(|| rel.successors(a, s)).clone() };

    let nstates = rel.states.len();
    let mut layers: Vec<Vec<bool>> = vec![vec![false; nstates]; k];
    layers[0][start] = true;
    for i in 1..k {
        let prev: Vec<usize> = (0..nstates).filter(|&a| layers[i - 1][a]).collect();
        if prev.is_empty() {
            return Ok(None);
        }
        for a in prev {
            for b in succ(a, signs[i - 1]) {
                layers[i][b] = true;
            }
        }
    }
    let first = rel.states[start];
    let Some(last) = (0..nstates).find(|&b| layers[k - 1][b] && rel.allowed(rel.states[b], first, signs[k - 1])) else {
        return Ok(None);
    };

    let mut chosen = vec![0usize; k];
    chosen[0] = start;
    chosen[k - 1] = last;
    for i in (1..k - 1).rev() {
        let next = rel.states[chosen[i + 1]];
        chosen[i] = (0..nstates)
            .find(|&a| layers[i][a] && rel.allowed(rel.states[a], next, signs[i]))
            .expect("reachable state has a reachable predecessor");
    }
    let sets = chosen.into_iter().map(|i| rel.states[i]).collect();
    Ok(Some(Coloring::new(p, sets)?))
}

/// Vertices of a connected 2-regular graph in walk order, starting at 0
/// towards its smaller neighbor, or `None` if the graph is not a cycle.
pub fn cycle_walk(g: &SignedGraph) -> Option<Vec<usize>> {
    let n = g.n();
    if n < 3 || g.m() != n || (0..n).any(|v| g.degree(v) != 2) || !g.is_connected() {
        return None;
    }
    let mut order = vec![0usize];
    let mut prev = usize::MAX;
    let mut cur = 0usize;
    while order.len() < n {
        let next = g
            .neighbors(cur)
            .iter()
            .map(|&(w, _)| w)
            .filter(|&w| w != prev && w != order[0])
            .min()?;
        order.push(next);
        prev = cur;
        cur = next;
    }
    Some(order)
}

/// [`color_cycle`] on a graph that is a cycle, in the graph's own labels.
pub fn color_cycle_graph(g: &SignedGraph, p: usize, q: usize) -> Result<Option<Coloring>> {
    let order = cycle_walk(g).ok_or_else(|| Error::InvalidParam("graph is not a single cycle".into()))?;
    let k = order.len();
    let signs: Vec<Sign> = (0..k)
        .map(|i| {
            g.sign(order[i], order[(i + 1) % k])
                .expect("consecutive walk vertices are adjacent")
        })
        .collect();
    let Some(f) = color_cycle(&signs, p, q)? else {
        return Ok(None);
    };
    let mut sets = vec![ColorSet::empty(p); k];
    for (i, &v) in order.iter().enumerate() {
        sets[v] = f.get(i);
    }
    Ok(Some(Coloring::new(p, sets)?))
}

/// A `(k, k-1)`-coloring of the negative `k`-cycle with one negative edge.
pub fn color_negative_cycle_kk1(k: usize) -> Result<Coloring> {
    if k < 3 {
        return Err(Error::InvalidParam(format!("cycle length {k} < 3")));
    }
    let signs: Vec<Sign> = (0..k).map(|i| if i == 0 { Sign::Minus } else { Sign::Plus }).collect();
    color_cycle(&signs, k, k - 1)?
        .ok_or_else(|| Error::Internal(format!("no ({k},{}) coloring of a negative {k}-cycle", k - 1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::color::{verify, DemandMap};
    use crate::generate::cycle_with_signs;
    use Sign::{Minus as M, Plus as P};

    /// Depth-first search over all state tuples, no symmetry breaking.
    fn brute_exists(signs: &[Sign], p: usize, q: usize) -> bool {
        let rel = TransferRelation::new(p, q).unwrap();
        let states = rel.states().to_vec();
        fn go(rel: &TransferRelation, states: &[ColorSet], signs: &[Sign], cur: &mut Vec<ColorSet>) -> bool {
            let k = signs.len();
            if cur.len() == k {
                return rel.allowed(cur[k - 1], cur[0], signs[k - 1]);
            }
            for &s in states {
                if let Some(&prev) = cur.last() {
                    if !rel.allowed(prev, s, signs[cur.len() - 1]) {
                        continue;
                    }
                }
                cur.push(s);
                if go(rel, states, signs, cur) {
                    return true;
                }
                cur.pop();
            }
            false
        }
        go(&rel, &states, signs, &mut Vec::new())
    }

    #[test]
    fn relation_sizes() {
        for (p, q, n) in [(3, 2, 12), (5, 3, 80), (5, 4, 80), (4, 4, 16)] {
            assert_eq!(TransferRelation::new(p, q).unwrap().states().len(), n);
        }
        let rel = TransferRelation::new(4, 2).unwrap();
        for a in 0..rel.states().len() {
            for s in [P, M] {
                let fast = rel.successors(a, s);
                let slow: Vec<usize> = (0..rel.states().len())
                    .filter(|&b| rel.allowed(rel.states()[a], rel.states()[b], s))
                    .collect();
                assert_eq!(fast, slow);
            }
        }
    }

    #[test]
    fn negative_triangle_32() {
        let signs = [M, M, M];
        let f = color_cycle(&signs, 3, 2).unwrap().unwrap();
        let g = cycle_with_signs(&signs).unwrap();
        assert_eq!(verify(&g, &f, &DemandMap::constant(3, 2)), Ok(()));
        assert!(brute_exists(&signs, 3, 2));
    }

    #[test]
    fn unbalanced_cycle_has_no_pp_coloring() {
        for k in 3..=6 {
            let mut signs = vec![P; k];
            signs[0] = M;
            assert!(color_cycle(&signs, k, k).unwrap().is_none());
        }
    }

    #[test]
    fn dp_agrees_with_brute_force_small() {
        for k in 3..=5 {
            for mask in 0u32..(1 << k) {
                let signs: Vec<Sign> = (0..k).map(|i| if mask >> i & 1 == 1 { M } else { P }).collect();
                for p in 1..=3 {
                    for q in 1..=p {
                        let dp = color_cycle(&signs, p, q).unwrap();
                        assert_eq!(dp.is_some(), brute_exists(&signs, p, q), "{signs:?} p={p} q={q}");
                        if let Some(f) = dp {
                            let g = cycle_with_signs(&signs).unwrap();
                            assert_eq!(verify(&g, &f, &DemandMap::constant(k, q)), Ok(()));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn kk1_small() {
        for k in 3..=7 {
            let f = color_negative_cycle_kk1(k).unwrap();
            let mut signs = vec![P; k];
            signs[0] = M;
            let g = cycle_with_signs(&signs).unwrap();
            assert_eq!(verify(&g, &f, &DemandMap::constant(k, k - 1)), Ok(()));
        }
        assert!(color_negative_cycle_kk1(2).is_err());
    }

    #[test]
    fn errors() {
        assert!(color_cycle(&[M, M], 3, 2).is_err());
        assert!(color_cycle(&[M, M, M], 2, 3).is_err());
    }
}
