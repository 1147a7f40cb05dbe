use crate::color::{all_color_sets, ColorSet, Coloring, DemandMap, MAX_P};
use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph};

/// Knobs for [`search_coloring_with`].
#[derive(Debug, Clone, Default)]
pub struct SearchOptions {
    /// Sets already fixed; they are never changed.
    pub fixed: Vec<Option<ColorSet>>,
    /// Give up after this many visited nodes (`None` for no limit).
    pub node_limit: Option<u64>,
}

/// Exhaustive `(p, φ)`-coloring search. `Ok(None)` means none exists.
pub fn search_coloring(g: &SignedGraph, p: usize, phi: &DemandMap) -> Result<Option<Coloring>> {
    search_coloring_with(g, p, phi, &SearchOptions::default())
}

pub fn search_coloring_with(
    g: &SignedGraph,
    p: usize,
    phi: &DemandMap,
    opts: &SearchOptions,
) -> Result<Option<Coloring>> {
    let n = g.n();
    if p == 0 || p > MAX_P {
        return Err(Error::InvalidParam(format!("palette size {p} outside 1..={MAX_P}")));
    }
    if phi.len() != n {
        return Err(Error::InvalidParam("demand map size differs from vertex count".into()));
    }
    if let Some(v) = (0..n).find(|&v| phi.get(v) > p) {
        return Err(Error::DemandExceeded {
            vertex: v,
            demand: phi.get(v),
            available: p,
        });
    }
    let fixed: Vec<Option<ColorSet>> = if opts.fixed.is_empty() {
        vec![None; n]
    } else if opts.fixed.len() == n {
        opts.fixed.clone()
    } else {
        return Err(Error::InvalidParam(
            "fixed-set list size differs from vertex count".into(),
        ));
    };

    let mut order: Vec<usize> = (0..n).filter(|&v| fixed[v].is_none()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut candidates: Vec<Vec<ColorSet>> = vec![Vec::new(); p + 1];
    for q in 0..=p {
        candidates[q] = all_color_sets(p, q);
    }

    let assigned: Vec<Option<ColorSet>> = fixed.clone();
    for v in 0..n {
        if let Some(s) = fixed[v] {
            if s.p() != p || s.len() != phi.get(v) {
                return Err(Error::InvalidParam(format!(
                    "fixed set at {v} has wrong size or palette"
                )));
            }
        }
    }
    // two fixed neighbors must already agree
    for (u, v, s) in g.edges() {
        if let (Some(a), Some(b)) = (fixed[u], fixed[v]) {
            if clash(a, b, s) {
                return Ok(None);
            }
        }
    }
    // with nothing fixed, the first set may be chosen canonically
    let canonical_first = fixed.iter().all(Option::is_none);
    let mut ctx = Ctx {
        g,
        p,
        order: &order,
        phi,
        candidates: &candidates,
        assigned,
        canonical_first,
        nodes: 0,
        limit: opts.node_limit,
    };
    if !ctx.dfs(0)? {
        return Ok(None);
    }
    let sets = ctx.assigned.into_iter().map(|s| s.expect("all assigned")).collect();
    Ok(Some(Coloring::new(p, sets)?))
}

fn clash(a: ColorSet, b: ColorSet, s: Sign) -> bool {
    match s {
        Sign::Plus => b.intersects(a.neg().signed()),
        Sign::Minus => b.intersects(a.signed()),
    }
}

struct Ctx<'a> {
    g: &'a SignedGraph,
    p: usize,
    order: &'a [usize],
    phi: &'a DemandMap,
    candidates: &'a [Vec<ColorSet>],
    assigned: Vec<Option<ColorSet>>,
    canonical_first: bool,
    nodes: u64,
    limit: Option<u64>,
}

impl Ctx<'_> {
    fn dfs(&mut self, i: usize) -> Result<bool> {
        if i == self.order.len() {
            return Ok(true);
        }
        self.nodes += 1;
        if self.limit.is_some_and(|l| self.nodes > l) {
            return Err(Error::Internal("search node limit reached".into()));
        }
        let v = self.order[i];
        let mut forbidden = 0u32;
        for &(w, s) in self.g.neighbors(v) {
            if let Some(b) = self.assigned[w] {
                forbidden |= match s {
                    Sign::Plus => b.neg().bits(),
                    Sign::Minus => b.bits(),
                };
            }
        }
        let q = self.phi.get(v);
        let first = [ColorSet::first(self.p, q)];
        let cands = self.candidates;
        let sets: &[ColorSet] = if i == 0 && self.canonical_first {
            &first
        } else {
            &cands[q]
        };
        for &c in sets {
            if c.bits() & forbidden != 0 {
                continue;
            }
            self.assigned[v] = Some(c);
            if self.dfs(i + 1)? {
                return Ok(true);
            }
        }
        self.assigned[v] = None;
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::color::verify;
    use crate::generate;

    /// Tries every tuple of sets, no pruning and no symmetry breaking.
    fn naive_exists(g: &SignedGraph, p: usize, phi: &DemandMap) -> bool {
        let n = g.n();
        let sets: Vec<Vec<ColorSet>> = (0..n).map(|v| all_color_sets(p, phi.get(v))).collect();
        let mut idx = vec![0usize; n];
        loop {
            let f = Coloring::new(p, (0..n).map(|v| sets[v][idx[v]]).collect()).unwrap();
            if verify(g, &f, phi).is_ok() {
                return true;
            }
            let mut i = 0;
            loop {
                if i == n {
                    return false;
                }
                idx[i] += 1;
                if idx[i] < sets[i].len() {
                    break;
                }
                idx[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn k4_minus_examples() {
        let g = generate::k4_minus();
        assert!(search_coloring(&g, 5, &DemandMap::constant(4, 3)).unwrap().is_none());
        for q in 1..=2 {
            let f = search_coloring(&g, 2 * q, &DemandMap::constant(4, q)).unwrap().unwrap();
            assert_eq!(verify(&g, &f, &DemandMap::constant(4, q)), Ok(()));
        }
    }

    #[test]
    fn k4_bullet_53() {
        let g = generate::k4_bullet();
        let phi = DemandMap::constant(5, 3);
        let f = search_coloring(&g, 5, &phi).unwrap().unwrap();
        assert_eq!(verify(&g, &f, &phi), Ok(()));
        assert!(search_coloring(&g, 4, &phi).unwrap().is_none());
    }

    #[test]
    fn agrees_with_naive_enumeration() {
        for seed in 0..25 {
            let g = generate::random_subcubic(5, seed, 0.5).unwrap();
            for p in 1..=3 {
                for q in 1..=p.min(2) {
                    let phi = DemandMap::constant(g.n(), q);
                    let found = search_coloring(&g, p, &phi).unwrap();
                    if let Some(f) = &found {
                        assert_eq!(verify(&g, f, &phi), Ok(()));
                    }
                    assert_eq!(found.is_some(), naive_exists(&g, p, &phi), "seed {seed} p={p} q={q}");
                }
            }
        }
    }

    #[test]
    fn respects_fixed_sets() {
        let g = generate::cycle(4, true).unwrap();
        let phi = DemandMap::constant(4, 2);
        let mut fixed = vec![None; 4];
        fixed[2] = Some(ColorSet::new(3, &[-1, 3]).unwrap());
        let opts = SearchOptions {
            fixed,
            node_limit: None,
        };
        let f = search_coloring_with(&g, 3, &phi, &opts).unwrap().unwrap();
        assert_eq!(f.get(2), ColorSet::new(3, &[-1, 3]).unwrap());
        assert_eq!(verify(&g, &f, &phi), Ok(()));
    }
}
