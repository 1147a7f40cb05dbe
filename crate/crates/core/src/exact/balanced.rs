use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph};

pub const DEFAULT_LP_CAP: usize = 14;

/// Vertex cap for subset enumeration; `SG_LP_CAP` overrides the default.
pub fn lp_cap() -> usize {
    std::env::var("SG_LP_CAP")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_LP_CAP)
}

/// A list of balanced vertex sets, each sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BalancedSetFamily {
    pub sets: Vec<Vec<usize>>,
    pub maximal_only: bool,
}

/// Balance of the subgraph induced by `mask` (bit `v` for vertex `v`).
pub(crate) fn mask_is_balanced(g: &SignedGraph, mask: u64) -> bool {
    let n = g.n();
    let mut label: Vec<Option<Sign>> = vec![None; n];
    let mut stack = Vec::new();
    for root in 0..n {
        if mask >> root & 1 == 0 || label[root].is_some() {
            continue;
        }
        label[root] = Some(Sign::Plus);
        stack.push(root);
        while let Some(u) = stack.pop() {
            let lu = label[u].expect("labelled");
            for &(w, s) in g.neighbors(u) {
                if mask >> w & 1 == 0 {
                    continue;
                }
                match label[w] {
                    None => {
                        label[w] = Some(lu * s);
                        stack.push(w);
                    }
                    Some(lw) if lw != lu * s => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

fn bits_to_vec(mask: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

/// All inclusion-maximal balanced sets, in increasing bit-mask order.
pub fn enumerate_maximal_balanced_sets(g: &SignedGraph) -> Result<BalancedSetFamily> {
    enumerate_maximal_balanced_sets_with_cap(g, lp_cap())
}

pub fn enumerate_maximal_balanced_sets_with_cap(g: &SignedGraph, cap: usize) -> Result<BalancedSetFamily> {
    let n = g.n();
    if n > cap || n > 30 {
        return Err(Error::CapExceeded { n, cap: cap.min(30) });
    }
    let total = 1usize << n;
    let mut balanced = vec![false; total];
    for mask in 0..total {
        balanced[mask] = mask_is_balanced(g, mask as u64);
    }
    let mut sets = Vec::new();
    for mask in 0..total {
        if !balanced[mask] {
            continue;
        }
        // subset-closed, so one-vertex extensions decide maximality
        let maximal = (0..n).all(|v| mask >> v & 1 == 1 || !balanced[mask | 1 << v]);
        if maximal {
            sets.push(bits_to_vec(mask as u64, n));
        }
    }
    Ok(BalancedSetFamily {
        sets,
        maximal_only: true,
    })
}

/// Union-find with parities and undo log.
struct ParityDsu {
    parent: Vec<usize>,
    parity: Vec<bool>,
    size: Vec<usize>,
    log: Vec<Option<(usize, usize)>>,
}

impl ParityDsu {
    fn new(n: usize) -> ParityDsu {
        ParityDsu {
            parent: (0..n).collect(),
            parity: vec![false; n],
            size: vec![1; n],
            log: Vec::new(),
        }
    }

    /// Root and parity of `v` relative to it.
    fn find(&self, mut v: usize) -> (usize, bool) {
        let mut par = false;
        while self.parent[v] != v {
            par ^= self.parity[v];
            v = self.parent[v];
        }
        (v, par)
    }

    /// Requires `label(u) xor label(v) == odd`; false on contradiction.
    fn union(&mut self, u: usize, v: usize, odd: bool) -> bool {
        let (ru, pu) = self.find(u);
        let (rv, pv) = self.find(v);
        if ru == rv {
            self.log.push(None);
            return pu ^ pv == odd;
        }
        let (big, small) = if self.size[ru] >= self.size[rv] {
            (ru, rv)
        } else {
            (rv, ru)
        };
        self.parent[small] = big;
        self.parity[small] = pu ^ pv ^ odd;
        self.size[big] += self.size[small];
        self.log.push(Some((small, big)));
        true
    }

    fn undo(&mut self) {
        if let Some((small, big)) = self.log.pop().expect("undo matches union") {
            self.parent[small] = small;
            self.parity[small] = false;
            self.size[big] -= self.size[small];
        }
    }
}

/// Largest balanced vertex set and one witness.
pub fn beta(g: &SignedGraph) -> (usize, Vec<usize>) {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut st = BetaSearch {
        g,
        order,
        chosen: vec![false; n],
        count: 0,
        best: Vec::new(),
        dsu: ParityDsu::new(n),
    };
    st.go(0);
    let mut best = st.best;
    best.sort_unstable();
    debug_assert!(g.is_balanced_subset(&best));
    (best.len(), best)
}

struct BetaSearch<'a> {
    g: &'a SignedGraph,
    order: Vec<usize>,
    chosen: Vec<bool>,
    count: usize,
    best: Vec<usize>,
    dsu: ParityDsu,
}

impl BetaSearch<'_> {
    fn go(&mut self, i: usize) {
        if self.count + (self.order.len() - i) <= self.best.len() {
            return;
        }
        if i == self.order.len() {
            self.best = (0..self.chosen.len()).filter(|&v| self.chosen[v]).collect();
            return;
        }
        let v = self.order[i];
        let mut merged = 0;
        let mut ok = true;
        for &(w, s) in self.g.neighbors(v) {
            if !self.chosen[w] {
                continue;
            }
            merged += 1;
            if !self.dsu.union(v, w, s == Sign::Minus) {
                ok = false;
                break;
            }
        }
        if ok {
            self.chosen[v] = true;
            self.count += 1;
            self.go(i + 1);
            self.count -= 1;
            self.chosen[v] = false;
        }
        for _ in 0..merged {
            self.dsu.undo();
        }
        self.go(i + 1);
    }
}
