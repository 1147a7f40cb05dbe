use std::fmt;

use super::pattern::pattern;
use crate::blocks::block_decompose;
use crate::error::{Error, Result};
use crate::graph::SignedGraph;

/// Reducible configurations, in the order they are looked for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConfigKind {
    Deg1OrBridge,
    Cyc233,
    Cyc2323,
    Cyc2233,
    TwoTwoTwo,
    TwoTwo,
    TwoThreeTwo,
    AdjTriangles,
    TriPlus2333,
    Two2333SharedPath,
    ThreeWithOneTwo,
    PlainThreeVertex,
}

impl ConfigKind {
    pub const ALL: [ConfigKind; 12] = [
        ConfigKind::Deg1OrBridge,
        ConfigKind::Cyc233,
        ConfigKind::Cyc2323,
        ConfigKind::Cyc2233,
        ConfigKind::TwoTwoTwo,
        ConfigKind::TwoTwo,
        ConfigKind::TwoThreeTwo,
        ConfigKind::AdjTriangles,
        ConfigKind::TriPlus2333,
        ConfigKind::Two2333SharedPath,
        ConfigKind::ThreeWithOneTwo,
        ConfigKind::PlainThreeVertex,
    ];

    /// Number of the claim that reduces this configuration.
    pub fn claim(self) -> u8 {
        use ConfigKind::*;
        match self {
            Deg1OrBridge => 1,
            Cyc233 | Cyc2323 | Cyc2233 => 2,
            TwoTwoTwo => 3,
            TwoTwo => 4,
            TwoThreeTwo => 5,
            AdjTriangles | TriPlus2333 | Two2333SharedPath => 6,
            ThreeWithOneTwo => 7,
            PlainThreeVertex => 8,
        }
    }

    pub fn role_names(self) -> &'static [&'static str] {
        match self {
            ConfigKind::Deg1OrBridge => &["u", "v"],
            k => pattern(k).roles,
        }
    }
}

impl fmt::Display for ConfigKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A matched configuration. `roles[i]` is the vertex playing role
/// `kind.role_names()[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Configuration {
    pub kind: ConfigKind,
    pub roles: Vec<usize>,
}

impl Configuration {
    pub fn role(&self, name: &str) -> usize {
        let i = self
            .kind
            .role_names()
            .iter()
            .position(|r| *r == name)
            .unwrap_or_else(|| panic!("{} has no role {name}", self.kind));
        self.roles[i]
    }

    pub fn describe(&self) -> String {
        self.kind
            .role_names()
            .iter()
            .zip(&self.roles)
            .map(|(r, v)| format!("{r}={v}"))
            .collect::<Vec<_>>()
            .join(",")
    }
}

fn distinct(vs: &[usize]) -> bool {
    vs.iter().enumerate().all(|(i, a)| vs[..i].iter().all(|b| a != b))
}

fn nbrs(g: &SignedGraph, v: usize) -> Vec<usize> {
    g.neighbors(v).iter().map(|&(w, _)| w).collect()
}

/// The neighbor of `v` outside `skip`, if exactly one.
fn other(g: &SignedGraph, v: usize, skip: &[usize]) -> Option<usize> {
    let rest: Vec<usize> = nbrs(g, v).into_iter().filter(|w| !skip.contains(w)).collect();
    (rest.len() == 1).then(|| rest[0])
}

/// Size of the side of bridge `(a, b)` that contains `b`.
pub(crate) fn bridge_side(g: &SignedGraph, a: usize, b: usize) -> Vec<usize> {
    let mut seen = vec![false; g.n()];
    seen[a] = true;
    seen[b] = true;
    let mut stack = vec![b];
    let mut side = vec![b];
    while let Some(x) = stack.pop() {
        for &(y, _) in g.neighbors(x) {
            if !seen[y] {
                seen[y] = true;
                side.push(y);
                stack.push(y);
            }
        }
    }
    side.sort_unstable();
    side
}

/// First configuration in priority order. Bridges with two sides of at
/// least two vertices come before pendant edges. `None` means there is no
/// bridge and no vertex of degree 3 (a cycle or a single vertex), or that
/// nothing matched.
pub fn find_configuration(g: &SignedGraph) -> Result<Option<Configuration>> {
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) > 3) {
        return Err(Error::NotSubcubic(v, g.degree(v)));
    }
    if let Some(c) = find_bridge(g) {
        return Ok(Some(c));
    }
    if (0..g.n()).all(|v| g.degree(v) < 3) {
        return Ok(None);
    }
    for kind in &ConfigKind::ALL[1..] {
        if let Some(roles) = match_kind(g, *kind) {
            return Ok(Some(Configuration { kind: *kind, roles }));
        }
    }
    Ok(None)
}

fn find_bridge(g: &SignedGraph) -> Option<Configuration> {
    let bd = block_decompose(g);
    let mut pendant = None;
    for &(a, b) in &bd.bridges {
        let sb = bridge_side(g, a, b).len();
        let sa = bridge_side(g, b, a).len();
        if sa >= 2 && sb >= 2 {
            return Some(Configuration {
                kind: ConfigKind::Deg1OrBridge,
                roles: vec![a, b],
            });
        }
        if pendant.is_none() {
            // roles: u is the neighbor, v the degree-1 end
            pendant = Some(if g.degree(b) == 1 { vec![a, b] } else { vec![b, a] });
        }
    }
    pendant.map(|roles| Configuration {
        kind: ConfigKind::Deg1OrBridge,
        roles,
    })
}

pub(crate) fn match_kind(g: &SignedGraph, kind: ConfigKind) -> Option<Vec<usize>> {
    let d = |v: usize| g.degree(v);
    let n = g.n();
    use ConfigKind::*;
    for x in 0..n {
        let nx = nbrs(g, x);
        let found: Option<Vec<usize>> = match kind {
            Deg1OrBridge => None,
            Cyc233 => {
                // x = w
                if d(x) != 2 || !g.has_edge(nx[0], nx[1]) {
                    continue;
                }
                let (u, v) = (nx[0], nx[1]);
                if d(u) != 3 || d(v) != 3 {
                    continue;
                }
                let (Some(up), Some(vp)) = (other(g, u, &[v, x]), other(g, v, &[u, x])) else {
                    continue;
                };
                Some(vec![u, v, x, up, vp])
            }
            Cyc2323 | Cyc2233 | AdjTriangles | Two2333SharedPath => first_match(kind, g, x),
            TwoTwoTwo => {
                // x = w
                if d(x) != 2 || d(nx[0]) != 2 || d(nx[1]) != 2 {
                    continue;
                }
                let (u, v) = (nx[0], nx[1]);
                let (Some(up), Some(vp)) = (other(g, u, &[x]), other(g, v, &[x])) else {
                    continue;
                };
                Some(vec![u, x, v, up, vp])
            }
            TwoTwo => {
                if d(x) != 2 {
                    continue;
                }
                let mut hit = None;
                for &v in &nx {
                    if v <= x || d(v) != 2 {
                        continue;
                    }
                    if let (Some(up), Some(vp)) = (other(g, x, &[v]), other(g, v, &[x])) {
                        let roles = vec![x, v, up, vp];
                        if distinct(&roles) {
                            hit = Some(roles);
                            break;
                        }
                    }
                }
                hit
            }
            TwoThreeTwo => {
                // x = w
                if d(x) != 3 {
                    continue;
                }
                let twos: Vec<usize> = nx.iter().copied().filter(|&y| d(y) == 2).collect();
                if twos.len() < 2 {
                    continue;
                }
                let mut hit = None;
                'pairs: for i in 0..twos.len() {
                    for j in i + 1..twos.len() {
                        let (u, v) = (twos[i], twos[j]);
                        let wp = *nx.iter().find(|&&y| y != u && y != v).expect("degree 3");
                        if let (Some(up), Some(vp)) = (other(g, u, &[x]), other(g, v, &[x])) {
                            let roles = vec![x, u, v, wp, up, vp];
                            if distinct(&roles) {
                                hit = Some(roles);
                                break 'pairs;
                            }
                        }
                    }
                }
                hit
            }
            TriPlus2333 => first_match(kind, g, x),
            ThreeWithOneTwo => {
                if d(x) != 3 {
                    continue;
                }
                let twos: Vec<usize> = nx.iter().copied().filter(|&y| d(y) == 2).collect();
                let threes: Vec<usize> = nx.iter().copied().filter(|&y| d(y) == 3).collect();
                (twos.len() == 1 && threes.len() == 2).then(|| vec![x, twos[0], threes[0], threes[1]])
            }
            PlainThreeVertex => (d(x) == 3 && nx.iter().all(|&y| d(y) == 3)).then(|| vec![x, nx[0], nx[1], nx[2]]),
        };
        if let Some(roles) = found {
            if distinct(&roles) && degrees_ok(g, kind, &roles) {
                return Some(roles);
            }
        }
    }
    None
}

/// Required degrees of the recolored roles.
fn degrees_ok(g: &SignedGraph, kind: ConfigKind, roles: &[usize]) -> bool {
    let pat = pattern(kind);
    let want: &[usize] = match kind {
        ConfigKind::Cyc233 => &[3, 3, 2],
        ConfigKind::Cyc2323 | ConfigKind::Cyc2233 => &[3, 3, 2, 2],
        ConfigKind::TwoTwoTwo => &[2, 2, 2],
        ConfigKind::TwoTwo => &[2, 2],
        ConfigKind::TwoThreeTwo => &[3, 2, 2],
        ConfigKind::AdjTriangles => &[3, 3, 3, 3],
        ConfigKind::TriPlus2333 | ConfigKind::Two2333SharedPath => &[3, 3, 2, 3, 3],
        ConfigKind::ThreeWithOneTwo => &[3, 2, 3, 3],
        ConfigKind::PlainThreeVertex => &[3, 3, 3, 3],
        ConfigKind::Deg1OrBridge => &[],
    };
    if want.iter().zip(roles).any(|(&k, &v)| g.degree(v) != k) {
        return false;
    }
    // every pattern edge is present
    pat.edges.iter().all(|&(a, b)| g.has_edge(roles[a], roles[b]))
}

/// Patterns matched by trying every choice of role vertices around `x`,
/// which plays the first role. Roles are placed in breadth-first order
/// over the pattern edges so each new role has a placed neighbor.
fn first_match(kind: ConfigKind, g: &SignedGraph, x: usize) -> Option<Vec<usize>> {
    let pat = pattern(kind);
    let k = pat.roles.len();
    let mut order = vec![0usize];
    while order.len() < k {
        let next = (0..k)
            .find(|r| !order.contains(r) && order.iter().any(|&o| pat.has_edge(o, *r)))
            .expect("pattern is connected");
        order.push(next);
    }
    let mut roles = vec![usize::MAX; k];
    roles[0] = x;
    extend(g, kind, &order, &mut roles, 1)
}

fn extend(g: &SignedGraph, kind: ConfigKind, order: &[usize], roles: &mut Vec<usize>, i: usize) -> Option<Vec<usize>> {
    if i == order.len() {
        return (distinct(roles) && degrees_ok(g, kind, roles)).then(|| roles.clone());
    }
    let pat = pattern(kind);
    let r = order[i];
    let placed = &order[..i];
    let anchor = *placed.iter().find(|&&o| pat.has_edge(o, r)).expect("bfs order");
    let mut cands = nbrs(g, roles[anchor]);
    cands.sort_unstable();
    for c in cands {
        if roles.contains(&c) {
            continue;
        }
        if placed.iter().any(|&o| pat.has_edge(o, r) && !g.has_edge(c, roles[o])) {
            continue;
        }
        roles[r] = c;
        if let Some(found) = extend(g, kind, order, roles, i + 1) {
            return Some(found);
        }
    }
    roles[r] = usize::MAX;
    None
}
