//! `(5, 6 - deg)`-colorings of subcubic signed graphs without bad blocks.

use std::fmt;

use super::audit::candidate_pairs;
use super::bad_blocks::detect_bad_blocks;
use super::config::{bridge_side, find_configuration, ConfigKind, Configuration};
use super::engine::{ExtensionPath, LocalInstance};
use super::pattern::{pattern, RoleKind};
use super::small::extend_pendant;
use crate::color::{verify, ColorSet, Coloring, DemandMap, SignedPermutation};
use crate::cycles::color_cycle_graph;
use crate::error::{Error, Result};
use crate::exact::search_coloring;
use crate::graph::{BalancedWitness, Sign, SignedGraph};

/// Largest graph handed to exhaustive search instead of being reduced.
pub const BASE_CASE_MAX: usize = 6;

/// One recursion step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    /// `base`, `cycle`, `bridge`, `pendant` or a configuration kind.
    pub kind: String,
    pub roles: String,
    pub before: usize,
    /// Vertex counts of the graphs recursed on.
    pub after: Vec<usize>,
    /// How a configuration was extended.
    pub path: Option<ExtensionPath>,
}

impl fmt::Display for TraceStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let after: Vec<String> = self.after.iter().map(usize::to_string).collect();
        let after = if after.is_empty() {
            "0".to_string()
        } else {
            after.join("+")
        };
        write!(
            f,
            "step {} roles={} n={}->{}",
            self.kind, self.roles, self.before, after
        )?;
        match &self.path {
            Some(ExtensionPath::Template(case)) => write!(f, " template={case}"),
            Some(ExtensionPath::Fallback) => write!(f, " fallback"),
            None => Ok(()),
        }
    }
}

/// `6 - deg(v)`, capped at 5 for isolated vertices.
pub fn theorem5_demands(g: &SignedGraph) -> DemandMap {
    DemandMap((0..g.n()).map(|v| (6 - g.degree(v).min(6)).min(5)).collect())
}

pub fn color_theorem5(g: &SignedGraph) -> Result<Coloring> {
    color_theorem5_traced(g).map(|(f, _)| f)
}

pub fn color_theorem5_traced(g: &SignedGraph) -> Result<(Coloring, Vec<TraceStep>)> {
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) > 3) {
        return Err(Error::NotSubcubic(v, g.degree(v)));
    }
    let bad = detect_bad_blocks(g);
    if !bad.is_empty() {
        let list: Vec<String> = bad.iter().map(|b| b.to_string()).collect();
        return Err(Error::BadBlock(list.join("; ")));
    }
    let mut trace = Vec::new();
    let sets = solve(g, &mut trace)?;
    let f = Coloring::new(5, sets)?;
    verify(g, &f, &theorem5_demands(g)).map_err(|v| Error::Internal(format!("final coloring: {v}")))?;
    Ok((f, trace))
}

fn check(g: &SignedGraph, sets: &[ColorSet], what: &str) -> Result<()> {
    let f = Coloring::new(5, sets.to_vec())?;
    verify(g, &f, &theorem5_demands(g)).map_err(|v| Error::Internal(format!("{what}: {v}")))
}

/// Colors a graph produced by a reduction, which must have no bad block.
fn recurse(h: &SignedGraph, why: &str, trace: &mut Vec<TraceStep>) -> Result<Vec<ColorSet>> {
    if let Some(b) = detect_bad_blocks(h).first() {
        return Err(Error::Internal(format!("{why} created a bad block {b}")));
    }
    solve(h, trace)
}

fn solve(g: &SignedGraph, trace: &mut Vec<TraceStep>) -> Result<Vec<ColorSet>> {
    let n = g.n();
    if n == 0 {
        return Ok(Vec::new());
    }
    let comps = g.components();
    if comps.len() > 1 {
        let mut sets = vec![ColorSet::empty(5); n];
        for comp in comps {
            let (h, back) = g.induced(&comp);
            for (i, s) in solve(&h, trace)?.into_iter().enumerate() {
                sets[back[i]] = s;
            }
        }
        return Ok(sets);
    }
    let step = |kind: &str, roles: String, after: Vec<usize>, path| TraceStep {
        kind: kind.to_string(),
        roles,
        before: n,
        after,
        path,
    };
    if n <= BASE_CASE_MAX {
        let f = search_coloring(g, 5, &theorem5_demands(g))?
            .ok_or_else(|| Error::Internal(format!("no base coloring on {n} vertices")))?;
        trace.push(step("base", String::new(), Vec::new(), None));
        return Ok(f.sets().to_vec());
    }
    if (0..n).all(|v| g.degree(v) == 2) {
        trace.push(step("cycle", String::new(), Vec::new(), None));
        return color_long_cycle(g);
    }
    let cfg = find_configuration(g)?.ok_or_else(|| Error::Internal("no reducible configuration found".into()))?;
    let sets = match cfg.kind {
        // a pendant edge comes as (neighbor, degree-1 end)
        ConfigKind::Deg1OrBridge if g.degree(cfg.roles[1]) == 1 => pendant(g, &cfg, trace, &step)?,
        ConfigKind::Deg1OrBridge => bridge(g, &cfg, trace, &step)?,
        _ => reduce(g, &cfg, trace, &step)?,
    };
    check(g, &sets, &format!("after {} at {}", cfg.kind, cfg.describe()))?;
    Ok(sets)
}

fn color_long_cycle(g: &SignedGraph) -> Result<Vec<ColorSet>> {
    let n = g.n();
    if let BalancedWitness::Switching(s) = g.balance_check() {
        let base = ColorSet::first(5, 4);
        return Ok((0..n)
            .map(|v| if s[v] == Sign::Minus { base.neg() } else { base })
            .collect());
    }
    let f = color_cycle_graph(g, 5, 4)?.ok_or_else(|| Error::Internal("cycle without a (5,4)-coloring".into()))?;
    Ok(f.sets().to_vec())
}

type StepFn<'a> = dyn Fn(&str, String, Vec<usize>, Option<ExtensionPath>) -> TraceStep + 'a;

fn pendant(g: &SignedGraph, cfg: &Configuration, trace: &mut Vec<TraceStep>, step: &StepFn) -> Result<Vec<ColorSet>> {
    let (u, v) = (cfg.roles[0], cfg.roles[1]);
    let (h, back) = g.delete_vertices(&[v]);
    trace.push(step("pendant", cfg.describe(), vec![h.n()], None));
    let fh = recurse(&h, "removing a pendant vertex", trace)?;
    let mut partial: Vec<Option<ColorSet>> = vec![None; g.n()];
    for (i, &x) in back.iter().enumerate() {
        partial[x] = Some(fh[i]);
    }
    partial[u] = partial[u].map(|s| s.take(6 - g.degree(u)));
    partial[v] = Some(extend_pendant(g, &partial, v, 5)?);
    Ok(partial.into_iter().map(|s| s.expect("all colored")).collect())
}

/// Colors both sides of the bridge `ab` (each with the other end attached)
/// and aligns the `b` side to the `a` side by a signed permutation.
fn bridge(g: &SignedGraph, cfg: &Configuration, trace: &mut Vec<TraceStep>, step: &StepFn) -> Result<Vec<ColorSet>> {
    let (a, b) = (cfg.roles[0], cfg.roles[1]);
    let side_a = bridge_side(g, b, a);
    let side_b = bridge_side(g, a, b);
    let with = |side: &[usize], extra: usize| {
        let mut vs = side.to_vec();
        vs.push(extra);
        vs.sort_unstable();
        g.induced(&vs)
    };
    let (ga, back_a) = with(&side_a, b);
    let (gb, back_b) = with(&side_b, a);
    trace.push(step("bridge", cfg.describe(), vec![ga.n(), gb.n()], None));
    let fa = recurse(&ga, "splitting at a bridge", trace)?;
    let fb = recurse(&gb, "splitting at a bridge", trace)?;
    let pos = |back: &[usize], x: usize| back.iter().position(|&y| y == x).expect("present");
    let fb_b = fb[pos(&back_b, b)];
    let target = fa[pos(&back_a, b)].take(fb_b.len());
    let pi = SignedPermutation::mapping(5, fb_b, target)?;
    let mut sets = vec![ColorSet::empty(5); g.n()];
    for (i, &x) in back_a.iter().enumerate() {
        if x != b {
            sets[x] = fa[i];
        }
    }
    for (i, &x) in back_b.iter().enumerate() {
        if x != a {
            sets[x] = pi.apply_set(fb[i]);
        }
    }
    Ok(sets)
}

/// Vertices deleted and edge cut by the reduction of a configuration.
fn deletion(cfg: &Configuration) -> (Vec<usize>, Option<(usize, usize)>) {
    use ConfigKind::*;
    let r = |name: &str| cfg.role(name);
    match cfg.kind {
        Cyc233 => (vec![r("w")], Some((r("u"), r("v")))),
        Cyc2233 => (vec![r("w1"), r("w2")], Some((r("u"), r("v")))),
        Cyc2323 => (vec![r("w1"), r("w2")], None),
        TwoThreeTwo => (vec![r("w")], None),
        ThreeWithOneTwo | PlainThreeVertex => (vec![r("v")], None),
        _ => {
            let pat = pattern(cfg.kind);
            let free = (0..pat.roles.len())
                .filter(|&i| pat.kinds[i] == RoleKind::Free)
                .map(|i| cfg.roles[i])
                .collect();
            (free, None)
        }
    }
}

/// Uses the boundary shrinking of a proper subset pair.
fn shrinks(kind: ConfigKind) -> bool {
    use ConfigKind::*;
    matches!(
        kind,
        TwoTwoTwo | TwoTwo | AdjTriangles | TriPlus2333 | Two2333SharedPath
    )
}

fn reduce(g: &SignedGraph, cfg: &Configuration, trace: &mut Vec<TraceStep>, step: &StepFn) -> Result<Vec<ColorSet>> {
    let (removed, cut) = deletion(cfg);
    let keep: Vec<usize> = (0..g.n()).filter(|v| !removed.contains(v)).collect();
    let (mut h, back) = g.induced(&keep);
    if let Some((u, v)) = cut {
        let (hu, hv) = (
            keep.binary_search(&u).expect("kept"),
            keep.binary_search(&v).expect("kept"),
        );
        let edges: Vec<_> = h
            .edges()
            .into_iter()
            .filter(|&(a, b, _)| (a, b) != (hu.min(hv), hu.max(hv)))
            .collect();
        h = SignedGraph::from_edges(h.n(), &edges)?;
    }
    let idx = trace.len();
    trace.push(step(&cfg.kind.to_string(), cfg.describe(), vec![h.n()], None));
    let fh = recurse(&h, &format!("reducing {}", cfg.kind), trace)?;
    let mut sets: Vec<Option<ColorSet>> = vec![None; g.n()];
    for (i, &x) in back.iter().enumerate() {
        sets[x] = Some(fh[i]);
    }

    let pat = pattern(cfg.kind);
    let demand: Vec<usize> = (0..pat.roles.len())
        .map(|i| match pat.kinds[i] {
            RoleKind::Fixed => 0,
            _ => 6 - g.degree(cfg.roles[i]),
        })
        .collect();
    let attempts: Vec<Vec<Option<ColorSet>>> = if shrinks(cfg.kind) {
        let (up, vp) = (cfg.role("u'"), cfg.role("v'"));
        let (a, b) = (sets[up].expect("colored"), sets[vp].expect("colored"));
        candidate_pairs(a, b)
            .into_iter()
            .map(|(x, y)| {
                let mut s = sets.clone();
                s[up] = Some(x);
                s[vp] = Some(y);
                s
            })
            .collect()
    } else {
        vec![sets]
    };
    let mut chosen = None;
    for s in &attempts {
        let inst = LocalInstance {
            g,
            kind: cfg.kind,
            roles: cfg.roles.clone(),
            demand: demand.clone(),
            sets: s,
        };
        if let Some((case, assign)) = inst.template() {
            chosen = Some((s.clone(), assign, ExtensionPath::Template(case)));
            break;
        }
    }
    if chosen.is_none() {
        for s in &attempts {
            let inst = LocalInstance {
                g,
                kind: cfg.kind,
                roles: cfg.roles.clone(),
                demand: demand.clone(),
                sets: s,
            };
            if let Some(assign) = inst.fallback() {
                chosen = Some((s.clone(), assign, ExtensionPath::Fallback));
                break;
            }
        }
    }
    let (mut sets, assign, path) =
        chosen.ok_or_else(|| Error::Internal(format!("no extension over {} at {}", cfg.kind, cfg.describe())))?;
    for (v, s) in assign {
        sets[v] = Some(s);
    }
    trace[idx].path = Some(path);
    sets.into_iter()
        .enumerate()
        .map(|(v, s)| s.ok_or_else(|| Error::Internal(format!("vertex {v} left uncolored"))))
        .collect()
}
