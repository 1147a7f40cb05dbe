//! Exhaustive check of the extension templates on synthetic instances.
//!
//! Each configuration is built as a graph on its roles alone. Boundary sets
//! range over every shape up to one common signed permutation (the first
//! boundary set is pinned), and edge signs range over every signature of
//! the edges between non-fixed roles; edges to fixed roles stay negative,
//! which loses nothing since fixed sets are enumerated in full.

use std::collections::BTreeMap;

use super::config::ConfigKind;
use super::engine::{AuditOutcome, LocalInstance, P};
use super::pattern::{pattern, RoleKind};
use crate::color::{all_color_sets, proper_subset_pair, ColorSet};
use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph};

/// Outcome of auditing one claim.
#[derive(Debug, Clone, Default)]
pub struct ClaimReport {
    pub claim: u8,
    pub instances: usize,
    pub passed: usize,
    /// Instances settled by each `kind/case`.
    pub cases: BTreeMap<String, usize>,
    pub failed: usize,
    /// First few failures, for the report.
    pub failures: Vec<String>,
    /// Instances where an uncorrected template was checked, and
    /// how many of those it breaks.
    pub uncorrected_checked: usize,
    pub uncorrected_failed: usize,
}

impl ClaimReport {
    pub fn ok(&self) -> bool {
        self.failed == 0 && self.passed == self.instances
    }
}

const MAX_LISTED: usize = 10;

/// Candidate shrinkings of two boundary sets: the default pair first, then
/// every pair of one-element removals with distinct absolute sets.
pub(crate) fn candidate_pairs(a: ColorSet, b: ColorSet) -> Vec<(ColorSet, ColorSet)> {
    let mut out = Vec::new();
    if let Ok(p) = proper_subset_pair(a, b) {
        out.push(p);
    }
    for x in a.members() {
        for y in b.members() {
            let pair = (a.without(x), b.without(y));
            if pair.0.abs_mask() != pair.1.abs_mask() && !out.contains(&pair) {
                out.push(pair);
            }
        }
    }
    out
}

/// Boundary choices for one role: the pinned set or every set of a size.
enum Shape {
    Pinned(usize),
    All(usize),
}

impl Shape {
    fn sets(&self) -> Vec<ColorSet> {
        match *self {
            Shape::Pinned(k) => vec![ColorSet::first(P, k)],
            Shape::All(k) => all_color_sets(P, k),
        }
    }
}

struct Plan {
    kind: ConfigKind,
    /// Role and shape of every fixed or subset role.
    boundary: Vec<(usize, Shape)>,
    /// Fixed sets are raw and get shrunk by one color before use.
    shrink: bool,
}

fn plans(claim: u8) -> Result<Vec<Plan>> {
    use ConfigKind::*;
    use Shape::{All, Pinned};
    let pairs = |kind: ConfigKind, sizes: &[usize], shrink: bool| -> Vec<Plan> {
        let pat = pattern(kind);
        let (up, vp) = (pat.role("u'"), pat.role("v'"));
        let mut out = Vec::new();
        for &a in sizes {
            for &b in sizes {
                out.push(Plan {
                    kind,
                    boundary: vec![(up, Pinned(a)), (vp, All(b))],
                    shrink,
                });
            }
        }
        out
    };
    Ok(match claim {
        2 => [Cyc233, Cyc2323, Cyc2233]
            .into_iter()
            .flat_map(|k| pairs(k, &[3, 4], false))
            .collect(),
        3 => pairs(TwoTwoTwo, &[4, 5], true),
        4 => pairs(TwoTwo, &[4], true),
        5 => {
            let pat = pattern(TwoThreeTwo);
            [5, 4]
                .into_iter()
                .map(|k| Plan {
                    kind: TwoThreeTwo,
                    boundary: vec![
                        (pat.role("u'"), Pinned(3)),
                        (pat.role("v'"), All(3)),
                        (pat.role("w'"), All(k)),
                    ],
                    shrink: false,
                })
                .collect()
        }
        6 => [AdjTriangles, TriPlus2333, Two2333SharedPath]
            .into_iter()
            .flat_map(|k| pairs(k, &[4, 5], true))
            .collect(),
        7 | 8 => {
            let (kind, first) = if claim == 7 {
                (ThreeWithOneTwo, 5)
            } else {
                (PlainThreeVertex, 4)
            };
            vec![Plan {
                kind,
                boundary: vec![(1, Pinned(first)), (2, All(4)), (3, All(4))],
                shrink: false,
            }]
        }
        _ => return Err(Error::InvalidParam(format!("no claim {claim} to audit (2..=8)"))),
    })
}

/// Every signature of the edges between non-fixed roles.
fn signatures(kind: ConfigKind) -> Vec<SignedGraph> {
    let pat = pattern(kind);
    let inner: Vec<usize> = (0..pat.edges.len())
        .filter(|&i| {
            let (a, b) = pat.edges[i];
            pat.kinds[a] != RoleKind::Fixed && pat.kinds[b] != RoleKind::Fixed
        })
        .collect();
    (0..1u32 << inner.len())
        .map(|mask| {
            let edges: Vec<(usize, usize, Sign)> = pat
                .edges
                .iter()
                .enumerate()
                .map(|(i, &(a, b))| {
                    let minus = match inner.iter().position(|&j| j == i) {
                        Some(bit) => mask >> bit & 1 == 0,
                        None => true,
                    };
                    (a, b, if minus { Sign::Minus } else { Sign::Plus })
                })
                .collect();
            SignedGraph::from_edges(pat.roles.len(), &edges).expect("pattern edges are simple")
        })
        .collect()
}

fn demands(g: &SignedGraph, kind: ConfigKind, sets: &[Option<ColorSet>]) -> Vec<usize> {
    let pat = pattern(kind);
    (0..pat.roles.len())
        .map(|r| match pat.kinds[r] {
            RoleKind::Free => 6 - g.degree(r),
            // held sets come from a graph where the role lost one neighbor
            RoleKind::Subset => sets[r].map_or(0, |s| s.len() - 1),
            RoleKind::Fixed => 0,
        })
        .collect()
}

fn product(choices: &[Vec<ColorSet>]) -> Vec<Vec<ColorSet>> {
    let mut out = vec![Vec::new()];
    for opts in choices {
        let mut next = Vec::with_capacity(out.len() * opts.len());
        for prefix in &out {
            for &s in opts {
                let mut p = prefix.clone();
                p.push(s);
                next.push(p);
            }
        }
        out = next;
    }
    out
}

/// Runs the audit for one claim (2 to 8).
pub fn audit_claim(claim: u8) -> Result<ClaimReport> {
    let mut rep = ClaimReport {
        claim,
        ..ClaimReport::default()
    };
    for plan in plans(claim)? {
        let pat = pattern(plan.kind);
        let n = pat.roles.len();
        let choices: Vec<Vec<ColorSet>> = plan.boundary.iter().map(|(_, s)| s.sets()).collect();
        let shapes = product(&choices);
        for g in signatures(plan.kind) {
            for shape in &shapes {
                let mut raw: Vec<Option<ColorSet>> = vec![None; n];
                for ((r, _), &s) in plan.boundary.iter().zip(shape) {
                    raw[*r] = Some(s);
                }
                rep.instances += 1;
                let outcome = audit_one(&g, plan.kind, &raw, plan.shrink, &mut rep);
                match outcome {
                    AuditOutcome::Pass(case) => {
                        rep.passed += 1;
                        *rep.cases.entry(format!("{}/{}", plan.kind, case)).or_default() += 1;
                    }
                    bad => {
                        rep.failed += 1;
                        if rep.failures.len() < MAX_LISTED {
                            rep.failures.push(describe(&g, plan.kind, &raw, &bad));
                        }
                    }
                }
            }
        }
    }
    Ok(rep)
}

fn audit_one(
    g: &SignedGraph,
    kind: ConfigKind,
    raw: &[Option<ColorSet>],
    shrink: bool,
    rep: &mut ClaimReport,
) -> AuditOutcome {
    let pat = pattern(kind);
    let attempts: Vec<Vec<Option<ColorSet>>> = if shrink {
        let (up, vp) = (pat.role("u'"), pat.role("v'"));
        candidate_pairs(raw[up].expect("set"), raw[vp].expect("set"))
            .into_iter()
            .map(|(a, b)| {
                let mut s = raw.to_vec();
                s[up] = Some(a);
                s[vp] = Some(b);
                s
            })
            .collect()
    } else {
        vec![raw.to_vec()]
    };
    for sets in &attempts {
        let inst = LocalInstance {
            g,
            kind,
            roles: (0..pat.roles.len()).collect(),
            demand: demands(g, kind, sets),
            sets,
        };
        let out = inst.audit();
        if out == AuditOutcome::NoMatch {
            continue;
        }
        if let Some((_, old)) = inst.audit_uncorrected() {
            rep.uncorrected_checked += 1;
            if old.is_err() {
                rep.uncorrected_failed += 1;
            }
        }
        return out;
    }
    AuditOutcome::NoMatch
}

fn describe(g: &SignedGraph, kind: ConfigKind, raw: &[Option<ColorSet>], out: &AuditOutcome) -> String {
    let pat = pattern(kind);
    let signs: Vec<String> = pat
        .edges
        .iter()
        .map(|&(a, b)| {
            let s = g.sign(a, b).expect("pattern edge");
            format!("{}{}{}", pat.roles[a], pat.roles[b], s.symbol())
        })
        .collect();
    let sets: Vec<String> = raw
        .iter()
        .enumerate()
        .filter_map(|(r, s)| s.map(|s| format!("{}={s}", pat.roles[r])))
        .collect();
    format!("{kind} [{}] {}: {out:?}", signs.join(" "), sets.join(" "))
}
