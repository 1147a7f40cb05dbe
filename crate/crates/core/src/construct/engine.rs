//! Local extension of a partial coloring over the roles of a configuration.
//!
//! Every role is `Fixed` (keeps its set), `Subset` (keeps a subset of its
//! set) or `Free` (any set inside its available set). A template is tried
//! under every role automorphism, every switching of the non-fixed roles
//! and every frame; the first instantiation that passes validation wins.

use std::sync::OnceLock;

use super::config::ConfigKind;
use super::pattern::{pattern, Case, Fam, Pattern, RoleKind, Template, Tok};
use crate::color::{all_color_sets, ColorSet, SignedSet};
use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph};

pub(crate) const P: usize = 5;

/// A relabeling of `±[5]`: frame value `i` stands for the concrete absolute
/// value `pi[i-1]`, and each letter family reads from one source set.
#[derive(Debug, Clone)]
pub struct Frame {
    pi: [u8; P],
    src: [SignedSet; 4],
}

fn fam_index(f: Fam) -> usize {
    match f {
        Fam::A => 0,
        Fam::B => 1,
        Fam::C => 2,
        Fam::D => 3,
    }
}

impl Frame {
    pub fn image(&self, i: u8) -> u8 {
        self.pi[i as usize - 1]
    }

    /// The element of the source with absolute value `image(i)`, preferring `+`.
    pub fn letter(&self, f: Fam, i: u8) -> Option<i8> {
        let s = self.src[fam_index(f)];
        let c = self.image(i) as i8;
        if s.contains(c) {
            Some(c)
        } else if s.contains(-c) {
            Some(-c)
        } else {
            None
        }
    }

    pub fn doubled(&self, f: Fam, i: u8) -> bool {
        let s = self.src[fam_index(f)];
        let c = self.image(i) as i8;
        s.contains(c) && s.contains(-c)
    }

    pub fn len(&self, f: Fam) -> usize {
        self.src[fam_index(f)].len()
    }

    fn frame_mask(&self, vals: &[u8]) -> u16 {
        vals.iter().fold(0u16, |m, &i| m | 1 << (self.image(i) - 1))
    }

    /// The absolute values of the source are exactly the images of `vals`.
    pub fn abs_is(&self, f: Fam, vals: &[u8]) -> bool {
        self.src[fam_index(f)].abs_mask() == self.frame_mask(vals)
    }

    pub fn abs_contains(&self, f: Fam, vals: &[u8]) -> bool {
        let m = self.frame_mask(vals);
        self.src[fam_index(f)].abs_mask() & m == m
    }

    pub fn same(&self, f: Fam, i: u8, g: Fam, j: u8) -> bool {
        matches!((self.letter(f, i), self.letter(g, j)), (Some(a), Some(b)) if a == b)
    }

    pub fn opposite(&self, f: Fam, i: u8, g: Fam, j: u8) -> bool {
        matches!((self.letter(f, i), self.letter(g, j)), (Some(a), Some(b)) if a == -b)
    }

    fn token(&self, t: Tok) -> Option<i8> {
        match t {
            Tok::P(f, i) => self.letter(f, i),
            Tok::N(f, i) => self.letter(f, i).map(|c| -c),
            Tok::K(i) => Some(self.image(i) as i8),
        }
    }
}

fn all_perms() -> &'static [[u8; P]] {
    static PERMS: OnceLock<Vec<[u8; P]>> = OnceLock::new();
    PERMS.get_or_init(|| {
        let mut out = Vec::with_capacity(120);
        fn go(cur: &mut Vec<u8>, out: &mut Vec<[u8; P]>) {
            if cur.len() == P {
                out.push(cur.as_slice().try_into().expect("length 5"));
                return;
            }
            for x in 1..=P as u8 {
                if !cur.contains(&x) {
                    cur.push(x);
                    go(cur, out);
                    cur.pop();
                }
            }
        }
        go(&mut Vec::new(), &mut out);
        out
    })
}

/// Role permutations preserving kinds and pattern edges, identity first.
fn automorphisms(kind: ConfigKind) -> &'static [Vec<usize>] {
    static AUTOS: OnceLock<Vec<Vec<Vec<usize>>>> = OnceLock::new();
    let all = AUTOS.get_or_init(|| {
        ConfigKind::ALL
            .iter()
            .map(|&k| {
                if k == ConfigKind::Deg1OrBridge {
                    return Vec::new();
                }
                let pat = pattern(k);
                let n = pat.roles.len();
                let mut out = Vec::new();
                fn go(pat: &Pattern, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
                    if cur.len() == n {
                        let ok = (0..n).all(|a| (0..n).all(|b| pat.has_edge(a, b) == pat.has_edge(cur[a], cur[b])));
                        if ok {
                            out.push(cur.clone());
                        }
                        return;
                    }
                    for x in 0..n {
                        if !cur.contains(&x) && pat.kinds[x] == pat.kinds[cur.len()] {
                            cur.push(x);
                            go(pat, n, cur, out);
                            cur.pop();
                        }
                    }
                }
                go(pat, n, &mut Vec::new(), &mut out);
                out
            })
            .collect()
    });
    let i = ConfigKind::ALL.iter().position(|&k| k == kind).expect("listed");
    &all[i]
}

/// Which route produced an extension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtensionPath {
    Template(&'static str),
    Fallback,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extension {
    /// New sets for the non-fixed roles, by vertex.
    pub assign: Vec<(usize, ColorSet)>,
    pub path: ExtensionPath,
}

/// Result of looking for a template in audit mode.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AuditOutcome {
    /// The first matching case verified.
    Pass(&'static str),
    /// No case hypothesis held in any frame.
    NoMatch,
    /// The first matching case produced an invalid extension.
    Fail { case: &'static str, reason: String },
}

/// One configuration inside a partially colored graph.
pub struct LocalInstance<'a> {
    pub g: &'a SignedGraph,
    pub kind: ConfigKind,
    /// Vertex of each role, in pattern order.
    pub roles: Vec<usize>,
    /// Number of colors wanted at each non-fixed role.
    pub demand: Vec<usize>,
    /// Current sets of the colored vertices of `g`.
    pub sets: &'a [Option<ColorSet>],
}

struct View {
    verts: Vec<usize>,
    kinds: Vec<RoleKind>,
    demand: Vec<usize>,
    /// Concrete source per role: available set or held set.
    source: Vec<SignedSet>,
}

impl LocalInstance<'_> {
    fn pattern(&self) -> &'static Pattern {
        pattern(self.kind)
    }

    fn is_moving(&self, v: usize) -> bool {
        let pat = self.pattern();
        self.roles
            .iter()
            .zip(pat.kinds)
            .any(|(&x, &k)| x == v && k != RoleKind::Fixed)
    }

    /// `±[5]` minus what the colored, non-moving neighbors forbid.
    pub fn available(&self, v: usize) -> SignedSet {
        let mut a = SignedSet::all(P);
        for &(y, s) in self.g.neighbors(v) {
            if self.is_moving(y) {
                continue;
            }
            if let Some(fy) = self.sets[y] {
                let forbidden = match s {
                    Sign::Minus => fy.signed(),
                    Sign::Plus => fy.neg().signed(),
                };
                a = a.minus(forbidden);
            }
        }
        a
    }

    fn view(&self, alpha: &[usize]) -> View {
        let pat = self.pattern();
        let verts: Vec<usize> = alpha.iter().map(|&r| self.roles[r]).collect();
        let demand: Vec<usize> = alpha.iter().map(|&r| self.demand[r]).collect();
        let source = (0..verts.len())
            .map(|r| match pat.kinds[r] {
                RoleKind::Free => self.available(verts[r]),
                RoleKind::Subset | RoleKind::Fixed => self.sets[verts[r]].map(|s| s.signed()).unwrap_or_default(),
            })
            .collect();
        View {
            verts,
            kinds: pat.kinds.to_vec(),
            demand,
            source,
        }
    }

    fn frame(&self, view: &View, flip: &[bool], pi: [u8; P]) -> Frame {
        let mut src = [SignedSet::default(); 4];
        for &(f, r) in self.pattern().families {
            src[fam_index(f)] = if flip[r] { view.source[r].neg() } else { view.source[r] };
        }
        Frame { pi, src }
    }

    fn signs_match(&self, view: &View, flip: &[bool], case: &Case) -> bool {
        case.signs.iter().all(|&(a, b, want)| {
            let Some(s) = self.g.sign(view.verts[a], view.verts[b]) else {
                return false;
            };
            let s = if flip[a] != flip[b] { -s } else { s };
            s == want
        })
    }

    /// Instantiates `template` and checks it; returns the concrete sets.
    fn instantiate(
        &self,
        view: &View,
        flip: &[bool],
        frame: &Frame,
        template: Template,
    ) -> std::result::Result<Vec<(usize, ColorSet)>, String> {
        let n = view.verts.len();
        let mut new: Vec<Option<ColorSet>> = vec![None; n];
        for &(r, toks) in template {
            let mut cs = Vec::with_capacity(toks.len());
            for &t in toks {
                let c = frame.token(t).ok_or_else(|| format!("letter {t:?} missing"))?;
                cs.push(if flip[r] { -c } else { c });
            }
            let set = ColorSet::new(P, &cs).map_err(|e| format!("role {}: {e}", self.pattern().roles[r]))?;
            if set.len() != cs.len() {
                return Err(format!("role {}: repeated color", self.pattern().roles[r]));
            }
            new[r] = Some(set);
        }
        for r in 0..n {
            let name = self.pattern().roles[r];
            match (view.kinds[r], new[r]) {
                (RoleKind::Fixed, _) => {}
                (_, None) => return Err(format!("role {name} not colored")),
                (kind, Some(s)) => {
                    if s.len() != view.demand[r] {
                        return Err(format!("role {name} got {} colors, wants {}", s.len(), view.demand[r]));
                    }
                    if !s.is_subset_of(view.source[r]) {
                        let what = if kind == RoleKind::Free { "available" } else { "held" };
                        return Err(format!("role {name}: {s} not inside {what} set"));
                    }
                }
            }
        }
        let set_of = |r: usize| new[r].or(self.sets[view.verts[r]]);
        for a in 0..n {
            for b in a + 1..n {
                let Some(s) = self.g.sign(view.verts[a], view.verts[b]) else {
                    continue;
                };
                let (Some(x), Some(y)) = (set_of(a), set_of(b)) else {
                    continue;
                };
                let bad = match s {
                    Sign::Minus => x.intersects(y.signed()),
                    Sign::Plus => x.intersects(y.neg().signed()),
                };
                if bad {
                    let roles = self.pattern().roles;
                    return Err(format!(
                        "edge {}{} ({}) violated by {x} and {y}",
                        roles[a],
                        roles[b],
                        s.symbol()
                    ));
                }
            }
        }
        Ok((0..n).filter_map(|r| new[r].map(|s| (view.verts[r], s))).collect())
    }

    fn flips(&self, view: &View) -> Vec<Vec<bool>> {
        let movable: Vec<usize> = (0..view.verts.len())
            .filter(|&r| view.kinds[r] != RoleKind::Fixed)
            .collect();
        let mut masks: Vec<u32> = (0..1u32 << movable.len()).collect();
        masks.sort_by_key(|m| (m.count_ones(), *m));
        masks
            .into_iter()
            .map(|m| {
                let mut flip = vec![false; view.verts.len()];
                for (i, &r) in movable.iter().enumerate() {
                    flip[r] = m >> i & 1 == 1;
                }
                flip
            })
            .collect()
    }

    /// Visits every (automorphism, switching, case, frame) whose sign
    /// requirements and hypothesis hold, in the fixed search order, until
    /// `visit` returns `Some`.
    fn scan<T>(&self, mut visit: impl FnMut(&View, &[bool], &Frame, &'static Case) -> Option<T>) -> Option<T> {
        let pat = self.pattern();
        for alpha in automorphisms(self.kind) {
            let view = self.view(alpha);
            for flip in self.flips(&view) {
                for case in pat.cases {
                    if !self.signs_match(&view, &flip, case) {
                        continue;
                    }
                    for &pi in all_perms() {
                        let frame = self.frame(&view, &flip, pi);
                        if (case.hyp)(&frame) {
                            if let Some(t) = visit(&view, &flip, &frame, case) {
                                return Some(t);
                            }
                        }
                    }
                }
            }
        }
        None
    }

    /// The first template instantiation that validates.
    pub fn template(&self) -> Option<(&'static str, Vec<(usize, ColorSet)>)> {
        self.scan(|view, flip, frame, case| {
            self.instantiate(view, flip, frame, case.template)
                .ok()
                .map(|a| (case.name, a))
        })
    }

    /// Audit mode: only the first hypothesis match counts.
    pub fn audit(&self) -> AuditOutcome {
        self.scan(|view, flip, frame, case| {
            Some(match self.instantiate(view, flip, frame, case.template) {
                Ok(_) => AuditOutcome::Pass(case.name),
                Err(reason) => AuditOutcome::Fail {
                    case: case.name,
                    reason,
                },
            })
        })
        .unwrap_or(AuditOutcome::NoMatch)
    }

    /// Same as [`audit`](Self::audit), for the uncorrected version of cases
    /// that carry a correction. `None` when no such case matches first.
    pub fn audit_uncorrected(&self) -> Option<(&'static str, std::result::Result<(), String>)> {
        self.scan(|view, flip, frame, case| {
            Some(
                case.uncorrected
                    .map(|t| (case.name, self.instantiate(view, flip, frame, t).map(|_| ()))),
            )
        })
        .flatten()
    }

    /// Exhaustive search over the non-fixed roles.
    pub fn fallback(&self) -> Option<Vec<(usize, ColorSet)>> {
        let alpha: Vec<usize> = (0..self.roles.len()).collect();
        let view = self.view(&alpha);
        let order: Vec<usize> = (0..view.verts.len())
            .filter(|&r| view.kinds[r] != RoleKind::Fixed)
            .collect();
        let cands: Vec<Vec<ColorSet>> = order
            .iter()
            .map(|&r| {
                all_color_sets(P, view.demand[r])
                    .into_iter()
                    .filter(|s| s.is_subset_of(view.source[r]))
                    .collect()
            })
            .collect();
        let mut chosen: Vec<ColorSet> = Vec::with_capacity(order.len());
        fn go(
            g: &SignedGraph,
            view: &View,
            order: &[usize],
            cands: &[Vec<ColorSet>],
            chosen: &mut Vec<ColorSet>,
        ) -> bool {
            let i = chosen.len();
            if i == order.len() {
                return true;
            }
            let v = view.verts[order[i]];
            for &s in &cands[i] {
                let ok = (0..i).all(|j| match g.sign(v, view.verts[order[j]]) {
                    None => true,
                    Some(Sign::Minus) => !s.intersects(chosen[j].signed()),
                    Some(Sign::Plus) => !s.intersects(chosen[j].neg().signed()),
                });
                if ok {
                    chosen.push(s);
                    if go(g, view, order, cands, chosen) {
                        return true;
                    }
                    chosen.pop();
                }
            }
            false
        }
        go(self.g, &view, &order, &cands, &mut chosen)
            .then(|| order.iter().map(|&r| view.verts[r]).zip(chosen).collect())
    }

    /// Template first, exhaustive search second.
    pub fn solve(&self) -> Result<Extension> {
        if let Some((case, assign)) = self.template() {
            return Ok(Extension {
                assign,
                path: ExtensionPath::Template(case),
            });
        }
        self.fallback()
            .map(|assign| Extension {
                assign,
                path: ExtensionPath::Fallback,
            })
            .ok_or_else(|| Error::Internal(format!("no extension over {:?} at {:?}", self.kind, self.roles)))
    }
}
