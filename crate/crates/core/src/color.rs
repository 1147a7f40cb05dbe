//! Signed color sets, colorings, demand maps and the two validity checkers.
//!
//! A color is a nonzero integer in `±[p]`. A [`ColorSet`] never contains both
//! `i` and `-i`. Sets are bit masks with `+i` at bit `2(i-1)` and `-i` at bit
//! `2(i-1)+1`, so `p` is limited to [`MAX_P`].

use std::fmt;

use crate::error::{parse_err, Error, Result};
use crate::graph::{parse_usize, BalancedWitness, Sign, SignedGraph, MAX_PARSE_VERTICES};

pub const MAX_P: usize = 16;

/// Arbitrary subset of `±[MAX_P]`, antipodal pairs allowed (available sets).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SignedSet(pub u32);

pub(crate) fn bit(c: i8) -> u32 {
    let a = c.unsigned_abs() as u32;
    1 << (2 * (a - 1) + u32::from(c < 0))
}

fn color_of_bit(b: u32) -> i8 {
    let a = (b / 2 + 1) as i8;
    if b % 2 == 1 {
        -a
    } else {
        a
    }
}

const EVEN: u32 = 0x5555_5555;

impl SignedSet {
    /// `±[p]`.
    pub fn all(p: usize) -> SignedSet {
        SignedSet(((1u64 << (2 * p)) - 1) as u32)
    }

    pub fn contains(self, c: i8) -> bool {
        self.0 & bit(c) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// `{-x : x ∈ self}`.
    #[allow(clippy::should_implement_trait)]
    pub fn neg(self) -> SignedSet {
        SignedSet(((self.0 & EVEN) << 1) | ((self.0 >> 1) & EVEN))
    }

    pub fn minus(self, other: SignedSet) -> SignedSet {
        SignedSet(self.0 & !other.0)
    }

    /// Absolute values present, as a bit mask with `i` at bit `i-1`.
    pub fn abs_mask(self) -> u16 {
        let folded = (self.0 | (self.0 >> 1)) & EVEN;
        let mut out = 0u16;
        for i in 0..MAX_P {
            if folded >> (2 * i) & 1 == 1 {
                out |= 1 << i;
            }
        }
        out
    }

    /// Absolute values whose both signs are present.
    pub fn doubled_mask(self) -> u16 {
        let both = self.0 & (self.0 >> 1) & EVEN;
        SignedSet(both).abs_mask()
    }

    pub fn is_antipodal_free(self) -> bool {
        self.doubled_mask() == 0
    }

    /// Members ordered by (|c|, Plus before Minus).
    pub fn members(self) -> Vec<i8> {
        let mut out = Vec::with_capacity(self.len());
        let mut bits = self.0;
        while bits != 0 {
            let b = bits.trailing_zeros();
            out.push(color_of_bit(b));
            bits &= bits - 1;
        }
        out
    }
}

/// An antipodal-free subset of `±[p]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColorSet {
    p: u8,
    bits: u32,
}

impl ColorSet {
    pub fn empty(p: usize) -> ColorSet {
        assert!(p <= MAX_P, "palette size {p} exceeds {MAX_P}");
        ColorSet { p: p as u8, bits: 0 }
    }

    pub fn new(p: usize, colors: &[i8]) -> Result<ColorSet> {
        if p == 0 || p > MAX_P {
            return Err(Error::InvalidColorSet(format!("palette size {p} outside 1..={MAX_P}")));
        }
        let mut bits = 0u32;
        for &c in colors {
            if c == 0 || c.unsigned_abs() as usize > p {
                return Err(Error::InvalidColorSet(format!("color {c} outside ±[{p}]")));
            }
            bits |= bit(c);
        }
        ColorSet::from_signed(p, SignedSet(bits))
    }

    pub fn from_signed(p: usize, s: SignedSet) -> Result<ColorSet> {
        if s.0 & !SignedSet::all(p).0 != 0 {
            return Err(Error::InvalidColorSet(format!("members outside ±[{p}]")));
        }
        if !s.is_antipodal_free() {
            return Err(Error::InvalidColorSet(format!(
                "{:?} contains an antipodal pair",
                s.members()
            )));
        }
        Ok(ColorSet { p: p as u8, bits: s.0 })
    }

    /// `{1, …, q}`.
    pub fn first(p: usize, q: usize) -> ColorSet {
        assert!(q <= p && p <= MAX_P);
        let mut bits = 0;
        for i in 1..=q {
            bits |= bit(i as i8);
        }
        ColorSet { p: p as u8, bits }
    }

    pub fn p(self) -> usize {
        self.p as usize
    }

    pub fn signed(self) -> SignedSet {
        SignedSet(self.bits)
    }

    pub fn bits(self) -> u32 {
        self.bits
    }

    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn contains(self, c: i8) -> bool {
        self.signed().contains(c)
    }

    pub fn members(self) -> Vec<i8> {
        self.signed().members()
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(self) -> ColorSet {
        ColorSet {
            p: self.p,
            bits: self.signed().neg().0,
        }
    }

    pub fn intersects(self, other: SignedSet) -> bool {
        self.bits & other.0 != 0
    }

    pub fn is_subset_of(self, other: SignedSet) -> bool {
        self.bits & !other.0 == 0
    }

    /// The set of absolute values `S*`.
    pub fn absolute_set(self) -> Vec<u8> {
        let m = self.signed().abs_mask();
        (1..=MAX_P as u8).filter(|i| m >> (i - 1) & 1 == 1).collect()
    }

    pub fn abs_mask(self) -> u16 {
        self.signed().abs_mask()
    }

    /// `±[p]` minus this set.
    pub fn complement(self) -> SignedSet {
        SignedSet::all(self.p()).minus(self.signed())
    }

    /// The first `k` members in (|c|, sign) order.
    pub fn take(self, k: usize) -> ColorSet {
        let mut bits = 0;
        for c in self.members().into_iter().take(k) {
            bits |= bit(c);
        }
        ColorSet { p: self.p, bits }
    }

    pub fn without(self, c: i8) -> ColorSet {
        ColorSet {
            p: self.p,
            bits: self.bits & !bit(c),
        }
    }

    pub fn with_palette(self, p: usize) -> Result<ColorSet> {
        ColorSet::from_signed(p, self.signed())
    }
}

impl fmt::Display for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m: Vec<String> = self.members().iter().map(i8::to_string).collect();
        write!(f, "{{{}}}", m.join(","))
    }
}

/// All antipodal-free `q`-subsets of `±[p]`, in increasing bit-mask order.
pub fn all_color_sets(p: usize, q: usize) -> Vec<ColorSet> {
    let mut out = Vec::new();
    // choose absolute values, then signs
    for abs in 0u32..(1 << p) {
        if abs.count_ones() as usize != q {
            continue;
        }
        let idx: Vec<usize> = (0..p).filter(|i| abs >> i & 1 == 1).collect();
        for signs in 0u32..(1 << q) {
            let mut bits = 0u32;
            for (j, &i) in idx.iter().enumerate() {
                bits |= 1 << (2 * i + (signs >> j & 1) as usize);
            }
            out.push(ColorSet { p: p as u8, bits });
        }
    }
    out.sort_unstable();
    out
}

/// Per-vertex demand.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DemandMap(pub Vec<usize>);

impl DemandMap {
    pub fn constant(n: usize, q: usize) -> DemandMap {
        DemandMap(vec![q; n])
    }

    /// `φ(v) = base - deg(v)`, capped to `[1, cap]`.
    pub fn degree_based(g: &SignedGraph, base: usize, cap: usize) -> DemandMap {
        DemandMap(
            (0..g.n())
                .map(|v| base.saturating_sub(g.degree(v)).clamp(1, cap))
                .collect(),
        )
    }

    pub fn get(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Assignment of a color set to every vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    p: usize,
    sets: Vec<ColorSet>,
}

/// Why a coloring was rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    SizeMismatch { vertices: usize, colored: usize },
    Palette { vertex: usize },
    Demand { vertex: usize, expected: usize, got: usize },
    Antipodal { vertex: usize },
    Edge { u: usize, v: usize, sign: Sign },
    Class { color: u8, u: usize, v: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::SizeMismatch { vertices, colored } => {
                write!(f, "graph has {vertices} vertices but {colored} are colored")
            }
            Violation::Palette { vertex } => write!(f, "vertex {vertex} uses the wrong palette"),
            Violation::Demand { vertex, expected, got } => {
                write!(f, "vertex {vertex} has {got} colors, demand is {expected}")
            }
            Violation::Antipodal { vertex } => write!(f, "vertex {vertex} holds an antipodal pair"),
            Violation::Edge { u, v, sign } => {
                write!(f, "edge {u}-{v} ({}) violates the sign rule", sign.symbol())
            }
            Violation::Class { color, u, v } => {
                write!(f, "color class {color} is unbalanced at edge {u}-{v}")
            }
        }
    }
}

pub type Verdict = std::result::Result<(), Violation>;

impl Coloring {
    pub fn new(p: usize, sets: Vec<ColorSet>) -> Result<Coloring> {
        if p == 0 || p > MAX_P {
            return Err(Error::InvalidColoring(format!("palette size {p}")));
        }
        if let Some(v) = sets.iter().position(|s| s.p() != p) {
            return Err(Error::InvalidColoring(format!(
                "vertex {v} uses palette {}",
                sets[v].p()
            )));
        }
        Ok(Coloring { p, sets })
    }

    /// Every vertex gets `set`.
    pub fn constant(n: usize, set: ColorSet) -> Coloring {
        Coloring {
            p: set.p(),
            sets: vec![set; n],
        }
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn n(&self) -> usize {
        self.sets.len()
    }

    pub fn get(&self, v: usize) -> ColorSet {
        self.sets[v]
    }

    pub fn set(&mut self, v: usize, s: ColorSet) {
        assert_eq!(s.p(), self.p);
        self.sets[v] = s;
    }

    pub fn sets(&self) -> &[ColorSet] {
        &self.sets
    }

    pub fn demands(&self) -> DemandMap {
        DemandMap(self.sets.iter().map(|s| s.len()).collect())
    }

    /// Negates the sets of the vertices with label `Minus`. If `self` is
    /// valid for `g`, the result is valid for `g.switch_by(s)`.
    pub fn switched(&self, s: impl Fn(usize) -> Sign) -> Coloring {
        Coloring {
            p: self.p,
            sets: self
                .sets
                .iter()
                .enumerate()
                .map(|(v, &c)| if s(v) == Sign::Minus { c.neg() } else { c })
                .collect(),
        }
    }

    /// Coloring of the preimage under a vertex map (`map[old] = new`).
    pub fn pull_back(&self, map: &[usize]) -> Coloring {
        Coloring {
            p: self.p,
            sets: map.iter().map(|&x| self.sets[x]).collect(),
        }
    }

    /// Refined coloring from an unsigned one: `classes[v]` lists the absolute
    /// colors of `v`. Each class must induce a balanced subgraph; its
    /// switching fixes the signs.
    pub fn from_unsigned(g: &SignedGraph, p: usize, classes: &[Vec<u8>]) -> Result<Coloring> {
        if classes.len() != g.n() {
            return Err(Error::InvalidColoring("wrong number of vertices".into()));
        }
        let mut bits = vec![0u32; g.n()];
        for i in 1..=p as u8 {
            let members: Vec<usize> = (0..g.n()).filter(|&v| classes[v].contains(&i)).collect();
            let (h, back) = g.induced(&members);
            match h.balance_check() {
                BalancedWitness::Switching(s) => {
                    for (j, &v) in back.iter().enumerate() {
                        let c = if s[j] == Sign::Plus { i as i8 } else { -(i as i8) };
                        bits[v] |= bit(c);
                    }
                }
                BalancedWitness::NegCycle(_) => {
                    return Err(Error::InvalidColoring(format!("class {i} is unbalanced")));
                }
            }
        }
        let sets = bits
            .into_iter()
            .map(|b| ColorSet::from_signed(p, SignedSet(b)))
            .collect::<Result<Vec<_>>>()?;
        Coloring::new(p, sets)
    }

    /// Writes the `col` text format.
    pub fn to_text(&self) -> String {
        let mut out = format!("col {} {}\n", self.p, self.n());
        for (v, s) in self.sets.iter().enumerate() {
            out.push_str(&format!("v {v} :"));
            for c in s.members() {
                out.push_str(&format!(" {c}"));
            }
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> Result<Coloring> {
        let mut header: Option<(usize, usize)> = None;
        let mut sets: Vec<Option<ColorSet>> = Vec::new();
        for (i, raw) in text.split('\n').enumerate() {
            let line_no = i + 1;
            let line = raw.strip_suffix('\r').unwrap_or(raw).trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let tok: Vec<&str> = line.split_whitespace().collect();
            match header {
                None => match tok.as_slice() {
                    ["col", p, n] => {
                        let p = parse_usize(p, line_no)?;
                        let n = parse_usize(n, line_no)?;
                        if p == 0 || p > MAX_P {
                            return Err(parse_err(line_no, format!("palette size {p} outside 1..={MAX_P}")));
                        }
                        if n > MAX_PARSE_VERTICES {
                            return Err(parse_err(line_no, format!("vertex count {n} too large")));
                        }
                        header = Some((p, n));
                        sets = vec![None; n];
                    }
                    _ => return Err(parse_err(line_no, "expected header `col <p> <n>`")),
                },
                Some((p, n)) => {
                    if tok.len() < 3 || tok[0] != "v" || tok[2] != ":" {
                        return Err(parse_err(line_no, "expected `v <id> : <colors>`"));
                    }
                    let v = parse_usize(tok[1], line_no)?;
                    if v >= n {
                        return Err(parse_err(line_no, format!("vertex {v} out of range")));
                    }
                    if sets[v].is_some() {
                        return Err(parse_err(line_no, format!("vertex {v} listed twice")));
                    }
                    let colors = tok[3..]
                        .iter()
                        .map(|t| {
                            t.parse::<i8>()
                                .map_err(|_| parse_err(line_no, format!("bad color `{t}`")))
                        })
                        .collect::<Result<Vec<i8>>>()?;
                    let set = ColorSet::new(p, &colors).map_err(|e| parse_err(line_no, e.to_string()))?;
                    if set.len() != colors.len() {
                        return Err(parse_err(line_no, "repeated color"));
                    }
                    sets[v] = Some(set);
                }
            }
        }
        let (p, _) = header.ok_or_else(|| parse_err(1, "missing header"))?;
        let sets = sets
            .into_iter()
            .enumerate()
            .map(|(v, s)| s.ok_or_else(|| parse_err(0, format!("vertex {v} missing"))))
            .collect::<Result<Vec<_>>>()?;
        Coloring::new(p, sets)
    }
}

fn check_shape(g: &SignedGraph, f: &Coloring, phi: &DemandMap) -> Verdict {
    if f.n() != g.n() || phi.len() != g.n() {
        return Err(Violation::SizeMismatch {
            vertices: g.n(),
            colored: f.n(),
        });
    }
    for v in 0..g.n() {
        let s = f.get(v);
        if s.p() != f.p() {
            return Err(Violation::Palette { vertex: v });
        }
        if !s.signed().is_antipodal_free() {
            return Err(Violation::Antipodal { vertex: v });
        }
        if s.len() != phi.get(v) {
            return Err(Violation::Demand {
                vertex: v,
                expected: phi.get(v),
                got: s.len(),
            });
        }
    }
    Ok(())
}

/// Edge-by-edge check of the signed-color rules.
pub fn verify_edge_local(g: &SignedGraph, f: &Coloring, phi: &DemandMap) -> Verdict {
    check_shape(g, f, phi)?;
    for (u, v, s) in g.edges() {
        let (a, b) = (f.get(u).signed(), f.get(v).signed());
        let clash = match s {
            Sign::Plus => a.neg().0 & b.0 != 0,
            Sign::Minus => a.0 & b.0 != 0,
        };
        if clash {
            return Err(Violation::Edge { u, v, sign: s });
        }
    }
    Ok(())
}

/// Per-color check: each class `V_i` must be balanced, certified by the
/// switching given by the sign of `±i` at each member.
pub fn verify_class_balance(g: &SignedGraph, f: &Coloring, phi: &DemandMap) -> Verdict {
    check_shape(g, f, phi)?;
    for i in 1..=f.p() as i8 {
        let label = |v: usize| -> Option<Sign> {
            let s = f.get(v);
            if s.contains(i) {
                Some(Sign::Plus)
            } else if s.contains(-i) {
                Some(Sign::Minus)
            } else {
                None
            }
        };
        for v in 0..g.n() {
            let Some(lv) = label(v) else { continue };
            for &(w, s) in g.neighbors(v) {
                if w <= v {
                    continue;
                }
                if let Some(lw) = label(w) {
                    if s * lv * lw != Sign::Plus {
                        return Err(Violation::Class {
                            color: i as u8,
                            u: v,
                            v: w,
                        });
                    }
                }
            }
        }
    }
    Ok(())
}

/// Both checkers; they must agree.
pub fn verify(g: &SignedGraph, f: &Coloring, phi: &DemandMap) -> Verdict {
    let a = verify_edge_local(g, f, phi);
    let b = verify_class_balance(g, f, phi);
    match (&a, &b) {
        (Ok(()), Ok(())) => Ok(()),
        (Err(_), Err(_)) => a,
        _ => panic!("verifiers disagree: edge-local {a:?}, class-balance {b:?}"),
    }
}

/// Shrinks each set to `phi2(v)` members, keeping the smallest in
/// (|c|, Plus before Minus) order.
pub fn restrict(f: &Coloring, phi2: &DemandMap) -> Result<Coloring> {
    let mut out = f.clone();
    for v in 0..f.n() {
        let have = f.get(v).len();
        let want = phi2.get(v);
        if want > have {
            return Err(Error::DemandExceeded {
                vertex: v,
                demand: want,
                available: have,
            });
        }
        out.sets[v] = f.get(v).take(want);
    }
    Ok(out)
}

/// Removes one member from each set so the absolute sets of the results
/// differ. `a1` loses its largest member; `a2` loses the largest member
/// whose removal makes the absolute sets differ.
pub fn proper_subset_pair(a1: ColorSet, a2: ColorSet) -> Result<(ColorSet, ColorSet)> {
    if a1.len() < 2 || a2.len() < 2 {
        return Err(Error::InvalidParam(
            "proper_subset_pair needs sets of size at least 2".into(),
        ));
    }
    let drop1 = *a1.members().last().expect("nonempty");
    let b1 = a1.without(drop1);
    for c in a2.members().into_iter().rev() {
        let b2 = a2.without(c);
        if b2.abs_mask() != b1.abs_mask() {
            return Ok((b1, b2));
        }
    }
    Err(Error::Internal("no proper subset with distinct absolute set".into()))
}

/// Turns a valid (3,2)-coloring into a valid (5,3)-coloring: each `±i`
/// becomes `{±i, ±(i+3)}`, color 6 is dropped, and sets are cut to 3.
pub fn lift_32_to_53(f: &Coloring) -> Result<Coloring> {
    if f.p() != 3 || f.sets.iter().any(|s| s.len() != 2) {
        return Err(Error::InvalidColoring("lift expects a (3,2)-coloring".into()));
    }
    let sets = f
        .sets
        .iter()
        .map(|s| {
            let mut cs = Vec::new();
            for c in s.members() {
                cs.push(c);
                let shifted = c + 3 * c.signum();
                if shifted.abs() <= 5 {
                    cs.push(shifted);
                }
            }
            ColorSet::new(5, &cs).map(|set| set.take(3))
        })
        .collect::<Result<Vec<_>>>()?;
    Coloring::new(5, sets)
}

/// A bijection of `±[p]` commuting with negation, given by the images of
/// `1..=p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedPermutation {
    images: Vec<i8>,
}

impl SignedPermutation {
    pub fn new(images: Vec<i8>) -> Result<SignedPermutation> {
        let p = images.len();
        let mut seen = vec![false; p + 1];
        for &x in &images {
            let a = x.unsigned_abs() as usize;
            if a == 0 || a > p || seen[a] {
                return Err(Error::InvalidParam(format!("{images:?} is not a signed permutation")));
            }
            seen[a] = true;
        }
        Ok(SignedPermutation { images })
    }

    pub fn identity(p: usize) -> SignedPermutation {
        SignedPermutation {
            images: (1..=p as i8).collect(),
        }
    }

    pub fn p(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, c: i8) -> i8 {
        let img = self.images[c.unsigned_abs() as usize - 1];
        if c < 0 {
            -img
        } else {
            img
        }
    }

    pub fn apply_set(&self, s: ColorSet) -> ColorSet {
        let mut bits = 0;
        for c in s.members() {
            bits |= bit(self.apply(c));
        }
        ColorSet::from_signed(s.p(), SignedSet(bits)).expect("signed permutation keeps sets antipodal-free")
    }

    /// Some signed permutation mapping `from` onto `to` (equal sizes).
    pub fn mapping(p: usize, from: ColorSet, to: ColorSet) -> Result<SignedPermutation> {
        if from.len() != to.len() {
            return Err(Error::InvalidParam("sets of different size".into()));
        }
        let mut images = vec![0i8; p];
        let mut used = vec![false; p + 1];
        for (a, b) in from.members().into_iter().zip(to.members()) {
            let img = if a < 0 { -b } else { b };
            images[a.unsigned_abs() as usize - 1] = img;
            used[b.unsigned_abs() as usize] = true;
        }
        let mut free = (1..=p).filter(|&i| !used[i]);
        for img in images.iter_mut() {
            if *img == 0 {
                *img = free.next().expect("counts match") as i8;
            }
        }
        SignedPermutation::new(images)
    }
}

pub fn apply_signed_permutation(f: &Coloring, pi: &SignedPermutation) -> Result<Coloring> {
    if pi.p() != f.p() {
        return Err(Error::InvalidParam(
            "permutation palette differs from coloring palette".into(),
        ));
    }
    Ok(Coloring {
        p: f.p,
        sets: f.sets.iter().map(|&s| pi.apply_set(s)).collect(),
    })
}
