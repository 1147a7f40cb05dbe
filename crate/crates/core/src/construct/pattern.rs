//! Extension templates for each reducible configuration.
//!
//! A template colors the recolored roles of a configuration using letters:
//! `C(i)` is the element of the `C` source set whose absolute value is the
//! frame image of `i` (plus sign if both signs are present). Literals `K(i)`
//! stand for `+` the frame image of `i`.

use super::config::ConfigKind;
use super::engine::Frame;
use crate::graph::Sign;

use Sign::{Minus as M, Plus as P};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fam {
    A,
    B,
    C,
    D,
}

use Fam::{A, B, C, D};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tok {
    /// `+x_i`
    P(Fam, u8),
    /// `-x_i`
    N(Fam, u8),
    /// `+i`
    K(u8),
}

use Tok::{K, N as Ng, P as Ps};

pub type Template = &'static [(usize, &'static [Tok])];

pub struct Case {
    pub name: &'static str,
    /// Required signs of edges between recolored or subset roles.
    pub signs: &'static [(usize, usize, Sign)],
    pub hyp: fn(&Frame) -> bool,
    pub template: Template,
    /// The uncorrected template, kept so the audit can show that it fails.
    pub uncorrected: Option<Template>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RoleKind {
    /// Any set inside the available set.
    Free,
    /// A subset of the currently held set.
    Subset,
    /// Left unchanged.
    Fixed,
}

pub struct Pattern {
    pub kind: ConfigKind,
    pub roles: &'static [&'static str],
    pub kinds: &'static [RoleKind],
    pub edges: &'static [(usize, usize)],
    /// Role supplying each letter family.
    pub families: &'static [(Fam, usize)],
    pub cases: &'static [Case],
}

use RoleKind::{Fixed as FX, Free as FR, Subset as SB};

fn c5(f: &Frame) -> bool {
    f.doubled(C, 5)
}
fn c5_d4(f: &Frame) -> bool {
    f.doubled(C, 5) && f.doubled(D, 4)
}
fn c45_d35(f: &Frame) -> bool {
    f.doubled(C, 4) && f.doubled(C, 5) && f.doubled(D, 3) && f.doubled(D, 5)
}

// roles: u v w u' v'
const CYC233: Pattern = Pattern {
    kind: ConfigKind::Cyc233,
    roles: &["u", "v", "w", "u'", "v'"],
    kinds: &[FR, FR, FR, FX, FX],
    edges: &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 4)],
    families: &[(C, 1), (D, 0)],
    cases: &[
        Case {
            name: "uv negative",
            signs: &[(0, 2, M), (1, 2, M), (0, 1, M)],
            hyp: c5,
            template: &[
                (0, &[Ps(D, 3), Ps(D, 4), Ps(D, 5)]),
                (1, &[Ps(C, 1), Ps(C, 2), Ng(D, 5)]),
                (2, &[Ng(C, 1), Ng(C, 2), Ng(D, 3), Ng(D, 4)]),
            ],
            uncorrected: None,
        },
        Case {
            name: "uv positive",
            signs: &[(0, 2, M), (1, 2, M), (0, 1, P)],
            hyp: c5,
            template: &[
                (0, &[Ps(D, 3), Ps(D, 4), Ps(D, 5)]),
                (1, &[Ps(C, 1), Ps(C, 2), Ps(D, 5)]),
                (2, &[Ng(C, 1), Ng(C, 2), Ng(D, 3), Ng(D, 4)]),
            ],
            uncorrected: None,
        },
    ],
};

// roles: u v w1 w2 u' v'; cycle w1 v w2 u
const CYC2323: Pattern = Pattern {
    kind: ConfigKind::Cyc2323,
    roles: &["u", "v", "w1", "w2", "u'", "v'"],
    kinds: &[FR, FR, FR, FR, FX, FX],
    edges: &[(0, 2), (1, 2), (1, 3), (0, 3), (0, 4), (1, 5)],
    families: &[(C, 1), (D, 0)],
    cases: &[
        Case {
            name: "vw2 negative",
            signs: &[(0, 2, M), (1, 2, M), (0, 3, M), (1, 3, M)],
            hyp: c5,
            template: &[
                (0, &[Ps(D, 3), Ps(D, 4), Ps(D, 5)]),
                (1, &[Ps(C, 1), Ps(C, 2), Ps(D, 5)]),
                (2, &[Ng(C, 1), Ng(C, 2), Ng(D, 3), Ng(D, 4)]),
                (3, &[Ng(C, 1), Ng(C, 2), Ng(D, 3), Ng(D, 4)]),
            ],
            uncorrected: None,
        },
        Case {
            name: "vw2 positive",
            signs: &[(0, 2, M), (1, 2, M), (0, 3, M), (1, 3, P)],
            hyp: c5,
            template: &[
                (0, &[Ps(D, 3), Ps(D, 4), Ps(D, 5)]),
                (1, &[Ps(C, 1), Ps(C, 2), Ps(D, 5)]),
                (2, &[Ng(C, 1), Ng(C, 2), Ng(D, 3), Ng(D, 4)]),
                (3, &[Ps(C, 1), Ps(C, 2), Ng(D, 3), Ng(D, 4)]),
            ],
            uncorrected: Some(&[
                (0, &[Ps(D, 3), Ps(D, 4), Ps(D, 5)]),
                (1, &[Ps(C, 1), Ps(C, 2), Ps(D, 5)]),
                (2, &[Ng(C, 1), Ng(C, 2), Ng(D, 3), Ng(D, 4)]),
                (3, &[Ng(C, 1), Ng(C, 2), Ps(D, 3), Ps(D, 4)]),
            ]),
        },
    ],
};

// roles: u v w1 w2 u' v'; cycle w1 w2 u v
const CYC2233: Pattern = Pattern {
    kind: ConfigKind::Cyc2233,
    roles: &["u", "v", "w1", "w2", "u'", "v'"],
    kinds: &[FR, FR, FR, FR, FX, FX],
    edges: &[(1, 2), (2, 3), (3, 0), (0, 1), (0, 4), (1, 5)],
    families: &[(C, 1), (D, 0)],
    cases: &[
        Case {
            name: "uv negative",
            signs: &[(1, 2, M), (2, 3, M), (0, 3, M), (0, 1, M)],
            hyp: c5,
            template: &[
                (0, &[Ps(D, 3), Ps(D, 4), Ps(D, 5)]),
                (1, &[Ps(C, 1), Ps(C, 2), Ng(D, 5)]),
                (2, &[Ng(C, 1), Ng(C, 2), Ps(D, 3), Ps(D, 4)]),
                (3, &[Ps(C, 1), Ps(C, 2), Ng(D, 3), Ng(D, 4)]),
            ],
            uncorrected: None,
        },
        Case {
            name: "uv positive",
            signs: &[(1, 2, M), (2, 3, M), (0, 3, M), (0, 1, P)],
            hyp: c5,
            template: &[
                (0, &[Ps(D, 3), Ps(D, 4), Ps(D, 5)]),
                (1, &[Ps(C, 1), Ps(C, 2), Ps(D, 5)]),
                (2, &[Ng(C, 1), Ng(C, 2), Ps(D, 3), Ps(D, 4)]),
                (3, &[Ps(C, 1), Ps(C, 2), Ng(D, 3), Ng(D, 4)]),
            ],
            uncorrected: None,
        },
    ],
};

// roles: u w v u' v'
const TWO_TWO_TWO: Pattern = Pattern {
    kind: ConfigKind::TwoTwoTwo,
    roles: &["u", "w", "v", "u'", "v'"],
    kinds: &[FR, FR, FR, FX, FX],
    edges: &[(3, 0), (0, 1), (1, 2), (2, 4)],
    families: &[(C, 0), (D, 2)],
    cases: &[Case {
        name: "path",
        signs: &[(0, 1, M), (1, 2, M)],
        hyp: c5_d4,
        template: &[
            (0, &[Ps(C, 1), Ps(C, 2), Ps(C, 4), Ps(D, 5)]),
            (2, &[Ps(D, 1), Ps(D, 3), Ps(C, 4), Ps(D, 5)]),
            (1, &[Ng(C, 2), Ng(D, 3), Ng(C, 4), Ng(D, 5)]),
        ],
        uncorrected: None,
    }],
};

// roles: u v u' v'
const TWO_TWO: Pattern = Pattern {
    kind: ConfigKind::TwoTwo,
    roles: &["u", "v", "u'", "v'"],
    kinds: &[FR, FR, FX, FX],
    edges: &[(2, 0), (0, 1), (1, 3)],
    families: &[(C, 0), (D, 1)],
    cases: &[Case {
        name: "edge",
        signs: &[(0, 1, M)],
        hyp: c45_d35,
        template: &[
            (0, &[Ps(C, 1), Ps(C, 3), Ng(D, 4), Ps(C, 5)]),
            (1, &[Ps(D, 2), Ng(C, 3), Ps(D, 4), Ng(C, 5)]),
        ],
        uncorrected: None,
    }],
};

fn c5_base(f: &Frame) -> bool {
    f.doubled(C, 4) && f.doubled(C, 5)
}
fn h5_11(f: &Frame) -> bool {
    c5_base(f) && f.len(A) == 5 && f.doubled(D, 3)
}
fn h5_12(f: &Frame) -> bool {
    c5_base(f) && f.len(A) == 5 && f.doubled(D, 4) && f.doubled(D, 5)
}
fn h5_21(f: &Frame) -> bool {
    c5_base(f) && f.len(A) == 4 && f.abs_is(A, &[1, 2, 3, 4])
}
fn h5_22(f: &Frame) -> bool {
    c5_base(f) && f.len(A) == 4 && f.abs_is(A, &[1, 2, 4, 5])
}

const W5: &[(usize, usize, Sign)] = &[(1, 0, M), (2, 0, M), (0, 3, M)];

// roles: w u v w' u' v'
const TWO_THREE_TWO: Pattern = Pattern {
    kind: ConfigKind::TwoThreeTwo,
    roles: &["w", "u", "v", "w'", "u'", "v'"],
    kinds: &[FR, FR, FR, SB, FX, FX],
    edges: &[(1, 0), (2, 0), (0, 3), (1, 4), (2, 5)],
    families: &[(C, 2), (D, 1), (A, 3)],
    cases: &[
        Case {
            name: "(1.1)",
            signs: W5,
            hyp: h5_11,
            template: &[
                (2, &[Ps(C, 1), Ps(C, 2), Ps(D, 4), Ps(A, 5)]),
                (1, &[Ps(D, 1), Ps(D, 2), Ps(A, 3), Ps(D, 4)]),
                (3, &[Ps(A, 1), Ps(A, 2), Ps(A, 3), Ps(A, 5)]),
                (0, &[Ng(A, 3), Ng(D, 4), Ng(A, 5)]),
            ],
            uncorrected: None,
        },
        Case {
            name: "(1.2)",
            signs: W5,
            hyp: h5_12,
            template: &[
                (2, &[Ps(C, 1), Ps(C, 2), Ps(A, 4), Ps(A, 5)]),
                (1, &[Ps(D, 1), Ps(D, 2), Ps(A, 4), Ps(A, 5)]),
                (3, &[Ps(A, 1), Ps(A, 2), Ps(A, 4), Ps(A, 5)]),
                (0, &[Ps(A, 3), Ng(A, 4), Ng(A, 5)]),
            ],
            uncorrected: None,
        },
        Case {
            name: "(2.1)",
            signs: W5,
            hyp: h5_21,
            template: &[
                (2, &[Ps(C, 1), Ps(C, 3), Ps(A, 4), Ps(D, 5)]),
                (1, &[Ps(D, 1), Ps(D, 2), Ps(D, 3), Ps(D, 5)]),
                (3, &[Ps(A, 1), Ps(A, 3), Ps(A, 4)]),
                (0, &[Ng(D, 2), Ng(A, 4), Ng(D, 5)]),
            ],
            uncorrected: None,
        },
        Case {
            name: "(2.2)",
            signs: W5,
            hyp: h5_22,
            template: &[
                (2, &[Ps(C, 1), Ps(C, 2), Ps(A, 4), Ps(D, 5)]),
                (1, &[Ps(D, 1), Ps(D, 2), Ps(D, 3), Ps(D, 5)]),
                (3, &[Ps(A, 1), Ps(A, 2), Ps(A, 4)]),
                (0, &[Ng(D, 3), Ng(A, 4), Ng(D, 5)]),
            ],
            uncorrected: None,
        },
    ],
};

// roles: u v w1 w2 u' v'
const ADJ_TRIANGLES: Pattern = Pattern {
    kind: ConfigKind::AdjTriangles,
    roles: &["u", "v", "w1", "w2", "u'", "v'"],
    kinds: &[FR, FR, FR, FR, FX, FX],
    edges: &[(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (1, 5)],
    families: &[(C, 0), (D, 1)],
    cases: &[
        Case {
            name: "(1)",
            signs: &[(0, 2, M), (0, 3, M), (1, 2, M), (2, 3, M), (1, 3, P)],
            hyp: c5_d4,
            template: &[
                (0, &[Ps(C, 1), Ps(C, 4), Ps(D, 5)]),
                (1, &[Ps(D, 1), Ng(C, 4), Ps(D, 5)]),
                (2, &[Ng(C, 2), Ng(C, 3), Ng(D, 5)]),
                (3, &[Ps(C, 2), Ps(C, 3), Ng(C, 4)]),
            ],
            uncorrected: None,
        },
        Case {
            name: "(2)",
            signs: &[(0, 2, M), (0, 3, M), (1, 2, M), (2, 3, M), (1, 3, M)],
            hyp: c5_d4,
            template: &[
                (0, &[Ps(C, 1), Ps(C, 4), Ps(D, 5)]),
                (1, &[Ps(D, 1), Ps(C, 4), Ps(D, 5)]),
                (2, &[Ng(C, 2), Ng(C, 3), Ng(D, 5)]),
                (3, &[Ps(C, 2), Ps(C, 3), Ng(C, 4)]),
            ],
            uncorrected: None,
        },
        Case {
            name: "(3)",
            signs: &[(0, 2, M), (0, 3, M), (1, 2, M), (2, 3, P), (1, 3, M)],
            hyp: c5_d4,
            template: &[
                (0, &[Ps(C, 1), Ps(C, 4), Ps(D, 5)]),
                (1, &[Ps(D, 1), Ps(C, 4), Ps(D, 5)]),
                (2, &[Ng(C, 2), Ng(C, 3), Ng(D, 5)]),
                (3, &[Ng(C, 2), Ng(C, 3), Ng(D, 5)]),
            ],
            uncorrected: None,
        },
    ],
};

// roles: u v w w1 w2 u' v'
const TRI_PLUS_2333: Pattern = Pattern {
    kind: ConfigKind::TriPlus2333,
    roles: &["u", "v", "w", "w1", "w2", "u'", "v'"],
    kinds: &[FR, FR, FR, FR, FR, FX, FX],
    edges: &[(0, 3), (0, 4), (3, 4), (3, 2), (2, 1), (1, 4), (0, 5), (1, 6)],
    families: &[(C, 0), (D, 1)],
    cases: &[
        Case {
            name: "(1)",
            signs: &[(0, 3, M), (2, 3, M), (1, 4, M), (0, 4, M), (3, 4, M), (1, 2, M)],
            hyp: c5_d4,
            template: &[
                (0, &[Ps(C, 1), Ps(C, 4), Ps(D, 5)]),
                (1, &[Ps(D, 1), Ps(C, 4), Ps(D, 5)]),
                (3, &[Ng(C, 2), Ng(C, 3), Ng(D, 5)]),
                (4, &[Ps(C, 2), Ps(C, 3), Ng(C, 4)]),
                (2, &[Ng(D, 1), Ps(C, 2), Ps(C, 3), Ng(C, 4)]),
            ],
            uncorrected: None,
        },
        Case {
            name: "(2)",
            signs: &[(0, 3, M), (2, 3, M), (1, 4, M), (0, 4, M), (3, 4, M), (1, 2, P)],
            hyp: c5_d4,
            template: &[
                (0, &[Ps(C, 1), Ps(C, 4), Ps(D, 5)]),
                (1, &[Ps(D, 1), Ps(C, 4), Ps(D, 5)]),
                (3, &[Ng(C, 2), Ng(C, 3), Ng(D, 5)]),
                (4, &[Ps(C, 2), Ps(C, 3), Ng(C, 4)]),
                (2, &[Ps(D, 1), Ps(C, 2), Ps(C, 3), Ps(D, 5)]),
            ],
            uncorrected: None,
        },
        Case {
            name: "(3)",
            signs: &[(0, 3, M), (2, 3, M), (1, 4, M), (0, 4, M), (3, 4, P), (1, 2, M)],
            hyp: c5_d4,
            template: &[
                (0, &[Ps(C, 1), Ps(C, 4), Ps(D, 5)]),
                (1, &[Ps(D, 1), Ps(C, 4), Ps(D, 5)]),
                (3, &[Ng(C, 2), Ng(C, 3), Ng(D, 5)]),
                (4, &[Ng(C, 2), Ng(C, 3), Ng(D, 5)]),
                (2, &[Ng(D, 1), Ps(C, 2), Ps(C, 3), Ng(C, 4)]),
            ],
            uncorrected: None,
        },
        Case {
            name: "(4)",
            signs: &[(0, 3, M), (2, 3, M), (1, 4, M), (0, 4, P), (3, 4, M), (1, 2, M)],
            hyp: c5_d4,
            template: &[
                (0, &[Ps(C, 1), Ps(C, 4), Ps(D, 5)]),
                (1, &[Ps(D, 1), Ng(C, 4), Ps(D, 5)]),
                (3, &[Ng(C, 2), Ng(C, 3), Ng(D, 5)]),
                (4, &[Ps(C, 2), Ps(C, 3), Ps(C, 4)]),
                (2, &[Ng(D, 1), Ps(C, 2), Ps(C, 3), Ps(C, 4)]),
            ],
            uncorrected: None,
        },
    ],
};

// roles: u v w w1 w2 u' v'
const TWO_2333_SHARED: Pattern = Pattern {
    kind: ConfigKind::Two2333SharedPath,
    roles: &["u", "v", "w", "w1", "w2", "u'", "v'"],
    kinds: &[FR, FR, FR, FR, FR, FX, FX],
    edges: &[(0, 3), (2, 3), (1, 3), (0, 4), (2, 4), (1, 4), (0, 5), (1, 6)],
    families: &[(C, 0), (D, 1)],
    cases: &[
        Case {
            name: "(1)",
            signs: &[(0, 3, M), (2, 3, M), (1, 3, M), (0, 4, M), (2, 4, M), (1, 4, M)],
            hyp: c5_d4,
            template: &[
                (0, &[Ps(C, 1), Ps(C, 4), Ps(D, 5)]),
                (1, &[Ps(D, 1), Ps(C, 4), Ps(D, 5)]),
                (3, &[Ps(C, 2), Ps(C, 3), Ng(D, 5)]),
                (4, &[Ps(C, 2), Ps(C, 3), Ng(D, 5)]),
                (2, &[Ng(C, 2), Ng(C, 3), Ps(C, 4), Ps(D, 5)]),
            ],
            uncorrected: None,
        },
        Case {
            name: "(2)",
            signs: &[(0, 3, M), (2, 3, M), (1, 3, M), (0, 4, M), (2, 4, P), (1, 4, M)],
            hyp: c5_d4,
            template: &[
                (0, &[Ps(C, 1), Ps(C, 4), Ps(D, 5)]),
                (1, &[Ps(D, 1), Ps(C, 4), Ps(D, 5)]),
                (3, &[Ps(C, 2), Ps(C, 3), Ng(D, 5)]),
                (4, &[Ng(C, 2), Ng(C, 3), Ng(D, 5)]),
                (2, &[Ps(C, 1), Ng(C, 2), Ng(C, 3), Ps(C, 4)]),
            ],
            uncorrected: None,
        },
        Case {
            name: "(3)",
            signs: &[(0, 3, M), (2, 3, M), (1, 3, M), (0, 4, M), (2, 4, M), (1, 4, P)],
            hyp: c5_d4,
            template: &[
                (0, &[Ps(C, 1), Ps(C, 4), Ps(D, 5)]),
                (1, &[Ps(D, 1), Ng(C, 4), Ps(D, 5)]),
                (3, &[Ps(C, 2), Ps(C, 3), Ng(D, 5)]),
                (4, &[Ps(C, 2), Ps(C, 3), Ng(C, 4)]),
                (2, &[Ng(C, 2), Ng(C, 3), Ps(C, 4), Ps(D, 5)]),
            ],
            uncorrected: None,
        },
    ],
};

const STAR: &[(usize, usize, Sign)] = &[(0, 1, M), (0, 2, M), (0, 3, M)];

fn h7_base(f: &Frame) -> bool {
    f.len(A) == 5 && f.abs_is(B, &[1, 2, 3, 4]) && f.len(C) == 4 && f.abs_contains(C, &[1, 2, 3])
}
fn h7_1(f: &Frame) -> bool {
    h7_base(f) && f.same(B, 1, C, 1)
}
fn h7_2(f: &Frame) -> bool {
    h7_base(f) && (1..=3).all(|i| !f.same(B, i, C, i))
}
fn h7_21_4(f: &Frame) -> bool {
    h7_2(f) && f.same(A, 1, B, 1) && f.abs_is(C, &[1, 2, 3, 4])
}
fn h7_21_5(f: &Frame) -> bool {
    h7_2(f) && f.same(A, 1, B, 1) && f.abs_is(C, &[1, 2, 3, 5])
}
fn h7_22(f: &Frame) -> bool {
    h7_2(f) && f.same(A, 1, C, 1)
}

// roles: v v1 v2 v3
const THREE_WITH_ONE_TWO: Pattern = Pattern {
    kind: ConfigKind::ThreeWithOneTwo,
    roles: &["v", "v1", "v2", "v3"],
    kinds: &[FR, SB, SB, SB],
    edges: &[(0, 1), (0, 2), (0, 3)],
    families: &[(A, 1), (B, 2), (C, 3)],
    cases: &[
        Case {
            name: "(1)",
            signs: STAR,
            hyp: h7_1,
            template: &[
                (1, &[Ps(A, 2), Ps(A, 3), Ps(A, 4), Ps(A, 5)]),
                (2, &[Ps(B, 1), Ps(B, 2), Ps(B, 3)]),
                (3, &[Ps(B, 1), Ps(C, 2), Ps(C, 3)]),
                (0, &[Ng(B, 1), Ng(A, 4), Ng(A, 5)]),
            ],
            uncorrected: None,
        },
        Case {
            name: "(2.1) k=4",
            signs: STAR,
            hyp: h7_21_4,
            template: &[
                (1, &[Ps(A, 1), Ps(A, 2), Ps(A, 3), Ps(A, 5)]),
                (2, &[Ps(A, 1), Ps(B, 2), Ps(B, 3)]),
                (3, &[Ps(C, 2), Ps(C, 3), Ps(C, 4)]),
                (0, &[Ng(A, 1), Ng(A, 5), Ng(C, 4)]),
            ],
            uncorrected: None,
        },
        Case {
            name: "(2.1) k=5",
            signs: STAR,
            hyp: h7_21_5,
            template: &[
                (1, &[Ps(A, 1), Ps(A, 2), Ps(A, 3), Ps(A, 4)]),
                (2, &[Ps(A, 1), Ps(B, 2), Ps(B, 3)]),
                (3, &[Ps(C, 2), Ps(C, 3), Ps(C, 5)]),
                (0, &[Ng(A, 1), Ng(A, 4), Ng(C, 5)]),
            ],
            uncorrected: None,
        },
        Case {
            name: "(2.2)",
            signs: STAR,
            hyp: h7_22,
            template: &[
                (1, &[Ps(A, 1), Ps(A, 2), Ps(A, 3), Ps(A, 5)]),
                (2, &[Ps(B, 2), Ps(B, 3), Ps(B, 4)]),
                (3, &[Ps(A, 1), Ps(C, 2), Ps(C, 3)]),
                (0, &[Ng(A, 1), Ng(B, 4), Ng(A, 5)]),
            ],
            uncorrected: None,
        },
    ],
};

fn all4(f: &Frame) -> bool {
    f.abs_is(A, &[1, 2, 3, 4]) && f.abs_is(B, &[1, 2, 3, 4]) && f.abs_is(C, &[1, 2, 3, 4])
}
fn h8_11(f: &Frame) -> bool {
    f.abs_is(A, &[1, 2, 3, 4]) && f.abs_is(B, &[1, 2, 3, 4]) && f.abs_is(C, &[1, 2, 3, 5])
}
fn h8_12(f: &Frame) -> bool {
    all4(f) && f.same(A, 1, B, 1) && f.same(A, 1, C, 1)
}
fn h8_13(f: &Frame) -> bool {
    all4(f) && f.same(A, 1, B, 1) && f.opposite(A, 1, C, 1)
}
fn h8_2(f: &Frame) -> bool {
    f.abs_is(A, &[1, 2, 3, 4]) && f.abs_is(B, &[1, 2, 3, 5]) && f.abs_is(C, &[1, 2, 4, 5])
}

const PLAIN_THREE: Pattern = Pattern {
    kind: ConfigKind::PlainThreeVertex,
    roles: &["v", "v1", "v2", "v3"],
    kinds: &[FR, SB, SB, SB],
    edges: &[(0, 1), (0, 2), (0, 3)],
    families: &[(A, 1), (B, 2), (C, 3)],
    cases: &[
        Case {
            name: "(1.1)",
            signs: STAR,
            hyp: h8_11,
            template: &[
                (1, &[Ps(A, 1), Ps(A, 2), Ps(A, 3)]),
                (2, &[Ps(B, 1), Ps(B, 2), Ps(B, 4)]),
                (3, &[Ps(C, 1), Ps(C, 2), Ps(C, 5)]),
                (0, &[Ng(A, 3), Ng(B, 4), Ng(C, 5)]),
            ],
            uncorrected: None,
        },
        Case {
            name: "(1.2)",
            signs: STAR,
            hyp: h8_12,
            template: &[
                (1, &[Ps(A, 1), Ps(A, 2), Ps(A, 3)]),
                (2, &[Ps(B, 1), Ps(B, 2), Ps(B, 3)]),
                (3, &[Ps(C, 1), Ps(C, 2), Ps(C, 3)]),
                (0, &[Ng(A, 1), K(4), K(5)]),
            ],
            uncorrected: None,
        },
        Case {
            name: "(1.3)",
            signs: STAR,
            hyp: h8_13,
            template: &[
                (1, &[Ps(A, 1), Ps(A, 2), Ps(A, 3)]),
                (2, &[Ps(B, 1), Ps(B, 2), Ps(B, 3)]),
                (3, &[Ps(C, 2), Ps(C, 3), Ps(C, 4)]),
                (0, &[Ps(C, 1), Ng(C, 4), K(5)]),
            ],
            uncorrected: None,
        },
        Case {
            name: "(2)",
            signs: STAR,
            hyp: h8_2,
            template: &[
                (1, &[Ps(A, 1), Ps(A, 2), Ps(A, 3)]),
                (2, &[Ps(B, 1), Ps(B, 2), Ps(B, 5)]),
                (3, &[Ps(C, 1), Ps(C, 2), Ps(C, 4)]),
                (0, &[Ng(A, 3), Ng(B, 5), Ng(C, 4)]),
            ],
            uncorrected: None,
        },
    ],
};

static PATTERNS: [Pattern; 11] = [
    CYC233,
    CYC2323,
    CYC2233,
    TWO_TWO_TWO,
    TWO_TWO,
    TWO_THREE_TWO,
    ADJ_TRIANGLES,
    TRI_PLUS_2333,
    TWO_2333_SHARED,
    THREE_WITH_ONE_TWO,
    PLAIN_THREE,
];

pub fn pattern(kind: ConfigKind) -> &'static Pattern {
    PATTERNS
        .iter()
        .find(|p| p.kind == kind)
        .expect("every reducible kind has a pattern")
}

impl Pattern {
    pub fn role(&self, name: &str) -> usize {
        self.roles
            .iter()
            .position(|r| *r == name)
            .unwrap_or_else(|| panic!("no role {name}"))
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.iter().any(|&(x, y)| (x, y) == (a, b) || (x, y) == (b, a))
    }
}
