//! Acceptance criteria 1 to 8. Each test prints one `criterion N: PASS|FAIL`
//! line (visible with `--nocapture`) and fails when the criterion does.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sgcolor::color::{all_color_sets, verify, verify_class_balance, verify_edge_local};
use sgcolor::construct::{audit_claim, color_53, color_theorem5, detect_bad_blocks, theorem5_demands};
use sgcolor::cycles::{color_cycle, color_negative_cycle_kk1};
use sgcolor::exact::{beta, chi_fb_exact, search_coloring};
use sgcolor::generate::{self, cycle_with_signs, random_subcubic};
use sgcolor::{ColorSet, Coloring, DemandMap, Sign, SignedGraph};

type Outcome = Result<String, String>;

fn report(n: u8, what: &str, budget: Duration, run: impl FnOnce() -> Outcome) {
    let start = Instant::now();
    let mut out = run();
    let took = start.elapsed();
    if out.is_ok() && took > budget {
        out = Err(format!(
            "took {:.1} s, budget {:.0} s",
            took.as_secs_f64(),
            budget.as_secs_f64()
        ));
    }
    match &out {
        Ok(detail) => println!("criterion {n}: PASS {what} ({detail}; {:.2} s)", took.as_secs_f64()),
        Err(why) => println!("criterion {n}: FAIL {what}: {why}"),
    }
    assert!(out.is_ok(), "criterion {n} failed: {}", out.unwrap_err());
}

fn ratio(a: i64, b: i64) -> BigRational {
    BigRational::new(a.into(), b.into())
}

fn is_k4_minus(g: &SignedGraph) -> bool {
    let k4 = generate::k4_minus();
    g.same_underlying(&k4) && g.switching_equivalent(&k4).expect("same underlying graph")
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

#[test]
fn criterion_1_chi_fb_exact_values() {
    report(
        1,
        "exact fractional balanced chromatic numbers",
        Duration::from_secs(10),
        || {
            let mut cases: Vec<(String, SignedGraph, BigRational)> = vec![
                ("K4• hat".into(), generate::k4_bullet(), ratio(5, 3)),
                ("(K4,-)".into(), generate::k4_minus(), ratio(2, 1)),
                ("negative cube".into(), generate::neg_cube(), ratio(8, 5)),
            ];
            for k in 3..=8 {
                cases.push((
                    format!("negative {k}-cycle"),
                    generate::cycle(k, true).unwrap(),
                    ratio(k as i64, k as i64 - 1),
                ));
                cases.push((
                    format!("positive {k}-cycle"),
                    generate::cycle(k, false).unwrap(),
                    ratio(1, 1),
                ));
            }
            // balanced graphs in disguise: all-positive random graphs switched at random sets
            let mut rng = ChaCha8Rng::seed_from_u64(1);
            for seed in 0..10 {
                let g = random_subcubic(10, seed, 0.0).unwrap();
                let at: Vec<usize> = (0..g.n()).filter(|_| rng.gen_bool(0.5)).collect();
                cases.push((
                    format!("switched balanced graph {seed}"),
                    g.switch_at(&at).unwrap(),
                    ratio(1, 1),
                ));
            }
            for (name, g, want) in &cases {
                let got = chi_fb_exact(g).map_err(|e| format!("{name}: {e}"))?;
                ensure(&got.value == want, || format!("{name}: got {}, want {want}", got.value))?;
                got.certificate
                    .check(g)
                    .map_err(|e| format!("{name}: certificate rejected: {e}"))?;
            }
            Ok(format!("{} graphs", cases.len()))
        },
    );
}

fn named_generators() -> Vec<(String, SignedGraph)> {
    let mut out = vec![
        ("K4• hat".to_string(), generate::k4_bullet()),
        ("negative cube".to_string(), generate::neg_cube()),
    ];
    for k in 3..=12 {
        out.push((format!("negative {k}-cycle"), generate::cycle(k, true).unwrap()));
        out.push((format!("positive {k}-cycle"), generate::cycle(k, false).unwrap()));
    }
    out
}

fn check_53(name: &str, g: &SignedGraph) -> Result<bool, String> {
    let got = color_53(g).map_err(|e| format!("{name}: {e}"))?;
    let excluded = is_k4_minus(g);
    match got {
        None => ensure(excluded, || format!("{name}: no coloring returned"))?,
        Some(f) => {
            ensure(!excluded, || format!("{name}: colored a copy of (K4,-)"))?;
            let phi = DemandMap::constant(g.n(), 3);
            verify_edge_local(g, &f, &phi).map_err(|v| format!("{name}: {v}"))?;
            verify_class_balance(g, &f, &phi).map_err(|v| format!("{name}: {v}"))?;
        }
    }
    Ok(excluded)
}

#[test]
fn criterion_2_theorem3_reproduction() {
    report(2, "(5,3)-colorings of subcubic graphs", Duration::from_secs(60), || {
        for (name, g) in named_generators() {
            check_53(&name, &g)?;
        }
        let k4 = generate::k4_minus();
        for at in [vec![], vec![0], vec![1, 2], vec![0, 1, 2]] {
            ensure(check_53("switched (K4,-)", &k4.switch_at(&at).unwrap())?, || {
                "switched (K4,-) was colored".into()
            })?;
        }
        let mut excluded = 0;
        for seed in 0..500u64 {
            let n = 1 + (seed as usize * 7) % 30;
            let g = random_subcubic(n, seed, 0.5).unwrap();
            ensure(g.is_connected(), || {
                format!("seed {seed}: generator returned a disconnected graph")
            })?;
            if check_53(&format!("random seed {seed}"), &g)? {
                excluded += 1;
            }
        }
        Ok(format!(
            "named generators and 500 random graphs, {excluded} random copies of (K4,-)"
        ))
    });
}

#[test]
fn criterion_3_theorem5_reproduction() {
    report(
        3,
        "(5, 6-deg)-colorings without bad blocks",
        Duration::from_secs(60),
        || {
            let mut done = 0;
            let mut seed = 0u64;
            while done < 200 {
                seed += 1;
                let n = 6 + seed as usize % 35;
                let g = random_subcubic(n, seed, 0.5).unwrap();
                if g.n() < 2 || !detect_bad_blocks(&g).is_empty() {
                    continue;
                }
                let f = color_theorem5(&g).map_err(|e| format!("seed {seed}: {e}"))?;
                for v in 0..g.n() {
                    ensure(f.get(v).len() == 6 - g.degree(v), || {
                        format!("seed {seed}: vertex {v} has {} colors", f.get(v).len())
                    })?;
                }
                let phi = theorem5_demands(&g);
                verify_edge_local(&g, &f, &phi).map_err(|v| format!("seed {seed}: {v}"))?;
                verify_class_balance(&g, &f, &phi).map_err(|v| format!("seed {seed}: {v}"))?;
                done += 1;
            }
            Ok(format!("200 graphs from {seed} seeds"))
        },
    );
}

#[test]
fn criterion_4_claim_audit() {
    report(4, "extension templates of claims 2-8", Duration::from_secs(300), || {
        let reports = std::thread::scope(|s| {
            let hs: Vec<_> = (2..=8u8).map(|c| s.spawn(move || audit_claim(c))).collect();
            hs.into_iter()
                .map(|h| h.join().expect("audit thread"))
                .collect::<Vec<_>>()
        });
        let mut summary = Vec::new();
        for rep in reports {
            let rep = rep.map_err(|e| e.to_string())?;
            ensure(rep.ok(), || {
                format!("claim {}: {} failures, e.g. {:?}", rep.claim, rep.failed, rep.failures)
            })?;
            summary.push(format!("{}:{}", rep.claim, rep.instances));
        }
        Ok(format!("instances per claim {}", summary.join(" ")))
    });
}

/// Connected graphs of maximum degree 3 on `n` vertices, one per
/// isomorphism class, as edge lists.
fn connected_subcubic(n: usize) -> Vec<Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let perms = permutations(n);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        let edges: Vec<(usize, usize)> = (0..pairs.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| pairs[i])
            .collect();
        let mut deg = vec![0; n];
        for &(a, b) in &edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        if deg.iter().any(|&d| d > 3) || !connected(n, &edges) {
            continue;
        }
        let canon = perms
            .iter()
            .map(|p| {
                let mut e: Vec<(usize, usize)> = edges.iter().map(|&(a, b)| (p[a].min(p[b]), p[a].max(p[b]))).collect();
                e.sort_unstable();
                e
            })
            .min()
            .expect("at least one permutation");
        if seen.insert(canon) {
            out.push(edges);
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut reach = vec![false; n];
    reach[0] = true;
    let mut changed = true;
    while changed {
        changed = false;
        for &(a, b) in edges {
            if reach[a] != reach[b] {
                reach[a] = true;
                reach[b] = true;
                changed = true;
            }
        }
    }
    reach.iter().all(|&r| r)
}

/// One signature per switching class: edges of a spanning tree stay
/// positive and the others range over both signs.
fn switching_classes(n: usize, edges: &[(usize, usize)]) -> Vec<SignedGraph> {
    let mut in_tree = vec![false; n];
    in_tree[0] = true;
    let mut tree = vec![false; edges.len()];
    let mut grown = true;
    while grown {
        grown = false;
        for (i, &(a, b)) in edges.iter().enumerate() {
            if in_tree[a] != in_tree[b] {
                in_tree[a] = true;
                in_tree[b] = true;
                tree[i] = true;
                grown = true;
            }
        }
    }
    let free: Vec<usize> = (0..edges.len()).filter(|&i| !tree[i]).collect();
    (0..1u32 << free.len())
        .map(|mask| {
            let signed: Vec<(usize, usize, Sign)> = edges
                .iter()
                .enumerate()
                .map(|(i, &(a, b))| {
                    let minus = free
                        .iter()
                        .position(|&j| j == i)
                        .is_some_and(|bit| mask >> bit & 1 == 1);
                    (a, b, if minus { Sign::Minus } else { Sign::Plus })
                })
                .collect();
            SignedGraph::from_edges(n, &signed).unwrap()
        })
        .collect()
}

#[test]
fn criterion_5_oracle_agreement() {
    report(
        5,
        "search and construction agree for n <= 6",
        Duration::from_secs(300),
        || {
            let (mut graphs, mut instances, mut excluded) = (0, 0, 0);
            for n in 1..=6 {
                for edges in connected_subcubic(n) {
                    graphs += 1;
                    for g in switching_classes(n, &edges) {
                        instances += 1;
                        let name = format!("{g:?}");
                        let phi = DemandMap::constant(n, 3);
                        let searched = search_coloring(&g, 5, &phi).map_err(|e| format!("{name}: {e}"))?;
                        let k4 = is_k4_minus(&g);
                        ensure(searched.is_none() == k4, || {
                            format!("{name}: search says {}", searched.is_some())
                        })?;
                        if let Some(f) = &searched {
                            verify(&g, f, &phi).map_err(|v| format!("{name}: search output {v}"))?;
                        }
                        let built = color_53(&g).map_err(|e| format!("{name}: {e}"))?;
                        ensure(built.is_some() == searched.is_some(), || {
                            format!("{name}: construction disagrees")
                        })?;
                        if let Some(f) = &built {
                            verify(&g, f, &phi).map_err(|v| format!("{name}: construction output {v}"))?;
                        }
                        excluded += usize::from(k4);
                    }
                }
            }
            Ok(format!(
                "{graphs} graphs, {instances} switching classes, {excluded} without a coloring"
            ))
        },
    );
}

/// Every tuple of `q`-sets around the cycle, checked edge by edge.
fn naive_cycle_exists(signs: &[Sign], p: usize, q: usize) -> bool {
    let states = all_color_sets(p, q);
    let k = signs.len();
    let ok = |a: ColorSet, b: ColorSet, s: Sign| match s {
        Sign::Minus => a.bits() & b.bits() == 0,
        Sign::Plus => a.bits() & b.neg().bits() == 0,
    };
    let mut idx = vec![0usize; k];
    loop {
        let good = (0..k).all(|i| ok(states[idx[i]], states[idx[(i + 1) % k]], signs[i]));
        if good {
            return true;
        }
        let mut i = 0;
        loop {
            if i == k {
                return false;
            }
            idx[i] += 1;
            if idx[i] < states.len() {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
}

fn signs_of(mask: u32, k: usize) -> Vec<Sign> {
    (0..k)
        .map(|i| if mask >> i & 1 == 1 { Sign::Minus } else { Sign::Plus })
        .collect()
}

#[test]
fn criterion_6_cycle_dp() {
    report(6, "cycle dynamic program", Duration::from_secs(120), || {
        let mut checked = 0;
        for k in 3..=8 {
            for mask in 0u32..1 << k {
                let signs = signs_of(mask, k);
                let g = cycle_with_signs(&signs).unwrap();
                for p in 1..=4 {
                    for q in 1..=p {
                        let name = format!("k={k} signs={mask:b} p={p} q={q}");
                        let dp = color_cycle(&signs, p, q).map_err(|e| format!("{name}: {e}"))?;
                        let phi = DemandMap::constant(k, q);
                        let oracle = if k <= 4 {
                            naive_cycle_exists(&signs, p, q)
                        } else {
                            search_coloring(&g, p, &phi)
                                .map_err(|e| format!("{name}: {e}"))?
                                .is_some()
                        };
                        ensure(dp.is_some() == oracle, || {
                            format!("{name}: dp {} oracle {oracle}", dp.is_some())
                        })?;
                        if let Some(f) = &dp {
                            verify(&g, f, &phi).map_err(|v| format!("{name}: {v}"))?;
                        }
                        checked += 1;
                    }
                }
            }
        }
        for k in 3..=12 {
            let f = color_negative_cycle_kk1(k).map_err(|e| format!("(k,k-1) k={k}: {e}"))?;
            let mut signs = vec![Sign::Plus; k];
            signs[0] = Sign::Minus;
            let g = cycle_with_signs(&signs).unwrap();
            verify(&g, &f, &DemandMap::constant(k, k - 1)).map_err(|v| format!("(k,k-1) k={k}: {v}"))?;
            ensure(f.p() == k, || format!("(k,k-1) k={k}: palette {}", f.p()))?;
        }
        for k in 5..=12 {
            let g = generate::cycle(k, true).unwrap();
            let signs: Vec<Sign> = (0..k).map(|i| g.sign(i, (i + 1) % k).unwrap()).collect();
            let f = color_cycle(&signs, 5, 4)
                .map_err(|e| e.to_string())?
                .ok_or_else(|| format!("(5,4) k={k}: none"))?;
            verify(&g, &f, &DemandMap::constant(k, 4)).map_err(|v| format!("(5,4) k={k}: {v}"))?;
        }
        Ok(format!("{checked} (k, signs, p, q) cases against the oracles"))
    });
}

fn random_sets(rng: &mut ChaCha8Rng, n: usize, p: usize, q: usize) -> Coloring {
    let all = all_color_sets(p, q);
    Coloring::new(p, (0..n).map(|_| all[rng.gen_range(0..all.len())]).collect()).unwrap()
}

fn random_switching(rng: &mut ChaCha8Rng, n: usize) -> Vec<Sign> {
    (0..n)
        .map(|_| if rng.gen_bool(0.5) { Sign::Minus } else { Sign::Plus })
        .collect()
}

#[test]
fn criterion_7_property_suites() {
    report(
        7,
        "verifier equivalence and switching invariance",
        Duration::from_secs(120),
        || {
            let mut rng = ChaCha8Rng::seed_from_u64(7);
            let (mut valid, mut invalid) = (0, 0);
            for i in 0..10_000u64 {
                let g = random_subcubic(rng.gen_range(2..=8), 1000 + i, rng.gen_range(0.0..=1.0)).unwrap();
                let n = g.n();
                let p = rng.gen_range(2..=5);
                let q = rng.gen_range(1..=p.min(3));
                let phi = DemandMap::constant(n, q);
                let f = match i % 3 {
                    0 => random_sets(&mut rng, n, p, q),
                    _ => match search_coloring(&g, p, &phi).map_err(|e| e.to_string())? {
                        Some(mut f) if i % 3 == 2 => {
                            let v = rng.gen_range(0..n);
                            f.set(v, random_sets(&mut rng, 1, p, q).get(0));
                            f
                        }
                        Some(f) => f,
                        None => random_sets(&mut rng, n, p, q),
                    },
                };
                let a = verify_edge_local(&g, &f, &phi).is_ok();
                let b = verify_class_balance(&g, &f, &phi).is_ok();
                ensure(a == b, || {
                    format!("pair {i}: edge-local {a}, class-balance {b} on {g:?} {f:?}")
                })?;
                if a {
                    valid += 1;
                    let s = random_switching(&mut rng, n);
                    let h = g.switch_by(|v| s[v]);
                    ensure(verify(&h, &f.switched(|v| s[v]), &phi).is_ok(), || {
                        format!("pair {i}: switched coloring invalid")
                    })?;
                } else {
                    invalid += 1;
                }
            }
            ensure(valid > 1000 && invalid > 1000, || {
                format!("unbalanced sample: {valid} valid, {invalid} invalid")
            })?;

            let mut lp_checked = 0;
            for seed in 0..40u64 {
                let g = random_subcubic(rng.gen_range(3..=10), 5000 + seed, 0.5).unwrap();
                let s = random_switching(&mut rng, g.n());
                let h = g.switch_by(|v| s[v]);
                ensure(g.is_balanced() == h.is_balanced(), || {
                    format!("seed {seed}: balance changed")
                })?;
                for x in [&g, &h] {
                    ensure(x.check_witness(&x.balance_check()), || {
                        format!("seed {seed}: bad witness")
                    })?;
                }
                let (cg, ch) = (
                    chi_fb_exact(&g).map_err(|e| e.to_string())?,
                    chi_fb_exact(&h).map_err(|e| e.to_string())?,
                );
                ensure(cg.value == ch.value, || {
                    format!("seed {seed}: chi_fb {} vs {}", cg.value, ch.value)
                })?;
                let (b, _) = beta(&g);
                let bound = ratio(g.n() as i64, b as i64);
                ensure(bound <= cg.value, || {
                    format!("seed {seed}: n/beta {bound} above chi_fb {}", cg.value)
                })?;
                lp_checked += 1;
            }
            Ok(format!(
                "{valid} valid and {invalid} invalid pairs, {lp_checked} LP switching checks"
            ))
        },
    );
}

#[test]
fn criterion_8_beta_witness() {
    report(8, "largest balanced set of K4• hat", Duration::from_secs(10), || {
        let g = generate::k4_bullet();
        let (b, witness) = beta(&g);
        ensure(b == 3 && witness.len() == 3, || {
            format!("beta {b}, witness {witness:?}")
        })?;
        ensure(g.is_balanced_subset(&witness), || {
            format!("witness {witness:?} is unbalanced")
        })?;
        // no 4 of the 5 vertices induce a balanced subgraph
        for skip in 0..5 {
            let four: Vec<usize> = (0..5).filter(|&v| v != skip).collect();
            ensure(!g.is_balanced_subset(&four), || format!("{four:?} is balanced"))?;
        }
        Ok(format!("beta = 3, witness {witness:?}"))
    });
}
