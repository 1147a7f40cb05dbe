//! `sgcolor`: command-line front end.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 no coloring exists,
//! 3 a check failed (invalid coloring, failed audit, solver disagreement).

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use sgcolor::blocks::block_decompose;
use sgcolor::color::{restrict, verify, verify_class_balance, verify_edge_local};
use sgcolor::construct::{
    audit_claim, color_53, color_theorem5_traced, detect_bad_blocks, theorem5_demands, ClaimReport,
};
use sgcolor::cycles::color_cycle_graph;
use sgcolor::exact::{beta, chi_fb_exact_with_cap, lp_cap, search_coloring};
use sgcolor::generate::{self, Family};
use sgcolor::{BalancedWitness, Coloring, DemandMap, Error, SignedGraph};

const EXIT_NO_COLORING: u8 = 2;
const EXIT_CHECK_FAILED: u8 = 3;

#[derive(Parser)]
#[command(name = "sgcolor", version, about = "Balanced colorings of signed graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a named or random graph.
    Gen(GenArgs),
    /// Report whether a graph is balanced, with a witness.
    Balance { graph: PathBuf },
    /// Switch a graph at a vertex set.
    Switch {
        graph: PathBuf,
        /// Comma-separated vertices.
        #[arg(long, value_delimiter = ',', conflicts_with = "canonical")]
        at: Vec<usize>,
        /// Output the canonical signature instead.
        #[arg(long)]
        canonical: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// List blocks, cut vertices, bridges and bad blocks.
    Blocks { graph: PathBuf },
    /// Compute a balanced coloring.
    Color(ColorArgs),
    /// Check a coloring with both verifiers.
    Verify {
        graph: PathBuf,
        coloring: PathBuf,
        #[command(flatten)]
        demand: DemandArgs,
    },
    /// Exact fractional balanced chromatic number.
    Chifb {
        graph: PathBuf,
        /// Write the optimal cover here.
        #[arg(long)]
        cert: Option<PathBuf>,
        /// Vertex cap for the LP (default from SG_LP_CAP or 14).
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Largest balanced set.
    Beta { graph: PathBuf },
    /// Check the extension templates on every boundary and signature case.
    AuditClaims {
        /// `all` or a claim number from 2 to 8.
        #[arg(long, default_value = "all")]
        claim: String,
    },
    /// Time the constructive colorings on random graphs.
    Bench {
        #[arg(long, default_value_t = 100)]
        count: u64,
        #[arg(long, default_value_t = 30)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyName {
    K4Minus,
    K4Bullet,
    NegCycle,
    PosCycle,
    NegCube,
    Random,
}

#[derive(Args)]
struct GenArgs {
    family: FamilyName,
    /// Cycle length.
    #[arg(long, default_value_t = 5)]
    k: usize,
    #[arg(long, default_value_t = 10)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 0.5)]
    neg_prob: f64,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Construct,
    Exact,
    Cycle,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Phi {
    /// `6 - deg(v)`, at most 5.
    Degree,
}

#[derive(Args)]
struct DemandArgs {
    /// Colors per vertex.
    #[arg(long, conflicts_with = "phi")]
    q: Option<usize>,
    #[arg(long)]
    phi: Option<Phi>,
}

impl DemandArgs {
    fn demands(&self, g: &SignedGraph) -> Option<DemandMap> {
        match (self.q, self.phi) {
            (Some(q), _) => Some(DemandMap::constant(g.n(), q)),
            (None, Some(Phi::Degree)) => Some(theorem5_demands(g)),
            (None, None) => None,
        }
    }
}

#[derive(Args)]
struct ColorArgs {
    graph: PathBuf,
    #[arg(long, default_value_t = 5)]
    p: usize,
    #[command(flatten)]
    demand: DemandArgs,
    #[arg(long, value_enum, default_value = "construct")]
    method: Method,
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Print the reduction steps to stderr.
    #[arg(long)]
    trace: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn read_graph(path: &Path) -> anyhow::Result<SignedGraph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    SignedGraph::parse(&text).with_context(|| format!("parsing {}", path.display()))
}

fn emit(output: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn run(cmd: Command) -> anyhow::Result<u8> {
    match cmd {
        Command::Gen(a) => gen(a),
        Command::Balance { graph } => {
            let g = read_graph(&graph)?;
            match g.balance_check() {
                BalancedWitness::Switching(s) => {
                    let signs: String = s.iter().map(|x| x.symbol()).collect();
                    println!("balanced");
                    println!("switching {signs}");
                }
                BalancedWitness::NegCycle(c) => {
                    println!("unbalanced");
                    println!("negative cycle {}", join(&c));
                }
            }
            Ok(0)
        }
        Command::Switch {
            graph,
            at,
            canonical,
            output,
        } => {
            let g = read_graph(&graph)?;
            let h = if canonical {
                g.canonical_signature()
            } else {
                g.switch_at(&at)?
            };
            emit(output.as_deref(), &h.to_text())?;
            Ok(0)
        }
        Command::Blocks { graph } => {
            let g = read_graph(&graph)?;
            let bd = block_decompose(&g);
            for (i, (vs, es)) in bd.blocks.iter().zip(&bd.block_edges).enumerate() {
                println!("block {i}: vertices {} edges {}", join(vs), es.len());
            }
            println!("cut vertices: {}", join(&bd.cut_vertices));
            let bridges: Vec<String> = bd.bridges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
            println!("bridges: {}", bridges.join(","));
            for b in detect_bad_blocks(&g) {
                println!("bad block: {b}");
            }
            Ok(0)
        }
        Command::Color(a) => color(a),
        Command::Verify {
            graph,
            coloring,
            demand,
        } => {
            let g = read_graph(&graph)?;
            let text = fs::read_to_string(&coloring).with_context(|| format!("reading {}", coloring.display()))?;
            let f = Coloring::parse(&text).with_context(|| format!("parsing {}", coloring.display()))?;
            let phi = demand.demands(&g).unwrap_or_else(|| f.demands());
            let local = verify_edge_local(&g, &f, &phi);
            let classes = verify_class_balance(&g, &f, &phi);
            match (&local, &classes) {
                (Ok(()), Ok(())) => {
                    println!("valid");
                    Ok(0)
                }
                _ => {
                    for (name, v) in [("edge-local", local), ("class-balance", classes)] {
                        if let Err(v) = v {
                            println!("invalid ({name}): {v}");
                        }
                    }
                    Ok(EXIT_CHECK_FAILED)
                }
            }
        }
        Command::Chifb { graph, cert, cap } => {
            let g = read_graph(&graph)?;
            let cap = cap.unwrap_or_else(lp_cap);
            let res = match chi_fb_exact_with_cap(&g, cap) {
                Err(Error::CapExceeded { n, cap }) => {
                    bail!("{n} vertices exceed the LP cap {cap}; raise it with --cap or SG_LP_CAP")
                }
                r => r?,
            };
            println!("chi_fb = {}/{}", res.value.numer(), res.value.denom());
            println!(
                "lower_bound n/beta = {}/{}",
                res.lower_bound.numer(),
                res.lower_bound.denom()
            );
            if let Some(path) = cert {
                emit(Some(&path), &res.certificate.to_text())?;
            }
            Ok(0)
        }
        Command::Beta { graph } => {
            let g = read_graph(&graph)?;
            let (b, witness) = beta(&g);
            println!("beta = {b}");
            println!("witness {}", join(&witness));
            Ok(0)
        }
        Command::AuditClaims { claim } => audit(&claim),
        Command::Bench { count, max_n, seed } => bench(count, max_n, seed),
    }
}

fn gen(a: GenArgs) -> anyhow::Result<u8> {
    let family = match a.family {
        FamilyName::K4Minus => Family::K4Minus,
        FamilyName::K4Bullet => Family::K4Bullet,
        FamilyName::NegCycle => Family::NegCycle(a.k),
        FamilyName::PosCycle => Family::PosCycle(a.k),
        FamilyName::NegCube => Family::NegCube,
        FamilyName::Random => Family::RandomSubcubic {
            n: a.n,
            seed: a.seed,
            neg_prob: a.neg_prob,
        },
    };
    let g = generate::generate(&family)?;
    emit(a.output.as_deref(), &g.to_text())?;
    Ok(0)
}

fn color(a: ColorArgs) -> anyhow::Result<u8> {
    let g = read_graph(&a.graph)?;
    let Some(phi) = a.demand.demands(&g) else {
        bail!("give --q or --phi degree");
    };
    if let Some(v) = (0..g.n()).find(|&v| phi.get(v) > a.p) {
        bail!("demand {} at vertex {v} exceeds p={}", phi.get(v), a.p);
    }
    let degree = a.demand.phi == Some(Phi::Degree);
    let found = match a.method {
        Method::Exact => search_coloring(&g, a.p, &phi)?,
        Method::Cycle => {
            let q = if degree { 4 } else { phi.get(0) };
            color_cycle_graph(&g, a.p, q)?
        }
        Method::Construct => {
            if a.p != 5 {
                bail!("--method construct needs p=5");
            }
            if degree {
                let (f, trace) = match color_theorem5_traced(&g) {
                    Err(Error::BadBlock(list)) => bail!("bad blocks prevent the construction: {list}"),
                    r => r?,
                };
                if a.trace {
                    for step in trace {
                        eprintln!("{step}");
                    }
                }
                Some(f)
            } else {
                let q = phi.get(0);
                if q > 3 {
                    bail!("--method construct supports q <= 3 or --phi degree");
                }
                match color_53(&g)? {
                    Some(f) => Some(restrict(&f, &phi)?),
                    None => None,
                }
            }
        }
    };
    let Some(f) = found else {
        println!("no coloring");
        return Ok(EXIT_NO_COLORING);
    };
    if let Err(v) = verify(&g, &f, &phi) {
        eprintln!("computed coloring fails verification: {v}");
        return Ok(EXIT_CHECK_FAILED);
    }
    emit(a.output.as_deref(), &f.to_text())?;
    Ok(0)
}

fn report_lines(rep: &ClaimReport) -> Vec<String> {
    let mut out = vec![format!(
        "claim {}: {} instances, {} passed, {} failed: {}",
        rep.claim,
        rep.instances,
        rep.passed,
        rep.failed,
        if rep.ok() { "PASS" } else { "FAIL" }
    )];
    for (case, count) in &rep.cases {
        out.push(format!("  {case}: {count}"));
    }
    if rep.uncorrected_checked > 0 {
        out.push(format!(
            "  uncorrected template fails on {} of {} instances",
            rep.uncorrected_failed, rep.uncorrected_checked
        ));
    }
    for f in &rep.failures {
        out.push(format!("  failure: {f}"));
    }
    out
}

fn audit(which: &str) -> anyhow::Result<u8> {
    let claims: Vec<u8> = if which == "all" {
        (2..=8).collect()
    } else {
        let c: u8 = which.parse().with_context(|| format!("bad claim {which:?}"))?;
        if !(2..=8).contains(&c) {
            bail!("claim must be all or 2..8");
        }
        vec![c]
    };
    let reports: Vec<sgcolor::Result<ClaimReport>> = std::thread::scope(|s| {
        let handles: Vec<_> = claims.iter().map(|&c| s.spawn(move || audit_claim(c))).collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("audit thread panicked"))
            .collect()
    });
    let mut all_ok = true;
    for rep in reports {
        let rep = rep?;
        all_ok &= rep.ok();
        for line in report_lines(&rep) {
            println!("{line}");
        }
    }
    println!("{}", if all_ok { "PASS" } else { "FAIL" });
    Ok(if all_ok { 0 } else { EXIT_CHECK_FAILED })
}

fn bench(count: u64, max_n: usize, seed: u64) -> anyhow::Result<u8> {
    if max_n < 1 {
        bail!("--max-n must be at least 1");
    }
    let graphs: Vec<SignedGraph> = (0..count)
        .map(|i| generate::random_subcubic(1 + (i as usize % max_n), seed + i, 0.5))
        .collect::<sgcolor::Result<_>>()?;
    let start = Instant::now();
    let (mut colored, mut excluded) = (0, 0);
    for g in &graphs {
        match color_53(g)? {
            Some(_) => colored += 1,
            None => excluded += 1,
        }
    }
    println!(
        "color_53: {count} graphs, {colored} colored, {excluded} (K4,-), {:.3} s",
        start.elapsed().as_secs_f64()
    );
    let start = Instant::now();
    let (mut done, mut skipped) = (0, 0);
    for g in &graphs {
        if !detect_bad_blocks(g).is_empty() {
            skipped += 1;
            continue;
        }
        color_theorem5_traced(g)?;
        done += 1;
    }
    println!(
        "theorem5: {done} graphs, {skipped} with bad blocks skipped, {:.3} s",
        start.elapsed().as_secs_f64()
    );
    Ok(0)
}
