//! `contractkit` command-line front end.
//!
//! Exit status: 0 when the question was answered (yes or no), 2 on input
//! errors, 3 when a precondition or class requirement fails.

use std::fs;
use std::io::{self, Write as _};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand};
use contractkit::classify::{classify_lip, classify_lpc};
use contractkit::hardness::{bar_gh_witness, build_bar_gh, build_gh, build_gh_prime, two_colouring, LabeledGraph};
use contractkit::induced_path::{lip_h_free, longest_induced_path};
use contractkit::io::{parse_graph, parse_hypergraph, write_graph, write_roles};
use contractkit::lpc::{longest_path_contractibility_with, LpcOptions};
use contractkit::matching::{maximum_matching, BipartiteGraph};
use contractkit::oracle::{oracle_contracts_to, oracle_longest_path_contraction, oracle_suitable_pair};
use contractkit::par::{self, Mode};
use contractkit::patterns::{describe, parse_pattern};
use contractkit::suitability::{suitability_with, GraphClass, SolveOptions};
use contractkit::{verify_witness, Error, Graph, PatternGraph, VertexId, VertexSet, WitnessStructure};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "contractkit", version, about = "Path contraction on H-free graphs")]
struct Cli {
    /// Worker threads for parallel sweeps (0: all cores).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct ClassArgs {
    /// Graph class: p2p4, p1p2p3, p1p5 or sp1p4:<s>.
    #[arg(long)]
    class: GraphClass,
    /// Verify class membership before solving.
    #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
    check_class: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Longest path the graph contracts to, by the class solver.
    Lpc {
        #[command(flatten)]
        class: ClassArgs,
        graph: PathBuf,
    },
    /// Longest induced path, optionally for an H-free graph with H a linear forest.
    Lip {
        /// Only consider paths with at most this many vertices.
        #[arg(long)]
        cap: Option<usize>,
        /// Pattern H (expression or file); the graph must be H-free.
        #[arg(long)]
        pattern: Option<PathBuf>,
        graph: PathBuf,
    },
    /// Is (u, v) a P_k-suitable pair?
    Suitability {
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long)]
        u: VertexId,
        #[arg(long)]
        v: VertexId,
        #[arg(long)]
        k: usize,
        /// Print `BRANCH <id> <parent> <label>` lines.
        #[arg(long)]
        trace: bool,
        graph: PathBuf,
    },
    /// Exhaustive oracle: longest path contraction, a pattern, or a pair.
    Oracle {
        /// Decide contraction to this pattern (expression or file).
        #[arg(long)]
        pattern: Option<PathBuf>,
        /// With --u and --v: decide P_k-suitability of the pair.
        #[arg(long, requires_all = ["u", "v"])]
        k: Option<usize>,
        #[arg(long)]
        u: Option<VertexId>,
        #[arg(long)]
        v: Option<VertexId>,
        #[arg(required = true)]
        graphs: Vec<PathBuf>,
    },
    /// Gadget G_H of a hypergraph.
    GenGh {
        #[command(flatten)]
        out: OutArgs,
        hypergraph: PathBuf,
    },
    /// Gadget G'_H: G_H plus the edge t1 t2.
    GenGhPrime {
        #[command(flatten)]
        out: OutArgs,
        hypergraph: PathBuf,
    },
    /// Bipartite gadget bar-G_H of girth at least p, with a P_{2p} witness
    /// when the hypergraph is 2-colourable.
    GenBarGh {
        /// Even subdivision parameter, at least 4.
        #[arg(long)]
        p: usize,
        #[command(flatten)]
        out: OutArgs,
        hypergraph: PathBuf,
    },
    /// Complexity status for H-free graphs.
    Classify {
        /// Pattern expression such as `P2+P4`, or a file with an expression or a graph.
        #[arg(long)]
        pattern: PathBuf,
    },
    /// Checks a witness JSON against a graph.
    VerifyWitness { graph: PathBuf, witness: PathBuf },
    /// Maximum matching of a bipartite graph.
    Match { graph: PathBuf },
}

#[derive(Args)]
struct OutArgs {
    /// Write the graph here, roles to `<out>.roles` and any witness to
    /// `<out>.witness.json`; without it everything goes to stdout.
    #[arg(long, short)]
    out: Option<PathBuf>,
}

/// Failure with its exit status.
struct Failure {
    code: u8,
    err: anyhow::Error,
}

impl From<anyhow::Error> for Failure {
    fn from(err: anyhow::Error) -> Self {
        let code = match err.downcast_ref::<Error>() {
            Some(Error::Parse { .. }) | None => 2,
            Some(_) => 3,
        };
        Failure { code, err }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        anyhow::Error::from(e).into()
    }
}

/// `println!` that reports write errors, so a closed pipe ends the run
/// quietly instead of panicking.
macro_rules! outln {
    ($($t:tt)*) => {
        writeln!(io::stdout(), $($t)*).map_err(anyhow::Error::from)?
    };
}

macro_rules! out {
    ($($t:tt)*) => {
        write!(io::stdout(), $($t)*).map_err(anyhow::Error::from)?
    };
}

type Out = Result<(), Failure>;

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_graph(path: &Path) -> anyhow::Result<Graph> {
    parse_graph(&read(path)?).with_context(|| path.display().to_string())
}

/// An inline expression such as `P2+P4` when no file of that name exists;
/// otherwise the file, read as an expression or else as a graph.
fn load_pattern(path: &Path) -> anyhow::Result<PatternGraph> {
    if !path.exists() {
        if let Some(h) = path.to_str().and_then(|e| parse_pattern(e).ok()) {
            return Ok(h);
        }
    }
    let text = read(path)?;
    let expr = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#')).unwrap_or("");
    match parse_pattern(expr) {
        Ok(h) => Ok(h),
        Err(_) => Ok(parse_graph(&text).with_context(|| path.display().to_string())?),
    }
}

fn witness_json(pattern: &str, w: &WitnessStructure) -> Value {
    json!({ "pattern": pattern, "bags": w.bags })
}

fn parse_witness(text: &str) -> anyhow::Result<(PatternGraph, WitnessStructure)> {
    let v: Value = serde_json::from_str(text).context("witness JSON")?;
    let name = v["pattern"].as_str().ok_or_else(|| anyhow!("witness JSON needs a string \"pattern\""))?;
    let bags: Vec<VertexSet> = serde_json::from_value(v["bags"].clone()).context("witness JSON \"bags\"")?;
    Ok((parse_pattern(name)?, WitnessStructure::new(bags)))
}

fn lpc(args: &ClassArgs, graph: &Path) -> Out {
    let g = load_graph(graph)?;
    let opts = LpcOptions { mode: Mode::default(), check_class: args.check_class };
    let (k, w) = longest_path_contractibility_with(&g, args.class, opts)?;
    outln!("k={k}");
    outln!("{}", witness_json(&format!("P{k}"), &w));
    Ok(())
}

fn lip(cap: Option<usize>, pattern: Option<&Path>, graph: &Path) -> Out {
    let g = load_graph(graph)?;
    let p = match pattern {
        Some(hp) => lip_h_free(&g, &load_pattern(hp)?)?,
        None => longest_induced_path(&g, cap)?,
    };
    outln!("length={}", p.len());
    outln!("{}", p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "));
    Ok(())
}

fn suitability(args: &ClassArgs, u: VertexId, v: VertexId, k: usize, trace: bool, graph: &Path) -> Out {
    let g = load_graph(graph)?;
    let opts = SolveOptions { check_class: args.check_class, trace };
    let r = suitability_with(&g, u, v, k, args.class, opts)?;
    for line in &r.trace {
        outln!("{line}");
    }
    match &r.witness {
        Some(w) => {
            outln!("suitable=yes");
            outln!("{}", witness_json(&format!("P{k}"), w));
        }
        None => outln!("suitable=no"),
    }
    Ok(())
}

fn oracle_one(g: &Graph, pattern: Option<&PatternGraph>, pair: Option<(VertexId, VertexId, usize)>) -> Result<String, Error> {
    Ok(match (pattern, pair) {
        (Some(h), _) => match oracle_contracts_to(g, h)? {
            Some(w) => format!("contracts=yes\n{}", witness_json(&describe(h), &w)),
            None => "contracts=no".into(),
        },
        (None, Some((u, v, k))) => match oracle_suitable_pair(g, u, v, k)? {
            Some(w) => format!("suitable=yes\n{}", witness_json(&format!("P{k}"), &w)),
            None => "suitable=no".into(),
        },
        (None, None) => {
            let (k, w) = oracle_longest_path_contraction(g)?;
            format!("k={k}\n{}", witness_json(&format!("P{k}"), &w))
        }
    })
}

fn oracle(pattern: Option<&Path>, pair: Option<(VertexId, VertexId, usize)>, graphs: &[PathBuf]) -> Out {
    let h = pattern.map(load_pattern).transpose()?;
    let gs = graphs.iter().map(|p| load_graph(p)).collect::<anyhow::Result<Vec<_>>>()?;
    let results = par::map(Mode::default(), &gs, |g| oracle_one(g, h.as_ref(), pair));
    for (path, r) in graphs.iter().zip(results) {
        if graphs.len() > 1 {
            outln!("# {}", path.display());
        }
        outln!("{}", r?);
    }
    Ok(())
}

fn emit(lg: &LabeledGraph, witness: Option<(String, WitnessStructure)>, out: &OutArgs) -> Out {
    let graph = write_graph(&lg.graph);
    let roles = write_roles(&lg.role_list());
    match &out.out {
        Some(p) => {
            let side = |ext: &str| PathBuf::from(format!("{}.{ext}", p.display()));
            fs::write(p, graph).with_context(|| p.display().to_string())?;
            fs::write(side("roles"), roles).context("writing roles")?;
            if let Some((name, w)) = &witness {
                fs::write(side("witness.json"), format!("{}\n", witness_json(name, w))).context("writing witness")?;
            }
        }
        None => {
            out!("{graph}");
            outln!("# roles");
            for line in roles.lines() {
                outln!("# {line}");
            }
            if let Some((name, w)) = &witness {
                outln!("# witness {}", witness_json(name, w));
            }
        }
    }
    Ok(())
}

fn gen_bar_gh(p: usize, out: &OutArgs, hyper: &Path) -> Out {
    let h = parse_hypergraph(&read(hyper)?)?;
    let lg = build_bar_gh(&h, p)?;
    let witness = match two_colouring(&h)? {
        Some(c) => {
            let w = bar_gh_witness(&h, p, &c)?;
            Some((format!("P{}", w.len()), w))
        }
        None => None,
    };
    emit(&lg, witness, out)
}

fn classify(pattern: &Path) -> Out {
    let h = load_pattern(pattern)?;
    outln!("{}", classify_lip(&h));
    outln!("{}", classify_lpc(&h));
    Ok(())
}

fn verify(graph: &Path, witness: &Path) -> Out {
    let g = load_graph(graph)?;
    let (h, w) = parse_witness(&read(witness)?)?;
    let report = verify_witness(&g, &h, &w)?;
    match report.violation {
        None => outln!("valid"),
        Some(v) => outln!("invalid: {v}"),
    }
    Ok(())
}

fn matching(graph: &Path) -> Out {
    let g = load_graph(graph)?;
    let (left, right) = g.bipartition().ok_or_else(|| Failure { code: 3, err: anyhow!("graph is not bipartite") })?;
    let edges: Vec<(VertexId, VertexId)> = g.edges().into_iter().map(|(a, b)| if left.contains(&a) { (a, b) } else { (b, a) }).collect();
    let m = maximum_matching(&BipartiteGraph::new(left, right, edges));
    outln!("size={}", m.len());
    for (l, r) in &m.pairs {
        outln!("{l} {r}");
    }
    Ok(())
}

fn run(cli: Cli) -> Out {
    match &cli.cmd {
        Cmd::Lpc { class, graph } => lpc(class, graph),
        Cmd::Lip { cap, pattern, graph } => lip(*cap, pattern.as_deref(), graph),
        Cmd::Suitability { class, u, v, k, trace, graph } => suitability(class, *u, *v, *k, *trace, graph),
        Cmd::Oracle { pattern, k, u, v, graphs } => {
            let pair = k.map(|k| (u.unwrap(), v.unwrap(), k));
            oracle(pattern.as_deref(), pair, graphs)
        }
        Cmd::GenGh { out, hypergraph } => emit(&build_gh(&parse_hypergraph(&read(hypergraph)?)?), None, out),
        Cmd::GenGhPrime { out, hypergraph } => emit(&build_gh_prime(&parse_hypergraph(&read(hypergraph)?)?), None, out),
        Cmd::GenBarGh { p, out, hypergraph } => gen_bar_gh(*p, out, hypergraph),
        Cmd::Classify { pattern } => classify(pattern),
        Cmd::VerifyWitness { graph, witness } => verify(graph, witness),
        Cmd::Match { graph } => matching(graph),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let jobs = cli.jobs;
    match par::with_jobs(jobs, || run(cli)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) if f.err.downcast_ref::<io::Error>().is_some_and(|e| e.kind() == io::ErrorKind::BrokenPipe) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {:#}", f.err);
            ExitCode::from(f.code)
        }
    }
}
