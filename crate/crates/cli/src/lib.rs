//! Command-line front end: every query over an edge-list file, answered as a
//! single JSON document on standard output.
//!
//! Exit codes: 0 on success, 1 when the input fails validation (bad graph,
//! unknown label, oracle budget), 2 on usage errors.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use allpath::oracle::{
    interval_bf, interval_table, is_convex_bf, numbers_bf, numbers_from_table, OracleError,
};
use allpath::{
    decompose, generate, AllPath, BlockCutTree, ConvexityError, ConvexityReport, Family, GenError, GenSpec,
    Graph, GraphError, OracleBudget, VertexSet,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "allpath",
    version,
    about = "All-path convexity queries on undirected graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Is the set convex?
    Convex(SetQuery),
    /// Interval of the set.
    Interval(SetQuery),
    /// Convex hull of the set.
    Hull(SetQuery),
    /// Convexity, interval, hull and geodetic iteration numbers with witnesses.
    Numbers {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        oracle: OracleArgs,
        /// Fail on the one-vertex graph instead of reporting c = 0.
        #[arg(long)]
        strict: bool,
    },
    /// Block-cut tree description.
    Blocks {
        #[command(flatten)]
        graph: GraphArgs,
        /// Also render the tree in Graphviz DOT syntax.
        #[arg(long)]
        dot: bool,
    },
    /// Generate a graph and print it as an edge list.
    Gen(GenArgs),
    /// Compare fast answers with the brute-force oracle on every subset.
    OracleCheck {
        #[command(flatten)]
        graph: GraphArgs,
        /// Raise the oracle's vertex limit.
        #[arg(long, default_value_t = OracleBudget::DEFAULT_MAX_N)]
        max_n: usize,
    },
}

#[derive(Debug, Args)]
struct GraphArgs {
    /// Edge-list file.
    #[arg(short = 'g', long = "graph")]
    graph: PathBuf,
}

#[derive(Debug, Args)]
struct OracleArgs {
    /// Answer by brute-force path enumeration instead.
    #[arg(long)]
    oracle: bool,
    /// Raise the oracle's vertex limit.
    #[arg(long, default_value_t = OracleBudget::DEFAULT_MAX_N)]
    max_n: usize,
}

impl OracleArgs {
    fn budget(&self) -> Option<OracleBudget> {
        self.oracle.then(|| OracleBudget::with_max_n(self.max_n))
    }
}

#[derive(Debug, Args)]
struct SetQuery {
    #[command(flatten)]
    graph: GraphArgs,
    #[command(flatten)]
    set: SetArgs,
    #[command(flatten)]
    oracle: OracleArgs,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct SetArgs {
    /// Comma-separated vertex labels.
    #[arg(short = 's', long = "set", value_delimiter = ',', num_args = 0..)]
    inline: Option<Vec<String>>,
    /// File with one vertex label per line.
    #[arg(short = 'S', long = "set-file")]
    file: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
#[value(rename_all = "snake_case")]
enum FamilyName {
    Tree,
    Cycle,
    Complete,
    Cactus,
    RandomConnected,
    BlockChain,
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: FamilyName,
    /// Vertex count; derived from the block sizes for block_chain.
    #[arg(short = 'n', long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Extra-edge probability for random_connected.
    #[arg(long, default_value_t = 0.2)]
    p: f64,
    /// Probability that a cactus step adds a cycle rather than an edge.
    #[arg(long, default_value_t = 0.5)]
    cycle_prob: f64,
    /// Longest cycle a cactus step may add.
    #[arg(long, default_value_t = 8)]
    max_cycle: usize,
    /// Block sizes of one chain, comma-separated; repeat for more chains
    /// sharing vertex 0.
    #[arg(long, value_delimiter = ',', action = clap::ArgAction::Append)]
    sizes: Vec<usize>,
    /// Number of values in each `--sizes` occurrence (filled in by the parser).
    #[arg(skip)]
    chain_lengths: Vec<usize>,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Convexity(#[from] ConvexityError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Gen(#[from] GenError),
    #[error("--n is required for family {0}")]
    MissingOrder(&'static str),
    #[error("--sizes is required for block_chain")]
    MissingSizes,
}

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let matches = match <Cli as clap::CommandFactory>::command().try_get_matches_from(&args) {
        Ok(m) => m,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{rendered}")
            } else {
                write!(out, "{rendered}")
            };
            return code;
        }
    };
    let mut cli = match <Cli as clap::FromArgMatches>::from_arg_matches(&matches) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return EXIT_USAGE;
        }
    };
    if let (Command::Gen(gen), Some(("gen", sub))) = (&mut cli.command, matches.subcommand()) {
        gen.chain_lengths = sub
            .get_occurrences::<usize>("sizes")
            .map(|occ| occ.map(|values| values.count()).collect())
            .unwrap_or_default();
    }
    match execute(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INVALID
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn load_graph(args: &GraphArgs) -> Result<Graph, CliError> {
    Ok(Graph::parse_edge_list(&read(&args.graph)?)?)
}

fn load_set(g: &Graph, args: &SetArgs) -> Result<VertexSet, CliError> {
    let labels: Vec<String> = match (&args.inline, &args.file) {
        (Some(inline), _) => inline.clone(),
        (None, Some(path)) => read(path)?.lines().map(|l| l.trim().to_string()).collect(),
        (None, None) => unreachable!("clap requires one of -s / -S"),
    };
    Ok(g.labeled_set(labels.iter().filter(|l| !l.is_empty()))?)
}

fn labels(g: &Graph, s: &VertexSet) -> Value {
    let mut names: Vec<&str> = g.set_labels(s).collect();
    names.sort_unstable();
    json!(names)
}

fn summary(g: &Graph, t: &BlockCutTree) -> Value {
    let stats = t.end_block_stats();
    json!({
        "n": g.n(),
        "m": g.m(),
        "blocks": t.block_count(),
        "cut_vertices": t.cut_vertices().len(),
        "eb": stats.eb,
        "b": stats.b,
    })
}

fn envelope(
    command: &str,
    g: &Graph,
    t: &BlockCutTree,
    engine: &str,
    result: Value,
    started: Instant,
) -> Value {
    json!({
        "command": command,
        "engine": engine,
        "graph_summary": summary(g, t),
        "result": result,
        "elapsed_micros": started.elapsed().as_micros() as u64,
    })
}

fn report_json(g: &Graph, r: &ConvexityReport) -> Value {
    json!({
        "c": r.c,
        "i": r.i,
        "h": r.h,
        "gin": r.gin,
        "max_convex_witness": labels(g, &r.max_convex_witness),
        "min_interval_witness": labels(g, &r.min_interval_witness),
        "trivial": r.trivial,
    })
}

fn engine_name(oracle: bool) -> &'static str {
    if oracle {
        "oracle"
    } else {
        "block_cut_tree"
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<(), CliError> {
    let doc = match command {
        Command::Convex(q) => set_query("convex", q)?,
        Command::Interval(q) => set_query("interval", q)?,
        Command::Hull(q) => set_query("hull", q)?,
        Command::Numbers {
            graph,
            oracle,
            strict,
        } => {
            let g = load_graph(&graph)?;
            let started = Instant::now();
            let q = AllPath::new(&g);
            if strict {
                q.convexity_number_strict()?;
            }
            let r = match oracle.budget() {
                Some(budget) => numbers_bf(&g, &budget)?,
                None => q.report(),
            };
            envelope(
                "numbers",
                &g,
                q.tree(),
                engine_name(oracle.oracle),
                report_json(&g, &r),
                started,
            )
        }
        Command::Blocks { graph, dot } => {
            let g = load_graph(&graph)?;
            let started = Instant::now();
            let t = decompose(&g);
            let stats = t.end_block_stats();
            let blocks: Vec<Value> = t
                .blocks()
                .map(|b| labels(&g, &b.iter().copied().collect()))
                .collect();
            let edges: Vec<Value> = t.tree_edges().map(|(b, z)| json!([b, g.label(z)])).collect();
            let cuts: VertexSet = t.cut_vertices().iter().copied().collect();
            let mut result = json!({
                "blocks": blocks,
                "cut_vertices": labels(&g, &cuts),
                "tree_edges": edges,
                "end_blocks": stats.end_blocks,
            });
            if dot {
                result["dot"] = json!(t.to_dot(&g));
            }
            envelope("blocks", &g, &t, engine_name(false), result, started)
        }
        Command::Gen(args) => {
            let g = generate(&gen_spec(&args)?)?;
            return write!(out, "{}", g.to_edge_list()).map_err(|source| CliError::Io {
                path: PathBuf::from("<stdout>"),
                source,
            });
        }
        Command::OracleCheck { graph, max_n } => {
            let g = load_graph(&graph)?;
            let started = Instant::now();
            let budget = OracleBudget::with_max_n(max_n);
            let table = interval_table(&g, &budget)?;
            let q = AllPath::new(&g);
            let n = g.n();
            let mut mismatches = Vec::new();
            for bits in 0..1u64 << n {
                let s = VertexSet::from_bits(bits, n);
                let slow = table[bits as usize];
                let mut slow_hull = bits;
                while table[slow_hull as usize] != slow_hull {
                    slow_hull = table[slow_hull as usize];
                }
                let fast = q.interval(&s);
                let checks = [
                    ("interval", fast.to_bits() == slow),
                    ("hull", q.hull(&s).to_bits() == slow_hull),
                    ("convex", q.is_convex(&s) == (slow == bits)),
                ];
                for (what, ok) in checks {
                    if !ok {
                        mismatches.push(json!({ "query": what, "set": labels(&g, &s) }));
                    }
                }
            }
            let fast = q.report();
            let slow = numbers_from_table(n, &table);
            let numbers_agree = (fast.c, fast.i, fast.h, fast.gin) == (slow.c, slow.i, slow.h, slow.gin);
            let result = json!({
                "subsets": 1u64 << n,
                "mismatches": mismatches,
                "numbers": { "fast": report_json(&g, &fast), "oracle": report_json(&g, &slow) },
                "agree": mismatches.is_empty() && numbers_agree,
            });
            envelope("oracle-check", &g, q.tree(), "both", result, started)
        }
    };
    writeln!(
        out,
        "{}",
        serde_json::to_string_pretty(&doc).expect("json values serialize")
    )
    .map_err(|source| CliError::Io {
        path: PathBuf::from("<stdout>"),
        source,
    })
}

fn set_query(command: &str, q: SetQuery) -> Result<Value, CliError> {
    let g = load_graph(&q.graph)?;
    let s = load_set(&g, &q.set)?;
    let started = Instant::now();
    let engine = AllPath::new(&g);
    let result = match (command, q.oracle.budget()) {
        ("convex", None) => json!(engine.is_convex(&s)),
        ("convex", Some(b)) => json!(is_convex_bf(&g, &s, &b)?),
        (_, None) => labels(&g, &engine.interval(&s)),
        // Hull equals the interval fixpoint; the oracle iterates to it.
        ("hull", Some(b)) => labels(&g, &allpath::oracle::hull_bf(&g, &s, &b)?.hull),
        (_, Some(b)) => labels(&g, &interval_bf(&g, &s, &b)?),
    };
    Ok(envelope(
        command,
        &g,
        engine.tree(),
        engine_name(q.oracle.oracle),
        result,
        started,
    ))
}

fn gen_spec(args: &GenArgs) -> Result<GenSpec, CliError> {
    let family = match args.family {
        FamilyName::Tree => Family::Tree,
        FamilyName::Cycle => Family::Cycle,
        FamilyName::Complete => Family::Complete,
        FamilyName::Cactus => Family::Cactus {
            cycle_prob: args.cycle_prob,
            max_cycle: args.max_cycle,
        },
        FamilyName::RandomConnected => Family::RandomConnected { p: args.p },
        FamilyName::BlockChain => {
            if args.sizes.is_empty() {
                return Err(CliError::MissingSizes);
            }
            let mut rest = args.sizes.as_slice();
            let mut chains = Vec::new();
            let lengths = if args.chain_lengths.is_empty() {
                vec![args.sizes.len()]
            } else {
                args.chain_lengths.clone()
            };
            for len in lengths {
                let (chain, tail) = rest.split_at(len);
                chains.push(chain.to_vec());
                rest = tail;
            }
            let mut spec = GenSpec::block_chain(chains);
            if let Some(n) = args.n {
                spec.n = n;
            }
            spec.seed = args.seed;
            return Ok(spec);
        }
    };
    let n = args.n.ok_or(CliError::MissingOrder(family.name()))?;
    Ok(GenSpec::new(family, n, args.seed))
}
