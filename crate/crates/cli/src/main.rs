mod report;
mod verify;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use swk_core::blocks::{block_decomposition, is_block_graph, nm_block_graph, sw3_block_formula};
use swk_core::io::{parse_edgelist, parse_graph6, parse_graph6_corpus};
use swk_core::steiner::{mean_steiner, steiner_wiener_with, DEFAULT_K_MAX};
use swk_core::structure::{classify_triples, is_median, is_modular};
use swk_core::{average_distance, make_family, wiener_index, Error, Family, FamilySpec, Graph};

use report::{GraphSummary, Report};
use verify::{Suite, SuiteOptions};

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_PRECONDITION: u8 = 3;

#[derive(Parser)]
#[command(name = "swk", version, about = "Steiner distances and Steiner k-Wiener indices of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Worker threads (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,

    /// Emit the report as JSON.
    #[arg(long, global = true, conflicts_with = "plain")]
    json: bool,

    /// Emit a human-readable report (default).
    #[arg(long, global = true)]
    plain: bool,
}

#[derive(Subcommand)]
enum Command {
    /// W, SW_k, mu and mu_k of one graph.
    Index {
        #[command(flatten)]
        source: GraphSource,
        #[arg(short = 'k', default_value_t = 3)]
        k: usize,
        /// Largest terminal set for the exact Steiner tree routine.
        #[arg(long, default_value_t = DEFAULT_K_MAX)]
        k_max: usize,
    },
    /// Modular/median flags, non-modular triple count and block structure.
    Structure {
        #[command(flatten)]
        source: GraphSource,
    },
    /// Run a verification suite; exit status 1 if any check fails.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Largest graph order (or product order for `products`, cube dimension for
        /// `fibonacci`/`lucas`).
        #[arg(long)]
        max_n: Option<usize>,
        /// Number of random instances.
        #[arg(long)]
        count: Option<usize>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// graph6 corpus (one graph per line) for `modular-bound`.
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
}

#[derive(Args)]
struct GraphSource {
    /// Input file; `-` or omitted reads standard input.
    #[arg(long, conflicts_with = "family")]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Edgelist)]
    format: Format,
    /// Build a standard family instead of reading input.
    #[arg(long)]
    family: Option<String>,
    #[arg(short = 'n', requires = "family")]
    n: Option<usize>,
    /// Second parameter (complete_bipartite).
    #[arg(short = 'm', requires = "family")]
    m: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Edgelist,
    Graph6,
}

/// A failure carrying its exit status.
struct Exit(u8, String);

impl From<Error> for Exit {
    fn from(e: Error) -> Self {
        let code = match e {
            _ if e.is_parse() => EXIT_PARSE,
            Error::Internal(_) => EXIT_VERIFY_FAILED,
            _ => EXIT_PRECONDITION,
        };
        Exit(code, e.to_string())
    }
}

fn load(src: &GraphSource) -> Result<(String, Graph), Exit> {
    if let Some(name) = &src.family {
        let family: Family = name.parse()?;
        let n = src
            .n
            .ok_or_else(|| Exit(EXIT_PRECONDITION, "--family needs -n".into()))?;
        let spec = match family {
            Family::CompleteBipartite => FamilySpec::bipartite(n, src.m.unwrap_or(n)),
            _ => FamilySpec::new(family, n),
        };
        let label = match family {
            Family::CompleteBipartite => format!("{family} n={} m={}", spec.n, spec.m),
            _ => format!("{family} n={n}"),
        };
        return Ok((label, make_family(spec)?));
    }
    let (label, bytes) = match &src.input {
        Some(p) if p.as_os_str() != "-" => {
            let bytes = std::fs::read(p)
                .map_err(|e| Exit(EXIT_PARSE, format!("{}: {e}", p.display())))?;
            (p.display().to_string(), bytes)
        }
        _ => {
            let mut buf = Vec::new();
            std::io::stdin()
                .read_to_end(&mut buf)
                .map_err(|e| Exit(EXIT_PARSE, format!("stdin: {e}")))?;
            ("<stdin>".to_string(), buf)
        }
    };
    let g = match src.format {
        Format::Graph6 => parse_graph6(&bytes)?,
        Format::Edgelist => {
            let text = String::from_utf8(bytes)
                .map_err(|_| Exit(EXIT_PARSE, "input is not UTF-8".into()))?;
            parse_edgelist(&text)?
        }
    };
    Ok((label, g))
}

fn require_connected(g: &Graph) -> Result<(), Exit> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::Disconnected.into())
    }
}

fn cmd_index(source: &GraphSource, k: usize, k_max: usize) -> Result<Report, Exit> {
    let mut report = Report::new();
    let (label, g) = report.timed("load", || load(source))?;
    report.graph = Some(GraphSummary::of(label, &g));
    require_connected(&g)?;
    if k < 2 || k > g.n().min(k_max) {
        return Err(Exit(
            EXIT_PRECONDITION,
            format!("k={k} outside 2..={} for n={}", g.n().min(k_max), g.n()),
        ));
    }
    let w = report.timed("wiener", || wiener_index(&g))?;
    report.integer("W", &w);
    let sw = report.timed("steiner_wiener", || steiner_wiener_with(&g, k, k_max))?;
    report.integer(format!("SW_{k}"), &sw);
    let mu = report.timed("averages", || average_distance(&g))?;
    report.ratio("mu", &mu);
    let mu_k = swk_core::ExactRatio::new(sw, swk_core::binomial(g.n() as u64, k as u64))?;
    report.ratio(format!("mu_{k}"), &mu_k);
    debug_assert!(k_max != DEFAULT_K_MAX || mu_k == mean_steiner(&g, k)?);
    Ok(report)
}

fn cmd_structure(source: &GraphSource) -> Result<Report, Exit> {
    let mut report = Report::new();
    let (label, g) = report.timed("load", || load(source))?;
    report.graph = Some(GraphSummary::of(label, &g));
    require_connected(&g)?;
    if g.n() < 3 {
        return Err(Exit(EXIT_PRECONDITION, "structure needs at least three vertices".into()));
    }

    let cls = report.timed("triples", || classify_triples(&g))?;
    let modular = report.timed("recognition", || is_modular(&g))?;
    let median = report.timed("recognition", || is_median(&g))?;
    report.flag("modular", modular);
    report.flag("median", median);
    report.flag("bipartite", g.is_bipartite());
    report.integer("triples", &cls.total_triples);
    report.integer("nm", &cls.nonmodular);

    let dec = report.timed("blocks", || block_decomposition(&g))?;
    report.flag("blocks", dec.len());
    report.flag("block_sizes", format!("{:?}", dec.block_sizes()));
    report.flag("cut_vertices", format!("{:?}", dec.cut_vertices.to_vec()));
    let block_graph = is_block_graph(&g);
    report.flag("block_graph", block_graph);
    if block_graph {
        let nm_lemma = report.timed("block_formula", || nm_block_graph(&g, &dec))?;
        report.integer("nm (block formula)", &nm_lemma);
        let doubled = report.timed("block_formula", || sw3_block_formula(&g))?;
        let (half, odd) = (&doubled >> 1usize, doubled.bit(0));
        if odd {
            return Err(Exit(EXIT_VERIFY_FAILED, format!("2*SW3 = {doubled} is odd")));
        }
        report.integer("SW_3 (block formula)", &half);
    }
    Ok(report)
}

fn cmd_verify(
    suite: Suite,
    max_n: Option<usize>,
    count: Option<usize>,
    seed: u64,
    corpus: Option<&PathBuf>,
) -> Result<Report, Exit> {
    let corpus = match corpus {
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| Exit(EXIT_PARSE, format!("{}: {e}", p.display())))?;
            Some(parse_graph6_corpus(&text)?)
        }
        None => None,
    };
    let opts = SuiteOptions {
        max_n,
        count,
        seed,
        corpus,
    };
    Ok(verify::run(suite, &opts)?)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.threads > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global()
        {
            eprintln!("swk: thread pool: {e}");
        }
    }

    let outcome = match &cli.command {
        Command::Index { source, k, k_max } => cmd_index(source, *k, *k_max),
        Command::Structure { source } => cmd_structure(source),
        Command::Verify {
            suite,
            max_n,
            count,
            seed,
            corpus,
        } => cmd_verify(*suite, *max_n, *count, *seed, corpus.as_ref()),
    };

    match outcome {
        Ok(report) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            } else {
                print!("{}", report.to_plain());
            }
            if report.all_hold() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_VERIFY_FAILED)
            }
        }
        Err(Exit(code, msg)) => {
            eprintln!("swk: {msg}");
            ExitCode::from(code)
        }
    }
}
