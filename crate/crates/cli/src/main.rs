use clap::{Args, Parser, Subcommand};
use hdensity::bounds::{build_bound_poly, rational_string, verify_bound, BivarPoly, Parity};
use hdensity::graphs::{
    construct_family, enumerate_regular_range, parse_graph6, parse_graph6_lines, write_graph6, Family, Graph,
};
use hdensity::harness::{
    density, paper_campaign, render_json, search_corpus, search_max_density, tree_extremal_check,
    vertexwise_walk_check, CorpusSource,
};
use hdensity::homomorphism::{hom_count, inj_count};
use hdensity::optimize::{certify_threshold, OptParity};
use hdensity::spectral::{eigenvalues, traces, DEFAULT_TOLERANCE};
use serde_json::{json, Value};
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "hdensity", version, about = "Exact homomorphism densities in regular graphs")]
struct Cli {
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// hom(H, G), inj(H, G) and inj(H, G)/|V(G)|.
    Count { pattern: String, graph: String },
    /// Exact traces of adjacency powers and the floating spectrum.
    Spectrum {
        graph: String,
        #[arg(long, default_value_t = 8)]
        k_max: usize,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tol: f64,
    },
    /// Bounding polynomial certificate for a pattern.
    Bound {
        pattern: String,
        /// Require the bipartite construction.
        #[arg(long, conflicts_with = "auto")]
        bipartite: bool,
        /// Choose the construction from the pattern (default).
        #[arg(long)]
        auto: bool,
    },
    /// Check a bound against every connected d-regular graph up to n-max.
    VerifyBound {
        pattern: String,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        n_max: usize,
    },
    /// Majorant verdicts of a polynomial over a range of degrees.
    Certify {
        /// Polynomial JSON, or a bound certificate containing one.
        #[arg(long)]
        poly: PathBuf,
        #[arg(long)]
        parity: OptParity,
        /// Inclusive, e.g. 2..12.
        #[arg(long, value_parser = parse_range)]
        d_range: RangeInclusive<u32>,
    },
    /// Maximum pattern density over d-regular graphs.
    Search(SearchArgs),
    /// Trees: maximizers against graphs of large girth.
    Trees {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        n_max: usize,
    },
    /// Closed odd walks at a single vertex.
    Walks {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n_max: usize,
    },
    /// Every named example and extremal claim.
    VerifyPaper,
    /// graph6 of a family expression such as "circ(7;2,3)".
    Construct { family: String },
    /// graph6 lines of all d-regular graphs on n vertices.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        connected: bool,
    },
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    pattern: String,
    #[arg(long)]
    d: u32,
    #[arg(long, required_unless_present = "corpus")]
    n_max: Option<usize>,
    #[arg(long)]
    connected: bool,
    /// graph6 file to search instead of enumerating.
    #[arg(long, conflicts_with = "n_max")]
    corpus: Option<PathBuf>,
    /// Include every graph in the report.
    #[arg(long)]
    table: bool,
}

enum Failure {
    /// Bad input: exit 1.
    Usage(String),
    /// A checked claim does not hold: exit 2.
    Assertion(String),
}

impl From<hdensity::Error> for Failure {
    fn from(e: hdensity::Error) -> Failure {
        match e {
            hdensity::Error::CertificateRejected { .. } => Failure::Assertion(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

enum Output {
    Json(Value),
    Text(String),
    /// Report of a claim that does not hold, with the reason.
    Refuted(Value, String),
}

fn parse_range(s: &str) -> Result<RangeInclusive<u32>, String> {
    let (a, b) = s.split_once("..").ok_or("expected LO..HI")?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let lo = a.trim().parse::<u32>().map_err(|e| e.to_string())?;
    let hi = b.trim().parse::<u32>().map_err(|e| e.to_string())?;
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok(lo..=hi)
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

/// A graph6 file (first line) if the path exists, otherwise a family
/// expression.
fn load_graph(arg: &str) -> Result<Graph, Failure> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = read(path)?;
        let line = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
        return Ok(parse_graph6(line.trim())?);
    }
    Ok(construct_family(&arg.parse::<Family>()?)?)
}

fn number(x: u128) -> Value {
    u64::try_from(x).map_or_else(|_| json!(x.to_string()), |v| json!(v))
}

fn run(cli: Cli) -> Result<Output, Failure> {
    match cli.command {
        Command::Count { pattern, graph } => {
            let (h, g) = (load_graph(&pattern)?, load_graph(&graph)?);
            let inj = inj_count(&h, &g);
            Ok(Output::Json(json!({
                "schema": "hdensity.count/1",
                "pattern": write_graph6(&h),
                "graph": write_graph6(&g),
                "hom": number(hom_count(&h, &g)),
                "inj": number(inj),
                "density": rational_string(&density(inj, g.order())),
            })))
        }
        Command::Spectrum { graph, k_max, tol } => {
            let g = load_graph(&graph)?;
            let tr = traces(&g, k_max)?;
            let spectrum = eigenvalues(&g, tol);
            Ok(Output::Json(json!({
                "schema": "hdensity.spectrum/1",
                "graph": write_graph6(&g),
                "traces": tr.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
                "eigenvalues": spectrum.eigenvalues.iter().map(|(l, m)| json!({"value": l, "multiplicity": m})).collect::<Vec<_>>(),
                "tolerance": tol,
            })))
        }
        Command::Bound { pattern, bipartite, auto: _ } => {
            let h = load_graph(&pattern)?;
            let parity = bipartite.then_some(Parity::Bipartite);
            Ok(Output::Json(build_bound_poly(&h, parity)?.to_json()))
        }
        Command::VerifyBound { pattern, d, n_max } => {
            let h = load_graph(&pattern)?;
            let cert = build_bound_poly(&h, None)?;
            let corpus = enumerate_regular_range(d as usize + 1..=n_max, d as usize, true)?;
            let report = verify_bound(&cert, &corpus, d)?;
            Ok(Output::Json(report.to_json()))
        }
        Command::Certify { poly, parity, d_range } => {
            let v: Value = serde_json::from_str(&read(&poly)?).map_err(|e| Failure::Usage(e.to_string()))?;
            let p = BivarPoly::from_json(v.get("poly").unwrap_or(&v))?;
            Ok(Output::Json(certify_threshold(&p, parity, d_range)?.to_json()))
        }
        Command::Search(args) => {
            let h = load_graph(&args.pattern)?;
            let report = match &args.corpus {
                Some(path) => {
                    let corpus = parse_graph6_lines(&read(path)?)?;
                    let corpus: Vec<Graph> = if args.connected {
                        corpus.into_iter().filter(Graph::is_connected).collect()
                    } else {
                        corpus
                    };
                    search_corpus(&h, args.d, &corpus, CorpusSource::File)?
                }
                None => search_max_density(&h, args.d, args.n_max.expect("required by clap"), args.connected)?,
            };
            Ok(Output::Json(report.to_json(args.table)))
        }
        Command::Trees { pattern, d, n_max } => {
            let report = tree_extremal_check(&load_graph(&pattern)?, d, n_max)?;
            assertion(report.holds, report.to_json(), "maximizers differ from the large-girth graphs")
        }
        Command::Walks { d, k, n_max } => {
            let report = vertexwise_walk_check(d, k, n_max)?;
            assertion(report.holds, report.to_json(), "a vertex outside a clique attains the maximum")
        }
        Command::VerifyPaper => {
            let report = paper_campaign()?;
            let failed: Vec<String> = report.failed().iter().map(|c| format!("{}: {}", c.name, c.detail)).collect();
            assertion(report.passed(), report.to_json(), &failed.join("; "))
        }
        Command::Construct { family } => {
            let g = construct_family(&family.parse::<Family>()?)?;
            Ok(Output::Text(format!("{}\n", write_graph6(&g))))
        }
        Command::Enumerate { n, d, connected } => {
            let graphs = enumerate_regular_range(n..=n, d, connected)?;
            Ok(Output::Text(graphs.iter().map(|g| format!("{}\n", write_graph6(g))).collect()))
        }
    }
}

fn assertion(holds: bool, report: Value, message: &str) -> Result<Output, Failure> {
    Ok(if holds {
        Output::Json(report)
    } else {
        Output::Refuted(report, message.to_string())
    })
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let out = cli.out.clone();
    let result = run(cli).and_then(|output| {
        // The report is written either way; a refuted claim only changes
        // the exit code.
        let (text, refuted) = match output {
            Output::Json(v) => (render_json(&v), None),
            Output::Text(t) => (t, None),
            Output::Refuted(v, m) => (render_json(&v), Some(m)),
        };
        emit(out.as_deref(), &text)?;
        refuted.map_or(Ok(()), |m| Err(Failure::Assertion(m)))
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Assertion(m)) => {
            eprintln!("assertion failed: {m}");
            ExitCode::from(2)
        }
    }
}
