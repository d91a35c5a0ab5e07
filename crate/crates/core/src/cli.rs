//! The `nbpoly` command line.
//!
//! Exit codes: 0 success, 1 identity failures, 2 argument errors, 3 input
//! or parse errors, 4 capacity exceeded.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::classic::{
    domination_polynomial, independence_polynomial, subgraph_component_polynomial, subgraph_polynomial,
    DominationMethod, IndependenceMethod, SubgraphMethod,
};
use crate::complex::{
    connected_neighborhood_polynomial, disconnected_neighborhood_polynomial, independent_neighborhood_polynomial,
    neighborhood_polynomial, resolve_method, Method,
};
use crate::error::ComputeError;
use crate::family::fixed_order_corpus;
use crate::graph::{Graph, GraphError};
use crate::identities::{run_suite, IdentityKind, SuiteConfig};
use crate::io::{
    read_graph6_corpus, write_edge_list, write_graph6, FormatError, GraphDocument, PolynomialRecord, ReportRecord,
    SummaryRecord,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PARSE: i32 = 3;
pub const EXIT_CAPACITY: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "nbpoly", version, about = "Neighborhood-complex graph polynomials and identity checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MethodArg {
    Oracle,
    Fast,
    Auto,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Oracle => Method::Oracle,
            MethodArg::Fast => Method::Fast,
            MethodArg::Auto => Method::Auto,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
    Latex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Graph6,
    Edgelist,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute polynomials of one graph.
    Compute {
        /// A file (graph6 or edge list) or `family:<name>:<args>`.
        #[arg(long)]
        graph: String,
        /// Comma list drawn from N, Ni, Nc, Nd, I, D, S, Q.
        #[arg(long)]
        which: String,
        #[arg(long, value_enum, default_value = "auto")]
        method: MethodArg,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Check identities over a corpus.
    Verify {
        /// An identity tag, a comma list of tags, or `all`.
        #[arg(long)]
        identity: String,
        /// graph6 file, one graph per line.
        #[arg(long, conflicts_with = "random", required_unless_present = "random")]
        corpus: Option<PathBuf>,
        /// Random corpus: `n=<order>,count=<graphs>,p=<prob>,seed=<seed>`.
        #[arg(long)]
        random: Option<String>,
        /// Number of seeded pairs for binary identities.
        #[arg(long, default_value_t = 200)]
        pairs: usize,
        /// Seed for pair sampling; defaults to the random corpus seed.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value = "auto")]
        method: MethodArg,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Apply a graph operation and write the result.
    Ops {
        /// complement, union, join, cartesian, or expand:<r>.
        #[arg(long)]
        op: String,
        #[arg(long, num_args = 1.., required = true)]
        inputs: Vec<String>,
        #[arg(long)]
        output: PathBuf,
        #[arg(long, value_enum, default_value = "graph6")]
        out_format: GraphFormat,
    },
}

#[derive(Debug)]
struct CliError {
    code: i32,
    message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError { code: EXIT_USAGE, message: message.into() }
    }

    fn input(message: impl Into<String>) -> Self {
        CliError { code: EXIT_PARSE, message: message.into() }
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        let code = match e {
            GraphError::Capacity { .. } => EXIT_CAPACITY,
            _ => EXIT_USAGE,
        };
        CliError { code, message: e.to_string() }
    }
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        let code = if e.is_capacity() { EXIT_CAPACITY } else { EXIT_PARSE };
        CliError { code, message: e.to_string() }
    }
}

impl From<ComputeError> for CliError {
    fn from(e: ComputeError) -> Self {
        let code = if e.is_capacity() { EXIT_CAPACITY } else { EXIT_USAGE };
        CliError { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::input(e.to_string())
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code. Normal output goes to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ =
                if code == EXIT_OK { out.write_all(rendered.as_bytes()) } else { err.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    let result = match cli.command {
        Command::Compute { graph, which, method, format } => compute(&graph, &which, method.into(), format, out),
        Command::Verify { identity, corpus, random, pairs, seed, method, format } => {
            verify(&identity, corpus.as_deref(), random.as_deref(), pairs, seed, method.into(), format, out)
        }
        Command::Ops { op, inputs, output, out_format } => ops(&op, &inputs, &output, out_format),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message);
            e.code
        }
    }
}

fn load_graph(source: &str) -> Result<Graph, CliError> {
    if let Some(expr) = source.strip_prefix("family:") {
        return match GraphDocument::from_family(expr) {
            Ok(doc) => Ok(doc.graph),
            Err(FormatError::Graph(e)) => Err(e.into()),
            Err(e) => Err(e.into()),
        };
    }
    let text = std::fs::read_to_string(source).map_err(|e| CliError::input(format!("cannot read `{source}`: {e}")))?;
    Ok(GraphDocument::parse(&text)?.graph)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Which {
    N,
    Ni,
    Nc,
    Nd,
    I,
    D,
    S,
    Q,
}

impl Which {
    fn parse(s: &str) -> Option<Which> {
        Some(match s {
            "N" => Which::N,
            "Ni" => Which::Ni,
            "Nc" => Which::Nc,
            "Nd" => Which::Nd,
            "I" => Which::I,
            "D" => Which::D,
            "S" => Which::S,
            "Q" => Which::Q,
            _ => return None,
        })
    }

    fn name(self) -> &'static str {
        match self {
            Which::N => "N",
            Which::Ni => "Ni",
            Which::Nc => "Nc",
            Which::Nd => "Nd",
            Which::I => "I",
            Which::D => "D",
            Which::S => "S",
            Which::Q => "Q",
        }
    }

    fn latex_name(self) -> &'static str {
        match self {
            Which::N => "N(G,x)",
            Which::Ni => "N^{(i)}(G,x)",
            Which::Nc => "N^{(c)}(G,x)",
            Which::Nd => "N^{(d)}(G,x)",
            Which::I => "I(G,x)",
            Which::D => "D(G,x)",
            Which::S => "S(G,x)",
            Which::Q => "Q(G;x,y)",
        }
    }
}

fn compute(
    source: &str,
    which: &str,
    method: Method,
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let requested = which
        .split(',')
        .map(|w| Which::parse(w.trim()).ok_or_else(|| CliError::usage(format!("unknown polynomial `{w}` in --which"))))
        .collect::<Result<Vec<_>, _>>()?;
    let g = load_graph(source)?;
    if g.order() == 0 {
        return Err(ComputeError::EmptyGraph.into());
    }
    let structured = method != Method::Oracle;
    for w in requested {
        let (text, latex, record) = if w == Which::Q {
            let q = subgraph_component_polynomial(&g)?;
            (q.to_string(), q.to_latex(), PolynomialRecord::bivariate(&g, w.name(), &q, "oracle"))
        } else {
            let (p, route) = match w {
                Which::N => (neighborhood_polynomial(&g, method)?, resolve_method(&g, method).name()),
                Which::Ni => (independent_neighborhood_polynomial(&g, method)?, resolve_method(&g, method).name()),
                Which::Nc => (connected_neighborhood_polynomial(&g, method)?, resolve_method(&g, method).name()),
                Which::Nd => (disconnected_neighborhood_polynomial(&g, method)?, resolve_method(&g, method).name()),
                Which::I if structured => (independence_polynomial(&g, IndependenceMethod::Recursive)?, "recursive"),
                Which::I => (independence_polynomial(&g, IndependenceMethod::Oracle)?, "oracle"),
                Which::D if structured => {
                    (domination_polynomial(&g, DominationMethod::ViaComplement)?, "via_complement")
                }
                Which::D => (domination_polynomial(&g, DominationMethod::Oracle)?, "oracle"),
                Which::S if structured => (subgraph_polynomial(&g, SubgraphMethod::Growth)?, "growth"),
                Which::S => (subgraph_polynomial(&g, SubgraphMethod::Oracle)?, "oracle"),
                Which::Q => unreachable!(),
            };
            (p.to_string(), p.to_latex(), PolynomialRecord::univariate(&g, w.name(), &p, route))
        };
        match format {
            OutputFormat::Text => writeln!(out, "{} = {}", w.name(), text)?,
            OutputFormat::Latex => writeln!(out, "{} = {}", w.latex_name(), latex)?,
            OutputFormat::Json => writeln!(out, "{}", serde_json::to_string(&record).expect("record serializes"))?,
        }
    }
    Ok(EXIT_OK)
}

struct RandomSpec {
    n: usize,
    count: usize,
    p: f64,
    seed: u64,
}

fn parse_random(spec: &str) -> Result<RandomSpec, CliError> {
    let (mut n, mut count, mut p, mut seed) = (None, None, 0.5, 0u64);
    for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (key, value) =
            item.split_once('=').ok_or_else(|| CliError::usage(format!("--random item `{item}` is not key=value")))?;
        let bad = || CliError::usage(format!("--random value `{value}` for `{key}` is invalid"));
        match key {
            "n" => n = Some(value.parse().map_err(|_| bad())?),
            "count" => count = Some(value.parse().map_err(|_| bad())?),
            "p" => p = value.parse().map_err(|_| bad())?,
            "seed" => seed = value.parse().map_err(|_| bad())?,
            _ => return Err(CliError::usage(format!("unknown --random key `{key}`"))),
        }
    }
    let n = n.ok_or_else(|| CliError::usage("--random requires n=<order>"))?;
    let count = count.ok_or_else(|| CliError::usage("--random requires count=<graphs>"))?;
    if n == 0 || !(0.0..=1.0).contains(&p) {
        return Err(CliError::usage("--random requires n >= 1 and 0 <= p <= 1"));
    }
    Ok(RandomSpec { n, count, p, seed })
}

fn parse_kinds(identity: &str) -> Result<Vec<IdentityKind>, CliError> {
    if identity == "all" {
        return Ok(IdentityKind::default_suite());
    }
    identity
        .split(',')
        .map(|t| IdentityKind::from_tag(t.trim()).ok_or_else(|| CliError::usage(format!("unknown identity `{t}`"))))
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn verify(
    identity: &str,
    corpus: Option<&Path>,
    random: Option<&str>,
    pairs: usize,
    seed: Option<u64>,
    method: Method,
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let kinds = parse_kinds(identity)?;
    let (graphs, default_seed) = match (corpus, random) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::input(format!("cannot read corpus `{}`: {e}", path.display())))?;
            (read_graph6_corpus(&text)?, 0)
        }
        (None, Some(spec)) => {
            let spec = parse_random(spec)?;
            (fixed_order_corpus(spec.count, spec.n, spec.p, spec.seed)?, spec.seed)
        }
        (None, None) => return Err(CliError::usage("verify needs --corpus or --random")),
    };
    let config = SuiteConfig { kinds, pairs, seed: seed.unwrap_or(default_seed), method, ..SuiteConfig::default() };
    let outcome = run_suite(&graphs, &config);
    match format {
        OutputFormat::Json => {
            for r in &outcome.reports {
                writeln!(out, "{}", serde_json::to_string(&ReportRecord::from(r)).expect("record serializes"))?;
            }
            let summary = SummaryRecord { summary: &outcome.summary };
            writeln!(out, "{}", serde_json::to_string(&summary).expect("summary serializes"))?;
        }
        OutputFormat::Text | OutputFormat::Latex => {
            for r in &outcome.reports {
                writeln!(out, "{r}")?;
            }
            for (tag, c) in &outcome.summary.per_identity {
                writeln!(out, "summary {tag}: pass={} fail={} inapplicable={}", c.pass, c.fail, c.inapplicable)?;
            }
            let t = outcome.summary.total();
            writeln!(out, "total: pass={} fail={} inapplicable={}", t.pass, t.fail, t.inapplicable)?;
        }
    }
    Ok(if outcome.summary.has_failures() { EXIT_VERIFICATION_FAILED } else { EXIT_OK })
}

fn ops(op: &str, inputs: &[String], output: &Path, out_format: GraphFormat) -> Result<i32, CliError> {
    let graphs = inputs.iter().map(|s| load_graph(s)).collect::<Result<Vec<_>, _>>()?;
    let arity = |k: usize| {
        if graphs.len() == k {
            Ok(())
        } else {
            Err(CliError::usage(format!("--op {op} takes {k} input(s), got {}", graphs.len())))
        }
    };
    let result = match op {
        "complement" => arity(1).map(|_| graphs[0].complement())?,
        "union" => arity(2).and_then(|_| Ok(graphs[0].disjoint_union(&graphs[1])?))?,
        "join" => arity(2).and_then(|_| Ok(graphs[0].join(&graphs[1])?))?,
        "cartesian" => arity(2).and_then(|_| Ok(graphs[0].cartesian_product(&graphs[1])?))?,
        other => match other.strip_prefix("expand:") {
            Some(r) => {
                let r: usize =
                    r.parse().map_err(|_| CliError::usage(format!("expansion factor `{r}` is not a count")))?;
                arity(1)?;
                graphs[0].expansion(r)?
            }
            None => return Err(CliError::usage(format!("unknown operation `{other}`"))),
        },
    };
    let text = match out_format {
        GraphFormat::Graph6 => format!("{}\n", write_graph6(&result)),
        GraphFormat::Edgelist => write_edge_list(&result),
    };
    std::fs::write(output, text).map_err(|e| CliError::input(format!("cannot write `{}`: {e}", output.display())))?;
    Ok(EXIT_OK)
}
