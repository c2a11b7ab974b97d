//! Command-line surface: generate graphs, apply the Mycielskian, solve for
//! classical and g-extra connectivity, and verify the transform laws over
//! single graphs or whole corpora.
//!
//! Exit status: 0 all checks hold, 1 a violation was found, 2 usage or input
//! error, 3 a solver budget refusal without --skip-on-budget.

use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use extraconn::connectivity::{
    extra_connectivity_budgeted, vertex_connectivity_with_cut, Method, SolveError, SolveOutcome,
};
use extraconn::generate::{connected_graphs, random_graph, FamilySpec};
use extraconn::graph::Graph;
use extraconn::mycielskian::{iterate_bounded, DEFAULT_ORDER_BOUND};
use extraconn::report::{
    emit_record_json, emit_records_csv, emit_report, human_line, human_summary, ReportFormat,
};
use extraconn::verify::{run_batch, BatchOptions, RecordStatus, VerificationRecord};
use extraconn::{edgelist, graph6};

const EXIT_VIOLATION: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(
    name = "extraconn",
    version,
    about = "Exact g-extra connectivity of graphs and their Mycielskians",
    after_help = "Family specs: path:N, cycle:N, complete:N, complete_bipartite:A:B, star:N, \
                  hypercube:D, petersen.\nEXTRACONN_JOBS sets the default for --jobs."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a graph as graph6 plus an edge list
    Gen {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        output: CommonArgs,
    },
    /// Apply the Mycielskian k times and print the result with its label map
    Mu {
        #[command(flatten)]
        source: SourceArgs,
        /// Number of applications
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Refuse results with more vertices than this
        #[arg(long, default_value_t = DEFAULT_ORDER_BOUND)]
        order_bound: usize,
        #[command(flatten)]
        output: CommonArgs,
    },
    /// Classical vertex connectivity
    Kappa {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        output: CommonArgs,
    },
    /// Exact g-extra connectivity with a witness cut
    Extra {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        g: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::Pruned)]
        method: MethodArg,
        /// Solver order budget override
        #[arg(long)]
        budget: Option<usize>,
        #[command(flatten)]
        output: CommonArgs,
    },
    /// Check the applicable transform law on one graph (g = 0: kappa law)
    Verify {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        g: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::Pruned)]
        method: MethodArg,
        #[arg(long)]
        budget: Option<usize>,
        /// Treat budget refusals as skips instead of exit status 3
        #[arg(long)]
        skip_on_budget: bool,
        #[command(flatten)]
        output: CommonArgs,
    },
    /// Verify a whole corpus and emit records plus a summary
    Batch {
        #[command(flatten)]
        source: SourceArgs,
        /// g values to check, repeatable (g = 0 checks the kappa law)
        #[arg(long = "g", required = true)]
        g_list: Vec<usize>,
        #[arg(long, value_enum, default_value_t = MethodArg::Pruned)]
        method: MethodArg,
        #[arg(long)]
        budget: Option<usize>,
        /// Worker count; defaults to EXTRACONN_JOBS or 1
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        skip_on_budget: bool,
        #[command(flatten)]
        output: CommonArgs,
    },
}

#[derive(Args)]
#[group(id = "graph_source", required = true, multiple = false)]
struct SourceArgs {
    /// Named family instance such as cycle:6 (repeat to form a corpus)
    #[arg(long, value_name = "SPEC", group = "graph_source")]
    family: Vec<String>,
    /// graph6 literal
    #[arg(long, value_name = "G6", group = "graph_source")]
    graph6: Option<String>,
    /// Edge-list file: an `n m` header then one `u v` pair per line
    #[arg(long, value_name = "FILE", group = "graph_source")]
    edges: Option<PathBuf>,
    /// graph6 file, one graph per line; '-' reads stdin
    #[arg(long, value_name = "FILE", group = "graph_source")]
    g6_file: Option<String>,
    /// All labeled connected graphs on N vertices (N <= 6)
    #[arg(long, value_name = "N", group = "graph_source")]
    enumerate: Option<usize>,
    /// Seeded random graph N:P; the seed comes from --seed
    #[arg(long, value_name = "N:P", group = "graph_source")]
    random: Option<String>,
}

#[derive(Args)]
struct CommonArgs {
    #[arg(long, value_enum, default_value_t = FormatArg::Human)]
    format: FormatArg,
    /// Write to a file instead of stdout
    #[arg(long, short = 'o', value_name = "FILE")]
    output: Option<PathBuf>,
    /// Seed for --random sources
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Naive,
    Pruned,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Naive => Method::Naive,
            MethodArg::Pruned => Method::Pruned,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Human,
}

impl From<FormatArg> for ReportFormat {
    fn from(f: FormatArg) -> ReportFormat {
        match f {
            FormatArg::Json => ReportFormat::Json,
            FormatArg::Csv => ReportFormat::Csv,
            FormatArg::Human => ReportFormat::Human,
        }
    }
}

enum CliError {
    Usage(String),
    Budget(String),
}

impl CliError {
    fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Budget(_) => EXIT_BUDGET,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(msg) | CliError::Budget(msg) => msg,
        }
    }
}

impl From<SolveError> for CliError {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::BudgetExceeded { .. } | SolveError::OrderUnsupported(_) => {
                CliError::Budget(e.to_string())
            }
            other => CliError::Usage(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Gen { source, output } => {
            let (id, graph) = single_graph(&source, output.seed)?;
            cmd_gen(&id, &graph, &output)
        }
        Command::Mu {
            source,
            k,
            order_bound,
            output,
        } => {
            let (id, graph) = single_graph(&source, output.seed)?;
            cmd_mu(&id, &graph, k, order_bound, &output)
        }
        Command::Kappa { source, output } => {
            let (id, graph) = single_graph(&source, output.seed)?;
            cmd_kappa(&id, &graph, &output)
        }
        Command::Extra {
            source,
            g,
            method,
            budget,
            output,
        } => {
            let (id, graph) = single_graph(&source, output.seed)?;
            cmd_extra(&id, &graph, g, method.into(), budget, &output)
        }
        Command::Verify {
            source,
            g,
            method,
            budget,
            skip_on_budget,
            output,
        } => {
            let (id, graph) = single_graph(&source, output.seed)?;
            cmd_verify(&id, &graph, g, method.into(), budget, skip_on_budget, &output)
        }
        Command::Batch {
            source,
            g_list,
            method,
            budget,
            jobs,
            skip_on_budget,
            output,
        } => {
            let items = corpus(&source, output.seed)?;
            let jobs = match jobs {
                Some(j) => j,
                None => jobs_from_env()?,
            };
            if jobs < 1 {
                return Err(CliError::usage("--jobs must be at least 1"));
            }
            cmd_batch(
                &items,
                &g_list,
                method.into(),
                budget,
                jobs,
                skip_on_budget,
                &output,
            )
        }
    }
}

fn jobs_from_env() -> Result<usize, CliError> {
    match std::env::var("EXTRACONN_JOBS") {
        Ok(value) => value
            .parse::<usize>()
            .map_err(|_| CliError::usage(format!("EXTRACONN_JOBS is not a worker count: '{value}'"))),
        Err(_) => Ok(1),
    }
}

fn parse_family(spec: &str) -> Result<(String, Graph), CliError> {
    let family: FamilySpec = spec.parse().map_err(|e| CliError::usage(format!("{e}")))?;
    let graph = family.build().map_err(|e| CliError::usage(format!("{e}")))?;
    Ok((family.to_string(), graph))
}

fn parse_random(spec: &str, seed: u64) -> Result<(String, Graph), CliError> {
    let parts: Vec<&str> = spec.split(':').collect();
    let [n, p] = parts.as_slice() else {
        return Err(CliError::usage(format!("--random expects N:P, got '{spec}'")));
    };
    let n: usize = n
        .parse()
        .map_err(|_| CliError::usage(format!("bad order in --random '{spec}'")))?;
    let p: f64 = p
        .parse()
        .map_err(|_| CliError::usage(format!("bad probability in --random '{spec}'")))?;
    let graph = random_graph(n, p, seed).map_err(|e| CliError::usage(e.to_string()))?;
    Ok((format!("random:{n}:{p}:{seed}"), graph))
}

fn read_edges_file(path: &PathBuf) -> Result<(String, Graph), CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
    let graph = edgelist::parse(&text)
        .map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
    Ok((path.display().to_string(), graph))
}

fn read_g6_source(path: &str) -> Result<Vec<(String, Graph)>, CliError> {
    let text = if path == "-" {
        let mut buffer = String::new();
        std::io::stdin()
            .read_to_string(&mut buffer)
            .map_err(|e| CliError::usage(format!("cannot read stdin: {e}")))?;
        buffer
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| CliError::usage(format!("cannot read {path}: {e}")))?
    };
    let graphs = graph6::parse_stream(&text)
        .map_err(|e| CliError::usage(format!("{path}: {e}")))?;
    Ok(graphs
        .into_iter()
        .map(|g| (graph6::encode(&g), g))
        .collect())
}

/// Resolves the source for single-graph subcommands.
fn single_graph(source: &SourceArgs, seed: u64) -> Result<(String, Graph), CliError> {
    let mut items = corpus(source, seed)?;
    match items.len() {
        1 => Ok(items.remove(0)),
        0 => Err(CliError::usage("the source contains no graph")),
        n => Err(CliError::usage(format!(
            "this subcommand needs exactly one graph, the source contains {n}"
        ))),
    }
}

/// Resolves any source into an ordered corpus.
fn corpus(source: &SourceArgs, seed: u64) -> Result<Vec<(String, Graph)>, CliError> {
    if !source.family.is_empty() {
        return source.family.iter().map(|s| parse_family(s)).collect();
    }
    if let Some(literal) = &source.graph6 {
        let graph = graph6::decode(literal)
            .map_err(|e| CliError::usage(format!("bad graph6 literal: {e}")))?;
        return Ok(vec![(literal.clone(), graph)]);
    }
    if let Some(path) = &source.edges {
        return Ok(vec![read_edges_file(path)?]);
    }
    if let Some(path) = &source.g6_file {
        return read_g6_source(path);
    }
    if let Some(n) = source.enumerate {
        let graphs = connected_graphs(n).map_err(|e| CliError::usage(e.to_string()))?;
        return Ok(graphs.map(|g| (graph6::encode(&g), g)).collect());
    }
    if let Some(spec) = &source.random {
        return Ok(vec![parse_random(spec, seed)?]);
    }
    Err(CliError::usage("no graph source given"))
}

fn write_out(output: &CommonArgs, bytes: &[u8]) -> Result<(), CliError> {
    match &output.output {
        None => std::io::stdout()
            .write_all(bytes)
            .map_err(|e| CliError::usage(format!("cannot write output: {e}"))),
        Some(path) => std::fs::write(path, bytes)
            .map_err(|e| CliError::usage(format!("cannot write {}: {e}", path.display()))),
    }
}

fn graph_json(id: &str, g: &Graph) -> serde_json::Value {
    json!({
        "graph": id,
        "graph6": graph6::encode(g),
        "n": g.order(),
        "m": g.size(),
        "edges": g.edges(),
    })
}

fn cmd_gen(id: &str, graph: &Graph, output: &CommonArgs) -> Result<u8, CliError> {
    let bytes = match output.format {
        FormatArg::Json => {
            let mut b = serde_json::to_vec(&graph_json(id, graph)).unwrap();
            b.push(b'\n');
            b
        }
        FormatArg::Human => {
            format!("{}\n{}", graph6::encode(graph), edgelist::format(graph)).into_bytes()
        }
        FormatArg::Csv => return Err(CliError::usage("gen emits json or human, not csv")),
    };
    write_out(output, &bytes)?;
    Ok(0)
}

fn cmd_mu(
    id: &str,
    graph: &Graph,
    k: usize,
    order_bound: usize,
    output: &CommonArgs,
) -> Result<u8, CliError> {
    if graph.order() < 1 && k > 0 {
        return Err(CliError::usage("the transform needs at least one vertex"));
    }
    let result = iterate_bounded(graph, k, order_bound)
        .map_err(|e| CliError::usage(e.to_string()))?;
    let base_order = if k > 0 { Some(result.order() / 2) } else { None };
    let bytes = match output.format {
        FormatArg::Json => {
            let mut doc = graph_json(id, &result);
            doc["k"] = json!(k);
            if let Some(base) = base_order {
                doc["originals"] = json!({"start": 0, "end": base - 1});
                doc["twins"] = json!({"start": base, "end": 2 * base - 1, "twin_of_original": "id + base"});
                doc["root"] = json!(2 * base);
            }
            let mut b = serde_json::to_vec(&doc).unwrap();
            b.push(b'\n');
            b
        }
        FormatArg::Human => {
            let mut text = format!("{}\n{}", graph6::encode(&result), edgelist::format(&result));
            if let Some(base) = base_order {
                text.push_str(&format!(
                    "originals 0..={} twins {}..={} (twin of i is i+{base}) root {}\n",
                    base - 1,
                    base,
                    2 * base - 1,
                    2 * base
                ));
            }
            text.into_bytes()
        }
        FormatArg::Csv => return Err(CliError::usage("mu emits json or human, not csv")),
    };
    write_out(output, &bytes)?;
    Ok(0)
}

fn cmd_kappa(id: &str, graph: &Graph, output: &CommonArgs) -> Result<u8, CliError> {
    let (kappa, cut) =
        vertex_connectivity_with_cut(graph).map_err(|e| CliError::usage(e.to_string()))?;
    let bytes = match output.format {
        FormatArg::Json => {
            let doc = json!({
                "graph": id,
                "n": graph.order(),
                "m": graph.size(),
                "kappa": kappa,
                "cut": cut.to_vec(),
            });
            let mut b = serde_json::to_vec(&doc).unwrap();
            b.push(b'\n');
            b
        }
        FormatArg::Human => format!("{kappa}\n").into_bytes(),
        FormatArg::Csv => return Err(CliError::usage("kappa emits json or human, not csv")),
    };
    write_out(output, &bytes)?;
    Ok(0)
}

fn cmd_extra(
    id: &str,
    graph: &Graph,
    g: usize,
    method: Method,
    budget: Option<usize>,
    output: &CommonArgs,
) -> Result<u8, CliError> {
    let budget = budget.unwrap_or(method.default_budget());
    let outcome = extra_connectivity_budgeted(graph, g, method, budget)?;
    let bytes = match output.format {
        FormatArg::Json => {
            let doc = match &outcome {
                SolveOutcome::Found(cert) => json!({
                    "graph": id,
                    "g": g,
                    "method": method.name(),
                    "outcome": "found",
                    "value": cert.value(),
                    "cut": cert.cut.to_vec(),
                    "component_sizes": cert.component_sizes,
                }),
                SolveOutcome::NotFound => json!({
                    "graph": id,
                    "g": g,
                    "method": method.name(),
                    "outcome": "not_found",
                }),
            };
            let mut b = serde_json::to_vec(&doc).unwrap();
            b.push(b'\n');
            b
        }
        FormatArg::Human => match &outcome {
            SolveOutcome::Found(cert) => {
                let cut: Vec<String> = cert.cut.to_vec().iter().map(usize::to_string).collect();
                let sizes: Vec<String> =
                    cert.component_sizes.iter().map(usize::to_string).collect();
                format!(
                    "kappa_{g} = {} cut = {} component_sizes = {}\n",
                    cert.value(),
                    cut.join(" "),
                    sizes.join(" ")
                )
                .into_bytes()
            }
            SolveOutcome::NotFound => format!("no {g}-extra cut exists\n").into_bytes(),
        },
        FormatArg::Csv => return Err(CliError::usage("extra emits json or human, not csv")),
    };
    write_out(output, &bytes)?;
    Ok(0)
}

fn verify_one(
    id: &str,
    graph: &Graph,
    g: usize,
    method: Method,
    budget: Option<usize>,
) -> Result<VerificationRecord, CliError> {
    let result = if g == 0 {
        extraconn::verify::check_kappa_law(graph, id)
    } else {
        extraconn::verify::check_extra_law(graph, g, id, method, budget)
    };
    result.map_err(|e| CliError::usage(e.to_string()))
}

fn cmd_verify(
    id: &str,
    graph: &Graph,
    g: usize,
    method: Method,
    budget: Option<usize>,
    skip_on_budget: bool,
    output: &CommonArgs,
) -> Result<u8, CliError> {
    let record = verify_one(id, graph, g, method, budget)?;
    let bytes = match output.format {
        FormatArg::Json => emit_record_json(&record),
        FormatArg::Csv => emit_records_csv(std::slice::from_ref(&record)),
        FormatArg::Human => format!("{}\n", human_line(&record)).into_bytes(),
    };
    write_out(output, &bytes)?;
    match record.status {
        RecordStatus::Violation => Ok(EXIT_VIOLATION),
        RecordStatus::Skipped if !skip_on_budget => Err(CliError::Budget(
            record.note.unwrap_or_else(|| "solver refused".to_string()),
        )),
        _ => Ok(0),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_batch(
    items: &[(String, Graph)],
    g_list: &[usize],
    method: Method,
    budget: Option<usize>,
    jobs: usize,
    skip_on_budget: bool,
    output: &CommonArgs,
) -> Result<u8, CliError> {
    let options = BatchOptions {
        method,
        budget,
        jobs,
    };
    let result = run_batch(items, g_list, &options);
    let bytes = emit_report(&result.records, &result.summary, output.format.into());
    write_out(output, &bytes)?;
    if output.format != FormatArg::Human {
        eprint!("{}", human_summary(&result.summary));
    }
    for record in result.violating_graphs() {
        eprintln!(
            "VIOLATION {} g={} law={} graph6={}",
            record.graph, record.g, record.law, record.graph6
        );
    }
    if result.summary.violations > 0 {
        Ok(EXIT_VIOLATION)
    } else if result.summary.skipped > 0 && !skip_on_budget {
        Err(CliError::Budget(format!(
            "{} of {} records were skipped by solver refusals (pass --skip-on-budget to accept)",
            result.summary.skipped, result.summary.records
        )))
    } else {
        Ok(0)
    }
}
