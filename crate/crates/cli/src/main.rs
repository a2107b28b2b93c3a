use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hyperturan::verify::DEFAULT_SEED;
use hyperturan::{
    analyze_structure, biex_search, book_graph, chromatic_number, color_critical_edges, contains_expansion,
    decomposition_family, ex_graph_cliques, ex_graph_edges, ex_hypergraph, expand, fat_pair_graph,
    fixed_vertex_hypergraph, gap_table, gap_table_csv, h_part, h_prime, heavy_shadow, lower_bound_local_search,
    optimal_coloring, optimal_m, optimal_m_set, parse_graph_spec, parse_hg, shadow, turan_cone, turan_hypergraph,
    verify_suite, write_hg, Budget, ClaimStatus, Error, Forbidden, Fraction, Graph, Objective, SearchProblem,
    SearchResult, UniformHypergraph, VerifyOptions, SUITES,
};
use serde_json::{json, Value};

const EXIT_CLAIM_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(name = "hyperturan", version, about = "Turan problems for hypergraph expansions of graphs")]
struct Cli {
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Node limit for exhaustive searches.
    #[arg(long, global = true)]
    budget_nodes: Option<u64>,
    /// Wall-clock limit for exhaustive searches, in seconds.
    #[arg(long, global = true)]
    budget_secs: Option<u64>,
    /// Seed for randomised steps.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Let searches use a worker pool. Results are unchanged.
    #[arg(long, global = true)]
    parallel: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Hg,
    Text,
}

#[derive(Args)]
struct HostArg {
    /// Host hypergraph in .hg format.
    #[arg(long)]
    host: PathBuf,
}

#[derive(Args)]
struct CoreArg {
    /// Core graph: a name such as K3, C5, P3, S3, M2, B2, K2,3, or a 2-uniform .hg file.
    #[arg(long)]
    core: String,
}

#[derive(Subcommand)]
enum Command {
    /// Print the r-uniform expansion of a graph.
    Expand {
        #[command(flatten)]
        core: CoreArg,
        #[arg(long)]
        r: usize,
    },
    /// Decide whether a host contains the expansion of a graph.
    Contains {
        #[command(flatten)]
        host: HostArg,
        #[command(flatten)]
        core: CoreArg,
        #[arg(long)]
        r: usize,
    },
    /// Print the (r-1)-shadow of a host.
    Shadow {
        #[command(flatten)]
        host: HostArg,
    },
    /// Print the (r-1)-sets lying in at least t edges.
    Heavy {
        #[command(flatten)]
        host: HostArg,
        #[arg(long)]
        t: usize,
    },
    /// Print the graph of t-fat pairs.
    Fatgraph {
        #[command(flatten)]
        host: HostArg,
        #[arg(long)]
        t: usize,
    },
    /// Chromatic number with an optimal colouring.
    Chromatic {
        #[command(flatten)]
        core: CoreArg,
    },
    /// Colour-critical edges.
    Critical {
        #[command(flatten)]
        core: CoreArg,
    },
    /// Decomposition family.
    Decomp {
        #[command(flatten)]
        core: CoreArg,
        /// Keep only members with no proper subgraph in the family.
        #[arg(long)]
        minimal: bool,
    },
    /// Maximum edges of a graph free of the decomposition family.
    Biex {
        #[command(flatten)]
        core: CoreArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        minimal: bool,
    },
    /// Build a named construction.
    Construct {
        #[command(subcommand)]
        kind: Construction,
    },
    /// Part size maximising |E(H'(m))|.
    OptimalM {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
    },
    /// Exact and heuristic extremal searches.
    Search {
        #[command(subcommand)]
        kind: SearchKind,
    },
    /// Lower bounds against exact or searched values for a range of n.
    GapTable {
        #[command(flatten)]
        core: CoreArg,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
    },
    /// Partition the fat-pair graph and flag vertices with many internal neighbours.
    AnalyzeStructure {
        #[command(flatten)]
        host: HostArg,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        t: usize,
        /// Threshold as a fraction of n, e.g. 1/4 or 0.25.
        #[arg(long, default_value = "1/4")]
        theta: String,
    },
    /// Run a verification suite.
    Verify {
        /// One of the suite names, or `all`.
        suite: String,
    },
}

#[derive(Subcommand)]
enum Construction {
    Turan {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
    },
    TuranCone {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 1)]
        i: usize,
    },
    Hpart {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        m: usize,
    },
    Hprime {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        m: usize,
    },
    Book {
        #[arg(long)]
        k: usize,
    },
    FixedVertex {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
}

#[derive(Subcommand)]
enum SearchKind {
    /// ex(n, F) for graphs, with every --forbid graph excluded.
    ExGraph {
        #[arg(long)]
        n: usize,
        #[arg(long, required = true)]
        forbid: Vec<String>,
    },
    /// Most K_order copies in a graph avoiding every --forbid graph.
    ExCliques {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        order: usize,
        #[arg(long, required = true)]
        forbid: Vec<String>,
    },
    /// ex_r(n, F+) by branch and bound.
    ExHyper {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[command(flatten)]
        core: CoreArg,
    },
    /// Local search from a free seed host (default: the empty host).
    Local {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[command(flatten)]
        core: CoreArg,
        #[arg(long)]
        start: Option<PathBuf>,
        #[arg(long, default_value_t = 4)]
        restarts: usize,
        #[arg(long, default_value_t = 500)]
        steps: usize,
    },
}

enum Failure {
    Usage(String),
    Budget(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

/// A command's result in every format it supports, plus its exit status.
struct Output {
    default: Format,
    json: Value,
    text: Option<String>,
    hg: Option<String>,
    csv: Option<String>,
    code: u8,
}

impl Output {
    fn json(value: Value) -> Self {
        Output { default: Format::Json, json: value, text: None, hg: None, csv: None, code: 0 }
    }

    fn hypergraph(h: &UniformHypergraph, extra: Value) -> Self {
        let mut json = hypergraph_json(h);
        if let (Value::Object(map), Value::Object(more)) = (&mut json, extra) {
            map.extend(more);
        }
        Output { default: Format::Hg, json, text: None, hg: Some(write_hg(h)), csv: None, code: 0 }
    }

    fn with_text(mut self, text: String) -> Self {
        self.text = Some(text);
        self
    }

    fn render(&self, requested: Option<Format>) -> Result<String, Failure> {
        let format = requested.unwrap_or(self.default);
        let body = match format {
            Format::Json => Some(serde_json::to_string_pretty(&self.json).expect("json") + "\n"),
            Format::Text => self.text.clone().map(|t| t + "\n"),
            Format::Hg => self.hg.clone(),
            Format::Csv => self.csv.clone(),
        };
        body.ok_or_else(|| Failure::Usage(format!("this command has no {format:?} output").to_lowercase()))
    }
}

fn hypergraph_json(h: &UniformHypergraph) -> Value {
    json!({ "n": h.n(), "r": h.r(), "edges": h.edges().collect::<Vec<_>>() })
}

fn graph_json(g: &Graph) -> Value {
    json!({ "n": g.n(), "edges": g.edge_pairs() })
}

fn read_host(path: &Path) -> Result<UniformHypergraph, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    parse_hg(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn read_core(core: &CoreArg) -> Result<Graph, Failure> {
    let path = Path::new(&core.core);
    if path.is_file() {
        let h = read_host(path)?;
        return Graph::from_hypergraph(h).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())));
    }
    Ok(parse_graph_spec(&core.core)?)
}

fn budget(cli: &Cli) -> Budget {
    let mut b = Budget::default().with_parallel(cli.parallel);
    if let Some(nodes) = cli.budget_nodes {
        b.max_nodes = nodes;
    }
    if let Some(secs) = cli.budget_secs {
        b.max_time = Duration::from_secs(secs);
    }
    b
}

fn search_output(res: SearchResult) -> Output {
    let text = format!(
        "value {}{} ({} nodes)",
        res.value,
        if res.exhaustive { "" } else { " (lower bound: budget exhausted)" },
        res.nodes
    );
    let code = if res.exhaustive { 0 } else { EXIT_BUDGET };
    let json = serde_json::to_value(&res).expect("json");
    Output { default: Format::Json, json, text: Some(text), hg: Some(write_hg(&res.witness)), csv: None, code }
}

fn construct(kind: &Construction) -> Result<Output, Failure> {
    let (name, params, h) = match *kind {
        Construction::Turan { n, k, r } => ("turan", json!({"n": n, "k": k, "r": r}), turan_hypergraph(n, k, r)?),
        Construction::TuranCone { n, k, r, i } => {
            ("turan-cone", json!({"n": n, "k": k, "r": r, "i": i}), turan_cone(n, k, r, i)?)
        }
        Construction::Hpart { n, k, r, m } => ("hpart", json!({"n": n, "k": k, "r": r, "m": m}), h_part(n, k, r, m)?),
        Construction::Hprime { n, k, r, m } => {
            ("hprime", json!({"n": n, "k": k, "r": r, "m": m}), h_prime(n, k, r, m)?)
        }
        Construction::Book { k } => ("book", json!({"k": k}), book_graph(k)?.into_hypergraph()),
        Construction::FixedVertex { n, r } => ("fixed-vertex", json!({"n": n, "r": r}), fixed_vertex_hypergraph(n, r)?),
    };
    let json = json!({ "construction": name, "params": params, "edges": h.edge_count() });
    let text = format!("{name} {params}: {} edges", h.edge_count());
    Ok(Output { default: Format::Hg, json, text: Some(text), hg: Some(write_hg(&h)), csv: None, code: 0 })
}

fn search(cli: &Cli, kind: &SearchKind) -> Result<Output, Failure> {
    let budget = budget(cli);
    let forbidden = |specs: &[String]| -> Result<Vec<Graph>, Failure> {
        specs.iter().map(|s| read_core(&CoreArg { core: s.clone() })).collect()
    };
    let res = match kind {
        SearchKind::ExGraph { n, forbid } => ex_graph_edges(*n, &forbidden(forbid)?, &budget)?,
        SearchKind::ExCliques { n, order, forbid } => ex_graph_cliques(*n, *order, &forbidden(forbid)?, &budget)?,
        SearchKind::ExHyper { n, r, core } => ex_hypergraph(*n, *r, &read_core(core)?, &budget)?,
        SearchKind::Local { n, r, core, start, restarts, steps } => {
            let problem = SearchProblem {
                n: *n,
                host_uniformity: *r,
                forbidden: vec![Forbidden::Expansion(read_core(core)?)],
                objective: Objective::Edges,
                budget,
            };
            let seed = match start {
                Some(path) => read_host(path)?,
                None => UniformHypergraph::empty(*n, *r)?,
            };
            let res = lower_bound_local_search(&problem, &seed, *restarts, *steps, cli.seed)?;
            let mut out = search_output(res);
            out.code = 0;
            return Ok(out);
        }
    };
    Ok(search_output(res))
}

fn verify(cli: &Cli, suite: &str) -> Result<Output, Failure> {
    let opts = VerifyOptions { parallel: cli.parallel, seed: cli.seed };
    let ids: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { vec![suite] };
    let mut reports = Vec::new();
    for id in ids {
        reports.push(verify_suite(id, &opts)?);
    }
    let pass = reports.iter().all(|r| r.pass);
    let mut text = Vec::new();
    for rep in &reports {
        for c in &rep.claims {
            text.push(format!("{}\t{}/{}\t{}", status_label(c.status), rep.suite, c.id, c.detail));
        }
        text.push(format!("{} {}", rep.suite, if rep.pass { "PASS" } else { "FAIL" }));
    }
    let json = if reports.len() == 1 {
        serde_json::to_value(&reports[0]).expect("json")
    } else {
        json!({ "suites": reports, "pass": pass })
    };
    Ok(Output {
        default: Format::Json,
        json,
        text: Some(text.join("\n")),
        hg: None,
        csv: None,
        code: if pass { 0 } else { EXIT_CLAIM_FAILED },
    })
}

fn status_label(status: ClaimStatus) -> &'static str {
    match status {
        ClaimStatus::Pass => "PASS",
        ClaimStatus::Fail => "FAIL",
        ClaimStatus::Skipped => "SKIP",
    }
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    Ok(match &cli.command {
        Command::Expand { core, r } => {
            let f = read_core(core)?;
            Output::hypergraph(&expand(&f, *r)?, json!({}))
        }
        Command::Contains { host, core, r } => {
            let h = read_host(&host.host)?;
            let f = read_core(core)?;
            let found = contains_expansion(&h, &f, *r)?;
            let text = if found.is_some() { "contained" } else { "not contained" };
            Output::json(json!({ "contained": found.is_some(), "witness": found })).with_text(text.to_string())
        }
        Command::Shadow { host } => Output::hypergraph(&shadow(&read_host(&host.host)?)?, json!({})),
        Command::Heavy { host, t } => Output::hypergraph(&heavy_shadow(&read_host(&host.host)?, *t)?, json!({"t": t})),
        Command::Fatgraph { host, t } => {
            Output::hypergraph(fat_pair_graph(&read_host(&host.host)?, *t)?.hypergraph(), json!({"t": t}))
        }
        Command::Chromatic { core } => {
            let f = read_core(core)?;
            let coloring = optimal_coloring(&f);
            let chi = chromatic_number(&f);
            Output::json(json!({ "chromatic_number": chi, "coloring": coloring.colors, "classes": coloring.classes() }))
                .with_text(chi.to_string())
        }
        Command::Critical { core } => {
            let edges = color_critical_edges(&read_core(core)?)?;
            let text = edges.iter().map(|(u, v)| format!("{u} {v}")).collect::<Vec<_>>().join("\n");
            Output::json(json!({ "critical_edges": edges })).with_text(text)
        }
        Command::Decomp { core, minimal } => {
            let family = decomposition_family(&read_core(core)?, *minimal)?;
            let members: Vec<Value> = family.members.iter().map(graph_json).collect();
            let text = family.members.iter().map(|g| format!("{:?}", g.edge_pairs())).collect::<Vec<_>>().join("\n");
            Output::json(json!({ "minimal": family.minimal, "members": members })).with_text(text)
        }
        Command::Biex { core, n, minimal } => {
            search_output(biex_search(*n, &read_core(core)?, *minimal, &budget(cli))?)
        }
        Command::Construct { kind } => construct(kind)?,
        Command::OptimalM { n, k, r } => {
            let (m, edges) = optimal_m(*n, *k, *r)?;
            let argmax = optimal_m_set(*n, *k, *r)?;
            Output::json(json!({ "n": n, "k": k, "r": r, "m": m, "edges": edges, "argmax": argmax }))
                .with_text(format!("m = {m} ({edges} edges)"))
        }
        Command::Search { kind } => search(cli, kind)?,
        Command::GapTable { core, r, n_min, n_max } => {
            let rows = gap_table(&read_core(core)?, *r, *n_min..=*n_max, &budget(cli))?;
            let csv = gap_table_csv(&rows);
            Output {
                default: Format::Csv,
                json: serde_json::to_value(&rows).expect("json"),
                text: Some(csv.trim_end().to_string()),
                hg: None,
                csv: Some(csv),
                code: 0,
            }
        }
        Command::AnalyzeStructure { host, k, t, theta } => {
            let theta: Fraction = theta.parse()?;
            let rep = analyze_structure(&read_host(&host.host)?, *k, *t, theta)?;
            let text = format!(
                "internal edges {} of {}; partition {:?}; candidates {:?}",
                rep.internal_edges, rep.fat_edges, rep.partition, rep.b_candidates
            );
            Output::json(serde_json::to_value(&rep).expect("json")).with_text(text)
        }
        Command::Verify { suite } => verify(cli, suite)?,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli).and_then(|out| Ok((out.render(cli.format)?, out.code))) {
        Ok((body, code)) => {
            print!("{body}");
            ExitCode::from(code)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_BUDGET)
        }
    }
}
