use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use critposet::census::verify::{
    verify_cited_theorems, verify_family_criticality, verify_main_theorem, verify_orientation_identities,
    VerificationReport,
};
use critposet::census::{enumerate_graphs, enumerate_posets};
use critposet::comparability::{conjecture_probe, find_embedding, transitive_orientations, DEFAULT_ORIENTATION_LIMIT};
use critposet::decomposition::{critical_vertices, Classification};
use critposet::edgelist::{emit, parse, to_dot};
use critposet::families::{family_catalog, CompositionParams, FamilyId, FamilyTag};
use critposet::{AnyGraph, Error, Graph};

/// Intervals, critical vertices and (-1)-critical posets.
#[derive(Parser)]
#[command(name = "critposet", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a family member as an edge list or DOT.
    Generate {
        /// Family tag such as Q, Q', G, H, R', O, G2n or G1.
        family: String,
        /// Comma-separated parameters n1,n2,... (omit for G1-G4).
        #[arg(default_value = "")]
        params: String,
        #[arg(long)]
        dual: bool,
        #[arg(long)]
        complement: bool,
        #[arg(long, value_enum, default_value_t = Format::Edges)]
        format: Format,
    },
    /// Report critical and non-critical vertices as JSON.
    Analyze { file: PathBuf },
    /// Transitive orientations of a graph.
    Orient {
        file: PathBuf,
        #[command(flatten)]
        mode: OrientMode,
    },
    /// Whether `pattern` is an induced subgraph of `host`.
    Embeds { pattern: PathBuf, host: PathBuf },
    /// Every family member up to an order.
    Catalog {
        #[arg(long)]
        max_order: usize,
        #[arg(long, value_enum, default_value_t = CatalogFormat::Text)]
        format: CatalogFormat,
    },
    /// All posets or graphs of an order, one per isomorphism class.
    Census {
        #[arg(value_enum)]
        what: CensusKind,
        #[arg(long)]
        order: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run an exhaustive verification suite; exit 0 iff it passes.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long)]
        order: usize,
    },
    /// Search orientations of the complements of G and G' (k >= 3).
    ProbeConjecture {
        #[arg(long)]
        params: String,
        /// Node budget per orientation search.
        #[arg(long)]
        timeout_nodes: Option<u64>,
    },
    /// Convert an edge list to DOT.
    Export {
        file: PathBuf,
        #[arg(long, default_value = "G")]
        name: String,
    },
}

#[derive(Args)]
#[group(multiple = false)]
struct OrientMode {
    /// Print every orientation.
    #[arg(long)]
    all: bool,
    /// Print only the number of orientations.
    #[arg(long)]
    count: bool,
    /// Print at most N orientations.
    #[arg(long, value_name = "N")]
    limit: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Edges,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum CatalogFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum CensusKind {
    Posets,
    Graphs,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Main,
    Cited,
    Families,
}

/// Check failures exit 1, bad input exits 2.
enum Failure {
    Check,
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn read_input(path: &Path) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<AnyGraph, Failure> {
    parse(&read_input(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn read_undirected(path: &Path) -> Result<Graph, Failure> {
    match read_graph(path)? {
        AnyGraph::Graph(g) => Ok(g),
        AnyGraph::Digraph(_) => Err(Failure::Input(format!("{}: expected a `graph` record", path.display()))),
    }
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn parse_params(s: &str) -> Result<Vec<usize>, Failure> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| Failure::Input(format!("bad parameter `{t}` in `{s}`"))))
        .collect()
}

fn generate(family: &str, params: &str, dual: bool, complement: bool, format: Format) -> Outcome {
    let tag: FamilyTag = family.parse()?;
    let mut id = FamilyId::new(tag, parse_params(params)?);
    if dual {
        id = id.dualized();
    }
    if complement {
        id = id.complemented();
    }
    let object = id.build()?;
    match format {
        Format::Edges => print!("{}", emit(&object)),
        Format::Dot => print!("{}", to_dot(&object, &id.to_string())),
    }
    Ok(())
}

#[derive(Serialize)]
struct AnalyzeReport {
    order: usize,
    critical: Vec<usize>,
    noncritical: Vec<usize>,
    #[serde(flatten)]
    classification: Classification,
}

fn analyze(file: &Path) -> Outcome {
    let d = read_graph(file)?.to_digraph();
    let report = match critical_vertices(&d) {
        Ok(r) => AnalyzeReport {
            order: r.order,
            critical: r.critical.to_vec(),
            noncritical: r.noncritical.to_vec(),
            classification: r.classification,
        },
        Err(Error::Decomposable) => AnalyzeReport {
            order: d.order(),
            critical: Vec::new(),
            noncritical: Vec::new(),
            classification: Classification::Decomposable,
        },
        Err(e) => return Err(e.into()),
    };
    print_json(&report);
    Ok(())
}

fn orient(file: &Path, mode: &OrientMode) -> Outcome {
    let g = read_undirected(file)?;
    let limit = match (mode.all, mode.count, mode.limit) {
        (_, _, Some(n)) => n,
        (true, _, _) | (_, true, _) => DEFAULT_ORIENTATION_LIMIT,
        _ => 1,
    };
    let r = transitive_orientations(&g, limit);
    let listing = mode.all || mode.count || mode.limit.is_some();
    if listing && !r.exhausted {
        eprintln!("note: stopped after {} orientations", r.orientations.len());
    }
    if mode.count {
        println!("{}", r.orientations.len());
        return Ok(());
    }
    if r.orientations.is_empty() {
        eprintln!("not a comparability graph");
        return Err(Failure::Check);
    }
    let texts: Vec<String> = r.orientations.into_iter().map(|o| emit(&o.into_digraph().into())).collect();
    print!("{}", texts.join("\n"));
    Ok(())
}

#[derive(Serialize)]
struct EmbedReport {
    embeds: bool,
    /// `mapping[i]` is the host vertex playing pattern vertex `i`.
    mapping: Option<Vec<usize>>,
}

fn embeds(pattern: &Path, host: &Path) -> Outcome {
    let mapping = find_embedding(&read_undirected(pattern)?, &read_undirected(host)?);
    print_json(&EmbedReport { embeds: mapping.is_some(), mapping });
    Ok(())
}

#[derive(Serialize)]
struct CatalogLine {
    name: String,
    #[serde(flatten)]
    id: FamilyId,
    order: usize,
    kind: &'static str,
}

fn catalog(max_order: usize, format: CatalogFormat) -> Outcome {
    let lines: Vec<CatalogLine> = family_catalog(max_order)?
        .into_iter()
        .map(|e| CatalogLine {
            name: e.id.to_string(),
            order: e.order(),
            kind: if e.is_poset() { "poset" } else { "graph" },
            id: e.id,
        })
        .collect();
    match format {
        CatalogFormat::Json => print_json(&lines),
        CatalogFormat::Text => {
            for l in &lines {
                println!("{:<20} {:>3}  {}", l.name, l.order, l.kind);
            }
        }
    }
    Ok(())
}

fn census(what: CensusKind, order: usize, out: Option<&Path>) -> Outcome {
    let objects: Vec<AnyGraph> = match what {
        CensusKind::Posets => enumerate_posets(order)?.into_iter().map(|p| p.into_digraph().into()).collect(),
        CensusKind::Graphs => enumerate_graphs(order)?.into_iter().map(AnyGraph::from).collect(),
    };
    let text: String = objects.iter().map(emit).collect();
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    let noun = match what {
        CensusKind::Posets => "posets",
        CensusKind::Graphs => "graphs",
    };
    eprintln!("{} {noun} of order {order}", objects.len());
    Ok(())
}

fn verify(suite: Suite, order: usize) -> Outcome {
    let reports: Vec<VerificationReport> = match suite {
        Suite::Main => vec![verify_main_theorem(order)?],
        Suite::Cited => verify_cited_theorems(order)?,
        Suite::Families => vec![verify_family_criticality(order)?, verify_orientation_identities(order)?],
    };
    let ok = reports.iter().all(VerificationReport::passed);
    match suite {
        Suite::Main => print_json(&reports[0]),
        _ => print_json(&reports),
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn probe(params: &str, budget: Option<u64>) -> Outcome {
    let p: CompositionParams = params.parse()?;
    print_json(&conjecture_probe(&p, budget)?);
    Ok(())
}

fn export(file: &Path, name: &str) -> Outcome {
    print!("{}", to_dot(&read_graph(file)?, name));
    Ok(())
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Generate { family, params, dual, complement, format } => {
            generate(&family, &params, dual, complement, format)
        }
        Command::Analyze { file } => analyze(&file),
        Command::Orient { file, mode } => orient(&file, &mode),
        Command::Embeds { pattern, host } => embeds(&pattern, &host),
        Command::Catalog { max_order, format } => catalog(max_order, format),
        Command::Census { what, order, out } => census(what, order, out.as_deref()),
        Command::Verify { suite, order } => verify(suite, order),
        Command::ProbeConjecture { params, timeout_nodes } => probe(&params, timeout_nodes),
        Command::Export { file, name } => export(&file, &name),
    }
}

fn main() -> ExitCode {
    // clap exits with 2 on usage errors
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
