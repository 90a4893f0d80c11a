use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use searchtree::io::{
    parse_dimacs_cnf, parse_graph_file, parse_ordering, parse_tree_file, write_graph_file, write_roles,
    write_tree_file,
};
use searchtree::oracle::{is_chordal, is_weakly_chordal_bruteforce, oracle_recognize};
use searchtree::reduction::{build_lbfs_instance, build_mns_instance};
use searchtree::{
    recognize, recognize_by_backtracking, run_search, split_partition, validate_order, Budget, Graph, Outcome,
    RecognitionResult, SearchKind, Side, SpanningTree, TieBreak, VertexOrdering,
};

const YES: u8 = 0;
const NO: u8 = 1;
const INCONCLUSIVE: u8 = 2;
const FAILURE: u8 = 3;

#[derive(Parser)]
#[command(name = "searchtree", version, about = "Build, validate and recognize graph search trees")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a search and print the visiting order.
    Search {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        kind: SearchKind,
        /// Start vertex (1-based).
        #[arg(long, default_value_t = 1)]
        start: usize,
        #[arg(long, value_enum, default_value_t = Tie::Min)]
        tie_break: Tie,
        /// Priority list for `--tie-break priority`, earliest wins.
        #[arg(long)]
        priority: Option<String>,
        /// Also print the tree of this side.
        #[arg(long)]
        side: Option<Side>,
        #[arg(long)]
        json: bool,
    },
    /// Check whether an ordering is a valid search ordering.
    ValidateOrder {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        kind: SearchKind,
        #[command(flatten)]
        order: OrderSource,
    },
    /// Print the F- or L-tree of an ordering in tree file format.
    BuildTree {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        side: Side,
        #[command(flatten)]
        order: OrderSource,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide whether a spanning tree is a search tree.
    Recognize {
        #[command(flatten)]
        instance: Instance,
        /// Cap on search nodes expanded by exponential methods.
        #[arg(long)]
        budget: Option<u64>,
        /// Skip the specialised methods and backtrack directly.
        #[arg(long)]
        exhaustive: bool,
        #[arg(long)]
        json: bool,
    },
    /// Decide the same question by exhaustive search over orderings.
    Oracle {
        #[command(flatten)]
        instance: Instance,
        #[arg(long)]
        json: bool,
    },
    /// Build a recognition instance from a 3-CNF formula.
    Reduce {
        #[arg(long, value_enum)]
        target: Target,
        #[arg(long)]
        cnf: PathBuf,
        /// Writes PREFIX.graph, PREFIX.tree and PREFIX.roles.
        #[arg(long)]
        out_prefix: PathBuf,
        /// Reject clauses with fewer than three literals.
        #[arg(long)]
        strict: bool,
    },
    /// Test membership in a graph class.
    CheckClass {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum)]
        class: Class,
    },
}

#[derive(clap::Args)]
struct Instance {
    #[arg(long)]
    kind: SearchKind,
    #[arg(long)]
    side: Side,
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    tree: PathBuf,
}

#[derive(clap::Args)]
#[group(required = true, multiple = false)]
struct OrderSource {
    /// 1-based ids separated by spaces or commas.
    #[arg(long)]
    order: Option<String>,
    /// File with ids, a JSON array, or JSON output of `recognize`/`search`.
    #[arg(long)]
    order_file: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Tie {
    Min,
    Max,
    Priority,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Lbfs,
    Mns,
}

#[derive(Clone, Copy, ValueEnum)]
enum Class {
    Split,
    Chordal,
    WeaklyChordal,
}

type CliResult = Result<u8, String>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { FAILURE } else { YES });
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(FAILURE)
        }
    }
}

fn run(command: Command) -> CliResult {
    match command {
        Command::Search { graph, kind, start, tie_break, priority, side, json } => {
            let g = load_graph(&graph)?;
            let tb = match (tie_break, priority) {
                (Tie::Min, None) => TieBreak::MinId,
                (Tie::Max, None) => TieBreak::MaxId,
                (Tie::Priority, Some(p)) => TieBreak::Explicit(parse_ordering(&p).map_err(|e| e.to_string())?),
                (Tie::Priority, None) => return Err("--tie-break priority needs --priority".into()),
                (_, Some(_)) => return Err("--priority is only used with --tie-break priority".into()),
            };
            let start = start.checked_sub(1).ok_or("vertex ids start at 1")?;
            let sigma = run_search(&g, kind, start, &tb).map_err(|e| e.to_string())?;
            let tree = side.map(|s| s.build_tree(&g, &sigma)).transpose().map_err(|e| e.to_string())?;
            if json {
                let mut out = json!({ "kind": kind.name(), "ordering": sigma.to_one_based() });
                if let (Some(s), Some(t)) = (side, &tree) {
                    out["side"] = json!(s.to_string());
                    out["tree"] = tree_json(t);
                }
                println!("{out}");
            } else {
                println!("{}", join(&sigma.to_one_based()));
                if let Some(t) = &tree {
                    print!("{}", write_tree_file(t));
                }
            }
            Ok(YES)
        }
        Command::ValidateOrder { graph, kind, order } => {
            let g = load_graph(&graph)?;
            let sigma = order.load()?;
            let ok = validate_order(&g, kind, &sigma).map_err(|e| e.to_string())?;
            println!("{ok}");
            Ok(if ok { YES } else { NO })
        }
        Command::BuildTree { graph, side, order, out } => {
            let g = load_graph(&graph)?;
            let sigma = order.load()?;
            let t = side.build_tree(&g, &sigma).map_err(|e| e.to_string())?;
            match out {
                Some(path) => write(&path, &write_tree_file(&t))?,
                None => print!("{}", write_tree_file(&t)),
            }
            Ok(YES)
        }
        Command::Recognize { instance, budget, exhaustive, json } => {
            let (g, t) = instance.load()?;
            let budget = budget.map_or(Budget::unlimited(), Budget::nodes);
            let result = if exhaustive {
                recognize_by_backtracking(&g, &t, instance.kind, instance.side, budget)
            } else {
                recognize(&g, &t, instance.kind, instance.side, budget)
            }
            .map_err(|e| e.to_string())?;
            report(&instance, &result, json);
            Ok(exit_code(result.outcome))
        }
        Command::Oracle { instance, json } => {
            let (g, t) = instance.load()?;
            let found = oracle_recognize(&g, &t, instance.kind, instance.side).map_err(|e| e.to_string())?;
            let result = RecognitionResult {
                outcome: if found.is_some() { Outcome::Yes } else { Outcome::No },
                roots_tried: g.vertex_count(),
                nodes_expanded: 0,
                witness: found.map(|ordering| searchtree::Witness {
                    root: ordering.first().expect("orderings are non-empty"),
                    ordering,
                }),
            };
            report(&instance, &result, json);
            Ok(exit_code(result.outcome))
        }
        Command::Reduce { target, cnf, out_prefix, strict } => {
            let f = parse_dimacs_cnf(&read(&cnf)?, strict).map_err(|e| format!("{}: {e}", cnf.display()))?;
            let instance = match target {
                Target::Lbfs => build_lbfs_instance(&f),
                Target::Mns => build_mns_instance(&f),
            };
            let paths = ["graph", "tree", "roles"].map(|ext| with_suffix(&out_prefix, ext));
            write(&paths[0], &write_graph_file(&instance.graph))?;
            write(&paths[1], &write_tree_file(&instance.tree))?;
            write(&paths[2], &write_roles(&instance))?;
            for p in &paths {
                println!("{}", p.display());
            }
            Ok(YES)
        }
        Command::CheckClass { graph, class } => {
            let g = load_graph(&graph)?;
            let member = match class {
                Class::Split => {
                    let p = split_partition(&g);
                    if let Some(p) = &p {
                        println!("true");
                        println!("clique: {}", join(&one_based(&p.clique)));
                        println!("independent: {}", join(&one_based(&p.independent)));
                        return Ok(YES);
                    }
                    false
                }
                Class::Chordal => is_chordal(&g),
                Class::WeaklyChordal => is_weakly_chordal_bruteforce(&g),
            };
            println!("{member}");
            Ok(if member { YES } else { NO })
        }
    }
}

impl Instance {
    fn load(&self) -> Result<(Graph, SpanningTree), String> {
        let g = load_graph(&self.graph)?;
        let t = parse_tree_file(&read(&self.tree)?, &g).map_err(|e| format!("{}: {e}", self.tree.display()))?;
        Ok((g, t))
    }
}

impl OrderSource {
    fn load(&self) -> Result<VertexOrdering, String> {
        match (&self.order, &self.order_file) {
            (Some(text), _) => parse_ordering(text).map_err(|e| e.to_string()),
            (None, Some(path)) => {
                let text = read(path)?;
                parse_order_text(&text).map_err(|e| format!("{}: {e}", path.display()))
            }
            (None, None) => Err("an ordering is required".into()),
        }
    }
}

fn parse_order_text(text: &str) -> Result<VertexOrdering, String> {
    let trimmed = text.trim_start();
    if !(trimmed.starts_with('{') || trimmed.starts_with('[')) {
        return parse_ordering(text).map_err(|e| e.to_string());
    }
    let value: Value = serde_json::from_str(trimmed).map_err(|e| e.to_string())?;
    let ids = match &value {
        Value::Array(_) => &value,
        _ => value.get("ordering").ok_or("JSON input has no `ordering` field")?,
    };
    let ids: Vec<usize> = ids
        .as_array()
        .ok_or("`ordering` must be an array")?
        .iter()
        .map(|x| x.as_u64().map(|x| x as usize).ok_or("ordering entries must be positive integers"))
        .collect::<Result<_, _>>()?;
    VertexOrdering::from_one_based(&ids).map_err(|e| e.to_string())
}

fn report(instance: &Instance, result: &RecognitionResult, as_json: bool) {
    if as_json {
        let mut out = json!({
            "kind": instance.kind.name(),
            "side": instance.side.to_string(),
            "outcome": result.outcome.to_string(),
            "roots_tried": result.roots_tried,
            "nodes_expanded": result.nodes_expanded,
        });
        if let Some(w) = &result.witness {
            out["root"] = json!(w.root + 1);
            out["ordering"] = json!(w.ordering.to_one_based());
        }
        println!("{out}");
        return;
    }
    println!("{}", result.outcome);
    if let Some(w) = &result.witness {
        println!("root {}: {}", w.root + 1, join(&w.ordering.to_one_based()));
    }
}

fn exit_code(outcome: Outcome) -> u8 {
    match outcome {
        Outcome::Yes => YES,
        Outcome::No => NO,
        Outcome::Inconclusive => INCONCLUSIVE,
    }
}

fn tree_json(t: &SpanningTree) -> Value {
    json!(t.edges().iter().map(|&(u, v)| [u + 1, v + 1]).collect::<Vec<_>>())
}

fn one_based(vs: &[usize]) -> Vec<usize> {
    vs.iter().map(|v| v + 1).collect()
}

fn join(ids: &[usize]) -> String {
    ids.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn load_graph(path: &Path) -> Result<Graph, String> {
    parse_graph_file(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn write(path: &Path, text: &str) -> Result<(), String> {
    fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))
}

fn with_suffix(prefix: &Path, ext: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(".");
    s.push(ext);
    PathBuf::from(s)
}
