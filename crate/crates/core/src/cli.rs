//! Command-line front end. Every command yields a [`CommandResult`] whose JSON
//! document goes to standard output; artifacts are written to files.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::building::{build_alliance, ReductionMode};
use crate::closedform::{special_class_dispatch, AnswerKind};
use crate::error::{Error, Result};
use crate::fpt::{
    analyze_parameters, dp_treewidth_delta_containing, nice_decomposition, snd_min_alliance,
    snd_partition, solve_k_delta, TreeDecomposition,
};
use crate::graph::SignedGraph;
use crate::io::{read_graph, to_dot, to_edge_list};
use crate::oracle::{min_alliance_bruteforce, MinAllianceResult};
use crate::reductions::{
    clique_to_minda, gen_k_balanced_complete, gen_random, nae_to_defall, nae_to_defall_maxdeg5,
    parse_dimacs, threesat_to_nae, unsigned_to_signed, NaeFormula, ReductionOutput, UnsignedGraph,
};
use crate::verify::{candidates, check_alliance};

pub const SCHEMA_VERSION: u32 = 1;

/// Environment variable naming a TOML file with `[auto]` thresholds.
pub const CONFIG_ENV: &str = "SDA_CONFIG";

#[derive(Parser, Debug)]
#[command(name = "sda", version, about = "Defensive alliances in signed graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check whether a vertex set is a defensive alliance.
    Verify {
        graph: PathBuf,
        /// Comma-separated vertex labels.
        #[arg(long)]
        set: String,
    },
    /// Find a minimum defensive alliance.
    MinAlliance(MinAllianceArgs),
    /// Flip as few edges as possible so that a target set becomes an alliance.
    Build {
        graph: PathBuf,
        #[arg(long)]
        target: String,
        #[arg(short = 'k', long = "budget")]
        k: usize,
        #[arg(long, value_enum, default_value_t = Rule::Corrected)]
        rule: Rule,
    },
    /// Report structural parameters.
    Analyze { graph: PathBuf },
    /// Run a hardness reduction and write the produced instance.
    Reduce {
        #[arg(value_enum)]
        kind: ReduceKind,
        input: PathBuf,
        output_prefix: PathBuf,
        /// Clique size for `clique2minda`.
        #[arg(short = 'k')]
        k: Option<usize>,
    },
    /// Generate a graph.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Render a graph in DOT, highlighting an optional set.
    Dot {
        graph: PathBuf,
        #[arg(long)]
        set: Option<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
pub struct MinAllianceArgs {
    pub graph: PathBuf,
    /// Size bound; defaults to the vertex count.
    #[arg(short = 'k', long = "bound")]
    pub k: Option<usize>,
    #[arg(long)]
    pub contains: Option<String>,
    #[arg(long, value_enum, default_value_t = SolverChoice::Auto)]
    pub solver: SolverChoice,
    #[arg(long)]
    pub td_file: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum SolverChoice {
    Oracle,
    Searchtree,
    Treewidth,
    Snd,
    Auto,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Rule {
    Literal,
    Corrected,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReduceKind {
    #[value(name = "unsigned2signed")]
    UnsignedToSigned,
    #[value(name = "nae2defall")]
    NaeToDefall,
    #[value(name = "nae2defall-d5")]
    NaeToDefallD5,
    #[value(name = "clique2minda")]
    CliqueToMinda,
    #[value(name = "3sat2nae")]
    ThreeSatToNae,
}

#[derive(Subcommand, Debug)]
pub enum GenKind {
    /// Complete graph, positive inside parts and negative across.
    Kbalanced {
        /// Comma-separated part sizes.
        sizes: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Independent random edges and signs.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long = "p-edge", short = 'p')]
        p_edge: f64,
        #[arg(long = "p-neg", short = 'q')]
        p_neg: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    NoSolution,
    Error,
}

#[derive(Clone, Debug)]
pub struct CommandResult {
    pub command: &'static str,
    pub status: Status,
    pub payload: Value,
    /// Raw text printed instead of the JSON document.
    pub raw: Option<String>,
}

impl CommandResult {
    fn new(command: &'static str, ok: bool, payload: Value) -> Self {
        Self {
            command,
            status: if ok { Status::Ok } else { Status::NoSolution },
            payload,
            raw: None,
        }
    }

    fn error(command: &'static str, e: &Error) -> Self {
        Self {
            command,
            status: Status::Error,
            payload: json!({ "kind": error_kind(e), "message": e.to_string() }),
            raw: None,
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Ok => 0,
            Status::NoSolution => 1,
            Status::Error => 2,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "status": self.status,
            "payload": self.payload,
        })
    }

    /// What the binary prints.
    pub fn render(&self) -> String {
        match &self.raw {
            Some(text) => text.clone(),
            None => format!("{:#}\n", self.to_json()),
        }
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::MalformedLine { .. } => "malformed_line",
        Error::DuplicateEdge { .. } => "duplicate_edge",
        Error::SelfLoop(_) => "self_loop",
        Error::UnknownVertex(_) => "unknown_vertex",
        Error::EmptySet => "empty_set",
        Error::DegreeTooHigh(_) => "degree_too_high",
        Error::NotComplete => "not_complete",
        Error::NotClusterable => "not_clusterable",
        Error::NoNegativeEdges => "no_negative_edges",
        Error::PreconditionViolated(_) => "precondition_violated",
        Error::InternalVerificationFailed(_) => "internal_verification_failed",
        Error::InvalidDecomposition(_) => "invalid_decomposition",
        Error::MalformedFormula(_) => "malformed_formula",
        Error::NotAnNaeAssignment(_) => "not_an_nae_assignment",
        Error::SinglePartAllPositive => "single_part_all_positive",
        Error::InvalidArgument(_) => "invalid_argument",
        Error::Io(_) => "io",
    }
}

/// Limits used by `--solver auto`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize, Serialize)]
#[serde(default, deny_unknown_fields)]
pub struct AutoThresholds {
    /// Largest signed neighborhood diversity handed to the integer program.
    pub snd_max: usize,
    /// Largest `k·Δ` handed to the search tree.
    pub search_max: usize,
    /// Largest candidate universe handed to the exhaustive oracle.
    pub oracle_universe_max: usize,
}

impl Default for AutoThresholds {
    fn default() -> Self {
        Self {
            snd_max: 12,
            search_max: 40,
            oracle_universe_max: 22,
        }
    }
}

#[derive(Deserialize, Default)]
#[serde(default, deny_unknown_fields)]
struct ConfigFile {
    auto: AutoThresholds,
}

impl AutoThresholds {
    pub fn parse(text: &str) -> Result<Self> {
        toml::from_str::<ConfigFile>(text)
            .map(|c| c.auto)
            .map_err(|e| Error::InvalidArgument(format!("config: {e}")))
    }

    /// Defaults, overridden by the file named in `SDA_CONFIG` when set.
    pub fn from_env() -> Result<Self> {
        match std::env::var_os(CONFIG_ENV) {
            Some(path) => Self::parse(&std::fs::read_to_string(path)?),
            None => Ok(Self::default()),
        }
    }
}

fn split_list(list: &str) -> Vec<&str> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect()
}

fn resolve_set(g: &SignedGraph, list: &str) -> Result<Vec<usize>> {
    let labels = split_list(list);
    if labels.is_empty() {
        return Err(Error::EmptySet);
    }
    g.resolve(&labels)
}

pub fn execute(cli: Cli) -> CommandResult {
    let name = command_name(&cli.command);
    match dispatch(cli.command) {
        Ok(r) => r,
        Err(e) => CommandResult::error(name, &e),
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Verify { .. } => "verify",
        Command::MinAlliance(_) => "min-alliance",
        Command::Build { .. } => "build",
        Command::Analyze { .. } => "analyze",
        Command::Reduce { .. } => "reduce",
        Command::Gen { .. } => "gen",
        Command::Dot { .. } => "dot",
    }
}

fn dispatch(command: Command) -> Result<CommandResult> {
    match command {
        Command::Verify { graph, set } => {
            let g = read_graph(&graph)?;
            let report = check_alliance(&g, &resolve_set(&g, &set)?)?;
            Ok(CommandResult::new(
                "verify",
                report.valid,
                report.to_json(&g),
            ))
        }
        Command::MinAlliance(args) => min_alliance(&args, &AutoThresholds::from_env()?),
        Command::Build {
            graph,
            target,
            k,
            rule,
        } => {
            let g = read_graph(&graph)?;
            let d = resolve_set(&g, &target)?;
            let mode = match rule {
                Rule::Literal => ReductionMode::Literal,
                Rule::Corrected => ReductionMode::Corrected,
            };
            let plan = build_alliance(&g, &d, k, mode)?;
            let payload = json!({
                "target": g.labels_of(&d),
                "budget": k,
                "rule": mode,
                "plan": plan.as_ref().map(|p| p.to_json(&g)),
            });
            Ok(CommandResult::new("build", plan.is_some(), payload))
        }
        Command::Analyze { graph } => {
            let g = read_graph(&graph)?;
            Ok(CommandResult::new("analyze", true, analyze_json(&g)))
        }
        Command::Reduce {
            kind,
            input,
            output_prefix,
            k,
        } => reduce(kind, &input, &output_prefix, k),
        Command::Gen { kind } => generate(kind),
        Command::Dot { graph, set, output } => {
            let g = read_graph(&graph)?;
            let members = match &set {
                Some(list) => resolve_set(&g, list)?,
                None => Vec::new(),
            };
            let dot = to_dot(&g, &members);
            match output {
                Some(path) => {
                    std::fs::write(&path, &dot)?;
                    Ok(CommandResult::new("dot", true, json!({ "file": path })))
                }
                None => {
                    let mut r = CommandResult::new("dot", true, Value::Null);
                    r.raw = Some(dot);
                    Ok(r)
                }
            }
        }
    }
}

/// Picks and runs a solver, returning the result and the solver's name.
pub fn solve_min_alliance(
    g: &SignedGraph,
    k: usize,
    required: Option<usize>,
    solver: SolverChoice,
    td: Option<&TreeDecomposition>,
    limits: &AutoThresholds,
) -> Result<(MinAllianceResult, String)> {
    if k == 0 {
        return Err(Error::InvalidArgument("bound must be at least 1".into()));
    }
    if let Some(r) = required {
        g.check_vertex(r)?;
    }
    let treewidth = || -> Result<MinAllianceResult> {
        let ntd = nice_decomposition(g, td)?;
        Ok(dp_treewidth_delta_containing(g, &ntd, required)?.bounded(k))
    };
    let named = |r: MinAllianceResult, s: &str| Ok((r, s.to_string()));
    match solver {
        SolverChoice::Oracle => named(min_alliance_bruteforce(g, k, required)?, "oracle"),
        SolverChoice::Searchtree => named(solve_k_delta(g, k, required)?, "searchtree"),
        SolverChoice::Treewidth => named(treewidth()?, "treewidth"),
        SolverChoice::Snd => named(snd_min_alliance(g, required)?.bounded(k), "snd"),
        SolverChoice::Auto => {
            if g.n() == 0 {
                return named(MinAllianceResult::none(), "oracle");
            }
            if required.is_none() && td.is_none() {
                if let Some(c) = special_class_dispatch(g) {
                    let r = match c.answer.kind {
                        AnswerKind::Unalliable => MinAllianceResult::none(),
                        _ => MinAllianceResult::found_set(c.answer.witness.clone()).bounded(k),
                    };
                    let class = serde_json::to_value(c.class).expect("class serializes");
                    return named(r, &format!("closedform:{}", class.as_str().unwrap_or("")));
                }
            }
            if td.is_some() {
                return named(treewidth()?, "treewidth");
            }
            if snd_partition(g).d() <= limits.snd_max {
                return named(snd_min_alliance(g, required)?.bounded(k), "snd");
            }
            if k.min(g.n()) * g.max_degree() <= limits.search_max {
                return named(solve_k_delta(g, k, required)?, "searchtree");
            }
            let universe = candidates(g, k).iter().filter(|&&c| c).count();
            if universe <= limits.oracle_universe_max {
                return named(min_alliance_bruteforce(g, k, required)?, "oracle");
            }
            named(treewidth()?, "treewidth")
        }
    }
}

fn min_alliance(args: &MinAllianceArgs, limits: &AutoThresholds) -> Result<CommandResult> {
    let g = read_graph(&args.graph)?;
    let required = args
        .contains
        .as_deref()
        .map(|l| g.index_of(l.trim()))
        .transpose()?;
    let td = match &args.td_file {
        Some(path) => Some(TreeDecomposition::parse(
            &std::fs::read_to_string(path)?,
            &g,
        )?),
        None => None,
    };
    let k = args.k.unwrap_or(g.n().max(1));
    let (result, solver) = solve_min_alliance(&g, k, required, args.solver, td.as_ref(), limits)?;
    let mut payload = result.to_json(&g);
    payload["solver"] = json!(solver);
    payload["bound"] = json!(k);
    payload["contains"] = json!(args.contains);
    Ok(CommandResult::new("min-alliance", result.found(), payload))
}

fn analyze_json(g: &SignedGraph) -> Value {
    let r = analyze_parameters(g);
    let balance = g.is_balanced();
    json!({
        "n": r.n,
        "positive_edges": r.positive_edges,
        "negative_edges": r.negative_edges,
        "max_degree": r.max_degree,
        "min_negative_degree": r.min_negative_degree,
        "snd": r.snd,
        "vertex_cover": {
            "size": r.vertex_cover.size,
            "exact": r.vertex_cover.exact,
            "vertices": g.labels_of(&r.vertex_cover.vertices),
        },
        "snd_bound": r.snd_bound.map(|b| b.to_string()),
        "treewidth_upper_bound": r.treewidth_upper_bound,
        "balanced": r.balanced,
        "balance_partition": balance.map(|(a, b)| vec![g.labels_of(&a), g.labels_of(&b)]),
        "clusterable": r.clusterable,
        "clusters": r.clusters,
        "clustering_partition": g
            .clustering_partition()
            .map(|p| p.groups.iter().map(|grp| g.labels_of(grp)).collect::<Vec<_>>()),
    })
}

fn with_suffix(prefix: &Path, suffix: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

fn write_reduction(out: &ReductionOutput, prefix: &Path) -> Result<(PathBuf, PathBuf)> {
    let sg = with_suffix(prefix, ".sg");
    let side = with_suffix(prefix, ".provenance.json");
    std::fs::write(&sg, to_edge_list(&out.graph))?;
    std::fs::write(&side, format!("{:#}\n", out.provenance_json()))?;
    Ok((sg, side))
}

fn reduce(
    kind: ReduceKind,
    input: &Path,
    prefix: &Path,
    k: Option<usize>,
) -> Result<CommandResult> {
    let text = std::fs::read_to_string(input)?;
    let (out, bounds) = match kind {
        ReduceKind::ThreeSatToNae => {
            let cnf = parse_dimacs(&text)?;
            let phi = threesat_to_nae(&cnf)?;
            let path = with_suffix(prefix, ".nae");
            std::fs::write(&path, phi.to_text())?;
            let payload = json!({
                "kind": "3sat2nae",
                "file": path,
                "input_variables": cnf.n,
                "input_clauses": cnf.clauses.len(),
                "variables": phi.n,
                "clauses": phi.m(),
                "declared": { "variables": 2 * cnf.n + 1 + 2 * cnf.clauses.len(), "clauses": 3 * cnf.clauses.len() + cnf.n },
            });
            return Ok(CommandResult::new("reduce", true, payload));
        }
        ReduceKind::UnsignedToSigned => {
            let g = UnsignedGraph::parse(&text)?;
            let gadgets: usize = g.degrees().iter().map(|d| (d + 2) / 2).sum();
            (
                unsigned_to_signed(&g)?,
                json!({ "vertices_exact": g.n() + 4 * gadgets }),
            )
        }
        ReduceKind::CliqueToMinda => {
            let k = k.ok_or_else(|| Error::InvalidArgument("clique2minda needs -k".into()))?;
            let g = UnsignedGraph::parse(&text)?;
            let (n, e) = (g.n(), g.edges.len());
            (
                clique_to_minda(&g, k)?,
                json!({ "vertices_exact": n + e + 4 * k * n + 12 * e }),
            )
        }
        ReduceKind::NaeToDefall => {
            let phi = NaeFormula::parse(&text)?;
            (
                nae_to_defall(&phi)?,
                json!({ "vertices_max": 56 * phi.m() + 2 }),
            )
        }
        ReduceKind::NaeToDefallD5 => {
            let phi = NaeFormula::parse(&text)?;
            (
                nae_to_defall_maxdeg5(&phi)?,
                json!({ "vertices_max": 16 * phi.m(), "max_degree": 5 }),
            )
        }
    };
    let n = out.graph.n();
    let holds = bounds
        .get("vertices_exact")
        .is_none_or(|b| b.as_u64() == Some(n as u64))
        && bounds
            .get("vertices_max")
            .is_none_or(|b| n as u64 <= b.as_u64().unwrap_or(0))
        && bounds.get("max_degree").is_none_or(|b| {
            out.graph.max_degree() as u64 <= b.as_u64().unwrap_or(0)
        });
    let (sg, side) = write_reduction(&out, prefix)?;
    let kind_name = kind.to_possible_value().map(|v| v.get_name().to_string());
    let payload = json!({
        "kind": kind_name,
        "file": sg,
        "provenance_file": side,
        "vertices": n,
        "positive_edges": out.graph.positive_edge_count(),
        "negative_edges": out.graph.negative_edge_count(),
        "max_degree": out.graph.max_degree(),
        "special_vertex": out.special_vertex.map(|v| out.graph.label(v).to_string()),
        "budget": out.budget,
        "declared": bounds,
        "bounds_hold": holds,
    });
    Ok(CommandResult::new("reduce", true, payload))
}

fn generate(kind: GenKind) -> Result<CommandResult> {
    let (g, output, name) = match kind {
        GenKind::Kbalanced { sizes, output } => {
            let parts = split_list(&sizes)
                .into_iter()
                .map(|s| {
                    s.parse::<usize>()
                        .map_err(|_| Error::InvalidArgument(format!("bad part size {s:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            (gen_k_balanced_complete(&parts)?, output, "kbalanced")
        }
        GenKind::Random {
            n,
            p_edge,
            p_neg,
            seed,
            output,
        } => (gen_random(n, p_edge, p_neg, seed)?, output, "random"),
    };
    let text = to_edge_list(&g);
    let mut payload = json!({
        "kind": name,
        "vertices": g.n(),
        "positive_edges": g.positive_edge_count(),
        "negative_edges": g.negative_edge_count(),
    });
    match output {
        Some(path) => {
            std::fs::write(&path, &text)?;
            payload["file"] = json!(path);
        }
        None => payload["graph"] = json!(text),
    }
    Ok(CommandResult::new("gen", true, payload))
}
