//! Batch command-line front end: generate plum graphs and diagrams, compute
//! invariants and move sets, run exact L1 certification, compute
//! linear-bound constants, and run the acceptance selftest.
//!
//! Every invocation prints exactly one JSON report on standard output:
//! `{"command": .., "status": "pass|fail|unresolved", "payload": .., "durationMs": ..}`.
//! Exit codes: 0 pass, 1 fail, 2 usage error, 3 budget-unresolved. Payloads
//! are byte-identical across runs for identical inputs; only `durationMs`
//! varies. File-reading flags accept both bare format files and wrapped
//! reports (the `payload` of a previous invocation).

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use plumknot::bounds::{optimize_constants, theorem2_constants, BoundConstants};
use plumknot::diagram::{
    cube_knotted_projection, resolutions, standard_plum_diagram, trivial_plum_diagram,
};
use plumknot::error::Error;
use plumknot::graph::{Cycle, Dir, SpanningTree, VertexId};
use plumknot::invariants::{linking_vector, nontriviality_certificate, Verdict, WitnessKind};
use plumknot::io;
use plumknot::l1::{
    min_l1, subclaim_search, verify_unknotting_number, Budget, L1Problem, LowerBound,
    PrefixOutcome, SolveOutcome,
};
use plumknot::moves::move_set;
use plumknot::plum::{build_plum_graph, PlumGraph};

#[derive(Parser)]
#[command(name = "plumknot", version, about = "Spatial plum graph diagrams: invariants, move spaces, and exact unknotting-number certification")]
struct Cli {
    /// Pretty-print the JSON report
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate plum graphs, diagrams, and projections
    Plum {
        #[command(subcommand)]
        sub: PlumCmd,
    },
    /// Diagram file operations
    Diagram {
        #[command(subcommand)]
        sub: DiagramCmd,
    },
    /// Linking vector and nontriviality witnesses of a plum diagram
    Invariants {
        /// Diagram file
        #[arg(long)]
        diagram: PathBuf,
    },
    /// Enumerate the move set of P_{2n+1} and its closed form
    Moveset {
        #[arg(long)]
        n: usize,
    },
    /// Exact minimum-L1 representation
    L1 {
        #[command(subcommand)]
        sub: L1Cmd,
    },
    /// Verify theorem-level statements
    Verify {
        #[command(subcommand)]
        sub: VerifyCmd,
    },
    /// Projection analysis: all resolutions with certificates
    Projection {
        #[command(subcommand)]
        sub: ProjectionCmd,
    },
    /// Linear-bound constants: branch indices, reorder cost, A and B
    Bounds(BoundsArgs),
    /// Run the full acceptance suite
    Selftest,
}

#[derive(Subcommand)]
enum PlumCmd {
    /// Emit the graph, a diagram, or the projection of P_{2n+1}
    Gen {
        #[arg(long)]
        n: usize,
        /// graph | standard | trivial | projection
        #[arg(long, default_value = "standard")]
        kind: String,
    },
}

#[derive(Subcommand)]
enum DiagramCmd {
    /// Check every diagram invariant; violations are reported as data
    Validate {
        #[arg(long)]
        diagram: PathBuf,
    },
}

#[derive(Subcommand)]
enum L1Cmd {
    /// Certified minimum-L1 representation of a target vector
    Solve {
        #[arg(long)]
        dim: usize,
        /// Generator file (JSON array of integer vectors); defaults to the
        /// move set B_{2n+1} when --n is given instead
        #[arg(long)]
        gens: Option<PathBuf>,
        /// Use the move set of P_{2n+1} as generators
        #[arg(long)]
        n: Option<usize>,
        /// Comma-separated target vector, e.g. "7,0,0"
        #[arg(long)]
        target: String,
        #[arg(long)]
        max_cost: Option<u64>,
        #[arg(long)]
        max_states: Option<u64>,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// u(f_{2n+1}) = 2n: exhaustive lower bound and explicit upper sequence
    Theorem1 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_cost: Option<u64>,
        #[arg(long)]
        max_states: Option<u64>,
        /// Largest n for which the exhaustive lower bound runs
        #[arg(long, default_value_t = 4)]
        lower_cap: usize,
    },
    /// Prefix-constrained minima n+k and coordinate value sets
    Subclaims {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_cost: Option<u64>,
        #[arg(long)]
        max_states: Option<u64>,
    },
}

#[derive(Subcommand)]
enum ProjectionCmd {
    /// Resolve a projection file and certify every resolution
    Analyze {
        #[arg(long)]
        file: PathBuf,
        /// Resolution cap (2^crossings diagrams)
        #[arg(long, default_value_t = 20)]
        cap: usize,
    },
}

#[derive(Args)]
struct BoundsArgs {
    /// Graph file
    #[arg(long)]
    graph: PathBuf,
    /// Spanning tree file {"edges":[..],"root":id}
    #[arg(long)]
    tree: Option<PathBuf>,
    /// Search all spanning trees and roots for the best constants
    #[arg(long)]
    optimize: bool,
    /// Root override for --tree
    #[arg(long)]
    root: Option<usize>,
    /// Cap on the number of spanning trees visited by --optimize
    #[arg(long, default_value_t = 1_000_000)]
    tree_cap: usize,
    #[command(subcommand)]
    eval: Option<BoundsEval>,
}

#[derive(Subcommand)]
enum BoundsEval {
    /// Apply the evaluator c -> A c + B
    Eval {
        #[arg(long)]
        c: u64,
    },
}

enum Status {
    Pass,
    Fail,
    Unresolved,
}

impl Status {
    fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Unresolved => "unresolved",
        }
    }

    fn exit_code(&self) -> u8 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Unresolved => 3,
        }
    }
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = Cli::parse();
    let start = Instant::now();
    let command_echo = argv[1..].join(" ");
    let (status, payload) = match dispatch(&cli.command) {
        Ok(pair) => pair,
        Err(e) => (Status::Fail, json!({ "error": e.to_string() })),
    };
    let report = json!({
        "command": command_echo,
        "status": status.as_str(),
        "payload": payload,
        "durationMs": start.elapsed().as_millis() as u64,
    });
    let rendered = if cli.pretty {
        serde_json::to_string_pretty(&report).expect("serializable")
    } else {
        serde_json::to_string(&report).expect("serializable")
    };
    println!("{}", rendered);
    ExitCode::from(status.exit_code())
}

fn dispatch(cmd: &Command) -> Result<(Status, Value), Error> {
    match cmd {
        Command::Plum { sub: PlumCmd::Gen { n, kind } } => plum_gen(*n, kind),
        Command::Diagram { sub: DiagramCmd::Validate { diagram } } => diagram_validate(diagram),
        Command::Invariants { diagram } => invariants_cmd(diagram),
        Command::Moveset { n } => moveset_cmd(*n),
        Command::L1 { sub: L1Cmd::Solve { dim, gens, n, target, max_cost, max_states } } => {
            l1_solve(*dim, gens.as_deref(), *n, target, budget(*max_cost, *max_states))
        }
        Command::Verify { sub } => match sub {
            VerifyCmd::Theorem1 { n, max_cost, max_states, lower_cap } => {
                verify_theorem1(*n, *lower_cap, budget(*max_cost, *max_states))
            }
            VerifyCmd::Subclaims { n, max_cost, max_states } => {
                verify_subclaims(*n, budget(*max_cost, *max_states))
            }
        },
        Command::Projection { sub: ProjectionCmd::Analyze { file, cap } } => {
            projection_analyze(file, *cap)
        }
        Command::Bounds(args) => bounds_cmd(args),
        Command::Selftest => selftest(),
    }
}

fn budget(max_cost: Option<u64>, max_states: Option<u64>) -> Budget {
    let mut b = Budget::default();
    if let Some(c) = max_cost {
        b.max_cost = c;
    }
    if let Some(s) = max_states {
        b.max_states = s;
    }
    b
}

/// Reads a JSON file, unwrapping a report's payload when present.
fn read_json(path: &Path) -> Result<Value, Error> {
    let text = std::fs::read_to_string(path)?;
    let value: Value = serde_json::from_str(&text)?;
    match value {
        Value::Object(ref map) if map.contains_key("payload") && map.contains_key("status") => {
            Ok(map["payload"].clone())
        }
        other => Ok(other),
    }
}

fn plum_gen(n: usize, kind: &str) -> Result<(Status, Value), Error> {
    let p = build_plum_graph(n)?;
    let payload = match kind {
        "graph" => serde_json::to_value(io::graph_to_file(p.graph()))?,
        "standard" => serde_json::to_value(io::diagram_to_file(&standard_plum_diagram(&p)))?,
        "trivial" => serde_json::to_value(io::diagram_to_file(&trivial_plum_diagram(&p)))?,
        "projection" => {
            serde_json::to_value(io::projection_to_file(&standard_plum_diagram(&p).projection()))?
        }
        other => {
            return Err(Error::Precondition(format!(
                "unknown kind {:?} (graph|standard|trivial|projection)",
                other
            )))
        }
    };
    Ok((Status::Pass, payload))
}

fn diagram_validate(path: &Path) -> Result<(Status, Value), Error> {
    let file: io::DiagramFile = serde_json::from_value(read_json(path)?)?;
    let raw = io::raw_diagram_from_file(&file)?;
    let violations = raw.violations();
    let ok = violations.is_empty();
    let payload = json!({
        "ok": ok,
        "violations": violations
            .iter()
            .map(|v| json!({ "kind": v.kind(), "message": v.to_string() }))
            .collect::<Vec<_>>(),
    });
    Ok((if ok { Status::Pass } else { Status::Fail }, payload))
}

/// Rebuilds the plum structure a diagram file lies over, by matching its
/// graph against build_plum_graph.
fn plum_of_graph(g: &plumknot::graph::PlanarGraph) -> Option<PlumGraph> {
    if g.num_vertices() < 8 || (g.num_vertices() - 4) % 4 != 0 {
        return None;
    }
    let n = (g.num_vertices() - 4) / 4;
    let p = build_plum_graph(n).ok()?;
    (p.graph() == g).then_some(p)
}

fn cycle_json(c: &Cycle) -> Value {
    Value::Array(
        c.edges
            .iter()
            .map(|&(e, d)| json!([e.0, if d == Dir::Fwd { 1 } else { -1 }]))
            .collect(),
    )
}

fn invariants_cmd(path: &Path) -> Result<(Status, Value), Error> {
    let file: io::DiagramFile = serde_json::from_value(read_json(path)?)?;
    let d = io::diagram_from_file(&file)?;
    let plum = plum_of_graph(d.graph());
    let lv = match &plum {
        Some(p) => Some(linking_vector(&d, p)?),
        None => None,
    };
    let cert = nontriviality_certificate(&d)?;
    let payload = json!({
        "n": plum.as_ref().map(|p| p.n()),
        "crossings": d.crossing_count(),
        "linkingVector": lv.as_ref().map(|v| v.entries.clone()),
        "verdict": match cert.verdict {
            Verdict::Nontrivial => "nontrivial",
            Verdict::Inconclusive => "inconclusive",
        },
        "witnesses": cert
            .witnesses
            .iter()
            .map(|w| {
                json!({
                    "cycles": w.cycles.iter().map(cycle_json).collect::<Vec<_>>(),
                    "invariant": match w.kind {
                        WitnessKind::LinkingNumber => "linkingNumber",
                        WitnessKind::Determinant => "determinant",
                    },
                    "value": w.value,
                })
            })
            .collect::<Vec<_>>(),
    });
    Ok((Status::Pass, payload))
}

fn moveset_cmd(n: usize) -> Result<(Status, Value), Error> {
    let ms = move_set(n)?;
    let cf = &ms.closed_form;
    let payload = json!({
        "n": n,
        "labels": {
            "a": cf.a,
            "b": cf.b,
            "c": cf.c,
            "d": cf.d,
            "e": cf.e,
            "p": cf.p,
            "q": cf.q,
        },
        "vectors": ms.vectors.iter().cloned().collect::<Vec<_>>(),
        "table": ms
            .table
            .iter()
            .map(|mv| {
                json!({
                    "edges": [mv.pair.0.0, mv.pair.1.0],
                    "class": mv.class.name(),
                    "vector": mv.vector,
                })
            })
            .collect::<Vec<_>>(),
    });
    Ok((Status::Pass, payload))
}

fn parse_target(s: &str, dim: usize) -> Result<Vec<i64>, Error> {
    let target: Result<Vec<i64>, _> = s.split(',').map(|x| x.trim().parse::<i64>()).collect();
    let target = target.map_err(|e| Error::Precondition(format!("bad target: {}", e)))?;
    if target.len() != dim {
        return Err(Error::Precondition(format!(
            "target has {} entries, expected {}",
            target.len(),
            dim
        )));
    }
    Ok(target)
}

fn l1_solve(
    dim: usize,
    gens_path: Option<&Path>,
    n: Option<usize>,
    target: &str,
    budget: Budget,
) -> Result<(Status, Value), Error> {
    let generators: Vec<Vec<i64>> = match (gens_path, n) {
        (Some(path), None) => serde_json::from_value(read_json(path)?)?,
        (None, Some(n)) => move_set(n)?.generators(),
        _ => {
            return Err(Error::Precondition(
                "provide exactly one of --gens FILE or --n N".into(),
            ))
        }
    };
    let problem = L1Problem::exact(dim, generators, parse_target(target, dim)?);
    match min_l1(&problem, &budget)? {
        SolveOutcome::Solved(sol) => {
            let payload = json!({
                "cost": sol.cost,
                "phi": sol
                    .coefficients
                    .iter()
                    .map(|(g, c)| json!({ "generator": g, "coefficient": c }))
                    .collect::<Vec<_>>(),
                "achieved": sol.achieved,
            });
            Ok((Status::Pass, payload))
        }
        SolveOutcome::Unresolved { explored, reason } => Ok((
            Status::Unresolved,
            json!({ "explored": explored, "reason": reason }),
        )),
    }
}

fn verify_theorem1(n: usize, lower_cap: usize, budget: Budget) -> Result<(Status, Value), Error> {
    let report = verify_unknotting_number(n, lower_cap, &budget)?;
    let expected = 2 * n as u64;
    let (lower_json, lower_status) = match &report.lower {
        Some(LowerBound::Certified { cost, matches_2n, witness }) => (
            json!({
                "certified": true,
                "cost": cost,
                "matches": matches_2n,
                "phi": witness
                    .coefficients
                    .iter()
                    .map(|(g, c)| json!({ "generator": g, "coefficient": c }))
                    .collect::<Vec<_>>(),
            }),
            if *matches_2n { Status::Pass } else { Status::Fail },
        ),
        Some(LowerBound::Unresolved { explored, reason }) => (
            json!({ "certified": false, "explored": explored, "reason": reason }),
            Status::Unresolved,
        ),
        None => (Value::Null, Status::Pass),
    };
    let upper_ok = report.upper.ok();
    let status = match (lower_status, upper_ok) {
        (Status::Unresolved, true) => Status::Unresolved,
        (Status::Pass, true) => Status::Pass,
        _ => Status::Fail,
    };
    let payload = json!({
        "n": n,
        "expected": expected,
        "lower": report.lower.as_ref().map(|l| match l {
            LowerBound::Certified { cost, .. } => json!(cost),
            LowerBound::Unresolved { .. } => Value::Null,
        }),
        "upper": if upper_ok { json!(report.upper.terms.len()) } else { Value::Null },
        "lowerDetail": lower_json,
        "upperDetail": {
            "terms": report.upper.terms,
            "termCountOk": report.upper.term_count_ok,
            "allRealizedEquatorial": report.upper.all_realized_equatorial,
            "sumsToTarget": report.upper.sums_to_target,
        },
    });
    Ok((status, payload))
}

fn verify_subclaims(n: usize, budget: Budget) -> Result<(Status, Value), Error> {
    if n < 1 {
        return Err(Error::InvalidN);
    }
    let ms = move_set(n)?;
    let mut rows = Vec::new();
    let mut all_ok = true;
    let mut unresolved = false;
    for k in 1..=n {
        match subclaim_search(&ms, k, &budget)? {
            PrefixOutcome::Solved { cost, coordinate_values } => {
                let expected = (n + k) as u64;
                let values: Option<Vec<i64>> =
                    coordinate_values.map(|s| s.into_iter().collect());
                let contained = match (&values, k) {
                    (None, _) => true,
                    (Some(vs), 1) => vs.iter().all(|v| [0, 1].contains(v)),
                    (Some(vs), _) => vs.iter().all(|v| [-1, 0, 1].contains(v)),
                };
                let ok = cost == expected && contained;
                all_ok &= ok;
                rows.push(json!({
                    "k": k,
                    "cost": cost,
                    "expected": expected,
                    "coordinateValues": values,
                    "ok": ok,
                }));
            }
            PrefixOutcome::Unresolved { explored, reason } => {
                unresolved = true;
                rows.push(json!({
                    "k": k,
                    "unresolved": true,
                    "explored": explored,
                    "reason": reason,
                }));
            }
        }
    }
    let status = if unresolved {
        Status::Unresolved
    } else if all_ok {
        Status::Pass
    } else {
        Status::Fail
    };
    Ok((status, json!({ "n": n, "rows": rows })))
}

fn projection_analyze(path: &Path, cap: usize) -> Result<(Status, Value), Error> {
    let proj = if path.as_os_str() == "cube" {
        cube_knotted_projection().1
    } else {
        let file: io::DiagramFile = serde_json::from_value(read_json(path)?)?;
        io::projection_from_file(&file)?
    };
    let diagrams = resolutions(&proj, cap)?;
    let plum = plum_of_graph(&proj.graph);
    let mut results = Vec::new();
    let mut hopf_multiset = Vec::new();
    let mut all_nontrivial = true;
    for (i, d) in diagrams.iter().enumerate() {
        let cert = nontriviality_certificate(d)?;
        let hopf = cert.hopf_count();
        hopf_multiset.push(hopf);
        all_nontrivial &= cert.verdict == Verdict::Nontrivial;
        let lv = match &plum {
            Some(p) => Some(linking_vector(d, p)?.entries),
            None => None,
        };
        results.push(json!({
            "resolution": i,
            "verdict": match cert.verdict {
                Verdict::Nontrivial => "nontrivial",
                Verdict::Inconclusive => "inconclusive",
            },
            "hopfWitnesses": hopf,
            "linkingVector": lv,
        }));
    }
    hopf_multiset.sort_unstable();
    let payload = json!({
        "crossings": proj.crossing_count(),
        "resolutions": diagrams.len(),
        "allNontrivial": all_nontrivial,
        "hopfMultiset": hopf_multiset,
        "results": results,
    });
    Ok((Status::Pass, payload))
}

fn constants_json(c: &BoundConstants, tree: &SpanningTree) -> Value {
    json!({
        "tree": tree.edges.iter().map(|e| e.0).collect::<Vec<_>>(),
        "root": tree.root.0,
        "bMap": c.branch.values,
        "b": c.reorder,
        "a": c.a,
        "A": c.coeff.to_string(),
        "B": c.offset.to_string(),
    })
}

fn bounds_cmd(args: &BoundsArgs) -> Result<(Status, Value), Error> {
    let file: io::GraphFile = serde_json::from_value(read_json(&args.graph)?)?;
    let g = io::graph_from_file(&file)?;
    let (tree, constants) = if args.optimize {
        optimize_constants(&g, args.tree_cap)?
    } else {
        let path = args.tree.as_ref().ok_or_else(|| {
            Error::Precondition("provide --tree FILE or --optimize".into())
        })?;
        let tree_file: io::TreeFile = serde_json::from_value(read_json(path)?)?;
        let mut tree = io::tree_from_file(&tree_file);
        if let Some(root) = args.root {
            tree.root = VertexId(root);
        }
        let c = theorem2_constants(&g, &tree)?;
        (tree, c)
    };
    let mut payload = constants_json(&constants, &tree);
    if let Some(BoundsEval::Eval { c }) = &args.eval {
        let value = constants.bound(*c);
        payload["bound"] = json!({ "c": c, "value": value.to_string() });
    }
    Ok((Status::Pass, payload))
}

fn selftest() -> Result<(Status, Value), Error> {
    let results = plumknot::acceptance::run_all();
    let passed = results.iter().filter(|r| r.passed).count();
    let payload = json!({
        "criteria": results
            .iter()
            .map(|r| {
                json!({
                    "id": r.id,
                    "name": r.name,
                    "status": r.status(),
                    "details": r.details,
                    "millis": r.millis as u64,
                })
            })
            .collect::<Vec<_>>(),
        "passed": passed,
        "failed": results.len() - passed,
    });
    let status = if passed == results.len() { Status::Pass } else { Status::Fail };
    Ok((status, payload))
}
