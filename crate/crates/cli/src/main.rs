use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use cube_forge::daisy::{
    daisy_from_generators, enumerate_daisy_cubes, fibonacci_cube, hypercube, is_daisy_cube, lucas_cube, simplex_graph,
    LabeledGraph,
};
use cube_forge::dot::{graph_dot, plane_dot, DotOptions};
use cube_forge::graph::GraphRecord;
use cube_forge::iso::{daisy_isomorphic_via_tau, graphs_isomorphic};
use cube_forge::labels::Bits;
use cube_forge::partial_cube::{
    contract, halfspaces, is_median, is_partial_cube, peripheral_expansion, theta_classes, PartialCubeCert,
};
use cube_forge::plane::{
    fibonaccene, inner_dual, is_peripherally_2_colorable, realize_resonance, resonance_graph_with_budget, PlaneGraph,
    MAX_MATCHINGS,
};
use cube_forge::tau::tau_graph;
use cube_forge::verify::{parse_suites, verify, VerifyOptions};
use cube_forge::{Error, Graph};

const BUDGET_VAR: &str = "CUBE_FORGE_BUDGET";

#[derive(Parser)]
#[command(name = "cube-forge", version, about = "Partial cubes, daisy cubes, tau-graphs and resonance graphs")]
struct Cli {
    /// Seed for randomized search orders.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Hypercube,
    Fibonacci,
    Lucas,
    Path,
    Cycle,
    Complete,
    /// Zigzag hexagonal chain, written as plane-graph JSON.
    Fibonaccene,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph: `gen hypercube 3`, `gen daisy --strings 110,011`,
    /// `gen simplex --graph g.json`.
    Gen {
        kind: String,
        n: Option<usize>,
        #[arg(long, value_delimiter = ',')]
        strings: Vec<String>,
        #[arg(long)]
        graph: Option<PathBuf>,
    },
    /// Print the Θ-classes, one line per class.
    Theta { graph: PathBuf },
    /// Print τ-graph edges by class index.
    Tau {
        graph: PathBuf,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Halfspaces of a Θ-class as JSON.
    Halfspace {
        graph: PathBuf,
        #[arg(long)]
        class: usize,
        /// Orient by this edge of the class: `u,v`.
        #[arg(long, value_delimiter = ',', num_args = 2)]
        edge: Option<Vec<usize>>,
    },
    /// Contract a Θ-class.
    Contract {
        graph: PathBuf,
        #[arg(long)]
        class: usize,
    },
    /// Peripheral expansion along an isometric subgraph.
    Expand {
        graph: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        subset: Vec<usize>,
    },
    IsPartialCube { graph: PathBuf },
    IsMedian { graph: PathBuf },
    IsDaisy { graph: PathBuf },
    /// Daisy cubes with exactly `k` Θ-classes, as a JSON array.
    Census {
        k: usize,
        /// Also write one DOT file per member into this directory.
        #[arg(long)]
        dot_dir: Option<PathBuf>,
    },
    Iso {
        a: PathBuf,
        b: PathBuf,
        /// Decide through the τ-forests (daisy cubes only).
        #[arg(long)]
        via_tau: bool,
    },
    /// Resonance graph of a plane bipartite graph.
    Resonance { plane: PathBuf },
    InnerDual { plane: PathBuf },
    IsP2c { plane: PathBuf },
    /// Plane bipartite graph whose resonance graph is the given daisy cube.
    Realize { graph: PathBuf },
    /// Run property suites: `all` or a comma-separated list.
    Verify {
        #[arg(default_value = "all")]
        suites: String,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        trees: Option<usize>,
        /// Print the report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Convert graph, plane-graph or census JSON to DOT.
    Dot {
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Overlay the τ-graph.
        #[arg(long)]
        tau: bool,
    },
}

enum Failure {
    Input(String),
    Budget(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded(_) => Failure::Budget(e.to_string()),
            Error::Internal(_) => Failure::Internal(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

type Outcome = Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(&cli) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(Failure::Input(m)) => {
            eprintln!("error: {m}");
            2
        }
        Err(Failure::Budget(m)) => {
            eprintln!("error: {m}");
            3
        }
        Err(Failure::Internal(m)) => {
            eprintln!("error: {m}");
            4
        }
    };
    ExitCode::from(code)
}

fn budget() -> Result<usize, Failure> {
    match std::env::var(BUDGET_VAR) {
        Ok(s) => s.trim().parse().map_err(|_| Failure::Input(format!("{BUDGET_VAR} must be a positive integer, got {s:?}"))),
        Err(_) => Ok(MAX_MATCHINGS),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn read_record(path: &Path) -> Result<GraphRecord, Failure> {
    serde_json::from_str(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    Ok(read_record(path)?.to_graph()?)
}

fn read_plane(path: &Path) -> Result<PlaneGraph, Failure> {
    Ok(PlaneGraph::from_json(&read(path)?)?)
}

fn certify(g: &Graph) -> Result<PartialCubeCert, Failure> {
    is_partial_cube(g).ok_or_else(|| Error::NotPartialCube.into())
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string(v).expect("output serializes"));
}

fn verdict(b: bool) -> Outcome {
    println!("{b}");
    Ok(b)
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Gen { kind, n, strings, graph } => gen(kind, *n, strings, graph.as_deref()),
        Command::Theta { graph } => {
            let g = read_graph(graph)?;
            for (c, edges) in theta_classes(&g)?.classes().iter().enumerate() {
                let list: Vec<String> = edges.iter().map(|e| format!("{}-{}", e.0, e.1)).collect();
                println!("{c}: {}", list.join(" "));
            }
            Ok(true)
        }
        Command::Tau { graph, dot } => {
            let g = read_graph(graph)?;
            let cert = certify(&g)?;
            let tau = tau_graph(&g, &cert);
            println!("classes: {}", tau.graph.vertex_count());
            for e in tau.graph.edges() {
                println!("{} {}", e.0, e.1);
            }
            if let Some(path) = dot {
                write(path, &graph_dot(&tau.graph, &DotOptions::default()))?;
            }
            Ok(true)
        }
        Command::Halfspace { graph, class, edge } => {
            let g = read_graph(graph)?;
            let cert = certify(&g)?;
            let oriented = edge.as_ref().map(|e| (e[0], e[1]));
            let hs = halfspaces(&g, &cert, *class, oriented)?;
            print_json(&json!({
                "a": hs.a, "b": hs.b, "w_ab": hs.w_ab, "w_ba": hs.w_ba, "u_ab": hs.u_ab, "u_ba": hs.u_ba,
                "peripheral": hs.is_peripheral(),
            }));
            Ok(true)
        }
        Command::Contract { graph, class } => {
            let g = read_graph(graph)?;
            let q = contract(&g, &certify(&g)?, *class)?;
            print_json(&json!({ "n": q.graph.vertex_count(), "edges": q.graph.edge_list(), "projection": q.projection }));
            Ok(true)
        }
        Command::Expand { graph, subset } => {
            let g = read_graph(graph)?;
            let x = peripheral_expansion(&g, subset)?;
            print_json(&json!(x.graph.to_record()));
            Ok(true)
        }
        Command::IsPartialCube { graph } => verdict(is_partial_cube(&read_graph(graph)?).is_some()),
        Command::IsMedian { graph } => {
            let g = read_graph(graph)?;
            verdict(g.is_connected() && is_median(&g)?)
        }
        Command::IsDaisy { graph } => verdict(is_daisy_cube(&read_graph(graph)?).is_some()),
        Command::Census { k, dot_dir } => census(*k, dot_dir.as_deref()),
        Command::Iso { a, b, via_tau } => iso(&read_graph(a)?, &read_graph(b)?, *via_tau),
        Command::Resonance { plane } => {
            let r = resonance_graph_with_budget(&read_plane(plane)?, budget()?)?;
            let matchings: Vec<_> = r.matchings.iter().map(|m| m.edges().to_vec()).collect();
            print_json(&json!({ "n": r.graph.vertex_count(), "edges": r.graph.edge_list(), "matchings": matchings }));
            Ok(true)
        }
        Command::InnerDual { plane } => {
            print_json(&json!(inner_dual(&read_plane(plane)?).to_record()));
            Ok(true)
        }
        Command::IsP2c { plane } => verdict(is_peripherally_2_colorable(&read_plane(plane)?)),
        Command::Realize { graph } => {
            let h = read_graph(graph)?;
            let cert = is_daisy_cube(&h).ok_or(Error::NotDaisyCube)?;
            println!("{}", realize_resonance(&h, &cert, cli.seed)?.to_json());
            Ok(true)
        }
        Command::Verify { suites, k, n, trees, json } => {
            let defaults = VerifyOptions::default();
            let opts = VerifyOptions {
                k: k.unwrap_or(defaults.k),
                n: n.unwrap_or(defaults.n),
                trees: trees.unwrap_or(defaults.trees),
                seed: cli.seed,
            };
            let report = verify(&parse_suites(suites)?, &opts)?;
            if *json {
                print_json(&json!(report));
            } else {
                print!("{}", report.render());
            }
            Ok(report.passed())
        }
        Command::Dot { input, output, tau } => dot(input, output.as_deref(), *tau),
    }
}

fn gen(kind: &str, n: Option<usize>, strings: &[String], graph: Option<&Path>) -> Outcome {
    let need_n = || n.ok_or_else(|| Failure::Input(format!("gen {kind} needs an order")));
    let labeled: LabeledGraph = match kind {
        "daisy" => {
            if strings.is_empty() {
                return Err(Failure::Input("gen daisy needs --strings".into()));
            }
            let gens = strings.iter().map(|s| s.parse::<Bits>()).collect::<Result<Vec<_>, _>>()?;
            daisy_from_generators(gens[0].width(), &gens)?
        }
        "simplex" => {
            let path = graph.ok_or_else(|| Failure::Input("gen simplex needs --graph".into()))?;
            simplex_graph(&read_graph(path)?)?
        }
        other => {
            let family = Family::from_str(other, true).map_err(|_| Failure::Input(format!("unknown family {other:?}")))?;
            let n = need_n()?;
            match family {
                Family::Hypercube => hypercube(n)?,
                Family::Fibonacci => fibonacci_cube(n)?,
                Family::Lucas => lucas_cube(n)?,
                Family::Fibonaccene => {
                    println!("{}", fibonaccene(n)?.to_json());
                    return Ok(true);
                }
                Family::Path | Family::Cycle | Family::Complete => {
                    let g = match family {
                        Family::Path => Graph::path(n),
                        Family::Cycle => Graph::cycle(n),
                        _ => Graph::complete(n),
                    };
                    print_json(&json!(g.to_record()));
                    return Ok(true);
                }
            }
        }
    };
    print_json(&json!(labeled.to_record()));
    Ok(true)
}

fn census(k: usize, dot_dir: Option<&Path>) -> Outcome {
    let members = enumerate_daisy_cubes(k)?;
    let mut out = Vec::new();
    for (i, a) in members.iter().enumerate() {
        let cert = is_daisy_cube(&a.graph).ok_or_else(|| Failure::Internal("census member is not a daisy cube".into()))?;
        let tau = tau_graph(&a.graph, &cert.cert);
        let mut rec = serde_json::to_value(a.to_record()).expect("record serializes");
        rec["tau"] = json!({ "edges": tau.graph.edge_list(), "forest": tau.is_forest() });
        out.push(rec);
        if let Some(dir) = dot_dir {
            fs::create_dir_all(dir).map_err(|e| Failure::Input(format!("{}: {e}", dir.display())))?;
            let labels = a.labeling.to_strings();
            let opts = DotOptions { theta: Some(&cert.cert.theta), tau: Some(&tau), labels: Some(&labels) };
            write(&dir.join(format!("daisy_k{k}_{i:03}.dot")), &graph_dot(&a.graph, &opts))?;
        }
    }
    print_json(&json!(out));
    Ok(true)
}

fn iso(a: &Graph, b: &Graph, via_tau: bool) -> Outcome {
    let map = if via_tau {
        let v = daisy_isomorphic_via_tau(a, b)?;
        if let Some(ups) = &v.correspondence {
            eprintln!("class correspondence: {:?}", ups.as_slice());
        }
        v.lambda
    } else {
        graphs_isomorphic(a, b)?
    };
    match map {
        Some(m) => {
            println!("isomorphic");
            let obj: serde_json::Map<String, Value> = m.iter().enumerate().map(|(u, &v)| (u.to_string(), json!(v))).collect();
            print_json(&Value::Object(obj));
            Ok(true)
        }
        None => {
            println!("not isomorphic");
            Ok(false)
        }
    }
}

fn dot(input: &Path, output: Option<&Path>, with_tau: bool) -> Outcome {
    let text = read(input)?;
    let value: Value = serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{}: {e}", input.display())))?;
    if let Value::Array(items) = value {
        let dir = output.ok_or_else(|| Failure::Input("a census array needs --output <dir>".into()))?;
        fs::create_dir_all(dir).map_err(|e| Failure::Input(format!("{}: {e}", dir.display())))?;
        for (i, item) in items.into_iter().enumerate() {
            let rec: GraphRecord = serde_json::from_value(item).map_err(|e| Failure::Input(format!("item {i}: {e}")))?;
            write(&dir.join(format!("graph_{i:03}.dot")), &render_graph(&rec, with_tau)?)?;
        }
        return Ok(true);
    }
    let rendered = if value.get("rotations").is_some() {
        let pg = PlaneGraph::from_json(&text)?;
        let cert = is_partial_cube(pg.graph());
        let tau = match (&cert, with_tau) {
            (Some(c), true) => Some(tau_graph(pg.graph(), c)),
            _ => None,
        };
        plane_dot(&pg, &DotOptions { theta: cert.as_ref().map(|c| &c.theta), tau: tau.as_ref(), labels: None })
    } else {
        let rec: GraphRecord = serde_json::from_value(value).map_err(|e| Failure::Input(format!("{}: {e}", input.display())))?;
        render_graph(&rec, with_tau)?
    };
    match output {
        Some(path) => write(path, &rendered)?,
        None => print!("{rendered}"),
    }
    Ok(true)
}

/// Θ-classes are colored when the graph is a partial cube.
fn render_graph(rec: &GraphRecord, with_tau: bool) -> Result<String, Failure> {
    let g = rec.to_graph()?;
    let cert = is_partial_cube(&g);
    let tau = match (&cert, with_tau) {
        (Some(c), true) => Some(tau_graph(&g, c)),
        (None, true) => return Err(Error::NotPartialCube.into()),
        _ => None,
    };
    let opts = DotOptions { theta: cert.as_ref().map(|c| &c.theta), tau: tau.as_ref(), labels: rec.labels.as_deref() };
    Ok(graph_dot(&g, &opts))
}
