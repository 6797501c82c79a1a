//! Browser bindings. Every entry point takes plain strings and returns a
//! JSON document ready for drawing, so the same functions run natively in
//! tests.

use std::f64::consts::PI;

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use cube_forge::daisy::{daisy_from_generators, fibonacci_cube, hypercube, is_daisy_cube, lucas_cube, LabeledGraph};
use cube_forge::graph::GraphRecord;
use cube_forge::labels::Bits;
use cube_forge::plane::{inner_dual, realize_resonance, resonance_graph};
use cube_forge::tau::tau_graph;

/// Largest order accepted from the page.
pub const MAX_ORDER: usize = 10;

/// Hypercube projection: coordinate `i` moves a vertex along a unit vector
/// at angle `πi/k`.
fn cube_coords(lg: &LabeledGraph) -> Vec<[f64; 2]> {
    let k = lg.labeling.width().max(1) as f64;
    lg.labeling
        .labels()
        .iter()
        .map(|b| {
            b.ones().fold([0.0, 0.0], |[x, y], i| {
                let a = PI * i as f64 / k;
                [x + a.cos(), y - a.sin()]
            })
        })
        .collect()
}

fn circle(n: usize) -> Vec<[f64; 2]> {
    (0..n)
        .map(|i| {
            let a = 2.0 * PI * i as f64 / n.max(1) as f64 - PI / 2.0;
            [a.cos(), a.sin()]
        })
        .collect()
}

fn describe(lg: &LabeledGraph) -> Result<Value, String> {
    let cert = is_daisy_cube(&lg.graph).ok_or("not a daisy cube")?;
    let tau = tau_graph(&lg.graph, &cert.cert);
    let edges: Vec<Value> = lg
        .graph
        .edges()
        .map(|e| json!([e.0, e.1, cert.cert.theta.class_of(e).expect("edge has a class")]))
        .collect();
    Ok(json!({
        "n": lg.graph.vertex_count(),
        "edges": edges,
        "labels": lg.labeling.to_strings(),
        "coords": cube_coords(lg),
        "graph": lg.to_record(),
        "tau": {
            "k": tau.graph.vertex_count(),
            "edges": tau.graph.edge_list(),
            "forest": tau.is_forest(),
            "tree": tau.graph.is_tree(),
            "coords": circle(tau.graph.vertex_count()),
        },
    }))
}

/// A named cube (`hypercube`, `fibonacci`, `lucas`) with its τ-graph.
pub fn generate_json(kind: &str, n: usize) -> Result<String, String> {
    if n > MAX_ORDER {
        return Err(format!("order is limited to {MAX_ORDER} in the browser"));
    }
    let lg = match kind {
        "hypercube" => hypercube(n),
        "fibonacci" => fibonacci_cube(n),
        "lucas" => lucas_cube(n),
        other => return Err(format!("unknown family {other:?}")),
    }
    .map_err(|e| e.to_string())?;
    Ok(describe(&lg)?.to_string())
}

/// Daisy cube generated by comma or space separated bit strings.
pub fn daisy_json(strings: &str) -> Result<String, String> {
    let gens = strings
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<Bits>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    let width = gens.first().ok_or("enter at least one bit string")?.width();
    if width > MAX_ORDER {
        return Err(format!("strings are limited to {MAX_ORDER} bits in the browser"));
    }
    let lg = daisy_from_generators(width, &gens).map_err(|e| e.to_string())?;
    Ok(describe(&lg)?.to_string())
}

/// Plane bipartite graph realizing a daisy cube (graph JSON) as a
/// resonance graph, or the reason none exists.
pub fn realize_json(graph: &str) -> Result<String, String> {
    let rec: GraphRecord = serde_json::from_str(graph).map_err(|e| e.to_string())?;
    let h = rec.to_graph().map_err(|e| e.to_string())?;
    let cert = is_daisy_cube(&h).ok_or("not a daisy cube")?;
    let pg = realize_resonance(&h, &cert, 0).map_err(|e| e.to_string())?;
    let r = resonance_graph(&pg).map_err(|e| e.to_string())?;
    let faces: Vec<&Vec<usize>> = pg.finite_faces().into_iter().map(|f| &f.walk).collect();
    Ok(json!({
        "n": pg.graph().vertex_count(),
        "edges": pg.graph().edge_list(),
        "coords": pg.coords(),
        "colors": pg.graph().two_coloring().map(|c| c.iter().map(|&x| x == cube_forge::Color::Black).collect::<Vec<_>>()),
        "faces": faces,
        "inner_dual_edges": inner_dual(&pg).edge_list(),
        "matchings": r.matchings.len(),
        "plane": serde_json::from_str::<Value>(&pg.to_json()).expect("plane JSON parses"),
    })
    .to_string())
}

#[wasm_bindgen]
pub fn generate(kind: &str, n: usize) -> Result<String, JsError> {
    generate_json(kind, n).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn daisy(strings: &str) -> Result<String, JsError> {
    daisy_json(strings).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn realize(graph: &str) -> Result<String, JsError> {
    realize_json(graph).map_err(|e| JsError::new(&e))
}
