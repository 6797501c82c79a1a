//! Graphviz output.

use std::fmt::Write as _;

use crate::graph::Graph;
use crate::partial_cube::ThetaPartition;
use crate::plane::PlaneGraph;
use crate::tau::TauGraph;

const PALETTE: [&str; 12] = [
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
    "#393b79", "#637939",
];

pub fn class_color(c: usize) -> &'static str {
    PALETTE[c % PALETTE.len()]
}

#[derive(Debug, Clone, Copy, Default)]
pub struct DotOptions<'a> {
    /// Colors each edge by its Θ-class and labels it with the class index.
    pub theta: Option<&'a ThetaPartition>,
    /// Draws the τ-graph beside the graph, nodes colored like their class.
    pub tau: Option<&'a TauGraph>,
    /// Vertex labels; identifiers are used when absent.
    pub labels: Option<&'a [String]>,
}

pub fn graph_dot(g: &Graph, opts: &DotOptions) -> String {
    let mut out = String::from("graph G {\n  node [shape=circle, fontsize=10];\n");
    write_body(&mut out, g, opts, None);
    if let Some(tau) = opts.tau {
        write_tau(&mut out, tau);
    }
    out.push_str("}\n");
    out
}

fn write_body(out: &mut String, g: &Graph, opts: &DotOptions, coords: Option<&[[f64; 2]]>) {
    for v in 0..g.vertex_count() {
        let label = opts.labels.and_then(|l| l.get(v)).cloned().unwrap_or_else(|| v.to_string());
        let _ = write!(out, "  {v} [label=\"{label}\"");
        if let Some(c) = coords {
            let _ = write!(out, ", pos=\"{:.3},{:.3}!\"", c[v][0], c[v][1]);
        }
        out.push_str("];\n");
    }
    for e in g.edges() {
        match opts.theta.and_then(|t| t.class_of(e)) {
            Some(c) => {
                let _ = writeln!(out, "  {} -- {} [color=\"{}\", label=\"{c}\"];", e.0, e.1, class_color(c));
            }
            None => {
                let _ = writeln!(out, "  {} -- {};", e.0, e.1);
            }
        }
    }
}

fn write_tau(out: &mut String, tau: &TauGraph) {
    out.push_str("  subgraph cluster_tau {\n    label=\"tau\";\n");
    for c in 0..tau.graph.vertex_count() {
        let _ = writeln!(out, "    t{c} [label=\"E{c}\", shape=box, color=\"{}\"];", class_color(c));
    }
    for e in tau.graph.edges() {
        let _ = writeln!(out, "    t{} -- t{} [style=dashed];", e.0, e.1);
    }
    out.push_str("  }\n");
}

/// Plane graph with coordinates pinned when known and one note per face
/// listing its boundary walk.
pub fn plane_dot(pg: &PlaneGraph, opts: &DotOptions) -> String {
    let mut out = String::from("graph G {\n  node [shape=circle, fontsize=10];\n");
    write_body(&mut out, pg.graph(), opts, pg.coords());
    let faces = pg.faces();
    for (i, f) in faces.faces.iter().enumerate() {
        let kind = if faces.is_outer(i) { "outer" } else { "finite" };
        let walk: Vec<String> = f.walk.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "  face{i} [shape=note, fontsize=8, label=\"{kind} face {i}: {}\"];", walk.join(" "));
    }
    if let Some(tau) = opts.tau {
        write_tau(&mut out, tau);
    }
    out.push_str("}\n");
    out
}
