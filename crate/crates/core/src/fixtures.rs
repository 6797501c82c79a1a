//! Named example graphs, including the ones located by small searches.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use crate::daisy::{daisy_from_generators, enumerate_daisy_cubes, is_daisy_cube, lucas_cube, LabeledGraph};
use crate::error::Result;
use crate::graph::Graph;
use crate::iso::{forest_canonical, graphs_isomorphic, ForestCode};
use crate::labels::Bits;
use crate::plane::{is_weakly_elementary, perfect_matchings, PlaneGraph};
use crate::tau::{tau_after_contraction, tau_graph, tau_without};

/// `Q_3` minus one vertex, generated by `110, 101, 011`.
pub fn q3_minus() -> LabeledGraph {
    let gens: Vec<Bits> = [0b011, 0b101, 0b110].iter().map(|&m| Bits::from_mask(3, m)).collect();
    daisy_from_generators(3, &gens).expect("three generators of width 3")
}

/// Three pairwise non-isomorphic partial cubes sharing the τ-graph `K_3`:
/// `C_6`, `Λ_3 = K_{1,3}` and `Q_3^-`.
pub fn triangle_tau_trio() -> [(&'static str, Graph); 3] {
    [
        ("C6", Graph::cycle(6)),
        ("L3", lucas_cube(3).expect("small lucas cube").graph),
        ("Q3-", q3_minus().graph),
    ]
}

fn ring(n: usize, radius: f64, phase: f64) -> impl Iterator<Item = [f64; 2]> {
    (0..n).map(move |i| {
        let a = phase + 2.0 * PI * i as f64 / n as f64;
        [radius * a.cos(), radius * a.sin()]
    })
}

pub fn hexagon() -> PlaneGraph {
    PlaneGraph::from_coords(&Graph::cycle(6), ring(6, 1.0, 0.0).collect()).expect("hexagon is plane")
}

/// Two unit squares side by side, joined by one edge.
pub fn two_squares_bridge() -> PlaneGraph {
    let g = Graph::new(8, &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4), (1, 4)]).unwrap();
    let coords = vec![[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0], [2.0, 0.0], [3.0, 0.0], [3.0, 1.0], [2.0, 1.0]];
    PlaneGraph::from_coords(&g, coords).expect("drawing is plane")
}

fn cross(o: [f64; 2], a: [f64; 2], b: [f64; 2]) -> f64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

fn drawing_is_plane(g: &Graph, coords: &[[f64; 2]]) -> bool {
    let edges = g.edge_list();
    for (i, e) in edges.iter().enumerate() {
        for f in &edges[i + 1..] {
            if e.touches(f.0) || e.touches(f.1) {
                continue;
            }
            let (p, q, r, s) = (coords[e.0], coords[e.1], coords[f.0], coords[f.1]);
            let d1 = cross(p, q, r);
            let d2 = cross(p, q, s);
            let d3 = cross(r, s, p);
            let d4 = cross(r, s, q);
            if d1 * d2 < 0.0 && d3 * d4 < 0.0 {
                return false;
            }
        }
    }
    true
}

/// First plane bipartite graph with a perfect matching that is not weakly
/// elementary, among an even cycle drawn around a smaller one with up to
/// two straight spokes between them (at most 12 vertices in all).
pub fn non_weakly_elementary() -> Result<Option<PlaneGraph>> {
    for outer in [4, 6, 8] {
        for inner in [4, 6] {
            if inner >= outer + 2 || outer + inner > 12 {
                continue;
            }
            let n = outer + inner;
            let mut base: Vec<(usize, usize)> = (0..outer).map(|i| (i, (i + 1) % outer)).collect();
            base.extend((0..inner).map(|i| (outer + i, outer + (i + 1) % inner)));
            let mut coords: Vec<[f64; 2]> = ring(outer, 3.0, 0.0).collect();
            coords.extend(ring(inner, 1.0, PI / inner as f64));
            let spokes: Vec<(usize, usize)> = (0..outer).flat_map(|i| (outer..n).map(move |j| (i, j))).collect();
            for (k, &s) in spokes.iter().enumerate() {
                for &t in &spokes[k + 1..] {
                    if s.0 == t.0 || s.1 == t.1 {
                        continue;
                    }
                    let mut edges = base.clone();
                    edges.extend([s, t]);
                    let g = Graph::new(n, &edges)?;
                    if !g.is_bipartite() || !drawing_is_plane(&g, &coords) || perfect_matchings(&g)?.is_empty() {
                        continue;
                    }
                    let pg = PlaneGraph::from_coords(&g, coords.clone())?;
                    if !is_weakly_elementary(&pg)? {
                        return Ok(Some(pg));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// A daisy cube and Θ-class whose contraction has a τ-graph differing from
/// `τ(A) - ℰ` with class indices kept. Searched over the census in order of
/// class count.
pub fn contraction_tau_mismatch(max_classes: usize) -> Result<Option<(LabeledGraph, usize)>> {
    for k in 1..=max_classes {
        for a in enumerate_daisy_cubes(k)? {
            let cert = is_daisy_cube(&a.graph).expect("census member is a daisy cube").cert;
            let tau = tau_graph(&a.graph, &cert);
            for class in 0..k {
                if tau_after_contraction(&a.graph, &cert, class)? != tau_without(&tau, class) {
                    return Ok(Some((a, class)));
                }
            }
        }
    }
    Ok(None)
}

/// Census members with `k` classes whose τ-graph is complete, with one
/// representative per isomorphism type (the census is already reduced).
pub fn complete_tau_members(k: usize) -> Result<Vec<LabeledGraph>> {
    let kk = Graph::complete(k);
    let mut out = Vec::new();
    for a in enumerate_daisy_cubes(k)? {
        let cert = is_daisy_cube(&a.graph).expect("census member is a daisy cube").cert;
        if graphs_isomorphic(&tau_graph(&a.graph, &cert).graph, &kk)?.is_some() {
            out.push(a);
        }
    }
    Ok(out)
}

/// Trees on exactly `n` vertices, one per isomorphism type, grown leaf by
/// leaf and deduplicated by canonical code. Ordered by code.
pub fn trees(n: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut level: BTreeMap<ForestCode, Graph> = BTreeMap::new();
    level.insert(forest_canonical(&Graph::empty(1))?, Graph::empty(1));
    for m in 1..n {
        let mut next = BTreeMap::new();
        for t in level.values() {
            for v in 0..m {
                let mut edges: Vec<(usize, usize)> = t.edges().map(|e| (e.0, e.1)).collect();
                edges.push((v, m));
                let grown = Graph::new(m + 1, &edges)?;
                next.entry(forest_canonical(&grown)?).or_insert(grown);
            }
        }
        level = next;
    }
    Ok(level.into_values().collect())
}
