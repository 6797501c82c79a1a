//! τ-graphs: Θ-classes of a partial cube, adjacent when some convex 2-path
//! has one edge in each.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::partial_cube::{contract, is_partial_cube, PartialCubeCert};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TauGraph {
    /// Vertex `i` is Θ-class `i` of the source certificate.
    pub graph: Graph,
    pub source_classes: Vec<Vec<Edge>>,
}

impl TauGraph {
    pub fn is_forest(&self) -> bool {
        self.graph.is_forest()
    }

    pub fn is_edgeless(&self) -> bool {
        self.graph.edge_count() == 0
    }
}

/// `u-v-w` is convex: `u` and `w` are not adjacent and `v` is their only
/// common neighbor.
pub fn is_convex_p3(g: &Graph, u: usize, v: usize, w: usize) -> Result<bool> {
    for (x, y) in [(u, v), (v, w)] {
        if !g.has_edge(x, y) {
            return Err(Error::NotAnEdge(format!("{x}-{y}")));
        }
    }
    if u == w {
        return Err(Error::InvalidArgument("path endpoints coincide".into()));
    }
    Ok(convex_unchecked(g, u, v, w))
}

fn convex_unchecked(g: &Graph, u: usize, v: usize, w: usize) -> bool {
    if g.has_edge(u, w) {
        return false;
    }
    g.neighbors(u).iter().all(|&x| x == v || !g.has_edge(x, w))
}

pub fn tau_graph(g: &Graph, cert: &PartialCubeCert) -> TauGraph {
    let theta = &cert.theta;
    let k = theta.len();
    let mut adjacent: BTreeSet<(usize, usize)> = BTreeSet::new();
    for v in 0..g.vertex_count() {
        let nbrs = g.neighbors(v);
        for (i, &u) in nbrs.iter().enumerate() {
            let cu = theta.class_of(Edge::new(u, v)).expect("edge has a class");
            for &w in &nbrs[i + 1..] {
                let cw = theta.class_of(Edge::new(v, w)).expect("edge has a class");
                let pair = (cu.min(cw), cu.max(cw));
                if cu == cw || adjacent.contains(&pair) {
                    continue;
                }
                if convex_unchecked(g, u, v, w) {
                    adjacent.insert(pair);
                }
            }
        }
    }
    let edges: Vec<(usize, usize)> = adjacent.into_iter().collect();
    TauGraph {
        graph: Graph::new(k, &edges).expect("class indices in range"),
        source_classes: theta.classes().to_vec(),
    }
}

/// Certifies `g` and returns its τ-graph.
pub fn tau_of(g: &Graph) -> Result<TauGraph> {
    let cert = is_partial_cube(g).ok_or(Error::NotPartialCube)?;
    Ok(tau_graph(g, &cert))
}

/// Whether `τ(G □ H)` is isomorphic to `τ(G) ⊔ τ(H)`.
pub fn tau_of_product_check(g: &Graph, h: &Graph) -> Result<bool> {
    let tg = tau_of(g)?;
    let th = tau_of(h)?;
    let tp = tau_of(&g.cartesian_product(h)?)?;
    let union = Graph::disjoint_union(&[&tg.graph, &th.graph]);
    Ok(crate::iso::graphs_isomorphic(&tp.graph, &union)?.is_some())
}

/// τ of the contraction `G/ℰ_class`, with each surviving class of the
/// quotient named by the index of the class of `G` it came from. Edges are
/// sorted pairs of those indices.
pub fn tau_after_contraction(g: &Graph, cert: &PartialCubeCert, class: usize) -> Result<BTreeSet<(usize, usize)>> {
    let q = contract(g, cert, class)?;
    let qcert = is_partial_cube(&q.graph).ok_or_else(|| Error::Internal("contraction is not a partial cube".into()))?;
    let pushed: HashMap<Edge, usize> = q.pushed_classes(g, &cert.theta)?;
    let mut name = vec![usize::MAX; qcert.theta.len()];
    for (c, edges) in qcert.theta.classes().iter().enumerate() {
        for e in edges {
            let orig = pushed[e];
            if name[c] != usize::MAX && name[c] != orig {
                return Err(Error::Internal("quotient class mixes original classes".into()));
            }
            name[c] = orig;
        }
    }
    let t = tau_graph(&q.graph, &qcert);
    Ok(t.graph.edges().map(|e| (name[e.0].min(name[e.1]), name[e.0].max(name[e.1]))).collect())
}

/// τ(G) with vertex `class` deleted, as sorted pairs of original indices.
pub fn tau_without(tau: &TauGraph, class: usize) -> BTreeSet<(usize, usize)> {
    tau.graph.edges().filter(|e| !e.touches(class)).map(|e| (e.0, e.1)).collect()
}
