//! Djoković–Winkler relation, Θ-classes, halfspaces, and the
//! expansion/contraction operations on partial cubes.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Edge, Graph};
use crate::labels::{BinaryLabeling, Bits};

/// Θ-classes of a connected graph, numbered by their smallest edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaPartition {
    edges: Vec<Edge>,
    class_of: Vec<usize>,
    classes: Vec<Vec<Edge>>,
    transitive: bool,
}

impl ThetaPartition {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[Vec<Edge>] {
        &self.classes
    }

    pub fn class(&self, c: usize) -> &[Edge] {
        &self.classes[c]
    }

    /// Class index of `e`, if `e` is an edge.
    pub fn class_of(&self, e: Edge) -> Option<usize> {
        self.edges.binary_search(&e).ok().map(|i| self.class_of[i])
    }

    /// Whether the raw relation was already transitive.
    pub fn is_transitive(&self) -> bool {
        self.transitive
    }
}

/// `e Θ f` iff `d(x1,y1) + d(x2,y2) != d(x1,y2) + d(x2,y1)`.
pub fn theta_related(graph: &Graph, dist: &DistanceMatrix, e: Edge, f: Edge) -> Result<bool> {
    for x in [e, f] {
        if !graph.has_edge(x.0, x.1) {
            return Err(Error::NotAnEdge(x.to_string()));
        }
    }
    if dist.get(e.0, f.0).is_none() {
        return Err(Error::Disconnected);
    }
    let verdict = related(dist, e, f);
    debug_assert_eq!(verdict, related(dist, e, Edge(f.1, f.0)));
    Ok(verdict)
}

fn related(d: &DistanceMatrix, e: Edge, f: Edge) -> bool {
    d.hop(e.0, f.0) + d.hop(e.1, f.1) != d.hop(e.0, f.1) + d.hop(e.1, f.0)
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut x = x;
        while self.0[x] != r {
            x = std::mem::replace(&mut self.0[x], r);
        }
        r
    }

    /// Keeps the smaller root.
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.0[hi] = lo;
        }
    }
}

/// Θ* classes (transitive closure of Θ) of a connected graph.
pub fn theta_classes(graph: &Graph) -> Result<ThetaPartition> {
    if !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    let dist = graph.distances();
    theta_classes_with(graph, &dist)
}

pub(crate) fn theta_classes_with(graph: &Graph, dist: &DistanceMatrix) -> Result<ThetaPartition> {
    let edges = graph.edge_list();
    let m = edges.len();
    let mut uf = UnionFind::new(m);
    let mut related_pairs = 0usize;
    for i in 0..m {
        for j in i + 1..m {
            if related(dist, edges[i], edges[j]) {
                uf.union(i, j);
                related_pairs += 1;
            }
        }
    }
    // Roots are the smallest member, and edges are sorted, so numbering
    // classes by first appearance orders them by smallest edge.
    let mut index_of_root = HashMap::new();
    let mut class_of = vec![0; m];
    let mut classes: Vec<Vec<Edge>> = Vec::new();
    for i in 0..m {
        let r = uf.find(i);
        let c = *index_of_root.entry(r).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        class_of[i] = c;
        classes[c].push(edges[i]);
    }
    let closure_pairs: usize = classes.iter().map(|c| c.len() * (c.len() - 1) / 2).sum();
    let transitive = closure_pairs == related_pairs;
    Ok(ThetaPartition { edges, class_of, classes, transitive })
}

/// Θ-partition plus a binary labeling witnessing an isometric embedding
/// into the hypercube of dimension `theta.len()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialCubeCert {
    pub theta: ThetaPartition,
    pub labeling: BinaryLabeling,
    pub base: usize,
}

impl PartialCubeCert {
    /// Same certificate with `root` labeled all-zeros.
    pub fn rebase(&self, root: usize) -> PartialCubeCert {
        let shift = self.labeling.label(root).clone();
        let labels = self.labeling.labels().iter().map(|b| b.xor(&shift)).collect();
        PartialCubeCert {
            theta: self.theta.clone(),
            labeling: BinaryLabeling::new(self.labeling.width(), labels).expect("xor keeps labels distinct"),
            base: root,
        }
    }

    /// Re-checks the isometry witness: Hamming distance equals graph
    /// distance for all pairs, and every edge flips exactly its own class.
    pub fn verify(&self, graph: &Graph) -> bool {
        let dist = graph.distances();
        let n = graph.vertex_count();
        if self.labeling.len() != n || self.labeling.width() != self.theta.len() {
            return false;
        }
        let lab = self.labeling.labels();
        for u in 0..n {
            for v in u + 1..n {
                match dist.get(u, v) {
                    Some(d) if d as usize == lab[u].hamming(&lab[v]) => {}
                    _ => return false,
                }
            }
        }
        graph.edges().all(|e| {
            let c = self.theta.class_of(e).expect("edge has a class");
            let diff = lab[e.0].xor(&lab[e.1]);
            diff.count_ones() == 1 && diff.get(c)
        })
    }

    pub fn class_count(&self) -> usize {
        self.theta.len()
    }
}

/// Certificate iff the graph is a partial cube.
///
/// The labeling is the Θ*-coordinate labeling based at vertex 0; the
/// verdict is decided by a full Hamming-versus-distance check.
pub fn is_partial_cube(graph: &Graph) -> Option<PartialCubeCert> {
    let n = graph.vertex_count();
    if n == 0 || !graph.is_connected() || !graph.is_bipartite() {
        return None;
    }
    let dist = graph.distances();
    let theta = theta_classes_with(graph, &dist).ok()?;
    let base = 0;
    let width = theta.len();
    let side = |w: usize, e: Edge| dist.hop(w, e.0) > dist.hop(w, e.1);
    let labels: Vec<Bits> = (0..n)
        .map(|w| {
            let mut b = Bits::zeros(width);
            for (c, class) in theta.classes().iter().enumerate() {
                let rep = class[0];
                b.set(c, side(w, rep) != side(base, rep));
            }
            b
        })
        .collect();
    let labeling = BinaryLabeling::new(width, labels).ok()?;
    let cert = PartialCubeCert { theta, labeling, base };
    cert.verify(graph).then_some(cert)
}

/// The four vertex sets attached to an oriented edge `ab` of a Θ-class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Halfspaces {
    pub a: usize,
    pub b: usize,
    pub w_ab: Vec<usize>,
    pub w_ba: Vec<usize>,
    pub u_ab: Vec<usize>,
    pub u_ba: Vec<usize>,
}

impl Halfspaces {
    pub fn is_peripheral(&self) -> bool {
        self.w_ab == self.u_ab || self.w_ba == self.u_ba
    }
}

/// Halfspaces of `class`. Without an explicit orientation the first edge
/// of the class is used and `W_ab` is the side holding the base vertex.
pub fn halfspaces(
    graph: &Graph,
    cert: &PartialCubeCert,
    class: usize,
    oriented: Option<(usize, usize)>,
) -> Result<Halfspaces> {
    if class >= cert.theta.len() {
        return Err(Error::NoSuchClass(class));
    }
    let dist = graph.distances();
    let (a, b) = match oriented {
        Some((a, b)) => {
            let e = Edge::new(a, b);
            if cert.theta.class_of(e) != Some(class) {
                return Err(Error::EdgeNotInClass { edge: e.to_string(), class });
            }
            (a, b)
        }
        None => {
            let e = cert.theta.class(class)[0];
            if dist.hop(cert.base, e.0) < dist.hop(cert.base, e.1) {
                (e.0, e.1)
            } else {
                (e.1, e.0)
            }
        }
    };
    let n = graph.vertex_count();
    let w_ab: Vec<usize> = (0..n).filter(|&w| dist.hop(w, a) < dist.hop(w, b)).collect();
    let w_ba: Vec<usize> = (0..n).filter(|&w| dist.hop(w, b) < dist.hop(w, a)).collect();
    let mut in_ab = vec![false; n];
    for &w in &w_ab {
        in_ab[w] = true;
    }
    let u_ab = w_ab.iter().copied().filter(|&u| graph.neighbors(u).iter().any(|&x| !in_ab[x])).collect();
    let u_ba = w_ba.iter().copied().filter(|&u| graph.neighbors(u).iter().any(|&x| in_ab[x])).collect();

    let split = graph.without_edges(cert.theta.class(class)).components();
    if split.len() != 2 || !split.contains(&w_ab) || !split.contains(&w_ba) {
        return Err(Error::Internal(format!("removing class {class} does not split into its halfspaces")));
    }
    Ok(Halfspaces { a, b, w_ab, w_ba, u_ab, u_ba })
}

pub fn is_peripheral(graph: &Graph, cert: &PartialCubeCert, class: usize) -> Result<bool> {
    Ok(halfspaces(graph, cert, class, None)?.is_peripheral())
}

/// Quotient `G/ℰ` with the projection of every original vertex.
#[derive(Debug, Clone)]
pub struct Contraction {
    pub graph: Graph,
    pub projection: Vec<usize>,
}

impl Contraction {
    /// Original Θ-class of each quotient edge.
    pub fn pushed_classes(&self, original: &Graph, theta: &ThetaPartition) -> Result<HashMap<Edge, usize>> {
        let mut out = HashMap::new();
        for e in original.edges() {
            let (p, q) = (self.projection[e.0], self.projection[e.1]);
            if p == q {
                continue;
            }
            let c = theta.class_of(e).expect("edge has a class");
            if let Some(prev) = out.insert(Edge::new(p, q), c) {
                if prev != c {
                    return Err(Error::Internal("quotient edge comes from two classes".into()));
                }
            }
        }
        Ok(out)
    }
}

/// Contracts every edge of `class`. Merged vertices are renumbered in the
/// order of their smallest original identifier.
///
/// For a peripheral class the quotient is checked to be the induced
/// subgraph on the larger halfspace, via the projection.
pub fn contract(graph: &Graph, cert: &PartialCubeCert, class: usize) -> Result<Contraction> {
    if class >= cert.theta.len() {
        return Err(Error::NoSuchClass(class));
    }
    let n = graph.vertex_count();
    let mut uf = UnionFind::new(n);
    for e in cert.theta.class(class) {
        uf.union(e.0, e.1);
    }
    let mut new_id = vec![usize::MAX; n];
    let mut next = 0;
    let mut projection = vec![0; n];
    for v in 0..n {
        let r = uf.find(v);
        if new_id[r] == usize::MAX {
            new_id[r] = next;
            next += 1;
        }
        projection[v] = new_id[r];
    }
    let edges: Vec<(usize, usize)> = graph
        .edges()
        .map(|e| (projection[e.0], projection[e.1]))
        .filter(|(p, q)| p != q)
        .collect();
    let quotient = Graph::new(next, &edges)?;

    let hs = halfspaces(graph, cert, class, None)?;
    if hs.is_peripheral() {
        let big = if hs.w_ab.len() >= hs.w_ba.len() { &hs.w_ab } else { &hs.w_ba };
        let induced = graph.induced_subgraph(big)?;
        let map: Vec<usize> = induced.to_parent.iter().map(|&v| projection[v]).collect();
        if !induced.graph.is_isomorphism(&quotient, &map) {
            return Err(Error::Internal(format!("contraction of peripheral class {class} is not its larger halfspace")));
        }
    }
    Ok(Contraction { graph: quotient, projection })
}

/// Result of a peripheral expansion: the copy of `H0[i]` is vertex
/// `n + i` where `H0` is sorted.
#[derive(Debug, Clone)]
pub struct Expansion {
    pub graph: Graph,
    pub copied: Vec<usize>,
}

/// `pe(H, H0)`: adds a copy of `⟨H0⟩` joined to `H0` by a perfect matching.
pub fn peripheral_expansion(h: &Graph, h0: &[usize]) -> Result<Expansion> {
    let n = h.vertex_count();
    let sub = h.induced_subgraph(h0)?;
    if sub.to_parent.is_empty() {
        return Err(Error::InvalidArgument("expansion subgraph is empty".into()));
    }
    if !is_isometric(h, &sub)? {
        return Err(Error::NotIsometric);
    }
    let mut edges: Vec<(usize, usize)> = h.edges().map(|e| (e.0, e.1)).collect();
    for (i, &v) in sub.to_parent.iter().enumerate() {
        edges.push((v, n + i));
    }
    for e in sub.graph.edges() {
        edges.push((n + e.0, n + e.1));
    }
    let graph = Graph::new(n + sub.to_parent.len(), &edges)?;
    Ok(Expansion { graph, copied: sub.to_parent })
}

/// Whether an induced subgraph keeps the distances of its parent.
pub fn is_isometric(parent: &Graph, sub: &crate::graph::Subgraph) -> Result<bool> {
    let outer = parent.distances();
    let inner = sub.graph.distances();
    let k = sub.to_parent.len();
    for i in 0..k {
        for j in i + 1..k {
            if inner.get(i, j) != outer.get(sub.to_parent[i], sub.to_parent[j]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `I(u, v)`: all vertices on shortest `u`-`v` paths.
pub fn interval(graph: &Graph, u: usize, v: usize) -> Result<Vec<usize>> {
    let n = graph.vertex_count();
    for x in [u, v] {
        if x >= n {
            return Err(Error::VertexOutOfRange { vertex: x, n });
        }
    }
    let du = graph.bfs(u);
    let dv = graph.bfs(v);
    let d = du[v].ok_or(Error::DifferentComponents(u, v))?;
    Ok((0..n).filter(|&x| matches!((du[x], dv[x]), (Some(a), Some(b)) if a + b == d)).collect())
}

/// Every triple has exactly one vertex common to its three intervals.
pub fn is_median(graph: &Graph) -> Result<bool> {
    if !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    let d = graph.distances();
    let n = graph.vertex_count();
    let on = |x: usize, u: usize, v: usize| d.hop(u, x) + d.hop(x, v) == d.hop(u, v);
    for u in 0..n {
        for v in u..n {
            for w in v..n {
                let medians = (0..n).filter(|&x| on(x, u, v) && on(x, u, w) && on(x, v, w)).take(2).count();
                if medians != 1 {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
