//! Undirected simple graphs on dense vertex identifiers `0..n`.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An undirected edge, stored with the smaller endpoint first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "[usize; 2]", from = "[usize; 2]")]
pub struct Edge(pub usize, pub usize);

impl Edge {
    pub fn new(u: usize, v: usize) -> Self {
        if u <= v {
            Edge(u, v)
        } else {
            Edge(v, u)
        }
    }

    pub fn other(self, v: usize) -> usize {
        if self.0 == v {
            self.1
        } else {
            self.0
        }
    }

    pub fn touches(self, v: usize) -> bool {
        self.0 == v || self.1 == v
    }
}

impl From<[usize; 2]> for Edge {
    fn from([u, v]: [usize; 2]) -> Self {
        Edge::new(u, v)
    }
}

impl From<Edge> for [usize; 2] {
    fn from(e: Edge) -> Self {
        [e.0, e.1]
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

/// Vertex colour of a proper 2-colouring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Black,
    White,
}

impl Color {
    pub fn flip(self) -> Self {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
        }
    }
}

/// Immutable undirected simple graph with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

/// An induced subgraph together with the maps back to its parent.
#[derive(Debug, Clone)]
pub struct Subgraph {
    pub graph: Graph,
    /// `to_parent[new] = old`
    pub to_parent: Vec<usize>,
    /// `from_parent[old] = Some(new)` for retained vertices.
    pub from_parent: Vec<Option<usize>>,
}

/// All-pairs hop distances. Unreachable pairs read as `None`.
#[derive(Debug, Clone)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

const UNREACHABLE: u32 = u32::MAX;

impl DistanceMatrix {
    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        match self.d[u * self.n + v] {
            UNREACHABLE => None,
            x => Some(x),
        }
    }

    /// Distance between two vertices known to share a component.
    pub(crate) fn hop(&self, u: usize, v: usize) -> u32 {
        let x = self.d[u * self.n + v];
        debug_assert_ne!(x, UNREACHABLE, "hop() across components");
        x
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn row(&self, u: usize) -> impl Iterator<Item = Option<u32>> + '_ {
        self.d[u * self.n..(u + 1) * self.n]
            .iter()
            .map(|&x| (x != UNREACHABLE).then_some(x))
    }

    /// Largest finite entry.
    pub fn max_finite(&self) -> u32 {
        self.d.iter().copied().filter(|&x| x != UNREACHABLE).max().unwrap_or(0)
    }
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs collapse.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj })
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let pairs: Vec<_> = edges.into_iter().map(|e| (e.0, e.1)).collect();
        Self::new(n, &pairs)
    }

    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n] }
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::new(n, &edges).expect("path edges are valid")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::new(n, &edges).expect("cycle edges are valid")
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Self::new(n, &edges).expect("complete graph edges are valid")
    }

    pub fn star(leaves: usize) -> Self {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Self::new(leaves + 1, &edges).expect("star edges are valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| Edge(u, v)))
    }

    pub fn edge_list(&self) -> Vec<Edge> {
        self.edges().collect()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<_> = self.adj.iter().map(Vec::len).collect();
        d.sort_unstable();
        d
    }

    /// Hop distances from `source`; `None` for unreachable vertices.
    pub fn bfs(&self, source: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.adj.len()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distances(&self) -> DistanceMatrix {
        let n = self.adj.len();
        let mut d = vec![UNREACHABLE; n * n];
        for s in 0..n {
            for (t, x) in self.bfs(s).into_iter().enumerate() {
                if let Some(x) = x {
                    d[s * n + t] = x;
                }
            }
        }
        DistanceMatrix { n, d }
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.adj.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut block = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        block.push(w);
                        stack.push(w);
                    }
                }
            }
            block.sort_unstable();
            out.push(block);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// A proper black/white colouring, or `None` if some component has an
    /// odd cycle. The smallest vertex of each component is black.
    pub fn two_coloring(&self) -> Option<Vec<Color>> {
        let n = self.adj.len();
        let mut color: Vec<Option<Color>> = vec![None; n];
        for s in 0..n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(Color::Black);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for &w in &self.adj[u] {
                    match color[w] {
                        None => {
                            color[w] = Some(cu.flip());
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    pub fn complement(&self) -> Graph {
        let n = self.adj.len();
        let adj = (0..n)
            .map(|u| (0..n).filter(|&v| v != u && !self.has_edge(u, v)).collect())
            .collect();
        Graph { adj }
    }

    /// Induced subgraph on `vertices`, renumbered in increasing order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Subgraph> {
        let n = self.adj.len();
        let mut keep: Vec<usize> = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if let Some(&bad) = keep.iter().find(|&&v| v >= n) {
            return Err(Error::VertexOutOfRange { vertex: bad, n });
        }
        let mut from_parent = vec![None; n];
        for (new, &old) in keep.iter().enumerate() {
            from_parent[old] = Some(new);
        }
        let adj = keep
            .iter()
            .map(|&old| self.adj[old].iter().filter_map(|&w| from_parent[w]).collect())
            .collect();
        Ok(Subgraph { graph: Graph { adj }, to_parent: keep, from_parent })
    }

    /// Cartesian product; vertex `(g, h)` gets index `g * |V(H)| + h`.
    pub fn cartesian_product(&self, other: &Graph) -> Result<Graph> {
        let (a, b) = (self.vertex_count(), other.vertex_count());
        if a == 0 || b == 0 {
            return Err(Error::EmptyFactor);
        }
        let mut edges = Vec::new();
        for g in 0..a {
            for h in 0..b {
                for &g2 in self.neighbors(g) {
                    if g < g2 {
                        edges.push((g * b + h, g2 * b + h));
                    }
                }
                for &h2 in other.neighbors(h) {
                    if h < h2 {
                        edges.push((g * b + h, g * b + h2));
                    }
                }
            }
        }
        Graph::new(a * b, &edges)
    }

    /// Vertices adjacent to both `u` and `w`, sorted.
    pub fn common_neighbors(&self, u: usize, w: usize) -> Vec<usize> {
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.adj[u], &self.adj[w]);
        let mut out = Vec::new();
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.components().len() == self.vertex_count()
    }

    pub fn is_tree(&self) -> bool {
        self.vertex_count() > 0 && self.is_forest() && self.is_connected()
    }

    /// Disjoint union; the vertices of `graphs[i]` are shifted by the total
    /// size of the earlier graphs.
    pub fn disjoint_union(graphs: &[&Graph]) -> Graph {
        let mut adj = Vec::new();
        for g in graphs {
            let off = adj.len();
            adj.extend(g.adj.iter().map(|l| l.iter().map(|&w| w + off).collect::<Vec<_>>()));
        }
        Graph { adj }
    }

    /// Image of the graph under the vertex bijection `v -> perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let n = self.adj.len();
        assert_eq!(perm.len(), n);
        let mut adj = vec![Vec::new(); n];
        for u in 0..n {
            adj[perm[u]] = self.adj[u].iter().map(|&w| perm[w]).collect();
            adj[perm[u]].sort_unstable();
        }
        Graph { adj }
    }

    /// Spanning subgraph without the listed edges.
    pub fn without_edges(&self, removed: &[Edge]) -> Graph {
        let mut adj = self.adj.clone();
        for e in removed {
            adj[e.0].retain(|&w| w != e.1);
            adj[e.1].retain(|&w| w != e.0);
        }
        Graph { adj }
    }

    /// Checks that `map` is a bijection `V(self) -> V(other)` preserving
    /// adjacency in both directions.
    pub fn is_isomorphism(&self, other: &Graph, map: &[usize]) -> bool {
        let n = self.vertex_count();
        if other.vertex_count() != n || other.edge_count() != self.edge_count() || map.len() != n {
            return false;
        }
        let mut hit = vec![false; n];
        for &m in map {
            if m >= n || std::mem::replace(&mut hit[m], true) {
                return false;
            }
        }
        self.edges().all(|e| other.has_edge(map[e.0], map[e.1]))
    }

    pub fn to_record(&self) -> GraphRecord {
        GraphRecord { n: self.vertex_count(), edges: self.edge_list(), labels: None }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_record()).expect("graph serializes")
    }

    pub fn from_json(s: &str) -> Result<Graph> {
        let rec: GraphRecord =
            serde_json::from_str(s).map_err(|e| Error::InvalidArgument(format!("graph JSON: {e}")))?;
        rec.to_graph()
    }
}

/// Wire form of a graph: `{"n": 3, "edges": [[0,1],[1,2]]}`.
///
/// `labels` is an optional list of bit strings, one per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphRecord {
    pub n: usize,
    pub edges: Vec<Edge>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl GraphRecord {
    pub fn to_graph(&self) -> Result<Graph> {
        Graph::from_edges(self.n, self.edges.iter().copied())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> Graph {
        Graph::new(3, &[(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn build_rejects_bad_input() {
        assert_eq!(Graph::new(2, &[(0, 2)]), Err(Error::VertexOutOfRange { vertex: 2, n: 2 }));
        assert_eq!(Graph::new(2, &[(1, 1)]), Err(Error::SelfLoop(1)));
        let g = Graph::new(3, &[(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn small_families() {
        assert_eq!(p3().edge_count(), 2);
        let c6 = Graph::cycle(6);
        assert!((0..6).all(|v| c6.degree(v) == 2));
        let k13 = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(k13, Graph::star(3));
        assert_eq!(k13.degree_sequence(), vec![1, 1, 1, 3]);
    }

    #[test]
    fn distances() {
        assert_eq!(p3().distances().get(0, 2), Some(2));
        assert_eq!(Graph::cycle(6).distances().max_finite(), 3);
        let two = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(two.distances().get(0, 3), None);
        assert_eq!(two.distances().get(2, 3), Some(1));
    }

    #[test]
    fn coloring() {
        let c6 = Graph::cycle(6).two_coloring().unwrap();
        assert_eq!(c6.iter().filter(|&&c| c == Color::Black).count(), 3);
        assert!(Graph::cycle(5).two_coloring().is_none());
        let k2 = Graph::complete(2);
        let q3 = k2.cartesian_product(&k2).unwrap().cartesian_product(&k2).unwrap();
        let col = q3.two_coloring().unwrap();
        assert_eq!(col.iter().filter(|&&c| c == Color::White).count(), 4);
    }

    #[test]
    fn components() {
        assert_eq!(p3().components().len(), 1);
        let two = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(two.components(), vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(Graph::empty(3).components().len(), 3);
    }

    #[test]
    fn complement() {
        assert_eq!(Graph::complete(3).complement().edge_count(), 0);
        let c = p3().complement();
        assert_eq!(c.edge_list(), vec![Edge(0, 2)]);
        assert_eq!(c.degree(1), 0);
        let g = Graph::path(4).complement().complement();
        assert_eq!(g, Graph::path(4));
    }

    #[test]
    fn induced() {
        let k2 = Graph::complete(2);
        let q3 = k2.cartesian_product(&k2).unwrap().cartesian_product(&k2).unwrap();
        let sub = q3.induced_subgraph(&[0, 1, 2, 3, 4, 5, 6]).unwrap();
        assert_eq!(sub.graph.vertex_count(), 7);
        assert_eq!(sub.graph.edge_count(), 9);
        assert_eq!(q3.induced_subgraph(&[5]).unwrap().graph, Graph::empty(1));
        let all: Vec<_> = (0..8).collect();
        assert_eq!(q3.induced_subgraph(&all).unwrap().graph, q3);
        assert!(q3.induced_subgraph(&[9]).is_err());
    }

    #[test]
    fn products() {
        let k2 = Graph::complete(2);
        let q2 = k2.cartesian_product(&k2).unwrap();
        assert_eq!(q2.degree_sequence(), vec![2; 4]);
        let q3 = q2.cartesian_product(&k2).unwrap();
        assert_eq!((q3.vertex_count(), q3.edge_count()), (8, 12));
        assert_eq!(p3().cartesian_product(&Graph::empty(1)).unwrap(), p3());
        assert_eq!(p3().cartesian_product(&Graph::empty(0)), Err(Error::EmptyFactor));
    }

    #[test]
    fn common_neighbors() {
        let c6 = Graph::cycle(6);
        assert!(c6.common_neighbors(0, 3).is_empty());
        assert_eq!(Graph::cycle(4).common_neighbors(0, 2), vec![1, 3]);
        assert_eq!(p3().common_neighbors(0, 2), vec![1]);
    }

    #[test]
    fn forests() {
        assert!(Graph::star(3).is_tree());
        let c3 = Graph::cycle(3);
        assert!(!c3.is_forest() && !c3.is_tree());
        let e5 = Graph::empty(5);
        assert!(e5.is_forest() && !e5.is_tree());
    }

    #[test]
    fn json_roundtrip_normalizes() {
        let g = Graph::from_json(r#"{"n":3,"edges":[[1,0],[2,1]]}"#).unwrap();
        assert_eq!(g.to_json(), r#"{"n":3,"edges":[[0,1],[1,2]]}"#);
        assert!(Graph::from_json(r#"{"n":2,"edges":[[0,5]]}"#).is_err());
    }
}
