//! Plane graphs given by rotation systems, their faces, perfect matchings
//! and resonance graphs.

mod build;
mod matching;
mod resonance;

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

pub use build::{fibonaccene, realize_resonance, tree_to_p2c, MAX_TREE_VERTICES};
pub use matching::{
    allowed_edges, elementary_components, is_elementary, perfect_matchings, perfect_matchings_with_budget,
    ElementaryComponent, Matching, MAX_MATCHINGS,
};
pub use resonance::{
    inner_dual, is_peripherally_2_colorable, is_weakly_elementary, resonance_graph, resonance_graph_with_budget, Resonance,
};

/// A closed boundary walk; dart `i` runs from `walk[i]` to `walk[i + 1]`
/// (cyclically). A lone vertex has no face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub walk: Vec<usize>,
}

impl Face {
    pub fn darts(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let l = self.walk.len();
        (0..l).map(move |i| (self.walk[i], self.walk[(i + 1) % l]))
    }

    /// Boundary edge set, sorted and without repeats.
    pub fn edges(&self) -> Vec<Edge> {
        let mut e: Vec<Edge> = self.darts().map(|(u, v)| Edge::new(u, v)).collect();
        e.sort_unstable();
        e.dedup();
        e
    }

    /// The walk visits no vertex twice and has length at least 3.
    pub fn is_simple_cycle(&self) -> bool {
        let mut seen: Vec<usize> = self.walk.clone();
        seen.sort_unstable();
        seen.dedup();
        self.walk.len() >= 3 && seen.len() == self.walk.len()
    }
}

/// All traced faces; `outer` holds one face per component with an edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceSet {
    pub faces: Vec<Face>,
    pub outer: Vec<usize>,
}

impl FaceSet {
    pub fn is_outer(&self, f: usize) -> bool {
        self.outer.contains(&f)
    }

    pub fn finite(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.faces.len()).filter(|&f| !self.is_outer(f))
    }
}

/// A graph with a rotation system. Components are taken to lie side by
/// side, none inside a face of another.
#[derive(Debug, Clone, PartialEq)]
pub struct PlaneGraph {
    graph: Graph,
    rotation: Vec<Vec<usize>>,
    faces: FaceSet,
    coords: Option<Vec<[f64; 2]>>,
}

/// Wire form: `outer` is one face index, or one per component with an
/// edge. It may be left out when `coords` are given.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlaneRecord {
    pub n: usize,
    pub rotations: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub outer: Option<OuterHint>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coords: Option<Vec<[f64; 2]>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum OuterHint {
    One(usize),
    Many(Vec<usize>),
}

impl PlaneGraph {
    /// Traces faces with `next(u→v) = (v, w)` where `w` follows `u` in the
    /// rotation at `v`. Without a hint the outer face of each component is
    /// its unique longest walk.
    pub fn from_rotations(rotation: Vec<Vec<usize>>, outer: Option<Vec<usize>>) -> Result<Self> {
        assemble(rotation, None, outer)
    }

    /// Straight-line drawing: rotations sorted counterclockwise by angle.
    /// Traced walks keep their face on the right, so the outer walk of each
    /// component is the one of largest signed area.
    pub fn from_coords(graph: &Graph, coords: Vec<[f64; 2]>) -> Result<Self> {
        if coords.len() != graph.vertex_count() {
            return Err(Error::InvalidArgument("one coordinate pair per vertex required".into()));
        }
        let rotation: Vec<Vec<usize>> = (0..graph.vertex_count())
            .map(|v| {
                let mut nbrs = graph.neighbors(v).to_vec();
                let angle = |w: usize| (coords[w][1] - coords[v][1]).atan2(coords[w][0] - coords[v][0]);
                nbrs.sort_by(|&a, &b| angle(a).total_cmp(&angle(b)));
                nbrs
            })
            .collect();
        assemble(rotation, Some(coords), None)
    }

    pub fn from_record(rec: &PlaneRecord) -> Result<Self> {
        if rec.rotations.len() != rec.n {
            return Err(Error::InvalidArgument(format!("expected {} rotation lists, found {}", rec.n, rec.rotations.len())));
        }
        if rec.coords.as_ref().is_some_and(|c| c.len() != rec.n) {
            return Err(Error::InvalidArgument("one coordinate pair per vertex required".into()));
        }
        let hint = rec.outer.clone().map(|h| match h {
            OuterHint::One(f) => vec![f],
            OuterHint::Many(v) => v,
        });
        assemble(rec.rotations.clone(), rec.coords.clone(), hint)
    }

    pub fn to_record(&self) -> PlaneRecord {
        PlaneRecord {
            n: self.graph.vertex_count(),
            rotations: self.rotation.clone(),
            outer: Some(OuterHint::Many(self.faces.outer.clone())),
            coords: self.coords.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_record()).expect("plane graph serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let rec: PlaneRecord = serde_json::from_str(s).map_err(|e| Error::InvalidArgument(e.to_string()))?;
        PlaneGraph::from_record(&rec)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn rotation(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn faces(&self) -> &FaceSet {
        &self.faces
    }

    pub fn coords(&self) -> Option<&[[f64; 2]]> {
        self.coords.as_deref()
    }

    pub fn finite_faces(&self) -> Vec<&Face> {
        self.faces.finite().map(|f| &self.faces.faces[f]).collect()
    }

    /// Face index of every dart.
    pub fn dart_faces(&self) -> HashMap<(usize, usize), usize> {
        let mut out = HashMap::new();
        for (i, f) in self.faces.faces.iter().enumerate() {
            for d in f.darts() {
                out.insert(d, i);
            }
        }
        out
    }

    /// The same embedding with `edges` removed and faces retraced. Outer
    /// faces are the walks through darts of old outer faces.
    pub fn without_edges(&self, edges: &[Edge]) -> Result<PlaneGraph> {
        let gone: std::collections::HashSet<Edge> = edges.iter().copied().collect();
        let rotation: Vec<Vec<usize>> = self
            .rotation
            .iter()
            .enumerate()
            .map(|(v, r)| r.iter().copied().filter(|&w| !gone.contains(&Edge::new(v, w))).collect())
            .collect();
        let graph = graph_of(&rotation)?;
        let faces = trace(&graph, &rotation);
        let comp = component_of(&graph);
        let old = self.dart_faces();
        let outer = pick_outer(&faces, &comp, |f| if faces[f].darts().any(|d| self.faces.is_outer(old[&d])) { -1.0 } else { 0.0 }, false)?;
        let pg = PlaneGraph { graph, rotation, faces: FaceSet { faces, outer }, coords: self.coords.clone() };
        pg.euler_check()?;
        Ok(pg)
    }

    /// Side-by-side union; coordinates are shifted apart when all parts
    /// have them.
    pub fn disjoint_union(parts: &[&PlaneGraph]) -> Result<PlaneGraph> {
        let mut rotation = Vec::new();
        let mut walks = Vec::new();
        let mut coords = Some(Vec::new());
        let mut shift = 0.0;
        for p in parts {
            let off = rotation.len();
            rotation.extend(p.rotation.iter().map(|r| r.iter().map(|&w| w + off).collect::<Vec<_>>()));
            for &f in &p.faces.outer {
                walks.push(p.faces.faces[f].walk.iter().map(|&w| w + off).collect::<Vec<_>>());
            }
            match (&mut coords, &p.coords) {
                (Some(c), Some(pc)) => {
                    let min_x = pc.iter().map(|q| q[0]).fold(f64::INFINITY, f64::min);
                    let max_x = pc.iter().map(|q| q[0]).fold(f64::NEG_INFINITY, f64::max);
                    let dx = if pc.is_empty() { 0.0 } else { shift - min_x };
                    c.extend(pc.iter().map(|q| [q[0] + dx, q[1]]));
                    if !pc.is_empty() {
                        shift += max_x - min_x + 1.0;
                    }
                }
                _ => coords = None,
            }
        }
        let graph = graph_of(&rotation)?;
        let faces = trace(&graph, &rotation);
        let outer = walks
            .iter()
            .map(|w| faces.iter().position(|f| &f.walk == w).ok_or_else(|| Error::Internal("outer walk lost in union".into())))
            .collect::<Result<Vec<_>>>()?;
        let mut pg = PlaneGraph::from_rotations(rotation, Some(outer))?;
        pg.coords = coords;
        Ok(pg)
    }

    /// `V - E + (finite faces) = 1` on every component.
    fn euler_check(&self) -> Result<()> {
        let comp = component_of(&self.graph);
        let k = comp.iter().copied().max().map_or(0, |m| m + 1);
        let mut count = vec![0i64; k];
        for c in &comp {
            count[*c] += 1;
        }
        for e in self.graph.edges() {
            count[comp[e.0]] -= 1;
        }
        for f in self.faces.finite() {
            count[comp[self.faces.faces[f].walk[0]]] += 1;
        }
        if count.iter().all(|&c| c == 1) {
            Ok(())
        } else {
            Err(Error::InconsistentRotation("Euler check fails; the rotation system is not planar".into()))
        }
    }
}

fn assemble(rotation: Vec<Vec<usize>>, coords: Option<Vec<[f64; 2]>>, hint: Option<Vec<usize>>) -> Result<PlaneGraph> {
    let graph = graph_of(&rotation)?;
    let faces = trace(&graph, &rotation);
    let comp = component_of(&graph);
    let outer = match (hint, &coords) {
        (Some(h), _) => check_hint(&graph, &faces, &comp, h)?,
        (None, Some(c)) => pick_outer(&faces, &comp, |f| -signed_area(&faces[f], c), false)?,
        (None, None) => pick_outer(&faces, &comp, |f| -(faces[f].walk.len() as f64), true)?,
    };
    let pg = PlaneGraph { graph, rotation, faces: FaceSet { faces, outer }, coords };
    pg.euler_check()?;
    Ok(pg)
}

fn graph_of(rotation: &[Vec<usize>]) -> Result<Graph> {
    let n = rotation.len();
    let mut edges = Vec::new();
    for (v, r) in rotation.iter().enumerate() {
        let mut sorted = r.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InconsistentRotation(format!("vertex {v} lists a neighbor twice")));
        }
        for &w in r {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
            if w == v {
                return Err(Error::SelfLoop(v));
            }
            if !rotation[w].contains(&v) {
                return Err(Error::InconsistentRotation(format!("{v} lists {w} but not the reverse")));
            }
            if v < w {
                edges.push((v, w));
            }
        }
    }
    Graph::new(n, &edges)
}

fn trace(graph: &Graph, rotation: &[Vec<usize>]) -> Vec<Face> {
    let pos: Vec<HashMap<usize, usize>> =
        rotation.iter().map(|r| r.iter().enumerate().map(|(i, &w)| (w, i)).collect()).collect();
    let mut used: std::collections::HashSet<(usize, usize)> = std::collections::HashSet::new();
    let mut faces = Vec::new();
    for u in 0..graph.vertex_count() {
        for &v in graph.neighbors(u) {
            if used.contains(&(u, v)) {
                continue;
            }
            let mut walk = Vec::new();
            let (mut a, mut b) = (u, v);
            while used.insert((a, b)) {
                walk.push(a);
                let r = &rotation[b];
                let w = r[(pos[b][&a] + 1) % r.len()];
                (a, b) = (b, w);
            }
            faces.push(Face { walk });
        }
    }
    faces
}

fn component_of(graph: &Graph) -> Vec<usize> {
    let mut comp = vec![0; graph.vertex_count()];
    for (i, c) in graph.components().iter().enumerate() {
        for &v in c {
            comp[v] = i;
        }
    }
    comp
}

/// Per component with an edge, the face minimizing `score`; ties are an
/// error when `strict`, otherwise the lower index wins.
fn pick_outer(faces: &[Face], comp: &[usize], score: impl Fn(usize) -> f64, strict: bool) -> Result<Vec<usize>> {
    let mut best: std::collections::BTreeMap<usize, (f64, usize, bool)> = std::collections::BTreeMap::new();
    for f in 0..faces.len() {
        let c = comp[faces[f].walk[0]];
        let s = score(f);
        match best.get_mut(&c) {
            None => {
                best.insert(c, (s, f, false));
            }
            Some(entry) => {
                if s < entry.0 {
                    *entry = (s, f, false);
                } else if s == entry.0 {
                    entry.2 = true;
                }
            }
        }
    }
    if strict && best.values().any(|e| e.2) {
        return Err(Error::AmbiguousOuterFace);
    }
    Ok(best.values().map(|e| e.1).collect())
}

fn check_hint(graph: &Graph, faces: &[Face], comp: &[usize], hint: Vec<usize>) -> Result<Vec<usize>> {
    let nontrivial: std::collections::BTreeSet<usize> = graph.edges().map(|e| comp[e.0]).collect();
    let mut seen = std::collections::BTreeSet::new();
    for &f in &hint {
        let face = faces.get(f).ok_or_else(|| Error::InvalidArgument(format!("no face {f}")))?;
        if !seen.insert(comp[face.walk[0]]) {
            return Err(Error::InvalidArgument("two outer faces given for one component".into()));
        }
    }
    if seen != nontrivial {
        return Err(Error::InvalidArgument("one outer face per component with an edge is required".into()));
    }
    let mut hint = hint;
    hint.sort_by_key(|&f| comp[faces[f].walk[0]]);
    Ok(hint)
}

fn signed_area(face: &Face, coords: &[[f64; 2]]) -> f64 {
    face.darts().map(|(u, v)| coords[u][0] * coords[v][1] - coords[v][0] * coords[u][1]).sum::<f64>() / 2.0
}

#[cfg(test)]
mod tests {
    use crate::fixtures::*;
    use super::*;

    #[test]
    fn hexagon_faces() {
        let h = hexagon();
        assert_eq!(h.faces().faces.len(), 2);
        assert_eq!(h.finite_faces().len(), 1);
        assert!(h.finite_faces()[0].is_simple_cycle());
    }

    #[test]
    fn bridge_faces() {
        let g = two_squares_bridge();
        assert_eq!(g.faces().faces.len(), 3);
        assert_eq!(g.finite_faces().len(), 2);
        let outer = &g.faces().faces[g.faces().outer[0]];
        assert_eq!(outer.walk.len(), 10);
        assert!(!outer.is_simple_cycle());
    }

    #[test]
    fn rotations_and_hints() {
        let rot = vec![vec![1, 5], vec![2, 0], vec![3, 1], vec![4, 2], vec![5, 3], vec![0, 4]];
        assert_eq!(PlaneGraph::from_rotations(rot.clone(), None), Err(Error::AmbiguousOuterFace));
        let pg = PlaneGraph::from_rotations(rot.clone(), Some(vec![1])).unwrap();
        assert_eq!(pg.finite_faces().len(), 1);
        let back = PlaneGraph::from_json(&pg.to_json()).unwrap();
        assert_eq!(back, pg);
        let single: PlaneRecord = serde_json::from_str(r#"{"n":2,"rotations":[[1],[0]],"outer":0}"#).unwrap();
        assert_eq!(PlaneGraph::from_record(&single).unwrap().finite_faces().len(), 0);
        assert!(matches!(PlaneGraph::from_rotations(vec![vec![1], vec![]], None), Err(Error::InconsistentRotation(_))));
    }

    #[test]
    fn nonplanar_rotation_fails_euler() {
        // K4 with a rotation that is not an embedding.
        let rot = vec![vec![1, 2, 3], vec![0, 2, 3], vec![0, 1, 3], vec![0, 1, 2]];
        assert!(matches!(PlaneGraph::from_rotations(rot, None), Err(Error::InconsistentRotation(_))));
    }

    #[test]
    fn crossing_drawing_fails_euler() {
        // K_{3,3} has no plane drawing.
        let g = Graph::new(6, &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]).unwrap();
        let coords = vec![[0.0, 0.0], [1.0, 0.0], [2.0, 0.0], [0.0, 1.0], [1.0, 1.0], [2.0, 1.0]];
        assert!(PlaneGraph::from_coords(&g, coords).is_err());
    }

    #[test]
    fn deletion_keeps_euler() {
        let g = two_squares_bridge();
        let h = g.without_edges(&[Edge::new(1, 4)]).unwrap();
        assert_eq!(h.finite_faces().len(), 2);
        assert_eq!(h.faces().outer.len(), 2);
        let h = g.without_edges(&[Edge::new(0, 1)]).unwrap();
        assert_eq!(h.finite_faces().len(), 1);
    }

    #[test]
    fn union_keeps_faces() {
        let u = PlaneGraph::disjoint_union(&[&hexagon(), &two_squares_bridge()]).unwrap();
        assert_eq!(u.graph().vertex_count(), 14);
        assert_eq!(u.finite_faces().len(), 3);
        assert_eq!(u.faces().outer.len(), 2);
    }
}
