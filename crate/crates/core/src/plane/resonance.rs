use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{Color, Edge, Graph};
use crate::plane::matching::{allowed_edges, is_elementary, perfect_matchings_with_budget, Matching, MAX_MATCHINGS};
use crate::plane::PlaneGraph;

/// `R(G)`: vertex `i` is `matchings[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Resonance {
    pub graph: Graph,
    pub matchings: Vec<Matching>,
}

/// Perfect matchings, adjacent when their symmetric difference is the
/// boundary cycle of one finite face.
pub fn resonance_graph(pg: &PlaneGraph) -> Result<Resonance> {
    resonance_graph_with_budget(pg, MAX_MATCHINGS)
}

/// [`resonance_graph`] with a cap on the number of perfect matchings.
pub fn resonance_graph_with_budget(pg: &PlaneGraph, budget: usize) -> Result<Resonance> {
    if !pg.graph().is_bipartite() {
        return Err(Error::InvalidArgument("resonance graphs need a bipartite graph".into()));
    }
    let matchings = perfect_matchings_with_budget(pg.graph(), budget)?;
    if matchings.is_empty() {
        return Err(Error::NoPerfectMatching);
    }
    let index: HashMap<&Matching, usize> = matchings.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let cycles: Vec<Vec<Edge>> = pg
        .finite_faces()
        .into_iter()
        .filter(|f| f.is_simple_cycle())
        .map(|f| f.darts().map(|(u, v)| Edge::new(u, v)).collect())
        .collect();
    let mut edges = Vec::new();
    for (i, m) in matchings.iter().enumerate() {
        for cycle in &cycles {
            let in_m: Vec<bool> = cycle.iter().map(|&e| m.contains(e)).collect();
            let alternating = in_m.iter().enumerate().all(|(k, &b)| b == (k % 2 == 0))
                || in_m.iter().enumerate().all(|(k, &b)| b == (k % 2 == 1));
            if !alternating {
                continue;
            }
            let j = index[&m.flip(cycle)];
            if i < j {
                edges.push((i, j));
            }
        }
    }
    Ok(Resonance { graph: Graph::new(matchings.len(), &edges)?, matchings })
}

/// Finite faces, adjacent when their boundaries share an edge.
pub fn inner_dual(pg: &PlaneGraph) -> Graph {
    let finite = pg.finite_faces();
    let sets: Vec<Vec<Edge>> = finite.iter().map(|f| f.edges()).collect();
    let mut edges = Vec::new();
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            if sets[i].iter().any(|e| sets[j].binary_search(e).is_ok()) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(sets.len(), &edges).expect("face indices in range")
}

/// Deleting the forbidden edges merges the faces on either side of each.
/// A new finite face appears exactly when some merged region away from the
/// outside is made of two or more original faces.
pub fn is_weakly_elementary(pg: &PlaneGraph) -> Result<bool> {
    if !pg.graph().is_bipartite() {
        return Err(Error::InvalidArgument("weak elementarity is defined for bipartite graphs".into()));
    }
    let allowed = allowed_edges(pg.graph())?;
    let faces = pg.faces();
    let mut parent: Vec<usize> = (0..faces.faces.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    let union = |p: &mut Vec<usize>, a: usize, b: usize| {
        let (ra, rb) = (find(p, a), find(p, b));
        p[ra.max(rb)] = ra.min(rb);
    };
    for w in faces.outer.windows(2) {
        union(&mut parent, w[0], w[1]);
    }
    let side = pg.dart_faces();
    for e in pg.graph().edges() {
        if allowed.binary_search(&e).is_err() {
            union(&mut parent, side[&(e.0, e.1)], side[&(e.1, e.0)]);
        }
    }
    let infinite = faces.outer.first().map(|&f| find(&mut parent, f));
    let mut size: HashMap<usize, usize> = HashMap::new();
    for f in 0..faces.faces.len() {
        *size.entry(find(&mut parent, f)).or_default() += 1;
    }
    Ok(size.iter().all(|(&root, &count)| Some(root) == infinite || count == 1))
}

/// Plane elementary bipartite, not `K_2`, degrees 2 or 3, every degree-3
/// vertex on the outer walk, and those vertices alternate in color along it.
pub fn is_peripherally_2_colorable(pg: &PlaneGraph) -> bool {
    let g = pg.graph();
    if g.vertex_count() <= 2 || !matches!(is_elementary(g), Ok(true)) {
        return false;
    }
    let Some(colors) = g.two_coloring() else { return false };
    if (0..g.vertex_count()).any(|v| !(2..=3).contains(&g.degree(v))) {
        return false;
    }
    let faces = pg.faces();
    let [outer] = faces.outer[..] else { return false };
    let walk = &faces.faces[outer].walk;
    let on_walk: std::collections::HashSet<usize> = walk.iter().copied().collect();
    if (0..g.vertex_count()).any(|v| g.degree(v) == 3 && !on_walk.contains(&v)) {
        return false;
    }
    let forward: Vec<Color> = walk.iter().filter(|&&v| g.degree(v) == 3).map(|&v| colors[v]).collect();
    let backward: Vec<Color> = forward.iter().rev().copied().collect();
    let alternates = |seq: &[Color]| (0..seq.len()).all(|i| seq[i] != seq[(i + 1) % seq.len()]);
    let verdict = alternates(&forward);
    debug_assert_eq!(verdict, alternates(&backward));
    verdict
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::graphs_isomorphic;
    use crate::fixtures::*;

    fn iso(a: &Graph, b: &Graph) -> bool {
        graphs_isomorphic(a, b).unwrap().is_some()
    }

    #[test]
    fn even_cycle_resonance_is_an_edge() {
        let r = resonance_graph(&hexagon()).unwrap();
        assert_eq!(r.graph, Graph::complete(2));
        assert_eq!(inner_dual(&hexagon()), Graph::empty(1));
    }

    #[test]
    fn bridge_fixture() {
        let g = two_squares_bridge();
        let r = resonance_graph(&g).unwrap();
        assert!(iso(&r.graph, &Graph::cycle(4)));
        assert!(is_weakly_elementary(&g).unwrap());
        assert!(!is_peripherally_2_colorable(&g));
        assert_eq!(inner_dual(&g), Graph::empty(2));
    }

    #[test]
    fn hexagon_is_p2c() {
        assert!(is_peripherally_2_colorable(&hexagon()));
        assert!(is_weakly_elementary(&hexagon()).unwrap());
    }

    /// C6 around C4 with two spokes from black outer vertices to white
    /// inner ones: both spokes are forbidden and their removal joins the
    /// two faces between the cycles.
    #[test]
    fn spokes_break_weak_elementarity() {
        let mut edges: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        edges.extend((0..4).map(|i| (6 + i, 6 + (i + 1) % 4)));
        edges.extend([(0, 7), (2, 9)]);
        let g = Graph::new(10, &edges).unwrap();
        let mut coords: Vec<[f64; 2]> = (0..6)
            .map(|i| {
                let a = std::f64::consts::PI / 3.0 * i as f64;
                [3.0 * a.cos(), 3.0 * a.sin()]
            })
            .collect();
        coords.extend((0..4).map(|i| {
            let a = std::f64::consts::FRAC_PI_2 * i as f64 - std::f64::consts::FRAC_PI_2;
            [a.cos(), a.sin()]
        }));
        let pg = PlaneGraph::from_coords(&g, coords).unwrap();
        let colors = g.two_coloring().unwrap();
        assert_eq!(colors[0], colors[2]);
        assert_ne!(colors[0], colors[7]);
        assert!(!is_weakly_elementary(&pg).unwrap());
    }
}
