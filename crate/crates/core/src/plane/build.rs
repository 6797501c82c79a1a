use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::daisy::DaisyCert;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::{daisy_isomorphic_via_tau, graphs_isomorphic};
use crate::plane::resonance::{inner_dual, is_peripherally_2_colorable, resonance_graph};
use crate::plane::PlaneGraph;
use crate::tau::tau_graph;

/// Largest tree [`tree_to_p2c`] accepts.
pub const MAX_TREE_VERTICES: usize = 64;
const MAX_GLUE_ATTEMPTS: usize = 512;

/// Zigzag chain of `n` hexagons drawn on the hexagonal lattice.
pub fn fibonaccene(n: usize) -> Result<PlaneGraph> {
    if n < 1 {
        return Err(Error::InvalidArgument("a hexagonal chain needs n >= 1".into()));
    }
    let s3 = 3f64.sqrt();
    let mut center = [0.0f64, 0.0];
    let mut ids: HashMap<(i64, i64), usize> = HashMap::new();
    let mut coords: Vec<[f64; 2]> = Vec::new();
    let mut edges = Vec::new();
    for h in 0..n {
        if h > 0 {
            let a = if h % 2 == 1 { 0.0 } else { std::f64::consts::FRAC_PI_3 };
            center = [center[0] + s3 * a.cos(), center[1] + s3 * a.sin()];
        }
        let corners: Vec<usize> = (0..6)
            .map(|k| {
                let a = std::f64::consts::PI / 6.0 + std::f64::consts::FRAC_PI_3 * k as f64;
                let p = [center[0] + a.cos(), center[1] + a.sin()];
                let key = ((p[0] * 1e6).round() as i64, (p[1] * 1e6).round() as i64);
                *ids.entry(key).or_insert_with(|| {
                    coords.push(p);
                    coords.len() - 1
                })
            })
            .collect();
        for k in 0..6 {
            edges.push((corners[k], corners[(k + 1) % 6]));
        }
    }
    let graph = Graph::new(coords.len(), &edges)?;
    PlaneGraph::from_coords(&graph, coords)
}

/// Glue slots of one polygon: edge `i` joins corners `i` and `i + 1`.
fn glue_candidates(size: usize, slots: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(size: usize, slots: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == slots {
            // Consecutive glue edges must leave an odd number of edges
            // between them, which also keeps them apart.
            let ok = (0..slots).all(|i| {
                let a = current[i];
                let b = if i + 1 < slots { current[i + 1] } else { current[0] + size };
                let gap = b - a - 1;
                gap % 2 == 1
            });
            if ok {
                out.push(current.clone());
            }
            return;
        }
        for p in start..size {
            current.push(p);
            rec(size, slots, p + 1, current, out);
            current.pop();
        }
    }
    rec(size, slots, 0, &mut current, &mut out);
    out
}

struct Layout {
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    size: Vec<usize>,
}

fn layout(t: &Graph) -> Layout {
    let n = t.vertex_count();
    let mut parent = vec![None; n];
    let mut children = vec![Vec::new(); n];
    let mut seen = vec![false; n];
    let mut queue = std::collections::VecDeque::from([0]);
    seen[0] = true;
    while let Some(v) = queue.pop_front() {
        for &w in t.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = Some(v);
                children[v].push(w);
                queue.push_back(w);
            }
        }
    }
    let size = (0..n).map(|v| (2 * t.degree(v) + 2).max(6)).collect();
    Layout { parent, children, size }
}

/// Vertex ids, edges and periphery order for one choice of glue slots.
fn glue(l: &Layout, slots: &[&Vec<usize>]) -> Option<(Graph, Vec<usize>)> {
    let n = l.size.len();
    let offset: Vec<usize> = l.size.iter().scan(0, |acc, &s| {
        let o = *acc;
        *acc += s;
        Some(o)
    }).collect();
    let corners: usize = l.size.iter().sum();
    let mut uf: Vec<usize> = (0..corners).collect();
    fn find(uf: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while uf[r] != r {
            r = uf[r];
        }
        uf[x] = r;
        r
    }
    // The first chosen slot faces the parent, the rest face the children.
    let mut child_slot: Vec<HashMap<usize, (usize, usize)>> = vec![HashMap::new(); n];
    let mut parent_slot = vec![usize::MAX; n];
    for t in 0..n {
        let mut s = slots[t].iter().copied();
        if l.parent[t].is_some() {
            parent_slot[t] = s.next()?;
        }
        for &c in &l.children[t] {
            child_slot[t].insert(s.next()?, (c, usize::MAX));
        }
    }
    for t in 0..n {
        let entries: Vec<(usize, usize)> = child_slot[t].iter().map(|(&p, &(c, _))| (p, c)).collect();
        for (p, c) in entries {
            let q = parent_slot[c];
            child_slot[t].insert(p, (c, q));
            let (st, sc) = (l.size[t], l.size[c]);
            // Edge p of t runs against edge q of c.
            let pairs = [(offset[t] + p, offset[c] + (q + 1) % sc), (offset[t] + (p + 1) % st, offset[c] + q)];
            for (x, y) in pairs {
                let (rx, ry) = (find(&mut uf, x), find(&mut uf, y));
                uf[rx.max(ry)] = rx.min(ry);
            }
        }
    }
    let mut id = HashMap::new();
    let mut vid = vec![0; corners];
    for (x, slot) in vid.iter_mut().enumerate() {
        let r = find(&mut uf, x);
        let next = id.len();
        *slot = *id.entry(r).or_insert(next);
    }
    let mut edges = Vec::new();
    for t in 0..n {
        for i in 0..l.size[t] {
            edges.push((vid[offset[t] + i], vid[offset[t] + (i + 1) % l.size[t]]));
        }
    }
    edges.sort_unstable_by_key(|&(a, b)| (a.min(b), a.max(b)));
    edges.dedup_by_key(|e| (e.0.min(e.1), e.0.max(e.1)));
    let graph = Graph::new(id.len(), &edges).ok()?;

    let mut periphery = Vec::new();
    walk(l, &offset, &vid, &child_slot, 0, 0, l.size[0], false, &mut periphery);
    let mut check = periphery.clone();
    check.sort_unstable();
    check.dedup();
    (check.len() == periphery.len() && periphery.len() == graph.vertex_count()).then_some((graph, periphery))
}

/// Corners of polygon `t` from `start`, `count` edges onward, detouring
/// around each glued child.
#[allow(clippy::too_many_arguments)]
fn walk(
    l: &Layout,
    offset: &[usize],
    vid: &[usize],
    child_slot: &[HashMap<usize, (usize, usize)>],
    t: usize,
    start: usize,
    count: usize,
    skip_first: bool,
    out: &mut Vec<usize>,
) {
    for k in 0..count {
        let i = (start + k) % l.size[t];
        if !(k == 0 && skip_first) {
            out.push(vid[offset[t] + i]);
        }
        if let Some(&(c, q)) = child_slot[t].get(&i) {
            let sc = l.size[c];
            walk(l, offset, vid, child_slot, c, (q + 1) % sc, sc - 1, true, out);
        }
    }
}

/// A peripherally 2-colorable graph whose inner dual is `t`, built by
/// gluing one even polygon per node. Glue positions are searched in an
/// order fixed by `seed`; every candidate is checked before it is returned.
pub fn tree_to_p2c(t: &Graph, seed: u64) -> Result<PlaneGraph> {
    if t.vertex_count() == 0 || !t.is_tree() {
        return Err(Error::InvalidArgument("expected a nonempty tree".into()));
    }
    if t.vertex_count() > MAX_TREE_VERTICES {
        return Err(Error::BudgetExceeded(format!("trees are limited to {MAX_TREE_VERTICES} vertices")));
    }
    let l = layout(t);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let options: Vec<Vec<Vec<usize>>> = (0..t.vertex_count())
        .map(|v| {
            let mut c = glue_candidates(l.size[v], t.degree(v));
            if seed != 0 {
                c.shuffle(&mut rng);
            }
            c
        })
        .collect();
    let mut choice = vec![0usize; t.vertex_count()];
    for _ in 0..MAX_GLUE_ATTEMPTS {
        let slots: Vec<&Vec<usize>> = choice.iter().enumerate().map(|(v, &c)| &options[v][c]).collect();
        if let Some(pg) = attempt(t, &l, &slots)? {
            return Ok(pg);
        }
        // Advance like an odometer.
        let mut v = 0;
        loop {
            if v == choice.len() {
                return Err(Error::Internal("glue search exhausted".into()));
            }
            choice[v] += 1;
            if choice[v] < options[v].len() {
                break;
            }
            choice[v] = 0;
            v += 1;
        }
    }
    Err(Error::Internal("glue search exceeded its attempt limit".into()))
}

fn attempt(t: &Graph, l: &Layout, slots: &[&Vec<usize>]) -> Result<Option<PlaneGraph>> {
    let Some((graph, periphery)) = glue(l, slots) else { return Ok(None) };
    let m = periphery.len() as f64;
    let mut coords = vec![[0.0, 0.0]; graph.vertex_count()];
    for (i, &v) in periphery.iter().enumerate() {
        let a = std::f64::consts::TAU * i as f64 / m;
        coords[v] = [a.cos(), a.sin()];
    }
    let Ok(pg) = PlaneGraph::from_coords(&graph, coords) else { return Ok(None) };
    if !is_peripherally_2_colorable(&pg) || graphs_isomorphic(&inner_dual(&pg), t)?.is_none() {
        return Ok(None);
    }
    Ok(Some(pg))
}

/// A plane bipartite graph whose resonance graph is `h`: one synthesized
/// component per tree of the τ-forest of `h`.
pub fn realize_resonance(h: &Graph, cert: &DaisyCert, seed: u64) -> Result<PlaneGraph> {
    if h.edge_count() == 0 {
        return Err(Error::InvalidArgument("the daisy cube needs at least one edge".into()));
    }
    let tau = tau_graph(h, &cert.cert);
    if !tau.is_forest() {
        return Err(Error::NotRealizable);
    }
    let parts = tau
        .graph
        .components()
        .iter()
        .map(|c| tree_to_p2c(&tau.graph.induced_subgraph(c)?.graph, seed))
        .collect::<Result<Vec<_>>>()?;
    let pg = PlaneGraph::disjoint_union(&parts.iter().collect::<Vec<_>>())?;
    let r = resonance_graph(&pg)?;
    if !daisy_isomorphic_via_tau(&r.graph, h)?.isomorphic {
        return Err(Error::Internal("resonance graph of the synthesized graph differs from the input".into()));
    }
    Ok(pg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::daisy::{fibonacci_cube, hypercube, is_daisy_cube, lucas_cube};

    fn iso(a: &Graph, b: &Graph) -> bool {
        graphs_isomorphic(a, b).unwrap().is_some()
    }

    #[test]
    fn fibonaccenes() {
        assert!(iso(fibonaccene(1).unwrap().graph(), &Graph::cycle(6)));
        let n2 = fibonaccene(2).unwrap();
        assert_eq!((n2.graph().vertex_count(), n2.graph().edge_count()), (10, 11));
        for n in 1..=6 {
            let f = fibonaccene(n).unwrap();
            assert!(iso(&inner_dual(&f), &Graph::path(n)));
            assert!(is_peripherally_2_colorable(&f));
            let r = resonance_graph(&f).unwrap();
            assert!(iso(&r.graph, &fibonacci_cube(n).unwrap().graph), "n={n}");
        }
        assert!(fibonaccene(0).is_err());
    }

    #[test]
    fn candidate_rule() {
        assert_eq!(glue_candidates(6, 1).len(), 6);
        assert_eq!(glue_candidates(6, 2), vec![vec![0, 2], vec![0, 4], vec![1, 3], vec![1, 5], vec![2, 4], vec![3, 5]]);
        assert_eq!(glue_candidates(8, 3)[0], vec![0, 2, 4]);
    }

    #[test]
    fn small_trees() {
        for t in [Graph::empty(1), Graph::path(2), Graph::path(3), Graph::star(3), Graph::star(4)] {
            for seed in [0, 1, 2] {
                let pg = tree_to_p2c(&t, seed).unwrap();
                assert!(is_peripherally_2_colorable(&pg));
                assert!(iso(&inner_dual(&pg), &t));
            }
        }
        assert!(tree_to_p2c(&Graph::cycle(4), 0).is_err());
    }

    #[test]
    fn realize_examples() {
        let g3 = fibonacci_cube(3).unwrap().graph;
        let pg = realize_resonance(&g3, &is_daisy_cube(&g3).unwrap(), 0).unwrap();
        assert_eq!(pg.finite_faces().len(), 3);
        let q3 = hypercube(3).unwrap().graph;
        let pg = realize_resonance(&q3, &is_daisy_cube(&q3).unwrap(), 0).unwrap();
        assert_eq!(pg.graph().components().len(), 3);
        let l4 = lucas_cube(4).unwrap().graph;
        assert_eq!(realize_resonance(&l4, &is_daisy_cube(&l4).unwrap(), 0), Err(Error::NotRealizable));
    }
}
