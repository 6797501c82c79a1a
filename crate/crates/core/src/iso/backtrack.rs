use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest vertex count the backtracking search accepts.
pub const MAX_ISO_VERTICES: usize = 300;

/// Some isomorphism `A -> B` as `map[a] = b`, or `None`.
pub fn graphs_isomorphic(a: &Graph, b: &Graph) -> Result<Option<Vec<usize>>> {
    Ok(all_isomorphisms(a, b, 1)?.pop())
}

/// Up to `limit` isomorphisms `A -> B`, in the deterministic search order.
pub fn all_isomorphisms(a: &Graph, b: &Graph, limit: usize) -> Result<Vec<Vec<usize>>> {
    let n = a.vertex_count();
    if n.max(b.vertex_count()) > MAX_ISO_VERTICES {
        return Err(Error::BudgetExceeded(format!("isomorphism search limited to {MAX_ISO_VERTICES} vertices")));
    }
    if n != b.vertex_count() || a.edge_count() != b.edge_count() || a.degree_sequence() != b.degree_sequence() {
        return Ok(Vec::new());
    }
    if limit == 0 {
        return Ok(Vec::new());
    }
    let colors = refine(a, b);
    let (ca, cb) = colors.split_at(n);
    let mut hist_a = ca.to_vec();
    let mut hist_b = cb.to_vec();
    hist_a.sort_unstable();
    hist_b.sort_unstable();
    if hist_a != hist_b {
        return Ok(Vec::new());
    }
    let mut by_color: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for (v, &c) in cb.iter().enumerate() {
        by_color.entry(c).or_default().push(v);
    }
    let order = search_order(a, ca, &by_color);
    let mut s = Search { a, b, ca, by_color: &by_color, order: &order, map: vec![usize::MAX; n], inv: vec![usize::MAX; n], out: Vec::new(), limit };
    s.extend(0);
    Ok(s.out.into_iter().filter(|m| a.is_isomorphism(b, m)).collect())
}

/// Joint color refinement of the disjoint union, seeded by degree and
/// distance profile. Colors of `a` come first.
fn refine(a: &Graph, b: &Graph) -> Vec<u32> {
    let profile = |g: &Graph, v: usize| {
        let mut counts: Vec<usize> = Vec::new();
        let mut unreachable = 0;
        for d in g.bfs(v) {
            match d {
                Some(d) => {
                    let d = d as usize;
                    if counts.len() <= d {
                        counts.resize(d + 1, 0);
                    }
                    counts[d] += 1;
                }
                None => unreachable += 1,
            }
        }
        (g.degree(v), counts, unreachable)
    };
    let seeds: Vec<_> = (0..a.vertex_count()).map(|v| profile(a, v)).chain((0..b.vertex_count()).map(|v| profile(b, v))).collect();
    let ids: BTreeSet<_> = seeds.iter().cloned().collect();
    let ids: BTreeMap<_, u32> = ids.into_iter().enumerate().map(|(i, s)| (s, i as u32)).collect();
    let mut colors: Vec<u32> = seeds.iter().map(|s| ids[s]).collect();
    let n = a.vertex_count();
    let nbrs = |v: usize| if v < n { a.neighbors(v).to_vec() } else { b.neighbors(v - n).iter().map(|&x| x + n).collect() };
    let mut classes = ids.len();
    loop {
        let sigs: Vec<(u32, Vec<u32>)> = (0..colors.len())
            .map(|v| {
                let mut s: Vec<u32> = nbrs(v).into_iter().map(|x| colors[x]).collect();
                s.sort_unstable();
                (colors[v], s)
            })
            .collect();
        let distinct: BTreeSet<_> = sigs.iter().cloned().collect();
        if distinct.len() == classes {
            return colors;
        }
        classes = distinct.len();
        let ids: BTreeMap<_, u32> = distinct.into_iter().enumerate().map(|(i, s)| (s, i as u32)).collect();
        colors = sigs.iter().map(|s| ids[s]).collect();
    }
}

/// Rarest color first, then grow along edges so that each new vertex has as
/// many already-placed neighbors as possible.
fn search_order(a: &Graph, ca: &[u32], by_color: &BTreeMap<u32, Vec<usize>>) -> Vec<usize> {
    let n = a.vertex_count();
    let rarity = |v: usize| by_color[&ca[v]].len();
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| (std::cmp::Reverse(links[v]), rarity(v), v))
            .expect("unplaced vertex");
        placed[v] = true;
        order.push(v);
        for &x in a.neighbors(v) {
            links[x] += 1;
        }
    }
    order
}

struct Search<'a> {
    a: &'a Graph,
    b: &'a Graph,
    ca: &'a [u32],
    by_color: &'a BTreeMap<u32, Vec<usize>>,
    order: &'a [usize],
    map: Vec<usize>,
    inv: Vec<usize>,
    out: Vec<Vec<usize>>,
    limit: usize,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) {
        if self.out.len() >= self.limit {
            return;
        }
        if depth == self.order.len() {
            self.out.push(self.map.clone());
            return;
        }
        let v = self.order[depth];
        let mapped_nbrs: Vec<usize> = self.a.neighbors(v).iter().map(|&x| self.map[x]).filter(|&y| y != usize::MAX).collect();
        for &w in &self.by_color[&self.ca[v]] {
            if self.inv[w] != usize::MAX {
                continue;
            }
            if !mapped_nbrs.iter().all(|&y| self.b.has_edge(w, y)) {
                continue;
            }
            let placed_w = self.b.neighbors(w).iter().filter(|&&y| self.inv[y] != usize::MAX).count();
            if placed_w != mapped_nbrs.len() {
                continue;
            }
            self.map[v] = w;
            self.inv[w] = v;
            self.extend(depth + 1);
            self.map[v] = usize::MAX;
            self.inv[w] = usize::MAX;
            if self.out.len() >= self.limit {
                return;
            }
        }
    }
}
