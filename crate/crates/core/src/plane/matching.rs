use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// Default cap on enumerated perfect matchings.
pub const MAX_MATCHINGS: usize = 1_000_000;

/// A set of pairwise disjoint edges, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching {
    edges: Vec<Edge>,
}

impl Matching {
    pub fn new(mut edges: Vec<Edge>) -> Result<Self> {
        edges.sort_unstable();
        edges.dedup();
        let mut seen = BTreeSet::new();
        for e in &edges {
            if !seen.insert(e.0) || !seen.insert(e.1) {
                return Err(Error::InvalidArgument(format!("edges overlap at {e}")));
            }
        }
        Ok(Matching { edges })
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    pub fn covers(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.edges.iter().flat_map(|e| [e.0, e.1]).collect();
        v.sort_unstable();
        v
    }

    pub fn is_perfect(&self, n: usize) -> bool {
        self.edges.len() * 2 == n
    }

    /// `self ⊕ set`, assuming the result is again a matching.
    pub(crate) fn flip(&self, set: &[Edge]) -> Matching {
        let mut edges: BTreeSet<Edge> = self.edges.iter().copied().collect();
        for e in set {
            if !edges.remove(e) {
                edges.insert(*e);
            }
        }
        Matching { edges: edges.into_iter().collect() }
    }
}

pub fn perfect_matchings(g: &Graph) -> Result<Vec<Matching>> {
    perfect_matchings_with_budget(g, MAX_MATCHINGS)
}

/// Every perfect matching, in lexicographic order of sorted edge lists.
/// The lowest uncovered vertex is matched first, to neighbors in
/// increasing order.
pub fn perfect_matchings_with_budget(g: &Graph, budget: usize) -> Result<Vec<Matching>> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    if n % 2 == 1 {
        return Ok(out);
    }
    let mut covered = vec![false; n];
    let mut current = Vec::with_capacity(n / 2);
    extend(g, &mut covered, &mut current, &mut out, budget)?;
    Ok(out)
}

fn extend(g: &Graph, covered: &mut [bool], current: &mut Vec<Edge>, out: &mut Vec<Matching>, budget: usize) -> Result<()> {
    let Some(v) = covered.iter().position(|c| !c) else {
        if out.len() == budget {
            return Err(Error::BudgetExceeded(format!("more than {budget} perfect matchings")));
        }
        out.push(Matching { edges: current.clone() });
        return Ok(());
    };
    covered[v] = true;
    for &w in g.neighbors(v) {
        if covered[w] {
            continue;
        }
        covered[w] = true;
        current.push(Edge::new(v, w));
        extend(g, covered, current, out, budget)?;
        current.pop();
        covered[w] = false;
    }
    covered[v] = false;
    Ok(())
}

/// Edges lying in at least one perfect matching.
pub fn allowed_edges(g: &Graph) -> Result<Vec<Edge>> {
    let all = perfect_matchings(g)?;
    if all.is_empty() {
        return Err(Error::NoPerfectMatching);
    }
    let set: BTreeSet<Edge> = all.iter().flat_map(|m| m.edges.iter().copied()).collect();
    Ok(set.into_iter().collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementaryComponent {
    pub vertices: Vec<usize>,
    pub is_k2: bool,
}

/// Components of the spanning subgraph of allowed edges.
pub fn elementary_components(g: &Graph) -> Result<Vec<ElementaryComponent>> {
    let allowed = allowed_edges(g)?;
    let sub = Graph::from_edges(g.vertex_count(), allowed)?;
    Ok(sub
        .components()
        .into_iter()
        .map(|vertices| ElementaryComponent { is_k2: vertices.len() == 2, vertices })
        .collect())
}

/// Connected, with a perfect matching, and every edge allowed.
pub fn is_elementary(g: &Graph) -> Result<bool> {
    if !g.is_connected() {
        return Ok(false);
    }
    match allowed_edges(g) {
        Ok(a) => Ok(a.len() == g.edge_count()),
        Err(Error::NoPerfectMatching) => Ok(false),
        Err(e) => Err(e),
    }
}
