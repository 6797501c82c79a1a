use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Canonical string of a forest: the sorted codes of its trees, each tree
/// rooted at the center giving the smaller code.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ForestCode(pub String);

impl std::fmt::Display for ForestCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

/// A tree component rooted at its chosen center.
struct Rooted {
    root: usize,
    parent: Vec<usize>,
    /// Code of every vertex's subtree, indexed by vertex of the host graph.
    codes: Vec<String>,
}

impl Rooted {
    fn code(&self) -> &str {
        &self.codes[self.root]
    }

    fn children(&self, g: &Graph, v: usize) -> Vec<usize> {
        let mut c: Vec<usize> = g.neighbors(v).iter().copied().filter(|&x| x != self.parent[v]).collect();
        c.sort_by(|x, y| self.codes[*x].cmp(&self.codes[*y]).then(x.cmp(y)));
        c
    }
}

fn root_at(g: &Graph, root: usize) -> Rooted {
    let n = g.vertex_count();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::new();
    let mut queue = VecDeque::from([root]);
    parent[root] = root;
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &x in g.neighbors(v) {
            if parent[x] == usize::MAX {
                parent[x] = v;
                queue.push_back(x);
            }
        }
    }
    let mut codes = vec![String::new(); n];
    for &v in order.iter().rev() {
        let mut kids: Vec<&str> =
            g.neighbors(v).iter().filter(|&&x| x != parent[v]).map(|&x| codes[x].as_str()).collect();
        kids.sort_unstable();
        let code = format!("({})", kids.concat());
        codes[v] = code;
    }
    Rooted { root, parent, codes }
}

/// Centers by repeated leaf removal.
fn centers(g: &Graph, component: &[usize]) -> Vec<usize> {
    if component.len() <= 2 {
        return component.to_vec();
    }
    let mut degree: Vec<usize> = (0..g.vertex_count()).map(|v| g.degree(v)).collect();
    let mut layer: Vec<usize> = component.iter().copied().filter(|&v| degree[v] <= 1).collect();
    let mut remaining = component.len();
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &x in g.neighbors(v) {
                if degree[x] > 1 {
                    degree[x] -= 1;
                    if degree[x] == 1 {
                        next.push(x);
                    }
                }
            }
            degree[v] = 0;
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

fn rooted_components(f: &Graph) -> Result<Vec<Rooted>> {
    if !f.is_forest() {
        return Err(Error::NotForest);
    }
    let mut trees: Vec<Rooted> = f
        .components()
        .iter()
        .map(|comp| centers(f, comp).into_iter().map(|c| root_at(f, c)).min_by(|x, y| x.code().cmp(y.code())).unwrap())
        .collect();
    trees.sort_by(|x, y| x.code().cmp(y.code()).then(x.root.cmp(&y.root)));
    Ok(trees)
}

pub fn forest_canonical(f: &Graph) -> Result<ForestCode> {
    Ok(ForestCode(rooted_components(f)?.iter().map(Rooted::code).collect()))
}

/// A verified isomorphism between two forests, present iff their codes
/// agree.
pub fn forests_isomorphic(a: &Graph, b: &Graph) -> Result<Option<Vec<usize>>> {
    let ta = rooted_components(a)?;
    let tb = rooted_components(b)?;
    if ta.len() != tb.len() || ta.iter().zip(&tb).any(|(x, y)| x.code() != y.code()) {
        return Ok(None);
    }
    let mut map = vec![usize::MAX; a.vertex_count()];
    for (x, y) in ta.iter().zip(&tb) {
        let mut stack = vec![(x.root, y.root)];
        while let Some((u, w)) = stack.pop() {
            map[u] = w;
            stack.extend(x.children(a, u).into_iter().zip(y.children(b, w)));
        }
    }
    if !a.is_isomorphism(b, &map) {
        return Err(Error::Internal("forest matching is not an isomorphism".into()));
    }
    Ok(Some(map))
}
