//! Daisy cubes: generators, recognition by downward closure, and the
//! exhaustive census of small daisy cubes.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::graphs_isomorphic;
use crate::labels::{BinaryLabeling, Bits};
use crate::partial_cube::{is_partial_cube, PartialCubeCert};

/// Largest hypercube dimension the generators will build.
pub const MAX_CUBE_DIMENSION: usize = 20;
/// Largest vertex count a generated daisy cube may have.
pub const MAX_DAISY_VERTICES: usize = 1 << 20;
/// Largest class count the census enumerates.
pub const MAX_CENSUS_CLASSES: usize = 5;

/// A graph whose vertices carry distinct binary labels; edges join labels at
/// Hamming distance one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub labeling: BinaryLabeling,
}

impl LabeledGraph {
    /// Induced subgraph of the hypercube on `labels`. Vertices are numbered
    /// in lexicographic order of their strings.
    pub fn from_labels(width: usize, mut labels: Vec<Bits>) -> Result<Self> {
        labels.sort_by_key(|b| b.to_string());
        labels.dedup();
        let labeling = BinaryLabeling::new(width, labels)?;
        let index = labeling.index();
        let mut edges = Vec::new();
        // Labels at Hamming distance one are comparable, so clearing each
        // set bit finds every edge exactly once.
        for (v, b) in labeling.labels().iter().enumerate() {
            for i in b.ones() {
                if let Some(&u) = index.get(&b.with(i, false)) {
                    edges.push((u, v));
                }
            }
        }
        let graph = Graph::new(labeling.len(), &edges)?;
        Ok(LabeledGraph { graph, labeling })
    }

    pub fn to_record(&self) -> crate::graph::GraphRecord {
        let mut rec = self.graph.to_record();
        rec.labels = Some(self.labeling.to_strings());
        rec
    }
}

fn check_dimension(n: usize) -> Result<()> {
    if n > MAX_CUBE_DIMENSION {
        return Err(Error::BudgetExceeded(format!("dimension {n} exceeds {MAX_CUBE_DIMENSION}")));
    }
    Ok(())
}

fn masks_to_labels(width: usize, masks: impl Iterator<Item = u64>) -> Vec<Bits> {
    masks.map(|m| Bits::from_mask(width, m)).collect()
}

/// `Q_n` with its canonical labeling; `Q_0` is a single vertex.
pub fn hypercube(n: usize) -> Result<LabeledGraph> {
    check_dimension(n)?;
    LabeledGraph::from_labels(n, masks_to_labels(n, 0..1u64 << n))
}

/// Fibonacci cube `Γ_n`: strings without two consecutive 1s.
pub fn fibonacci_cube(n: usize) -> Result<LabeledGraph> {
    if n < 1 {
        return Err(Error::InvalidArgument("Fibonacci cube needs n >= 1".into()));
    }
    check_dimension(n)?;
    LabeledGraph::from_labels(n, masks_to_labels(n, (0..1u64 << n).filter(|m| m & (m >> 1) == 0)))
}

/// Lucas cube `Λ_n`: Fibonacci strings that do not start and end with 1.
/// For `n = 1` the single position is both first and last, so `Λ_1 = K_1`.
pub fn lucas_cube(n: usize) -> Result<LabeledGraph> {
    if n < 1 {
        return Err(Error::InvalidArgument("Lucas cube needs n >= 1".into()));
    }
    check_dimension(n)?;
    let last = 1u64 << (n - 1);
    let ok = |m: &u64| m & (m >> 1) == 0 && !(m & 1 == 1 && m & last != 0);
    LabeledGraph::from_labels(n, masks_to_labels(n, (0..1u64 << n).filter(ok)))
}

/// `Q_n(X)`: the hypercube induced on the downward closure of `X`.
pub fn daisy_from_generators(n: usize, generators: &[Bits]) -> Result<LabeledGraph> {
    if generators.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    if let Some(bad) = generators.iter().find(|b| b.width() != n) {
        return Err(Error::WidthMismatch { expected: n, found: bad.width() });
    }
    check_dimension(n)?;
    let mut closure: HashSet<u64> = HashSet::new();
    for x in generators {
        let top = x.to_mask().expect("width checked");
        // Walk every submask of `top`.
        let mut sub = top;
        loop {
            closure.insert(sub);
            if closure.len() > MAX_DAISY_VERTICES {
                return Err(Error::BudgetExceeded("daisy cube too large".into()));
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & top;
        }
    }
    LabeledGraph::from_labels(n, masks_to_labels(n, closure.into_iter()))
}

/// Largest clique count [`simplex_graph`] will enumerate.
pub const MAX_CLIQUES: usize = 1 << 20;

/// Simplex graph `𝒦(G)`: all cliques of `G` (including the empty one),
/// adjacent when they differ in one vertex. Each clique is labeled by its
/// characteristic vector, position `i` standing for vertex `i`.
pub fn simplex_graph(g: &Graph) -> Result<LabeledGraph> {
    let n = g.vertex_count();
    let mut cliques: Vec<Bits> = Vec::new();
    let mut current = Vec::new();
    fn extend(g: &Graph, start: usize, current: &mut Vec<usize>, out: &mut Vec<Bits>) -> Result<()> {
        let mut b = Bits::zeros(g.vertex_count());
        for &v in current.iter() {
            b.set(v, true);
        }
        out.push(b);
        if out.len() > MAX_CLIQUES {
            return Err(Error::BudgetExceeded("too many cliques".into()));
        }
        for v in start..g.vertex_count() {
            if current.iter().all(|&u| g.has_edge(u, v)) {
                current.push(v);
                extend(g, v + 1, current, out)?;
                current.pop();
            }
        }
        Ok(())
    }
    extend(g, 0, &mut current, &mut cliques)?;
    LabeledGraph::from_labels(n, cliques)
}

/// A partial-cube certificate re-based at a vertex whose labeling is
/// downward closed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DaisyCert {
    pub cert: PartialCubeCert,
    pub root: usize,
}

impl DaisyCert {
    pub fn labeling(&self) -> &BinaryLabeling {
        &self.cert.labeling
    }

    pub fn class_count(&self) -> usize {
        self.cert.class_count()
    }
}

/// Certificate iff `g` is a daisy cube. Every vertex is tried as the root.
pub fn is_daisy_cube(g: &Graph) -> Option<DaisyCert> {
    let cert = is_partial_cube(g)?;
    daisy_from_cert(&cert)
}

pub(crate) fn daisy_from_cert(cert: &PartialCubeCert) -> Option<DaisyCert> {
    (0..cert.labeling.len()).find_map(|r| {
        let rebased = cert.rebase(r);
        rebased.labeling.is_downward_closed().then_some(DaisyCert { cert: rebased, root: r })
    })
}

pub fn is_downward_closed(labeling: &BinaryLabeling) -> bool {
    labeling.is_downward_closed()
}

/// Whether the labels of `subset` are closed downward inside the labeled
/// graph: every vertex below some member of `subset` is a member.
pub fn le_subgraph_check(labeling: &BinaryLabeling, subset: &[usize]) -> bool {
    let members: HashSet<usize> = subset.iter().copied().collect();
    (0..labeling.len())
        .filter(|v| !members.contains(v))
        .all(|v| !subset.iter().any(|&s| labeling.le(v, s)))
}

/// Down-sets of `B^k` as bitmasks over the `2^k` strings (`k <= 6`).
pub(crate) fn down_sets(k: usize) -> Vec<u64> {
    assert!(k <= 6);
    if k == 0 {
        return vec![0b0, 0b1];
    }
    let smaller = down_sets(k - 1);
    let half = 1u32 << (k - 1);
    let mut out = Vec::new();
    for &low in &smaller {
        for &high in &smaller {
            if high & !low == 0 {
                out.push(low | high << half);
            }
        }
    }
    out
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

/// Daisy cubes with exactly `k` Θ-classes, pairwise non-isomorphic.
///
/// Down-sets of `B^k` that contain every unit vector are reduced to the
/// lexicographically smallest image under coordinate permutations, then
/// deduplicated by graph isomorphism. Output is ordered by vertex count and
/// then by canonical set.
pub fn enumerate_daisy_cubes(k: usize) -> Result<Vec<LabeledGraph>> {
    if k > MAX_CENSUS_CLASSES {
        return Err(Error::BudgetExceeded(format!("census limited to {MAX_CENSUS_CLASSES} classes")));
    }
    let size = 1usize << k;
    let perms = permutations(k);
    // image[p][x]: string x with coordinates moved by perm p.
    let images: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| {
            (0..size)
                .map(|x| (0..k).filter(|&i| x >> i & 1 == 1).map(|i| 1 << p[i]).sum())
                .collect()
        })
        .collect();
    let uses_all = |d: u64| (0..k).all(|i| d >> (1u64 << i) & 1 == 1) && d & 1 == 1;
    let mut canon: Vec<u64> = down_sets(k)
        .into_iter()
        .filter(|&d| uses_all(d))
        .map(|d| {
            images
                .iter()
                .map(|img| (0..size).filter(|&x| d >> x & 1 == 1).fold(0u64, |acc, x| acc | 1 << img[x]))
                .min()
                .unwrap()
        })
        .collect();
    canon.sort_unstable_by_key(|&d| (d.count_ones(), d));
    canon.dedup();

    let mut out: Vec<LabeledGraph> = Vec::new();
    let mut buckets: HashMap<(usize, usize, Vec<usize>), Vec<usize>> = HashMap::new();
    for d in canon {
        let labels = masks_to_labels(k, (0..size as u64).filter(|&x| d >> x & 1 == 1));
        let lg = LabeledGraph::from_labels(k, labels)?;
        let key = (lg.graph.vertex_count(), lg.graph.edge_count(), lg.graph.degree_sequence());
        let bucket = buckets.entry(key).or_default();
        let mut duplicate = false;
        for &i in bucket.iter() {
            if graphs_isomorphic(&out[i].graph, &lg.graph)?.is_some() {
                duplicate = true;
                break;
            }
        }
        if !duplicate {
            bucket.push(out.len());
            out.push(lg);
        }
    }
    Ok(out)
}
