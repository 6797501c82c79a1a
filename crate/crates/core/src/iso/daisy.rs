use std::collections::{BTreeMap, BTreeSet};

use crate::daisy::{is_daisy_cube, DaisyCert};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Subgraph};
use crate::iso::{all_isomorphisms, forests_isomorphic, graphs_isomorphic};
use crate::partial_cube::{contract, halfspaces, is_partial_cube, ThetaPartition};
use crate::tau::{tau_graph, TauGraph};

/// A bijection from the Θ-classes of one partial cube to those of another.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassCorrespondence {
    map: Vec<usize>,
}

impl ClassCorrespondence {
    pub fn new(map: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; map.len()];
        for &c in &map {
            if c >= map.len() || std::mem::replace(&mut seen[c], true) {
                return Err(Error::InvalidArgument("class correspondence is not a bijection".into()));
            }
        }
        Ok(ClassCorrespondence { map })
    }

    pub fn identity(k: usize) -> Self {
        ClassCorrespondence { map: (0..k).collect() }
    }

    pub fn get(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }
}

/// Up to `limit` isomorphisms between two τ-graphs, as class
/// correspondences.
pub fn tau_correspondences(a: &TauGraph, b: &TauGraph, limit: usize) -> Result<Vec<ClassCorrespondence>> {
    Ok(all_isomorphisms(&a.graph, &b.graph, limit)?.into_iter().map(|map| ClassCorrespondence { map }).collect())
}

/// A subgraph of a top-level daisy cube: local vertex `v` is `orig[v]` of
/// the top graph, and `root` is the local vertex labeled all-zeros.
struct Level {
    graph: Graph,
    orig: Vec<usize>,
    root: usize,
}

struct LevelInfo {
    dc: DaisyCert,
    /// Local class index to the top-level class it lies in.
    global: Vec<usize>,
    tau: BTreeSet<(usize, usize)>,
}

impl LevelInfo {
    fn local(&self, global: usize) -> usize {
        self.global.iter().position(|&g| g == global).expect("active class")
    }
}

fn internal(msg: &str) -> Error {
    Error::Internal(msg.to_string())
}

fn pair(x: usize, y: usize) -> (usize, usize) {
    (x.min(y), x.max(y))
}

fn level_info(level: &Level, theta: &ThetaPartition) -> Result<LevelInfo> {
    let cert = is_partial_cube(&level.graph).ok_or_else(|| internal("subgraph is not a partial cube"))?;
    let rebased = cert.rebase(level.root);
    if !rebased.labeling.is_downward_closed() {
        return Err(internal("inherited root does not give a downward-closed labeling"));
    }
    let dc = DaisyCert { cert: rebased, root: level.root };
    let mut global = Vec::with_capacity(dc.class_count());
    for class in dc.cert.theta.classes() {
        let mut names = class.iter().map(|e| theta.class_of(Edge::new(level.orig[e.0], level.orig[e.1])));
        let first = names.next().flatten().ok_or_else(|| internal("edge missing from the top graph"))?;
        if !names.all(|c| c == Some(first)) {
            return Err(internal("a class of the subgraph meets two top-level classes"));
        }
        global.push(first);
    }
    if global.iter().collect::<BTreeSet<_>>().len() != global.len() {
        return Err(internal("two classes of the subgraph lie in one top-level class"));
    }
    let tau = tau_graph(&level.graph, &dc.cert).graph.edges().map(|e| pair(global[e.0], global[e.1])).collect();
    Ok(LevelInfo { dc, global, tau })
}

struct Context<'a> {
    theta_a: &'a ThetaPartition,
    theta_b: &'a ThetaPartition,
}

/// The root side `W` of a class, its boundary `U`, and the matching from
/// the boundary across the class.
struct Split {
    near: Vec<usize>,
    boundary: Vec<usize>,
    across: BTreeMap<usize, usize>,
}

fn split(level: &Level, info: &LevelInfo, class: usize) -> Result<Split> {
    let hs = halfspaces(&level.graph, &info.dc.cert, class, None)?;
    if !hs.w_ab.contains(&level.root) {
        return Err(internal("root is not on the base side of its class"));
    }
    if hs.w_ba != hs.u_ba {
        return Err(internal("far side of a daisy class is not peripheral"));
    }
    let near_set: BTreeSet<usize> = hs.w_ab.iter().copied().collect();
    let mut across = BTreeMap::new();
    for e in info.dc.cert.theta.class(class) {
        let (x, y) = if near_set.contains(&e.0) { (e.0, e.1) } else { (e.1, e.0) };
        across.insert(x, y);
    }
    if across.len() != hs.u_ab.len() || across.len() != hs.w_ba.len() {
        return Err(internal("class is not a matching between boundary and far side"));
    }
    Ok(Split { near: hs.w_ab, boundary: hs.u_ab, across })
}

fn sublevel(level: &Level, vertices: &[usize]) -> Result<(Level, Subgraph)> {
    let sub = level.graph.induced_subgraph(vertices)?;
    let root = sub.from_parent[level.root].ok_or_else(|| internal("root left the subgraph"))?;
    let orig = sub.to_parent.iter().map(|&v| level.orig[v]).collect();
    Ok((Level { graph: sub.graph.clone(), orig, root }, sub))
}

/// `λ` for one level of the recursion, local vertex to local vertex.
fn build(a: &Level, b: &Level, ups: &BTreeMap<usize, usize>, ctx: &Context) -> Result<Vec<usize>> {
    if a.graph.vertex_count() != b.graph.vertex_count() {
        return Err(internal("levels differ in size"));
    }
    let ia = level_info(a, ctx.theta_a)?;
    let ib = level_info(b, ctx.theta_b)?;
    let active_a: BTreeSet<usize> = ia.global.iter().copied().collect();
    let active_b: BTreeSet<usize> = ib.global.iter().copied().collect();
    if active_a != ups.keys().copied().collect() || active_b != ups.values().copied().collect() {
        return Err(internal("surviving classes do not match the restricted correspondence"));
    }
    // Claim 1: the restricted correspondence is a τ-isomorphism.
    let image: BTreeSet<(usize, usize)> = ia.tau.iter().map(|&(i, j)| pair(ups[&i], ups[&j])).collect();
    if image != ib.tau {
        return Err(internal("restricted correspondence is not a τ-isomorphism"));
    }

    let lambda = if ia.tau.is_empty() || ups.len() <= 2 {
        by_coordinates(a, &ia, b, &ib, ups)?
    } else {
        let mut degree: BTreeMap<usize, usize> = ups.keys().map(|&c| (c, 0)).collect();
        for &(i, j) in &ia.tau {
            *degree.get_mut(&i).unwrap() += 1;
            *degree.get_mut(&j).unwrap() += 1;
        }
        let en = *degree.iter().find(|(_, &d)| d == 1).ok_or_else(|| internal("forest without a leaf"))?.0;
        let alpha = ia.tau.iter().find_map(|&(i, j)| (i == en).then_some(j).or((j == en).then_some(i))).unwrap();
        extend(a, &ia, b, &ib, ups, ctx, en, alpha)?
    };

    if !a.graph.is_isomorphism(&b.graph, &lambda) {
        return Err(internal("level map is not an isomorphism"));
    }
    for e in a.graph.edges() {
        let ca = ctx.theta_a.class_of(Edge::new(a.orig[e.0], a.orig[e.1])).unwrap();
        let f = Edge::new(b.orig[lambda[e.0]], b.orig[lambda[e.1]]);
        if ctx.theta_b.class_of(f) != Some(ups[&ca]) {
            return Err(internal("level map does not respect the class correspondence"));
        }
    }
    Ok(lambda)
}

/// Hypercubes and graphs with at most two classes: permute the coordinates
/// of the root-based labels.
fn by_coordinates(a: &Level, ia: &LevelInfo, b: &Level, ib: &LevelInfo, ups: &BTreeMap<usize, usize>) -> Result<Vec<usize>> {
    let perm: Vec<usize> = ia.global.iter().map(|g| ib.local(ups[g])).collect();
    let index = ib.dc.labeling().index();
    (0..a.graph.vertex_count())
        .map(|v| {
            let moved = ia.dc.labeling().label(v).permute(&perm);
            index.get(&moved).copied().ok_or_else(|| internal("permuted labels differ from the target labels"))
        })
        .collect::<Result<Vec<usize>>>()
        .and_then(|m| (b.graph.vertex_count() == m.len()).then_some(m).ok_or_else(|| internal("size mismatch")))
}

#[allow(clippy::too_many_arguments)]
fn extend(
    a: &Level,
    ia: &LevelInfo,
    b: &Level,
    ib: &LevelInfo,
    ups: &BTreeMap<usize, usize>,
    ctx: &Context,
    en: usize,
    alpha: usize,
) -> Result<Vec<usize>> {
    let fn_ = ups[&en];
    let sa = split(a, ia, ia.local(en))?;
    let sb = split(b, ib, ib.local(fn_))?;
    // The contraction is the root side.
    contract(&a.graph, &ia.dc.cert, ia.local(en))?;
    contract(&b.graph, &ib.dc.cert, ib.local(fn_))?;

    let (abar, a_of) = sublevel(a, &sa.near)?;
    let (bbar, b_of) = sublevel(b, &sb.near)?;
    if is_daisy_cube(&abar.graph).is_none() || is_daisy_cube(&bbar.graph).is_none() {
        return Err(internal("contraction is not a daisy cube"));
    }
    // Claim 2.
    let (aa, _) = sublevel(a, &sa.boundary)?;
    let (bb, _) = sublevel(b, &sb.boundary)?;
    let ia_bb = level_info(&aa, ctx.theta_a)?;
    let ib_bb = level_info(&bb, ctx.theta_b)?;
    // Claim 4.
    let rest: BTreeSet<usize> = ups.keys().copied().filter(|&c| c != en && c != alpha).collect();
    if ia_bb.global.iter().copied().collect::<BTreeSet<_>>() != rest
        || ib_bb.global.iter().copied().collect::<BTreeSet<_>>() != rest.iter().map(|c| ups[c]).collect()
    {
        return Err(internal("expansion subgraph does not carry exactly the other n-2 classes"));
    }
    // Claim 3: the neighbor class lies inside the contraction and splits it
    // into the expansion subgraph and the rest.
    claim3(a, ia, &sa, alpha, ctx.theta_a)?;
    claim3(b, ib, &sb, ups[&alpha], ctx.theta_b)?;

    let inner: BTreeMap<usize, usize> = ups.iter().filter(|(&c, _)| c != en).map(|(&c, &d)| (c, d)).collect();
    let lbar = build(&abar, &bbar, &inner, ctx)?;

    let b_boundary: BTreeSet<usize> = sb.boundary.iter().copied().collect();
    let mut lambda = vec![usize::MAX; a.graph.vertex_count()];
    for &v in &sa.near {
        lambda[v] = b_of.to_parent[lbar[a_of.from_parent[v].unwrap()]];
    }
    for &u in &sa.boundary {
        if !b_boundary.contains(&lambda[u]) {
            return Err(internal("restriction does not map the expansion subgraphs onto each other"));
        }
        lambda[sa.across[&u]] = sb.across[&lambda[u]];
    }
    if lambda.contains(&usize::MAX) {
        return Err(internal("extension left vertices unmapped"));
    }
    Ok(lambda)
}

fn claim3(level: &Level, info: &LevelInfo, s: &Split, alpha: usize, theta: &ThetaPartition) -> Result<()> {
    let near: BTreeSet<usize> = s.near.iter().copied().collect();
    let boundary: BTreeSet<usize> = s.boundary.iter().copied().collect();
    let local_alpha = info.local(alpha);
    for e in info.dc.cert.theta.class(local_alpha) {
        if !near.contains(&e.0) || !near.contains(&e.1) {
            return Err(internal("neighbor class is cut by the contraction"));
        }
    }
    for e in level.graph.edges() {
        if !near.contains(&e.0) || !near.contains(&e.1) {
            continue;
        }
        let crosses = boundary.contains(&e.0) != boundary.contains(&e.1);
        let is_alpha = theta.class_of(Edge::new(level.orig[e.0], level.orig[e.1])) == Some(alpha);
        if crosses != is_alpha {
            return Err(internal("neighbor class does not separate the expansion subgraph"));
        }
    }
    Ok(())
}

/// Outcome of checking a candidate `λ` against the full contract.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LambdaCheck {
    pub isomorphism: bool,
    pub classes: bool,
    pub contractions: bool,
}

impl LambdaCheck {
    pub fn all(&self) -> bool {
        self.isomorphism && self.classes && self.contractions
    }
}

/// Checks that `λ` is an isomorphism, that `uv ∈ ℰ_i ⇔ λ(u)λ(v) ∈ ℱ_Υ(i)`,
/// and that for every class `j` it carries the root side of `ℰ_j` (the
/// image of `A/ℰ_j`) isomorphically onto the root side of `ℱ_Υ(j)`.
pub fn verify_lambda(
    a: &Graph,
    da: &DaisyCert,
    b: &Graph,
    db: &DaisyCert,
    ups: &ClassCorrespondence,
    lambda: &[usize],
) -> Result<LambdaCheck> {
    let isomorphism = lambda.len() == a.vertex_count() && a.is_isomorphism(b, lambda);
    if !isomorphism {
        return Ok(LambdaCheck { isomorphism, classes: false, contractions: false });
    }
    let (ta, tb) = (&da.cert.theta, &db.cert.theta);
    let classes = a.edges().all(|e| ta.class_of(e).map(|c| ups.get(c)) == tb.class_of(Edge::new(lambda[e.0], lambda[e.1])));
    let mut contractions = classes;
    for j in 0..ta.len() {
        if !contractions {
            break;
        }
        let wa = halfspaces(a, &da.cert, j, None)?.w_ab;
        let wb = halfspaces(b, &db.cert, ups.get(j), None)?.w_ab;
        let mut image: Vec<usize> = wa.iter().map(|&v| lambda[v]).collect();
        image.sort_unstable();
        if image != wb {
            contractions = false;
            break;
        }
        let sa = a.induced_subgraph(&wa)?;
        let sb = b.induced_subgraph(&wb)?;
        let restricted: Vec<usize> = sa.to_parent.iter().map(|&v| sb.from_parent[lambda[v]].unwrap()).collect();
        contractions = sa.graph.is_isomorphism(&sb.graph, &restricted);
    }
    Ok(LambdaCheck { isomorphism, classes, contractions })
}

/// Builds an isomorphism `λ: A -> B` with `uv ∈ ℰ_i ⇔ λ(u)λ(v) ∈ ℱ_Υ(i)`
/// by peeling a leaf class of the τ-forest, recursing on the contraction,
/// and extending across the peeled class.
pub fn daisy_iso_from_tau(
    a: &Graph,
    da: &DaisyCert,
    b: &Graph,
    db: &DaisyCert,
    ups: &ClassCorrespondence,
) -> Result<Vec<usize>> {
    let ta = tau_graph(a, &da.cert);
    let tb = tau_graph(b, &db.cert);
    if !ta.is_forest() || !tb.is_forest() {
        return Err(Error::NotForest);
    }
    if ups.len() != ta.graph.vertex_count() || !ta.graph.is_isomorphism(&tb.graph, ups.as_slice()) {
        return Err(Error::NotTauIsomorphism);
    }
    if a.vertex_count() != b.vertex_count() {
        return Err(internal("τ-isomorphic daisy cubes differ in size"));
    }
    let ctx = Context { theta_a: &da.cert.theta, theta_b: &db.cert.theta };
    let top_a = Level { graph: a.clone(), orig: (0..a.vertex_count()).collect(), root: da.root };
    let top_b = Level { graph: b.clone(), orig: (0..b.vertex_count()).collect(), root: db.root };
    let map: BTreeMap<usize, usize> = ups.as_slice().iter().copied().enumerate().collect();
    let lambda = build(&top_a, &top_b, &map, &ctx)?;
    if !verify_lambda(a, da, b, db, ups, &lambda)?.all() {
        return Err(internal("constructed map fails verification"));
    }
    Ok(lambda)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ViaTau {
    pub isomorphic: bool,
    pub lambda: Option<Vec<usize>>,
    pub correspondence: Option<ClassCorrespondence>,
}

/// Decides isomorphism of two daisy cubes with forest τ-graphs by comparing
/// the forests; a positive answer comes with a verified `λ`.
pub fn daisy_isomorphic_via_tau(a: &Graph, b: &Graph) -> Result<ViaTau> {
    let da = is_daisy_cube(a).ok_or(Error::NotDaisyCube)?;
    let db = is_daisy_cube(b).ok_or(Error::NotDaisyCube)?;
    via_tau_with(a, &da, b, &db)
}

pub(crate) fn via_tau_with(a: &Graph, da: &DaisyCert, b: &Graph, db: &DaisyCert) -> Result<ViaTau> {
    let ta = tau_graph(a, &da.cert);
    let tb = tau_graph(b, &db.cert);
    match forests_isomorphic(&ta.graph, &tb.graph)? {
        Some(map) => {
            let ups = ClassCorrespondence::new(map)?;
            let lambda = daisy_iso_from_tau(a, da, b, db, &ups)?;
            Ok(ViaTau { isomorphic: true, lambda: Some(lambda), correspondence: Some(ups) })
        }
        None => {
            match graphs_isomorphic(a, b) {
                Ok(Some(_)) => return Err(internal("graphs are isomorphic but their τ-forests are not")),
                Ok(None) | Err(Error::BudgetExceeded(_)) => {}
                Err(e) => return Err(e),
            }
            Ok(ViaTau { isomorphic: false, lambda: None, correspondence: None })
        }
    }
}
