//! Property suites over fixtures, generated families and the daisy census.
//! Each suite reports its instance count and every failing instance with a
//! JSON reproducer.

use std::fmt::Write as _;
use std::sync::OnceLock;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::daisy::{enumerate_daisy_cubes, fibonacci_cube, hypercube, is_daisy_cube, lucas_cube, LabeledGraph, MAX_CENSUS_CLASSES};
use crate::error::{Error, Result};
use crate::fixtures;
use crate::graph::Graph;
use crate::iso::{
    daisy_iso_from_tau, daisy_isomorphic_via_tau, forest_canonical, graphs_isomorphic, tau_correspondences, verify_lambda,
};
use crate::partial_cube::{is_median, is_partial_cube};
use crate::plane::{
    allowed_edges, fibonaccene, inner_dual, is_elementary, is_peripherally_2_colorable, is_weakly_elementary,
    realize_resonance, resonance_graph, tree_to_p2c, PlaneGraph,
};
use crate::tau::{tau_after_contraction, tau_graph, tau_of, tau_without};

/// Suite identifiers in report order.
pub const SUITES: [&str; 11] = [
    "lemma3.1",
    "theorem3.2",
    "corollary3.3",
    "lemma4.1",
    "lemma4.2",
    "theorem4.3",
    "lemma4.4",
    "prop4.5",
    "fig1",
    "fig2",
    "fig3",
];

/// Cap on τ-isomorphisms tried per census member.
const MAX_CORRESPONDENCES: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Largest census class count.
    pub k: usize,
    /// Largest Fibonacci / Lucas cube order.
    pub n: usize,
    /// Largest tree fed to the polygon gluing.
    pub trees: usize,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { k: 5, n: 8, trees: 8, seed: 0 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Failure {
    pub instance: String,
    pub reason: String,
    pub reproducer: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StatementReport {
    pub statement: String,
    pub instances: usize,
    pub passes: usize,
    pub failures: Vec<Failure>,
}

impl StatementReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub statements: Vec<StatementReport>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.statements.iter().all(StatementReport::passed)
    }

    /// One line per statement, then one line per failure.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for s in &self.statements {
            let tag = if s.passed() { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "{tag} {:<13} {}/{}", s.statement, s.passes, s.instances);
            for f in &s.failures {
                let _ = writeln!(out, "  {}: {} {}", f.instance, f.reason, f.reproducer);
            }
        }
        out
    }
}

/// `all` or a comma-separated list of suite ids, returned in report order.
pub fn parse_suites(selector: &str) -> Result<Vec<&'static str>> {
    if selector == "all" {
        return Ok(SUITES.to_vec());
    }
    let mut picked = Vec::new();
    for part in selector.split(',').map(str::trim) {
        let id = SUITES
            .iter()
            .find(|s| **s == part)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite {part:?}")))?;
        picked.push(*id);
    }
    picked.sort_by_key(|id| SUITES.iter().position(|s| s == id));
    picked.dedup();
    Ok(picked)
}

/// Runs the suites concurrently. The report lists them in [`SUITES`] order.
pub fn verify(suites: &[&str], opts: &VerifyOptions) -> Result<VerifyReport> {
    if opts.k == 0 || opts.k > MAX_CENSUS_CLASSES {
        return Err(Error::InvalidArgument(format!("k must lie in 1..={MAX_CENSUS_CLASSES}")));
    }
    if opts.n < 3 || opts.n > 16 {
        return Err(Error::InvalidArgument("n must lie in 3..=16".into()));
    }
    if opts.trees == 0 || opts.trees > 12 {
        return Err(Error::InvalidArgument("trees must lie in 1..=12".into()));
    }
    let mut ids = suites.to_vec();
    ids.sort_by_key(|id| SUITES.iter().position(|s| s == id));
    let statements = ids.par_iter().map(|id| run_suite(id, opts)).collect::<Result<Vec<_>>>()?;
    Ok(VerifyReport { statements })
}

fn run_suite(id: &str, opts: &VerifyOptions) -> Result<StatementReport> {
    let cases = match id {
        "lemma3.1" => cube_characterization(opts)?,
        "theorem3.2" => constructive_isomorphisms(opts)?,
        "corollary3.3" => isomorphism_decision(opts)?,
        "lemma4.1" => p2c_unions()?,
        "lemma4.2" => resonance_daisy_forests()?,
        "theorem4.3" => realization(opts)?,
        "lemma4.4" => fibonacci_lucas(opts),
        "prop4.5" => lucas_cycles(opts),
        "fig1" => triangle_trio(),
        "fig2" => complete_tau(),
        "fig3" => contraction_restriction(opts)?,
        other => return Err(Error::InvalidArgument(format!("unknown suite {other:?}"))),
    };
    Ok(tally(id, cases))
}

/// A failed check: the reason, shown next to the reproducer.
struct Fail(String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(format!("error: {e}"))
    }
}

type Verdict = std::result::Result<(), Fail>;
type Check = Box<dyn Fn() -> Verdict + Send + Sync>;

struct Case {
    name: String,
    reproducer: Value,
    check: Check,
}

fn case(name: impl Into<String>, reproducer: Value, check: impl Fn() -> Verdict + Send + Sync + 'static) -> Case {
    Case { name: name.into(), reproducer, check: Box::new(check) }
}

fn ensure(cond: bool, reason: impl FnOnce() -> String) -> Verdict {
    if cond {
        Ok(())
    } else {
        Err(Fail(reason()))
    }
}

fn tally(statement: &str, cases: Vec<Case>) -> StatementReport {
    let verdicts: Vec<Verdict> = cases.par_iter().map(|c| (c.check)()).collect();
    let instances = cases.len();
    let mut failures = Vec::new();
    for (c, v) in cases.into_iter().zip(verdicts) {
        if let Err(Fail(reason)) = v {
            failures.push(Failure { instance: c.name, reason, reproducer: c.reproducer });
        }
    }
    StatementReport { statement: statement.to_string(), instances, passes: instances - failures.len(), failures }
}

fn census(k: usize) -> Result<&'static [LabeledGraph]> {
    static CENSUS: OnceLock<Vec<Vec<LabeledGraph>>> = OnceLock::new();
    if k > MAX_CENSUS_CLASSES {
        return Err(Error::BudgetExceeded(format!("census limited to {MAX_CENSUS_CLASSES} classes")));
    }
    let all = CENSUS.get_or_init(|| {
        (0..=MAX_CENSUS_CLASSES)
            .map(|k| if k == 0 { Vec::new() } else { enumerate_daisy_cubes(k).expect("census within limits") })
            .collect()
    });
    Ok(&all[k])
}

fn forest_members(k: usize) -> Result<Vec<&'static LabeledGraph>> {
    Ok(census(k)?.iter().filter(|a| tau_of(&a.graph).map(|t| t.is_forest()).unwrap_or(false)).collect())
}

fn iso(a: &Graph, b: &Graph) -> Result<bool> {
    Ok(graphs_isomorphic(a, b)?.is_some())
}

fn shuffled(g: &Graph, seed: u64) -> Graph {
    let mut perm: Vec<usize> = (0..g.vertex_count()).collect();
    perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    g.relabel(&perm)
}

fn cube_characterization(opts: &VerifyOptions) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for k in 1..=opts.k {
        for (i, a) in census(k)?.iter().enumerate() {
            let g = a.graph.clone();
            cases.push(case(format!("census k={k} #{i}"), json!({ "graph": a.to_record() }), move || {
                let edgeless = tau_of(&g)?.is_edgeless();
                let cube = iso(&g, &hypercube(k)?.graph)?;
                ensure(edgeless == cube, || format!("tau edgeless = {edgeless} but cube = {cube}"))
            }));
        }
    }
    if opts.k >= 2 {
        cases.push(case("census k=2 is {P3, Q2}", json!({ "k": 2 }), || {
            let members = census(2)?;
            ensure(
                members.len() == 2 && iso(&members[0].graph, &Graph::path(3))? && iso(&members[1].graph, &Graph::cycle(4))?,
                || format!("census has {} members", members.len()),
            )
        }));
    }
    Ok(cases)
}

fn constructive_isomorphisms(opts: &VerifyOptions) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for k in 1..=opts.k {
        for (i, a) in forest_members(k)?.into_iter().enumerate() {
            let g = a.graph.clone();
            let h = shuffled(&g, opts.seed.wrapping_add((k * 1000 + i) as u64));
            let repro = json!({ "a": a.to_record(), "b": h.to_record() });
            cases.push(case(format!("k={k} forest #{i}"), repro, move || {
                let da = is_daisy_cube(&g).ok_or(Error::NotDaisyCube)?;
                let db = is_daisy_cube(&h).ok_or(Error::NotDaisyCube)?;
                let ta = tau_graph(&g, &da.cert);
                let tb = tau_graph(&h, &db.cert);
                let ups_all = tau_correspondences(&ta, &tb, MAX_CORRESPONDENCES)?;
                ensure(!ups_all.is_empty(), || "no tau isomorphism".into())?;
                for ups in &ups_all {
                    let lambda = daisy_iso_from_tau(&g, &da, &h, &db, ups)?;
                    let check = verify_lambda(&g, &da, &h, &db, ups, &lambda)?;
                    ensure(check.all(), || format!("correspondence {:?} gives {check:?}", ups.as_slice()))?;
                }
                Ok(())
            }));
        }
    }
    Ok(cases)
}

fn isomorphism_decision(opts: &VerifyOptions) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for k in 1..=opts.k {
        let members = forest_members(k)?;
        let mut pairs: Vec<(String, Graph, Graph)> = Vec::new();
        for (i, a) in members.iter().enumerate() {
            for (j, b) in members.iter().enumerate().skip(i) {
                pairs.push((format!("k={k} #{i} vs #{j}"), a.graph.clone(), b.graph.clone()));
            }
            let relabeled = shuffled(&a.graph, opts.seed.wrapping_add(i as u64));
            pairs.push((format!("k={k} #{i} vs relabeled"), a.graph.clone(), relabeled));
        }
        for (name, a, b) in pairs {
            let repro = json!({ "a": a.to_record(), "b": b.to_record() });
            cases.push(case(name, repro, move || {
                let graphs = iso(&a, &b)?;
                let codes = forest_canonical(&tau_of(&a)?.graph)? == forest_canonical(&tau_of(&b)?.graph)?;
                let via = daisy_isomorphic_via_tau(&a, &b)?;
                ensure(graphs == codes && via.isomorphic == graphs, || {
                    format!("graph iso {graphs}, forest codes equal {codes}, via tau {}", via.isomorphic)
                })
            }));
        }
    }
    Ok(cases)
}

fn p2c_fixtures() -> Result<Vec<(String, PlaneGraph)>> {
    Ok(vec![
        ("hexagon".into(), fixtures::hexagon()),
        ("fibonaccene(2)".into(), fibonaccene(2)?),
        ("fibonaccene(3)".into(), fibonaccene(3)?),
        ("glued K1,3".into(), tree_to_p2c(&Graph::star(3), 0)?),
    ])
}

fn union_of(parts: &[&PlaneGraph]) -> Result<PlaneGraph> {
    PlaneGraph::disjoint_union(parts)
}

fn p2c_unions() -> Result<Vec<Case>> {
    let base = p2c_fixtures()?;
    let m = base.len();
    let mut picks: Vec<Vec<usize>> = Vec::new();
    for i in 0..m {
        picks.push(vec![i]);
        for j in i..m {
            picks.push(vec![i, j]);
            for l in j..m {
                picks.push(vec![i, j, l]);
            }
        }
    }
    let mut cases = Vec::new();
    for pick in picks {
        let parts: Vec<PlaneGraph> = pick.iter().map(|&i| base[i].1.clone()).collect();
        let name = pick.iter().map(|&i| base[i].0.as_str()).collect::<Vec<_>>().join(" + ");
        let g = union_of(&parts.iter().collect::<Vec<_>>())?;
        cases.push(case(name, json!({ "plane": g.to_record() }), move || {
            for p in &parts {
                ensure(is_peripherally_2_colorable(p), || "part is not peripherally 2-colorable".into())?;
            }
            let r = resonance_graph(&g)?;
            let tau = tau_of(&r.graph)?;
            ensure(tau.is_forest(), || "tau of the resonance graph has a cycle".into())?;
            let duals: Vec<Graph> = parts.iter().map(inner_dual).collect();
            ensure(duals.iter().all(Graph::is_tree), || "an inner dual is not a tree".into())?;
            let expected = Graph::disjoint_union(&duals.iter().collect::<Vec<_>>());
            ensure(iso(&tau.graph, &expected)?, || "tau differs from the union of inner duals".into())
        }));
    }
    Ok(cases)
}

/// Plane bipartite fixtures, not all elementary or weakly elementary.
fn plane_fixtures() -> Result<Vec<(String, PlaneGraph)>> {
    let mut out = p2c_fixtures()?;
    out.push(("two squares + bridge".into(), fixtures::two_squares_bridge()));
    out.push(("fibonaccene(4)".into(), fibonaccene(4)?));
    if let Some(pg) = fixtures::non_weakly_elementary()? {
        out.push(("nested squares + spokes".into(), pg));
    }
    out.push(("hexagon + bridge fixture".into(), union_of(&[&fixtures::hexagon(), &fixtures::two_squares_bridge()])?));
    out.push(("glued P4".into(), tree_to_p2c(&Graph::path(4), 0)?));
    Ok(out)
}

fn resonance_daisy_forests() -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for (name, pg) in plane_fixtures()? {
        cases.push(case(name, json!({ "plane": pg.to_record() }), move || {
            let r = resonance_graph(&pg)?;
            let weak = is_weakly_elementary(&pg)?;
            if pg.graph().is_connected() && weak {
                ensure(is_partial_cube(&r.graph).is_some(), || "resonance graph is not a partial cube".into())?;
            }
            if is_daisy_cube(&r.graph).is_none() || r.graph.edge_count() == 0 {
                return Ok(());
            }
            let tau = tau_of(&r.graph)?;
            ensure(tau.is_forest(), || "daisy resonance graph with a cyclic tau".into())?;
            let forbidden: Vec<_> = {
                let allowed = allowed_edges(pg.graph())?;
                pg.graph().edges().filter(|e| !allowed.contains(e)).collect()
            };
            let dual = inner_dual(&pg.without_edges(&forbidden)?);
            ensure(iso(&tau.graph, &dual)?, || "tau differs from the inner dual of the allowed subgraph".into())
        }));
    }
    Ok(cases)
}

fn realization(opts: &VerifyOptions) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for (name, pg) in plane_fixtures()? {
        cases.push(case(format!("necessity: {name}"), json!({ "plane": pg.to_record() }), move || {
            let r = resonance_graph(&pg)?;
            if r.graph.edge_count() == 0 || is_daisy_cube(&r.graph).is_none() {
                return Ok(());
            }
            ensure(tau_of(&r.graph)?.is_forest(), || "daisy resonance graph with a cyclic tau".into())
        }));
    }
    let seed = opts.seed;
    for k in 1..=opts.k {
        for (i, a) in census(k)?.iter().enumerate() {
            let h = a.graph.clone();
            cases.push(case(format!("round trip k={k} #{i}"), json!({ "graph": a.to_record(), "seed": seed }), move || {
                let cert = is_daisy_cube(&h).ok_or(Error::NotDaisyCube)?;
                let tau = tau_graph(&h, &cert.cert);
                match realize_resonance(&h, &cert, seed) {
                    Err(Error::NotRealizable) => ensure(!tau.is_forest(), || "forest tau refused".into()),
                    Err(e) => Err(e.into()),
                    Ok(pg) => {
                        ensure(tau.is_forest(), || "cyclic tau realized".into())?;
                        ensure(iso(&resonance_graph(&pg)?.graph, &h)?, || "resonance graph differs".into())?;
                        let tree = tau.graph.is_tree();
                        let elementary = is_elementary(pg.graph())?;
                        ensure(tree == elementary, || format!("tau tree {tree} but elementary {elementary}"))
                    }
                }
            }));
        }
    }
    for size in 1..=opts.trees {
        for (i, t) in fixtures::trees(size)?.into_iter().enumerate() {
            cases.push(case(format!("tree n={size} #{i}"), json!({ "tree": t.to_record(), "seed": seed }), move || {
                let pg = tree_to_p2c(&t, seed)?;
                ensure(is_peripherally_2_colorable(&pg), || "not peripherally 2-colorable".into())?;
                ensure(iso(&inner_dual(&pg), &t)?, || "inner dual differs from the tree".into())
            }));
        }
    }
    Ok(cases)
}

fn fibonacci_lucas(opts: &VerifyOptions) -> Vec<Case> {
    let mut cases = Vec::new();
    for n in 1..=opts.n {
        cases.push(case(format!("fibonacci n={n}"), json!({ "fibonacci": n }), move || {
            let g = fibonacci_cube(n)?.graph;
            ensure(iso(&tau_of(&g)?.graph, &Graph::path(n))?, || "tau is not a path".into())
        }));
    }
    for n in 3..=opts.n {
        cases.push(case(format!("lucas n={n}"), json!({ "lucas": n }), move || {
            let g = lucas_cube(n)?.graph;
            ensure(iso(&tau_of(&g)?.graph, &Graph::cycle(n))?, || "tau is not a cycle".into())?;
            let cert = is_daisy_cube(&g).ok_or(Error::NotDaisyCube)?;
            match realize_resonance(&g, &cert, 0) {
                Err(Error::NotRealizable) => Ok(()),
                Err(e) => Err(e.into()),
                Ok(_) => Err(Fail("lucas cube realized".into())),
            }
        }));
    }
    cases
}

fn lucas_cycles(opts: &VerifyOptions) -> Vec<Case> {
    (3..=opts.n)
        .map(|n| {
            case(format!("lucas n={n}"), json!({ "lucas": n }), move || {
                let t = tau_of(&lucas_cube(n)?.graph)?.graph;
                let cycle = t.vertex_count() == n && t.is_connected() && (0..n).all(|c| t.degree(c) == 2);
                ensure(cycle && !t.is_forest(), || "tau is not a cycle".into())
            })
        })
        .collect()
}

fn triangle_trio() -> Vec<Case> {
    let trio = fixtures::triangle_tau_trio();
    let mut cases = Vec::new();
    for (name, g) in trio.iter().cloned() {
        cases.push(case(format!("tau({name}) = K3"), json!({ "graph": g.to_record() }), move || {
            ensure(iso(&tau_of(&g)?.graph, &Graph::complete(3))?, || "tau is not K3".into())
        }));
    }
    for i in 0..3 {
        for j in i + 1..3 {
            let (a, b) = (trio[i].clone(), trio[j].clone());
            let repro = json!({ "a": a.1.to_record(), "b": b.1.to_record() });
            cases.push(case(format!("{} vs {}", a.0, b.0), repro, move || {
                ensure(!iso(&a.1, &b.1)?, || "graphs are isomorphic".into())
            }));
        }
    }
    let [c6, l3, q] = trio;
    cases.push(case("C6 neither daisy nor median", json!({ "graph": c6.1.to_record() }), move || {
        ensure(is_daisy_cube(&c6.1).is_none() && !is_median(&c6.1)?, || "C6 misclassified".into())
    }));
    cases.push(case("L3 median", json!({ "graph": l3.1.to_record() }), move || {
        ensure(is_median(&l3.1)?, || "K1,3 is not median".into())
    }));
    cases.push(case("Q3- daisy, not median", json!({ "graph": q.1.to_record() }), move || {
        ensure(is_daisy_cube(&q.1).is_some() && !is_median(&q.1)?, || "Q3- misclassified".into())
    }));
    cases
}

fn complete_tau() -> Vec<Case> {
    let mut cases = vec![case("at least two with tau = K5", json!({ "k": 5 }), || {
        let found = fixtures::complete_tau_members(5)?;
        ensure(found.len() >= 2, || format!("found {}", found.len()))
    })];
    let members = fixtures::complete_tau_members(5).unwrap_or_default();
    for (i, a) in members.iter().enumerate() {
        for (j, b) in members.iter().enumerate().skip(i + 1) {
            let (ga, gb) = (a.graph.clone(), b.graph.clone());
            let repro = json!({ "a": a.to_record(), "b": b.to_record() });
            cases.push(case(format!("#{i} vs #{j}"), repro, move || {
                ensure(!iso(&ga, &gb)?, || "census members are isomorphic".into())?;
                match daisy_isomorphic_via_tau(&ga, &gb) {
                    Err(Error::NotForest) => Ok(()),
                    other => Err(Fail(format!("via tau did not refuse: {other:?}"))),
                }
            }));
        }
    }
    cases
}

fn contraction_restriction(opts: &VerifyOptions) -> Result<Vec<Case>> {
    let k_max = opts.k;
    let mut cases = vec![case("mismatch fixture exists", json!({ "max_classes": k_max }), move || {
        let (a, class) = fixtures::contraction_tau_mismatch(k_max)?.ok_or(Fail("no mismatch found".into()))?;
        let cert = is_daisy_cube(&a.graph).ok_or(Error::NotDaisyCube)?.cert;
        let tau = tau_graph(&a.graph, &cert);
        ensure(tau_after_contraction(&a.graph, &cert, class)? != tau_without(&tau, class), || "fixture agrees".into())
    })];
    for k in 1..=opts.k {
        for (i, a) in forest_members(k)?.into_iter().enumerate() {
            let cert = is_daisy_cube(&a.graph).ok_or(Error::NotDaisyCube)?.cert;
            let tau = tau_graph(&a.graph, &cert);
            for class in (0..k).filter(|&c| tau.graph.degree(c) == 1) {
                let (g, cert, tau) = (a.graph.clone(), cert.clone(), tau.clone());
                let repro = json!({ "graph": a.to_record(), "class": class });
                cases.push(case(format!("k={k} #{i} class {class}"), repro, move || {
                    let after = tau_after_contraction(&g, &cert, class)?;
                    ensure(after == tau_without(&tau, class), || format!("contraction gives {after:?}"))
                }));
            }
        }
    }
    Ok(cases)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selectors() {
        assert_eq!(parse_suites("all").unwrap().len(), SUITES.len());
        assert_eq!(parse_suites("fig3,fig1").unwrap(), vec!["fig1", "fig3"]);
        assert!(parse_suites("lemma9").is_err());
    }

    #[test]
    fn small_suites_pass() {
        let opts = VerifyOptions { k: 3, n: 5, trees: 4, seed: 0 };
        let report = verify(&parse_suites("all").unwrap(), &opts).unwrap();
        assert!(report.passed(), "{}", report.render());
        assert!(report.statements.iter().all(|s| s.instances > 0 && s.passes == s.instances));
    }

    #[test]
    fn bad_budgets() {
        let opts = VerifyOptions { k: 9, ..VerifyOptions::default() };
        assert!(verify(&["fig1"], &opts).is_err());
    }
}
