//! Exhaustive verification suites over the census.
//!
//! Each check scans an enumeration and records failures with replayable
//! edge-list witnesses.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::canon::{canonical_form, canonical_form_any, canonical_form_graph, CanonicalForm};
use super::enumerate::{GraphCensus, PosetCensus, GRAPH_MAX_ORDER, POSET_MAX_ORDER};
use crate::comparability::{
    embeds, is_comparability, is_split, split_comparability_forbidden, split_complement_comparability_forbidden,
    transitive_orientations, DEFAULT_ORIENTATION_LIMIT,
};
use crate::decomposition::{
    check_extension, classify, critical_vertices, has_indecomposable_of_order, is_indecomposable, subsets_of_size,
    Classification,
};
use crate::edgelist::emit;
use crate::families::{
    family_catalog, g_composite, g_prime_composite, h_split, o_composite, q_composite, q_prime_composite,
    r_prime_split, r_split, split_witnesses, CatalogEntry, CompositionParams, FamilyTag,
};
use crate::graph::{AnyGraph, Digraph, Graph};
use crate::{Error, Result};

/// Witnesses kept per report.
const MAX_WITNESSES: usize = 10;

/// Seed for the random digraph samples.
pub const SAMPLE_SEED: u64 = 0x5eed_c0de;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub check: String,
    /// Inclusive range of orders scanned.
    pub orders: (usize, usize),
    pub enumerated: usize,
    pub checked: usize,
    pub failures: usize,
    /// Edge-list text of (some of) the failing objects.
    pub witnesses: Vec<String>,
    pub status: Status,
    /// Computed facts worth recording (counts, cardinalities).
    pub notes: Vec<String>,
}

impl VerificationReport {
    fn new(check: &str, orders: (usize, usize)) -> Self {
        VerificationReport {
            check: check.to_string(),
            orders,
            enumerated: 0,
            checked: 0,
            failures: 0,
            witnesses: Vec::new(),
            status: Status::Inconclusive,
            notes: Vec::new(),
        }
    }

    fn fail(&mut self, witness: impl Into<AnyGraph>) {
        self.failures += 1;
        if self.witnesses.len() < MAX_WITNESSES {
            self.witnesses.push(emit(&witness.into()));
        }
    }

    fn absorb(&mut self, outcome: Outcome) {
        self.enumerated += 1;
        match outcome {
            Outcome::Skipped => {}
            Outcome::Ok => self.checked += 1,
            Outcome::Bad(w) => {
                self.checked += 1;
                self.fail(w);
            }
        }
    }

    /// Marks the enumeration complete and settles the status.
    fn finish(mut self) -> Self {
        self.status = if self.failures == 0 { Status::Pass } else { Status::Fail };
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

enum Outcome {
    Skipped,
    Ok,
    Bad(AnyGraph),
}

fn outcome(applies: bool, holds: bool, witness: impl FnOnce() -> AnyGraph) -> Outcome {
    match (applies, holds) {
        (false, _) => Outcome::Skipped,
        (true, true) => Outcome::Ok,
        (true, false) => Outcome::Bad(witness()),
    }
}

/// Runs `check` on every item in parallel and folds the outcomes in input
/// order.
fn scan<T: Sync>(report: &mut VerificationReport, items: &[T], check: impl Fn(&T) -> Outcome + Sync) {
    let outcomes: Vec<Outcome> = items.par_iter().map(&check).collect();
    for o in outcomes {
        report.absorb(o);
    }
}

/// `count` random digraphs with orders in `min_order..=max_order` and arc
/// density 1/2, reproducible from `seed`.
pub fn random_digraphs(count: usize, min_order: usize, max_order: usize, seed: u64) -> Vec<Digraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(min_order..=max_order);
            let mut arcs = Vec::new();
            for x in 0..n {
                for y in 0..n {
                    if x != y && rng.gen_bool(0.5) {
                        arcs.push((x, y));
                    }
                }
            }
            Digraph::from_arcs(n, arcs).unwrap()
        })
        .collect()
}

fn poset_guard(n: usize) -> Result<()> {
    if n > POSET_MAX_ORDER {
        return Err(Error::OrderTooLarge { what: "poset census", order: n, limit: POSET_MAX_ORDER });
    }
    Ok(())
}

/// Catalog poset members of order exactly `n`, with canonical forms.
fn catalog_posets_of_order(n: usize) -> Result<Vec<(CatalogEntry, CanonicalForm)>> {
    family_catalog(n.max(5))?
        .into_iter()
        .filter(|e| e.is_poset() && e.order() == n)
        .map(|e| {
            let form = canonical_form(&e.object.to_digraph())?;
            Ok((e, form))
        })
        .collect()
}

/// Both directions of the characterization at order `n` (5 ≤ n ≤ 7): the
/// (-1)-critical posets up to isomorphism are exactly the catalog members
/// and their duals, and each catalog member has 0 as its only
/// non-critical vertex.
pub fn verify_main_theorem(n: usize) -> Result<VerificationReport> {
    poset_guard(n)?;
    let census = PosetCensus::build(n)?;
    verify_main_theorem_with(&census, n)
}

pub fn verify_main_theorem_with(census: &PosetCensus, n: usize) -> Result<VerificationReport> {
    if !(5..=POSET_MAX_ORDER).contains(&n) || n > census.max_order() {
        return Err(Error::InvalidParams(format!("main theorem check needs 5 <= n <= 7 within the census (got {n})")));
    }
    let mut report = VerificationReport::new("main-theorem", (n, n));
    let level = census.level(n);
    let minus_one: Vec<bool> =
        level.par_iter().map(|(_, p)| matches!(classify(p.digraph()), Classification::MinusOneCritical(_))).collect();
    let found: BTreeSet<&CanonicalForm> =
        level.iter().zip(&minus_one).filter(|(_, &m)| m).map(|((f, _), _)| f).collect();
    report.enumerated = level.len();

    let catalog = catalog_posets_of_order(n)?;
    let expected: BTreeSet<&CanonicalForm> = catalog.iter().map(|(_, f)| f).collect();
    for (entry, _) in &catalog {
        report.checked += 1;
        let report_ok = critical_vertices(&entry.object.to_digraph())
            .map(|r| r.classification == Classification::MinusOneCritical(0))
            .unwrap_or(false);
        if !report_ok {
            report.notes.push(format!("{} is not (-1)-critical at 0", entry.id));
            report.fail(entry.object.clone());
        }
    }
    let graph_members: Vec<(CanonicalForm, String)> = family_catalog(n.max(5))?
        .into_iter()
        .filter(|e| !e.is_poset() && e.order() == n)
        .map(|e| Ok((canonical_form_any(&e.object)?, e.id.to_string())))
        .collect::<Result<_>>()?;
    for ((form, p), _) in level.iter().zip(&minus_one).filter(|(_, &m)| m) {
        report.checked += 1;
        if !expected.contains(form) {
            let cg = canonical_form_graph(&p.comparability_graph())?;
            let orients = graph_members
                .iter()
                .find(|(f, _)| *f == cg)
                .map_or("no catalog graph".to_string(), |(_, id)| id.clone());
            report.notes.push(format!("(-1)-critical poset outside the families, orienting {orients}"));
            report.fail(p.clone());
        }
    }
    for (entry, form) in &catalog {
        if !found.contains(form) {
            report.notes.push(format!("{} not found among (-1)-critical census posets", entry.id));
            report.fail(entry.object.clone());
        }
    }
    report.notes.push(format!("posets of order {n}: {}", level.len()));
    report.notes.push(format!("(-1)-critical classes: {}", found.len()));
    report.notes.push(format!("family members with duals: {}, distinct classes: {}", catalog.len(), expected.len()));
    Ok(report.finish())
}

/// Shared enumerations for the cited-theorem checks.
pub struct CitedInputs {
    pub posets: PosetCensus,
    pub graphs: GraphCensus,
    pub sample: Vec<Digraph>,
}

impl CitedInputs {
    /// Posets up to `min(n, 7)`, graphs up to `min(n, 8)`, plus 500 random
    /// digraphs of order 5..=8.
    pub fn build(n: usize) -> Result<Self> {
        Ok(CitedInputs {
            posets: PosetCensus::build(n.min(POSET_MAX_ORDER))?,
            graphs: GraphCensus::build(n.min(GRAPH_MAX_ORDER))?,
            sample: random_digraphs(500, 5, 8, SAMPLE_SEED),
        })
    }
}

/// One report per cited result, each exhaustive over its enumeration.
pub fn verify_cited_theorems(n: usize) -> Result<Vec<VerificationReport>> {
    let inputs = CitedInputs::build(n)?;
    Ok(verify_cited_with(&inputs))
}

pub fn verify_cited_with(inputs: &CitedInputs) -> Vec<VerificationReport> {
    vec![
        verify_extension(&inputs.posets, &inputs.sample),
        verify_smaller_indecomposable(&inputs.posets, &inputs.sample),
        verify_noncritical_heredity(&inputs.posets),
        verify_comparability_indecomposability(&inputs.posets),
        verify_comparability_criticality(&inputs.posets),
        verify_two_orientations(&inputs.graphs, 12),
        verify_split_criteria(&inputs.graphs),
        verify_three_block_h(),
    ]
}

fn posets_in(census: &PosetCensus, lo: usize, hi: usize) -> Vec<Digraph> {
    (lo..=hi.min(census.max_order())).flat_map(|n| census.posets(n).map(|p| p.digraph().clone())).collect()
}

fn extension_holds(d: &Digraph) -> bool {
    let n = d.order();
    (3..=n.saturating_sub(2)).all(|k| {
        subsets_of_size(n, k).all(|x| {
            let sub = d.induced(&x).unwrap();
            !is_indecomposable(&sub) || matches!(check_extension(d, &x), Ok(Some(_)))
        })
    })
}

/// For every indecomposable `D` and indecomposable `D[X]` with
/// `3 ≤ |X| ≤ n - 2`, some pair outside `X` extends it.
pub fn verify_extension(census: &PosetCensus, sample: &[Digraph]) -> VerificationReport {
    let hi = census.max_order();
    let mut report = VerificationReport::new("extension-by-two", (5, hi.max(8)));
    let posets = posets_in(census, 5, hi);
    scan(&mut report, &posets, |d| outcome(is_indecomposable(d), extension_holds(d), || d.clone().into()));
    scan(&mut report, sample, |d| outcome(is_indecomposable(d), extension_holds(d), || d.clone().into()));
    report.notes.push(format!("census posets of order 5..={hi} plus {} random digraphs", sample.len()));
    report.finish()
}

/// Every indecomposable digraph of order `n ≥ 5` embeds an indecomposable
/// one of order `n - 1` or `n - 2`.
pub fn verify_smaller_indecomposable(census: &PosetCensus, sample: &[Digraph]) -> VerificationReport {
    let hi = census.max_order();
    let mut report = VerificationReport::new("indecomposable-of-order-n-1-or-n-2", (5, hi.max(8)));
    let holds = |d: &Digraph| {
        let n = d.order();
        has_indecomposable_of_order(d, n - 1) || has_indecomposable_of_order(d, n - 2)
    };
    let posets = posets_in(census, 5, hi);
    scan(&mut report, &posets, |d| outcome(is_indecomposable(d), holds(d), || d.clone().into()));
    scan(&mut report, sample, |d| outcome(is_indecomposable(d), holds(d), || d.clone().into()));
    report.finish()
}

/// Indecomposable posets on at least 7 vertices with two or more
/// non-critical vertices have some `x` with `D - x` indecomposable and not
/// critical.
pub fn verify_noncritical_heredity(census: &PosetCensus) -> VerificationReport {
    let hi = census.max_order();
    let mut report = VerificationReport::new("noncritical-heredity", (7, hi.max(7)));
    let posets = posets_in(census, 7, hi);
    scan(&mut report, &posets, |d| {
        let Ok(r) = critical_vertices(d) else { return Outcome::Skipped };
        if r.noncritical.len() < 2 {
            return Outcome::Skipped;
        }
        let holds = r.noncritical.iter().any(|x| {
            let rest = d.remove_vertex(x);
            critical_vertices(&rest).is_ok_and(|rr| !rr.noncritical.is_empty())
        });
        outcome(true, holds, || d.clone().into())
    });
    if hi < 7 {
        report.notes.push("no poset orders >= 7 in range; vacuous".into());
    }
    report.finish()
}

/// A poset is indecomposable iff its comparability graph is.
pub fn verify_comparability_indecomposability(census: &PosetCensus) -> VerificationReport {
    let hi = census.max_order();
    let mut report = VerificationReport::new("poset-vs-comparability-indecomposability", (1, hi));
    let posets = posets_in(census, 1, hi);
    scan(&mut report, &posets, |d| {
        let holds = is_indecomposable(d) == is_indecomposable(&d.comparability_graph().as_digraph());
        outcome(true, holds, || d.clone().into())
    });
    report.finish()
}

/// An indecomposable poset on at least 5 vertices is (-1)-critical at `x`
/// iff its comparability graph is.
pub fn verify_comparability_criticality(census: &PosetCensus) -> VerificationReport {
    let hi = census.max_order();
    let mut report = VerificationReport::new("poset-vs-comparability-criticality", (5, hi.max(5)));
    let posets = posets_in(census, 5, hi);
    let minus_one = |c: Classification| match c {
        Classification::MinusOneCritical(x) => Some(x),
        _ => None,
    };
    scan(&mut report, &posets, |d| {
        if !is_indecomposable(d) {
            return Outcome::Skipped;
        }
        let holds = minus_one(classify(d)) == minus_one(classify(&d.comparability_graph().as_digraph()));
        outcome(true, holds, || d.clone().into())
    });
    report.finish()
}

fn exactly_two_dual_orientations(g: &Graph) -> bool {
    let r = transitive_orientations(g, DEFAULT_ORIENTATION_LIMIT);
    r.exhausted && r.orientations.len() == 2 && r.orientations[0].dual() == r.orientations[1]
}

/// Indecomposable comparability graphs have exactly two transitive
/// orientations, dual to each other. Scans the graph census and the
/// catalog graph members up to `catalog_order`.
pub fn verify_two_orientations(graphs: &GraphCensus, catalog_order: usize) -> VerificationReport {
    let hi = graphs.max_order();
    let mut report = VerificationReport::new("two-dual-orientations", (1, hi.max(catalog_order)));
    let all: Vec<Graph> = (1..=hi).flat_map(|n| graphs.graphs(n).cloned()).collect();
    let check = |g: &Graph| {
        let applies = is_indecomposable(&g.as_digraph()) && is_comparability(g);
        outcome(applies, applies && exactly_two_dual_orientations(g), || g.clone().into())
    };
    scan(&mut report, &all, check);
    if catalog_order >= 5 {
        let members: Vec<Graph> = family_catalog(catalog_order)
            .unwrap()
            .into_iter()
            .filter_map(|e| match e.object {
                AnyGraph::Graph(g) if !e.is_poset() => Some(g),
                _ => None,
            })
            .collect();
        let before = report.checked;
        scan(&mut report, &members, check);
        report
            .notes
            .push(format!("catalog graph members checked (order <= {catalog_order}): {}", report.checked - before));
    }
    report.finish()
}

/// On split graphs, the forbidden-subgraph criteria agree with the
/// orientation search on the graph and on its complement.
pub fn verify_split_criteria(graphs: &GraphCensus) -> VerificationReport {
    let hi = graphs.max_order();
    let mut report = VerificationReport::new("split-forbidden-subgraphs", (1, hi));
    let all: Vec<Graph> = (1..=hi).flat_map(|n| graphs.graphs(n).cloned()).collect();
    scan(&mut report, &all, |g| {
        if !is_split(g) {
            return Outcome::Skipped;
        }
        let holds = split_comparability_forbidden(g) == Ok(is_comparability(g))
            && split_complement_comparability_forbidden(g) == Ok(is_comparability(&g.complement()));
        outcome(true, holds, || g.clone().into())
    });
    report.finish()
}

/// `H_{1,2n1,…,2nk}` with `k ≥ 3` and its complement are not comparability
/// graphs, by orientation search and by the embedded net / 3-sun.
pub fn verify_three_block_h() -> VerificationReport {
    let params: Vec<Vec<usize>> = vec![vec![1, 1, 1], vec![1, 1, 1, 1], vec![2, 1, 1], vec![1, 2, 1], vec![1, 1, 2]];
    let mut report = VerificationReport::new("split-h-three-blocks-not-comparability", (7, 9));
    let h = split_witnesses();
    scan(&mut report, &params, |p| {
        let g = h_split(&CompositionParams::new(p.clone()).unwrap()).unwrap();
        let co = g.complement();
        let holds = !is_comparability(&g) && !is_comparability(&co) && embeds(&h.g1, &g) && embeds(&h.g2, &co);
        outcome(true, holds, || g.clone().into())
    });
    report.finish()
}

/// Every catalog member up to `max_order` is indecomposable and
/// (-1)-critical at 0.
pub fn verify_family_criticality(max_order: usize) -> Result<VerificationReport> {
    let catalog = family_catalog(max_order)?;
    let mut report = VerificationReport::new("family-minus-one-critical-at-zero", (5, max_order));
    scan(&mut report, &catalog, |e| {
        let d = e.object.to_digraph();
        let holds = is_indecomposable(&d) && classify(&d) == Classification::MinusOneCritical(0);
        outcome(true, holds, || e.object.clone())
    });
    report.notes.push(format!("catalog members: {}", catalog.len()));
    Ok(report.finish())
}

/// Labeled identities between poset families and the comparability
/// graphs they orient, plus transitivity of every poset generator.
pub fn verify_orientation_identities(max_order: usize) -> Result<VerificationReport> {
    let catalog = family_catalog(max_order.max(5))?;
    let mut report = VerificationReport::new("poset-family-orients-graph-family", (4, max_order));
    let params: Vec<(FamilyTag, Vec<usize>)> = catalog
        .iter()
        .filter(|e| e.is_poset() && !e.id.dual)
        .map(|e| (e.id.tag, e.id.params.clone()))
        // k = 2 building blocks of Q are covered too
        .chain(
            (1..=max_order / 2)
                .flat_map(|a| (1..=max_order / 2).map(move |b| vec![a, b]))
                .filter(|p| 2 * (p[0] + p[1]) <= max_order)
                .map(|p| (FamilyTag::Q, p)),
        )
        .collect();
    scan(&mut report, &params, |(tag, p)| {
        let cp = CompositionParams::new(p.clone()).unwrap();
        let (poset, graph) = match tag {
            FamilyTag::Q => (q_composite(&cp), g_composite(&cp)),
            FamilyTag::QPrime => (q_prime_composite(&cp), g_prime_composite(&cp)),
            FamilyTag::R => (r_split(p[0], p[1]), h_split(&cp)),
            FamilyTag::RPrime => (r_prime_split(p[0], p[1]), h_split(&cp).map(|g| g.complement())),
            FamilyTag::O => (o_composite(p[0], p[1]), g_prime_composite(&cp).map(|g| g.complement())),
            _ => unreachable!(),
        };
        match (poset, graph) {
            (Ok(o), Ok(g)) => {
                let holds = o.digraph().is_transitive() && o.comparability_graph() == g;
                outcome(true, holds, || o.clone().into())
            }
            _ => Outcome::Bad(Digraph::empty(0).into()),
        }
    });
    Ok(report.finish())
}
