//! End-to-end acceptance run: one PASS/FAIL line per criterion.
//!
//! Runs as a plain binary (no libtest harness) so the lines always print.

use std::process::ExitCode;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use critposet::census::canon::canonical_form;
use critposet::census::verify::{
    random_digraphs, verify_comparability_criticality, verify_comparability_indecomposability, verify_extension,
    verify_family_criticality, verify_main_theorem_with, verify_noncritical_heredity, verify_orientation_identities,
    verify_smaller_indecomposable, verify_split_criteria, verify_three_block_h, verify_two_orientations,
    VerificationReport,
};
use critposet::census::{GraphCensus, PosetCensus};
use critposet::comparability::conjecture_probe;
use critposet::decomposition::{is_indecomposable, is_indecomposable_bruteforce};
use critposet::families::CompositionParams;
use critposet::Digraph;

struct Line {
    number: usize,
    name: &'static str,
    ok: bool,
    detail: String,
}

fn summarize(reports: &[VerificationReport]) -> (bool, String) {
    let ok = reports.iter().all(|r| r.passed());
    let detail = reports
        .iter()
        .map(|r| {
            let mut s = format!("{}: {:?} checked={} failures={}", r.check, r.status, r.checked, r.failures);
            if !r.witnesses.is_empty() {
                s.push_str(&format!(" first witness:\n{}", r.witnesses[0]));
            }
            s
        })
        .collect::<Vec<_>>()
        .join("; ");
    (ok, detail)
}

fn closure_matches_bruteforce(d: &Digraph) -> bool {
    is_indecomposable_bruteforce(d).unwrap() == is_indecomposable(d)
}

fn criterion_ten(posets: &PosetCensus, graphs: &GraphCensus) -> (bool, String) {
    let mut objects: Vec<Digraph> =
        (0..=posets.max_order()).flat_map(|n| posets.posets(n).map(|p| p.digraph().clone())).collect();
    objects.extend((0..=graphs.max_order()).flat_map(|n| graphs.graphs(n).map(|g| g.as_digraph())));
    let census_bad = objects.par_iter().filter(|d| !closure_matches_bruteforce(d)).count();

    let sample = random_digraphs(1000, 1, 12, 12);
    let random_bad = sample.par_iter().filter(|d| !closure_matches_bruteforce(d)).count();

    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut perm_bad = 0;
    for d in random_digraphs(50, 1, 8, 88) {
        let form = canonical_form(&d).unwrap();
        let mut perm: Vec<usize> = (0..d.order()).collect();
        for _ in 0..100 {
            perm.shuffle(&mut rng);
            if canonical_form(&d.relabel(&perm)).unwrap() != form {
                perm_bad += 1;
            }
        }
    }
    let ok = census_bad == 0 && random_bad == 0 && perm_bad == 0;
    let detail = format!(
        "closure vs subsets: {} census objects ({census_bad} mismatches), 1000 random ({random_bad} mismatches); \
         5000 relabelings ({perm_bad} form changes)",
        objects.len()
    );
    (ok, detail)
}

fn criterion_eleven() -> (bool, String) {
    let mut records = Vec::new();
    let mut ok = true;
    for parts in [[1, 1, 1], [2, 1, 1], [1, 2, 1], [1, 1, 2]] {
        let p = CompositionParams::new(parts.to_vec()).unwrap();
        match conjecture_probe(&p, Some(5_000_000)) {
            Ok(r) => {
                let json = serde_json::to_value(&r).unwrap();
                ok &= ["params", "result", "status"].iter().all(|k| json.get(k).is_some());
                records.push(format!(
                    "{}: G={:?} G'={:?} ({:?}, {} nodes)",
                    p,
                    r.result.complement_of_g_comparability,
                    r.result.complement_of_g_prime_comparability,
                    r.status,
                    r.nodes
                ));
            }
            Err(e) => {
                ok = false;
                records.push(format!("{p}: error {e}"));
            }
        }
    }
    (ok, records.join("; "))
}

fn main() -> ExitCode {
    let mut lines = Vec::new();
    let mut push = |number, name, (ok, detail): (bool, String), started: Instant| {
        let line = Line { number, name, ok, detail: format!("{detail} [{:.1?}]", started.elapsed()) };
        println!(
            "criterion {:>2} {:<34} {}  {}",
            line.number,
            line.name,
            if line.ok { "PASS" } else { "FAIL" },
            line.detail
        );
        lines.push(line);
    };

    let t = Instant::now();
    push(1, "family members (-1)-critical at 0", summarize(&[verify_family_criticality(14).unwrap()]), t);

    let t = Instant::now();
    push(2, "poset families orient graph families", summarize(&[verify_orientation_identities(14).unwrap()]), t);

    let t = Instant::now();
    let posets = PosetCensus::build(7).unwrap();
    let reports: Vec<_> = (5..=7).map(|n| verify_main_theorem_with(&posets, n).unwrap()).collect();
    let again = verify_main_theorem_with(&posets, 5).unwrap();
    let (mut ok, mut detail) = summarize(&reports);
    ok &= again == reports[0];
    for r in &reports {
        detail.push_str(&format!("; n={}: {}", r.orders.0, r.notes.join(", ")));
    }
    push(3, "characterization at orders 5..7", (ok, detail), t);

    let t = Instant::now();
    push(
        4,
        "poset vs comparability graph",
        summarize(&[verify_comparability_indecomposability(&posets), verify_comparability_criticality(&posets)]),
        t,
    );

    let t = Instant::now();
    let small = PosetCensus::build(6).unwrap();
    let sample = random_digraphs(500, 5, 8, critposet::census::verify::SAMPLE_SEED);
    push(
        5,
        "extension by two, order n-1 or n-2",
        summarize(&[verify_extension(&small, &sample), verify_smaller_indecomposable(&small, &sample)]),
        t,
    );

    let t = Instant::now();
    push(6, "non-critical heredity at order 7", summarize(&[verify_noncritical_heredity(&posets)]), t);

    let t = Instant::now();
    let graphs = GraphCensus::build(8).unwrap();
    push(7, "split graphs forbidden subgraphs", summarize(&[verify_split_criteria(&graphs)]), t);

    let t = Instant::now();
    push(8, "two dual transitive orientations", summarize(&[verify_two_orientations(&graphs, 12)]), t);

    let t = Instant::now();
    push(9, "three-block H not comparability", summarize(&[verify_three_block_h()]), t);

    let t = Instant::now();
    push(10, "oracle cross-checks", criterion_ten(&posets, &graphs), t);

    let t = Instant::now();
    push(11, "conjecture probe records", criterion_eleven(), t);

    let failed: Vec<usize> = lines.iter().filter(|l| !l.ok).map(|l| l.number).collect();
    if failed.is_empty() {
        println!("acceptance: all {} criteria passed", lines.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failed:?}");
        ExitCode::FAILURE
    }
}
