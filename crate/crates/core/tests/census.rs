use std::collections::BTreeSet;

use critposet::census::canon::canonical_form_any;
use critposet::census::verify::verify_main_theorem;
use critposet::census::{GraphCensus, PosetCensus};
use critposet::families::family_catalog;

#[test]
fn census_counts() {
    let p = PosetCensus::build(7).unwrap();
    let counts: Vec<usize> = (0..=7).map(|n| p.level(n).len()).collect();
    assert_eq!(counts, [1, 1, 2, 5, 16, 63, 318, 2045]);
    let g = GraphCensus::build(8).unwrap();
    let counts: Vec<usize> = (0..=8).map(|n| g.level(n).len()).collect();
    assert_eq!(counts, [1, 1, 2, 4, 11, 34, 156, 1044, 12346]);
}

#[test]
fn reports_are_reproducible() {
    for n in [5, 6] {
        assert_eq!(verify_main_theorem(n).unwrap(), verify_main_theorem(n).unwrap());
    }
}

#[test]
fn catalog_coverage_is_monotone() {
    let mut previous: BTreeSet<_> = BTreeSet::new();
    for max in 5..=12 {
        let forms: BTreeSet<_> =
            family_catalog(max).unwrap().iter().map(|e| canonical_form_any(&e.object).unwrap()).collect();
        assert!(previous.is_subset(&forms), "max order {max}");
        previous = forms;
    }
}
