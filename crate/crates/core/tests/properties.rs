use proptest::prelude::*;

use critposet::census::canon::{canonical_form, canonical_form_bruteforce, Kind};
use critposet::comparability::transitive_orientations;
use critposet::decomposition::{
    classify, is_indecomposable, is_indecomposable_bruteforce, is_interval, Classification,
};
use critposet::edgelist::{emit, parse};
use critposet::families::{g2n, q2n};
use critposet::{AnyGraph, Digraph, Error, Graph, Poset, VertexSet};

fn digraph(max: usize) -> impl Strategy<Value = Digraph> {
    (1..=max).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
            let arcs = (0..n * n).filter(|&i| bits[i] && i / n != i % n).map(|i| (i / n, i % n));
            Digraph::from_arcs(n, arcs).unwrap()
        })
    })
}

fn graph(max: usize) -> impl Strategy<Value = Graph> {
    digraph(max).prop_map(|d| {
        let n = d.order();
        Graph::from_edges(n, d.arcs().filter(|&(x, y)| x < y)).unwrap()
    })
}

fn subset(n: usize) -> impl Strategy<Value = VertexSet> {
    proptest::collection::vec(any::<bool>(), n)
        .prop_map(move |bits| VertexSet::from_vertices(n, (0..n).filter(|&v| bits[v])).unwrap())
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #[test]
    fn dual_and_complement_are_involutions(d in digraph(9), g in graph(9)) {
        prop_assert_eq!(d.dual().dual(), d);
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn intervals_survive_dual_and_complement(
        (d, x) in digraph(8).prop_flat_map(|d| { let n = d.order(); (Just(d), subset(n)) }),
        (g, y) in graph(8).prop_flat_map(|g| { let n = g.order(); (Just(g), subset(n)) }),
    ) {
        prop_assert_eq!(is_interval(&d, &x), is_interval(&d.dual(), &x));
        prop_assert_eq!(is_interval(&g.as_digraph(), &y), is_interval(&g.complement().as_digraph(), &y));
    }

    #[test]
    fn closure_agrees_with_subset_scan(d in digraph(9)) {
        prop_assert_eq!(is_indecomposable(&d), is_indecomposable_bruteforce(&d).unwrap());
    }

    #[test]
    fn dual_has_same_comparability_graph(d in digraph(8)) {
        prop_assert_eq!(d.dual().comparability_graph(), d.comparability_graph());
    }

    #[test]
    fn poset_rejects_non_transitive(d in digraph(7)) {
        match Poset::new(d.clone()) {
            Ok(p) => prop_assert!(p.digraph().is_transitive()),
            Err(e) => {
                prop_assert!(!d.is_transitive());
                prop_assert!(matches!(e, Error::NotTransitive(..)));
            }
        }
    }

    #[test]
    fn orientations_are_sound_and_closed_under_dual(g in graph(8)) {
        let r = transitive_orientations(&g, 10_000);
        prop_assert!(r.exhausted);
        for o in &r.orientations {
            prop_assert!(o.digraph().is_transitive());
            prop_assert_eq!(&o.comparability_graph(), &g);
            prop_assert!(r.orientations.contains(&o.dual()));
        }
    }

    #[test]
    fn canonical_form_is_invariant(
        (d, perm) in digraph(8).prop_flat_map(|d| { let n = d.order(); (Just(d), permutation(n)) })
    ) {
        prop_assert_eq!(canonical_form(&d.relabel(&perm)).unwrap(), canonical_form(&d).unwrap());
    }

    #[test]
    fn canonical_form_separates_like_bruteforce(a in digraph(6), b in digraph(6)) {
        let same = canonical_form(&a).unwrap() == canonical_form(&b).unwrap();
        let oracle = canonical_form_bruteforce(&a, Kind::Digraph) == canonical_form_bruteforce(&b, Kind::Digraph);
        prop_assert_eq!(same, oracle);
    }

    #[test]
    fn edge_list_round_trip(d in digraph(10), g in graph(10)) {
        for a in [AnyGraph::from(d.clone()), AnyGraph::from(g.clone())] {
            let text = emit(&a);
            prop_assert_eq!(&parse(&text).unwrap(), &a);
            prop_assert_eq!(emit(&parse(&text).unwrap()), text);
        }
    }
}

#[test]
fn half_graphs_and_q_are_critical() {
    for n in 2..=6 {
        assert_eq!(classify(&g2n(n).unwrap().as_digraph()), Classification::Critical, "G_{}", 2 * n);
        assert_eq!(classify(q2n(n).unwrap().digraph()), Classification::Critical, "Q_{}", 2 * n);
    }
}
