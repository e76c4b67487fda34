//! Small posets and graphs, one per isomorphism class.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::canon::{canonical_form, canonical_form_graph, canonical_labeling, CanonicalForm};
use crate::graph::{Digraph, Graph, Poset};
use crate::{Error, Result};

pub const POSET_MAX_ORDER: usize = 7;
pub const GRAPH_MAX_ORDER: usize = 8;

/// Posets of each order `0..=max`, in canonical labeling, sorted by
/// canonical form.
#[derive(Clone, Debug)]
pub struct PosetCensus {
    levels: Vec<Vec<(CanonicalForm, Poset)>>,
}

impl PosetCensus {
    /// Builds every level up to `max_order` by adding a new maximal element
    /// above each down-set of every poset of the previous level.
    pub fn build(max_order: usize) -> Result<Self> {
        if max_order > POSET_MAX_ORDER {
            return Err(Error::OrderTooLarge { what: "poset enumeration", order: max_order, limit: POSET_MAX_ORDER });
        }
        let empty = Poset::new(Digraph::empty(0))?;
        let mut levels = vec![vec![(canonical_form(empty.digraph())?, empty)]];
        for m in 0..max_order {
            let parents = &levels[m];
            let children: Vec<(CanonicalForm, Digraph)> =
                parents.par_iter().flat_map_iter(|(_, p)| extend_poset(p.digraph())).collect();
            levels.push(dedup(children, |d| Poset::new(d).expect("extension keeps transitivity")));
        }
        Ok(PosetCensus { levels })
    }

    pub fn max_order(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn level(&self, n: usize) -> &[(CanonicalForm, Poset)] {
        &self.levels[n]
    }

    pub fn posets(&self, n: usize) -> impl Iterator<Item = &Poset> {
        self.levels[n].iter().map(|(_, p)| p)
    }
}

fn extend_poset(d: &Digraph) -> Vec<(CanonicalForm, Digraph)> {
    let m = d.order();
    let arcs: Vec<(usize, usize)> = d.arcs().collect();
    (0u32..1 << m)
        .filter(|&mask| {
            // down-set: every predecessor of a member is a member
            (0..m).all(|y| mask >> y & 1 == 0 || d.in_neighbors(y).iter().all(|x| mask >> x & 1 == 1))
        })
        .map(|mask| {
            let below = (0..m).filter(|&x| mask >> x & 1 == 1).map(|x| (x, m));
            let child = Digraph::from_arcs(m + 1, arcs.iter().copied().chain(below)).unwrap();
            (canonical_form(&child).unwrap(), child)
        })
        .collect()
}

fn dedup<T>(items: Vec<(CanonicalForm, Digraph)>, wrap: impl Fn(Digraph) -> T) -> Vec<(CanonicalForm, T)> {
    let mut unique: BTreeMap<CanonicalForm, Digraph> = BTreeMap::new();
    for (form, d) in items {
        unique.entry(form).or_insert(d);
    }
    unique
        .into_iter()
        .map(|(form, d)| {
            let canon = d.relabel(&canonical_labeling(&d).unwrap());
            (form, wrap(canon))
        })
        .collect()
}

/// Every poset on `n` vertices up to isomorphism (`n ≤ 7`).
pub fn enumerate_posets(n: usize) -> Result<Vec<Poset>> {
    let census = PosetCensus::build(n)?;
    Ok(census.posets(n).cloned().collect())
}

/// Graphs of each order `0..=max`, canonical labeling, sorted by form.
#[derive(Clone, Debug)]
pub struct GraphCensus {
    levels: Vec<Vec<(CanonicalForm, Graph)>>,
}

impl GraphCensus {
    /// Each level adds a vertex with every possible neighborhood to every
    /// graph of the previous level.
    pub fn build(max_order: usize) -> Result<Self> {
        if max_order > GRAPH_MAX_ORDER {
            return Err(Error::OrderTooLarge { what: "graph enumeration", order: max_order, limit: GRAPH_MAX_ORDER });
        }
        let empty = Graph::empty(0);
        let mut levels = vec![vec![(canonical_form_graph(&empty)?, empty)]];
        for m in 0..max_order {
            let children: Vec<(CanonicalForm, Digraph)> = levels[m]
                .par_iter()
                .flat_map_iter(|(_, g)| {
                    let edges: Vec<(usize, usize)> = g.edges().collect();
                    (0u32..1 << m).map(move |mask| {
                        let new = (0..m).filter(|&x| mask >> x & 1 == 1).map(|x| (x, m));
                        let child = Graph::from_edges(m + 1, edges.iter().copied().chain(new)).unwrap();
                        (canonical_form_graph(&child).unwrap(), child.as_digraph())
                    })
                })
                .collect();
            levels.push(dedup(children, |d| d.comparability_graph()));
        }
        Ok(GraphCensus { levels })
    }

    pub fn max_order(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn level(&self, n: usize) -> &[(CanonicalForm, Graph)] {
        &self.levels[n]
    }

    pub fn graphs(&self, n: usize) -> impl Iterator<Item = &Graph> {
        self.levels[n].iter().map(|(_, g)| g)
    }
}

/// Every graph on `n` vertices up to isomorphism (`n ≤ 8`).
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    let census = GraphCensus::build(n)?;
    Ok(census.graphs(n).cloned().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::canon::{canonical_form_bruteforce, Kind};
    use std::collections::BTreeSet;

    #[test]
    fn small_poset_counts() {
        let c = PosetCensus::build(5).unwrap();
        let counts: Vec<usize> = (0..=5).map(|n| c.level(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 16, 63]);
    }

    #[test]
    fn small_graph_counts() {
        let c = GraphCensus::build(5).unwrap();
        let counts: Vec<usize> = (0..=5).map(|n| c.level(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34]);
    }

    #[test]
    fn guards() {
        assert!(enumerate_posets(8).is_err());
        assert!(enumerate_graphs(9).is_err());
    }

    // Independent oracle: every labeled transitive digraph on `n` vertices,
    // classified by brute-force canonical form.
    fn labeled_poset_classes(n: usize) -> BTreeSet<CanonicalForm> {
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|x| (0..n).filter(move |&y| y != x).map(move |y| (x, y))).collect();
        let mut classes = BTreeSet::new();
        for mask in 0u64..1 << pairs.len() {
            let d =
                Digraph::from_arcs(n, pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p))
                    .unwrap();
            if d.is_transitive() {
                classes.insert(canonical_form_bruteforce(&d, Kind::Digraph));
            }
        }
        classes
    }

    #[test]
    fn posets_match_labeled_bruteforce() {
        for n in 1..=5 {
            let oracle = labeled_poset_classes(n);
            let ours = enumerate_posets(n).unwrap();
            let ours_bf: BTreeSet<_> =
                ours.iter().map(|p| canonical_form_bruteforce(p.digraph(), Kind::Digraph)).collect();
            assert_eq!(ours.len(), ours_bf.len(), "duplicates at n = {n}");
            assert_eq!(ours_bf, oracle, "n = {n}");
        }
    }

    #[test]
    fn graphs_match_labeled_bruteforce() {
        for n in 1..=5 {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|x| (x + 1..n).map(move |y| (x, y))).collect();
            let mut oracle = BTreeSet::new();
            for mask in 0u64..1 << pairs.len() {
                let g =
                    Graph::from_edges(n, pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p))
                        .unwrap();
                oracle.insert(canonical_form_bruteforce(&g.as_digraph(), Kind::Graph));
            }
            let ours: BTreeSet<_> = enumerate_graphs(n)
                .unwrap()
                .iter()
                .map(|g| canonical_form_bruteforce(&g.as_digraph(), Kind::Graph))
                .collect();
            assert_eq!(ours, oracle, "n = {n}");
        }
    }

    #[test]
    fn census_output_is_sorted_and_transitive() {
        let c = PosetCensus::build(5).unwrap();
        let forms: Vec<_> = c.level(5).iter().map(|(f, _)| f.clone()).collect();
        let mut sorted = forms.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(forms, sorted);
        assert!(c.posets(5).all(|p| p.digraph().is_transitive()));
    }
}
