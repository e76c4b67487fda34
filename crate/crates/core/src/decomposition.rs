//! Intervals (modules), indecomposability and critical vertices.
//!
//! Indecomposability is decided with the pairwise interval closure: a
//! digraph is indecomposable iff the smallest interval containing any two
//! distinct vertices is the whole vertex set. `intervals_bruteforce` scans
//! every subset and serves as the independent oracle.

use serde::Serialize;

use crate::graph::Digraph;
use crate::set::VertexSet;
use crate::{Error, Result};

/// Largest order accepted by [`intervals_bruteforce`].
pub const BRUTEFORCE_MAX_ORDER: usize = 16;

/// `true` iff no vertex outside `i` distinguishes two members of `i`.
pub fn is_interval(d: &Digraph, i: &VertexSet) -> bool {
    let size = i.len();
    if size <= 1 {
        return true;
    }
    (0..d.order()).filter(|&z| !i.contains(z)).all(|z| {
        let to = d.out_neighbors(z).count_common(i);
        let from = d.in_neighbors(z).count_common(i);
        (to == 0 || to == size) && (from == 0 || from == size)
    })
}

/// Inclusion-minimal interval containing `x` and `y`.
///
/// Grows `{x, y}` by every outside vertex that splits it, scanning vertices
/// in ascending order until nothing changes.
pub fn minimal_interval_containing(d: &Digraph, x: usize, y: usize) -> VertexSet {
    let n = d.order();
    let mut w = VertexSet::empty(n);
    w.insert(x);
    w.insert(y);
    let mut size = w.len();
    loop {
        let mut grew = false;
        for z in 0..n {
            if w.contains(z) {
                continue;
            }
            let to = d.out_neighbors(z).count_common(&w);
            let from = d.in_neighbors(z).count_common(&w);
            if (to != 0 && to != size) || (from != 0 && from != size) {
                w.insert(z);
                size += 1;
                grew = true;
            }
        }
        if !grew {
            return w;
        }
    }
}

/// Every interval of `d`, found by testing all `2^n` subsets.
pub fn intervals_bruteforce(d: &Digraph) -> Result<Vec<VertexSet>> {
    let n = d.order();
    if n > BRUTEFORCE_MAX_ORDER {
        return Err(Error::OrderTooLarge { what: "brute-force interval scan", order: n, limit: BRUTEFORCE_MAX_ORDER });
    }
    Ok((0u64..1 << n).map(|mask| VertexSet::from_mask(n, mask)).filter(|s| is_interval(d, s)).collect())
}

/// Indecomposable via the subset scan. Test oracle; same guard as
/// [`intervals_bruteforce`].
pub fn is_indecomposable_bruteforce(d: &Digraph) -> Result<bool> {
    let n = d.order();
    if n < 3 {
        return Ok(false);
    }
    Ok(intervals_bruteforce(d)?.iter().all(|s| s.len() <= 1 || s.len() == n))
}

/// `true` iff `n ≥ 3` and every interval is trivial.
pub fn is_indecomposable(d: &Digraph) -> bool {
    let n = d.order();
    if n < 3 {
        return false;
    }
    (0..n).all(|x| (x + 1..n).all(|y| minimal_interval_containing(d, x, y).is_full()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "class", content = "vertex")]
pub enum Classification {
    Decomposable,
    /// Indecomposable with fewer than 4 vertices.
    TooSmall,
    /// Order at least 4 and every vertex critical.
    Critical,
    /// Order at least 5 and exactly one non-critical vertex.
    MinusOneCritical(usize),
    /// Any other pattern: two or more non-critical vertices, or a single
    /// one on exactly 4 vertices.
    MultipleNonCritical,
}

impl Classification {
    pub fn name(&self) -> &'static str {
        match self {
            Classification::Decomposable => "Decomposable",
            Classification::TooSmall => "TooSmall",
            Classification::Critical => "Critical",
            Classification::MinusOneCritical(_) => "MinusOneCritical",
            Classification::MultipleNonCritical => "MultipleNonCritical",
        }
    }
}

/// Per-vertex criticality of an indecomposable digraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalityReport {
    pub order: usize,
    pub critical: VertexSet,
    pub noncritical: VertexSet,
    pub classification: Classification,
}

/// Marks `x` critical iff `d - x` is decomposable.
pub fn critical_vertices(d: &Digraph) -> Result<CriticalityReport> {
    if !is_indecomposable(d) {
        return Err(Error::Decomposable);
    }
    let n = d.order();
    let mut critical = VertexSet::empty(n);
    for x in 0..n {
        if !is_indecomposable(&d.remove_vertex(x)) {
            critical.insert(x);
        }
    }
    let noncritical = critical.complement();
    let classification = if n < 4 {
        Classification::TooSmall
    } else if noncritical.is_empty() {
        Classification::Critical
    } else if noncritical.len() == 1 && n >= 5 {
        Classification::MinusOneCritical(noncritical.iter().next().unwrap())
    } else {
        Classification::MultipleNonCritical
    };
    Ok(CriticalityReport { order: n, critical, noncritical, classification })
}

/// Classification that also covers decomposable input.
pub fn classify(d: &Digraph) -> Classification {
    match critical_vertices(d) {
        Ok(r) => r.classification,
        Err(_) => Classification::Decomposable,
    }
}

/// Finds `u ≠ v` outside `x` such that `d[x ∪ {u, v}]` is indecomposable.
///
/// Requires `d` and `d[x]` indecomposable and `3 ≤ |x| ≤ n - 2`; under
/// those conditions a pair always exists, so `Ok(None)` signals a bug.
pub fn check_extension(d: &Digraph, x: &VertexSet) -> Result<Option<(usize, usize)>> {
    let n = d.order();
    if let Some(v) = x.iter().find(|&v| v >= n) {
        return Err(Error::VertexOutOfRange { vertex: v, order: n });
    }
    if x.len() < 3 || x.len() + 2 > n {
        return Err(Error::Precondition(format!("need 3 <= |X| <= n - 2, got |X| = {} with n = {n}", x.len())));
    }
    if !is_indecomposable(d) {
        return Err(Error::Precondition("digraph is decomposable".into()));
    }
    if !is_indecomposable(&d.induced(x)?) {
        return Err(Error::Precondition("D[X] is decomposable".into()));
    }
    let mut base = VertexSet::empty(n);
    for v in x.iter() {
        base.insert(v);
    }
    let outside = base.complement().to_vec();
    for (i, &u) in outside.iter().enumerate() {
        for &v in &outside[i + 1..] {
            let mut grown = base.clone();
            grown.insert(u);
            grown.insert(v);
            if is_indecomposable(&d.induced(&grown)?) {
                return Ok(Some((u, v)));
            }
        }
    }
    Ok(None)
}

/// Whether `d` has an indecomposable induced subdigraph on exactly `k` vertices.
pub fn has_indecomposable_of_order(d: &Digraph, k: usize) -> bool {
    let n = d.order();
    if k > n || k < 3 {
        return false;
    }
    subsets_of_size(n, k).any(|s| is_indecomposable(&d.induced(&s).unwrap()))
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = VertexSet> {
    let mut idx: Vec<usize> = (0..k).collect();
    let mut done = k > n;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let set = VertexSet::from_vertices(n, idx.iter().copied()).unwrap();
        // advance to the next combination
        let mut i = k;
        loop {
            if i == 0 {
                done = true;
                break;
            }
            i -= 1;
            if idx[i] < n - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(set)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{oriented_path4, total_order, Graph};

    fn set(n: usize, v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, v.iter().copied()).unwrap()
    }

    fn g4_path() -> Digraph {
        Graph::from_edges(4, [(0, 1), (0, 3), (2, 3)]).unwrap().as_digraph()
    }

    fn bull() -> Digraph {
        Graph::from_edges(5, [(1, 2), (3, 4), (0, 2), (0, 4), (2, 4)]).unwrap().as_digraph()
    }

    #[test]
    fn trivial_intervals() {
        let d = g4_path();
        assert!(is_interval(&d, &VertexSet::empty(4)));
        assert!(is_interval(&d, &set(4, &[2])));
        assert!(is_interval(&d, &d.vertices()));
        assert!(!is_interval(&d, &set(4, &[0, 2])));
        let k3 = Graph::complete(3).as_digraph();
        assert!(is_interval(&k3, &set(3, &[0, 1])));
    }

    #[test]
    fn closure_examples() {
        let k5 = Graph::complete(5).as_digraph();
        assert_eq!(minimal_interval_containing(&k5, 1, 3), set(5, &[1, 3]));
        assert!(minimal_interval_containing(&g4_path(), 0, 2).is_full());
    }

    #[test]
    fn bruteforce_counts() {
        assert_eq!(intervals_bruteforce(&Graph::complete(3).as_digraph()).unwrap().len(), 8);
        assert_eq!(intervals_bruteforce(&g4_path()).unwrap().len(), 6);
        assert_eq!(intervals_bruteforce(&bull()).unwrap().len(), 7);
        assert!(intervals_bruteforce(&Digraph::empty(17)).is_err());
    }

    #[test]
    fn small_orders_are_decomposable() {
        assert!(!is_indecomposable(&Digraph::empty(0)));
        assert!(!is_indecomposable(&Digraph::from_arcs(2, [(0, 1)]).unwrap()));
        // the directed 3-cycle is indecomposable but never a poset
        let c3 = Digraph::from_arcs(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(is_indecomposable(&c3));
        assert_eq!(classify(&c3), Classification::TooSmall);
        assert!(!is_indecomposable(total_order(3).digraph()));
    }

    #[test]
    fn oriented_path_is_indecomposable() {
        let p = oriented_path4();
        assert!(is_indecomposable(p.digraph()));
        assert!(is_indecomposable(&p.digraph().dual()));
    }

    #[test]
    fn bull_is_minus_one_critical_at_zero() {
        let r = critical_vertices(&bull()).unwrap();
        assert_eq!(r.classification, Classification::MinusOneCritical(0));
        assert_eq!(r.critical.to_vec(), vec![1, 2, 3, 4]);
        assert_eq!(r.noncritical.to_vec(), vec![0]);
    }

    #[test]
    fn criticality_rejects_decomposable() {
        assert_eq!(critical_vertices(&Digraph::empty(4)), Err(Error::Decomposable));
        assert_eq!(classify(&Digraph::empty(4)), Classification::Decomposable);
    }

    #[test]
    fn p4_is_critical() {
        assert_eq!(classify(&g4_path()), Classification::Critical);
    }

    #[test]
    fn extension_preconditions() {
        let b = bull();
        // 3-vertex graphs are never indecomposable
        assert!(matches!(check_extension(&b, &set(5, &[1, 2, 4])), Err(Error::Precondition(_))));
        assert!(check_extension(&b, &set(5, &[0, 1])).is_err());
        assert!(check_extension(&Digraph::empty(6), &set(6, &[0, 1, 2])).is_err());
    }

    #[test]
    fn extension_on_five_vertices_uses_remaining_pair() {
        // directed 3-cycle on {0,1,2} inside an indecomposable tournament on 5
        let d = Digraph::from_arcs(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 1), (2, 3), (4, 0), (1, 4), (4, 2), (3, 4)])
            .unwrap();
        assert!(is_indecomposable(&d));
        assert_eq!(check_extension(&d, &set(5, &[0, 1, 2])).unwrap(), Some((3, 4)));
    }

    #[test]
    fn subsets_enumeration() {
        assert_eq!(subsets_of_size(5, 2).count(), 10);
        assert_eq!(subsets_of_size(4, 4).count(), 1);
        assert_eq!(subsets_of_size(3, 4).count(), 0);
        assert_eq!(subsets_of_size(3, 0).count(), 1);
    }
}
