//! Transitive orientations, comparability recognition, induced-subgraph
//! embedding and the split-graph forbidden-subgraph criteria.

use serde::Serialize;

use crate::families::{g_composite, g_prime_composite, split_witnesses, CompositionParams};
use crate::graph::{Digraph, Graph, Poset};
use crate::set::VertexSet;
use crate::{Error, Result};

/// Default cap on the number of orientations collected.
pub const DEFAULT_ORIENTATION_LIMIT: usize = 10_000;

#[derive(Clone, Debug)]
pub struct OrientationResult {
    /// Distinct transitive orientations, in search order.
    pub orientations: Vec<Poset>,
    /// `true` iff the whole search tree was explored.
    pub exhausted: bool,
    /// Branch nodes visited.
    pub nodes: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Dir {
    Unset,
    /// From the smaller endpoint to the larger one.
    Up,
    Down,
}

struct Search<'a> {
    g: &'a Graph,
    edges: Vec<(usize, usize)>,
    edge_id: Vec<Option<usize>>,
    dir: Vec<Dir>,
    trail: Vec<usize>,
    found: Vec<Poset>,
    limit: usize,
    node_budget: Option<u64>,
    nodes: u64,
    stop_at_first: bool,
    halted: bool,
    /// Stopped by the limit or the node budget.
    truncated: bool,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, limit: usize, node_budget: Option<u64>) -> Self {
        let n = g.order();
        let edges: Vec<(usize, usize)> = g.edges().collect();
        let mut edge_id = vec![None; n * n];
        for (i, &(x, y)) in edges.iter().enumerate() {
            edge_id[x * n + y] = Some(i);
            edge_id[y * n + x] = Some(i);
        }
        let m = edges.len();
        Search {
            g,
            edges,
            edge_id,
            dir: vec![Dir::Unset; m],
            trail: Vec::new(),
            found: Vec::new(),
            limit,
            node_budget,
            nodes: 0,
            stop_at_first: false,
            halted: false,
            truncated: false,
        }
    }

    fn id(&self, a: usize, b: usize) -> Option<usize> {
        self.edge_id[a * self.g.order() + b]
    }

    fn wanted(a: usize, b: usize) -> Dir {
        if a < b {
            Dir::Up
        } else {
            Dir::Down
        }
    }

    /// Is the edge `{a,b}` currently directed `a → b`?
    fn is_arc(&self, a: usize, b: usize) -> bool {
        self.id(a, b).is_some_and(|e| self.dir[e] == Self::wanted(a, b))
    }

    /// Directs `a → b` and propagates forced directions. Returns `false`
    /// on a contradiction; the caller unwinds the trail either way.
    fn assign(&mut self, a: usize, b: usize) -> bool {
        let mut work = vec![(a, b)];
        while let Some((a, b)) = work.pop() {
            let Some(e) = self.id(a, b) else { return false };
            let want = Self::wanted(a, b);
            match self.dir[e] {
                Dir::Unset => {
                    self.dir[e] = want;
                    self.trail.push(e);
                }
                d if d == want => continue,
                _ => return false,
            }
            let na = self.g.neighbors(a);
            let nb = self.g.neighbors(b);
            // a→b with c adjacent to a only: c→a would force c–b, so a→c
            for c in na.iter() {
                if c != b && !nb.contains(c) {
                    work.push((a, c));
                }
            }
            // a→b with c adjacent to b only: b→c would force a–c, so c→b
            for c in nb.iter() {
                if c != a && !na.contains(c) {
                    work.push((c, b));
                }
            }
            // transitive closure of already directed paths through a→b
            for c in nb.iter() {
                if c != a && self.is_arc(b, c) {
                    if !na.contains(c) {
                        return false;
                    }
                    work.push((a, c));
                }
            }
            for c in na.iter() {
                if c != b && self.is_arc(c, a) {
                    if !nb.contains(c) {
                        return false;
                    }
                    work.push((c, b));
                }
            }
        }
        true
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let e = self.trail.pop().unwrap();
            self.dir[e] = Dir::Unset;
        }
    }

    fn leaf(&mut self) {
        let n = self.g.order();
        let arcs = self.edges.iter().zip(&self.dir).map(|(&(x, y), d)| match d {
            Dir::Up => (x, y),
            Dir::Down => (y, x),
            Dir::Unset => unreachable!("leaf with an undirected edge"),
        });
        let d = Digraph::from_arcs(n, arcs).expect("orientation of a valid graph");
        // forcing is only pruning; the leaf test alone decides
        if let Ok(p) = Poset::new(d) {
            if self.found.len() == self.limit {
                self.truncated = true;
                self.halted = true;
            } else {
                self.found.push(p);
                self.halted |= self.stop_at_first;
            }
        }
    }

    fn run(&mut self, from: usize) {
        if self.halted {
            return;
        }
        let Some(next) = (from..self.edges.len()).find(|&e| self.dir[e] == Dir::Unset) else {
            self.leaf();
            return;
        };
        let (x, y) = self.edges[next];
        for (a, b) in [(x, y), (y, x)] {
            if self.halted {
                return;
            }
            self.nodes += 1;
            if self.node_budget.is_some_and(|budget| self.nodes > budget) {
                self.truncated = true;
                self.halted = true;
                return;
            }
            let mark = self.trail.len();
            if self.assign(a, b) {
                self.run(next + 1);
            }
            self.undo_to(mark);
        }
    }
}

/// Every transitive orientation of `g`, up to `limit` of them.
///
/// Edges are decided in lexicographic order, smaller endpoint first.
pub fn transitive_orientations(g: &Graph, limit: usize) -> OrientationResult {
    orientations_with_budget(g, limit, None)
}

/// As [`transitive_orientations`], additionally stopping after
/// `node_budget` branch nodes.
pub fn orientations_with_budget(g: &Graph, limit: usize, node_budget: Option<u64>) -> OrientationResult {
    let mut s = Search::new(g, limit, node_budget);
    s.run(0);
    OrientationResult { orientations: s.found, exhausted: !s.truncated, nodes: s.nodes }
}

/// First transitive orientation found, if any.
pub fn find_transitive_orientation(g: &Graph) -> Option<Poset> {
    first_orientation(g, None).found.pop()
}

fn first_orientation(g: &Graph, node_budget: Option<u64>) -> Search<'_> {
    let mut s = Search::new(g, 1, node_budget);
    s.stop_at_first = true;
    s.run(0);
    s
}

pub fn is_comparability(g: &Graph) -> bool {
    find_transitive_orientation(g).is_some()
}

/// An injective map from pattern vertices to host vertices realizing the
/// pattern as an induced subgraph, if one exists.
pub fn find_embedding(pattern: &Graph, host: &Graph) -> Option<Vec<usize>> {
    let (p, h) = (pattern.order(), host.order());
    if p > h {
        return None;
    }
    // place high-degree pattern vertices first
    let mut order: Vec<usize> = (0..p).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(pattern.degree(v)));
    let mut image = vec![usize::MAX; p];
    let mut used = VertexSet::empty(h);

    fn place(
        depth: usize,
        order: &[usize],
        pattern: &Graph,
        host: &Graph,
        image: &mut [usize],
        used: &mut VertexSet,
    ) -> bool {
        let Some(&v) = order.get(depth) else { return true };
        let (pn, hn) = (pattern.order(), host.order());
        let pdeg = pattern.degree(v);
        let pco = pn - 1 - pdeg;
        for w in 0..hn {
            if used.contains(w) {
                continue;
            }
            let hdeg = host.degree(w);
            if hdeg < pdeg || hn - 1 - hdeg < pco {
                continue;
            }
            let consistent = order[..depth].iter().all(|&u| pattern.has_edge(u, v) == host.has_edge(image[u], w));
            if !consistent {
                continue;
            }
            image[v] = w;
            used.insert(w);
            if place(depth + 1, order, pattern, host, image, used) {
                return true;
            }
            used.remove(w);
        }
        false
    }

    if place(0, &order, pattern, host, &mut image, &mut used) {
        Some(image)
    } else {
        None
    }
}

/// Whether `host` has an induced subgraph isomorphic to `pattern`.
pub fn embeds(pattern: &Graph, host: &Graph) -> bool {
    find_embedding(pattern, host).is_some()
}

/// A partition of the vertices into a clique and a stable set, if one
/// exists.
///
/// Uses the degree-sequence characterization of split graphs: with degrees
/// sorted decreasingly and `m` the largest index with `d_m ≥ m - 1`, the
/// graph is split iff `Σ_{i≤m} d_i = m(m-1) + Σ_{i>m} d_i`, and then the
/// top `m` vertices form a clique.
pub fn split_partition(g: &Graph) -> Option<(VertexSet, VertexSet)> {
    let n = g.order();
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let degrees: Vec<usize> = by_degree.iter().map(|&v| g.degree(v)).collect();
    let m = (1..=n).filter(|&i| degrees[i - 1] + 1 >= i).max().unwrap_or(0);
    let head: usize = degrees[..m].iter().sum();
    let tail: usize = degrees[m..].iter().sum();
    if head != m * m.saturating_sub(1) + tail {
        return None;
    }
    let clique = VertexSet::from_vertices(n, by_degree[..m].iter().copied()).unwrap();
    let stable = clique.complement();
    debug_assert!(is_valid_split(g, &clique, &stable));
    Some((clique, stable))
}

/// Checks that `clique` is a clique, `stable` is stable, and together they
/// partition the vertices.
pub fn is_valid_split(g: &Graph, clique: &VertexSet, stable: &VertexSet) -> bool {
    if !clique.is_disjoint(stable) || clique.union(stable).len() != g.order() {
        return false;
    }
    let pairs_ok = |s: &VertexSet, want: bool| {
        let v = s.to_vec();
        v.iter().enumerate().all(|(i, &x)| v[i + 1..].iter().all(|&y| g.has_edge(x, y) == want))
    };
    pairs_ok(clique, true) && pairs_ok(stable, false)
}

pub fn is_split(g: &Graph) -> bool {
    split_partition(g).is_some()
}

/// For a split graph: `true` iff it embeds none of `G1, G2, G4`
/// (equivalently, it is a comparability graph).
pub fn split_comparability_forbidden(g: &Graph) -> Result<bool> {
    if !is_split(g) {
        return Err(Error::NotSplit);
    }
    let h = split_witnesses();
    Ok(![&h.g1, &h.g2, &h.g4].iter().any(|p| embeds(p, g)))
}

/// For a split graph: `true` iff it embeds none of `G1, G2, G3`
/// (equivalently, its complement is a comparability graph).
pub fn split_complement_comparability_forbidden(g: &Graph) -> Result<bool> {
    if !is_split(g) {
        return Err(Error::NotSplit);
    }
    let h = split_witnesses();
    Ok(![&h.g1, &h.g2, &h.g3].iter().any(|p| embeds(p, g)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ProbeOutcome {
    Comparability,
    NotComparability,
    /// The node budget ran out first.
    Inconclusive,
    /// The graph is not defined for these parameters.
    NotApplicable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ProbeStatus {
    Complete,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProbeResult {
    pub complement_of_g_comparability: ProbeOutcome,
    pub complement_of_g_prime_comparability: ProbeOutcome,
}

/// Evidence on whether the complements of `G_{2n1,…,2nk}` and
/// `G'_{2n1,…,2nk}` (k ≥ 3) are comparability graphs. Data only.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProbeRecord {
    pub params: CompositionParams,
    pub result: ProbeResult,
    pub status: ProbeStatus,
    pub nodes: u64,
}

pub fn conjecture_probe(p: &CompositionParams, node_budget: Option<u64>) -> Result<ProbeRecord> {
    if p.k() < 3 {
        return Err(Error::InvalidParams(format!("conjecture probe needs k >= 3 (got {p})")));
    }
    let mut nodes = 0;
    let mut decide = |g: &Graph| {
        let s = first_orientation(g, node_budget);
        nodes += s.nodes;
        if !s.found.is_empty() {
            ProbeOutcome::Comparability
        } else if s.truncated {
            ProbeOutcome::Inconclusive
        } else {
            ProbeOutcome::NotComparability
        }
    };
    let g = decide(&g_composite(p)?.complement());
    let g_prime =
        if p.part(1) >= 2 { decide(&g_prime_composite(p)?.complement()) } else { ProbeOutcome::NotApplicable };
    let status = if g == ProbeOutcome::Inconclusive || g_prime == ProbeOutcome::Inconclusive {
        ProbeStatus::Inconclusive
    } else {
        ProbeStatus::Complete
    };
    Ok(ProbeRecord {
        params: p.clone(),
        result: ProbeResult { complement_of_g_comparability: g, complement_of_g_prime_comparability: g_prime },
        status,
        nodes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::h_split;
    use crate::graph::{cycle5, path4};

    fn cp(v: &[usize]) -> CompositionParams {
        CompositionParams::new(v.to_vec()).unwrap()
    }

    #[test]
    fn p4_has_two_dual_orientations() {
        let r = transitive_orientations(&path4(), DEFAULT_ORIENTATION_LIMIT);
        assert!(r.exhausted);
        assert_eq!(r.orientations.len(), 2);
        assert_eq!(r.orientations[0].dual(), r.orientations[1]);
    }

    #[test]
    fn complete_graphs_have_factorial_orientations() {
        for (n, fact) in [(1, 1), (2, 2), (3, 6), (4, 24)] {
            let r = transitive_orientations(&Graph::complete(n), DEFAULT_ORIENTATION_LIMIT);
            assert_eq!(r.orientations.len(), fact);
            assert!(r.exhausted);
            for o in &r.orientations {
                assert_eq!(o.digraph().arc_count(), n * (n - 1) / 2);
            }
        }
    }

    #[test]
    fn c5_has_none() {
        let r = transitive_orientations(&cycle5(), DEFAULT_ORIENTATION_LIMIT);
        assert!(r.orientations.is_empty());
        assert!(r.exhausted);
        assert!(!is_comparability(&cycle5()));
    }

    #[test]
    fn limit_is_respected() {
        let r = transitive_orientations(&Graph::complete(4), 5);
        assert_eq!(r.orientations.len(), 5);
        assert!(!r.exhausted);
        let exact = transitive_orientations(&path4(), 2);
        assert!(exact.exhausted);
    }

    #[test]
    fn budget_makes_search_inconclusive() {
        let r = orientations_with_budget(&Graph::complete(5), usize::MAX, Some(3));
        assert!(!r.exhausted);
    }

    #[test]
    fn split_graph_comparability() {
        assert!(is_comparability(&h_split(&cp(&[1, 1])).unwrap()));
        let h111 = h_split(&cp(&[1, 1, 1])).unwrap();
        assert!(!is_comparability(&h111));
        assert!(!is_comparability(&h111.complement()));
    }

    #[test]
    fn embedding_examples() {
        let h = split_witnesses();
        let h111 = h_split(&cp(&[1, 1, 1])).unwrap();
        assert!(embeds(&h111, &h111));
        let img = find_embedding(&h.g1, &h111).unwrap();
        let sub = VertexSet::from_vertices(7, img.iter().copied()).unwrap();
        assert_eq!(sub.len(), 6);
        let x = VertexSet::from_vertices(7, 1..=6).unwrap();
        assert!(embeds(&h.g1, &h111.induced(&x).unwrap()));
        assert!(embeds(&h.g2, &h111.complement()));
        assert!(!embeds(&h.g3, &h.g1));
        assert!(!embeds(&cycle5(), &path4()));
    }

    #[test]
    fn split_witness_comparability() {
        let h = split_witnesses();
        assert!(is_comparability(&h.g3));
        assert!(!is_comparability(&h.g1));
        assert!(!is_comparability(&h.g2));
        assert!(!is_comparability(&h.g4));
    }

    #[test]
    fn split_partitions() {
        let bull = h_split(&cp(&[1, 1])).unwrap();
        let (c, s) = split_partition(&bull).unwrap();
        assert_eq!((c.to_vec(), s.to_vec()), (vec![0, 2, 4], vec![1, 3]));
        let p4 = Graph::from_edges(4, [(0, 1), (0, 3), (2, 3)]).unwrap();
        let (c, s) = split_partition(&p4).unwrap();
        assert!(is_valid_split(&p4, &c, &s));
        assert_eq!(c.to_vec(), vec![0, 3]);
        assert!(split_partition(&cycle5()).is_none());
        assert!(split_partition(&Graph::empty(0)).is_some());
    }

    #[test]
    fn forbidden_subgraph_criteria() {
        let bull = h_split(&cp(&[1, 1])).unwrap();
        assert_eq!(split_comparability_forbidden(&bull), Ok(true));
        assert_eq!(split_complement_comparability_forbidden(&bull), Ok(true));
        let h111 = h_split(&cp(&[1, 1, 1])).unwrap();
        assert_eq!(split_comparability_forbidden(&h111), Ok(false));
        assert_eq!(split_complement_comparability_forbidden(&h111), Ok(false));
        assert_eq!(split_comparability_forbidden(&cycle5()), Err(Error::NotSplit));
    }

    #[test]
    fn h_with_two_blocks() {
        let g3 = split_witnesses().g3;
        for p in [[1, 2], [2, 1], [2, 2]] {
            let h = h_split(&cp(&p)).unwrap();
            assert_eq!(split_comparability_forbidden(&h), Ok(true));
            assert_eq!(split_complement_comparability_forbidden(&h), Ok(!embeds(&g3, &h)));
        }
    }

    #[test]
    fn probe_needs_three_blocks() {
        assert!(conjecture_probe(&cp(&[1, 1]), None).is_err());
        let r = conjecture_probe(&cp(&[2, 1, 1]), None).unwrap();
        assert_eq!(r.status, ProbeStatus::Complete);
        let r = conjecture_probe(&cp(&[1, 1, 1]), None).unwrap();
        assert_eq!(r.result.complement_of_g_prime_comparability, ProbeOutcome::NotApplicable);
    }
}
