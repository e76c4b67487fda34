//! Dense vertex-indexed graphs, digraphs and posets.
//!
//! Vertices are always `0..n`. Values are immutable once built; every
//! operation returns a fresh value.

use std::fmt;

use crate::set::VertexSet;
use crate::{Error, Result};

/// Loop-free digraph on `0..n` with adjacency-matrix semantics.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    out: Vec<VertexSet>,
    inn: Vec<VertexSet>,
}

impl Digraph {
    /// Digraph with no arcs.
    pub fn empty(order: usize) -> Self {
        Digraph { out: vec![VertexSet::empty(order); order], inn: vec![VertexSet::empty(order); order] }
    }

    pub fn from_arcs<I: IntoIterator<Item = (usize, usize)>>(order: usize, arcs: I) -> Result<Self> {
        let mut d = Self::empty(order);
        for (x, y) in arcs {
            d.insert_arc(x, y)?;
        }
        Ok(d)
    }

    pub(crate) fn insert_arc(&mut self, x: usize, y: usize) -> Result<()> {
        let order = self.order();
        for v in [x, y] {
            if v >= order {
                return Err(Error::VertexOutOfRange { vertex: v, order });
            }
        }
        if x == y {
            return Err(Error::SelfLoop(x));
        }
        self.out[x].insert(y);
        self.inn[y].insert(x);
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.out.len()
    }

    pub fn has_arc(&self, x: usize, y: usize) -> bool {
        self.out[x].contains(y)
    }

    pub fn out_neighbors(&self, x: usize) -> &VertexSet {
        &self.out[x]
    }

    pub fn in_neighbors(&self, x: usize) -> &VertexSet {
        &self.inn[x]
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(VertexSet::len).sum()
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out.iter().enumerate().flat_map(|(x, row)| row.iter().map(move |y| (x, y)))
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    /// Digraph with every arc reversed.
    pub fn dual(&self) -> Digraph {
        Digraph { out: self.inn.clone(), inn: self.out.clone() }
    }

    /// Subdigraph induced by `x`, relabeled `0..|x|` in ascending order of
    /// the members of `x`.
    pub fn induced(&self, x: &VertexSet) -> Result<Digraph> {
        check_subset(x, self.order())?;
        let members = x.to_vec();
        let mut d = Digraph::empty(members.len());
        for (i, &a) in members.iter().enumerate() {
            for (j, &b) in members.iter().enumerate() {
                if self.has_arc(a, b) {
                    d.out[i].insert(j);
                    d.inn[j].insert(i);
                }
            }
        }
        Ok(d)
    }

    /// `self - v`, relabeled.
    pub fn remove_vertex(&self, v: usize) -> Digraph {
        let mut keep = self.vertices();
        keep.remove(v);
        self.induced(&keep).expect("subset of own vertices")
    }

    /// Image under the bijection `perm` (vertex `x` becomes `perm[x]`).
    pub fn relabel(&self, perm: &[usize]) -> Digraph {
        assert_eq!(perm.len(), self.order());
        let mut d = Digraph::empty(self.order());
        for (x, y) in self.arcs() {
            d.out[perm[x]].insert(perm[y]);
            d.inn[perm[y]].insert(perm[x]);
        }
        d
    }

    /// First violation of transitivity as `(x, y, z)` with `x→y→z` and no `x→z`.
    pub fn transitivity_violation(&self) -> Option<(usize, usize, usize)> {
        for (x, y) in self.arcs() {
            for z in self.out[y].iter() {
                // a 2-cycle x→y→x would need the loop (x,x)
                if z == x || !self.has_arc(x, z) {
                    return Some((x, y, z));
                }
            }
        }
        None
    }

    pub fn is_transitive(&self) -> bool {
        self.transitivity_violation().is_none()
    }

    /// Underlying undirected graph.
    pub fn comparability_graph(&self) -> Graph {
        let mut g = Graph::empty(self.order());
        for (x, y) in self.arcs() {
            g.adj[x].insert(y);
            g.adj[y].insert(x);
        }
        g
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Digraph(n={}, ", self.order())?;
        f.debug_list().entries(self.arcs()).finish()?;
        write!(f, ")")
    }
}

/// Symmetric loop-free graph on `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    pub fn empty(order: usize) -> Self {
        Graph { adj: vec![VertexSet::empty(order); order] }
    }

    pub fn complete(order: usize) -> Self {
        Graph::empty(order).complement()
    }

    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(order: usize, edges: I) -> Result<Self> {
        let mut g = Self::empty(order);
        for (x, y) in edges {
            g.insert_edge(x, y)?;
        }
        Ok(g)
    }

    pub(crate) fn insert_edge(&mut self, x: usize, y: usize) -> Result<()> {
        let order = self.order();
        for v in [x, y] {
            if v >= order {
                return Err(Error::VertexOutOfRange { vertex: v, order });
            }
        }
        if x == y {
            return Err(Error::SelfLoop(x));
        }
        self.adj[x].insert(y);
        self.adj[y].insert(x);
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        self.adj[x].contains(y)
    }

    pub fn neighbors(&self, x: usize) -> &VertexSet {
        &self.adj[x]
    }

    pub fn degree(&self, x: usize) -> usize {
        self.adj[x].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges `(x, y)` with `x < y`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(x, row)| row.iter().filter(move |&y| y > x).map(move |y| (x, y)))
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    pub fn complement(&self) -> Graph {
        let n = self.order();
        let adj = (0..n)
            .map(|x| {
                let mut row = self.adj[x].complement();
                row.remove(x);
                row
            })
            .collect();
        Graph { adj }
    }

    pub fn induced(&self, x: &VertexSet) -> Result<Graph> {
        Ok(self.as_digraph().induced(x)?.symmetric_to_graph())
    }

    pub fn relabel(&self, perm: &[usize]) -> Graph {
        self.as_digraph().relabel(perm).symmetric_to_graph()
    }

    /// The symmetric digraph with both arcs for every edge.
    pub fn as_digraph(&self) -> Digraph {
        Digraph { out: self.adj.clone(), inn: self.adj.clone() }
    }
}

impl Digraph {
    // Only valid on digraphs produced from a Graph.
    fn symmetric_to_graph(self) -> Graph {
        Graph { adj: self.out }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, ", self.order())?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

/// A transitive digraph (strict partial order).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poset(Digraph);

impl Poset {
    /// Rejects any digraph that is not transitive.
    pub fn new(d: Digraph) -> Result<Self> {
        match d.transitivity_violation() {
            Some((x, y, z)) => Err(Error::NotTransitive(x, y, z)),
            None => Ok(Poset(d)),
        }
    }

    pub fn from_arcs<I: IntoIterator<Item = (usize, usize)>>(order: usize, arcs: I) -> Result<Self> {
        Poset::new(Digraph::from_arcs(order, arcs)?)
    }

    pub fn digraph(&self) -> &Digraph {
        &self.0
    }

    pub fn into_digraph(self) -> Digraph {
        self.0
    }

    pub fn order(&self) -> usize {
        self.0.order()
    }

    pub fn dual(&self) -> Poset {
        Poset(self.0.dual())
    }

    pub fn comparability_graph(&self) -> Graph {
        self.0.comparability_graph()
    }
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poset{:?}", self.0)
    }
}

impl AsRef<Digraph> for Poset {
    fn as_ref(&self) -> &Digraph {
        &self.0
    }
}

/// Either kind of structure, as carried by the text formats.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum AnyGraph {
    Graph(Graph),
    Digraph(Digraph),
}

impl AnyGraph {
    pub fn order(&self) -> usize {
        match self {
            AnyGraph::Graph(g) => g.order(),
            AnyGraph::Digraph(d) => d.order(),
        }
    }

    /// Digraph view; a graph becomes its symmetric digraph.
    pub fn to_digraph(&self) -> Digraph {
        match self {
            AnyGraph::Graph(g) => g.as_digraph(),
            AnyGraph::Digraph(d) => d.clone(),
        }
    }
}

impl From<Graph> for AnyGraph {
    fn from(g: Graph) -> Self {
        AnyGraph::Graph(g)
    }
}

impl From<Digraph> for AnyGraph {
    fn from(d: Digraph) -> Self {
        AnyGraph::Digraph(d)
    }
}

impl From<Poset> for AnyGraph {
    fn from(p: Poset) -> Self {
        AnyGraph::Digraph(p.into_digraph())
    }
}

/// A labeled pair set living on the shifted vertex range
/// `offset..offset + size`, as produced by [`translate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shifted {
    pub offset: usize,
    pub size: usize,
    pub pairs: Vec<(usize, usize)>,
}

/// Adds `offset` to every vertex of `d`.
pub fn translate(d: &Digraph, offset: usize) -> Shifted {
    Shifted { offset, size: d.order(), pairs: d.arcs().map(|(x, y)| (x + offset, y + offset)).collect() }
}

/// Adds `offset` to every vertex of `g`; pairs keep `x < y`.
pub fn translate_graph(g: &Graph, offset: usize) -> Shifted {
    Shifted { offset, size: g.order(), pairs: g.edges().map(|(x, y)| (x + offset, y + offset)).collect() }
}

/// The small named objects used throughout.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasicKind {
    Complete,
    Empty,
    /// `P4` labeled `0-1-2-3`.
    Path4,
    /// `→P4` with arcs `(0,1), (2,1), (2,3)`.
    OrientedPath4,
    /// `O_n` with arcs `(i,j)` for `i < j`.
    TotalOrder,
    Cycle5,
}

pub fn basic(kind: BasicKind, n: usize) -> Result<AnyGraph> {
    let need = |ok: bool, what: &str| {
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParams(format!("{what} (got n = {n})")))
        }
    };
    Ok(match kind {
        BasicKind::Complete => {
            need(n >= 1, "complete graph needs n >= 1")?;
            Graph::complete(n).into()
        }
        BasicKind::Empty => {
            need(n >= 1, "empty graph needs n >= 1")?;
            Graph::empty(n).into()
        }
        BasicKind::Path4 => {
            need(n == 4, "P4 has exactly 4 vertices")?;
            path4().into()
        }
        BasicKind::OrientedPath4 => {
            need(n == 4, "oriented P4 has exactly 4 vertices")?;
            oriented_path4().into_digraph().into()
        }
        BasicKind::TotalOrder => {
            need(n >= 1, "total order needs n >= 1")?;
            total_order(n).into_digraph().into()
        }
        BasicKind::Cycle5 => {
            need(n == 5, "C5 has exactly 5 vertices")?;
            cycle5().into()
        }
    })
}

pub fn path4() -> Graph {
    Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap()
}

pub fn oriented_path4() -> Poset {
    Poset::from_arcs(4, [(0, 1), (2, 1), (2, 3)]).unwrap()
}

pub fn total_order(n: usize) -> Poset {
    let arcs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
    Poset::from_arcs(n, arcs).unwrap()
}

pub fn cycle5() -> Graph {
    Graph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap()
}

fn check_subset(x: &VertexSet, order: usize) -> Result<()> {
    if x.order() > order {
        if let Some(v) = x.iter().find(|&v| v >= order) {
            return Err(Error::VertexOutOfRange { vertex: v, order });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, v.iter().copied()).unwrap()
    }

    #[test]
    fn rejects_loops_and_range() {
        assert_eq!(Digraph::from_arcs(3, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert!(matches!(Digraph::from_arcs(3, [(0, 3)]), Err(Error::VertexOutOfRange { vertex: 3, order: 3 })));
        assert!(Graph::from_edges(2, [(0, 0)]).is_err());
    }

    #[test]
    fn complement_of_empty_is_complete() {
        let k3 = Graph::empty(3).complement();
        assert_eq!(k3.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn dual_reverses_total_order() {
        let d = total_order(3).into_digraph().dual();
        let mut arcs: Vec<_> = d.arcs().collect();
        arcs.sort();
        assert_eq!(arcs, vec![(1, 0), (2, 0), (2, 1)]);
    }

    #[test]
    fn induced_relabels_in_order() {
        let q4 = Digraph::from_arcs(4, [(0, 1), (0, 3), (2, 3)]).unwrap();
        let sub = q4.induced(&set(4, &[0, 1, 3])).unwrap();
        assert_eq!(sub.order(), 3);
        assert_eq!(sub.arcs().collect::<Vec<_>>(), vec![(0, 1), (0, 2)]);
        assert_eq!(q4.induced(&q4.vertices()).unwrap(), q4);
    }

    #[test]
    fn induced_rejects_foreign_vertices() {
        let d = Digraph::empty(3);
        assert!(d.induced(&set(5, &[0, 4])).is_err());
    }

    #[test]
    fn translate_shifts_labels() {
        let q2 = Digraph::from_arcs(2, [(0, 1)]).unwrap();
        assert_eq!(translate(&q2, 1).pairs, vec![(1, 2)]);
        assert_eq!(translate(&q2, 0).pairs, q2.arcs().collect::<Vec<_>>());
        let g2 = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!(translate_graph(&g2, 3).pairs, vec![(3, 4)]);
    }

    #[test]
    fn transitivity_examples() {
        assert!(!Digraph::from_arcs(3, [(0, 1), (1, 2)]).unwrap().is_transitive());
        assert!(Digraph::from_arcs(3, [(0, 1), (1, 2), (0, 2)]).unwrap().is_transitive());
        let q42 = Digraph::from_arcs(6, [(0, 1), (0, 3), (2, 3), (5, 4), (5, 1), (5, 3), (1, 3)]).unwrap();
        assert!(q42.is_transitive());
        // a 2-cycle is not transitive
        assert!(!Digraph::from_arcs(2, [(0, 1), (1, 0)]).unwrap().is_transitive());
    }

    #[test]
    fn poset_rejects_non_transitive() {
        assert_eq!(Poset::from_arcs(3, [(0, 1), (1, 2)]).unwrap_err(), Error::NotTransitive(0, 1, 2));
    }

    #[test]
    fn comparability_examples() {
        let q4 = Digraph::from_arcs(4, [(0, 1), (0, 3), (2, 3)]).unwrap();
        assert_eq!(q4.comparability_graph().edges().collect::<Vec<_>>(), vec![(0, 1), (0, 3), (2, 3)]);
        for n in 1..6 {
            assert_eq!(total_order(n).comparability_graph(), Graph::complete(n));
        }
    }

    #[test]
    fn basic_objects() {
        let AnyGraph::Digraph(p) = basic(BasicKind::OrientedPath4, 4).unwrap() else { panic!() };
        assert_eq!(p.arcs().collect::<Vec<_>>(), vec![(0, 1), (2, 1), (2, 3)]);
        let AnyGraph::Digraph(o3) = basic(BasicKind::TotalOrder, 3).unwrap() else { panic!() };
        assert_eq!(o3.arcs().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (1, 2)]);
        let AnyGraph::Graph(c5) = basic(BasicKind::Cycle5, 5).unwrap() else { panic!() };
        assert_eq!(c5.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]);
        assert!(basic(BasicKind::Path4, 5).is_err());
        assert!(basic(BasicKind::Complete, 0).is_err());
    }
}
