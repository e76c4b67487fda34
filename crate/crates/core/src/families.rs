//! Labeled generators for the named graph and poset families.
//!
//! Every generator reproduces the defining arc/edge formulas literally, so
//! labeled (not just isomorphic) comparisons between families are
//! meaningful. Composite families are assembled from translated copies of
//! the base objects.
//!
//! `R_{1,2n1,2n2}`: the first union of its defining formula,
//! `{(0,2p) : 0 ≤ p ≤ n1}`, contains the pair `(0,0)` at `p = 0`. That is a
//! loop, which digraphs cannot have, so it is dropped (erratum).

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::graph::{translate, translate_graph, AnyGraph, Digraph, Graph, Poset, Shifted};
use crate::{Error, Result};

/// Parameters `(n_1, …, n_k)` of a composite family, all `≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct CompositionParams {
    parts: Vec<usize>,
}

impl CompositionParams {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidParams("need at least one part".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidParams("every part must be >= 1".into()));
        }
        Ok(CompositionParams { parts })
    }

    pub fn k(&self) -> usize {
        self.parts.len()
    }

    /// `n_i`, 1-based.
    pub fn part(&self, i: usize) -> usize {
        self.parts[i - 1]
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Prefix sum `s_i = n_1 + … + n_i`, with `s_0 = 0`.
    pub fn prefix(&self, i: usize) -> usize {
        self.parts[..i].iter().sum()
    }

    /// `s_k`.
    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    fn require(&self, ok: bool, guard: &str) -> Result<()> {
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParams(format!("{guard} (got {self})")))
        }
    }
}

impl fmt::Display for CompositionParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for CompositionParams {
    type Err = Error;

    /// Comma-separated integers, e.g. `1,2,1`.
    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|w| w.trim().parse::<usize>().map_err(|_| Error::InvalidParams(format!("bad integer `{w}` in `{s}`"))))
            .collect::<Result<Vec<_>>>()?;
        CompositionParams::new(parts)
    }
}

/// Accumulates labeled pairs on a fixed carrier.
struct Assembly {
    order: usize,
    pairs: Vec<(usize, usize)>,
}

impl Assembly {
    fn new(order: usize) -> Self {
        Assembly { order, pairs: Vec::new() }
    }

    fn add(&mut self, x: usize, y: usize) {
        self.pairs.push((x, y));
    }

    fn add_shifted(&mut self, part: Shifted) {
        debug_assert!(part.offset + part.size <= self.order);
        self.pairs.extend(part.pairs);
    }

    fn graph(self) -> Graph {
        Graph::from_edges(self.order, self.pairs).expect("generator produced an invalid edge")
    }

    fn poset(self) -> Result<Poset> {
        let d = Digraph::from_arcs(self.order, self.pairs).expect("generator produced an invalid arc");
        Poset::new(d)
    }
}

// Unchecked base builders; composites use them with n = 1 as well.

fn half_graph(n: usize) -> Graph {
    let mut a = Assembly::new(2 * n);
    for i in 0..n {
        for j in i..n {
            a.add(2 * i, 2 * j + 1);
        }
    }
    a.graph()
}

fn half_graph_prime(n: usize) -> Graph {
    let mut a = Assembly::new(2 * n);
    a.pairs.extend(half_graph(n).edges());
    for p in 1..=n {
        for q in p + 1..=n {
            a.add(2 * p - 1, 2 * q - 1);
        }
    }
    a.graph()
}

fn q_base(n: usize) -> Poset {
    let mut a = Assembly::new(2 * n);
    for p in 0..n {
        for q in p..n {
            a.add(2 * p, 2 * q + 1);
        }
    }
    a.poset().expect("Q_2n is transitive")
}

fn q_prime_base(n: usize) -> Poset {
    let mut a = Assembly::new(2 * n);
    a.pairs.extend(q_base(n).digraph().arcs());
    for p in 1..=n {
        for q in p + 1..=n {
            a.add(2 * p - 1, 2 * q - 1);
        }
    }
    a.poset().expect("Q'_2n is transitive")
}

fn r_prime_base(n: usize) -> Poset {
    let mut a = Assembly::new(2 * n);
    for i in 0..n {
        for j in i + 1..n {
            a.add(2 * i, 2 * j);
            a.add(2 * i + 1, 2 * j);
        }
    }
    a.poset().expect("R'_2n is transitive")
}

fn r_base(n: usize) -> Poset {
    let mut a = Assembly::new(2 * n);
    a.pairs.extend(r_prime_base(n).digraph().arcs());
    for p in 0..n {
        for q in p + 1..n {
            a.add(2 * p + 1, 2 * q + 1);
        }
    }
    a.poset().expect("R_2n is transitive")
}

fn need_at_least(n: usize, min: usize, name: &str) -> Result<()> {
    if n < min {
        Err(Error::InvalidParams(format!("{name} needs n >= {min} (got {n})")))
    } else {
        Ok(())
    }
}

/// The critical half-graph `G_2n`: edges `{2i, 2j+1}` for `i ≤ j`.
pub fn g2n(n: usize) -> Result<Graph> {
    need_at_least(n, 2, "G_2n")?;
    Ok(half_graph(n))
}

/// `G'_2n`: `G_2n` plus a clique on the odd vertices.
pub fn g2n_prime(n: usize) -> Result<Graph> {
    need_at_least(n, 2, "G'_2n")?;
    Ok(half_graph_prime(n))
}

/// The critical poset `Q_2n`: arcs `(2p, 2q+1)` for `p ≤ q`.
pub fn q2n(n: usize) -> Result<Poset> {
    need_at_least(n, 2, "Q_2n")?;
    Ok(q_base(n))
}

pub fn q2n_prime(n: usize) -> Result<Poset> {
    need_at_least(n, 2, "Q'_2n")?;
    Ok(q_prime_base(n))
}

pub fn r2n_prime(n: usize) -> Result<Poset> {
    need_at_least(n, 1, "R'_2n")?;
    Ok(r_prime_base(n))
}

pub fn r2n(n: usize) -> Result<Poset> {
    need_at_least(n, 1, "R_2n")?;
    Ok(r_base(n))
}

/// `G_{2n1,…,2nk}` on `0..2s_k`. Accepts `k ≥ 2`; the family itself
/// requires `k ≥ 3`, which [`FamilyId::build`] enforces.
pub fn g_composite(p: &CompositionParams) -> Result<Graph> {
    p.require(p.k() >= 2, "G_{2n1,...,2nk} needs k >= 2")?;
    Ok(g_composite_unchecked(p))
}

fn g_composite_unchecked(p: &CompositionParams) -> Graph {
    let mut a = Assembly::new(2 * p.total());
    for i in 0..p.k() {
        a.add_shifted(translate_graph(&half_graph(p.part(i + 1)), 2 * p.prefix(i)));
    }
    let n1 = p.part(1);
    for i in 1..=n1 {
        for j in n1 + 1..=p.total() {
            a.add(2 * i - 1, 2 * j - 1);
        }
    }
    a.graph()
}

/// `G'_{2n1,…,2nk}`: the `G_{2n1}` block is replaced by `G'_{2n1}`.
pub fn g_prime_composite(p: &CompositionParams) -> Result<Graph> {
    p.require(p.k() >= 2 && p.part(1) >= 2, "G'_{2n1,...,2nk} needs k >= 2 and n1 >= 2")?;
    let base = g_composite_unchecked(p);
    let mut a = Assembly::new(base.order());
    a.pairs.extend(base.edges());
    let n1 = p.part(1);
    for i in 1..=n1 {
        for j in i + 1..=n1 {
            a.add(2 * i - 1, 2 * j - 1);
        }
    }
    Ok(a.graph())
}

/// The split graph `H_{1,2n1,…,2nk}` on `0..=2s_k`.
pub fn h_split(p: &CompositionParams) -> Result<Graph> {
    p.require(p.k() >= 2, "H_{1,2n1,...,2nk} needs k >= 2")?;
    let total = p.total();
    let mut a = Assembly::new(2 * total + 1);
    for i in 0..p.k() {
        a.add_shifted(translate_graph(&half_graph_prime(p.part(i + 1)), 2 * p.prefix(i) + 1));
    }
    for i in 0..=total {
        for j in i + 1..=total {
            a.add(2 * i, 2 * j);
        }
    }
    Ok(a.graph())
}

/// `Q_{2n1,…,2nk}`. Accepts `k ≥ 2` as a building block; the family
/// requires `k ≥ 3`.
pub fn q_composite(p: &CompositionParams) -> Result<Poset> {
    p.require(p.k() >= 2, "Q_{2n1,...,2nk} needs k >= 2")?;
    q_composite_assembly(p).poset()
}

fn q_composite_assembly(p: &CompositionParams) -> Assembly {
    let mut a = Assembly::new(2 * p.total());
    a.pairs.extend(q_base(p.part(1)).digraph().arcs());
    for i in 1..p.k() {
        let block = q_base(p.part(i + 1)).dual();
        a.add_shifted(translate(block.digraph(), 2 * p.prefix(i)));
    }
    let n1 = p.part(1);
    for i in 1..=n1 {
        for j in n1 + 1..=p.total() {
            a.add(2 * j - 1, 2 * i - 1);
        }
    }
    a
}

pub fn q_prime_composite(p: &CompositionParams) -> Result<Poset> {
    p.require(p.k() >= 2 && p.part(1) >= 2, "Q'_{2n1,...,2nk} needs k >= 2 and n1 >= 2")?;
    let mut a = q_composite_assembly(p);
    let n1 = p.part(1);
    for i in 1..=n1 {
        for j in i + 1..=n1 {
            a.add(2 * i - 1, 2 * j - 1);
        }
    }
    a.poset()
}

/// `R_{1,2n1,2n2}` on `0..=2(n1+n2)`; a transitive orientation of
/// `H_{1,2n1,2n2}`.
pub fn r_split(n1: usize, n2: usize) -> Result<Poset> {
    if n1 < 1 || n2 < 1 {
        return Err(Error::InvalidParams(format!("R_{{1,2n1,2n2}} needs n1, n2 >= 1 (got {n1},{n2})")));
    }
    let s2 = n1 + n2;
    let mut a = Assembly::new(2 * s2 + 1);
    a.add_shifted(translate(q_prime_base(n1).digraph(), 1));
    a.add_shifted(translate(q_prime_base(n2).dual().digraph(), 2 * n1 + 1));
    // p = 0 would give the loop (0,0)
    for p in 1..=n1 {
        a.add(0, 2 * p);
    }
    for p in 0..=n1 {
        for q in n1 + 1..=s2 {
            a.add(2 * q, 2 * p);
        }
    }
    a.poset()
}

/// `R'_{1,2n1,2n2}` on `0..=2(n1+n2)`; a transitive orientation of the
/// complement of `H_{1,2n1,2n2}`.
pub fn r_prime_split(n1: usize, n2: usize) -> Result<Poset> {
    if n1 < 1 || n2 < 1 {
        return Err(Error::InvalidParams(format!("R'_{{1,2n1,2n2}} needs n1, n2 >= 1 (got {n1},{n2})")));
    }
    let s2 = n1 + n2;
    let mut a = Assembly::new(2 * s2 + 1);
    a.add_shifted(translate(r_prime_base(n1).digraph(), 1));
    a.add_shifted(translate(r_prime_base(n2).dual().digraph(), 2 * n1 + 1));
    for q in n1 + 1..=s2 {
        for p in 0..=2 * n1 {
            a.add(2 * q - 1, p);
        }
    }
    for p in 1..=n1 {
        for q in std::iter::once(0).chain(n1 + 1..=s2) {
            a.add(2 * q, 2 * p - 1);
        }
    }
    a.poset()
}

/// `O_{2n1,2n2}` on `0..2(n1+n2)`; a transitive orientation of the
/// complement of `G'_{2n1,2n2}`.
pub fn o_composite(n1: usize, n2: usize) -> Result<Poset> {
    if n1 < 2 || n2 < 1 {
        return Err(Error::InvalidParams(format!("O_{{2n1,2n2}} needs n1 >= 2, n2 >= 1 (got {n1},{n2})")));
    }
    let s2 = n1 + n2;
    let mut a = Assembly::new(2 * s2);
    a.pairs.extend(r_prime_base(n1).digraph().arcs());
    a.add_shifted(translate(r_base(n2).dual().digraph(), 2 * n1));
    for q in n1..s2 {
        for p in 0..2 * n1 {
            a.add(2 * q, p);
        }
        for p in 0..n1 {
            a.add(2 * q + 1, 2 * p);
        }
    }
    a.poset()
}

/// Net (`G1`), 3-sun (`G2`), and the 7-vertex pair `G3`, `G4`.
#[derive(Clone, Debug)]
pub struct SplitWitnesses {
    pub g1: Graph,
    pub g2: Graph,
    pub g3: Graph,
    pub g4: Graph,
}

pub fn split_witnesses() -> SplitWitnesses {
    let g1 = Graph::from_edges(6, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)]).unwrap();
    let g3 = Graph::from_edges(
        7,
        [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (1, 4), (1, 5), (2, 5), (2, 6), (3, 6)],
    )
    .unwrap();
    SplitWitnesses { g2: g1.complement(), g4: g3.complement(), g1, g3 }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum FamilyTag {
    #[serde(rename = "Q")]
    Q,
    #[serde(rename = "Q'")]
    QPrime,
    #[serde(rename = "O")]
    O,
    #[serde(rename = "R")]
    R,
    #[serde(rename = "R'")]
    RPrime,
    #[serde(rename = "G")]
    G,
    #[serde(rename = "G'")]
    GPrime,
    #[serde(rename = "H")]
    H,
    #[serde(rename = "G1")]
    G1,
    #[serde(rename = "G2")]
    G2,
    #[serde(rename = "G3")]
    G3,
    #[serde(rename = "G4")]
    G4,
    #[serde(rename = "G2n")]
    BaseG2n,
    #[serde(rename = "G'2n")]
    BaseGPrime2n,
    #[serde(rename = "Q2n")]
    BaseQ2n,
    #[serde(rename = "Q'2n")]
    BaseQPrime2n,
    #[serde(rename = "R2n")]
    BaseR2n,
    #[serde(rename = "R'2n")]
    BaseRPrime2n,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 18] = [
        FamilyTag::Q,
        FamilyTag::QPrime,
        FamilyTag::O,
        FamilyTag::R,
        FamilyTag::RPrime,
        FamilyTag::G,
        FamilyTag::GPrime,
        FamilyTag::H,
        FamilyTag::G1,
        FamilyTag::G2,
        FamilyTag::G3,
        FamilyTag::G4,
        FamilyTag::BaseG2n,
        FamilyTag::BaseGPrime2n,
        FamilyTag::BaseQ2n,
        FamilyTag::BaseQPrime2n,
        FamilyTag::BaseR2n,
        FamilyTag::BaseRPrime2n,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyTag::Q => "Q",
            FamilyTag::QPrime => "Q'",
            FamilyTag::O => "O",
            FamilyTag::R => "R",
            FamilyTag::RPrime => "R'",
            FamilyTag::G => "G",
            FamilyTag::GPrime => "G'",
            FamilyTag::H => "H",
            FamilyTag::G1 => "G1",
            FamilyTag::G2 => "G2",
            FamilyTag::G3 => "G3",
            FamilyTag::G4 => "G4",
            FamilyTag::BaseG2n => "G2n",
            FamilyTag::BaseGPrime2n => "G'2n",
            FamilyTag::BaseQ2n => "Q2n",
            FamilyTag::BaseQPrime2n => "Q'2n",
            FamilyTag::BaseR2n => "R2n",
            FamilyTag::BaseRPrime2n => "R'2n",
        }
    }

    /// Whether the family consists of posets (as opposed to graphs).
    pub fn is_poset(self) -> bool {
        matches!(
            self,
            FamilyTag::Q
                | FamilyTag::QPrime
                | FamilyTag::O
                | FamilyTag::R
                | FamilyTag::RPrime
                | FamilyTag::BaseQ2n
                | FamilyTag::BaseQPrime2n
                | FamilyTag::BaseR2n
                | FamilyTag::BaseRPrime2n
        )
    }
}

impl FromStr for FamilyTag {
    type Err = Error;

    /// Case-insensitive; `p` or `prime` may stand for the apostrophe.
    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase().replace("prime", "'");
        let norm = match norm.as_str() {
            "gp" => "g'".to_string(),
            "qp" => "q'".to_string(),
            "rp" => "r'".to_string(),
            "gp2n" => "g'2n".to_string(),
            "qp2n" => "q'2n".to_string(),
            "rp2n" => "r'2n".to_string(),
            _ => norm,
        };
        FamilyTag::ALL
            .into_iter()
            .find(|t| t.name().to_ascii_lowercase() == norm)
            .ok_or_else(|| Error::InvalidParams(format!("unknown family `{s}`")))
    }
}

/// A family member: tag, parameters, and whether the dual (posets) or the
/// complement (graphs) is taken.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct FamilyId {
    pub tag: FamilyTag,
    pub params: Vec<usize>,
    pub dual: bool,
    pub complement: bool,
}

impl FamilyId {
    pub fn new(tag: FamilyTag, params: Vec<usize>) -> Self {
        FamilyId { tag, params, dual: false, complement: false }
    }

    pub fn dualized(mut self) -> Self {
        self.dual = !self.dual;
        self
    }

    pub fn complemented(mut self) -> Self {
        self.complement = !self.complement;
        self
    }

    /// Generates the member, enforcing the family's parameter guard.
    pub fn build(&self) -> Result<AnyGraph> {
        let params = &self.params;
        let comp = || -> Result<CompositionParams> { CompositionParams::new(params.clone()) };
        let exactly = |k: usize| -> Result<()> {
            if params.len() == k {
                Ok(())
            } else {
                Err(Error::InvalidParams(format!(
                    "family {} takes {k} parameter(s), got {}",
                    self.tag.name(),
                    params.len()
                )))
            }
        };
        let object: AnyGraph = match self.tag {
            FamilyTag::Q => {
                let p = comp()?;
                p.require(p.k() >= 3, "family Q requires k >= 3")?;
                q_composite(&p)?.into()
            }
            FamilyTag::QPrime => {
                let p = comp()?;
                p.require(p.k() >= 2 && p.part(1) >= 2, "family Q' requires k >= 2 and n1 >= 2")?;
                q_prime_composite(&p)?.into()
            }
            FamilyTag::O => {
                exactly(2)?;
                o_composite(params[0], params[1])?.into()
            }
            FamilyTag::R => {
                exactly(2)?;
                r_split(params[0], params[1])?.into()
            }
            FamilyTag::RPrime => {
                exactly(2)?;
                r_prime_split(params[0], params[1])?.into()
            }
            FamilyTag::G => {
                let p = comp()?;
                p.require(p.k() >= 3, "family G requires k >= 3")?;
                g_composite(&p)?.into()
            }
            FamilyTag::GPrime => {
                let p = comp()?;
                p.require(p.k() >= 2 && p.part(1) >= 2, "family G' requires k >= 2 and n1 >= 2")?;
                g_prime_composite(&p)?.into()
            }
            FamilyTag::H => h_split(&comp()?)?.into(),
            FamilyTag::G1 | FamilyTag::G2 | FamilyTag::G3 | FamilyTag::G4 => {
                exactly(0)?;
                let h = split_witnesses();
                match self.tag {
                    FamilyTag::G1 => h.g1,
                    FamilyTag::G2 => h.g2,
                    FamilyTag::G3 => h.g3,
                    _ => h.g4,
                }
                .into()
            }
            FamilyTag::BaseG2n => {
                exactly(1)?;
                g2n(params[0])?.into()
            }
            FamilyTag::BaseGPrime2n => {
                exactly(1)?;
                g2n_prime(params[0])?.into()
            }
            FamilyTag::BaseQ2n => {
                exactly(1)?;
                q2n(params[0])?.into()
            }
            FamilyTag::BaseQPrime2n => {
                exactly(1)?;
                q2n_prime(params[0])?.into()
            }
            FamilyTag::BaseR2n => {
                exactly(1)?;
                r2n(params[0])?.into()
            }
            FamilyTag::BaseRPrime2n => {
                exactly(1)?;
                r2n_prime(params[0])?.into()
            }
        };
        match object {
            AnyGraph::Digraph(d) => {
                if self.complement {
                    return Err(Error::InvalidParams("complement applies to graph families only".into()));
                }
                Ok(AnyGraph::Digraph(if self.dual { d.dual() } else { d }))
            }
            AnyGraph::Graph(g) => {
                if self.dual {
                    return Err(Error::InvalidParams("dual applies to poset families only".into()));
                }
                Ok(AnyGraph::Graph(if self.complement { g.complement() } else { g }))
            }
        }
    }
}

impl fmt::Display for FamilyId {
    /// Subscripts use the `2n_i` convention, e.g. `R_{1,2,4}` for `R` with
    /// parameters `(1,2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.complement {
            write!(f, "co-")?;
        }
        let doubled: Vec<String> = self.params.iter().map(|n| (2 * n).to_string()).collect();
        match self.tag {
            FamilyTag::G1 | FamilyTag::G2 | FamilyTag::G3 | FamilyTag::G4 => write!(f, "{}", self.tag.name())?,
            FamilyTag::R | FamilyTag::RPrime | FamilyTag::H => {
                write!(f, "{}_{{1,{}}}", self.tag.name(), doubled.join(","))?
            }
            FamilyTag::BaseG2n
            | FamilyTag::BaseGPrime2n
            | FamilyTag::BaseQ2n
            | FamilyTag::BaseQPrime2n
            | FamilyTag::BaseR2n
            | FamilyTag::BaseRPrime2n => {
                let name = self.tag.name().trim_end_matches("2n");
                write!(f, "{name}_{}", doubled.join(","))?
            }
            _ => write!(f, "{}_{{{}}}", self.tag.name(), doubled.join(","))?,
        }
        if self.dual {
            write!(f, "*")?;
        }
        Ok(())
    }
}

/// Order of the object a family member would have.
pub fn family_order(tag: FamilyTag, params: &[usize]) -> usize {
    let total: usize = params.iter().sum();
    match tag {
        FamilyTag::R | FamilyTag::RPrime | FamilyTag::H => 2 * total + 1,
        FamilyTag::G1 | FamilyTag::G2 => 6,
        FamilyTag::G3 | FamilyTag::G4 => 7,
        _ => 2 * total,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub id: FamilyId,
    #[serde(skip)]
    pub object: AnyGraph,
}

impl CatalogEntry {
    pub fn order(&self) -> usize {
        self.object.order()
    }

    pub fn is_poset(&self) -> bool {
        self.id.tag.is_poset()
    }
}

/// Compositions of every total `1..=max_total` into at least `min_k` parts,
/// in lexicographic order of the part lists.
fn compositions(max_total: usize, min_k: usize) -> Vec<Vec<usize>> {
    fn extend(rest: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        for next in 1..=rest {
            cur.push(next);
            extend(rest - next, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    extend(max_total, &mut Vec::new(), &mut out);
    out.retain(|c| c.len() >= min_k);
    out.sort();
    out
}

/// Every member of the (-1)-critical families of order `≤ max_order`:
/// posets `Q, Q', O, R, R'` each followed by its dual, and graphs
/// `G, G', H` each followed by its complement.
pub fn family_catalog(max_order: usize) -> Result<Vec<CatalogEntry>> {
    if max_order < 5 {
        return Err(Error::InvalidParams(format!("catalog needs max order >= 5 (got {max_order})")));
    }
    let mut members: Vec<FamilyId> = Vec::new();
    let half = max_order / 2;
    for tag in [
        FamilyTag::Q,
        FamilyTag::QPrime,
        FamilyTag::O,
        FamilyTag::R,
        FamilyTag::RPrime,
        FamilyTag::G,
        FamilyTag::GPrime,
        FamilyTag::H,
    ] {
        let candidates = match tag {
            FamilyTag::Q | FamilyTag::G => compositions(half, 3),
            FamilyTag::QPrime | FamilyTag::GPrime => compositions(half, 2).into_iter().filter(|c| c[0] >= 2).collect(),
            FamilyTag::O => compositions(half, 2).into_iter().filter(|c| c.len() == 2 && c[0] >= 2).collect(),
            FamilyTag::R | FamilyTag::RPrime => compositions(half, 2).into_iter().filter(|c| c.len() == 2).collect(),
            FamilyTag::H => compositions(half, 2),
            _ => unreachable!(),
        };
        for params in candidates {
            if family_order(tag, &params) > max_order {
                continue;
            }
            let id = FamilyId::new(tag, params);
            let twin = if tag.is_poset() { id.clone().dualized() } else { id.clone().complemented() };
            members.push(id);
            members.push(twin);
        }
    }
    members.into_iter().map(|id| Ok(CatalogEntry { object: id.build()?, id })).collect()
}
