//! Canonical forms for small graphs and digraphs.
//!
//! Individualization-refinement: vertices are split into an ordered
//! equitable partition by in/out neighbor counts, one vertex of the first
//! non-singleton cell is individualized at each level, and the minimum
//! adjacency bitstring over all leaves is the form. Twin vertices inside
//! the branching cell are interchangeable by an automorphism, so only one
//! per twin class is branched on.

use std::cmp::Ordering;

use serde::Serialize;

use crate::graph::{AnyGraph, Digraph, Graph};
use crate::{Error, Result};

/// Largest order accepted by [`canonical_form`].
pub const CANON_MAX_ORDER: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Graph,
    Digraph,
}

/// Isomorphism-invariant fingerprint: equal iff the inputs are isomorphic.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    kind: Kind,
    order: usize,
    /// Row-major off-diagonal adjacency bits, most significant first.
    bits: u128,
    bits_hi: u32,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    /// Adjacency bitstring as `0`/`1` characters.
    pub fn bitstring(&self) -> String {
        let len = self.order * self.order.saturating_sub(1);
        (0..len).map(|i| if self.bit(i) { '1' } else { '0' }).collect()
    }

    fn bit(&self, i: usize) -> bool {
        // 132 bits at most (n = 12); the first 32 live in bits_hi
        let len = self.order * self.order.saturating_sub(1);
        let from_end = len - 1 - i;
        if from_end < 128 {
            self.bits >> from_end & 1 == 1
        } else {
            self.bits_hi >> (from_end - 128) & 1 == 1
        }
    }
}

/// Bit rows, `rows[v]` has bit `w` set iff `v → w`.
#[derive(Clone)]
struct Rows {
    out: Vec<u16>,
    inn: Vec<u16>,
}

impl Rows {
    fn of(d: &Digraph) -> Rows {
        let n = d.order();
        let mut out = vec![0u16; n];
        let mut inn = vec![0u16; n];
        for (x, y) in d.arcs() {
            out[x] |= 1 << y;
            inn[y] |= 1 << x;
        }
        Rows { out, inn }
    }

    fn arc(&self, x: usize, y: usize) -> bool {
        self.out[x] >> y & 1 == 1
    }
}

/// Packed bitstring of the digraph read in the order `seq`.
fn encode(rows: &Rows, seq: &[usize]) -> (u32, u128) {
    let mut hi = 0u32;
    let mut lo = 0u128;
    for &a in seq {
        for &b in seq {
            if a == b {
                continue;
            }
            hi = hi << 1 | (lo >> 127) as u32;
            lo = lo << 1 | rows.arc(a, b) as u128;
        }
    }
    (hi, lo)
}

fn refine(rows: &Rows, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let masks: Vec<u16> = cells.iter().map(|c| c.iter().fold(0u16, |m, &v| m | 1 << v)).collect();
        let mut next = Vec::with_capacity(cells.len());
        let mut split = false;
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let key = |v: usize| -> Vec<(u32, u32)> {
                masks.iter().map(|&m| ((rows.out[v] & m).count_ones(), (rows.inn[v] & m).count_ones())).collect()
            };
            let mut keyed: Vec<(Vec<(u32, u32)>, usize)> = cell.iter().map(|&v| (key(v), v)).collect();
            keyed.sort();
            let mut group: Vec<usize> = Vec::new();
            let mut groups = 0;
            for i in 0..keyed.len() {
                if i > 0 && keyed[i].0 != keyed[i - 1].0 {
                    next.push(std::mem::take(&mut group));
                    groups += 1;
                }
                group.push(keyed[i].1);
            }
            next.push(group);
            if groups > 0 {
                split = true;
            }
        }
        cells = next;
        if !split {
            return cells;
        }
    }
}

fn twins(rows: &Rows, u: usize, v: usize) -> bool {
    let strip = !(1u16 << u | 1u16 << v);
    rows.out[u] & strip == rows.out[v] & strip
        && rows.inn[u] & strip == rows.inn[v] & strip
        && rows.arc(u, v) == rows.arc(v, u)
}

struct Best {
    code: (u32, u128),
    seq: Vec<usize>,
}

fn search(rows: &Rows, cells: Vec<Vec<usize>>, best: &mut Option<Best>) {
    let cells = refine(rows, cells);
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let seq: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let code = encode(rows, &seq);
        if best.as_ref().is_none_or(|b| code < b.code) {
            *best = Some(Best { code, seq });
        }
        return;
    };
    let cell = &cells[target];
    let mut reps: Vec<usize> = Vec::new();
    for &v in cell {
        if reps.iter().any(|&r| twins(rows, r, v)) {
            continue;
        }
        reps.push(v);
        let mut child = Vec::with_capacity(cells.len() + 1);
        child.extend_from_slice(&cells[..target]);
        child.push(vec![v]);
        child.push(cell.iter().copied().filter(|&w| w != v).collect());
        child.extend_from_slice(&cells[target + 1..]);
        search(rows, child, best);
    }
}

fn check_order(n: usize) -> Result<()> {
    if n > CANON_MAX_ORDER {
        return Err(Error::OrderTooLarge { what: "canonical form", order: n, limit: CANON_MAX_ORDER });
    }
    Ok(())
}

fn canonize(d: &Digraph, kind: Kind) -> Result<(CanonicalForm, Vec<usize>)> {
    let n = d.order();
    check_order(n)?;
    let rows = Rows::of(d);
    let mut best = None;
    let start = if n == 0 { Vec::new() } else { vec![(0..n).collect()] };
    search(&rows, start, &mut best);
    let best = best.expect("search always reaches a leaf");
    let form = CanonicalForm { kind, order: n, bits: best.code.1, bits_hi: best.code.0 };
    Ok((form, best.seq))
}

pub fn canonical_form(d: &Digraph) -> Result<CanonicalForm> {
    Ok(canonize(d, Kind::Digraph)?.0)
}

pub fn canonical_form_graph(g: &Graph) -> Result<CanonicalForm> {
    Ok(canonize(&g.as_digraph(), Kind::Graph)?.0)
}

pub fn canonical_form_any(a: &AnyGraph) -> Result<CanonicalForm> {
    match a {
        AnyGraph::Graph(g) => canonical_form_graph(g),
        AnyGraph::Digraph(d) => canonical_form(d),
    }
}

/// Permutation `perm` (vertex `x` goes to `perm[x]`) taking `d` to its
/// canonical labeling.
pub fn canonical_labeling(d: &Digraph) -> Result<Vec<usize>> {
    let (_, seq) = canonize(d, Kind::Digraph)?;
    let mut perm = vec![0; seq.len()];
    for (pos, &v) in seq.iter().enumerate() {
        perm[v] = pos;
    }
    Ok(perm)
}

pub fn canonical_digraph(d: &Digraph) -> Result<Digraph> {
    Ok(d.relabel(&canonical_labeling(d)?))
}

pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    Ok(g.relabel(&canonical_labeling(&g.as_digraph())?))
}

/// Isomorphism test; both sides must be the same kind.
pub fn is_isomorphic(a: &AnyGraph, b: &AnyGraph) -> Result<bool> {
    match (a, b) {
        (AnyGraph::Graph(_), AnyGraph::Digraph(_)) | (AnyGraph::Digraph(_), AnyGraph::Graph(_)) => {
            Err(Error::KindMismatch)
        }
        _ if a.order() != b.order() => Ok(false),
        _ => Ok(canonical_form_any(a)? == canonical_form_any(b)?),
    }
}

/// Lexicographically smallest adjacency bitstring over all `n!`
/// relabelings. Exponential; an oracle for tests (`n ≤ 8`).
pub fn canonical_form_bruteforce(d: &Digraph, kind: Kind) -> CanonicalForm {
    let n = d.order();
    assert!(n <= 9, "brute-force canonical form is limited to 9 vertices");
    let rows = Rows::of(d);
    let mut seq: Vec<usize> = (0..n).collect();
    let mut best = encode(&rows, &seq);
    // Heap's algorithm
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                seq.swap(0, i);
            } else {
                seq.swap(c[i], i);
            }
            let code = encode(&rows, &seq);
            if code.cmp(&best) == Ordering::Less {
                best = code;
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    CanonicalForm { kind, order: n, bits: best.1, bits_hi: best.0 }
}
