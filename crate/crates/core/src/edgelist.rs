//! Plain-text edge lists and DOT export.
//!
//! ```text
//! # comment
//! digraph n=4
//! 0 1
//! 2 1
//! ```
//!
//! A `graph n=<N>` header introduces an undirected record instead. A file
//! may hold several records; each header starts a new one.

use std::fmt::Write as _;

use crate::graph::{AnyGraph, Digraph, Graph};
use crate::{Error, Result};

/// Directed flag, order, pairs.
type Record = (bool, usize, Vec<(usize, usize)>);

/// Parses every record in `text`.
pub fn parse_all(text: &str) -> Result<Vec<AnyGraph>> {
    let mut out = Vec::new();
    let mut current: Option<Record> = None;
    let mut header_line = 0;

    let finish = |rec: Option<Record>, line: usize, out: &mut Vec<AnyGraph>| -> Result<()> {
        if let Some((directed, n, pairs)) = rec {
            let parsed = if directed {
                Digraph::from_arcs(n, pairs).map(AnyGraph::Digraph)
            } else {
                Graph::from_edges(n, pairs).map(AnyGraph::Graph)
            };
            out.push(parsed.map_err(|e| Error::Parse { line, msg: e.to_string() })?);
        }
        Ok(())
    };

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut words = content.split_whitespace();
        let first = words.next().unwrap();
        if first == "digraph" || first == "graph" {
            let size = words
                .next()
                .and_then(|w| w.strip_prefix("n="))
                .ok_or_else(|| Error::Parse { line, msg: "expected `n=<order>` after header".into() })?;
            let n = size.parse::<usize>().map_err(|_| Error::Parse { line, msg: format!("bad order `{size}`") })?;
            if words.next().is_some() {
                return Err(Error::Parse { line, msg: "trailing input after header".into() });
            }
            finish(current.take(), header_line, &mut out)?;
            current = Some((first == "digraph", n, Vec::new()));
            header_line = line;
            continue;
        }
        let Some((_, _, pairs)) = current.as_mut() else {
            return Err(Error::Parse { line, msg: "pair before any `graph`/`digraph` header".into() });
        };
        let second = words.next().ok_or_else(|| Error::Parse { line, msg: "expected two vertices".into() })?;
        if words.next().is_some() {
            return Err(Error::Parse { line, msg: "expected exactly two vertices".into() });
        }
        let parse_vertex =
            |w: &str| w.parse::<usize>().map_err(|_| Error::Parse { line, msg: format!("bad vertex `{w}`") });
        pairs.push((parse_vertex(first)?, parse_vertex(second)?));
    }
    finish(current, header_line, &mut out)?;
    Ok(out)
}

/// Parses a text holding exactly one record.
pub fn parse(text: &str) -> Result<AnyGraph> {
    let mut all = parse_all(text)?;
    match all.len() {
        1 => Ok(all.pop().unwrap()),
        0 => Err(Error::Parse { line: 0, msg: "no graph or digraph record".into() }),
        k => Err(Error::Parse { line: 0, msg: format!("expected one record, found {k}") }),
    }
}

/// Normalized text: header, then pairs in lexicographic order.
pub fn emit(g: &AnyGraph) -> String {
    let mut s = String::new();
    match g {
        AnyGraph::Graph(g) => {
            writeln!(s, "graph n={}", g.order()).unwrap();
            for (x, y) in g.edges() {
                writeln!(s, "{x} {y}").unwrap();
            }
        }
        AnyGraph::Digraph(d) => {
            writeln!(s, "digraph n={}", d.order()).unwrap();
            for (x, y) in d.arcs() {
                writeln!(s, "{x} {y}").unwrap();
            }
        }
    }
    s
}

pub fn to_dot(g: &AnyGraph, name: &str) -> String {
    let (kw, sep) = match g {
        AnyGraph::Graph(_) => ("graph", "--"),
        AnyGraph::Digraph(_) => ("digraph", "->"),
    };
    let mut s = format!("{kw} \"{}\" {{\n", name.replace('"', "\\\""));
    for v in 0..g.order() {
        writeln!(s, "  {v};").unwrap();
    }
    let pairs: Vec<(usize, usize)> = match g {
        AnyGraph::Graph(g) => g.edges().collect(),
        AnyGraph::Digraph(d) => d.arcs().collect(),
    };
    for (x, y) in pairs {
        writeln!(s, "  {x} {sep} {y};").unwrap();
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments() {
        let text = "# P4 oriented\ndigraph n=4\n0 1 # first\n2 1\n\n2 3\n";
        let AnyGraph::Digraph(d) = parse(text).unwrap() else { panic!() };
        assert_eq!(d.arcs().collect::<Vec<_>>(), vec![(0, 1), (2, 1), (2, 3)]);
    }

    #[test]
    fn emit_is_normalized() {
        let g = parse("graph n=3\n2 1\n0 2\n").unwrap();
        assert_eq!(emit(&g), "graph n=3\n0 2\n1 2\n");
        assert_eq!(parse(&emit(&g)).unwrap(), g);
    }

    #[test]
    fn multiple_records() {
        let all = parse_all("graph n=2\n0 1\ndigraph n=3\n").unwrap();
        assert_eq!(all.len(), 2);
        assert!(parse("graph n=2\ngraph n=3\n").is_err());
    }

    #[test]
    fn malformed_inputs() {
        for bad in [
            "0 1\n",
            "graph\n",
            "graph n=x\n",
            "graph n=2\n0\n",
            "graph n=2\n0 5\n",
            "digraph n=2\n1 1\n",
            "graph n=2\n0 1 2\n",
        ] {
            assert!(matches!(parse(bad), Err(Error::Parse { .. })), "{bad:?}");
        }
    }

    #[test]
    fn dot_output() {
        let d = parse("digraph n=2\n0 1\n").unwrap();
        assert_eq!(to_dot(&d, "q2"), "digraph \"q2\" {\n  0;\n  1;\n  0 -> 1;\n}\n");
    }
}
