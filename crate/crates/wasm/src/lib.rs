//! Browser bindings: generate a family member, analyze an edge list, list
//! transitive orientations. Every call returns a JSON string.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use critposet::comparability::transitive_orientations;
use critposet::decomposition::{critical_vertices, Classification};
use critposet::edgelist::{emit, parse};
use critposet::families::{FamilyId, FamilyTag};
use critposet::{AnyGraph, Error};

#[derive(Serialize)]
struct Drawing {
    name: String,
    directed: bool,
    order: usize,
    pairs: Vec<(usize, usize)>,
    text: String,
}

fn drawing(name: String, g: &AnyGraph) -> Drawing {
    let (directed, pairs) = match g {
        AnyGraph::Graph(g) => (false, g.edges().collect()),
        AnyGraph::Digraph(d) => (true, d.arcs().collect()),
    };
    Drawing { name, directed, order: g.order(), pairs, text: emit(g) }
}

#[derive(Serialize)]
struct Analysis {
    #[serde(flatten)]
    drawing: Drawing,
    critical: Vec<usize>,
    noncritical: Vec<usize>,
    #[serde(flatten)]
    classification: Classification,
}

#[derive(Serialize)]
struct Orientations {
    count: usize,
    exhausted: bool,
    orientations: Vec<Vec<(usize, usize)>>,
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable")
}

fn parse_params(params: &str) -> Result<Vec<usize>, String> {
    params
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| format!("bad parameter `{t}`")))
        .collect()
}

/// Plain Rust entry points behind the bindings.
pub mod api {
    use super::*;

    pub fn generate_family(tag: &str, params: &str, dual: bool, complement: bool) -> Result<String, String> {
        let tag: FamilyTag = tag.parse().map_err(|e: Error| e.to_string())?;
        let mut id = FamilyId::new(tag, parse_params(params)?);
        if dual {
            id = id.dualized();
        }
        if complement {
            id = id.complemented();
        }
        let object = id.build().map_err(|e| e.to_string())?;
        Ok(json(&drawing(id.to_string(), &object)))
    }

    pub fn analyze_edge_list(text: &str) -> Result<String, String> {
        let g = parse(text).map_err(|e| e.to_string())?;
        let d = g.to_digraph();
        let (critical, noncritical, classification) = match critical_vertices(&d) {
            Ok(r) => (r.critical.to_vec(), r.noncritical.to_vec(), r.classification),
            Err(Error::Decomposable) => (Vec::new(), Vec::new(), Classification::Decomposable),
            Err(e) => return Err(e.to_string()),
        };
        Ok(json(&Analysis { drawing: drawing(String::new(), &g), critical, noncritical, classification }))
    }

    pub fn orientations(text: &str, limit: usize) -> Result<String, String> {
        let g = match parse(text).map_err(|e| e.to_string())? {
            AnyGraph::Graph(g) => g,
            AnyGraph::Digraph(_) => return Err("orientations need an undirected `graph` record".into()),
        };
        let r = transitive_orientations(&g, limit);
        Ok(json(&Orientations {
            count: r.orientations.len(),
            exhausted: r.exhausted,
            orientations: r.orientations.iter().map(|o| o.digraph().arcs().collect()).collect(),
        }))
    }
}

fn to_js(r: Result<String, String>) -> Result<String, JsError> {
    r.map_err(|e| JsError::new(&e))
}

/// `{name, directed, order, pairs, text}` for a family member.
#[wasm_bindgen(js_name = generateFamily)]
pub fn generate_family(tag: &str, params: &str, dual: bool, complement: bool) -> Result<String, JsError> {
    to_js(api::generate_family(tag, params, dual, complement))
}

/// The drawing plus critical / non-critical vertices and the class.
#[wasm_bindgen(js_name = analyzeEdgeList)]
pub fn analyze_edge_list(text: &str) -> Result<String, JsError> {
    to_js(api::analyze_edge_list(text))
}

#[wasm_bindgen]
pub fn orientations(text: &str, limit: usize) -> Result<String, JsError> {
    to_js(api::orientations(text, limit))
}
