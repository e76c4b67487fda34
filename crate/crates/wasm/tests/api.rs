use critposet_wasm::api::{analyze_edge_list, generate_family, orientations};
use serde_json::{json, Value};

fn value(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn generate_then_analyze() {
    let g = value(generate_family("q", "1,1,1", false, false).unwrap());
    assert_eq!(g["name"], "Q_{2,2,2}");
    assert_eq!(g["directed"], true);
    assert_eq!(g["pairs"], json!([[0, 1], [3, 1], [3, 2], [5, 1], [5, 4]]));
    let a = value(analyze_edge_list(g["text"].as_str().unwrap()).unwrap());
    assert_eq!(a["class"], "MinusOneCritical");
    assert_eq!(a["vertex"], 0);
    assert_eq!(a["noncritical"], json!([0]));
}

#[test]
fn complement_flag_and_guards() {
    let g = value(generate_family("H", "1,1", false, true).unwrap());
    assert_eq!(g["name"], "co-H_{1,2,2}");
    assert_eq!(g["directed"], false);
    assert!(generate_family("G", "1,1", false, false).unwrap_err().contains("k >= 3"));
    assert!(generate_family("Z", "1", false, false).is_err());
}

#[test]
fn bull_has_two_orientations() {
    let text = value(generate_family("H", "1,1", false, false).unwrap())["text"].as_str().unwrap().to_string();
    let o = value(orientations(&text, 100).unwrap());
    assert_eq!(o["count"], 2);
    assert_eq!(o["exhausted"], true);
    assert!(orientations("digraph n=2\n0 1\n", 10).is_err());
}

#[test]
fn decomposable_input() {
    let a = value(analyze_edge_list("graph n=3\n0 1\n").unwrap());
    assert_eq!(a["class"], "Decomposable");
    assert!(analyze_edge_list("nonsense").is_err());
}
