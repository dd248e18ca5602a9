use abcgg_web::{extremal_json, family_index_json, formula_curve_json, MAX_SCAN_ORDER};
use serde_json::Value;

fn parse(s: Result<String, String>) -> Value {
    serde_json::from_str(&s.unwrap()).unwrap()
}

#[test]
fn family_index() {
    let v = parse(family_index_json("b1:3,8"));
    assert_eq!(v["n"], 10);
    assert_eq!(v["per_edge"].as_array().unwrap().len(), 11);
    assert!((v["total"].as_f64().unwrap() - 6.4896308469).abs() < 1e-9);
    assert!(family_index_json("b3:5,4,5").unwrap_err().contains("multi-edge"));
    assert!(family_index_json("nonsense").is_err());
}

#[test]
fn curves() {
    let v = parse(formula_curve_json("f_eveneven", 6));
    assert_eq!(v["xs"], serde_json::json!([0, 2]));
    assert_eq!(v["argmin"], 2);
    let v = parse(formula_curve_json("g_oddeven", 20));
    assert_eq!(v["increasing"], false);
    let v = parse(formula_curve_json("g_oddodd", 9));
    assert_eq!(v["increasing"], true);
    assert!(formula_curve_json("g_oddeven", 11).is_err());
    assert!(formula_curve_json("f_oddodd", 4).is_err());
}

#[test]
fn small_scans() {
    let v = parse(extremal_json(9, "all-bicyclic", "min"));
    assert!((v["optimum"].as_f64().unwrap() - 5.9160797831).abs() < 1e-9);
    assert_eq!(v["optimizers"].as_array().unwrap().len(), 1);
    let v = parse(extremal_json(6, "no-pendant", "max"));
    assert!(v["comparison"].is_null());
    assert!(extremal_json(MAX_SCAN_ORDER + 1, "b1-only", "min").is_err());
    assert!(extremal_json(8, "trees", "min").is_err());
}
