//! Browser bindings for the demo page in `www/`.
//!
//! Each export returns a JSON string. The `*_json` functions hold the logic
//! and also run natively, which is what the tests exercise.

use abcgg::closed_form;
use abcgg::enumerate::GraphClass;
use abcgg::verify::{extremal_scan, Objective};
use abcgg::{abc_gg, canonical_certificate, Family};
use serde::Serialize;
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Largest order the page may scan; keeps the all-bicyclic case interactive.
pub const MAX_SCAN_ORDER: usize = 10;

fn err(e: impl ToString) -> String {
    e.to_string()
}

/// Index of a family member with per-edge splits.
pub fn family_index_json(descriptor: &str) -> Result<String, String> {
    let family: Family = descriptor.trim().parse().map_err(err)?;
    let graph = family.build().map_err(err)?;
    let report = abc_gg(&graph).map_err(err)?;
    Ok(json!({
        "family": family.to_string(),
        "n": graph.order(),
        "edges": graph.edges(),
        "cert": canonical_certificate(&graph).ok().map(|c| c.to_hex()),
        "total": report.total,
        "per_edge": report.per_edge,
    })
    .to_string())
}

#[derive(Serialize)]
struct Curve {
    name: String,
    param: usize,
    xs: Vec<usize>,
    values: Vec<f64>,
    argmin: usize,
    increasing: bool,
}

/// One of the reparameterized lemma functions over its even `x` grid.
/// `param` is `k` for the odd-order functions and `n` for the others.
pub fn formula_curve_json(name: &str, param: usize) -> Result<String, String> {
    type Checked = fn(usize, usize) -> Result<f64, abcgg::FormulaDomainError>;
    let (f, max_x): (Checked, Option<usize>) = match name {
        "g_oddodd" => (closed_form::g_oddodd, (param >= 5).then(|| if param % 2 == 1 { param - 3 } else { param - 4 })),
        "f_oddodd" => (closed_form::f_oddodd, (param >= 5).then(|| if param % 2 == 1 { param - 3 } else { param - 4 })),
        "f_eveneven" => (closed_form::f_eveneven, (param >= 5).then(|| if param % 2 == 1 { param - 5 } else { param - 4 })),
        "g_oddeven" => (closed_form::g_oddeven, (param >= 10 && param % 2 == 0).then(|| param - 6)),
        "f_oddeven" => (closed_form::f_oddeven, (param >= 10 && param % 2 == 0).then(|| param - 6)),
        _ => return Err(format!("unknown curve {name:?}")),
    };
    let max_x = max_x.ok_or_else(|| format!("{name} is not defined at {param}"))?;
    let xs: Vec<usize> = (0..=max_x).step_by(2).collect();
    let values = xs.iter().map(|&x| f(param, x)).collect::<Result<Vec<_>, _>>().map_err(err)?;
    let best = (0..values.len()).min_by(|&a, &b| values[a].total_cmp(&values[b])).unwrap();
    let curve = Curve {
        name: name.to_string(),
        param,
        increasing: values.windows(2).all(|w| w[1] > w[0]),
        argmin: xs[best],
        xs,
        values,
    };
    serde_json::to_string(&curve).map_err(err)
}

/// Minimum or maximum over a class at a small order, with the optimizers'
/// edge lists and the reference bound when one exists.
pub fn extremal_json(n: usize, class: &str, objective: &str) -> Result<String, String> {
    if n > MAX_SCAN_ORDER {
        return Err(format!("the page scans orders up to {MAX_SCAN_ORDER}"));
    }
    let class: GraphClass = class.parse().map_err(err)?;
    let objective: Objective = objective.parse().map_err(err)?;
    let r = extremal_scan(class, n, objective).map_err(err)?;
    serde_json::to_string(&r).map_err(err)
}

#[wasm_bindgen(js_name = familyIndex)]
pub fn family_index(descriptor: &str) -> Result<String, JsError> {
    family_index_json(descriptor).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = formulaCurve)]
pub fn formula_curve(name: &str, param: usize) -> Result<String, JsError> {
    formula_curve_json(name, param).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn extremal(n: usize, class: &str, objective: &str) -> Result<String, JsError> {
    extremal_json(n, class, objective).map_err(|e| JsError::new(&e))
}
