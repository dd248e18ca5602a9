//! Text, CSV, JSON, JSONL and edge-list renderings. Every structured format
//! carries `schema_version`; reals use at least twelve significant digits.

use std::collections::BTreeMap;
use std::fmt;

use abcgg::closed_form::{Formula, FormulaValue};
use abcgg::enumerate::CatalogEntry;
use abcgg::verify::{ClaimReport, ExtremalResult, SCHEMA_VERSION};
use abcgg::{Certificate, Family, Graph, IndexReport};
use clap::ValueEnum;
use serde::Serialize;
use serde_json::json;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
    Jsonl,
    Edgelist,
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.to_possible_value().unwrap().get_name())
    }
}

/// One catalog line.
#[derive(Serialize)]
pub struct Record {
    pub schema_version: u32,
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub cert: Option<String>,
    pub family: Option<String>,
    pub abcgg: Option<f64>,
}

impl Record {
    pub fn from_entry(e: &CatalogEntry, with_index: bool) -> Self {
        Record {
            schema_version: SCHEMA_VERSION,
            n: e.graph.order(),
            edges: e.graph.edges().to_vec(),
            cert: Some(e.certificate.to_hex()),
            family: e.family.map(|f| f.to_string()),
            abcgg: with_index.then(|| e.abc_gg()),
        }
    }
}

fn real(x: f64) -> String {
    format!("{x:.12}")
}

fn small(x: f64) -> String {
    format!("{x:.12e}")
}

fn opt(x: Option<f64>, f: fn(f64) -> String) -> String {
    x.map(f).unwrap_or_default()
}

fn edges_compact(edges: &[(usize, usize)]) -> String {
    edges.iter().map(|(u, v)| format!("{u}-{v}")).collect::<Vec<_>>().join(" ")
}

fn csv_table(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).unwrap();
    for row in rows {
        w.write_record(&row).unwrap();
    }
    String::from_utf8(w.into_inner().unwrap()).unwrap()
}

fn pretty(v: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).unwrap();
    s.push('\n');
    s
}

pub fn compute(format: Format, g: &Graph, family: Option<Family>, cert: Option<Certificate>, report: &IndexReport) -> String {
    let cert_hex = cert.as_ref().map(|c| c.to_hex());
    match format {
        Format::Text => {
            let mut s = format!("n {}  m {}", g.order(), g.size());
            if let Some(f) = family {
                s.push_str(&format!("  family {f}"));
            }
            if let Some(c) = &cert_hex {
                s.push_str(&format!("  cert {c}"));
            }
            s.push_str(&format!("\ntotal {}\n\n{:>4} {:>4} {:>5} {:>5} {:>5}  contribution\n", real(report.total), "u", "v", "n_u", "n_v", "eq"));
            for t in &report.per_edge {
                let e = &t.split;
                s.push_str(&format!("{:>4} {:>4} {:>5} {:>5} {:>5}  {}\n", e.u, e.v, e.n_u, e.n_v, e.equidistant, real(t.contribution)));
            }
            s
        }
        Format::Csv => {
            let v = SCHEMA_VERSION.to_string();
            let mut rows: Vec<Vec<String>> = report
                .per_edge
                .iter()
                .map(|t| {
                    let e = &t.split;
                    vec!["edge".into(), e.u.to_string(), e.v.to_string(), e.n_u.to_string(), e.n_v.to_string(), e.equidistant.to_string(), real(t.contribution), v.clone()]
                })
                .collect();
            rows.push(vec!["total".into(), String::new(), String::new(), String::new(), String::new(), String::new(), real(report.total), v]);
            csv_table(&["row", "u", "v", "n_u", "n_v", "equidistant", "contribution", "schema_version"], rows)
        }
        Format::Json => pretty(&json!({
            "schema_version": SCHEMA_VERSION,
            "n": g.order(),
            "edges": g.edges(),
            "cert": cert_hex,
            "family": family.map(|f| f.to_string()),
            "total": report.total,
            "per_edge": report.per_edge,
        })),
        Format::Jsonl => {
            let r = Record {
                schema_version: SCHEMA_VERSION,
                n: g.order(),
                edges: g.edges().to_vec(),
                cert: cert_hex,
                family: family.map(|f| f.to_string()),
                abcgg: Some(report.total),
            };
            format!("{}\n", serde_json::to_string(&r).unwrap())
        }
        Format::Edgelist => g.to_edge_list(),
    }
}

pub fn catalog(format: Format, records: &[Record]) -> String {
    match format {
        Format::Jsonl => records.iter().map(|r| serde_json::to_string(r).unwrap() + "\n").collect(),
        Format::Json => pretty(&records),
        Format::Csv => csv_table(
            &["n", "cert", "family", "abcgg", "edges", "schema_version"],
            records.iter().map(|r| {
                vec![
                    r.n.to_string(),
                    r.cert.clone().unwrap_or_default(),
                    r.family.clone().unwrap_or_default(),
                    opt(r.abcgg, real),
                    edges_compact(&r.edges),
                    r.schema_version.to_string(),
                ]
            }),
        ),
        Format::Edgelist => records
            .iter()
            .map(|r| {
                let mut s = format!("# cert {}", r.cert.as_deref().unwrap_or("-"));
                if let Some(f) = &r.family {
                    s.push_str(&format!(" family {f}"));
                }
                if let Some(v) = r.abcgg {
                    s.push_str(&format!(" abcgg {}", real(v)));
                }
                s.push_str(&format!("\n{}\n", r.n));
                for (u, v) in &r.edges {
                    s.push_str(&format!("{u} {v}\n"));
                }
                s
            })
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Text => unreachable!(),
    }
}

pub fn extremal(format: Format, r: &ExtremalResult) -> String {
    match format {
        Format::Json => pretty(r),
        Format::Text => {
            let mut s = format!(
                "{} {} over {} at n={} ({} classes): {}\n",
                r.objective,
                "abcgg",
                r.class,
                r.n,
                r.catalog_size,
                real(r.optimum)
            );
            for o in &r.optimizers {
                let fam = o.family.map(|f| format!(" {f}")).unwrap_or_default();
                s.push_str(&format!("  optimizer {}{fam}: {}\n", o.certificate, edges_compact(o.graph.edges())));
            }
            for c in r.comparison.iter().chain(&r.alternative) {
                s.push_str(&format!(
                    "  {} = {}  gap {}  {}\n",
                    c.formula,
                    real(c.value),
                    small(c.abs_gap),
                    if c.matches { "matches" } else { "differs" }
                ));
            }
            s
        }
        Format::Csv => {
            let cmp = r.comparison.as_ref();
            csv_table(
                &["class", "n", "objective", "optimum", "optimizer_cert", "family", "formula", "formula_value", "abs_gap", "verdict", "schema_version"],
                r.optimizers.iter().map(|o| {
                    vec![
                        r.class.to_string(),
                        r.n.to_string(),
                        r.objective.to_string(),
                        real(r.optimum),
                        o.certificate.to_hex(),
                        o.family.map(|f| f.to_string()).unwrap_or_default(),
                        cmp.map(|c| c.formula.clone()).unwrap_or_default(),
                        opt(cmp.map(|c| c.value), real),
                        opt(cmp.map(|c| c.abs_gap), small),
                        r.verdict.map(|v| v.to_string()).unwrap_or_default(),
                        r.schema_version.to_string(),
                    ]
                }),
            )
        }
        _ => unreachable!(),
    }
}

pub fn claim_report(format: Format, r: &ClaimReport) -> String {
    match format {
        Format::Json => pretty(r),
        Format::Csv => csv_table(
            &[
                "claim",
                "n",
                "class",
                "optimum",
                "optimizer_cert",
                "formula_value",
                "abs_gap",
                "pass",
                "alt_variant",
                "alt_formula_value",
                "alt_abs_gap",
                "note",
                "schema_version",
            ],
            r.rows.iter().map(|row| {
                vec![
                    row.claim.clone(),
                    row.n.to_string(),
                    row.class.clone(),
                    opt(row.optimum, real),
                    row.optimizer_cert.clone().unwrap_or_default(),
                    opt(row.formula_value, real),
                    opt(row.abs_gap, small),
                    row.pass.to_string(),
                    row.alt_variant.clone().unwrap_or_default(),
                    opt(row.alt_formula_value, real),
                    opt(row.alt_abs_gap, small),
                    row.note.clone(),
                    r.schema_version.to_string(),
                ]
            }),
        ),
        _ => unreachable!(),
    }
}

pub fn formula(format: Format, f: Formula, params: &BTreeMap<String, u32>, variant: Option<&str>, value: FormulaValue) -> String {
    match (format, value) {
        (Format::Text, FormulaValue::Real(v)) => format!("{}\n", real(v)),
        (Format::Text, FormulaValue::Identity { lhs, rhs }) => {
            format!("{lhs} {} {rhs}\n", if lhs == rhs { "==" } else { "!=" })
        }
        (Format::Json, v) => {
            let value = match v {
                FormulaValue::Real(x) => json!(x),
                FormulaValue::Identity { lhs, rhs } => json!({ "lhs": lhs.to_string(), "rhs": rhs.to_string(), "holds": lhs == rhs }),
            };
            pretty(&json!({
                "schema_version": SCHEMA_VERSION,
                "formula": f.name(),
                "params": params,
                "variant": variant,
                "value": value,
            }))
        }
        _ => unreachable!(),
    }
}
