//! Extremal scans over catalogs and finite-range checks of the closed forms,
//! the lemma statements, the theorem and the two conjectures.
//!
//! Every report is finite-range evidence, never a proof.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_certificate, Certificate};
use crate::closed_form::{self, Theorem1Variant};
use crate::enumerate::{catalog, GraphClass, DEFAULT_BICYCLIC_LIMIT};
use crate::error::{Error, FormulaDomainError, Result};
use crate::families::{self, Family};
use crate::graph::Graph;
use crate::index::abc_gg_value;

pub const SCHEMA_VERSION: u32 = 1;

/// Catalog values closer than this to the optimum count as optimizers.
pub const TIE_TOLERANCE: f64 = 1e-12;

/// Default tolerance for optimum-versus-formula comparisons.
pub const FORMULA_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Objective {
    Min,
    Max,
}

impl FromStr for Objective {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "min" => Ok(Objective::Min),
            "max" => Ok(Objective::Max),
            _ => Err(Error::Family(format!("unknown objective {s:?}"))),
        }
    }
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Objective::Min => "min",
            Objective::Max => "max",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanOptions {
    pub bicyclic_limit: usize,
    pub formula_tolerance: f64,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions { bicyclic_limit: DEFAULT_BICYCLIC_LIMIT, formula_tolerance: FORMULA_TOLERANCE }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Optimizer {
    pub certificate: Certificate,
    pub graph: Graph,
    pub family: Option<Family>,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FormulaComparison {
    pub formula: String,
    pub value: f64,
    pub abs_gap: f64,
    pub matches: bool,
}

impl FormulaComparison {
    fn new(formula: impl Into<String>, value: f64, optimum: f64, tol: f64) -> Self {
        let abs_gap = (value - optimum).abs();
        FormulaComparison { formula: formula.into(), value, abs_gap, matches: abs_gap <= tol }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExtremalResult {
    pub schema_version: u32,
    pub class: GraphClass,
    pub n: usize,
    pub objective: Objective,
    pub catalog_size: usize,
    pub optimum: f64,
    /// Every catalog entry within [`TIE_TOLERANCE`] of the optimum.
    pub optimizers: Vec<Optimizer>,
    /// The stated bound for this class and objective, when there is one.
    pub comparison: Option<FormulaComparison>,
    /// The other variant of that bound, where two readings exist.
    pub alternative: Option<FormulaComparison>,
    pub verdict: Option<bool>,
}

fn reference_formulas(class: GraphClass, objective: Objective, n: usize) -> (Option<(String, f64)>, Option<(String, f64)>) {
    match (class, objective) {
        (GraphClass::B1Only, Objective::Min) if n >= 9 => {
            let main = closed_form::theorem1_bound(n, Theorem1Variant::LemmaConsistent).unwrap();
            let alt = (n % 2 == 1).then(|| {
                ("theorem1:printed".to_string(), closed_form::theorem1_bound(n, Theorem1Variant::Printed).unwrap())
            });
            let name = if n % 2 == 0 { "theorem1" } else { "theorem1:lemma-consistent" };
            (Some((name.to_string(), main)), alt)
        }
        (GraphClass::NoPendant | GraphClass::AllBicyclic, Objective::Min) if n >= 9 => {
            (Some(("conjecture2".to_string(), closed_form::conjecture2_bound(n).unwrap())), None)
        }
        (GraphClass::AllBicyclic, Objective::Max) if n >= 8 => (
            Some(("conjecture3:printed".to_string(), closed_form::conjecture3_bound(n).unwrap())),
            Some(("conjecture3:corrected".to_string(), closed_form::conjecture3_bound_corrected(n).unwrap())),
        ),
        _ => (None, None),
    }
}

pub fn extremal_scan(class: GraphClass, n: usize, objective: Objective) -> Result<ExtremalResult> {
    extremal_scan_with(class, n, objective, ScanOptions::default())
}

pub fn extremal_scan_with(class: GraphClass, n: usize, objective: Objective, opts: ScanOptions) -> Result<ExtremalResult> {
    let entries = catalog(class, n, opts.bicyclic_limit)?;
    let values: Vec<f64> = entries.par_iter().map(|e| e.abc_gg()).collect();
    let optimum = match objective {
        Objective::Min => values.iter().copied().fold(f64::INFINITY, f64::min),
        Objective::Max => values.iter().copied().fold(f64::NEG_INFINITY, f64::max),
    };
    if values.is_empty() {
        return Err(Error::Family(format!("class {class} is empty at order {n}")));
    }
    let optimizers: Vec<Optimizer> = entries
        .iter()
        .zip(&values)
        .filter(|(_, &v)| (v - optimum).abs() <= TIE_TOLERANCE)
        .map(|(e, &v)| Optimizer {
            certificate: e.certificate.clone(),
            graph: e.graph.clone(),
            family: e.family,
            value: v,
        })
        .collect();
    let (main, alt) = reference_formulas(class, objective, n);
    let tol = opts.formula_tolerance;
    let comparison = main.map(|(name, v)| FormulaComparison::new(name, v, optimum, tol));
    let alternative = alt.map(|(name, v)| FormulaComparison::new(name, v, optimum, tol));
    let verdict = comparison.as_ref().map(|c| c.matches);
    Ok(ExtremalResult {
        schema_version: SCHEMA_VERSION,
        class,
        n,
        objective,
        catalog_size: entries.len(),
        optimum,
        optimizers,
        comparison,
        alternative,
        verdict,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    pub tie: f64,
    pub formula: f64,
}

/// One checked parameter point. Columns that do not apply stay `None`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClaimRow {
    pub claim: String,
    pub n: usize,
    pub class: String,
    pub optimum: Option<f64>,
    pub optimizer_cert: Option<String>,
    pub formula_value: Option<f64>,
    pub abs_gap: Option<f64>,
    pub pass: bool,
    pub alt_variant: Option<String>,
    pub alt_formula_value: Option<f64>,
    pub alt_abs_gap: Option<f64>,
    pub note: String,
}

impl ClaimRow {
    fn simple(claim: &str, n: usize, class: &str, pass: bool, note: String) -> Self {
        ClaimRow {
            claim: claim.to_string(),
            n,
            class: class.to_string(),
            optimum: None,
            optimizer_cert: None,
            formula_value: None,
            abs_gap: None,
            pass,
            alt_variant: None,
            alt_formula_value: None,
            alt_abs_gap: None,
            note,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub claim: String,
    pub params: String,
    pub certificate: Option<String>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClaimReport {
    pub schema_version: u32,
    pub claim: String,
    pub range: String,
    pub evidence: String,
    pub tolerances: Tolerances,
    pub rows: Vec<ClaimRow>,
    pub counterexamples: Vec<Counterexample>,
    pub max_abs_error: Option<f64>,
}

impl ClaimReport {
    fn new(claim: &str, range: String, formula_tol: f64) -> Self {
        ClaimReport {
            schema_version: SCHEMA_VERSION,
            claim: claim.to_string(),
            range,
            evidence: "finite-range check, not a proof".to_string(),
            tolerances: Tolerances { tie: TIE_TOLERANCE, formula: formula_tol },
            rows: Vec::new(),
            counterexamples: Vec::new(),
            max_abs_error: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.pass) && self.counterexamples.is_empty()
    }

    /// Appends another report's rows under a combined claim name.
    pub fn merge(mut self, other: ClaimReport) -> ClaimReport {
        self.claim = format!("{}+{}", self.claim, other.claim);
        self.range = format!("{}; {}", self.range, other.range);
        self.rows.extend(other.rows);
        self.counterexamples.extend(other.counterexamples);
        self.max_abs_error = match (self.max_abs_error, other.max_abs_error) {
            (Some(a), Some(b)) => Some(a.max(b)),
            (a, b) => a.or(b),
        };
        self
    }

    fn fail(&mut self, params: String, certificate: Option<String>, detail: String) {
        self.counterexamples.push(Counterexample { claim: self.claim.clone(), params, certificate, detail });
    }
}

/// Compares every lemma formula with direct index computation on `B1(p, q)`
/// for all `p <= q` with `p + q - 1 <= max_n`.
pub fn check_closed_forms(max_n: usize) -> Result<ClaimReport> {
    check_closed_forms_with(max_n, FORMULA_TOLERANCE)
}

pub fn check_closed_forms_with(max_n: usize, tol: f64) -> Result<ClaimReport> {
    if max_n < 9 {
        return Err(Error::OrderBelowMinimum { order: max_n, min: 9 });
    }
    let pairs: Vec<(usize, usize)> = (3..=max_n)
        .flat_map(|p| (p..=max_n + 1 - p).map(move |q| (p, q)))
        .filter(|&(p, q)| q >= 3 && p + q - 1 <= max_n)
        .collect();
    let rows: Vec<Result<ClaimRow>> = pairs
        .par_iter()
        .map(|&(p, q)| {
            let formula = closed_form::b1_closed_form(p, q)?;
            let direct = abc_gg_value(&families::b1(p, q)?)?;
            let gap = (formula - direct).abs();
            let lemma = match (p % 2, q % 2) {
                (1, 1) => "lemma1",
                (0, 0) => "lemma2",
                _ => "lemma3",
            };
            Ok(ClaimRow {
                optimum: Some(direct),
                formula_value: Some(formula),
                abs_gap: Some(gap),
                ..ClaimRow::simple(lemma, p + q - 1, "b1", gap <= tol, format!("p={p},q={q}"))
            })
        })
        .collect();
    let mut report = ClaimReport::new("closed-forms", format!("p+q-1 in 5..={max_n}"), tol);
    for row in rows {
        let row = row?;
        if !row.pass {
            report.fail(row.note.clone(), None, format!("gap {:e}", row.abs_gap.unwrap()));
        }
        report.max_abs_error = Some(report.max_abs_error.unwrap_or(0.0).max(row.abs_gap.unwrap()));
        report.rows.push(row);
    }
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LemmaCheck {
    /// `g_oddodd(k, .)` strictly increasing on its even grid.
    L1Monotone,
    /// `f_oddodd(k, .)` minimal at `x = 0`.
    L2Min,
    /// Argmin of `f_eveneven(k, .)`: 0 for `k >= 11`, `k - 5` for odd
    /// `k < 11`, `k - 4` for even `k < 11`.
    L3MinLoc,
    /// `g_oddeven(n, .)` strictly increasing on its even grid.
    L5Monotone,
    /// `g_oddeven(n, .)` minimal at `x = 0`.
    L5Min,
    /// `f_oddeven(n, .)` minimal at `x = 0`.
    L6Min,
}

impl LemmaCheck {
    pub const ALL: [LemmaCheck; 6] = [
        LemmaCheck::L1Monotone,
        LemmaCheck::L2Min,
        LemmaCheck::L3MinLoc,
        LemmaCheck::L5Monotone,
        LemmaCheck::L5Min,
        LemmaCheck::L6Min,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LemmaCheck::L1Monotone => "l1-monotone",
            LemmaCheck::L2Min => "l2-min",
            LemmaCheck::L3MinLoc => "l3-minloc",
            LemmaCheck::L5Monotone => "l5-monotone",
            LemmaCheck::L5Min => "l5-min",
            LemmaCheck::L6Min => "l6-min",
        }
    }

    /// Whether the scanned parameter is `k` (order `2k - 1`) rather than `n`.
    pub fn scans_k(self) -> bool {
        matches!(self, LemmaCheck::L1Monotone | LemmaCheck::L2Min | LemmaCheck::L3MinLoc)
    }
}

impl FromStr for LemmaCheck {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        LemmaCheck::ALL
            .into_iter()
            .find(|l| l.name() == s)
            .ok_or_else(|| Error::Family(format!("unknown lemma check {s:?}")))
    }
}

fn oddodd_grid(k: usize) -> Vec<usize> {
    let max = if k % 2 == 1 { k - 3 } else { k - 4 };
    (0..=max).step_by(2).collect()
}

fn eveneven_grid(k: usize) -> Vec<usize> {
    let max = if k % 2 == 1 { k - 5 } else { k - 4 };
    (0..=max).step_by(2).collect()
}

fn oddeven_grid(n: usize) -> Vec<usize> {
    (0..=n - 6).step_by(2).collect()
}

fn expected_l3_argmin(k: usize) -> usize {
    if k >= 11 {
        0
    } else if k % 2 == 1 {
        k - 5
    } else {
        k - 4
    }
}

/// Grid evaluation of one lemma statement. `range` holds `k` values for the
/// odd-order lemmas and orders `n` for the even-order ones; odd `n` are
/// skipped there.
pub fn lemma_behavior_scan(lemma: LemmaCheck, range: RangeInclusive<usize>) -> Result<ClaimReport> {
    let (lo, hi) = (*range.start(), *range.end());
    if lemma.scans_k() && lo < 5 {
        return Err(FormulaDomainError::new("lemma scan", format!("k={lo}"), "k >= 5").into());
    }
    if !lemma.scans_k() && lo < 10 {
        return Err(FormulaDomainError::new("lemma scan", format!("n={lo}"), "even n >= 10").into());
    }
    let mut report = ClaimReport::new(lemma.name(), format!("{}={lo}..={hi}", if lemma.scans_k() { "k" } else { "n" }), 0.0);
    let params: Vec<usize> = if lemma.scans_k() { range.collect() } else { range.filter(|n| n % 2 == 0).collect() };
    let rows: Vec<(ClaimRow, Vec<(String, String)>)> = params
        .par_iter()
        .map(|&param| scan_one(lemma, param))
        .collect::<std::result::Result<_, FormulaDomainError>>()?;
    for (row, bad) in rows {
        for (params, detail) in bad {
            report.fail(params, None, detail);
        }
        report.rows.push(row);
    }
    Ok(report)
}

fn scan_one(lemma: LemmaCheck, param: usize) -> std::result::Result<(ClaimRow, Vec<(String, String)>), FormulaDomainError> {
    use closed_form::{f_eveneven, f_oddeven, f_oddodd, g_oddeven, g_oddodd};
    let name = lemma.name();
    let (order, label) = if lemma.scans_k() { (2 * param - 1, format!("k={param}")) } else { (param, format!("n={param}")) };
    let mut bad = Vec::new();
    let increasing = |f: &dyn Fn(usize) -> std::result::Result<f64, FormulaDomainError>, grid: &[usize], bad: &mut Vec<(String, String)>| {
        let vals = grid.iter().map(|&x| f(x)).collect::<std::result::Result<Vec<_>, _>>()?;
        for (w, xs) in vals.windows(2).zip(grid.windows(2)) {
            if w[1] <= w[0] {
                bad.push((format!("{label},x={}", xs[1]), format!("value {:.12} does not exceed {:.12} at x={}", w[1], w[0], xs[0])));
            }
        }
        Ok::<Vec<f64>, FormulaDomainError>(vals)
    };
    let min_at_zero = |vals: &[f64], grid: &[usize], bad: &mut Vec<(String, String)>| {
        for (&v, &x) in vals.iter().zip(grid).skip(1) {
            if v < vals[0] {
                bad.push((format!("{label},x={x}"), format!("value {v:.12} below value at x=0 {:.12}", vals[0])));
            }
        }
    };
    let (vals, note) = match lemma {
        LemmaCheck::L1Monotone => {
            let grid = oddodd_grid(param);
            (increasing(&|x| g_oddodd(param, x), &grid, &mut bad)?, label.clone())
        }
        LemmaCheck::L2Min => {
            let grid = oddodd_grid(param);
            let vals = grid.iter().map(|&x| f_oddodd(param, x)).collect::<std::result::Result<Vec<_>, _>>()?;
            min_at_zero(&vals, &grid, &mut bad);
            (vals, label.clone())
        }
        LemmaCheck::L3MinLoc => {
            let grid = eveneven_grid(param);
            let vals = grid.iter().map(|&x| f_eveneven(param, x)).collect::<std::result::Result<Vec<_>, _>>()?;
            let best = (0..vals.len()).min_by(|&a, &b| vals[a].total_cmp(&vals[b])).unwrap();
            let expected = expected_l3_argmin(param);
            if grid[best] != expected {
                bad.push((label.clone(), format!("argmin x={} but expected x={expected}", grid[best])));
            }
            (vals, format!("{label},argmin_x={}", grid[best]))
        }
        LemmaCheck::L5Monotone => {
            let grid = oddeven_grid(param);
            (increasing(&|x| g_oddeven(param, x), &grid, &mut bad)?, label.clone())
        }
        LemmaCheck::L5Min => {
            let grid = oddeven_grid(param);
            let vals = grid.iter().map(|&x| g_oddeven(param, x)).collect::<std::result::Result<Vec<_>, _>>()?;
            min_at_zero(&vals, &grid, &mut bad);
            (vals, label.clone())
        }
        LemmaCheck::L6Min => {
            let grid = oddeven_grid(param);
            let vals = grid.iter().map(|&x| f_oddeven(param, x)).collect::<std::result::Result<Vec<_>, _>>()?;
            min_at_zero(&vals, &grid, &mut bad);
            (vals, label.clone())
        }
    };
    let optimum = vals.iter().copied().fold(f64::INFINITY, f64::min);
    let note = if bad.is_empty() { note } else { format!("{note},violations={}", bad.len()) };
    let row = ClaimRow { optimum: Some(optimum), ..ClaimRow::simple(name, order, "b1", bad.is_empty(), note) };
    Ok((row, bad))
}

/// Exact integer check of the factorization identity for all
/// `1 <= k <= max_k`, `0 <= x <= max_x`.
pub fn check_t_gap(max_k: u32, max_x: u32) -> ClaimReport {
    let mut report = ClaimReport::new("t-gap", format!("k=1..={max_k},x=0..={max_x}"), 0.0);
    for k in 1..=max_k {
        let failures: Vec<u32> = (0..=max_x).filter(|&x| {
            let (l, r) = closed_form::t_gap(k, x);
            l != r
        }).collect();
        for &x in &failures {
            let (l, r) = closed_form::t_gap(k, x);
            report.fail(format!("k={k},x={x}"), None, format!("lhs={l} rhs={r}"));
        }
        report.rows.push(ClaimRow::simple("t-gap", k as usize, "identity", failures.is_empty(), format!("k={k}")));
    }
    report
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Claim {
    Theorem1Even,
    Theorem1Odd,
    Conjecture2,
    Conjecture3,
}

impl Claim {
    pub fn name(self) -> &'static str {
        match self {
            Claim::Theorem1Even => "theorem1-even",
            Claim::Theorem1Odd => "theorem1-odd",
            Claim::Conjecture2 => "conjecture2",
            Claim::Conjecture3 => "conjecture3",
        }
    }

    fn applies(self, n: usize) -> bool {
        match self {
            Claim::Theorem1Even => n % 2 == 0,
            Claim::Theorem1Odd => n % 2 == 1,
            Claim::Conjecture2 | Claim::Conjecture3 => true,
        }
    }

    fn min_order(self) -> usize {
        match self {
            Claim::Conjecture3 => 8,
            _ => 9,
        }
    }

    /// The graph the claim names as extremal at order `n`.
    pub fn expected_extremal(self, n: usize) -> Result<Graph> {
        match self {
            Claim::Theorem1Even | Claim::Theorem1Odd => families::b1(3, n - 2),
            Claim::Conjecture2 if n % 2 == 1 => families::b3(4, 2, n - 1),
            Claim::Conjecture2 => families::b3(6, 3, n - 2),
            Claim::Conjecture3 => families::h_graph(n),
        }
    }

    fn scan(self) -> (GraphClass, Objective) {
        match self {
            Claim::Theorem1Even | Claim::Theorem1Odd => (GraphClass::B1Only, Objective::Min),
            Claim::Conjecture2 => (GraphClass::AllBicyclic, Objective::Min),
            Claim::Conjecture3 => (GraphClass::AllBicyclic, Objective::Max),
        }
    }
}

impl FromStr for Claim {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        [Claim::Theorem1Even, Claim::Theorem1Odd, Claim::Conjecture2, Claim::Conjecture3]
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Family(format!("unknown claim {s:?}")))
    }
}

pub fn verify_claim(claim: Claim, n_range: RangeInclusive<usize>) -> Result<ClaimReport> {
    verify_claim_with(claim, n_range, ScanOptions::default())
}

/// Runs the extremal scan the claim is about at every applicable order and
/// checks that the optimizer is unique, is the named graph, and attains the
/// stated bound.
pub fn verify_claim_with(claim: Claim, n_range: RangeInclusive<usize>, opts: ScanOptions) -> Result<ClaimReport> {
    let (lo, hi) = (*n_range.start(), *n_range.end());
    let mut report = ClaimReport::new(claim.name(), format!("n={lo}..={hi}"), opts.formula_tolerance);
    let orders: Vec<usize> = n_range.filter(|&n| claim.applies(n)).collect();
    if let Some(&n) = orders.iter().find(|&&n| n < claim.min_order()) {
        return Err(Error::OrderBelowMinimum { order: n, min: claim.min_order() });
    }
    let (class, objective) = claim.scan();
    for n in orders {
        let result = extremal_scan_with(class, n, objective, opts)?;
        let expected = canonical_certificate(&claim.expected_extremal(n)?)?;
        let unique = result.optimizers.len() == 1;
        let is_expected = result.optimizers.iter().any(|o| o.certificate == expected);
        let cmp = result.comparison.clone().expect("claims have reference formulas");
        let mut problems = Vec::new();
        if !is_expected {
            problems.push("named graph is not an optimizer".to_string());
        }
        if !unique {
            problems.push(format!("{} optimizers", result.optimizers.len()));
        }
        if !cmp.matches {
            problems.push(format!("{} differs from optimum by {:.3e}", cmp.formula, cmp.abs_gap));
        }
        let mut note = format!("catalog={}", result.catalog_size);
        if let Some(alt) = &result.alternative {
            note.push_str(&format!(", {} {}", alt.formula, if alt.matches { "matches" } else { "does not match" }));
        }
        if !problems.is_empty() {
            note.push_str(&format!(", {}", problems.join("; ")));
            report.fail(
                format!("n={n}"),
                Some(result.optimizers[0].certificate.to_hex()),
                problems.join("; "),
            );
        }
        report.rows.push(ClaimRow {
            claim: claim.name().to_string(),
            n,
            class: class.to_string(),
            optimum: Some(result.optimum),
            optimizer_cert: Some(result.optimizers.iter().map(|o| o.certificate.to_hex()).collect::<Vec<_>>().join("|")),
            formula_value: Some(cmp.value),
            abs_gap: Some(cmp.abs_gap),
            pass: problems.is_empty(),
            alt_variant: result.alternative.as_ref().map(|a| a.formula.clone()),
            alt_formula_value: result.alternative.as_ref().map(|a| a.value),
            alt_abs_gap: result.alternative.as_ref().map(|a| a.abs_gap),
            note,
        });
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn b1_minimum_at_ten() {
        let r = extremal_scan(GraphClass::B1Only, 10, Objective::Min).unwrap();
        assert_eq!(r.catalog_size, 3);
        assert_eq!(r.optimizers.len(), 1);
        assert_eq!(r.optimizers[0].family, Some(Family::B1 { p: 3, q: 8 }));
        assert!((r.optimum - 6.4896308469).abs() < 1e-9);
        assert_eq!(r.verdict, Some(true));
        assert!(r.alternative.is_none());
    }

    #[test]
    fn b1_minimum_at_nine_reports_both_variants() {
        let r = extremal_scan(GraphClass::B1Only, 9, Objective::Min).unwrap();
        assert_eq!(r.optimizers[0].family, Some(Family::B1 { p: 3, q: 7 }));
        assert!((r.optimum - 6.3130400584).abs() < 1e-9);
        assert_eq!(r.verdict, Some(true));
        let alt = r.alternative.unwrap();
        assert!(!alt.matches);
        assert!((alt.abs_gap - 0.4479).abs() < 1e-3);
    }

    #[test]
    fn optimizers_reevaluate() {
        let r = extremal_scan(GraphClass::NoPendant, 11, Objective::Min).unwrap();
        for o in &r.optimizers {
            let rebuilt = Graph::new(o.graph.order(), o.graph.edges().iter().copied()).unwrap();
            assert!((abc_gg_value(&rebuilt).unwrap() - r.optimum).abs() <= TIE_TOLERANCE);
            assert!((abc_gg_value(&o.certificate.to_graph()).unwrap() - r.optimum).abs() <= 1e-12);
        }
    }

    #[test]
    fn closed_form_guard() {
        assert!(check_closed_forms(8).is_err());
        let r = check_closed_forms(9).unwrap();
        assert!(r.passed());
        let notes: Vec<&str> = r.rows.iter().map(|x| x.note.as_str()).collect();
        for want in ["p=3,q=7", "p=4,q=6", "p=5,q=5"] {
            assert!(notes.contains(&want));
        }
    }

    #[test]
    fn l3_small_cases() {
        let r = lemma_behavior_scan(LemmaCheck::L3MinLoc, 6..=7).unwrap();
        assert!(r.passed());
        assert_eq!(r.rows[0].note, "k=6,argmin_x=2");
        assert!((r.rows[0].optimum.unwrap() - 7.34846922835).abs() < 1e-10);
        assert_eq!(r.rows[1].note, "k=7,argmin_x=2");
        assert!((r.rows[1].optimum.unwrap() - 8.05534681206).abs() < 1e-10);
    }

    #[test]
    fn lemma_scan_domains() {
        assert!(lemma_behavior_scan(LemmaCheck::L1Monotone, 4..=10).is_err());
        assert!(lemma_behavior_scan(LemmaCheck::L6Min, 8..=10).is_err());
    }

    #[test]
    fn g_oddeven_loses_monotonicity_at_twenty() {
        let r = lemma_behavior_scan(LemmaCheck::L5Monotone, 10..=20).unwrap();
        assert!(r.rows[..5].iter().all(|x| x.pass));
        assert!(!r.rows[5].pass);
        assert_eq!(r.counterexamples[0].params, "n=20,x=14");
        assert!(lemma_behavior_scan(LemmaCheck::L5Min, 10..=60).unwrap().passed());
    }

    #[test]
    fn t_gap_report() {
        let r = check_t_gap(20, 20);
        assert!(r.passed());
        assert_eq!(r.rows.len(), 20);
    }

    #[test]
    fn claim_orders() {
        assert!(verify_claim(Claim::Theorem1Odd, 7..=9).is_err());
        assert!(verify_claim(Claim::Conjecture2, 9..=13).is_err());
        let r = verify_claim(Claim::Theorem1Even, 9..=12).unwrap();
        assert_eq!(r.rows.iter().map(|x| x.n).collect::<Vec<_>>(), vec![10, 12]);
        assert!(r.passed());
    }
}
