//! Closed-form index values for `B1(p, q)`, the reparameterized functions
//! used to locate its minimum, and the bounds for bicyclic graphs.
//!
//! Checked functions enforce parity and range constraints and return
//! [`FormulaDomainError`] outside them; [`unchecked`] exposes the bare
//! expressions.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, FormulaDomainError};

type DomainResult<T> = Result<T, FormulaDomainError>;

/// Bare expressions, no domain checks. Arguments are real so callers can
/// probe outside the integer grid.
pub mod unchecked {
    fn sq(x: f64) -> f64 {
        x.sqrt()
    }

    pub fn lemma1_oddodd(p: f64, q: f64) -> f64 {
        2.0 * (p - 1.0) * sq((p + q - 4.0) / ((p - 1.0) * (p + 2.0 * q - 3.0)))
            + 2.0 * sq(p - 3.0) / (p - 1.0)
            + 2.0 * (q - 1.0) * sq((p + q - 4.0) / ((2.0 * p + q - 3.0) * (q - 1.0)))
            + 2.0 * sq(q - 3.0) / (q - 1.0)
    }

    pub fn lemma2_eveneven(p: f64, q: f64) -> f64 {
        2.0 * p * sq((p + q - 3.0) / (p * (p + 2.0 * q - 2.0)))
            + 2.0 * q * sq((p + q - 3.0) / (q * (2.0 * p + q - 2.0)))
    }

    pub fn lemma3_oddeven(p: f64, q: f64) -> f64 {
        2.0 * sq(p - 3.0) / (p - 1.0)
            + 2.0 * (p - 1.0) * sq((p + q - 4.0) / ((p + 2.0 * q - 3.0) * (p - 1.0)))
            + 2.0 * q * sq((p + q - 3.0) / (q * (2.0 * p + q - 2.0)))
    }

    pub fn g_oddodd(k: f64, x: f64) -> f64 {
        2.0 * (x + 2.0) * sq((2.0 * k - 4.0) / ((4.0 * k - x - 6.0) * (x + 2.0)))
            + 2.0 * (2.0 * k - x - 4.0) * sq((2.0 * k - 4.0) / ((2.0 * k + x) * (2.0 * k - x - 4.0)))
            + 2.0 * sq(2.0 * k - x - 6.0) / (2.0 * k - x - 4.0)
    }

    pub fn f_oddodd(k: f64, x: f64) -> f64 {
        g_oddodd(k, x) + 2.0 * sq(x) / (x + 2.0)
    }

    pub fn f_eveneven(k: f64, x: f64) -> f64 {
        2.0 * (x + 4.0) * sq((2.0 * k - 3.0) / ((4.0 * k - x - 6.0) * (x + 4.0)))
            + 2.0 * (2.0 * k - x - 4.0) * sq((2.0 * k - 3.0) / ((2.0 * k + x + 2.0) * (2.0 * k - x - 4.0)))
    }

    pub fn g_oddeven(n: f64, x: f64) -> f64 {
        2.0 * (n - x - 2.0) * sq((n - 2.0) / ((n + x + 2.0) * (n - x - 2.0)))
            + 2.0 * (x + 2.0) * sq((n - 3.0) / ((2.0 * n - x - 4.0) * (x + 2.0)))
    }

    pub fn f_oddeven(n: f64, x: f64) -> f64 {
        g_oddeven(n, x) + 2.0 * sq(x) / (x + 2.0)
    }

    pub fn theorem1_odd_printed(n: f64) -> f64 {
        2.0 * (n - 3.0) / sq(n - 1.0) + 2.0 * sq((n - 3.0) / (n - 2.0)) + 2.0 * sq(n - 5.0) / (n - 3.0)
    }

    pub fn theorem1_odd_lemma_consistent(n: f64) -> f64 {
        2.0 * (n - 3.0) / sq(n + 1.0) + 2.0 * sq((n - 3.0) / (n - 2.0)) + 2.0 * sq(n - 5.0) / (n - 3.0)
    }

    pub fn theorem1_even(n: f64) -> f64 {
        2.0 * sq((n - 3.0) / (n - 2.0)) + 2.0 * (n - 2.0) / sq(n + 2.0)
    }

    pub fn conjecture2_odd(n: f64) -> f64 {
        2.0 * (n + 1.0) * sq((n - 2.0) / (n * n - 1.0))
    }

    pub fn conjecture2_even(n: f64) -> f64 {
        6.0 / n * sq(n - 2.0) + 2.0 * (n - 2.0) * sq(1.0 / (n + 2.0))
    }

    pub fn conjecture3_printed(n: f64) -> f64 {
        (n - 4.0) * sq((n - 2.0) / (n - 1.0))
            + sq((n - 4.0) / (n - 3.0))
            + 2.0 * sq((n - 3.0) / (n - 2.0))
            + sq(2.0) / 2.0
    }

    /// The printed expression plus the second `sqrt(2)/2`: `H` has two edges
    /// with split `(2, 1)`.
    pub fn conjecture3_corrected(n: f64) -> f64 {
        conjecture3_printed(n) + sq(2.0) / 2.0
    }
}

fn err(formula: &'static str, parameter: String, valid: &str) -> FormulaDomainError {
    FormulaDomainError::new(formula, parameter, valid)
}

fn check(ok: bool, formula: &'static str, parameter: impl FnOnce() -> String, valid: &str) -> DomainResult<()> {
    if ok {
        Ok(())
    } else {
        Err(err(formula, parameter(), valid))
    }
}

pub fn lemma1_oddodd(p: usize, q: usize) -> DomainResult<f64> {
    check(p >= 3 && q >= 3 && p % 2 == 1 && q % 2 == 1, "lemma1_oddodd", || format!("(p,q)=({p},{q})"), "p, q odd and >= 3")?;
    Ok(unchecked::lemma1_oddodd(p as f64, q as f64))
}

pub fn lemma2_eveneven(p: usize, q: usize) -> DomainResult<f64> {
    check(p >= 4 && q >= 4 && p % 2 == 0 && q % 2 == 0, "lemma2_eveneven", || format!("(p,q)=({p},{q})"), "p, q even and >= 4")?;
    Ok(unchecked::lemma2_eveneven(p as f64, q as f64))
}

pub fn lemma3_oddeven(p: usize, q: usize) -> DomainResult<f64> {
    check(p >= 3 && q >= 4 && p % 2 == 1 && q % 2 == 0, "lemma3_oddeven", || format!("(p,q)=({p},{q})"), "p odd >= 3, q even >= 4")?;
    Ok(unchecked::lemma3_oddeven(p as f64, q as f64))
}

/// Closed form of `B1(p, q)` for any cycle sizes, picking the parity case.
pub fn b1_closed_form(p: usize, q: usize) -> DomainResult<f64> {
    match (p % 2, q % 2) {
        (1, 1) => lemma1_oddodd(p, q),
        (0, 0) => lemma2_eveneven(p, q),
        (1, 0) => lemma3_oddeven(p, q),
        _ => lemma3_oddeven(q, p),
    }
}

fn oddodd_domain(name: &'static str, k: usize, x: usize) -> DomainResult<()> {
    check(k >= 5, name, || format!("k={k}"), "k >= 5")?;
    let max = if k % 2 == 1 { k - 3 } else { k - 4 };
    check(x % 2 == 0 && x <= max, name, || format!("x={x}"), &format!("even x in 0..={max}"))
}

fn eveneven_domain(k: usize, x: usize) -> DomainResult<()> {
    check(k >= 5, "f_eveneven", || format!("k={k}"), "k >= 5")?;
    let max = if k % 2 == 1 { k - 5 } else { k - 4 };
    check(x % 2 == 0 && x <= max, "f_eveneven", || format!("x={x}"), &format!("even x in 0..={max}"))
}

fn oddeven_domain(name: &'static str, n: usize, x: usize) -> DomainResult<()> {
    check(n >= 10 && n % 2 == 0, name, || format!("n={n}"), "n even and >= 10")?;
    check(x % 2 == 0 && x <= n - 6, name, || format!("x={x}"), &format!("even x in 0..={}", n - 6))
}

/// Index of `B1(3 + x, 2k - 3 - x)`, both cycles odd, order `2k - 1`.
pub fn f_oddodd(k: usize, x: usize) -> DomainResult<f64> {
    oddodd_domain("f_oddodd", k, x)?;
    Ok(unchecked::f_oddodd(k as f64, x as f64))
}

/// `f_oddodd` without its last term `2 sqrt(x) / (x + 2)`.
pub fn g_oddodd(k: usize, x: usize) -> DomainResult<f64> {
    oddodd_domain("g_oddodd", k, x)?;
    Ok(unchecked::g_oddodd(k as f64, x as f64))
}

/// Index of `B1(4 + x, 2k - 4 - x)`, both cycles even, order `2k - 1`.
pub fn f_eveneven(k: usize, x: usize) -> DomainResult<f64> {
    eveneven_domain(k, x)?;
    Ok(unchecked::f_eveneven(k as f64, x as f64))
}

/// Index of `B1(3 + x, n - 2 - x)` for even order `n`.
pub fn f_oddeven(n: usize, x: usize) -> DomainResult<f64> {
    oddeven_domain("f_oddeven", n, x)?;
    Ok(unchecked::f_oddeven(n as f64, x as f64))
}

/// `f_oddeven` without its last term.
pub fn g_oddeven(n: usize, x: usize) -> DomainResult<f64> {
    oddeven_domain("g_oddeven", n, x)?;
    Ok(unchecked::g_oddeven(n as f64, x as f64))
}

/// Both sides of `(2k+x)^3 (2k-x-4) - (x+2)(4k-x-6)^3 = 16(k-1)(k-x-3)^3`,
/// in exact integer arithmetic.
pub fn t_gap(k: u32, x: u32) -> (i128, i128) {
    let (k, x) = (k as i128, x as i128);
    let lhs = (2 * k + x).pow(3) * (2 * k - x - 4) - (x + 2) * (4 * k - x - 6).pow(3);
    let rhs = 16 * (k - 1) * (k - x - 3).pow(3);
    (lhs, rhs)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Theorem1Variant {
    /// Odd case with denominator `sqrt(n - 1)`.
    Printed,
    /// Odd case with denominator `sqrt(n + 1)`, the value the lemma chain
    /// actually produces at `x = 0`.
    LemmaConsistent,
}

impl FromStr for Theorem1Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "printed" => Ok(Self::Printed),
            "lemma-consistent" | "lemma" => Ok(Self::LemmaConsistent),
            _ => Err(Error::Family(format!("unknown theorem1 variant {s:?}"))),
        }
    }
}

impl fmt::Display for Theorem1Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Printed => "printed",
            Self::LemmaConsistent => "lemma-consistent",
        })
    }
}

/// Lower bound for `B1(n)`, attained by `B1(3, n - 2)`.
pub fn theorem1_bound(n: usize, variant: Theorem1Variant) -> DomainResult<f64> {
    check(n >= 9, "theorem1_bound", || format!("n={n}"), "n >= 9")?;
    let n = n as f64;
    Ok(if n as usize % 2 == 0 {
        unchecked::theorem1_even(n)
    } else {
        match variant {
            Theorem1Variant::Printed => unchecked::theorem1_odd_printed(n),
            Theorem1Variant::LemmaConsistent => unchecked::theorem1_odd_lemma_consistent(n),
        }
    })
}

/// Conjectured minimum over all bicyclic graphs of order `n`.
pub fn conjecture2_bound(n: usize) -> DomainResult<f64> {
    check(n >= 9, "conjecture2_bound", || format!("n={n}"), "n >= 9")?;
    Ok(if n % 2 == 1 {
        unchecked::conjecture2_odd(n as f64)
    } else {
        unchecked::conjecture2_even(n as f64)
    })
}

/// Conjectured maximum over all bicyclic graphs of order `n`, as printed.
pub fn conjecture3_bound(n: usize) -> DomainResult<f64> {
    check(n >= 8, "conjecture3_bound", || format!("n={n}"), "n >= 8")?;
    Ok(unchecked::conjecture3_printed(n as f64))
}

/// Index of `H(n)` in closed form: the printed bound plus `sqrt(2)/2`.
pub fn conjecture3_bound_corrected(n: usize) -> DomainResult<f64> {
    check(n >= 8, "conjecture3_bound", || format!("n={n}"), "n >= 8")?;
    Ok(unchecked::conjecture3_corrected(n as f64))
}

/// Named formulas, for front ends that take a name and `key=value` pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Formula {
    Lemma1,
    Lemma2,
    Lemma3,
    FOddOdd,
    GOddOdd,
    FEvenEven,
    FOddEven,
    GOddEven,
    TGap,
    Theorem1,
    Conjecture2,
    Conjecture3,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(untagged)]
pub enum FormulaValue {
    Real(f64),
    Identity { lhs: i128, rhs: i128 },
}

impl fmt::Display for FormulaValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormulaValue::Real(v) => write!(f, "{v:.12}"),
            FormulaValue::Identity { lhs, rhs } => write!(f, "lhs={lhs} rhs={rhs}"),
        }
    }
}

impl Formula {
    pub const ALL: [Formula; 12] = [
        Formula::Lemma1,
        Formula::Lemma2,
        Formula::Lemma3,
        Formula::FOddOdd,
        Formula::GOddOdd,
        Formula::FEvenEven,
        Formula::FOddEven,
        Formula::GOddEven,
        Formula::TGap,
        Formula::Theorem1,
        Formula::Conjecture2,
        Formula::Conjecture3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Formula::Lemma1 => "lemma1",
            Formula::Lemma2 => "lemma2",
            Formula::Lemma3 => "lemma3",
            Formula::FOddOdd => "f_oddodd",
            Formula::GOddOdd => "g_oddodd",
            Formula::FEvenEven => "f_eveneven",
            Formula::FOddEven => "f_oddeven",
            Formula::GOddEven => "g_oddeven",
            Formula::TGap => "t_gap",
            Formula::Theorem1 => "theorem1",
            Formula::Conjecture2 => "conjecture2",
            Formula::Conjecture3 => "conjecture3",
        }
    }

    /// Required integer parameter names.
    pub fn params(self) -> &'static [&'static str] {
        match self {
            Formula::Lemma1 | Formula::Lemma2 | Formula::Lemma3 => &["p", "q"],
            Formula::FOddOdd | Formula::GOddOdd | Formula::FEvenEven | Formula::TGap => &["k", "x"],
            Formula::FOddEven | Formula::GOddEven => &["n", "x"],
            Formula::Theorem1 | Formula::Conjecture2 | Formula::Conjecture3 => &["n"],
        }
    }

    /// Evaluates with named parameters. `variant` selects between printed and
    /// corrected forms for `theorem1` (`printed` / `lemma-consistent`) and
    /// `conjecture3` (`printed` / `corrected`); other formulas ignore it.
    pub fn evaluate(self, params: &BTreeMap<String, u32>, variant: Option<&str>, checked: bool) -> Result<FormulaValue, Error> {
        let get = |name: &str| -> Result<usize, Error> {
            params
                .get(name)
                .map(|&v| v as usize)
                .ok_or_else(|| Error::Family(format!("{} needs parameter {name}", self.name())))
        };
        for key in params.keys() {
            if !self.params().contains(&key.as_str()) {
                return Err(Error::Family(format!("{} does not take parameter {key}", self.name())));
            }
        }
        let two = |a: &str, b: &str| -> Result<(usize, usize), Error> { Ok((get(a)?, get(b)?)) };
        let real = |r: DomainResult<f64>| r.map(FormulaValue::Real).map_err(Error::from);
        use unchecked as u;
        let f = |v: usize| v as f64;
        match self {
            Formula::TGap => {
                let (k, x) = two("k", "x")?;
                let (lhs, rhs) = t_gap(k as u32, x as u32);
                Ok(FormulaValue::Identity { lhs, rhs })
            }
            Formula::Theorem1 => {
                let v = match variant.unwrap_or("lemma-consistent").parse()? {
                    Theorem1Variant::Printed if !checked => {
                        let n = f(get("n")?);
                        if n as usize % 2 == 0 { u::theorem1_even(n) } else { u::theorem1_odd_printed(n) }
                    }
                    Theorem1Variant::LemmaConsistent if !checked => {
                        let n = f(get("n")?);
                        if n as usize % 2 == 0 { u::theorem1_even(n) } else { u::theorem1_odd_lemma_consistent(n) }
                    }
                    var => theorem1_bound(get("n")?, var)?,
                };
                Ok(FormulaValue::Real(v))
            }
            Formula::Conjecture3 => {
                let corrected = match variant.unwrap_or("printed") {
                    "printed" => false,
                    "corrected" => true,
                    other => return Err(Error::Family(format!("unknown conjecture3 variant {other:?}"))),
                };
                let n = get("n")?;
                match (checked, corrected) {
                    (true, false) => real(conjecture3_bound(n)),
                    (true, true) => real(conjecture3_bound_corrected(n)),
                    (false, false) => Ok(FormulaValue::Real(u::conjecture3_printed(f(n)))),
                    (false, true) => Ok(FormulaValue::Real(u::conjecture3_corrected(f(n)))),
                }
            }
            Formula::Conjecture2 => {
                let n = get("n")?;
                if checked {
                    real(conjecture2_bound(n))
                } else if n % 2 == 1 {
                    Ok(FormulaValue::Real(u::conjecture2_odd(f(n))))
                } else {
                    Ok(FormulaValue::Real(u::conjecture2_even(f(n))))
                }
            }
            _ => {
                let [a, b] = [self.params()[0], self.params()[1]];
                let (x, y) = two(a, b)?;
                let (checked_fn, raw_fn): (fn(usize, usize) -> DomainResult<f64>, fn(f64, f64) -> f64) = match self {
                    Formula::Lemma1 => (lemma1_oddodd, u::lemma1_oddodd),
                    Formula::Lemma2 => (lemma2_eveneven, u::lemma2_eveneven),
                    Formula::Lemma3 => (lemma3_oddeven, u::lemma3_oddeven),
                    Formula::FOddOdd => (f_oddodd, u::f_oddodd),
                    Formula::GOddOdd => (g_oddodd, u::g_oddodd),
                    Formula::FEvenEven => (f_eveneven, u::f_eveneven),
                    Formula::FOddEven => (f_oddeven, u::f_oddeven),
                    Formula::GOddEven => (g_oddeven, u::g_oddeven),
                    _ => unreachable!(),
                };
                if checked {
                    real(checked_fn(x, y))
                } else {
                    Ok(FormulaValue::Real(raw_fn(f(x), f(y))))
                }
            }
        }
    }
}

impl FromStr for Formula {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        Formula::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Family(format!("unknown formula {s:?}")))
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Parses `k=5,x=0` style parameter lists.
pub fn parse_params(s: &str) -> Result<BTreeMap<String, u32>, Error> {
    s.split(',')
        .filter(|part| !part.trim().is_empty())
        .map(|part| {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| Error::Family(format!("parameter {part:?} is not key=value")))?;
            let v = v
                .trim()
                .parse::<u32>()
                .map_err(|_| Error::Family(format!("parameter {part:?} is not a non-negative integer")))?;
            Ok((k.trim().to_string(), v))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOL: f64 = 1e-9;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn lemma1_examples() {
        assert!(close(lemma1_oddodd(3, 3).unwrap(), 8.0 / 6f64.sqrt(), 1e-12));
        assert!(close(lemma1_oddodd(5, 17).unwrap(), 10.93144431, 5e-9));
        assert!(lemma1_oddodd(4, 7).is_err());
        assert!(lemma1_oddodd(1, 7).is_err());
    }

    #[test]
    fn lemma2_examples() {
        assert!(close(lemma2_eveneven(4, 4).unwrap(), 16.0 * 0.125f64.sqrt(), 1e-12));
        assert!(close(lemma2_eveneven(4, 6).unwrap(), 6.57008451152, 1e-10));
        assert!(close(lemma2_eveneven(4, 18).unwrap(), 10.37826156, 5e-9));
        assert!(lemma2_eveneven(3, 6).is_err());
    }

    #[test]
    fn lemma3_examples() {
        assert!(close(lemma3_oddeven(5, 16).unwrap(), 10.4637371362, 1e-10));
        assert!(lemma3_oddeven(4, 5).is_err());
        // b1_closed_form puts the odd cycle first
        assert_eq!(b1_closed_form(8, 3).unwrap(), lemma3_oddeven(3, 8).unwrap());
    }

    #[test]
    fn reparameterized_tables() {
        assert!(close(f_eveneven(5, 0).unwrap(), 6.57008451152, 1e-10));
        assert!(close(f_eveneven(6, 2).unwrap(), 7.34846922835, 1e-10));
        assert!(close(f_eveneven(11, 0).unwrap(), 10.37826156, 5e-9));
        assert!(close(f_oddodd(11, 2).unwrap(), 10.93144431, 5e-9));
        assert!(close(f_oddeven(20, 0).unwrap(), 9.61887642042, 1e-10));
        assert!(close(f_oddeven(20, 2).unwrap(), 10.4637371362, 1e-10));
    }

    #[test]
    fn g_drops_last_term() {
        assert_eq!(g_oddodd(5, 0).unwrap(), f_oddodd(5, 0).unwrap());
        assert!(close(g_oddodd(11, 2).unwrap(), f_oddodd(11, 2).unwrap() - 0.5f64.sqrt(), 1e-12));
        assert!(close(g_oddodd(11, 2).unwrap(), 10.2243375, 1e-6));
        assert!(g_oddodd(7, 2).unwrap() > g_oddodd(7, 0).unwrap());
        assert_eq!(g_oddeven(10, 0).unwrap(), f_oddeven(10, 0).unwrap());
        assert!(close(g_oddeven(20, 2).unwrap(), 10.4637371362 - 0.5f64.sqrt(), 1e-9));
        let g = |x| g_oddeven(12, x).unwrap();
        assert!(g(4) > g(2) && g(2) > g(0));
    }

    #[test]
    fn domains() {
        assert!(f_oddodd(5, 4).is_err()); // x > k - 3
        assert!(f_oddodd(5, 2).is_ok());
        assert!(f_oddodd(6, 4).is_err()); // x > k - 4
        assert!(f_oddodd(7, 1).is_err()); // odd x
        assert!(f_oddodd(4, 0).is_err());
        assert!(f_eveneven(7, 4).is_err());
        assert!(f_eveneven(7, 2).is_ok());
        assert!(f_eveneven(8, 4).is_ok());
        assert!(f_oddeven(11, 0).is_err());
        assert!(f_oddeven(8, 0).is_err());
        assert!(f_oddeven(20, 16).is_err());
        assert!(f_oddeven(20, 14).is_ok());
        let e = f_oddodd(5, 4).unwrap_err();
        assert_eq!(e.formula, "f_oddodd");
        assert_eq!(e.parameter, "x=4");
    }

    #[test]
    fn reparameterizations_agree() {
        for k in 5..60 {
            let max = if k % 2 == 1 { k - 3 } else { k - 4 };
            for x in (0..=max).step_by(2) {
                assert!(close(f_oddodd(k, x).unwrap(), lemma1_oddodd(3 + x, 2 * k - 3 - x).unwrap(), TOL));
            }
            let max = if k % 2 == 1 { k - 5 } else { k - 4 };
            for x in (0..=max).step_by(2) {
                assert!(close(f_eveneven(k, x).unwrap(), lemma2_eveneven(4 + x, 2 * k - 4 - x).unwrap(), TOL));
            }
        }
        for n in (10..80).step_by(2) {
            for x in (0..=n - 6).step_by(2) {
                assert!(close(f_oddeven(n, x).unwrap(), lemma3_oddeven(3 + x, n - 2 - x).unwrap(), TOL));
            }
        }
    }

    #[test]
    fn t_gap_examples() {
        assert_eq!(t_gap(5, 0), (512, 512));
        for k in 3..30 {
            assert_eq!(t_gap(k, k - 3), (0, 0));
        }
        let (l, r) = t_gap(7, 2);
        assert_eq!(l, r);
    }

    #[test]
    fn theorem1_values() {
        let printed9 = 12.0 / 8f64.sqrt() + 2.0 * (6.0f64 / 7.0).sqrt() + 2.0 / 3.0;
        assert!(close(theorem1_bound(9, Theorem1Variant::Printed).unwrap(), printed9, 1e-12));
        assert!(close(printed9, 6.7609475, 1e-7));
        let lemma9 = 12.0 / 10f64.sqrt() + 2.0 * (6.0f64 / 7.0).sqrt() + 4.0 / 6.0;
        assert!(close(theorem1_bound(9, Theorem1Variant::LemmaConsistent).unwrap(), lemma9, 1e-12));
        assert_eq!(
            theorem1_bound(10, Theorem1Variant::Printed).unwrap(),
            theorem1_bound(10, Theorem1Variant::LemmaConsistent).unwrap()
        );
        assert!(theorem1_bound(8, Theorem1Variant::Printed).is_err());
        for n in (10..200).step_by(2) {
            assert!(close(theorem1_bound(n, Theorem1Variant::Printed).unwrap(), f_oddeven(n, 0).unwrap(), TOL));
        }
        for n in (9..200).step_by(2) {
            let k = (n + 1) / 2;
            assert!(close(theorem1_bound(n, Theorem1Variant::LemmaConsistent).unwrap(), f_oddodd(k, 0).unwrap(), TOL));
        }
    }

    #[test]
    fn conjecture_values() {
        assert!(close(conjecture2_bound(9).unwrap(), 20.0 * (7.0f64 / 80.0).sqrt(), 1e-12));
        assert!(close(conjecture2_bound(10).unwrap(), 0.6 * 8f64.sqrt() + 16.0 / 12f64.sqrt(), 1e-12));
        assert!(close(conjecture2_bound(11).unwrap(), 24.0 * (9.0f64 / 120.0).sqrt(), 1e-12));
        assert!(conjecture2_bound(8).is_err());
        let c8 = 4.0 * (6.0f64 / 7.0).sqrt() + 0.8f64.sqrt() + 2.0 * (5.0f64 / 6.0).sqrt() + 2f64.sqrt() / 2.0;
        assert!(close(conjecture3_bound(8).unwrap(), c8, 1e-12));
        assert!(close(conjecture3_bound_corrected(8).unwrap() - c8, 2f64.sqrt() / 2.0, 1e-12));
        assert!(conjecture3_bound(7).is_err());
    }

    #[test]
    fn registry() {
        let params = parse_params("n=9").unwrap();
        let v = Formula::Conjecture2.evaluate(&params, None, true).unwrap();
        assert_eq!(v, FormulaValue::Real(conjecture2_bound(9).unwrap()));
        let p = parse_params("k=5, x=4").unwrap();
        assert!(matches!(Formula::FOddOdd.evaluate(&p, None, true), Err(Error::Domain(_))));
        assert!(Formula::FOddOdd.evaluate(&p, None, false).is_ok());
        assert_eq!(
            Formula::TGap.evaluate(&parse_params("k=5,x=0").unwrap(), None, true).unwrap(),
            FormulaValue::Identity { lhs: 512, rhs: 512 }
        );
        let t = Formula::Theorem1.evaluate(&params, Some("printed"), true).unwrap();
        assert_eq!(t, FormulaValue::Real(theorem1_bound(9, Theorem1Variant::Printed).unwrap()));
        assert!(Formula::Lemma1.evaluate(&parse_params("p=3").unwrap(), None, true).is_err());
        assert!(Formula::Lemma1.evaluate(&parse_params("p=3,q=5,z=1").unwrap(), None, true).is_err());
        assert!(parse_params("k5").is_err());
        assert!("nope".parse::<Formula>().is_err());
        for f in Formula::ALL {
            assert_eq!(f.name().parse::<Formula>().unwrap(), f);
        }
    }
}
