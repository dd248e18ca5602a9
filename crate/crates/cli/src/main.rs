use std::fs;
use std::io::{self, Read, Write};
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use abcgg::closed_form::{parse_params, Formula, FormulaValue};
use abcgg::enumerate::{catalog, GraphClass, DEFAULT_BICYCLIC_LIMIT};
use abcgg::verify::{
    check_closed_forms_with, check_t_gap, extremal_scan_with, lemma_behavior_scan, verify_claim_with, Claim,
    ClaimReport, LemmaCheck, Objective, ScanOptions,
};
use abcgg::{canonical_certificate, Family, Graph};
use clap::{Parser, Subcommand, ValueEnum};

mod output;

use output::{Format, Record};

/// Relative `--output` paths are resolved against this directory when set.
const OUTPUT_DIR_VAR: &str = "ABCGG_OUTPUT_DIR";

const EXIT_CLAIM_FAILED: u8 = 1;
const EXIT_INVALID: u8 = 3;
const EXIT_LIMIT: u8 = 4;

#[derive(Parser)]
#[command(name = "abcgg", version, about = "Graovac-Ghorbani index of graphs and bicyclic extremal search")]
struct Cli {
    /// Worker threads for enumeration and scans (default: all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Output format (default depends on the subcommand)
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write to this file instead of stdout
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    /// Tolerance for formula-versus-optimum comparisons
    #[arg(long, global = true, default_value_t = 1e-9, value_parser = positive)]
    tolerance: f64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Index of one graph with its per-edge splits
    Compute {
        /// Edge-list file ("-" for stdin)
        #[arg(long, conflicts_with = "family", required_unless_present = "family")]
        edges: Option<PathBuf>,
        /// Family descriptor such as b1:3,8 or h:9
        #[arg(long)]
        family: Option<String>,
    },
    /// Catalog of graphs of one class and order
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "all-bicyclic")]
        class: ClassArg,
        /// Include the index value of every entry
        #[arg(long)]
        with_index: bool,
        /// Largest order accepted for the all-bicyclic class
        #[arg(long, default_value_t = DEFAULT_BICYCLIC_LIMIT)]
        limit: usize,
    },
    /// Minimum or maximum of the index over a class
    Extremal {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "all-bicyclic")]
        class: ClassArg,
        #[arg(long, value_enum, default_value = "min")]
        objective: ObjectiveArg,
        #[arg(long, default_value_t = DEFAULT_BICYCLIC_LIMIT)]
        limit: usize,
    },
    /// Finite-range check of a claim; exits 1 when any row fails
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Inclusive order range, A..B
        #[arg(long, value_parser = parse_range)]
        n_range: RangeInclusive<usize>,
        /// Restrict lemma-behavior to one check
        #[arg(long, value_enum)]
        lemma: Option<LemmaArg>,
        #[arg(long, default_value_t = DEFAULT_BICYCLIC_LIMIT)]
        limit: usize,
    },
    /// Evaluate a closed form
    Formula {
        #[arg(long)]
        name: String,
        /// Comma separated assignments, e.g. k=5,x=0
        #[arg(long, default_value = "")]
        params: String,
        /// printed or lemma-consistent for theorem1, printed or corrected for conjecture3
        #[arg(long)]
        variant: Option<String>,
        /// Skip the parity and range checks
        #[arg(long)]
        unchecked: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    #[value(alias = "b1")]
    B1Only,
    NoPendant,
    #[value(alias = "all")]
    AllBicyclic,
}

impl From<ClassArg> for GraphClass {
    fn from(c: ClassArg) -> Self {
        match c {
            ClassArg::B1Only => GraphClass::B1Only,
            ClassArg::NoPendant => GraphClass::NoPendant,
            ClassArg::AllBicyclic => GraphClass::AllBicyclic,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ObjectiveArg {
    Min,
    Max,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Suite {
    Lemmas,
    LemmaBehavior,
    Theorem1,
    Conjecture2,
    Conjecture3,
}

#[derive(Clone, Copy, ValueEnum)]
enum LemmaArg {
    L1Monotone,
    L2Min,
    L3Minloc,
    L5Monotone,
    L5Min,
    L6Min,
    TGap,
}

fn positive(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(t) if t > 0.0 && t.is_finite() => Ok(t),
        _ => Err(format!("tolerance must be a positive number, got {s:?}")),
    }
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let (a, b) = s
        .split_once("..=")
        .or_else(|| s.split_once(".."))
        .ok_or_else(|| format!("expected A..B, got {s:?}"))?;
    let a: usize = a.trim().parse().map_err(|_| format!("bad range start in {s:?}"))?;
    let b: usize = b.trim().parse().map_err(|_| format!("bad range end in {s:?}"))?;
    if a > b {
        return Err(format!("empty range {s:?}"));
    }
    Ok(a..=b)
}

enum Failure {
    Invalid(String),
    Limit(String),
}

impl From<abcgg::Error> for Failure {
    fn from(e: abcgg::Error) -> Self {
        if e.is_resource_limit() {
            Failure::Limit(e.to_string())
        } else {
            Failure::Invalid(e.to_string())
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global().expect("thread pool already set");
    }
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_CLAIM_FAILED),
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INVALID)
        }
        Err(Failure::Limit(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_LIMIT)
        }
    }
}

fn output_path(path: &Path) -> PathBuf {
    match std::env::var_os(OUTPUT_DIR_VAR) {
        Some(dir) if path.is_relative() => Path::new(&dir).join(path),
        _ => path.to_path_buf(),
    }
}

fn emit(cli: &Cli, text: &str) -> Result<(), Failure> {
    match &cli.output {
        Some(path) => {
            let path = output_path(path);
            fs::write(&path, text).map_err(|e| Failure::Invalid(format!("cannot write {}: {e}", path.display())))
        }
        None => {
            let mut out = io::stdout().lock();
            // A closed pipe (e.g. `| head`) is not an error worth reporting.
            let _ = out.write_all(text.as_bytes());
            Ok(())
        }
    }
}

fn format_or(cli: &Cli, default: Format, allowed: &[Format]) -> Result<Format, Failure> {
    let f = cli.format.unwrap_or(default);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        Err(Failure::Invalid(format!("format {f} is not available for this subcommand")))
    }
}

/// Returns whether every checked claim passed.
fn run(cli: &Cli) -> Result<bool, Failure> {
    match &cli.command {
        Command::Compute { edges, family } => {
            let (graph, family) = match (edges, family) {
                (Some(path), _) => (read_graph(path)?, None),
                (None, Some(desc)) => {
                    let f: Family = desc.parse()?;
                    (f.build()?, Some(f))
                }
                (None, None) => unreachable!("clap requires one source"),
            };
            let format = format_or(cli, Format::Text, &[Format::Text, Format::Csv, Format::Json, Format::Jsonl, Format::Edgelist])?;
            let report = abcgg::abc_gg(&graph)?;
            // Certificates only exist up to the canonical-form limit.
            let cert = canonical_certificate(&graph).ok();
            emit(cli, &output::compute(format, &graph, family, cert, &report))?;
            Ok(true)
        }
        Command::Enumerate { n, class, with_index, limit } => {
            let format = format_or(cli, Format::Jsonl, &[Format::Jsonl, Format::Json, Format::Csv, Format::Edgelist])?;
            let entries = catalog((*class).into(), *n, *limit)?;
            let records: Vec<Record> = entries.iter().map(|e| Record::from_entry(e, *with_index)).collect();
            emit(cli, &output::catalog(format, &records))?;
            eprintln!("{} classes", records.len());
            Ok(true)
        }
        Command::Extremal { n, class, objective, limit } => {
            let format = format_or(cli, Format::Json, &[Format::Json, Format::Text, Format::Csv])?;
            let objective = match objective {
                ObjectiveArg::Min => Objective::Min,
                ObjectiveArg::Max => Objective::Max,
            };
            let opts = ScanOptions { bicyclic_limit: *limit, formula_tolerance: cli.tolerance };
            let result = extremal_scan_with((*class).into(), *n, objective, opts)?;
            emit(cli, &output::extremal(format, &result))?;
            Ok(true)
        }
        Command::Verify { suite, n_range, lemma, limit } => {
            let format = format_or(cli, Format::Csv, &[Format::Csv, Format::Json])?;
            if lemma.is_some() && *suite != Suite::LemmaBehavior {
                return Err(Failure::Invalid("--lemma applies only to --suite lemma-behavior".into()));
            }
            let opts = ScanOptions { bicyclic_limit: *limit, formula_tolerance: cli.tolerance };
            let report = verify_suite(*suite, n_range.clone(), *lemma, opts)?;
            emit(cli, &output::claim_report(format, &report))?;
            let failed = report.rows.iter().filter(|r| !r.pass).count();
            eprintln!(
                "{}: {} rows, {} failed, {} counterexamples ({})",
                report.claim,
                report.rows.len(),
                failed,
                report.counterexamples.len(),
                report.evidence
            );
            Ok(report.passed())
        }
        Command::Formula { name, params, variant, unchecked } => {
            let format = format_or(cli, Format::Text, &[Format::Text, Format::Json])?;
            let formula: Formula = name.parse()?;
            let values = parse_params(params)?;
            let value = formula.evaluate(&values, variant.as_deref(), !unchecked)?;
            emit(cli, &output::formula(format, formula, &values, variant.as_deref(), value))?;
            Ok(!matches!(value, FormulaValue::Identity { lhs, rhs } if lhs != rhs))
        }
    }
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Invalid(format!("cannot read {}: {e}", path.display())))?
    };
    Ok(Graph::parse_edge_list(&text)?)
}

fn lemma_check(l: LemmaArg) -> Option<LemmaCheck> {
    Some(match l {
        LemmaArg::L1Monotone => LemmaCheck::L1Monotone,
        LemmaArg::L2Min => LemmaCheck::L2Min,
        LemmaArg::L3Minloc => LemmaCheck::L3MinLoc,
        LemmaArg::L5Monotone => LemmaCheck::L5Monotone,
        LemmaArg::L5Min => LemmaCheck::L5Min,
        LemmaArg::L6Min => LemmaCheck::L6Min,
        LemmaArg::TGap => return None,
    })
}

/// Lemma scans over `k` take the orders `2k - 1` that fall inside the range.
/// The range start is raised to each lemma's smallest valid order, so one
/// range serves all checks; a range entirely below it is a domain error.
fn lemma_scan(l: LemmaArg, range: &RangeInclusive<usize>) -> Result<ClaimReport, Failure> {
    let (a, b) = (*range.start(), *range.end());
    let kmax = (b + 1) / 2;
    match lemma_check(l) {
        None => Ok(check_t_gap(kmax as u32, kmax as u32)),
        Some(check) if check.scans_k() => {
            let k0 = (a + 1).div_ceil(2).max(5);
            Ok(lemma_behavior_scan(check, k0.min(kmax)..=kmax)?)
        }
        Some(check) => Ok(lemma_behavior_scan(check, a.max(10).min(b)..=b)?),
    }
}

fn verify_suite(suite: Suite, range: RangeInclusive<usize>, lemma: Option<LemmaArg>, opts: ScanOptions) -> Result<ClaimReport, Failure> {
    Ok(match suite {
        Suite::Lemmas => check_closed_forms_with(*range.end(), opts.formula_tolerance)?,
        Suite::LemmaBehavior => {
            let picks: Vec<LemmaArg> = match lemma {
                Some(l) => vec![l],
                None => LemmaArg::value_variants().to_vec(),
            };
            let mut reports = picks.into_iter().map(|l| lemma_scan(l, &range));
            let first = reports.next().expect("at least one lemma")?;
            reports.try_fold(first, |acc, r| Ok::<_, Failure>(acc.merge(r?)))?
        }
        Suite::Theorem1 => {
            let even = verify_claim_with(Claim::Theorem1Even, range.clone(), opts)?;
            let odd = verify_claim_with(Claim::Theorem1Odd, range, opts)?;
            let mut merged = even.merge(odd);
            merged.rows.sort_by_key(|r| r.n);
            merged
        }
        Suite::Conjecture2 => verify_claim_with(Claim::Conjecture2, range, opts)?,
        Suite::Conjecture3 => verify_claim_with(Claim::Conjecture3, range, opts)?,
    })
}
