//! Subcommand implementations for the `drgq` binary. Each returns its output
//! text and whether every check passed; argument parsing lives in `main.rs`.

pub mod report;

use std::fmt::Write as _;
use std::sync::Arc;

use drgq_core::checks::{default_q_grid, Check, CheckOutcome, Status};
use drgq_core::search::{one_positive_values, search_q, Route};
use drgq_core::{
    catalog, CheckRegistry, ClassicalParameters, Error, Evaluation, FamilyDescriptor, IntersectionArray, Subject,
};
use drgq_exact::{format_rational, CharpolyMethod, CharpolyRegistry, Rational};
use rayon::prelude::*;

use report::{render_checks, AnalysisReport, CatalogListing, CheckEntry, Input};

#[derive(Debug)]
pub enum CliError {
    /// Bad invocation: exit 2.
    Usage(String),
    /// Invalid or infeasible input: exit 1.
    Domain(Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 1,
        }
    }

    pub fn code(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Domain(e) => e.code(),
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => f.write_str(m),
            CliError::Domain(e) => e.fmt(f),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Output text plus whether the run counts as a success.
#[derive(Debug)]
pub struct CommandOutput {
    pub text: String,
    pub passed: bool,
}

pub fn charpoly_method(name: Option<&str>) -> CliResult<Arc<dyn CharpolyMethod>> {
    match name {
        None => Ok(drgq_exact::charpoly::default_method()),
        Some(n) => {
            let registry = CharpolyRegistry::default();
            registry.get(n).ok_or_else(|| {
                let known: Vec<_> = registry.names().collect();
                CliError::Usage(format!("unknown charpoly method {n:?} (known: {})", known.join(", ")))
            })
        }
    }
}

pub fn select_checks(names: Option<&str>) -> CliResult<Vec<Arc<dyn Check>>> {
    let registry = CheckRegistry::default();
    let Some(names) = names else {
        return Ok(registry.iter().cloned().collect());
    };
    names
        .split(',')
        .map(str::trim)
        .filter(|n| !n.is_empty())
        .map(|n| {
            registry.get(n).ok_or_else(|| {
                let known: Vec<_> = registry.names().collect();
                CliError::Usage(format!("unknown check {n:?} (known: {})", known.join(", ")))
            })
        })
        .collect()
}

fn run_checks(checks: &[Arc<dyn Check>], ev: &Evaluation) -> Vec<CheckOutcome> {
    checks.iter().map(|c| c.run(ev)).collect()
}

pub enum Target {
    Array(String),
    Classical(String),
    Family(String),
}

pub struct AnalyzeArgs {
    pub target: Target,
    pub qs: Vec<Rational>,
    pub json: bool,
    pub charpoly: Option<String>,
}

pub fn analyze_report(args: &AnalyzeArgs) -> CliResult<AnalysisReport> {
    let method_name = args.charpoly.as_deref();
    let method = charpoly_method(method_name)?;
    if args.qs.iter().any(|q| *q == Rational::from_integer(0.into())) {
        return Err(Error::ZeroQ.into());
    }
    let (input, subject) = match &args.target {
        Target::Array(s) => (
            Input {
                kind: "array".into(),
                value: s.clone(),
            },
            Subject::from_array(IntersectionArray::parse(s)?),
        ),
        Target::Classical(s) => (
            Input {
                kind: "classical".into(),
                value: s.clone(),
            },
            Subject::from_classical(ClassicalParameters::parse(s)?)?,
        ),
        Target::Family(s) => (
            Input {
                kind: "family".into(),
                value: s.clone(),
            },
            Subject::from_family(&FamilyDescriptor::parse(s)?)?,
        ),
    };
    if subject.array.is_none() {
        return Err(Error::InvalidGraph(format!("{} is not distance-regular", subject.name)).into());
    }
    let ev = Evaluation::on_grid(subject, &args.qs, method.clone());
    let outcomes = run_checks(&select_checks(None)?, &ev);
    Ok(AnalysisReport::new(input, &ev, &outcomes, method.name())?)
}

pub fn analyze(args: &AnalyzeArgs) -> CliResult<CommandOutput> {
    let report = analyze_report(args)?;
    let text = if args.json { report.to_json() + "\n" } else { report.render() };
    Ok(CommandOutput {
        passed: report.all_passed(),
        text,
    })
}

pub struct VerifyArgs {
    /// `None` means the whole catalog.
    pub family: Option<String>,
    pub grid: Option<Vec<Rational>>,
    pub checks: Option<String>,
    pub charpoly: Option<String>,
}

struct VerifyResult {
    name: String,
    per_q: Vec<(Rational, Option<usize>)>,
    outcomes: Vec<CheckOutcome>,
}

fn verify_subject(subject: Subject, grid: &[Rational], checks: &[Arc<dyn Check>], method: Arc<dyn CharpolyMethod>) -> VerifyResult {
    let ev = Evaluation::new(subject, grid, method);
    VerifyResult {
        name: ev.subject.name.clone(),
        per_q: ev.per_q.iter().map(|qe| (qe.q.clone(), qe.n_pos())).collect(),
        outcomes: run_checks(checks, &ev),
    }
}

pub fn verify(args: &VerifyArgs) -> CliResult<CommandOutput> {
    let checks = select_checks(args.checks.as_deref())?;
    let method = charpoly_method(args.charpoly.as_deref())?;
    let grid = args.grid.clone().unwrap_or_else(default_q_grid);
    let subjects: Vec<Subject> = match &args.family {
        Some(f) => vec![Subject::from_family(&FamilyDescriptor::parse(f)?)?],
        None => catalog().iter().map(Subject::from_entry).collect::<drgq_core::Result<_>>()?,
    };
    // Targets run concurrently; collection keeps catalog order.
    let results: Vec<VerifyResult> = subjects
        .into_par_iter()
        .map(|s| verify_subject(s, &grid, &checks, method.clone()))
        .collect();
    let mut text = String::new();
    let mut failed = Vec::new();
    for r in &results {
        let _ = writeln!(text, "== {}", r.name);
        for (q, n_pos) in &r.per_q {
            let n = n_pos.map_or("?".to_string(), |n| n.to_string());
            let one = n_pos.map_or("?".to_string(), |n| (n == 1).to_string());
            let _ = writeln!(text, "  q = {:<6} n_pos = {n:<4} one_positive = {one}", format_rational(q));
        }
        let entries: Vec<CheckEntry> = r.outcomes.iter().map(CheckEntry::from).collect();
        text.push_str(&render_checks(&entries));
        failed.extend(
            r.outcomes
                .iter()
                .filter(|o| o.status == Status::Fail)
                .map(|o| format!("{}: {}", r.name, o.check)),
        );
    }
    if failed.is_empty() {
        let _ = writeln!(text, "PASS: {} target(s), all checks passed", results.len());
    } else {
        let _ = writeln!(text, "FAIL: {} failing check(s): {}", failed.len(), failed.join(", "));
    }
    Ok(CommandOutput {
        text,
        passed: failed.is_empty(),
    })
}

pub fn catalog_listing(classical_only: bool) -> CliResult<Vec<CatalogListing>> {
    catalog()
        .iter()
        .filter(|e| !classical_only || e.classical.is_some())
        .map(|e| CatalogListing::new(e).map_err(CliError::from))
        .collect()
}

pub fn catalog_command(json: bool, classical_only: bool) -> CliResult<CommandOutput> {
    let entries = catalog_listing(classical_only)?;
    let text = if json {
        serde_json::to_string_pretty(&entries).expect("catalog serializes") + "\n"
    } else {
        let mut out = format!("{:<24} {:>5} {:>2}  {:<22} {}\n", "name", "n", "D", "array", "classical");
        for e in &entries {
            let _ = writeln!(
                out,
                "{:<24} {:>5} {:>2}  {:<22} {}",
                e.name,
                e.order,
                e.diameter,
                format!("{{{}}}", e.array),
                e.classical_parameters.as_deref().unwrap_or("-")
            );
        }
        out
    };
    Ok(CommandOutput { text, passed: true })
}

pub fn search_q_command(family: &str, qs: &[Rational], json: bool) -> CliResult<CommandOutput> {
    let subject = Subject::from_family(&FamilyDescriptor::parse(family)?)?;
    let points = search_q(&subject, qs)?;
    let found = one_positive_values(&points);
    let route = match points.first().map(|p| p.route) {
        Some(Route::Explicit) => "explicit inertia",
        _ => "analytic spectrum",
    };
    let text = if json {
        let values: Vec<String> = found.iter().map(format_rational).collect();
        serde_json::to_string_pretty(&serde_json::json!({
            "family": family,
            "evaluated": points.len(),
            "one_positive": values,
        }))
        .expect("search result serializes")
            + "\n"
    } else {
        let mut out = format!("{family}: {} q values evaluated ({route})\n", points.len());
        if found.is_empty() {
            out.push_str("no q with exactly one positive eigenvalue\n");
        } else {
            let _ = writeln!(out, "exactly one positive eigenvalue at {} q values:", found.len());
            for q in &found {
                let _ = writeln!(out, "  {}", format_rational(q));
            }
        }
        out
    };
    Ok(CommandOutput { text, passed: true })
}
