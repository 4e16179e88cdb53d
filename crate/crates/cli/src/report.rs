//! Serializable reports. Exact values are rational strings or a defining
//! polynomial with an isolating interval; `approx` is for display only.

use std::fmt::Write as _;

use drgq_core::checks::{CheckOutcome, Evaluation, QEvaluation};
use drgq_core::oracle::{order_limit, semimetric_check};
use drgq_core::qdistance::{classical_b_type_certificate, ClassicalTypeReport};
use drgq_core::{CatalogEntry, ClassicalParameters, GeneralizedSpectrum, Result};
use drgq_exact::{format_rational, AlgebraicNumber, Inertia, Rational};
use serde::{Deserialize, Serialize};

pub const SCHEMA_ID: &str = "drgq-report/v1";

/// Isolating intervals are narrowed to this many bits before output.
const INTERVAL_BITS: u32 = 32;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ExactValue {
    Rational {
        value: String,
        approx: f64,
    },
    Algebraic {
        /// Integer coefficients, constant term first.
        minpoly: Vec<String>,
        interval: [String; 2],
        approx: f64,
    },
}

impl ExactValue {
    pub fn from_algebraic(a: &AlgebraicNumber) -> Self {
        if let Some(r) = a.as_rational() {
            return Self::from_rational(r);
        }
        let width = Rational::new(1.into(), num_bigint_pow2(INTERVAL_BITS));
        let narrow = a.refine(&width);
        let (lo, hi) = narrow.interval();
        ExactValue::Algebraic {
            minpoly: narrow.poly().coeffs().iter().map(ToString::to_string).collect(),
            interval: [format_rational(lo), format_rational(hi)],
            approx: narrow.to_f64(),
        }
    }

    pub fn from_rational(r: &Rational) -> Self {
        ExactValue::Rational {
            value: format_rational(r),
            approx: drgq_exact::rational::to_f64(r),
        }
    }

    /// Exact form first, decimal in parentheses.
    pub fn display(&self) -> String {
        match self {
            ExactValue::Rational { value, approx } if value.contains('/') => format!("{value} ({approx:.6})"),
            ExactValue::Rational { value, .. } => value.clone(),
            ExactValue::Algebraic {
                minpoly,
                interval,
                approx,
            } => {
                let coeffs: Vec<drgq_exact::BigInt> = minpoly.iter().filter_map(|c| c.parse().ok()).collect();
                let p = drgq_exact::IntPoly::from_coeffs(coeffs);
                format!("root of {p} in [{}, {}] ({approx:.6})", interval[0], interval[1])
            }
        }
    }
}

fn num_bigint_pow2(bits: u32) -> drgq_exact::BigInt {
    drgq_exact::BigInt::from(1u8) << bits
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Input {
    /// `array`, `classical` or `family`.
    pub kind: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumEntry {
    pub value: ExactValue,
    pub multiplicity: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassicalTypeEntry {
    pub theta: ExactValue,
    pub q: Option<String>,
    pub c: Option<ExactValue>,
    pub irrational_ratio: bool,
    pub infinite_q: bool,
    pub closed_form_holds: Option<bool>,
}

impl From<&ClassicalTypeReport> for ClassicalTypeEntry {
    fn from(r: &ClassicalTypeReport) -> Self {
        Self {
            theta: ExactValue::from_algebraic(&r.theta),
            q: r.q.as_ref().map(format_rational),
            c: r.c.as_ref().map(ExactValue::from_algebraic),
            irrational_ratio: r.irrational_ratio,
            infinite_q: r.infinite_q,
            closed_form_holds: r.closed_form_holds,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertificateEntry {
    pub passed: bool,
    pub theta: Option<String>,
    pub q: Option<String>,
    pub detail: Option<String>,
}

impl CertificateEntry {
    pub fn b_type(p: &ClassicalParameters) -> Option<Self> {
        if p.diameter() < 3 {
            return None;
        }
        Some(match classical_b_type_certificate(p) {
            Ok(c) => Self {
                passed: c.three_distinct,
                theta: Some(format_rational(&c.theta)),
                q: Some(format_rational(&c.q)),
                detail: None,
            },
            Err(e) => Self {
                passed: false,
                theta: None,
                q: None,
                detail: Some(e.to_string()),
            },
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InertiaEntry {
    pub n_pos: u64,
    pub n_zero: u64,
    pub n_neg: u64,
}

impl From<Inertia> for InertiaEntry {
    fn from(i: Inertia) -> Self {
        Self {
            n_pos: i.n_pos as u64,
            n_zero: i.n_zero as u64,
            n_neg: i.n_neg as u64,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemimetricEntry {
    pub nonneg: bool,
    pub triangle: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QReport {
    pub q: String,
    pub spectrum: Vec<SpectrumEntry>,
    pub distinct_count: u64,
    /// Positive eigenvalues counted with multiplicity.
    pub positive_count: u64,
    pub distinct_positive_count: u64,
    pub one_positive: bool,
    pub has_zero: bool,
    pub inertia: InertiaEntry,
    pub semimetric: Option<SemimetricEntry>,
}

impl QReport {
    fn new(qe: &QEvaluation, s: &GeneralizedSpectrum, ev: &Evaluation) -> Self {
        let semimetric = ev
            .distances
            .as_ref()
            .filter(|dm| dm.order() <= order_limit())
            .and_then(|dm| semimetric_check(dm, &qe.q).ok())
            .map(|v| SemimetricEntry {
                nonneg: v.nonneg,
                triangle: v.triangle,
            });
        Self {
            q: format_rational(&qe.q),
            spectrum: s
                .distinct()
                .iter()
                .map(|(e, m)| SpectrumEntry {
                    value: ExactValue::from_algebraic(e),
                    multiplicity: *m,
                })
                .collect(),
            distinct_count: s.distinct_count() as u64,
            positive_count: s.positive_count(),
            distinct_positive_count: s.distinct_positive_count() as u64,
            one_positive: s.positive_count() == 1,
            has_zero: s.has_zero(),
            inertia: s.inertia().into(),
            semimetric,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub name: String,
    /// `pass`, `fail`, `skip` or `info`.
    pub status: String,
    pub details: Vec<String>,
}

impl From<&CheckOutcome> for CheckEntry {
    fn from(o: &CheckOutcome) -> Self {
        Self {
            name: o.check.to_string(),
            status: o.status.as_str().to_lowercase(),
            details: o.details.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema: String,
    pub input: Input,
    pub array: String,
    pub classical_parameters: Option<String>,
    pub order: String,
    pub diameter: u64,
    pub k: Vec<String>,
    pub charpoly_method: String,
    pub spectrum: Vec<SpectrumEntry>,
    pub classical_types: Vec<ClassicalTypeEntry>,
    pub b_type_certificate: Option<CertificateEntry>,
    pub q_reports: Vec<QReport>,
    pub checks: Vec<CheckEntry>,
}

impl AnalysisReport {
    /// Assembles a report from an evaluation whose subject has an array.
    pub fn new(input: Input, ev: &Evaluation, checks: &[CheckOutcome], method: &str) -> Result<Self> {
        let ia = ev
            .subject
            .array
            .as_ref()
            .ok_or_else(|| drgq_core::Error::InvalidGraph("graph is not distance-regular".into()))?;
        let spectrum = match &ev.spectrum {
            Some(Ok(s)) => s.clone(),
            Some(Err(e)) => return Err(e.clone()),
            None => ia.spectrum()?,
        };
        let mut q_reports = Vec::new();
        for qe in &ev.per_q {
            match &qe.analytic {
                Some(Ok(s)) => q_reports.push(QReport::new(qe, s, ev)),
                Some(Err(e)) => return Err(e.clone()),
                None => {}
            }
        }
        Ok(Self {
            schema: SCHEMA_ID.to_string(),
            input,
            array: ia.to_string(),
            classical_parameters: ev.subject.classical.as_ref().map(ToString::to_string),
            order: format_rational(ia.order()),
            diameter: ia.diameter() as u64,
            k: ia.k_values().iter().map(format_rational).collect(),
            charpoly_method: method.to_string(),
            spectrum: spectrum
                .entries()
                .iter()
                .map(|(t, m)| SpectrumEntry {
                    value: ExactValue::from_algebraic(t),
                    multiplicity: *m,
                })
                .collect(),
            classical_types: ev.classical_types.iter().map(ClassicalTypeEntry::from).collect(),
            b_type_certificate: ev.subject.classical.as_ref().and_then(CertificateEntry::b_type),
            q_reports,
            checks: checks.iter().map(CheckEntry::from).collect(),
        })
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != "fail") && self.b_type_certificate.as_ref().is_none_or(|c| c.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "input: {} {}", self.input.kind, self.input.value);
        let _ = writeln!(out, "intersection array: {{{}}}", self.array);
        if let Some(p) = &self.classical_parameters {
            let _ = writeln!(out, "classical parameters: ({p})");
        }
        let _ = writeln!(out, "n = {}, D = {}, k_i = ({})", self.order, self.diameter, self.k.join(", "));
        let _ = writeln!(out, "spectrum:");
        for e in &self.spectrum {
            let _ = writeln!(out, "  {}  x{}", e.value.display(), e.multiplicity);
        }
        if !self.classical_types.is_empty() {
            let _ = writeln!(out, "classical types:");
            for c in &self.classical_types {
                let q = match (&c.q, c.irrational_ratio, c.infinite_q) {
                    (Some(q), _, _) => format!("q = {q}"),
                    (None, true, _) => "irrational ratio".to_string(),
                    (None, _, true) => "infinite q".to_string(),
                    _ => "none".to_string(),
                };
                let _ = writeln!(out, "  theta = {}: {q}", c.theta.display());
            }
        }
        if let Some(c) = &self.b_type_certificate {
            let verdict = if c.passed { "PASS" } else { "FAIL" };
            match (&c.theta, &c.q, &c.detail) {
                (Some(t), Some(q), _) => {
                    let _ = writeln!(out, "b-type certificate: {verdict} (theta = {t}, q = {q})");
                }
                (_, _, Some(d)) => {
                    let _ = writeln!(out, "b-type certificate: {verdict} ({d})");
                }
                _ => {
                    let _ = writeln!(out, "b-type certificate: {verdict}");
                }
            }
        }
        for r in &self.q_reports {
            let _ = writeln!(out, "q = {}:", r.q);
            for e in &r.spectrum {
                let _ = writeln!(out, "  {}  x{}", e.value.display(), e.multiplicity);
            }
            let _ = writeln!(
                out,
                "  distinct = {}, positive = {} ({} distinct), inertia (+{}, 0:{}, -{}), one positive: {}",
                r.distinct_count,
                r.positive_count,
                r.distinct_positive_count,
                r.inertia.n_pos,
                r.inertia.n_zero,
                r.inertia.n_neg,
                r.one_positive
            );
            if let Some(s) = &r.semimetric {
                let _ = writeln!(out, "  non-negative: {}, triangle inequality: {}", s.nonneg, s.triangle);
            }
        }
        if !self.checks.is_empty() {
            let _ = writeln!(out, "checks:");
            out.push_str(&render_checks(&self.checks));
        }
        out
    }
}

pub fn render_checks(checks: &[CheckEntry]) -> String {
    let mut out = String::new();
    for c in checks.iter().filter(|c| c.status != "skip") {
        let _ = writeln!(out, "  {:<4} {}", c.status.to_uppercase(), c.name);
        for d in &c.details {
            let _ = writeln!(out, "         {d}");
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CatalogListing {
    pub name: String,
    /// `family` or `classical`.
    pub source: String,
    pub array: String,
    pub classical_parameters: Option<String>,
    pub order: String,
    pub diameter: u64,
    pub note: String,
}

impl CatalogListing {
    pub fn new(e: &CatalogEntry) -> Result<Self> {
        let ia = e.intersection_array()?;
        Ok(Self {
            name: e.name.clone(),
            source: if e.is_explicit() { "family" } else { "classical" }.to_string(),
            array: ia.to_string(),
            classical_parameters: e.classical.clone(),
            order: format_rational(ia.order()),
            diameter: ia.diameter() as u64,
            note: e.note.to_string(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use drgq_exact::{int, rat, IntPoly};

    #[test]
    fn exact_values() {
        let v = ExactValue::from_rational(&rat(-3, 2));
        assert_eq!(v.display(), "-3/2 (-1.500000)");
        assert_eq!(ExactValue::from_rational(&int(4)).display(), "4");
        let sqrt5 = AlgebraicNumber::new(&IntPoly::from_i64(&[-5, 0, 1]), int(2), int(3)).unwrap();
        let ExactValue::Algebraic { minpoly, interval, approx } = ExactValue::from_algebraic(&sqrt5) else {
            panic!("expected an algebraic value");
        };
        assert_eq!(minpoly, vec!["-5", "0", "1"]);
        assert!((approx - 5f64.sqrt()).abs() < 1e-9);
        let lo: Rational = drgq_exact::parse_rational(&interval[0]).unwrap();
        let hi: Rational = drgq_exact::parse_rational(&interval[1]).unwrap();
        assert!(&lo * &lo < int(5) && int(5) < &hi * &hi);
    }
}
