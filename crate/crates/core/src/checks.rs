//! Cross-verification: every subject is evaluated once on a q grid, then a
//! registry of named checks inspects the evaluation.

use std::sync::Arc;

use drgq_exact::{
    charpoly::default_method, eigenvalues, inertia, int, rat, AlgebraicNumber, CharpolyMethod, Inertia, Rational,
    Sign, SymmetricRationalMatrix,
};
use indexmap::IndexMap;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::catalog::{CatalogEntry, Source};
use crate::drg::{ClassicalParameters, IntersectionArray, SpectrumOfGamma};
use crate::family::{FamilyDescriptor, FamilyRegistry};
use crate::graph::{DistanceMatrix, Graph};
use crate::oracle::{
    contains_induced_krr, local_min_eigenvalue_bound_check, negative_type_witness, order_limit,
    q_distance_matrix, same_multiset, semimetric_check, verify_distance_regular, KRR_MAX_ORDER,
};
use crate::qdistance::{
    classical_b_type_certificate, classical_type_krr_q_bound, detect_classical_type, krr_bound, q_distance_spectrum, q_in_nonnegative_range, ClassicalTypeReport, GeneralizedSpectrum,
};
use crate::{Error, Result};

/// `{±1/4, ±1/2, ±3/4, ±9/10, ±1, ±3/2, ±2, ±3}`.
pub fn default_q_grid() -> Vec<Rational> {
    let base = [rat(1, 4), rat(1, 2), rat(3, 4), rat(9, 10), int(1), rat(3, 2), int(2), int(3)];
    let mut out: Vec<Rational> = base.iter().map(|q| -q).chain(base.iter().cloned()).collect();
    out.sort();
    out
}

/// What a verification run looks at: an explicit graph, an intersection array,
/// or both.
#[derive(Clone, Debug)]
pub struct Subject {
    pub name: String,
    pub graph: Option<Graph>,
    /// The array used by the analytic route: the stated one, or the one found
    /// by brute force when nothing was stated.
    pub array: Option<IntersectionArray>,
    pub stated_array: Option<IntersectionArray>,
    pub classical: Option<ClassicalParameters>,
}

impl Subject {
    pub fn from_entry(entry: &CatalogEntry) -> Result<Self> {
        let stated = entry.intersection_array()?;
        let classical = entry.classical_parameters()?;
        let graph = entry.build_graph().transpose()?;
        Ok(Self {
            name: entry.name.clone(),
            graph,
            array: Some(stated.clone()),
            stated_array: Some(stated),
            classical,
        })
    }

    /// A family graph; the stated array comes from the catalog when listed there.
    pub fn from_family(desc: &FamilyDescriptor) -> Result<Self> {
        let name = desc.to_string();
        if let Some(entry) = crate::catalog::catalog()
            .into_iter()
            .find(|e| matches!(&e.source, Source::Family(d) if d == desc))
        {
            return Self::from_entry(&entry);
        }
        let registry = FamilyRegistry::default();
        let graph = registry.build(desc)?;
        Ok(Self {
            name,
            array: verify_distance_regular(&graph),
            classical: registry.classical_parameters(desc)?,
            graph: Some(graph),
            stated_array: None,
        })
    }

    pub fn from_graph(name: &str, graph: Graph) -> Self {
        Self {
            name: name.to_string(),
            array: verify_distance_regular(&graph),
            graph: Some(graph),
            stated_array: None,
            classical: None,
        }
    }

    pub fn from_array(ia: IntersectionArray) -> Self {
        Self {
            name: ia.to_string(),
            array: Some(ia.clone()),
            stated_array: Some(ia),
            graph: None,
            classical: None,
        }
    }

    pub fn from_classical(p: ClassicalParameters) -> Result<Self> {
        let ia = p.to_array()?;
        Ok(Self {
            name: p.to_string(),
            array: Some(ia.clone()),
            stated_array: Some(ia),
            graph: None,
            classical: Some(p),
        })
    }
}

/// Everything computed for one q.
#[derive(Clone, Debug)]
pub struct QEvaluation {
    pub q: Rational,
    pub analytic: Option<Result<GeneralizedSpectrum>>,
    pub matrix: Option<SymmetricRationalMatrix>,
    pub inertia: Option<Inertia>,
    pub explicit: Option<Result<Vec<(AlgebraicNumber, usize)>>>,
}

impl QEvaluation {
    /// Positive eigenvalue count: exact inertia of the explicit matrix when
    /// there is one, otherwise the analytic spectrum.
    pub fn n_pos(&self) -> Option<usize> {
        if let Some(i) = &self.inertia {
            return Some(i.n_pos);
        }
        match &self.analytic {
            Some(Ok(s)) => Some(s.positive_count() as usize),
            _ => None,
        }
    }

    /// The exact spectrum from whichever route is available, explicit first.
    pub fn spectrum(&self) -> Option<Vec<(AlgebraicNumber, usize)>> {
        if let Some(Ok(ev)) = &self.explicit {
            return Some(ev.clone());
        }
        match &self.analytic {
            Some(Ok(s)) => Some(s.distinct().into_iter().map(|(e, m)| (e, m as usize)).collect()),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Evaluation {
    pub subject: Subject,
    pub distances: Option<DistanceMatrix>,
    pub spectrum: Option<Result<SpectrumOfGamma>>,
    pub classical_types: Vec<ClassicalTypeReport>,
    pub per_q: Vec<QEvaluation>,
}

impl Evaluation {
    /// Evaluates `subject` on `grid` plus every rational classical q it has.
    pub fn new(subject: Subject, grid: &[Rational], method: Arc<dyn CharpolyMethod>) -> Self {
        Self::build(subject, grid, method, true)
    }

    /// Evaluates `subject` on `grid` only.
    pub fn on_grid(subject: Subject, grid: &[Rational], method: Arc<dyn CharpolyMethod>) -> Self {
        Self::build(subject, grid, method, false)
    }

    fn build(subject: Subject, grid: &[Rational], method: Arc<dyn CharpolyMethod>, classical_qs: bool) -> Self {
        let distances = subject.graph.as_ref().and_then(|g| g.distances().ok());
        let spectrum = subject.array.as_ref().map(IntersectionArray::spectrum);
        let classical_types: Vec<ClassicalTypeReport> = match (&subject.array, &spectrum) {
            (Some(ia), Some(Ok(spec))) if ia.diameter() >= 2 => spec
                .thetas()
                .skip(1)
                .filter_map(|t| detect_classical_type(ia, t).ok())
                .collect(),
            _ => Vec::new(),
        };
        let mut qs: Vec<Rational> = grid.to_vec();
        if classical_qs {
            qs.extend(classical_types.iter().filter_map(|r| r.q.clone()));
        }
        qs.retain(|q| !q.is_zero());
        qs.sort();
        qs.dedup();
        let limit = order_limit();
        let per_q = qs
            .into_par_iter()
            .map(|q| {
                let analytic = subject.array.as_ref().map(|ia| q_distance_spectrum(ia, &q));
                // Dense matrices above the order limit are never formed.
                let (matrix, inertia, explicit) = match &distances {
                    Some(dm) if dm.order() > limit => (
                        None,
                        None,
                        Some(Err(Error::OrderLimitExceeded {
                            order: dm.order(),
                            limit,
                        })),
                    ),
                    Some(dm) => {
                        let m = q_distance_matrix(dm, &q).ok();
                        let i = m.as_ref().map(inertia);
                        let e = m.as_ref().map(|m| Ok(eigenvalues(m, method.as_ref())));
                        (m, i, e)
                    }
                    None => (None, None, None),
                };
                QEvaluation {
                    q,
                    analytic,
                    matrix,
                    inertia,
                    explicit,
                }
            })
            .collect();
        Self {
            subject,
            distances,
            spectrum,
            classical_types,
            per_q,
        }
    }

    pub fn with_default_method(subject: Subject, grid: &[Rational]) -> Self {
        Self::new(subject, grid, default_method())
    }

    pub fn at(&self, q: &Rational) -> Option<&QEvaluation> {
        self.per_q.iter().find(|e| &e.q == q)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    Fail,
    /// Nothing to check for this subject.
    Skip,
    /// Exploratory observation, never counted as pass or fail.
    Info,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
            Status::Info => "INFO",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub check: &'static str,
    pub status: Status,
    pub details: Vec<String>,
}

/// Accumulates per-item results for one check.
struct Tally {
    check: &'static str,
    ran: usize,
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Tally {
    fn new(check: &'static str) -> Self {
        Self {
            check,
            ran: 0,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.ran += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn skip_note(&mut self, note: String) {
        self.notes.push(note);
    }

    fn finish(self) -> CheckOutcome {
        let status = if !self.failures.is_empty() {
            Status::Fail
        } else if self.ran == 0 {
            Status::Skip
        } else {
            Status::Pass
        };
        let mut details = self.failures;
        if status != Status::Pass {
            details.extend(self.notes);
        }
        CheckOutcome {
            check: self.check,
            status,
            details,
        }
    }
}

pub trait Check: Send + Sync {
    fn name(&self) -> &'static str;
    fn description(&self) -> &'static str;
    fn run(&self, ev: &Evaluation) -> CheckOutcome;
}

pub struct CheckRegistry {
    checks: IndexMap<&'static str, Arc<dyn Check>>,
}

impl Default for CheckRegistry {
    fn default() -> Self {
        let mut r = Self {
            checks: IndexMap::new(),
        };
        r.register(Arc::new(DistanceRegular));
        r.register(Arc::new(ArraySpectrum));
        r.register(Arc::new(OracleAgreement));
        r.register(Arc::new(Nonnegative));
        r.register(Arc::new(OnePositiveSign));
        r.register(Arc::new(ThreeEigenvalues));
        r.register(Arc::new(RowSumWitness));
        r.register(Arc::new(LocalBound));
        r.register(Arc::new(LocalInterlacing));
        r.register(Arc::new(ClassicalType));
        r.register(Arc::new(C2Threshold));
        r.register(Arc::new(InducedKrr));
        r.register(Arc::new(ClassicalTriangleSurvey));
        r
    }
}

impl CheckRegistry {
    pub fn register(&mut self, check: Arc<dyn Check>) {
        self.checks.insert(check.name(), check);
    }

    pub fn get(&self, name: &str) -> Option<Arc<dyn Check>> {
        self.checks.get(name).cloned()
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.checks.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Arc<dyn Check>> {
        self.checks.values()
    }

    pub fn run_all(&self, ev: &Evaluation) -> Vec<CheckOutcome> {
        self.checks.values().map(|c| c.run(ev)).collect()
    }
}

fn describe(v: &[(AlgebraicNumber, usize)]) -> String {
    let parts: Vec<String> = v
        .iter()
        .map(|(e, m)| match e.as_rational() {
            Some(r) => format!("{r}^{m}"),
            None => format!("{:.6}^{m}", e.to_f64()),
        })
        .collect();
    format!("{{{}}}", parts.join(", "))
}

struct DistanceRegular;

impl Check for DistanceRegular {
    fn name(&self) -> &'static str {
        "distance-regular"
    }

    fn description(&self) -> &'static str {
        "brute-force intersection numbers match the stated array"
    }

    fn run(&self, ev: &Evaluation) -> CheckOutcome {
        let mut t = Tally::new(self.name());
        if let Some(g) = &ev.subject.graph {
            let found = verify_distance_regular(g);
            match (&found, &ev.subject.stated_array) {
                (Some(f), Some(s)) => t.expect(f == s, || format!("found {{{f}}}, stated {{{s}}}")),
                (found, None) => t.expect(found.is_some(), || "graph is not distance-regular".into()),
                (None, Some(s)) => t.expect(false, || format!("graph is not distance-regular, stated {{{s}}}")),
            }
        }
        t.finish()
    }
}

struct ArraySpectrum;

impl Check for ArraySpectrum {
    fn name(&self) -> &'static str {
        "array-spectrum"
    }

    fn description(&self) -> &'static str {
        "eigenvalues from the array equal the adjacency spectrum, with multiplicities"
    }

    fn run(&self, ev: &Evaluation) -> CheckOutcome {
        let mut t = Tally::new(self.name());
        match &ev.spectrum {
            Some(Err(e)) => t.expect(false, || format!("array spectrum: {e}")),
            Some(Ok(spec)) => {
                if let Some(g) = &ev.subject.graph {
                    if g.order() > order_limit() {
                        t.skip_note(format!("order {} above limit", g.order()));
                    } else {
                        let analytic: Vec<_> = spec.entries().iter().map(|(t, m)| (t.clone(), *m as usize)).collect();
                        let explicit = eigenvalues(&g.adjacency_matrix(), default_method().as_ref());
                        let shown = describe(&explicit);
                        t.expect(same_multiset(analytic, explicit), || format!("adjacency spectrum {shown}"));
                    }
                }
            }
            None => {}
        }
        t.finish()
    }
}

struct OracleAgreement;

impl Check for OracleAgreement {
    fn name(&self) -> &'static str {
        "oracle-agreement"
    }

    fn description(&self) -> &'static str {
        "analytic q-distance spectrum equals the explicit one; analytic signs equal exact inertia"
    }

    fn run(&self, ev: &Evaluation) -> CheckOutcome {
        let mut t = Tally::new(self.name());
        for qe in &ev.per_q {
            let q = &qe.q;
            match (&qe.analytic, &qe.explicit) {
                (Some(Err(e)), _) => t.expect(false, || format!("q = {q}: analytic route failed: {e}")),
                (Some(Ok(a)), Some(Ok(x))) => {
                    let analytic: Vec<_> = a.distinct().into_iter().map(|(e, m)| (e, m as usize)).collect();
                    let (sa, sx) = (describe(&analytic), describe(x));
                    t.expect(same_multiset(analytic, x.clone()), || {
                        format!("q = {q}: analytic {sa} vs explicit {sx}")
                    });
                }
                (_, Some(Err(e))) => t.skip_note(format!("q = {q}: {e}")),
                _ => {}
            }
            if let (Some(Ok(a)), Some(i)) = (&qe.analytic, &qe.inertia) {
                let ai = a.inertia();
                t.expect(ai == *i, || format!("q = {q}: analytic inertia {ai:?} vs congruence {i:?}"));
            }
        }
        t.finish()
    }
}

struct Nonnegative;

impl Check for Nonnegative {
    fn name(&self) -> &'static str {
        "nonnegative"
    }

    fn description(&self) -> &'static str {
        "entries are non-negative iff q > 0 or q <= -1; triangle inequality when q >= 1 or q <= -2"
    }

    fn run(&self, ev: &Evaluation) -> CheckOutcome {
        let mut t = Tally::new(self.name());
        let Some(dm) = &ev.distances else {
            return t.finish();
        };
        if dm.diameter() < 2 || dm.order() > order_limit() {
            return t.finish();
        }
        for qe in &ev.per_q {
            let q = &qe.q;
            let Ok(v) = semimetric_check(dm, q) else { continue };
            let expect_nonneg = q_in_nonnegative_range(q);
            t.expect(v.nonneg == expect_nonneg, || format!("q = {q}: nonneg = {}", v.nonneg));
            if *q >= Rational::one() || *q <= int(-2) {
                t.expect(v.triangle, || format!("q = {q}: triangle inequality fails"));
            }
        }
        t.finish()
    }
}

struct OnePositiveSign;

impl Check for OnePositiveSign {
    fn name(&self) -> &'static str {
        "one-positive-sign"
    }

    fn description(&self) -> &'static str {
        "one positive eigenvalue forces q > 0 or q <= -1, non-negative entries, and a positive row sum"
    }

    fn run(&self, ev: &Evaluation) -> CheckOutcome {
        let mut t = Tally::new(self.name());
        // Complete graphs give J - I for every q.
        if ev.subject.array.as_ref().is_some_and(|ia| ia.diameter() < 2) {
            return t.finish();
        }
        for qe in &ev.per_q {
            if qe.n_pos() != Some(1) {
                continue;
            }
            let q = &qe.q;
            t.expect(q_in_nonnegative_range(q), || format!("q = {q} has one positive eigenvalue"));
            if let Some(m) = &qe.matrix {
                t.expect(m.entries().iter().all(|e| !e.is_negative()), || {
                    format!("q = {q}: negative entry despite one positive eigenvalue")
                });
                let rs = &m.row_sums()[0];
                t.expect(rs.is_positive(), || format!("q = {q}: row sum {rs} is not positive"));
            }
            if let Some(Ok(a)) = &qe.analytic {
                t.expect(a.row_sum().sign() == Sign::Plus, || format!("q = {q}: row sum is not the positive eigenvalue"));
            }
        }
        t.finish()
    }
}

struct ThreeEigenvalues;

impl Check for ThreeEigenvalues {
    fn name(&self) -> &'static str {
        "three-eigenvalues"
    }

    fn description(&self) -> &'static str {
        "for q > 0 or q <= -1: at least three distinct eigenvalues and a simple spectral radius; complete graphs give J - I"
    }

    fn run(&self, ev: &Evaluation) -> CheckOutcome {
        let mut t = Tally::new(self.name());
        let complete = match (&ev.subject.graph, &ev.subject.array) {
            (Some(g), _) => g.is_complete(),
            (None, Some(ia)) => ia.diameter() == 1,
            _ => return t.finish(),
        };
        for qe in &ev.per_q {
            let q = &qe.q;
            let Some(spec) = qe.spectrum() else { continue };
            if complete {
                let n: usize = spec.iter().map(|(_, m)| m).sum();
                let expected = vec![
                    (AlgebraicNumber::from_integer(n as i64 - 1), 1),
                    (AlgebraicNumber::from_integer(-1), n - 1),
                ];
                let shown = describe(&spec);
                t.expect(same_multiset(spec, expected), || format!("q = {q}: complete graph spectrum {shown}"));
                if let Some(m) = &qe.matrix {
                    let j_minus_i = SymmetricRationalMatrix::from_fn(m.order(), |x, y| int(i64::from(x != y)));
                    t.expect(*m == j_minus_i, || format!("q = {q}: matrix is not J - I"));
                }
            } else if q_in_nonnegative_range(q) {
                let shown = describe(&spec);
                t.expect(spec.len() >= 3 && spec[0].1 == 1, || format!("q = {q}: spectrum {shown}"));
            }
        }
        t.finish()
    }
}

struct RowSumWitness;

impl Check for RowSumWitness {
    fn name(&self) -> &'static str {
        "row-sum-witness"
    }

    fn description(&self) -> &'static str {
        "a PSD Gram witness exists iff exactly one eigenvalue is positive"
    }

    fn run(&self, ev: &Evaluation) -> CheckOutcome {
        let mut t = Tally::new(self.name());
        for qe in &ev.per_q {
            let (Some(m), Some(i)) = (&qe.matrix, &qe.inertia) else { continue };
            let q = &qe.q;
            let w = negative_type_witness(m);
            let one = i.n_pos == 1;
            match w {
                Ok(w) => {
                    t.expect(one, || format!("q = {q}: witness built with n_pos = {}", i.n_pos));
                    t.expect(w.verify(m), || format!("q = {q}: witness identities fail"));
                }
                Err(e) => t.expect(!one, || format!("q = {q}: n_pos = 1 but witness failed: {e}")),
            }
        }
        t.finish()
    }
}

struct LocalBound;

impl Check for LocalBound {
    fn name(&self) -> &'static str {
        "local-bound"
    }

    fn description(&self) -> &'static str {
        "one positive eigenvalue bounds local graph eigenvalues by -q-1"
    }

    fn run(&self, ev: &Evaluation) -> CheckOutcome {
        let mut t = Tally::new(self.name());
        let Some(g) = &ev.subject.graph else {
            return t.finish();
        };
        if ev.distances.as_ref().is_none_or(|d| d.diameter() < 2 || d.order() > order_limit()) {
            return t.finish();
        }
        for qe in &ev.per_q {
            if qe.n_pos() != Some(1) {
                continue;
            }
            let q = &qe.q;
            match local_min_eigenvalue_bound_check(g, q) {
                Ok(ok) => t.expect(ok, || format!("q = {q}: a local graph violates the bound {}", -q - Rational::one())),
                Err(e) => t.expect(false, || format!("q = {q}: {e}")),
            }
        }
        t.finish()
    }
}

struct LocalInterlacing;

impl Check for LocalInterlacing {
    fn name(&self) -> &'static str {
        "local-interlacing"
    }

    fn description(&self) -> &'static str {
        "one positive eigenvalue: the submatrix on each neighbourhood has at most one positive eigenvalue"
    }

    fn run(&self, ev: &Evaluation) -> CheckOutcome {
        let mut t = Tally::new(self.name());
        let Some(g) = &ev.subject.graph else {
            return t.finish();
        };
        for qe in &ev.per_q {
            let (Some(m), Some(i)) = (&qe.matrix, &qe.inertia) else { continue };
            if i.n_pos != 1 {
                continue;
            }
            let q = &qe.q;
            for x in 0..g.order() {
                let sub = m.principal_submatrix(g.neighbors(x));
                let n_pos = inertia(&sub).n_pos;
                t.expect(n_pos <= 1, || format!("q = {q}: neighbourhood of {x} has {n_pos} positive eigenvalues"));
            }
        }
        t.finish()
    }
}

struct ClassicalType;

impl Check for ClassicalType {
    fn name(&self) -> &'static str {
        "classical-type"
    }

    fn description(&self) -> &'static str {
        "classical q-type eigenvalues give three distinct q-distance eigenvalues, sit at theta_1 or -k, and match classical parameters"
    }

    fn run(&self, ev: &Evaluation) -> CheckOutcome {
        let mut t = Tally::new(self.name());
        let (Some(ia), Some(Ok(spec))) = (&ev.subject.array, &ev.spectrum) else {
            return t.finish();
        };
        if ia.diameter() < 2 {
            return t.finish();
        }
        let k = ia.valency();
        for r in &ev.classical_types {
            let theta = &r.theta;
            let Some(q) = &r.q else { continue };
            t.expect(r.closed_form_holds == Some(true), || format!("theta = {theta}: closed form fails for q = {q}"));
            t.expect(q_in_nonnegative_range(q), || format!("theta = {theta}: q = {q} in (-1, 0)"));
            if q.is_positive() {
                let pos = spec.position(theta);
                t.expect(pos == Some(1), || format!("theta = {theta} has positive q = {q} but is not theta_1"));
            }
            if *q == int(-1) {
                t.expect(theta.as_rational() == Some(&-k), || format!("theta = {theta} has q = -1 but is not -k"));
            }
            match q_distance_spectrum(ia, q) {
                Ok(gs) => {
                    let zero_elsewhere = gs
                        .entries()
                        .iter()
                        .skip(1)
                        .filter(|e| e.source_theta != *theta)
                        .all(|e| e.eta.is_zero());
                    t.expect(zero_elsewhere, || format!("q = {q}: nonzero eigenvalue away from k and theta = {theta}"));
                    let n = gs.distinct_count();
                    t.expect(n == 3, || format!("q = {q}: {n} distinct eigenvalues"));
                }
                Err(e) => t.expect(false, || format!("q = {q}: {e}")),
            }
        }
        if let Some(p) = &ev.subject.classical {
            match p.to_array() {
                Ok(derived) => t.expect(&derived == ia, || format!("parameters give {{{derived}}}, array is {{{ia}}}")),
                Err(e) => t.expect(false, || e.to_string()),
            }
            if p.diameter() >= 3 {
                match classical_b_type_certificate(p) {
                    Ok(c) => t.expect(c.three_distinct, || "b-type certificate".into()),
                    Err(e) => t.expect(false, || e.to_string()),
                }
            }
        }
        t.finish()
    }
}

struct C2Threshold;

impl Check for C2Threshold {
    fn name(&self) -> &'static str {
        "c2-threshold"
    }

    fn description(&self) -> &'static str {
        "one positive eigenvalue with -1 < q < 1 forces c_2 = 1 and 0 < q < 1"
    }

    fn run(&self, ev: &Evaluation) -> CheckOutcome {
        let mut t = Tally::new(self.name());
        let Some(ia) = &ev.subject.array else {
            return t.finish();
        };
        if ia.diameter() < 2 {
            return t.finish();
        }
        for qe in &ev.per_q {
            let q = &qe.q;
            if q.abs() >= Rational::one() {
                continue;
            }
            t.ran += 1;
            if qe.n_pos() == Some(1) {
                t.expect(ia.c(2).is_one() && q.is_positive(), || {
                    format!("q = {q} has one positive eigenvalue with c_2 = {}", ia.c(2))
                });
            }
        }
        t.finish()
    }
}

struct InducedKrr;

impl Check for InducedKrr {
    fn name(&self) -> &'static str {
        "induced-krr"
    }

    fn description(&self) -> &'static str {
        "an induced K_{r,r} forces theta_1 <= b_1/(r-1) - 1 and q >= r - 1 for a classical theta_1"
    }

    fn run(&self, ev: &Evaluation) -> CheckOutcome {
        let mut t = Tally::new(self.name());
        let (Some(g), Some(ia), Some(Ok(spec))) = (&ev.subject.graph, &ev.subject.array, &ev.spectrum) else {
            return t.finish();
        };
        if ia.diameter() < 2 || g.order() > KRR_MAX_ORDER {
            return t.finish();
        }
        let theta_1 = &spec.entries()[1].0;
        let q1 = ev
            .classical_types
            .iter()
            .find(|r| &r.theta == theta_1)
            .and_then(|r| r.q.clone());
        for r in 2..=3u32 {
            let Ok(found) = contains_induced_krr(g, r as usize) else { continue };
            t.ran += 1;
            if !found {
                continue;
            }
            match krr_bound(ia, r) {
                Ok(b) => t.expect(b.inequality_holds, || format!("induced K_{{{r},{r}}} but theta_1 exceeds {}", b.bound)),
                Err(e) => t.expect(false, || e.to_string()),
            }
            if let Some(q) = &q1 {
                t.expect(classical_type_krr_q_bound(q, r), || format!("induced K_{{{r},{r}}} with classical q = {q}"));
            }
        }
        t.finish()
    }
}

/// Whether q-distances satisfy the triangle inequality at each classical q.
/// Reported, never enforced.
struct ClassicalTriangleSurvey;

impl Check for ClassicalTriangleSurvey {
    fn name(&self) -> &'static str {
        "classical-triangle-survey"
    }

    fn description(&self) -> &'static str {
        "triangle inequality of the q-distances at each classical q (exploratory)"
    }

    fn run(&self, ev: &Evaluation) -> CheckOutcome {
        let mut details = Vec::new();
        if let Some(dm) = &ev.distances {
            for r in &ev.classical_types {
                let Some(q) = &r.q else { continue };
                if let Ok(v) = semimetric_check(dm, q) {
                    details.push(format!("q = {q}: triangle = {}", v.triangle));
                }
            }
        }
        CheckOutcome {
            check: self.name(),
            status: if details.is_empty() { Status::Skip } else { Status::Info },
            details,
        }
    }
}
