//! Generalized and q-distance spectra from intersection arrays, and
//! classical-type detection.

use std::cmp::Ordering;

use drgq_exact::{AlgebraicNumber, Inertia, RatPoly, Rational, Sign};
use num_traits::{One, Signed, Zero};

use crate::drg::{ClassicalParameters, IntersectionArray};
use crate::{Error, Result};

/// `(α_0, …, α_D)` with `α_0 = 0` and `α_1 = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoefficientSequence {
    alpha: Vec<Rational>,
}

impl CoefficientSequence {
    pub fn new(alpha: Vec<Rational>) -> Result<Self> {
        if alpha.len() < 2 {
            return Err(Error::InvalidCoefficients("need at least alpha_0 and alpha_1".into()));
        }
        if !alpha[0].is_zero() || !alpha[1].is_one() {
            return Err(Error::InvalidCoefficients(format!(
                "alpha_0 = {}, alpha_1 = {} (must be 0 and 1)",
                alpha[0], alpha[1]
            )));
        }
        Ok(Self { alpha })
    }

    pub fn values(&self) -> &[Rational] {
        &self.alpha
    }

    pub fn len(&self) -> usize {
        self.alpha.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alpha.is_empty()
    }
}

/// `σ_0 = 0`, `σ_i = 1 + 1/q + ⋯ + 1/q^{i−1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QCoefficients {
    q: Rational,
    sigma: Vec<Rational>,
}

impl QCoefficients {
    pub fn q(&self) -> &Rational {
        &self.q
    }

    pub fn sigma(&self) -> &[Rational] {
        &self.sigma
    }

    pub fn to_sequence(&self) -> CoefficientSequence {
        CoefficientSequence {
            alpha: self.sigma.clone(),
        }
    }
}

pub fn q_coefficients(q: &Rational, d: usize) -> Result<QCoefficients> {
    if q.is_zero() {
        return Err(Error::ZeroQ);
    }
    let inv = q.recip();
    let mut sigma = vec![Rational::zero()];
    for i in 1..=d {
        let next = if i == 1 {
            Rational::one()
        } else {
            &sigma[i - 1] * &inv + Rational::one()
        };
        sigma.push(next);
    }
    Ok(QCoefficients { q: q.clone(), sigma })
}

/// `R(x) = Σ_{i≥1} α_i k_i u_i(x)`, so that θ contributes the eigenvalue `R(θ)`.
pub fn eigenvalue_polynomial(ia: &IntersectionArray, alpha: &CoefficientSequence) -> Result<RatPoly> {
    if alpha.len() != ia.diameter() + 1 {
        return Err(Error::CoefficientLength {
            expected: ia.diameter() + 1,
            found: alpha.len(),
        });
    }
    Ok(ia
        .standard_polynomials()
        .iter()
        .enumerate()
        .skip(1)
        .fold(RatPoly::zero(), |acc, (i, u)| {
            &acc + &u.scale(&(&alpha.values()[i] * ia.k(i)))
        }))
}

pub fn generalized_eigenvalue(
    ia: &IntersectionArray,
    alpha: &CoefficientSequence,
    theta: &AlgebraicNumber,
) -> Result<AlgebraicNumber> {
    Ok(theta.image(&eigenvalue_polynomial(ia, alpha)?))
}

#[derive(Clone, Debug)]
pub struct GeneralizedEigenvalue {
    pub eta: AlgebraicNumber,
    pub multiplicity: u64,
    pub source_theta: AlgebraicNumber,
}

/// One entry per eigenvalue θ of the graph, in the graph's descending order.
/// Equal values from different θ are merged only by the query methods.
#[derive(Clone, Debug)]
pub struct GeneralizedSpectrum {
    entries: Vec<GeneralizedEigenvalue>,
}

impl GeneralizedSpectrum {
    pub fn entries(&self) -> &[GeneralizedEigenvalue] {
        &self.entries
    }

    pub fn order(&self) -> u64 {
        self.entries.iter().map(|e| e.multiplicity).sum()
    }

    /// The value sourced at θ = k.
    pub fn row_sum(&self) -> &AlgebraicNumber {
        &self.entries[0].eta
    }

    /// Distinct values with merged multiplicities, descending.
    pub fn distinct(&self) -> Vec<(AlgebraicNumber, u64)> {
        let mut sorted: Vec<(AlgebraicNumber, u64)> = self
            .entries
            .iter()
            .map(|e| (e.eta.clone(), e.multiplicity))
            .collect();
        sorted.sort_by(|a, b| b.0.cmp_exact(&a.0));
        let mut out: Vec<(AlgebraicNumber, u64)> = Vec::new();
        for (eta, m) in sorted {
            match out.last_mut() {
                Some(last) if last.0.cmp_exact(&eta) == Ordering::Equal => last.1 += m,
                _ => out.push((eta, m)),
            }
        }
        out
    }

    pub fn distinct_count(&self) -> usize {
        self.distinct().len()
    }

    /// Number of positive eigenvalues counted with multiplicity.
    pub fn positive_count(&self) -> u64 {
        self.entries
            .iter()
            .filter(|e| e.eta.sign() == Sign::Plus)
            .map(|e| e.multiplicity)
            .sum()
    }

    pub fn distinct_positive_count(&self) -> usize {
        self.distinct().iter().filter(|(e, _)| e.sign() == Sign::Plus).count()
    }

    pub fn inertia(&self) -> Inertia {
        let mut out = Inertia::default();
        for e in &self.entries {
            let m = e.multiplicity as usize;
            match e.eta.sign() {
                Sign::Plus => out.n_pos += m,
                Sign::Minus => out.n_neg += m,
                Sign::NoSign => out.n_zero += m,
            }
        }
        out
    }

    pub fn has_zero(&self) -> bool {
        self.entries.iter().any(|e| e.eta.is_zero())
    }
}

/// Eigenvalues of `Σ α_i A_i`, one per eigenvalue of the graph.
///
/// The trace `Σ mult·η = 0` is checked independently of the per-root values,
/// through the weight polynomial of the array.
pub fn generalized_spectrum(ia: &IntersectionArray, alpha: &CoefficientSequence) -> Result<GeneralizedSpectrum> {
    let r = eigenvalue_polynomial(ia, alpha)?;
    let spec = ia.spectrum()?;
    let entries = spec
        .entries()
        .iter()
        .map(|(theta, m)| GeneralizedEigenvalue {
            eta: theta.image(&r),
            multiplicity: *m,
            source_theta: theta.clone(),
        })
        .collect();
    let tr = ia.spectral_sum(&r);
    if !tr.is_zero() {
        return Err(Error::TraceViolation(format!("sum of mult·eta is {tr}")));
    }
    Ok(GeneralizedSpectrum { entries })
}

pub fn q_distance_spectrum(ia: &IntersectionArray, q: &Rational) -> Result<GeneralizedSpectrum> {
    generalized_spectrum(ia, &q_coefficients(q, ia.diameter())?.to_sequence())
}

/// Outcome of testing whether `u_i = u_{i−1}/q + c` for a single θ.
#[derive(Clone, Debug)]
pub struct ClassicalTypeReport {
    pub theta: AlgebraicNumber,
    /// The certified rational q.
    pub q: Option<Rational>,
    /// `c = u_1 − u_0/q`; lies in ℚ(θ), so it is irrational when θ is.
    pub c: Option<AlgebraicNumber>,
    /// The differences are geometric but with an irrational ratio.
    pub irrational_ratio: bool,
    /// `u_1 ≠ u_0` but every later difference vanishes, which would need q = ∞.
    pub infinite_q: bool,
    /// `u_i = 1 + ((θ − k)/k)σ_i` for all i, when q was found.
    pub closed_form_holds: Option<bool>,
}

pub fn detect_classical_type(ia: &IntersectionArray, theta: &AlgebraicNumber) -> Result<ClassicalTypeReport> {
    if theta.as_rational() == Some(ia.valency()) {
        return Err(Error::ThetaEqualsValency);
    }
    if ia.diameter() < 2 {
        return Err(Error::PreconditionNotMet("diameter must be at least 2".into()));
    }
    if !ia.is_eigenvalue(theta) {
        return Err(Error::NotAnEigenvalue);
    }
    let d = ia.diameter();
    let u = ia.standard_sequence(theta);
    let u = u.entries();
    // diff[i] = u_i − u_{i−1}; diff[0] is unused.
    let diff: Vec<RatPoly> = (0..=d)
        .map(|i| if i == 0 { RatPoly::zero() } else { &u[i] - &u[i - 1] })
        .collect();
    let vanishes = |f: &RatPoly| theta.sign_at(f) == Sign::NoSign;
    let mut report = ClassicalTypeReport {
        theta: theta.clone(),
        q: None,
        c: None,
        irrational_ratio: false,
        infinite_q: false,
        closed_form_holds: None,
    };
    if vanishes(&diff[2]) {
        report.infinite_q = (2..=d).all(|i| vanishes(&diff[i]));
        return Ok(report);
    }
    let geometric = (2..d).all(|i| vanishes(&(&(&diff[i + 1] * &diff[1]) - &(&diff[i] * &diff[2]))));
    if !geometric {
        return Ok(report);
    }
    let Some(q) = theta.rational_ratio(&diff[1], &diff[2]) else {
        report.irrational_ratio = true;
        return Ok(report);
    };
    let sigma = q_coefficients(&q, d)?;
    let slope = (&RatPoly::x() - &RatPoly::constant(ia.valency().clone())).scale(&ia.valency().recip());
    let closed = (0..=d).all(|i| {
        let expected = &RatPoly::one() + &slope.scale(&sigma.sigma()[i]);
        vanishes(&(&u[i] - &expected))
    });
    report.c = Some(theta.image(&(&u[1] - &RatPoly::constant(q.recip()))));
    report.closed_form_holds = Some(closed);
    report.q = Some(q);
    Ok(report)
}

/// Result of checking that `θ = −1 + b_1/b` is of classical b-type.
#[derive(Clone, Debug)]
pub struct BTypeCertificate {
    pub theta: Rational,
    pub q: Rational,
    pub three_distinct: bool,
    pub spectrum: GeneralizedSpectrum,
}

pub fn classical_b_type_certificate(p: &ClassicalParameters) -> Result<BTypeCertificate> {
    let fail = |clause: &str| Error::CertificateFailure {
        clause: clause.to_string(),
    };
    if p.diameter() < 3 {
        return Err(fail("diameter must be at least 3"));
    }
    let ia = p.to_array()?;
    let b = p.base().clone();
    let theta = ia.b(1) / &b - Rational::one();
    let theta_alg = AlgebraicNumber::from_rational(theta.clone());
    if !ia.is_eigenvalue(&theta_alg) {
        return Err(fail(&format!("theta = {theta} is not an eigenvalue")));
    }
    let report = detect_classical_type(&ia, &theta_alg)?;
    if report.q.as_ref() != Some(&b) {
        return Err(fail(&format!("classical type of theta = {theta} is not q = {b}")));
    }
    let spectrum = q_distance_spectrum(&ia, &b)?;
    let distinct = spectrum.distinct();
    let rho = spectrum.row_sum();
    let three_distinct = distinct.len() == 3
        && distinct[0].0 == *rho
        && distinct[0].1 == 1
        && rho.sign() == Sign::Plus
        && distinct[1].0.is_zero()
        && distinct[2].0.sign() == Sign::Minus;
    if !three_distinct {
        return Err(fail("q-distance spectrum is not {rho > 0 > lambda} with 0"));
    }
    Ok(BTypeCertificate {
        theta,
        q: b,
        three_distinct,
        spectrum,
    })
}

#[derive(Clone, Debug)]
pub struct KrrBound {
    pub bound: Rational,
    pub theta_1: AlgebraicNumber,
    pub inequality_holds: bool,
}

/// `bound = b_1/(r−1) − 1`; the inequality `u_0 + (r−1)u_2 ≥ r·u_1` is tested
/// at the second-largest eigenvalue θ_1.
pub fn krr_bound(ia: &IntersectionArray, r: u32) -> Result<KrrBound> {
    if r < 2 {
        return Err(Error::PreconditionNotMet("r must be at least 2".into()));
    }
    if ia.diameter() < 2 {
        return Err(Error::PreconditionNotMet("diameter must be at least 2".into()));
    }
    let r = Rational::from_integer(r.into());
    let r1 = &r - Rational::one();
    let spec = ia.spectrum()?;
    let theta_1 = spec.entries()[1].0.clone();
    let u = ia.standard_sequence(&theta_1);
    let u = u.entries();
    let lhs = &(&u[0] + &u[2].scale(&r1)) - &u[1].scale(&r);
    Ok(KrrBound {
        bound: ia.b(1) / &r1 - Rational::one(),
        inequality_holds: theta_1.sign_at(&lhs) != Sign::Minus,
        theta_1,
    })
}

/// `q ≥ r − 1`, the constraint an induced `K_{r,r}` puts on a classical q at θ_1.
pub fn classical_type_krr_q_bound(q: &Rational, r: u32) -> bool {
    *q >= Rational::from_integer((r - 1).into())
}

/// `−q − 1`.
pub fn local_bound(q: &Rational) -> Result<Rational> {
    if q.is_zero() {
        return Err(Error::ZeroQ);
    }
    Ok(-q - Rational::one())
}

/// True when q lies where the q-distance matrix is entrywise non-negative.
pub fn q_in_nonnegative_range(q: &Rational) -> bool {
    q.is_positive() || *q <= -Rational::one()
}
