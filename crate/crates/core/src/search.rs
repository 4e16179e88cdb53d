//! Sweeps over rational q looking for exactly one positive eigenvalue.

use drgq_exact::{inertia, parse_rational, Rational};
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::checks::Subject;
use crate::oracle::q_distance_matrix;
use crate::qdistance::q_distance_spectrum;
use crate::{Error, Result};

/// Largest number of points a range may expand to.
pub const MAX_SEARCH_POINTS: usize = 100_000;

/// `"start:end:step"`, inclusive of both ends, step positive. q = 0 is dropped.
pub fn parse_q_range(s: &str) -> Result<Vec<Rational>> {
    let parts: Vec<&str> = s.split(':').map(str::trim).collect();
    let [start, end, step] = parts.as_slice() else {
        return Err(Error::Syntax(format!("expected start:end:step, found {s:?}")));
    };
    let (start, end, step) = (parse_rational(start)?, parse_rational(end)?, parse_rational(step)?);
    if !step.is_positive() {
        return Err(Error::Syntax(format!("step must be positive, found {step}")));
    }
    if end < start {
        return Ok(Vec::new());
    }
    let count = ((&end - &start) / &step).floor().to_integer();
    if count >= MAX_SEARCH_POINTS.into() {
        return Err(Error::SizeLimitExceeded(format!("{s} has more than {MAX_SEARCH_POINTS} points")));
    }
    let mut out = Vec::new();
    let mut q = start;
    while q <= end {
        if !q.is_zero() {
            out.push(q.clone());
        }
        q += &step;
    }
    Ok(out)
}

/// Comma-separated rationals, sorted and deduplicated. q = 0 is rejected.
pub fn parse_q_grid(s: &str) -> Result<Vec<Rational>> {
    let mut out = s
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| parse_rational(t).map_err(Error::from))
        .collect::<Result<Vec<_>>>()?;
    if out.iter().any(Zero::is_zero) {
        return Err(Error::ZeroQ);
    }
    out.sort();
    out.dedup();
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    /// Spectrum from the intersection array.
    Analytic,
    /// Inertia of the explicit matrix.
    Explicit,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchPoint {
    pub q: Rational,
    /// Positive eigenvalues counted with multiplicity.
    pub positive_count: u64,
    pub route: Route,
}

/// Positive eigenvalue count at every q, in input order.
pub fn search_q(subject: &Subject, qs: &[Rational]) -> Result<Vec<SearchPoint>> {
    if let Some(ia) = &subject.array {
        return qs
            .par_iter()
            .map(|q| {
                Ok(SearchPoint {
                    q: q.clone(),
                    positive_count: q_distance_spectrum(ia, q)?.positive_count(),
                    route: Route::Analytic,
                })
            })
            .collect();
    }
    let g = subject
        .graph
        .as_ref()
        .ok_or_else(|| Error::PreconditionNotMet("subject has neither an array nor a graph".into()))?;
    let dm = g.distances()?;
    qs.par_iter()
        .map(|q| {
            Ok(SearchPoint {
                q: q.clone(),
                positive_count: inertia(&q_distance_matrix(&dm, q)?).n_pos as u64,
                route: Route::Explicit,
            })
        })
        .collect()
}

/// The q values with exactly one positive eigenvalue.
pub fn one_positive_values(points: &[SearchPoint]) -> Vec<Rational> {
    points.iter().filter(|p| p.positive_count == 1).map(|p| p.q.clone()).collect()
}
