//! Exact arithmetic kernel: rationals, polynomials over ℚ and ℤ, Sturm root
//! isolation, real algebraic numbers, characteristic polynomials and inertia.
//!
//! Nothing in this crate rounds. Floating point only appears in
//! [`AlgebraicNumber::to_f64`], which exists for display.

pub mod algebraic;
pub mod charpoly;
pub mod inertia;
pub mod matrix;
pub mod poly;
pub mod rational;
pub mod sturm;

pub use algebraic::{distinct_root_count, real_roots_with_multiplicity, sturm_isolate, AlgebraicNumber};
pub use charpoly::{charpoly, charpoly_with, BareissInterpolation, Berkowitz, CharpolyMethod, CharpolyRegistry};
pub use inertia::{inertia, psd_certificate, Inertia, LdlCertificate};
pub use matrix::{IntMatrix, SymmetricRationalMatrix};
pub use num_bigint::{BigInt, Sign};
pub use poly::{IntPoly, RatPoly};
pub use rational::{format_rational, int, parse_rational, rat, Rational};

use num_traits::One;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("invalid rational {0:?} (expected \"p\" or \"p/q\")")]
    Rational(String),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("expected {expected} entries, found {found}")]
    Dimension { expected: usize, found: usize },
    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },
    #[error("interval does not isolate exactly one root")]
    NotIsolating,
    #[error("matrix is not positive semidefinite (pivot {index})")]
    NotPositiveSemidefinite { index: usize },
}

/// Eigenvalues of a symmetric rational matrix with multiplicities, descending.
///
/// The matrix is scaled to an integer matrix `d·M` first, whose characteristic
/// polynomial is monic over ℤ; the roots are mapped back by `x ↦ x/d`.
pub fn eigenvalues(
    m: &SymmetricRationalMatrix,
    method: &dyn CharpolyMethod,
) -> Vec<(AlgebraicNumber, usize)> {
    let (im, d) = m.to_integer_scaled();
    let chi = method.charpoly(&im).to_rat();
    let inv = Rational::new(BigInt::one(), d);
    let zero = Rational::from_integer(BigInt::from(0));
    let mut out: Vec<(AlgebraicNumber, usize)> = real_roots_with_multiplicity(&chi)
        .into_iter()
        .map(|(root, mult)| (root.affine(&inv, &zero), mult))
        .collect();
    out.sort_by(|a, b| b.0.cmp_exact(&a.0));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eigenvalues_of_scaled_matrix() {
        // [[0, 1/2], [1/2, 0]] has eigenvalues ±1/2
        let m = SymmetricRationalMatrix::from_fn(2, |i, j| if i == j { int(0) } else { rat(1, 2) });
        let ev = eigenvalues(&m, &Berkowitz);
        assert_eq!(ev.len(), 2);
        assert_eq!(ev[0].0.as_rational(), Some(&rat(1, 2)));
        assert_eq!(ev[1].0.as_rational(), Some(&rat(-1, 2)));
    }
}
