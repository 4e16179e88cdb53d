//! Characteristic polynomials of integer matrices.
//!
//! Two independent exact methods are provided behind [`CharpolyMethod`] and
//! selected by name through a [`CharpolyRegistry`]. Rational matrices are
//! scaled to integer matrices first, so neither method ever divides inexactly.

use std::sync::Arc;

use indexmap::IndexMap;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::matrix::{IntMatrix, SymmetricRationalMatrix};
use crate::poly::{IntPoly, RatPoly};
use crate::rational::{lcm_of_denominators, Rational};

/// An algorithm computing `det(x·I − M)` for an integer matrix.
pub trait CharpolyMethod: Send + Sync {
    fn name(&self) -> &'static str;

    /// Monic characteristic polynomial, lowest degree first.
    fn charpoly(&self, m: &IntMatrix) -> IntPoly;
}

/// Division-free Berkowitz scheme, `O(n^4)` ring operations.
#[derive(Debug, Default, Clone, Copy)]
pub struct Berkowitz;

/// Bareiss fraction-free determinants of `t·I − M` at `t = 0..=n`, followed by
/// exact Newton interpolation.
#[derive(Debug, Default, Clone, Copy)]
pub struct BareissInterpolation;

impl CharpolyMethod for Berkowitz {
    fn name(&self) -> &'static str {
        "berkowitz"
    }

    fn charpoly(&self, m: &IntMatrix) -> IntPoly {
        let n = m.order();
        if n == 0 {
            return IntPoly::from_i64(&[1]);
        }
        // Coefficients highest degree first while building.
        let mut poly = vec![BigInt::one(), -m.get(n - 1, n - 1)];
        for k in (0..n - 1).rev() {
            let size = n - k;
            let tail = k + 1..n;
            // Toeplitz column: 1, -a, -R·C, -R·A'·C, ..., -R·A'^(size-2)·C
            let mut column = Vec::with_capacity(size + 1);
            column.push(BigInt::one());
            column.push(-m.get(k, k));
            let mut v: Vec<BigInt> = tail.clone().map(|i| m.get(i, k).clone()).collect();
            for step in 0..size - 1 {
                let rv: BigInt = tail
                    .clone()
                    .zip(&v)
                    .map(|(j, x)| m.get(k, j) * x)
                    .sum();
                column.push(-rv);
                if step + 1 < size - 1 {
                    v = tail
                        .clone()
                        .map(|i| tail.clone().zip(&v).map(|(j, x)| m.get(i, j) * x).sum())
                        .collect();
                }
            }
            let next: Vec<BigInt> = (0..=size)
                .map(|i| {
                    (0..size.min(i + 1))
                        .map(|j| &column[i - j] * &poly[j])
                        .sum()
                })
                .collect();
            poly = next;
        }
        poly.reverse();
        IntPoly::from_coeffs(poly)
    }
}

impl CharpolyMethod for BareissInterpolation {
    fn name(&self) -> &'static str {
        "bareiss-interpolation"
    }

    fn charpoly(&self, m: &IntMatrix) -> IntPoly {
        let n = m.order();
        let points: Vec<BigInt> = (0..=n).map(BigInt::from).collect();
        let values: Vec<Rational> = points
            .iter()
            .map(|t| {
                let mut a: Vec<BigInt> = m.entries().iter().map(|e| -e).collect();
                for i in 0..n {
                    a[i * n + i] += t;
                }
                Rational::from_integer(bareiss_determinant(a, n))
            })
            .collect();
        let xs: Vec<Rational> = points.into_iter().map(Rational::from_integer).collect();
        let poly = newton_interpolate(&xs, &values);
        debug_assert!(poly.coeffs().iter().all(|c| c.is_integer()));
        IntPoly::from_coeffs(poly.coeffs().iter().map(|c| c.to_integer()).collect())
    }
}

/// Fraction-free Gaussian elimination; every division is exact.
pub fn bareiss_determinant(mut a: Vec<BigInt>, n: usize) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k * n + k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !a[i * n + k].is_zero()) else {
                return BigInt::zero();
            };
            for j in 0..n {
                a.swap(k * n + j, swap * n + j);
            }
            negate = !negate;
        }
        let pivot = a[k * n + k].clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i * n + j] * &pivot - &a[i * n + k] * &a[k * n + j]) / &prev;
                a[i * n + j] = v;
            }
        }
        prev = pivot;
    }
    let det = a[n * n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

fn newton_interpolate(xs: &[Rational], ys: &[Rational]) -> RatPoly {
    let n = xs.len();
    let mut dd = ys.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    let mut poly = RatPoly::zero();
    for i in (0..n).rev() {
        let factor = RatPoly::from_coeffs(vec![-xs[i].clone(), Rational::one()]);
        poly = &(&poly * &factor) + &RatPoly::constant(dd[i].clone());
    }
    poly
}

/// Named charpoly algorithms, selectable at runtime.
#[derive(Clone)]
pub struct CharpolyRegistry {
    methods: IndexMap<&'static str, Arc<dyn CharpolyMethod>>,
}

impl Default for CharpolyRegistry {
    fn default() -> Self {
        let mut registry = Self {
            methods: IndexMap::new(),
        };
        registry.register(Arc::new(Berkowitz));
        registry.register(Arc::new(BareissInterpolation));
        registry
    }
}

impl CharpolyRegistry {
    pub fn register(&mut self, method: Arc<dyn CharpolyMethod>) {
        self.methods.insert(method.name(), method);
    }

    pub fn get(&self, name: &str) -> Option<Arc<dyn CharpolyMethod>> {
        self.methods.get(name).cloned()
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.methods.keys().copied()
    }
}

pub fn default_method() -> Arc<dyn CharpolyMethod> {
    Arc::new(Berkowitz)
}

/// `det(x·I − M)` of a symmetric rational matrix with the default method.
pub fn charpoly(m: &SymmetricRationalMatrix) -> RatPoly {
    charpoly_with(m, &Berkowitz)
}

pub fn charpoly_with(m: &SymmetricRationalMatrix, method: &dyn CharpolyMethod) -> RatPoly {
    let (im, d) = m.to_integer_scaled();
    unscale(&method.charpoly(&im), &d)
}

/// Characteristic polynomial of a general square rational matrix (row-major).
pub fn charpoly_square(order: usize, entries: &[Rational]) -> RatPoly {
    let d = lcm_of_denominators(entries);
    let im = IntMatrix::from_rational_scaled(order, entries, &d);
    unscale(&Berkowitz.charpoly(&im), &d)
}

/// From `χ_{dM}(y)` to `χ_M(x) = d^(-n) χ_{dM}(d·x)`.
fn unscale(scaled: &IntPoly, d: &BigInt) -> RatPoly {
    let n = scaled.degree().unwrap_or(0);
    let d = Rational::from_integer(d.clone());
    let mut denom = Rational::one();
    let mut coeffs = vec![Rational::zero(); n + 1];
    for i in (0..=n).rev() {
        coeffs[i] = Rational::from_integer(scaled.coeffs()[i].clone()) / &denom;
        denom *= &d;
    }
    RatPoly::from_coeffs(coeffs)
}
