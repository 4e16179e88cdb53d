//! Sylvester inertia by symmetric congruence, and exact PSD certificates.

use num_traits::{One, Signed, Zero};

use crate::matrix::SymmetricRationalMatrix;
use crate::rational::Rational;
use crate::ExactError;

/// Counts of positive, zero and negative eigenvalues.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Inertia {
    pub n_pos: usize,
    pub n_zero: usize,
    pub n_neg: usize,
}

impl Inertia {
    pub fn order(&self) -> usize {
        self.n_pos + self.n_zero + self.n_neg
    }
}

/// Inertia of a symmetric rational matrix.
///
/// Pivots on the largest-magnitude diagonal entry of the remaining block. When
/// that block has a zero diagonal, a nonzero off-diagonal pair `(i, j)` forms a
/// hyperbolic 2×2 pivot contributing one positive and one negative eigenvalue.
pub fn inertia(m: &SymmetricRationalMatrix) -> Inertia {
    let n = m.order();
    let mut a: Vec<Rational> = m.entries().to_vec();
    let mut active: Vec<usize> = (0..n).collect();
    let mut out = Inertia::default();
    let at = |i: usize, j: usize| i * n + j;

    while !active.is_empty() {
        let pivot = active
            .iter()
            .copied()
            .filter(|&i| !a[at(i, i)].is_zero())
            .max_by(|&i, &j| a[at(i, i)].abs().cmp(&a[at(j, j)].abs()));
        if let Some(p) = pivot {
            let d = a[at(p, p)].clone();
            if d.is_positive() {
                out.n_pos += 1;
            } else {
                out.n_neg += 1;
            }
            active.retain(|&i| i != p);
            let col: Vec<Rational> = active.iter().map(|&i| &a[at(i, p)] / &d).collect();
            // Update the upper triangle only, then mirror.
            for (x, &i) in active.iter().enumerate() {
                if col[x].is_zero() {
                    continue;
                }
                for &j in &active[x..] {
                    let v = &col[x] * &a[at(p, j)];
                    a[at(i, j)] -= v;
                    if i != j {
                        a[at(j, i)] = a[at(i, j)].clone();
                    }
                }
            }
            continue;
        }
        let pair = active.iter().enumerate().find_map(|(x, &i)| {
            active[x + 1..]
                .iter()
                .find(|&&j| !a[at(i, j)].is_zero())
                .map(|&j| (i, j))
        });
        let Some((p, q)) = pair else {
            out.n_zero += active.len();
            break;
        };
        out.n_pos += 1;
        out.n_neg += 1;
        let b = a[at(p, q)].clone();
        active.retain(|&i| i != p && i != q);
        // S = C − B·P⁻¹·Bᵀ with P = [[0, b], [b, 0]], P⁻¹ = [[0, 1/b], [1/b, 0]].
        let rows: Vec<(Rational, Rational)> = active
            .iter()
            .map(|&i| (a[at(i, p)].clone(), a[at(i, q)].clone()))
            .collect();
        for (x, &i) in active.iter().enumerate() {
            for (y, &j) in active.iter().enumerate().skip(x) {
                let v = (&rows[x].0 * &rows[y].1 + &rows[x].1 * &rows[y].0) / &b;
                a[at(i, j)] -= v;
                if i != j {
                    a[at(j, i)] = a[at(i, j)].clone();
                }
            }
        }
    }
    out
}

/// `M = L·diag(d)·Lᵀ` with `L` unit lower triangular and every `d_i ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LdlCertificate {
    order: usize,
    lower: Vec<Rational>,
    diagonal: Vec<Rational>,
}

impl LdlCertificate {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn lower(&self, i: usize, j: usize) -> &Rational {
        &self.lower[i * self.order + j]
    }

    pub fn diagonal(&self) -> &[Rational] {
        &self.diagonal
    }

    pub fn reconstruct(&self) -> SymmetricRationalMatrix {
        let n = self.order;
        SymmetricRationalMatrix::from_fn(n, |i, j| {
            (0..=i.min(j)).fold(Rational::zero(), |acc, k| {
                acc + self.lower(i, k) * &self.diagonal[k] * self.lower(j, k)
            })
        })
    }

    /// Re-checks the factorisation against `m` and the sign of every pivot.
    pub fn certifies(&self, m: &SymmetricRationalMatrix) -> bool {
        let n = self.order;
        let unit_lower = (0..n).all(|i| {
            self.lower(i, i).is_one() && (i + 1..n).all(|j| self.lower(i, j).is_zero())
        });
        unit_lower
            && self.diagonal.iter().all(|d| !d.is_negative())
            && &self.reconstruct() == m
    }
}

/// Exact positive-semidefiniteness certificate by unpivoted LDLᵀ.
///
/// For a PSD matrix a zero pivot forces its whole remaining column to vanish,
/// so elimination never needs pivoting; any violation proves `m` is not PSD.
pub fn psd_certificate(m: &SymmetricRationalMatrix) -> Result<LdlCertificate, ExactError> {
    let n = m.order();
    let mut s: Vec<Rational> = m.entries().to_vec();
    let mut lower = vec![Rational::zero(); n * n];
    let mut diagonal = Vec::with_capacity(n);
    for k in 0..n {
        lower[k * n + k] = Rational::one();
        let d = s[k * n + k].clone();
        if d.is_negative() {
            return Err(ExactError::NotPositiveSemidefinite { index: k });
        }
        if d.is_zero() {
            if (k + 1..n).any(|i| !s[i * n + k].is_zero()) {
                return Err(ExactError::NotPositiveSemidefinite { index: k });
            }
            diagonal.push(d);
            continue;
        }
        for i in k + 1..n {
            lower[i * n + k] = &s[i * n + k] / &d;
        }
        for i in k + 1..n {
            if lower[i * n + k].is_zero() {
                continue;
            }
            for j in k + 1..n {
                let v = &lower[i * n + k] * &s[k * n + j];
                s[i * n + j] -= v;
            }
        }
        diagonal.push(d);
    }
    Ok(LdlCertificate {
        order: n,
        lower,
        diagonal,
    })
}
