use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::rational::{lcm_of_denominators, Rational};
use crate::ExactError;

/// Dense symmetric matrix over ℚ, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricRationalMatrix {
    order: usize,
    entries: Vec<Rational>,
}

impl SymmetricRationalMatrix {
    pub fn new(order: usize, entries: Vec<Rational>) -> Result<Self, ExactError> {
        if entries.len() != order * order {
            return Err(ExactError::Dimension {
                expected: order * order,
                found: entries.len(),
            });
        }
        for i in 0..order {
            for j in i + 1..order {
                if entries[i * order + j] != entries[j * order + i] {
                    return Err(ExactError::NotSymmetric { row: i, col: j });
                }
            }
        }
        Ok(Self { order, entries })
    }

    /// Builds the matrix from the upper triangle of `f` (`i <= j`), mirrored.
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = vec![Rational::zero(); order * order];
        for i in 0..order {
            for j in i..order {
                let v = f(i, j);
                entries[j * order + i] = v.clone();
                entries[i * order + j] = v;
            }
        }
        Self { order, entries }
    }

    pub fn identity(order: usize) -> Self {
        Self::from_fn(order, |i, j| {
            if i == j {
                Rational::from_integer(1.into())
            } else {
                Rational::zero()
            }
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.order + j]
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    pub fn row_sums(&self) -> Vec<Rational> {
        (0..self.order)
            .map(|i| self.row(i).iter().fold(Rational::zero(), |a, b| a + b))
            .collect()
    }

    pub fn principal_submatrix(&self, indices: &[usize]) -> Self {
        Self::from_fn(indices.len(), |a, b| self.get(indices[a], indices[b]).clone())
    }

    /// `self + c·I`.
    pub fn shifted(&self, c: &Rational) -> Self {
        Self::from_fn(self.order, |i, j| {
            if i == j {
                self.get(i, j) + c
            } else {
                self.get(i, j).clone()
            }
        })
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        Self::from_fn(self.order, |i, j| self.get(i, j) * c)
    }

    /// `(d·self, d)` with `d` the least common denominator of all entries.
    pub fn to_integer_scaled(&self) -> (IntMatrix, BigInt) {
        let d = lcm_of_denominators(&self.entries);
        (IntMatrix::from_rational_scaled(self.order, &self.entries, &d), d)
    }

    pub fn max_abs_entry(&self) -> Rational {
        self.entries
            .iter()
            .map(Signed::abs)
            .max()
            .unwrap_or_else(Rational::zero)
    }
}

/// Dense square integer matrix (not necessarily symmetric), row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    order: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(order: usize, entries: Vec<BigInt>) -> Result<Self, ExactError> {
        if entries.len() != order * order {
            return Err(ExactError::Dimension {
                expected: order * order,
                found: entries.len(),
            });
        }
        Ok(Self { order, entries })
    }

    pub fn from_i64(order: usize, entries: &[i64]) -> Result<Self, ExactError> {
        Self::new(order, entries.iter().map(|&e| BigInt::from(e)).collect())
    }

    pub(crate) fn from_rational_scaled(order: usize, entries: &[Rational], d: &BigInt) -> Self {
        let scale = Rational::from_integer(d.clone());
        let entries = entries.iter().map(|e| (e * &scale).to_integer()).collect();
        Self { order, entries }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.order + j]
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }
}
