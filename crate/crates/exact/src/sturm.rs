//! Sturm sequences and real-root counting for square-free integer polynomials.

use num_bigint::Sign;

use crate::poly::IntPoly;
use crate::rational::Rational;

#[derive(Clone, Debug)]
pub struct SturmSequence {
    polys: Vec<IntPoly>,
}

impl SturmSequence {
    /// Builds `p, p', -rem(p, p'), ...`. Each term is rescaled by a positive
    /// constant to stay primitive over ℤ, which leaves sign variations intact.
    pub fn new(p: &IntPoly) -> Self {
        let mut polys = vec![p.clone()];
        if p.degree().unwrap_or(0) == 0 {
            return Self { polys };
        }
        polys.push(p.derivative().to_rat().to_int_positive_multiple());
        loop {
            let n = polys.len();
            let r = polys[n - 2].to_rat().rem(&polys[n - 1].to_rat());
            if r.is_zero() {
                break;
            }
            polys.push((-&r).to_int_positive_multiple());
        }
        Self { polys }
    }

    fn variations(signs: impl Iterator<Item = Sign>) -> usize {
        let mut last = Sign::NoSign;
        let mut count = 0;
        for s in signs.filter(|s| *s != Sign::NoSign) {
            if last != Sign::NoSign && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    pub fn variations_at(&self, x: &Rational) -> usize {
        Self::variations(self.polys.iter().map(|p| p.sign_at(x)))
    }

    pub fn variations_at_infinity(&self, positive: bool) -> usize {
        Self::variations(self.polys.iter().map(|p| p.sign_at_infinity(positive)))
    }

    /// Number of distinct real roots in the half-open interval `(lo, hi]`.
    pub fn count_half_open(&self, lo: &Rational, hi: &Rational) -> usize {
        self.variations_at(lo).saturating_sub(self.variations_at(hi))
    }

    /// Number of distinct real roots in the closed interval `[lo, hi]`.
    pub fn count_closed(&self, lo: &Rational, hi: &Rational) -> usize {
        let at_lo = usize::from(self.polys[0].sign_at(lo) == Sign::NoSign);
        if lo == hi {
            return at_lo;
        }
        self.count_half_open(lo, hi) + at_lo
    }

    pub fn count_all(&self) -> usize {
        self.variations_at_infinity(false)
            .saturating_sub(self.variations_at_infinity(true))
    }
}
