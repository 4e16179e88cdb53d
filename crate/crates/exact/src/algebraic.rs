//! Real algebraic numbers as (square-free integer polynomial, isolating interval).

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, Zero};

use crate::charpoly::charpoly_square;
use crate::poly::{IntPoly, RatPoly};
use crate::rational::{int, midpoint, sign, simplest_between, to_f64, Rational};
use crate::sturm::SturmSequence;
use crate::ExactError;

/// A real algebraic number.
///
/// `poly` is square-free and primitive with a positive leading coefficient and
/// has exactly one root in the closed interval `[lo, hi]`. Rational values are
/// always stored as a degree-one polynomial with `lo == hi`; for everything
/// else neither endpoint is a root of `poly`.
#[derive(Clone, Debug)]
pub struct AlgebraicNumber {
    poly: IntPoly,
    lo: Rational,
    hi: Rational,
}

impl AlgebraicNumber {
    pub fn from_rational(r: Rational) -> Self {
        let poly = IntPoly::from_coeffs(vec![-r.numer().clone(), r.denom().clone()]);
        Self {
            poly,
            lo: r.clone(),
            hi: r,
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(int(n))
    }

    /// Checked constructor: the square-free part of `poly` must have exactly one
    /// root in `[lo, hi]`.
    pub fn new(poly: &IntPoly, lo: Rational, hi: Rational) -> Result<Self, ExactError> {
        if poly.degree().unwrap_or(0) == 0 || lo > hi {
            return Err(ExactError::NotIsolating);
        }
        let sf = poly.squarefree();
        let sturm = SturmSequence::new(&sf);
        if sturm.count_closed(&lo, &hi) != 1 {
            return Err(ExactError::NotIsolating);
        }
        Ok(settle(sf, lo, hi))
    }

    pub fn poly(&self) -> &IntPoly {
        &self.poly
    }

    pub fn interval(&self) -> (&Rational, &Rational) {
        (&self.lo, &self.hi)
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        (self.lo == self.hi).then_some(&self.lo)
    }

    pub fn is_rational(&self) -> bool {
        self.lo == self.hi
    }

    /// Degree of the stored defining polynomial.
    pub fn degree(&self) -> usize {
        self.poly.degree().unwrap_or(0)
    }

    fn modulus(&self) -> RatPoly {
        self.poly.to_rat()
    }

    /// Halves the isolating interval once (no-op for rational values).
    fn bisect(&mut self) {
        if self.is_rational() {
            return;
        }
        let mid = midpoint(&self.lo, &self.hi);
        let s_mid = self.poly.sign_at(&mid);
        if s_mid == Sign::NoSign {
            // Only reachable when the defining polynomial has a rational root.
            *self = Self::from_rational(mid);
            return;
        }
        if self.poly.sign_at(&self.lo) == s_mid {
            self.lo = mid;
        } else {
            self.hi = mid;
        }
    }

    /// Same number, interval width at most `width`.
    pub fn refine(&self, width: &Rational) -> Self {
        let mut out = self.clone();
        out.refine_in_place(width);
        out
    }

    pub fn refine_in_place(&mut self, width: &Rational) {
        assert!(width.is_positive(), "refinement width must be positive");
        while self.width() > *width {
            self.bisect();
        }
    }

    /// `f mod poly`, the canonical representative of `f(self)` in ℚ[x]/(poly).
    pub fn reduce(&self, f: &RatPoly) -> RatPoly {
        f.rem(&self.modulus())
    }

    /// Exact sign of `f(self)`.
    pub fn sign_at(&self, f: &RatPoly) -> Sign {
        if let Some(r) = self.as_rational() {
            return sign(&f.eval(r));
        }
        let m = self.modulus();
        let r = f.rem(&m);
        if let Some(c) = r.as_constant() {
            return sign(&c);
        }
        let g = r.gcd(&m);
        if g.degree().unwrap_or(0) > 0 {
            let sturm = SturmSequence::new(&g.to_primitive_int());
            if sturm.count_closed(&self.lo, &self.hi) > 0 {
                return Sign::NoSign;
            }
        }
        let mut a = self.clone();
        loop {
            let (lo, hi) = r.eval_interval(&a.lo, &a.hi);
            if lo.is_positive() {
                return Sign::Plus;
            }
            if hi.is_negative() {
                return Sign::Minus;
            }
            a.bisect();
            if let Some(v) = a.as_rational() {
                return sign(&r.eval(v));
            }
        }
    }

    pub fn sign(&self) -> Sign {
        self.sign_at(&RatPoly::x())
    }

    pub fn is_zero(&self) -> bool {
        self.sign() == Sign::NoSign
    }

    /// `f(self)` if that value is rational.
    ///
    /// The candidates are the rational roots of the characteristic polynomial
    /// of multiplication by `f` in ℚ[x]/(poly); each is confirmed by an exact
    /// zero test.
    pub fn rational_value(&self, f: &RatPoly) -> Option<Rational> {
        if let Some(r) = self.as_rational() {
            return Some(f.eval(r));
        }
        let r = self.reduce(f);
        if let Some(c) = r.as_constant() {
            return Some(c);
        }
        let chi = multiplication_charpoly(&r, &self.modulus());
        sturm_isolate(&chi.to_primitive_int())
            .into_iter()
            .filter_map(|root| root.as_rational().cloned())
            .find(|c| self.sign_at(&(&r - &RatPoly::constant(c.clone()))) == Sign::NoSign)
    }

    /// The algebraic number `f(self)`.
    pub fn image(&self, f: &RatPoly) -> Self {
        if let Some(v) = self.rational_value(f) {
            return Self::from_rational(v);
        }
        let r = self.reduce(f);
        let chi = multiplication_charpoly(&r, &self.modulus());
        let mut candidates: Vec<Self> = sturm_isolate(&chi.to_primitive_int())
            .into_iter()
            .filter(|c| !c.is_rational())
            .collect();
        let mut a = self.clone();
        loop {
            let (lo, hi) = r.eval_interval(&a.lo, &a.hi);
            candidates.retain(|c| c.lo <= hi && lo <= c.hi);
            match candidates.len() {
                0 => unreachable!("image escaped every root of its characteristic polynomial"),
                1 => return candidates.pop().unwrap(),
                _ => {
                    a.bisect();
                    candidates.iter_mut().for_each(Self::bisect);
                }
            }
        }
    }

    /// Restricts the defining polynomial to the factor of `gcd(poly, f)` or
    /// `poly / gcd(poly, f)` that vanishes at this number.
    pub fn narrow(&self, f: &RatPoly) -> Self {
        if self.is_rational() {
            return self.clone();
        }
        let m = self.modulus();
        let g = m.gcd(&self.reduce(f));
        if g.degree().unwrap_or(0) == 0 || g.degree() == m.degree() {
            return self.clone();
        }
        let gi = g.to_primitive_int();
        let keep = if SturmSequence::new(&gi).count_closed(&self.lo, &self.hi) > 0 {
            gi
        } else {
            m.divrem(&g).0.to_primitive_int()
        };
        Self {
            poly: keep,
            lo: self.lo.clone(),
            hi: self.hi.clone(),
        }
    }

    /// `num(self) / den(self)` if it is rational; `None` also when `den(self) = 0`.
    pub fn rational_ratio(&self, num: &RatPoly, den: &RatPoly) -> Option<Rational> {
        if self.sign_at(den) == Sign::NoSign {
            return None;
        }
        let narrowed = self.narrow(den);
        let m = narrowed.modulus();
        let inv = narrowed.reduce(den).inverse_mod(&m)?;
        narrowed.rational_value(&num.mul_mod(&inv, &m))
    }

    /// `a·self + b` for rational `a ≠ 0`.
    pub fn affine(&self, a: &Rational, b: &Rational) -> Self {
        assert!(!a.is_zero(), "affine map must be invertible");
        if let Some(r) = self.as_rational() {
            return Self::from_rational(a * r + b);
        }
        let inv = a.recip();
        let poly = self
            .modulus()
            .compose_linear(&inv, &(-(b * &inv)))
            .to_primitive_int();
        let (x, y) = (a * &self.lo + b, a * &self.hi + b);
        let (lo, hi) = if x <= y { (x, y) } else { (y, x) };
        Self { poly, lo, hi }
    }

    pub fn neg(&self) -> Self {
        self.affine(&int(-1), &Rational::zero())
    }

    /// Exact comparison.
    pub fn cmp_exact(&self, other: &Self) -> Ordering {
        if let (Some(a), Some(b)) = (self.as_rational(), other.as_rational()) {
            return a.cmp(b);
        }
        if self.hi < other.lo {
            return Ordering::Less;
        }
        if other.hi < self.lo {
            return Ordering::Greater;
        }
        let g = self.modulus().gcd(&other.modulus());
        if g.degree().unwrap_or(0) > 0 {
            let lo = (&self.lo).max(&other.lo);
            let hi = (&self.hi).min(&other.hi);
            if SturmSequence::new(&g.to_primitive_int()).count_closed(lo, hi) > 0 {
                return Ordering::Equal;
            }
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        loop {
            a.bisect();
            b.bisect();
            if a.hi < b.lo {
                return Ordering::Less;
            }
            if b.hi < a.lo {
                return Ordering::Greater;
            }
            if let (Some(x), Some(y)) = (a.as_rational(), b.as_rational()) {
                return x.cmp(y);
            }
        }
    }

    pub fn to_f64(&self) -> f64 {
        if let Some(r) = self.as_rational() {
            return to_f64(r);
        }
        let scale = self.lo.abs().max(self.hi.abs()).max(Rational::one());
        let tol = scale * Rational::new(BigInt::one(), BigInt::from(1u64 << 52));
        let a = self.refine(&tol);
        to_f64(&midpoint(&a.lo, &a.hi))
    }
}

impl PartialEq for AlgebraicNumber {
    fn eq(&self, other: &Self) -> bool {
        self.cmp_exact(other) == Ordering::Equal
    }
}

impl Eq for AlgebraicNumber {}

impl PartialOrd for AlgebraicNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AlgebraicNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_exact(other)
    }
}

impl From<Rational> for AlgebraicNumber {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_rational() {
            Some(r) => write!(f, "{r}"),
            None => write!(f, "root of {} in [{}, {}]", self.poly, self.lo, self.hi),
        }
    }
}

/// Characteristic polynomial of multiplication by `t` on ℚ[x]/(m).
/// Its roots are `t(ξ)` for the roots `ξ` of `m`.
pub(crate) fn multiplication_charpoly(t: &RatPoly, m: &RatPoly) -> RatPoly {
    let e = m.degree().expect("modulus must be nonzero");
    let mut entries = vec![Rational::zero(); e * e];
    let mut basis = RatPoly::one();
    for col in 0..e {
        let image = basis.mul_mod(t, m);
        for row in 0..e {
            entries[row * e + col] = image.coeff(row);
        }
        basis = basis.mul_mod(&RatPoly::x(), m);
    }
    charpoly_square(e, &entries)
}

/// Finishes a root isolated in `[lo, hi]` by a square-free `sf`: moves endpoints
/// off roots, detects rational roots, and returns the algebraic number.
fn settle(sf: IntPoly, lo: Rational, hi: Rational) -> AlgebraicNumber {
    if sf.sign_at(&lo) == Sign::NoSign {
        return AlgebraicNumber::from_rational(lo);
    }
    if sf.sign_at(&hi) == Sign::NoSign {
        return AlgebraicNumber::from_rational(hi);
    }
    // A rational root p/q has q | lc, and two distinct such fractions are at
    // least 1/lc² apart; below that width the simplest fraction in the
    // interval is the only possible candidate.
    let lc = Rational::from_integer(sf.lc().expect("nonzero").abs());
    let width = (&lc * &lc).recip();
    let mut a = AlgebraicNumber { poly: sf, lo, hi };
    while a.width() >= width {
        a.bisect();
        if a.is_rational() {
            return a;
        }
    }
    let candidate = simplest_between(&a.lo, &a.hi);
    if a.poly.sign_at(&candidate) == Sign::NoSign {
        return AlgebraicNumber::from_rational(candidate);
    }
    a
}

/// Isolates every distinct real root of `p`, sorted ascending.
///
/// Rational roots come back as degree-one numbers; the irrational ones share
/// the square-free part of `p` with its rational linear factors divided out.
pub fn sturm_isolate(p: &IntPoly) -> Vec<AlgebraicNumber> {
    if p.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let sf = p.squarefree();
    let sturm = SturmSequence::new(&sf);
    let bound = Rational::from_integer(sf.root_bound());
    let mut intervals = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((lo, hi)) = stack.pop() {
        let count = sturm.count_half_open(&lo, &hi);
        match count {
            0 => {}
            1 => intervals.push(separate_endpoints(&sf, &sturm, lo, hi)),
            _ => {
                let mid = midpoint(&lo, &hi);
                stack.push((mid.clone(), hi));
                stack.push((lo, mid));
            }
        }
    }
    let mut roots: Vec<AlgebraicNumber> = intervals
        .into_iter()
        .map(|(lo, hi)| settle(sf.clone(), lo, hi))
        .collect();

    let rational_roots: Vec<Rational> = roots.iter().filter_map(|r| r.as_rational().cloned()).collect();
    if rational_roots.len() < roots.len() && !rational_roots.is_empty() {
        let mut cofactor = sf.to_rat();
        for r in &rational_roots {
            let lin = RatPoly::from_coeffs(vec![-r.clone(), Rational::one()]);
            cofactor = cofactor.divrem(&lin).0;
        }
        let cofactor = cofactor.to_primitive_int();
        for root in roots.iter_mut().filter(|r| !r.is_rational()) {
            root.poly = cofactor.clone();
        }
    }
    roots.sort_by(|a, b| a.lo.cmp(&b.lo));
    // Make consecutive closed intervals disjoint.
    for i in 1..roots.len() {
        while roots[i - 1].hi >= roots[i].lo {
            if roots[i - 1].width() >= roots[i].width() {
                roots[i - 1].bisect();
            } else {
                roots[i].bisect();
            }
        }
    }
    roots
}

/// Shrinks `(lo, hi]` (holding exactly one root) until neither endpoint is a
/// root, or collapses it onto an exact rational root.
fn separate_endpoints(
    sf: &IntPoly,
    sturm: &SturmSequence,
    mut lo: Rational,
    hi: Rational,
) -> (Rational, Rational) {
    if sf.sign_at(&hi) == Sign::NoSign {
        return (hi.clone(), hi);
    }
    let mut hi = hi;
    while sf.sign_at(&lo) == Sign::NoSign {
        let mid = midpoint(&lo, &hi);
        if sf.sign_at(&mid) == Sign::NoSign {
            return (mid.clone(), mid);
        }
        if sturm.count_half_open(&lo, &mid) == 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    (lo, hi)
}

/// Number of distinct real roots of a nonzero polynomial.
pub fn distinct_root_count(p: &RatPoly) -> usize {
    if p.degree().unwrap_or(0) == 0 {
        return 0;
    }
    SturmSequence::new(&p.to_primitive_int().squarefree()).count_all()
}

/// Real roots with multiplicities, sorted descending.
pub fn real_roots_with_multiplicity(p: &RatPoly) -> Vec<(AlgebraicNumber, usize)> {
    let mut out: Vec<(AlgebraicNumber, usize)> = p
        .squarefree_decomposition()
        .into_iter()
        .flat_map(|(factor, mult)| {
            sturm_isolate(&factor.to_primitive_int())
                .into_iter()
                .map(move |root| (root, mult))
        })
        .collect();
    out.sort_by(|a, b| b.0.cmp_exact(&a.0));
    out
}
