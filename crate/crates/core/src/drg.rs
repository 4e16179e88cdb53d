//! Intersection arrays, classical parameters, the spectrum of the graph and
//! standard sequences.

use std::fmt;
use std::str::FromStr;

use drgq_exact::{format_rational, parse_rational, sturm_isolate, AlgebraicNumber, RatPoly, Rational, Sign};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// `{b_0, …, b_{D−1}; c_1, …, c_D}` together with the derived `k_i` and `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntersectionArray {
    b: Vec<Rational>,
    c: Vec<Rational>,
    k: Vec<Rational>,
    n: Rational,
}

impl IntersectionArray {
    /// Validates positivity, `c_1 = 1`, `a_i ≥ 0`, monotonicity and integral `k_i`.
    ///
    /// Diameter 1 is accepted so that complete graphs `{n−1; 1}` can be represented.
    pub fn new(b: Vec<Rational>, c: Vec<Rational>) -> Result<Self> {
        let d = b.len();
        if d == 0 {
            return Err(Error::InvalidArray("diameter must be at least 1".into()));
        }
        if c.len() != d {
            return Err(Error::InvalidArray(format!(
                "{} values of b but {} values of c",
                d,
                c.len()
            )));
        }
        if !c[0].is_one() {
            return Err(Error::InvalidArray(format!("c_1 = {} (must be 1)", c[0])));
        }
        for (i, v) in b.iter().enumerate() {
            if !v.is_positive() {
                return Err(Error::InvalidArray(format!("b_{i} = {v} is not positive")));
            }
        }
        for (i, v) in c.iter().enumerate() {
            if !v.is_positive() {
                return Err(Error::InvalidArray(format!("c_{} = {v} is not positive", i + 1)));
            }
        }
        for i in 1..d {
            if b[i] > b[i - 1] {
                return Err(Error::InvalidArray(format!("b_{i} > b_{}", i - 1)));
            }
            if c[i] < c[i - 1] {
                return Err(Error::InvalidArray(format!("c_{} < c_{i}", i + 1)));
            }
        }
        let mut out = Self {
            b,
            c,
            k: Vec::new(),
            n: Rational::zero(),
        };
        for i in 0..=d {
            let a = out.a(i);
            if a.is_negative() {
                return Err(Error::InvalidArray(format!("a_{i} = {a} is negative")));
            }
        }
        let mut k = vec![Rational::one()];
        for i in 0..d {
            let next = &k[i] * &out.b[i] / &out.c[i];
            if !next.is_integer() {
                return Err(Error::NonIntegralCount {
                    index: i + 1,
                    value: format_rational(&next),
                });
            }
            k.push(next);
        }
        out.n = k.iter().sum();
        out.k = k;
        Ok(out)
    }

    pub fn from_i64(b: &[i64], c: &[i64]) -> Result<Self> {
        Self::new(
            b.iter().map(|&v| Rational::from_integer(v.into())).collect(),
            c.iter().map(|&v| Rational::from_integer(v.into())).collect(),
        )
    }

    /// Parses `"b0,b1,…;c1,c2,…"`; surrounding braces are ignored.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('{').trim_end_matches('}');
        let (bs, cs) = t
            .split_once(';')
            .ok_or_else(|| Error::Syntax(format!("expected \"b0,…;c1,…\", found {s:?}")))?;
        let list = |part: &str| -> Result<Vec<Rational>> {
            part.split(',').map(|x| parse_rational(x).map_err(Error::from)).collect()
        };
        Self::new(list(bs)?, list(cs)?)
    }

    pub fn diameter(&self) -> usize {
        self.b.len()
    }

    pub fn valency(&self) -> &Rational {
        &self.b[0]
    }

    /// `b_i` for `0 ≤ i ≤ D`, with `b_D = 0`.
    pub fn b(&self, i: usize) -> Rational {
        self.b.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// `c_i` for `0 ≤ i ≤ D`, with `c_0 = 0`.
    pub fn c(&self, i: usize) -> Rational {
        if i == 0 {
            Rational::zero()
        } else {
            self.c[i - 1].clone()
        }
    }

    /// `a_i = k − b_i − c_i`.
    pub fn a(&self, i: usize) -> Rational {
        &self.b[0] - self.b(i) - self.c(i)
    }

    pub fn b_values(&self) -> &[Rational] {
        &self.b
    }

    pub fn c_values(&self) -> &[Rational] {
        &self.c
    }

    /// `k_i`, the number of vertices at distance `i` from a fixed vertex.
    pub fn k(&self, i: usize) -> &Rational {
        &self.k[i]
    }

    pub fn k_values(&self) -> &[Rational] {
        &self.k
    }

    /// Number of vertices.
    pub fn order(&self) -> &Rational {
        &self.n
    }

    /// `(k_0, …, k_D)` and `n`.
    pub fn subconstituents(&self) -> (Vec<Rational>, Rational) {
        (self.k.clone(), self.n.clone())
    }

    /// The `(D+1) × (D+1)` tridiagonal matrix with rows `(c_i, a_i, b_i)`, row-major.
    pub fn intersection_matrix(&self) -> Vec<Rational> {
        let m = self.diameter() + 1;
        let mut out = vec![Rational::zero(); m * m];
        for i in 0..m {
            out[i * m + i] = self.a(i);
            if i > 0 {
                out[i * m + i - 1] = self.c(i);
            }
            if i + 1 < m {
                out[i * m + i + 1] = self.b(i);
            }
        }
        out
    }

    /// Characteristic polynomial of the intersection matrix, by the three-term
    /// recurrence `p_{i+1} = (x − a_i)p_i − b_{i−1}c_i p_{i−1}`.
    pub fn intersection_charpoly(&self) -> RatPoly {
        let mut prev = RatPoly::one();
        let mut cur = &RatPoly::x() - &RatPoly::constant(self.a(0));
        for i in 1..=self.diameter() {
            let lin = &RatPoly::x() - &RatPoly::constant(self.a(i));
            let next = &(&lin * &cur) - &prev.scale(&(self.b(i - 1) * self.c(i)));
            prev = cur;
            cur = next;
        }
        cur
    }

    /// `u_0(x), …, u_D(x)`: the standard sequence with θ left as the indeterminate.
    pub fn standard_polynomials(&self) -> Vec<RatPoly> {
        let d = self.diameter();
        let mut u = vec![RatPoly::one(), RatPoly::x().scale(&self.valency().recip())];
        for i in 1..d {
            let lin = &RatPoly::x() - &RatPoly::constant(self.a(i));
            let num = &(&lin * &u[i]) - &u[i - 1].scale(&self.c(i));
            u.push(num.scale(&self.b(i).recip()));
        }
        u
    }

    /// `Σ_i k_i u_i(x)²`, whose value at an eigenvalue θ is `n / mult(θ)`.
    pub fn norm_polynomial(&self) -> RatPoly {
        self.standard_polynomials()
            .iter()
            .zip(&self.k)
            .fold(RatPoly::zero(), |acc, (u, k)| &acc + &(u * u).scale(k))
    }

    pub fn is_eigenvalue(&self, theta: &AlgebraicNumber) -> bool {
        theta.sign_at(&self.intersection_charpoly()) == Sign::NoSign
    }

    /// Eigenvalues of the graph with multiplicities, descending.
    pub fn spectrum(&self) -> Result<SpectrumOfGamma> {
        let p = self.intersection_charpoly();
        let mut thetas = sturm_isolate(&p.to_primitive_int());
        if thetas.len() != self.diameter() + 1 {
            return Err(Error::InvalidArray(format!(
                "intersection matrix has {} distinct real eigenvalues, expected {}",
                thetas.len(),
                self.diameter() + 1
            )));
        }
        thetas.reverse();
        if thetas[0].as_rational() != Some(self.valency()) {
            return Err(Error::InvalidArray("largest eigenvalue is not the valency".into()));
        }
        let entries = thetas
            .into_iter()
            .map(|t| {
                let m = self.multiplicity(&t)?;
                Ok((t, m))
            })
            .collect::<Result<Vec<_>>>()?;
        let spec = SpectrumOfGamma { entries };
        self.check_trace_identities(&spec, &p)?;
        Ok(spec)
    }

    /// `mult(θ) = n / Σ k_i u_i(θ)²`.
    pub fn multiplicity(&self, theta: &AlgebraicNumber) -> Result<u64> {
        if !self.is_eigenvalue(theta) {
            return Err(Error::NotAnEigenvalue);
        }
        let bad = || Error::NonIntegralMultiplicity {
            theta: theta.to_string(),
        };
        let s = theta.rational_value(&self.norm_polynomial()).ok_or_else(bad)?;
        let m = &self.n / s;
        if !m.is_integer() || !m.is_positive() {
            return Err(bad());
        }
        m.to_integer().to_u64().ok_or_else(bad)
    }

    /// Checks the per-root multiplicities against the weight polynomial
    /// `w = n·(Σ k_i u_i²)⁻¹ mod P`, and `Σ mult = n`, `Σ mult·θ = 0` through
    /// traces in `ℚ[x]/(P)`.
    fn check_trace_identities(&self, spec: &SpectrumOfGamma, p: &RatPoly) -> Result<()> {
        let w = self.weight_polynomial(p);
        for (theta, m) in &spec.entries {
            let diff = &w - &RatPoly::constant(Rational::from_integer((*m).into()));
            if theta.sign_at(&diff) != Sign::NoSign {
                return Err(Error::TraceViolation(format!(
                    "weight polynomial disagrees with multiplicity {m} at {theta}"
                )));
            }
        }
        let total = trace(&w, p);
        if total != self.n || spec.total_multiplicity() != self.n {
            return Err(Error::TraceViolation(format!("multiplicities sum to {total}, n = {}", self.n)));
        }
        let tr = trace(&w.mul_mod(&RatPoly::x(), p), p);
        if !tr.is_zero() {
            return Err(Error::TraceViolation(format!("sum of mult·theta is {tr}")));
        }
        Ok(())
    }

    /// `w(x)` with `w(θ_j) = mult(θ_j)` at every root of the square-free `p`.
    pub fn weight_polynomial(&self, p: &RatPoly) -> RatPoly {
        let s = self.norm_polynomial().rem(p);
        let inv = s
            .inverse_mod(p)
            .expect("norm polynomial is positive at every real root");
        inv.scale(&self.n).rem(p)
    }

    /// `Σ_j mult(θ_j)·f(θ_j)` over the whole spectrum, without isolating roots.
    pub fn spectral_sum(&self, f: &RatPoly) -> Rational {
        let p = self.intersection_charpoly();
        let w = self.weight_polynomial(&p);
        trace(&w.mul_mod(&f.rem(&p), &p), &p)
    }

    pub fn standard_sequence(&self, theta: &AlgebraicNumber) -> StandardSequence {
        StandardSequence {
            theta: theta.clone(),
            entries: self.standard_polynomials().iter().map(|u| theta.reduce(u)).collect(),
        }
    }
}

impl fmt::Display for IntersectionArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[Rational]| v.iter().map(format_rational).collect::<Vec<_>>().join(",");
        write!(f, "{};{}", join(&self.b), join(&self.c))
    }
}

impl FromStr for IntersectionArray {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

/// `Σ_j g(θ_j)` over the roots of the square-free polynomial `p`, from its
/// Newton power sums.
pub fn trace(g: &RatPoly, p: &RatPoly) -> Rational {
    let p = p.monic();
    let n = p.degree().unwrap_or(0);
    let coeff = |i: usize| p.coeff(i);
    let mut s: Vec<Rational> = vec![Rational::from_integer(n.into())];
    for m in 1..n {
        let mut acc = Rational::from_integer(m.into()) * coeff(n - m);
        for i in 1..m {
            acc += coeff(n - i) * &s[m - i];
        }
        s.push(-acc);
    }
    let g = g.rem(&p);
    g.coeffs().iter().zip(&s).map(|(c, s)| c * s).sum()
}

/// Eigenvalues `θ_0 = k > θ_1 > ⋯ > θ_D` with multiplicities.
#[derive(Clone, Debug)]
pub struct SpectrumOfGamma {
    entries: Vec<(AlgebraicNumber, u64)>,
}

impl SpectrumOfGamma {
    pub fn entries(&self) -> &[(AlgebraicNumber, u64)] {
        &self.entries
    }

    pub fn thetas(&self) -> impl Iterator<Item = &AlgebraicNumber> {
        self.entries.iter().map(|(t, _)| t)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total_multiplicity(&self) -> Rational {
        Rational::from_integer(self.entries.iter().map(|(_, m)| *m).sum::<u64>().into())
    }

    /// Index of `theta` in the descending order, if it is an eigenvalue.
    pub fn position(&self, theta: &AlgebraicNumber) -> Option<usize> {
        self.entries.iter().position(|(t, _)| t == theta)
    }
}

/// `(u_0, …, u_D)` for one θ, each entry a polynomial in θ reduced modulo its
/// defining polynomial.
#[derive(Clone, Debug)]
pub struct StandardSequence {
    theta: AlgebraicNumber,
    entries: Vec<RatPoly>,
}

impl StandardSequence {
    pub fn theta(&self) -> &AlgebraicNumber {
        &self.theta
    }

    pub fn entries(&self) -> &[RatPoly] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `u_i` as an algebraic number.
    pub fn value(&self, i: usize) -> AlgebraicNumber {
        self.theta.image(&self.entries[i])
    }

    /// `u_i` when it is rational.
    pub fn rational(&self, i: usize) -> Option<Rational> {
        self.theta.rational_value(&self.entries[i])
    }

    /// `c_i u_{i−1} + a_i u_i + b_i u_{i+1} − θ u_i`, reduced; for `i = D` the
    /// `b_D u_{D+1}` term is absent and the residual vanishes iff θ is an eigenvalue.
    pub fn residual(&self, ia: &IntersectionArray, i: usize) -> RatPoly {
        let u = &self.entries;
        let mut r = &u[i].scale(&ia.a(i)) - &self.theta.reduce(&(&RatPoly::x() * &u[i]));
        if i > 0 {
            r = &r + &u[i - 1].scale(&ia.c(i));
        }
        if i + 1 < u.len() {
            r = &r + &u[i + 1].scale(&ia.b(i));
        }
        self.theta.reduce(&r)
    }
}

/// `[j 1]_b = 1 + b + ⋯ + b^{j−1}`, zero for `j = 0`.
pub fn q_int(j: usize, b: &Rational) -> Rational {
    let mut acc = Rational::zero();
    let mut pow = Rational::one();
    for _ in 0..j {
        acc += &pow;
        pow *= b;
    }
    acc
}

/// `(D, b, α, β)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ClassicalParameters {
    d: usize,
    b: Rational,
    alpha: Rational,
    beta: Rational,
}

impl ClassicalParameters {
    /// For `D ≥ 3` the base `b` must be an integer other than `0` and `−1`.
    /// Diameter 2 accepts any rational `b`; see [`Self::outside_integrality_lemma`].
    pub fn new(d: usize, b: Rational, alpha: Rational, beta: Rational) -> Result<Self> {
        if d < 2 {
            return Err(Error::InvalidClassicalParameters(format!("D = {d} (must be at least 2)")));
        }
        if d >= 3 && (!b.is_integer() || b.is_zero() || b == -Rational::one()) {
            return Err(Error::InvalidClassicalParameters(format!(
                "b = {b} (must be an integer other than 0 and -1)"
            )));
        }
        Ok(Self { d, b, alpha, beta })
    }

    /// Parses `"D,b,alpha,beta"`.
    pub fn parse(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let [d, b, alpha, beta] = parts[..] else {
            return Err(Error::Syntax(format!("expected \"D,b,alpha,beta\", found {s:?}")));
        };
        let d: usize = d
            .parse()
            .map_err(|_| Error::Syntax(format!("diameter {d:?} is not a non-negative integer")))?;
        Self::new(d, parse_rational(b)?, parse_rational(alpha)?, parse_rational(beta)?)
    }

    pub fn diameter(&self) -> usize {
        self.d
    }

    pub fn base(&self) -> &Rational {
        &self.b
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    pub fn beta(&self) -> &Rational {
        &self.beta
    }

    /// True for diameter 2 with a base that is not an integer other than 0, −1.
    pub fn outside_integrality_lemma(&self) -> bool {
        self.d == 2 && (!self.b.is_integer() || self.b.is_zero() || self.b == -Rational::one())
    }

    /// `b_i = ([D 1] − [i 1])(β − α[i 1])` and `c_i = [i 1](1 + α[i−1 1])`, unvalidated.
    pub fn raw_array(&self) -> (Vec<Rational>, Vec<Rational>) {
        let big = q_int(self.d, &self.b);
        let b = (0..self.d)
            .map(|i| {
                let qi = q_int(i, &self.b);
                (&big - &qi) * (&self.beta - &self.alpha * &qi)
            })
            .collect();
        let c = (1..=self.d)
            .map(|i| q_int(i, &self.b) * (Rational::one() + &self.alpha * q_int(i - 1, &self.b)))
            .collect();
        (b, c)
    }

    pub fn to_array(&self) -> Result<IntersectionArray> {
        let (b, c) = self.raw_array();
        IntersectionArray::new(b, c).map_err(|e| Error::InvalidClassicalParameters(e.to_string()))
    }
}

impl fmt::Display for ClassicalParameters {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.d, self.b, self.alpha, self.beta)
    }
}

impl FromStr for ClassicalParameters {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use drgq_exact::{int, rat};

    fn johnson63() -> IntersectionArray {
        IntersectionArray::parse("9,4,1;1,4,9").unwrap()
    }

    fn icosahedron() -> IntersectionArray {
        IntersectionArray::parse("5,2,1;1,2,5").unwrap()
    }

    #[test]
    fn q_integers() {
        assert_eq!(q_int(0, &rat(-7, 3)), int(0));
        assert_eq!(q_int(4, &int(1)), int(4));
        assert_eq!(q_int(3, &int(2)), int(7));
    }

    #[test]
    fn subconstituent_counts() {
        let (k, n) = johnson63().subconstituents();
        assert_eq!(k, vec![int(1), int(9), int(9), int(1)]);
        assert_eq!(n, int(20));
        let (k, n) = icosahedron().subconstituents();
        assert_eq!(k, vec![int(1), int(5), int(5), int(1)]);
        assert_eq!(n, int(12));
        let (k, n) = IntersectionArray::parse("2,1,1;1,1,2").unwrap().subconstituents();
        assert_eq!(k, vec![int(1), int(2), int(2), int(1)]);
        assert_eq!(n, int(6));
    }

    #[test]
    fn validation_errors() {
        assert!(matches!(IntersectionArray::parse("1,1;1,1"), Err(Error::InvalidArray(_))));
        assert!(matches!(IntersectionArray::parse("3,2;2,3"), Err(Error::InvalidArray(_))));
        assert!(matches!(
            IntersectionArray::parse("5,2;1,3"),
            Err(Error::NonIntegralCount { index: 2, .. })
        ));
        assert!(matches!(IntersectionArray::parse("3,2"), Err(Error::Syntax(_))));
        assert!(matches!(IntersectionArray::parse("3,x;1,2"), Err(Error::Parse(_))));
    }

    #[test]
    fn display_round_trip() {
        let ia = IntersectionArray::parse("{9, 4, 1; 1, 4, 9}").unwrap();
        assert_eq!(ia.to_string(), "9,4,1;1,4,9");
        assert_eq!(ia.to_string().parse::<IntersectionArray>().unwrap(), ia);
    }

    #[test]
    fn johnson_spectrum() {
        let spec = johnson63().spectrum().unwrap();
        let got: Vec<_> = spec
            .entries()
            .iter()
            .map(|(t, m)| (t.as_rational().cloned().unwrap(), *m))
            .collect();
        assert_eq!(got, vec![(int(9), 1), (int(3), 5), (int(-1), 9), (int(-3), 5)]);
    }

    #[test]
    fn icosahedron_spectrum() {
        let spec = icosahedron().spectrum().unwrap();
        let e = spec.entries();
        assert_eq!(e.len(), 4);
        assert_eq!(e[0].0.as_rational(), Some(&int(5)));
        assert_eq!(e[0].1, 1);
        assert_eq!(e[1].0.sign_at(&RatPoly::from_i64(&[-5, 0, 1])), Sign::NoSign);
        assert_eq!(e[1].0.sign(), Sign::Plus);
        assert_eq!(e[1].1, 3);
        assert_eq!(e[2].0.as_rational(), Some(&int(-1)));
        assert_eq!(e[2].1, 5);
        assert_eq!(e[3].0, e[1].0.neg());
        assert_eq!(e[3].1, 3);
    }

    #[test]
    fn standard_sequences() {
        let ia = johnson63();
        let s = ia.standard_sequence(&AlgebraicNumber::from_integer(3));
        let got: Vec<_> = (0..4).map(|i| s.rational(i).unwrap()).collect();
        assert_eq!(got, vec![int(1), rat(1, 3), rat(-1, 3), int(-1)]);
        for i in 0..=3 {
            assert!(s.residual(&ia, i).is_zero());
        }

        let k = ia.standard_sequence(&AlgebraicNumber::from_integer(9));
        assert!((0..4).all(|i| k.rational(i) == Some(int(1))));

        let ico = icosahedron();
        let s = ico.standard_sequence(&AlgebraicNumber::from_integer(-1));
        let got: Vec<_> = (0..4).map(|i| s.rational(i).unwrap()).collect();
        assert_eq!(got, vec![int(1), rat(-1, 5), rat(-1, 5), int(1)]);
    }

    #[test]
    fn multiplicities() {
        assert_eq!(johnson63().multiplicity(&AlgebraicNumber::from_integer(3)), Ok(5));
        assert_eq!(johnson63().multiplicity(&AlgebraicNumber::from_integer(9)), Ok(1));
        assert_eq!(icosahedron().multiplicity(&AlgebraicNumber::from_integer(-1)), Ok(5));
        assert_eq!(
            johnson63().multiplicity(&AlgebraicNumber::from_integer(2)),
            Err(Error::NotAnEigenvalue)
        );
    }

    #[test]
    fn infeasible_multiplicity() {
        // srg(17,4,0,1): eigenvalues (−1 ± √13)/2 would need non-integral multiplicities
        let ia = IntersectionArray::parse("4,3;1,1").unwrap();
        assert!(matches!(ia.spectrum(), Err(Error::NonIntegralMultiplicity { .. })));
    }

    #[test]
    fn classical_conversion() {
        let p = ClassicalParameters::parse("3,1,1,3").unwrap();
        assert_eq!(p.to_array().unwrap(), johnson63());
        let p = ClassicalParameters::parse("3,1,0,1").unwrap();
        assert_eq!(p.to_array().unwrap().to_string(), "3,2,1;1,2,3");
        assert!(matches!(
            ClassicalParameters::parse("3,1/2,1,3"),
            Err(Error::InvalidClassicalParameters(_))
        ));
        assert!(matches!(
            ClassicalParameters::parse("3,-1,1,3"),
            Err(Error::InvalidClassicalParameters(_))
        ));
        let p = ClassicalParameters::parse("2,1/2,0,4").unwrap();
        assert!(p.outside_integrality_lemma());
        assert!(matches!(
            ClassicalParameters::parse("3,1,1,1").unwrap().to_array(),
            Err(Error::InvalidClassicalParameters(_))
        ));
    }

    #[test]
    fn trace_of_power_sums() {
        // roots 1, 2, 3
        let p = RatPoly::from_i64(&[-6, 11, -6, 1]);
        assert_eq!(trace(&RatPoly::one(), &p), int(3));
        assert_eq!(trace(&RatPoly::x(), &p), int(6));
        assert_eq!(trace(&RatPoly::from_i64(&[0, 0, 1]), &p), int(14));
        assert_eq!(trace(&RatPoly::from_i64(&[0, 0, 0, 0, 1]), &p), int(98));
    }
}
