//! Brute-force recomputation on explicit graphs: q-distance matrices,
//! distance-regularity, exact spectra, negative-type witnesses, local graphs
//! and clique extensions.

use std::cmp::Ordering;

use drgq_exact::{
    charpoly::default_method, eigenvalues, inertia, psd_certificate, AlgebraicNumber, CharpolyMethod,
    LdlCertificate, Rational, SymmetricRationalMatrix,
};
use num_traits::{One, Signed, Zero};

use crate::drg::IntersectionArray;
use crate::graph::{DistanceMatrix, Graph};
use crate::qdistance::q_coefficients;
use crate::{Error, Result};

pub const DEFAULT_ORDER_LIMIT: usize = 64;

/// Dense-matrix order cap, from `DRGQ_ORDER_LIMIT` when set.
pub fn order_limit() -> usize {
    std::env::var("DRGQ_ORDER_LIMIT")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_ORDER_LIMIT)
}

/// Entry `(x, y)` is `α_{d(x,y)}`.
pub fn generalized_distance_matrix(dm: &DistanceMatrix, alpha: &[Rational]) -> Result<SymmetricRationalMatrix> {
    if alpha.len() <= dm.diameter() {
        return Err(Error::CoefficientLength {
            expected: dm.diameter() + 1,
            found: alpha.len(),
        });
    }
    Ok(SymmetricRationalMatrix::from_fn(dm.order(), |x, y| {
        alpha[dm.get(x, y) as usize].clone()
    }))
}

/// Entry `(x, y)` is `1 + 1/q + ⋯ + 1/q^{d(x,y)−1}`, zero on the diagonal.
pub fn q_distance_matrix(dm: &DistanceMatrix, q: &Rational) -> Result<SymmetricRationalMatrix> {
    let sigma = q_coefficients(q, dm.diameter())?;
    generalized_distance_matrix(dm, sigma.sigma())
}

/// The intersection array of `g` if every pair `(x, y)` at distance `i` has the
/// same counts of neighbours of `x` at distance `i − 1`, `i`, `i + 1` from `y`.
pub fn verify_distance_regular(g: &Graph) -> Option<IntersectionArray> {
    let dm = g.distances().ok()?;
    let d = dm.diameter();
    if d == 0 {
        return None;
    }
    let mut table: Vec<Option<[u64; 3]>> = vec![None; d + 1];
    for x in 0..g.order() {
        for y in 0..g.order() {
            let i = dm.get(x, y);
            let mut counts = [0u64; 3];
            for &z in g.neighbors(x) {
                let j = dm.get(z, y);
                counts[(j + 1 - i) as usize] += 1;
            }
            match &table[i as usize] {
                None => table[i as usize] = Some(counts),
                Some(seen) if *seen != counts => return None,
                Some(_) => {}
            }
        }
    }
    let rows: Vec<[u64; 3]> = table.into_iter().collect::<Option<_>>()?;
    let b: Vec<i64> = (0..d).map(|i| rows[i][2] as i64).collect();
    let c: Vec<i64> = (1..=d).map(|i| rows[i][0] as i64).collect();
    IntersectionArray::from_i64(&b, &c).ok()
}

pub fn explicit_spectrum(m: &SymmetricRationalMatrix) -> Result<Vec<(AlgebraicNumber, usize)>> {
    explicit_spectrum_with(m, default_method().as_ref(), order_limit())
}

/// Exact eigenvalues with multiplicities, descending.
pub fn explicit_spectrum_with(
    m: &SymmetricRationalMatrix,
    method: &dyn CharpolyMethod,
    limit: usize,
) -> Result<Vec<(AlgebraicNumber, usize)>> {
    if m.order() > limit {
        return Err(Error::OrderLimitExceeded {
            order: m.order(),
            limit,
        });
    }
    Ok(eigenvalues(m, method))
}

/// Sorts descending and merges equal values.
pub fn merge_multiset(mut values: Vec<(AlgebraicNumber, usize)>) -> Vec<(AlgebraicNumber, usize)> {
    values.sort_by(|a, b| b.0.cmp_exact(&a.0));
    let mut out: Vec<(AlgebraicNumber, usize)> = Vec::new();
    for (v, m) in values {
        match out.last_mut() {
            Some(last) if last.0.cmp_exact(&v) == Ordering::Equal => last.1 += m,
            _ => out.push((v, m)),
        }
    }
    out
}

/// Exact multiset equality of two eigenvalue lists.
pub fn same_multiset(a: Vec<(AlgebraicNumber, usize)>, b: Vec<(AlgebraicNumber, usize)>) -> bool {
    let (a, b) = (merge_multiset(a), merge_multiset(b));
    a.len() == b.len()
        && a.iter()
            .zip(&b)
            .all(|(x, y)| x.1 == y.1 && x.0.cmp_exact(&y.0) == Ordering::Equal)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SemimetricVerdict {
    pub nonneg: bool,
    pub triangle: bool,
}

/// Non-negativity and the triangle inequality for the q-distances of `dm`.
pub fn semimetric_check(dm: &DistanceMatrix, q: &Rational) -> Result<SemimetricVerdict> {
    let sigma = q_coefficients(q, dm.diameter())?;
    let s = sigma.sigma();
    let nonneg = s.iter().all(|v| !v.is_negative());
    // Only distance triples that occur in the graph matter.
    let d1 = dm.diameter() + 1;
    let mut seen = vec![false; d1 * d1 * d1];
    let n = dm.order();
    for x in 0..n {
        for y in 0..n {
            let dxy = dm.get(x, y) as usize;
            for z in 0..n {
                seen[(dxy * d1 + dm.get(y, z) as usize) * d1 + dm.get(x, z) as usize] = true;
            }
        }
    }
    let triangle = (0..seen.len())
        .filter(|&t| seen[t])
        .all(|t| {
            let (i, j, l) = (t / (d1 * d1), (t / d1) % d1, t % d1);
            &s[i] + &s[j] >= s[l]
        });
    Ok(SemimetricVerdict { nonneg, triangle })
}

/// Subgraph induced on the neighbours of `x`.
pub fn local_graph(g: &Graph, x: usize) -> Graph {
    g.induced_subgraph(g.neighbors(x))
}

/// For `q > 0`: every local graph has smallest eigenvalue at least `−q − 1`.
/// For `q < 0`: every local graph has at most one eigenvalue above `−q − 1`.
/// Both amount to an inertia test on `A(Δ(x)) + (q + 1)I`.
pub fn local_min_eigenvalue_bound_check(g: &Graph, q: &Rational) -> Result<bool> {
    if q.is_zero() {
        return Err(Error::ZeroQ);
    }
    let m = q_distance_matrix(&g.distances()?, q)?;
    let n_pos = inertia(&m).n_pos;
    if n_pos != 1 {
        return Err(Error::PreconditionNotMet(format!(
            "q-distance matrix has {n_pos} positive eigenvalues, expected 1"
        )));
    }
    let shift = q + Rational::one();
    Ok((0..g.order()).all(|x| {
        let local = local_graph(g, x);
        if local.order() == 0 {
            return true;
        }
        let ine = inertia(&local.adjacency_matrix().shifted(&shift));
        if q.is_positive() {
            ine.n_neg == 0
        } else {
            ine.n_pos <= 1
        }
    }))
}

/// Gram matrix `G = θ/(2n)·J − M/2` of vectors realising `M` as squared
/// Euclidean distances, with an exact PSD certificate.
#[derive(Clone, Debug)]
pub struct NegativeTypeWitness {
    pub gram: SymmetricRationalMatrix,
    pub certificate: LdlCertificate,
    pub row_sum: Rational,
}

impl NegativeTypeWitness {
    /// Re-checks every identity the witness is supposed to satisfy against `m`.
    pub fn verify(&self, m: &SymmetricRationalMatrix) -> bool {
        let n = m.order();
        if self.gram.order() != n {
            return false;
        }
        let diag = &self.row_sum / Rational::from_integer((2 * n).into());
        let g = &self.gram;
        (0..n).all(|x| *g.get(x, x) == diag)
            && (0..n).all(|x| (0..n).all(|y| g.get(x, x) + g.get(y, y) - g.get(x, y) * Rational::from_integer(2.into()) == *m.get(x, y)))
            && self.certificate.certifies(&self.gram)
    }
}

pub fn negative_type_witness(m: &SymmetricRationalMatrix) -> Result<NegativeTypeWitness> {
    let sums = m.row_sums();
    let theta = sums.first().cloned().unwrap_or_else(Rational::zero);
    if sums.iter().any(|s| *s != theta) {
        return Err(Error::NotConstantRowSum);
    }
    let n_pos = inertia(m).n_pos;
    if n_pos != 1 {
        return Err(Error::NotOnePositive { n_pos });
    }
    let n = m.order();
    let diag = &theta / Rational::from_integer((2 * n).into());
    let half = Rational::new(1.into(), 2.into());
    let gram = SymmetricRationalMatrix::from_fn(n, |x, y| &diag - m.get(x, y) * &half);
    let certificate = psd_certificate(&gram).map_err(|e| Error::WitnessNotPsd(e.to_string()))?;
    Ok(NegativeTypeWitness {
        gram,
        certificate,
        row_sum: theta,
    })
}

/// Replaces each vertex by an `s`-clique; vertex `(x, i)` becomes `x·s + i`.
pub fn clique_extension(g: &Graph, s: usize) -> Graph {
    assert!(s >= 1, "clique size must be positive");
    Graph::from_predicate(g.order() * s, |u, v| {
        let (x, y) = (u / s, v / s);
        x == y || g.is_adjacent(x, y)
    })
}

/// Compares the explicit spectrum of the `s`-clique extension with
/// `{s(θ + 1) − 1 : θ} ∪ {−1^{(s−1)n}}`.
pub fn clique_extension_spectrum_check(g: &Graph, s: usize) -> Result<bool> {
    let old = explicit_spectrum(&g.adjacency_matrix())?;
    let new = explicit_spectrum(&clique_extension(g, s).adjacency_matrix())?;
    let sr = Rational::from_integer(s.into());
    let mut expected: Vec<(AlgebraicNumber, usize)> = old
        .iter()
        .map(|(theta, m)| (theta.affine(&sr, &(&sr - Rational::one())), *m))
        .collect();
    if s > 1 {
        expected.push((AlgebraicNumber::from_integer(-1), (s - 1) * g.order()));
    }
    Ok(same_multiset(new, expected))
}

/// Largest order and part size for [`contains_induced_krr`].
pub const KRR_MAX_ORDER: usize = 64;
pub const KRR_MAX_R: usize = 3;

/// Whether `g` has an induced `K_{r,r}`: two independent `r`-sets with every
/// cross pair adjacent.
pub fn contains_induced_krr(g: &Graph, r: usize) -> Result<bool> {
    if r < 2 {
        return Err(Error::PreconditionNotMet("r must be at least 2".into()));
    }
    if g.order() > KRR_MAX_ORDER || r > KRR_MAX_R {
        return Err(Error::SizeLimitExceeded(format!(
            "induced K_{{r,r}} search is limited to n ≤ {KRR_MAX_ORDER} and r ≤ {KRR_MAX_R}"
        )));
    }
    let n = g.order();
    let nbr: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | (1 << w)))
        .collect();

    // Extends `chosen` (an independent set) from vertices in `pool`, which are
    // already non-adjacent to everything chosen. `done` sees each full set.
    fn independent_sets(nbr: &[u64], pool: u64, need: usize, chosen: u64, done: &mut dyn FnMut(u64) -> bool) -> bool {
        if need == 0 {
            return done(chosen);
        }
        let mut rest = pool;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if (rest.count_ones() as usize) + 1 < need {
                break;
            }
            if independent_sets(nbr, rest & !nbr[v], need - 1, chosen | (1 << v), done) {
                return true;
            }
        }
        false
    }

    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    Ok(independent_sets(&nbr, all, r, 0, &mut |a| {
        let mut common = all;
        let mut bits = a;
        while bits != 0 {
            common &= nbr[bits.trailing_zeros() as usize];
            bits &= bits - 1;
        }
        common.count_ones() as usize >= r && independent_sets(&nbr, common, r, 0, &mut |_| true)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{build_family, FamilyDescriptor};
    use drgq_exact::{int, rat};

    fn build(s: &str) -> Graph {
        build_family(&FamilyDescriptor::parse(s).unwrap()).unwrap()
    }

    fn rational_spectrum(ev: &[(AlgebraicNumber, usize)]) -> Vec<(Rational, usize)> {
        ev.iter().map(|(v, m)| (v.as_rational().cloned().unwrap(), *m)).collect()
    }

    #[test]
    fn q_distance_entries() {
        let dm = build("complete_bipartite:3,3").distances().unwrap();
        let m = q_distance_matrix(&dm, &rat(-1, 2)).unwrap();
        assert_eq!(*m.get(0, 3), int(1));
        assert_eq!(*m.get(0, 1), int(-1));
        let dm = build("path:3").distances().unwrap();
        let m = q_distance_matrix(&dm, &int(2)).unwrap();
        assert_eq!(*m.get(0, 1), int(1));
        assert_eq!(*m.get(0, 2), rat(3, 2));
        assert_eq!(q_distance_matrix(&dm, &int(0)), Err(Error::ZeroQ));
        let d1 = q_distance_matrix(&build("cycle:6").distances().unwrap(), &int(1)).unwrap();
        assert_eq!(*d1.get(0, 3), int(3));
    }

    #[test]
    fn distance_regularity() {
        assert_eq!(
            verify_distance_regular(&build("icosahedron")).unwrap().to_string(),
            "5,2,1;1,2,5"
        );
        assert_eq!(
            verify_distance_regular(&build("johnson:6,3")).unwrap().to_string(),
            "9,4,1;1,4,9"
        );
        assert_eq!(verify_distance_regular(&build("path:4")), None);
    }

    #[test]
    fn explicit_spectra() {
        let dm = build("complete_bipartite:3,2").distances().unwrap();
        let ev = explicit_spectrum(&q_distance_matrix(&dm, &rat(-1, 2)).unwrap()).unwrap();
        assert_eq!(rational_spectrum(&ev), vec![(int(1), 4), (int(-4), 1)]);
        let ev = explicit_spectrum(&build("petersen").adjacency_matrix()).unwrap();
        assert_eq!(rational_spectrum(&ev), vec![(int(3), 1), (int(1), 5), (int(-2), 4)]);
        let big = SymmetricRationalMatrix::identity(65);
        assert!(matches!(
            explicit_spectrum_with(&big, default_method().as_ref(), 64),
            Err(Error::OrderLimitExceeded { order: 65, limit: 64 })
        ));
    }

    #[test]
    fn semimetric_verdicts() {
        let dm = build("petersen").distances().unwrap();
        assert_eq!(
            semimetric_check(&dm, &rat(3, 2)).unwrap(),
            SemimetricVerdict { nonneg: true, triangle: true }
        );
        let dm = build("cycle:4").distances().unwrap();
        assert!(!semimetric_check(&dm, &rat(-1, 2)).unwrap().nonneg);
        let dm = build("hypercube:3").distances().unwrap();
        assert!(semimetric_check(&dm, &int(-1)).unwrap().triangle);
    }

    #[test]
    fn local_graphs() {
        let ico = build("icosahedron");
        for x in 0..12 {
            let l = local_graph(&ico, x);
            assert_eq!(l.regular_degree(), Some(2));
            assert!(l.is_connected());
            assert_eq!(l.order(), 5);
        }
        let l = local_graph(&build("johnson:6,3"), 0);
        assert_eq!((l.order(), l.regular_degree()), (9, Some(4)));
        assert_eq!(verify_distance_regular(&l).unwrap().to_string(), "4,2;1,2");
        let l = local_graph(&build("complete_bipartite:3,3"), 0);
        assert_eq!((l.order(), l.edge_count()), (3, 0));
    }

    #[test]
    fn local_bound_checks() {
        assert_eq!(local_min_eigenvalue_bound_check(&build("icosahedron"), &int(1)), Ok(true));
        assert_eq!(local_min_eigenvalue_bound_check(&build("johnson:6,3"), &int(1)), Ok(true));
        assert_eq!(local_min_eigenvalue_bound_check(&build("hypercube:3"), &int(1)), Ok(true));
        assert!(matches!(
            local_min_eigenvalue_bound_check(&build("icosahedron"), &rat(9, 10)),
            Err(Error::PreconditionNotMet(_))
        ));
    }

    #[test]
    fn witnesses() {
        let m = q_distance_matrix(&build("johnson:6,3").distances().unwrap(), &int(1)).unwrap();
        let w = negative_type_witness(&m).unwrap();
        assert_eq!(w.row_sum, int(30));
        assert!(w.verify(&m));
        let m = q_distance_matrix(&build("cycle:5").distances().unwrap(), &int(1)).unwrap();
        let w = negative_type_witness(&m).unwrap();
        assert_eq!(w.row_sum, int(6));
        assert!(w.verify(&m));
        let m = q_distance_matrix(&build("icosahedron").distances().unwrap(), &rat(9, 10)).unwrap();
        assert!(matches!(negative_type_witness(&m), Err(Error::NotOnePositive { .. })));
        let m = q_distance_matrix(&build("path:3").distances().unwrap(), &int(1)).unwrap();
        assert_eq!(negative_type_witness(&m).unwrap_err(), Error::NotConstantRowSum);
    }

    #[test]
    fn clique_extensions() {
        let c5 = build("cycle:5");
        assert_eq!(clique_extension(&c5, 1), c5);
        assert_eq!(clique_extension(&c5, 2).order(), 10);
        assert_eq!(clique_extension_spectrum_check(&c5, 2), Ok(true));
        let k2 = build("complete:2");
        assert_eq!(clique_extension(&k2, 2), build("complete:4"));
        let ev = explicit_spectrum(&clique_extension(&k2, 2).adjacency_matrix()).unwrap();
        assert_eq!(rational_spectrum(&ev), vec![(int(3), 1), (int(-1), 3)]);
    }

    #[test]
    fn induced_krr() {
        assert_eq!(contains_induced_krr(&build("cycle:4"), 2), Ok(true));
        assert_eq!(contains_induced_krr(&build("icosahedron"), 2), Ok(false));
        assert_eq!(contains_induced_krr(&build("hamming:2,3"), 2), Ok(true));
        assert_eq!(contains_induced_krr(&build("complete_bipartite:3,3"), 3), Ok(true));
        assert_eq!(contains_induced_krr(&build("johnson:6,3"), 3), Ok(false));
        assert!(matches!(contains_induced_krr(&build("cycle:4"), 4), Err(Error::SizeLimitExceeded(_))));
    }
}
