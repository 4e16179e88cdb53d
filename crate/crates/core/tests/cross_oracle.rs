//! Analytic results against independent brute-force computations.

use drgq_core::oracle::{explicit_spectrum, generalized_distance_matrix, q_distance_matrix, same_multiset};
use drgq_core::qdistance::{detect_classical_type, generalized_eigenvalue, generalized_spectrum, q_coefficients, q_distance_spectrum};
use drgq_core::{catalog, ClassicalParameters, CoefficientSequence, FamilyDescriptor, FamilyRegistry, Graph, IntersectionArray};
use drgq_exact::{int, rat, real_roots_with_multiplicity, AlgebraicNumber, RatPoly, Rational, Sign};
use proptest::prelude::*;

fn build(desc: &str) -> Graph {
    FamilyRegistry::default().build(&FamilyDescriptor::parse(desc).unwrap()).unwrap()
}

const SMALL: &[&str] = &[
    "cycle:3",
    "cycle:5",
    "cycle:6",
    "cycle:8",
    "cycle:9",
    "hamming:2,3",
    "hamming:3,2",
    "hypercube:4",
    "johnson:5,2",
    "johnson:6,2",
    "johnson:6,3",
    "halved_cube:4",
    "halved_cube:5",
    "complete:4",
    "complete_bipartite:3,3",
    "complete_bipartite:4,4",
    "petersen",
    "icosahedron",
];

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=6).prop_filter_map("q = 0", |(p, r)| (p != 0).then(|| rat(p, r)))
}

fn analytic_multiset(ia: &IntersectionArray, alpha: &CoefficientSequence) -> Vec<(AlgebraicNumber, usize)> {
    generalized_spectrum(ia, alpha)
        .unwrap()
        .distinct()
        .into_iter()
        .map(|(e, m)| (e, m as usize))
        .collect()
}

/// `f(y) = u_{d(x0, y)}` is a θ-eigenvector of A; each coordinate of `Af − θf`
/// must vanish at θ.
#[test]
fn standard_sequences_are_eigenvector_profiles() {
    for entry in catalog().into_iter().filter(|e| e.is_explicit()) {
        let g = entry.build_graph().unwrap().unwrap();
        if g.order() > 64 {
            continue;
        }
        let ia = entry.intersection_array().unwrap();
        let dm = g.distances().unwrap();
        let polys = ia.standard_polynomials();
        for (theta, _) in ia.spectrum().unwrap().entries() {
            for y in 0..g.order() {
                let mut residual = (&RatPoly::x() * &polys[dm.get(0, y) as usize]).scale(&int(-1));
                for &z in g.neighbors(y) {
                    residual = &residual + &polys[dm.get(0, z) as usize];
                }
                assert_eq!(theta.sign_at(&residual), Sign::NoSign, "{} at theta = {theta:?}", entry.name);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn q_spectra_match_explicit_matrices(idx in 0..SMALL.len(), q in nonzero_rational()) {
        let g = build(SMALL[idx]);
        let ia = drgq_core::oracle::verify_distance_regular(&g).unwrap();
        let analytic = analytic_multiset(&ia, &q_coefficients(&q, ia.diameter()).unwrap().to_sequence());
        let explicit = explicit_spectrum(&q_distance_matrix(&g.distances().unwrap(), &q).unwrap()).unwrap();
        prop_assert!(same_multiset(analytic, explicit), "{} at q = {}", SMALL[idx], q);
    }

    #[test]
    fn generalized_spectra_match_explicit_matrices(
        idx in 0..SMALL.len(),
        tail in proptest::collection::vec(nonzero_rational(), 5),
    ) {
        let g = build(SMALL[idx]);
        let ia = drgq_core::oracle::verify_distance_regular(&g).unwrap();
        let mut alpha = vec![int(0), int(1)];
        alpha.extend(tail.into_iter().take(ia.diameter() - 1));
        let seq = CoefficientSequence::new(alpha.clone()).unwrap();
        let analytic = analytic_multiset(&ia, &seq);
        let explicit = explicit_spectrum(&generalized_distance_matrix(&g.distances().unwrap(), &alpha).unwrap()).unwrap();
        prop_assert!(same_multiset(analytic, explicit), "{} at alpha = {:?}", SMALL[idx], alpha);
    }

    /// With base 1 the parameters reduce to `b_i = (D − i)(β − αi)` and
    /// `c_i = i(1 + α(i − 1))`; θ = b_1 − 1 is then of classical 1-type and the
    /// distance eigenvalue vanishes on every other nontrivial θ.
    #[test]
    fn base_one_classical_parameters(d in 2usize..=6, alpha in 0i64..=3, extra in 1i64..=8) {
        let dd = d as i64;
        let beta = alpha * (dd - 1) + extra;
        let p = ClassicalParameters::new(d, int(1), int(alpha), int(beta)).unwrap();
        let Ok(ia) = p.to_array() else { return Ok(()) };
        for i in 0..dd {
            prop_assert_eq!(ia.b(i as usize), int((dd - i) * (beta - alpha * i)));
            prop_assert_eq!(ia.c(i as usize + 1), int((i + 1) * (1 + alpha * i)));
        }
        let theta = ia.b(1) - int(1);
        let theta_alg = AlgebraicNumber::from_rational(theta.clone());
        prop_assert!(ia.is_eigenvalue(&theta_alg));
        let report = detect_classical_type(&ia, &theta_alg).unwrap();
        prop_assert_eq!(report.q, Some(int(1)));
        prop_assert_eq!(report.closed_form_holds, Some(true));
        let sigma = q_coefficients(&int(1), d).unwrap().to_sequence();
        for (root, _) in real_roots_with_multiplicity(&ia.intersection_charpoly()) {
            let eta = generalized_eigenvalue(&ia, &sigma, &root).unwrap();
            if root.as_rational() == Some(ia.valency()) {
                prop_assert_eq!(eta.sign(), Sign::Plus);
            } else if root.as_rational() == Some(&theta) {
                prop_assert_eq!(eta.sign(), Sign::Minus);
            } else {
                prop_assert!(eta.is_zero(), "theta = {:?}", root);
            }
        }
        if let Ok(s) = q_distance_spectrum(&ia, &int(1)) {
            prop_assert_eq!(s.distinct_count(), 3);
            prop_assert!(s.has_zero());
            prop_assert_eq!(s.positive_count(), 1);
        }
    }
}
