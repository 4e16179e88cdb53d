use std::cmp::Ordering;

use drgq_core::checks::default_q_grid;
use drgq_core::qdistance::generalized_spectrum;
use drgq_core::{catalog, CheckRegistry, CoefficientSequence, Evaluation, Status, Subject};
use drgq_exact::{int, rat, AlgebraicNumber, IntPoly, Rational};
use proptest::prelude::*;

#[test]
fn every_catalog_entry_passes_every_check() {
    let registry = CheckRegistry::default();
    let grid = default_q_grid();
    let mut failures = Vec::new();
    for entry in catalog() {
        let ev = Evaluation::with_default_method(Subject::from_entry(&entry).unwrap(), &grid);
        for outcome in registry.run_all(&ev) {
            if outcome.status == Status::Fail {
                failures.push(format!("{}: {} {:?}", entry.name, outcome.check, outcome.details));
            }
        }
    }
    assert!(failures.is_empty(), "{failures:#?}");
}

/// Exact `Σ mult·value` over a multiset of algebraic numbers; conjugates with a
/// shared defining polynomial are summed through its coefficients.
fn exact_weighted_sum(values: &[(AlgebraicNumber, u64)]) -> Option<Rational> {
    let mut total = int(0);
    let mut groups: Vec<(IntPoly, Vec<u64>)> = Vec::new();
    for (v, m) in values {
        match v.as_rational() {
            Some(r) => total += r * int(*m as i64),
            None => match groups.iter_mut().find(|(p, _)| p == v.poly()) {
                Some((_, ms)) => ms.push(*m),
                None => groups.push((v.poly().clone(), vec![*m])),
            },
        }
    }
    for (p, ms) in groups {
        let deg = p.degree()?;
        if ms.len() != deg || ms.iter().any(|m| *m != ms[0]) {
            return None;
        }
        let c = p.coeffs();
        let root_sum = -Rational::new(c[deg - 1].clone(), c[deg].clone());
        total += root_sum * int(ms[0] as i64);
    }
    Some(total)
}

#[test]
fn spectra_of_catalog_arrays() {
    for entry in catalog() {
        let ia = entry.intersection_array().unwrap();
        let spec = ia.spectrum().unwrap();
        assert_eq!(spec.len(), ia.diameter() + 1, "{}", entry.name);
        assert!(spec.entries().windows(2).all(|w| w[0].0.cmp_exact(&w[1].0) == Ordering::Greater));
        let total: u64 = spec.entries().iter().map(|(_, m)| m).sum();
        assert_eq!(int(total as i64), *ia.order(), "{}", entry.name);
        assert_eq!(exact_weighted_sum(spec.entries()), Some(int(0)), "{}", entry.name);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn generalized_spectra_have_zero_trace_and_simple_row_sum(
        idx in 0..25usize,
        tail in proptest::collection::vec((-9i64..=9, 1i64..=4), 5),
    ) {
        let cat = catalog();
        let entry = &cat[idx % cat.len()];
        let ia = entry.intersection_array().unwrap();
        let mut alpha = vec![int(0), int(1)];
        alpha.extend(tail.iter().take(ia.diameter() - 1).map(|&(p, r)| rat(p, r)));
        let s = generalized_spectrum(&ia, &CoefficientSequence::new(alpha.clone()).unwrap()).unwrap();
        let pairs: Vec<_> = s.entries().iter().map(|e| (e.eta.clone(), e.multiplicity)).collect();
        match exact_weighted_sum(&pairs) {
            Some(t) => prop_assert_eq!(t, int(0), "{}", entry.name),
            None => {
                let approx: f64 = pairs.iter().map(|(e, m)| e.to_f64() * *m as f64).sum();
                prop_assert!(approx.abs() < 1e-6);
            }
        }
        let first = &s.entries()[0];
        prop_assert_eq!(first.source_theta.as_rational(), Some(ia.valency()));
        prop_assert_eq!(first.multiplicity, 1);
        let row_sum: Rational = (0..=ia.diameter()).map(|i| &alpha[i] * ia.k(i)).sum();
        prop_assert_eq!(first.eta.as_rational(), Some(&row_sum));
    }
}
