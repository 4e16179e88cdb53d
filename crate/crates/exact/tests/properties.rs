use std::cmp::Ordering;

use drgq_exact::{
    charpoly, distinct_root_count, eigenvalues, inertia, int, rat, real_roots_with_multiplicity, sturm_isolate,
    BareissInterpolation, Berkowitz, CharpolyMethod, Inertia, IntMatrix, IntPoly, RatPoly, Sign,
    SymmetricRationalMatrix,
};
use proptest::prelude::*;

fn sym_from(order: usize, values: &[i64], den: i64) -> SymmetricRationalMatrix {
    let mut it = values.iter().cycle();
    let mut upper = vec![0i64; order * order];
    for i in 0..order {
        for j in i..order {
            upper[i * order + j] = *it.next().unwrap();
        }
    }
    SymmetricRationalMatrix::from_fn(order, |i, j| rat(upper[i * order + j], den))
}

fn symmetric_matrix() -> impl Strategy<Value = SymmetricRationalMatrix> {
    (1usize..=8, prop::collection::vec(-3i64..=3, 36), 1i64..=3)
        .prop_map(|(n, vals, den)| sym_from(n, &vals, den))
}

fn positive_roots_with_multiplicity(m: &SymmetricRationalMatrix) -> Inertia {
    let mut out = Inertia::default();
    for (root, mult) in real_roots_with_multiplicity(&charpoly(m)) {
        match root.sign() {
            Sign::Plus => out.n_pos += mult,
            Sign::Minus => out.n_neg += mult,
            Sign::NoSign => out.n_zero += mult,
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn inertia_matches_charpoly_root_signs(m in symmetric_matrix()) {
        prop_assert_eq!(inertia(&m), positive_roots_with_multiplicity(&m));
    }

    #[test]
    fn charpoly_methods_agree(n in 1usize..=6, vals in prop::collection::vec(-5i64..=5, 36)) {
        let m = IntMatrix::from_i64(n, &vals[..n * n]).unwrap();
        prop_assert_eq!(Berkowitz.charpoly(&m), BareissInterpolation.charpoly(&m));
    }

    #[test]
    fn isolating_intervals_are_disjoint_and_exact(roots in prop::collection::vec(-4i64..=4, 1..5), extra in 1i64..6) {
        // ∏ (x - r_i) · (x^2 - extra)
        let mut p = RatPoly::from_i64(&[-extra, 0, 1]);
        for r in &roots {
            p = &p * &RatPoly::from_i64(&[-r, 1]);
        }
        let ip = p.to_primitive_int();
        let iso = sturm_isolate(&ip);
        prop_assert_eq!(iso.len(), distinct_root_count(&p));
        for w in iso.windows(2) {
            prop_assert!(w[0].interval().1 < w[1].interval().0);
        }
        for a in &iso {
            prop_assert_eq!(a.sign_at(&a.poly().to_rat()), Sign::NoSign);
            prop_assert_eq!(a.sign_at(&p), Sign::NoSign);
            let fine = a.refine(&rat(1, 1000));
            prop_assert_eq!(fine.cmp_exact(a), Ordering::Equal);
            let again = fine.refine(&rat(1, 1000));
            prop_assert_eq!(again.interval(), fine.interval());
        }
    }

    #[test]
    fn interlacing_of_principal_submatrices(m in symmetric_matrix(), mask in 1u8..255) {
        let n = m.order();
        prop_assume!(n >= 2);
        let keep: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        prop_assume!(!keep.is_empty() && keep.len() < n);
        let sub = m.principal_submatrix(&keep);
        let expand = |ev: Vec<(drgq_exact::AlgebraicNumber, usize)>| {
            ev.into_iter().flat_map(|(v, k)| std::iter::repeat_n(v, k)).collect::<Vec<_>>()
        };
        let big = expand(eigenvalues(&m, &Berkowitz));
        let small = expand(eigenvalues(&sub, &Berkowitz));
        let k = small.len();
        for i in 0..k {
            prop_assert!(big[n - k + i] <= small[i]);
            prop_assert!(small[i] <= big[i]);
        }
    }
}

#[test]
fn identity_charpoly() {
    let p = charpoly(&SymmetricRationalMatrix::identity(3));
    assert_eq!(p, RatPoly::from_i64(&[-1, 3, -3, 1]));
    assert_eq!(distinct_root_count(&p), 1);
}

#[test]
fn complete_graph_k3_charpoly() {
    let m = SymmetricRationalMatrix::from_fn(3, |i, j| int(i64::from(i != j)));
    assert_eq!(charpoly(&m), RatPoly::from_i64(&[-2, -3, 0, 1]));
}

fn c4_distance() -> SymmetricRationalMatrix {
    SymmetricRationalMatrix::from_fn(4, |i, j| {
        let d = (i as i64 - j as i64).rem_euclid(4);
        int(d.min(4 - d))
    })
}

#[test]
fn four_cycle_distance_spectrum() {
    // Circulant: eigenvalue ω + 2ω² + ω³ at the 4th roots of unity gives 4, −2, 0, −2.
    let p = charpoly(&c4_distance());
    let expected = &(&RatPoly::from_i64(&[0, 1]) * &RatPoly::from_i64(&[-4, 1])) * &RatPoly::from_i64(&[4, 4, 1]);
    assert_eq!(p, expected);
    assert_eq!(distinct_root_count(&p), 3);
    let ev = eigenvalues(&c4_distance(), &Berkowitz);
    let flat: Vec<_> = ev.iter().map(|(v, k)| (v.as_rational().cloned().unwrap(), *k)).collect();
    assert_eq!(flat, vec![(int(4), 1), (int(0), 1), (int(-2), 2)]);
}

#[test]
fn k33_half_distance_has_two_eigenvalues() {
    // d = 1 across parts (σ₁ = 1), d = 2 within parts (σ₂ = 1 + 1/q = −1 at q = −1/2).
    let m = SymmetricRationalMatrix::from_fn(6, |i, j| match (i == j, (i < 3) == (j < 3)) {
        (true, _) => int(0),
        (false, true) => int(-1),
        (false, false) => int(1),
    });
    assert_eq!(distinct_root_count(&charpoly(&m)), 2);
}

#[test]
fn c5_adjacency_charpoly() {
    let m = SymmetricRationalMatrix::from_fn(5, |i, j| {
        let d = (i as i64 - j as i64).rem_euclid(5);
        int(i64::from(d == 1 || d == 4))
    });
    let a = RatPoly::from_i64(&[-2, 1]);
    let b = RatPoly::from_i64(&[-1, 1, 1]);
    assert_eq!(charpoly(&m), &a * &(&b * &b));
    let iso = sturm_isolate(&charpoly(&m).to_primitive_int());
    assert_eq!(iso.len(), 3);
    assert_eq!(iso[2].as_rational(), Some(&int(2)));
    assert_eq!(iso[0].poly(), &IntPoly::from_i64(&[-1, 1, 1]));
}

#[test]
fn inertia_examples() {
    let m = SymmetricRationalMatrix::from_fn(4, |i, j| int(i64::from(i != j)));
    assert_eq!(inertia(&m), Inertia { n_pos: 1, n_zero: 0, n_neg: 3 });
    assert_eq!(inertia(&c4_distance()), Inertia { n_pos: 1, n_zero: 1, n_neg: 2 });
}
