//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::process::ExitCode;
use std::time::Instant;

use drgq_core::checks::{default_q_grid, Subject};
use drgq_core::oracle::{
    clique_extension_spectrum_check, explicit_spectrum, local_min_eigenvalue_bound_check, negative_type_witness,
    q_distance_matrix, same_multiset, verify_distance_regular,
};
use drgq_core::qdistance::{classical_b_type_certificate, detect_classical_type, q_distance_spectrum};
use drgq_core::search::{one_positive_values, parse_q_range, search_q};
use drgq_core::{catalog, ClassicalParameters, Evaluation, FamilyDescriptor, FamilyRegistry, Graph, IntersectionArray};
use drgq_exact::{inertia, int, rat, AlgebraicNumber, Rational};
use num_traits::{One, Signed};
use rayon::prelude::*;

type Outcome = Result<String, String>;

fn build(desc: &str) -> Graph {
    FamilyRegistry::default()
        .build(&FamilyDescriptor::parse(desc).unwrap())
        .unwrap()
}

fn rational_spectrum(ev: &[(AlgebraicNumber, usize)]) -> Option<Vec<(Rational, usize)>> {
    ev.iter().map(|(e, m)| e.as_rational().map(|r| (r.clone(), *m))).collect()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn explicit_graphs() -> Vec<(String, Graph, IntersectionArray)> {
    catalog()
        .into_iter()
        .filter(|e| e.is_explicit())
        .map(|e| {
            let g = e.build_graph().unwrap().unwrap();
            (e.name.clone(), g, e.intersection_array().unwrap())
        })
        .collect()
}

fn complete_bipartite_minus_half() -> Outcome {
    for (r, s) in [(3, 3), (3, 2), (4, 1)] {
        let g = build(&format!("complete_bipartite:{r},{s}"));
        let m = q_distance_matrix(&g.distances().map_err(|e| e.to_string())?, &rat(-1, 2)).map_err(|e| e.to_string())?;
        let ev = explicit_spectrum(&m).map_err(|e| e.to_string())?;
        let expected = vec![(int(1), (r + s - 1) as usize), (int(-r - s + 1), 1)];
        ensure(rational_spectrum(&ev) == Some(expected), || format!("K_{{{r},{s}}}: {ev:?}"))?;
    }
    Ok("(3,3), (3,2), (4,1)".into())
}

fn johnson_two_eigenvalues() -> Outcome {
    let expected = vec![(int(3), 15), (int(-9), 5)];
    let ia = IntersectionArray::parse("9,4,1;1,4,9").unwrap();
    let s = q_distance_spectrum(&ia, &rat(-1, 2)).map_err(|e| e.to_string())?;
    let analytic: Vec<_> = s.distinct().into_iter().map(|(e, m)| (e, m as usize)).collect();
    ensure(rational_spectrum(&analytic) == Some(expected.clone()), || format!("analytic {analytic:?}"))?;
    let g = build("johnson:6,3");
    let m = q_distance_matrix(&g.distances().unwrap(), &rat(-1, 2)).unwrap();
    let explicit = explicit_spectrum(&m).map_err(|e| e.to_string())?;
    ensure(rational_spectrum(&explicit) == Some(expected), || format!("explicit {explicit:?}"))?;
    Ok("{3^15, -9^5} on both routes".into())
}

fn classical_three_distance_eigenvalues() -> Outcome {
    for desc in ["hamming:3,2", "hamming:3,3", "johnson:6,3", "halved_cube:5"] {
        let g = build(desc);
        let ia = verify_distance_regular(&g).ok_or(format!("{desc} is not distance-regular"))?;
        let radius: Rational = (1..=ia.diameter()).map(|i| int(i as i64) * ia.k(i)).sum();
        let analytic = q_distance_spectrum(&ia, &int(1)).map_err(|e| e.to_string())?;
        let analytic: Vec<_> = analytic.distinct().into_iter().map(|(e, m)| (e, m as usize)).collect();
        let explicit = explicit_spectrum(&q_distance_matrix(&g.distances().unwrap(), &int(1)).unwrap())
            .map_err(|e| e.to_string())?;
        ensure(same_multiset(analytic, explicit.clone()), || format!("{desc}: routes disagree"))?;
        ensure(explicit.len() == 3, || format!("{desc}: {} distinct values", explicit.len()))?;
        ensure(explicit.iter().any(|(e, _)| e.is_zero()), || format!("{desc}: 0 missing"))?;
        ensure(explicit[0].0.as_rational() == Some(&radius) && explicit[0].1 == 1, || {
            format!("{desc}: largest {:?}, expected {radius} simple", explicit[0])
        })?;
    }
    Ok("H(3,2), H(3,3), J(6,3), halved 5-cube".into())
}

fn b_type_certificates() -> Outcome {
    let fixtures = [
        "3,1,1,3", "3,1,0,1", "4,1,0,2", "3,2,2,14", "3,2,1,7", "3,2,0,2", "3,-2,-3,7",
    ];
    for f in fixtures {
        let p = ClassicalParameters::parse(f).map_err(|e| e.to_string())?;
        let cert = classical_b_type_certificate(&p).map_err(|e| format!("({f}): {e}"))?;
        let ia = p.to_array().unwrap();
        ensure(cert.theta == ia.b(1) / p.base() - Rational::one(), || format!("({f}): theta"))?;
        ensure(&cert.q == p.base(), || format!("({f}): q = {}", cert.q))?;
        let report = detect_classical_type(&ia, &AlgebraicNumber::from_rational(cert.theta.clone()))
            .map_err(|e| e.to_string())?;
        ensure(report.q.as_ref() == Some(p.base()), || format!("({f}): detected {:?}", report.q))?;
        ensure(cert.spectrum.distinct_count() == 3 && cert.spectrum.has_zero(), || format!("({f}): spectrum"))?;
    }
    Ok(format!("{} parameter sets", fixtures.len()))
}

fn icosahedron_threshold() -> Outcome {
    let dm = build("icosahedron").distances().unwrap();
    for (q, one) in [
        (int(1), true),
        (rat(3, 2), true),
        (int(2), true),
        (rat(1, 2), false),
        (rat(3, 4), false),
        (rat(9, 10), false),
    ] {
        let n_pos = inertia(&q_distance_matrix(&dm, &q).unwrap()).n_pos;
        ensure((n_pos == 1) == one && n_pos >= 1, || format!("q = {q}: n_pos = {n_pos}"))?;
    }
    Ok("n_pos = 1 exactly at q in {1, 3/2, 2}".into())
}

fn local_bound() -> Outcome {
    let grid = default_q_grid();
    let mut checked = 0;
    for (name, g, ia) in explicit_graphs() {
        if ia.diameter() < 2 {
            continue;
        }
        for q in grid.iter().filter(|q| q.is_positive()) {
            let s = q_distance_spectrum(&ia, q).map_err(|e| e.to_string())?;
            if s.positive_count() != 1 {
                continue;
            }
            let ok = local_min_eigenvalue_bound_check(&g, q).map_err(|e| e.to_string())?;
            ensure(ok, || format!("{name}, q = {q}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} (graph, q) pairs"))
}

fn row_sum_witness() -> Outcome {
    let grid = default_q_grid();
    let pairs: Vec<(String, Graph, Rational)> = explicit_graphs()
        .into_iter()
        .flat_map(|(name, g, _)| grid.iter().map(move |q| (name.clone(), g.clone(), q.clone())))
        .collect();
    let results: Vec<Result<bool, String>> = pairs
        .par_iter()
        .map(|(name, g, q)| {
            let m = q_distance_matrix(&g.distances().unwrap(), q).unwrap();
            let one = inertia(&m).n_pos == 1;
            match negative_type_witness(&m) {
                Ok(w) => {
                    ensure(one, || format!("{name}, q = {q}: witness without one positive eigenvalue"))?;
                    ensure(w.verify(&m), || format!("{name}, q = {q}: witness identities"))?;
                    Ok(true)
                }
                Err(e) => {
                    ensure(!one, || format!("{name}, q = {q}: {e}"))?;
                    Ok(false)
                }
            }
        })
        .collect();
    let mut witnesses = 0;
    for r in results {
        witnesses += usize::from(r?);
    }
    Ok(format!("{} pairs, {witnesses} witnesses", pairs.len()))
}

fn oracle_agreement() -> Outcome {
    let grid = default_q_grid();
    let mut pairs = 0;
    for entry in catalog().into_iter().filter(|e| e.is_explicit()) {
        let ev = Evaluation::with_default_method(Subject::from_entry(&entry).map_err(|e| e.to_string())?, &grid);
        for qe in &ev.per_q {
            let (Some(Ok(a)), Some(Ok(x))) = (&qe.analytic, &qe.explicit) else { continue };
            let analytic: Vec<_> = a.distinct().into_iter().map(|(e, m)| (e, m as usize)).collect();
            ensure(same_multiset(analytic, x.clone()), || format!("{}, q = {}", entry.name, qe.q))?;
            pairs += 1;
        }
    }
    ensure(pairs >= 80, || format!("only {pairs} pairs"))?;
    Ok(format!("{pairs} (graph, q) pairs"))
}

fn clique_extensions() -> Outcome {
    for desc in ["cycle:5", "complete:2", "path:3"] {
        let g = build(desc);
        for s in [2, 3] {
            let ok = clique_extension_spectrum_check(&g, s).map_err(|e| e.to_string())?;
            ensure(ok, || format!("{desc}, s = {s}"))?;
        }
    }
    Ok("pentagon, K_2, P_3 with s = 2, 3".into())
}

fn minus_one_type() -> Outcome {
    for d in [3, 4] {
        let ia = verify_distance_regular(&build(&format!("hypercube:{d}"))).unwrap();
        let minus_k = AlgebraicNumber::from_rational(-ia.valency());
        let r = detect_classical_type(&ia, &minus_k).map_err(|e| e.to_string())?;
        ensure(r.q == Some(int(-1)), || format!("hypercube:{d}: {:?}", r.q))?;
    }
    let mut reported = Vec::new();
    for entry in catalog() {
        let ia = entry.intersection_array().unwrap();
        if ia.diameter() < 2 {
            continue;
        }
        let spec = ia.spectrum().unwrap();
        for theta in spec.thetas().skip(1) {
            let r = detect_classical_type(&ia, theta).map_err(|e| e.to_string())?;
            if r.q == Some(int(-1)) {
                let is_minus_k = theta.as_rational() == Some(&-ia.valency());
                ensure(is_minus_k, || format!("{}: q = -1 at theta = {:?}", entry.name, theta))?;
                reported.push(entry.name.clone());
            }
        }
    }
    Ok(format!("q = -1 only at theta = -k: {}", reported.join(", ")))
}

fn odd_polygons() -> Outcome {
    let qs = parse_q_range("1/100:99/100:1/100").map_err(|e| e.to_string())?;
    let mut summary = Vec::new();
    for (desc, nonempty) in [("cycle:5", true), ("cycle:7", true), ("hamming:2,3", false)] {
        let subject = Subject::from_family(&FamilyDescriptor::parse(desc).unwrap()).map_err(|e| e.to_string())?;
        let found = one_positive_values(&search_q(&subject, &qs).map_err(|e| e.to_string())?);
        ensure(found.is_empty() != nonempty, || format!("{desc}: {} values", found.len()))?;
        let range = match (found.first(), found.last()) {
            (Some(a), Some(b)) => format!("[{a}, {b}]"),
            _ => "none".into(),
        };
        summary.push(format!("{desc} {range}"));
    }
    Ok(summary.join("; "))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("complete bipartite graphs at q = -1/2", complete_bipartite_minus_half),
        ("J(6,3) has two q-distance eigenvalues at q = -1/2", johnson_two_eigenvalues),
        ("classical 1-type graphs have three distance eigenvalues", classical_three_distance_eigenvalues),
        ("b-type certificates", b_type_certificates),
        ("icosahedron one-positive threshold", icosahedron_threshold),
        ("local graph eigenvalue bound", local_bound),
        ("row-sum witness equivalence", row_sum_witness),
        ("analytic and explicit spectra agree", oracle_agreement),
        ("clique extension spectra", clique_extensions),
        ("-1-type only at -k", minus_one_type),
        ("odd polygons have one positive eigenvalue below q = 1", odd_polygons),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name} ({detail}) [{elapsed:.2}s]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail} [{elapsed:.2}s]", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
