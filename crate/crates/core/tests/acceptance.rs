//! Release gate: one PASS/FAIL line per acceptance criterion.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use sombor_core::verify::{
    check_constant, check_lemma, classify, default_grids, extremal_search_with, locate_sign_change,
    lookup_constant, predicted_extremal, random_connected_graph, verify_transform_monotonicity,
    AlphaSampler, LemmaId, Status, Verdict, CATALOG,
};
use sombor_core::{
    are_isomorphic, canonical_code, closed_form_u, enumerate_unicyclic, forgotten, general_sombor,
    sombor, u_graph, Alpha, EnumFilter, Enumerator, Graph,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn alpha(v: f64) -> Alpha<f64> {
    Alpha::new(v).unwrap()
}

fn theorem_sweep() -> Outcome {
    let enumerator = Enumerator::new();
    let mut runs = 0;
    for n in 5..=10 {
        for d in 2..=n - 2 {
            let in_range = if d <= 3 { n >= d + 3 } else { n >= d + 2 };
            if !in_range {
                continue;
            }
            let predicted = predicted_extremal(n, d).map_err(|e| e.to_string())?;
            for a in [0.1, 0.25, 0.5, 0.75, 0.9] {
                let r = extremal_search_with(&enumerator, n, d, alpha(a), 1e-9)
                    .map_err(|e| format!("n={n} d={d} alpha={a}: {e}"))?;
                let witness = r.argmax_codes[0].to_graph();
                let iso = are_isomorphic(&witness, &predicted).map_err(|e| e.to_string())?;
                if r.verdict != Verdict::ConfirmedUnique || r.argmax_codes.len() != 1 || !iso {
                    let g6: Vec<String> = r.argmax_codes.iter().map(|c| c.to_graph6()).collect();
                    return Err(format!(
                        "n={n} d={d} alpha={a}: {} with argmax {}",
                        r.verdict,
                        g6.join(";")
                    ));
                }
                runs += 1;
            }
        }
    }
    Ok(format!("{runs} (n, d, alpha) triples ConfirmedUnique"))
}

fn closed_form_identity() -> Outcome {
    let mut worst = 0.0f64;
    let mut checks = 0;
    for n in 6..=200 {
        for d in 4..=n - 2 {
            let g = u_graph(n, d, 1).unwrap();
            for k in 1..=10 {
                let a = alpha(k as f64 / 10.0);
                let direct = general_sombor(&g, a).value();
                let closed = closed_form_u(n, d, a).unwrap().value();
                let rel = (closed - direct).abs() / direct.abs().max(1.0);
                worst = worst.max(rel);
                if rel > 1e-12 {
                    return Err(format!(
                        "n={n} d={d} alpha={a}: closed {closed} vs direct {direct}"
                    ));
                }
                checks += 1;
            }
        }
    }
    Ok(format!("{checks} checks, worst relative gap {worst:.2e}"))
}

fn lemma8_numeric() -> Outcome {
    let mut checks = 0;
    let mut boundary = 0;
    for n in 6..=14 {
        for d in 4..=n - 2 {
            let base = u_graph(n, d, 1).unwrap();
            for i in 2..=d - 2 {
                let other = u_graph(n, d, i).unwrap();
                for k in 1..=19 {
                    let a = alpha(k as f64 * 0.05);
                    let margin =
                        general_sombor(&base, a).value() - general_sombor(&other, a).value();
                    match classify(margin) {
                        Status::Violation => {
                            return Err(format!("n={n} d={d} i={i} alpha={a}: margin {margin:e}"))
                        }
                        Status::Boundary => boundary += 1,
                        Status::Pass => {}
                    }
                    checks += 1;
                }
            }
        }
    }
    Ok(format!(
        "{checks} comparisons, {boundary} at the boundary (mirror images when n = d+2)"
    ))
}

fn lemma_grids() -> Outcome {
    let mut parts = Vec::new();
    for id in LemmaId::ALL {
        let (a, x) = default_grids(id);
        let r = check_lemma(id, a, x).map_err(|e| e.to_string())?;
        if !r.passed() {
            let v = &r.violations[0];
            return Err(format!(
                "{id}: {} violations, first at alpha={} x={} value={:e}",
                r.violations.len(),
                v.alpha,
                v.x,
                v.value
            ));
        }
        parts.push(format!("{id} {} pts", r.points_checked));
    }
    Ok(parts.join(", "))
}

fn constant_catalog() -> Outcome {
    for c in CATALOG {
        let r = check_constant(c.id, None, None).map_err(|e| e.to_string())?;
        if !r.passed() {
            return Err(format!(
                "{} non-negative at alpha={}",
                c.id, r.violations[0].0
            ));
        }
    }
    let sub = lookup_constant("subcase22").unwrap();
    let root = locate_sign_change(sub, 1.5, 2.5, 1e-10).ok_or("no sign change in (1.5, 2.5)")?;
    if (root - 1.90056).abs() > 1e-3 {
        return Err(format!("subcase22 sign change at {root}, expected 1.90056"));
    }
    Ok(format!(
        "{} constants negative, subcase22 root {root:.6}",
        CATALOG.len()
    ))
}

fn relocation_property() -> Outcome {
    let sampler = AlphaSampler::Uniform {
        low: 0.001,
        high: 0.999,
    };
    let r =
        verify_transform_monotonicity(10_000, sampler, 20_240_601).map_err(|e| e.to_string())?;
    if r.checked != 10_000 {
        return Err(format!("only {} applicable instances found", r.checked));
    }
    if let Some(c) = r.counterexamples.first() {
        return Err(format!(
            "{} non-increases, first {} ({}, {}) alpha={}",
            r.counterexamples.len(),
            c.graph6,
            c.u,
            c.v,
            c.alpha
        ));
    }
    Ok(format!(
        "10000 instances, {} skipped graphs, min gain {:.3e}",
        r.skipped, r.min_gain
    ))
}

fn enumerator_oracle() -> Outcome {
    let expected = [(3, 1), (4, 2), (5, 5), (6, 13), (7, 33)];
    for (n, count) in expected {
        let oracle = common::brute_unicyclic(n);
        if oracle.len() != count {
            return Err(format!(
                "oracle found {} classes at n={n}, expected {count}",
                oracle.len()
            ));
        }
        let oracle_codes: BTreeSet<_> = oracle
            .iter()
            .map(|e| canonical_code(&Graph::from_edge_list(n, e).unwrap()).unwrap())
            .collect();
        let ours: BTreeSet<_> = enumerate_unicyclic(&EnumFilter::new(n))
            .map_err(|e| e.to_string())?
            .codes
            .into_iter()
            .collect();
        if oracle_codes != ours {
            return Err(format!("code sets differ at n={n}"));
        }
    }
    Ok("n = 3..7 match the labeled brute force (1, 2, 5, 13, 33)".into())
}

fn specialization_identities() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let alphas = [0.1, 0.5, 0.9, 1.0, 1.7];
    let mut worst = 0.0f64;
    for k in 0..1000 {
        let n = 3 + k % 14;
        let g = random_connected_graph(&mut rng, n);
        if sombor::<f64>(&g) != general_sombor(&g, alpha(0.5)) {
            return Err(format!("sombor differs from SO_0.5 on graph {k}"));
        }
        if forgotten::<f64>(&g) != general_sombor(&g, alpha(1.0)) {
            return Err(format!("forgotten differs from SO_1 on graph {k}"));
        }
        let base: Vec<f64> = alphas
            .iter()
            .map(|&a| general_sombor(&g, alpha(a)).value())
            .collect();
        let mut perm: Vec<usize> = (0..n).collect();
        for _ in 0..100 {
            perm.shuffle(&mut rng);
            let h = g.permute(&perm);
            for (&a, &b) in alphas.iter().zip(&base) {
                let v = general_sombor(&h, alpha(a)).value();
                let rel = (v - b).abs() / b.abs().max(1.0);
                worst = worst.max(rel);
                if rel > 1e-12 {
                    return Err(format!(
                        "relabeling changed SO_{a} on graph {k}: {b} vs {v}"
                    ));
                }
            }
        }
    }
    Ok(format!(
        "1000 graphs x 100 relabelings, worst relative gap {worst:.2e}"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("theorem sweep", theorem_sweep),
        ("closed form of U(n,d)", closed_form_identity),
        ("U(n,d,1) dominates U(n,d,i)", lemma8_numeric),
        ("lemma grid suite", lemma_grids),
        ("proof constant catalog", constant_catalog),
        ("relocation property test", relocation_property),
        ("enumerator vs brute force", enumerator_oracle),
        ("specialization and relabeling", specialization_identities),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {}. {name}: {detail} [{secs:.1}s]", k + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {}. {name}: {detail} [{secs:.1}s]", k + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
