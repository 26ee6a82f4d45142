//! The ten acceptance criteria. Each prints one PASS/FAIL line; the test fails
//! if any criterion fails.

use std::f64::consts::PI;
use std::io::Write;
use std::time::{Duration, Instant};

use hyperwave_core::discrete::lowest_weight_norm;
use hyperwave_core::verify::{catalog, CATALOG_SEED};
use hyperwave_core::{EvalOptions, Relation, Suite, Tolerances, VerifyReport};

struct Outcome {
    reports: Vec<VerifyReport>,
    elapsed: Duration,
    budget: Duration,
}

fn run(suites: &[Suite], ids: &[&str], budget_secs: u64) -> Outcome {
    let opts = EvalOptions::default();
    let tol = Tolerances::default();
    let start = Instant::now();
    let mut reports = Vec::new();
    for &suite in suites {
        let selected: Vec<Relation> = catalog(suite, CATALOG_SEED)
            .into_iter()
            .filter(|r| ids.iter().any(|id| r.id() == *id || (id.ends_with('*') && r.id().starts_with(&id[..id.len() - 1]))))
            .collect();
        reports.extend(selected.iter().map(|r| r.check(&opts, &tol)));
    }
    Outcome { reports, elapsed: start.elapsed(), budget: Duration::from_secs(budget_secs) }
}

fn report(n: usize, title: &str, o: &Outcome) -> bool {
    let failed: Vec<&VerifyReport> = o.reports.iter().filter(|r| !r.pass).collect();
    let in_time = o.elapsed <= o.budget;
    let ok = !o.reports.is_empty() && failed.is_empty() && in_time;
    let mut out = std::io::stdout().lock();
    writeln!(
        out,
        "criterion {n:>2} {}: {title} ({} checks, {} failed, {:.2} s)",
        if ok { "PASS" } else { "FAIL" },
        o.reports.len(),
        failed.len(),
        o.elapsed.as_secs_f64()
    )
    .unwrap();
    for r in failed.iter().take(5) {
        writeln!(out, "    {} residual={:e} tolerance={:e}", r.name, r.residual, r.tolerance).unwrap();
    }
    if !in_time {
        writeln!(out, "    over the {:?} budget", o.budget).unwrap();
    }
    ok
}

#[test]
fn acceptance_criteria() {
    let mut all = true;

    // 1: the catalog checks c_k against exact double factorials; c₀ and c₁ are also pinned here
    let mut c1 = run(&[Suite::Discrete], &["lowest-weight-norm"], 1);
    let exact = [(0.0, 1.0 / (2f64.sqrt() * PI)), (1.0, 1.0 / PI)];
    for (k, e) in exact {
        let v = lowest_weight_norm(k).unwrap();
        let r = ((v - e) / e).abs();
        c1.reports.push(VerifyReport::new(format!("c_{k}"), e.into(), v.into(), r, 1e-14));
    }
    all &= report(1, "normalization constants", &c1);

    all &= report(2, "orthonormality", &run(&[Suite::Discrete], &["orthonormality"], 10));
    all &= report(
        3,
        "Casimir and K3 eigenvalues",
        &run(&[Suite::Discrete, Suite::Continuous, Suite::NewClass], &["eigen-C2", "eigen-K3"], 30),
    );
    all &= report(
        4,
        "ladder coefficients and annihilation",
        &run(
            &[Suite::Discrete, Suite::Continuous],
            &["ladder-raise", "ladder-lower", "ladder-crossing", "annihilate-lowest", "annihilate-highest"],
            30,
        ),
    );
    all &= report(5, "route equivalence", &run(&[Suite::Discrete, Suite::Continuous], &["route-*"], 60));
    all &= report(6, "half-integer closed forms", &run(&[Suite::Continuous], &["half-vacuum-*", "tu-identity-*"], 10));
    all &= report(7, "recurrences A1-A6", &run(&[Suite::Discrete], &["recurrence-*"], 10));
    all &= report(
        8,
        "new-class functions",
        &run(
            &[Suite::NewClass],
            &["newclass-ode", "gudermannian", "newclass-joining-lower", "newclass-joining-raise", "divergence"],
            30,
        ),
    );
    all &= report(
        9,
        "asymptotics",
        &run(&[Suite::Continuous], &["asymptotic-principal", "asymptotic-supplementary"], 10),
    );
    let mut c10 = run(&[Suite::Numerics], &["*"], 10);
    let norms = run(&[Suite::Continuous], &["norm-identity"], 10);
    c10.elapsed += norms.elapsed;
    c10.reports.extend(norms.reports);
    all &= report(10, "numerics kernel", &c10);

    assert!(all, "at least one acceptance criterion failed");
}
