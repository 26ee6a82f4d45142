use hyperwave_core::continuous::{PrincipalFamily, PrincipalSpec};
use hyperwave_core::discrete::DiscreteSpec;
use hyperwave_core::newclass::NewClassSpec;
use hyperwave_core::operators::{apply_casimir, apply_kplus};
use hyperwave_core::verify::{catalog, run_suite, CATALOG_SEED};
use hyperwave_core::{verify_relation, EvalOptions, HyperPoint, RelationParams, SeriesSpec, Suite, Tolerances};

fn failures(suite: Suite) -> Vec<String> {
    run_suite(suite, &EvalOptions::default(), &Tolerances::default())
        .into_iter()
        .filter(|r| !r.pass)
        .map(|r| format!("{} residual={:e}", r.name, r.residual))
        .collect()
}

#[test]
fn every_suite_passes() {
    for suite in [Suite::Discrete, Suite::Continuous, Suite::NewClass, Suite::Numerics] {
        let f = failures(suite);
        assert!(f.is_empty(), "{suite}: {f:#?}");
    }
}

#[test]
fn all_is_the_union() {
    let all = catalog(Suite::All, CATALOG_SEED).len();
    let parts: usize = [Suite::Discrete, Suite::Continuous, Suite::NewClass, Suite::Numerics]
        .into_iter()
        .map(|s| catalog(s, CATALOG_SEED).len())
        .sum();
    assert_eq!(all, parts);
}

#[test]
fn every_listed_id_is_in_the_catalog() {
    let ids: Vec<&str> = catalog(Suite::All, CATALOG_SEED).iter().map(|r| r.id()).collect();
    for id in hyperwave_core::Relation::IDS {
        assert!(ids.contains(&id), "{id} is never exercised");
    }
}

#[test]
fn loosened_tolerance_override() {
    let tol = Tolerances { eigen: 1e-3, ..Default::default() };
    let reports = run_suite(Suite::Discrete, &EvalOptions::default(), &tol);
    assert!(reports.iter().all(|r| r.pass));
    assert!(reports.iter().any(|r| r.tolerance == 1e-3));
}

#[test]
fn tightened_tolerance_fails() {
    let tol = Tolerances { eigen: 1e-16, ..Default::default() };
    let reports = run_suite(Suite::Discrete, &EvalOptions::default(), &tol);
    assert!(reports.iter().any(|r| !r.pass));
}

// The checks must be able to fail: wrong eigenvalues and coefficients are detected.
#[test]
fn wrong_eigenvalue_is_detected() {
    let o = EvalOptions::default();
    let spec: SeriesSpec = DiscreteSpec::dplus(1.0, 2.0).unwrap().into();
    let f = spec.surface(o);
    let (t, p) = (0.4, 1.0);
    let c = apply_casimir(&f, t, p, &o).unwrap();
    let v = f.eval(t, p).unwrap();
    assert!((c - v * 2.0).norm() < 1e-6);
    assert!((c - v * 6.0).norm() > 1e-2);
}

#[test]
fn wrong_ladder_coefficient_is_detected() {
    let o = EvalOptions::default();
    let spec: SeriesSpec = PrincipalSpec::new(1.0, 1.0, PrincipalFamily::Seq2).unwrap().into();
    let (up, c) = spec.raised().unwrap();
    let v = apply_kplus(&spec.surface(o), 0.3, 0.2, &o).unwrap();
    let g = up.evaluate(0.3, 0.2, &o).unwrap();
    assert!((v - g * c).norm() < 1e-6 * g.norm().max(1e-3));
    assert!((v + g * c).norm() > 1e-3);
}

#[test]
fn relation_examples() {
    let o = EvalOptions::default();
    let spec = |s: SeriesSpec| RelationParams { spec: Some(s), ..Default::default() };
    for (id, p) in [
        ("eigen-C2", spec(DiscreteSpec::dplus(0.0, 1.0).unwrap().into())),
        ("annihilate-lowest", RelationParams { k: Some(1.0), ..Default::default() }),
        ("recurrence-A3", RelationParams { k: Some(0.0), m: Some(1.0), x: Some(0.5), ..Default::default() }),
        ("newclass-ode", spec(NewClassSpec::new(2).into())),
        ("newclass-joining-lower", RelationParams::default()),
        (
            "route-ladder",
            RelationParams {
                spec: Some(PrincipalSpec::new(1.0, 2.0, PrincipalFamily::Seq1).unwrap().into()),
                steps: Some(2),
                point: Some(HyperPoint::new(0.7, 0.1)),
                ..Default::default()
            },
        ),
    ] {
        let r = verify_relation(id, &p, &o).unwrap();
        assert!(r.pass, "{r:?}");
    }
}

#[test]
fn divergence_rejects_normalizable_functions() {
    let o = EvalOptions::default();
    let p = RelationParams { spec: Some(DiscreteSpec::dplus(0.0, 1.0).unwrap().into()), ..Default::default() };
    assert!(verify_relation("divergence", &p, &o).is_err());
}
