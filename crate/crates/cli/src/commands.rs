use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use hyperwave_core::verify::{catalog, CATALOG_SEED};
use hyperwave_core::{EvalOptions, SeriesSpec, Suite, Tolerances, VerifyReport};
use rayon::prelude::*;
use serde::Serialize;

use crate::args::{EvalArgs, Format, ReportFormat, SuiteArg, TableArgs, VerifyArgs};
use crate::output::{write_csv, write_json, write_long_csv, EvalDocument, Metadata, Row, TableDocument};
use crate::spec::parse_unit_range;
use crate::Failure;

fn options(max_terms: Option<usize>) -> Result<EvalOptions, Failure> {
    let mut o = EvalOptions::default();
    if let Some(n) = max_terms {
        o = o.with_max_terms(n);
    }
    o.validate()?;
    Ok(o)
}

fn io_error(path: &Path, e: io::Error) -> Failure {
    Failure::runtime(format!("{}: {e}", path.display()))
}

/// τ-major; rows are computed in parallel and collected in order.
pub fn evaluate_grid(spec: &SeriesSpec, taus: &[f64], phis: &[f64], opts: &EvalOptions) -> Result<Vec<Row>, Failure> {
    let n = phis.len();
    (0..taus.len() * n)
        .into_par_iter()
        .map(|i| {
            let (t, p) = (taus[i / n], phis[i % n]);
            spec.evaluate(t, p, opts)
                .map(|v| Row::new(t, p, v))
                .map_err(|e| Failure::from(e).with_context(format!("at tau = {t}, phi = {p}")))
        })
        .collect()
}

impl Failure {
    fn with_context(self, ctx: String) -> Self {
        Self { message: format!("{}, {ctx}", self.message), ..self }
    }
}

fn open_output(path: Option<&PathBuf>) -> Result<Box<dyn Write>, Failure> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p).map_err(|e| io_error(p, e))?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn finish(w: &mut dyn Write, r: io::Result<()>, path: Option<&PathBuf>) -> Result<(), Failure> {
    let where_ = |e: io::Error| match path {
        Some(p) => io_error(p, e),
        None => Failure::runtime(format!("stdout: {e}")),
    };
    r.map_err(where_)?;
    w.flush().map_err(where_)
}

pub fn eval(a: &EvalArgs, max_terms: Option<usize>) -> Result<u8, Failure> {
    let opts = options(max_terms)?;
    let spec = a.spec.build()?;
    let (taus, phis) = a.grid.points()?;
    let rows = evaluate_grid(&spec, &taus, &phis, &opts)?;
    let mut w = open_output(a.output.as_ref())?;
    let r = match a.format {
        Format::Csv => write_csv(&mut w, &rows, a.with_version),
        Format::Json => write_json(&mut w, &EvalDocument { metadata: Metadata::new(spec, a.with_version), data: rows }),
    };
    finish(&mut w, r, a.output.as_ref())?;
    Ok(0)
}

/// The k column of the long table: k itself on the discrete series and the
/// new class, the complex k = -1/2 + iλ or the real k = γ - 1/2 otherwise.
fn k_label(spec: &SeriesSpec) -> String {
    match spec {
        SeriesSpec::Discrete(s) => s.k.to_string(),
        SeriesSpec::NewClass(s) => s.k.to_string(),
        SeriesSpec::Principal(s) => format!("-0.5+{}i", s.lambda),
        SeriesSpec::Supplementary(s) => (s.gamma - 0.5).to_string(),
    }
}

fn file_stem(spec: &SeriesSpec) -> String {
    match spec {
        SeriesSpec::Discrete(s) => {
            let name = if s.m > 0.0 { "dplus" } else { "dminus" };
            format!("{name}_k{}_m{}", s.k, s.m)
        }
        SeriesSpec::NewClass(s) => {
            let sign = if s.weight() < 0.0 { "minus" } else { "plus" };
            format!("newclass_{sign}_k{}", s.k)
        }
        SeriesSpec::Principal(s) => format!("principal_{:?}_lambda{}_m{}", s.family, s.lambda, s.m).to_lowercase(),
        SeriesSpec::Supplementary(s) => {
            format!("supplementary_{:?}_gamma{}_m{}", s.parity, s.gamma, s.m).to_lowercase()
        }
    }
}

pub fn table(a: &TableArgs, max_terms: Option<usize>) -> Result<u8, Failure> {
    let opts = options(max_terms)?;
    let specs = match (&a.m_range, &a.k_range) {
        (Some(r), _) => parse_unit_range(r)?.into_iter().map(|m| a.spec.build_with(None, Some(m))).collect(),
        (None, Some(r)) => parse_unit_range(r)?.into_iter().map(|k| a.spec.build_with(Some(k), None)).collect(),
        (None, None) => Err(Failure::usage("table needs --m-range or --k-range")),
    };
    let specs: Vec<SeriesSpec> = specs?;
    let (taus, phis) = a.grid.points()?;
    let blocks = specs
        .iter()
        .map(|s| evaluate_grid(s, &taus, &phis, &opts).map(|rows| (*s, rows)))
        .collect::<Result<Vec<(SeriesSpec, Vec<Row>)>, Failure>>()?;

    if a.split {
        fs::create_dir_all(&a.output).map_err(|e| io_error(&a.output, e))?;
        let ext = match a.format {
            Format::Csv => "csv",
            Format::Json => "json",
        };
        for (spec, rows) in blocks {
            let path = a.output.join(format!("{}.{ext}", file_stem(&spec)));
            let mut w = open_output(Some(&path))?;
            let r = match a.format {
                Format::Csv => write_csv(&mut w, &rows, a.with_version),
                Format::Json => {
                    write_json(&mut w, &EvalDocument { metadata: Metadata::new(spec, a.with_version), data: rows })
                }
            };
            finish(&mut w, r, Some(&path))?;
        }
        return Ok(0);
    }

    let out = Some(&a.output);
    let mut w = open_output(out)?;
    let r = match a.format {
        Format::Csv => {
            let long: Vec<_> = blocks.into_iter().map(|(s, rows)| (k_label(&s), s.weight(), rows)).collect();
            write_long_csv(&mut w, &long, a.with_version)
        }
        Format::Json => {
            let functions = blocks
                .into_iter()
                .map(|(spec, data)| EvalDocument { metadata: Metadata::new(spec, false), data })
                .collect();
            let version = a.with_version.then(|| env!("CARGO_PKG_VERSION").to_string());
            write_json(&mut w, &TableDocument { version, functions })
        }
    };
    finish(&mut w, r, out)?;
    Ok(0)
}

#[derive(Debug, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Serialize)]
pub struct VerifySuiteResult {
    pub suite: &'static str,
    pub seed: u64,
    pub tolerances: Tolerances,
    pub summary: Summary,
    pub exit_code: u8,
    pub reports: Vec<VerifyReport>,
}

fn tolerances(a: &VerifyArgs) -> Result<Tolerances, Failure> {
    let mut t = Tolerances::default();
    let overrides = [
        ("--tol-eigen", a.tol_eigen, &mut t.eigen),
        ("--tol-k3", a.tol_k3, &mut t.k3),
        ("--tol-ladder", a.tol_ladder, &mut t.ladder),
        ("--tol-annihilate", a.tol_annihilate, &mut t.annihilate),
        ("--tol-recurrence", a.tol_recurrence, &mut t.recurrence),
        ("--tol-route", a.tol_route, &mut t.route),
        ("--tol-route-fd", a.tol_route_fd, &mut t.route_fd),
        ("--tol-closed-form", a.tol_closed_form, &mut t.closed_form),
        ("--tol-identity", a.tol_identity, &mut t.identity),
        ("--tol-ode", a.tol_ode, &mut t.ode),
        ("--tol-joining", a.tol_joining, &mut t.joining),
        ("--tol-divergence", a.tol_divergence, &mut t.divergence),
        ("--tol-orthonormality", a.tol_orthonormality, &mut t.orthonormality),
        ("--tol-norm", a.tol_norm, &mut t.norm_constant),
        ("--tol-asymptotic-principal", a.tol_asymptotic_principal, &mut t.asymptotic_principal),
        ("--tol-asymptotic-supplementary", a.tol_asymptotic_supplementary, &mut t.asymptotic_supplementary),
        ("--tol-hyp2f1", a.tol_hyp2f1, &mut t.hyp2f1),
    ];
    for (flag, v, slot) in overrides {
        if let Some(v) = v {
            if !(v.is_finite() && v > 0.0) {
                return Err(Failure::usage(format!("{flag} must be finite and > 0, got {v}")));
            }
            *slot = v;
        }
    }
    Ok(t)
}

fn suite(s: SuiteArg) -> Suite {
    match s {
        SuiteArg::All => Suite::All,
        SuiteArg::Discrete => Suite::Discrete,
        SuiteArg::Continuous => Suite::Continuous,
        SuiteArg::Newclass => Suite::NewClass,
        SuiteArg::Numerics => Suite::Numerics,
    }
}

fn write_text(w: &mut impl Write, res: &VerifySuiteResult) -> io::Result<()> {
    for r in res.reports.iter().filter(|r| !r.pass) {
        writeln!(w, "FAIL {}: residual {:e} > tolerance {:e}", r.name, r.residual, r.tolerance)?;
    }
    let s = &res.summary;
    let verdict = if s.failed == 0 { "ok" } else { "FAILED" };
    writeln!(w, "suite {}: {} checks, {} passed, {} failed: {verdict}", res.suite, s.total, s.passed, s.failed)
}

pub fn verify(a: &VerifyArgs, max_terms: Option<usize>) -> Result<u8, Failure> {
    let opts = options(max_terms)?;
    let tol = tolerances(a)?;
    let suite = suite(a.suite);
    let seed = a.seed.unwrap_or(CATALOG_SEED);
    let reports: Vec<VerifyReport> = catalog(suite, seed).par_iter().map(|r| r.check(&opts, &tol)).collect();
    let passed = reports.iter().filter(|r| r.pass).count();
    let failed = reports.len() - passed;
    let res = VerifySuiteResult {
        suite: suite.name(),
        seed,
        tolerances: tol,
        summary: Summary { total: reports.len(), passed, failed },
        exit_code: u8::from(failed > 0),
        reports,
    };
    if let Some(p) = &a.report {
        let mut w = open_output(Some(p))?;
        let r = write_json(&mut w, &res);
        finish(&mut w, r, Some(p))?;
    }
    let mut w = open_output(None)?;
    let r = match a.format {
        ReportFormat::Text => write_text(&mut w, &res),
        ReportFormat::Json => write_json(&mut w, &res),
    };
    finish(&mut w, r, None)?;
    Ok(res.exit_code)
}
