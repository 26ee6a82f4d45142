//! Turning command-line flags into library specs and grids.

use hyperwave_core::continuous::{Parity, PrincipalFamily, PrincipalSpec, SupplementarySpec};
use hyperwave_core::discrete::DiscreteSpec;
use hyperwave_core::newclass::{NewClassSpec, WeightSign};
use hyperwave_core::SeriesSpec;

use crate::args::{GridArgs, ParityArg, Series, SeriesArgs, SignArg};
use crate::Failure;

/// `3`, `-1/2`, `0.5`
pub fn parse_rational(s: &str) -> Result<f64, Failure> {
    let bad = || Failure::usage(format!("`{s}` is not a number or a fraction p/q"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.trim().parse().map_err(|_| bad())?;
            let q: i64 = q.trim().parse().map_err(|_| bad())?;
            if q <= 0 {
                return Err(bad());
            }
            Ok(p as f64 / q as f64)
        }
        None => {
            let v: f64 = s.trim().parse().map_err(|_| bad())?;
            if v.is_finite() {
                Ok(v)
            } else {
                Err(bad())
            }
        }
    }
}

fn required<T>(v: Option<T>, flag: &str, series: &str) -> Result<T, Failure> {
    v.ok_or_else(|| Failure::usage(format!("{series} needs --{flag}")))
}

fn integer(v: f64, what: &str) -> Result<i64, Failure> {
    if v.fract() != 0.0 {
        return Err(Failure::usage(format!("{what} must be an integer, got {v}")));
    }
    Ok(v as i64)
}

impl SeriesArgs {
    pub fn k_value(&self) -> Result<Option<f64>, Failure> {
        self.k.as_deref().map(parse_rational).transpose()
    }

    pub fn m_value(&self) -> Result<Option<f64>, Failure> {
        if let Some(h) = self.m_half {
            return Ok(Some(h as f64 / 2.0));
        }
        self.m.as_deref().map(parse_rational).transpose()
    }

    /// The `SeriesSpec` with k and m overridden, as used by table ranges.
    pub fn build_with(&self, k: Option<f64>, m: Option<f64>) -> Result<SeriesSpec, Failure> {
        let k = k.or(self.k_value()?);
        let m = m.or(self.m_value()?);
        let spec: SeriesSpec = match self.series {
            Series::Dplus => DiscreteSpec::dplus(required(k, "k", "D+")?, required(m, "m", "D+")?)?.into(),
            Series::Dminus => DiscreteSpec::dminus(required(k, "k", "D-")?, required(m, "m", "D-")?)?.into(),
            Series::Principal => {
                let family = match (self.seq, self.parity) {
                    (Some(1), None) => PrincipalFamily::Seq1,
                    (Some(_), None) => PrincipalFamily::Seq2,
                    (None, Some(ParityArg::Even)) => PrincipalFamily::EvenRaw,
                    (None, Some(ParityArg::Odd)) => PrincipalFamily::OddRaw,
                    (Some(_), Some(_)) => return Err(Failure::usage("give either --seq or --parity, not both")),
                    (None, None) => {
                        return Err(Failure::usage("the principal series needs --seq 1|2 or --parity even|odd"))
                    }
                };
                let lambda = required(self.lambda, "lambda", "the principal series")?;
                PrincipalSpec::new(lambda, required(m, "m", "the principal series")?, family)?.into()
            }
            Series::Supplementary => {
                let parity = match required(self.parity, "parity", "the supplementary series")? {
                    ParityArg::Even => Parity::Even,
                    ParityArg::Odd => Parity::Odd,
                };
                let gamma = required(self.gamma, "gamma", "the supplementary series")?;
                let m = integer(required(m, "m", "the supplementary series")?, "m")?;
                SupplementarySpec::new(gamma, m, parity)?.into()
            }
            Series::Newclass => {
                let k = required(k, "k", "the new class")?;
                if k < 0.0 || k.fract() != 0.0 {
                    return Err(Failure::usage(format!("the new class requires integer k >= 0, got {k}")));
                }
                let sign = match self.sign.unwrap_or(SignArg::Plus) {
                    SignArg::Plus => WeightSign::Plus,
                    SignArg::Minus => WeightSign::Minus,
                };
                let s = NewClassSpec::new(k as u32)
                    .with_constants(self.alpha.unwrap_or(0.0), self.beta.unwrap_or(1.0))
                    .with_sign(sign);
                s.validate()?;
                s.into()
            }
        };
        Ok(spec)
    }

    pub fn build(&self) -> Result<SeriesSpec, Failure> {
        self.build_with(None, None)
    }
}

/// START:END:COUNT with the endpoints included.
pub fn parse_range(s: &str) -> Result<Vec<f64>, Failure> {
    let parts: Vec<&str> = s.split(':').collect();
    let bad = |why: &str| Failure::usage(format!("range `{s}`: {why}"));
    if parts.len() != 3 {
        return Err(bad("expected START:END:COUNT"));
    }
    let a: f64 = parts[0].trim().parse().map_err(|_| bad("START is not a number"))?;
    let b: f64 = parts[1].trim().parse().map_err(|_| bad("END is not a number"))?;
    let n: usize = parts[2].trim().parse().map_err(|_| bad("COUNT is not a positive integer"))?;
    if !(a.is_finite() && b.is_finite()) {
        return Err(bad("endpoints must be finite"));
    }
    if n == 0 {
        return Err(bad("COUNT must be at least 1"));
    }
    if n == 1 {
        return Ok(vec![a]);
    }
    let h = (b - a) / (n - 1) as f64;
    Ok((0..n).map(|j| if j + 1 == n { b } else { a + h * j as f64 }).collect())
}

/// START:END in unit steps, rational endpoints allowed.
pub fn parse_unit_range(s: &str) -> Result<Vec<f64>, Failure> {
    let (a, b) = s.split_once(':').ok_or_else(|| Failure::usage(format!("range `{s}`: expected START:END")))?;
    let (a, b) = (parse_rational(a)?, parse_rational(b)?);
    if b < a || (b - a).fract() != 0.0 {
        return Err(Failure::usage(format!("range `{s}`: END - START must be a nonnegative integer")));
    }
    Ok((0..=(b - a) as usize).map(|j| a + j as f64).collect())
}

impl GridArgs {
    pub fn points(&self) -> Result<(Vec<f64>, Vec<f64>), Failure> {
        let taus = match &self.tau_range {
            Some(r) => parse_range(r)?,
            None => self.tau.clone(),
        };
        if taus.is_empty() {
            return Err(Failure::usage("no τ values: give --tau or --tau-range"));
        }
        let phis = match &self.phi_range {
            Some(r) => parse_range(r)?,
            None if self.phi.is_empty() => vec![0.0],
            None => self.phi.clone(),
        };
        if taus.iter().chain(&phis).any(|v| !v.is_finite()) {
            return Err(Failure::usage("grid values must be finite"));
        }
        Ok((taus, phis))
    }
}
