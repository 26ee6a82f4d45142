//! Integer- and half-integer-weight principal-series functions through ₂F₁,
//! and the integer-weight ladder sequences through their explicit finite sums.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::{check_lambda, check_weight, cosh_factor, nonneg_integer, sign, y_half, Parity, Sequence};
use crate::discrete::ln_cosh;
use crate::error::{domain, Error, Result};
use crate::numerics::sum::ComplexSum;
use crate::numerics::{gamma, gamma_magnitude_sq, gauss_2f1, gauss_2f1_at, ln_gamma, ln_gamma_real, rgamma, GammaArg, Hyp2F1Params};
use crate::options::EvalOptions;

/// Offset of the first ₂F₁ parameter and the value of c for each parity.
fn parity_shift(parity: Parity) -> f64 {
    match parity {
        Parity::Even => 0.5,
        Parity::Odd => 1.5,
    }
}

/// |Γ(½(m+s+iλ)) Γ(½(-m+s+iλ))| / |Γ(iλ)|
fn gamma_ratio(m: f64, lambda: f64, s: f64) -> Result<f64> {
    let z1 = Complex64::new(0.5 * (m + s), 0.5 * lambda);
    let z2 = Complex64::new(0.5 * (-m + s), 0.5 * lambda);
    let num = gamma_magnitude_sq(GammaArg::General(z1))? * gamma_magnitude_sq(GammaArg::General(z2))?;
    let den = gamma_magnitude_sq(GammaArg::Imag(lambda))?;
    Ok((num / den).sqrt())
}

/// |ĉ_{mλ}| = |Γ(½(m+½+iλ)) Γ(½(-m+½+iλ))| / (2√2 π^{3/2} |Γ(iλ)|).
pub fn norm_even(m: f64, lambda: f64) -> Result<f64> {
    check_lambda(lambda)?;
    check_weight(m)?;
    Ok(gamma_ratio(m, lambda, 0.5)? / (2.0 * 2f64.sqrt() * PI.powf(1.5)))
}

/// |c̄_{mλ}| = |Γ(½(m+3/2+iλ)) Γ(½(-m+3/2+iλ))| / (√2 π^{3/2} |Γ(iλ)|).
pub fn norm_odd(m: f64, lambda: f64) -> Result<f64> {
    check_lambda(lambda)?;
    check_weight(m)?;
    Ok(gamma_ratio(m, lambda, 1.5)? / (2f64.sqrt() * PI.powf(1.5)))
}

fn phase_table(parity: Parity, m: u32) -> f64 {
    let e = match (parity, m % 2 == 0) {
        (_, true) => m / 2,
        (Parity::Even, false) => (m + 1) / 2,
        (Parity::Odd, false) => (m - 1) / 2,
    };
    sign(e)
}

/// ĉ_m: (-1)^{m/2} for even m, (-1)^{(m+1)/2} for odd m.
pub fn phase_even(m: f64) -> Result<Complex64> {
    Ok(phase_table(Parity::Even, nonneg_integer(m)?).into())
}

/// c̄_m: (-1)^{m/2} for even m, (-1)^{(m-1)/2} for odd m.
pub fn phase_odd(m: f64) -> Result<Complex64> {
    Ok(phase_table(Parity::Odd, nonneg_integer(m)?).into())
}

/// Phase of the raw function at any weight: the table at l = ⌊|m|⌋, times
/// (-1)^l for negative m so that Y^{-m} = (-1)^l [Y^m]*.
fn raw_phase(parity: Parity, m: f64) -> f64 {
    let l = m.abs().floor() as u32;
    let p = phase_table(parity, l);
    if m < 0.0 {
        p * sign(l)
    } else {
        p
    }
}

/// |Â₁| of the even family or |Ā₁| of the odd family: the large-τ amplitude of the
/// unnormalized ₂F₁ profile.
pub fn asymptotic_amplitude(parity: Parity, m: f64, lambda: f64) -> Result<f64> {
    check_lambda(lambda)?;
    check_weight(m)?;
    let s = parity_shift(parity);
    let pre = match parity {
        Parity::Even => PI.sqrt(),
        Parity::Odd => 0.5 * PI.sqrt(),
    };
    let g = gamma(Complex64::new(0.0, -lambda))?;
    let r1 = rgamma(Complex64::new(0.5 * (-m + s), -0.5 * lambda))?;
    let r2 = rgamma(Complex64::new(0.5 * (m + s), -0.5 * lambda))?;
    Ok(pre * (g * r1 * r2).norm())
}

/// Ŷ^m_λ or Ȳ^m_λ, normalized and phased, for any integer or half-integer m.
pub fn y_principal_raw(parity: Parity, m: f64, lambda: f64, tau: f64, phi: f64, opts: &EvalOptions) -> Result<Complex64> {
    check_lambda(lambda)?;
    check_weight(m)?;
    if !tau.is_finite() {
        return Err(Error::NonFinite("tau"));
    }
    let s = parity_shift(parity);
    let norm = match parity {
        Parity::Even => norm_even(m, lambda)?,
        Parity::Odd => norm_odd(m, lambda)?,
    };
    let t = tau.tanh();
    let p = Hyp2F1Params::new(
        Complex64::new(0.5 * (m + s), 0.5 * lambda),
        Complex64::new(0.5 * (-m + s), 0.5 * lambda),
        s.into(),
        t * t,
    );
    let f = gauss_2f1_at(p, (-2.0 * ln_cosh(tau)).exp(), opts)?;
    let mut radial = cosh_factor(tau, lambda) * f;
    if parity == Parity::Odd {
        radial *= t;
    }
    Ok(Complex64::from_polar(norm * raw_phase(parity, m), m * phi) * radial)
}

/// 1 / ∏_{r=1}^m √(((2r-1)/2)² + λ²).
pub fn z_factor(m: u32, lambda: f64) -> f64 {
    let mut p = 1.0;
    for r in 1..=m {
        let h = r as f64 - 0.5;
        p *= (h * h + lambda * lambda).sqrt();
    }
    1.0 / p
}

/// The same factor as 2^{-m} |Γ(½(-m+s+iλ))| / |Γ(½(m+s+iλ))| with s = 1/2 or 3/2.
pub fn z_factor_ratio(m: u32, lambda: f64, s: f64) -> Result<f64> {
    if s != 0.5 && s != 1.5 {
        return Err(domain(format!("the gamma-ratio form exists for s = 1/2 or 3/2, got {s}")));
    }
    let m = m as f64;
    let lo = ln_gamma(Complex64::new(0.5 * (-m + s), 0.5 * lambda))?.re;
    let hi = ln_gamma(Complex64::new(0.5 * (m + s), 0.5 * lambda))?.re;
    Ok((lo - hi - m * std::f64::consts::LN_2).exp())
}

/// Shared shape of the finite sums: returns (number of x-powers above 2r, a₀, c₀).
fn sum_shape(seq: Sequence, m: u32) -> (u32, f64, f64) {
    match seq {
        Sequence::One => (m, 0.25, 0.5),
        Sequence::Two => (m + 1, 0.75, 1.5),
    }
}

/// log of |Γ(a+m-r)|² / (r! j! Γ(c₀+m-r)) with a = a₀ + iλ/2.
fn log_sum_weight(a0: f64, c0: f64, lambda: f64, m: u32, r: u32, j: u32) -> Result<f64> {
    let mr = (m - r) as f64;
    let g = ln_gamma(Complex64::new(a0 + mr, 0.5 * lambda))?.re;
    Ok(2.0 * g - ln_gamma_real(r as f64 + 1.0)? - ln_gamma_real(j as f64 + 1.0)? - ln_gamma_real(c0 + mr)?)
}

fn ln_abs_gamma_imag(lambda: f64) -> Result<f64> {
    Ok(0.5 * gamma_magnitude_sq(GammaArg::Imag(lambda))?.ln())
}

/// Y₁^m_λ or Y₂^m_λ for m = 0, 1, 2, … from the finite sums over r of
/// (2 tanh τ)^{j-2r} |Γ(a+m-r)|² / Γ(c₀+m-r) · ₂F₁(a+m-r, a; c₀+m-r; tanh²τ).
pub fn y_seq(seq: Sequence, m: u32, lambda: f64, tau: f64, phi: f64, opts: &EvalOptions) -> Result<Complex64> {
    check_lambda(lambda)?;
    if !tau.is_finite() {
        return Err(Error::NonFinite("tau"));
    }
    let (top, a0, c0) = sum_shape(seq, m);
    let a = Complex64::new(a0, 0.5 * lambda);
    let t = tau.tanh();
    let w = (-2.0 * ln_cosh(tau)).exp();
    let mut sum = ComplexSum::default();
    for r in 0..=top / 2 {
        let j = top - 2 * r;
        let mr = (m - r) as f64;
        let f = gauss_2f1_at(Hyp2F1Params::new(a + mr, a, (c0 + mr).into(), t * t), w, opts)?;
        let c = sign(r) * log_sum_weight(a0, c0, lambda, m, r, j)?.exp() * (2.0 * t).powi(j as i32);
        sum.add(f * c);
    }
    let (lead, den) = match seq {
        Sequence::One => (ln_gamma_real(m as f64 + 1.0)?, 2.0 * 2f64.sqrt() * PI),
        Sequence::Two => (ln_gamma_real(m as f64 + 2.0)?, 4.0 * 2f64.sqrt() * PI),
    };
    let pre = (lead - ln_abs_gamma_imag(lambda)?).exp() * z_factor(m, lambda) / den;
    let v = Complex64::from_polar(pre, m as f64 * phi) * cosh_factor(tau, lambda) * sum.value();
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFinite("principal-series sum"))
    }
}

/// P₁^m_λ(x) (sequence one) or P₂^m_λ(x) (sequence two) from the sums in
/// ₂F₁(a+m-r, ā+m-r; c₀+m-r; -x²).
fn legendre_sum(seq: Sequence, m: u32, lambda: f64, x: f64, opts: &EvalOptions) -> Result<Complex64> {
    check_lambda(lambda)?;
    if !x.is_finite() {
        return Err(Error::NonFinite("x"));
    }
    let (top, a0, c0) = sum_shape(seq, m);
    let a = Complex64::new(a0, 0.5 * lambda);
    let ln1p = (x * x).ln_1p();
    let mut sum = ComplexSum::default();
    for r in 0..=top / 2 {
        let j = top - 2 * r;
        let mr = (m - r) as f64;
        let f = gauss_2f1(Hyp2F1Params::new(a + mr, a.conj() + mr, (c0 + mr).into(), -x * x), opts)?;
        let lw = log_sum_weight(a0, c0, lambda, m, r, j)? + 0.5 * m as f64 * ln1p;
        sum.add(f * (sign(r) * lw.exp() * (2.0 * x).powi(j as i32)));
    }
    let (lead, den) = match seq {
        Sequence::One => (ln_gamma_real(m as f64 + 1.0)?, 1.0),
        Sequence::Two => (ln_gamma_real(m as f64 + 2.0)?, 4.0),
    };
    let pre = PI.sqrt() * (lead - ln_abs_gamma_imag(lambda)?).exp() / den;
    let v = sum.value() * pre;
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFinite("Legendre analogue"))
    }
}

/// P₁^m_λ(x), with Y₁^m_λ = Z^m_λ/(2√2 π^{3/2}) e^{imφ} P₁^m_λ(sinh τ).
pub fn legendre_p1(m: u32, lambda: f64, x: f64, opts: &EvalOptions) -> Result<Complex64> {
    legendre_sum(Sequence::One, m, lambda, x, opts)
}

/// P₂^m_λ(x), with Y₂^m_λ = Z^m_λ/(√2 π^{3/2}) e^{imφ} P₂^m_λ(sinh τ).
pub fn legendre_p2(m: u32, lambda: f64, x: f64, opts: &EvalOptions) -> Result<Complex64> {
    legendre_sum(Sequence::Two, m, lambda, x, opts)
}

/// Y^{m}_λ for m < 0 as (-1)^l [Y^{-m}_λ]* with l = ⌊-m⌋.
pub fn y_principal_negative(seq: Sequence, m: f64, lambda: f64, tau: f64, phi: f64, opts: &EvalOptions) -> Result<Complex64> {
    check_weight(m)?;
    if !(m < 0.0) {
        return Err(domain(format!("negative-weight evaluation requires m < 0, got {m}")));
    }
    let l = (-m).floor() as u32;
    let v = if m.fract() == 0.0 {
        y_seq(seq, l, lambda, tau, phi, opts)?
    } else {
        y_half(seq, l, lambda, tau, phi)?
    };
    Ok(v.conj() * sign(l))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::continuous::{Parity, Sequence};

    fn opts() -> EvalOptions {
        EvalOptions::default()
    }

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol * b.norm().max(1e-300)
    }

    #[test]
    fn norms_against_independent_values() {
        // high-precision evaluations of the Γ expressions
        assert!((norm_even(0.0, 1.0).unwrap() - 0.240_414_308_270_700_44).abs() < 1e-14);
        assert!((norm_odd(0.0, 2.0).unwrap() - 0.441_691_101_573_711_3).abs() < 1e-14);
        assert!((asymptotic_amplitude(Parity::Even, 0.0, 1.0).unwrap() - 0.468_106_662_740_395_54).abs() < 1e-14);
        assert!(norm_even(0.0, 0.0).is_err());
        assert!(norm_odd(1.0, -1.0).is_err());
    }

    #[test]
    fn half_weight_norm_is_elementary() {
        let expect = 1.0 / (2f64.sqrt() * PI);
        for lambda in [0.3, 1.0, 2.5, 6.0] {
            assert!((norm_even(0.5, lambda).unwrap() - expect).abs() < 1e-13 * expect);
            // the odd ₂F₁ profile carries 1/λ, so the constant itself is λ/(√2π)
            assert!((norm_odd(0.5, lambda).unwrap() - lambda * expect).abs() < 1e-13 * lambda * expect);
        }
    }

    #[test]
    fn norm_times_amplitude() {
        for parity in [Parity::Even, Parity::Odd] {
            for m in [0.0, 1.0, 2.5, 4.0, -3.0] {
                for lambda in [0.4, 1.0, 3.0] {
                    let c = match parity {
                        Parity::Even => norm_even(m, lambda).unwrap(),
                        Parity::Odd => norm_odd(m, lambda).unwrap(),
                    };
                    let a = asymptotic_amplitude(parity, m, lambda).unwrap();
                    assert!((8.0 * PI * PI * a * a * c * c - 1.0).abs() < 1e-12, "{parity:?} m={m} λ={lambda}");
                }
            }
        }
    }

    #[test]
    fn phase_tables() {
        let re = |c: Complex64| c.re;
        assert_eq!(re(phase_even(0.0).unwrap()), 1.0);
        assert_eq!(re(phase_even(1.0).unwrap()), -1.0);
        assert_eq!(re(phase_even(2.0).unwrap()), -1.0);
        assert_eq!(re(phase_even(3.0).unwrap()), 1.0);
        assert_eq!(re(phase_odd(1.0).unwrap()), 1.0);
        assert_eq!(re(phase_odd(3.0).unwrap()), -1.0);
        assert!(phase_even(-1.0).is_err());
        assert!(phase_odd(0.5).is_err());
    }

    #[test]
    fn raw_examples() {
        let o = opts();
        for m in [0.0, 1.0, 2.5] {
            assert_eq!(y_principal_raw(Parity::Odd, m, 1.3, 0.0, 0.4, &o).unwrap().norm(), 0.0);
        }
        let v = y_principal_raw(Parity::Even, 0.5, 1.0, 0.0, 0.0, &o).unwrap();
        assert!(close(v, Complex64::new(1.0 / (2f64.sqrt() * PI), 0.0), 1e-14));
        // independent high-precision value of Ŷ⁰₁(0.6, 0)
        let v = y_principal_raw(Parity::Even, 0.0, 1.0, 0.6, 0.0, &o).unwrap();
        assert!(close(v, Complex64::new(0.191_152_945_412_732_94, 0.0), 1e-13));
    }

    #[test]
    fn raw_matches_pfaff_vacuum_form() {
        // Ŷ⁰_λ = |ĉ| ₂F₁(a, ā; ½; -sinh²τ) with a = ¼ + iλ/2
        let o = opts();
        for (lambda, tau) in [(1.0, 0.6), (0.5, -1.4), (2.0, 2.5)] {
            let a = Complex64::new(0.25, 0.5 * lambda);
            let x = f64::sinh(tau);
            let f = gauss_2f1(Hyp2F1Params::new(a, a.conj(), 0.5.into(), -x * x), &o).unwrap();
            let alt = f * norm_even(0.0, lambda).unwrap();
            let v = y_principal_raw(Parity::Even, 0.0, lambda, tau, 0.0, &o).unwrap();
            assert!(close(v, alt, 1e-10), "{v} vs {alt}");
        }
    }

    #[test]
    fn raw_profiles_are_real_and_have_parity() {
        let o = opts();
        for parity in [Parity::Even, Parity::Odd] {
            for m in [0.0, 1.0, 1.5, 3.0, -2.0] {
                for tau in [0.3, 1.7, 6.0] {
                    let a = y_principal_raw(parity, m, 0.8, tau, 0.0, &o).unwrap();
                    let b = y_principal_raw(parity, m, 0.8, -tau, 0.0, &o).unwrap();
                    assert!(a.im.abs() < 1e-13 * a.norm().max(1e-3), "{a}");
                    let s = if parity == Parity::Even { 1.0 } else { -1.0 };
                    assert!((a - b * s).norm() < 1e-12, "{parity:?} m={m} τ={tau}");
                }
            }
        }
    }

    #[test]
    fn z_factor_examples_and_ratios() {
        assert_eq!(z_factor(0, 1.0), 1.0);
        assert!((z_factor(1, 1.0) - 2.0 / 5f64.sqrt()).abs() < 1e-15);
        assert!((z_factor(2, 1.0) - 4.0 / 65f64.sqrt()).abs() < 1e-15);
        for m in 0..8 {
            for lambda in [0.2, 1.3, 4.0] {
                let z = z_factor(m, lambda);
                for s in [0.5, 1.5] {
                    let r = z_factor_ratio(m, lambda, s).unwrap();
                    assert!((r - z).abs() < 1e-12 * z, "m={m} λ={lambda} s={s}");
                }
            }
        }
        assert!(z_factor_ratio(1, 1.0, 1.0).is_err());
    }

    #[test]
    fn sequences_interleave_raw_families() {
        let o = opts();
        for seq in [Sequence::One, Sequence::Two] {
            for m in 0..7u32 {
                for (tau, phi) in [(0.0, 0.0), (0.7, 0.3), (-2.2, 1.9), (3.0, -0.5)] {
                    let a = y_seq(seq, m, 0.9, tau, phi, &o).unwrap();
                    let b = y_principal_raw(seq.parity_at(m), m as f64, 0.9, tau, phi, &o).unwrap();
                    assert!((a - b).norm() < 1e-9 * b.norm().max(1.0), "{seq:?} m={m} τ={tau}: {a} vs {b}");
                }
            }
        }
    }

    #[test]
    fn sequence_examples() {
        let o = opts();
        let v = y_seq(Sequence::One, 2, 1.0, 0.5, 0.0, &o).unwrap();
        assert!(close(v, Complex64::new(-0.066_893_946_038_695_607, 0.0), 1e-12));
        let v = y_seq(Sequence::Two, 1, 1.0, 0.5, 0.0, &o).unwrap();
        assert!(close(v, Complex64::new(-0.140_121_257_603_158_09, 0.0), 1e-12));
        assert_eq!(y_seq(Sequence::Two, 0, 1.0, 0.0, 0.0, &o).unwrap().norm(), 0.0);
    }

    #[test]
    fn legendre_analogues_reconstruct_sequences() {
        let o = opts();
        let lambda = 1.0;
        let p = legendre_p1(0, lambda, 0.0, &o).unwrap();
        let expect = gamma_magnitude_sq(GammaArg::General(Complex64::new(0.25, 0.5))).unwrap()
            / gamma_magnitude_sq(GammaArg::Imag(1.0)).unwrap().sqrt();
        assert!(close(p, Complex64::new(expect, 0.0), 1e-13));
        assert_eq!(legendre_p2(0, lambda, 0.0, &o).unwrap().norm(), 0.0);
        for m in 0..6u32 {
            for tau in [-1.5, 0.4, 2.0] {
                let x = f64::sinh(tau);
                let z = z_factor(m, lambda);
                let y1 = y_seq(Sequence::One, m, lambda, tau, 0.0, &o).unwrap();
                let p1 = legendre_p1(m, lambda, x, &o).unwrap() * z / (2.0 * 2f64.sqrt() * PI.powf(1.5));
                assert!((y1 - p1).norm() < 1e-10 * y1.norm().max(1.0), "P1 m={m} τ={tau}");
                let y2 = y_seq(Sequence::Two, m, lambda, tau, 0.0, &o).unwrap();
                let p2 = legendre_p2(m, lambda, x, &o).unwrap() * z / (2f64.sqrt() * PI.powf(1.5));
                assert!((y2 - p2).norm() < 1e-10 * y2.norm().max(1.0), "P2 m={m} τ={tau}");
            }
        }
    }

    #[test]
    fn negative_weights() {
        let o = opts();
        let (tau, phi) = (0.5, 0.7);
        let a = y_principal_negative(Sequence::Two, -1.0, 1.0, tau, phi, &o).unwrap();
        let b = -y_seq(Sequence::Two, 1, 1.0, tau, phi, &o).unwrap().conj();
        assert_eq!(a, b);
        let v = y_principal_negative(Sequence::One, -2.0, 1.3, 0.8, 0.0, &o).unwrap();
        assert!(v.im.abs() < 1e-15);
        // against the raw ₂F₁ at negative m
        for seq in [Sequence::One, Sequence::Two] {
            for m in [-1.0, -2.0, -3.0, -4.0, -0.5, -1.5, -2.5] {
                let a = y_principal_negative(seq, m, 1.1, 1.2, 0.4, &o).unwrap();
                let l = (-m as f64).floor() as u32;
                let b = y_principal_raw(seq.parity_at(l), m, 1.1, 1.2, 0.4, &o).unwrap();
                assert!((a - b).norm() < 1e-9, "{seq:?} m={m}: {a} vs {b}");
            }
        }
        assert!(y_principal_negative(Sequence::One, 1.0, 1.0, 0.0, 0.0, &o).is_err());
    }

    #[test]
    fn large_tau_is_finite() {
        let o = opts();
        for tau in [12.0, 25.0, 40.0] {
            for m in [0u32, 1, 4] {
                let a = y_seq(Sequence::One, m, 1.0, tau, 0.0, &o).unwrap();
                let b = y_principal_raw(Sequence::One.parity_at(m), m as f64, 1.0, tau, 0.0, &o).unwrap();
                assert!((a - b).norm() < 1e-9 * b.norm().max(1e-6), "m={m} τ={tau}: {a} vs {b}");
            }
        }
    }
}
