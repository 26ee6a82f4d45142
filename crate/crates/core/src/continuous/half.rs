//! Half-integer weights m = l + 1/2, generated from the elementary vacua
//! cos λτ / √cosh τ and sin λτ / √cosh τ.
//!
//! ```text
//! T^l_λ(x) = (-1)^l (1+x²)^{(2l+1)/4} d^l/dx^l (1+x²)^{-1/2} [w^{iλ} + w^{-iλ}]
//! U^l_λ(x) = (-1)^l (1+x²)^{(2l+1)/4} d^l/dx^l (1+x²)^{-1/2} [w^{iλ} - w^{-iλ}]
//! ```
//!
//! with w = √(1+x²) + x, so that w^{-1} = √(1+x²) - x.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::{check_lambda, sign, Sequence};
use crate::error::{Error, Result};
use crate::symbolic::PowerExpr;

fn bracket_expr(l: u32, lambda: f64, minus: bool) -> PowerExpr {
    let one = Complex64::new(1.0, 0.0);
    let other = if minus { -one } else { one };
    PowerExpr::term(one, 0, -2, 1, lambda)
        .add(&PowerExpr::term(other, 0, -2, -1, lambda))
        .nth_derivative(l as usize)
        .times_one_plus_x2_pow(2 * l as i32 + 1)
        .scale(sign(l).into())
}

pub fn legendre_t(l: u32, lambda: f64, x: f64) -> Complex64 {
    bracket_expr(l, lambda, false).eval(x)
}

pub fn legendre_u(l: u32, lambda: f64, x: f64) -> Complex64 {
    bracket_expr(l, lambda, true).eval(x)
}

/// 1 / ∏_{r=1}^l √(r² + λ²).
pub fn z_factor_half(l: u32, lambda: f64) -> f64 {
    let mut p = 1.0;
    for r in 1..=l {
        let r = r as f64;
        p *= (r * r + lambda * lambda).sqrt();
    }
    1.0 / p
}

/// Y₁ or Y₂ with weight l + 1/2.
pub fn y_half(seq: Sequence, l: u32, lambda: f64, tau: f64, phi: f64) -> Result<Complex64> {
    check_lambda(lambda)?;
    let x = tau.sinh();
    if !x.is_finite() {
        return Err(Error::NonFinite("sinh tau"));
    }
    let z = z_factor_half(l, lambda) / (2.0 * 2f64.sqrt() * PI);
    let radial = match seq {
        Sequence::One => legendre_t(l, lambda, x),
        Sequence::Two => legendre_u(l, lambda, x) / Complex64::new(0.0, 1.0),
    };
    Ok(Complex64::from_polar(z, (l as f64 + 0.5) * phi) * radial)
}
