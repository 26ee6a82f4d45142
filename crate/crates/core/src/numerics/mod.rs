//! Special-function kernel: log-gamma, |Γ|² closed forms and Gauss ₂F₁.

pub mod gamma;
pub mod hyp2f1;
pub(crate) mod sum;

pub use gamma::{
    gamma, gamma_magnitude_sq, gamma_real, generalized_double_factorial_ratio, ln_gamma, ln_gamma_real, rgamma,
    GammaArg,
};
pub use hyp2f1::{
    continuation_coefficients, gauss_2f1, gauss_2f1_at, gauss_2f1_continued, gauss_2f1_deriv, gauss_2f1_pfaff, gauss_2f1_series,
    Hyp2F1Params,
};

/// Alias of [`ln_gamma`].
pub use gamma::ln_gamma as log_gamma_complex;
