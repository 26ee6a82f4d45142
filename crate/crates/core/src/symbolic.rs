//! Exact derivatives of expressions built from powers of x, of 1 + x², and of
//! w = √(1+x²) + x raised to ±iλ.
//!
//! A term is `c · x^p · (1+x²)^{q/4} · w^{iελ}` with ε ∈ {-1, 0, 1}. Using
//! dw/dx = w / √(1+x²) the derivative of a term is again a sum of such terms:
//!
//! ```text
//! d/dx  x^p (1+x²)^s w^{iελ} = p x^{p-1} (1+x²)^s w^{iελ}
//!                            + 2s x^{p+1} (1+x²)^{s-1} w^{iελ}
//!                            + iελ x^p (1+x²)^{s-1/2} w^{iελ}
//! ```
//!
//! so repeated differentiation is a recurrence on the coefficient table.

use std::collections::BTreeMap;

use num_complex::Complex64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct Key {
    /// power of x
    p: u32,
    /// power of 1 + x², in quarters
    q: i32,
    /// sign of the exponent of w
    eps: i8,
}

/// Finite linear combination of power terms, closed under d/dx.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerExpr {
    lambda: f64,
    terms: BTreeMap<Key, Complex64>,
}

impl PowerExpr {
    pub fn zero(lambda: f64) -> Self {
        Self { lambda, terms: BTreeMap::new() }
    }

    /// `coeff · x^p · (1+x²)^{quarters/4} · w^{iελ}`.
    pub fn term(coeff: Complex64, p: u32, quarters: i32, eps: i8, lambda: f64) -> Self {
        assert!((-1..=1).contains(&eps), "eps must be -1, 0 or 1");
        let mut e = Self::zero(lambda);
        e.push(Key { p, q: quarters, eps }, coeff);
        e
    }

    /// (1 + x²)^{quarters/4}.
    pub fn one_plus_x2_pow(quarters: i32) -> Self {
        Self::term(Complex64::new(1.0, 0.0), 0, quarters, 0, 0.0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn push(&mut self, key: Key, c: Complex64) {
        if c == Complex64::new(0.0, 0.0) {
            return;
        }
        let e = self.terms.entry(key).or_insert(Complex64::new(0.0, 0.0));
        *e += c;
        if *e == Complex64::new(0.0, 0.0) {
            self.terms.remove(&key);
        }
    }

    pub fn add(mut self, other: &Self) -> Self {
        if self.terms.is_empty() {
            self.lambda = other.lambda;
        }
        for (&k, &c) in &other.terms {
            self.push(k, c);
        }
        self
    }

    pub fn scale(mut self, s: Complex64) -> Self {
        for c in self.terms.values_mut() {
            *c *= s;
        }
        self.terms.retain(|_, c| *c != Complex64::new(0.0, 0.0));
        self
    }

    /// Multiply every term by (1+x²)^{quarters/4}.
    pub fn times_one_plus_x2_pow(self, quarters: i32) -> Self {
        let lambda = self.lambda;
        let mut out = Self::zero(lambda);
        for (k, c) in self.terms {
            out.push(Key { q: k.q + quarters, ..k }, c);
        }
        out
    }

    pub fn derivative(&self) -> Self {
        let mut out = Self::zero(self.lambda);
        for (&k, &c) in &self.terms {
            if k.p > 0 {
                out.push(Key { p: k.p - 1, ..k }, c * k.p as f64);
            }
            if k.q != 0 {
                out.push(Key { p: k.p + 1, q: k.q - 4, eps: k.eps }, c * (k.q as f64 / 2.0));
            }
            if k.eps != 0 {
                let f = Complex64::new(0.0, k.eps as f64 * self.lambda);
                out.push(Key { q: k.q - 2, ..k }, c * f);
            }
        }
        out
    }

    pub fn nth_derivative(&self, n: usize) -> Self {
        let mut e = self.clone();
        for _ in 0..n {
            e = e.derivative();
        }
        e
    }

    pub fn eval(&self, x: f64) -> Complex64 {
        let ln1p = x.mul_add(x, 0.0).ln_1p();
        let asinh = x.asinh();
        let mut acc = Complex64::new(0.0, 0.0);
        for (&k, &c) in &self.terms {
            let mag = x.powi(k.p as i32) * (k.q as f64 / 4.0 * ln1p).exp();
            let phase = Complex64::from_polar(1.0, k.eps as f64 * self.lambda * asinh);
            acc += c * mag * phase;
        }
        acc
    }
}
