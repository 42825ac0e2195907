//! Complex polynomial arithmetic in double precision.
//!
//! Two representations are used throughout the crate:
//!
//! * [`Polynomial`] — a coefficient vector `c_0..c_d` indexed by the power
//!   of `z`, evaluated by Horner's rule;
//! * [`RootForm`] — `z^s · leading · Π_j (z − b_j)`, which keeps the zero
//!   locations exact and stays relatively accurate near its own zeros.
//!
//! [`RootForm::expand`] converts root form to coefficients by multiplying
//! one linear factor at a time, which bounds the rounding growth for the
//! degrees this crate works at (capped at 64 in the test configuration).

use num_complex::Complex64;

use crate::error::{Error, Result};

/// A polynomial with complex coefficients, index = power of `z`.
///
/// The zero polynomial is the empty coefficient list; any other value keeps
/// its highest-index coefficient nonzero.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<Complex64>,
}

impl Polynomial {
    /// Builds a polynomial, trimming trailing exact zeros.
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        let mut p = Polynomial { coeffs };
        p.trim();
        p
    }

    /// The identically zero polynomial.
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    /// The constant polynomial `c`.
    pub fn constant(c: Complex64) -> Self {
        Self::new(vec![c])
    }

    /// `z^n`.
    pub fn monomial(n: usize) -> Self {
        let mut coeffs = vec![Complex64::new(0.0, 0.0); n + 1];
        coeffs[n] = Complex64::new(1.0, 0.0);
        Polynomial { coeffs }
    }

    fn trim(&mut self) {
        while let Some(last) = self.coeffs.last() {
            if last.re == 0.0 && last.im == 0.0 {
                self.coeffs.pop();
            } else {
                break;
            }
        }
    }

    /// Coefficients `c_0..c_d`; empty for the zero polynomial.
    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Index of the last nonzero coefficient; `None` is the "minus infinity"
    /// degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Horner evaluation of `Σ c_j z^j`.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    /// Coefficient-rule derivative: `j·c_j` shifted down one index.
    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, &c)| c * (j as f64))
            .collect();
        Polynomial::new(coeffs)
    }

    /// Multiplies by the linear factor `(z − b)` in place.
    pub fn mul_linear(&mut self, b: Complex64) {
        if self.is_zero() {
            return;
        }
        let mut out = vec![Complex64::new(0.0, 0.0); self.coeffs.len() + 1];
        for (j, &c) in self.coeffs.iter().enumerate() {
            out[j + 1] += c;
            out[j] -= c * b;
        }
        self.coeffs = out;
        self.trim();
    }

}

/// `q(z) = z^n · conj(p(1/z̄))`: coefficient reversal up to index `n`
/// with conjugation.
pub fn conj_reciprocal(p: &Polynomial, n: usize) -> Result<Polynomial> {
    if let Some(d) = p.degree() {
        if d > n {
            return Err(Error::DegreeExceedsBound { degree: d, bound: n });
        }
    }
    let mut coeffs = vec![Complex64::new(0.0, 0.0); n + 1];
    for (j, &c) in p.coeffs().iter().enumerate() {
        coeffs[n - j] = c.conj();
    }
    Ok(Polynomial::new(coeffs))
}

/// Polar derivative `D_α p = n·p + (α − z)·p′`, a polynomial of degree
/// at most `n − 1` when `deg p ≤ n`.
///
/// It recovers the ordinary derivative in the limit: `(D_α p)(z)/α → p′(z)`
/// as `|α| → ∞`.
pub fn polar_derivative(p: &Polynomial, n: usize, alpha: Complex64) -> Result<Polynomial> {
    if let Some(d) = p.degree() {
        if d > n {
            return Err(Error::DegreeExceedsBound { degree: d, bound: n });
        }
    }
    let dp = p.derivative();
    // n·p + α·p′ − z·p′, assembled coefficient-wise. The z^n coefficient of
    // n·p and of z·p′ are the identical product n·c_n, so they cancel exactly.
    let len = (n + 1).max(1);
    let mut coeffs = vec![Complex64::new(0.0, 0.0); len];
    for (j, &c) in p.coeffs().iter().enumerate() {
        coeffs[j] += c * (n as f64);
    }
    for (j, &c) in dp.coeffs().iter().enumerate() {
        coeffs[j] += alpha * c;
        coeffs[j + 1] -= c;
    }
    Ok(Polynomial::new(coeffs))
}

/// `z^s · leading · Π_j (z − b_j)`.
///
/// `leading = 0` degenerates to the identically zero function; every bound
/// hypothesis rejects that case, but evaluation still works.
#[derive(Debug, Clone, PartialEq)]
pub struct RootForm {
    leading: Complex64,
    roots: Vec<Complex64>,
    origin_order: usize,
}

impl RootForm {
    pub fn new(leading: Complex64, roots: Vec<Complex64>, origin_order: usize) -> Self {
        RootForm {
            leading,
            roots,
            origin_order,
        }
    }

    /// The constant `c` (no zeros).
    pub fn constant(c: Complex64) -> Self {
        Self::new(c, Vec::new(), 0)
    }

    pub fn leading(&self) -> Complex64 {
        self.leading
    }

    /// The zeros away from the origin.
    pub fn roots(&self) -> &[Complex64] {
        &self.roots
    }

    /// Multiplicity `s` of the zero at the origin.
    pub fn origin_order(&self) -> usize {
        self.origin_order
    }

    /// Total zero count `s + |roots|`, which is also the degree.
    pub fn zero_count(&self) -> usize {
        self.origin_order + self.roots.len()
    }

    pub fn is_zero_fn(&self) -> bool {
        self.leading.re == 0.0 && self.leading.im == 0.0
    }

    /// Evaluates the product directly, without expanding.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = self.leading;
        for _ in 0..self.origin_order {
            acc *= z;
        }
        for &b in &self.roots {
            acc *= z - b;
        }
        acc
    }

    /// Coefficient form, built by incremental convolution: one linear
    /// factor at a time, then the `z^s` shift.
    pub fn expand(&self) -> Polynomial {
        if self.is_zero_fn() {
            return Polynomial::zero();
        }
        let mut p = Polynomial::constant(self.leading);
        for &b in &self.roots {
            p.mul_linear(b);
        }
        if self.origin_order > 0 {
            let mut coeffs = vec![Complex64::new(0.0, 0.0); self.origin_order];
            coeffs.extend_from_slice(p.coeffs());
            p = Polynomial::new(coeffs);
        }
        p
    }

    /// Derivative via the expanded coefficient form.
    pub fn derivative_poly(&self) -> Polynomial {
        self.expand().derivative()
    }

    /// `p′(z)/p(z) = s/z + Σ_j 1/(z − b_j)`, the logarithmic derivative of
    /// the factorization. Callers keep `z` away from the zeros.
    pub fn log_derivative(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        if self.origin_order > 0 {
            acc += (self.origin_order as f64) / z;
        }
        for &b in &self.roots {
            acc += (z - b).inv();
        }
        acc
    }
}
