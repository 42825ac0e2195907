//! Rational functions `r = p/w` with prescribed poles outside the unit
//! circle, and the Blaschke product `B = w*/w` attached to the pole set.
//!
//! All values are immutable after construction and every operation is a
//! pure function, so they can be shared and moved across threads freely.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::poly::{Polynomial, RootForm};

/// Constructor margin: poles must satisfy `|a| > 1 + POLE_MARGIN`.
pub const POLE_MARGIN: f64 = 1e-12;

/// Absolute distance below which evaluation refuses to approach a pole.
pub const POLE_PROXIMITY: f64 = 1e-12;

/// Distance from a numerator zero below which the derivative switches from
/// the log-derivative product form to the expanded quotient rule.
const ZERO_SWITCH: f64 = 1e-9;

/// The prescribed poles `a_1..a_n`, all strictly outside the closed unit
/// disk, defining `w(z) = Π (z − a_j)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PoleSet {
    poles: Vec<Complex64>,
}

impl PoleSet {
    /// Rejects any pole with `|a| ≤ 1 + 1e-12`.
    pub fn new(poles: Vec<Complex64>) -> Result<Self> {
        for &a in &poles {
            if a.norm() <= 1.0 + POLE_MARGIN {
                return Err(Error::PoleInsideUnitCircle { pole: a });
            }
        }
        Ok(PoleSet { poles })
    }

    /// An empty pole set (`w ≡ 1`, `B ≡ 1`).
    pub fn empty() -> Self {
        PoleSet { poles: Vec::new() }
    }

    pub fn poles(&self) -> &[Complex64] {
        &self.poles
    }

    /// Number of poles `n`, the degree of `w`.
    pub fn n(&self) -> usize {
        self.poles.len()
    }

    /// `w(z) = Π (z − a_j)` as a product.
    pub fn eval_w(&self, z: Complex64) -> Complex64 {
        self.poles
            .iter()
            .fold(Complex64::new(1.0, 0.0), |acc, &a| acc * (z - a))
    }

    /// `w′(z)/w(z) = Σ 1/(z − a_j)`.
    pub fn log_derivative_w(&self, z: Complex64) -> Complex64 {
        self.poles
            .iter()
            .map(|&a| (z - a).inv())
            .sum()
    }

    /// `w` in coefficient form.
    pub fn w_poly(&self) -> Polynomial {
        RootForm::new(Complex64::new(1.0, 0.0), self.poles.clone(), 0).expand()
    }

    /// Distance from `z` to the nearest pole (`f64::INFINITY` when empty).
    pub fn distance_to_poles(&self, z: Complex64) -> f64 {
        self.poles
            .iter()
            .map(|&a| (z - a).norm())
            .fold(f64::INFINITY, f64::min)
    }

    fn guard_proximity(&self, z: Complex64) -> Result<()> {
        for &a in &self.poles {
            let dist = (z - a).norm();
            if dist <= POLE_PROXIMITY {
                return Err(Error::PoleProximity { z, pole: a, dist });
            }
        }
        Ok(())
    }
}

/// The Blaschke product `B(z) = w*(z)/w(z) = Π (1 − ā_j z)/(z − a_j)`,
/// unimodular on the unit circle.
#[derive(Debug, Clone, PartialEq)]
pub struct Blaschke {
    poles: PoleSet,
}

impl Blaschke {
    pub fn new(poles: PoleSet) -> Self {
        Blaschke { poles }
    }

    pub fn poles(&self) -> &PoleSet {
        &self.poles
    }

    pub fn n(&self) -> usize {
        self.poles.n()
    }

    /// `Π (1 − ā_j z)/(z − a_j)`; the empty product is 1.
    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        self.poles.guard_proximity(z)?;
        let mut acc = Complex64::new(1.0, 0.0);
        for &a in self.poles.poles() {
            acc *= (Complex64::new(1.0, 0.0) - a.conj() * z) / (z - a);
        }
        Ok(acc)
    }

    /// `B′(z)`, assembled factor by factor: each Blaschke factor has
    /// derivative `(|a_j|² − 1)/(z − a_j)²`, so
    /// `B′ = Σ_j (|a_j|² − 1)/(z − a_j)² · Π_{i≠j} (1 − ā_i z)/(z − a_i)`.
    ///
    /// Unlike `B · Σ_j [−ā_j/(1 − ā_j z) − 1/(z − a_j)]` this form stays
    /// finite at the zeros of `B`, while agreeing with it everywhere both
    /// are defined.
    pub fn eval_prime(&self, z: Complex64) -> Result<Complex64> {
        self.poles.guard_proximity(z)?;
        let poles = self.poles.poles();
        let mut sum = Complex64::new(0.0, 0.0);
        for (j, &aj) in poles.iter().enumerate() {
            let mut term = (aj.norm_sqr() - 1.0) / ((z - aj) * (z - aj));
            for (i, &ai) in poles.iter().enumerate() {
                if i != j {
                    term *= (Complex64::new(1.0, 0.0) - ai.conj() * z) / (z - ai);
                }
            }
            sum += term;
        }
        Ok(sum)
    }

    /// `|B′(z)|` for `|z| = 1`, via the real closed form
    /// `Σ_j (|a_j|² − 1)/|z − a_j|²`.
    pub fn abs_prime_on_circle(&self, z: Complex64) -> Result<f64> {
        guard_on_circle(z, 1.0)?;
        Ok(self
            .poles
            .poles()
            .iter()
            .map(|&a| (a.norm_sqr() - 1.0) / (z - a).norm_sqr())
            .sum())
    }
}

fn guard_on_circle(z: Complex64, radius: f64) -> Result<()> {
    if (z.norm() - radius).abs() > 1e-10 {
        return Err(Error::OffCircle { z, radius });
    }
    Ok(())
}

/// A rational function `r = numerator / w` with at most as many zeros as
/// poles, tagged with the zero-radius bound `k ∈ (0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalFn {
    numerator: RootForm,
    poles: PoleSet,
    k: f64,
    // cached coefficient forms for the quotient-rule derivative path
    num_poly: Polynomial,
    num_poly_deriv: Polynomial,
    w_poly: Polynomial,
    w_poly_deriv: Polynomial,
}

impl RationalFn {
    /// Builds an admissible instance: `m ≤ n`, `k ∈ (0, 1]`, and every
    /// numerator zero inside the closed radius-`k` disk.
    pub fn new(numerator: RootForm, poles: PoleSet, k: f64) -> Result<Self> {
        let r = Self::with_free_zeros(numerator, poles, k)?;
        if let Some(&bad) = r
            .numerator
            .roots()
            .iter()
            .find(|b| b.norm() > k + 1e-12)
        {
            return Err(Error::ZeroOutsideDisk { zero: bad, k });
        }
        Ok(r)
    }

    /// Like [`RationalFn::new`] but without the zero-location check, for
    /// instances that deliberately violate a hypothesis. `m ≤ n` and the
    /// pole restriction still hold.
    pub fn with_free_zeros(numerator: RootForm, poles: PoleSet, k: f64) -> Result<Self> {
        if !(k > 0.0 && k <= 1.0) {
            return Err(Error::InvalidZeroRadius { k });
        }
        let m = numerator.zero_count();
        if m > poles.n() {
            return Err(Error::TooManyZeros {
                zeros: m,
                poles: poles.n(),
            });
        }
        let num_poly = numerator.expand();
        let num_poly_deriv = num_poly.derivative();
        let w_poly = poles.w_poly();
        let w_poly_deriv = w_poly.derivative();
        Ok(RationalFn {
            numerator,
            poles,
            k,
            num_poly,
            num_poly_deriv,
            w_poly,
            w_poly_deriv,
        })
    }

    pub fn numerator(&self) -> &RootForm {
        &self.numerator
    }

    pub fn poles(&self) -> &PoleSet {
        &self.poles
    }

    pub fn blaschke(&self) -> Blaschke {
        Blaschke::new(self.poles.clone())
    }

    /// Zero-radius bound `k`.
    pub fn k(&self) -> f64 {
        self.k
    }

    /// Total zero count `m = s + |roots|`.
    pub fn m(&self) -> usize {
        self.numerator.zero_count()
    }

    /// Order `s` of the zero at the origin.
    pub fn s(&self) -> usize {
        self.numerator.origin_order()
    }

    /// Pole count `n`.
    pub fn n(&self) -> usize {
        self.poles.n()
    }

    /// Whether every zero sits inside the closed radius-`k` disk.
    pub fn is_admissible(&self) -> bool {
        self.numerator
            .roots()
            .iter()
            .all(|b| b.norm() <= self.k + 1e-12)
    }

    /// The numerator in coefficient form (cached at construction).
    pub fn numerator_poly(&self) -> &Polynomial {
        &self.num_poly
    }

    /// Derivative of the numerator at `z`, from the cached coefficients.
    pub fn numerator_derivative_at(&self, z: Complex64) -> Complex64 {
        self.num_poly_deriv.eval(z)
    }

    /// Distance from `z` to the nearest zero of the numerator.
    pub fn distance_to_zeros(&self, z: Complex64) -> f64 {
        let mut d = f64::INFINITY;
        if self.numerator.origin_order() > 0 {
            d = z.norm();
        }
        for &b in self.numerator.roots() {
            d = d.min((z - b).norm());
        }
        d
    }

    /// `r(z) = numerator(z)/w(z)`.
    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        self.poles.guard_proximity(z)?;
        Ok(self.numerator.eval(z) / self.poles.eval_w(z))
    }

    /// `r′(z)`, picking the product form away from the numerator zeros and
    /// the expanded quotient rule next to them (where the log-derivative
    /// sum degenerates).
    pub fn derivative(&self, z: Complex64) -> Result<Complex64> {
        if self.numerator.is_zero_fn() {
            self.poles.guard_proximity(z)?;
            return Ok(Complex64::new(0.0, 0.0));
        }
        if self.distance_to_zeros(z) > ZERO_SWITCH {
            self.derivative_product_form(z)
        } else {
            self.derivative_quotient_form(z)
        }
    }

    /// `r′ = r · [s/z + Σ 1/(z − b_j) − Σ 1/(z − a_j)]`: the logarithmic
    /// derivative of the factorization times the value.
    pub fn derivative_product_form(&self, z: Complex64) -> Result<Complex64> {
        self.poles.guard_proximity(z)?;
        let r = self.numerator.eval(z) / self.poles.eval_w(z);
        Ok(r * (self.numerator.log_derivative(z) - self.poles.log_derivative_w(z)))
    }

    /// `r′ = (p′w − pw′)/w²` on the cached coefficient forms.
    pub fn derivative_quotient_form(&self, z: Complex64) -> Result<Complex64> {
        self.poles.guard_proximity(z)?;
        let w = self.w_poly.eval(z);
        let num = self.num_poly_deriv.eval(z) * w - self.num_poly.eval(z) * self.w_poly_deriv.eval(z);
        Ok(num / (w * w))
    }

    /// The conjugate transform `r*(z) = B(z) · conj(r(1/z̄))`.
    pub fn star(&self, z: Complex64) -> Result<Complex64> {
        if z.norm() < POLE_PROXIMITY {
            return Err(Error::ZeroArgument);
        }
        let zi = z.conj().inv();
        let b = Blaschke::new(self.poles.clone()).eval(z)?;
        let r = self.eval(zi)?;
        Ok(b * r.conj())
    }

    /// `(r*)′(z) = B′(z)·conj(r(1/z̄)) − B(z)·conj(r′(1/z̄))/z²`, for `z`
    /// on the unit circle (where `1/z̄ = z`).
    pub fn star_derivative(&self, z: Complex64) -> Result<Complex64> {
        guard_on_circle(z, 1.0)?;
        if z.norm() < POLE_PROXIMITY {
            return Err(Error::ZeroArgument);
        }
        let zi = z.conj().inv();
        let blaschke = Blaschke::new(self.poles.clone());
        let b = blaschke.eval(z)?;
        let bp = blaschke.eval_prime(z)?;
        let r = self.eval(zi)?;
        let rp = self.derivative(zi)?;
        Ok(bp * r.conj() - b * rp.conj() / (z * z))
    }
}
