//! The inequality catalog: right-hand-side evaluators, hypothesis
//! predicates, and pointwise margins for every bound the crate verifies,
//! plus the standalone lemma identities they rest on.
//!
//! Each [`BoundKind`] names one inequality. For the lower bounds the
//! comparison reads `|r′(z)| ≥ F(z) · M` where `F` is [`rhs_factor`] and
//! `M` is `|r(z)|`, `|r(z)| + m′`, or a sup-norm depending on the kind; the
//! three upper bounds read `≤`. Margins always store `lhs − rhs`;
//! [`Margin::slack`] flips the sign for upper bounds so that nonnegative
//! slack uniformly means "satisfied".
//!
//! Right-hand sides are computed from exact instance metadata (`m`, `s`,
//! `k`, `|b_j|`, `|c_s|`, `|c_m|`) — never re-estimated numerically.

use num_complex::Complex64;
use serde::Serialize;

use crate::circle::{min_on_circle, sup_on_circle, DEFAULT_GRID, DEFAULT_TOL};
use crate::error::{Error, Result};
use crate::poly::RootForm;
use crate::rational::{PoleSet, RationalFn};

/// Hypothesis slack on zero-location checks, absorbing constructor rounding.
const HYP_EPS: f64 = 1e-12;

/// Identifies one inequality of the catalog.
///
/// The names are the stable identifiers used by the CLI `--kinds` flag and
/// in reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[allow(non_camel_case_types)]
pub enum BoundKind {
    /// `‖p′‖ ≤ n·‖p‖` for any polynomial of degree `n`.
    Bernstein_1_1,
    /// `‖p′‖ ≤ (n/2)·‖p‖` when no zero lies inside the open unit disk.
    ErdosLax_1_2,
    /// `‖p′‖ ≥ (n/2)·‖p‖` when all zeros lie in the closed unit disk.
    Turan_1_3,
    /// `|r′(z)| ≤ |B′(z)|·‖r‖` for any `r` with the prescribed poles.
    LMR_2_1,
    /// `|r′(z)| ≥ ½|B′(z)|·‖r‖` — the sup-norm reading, as printed without
    /// a zero-location hypothesis. Reported, never counted as a violation.
    LMR_2_2_supnorm,
    /// `|r′(z)| ≥ ½|B′(z)|·|r(z)|` for exactly `n` zeros in the closed
    /// unit disk — the pointwise reading. Reported, never counted as a
    /// violation.
    LMR_2_2_pointwise,
    /// `|r′(z)| ≥ ½|B′(z)|·(|r(z)| + m′)`, `m′ = min_{|z|=1}|r|`, for
    /// exactly `n` zeros in the closed unit disk. With `m < n` the factor
    /// `½|B′|` is not attainable (the `Thm3_2` reduction only recovers it
    /// at `m = n`), so full degree is part of the hypothesis.
    Thm2_1,
    /// `|r′(z)| ≥ ½{|B′(z)| − (n(1+k) − 2m)/(1+k)}·|r(z)|` for zeros in the
    /// closed radius-`k` disk.
    Thm2_2,
    /// `|r′(z)| ≥ ½{|B′(z)| − n + 2(m+sk)/(1+k)}·|r(z)|`, refining `Thm2_2`
    /// with the order-`s` origin zero.
    Thm2_3,
    /// `|r′(z)| ≥ ½{|B′(z)| − n + 2(m+sk)/(1+k)
    ///   + 2(Σ_j 1/(1+|b_j|) − (m−s)/(1+k))}·|r(z)|`.
    Thm3_1,
    /// The `m = n` case of `Thm3_1`, written with the
    /// `(n(1−k) + 2sk)/(1+k)` middle term.
    Cor3_1,
    /// `Thm3_1` with the zero sum collapsed into the coefficient ratio
    /// `(k^m|c_m| − |c_s|)/(k^m|c_m| + |c_s|)`, exponent `m` as printed.
    Cor3_2,
    /// `Cor3_2` with exponent `m − s`, matching the product `Π|b_j|/k` over
    /// the `m − s` non-origin zeros. Dominates the printed form.
    Cor3_2_exponent_fixed,
    /// The `s = 0` view of `Cor3_2`: all zeros (origin included) treated as
    /// ordinary, ratio against the constant coefficient `c_0`.
    Cor3_3,
    /// Polynomial consequence: `|p′(z)| ≥ (n/(k+1))·{1 + sk/n +
    /// (k/n)·(k^n|c_n| − |c_s|)/(k^n|c_n| + |c_s|)}·|p(z)|`.
    Cor3_4,
    /// `|r′(z)| ≥ ½[|B′(z)| + (n(1−k) − 2m)/(1+k)
    ///   + 2(Σ_{all zeros} 1/(1+|b_j|) − (n−m)/(1+k))]·(|r(z)| + m′)`,
    /// `m′ = min_{|z|=k}|r|`.
    ///
    /// Evaluated exactly as printed, and printed it is falsifiable: the
    /// supporting argument perturbs `r` by `αm′`, whose zeros are not the
    /// zeros of `r` the sum ranges over (see
    /// [`thm32_supported_factor`](crate::bounds::thm32_supported_factor)
    /// for the version the perturbation argument does give). Failures are
    /// therefore reported, never counted as violations.
    Thm3_2,
}

/// Whether a kind is a lower or an upper bound on the derivative.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Lower,
    Upper,
}

impl BoundKind {
    pub const ALL: [BoundKind; 16] = [
        BoundKind::Bernstein_1_1,
        BoundKind::ErdosLax_1_2,
        BoundKind::Turan_1_3,
        BoundKind::LMR_2_1,
        BoundKind::LMR_2_2_supnorm,
        BoundKind::LMR_2_2_pointwise,
        BoundKind::Thm2_1,
        BoundKind::Thm2_2,
        BoundKind::Thm2_3,
        BoundKind::Thm3_1,
        BoundKind::Cor3_1,
        BoundKind::Cor3_2,
        BoundKind::Cor3_2_exponent_fixed,
        BoundKind::Cor3_3,
        BoundKind::Cor3_4,
        BoundKind::Thm3_2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BoundKind::Bernstein_1_1 => "Bernstein_1_1",
            BoundKind::ErdosLax_1_2 => "ErdosLax_1_2",
            BoundKind::Turan_1_3 => "Turan_1_3",
            BoundKind::LMR_2_1 => "LMR_2_1",
            BoundKind::LMR_2_2_supnorm => "LMR_2_2_supnorm",
            BoundKind::LMR_2_2_pointwise => "LMR_2_2_pointwise",
            BoundKind::Thm2_1 => "Thm2_1",
            BoundKind::Thm2_2 => "Thm2_2",
            BoundKind::Thm2_3 => "Thm2_3",
            BoundKind::Thm3_1 => "Thm3_1",
            BoundKind::Cor3_1 => "Cor3_1",
            BoundKind::Cor3_2 => "Cor3_2",
            BoundKind::Cor3_2_exponent_fixed => "Cor3_2_exponent_fixed",
            BoundKind::Cor3_3 => "Cor3_3",
            BoundKind::Cor3_4 => "Cor3_4",
            BoundKind::Thm3_2 => "Thm3_2",
        }
    }

    pub fn from_name(name: &str) -> Option<BoundKind> {
        BoundKind::ALL.iter().copied().find(|k| k.name() == name)
    }

    pub fn direction(self) -> Direction {
        match self {
            BoundKind::Bernstein_1_1 | BoundKind::ErdosLax_1_2 | BoundKind::LMR_2_1 => {
                Direction::Upper
            }
            _ => Direction::Lower,
        }
    }

    /// Kinds that operate on the numerator polynomial alone.
    pub fn is_polynomial(self) -> bool {
        matches!(
            self,
            BoundKind::Bernstein_1_1
                | BoundKind::ErdosLax_1_2
                | BoundKind::Turan_1_3
                | BoundKind::Cor3_4
        )
    }

    /// Kinds whose two sides are sup-norms, constant along the circle.
    pub fn is_norm_level(self) -> bool {
        matches!(
            self,
            BoundKind::Bernstein_1_1 | BoundKind::ErdosLax_1_2 | BoundKind::Turan_1_3
        )
    }

    /// Which min-modulus radius the kind consumes, if any.
    pub fn min_modulus_radius(self) -> Option<MinModulusRadius> {
        match self {
            BoundKind::Thm2_1 => Some(MinModulusRadius::Unit),
            BoundKind::Thm3_2 => Some(MinModulusRadius::ZeroRadius),
            _ => None,
        }
    }

    /// Whether a failed check counts as a verification violation.
    ///
    /// Three kinds are surveyed and reported but never counted: the two
    /// readings of the `LMR_2_2` statement (printed with no zero-location
    /// hypothesis) and `Thm3_2` (printed with a zero sum its own
    /// perturbation argument does not deliver; see the variant doc).
    pub fn counted(self) -> bool {
        !matches!(
            self,
            BoundKind::LMR_2_2_supnorm | BoundKind::LMR_2_2_pointwise | BoundKind::Thm3_2
        )
    }
}

impl std::fmt::Display for BoundKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for BoundKind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        BoundKind::from_name(s).ok_or_else(|| {
            let valid: Vec<&str> = BoundKind::ALL.iter().map(|k| k.name()).collect();
            format!("unknown kind `{s}`; valid kinds: {}", valid.join(", "))
        })
    }
}

impl Serialize for BoundKind {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(self.name())
    }
}

/// The circle on which a kind takes its min-modulus term `m′`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinModulusRadius {
    /// `|z| = 1`
    Unit,
    /// `|z| = k`
    ZeroRadius,
}

/// Which exponent the coefficient-ratio term uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExponentVariant {
    /// `k^m` (respectively `k^n` for the polynomial bound), as printed.
    Printed,
    /// `k^{m−s}`, the exponent produced by the `Π|b_j|/k` product over the
    /// non-origin zeros.
    Fixed,
}

/// One pointwise comparison: `margin = lhs − rhs` exactly as stored.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Margin {
    pub kind: BoundKind,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    #[serde(serialize_with = "ser_complex")]
    pub at_point: Complex64,
}

fn ser_complex<S: serde::Serializer>(
    z: &Complex64,
    ser: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeTuple;
    let mut t = ser.serialize_tuple(2)?;
    t.serialize_element(&z.re)?;
    t.serialize_element(&z.im)?;
    t.end()
}

impl Margin {
    fn new(kind: BoundKind, lhs: f64, rhs: f64, at_point: Complex64) -> Self {
        Margin {
            kind,
            lhs,
            rhs,
            margin: lhs - rhs,
            at_point,
        }
    }

    /// Direction-adjusted margin: nonnegative means the inequality holds.
    pub fn slack(&self) -> f64 {
        match self.kind.direction() {
            Direction::Lower => self.margin,
            Direction::Upper => -self.margin,
        }
    }

    /// Satisfied up to floating slack `tol·max(1, lhs)`.
    pub fn satisfied(&self, tol: f64) -> bool {
        self.slack() >= -tol * self.lhs.max(1.0)
    }
}

/// Per-instance norm and min-modulus data shared across pointwise checks.
///
/// Built once per instance with [`NormContext::for_kinds`]; the sup-norms
/// are recomputed on demand when absent, but the min-modulus terms must be
/// supplied for the kinds that consume them.
#[derive(Debug, Clone, Default)]
pub struct NormContext {
    /// `‖r‖ = max_{|z|=1} |r|`
    pub sup_r: Option<f64>,
    /// `min_{|z|=1} |r|`
    pub min_r_unit: Option<f64>,
    /// `min_{|z|=k} |r|`
    pub min_r_k: Option<f64>,
    /// `‖p‖` of the numerator
    pub sup_num: Option<f64>,
    /// `‖p′‖` of the numerator derivative
    pub sup_num_prime: Option<f64>,
}

impl NormContext {
    pub fn empty() -> Self {
        NormContext::default()
    }

    /// Computes exactly the norms the given kinds consume, with the default
    /// grid and tolerance.
    pub fn for_kinds(r: &RationalFn, kinds: &[BoundKind]) -> Result<Self> {
        let mut ctx = NormContext::default();
        let needs = |f: fn(BoundKind) -> bool| kinds.iter().copied().any(f);
        if needs(|k| matches!(k, BoundKind::LMR_2_1 | BoundKind::LMR_2_2_supnorm)) {
            ctx.sup_r = Some(sup_r(r)?);
        }
        if needs(|k| k.min_modulus_radius() == Some(MinModulusRadius::Unit)) {
            ctx.min_r_unit = Some(
                min_on_circle(|z| eval_or_nan(r, z), 1.0, DEFAULT_GRID, DEFAULT_TOL)?.value,
            );
        }
        if needs(|k| k.min_modulus_radius() == Some(MinModulusRadius::ZeroRadius)) {
            ctx.min_r_k = Some(
                min_on_circle(|z| eval_or_nan(r, z), r.k(), DEFAULT_GRID, DEFAULT_TOL)?.value,
            );
        }
        if needs(BoundKind::is_norm_level) {
            ctx.sup_num = Some(sup_num(r)?);
            ctx.sup_num_prime = Some(sup_num_prime(r)?);
        }
        Ok(ctx)
    }
}

fn eval_or_nan(r: &RationalFn, z: Complex64) -> Complex64 {
    r.eval(z).unwrap_or(Complex64::new(f64::NAN, 0.0))
}

fn sup_r(r: &RationalFn) -> Result<f64> {
    Ok(sup_on_circle(|z| eval_or_nan(r, z), 1.0, DEFAULT_GRID, DEFAULT_TOL)?.value)
}

fn sup_num(r: &RationalFn) -> Result<f64> {
    Ok(sup_on_circle(|z| r.numerator().eval(z), 1.0, DEFAULT_GRID, DEFAULT_TOL)?.value)
}

fn sup_num_prime(r: &RationalFn) -> Result<f64> {
    Ok(sup_on_circle(
        |z| r.numerator_derivative_at(z),
        1.0,
        DEFAULT_GRID,
        DEFAULT_TOL,
    )?
    .value)
}

fn require_on_circle(z: Complex64) -> Result<()> {
    if (z.norm() - 1.0).abs() > 1e-10 {
        return Err(Error::OffCircle { z, radius: 1.0 });
    }
    Ok(())
}

/// Checks the printed hypothesis of `kind` against the instance.
pub fn hypothesis_holds(kind: BoundKind, r: &RationalFn) -> bool {
    hypothesis_check(kind, r).is_ok()
}

/// Like [`hypothesis_holds`], but says which clause failed.
pub fn hypothesis_check(kind: BoundKind, r: &RationalFn) -> std::result::Result<(), &'static str> {
    if r.numerator().is_zero_fn() {
        return Err("numerator is identically zero");
    }
    let zeros_within = |radius: f64| {
        r.numerator()
            .roots()
            .iter()
            .all(|b| b.norm() <= radius + HYP_EPS)
    };
    match kind {
        BoundKind::Bernstein_1_1 | BoundKind::LMR_2_1 | BoundKind::LMR_2_2_supnorm => Ok(()),
        BoundKind::ErdosLax_1_2 => {
            if r.s() > 0 {
                return Err("zero at the origin lies inside the open unit disk");
            }
            if r.numerator()
                .roots()
                .iter()
                .all(|b| b.norm() >= 1.0 - HYP_EPS)
            {
                Ok(())
            } else {
                Err("a zero lies inside the open unit disk")
            }
        }
        BoundKind::Turan_1_3 => {
            if zeros_within(1.0) {
                Ok(())
            } else {
                Err("a zero lies outside the closed unit disk")
            }
        }
        BoundKind::LMR_2_2_pointwise | BoundKind::Thm2_1 => {
            if !zeros_within(1.0) {
                Err("a zero lies outside the closed unit disk")
            } else if r.m() != r.n() {
                Err("zero count m must equal pole count n")
            } else {
                Ok(())
            }
        }
        BoundKind::Thm2_2
        | BoundKind::Thm2_3
        | BoundKind::Thm3_1
        | BoundKind::Cor3_2
        | BoundKind::Cor3_2_exponent_fixed
        | BoundKind::Cor3_3
        | BoundKind::Thm3_2 => {
            if zeros_within(r.k()) {
                Ok(())
            } else {
                Err("a zero lies outside the radius-k disk")
            }
        }
        BoundKind::Cor3_1 => {
            if !zeros_within(r.k()) {
                Err("a zero lies outside the radius-k disk")
            } else if r.m() != r.n() {
                Err("zero count m must equal pole count n")
            } else {
                Ok(())
            }
        }
        BoundKind::Cor3_4 => {
            if !zeros_within(r.k()) {
                Err("a zero lies outside the radius-k disk")
            } else if r.m() == 0 {
                Err("numerator must have positive degree")
            } else {
                Ok(())
            }
        }
    }
}

fn ratio(x: f64, y: f64) -> f64 {
    (x - y) / (x + y)
}

/// `Σ_j 1/(1 + |b_j|)` over the non-origin zeros.
fn sum_inv_one_plus(r: &RationalFn) -> f64 {
    r.numerator()
        .roots()
        .iter()
        .map(|b| 1.0 / (1.0 + b.norm()))
        .sum()
}

/// `Π_j |b_j|` over the non-origin zeros.
fn prod_abs_roots(r: &RationalFn) -> f64 {
    r.numerator()
        .roots()
        .iter()
        .map(|b| b.norm())
        .product()
}

/// The multiplier `F(z)` of each inequality, from instance metadata and
/// `|B′(z)|` alone.
pub fn rhs_factor(kind: BoundKind, r: &RationalFn, z: Complex64) -> Result<f64> {
    if let Err(reason) = hypothesis_check(kind, r) {
        return Err(Error::HypothesisViolated {
            kind: kind.name(),
            reason,
        });
    }
    require_on_circle(z)?;

    let n = r.n() as f64;
    let m = r.m() as f64;
    let s = r.s() as f64;
    let k = r.k();
    let abs_c_m = r.numerator().leading().norm();

    // degree of the numerator, for the polynomial kinds
    let np = r.m() as f64;

    match kind {
        BoundKind::Bernstein_1_1 => Ok(np),
        BoundKind::ErdosLax_1_2 | BoundKind::Turan_1_3 => Ok(np / 2.0),
        BoundKind::Cor3_4 => {
            let abs_c_s = abs_c_m * prod_abs_roots(r);
            Ok(cor34_factor(
                r.m(),
                r.s(),
                k,
                abs_c_m,
                abs_c_s,
                ExponentVariant::Printed,
            ))
        }
        _ => {
            let abs_bp = r.blaschke().abs_prime_on_circle(z)?;
            match kind {
                BoundKind::LMR_2_1 => Ok(abs_bp),
                BoundKind::LMR_2_2_supnorm
                | BoundKind::LMR_2_2_pointwise
                | BoundKind::Thm2_1 => Ok(0.5 * abs_bp),
                BoundKind::Thm2_2 => {
                    Ok(0.5 * (abs_bp - (n * (1.0 + k) - 2.0 * m) / (1.0 + k)))
                }
                BoundKind::Thm2_3 => {
                    Ok(0.5 * (abs_bp - n + 2.0 * (m + s * k) / (1.0 + k)))
                }
                BoundKind::Thm3_1 => Ok(0.5
                    * (abs_bp - n + 2.0 * (m + s * k) / (1.0 + k)
                        + 2.0 * (sum_inv_one_plus(r) - (m - s) / (1.0 + k)))),
                BoundKind::Cor3_1 => Ok(0.5
                    * (abs_bp + (n * (1.0 - k) + 2.0 * s * k) / (1.0 + k)
                        + 2.0 * (sum_inv_one_plus(r) - (n - s) / (1.0 + k)))),
                BoundKind::Cor3_2 | BoundKind::Cor3_2_exponent_fixed => {
                    let abs_c_s = abs_c_m * prod_abs_roots(r);
                    let exponent = match kind {
                        BoundKind::Cor3_2 => r.m() as i32,
                        _ => (r.m() - r.s()) as i32,
                    };
                    let t = ratio(k.powi(exponent) * abs_c_m, abs_c_s);
                    Ok(0.5
                        * (abs_bp - n
                            + 2.0 * (m + s * k) / (1.0 + k)
                            + 2.0 * k / (k + 1.0) * t))
                }
                BoundKind::Cor3_3 => {
                    // s = 0 view: origin zeros are ordinary zeros, so the
                    // constant coefficient of the full numerator is used.
                    let abs_c_0 = if r.s() > 0 {
                        0.0
                    } else {
                        abs_c_m * prod_abs_roots(r)
                    };
                    let t = ratio(k.powi(r.m() as i32) * abs_c_m, abs_c_0);
                    Ok(0.5 * (abs_bp - n + 2.0 * m / (1.0 + k) + 2.0 * k / (k + 1.0) * t))
                }
                BoundKind::Thm3_2 => {
                    // the zero sum runs over all m zeros; the s origin
                    // zeros contribute 1/(1+0) each
                    let sum_all = s + sum_inv_one_plus(r);
                    Ok(0.5
                        * (abs_bp + (n * (1.0 - k) - 2.0 * m) / (1.0 + k)
                            + 2.0 * (sum_all - (n - m) / (1.0 + k))))
                }
                _ => unreachable!("handled above"),
            }
        }
    }
}

/// The min-modulus lower bound that the `Thm3_2` perturbation argument
/// does support, for numerators of full degree (`m = n`):
/// `|r′(z)| ≥ ½[|B′(z)| + n(1−k)/(1+k)]·(|r(z)| + m′)` with
/// `m′ = min_{|z|=k}|r|`.
///
/// Perturbing `r` by `αm′` keeps all `n` numerator zeros inside the
/// radius-`k` disk, but says nothing about where; this factor uses the
/// worst admissible zero locations `|b_j| = k`. The printed `Thm3_2`
/// instead sums over the unperturbed zeros, which is why it fails
/// numerically while this version holds.
pub fn thm32_supported_factor(r: &RationalFn, z: Complex64) -> Result<f64> {
    if let Err(reason) = hypothesis_check(BoundKind::Thm3_2, r) {
        return Err(Error::HypothesisViolated {
            kind: BoundKind::Thm3_2.name(),
            reason,
        });
    }
    if r.m() != r.n() {
        return Err(Error::HypothesisViolated {
            kind: BoundKind::Thm3_2.name(),
            reason: "zero count m must equal pole count n",
        });
    }
    require_on_circle(z)?;
    let n = r.n() as f64;
    let k = r.k();
    let abs_bp = r.blaschke().abs_prime_on_circle(z)?;
    Ok(0.5 * (abs_bp + n * (1.0 - k) / (1.0 + k)))
}

fn cor34_factor(
    np: usize,
    s: usize,
    k: f64,
    abs_c_n: f64,
    abs_c_s: f64,
    variant: ExponentVariant,
) -> f64 {
    let n = np as f64;
    let exponent = match variant {
        ExponentVariant::Printed => np as i32,
        ExponentVariant::Fixed => (np - s) as i32,
    };
    let t = ratio(k.powi(exponent) * abs_c_n, abs_c_s);
    n / (k + 1.0) * (1.0 + (s as f64) * k / n + k / n * t)
}

/// Evaluates one inequality at one circle point.
///
/// `ctx` supplies the per-instance norms; the min-modulus term must be
/// present for the kinds that consume one, the sup-norms are recomputed on
/// the spot when absent.
pub fn check_point(
    kind: BoundKind,
    r: &RationalFn,
    z: Complex64,
    ctx: &NormContext,
) -> Result<Margin> {
    let factor = rhs_factor(kind, r, z)?;

    let lhs = match kind {
        BoundKind::Bernstein_1_1 | BoundKind::ErdosLax_1_2 | BoundKind::Turan_1_3 => {
            match ctx.sup_num_prime {
                Some(v) => v,
                None => sup_num_prime(r)?,
            }
        }
        BoundKind::Cor3_4 => r.numerator_derivative_at(z).norm(),
        _ => r.derivative(z)?.norm(),
    };

    let multiplicand = match kind {
        BoundKind::Bernstein_1_1 | BoundKind::ErdosLax_1_2 | BoundKind::Turan_1_3 => {
            match ctx.sup_num {
                Some(v) => v,
                None => sup_num(r)?,
            }
        }
        BoundKind::Cor3_4 => r.numerator().eval(z).norm(),
        BoundKind::LMR_2_1 | BoundKind::LMR_2_2_supnorm => match ctx.sup_r {
            Some(v) => v,
            None => sup_r(r)?,
        },
        BoundKind::Thm2_1 => {
            let mprime = ctx.min_r_unit.ok_or(Error::MissingMinModulus {
                kind: kind.name(),
            })?;
            r.eval(z)?.norm() + mprime
        }
        BoundKind::Thm3_2 => {
            let mprime = ctx.min_r_k.ok_or(Error::MissingMinModulus {
                kind: kind.name(),
            })?;
            r.eval(z)?.norm() + mprime
        }
        _ => r.eval(z)?.norm(),
    };

    Ok(Margin::new(kind, lhs, factor * multiplicand, z))
}

/// Residual of the circle identity
/// `Re(z·w′(z)/w(z)) = (n − |B′(z)|)/2`; stays below 1e-9 in magnitude.
pub fn lemma42_residual(poles: &PoleSet, z: Complex64) -> Result<f64> {
    require_on_circle(z)?;
    let lhs = (z * poles.log_derivative_w(z)).re;
    let abs_bp: f64 = poles
        .poles()
        .iter()
        .map(|&a| (a.norm_sqr() - 1.0) / (z - a).norm_sqr())
        .sum();
    Ok(lhs - (poles.n() as f64 - abs_bp) / 2.0)
}

/// Domain restriction for [`seq_inequality`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeqDirection {
    /// all `0 ≤ x_j ≤ 1`; then `Σ (1−x_j)/(1+x_j) ≥ (1−Πx_j)/(1+Πx_j)`
    LeOne,
    /// all `x_j ≥ 1`; then `Σ (1−x_j)/(1+x_j) ≤ (1−Πx_j)/(1+Πx_j)`
    GeOne,
}

/// Both sides of the sequence inequality and whether it held.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeqCheck {
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
}

/// Compares `Σ (1−x_j)/(1+x_j)` with `(1−Πx_j)/(1+Πx_j)` under the given
/// domain restriction.
pub fn seq_inequality(xs: &[f64], direction: SeqDirection) -> Result<SeqCheck> {
    for &x in xs {
        let ok = match direction {
            SeqDirection::LeOne => (0.0..=1.0).contains(&x),
            SeqDirection::GeOne => x >= 1.0,
        };
        if !ok {
            return Err(Error::SequenceDomain {
                value: x,
                domain: match direction {
                    SeqDirection::LeOne => "[0, 1]",
                    SeqDirection::GeOne => "[1, inf)",
                },
            });
        }
    }
    let lhs: f64 = xs.iter().map(|&x| (1.0 - x) / (1.0 + x)).sum();
    let prod: f64 = xs.iter().product();
    let rhs = (1.0 - prod) / (1.0 + prod);
    let holds = match direction {
        SeqDirection::LeOne => lhs >= rhs,
        SeqDirection::GeOne => lhs <= rhs,
    };
    Ok(SeqCheck { lhs, rhs, holds })
}

/// The polynomial lower bound on `|p′|` for `p = z^s·h` with all zeros in
/// the closed radius-`k` disk, under either coefficient-ratio exponent.
pub fn polynomial_bound_cor34(
    p: &RootForm,
    k: f64,
    z: Complex64,
    variant: ExponentVariant,
) -> Result<Margin> {
    if p.is_zero_fn() {
        return Err(Error::HypothesisViolated {
            kind: BoundKind::Cor3_4.name(),
            reason: "numerator is identically zero",
        });
    }
    if !(k > 0.0 && k <= 1.0) {
        return Err(Error::InvalidZeroRadius { k });
    }
    if p.zero_count() == 0 {
        return Err(Error::HypothesisViolated {
            kind: BoundKind::Cor3_4.name(),
            reason: "numerator must have positive degree",
        });
    }
    if let Some(&bad) = p.roots().iter().find(|b| b.norm() > k + HYP_EPS) {
        return Err(Error::ZeroOutsideDisk { zero: bad, k });
    }
    require_on_circle(z)?;

    let abs_c_n = p.leading().norm();
    let abs_c_s = abs_c_n * p.roots().iter().map(|b| b.norm()).product::<f64>();
    let factor = cor34_factor(p.zero_count(), p.origin_order(), k, abs_c_n, abs_c_s, variant);
    let lhs = p.derivative_poly().eval(z).norm();
    let rhs = factor * p.eval(z).norm();
    Ok(Margin::new(BoundKind::Cor3_4, lhs, rhs, z))
}

/// The two refinement orderings between right-hand-side factors.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OrderingReport {
    /// `F(Thm3_1) − F(Thm2_3)`; nonnegative under the shared hypothesis.
    pub thm31_minus_thm23: f64,
    /// `F(Cor3_2_exponent_fixed) − F(Thm2_3)`; nonnegative likewise.
    pub cor32_fixed_minus_thm23: f64,
    /// Both differences at least `−1e-12`.
    pub holds: bool,
}

/// Compares the refined factors against the `Thm2_3` baseline at `z`.
pub fn check_ordering_claims(r: &RationalFn, z: Complex64) -> Result<OrderingReport> {
    let base = rhs_factor(BoundKind::Thm2_3, r, z)?;
    let thm31 = rhs_factor(BoundKind::Thm3_1, r, z)?;
    let cor32_fixed = rhs_factor(BoundKind::Cor3_2_exponent_fixed, r, z)?;
    let d1 = thm31 - base;
    let d2 = cor32_fixed - base;
    Ok(OrderingReport {
        thm31_minus_thm23: d1,
        cor32_fixed_minus_thm23: d2,
        holds: d1 >= -1e-12 && d2 >= -1e-12,
    })
}
