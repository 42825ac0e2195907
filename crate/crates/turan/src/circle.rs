//! Sup-norm and min-modulus of a complex function over a circle `|z| = ρ`.
//!
//! The search samples `grid` equispaced angles, then refines the best
//! bracket by golden-section search until the angular interval drops below
//! `tol`. The result is a refined point, not a certified global bound; the
//! acceptance tests compare it against a dense brute force.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Default number of grid samples. Degrees are capped well below this, so
/// `|f|` along the circle is over-resolved before refinement starts.
pub const DEFAULT_GRID: usize = 4096;

/// Default angular refinement tolerance in radians.
pub const DEFAULT_TOL: f64 = 1e-10;

const MIN_GRID: usize = 64;

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Location and value of a circle extremum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircleExtremum {
    /// `|f|` at the refined point.
    pub value: f64,
    /// Angle of the refined point, in `[0, 2π)`.
    pub at_angle: f64,
    /// Radius of the circle searched.
    pub radius: f64,
    /// Total `|f|` evaluations spent (grid plus refinement).
    pub samples_used: usize,
}

/// `max_{|z|=radius} |f(z)|` with the default grid and tolerance.
pub fn sup_on_circle_default(f: impl Fn(Complex64) -> Complex64) -> Result<CircleExtremum> {
    sup_on_circle(f, 1.0, DEFAULT_GRID, DEFAULT_TOL)
}

/// `min_{|z|=radius} |f(z)|` with the default grid and tolerance.
pub fn min_on_circle_default(f: impl Fn(Complex64) -> Complex64) -> Result<CircleExtremum> {
    min_on_circle(f, 1.0, DEFAULT_GRID, DEFAULT_TOL)
}

/// Maximizes `|f|` over the circle of the given radius.
///
/// The returned value is never below the largest grid sample.
pub fn sup_on_circle(
    f: impl Fn(Complex64) -> Complex64,
    radius: f64,
    grid: usize,
    tol: f64,
) -> Result<CircleExtremum> {
    extremum(f, radius, grid, tol, true)
}

/// Minimizes `|f|` over the circle of the given radius.
///
/// The returned value is never above the smallest grid sample.
pub fn min_on_circle(
    f: impl Fn(Complex64) -> Complex64,
    radius: f64,
    grid: usize,
    tol: f64,
) -> Result<CircleExtremum> {
    extremum(f, radius, grid, tol, false)
}

fn extremum(
    f: impl Fn(Complex64) -> Complex64,
    radius: f64,
    grid: usize,
    tol: f64,
    maximize: bool,
) -> Result<CircleExtremum> {
    if !radius.is_finite() || radius <= 0.0 {
        return Err(Error::InvalidRadius { radius });
    }
    if grid < MIN_GRID {
        return Err(Error::GridTooCoarse { grid, min: MIN_GRID });
    }

    let tau = std::f64::consts::TAU;
    let modulus = |theta: f64| f(Complex64::from_polar(radius, theta)).norm();

    let mut best_idx = 0usize;
    let mut best_val = f64::NAN;
    let mut samples = 0usize;
    for i in 0..grid {
        let theta = tau * i as f64 / grid as f64;
        let v = modulus(theta);
        samples += 1;
        if !v.is_finite() {
            return Err(Error::PoleOnCircle {
                radius,
                angle: theta,
            });
        }
        let better = if i == 0 {
            true
        } else if maximize {
            v > best_val
        } else {
            v < best_val
        };
        if better {
            best_idx = i;
            best_val = v;
        }
    }

    // Refine inside the bracket spanning the neighbours of the best sample.
    let step = tau / grid as f64;
    let center = tau * best_idx as f64 / grid as f64;
    let (mut a, mut b) = (center - step, center + step);

    let sign = if maximize { 1.0 } else { -1.0 };
    let g = |theta: f64| sign * modulus(theta);

    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut g1 = g(x1);
    let mut g2 = g(x2);
    samples += 2;
    while b - a > tol {
        if g1 > g2 {
            b = x2;
            x2 = x1;
            g2 = g1;
            x1 = b - INV_PHI * (b - a);
            g1 = g(x1);
        } else {
            a = x1;
            x1 = x2;
            g1 = g2;
            x2 = a + INV_PHI * (b - a);
            g2 = g(x2);
        }
        samples += 1;
    }
    let (refined_angle, refined_signed) = if g1 > g2 { (x1, g1) } else { (x2, g2) };
    let refined = sign * refined_signed;

    let (value, at_angle) = if (maximize && refined >= best_val) || (!maximize && refined <= best_val)
    {
        (refined, refined_angle)
    } else {
        (best_val, center)
    };

    Ok(CircleExtremum {
        value,
        at_angle: at_angle.rem_euclid(tau),
        radius,
        samples_used: samples,
    })
}
