//! Seeded random generation of admissible instances.
//!
//! Randomness is counter-based: every instance is drawn from its own
//! ChaCha8 stream, selected by `(seed, instance index)`, so any instance
//! in a sweep is reconstructible from the report alone.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::RootForm;
use crate::rational::{PoleSet, RationalFn};

/// Parameter ranges for instance generation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GenConfig {
    /// Largest pole count drawn; `n` is uniform in `1..=max_n`.
    pub max_n: usize,
    /// Zero-radius bound `k`, uniform in this subinterval of `(0, 1]`.
    pub k_range: (f64, f64),
    /// Pole modulus, uniform in this subinterval of `(1, ∞)`.
    pub pole_radius_range: (f64, f64),
    /// Require an origin zero (`s ≥ 1`).
    pub force_s_positive: bool,
    /// Require as many zeros as poles (`m = n`).
    pub force_m_equals_n: bool,
    /// Master seed; instance `i` uses stream `i` of this seed.
    pub seed: u64,
}

impl GenConfig {
    /// A broadly exercising default over the given seed.
    pub fn new(seed: u64) -> Self {
        GenConfig {
            max_n: 12,
            k_range: (0.2, 1.0),
            pole_radius_range: (1.3, 4.0),
            force_s_positive: false,
            force_m_equals_n: false,
            seed,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_n == 0 {
            return Err(Error::InvalidConfig {
                reason: "max_n must be at least 1",
            });
        }
        let (klo, khi) = self.k_range;
        if !(klo > 0.0 && klo <= khi && khi <= 1.0) {
            return Err(Error::InvalidConfig {
                reason: "k_range must be a nonempty subinterval of (0, 1]",
            });
        }
        let (plo, phi) = self.pole_radius_range;
        if !(plo > 1.0 && plo <= phi) {
            return Err(Error::InvalidConfig {
                reason: "pole_radius_range must be a nonempty subinterval of (1, inf)",
            });
        }
        Ok(())
    }

    /// The ChaCha8 stream dedicated to instance `index`.
    pub fn instance_rng(&self, index: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(index);
        rng
    }
}

/// Draws one admissible instance from the stream: zeros area-uniform in the
/// radius-`k` disk, pole moduli uniform in the configured range, leading
/// coefficient uniform on the modulus annulus `[0.5, 2]`.
pub fn gen_instance(cfg: &GenConfig, rng: &mut ChaCha8Rng) -> RationalFn {
    let tau = std::f64::consts::TAU;
    let n = rng.gen_range(1..=cfg.max_n);
    let m = if cfg.force_m_equals_n {
        n
    } else if cfg.force_s_positive {
        rng.gen_range(1..=n)
    } else {
        rng.gen_range(0..=n)
    };
    let s = if cfg.force_s_positive {
        rng.gen_range(1..=m)
    } else {
        rng.gen_range(0..=m)
    };
    let k = rng.gen_range(cfg.k_range.0..=cfg.k_range.1);

    let roots: Vec<Complex64> = (0..m - s)
        .map(|_| {
            // radius k·√u is area-uniform over the disk
            let radius = k * rng.gen_range(0.0f64..1.0).sqrt();
            Complex64::from_polar(radius, rng.gen_range(0.0..tau))
        })
        .collect();
    let poles: Vec<Complex64> = (0..n)
        .map(|_| {
            Complex64::from_polar(
                rng.gen_range(cfg.pole_radius_range.0..=cfg.pole_radius_range.1),
                rng.gen_range(0.0..tau),
            )
        })
        .collect();
    let leading = Complex64::from_polar(rng.gen_range(0.5..=2.0), rng.gen_range(0.0..tau));

    RationalFn::new(
        RootForm::new(leading, roots, s),
        PoleSet::new(poles).expect("generated pole moduli exceed 1"),
        k,
    )
    .expect("generated instance is admissible by construction")
}
