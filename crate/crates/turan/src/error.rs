use num_complex::Complex64;
use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A polynomial exceeded the degree bound required by an operation.
    #[error("polynomial degree {degree} exceeds bound {bound}")]
    DegreeExceedsBound { degree: usize, bound: usize },

    /// A prescribed pole must lie strictly outside the closed unit disk.
    #[error("pole {pole} inside unit circle (|a| must exceed 1)")]
    PoleInsideUnitCircle { pole: Complex64 },

    /// Evaluation point too close to a pole.
    #[error("evaluation point {z} within {dist:.3e} of pole {pole}")]
    PoleProximity {
        z: Complex64,
        pole: Complex64,
        dist: f64,
    },

    /// An operation defined only on a circle received an off-circle point.
    #[error("point {z} is not on the circle of radius {radius}")]
    OffCircle { z: Complex64, radius: f64 },

    /// The conjugate transform r*(z) is undefined at the origin.
    #[error("argument must be nonzero")]
    ZeroArgument,

    /// Zero count of the numerator exceeded the pole count.
    #[error("numerator has {zeros} zeros but only {poles} poles are prescribed")]
    TooManyZeros { zeros: usize, poles: usize },

    /// The zero-radius bound k must lie in (0, 1].
    #[error("zero-radius bound k = {k} outside (0, 1]")]
    InvalidZeroRadius { k: f64 },

    /// A numerator zero lies outside the declared radius-k disk.
    #[error("zero {zero} outside the radius-{k} disk")]
    ZeroOutsideDisk { zero: Complex64, k: f64 },

    /// Circle extremum search hit a non-finite sample.
    #[error("non-finite value sampled on the circle of radius {radius} at angle {angle}")]
    PoleOnCircle { radius: f64, angle: f64 },

    /// Circle extremum search was configured with too coarse a grid.
    #[error("grid of {grid} samples is below the minimum of {min}")]
    GridTooCoarse { grid: usize, min: usize },

    /// Circle extremum search needs a positive radius.
    #[error("circle radius {radius} must be positive")]
    InvalidRadius { radius: f64 },

    /// A bound was evaluated on an instance that fails its hypothesis.
    #[error("instance fails the hypothesis of {kind}: {reason}")]
    HypothesisViolated {
        kind: &'static str,
        reason: &'static str,
    },

    /// A bound requiring the min-modulus term was called without one.
    #[error("{kind} needs the min-modulus term m'")]
    MissingMinModulus { kind: &'static str },

    /// A sequence-inequality input violated its domain restriction.
    #[error("sequence entry {value} outside the domain {domain}")]
    SequenceDomain { value: f64, domain: &'static str },

    /// Invalid generator configuration.
    #[error("invalid generator configuration: {reason}")]
    InvalidConfig { reason: &'static str },
}

pub type Result<T> = std::result::Result<T, Error>;
