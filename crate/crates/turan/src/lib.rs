//! Turán-type lower bounds for derivatives of rational functions with
//! prescribed poles, and the machinery to verify them numerically.
//!
//! The crate models rational functions `r = p/w` whose poles `a_1..a_n`
//! all lie outside the closed unit disk and whose zeros are confined to a
//! disk of radius `k ≤ 1`. For such functions the modulus of `r′` on the
//! unit circle is bounded below by expressions in `|B′(z)|` — the
//! derivative of the Blaschke product attached to the poles — and the zero
//! configuration. The [`bounds`] module evaluates each inequality of the
//! catalog at a point; [`sweep`] drives seeded random verification,
//! sharpness grids, and counterexample shrinking over them.
//!
//! ```
//! use num_complex::Complex64;
//! use turan::poly::RootForm;
//! use turan::rational::{PoleSet, RationalFn};
//! use turan::bounds::{check_point, BoundKind, NormContext};
//!
//! // r(z) = z(z + 1/2)/(z - 2)^2, zeros within radius 1/2
//! let r = RationalFn::new(
//!     RootForm::new(Complex64::new(1.0, 0.0), vec![Complex64::new(-0.5, 0.0)], 1),
//!     PoleSet::new(vec![Complex64::new(2.0, 0.0); 2])?,
//!     0.5,
//! )?;
//! let margin = check_point(
//!     BoundKind::Thm3_1,
//!     &r,
//!     Complex64::new(1.0, 0.0),
//!     &NormContext::empty(),
//! )?;
//! // this instance attains equality at z = 1: both sides are 11/2
//! assert!((margin.lhs - 5.5).abs() < 1e-9);
//! assert!(margin.margin.abs() < 1e-9);
//! # Ok::<(), turan::Error>(())
//! ```

pub mod bounds;
pub mod circle;
pub mod error;
pub mod gen;
pub mod poly;
pub mod rational;
pub mod sweep;

pub use error::{Error, Result};

// Keep the guide's code blocks compiling and passing: every chapter is a
// doctest target.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/polynomials.md")]
    mod polynomials {}
    #[doc = include_str!("../../../book/src/rational-functions.md")]
    mod rational_functions {}
    #[doc = include_str!("../../../book/src/circle-extrema.md")]
    mod circle_extrema {}
    #[doc = include_str!("../../../book/src/inequalities.md")]
    mod inequalities {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
