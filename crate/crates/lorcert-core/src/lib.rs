//! Exact certification toolkit for homogeneous polynomials with nonnegative
//! coefficients and for volume polynomials of convex bodies.
//!
//! Everything that decides something here decides it exactly, over
//! arbitrary-precision rationals: Lorentzian membership via Hessian inertia,
//! M-convexity of supports, the Alexandrov-Fenchel inequality families, the
//! reverse Khovanskii-Teissier inequality, mixed volumes of rational polytopes
//! in ambient dimension at most 3, and the structured factorization rules that
//! transfer certificates between a polynomial and its factors. The only
//! floating-point component is [`realizer`], a heuristic multi-start search
//! for segment configurations realizing a multiaffine target; its positive
//! answers are re-verified exactly before being reported as such.

pub mod error;
pub mod factor;
pub mod geometry;
pub mod inequality;
pub mod io;
pub mod linalg;
pub mod lorentzian;
pub mod poly;
pub mod rational;
pub mod realizer;
pub mod report;

pub use error::Error;
pub use poly::{Exponent, HomoPoly, NormalizedCoeffs};
pub use report::{CertReport, Inertia, Verdict, Witness};

/// Shorthand used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
