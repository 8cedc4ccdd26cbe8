//! Fourier transforms of compactly supported sampled functions, computed as
//! weighted sums of the complex error function w(z).
//!
//! A function f sampled equidistantly at t = nh, n = -N..N, is approximated by
//! a superposition of Gaussian kernels of width c (module [`sampling`]). Under
//! that approximation the forward and inverse Fourier transforms collapse into
//! closed-form weighted sums of w(z) evaluated at arguments built from the
//! grid, or, equivalently, into a damping harmonic series (module
//! [`transform`]). Module [`faddeeva`] evaluates w(z) over the whole complex
//! plane together with the special functions expressible through it, and
//! carries an independent adaptive-quadrature oracle used to validate every
//! formulation. Module [`mod@reference`] holds the worked example (the window
//! wavelet 2t + 1 on [-1/2, 1/2]), its analytic transforms, and the error
//! envelopes comparing both.
//!
//! All numerics are binary64; complex values are carried by
//! [`num_complex::Complex64`], re-exported at the crate root.

pub mod error;
pub mod faddeeva;
mod quad;
pub mod reference;
pub mod sampling;
pub mod transform;

pub use error::{Error, Result};
pub use num_complex::Complex64;
