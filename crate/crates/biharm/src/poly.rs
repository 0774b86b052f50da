//! Symbolic polynomial backend: univariate polynomials with complex
//! coefficients (holomorphic functions of one complex variable) and bivariate
//! polynomials in the real variables `(x, y)` with complex or real
//! coefficients, including differentiation, antiderivatives, plane
//! substitution, and the Laplace / biharmonic operators.

mod bivar;
mod holo;

pub use bivar::{BiPoly, RealBiPoly};
pub use holo::HoloPoly;

/// Maximum total degree accepted by the polynomial types. Operations that
/// would exceed it panic; the JSON boundary rejects oversized inputs before
/// they reach the kernel.
pub const DEGREE_CAP: usize = 32;
