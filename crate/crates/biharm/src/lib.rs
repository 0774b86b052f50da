//! Computational kernel for the two-complex-dimensional commutative algebra
//! with identity `e` and nilpotent generator `rho` (`rho^2 = 0`), whose
//! biharmonic bases generate planes on which monogenic functions have
//! biharmonic real components.
//!
//! The crate covers:
//!
//! * exact arithmetic in the algebra ([`algebra`]),
//! * the complete family of biharmonic bases, with identity verification
//!   and coordinate changes ([`basis`]),
//! * a symbolic polynomial backend: univariate complex polynomials and
//!   bivariate polynomials in `(x, y)` with differential operators ([`poly`]),
//! * monogenic functions built from a pair of holomorphic generators,
//!   their components, derivatives, and Cauchy-Riemann-type residuals
//!   ([`monogenic`]),
//! * Goursat-based reconstruction of monogenic lifts of biharmonic
//!   functions ([`goursat`]),
//! * grid-based finite-difference verification ([`numeric`]),
//! * JSON schema parsing for scripted use ([`json`]) and the randomized
//!   verification suites behind the CLI `verify` command ([`verify`]).

pub mod algebra;
pub mod basis;
pub mod goursat;
pub mod json;
pub mod monogenic;
pub mod numeric;
pub mod poly;
pub mod verify;

pub use algebra::{AlgebraElement, AlgebraError, Complex};
pub use basis::{BasisError, BiharmonicBasis, IdentityReport, ProductTable, RealComponents, Sign};
pub use goursat::{GoursatPair, KernelBasis, Phi0Params};
pub use monogenic::{ComponentAssembly, ComponentSet, MonogenicFn};
pub use numeric::{GridSpec, NumericError, ProbeTable};
pub use poly::{BiPoly, HoloPoly, RealBiPoly};
