//! Arithmetic in the commutative algebra spanned by the identity `e` and the
//! nilpotent generator `rho`, with complex coefficients and the relations
//! `e^2 = e`, `e*rho = rho`, `rho^2 = 0`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

/// Complex scalar used throughout the crate.
pub type Complex = num_complex::Complex64;

/// Errors raised by algebra operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    /// The element has zero `e`-coefficient but is itself nonzero; it is a
    /// divisor of zero and has no inverse.
    #[error("element is a zero divisor (zero e-coefficient) and has no inverse")]
    NotInvertible,
    /// The zero element; classified neither invertible nor a zero divisor.
    #[error("the zero element has no inverse")]
    ZeroElement,
}

/// An element `w_e * e + w_rho * rho` of the algebra.
///
/// The representation over `{e, rho}` is unique, so equality is
/// coefficient-wise; [`AlgebraElement::approx_eq`] is the tolerance variant
/// for float paths.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlgebraElement {
    /// Coefficient of the identity `e`.
    pub w_e: Complex,
    /// Coefficient of the radical generator `rho`.
    pub w_rho: Complex,
}

impl AlgebraElement {
    /// Builds an element from its two coordinates.
    ///
    /// # Panics
    ///
    /// Panics if either coordinate is non-finite; the constructors accept
    /// only finite coefficients.
    pub fn new(w_e: Complex, w_rho: Complex) -> Self {
        assert!(
            w_e.re.is_finite() && w_e.im.is_finite() && w_rho.re.is_finite() && w_rho.im.is_finite(),
            "algebra element coordinates must be finite"
        );
        Self { w_e, w_rho }
    }

    /// The zero element.
    pub fn zero() -> Self {
        Self { w_e: Complex::ZERO, w_rho: Complex::ZERO }
    }

    /// The identity `e`.
    pub fn identity() -> Self {
        Self { w_e: Complex::ONE, w_rho: Complex::ZERO }
    }

    /// The radical generator `rho`.
    pub fn rho() -> Self {
        Self { w_e: Complex::ZERO, w_rho: Complex::ONE }
    }

    /// Builds an element from real coordinates `(e_re, e_im, rho_re, rho_im)`.
    pub fn from_parts(e_re: f64, e_im: f64, rho_re: f64, rho_im: f64) -> Self {
        Self::new(Complex::new(e_re, e_im), Complex::new(rho_re, rho_im))
    }

    pub fn is_zero(&self) -> bool {
        self.w_e == Complex::ZERO && self.w_rho == Complex::ZERO
    }

    /// True iff the element is a divisor of zero: `w_e = 0` and `w_rho != 0`.
    ///
    /// The zero element is classified neither invertible nor a zero divisor.
    pub fn is_zero_divisor(&self) -> bool {
        self.w_e == Complex::ZERO && self.w_rho != Complex::ZERO
    }

    /// True iff the element has a multiplicative inverse (`w_e != 0`).
    pub fn is_invertible(&self) -> bool {
        self.w_e != Complex::ZERO
    }

    /// Multiplicative inverse: `(1/w_e) e - (w_rho/w_e^2) rho`.
    pub fn inverse(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::ZeroElement);
        }
        if self.w_e == Complex::ZERO {
            return Err(AlgebraError::NotInvertible);
        }
        let inv_e = self.w_e.inv();
        Ok(Self { w_e: inv_e, w_rho: -self.w_rho * inv_e * inv_e })
    }

    /// Scalar multiple by a complex number.
    pub fn scale(&self, k: Complex) -> Self {
        Self { w_e: k * self.w_e, w_rho: k * self.w_rho }
    }

    /// Integer power by repeated multiplication (`a^0 = e`).
    pub fn powi(&self, n: u32) -> Self {
        let mut acc = Self::identity();
        for _ in 0..n {
            acc = acc * *self;
        }
        acc
    }

    /// Coefficient norm `sqrt(|w_e|^2 + |w_rho|^2)`, the scale used for
    /// relative residual checks.
    pub fn coeff_norm(&self) -> f64 {
        (self.w_e.norm_sqr() + self.w_rho.norm_sqr()).sqrt()
    }

    /// Coefficient-wise comparison with absolute tolerance `tol`.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        (self.w_e - other.w_e).norm() <= tol && (self.w_rho - other.w_rho).norm() <= tol
    }
}

impl Add for AlgebraElement {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self { w_e: self.w_e + rhs.w_e, w_rho: self.w_rho + rhs.w_rho }
    }
}

impl Sub for AlgebraElement {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self { w_e: self.w_e - rhs.w_e, w_rho: self.w_rho - rhs.w_rho }
    }
}

/// Ring product: `(a1 e + a2 rho)(b1 e + b2 rho) = a1 b1 e + (a1 b2 + a2 b1) rho`.
impl Mul for AlgebraElement {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self {
            w_e: self.w_e * rhs.w_e,
            w_rho: self.w_e * rhs.w_rho + self.w_rho * rhs.w_e,
        }
    }
}

impl Neg for AlgebraElement {
    type Output = Self;
    fn neg(self) -> Self {
        Self { w_e: -self.w_e, w_rho: -self.w_rho }
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}{:+}i)e + ({}{:+}i)rho",
            self.w_e.re, self.w_e.im, self.w_rho.re, self.w_rho.im
        )
    }
}
