//! Dense univariate polynomials with complex coefficients, used to represent
//! holomorphic functions of one complex variable.

use std::ops::{Add, Mul, Neg, Sub};

use crate::algebra::Complex;
use crate::poly::{BiPoly, DEGREE_CAP};

/// A univariate polynomial with complex coefficients in ascending degree
/// order. Trailing zero coefficients are trimmed; the zero polynomial has an
/// empty coefficient list.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct HoloPoly {
    coeffs: Vec<Complex>,
}

impl HoloPoly {
    /// Builds a polynomial from ascending-degree coefficients.
    ///
    /// # Panics
    ///
    /// Panics on non-finite coefficients or degree above [`DEGREE_CAP`].
    pub fn new(coeffs: Vec<Complex>) -> Self {
        for c in &coeffs {
            assert!(c.re.is_finite() && c.im.is_finite(), "polynomial coefficients must be finite");
        }
        let mut p = Self { coeffs };
        p.trim();
        assert!(
            p.coeffs.len() <= DEGREE_CAP + 1,
            "polynomial degree exceeds cap {DEGREE_CAP}"
        );
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| *c == Complex::ZERO) {
            self.coeffs.pop();
        }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: Complex) -> Self {
        Self::new(vec![c])
    }

    /// The identity polynomial `z`.
    pub fn z() -> Self {
        Self::new(vec![Complex::ZERO, Complex::ONE])
    }

    /// The monomial `c * z^deg`.
    pub fn monomial(c: Complex, deg: usize) -> Self {
        if c == Complex::ZERO {
            return Self::zero();
        }
        let mut coeffs = vec![Complex::ZERO; deg + 1];
        coeffs[deg] = c;
        Self::new(coeffs)
    }

    /// Convenience constructor from `(re, im)` pairs in ascending degree.
    pub fn from_parts(parts: &[(f64, f64)]) -> Self {
        Self::new(parts.iter().map(|&(re, im)| Complex::new(re, im)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `z^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Complex {
        self.coeffs.get(k).copied().unwrap_or(Complex::ZERO)
    }

    /// Ascending-degree coefficient slice.
    pub fn coeffs(&self) -> &[Complex] {
        &self.coeffs
    }

    /// Largest coefficient magnitude (zero for the zero polynomial).
    pub fn max_coeff_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Horner evaluation at a complex point.
    pub fn eval(&self, at: Complex) -> Complex {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex::ZERO, |acc, &c| acc * at + c)
    }

    /// Term-wise derivative.
    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| c * k as f64)
            .collect();
        Self::new(coeffs)
    }

    /// Antiderivative with integration constant fixed to zero.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Complex::ZERO);
        coeffs.extend(self.coeffs.iter().enumerate().map(|(k, &c)| c / (k + 1) as f64));
        Self::new(coeffs)
    }

    /// Scalar multiple.
    pub fn scale(&self, k: Complex) -> Self {
        Self::new(self.coeffs.iter().map(|&c| c * k).collect())
    }

    /// Substitutes the linear form `cx*x + cy*y` for the variable and expands
    /// the result as a bivariate polynomial (Horner in the bivariate ring).
    pub fn compose_linear(&self, cx: Complex, cy: Complex) -> BiPoly {
        let arg = BiPoly::linear(cx, cy);
        let mut acc = BiPoly::zero();
        for &c in self.coeffs.iter().rev() {
            acc = &(&acc * &arg) + &BiPoly::constant(c);
        }
        acc
    }

    /// Expands `p(x + iy)`.
    pub fn substitute_z(&self) -> BiPoly {
        self.compose_linear(Complex::ONE, Complex::new(0.0, 1.0))
    }

    /// Expands `p(x - iy)`, the conjugate-variable substitution of the
    /// Goursat terms.
    pub fn substitute_z_conj(&self) -> BiPoly {
        self.compose_linear(Complex::ONE, Complex::new(0.0, -1.0))
    }
}

impl Add for &HoloPoly {
    type Output = HoloPoly;
    fn add(self, rhs: &HoloPoly) -> HoloPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        HoloPoly::new(coeffs)
    }
}

impl Sub for &HoloPoly {
    type Output = HoloPoly;
    fn sub(self, rhs: &HoloPoly) -> HoloPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        HoloPoly::new(coeffs)
    }
}

impl Mul for &HoloPoly {
    type Output = HoloPoly;
    fn mul(self, rhs: &HoloPoly) -> HoloPoly {
        if self.is_zero() || rhs.is_zero() {
            return HoloPoly::zero();
        }
        let mut coeffs = vec![Complex::ZERO; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        HoloPoly::new(coeffs)
    }
}

impl Neg for &HoloPoly {
    type Output = HoloPoly;
    fn neg(self) -> HoloPoly {
        self.scale(-Complex::ONE)
    }
}
