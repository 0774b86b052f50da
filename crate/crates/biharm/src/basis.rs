//! Construction and verification of the complete family of biharmonic bases
//! `{e1, e2}`: pairs with `(e1^2 + e2^2)^2 = 0` and `e1^2 + e2^2 != 0`,
//! parametrized by `(alpha1, beta1, beta2, sign)` as
//! `e1 = alpha1 e + beta1 rho`, `e2 = sign * i (alpha1 e + beta2 rho)`.

use std::fmt;

use thiserror::Error;

use crate::algebra::{AlgebraElement, Complex};

/// Errors raised when constructing a basis.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BasisError {
    /// Parameter constraints violated: `alpha1 = 0` or `beta1 = beta2`, or a
    /// numerically degenerate parameter set that fails the defining identity.
    #[error("invalid basis parameters: {0}")]
    InvalidBasis(String),
}

/// The sign choice carried through every downstream formula of the family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// The factor `+i` or `-i`.
    pub fn unit(self) -> Complex {
        match self {
            Sign::Plus => Complex::new(0.0, 1.0),
            Sign::Minus => Complex::new(0.0, -1.0),
        }
    }

    /// `+1.0` or `-1.0`.
    pub fn signum(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// Result of checking the basis identity on a pair of elements.
#[derive(Debug, Clone)]
pub struct IdentityReport {
    /// `e1^4 + 2 e1^2 e2^2 + e2^4`, which must vanish.
    pub lhs: AlgebraElement,
    /// `e1^2 + e2^2`, which must not vanish.
    pub sum_sq: AlgebraElement,
    /// `|lhs|` relative to `|e1|^4`.
    pub relative_residual: f64,
    pub ok: bool,
}

/// Closed-form products of the basis vectors.
#[derive(Debug, Clone, Copy)]
pub struct ProductTable {
    pub e1_sq: AlgebraElement,
    pub e2_sq: AlgebraElement,
    pub e1_e2: AlgebraElement,
}

/// Real coefficients of an element over `{e1, i e1, e2, i e2}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RealComponents {
    pub u1: f64,
    pub u2: f64,
    pub u3: f64,
    pub u4: f64,
}

impl RealComponents {
    pub fn as_array(&self) -> [f64; 4] {
        [self.u1, self.u2, self.u3, self.u4]
    }
}

/// A biharmonic basis, stored by its four parameters with the two basis
/// vectors cached.
#[derive(Debug, Clone)]
pub struct BiharmonicBasis {
    alpha1: Complex,
    beta1: Complex,
    beta2: Complex,
    sign: Sign,
    e1: AlgebraElement,
    e2: AlgebraElement,
}

/// Default relative tolerance for the eager identity check in constructors.
pub const IDENTITY_TOL: f64 = 1e-10;

/// Checks the defining identity on a raw pair of elements. Exposed
/// separately from [`BiharmonicBasis`] so that pairs outside the parametric
/// family can be tested negatively.
pub fn verify_pair(e1: AlgebraElement, e2: AlgebraElement, tol: f64) -> IdentityReport {
    let e1_sq = e1 * e1;
    let e2_sq = e2 * e2;
    let sum_sq = e1_sq + e2_sq;
    let lhs = e1_sq * e1_sq + (e1_sq * e2_sq).scale(Complex::new(2.0, 0.0)) + e2_sq * e2_sq;
    let scale = e1.coeff_norm().powi(4);
    let relative_residual = if scale > 0.0 { lhs.coeff_norm() / scale } else { lhs.coeff_norm() };
    let ok = lhs.coeff_norm() <= tol * scale && sum_sq.coeff_norm() > 0.0;
    IdentityReport { lhs, sum_sq, relative_residual, ok }
}

impl BiharmonicBasis {
    /// Builds the basis with parameters `(alpha1, beta1, beta2, sign)` and
    /// eagerly verifies the defining identity.
    pub fn new(alpha1: Complex, beta1: Complex, beta2: Complex, sign: Sign) -> Result<Self, BasisError> {
        if alpha1 == Complex::ZERO {
            return Err(BasisError::InvalidBasis("alpha1 must be nonzero".into()));
        }
        if beta1 == beta2 {
            return Err(BasisError::InvalidBasis("beta1 and beta2 must differ".into()));
        }
        let e1 = AlgebraElement::new(alpha1, beta1);
        let e2 = AlgebraElement::new(alpha1, beta2).scale(sign.unit());
        let basis = Self { alpha1, beta1, beta2, sign, e1, e2 };
        let report = basis.verify_identity(IDENTITY_TOL);
        if !report.ok {
            return Err(BasisError::InvalidBasis(format!(
                "parameters numerically fail the basis identity (relative residual {:.3e})",
                report.relative_residual
            )));
        }
        Ok(basis)
    }

    /// The basis `(1, 0, -1/2, +)`: identity `e1 = e` with the classical
    /// multiplication table `e2^2 = e1 + 2i e2`.
    pub fn gp_basis() -> Self {
        Self::new(Complex::ONE, Complex::ZERO, Complex::new(-0.5, 0.0), Sign::Plus)
            .expect("preset parameters are valid")
    }

    /// The distinguished basis `(1, 1, 2, +)`: `e1 = e + rho`,
    /// `e2 = i(e + 2 rho)`.
    pub fn new_basis() -> Self {
        Self::new(Complex::ONE, Complex::ONE, Complex::new(2.0, 0.0), Sign::Plus)
            .expect("preset parameters are valid")
    }

    /// The sub-family `(1, 0, beta2, sign)` with `e1 = e`; requires
    /// `beta2 != 0`.
    pub fn e_identity(beta2: Complex, sign: Sign) -> Result<Self, BasisError> {
        Self::new(Complex::ONE, Complex::ZERO, beta2, sign)
    }

    pub fn alpha1(&self) -> Complex {
        self.alpha1
    }

    pub fn beta1(&self) -> Complex {
        self.beta1
    }

    pub fn beta2(&self) -> Complex {
        self.beta2
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn e1(&self) -> AlgebraElement {
        self.e1
    }

    pub fn e2(&self) -> AlgebraElement {
        self.e2
    }

    /// `i e1` and `i e2`, the remaining two vectors of the real basis.
    pub fn ie1(&self) -> AlgebraElement {
        self.e1.scale(Complex::new(0.0, 1.0))
    }

    pub fn ie2(&self) -> AlgebraElement {
        self.e2.scale(Complex::new(0.0, 1.0))
    }

    /// Checks `e1^4 + 2 e1^2 e2^2 + e2^4 = 0` and `e1^2 + e2^2 != 0` on the
    /// cached vectors.
    pub fn verify_identity(&self, tol: f64) -> IdentityReport {
        verify_pair(self.e1, self.e2, tol)
    }

    /// Closed-form product table:
    /// `e_k^2 = (-1)^(k+1) alpha1 (alpha1 e + 2 beta_k rho)` and
    /// `e1 e2 = sign * i alpha1 (alpha1 e + (beta1 + beta2) rho)`.
    pub fn product_table(&self) -> ProductTable {
        let a = self.alpha1;
        let e1_sq = AlgebraElement::new(a * a, a * self.beta1 * 2.0);
        let e2_sq = AlgebraElement::new(-(a * a), -(a * self.beta2 * 2.0));
        let i_a = self.sign.unit() * a;
        let e1_e2 = AlgebraElement::new(i_a * a, i_a * (self.beta1 + self.beta2));
        ProductTable { e1_sq, e2_sq, e1_e2 }
    }

    /// Complex coordinates `(c1, c2)` of `a = c1 e1 + c2 e2`, obtained by
    /// solving the 2x2 system
    /// `alpha1 c1 + sign*i*alpha1 c2 = w_e`,
    /// `beta1 c1 + sign*i*beta2 c2 = w_rho`.
    /// The determinant `sign*i*alpha1 (beta2 - beta1)` is nonzero by the
    /// basis invariants.
    pub fn complex_coords(&self, a: AlgebraElement) -> (Complex, Complex) {
        let d = self.alpha1 * (self.beta2 - self.beta1);
        let c1 = (self.beta2 * a.w_e - self.alpha1 * a.w_rho) / d;
        let c2 = (self.alpha1 * a.w_rho - self.beta1 * a.w_e) / (self.sign.unit() * d);
        (c1, c2)
    }

    /// Real coefficients of `a` over `{e1, i e1, e2, i e2}`.
    pub fn decompose(&self, a: AlgebraElement) -> RealComponents {
        let (c1, c2) = self.complex_coords(a);
        RealComponents { u1: c1.re, u2: c1.im, u3: c2.re, u4: c2.im }
    }

    /// Rebuilds the element `u1 e1 + u2 i e1 + u3 e2 + u4 i e2`.
    pub fn recompose(&self, rc: RealComponents) -> AlgebraElement {
        let c1 = Complex::new(rc.u1, rc.u2);
        let c2 = Complex::new(rc.u3, rc.u4);
        self.e1.scale(c1) + self.e2.scale(c2)
    }

    /// Euclidean norm `sqrt(|c1|^2 + |c2|^2)` over the basis.
    pub fn norm(&self, a: AlgebraElement) -> f64 {
        let (c1, c2) = self.complex_coords(a);
        (c1.norm_sqr() + c2.norm_sqr()).sqrt()
    }

    /// Plane embedding `zeta = x e1 + y e2`; invertible iff `(x, y) != (0, 0)`.
    pub fn zeta(&self, x: f64, y: f64) -> AlgebraElement {
        self.e1.scale(Complex::new(x, 0.0)) + self.e2.scale(Complex::new(y, 0.0))
    }

    /// The associated complex variable `Z = alpha1 (x + sign*i*y)`.
    pub fn z_map(&self, x: f64, y: f64) -> Complex {
        self.alpha1 * Complex::new(x, self.sign.signum() * y)
    }

    /// Expands `p(Z)` with `Z = alpha1 (x + sign*i*y)` as a bivariate
    /// polynomial in `(x, y)`.
    pub fn substitute_plane(&self, p: &crate::poly::HoloPoly) -> crate::poly::BiPoly {
        p.compose_linear(self.alpha1, self.alpha1 * self.sign.unit())
    }
}
