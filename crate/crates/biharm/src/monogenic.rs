//! Monogenic functions over a biharmonic basis, built from two holomorphic
//! generators `(F, F0)` via the representation formula
//!
//! ```text
//! Phi(zeta) = F(Z) e + ((beta1/alpha1 Z + sign*i (beta2 - beta1) y) F'(Z) + F0(Z)) rho,
//! Z = alpha1 (x + sign*i*y),
//! ```
//!
//! together with symbolic extraction of the four real components, the
//! Cauchy-Riemann-type residuals in compact and expanded form, and the
//! biharmonicity check of the components.

use crate::algebra::{AlgebraElement, Complex};
use crate::basis::BiharmonicBasis;
use crate::poly::{BiPoly, HoloPoly, RealBiPoly};

/// An algebra-valued bivariate polynomial: the `{e, rho}` coordinates of a
/// polynomial map from the plane into the algebra.
#[derive(Debug, Clone)]
pub struct AlgebraPoly {
    /// Coordinate polynomial of `e`.
    pub e: BiPoly,
    /// Coordinate polynomial of `rho`.
    pub rho: BiPoly,
}

impl AlgebraPoly {
    pub fn dx(&self) -> Self {
        Self { e: self.e.dx(), rho: self.rho.dx() }
    }

    pub fn dy(&self) -> Self {
        Self { e: self.e.dy(), rho: self.rho.dy() }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Self { e: &self.e - &rhs.e, rho: &self.rho - &rhs.rho }
    }

    /// Right-multiplication by a constant algebra element.
    pub fn mul_element(&self, g: AlgebraElement) -> Self {
        Self {
            e: self.e.scale(g.w_e),
            rho: &self.e.scale(g.w_rho) + &self.rho.scale(g.w_e),
        }
    }

    pub fn eval(&self, x: f64, y: f64) -> AlgebraElement {
        AlgebraElement::new(self.e.eval(x, y), self.rho.eval(x, y))
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.e.is_zero(tol) && self.rho.is_zero(tol)
    }
}

/// The four real component polynomials `U1..U4` of an algebra-valued
/// function over `{e1, i e1, e2, i e2}`.
#[derive(Debug, Clone)]
pub struct ComponentSet {
    pub u1: RealBiPoly,
    pub u2: RealBiPoly,
    pub u3: RealBiPoly,
    pub u4: RealBiPoly,
}

impl ComponentSet {
    pub fn as_array(&self) -> [&RealBiPoly; 4] {
        [&self.u1, &self.u2, &self.u3, &self.u4]
    }

    pub fn eval(&self, x: f64, y: f64) -> [f64; 4] {
        [self.u1.eval(x, y), self.u2.eval(x, y), self.u3.eval(x, y), self.u4.eval(x, y)]
    }
}

/// Report of the component biharmonicity check.
#[derive(Debug, Clone)]
pub struct BiharmonicReport {
    /// Largest coefficient magnitude of the biharmonic operator applied to
    /// each component.
    pub component_residuals: [f64; 4],
    /// The algebraic multiplier `(e1^2 + e2^2)^2`, which must vanish.
    pub multiplier: AlgebraElement,
    pub ok: bool,
}

/// A monogenic function `Phi[F, F0]` over a biharmonic basis.
#[derive(Debug, Clone)]
pub struct MonogenicFn {
    basis: BiharmonicBasis,
    f: HoloPoly,
    f0: HoloPoly,
}

impl MonogenicFn {
    pub fn new(basis: BiharmonicBasis, f: HoloPoly, f0: HoloPoly) -> Self {
        Self { basis, f, f0 }
    }

    pub fn basis(&self) -> &BiharmonicBasis {
        &self.basis
    }

    /// The generator multiplying `e`.
    pub fn f(&self) -> &HoloPoly {
        &self.f
    }

    /// The free generator of the `rho` coordinate.
    pub fn f0(&self) -> &HoloPoly {
        &self.f0
    }

    /// Sum of two monogenic functions over the same basis; the family is
    /// closed under addition of the generator pairs.
    pub fn add(&self, rhs: &Self) -> Self {
        Self {
            basis: self.basis.clone(),
            f: &self.f + &rhs.f,
            f0: &self.f0 + &rhs.f0,
        }
    }

    /// Evaluates the representation formula at the plane point `(x, y)`.
    pub fn eval(&self, x: f64, y: f64) -> AlgebraElement {
        let b = &self.basis;
        let z = b.z_map(x, y);
        let lin = b.beta1() / b.alpha1() * z + b.sign().unit() * (b.beta2() - b.beta1()) * y;
        let w_rho = lin * self.f.derivative().eval(z) + self.f0.eval(z);
        AlgebraElement::new(self.f.eval(z), w_rho)
    }

    /// The `{e, rho}` coordinates as bivariate polynomials in `(x, y)`.
    pub fn to_algebra_poly(&self) -> AlgebraPoly {
        let b = &self.basis;
        // beta1/alpha1 * Z + sign*i*(beta2 - beta1) * y, expanded in (x, y).
        let lin = &BiPoly::linear(b.alpha1(), b.alpha1() * b.sign().unit())
            .scale(b.beta1() / b.alpha1())
            + &BiPoly::monomial(0, 1, b.sign().unit() * (b.beta2() - b.beta1()));
        let rho = &(&lin * &b.substitute_plane(&self.f.derivative())) + &b.substitute_plane(&self.f0);
        AlgebraPoly { e: b.substitute_plane(&self.f), rho }
    }

    /// Symbolic extraction of the four real components: the `{e, rho}`
    /// coordinates are decomposed over the basis coefficient-wise, exactly as
    /// [`BiharmonicBasis::decompose`] does pointwise.
    pub fn components(&self) -> ComponentSet {
        let ap = self.to_algebra_poly();
        components_of(&ap, &self.basis)
    }

    /// Derivative in closed form: `Phi[F, F0]' = Phi[F', F0']`.
    pub fn derivative(&self) -> Self {
        Self {
            basis: self.basis.clone(),
            f: self.f.derivative(),
            f0: self.f0.derivative(),
        }
    }

    /// The `{e, rho}` coordinates of `dPhi/dy * e1 - dPhi/dx * e2`, which
    /// vanish identically exactly for monogenic functions.
    pub fn cr_residual_compact(&self) -> (BiPoly, BiPoly) {
        cr_residual(&self.to_algebra_poly(), &self.basis)
    }

    /// Checks that the biharmonic operator annihilates every component and
    /// that the algebraic multiplier `(e1^2 + e2^2)^2` vanishes.
    pub fn biharmonic_check(&self, tol: f64) -> BiharmonicReport {
        let set = self.components();
        let residual_polys = set.as_array().map(|u| u.biharmonic_op());
        let component_residuals = [0, 1, 2, 3].map(|k| residual_polys[k].max_coeff_abs());
        let sum_sq = self.basis.e1() * self.basis.e1() + self.basis.e2() * self.basis.e2();
        let multiplier = sum_sq * sum_sq;
        let ok = residual_polys.iter().all(|r| r.is_zero(tol))
            && multiplier.coeff_norm() <= tol * (1.0 + self.basis.e1().coeff_norm().powi(4));
        BiharmonicReport { component_residuals, multiplier, ok }
    }
}

/// Four real component polynomials together with a basis, without any
/// monogenicity guarantee. Supports the negative tests of the
/// Cauchy-Riemann-type condition.
#[derive(Debug, Clone)]
pub struct ComponentAssembly {
    basis: BiharmonicBasis,
    set: ComponentSet,
}

impl ComponentAssembly {
    pub fn new(basis: BiharmonicBasis, set: ComponentSet) -> Self {
        Self { basis, set }
    }

    pub fn basis(&self) -> &BiharmonicBasis {
        &self.basis
    }

    pub fn set(&self) -> &ComponentSet {
        &self.set
    }

    /// `{e, rho}` coordinates of `(u1 + i u2) e1 + (u3 + i u4) e2`.
    pub fn to_algebra_poly(&self) -> AlgebraPoly {
        let c1 = &self.set.u1.to_bipoly() + &self.set.u2.to_bipoly().scale(Complex::new(0.0, 1.0));
        let c2 = &self.set.u3.to_bipoly() + &self.set.u4.to_bipoly().scale(Complex::new(0.0, 1.0));
        let e1 = self.basis.e1();
        let e2 = self.basis.e2();
        AlgebraPoly {
            e: &c1.scale(e1.w_e) + &c2.scale(e2.w_e),
            rho: &c1.scale(e1.w_rho) + &c2.scale(e2.w_rho),
        }
    }

    pub fn eval(&self, x: f64, y: f64) -> AlgebraElement {
        self.to_algebra_poly().eval(x, y)
    }

    pub fn cr_residual_compact(&self) -> (BiPoly, BiPoly) {
        cr_residual(&self.to_algebra_poly(), &self.basis)
    }
}

/// Decomposes an algebra-valued polynomial over the basis coefficient-wise.
pub fn components_of(ap: &AlgebraPoly, basis: &BiharmonicBasis) -> ComponentSet {
    let d = basis.alpha1() * (basis.beta2() - basis.beta1());
    let c1 = (&ap.e.scale(basis.beta2()) - &ap.rho.scale(basis.alpha1())).scale(d.inv());
    let c2 = (&ap.rho.scale(basis.alpha1()) - &ap.e.scale(basis.beta1()))
        .scale((basis.sign().unit() * d).inv());
    ComponentSet { u1: c1.re_part(), u2: c1.im_part(), u3: c2.re_part(), u4: c2.im_part() }
}

fn cr_residual(ap: &AlgebraPoly, basis: &BiharmonicBasis) -> (BiPoly, BiPoly) {
    let r = ap.dy().mul_element(basis.e1()).sub(&ap.dx().mul_element(basis.e2()));
    (r.e, r.rho)
}

/// Left-hand sides of the four scalar equations equivalent to the compact
/// Cauchy-Riemann-type condition, evaluated on component polynomials.
/// The stack vanishes iff the compact residual does.
pub fn cr_residual_expanded(set: &ComponentSet, basis: &BiharmonicBasis) -> [RealBiPoly; 4] {
    let s = basis.sign().signum();
    let b1 = basis.beta1();
    let b2 = basis.beta2();
    let sum = b1 + b2;

    let [u1, u2, u3, u4] = set.as_array();
    let (u1y, u2y, u3y, u4y) = (u1.dy(), u2.dy(), u3.dy(), u4.dy());
    let (u1x, u2x, u3x, u4x) = (u1.dx(), u2.dx(), u3.dx(), u4.dx());

    let combine = |terms: &[(&RealBiPoly, f64)]| {
        terms
            .iter()
            .fold(RealBiPoly::zero(), |acc, (p, k)| &acc + &p.scale(*k))
    };

    let r1 = combine(&[(&u1y, 1.0), (&u4y, -s), (&u2x, s), (&u3x, 1.0)]);
    let r2 = combine(&[(&u2y, 1.0), (&u3y, s), (&u1x, -s), (&u4x, 1.0)]);
    let r3 = combine(&[
        (&u1y, 2.0 * b1.re),
        (&u2y, -2.0 * b1.im),
        (&u3y, -s * sum.im),
        (&u4y, -s * sum.re),
        (&u1x, s * sum.im),
        (&u2x, s * sum.re),
        (&u3x, 2.0 * b2.re),
        (&u4x, -2.0 * b2.im),
    ]);
    let r4 = combine(&[
        (&u1y, 2.0 * b1.im),
        (&u2y, 2.0 * b1.re),
        (&u3y, s * sum.re),
        (&u4y, -s * sum.im),
        (&u1x, -s * sum.re),
        (&u2x, s * sum.im),
        (&u3x, 2.0 * b2.im),
        (&u4x, 2.0 * b2.re),
    ]);
    [r1, r2, r3, r4]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::Sign;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    fn phi(f: HoloPoly, f0: HoloPoly) -> MonogenicFn {
        MonogenicFn::new(BiharmonicBasis::new_basis(), f, f0)
    }

    #[test]
    fn identity_generator_evaluates_to_plane_point() {
        let m = phi(HoloPoly::z(), HoloPoly::zero());
        let at = m.eval(1.0, 1.0);
        assert!(at.approx_eq(&AlgebraElement::from_parts(1.0, 1.0, 1.0, 2.0), 1e-15));
        assert!(at.approx_eq(&m.basis().zeta(1.0, 1.0), 1e-15));
    }

    #[test]
    fn constant_free_generator_evaluates_to_rho() {
        let m = phi(HoloPoly::zero(), HoloPoly::constant(Complex::ONE));
        for (x, y) in [(0.0, 0.0), (1.5, -2.0), (-0.3, 0.7)] {
            assert!(m.eval(x, y).approx_eq(&AlgebraElement::rho(), 1e-15));
        }
    }

    #[test]
    fn quadratic_pair_evaluates_on_axis() {
        let f = HoloPoly::monomial(Complex::ONE, 2);
        let m = phi(f.clone(), f.scale(c(-1.0, 0.0)));
        assert!(m.eval(1.0, 0.0).approx_eq(&AlgebraElement::from_parts(1.0, 0.0, 1.0, 0.0), 1e-15));
    }

    #[test]
    fn components_of_plane_embedding() {
        let set = phi(HoloPoly::z(), HoloPoly::zero()).components();
        assert_eq!(set.u1.coeff(1, 0), 1.0);
        assert_eq!(set.u1.total_degree(), Some(1));
        assert!(set.u2.is_empty());
        assert_eq!(set.u3.coeff(0, 1), 1.0);
        assert_eq!(set.u3.total_degree(), Some(1));
        assert!(set.u4.is_empty());
    }

    #[test]
    fn components_of_rotated_embedding() {
        let set = phi(HoloPoly::monomial(c(0.0, 1.0), 1), HoloPoly::zero()).components();
        assert!(set.u1.is_empty());
        assert_eq!(set.u2.coeff(1, 0), 1.0);
        assert!(set.u3.is_empty());
        assert_eq!(set.u4.coeff(0, 1), 1.0);
    }

    #[test]
    fn first_component_of_square_norm_pair() {
        let f = HoloPoly::monomial(Complex::ONE, 2);
        let set = phi(f.clone(), f.scale(c(-1.0, 0.0))).components();
        assert_eq!(set.u1.coeff(2, 0), 1.0);
        assert_eq!(set.u1.coeff(0, 2), 1.0);
        assert_eq!(set.u1.total_degree(), Some(2));
        assert_eq!(set.u1.terms().count(), 2);
    }

    #[test]
    fn component_recomposition_matches_eval() {
        let b = BiharmonicBasis::new(c(1.5, -0.5), c(0.25, 1.0), c(-1.0, 0.5), Sign::Minus).unwrap();
        let m = MonogenicFn::new(
            b,
            HoloPoly::from_parts(&[(1.0, -0.5), (0.0, 2.0), (0.5, 0.5), (1.0, 0.0)]),
            HoloPoly::from_parts(&[(0.0, 1.0), (2.0, -1.0)]),
        );
        let set = m.components();
        let assembly = ComponentAssembly::new(m.basis().clone(), set);
        for (x, y) in [(0.0, 0.0), (1.0, 1.0), (-0.5, 2.0), (0.3, -0.7)] {
            let direct = m.eval(x, y);
            let recomposed = assembly.eval(x, y);
            assert!(direct.approx_eq(&recomposed, 1e-12 * (1.0 + direct.coeff_norm())));
        }
    }

    #[test]
    fn component_identities_on_distinguished_basis() {
        // On the distinguished basis: U1 = Re(F + G), U2 = Im(F + G),
        // U3 = -Im G, U4 = Re G with G = F - (z + iy) F' - F0, all expanded
        // symbolically from scratch.
        let f = HoloPoly::from_parts(&[(0.5, 1.0), (-1.0, 0.25), (2.0, -0.5), (0.0, 1.5)]);
        let f0 = HoloPoly::from_parts(&[(1.0, 0.0), (0.5, -2.0), (0.0, 0.75)]);
        let m = phi(f.clone(), f0.clone());
        let set = m.components();

        let i = c(0.0, 1.0);
        let z_sub = |p: &HoloPoly| p.compose_linear(Complex::ONE, i);
        let z_plus_iy = &BiPoly::linear(Complex::ONE, i) + &BiPoly::monomial(0, 1, i);
        let g = &(&z_sub(&f) - &(&z_plus_iy * &z_sub(&f.derivative()))) - &z_sub(&f0);
        let f_plus_g = &z_sub(&f) + &g;

        assert!((&set.u1 - &f_plus_g.re_part()).is_zero(1e-13));
        assert!((&set.u2 - &f_plus_g.im_part()).is_zero(1e-13));
        assert!((&set.u3 - &g.im_part().scale(-1.0)).is_zero(1e-13));
        assert!((&set.u4 - &g.re_part()).is_zero(1e-13));
    }

    #[test]
    fn eval_reduces_on_identity_first_vector() {
        // With e1 = e the representation collapses to
        // F(x +/- iy) e + (sign*i*beta2*y F'(x +/- iy) + F0(x +/- iy)) rho.
        let beta2 = c(0.75, -0.5);
        let b = BiharmonicBasis::e_identity(beta2, Sign::Minus).unwrap();
        let f = HoloPoly::from_parts(&[(1.0, -0.5), (0.0, 2.0), (0.5, 0.5)]);
        let f0 = HoloPoly::from_parts(&[(0.0, 1.0), (2.0, -1.0)]);
        let m = MonogenicFn::new(b, f.clone(), f0.clone());
        for (x, y) in [(0.4, -0.9), (1.1, 0.2), (-0.6, -0.5)] {
            let z = c(x, -y);
            let expected = AlgebraElement::new(
                f.eval(z),
                c(0.0, -1.0) * beta2 * y * f.derivative().eval(z) + f0.eval(z),
            );
            let got = m.eval(x, y);
            assert!(got.approx_eq(&expected, 1e-13 * (1.0 + expected.coeff_norm())));
        }
    }

    #[test]
    fn derivative_is_generator_derivative() {
        let m = phi(HoloPoly::monomial(Complex::ONE, 2), HoloPoly::z());
        let d = m.derivative();
        assert_eq!(d.f(), &HoloPoly::monomial(c(2.0, 0.0), 1));
        assert_eq!(d.f0(), &HoloPoly::constant(Complex::ONE));
    }

    #[test]
    fn derivative_of_constants_vanishes() {
        let m = phi(HoloPoly::constant(c(2.0, 1.0)), HoloPoly::constant(c(-1.0, 3.0)));
        let d = m.derivative();
        assert!(d.f().is_zero() && d.f0().is_zero());
    }

    #[test]
    fn fourth_derivative_of_cubic_vanishes() {
        let mut m = phi(HoloPoly::monomial(Complex::ONE, 3), HoloPoly::zero());
        for _ in 0..4 {
            m = m.derivative();
        }
        assert!(m.f().is_zero() && m.f0().is_zero());
        assert!(m.eval(0.7, -0.2).is_zero());
    }

    #[test]
    fn derivative_agrees_with_x_partial_times_e1_inverse() {
        let b = BiharmonicBasis::new(c(0.8, 0.3), c(-0.5, 1.0), c(1.5, -0.25), Sign::Plus).unwrap();
        let m = MonogenicFn::new(
            b.clone(),
            HoloPoly::from_parts(&[(1.0, 1.0), (0.5, 0.0), (0.0, -1.0), (0.25, 0.5)]),
            HoloPoly::from_parts(&[(0.0, 0.5), (1.0, -1.0), (0.5, 0.5)]),
        );
        let dx = m.to_algebra_poly().dx();
        let e1_inv = b.e1().inverse().unwrap();
        let d = m.derivative();
        for (x, y) in [(0.4, -0.9), (1.1, 0.2), (-0.6, -0.5)] {
            let via_partial = dx.eval(x, y) * e1_inv;
            let direct = d.eval(x, y);
            assert!(via_partial.approx_eq(&direct, 1e-12 * (1.0 + direct.coeff_norm())));
        }
    }

    #[test]
    fn compact_residual_vanishes_for_monogenic_functions() {
        let m = phi(
            HoloPoly::from_parts(&[(1.0, 0.0), (0.0, 1.0), (2.0, -1.0)]),
            HoloPoly::from_parts(&[(0.5, 0.5), (1.0, 0.0)]),
        );
        let (re, rr) = m.cr_residual_compact();
        assert!(re.is_zero(1e-13));
        assert!(rr.is_zero(1e-13));
    }

    #[test]
    fn compact_residual_detects_raw_first_component() {
        // (U1, U2, U3, U4) = (x, 0, 0, 0) gives residual -e1*e2 = -i(e + 3 rho).
        let b = BiharmonicBasis::new_basis();
        let set = ComponentSet {
            u1: RealBiPoly::monomial(1, 0, 1.0),
            u2: RealBiPoly::zero(),
            u3: RealBiPoly::zero(),
            u4: RealBiPoly::zero(),
        };
        let (re, rr) = ComponentAssembly::new(b, set).cr_residual_compact();
        assert_eq!(re.coeff(0, 0), c(0.0, -1.0));
        assert_eq!(re.total_degree(), Some(0));
        assert_eq!(rr.coeff(0, 0), c(0.0, -3.0));
        assert_eq!(rr.total_degree(), Some(0));
    }

    #[test]
    fn expanded_residuals_vanish_with_compact() {
        let b = BiharmonicBasis::new(c(1.2, 0.4), c(0.3, -0.8), c(-0.9, 0.6), Sign::Minus).unwrap();
        let m = MonogenicFn::new(
            b.clone(),
            HoloPoly::from_parts(&[(0.5, -1.0), (1.0, 1.0), (0.0, 0.5)]),
            HoloPoly::from_parts(&[(2.0, 0.0), (-0.5, 0.5)]),
        );
        for r in cr_residual_expanded(&m.components(), &b) {
            assert!(r.is_zero(1e-12));
        }
    }

    #[test]
    fn expanded_residuals_detect_raw_first_component() {
        let b = BiharmonicBasis::new_basis();
        let set = ComponentSet {
            u1: RealBiPoly::monomial(1, 0, 1.0),
            u2: RealBiPoly::zero(),
            u3: RealBiPoly::zero(),
            u4: RealBiPoly::zero(),
        };
        let residuals = cr_residual_expanded(&set, &b);
        assert!(residuals.iter().any(|r| !r.is_zero(1e-9)));
    }

    #[test]
    fn expanded_residuals_of_zero_components_vanish() {
        let b = BiharmonicBasis::gp_basis();
        let set = ComponentSet {
            u1: RealBiPoly::zero(),
            u2: RealBiPoly::zero(),
            u3: RealBiPoly::zero(),
            u4: RealBiPoly::zero(),
        };
        for r in cr_residual_expanded(&set, &b) {
            assert!(r.is_empty());
        }
    }

    #[test]
    fn biharmonic_check_on_cubic_pair() {
        let m = phi(HoloPoly::monomial(Complex::ONE, 3), HoloPoly::monomial(Complex::ONE, 2));
        let report = m.biharmonic_check(1e-12);
        assert!(report.ok);
        assert_eq!(report.component_residuals, [0.0; 4]);
        assert!(report.multiplier.is_zero());
    }

    #[test]
    fn multiplier_vanishes_on_distinguished_basis() {
        // e1^2 + e2^2 = -2 rho, so the multiplier is (-2 rho)^2 = 0.
        let b = BiharmonicBasis::new_basis();
        let sum_sq = b.e1() * b.e1() + b.e2() * b.e2();
        assert_eq!(sum_sq, AlgebraElement::from_parts(0.0, 0.0, -2.0, 0.0));
        assert!((sum_sq * sum_sq).is_zero());
    }

    #[test]
    fn biharmonic_check_of_zero_function() {
        let report = phi(HoloPoly::zero(), HoloPoly::zero()).biharmonic_check(1e-15);
        assert!(report.ok);
    }

    fn arb_holo(max_deg: usize) -> impl Strategy<Value = HoloPoly> {
        proptest::collection::vec((-2.0..2.0f64, -2.0..2.0f64), 0..=max_deg + 1)
            .prop_map(|parts| HoloPoly::from_parts(&parts))
    }

    fn arb_basis() -> impl Strategy<Value = BiharmonicBasis> {
        (
            0.3..3.0f64,
            0.0..std::f64::consts::TAU,
            (-2.0..2.0f64, -2.0..2.0f64),
            (-2.0..2.0f64, -2.0..2.0f64),
            proptest::bool::ANY,
        )
            .prop_filter_map("betas too close", |(r, th, b1, b2, minus)| {
                let alpha1 = Complex::from_polar(r, th);
                let beta1 = Complex::new(b1.0, b1.1);
                let beta2 = Complex::new(b2.0, b2.1);
                if (beta1 - beta2).norm() < 0.3 {
                    return None;
                }
                let sign = if minus { Sign::Minus } else { Sign::Plus };
                BiharmonicBasis::new(alpha1, beta1, beta2, sign).ok()
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn compact_residual_vanishes_on_random_generators(
            b in arb_basis(),
            f in arb_holo(6),
            f0 in arb_holo(6),
        ) {
            let m = MonogenicFn::new(b, f, f0);
            let (re, rr) = m.cr_residual_compact();
            prop_assert!(re.is_zero(1e-10));
            prop_assert!(rr.is_zero(1e-10));
        }

        #[test]
        fn expanded_matches_compact_on_perturbed_components(
            b in arb_basis(),
            f in arb_holo(4),
            f0 in arb_holo(4),
            bump in -2.0..2.0f64,
            perturb in proptest::bool::ANY,
        ) {
            let m = MonogenicFn::new(b.clone(), f, f0);
            let mut set = m.components();
            if perturb && bump.abs() > 0.1 {
                set.u1 = &set.u1 + &RealBiPoly::monomial(2, 0, bump);
            }
            let assembly = ComponentAssembly::new(b.clone(), set.clone());
            let (re, rr) = assembly.cr_residual_compact();
            let compact_zero = re.is_zero(1e-10) && rr.is_zero(1e-10);
            let expanded_zero = cr_residual_expanded(&set, &b).iter().all(|r| r.is_zero(1e-10));
            prop_assert_eq!(compact_zero, expanded_zero);
        }

        #[test]
        fn recomposition_at_random_points(
            b in arb_basis(),
            f in arb_holo(5),
            f0 in arb_holo(5),
            x in -2.0..2.0f64,
            y in -2.0..2.0f64,
        ) {
            let m = MonogenicFn::new(b.clone(), f, f0);
            let assembly = ComponentAssembly::new(b, m.components());
            let direct = m.eval(x, y);
            let recomposed = assembly.eval(x, y);
            prop_assert!(direct.approx_eq(&recomposed, 1e-10 * (1.0 + direct.coeff_norm())));
        }
    }
}
