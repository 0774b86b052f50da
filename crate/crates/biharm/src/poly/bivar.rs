//! Bivariate polynomials in the real variables `(x, y)`, sparse over
//! monomials `x^i y^j`, with complex ([`BiPoly`]) or real ([`RealBiPoly`])
//! coefficients.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Sub};

use crate::algebra::Complex;
use crate::poly::DEGREE_CAP;

fn check_cap(i: u32, j: u32) {
    assert!(
        (i + j) as usize <= DEGREE_CAP,
        "bivariate degree {} exceeds cap {DEGREE_CAP}",
        i + j
    );
}

/// A bivariate polynomial `sum c_ij x^i y^j` with complex coefficients.
///
/// Exact-zero coefficients are never stored. Each value carries a magnitude
/// hint (the largest coefficient magnitude seen while the value was being
/// built) so that [`BiPoly::is_zero`] can test for zero relative to the size
/// of the inputs that produced it, even after cancellation.
#[derive(Debug, Clone)]
pub struct BiPoly {
    coeffs: BTreeMap<(u32, u32), Complex>,
    scale_hint: f64,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self { coeffs: BTreeMap::new(), scale_hint: 0.0 }
    }

    pub fn constant(c: Complex) -> Self {
        Self::monomial(0, 0, c)
    }

    /// The monomial `c * x^i y^j`.
    pub fn monomial(i: u32, j: u32, c: Complex) -> Self {
        check_cap(i, j);
        assert!(c.re.is_finite() && c.im.is_finite(), "coefficients must be finite");
        let mut coeffs = BTreeMap::new();
        if c != Complex::ZERO {
            coeffs.insert((i, j), c);
        }
        Self { coeffs, scale_hint: c.norm() }
    }

    /// The linear form `cx * x + cy * y`.
    pub fn linear(cx: Complex, cy: Complex) -> Self {
        &Self::monomial(1, 0, cx) + &Self::monomial(0, 1, cy)
    }

    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), Complex)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for ((i, j), c) in terms {
            check_cap(i, j);
            p.accumulate(i, j, c);
        }
        p.refresh_hint();
        p
    }

    fn accumulate(&mut self, i: u32, j: u32, c: Complex) {
        if c == Complex::ZERO {
            return;
        }
        let entry = self.coeffs.entry((i, j)).or_insert(Complex::ZERO);
        *entry += c;
        if *entry == Complex::ZERO {
            self.coeffs.remove(&(i, j));
        }
    }

    fn refresh_hint(&mut self) {
        self.scale_hint = self.scale_hint.max(self.max_coeff_norm());
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `x^i y^j`.
    pub fn coeff(&self, i: u32, j: u32) -> Complex {
        self.coeffs.get(&(i, j)).copied().unwrap_or(Complex::ZERO)
    }

    /// Iterates stored terms in deterministic (degree-lexicographic key) order.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), Complex)> + '_ {
        self.coeffs.iter().map(|(&k, &c)| (k, c))
    }

    /// Total degree of the largest stored monomial, or `None` when empty.
    pub fn total_degree(&self) -> Option<u32> {
        self.coeffs.keys().map(|&(i, j)| i + j).max()
    }

    pub fn max_coeff_norm(&self) -> f64 {
        self.coeffs.values().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Magnitude hint used by relative zero tests.
    pub fn scale_hint(&self) -> f64 {
        self.scale_hint
    }

    /// True iff every coefficient magnitude is at most `tol * (1 + scale_hint)`.
    pub fn is_zero(&self, tol: f64) -> bool {
        assert!(tol >= 0.0, "tolerance must be non-negative");
        self.max_coeff_norm() <= tol * (1.0 + self.scale_hint)
    }

    pub fn scale(&self, k: Complex) -> Self {
        let mut out = Self::zero();
        for (&key, &c) in &self.coeffs {
            let v = c * k;
            if v != Complex::ZERO {
                out.coeffs.insert(key, v);
            }
        }
        out.scale_hint = self.scale_hint * k.norm();
        out.refresh_hint();
        out
    }

    /// Pointwise evaluation at real `(x, y)`.
    pub fn eval(&self, x: f64, y: f64) -> Complex {
        self.coeffs
            .iter()
            .map(|(&(i, j), &c)| c * x.powi(i as i32) * y.powi(j as i32))
            .sum()
    }

    /// Partial derivative in `x`.
    pub fn dx(&self) -> Self {
        let mut out = Self::zero();
        for (&(i, j), &c) in &self.coeffs {
            if i > 0 {
                out.accumulate(i - 1, j, c * i as f64);
            }
        }
        out.scale_hint = self.scale_hint.max(out.max_coeff_norm());
        out
    }

    /// Partial derivative in `y`.
    pub fn dy(&self) -> Self {
        let mut out = Self::zero();
        for (&(i, j), &c) in &self.coeffs {
            if j > 0 {
                out.accumulate(i, j - 1, c * j as f64);
            }
        }
        out.scale_hint = self.scale_hint.max(out.max_coeff_norm());
        out
    }

    /// Laplacian `d^2/dx^2 + d^2/dy^2`.
    pub fn laplacian(&self) -> Self {
        &self.dx().dx() + &self.dy().dy()
    }

    /// Biharmonic operator `d^4/dx^4 + 2 d^4/dx^2 dy^2 + d^4/dy^4`.
    pub fn biharmonic_op(&self) -> Self {
        let xx = self.dx().dx();
        let yy = self.dy().dy();
        &(&xx.dx().dx() + &xx.dy().dy().scale(Complex::new(2.0, 0.0))) + &yy.dy().dy()
    }

    /// Real parts of the coefficients as a real polynomial.
    pub fn re_part(&self) -> RealBiPoly {
        let mut out = RealBiPoly::zero();
        for (&(i, j), &c) in &self.coeffs {
            out.accumulate(i, j, c.re);
        }
        out.scale_hint = self.scale_hint;
        out
    }

    /// Imaginary parts of the coefficients as a real polynomial.
    pub fn im_part(&self) -> RealBiPoly {
        let mut out = RealBiPoly::zero();
        for (&(i, j), &c) in &self.coeffs {
            out.accumulate(i, j, c.im);
        }
        out.scale_hint = self.scale_hint;
        out
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(i, j), &c) in &rhs.coeffs {
            out.accumulate(i, j, c);
        }
        out.scale_hint = self.scale_hint.max(rhs.scale_hint);
        out.refresh_hint();
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(i, j), &c) in &rhs.coeffs {
            out.accumulate(i, j, -c);
        }
        out.scale_hint = self.scale_hint.max(rhs.scale_hint);
        out.refresh_hint();
        out
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i1, j1), &a) in &self.coeffs {
            for (&(i2, j2), &b) in &rhs.coeffs {
                check_cap(i1 + i2, j1 + j2);
                out.accumulate(i1 + i2, j1 + j2, a * b);
            }
        }
        out.scale_hint = self.scale_hint * rhs.scale_hint;
        out.refresh_hint();
        out
    }
}

/// A bivariate polynomial with real coefficients, the representation of the
/// four real components of an algebra-valued function.
#[derive(Debug, Clone)]
pub struct RealBiPoly {
    coeffs: BTreeMap<(u32, u32), f64>,
    scale_hint: f64,
}

impl RealBiPoly {
    pub fn zero() -> Self {
        Self { coeffs: BTreeMap::new(), scale_hint: 0.0 }
    }

    pub fn constant(c: f64) -> Self {
        Self::monomial(0, 0, c)
    }

    /// The monomial `c * x^i y^j`.
    pub fn monomial(i: u32, j: u32, c: f64) -> Self {
        check_cap(i, j);
        assert!(c.is_finite(), "coefficients must be finite");
        let mut coeffs = BTreeMap::new();
        if c != 0.0 {
            coeffs.insert((i, j), c);
        }
        Self { coeffs, scale_hint: c.abs() }
    }

    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), f64)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for ((i, j), c) in terms {
            check_cap(i, j);
            p.accumulate(i, j, c);
        }
        p.refresh_hint();
        p
    }

    fn accumulate(&mut self, i: u32, j: u32, c: f64) {
        if c == 0.0 {
            return;
        }
        let entry = self.coeffs.entry((i, j)).or_insert(0.0);
        *entry += c;
        if *entry == 0.0 {
            self.coeffs.remove(&(i, j));
        }
    }

    fn refresh_hint(&mut self) {
        self.scale_hint = self.scale_hint.max(self.max_coeff_abs());
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: u32, j: u32) -> f64 {
        self.coeffs.get(&(i, j)).copied().unwrap_or(0.0)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), f64)> + '_ {
        self.coeffs.iter().map(|(&k, &c)| (k, c))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.coeffs.keys().map(|&(i, j)| i + j).max()
    }

    pub fn max_coeff_abs(&self) -> f64 {
        self.coeffs.values().map(|c| c.abs()).fold(0.0, f64::max)
    }

    pub fn scale_hint(&self) -> f64 {
        self.scale_hint
    }

    /// True iff every coefficient magnitude is at most `tol * (1 + scale_hint)`.
    pub fn is_zero(&self, tol: f64) -> bool {
        assert!(tol >= 0.0, "tolerance must be non-negative");
        self.max_coeff_abs() <= tol * (1.0 + self.scale_hint)
    }

    pub fn scale(&self, k: f64) -> Self {
        let mut out = Self::zero();
        for (&key, &c) in &self.coeffs {
            let v = c * k;
            if v != 0.0 {
                out.coeffs.insert(key, v);
            }
        }
        out.scale_hint = self.scale_hint * k.abs();
        out.refresh_hint();
        out
    }

    pub fn eval(&self, x: f64, y: f64) -> f64 {
        self.coeffs
            .iter()
            .map(|(&(i, j), &c)| c * x.powi(i as i32) * y.powi(j as i32))
            .sum()
    }

    pub fn dx(&self) -> Self {
        let mut out = Self::zero();
        for (&(i, j), &c) in &self.coeffs {
            if i > 0 {
                out.accumulate(i - 1, j, c * i as f64);
            }
        }
        out.scale_hint = self.scale_hint.max(out.max_coeff_abs());
        out
    }

    pub fn dy(&self) -> Self {
        let mut out = Self::zero();
        for (&(i, j), &c) in &self.coeffs {
            if j > 0 {
                out.accumulate(i, j - 1, c * j as f64);
            }
        }
        out.scale_hint = self.scale_hint.max(out.max_coeff_abs());
        out
    }

    /// Laplacian `d^2/dx^2 + d^2/dy^2`.
    pub fn laplacian(&self) -> Self {
        &self.dx().dx() + &self.dy().dy()
    }

    /// Biharmonic operator `d^4/dx^4 + 2 d^4/dx^2 dy^2 + d^4/dy^4`.
    pub fn biharmonic_op(&self) -> Self {
        let xx = self.dx().dx();
        let yy = self.dy().dy();
        &(&xx.dx().dx() + &xx.dy().dy().scale(2.0)) + &yy.dy().dy()
    }

    /// The same polynomial with complex coefficients.
    pub fn to_bipoly(&self) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&key, &c) in &self.coeffs {
            out.coeffs.insert(key, Complex::new(c, 0.0));
        }
        out.scale_hint = self.scale_hint;
        out
    }
}

impl Add for &RealBiPoly {
    type Output = RealBiPoly;
    fn add(self, rhs: &RealBiPoly) -> RealBiPoly {
        let mut out = self.clone();
        for (&(i, j), &c) in &rhs.coeffs {
            out.accumulate(i, j, c);
        }
        out.scale_hint = self.scale_hint.max(rhs.scale_hint);
        out.refresh_hint();
        out
    }
}

impl Sub for &RealBiPoly {
    type Output = RealBiPoly;
    fn sub(self, rhs: &RealBiPoly) -> RealBiPoly {
        let mut out = self.clone();
        for (&(i, j), &c) in &rhs.coeffs {
            out.accumulate(i, j, -c);
        }
        out.scale_hint = self.scale_hint.max(rhs.scale_hint);
        out.refresh_hint();
        out
    }
}
