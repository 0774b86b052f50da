//! Reconstruction of monogenic lifts of biharmonic functions over the
//! distinguished basis `e1 = e + rho`, `e2 = i(e + 2 rho)`: the Goursat
//! representation `u = Re(psi(z) + conj(z) phi(z))`, the lift whose first
//! component realizes a prescribed Goursat form, the four-parameter family of
//! monogenic functions with vanishing first component, and a rank oracle for
//! the kernel of the first-component map on polynomial generators.

use nalgebra::DMatrix;

use crate::algebra::Complex;
use crate::basis::BiharmonicBasis;
use crate::monogenic::MonogenicFn;
use crate::poly::{BiPoly, HoloPoly, RealBiPoly};

/// Relative singular-value threshold for rank decisions in [`u1_kernel`].
pub const RANK_TOL: f64 = 1e-9;

fn conj_z() -> BiPoly {
    BiPoly::linear(Complex::ONE, Complex::new(0.0, -1.0))
}

/// A pair of holomorphic functions representing the biharmonic function
/// `u(x, y) = Re(psi(z) + conj(z) phi(z))`.
#[derive(Debug, Clone)]
pub struct GoursatPair {
    pub psi: HoloPoly,
    pub phi: HoloPoly,
}

impl GoursatPair {
    pub fn new(psi: HoloPoly, phi: HoloPoly) -> Self {
        Self { psi, phi }
    }

    /// Expands `Re(psi(z) + conj(z) phi(z))` symbolically. The result is
    /// always annihilated by the biharmonic operator.
    pub fn u(&self) -> RealBiPoly {
        (&self.psi.substitute_z() + &(&conj_z() * &self.phi.substitute_z())).re_part()
    }
}

/// Parameters `(a, b, c, d)` of the family of monogenic functions with
/// identically vanishing first component:
/// `a (zeta + z rho) + b i e1 + c e2 + d i e2`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Phi0Params {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl Phi0Params {
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Self {
        Self { a, b, c, d }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    /// The equivalent generator form over the distinguished basis:
    /// `F = a z + (b + c) i - d`, `F0 = a z + (b + 2c) i - 2d`.
    pub fn to_monogenic(&self) -> MonogenicFn {
        let f = HoloPoly::new(vec![
            Complex::new(-self.d, self.b + self.c),
            Complex::new(self.a, 0.0),
        ]);
        let f0 = HoloPoly::new(vec![
            Complex::new(-2.0 * self.d, self.b + 2.0 * self.c),
            Complex::new(self.a, 0.0),
        ]);
        MonogenicFn::new(BiharmonicBasis::new_basis(), f, f0)
    }
}

/// Builds the monogenic function with generators `F = 2 f2` and
/// `F0 = 4 f2 - f1 - 3 z f2'` over the distinguished basis. Its first
/// component is exactly `Re(f1 + conj(z) f2')`.
pub fn lift(f1: &HoloPoly, f2: &HoloPoly) -> MonogenicFn {
    let two = Complex::new(2.0, 0.0);
    let f = f2.scale(two);
    let f0 = &(&f2.scale(two * 2.0) - f1) - &(&HoloPoly::z() * &f2.derivative()).scale(Complex::new(3.0, 0.0));
    MonogenicFn::new(BiharmonicBasis::new_basis(), f, f0)
}

/// Reconstructs a monogenic function whose first component equals the
/// Goursat form of `g`: with `P` the primitive of `phi` (constant zero),
/// returns `Phi[2P, 4P - psi - 3 z phi]` plus the family member of `p`,
/// collapsed to a single generator pair. The first component of the result
/// is `g.u()` independently of `p`.
pub fn reconstruct(g: &GoursatPair, p: &Phi0Params) -> MonogenicFn {
    let prim = g.phi.primitive();
    let two = Complex::new(2.0, 0.0);
    let f = prim.scale(two);
    let f0 = &(&prim.scale(two * 2.0) - &g.psi)
        - &(&HoloPoly::z() * &g.phi).scale(Complex::new(3.0, 0.0));
    MonogenicFn::new(BiharmonicBasis::new_basis(), f, f0).add(&p.to_monogenic())
}

/// Nullspace of the real-linear map from generator coefficients `(F, F0)` of
/// degree at most `max_degree` to the coefficients of the first component.
#[derive(Debug, Clone)]
pub struct KernelBasis {
    pub max_degree: usize,
    /// Measured nullspace dimension at the [`RANK_TOL`] threshold.
    pub dimension: usize,
    /// Generator pairs spanning the kernel.
    pub pairs: Vec<(HoloPoly, HoloPoly)>,
    ortho: Vec<Vec<f64>>,
}

impl KernelBasis {
    /// Real coordinate layout of a generator pair: `(Re, Im)` of each `F`
    /// coefficient in ascending degree, then the same for `F0`.
    fn flatten(f: &HoloPoly, f0: &HoloPoly, max_degree: usize) -> Vec<f64> {
        let mut v = Vec::with_capacity(4 * (max_degree + 1));
        for p in [f, f0] {
            for k in 0..=max_degree {
                let c = p.coeff(k);
                v.push(c.re);
                v.push(c.im);
            }
        }
        v
    }

    fn unflatten(v: &[f64], max_degree: usize) -> (HoloPoly, HoloPoly) {
        let half = 2 * (max_degree + 1);
        let poly = |chunk: &[f64]| {
            HoloPoly::new(chunk.chunks_exact(2).map(|p| Complex::new(p[0], p[1])).collect())
        };
        (poly(&v[..half]), poly(&v[half..]))
    }

    /// Whether the generator pair lies in the span of the kernel basis,
    /// measured by the projection residual relative to the vector norm.
    pub fn contains(&self, f: &HoloPoly, f0: &HoloPoly, tol: f64) -> bool {
        let over = |p: &HoloPoly| p.degree().is_some_and(|d| d > self.max_degree);
        if over(f) || over(f0) {
            return false;
        }
        let v = Self::flatten(f, f0, self.max_degree);
        let norm = |w: &[f64]| w.iter().map(|x| x * x).sum::<f64>().sqrt();
        let scale = norm(&v);
        if scale == 0.0 {
            return true;
        }
        let mut residual = v.clone();
        for basis_vec in &self.ortho {
            let dot: f64 = basis_vec.iter().zip(&v).map(|(a, b)| a * b).sum();
            for (r, b) in residual.iter_mut().zip(basis_vec) {
                *r -= dot * b;
            }
        }
        norm(&residual) <= tol * scale
    }
}

/// Assembles the first-component coefficient matrix over all generator pairs
/// of degree at most `max_degree` and returns its nullspace, with the rank
/// decided by a singular-value threshold of [`RANK_TOL`] relative to the
/// largest singular value.
pub fn u1_kernel(max_degree: usize) -> KernelBasis {
    let cols = 4 * (max_degree + 1);
    // Row per monomial x^i y^j of total degree <= max_degree.
    let mut row_index = std::collections::BTreeMap::new();
    for i in 0..=max_degree as u32 {
        for j in 0..=(max_degree as u32 - i) {
            let next = row_index.len();
            row_index.insert((i, j), next);
        }
    }
    // Pad with zero rows so the decomposition always carries a full set of
    // right singular vectors.
    let rows = row_index.len().max(cols);

    let basis = BiharmonicBasis::new_basis();
    let mut matrix = DMatrix::<f64>::zeros(rows, cols);
    for col in 0..cols {
        let mut v = vec![0.0; cols];
        v[col] = 1.0;
        let (f, f0) = KernelBasis::unflatten(&v, max_degree);
        let u1 = MonogenicFn::new(basis.clone(), f, f0).components().u1;
        for ((i, j), c) in u1.terms() {
            matrix[(row_index[&(i, j)], col)] = c;
        }
    }

    let svd = matrix.svd(false, true);
    let v_t = svd.v_t.expect("requested right singular vectors");
    let sigma_max = svd.singular_values.iter().cloned().fold(0.0, f64::max);
    let threshold = RANK_TOL * sigma_max;

    let mut ortho = Vec::new();
    let mut pairs = Vec::new();
    for (idx, sigma) in svd.singular_values.iter().enumerate() {
        if *sigma <= threshold {
            let vec: Vec<f64> = v_t.row(idx).iter().cloned().collect();
            pairs.push(KernelBasis::unflatten(&vec, max_degree));
            ortho.push(vec);
        }
    }

    KernelBasis { max_degree, dimension: ortho.len(), pairs, ortho }
}
