//! Grid-based numerical verification: pointwise component sampling,
//! finite-difference residuals for the Cauchy-Riemann-type condition and the
//! biharmonic equation, and a direct probe of the limit definition of the
//! derivative in the plane.

use thiserror::Error;

use crate::algebra::AlgebraElement;
use crate::basis::BiharmonicBasis;
use crate::monogenic::MonogenicFn;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumericError {
    #[error("invalid grid: {0}")]
    InvalidSpec(String),
    #[error("grid too small: need at least {needed} points per axis, got {got}")]
    GridTooSmall { needed: usize, got: usize },
    #[error("degenerate probe direction: the step element is zero")]
    DegenerateDirection,
}

/// A uniform rectangular sampling grid with `n` points per axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub x0: f64,
    pub y0: f64,
    pub x1: f64,
    pub y1: f64,
    pub n: usize,
}

impl GridSpec {
    /// Validates corners and point count (`n >= 5`: the 13-point stencil
    /// needs a two-cell interior margin).
    pub fn new(x0: f64, y0: f64, x1: f64, y1: f64, n: usize) -> Result<Self, NumericError> {
        if ![x0, y0, x1, y1].iter().all(|v| v.is_finite()) {
            return Err(NumericError::InvalidSpec("corners must be finite".into()));
        }
        if x1 <= x0 || y1 <= y0 {
            return Err(NumericError::InvalidSpec(format!(
                "corners must satisfy x1 > x0 and y1 > y0, got [{x0}, {x1}] x [{y0}, {y1}]"
            )));
        }
        if n < 5 {
            return Err(NumericError::GridTooSmall { needed: 5, got: n });
        }
        Ok(Self { x0, y0, x1, y1, n })
    }

    pub fn step_x(&self) -> f64 {
        (self.x1 - self.x0) / (self.n - 1) as f64
    }

    pub fn step_y(&self) -> f64 {
        (self.y1 - self.y0) / (self.n - 1) as f64
    }

    pub fn x(&self, i: usize) -> f64 {
        self.x0 + self.step_x() * i as f64
    }

    pub fn y(&self, j: usize) -> f64 {
        self.y0 + self.step_y() * j as f64
    }

    /// Flat index of the grid node `(i, j)`; arrays are row-major with the
    /// `y` index as the row: `idx = j * n + i`.
    pub fn idx(&self, i: usize, j: usize) -> usize {
        j * self.n + i
    }
}

/// Samples the four component polynomials of `m` on the grid, returning four
/// row-major `n * n` arrays.
pub fn sample_components(m: &MonogenicFn, g: &GridSpec) -> [Vec<f64>; 4] {
    let set = m.components();
    let mut out = [(); 4].map(|_| vec![0.0; g.n * g.n]);
    for j in 0..g.n {
        let y = g.y(j);
        for i in 0..g.n {
            let x = g.x(i);
            let values = set.eval(x, y);
            for (k, v) in values.iter().enumerate() {
                out[k][g.idx(i, j)] = *v;
            }
        }
    }
    out
}

/// Applies the 13-point biharmonic stencil to a row-major `n * n` field with
/// uniform spacing `h` and returns the largest magnitude over the two-cell
/// interior. For samples of a biharmonic function this is the discretization
/// residual, `O(h^2)`.
pub fn fd_biharmonic_residual(u: &[f64], n: usize, h: f64) -> Result<f64, NumericError> {
    fd_biharmonic_residual_margin(u, n, h, 2)
}

/// Variant of [`fd_biharmonic_residual`] with a configurable cell margin
/// (`margin >= 2`). Convergence studies over nested grids use margins that
/// pin the measurement window to a fixed physical region.
pub fn fd_biharmonic_residual_margin(
    u: &[f64],
    n: usize,
    h: f64,
    margin: usize,
) -> Result<f64, NumericError> {
    let margin = margin.max(2);
    if n < 2 * margin + 1 {
        return Err(NumericError::GridTooSmall { needed: 2 * margin + 1, got: n });
    }
    assert_eq!(u.len(), n * n, "field length must be n * n");
    let at = |i: usize, j: usize| u[j * n + i];
    let h4 = h * h * h * h;
    let mut max_res = 0.0f64;
    for j in margin..n - margin {
        for i in margin..n - margin {
            let value = 20.0 * at(i, j)
                - 8.0 * (at(i + 1, j) + at(i - 1, j) + at(i, j + 1) + at(i, j - 1))
                + 2.0 * (at(i + 1, j + 1) + at(i + 1, j - 1) + at(i - 1, j + 1) + at(i - 1, j - 1))
                + at(i + 2, j)
                + at(i - 2, j)
                + at(i, j + 2)
                + at(i, j - 2);
            max_res = max_res.max((value / h4).abs());
        }
    }
    Ok(max_res)
}

/// Central-difference residual of the Cauchy-Riemann-type condition
/// `dPhi/dy e1 - dPhi/dx e2` for an arbitrary algebra-valued field, measured
/// in the Euclidean norm of the basis and maximized over the one-cell
/// interior. Decays as `O(h^2)` for monogenic fields.
pub fn fd_cr_residual<F>(field: F, basis: &BiharmonicBasis, g: &GridSpec) -> Result<f64, NumericError>
where
    F: Fn(f64, f64) -> AlgebraElement,
{
    fd_cr_residual_margin(field, basis, g, 1)
}

/// Variant of [`fd_cr_residual`] with a configurable cell margin
/// (`margin >= 1`), for convergence studies over nested grids.
pub fn fd_cr_residual_margin<F>(
    field: F,
    basis: &BiharmonicBasis,
    g: &GridSpec,
    margin: usize,
) -> Result<f64, NumericError>
where
    F: Fn(f64, f64) -> AlgebraElement,
{
    let margin = margin.max(1);
    if g.n < 2 * margin + 1 {
        return Err(NumericError::GridTooSmall { needed: 2 * margin + 1, got: g.n });
    }
    let mut values = Vec::with_capacity(g.n * g.n);
    for j in 0..g.n {
        for i in 0..g.n {
            values.push(field(g.x(i), g.y(j)));
        }
    }
    let at = |i: usize, j: usize| values[g.idx(i, j)];
    let inv_2hx = 1.0 / (2.0 * g.step_x());
    let inv_2hy = 1.0 / (2.0 * g.step_y());
    let e1 = basis.e1();
    let e2 = basis.e2();
    let mut max_res = 0.0f64;
    for j in margin..g.n - margin {
        for i in margin..g.n - margin {
            let dx = (at(i + 1, j) - at(i - 1, j)).scale(inv_2hx.into());
            let dy = (at(i, j + 1) - at(i, j - 1)).scale(inv_2hy.into());
            let residual = dy * e1 - dx * e2;
            max_res = max_res.max(basis.norm(residual));
        }
    }
    Ok(max_res)
}

/// Error table of the difference quotient `(Phi(zeta + h) - Phi(zeta)) h^-1`
/// against the closed-form derivative, over a fan of plane directions and a
/// halving ladder of step lengths.
#[derive(Debug, Clone)]
pub struct ProbeTable {
    /// Direction angles in the plane, equally spaced on `[0, 2*pi)`.
    pub thetas: Vec<f64>,
    /// Step lengths, halving from `0.5` down to `t_min`.
    pub steps: Vec<f64>,
    /// `errors[d][s]`: quotient error for direction `d` at step `s`.
    pub errors: Vec<Vec<f64>>,
}

impl ProbeTable {
    /// Ratios `errors[d][s] / errors[d][s+1]`; a value near 2 per halving
    /// means the quotient converges linearly in the step length.
    pub fn halving_ratios(&self, direction: usize) -> Vec<f64> {
        self.errors[direction]
            .windows(2)
            .map(|w| w[0] / w[1])
            .collect()
    }
}

/// Probes the limit definition of the derivative at `(x, y)` along
/// `directions` equally spaced plane directions, with step lengths halving
/// from `0.5` down to `t_min`.
pub fn derivative_limit_probe(
    m: &MonogenicFn,
    x: f64,
    y: f64,
    directions: usize,
    t_min: f64,
) -> Result<ProbeTable, NumericError> {
    if directions == 0 {
        return Err(NumericError::InvalidSpec("need at least one direction".into()));
    }
    if t_min.is_nan() || t_min <= 0.0 {
        return Err(NumericError::DegenerateDirection);
    }
    let basis = m.basis();
    let derivative_at = m.derivative().eval(x, y);
    let value_at = m.eval(x, y);

    let mut steps = Vec::new();
    let mut t = 0.5;
    while t >= t_min && steps.len() < 60 {
        steps.push(t);
        t *= 0.5;
    }
    if steps.is_empty() {
        steps.push(t_min);
    }

    let thetas: Vec<f64> = (0..directions)
        .map(|k| std::f64::consts::TAU * k as f64 / directions as f64)
        .collect();

    let mut errors = Vec::with_capacity(directions);
    for &theta in &thetas {
        let (dir_x, dir_y) = (theta.cos(), theta.sin());
        let mut row = Vec::with_capacity(steps.len());
        for &t in &steps {
            let step = basis.zeta(t * dir_x, t * dir_y);
            if step.is_zero() {
                return Err(NumericError::DegenerateDirection);
            }
            let step_inv = step.inverse().expect("nonzero plane element is invertible");
            let quotient = (m.eval(x + t * dir_x, y + t * dir_y) - value_at) * step_inv;
            row.push(basis.norm(quotient - derivative_at));
        }
        errors.push(row);
    }

    Ok(ProbeTable { thetas, steps, errors })
}

/// Base-2 logarithms of successive residual ratios: the empirical
/// convergence orders of a refinement sequence.
pub fn empirical_orders(residuals: &[f64]) -> Vec<f64> {
    residuals.windows(2).map(|w| (w[0] / w[1]).log2()).collect()
}
