//! Linear Weingarten and Euler-equality residuals, the Jacobian W-surface
//! test, and grid scans over all three.
//!
//! Coefficients follow the relation `a·H + b·K = c`: `a` multiplies the
//! isotropic mean curvature and `b` the relative curvature.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::curvature::{curvatures, CurvaturePair};
use crate::domain::{GridDomain, Point2};
use crate::error::{Error, Result};
use crate::expr::Expr;
use crate::jet::Jet2;
use crate::scalar::Scalar;

/// Coefficients of `a·H + b·K = c`, not all zero.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LwParams {
    /// Coefficient on `H`.
    pub a: f64,
    /// Coefficient on `K`.
    pub b: f64,
    pub c: f64,
}

impl LwParams {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        if a == 0.0 && b == 0.0 && c == 0.0 {
            return Err(Error::Degenerate("linear Weingarten coefficients all zero"));
        }
        Ok(LwParams { a, b, c })
    }

    /// The relation `2·m0·H + K = n0`, i.e. `a = 2·m0`, `b = 1`, `c = n0`.
    pub fn from_normalized(n: NormalizedLw) -> Self {
        LwParams {
            a: 2.0 * n.m0,
            b: 1.0,
            c: n.n0,
        }
    }
}

/// `2·m0·H + K = n0`, obtained by dividing through by `b`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NormalizedLw {
    pub m0: f64,
    pub n0: f64,
}

pub fn lw_residual<T: Scalar>(pair: &CurvaturePair<T>, p: &LwParams) -> T {
    T::lit(p.a) * pair.h + T::lit(p.b) * pair.k - T::lit(p.c)
}

/// Divides by the `K` coefficient: `m0 = a / (2b)`, `n0 = c / b`.
pub fn normalize(p: &LwParams) -> Result<NormalizedLw> {
    if p.b == 0.0 {
        return Err(Error::Degenerate("coefficient on K is zero"));
    }
    Ok(NormalizedLw {
        m0: p.a / (2.0 * p.b),
        n0: p.c / p.b,
    })
}

/// `(z_xx - z_yy)² + 4 z_xy²`, which equals `4(H² - K)`. Vanishes exactly
/// where `K = H²`.
pub fn euler_residual<T: Scalar>(j: &Jet2<T>) -> T {
    let d = j.dxx - j.dyy;
    d * d + T::lit(4.0) * j.dxy * j.dxy
}

fn curvature_at<T: Scalar>(s: &Expr, x: T, y: T) -> Result<CurvaturePair<T>> {
    let j = s.eval_jet(x, y).map_err(|source| Error::Eval {
        x: x.to_f64().unwrap_or(f64::NAN),
        y: y.to_f64().unwrap_or(f64::NAN),
        source,
    })?;
    Ok(curvatures(&j))
}

/// Central-difference estimate of the Jacobian determinant
/// `∂(K, H)/∂(x, y) = K_x H_y - K_y H_x`. Near zero on any Weingarten surface.
pub fn weingarten_jacobian<T: Scalar>(s: &Expr, p: Point2<T>, h: T) -> Result<T> {
    let two_h = h + h;
    let xp = curvature_at(s, p.x + h, p.y)?;
    let xm = curvature_at(s, p.x - h, p.y)?;
    let yp = curvature_at(s, p.x, p.y + h)?;
    let ym = curvature_at(s, p.x, p.y - h)?;
    let kx = (xp.k - xm.k) / two_h;
    let hx = (xp.h - xm.h) / two_h;
    let ky = (yp.k - ym.k) / two_h;
    let hy = (yp.h - ym.h) / two_h;
    Ok(kx * hy - ky * hx)
}

/// Which residual a grid scan evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ResidualKind {
    Lw(LwParams),
    Euler,
    JacobianW { h: f64 },
}

impl ResidualKind {
    pub fn evaluate<T: Scalar>(&self, s: &Expr, p: Point2<T>) -> Result<T> {
        match self {
            ResidualKind::Lw(params) => Ok(lw_residual(&curvature_at(s, p.x, p.y)?, params)),
            ResidualKind::Euler => {
                let j = s.eval_jet(p.x, p.y).map_err(|source| Error::Eval {
                    x: p.x.to_f64().unwrap_or(f64::NAN),
                    y: p.y.to_f64().unwrap_or(f64::NAN),
                    source,
                })?;
                Ok(euler_residual(&j))
            }
            ResidualKind::JacobianW { h } => weingarten_jacobian(s, p, T::lit(*h)),
        }
    }
}

/// Summary statistics of a residual over a sample set.
///
/// `std_dev` is the population standard deviation of the signed values, so a
/// single sample always reports zero.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ResidualReport {
    pub n_samples: usize,
    pub max_abs: f64,
    pub mean_abs: f64,
    pub mean: f64,
    pub std_dev: f64,
    pub worst_point: Point2<f64>,
}

impl ResidualReport {
    /// Aggregates samples in iteration order.
    pub fn from_samples<I>(samples: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Point2<f64>, f64)>,
    {
        let samples: Vec<_> = samples.into_iter().collect();
        let Some(&(first, _)) = samples.first() else {
            return Err(Error::EmptyDomain);
        };
        let n = samples.len() as f64;
        let mut max_abs = -1.0;
        let mut worst_point = first;
        let mut sum = 0.0;
        let mut sum_abs = 0.0;
        for &(p, r) in &samples {
            if r.abs() > max_abs || r.is_nan() {
                max_abs = r.abs();
                worst_point = p;
            }
            sum += r;
            sum_abs += r.abs();
        }
        let mean = sum / n;
        let var = samples
            .iter()
            .map(|&(_, r)| (r - mean) * (r - mean))
            .sum::<f64>()
            / n;
        Ok(ResidualReport {
            n_samples: samples.len(),
            max_abs,
            mean_abs: sum_abs / n,
            mean,
            std_dev: var.sqrt(),
            worst_point,
        })
    }

    pub fn passes(&self, tol: f64) -> bool {
        self.max_abs <= tol
    }
}

/// Evaluates `residual` at every surviving node of `d`. Nodes are evaluated in
/// parallel; the reduction runs in row-major node order, so reports are
/// reproducible.
pub fn scan_grid<T: Scalar>(
    s: &Expr,
    d: &GridDomain,
    residual: &ResidualKind,
) -> Result<ResidualReport> {
    let nodes = d.checked_nodes()?;
    let values: Vec<Result<(Point2<f64>, f64)>> = nodes
        .par_iter()
        .map(|n| {
            let p = Point2::new(T::lit(n.point.x), T::lit(n.point.y));
            let r = residual.evaluate(s, p)?;
            Ok((n.point, r.to_f64().unwrap_or(f64::NAN)))
        })
        .collect();
    let samples = values.into_iter().collect::<Result<Vec<_>>>()?;
    ResidualReport::from_samples(samples)
}
