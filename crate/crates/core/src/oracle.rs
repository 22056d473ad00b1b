//! Finite-difference reference derivatives.
//!
//! Evaluates expressions only through [`Expr::eval`], so the results are
//! independent of the jet arithmetic they are used to check.

use serde::Serialize;

use crate::domain::Point2;
use crate::error::{Error, EvalError, Result};
use crate::expr::Expr;
use crate::jet::Jet2;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scheme {
    /// 5-point central stencils for first and pure second derivatives; the
    /// mixed derivative uses their tensor product, so every component is
    /// fourth-order accurate.
    Central5,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FdConfig {
    /// Step for first partials.
    pub h_first: f64,
    /// Step for second partials.
    pub h_second: f64,
    pub scheme: Scheme,
}

impl Default for FdConfig {
    fn default() -> Self {
        FdConfig {
            h_first: 1e-4,
            h_second: 1e-3,
            scheme: Scheme::Central5,
        }
    }
}

impl FdConfig {
    pub const MIN_STEP: f64 = 1e-6;
    pub const MAX_STEP: f64 = 1e-2;

    pub fn new(h_first: f64, h_second: f64) -> Result<Self> {
        let cfg = FdConfig {
            h_first,
            h_second,
            scheme: Scheme::Central5,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    /// Same step for every stencil.
    pub fn uniform(h: f64) -> Result<Self> {
        FdConfig::new(h, h)
    }

    pub fn validate(&self) -> Result<()> {
        for h in [self.h_first, self.h_second] {
            if !(Self::MIN_STEP..=Self::MAX_STEP).contains(&h) {
                return Err(Error::InvalidConfig(format!(
                    "step {h:e} outside [{:e}, {:e}]",
                    Self::MIN_STEP,
                    Self::MAX_STEP
                )));
            }
        }
        Ok(())
    }
}

pub fn fd_jet<T: Scalar>(s: &Expr, p: Point2<T>, cfg: &FdConfig) -> Result<Jet2<T>> {
    cfg.validate()?;
    let f = |x: T, y: T| {
        s.eval(x, y).map_err(|source| Error::Eval {
            x: x.to_f64().unwrap_or(f64::NAN),
            y: y.to_f64().unwrap_or(f64::NAN),
            source,
        })
    };
    let (x, y) = (p.x, p.y);
    let h1 = T::lit(cfg.h_first);
    let h2 = T::lit(cfg.h_second);
    let two = T::lit(2.0);
    let eight = T::lit(8.0);
    let twelve = T::lit(12.0);
    let sixteen = T::lit(16.0);
    let thirty = T::lit(30.0);

    let v = f(x, y)?;

    let first = |g: &dyn Fn(T) -> Result<T>| -> Result<T> {
        Ok((-g(two * h1)? + eight * g(h1)? - eight * g(-h1)? + g(-two * h1)?) / (twelve * h1))
    };
    let second = |g: &dyn Fn(T) -> Result<T>| -> Result<T> {
        Ok(
            (-g(two * h2)? + sixteen * g(h2)? - thirty * v + sixteen * g(-h2)? - g(-two * h2)?)
                / (twelve * h2 * h2),
        )
    };
    let along_x = |t: T| f(x + t, y);
    let along_y = |t: T| f(x, y + t);

    let dx = first(&along_x)?;
    let dy = first(&along_y)?;
    let dxx = second(&along_x)?;
    let dyy = second(&along_y)?;
    const OFFSETS: [(f64, f64); 4] = [(-2.0, 1.0), (-1.0, -8.0), (1.0, 8.0), (2.0, -1.0)];
    let mut acc = T::zero();
    for (oi, wi) in OFFSETS {
        for (oj, wj) in OFFSETS {
            acc = acc + T::lit(wi * wj) * f(x + T::lit(oi) * h2, y + T::lit(oj) * h2)?;
        }
    }
    let dxy = acc / (T::lit(144.0) * h2 * h2);

    let out = Jet2::new(v, dx, dy, dxx, dxy, dyy);
    if out.components().iter().all(|c| c.is_finite()) {
        Ok(out)
    } else {
        Err(Error::Arithmetic(EvalError::Overflow))
    }
}

/// Mixed partial by differencing the first-order stencil in `x` along `y`
/// (`order_xy = true`) or the other way around.
pub fn fd_mixed_nested<T: Scalar>(s: &Expr, p: Point2<T>, h: f64, order_xy: bool) -> Result<T> {
    let h = T::lit(h);
    let two = T::lit(2.0);
    let f = |x: T, y: T| s.eval(x, y).map_err(Error::from);
    let d_inner = |x: T, y: T| -> Result<T> {
        if order_xy {
            Ok((f(x + h, y)? - f(x - h, y)?) / (two * h))
        } else {
            Ok((f(x, y + h)? - f(x, y - h)?) / (two * h))
        }
    };
    if order_xy {
        Ok((d_inner(p.x, p.y + h)? - d_inner(p.x, p.y - h)?) / (two * h))
    } else {
        Ok((d_inner(p.x + h, p.y)? - d_inner(p.x - h, p.y)?) / (two * h))
    }
}

pub const COMPONENT_NAMES: [&str; 6] = ["v", "dx", "dy", "dxx", "dxy", "dyy"];

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ComponentDeviation {
    pub component: &'static str,
    pub a: f64,
    pub b: f64,
    pub abs_diff: f64,
    pub allowed: f64,
    pub flagged: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Comparison {
    pub components: Vec<ComponentDeviation>,
}

impl Comparison {
    pub fn flags(&self) -> usize {
        self.components.iter().filter(|c| c.flagged).count()
    }

    pub fn passed(&self) -> bool {
        self.flags() == 0
    }
}

/// Flags every component with `|a - b| > tol_rel * (1 + |a|)`.
pub fn compare<T: Scalar>(a: &Jet2<T>, b: &Jet2<T>, tol_rel: f64) -> Comparison {
    let components = a
        .components()
        .iter()
        .zip(b.components())
        .zip(COMPONENT_NAMES)
        .map(|((&a, b), component)| {
            let a = a.to_f64().unwrap_or(f64::NAN);
            let b = b.to_f64().unwrap_or(f64::NAN);
            let abs_diff = (a - b).abs();
            let allowed = tol_rel * (1.0 + a.abs());
            ComponentDeviation {
                component,
                a,
                b,
                abs_diff,
                allowed,
                flagged: !(abs_diff <= allowed),
            }
        })
        .collect();
    Comparison { components }
}
