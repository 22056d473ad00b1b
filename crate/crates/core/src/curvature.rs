//! Isotropic curvature invariants of graph surfaces `z = z(x, y)`.
//!
//! The relative curvature is `K = z_xx z_yy - z_xy²` and the isotropic mean
//! curvature is `H = (z_xx + z_yy) / 2`. For a factorable surface
//! `z = f(x) g(y)` the same pair can be written directly in terms of the
//! factors, see [`factorable_curvatures`].

use serde::Serialize;

use crate::domain::Point3;
use crate::jet::{Jet1, Jet2};
use crate::scalar::Scalar;

/// Relative curvature `k` and isotropic mean curvature `h` at a point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CurvaturePair<T> {
    pub k: T,
    pub h: T,
}

impl<T: Scalar> CurvaturePair<T> {
    /// `H² - K`; zero exactly where the surface satisfies `K = H²`.
    pub fn umbilic_gap(&self) -> T {
        self.h * self.h - self.k
    }
}

pub fn curvatures<T: Scalar>(j: &Jet2<T>) -> CurvaturePair<T> {
    CurvaturePair {
        k: j.dxx * j.dyy - j.dxy * j.dxy,
        h: (j.dxx + j.dyy) * T::lit(0.5),
    }
}

/// Curvatures of `z = f(x) g(y)` from the univariate jets of the factors:
/// `K = (f'' f)(g'' g) - f'² g'²` and `2H = f'' g + f g''`.
pub fn factorable_curvatures<T: Scalar>(f: &Jet1<T>, g: &Jet1<T>) -> CurvaturePair<T> {
    let k = (f.dd * f.v) * (g.dd * g.v) - (f.d * f.d) * (g.d * g.d);
    let two_h = f.dd * g.v + f.v * g.dd;
    CurvaturePair {
        k,
        h: two_h * T::lit(0.5),
    }
}

/// Isotropic distance between two points. The third coordinate is ignored.
///
/// Returns the squared planar distance `(q.x - p.x)² + (q.y - p.y)²` without
/// taking a root.
pub fn isotropic_distance<T: Scalar>(p: &Point3<T>, q: &Point3<T>) -> T {
    let dx = q.x - p.x;
    let dy = q.y - p.y;
    dx * dx + dy * dy
}
