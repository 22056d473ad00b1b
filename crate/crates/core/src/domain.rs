//! Points and rectangular sampling grids with singularity exclusion.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point2<T> {
    pub x: T,
    pub y: T,
}

impl<T> Point2<T> {
    pub fn new(x: T, y: T) -> Self {
        Point2 { x, y }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point3<T> {
    pub x: T,
    pub y: T,
    pub z: T,
}

impl<T> Point3<T> {
    pub fn new(x: T, y: T, z: T) -> Self {
        Point3 { x, y, z }
    }
}

/// A set on which a surface expression is not defined.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SingularLocus {
    /// The vertical line `x = x`.
    VerticalLine {
        x: f64,
    },
    Point {
        x: f64,
        y: f64,
    },
}

impl SingularLocus {
    pub fn distance(&self, p: Point2<f64>) -> f64 {
        match *self {
            SingularLocus::VerticalLine { x } => (p.x - x).abs(),
            SingularLocus::Point { x, y } => (p.x - x).hypot(p.y - y),
        }
    }
}

/// Rectangular `nx × ny` grid over `[x_min, x_max] × [y_min, y_max]`, with
/// nodes closer than `exclusion_radius` to any singular locus skipped.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridDomain {
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
    pub nx: usize,
    pub ny: usize,
    pub exclusion_radius: f64,
    #[serde(default)]
    pub singular_loci: Vec<SingularLocus>,
}

/// A grid node that survived exclusion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridNode {
    pub i: usize,
    pub j: usize,
    pub point: Point2<f64>,
}

impl GridDomain {
    /// Default sampling: 101 × 101 on `[-1, 1]²`, no exclusions.
    pub fn unit_square() -> Self {
        GridDomain::new(-1.0, 1.0, -1.0, 1.0, 101, 101).expect("valid default grid")
    }

    pub fn new(
        x_min: f64,
        x_max: f64,
        y_min: f64,
        y_max: f64,
        nx: usize,
        ny: usize,
    ) -> Result<Self> {
        let d = GridDomain {
            x_min,
            x_max,
            y_min,
            y_max,
            nx,
            ny,
            exclusion_radius: 0.0,
            singular_loci: Vec::new(),
        };
        d.validate()?;
        Ok(d)
    }

    pub fn with_exclusion(
        mut self,
        radius: f64,
        loci: impl IntoIterator<Item = SingularLocus>,
    ) -> Self {
        self.exclusion_radius = radius;
        self.singular_loci.extend(loci);
        self
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::InvalidDomain(m.to_string()));
        if !(self.x_min < self.x_max) || !(self.y_min < self.y_max) {
            return bad("bounds must satisfy min < max");
        }
        if ![self.x_min, self.x_max, self.y_min, self.y_max]
            .iter()
            .all(|v| v.is_finite())
        {
            return bad("bounds must be finite");
        }
        if self.nx < 2 || self.ny < 2 {
            return bad("grid needs at least 2 nodes per axis");
        }
        if !(self.exclusion_radius >= 0.0) {
            return bad("exclusion radius must be non-negative");
        }
        Ok(())
    }

    pub fn x_at(&self, i: usize) -> f64 {
        self.x_min + (self.x_max - self.x_min) * i as f64 / (self.nx - 1) as f64
    }

    pub fn y_at(&self, j: usize) -> f64 {
        self.y_min + (self.y_max - self.y_min) * j as f64 / (self.ny - 1) as f64
    }

    pub fn is_excluded(&self, p: Point2<f64>) -> bool {
        self.singular_loci
            .iter()
            .any(|l| l.distance(p) <= self.exclusion_radius)
    }

    /// Surviving nodes in row-major order (`j` outer, `i` inner).
    pub fn nodes(&self) -> Vec<GridNode> {
        let mut out = Vec::with_capacity(self.nx * self.ny);
        for j in 0..self.ny {
            let y = self.y_at(j);
            for i in 0..self.nx {
                let point = Point2::new(self.x_at(i), y);
                if !self.is_excluded(point) {
                    out.push(GridNode { i, j, point });
                }
            }
        }
        out
    }

    /// Like [`GridDomain::nodes`] but fails with [`Error::EmptyDomain`] when
    /// nothing survives.
    pub fn checked_nodes(&self) -> Result<Vec<GridNode>> {
        self.validate()?;
        let nodes = self.nodes();
        if nodes.is_empty() {
            Err(Error::EmptyDomain)
        } else {
            Ok(nodes)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_endpoints_and_count() {
        let d = GridDomain::unit_square();
        assert_eq!(d.x_at(0), -1.0);
        assert_eq!(d.x_at(100), 1.0);
        assert_eq!(d.y_at(50), 0.0);
        assert_eq!(d.nodes().len(), 101 * 101);
    }

    #[test]
    fn exclusion_removes_column() {
        let d = GridDomain::new(-1.0, 1.0, 0.0, 1.0, 5, 3)
            .unwrap()
            .with_exclusion(0.1, [SingularLocus::VerticalLine { x: 0.0 }]);
        let nodes = d.nodes();
        assert_eq!(nodes.len(), 12);
        assert!(nodes.iter().all(|n| n.i != 2));
    }

    #[test]
    fn empty_after_exclusion() {
        let d = GridDomain::new(0.0, 1.0, 0.0, 1.0, 2, 2)
            .unwrap()
            .with_exclusion(10.0, [SingularLocus::Point { x: 0.5, y: 0.5 }]);
        assert_eq!(d.checked_nodes(), Err(Error::EmptyDomain));
    }

    #[test]
    fn invalid_domains() {
        assert!(GridDomain::new(1.0, 0.0, 0.0, 1.0, 3, 3).is_err());
        assert!(GridDomain::new(0.0, 1.0, 0.0, 1.0, 1, 3).is_err());
        assert!(GridDomain::new(0.0, f64::INFINITY, 0.0, 1.0, 3, 3).is_err());
    }
}
