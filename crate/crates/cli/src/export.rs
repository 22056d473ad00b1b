//! CSV trajectories and OBJ meshes.

use std::fmt::Write as _;

use isocurv::{Expr, GridDomain, Point3f64, TrajectoryPointf64};

pub fn trajectory_csv(traj: &[TrajectoryPointf64]) -> String {
    let mut out = String::from("t,f,fp\n");
    for p in traj {
        writeln!(out, "{},{},{}", p.t, p.f, p.fp).unwrap();
    }
    out
}

#[derive(Debug, Clone, PartialEq)]
pub struct Mesh {
    pub vertices: Vec<Point3f64>,
    /// Zero-based vertex indices.
    pub triangles: Vec<[usize; 3]>,
    pub excluded_nodes: usize,
}

/// Samples `s` on every surviving node of `d` and splits each grid cell whose
/// four corners survive into two triangles.
pub fn grid_mesh(s: &Expr, d: &GridDomain) -> isocurv::Result<Mesh> {
    d.validate()?;
    let mut index = vec![None; d.nx * d.ny];
    let mut vertices = Vec::new();
    for node in d.checked_nodes()? {
        let p = node.point;
        let z = s.eval(p.x, p.y).map_err(|source| isocurv::Error::Eval {
            x: p.x,
            y: p.y,
            source,
        })?;
        index[node.j * d.nx + node.i] = Some(vertices.len());
        vertices.push(Point3f64::new(p.x, p.y, z));
    }
    let at = |i: usize, j: usize| index[j * d.nx + i];
    let mut triangles = Vec::new();
    for j in 0..d.ny - 1 {
        for i in 0..d.nx - 1 {
            if let (Some(a), Some(b), Some(c), Some(e)) =
                (at(i, j), at(i + 1, j), at(i + 1, j + 1), at(i, j + 1))
            {
                triangles.push([a, b, c]);
                triangles.push([a, c, e]);
            }
        }
    }
    Ok(Mesh {
        excluded_nodes: d.nx * d.ny - vertices.len(),
        vertices,
        triangles,
    })
}

impl Mesh {
    pub fn to_obj(&self) -> String {
        let mut out = String::new();
        for v in &self.vertices {
            writeln!(out, "v {} {} {}", v.x, v.y, v.z).unwrap();
        }
        for [a, b, c] in &self.triangles {
            writeln!(out, "f {} {} {}", a + 1, b + 1, c + 1).unwrap();
        }
        out
    }
}
