//! Isotropic curvature invariants of graph surfaces `z = z(x, y)`.
//!
//! The crate computes the relative curvature `K` and isotropic mean curvature
//! `H` of graph surfaces from second-order jets, evaluates linear Weingarten
//! (`a·H + b·K = c`) and `K = H²` residuals, generates the classified
//! factorable surface families, and integrates the factor ODEs against their
//! closed-form solutions.
//!
//! Numeric code is generic over [`Scalar`] (`f32` or `f64`); the aliases below
//! fix the scalar to `f64`, which all tolerances in the test suite assume.

// `!(a < b)` is used deliberately so that NaN inputs are rejected.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod curvature;
pub mod domain;
pub mod error;
pub mod expr;
pub mod families;
pub mod jet;
pub mod ode;
pub mod oracle;
pub mod scalar;
pub mod weingarten;

pub use curvature::{curvatures, factorable_curvatures, isotropic_distance, CurvaturePair};
pub use domain::{GridDomain, GridNode, Point2, Point3, SingularLocus};
pub use error::{Error, EvalError, Result};
pub use expr::{Expr, ParseError};
pub use families::{Case31Candidate, FamilyPrediction, FamilySpec};
pub use jet::{Jet1, Jet2, Taylor};
pub use scalar::Scalar;
pub use weingarten::{LwParams, NormalizedLw, ResidualKind, ResidualReport};

pub type Jet2f64 = Jet2<f64>;
pub type Jet1f64 = Jet1<f64>;
pub type Jet2f32 = Jet2<f32>;
pub type Jet1f32 = Jet1<f32>;
pub type CurvaturePairf64 = CurvaturePair<f64>;
pub type Point2f64 = Point2<f64>;
pub type Point3f64 = Point3<f64>;
pub type Ivpf64 = ode::Ivp<f64>;
pub type TrajectoryPointf64 = ode::TrajectoryPoint<f64>;
