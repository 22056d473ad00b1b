//! Command-line grammar.

use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "isocurv",
    version,
    about = "Isotropic curvature of graph surfaces z = f(x, y)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Jet, K, H and umbilic residual at one point.
    Eval(EvalArgs),
    /// Residual statistics over a grid.
    Scan(ScanArgs),
    /// Check a classified surface family against its predicted invariants.
    VerifyFamily(VerifyFamilyArgs),
    /// Integrate one of the profile ODEs with fixed-step RK4.
    Ode(OdeArgs),
    /// Export a surface as a triangulated Wavefront OBJ mesh.
    Mesh(MeshArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Eval(_) => "eval",
            Command::Scan(_) => "scan",
            Command::VerifyFamily(_) => "verify-family",
            Command::Ode(_) => "ode",
            Command::Mesh(_) => "mesh",
        }
    }
}

/// Comma-separated list of exactly `N` numbers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tuple<T, const N: usize>(pub [T; N]);

impl<T: FromStr + Copy + Default, const N: usize> FromStr for Tuple<T, N> {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != N {
            return Err(format!(
                "expected {N} comma-separated values, got {}",
                parts.len()
            ));
        }
        let mut out = [T::default(); N];
        for (slot, p) in out.iter_mut().zip(parts) {
            *slot = p.parse().map_err(|_| format!("invalid number '{p}'"))?;
        }
        Ok(Tuple(out))
    }
}

#[derive(Debug, Clone, Args)]
pub struct DomainArgs {
    /// Sampling rectangle.
    #[arg(long, value_name = "XMIN,XMAX,YMIN,YMAX", allow_hyphen_values = true)]
    pub domain: Option<Tuple<f64, 4>>,
    /// Number of nodes along x and y.
    #[arg(long, value_name = "NX,NY")]
    pub grid: Option<Tuple<usize, 2>>,
    /// Exclude nodes near the vertical line x = V (repeatable).
    #[arg(long, value_name = "V", allow_hyphen_values = true)]
    pub exclude_x: Vec<f64>,
    /// Exclusion radius around singular loci.
    #[arg(long, value_name = "R")]
    pub exclusion_radius: Option<f64>,
}

#[derive(Debug, Clone, Args)]
pub struct EvalArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub surface: String,
    #[arg(long, value_name = "X,Y", allow_hyphen_values = true)]
    pub at: Tuple<f64, 2>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ResidualChoice {
    Lw,
    Euler,
    Jacobian,
}

#[derive(Debug, Clone, Args)]
pub struct ScanArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub surface: String,
    #[command(flatten)]
    pub domain: DomainArgs,
    #[arg(long, value_enum)]
    pub residual: ResidualChoice,
    /// Coefficient of H in a·H + b·K = c.
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<f64>,
    /// Coefficient of K in a·H + b·K = c.
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<f64>,
    /// Right-hand side of a·H + b·K = c.
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<f64>,
    /// Finite-difference step of the Jacobian test.
    #[arg(long, default_value_t = 1e-3)]
    pub h: f64,
    /// Pass threshold on max |residual| (1e-9 for lw/euler, 1e-6 for jacobian).
    #[arg(long)]
    pub tol: Option<f64>,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyFamilyArgs {
    /// JSON file holding a family specification.
    #[arg(long, value_name = "JSON")]
    pub spec: PathBuf,
    #[command(flatten)]
    pub domain: DomainArgs,
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    /// Right-hand side used by the Case31Candidate contradiction scan.
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub n0: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RhsChoice {
    Eq311,
    Eq318,
}

#[derive(Debug, Clone, Args)]
pub struct OdeArgs {
    #[arg(long, value_enum)]
    pub rhs: RhsChoice,
    #[arg(long, allow_hyphen_values = true)]
    pub c3: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub m0: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub c5: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub d10: Option<f64>,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub t0: f64,
    /// f(t0).
    #[arg(long, allow_hyphen_values = true)]
    pub y0: f64,
    /// f'(t0).
    #[arg(long, allow_hyphen_values = true)]
    pub yp0: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub t_end: f64,
    #[arg(long, default_value_t = 1e-3)]
    pub step: f64,
    /// Compare an eq311 trajectory with f(x) = -(1/(c4·x + d9) + m0/(2·c3)).
    #[arg(long, value_name = "C4,D9", allow_hyphen_values = true)]
    pub oracle_312: Option<Tuple<f64, 2>>,
    /// Pass threshold on the deviation from the closed form.
    #[arg(long, default_value_t = 1e-6)]
    pub tol: f64,
    /// CSV trajectory output (columns t,f,fp).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct MeshArgs {
    #[arg(
        long,
        allow_hyphen_values = true,
        required_unless_present = "spec",
        conflicts_with = "spec"
    )]
    pub surface: Option<String>,
    /// Family specification whose surface is meshed.
    #[arg(long, value_name = "JSON")]
    pub spec: Option<PathBuf>,
    #[command(flatten)]
    pub domain: DomainArgs,
    #[arg(long)]
    pub out: PathBuf,
}
