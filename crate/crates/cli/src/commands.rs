//! One function per subcommand; each returns the report to print.

use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use isocurv::families::{
    case31_contradiction_scan, verify_family, with_loci, DEFAULT_EXCLUSION_RADIUS,
};
use isocurv::ode::{closed_form_312, integrate, max_deviation};
use isocurv::weingarten::{euler_residual, scan_grid};
use isocurv::{
    curvatures, Expr, FamilySpec, GridDomain, Ivpf64, LwParams, ResidualKind, SingularLocus,
};
use serde_json::json;

use crate::args::{
    Command, DomainArgs, EvalArgs, MeshArgs, OdeArgs, ResidualChoice, RhsChoice, ScanArgs,
    VerifyFamilyArgs,
};
use crate::export::{grid_mesh, trajectory_csv};
use crate::report::Report;

pub fn run(cmd: &Command) -> Result<Report> {
    match cmd {
        Command::Eval(a) => eval(a),
        Command::Scan(a) => scan(a),
        Command::VerifyFamily(a) => verify(a),
        Command::Ode(a) => ode(a),
        Command::Mesh(a) => mesh(a),
    }
}

fn parse_surface(s: &str) -> Result<Expr> {
    Expr::parse(s).with_context(|| format!("cannot parse surface '{s}'"))
}

fn read_spec(path: &Path) -> Result<FamilySpec> {
    let text =
        fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let spec: FamilySpec = serde_json::from_str(&text)
        .with_context(|| format!("malformed family spec in {}", path.display()))?;
    spec.validate()?;
    Ok(spec)
}

fn domain(a: &DomainArgs) -> Result<GridDomain> {
    let base = GridDomain::unit_square();
    let [x_min, x_max, y_min, y_max] = a
        .domain
        .map_or([base.x_min, base.x_max, base.y_min, base.y_max], |t| t.0);
    let [nx, ny] = a.grid.map_or([base.nx, base.ny], |t| t.0);
    let mut d = GridDomain::new(x_min, x_max, y_min, y_max, nx, ny)?;
    let radius = match a.exclusion_radius {
        Some(r) if !(r >= 0.0 && r.is_finite()) => {
            bail!("exclusion radius must be finite and non-negative")
        }
        Some(r) => r,
        None if a.exclude_x.is_empty() => 0.0,
        None => DEFAULT_EXCLUSION_RADIUS,
    };
    d = d.with_exclusion(
        radius,
        a.exclude_x
            .iter()
            .map(|&x| SingularLocus::VerticalLine { x }),
    );
    Ok(d)
}

fn eval(a: &EvalArgs) -> Result<Report> {
    let s = parse_surface(&a.surface)?;
    let [x, y] = a.at.0;
    let jet = s
        .eval_jet(x, y)
        .map_err(|source| isocurv::Error::Eval { x, y, source })?;
    let c = curvatures(&jet);
    Ok(Report {
        surface: Some(s.to_string()),
        params: json!({ "at": { "x": x, "y": y } }),
        result: json!({
            "jet": jet,
            "k": c.k,
            "h": c.h,
            "euler_residual": euler_residual(&jet),
            "umbilic_gap": c.umbilic_gap(),
        }),
        ..Report::new("eval")
    })
}

fn scan(a: &ScanArgs) -> Result<Report> {
    let s = parse_surface(&a.surface)?;
    let d = domain(&a.domain)?;
    let (residual, default_tol) = match a.residual {
        ResidualChoice::Lw => {
            let (Some(pa), Some(pb), Some(pc)) = (a.a, a.b, a.c) else {
                bail!("--residual lw needs --a, --b and --c");
            };
            (ResidualKind::Lw(LwParams::new(pa, pb, pc)?), 1e-9)
        }
        ResidualChoice::Euler => (ResidualKind::Euler, 1e-9),
        ResidualChoice::Jacobian => (ResidualKind::JacobianW { h: a.h }, 1e-6),
    };
    let tol = a.tol.unwrap_or(default_tol);
    let report = scan_grid::<f64>(&s, &d, &residual)?;
    Ok(Report {
        surface: Some(s.to_string()),
        params: json!({ "domain": d, "residual": residual }),
        result: serde_json::to_value(report)?,
        pass: Some(report.passes(tol)),
        tolerances: json!({ "max_abs": tol }),
        ..Report::new("scan")
    })
}

/// Minimum sample count for the Case31Candidate contradiction to count.
const MIN_CONTRADICTION_SAMPLES: usize = 3;

fn verify(a: &VerifyFamilyArgs) -> Result<Report> {
    let spec = read_spec(&a.spec)?;
    let built = spec.build()?;
    let d = with_loci(&domain(&a.domain)?, &built.singular_loci);
    let base = Report {
        surface: Some(built.expr.to_string()),
        ..Report::new("verify-family")
    };
    if let FamilySpec::Case31Candidate(candidate) = spec {
        let xs: Vec<f64> = (0..d.nx)
            .map(|i| d.x_at(i))
            .filter(|&x| {
                !d.singular_loci
                    .iter()
                    .any(|l| l.distance(isocurv::Point2::new(x, 0.0)) <= d.exclusion_radius)
            })
            .collect();
        let report = case31_contradiction_scan(&candidate, a.n0, &xs)?;
        return Ok(Report {
            params: json!({ "spec": spec, "n0": a.n0, "xs": xs }),
            result: json!({ "contradiction": report }),
            pass: Some(report.n_samples >= MIN_CONTRADICTION_SAMPLES && report.std_dev > 0.0),
            tolerances: json!({ "min_samples": MIN_CONTRADICTION_SAMPLES, "min_std_dev_exclusive": 0.0 }),
            ..base
        });
    }
    let check = verify_family(&spec, &d, a.tol)?;
    Ok(Report {
        params: json!({ "spec": spec, "domain": d }),
        result: json!({ "prediction": check.prediction, "deviation": check.report }),
        pass: Some(check.pass),
        tolerances: json!({ "max_abs": a.tol }),
        ..base
    })
}

fn required(v: Option<f64>, flag: &str, rhs: &str) -> Result<f64> {
    v.with_context(|| format!("--rhs {rhs} needs --{flag}"))
}

fn ode(a: &OdeArgs) -> Result<Report> {
    let rhs = match a.rhs {
        RhsChoice::Eq311 => isocurv::ode::Rhs::Eq311 {
            c3: required(a.c3, "c3", "eq311")?,
            m0: required(a.m0, "m0", "eq311")?,
        },
        RhsChoice::Eq318 => isocurv::ode::Rhs::Eq318 {
            c5: required(a.c5, "c5", "eq318")?,
            d10: required(a.d10, "d10", "eq318")?,
        },
    };
    let ivp = Ivpf64 {
        rhs,
        t0: a.t0,
        y0: a.y0,
        yp0: a.yp0,
        t_end: a.t_end,
        step: a.step,
    };
    let traj = integrate(&ivp)?;
    let (t0, y0, yp0) = (a.t0, a.y0, a.yp0);

    let (oracle, deviation) = match (rhs, a.oracle_312) {
        (isocurv::ode::Rhs::Eq311 { c3, m0 }, Some(t)) => {
            let [c4, d9] = t.0;
            let dev = max_deviation(&traj, |x| closed_form_312(c3, c4, d9, m0, x))?;
            (
                Some(json!({ "kind": "closed_form_312", "c4": c4, "d9": d9 })),
                Some(dev),
            )
        }
        (isocurv::ode::Rhs::Eq318 { c5, d10: 0.0 }, None) => {
            let dev = max_deviation(&traj, |t| Ok(linear_solution(c5, t - t0, y0, yp0)))?;
            (Some(json!({ "kind": "linear" })), Some(dev))
        }
        (isocurv::ode::Rhs::Eq318 { .. }, Some(_)) => {
            bail!("--oracle-312 applies to --rhs eq311 only")
        }
        _ => (None, None),
    };

    if let Some(path) = &a.out {
        fs::write(path, trajectory_csv(&traj))
            .with_context(|| format!("cannot write {}", path.display()))?;
    }
    let last = traj.last().expect("integrate returns the initial point");
    Ok(Report {
        params: json!({
            "rhs": match rhs {
                isocurv::ode::Rhs::Eq311 { c3, m0 } => json!({ "kind": "eq311", "c3": c3, "m0": m0 }),
                isocurv::ode::Rhs::Eq318 { c5, d10 } => json!({ "kind": "eq318", "c5": c5, "d10": d10 }),
            },
            "t0": a.t0, "y0": a.y0, "yp0": a.yp0, "t_end": a.t_end, "step": a.step,
            "oracle": oracle,
            "out": a.out.as_ref().map(|p| p.display().to_string()),
        }),
        result: json!({
            "n_points": traj.len(),
            "t_end": last.t,
            "f_end": last.f,
            "fp_end": last.fp,
            "max_deviation": deviation,
        }),
        pass: deviation.map(|d| d <= a.tol),
        tolerances: if deviation.is_some() {
            json!({ "max_deviation": a.tol })
        } else {
            json!({})
        },
        ..Report::new("ode")
    })
}

/// Solution of `f'' = c5·f` with `f(0) = y0`, `f'(0) = yp0`, at time `t`.
fn linear_solution(c5: f64, t: f64, y0: f64, yp0: f64) -> f64 {
    let w = c5.abs().sqrt();
    if c5 > 0.0 {
        y0 * (w * t).cosh() + yp0 * (w * t).sinh() / w
    } else {
        y0 * (w * t).cos() + yp0 * (w * t).sin() / w
    }
}

fn mesh(a: &MeshArgs) -> Result<Report> {
    let (s, loci, spec) = match (&a.surface, &a.spec) {
        (Some(text), _) => (parse_surface(text)?, Vec::new(), None),
        (None, Some(path)) => {
            let spec = read_spec(path)?;
            let built = spec.build()?;
            (built.expr, built.singular_loci, Some(spec))
        }
        (None, None) => bail!("mesh needs --surface or --spec"),
    };
    let d = with_loci(&domain(&a.domain)?, &loci);
    let m = grid_mesh(&s, &d)?;
    fs::write(&a.out, m.to_obj()).with_context(|| format!("cannot write {}", a.out.display()))?;
    Ok(Report {
        surface: Some(s.to_string()),
        params: json!({ "spec": spec, "domain": d, "out": a.out.display().to_string() }),
        result: json!({
            "vertices": m.vertices.len(),
            "triangles": m.triangles.len(),
            "excluded_nodes": m.excluded_nodes,
        }),
        ..Report::new("mesh")
    })
}
