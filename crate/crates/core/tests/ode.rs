mod common;

use isocurv::ode::{check_311_residual, closed_form_312_jet, integrate, max_deviation, Ivp, Rhs};
use rand::Rng;

/// Exact solution of `f'' = c5·f` with `f(0) = y0`, `f'(0) = yp0`.
fn linear_exact(c5: f64, y0: f64, yp0: f64) -> impl Fn(f64) -> f64 {
    move |t| {
        if c5 > 0.0 {
            let w = c5.sqrt();
            y0 * (w * t).cosh() + yp0 * (w * t).sinh() / w
        } else {
            let w = (-c5).sqrt();
            y0 * (w * t).cos() + yp0 * (w * t).sin() / w
        }
    }
}

fn linear_ivp(c5: f64, y0: f64, yp0: f64, step: f64) -> Ivp<f64> {
    Ivp {
        rhs: Rhs::Eq318 { c5, d10: 0.0 },
        t0: 0.0,
        y0,
        yp0,
        t_end: 1.0,
        step,
    }
}

#[test]
fn rk4_error_shrinks_at_fourth_order() {
    let mut rng = common::rng(41);
    for _ in 0..50 {
        let c5 = if rng.gen_bool(0.5) {
            rng.gen_range(0.5..2.0)
        } else {
            -rng.gen_range(0.5..2.0)
        };
        let (y0, yp0) = (rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
        let exact = linear_exact(c5, y0, yp0);
        let err = |h: f64| {
            let traj = integrate(&linear_ivp(c5, y0, yp0, h)).unwrap();
            max_deviation(&traj, |t| Ok(exact(t))).unwrap()
        };
        let (coarse, fine) = (err(0.1), err(0.05));
        assert!(coarse / fine >= 8.0, "c5={c5}: {coarse} -> {fine}");
    }
}

#[test]
fn linear_branch_conserves_energy() {
    let mut rng = common::rng(42);
    for _ in 0..50 {
        let c5 = if rng.gen_bool(0.5) {
            rng.gen_range(0.5..2.0)
        } else {
            -rng.gen_range(0.5..2.0)
        };
        let (y0, yp0) = (rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
        let traj = integrate(&linear_ivp(c5, y0, yp0, 1e-3)).unwrap();
        let e0 = yp0 * yp0 - c5 * y0 * y0;
        for p in &traj {
            let e = p.fp * p.fp - c5 * p.f * p.f;
            assert!((e - e0).abs() <= 1e-6, "c5={c5} t={}: {e} vs {e0}", p.t);
        }
    }
}

#[test]
fn closed_form_solves_the_ode() {
    let mut rng = common::rng(43);
    let mut checked = 0;
    while checked < 100 {
        let sign = |rng: &mut rand_chacha::ChaCha8Rng| if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
        let c3 = sign(&mut rng) * rng.gen_range(0.5..2.0);
        let c4 = sign(&mut rng) * rng.gen_range(0.5..2.0);
        let d9 = rng.gen_range(-2.0..2.0);
        let m0 = rng.gen_range(-2.0..2.0);
        let x: f64 = rng.gen_range(-2.0..2.0);
        if (c4 * x + d9).abs() < 0.2 {
            continue;
        }
        let j = closed_form_312_jet(c3, c4, d9, m0, x).unwrap();
        let r: f64 = check_311_residual(c3, m0, j.v, j.d, j.dd);
        assert!(r.abs() <= 1e-9, "({c3}, {c4}, {d9}, {m0}) at {x}: {r}");
        checked += 1;
    }
}

#[test]
fn single_precision_integration_tracks_cosh() {
    let ivp = Ivp::<f32> {
        rhs: Rhs::Eq318 { c5: 1.0, d10: 0.0 },
        t0: 0.0,
        y0: 1.0,
        yp0: 0.0,
        t_end: 1.0,
        step: 0.01,
    };
    let traj = integrate(&ivp).unwrap();
    let last = traj.last().unwrap();
    assert!((last.f - 1.0f32.cosh()).abs() <= 1e-4);
}
