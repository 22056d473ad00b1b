//! Fixed-step RK4 integration of the second-order factor equations, and the
//! closed-form solution they are checked against.
//!
//! Two right-hand sides are supported, both written as `f'' = F(f, f')`:
//!
//! * [`Rhs::Eq311`]: `(m0/(2·c3) + f)·f'' - 2·f'² = 0`, integrated as
//!   `f'' = 2·f'² / (m0/(2·c3) + f)`.
//! * [`Rhs::Eq318`]: `f'' = c5·f / (c5·d10·f + 1)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::jet::{Jet1, Taylor};
use crate::scalar::Scalar;

/// Integration aborts when a right-hand-side denominator drops below this.
pub const DEGENERACY_THRESHOLD: f64 = 1e-8;
/// Maximum tolerated difference between one step and two half steps.
pub const LOCAL_ERROR_LIMIT: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Rhs<T> {
    Eq311 { c3: T, m0: T },
    Eq318 { c5: T, d10: T },
}

impl<T: Scalar> Rhs<T> {
    /// `(denominator, f'')` at state `(f, fp)`.
    fn eval(&self, f: T, fp: T) -> (T, T) {
        match *self {
            Rhs::Eq311 { c3, m0 } => {
                let den = m0 / (T::lit(2.0) * c3) + f;
                (den, T::lit(2.0) * fp * fp / den)
            }
            Rhs::Eq318 { c5, d10 } => {
                let den = c5 * d10 * f + T::one();
                (den, c5 * f / den)
            }
        }
    }
}

/// Initial value problem `f(t0) = y0`, `f'(t0) = yp0` on `[t0, t_end]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Ivp<T> {
    pub rhs: Rhs<T>,
    pub t0: T,
    pub y0: T,
    pub yp0: T,
    pub t_end: T,
    pub step: T,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TrajectoryPoint<T> {
    pub t: T,
    pub f: T,
    pub fp: T,
}

fn f64_of<T: Scalar>(v: T) -> f64 {
    v.to_f64().unwrap_or(f64::NAN)
}

impl<T: Scalar> Ivp<T> {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::InvalidIvp(m.to_string()));
        let all = [self.t0, self.y0, self.yp0, self.t_end, self.step];
        if !all.iter().all(|v| v.is_finite()) {
            return bad("non-finite input");
        }
        if !(self.step > T::zero()) {
            return bad("step must be positive");
        }
        if !(self.t_end > self.t0) {
            return bad("t_end must exceed t0");
        }
        if self.step > self.t_end - self.t0 {
            return bad("step exceeds the integration interval");
        }
        match self.rhs {
            Rhs::Eq311 { c3, m0 } if c3 == T::zero() || !c3.is_finite() || !m0.is_finite() => {
                bad("c3 must be finite and nonzero")
            }
            Rhs::Eq318 { c5, d10 } if c5 == T::zero() || !c5.is_finite() || !d10.is_finite() => {
                bad("c5 must be finite and nonzero")
            }
            _ => Ok(()),
        }
    }

    fn accel(&self, t: T, f: T, fp: T) -> Result<T> {
        let (den, fpp) = self.rhs.eval(f, fp);
        if !(den.abs() >= T::lit(DEGENERACY_THRESHOLD)) {
            return Err(Error::DegenerateOde {
                t: f64_of(t),
                denominator: f64_of(den),
            });
        }
        Ok(fpp)
    }

    fn rk4(&self, t: T, f: T, fp: T, h: T) -> Result<(T, T)> {
        let half = T::lit(0.5) * h;
        let k1f = fp;
        let k1p = self.accel(t, f, fp)?;
        let k2f = fp + half * k1p;
        let k2p = self.accel(t + half, f + half * k1f, k2f)?;
        let k3f = fp + half * k2p;
        let k3p = self.accel(t + half, f + half * k2f, k3f)?;
        let k4f = fp + h * k3p;
        let k4p = self.accel(t + h, f + h * k3f, k4f)?;
        let sixth = h / T::lit(6.0);
        let two = T::lit(2.0);
        Ok((
            f + sixth * (k1f + two * k2f + two * k3f + k4f),
            fp + sixth * (k1p + two * k2p + two * k3p + k4p),
        ))
    }
}

/// Classic fourth-order Runge–Kutta on the system `(f, f')` with a fixed step.
/// The final step is shortened to land on `t_end`. Every step is probed
/// against two half steps; the full-step result is kept.
pub fn integrate<T: Scalar>(ivp: &Ivp<T>) -> Result<Vec<TrajectoryPoint<T>>> {
    ivp.validate()?;
    let span = ivp.t_end - ivp.t0;
    let ratio = span / ivp.step;
    let nearest = ratio.round();
    let n = if (ratio - nearest).abs() <= T::lit(1e-9) * nearest.max(T::one()) {
        nearest
    } else {
        ratio.ceil()
    };
    let n = n
        .to_usize()
        .ok_or_else(|| Error::InvalidIvp("too many steps".into()))?;
    let limit = T::lit(LOCAL_ERROR_LIMIT);

    let mut out = Vec::with_capacity(n + 1);
    let (mut f, mut fp) = (ivp.y0, ivp.yp0);
    ivp.accel(ivp.t0, f, fp)?;
    out.push(TrajectoryPoint { t: ivp.t0, f, fp });
    for k in 0..n {
        let t = ivp.t0 + T::from_usize(k).unwrap() * ivp.step;
        let t_next = if k + 1 == n {
            ivp.t_end
        } else {
            ivp.t0 + T::from_usize(k + 1).unwrap() * ivp.step
        };
        let h = t_next - t;
        let (f1, fp1) = ivp.rk4(t, f, fp, h)?;
        let hh = T::lit(0.5) * h;
        let (fm, fpm) = ivp.rk4(t, f, fp, hh)?;
        let (f2, fp2) = ivp.rk4(t + hh, fm, fpm, hh)?;
        let estimate = (f1 - f2).abs().max((fp1 - fp2).abs());
        if !(estimate <= limit) {
            return Err(Error::StepTooLarge {
                t: f64_of(t),
                estimate: f64_of(estimate),
                limit: LOCAL_ERROR_LIMIT,
            });
        }
        f = f1;
        fp = fp1;
        ivp.accel(t_next, f, fp)?;
        out.push(TrajectoryPoint { t: t_next, f, fp });
    }
    Ok(out)
}

/// Largest `|f(t) - exact(t)|` along a trajectory.
pub fn max_deviation<T, F>(traj: &[TrajectoryPoint<T>], exact: F) -> Result<T>
where
    T: Scalar,
    F: Fn(T) -> Result<T>,
{
    let mut worst = T::zero();
    for p in traj {
        worst = worst.max((p.f - exact(p.t)?).abs());
    }
    Ok(worst)
}

fn pole_offset<T: Scalar>(c4: T, d9: T, x: T) -> Result<T> {
    let c4x = c4 * x;
    let u = c4x + d9;
    if u.abs() <= T::epsilon() * (c4x.abs() + d9.abs()) {
        return Err(Error::SingularPoint { x: f64_of(x) });
    }
    Ok(u)
}

/// `f(x) = -(1/(c4·x + d9) + m0/(2·c3))`, the solution of the `Eq311` equation.
pub fn closed_form_312<T: Scalar>(c3: T, c4: T, d9: T, m0: T, x: T) -> Result<T> {
    let u = pole_offset(c4, d9, x)?;
    Ok(-(u.recip() + m0 / (T::lit(2.0) * c3)))
}

/// Value, first and second derivative of [`closed_form_312`] by jet arithmetic.
pub fn closed_form_312_jet<T: Scalar>(c3: T, c4: T, d9: T, m0: T, x: T) -> Result<Jet1<T>> {
    pole_offset(c4, d9, x)?;
    let u = Jet1::seed_const(c4) * Jet1::seed(x) + Jet1::seed_const(d9);
    let shift = Jet1::seed_const(m0 / (T::lit(2.0) * c3));
    Ok(-(u.recip()? + shift))
}

/// `(m0/(2·c3) + f)·f'' - 2·f'²`.
pub fn check_311_residual<T: Scalar>(c3: T, m0: T, f: T, fp: T, fpp: T) -> T {
    (m0 / (T::lit(2.0) * c3) + f) * fpp - T::lit(2.0) * fp * fp
}
