//! Second-order truncated Taylor arithmetic.
//!
//! [`Jet2`] carries a value with its first and second partial derivatives in
//! `x` and `y`; [`Jet1`] is the univariate analogue used for the factors
//! `f(x)` and `g(y)` of a factorable surface. Both implement [`Taylor`], which
//! supplies the elementary functions through a single second-order chain rule.
//!
//! Only one mixed slot is stored, so inputs are assumed to be `C²`.

use std::ops::{Add, Div, Mul, Neg, Sub};

use serde::Serialize;

use crate::error::EvalError;
use crate::scalar::Scalar;

/// Value and partial derivatives up to order two of a bivariate function.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Jet2<T> {
    pub v: T,
    pub dx: T,
    pub dy: T,
    pub dxx: T,
    pub dxy: T,
    pub dyy: T,
}

/// Value, first and second derivative of a univariate function.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Jet1<T> {
    pub v: T,
    pub d: T,
    pub dd: T,
}

impl<T: Scalar> Jet2<T> {
    pub fn new(v: T, dx: T, dy: T, dxx: T, dxy: T, dyy: T) -> Self {
        Jet2 {
            v,
            dx,
            dy,
            dxx,
            dxy,
            dyy,
        }
    }

    /// The coordinate function `x` at `x0`.
    pub fn seed_x(x0: T) -> Self {
        let z = T::zero();
        Jet2::new(x0, T::one(), z, z, z, z)
    }

    /// The coordinate function `y` at `y0`.
    pub fn seed_y(y0: T) -> Self {
        let z = T::zero();
        Jet2::new(y0, z, T::one(), z, z, z)
    }

    pub fn seed_const(c: T) -> Self {
        let z = T::zero();
        Jet2::new(c, z, z, z, z, z)
    }

    /// Components in the order `v, dx, dy, dxx, dxy, dyy`.
    pub fn components(&self) -> [T; 6] {
        [self.v, self.dx, self.dy, self.dxx, self.dxy, self.dyy]
    }
}

impl<T: Scalar> Jet1<T> {
    pub fn new(v: T, d: T, dd: T) -> Self {
        Jet1 { v, d, dd }
    }

    pub fn seed(t0: T) -> Self {
        Jet1::new(t0, T::one(), T::zero())
    }

    pub fn seed_const(c: T) -> Self {
        Jet1::new(c, T::zero(), T::zero())
    }
}

/// Common interface of second-order jets.
pub trait Taylor<T: Scalar>:
    Copy
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn constant(c: T) -> Self;

    fn value(&self) -> T;

    fn is_finite(&self) -> bool;

    /// `φ(self)` where `phi`, `dphi`, `ddphi` are `φ`, `φ'`, `φ''` evaluated
    /// at the value of `self`.
    fn compose(self, phi: T, dphi: T, ddphi: T) -> Self;

    fn exp(self) -> Result<Self, EvalError> {
        let e = self.value().exp();
        finite(self.compose(e, e, e))
    }

    fn ln(self) -> Result<Self, EvalError> {
        let v = self.value();
        if !(v > T::zero()) {
            return Err(EvalError::Domain("ln of a non-positive value"));
        }
        let r = v.recip();
        finite(self.compose(v.ln(), r, -r * r))
    }

    fn sin(self) -> Result<Self, EvalError> {
        let (s, c) = self.value().sin_cos();
        finite(self.compose(s, c, -s))
    }

    fn cos(self) -> Result<Self, EvalError> {
        let (s, c) = self.value().sin_cos();
        finite(self.compose(c, -s, -c))
    }

    fn sqrt(self) -> Result<Self, EvalError> {
        let v = self.value();
        if !(v > T::zero()) {
            return Err(EvalError::Domain("sqrt of a non-positive value"));
        }
        let s = v.sqrt();
        let half = T::lit(0.5);
        let d1 = half / s;
        finite(self.compose(s, d1, -half * d1 / v))
    }

    fn recip(self) -> Result<Self, EvalError> {
        let v = self.value();
        if v == T::zero() {
            return Err(EvalError::DivisionByZero);
        }
        let r = v.recip();
        let r2 = r * r;
        finite(self.compose(r, -r2, T::lit(2.0) * r2 * r))
    }

    fn checked_div(self, rhs: Self) -> Result<Self, EvalError> {
        let q = self * rhs.recip()?;
        finite(q)
    }

    /// Integer power by repeated multiplication; negative exponents go through
    /// [`Taylor::recip`].
    fn pow_int(self, n: i32) -> Result<Self, EvalError> {
        let mut exp = n.unsigned_abs();
        let mut base = self;
        let mut acc = Self::constant(T::one());
        let mut first = true;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = if first { base } else { acc * base };
                first = false;
            }
            exp >>= 1;
            if exp > 0 {
                base = base * base;
            }
        }
        let out = if n < 0 { acc.recip()? } else { acc };
        finite(out)
    }

    /// Real power; the base must be positive.
    fn pow_real(self, r: T) -> Result<Self, EvalError> {
        let v = self.value();
        if !(v > T::zero()) {
            return Err(EvalError::Domain("real power of a non-positive base"));
        }
        let p = v.powf(r);
        let d1 = r * p / v;
        let d2 = (r - T::one()) * d1 / v;
        finite(self.compose(p, d1, d2))
    }
}

fn finite<T: Scalar, J: Taylor<T>>(j: J) -> Result<J, EvalError> {
    if j.is_finite() {
        Ok(j)
    } else {
        Err(EvalError::Overflow)
    }
}

impl<T: Scalar> Taylor<T> for Jet2<T> {
    fn constant(c: T) -> Self {
        Jet2::seed_const(c)
    }

    fn value(&self) -> T {
        self.v
    }

    fn is_finite(&self) -> bool {
        self.components().iter().all(|c| c.is_finite())
    }

    fn compose(self, phi: T, dphi: T, ddphi: T) -> Self {
        Jet2 {
            v: phi,
            dx: dphi * self.dx,
            dy: dphi * self.dy,
            dxx: ddphi * self.dx * self.dx + dphi * self.dxx,
            dxy: ddphi * self.dx * self.dy + dphi * self.dxy,
            dyy: ddphi * self.dy * self.dy + dphi * self.dyy,
        }
    }
}

impl<T: Scalar> Taylor<T> for Jet1<T> {
    fn constant(c: T) -> Self {
        Jet1::seed_const(c)
    }

    fn value(&self) -> T {
        self.v
    }

    fn is_finite(&self) -> bool {
        self.v.is_finite() && self.d.is_finite() && self.dd.is_finite()
    }

    fn compose(self, phi: T, dphi: T, ddphi: T) -> Self {
        Jet1 {
            v: phi,
            d: dphi * self.d,
            dd: ddphi * self.d * self.d + dphi * self.dd,
        }
    }
}

impl<T: Scalar> Add for Jet2<T> {
    type Output = Self;
    fn add(self, b: Self) -> Self {
        Jet2 {
            v: self.v + b.v,
            dx: self.dx + b.dx,
            dy: self.dy + b.dy,
            dxx: self.dxx + b.dxx,
            dxy: self.dxy + b.dxy,
            dyy: self.dyy + b.dyy,
        }
    }
}

impl<T: Scalar> Sub for Jet2<T> {
    type Output = Self;
    fn sub(self, b: Self) -> Self {
        Jet2 {
            v: self.v - b.v,
            dx: self.dx - b.dx,
            dy: self.dy - b.dy,
            dxx: self.dxx - b.dxx,
            dxy: self.dxy - b.dxy,
            dyy: self.dyy - b.dyy,
        }
    }
}

impl<T: Scalar> Neg for Jet2<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Jet2 {
            v: -self.v,
            dx: -self.dx,
            dy: -self.dy,
            dxx: -self.dxx,
            dxy: -self.dxy,
            dyy: -self.dyy,
        }
    }
}

// Terms are grouped symmetrically so that `a * b` and `b * a` agree bit for bit.
impl<T: Scalar> Mul for Jet2<T> {
    type Output = Self;
    fn mul(self, b: Self) -> Self {
        let a = self;
        let two = T::lit(2.0);
        Jet2 {
            v: a.v * b.v,
            dx: a.dx * b.v + a.v * b.dx,
            dy: a.dy * b.v + a.v * b.dy,
            dxx: (a.dxx * b.v + a.v * b.dxx) + two * (a.dx * b.dx),
            dxy: (a.dxy * b.v + a.v * b.dxy) + (a.dx * b.dy + a.dy * b.dx),
            dyy: (a.dyy * b.v + a.v * b.dyy) + two * (a.dy * b.dy),
        }
    }
}

/// Unchecked quotient; a zero divisor yields non-finite components. Use
/// [`Taylor::checked_div`] when the divisor may vanish.
impl<T: Scalar> Div for Jet2<T> {
    type Output = Self;
    fn div(self, b: Self) -> Self {
        let r = b.v.recip();
        let r2 = r * r;
        self * b.compose(r, -r2, T::lit(2.0) * r2 * r)
    }
}

impl<T: Scalar> Add for Jet1<T> {
    type Output = Self;
    fn add(self, b: Self) -> Self {
        Jet1::new(self.v + b.v, self.d + b.d, self.dd + b.dd)
    }
}

impl<T: Scalar> Sub for Jet1<T> {
    type Output = Self;
    fn sub(self, b: Self) -> Self {
        Jet1::new(self.v - b.v, self.d - b.d, self.dd - b.dd)
    }
}

impl<T: Scalar> Neg for Jet1<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Jet1::new(-self.v, -self.d, -self.dd)
    }
}

impl<T: Scalar> Mul for Jet1<T> {
    type Output = Self;
    fn mul(self, b: Self) -> Self {
        let a = self;
        Jet1 {
            v: a.v * b.v,
            d: a.d * b.v + a.v * b.d,
            dd: (a.dd * b.v + a.v * b.dd) + T::lit(2.0) * (a.d * b.d),
        }
    }
}

impl<T: Scalar> Div for Jet1<T> {
    type Output = Self;
    fn div(self, b: Self) -> Self {
        let r = b.v.recip();
        let r2 = r * r;
        self * b.compose(r, -r2, T::lit(2.0) * r2 * r)
    }
}
