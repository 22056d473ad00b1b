#![allow(dead_code)]

use isocurv::expr::{Exponent, Func};
use isocurv::Expr;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn constant<R: Rng>(rng: &mut R) -> Expr {
    // Two decimals keep printed forms short.
    Expr::Const((rng.gen_range(0.1..2.0f64) * 100.0).round() / 100.0)
}

fn leaf<R: Rng>(rng: &mut R) -> Expr {
    match rng.gen_range(0..5) {
        0 | 1 => Expr::x(),
        2 | 3 => Expr::y(),
        _ => constant(rng),
    }
}

/// `c + e²` with `c ≥ 1`: strictly positive wherever `e` is defined.
fn positive<R: Rng>(rng: &mut R, e: Expr) -> Expr {
    Expr::Const(1.0 + (rng.gen_range(0.0..1.0f64) * 10.0).round() / 10.0) + e.powi(2)
}

/// Random expression over the grammar, built so that every node is defined on
/// all of `R²` (divisors and arguments of `ln`, `sqrt` and real powers are
/// kept positive).
pub fn random_expr<R: Rng>(rng: &mut R, depth: u32) -> Expr {
    if depth == 0 {
        return leaf(rng);
    }
    let a = |rng: &mut R| random_expr(rng, depth - 1);
    match rng.gen_range(0..13) {
        0 => a(rng) + a(rng),
        1 => a(rng) - a(rng),
        2 | 3 => a(rng) * a(rng),
        4 => -a(rng),
        5 => {
            let num = a(rng);
            let den = a(rng);
            num / positive(rng, den)
        }
        6 => a(rng).powi(rng.gen_range(2..=3)),
        7 => {
            let base = a(rng);
            let r = [0.5, 1.5, -0.5, 2.5][rng.gen_range(0..4)];
            Expr::Pow(Box::new(positive(rng, base)), Exponent::Real(r))
        }
        8 => a(rng).apply(Func::Sin).apply(Func::Exp),
        9 => {
            let inner = a(rng);
            positive(rng, inner).apply(Func::Ln)
        }
        10 => a(rng).apply(Func::Sin),
        11 => a(rng).apply(Func::Cos),
        _ => {
            let inner = a(rng);
            positive(rng, inner).apply(Func::Sqrt)
        }
    }
}

/// Largest value magnitude a generated expression may reach on `[-1, 1]²`.
pub const VALUE_BOUND: f64 = 1e3;
/// Largest second difference quotient allowed on the probe lattice; keeps the
/// curvature scale of generated surfaces moderate.
pub const CURVATURE_BOUND: f64 = 50.0;

/// A random expression that is defined and moderately scaled on `[-1, 1]²`.
/// Screening uses only plain values on a 9 × 9 lattice (spacing 0.25), never
/// derivatives, so it does not favour either derivative route.
pub fn tame_expr<R: Rng>(rng: &mut R, depth: u32) -> Expr {
    const N: usize = 9;
    const STEP: f64 = 0.25;
    'retry: loop {
        let e = random_expr(rng, depth);
        let mut v = [[0.0; N]; N];
        for (i, row) in v.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                match e.eval(-1.0 + STEP * i as f64, -1.0 + STEP * j as f64) {
                    Ok(z) if z.abs() <= VALUE_BOUND => *cell = z,
                    _ => continue 'retry,
                }
            }
        }
        for i in 1..N - 1 {
            for j in 1..N - 1 {
                let dxx = v[i + 1][j] - 2.0 * v[i][j] + v[i - 1][j];
                let dyy = v[i][j + 1] - 2.0 * v[i][j] + v[i][j - 1];
                let dxy =
                    (v[i + 1][j + 1] - v[i + 1][j - 1] - v[i - 1][j + 1] + v[i - 1][j - 1]) / 4.0;
                if dxx.abs().max(dyy.abs()).max(dxy.abs()) > CURVATURE_BOUND * STEP * STEP {
                    continue 'retry;
                }
            }
        }
        return e;
    }
}

pub fn random_point<R: Rng>(rng: &mut R) -> (f64, f64) {
    (rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

/// Random polynomial of degree ≤ 3 in one variable with small coefficients.
pub fn random_poly<R: Rng>(rng: &mut R, var: Expr) -> Expr {
    let mut acc = Expr::num(rng.gen_range(-2.0..2.0));
    for k in 1..=3 {
        let c = rng.gen_range(-2.0..2.0);
        acc = acc + Expr::num(c) * var.clone().powi(k);
    }
    acc
}
