//! Generators for the classified factorable and `K = H²` surface families,
//! their predicted invariants, and numerical verification.
//!
//! Constants named `c*` must be nonzero; `d*` are free.

use serde::{Deserialize, Serialize};

use crate::curvature::curvatures;
use crate::domain::{GridDomain, Point2, SingularLocus};
use crate::error::{Error, Result};
use crate::expr::Expr;
use crate::weingarten::{LwParams, NormalizedLw, ResidualReport};

/// Exclusion radius applied around declared singular loci when the caller's
/// domain does not set one.
pub const DEFAULT_EXCLUSION_RADIUS: f64 = 1e-2;

/// Parameters of the rejected candidate `f(x) g(y)` with
/// `f(x) = -(1/(c4·x + d9) + m0/(2·c3))` and `g(y) = c3·y² + d7·y + d8`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Case31Candidate {
    pub c3: f64,
    pub c4: f64,
    pub d7: f64,
    pub d8: f64,
    pub d9: f64,
    pub m0: f64,
}

/// One classified surface family. Serialized with a `"kind"` tag.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum FamilySpec {
    /// `z = f0 · (n0/(f0·m0)·y² + d1·y + d2)`.
    CaseA {
        f0: f64,
        m0: f64,
        n0: f64,
        d1: f64,
        d2: f64,
    },
    /// `z = (n0/(g0·m0)·x² + d3·x + d4) · g0`.
    CaseB {
        g0: f64,
        m0: f64,
        n0: f64,
        d3: f64,
        d4: f64,
    },
    /// `z = (c8·x + d15)(c9·y + d16)`.
    CaseC {
        c8: f64,
        d15: f64,
        c9: f64,
        d16: f64,
    },
    /// `z = c3·(x² + y²) + d8·x + d9·y + d10`.
    ParabolicSphere {
        c3: f64,
        d8: f64,
        d9: f64,
        d10: f64,
    },
    /// `z = p·x + q·y + r`.
    NonIsotropicPlane {
        p: f64,
        q: f64,
        r: f64,
    },
    Case31Candidate(Case31Candidate),
}

#[derive(Debug, Clone, PartialEq)]
pub struct BuiltSurface {
    pub expr: Expr,
    pub singular_loci: Vec<SingularLocus>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FamilyPrediction {
    pub k_expected: Option<f64>,
    pub h_expected: Option<f64>,
    pub lw: Option<LwParams>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FamilyCheck {
    pub prediction: FamilyPrediction,
    pub report: ResidualReport,
    pub tol: f64,
    pub pass: bool,
}

impl FamilySpec {
    pub fn kind(&self) -> &'static str {
        match self {
            FamilySpec::CaseA { .. } => "CaseA",
            FamilySpec::CaseB { .. } => "CaseB",
            FamilySpec::CaseC { .. } => "CaseC",
            FamilySpec::ParabolicSphere { .. } => "ParabolicSphere",
            FamilySpec::NonIsotropicPlane { .. } => "NonIsotropicPlane",
            FamilySpec::Case31Candidate(_) => "Case31Candidate",
        }
    }

    fn fields(&self) -> Vec<(&'static str, f64)> {
        match *self {
            FamilySpec::CaseA { f0, m0, n0, d1, d2 } => {
                vec![("f0", f0), ("m0", m0), ("n0", n0), ("d1", d1), ("d2", d2)]
            }
            FamilySpec::CaseB { g0, m0, n0, d3, d4 } => {
                vec![("g0", g0), ("m0", m0), ("n0", n0), ("d3", d3), ("d4", d4)]
            }
            FamilySpec::CaseC { c8, d15, c9, d16 } => {
                vec![("c8", c8), ("d15", d15), ("c9", c9), ("d16", d16)]
            }
            FamilySpec::ParabolicSphere { c3, d8, d9, d10 } => {
                vec![("c3", c3), ("d8", d8), ("d9", d9), ("d10", d10)]
            }
            FamilySpec::NonIsotropicPlane { p, q, r } => vec![("p", p), ("q", q), ("r", r)],
            FamilySpec::Case31Candidate(c) => vec![
                ("c3", c.c3),
                ("c4", c.c4),
                ("d7", c.d7),
                ("d8", c.d8),
                ("d9", c.d9),
                ("m0", c.m0),
            ],
        }
    }

    /// Checks finiteness and the nonzero constraints.
    pub fn validate(&self) -> Result<()> {
        for (name, v) in self.fields() {
            if !v.is_finite() {
                return Err(Error::InvalidSpec(format!(
                    "{}: {name} is not finite",
                    self.kind()
                )));
            }
            let must_be_nonzero = name.starts_with('c') || matches!(name, "f0" | "g0" | "m0");
            if must_be_nonzero && v == 0.0 {
                return Err(Error::InvalidSpec(format!(
                    "{}: {name} must be nonzero",
                    self.kind()
                )));
            }
        }
        Ok(())
    }

    pub fn build(&self) -> Result<BuiltSurface> {
        self.validate()?;
        let (x, y) = (Expr::x(), Expr::y());
        let mut singular_loci = Vec::new();
        let expr = match *self {
            FamilySpec::CaseA { f0, m0, n0, d1, d2 } => {
                Expr::num(f0) * quadratic(y, n0 / (f0 * m0), d1, d2)
            }
            FamilySpec::CaseB { g0, m0, n0, d3, d4 } => {
                quadratic(x, n0 / (g0 * m0), d3, d4) * Expr::num(g0)
            }
            FamilySpec::CaseC { c8, d15, c9, d16 } => linear(x, c8, d15) * linear(y, c9, d16),
            FamilySpec::ParabolicSphere { c3, d8, d9, d10 } => {
                let bowl = x.clone().powi(2) + y.clone().powi(2);
                sum_terms(vec![
                    (c3, Some(bowl)),
                    (d8, Some(x)),
                    (d9, Some(y)),
                    (d10, None),
                ])
            }
            FamilySpec::NonIsotropicPlane { p, q, r } => {
                sum_terms(vec![(p, Some(x)), (q, Some(y)), (r, None)])
            }
            FamilySpec::Case31Candidate(c) => {
                singular_loci.push(SingularLocus::VerticalLine { x: -c.d9 / c.c4 });
                let shift = c.m0 / (2.0 * c.c3);
                let pole = Expr::num(1.0) / linear(x, c.c4, c.d9);
                let inner = if shift < 0.0 {
                    pole - Expr::Const(-shift)
                } else {
                    pole + Expr::Const(shift)
                };
                -inner * quadratic(y, c.c3, c.d7, c.d8)
            }
        };
        Ok(BuiltSurface {
            expr,
            singular_loci,
        })
    }

    /// Constant invariants the family is classified with.
    ///
    /// Case A/B: `K = 0`, `H = n0/m0`, relation `2·m0·H + K = n0`.
    /// Case C: `H = 0`, `K = -(c8·c9)²`; the linear Weingarten relation is
    /// underdetermined, so `lw` is left empty.
    /// Parabolic sphere: `K = 4·c3²`, `H = 2·c3`. Plane: `K = H = 0`.
    pub fn predict(&self) -> Result<FamilyPrediction> {
        self.validate()?;
        let (k, h, lw) = match *self {
            FamilySpec::CaseA { m0, n0, .. } | FamilySpec::CaseB { m0, n0, .. } => (
                0.0,
                n0 / m0,
                Some(LwParams::from_normalized(NormalizedLw { m0, n0 })),
            ),
            FamilySpec::CaseC { c8, c9, .. } => (-(c8 * c9).powi(2), 0.0, None),
            FamilySpec::ParabolicSphere { c3, .. } => (4.0 * c3 * c3, 2.0 * c3, None),
            FamilySpec::NonIsotropicPlane { .. } => (0.0, 0.0, None),
            FamilySpec::Case31Candidate(_) => return Err(Error::NoConstantPrediction),
        };
        Ok(FamilyPrediction {
            k_expected: Some(k),
            h_expected: Some(h),
            lw,
        })
    }
}

/// `c2·v² + c1·v + c0` with zero terms dropped.
fn quadratic(v: Expr, c2: f64, c1: f64, c0: f64) -> Expr {
    sum_terms(vec![
        (c2, Some(v.clone().powi(2))),
        (c1, Some(v)),
        (c0, None),
    ])
}

fn linear(v: Expr, c1: f64, c0: f64) -> Expr {
    sum_terms(vec![(c1, Some(v)), (c0, None)])
}

/// `Σ coef·monomial`, skipping zero coefficients and folding signs into
/// subtraction.
fn sum_terms(terms: Vec<(f64, Option<Expr>)>) -> Expr {
    let mut acc: Option<Expr> = None;
    for (coef, mono) in terms {
        if coef == 0.0 {
            continue;
        }
        let term = match mono {
            Some(m) => Expr::Const(coef.abs()) * m,
            None => Expr::Const(coef.abs()),
        };
        acc = Some(match (acc, coef < 0.0) {
            (None, false) => term,
            (None, true) => -term,
            (Some(a), false) => a + term,
            (Some(a), true) => a - term,
        });
    }
    acc.unwrap_or(Expr::Const(0.0))
}

/// Samples `(K, H)` over the domain and reports the deviation from the
/// predicted constants, `max(|K - K_expected|, |H - H_expected|)` per node.
pub fn verify_family(spec: &FamilySpec, d: &GridDomain, tol: f64) -> Result<FamilyCheck> {
    let prediction = spec.predict()?;
    let built = spec.build()?;
    let domain = with_loci(d, &built.singular_loci);
    let nodes = domain.checked_nodes()?;
    let mut samples = Vec::with_capacity(nodes.len());
    for n in nodes {
        let p = n.point;
        let j = built
            .expr
            .eval_jet(p.x, p.y)
            .map_err(|source| Error::Eval {
                x: p.x,
                y: p.y,
                source,
            })?;
        let c = curvatures(&j);
        let dk = prediction.k_expected.map_or(0.0, |k| (c.k - k).abs());
        let dh = prediction.h_expected.map_or(0.0, |h| (c.h - h).abs());
        samples.push((p, dk.max(dh)));
    }
    let report = ResidualReport::from_samples(samples)?;
    Ok(FamilyCheck {
        prediction,
        pass: report.passes(tol),
        report,
        tol,
    })
}

/// Copy of `d` that also excludes `loci`, with a default radius if `d` has
/// none.
pub fn with_loci(d: &GridDomain, loci: &[SingularLocus]) -> GridDomain {
    if loci.is_empty() {
        return d.clone();
    }
    let radius = if d.exclusion_radius > 0.0 {
        d.exclusion_radius
    } else {
        DEFAULT_EXCLUSION_RADIUS
    };
    let mut out = d.clone();
    out.exclusion_radius = radius;
    out.singular_loci.extend_from_slice(loci);
    out
}

/// The linear Weingarten residual `2·m0·H + K - n0` of the candidate surface,
/// which depends on `x` only:
///
/// `L(x) = c4²(4·c3·d8 - d7²)/u⁴ - 2·m0·c3/u - m0² - n0`, `u = c4·x + d9`.
pub fn case31_lhs(spec: &Case31Candidate, n0: f64, x: f64) -> Result<f64> {
    let c4x = spec.c4 * x;
    let u = c4x + spec.d9;
    if u.abs() <= f64::EPSILON * (c4x.abs() + spec.d9.abs()) {
        return Err(Error::SingularPoint { x });
    }
    let u2 = u * u;
    Ok(
        spec.c4 * spec.c4 * (4.0 * spec.c3 * spec.d8 - spec.d7 * spec.d7) / (u2 * u2)
            - 2.0 * spec.m0 * spec.c3 / u
            - spec.m0 * spec.m0
            - n0,
    )
}

/// Statistics of [`case31_lhs`] over `xs`. A strictly positive `std_dev`
/// over at least two samples shows the residual is not constant, so no choice
/// of `n0` makes the candidate a linear Weingarten surface. Worst points are
/// reported with `y = 0`.
pub fn case31_contradiction_scan(
    spec: &Case31Candidate,
    n0: f64,
    xs: &[f64],
) -> Result<ResidualReport> {
    FamilySpec::Case31Candidate(*spec).validate()?;
    let samples = xs
        .iter()
        .map(|&x| Ok((Point2::new(x, 0.0), case31_lhs(spec, n0, x)?)))
        .collect::<Result<Vec<_>>>()?;
    ResidualReport::from_samples(samples)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weingarten::lw_residual;

    const NEGATIVE_CONTROL: Case31Candidate = Case31Candidate {
        c3: 1.0,
        c4: 1.0,
        d7: 0.0,
        d8: 0.0,
        d9: 0.0,
        m0: 1.0,
    };

    #[test]
    fn build_examples() {
        let a = FamilySpec::CaseA {
            f0: 1.0,
            m0: 1.0,
            n0: 2.0,
            d1: 0.0,
            d2: 0.0,
        };
        assert_eq!(a.build().unwrap().expr.to_string(), "1*(2*y^2)");
        let c = FamilySpec::CaseC {
            c8: 2.0,
            d15: 1.0,
            c9: 3.0,
            d16: 4.0,
        };
        assert_eq!(c.build().unwrap().expr.to_string(), "(2*x+1)*(3*y+4)");
        let s = FamilySpec::ParabolicSphere {
            c3: 0.5,
            d8: 0.0,
            d9: 0.0,
            d10: 0.0,
        };
        assert_eq!(s.build().unwrap().expr.to_string(), "0.5*(x^2+y^2)");
        let s = FamilySpec::ParabolicSphere {
            c3: 0.5,
            d8: 3.0,
            d9: -1.0,
            d10: 7.0,
        };
        assert_eq!(
            s.build().unwrap().expr.to_string(),
            "0.5*(x^2+y^2)+3*x-1*y+7"
        );
        let b = FamilySpec::CaseB {
            g0: -2.0,
            m0: 1.0,
            n0: 4.0,
            d3: 0.5,
            d4: -1.0,
        };
        assert_eq!(
            b.build().unwrap().expr.to_string(),
            "(-(2*x^2)+0.5*x-1)*(-2)"
        );
    }

    #[test]
    fn built_strings_parse_back() {
        let specs = [
            FamilySpec::CaseB {
                g0: -2.0,
                m0: 1.0,
                n0: 4.0,
                d3: 0.5,
                d4: -1.0,
            },
            FamilySpec::NonIsotropicPlane {
                p: 2.0,
                q: -1.0,
                r: 1.0,
            },
            FamilySpec::Case31Candidate(Case31Candidate {
                m0: -3.0,
                d9: 0.5,
                ..NEGATIVE_CONTROL
            }),
        ];
        for s in specs {
            let e = s.build().unwrap().expr;
            assert_eq!(Expr::parse(&e.to_string()).unwrap(), e);
        }
    }

    #[test]
    fn invalid_specs() {
        let bad = FamilySpec::CaseC {
            c8: 0.0,
            d15: 1.0,
            c9: 3.0,
            d16: 4.0,
        };
        assert!(matches!(bad.build(), Err(Error::InvalidSpec(_))));
        let bad = FamilySpec::CaseA {
            f0: 1.0,
            m0: 0.0,
            n0: 2.0,
            d1: 0.0,
            d2: 0.0,
        };
        assert!(matches!(bad.predict(), Err(Error::InvalidSpec(_))));
        let bad = FamilySpec::ParabolicSphere {
            c3: 0.0,
            d8: 0.0,
            d9: 0.0,
            d10: 0.0,
        };
        assert!(bad.validate().is_err());
        let bad = FamilySpec::NonIsotropicPlane {
            p: f64::NAN,
            q: 0.0,
            r: 0.0,
        };
        assert!(bad.validate().is_err());
    }

    #[test]
    fn predictions() {
        let a = FamilySpec::CaseA {
            f0: 1.0,
            m0: 1.0,
            n0: 2.0,
            d1: 0.0,
            d2: 0.0,
        };
        let p = a.predict().unwrap();
        assert_eq!((p.k_expected, p.h_expected), (Some(0.0), Some(2.0)));
        let c = FamilySpec::CaseC {
            c8: 2.0,
            d15: 1.0,
            c9: 3.0,
            d16: 4.0,
        };
        let p = c.predict().unwrap();
        assert_eq!(
            (p.k_expected, p.h_expected, p.lw),
            (Some(-36.0), Some(0.0), None)
        );
        let s = FamilySpec::ParabolicSphere {
            c3: 0.5,
            d8: 0.0,
            d9: 0.0,
            d10: 0.0,
        };
        let p = s.predict().unwrap();
        assert_eq!((p.k_expected, p.h_expected), (Some(1.0), Some(1.0)));
        assert_eq!(
            FamilySpec::Case31Candidate(NEGATIVE_CONTROL).predict(),
            Err(Error::NoConstantPrediction)
        );
    }

    #[test]
    fn verify_examples() {
        let square = GridDomain::unit_square();
        for spec in [
            FamilySpec::CaseA {
                f0: 1.0,
                m0: 1.0,
                n0: 2.0,
                d1: 0.3,
                d2: -1.0,
            },
            FamilySpec::CaseB {
                g0: 2.5,
                m0: -0.5,
                n0: 1.0,
                d3: 0.0,
                d4: 4.0,
            },
            FamilySpec::CaseC {
                c8: 2.0,
                d15: 1.0,
                c9: 3.0,
                d16: 4.0,
            },
        ] {
            assert!(
                verify_family(&spec, &square, 1e-9).unwrap().pass,
                "{spec:?}"
            );
        }
        let big = GridDomain::new(-5.0, 5.0, -5.0, 5.0, 101, 101).unwrap();
        let sphere = FamilySpec::ParabolicSphere {
            c3: 0.5,
            d8: 3.0,
            d9: -1.0,
            d10: 7.0,
        };
        assert!(verify_family(&sphere, &big, 1e-9).unwrap().pass);
        assert_eq!(
            verify_family(
                &FamilySpec::Case31Candidate(NEGATIVE_CONTROL),
                &square,
                1e-9
            ),
            Err(Error::NoConstantPrediction)
        );
    }

    #[test]
    fn contradiction_scan_examples() {
        let xs = [0.5, 1.0, 2.0];
        let ls: Vec<f64> = xs
            .iter()
            .map(|&x| case31_lhs(&NEGATIVE_CONTROL, 0.0, x).unwrap())
            .collect();
        assert_eq!(ls, vec![-5.0, -3.0, -2.0]);
        let r = case31_contradiction_scan(&NEGATIVE_CONTROL, 0.0, &xs).unwrap();
        assert!(r.std_dev > 0.0);
        let r = case31_contradiction_scan(&NEGATIVE_CONTROL, 0.0, &[1.0]).unwrap();
        assert_eq!(r.std_dev, 0.0);
        let pole = Case31Candidate {
            c4: 1.5,
            d9: -1.5 * 2.0,
            ..NEGATIVE_CONTROL
        };
        assert_eq!(
            case31_contradiction_scan(&pole, 0.0, &[0.5, 2.0]),
            Err(Error::SingularPoint { x: 2.0 })
        );
    }

    #[test]
    fn contradiction_matches_surface_residual() {
        let spec = Case31Candidate {
            c3: 0.7,
            c4: -1.3,
            d7: 0.4,
            d8: 1.1,
            d9: 2.0,
            m0: 0.9,
        };
        let n0 = -0.25;
        let built = FamilySpec::Case31Candidate(spec).build().unwrap();
        assert_eq!(
            built.singular_loci,
            vec![SingularLocus::VerticalLine { x: 2.0 / 1.3 }]
        );
        let params = LwParams::from_normalized(NormalizedLw { m0: spec.m0, n0 });
        for &(x, y) in &[(0.0, 0.0), (0.5, -1.0), (-1.0, 0.7), (1.0, 2.0)] {
            let c = curvatures(&built.expr.eval_jet(x, y).unwrap());
            let surface = lw_residual(&c, &params);
            let closed = case31_lhs(&spec, n0, x).unwrap();
            assert!(
                (surface - closed).abs() <= 1e-9,
                "{x} {y}: {surface} vs {closed}"
            );
        }
    }

    #[test]
    fn spec_json_shape() {
        let s: FamilySpec = serde_json::from_str(
            r#"{"kind":"Case31Candidate","c3":1,"c4":1,"d7":0,"d8":0,"d9":0,"m0":1}"#,
        )
        .unwrap();
        assert_eq!(s, FamilySpec::Case31Candidate(NEGATIVE_CONTROL));
        let a = FamilySpec::CaseA {
            f0: 1.0,
            m0: 1.0,
            n0: 2.0,
            d1: 0.0,
            d2: 0.0,
        };
        let v = serde_json::to_value(a).unwrap();
        assert_eq!(v["kind"], "CaseA");
        assert_eq!(v["n0"], 2.0);
        assert!(serde_json::from_str::<FamilySpec>(r#"{"kind":"CaseZ"}"#).is_err());
    }
}
