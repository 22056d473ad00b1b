//! Closed-form surface expressions `z(x, y)`.
//!
//! Grammar (ASCII, whitespace ignored):
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/') unary)*
//! unary   := '-' unary | power
//! power   := primary ('^' unary)?
//! primary := number | 'x' | 'y' | func '(' expr ')' | '(' expr ')'
//! func    := 'exp' | 'ln' | 'sin' | 'cos' | 'sqrt'
//! ```
//!
//! `^` is right-associative and binds tighter than unary minus, so `-x^2` is
//! `-(x^2)`. Exponents must fold to a numeric constant; integral values become
//! [`Exponent::Int`], everything else [`Exponent::Real`]. There is no implicit
//! multiplication.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::error::EvalError;
use crate::jet::{Jet1, Jet2, Taylor};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    X,
    Y,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Func {
    Exp,
    Ln,
    Sin,
    Cos,
    Sqrt,
}

impl Func {
    fn name(self) -> &'static str {
        match self {
            Func::Exp => "exp",
            Func::Ln => "ln",
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Sqrt => "sqrt",
        }
    }

    fn from_name(s: &str) -> Option<Func> {
        Some(match s {
            "exp" => Func::Exp,
            "ln" => Func::Ln,
            "sin" => Func::Sin,
            "cos" => Func::Cos,
            "sqrt" => Func::Sqrt,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Exponent {
    /// Evaluated by repeated multiplication; exact for polynomials.
    Int(i32),
    /// Requires a positive base.
    Real(f64),
}

impl Exponent {
    fn from_value(v: f64) -> Exponent {
        if v.fract() == 0.0 && v.abs() <= i32::MAX as f64 {
            Exponent::Int(v as i32)
        } else {
            Exponent::Real(v)
        }
    }
}

/// Expression tree. Immutable once built; evaluation borrows it.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Const(f64),
    Var(Var),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Exponent),
    Func(Func, Box<Expr>),
}

impl Expr {
    pub fn parse(text: &str) -> Result<Expr, ParseError> {
        Parser::new(text)?.parse_all()
    }

    pub fn x() -> Expr {
        Expr::Var(Var::X)
    }

    pub fn y() -> Expr {
        Expr::Var(Var::Y)
    }

    /// Numeric literal; negative values become `Neg(Const(|c|))` so that the
    /// printed form parses back to the same tree.
    pub fn num(c: f64) -> Expr {
        if c < 0.0 {
            Expr::Neg(Box::new(Expr::Const(-c)))
        } else {
            Expr::Const(c)
        }
    }

    pub fn powi(self, n: i32) -> Expr {
        Expr::Pow(Box::new(self), Exponent::Int(n))
    }

    pub fn powf(self, r: f64) -> Expr {
        Expr::Pow(Box::new(self), Exponent::from_value(r))
    }

    pub fn apply(self, f: Func) -> Expr {
        Expr::Func(f, Box::new(self))
    }

    /// Which of `x`, `y` occur in the tree.
    pub fn variables(&self) -> (bool, bool) {
        match self {
            Expr::Const(_) => (false, false),
            Expr::Var(Var::X) => (true, false),
            Expr::Var(Var::Y) => (false, true),
            Expr::Neg(a) | Expr::Pow(a, _) | Expr::Func(_, a) => a.variables(),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                let (ax, ay) = a.variables();
                let (bx, by) = b.variables();
                (ax || bx, ay || by)
            }
        }
    }

    /// Plain real evaluation. Shares no arithmetic with the jet layer.
    pub fn eval<T: Scalar>(&self, x: T, y: T) -> Result<T, EvalError> {
        let out = match self {
            Expr::Const(c) => T::lit(*c),
            Expr::Var(Var::X) => x,
            Expr::Var(Var::Y) => y,
            Expr::Neg(a) => -a.eval(x, y)?,
            Expr::Add(a, b) => a.eval(x, y)? + b.eval(x, y)?,
            Expr::Sub(a, b) => a.eval(x, y)? - b.eval(x, y)?,
            Expr::Mul(a, b) => a.eval(x, y)? * b.eval(x, y)?,
            Expr::Div(a, b) => {
                let n = a.eval(x, y)?;
                let d = b.eval(x, y)?;
                if d == T::zero() {
                    return Err(EvalError::DivisionByZero);
                }
                n / d
            }
            Expr::Pow(a, Exponent::Int(n)) => {
                let v = a.eval(x, y)?;
                if *n < 0 && v == T::zero() {
                    return Err(EvalError::DivisionByZero);
                }
                v.powi(*n)
            }
            Expr::Pow(a, Exponent::Real(r)) => {
                let v = a.eval(x, y)?;
                if !(v > T::zero()) {
                    return Err(EvalError::Domain("real power of a non-positive base"));
                }
                v.powf(T::lit(*r))
            }
            Expr::Func(f, a) => {
                let v = a.eval(x, y)?;
                match f {
                    Func::Exp => v.exp(),
                    Func::Sin => v.sin(),
                    Func::Cos => v.cos(),
                    Func::Ln | Func::Sqrt if !(v > T::zero()) => {
                        return Err(EvalError::Domain(if *f == Func::Ln {
                            "ln of a non-positive value"
                        } else {
                            "sqrt of a non-positive value"
                        }))
                    }
                    Func::Ln => v.ln(),
                    Func::Sqrt => v.sqrt(),
                }
            }
        };
        if out.is_finite() {
            Ok(out)
        } else {
            Err(EvalError::Overflow)
        }
    }

    /// Evaluates the tree in any jet algebra, with `x` and `y` bound to the
    /// given jets.
    pub fn eval_taylor<T: Scalar, J: Taylor<T>>(&self, x: J, y: J) -> Result<J, EvalError> {
        let out = match self {
            Expr::Const(c) => J::constant(T::lit(*c)),
            Expr::Var(Var::X) => x,
            Expr::Var(Var::Y) => y,
            Expr::Neg(a) => -a.eval_taylor(x, y)?,
            Expr::Add(a, b) => a.eval_taylor(x, y)? + b.eval_taylor(x, y)?,
            Expr::Sub(a, b) => a.eval_taylor(x, y)? - b.eval_taylor(x, y)?,
            Expr::Mul(a, b) => a.eval_taylor(x, y)? * b.eval_taylor(x, y)?,
            Expr::Div(a, b) => a.eval_taylor(x, y)?.checked_div(b.eval_taylor(x, y)?)?,
            Expr::Pow(a, Exponent::Int(n)) => a.eval_taylor(x, y)?.pow_int(*n)?,
            Expr::Pow(a, Exponent::Real(r)) => a.eval_taylor(x, y)?.pow_real(T::lit(*r))?,
            Expr::Func(f, a) => {
                let v = a.eval_taylor(x, y)?;
                match f {
                    Func::Exp => v.exp()?,
                    Func::Ln => v.ln()?,
                    Func::Sin => v.sin()?,
                    Func::Cos => v.cos()?,
                    Func::Sqrt => v.sqrt()?,
                }
            }
        };
        if out.is_finite() {
            Ok(out)
        } else {
            Err(EvalError::Overflow)
        }
    }

    /// Value and first/second partials at `(x, y)`.
    pub fn eval_jet<T: Scalar>(&self, x: T, y: T) -> Result<Jet2<T>, EvalError> {
        self.eval_taylor(Jet2::seed_x(x), Jet2::seed_y(y))
    }

    /// `(f(t0), f'(t0), f''(t0))` for an expression in a single variable
    /// (either `x` or `y`).
    pub fn lift_1d<T: Scalar>(&self, t0: T) -> Result<Jet1<T>, EvalError> {
        let seed = Jet1::seed(t0);
        let unused = Jet1::seed_const(T::zero());
        match self.variables() {
            (true, true) => Err(EvalError::MixedVariable),
            (_, true) => self.eval_taylor(unused, seed),
            _ => self.eval_taylor(seed, unused),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            Expr::Neg(_) => 3,
            Expr::Pow(..) => 4,
            Expr::Const(c) if *c < 0.0 => 3,
            Expr::Const(_) | Expr::Var(_) | Expr::Func(..) => 5,
        }
    }
}

impl FromStr for Expr {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Expr::parse(s)
    }
}

macro_rules! expr_binop {
    ($tr:ident, $method:ident, $variant:ident) => {
        impl std::ops::$tr for Expr {
            type Output = Expr;
            fn $method(self, rhs: Expr) -> Expr {
                Expr::$variant(Box::new(self), Box::new(rhs))
            }
        }
    };
}

expr_binop!(Add, add, Add);
expr_binop!(Sub, sub, Sub);
expr_binop!(Mul, mul, Mul);
expr_binop!(Div, div, Div);

impl std::ops::Neg for Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        Expr::Neg(Box::new(self))
    }
}

// Printing with minimal parentheses. Left-associative operators parenthesize a
// right operand of equal precedence; a negated right operand is always wrapped.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn child(f: &mut fmt::Formatter<'_>, e: &Expr, wrap: bool) -> fmt::Result {
            if wrap {
                write!(f, "({e})")
            } else {
                write!(f, "{e}")
            }
        }
        match self {
            Expr::Const(c) if *c < 0.0 => write!(f, "(-{})", -c),
            Expr::Const(c) => write!(f, "{c}"),
            Expr::Var(Var::X) => f.write_str("x"),
            Expr::Var(Var::Y) => f.write_str("y"),
            Expr::Neg(a) => {
                f.write_str("-")?;
                child(f, a, a.precedence() < 3)
            }
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                let (p, op) = match self {
                    Expr::Add(..) => (1, "+"),
                    Expr::Sub(..) => (1, "-"),
                    Expr::Mul(..) => (2, "*"),
                    _ => (2, "/"),
                };
                child(f, a, a.precedence() < p)?;
                f.write_str(op)?;
                child(f, b, b.precedence() <= p || b.precedence() == 3)
            }
            Expr::Pow(a, e) => {
                child(f, a, a.precedence() <= 4)?;
                match e {
                    Exponent::Int(n) if *n < 0 => write!(f, "^(-{})", n.unsigned_abs()),
                    Exponent::Int(n) => write!(f, "^{n}"),
                    Exponent::Real(r) if *r < 0.0 => write!(f, "^(-{})", -r),
                    Exponent::Real(r) => write!(f, "^{r}"),
                }
            }
            Expr::Func(func, a) => write!(f, "{}({a})", func.name()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    EmptyInput,
    UnexpectedChar(char),
    UnexpectedToken(String),
    UnexpectedEnd,
    UnknownIdentifier(String),
    NonConstantExponent,
    InvalidNumber,
}

/// Parse failure with the byte offset at which it was detected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{}", describe(.kind, *.offset))]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub offset: usize,
}

fn describe(kind: &ParseErrorKind, offset: usize) -> String {
    match kind {
        ParseErrorKind::EmptyInput => "empty expression".to_string(),
        ParseErrorKind::UnexpectedChar(c) => {
            format!("syntax error at offset {offset}: unexpected character {c:?}")
        }
        ParseErrorKind::UnexpectedToken(t) => {
            format!("syntax error at offset {offset}: unexpected {t}")
        }
        ParseErrorKind::UnexpectedEnd => {
            format!("syntax error at offset {offset}: unexpected end of input")
        }
        ParseErrorKind::UnknownIdentifier(name) => {
            format!("unknown identifier {name:?} at offset {offset}")
        }
        ParseErrorKind::NonConstantExponent => {
            format!("syntax error at offset {offset}: exponent must be a numeric constant")
        }
        ParseErrorKind::InvalidNumber => format!("syntax error at offset {offset}: bad number"),
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(f64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Num(v) => format!("number {v}"),
            Tok::Ident(s) => format!("identifier {s:?}"),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Slash => "'/'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let start = i;
        let tok = match b {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' | b'.' => {
                while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == b'.') {
                    i += 1;
                }
                let lit = &text[start..i];
                let v: f64 = lit.parse().map_err(|_| ParseError {
                    kind: ParseErrorKind::InvalidNumber,
                    offset: start,
                })?;
                out.push((Tok::Num(v), start));
                continue;
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(text[start..i].to_string()), start));
                continue;
            }
            _ => {
                let c = text[start..].chars().next().unwrap_or('\u{fffd}');
                return Err(ParseError {
                    kind: ParseErrorKind::UnexpectedChar(c),
                    offset: start,
                });
            }
        };
        out.push((tok, start));
        i += 1;
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Parser, ParseError> {
        let toks = tokenize(text)?;
        if toks.len() == 1 {
            return Err(ParseError {
                kind: ParseErrorKind::EmptyInput,
                offset: 0,
            });
        }
        Ok(Parser { toks, pos: 0 })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self) -> ParseError {
        let kind = match self.peek() {
            Tok::End => ParseErrorKind::UnexpectedEnd,
            t => ParseErrorKind::UnexpectedToken(t.describe()),
        };
        ParseError {
            kind,
            offset: self.offset(),
        }
    }

    fn parse_all(mut self) -> Result<Expr, ParseError> {
        let e = self.expr()?;
        if *self.peek() != Tok::End {
            return Err(self.unexpected());
        }
        Ok(e)
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = lhs + self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    lhs = lhs - self.term()?;
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    lhs = lhs * self.unary()?;
                }
                Tok::Slash => {
                    self.bump();
                    lhs = lhs / self.unary()?;
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.primary()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let at = self.offset();
        let exponent = self.unary()?;
        let non_constant = ParseError {
            kind: ParseErrorKind::NonConstantExponent,
            offset: at,
        };
        if exponent.variables() != (false, false) {
            return Err(non_constant);
        }
        let v: f64 = exponent.eval(0.0, 0.0).map_err(|_| non_constant)?;
        Ok(Expr::Pow(Box::new(base), Exponent::from_value(v)))
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        let at = self.offset();
        match self.peek().clone() {
            Tok::Num(v) => {
                self.bump();
                Ok(Expr::Const(v))
            }
            Tok::Ident(name) => {
                self.bump();
                match name.as_str() {
                    "x" => Ok(Expr::x()),
                    "y" => Ok(Expr::y()),
                    _ => match Func::from_name(&name) {
                        Some(func) => {
                            if *self.peek() != Tok::LParen {
                                return Err(self.unexpected());
                            }
                            self.bump();
                            let arg = self.expr()?;
                            self.expect_rparen()?;
                            Ok(arg.apply(func))
                        }
                        None => Err(ParseError {
                            kind: ParseErrorKind::UnknownIdentifier(name),
                            offset: at,
                        }),
                    },
                }
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect_rparen()?;
                Ok(e)
            }
            _ => Err(self.unexpected()),
        }
    }

    fn expect_rparen(&mut self) -> Result<(), ParseError> {
        if *self.peek() == Tok::RParen {
            self.bump();
            Ok(())
        } else {
            Err(self.unexpected())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: f64) -> Expr {
        Expr::Const(v)
    }

    #[test]
    fn parses_factorable_plane() {
        let e = Expr::parse("(2*x+1)*(3*y+4)").unwrap();
        let expected = (c(2.0) * Expr::x() + c(1.0)) * (c(3.0) * Expr::y() + c(4.0));
        assert_eq!(e, expected);
        assert_eq!(e.to_string(), "(2*x+1)*(3*y+4)");
    }

    #[test]
    fn parses_parabolic_sphere() {
        let e = Expr::parse("0.5*(x^2+y^2)").unwrap();
        assert_eq!(e, c(0.5) * (Expr::x().powi(2) + Expr::y().powi(2)));
        assert_eq!(e.to_string(), "0.5*(x^2+y^2)");
    }

    #[test]
    fn syntax_error_offset() {
        let err = Expr::parse("x + * y").unwrap_err();
        assert_eq!(err.offset, 4);
        assert!(matches!(err.kind, ParseErrorKind::UnexpectedToken(_)));
        let err = Expr::parse("x +").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::UnexpectedEnd);
        assert_eq!(err.offset, 3);
    }

    #[test]
    fn other_parse_errors() {
        assert_eq!(
            Expr::parse("").unwrap_err().kind,
            ParseErrorKind::EmptyInput
        );
        assert_eq!(
            Expr::parse("   ").unwrap_err().kind,
            ParseErrorKind::EmptyInput
        );
        let err = Expr::parse("x + tan(y)").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::UnknownIdentifier("tan".into()));
        assert_eq!(err.offset, 4);
        // no implicit multiplication
        assert_eq!(Expr::parse("2x").unwrap_err().offset, 1);
        assert_eq!(
            Expr::parse("x^y").unwrap_err().kind,
            ParseErrorKind::NonConstantExponent
        );
        assert!(matches!(
            Expr::parse("x # y").unwrap_err().kind,
            ParseErrorKind::UnexpectedChar('#')
        ));
        assert_eq!(
            Expr::parse("1.2.3").unwrap_err().kind,
            ParseErrorKind::InvalidNumber
        );
        assert_eq!(Expr::parse("sin x").unwrap_err().offset, 4);
        assert_eq!(
            Expr::parse("(x+1").unwrap_err().kind,
            ParseErrorKind::UnexpectedEnd
        );
    }

    #[test]
    fn precedence_and_associativity() {
        assert_eq!(Expr::parse("-x^2").unwrap(), -Expr::x().powi(2));
        assert_eq!(Expr::parse("x^2^3").unwrap(), Expr::x().powi(8));
        assert_eq!(Expr::parse("x^-1").unwrap(), Expr::x().powi(-1));
        assert_eq!(Expr::parse("x^0.5").unwrap(), Expr::x().powf(0.5));
        assert_eq!(
            Expr::parse("x-y-1").unwrap(),
            (Expr::x() - Expr::y()) - c(1.0)
        );
        assert_eq!(
            Expr::parse("x/y*2").unwrap(),
            (Expr::x() / Expr::y()) * c(2.0)
        );
    }

    #[test]
    fn printing_keeps_structure() {
        let cases = [
            Expr::x() - (Expr::y() - c(1.0)),
            Expr::x() / (Expr::y() * c(2.0)),
            (-Expr::x()).powi(2),
            Expr::x().powi(2).powi(3),
            Expr::x() * -Expr::y(),
            Expr::x().powi(-2),
            Expr::x().powf(-0.25),
            -(Expr::x() + Expr::y()),
            (Expr::x() + c(1.0)).apply(Func::Ln),
        ];
        for e in cases {
            let printed = e.to_string();
            assert_eq!(Expr::parse(&printed).unwrap(), e, "{printed}");
        }
        assert_eq!((Expr::x() * -Expr::y()).to_string(), "x*(-y)");
        assert_eq!(Expr::x().powi(-2).to_string(), "x^(-2)");
    }

    #[test]
    fn jet_of_bilinear() {
        let j = Expr::parse("x*y").unwrap().eval_jet(2.0, 3.0).unwrap();
        assert_eq!(j.components(), [6.0, 3.0, 2.0, 0.0, 1.0, 0.0]);
    }

    #[test]
    fn constant_hessian_of_paraboloid() {
        let e = Expr::parse("0.5*(x^2+y^2)").unwrap();
        for (a, b) in [(0.0, 0.0), (-3.5, 2.0), (10.0, -7.25)] {
            let j = e.eval_jet(a, b).unwrap();
            assert_eq!((j.dxx, j.dxy, j.dyy), (1.0, 0.0, 1.0));
        }
    }

    #[test]
    fn eval_errors() {
        let e = Expr::parse("1/x").unwrap();
        assert_eq!(e.eval_jet(0.0, 1.0), Err(EvalError::DivisionByZero));
        assert_eq!(e.eval(0.0, 1.0), Err(EvalError::DivisionByZero));
        let e = Expr::parse("ln(x)").unwrap();
        assert!(matches!(e.eval_jet(-1.0, 0.0), Err(EvalError::Domain(_))));
        assert!(matches!(e.eval(-1.0, 0.0), Err(EvalError::Domain(_))));
        let e = Expr::parse("exp(x)").unwrap();
        assert_eq!(e.eval_jet(1000.0, 0.0), Err(EvalError::Overflow));
        assert_eq!(e.eval(1000.0, 0.0), Err(EvalError::Overflow));
    }

    #[test]
    fn lift_univariate() {
        let e = Expr::parse("2*x+5").unwrap();
        assert_eq!(e.lift_1d(1.5).unwrap(), Jet1::new(8.0, 2.0, 0.0));
        let g = Expr::parse("2*y^2").unwrap();
        assert_eq!(g.lift_1d(1.0).unwrap(), Jet1::new(2.0, 4.0, 4.0));
        assert_eq!(
            Expr::parse("x^2").unwrap().lift_1d(3.0).unwrap(),
            Jet1::new(9.0, 6.0, 2.0)
        );
        assert_eq!(
            Expr::parse("x*y").unwrap().lift_1d(1.0),
            Err(EvalError::MixedVariable)
        );
        assert_eq!(
            Expr::parse("4").unwrap().lift_1d(1.0).unwrap(),
            Jet1::new(4.0, 0.0, 0.0)
        );
    }
}
