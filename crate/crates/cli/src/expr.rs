//! Expression parsing shared by coefficient and polynomial contexts.
//!
//! The grammar is deliberately small: `+ - * / ^ ( )` over identifiers and
//! integer literals. `*` is noncommutative and left-associative — there is
//! no implicit multiplication — so an expression always normalizes the same
//! way regardless of how the reader might regroup it. `/` and negative
//! exponents are only defined where an inverse exists (scalars, coefficient
//! units), and every error carries the line and column it arose at.

use num_bigint::BigInt;
use qpbw_core::pbw::AlgebraPresentation;
use qpbw_core::scalars::{LaurentCoefficient, Scalar};
use qpbw_core::StandardPolynomial;
use std::fmt;

/// A 1-based source position.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pos {
    pub line: u32,
    pub col: u32,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.col)
    }
}

/// A positioned expression error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExprError {
    pub message: String,
    pub pos: Pos,
}

impl ExprError {
    fn new(message: impl Into<String>, pos: Pos) -> Self {
        ExprError {
            message: message.into(),
            pos,
        }
    }
}

impl fmt::Display for ExprError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.pos, self.message)
    }
}

impl std::error::Error for ExprError {}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "identifier `{s}`"),
            Tok::Int(n) => write!(f, "integer `{n}`"),
            Tok::Plus => write!(f, "`+`"),
            Tok::Minus => write!(f, "`-`"),
            Tok::Star => write!(f, "`*`"),
            Tok::Slash => write!(f, "`/`"),
            Tok::Caret => write!(f, "`^`"),
            Tok::LParen => write!(f, "`(`"),
            Tok::RParen => write!(f, "`)`"),
        }
    }
}

fn lex(text: &str, line: u32, col0: u32) -> Result<Vec<(Tok, Pos)>, ExprError> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let pos = Pos {
            line,
            col: col0 + i as u32,
        };
        let c = chars[i];
        match c {
            ' ' | '\t' => i += 1,
            '+' => {
                out.push((Tok::Plus, pos));
                i += 1;
            }
            '-' => {
                out.push((Tok::Minus, pos));
                i += 1;
            }
            '*' => {
                out.push((Tok::Star, pos));
                i += 1;
            }
            '/' => {
                out.push((Tok::Slash, pos));
                i += 1;
            }
            '^' => {
                out.push((Tok::Caret, pos));
                i += 1;
            }
            '(' => {
                out.push((Tok::LParen, pos));
                i += 1;
            }
            ')' => {
                out.push((Tok::RParen, pos));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                let value = digits
                    .parse::<BigInt>()
                    .map_err(|e| ExprError::new(format!("bad integer: {e}"), pos))?;
                out.push((Tok::Int(value), pos));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len()
                    && (chars[i].is_ascii_alphanumeric() || chars[i] == '_')
                {
                    i += 1;
                }
                out.push((Tok::Ident(chars[start..i].iter().collect()), pos));
            }
            other => {
                return Err(ExprError::new(format!("unexpected character `{other}`"), pos));
            }
        }
    }
    Ok(out)
}

/// A parsed expression with positions retained for evaluation-time errors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Ident(String, Pos),
    Int(BigInt, Pos),
    Neg(Box<Expr>, Pos),
    Add(Box<Expr>, Box<Expr>, Pos),
    Sub(Box<Expr>, Box<Expr>, Pos),
    Mul(Box<Expr>, Box<Expr>, Pos),
    Div(Box<Expr>, Box<Expr>, Pos),
    Pow(Box<Expr>, i64, Pos),
}

impl Expr {
    pub fn pos(&self) -> Pos {
        match self {
            Expr::Ident(_, p)
            | Expr::Int(_, p)
            | Expr::Neg(_, p)
            | Expr::Add(_, _, p)
            | Expr::Sub(_, _, p)
            | Expr::Mul(_, _, p)
            | Expr::Div(_, _, p)
            | Expr::Pow(_, _, p) => *p,
        }
    }
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
    end: Pos,
}

impl Parser {
    fn peek(&self) -> Option<&(Tok, Pos)> {
        self.toks.get(self.at)
    }

    fn next(&mut self) -> Option<(Tok, Pos)> {
        let t = self.toks.get(self.at).cloned();
        if t.is_some() {
            self.at += 1;
        }
        t
    }

    // expr := term (('+' | '-') term)*
    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.term()?;
        while let Some((tok, pos)) = self.peek().cloned() {
            match tok {
                Tok::Plus => {
                    self.at += 1;
                    let rhs = self.term()?;
                    lhs = Expr::Add(Box::new(lhs), Box::new(rhs), pos);
                }
                Tok::Minus => {
                    self.at += 1;
                    let rhs = self.term()?;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(rhs), pos);
                }
                _ => break,
            }
        }
        Ok(lhs)
    }

    // term := factor (('*' | '/') factor)*
    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.factor()?;
        while let Some((tok, pos)) = self.peek().cloned() {
            match tok {
                Tok::Star => {
                    self.at += 1;
                    let rhs = self.factor()?;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(rhs), pos);
                }
                Tok::Slash => {
                    self.at += 1;
                    let rhs = self.factor()?;
                    lhs = Expr::Div(Box::new(lhs), Box::new(rhs), pos);
                }
                _ => break,
            }
        }
        Ok(lhs)
    }

    // factor := '-' factor | atom ('^' exponent)?
    fn factor(&mut self) -> Result<Expr, ExprError> {
        if let Some((Tok::Minus, pos)) = self.peek().cloned() {
            self.at += 1;
            let inner = self.factor()?;
            return Ok(Expr::Neg(Box::new(inner), pos));
        }
        let atom = self.atom()?;
        if let Some((Tok::Caret, pos)) = self.peek().cloned() {
            self.at += 1;
            let e = self.exponent()?;
            return Ok(Expr::Pow(Box::new(atom), e, pos));
        }
        Ok(atom)
    }

    // exponent := '-'? integer
    fn exponent(&mut self) -> Result<i64, ExprError> {
        let mut negative = false;
        if let Some((Tok::Minus, _)) = self.peek() {
            self.at += 1;
            negative = true;
        }
        match self.next() {
            Some((Tok::Int(n), pos)) => {
                let mag: i64 = (&n)
                    .try_into()
                    .map_err(|_| ExprError::new("exponent too large", pos))?;
                Ok(if negative { -mag } else { mag })
            }
            Some((tok, pos)) => Err(ExprError::new(
                format!("expected an integer exponent, found {tok}"),
                pos,
            )),
            None => Err(ExprError::new("expected an integer exponent", self.end)),
        }
    }

    // atom := identifier | integer | '(' expr ')'
    fn atom(&mut self) -> Result<Expr, ExprError> {
        match self.next() {
            Some((Tok::Ident(name), pos)) => Ok(Expr::Ident(name, pos)),
            Some((Tok::Int(n), pos)) => Ok(Expr::Int(n, pos)),
            Some((Tok::LParen, open)) => {
                let inner = self.expr()?;
                match self.next() {
                    Some((Tok::RParen, _)) => Ok(inner),
                    Some((tok, pos)) => Err(ExprError::new(
                        format!("expected `)` to close the group opened at column {}, found {tok}", open.col),
                        pos,
                    )),
                    None => Err(ExprError::new(
                        format!("unclosed `(` opened at column {}", open.col),
                        self.end,
                    )),
                }
            }
            Some((tok, pos)) => Err(ExprError::new(format!("unexpected {tok}"), pos)),
            None => Err(ExprError::new("empty expression", self.end)),
        }
    }
}

/// Parses `text` into an expression tree. `line` and `col0` locate the
/// first character of `text` in the enclosing document, so errors point at
/// the right place even for expressions embedded in larger files.
pub fn parse_expr(text: &str, line: u32, col0: u32) -> Result<Expr, ExprError> {
    let toks = lex(text, line, col0)?;
    let end = Pos {
        line,
        col: col0 + text.chars().count() as u32,
    };
    let mut parser = Parser { toks, at: 0, end };
    let expr = parser.expr()?;
    if let Some((tok, pos)) = parser.peek() {
        return Err(ExprError::new(format!("trailing {tok}"), *pos));
    }
    Ok(expr)
}

/// Name resolution for coefficient expressions: `q` plus the declared
/// coefficient variables.
#[derive(Debug, Clone)]
pub struct CoeffScope {
    names: Vec<String>,
}

impl CoeffScope {
    pub fn new(names: Vec<String>) -> Self {
        CoeffScope { names }
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    fn resolve(&self, name: &str, pos: Pos) -> Result<LaurentCoefficient, ExprError> {
        if name == "q" {
            return Ok(LaurentCoefficient::from_scalar(self.rank(), Scalar::q()));
        }
        match self.names.iter().position(|n| n == name) {
            Some(i) => Ok(LaurentCoefficient::var(self.rank(), i)),
            None => Err(ExprError::new(
                format!("unknown coefficient name `{name}`"),
                pos,
            )),
        }
    }
}

/// Evaluates an expression as a coefficient (an element of the Laurent
/// polynomial ring over the scalar field).
pub fn eval_coefficient(
    expr: &Expr,
    scope: &CoeffScope,
) -> Result<LaurentCoefficient, ExprError> {
    let rank = scope.rank();
    match expr {
        Expr::Ident(name, pos) => scope.resolve(name, *pos),
        Expr::Int(n, _) => Ok(LaurentCoefficient::from_scalar(
            rank,
            Scalar::from_poly(qpbw_core::scalars::IntPoly::constant(n.clone())),
        )),
        Expr::Neg(inner, _) => Ok(eval_coefficient(inner, scope)?.neg()),
        Expr::Add(a, b, _) => Ok(eval_coefficient(a, scope)?.add(&eval_coefficient(b, scope)?)),
        Expr::Sub(a, b, _) => Ok(eval_coefficient(a, scope)?.sub(&eval_coefficient(b, scope)?)),
        Expr::Mul(a, b, _) => Ok(eval_coefficient(a, scope)?.mul(&eval_coefficient(b, scope)?)),
        Expr::Div(a, b, pos) => {
            let num = eval_coefficient(a, scope)?;
            let den = eval_coefficient(b, scope)?;
            let inv = den.inv().map_err(|_| {
                ExprError::new("division by a non-invertible coefficient", *pos)
            })?;
            Ok(num.mul(&inv))
        }
        Expr::Pow(base, e, pos) => {
            let b = eval_coefficient(base, scope)?;
            b.pow(*e).map_err(|_| {
                ExprError::new(
                    "negative power of a non-invertible coefficient",
                    *pos,
                )
            })
        }
    }
}

/// Evaluates an expression as an element of the algebra, normalizing into
/// standard form as it goes: every product runs through the rewriting
/// engine, so the result's terms are ordered monomials.
pub fn eval_polynomial(
    expr: &Expr,
    algebra: &AlgebraPresentation,
) -> Result<StandardPolynomial, ExprError> {
    let rank = algebra.coeff_rank();
    match expr {
        Expr::Ident(name, pos) => {
            if let Some(i) = algebra.var_names().iter().position(|n| n == name) {
                return Ok(algebra.var(i));
            }
            if name == "q" {
                return Ok(algebra
                    .scalar_poly(LaurentCoefficient::from_scalar(rank, Scalar::q())));
            }
            if let Some(i) = algebra
                .domain()
                .var_names()
                .iter()
                .position(|n| n == name)
            {
                return Ok(algebra.scalar_poly(LaurentCoefficient::var(rank, i)));
            }
            Err(ExprError::new(format!("unknown name `{name}`"), *pos))
        }
        Expr::Int(n, _) => Ok(algebra.scalar_poly(LaurentCoefficient::from_scalar(
            rank,
            Scalar::from_poly(qpbw_core::scalars::IntPoly::constant(n.clone())),
        ))),
        Expr::Neg(inner, _) => Ok(eval_polynomial(inner, algebra)?.neg()),
        Expr::Add(a, b, _) => {
            Ok(eval_polynomial(a, algebra)?.add(&eval_polynomial(b, algebra)?))
        }
        Expr::Sub(a, b, _) => {
            Ok(eval_polynomial(a, algebra)?.sub(&eval_polynomial(b, algebra)?))
        }
        Expr::Mul(a, b, pos) => {
            let lhs = eval_polynomial(a, algebra)?;
            let rhs = eval_polynomial(b, algebra)?;
            algebra
                .multiply(&lhs, &rhs)
                .map_err(|e| ExprError::new(format!("product failed: {e}"), *pos))
        }
        Expr::Div(a, b, pos) => {
            let num = eval_polynomial(a, algebra)?;
            let den = eval_polynomial(b, algebra)?;
            let inv = scalar_like_inverse(&den).ok_or_else(|| {
                ExprError::new(
                    "division is only defined by invertible coefficients",
                    *pos,
                )
            })?;
            Ok(num.scale(&inv))
        }
        Expr::Pow(base, e, pos) => {
            let b = eval_polynomial(base, algebra)?;
            if *e < 0 {
                let inv = scalar_like_inverse(&b).ok_or_else(|| {
                    ExprError::new(
                        "negative powers are only defined for invertible coefficients",
                        *pos,
                    )
                })?;
                return inv.pow(-*e).map(|c| algebra.scalar_poly(c)).map_err(|e| {
                    ExprError::new(format!("coefficient power failed: {e}"), *pos)
                });
            }
            let mut out = algebra.one();
            for _ in 0..*e {
                out = algebra
                    .multiply(&out, &b)
                    .map_err(|e| ExprError::new(format!("product failed: {e}"), *pos))?;
            }
            Ok(out)
        }
    }
}

/// If `p` is a single scalar term (no variables) with an invertible
/// coefficient, returns that coefficient's inverse.
fn scalar_like_inverse(p: &StandardPolynomial) -> Option<LaurentCoefficient> {
    let mut terms = p.terms();
    let (e, c) = terms.next()?;
    if terms.next().is_some() || !e.is_zero() {
        return None;
    }
    c.inv().ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use qpbw_core::catalog;

    fn scope() -> CoeffScope {
        CoeffScope::new(vec!["K".to_string()])
    }

    #[test]
    fn lexes_and_parses_with_positions() {
        let e = parse_expr("q^2*K + 1", 3, 10).unwrap();
        match &e {
            Expr::Add(_, _, pos) => assert_eq!((pos.line, pos.col), (3, 16)),
            other => panic!("unexpected shape {other:?}"),
        }
        let err = parse_expr("q +* K", 1, 1).unwrap_err();
        assert_eq!((err.pos.line, err.pos.col), (1, 4));
        let err = parse_expr("(q + 1", 1, 1).unwrap_err();
        assert!(err.message.contains("unclosed"));
        let err = parse_expr("q @", 1, 1).unwrap_err();
        assert!(err.message.contains('@'));
    }

    #[test]
    fn coefficient_evaluation() {
        let s = scope();
        let e = parse_expr("(q^2 - 1)/q * K^-1", 1, 1).unwrap();
        let v = eval_coefficient(&e, &s).unwrap();
        let expect = LaurentCoefficient::var_pow(1, 0, -1)
            .scale(&Scalar::q_pow(2).sub(&Scalar::one()).div(&Scalar::q()).unwrap());
        assert_eq!(v, expect);

        let bad_expr = parse_expr("1/(K + 1)", 1, 1).unwrap();
        let bad = eval_coefficient(&bad_expr, &s).unwrap_err();
        assert!(bad.message.contains("non-invertible"));
    }

    #[test]
    fn polynomial_evaluation_normalizes() {
        let weyl = catalog::make_quantized_weyl(Scalar::q()).unwrap();
        let e = parse_expr("x2*x1", 1, 1).unwrap();
        let v = eval_polynomial(&e, &weyl).unwrap();
        // x2 x1 = q x1 x2 + 1
        let expect = weyl
            .monomial(&[1, 1], weyl.domain().one().scale(&Scalar::q()))
            .unwrap()
            .add(&weyl.one());
        assert_eq!(v, expect);

        let zero = parse_expr("x1 - x1", 1, 1).unwrap();
        assert!(eval_polynomial(&zero, &weyl).unwrap().is_zero());

        let plane = catalog::quantum_plane();
        let sq = parse_expr("(x1 + x2)^2", 1, 1).unwrap();
        let v = eval_polynomial(&sq, &plane).unwrap();
        // x1^2 + (1+q) x1 x2 + x2^2
        assert_eq!(v.num_terms(), 3);
        let mid = v
            .coefficient(&qpbw_core::ExponentVector::new(vec![1, 1]))
            .unwrap();
        assert_eq!(
            mid.as_scalar().unwrap(),
            Scalar::one().add(&Scalar::q())
        );
    }

    #[test]
    fn unknown_names_are_positioned() {
        let weyl = catalog::make_quantized_weyl(Scalar::q()).unwrap();
        let e = parse_expr("x1*y9", 2, 5).unwrap();
        let err = eval_polynomial(&e, &weyl).unwrap_err();
        assert!(err.message.contains("y9"));
        assert_eq!((err.pos.line, err.pos.col), (2, 8));
    }
}
