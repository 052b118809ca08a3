//! A small language for generating functions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := '-' factor | atom ('^' uint)?
//! atom   := uint | var | '(' expr ')' | func '(' expr ')'
//! var    := 'x' | 'y' | 'a' | 'b'
//! func   := 'sqrt' | 'rev'
//! ```
//!
//! `x` is the series variable; `y`, `a` and `b` generate the coefficient
//! ring. There is no implicit multiplication, and exponents are literal
//! nonnegative integers. Rationals are written with `/`.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::exact::{BiPoly, Polynomial, Rational, Ring};
use crate::series::{PowerSeries, SeriesError};

/// Byte range `[start, end)` in the source text.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X,
    Y,
    A,
    B,
}

impl Var {
    fn from_name(s: &str) -> Option<Var> {
        match s {
            "x" => Some(Var::X),
            "y" => Some(Var::Y),
            "a" => Some(Var::A),
            "b" => Some(Var::B),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Y => "y",
            Var::A => "a",
            Var::B => "b",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    Sqrt,
    Rev,
}

impl Func {
    fn from_name(s: &str) -> Option<Func> {
        match s {
            "sqrt" => Some(Func::Sqrt),
            "rev" => Some(Func::Rev),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Func::Sqrt => "sqrt",
            Func::Rev => "rev",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl BinOp {
    fn symbol(self) -> &'static str {
        match self {
            BinOp::Add => " + ",
            BinOp::Sub => " - ",
            BinOp::Mul => "*",
            BinOp::Div => "/",
        }
    }

    fn precedence(self) -> u8 {
        match self {
            BinOp::Add | BinOp::Sub => 1,
            BinOp::Mul | BinOp::Div => 2,
        }
    }
}

#[derive(Debug, Clone)]
pub enum AstKind {
    Int(BigInt),
    Var(Var),
    Neg(Box<GfAst>),
    Binary(BinOp, Box<GfAst>, Box<GfAst>),
    Pow(Box<GfAst>, u32),
    Call(Func, Box<GfAst>),
}

/// A parsed expression. Equality compares structure and ignores spans.
#[derive(Debug, Clone)]
pub struct GfAst {
    pub kind: AstKind,
    pub span: Span,
}

impl PartialEq for AstKind {
    fn eq(&self, other: &Self) -> bool {
        use AstKind::*;
        match (self, other) {
            (Int(a), Int(b)) => a == b,
            (Var(a), Var(b)) => a == b,
            (Neg(a), Neg(b)) => a == b,
            (Binary(o1, l1, r1), Binary(o2, l2, r2)) => o1 == o2 && l1 == l2 && r1 == r2,
            (Pow(a, e1), Pow(b, e2)) => e1 == e2 && a == b,
            (Call(f1, a), Call(f2, b)) => f1 == f2 && a == b,
            _ => false,
        }
    }
}

impl PartialEq for GfAst {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl GfAst {
    pub fn new(kind: AstKind) -> Self {
        GfAst { kind, span: Span::default() }
    }

    fn precedence(&self) -> u8 {
        match &self.kind {
            AstKind::Binary(op, ..) => op.precedence(),
            AstKind::Neg(_) => 3,
            AstKind::Pow(..) => 4,
            _ => 5,
        }
    }

    /// Ring generators mentioned anywhere in the expression (never `x`).
    pub fn ring_variables(&self) -> BTreeSet<Var> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out.remove(&Var::X);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<Var>) {
        match &self.kind {
            AstKind::Int(_) => {}
            AstKind::Var(v) => {
                out.insert(*v);
            }
            AstKind::Neg(e) | AstKind::Pow(e, _) | AstKind::Call(_, e) => e.collect_vars(out),
            AstKind::Binary(_, l, r) => {
                l.collect_vars(out);
                r.collect_vars(out);
            }
        }
    }
}

impl fmt::Display for GfAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |f: &mut fmt::Formatter<'_>, e: &GfAst, paren: bool| {
            if paren {
                write!(f, "({e})")
            } else {
                write!(f, "{e}")
            }
        };
        match &self.kind {
            AstKind::Int(n) => write!(f, "{n}"),
            AstKind::Var(v) => f.write_str(v.name()),
            AstKind::Neg(e) => {
                f.write_str("-")?;
                wrap(f, e, e.precedence() < 3)
            }
            AstKind::Binary(op, l, r) => {
                let p = op.precedence();
                wrap(f, l, l.precedence() < p)?;
                f.write_str(op.symbol())?;
                wrap(f, r, r.precedence() <= p)
            }
            AstKind::Pow(base, e) => {
                wrap(f, base, base.precedence() < 5)?;
                write!(f, "^{e}")
            }
            AstKind::Call(func, arg) => write!(f, "{}({arg})", func.name()),
        }
    }
}

// ---------------------------------------------------------------------------
// Lexing and parsing

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("non-ASCII input")]
    NonAscii,
    #[error("unexpected character {0:?}")]
    UnexpectedChar(char),
    #[error("unexpected {found}, expected {expected}")]
    UnexpectedToken { found: String, expected: &'static str },
    #[error("unexpected end of input, expected {0}")]
    UnexpectedEnd(&'static str),
    #[error("unclosed '('")]
    UnclosedParen,
    #[error("unmatched ')'")]
    UnmatchedParen,
    #[error("exponent must be a nonnegative integer literal")]
    BadExponent,
    #[error("unknown identifier {0:?}")]
    UnknownIdentifier(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("at offset {offset}: {kind}")]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
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
            Tok::Num(n) => format!("number {n}"),
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

fn lex(input: &str) -> Result<Vec<(Tok, Span)>, ParseError> {
    if let Some(offset) = input.bytes().position(|b| !b.is_ascii()) {
        return Err(ParseError { offset, kind: ParseErrorKind::NonAscii });
    }
    let bytes = input.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        let tok = match c {
            c if c.is_ascii_whitespace() => {
                i += 1;
                continue;
            }
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((
                    Tok::Num(input[start..i].parse().expect("digits")),
                    Span { start, end: i },
                ));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(input[start..i].to_string()), Span { start, end: i }));
                continue;
            }
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => {
                return Err(ParseError {
                    offset: start,
                    kind: ParseErrorKind::UnexpectedChar(other),
                })
            }
        };
        i += 1;
        out.push((tok, Span { start, end: i }));
    }
    out.push((Tok::End, Span { start: input.len(), end: input.len() }));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, Span)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn span(&self) -> Span {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, Span) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, expected: &'static str) -> ParseError {
        let offset = self.span().start;
        let kind = match self.peek() {
            Tok::End => ParseErrorKind::UnexpectedEnd(expected),
            Tok::RParen => ParseErrorKind::UnmatchedParen,
            t => ParseErrorKind::UnexpectedToken { found: t.describe(), expected },
        };
        ParseError { offset, kind }
    }

    fn expr(&mut self) -> Result<GfAst, ParseError> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek() {
                Tok::Plus => BinOp::Add,
                Tok::Minus => BinOp::Sub,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.term()?;
            lhs = binary(op, lhs, rhs);
        }
    }

    fn term(&mut self) -> Result<GfAst, ParseError> {
        let mut lhs = self.factor()?;
        loop {
            let op = match self.peek() {
                Tok::Star => BinOp::Mul,
                Tok::Slash => BinOp::Div,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.factor()?;
            lhs = binary(op, lhs, rhs);
        }
    }

    fn factor(&mut self) -> Result<GfAst, ParseError> {
        if *self.peek() == Tok::Minus {
            let (_, sp) = self.bump();
            let inner = self.factor()?;
            let span = Span { start: sp.start, end: inner.span.end };
            return Ok(GfAst { kind: AstKind::Neg(Box::new(inner)), span });
        }
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let (tok, sp) = self.bump();
        let exp = match tok {
            Tok::Num(n) => n.to_u32(),
            _ => None,
        }
        .ok_or(ParseError { offset: sp.start, kind: ParseErrorKind::BadExponent })?;
        let span = Span { start: base.span.start, end: sp.end };
        Ok(GfAst { kind: AstKind::Pow(Box::new(base), exp), span })
    }

    fn atom(&mut self) -> Result<GfAst, ParseError> {
        let span = self.span();
        match self.peek().clone() {
            Tok::Num(n) => {
                self.bump();
                Ok(GfAst { kind: AstKind::Int(n), span })
            }
            Tok::Ident(name) => {
                if let Some(v) = Var::from_name(&name) {
                    self.bump();
                    return Ok(GfAst { kind: AstKind::Var(v), span });
                }
                let Some(func) = Func::from_name(&name) else {
                    return Err(ParseError {
                        offset: span.start,
                        kind: ParseErrorKind::UnknownIdentifier(name),
                    });
                };
                self.bump();
                if *self.peek() != Tok::LParen {
                    return Err(self.unexpected("'(' after function name"));
                }
                let (arg, end) = self.parenthesized()?;
                Ok(GfAst {
                    kind: AstKind::Call(func, Box::new(arg)),
                    span: Span { start: span.start, end },
                })
            }
            Tok::LParen => {
                let (mut inner, end) = self.parenthesized()?;
                inner.span = Span { start: span.start, end };
                Ok(inner)
            }
            _ => Err(self.unexpected("a number, variable, function or '('")),
        }
    }

    /// Parses `'(' expr ')'`, returning the end offset of the `)`.
    fn parenthesized(&mut self) -> Result<(GfAst, usize), ParseError> {
        let (_, open) = self.bump();
        let inner = self.expr()?;
        match self.peek() {
            Tok::RParen => {
                let (_, close) = self.bump();
                Ok((inner, close.end))
            }
            Tok::End => Err(ParseError { offset: open.start, kind: ParseErrorKind::UnclosedParen }),
            _ => Err(self.unexpected("')'")),
        }
    }
}

fn binary(op: BinOp, lhs: GfAst, rhs: GfAst) -> GfAst {
    let span = Span { start: lhs.span.start, end: rhs.span.end };
    GfAst { kind: AstKind::Binary(op, Box::new(lhs), Box::new(rhs)), span }
}

pub fn parse(input: &str) -> Result<GfAst, ParseError> {
    let mut p = Parser { toks: lex(input)?, pos: 0 };
    let ast = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.unexpected("an operator or end of input"));
    }
    Ok(ast)
}

// ---------------------------------------------------------------------------
// Evaluation

/// Coefficient rings the evaluator can target.
pub trait GfRing: Ring {
    /// The ring element named by `v`, if the ring has it.
    fn generator(v: Var) -> Option<Self>;
    /// Names passed to [`Ring::render`].
    const VARS: &'static [&'static str];
}

impl GfRing for Rational {
    fn generator(_: Var) -> Option<Self> {
        None
    }
    const VARS: &'static [&'static str] = &[];
}

impl GfRing for Polynomial<Rational> {
    fn generator(v: Var) -> Option<Self> {
        (v == Var::Y).then(Polynomial::var)
    }
    const VARS: &'static [&'static str] = &["y"];
}

impl GfRing for BiPoly {
    fn generator(v: Var) -> Option<Self> {
        match v {
            Var::A => Some(Polynomial::constant(Polynomial::var())),
            Var::B => Some(Polynomial::var()),
            _ => None,
        }
    }
    const VARS: &'static [&'static str] = &["a", "b"];
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalErrorKind {
    #[error("variable {} is not available in this coefficient ring", .0.name())]
    UnsupportedVariable(Var),
    #[error("y cannot be mixed with a or b")]
    MixedVariables,
    #[error("division by a series with zero constant term")]
    DivisionByZeroConstant,
    #[error(transparent)]
    Series(#[from] SeriesError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("at offsets {}..{}: {kind}", .span.start, .span.end)]
pub struct EvalError {
    pub span: Span,
    pub kind: EvalErrorKind,
}

/// Evaluate to a series of the given order over `R`.
pub fn eval_ast<R: GfRing>(ast: &GfAst, order: usize) -> Result<PowerSeries<R>, EvalError> {
    let err = |kind: EvalErrorKind| EvalError { span: ast.span, kind };
    let series = |r: Result<PowerSeries<R>, SeriesError>| r.map_err(|e| err(e.into()));
    match &ast.kind {
        AstKind::Int(n) => Ok(PowerSeries::constant(
            R::from_rational(&Rational::from_integer(n.clone())),
            order,
        )),
        AstKind::Var(Var::X) => Ok(PowerSeries::x(order)),
        AstKind::Var(v) => R::generator(*v)
            .map(|g| PowerSeries::constant(g, order))
            .ok_or_else(|| err(EvalErrorKind::UnsupportedVariable(*v))),
        AstKind::Neg(e) => Ok(-eval_ast::<R>(e, order)?),
        AstKind::Pow(e, k) => Ok(eval_ast::<R>(e, order)?.pow(*k)),
        AstKind::Binary(op, l, r) => {
            let lhs = eval_ast::<R>(l, order)?;
            let rhs = eval_ast::<R>(r, order)?;
            match op {
                BinOp::Add => Ok(&lhs + &rhs),
                BinOp::Sub => Ok(&lhs - &rhs),
                BinOp::Mul => Ok(&lhs * &rhs),
                BinOp::Div => divide(lhs, rhs).map_err(err),
            }
        }
        AstKind::Call(Func::Sqrt, e) => series(eval_ast::<R>(e, order)?.sqrt()),
        AstKind::Call(Func::Rev, e) => series(eval_ast::<R>(e, order)?.revert()),
    }
}

/// Division that first cancels a common power of `x`, so that e.g.
/// `(x - x^2)/x` evaluates; each cancelled power costs one order.
fn divide<R: Ring>(
    mut num: PowerSeries<R>,
    mut den: PowerSeries<R>,
) -> Result<PowerSeries<R>, EvalErrorKind> {
    while den.order() > 0 && den.coeff(0).is_zero() {
        if num.order() == 0 || !num.coeff(0).is_zero() || den.valuation().is_none() {
            return Err(EvalErrorKind::DivisionByZeroConstant);
        }
        num = num.shift_div_x()?;
        den = den.shift_div_x()?;
    }
    Ok(num.div(&den)?)
}

/// Which coefficient ring an expression needs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingKind {
    Rational,
    PolyY,
    PolyAB,
}

impl RingKind {
    /// The smallest ring containing every variable of `ast`.
    pub fn for_ast(ast: &GfAst) -> Result<RingKind, EvalError> {
        let vars = ast.ring_variables();
        let has_y = vars.contains(&Var::Y);
        let has_ab = vars.contains(&Var::A) || vars.contains(&Var::B);
        match (has_y, has_ab) {
            (true, true) => Err(EvalError { span: ast.span, kind: EvalErrorKind::MixedVariables }),
            (true, false) => Ok(RingKind::PolyY),
            (false, true) => Ok(RingKind::PolyAB),
            (false, false) => Ok(RingKind::Rational),
        }
    }
}

/// A series over whichever ring an expression was evaluated in.
#[derive(Debug, Clone, PartialEq)]
pub enum AnySeries {
    Rational(PowerSeries<Rational>),
    PolyY(PowerSeries<Polynomial<Rational>>),
    PolyAB(PowerSeries<BiPoly>),
}

impl AnySeries {
    pub fn order(&self) -> usize {
        match self {
            AnySeries::Rational(s) => s.order(),
            AnySeries::PolyY(s) => s.order(),
            AnySeries::PolyAB(s) => s.order(),
        }
    }

    /// Each coefficient rendered as text.
    pub fn rendered_coeffs(&self) -> Vec<String> {
        fn go<R: GfRing>(s: &PowerSeries<R>) -> Vec<String> {
            s.coeffs().iter().map(|c| c.render(R::VARS)).collect()
        }
        match self {
            AnySeries::Rational(s) => go(s),
            AnySeries::PolyY(s) => go(s),
            AnySeries::PolyAB(s) => go(s),
        }
    }
}

pub fn eval_in(ast: &GfAst, order: usize, ring: RingKind) -> Result<AnySeries, EvalError> {
    Ok(match ring {
        RingKind::Rational => AnySeries::Rational(eval_ast(ast, order)?),
        RingKind::PolyY => AnySeries::PolyY(eval_ast(ast, order)?),
        RingKind::PolyAB => AnySeries::PolyAB(eval_ast(ast, order)?),
    })
}

/// Evaluate in the smallest ring that holds the expression's variables.
pub fn eval_auto(ast: &GfAst, order: usize) -> Result<AnySeries, EvalError> {
    eval_in(ast, order, RingKind::for_ast(ast)?)
}
