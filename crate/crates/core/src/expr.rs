//! The expression language: a small precedence parser over one algebra
//! context, the evaluator, and the deterministic human/JSON renderings
//! shared with the command line.
//!
//! Precedence, loosest to tightest: `+ -` < `* ^ |` < unary minus <
//! function call and parentheses; all binary operators associate left.
//! Rational literals are written `3` or `3/2`, and a literal directly
//! followed by a basis token (`3/2 e1e2`) multiplies onto it, which is what
//! makes printed output re-parseable.

use thiserror::Error;

use crate::blade::Blade;
use crate::error::Error as AlgebraError;
use crate::fast::{geometric_product_with, left_contraction_with, wedge_product, Engine};
use crate::form::{QuadraticForm, Signature};
use crate::models::{self, ConformalVector};
use crate::multivector::Multivector;
use crate::scalar::{rat, Rational};
use crate::vector::Vector;

/// One algebra per invocation: the form, the basis token table, the
/// product engine, and the base dimension when the algebra is conformal.
#[derive(Debug, Clone)]
pub struct Context {
    form: QuadraticForm<Rational>,
    names: Vec<String>,
    engine: Engine,
    conformal_base: Option<usize>,
}

impl Context {
    pub fn new(
        form: QuadraticForm<Rational>,
        names: Vec<String>,
        engine: Engine,
        conformal_base: Option<usize>,
    ) -> Self {
        assert_eq!(form.dim(), names.len(), "one token per basis vector");
        Context {
            form,
            names,
            engine,
            conformal_base,
        }
    }

    pub fn from_signature(sig: Signature, engine: Engine) -> crate::error::Result<Self> {
        let form = sig.form::<Rational>()?;
        let names = (1..=form.dim()).map(|i| format!("e{i}")).collect();
        Ok(Context::new(form, names, engine, None))
    }

    pub fn from_preset(name: &str, engine: Engine) -> crate::error::Result<Self> {
        let p = models::preset(name)?;
        Ok(Context::new(
            p.form,
            p.basis_names,
            engine,
            p.conformal_base,
        ))
    }

    /// Arbitrary (possibly non-diagonal) form with default `e1..en` tokens.
    pub fn from_form(form: QuadraticForm<Rational>, engine: Engine) -> Self {
        let names = (1..=form.dim()).map(|i| format!("e{i}")).collect();
        Context::new(form, names, engine, None)
    }

    pub fn dim(&self) -> usize {
        self.form.dim()
    }

    pub fn form(&self) -> &QuadraticForm<Rational> {
        &self.form
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn engine(&self) -> Engine {
        self.engine
    }

    pub fn product(
        &self,
        a: &Multivector<Rational>,
        b: &Multivector<Rational>,
    ) -> crate::error::Result<Multivector<Rational>> {
        geometric_product_with(self.engine, &self.form, a, b)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    /// The geometric product `*`.
    Mul,
    /// The wedge product `^`.
    Wedge,
    /// The left contraction `|`.
    Contract,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    Rev,
    Invol,
    Conj,
    Grade,
    Even,
    Odd,
    /// Scalar part, `grade(x, 0)`.
    Sp,
    /// Versor-norm inverse.
    Inv,
    /// Conformal point embedding.
    Up,
}

impl Func {
    fn from_name(name: &str) -> Option<Func> {
        Some(match name {
            "rev" => Func::Rev,
            "invol" => Func::Invol,
            "conj" => Func::Conj,
            "grade" => Func::Grade,
            "even" => Func::Even,
            "odd" => Func::Odd,
            "sp" => Func::Sp,
            "inv" => Func::Inv,
            "up" => Func::Up,
            _ => return None,
        })
    }

    fn name(&self) -> &'static str {
        match self {
            Func::Rev => "rev",
            Func::Invol => "invol",
            Func::Conj => "conj",
            Func::Grade => "grade",
            Func::Even => "even",
            Func::Odd => "odd",
            Func::Sp => "sp",
            Func::Inv => "inv",
            Func::Up => "up",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Literal(Rational),
    /// An identifier to be resolved against the basis token table.
    Basis(String),
    Neg(Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
    Call(Func, Vec<Expr>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("parse error at position {pos}: unexpected character '{ch}'")]
    UnexpectedChar { pos: usize, ch: char },
    #[error("parse error at position {pos}: invalid rational literal \"{text}\"")]
    BadLiteral { pos: usize, text: String },
    #[error("parse error at position {pos}: expected {expected}, found {found}")]
    Unexpected {
        pos: usize,
        expected: &'static str,
        found: String,
    },
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Rational),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Pipe,
    LParen,
    RParen,
    Comma,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Num(_) => "a number".to_string(),
            Tok::Ident(s) => format!("'{s}'"),
            Tok::Plus => "'+'".to_string(),
            Tok::Minus => "'-'".to_string(),
            Tok::Star => "'*'".to_string(),
            Tok::Caret => "'^'".to_string(),
            Tok::Pipe => "'|'".to_string(),
            Tok::LParen => "'('".to_string(),
            Tok::RParen => "')'".to_string(),
            Tok::Comma => "','".to_string(),
        }
    }
}

/// Tokens tagged with their 1-based starting position.
fn lex(source: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = source.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let pos = i + 1;
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '^' => Some(Tok::Caret),
            '|' => Some(Tok::Pipe),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            ',' => Some(Tok::Comma),
            _ => None,
        };
        if let Some(tok) = tok {
            out.push((tok, pos));
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let numer: String = chars[start..i].iter().collect();
            let mut denom = None;
            if i < chars.len()
                && chars[i] == '/'
                && i + 1 < chars.len()
                && chars[i + 1].is_ascii_digit()
            {
                i += 1;
                let dstart = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                denom = Some(chars[dstart..i].iter().collect::<String>());
            }
            let text: String = chars[start..i].iter().collect();
            let numer: num_bigint::BigInt = numer.parse().expect("digits");
            let denom: num_bigint::BigInt = match denom {
                Some(d) => d.parse().expect("digits"),
                None => 1.into(),
            };
            if num_traits::Zero::is_zero(&denom) {
                return Err(ParseError::BadLiteral { pos, text });
            }
            out.push((Tok::Num(Rational::new(numer, denom)), pos));
            continue;
        }
        if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric()) {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), pos));
            continue;
        }
        return Err(ParseError::UnexpectedChar { pos, ch: c });
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
    end_pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(t, _)| t)
    }

    fn pos(&self) -> usize {
        self.toks
            .get(self.at)
            .map(|(_, p)| *p)
            .unwrap_or(self.end_pos)
    }

    fn found(&self) -> String {
        self.peek()
            .map(Tok::describe)
            .unwrap_or_else(|| "end of input".to_string())
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|(t, _)| t.clone());
        self.at += 1;
        t
    }

    fn expect(&mut self, tok: &Tok, expected: &'static str) -> Result<(), ParseError> {
        if self.peek() == Some(tok) {
            self.at += 1;
            Ok(())
        } else {
            Err(self.error(expected))
        }
    }

    fn error(&self, expected: &'static str) -> ParseError {
        ParseError::Unexpected {
            pos: self.pos(),
            expected,
            found: self.found(),
        }
    }

    // sum := product (('+' | '-') product)*
    fn sum(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.product()?;
        loop {
            let op = match self.peek() {
                Some(Tok::Plus) => BinOp::Add,
                Some(Tok::Minus) => BinOp::Sub,
                _ => break,
            };
            self.at += 1;
            let rhs = self.product()?;
            lhs = Expr::Binary(op, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    // product := unary (('*' | '^' | '|') unary)*
    fn product(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            let op = match self.peek() {
                Some(Tok::Star) => BinOp::Mul,
                Some(Tok::Caret) => BinOp::Wedge,
                Some(Tok::Pipe) => BinOp::Contract,
                _ => break,
            };
            self.at += 1;
            let rhs = self.unary()?;
            lhs = Expr::Binary(op, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    // unary := '-' unary | atom
    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.peek() == Some(&Tok::Minus) {
            self.at += 1;
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.atom()
    }

    // atom := number basis? | ident | ident '(' args ')' | '(' sum ')'
    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.at += 1;
                // juxtaposed coefficient, e.g. "3/2 e1e2"
                if let Some(Tok::Ident(name)) = self.peek().cloned() {
                    if Func::from_name(&name).is_none() {
                        self.at += 1;
                        return Ok(Expr::Binary(
                            BinOp::Mul,
                            Box::new(Expr::Literal(n)),
                            Box::new(Expr::Basis(name)),
                        ));
                    }
                }
                Ok(Expr::Literal(n))
            }
            Some(Tok::Ident(name)) => {
                self.at += 1;
                if self.peek() == Some(&Tok::LParen) {
                    if let Some(func) = Func::from_name(&name) {
                        self.at += 1;
                        let mut args = Vec::new();
                        if self.peek() == Some(&Tok::RParen) {
                            self.at += 1;
                        } else {
                            loop {
                                args.push(self.sum()?);
                                match self.bump() {
                                    Some(Tok::Comma) => continue,
                                    Some(Tok::RParen) => break,
                                    _ => {
                                        self.at -= 1;
                                        return Err(self.error("',' or ')'"));
                                    }
                                }
                            }
                        }
                        return Ok(Expr::Call(func, args));
                    }
                }
                Ok(Expr::Basis(name))
            }
            Some(Tok::LParen) => {
                self.at += 1;
                let inner = self.sum()?;
                self.expect(&Tok::RParen, "')'")?;
                Ok(inner)
            }
            _ => Err(self.error("a number, a basis token, '-', or '('")),
        }
    }
}

/// Parse a full expression.
pub fn parse(source: &str) -> Result<Expr, ParseError> {
    let toks = lex(source)?;
    let end_pos = source.chars().count() + 1;
    let mut p = Parser {
        toks,
        at: 0,
        end_pos,
    };
    let expr = p.sum()?;
    if p.peek().is_some() {
        return Err(p.error("an operator or end of input"));
    }
    Ok(expr)
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EvalError {
    #[error("unknown basis token \"{token}\" (algebra basis: {basis})")]
    UnknownBasisToken { token: String, basis: String },
    #[error("{func}() takes {expected} argument(s), found {found}")]
    Arity {
        func: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("grade() requires a non-negative integer grade")]
    GradeIndex,
    #[error("up() requires a conformal preset (cga2, cga3)")]
    NotConformal,
    #[error("up() takes {expected} coordinates for this algebra, found {found}")]
    UpArity { expected: usize, found: usize },
    #[error("up() arguments must be scalars")]
    UpScalarArg,
    #[error("cayley table limited to dimension 8, got {dim}; use the library API instead")]
    TableTooLarge { dim: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

impl EvalError {
    /// Internal assertion failures are reported differently by the CLI.
    pub fn is_internal(&self) -> bool {
        matches!(self, EvalError::Algebra(AlgebraError::Internal(_)))
    }
}

type EvalResult = Result<Multivector<Rational>, EvalError>;

/// Resolve an identifier as a product of basis tokens, longest match
/// first: `e1e2` is `e1 * e2`, and in a conformal algebra `e1n0` is
/// `e1 * n0`.
fn resolve_basis(ctx: &Context, token: &str) -> EvalResult {
    let mut acc = Multivector::one(ctx.dim());
    let mut rest = token;
    while !rest.is_empty() {
        let hit = ctx
            .names
            .iter()
            .enumerate()
            .filter(|(_, n)| rest.starts_with(n.as_str()))
            .max_by_key(|(_, n)| n.len());
        let (i, name) = hit.ok_or_else(|| EvalError::UnknownBasisToken {
            token: token.to_string(),
            basis: ctx.names.join(", "),
        })?;
        let factor = Multivector::iota(&Vector::basis(ctx.dim(), i));
        acc = ctx.product(&acc, &factor)?;
        rest = &rest[name.len()..];
    }
    Ok(acc)
}

fn expect_arity(func: Func, args: &[Expr], expected: usize) -> Result<(), EvalError> {
    if args.len() != expected {
        return Err(EvalError::Arity {
            func: func.name(),
            expected,
            found: args.len(),
        });
    }
    Ok(())
}

/// Evaluate an expression in the context's algebra.
pub fn eval(expr: &Expr, ctx: &Context) -> EvalResult {
    match expr {
        Expr::Literal(n) => Ok(Multivector::scalar(ctx.dim(), n.clone())),
        Expr::Basis(token) => resolve_basis(ctx, token),
        Expr::Neg(inner) => Ok(eval(inner, ctx)?.neg()),
        Expr::Binary(op, lhs, rhs) => {
            let a = eval(lhs, ctx)?;
            let b = eval(rhs, ctx)?;
            let out = match op {
                BinOp::Add => a.try_add(&b)?,
                BinOp::Sub => a.try_sub(&b)?,
                BinOp::Mul => ctx.product(&a, &b)?,
                BinOp::Wedge => wedge_product(&a, &b)?,
                BinOp::Contract => left_contraction_with(ctx.engine, &ctx.form, &a, &b)?,
            };
            Ok(out)
        }
        Expr::Call(func, args) => eval_call(*func, args, ctx),
    }
}

fn eval_call(func: Func, args: &[Expr], ctx: &Context) -> EvalResult {
    match func {
        Func::Rev => {
            expect_arity(func, args, 1)?;
            Ok(eval(&args[0], ctx)?.reverse())
        }
        Func::Invol => {
            expect_arity(func, args, 1)?;
            Ok(eval(&args[0], ctx)?.involute())
        }
        Func::Conj => {
            expect_arity(func, args, 1)?;
            Ok(eval(&args[0], ctx)?.clifford_conjugate())
        }
        Func::Even => {
            expect_arity(func, args, 1)?;
            Ok(eval(&args[0], ctx)?.even_odd_parts().0)
        }
        Func::Odd => {
            expect_arity(func, args, 1)?;
            Ok(eval(&args[0], ctx)?.even_odd_parts().1)
        }
        Func::Sp => {
            expect_arity(func, args, 1)?;
            Ok(eval(&args[0], ctx)?.grade_project(0))
        }
        Func::Grade => {
            expect_arity(func, args, 2)?;
            let x = eval(&args[0], ctx)?;
            let k = eval(&args[1], ctx)?
                .scalar_part_only()
                .ok_or(EvalError::GradeIndex)?;
            if !k.is_integer() || k.numer() < &num_bigint::BigInt::from(0) {
                return Err(EvalError::GradeIndex);
            }
            let k = usize::try_from(k.to_integer()).map_err(|_| EvalError::GradeIndex)?;
            Ok(x.grade_project(k))
        }
        Func::Inv => {
            expect_arity(func, args, 1)?;
            let x = eval(&args[0], ctx)?;
            let rev = x.reverse();
            let norm = ctx
                .product(&x, &rev)?
                .scalar_part_only()
                .ok_or(AlgebraError::NotInvertible)?;
            if num_traits::Zero::is_zero(&norm) {
                return Err(EvalError::Algebra(AlgebraError::NotInvertible));
            }
            Ok(rev.scale(&(rat(1, 1) / norm)))
        }
        Func::Up => {
            let base = ctx.conformal_base.ok_or(EvalError::NotConformal)?;
            if args.len() != base {
                return Err(EvalError::UpArity {
                    expected: base,
                    found: args.len(),
                });
            }
            let mut coords = Vec::with_capacity(base);
            for arg in args {
                coords.push(
                    eval(arg, ctx)?
                        .scalar_part_only()
                        .ok_or(EvalError::UpScalarArg)?,
                );
            }
            let point: ConformalVector<Rational> = models::up(&Vector::new(coords));
            Ok(Multivector::iota(&point.to_vector()))
        }
    }
}

/// Human rendering: terms in (grade, bit pattern) order, coefficients in
/// lowest terms, e.g. `1 - 3/2 e1e2`; the zero multivector prints `0`.
pub fn render_human(mv: &Multivector<Rational>, names: &[String]) -> String {
    mv.render_with(|b| b.label(names))
}

/// Machine rendering: `{"blades": {"1": "1", "e1e2": "-3/2"}}`, keys in
/// the same (grade, bit pattern) order.
pub fn render_json(mv: &Multivector<Rational>, names: &[String]) -> String {
    let mut out = String::from("{\"blades\": {");
    for (i, (blade, coeff)) in mv.terms().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        out.push_str(&format!("\"{}\": \"{}\"", blade.label(names), coeff));
    }
    out.push_str("}}");
    out
}

/// All blades of the context's algebra in (grade, bit pattern) order.
pub fn basis_blades(dim: usize) -> Vec<Blade> {
    let mut blades: Vec<Blade> = (0..(1u64 << dim)).map(Blade::from_bits).collect();
    blades.sort();
    blades
}

/// The full blade-by-blade product table, for printing.
pub fn cayley_table(ctx: &Context) -> Result<Vec<Vec<Multivector<Rational>>>, EvalError> {
    if ctx.dim() > 8 {
        return Err(EvalError::TableTooLarge { dim: ctx.dim() });
    }
    let blades = basis_blades(ctx.dim());
    let mut rows = Vec::with_capacity(blades.len());
    for a in &blades {
        let ma = Multivector::blade(ctx.dim(), *a, rat(1, 1)).expect("fits");
        let mut row = Vec::with_capacity(blades.len());
        for b in &blades {
            let mb = Multivector::blade(ctx.dim(), *b, rat(1, 1)).expect("fits");
            row.push(ctx.product(&ma, &mb)?);
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Aligned human table: header row and column of blade labels, cells
/// right-aligned, separated by ` | `.
pub fn render_table_human(ctx: &Context) -> Result<String, EvalError> {
    let blades = basis_blades(ctx.dim());
    let labels: Vec<String> = blades.iter().map(|b| b.label(&ctx.names)).collect();
    let table = cayley_table(ctx)?;
    let cells: Vec<Vec<String>> = table
        .iter()
        .map(|row| row.iter().map(|mv| render_human(mv, &ctx.names)).collect())
        .collect();

    let label_width = labels.iter().map(String::len).max().unwrap_or(1);
    let col_widths: Vec<usize> = (0..labels.len())
        .map(|j| {
            cells
                .iter()
                .map(|row| row[j].len())
                .chain(std::iter::once(labels[j].len()))
                .max()
                .unwrap_or(1)
        })
        .collect();

    let mut out = String::new();
    out.push_str(&" ".repeat(label_width));
    for (j, label) in labels.iter().enumerate() {
        out.push_str(" | ");
        out.push_str(&format!("{label:>width$}", width = col_widths[j]));
    }
    out.push('\n');
    for (i, row) in cells.iter().enumerate() {
        out.push_str(&format!("{:>width$}", labels[i], width = label_width));
        for (j, cell) in row.iter().enumerate() {
            out.push_str(" | ");
            out.push_str(&format!("{cell:>width$}", width = col_widths[j]));
        }
        out.push('\n');
    }
    Ok(out)
}

/// Machine table: `{"basis": [...], "products": [[...], ...]}` with cells
/// rendered as in the human format.
pub fn render_table_json(ctx: &Context) -> Result<String, EvalError> {
    let blades = basis_blades(ctx.dim());
    let labels: Vec<String> = blades.iter().map(|b| b.label(&ctx.names)).collect();
    let table = cayley_table(ctx)?;
    let mut out = String::from("{\"basis\": [");
    for (i, label) in labels.iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        out.push_str(&format!("\"{label}\""));
    }
    out.push_str("], \"products\": [");
    for (i, row) in table.iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        out.push('[');
        for (j, mv) in row.iter().enumerate() {
            if j > 0 {
                out.push_str(", ");
            }
            out.push_str(&format!("\"{}\"", render_human(mv, &ctx.names)));
        }
        out.push(']');
    }
    out.push_str("]}");
    Ok(out)
}
