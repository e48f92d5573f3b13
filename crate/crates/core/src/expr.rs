//! The series expression language.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := '-' factor | atom ('^' '-'? int)?
//! atom   := int | 's' | 'T' | name | name '(' args ')' | '(' expr ')'
//! args   := expr ((';' | ',') expr)*
//! ```
//!
//! Constructors: `rat(A; F)`, `alg(P; seed...)`, `grandi`, `geom(a)`,
//! `inv(e)`, `shiftl(e, n)`, `prepend(e; F, n)`. Rationals are written
//! `p/q`. `T` may only appear in the first argument of `alg`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::algseries::{self, AlgebraicSeries};
use crate::annpoly::AnnPoly;
use crate::closure;
use crate::error::{Error, Result};
use crate::poly::SigmaPoly;
use crate::scalar::{Field, Scalar};
use crate::series::{Series, DEFAULT_ORDER};

/// Evaluation settings shared by the library entry points and the CLI.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Config {
    pub order: usize,
    pub field: Field,
}

impl Default for Config {
    fn default() -> Self {
        Config { order: DEFAULT_ORDER, field: Field::Rationals }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Expr {
    Num(BigRational),
    /// `s` or `T`.
    Var(char),
    Neg(Box<Expr>),
    Bin(BinOp, Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
    /// Bare names such as `grandi` are calls with no arguments.
    Call(String, Vec<Expr>),
}

impl Expr {
    fn precedence(&self) -> u8 {
        match self {
            Expr::Bin(BinOp::Add | BinOp::Sub, ..) => 1,
            Expr::Bin(BinOp::Mul | BinOp::Div, ..) => 2,
            Expr::Neg(_) => 3,
            Expr::Pow(..) => 4,
            Expr::Num(q) if !q.is_integer() => 2,
            _ => 5,
        }
    }

    fn render(&self, min: u8, out: &mut String) {
        let wrap = self.precedence() < min;
        if wrap {
            out.push('(');
        }
        match self {
            Expr::Num(q) => {
                if q.is_integer() {
                    out.push_str(&q.numer().to_string());
                } else {
                    out.push_str(&format!("{}/{}", q.numer(), q.denom()));
                }
            }
            Expr::Var(c) => out.push(*c),
            Expr::Neg(x) => {
                out.push('-');
                x.render(3, out);
            }
            Expr::Bin(op, l, r) => {
                let (sym, lmin, rmin) = match op {
                    BinOp::Add => ('+', 1, 2),
                    BinOp::Sub => ('-', 1, 2),
                    BinOp::Mul => ('*', 2, 3),
                    BinOp::Div => ('/', 2, 3),
                };
                l.render(lmin, out);
                out.push(sym);
                r.render(rmin, out);
            }
            Expr::Pow(x, k) => {
                x.render(5, out);
                out.push_str(&format!("^{k}"));
            }
            Expr::Call(name, args) => {
                out.push_str(name);
                if !args.is_empty() {
                    out.push('(');
                    for (i, a) in args.iter().enumerate() {
                        if i > 0 {
                            out.push_str("; ");
                        }
                        a.render(0, out);
                    }
                    out.push(')');
                }
            }
        }
        if wrap {
            out.push(')');
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.render(0, &mut s);
        f.write_str(&s)
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
    End,
}

struct Lexer {
    toks: Vec<(Tok, usize, usize)>,
    pos: usize,
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax { line, column, message: message.into() }
}

impl Lexer {
    fn new(text: &str) -> Result<Self> {
        let mut toks = Vec::new();
        let chars: Vec<char> = text.chars().collect();
        let (mut line, mut col) = (1, 1);
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let (l0, c0) = (line, col);
            if c == '\n' {
                line += 1;
                col = 1;
                i += 1;
                continue;
            }
            if c.is_whitespace() {
                col += 1;
                i += 1;
                continue;
            }
            if c.is_ascii_digit() {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                col += i - start;
                toks.push((Tok::Int(digits.parse().expect("digits")), l0, c0));
                continue;
            }
            if c.is_ascii_alphabetic() || c == '_' {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                col += i - start;
                toks.push((Tok::Ident(chars[start..i].iter().collect()), l0, c0));
                continue;
            }
            if "+-*/^();,".contains(c) {
                toks.push((Tok::Sym(c), l0, c0));
                col += 1;
                i += 1;
                continue;
            }
            return Err(syntax(l0, c0, format!("unexpected character `{c}`")));
        }
        toks.push((Tok::End, line, col));
        Ok(Lexer { toks, pos: 0 })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn here(&self) -> (usize, usize) {
        let (_, l, c) = self.toks[self.pos];
        (l, c)
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, message: impl Into<String>) -> Error {
        let (l, c) = self.here();
        syntax(l, c, message)
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            Ok(())
        } else {
            Err(self.error(format!("expected `{c}`")))
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek() {
                Tok::Sym('+') => BinOp::Add,
                Tok::Sym('-') => BinOp::Sub,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.term()?;
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.factor()?;
        loop {
            let op = match self.peek() {
                Tok::Sym('*') => BinOp::Mul,
                Tok::Sym('/') => BinOp::Div,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.factor()?;
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn factor(&mut self) -> Result<Expr> {
        if *self.peek() == Tok::Sym('-') {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        let base = self.atom()?;
        if *self.peek() != Tok::Sym('^') {
            return Ok(base);
        }
        self.bump();
        let negative = *self.peek() == Tok::Sym('-');
        if negative {
            self.bump();
        }
        let (l, c) = self.here();
        match self.bump() {
            Tok::Int(k) => {
                let k = k.to_i64().filter(|k| *k <= 1 << 16).ok_or_else(|| syntax(l, c, "exponent too large"))?;
                Ok(Expr::Pow(Box::new(base), if negative { -k } else { k }))
            }
            _ => Err(syntax(l, c, "expected an integer exponent")),
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        let (l, c) = self.here();
        match self.bump() {
            Tok::Int(n) => Ok(Expr::Num(BigRational::from_integer(n))),
            Tok::Sym('(') => {
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Tok::Ident(name) if name == "s" || name == "T" => Ok(Expr::Var(name.chars().next().expect("nonempty"))),
            Tok::Ident(name) => {
                let mut args = Vec::new();
                if *self.peek() == Tok::Sym('(') {
                    self.bump();
                    if *self.peek() != Tok::Sym(')') {
                        args.push(self.expr()?);
                        while matches!(self.peek(), Tok::Sym(';') | Tok::Sym(',')) {
                            self.bump();
                            args.push(self.expr()?);
                        }
                    }
                    self.expect(')')?;
                }
                Ok(Expr::Call(name, args))
            }
            Tok::End => Err(syntax(l, c, "unexpected end of input")),
            t => Err(syntax(l, c, format!("unexpected token {}", describe(&t)))),
        }
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Int(n) => format!("`{n}`"),
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Sym(c) => format!("`{c}`"),
        Tok::End => "end of input".to_string(),
    }
}

/// Parses a complete expression.
pub fn parse(text: &str) -> Result<Expr> {
    let mut lx = Lexer::new(text)?;
    let e = lx.expr()?;
    if *lx.peek() != Tok::End {
        return Err(lx.error(format!("unexpected token {}", describe(lx.peek()))));
    }
    Ok(e)
}

/// Intermediate value: exact polynomials stay polynomials as long as possible.
#[derive(Clone, Debug)]
enum Value {
    Poly(SigmaPoly),
    Alg(AlgebraicSeries),
}

fn eval_err(msg: impl Into<String>) -> Error {
    Error::Eval(msg.into())
}

struct Evaluator {
    cfg: Config,
}

impl Evaluator {
    fn field(&self) -> Field {
        self.cfg.field
    }

    fn scalar(&self, q: &BigRational) -> Result<Scalar> {
        self.field().from_rational(q)
    }

    fn poly_series(&self, a: &SigmaPoly) -> Result<AlgebraicSeries> {
        let ann = AnnPoly::linear(&SigmaPoly::one(self.field()), a);
        algseries::from_expansion(&ann, Series::from_poly(a, self.cfg.order))
    }

    fn rational(&self, a: &SigmaPoly, f: &SigmaPoly) -> Result<AlgebraicSeries> {
        let x = Series::from_rational(a, f, self.cfg.order)?;
        algseries::from_expansion(&AnnPoly::linear(f, a), x)
    }

    fn to_alg(&self, v: Value) -> Result<AlgebraicSeries> {
        match v {
            Value::Poly(p) => self.poly_series(&p),
            Value::Alg(a) => Ok(a),
        }
    }

    fn eval(&self, e: &Expr) -> Result<Value> {
        match e {
            Expr::Num(q) => Ok(Value::Poly(SigmaPoly::constant(self.scalar(q)?))),
            Expr::Var('s') => Ok(Value::Poly(SigmaPoly::var(self.field()))),
            Expr::Var(c) => Err(eval_err(format!("`{c}` may only appear inside alg(...)"))),
            Expr::Neg(x) => match self.eval(x)? {
                Value::Poly(p) => Ok(Value::Poly(-&p)),
                Value::Alg(a) => Ok(Value::Alg(closure::ann_negate(&a)?)),
            },
            Expr::Bin(op, l, r) => {
                let (l, r) = (self.eval(l)?, self.eval(r)?);
                self.binary(*op, l, r)
            }
            Expr::Pow(x, k) => self.power(self.eval(x)?, *k),
            Expr::Call(name, args) => self.call(name, args),
        }
    }

    fn binary(&self, op: BinOp, l: Value, r: Value) -> Result<Value> {
        use Value::*;
        match (op, l, r) {
            (BinOp::Add, Poly(a), Poly(b)) => Ok(Poly(&a + &b)),
            (BinOp::Sub, Poly(a), Poly(b)) => Ok(Poly(&a - &b)),
            (BinOp::Mul, Poly(a), Poly(b)) => Ok(Poly(&a * &b)),
            (BinOp::Div, Poly(a), Poly(b)) => {
                if b.is_zero() {
                    return Err(eval_err("division by zero"));
                }
                if b.is_constant() {
                    let inv = b.coeff(0).inv().expect("nonzero");
                    return Ok(Poly(a.scale(&inv)));
                }
                Ok(Alg(self.rational(&a, &b)?))
            }
            (BinOp::Add, Poly(a), Alg(x)) | (BinOp::Add, Alg(x), Poly(a)) => Ok(Alg(closure::ann_tail_right(&x, &a, 0)?)),
            (BinOp::Sub, Alg(x), Poly(a)) => Ok(Alg(closure::ann_tail_right(&x, &-&a, 0)?)),
            (BinOp::Sub, Poly(a), Alg(x)) => Ok(Alg(closure::ann_tail_right(&closure::ann_negate(&x)?, &a, 0)?)),
            (BinOp::Mul, Poly(a), Alg(x)) | (BinOp::Mul, Alg(x), Poly(a)) if a.is_constant() => {
                if a.is_zero() {
                    return Ok(Poly(a));
                }
                Ok(Alg(closure::ann_scale(&x, &a.coeff(0))?))
            }
            (BinOp::Div, Alg(x), Poly(a)) if a.is_constant() => {
                let inv = a.coeff(0).inv().ok_or_else(|| eval_err("division by zero"))?;
                Ok(Alg(closure::ann_scale(&x, &inv)?))
            }
            (BinOp::Add, l, r) => Ok(Alg(closure::ann_sum(&self.to_alg(l)?, &self.to_alg(r)?)?)),
            (BinOp::Sub, l, r) => Ok(Alg(closure::ann_difference(&self.to_alg(l)?, &self.to_alg(r)?)?)),
            (BinOp::Mul, l, r) => Ok(Alg(closure::ann_product(&self.to_alg(l)?, &self.to_alg(r)?)?)),
            (BinOp::Div, l, r) => {
                let inv = self.inverse(r)?;
                let l = self.to_alg(l)?;
                Ok(Alg(closure::ann_product(&l, &inv)?))
            }
        }
    }

    fn inverse(&self, v: Value) -> Result<AlgebraicSeries> {
        match v {
            Value::Poly(p) => self.rational(&SigmaPoly::one(self.field()), &p),
            Value::Alg(a) => closure::ann_inverse(&a),
        }
    }

    fn power(&self, v: Value, k: i64) -> Result<Value> {
        if k < 0 {
            let inv = self.inverse(v)?;
            return self.power(Value::Alg(inv), -k);
        }
        match v {
            Value::Poly(p) => Ok(Value::Poly(p.pow(k as u32))),
            Value::Alg(a) => {
                if k == 0 {
                    return Ok(Value::Poly(SigmaPoly::one(self.field())));
                }
                let mut acc = a.clone();
                for _ in 1..k {
                    acc = closure::ann_product(&acc, &a)?;
                }
                Ok(Value::Alg(acc))
            }
        }
    }

    fn poly_arg(&self, e: &Expr, what: &str) -> Result<SigmaPoly> {
        match self.eval(e)? {
            Value::Poly(p) => Ok(p),
            Value::Alg(_) => Err(eval_err(format!("{what} must be a polynomial in s"))),
        }
    }

    fn count_arg(&self, e: &Expr) -> Result<usize> {
        match e {
            Expr::Num(q) if q.is_integer() && !q.is_negative() => {
                q.to_integer().to_usize().ok_or_else(|| eval_err("count too large"))
            }
            _ => Err(eval_err(format!("expected a nonnegative integer, found `{e}`"))),
        }
    }

    fn arity(&self, name: &str, args: &[Expr], n: usize) -> Result<()> {
        if args.len() != n {
            return Err(eval_err(format!("{name} takes {n} argument(s), found {}", args.len())));
        }
        Ok(())
    }

    fn call(&self, name: &str, args: &[Expr]) -> Result<Value> {
        let field = self.field();
        match name {
            "rat" => {
                self.arity(name, args, 2)?;
                let a = self.poly_arg(&args[0], "numerator")?;
                let f = self.poly_arg(&args[1], "denominator")?;
                Ok(Value::Alg(self.rational(&a, &f)?))
            }
            "alg" => {
                if args.len() < 2 {
                    return Err(eval_err("alg takes a polynomial and at least one seed coefficient"));
                }
                let p = ann_from_expr(&args[0], field)?;
                let seed: Vec<Scalar> = args[1..].iter().map(|e| scalar_from_expr(e, field)).collect::<Result<_>>()?;
                let seed = Series::new(field, seed);
                Ok(Value::Alg(algseries::make_algebraic(&p, &seed, self.cfg.order)?))
            }
            "grandi" => {
                self.arity(name, args, 0)?;
                Ok(Value::Alg(self.rational(&SigmaPoly::one(field), &SigmaPoly::from_i64(field, &[1, 1]))?))
            }
            "geom" => {
                self.arity(name, args, 1)?;
                let a = scalar_from_expr(&args[0], field)?;
                let f = SigmaPoly::new(field, vec![field.one(), -&a]);
                Ok(Value::Alg(self.rational(&SigmaPoly::one(field), &f)?))
            }
            "inv" => {
                self.arity(name, args, 1)?;
                Ok(Value::Alg(self.inverse(self.eval(&args[0])?)?))
            }
            "shiftl" => {
                self.arity(name, args, 2)?;
                let n = self.count_arg(&args[1])?;
                match self.eval(&args[0])? {
                    Value::Poly(p) => {
                        let tail = p.coeffs().get(n..).map(<[Scalar]>::to_vec).unwrap_or_default();
                        Ok(Value::Poly(SigmaPoly::new(field, tail)))
                    }
                    Value::Alg(a) => Ok(Value::Alg(closure::ann_tail_left(&a, n)?)),
                }
            }
            "prepend" => {
                self.arity(name, args, 3)?;
                let head = self.poly_arg(&args[1], "head")?;
                let n = self.count_arg(&args[2])?;
                if head.degree().is_some_and(|d| d >= n) {
                    return Err(eval_err("prepend head must have degree below the shift"));
                }
                match self.eval(&args[0])? {
                    Value::Poly(p) => Ok(Value::Poly(&head + &p.shift_up(n))),
                    Value::Alg(a) => Ok(Value::Alg(closure::ann_tail_right(&a, &head, n)?)),
                }
            }
            _ => Err(eval_err(format!("unknown function `{name}`"))),
        }
    }
}

/// Evaluates a polynomial in `s` and `T`; division only by nonzero constants.
pub fn ann_from_expr(e: &Expr, field: Field) -> Result<AnnPoly> {
    match e {
        Expr::Num(q) => Ok(AnnPoly::from_scalar(field.from_rational(q)?)),
        Expr::Var('s') => Ok(AnnPoly::from_sigma(SigmaPoly::var(field))),
        Expr::Var(_) => Ok(AnnPoly::t(field)),
        Expr::Neg(x) => Ok(-&ann_from_expr(x, field)?),
        Expr::Bin(op, l, r) => {
            let (a, b) = (ann_from_expr(l, field)?, ann_from_expr(r, field)?);
            match op {
                BinOp::Add => Ok(&a + &b),
                BinOp::Sub => Ok(&a - &b),
                BinOp::Mul => Ok(&a * &b),
                BinOp::Div => {
                    let c = match b.coeffs() {
                        [c] if c.is_constant() && !c.is_zero() => c.coeff(0),
                        _ => return Err(eval_err("polynomials may only be divided by nonzero constants")),
                    };
                    Ok(a.scale(&c.inv().expect("nonzero")))
                }
            }
        }
        Expr::Pow(x, k) if *k >= 0 => Ok(ann_from_expr(x, field)?.pow(*k as u32)),
        Expr::Pow(..) => Err(eval_err("negative powers are not polynomials")),
        Expr::Call(name, _) => Err(eval_err(format!("`{name}` is not allowed in a polynomial"))),
    }
}

/// Evaluates a constant expression such as `-3/4`.
pub fn scalar_from_expr(e: &Expr, field: Field) -> Result<Scalar> {
    let p = ann_from_expr(e, field)?;
    match p.coeffs() {
        [] => Ok(field.zero()),
        [c] if c.is_constant() => Ok(c.coeff(0)),
        _ => Err(eval_err(format!("expected a constant, found `{e}`"))),
    }
}

/// Parses text such as `(1+s)*T - 1` into an annihilator.
pub fn parse_annpoly(text: &str, field: Field) -> Result<AnnPoly> {
    ann_from_expr(&parse(text)?, field)
}

/// Parses a rational constant such as `1/2` or `-3`.
pub fn parse_scalar(text: &str, field: Field) -> Result<Scalar> {
    scalar_from_expr(&parse(text)?, field)
}

pub fn evaluate(e: &Expr, cfg: &Config) -> Result<AlgebraicSeries> {
    let ev = Evaluator { cfg: *cfg };
    let v = ev.eval(e)?;
    ev.to_alg(v)
}

pub fn evaluate_str(text: &str, cfg: &Config) -> Result<AlgebraicSeries> {
    evaluate(&parse(text)?, cfg)
}

/// Rational from numerator and denominator, for building literals in code.
pub fn ratio(n: i64, d: i64) -> BigRational {
    if d.is_zero() {
        panic!("zero denominator");
    }
    BigRational::new(n.into(), d.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(order: usize) -> Config {
        Config { order, ..Config::default() }
    }

    #[test]
    fn parse_examples() {
        let e = parse("rat(1-s; 1-s^2)").unwrap();
        assert_eq!(e.to_string(), "rat(1-s; 1-s^2)");
        let e = parse("alg(T^2-(4-s); 2)").unwrap();
        assert_eq!(e.to_string(), "alg(T^2-(4-s); 2)");
        let e = parse("grandi * grandi").unwrap();
        assert!(matches!(e, Expr::Bin(BinOp::Mul, _, _)));
    }

    #[test]
    fn parse_errors_have_positions() {
        match parse("rat(1-s;\n  1-s^)") {
            Err(Error::Syntax { line, column, .. }) => assert_eq!((line, column), (2, 7)),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse("1 $ 2"), Err(Error::Syntax { line: 1, column: 3, .. })));
        assert!(matches!(parse("(1"), Err(Error::Syntax { .. })));
        assert!(matches!(parse("1 2"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn render_round_trip() {
        for text in [
            "rat(1; 1-s)-alg((s-1)*T^2+T-(s+s^2); 1)",
            "inv(alg(T^2-(1-s); 1))",
            "-s^2+(1-s)^3/2",
            "prepend(grandi; 5, 1)",
            "shiftl(geom(2); 3)",
            "s^-1",
            "-(-s)",
            "1/2*s-(2-s)",
        ] {
            let e = parse(text).unwrap();
            let again = parse(&e.to_string()).unwrap();
            assert_eq!(again, e, "{text}");
        }
    }

    #[test]
    fn evaluate_examples() {
        let g = evaluate_str("rat(1-s; 1-s^2)", &cfg(8)).unwrap();
        assert_eq!(g.ann().to_string(), "(1+s)*T - 1");
        let y_prime = evaluate_str("rat(1; 1-s) - alg((s-1)*T^2+T-(s+s^2); 1)", &cfg(16)).unwrap();
        assert_eq!(y_prime.expansion().coeffs()[..4], Series::from_i64(Field::Rationals, &[0, 1, 2, 3]).coeffs()[..]);
        let inf = evaluate_str("inv(alg(T^2-(1-s); 1))", &cfg(8)).unwrap();
        assert_eq!(inf.ann().to_string(), "(1-s)*T^2 - 1");
        let geo = evaluate_str("geom(1)", &cfg(8)).unwrap();
        assert_eq!(geo.ann().to_string(), "(1-s)*T - 1");
    }

    #[test]
    fn evaluate_errors() {
        assert!(matches!(evaluate_str("rat(1; s)", &cfg(8)), Err(Error::DenominatorNotUnit)));
        assert!(matches!(evaluate_str("inv(s)", &cfg(8)), Err(Error::DenominatorNotUnit)));
        assert!(matches!(evaluate_str("inv(alg(T - s; 0))", &cfg(8)), Err(Error::NotAUnit)));
        assert!(matches!(evaluate_str("T + 1", &cfg(8)), Err(Error::Eval(_))));
        assert!(matches!(evaluate_str("foo(1)", &cfg(8)), Err(Error::Eval(_))));
    }

    #[test]
    fn polynomial_arithmetic_stays_exact() {
        let x = evaluate_str("(1+s)^2 - 2*s", &cfg(6)).unwrap();
        assert_eq!(x.ann().to_string(), "T - (1+s^2)");
        let sh = evaluate_str("shiftl(1+2*s+3*s^2; 1)", &cfg(6)).unwrap();
        assert_eq!(sh.ann().to_string(), "T - (2+3*s)");
    }
}
