//! Arithmetic expressions over ℚ: polynomials in `x` and radicands written in
//! previously adjoined radicals.
//!
//! Grammar (whitespace is ignored; `^` binds tighter than unary minus, so
//! `-x^2` is `-(x^2)`; a number directly followed by a name or `(` multiplies):
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := unary (("*" | "/") unary)*
//! unary  := ("+" | "-") unary | power
//! power  := atom ("^" integer)?
//! atom   := integer | name | "(" expr ")"
//! ```
//!
//! Columns in errors are 1-based character positions.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::exact_poly::{Field, Polynomial, Rational, Rationals};
use crate::numfield::{FieldElement, NumberField};

/// Largest exponent accepted after `^`.
pub const MAX_EXPONENT: u32 = 4096;

/// Parsed expression tree; names keep their column for error reporting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Number(BigInt),
    Name { name: String, column: usize },
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div { num: Box<Expr>, den: Box<Expr>, column: usize },
    Pow(Box<Expr>, u32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Name(String),
    Op(char),
    End,
}

struct Lexer {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

fn syntax(column: usize, message: impl Into<String>, expected: &[&str]) -> Error {
    Error::Parse {
        column,
        message: message.into(),
        expected: expected.iter().map(|s| s.to_string()).collect(),
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push((Tok::Int(digits.parse().expect("ascii digits")), col));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Name(chars[start..i].iter().collect()), col));
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Op(c), col));
            i += 1;
        } else {
            return Err(syntax(col, format!("unexpected character '{c}'"), &["number", "name", "operator"]));
        }
    }
    out.push((Tok::End, chars.len() + 1));
    Ok(out)
}

impl Lexer {
    fn peek(&self) -> &(Tok, usize) {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn at_op(&self, c: char) -> bool {
        self.peek().0 == Tok::Op(c)
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut acc = self.term()?;
        loop {
            if self.at_op('+') {
                self.bump();
                acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
            } else if self.at_op('-') {
                self.bump();
                acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut acc = self.unary()?;
        let mut last_number = matches!(acc, Expr::Number(_));
        loop {
            let implicit = last_number && matches!(self.peek().0, Tok::Name(_) | Tok::Op('('));
            if self.at_op('*') || implicit {
                if !implicit {
                    self.bump();
                }
                let rhs = self.unary()?;
                last_number = matches!(rhs, Expr::Number(_));
                acc = Expr::Mul(Box::new(acc), Box::new(rhs));
            } else if self.at_op('/') {
                let (_, column) = self.bump();
                let den = self.unary()?;
                last_number = false;
                acc = Expr::Div { num: Box::new(acc), den: Box::new(den), column };
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.at_op('-') {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        if self.at_op('+') {
            self.bump();
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if !self.at_op('^') {
            return Ok(base);
        }
        self.bump();
        match self.bump() {
            (Tok::Int(n), col) => {
                let e = n
                    .to_u32()
                    .filter(|&e| e <= MAX_EXPONENT)
                    .ok_or_else(|| syntax(col, format!("exponent {n} exceeds {MAX_EXPONENT}"), &[]))?;
                Ok(Expr::Pow(Box::new(base), e))
            }
            (Tok::Op('-'), col) => Err(syntax(col, "negative exponents are not supported", &["integer"])),
            (_, col) => Err(syntax(col, "expected an exponent", &["integer"])),
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.bump() {
            (Tok::Int(n), _) => Ok(Expr::Number(n)),
            (Tok::Name(name), column) => Ok(Expr::Name { name, column }),
            (Tok::Op('('), _) => {
                let inner = self.expr()?;
                match self.bump() {
                    (Tok::Op(')'), _) => Ok(inner),
                    (_, col) => Err(syntax(col, "unclosed parenthesis", &[")"])),
                }
            }
            (Tok::End, col) => Err(syntax(col, "unexpected end of input", &["number", "name", "("])),
            (Tok::Op(c), col) => Err(syntax(col, format!("unexpected '{c}'"), &["number", "name", "("])),
        }
    }
}

/// Parses an expression without interpreting its names.
pub fn parse_expr(text: &str) -> Result<Expr> {
    let mut lx = Lexer { toks: lex(text)?, pos: 0 };
    let e = lx.expr()?;
    match lx.peek() {
        (Tok::End, _) => Ok(e),
        (Tok::Op(')'), col) => Err(syntax(*col, "unmatched ')'", &["operator", "end of input"])),
        (_, col) => Err(syntax(*col, "unexpected token", &["operator", "end of input"])),
    }
}

/// Parses a polynomial in `x` with rational coefficients.
///
/// ```
/// use galois_kit::expr::parse_poly;
/// let p = parse_poly("(x^2-2)*(x^2-3)").unwrap();
/// assert_eq!(p.to_string(), "x^4 - 5*x^2 + 6");
/// let err = parse_poly("x^2 - y").unwrap_err();
/// assert_eq!(err.to_string(), "parse error at column 7: unknown symbol y");
/// ```
pub fn parse_poly(text: &str) -> Result<Polynomial<Rationals>> {
    parse_expr(text)?.to_poly("x")
}

impl Expr {
    /// Evaluates as a polynomial in the single variable `var`.
    pub fn to_poly(&self, var: &str) -> Result<Polynomial<Rationals>> {
        let q = Rationals;
        Ok(match self {
            Expr::Number(n) => Polynomial::constant(q, Rational::from_integer(n.clone())),
            Expr::Name { name, column } => {
                if name != var {
                    return Err(unknown(name, *column, &[var]));
                }
                Polynomial::x(q)
            }
            Expr::Neg(a) => a.to_poly(var)?.neg(),
            Expr::Add(a, b) => a.to_poly(var)?.try_add(&b.to_poly(var)?)?,
            Expr::Sub(a, b) => a.to_poly(var)?.try_sub(&b.to_poly(var)?)?,
            Expr::Mul(a, b) => a.to_poly(var)?.try_mul(&b.to_poly(var)?)?,
            Expr::Div { num, den, column } => {
                let d = den.to_poly(var)?;
                match d.degree() {
                    None => return Err(syntax(*column, "division by zero", &[])),
                    Some(0) => num.to_poly(var)?.scale(&q.inv(&d.coeff(0)).expect("nonzero")),
                    Some(_) => return Err(syntax(*column, "division by a non-constant polynomial", &[])),
                }
            }
            Expr::Pow(a, e) => a.to_poly(var)?.pow(*e),
        })
    }

    /// Evaluates inside a number field with the given named elements.
    pub fn eval_in(&self, field: &NumberField, names: &HashMap<String, FieldElement>) -> Result<FieldElement> {
        Ok(match self {
            Expr::Number(n) => field.rational(Rational::from_integer(n.clone())),
            Expr::Name { name, column } => match names.get(name) {
                Some(v) if v.field().same(field) => v.clone(),
                Some(_) => return Err(Error::FieldMismatch),
                None => {
                    let mut known: Vec<&str> = names.keys().map(String::as_str).collect();
                    known.sort_unstable();
                    return Err(unknown(name, *column, &known));
                }
            },
            Expr::Neg(a) => -&a.eval_in(field, names)?,
            Expr::Add(a, b) => a.eval_in(field, names)?.try_add(&b.eval_in(field, names)?)?,
            Expr::Sub(a, b) => a.eval_in(field, names)?.try_sub(&b.eval_in(field, names)?)?,
            Expr::Mul(a, b) => a.eval_in(field, names)?.try_mul(&b.eval_in(field, names)?)?,
            Expr::Div { num, den, column } => {
                let d = den.eval_in(field, names)?;
                if d.is_zero() {
                    return Err(syntax(*column, "division by zero", &[]));
                }
                num.eval_in(field, names)?.try_div(&d)?
            }
            Expr::Pow(a, e) => a.eval_in(field, names)?.pow(u64::from(*e)),
        })
    }

    /// Names mentioned anywhere in the expression, sorted and deduplicated.
    pub fn names(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_names(&mut out);
        out.sort();
        out.dedup();
        out
    }

    fn collect_names(&self, out: &mut Vec<String>) {
        match self {
            Expr::Number(_) => {}
            Expr::Name { name, .. } => out.push(name.clone()),
            Expr::Neg(a) | Expr::Pow(a, _) => a.collect_names(out),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => {
                a.collect_names(out);
                b.collect_names(out);
            }
            Expr::Div { num, den, .. } => {
                num.collect_names(out);
                den.collect_names(out);
            }
        }
    }
}

fn unknown(name: &str, column: usize, known: &[&str]) -> Error {
    syntax(column, format!("unknown symbol {name}"), known)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_poly::rat;
    use proptest::prelude::*;

    fn q(cs: &[i64]) -> Polynomial<Rationals> {
        Polynomial::from_i64s(Rationals, cs)
    }

    #[test]
    fn basic_polynomials() {
        assert_eq!(parse_poly("x^5 - x - 1").unwrap(), q(&[-1, -1, 0, 0, 0, 1]));
        assert_eq!(parse_poly("(x^2-2)*(x^2-3)").unwrap(), q(&[6, 0, -5, 0, 1]));
        assert_eq!(parse_poly("-x^2").unwrap(), q(&[0, 0, -1]));
        assert_eq!(parse_poly("2x^2 + 3(x - 1)").unwrap(), q(&[-3, 3, 2]));
        assert_eq!(parse_poly("x/2 + 1/3").unwrap(), Polynomial::new(Rationals, vec![rat(1, 3), rat(1, 2)]));
        assert_eq!(parse_poly("((x))^0").unwrap(), q(&[1]));
        assert_eq!(parse_poly("3*2x").unwrap(), q(&[0, 6]));
    }

    #[test]
    fn errors_carry_columns() {
        let e = parse_poly("x^2 - y").unwrap_err();
        assert!(matches!(&e, Error::Parse { column: 7, message, .. } if message == "unknown symbol y"), "{e:?}");
        assert!(matches!(parse_poly("x +").unwrap_err(), Error::Parse { column: 4, .. }));
        assert!(matches!(parse_poly("(x").unwrap_err(), Error::Parse { column: 3, .. }));
        assert!(matches!(parse_poly("x)").unwrap_err(), Error::Parse { column: 2, .. }));
        assert!(matches!(parse_poly("x # 1").unwrap_err(), Error::Parse { column: 3, .. }));
        assert!(matches!(parse_poly("x^-1").unwrap_err(), Error::Parse { column: 3, .. }));
        assert!(matches!(parse_poly("1/(x-x)").unwrap_err(), Error::Parse { column: 2, .. }));
        assert!(matches!(parse_poly("1/x").unwrap_err(), Error::Parse { column: 2, .. }));
    }

    #[test]
    fn radicands_in_a_field() {
        let k = NumberField::simple(&q(&[-2, 0, 1]), "r1").unwrap();
        let r1 = k.generator("r1").unwrap();
        let names = HashMap::from([("r1".to_string(), r1.clone())]);
        let b = parse_expr("1 + r1").unwrap().eval_in(&k, &names).unwrap();
        assert_eq!(b, &k.int(1) + &r1);
        let c = parse_expr("(r1^2 + 2)/r1").unwrap().eval_in(&k, &names).unwrap();
        assert_eq!(c, r1.scale(&rat(2, 1)));
        let e = parse_expr("r2 + 1").unwrap().eval_in(&k, &names).unwrap_err();
        assert!(matches!(e, Error::Parse { column: 1, ref expected, .. } if expected == &["r1"]));
    }

    proptest! {
        #[test]
        fn render_and_reparse(cs in proptest::collection::vec((-30i64..30, 1i64..6), 0..7)) {
            let p = Polynomial::new(Rationals, cs.iter().map(|&(n, d)| rat(n, d)).collect());
            prop_assert_eq!(parse_poly(&p.to_string()).unwrap(), p);
        }
    }
}
