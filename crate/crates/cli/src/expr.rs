//! Expression parser and series evaluator.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary | unary)*      juxtaposition multiplies
//! unary  := '-' unary | power
//! power  := atom ('^' uint)?
//! atom   := uint | 'x' | 'y' | '(' expr ')' | 'sqrt' '(' expr ')' | 'exp' '(' expr ')'
//! ```

use std::fmt;

use num_bigint::BigInt;
use riordan_core::{BiSeries, Coefficient, Error as CoreError, Fps, Rational, Series, YPoly};
use thiserror::Error;

const MAX_DEPTH: usize = 200;
const MAX_POWER: u32 = 4096;

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Num(Rational),
    X,
    Y,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Sqrt(Box<Expr>),
    Exp(Box<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("syntax error at byte {offset}: {message}")]
pub struct SyntaxError {
    pub offset: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Error)]
pub enum EvalError {
    #[error(transparent)]
    Series(#[from] CoreError),
    #[error("{0} is not allowed here")]
    NotAllowed(&'static str),
    #[error("division by a series whose leading coefficient is not a nonzero number")]
    BadDivisor,
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Num(n) => write!(f, "number {n}"),
            Tok::Ident(s) => write!(f, "'{s}'"),
            Tok::Op(c) => write!(f, "'{c}'"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, SyntaxError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: BigInt = text[start..i].parse().expect("ascii digits");
            out.push((Tok::Num(n), start));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_alphabetic() {
                i += 1;
            }
            out.push((Tok::Ident(text[start..i].to_string()), start));
        } else if b"+-*/^()".contains(&c) {
            out.push((Tok::Op(c as char), i));
            i += 1;
        } else {
            let ch = text[i..].chars().next().expect("in bounds");
            return Err(SyntaxError {
                offset: i,
                message: format!("unexpected character {ch:?}"),
            });
        }
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    depth: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, SyntaxError> {
        Err(SyntaxError {
            offset: self.offset(),
            message: message.into(),
        })
    }

    fn eat(&mut self, op: char) -> bool {
        if *self.peek() == Tok::Op(op) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, op: char) -> Result<(), SyntaxError> {
        if self.eat(op) {
            Ok(())
        } else {
            self.error(format!("expected '{op}', found {}", self.peek()))
        }
    }

    fn enter(&mut self) -> Result<(), SyntaxError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return self.error("expression nested too deeply");
        }
        Ok(())
    }

    fn expr(&mut self) -> Result<Expr, SyntaxError> {
        self.enter()?;
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                break;
            }
        }
        self.depth -= 1;
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr, SyntaxError> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat('/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else if matches!(self.peek(), Tok::Num(_) | Tok::Ident(_) | Tok::Op('(')) {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
            } else {
                break;
            }
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, SyntaxError> {
        if self.eat('-') {
            self.enter()?;
            let inner = self.unary()?;
            self.depth -= 1;
            Ok(Expr::Neg(Box::new(inner)))
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Expr, SyntaxError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let Tok::Num(n) = self.peek().clone() else {
            return self.error(format!("expected an exponent, found {}", self.peek()));
        };
        let Some(e) = u32::try_from(&n).ok().filter(|&e| e <= MAX_POWER) else {
            return self.error(format!("exponent must be at most {MAX_POWER}"));
        };
        self.pos += 1;
        Ok(Expr::Pow(Box::new(base), e))
    }

    fn atom(&mut self) -> Result<Expr, SyntaxError> {
        let tok = self.peek().clone();
        let start = self.offset();
        match tok {
            Tok::Num(n) => {
                self.pos += 1;
                Ok(Expr::Num(Rational::from_integer(n)))
            }
            Tok::Op('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Tok::Ident(name) => {
                self.pos += 1;
                match name.as_str() {
                    "x" => Ok(Expr::X),
                    "y" => Ok(Expr::Y),
                    "sqrt" | "exp" => {
                        self.expect('(')?;
                        let e = Box::new(self.expr()?);
                        self.expect(')')?;
                        Ok(if name == "sqrt" { Expr::Sqrt(e) } else { Expr::Exp(e) })
                    }
                    _ => Err(SyntaxError {
                        offset: start,
                        message: format!("unknown name '{name}'"),
                    }),
                }
            }
            other => self.error(format!("expected a number, variable or '(', found {other}")),
        }
    }
}

pub fn parse_expr(text: &str) -> Result<Expr, SyntaxError> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
        depth: 0,
    };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return p.error(format!("unexpected {}", p.peek()));
    }
    Ok(e)
}

impl Expr {
    pub fn mentions_y(&self) -> bool {
        match self {
            Expr::Y => true,
            Expr::Num(_) | Expr::X => false,
            Expr::Neg(a) | Expr::Pow(a, _) | Expr::Sqrt(a) | Expr::Exp(a) => a.mentions_y(),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => a.mentions_y() || b.mentions_y(),
        }
    }

    /// Series in `x` with coefficients in `Q[y]`, exact below `x^order`.
    ///
    /// Dividing by a series with zero constant term cancels the common
    /// power of `x`, which costs precision; the working order is raised
    /// until the result is exact to `order`.
    pub fn eval(&self, order: usize) -> Result<BiSeries, EvalError> {
        let mut working = order;
        loop {
            let s = self.eval_at(working)?;
            if s.order() >= order {
                return Ok(s.truncate(order));
            }
            let missing = order - s.order();
            if working > 4 * order + 64 {
                return Err(CoreError::InsufficientOrder {
                    needed: order,
                    available: s.order(),
                }
                .into());
            }
            working += missing;
        }
    }

    /// As [`Expr::eval`], rejecting any occurrence of `y`.
    pub fn eval_rational(&self, order: usize) -> Result<Fps, EvalError> {
        if self.mentions_y() {
            return Err(EvalError::NotAllowed("y"));
        }
        Ok(self.eval(order)?.map(|p| p.coeff(0)))
    }

    fn eval_at(&self, n: usize) -> Result<BiSeries, EvalError> {
        Ok(match self {
            Expr::Num(r) => Series::constant(YPoly::constant(r.clone()), n),
            Expr::X => Series::x(n),
            Expr::Y => Series::constant(YPoly::y(), n),
            Expr::Neg(a) => a.eval_at(n)?.neg(),
            Expr::Add(a, b) => a.eval_at(n)?.add(&b.eval_at(n)?),
            Expr::Sub(a, b) => a.eval_at(n)?.sub(&b.eval_at(n)?),
            Expr::Mul(a, b) => a.eval_at(n)?.mul(&b.eval_at(n)?),
            Expr::Div(a, b) => divide(&a.eval_at(n)?, &b.eval_at(n)?)?,
            Expr::Pow(a, e) => a.eval_at(n)?.pow(*e),
            Expr::Sqrt(a) => a.eval_at(n)?.sqrt()?,
            Expr::Exp(a) => riordan_core::eriordan::exp_series(&a.eval_at(n)?)?,
        })
    }

    /// Evaluate as a polynomial in `y` alone: no `x`, `sqrt` or `exp`, and
    /// division only by nonzero numbers.
    pub fn eval_ypoly(&self) -> Result<YPoly, EvalError> {
        Ok(match self {
            Expr::Num(r) => YPoly::constant(r.clone()),
            Expr::Y => YPoly::y(),
            Expr::X => return Err(EvalError::NotAllowed("x")),
            Expr::Sqrt(_) => return Err(EvalError::NotAllowed("sqrt")),
            Expr::Exp(_) => return Err(EvalError::NotAllowed("exp")),
            Expr::Neg(a) => a.eval_ypoly()?.neg(),
            Expr::Add(a, b) => a.eval_ypoly()?.add(&b.eval_ypoly()?),
            Expr::Sub(a, b) => a.eval_ypoly()?.sub(&b.eval_ypoly()?),
            Expr::Mul(a, b) => a.eval_ypoly()?.mul(&b.eval_ypoly()?),
            Expr::Div(a, b) => {
                let d = b.eval_ypoly()?.unit_inverse().ok_or(EvalError::BadDivisor)?;
                a.eval_ypoly()?.mul(&d)
            }
            Expr::Pow(a, e) => {
                let base = a.eval_ypoly()?;
                (0..*e).fold(YPoly::one(), |acc, _| acc.mul(&base))
            }
        })
    }
}

fn divide(a: &BiSeries, b: &BiSeries) -> Result<BiSeries, EvalError> {
    if b.order() == 0 {
        return Ok(BiSeries::zero(0));
    }
    if b.coeff(0).unit_inverse().is_some() {
        return Ok(a.div(b)?);
    }
    let v = b.valuation().ok_or(EvalError::BadDivisor)?;
    if b.coeff(v).unit_inverse().is_none() {
        return Err(EvalError::BadDivisor);
    }
    let a = a.shift_down(v.min(a.order()))?;
    let b = b.shift_down(v)?;
    Ok(a.div(&b)?)
}

/// Parse and evaluate a `Q[y]` coefficient such as `"3 - 2*y + y^2"` or `"1/2"`.
pub fn parse_ypoly(text: &str) -> Result<YPoly, ExprError> {
    Ok(parse_expr(text)?.eval_ypoly()?)
}

#[derive(Clone, Debug, PartialEq, Error)]
pub enum ExprError {
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    #[error(transparent)]
    Eval(#[from] EvalError),
}

#[cfg(test)]
mod tests {
    use super::*;
    use riordan_core::rational::int;

    fn series(text: &str, n: usize) -> Vec<i64> {
        parse_expr(text)
            .unwrap()
            .eval_rational(n)
            .unwrap()
            .coeffs()
            .iter()
            .map(|c| c.to_integer().try_into().unwrap())
            .collect()
    }

    #[test]
    fn long_division() {
        assert_eq!(series("(1-2*x)/(1-x)", 5), [1, -1, -1, -1, -1]);
        assert_eq!(series("x", 4), [0, 1, 0, 0]);
    }

    #[test]
    fn schroeder_with_cancelled_x() {
        assert_eq!(series("(1-x-sqrt(1-6*x+x^2))/(2*x)", 5), [1, 2, 6, 22, 90]);
        assert_eq!(series("(1 - x - sqrt(1 - 6x + x^2)) / (2x)", 6), [1, 2, 6, 22, 90, 394]);
    }

    #[test]
    fn unary_minus_and_juxtaposition() {
        assert_eq!(series("-x^2", 3), [0, 0, -1]);
        assert_eq!(series("2(1+x)", 2), [2, 2]);
        assert_eq!(series("--3", 1), [3]);
        assert_eq!(parse_expr("2x^2").unwrap(), parse_expr("2*(x^2)").unwrap());
    }

    #[test]
    fn exponential() {
        let e = parse_expr("exp(x)").unwrap().eval_rational(5).unwrap();
        assert_eq!(e.coeff(4), &(int(1) / int(24)));
        let err = parse_expr("exp(1+x)").unwrap().eval(4).unwrap_err();
        assert_eq!(err, EvalError::Series(CoreError::NonzeroExpArgument));
    }

    #[test]
    fn y_coefficients() {
        let g = parse_expr("1/(1-x-x*y)").unwrap().eval(4).unwrap();
        assert_eq!(g.coeff(2), &YPoly::from_ints(&[1, 2, 1]));
        assert_eq!(parse_ypoly("3 - 2*y + y^2").unwrap(), YPoly::from_ints(&[3, -2, 1]));
        assert_eq!(parse_ypoly("(y+3)/3").unwrap(), YPoly::new(vec![int(1), int(1) / int(3)]));
        assert!(parse_ypoly("x").is_err());
        assert!(parse_expr("y").unwrap().eval_rational(2).is_err());
    }

    #[test]
    fn syntax_errors_carry_offsets() {
        let cases = [("1+", 2), ("(1-x", 4), ("1 $ 2", 2), ("foo(x)", 0), ("x^y", 2), ("1)", 1), ("", 0)];
        for (text, offset) in cases {
            let err = parse_expr(text).unwrap_err();
            assert_eq!(err.offset, offset, "{text}: {err}");
        }
    }

    #[test]
    fn eval_errors() {
        assert!(parse_expr("1/x").unwrap().eval(4).is_err());
        assert!(parse_expr("sqrt(4+x)").unwrap().eval(4).is_err());
        assert!(parse_expr("1/(y+x)").unwrap().eval(4).is_err());
    }

    #[test]
    fn deep_nesting_is_rejected() {
        let text = format!("{}x{}", "(".repeat(500), ")".repeat(500));
        assert!(parse_expr(&text).is_err());
        let text = "-".repeat(500) + "x";
        assert!(parse_expr(&text).is_err());
    }
}
