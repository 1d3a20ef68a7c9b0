//! Textual form: rationals as `p/q` or `p`, everything else as prefix terms
//! such as `(sqrt 2)` or `(div 1 (sqrt 2))`.

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use super::{BinOp, ExactError, ExactNumber, Kind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("unexpected token `{0}`")]
    UnexpectedToken(String),
    #[error("invalid rational literal `{0}`")]
    BadLiteral(String),
    #[error("unknown operator `{0}`")]
    UnknownOperator(String),
    #[error("trailing input after term")]
    Trailing,
    #[error(transparent)]
    Domain(#[from] ExactError),
}

pub(super) fn write_term(x: &ExactNumber, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match x.kind() {
        Kind::Rational(q) => {
            if q.is_integer() {
                write!(f, "{}", q.numer())
            } else {
                write!(f, "{}/{}", q.numer(), q.denom())
            }
        }
        Kind::Add(a, b) => write!(f, "(add {a} {b})"),
        Kind::Sub(a, b) => write!(f, "(sub {a} {b})"),
        Kind::Mul(a, b) => write!(f, "(mul {a} {b})"),
        Kind::Div(a, b) => write!(f, "(div {a} {b})"),
        Kind::Sqrt(a) => write!(f, "(sqrt {a})"),
    }
}

fn tokenize(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in s.char_indices() {
        match c {
            '(' | ')' => {
                if let Some(st) = start.take() {
                    out.push(&s[st..i]);
                }
                out.push(&s[i..i + 1]);
            }
            c if c.is_whitespace() => {
                if let Some(st) = start.take() {
                    out.push(&s[st..i]);
                }
            }
            _ => {
                if start.is_none() {
                    start = Some(i);
                }
            }
        }
    }
    if let Some(st) = start {
        out.push(&s[st..]);
    }
    out
}

fn parse_literal(tok: &str) -> Result<ExactNumber, ParseError> {
    let bad = || ParseError::BadLiteral(tok.to_string());
    let int = |s: &str| -> Result<BigInt, ParseError> {
        let digits = s.strip_prefix('-').unwrap_or(s);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        s.parse::<BigInt>().map_err(|_| bad())
    };
    match tok.split_once('/') {
        Some((n, d)) => {
            if d.starts_with('-') {
                return Err(bad());
            }
            Ok(ExactNumber::from_rational(int(n)?, int(d)?)?)
        }
        None => Ok(ExactNumber::from_rational(int(tok)?, BigInt::from(1))?),
    }
}

struct Parser<'a> {
    toks: Vec<&'a str>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn next(&mut self) -> Result<&'a str, ParseError> {
        let t = self.toks.get(self.pos).copied().ok_or(ParseError::UnexpectedEnd)?;
        self.pos += 1;
        Ok(t)
    }

    fn expect_close(&mut self) -> Result<(), ParseError> {
        match self.next()? {
            ")" => Ok(()),
            t => Err(ParseError::UnexpectedToken(t.to_string())),
        }
    }

    fn term(&mut self) -> Result<ExactNumber, ParseError> {
        let tok = self.next()?;
        if tok == ")" {
            return Err(ParseError::UnexpectedToken(tok.to_string()));
        }
        if tok != "(" {
            return parse_literal(tok);
        }
        let op = self.next()?;
        let value = match op {
            "sqrt" => self.term()?.sqrt()?,
            "add" | "sub" | "mul" | "div" => {
                let a = self.term()?;
                let b = self.term()?;
                let op = match op {
                    "add" => BinOp::Add,
                    "sub" => BinOp::Sub,
                    "mul" => BinOp::Mul,
                    _ => BinOp::Div,
                };
                a.arith(&b, op)?
            }
            other => return Err(ParseError::UnknownOperator(other.to_string())),
        };
        self.expect_close()?;
        Ok(value)
    }
}

pub(super) fn parse(s: &str) -> Result<ExactNumber, ParseError> {
    let mut p = Parser {
        toks: tokenize(s),
        pos: 0,
    };
    let v = p.term()?;
    if p.pos != p.toks.len() {
        return Err(ParseError::Trailing);
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literals() {
        assert_eq!(parse("-3/6").unwrap().to_string(), "-1/2");
        assert_eq!(parse("42").unwrap().to_string(), "42");
        assert!(matches!(parse("1/0"), Err(ParseError::Domain(ExactError::ZeroDenominator))));
        assert!(matches!(parse("1.5"), Err(ParseError::BadLiteral(_))));
        assert!(matches!(parse("3/-4"), Err(ParseError::BadLiteral(_))));
    }

    #[test]
    fn prefix_terms() {
        let x = parse("(div 1 (sqrt 2))").unwrap();
        assert_eq!((&x * &x - parse("1/2").unwrap()).sign(), 0);
        assert_eq!(parse("(sqrt 2)").unwrap().to_string(), "(sqrt 2)");
        assert_eq!(x.to_string(), "(mul 1/2 (sqrt 2))");
    }

    #[test]
    fn errors() {
        assert!(matches!(parse("(pow 2 3)"), Err(ParseError::UnknownOperator(_))));
        assert!(matches!(parse("(sqrt 2"), Err(ParseError::UnexpectedEnd)));
        assert!(matches!(parse("(sqrt 2))"), Err(ParseError::Trailing)));
        assert!(matches!(parse("(sqrt -1)"), Err(ParseError::Domain(ExactError::NegativeSqrt))));
        assert!(matches!(parse("(div 1 (sub (sqrt 4) 2))"), Err(ParseError::Domain(ExactError::DivisionByZero))));
    }

    #[test]
    fn round_trip_is_bit_exact() {
        for s in [
            "(add (sqrt 2) (sqrt 3))",
            "(sqrt (add 5 (mul 2 (sqrt 6))))",
            "(div (sqrt 3) (add 1 (sqrt 5)))",
            "(sub (mul -3/7 (sqrt 11)) 2/9)",
        ] {
            let once = parse(s).unwrap().to_string();
            let twice = parse(&once).unwrap().to_string();
            assert_eq!(once, twice);
        }
        // canonical forms print as they were written
        for s in ["(add (sqrt 2) (sqrt 3))", "(sqrt (add 3 (sqrt 2)))", "(add -2/9 (mul -3/7 (sqrt 11)))"] {
            assert_eq!(parse(s).unwrap().to_string(), s);
        }
    }
}
