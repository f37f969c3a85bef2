//! Parser for operator expressions such as `(y*pz - z*py)/hbar`.
//!
//! ```text
//! expr    := ['+'|'-'] term (('+'|'-') term)*
//! term    := factor (('*'|'/') factor)*
//! factor  := primary ('^' natural)?
//! primary := integer | 'i' | 'hbar' | generator | '(' expr ')'
//! ```
//!
//! Generators are `x y z px py pz lx ly lz L2` (the underscore spellings
//! `p_x`, `l_x`, ... are accepted too). `*` keeps the written order, so
//! `px*x` and `x*px` differ by `-i*hbar`. Division is only by a nonzero scalar
//! of the form `c·hbar^k`; rationals are written as `3/2`.

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::weyl::{mul, Builtin, OperatorPoly, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("column {column}: {kind}")]
pub struct ParseError {
    /// 1-based character offset into the source.
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseErrorKind {
    #[error("empty expression")]
    Empty,
    #[error("unexpected character `{0}`")]
    UnexpectedChar(char),
    #[error("unknown identifier `{0}`")]
    UnknownIdentifier(String),
    #[error("expected {expected}, found {found}")]
    Unexpected { expected: &'static str, found: String },
    #[error("exponent must be a natural number")]
    BadExponent,
    #[error("division by a non-scalar")]
    NonScalarDivisor,
    #[error("division by zero")]
    DivisionByZero,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
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
            Tok::Int(n) => format!("`{n}`"),
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            d if d.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push((Tok::Int(digits.parse().unwrap()), column));
                continue;
            }
            a if a.is_ascii_alphabetic() || a == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push((Tok::Ident(chars[start..i].iter().collect()), column));
                continue;
            }
            other => {
                return Err(ParseError {
                    column,
                    kind: ParseErrorKind::UnexpectedChar(other),
                })
            }
        };
        out.push((tok, column));
        i += 1;
    }
    out.push((Tok::End, chars.len() + 1));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn column(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, expected: &'static str) -> ParseError {
        ParseError {
            column: self.column(),
            kind: ParseErrorKind::Unexpected {
                expected,
                found: self.peek().describe(),
            },
        }
    }

    fn expr(&mut self) -> Result<OperatorPoly, ParseError> {
        let negate_first = match self.peek() {
            Tok::Minus => {
                self.bump();
                true
            }
            Tok::Plus => {
                self.bump();
                false
            }
            _ => false,
        };
        let mut acc = self.term()?;
        if negate_first {
            acc = -acc;
        }
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<OperatorPoly, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = mul(&acc, &self.factor()?);
                }
                Tok::Slash => {
                    let (_, slash_col) = self.bump();
                    let divisor_col = self.column();
                    let divisor = self.factor()?;
                    let scalar = divisor.as_scalar().ok_or(ParseError {
                        column: divisor_col,
                        kind: ParseErrorKind::NonScalarDivisor,
                    })?;
                    if scalar.is_zero() {
                        return Err(ParseError {
                            column: slash_col,
                            kind: ParseErrorKind::DivisionByZero,
                        });
                    }
                    let inv = scalar.inverse().ok_or(ParseError {
                        column: divisor_col,
                        kind: ParseErrorKind::NonScalarDivisor,
                    })?;
                    acc = acc.scale(&inv);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<OperatorPoly, ParseError> {
        let base = self.primary()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let column = self.column();
        let exponent = match self.bump().0 {
            Tok::Int(n) => n.to_u32(),
            _ => None,
        }
        .ok_or(ParseError {
            column,
            kind: ParseErrorKind::BadExponent,
        })?;
        Ok((0..exponent).fold(OperatorPoly::one(), |acc, _| mul(&acc, &base)))
    }

    fn primary(&mut self) -> Result<OperatorPoly, ParseError> {
        let column = self.column();
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                let q = BigRational::from_integer(n);
                Ok(OperatorPoly::constant(Scalar::from_parts(
                    Complex::new(q, BigRational::zero()),
                    0,
                )))
            }
            Tok::Ident(name) => {
                self.bump();
                match name.as_str() {
                    "i" => Ok(OperatorPoly::constant(Scalar::i())),
                    "hbar" => Ok(OperatorPoly::constant(Scalar::hbar_pow(1))),
                    other => Builtin::from_name(other).map(Builtin::poly).ok_or(ParseError {
                        column,
                        kind: ParseErrorKind::UnknownIdentifier(name),
                    }),
                }
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.unexpected("`)`"));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.unexpected("an operand")),
        }
    }
}

/// Parses an operator expression into its exact normal-ordered polynomial.
pub fn parse_operator(src: &str) -> Result<OperatorPoly, ParseError> {
    let toks = lex(src)?;
    if toks.len() == 1 {
        return Err(ParseError {
            column: 1,
            kind: ParseErrorKind::Empty,
        });
    }
    let mut p = Parser { toks, pos: 0 };
    let value = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.unexpected("an operator or end of input"));
    }
    Ok(value)
}
