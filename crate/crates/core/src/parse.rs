//! Text grammar for polynomials.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := ('-' | '+') unary | power
//! power  := atom ('^' uint)?
//! atom   := 'x' | 'y' | uint ('/' uint)? | '(' expr ')'
//! ```
//!
//! Juxtaposition is not multiplication: `2x` and `x y` are rejected.

use num_bigint::BigInt;
use thiserror::Error;

use crate::poly::BivariatePoly;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("negative exponent at byte {pos}")]
    NegativeExponent { pos: usize },
}

impl ParseError {
    /// Both variants are grammar violations.
    pub fn is_syntax(&self) -> bool {
        true
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    X,
    Y,
    Num(BigInt),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let tok = match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
                continue;
            }
            'x' => Tok::X,
            'y' => Tok::Y,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '/' => Tok::Slash,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Num(text[start..i].parse().expect("digits"))));
                continue;
            }
            _ => return Err(ParseError::Syntax { pos: i, msg: format!("unexpected character {c:?}") }),
        };
        out.push((i, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(o, _)| *o).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: &str) -> Result<T, ParseError> {
        Err(ParseError::Syntax { pos: self.offset(), msg: msg.to_string() })
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<BivariatePoly, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<BivariatePoly, ParseError> {
        let mut acc = self.unary()?;
        while self.peek() == Some(&Tok::Star) {
            self.bump();
            acc = acc.mul(&self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<BivariatePoly, ParseError> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                Ok(self.unary()?.neg())
            }
            Some(Tok::Plus) => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<BivariatePoly, ParseError> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.bump();
        let at = self.offset();
        match self.bump() {
            Some(Tok::Num(n)) => {
                let e: u32 = n.try_into().map_err(|_| ParseError::Syntax { pos: at, msg: "exponent too large".into() })?;
                if self.peek() == Some(&Tok::Caret) {
                    return self.err("chained exponents need parentheses");
                }
                Ok(base.pow(e))
            }
            Some(Tok::Minus) => Err(ParseError::NegativeExponent { pos: at }),
            _ => Err(ParseError::Syntax { pos: at, msg: "expected a nonnegative integer exponent".into() }),
        }
    }

    fn atom(&mut self) -> Result<BivariatePoly, ParseError> {
        let at = self.offset();
        let out = match self.bump() {
            Some(Tok::X) => BivariatePoly::x(),
            Some(Tok::Y) => BivariatePoly::y(),
            Some(Tok::Num(n)) => {
                if self.peek() == Some(&Tok::Slash) {
                    self.bump();
                    match self.bump() {
                        Some(Tok::Num(d)) if d != BigInt::from(0) => BivariatePoly::constant(Rational::new(n, d)),
                        _ => return Err(ParseError::Syntax { pos: at, msg: "malformed rational literal".into() }),
                    }
                } else {
                    BivariatePoly::constant(Rational::from_integer(n))
                }
            }
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                if self.bump() != Some(Tok::RParen) {
                    return Err(ParseError::Syntax { pos: at, msg: "unbalanced parenthesis".into() });
                }
                inner
            }
            Some(_) => return Err(ParseError::Syntax { pos: at, msg: "expected x, y, a number or '('".into() }),
            None => return Err(ParseError::Syntax { pos: at, msg: "unexpected end of input".into() }),
        };
        // juxtaposition such as `2x` or `)(`
        if matches!(self.peek(), Some(Tok::X | Tok::Y | Tok::Num(_) | Tok::LParen)) {
            return self.err("implicit multiplication is not allowed; use '*'");
        }
        Ok(out)
    }
}

fn parser(text: &str) -> Result<Parser, ParseError> {
    Ok(Parser { toks: lex(text)?, pos: 0, end: text.len() })
}

/// Parses a polynomial in canonical term-map form.
pub fn parse_poly(text: &str) -> Result<BivariatePoly, ParseError> {
    let mut p = parser(text)?;
    if p.toks.is_empty() {
        return p.err("empty input");
    }
    let out = p.expr()?;
    if p.pos < p.toks.len() {
        return p.err("trailing input");
    }
    Ok(out)
}

/// Parses a polynomial and keeps its top-level product structure: `x*(x^2*y+1)` yields
/// `[x, x^2*y + 1]`. Constant factors are folded into the first factor; powers of a factor
/// are kept as repeated entries.
pub fn parse_factors(text: &str) -> Result<Vec<BivariatePoly>, ParseError> {
    let mut p = parser(text)?;
    if p.toks.is_empty() {
        return p.err("empty input");
    }
    let mut factors = Vec::new();
    let mut scalar = BivariatePoly::one();
    let mut negate = false;
    while p.peek() == Some(&Tok::Minus) {
        p.bump();
        negate = !negate;
    }
    loop {
        let start = p.pos;
        let base = p.atom()?;
        let mut reps = 1;
        if p.peek() == Some(&Tok::Caret) {
            p.pos = start;
            let whole = p.power()?;
            // recover the exponent from the token stream
            reps = match &p.toks[p.pos - 1].1 {
                Tok::Num(n) => u32::try_from(n).unwrap_or(1),
                _ => 1,
            };
            if base.is_constant() {
                scalar = scalar.mul(&whole);
                reps = 0;
            }
        }
        if reps > 0 {
            if base.is_constant() {
                scalar = scalar.mul(&base);
            } else {
                for _ in 0..reps {
                    factors.push(base.clone());
                }
            }
        }
        match p.peek() {
            Some(Tok::Star) => {
                p.bump();
            }
            None => break,
            _ => {
                // not a pure product: fall back to a single expanded factor
                return Ok(vec![parse_poly(text)?]);
            }
        }
    }
    if negate {
        scalar = scalar.neg();
    }
    if factors.is_empty() {
        return Ok(vec![scalar]);
    }
    factors[0] = factors[0].mul(&scalar);
    Ok(factors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn transcription() {
        let f = parse_poly("x^2*y + 1").unwrap();
        assert_eq!(f.coeff(2, 1), int(1));
        assert_eq!(f.coeff(0, 0), int(1));
        assert_eq!(f.num_terms(), 2);
    }

    #[test]
    fn expansion() {
        let f = parse_poly("x*(x^2*y+1)").unwrap();
        assert_eq!(f.coeff(3, 1), int(1));
        assert_eq!(f.coeff(1, 0), int(1));
        assert_eq!(f.num_terms(), 2);
    }

    #[test]
    fn negative_exponent_rejected() {
        let e = parse_poly("x^-1").unwrap_err();
        assert!(matches!(e, ParseError::NegativeExponent { .. }));
        assert!(e.is_syntax());
    }

    #[test]
    fn malformed_inputs() {
        for bad in ["2x", "x y", "x^", "(x+1", "x + ", "x/2", "x^2^3", "", "z", "1/0"] {
            assert!(parse_poly(bad).is_err(), "{bad} should fail");
        }
    }

    #[test]
    fn rationals_and_unary_minus() {
        let f = parse_poly("-3/4*x^2 - -y").unwrap();
        assert_eq!(f.to_string(), "-3/4*x^2 + y");
        assert_eq!(parse_poly("-x^2").unwrap().to_string(), "-x^2");
    }

    #[test]
    fn factors_kept() {
        let fs = parse_factors("x*(x^2*y+x+1)").unwrap();
        assert_eq!(fs.len(), 2);
        assert_eq!(fs[1].to_string(), "x^2*y + x + 1");
        let fs = parse_factors("2*(x-1)^2*y").unwrap();
        assert_eq!(fs.len(), 3);
        assert_eq!(parse_factors("x^2 - y^3").unwrap().len(), 1);
    }
}
