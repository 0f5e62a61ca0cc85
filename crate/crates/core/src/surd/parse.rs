//! Recursive-descent parser for radical equations in `x`.
//!
//! ```text
//! equation := expr '=' expr
//! expr     := term (('+' | '-') term)*
//! term     := unary (('*' | '/') unary)*
//! unary    := ('+' | '-') unary | power
//! power    := atom ('^' integer)?
//! atom     := number | 'x' | 'sqrt' '(' expr ')' | '(' expr ')'
//! number   := digits ('.' digits)?
//! ```
//!
//! Division is by nonzero rational constants only, so `3/4` is a literal.
//! Every radical must appear linearly: products of two radicals and powers
//! of radical-bearing expressions are rejected, as are radicals nested
//! inside radicals.

use num_bigint::BigInt;
use num_traits::{One, Pow};

use super::poly::QPoly;
use super::SurdError;
use crate::scalar::Rational;

/// Largest exponent accepted after `^`.
const MAX_EXPONENT: u32 = 64;

/// `base + Σ coeffₘ·√radicandₘ`, radicands kept in order of appearance.
#[derive(Clone, Debug, Default)]
pub(super) struct Linear {
    pub base: QPoly,
    pub radicals: Vec<(QPoly, QPoly)>,
}

impl Linear {
    fn poly(p: QPoly) -> Self {
        Linear { base: p, radicals: vec![] }
    }

    fn is_poly(&self) -> bool {
        self.radicals.is_empty()
    }

    fn add(mut self, rhs: Linear) -> Self {
        self.base = &self.base + &rhs.base;
        for (radicand, coeff) in rhs.radicals {
            match self.radicals.iter_mut().find(|(r, _)| *r == radicand) {
                Some((_, c)) => *c = &*c + &coeff,
                None => self.radicals.push((radicand, coeff)),
            }
        }
        self
    }

    fn neg(self) -> Self {
        Linear { base: -&self.base, radicals: self.radicals.into_iter().map(|(r, c)| (r, -&c)).collect() }
    }

    fn times_poly(self, p: &QPoly) -> Self {
        Linear { base: &self.base * p, radicals: self.radicals.into_iter().map(|(r, c)| (r, &c * p)).collect() }
    }
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
    in_radical: bool,
}

pub(super) fn parse_equation(text: &str) -> Result<Linear, SurdError> {
    let mut p = Parser { text, pos: 0, in_radical: false };
    let lhs = p.expr()?;
    p.expect('=', &["'='", "'+'", "'-'", "'*'", "'/'", "'^'"])?;
    let rhs = p.expr()?;
    p.skip_ws();
    if p.pos < text.len() {
        return Err(p.error(&["'+'", "'-'", "'*'", "'/'", "'^'", "end of input"]));
    }
    Ok(lhs.add(rhs.neg()))
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.peek_raw() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek_raw(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek_raw()
    }

    fn error(&mut self, expected: &[&str]) -> SurdError {
        self.skip_ws();
        SurdError::Syntax {
            position: self.pos,
            found: self.peek_raw().map_or_else(|| "end of input".to_string(), |c| format!("'{c}'")),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn expect(&mut self, c: char, expected: &[&str]) -> Result<(), SurdError> {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.error(expected))
        }
    }

    fn expr(&mut self) -> Result<Linear, SurdError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    acc = acc.add(self.term()?);
                }
                Some('-') => {
                    self.pos += 1;
                    acc = acc.add(self.term()?.neg());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Linear, SurdError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some('*') => {
                    let at = self.pos;
                    self.pos += 1;
                    let rhs = self.unary()?;
                    acc = match (acc.is_poly(), rhs.is_poly()) {
                        (true, _) => rhs.times_poly(&acc.base),
                        (false, true) => acc.times_poly(&rhs.base),
                        (false, false) => return Err(SurdError::UnsupportedProduct { position: at }),
                    };
                }
                Some('/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let rhs = self.unary()?;
                    let divisor = match rhs.base.coeffs() {
                        [c] if rhs.is_poly() => c.clone(),
                        [] => return Err(SurdError::DivisionByZero { position: at }),
                        _ => return Err(SurdError::NonConstantDivisor { position: at }),
                    };
                    acc = acc.times_poly(&QPoly::constant(divisor.recip()));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Linear, SurdError> {
        match self.peek() {
            Some('-') => {
                self.pos += 1;
                Ok(self.unary()?.neg())
            }
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Linear, SurdError> {
        let base = self.atom()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        let at = self.pos;
        self.pos += 1;
        self.skip_ws();
        let start = self.pos;
        while self.peek_raw().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let exponent: u32 = match self.text[start..self.pos].parse() {
            Ok(e) if e <= MAX_EXPONENT => e,
            Ok(_) => return Err(SurdError::ExponentTooLarge { position: start, max: MAX_EXPONENT }),
            Err(_) => {
                self.pos = start;
                return Err(self.error(&["nonnegative integer exponent"]));
            }
        };
        match exponent {
            0 => Ok(Linear::poly(QPoly::constant(Rational::one()))),
            1 => Ok(base),
            _ if base.is_poly() => Ok(Linear::poly(base.base.pow(exponent))),
            _ => Err(SurdError::UnsupportedProduct { position: at }),
        }
    }

    fn atom(&mut self) -> Result<Linear, SurdError> {
        const EXPECTED: &[&str] = &["number", "'x'", "'sqrt'", "'('", "'-'"];
        match self.peek() {
            Some(c) if c.is_ascii_digit() => Ok(Linear::poly(QPoly::constant(self.number()))),
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(')', &["')'", "'+'", "'-'", "'*'", "'/'", "'^'"])?;
                Ok(inner)
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.peek_raw().is_some_and(|c| c.is_ascii_alphanumeric() || c == '_') {
                    self.pos += 1;
                }
                match &self.text[start..self.pos] {
                    "x" => Ok(Linear::poly(QPoly::x())),
                    "sqrt" => self.radical(start),
                    _ => {
                        self.pos = start;
                        Err(self.error(EXPECTED))
                    }
                }
            }
            _ => Err(self.error(EXPECTED)),
        }
    }

    fn radical(&mut self, start: usize) -> Result<Linear, SurdError> {
        if self.in_radical {
            return Err(SurdError::UnsupportedNesting { position: start });
        }
        self.expect('(', &["'('"])?;
        self.in_radical = true;
        let inner = self.expr();
        self.in_radical = false;
        let inner = inner?;
        self.expect(')', &["')'", "'+'", "'-'", "'*'", "'/'", "'^'"])?;
        debug_assert!(inner.is_poly(), "nesting is rejected while parsing the radicand");
        if inner.base.is_zero() {
            return Ok(Linear::default());
        }
        Ok(Linear { base: QPoly::default(), radicals: vec![(inner.base, QPoly::constant(Rational::one()))] })
    }

    fn number(&mut self) -> Rational {
        let start = self.pos;
        while self.peek_raw().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let int_part = &self.text[start..self.pos];
        let mut frac_part = "";
        if self.peek_raw() == Some('.') {
            let dot = self.pos;
            self.pos += 1;
            while self.peek_raw().is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
            }
            frac_part = &self.text[dot + 1..self.pos];
        }
        let digits: BigInt = format!("{int_part}{frac_part}").parse().expect("scanned digits");
        let denom = BigInt::from(10u32).pow(frac_part.len());
        Rational::new(digits, denom)
    }
}
