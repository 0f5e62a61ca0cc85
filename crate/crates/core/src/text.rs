//! Textual element syntax.
//!
//! Literals are exact: `3`, `-2/7`, `0.125`, `1e-3` all denote rationals.
//!
//! * Bicomplex: a sum of terms `c`, `c*u`, `u` with `u ∈ {i, h, k}`,
//!   e.g. `1/2 - 1/2*k`. Repeated units add up.
//! * Multicomplex: `2ⁿ` comma-separated literals in basis order
//!   `1, i1, i2, i1i2, i3, …`.
//! * Biquaternion: a sum of terms `z`, `z*u`, `u` with `u ∈ {i, j, k}` and
//!   `z` either a real literal or `(re,im)`, the imaginary part being the
//!   coefficient of `ω`, e.g. `(0,1) + (1,0)*k`.

use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::{Pow, Zero};
use thiserror::Error;

use crate::bicomplex::Bicomplex;
use crate::biquaternion::Biquaternion;
use crate::multicomplex::{Multicomplex, MulticomplexError};
use crate::scalar::{Rational, Scalar};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum TextError {
    #[error("at offset {position}: expected {expected}")]
    Expected { position: usize, expected: String },
    #[error(transparent)]
    Multicomplex(#[from] MulticomplexError),
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { text, pos: 0 }
    }

    fn skip_ws(&mut self) {
        let rest = &self.text[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn fail<T>(&mut self, expected: &str) -> Result<T, TextError> {
        self.skip_ws();
        Err(TextError::Expected { position: self.pos, expected: expected.to_string() })
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn digits(&mut self) -> &'a str {
        let start = self.pos;
        while self.text[self.pos..].starts_with(|c: char| c.is_ascii_digit()) {
            self.pos += 1;
        }
        &self.text[start..self.pos]
    }

    /// Unsigned literal: `p`, `p/q`, `p.f`, with optional `e±n`.
    fn unsigned(&mut self) -> Result<Rational, TextError> {
        self.skip_ws();
        let start = self.pos;
        let int_part = self.digits();
        let mut frac = "";
        if self.text[self.pos..].starts_with('.') {
            self.pos += 1;
            frac = self.digits();
        }
        if int_part.is_empty() && frac.is_empty() {
            self.pos = start;
            return self.fail("number");
        }
        let mantissa: BigInt = format!("{int_part}{frac}").parse().expect("scanned digits");
        let mut value = Rational::new(mantissa, BigInt::from(10u32).pow(frac.len()));
        if self.text[self.pos..].starts_with(['e', 'E']) {
            let mark = self.pos;
            self.pos += 1;
            let negative = self.text[self.pos..].starts_with('-');
            if negative || self.text[self.pos..].starts_with('+') {
                self.pos += 1;
            }
            match self.digits().parse::<u32>() {
                Ok(e) if e <= 4096 => {
                    let scale = Rational::from_integer(BigInt::from(10u32).pow(e));
                    value = if negative { value / scale } else { value * scale };
                }
                _ => {
                    self.pos = mark;
                    return self.fail("exponent");
                }
            }
        } else if frac.is_empty() && self.text[self.pos..].starts_with('/') {
            self.pos += 1;
            let den = self.digits();
            if den.is_empty() || den.bytes().all(|b| b == b'0') {
                return self.fail("nonzero denominator");
            }
            value /= Rational::from_integer(den.parse().expect("scanned digits"));
        }
        Ok(value)
    }

    fn signed(&mut self) -> Result<Rational, TextError> {
        let negative = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let v = self.unsigned()?;
        Ok(if negative { -v } else { v })
    }

    /// A unit name from `units` if one starts here (not followed by more
    /// identifier characters).
    fn unit(&mut self, units: &[&str]) -> Option<usize> {
        self.skip_ws();
        let rest = &self.text[self.pos..];
        let word_len = rest.find(|c: char| !c.is_ascii_alphanumeric()).unwrap_or(rest.len());
        let n = units.iter().position(|u| *u == &rest[..word_len])?;
        self.pos += word_len;
        Some(n)
    }

    /// Leading `+`/`-` of a term; the first term may omit it.
    fn term_sign(&mut self, first: bool) -> Result<bool, TextError> {
        if self.eat('-') {
            Ok(true)
        } else if self.eat('+') || first {
            Ok(false)
        } else {
            self.fail("'+' or '-'")
        }
    }
}

pub fn parse_rational(text: &str) -> Result<Rational, TextError> {
    let mut c = Cursor::new(text);
    let v = c.signed()?;
    if !c.at_end() {
        return c.fail("end of input");
    }
    Ok(v)
}

/// Sum of `coefficient * unit` terms; index 0 is the real unit.
fn linear_combination<C, F>(text: &str, units: &[&str], mut coefficient: F) -> Result<Vec<C>, TextError>
where
    C: Zero + Clone + std::ops::Neg<Output = C>,
    F: FnMut(&mut Cursor<'_>) -> Result<C, TextError>,
{
    let mut c = Cursor::new(text);
    let mut acc = vec![C::zero(); units.len() + 1];
    let mut first = true;
    let expected = format!("coefficient or unit ({})", units.join(", "));
    loop {
        if c.at_end() {
            return if first { c.fail(&expected) } else { Ok(acc) };
        }
        let negative = c.term_sign(first)?;
        first = false;
        let (value, slot) = match c.unit(units) {
            Some(u) => (None, u + 1),
            None => {
                if !matches!(c.peek(), Some('0'..='9' | '.' | '(')) {
                    return c.fail(&expected);
                }
                let v = coefficient(&mut c)?;
                if c.eat('*') {
                    match c.unit(units) {
                        Some(u) => (Some(v), u + 1),
                        None => return c.fail(&format!("unit ({})", units.join(", "))),
                    }
                } else {
                    (Some(v), 0)
                }
            }
        };
        let v = match value {
            Some(v) => v,
            None => coefficient(&mut Cursor::new("1"))?,
        };
        let v = if negative { -v } else { v };
        acc[slot] = acc[slot].clone() + v;
    }
}

pub fn parse_bicomplex<T: Scalar>(text: &str) -> Result<Bicomplex<T>, TextError> {
    let v = linear_combination::<Rational, _>(text, &["i", "h", "k"], |c| c.unsigned())?;
    let [w, x, y, z] = <[Rational; 4]>::try_from(v).expect("four slots");
    Ok(Bicomplex::new(w, x, y, z).map(T::from_rational))
}

fn complex_literal(c: &mut Cursor<'_>) -> Result<Complex<Rational>, TextError> {
    if c.eat('(') {
        let re = c.signed()?;
        if !c.eat(',') {
            return c.fail("','");
        }
        let im = c.signed()?;
        if !c.eat(')') {
            return c.fail("')'");
        }
        Ok(Complex::new(re, im))
    } else {
        Ok(Complex::new(c.unsigned()?, Rational::zero()))
    }
}

pub fn parse_biquaternion<T: Scalar>(text: &str) -> Result<Biquaternion<T>, TextError> {
    let v = linear_combination(text, &["i", "j", "k"], complex_literal)?;
    let coeffs = <[Complex<Rational>; 4]>::try_from(v).expect("four slots");
    Ok(Biquaternion::from_coeffs(coeffs).map(T::from_rational))
}

pub fn parse_multicomplex<T: Scalar>(order: usize, text: &str) -> Result<Multicomplex<T>, TextError> {
    let coeffs = text.split(',').map(parse_rational).collect::<Result<Vec<_>, _>>()?;
    Ok(Multicomplex::from_coeffs(order, coeffs.iter().map(T::from_rational).collect())?)
}
