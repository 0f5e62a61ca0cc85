//! Radical ("surd") equations over ℚ[x] and their congeners.
//!
//! An equation `base + Σ σₘ·Qₘ·√Rₘ = 0` has `2ⁿ` congeners, one per choice
//! of signs. Their product is free of radicals: it is computed exactly in
//! `ℚ[x][s₁…sₙ]/(sₘ² - Rₘ)` and yields the stock polynomial of degree `m`.
//! Each real root of the stock polynomial makes at least one congener
//! vanish (with principal, nonnegative square roots); congeners that no
//! real root satisfies are impossible.

mod parse;
mod poly;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::polysolve::{complex_roots, RootError};
use crate::scalar::{rational_to_f64, Rational};

pub use poly::QPoly;

pub const MAX_RADICALS: usize = 4;
pub const MAX_RADICAND_DEGREE: usize = 8;
/// Relative tolerance for "this congener vanishes at this root".
pub const ASSIGNMENT_TOLERANCE: f64 = 1e-8;
/// Coefficient bound below which the rational-root theorem enumerates
/// divisors; larger polynomials recognise rational roots numerically.
const DIVISOR_SEARCH_LIMIT: u64 = 1_000_000_000_000;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SurdError {
    #[error("syntax error at offset {position}: found {found}, expected one of {}", expected.join(", "))]
    Syntax { position: usize, found: String, expected: Vec<String> },
    #[error("radicals nested inside radicals are not supported (offset {position})")]
    UnsupportedNesting { position: usize },
    #[error("products or powers of radicals are not supported (offset {position})")]
    UnsupportedProduct { position: usize },
    #[error("division by a non-constant expression (offset {position})")]
    NonConstantDivisor { position: usize },
    #[error("division by zero (offset {position})")]
    DivisionByZero { position: usize },
    #[error("exponent exceeds {max} (offset {position})")]
    ExponentTooLarge { position: usize, max: u32 },
    #[error("equation contains no radical")]
    NoRadicals,
    #[error("{count} distinct radicals exceed the limit of {MAX_RADICALS}")]
    TooManyRadicals { count: usize },
    #[error("radicand of degree {degree} exceeds the limit of {MAX_RADICAND_DEGREE}")]
    RadicandDegree { degree: usize },
    #[error("the product of all congeners vanishes identically")]
    ZeroStock,
    #[error(transparent)]
    Roots(#[from] RootError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// `σ·Q(x)·√R(x)` with `Q` having a positive leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SurdTerm {
    pub coeff: QPoly,
    pub radicand: QPoly,
    pub sign: Sign,
}

/// `base + Σ terms = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SurdEquation {
    pub base: QPoly,
    pub terms: Vec<SurdTerm>,
}

pub fn parse_surd(text: &str) -> Result<SurdEquation, SurdError> {
    let linear = parse::parse_equation(text)?;
    let terms: Vec<SurdTerm> = linear
        .radicals
        .into_iter()
        .filter(|(_, coeff)| !coeff.is_zero())
        .map(|(radicand, coeff)| {
            if coeff.leading().is_some_and(Signed::is_negative) {
                SurdTerm { coeff: -&coeff, radicand, sign: Sign::Minus }
            } else {
                SurdTerm { coeff, radicand, sign: Sign::Plus }
            }
        })
        .collect();
    if terms.is_empty() {
        return Err(SurdError::NoRadicals);
    }
    if terms.len() > MAX_RADICALS {
        return Err(SurdError::TooManyRadicals { count: terms.len() });
    }
    if let Some(degree) = terms.iter().filter_map(|t| t.radicand.degree()).find(|&d| d > MAX_RADICAND_DEGREE) {
        return Err(SurdError::RadicandDegree { degree });
    }
    Ok(SurdEquation { base: linear.base, terms })
}

impl SurdEquation {
    pub fn radical_count(&self) -> usize {
        self.terms.len()
    }

    /// Congener `j` flips the sign of term `m` iff bit `m` of `j` is set;
    /// congener 0 is `self`.
    pub fn congener(&self, j: usize) -> SurdEquation {
        let terms = self
            .terms
            .iter()
            .enumerate()
            .map(|(m, t)| SurdTerm { sign: if j >> m & 1 == 1 { t.sign.flip() } else { t.sign }, ..t.clone() })
            .collect();
        SurdEquation { base: self.base.clone(), terms }
    }

    pub fn congeners(&self) -> Vec<SurdEquation> {
        (0..1usize << self.terms.len()).map(|j| self.congener(j)).collect()
    }

    pub fn signs(&self) -> Vec<Sign> {
        self.terms.iter().map(|t| t.sign).collect()
    }

    /// Value with principal square roots; complex when a radicand is
    /// negative. Also returns `|base| + Σ|Q·√R|` as a scale.
    pub fn eval_complex(&self, x: Complex<f64>) -> (Complex<f64>, f64) {
        let mut value = self.base.eval_complex(x);
        let mut scale = value.norm();
        for t in &self.terms {
            let v = t.coeff.eval_complex(x) * t.radicand.eval_complex(x).sqrt();
            scale += v.norm();
            value += v * f64::from(t.sign.as_i8());
        }
        (value, scale)
    }

    pub fn stock(&self) -> Result<StockEquation, SurdError> {
        stock_equation(self)
    }
}

/// Pretty-prints as `lhs = 0`; parsing the output gives back `self`.
impl fmt::Display for SurdEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = self.base.is_zero();
        if !first {
            write!(f, "{}", self.base)?;
        }
        for t in &self.terms {
            match (first, t.sign) {
                (true, Sign::Plus) => {}
                (true, Sign::Minus) => f.write_str("-")?,
                (false, Sign::Plus) => f.write_str(" + ")?,
                (false, Sign::Minus) => f.write_str(" - ")?,
            }
            first = false;
            let nonzero = t.coeff.coeffs().iter().filter(|c| !c.is_zero()).count();
            match t.coeff.coeffs() {
                [c] if c.is_one() => {}
                _ if nonzero == 1 => write!(f, "{}*", t.coeff)?,
                _ => write!(f, "({})*", t.coeff)?,
            }
            write!(f, "sqrt({})", t.radicand)?;
        }
        f.write_str(" = 0")
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct StockEquation {
    /// Exact product of the congeners.
    pub raw: QPoly,
    /// Primitive integer form with positive leading coefficient.
    pub normalized: QPoly,
}

impl StockEquation {
    pub fn degree(&self) -> usize {
        self.normalized.degree().expect("stock polynomial is nonzero")
    }
}

/// Element of `ℚ[x][s₁…sₙ]/(sₘ² - Rₘ)`: coefficient per radical subset.
type QuotientElement = BTreeMap<usize, QPoly>;

fn quotient_mul(a: &QuotientElement, b: &QuotientElement, radicands: &[QPoly]) -> QuotientElement {
    let mut out = QuotientElement::new();
    for (&s, p) in a {
        for (&t, q) in b {
            let mut term = p * q;
            let mut shared = s & t;
            while shared != 0 {
                let m = shared.trailing_zeros() as usize;
                term = &term * &radicands[m];
                shared &= shared - 1;
            }
            let slot = out.entry(s ^ t).or_default();
            *slot = &*slot + &term;
        }
    }
    out.retain(|_, p| !p.is_zero());
    out
}

pub fn stock_equation(eq: &SurdEquation) -> Result<StockEquation, SurdError> {
    let radicands: Vec<QPoly> = eq.terms.iter().map(|t| t.radicand.clone()).collect();
    let mut product = QuotientElement::from([(0, QPoly::constant(Rational::one()))]);
    for congener in eq.congeners() {
        let mut factor = QuotientElement::new();
        if !congener.base.is_zero() {
            factor.insert(0, congener.base.clone());
        }
        for (m, t) in congener.terms.iter().enumerate() {
            let signed = if t.sign == Sign::Minus { -&t.coeff } else { t.coeff.clone() };
            factor.insert(1 << m, signed);
        }
        product = quotient_mul(&product, &factor, &radicands);
    }
    assert!(product.keys().all(|&k| k == 0), "product of all congeners is radical-free");
    let raw = product.remove(&0).unwrap_or_default();
    if raw.is_zero() {
        return Err(SurdError::ZeroStock);
    }
    Ok(StockEquation { normalized: raw.primitive(), raw })
}

#[derive(Clone, Debug, PartialEq)]
pub enum RootValue {
    Rational(Rational),
    Real(f64),
    Complex(Complex<f64>),
}

impl RootValue {
    pub fn to_complex(&self) -> Complex<f64> {
        match self {
            RootValue::Rational(q) => Complex::new(rational_to_f64(q), 0.0),
            RootValue::Real(r) => Complex::new(*r, 0.0),
            RootValue::Complex(z) => *z,
        }
    }

    pub fn is_real(&self) -> bool {
        !matches!(self, RootValue::Complex(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootAssignment {
    /// The listed congeners vanish at this root regardless of branch.
    Assigned(Vec<usize>),
    /// Which congener vanishes depends on the branch of a square root of a
    /// negative or complex radicand; `candidates` vanish on the principal
    /// branch.
    Ambiguous { candidates: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq)]
pub struct StockRoot {
    pub value: RootValue,
    pub multiplicity: usize,
    pub assignment: RootAssignment,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CongenerStatus {
    Possible,
    Impossible,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CongenerEntry {
    pub equation: SurdEquation,
    pub status: CongenerStatus,
    /// Indices into [`CongenerReport::roots`] of the real roots assigned here.
    pub roots: Vec<usize>,
}

/// `m/n`: `n` congeners whose product has degree `m`. Never reduced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FractionalOrder {
    pub m: usize,
    pub n: usize,
}

impl fmt::Display for FractionalOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.m, self.n)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CongenerReport {
    pub equation: SurdEquation,
    pub congeners: Vec<CongenerEntry>,
    pub stock: StockEquation,
    pub order: FractionalOrder,
    pub roots: Vec<StockRoot>,
}

pub fn classify_roots(eq: &SurdEquation) -> Result<CongenerReport, SurdError> {
    let stock = stock_equation(eq)?;
    let found = stock_roots(&stock.normalized)?;
    let congeners = eq.congeners();

    let roots: Vec<StockRoot> = found
        .into_iter()
        .map(|(value, multiplicity)| {
            let assignment = assign(eq, &congeners, &value);
            StockRoot { value, multiplicity, assignment }
        })
        .collect();

    let entries = congeners
        .into_iter()
        .enumerate()
        .map(|(j, equation)| {
            let hits: Vec<usize> = roots
                .iter()
                .enumerate()
                .filter(|(_, r)| matches!(&r.assignment, RootAssignment::Assigned(c) if c.contains(&j)))
                .map(|(n, _)| n)
                .collect();
            let status = if hits.is_empty() { CongenerStatus::Impossible } else { CongenerStatus::Possible };
            CongenerEntry { equation, status, roots: hits }
        })
        .collect();

    let order = FractionalOrder { m: stock.degree(), n: 1 << eq.terms.len() };
    Ok(CongenerReport { equation: eq.clone(), congeners: entries, stock, order, roots })
}

fn vanishing(congeners: &[SurdEquation], x: Complex<f64>) -> Vec<usize> {
    congeners
        .iter()
        .enumerate()
        .filter(|(_, c)| {
            let (value, scale) = c.eval_complex(x);
            value.norm() <= ASSIGNMENT_TOLERANCE * scale.max(1.0)
        })
        .map(|(j, _)| j)
        .collect()
}

fn assign(eq: &SurdEquation, congeners: &[SurdEquation], value: &RootValue) -> RootAssignment {
    let candidates = vanishing(congeners, value.to_complex());
    if !value.is_real() {
        return RootAssignment::Ambiguous { candidates };
    }
    // Radicals whose radicand is negative here have no principal real
    // value; flipping their branch flips the matching congener bit.
    let mut branch_bits = 0usize;
    for (m, t) in eq.terms.iter().enumerate() {
        let negative = match value {
            RootValue::Rational(q) => t.radicand.eval(q).is_negative(),
            RootValue::Real(r) => {
                let scale: f64 = t
                    .radicand
                    .coeffs()
                    .iter()
                    .enumerate()
                    .map(|(d, c)| rational_to_f64(c).abs() * r.abs().powi(d as i32))
                    .sum();
                t.radicand.eval_f64(*r) < -1e-12 * scale.max(1.0)
            }
            RootValue::Complex(_) => unreachable!(),
        };
        if negative {
            branch_bits |= 1 << m;
        }
    }
    let closed = (0..eq.terms.len())
        .filter(|m| branch_bits >> m & 1 == 1)
        .all(|m| candidates.iter().all(|j| candidates.contains(&(j ^ (1 << m)))));
    if candidates.is_empty() || !closed {
        RootAssignment::Ambiguous { candidates }
    } else {
        RootAssignment::Assigned(candidates)
    }
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u64().filter(|&v| v <= DIVISOR_SEARCH_LIMIT)?;
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(BigInt::from(d));
            if d * d != n {
                out.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    Some(out)
}

/// Rational roots exactly (with multiplicity), then the rest numerically.
/// Real roots ascending, then complex roots by `(re, im)`.
fn stock_roots(p: &QPoly) -> Result<Vec<(RootValue, usize)>, SurdError> {
    let mut rest = p.clone();
    let mut exact: Vec<(Rational, usize)> = Vec::new();
    let mut take = |rest: &mut QPoly, r: Rational| {
        let mut mult = 0;
        while rest.degree().is_some_and(|d| d > 0) && rest.eval(&r).is_zero() {
            *rest = rest.deflate(&r);
            mult += 1;
        }
        if mult > 0 {
            exact.push((r, mult));
        }
    };
    take(&mut rest, Rational::zero());

    let candidates: Option<Vec<Rational>> = rest.degree().filter(|&d| d > 0).and_then(|_| {
        let ints = rest.primitive();
        let num = divisors(ints.coeffs()[0].numer())?;
        let den = divisors(ints.leading().expect("nonzero").numer())?;
        Some(
            num.iter()
                .flat_map(|a| {
                    den.iter().flat_map(move |b| {
                        let q = Rational::new(a.clone(), b.clone());
                        [q.clone(), -q]
                    })
                })
                .collect(),
        )
    });
    match candidates {
        Some(mut cands) => {
            cands.sort();
            cands.dedup();
            for c in cands {
                take(&mut rest, c);
            }
        }
        None if rest.degree().is_some_and(|d| d > 0) => {
            let approx = complex_roots(&rest.to_f64().into_iter().map(|c| Complex::new(c, 0.0)).collect::<Vec<_>>())?;
            for z in approx {
                if z.im.abs() <= 1e-8 * (1.0 + z.norm()) {
                    if let Some(q) = crate::polysolve::best_rational(z.re) {
                        take(&mut rest, q);
                    }
                }
            }
        }
        None => {}
    }

    let mut real: Vec<(RootValue, usize)> = exact.into_iter().map(|(q, m)| (RootValue::Rational(q), m)).collect();
    let mut complex: Vec<(RootValue, usize)> = Vec::new();
    if rest.degree().is_some_and(|d| d > 0) {
        let coeffs: Vec<Complex<f64>> = rest.to_f64().into_iter().map(|c| Complex::new(c, 0.0)).collect();
        let mut approx = complex_roots(&coeffs)?;
        approx.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
        let mut groups: Vec<(Complex<f64>, usize)> = Vec::new();
        for z in approx {
            match groups.last_mut() {
                Some((w, n)) if *w == z => *n += 1,
                _ => groups.push((z, 1)),
            }
        }
        for (z, n) in groups {
            if z.im.abs() <= 1e-8 * (1.0 + z.norm()) {
                real.push((RootValue::Real(z.re), n));
            } else {
                complex.push((RootValue::Complex(z), n));
            }
        }
    }
    real.sort_by(|a, b| a.0.to_complex().re.total_cmp(&b.0.to_complex().re));
    real.extend(complex);
    Ok(real)
}
