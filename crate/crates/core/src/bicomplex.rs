//! Bicomplex numbers (tessarines).
//!
//! An element is `w + x·i + y·h + z·k` on the ordered basis `(1, i, h, k)`
//! with `i² = h² = -1`, `k = ih = hi` and `k² = +1`. The same algebra appears
//! as the tessarine `w + ix + jy + kz` with `j² = +1`; its `j` is the `k`
//! used here.
//!
//! Writing an element as `X + iY` with `X = w + yh` and `Y = x + zh` complex
//! in `h`, the idempotents `g = (1 - hi)/2` and `g' = (1 + hi)/2` give the
//! decomposition `X + iY = Z·g + Z'·g'` with `Z = X + hY` and `Z' = X - hY`.
//! [`Bicomplex::decompose`] returns `(Z, Z')` as ordinary complex numbers
//! (`h ↦ 𝕚`), which is an algebra isomorphism onto `ℂ ⊕ ℂ`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::scalar::{complex_is_negligible, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BicomplexError {
    /// The element is zero or a nullific (zero divisor).
    #[error("element is not invertible: it is {0}")]
    NotInvertible(IdealTag),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Bicomplex<T> {
    pub w: T,
    pub x: T,
    pub y: T,
    pub z: T,
}

/// The image `(Z, Z')` of a bicomplex number in `ℂ ⊕ ℂ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SplitPair<T> {
    pub z1: Complex<T>,
    pub z2: Complex<T>,
}

/// Membership in the two ideals of nullifics.
///
/// `FirstSet` is the ideal generated by `h + i` (elements annulled by the
/// substitution `i → -h`, i.e. `Z' = 0`); `SecondSet` is generated by
/// `-h + i` (`Z = 0`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IdealTag {
    None,
    FirstSet,
    SecondSet,
    Zero,
}

impl IdealTag {
    pub fn is_zero_divisor(self) -> bool {
        matches!(self, IdealTag::FirstSet | IdealTag::SecondSet)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            IdealTag::None => "none",
            IdealTag::FirstSet => "first-set",
            IdealTag::SecondSet => "second-set",
            IdealTag::Zero => "zero",
        }
    }
}

impl fmt::Display for IdealTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl<T: Scalar> Bicomplex<T> {
    pub fn new(w: T, x: T, y: T, z: T) -> Self {
        Bicomplex { w, x, y, z }
    }

    pub fn real(w: T) -> Self {
        Bicomplex::new(w, T::zero(), T::zero(), T::zero())
    }

    pub fn i() -> Self {
        Bicomplex::new(T::zero(), T::one(), T::zero(), T::zero())
    }

    pub fn h() -> Self {
        Bicomplex::new(T::zero(), T::zero(), T::one(), T::zero())
    }

    pub fn k() -> Self {
        Bicomplex::new(T::zero(), T::zero(), T::zero(), T::one())
    }

    /// `g = (1 - hi)/2`, the unit of the first set of nullifics.
    pub fn g() -> Self {
        let half = T::half();
        Bicomplex::new(half.clone(), T::zero(), T::zero(), -half)
    }

    /// `g' = (1 + hi)/2`, the unit of the second set of nullifics.
    pub fn g_prime() -> Self {
        let half = T::half();
        Bicomplex::new(half.clone(), T::zero(), T::zero(), half)
    }

    /// Basis element `e_n` for `n` in `0..4` on `(1, i, h, k)`.
    pub fn basis(n: usize) -> Self {
        let mut c = [T::zero(), T::zero(), T::zero(), T::zero()];
        c[n] = T::one();
        Bicomplex::from_array(c)
    }

    pub fn from_array([w, x, y, z]: [T; 4]) -> Self {
        Bicomplex { w, x, y, z }
    }

    pub fn to_array(&self) -> [T; 4] {
        [self.w.clone(), self.x.clone(), self.y.clone(), self.z.clone()]
    }

    /// Squared Euclidean norm of the coefficient vector.
    pub fn coeff_norm_sqr(&self) -> T {
        self.w.clone() * self.w.clone()
            + self.x.clone() * self.x.clone()
            + self.y.clone() * self.y.clone()
            + self.z.clone() * self.z.clone()
    }

    pub fn decompose(&self) -> SplitPair<T> {
        let (w, x, y, z) = (&self.w, &self.x, &self.y, &self.z);
        SplitPair {
            z1: Complex::new(w.clone() - z.clone(), y.clone() + x.clone()),
            z2: Complex::new(w.clone() + z.clone(), y.clone() - x.clone()),
        }
    }

    pub fn recompose(pair: &SplitPair<T>) -> Self {
        let half = T::half();
        let (a, b) = (&pair.z1, &pair.z2);
        Bicomplex {
            w: (a.re.clone() + b.re.clone()) * half.clone(),
            x: (a.im.clone() - b.im.clone()) * half.clone(),
            y: (a.im.clone() + b.im.clone()) * half.clone(),
            z: (b.re.clone() - a.re.clone()) * half,
        }
    }

    pub fn ideal(&self) -> IdealTag {
        let scale = self.coeff_norm_sqr();
        if T::is_negligible(&scale, &T::zero()) {
            return IdealTag::Zero;
        }
        let SplitPair { z1, z2 } = self.decompose();
        match (complex_is_negligible(&z1, &scale), complex_is_negligible(&z2, &scale)) {
            (true, true) => IdealTag::Zero,
            (false, true) => IdealTag::FirstSet,
            (true, false) => IdealTag::SecondSet,
            (false, false) => IdealTag::None,
        }
    }

    /// `|Z|²·|Z'|²`, exact in every backend.
    pub fn norm_sqr(&self) -> T {
        let p = self.decompose();
        p.z1.norm_sqr() * p.z2.norm_sqr()
    }

    /// `N(a) = |Z|·|Z'|`: nonnegative, multiplicative, and zero exactly on
    /// zero and the nullifics.
    pub fn norm(&self) -> f64 {
        let p = self.decompose();
        let a = p.z1.norm_sqr().to_f64().unwrap_or(f64::NAN);
        let b = p.z2.norm_sqr().to_f64().unwrap_or(f64::NAN);
        (a * b).sqrt()
    }

    pub fn inverse(&self) -> Result<Self, BicomplexError> {
        match self.ideal() {
            IdealTag::None => {
                let p = self.decompose();
                Ok(Bicomplex::recompose(&SplitPair { z1: p.z1.inv(), z2: p.z2.inv() }))
            }
            tag => Err(BicomplexError::NotInvertible(tag)),
        }
    }

    /// `i → -i`
    pub fn conj_i(&self) -> Self {
        Bicomplex::new(self.w.clone(), -self.x.clone(), self.y.clone(), -self.z.clone())
    }

    /// `h → -h`
    pub fn conj_h(&self) -> Self {
        Bicomplex::new(self.w.clone(), self.x.clone(), -self.y.clone(), -self.z.clone())
    }

    /// Both `i → -i` and `h → -h`.
    pub fn conj_ih(&self) -> Self {
        Bicomplex::new(self.w.clone(), -self.x.clone(), -self.y.clone(), self.z.clone())
    }

    pub fn conjugates(&self) -> (Self, Self, Self) {
        (self.conj_i(), self.conj_h(), self.conj_ih())
    }

    pub fn scale(&self, s: &T) -> Self {
        Bicomplex::new(
            self.w.clone() * s.clone(),
            self.x.clone() * s.clone(),
            self.y.clone() * s.clone(),
            self.z.clone() * s.clone(),
        )
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Bicomplex::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn map<U, F: Fn(&T) -> U>(&self, f: F) -> Bicomplex<U> {
        Bicomplex { w: f(&self.w), x: f(&self.x), y: f(&self.y), z: f(&self.z) }
    }
}

impl<T: Scalar> SplitPair<T> {
    pub fn new(z1: Complex<T>, z2: Complex<T>) -> Self {
        SplitPair { z1, z2 }
    }

    pub fn into_vec(self) -> Vec<Complex<T>> {
        vec![self.z1, self.z2]
    }
}

impl<T: Scalar> Add for SplitPair<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        SplitPair { z1: self.z1 + rhs.z1, z2: self.z2 + rhs.z2 }
    }
}

impl<T: Scalar> Mul for SplitPair<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        SplitPair { z1: self.z1 * rhs.z1, z2: self.z2 * rhs.z2 }
    }
}

impl<'a, T: Scalar> Add<&'a Bicomplex<T>> for &'a Bicomplex<T> {
    type Output = Bicomplex<T>;
    fn add(self, b: &'a Bicomplex<T>) -> Bicomplex<T> {
        Bicomplex {
            w: self.w.clone() + b.w.clone(),
            x: self.x.clone() + b.x.clone(),
            y: self.y.clone() + b.y.clone(),
            z: self.z.clone() + b.z.clone(),
        }
    }
}

impl<'a, T: Scalar> Sub<&'a Bicomplex<T>> for &'a Bicomplex<T> {
    type Output = Bicomplex<T>;
    fn sub(self, b: &'a Bicomplex<T>) -> Bicomplex<T> {
        Bicomplex {
            w: self.w.clone() - b.w.clone(),
            x: self.x.clone() - b.x.clone(),
            y: self.y.clone() - b.y.clone(),
            z: self.z.clone() - b.z.clone(),
        }
    }
}

// i·h = k, i·k = -h, h·k = -i, k·k = 1.
impl<'a, T: Scalar> Mul<&'a Bicomplex<T>> for &'a Bicomplex<T> {
    type Output = Bicomplex<T>;
    fn mul(self, b: &'a Bicomplex<T>) -> Bicomplex<T> {
        let (w1, x1, y1, z1) = (&self.w, &self.x, &self.y, &self.z);
        let (w2, x2, y2, z2) = (&b.w, &b.x, &b.y, &b.z);
        let m = |p: &T, q: &T| p.clone() * q.clone();
        Bicomplex {
            w: m(w1, w2) - m(x1, x2) - m(y1, y2) + m(z1, z2),
            x: m(w1, x2) + m(x1, w2) - m(y1, z2) - m(z1, y2),
            y: m(w1, y2) + m(y1, w2) - m(x1, z2) - m(z1, x2),
            z: m(w1, z2) + m(z1, w2) + m(x1, y2) + m(y1, x2),
        }
    }
}

impl<T: Scalar> Neg for Bicomplex<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Bicomplex { w: -self.w, x: -self.x, y: -self.y, z: -self.z }
    }
}

impl<T: Scalar> Neg for &Bicomplex<T> {
    type Output = Bicomplex<T>;
    fn neg(self) -> Bicomplex<T> {
        -self.clone()
    }
}

macro_rules! forward_by_value {
    ($tr:ident, $m:ident) => {
        impl<T: Scalar> $tr for Bicomplex<T> {
            type Output = Bicomplex<T>;
            fn $m(self, rhs: Self) -> Self {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_by_value!(Add, add);
forward_by_value!(Sub, sub);
forward_by_value!(Mul, mul);

impl<T: Scalar> Zero for Bicomplex<T> {
    fn zero() -> Self {
        Bicomplex::new(T::zero(), T::zero(), T::zero(), T::zero())
    }
    fn is_zero(&self) -> bool {
        self.w.is_zero() && self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }
}

impl<T: Scalar> One for Bicomplex<T> {
    fn one() -> Self {
        Bicomplex::real(T::one())
    }
}

/// Renders `w + x*i + y*h + z*k`, dropping zero terms; zero prints as `0`.
impl<T: Scalar> fmt::Display for Bicomplex<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_linear_combination(f, &[&self.w, &self.x, &self.y, &self.z], &["", "i", "h", "k"])
    }
}

pub(crate) fn write_linear_combination<T: Scalar>(
    f: &mut impl fmt::Write,
    coeffs: &[&T],
    units: &[&str],
) -> fmt::Result {
    let mut first = true;
    for (c, unit) in coeffs.iter().zip(units) {
        if c.is_zero() {
            continue;
        }
        let negative = c.is_negative();
        let mag = if negative { -(*c).clone() } else { (*c).clone() };
        match (first, negative) {
            (true, true) => f.write_str("-")?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        f.write_str(&mag.to_literal())?;
        if !unit.is_empty() {
            write!(f, "*{}", unit)?;
        }
        first = false;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rational, Rational};

    type Q = Bicomplex<Rational>;

    fn q(w: i64, x: i64, y: i64, z: i64) -> Q {
        Bicomplex::new(rational(w, 1), rational(x, 1), rational(y, 1), rational(z, 1))
    }

    fn c(re: i64, im: i64) -> Complex<Rational> {
        Complex::new(rational(re, 1), rational(im, 1))
    }

    #[test]
    fn basis_sum() {
        assert_eq!(q(1, 0, 0, 0) + q(0, 1, 0, 0), q(1, 1, 0, 0));
    }

    #[test]
    fn unit_relations() {
        assert_eq!(Q::i() * Q::h(), Q::k());
        assert_eq!(Q::h() * Q::i(), Q::k());
        assert_eq!(Q::i() * Q::i(), -Q::one());
        assert_eq!(Q::h() * Q::h(), -Q::one());
        assert_eq!(Q::k() * Q::k(), Q::one());
    }

    #[test]
    fn one_minus_k_times_one_plus_k_vanishes() {
        assert!((q(1, 0, 0, -1) * q(1, 0, 0, 1)).is_zero());
    }

    #[test]
    fn decompose_examples() {
        assert_eq!(q(3, 0, 0, 0).decompose(), SplitPair::new(c(3, 0), c(3, 0)));
        assert_eq!(Q::i().decompose(), SplitPair::new(c(0, 1), c(0, -1)));
        assert_eq!(Q::g().decompose(), SplitPair::new(c(1, 0), c(0, 0)));
    }

    #[test]
    fn recompose_examples() {
        assert_eq!(Q::recompose(&SplitPair::new(c(1, 0), c(1, 0))), Q::one());
        assert_eq!(Q::recompose(&SplitPair::new(c(1, 0), c(0, 0))), Q::g());
        assert_eq!(Q::recompose(&SplitPair::new(c(0, 0), c(1, 0))), Q::g_prime());
    }

    #[test]
    fn ideal_examples() {
        assert_eq!(Q::g().ideal(), IdealTag::FirstSet);
        let h_plus_i = q(0, 1, 1, 0);
        assert_eq!(h_plus_i.decompose(), SplitPair::new(c(0, 2), c(0, 0)));
        assert_eq!(h_plus_i.ideal(), IdealTag::FirstSet);
        assert_eq!(q(0, 1, -1, 0).ideal(), IdealTag::SecondSet);
        assert_eq!(q(1, 1, 0, 0).ideal(), IdealTag::None);
        assert_eq!(Q::zero().ideal(), IdealTag::Zero);
    }

    #[test]
    fn norm_examples() {
        assert_eq!(Q::one().norm(), 1.0);
        assert_eq!(Q::g().norm(), 0.0);
        assert_eq!(q(1, 1, 0, 0).norm(), 2.0);
        assert_eq!(q(1, 1, 0, 0).norm_sqr(), rational(4, 1));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(Q::one().inverse().unwrap(), Q::one());
        assert_eq!(Q::g().inverse(), Err(BicomplexError::NotInvertible(IdealTag::FirstSet)));
        assert_eq!(Q::zero().inverse(), Err(BicomplexError::NotInvertible(IdealTag::Zero)));
        let a = q(1, 1, 0, 0);
        assert_eq!(a.inverse().unwrap() * a, Q::one());
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(Q::i().conj_i(), -Q::i());
        assert_eq!(Q::k().conj_h(), -Q::k());
        assert_eq!(Q::k().conj_i(), -Q::k());
        assert_eq!(Q::k().conj_ih(), Q::k());
    }

    #[test]
    fn idempotents() {
        let (g, gp) = (Q::g(), Q::g_prime());
        assert_eq!(&g * &g, g);
        assert_eq!(&gp * &gp, gp);
        assert!((&g * &gp).is_zero());
        assert_eq!(&g + &gp, Q::one());
        let k1 = &Q::h() * &g;
        let k2 = -(&Q::h() * &gp);
        assert_eq!(&k1 * &k1, -g.clone());
        assert_eq!(&k1 * &g, k1);
        assert_eq!(&k2 * &k2, -gp.clone());
        assert_eq!(&k2 * &gp, k2);
        // k1 = (h + i)/2, k2 = (-h + i)/2
        assert_eq!(k1, q(0, 1, 1, 0).scale(&rational(1, 2)));
        assert_eq!(k2, q(0, 1, -1, 0).scale(&rational(1, 2)));
    }

    #[test]
    fn float_nullific_tolerance() {
        let g = Bicomplex::<f64>::new(0.5, 1e-14, 0.0, -0.5);
        assert_eq!(g.ideal(), IdealTag::FirstSet);
        let not_quite = Bicomplex::<f64>::new(0.5, 1e-6, 0.0, -0.5);
        assert_eq!(not_quite.ideal(), IdealTag::None);
    }

    #[test]
    fn display() {
        assert_eq!(Q::zero().to_string(), "0");
        assert_eq!(q(1, 0, 0, -1).to_string(), "1 - 1*k");
        assert_eq!(Q::g().to_string(), "1/2 - 1/2*k");
        assert_eq!(q(0, -2, 3, 0).to_string(), "-2*i + 3*h");
        assert_eq!(Bicomplex::<f64>::new(0.5, 0.0, 0.0, 0.1).to_string(), "0.5 + 0.10000000000000001*k");
    }
}
