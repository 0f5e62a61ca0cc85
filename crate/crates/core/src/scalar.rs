//! Scalar backends.
//!
//! Every algebra in this crate is generic over [`Scalar`]. Two kinds of
//! backend exist: exact rationals ([`Rational`]), where identities hold with
//! no tolerance at all, and IEEE floats (`f32`, `f64`), which the root
//! finders need. Operations that have to decide "is this zero?" go through
//! [`Scalar::is_negligible`] so the exact backend never uses a tolerance.

use std::fmt::Debug;
use std::ops::Neg;

use nalgebra::{DMatrix, Schur};
use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, Num, ToPrimitive, Zero};

/// Arbitrary-precision rational number used by the exact backend.
pub type Rational = num_rational::BigRational;

/// Relative tolerance used by the float backends when deciding whether a
/// split component vanishes.
pub const FLOAT_ZERO_TOLERANCE: f64 = 1e-12;

pub trait Scalar:
    Clone + Debug + PartialEq + PartialOrd + Num + Neg<Output = Self> + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
    /// `true` for backends where arithmetic is exact.
    const EXACT: bool;

    fn from_rational(q: &Rational) -> Self;

    /// Exact rational value of `self`, `None` for non-finite floats.
    fn to_rational(&self) -> Option<Rational>;

    /// Decides whether a quantity with squared magnitude `mag_sq` is zero
    /// relative to an element whose squared magnitude is `scale_sq`.
    ///
    /// Exact backends test for zero. Float backends accept
    /// `sqrt(mag_sq) <= 1e-12 * (1 + sqrt(scale_sq))`.
    fn is_negligible(mag_sq: &Self, scale_sq: &Self) -> bool;

    /// Deterministic textual literal: `p/q` for rationals, `%.17g` for floats.
    fn to_literal(&self) -> String;

    fn from_i64(n: i64) -> Self {
        <Self as FromPrimitive>::from_i64(n).expect("every backend represents small integers")
    }

    fn half() -> Self {
        Self::one() / (Self::one() + Self::one())
    }

    fn is_negative(&self) -> bool {
        *self < Self::zero()
    }
}

impl Scalar for Rational {
    const EXACT: bool = true;

    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }

    fn to_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }

    fn is_negligible(mag_sq: &Self, _scale_sq: &Self) -> bool {
        mag_sq.is_zero()
    }

    fn to_literal(&self) -> String {
        self.to_string()
    }
}

macro_rules! impl_float_scalar {
    ($f:ty) => {
        impl Scalar for $f {
            const EXACT: bool = false;

            fn from_rational(q: &Rational) -> Self {
                rational_to_f64(q) as $f
            }

            fn to_rational(&self) -> Option<Rational> {
                Rational::from_float(*self)
            }

            fn is_negligible(mag_sq: &Self, scale_sq: &Self) -> bool {
                let tol = FLOAT_ZERO_TOLERANCE as $f;
                mag_sq.sqrt() <= tol * (1.0 + scale_sq.sqrt())
            }

            fn to_literal(&self) -> String {
                format_g17(*self as f64)
            }
        }
    };
}

impl_float_scalar!(f32);
impl_float_scalar!(f64);

/// Float backends that the numerical solvers run on.
///
/// Call sites use fully qualified `Float::` paths because `Float` and
/// `Scalar` share method names.
pub trait Real: Scalar + Float + FloatConst + Copy {
    /// Eigenvalues of a complex square matrix given row-major, or `None` if
    /// the QR iteration fails to converge.
    fn complex_eigenvalues(n: usize, row_major: &[Complex<Self>]) -> Option<Vec<Complex<Self>>>;
}

macro_rules! impl_real {
    ($f:ty) => {
        impl Real for $f {
            fn complex_eigenvalues(n: usize, row_major: &[Complex<Self>]) -> Option<Vec<Complex<Self>>> {
                let m = DMatrix::from_row_slice(n, n, row_major);
                let schur = Schur::try_new(m, <$f>::EPSILON, 10_000)?;
                let (_, t) = schur.unpack();
                Some((0..n).map(|i| t[(i, i)]).collect())
            }
        }
    };
}

impl_real!(f32);
impl_real!(f64);

/// Converts a rational to the nearest `f64`, also for numerators and
/// denominators beyond the `f64` range.
pub fn rational_to_f64(q: &Rational) -> f64 {
    if let Some(v) = q.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    // Scale both sides down by a common power of two.
    let shift = q.numer().bits().max(q.denom().bits()).saturating_sub(1000);
    let n = (q.numer() >> shift).to_f64().unwrap_or(f64::NAN);
    let d = (q.denom() >> shift).to_f64().unwrap_or(f64::NAN);
    n / d
}

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn complex_to_f64<T: Scalar>(z: &Complex<T>) -> Complex<f64> {
    Complex::new(z.re.to_f64().unwrap_or(f64::NAN), z.im.to_f64().unwrap_or(f64::NAN))
}

/// C-style `%.17g`: 17 significant digits, trailing zeros trimmed,
/// positional notation for exponents in `[-5, 17)`.
pub fn format_g17(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return if x.is_sign_negative() { "-0".into() } else { "0".into() };
    }
    let sci = format!("{:.16e}", x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    let negative = mantissa.starts_with('-');
    let digits: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();
    let sign = if negative { "-" } else { "" };
    if (-5..17).contains(&exp) {
        let body = if exp >= 0 {
            let split = (exp + 1) as usize;
            let (int, frac) = digits.split_at(split);
            if frac.trim_end_matches('0').is_empty() {
                int.to_string()
            } else {
                format!("{}.{}", int, frac.trim_end_matches('0'))
            }
        } else {
            let zeros = "0".repeat((-exp - 1) as usize);
            format!("0.{}{}", zeros, digits.trim_end_matches('0'))
        };
        format!("{}{}", sign, body)
    } else {
        let (lead, rest) = digits.split_at(1);
        let rest = rest.trim_end_matches('0');
        let mant = if rest.is_empty() { lead.to_string() } else { format!("{}.{}", lead, rest) };
        format!("{}{}e{}{:02}", sign, mant, if exp < 0 { "-" } else { "+" }, exp.abs())
    }
}

/// `sum of |re|^2 + |im|^2` over a slice of complex values.
pub(crate) fn complex_norm_sqr_sum<T: Scalar>(values: &[Complex<T>]) -> T {
    values.iter().fold(T::zero(), |acc, z| acc + z.norm_sqr())
}

pub(crate) fn complex_is_negligible<T: Scalar>(z: &Complex<T>, scale_sq: &T) -> bool {
    T::is_negligible(&z.norm_sqr(), scale_sq)
}

pub(crate) fn complex_to_rational<T: Scalar>(z: &Complex<T>) -> Option<Complex<Rational>> {
    Some(Complex::new(z.re.to_rational()?, z.im.to_rational()?))
}
