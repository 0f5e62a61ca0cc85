//! The multicomplex tower `MC(n)`.
//!
//! `MC(n)` is generated by `n` commuting imaginary units `i₁ … iₙ`, each
//! squaring to `-1`. Coefficients are stored densely, one per subset of
//! units, at the index whose bit `m - 1` is set iff `iₘ` is in the subset
//! (binary counting order: `1, i₁, i₂, i₁i₂, i₃, i₁i₃, …`). `MC(1)` is `ℂ`,
//! `MC(2)` is the bicomplex algebra under `(1, i₁, i₂, i₁i₂) ↔ (1, i, h, k)`,
//! and `MC(3)` is the eight-unit octrine.
//!
//! The split map peels off the lowest unit: `a = A + i₁B` with `A, B` in the
//! subalgebra generated by `i₂ … iₙ`, and `(A + i₂B, A - i₂B)` are the two
//! halves. Recursing down to `ℂ` (the last unit maps to `𝕚`) yields
//! `2^(n-1)` complex components; at `n = 2` this is exactly
//! [`Bicomplex::decompose`](crate::Bicomplex::decompose).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::Zero;
use thiserror::Error;

use crate::bicomplex::{write_linear_combination, Bicomplex};
use crate::scalar::{complex_is_negligible, Scalar};

pub const MAX_ORDER: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MulticomplexError {
    #[error("order mismatch: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("order must be between 1 and {MAX_ORDER}, got {0}")]
    InvalidOrder(usize),
    #[error("order {order} needs {expected} coefficients, got {got}")]
    WrongLength { order: usize, expected: usize, got: usize },
    #[error("input is zero")]
    ZeroInput,
    #[error("spectrum has length {got}, order {order} needs {expected}")]
    WrongSpectrumLength { order: usize, expected: usize, got: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multicomplex<T> {
    order: usize,
    coeffs: Vec<T>,
}

/// Image of a multicomplex number under the full idempotent split.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpectrumVector<T> {
    pub values: Vec<Complex<T>>,
}

/// Sign of `e_S · e_T = (-1)^{|S ∩ T|} e_{S △ T}`.
#[inline]
pub fn basis_product(s: usize, t: usize) -> (bool, usize) {
    ((s & t).count_ones() % 2 == 1, s ^ t)
}

/// Name of basis element `mask`, e.g. `i1i3`; the empty product is `1`.
pub fn basis_name(mask: usize) -> String {
    if mask == 0 {
        return "1".into();
    }
    (0..usize::BITS as usize).filter(|b| mask >> b & 1 == 1).map(|b| format!("i{}", b + 1)).collect()
}

impl<T: Scalar> Multicomplex<T> {
    pub fn zero(order: usize) -> Result<Self, MulticomplexError> {
        check_order(order)?;
        Ok(Multicomplex { order, coeffs: vec![T::zero(); 1 << order] })
    }

    pub fn from_coeffs(order: usize, coeffs: Vec<T>) -> Result<Self, MulticomplexError> {
        check_order(order)?;
        if coeffs.len() != 1 << order {
            return Err(MulticomplexError::WrongLength { order, expected: 1 << order, got: coeffs.len() });
        }
        Ok(Multicomplex { order, coeffs })
    }

    pub fn real(order: usize, c: T) -> Result<Self, MulticomplexError> {
        let mut out = Self::zero(order)?;
        out.coeffs[0] = c;
        Ok(out)
    }

    pub fn one(order: usize) -> Result<Self, MulticomplexError> {
        Self::real(order, T::one())
    }

    /// Basis element for the subset `mask` of units.
    pub fn basis(order: usize, mask: usize) -> Result<Self, MulticomplexError> {
        let mut out = Self::zero(order)?;
        out.coeffs[mask] = T::one();
        Ok(out)
    }

    /// Generator `i_m`, 1-based.
    pub fn unit(order: usize, m: usize) -> Result<Self, MulticomplexError> {
        assert!(m >= 1 && m <= order, "unit index out of range");
        Self::basis(order, 1 << (m - 1))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn coeff_norm_sqr(&self) -> T {
        self.coeffs.iter().fold(T::zero(), |acc, c| acc + c.clone() * c.clone())
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self, MulticomplexError> {
        self.same_order(rhs)?;
        Ok(self.zip_with(rhs, |a, b| a.clone() + b.clone()))
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self, MulticomplexError> {
        self.same_order(rhs)?;
        Ok(self.zip_with(rhs, |a, b| a.clone() - b.clone()))
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self, MulticomplexError> {
        self.same_order(rhs)?;
        let mut out = vec![T::zero(); self.coeffs.len()];
        for (s, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (t, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let (negative, idx) = basis_product(s, t);
                let p = a.clone() * b.clone();
                if negative {
                    out[idx] = out[idx].clone() - p;
                } else {
                    out[idx] = out[idx].clone() + p;
                }
            }
        }
        Ok(Multicomplex { order: self.order, coeffs: out })
    }

    pub fn scale(&self, s: &T) -> Self {
        Multicomplex { order: self.order, coeffs: self.coeffs.iter().map(|c| c.clone() * s.clone()).collect() }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.order).expect("order already validated");
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn split(&self) -> SpectrumVector<T> {
        SpectrumVector { values: split_coeffs(&self.coeffs) }
    }

    pub fn unsplit(order: usize, spectrum: &SpectrumVector<T>) -> Result<Self, MulticomplexError> {
        check_order(order)?;
        let expected = 1 << (order - 1);
        if spectrum.values.len() != expected {
            return Err(MulticomplexError::WrongSpectrumLength { order, expected, got: spectrum.values.len() });
        }
        Ok(Multicomplex { order, coeffs: unsplit_values(&spectrum.values) })
    }

    pub fn is_zero_divisor(&self) -> Result<bool, MulticomplexError> {
        let scale = self.coeff_norm_sqr();
        if T::is_negligible(&scale, &T::zero()) {
            return Err(MulticomplexError::ZeroInput);
        }
        Ok(self.split().values.iter().any(|v| complex_is_negligible(v, &scale)))
    }

    pub fn inverse(&self) -> Option<Self> {
        let scale = self.coeff_norm_sqr();
        let spectrum = self.split();
        if spectrum.values.iter().any(|v| complex_is_negligible(v, &scale)) {
            return None;
        }
        let inv = SpectrumVector { values: spectrum.values.iter().map(|v| v.inv()).collect() };
        Some(Multicomplex { order: self.order, coeffs: unsplit_values(&inv.values) })
    }

    /// The `2^(n-1)` primitive idempotents, in spectrum order.
    pub fn primitive_idempotents(order: usize) -> Result<Vec<Self>, MulticomplexError> {
        check_order(order)?;
        let len = 1 << (order - 1);
        (0..len)
            .map(|j| {
                let values = (0..len)
                    .map(|m| if m == j { Complex::new(T::one(), T::zero()) } else { Complex::zero() })
                    .collect();
                Self::unsplit(order, &SpectrumVector { values })
            })
            .collect()
    }

    pub fn to_bicomplex(&self) -> Option<Bicomplex<T>> {
        (self.order == 2).then(|| Bicomplex::from_array(self.coeffs.clone().try_into().expect("four coefficients")))
    }

    pub fn from_bicomplex(b: &Bicomplex<T>) -> Self {
        Multicomplex { order: 2, coeffs: b.to_array().to_vec() }
    }

    fn same_order(&self, rhs: &Self) -> Result<(), MulticomplexError> {
        if self.order != rhs.order {
            return Err(MulticomplexError::OrderMismatch(self.order, rhs.order));
        }
        Ok(())
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&T, &T) -> T) -> Self {
        Multicomplex { order: self.order, coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| f(a, b)).collect() }
    }
}

fn check_order(order: usize) -> Result<(), MulticomplexError> {
    if order == 0 || order > MAX_ORDER {
        return Err(MulticomplexError::InvalidOrder(order));
    }
    Ok(())
}

// `j·c` for the lowest unit `j` of the algebra holding `c`.
fn times_lowest_unit<T: Scalar>(c: &[T]) -> Vec<T> {
    let mut out = vec![T::zero(); c.len()];
    for (s, v) in c.iter().enumerate() {
        let (negative, idx) = basis_product(1, s);
        out[idx] = if negative { -v.clone() } else { v.clone() };
    }
    out
}

fn split_coeffs<T: Scalar>(c: &[T]) -> Vec<Complex<T>> {
    if c.len() == 2 {
        return vec![Complex::new(c[0].clone(), c[1].clone())];
    }
    // a = A + i₁B; A, B live on the remaining units, relabelled from i₁.
    let a: Vec<T> = c.iter().step_by(2).cloned().collect();
    let b: Vec<T> = c.iter().skip(1).step_by(2).cloned().collect();
    let jb = times_lowest_unit(&b);
    let z: Vec<T> = a.iter().zip(&jb).map(|(p, q)| p.clone() + q.clone()).collect();
    let zp: Vec<T> = a.iter().zip(&jb).map(|(p, q)| p.clone() - q.clone()).collect();
    let mut out = split_coeffs(&z);
    out.extend(split_coeffs(&zp));
    out
}

fn unsplit_values<T: Scalar>(v: &[Complex<T>]) -> Vec<T> {
    if v.len() == 1 {
        return vec![v[0].re.clone(), v[0].im.clone()];
    }
    let (lo, hi) = v.split_at(v.len() / 2);
    let z = unsplit_values(lo);
    let zp = unsplit_values(hi);
    let half = T::half();
    // A = (Z + Z')/2, jB = (Z - Z')/2, B = -j(jB)
    let a: Vec<T> = z.iter().zip(&zp).map(|(p, q)| (p.clone() + q.clone()) * half.clone()).collect();
    let jb: Vec<T> = z.iter().zip(&zp).map(|(p, q)| (p.clone() - q.clone()) * half.clone()).collect();
    let b: Vec<T> = times_lowest_unit(&jb).into_iter().map(|x| -x).collect();
    let mut out = Vec::with_capacity(a.len() * 2);
    for (p, q) in a.into_iter().zip(b) {
        out.push(p);
        out.push(q);
    }
    out
}

impl<T: Scalar> SpectrumVector<T> {
    pub fn new(values: Vec<Complex<T>>) -> Self {
        SpectrumVector { values }
    }
}

impl<'a, T: Scalar> Add<&'a Multicomplex<T>> for &'a Multicomplex<T> {
    type Output = Multicomplex<T>;
    /// Panics on order mismatch; use [`Multicomplex::try_add`] otherwise.
    fn add(self, rhs: &'a Multicomplex<T>) -> Multicomplex<T> {
        self.try_add(rhs).expect("multicomplex orders differ")
    }
}

impl<'a, T: Scalar> Sub<&'a Multicomplex<T>> for &'a Multicomplex<T> {
    type Output = Multicomplex<T>;
    fn sub(self, rhs: &'a Multicomplex<T>) -> Multicomplex<T> {
        self.try_sub(rhs).expect("multicomplex orders differ")
    }
}

impl<'a, T: Scalar> Mul<&'a Multicomplex<T>> for &'a Multicomplex<T> {
    type Output = Multicomplex<T>;
    fn mul(self, rhs: &'a Multicomplex<T>) -> Multicomplex<T> {
        self.try_mul(rhs).expect("multicomplex orders differ")
    }
}

impl<T: Scalar> Neg for Multicomplex<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Multicomplex { order: self.order, coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl<T: Scalar> fmt::Display for Multicomplex<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> =
            (0..self.coeffs.len()).map(|m| if m == 0 { String::new() } else { basis_name(m) }).collect();
        let units: Vec<&str> = names.iter().map(String::as_str).collect();
        let coeffs: Vec<&T> = self.coeffs.iter().collect();
        write_linear_combination(f, &coeffs, &units)
    }
}
