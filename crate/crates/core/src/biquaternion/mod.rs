//! Biquaternions: quaternions whose coefficients are complex scalars.
//!
//! The scalar imaginary `ω` commutes with `i, j, k` and is stored as the
//! imaginary part of each [`Complex`] coefficient, so
//! `c₀ + c₁i + c₂j + c₃k = q′ + ωq″` with `q′` the real parts and `q″` the
//! imaginary parts.
//!
//! The algebra is isomorphic to the 2×2 complex matrices through the fixed
//! representation
//!
//! ```text
//! ρ(i) = diag(𝕚, -𝕚)   ρ(j) = [[0, 1], [-1, 0]]   ρ(k) = [[0, 𝕚], [𝕚, 0]]   ρ(ω) = 𝕚·I
//! ```
//!
//! so `det ρ(q) = c₀² + c₁² + c₂² + c₃²` and `q` is a nullifier exactly when
//! that sum vanishes.

mod quadratic;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::bicomplex::Bicomplex;
use crate::polysolve::RootError;
use crate::scalar::{complex_norm_sqr_sum, Scalar};

pub use quadratic::{solve_quadratic, QuadraticSolution, DEDUP_RADIUS};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BiquaternionError {
    #[error("input is zero")]
    ZeroInput,
    #[error("biquaternion has a j or k component and is not complanar with i")]
    NotComplanar,
    #[error("matrix is singular")]
    Singular,
    #[error("repeated eigenvalues {eigenvalues:?}: the solution set is not a finite list of isolated solvents")]
    DegenerateSpectrum { eigenvalues: Vec<Complex<f64>> },
    #[error(transparent)]
    Roots(#[from] RootError),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Biquaternion<T> {
    pub c0: Complex<T>,
    pub c1: Complex<T>,
    pub c2: Complex<T>,
    pub c3: Complex<T>,
}

/// Image of a biquaternion under `ρ`, row major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixImage<T> {
    pub m: [[Complex<T>; 2]; 2],
}

fn imag_unit<T: Scalar>() -> Complex<T> {
    Complex::new(T::zero(), T::one())
}

impl<T: Scalar> MatrixImage<T> {
    pub fn identity() -> Self {
        let (o, z) = (Complex::one(), Complex::zero());
        MatrixImage { m: [[o.clone(), z.clone()], [z, o]] }
    }

    pub fn det(&self) -> Complex<T> {
        let m = &self.m;
        m[0][0].clone() * m[1][1].clone() - m[0][1].clone() * m[1][0].clone()
    }

    pub fn transpose(&self) -> Self {
        let m = &self.m;
        MatrixImage { m: [[m[0][0].clone(), m[1][0].clone()], [m[0][1].clone(), m[1][1].clone()]] }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let (a, b) = (&self.m, &rhs.m);
        let entry = |r: usize, c: usize| a[r][0].clone() * b[0][c].clone() + a[r][1].clone() * b[1][c].clone();
        MatrixImage { m: [[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]] }
    }
}

impl<T: Scalar> Biquaternion<T> {
    pub fn new(c0: Complex<T>, c1: Complex<T>, c2: Complex<T>, c3: Complex<T>) -> Self {
        Biquaternion { c0, c1, c2, c3 }
    }

    /// `q′ + ωq″` from the two real quaternions `[w, x, y, z]`.
    pub fn from_parts(real: [T; 4], omega: [T; 4]) -> Self {
        let [a0, a1, a2, a3] = real;
        let [b0, b1, b2, b3] = omega;
        Biquaternion::new(Complex::new(a0, b0), Complex::new(a1, b1), Complex::new(a2, b2), Complex::new(a3, b3))
    }

    /// Inverse of [`from_parts`](Self::from_parts).
    pub fn parts(&self) -> ([T; 4], [T; 4]) {
        let c = self.coeffs();
        (c.clone().map(|z| z.re), c.map(|z| z.im))
    }

    pub fn coeffs(&self) -> [Complex<T>; 4] {
        [self.c0.clone(), self.c1.clone(), self.c2.clone(), self.c3.clone()]
    }

    pub fn from_coeffs([c0, c1, c2, c3]: [Complex<T>; 4]) -> Self {
        Biquaternion { c0, c1, c2, c3 }
    }

    pub fn scalar(c: Complex<T>) -> Self {
        Biquaternion::new(c, Complex::zero(), Complex::zero(), Complex::zero())
    }

    pub fn omega() -> Self {
        Self::scalar(imag_unit())
    }

    pub fn i() -> Self {
        Biquaternion::new(Complex::zero(), Complex::one(), Complex::zero(), Complex::zero())
    }

    pub fn j() -> Self {
        Biquaternion::new(Complex::zero(), Complex::zero(), Complex::one(), Complex::zero())
    }

    pub fn k() -> Self {
        Biquaternion::new(Complex::zero(), Complex::zero(), Complex::zero(), Complex::one())
    }

    /// Basis `1, i, j, k` for `n = 0..4`.
    pub fn basis(n: usize) -> Self {
        let mut c: [Complex<T>; 4] = std::array::from_fn(|_| Complex::zero());
        c[n] = Complex::one();
        Self::from_coeffs(c)
    }

    /// `true` when every `ω`-part is zero.
    pub fn is_real_quaternion(&self) -> bool {
        self.coeffs().iter().all(|c| c.im.is_zero())
    }

    pub fn coeff_norm_sqr(&self) -> T {
        complex_norm_sqr_sum(&self.coeffs())
    }

    /// Quaternion conjugate `c₀ - c₁i - c₂j - c₃k`; `ω` is left alone.
    pub fn conj(&self) -> Self {
        Biquaternion::new(self.c0.clone(), -self.c1.clone(), -self.c2.clone(), -self.c3.clone())
    }

    /// `q·conj(q) = c₀² + c₁² + c₂² + c₃²`, a complex scalar.
    pub fn scalar_norm(&self) -> Complex<T> {
        self.coeffs().into_iter().fold(Complex::zero(), |acc, c| acc + c.clone() * c)
    }

    pub fn scale(&self, s: &Complex<T>) -> Self {
        Self::from_coeffs(self.coeffs().map(|c| c * s.clone()))
    }

    pub fn is_nullifier(&self) -> Result<bool, BiquaternionError> {
        if self.is_zero() {
            return Err(BiquaternionError::ZeroInput);
        }
        let scale = self.coeff_norm_sqr();
        Ok(T::is_negligible(&self.to_matrix().det().norm_sqr(), &(scale.clone() * scale)))
    }

    pub fn inverse(&self) -> Result<Self, BiquaternionError> {
        if self.is_nullifier()? {
            return Err(BiquaternionError::Singular);
        }
        let n = self.scalar_norm();
        Ok(self.conj().scale(&(Complex::<T>::one() / n)))
    }

    pub fn to_matrix(&self) -> MatrixImage<T> {
        let u = imag_unit::<T>();
        let (c0, c1, c2, c3) = (self.c0.clone(), self.c1.clone(), self.c2.clone(), self.c3.clone());
        MatrixImage {
            m: [
                [c0.clone() + u.clone() * c1.clone(), c2.clone() + u.clone() * c3.clone()],
                [-c2 + u.clone() * c3, c0 - u * c1],
            ],
        }
    }

    pub fn from_matrix(image: &MatrixImage<T>) -> Self {
        let [[m00, m01], [m10, m11]] = image.m.clone();
        let half = Complex::new(T::half(), T::zero());
        let minus_half_u = Complex::new(T::zero(), -T::half());
        Biquaternion::new(
            (m00.clone() + m11.clone()) * half.clone(),
            (m00 - m11) * minus_half_u.clone(),
            (m01.clone() - m10.clone()) * half,
            (m01 + m10) * minus_half_u,
        )
    }

    /// `(p + ωq) + (r + ωs)i ↦ p + r·i + q·h + s·k`: `ω ↦ h`, `i ↦ i`.
    pub fn complanar_to_bicomplex(&self) -> Result<Bicomplex<T>, BiquaternionError> {
        if !(Zero::is_zero(&self.c2) && Zero::is_zero(&self.c3)) {
            return Err(BiquaternionError::NotComplanar);
        }
        Ok(Bicomplex::new(self.c0.re.clone(), self.c1.re.clone(), self.c0.im.clone(), self.c1.im.clone()))
    }

    pub fn from_bicomplex(b: &Bicomplex<T>) -> Self {
        Biquaternion::new(
            Complex::new(b.w.clone(), b.y.clone()),
            Complex::new(b.x.clone(), b.z.clone()),
            Complex::zero(),
            Complex::zero(),
        )
    }

    pub fn map<U, F: Fn(&T) -> U>(&self, f: F) -> Biquaternion<U> {
        let c = |z: &Complex<T>| Complex::new(f(&z.re), f(&z.im));
        Biquaternion { c0: c(&self.c0), c1: c(&self.c1), c2: c(&self.c2), c3: c(&self.c3) }
    }
}

impl<T: Scalar> Zero for Biquaternion<T> {
    fn zero() -> Self {
        Self::scalar(Complex::zero())
    }

    fn is_zero(&self) -> bool {
        self.coeffs().iter().all(Zero::is_zero)
    }
}

impl<T: Scalar> One for Biquaternion<T> {
    fn one() -> Self {
        Self::scalar(Complex::one())
    }
}

impl<T: Scalar> Add for &Biquaternion<T> {
    type Output = Biquaternion<T>;
    fn add(self, rhs: Self) -> Biquaternion<T> {
        Biquaternion::new(
            self.c0.clone() + rhs.c0.clone(),
            self.c1.clone() + rhs.c1.clone(),
            self.c2.clone() + rhs.c2.clone(),
            self.c3.clone() + rhs.c3.clone(),
        )
    }
}

impl<T: Scalar> Sub for &Biquaternion<T> {
    type Output = Biquaternion<T>;
    fn sub(self, rhs: Self) -> Biquaternion<T> {
        self + &(-rhs)
    }
}

impl<T: Scalar> Neg for &Biquaternion<T> {
    type Output = Biquaternion<T>;
    fn neg(self) -> Biquaternion<T> {
        Biquaternion::from_coeffs(self.coeffs().map(|c| -c))
    }
}

impl<T: Scalar> Mul for &Biquaternion<T> {
    type Output = Biquaternion<T>;
    fn mul(self, rhs: Self) -> Biquaternion<T> {
        let [a0, a1, a2, a3] = self.coeffs();
        let [b0, b1, b2, b3] = rhs.coeffs();
        let p = |x: &Complex<T>, y: &Complex<T>| x.clone() * y.clone();
        Biquaternion::new(
            p(&a0, &b0) - p(&a1, &b1) - p(&a2, &b2) - p(&a3, &b3),
            p(&a0, &b1) + p(&a1, &b0) + p(&a2, &b3) - p(&a3, &b2),
            p(&a0, &b2) - p(&a1, &b3) + p(&a2, &b0) + p(&a3, &b1),
            p(&a0, &b3) + p(&a1, &b2) - p(&a2, &b1) + p(&a3, &b0),
        )
    }
}

macro_rules! forward_by_value {
    ($($tr:ident $m:ident),*) => {$(
        impl<T: Scalar> $tr for Biquaternion<T> {
            type Output = Biquaternion<T>;
            fn $m(self, rhs: Self) -> Biquaternion<T> {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_by_value!(Add add, Sub sub, Mul mul);

impl<T: Scalar> Neg for Biquaternion<T> {
    type Output = Biquaternion<T>;
    fn neg(self) -> Biquaternion<T> {
        -&self
    }
}

/// `(re,im) + (re,im)*i + (re,im)*j + (re,im)*k`, zero terms omitted.
impl<T: Scalar> fmt::Display for Biquaternion<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let units = ["", "*i", "*j", "*k"];
        let mut first = true;
        for (c, unit) in self.coeffs().iter().zip(units) {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            write!(f, "({},{}){}", c.re.to_literal(), c.im.to_literal(), unit)?;
            first = false;
        }
        if first {
            f.write_str("(0,0)")?;
        }
        Ok(())
    }
}
