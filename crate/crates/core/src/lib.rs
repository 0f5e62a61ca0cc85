//! Hypercomplex algebra toolkit: bicomplex numbers and their idempotent
//! split, the multicomplex tower, the four quadruple algebras on
//! `(1, a, b, c)`, biquaternions, polynomial solving over bicomplex and
//! multicomplex coefficients, and congeneric radical equations.
//!
//! Algebras are generic over a [`Scalar`] backend. [`Rational`] gives exact
//! arithmetic; `f64` is used wherever roots have to be approximated.

pub mod bicomplex;
pub mod biquaternion;
pub mod multicomplex;
pub mod polysolve;
pub mod quadruple;
pub mod scalar;
pub mod surd;
pub mod text;

pub use bicomplex::{Bicomplex, BicomplexError, IdealTag, SplitPair};
pub use biquaternion::{Biquaternion, BiquaternionError, MatrixImage};
pub use multicomplex::{Multicomplex, MulticomplexError, SpectrumVector};
pub use polysolve::{BicomplexPolynomial, MulticomplexPolynomial, RootKind, RootSet, SolveError};
pub use quadruple::{CayleyTable, QuadElement, QuadSignature, QuadSystem};
pub use scalar::{Rational, Real, Scalar};
pub use surd::{parse_surd, CongenerReport, SurdEquation, SurdError};

pub type Bicomplex64 = Bicomplex<f64>;
pub type BicomplexQ = Bicomplex<Rational>;
pub type Multicomplex64 = Multicomplex<f64>;
pub type MulticomplexQ = Multicomplex<Rational>;
pub type Biquaternion64 = Biquaternion<f64>;
pub type BiquaternionQ = Biquaternion<Rational>;
pub type QuadElementQ = QuadElement<Rational>;
