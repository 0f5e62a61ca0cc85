//! Polynomial equations over bicomplex and multicomplex coefficients.
//!
//! Under the idempotent split a polynomial `Σ aₗ zˡ` becomes one complex
//! polynomial per spectrum component, and the equation holds iff every
//! component equation holds. The solution set is therefore the product of
//! the component root sets: `m·m'` roots for bicomplex coefficients whose
//! components have degrees `m` and `m'`, or infinitely many when some
//! component polynomial vanishes identically (every coefficient is a
//! nullific of the same kind).
//!
//! Roots are computed in `f64`. Whenever a component root is a Gaussian
//! rational that satisfies the exact component polynomial, it is also
//! reported exactly, so rational equations such as `z² + 1 = 0` yield exact
//! roots with exact-zero residuals.

pub mod roots;

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::bicomplex::{Bicomplex, SplitPair};
use crate::multicomplex::{Multicomplex, MulticomplexError, SpectrumVector};
use crate::scalar::{
    complex_is_negligible, complex_norm_sqr_sum, complex_to_f64, complex_to_rational, Rational, Scalar,
};

pub use roots::{complex_roots, RootError};

/// Largest denominator tried when recognising a float root as rational.
const MAX_RECOGNISED_DENOMINATOR: i64 = 1 << 20;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SolveError {
    #[error("the zero polynomial has no well-defined root set")]
    ZeroPolynomial,
    #[error("polynomial must have degree at least 1")]
    ConstantPolynomial,
    #[error(transparent)]
    Roots(#[from] RootError),
    #[error(transparent)]
    Multicomplex(#[from] MulticomplexError),
}

/// Complex polynomial, coefficients in ascending degree. An empty
/// coefficient list is the zero polynomial.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexPolynomial<T> {
    pub coeffs: Vec<Complex<T>>,
}

impl<T: Scalar> ComplexPolynomial<T> {
    /// Strips leading coefficients that are negligible relative to the
    /// whole coefficient vector.
    pub fn trimmed(mut coeffs: Vec<Complex<T>>) -> Self {
        let scale = complex_norm_sqr_sum(&coeffs);
        while coeffs.last().is_some_and(|c| complex_is_negligible(c, &scale)) {
            coeffs.pop();
        }
        ComplexPolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, w: &Complex<T>) -> Complex<T> {
        self.coeffs.iter().rev().fold(Complex::zero(), |acc, c| acc * w.clone() + c.clone())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BicomplexPolynomial<T> {
    coeffs: Vec<Bicomplex<T>>,
}

impl<T: Scalar> BicomplexPolynomial<T> {
    /// Coefficients in ascending degree; trailing zeros are dropped.
    pub fn new(mut coeffs: Vec<Bicomplex<T>>) -> Result<Self, SolveError> {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        match coeffs.len() {
            0 => Err(SolveError::ZeroPolynomial),
            1 => Err(SolveError::ConstantPolynomial),
            _ => Ok(BicomplexPolynomial { coeffs }),
        }
    }

    pub fn coeffs(&self) -> &[Bicomplex<T>] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, z: &Bicomplex<T>) -> Bicomplex<T> {
        self.coeffs.iter().rev().fold(Bicomplex::zero(), |acc, c| &(&acc * z) + c)
    }

    pub fn split(&self) -> (ComplexPolynomial<T>, ComplexPolynomial<T>) {
        let (a, b): (Vec<_>, Vec<_>) = self
            .coeffs
            .iter()
            .map(|c| {
                let SplitPair { z1, z2 } = c.decompose();
                (z1, z2)
            })
            .unzip();
        (ComplexPolynomial::trimmed(a), ComplexPolynomial::trimmed(b))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct MulticomplexPolynomial<T> {
    order: usize,
    coeffs: Vec<Multicomplex<T>>,
}

impl<T: Scalar> MulticomplexPolynomial<T> {
    pub fn new(order: usize, mut coeffs: Vec<Multicomplex<T>>) -> Result<Self, SolveError> {
        if let Some(bad) = coeffs.iter().find(|c| c.order() != order) {
            return Err(MulticomplexError::OrderMismatch(order, bad.order()).into());
        }
        Multicomplex::<T>::zero(order)?;
        while coeffs.last().is_some_and(Multicomplex::is_zero) {
            coeffs.pop();
        }
        match coeffs.len() {
            0 => Err(SolveError::ZeroPolynomial),
            1 => Err(SolveError::ConstantPolynomial),
            _ => Ok(MulticomplexPolynomial { order, coeffs }),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[Multicomplex<T>] {
        &self.coeffs
    }

    pub fn eval(&self, z: &Multicomplex<T>) -> Multicomplex<T> {
        let zero = Multicomplex::zero(self.order).expect("order validated");
        self.coeffs.iter().rev().fold(zero, |acc, c| &(&acc * z) + c)
    }

    pub fn split(&self) -> Vec<ComplexPolynomial<T>> {
        let spectra: Vec<SpectrumVector<T>> = self.coeffs.iter().map(Multicomplex::split).collect();
        let width = 1 << (self.order - 1);
        (0..width).map(|j| ComplexPolynomial::trimmed(spectra.iter().map(|s| s.values[j].clone()).collect())).collect()
    }
}

pub fn split_polynomial<T: Scalar>(p: &BicomplexPolynomial<T>) -> (ComplexPolynomial<T>, ComplexPolynomial<T>) {
    p.split()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootKind {
    Finite,
    InfiniteFamily,
}

/// Infinitely many solutions: components listed in `free` are arbitrary,
/// each constrained component takes one of its listed roots.
#[derive(Clone, Debug, PartialEq)]
pub struct RootFamily {
    pub free: Vec<usize>,
    pub constrained: Vec<(usize, Vec<Complex<f64>>)>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FoundRoot<V, X> {
    pub value: V,
    /// Present when every component root was recognised as a Gaussian
    /// rational and verified exactly.
    pub exact: Option<X>,
    pub spectrum: Vec<Complex<f64>>,
    /// `‖p(value)‖`, Euclidean over the coefficient vector, in `f64`.
    pub residual: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RootSet<V, X> {
    pub kind: RootKind,
    /// Effective degree per component; `None` for an identically zero one.
    pub counts: Vec<Option<usize>>,
    pub roots: Vec<FoundRoot<V, X>>,
    pub family: Option<RootFamily>,
}

pub type BicomplexRootSet = RootSet<Bicomplex<f64>, Bicomplex<Rational>>;
pub type MulticomplexRootSet = RootSet<Multicomplex<f64>, Multicomplex<Rational>>;

impl<V, X> RootSet<V, X> {
    /// `Π` of the effective component degrees.
    pub fn expected_count(&self) -> Option<usize> {
        self.counts.iter().try_fold(1usize, |acc, c| c.map(|d| acc * d))
    }
}

/// One solved component: its float roots and, where recognised, exact ones.
struct ComponentRoots {
    float: Vec<Complex<f64>>,
    exact: Vec<Option<Complex<Rational>>>,
}

enum Shape {
    Finite(Vec<ComponentRoots>),
    Family(RootFamily),
}

fn solve_components<T: Scalar>(components: &[ComplexPolynomial<T>]) -> Result<(Vec<Option<usize>>, Shape), SolveError> {
    let counts: Vec<Option<usize>> = components.iter().map(ComplexPolynomial::degree).collect();
    if counts.iter().all(Option::is_none) {
        return Err(SolveError::ZeroPolynomial);
    }
    let mut solved = Vec::with_capacity(components.len());
    for comp in components {
        solved.push(match comp.degree() {
            None => None,
            Some(0) => Some(ComponentRoots { float: vec![], exact: vec![] }),
            Some(_) => Some(solve_component(comp)?),
        });
    }
    // A nonzero constant component has no roots at all, which empties the
    // whole product regardless of any free components.
    let empty = solved.iter().flatten().any(|c| c.float.is_empty());
    if counts.iter().any(Option::is_none) && !empty {
        let free = (0..components.len()).filter(|&j| counts[j].is_none()).collect();
        let constrained = solved.into_iter().enumerate().filter_map(|(j, c)| c.map(|c| (j, c.float))).collect();
        return Ok((counts, Shape::Family(RootFamily { free, constrained })));
    }
    if empty {
        return Ok((counts, Shape::Finite(vec![])));
    }
    Ok((counts, Shape::Finite(solved.into_iter().map(|c| c.expect("no zero components")).collect())))
}

fn solve_component<T: Scalar>(comp: &ComplexPolynomial<T>) -> Result<ComponentRoots, SolveError> {
    let float: Vec<Complex<f64>> = comp.coeffs.iter().map(complex_to_f64).collect();
    let roots = complex_roots(&float)?;
    let exact_poly: Option<Vec<Complex<Rational>>> = comp.coeffs.iter().map(complex_to_rational).collect();
    let exact = roots.iter().map(|r| exact_poly.as_ref().and_then(|p| recognise_exact_root(p, r))).collect();
    Ok(ComponentRoots { float: roots, exact })
}

fn recognise_exact_root(poly: &[Complex<Rational>], approx: &Complex<f64>) -> Option<Complex<Rational>> {
    let candidate = Complex::new(best_rational(approx.re)?, best_rational(approx.im)?);
    let value = poly.iter().rev().fold(Complex::<Rational>::zero(), |acc, c| acc * candidate.clone() + c.clone());
    value.is_zero().then_some(candidate)
}

/// Closest rational with denominator at most `MAX_RECOGNISED_DENOMINATOR`,
/// by continued-fraction convergents.
pub fn best_rational(x: f64) -> Option<Rational> {
    if !x.is_finite() {
        return None;
    }
    if x.abs() < 1e-13 {
        return Some(Rational::zero());
    }
    let (mut h0, mut h1) = (BigInt::zero(), BigInt::one());
    let (mut k0, mut k1) = (BigInt::one(), BigInt::zero());
    let mut rest = x;
    let mut best = None;
    for _ in 0..64 {
        let a = rest.floor();
        let ai = BigInt::from(a as i64);
        let h2 = &ai * &h1 + &h0;
        let k2 = &ai * &k1 + &k0;
        if k2 > BigInt::from(MAX_RECOGNISED_DENOMINATOR) {
            break;
        }
        best = Some(Rational::new(h2.clone(), k2.clone()));
        if (Rational::new(h2.clone(), k2.clone()).to_f64()? - x).abs() <= 1e-14 * x.abs().max(1.0) {
            break;
        }
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        let frac = rest - a;
        if frac.abs() < 1e-15 {
            break;
        }
        rest = 1.0 / frac;
    }
    best.filter(|q: &Rational| q.numer().abs() < BigInt::from(1i64 << 53))
}

fn spectrum_cmp(a: &[Complex<f64>], b: &[Complex<f64>]) -> Ordering {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.re.total_cmp(&y.re).then(x.im.total_cmp(&y.im)))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

/// All index tuples `(j₀, j₁, …)` over the component root lists.
fn cartesian(lens: &[usize]) -> Vec<Vec<usize>> {
    lens.iter().fold(vec![vec![]], |acc, &n| {
        acc.into_iter().flat_map(|prefix| (0..n).map(move |j| [prefix.clone(), vec![j]].concat())).collect()
    })
}

fn assemble<V, X>(
    counts: Vec<Option<usize>>,
    shape: Shape,
    build_float: impl Fn(&[Complex<f64>]) -> V,
    build_exact: impl Fn(&[Complex<Rational>]) -> X,
    residual: impl Fn(&V) -> f64,
) -> RootSet<V, X> {
    let comps = match shape {
        Shape::Family(family) => {
            return RootSet { kind: RootKind::InfiniteFamily, counts, roots: vec![], family: Some(family) }
        }
        Shape::Finite(c) => c,
    };
    let lens: Vec<usize> = comps.iter().map(|c| c.float.len()).collect();
    let mut roots: Vec<FoundRoot<V, X>> = if comps.is_empty() || lens.contains(&0) {
        vec![]
    } else {
        cartesian(&lens)
            .into_iter()
            .map(|pick| {
                let spectrum: Vec<Complex<f64>> = pick.iter().zip(&comps).map(|(&j, c)| c.float[j]).collect();
                let exact_parts: Option<Vec<Complex<Rational>>> =
                    pick.iter().zip(&comps).map(|(&j, c)| c.exact[j].clone()).collect();
                let value = build_float(&spectrum);
                let residual = residual(&value);
                FoundRoot { value, exact: exact_parts.map(|p| build_exact(&p)), spectrum, residual }
            })
            .collect()
    };
    roots.sort_by(|a, b| spectrum_cmp(&a.spectrum, &b.spectrum));
    RootSet { kind: RootKind::Finite, counts, roots, family: None }
}

pub fn solve<T: Scalar>(p: &BicomplexPolynomial<T>) -> Result<BicomplexRootSet, SolveError> {
    let (a, b) = p.split();
    let (counts, shape) = solve_components(&[a, b])?;
    let float_poly: Vec<Bicomplex<f64>> = p.coeffs.iter().map(|c| c.map(|v| v.to_f64().unwrap_or(f64::NAN))).collect();
    Ok(assemble(
        counts,
        shape,
        |s| Bicomplex::recompose(&SplitPair::new(s[0], s[1])),
        |s| Bicomplex::recompose(&SplitPair::new(s[0].clone(), s[1].clone())),
        |r| {
            let value = float_poly.iter().rev().fold(Bicomplex::zero(), |acc, c| &(&acc * r) + c);
            value.coeff_norm_sqr().sqrt()
        },
    ))
}

pub fn mc_solve<T: Scalar>(p: &MulticomplexPolynomial<T>) -> Result<MulticomplexRootSet, SolveError> {
    let order = p.order;
    let (counts, shape) = solve_components(&p.split())?;
    let float_poly: Vec<Multicomplex<f64>> = p
        .coeffs
        .iter()
        .map(|c| {
            let v = c.coeffs().iter().map(|x| x.to_f64().unwrap_or(f64::NAN)).collect();
            Multicomplex::from_coeffs(order, v).expect("order validated")
        })
        .collect();
    Ok(assemble(
        counts,
        shape,
        |s| Multicomplex::unsplit(order, &SpectrumVector::new(s.to_vec())).expect("spectrum length matches"),
        |s| Multicomplex::unsplit(order, &SpectrumVector::new(s.to_vec())).expect("spectrum length matches"),
        |r| {
            let zero = Multicomplex::zero(order).expect("order validated");
            let value = float_poly.iter().rev().fold(zero, |acc, c| &(&acc * r) + c);
            value.coeff_norm_sqr().sqrt()
        },
    ))
}
