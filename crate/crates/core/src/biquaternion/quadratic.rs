//! Solving `q² = q·b + c`.
//!
//! With `X = ρ(q)` the equation reads `X² = X·B + C`; transposing gives the
//! monic matrix quadratic `Y² - BᵀY - Cᵀ = 0` in `Y = Xᵀ`. Its λ-matrix
//! `P(λ) = λ²I - λBᵀ - Cᵀ` has `det P` of degree 4. For each eigenvalue `λ`
//! pick `v` with `P(λ)v = 0` (the top half of the block-companion
//! eigenvector `[v; λv]`). Any two eigenpairs with independent `v`
//! give a solvent `Y = V·diag(λ)·V⁻¹`, hence up to `C(4,2) = 6` solutions.

use num_complex::Complex;
use num_traits::Zero;

use super::{Biquaternion, BiquaternionError, MatrixImage};
use crate::polysolve::complex_roots;
use crate::scalar::Scalar;

/// Solutions closer than `DEDUP_RADIUS·(1 + ‖q‖)` are the same solution.
pub const DEDUP_RADIUS: f64 = 1e-7;
/// Eigenvalues closer than this (relative) count as repeated.
const REPEAT_RADIUS: f64 = 1e-6;
/// `|det V|` below this (unit columns) means dependent eigenvectors.
const INDEPENDENCE_TOLERANCE: f64 = 1e-8;
/// Imaginary parts below this (relative) are read as a real quaternion.
const REAL_TOLERANCE: f64 = 1e-9;

type C64 = Complex<f64>;

#[derive(Clone, Debug, PartialEq)]
pub struct QuadraticSolution {
    pub value: Biquaternion<f64>,
    /// `‖q² - q·b - c‖` over the eight real coordinates.
    pub residual: f64,
    /// All `ω`-parts vanish.
    pub real_quaternion: bool,
    /// The eigenvalue pair this solvent was built from.
    pub eigenvalues: [C64; 2],
}

fn poly_mul(a: &[C64], b: &[C64]) -> Vec<C64> {
    let mut out = vec![C64::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn norm(q: &Biquaternion<f64>) -> f64 {
    q.coeff_norm_sqr().sqrt()
}

fn null_vector(p: [[C64; 2]; 2]) -> [C64; 2] {
    let row =
        if p[0][0].norm_sqr() + p[0][1].norm_sqr() >= p[1][0].norm_sqr() + p[1][1].norm_sqr() { p[0] } else { p[1] };
    let v = [-row[1], row[0]];
    let len = (v[0].norm_sqr() + v[1].norm_sqr()).sqrt();
    [v[0] / len, v[1] / len]
}

pub fn solve_quadratic<T: Scalar>(
    b: &Biquaternion<T>,
    c: &Biquaternion<T>,
) -> Result<Vec<QuadraticSolution>, BiquaternionError> {
    let to_f = |v: &T| v.to_f64().unwrap_or(f64::NAN);
    let (b, c) = (b.map(to_f), c.map(to_f));
    let bt = b.to_matrix().transpose().m;
    let ct = c.to_matrix().transpose().m;

    // Entry (r, s) of P(λ) as ascending coefficients.
    let entry = |r: usize, s: usize| {
        let lead = if r == s { C64::new(1.0, 0.0) } else { C64::zero() };
        vec![-ct[r][s], -bt[r][s], lead]
    };
    let det: Vec<C64> = poly_mul(&entry(0, 0), &entry(1, 1))
        .into_iter()
        .zip(poly_mul(&entry(0, 1), &entry(1, 0)))
        .map(|(x, y)| x - y)
        .collect();
    let lambdas = complex_roots(&det)?;

    let repeated = lambdas.iter().enumerate().any(|(n, x)| {
        lambdas[n + 1..].iter().any(|y| (x - y).norm() <= REPEAT_RADIUS * x.norm().max(y.norm()).max(1.0))
    });
    if repeated {
        return Err(BiquaternionError::DegenerateSpectrum { eigenvalues: lambdas });
    }

    let vectors: Vec<[C64; 2]> = lambdas
        .iter()
        .map(|&l| {
            let p = |r: usize, s: usize| {
                let e = entry(r, s);
                e[0] + e[1] * l + e[2] * l * l
            };
            null_vector([[p(0, 0), p(0, 1)], [p(1, 0), p(1, 1)]])
        })
        .collect();

    let scale = 1.0 + norm(&b) + norm(&c);
    let mut solutions: Vec<QuadraticSolution> = Vec::new();
    for x in 0..lambdas.len() {
        for y in x + 1..lambdas.len() {
            let (u, v) = (vectors[x], vectors[y]);
            let det_v = u[0] * v[1] - v[0] * u[1];
            if det_v.norm() <= INDEPENDENCE_TOLERANCE {
                continue;
            }
            let (lu, lv) = (lambdas[x], lambdas[y]);
            // V·diag(lu, lv)·V⁻¹ with V = [u v].
            let inv = [[v[1] / det_v, -v[0] / det_v], [-u[1] / det_v, u[0] / det_v]];
            let s = |r: usize, col: usize| u[r] * lu * inv[0][col] + v[r] * lv * inv[1][col];
            let solvent = MatrixImage { m: [[s(0, 0), s(0, 1)], [s(1, 0), s(1, 1)]] };
            let q = Biquaternion::from_matrix(&solvent.transpose());
            let size = 1.0 + norm(&q);
            if solutions.iter().any(|other| norm(&(&other.value - &q)) <= DEDUP_RADIUS * size) {
                continue;
            }
            let residual = norm(&(&(&(&q * &q) - &(&q * &b)) - &c));
            let real_quaternion = q.coeffs().iter().all(|z| z.im.abs() <= REAL_TOLERANCE * size);
            debug_assert!(residual <= 1e-6 * scale, "solvent residual {residual}");
            solutions.push(QuadraticSolution { value: q, residual, real_quaternion, eigenvalues: [lu, lv] });
        }
    }
    solutions.sort_by(|a, b| {
        let key = |q: &Biquaternion<f64>| q.coeffs().map(|z| [z.re, z.im]).concat();
        key(&a.value)
            .iter()
            .zip(key(&b.value).iter())
            .map(|(x, y)| x.total_cmp(y))
            .find(|o| o.is_ne())
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    Ok(solutions)
}
