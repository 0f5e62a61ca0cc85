//! All roots of a complex polynomial.
//!
//! Aberth–Ehrlich simultaneous iteration started on a rotated circle whose
//! radius is clamped between the Cauchy lower and upper root bounds. If the
//! iteration stalls, the eigenvalues of the companion matrix are used
//! instead. Either way the roots get a Newton polish and must pass a
//! backward-error residual test before being returned.

use num_complex::Complex;
use num_traits::{Float, Zero};
use thiserror::Error;

use crate::scalar::Real;

const MAX_ITERATIONS: usize = 500;
/// Required `|q(r)| / Σ|aᵢ||r|ⁱ`.
pub const RESIDUAL_TOLERANCE: f64 = 1e-10;
/// Roots closer than this (relative to `max(1, |r|)`) merge into one
/// cluster of summed multiplicity.
pub const CLUSTER_RADIUS: f64 = 1e-7;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RootError {
    #[error("polynomial must have degree at least 1 and a nonzero leading coefficient")]
    InvalidPolynomial,
    #[error(
        "root iteration did not converge after {iterations} iterations \
         (last correction {max_correction:e}, worst relative residual {max_residual:e})"
    )]
    NoConvergence { iterations: usize, max_correction: f64, max_residual: f64 },
}

/// Roots of `Σ coeffs[l]·wˡ` with multiplicity (`deg` values). Members of a
/// cluster are replaced by the cluster centroid.
pub fn complex_roots<F: Real>(coeffs: &[Complex<F>]) -> Result<Vec<Complex<F>>, RootError> {
    if coeffs.len() < 2 || coeffs.last().is_none_or(|c| c.is_zero()) {
        return Err(RootError::InvalidPolynomial);
    }
    let zero_roots = coeffs.iter().take_while(|c| c.is_zero()).count();
    let reduced = &coeffs[zero_roots..];
    let mut roots = vec![Complex::zero(); zero_roots];
    if reduced.len() == 1 {
        return Ok(roots);
    }
    if reduced.len() == 2 {
        roots.push(-reduced[0] / reduced[1]);
        return Ok(roots);
    }

    let aberth = aberth_ehrlich(reduced);
    let mut found = match aberth {
        Ok(r) => r,
        Err(first_failure) => companion_roots(reduced).ok_or(first_failure)?,
    };
    for r in found.iter_mut() {
        *r = polish(reduced, *r);
    }
    let worst = worst_residual(reduced, &found);
    if worst.is_nan() || worst > residual_tolerance::<F>() {
        // Aberth converged to something the residual test rejects; try the
        // companion matrix before giving up.
        let mut alt = companion_roots(reduced).ok_or(RootError::NoConvergence {
            iterations: MAX_ITERATIONS,
            max_correction: f64::NAN,
            max_residual: worst,
        })?;
        for r in alt.iter_mut() {
            *r = polish(reduced, *r);
        }
        let alt_worst = worst_residual(reduced, &alt);
        if alt_worst.is_nan() || alt_worst > residual_tolerance::<F>() {
            return Err(RootError::NoConvergence {
                iterations: MAX_ITERATIONS,
                max_correction: f64::NAN,
                max_residual: alt_worst.min(worst),
            });
        }
        found = alt;
    }
    roots.extend(cluster(found));
    Ok(roots)
}

fn residual_tolerance<F: Real>() -> f64 {
    RESIDUAL_TOLERANCE.max(1e3 * <F as Float>::epsilon().to_f64().unwrap_or(0.0))
}

/// `(q(w), q'(w))` by nested multiplication.
fn eval_with_derivative<F: Real>(coeffs: &[Complex<F>], w: Complex<F>) -> (Complex<F>, Complex<F>) {
    let mut p = Complex::zero();
    let mut dp = Complex::zero();
    for c in coeffs.iter().rev() {
        dp = dp * w + p;
        p = p * w + c;
    }
    (p, dp)
}

/// `|q(w)| / Σ|aᵢ||w|ⁱ`.
pub fn relative_residual<F: Real>(coeffs: &[Complex<F>], w: Complex<F>) -> f64 {
    let r = w.norm();
    let mut p: Complex<F> = Complex::zero();
    let mut scale = F::zero();
    for c in coeffs.iter().rev() {
        p = p * w + c;
        scale = scale * r + c.norm();
    }
    if scale.is_zero() {
        return 0.0;
    }
    (p.norm() / scale).to_f64().unwrap_or(f64::NAN)
}

fn worst_residual<F: Real>(coeffs: &[Complex<F>], roots: &[Complex<F>]) -> f64 {
    roots.iter().map(|&r| relative_residual(coeffs, r)).fold(0.0, f64::max)
}

fn initial_radius<F: Real>(coeffs: &[Complex<F>]) -> F {
    let n = coeffs.len() - 1;
    let lead = coeffs[n].norm();
    let a0 = coeffs[0].norm();
    let max_upper = coeffs[..n].iter().map(|c| c.norm()).fold(F::zero(), F::max);
    let max_lower = coeffs[1..].iter().map(|c| c.norm()).fold(F::zero(), F::max);
    let upper = F::one() + max_upper / lead;
    let lower = a0 / (a0 + max_lower);
    let nf = F::from(n).expect("degree fits");
    Float::powf(a0 / lead, F::one() / nf).max(lower).min(upper)
}

fn aberth_ehrlich<F: Real>(coeffs: &[Complex<F>]) -> Result<Vec<Complex<F>>, RootError> {
    let n = coeffs.len() - 1;
    let radius = initial_radius(coeffs);
    let two_pi = F::TAU();
    let offset = F::from(0.4).expect("constant");
    let nf = F::from(n).expect("degree fits");
    let mut z: Vec<Complex<F>> = (0..n)
        .map(|k| {
            let theta = two_pi * F::from(k).expect("index fits") / nf + offset;
            Complex::from_polar(radius, theta)
        })
        .collect();
    let mut done = vec![false; n];
    let eps = <F as Float>::epsilon() * F::from(4.0).expect("constant");
    let mut max_correction = F::zero();
    for _ in 0..MAX_ITERATIONS {
        max_correction = F::zero();
        for k in 0..n {
            if done[k] {
                continue;
            }
            let (p, dp) = eval_with_derivative(coeffs, z[k]);
            if p.is_zero() {
                done[k] = true;
                continue;
            }
            let ratio = p / dp;
            let mut repulsion = Complex::zero();
            for (j, &zj) in z.iter().enumerate() {
                if j != k {
                    let d = z[k] - zj;
                    if !d.is_zero() {
                        repulsion = repulsion + d.inv();
                    }
                }
            }
            let denom = Complex::new(F::one(), F::zero()) - ratio * repulsion;
            let correction =
                if denom.is_zero() || !ratio.re.is_finite() || !ratio.im.is_finite() { ratio } else { ratio / denom };
            if !correction.re.is_finite() || !correction.im.is_finite() {
                continue;
            }
            z[k] = z[k] - correction;
            let size = correction.norm();
            max_correction = max_correction.max(size);
            if size <= eps * z[k].norm().max(F::min_positive_value()) {
                done[k] = true;
            }
        }
        if done.iter().all(|&d| d) {
            return Ok(z);
        }
    }
    // Stalled corrections on clustered roots can still leave valid roots.
    if worst_residual(coeffs, &z) <= residual_tolerance::<F>() {
        return Ok(z);
    }
    Err(RootError::NoConvergence {
        iterations: MAX_ITERATIONS,
        max_correction: max_correction.to_f64().unwrap_or(f64::NAN),
        max_residual: worst_residual(coeffs, &z),
    })
}

fn companion_roots<F: Real>(coeffs: &[Complex<F>]) -> Option<Vec<Complex<F>>> {
    let n = coeffs.len() - 1;
    let lead = coeffs[n];
    let mut m = vec![Complex::zero(); n * n];
    for c in 0..n {
        m[c] = -coeffs[n - 1 - c] / lead;
    }
    for r in 1..n {
        m[r * n + r - 1] = Complex::new(F::one(), F::zero());
    }
    F::complex_eigenvalues(n, &m)
}

fn polish<F: Real>(coeffs: &[Complex<F>], mut w: Complex<F>) -> Complex<F> {
    let mut best = relative_residual(coeffs, w);
    for _ in 0..3 {
        let (p, dp) = eval_with_derivative(coeffs, w);
        if p.is_zero() || dp.is_zero() {
            break;
        }
        let next = w - p / dp;
        let res = relative_residual(coeffs, next);
        if res < best {
            best = res;
            w = next;
        } else {
            break;
        }
    }
    w
}

fn cluster<F: Real>(roots: Vec<Complex<F>>) -> Vec<Complex<F>> {
    let n = roots.len();
    let radius = F::from(CLUSTER_RADIUS).expect("constant");
    let mut label: Vec<usize> = (0..n).collect();
    fn find(label: &mut [usize], mut i: usize) -> usize {
        while label[i] != i {
            label[i] = label[label[i]];
            i = label[i];
        }
        i
    }
    for a in 0..n {
        for b in a + 1..n {
            let scale = roots[a].norm().max(roots[b].norm()).max(F::one());
            if (roots[a] - roots[b]).norm() <= radius * scale {
                let (ra, rb) = (find(&mut label, a), find(&mut label, b));
                label[ra.max(rb)] = ra.min(rb);
            }
        }
    }
    let owner: Vec<usize> = (0..n).map(|i| find(&mut label, i)).collect();
    (0..n)
        .map(|i| {
            let members: Vec<usize> = (0..n).filter(|&j| owner[j] == owner[i]).collect();
            let sum = members.iter().fold(Complex::zero(), |acc, &j| acc + roots[j]);
            sum / F::from(members.len()).expect("count fits")
        })
        .collect()
}
