mod common;

use common::{rand_bc, rand_q, rng};
use nalgebra::{SMatrix, SVector};
use num_complex::Complex;
use num_traits::{One, Zero};
use rand::Rng;
use tessarine::biquaternion::{solve_quadratic, BiquaternionError};
use tessarine::{Biquaternion, Biquaternion64, Rational};

type BQ = Biquaternion<Rational>;
type C64 = Complex<f64>;

fn rand_bq(r: &mut impl Rng) -> BQ {
    BQ::from_parts([rand_q(r), rand_q(r), rand_q(r), rand_q(r)], [rand_q(r), rand_q(r), rand_q(r), rand_q(r)])
}

// (a₀ + a)(b₀ + b) = a₀b₀ - a·b + a₀b + b₀a + a×b, coefficients complex.
fn quat_mul<T: Clone + std::ops::Mul<Output = T> + std::ops::Add<Output = T> + std::ops::Sub<Output = T>>(
    a: [T; 4],
    b: [T; 4],
) -> [T; 4] {
    let m = |x: &T, y: &T| x.clone() * y.clone();
    [
        m(&a[0], &b[0]) - m(&a[1], &b[1]) - m(&a[2], &b[2]) - m(&a[3], &b[3]),
        m(&a[0], &b[1]) + m(&a[1], &b[0]) + m(&a[2], &b[3]) - m(&a[3], &b[2]),
        m(&a[0], &b[2]) + m(&a[2], &b[0]) + m(&a[3], &b[1]) - m(&a[1], &b[3]),
        m(&a[0], &b[3]) + m(&a[3], &b[0]) + m(&a[1], &b[2]) - m(&a[2], &b[1]),
    ]
}

#[test]
fn product_matches_quaternion_rule() {
    let mut r = rng(51);
    for _ in 0..200 {
        let (a, b) = (rand_bq(&mut r), rand_bq(&mut r));
        assert_eq!((&a * &b).coeffs(), quat_mul(a.coeffs(), b.coeffs()));
    }
    let (i, j, k) = (BQ::i(), BQ::j(), BQ::k());
    assert_eq!(&i * &j, k);
    assert_eq!(&j * &i, -k.clone());
    assert_eq!(&(&i * &j) * &k, -BQ::one());
}

#[test]
fn k_plus_omega_is_a_nullifier() {
    let a = &BQ::k() + &BQ::omega();
    let b = &BQ::k() - &BQ::omega();
    assert!((&a * &b).is_zero());
    assert!(!a.is_zero() && !b.is_zero());
    assert!(a.is_nullifier().unwrap());
    assert!(b.is_nullifier().unwrap());
    assert!(matches!(a.inverse(), Err(BiquaternionError::Singular)));
    assert!(matches!(BQ::zero().is_nullifier(), Err(BiquaternionError::ZeroInput)));
}

fn adjugate(m: [[Complex<Rational>; 2]; 2]) -> [[Complex<Rational>; 2]; 2] {
    let [[a, b], [c, d]] = m;
    [[d, -b], [-c, a]]
}

#[test]
fn nullifiers_are_exactly_the_singular_images() {
    let mut r = rng(52);
    let seed = &BQ::k() + &BQ::omega();
    for _ in 0..100 {
        // Products with a nullifier stay singular; the adjugate then spans
        // the annihilator.
        let a = &(&rand_bq(&mut r) * &seed) * &rand_bq(&mut r);
        if a.is_zero() {
            continue;
        }
        assert!(a.is_nullifier().unwrap());
        let mut image = a.to_matrix();
        image.m = adjugate(image.m);
        let annihilator = BQ::from_matrix(&image);
        assert!(!annihilator.is_zero());
        assert!((&a * &annihilator).is_zero());

        let g = rand_bq(&mut r);
        let det: Complex<Rational> = g.coeffs().iter().fold(Complex::zero(), |acc, c| acc + c * c);
        assert_eq!(g.is_nullifier().unwrap(), det.is_zero());
        if !det.is_zero() {
            assert_eq!(&g * &g.inverse().unwrap(), BQ::one());
        }
    }
}

#[test]
fn matrix_image_is_an_exact_homomorphism() {
    let mut r = rng(53);
    for _ in 0..100 {
        let (a, b) = (rand_bq(&mut r), rand_bq(&mut r));
        assert_eq!((&a * &b).to_matrix(), a.to_matrix().mul(&b.to_matrix()));
        assert_eq!(BQ::from_matrix(&a.to_matrix()), a);
        let det: Complex<Rational> = a.coeffs().iter().fold(Complex::zero(), |acc, c| acc + c * c);
        assert_eq!(a.to_matrix().det(), det);
    }
}

#[test]
fn complanar_biquaternions_are_bicomplex_numbers() {
    let mut r = rng(54);
    let complanar = |r: &mut rand_chacha::ChaCha8Rng| {
        BQ::new(
            Complex::new(rand_q(r), rand_q(r)),
            Complex::new(rand_q(r), rand_q(r)),
            Complex::zero(),
            Complex::zero(),
        )
    };
    for _ in 0..100 {
        let (a, b) = (complanar(&mut r), complanar(&mut r));
        let (ba, bb) = (a.complanar_to_bicomplex().unwrap(), b.complanar_to_bicomplex().unwrap());
        assert_eq!((&a * &b).complanar_to_bicomplex().unwrap(), &ba * &bb);
        assert_eq!((&a + &b).complanar_to_bicomplex().unwrap(), &ba + &bb);

        let x = rand_bc(&mut r);
        assert_eq!(BQ::from_bicomplex(&x).complanar_to_bicomplex().unwrap(), x);
    }
    assert!(matches!(BQ::j().complanar_to_bicomplex(), Err(BiquaternionError::NotComplanar)));
}

fn bq64(c: [(f64, f64); 4]) -> Biquaternion64 {
    Biquaternion64::from_coeffs(c.map(|(re, im)| C64::new(re, im)))
}

fn residual(x: &Biquaternion64, b: &Biquaternion64, c: &Biquaternion64) -> f64 {
    let f = quat_mul(x.coeffs(), x.coeffs());
    let g = quat_mul(x.coeffs(), b.coeffs());
    (0..4).map(|m| (f[m] - g[m] - c.coeffs()[m]).norm_sqr()).sum::<f64>().sqrt()
}

// Newton on the eight real coordinates of q with F(q) = q² - qi - j.
fn newton(start: [f64; 8]) -> Option<[f64; 8]> {
    let (i, j) = (Biquaternion64::i().coeffs(), Biquaternion64::j().coeffs());
    let to_q = |v: &[f64; 8]| -> [C64; 4] { std::array::from_fn(|m| C64::new(v[m], v[m + 4])) };
    let f = |x: [C64; 4]| -> [C64; 4] {
        let (sq, xi) = (quat_mul(x, x), quat_mul(x, i));
        std::array::from_fn(|m| sq[m] - xi[m] - j[m])
    };
    let mut v = start;
    for _ in 0..80 {
        let x = to_q(&v);
        let fx = f(x);
        let norm: f64 = fx.iter().map(C64::norm_sqr).sum::<f64>().sqrt();
        if norm < 1e-13 {
            return Some(v);
        }
        let mut jac = SMatrix::<f64, 8, 8>::zeros();
        for s in 0..8 {
            let mut e = [C64::zero(); 4];
            e[s % 4] = if s < 4 { C64::new(1.0, 0.0) } else { C64::new(0.0, 1.0) };
            let (xe, ex, ei) = (quat_mul(x, e), quat_mul(e, x), quat_mul(e, i));
            for m in 0..4 {
                let d = xe[m] + ex[m] - ei[m];
                jac[(m, s)] = d.re;
                jac[(m + 4, s)] = d.im;
            }
        }
        let rhs = SVector::<f64, 8>::from_fn(|m, _| if m < 4 { -fx[m].re } else { -fx[m - 4].im });
        let step = jac.lu().solve(&rhs)?;
        for m in 0..8 {
            v[m] += step[m];
        }
        if v.iter().any(|t| !t.is_finite() || t.abs() > 1e6) {
            return None;
        }
    }
    None
}

#[test]
fn quadratic_has_six_solutions_confirmed_by_newton() {
    let sols = solve_quadratic(&BQ::i(), &BQ::j()).unwrap();
    assert_eq!(sols.len(), 6);
    assert_eq!(sols.iter().filter(|s| s.real_quaternion).count(), 2);
    let (b, c) = (Biquaternion64::i(), Biquaternion64::j());
    for s in &sols {
        assert!(s.residual <= 1e-9);
        assert!(residual(&s.value, &b, &c) <= 1e-9);
        let (_, omega) = s.value.parts();
        assert_eq!(s.real_quaternion, omega.iter().all(|w| w.abs() < 1e-9));
    }

    let mut r = rng(55);
    let mut clusters: Vec<[f64; 8]> = Vec::new();
    let mut converged = 0;
    for _ in 0..400 {
        let start: [f64; 8] = std::array::from_fn(|_| r.random_range(-3.0..3.0));
        if let Some(v) = newton(start) {
            converged += 1;
            let dist = |w: &[f64; 8]| w.iter().zip(&v).map(|(a, b)| (a - b).powi(2)).sum::<f64>().sqrt();
            if !clusters.iter().any(|w| dist(w) < 1e-6) {
                clusters.push(v);
            }
        }
    }
    assert!(converged >= 200, "only {converged} starts converged");
    assert_eq!(clusters.len(), 6);
    for w in &clusters {
        let close = sols.iter().filter(|s| {
            let (re, im) = s.value.parts();
            re.iter().chain(&im).zip(w).map(|(a, b)| (a - b).powi(2)).sum::<f64>().sqrt() < 1e-6
        });
        assert_eq!(close.count(), 1, "Newton root {w:?} not matched");
    }
}

#[test]
fn closed_forms_satisfy_the_quadratic() {
    let (b, c) = (Biquaternion64::i(), Biquaternion64::j());
    let r3 = 3f64.sqrt();
    let forms = [
        // ½(i - k) ± ½(1 + j)
        bq64([(0.5, 0.0), (0.5, 0.0), (0.5, 0.0), (-0.5, 0.0)]),
        bq64([(-0.5, 0.0), (0.5, 0.0), (-0.5, 0.0), (-0.5, 0.0)]),
        // ½i(1 ∓ √-3) - k
        bq64([(0.0, 0.0), (0.5, -0.5 * r3), (0.0, 0.0), (-1.0, 0.0)]),
        bq64([(0.0, 0.0), (0.5, 0.5 * r3), (0.0, 0.0), (-1.0, 0.0)]),
        // ½(i + k) ± ½(1 - j)√-3
        bq64([(0.0, 0.5 * r3), (0.5, 0.0), (0.0, -0.5 * r3), (0.5, 0.0)]),
        bq64([(0.0, -0.5 * r3), (0.5, 0.0), (0.0, 0.5 * r3), (0.5, 0.0)]),
    ];
    let sols = solve_quadratic(&BQ::i(), &BQ::j()).unwrap();
    for f in &forms {
        assert!(residual(f, &b, &c) < 1e-12, "{f}");
        assert!(sols.iter().any(|s| (&s.value - f).coeff_norm_sqr().sqrt() < 1e-9), "{f} not found");
    }
}

#[test]
fn i_plus_j_variant_is_not_a_solution() {
    // ½(i - k) ± ½(i + j) differs from the real pair above in one unit.
    let (b, c) = (Biquaternion64::i(), Biquaternion64::j());
    for sign in [1.0, -1.0] {
        let x = bq64([(0.0, 0.0), (0.5 + 0.5 * sign, 0.0), (0.5 * sign, 0.0), (-0.5, 0.0)]);
        assert!(residual(&x, &b, &c) > 0.5);
    }
}

#[test]
fn repeated_eigenvalues_are_reported() {
    // q² = -1 has a continuum of solutions.
    let err = solve_quadratic(&BQ::zero(), &-BQ::one()).unwrap_err();
    assert!(matches!(err, BiquaternionError::DegenerateSpectrum { .. }));
}

#[test]
fn exact_and_float_inputs_agree() {
    let a = solve_quadratic(&BQ::i(), &BQ::j()).unwrap();
    let b = solve_quadratic(&Biquaternion64::i(), &Biquaternion64::j()).unwrap();
    assert_eq!(a.len(), b.len());
    for (x, y) in a.iter().zip(&b) {
        assert!((&x.value - &y.value).coeff_norm_sqr() < 1e-20);
    }
}
