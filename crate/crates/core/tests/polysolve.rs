mod common;

use common::{q, rand_q, rng};
use num_complex::Complex;
use num_traits::{One, Zero};
use tessarine::polysolve::{best_rational, solve, SolveError};
use tessarine::{Bicomplex, Bicomplex64, BicomplexPolynomial, Rational, RootKind, SplitPair};

type B = Bicomplex<Rational>;

fn c(re: f64, im: f64) -> Complex<f64> {
    Complex::new(re, im)
}

#[test]
fn z_squared_plus_one_has_exactly_four_roots() {
    let p = BicomplexPolynomial::new(vec![B::one(), B::zero(), B::one()]).unwrap();
    let set = solve(&p).unwrap();
    assert_eq!(set.kind, RootKind::Finite);
    assert_eq!(set.roots.len(), 4);

    let mut found: Vec<B> = set.roots.iter().map(|r| r.exact.clone().expect("exact root")).collect();
    for r in &found {
        assert!(p.eval(r).is_zero(), "{r} leaves a residual");
    }
    let mut want = vec![B::i(), -B::i(), B::h(), -B::h()];
    let key = |b: &B| b.to_array();
    found.sort_by_key(key);
    want.sort_by_key(key);
    assert_eq!(found, want);
}

// Nested evaluation of a float polynomial, ascending coefficients.
fn eval(coeffs: &[Complex<f64>], z: Complex<f64>) -> Complex<f64> {
    coeffs.iter().rev().fold(Complex::zero(), |acc, a| acc * z + a)
}

#[test]
fn random_split_degrees_two_and_three_give_six_roots() {
    let mut r = rng(41);
    for trial in 0..40 {
        let mut first: Vec<Complex<Rational>> = (0..3).map(|_| Complex::new(rand_q(&mut r), rand_q(&mut r))).collect();
        let second: Vec<Complex<Rational>> = (0..4).map(|_| Complex::new(rand_q(&mut r), rand_q(&mut r))).collect();
        if first[2].is_zero() || second[3].is_zero() {
            continue;
        }
        first.push(Complex::zero());
        let coeffs: Vec<B> =
            first.iter().zip(&second).map(|(a, b)| B::recompose(&SplitPair::new(a.clone(), b.clone()))).collect();
        let p = BicomplexPolynomial::new(coeffs).unwrap();
        let set = solve(&p).unwrap();
        assert_eq!(set.counts, vec![Some(2), Some(3)], "trial {trial}");
        assert_eq!(set.roots.len(), 6, "trial {trial}");

        let to_f = |v: &[Complex<Rational>]| -> Vec<Complex<f64>> {
            v.iter()
                .map(|z| c(tessarine::scalar::rational_to_f64(&z.re), tessarine::scalar::rational_to_f64(&z.im)))
                .collect()
        };
        let (pf, ps) = (to_f(&first), to_f(&second));
        let pf64 =
            BicomplexPolynomial::new(p.coeffs().iter().map(|b| b.map(tessarine::scalar::rational_to_f64)).collect())
                .unwrap();
        for root in &set.roots {
            let SplitPair { z1, z2 } = root.value.decompose();
            let scale = |v: &[Complex<f64>]| v.iter().map(|a| a.norm()).fold(1.0, f64::max);
            assert!(eval(&pf, z1).norm() <= 1e-9 * scale(&pf) * z1.norm().max(1.0).powi(2));
            assert!(eval(&ps, z2).norm() <= 1e-9 * scale(&ps) * z2.norm().max(1.0).powi(3));
            assert!(root.residual <= 1e-9, "trial {trial}: residual {}", root.residual);
            let direct: Bicomplex64 = pf64.eval(&root.value);
            assert!(direct.coeff_norm_sqr().sqrt() <= 1e-8 * (1.0 + root.value.coeff_norm_sqr()).powf(1.5));
        }
        for (a, r1) in set.roots.iter().enumerate() {
            for r2 in &set.roots[a + 1..] {
                assert!((&r1.value - &r2.value).coeff_norm_sqr() > 1e-12);
            }
        }
    }
}

#[test]
fn root_count_is_the_product_of_component_degrees() {
    // (z - 1)(z - 2) in the first component, (z - 3)^1 in the second.
    let first = [q(2, 1), q(-3, 1), q(1, 1)];
    let second = [q(-3, 1), q(1, 1), q(0, 1)];
    let coeffs: Vec<B> = first
        .iter()
        .zip(&second)
        .map(|(a, b)| B::recompose(&SplitPair::new(Complex::new(a.clone(), q(0, 1)), Complex::new(b.clone(), q(0, 1)))))
        .collect();
    let set = solve(&BicomplexPolynomial::new(coeffs).unwrap()).unwrap();
    assert_eq!(set.expected_count(), Some(2));
    assert_eq!(set.roots.len(), 2);
    for r in &set.roots {
        let SplitPair { z1, z2 } = r.exact.as_ref().unwrap().decompose();
        assert!(z1 == Complex::new(q(1, 1), q(0, 1)) || z1 == Complex::new(q(2, 1), q(0, 1)));
        assert_eq!(z2, Complex::new(q(3, 1), q(0, 1)));
    }
}

#[test]
fn nullific_leading_coefficient_is_an_infinite_family() {
    let p = BicomplexPolynomial::new(vec![B::zero(), B::g()]).unwrap();
    let set = solve(&p).unwrap();
    assert_eq!(set.kind, RootKind::InfiniteFamily);
    let family = set.family.expect("family description");
    assert_eq!(family.free.len(), 1);
    assert_eq!(family.constrained.len(), 1);
    assert_eq!(family.constrained[0].1, vec![c(0.0, 0.0)]);

    let q2 = BicomplexPolynomial::new(vec![B::g_prime(), B::g_prime()]).unwrap();
    assert_eq!(solve(&q2).unwrap().kind, RootKind::InfiniteFamily);
}

#[test]
fn nonzero_constant_component_has_no_roots() {
    // g z + g': first component z, second component the constant 1
    let p = BicomplexPolynomial::new(vec![B::g_prime(), B::g()]).unwrap();
    let set = solve(&p).unwrap();
    assert_eq!(set.kind, RootKind::Finite);
    assert!(set.roots.is_empty());
}

#[test]
fn degenerate_inputs_are_errors() {
    assert!(matches!(BicomplexPolynomial::new(vec![B::zero(), B::zero()]), Err(SolveError::ZeroPolynomial)));
    assert!(matches!(BicomplexPolynomial::new(vec![B::k()]), Err(SolveError::ConstantPolynomial)));
}

#[test]
fn float_backend_agrees_with_exact_backend() {
    let p = BicomplexPolynomial::new(vec![
        Bicomplex64::new(1.0, 0.0, 0.0, 0.0),
        Bicomplex64::zero(),
        Bicomplex64::new(1.0, 0.0, 0.0, 0.0),
    ])
    .unwrap();
    let set = solve(&p).unwrap();
    assert_eq!(set.roots.len(), 4);
    assert!(set.roots.iter().all(|r| r.residual <= 1e-12));
}

#[test]
fn rational_recognition() {
    assert_eq!(best_rational(0.375), Some(q(3, 8)));
    assert_eq!(best_rational(-8.0 / 3.0), Some(q(-8, 3)));
    assert_eq!(best_rational(f64::NAN), None);
}
