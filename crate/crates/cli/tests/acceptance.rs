//! Acceptance run: one line per criterion, nonzero exit if any fails.

#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::needless_range_loop)]

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use nalgebra::{SMatrix, SVector};
use num_complex::Complex;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;
use tessarine::biquaternion::solve_quadratic;
use tessarine::polysolve::{mc_solve, solve};
use tessarine::quadruple::SignedUnit;
use tessarine::{
    Bicomplex, BicomplexPolynomial, Biquaternion, Biquaternion64, IdealTag, Multicomplex, MulticomplexPolynomial,
    QuadElement, QuadSystem, Rational, RootKind, SplitPair,
};

type Check = Result<(), String>;
type B = Bicomplex<Rational>;
type BQ = Biquaternion<Rational>;
type M = Multicomplex<Rational>;
type C64 = Complex<f64>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn rand_q(r: &mut ChaCha8Rng) -> Rational {
    q(r.random_range(-20..=20), r.random_range(1..=9))
}

fn rand_bc(r: &mut ChaCha8Rng) -> B {
    B::new(rand_q(r), rand_q(r), rand_q(r), rand_q(r))
}

fn cli_json(args: &[&str]) -> Result<Value, String> {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = tessarine_cli::run(&full);
    ensure!(out.code == 0, "{args:?} exited {}: {}", out.code, out.stderr.trim());
    serde_json::from_str(&out.stdout).map_err(|e| e.to_string())
}

fn zero_divisor_identity() -> Check {
    let p = &B::new(q(1, 1), q(0, 1), q(0, 1), q(-1, 1)) * &B::new(q(1, 1), q(0, 1), q(0, 1), q(1, 1));
    ensure!(p.is_zero(), "(1-k)(1+k) = {p}");
    Ok(())
}

fn split_isomorphism() -> Check {
    let mut r = ChaCha8Rng::seed_from_u64(2);
    for n in 0..500 {
        let (a, b) = (rand_bc(&mut r), rand_bc(&mut r));
        let (da, db) = (a.decompose(), b.decompose());
        ensure!((&a + &b).decompose() == da.clone() + db.clone(), "pair {n}: not additive");
        ensure!((&a * &b).decompose() == da.clone() * db, "pair {n}: not multiplicative");
        ensure!(B::recompose(&da) == a, "pair {n}: no round trip");
    }
    Ok(())
}

fn ideal_characterization() -> Check {
    let mut grid = Vec::new();
    for code in 0..625i64 {
        let c = |p: i64| q((code / 5i64.pow(p as u32)) % 5 - 2, 1);
        grid.push(B::new(c(0), c(1), c(2), c(3)));
    }
    grid.retain(|b| !b.is_zero());
    let tags: Vec<IdealTag> = grid.iter().map(B::ideal).collect();
    for (a, ta) in grid.iter().zip(&tags) {
        for (b, tb) in grid.iter().zip(&tags) {
            let cross = matches!(
                (ta, tb),
                (IdealTag::FirstSet, IdealTag::SecondSet) | (IdealTag::SecondSet, IdealTag::FirstSet)
            );
            ensure!((a * b).is_zero() == cross, "{a} * {b} with ideals {ta}, {tb}");
        }
    }
    Ok(())
}

fn root_count_law() -> Check {
    let p = BicomplexPolynomial::new(vec![B::one(), B::zero(), B::one()]).map_err(|e| e.to_string())?;
    let set = solve(&p).map_err(|e| e.to_string())?;
    ensure!(set.roots.len() == 4, "z²+1: {} roots", set.roots.len());
    let mut want = vec![B::i(), -B::i(), B::h(), -B::h()];
    for root in &set.roots {
        let x = root.exact.clone().ok_or("z²+1: root not exact")?;
        ensure!(p.eval(&x).is_zero(), "z²+1: residual at {x}");
        let pos = want.iter().position(|w| w == &x).ok_or(format!("z²+1: unexpected root {x}"))?;
        want.remove(pos);
    }

    let mut r = ChaCha8Rng::seed_from_u64(4);
    for trial in 0..20 {
        let mut first: Vec<Complex<Rational>> = (0..3).map(|_| Complex::new(rand_q(&mut r), rand_q(&mut r))).collect();
        let second: Vec<Complex<Rational>> = (0..4).map(|_| Complex::new(rand_q(&mut r), rand_q(&mut r))).collect();
        if first[2].is_zero() || second[3].is_zero() {
            continue;
        }
        first.push(Complex::zero());
        let coeffs = first.iter().zip(&second).map(|(a, b)| B::recompose(&SplitPair::new(a.clone(), b.clone())));
        let set = solve(&BicomplexPolynomial::new(coeffs.collect()).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        ensure!(set.roots.len() == 6, "trial {trial}: {} roots", set.roots.len());
        for root in &set.roots {
            ensure!(root.residual <= 1e-9, "trial {trial}: residual {}", root.residual);
        }
    }
    Ok(())
}

fn degeneracy() -> Check {
    let p = BicomplexPolynomial::new(vec![B::zero(), B::g()]).map_err(|e| e.to_string())?;
    let set = solve(&p).map_err(|e| e.to_string())?;
    ensure!(set.kind == RootKind::InfiniteFamily, "g·z = 0 reported {:?}", set.kind);
    Ok(())
}

fn quadruple_tables() -> Check {
    let (pos, neg) = (SignedUnit::pos, SignedUnit::neg);
    let expected: [(QuadSystem, bool, [[SignedUnit; 3]; 3]); 4] = [
        (QuadSystem::Quaternion, false, [[neg(0), pos(3), neg(2)], [neg(3), neg(0), pos(1)], [pos(2), neg(1), neg(0)]]),
        (QuadSystem::Tessarine, true, [[neg(0), pos(3), neg(2)], [pos(3), pos(0), pos(1)], [neg(2), pos(1), neg(0)]]),
        (
            QuadSystem::Coquaternion,
            false,
            [[neg(0), pos(3), neg(2)], [neg(3), pos(0), neg(1)], [pos(2), pos(1), pos(0)]],
        ),
        (QuadSystem::Cotessarine, true, [[pos(0), pos(3), pos(2)], [pos(3), pos(0), pos(1)], [pos(2), pos(1), pos(0)]]),
    ];
    for (sys, normal, rows) in expected {
        let t = sys.table();
        for r in 0..3 {
            for c in 0..3 {
                ensure!(
                    t.product(r + 1, c + 1) == rows[r][c],
                    "{sys}: e{}·e{} = {}",
                    r + 1,
                    c + 1,
                    t.product(r + 1, c + 1)
                );
            }
        }
        ensure!(t.is_normal() == normal, "{sys}: normal = {}", t.is_normal());
        for x in 0..4 {
            for y in 0..4 {
                for z in 0..4 {
                    let e = |k| QuadElement::<Rational>::basis(t, k);
                    let left = e(x).mul(&e(y)).and_then(|p| p.mul(&e(z))).map_err(|e| e.to_string())?;
                    let right = e(y).mul(&e(z)).and_then(|p| e(x).mul(&p)).map_err(|e| e.to_string())?;
                    ensure!(left == right, "{sys}: ({x}{y}){z} not associative");
                }
            }
        }
    }
    Ok(())
}

fn leibniz(m: &[[Rational; 4]; 4]) -> Rational {
    let mut total = q(0, 1);
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    if (0..4).any(|i| (i + 1..4).any(|j| p[i] == p[j])) {
                        continue;
                    }
                    let inv =
                        (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
                    let term = &m[0][a] * &m[1][b] * &m[2][c] * &m[3][d];
                    if inv % 2 == 0 {
                        total += term;
                    } else {
                        total -= term;
                    }
                }
            }
        }
    }
    total
}

fn norm_forms() -> Check {
    let mut r = ChaCha8Rng::seed_from_u64(7);
    for n in 0..50 {
        let c = [rand_q(&mut r), rand_q(&mut r), rand_q(&mut r), rand_q(&mut r)];
        let [w, x, y, z] = c.clone().map(|v| &v * &v);
        for (sys, form) in [(QuadSystem::Quaternion, &w + &x + &y + &z), (QuadSystem::Coquaternion, &w + &x - &y - &z)]
        {
            let e = QuadElement::new(c.clone(), sys.table());
            let norm = e.norm_form();
            ensure!(norm == leibniz(&e.left_multiplication_matrix()), "{sys} point {n}: determinant mismatch");
            ensure!(norm == &form * &form, "{sys} point {n}: {norm} is not the square form");
        }
    }
    Ok(())
}

fn biquaternion_nullifier() -> Check {
    let p = &(&BQ::k() + &BQ::omega()) * &(&BQ::k() - &BQ::omega());
    ensure!(p.is_zero(), "(k+ω)(k-ω) = {p}");
    Ok(())
}

fn quat_mul(a: [C64; 4], b: [C64; 4]) -> [C64; 4] {
    [
        a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
        a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
        a[0] * b[2] + a[2] * b[0] + a[3] * b[1] - a[1] * b[3],
        a[0] * b[3] + a[3] * b[0] + a[1] * b[2] - a[2] * b[1],
    ]
}

fn newton(start: [f64; 8]) -> Option<[f64; 8]> {
    let (i, j) = (Biquaternion64::i().coeffs(), Biquaternion64::j().coeffs());
    let mut v = start;
    for _ in 0..80 {
        let x: [C64; 4] = std::array::from_fn(|m| C64::new(v[m], v[m + 4]));
        let (sq, xi) = (quat_mul(x, x), quat_mul(x, i));
        let f: [C64; 4] = std::array::from_fn(|m| sq[m] - xi[m] - j[m]);
        if f.iter().map(C64::norm_sqr).sum::<f64>().sqrt() < 1e-13 {
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
        let rhs = SVector::<f64, 8>::from_fn(|m, _| if m < 4 { -f[m].re } else { -f[m - 4].im });
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

fn six_roots() -> Check {
    let sols = solve_quadratic(&BQ::i(), &BQ::j()).map_err(|e| e.to_string())?;
    ensure!(sols.len() == 6, "{} solutions", sols.len());
    let real = sols.iter().filter(|s| s.real_quaternion).count();
    ensure!(real == 2, "{real} real quaternions");
    for s in &sols {
        ensure!(s.residual <= 1e-9, "residual {}", s.residual);
    }

    let mut r = ChaCha8Rng::seed_from_u64(9);
    let mut clusters: Vec<[f64; 8]> = Vec::new();
    for _ in 0..300 {
        let start: [f64; 8] = std::array::from_fn(|_| r.random_range(-3.0..3.0));
        if let Some(v) = newton(start) {
            let dist = |w: &[f64; 8]| w.iter().zip(&v).map(|(a, b)| (a - b).powi(2)).sum::<f64>().sqrt();
            if !clusters.iter().any(|w| dist(w) < 1e-6) {
                clusters.push(v);
            }
        }
    }
    ensure!(clusters.len() == 6, "Newton found {} clusters", clusters.len());
    for w in &clusters {
        let matched = sols.iter().any(|s| {
            let (re, im) = s.value.parts();
            re.iter().chain(&im).zip(w).map(|(a, b)| (a - b).powi(2)).sum::<f64>().sqrt() < 1e-6
        });
        ensure!(matched, "Newton root {w:?} not among the solutions");
    }
    Ok(())
}

fn complanar_isomorphism() -> Check {
    let mut r = ChaCha8Rng::seed_from_u64(10);
    for n in 0..100 {
        let mut pick = || {
            BQ::new(
                Complex::new(rand_q(&mut r), rand_q(&mut r)),
                Complex::new(rand_q(&mut r), rand_q(&mut r)),
                Complex::zero(),
                Complex::zero(),
            )
        };
        let (a, b) = (pick(), pick());
        let to_bc = |x: &BQ| x.complanar_to_bicomplex().map_err(|e| e.to_string());
        ensure!(to_bc(&(&a * &b))? == &to_bc(&a)? * &to_bc(&b)?, "pair {n}: not multiplicative");
    }
    Ok(())
}

fn worked_surd_example() -> Check {
    let v = cli_json(&["surd", "analyze", "2*x + sqrt(x^2-7) = 5"])?;
    ensure!(v["stock"]["polynomial"] == "3*x^2 - 20*x + 32", "stock {}", v["stock"]["polynomial"]);
    ensure!(v["order"] == "2/2", "order {}", v["order"]);
    ensure!(v["congeners"][0]["status"] == "impossible", "plus congener {}", v["congeners"][0]["status"]);
    let minus = &v["congeners"][1];
    ensure!(minus["signs"] == serde_json::json!(["-"]), "second congener is not the minus one");
    let mut roots: Vec<&str> = minus["roots"].as_array().ok_or("no roots")?.iter().filter_map(Value::as_str).collect();
    roots.sort();
    ensure!(roots == ["4", "8/3"], "minus congener roots {roots:?}");
    for root in v["roots"].as_array().ok_or("no roots")? {
        ensure!(root["kind"] == "rational", "root {} not exact", root["value"]);
    }
    Ok(())
}

fn motivating_equation() -> Check {
    let v = cli_json(&["surd", "analyze", "1 + sqrt(x) = 0"])?;
    ensure!(v["order"] == "1/2", "order {}", v["order"]);
    ensure!(v["congeners"][0]["status"] == "impossible", "1 + √x is {}", v["congeners"][0]["status"]);
    let minus = &v["congeners"][1];
    ensure!(minus["equation"] == "1 - sqrt(x) = 0", "congener {}", minus["equation"]);
    ensure!(minus["roots"] == serde_json::json!(["1"]), "roots {}", minus["roots"]);
    Ok(())
}

fn multicomplex_consistency() -> Check {
    for s in 0..4 {
        for t in 0..4 {
            let bc = &B::basis(s) * &B::basis(t);
            let mc = &M::basis(2, s).map_err(|e| e.to_string())? * &M::basis(2, t).map_err(|e| e.to_string())?;
            ensure!(M::from_bicomplex(&bc) == mc, "basis product e{s}·e{t} differs");
        }
    }
    let mut r = ChaCha8Rng::seed_from_u64(13);
    for n in 0..100 {
        let a = M::from_coeffs(3, (0..8).map(|_| rand_q(&mut r)).collect()).map_err(|e| e.to_string())?;
        let s = a.split();
        ensure!(s.values.len() == 4, "{} components", s.values.len());
        ensure!(M::unsplit(3, &s).map_err(|e| e.to_string())? == a, "element {n}: no round trip");
    }
    let one = M::one(3).map_err(|e| e.to_string())?;
    let zero = M::zero(3).map_err(|e| e.to_string())?;
    let p = MulticomplexPolynomial::new(3, vec![one.clone(), zero, one]).map_err(|e| e.to_string())?;
    let set = mc_solve(&p).map_err(|e| e.to_string())?;
    ensure!(set.roots.len() == 16, "{} roots", set.roots.len());
    for idx in [0, 4, 8, 12, 15] {
        let x = set.roots[idx].exact.as_ref().ok_or(format!("root {idx} not exact"))?;
        ensure!(p.eval(x).is_zero(), "root {idx}: {x} leaves a residual");
    }
    Ok(())
}

type Criterion = (&'static str, fn() -> Check);

fn main() {
    let criteria: [Criterion; 13] = [
        ("zero-divisor identity (1-k)(1+k) = 0", zero_divisor_identity),
        ("split isomorphism on 500 pairs", split_isomorphism),
        ("ideal characterization on the {-2..2} grid", ideal_characterization),
        ("root-count law", root_count_law),
        ("degeneracy g·z = 0", degeneracy),
        ("quadruple tables", quadruple_tables),
        ("norm forms against the determinant", norm_forms),
        ("biquaternion nullifier (k+ω)(k-ω) = 0", biquaternion_nullifier),
        ("six roots of q² = qi + j", six_roots),
        ("complanar isomorphism", complanar_isomorphism),
        ("surd analyze 2x + √(x²-7) = 5", worked_surd_example),
        ("surd analyze 1 + √x = 0", motivating_equation),
        ("multicomplex consistency", multicomplex_consistency),
    ];
    let started = Instant::now();
    let mut failed = 0;
    for (n, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = t.elapsed().as_secs_f64();
        match result {
            Ok(()) => println!("[PASS] {:>2}. {name} ({secs:.2}s)", n + 1),
            Err(e) => {
                failed += 1;
                println!("[FAIL] {:>2}. {name} ({secs:.2}s): {e}", n + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed in {:.2}s",
        criteria.len() - failed,
        criteria.len(),
        started.elapsed().as_secs_f64()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
