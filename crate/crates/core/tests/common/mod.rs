#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tessarine::{Bicomplex, Rational};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn rand_q(rng: &mut impl Rng) -> Rational {
    q(rng.random_range(-20..=20), rng.random_range(1..=9))
}

pub fn rand_bc(rng: &mut impl Rng) -> Bicomplex<Rational> {
    Bicomplex::new(rand_q(rng), rand_q(rng), rand_q(rng), rand_q(rng))
}
