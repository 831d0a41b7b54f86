//! Seeded random inputs.

use cga_core::geometry::Vector3;
use cga_core::{Blade, Multivector, Rational};
use rand::Rng;

pub fn rational<R: Rng>(rng: &mut R) -> Rational {
    let n: i64 = rng.gen_range(-9..=9);
    let d: i64 = rng.gen_range(1..=4);
    Rational::new(n, d).unwrap()
}

/// A multivector with up to `max_terms` random blades and small rational coefficients.
pub fn multivector<R: Rng>(rng: &mut R, max_terms: usize) -> Multivector<Rational> {
    let n = rng.gen_range(0..=max_terms);
    Multivector::from_terms((0..n).map(|_| (Blade::from_mask(rng.gen_range(0..32)).unwrap(), rational(rng))))
}

/// A vector over all five generators.
pub fn vector<R: Rng>(rng: &mut R) -> Multivector<Rational> {
    Multivector::vector(std::array::from_fn(|_| rational(rng)))
}

pub fn vector3<R: Rng>(rng: &mut R) -> Vector3<Rational> {
    Vector3::new(rational(rng), rational(rng), rational(rng))
}

/// Outer product of `k` random vectors.
pub fn blade<R: Rng>(rng: &mut R, k: usize) -> Multivector<Rational> {
    (0..k).fold(Multivector::one(), |acc, _| acc.outer_product(&vector(rng)))
}

pub fn float_vector3<R: Rng>(rng: &mut R) -> Vector3<f64> {
    Vector3::new(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0))
}
