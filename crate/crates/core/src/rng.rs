//! Seeded randomness. Every randomized search takes an explicit seed so
//! reports are reproducible.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::scalar::Scalar;

pub type SeededRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Vector of `len` small integers drawn uniformly from `-bound..=bound`.
pub fn small_vector<T: Scalar>(rng: &mut SeededRng, len: usize, bound: i64) -> Vec<T> {
    (0..len).map(|_| T::from_i64(rng.gen_range(-bound..=bound))).collect()
}
