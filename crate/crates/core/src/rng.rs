//! Deterministic random-stream derivation.
//!
//! Every random decision in the crate draws from a stream keyed by a
//! `(seed, purpose, indices...)` tuple instead of from one shared sequential
//! generator. Corruption and sampling consume one substream per grid cell,
//! keyed by `(step, row, column)`, so results are bit-identical regardless
//! of evaluation order or thread count, and a training run can resume at
//! any step without replaying the stream.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Stream purposes. Keeping these distinct guarantees that, e.g., the
/// corruption stream at step `s` never collides with the role-sampling
/// stream at the same step.
pub mod tag {
    pub const INIT: u64 = 0x01;
    pub const CORRUPT_CELL: u64 = 0x02;
    pub const SAMPLE_CELL: u64 = 0x03;
    pub const ROLES: u64 = 0x04;
    pub const TIMESTEP: u64 = 0x05;
    pub const SHUFFLE: u64 = 0x06;
    pub const VALID: u64 = 0x07;
    pub const SPLIT: u64 = 0x08;
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Folds the key parts into a single well-mixed 64-bit seed.
pub fn derive_seed(parts: &[u64]) -> u64 {
    let mut state = 0x243f_6a88_85a3_08d3; // arbitrary nonzero start
    for &p in parts {
        state = splitmix64(state ^ splitmix64(p));
    }
    state
}

/// A generator for the substream identified by the key parts.
pub fn stream(parts: &[u64]) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(derive_seed(parts))
}

/// Per-cell substream for grid-level noise at one diffusion step.
pub fn cell_stream(seed: u64, purpose: u64, step: usize, row: usize, col: usize) -> ChaCha8Rng {
    stream(&[seed, purpose, step as u64, row as u64, col as u64])
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    #[test]
    fn derivation_is_stable() {
        let a = derive_seed(&[1, 2, 3]);
        let b = derive_seed(&[1, 2, 3]);
        assert_eq!(a, b);
    }

    #[test]
    fn distinct_keys_give_distinct_streams() {
        let mut seen = std::collections::HashSet::new();
        for row in 0..20 {
            for col in 0..20 {
                assert!(seen.insert(derive_seed(&[7, tag::SAMPLE_CELL, 3, row, col])));
            }
        }
    }

    #[test]
    fn order_of_parts_matters() {
        assert_ne!(derive_seed(&[1, 2]), derive_seed(&[2, 1]));
    }

    #[test]
    fn cell_streams_reproduce() {
        let x: f64 = cell_stream(9, tag::CORRUPT_CELL, 5, 3, 100).random();
        let y: f64 = cell_stream(9, tag::CORRUPT_CELL, 5, 3, 100).random();
        assert_eq!(x.to_bits(), y.to_bits());
    }
}
