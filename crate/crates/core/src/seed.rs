//! Deterministic seed splitting.
//!
//! Every random component draws from a `ChaCha8Rng` built as
//! `ChaCha8Rng::seed_from_u64(derive(root, stream, index))`. `derive` runs the
//! three words through the SplitMix64 finalizer, so distinct
//! `(stream, index)` pairs give unrelated generators from one root seed.
//! ChaCha8 output is stable across platforms and crate releases.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Stream identifiers, one per consumer of randomness.
pub mod stream {
    pub const GENERATOR: u64 = 1;
    pub const PRI: u64 = 2;
    pub const RANDOM_SPARSIFIER: u64 = 3;
    pub const RESISTANCE_SPARSIFIER: u64 = 4;
    pub const TRADEOFF: u64 = 5;
    pub const BETA_CURVE: u64 = 6;
    pub const ASSUMPTION: u64 = 7;
    pub const COROLLARY: u64 = 8;
    pub const COMPARISON: u64 = 9;
    pub const VERIFY: u64 = 10;
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn derive(root: u64, stream: u64, index: u64) -> u64 {
    splitmix(splitmix(splitmix(root) ^ stream) ^ index)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn split_rng(root: u64, stream: u64, index: u64) -> ChaCha8Rng {
    rng(derive(root, stream, index))
}
