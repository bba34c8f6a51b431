//! Per-trial seed derivation and the crate's seeded RNG.

use rand::SeedableRng;

/// RNG used wherever a reproducible stream is needed.
pub type TrialRng = rand_chacha::ChaCha8Rng;

/// SplitMix64 finaliser.
#[inline]
pub fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed for trial `index` under `master`. Independent of scheduling, so
/// parallel and sequential runs draw identical streams.
pub fn trial_seed(master: u64, index: u64) -> u64 {
    mix64(master ^ mix64(index.wrapping_add(0x9e37_79b9_7f4a_7c15)))
}

pub fn rng_from_seed(seed: u64) -> TrialRng {
    TrialRng::seed_from_u64(seed)
}

pub fn trial_rng(master: u64, index: u64) -> TrialRng {
    rng_from_seed(trial_seed(master, index))
}
