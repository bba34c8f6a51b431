//! Binary linear block codes.

mod bch;
pub mod gf2m;
mod gv;
mod linear;
mod spectrum;

pub use bch::{bch_build, bch_generator_polynomial};
pub use gf2m::{cyclotomic_coset, cyclotomic_cosets, minimal_polynomial, BinaryPoly, GfExtField};
pub use gv::{binary_entropy, gv_bound, gv_distance_asymptotic};
pub use linear::LinearCode;
pub(crate) use spectrum::exact_spectrum;
pub use spectrum::{
    gray, min_distance, sampled_weight_spectrum, weight_counts_in_range, weight_spectrum, SpectrumMethod,
    WeightSpectrum, EXHAUSTIVE_K_LIMIT,
};

use crate::gf2::BitMatrix;

/// The (7,4) Hamming code in systematic form.
pub fn hamming74() -> LinearCode {
    let g = BitMatrix::from_bit_rows(&[
        &[1, 0, 0, 0, 1, 1, 0],
        &[0, 1, 0, 0, 0, 1, 1],
        &[0, 0, 1, 0, 1, 1, 1],
        &[0, 0, 0, 1, 1, 0, 1],
    ]);
    LinearCode::from_generator(g).expect("Hamming generator has full rank")
}

/// The `(n, 1)` repetition code.
pub fn repetition_code(n: usize) -> LinearCode {
    LinearCode::from_generator(BitMatrix::from_fn(1, n, |_, _| true)).expect("n >= 2")
}
