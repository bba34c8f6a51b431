//! Dense linear algebra over GF(2).
//!
//! Rows are packed into `u64` words and elimination is done with word-wise
//! XOR. All the matrices of both schemes (generator, parity check, masks,
//! permutations) are [`BitMatrix`] values.

mod elim;
mod index_set;
mod matrix;
mod random;
mod vector;

pub use elim::RowEchelon;
pub use index_set::IndexSet;
pub use matrix::BitMatrix;
pub use random::{
    random_full_column_rank, random_matrix, random_nonsingular, random_permutation, random_permutation_matrix,
    random_vector, random_vector_of_weight,
};
pub use vector::BitVector;

#[inline]
pub(crate) const fn words_for(bits: usize) -> usize {
    bits.div_ceil(64)
}

#[cfg(test)]
mod tests;
