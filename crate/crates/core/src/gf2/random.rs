use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::Rng;

use super::{BitMatrix, BitVector};
use crate::{Error, Result};

/// Uniform random matrix.
pub fn random_matrix<R: Rng + ?Sized>(rows: usize, cols: usize, rng: &mut R) -> BitMatrix {
    let mut m = BitMatrix::zeros(rows, cols);
    for i in 0..rows {
        let words: Vec<u64> = (0..m.stride()).map(|_| rng.next_u64()).collect();
        m.set_row(i, &BitVector::from_words(cols, words));
    }
    m
}

/// Uniform random vector of length `len`.
pub fn random_vector<R: Rng + ?Sized>(len: usize, rng: &mut R) -> BitVector {
    let words: Vec<u64> = (0..super::words_for(len)).map(|_| rng.next_u64()).collect();
    BitVector::from_words(len, words)
}

/// Uniform random vector of exactly the given weight.
pub fn random_vector_of_weight<R: Rng + ?Sized>(len: usize, weight: usize, rng: &mut R) -> BitVector {
    assert!(weight <= len, "weight {weight} exceeds length {len}");
    BitVector::from_support(len, rand::seq::index::sample(rng, len, weight))
}

/// Uniformly random nonsingular `n × n` matrix, by rejection sampling.
///
/// About 29% of square GF(2) matrices are invertible, so fewer than four
/// draws are needed on average.
pub fn random_nonsingular<R: Rng + ?Sized>(n: usize, rng: &mut R) -> BitMatrix {
    assert!(n >= 1, "random_nonsingular needs n >= 1");
    loop {
        let m = random_matrix(n, n, rng);
        if m.rank() == n {
            return m;
        }
    }
}

/// Uniformly random `rows × cols` matrix of full column rank.
pub fn random_full_column_rank<R: Rng + ?Sized>(rows: usize, cols: usize, rng: &mut R) -> Result<BitMatrix> {
    if cols == 0 || rows < cols {
        return Err(Error::InvalidDimensions("full column rank needs rows >= cols >= 1"));
    }
    if rows == cols {
        return Ok(random_nonsingular(rows, rng));
    }
    loop {
        let m = random_matrix(rows, cols, rng);
        if m.rank() == cols {
            return Ok(m);
        }
    }
}

/// Random permutation as a list: position `i` maps to `perm[i]`.
pub fn random_permutation<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    perm
}

/// Random `n × n` permutation matrix with `P[i][perm[i]] = 1`.
pub fn random_permutation_matrix<R: Rng + ?Sized>(n: usize, rng: &mut R) -> BitMatrix {
    assert!(n >= 1, "random_permutation_matrix needs n >= 1");
    let perm = random_permutation(n, rng);
    let mut p = BitMatrix::zeros(n, n);
    for (i, &j) in perm.iter().enumerate() {
        p.set(i, j, true);
    }
    p
}
