use crate::gf2::{BitMatrix, BitVector, IndexSet, RowEchelon};
use crate::{Error, Result};

/// A binary `(n, k)` linear code with a fixed information set.
///
/// The information set is the first `k` linearly independent columns of the
/// generator (left-to-right), unless one is supplied explicitly. The inverse
/// of the generator restricted to it is cached so that messages can be read
/// back from codewords with one vector-matrix product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCode {
    generator: BitMatrix,
    parity_check: BitMatrix,
    parity_check_t: BitMatrix,
    info_set: IndexSet,
    info_inverse: BitMatrix,
}

impl LinearCode {
    /// Builds the code spanned by the rows of `generator`, which must be
    /// linearly independent.
    pub fn from_generator(generator: BitMatrix) -> Result<Self> {
        let k = generator.rows();
        if k == 0 || generator.cols() <= k {
            return Err(Error::InvalidDimensions("generator must satisfy 0 < k < n"));
        }
        let pivots = RowEchelon::pivot_columns(&generator);
        if pivots.len() < k {
            return Err(Error::RankDeficient {
                rank: pivots.len(),
                rows: k,
            });
        }
        let info_set = IndexSet::new(pivots, generator.cols())?;
        Self::with_info_set(generator, info_set)
    }

    /// Like [`from_generator`](Self::from_generator) but with a caller-chosen
    /// information set, e.g. one stored in a key file.
    pub fn with_info_set(generator: BitMatrix, info_set: IndexSet) -> Result<Self> {
        let (k, n) = (generator.rows(), generator.cols());
        if k == 0 || n <= k {
            return Err(Error::InvalidDimensions("generator must satisfy 0 < k < n"));
        }
        if info_set.len() != k {
            return Err(Error::InvalidIndexSet("information set size must equal k"));
        }
        let restricted = generator.select_columns(&info_set)?;
        let info_inverse = restricted.inverse().map_err(|_| {
            let rank = generator.rank();
            if rank < k {
                Error::RankDeficient { rank, rows: k }
            } else {
                Error::InvalidIndexSet("columns are not an information set")
            }
        })?;
        let parity_check = generator.right_kernel();
        debug_assert_eq!(parity_check.rows(), n - k);
        let parity_check_t = parity_check.transpose();
        Ok(Self {
            generator,
            parity_check,
            parity_check_t,
            info_set,
            info_inverse,
        })
    }

    /// The code `{x : H·xᵀ = 0}`. Rows of `h` may be dependent.
    pub fn from_parity_check(h: &BitMatrix) -> Result<Self> {
        Self::from_generator(h.right_kernel())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.generator.cols()
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.generator.rows()
    }

    pub fn generator(&self) -> &BitMatrix {
        &self.generator
    }

    /// `(n−k) × n` parity-check matrix `H` with `G·Hᵀ = 0`.
    pub fn parity_check(&self) -> &BitMatrix {
        &self.parity_check
    }

    pub fn info_set(&self) -> &IndexSet {
        &self.info_set
    }

    /// `(G_J)⁻¹`, `k × k`.
    pub fn info_inverse(&self) -> &BitMatrix {
        &self.info_inverse
    }

    /// `u · G`.
    pub fn encode(&self, message: &BitVector) -> Result<BitVector> {
        message.mul_matrix(&self.generator)
    }

    /// `v · Hᵀ`.
    pub fn syndrome(&self, word: &BitVector) -> Result<BitVector> {
        word.mul_matrix(&self.parity_check_t)
    }

    pub fn is_codeword(&self, word: &BitVector) -> bool {
        word.len() == self.n() && self.syndrome(word).is_ok_and(|s| s.is_zero())
    }

    /// Message whose encoding agrees with `word` on the information set.
    /// For a codeword this inverts [`encode`](Self::encode).
    pub fn message_from_info_set(&self, word: &BitVector) -> Result<BitVector> {
        if word.len() != self.n() {
            return Err(Error::DimensionMismatch {
                op: "message_from_info_set",
                expected: self.n(),
                actual: word.len(),
            });
        }
        word.select(&self.info_set)?.mul_matrix(&self.info_inverse)
    }
}
