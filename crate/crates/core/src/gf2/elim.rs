use alloc::vec::Vec;

use super::matrix::xor_words;
use super::{BitMatrix, BitVector};

/// Reduced row echelon form of a matrix together with the row operations that
/// produced it, so that `transform · original = reduced`.
///
/// Pivots are chosen as the first row carrying a one in the current column,
/// scanning columns left to right. Rows `0..rank` of `reduced` are the pivot
/// rows in column order; rows `rank..` are zero, and the matching rows of
/// `transform` span the left kernel of the original matrix.
#[derive(Clone, Debug)]
pub struct RowEchelon {
    reduced: BitMatrix,
    transform: BitMatrix,
    pivots: Vec<usize>,
}

impl RowEchelon {
    pub fn new(a: &BitMatrix) -> Self {
        let mut reduced = a.clone();
        let mut transform = BitMatrix::identity(a.rows());
        let pivots = reduce(&mut reduced, Some(&mut transform));
        Self {
            reduced,
            transform,
            pivots,
        }
    }

    /// Rank without tracking the transform.
    pub fn rank_of(a: &BitMatrix) -> usize {
        let mut scratch = a.clone();
        reduce(&mut scratch, None).len()
    }

    /// Pivot columns of `a`: the lexicographically first set of linearly
    /// independent columns.
    pub fn pivot_columns(a: &BitMatrix) -> Vec<usize> {
        let mut scratch = a.clone();
        reduce(&mut scratch, None)
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn reduced(&self) -> &BitMatrix {
        &self.reduced
    }

    pub fn transform(&self) -> &BitMatrix {
        &self.transform
    }

    pub(crate) fn into_transform(self) -> BitMatrix {
        self.transform
    }

    pub fn left_kernel(&self) -> BitMatrix {
        let rank = self.rank();
        let rows: Vec<BitVector> = (rank..self.transform.rows()).map(|i| self.transform.row(i)).collect();
        BitMatrix::from_rows(self.transform.cols(), &rows).expect("uniform rows")
    }

    /// Finds `x` with `x · original = target`, if the target is in the row space.
    pub fn solve_left(&self, target: &BitVector) -> Option<BitVector> {
        assert_eq!(target.len(), self.reduced.cols());
        let mut residual = target.clone();
        let mut x = BitVector::zeros(self.reduced.rows());
        for (r, &col) in self.pivots.iter().enumerate() {
            if residual.get(col) {
                xor_words(residual.words_mut(), self.reduced.row_words(r));
                xor_words(x.words_mut(), self.transform.row_words(r));
            }
        }
        residual.is_zero().then_some(x)
    }

    /// Row-space membership test.
    pub fn contains(&self, target: &BitVector) -> bool {
        assert_eq!(target.len(), self.reduced.cols());
        let mut residual = target.clone();
        for (r, &col) in self.pivots.iter().enumerate() {
            if residual.get(col) {
                xor_words(residual.words_mut(), self.reduced.row_words(r));
            }
        }
        residual.is_zero()
    }
}

/// In-place Gauss–Jordan elimination. Returns pivot columns.
fn reduce(m: &mut BitMatrix, mut transform: Option<&mut BitMatrix>) -> Vec<usize> {
    let rows = m.rows();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..m.cols() {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| m.get(r, col)) else {
            continue;
        };
        m.swap_rows(p, rank);
        if let Some(t) = transform.as_deref_mut() {
            t.swap_rows(p, rank);
        }
        for r in 0..rows {
            if r != rank && m.get(r, col) {
                m.xor_row_into(r, rank);
                if let Some(t) = transform.as_deref_mut() {
                    t.xor_row_into(r, rank);
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    pivots
}
