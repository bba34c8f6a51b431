use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::{words_for, BitVector, IndexSet, RowEchelon};
use crate::{Error, Result};

/// Dense row-major matrix over GF(2) with bit-packed rows.
///
/// Zero-row and zero-column matrices are allowed; kernels of full-rank inputs
/// come back as `0 × n` matrices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

#[inline]
pub(crate) fn xor_words(dst: &mut [u64], src: &[u64]) {
    for (a, b) in dst.iter_mut().zip(src) {
        *a ^= b;
    }
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = words_for(cols);
        Self {
            rows,
            cols,
            stride,
            data: vec![0; rows * stride],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Stacks row vectors; all must have length `cols`.
    pub fn from_rows(cols: usize, rows: &[BitVector]) -> Result<Self> {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    op: "from_rows",
                    expected: cols,
                    actual: r.len(),
                });
            }
            m.row_words_mut(i).copy_from_slice(r.words());
        }
        Ok(m)
    }

    /// Builds a matrix from nested 0/1 slices. Convenient for literals in tests.
    pub fn from_bit_rows(rows: &[&[u8]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let vecs: Vec<BitVector> = rows.iter().map(|r| BitVector::from_bits(r)).collect();
        Self::from_rows(cols, &vecs).expect("ragged bit rows")
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                if f(i, j) {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Words per packed row.
    #[inline]
    pub fn stride(&self) -> usize {
        self.stride
    }

    #[inline]
    pub fn row_words(&self, i: usize) -> &[u64] {
        &self.data[i * self.stride..(i + 1) * self.stride]
    }

    #[inline]
    pub(crate) fn row_words_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.data[i * self.stride..(i + 1) * self.stride]
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(i < self.rows && j < self.cols, "entry ({i},{j}) out of range");
        (self.data[i * self.stride + j / 64] >> (j % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        assert!(i < self.rows && j < self.cols, "entry ({i},{j}) out of range");
        let w = &mut self.data[i * self.stride + j / 64];
        let mask = 1u64 << (j % 64);
        if value {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    pub fn row(&self, i: usize) -> BitVector {
        BitVector::from_words(self.cols, self.row_words(i).to_vec())
    }

    pub fn set_row(&mut self, i: usize, v: &BitVector) {
        assert_eq!(v.len(), self.cols);
        self.row_words_mut(i).copy_from_slice(v.words());
    }

    pub fn column(&self, j: usize) -> BitVector {
        let mut v = BitVector::zeros(self.rows);
        for i in 0..self.rows {
            if self.get(i, j) {
                v.set(i, true);
            }
        }
        v
    }

    pub fn row_iter(&self) -> impl Iterator<Item = BitVector> + '_ {
        (0..self.rows).map(move |i| self.row(i))
    }

    /// `row_i ^= row_j` for `i != j`.
    pub(crate) fn xor_row_into(&mut self, dst: usize, src: usize) {
        debug_assert_ne!(dst, src);
        let s = self.stride;
        if dst < src {
            let (lo, hi) = self.data.split_at_mut(src * s);
            xor_words(&mut lo[dst * s..(dst + 1) * s], &hi[..s]);
        } else {
            let (lo, hi) = self.data.split_at_mut(dst * s);
            xor_words(&mut hi[..s], &lo[src * s..(src + 1) * s]);
        }
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let s = self.stride;
        let (lo, hi) = (a.min(b), a.max(b));
        let (first, second) = self.data.split_at_mut(hi * s);
        first[lo * s..(lo + 1) * s].swap_with_slice(&mut second[..s]);
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    pub fn is_zero_row(&self, i: usize) -> bool {
        self.row_words(i).iter().all(|&w| w == 0)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in self.row(i).support() {
                t.set(j, i, true);
            }
        }
        t
    }

    /// Matrix product over GF(2).
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                op: "matrix product",
                expected: self.cols,
                actual: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            let acc = out.row_words_mut(i);
            for (wi, &w) in self.row_words(i).iter().enumerate() {
                let mut rest = w;
                while rest != 0 {
                    let k = wi * 64 + rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    let src = &other.data[k * other.stride..(k + 1) * other.stride];
                    for (a, b) in acc.iter_mut().zip(src) {
                        *a ^= b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Entry-wise sum (XOR).
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                op: "matrix sum",
                expected: self.rows * self.cols,
                actual: other.rows * other.cols,
            });
        }
        let mut out = self.clone();
        xor_words(&mut out.data, &other.data);
        Ok(out)
    }

    /// Column submatrix, order preserved.
    pub fn select_columns(&self, set: &IndexSet) -> Result<Self> {
        if let Some(&last) = set.as_slice().last() {
            if last >= self.cols {
                return Err(Error::IndexOutOfRange {
                    index: last,
                    len: self.cols,
                });
            }
        }
        let mut out = Self::zeros(self.rows, set.len());
        for i in 0..self.rows {
            for (dst, &src) in set.iter().enumerate() {
                if self.get(i, src) {
                    out.set(i, dst, true);
                }
            }
        }
        Ok(out)
    }

    /// Vertical concatenation.
    pub fn stack(&self, below: &Self) -> Result<Self> {
        if self.cols != below.cols {
            return Err(Error::DimensionMismatch {
                op: "stack",
                expected: self.cols,
                actual: below.cols,
            });
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&below.data);
        Ok(Self {
            rows: self.rows + below.rows,
            cols: self.cols,
            stride: self.stride,
            data,
        })
    }

    /// Drops all-zero rows.
    pub fn without_zero_rows(&self) -> Self {
        let keep: Vec<BitVector> = (0..self.rows)
            .filter(|&i| !self.is_zero_row(i))
            .map(|i| self.row(i))
            .collect();
        Self::from_rows(self.cols, &keep).expect("row lengths are uniform")
    }

    pub fn rank(&self) -> usize {
        RowEchelon::rank_of(self)
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.rows != self.cols {
            return Err(Error::InvalidDimensions("inverse requires a square matrix"));
        }
        let ech = RowEchelon::new(self);
        if ech.rank() < self.rows {
            return Err(Error::SingularMatrix);
        }
        Ok(ech.into_transform())
    }

    /// Basis of `{x : x · self = 0}`, one vector per row.
    pub fn left_kernel(&self) -> Self {
        RowEchelon::new(self).left_kernel()
    }

    /// Basis of `{x : self · xᵀ = 0}`, one vector per row.
    pub fn right_kernel(&self) -> Self {
        self.transpose().left_kernel()
    }

    /// Whether `v` lies in the row space.
    pub fn row_space_contains(&self, v: &BitVector) -> bool {
        RowEchelon::new(self).solve_left(v).is_some()
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            f.write_str("  ")?;
            for j in 0..self.cols {
                f.write_str(if self.get(i, j) { "1" } else { "0" })?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}
