use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{BitXor, BitXorAssign};

use super::{words_for, BitMatrix, IndexSet};
use crate::{Error, Result};

/// A vector over GF(2), packed 64 coordinates per word.
///
/// Coordinate `i` lives in bit `i % 64` of word `i / 64`. Bits past `len` are
/// always zero, so word-wise equality and popcounts are exact.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut v = Self {
            len,
            words: vec![u64::MAX; words_for(len)],
        };
        v.clear_tail();
        v
    }

    /// Unit vector with a single one at `index`.
    pub fn unit(len: usize, index: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(index, true);
        v
    }

    /// Builds a vector from words, masking off anything beyond `len`.
    pub fn from_words(len: usize, mut words: Vec<u64>) -> Self {
        words.resize(words_for(len), 0);
        let mut v = Self { len, words };
        v.clear_tail();
        v
    }

    /// Builds a vector from the low `len` bits of `value` (coordinate 0 is bit 0).
    pub fn from_u64(len: usize, value: u64) -> Self {
        assert!(len <= 64, "from_u64 supports at most 64 coordinates");
        Self::from_words(len, vec![value])
    }

    /// Builds a vector from a slice of 0/1 values.
    pub fn from_bits(bits: &[u8]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b & 1 == 1 {
                v.set(i, true);
            }
        }
        v
    }

    /// Vector with ones exactly at `support`.
    pub fn from_support(len: usize, support: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in support {
            v.set(i, true);
        }
        v
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub(crate) fn words_mut(&mut self) -> &mut [u64] {
        &mut self.words
    }

    /// Low 64 coordinates as an integer.
    pub fn to_u64(&self) -> u64 {
        self.words.first().copied().unwrap_or(0)
    }

    #[inline]
    pub fn get(&self, index: usize) -> bool {
        assert!(index < self.len, "bit index {index} out of range {}", self.len);
        (self.words[index / 64] >> (index % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, index: usize, value: bool) {
        assert!(index < self.len, "bit index {index} out of range {}", self.len);
        let mask = 1u64 << (index % 64);
        if value {
            self.words[index / 64] |= mask;
        } else {
            self.words[index / 64] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, index: usize) {
        assert!(index < self.len, "bit index {index} out of range {}", self.len);
        self.words[index / 64] ^= 1u64 << (index % 64);
    }

    /// Hamming weight.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Inner product over GF(2).
    pub fn dot(&self, other: &Self) -> bool {
        assert_eq!(self.len, other.len);
        let ones: u32 = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum();
        ones & 1 == 1
    }

    /// Indices of the nonzero coordinates, ascending.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            core::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let bit = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(wi * 64 + bit)
                }
            })
        })
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    /// Coordinates at `set`, in order.
    pub fn select(&self, set: &IndexSet) -> Result<Self> {
        if let Some(&last) = set.as_slice().last() {
            if last >= self.len {
                return Err(Error::IndexOutOfRange {
                    index: last,
                    len: self.len,
                });
            }
        }
        let mut out = Self::zeros(set.len());
        for (dst, &src) in set.iter().enumerate() {
            if self.get(src) {
                out.set(dst, true);
            }
        }
        Ok(out)
    }

    /// Row-vector times matrix, `self · m`.
    pub fn mul_matrix(&self, m: &BitMatrix) -> Result<Self> {
        if self.len != m.rows() {
            return Err(Error::DimensionMismatch {
                op: "vector-matrix product",
                expected: m.rows(),
                actual: self.len,
            });
        }
        Ok(self.mul_matrix_unchecked(m))
    }

    pub(crate) fn mul_matrix_unchecked(&self, m: &BitMatrix) -> Self {
        debug_assert_eq!(self.len, m.rows());
        let mut acc = vec![0u64; m.stride()];
        for row in self.support() {
            for (a, b) in acc.iter_mut().zip(m.row_words(row)) {
                *a ^= b;
            }
        }
        Self {
            len: m.cols(),
            words: acc,
        }
    }

    /// Concatenation `self || other`.
    pub fn concat(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.len + other.len);
        for i in self.support() {
            out.set(i, true);
        }
        for i in other.support() {
            out.set(self.len + i, true);
        }
        out
    }

    fn clear_tail(&mut self) {
        let rem = self.len % 64;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }
}

impl BitXorAssign<&BitVector> for BitVector {
    fn bitxor_assign(&mut self, rhs: &BitVector) {
        assert_eq!(self.len, rhs.len, "length mismatch in xor");
        for (a, b) in self.words.iter_mut().zip(&rhs.words) {
            *a ^= b;
        }
    }
}

impl BitXor<&BitVector> for &BitVector {
    type Output = BitVector;

    fn bitxor(self, rhs: &BitVector) -> BitVector {
        let mut out = self.clone();
        out ^= rhs;
        out
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector[")?;
        for b in self.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tail_bits_stay_clear() {
        let v = BitVector::ones(70);
        assert_eq!(v.weight(), 70);
        assert_eq!(v.words()[1], (1 << 6) - 1);
        let w = BitVector::from_words(3, vec![u64::MAX]);
        assert_eq!(w.weight(), 3);
    }

    #[test]
    fn support_and_dot() {
        let v = BitVector::from_support(130, [0, 63, 64, 129]);
        assert_eq!(v.support().collect::<Vec<_>>(), vec![0, 63, 64, 129]);
        let u = BitVector::from_support(130, [63, 129, 5]);
        assert!(!v.dot(&u));
        assert!(v.dot(&BitVector::unit(130, 64)));
    }

    #[test]
    fn select_checks_range() {
        let v = BitVector::from_bits(&[1, 0, 1, 1]);
        let j = IndexSet::new(vec![0, 3], 10).unwrap();
        assert_eq!(v.select(&j).unwrap(), BitVector::from_bits(&[1, 1]));
        let bad = IndexSet::new(vec![4], 10).unwrap();
        assert!(matches!(v.select(&bad), Err(Error::IndexOutOfRange { .. })));
    }
}
