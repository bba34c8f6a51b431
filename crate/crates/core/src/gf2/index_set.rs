use alloc::vec::Vec;

use crate::{Error, Result};

/// Strictly increasing set of column positions below a bound `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IndexSet {
    indices: Vec<usize>,
}

impl IndexSet {
    /// Validates that `indices` is strictly increasing and below `bound`.
    pub fn new(indices: Vec<usize>, bound: usize) -> Result<Self> {
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidIndexSet("indices must be strictly increasing"));
        }
        if let Some(&last) = indices.last() {
            if last >= bound {
                return Err(Error::IndexOutOfRange {
                    index: last,
                    len: bound,
                });
            }
        }
        Ok(Self { indices })
    }

    /// Sorts first; duplicates are still an error.
    pub fn from_unsorted(mut indices: Vec<usize>, bound: usize) -> Result<Self> {
        indices.sort_unstable();
        Self::new(indices, bound)
    }

    /// `{0, 1, …, len-1}`.
    pub fn prefix(len: usize) -> Self {
        Self {
            indices: (0..len).collect(),
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.indices.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.indices
    }

    pub fn iter(&self) -> impl Iterator<Item = &usize> + '_ {
        self.indices.iter()
    }

    pub fn contains(&self, index: usize) -> bool {
        self.indices.binary_search(&index).is_ok()
    }

    /// `[n] \ self`.
    pub fn complement(&self, n: usize) -> Self {
        Self {
            indices: (0..n).filter(|&i| !self.contains(i)).collect(),
        }
    }
}
