//! Weight enumeration by Gray-code traversal of the message space.
//!
//! Consecutive messages in reflected binary order differ in one bit, so each
//! codeword is the previous one XOR a single generator row. For `n ≤ 64` the
//! whole walk runs on one machine word per codeword.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand::Rng;

use super::LinearCode;
use crate::gf2::{random_vector, BitMatrix};
use crate::{Error, Result};

/// Largest dimension for which exact enumeration is offered.
pub const EXHAUSTIVE_K_LIMIT: usize = 26;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpectrumMethod {
    Exact,
    Sampled { sample_size: u64 },
}

/// `counts[w]` codewords of weight `w`.
///
/// For sampled spectra `counts` holds raw tallies over the sample; use
/// [`estimated_counts`](Self::estimated_counts) for the scaled estimate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSpectrum {
    pub n: usize,
    pub k: usize,
    pub counts: Vec<u64>,
    pub method: SpectrumMethod,
}

impl WeightSpectrum {
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Smallest nonzero weight that occurs.
    pub fn min_nonzero_weight(&self) -> Option<usize> {
        self.counts.iter().skip(1).position(|&c| c > 0).map(|w| w + 1)
    }

    /// Counts scaled to the full code size `2^k`.
    pub fn estimated_counts(&self) -> Vec<f64> {
        match self.method {
            SpectrumMethod::Exact => self.counts.iter().map(|&c| c as f64).collect(),
            SpectrumMethod::Sampled { sample_size } => {
                let scale = libm::ldexp(1.0, self.k as i32) / sample_size as f64;
                self.counts.iter().map(|&c| c as f64 * scale).collect()
            }
        }
    }

    /// Plot table, one `weight count` pair per line.
    pub fn write_table(&self, out: &mut impl fmt::Write) -> fmt::Result {
        match self.method {
            SpectrumMethod::Exact => {
                for (w, c) in self.counts.iter().enumerate() {
                    writeln!(out, "{w} {c}")?;
                }
            }
            SpectrumMethod::Sampled { .. } => {
                for (w, c) in self.estimated_counts().iter().enumerate() {
                    writeln!(out, "{w} {c}")?;
                }
            }
        }
        Ok(())
    }
}

/// Exact weight spectrum of a code with `k ≤ 26`.
pub fn weight_spectrum(code: &LinearCode) -> Result<WeightSpectrum> {
    guard(code.k())?;
    Ok(exact_spectrum(code.generator()))
}

/// Minimum distance of a code with `k ≤ 26`, by exhaustive enumeration.
pub fn min_distance(code: &LinearCode) -> Result<usize> {
    let spectrum = weight_spectrum(code)?;
    Ok(spectrum.min_nonzero_weight().unwrap_or(0))
}

/// Spectrum estimated from `sample_size` uniformly random messages.
pub fn sampled_weight_spectrum<R: Rng + ?Sized>(code: &LinearCode, sample_size: u64, rng: &mut R) -> WeightSpectrum {
    let mut counts = vec![0u64; code.n() + 1];
    for _ in 0..sample_size {
        let u = random_vector(code.k(), rng);
        let w = u.mul_matrix(code.generator()).expect("message length is k").weight();
        counts[w] += 1;
    }
    WeightSpectrum {
        n: code.n(),
        k: code.k(),
        counts,
        method: SpectrumMethod::Sampled { sample_size },
    }
}

fn guard(k: usize) -> Result<()> {
    if k > EXHAUSTIVE_K_LIMIT {
        return Err(Error::DimensionTooLarge {
            k,
            limit: EXHAUSTIVE_K_LIMIT,
        });
    }
    Ok(())
}

/// Exact spectrum of the row space of `generator` (rows assumed independent),
/// without the dimension guard. Callers bound the work themselves.
pub(crate) fn exact_spectrum(generator: &BitMatrix) -> WeightSpectrum {
    let k = generator.rows();
    assert!(k < 40, "exhaustive enumeration over 2^{k} messages");
    WeightSpectrum {
        n: generator.cols(),
        k,
        counts: weight_counts_in_range(generator, 0, 1u64 << k),
        method: SpectrumMethod::Exact,
    }
}

/// Reflected binary Gray code of `i`.
#[inline]
pub fn gray(i: u64) -> u64 {
    i ^ (i >> 1)
}

/// Weight tallies of the codewords for messages `gray(start), …, gray(end−1)`.
///
/// Disjoint ranges can be processed independently and summed; the result is
/// the same as one pass over the union.
pub fn weight_counts_in_range(generator: &BitMatrix, start: u64, end: u64) -> Vec<u64> {
    let n = generator.cols();
    let mut counts = vec![0u64; n + 1];
    if start >= end {
        return counts;
    }
    if generator.stride() <= 1 {
        let rows: Vec<u64> = (0..generator.rows())
            .map(|i| generator.row_words(i).first().copied().unwrap_or(0))
            .collect();
        let mut acc = start_word(&rows, gray(start));
        counts[acc.count_ones() as usize] += 1;
        for i in start + 1..end {
            acc ^= rows[i.trailing_zeros() as usize];
            counts[acc.count_ones() as usize] += 1;
        }
    } else {
        let stride = generator.stride();
        let mut acc = vec![0u64; stride];
        let first = gray(start);
        for r in 0..generator.rows() {
            if first >> r & 1 == 1 {
                for (a, b) in acc.iter_mut().zip(generator.row_words(r)) {
                    *a ^= b;
                }
            }
        }
        let weight = |acc: &[u64]| acc.iter().map(|w| w.count_ones() as usize).sum::<usize>();
        counts[weight(&acc)] += 1;
        for i in start + 1..end {
            let row = generator.row_words(i.trailing_zeros() as usize);
            for (a, b) in acc.iter_mut().zip(row) {
                *a ^= b;
            }
            counts[weight(&acc)] += 1;
        }
    }
    counts
}

fn start_word(rows: &[u64], message: u64) -> u64 {
    rows.iter()
        .enumerate()
        .filter(|(r, _)| message >> r & 1 == 1)
        .fold(0, |acc, (_, w)| acc ^ w)
}
