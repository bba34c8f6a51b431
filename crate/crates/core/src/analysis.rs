//! Public-key sizes and workfactors for comparing the two schemes.

use alloc::vec::Vec;
use core::fmt;

use crate::attacks::isd_expected_iterations;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Scheme {
    Classic,
    ArbitraryError,
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Classic => "classic",
            Self::ArbitraryError => "arberr",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ParameterPoint {
    pub n: u64,
    pub k: u64,
    pub t: u64,
    pub scheme: Scheme,
}

impl ParameterPoint {
    pub fn new(n: u64, k: u64, t: u64, scheme: Scheme) -> Result<Self> {
        if k == 0 || k >= n {
            return Err(Error::InvalidParameters("need 0 < k < n"));
        }
        Ok(Self { n, k, t, scheme })
    }

    pub fn key_bits(&self) -> u64 {
        match self.scheme {
            Scheme::Classic => classic_key_bits(self.n, self.k),
            Scheme::ArbitraryError => new_key_bits(self.n, self.k),
        }
    }

    /// Log2 of the cost of the best attack considered for the scheme.
    pub fn workfactor_log2(&self) -> Result<f64> {
        match self.scheme {
            Scheme::Classic => classic_workfactor_log2(self.n, self.k, self.t),
            Scheme::ArbitraryError => Ok(new_workfactor_log2(self.n, self.k)),
        }
    }
}

/// Systematic public generator of classic McEliece: `k(n−k)` bits.
pub fn classic_key_bits(n: u64, k: u64) -> u64 {
    k * (n - k)
}

/// `G2` in full plus a systematic `G1`: `n² + k(n−k)` bits.
pub fn new_key_bits(n: u64, k: u64) -> u64 {
    n * n + k * (n - k)
}

/// `n² + n(n−k)`, a second count some tables use for the same key.
pub fn new_key_bits_alternate(n: u64, k: u64) -> u64 {
    n * n + n * (n - k)
}

/// Exponent of the direct attack, `min(k, n−k)`.
pub fn new_workfactor_log2(n: u64, k: u64) -> f64 {
    k.min(n - k) as f64
}

/// `log2 τ` for plain information-set decoding.
pub fn classic_workfactor_log2(n: u64, k: u64, t: u64) -> Result<f64> {
    Ok(isd_expected_iterations(n as usize, k as usize, t as usize)?.log2())
}

#[derive(Clone, Debug, PartialEq)]
pub struct ComparisonRow {
    pub classic_point: ParameterPoint,
    pub new_point: ParameterPoint,
    pub classic_key_bits: u64,
    pub new_key_bits: u64,
    pub new_key_bits_alternate: u64,
    pub classic_workfactor: f64,
    pub new_workfactor: f64,
    /// `classic_key_bits / new_key_bits`
    pub ratio: f64,
}

pub fn comparison_row(classic: ParameterPoint, new: ParameterPoint) -> Result<ComparisonRow> {
    let classic_key_bits = classic_key_bits(classic.n, classic.k);
    let new_bits = new_key_bits(new.n, new.k);
    Ok(ComparisonRow {
        classic_point: classic,
        new_point: new,
        classic_key_bits,
        new_key_bits: new_bits,
        new_key_bits_alternate: new_key_bits_alternate(new.n, new.k),
        classic_workfactor: classic_workfactor_log2(classic.n, classic.k, classic.t)?,
        new_workfactor: new_workfactor_log2(new.n, new.k),
        ratio: classic_key_bits as f64 / new_bits as f64,
    })
}

pub fn comparison_table(pairs: &[(ParameterPoint, ParameterPoint)]) -> Result<Vec<ComparisonRow>> {
    pairs.iter().map(|&(c, n)| comparison_row(c, n)).collect()
}

/// Classic parameters paired with arbitrary-error parameters of roughly the
/// same workfactor.
pub fn reference_pairs() -> Vec<(ParameterPoint, ParameterPoint)> {
    let classic = |n, k, t| ParameterPoint {
        n,
        k,
        t,
        scheme: Scheme::Classic,
    };
    let new = |n, k, t| ParameterPoint {
        n,
        k,
        t,
        scheme: Scheme::ArbitraryError,
    };
    alloc::vec![
        (classic(1024, 524, 50), new(127, 71, 9)),
        (classic(2048, 1751, 27), new(255, 79, 27)),
        (classic(6960, 5413, 119), new(1023, 268, 103)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn key_sizes() {
        assert_eq!(classic_key_bits(1024, 524), 262_000);
        assert_eq!(classic_key_bits(6960, 5413), 8_373_911);
        assert_eq!(classic_key_bits(2, 1), 1);
        assert_eq!(new_key_bits(127, 71), 20_105);
        assert_eq!(new_key_bits(255, 79), 78_929);
        assert_eq!(new_key_bits(1023, 268), 1_248_869);
        assert_eq!(new_key_bits_alternate(1023, 268), 1_818_894);
        assert_eq!(new_key_bits(63, 24), 4905);
    }

    #[test]
    fn workfactors() {
        assert_eq!(new_workfactor_log2(127, 71), 56.0);
        assert_eq!(new_workfactor_log2(255, 79), 79.0);
        assert_eq!(new_workfactor_log2(1023, 268), 268.0);
        assert!((classic_workfactor_log2(1024, 524, 50).unwrap() - 53.0).abs() <= 1.0);
        assert!((classic_workfactor_log2(6960, 5413, 119).unwrap() - 263.0).abs() <= 2.0);
        assert!(classic_workfactor_log2(10, 8, 3).is_err());
    }

    #[test]
    fn workfactor_increases_with_t() {
        let mut prev = classic_workfactor_log2(255, 131, 0).unwrap();
        for t in 1..=124 {
            let w = classic_workfactor_log2(255, 131, t).unwrap();
            assert!(w > prev, "t = {t}");
            prev = w;
        }
    }

    #[test]
    fn new_key_always_larger_at_equal_parameters() {
        for n in 2..200u64 {
            for k in 1..n {
                assert!(new_key_bits(n, k) > classic_key_bits(n, k));
            }
        }
        let p = ParameterPoint::new(63, 24, 7, Scheme::Classic).unwrap();
        let q = ParameterPoint {
            scheme: Scheme::ArbitraryError,
            ..p
        };
        assert!(comparison_row(p, q).unwrap().ratio < 1.0);
    }

    #[test]
    fn reference_table() {
        let rows = comparison_table(&reference_pairs()).unwrap();
        assert!(rows[0].ratio > 13.0);
        assert_eq!(rows[1].classic_key_bits, 520_047);
        assert!((6.5..=6.7).contains(&rows[1].ratio));
        for r in &rows {
            assert_eq!(r.ratio, r.classic_key_bits as f64 / r.new_key_bits as f64);
        }
    }
}
