//! Exhaustive attacks that use only the public key.

use alloc::vec;
use alloc::vec::Vec;

use crate::arberr::{ArbErrCiphertext, ArbErrPublicKey};
use crate::codes::gray;
use crate::gf2::{BitMatrix, BitVector, RowEchelon};
use crate::{Error, Result};

/// Largest `min(k, rank G2)` the direct attack will enumerate.
pub const DIRECT_ATTACK_LIMIT: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectOutcome {
    pub message: BitVector,
    /// Candidates checked for membership in the other row space.
    pub candidates_tested: u64,
}

/// Solves `c = u·G1 + e·G2` for `u` by enumerating whichever of
/// `rowspace(G1)` and `rowspace(G2)` is smaller and testing membership in
/// the other.
///
/// Fails with [`Error::NoSolution`] or [`Error::MultipleSolutions`] when
/// `u` is not determined.
pub fn direct_attack_bruteforce(pk: &ArbErrPublicKey, ct: &ArbErrCiphertext) -> Result<DirectOutcome> {
    let (k, n) = (pk.k(), pk.n());
    if ct.c.len() != n || pk.g2.cols() != n {
        return Err(Error::DimensionMismatch {
            op: "direct attack",
            expected: n,
            actual: ct.c.len(),
        });
    }
    let ech2 = RowEchelon::new(&pk.g2);
    let r = ech2.rank();
    let side = k.min(r);
    if side > DIRECT_ATTACK_LIMIT {
        return Err(Error::DimensionTooLarge {
            k: side,
            limit: DIRECT_ATTACK_LIMIT,
        });
    }
    let mut found: Option<BitVector> = None;
    let mut tested = 0u64;
    let mut record = |u: BitVector| -> Result<()> {
        match &found {
            Some(prev) if *prev != u => Err(Error::MultipleSolutions),
            _ => {
                found = Some(u);
                Ok(())
            }
        }
    };
    if k <= r {
        // walk u in Gray order, keep c + u·G1 up to date
        let mut cand = ct.c.clone();
        for i in 0u64..1 << k {
            if i > 0 {
                cand ^= &pk.g1.row(i.trailing_zeros() as usize);
            }
            tested += 1;
            if ech2.contains(&cand) {
                record(BitVector::from_u64(k, gray(i)))?;
            }
        }
    } else {
        let basis = BitMatrix::from_rows(n, &(0..r).map(|i| ech2.reduced().row(i)).collect::<Vec<_>>())?;
        let ech1 = RowEchelon::new(&pk.g1);
        if ech1.rank() < k {
            return Err(Error::RankDeficient {
                rank: ech1.rank(),
                rows: k,
            });
        }
        let mut cand = ct.c.clone();
        for i in 0u64..1 << r {
            if i > 0 {
                cand ^= &basis.row(i.trailing_zeros() as usize);
            }
            tested += 1;
            if let Some(u) = ech1.solve_left(&cand) {
                record(u)?;
            }
        }
    }
    found
        .map(|message| DirectOutcome {
            message,
            candidates_tested: tested,
        })
        .ok_or(Error::NoSolution)
}

/// Largest `k` and `n` accepted by [`uniqueness_check`].
pub const UNIQUENESS_K_LIMIT: usize = 7;
pub const UNIQUENESS_N_LIMIT: usize = 15;

/// True when no two `(u, e)` with different `u` give the same ciphertext,
/// i.e. `rowspace(G1) ∩ rowspace(G2) = {0}`, checked by exhausting all
/// `2^(k+n)` pairs.
pub fn uniqueness_check(pk: &ArbErrPublicKey) -> Result<bool> {
    let (k, n) = (pk.k(), pk.n());
    if k > UNIQUENESS_K_LIMIT || n > UNIQUENESS_N_LIMIT {
        return Err(Error::InvalidParameters("uniqueness check needs k <= 7 and n <= 15"));
    }
    let g1 = row_words(&pk.g1);
    let noise = all_combinations(&row_words(&pk.g2));
    const UNSEEN: u8 = u8::MAX;
    let mut owner = vec![UNSEEN; 1 << n];
    for u in 0u64..1 << k {
        let base = combine(&g1, u);
        for &v in &noise {
            let c = (base ^ v) as usize;
            match owner[c] {
                UNSEEN => owner[c] = u as u8,
                prev if prev as u64 != u => return Ok(false),
                _ => {}
            }
        }
    }
    Ok(true)
}

/// Number of distinct ciphertexts `u·G1 + e·G2` for a fixed message,
/// `2^rank(G2)`. Exhaustive, same limits as [`uniqueness_check`].
pub fn ciphertexts_per_message(pk: &ArbErrPublicKey) -> Result<usize> {
    if pk.k() > UNIQUENESS_K_LIMIT || pk.n() > UNIQUENESS_N_LIMIT {
        return Err(Error::InvalidParameters("needs k <= 7 and n <= 15"));
    }
    let mut seen = vec![false; 1 << pk.n()];
    for v in all_combinations(&row_words(&pk.g2)) {
        seen[v as usize] = true;
    }
    Ok(seen.into_iter().filter(|&s| s).count())
}

fn row_words(m: &BitMatrix) -> Vec<u64> {
    (0..m.rows())
        .map(|i| m.row_words(i).first().copied().unwrap_or(0))
        .collect()
}

fn combine(rows: &[u64], mask: u64) -> u64 {
    rows.iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .fold(0, |acc, (_, w)| acc ^ w)
}

fn all_combinations(rows: &[u64]) -> Vec<u64> {
    let mut out = Vec::with_capacity(1 << rows.len());
    let mut acc = 0u64;
    out.push(acc);
    for i in 1u64..1 << rows.len() {
        acc ^= rows[i.trailing_zeros() as usize];
        out.push(acc);
    }
    out
}
