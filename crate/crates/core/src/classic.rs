//! The original McEliece scheme, `c = u·S·G·P + e` with `wt(e) ≤ t`.
//!
//! Decoding uses a complete syndrome table (one minimum-weight coset leader
//! per syndrome), so it is limited to `n − k ≤ 24`.

use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;

use crate::codes::{min_distance, LinearCode, EXHAUSTIVE_K_LIMIT};
use crate::gf2::{random_nonsingular, random_permutation_matrix, BitMatrix, BitVector};
use crate::{Error, Result};

/// Largest redundancy `n − k` for which a syndrome table is built.
pub const SYNDROME_TABLE_LIMIT: usize = 24;

/// Minimum-weight coset leader for every syndrome.
///
/// Syndrome `s = e·Hᵀ` is indexed by the integer whose bit `i` is `s_i`.
/// Leaders are found weight by weight, so the first pattern stored for a
/// syndrome has minimal weight in its coset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyndromeTable {
    n: usize,
    redundancy: usize,
    stride: usize,
    leaders: Vec<u64>,
    unique_radius: usize,
    max_leader_weight: usize,
}

impl SyndromeTable {
    pub fn build(code: &LinearCode) -> Result<Self> {
        let n = code.n();
        let redundancy = n - code.k();
        if redundancy > SYNDROME_TABLE_LIMIT {
            return Err(Error::TableTooLarge {
                redundancy,
                limit: SYNDROME_TABLE_LIMIT,
            });
        }
        let h = code.parity_check();
        let column_syndromes: Vec<u32> = (0..n).map(|j| h.column(j).to_u64() as u32).collect();
        let size = 1usize << redundancy;
        let stride = n.div_ceil(64);
        let mut leaders = vec![0u64; size * stride];
        let mut filled = vec![false; size];
        filled[0] = true;
        let mut remaining = size - 1;
        let mut unique_radius = 0;
        let mut radius_open = true;

        let mut weight = 1;
        while remaining > 0 {
            let mut collided = false;
            let mut support = Vec::with_capacity(weight);
            for_each_combination(n, weight, &mut support, 0, 0, &column_syndromes, &mut |supp, syn| {
                let idx = syn as usize;
                if filled[idx] {
                    collided = true;
                } else {
                    filled[idx] = true;
                    remaining -= 1;
                    let slot = &mut leaders[idx * stride..(idx + 1) * stride];
                    for &j in supp {
                        slot[j / 64] |= 1u64 << (j % 64);
                    }
                }
            });
            if radius_open {
                if collided {
                    radius_open = false;
                } else {
                    unique_radius = weight;
                }
            }
            weight += 1;
        }
        let max_leader_weight = (0..size)
            .map(|i| {
                leaders[i * stride..(i + 1) * stride]
                    .iter()
                    .map(|w| w.count_ones() as usize)
                    .sum()
            })
            .max()
            .unwrap_or(0);
        Ok(Self {
            n,
            redundancy,
            stride,
            leaders,
            unique_radius,
            max_leader_weight,
        })
    }

    /// Number of syndromes, `2^{n−k}`.
    pub fn len(&self) -> usize {
        1 << self.redundancy
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Largest `w` such that all error patterns of weight `≤ w` have distinct
    /// syndromes; equivalently the code corrects `w` errors.
    pub fn unique_radius(&self) -> usize {
        self.unique_radius
    }

    /// Covering radius of the code.
    pub fn max_leader_weight(&self) -> usize {
        self.max_leader_weight
    }

    pub fn leader_by_index(&self, index: usize) -> BitVector {
        BitVector::from_words(
            self.n,
            self.leaders[index * self.stride..(index + 1) * self.stride].to_vec(),
        )
    }

    pub fn leader(&self, syndrome: &BitVector) -> BitVector {
        assert_eq!(syndrome.len(), self.redundancy);
        self.leader_by_index(syndrome.to_u64() as usize)
    }
}

fn for_each_combination(
    n: usize,
    weight: usize,
    support: &mut Vec<usize>,
    from: usize,
    syndrome: u32,
    columns: &[u32],
    visit: &mut impl FnMut(&[usize], u32),
) {
    if support.len() == weight {
        visit(support, syndrome);
        return;
    }
    let need = weight - support.len();
    for j in from..=n - need {
        support.push(j);
        for_each_combination(n, weight, support, j + 1, syndrome ^ columns[j], columns, visit);
        support.pop();
    }
}

/// `(G' = S·G·P, t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicPublicKey {
    pub g_pub: BitMatrix,
    pub t: usize,
}

impl ClassicPublicKey {
    pub fn n(&self) -> usize {
        self.g_pub.cols()
    }

    pub fn k(&self) -> usize {
        self.g_pub.rows()
    }
}

/// `(S, G, P)` plus cached inverses and the decoder table.
#[derive(Clone, Debug)]
pub struct ClassicPrivateKey {
    s: BitMatrix,
    code: LinearCode,
    p: BitMatrix,
    t: usize,
    s_inv: BitMatrix,
    p_inv: BitMatrix,
    table: SyndromeTable,
}

impl ClassicPrivateKey {
    /// Assembles a private key, recomputing inverses and the syndrome table.
    pub fn from_parts(s: BitMatrix, code: LinearCode, p: BitMatrix, t: usize) -> Result<Self> {
        if s.rows() != code.k() || p.rows() != code.n() {
            return Err(Error::InvalidDimensions("S must be k×k and P n×n"));
        }
        if (0..p.rows()).any(|i| p.row(i).weight() != 1) || (0..p.cols()).any(|j| p.column(j).weight() != 1) {
            return Err(Error::InvalidParameters("P is not a permutation matrix"));
        }
        if t == 0 {
            return Err(Error::InvalidParameters("t must be at least 1"));
        }
        let s_inv = s.inverse()?;
        let p_inv = p.transpose();
        let table = SyndromeTable::build(&code)?;
        if t > table.unique_radius() {
            let distance = if code.k() <= EXHAUSTIVE_K_LIMIT {
                min_distance(&code)?
            } else {
                2 * table.unique_radius() + 1
            };
            return Err(Error::DistanceTooSmall {
                required: 2 * t + 1,
                distance,
            });
        }
        Ok(Self {
            s,
            code,
            p,
            t,
            s_inv,
            p_inv,
            table,
        })
    }

    pub fn s(&self) -> &BitMatrix {
        &self.s
    }

    pub fn code(&self) -> &LinearCode {
        &self.code
    }

    pub fn p(&self) -> &BitMatrix {
        &self.p
    }

    pub fn p_inv(&self) -> &BitMatrix {
        &self.p_inv
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn table(&self) -> &SyndromeTable {
        &self.table
    }

    pub fn public_key(&self) -> ClassicPublicKey {
        let g_pub = self
            .s
            .mul(self.code.generator())
            .and_then(|sg| sg.mul(&self.p))
            .expect("dimensions checked at construction");
        ClassicPublicKey { g_pub, t: self.t }
    }
}

pub fn classic_keygen<R: Rng + ?Sized>(
    code: LinearCode,
    t: usize,
    rng: &mut R,
) -> Result<(ClassicPublicKey, ClassicPrivateKey)> {
    let redundancy = code.n() - code.k();
    if redundancy > SYNDROME_TABLE_LIMIT {
        return Err(Error::TableTooLarge {
            redundancy,
            limit: SYNDROME_TABLE_LIMIT,
        });
    }
    let s = random_nonsingular(code.k(), rng);
    let p = random_permutation_matrix(code.n(), rng);
    let sk = ClassicPrivateKey::from_parts(s, code, p, t)?;
    Ok((sk.public_key(), sk))
}

/// `c = u·G' + e`.
pub fn classic_encrypt(pk: &ClassicPublicKey, message: &BitVector, error: &BitVector) -> Result<BitVector> {
    if error.len() != pk.n() {
        return Err(Error::DimensionMismatch {
            op: "classic_encrypt error vector",
            expected: pk.n(),
            actual: error.len(),
        });
    }
    let weight = error.weight();
    if weight > pk.t {
        return Err(Error::WeightExceedsT { weight, t: pk.t });
    }
    let mut c = message.mul_matrix(&pk.g_pub)?;
    c ^= error;
    Ok(c)
}

/// Unpermute, decode to the nearest codeword, strip `S`.
pub fn classic_decrypt(sk: &ClassicPrivateKey, ciphertext: &BitVector) -> Result<BitVector> {
    let unpermuted = ciphertext.mul_matrix(&sk.p_inv)?;
    let syndrome = sk.code.syndrome(&unpermuted)?;
    let leader = sk.table.leader(&syndrome);
    let weight = leader.weight();
    if weight > sk.t {
        return Err(Error::DecodeFailure { weight, t: sk.t });
    }
    let codeword = &unpermuted ^ &leader;
    let scrambled = sk.code.message_from_info_set(&codeword)?;
    scrambled.mul_matrix(&sk.s_inv)
}
