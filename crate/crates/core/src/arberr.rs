//! McEliece variant with arbitrary-weight errors.
//!
//! Public key `(G1, G2) = (G·M, Q·(G0+T)·M)`, ciphertext `c = u·G1 + e·G2`
//! for any `e ∈ GF(2)^n`. The product `QT` is zero on the information set
//! `J` of the secret code, so after undoing `M` the positions in `J` carry
//! `u·G + e·Q·G0` with no error, which the key owner can decode directly.

use rand::Rng;

use crate::codes::LinearCode;
use crate::gf2::{random_full_column_rank, random_nonsingular, random_vector, BitMatrix, BitVector, IndexSet};
use crate::{Error, Result};

/// Keygen gives up after this many resamples of `G0`/`T`.
pub const KEYGEN_RETRIES: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArbErrPublicKey {
    /// `G·M`, `k × n`.
    pub g1: BitMatrix,
    /// `Q·(G0+T)·M`, `n × n` of rank `n − k`.
    pub g2: BitMatrix,
}

impl ArbErrPublicKey {
    pub fn n(&self) -> usize {
        self.g1.cols()
    }

    pub fn k(&self) -> usize {
        self.g1.rows()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArbErrCiphertext {
    pub c: BitVector,
}

#[derive(Clone, Debug)]
pub struct ArbErrPrivateKey {
    code: LinearCode,
    m: BitMatrix,
    m_inv: BitMatrix,
    t: BitMatrix,
    t_inv: BitMatrix,
    q: BitMatrix,
    g0: BitMatrix,
    qt: BitMatrix,
}

impl ArbErrPrivateKey {
    /// Assembles a key from its stored factors. Inverses and `QT` are
    /// recomputed; the `QT` structure on the code's information set is checked.
    pub fn from_parts(code: LinearCode, m: BitMatrix, t: BitMatrix, q: BitMatrix, g0: BitMatrix) -> Result<Self> {
        let n = code.n();
        for mat in [&m, &t, &q, &g0] {
            if mat.rows() != n || mat.cols() != n {
                return Err(Error::InvalidDimensions("M, T, Q and G0 must be n×n"));
            }
        }
        let m_inv = m.inverse()?;
        let t_inv = t.inverse()?;
        let qt = q.mul(&t)?;
        check_mask(&qt, code.info_set())?;
        Ok(Self {
            code,
            m,
            m_inv,
            t,
            t_inv,
            q,
            g0,
            qt,
        })
    }

    pub fn code(&self) -> &LinearCode {
        &self.code
    }

    pub fn m(&self) -> &BitMatrix {
        &self.m
    }

    pub fn t(&self) -> &BitMatrix {
        &self.t
    }

    pub fn q(&self) -> &BitMatrix {
        &self.q
    }

    pub fn g0(&self) -> &BitMatrix {
        &self.g0
    }

    pub fn qt(&self) -> &BitMatrix {
        &self.qt
    }

    pub fn public_key(&self) -> ArbErrPublicKey {
        let g1 = self.code.generator().mul(&self.m).expect("k×n times n×n");
        ArbErrPublicKey {
            g1,
            g2: public_mask(&self.q, &self.g0, &self.t, &self.m),
        }
    }
}

fn public_mask(q: &BitMatrix, g0: &BitMatrix, t: &BitMatrix, m: &BitMatrix) -> BitMatrix {
    let masked = g0.add(t).expect("both n×n");
    q.mul(&masked).and_then(|x| x.mul(m)).expect("all n×n")
}

fn check_mask(qt: &BitMatrix, info_set: &IndexSet) -> Result<()> {
    let redundancy = qt.rows() - info_set.len();
    if !qt.select_columns(info_set)?.is_zero() {
        return Err(Error::InvalidParameters("QT is not zero on the information set"));
    }
    if qt.rank() != redundancy {
        return Err(Error::InvalidParameters("QT does not have rank n-k"));
    }
    Ok(())
}

/// `Q = L·X_J` where the rows of `X_J` span the left kernel of `T_J` and
/// `L` is a random `n × (n−k)` matrix of full column rank.
///
/// `T` need not be invertible, only `T_J` must have full column rank;
/// `rank(QT)` then equals `n − k − corank(T)`.
pub fn mask_from_kernel<R: Rng + ?Sized>(t: &BitMatrix, info_set: &IndexSet, rng: &mut R) -> Result<BitMatrix> {
    let n = t.rows();
    if t.cols() != n || info_set.len() >= n {
        return Err(Error::InvalidDimensions("T must be n×n and |J| < n"));
    }
    let redundancy = n - info_set.len();
    let kernel = t.select_columns(info_set)?.left_kernel();
    if kernel.rows() != redundancy {
        return Err(Error::InvalidParameters("T restricted to J must have full column rank"));
    }
    let l = random_full_column_rank(n, redundancy, rng)?;
    l.mul(&kernel)
}

/// `Q` for a nonsingular `T`, such that `QT` vanishes on `J` and has rank `n − k`.
pub fn build_qt<R: Rng + ?Sized>(t: &BitMatrix, info_set: &IndexSet, rng: &mut R) -> Result<BitMatrix> {
    if t.rows() != t.cols() || t.rank() != t.rows() {
        return Err(Error::SingularMatrix);
    }
    let q = mask_from_kernel(t, info_set, rng)?;
    let qt = q.mul(t)?;
    assert!(qt.select_columns(info_set)?.is_zero(), "QT must vanish on J");
    assert_eq!(qt.rank(), t.rows() - info_set.len(), "rank(QT) must be n-k");
    Ok(q)
}

/// `n × n` matrix whose rows are encodings of uniformly random messages.
pub fn build_g0<R: Rng + ?Sized>(code: &LinearCode, rng: &mut R) -> BitMatrix {
    let messages: alloc::vec::Vec<BitVector> = (0..code.n()).map(|_| random_vector(code.k(), rng)).collect();
    let msg = BitMatrix::from_rows(code.k(), &messages).expect("rows have length k");
    msg.mul(code.generator()).expect("n×k times k×n")
}

/// Generates a key pair. `G0` is redrawn until `rank(G2) = n − k`, and every
/// eighth failure also redraws `T` and `Q`.
pub fn arb_keygen<R: Rng + ?Sized>(code: LinearCode, rng: &mut R) -> Result<(ArbErrPublicKey, ArbErrPrivateKey)> {
    let n = code.n();
    let redundancy = n - code.k();
    let m = random_nonsingular(n, rng);
    let mut t = random_nonsingular(n, rng);
    let mut q = build_qt(&t, code.info_set(), rng)?;
    for attempt in 0..=KEYGEN_RETRIES {
        let g0 = build_g0(&code, rng);
        let g2 = public_mask(&q, &g0, &t, &m);
        if g2.rank() == redundancy {
            let sk = ArbErrPrivateKey::from_parts(code, m, t, q, g0)?;
            let pk = ArbErrPublicKey {
                g1: sk.code.generator().mul(&sk.m)?,
                g2,
            };
            return Ok((pk, sk));
        }
        if attempt % 8 == 7 {
            t = random_nonsingular(n, rng);
            q = build_qt(&t, code.info_set(), rng)?;
        }
    }
    Err(Error::RetriesExceeded(KEYGEN_RETRIES))
}

/// `c = u·G1 + e·G2`; `e` may have any weight.
pub fn arb_encrypt(pk: &ArbErrPublicKey, message: &BitVector, error: &BitVector) -> Result<ArbErrCiphertext> {
    let mut c = message.mul_matrix(&pk.g1)?;
    c ^= &error.mul_matrix(&pk.g2)?;
    Ok(ArbErrCiphertext { c })
}

/// Encrypts with `e` drawn uniformly from all `2^n` vectors.
pub fn arb_encrypt_random<R: Rng + ?Sized>(
    pk: &ArbErrPublicKey,
    message: &BitVector,
    rng: &mut R,
) -> Result<ArbErrCiphertext> {
    let e = random_vector(pk.n(), rng);
    arb_encrypt(pk, message, &e)
}

/// Intermediate values of one decryption.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecryptionTrace {
    /// `c·M⁻¹`
    pub y: BitVector,
    /// `y_J·G_J⁻¹·G`, equal to `u·G + e·Q·G0`
    pub codeword: BitVector,
    /// `y − codeword`, equal to `e·QT`
    pub e_qt: BitVector,
    /// `e·Q`
    pub e_q: BitVector,
    /// `codeword − e·Q·G0`, equal to `u·G`
    pub u_g: BitVector,
    pub message: BitVector,
}

/// Decrypts, keeping every intermediate vector.
pub fn arb_decrypt_trace(sk: &ArbErrPrivateKey, ct: &ArbErrCiphertext) -> Result<DecryptionTrace> {
    let y = ct.c.mul_matrix(&sk.m_inv)?;
    let codeword = sk.code.encode(&sk.code.message_from_info_set(&y)?)?;
    let e_qt = &y ^ &codeword;
    let e_q = e_qt.mul_matrix(&sk.t_inv)?;
    let u_g = &codeword ^ &e_q.mul_matrix(&sk.g0)?;
    if !sk.code.is_codeword(&u_g) {
        return Err(Error::MalformedCiphertext);
    }
    let message = sk.code.message_from_info_set(&u_g)?;
    Ok(DecryptionTrace {
        y,
        codeword,
        e_qt,
        e_q,
        u_g,
        message,
    })
}

pub fn arb_decrypt(sk: &ArbErrPrivateKey, ct: &ArbErrCiphertext) -> Result<BitVector> {
    arb_decrypt_trace(sk, ct).map(|trace| trace.message)
}
