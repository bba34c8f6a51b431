//! Plain information-set decoding and its expected cost.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use rand::Rng;

use crate::arberr::{arb_encrypt, ArbErrPublicKey};
use crate::binom::{binomial, log2_ratio};
use crate::classic::{classic_encrypt, ClassicPublicKey};
use crate::gf2::{random_vector, random_vector_of_weight, BitMatrix, BitVector, IndexSet, RowEchelon};
use crate::seed::trial_rng;
use crate::{Error, Result};

/// Acceptance test applied to the residual `c + u·G`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum WeightCriterion {
    /// `wt ≤ t`
    #[default]
    AtMost,
    /// `wt = t`
    Exactly,
}

impl WeightCriterion {
    fn accepts(self, weight: usize, t: usize) -> bool {
        match self {
            Self::AtMost => weight <= t,
            Self::Exactly => weight == t,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IsdConfig {
    pub t: usize,
    pub max_iters: usize,
    pub criterion: WeightCriterion,
}

impl IsdConfig {
    pub fn new(t: usize, max_iters: usize) -> Self {
        Self {
            t,
            max_iters,
            criterion: WeightCriterion::AtMost,
        }
    }
}

/// A successful decoding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsdOutcome {
    pub message: BitVector,
    /// Information sets tried, counting only those with invertible `G_J`.
    pub iterations: usize,
    /// Draws rejected because `G_J` was singular.
    pub singular_draws: usize,
}

/// Singular draws allowed per counted iteration before giving up.
const SINGULAR_DRAW_FACTOR: usize = 64;

/// Prange decoding of `c = u·G + e`: guess `k` positions free of errors,
/// solve for `u` there, accept if the residual is light enough.
pub fn isd_prange<R: Rng + ?Sized>(
    g_pub: &BitMatrix,
    c: &BitVector,
    t: usize,
    rng: &mut R,
    max_iters: usize,
) -> Result<IsdOutcome> {
    isd_prange_with(g_pub, c, &IsdConfig::new(t, max_iters), rng)
}

pub fn isd_prange_with<R: Rng + ?Sized>(
    g_pub: &BitMatrix,
    c: &BitVector,
    config: &IsdConfig,
    rng: &mut R,
) -> Result<IsdOutcome> {
    let (k, n) = (g_pub.rows(), g_pub.cols());
    if c.len() != n {
        return Err(Error::DimensionMismatch {
            op: "isd_prange ciphertext",
            expected: n,
            actual: c.len(),
        });
    }
    if config.max_iters == 0 || k == 0 || k >= n {
        return Err(Error::InvalidParameters("isd needs max_iters >= 1 and 0 < k < n"));
    }
    let mut iterations = 0;
    let mut singular_draws = 0;
    while iterations < config.max_iters {
        let mut picks: Vec<usize> = rand::seq::index::sample(rng, n, k).into_vec();
        picks.sort_unstable();
        let info_set = IndexSet::new(picks, n)?;
        let restricted = g_pub.select_columns(&info_set)?;
        let ech = RowEchelon::new(&restricted);
        if ech.rank() < k {
            singular_draws += 1;
            if singular_draws > SINGULAR_DRAW_FACTOR * config.max_iters {
                break;
            }
            continue;
        }
        iterations += 1;
        let Some(message) = ech.solve_left(&c.select(&info_set)?) else {
            unreachable!("G_J is invertible");
        };
        let residual = c ^ &message.mul_matrix(g_pub)?;
        if config.criterion.accepts(residual.weight(), config.t) {
            return Ok(IsdOutcome {
                message,
                iterations,
                singular_draws,
            });
        }
    }
    Err(Error::NotFound { iterations })
}

/// `τ = C(n, t) / C(n−k, t)`, the expected number of information sets tried
/// before one misses all `t` error positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsdWorkfactor {
    pub numerator: BigUint,
    pub denominator: BigUint,
}

impl IsdWorkfactor {
    pub fn log2(&self) -> f64 {
        log2_ratio(&self.numerator, &self.denominator)
    }

    /// `τ` as a float; infinite once it leaves the `f64` range.
    pub fn value(&self) -> f64 {
        libm::exp2(self.log2())
    }
}

pub fn isd_expected_iterations(n: usize, k: usize, t: usize) -> Result<IsdWorkfactor> {
    if k == 0 || k >= n || t > n - k {
        return Err(Error::InvalidParameters("need 0 < k < n and t <= n - k"));
    }
    Ok(IsdWorkfactor {
        numerator: binomial(n as u64, t as u64),
        denominator: binomial((n - k) as u64, t as u64),
    })
}

/// One simulated attack.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsdTrial {
    /// ISD accepted some message.
    pub found: bool,
    /// The accepted message is the one that was encrypted.
    pub correct: bool,
    pub iterations: usize,
    /// Weight of the noise ISD had to remove (`e` or `e·G2`).
    pub channel_weight: usize,
}

fn run_trial<R: Rng + ?Sized>(
    g: &BitMatrix,
    c: &BitVector,
    truth: &BitVector,
    channel_weight: usize,
    config: &IsdConfig,
    rng: &mut R,
) -> Result<IsdTrial> {
    match isd_prange_with(g, c, config, rng) {
        Ok(out) => Ok(IsdTrial {
            found: true,
            correct: &out.message == truth,
            iterations: out.iterations,
            channel_weight,
        }),
        Err(Error::NotFound { iterations }) => Ok(IsdTrial {
            found: false,
            correct: false,
            iterations,
            channel_weight,
        }),
        Err(e) => Err(e),
    }
}

/// Attack on a fresh classic ciphertext with an error of weight exactly `t`.
pub fn isd_classic_trial(pk: &ClassicPublicKey, config: &IsdConfig, master_seed: u64, index: u64) -> Result<IsdTrial> {
    let mut rng = trial_rng(master_seed, index);
    let u = random_vector(pk.k(), &mut rng);
    let e = random_vector_of_weight(pk.n(), pk.t, &mut rng);
    let c = classic_encrypt(pk, &u, &e)?;
    run_trial(&pk.g_pub, &c, &u, e.weight(), config, &mut rng)
}

/// How errors are drawn for attacks on the arbitrary-error scheme.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorModel {
    /// Uniform over all `2^n` vectors.
    Uniform,
    /// `e = 0`; the ciphertext is a clean codeword of `G1`.
    Zero,
}

/// ISD against `G1`, treating `e·G2` as channel noise.
pub fn isd_scheme_trial(
    pk: &ArbErrPublicKey,
    config: &IsdConfig,
    model: ErrorModel,
    master_seed: u64,
    index: u64,
) -> Result<IsdTrial> {
    let mut rng = trial_rng(master_seed, index);
    let u = random_vector(pk.k(), &mut rng);
    let e = match model {
        ErrorModel::Uniform => random_vector(pk.n(), &mut rng),
        ErrorModel::Zero => BitVector::zeros(pk.n()),
    };
    let noise = e.mul_matrix(&pk.g2)?;
    let ct = arb_encrypt(pk, &u, &e)?;
    run_trial(&pk.g1, &ct.c, &u, noise.weight(), config, &mut rng)
}

/// Aggregate over many [`IsdTrial`]s, in trial order.
#[derive(Clone, Debug, PartialEq)]
pub struct IsdReport {
    pub n: usize,
    pub k: usize,
    pub t: usize,
    pub trials: usize,
    pub found: usize,
    pub correct: usize,
    /// Mean counted iterations over the trials that recovered the message.
    pub mean_iterations: f64,
    /// `τ` for `(n, k, t)`.
    pub expected_iterations: f64,
    /// `channel_weight_histogram[w]` trials whose noise had weight `w`.
    pub channel_weight_histogram: Vec<u64>,
}

impl IsdReport {
    pub fn from_trials(n: usize, k: usize, t: usize, trials: &[IsdTrial]) -> Result<Self> {
        let mut histogram = vec![0u64; n + 1];
        for tr in trials {
            histogram[tr.channel_weight] += 1;
        }
        let correct: Vec<&IsdTrial> = trials.iter().filter(|tr| tr.correct).collect();
        let mean_iterations = if correct.is_empty() {
            f64::NAN
        } else {
            correct.iter().map(|tr| tr.iterations as f64).sum::<f64>() / correct.len() as f64
        };
        Ok(Self {
            n,
            k,
            t,
            trials: trials.len(),
            found: trials.iter().filter(|tr| tr.found).count(),
            correct: correct.len(),
            mean_iterations,
            expected_iterations: isd_expected_iterations(n, k, t)?.value(),
            channel_weight_histogram: histogram,
        })
    }

    pub fn success_rate(&self) -> f64 {
        self.correct as f64 / self.trials as f64
    }
}

/// ISD statistics against classic McEliece.
pub fn isd_classic_experiment(
    pk: &ClassicPublicKey,
    config: &IsdConfig,
    trials: usize,
    master_seed: u64,
) -> Result<IsdReport> {
    let runs = (0..trials as u64)
        .map(|i| isd_classic_trial(pk, config, master_seed, i))
        .collect::<Result<Vec<_>>>()?;
    IsdReport::from_trials(pk.n(), pk.k(), config.t, &runs)
}

/// ISD run against honest ciphertexts of the arbitrary-error scheme.
pub fn isd_on_new_scheme_experiment(
    pk: &ArbErrPublicKey,
    config: &IsdConfig,
    model: ErrorModel,
    trials: usize,
    master_seed: u64,
) -> Result<IsdReport> {
    let runs = (0..trials as u64)
        .map(|i| isd_scheme_trial(pk, config, model, master_seed, i))
        .collect::<Result<Vec<_>>>()?;
    IsdReport::from_trials(pk.n(), pk.k(), config.t, &runs)
}
