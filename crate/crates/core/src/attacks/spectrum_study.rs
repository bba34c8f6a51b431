//! Weight spectra of the codes an attacker sees after transforming
//! syndromes by `(QT)ᵀ`.
//!
//! Each trial draws a mask, forms `H·(QT)ᵀ`, drops the rows that become
//! dependent and enumerates the code those rows define. Trials are keyed by
//! `(master_seed, index)` so any subset can be recomputed on its own.

use alloc::vec::Vec;

use crate::arberr::mask_from_kernel;
use crate::codes::{exact_spectrum, gv_bound, gv_distance_asymptotic, LinearCode, WeightSpectrum, EXHAUSTIVE_K_LIMIT};
use crate::gf2::{random_matrix, random_nonsingular, BitMatrix, RowEchelon};
use crate::seed::{trial_rng, trial_seed};
use crate::{Error, Result};

/// Largest transformed dimension enumerated inside a trial.
pub const STUDY_K_LIMIT: usize = EXHAUSTIVE_K_LIMIT + 4;

/// Draws of `T` made before giving up on finding one with `T_J` of full
/// column rank.
const MASK_DRAWS: usize = 256;

/// How the mask `T` is drawn.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum MaskSampling {
    /// Uniform over `n × n` matrices whose restriction to the information
    /// set has full column rank. `T` may be singular, which is what makes
    /// some rows of `H·(QT)ᵀ` collapse.
    #[default]
    UniformT,
    /// Uniform over nonsingular `T`, as in key generation. No rows collapse.
    NonsingularT,
}

/// `H·(QT)ᵀ`.
pub fn syndrome_transform(h: &BitMatrix, qt: &BitMatrix) -> Result<BitMatrix> {
    h.mul(&qt.transpose())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumTrialReport {
    pub index: u64,
    pub trial_seed: u64,
    /// Rows of `H·(QT)ᵀ` lost to linear dependence.
    pub zero_rows: usize,
    pub n: usize,
    pub k_eff: usize,
    pub min_distance: usize,
    pub spectrum: WeightSpectrum,
}

/// The transformed code of one trial, before enumeration.
#[derive(Clone, Debug)]
pub struct TransformedCode {
    /// Independent rows of `H·(QT)ᵀ` in reduced echelon form.
    pub parity_rows: BitMatrix,
    pub zero_rows: usize,
    pub code: LinearCode,
}

pub fn transformed_code(
    code: &LinearCode,
    master_seed: u64,
    index: u64,
    sampling: MaskSampling,
) -> Result<TransformedCode> {
    let n = code.n();
    let mut rng = trial_rng(master_seed, index);
    let t = match sampling {
        MaskSampling::NonsingularT => random_nonsingular(n, &mut rng),
        MaskSampling::UniformT => {
            let mut draws = 0;
            loop {
                let t = random_matrix(n, n, &mut rng);
                if t.select_columns(code.info_set())?.rank() == code.k() {
                    break t;
                }
                draws += 1;
                if draws == MASK_DRAWS {
                    return Err(Error::RetriesExceeded(MASK_DRAWS));
                }
            }
        }
    };
    let q = mask_from_kernel(&t, code.info_set(), &mut rng)?;
    let qt = q.mul(&t)?;
    let transformed = syndrome_transform(code.parity_check(), &qt)?;
    let ech = RowEchelon::new(&transformed);
    let rank = ech.rank();
    let parity_rows = BitMatrix::from_rows(n, &(0..rank).map(|i| ech.reduced().row(i)).collect::<Vec<_>>())?;
    let derived = LinearCode::from_parity_check(&parity_rows)?;
    Ok(TransformedCode {
        parity_rows,
        zero_rows: transformed.rows() - rank,
        code: derived,
    })
}

pub fn spectrum_trial(
    code: &LinearCode,
    master_seed: u64,
    index: u64,
    sampling: MaskSampling,
) -> Result<SpectrumTrialReport> {
    let tc = transformed_code(code, master_seed, index, sampling)?;
    let k_eff = tc.code.k();
    if k_eff > STUDY_K_LIMIT {
        return Err(Error::DimensionTooLarge {
            k: k_eff,
            limit: STUDY_K_LIMIT,
        });
    }
    let spectrum = exact_spectrum(tc.code.generator());
    Ok(SpectrumTrialReport {
        index,
        trial_seed: trial_seed(master_seed, index),
        zero_rows: tc.zero_rows,
        n: code.n(),
        k_eff,
        min_distance: spectrum.min_nonzero_weight().unwrap_or(0),
        spectrum,
    })
}

/// Summary of the trials sharing one transformed dimension.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumGroup {
    pub n: usize,
    pub k: usize,
    pub count: usize,
    pub min: usize,
    pub max: usize,
    pub mean: f64,
    /// Population variance of the minimum distances.
    pub variance: f64,
    pub gv_bound: usize,
    pub gv_asymptotic: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumStudyReport {
    pub n: usize,
    pub k: usize,
    pub trials: Vec<SpectrumTrialReport>,
    /// One entry per observed `k_eff`, ascending.
    pub groups: Vec<SpectrumGroup>,
}

impl SpectrumStudyReport {
    /// Aggregates trials of a study on an `(n, k)` code.
    pub fn from_trials(n: usize, k: usize, mut trials: Vec<SpectrumTrialReport>) -> Self {
        trials.sort_by_key(|t| t.index);
        let mut dims: Vec<usize> = trials.iter().map(|t| t.k_eff).collect();
        dims.sort_unstable();
        dims.dedup();
        let groups = dims
            .into_iter()
            .map(|kk| {
                let ds: Vec<f64> = trials
                    .iter()
                    .filter(|t| t.k_eff == kk)
                    .map(|t| t.min_distance as f64)
                    .collect();
                let count = ds.len();
                let mean = ds.iter().sum::<f64>() / count as f64;
                let variance = ds.iter().map(|d| (d - mean) * (d - mean)).sum::<f64>() / count as f64;
                let (min, max) = trials
                    .iter()
                    .filter(|t| t.k_eff == kk)
                    .fold((usize::MAX, 0), |(lo, hi), t| {
                        (lo.min(t.min_distance), hi.max(t.min_distance))
                    });
                let proper = kk > 0 && kk < n;
                SpectrumGroup {
                    n,
                    k: kk,
                    count,
                    min,
                    max,
                    mean,
                    variance,
                    gv_bound: if proper { gv_bound(n, kk) } else { 0 },
                    gv_asymptotic: if proper {
                        gv_distance_asymptotic(n, kk)
                    } else {
                        f64::NAN
                    },
                }
            })
            .collect();
        Self { n, k, trials, groups }
    }

    pub fn group(&self, k_eff: usize) -> Option<&SpectrumGroup> {
        self.groups.iter().find(|g| g.k == k_eff)
    }
}

/// Runs trials `0..trials` one after another.
pub fn spectrum_experiment(
    code: &LinearCode,
    trials: u64,
    master_seed: u64,
    sampling: MaskSampling,
) -> Result<SpectrumStudyReport> {
    let runs = (0..trials)
        .map(|i| spectrum_trial(code, master_seed, i, sampling))
        .collect::<Result<Vec<_>>>()?;
    Ok(SpectrumStudyReport::from_trials(code.n(), code.k(), runs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{bch_build, weight_spectrum};
    use crate::gf2::BitVector;

    #[test]
    fn nonsingular_mask_keeps_every_row() {
        let code = bch_build(5, 3).unwrap();
        for i in 0..40 {
            let tc = transformed_code(&code, 11, i, MaskSampling::NonsingularT).unwrap();
            assert_eq!(tc.zero_rows, 0);
            assert_eq!(tc.code.k(), code.k());
        }
    }

    #[test]
    fn uniform_mask_collapses_rows_at_random_matrix_rates() {
        let code = bch_build(5, 3).unwrap();
        let mut hist = [0usize; 8];
        for i in 0..400 {
            let tc = transformed_code(&code, 12, i, MaskSampling::UniformT).unwrap();
            assert_eq!(tc.code.k(), code.k() + tc.zero_rows);
            hist[tc.zero_rows] += 1;
        }
        // corank of a uniform square matrix: 0 ≈ 0.289, 1 ≈ 0.578, 2 ≈ 0.128
        let frac = |z: usize| hist[z] as f64 / 400.0;
        assert!((frac(0) - 0.289).abs() < 0.08, "{hist:?}");
        assert!((frac(1) - 0.578).abs() < 0.08, "{hist:?}");
        assert!((frac(2) - 0.128).abs() < 0.06, "{hist:?}");
    }

    #[test]
    fn surviving_rows_annihilate_the_code() {
        let code = bch_build(4, 2).unwrap();
        for i in 0..20 {
            let tc = transformed_code(&code, 13, i, MaskSampling::UniformT).unwrap();
            let gen = tc.code.generator();
            assert!(gen.mul(&tc.parity_rows.transpose()).unwrap().is_zero());
            // brute-force membership: every word killed by the rows is in the code
            for x in 0u64..1 << 15 {
                let w = BitVector::from_u64(15, x);
                let killed = (0..tc.parity_rows.rows()).all(|r| !tc.parity_rows.row(r).dot(&w));
                assert_eq!(killed, tc.code.is_codeword(&w));
            }
        }
    }

    #[test]
    fn trial_spectrum_matches_direct_enumeration() {
        let code = bch_build(4, 2).unwrap();
        let report = spectrum_trial(&code, 14, 3, MaskSampling::UniformT).unwrap();
        let tc = transformed_code(&code, 14, 3, MaskSampling::UniformT).unwrap();
        assert_eq!(report.spectrum, weight_spectrum(&tc.code).unwrap());
        assert_eq!(report.spectrum.total(), 1 << report.k_eff);
        assert_eq!(report.trial_seed, trial_seed(14, 3));
    }

    #[test]
    fn aggregation() {
        let code = bch_build(4, 2).unwrap();
        let report = spectrum_experiment(&code, 30, 15, MaskSampling::UniformT).unwrap();
        assert_eq!(report.trials.len(), 30);
        assert_eq!(report.groups.iter().map(|g| g.count).sum::<usize>(), 30);
        for g in &report.groups {
            assert!(g.min as f64 <= g.mean && g.mean <= g.max as f64);
            assert!(g.variance >= 0.0);
        }
        // subsets recompute identically
        let again = spectrum_trial(&code, 15, 17, MaskSampling::UniformT).unwrap();
        assert_eq!(report.trials[17], again);
    }
}
