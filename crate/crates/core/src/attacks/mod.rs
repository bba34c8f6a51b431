//! Attacks used to measure the schemes: information-set decoding,
//! exhaustive public-key attacks and the transformed-syndrome spectrum study.

mod direct;
mod isd;
mod spectrum_study;

pub use direct::{
    ciphertexts_per_message, direct_attack_bruteforce, uniqueness_check, DirectOutcome, DIRECT_ATTACK_LIMIT,
    UNIQUENESS_K_LIMIT, UNIQUENESS_N_LIMIT,
};
pub use isd::{
    isd_classic_experiment, isd_classic_trial, isd_expected_iterations, isd_on_new_scheme_experiment, isd_prange,
    isd_prange_with, isd_scheme_trial, ErrorModel, IsdConfig, IsdOutcome, IsdReport, IsdTrial, IsdWorkfactor,
    WeightCriterion,
};
pub use spectrum_study::{
    spectrum_experiment, spectrum_trial, syndrome_transform, transformed_code, MaskSampling, SpectrumGroup,
    SpectrumStudyReport, SpectrumTrialReport, TransformedCode, STUDY_K_LIMIT,
};
