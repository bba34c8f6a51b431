//! Parallel drivers for the seeded experiments.
//!
//! Trials are indexed and each draws from its own stream derived from
//! `(master_seed, index)`, so results do not depend on the number of worker
//! threads or on scheduling.

use arbc_core::arberr::ArbErrPublicKey;
use arbc_core::attacks::{
    isd_classic_trial, isd_scheme_trial, spectrum_trial, ErrorModel, IsdConfig, IsdReport, MaskSampling,
    SpectrumStudyReport,
};
use arbc_core::classic::ClassicPublicKey;
use arbc_core::codes::LinearCode;
use rayon::prelude::*;
use rayon::{ThreadPool, ThreadPoolBuilder};

/// Environment variable capping the worker count.
pub const THREADS_ENV: &str = "ARBC_THREADS";

/// Worker count requested through `ARBC_THREADS`, if it is a positive integer.
pub fn threads_from_env() -> Option<usize> {
    std::env::var(THREADS_ENV).ok()?.trim().parse().ok().filter(|&n| n > 0)
}

/// A pool sized by `threads`, or by rayon's default when `None`.
pub fn build_pool(threads: Option<usize>) -> ThreadPool {
    let mut builder = ThreadPoolBuilder::new();
    if let Some(n) = threads {
        builder = builder.num_threads(n);
    }
    builder.build().expect("thread pool construction")
}

/// Pool sized from `ARBC_THREADS`.
pub fn env_pool() -> ThreadPool {
    build_pool(threads_from_env())
}

pub fn spectrum_study(
    pool: &ThreadPool,
    code: &LinearCode,
    trials: u64,
    master_seed: u64,
    sampling: MaskSampling,
) -> arbc_core::Result<SpectrumStudyReport> {
    let runs = pool.install(|| {
        (0..trials)
            .into_par_iter()
            .map(|i| spectrum_trial(code, master_seed, i, sampling))
            .collect::<arbc_core::Result<Vec<_>>>()
    })?;
    Ok(SpectrumStudyReport::from_trials(code.n(), code.k(), runs))
}

pub fn isd_classic_study(
    pool: &ThreadPool,
    pk: &ClassicPublicKey,
    config: &IsdConfig,
    trials: u64,
    master_seed: u64,
) -> arbc_core::Result<IsdReport> {
    let runs = pool.install(|| {
        (0..trials)
            .into_par_iter()
            .map(|i| isd_classic_trial(pk, config, master_seed, i))
            .collect::<arbc_core::Result<Vec<_>>>()
    })?;
    IsdReport::from_trials(pk.n(), pk.k(), config.t, &runs)
}

pub fn isd_scheme_study(
    pool: &ThreadPool,
    pk: &ArbErrPublicKey,
    config: &IsdConfig,
    model: ErrorModel,
    trials: u64,
    master_seed: u64,
) -> arbc_core::Result<IsdReport> {
    let runs = pool.install(|| {
        (0..trials)
            .into_par_iter()
            .map(|i| isd_scheme_trial(pk, config, model, master_seed, i))
            .collect::<arbc_core::Result<Vec<_>>>()
    })?;
    IsdReport::from_trials(pk.n(), pk.k(), config.t, &runs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use arbc_core::attacks::{isd_classic_experiment, spectrum_experiment};
    use arbc_core::classic::classic_keygen;
    use arbc_core::codes::bch_build;
    use arbc_core::seed::rng_from_seed;

    #[test]
    fn parallel_matches_sequential() {
        let code = bch_build(5, 3).unwrap();
        let seq = spectrum_experiment(&code, 24, 5, MaskSampling::UniformT).unwrap();
        for threads in [1, 3] {
            let par = spectrum_study(&build_pool(Some(threads)), &code, 24, 5, MaskSampling::UniformT).unwrap();
            assert_eq!(par, seq);
        }

        let (pk, _) = classic_keygen(bch_build(4, 2).unwrap(), 2, &mut rng_from_seed(1)).unwrap();
        let config = IsdConfig::new(2, 1000);
        let seq = isd_classic_experiment(&pk, &config, 50, 2).unwrap();
        let par = isd_classic_study(&build_pool(Some(4)), &pk, &config, 50, 2).unwrap();
        assert_eq!(par.channel_weight_histogram, seq.channel_weight_histogram);
        assert_eq!(par.mean_iterations, seq.mean_iterations);
    }
}
