//! Text tables and tab-separated records for experiment output.

use std::fmt::Write as _;

use arbc_core::analysis::ComparisonRow;
use arbc_core::attacks::{IsdReport, SpectrumStudyReport};

/// Output flavour selected with `--format`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    /// Aligned, human-readable tables.
    #[default]
    Text,
    /// Tab-separated records with a header line.
    Records,
}

fn counts_csv(counts: &[u64]) -> String {
    counts.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

/// One line per trial.
pub fn spectrum_trials(report: &SpectrumStudyReport, format: OutputFormat) -> String {
    let mut out = String::new();
    match format {
        OutputFormat::Records => {
            out.push_str("index\ttrial_seed\tzero_rows\tn\tk_eff\tmin_distance\tspectrum\n");
            for t in &report.trials {
                writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}",
                    t.index,
                    t.trial_seed,
                    t.zero_rows,
                    t.n,
                    t.k_eff,
                    t.min_distance,
                    counts_csv(&t.spectrum.counts)
                )
                .unwrap();
            }
        }
        OutputFormat::Text => {
            writeln!(
                out,
                "{:>6} {:>20} {:>5} {:>10} {:>4}",
                "trial", "seed", "z", "code", "d"
            )
            .unwrap();
            for t in &report.trials {
                let code = format!("({},{})", t.n, t.k_eff);
                writeln!(
                    out,
                    "{:>6} {:>20} {:>5} {:>10} {:>4}",
                    t.index, t.trial_seed, t.zero_rows, code, t.min_distance
                )
                .unwrap();
            }
        }
    }
    out
}

/// One line per effective dimension.
pub fn spectrum_aggregate(report: &SpectrumStudyReport, format: OutputFormat) -> String {
    let mut out = String::new();
    match format {
        OutputFormat::Records => {
            out.push_str("n\tk\ttrials\tmin_d\tmax_d\tmean_d\tvariance_d\tgv_bound\tgv_asymptotic\n");
            for g in &report.groups {
                writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{}\t{:.6}\t{:.6}\t{}\t{:.6}",
                    g.n, g.k, g.count, g.min, g.max, g.mean, g.variance, g.gv_bound, g.gv_asymptotic
                )
                .unwrap();
            }
        }
        OutputFormat::Text => {
            writeln!(
                out,
                "{:>10} {:>7} {:>6} {:>6} {:>8} {:>9} {:>4} {:>8}",
                "code", "trials", "min d", "max d", "mean d", "var d", "GV", "GV asym"
            )
            .unwrap();
            for g in &report.groups {
                let code = format!("({},{})", g.n, g.k);
                writeln!(
                    out,
                    "{:>10} {:>7} {:>6} {:>6} {:>8.2} {:>9.4} {:>4} {:>8.2}",
                    code, g.count, g.min, g.max, g.mean, g.variance, g.gv_bound, g.gv_asymptotic
                )
                .unwrap();
            }
        }
    }
    out
}

pub fn isd_summary(report: &IsdReport) -> String {
    let mut out = String::new();
    writeln!(out, "code            ({},{}) t={}", report.n, report.k, report.t).unwrap();
    writeln!(out, "trials          {}", report.trials).unwrap();
    writeln!(out, "accepted        {}", report.found).unwrap();
    writeln!(out, "correct         {} ({:.4})", report.correct, report.success_rate()).unwrap();
    writeln!(out, "wrong message   {}", report.found - report.correct).unwrap();
    writeln!(out, "not found       {}", report.trials - report.found).unwrap();
    writeln!(out, "mean iterations {:.4}", report.mean_iterations).unwrap();
    writeln!(out, "expected (tau)  {:.4}", report.expected_iterations).unwrap();
    let weights: Vec<String> = report
        .channel_weight_histogram
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(w, c)| format!("{w}:{c}"))
        .collect();
    writeln!(out, "noise weights   {}", weights.join(" ")).unwrap();
    out
}

pub fn keysize_table(rows: &[ComparisonRow], format: OutputFormat) -> String {
    let mut out = String::new();
    match format {
        OutputFormat::Records => {
            out.push_str(
                "classic_n\tclassic_k\tclassic_t\tnew_n\tnew_k\tclassic_key_bits\tnew_key_bits\tnew_key_bits_alt\tclassic_workfactor\tnew_workfactor\tratio\n",
            );
            for r in rows {
                let (c, n) = (r.classic_point, r.new_point);
                writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{:.4}\t{:.4}\t{:.4}",
                    c.n,
                    c.k,
                    c.t,
                    n.n,
                    n.k,
                    r.classic_key_bits,
                    r.new_key_bits,
                    r.new_key_bits_alternate,
                    r.classic_workfactor,
                    r.new_workfactor,
                    r.ratio
                )
                .unwrap();
            }
        }
        OutputFormat::Text => {
            writeln!(
                out,
                "{:>18} {:>10} {:>8} {:>12} {:>10} {:>10} {:>8} {:>7}",
                "classic (n,k,t)", "new (n,k)", "log2 tau", "classic bits", "new bits", "alt bits", "min(k,r)", "ratio"
            )
            .unwrap();
            for r in rows {
                let (c, n) = (r.classic_point, r.new_point);
                writeln!(
                    out,
                    "{:>18} {:>10} {:>8.2} {:>12} {:>10} {:>10} {:>8} {:>7.2}",
                    format!("({},{},{})", c.n, c.k, c.t),
                    format!("({},{})", n.n, n.k),
                    r.classic_workfactor,
                    r.classic_key_bits,
                    r.new_key_bits,
                    r.new_key_bits_alternate,
                    r.new_workfactor,
                    r.ratio
                )
                .unwrap();
            }
        }
    }
    out
}
