//! Acceptance checks. Runs without the libtest harness so that every
//! criterion prints exactly one PASS/FAIL line, whatever the outcome.

use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use arbc::runner;
use arbc_core::analysis::{
    classic_key_bits, classic_workfactor_log2, comparison_table, new_key_bits, new_workfactor_log2, reference_pairs,
};
use arbc_core::arberr::{arb_decrypt, arb_encrypt, arb_keygen};
use arbc_core::attacks::{direct_attack_bruteforce, isd_classic_experiment, IsdConfig, MaskSampling};
use arbc_core::classic::{classic_decrypt, classic_encrypt, classic_keygen};
use arbc_core::codes::{bch_build, hamming74, LinearCode};
use arbc_core::gf2::{random_vector, random_vector_of_weight, BitVector};
use arbc_core::seed::rng_from_seed;
use rand::Rng;

type Check = fn() -> Outcome;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn secs(d: Duration) -> String {
    format!("{:.2}s", d.as_secs_f64())
}

/// All 2^4 messages times all 2^7 errors on (7,4).
fn exhaustive_round_trip() -> Outcome {
    let start = Instant::now();
    let (pk, sk) = arb_keygen(hamming74(), &mut rng_from_seed(101)).unwrap();
    let mut ok = 0;
    for m in 0..16u64 {
        let u = BitVector::from_u64(4, m);
        for x in 0..128u64 {
            let e = BitVector::from_u64(7, x);
            let ct = arb_encrypt(&pk, &u, &e).unwrap();
            if arb_decrypt(&sk, &ct) == Ok(u.clone()) {
                ok += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    outcome(
        ok == 2048 && elapsed < Duration::from_secs(1),
        format!("{ok}/2048 recovered in {}", secs(elapsed)),
    )
}

/// 1000 messages on (63,24), error weight uniform over 0..=63.
fn arbitrary_weight_recovery() -> Outcome {
    let start = Instant::now();
    let mut rng = rng_from_seed(102);
    let (pk, sk) = arb_keygen(bch_build(6, 7).unwrap(), &mut rng).unwrap();
    let mut ok = 0;
    let mut saw_full = false;
    for i in 0..1000 {
        let u = random_vector(24, &mut rng);
        let w = if i == 0 { 63 } else { rng.random_range(0..=63) };
        saw_full |= w == 63;
        let e = random_vector_of_weight(63, w, &mut rng);
        if arb_decrypt(&sk, &arb_encrypt(&pk, &u, &e).unwrap()) == Ok(u) {
            ok += 1;
        }
    }
    let elapsed = start.elapsed();
    outcome(
        ok == 1000 && saw_full && elapsed < Duration::from_secs(10),
        format!("{ok}/1000 recovered, weight 63 included, {}", secs(elapsed)),
    )
}

/// QT vanishes on J and has rank n−k over 1000 keys.
fn qt_structure() -> Outcome {
    let mut rng = rng_from_seed(103);
    let codes: [LinearCode; 3] = [hamming74(), bch_build(4, 2).unwrap(), bch_build(6, 7).unwrap()];
    let mut good = 0;
    for i in 0..1000 {
        let code = codes[i % 3].clone();
        let (n, k) = (code.n(), code.k());
        let (_, sk) = arb_keygen(code, &mut rng).unwrap();
        let qt = sk.qt();
        if qt.select_columns(sk.code().info_set()).unwrap().is_zero() && qt.rank() == n - k {
            good += 1;
        }
    }
    outcome(good == 1000, format!("{good}/1000 keys"))
}

/// On (7,4): c = c' iff u = u' and (e+e')Q = 0; 2^4 · 2^rank(Q) ciphertexts.
fn fiber_law() -> Outcome {
    let (pk, sk) = arb_keygen(hamming74(), &mut rng_from_seed(104)).unwrap();
    let q = sk.q();
    let mut entries = Vec::with_capacity(2048);
    for m in 0..16u64 {
        for x in 0..128u64 {
            let u = BitVector::from_u64(4, m);
            let e = BitVector::from_u64(7, x);
            let c = arb_encrypt(&pk, &u, &e).unwrap().c.to_u64();
            let eq = e.mul_matrix(q).unwrap().to_u64();
            entries.push((m, eq, c));
        }
    }
    let mut violations = 0usize;
    for a in &entries {
        for b in &entries {
            let collide = a.2 == b.2;
            let predicted = a.0 == b.0 && a.1 == b.1;
            if collide != predicted {
                violations += 1;
            }
        }
    }
    let mut distinct: Vec<u64> = entries.iter().map(|e| e.2).collect();
    distinct.sort_unstable();
    distinct.dedup();
    let expected = 16usize << q.rank();
    outcome(
        violations == 0 && distinct.len() == expected && expected == 128,
        format!(
            "{violations} violations, {} distinct, 2^4·2^rank(Q) = {expected}",
            distinct.len()
        ),
    )
}

/// Mean Prange iterations within [τ/3, 3τ] over 1000 attacks each.
fn isd_statistics() -> Outcome {
    let start = Instant::now();
    let mut all = true;
    let mut parts = Vec::new();
    for (i, (code, t)) in [
        (hamming74(), 1),
        (bch_build(4, 2).unwrap(), 2),
        (bch_build(4, 1).unwrap(), 1),
    ]
    .into_iter()
    .enumerate()
    {
        let (n, k) = (code.n(), code.k());
        let (pk, _) = classic_keygen(code, t, &mut rng_from_seed(105 + i as u64)).unwrap();
        let r = isd_classic_experiment(&pk, &IsdConfig::new(t, 100_000), 1000, 200 + i as u64).unwrap();
        let tau = r.expected_iterations;
        let within = r.correct == 1000 && r.mean_iterations >= tau / 3.0 && r.mean_iterations <= 3.0 * tau;
        all &= within;
        parts.push(format!("({n},{k},{t}) mean {:.3} tau {:.3}", r.mean_iterations, tau));
    }
    let elapsed = start.elapsed();
    outcome(
        all && elapsed < Duration::from_secs(30),
        format!("{}; {}", parts.join("; "), secs(elapsed)),
    )
}

fn workfactors() -> Outcome {
    let checks = [
        ((1024, 524, 50), 53.0, 1.0),
        ((2048, 1751, 27), 80.0, 1.0),
        ((6960, 5413, 119), 263.0, 2.0),
    ];
    let mut all = true;
    let mut parts = Vec::new();
    for ((n, k, t), want, tol) in checks {
        let got = classic_workfactor_log2(n, k, t).unwrap();
        let ok = (got - want).abs() <= tol;
        all &= ok;
        parts.push(format!(
            "log2 tau({n},{k},{t}) = {got:.2} vs {want}±{tol} {}",
            if ok { "ok" } else { "MISS" }
        ));
    }
    for ((n, k), want) in [((127, 71), 56.0), ((255, 79), 79.0), ((1023, 268), 268.0)] {
        let got = new_workfactor_log2(n, k);
        all &= got == want;
        parts.push(format!("min({k},{}) = {got}", n - k));
    }
    outcome(all, parts.join("; "))
}

fn key_sizes() -> Outcome {
    let exact = classic_key_bits(1024, 524) == 262_000
        && new_key_bits(127, 71) == 20_105
        && new_key_bits(255, 79) == 78_929
        && classic_key_bits(6960, 5413) == 8_373_911
        && new_key_bits(1023, 268) == 1_248_869;
    let rows = comparison_table(&reference_pairs()).unwrap();
    let (r1, r2) = (rows[0].ratio, rows[1].ratio);
    outcome(
        exact && r1 > 13.0 && (6.5..=6.7).contains(&r2),
        format!("sizes exact: {exact}; ratios {r1:.3}, {r2:.3}"),
    )
}

/// 100 transformed-syndrome trials on (63,24).
fn spectrum_study() -> Outcome {
    let start = Instant::now();
    let code = bch_build(6, 7).unwrap();
    let report = runner::spectrum_study(&runner::env_pool(), &code, 100, 7, MaskSampling::UniformT).unwrap();
    let elapsed = start.elapsed();
    let reference = [(24usize, 11.28), (25, 10.67), (26, 10.18)];
    let mut pass = report
        .trials
        .iter()
        .all(|t| t.zero_rows <= 3 && t.k_eff == 24 + t.zero_rows);
    pass &= report.trials.iter().all(|t| (7..=14).contains(&t.min_distance));
    let mut parts = Vec::new();
    for g in &report.groups {
        parts.push(format!("(63,{}) x{} mean d {:.2}", g.k, g.count, g.mean));
        if g.count >= 10 {
            if let Some(&(_, want)) = reference.iter().find(|(k, _)| *k == g.k) {
                pass &= (g.mean - want).abs() <= 1.5;
            }
        }
    }
    let largest = report.groups.iter().max_by_key(|g| g.count).map(|g| g.k);
    let share25 = report.group(25).map_or(0, |g| g.count);
    pass &= largest == Some(25) && share25 >= 40;
    pass &= elapsed < Duration::from_secs(15 * 60);
    outcome(pass, format!("{}; {}", parts.join("; "), secs(elapsed)))
}

/// Direct attack and decryption agree on 200 ciphertexts per code.
fn cross_oracle() -> Outcome {
    let mut rng = rng_from_seed(109);
    let mut agree = 0;
    for code in [hamming74(), bch_build(4, 2).unwrap()] {
        let (pk, sk) = arb_keygen(code, &mut rng).unwrap();
        for _ in 0..200 {
            let u = random_vector(pk.k(), &mut rng);
            let e = random_vector(pk.n(), &mut rng);
            let ct = arb_encrypt(&pk, &u, &e).unwrap();
            let direct = direct_attack_bruteforce(&pk, &ct).map(|o| o.message);
            if direct.is_ok() && direct == arb_decrypt(&sk, &ct) {
                agree += 1;
            }
        }
    }
    outcome(agree == 400, format!("{agree}/400 agree"))
}

fn classic_baseline() -> Outcome {
    let mut rng = rng_from_seed(110);
    let (pk, sk) = classic_keygen(hamming74(), 1, &mut rng).unwrap();
    let mut trials = 0;
    let mut ok = 0;
    let mut check = |sk: &arbc_core::classic::ClassicPrivateKey, c: &BitVector, u: &BitVector, e: &BitVector| {
        trials += 1;
        let permuted = e.mul_matrix(sk.p_inv()).unwrap();
        if classic_decrypt(sk, c).as_ref() == Ok(u) && permuted.weight() == e.weight() {
            ok += 1;
        }
    };
    for m in 0..16u64 {
        let u = BitVector::from_u64(4, m);
        for pos in std::iter::once(None).chain((0..7).map(Some)) {
            let e = pos.map_or_else(|| BitVector::zeros(7), |i| BitVector::unit(7, i));
            let c = classic_encrypt(&pk, &u, &e).unwrap();
            check(&sk, &c, &u, &e);
        }
    }
    let (pk, sk) = classic_keygen(bch_build(4, 2).unwrap(), 2, &mut rng).unwrap();
    for _ in 0..10_000 {
        let u = random_vector(7, &mut rng);
        let w = rng.random_range(0..=2);
        let e = random_vector_of_weight(15, w, &mut rng);
        let c = classic_encrypt(&pk, &u, &e).unwrap();
        check(&sk, &c, &u, &e);
    }
    outcome(
        ok == trials && trials == 128 + 10_000,
        format!("{ok}/{trials} recovered with weight preserved"),
    )
}

fn run_cli(dir: &Path, threads: &str, args: &[&str]) -> bool {
    Command::new(env!("CARGO_BIN_EXE_arbc"))
        .args(args)
        .current_dir(dir)
        .env("ARBC_THREADS", threads)
        .output()
        .map(|o| o.status.success())
        .unwrap_or(false)
}

/// Same seed, same bytes: across runs and across thread counts.
fn determinism() -> Outcome {
    let dir = tempfile::TempDir::new().unwrap();
    let d = dir.path();
    let mut ran = true;
    for (threads, tag) in [("1", "a"), ("3", "b")] {
        ran &= run_cli(
            d,
            threads,
            &["keygen", "arberr", "bch", "5", "2", "--seed", "11", "--out", tag],
        );
        let key = format!("{tag}.pub");
        let ct = format!("{tag}.ct");
        ran &= run_cli(
            d,
            threads,
            &[
                "encrypt",
                "--key",
                &key,
                "--message",
                "0x123458",
                "--seed",
                "12",
                "--out",
                &ct,
            ],
        );
        let out = format!("{tag}-run");
        ran &= run_cli(
            d,
            threads,
            &[
                "experiment",
                "spectrum",
                "--code",
                "bch",
                "5",
                "3",
                "--trials",
                "20",
                "--seed",
                "13",
                "--out",
                &out,
                "--format",
                "records",
            ],
        );
    }
    let same = |a: &str, b: &str| {
        std::fs::read(d.join(a))
            .ok()
            .is_some_and(|x| Some(x) == std::fs::read(d.join(b)).ok())
    };
    let files = [
        ("a.pub", "b.pub"),
        ("a.key", "b.key"),
        ("a.ct", "b.ct"),
        ("a-run/trials.tsv", "b-run/trials.tsv"),
        ("a-run/aggregate.tsv", "b-run/aggregate.tsv"),
        ("a-run/spectra/trial-0019.dat", "b-run/spectra/trial-0019.dat"),
    ];
    let identical = files.iter().filter(|(a, b)| same(a, b)).count();
    outcome(
        ran && identical == files.len(),
        format!("{identical}/{} files identical (ARBC_THREADS 1 vs 3)", files.len()),
    )
}

fn main() {
    let criteria: [(&str, Check); 11] = [
        ("exhaustive (7,4) round trip", exhaustive_round_trip),
        ("(63,24) arbitrary-weight recovery", arbitrary_weight_recovery),
        ("QT structure over 1000 keys", qt_structure),
        ("fiber law on (7,4)", fiber_law),
        ("ISD mean iterations vs tau", isd_statistics),
        ("workfactor arithmetic", workfactors),
        ("key-size arithmetic", key_sizes),
        ("transformed-syndrome spectrum study", spectrum_study),
        ("direct attack agrees with decryption", cross_oracle),
        ("classic McEliece baseline", classic_baseline),
        ("determinism across runs and threads", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let o = check();
        println!(
            "criterion {:>2} {}: {name} [{}]",
            i + 1,
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
        failed += usize::from(!o.pass);
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
