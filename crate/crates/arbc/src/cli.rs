//! The `arbc` command line.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use arbc_core::analysis::{classic_key_bits, comparison_table, new_key_bits, reference_pairs};
use arbc_core::arberr::{arb_decrypt, arb_encrypt, arb_keygen};
use arbc_core::attacks::{
    direct_attack_bruteforce, isd_expected_iterations, isd_prange, ErrorModel, IsdConfig, MaskSampling,
};
use arbc_core::classic::{classic_decrypt, classic_encrypt, classic_keygen};
use arbc_core::codes::{bch_build, hamming74, weight_spectrum, LinearCode};
use arbc_core::gf2::{random_vector, random_vector_of_weight, BitVector};
use arbc_core::seed::rng_from_seed;
use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::format::{
    matrix_from_text, vector_from_hex, vector_to_hex, CiphertextFile, FormatError, PrivateKey, PublicKey,
};
use crate::report::{self, OutputFormat};
use crate::runner;

pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DATA: i32 = 3;
pub const EXIT_NOT_FOUND: i32 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Data(String),
    #[error("{0}")]
    NotFound(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Usage(_) => EXIT_USAGE,
            Self::Data(_) => EXIT_DATA,
            Self::NotFound(_) => EXIT_NOT_FOUND,
        }
    }
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        Self::Data(e.to_string())
    }
}

impl From<arbc_core::Error> for CliError {
    fn from(e: arbc_core::Error) -> Self {
        Self::Data(e.to_string())
    }
}

type Result<T, E = CliError> = std::result::Result<T, E>;

#[derive(Debug, Parser)]
#[command(
    name = "arbc",
    version,
    about = "McEliece-type encryption with arbitrary-weight errors"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a key pair and write PREFIX.pub and PREFIX.key.
    Keygen(KeygenArgs),
    /// Encrypt a hex message under a public key.
    Encrypt(EncryptArgs),
    /// Decrypt a ciphertext file and print the message as hex.
    Decrypt(DecryptArgs),
    /// Run an attack against a public key.
    Attack {
        #[command(subcommand)]
        mode: AttackMode,
    },
    /// Run a seeded experiment.
    Experiment {
        #[command(subcommand)]
        kind: ExperimentKind,
    },
    /// Print tables derived from the key-size formulas.
    Report {
        #[command(subcommand)]
        kind: ReportKind,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SchemeArg {
    Classic,
    Arberr,
}

#[derive(Debug, Args)]
pub struct KeygenArgs {
    pub scheme: SchemeArg,
    /// `bch M T`, `hamming74` or `generator FILE`.
    #[arg(required = true, num_args = 1..=3)]
    pub code: Vec<String>,
    /// Errors corrected by a classic key; defaults to the designed value.
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Output prefix.
    #[arg(long, default_value = "arbc")]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct EncryptArgs {
    /// Public key file.
    #[arg(long)]
    pub key: PathBuf,
    /// Message of k bits, hex.
    #[arg(long)]
    pub message: String,
    /// Error vector of n bits, hex. Drawn from --seed when absent.
    #[arg(long)]
    pub error: Option<String>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct DecryptArgs {
    /// Private key file.
    #[arg(long)]
    pub key: PathBuf,
    #[arg(long)]
    pub ciphertext: PathBuf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ErrorModelArg {
    Uniform,
    Zero,
}

#[derive(Debug, Subcommand)]
pub enum AttackMode {
    /// Information-set decoding against the first public matrix.
    Isd(IsdArgs),
    /// Exhaustive search over the smaller public row space.
    Direct(DirectArgs),
}

#[derive(Debug, Args)]
pub struct IsdArgs {
    /// Public key file.
    #[arg(long)]
    pub key: PathBuf,
    /// Attack this ciphertext; otherwise run --trials fresh ones.
    #[arg(long)]
    pub ciphertext: Option<PathBuf>,
    /// Residual weight accepted; a classic key supplies its own.
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long, default_value_t = 10_000)]
    pub max_iters: usize,
    #[arg(long, default_value_t = 1000)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Errors used for fresh arbitrary-error ciphertexts.
    #[arg(long, value_enum, default_value_t = ErrorModelArg::Uniform)]
    pub error_model: ErrorModelArg,
}

#[derive(Debug, Args)]
pub struct DirectArgs {
    /// Public key file.
    #[arg(long)]
    pub key: PathBuf,
    #[arg(long)]
    pub ciphertext: PathBuf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SamplingArg {
    Uniform,
    Nonsingular,
}

#[derive(Debug, Subcommand)]
pub enum ExperimentKind {
    /// Minimum distances and spectra of codes seen through transformed syndromes.
    Spectrum(SpectrumArgs),
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    /// `bch M T`, `hamming74` or `generator FILE`.
    #[arg(long, required = true, num_args = 1..=3)]
    pub code: Vec<String>,
    #[arg(long, default_value_t = 100)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Directory for trial records, the aggregate and spectra.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    #[arg(long, value_enum, default_value_t = SamplingArg::Uniform)]
    pub sampling: SamplingArg,
}

#[derive(Debug, Subcommand)]
pub enum ReportKind {
    /// Key sizes and workfactors for the reference parameter pairs.
    Keysizes {
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))
}

fn write(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))
}

struct CodeSpec {
    code: LinearCode,
    designed_t: Option<usize>,
}

fn parse_code(spec: &[String]) -> Result<CodeSpec> {
    let num = |s: &str| {
        s.parse::<u32>()
            .map_err(|_| CliError::Usage(format!("not a number: {s}")))
    };
    match spec.iter().map(String::as_str).collect::<Vec<_>>()[..] {
        ["bch", m, t] => {
            let t = num(t)?;
            Ok(CodeSpec {
                code: bch_build(num(m)?, t as usize)?,
                designed_t: Some(t as usize),
            })
        }
        ["hamming74"] => Ok(CodeSpec {
            code: hamming74(),
            designed_t: Some(1),
        }),
        ["generator", file] => Ok(CodeSpec {
            code: LinearCode::from_generator(matrix_from_text(&read(Path::new(file))?)?)?,
            designed_t: None,
        }),
        _ => Err(CliError::Usage(
            "code must be `bch M T`, `hamming74` or `generator FILE`".into(),
        )),
    }
}

fn with_extension(prefix: &Path, ext: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(".");
    s.push(ext);
    PathBuf::from(s)
}

fn hex_arg(len: usize, s: &str, what: &str) -> Result<BitVector> {
    vector_from_hex(len, s).map_err(|msg| CliError::Data(format!("{what}: {msg}")))
}

pub fn run(cli: Cli, out: &mut impl std::io::Write) -> Result<()> {
    let mut text = String::new();
    match cli.command {
        Command::Keygen(args) => keygen(args, &mut text)?,
        Command::Encrypt(args) => encrypt(args, &mut text)?,
        Command::Decrypt(args) => decrypt(args, &mut text)?,
        Command::Attack { mode } => {
            let res = match mode {
                AttackMode::Isd(args) => attack_isd(args, &mut text),
                AttackMode::Direct(args) => attack_direct(args, &mut text),
            };
            // the partial report is still useful on failure
            out.write_all(text.as_bytes()).ok();
            return res;
        }
        Command::Experiment {
            kind: ExperimentKind::Spectrum(args),
        } => experiment_spectrum(args, &mut text)?,
        Command::Report {
            kind: ReportKind::Keysizes { format },
        } => text = report::keysize_table(&comparison_table(&reference_pairs())?, format),
    }
    out.write_all(text.as_bytes())
        .map_err(|e| CliError::Data(format!("stdout: {e}")))
}

fn keygen(args: KeygenArgs, out: &mut String) -> Result<()> {
    use std::fmt::Write as _;
    let spec = parse_code(&args.code)?;
    let mut rng = rng_from_seed(args.seed);
    let (n, k) = (spec.code.n(), spec.code.k());
    let (pk, sk) = match args.scheme {
        SchemeArg::Classic => {
            let t = args
                .t
                .or(spec.designed_t)
                .ok_or_else(|| CliError::Usage("classic keys from a generator file need --t".into()))?;
            let (pk, sk) = classic_keygen(spec.code, t, &mut rng)?;
            (PublicKey::Classic(pk), PrivateKey::Classic(sk))
        }
        SchemeArg::Arberr => {
            let (pk, sk) = arb_keygen(spec.code, &mut rng)?;
            (PublicKey::ArbErr(pk), PrivateKey::ArbErr(sk))
        }
    };
    let pub_path = with_extension(&args.out, "pub");
    let key_path = with_extension(&args.out, "key");
    write(&pub_path, &pk.to_text())?;
    write(&key_path, &sk.to_text())?;
    writeln!(out, "scheme {}", pk.scheme()).unwrap();
    writeln!(out, "n {n}").unwrap();
    writeln!(out, "k {k}").unwrap();
    match &pk {
        PublicKey::Classic(p) => {
            writeln!(out, "t {}", p.t).unwrap();
            writeln!(out, "public key bits {}", classic_key_bits(n as u64, k as u64)).unwrap();
        }
        PublicKey::ArbErr(p) => {
            writeln!(out, "rank G2 {}", p.g2.rank()).unwrap();
            writeln!(out, "public key bits {}", new_key_bits(n as u64, k as u64)).unwrap();
        }
    }
    writeln!(out, "wrote {} {}", pub_path.display(), key_path.display()).unwrap();
    Ok(())
}

fn encrypt(args: EncryptArgs, out: &mut String) -> Result<()> {
    let pk = PublicKey::from_text(&read(&args.key)?)?;
    let (n, k) = (pk.n(), pk.k());
    let message = hex_arg(k, &args.message, "message")?;
    let error = match (&args.error, args.seed) {
        (Some(hex), None) => hex_arg(n, hex, "error")?,
        (None, Some(seed)) => {
            let mut rng = rng_from_seed(seed);
            match &pk {
                PublicKey::Classic(p) => random_vector_of_weight(n, p.t, &mut rng),
                PublicKey::ArbErr(_) => random_vector(n, &mut rng),
            }
        }
        _ => return Err(CliError::Usage("give exactly one of --error and --seed".into())),
    };
    let c = match &pk {
        PublicKey::Classic(p) => classic_encrypt(p, &message, &error)?,
        PublicKey::ArbErr(p) => arb_encrypt(p, &message, &error)?.c,
    };
    let file = CiphertextFile::for_key(&pk, c);
    write(&args.out, &file.to_text())?;
    out.push_str(&format!("0x{}\n", vector_to_hex(&file.c)));
    Ok(())
}

fn decrypt(args: DecryptArgs, out: &mut String) -> Result<()> {
    let sk = PrivateKey::from_text(&read(&args.key)?)?;
    let ct = CiphertextFile::from_text(&read(&args.ciphertext)?)?;
    ct.check_matches(&sk.public_key())?;
    let u = match &sk {
        PrivateKey::Classic(sk) => classic_decrypt(sk, &ct.c)?,
        PrivateKey::ArbErr(sk) => arb_decrypt(sk, &ct.arberr())?,
    };
    out.push_str(&format!("0x{}\n", vector_to_hex(&u)));
    Ok(())
}

fn attack_isd(args: IsdArgs, out: &mut String) -> Result<()> {
    use std::fmt::Write as _;
    let pk = PublicKey::from_text(&read(&args.key)?)?;
    let t = match (args.t, pk.t()) {
        (Some(t), _) | (None, Some(t)) => t,
        (None, None) => return Err(CliError::Usage("--t is required against arberr keys".into())),
    };
    let config = IsdConfig::new(t, args.max_iters);
    let tau = isd_expected_iterations(pk.n(), pk.k(), t)?.value();
    let start = Instant::now();
    if let Some(path) = &args.ciphertext {
        let ct = CiphertextFile::from_text(&read(path)?)?;
        ct.check_matches(&pk)?;
        let g = match &pk {
            PublicKey::Classic(p) => &p.g_pub,
            PublicKey::ArbErr(p) => &p.g1,
        };
        let res = isd_prange(g, &ct.c, t, &mut rng_from_seed(args.seed), args.max_iters);
        let elapsed = start.elapsed();
        return match res {
            Ok(o) => {
                writeln!(out, "recovered 0x{}", vector_to_hex(&o.message)).unwrap();
                writeln!(out, "iterations {} (singular draws {})", o.iterations, o.singular_draws).unwrap();
                writeln!(out, "expected (tau) {tau:.4}").unwrap();
                writeln!(out, "elapsed {:.3}s", elapsed.as_secs_f64()).unwrap();
                Ok(())
            }
            Err(arbc_core::Error::NotFound { iterations }) => {
                writeln!(out, "not found after {iterations} iterations").unwrap();
                writeln!(out, "expected (tau) {tau:.4}").unwrap();
                Err(CliError::NotFound(format!(
                    "isd: no message within {iterations} iterations"
                )))
            }
            Err(e) => Err(e.into()),
        };
    }
    let pool = runner::env_pool();
    let report = match &pk {
        PublicKey::Classic(p) => runner::isd_classic_study(&pool, p, &config, args.trials, args.seed)?,
        PublicKey::ArbErr(p) => {
            let model = match args.error_model {
                ErrorModelArg::Uniform => ErrorModel::Uniform,
                ErrorModelArg::Zero => ErrorModel::Zero,
            };
            runner::isd_scheme_study(&pool, p, &config, model, args.trials, args.seed)?
        }
    };
    out.push_str(&report::isd_summary(&report));
    writeln!(out, "elapsed {:.3}s", start.elapsed().as_secs_f64()).unwrap();
    Ok(())
}

fn attack_direct(args: DirectArgs, out: &mut String) -> Result<()> {
    use std::fmt::Write as _;
    let PublicKey::ArbErr(pk) = PublicKey::from_text(&read(&args.key)?)? else {
        return Err(CliError::Data("the direct attack needs an arberr public key".into()));
    };
    let ct = CiphertextFile::from_text(&read(&args.ciphertext)?)?;
    ct.check_matches(&PublicKey::ArbErr(pk.clone()))?;
    match direct_attack_bruteforce(&pk, &ct.arberr()) {
        Ok(o) => {
            writeln!(out, "recovered 0x{}", vector_to_hex(&o.message)).unwrap();
            writeln!(out, "candidates {}", o.candidates_tested).unwrap();
            Ok(())
        }
        Err(e @ (arbc_core::Error::NoSolution | arbc_core::Error::MultipleSolutions)) => {
            writeln!(out, "failed: {e}").unwrap();
            Err(CliError::NotFound(e.to_string()))
        }
        Err(e) => Err(e.into()),
    }
}

fn experiment_spectrum(args: SpectrumArgs, out: &mut String) -> Result<()> {
    let spec = parse_code(&args.code)?;
    let sampling = match args.sampling {
        SamplingArg::Uniform => MaskSampling::UniformT,
        SamplingArg::Nonsingular => MaskSampling::NonsingularT,
    };
    if spec.code.k() + 2 > arbc_core::codes::EXHAUSTIVE_K_LIMIT {
        return Err(CliError::Data(format!(
            "spectrum study needs k + 2 <= {}, code has k = {}",
            arbc_core::codes::EXHAUSTIVE_K_LIMIT,
            spec.code.k()
        )));
    }
    let pool = runner::env_pool();
    let report = runner::spectrum_study(&pool, &spec.code, args.trials, args.seed, sampling)?;
    let aggregate = report::spectrum_aggregate(&report, args.format);
    if let Some(dir) = &args.out {
        let ext = match args.format {
            OutputFormat::Text => "txt",
            OutputFormat::Records => "tsv",
        };
        let spectra = dir.join("spectra");
        fs::create_dir_all(&spectra).map_err(|e| CliError::Data(format!("{}: {e}", spectra.display())))?;
        write(
            &dir.join(format!("trials.{ext}")),
            &report::spectrum_trials(&report, args.format),
        )?;
        write(&dir.join(format!("aggregate.{ext}")), &aggregate)?;
        let mut table = String::new();
        weight_spectrum(&spec.code)?.write_table(&mut table).unwrap();
        write(&spectra.join("original.dat"), &table)?;
        for t in &report.trials {
            let mut table = String::new();
            t.spectrum.write_table(&mut table).unwrap();
            write(&spectra.join(format!("trial-{:04}.dat", t.index)), &table)?;
        }
    }
    out.push_str(&aggregate);
    Ok(())
}

/// Parses the process arguments, runs the command and returns the exit code.
pub fn main_with_args(args: impl IntoIterator<Item = std::ffi::OsString>) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            e.print().ok();
            return code;
        }
    };
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    match run(cli, &mut lock) {
        Ok(()) => 0,
        Err(e) => {
            lock.flush().ok();
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
