use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {op} expects {expected}, got {actual}")]
    DimensionMismatch {
        op: &'static str,
        expected: usize,
        actual: usize,
    },
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("invalid index set: {0}")]
    InvalidIndexSet(&'static str),
    #[error("invalid dimensions: {0}")]
    InvalidDimensions(&'static str),
    #[error("invalid parameters: {0}")]
    InvalidParameters(&'static str),
    #[error("generator matrix has rank {rank}, expected {rows}")]
    RankDeficient { rank: usize, rows: usize },
    #[error("dimension k = {k} exceeds exhaustive-enumeration limit {limit}")]
    DimensionTooLarge { k: usize, limit: usize },
    #[error("syndrome table would need 2^{redundancy} entries (limit 2^{limit})")]
    TableTooLarge { redundancy: usize, limit: usize },
    #[error("2t+1 = {required} exceeds minimum distance {distance}")]
    DistanceTooSmall { required: usize, distance: usize },
    #[error("error weight {weight} exceeds t = {t}")]
    WeightExceedsT { weight: usize, t: usize },
    #[error("decoding failed: coset leader weight {weight} exceeds t = {t}")]
    DecodeFailure { weight: usize, t: usize },
    #[error("malformed ciphertext: recovered word is not a codeword")]
    MalformedCiphertext,
    #[error("key generation gave up after {0} resamples")]
    RetriesExceeded(usize),
    #[error("no solution found after {iterations} iterations")]
    NotFound { iterations: usize },
    #[error("ciphertext has no preimage under the public key")]
    NoSolution,
    #[error("ciphertext has several preimages under the public key")]
    MultipleSolutions,
}
