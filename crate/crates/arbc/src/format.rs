//! Text formats for vectors, matrices, key files and ciphertexts.
//!
//! Vectors are hex strings of `ceil(len/4)` lowercase digits. Coordinate 0
//! is the most significant bit of the first digit; unused low bits of the
//! last digit are zero. Matrices are a `NAME rows cols` header followed by
//! one hex row per line.
//!
//! A key file looks like
//!
//! ```text
//! ARBC1
//! scheme arberr
//! role private
//! params 63 24
//! G 24 63
//! ...
//! J 24
//! 0 1 2 ...
//! ```
//!
//! Private arbitrary-error keys store `G, M, T, Q, G0, J` in that order;
//! private classic keys store `S, G, P` and carry `t` in the params line.
//! Inverses are never stored.

use std::fmt::Write as _;

use arbc_core::arberr::{ArbErrCiphertext, ArbErrPrivateKey, ArbErrPublicKey};
use arbc_core::classic::{ClassicPrivateKey, ClassicPublicKey};
use arbc_core::codes::LinearCode;
use arbc_core::gf2::{BitMatrix, BitVector, IndexSet};
use thiserror::Error;

pub const MAGIC: &str = "ARBC1";

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("expected a {expected} file, found {found}")]
    SchemeMismatch { expected: Scheme, found: Scheme },
    #[error("expected a {expected} key, found {found}")]
    RoleMismatch { expected: Role, found: Role },
    #[error("invalid key material: {0}")]
    Core(#[from] arbc_core::Error),
}

pub type Result<T, E = FormatError> = std::result::Result<T, E>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scheme {
    Classic,
    ArbErr,
}

impl Scheme {
    fn parse(s: &str) -> Option<Self> {
        match s {
            "classic" => Some(Self::Classic),
            "arberr" => Some(Self::ArbErr),
            _ => None,
        }
    }
}

impl std::fmt::Display for Scheme {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Self::Classic => "classic",
            Self::ArbErr => "arberr",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Role {
    Public,
    Private,
}

impl std::fmt::Display for Role {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Self::Public => "public",
            Self::Private => "private",
        })
    }
}

pub fn vector_to_hex(v: &BitVector) -> String {
    let mut out = String::with_capacity(v.len().div_ceil(4));
    for chunk in 0..v.len().div_ceil(4) {
        let mut nibble = 0u32;
        for b in 0..4 {
            let i = chunk * 4 + b;
            if i < v.len() && v.get(i) {
                nibble |= 8 >> b;
            }
        }
        out.push(char::from_digit(nibble, 16).unwrap());
    }
    out
}

/// Parses `len` coordinates from hex, with or without a `0x` prefix.
pub fn vector_from_hex(len: usize, s: &str) -> std::result::Result<BitVector, String> {
    let digits = s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")).unwrap_or(s);
    if digits.len() != len.div_ceil(4) {
        return Err(format!(
            "expected {} hex digits for {len} bits, got {}",
            len.div_ceil(4),
            digits.len()
        ));
    }
    let mut v = BitVector::zeros(len);
    for (chunk, ch) in digits.chars().enumerate() {
        let nibble = ch.to_digit(16).ok_or_else(|| format!("bad hex digit {ch:?}"))?;
        for b in 0..4 {
            if nibble & (8 >> b) != 0 {
                let i = chunk * 4 + b;
                if i >= len {
                    return Err("nonzero padding bits".into());
                }
                v.set(i, true);
            }
        }
    }
    Ok(v)
}

fn write_matrix(out: &mut String, name: &str, m: &BitMatrix) {
    writeln!(out, "{name} {} {}", m.rows(), m.cols()).unwrap();
    for row in m.row_iter() {
        out.push_str(&vector_to_hex(&row));
        out.push('\n');
    }
}

/// A bare matrix file: `rows cols` followed by the rows.
pub fn matrix_to_text(m: &BitMatrix) -> String {
    let mut out = format!("{} {}\n", m.rows(), m.cols());
    for row in m.row_iter() {
        out.push_str(&vector_to_hex(&row));
        out.push('\n');
    }
    out
}

pub fn matrix_from_text(text: &str) -> Result<BitMatrix> {
    let mut lines = Lines::new(text);
    let (rows, cols) = lines.dims(None)?;
    lines.matrix_body(rows, cols)
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
    line: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            inner: text.lines().enumerate(),
            line: 0,
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(FormatError::Parse {
            line: self.line,
            msg: msg.into(),
        })
    }

    fn next(&mut self) -> Result<&'a str> {
        match self.inner.next() {
            Some((i, l)) => {
                self.line = i + 1;
                Ok(l.trim())
            }
            None => {
                self.line += 1;
                self.err("unexpected end of file")
            }
        }
    }

    /// Reads `key value...` and returns the values.
    fn field(&mut self, key: &str) -> Result<Vec<&'a str>> {
        let line = self.next()?;
        let mut parts = line.split_whitespace();
        if parts.next() != Some(key) {
            return self.err(format!("expected `{key}`"));
        }
        Ok(parts.collect())
    }

    fn numbers(&self, parts: &[&str]) -> Result<Vec<usize>> {
        parts
            .iter()
            .map(|p| p.parse::<usize>().or_else(|_| self.err(format!("bad number {p:?}"))))
            .collect()
    }

    fn dims(&mut self, name: Option<&str>) -> Result<(usize, usize)> {
        let parts = match name {
            Some(name) => self.field(name)?,
            None => self.next()?.split_whitespace().collect(),
        };
        match self.numbers(&parts)?[..] {
            [r, c] => Ok((r, c)),
            _ => self.err("expected `rows cols`"),
        }
    }

    fn matrix_body(&mut self, rows: usize, cols: usize) -> Result<BitMatrix> {
        let mut m = BitMatrix::zeros(rows, cols);
        for i in 0..rows {
            let line = self.next()?;
            match vector_from_hex(cols, line) {
                Ok(v) => m.set_row(i, &v),
                Err(msg) => return self.err(msg),
            }
        }
        Ok(m)
    }

    fn matrix(&mut self, name: &str, rows: usize, cols: usize) -> Result<BitMatrix> {
        let (r, c) = self.dims(Some(name))?;
        if (r, c) != (rows, cols) {
            return self.err(format!("{name} must be {rows}x{cols}, found {r}x{c}"));
        }
        self.matrix_body(rows, cols)
    }

    fn finish(&mut self) -> Result<()> {
        for (i, l) in self.inner.by_ref() {
            if !l.trim().is_empty() {
                self.line = i + 1;
                return self.err("trailing data");
            }
        }
        Ok(())
    }
}

/// Key header: scheme, role and `(n, k, t)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Header {
    pub scheme: Scheme,
    pub role: Role,
    pub n: usize,
    pub k: usize,
    pub t: Option<usize>,
}

fn write_header(out: &mut String, h: &Header) {
    writeln!(out, "{MAGIC}\nscheme {}\nrole {}", h.scheme, h.role).unwrap();
    match h.t {
        Some(t) => writeln!(out, "params {} {} {t}", h.n, h.k).unwrap(),
        None => writeln!(out, "params {} {}", h.n, h.k).unwrap(),
    }
}

fn read_header(lines: &mut Lines<'_>) -> Result<Header> {
    if lines.next()? != MAGIC {
        return lines.err(format!("missing {MAGIC} magic"));
    }
    let scheme = match lines.field("scheme")?[..] {
        [s] => Scheme::parse(s).map_or_else(|| lines.err(format!("unknown scheme {s:?}")), Ok)?,
        _ => return lines.err("expected `scheme classic|arberr`"),
    };
    let role = match lines.field("role")?[..] {
        ["public"] => Role::Public,
        ["private"] => Role::Private,
        _ => return lines.err("expected `role public|private`"),
    };
    let parts = lines.field("params")?;
    let nums = lines.numbers(&parts)?;
    let (n, k, t) = match (scheme, &nums[..]) {
        (Scheme::Classic, &[n, k, t]) => (n, k, Some(t)),
        (Scheme::ArbErr, &[n, k]) => (n, k, None),
        (Scheme::Classic, _) => return lines.err("expected `params n k t`"),
        (Scheme::ArbErr, _) => return lines.err("expected `params n k`"),
    };
    if k == 0 || k >= n {
        return lines.err("params need 0 < k < n");
    }
    Ok(Header { scheme, role, n, k, t })
}

#[derive(Clone, Debug)]
pub enum PublicKey {
    Classic(ClassicPublicKey),
    ArbErr(ArbErrPublicKey),
}

#[derive(Clone, Debug)]
pub enum PrivateKey {
    Classic(ClassicPrivateKey),
    ArbErr(ArbErrPrivateKey),
}

impl PublicKey {
    pub fn scheme(&self) -> Scheme {
        match self {
            Self::Classic(_) => Scheme::Classic,
            Self::ArbErr(_) => Scheme::ArbErr,
        }
    }

    pub fn n(&self) -> usize {
        match self {
            Self::Classic(pk) => pk.n(),
            Self::ArbErr(pk) => pk.n(),
        }
    }

    pub fn k(&self) -> usize {
        match self {
            Self::Classic(pk) => pk.k(),
            Self::ArbErr(pk) => pk.k(),
        }
    }

    pub fn t(&self) -> Option<usize> {
        match self {
            Self::Classic(pk) => Some(pk.t),
            Self::ArbErr(_) => None,
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let header = Header {
            scheme: self.scheme(),
            role: Role::Public,
            n: self.n(),
            k: self.k(),
            t: self.t(),
        };
        write_header(&mut out, &header);
        match self {
            Self::Classic(pk) => write_matrix(&mut out, "Gpub", &pk.g_pub),
            Self::ArbErr(pk) => {
                write_matrix(&mut out, "G1", &pk.g1);
                write_matrix(&mut out, "G2", &pk.g2);
            }
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = Lines::new(text);
        let h = read_header(&mut lines)?;
        if h.role != Role::Public {
            return Err(FormatError::RoleMismatch {
                expected: Role::Public,
                found: h.role,
            });
        }
        let key = match h.scheme {
            Scheme::Classic => Self::Classic(ClassicPublicKey {
                g_pub: lines.matrix("Gpub", h.k, h.n)?,
                t: h.t.unwrap(),
            }),
            Scheme::ArbErr => Self::ArbErr(ArbErrPublicKey {
                g1: lines.matrix("G1", h.k, h.n)?,
                g2: lines.matrix("G2", h.n, h.n)?,
            }),
        };
        lines.finish()?;
        Ok(key)
    }
}

impl PrivateKey {
    pub fn scheme(&self) -> Scheme {
        match self {
            Self::Classic(_) => Scheme::Classic,
            Self::ArbErr(_) => Scheme::ArbErr,
        }
    }

    pub fn public_key(&self) -> PublicKey {
        match self {
            Self::Classic(sk) => PublicKey::Classic(sk.public_key()),
            Self::ArbErr(sk) => PublicKey::ArbErr(sk.public_key()),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match self {
            Self::Classic(sk) => {
                let code = sk.code();
                let header = Header {
                    scheme: Scheme::Classic,
                    role: Role::Private,
                    n: code.n(),
                    k: code.k(),
                    t: Some(sk.t()),
                };
                write_header(&mut out, &header);
                write_matrix(&mut out, "S", sk.s());
                write_matrix(&mut out, "G", code.generator());
                write_matrix(&mut out, "P", sk.p());
            }
            Self::ArbErr(sk) => {
                let code = sk.code();
                let header = Header {
                    scheme: Scheme::ArbErr,
                    role: Role::Private,
                    n: code.n(),
                    k: code.k(),
                    t: None,
                };
                write_header(&mut out, &header);
                write_matrix(&mut out, "G", code.generator());
                write_matrix(&mut out, "M", sk.m());
                write_matrix(&mut out, "T", sk.t());
                write_matrix(&mut out, "Q", sk.q());
                write_matrix(&mut out, "G0", sk.g0());
                let j = code.info_set();
                writeln!(out, "J {}", j.len()).unwrap();
                let indices: Vec<String> = j.iter().map(|i| i.to_string()).collect();
                writeln!(out, "{}", indices.join(" ")).unwrap();
            }
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = Lines::new(text);
        let h = read_header(&mut lines)?;
        if h.role != Role::Private {
            return Err(FormatError::RoleMismatch {
                expected: Role::Private,
                found: h.role,
            });
        }
        let (n, k) = (h.n, h.k);
        let key = match h.scheme {
            Scheme::Classic => {
                let s = lines.matrix("S", k, k)?;
                let g = lines.matrix("G", k, n)?;
                let p = lines.matrix("P", n, n)?;
                Self::Classic(ClassicPrivateKey::from_parts(
                    s,
                    LinearCode::from_generator(g)?,
                    p,
                    h.t.unwrap(),
                )?)
            }
            Scheme::ArbErr => {
                let g = lines.matrix("G", k, n)?;
                let m = lines.matrix("M", n, n)?;
                let t = lines.matrix("T", n, n)?;
                let q = lines.matrix("Q", n, n)?;
                let g0 = lines.matrix("G0", n, n)?;
                let parts = lines.field("J")?;
                let count = match lines.numbers(&parts)?[..] {
                    [c] => c,
                    _ => return lines.err("expected `J k`"),
                };
                if count != k {
                    return lines.err(format!("J must have {k} entries"));
                }
                let row: Vec<&str> = lines.next()?.split_whitespace().collect();
                let indices = lines.numbers(&row)?;
                if indices.len() != k {
                    return lines.err(format!("J must have {k} entries"));
                }
                let info_set = IndexSet::new(indices, n)?;
                let code = LinearCode::with_info_set(g, info_set)?;
                Self::ArbErr(ArbErrPrivateKey::from_parts(code, m, t, q, g0)?)
            }
        };
        lines.finish()?;
        Ok(key)
    }
}

/// Scheme, role and params of a key file without decoding the payload.
pub fn peek_header(text: &str) -> Result<Header> {
    read_header(&mut Lines::new(text))
}

/// A ciphertext together with the parameters of the key it was made for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CiphertextFile {
    pub scheme: Scheme,
    pub n: usize,
    pub k: usize,
    pub t: Option<usize>,
    pub c: BitVector,
}

impl CiphertextFile {
    pub fn for_key(pk: &PublicKey, c: BitVector) -> Self {
        Self {
            scheme: pk.scheme(),
            n: pk.n(),
            k: pk.k(),
            t: pk.t(),
            c,
        }
    }

    pub fn arberr(&self) -> ArbErrCiphertext {
        ArbErrCiphertext { c: self.c.clone() }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{MAGIC}\nciphertext {}\n", self.scheme);
        match self.t {
            Some(t) => writeln!(out, "params {} {} {t}", self.n, self.k).unwrap(),
            None => writeln!(out, "params {} {}", self.n, self.k).unwrap(),
        }
        writeln!(out, "c {}", vector_to_hex(&self.c)).unwrap();
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = Lines::new(text);
        if lines.next()? != MAGIC {
            return lines.err(format!("missing {MAGIC} magic"));
        }
        let scheme = match lines.field("ciphertext")?[..] {
            [s] => Scheme::parse(s).map_or_else(|| lines.err(format!("unknown scheme {s:?}")), Ok)?,
            _ => return lines.err("expected `ciphertext classic|arberr`"),
        };
        let parts = lines.field("params")?;
        let (n, k, t) = match (scheme, &lines.numbers(&parts)?[..]) {
            (Scheme::Classic, &[n, k, t]) => (n, k, Some(t)),
            (Scheme::ArbErr, &[n, k]) => (n, k, None),
            _ => return lines.err("params do not match scheme"),
        };
        let c = match lines.field("c")?[..] {
            [hex] => vector_from_hex(n, hex).or_else(|msg| lines.err(msg))?,
            _ => return lines.err("expected `c HEX`"),
        };
        lines.finish()?;
        Ok(Self { scheme, n, k, t, c })
    }

    /// Fails unless the file was produced for a key with the same scheme and
    /// parameters.
    pub fn check_matches(&self, pk: &PublicKey) -> Result<()> {
        if self.scheme != pk.scheme() {
            return Err(FormatError::SchemeMismatch {
                expected: pk.scheme(),
                found: self.scheme,
            });
        }
        if (self.n, self.k, self.t) != (pk.n(), pk.k(), pk.t()) {
            return Err(FormatError::Parse {
                line: 3,
                msg: format!(
                    "ciphertext params ({}, {}) do not match the key ({}, {})",
                    self.n,
                    self.k,
                    pk.n(),
                    pk.k()
                ),
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hex_layout() {
        let v = BitVector::from_bits(&[1, 0, 0, 0, 0, 1, 1]);
        assert_eq!(vector_to_hex(&v), "86");
        assert_eq!(vector_from_hex(7, "0x86").unwrap(), v);
        assert_eq!(vector_to_hex(&BitVector::zeros(4)), "0");
        assert!(vector_from_hex(7, "87").is_err());
        assert!(vector_from_hex(7, "8").is_err());
        assert!(vector_from_hex(7, "8g").is_err());
    }

    #[test]
    fn matrix_text() {
        let m = BitMatrix::from_bit_rows(&[&[1, 0, 1, 1, 0], &[0, 1, 0, 0, 1]]);
        let text = matrix_to_text(&m);
        assert_eq!(text, "2 5\nb0\n48\n");
        assert_eq!(matrix_from_text(&text).unwrap(), m);
        assert!(matrix_from_text("2 5\nb0\n").is_err());
    }
}
