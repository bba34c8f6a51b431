//! Arithmetic in GF(2^m) and binary polynomials, enough to build BCH
//! generator polynomials.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// Primitive polynomials used for each supported extension degree, as bit
/// masks including the leading term.
pub const PRIMITIVE_POLYNOMIALS: [(u32, u32); 8] = [
    (3, 0b1011),           // x^3 + x + 1
    (4, 0b1_0011),         // x^4 + x + 1
    (5, 0b10_0101),        // x^5 + x^2 + 1
    (6, 0b100_0011),       // x^6 + x + 1
    (7, 0b1000_1001),      // x^7 + x^3 + 1
    (8, 0b1_0001_1101),    // x^8 + x^4 + x^3 + x^2 + 1
    (9, 0b10_0001_0001),   // x^9 + x^4 + 1
    (10, 0b100_0000_1001), // x^10 + x^3 + 1
];

pub const MIN_DEGREE: u32 = 3;
pub const MAX_DEGREE: u32 = 10;

/// GF(2^m) with log/antilog tables relative to a primitive element `α`.
#[derive(Clone, Debug)]
pub struct GfExtField {
    m: u32,
    primitive_poly: u32,
    exp: Vec<u16>,
    log: Vec<u16>,
}

impl GfExtField {
    /// Field from the built-in primitive polynomial for `m`.
    pub fn new(m: u32) -> Result<Self> {
        let poly = PRIMITIVE_POLYNOMIALS
            .iter()
            .find(|&&(deg, _)| deg == m)
            .map(|&(_, p)| p)
            .ok_or(Error::InvalidParameters("extension degree must be in 3..=10"))?;
        Self::with_polynomial(m, poly)
    }

    /// Field defined by `poly`; fails unless `x` has order `2^m − 1` modulo it.
    pub fn with_polynomial(m: u32, poly: u32) -> Result<Self> {
        if !(MIN_DEGREE..=MAX_DEGREE).contains(&m) || poly >> m != 1 {
            return Err(Error::InvalidParameters("polynomial degree must equal m in 3..=10"));
        }
        let order = (1usize << m) - 1;
        let mut exp = vec![0u16; 2 * order];
        let mut log = vec![0u16; order + 1];
        let mut x: u32 = 1;
        for (i, slot) in exp.iter_mut().take(order).enumerate() {
            if i > 0 && x == 1 {
                return Err(Error::InvalidParameters("polynomial is not primitive"));
            }
            *slot = x as u16;
            log[x as usize] = i as u16;
            x <<= 1;
            if x >> m != 0 {
                x ^= poly;
            }
        }
        if x != 1 {
            return Err(Error::InvalidParameters("polynomial is not primitive"));
        }
        for i in order..2 * order {
            exp[i] = exp[i - order];
        }
        Ok(Self {
            m,
            primitive_poly: poly,
            exp,
            log,
        })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn primitive_poly(&self) -> u32 {
        self.primitive_poly
    }

    /// Multiplicative group order `2^m − 1`.
    pub fn order(&self) -> usize {
        (1usize << self.m) - 1
    }

    /// `α^e`.
    pub fn alpha_pow(&self, e: usize) -> u16 {
        self.exp[e % self.order()]
    }

    pub fn mul(&self, a: u16, b: u16) -> u16 {
        if a == 0 || b == 0 {
            return 0;
        }
        self.exp[self.log[a as usize] as usize + self.log[b as usize] as usize]
    }
}

/// Polynomial over GF(2); bit `i` of the packed words is the coefficient of `x^i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryPoly {
    words: Vec<u64>,
}

impl BinaryPoly {
    pub fn zero() -> Self {
        Self { words: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_mask(1)
    }

    pub fn from_mask(mask: u64) -> Self {
        let mut p = Self { words: vec![mask] };
        p.trim();
        p
    }

    /// From coefficients, lowest degree first.
    pub fn from_coeffs(coeffs: impl IntoIterator<Item = bool>) -> Self {
        let mut p = Self::zero();
        for (i, c) in coeffs.into_iter().enumerate() {
            if c {
                p.set(i);
            }
        }
        p
    }

    /// `x^n + 1`.
    pub fn x_pow_plus_one(n: usize) -> Self {
        let mut p = Self::one();
        p.set(n);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        let last = *self.words.last()?;
        Some((self.words.len() - 1) * 64 + 63 - last.leading_zeros() as usize)
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.words.get(i / 64).is_some_and(|w| (w >> (i % 64)) & 1 == 1)
    }

    fn set(&mut self, i: usize) {
        if self.words.len() <= i / 64 {
            self.words.resize(i / 64 + 1, 0);
        }
        self.words[i / 64] |= 1u64 << (i % 64);
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    fn xor_shifted(&mut self, other: &Self, shift: usize) {
        if let Some(d) = other.degree() {
            for i in 0..=d {
                if other.coeff(i) {
                    let j = i + shift;
                    if self.words.len() <= j / 64 {
                        self.words.resize(j / 64 + 1, 0);
                    }
                    self.words[j / 64] ^= 1u64 << (j % 64);
                }
            }
        }
        self.trim();
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        if let Some(d) = self.degree() {
            for i in 0..=d {
                if self.coeff(i) {
                    out.xor_shifted(other, i);
                }
            }
        }
        out
    }

    /// Remainder of division by `divisor` (nonzero).
    pub fn rem(&self, divisor: &Self) -> Self {
        let dd = divisor.degree().expect("division by zero polynomial");
        let mut r = self.clone();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            r.xor_shifted(divisor, rd - dd);
        }
        r
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.rem(self).is_zero()
    }
}

impl fmt::Debug for BinaryPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(d) = self.degree() else {
            return f.write_str("0");
        };
        let mut first = true;
        for i in (0..=d).rev().filter(|&i| self.coeff(i)) {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => f.write_str("1")?,
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Cyclotomic coset of `exponent` under doubling modulo `2^m − 1`, in the
/// order `e, 2e, 4e, …`.
pub fn cyclotomic_coset(m: u32, exponent: usize) -> Vec<usize> {
    let order = (1usize << m) - 1;
    let start = exponent % order;
    let mut coset = vec![start];
    let mut e = (start * 2) % order;
    while e != start {
        coset.push(e);
        e = (e * 2) % order;
    }
    coset
}

/// Cosets partitioning `{1, …, 2^m − 2}`, ordered by smallest member.
pub fn cyclotomic_cosets(m: u32) -> Vec<Vec<usize>> {
    let order = (1usize << m) - 1;
    let mut seen = vec![false; order];
    let mut out = Vec::new();
    for e in 1..order {
        if !seen[e] {
            let coset = cyclotomic_coset(m, e);
            for &c in &coset {
                seen[c] = true;
            }
            out.push(coset);
        }
    }
    out
}

/// Minimal polynomial of `α^exponent` over GF(2).
pub fn minimal_polynomial(field: &GfExtField, exponent: usize) -> Result<BinaryPoly> {
    if exponent == 0 || exponent >= field.order() {
        return Err(Error::InvalidParameters("exponent must be in 1..2^m-1"));
    }
    // product of (x + β) over the conjugates β, with GF(2^m) coefficients
    let mut coeffs: Vec<u16> = vec![1];
    for e in cyclotomic_coset(field.m(), exponent) {
        let beta = field.alpha_pow(e);
        let mut next = vec![0u16; coeffs.len() + 1];
        for (i, &c) in coeffs.iter().enumerate() {
            next[i + 1] ^= c;
            next[i] ^= field.mul(c, beta);
        }
        coeffs = next;
    }
    debug_assert!(coeffs.iter().all(|&c| c <= 1), "conjugate product is binary");
    Ok(BinaryPoly::from_coeffs(coeffs.into_iter().map(|c| c == 1)))
}
