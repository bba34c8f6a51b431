//! Narrow-sense binary BCH codes.

use alloc::collections::BTreeSet;

use super::gf2m::{cyclotomic_coset, minimal_polynomial, BinaryPoly, GfExtField, MAX_DEGREE, MIN_DEGREE};
use super::LinearCode;
use crate::gf2::BitMatrix;
use crate::{Error, Result};

/// `g(x) = lcm(m_α(x), m_{α²}(x), …, m_{α^{2t}}(x))`.
///
/// The minimal polynomials of distinct cyclotomic cosets are distinct
/// irreducibles, so the lcm is the product over cosets met by `1..=2t`.
pub fn bch_generator_polynomial(field: &GfExtField, t_design: usize) -> Result<BinaryPoly> {
    let n = field.order();
    if t_design == 0 || 2 * t_design >= n {
        return Err(Error::InvalidParameters("designed t must satisfy 1 <= t < 2^(m-1)"));
    }
    let mut covered = BTreeSet::new();
    let mut g = BinaryPoly::one();
    for e in 1..=2 * t_design {
        if covered.contains(&e) {
            continue;
        }
        covered.extend(cyclotomic_coset(field.m(), e));
        g = g.mul(&minimal_polynomial(field, e)?);
    }
    Ok(g)
}

/// Binary BCH code of length `2^m − 1` and designed distance `2t+1`.
///
/// The generator matrix holds the `k` cyclic shifts `x^i g(x)`, coordinate `j`
/// being the coefficient of `x^j`.
pub fn bch_build(m: u32, t_design: usize) -> Result<LinearCode> {
    if !(MIN_DEGREE..=MAX_DEGREE).contains(&m) {
        return Err(Error::InvalidParameters("m must be in 3..=10"));
    }
    let field = GfExtField::new(m)?;
    let g = bch_generator_polynomial(&field, t_design)?;
    let n = field.order();
    let deg = g.degree().expect("generator is nonzero");
    if deg >= n {
        return Err(Error::InvalidParameters("designed distance leaves no message bits"));
    }
    let k = n - deg;
    let generator = BitMatrix::from_fn(k, n, |i, j| j >= i && g.coeff(j - i));
    LinearCode::from_generator(generator)
}
