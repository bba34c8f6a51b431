//! Exact binomial coefficients and base-2 logarithms of big integers.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

/// `C(n, k)` exactly; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) because acc = C(n, i).
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `log2(x)` for `x > 0`, accurate to double precision.
pub fn log2_big(x: &BigUint) -> f64 {
    assert!(!x.is_zero(), "log2 of zero");
    let bits = x.bits();
    if bits <= 64 {
        return libm::log2(x.to_u64().expect("fits in u64") as f64);
    }
    let shift = bits - 64;
    let top = (x >> shift).to_u64().expect("64 significant bits");
    libm::log2(top as f64) + shift as f64
}

/// `log2(num / den)`.
pub fn log2_ratio(num: &BigUint, den: &BigUint) -> f64 {
    log2_big(num) - log2_big(den)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_binomials() {
        assert_eq!(binomial(7, 1), BigUint::from(7u32));
        assert_eq!(binomial(15, 2), BigUint::from(105u32));
        assert_eq!(binomial(5, 0), BigUint::one());
        assert_eq!(binomial(3, 4), BigUint::zero());
        // Pascal's rule on a row large enough to leave u64
        for k in 1..100 {
            assert_eq!(binomial(200, k), binomial(199, k - 1) + binomial(199, k));
        }
    }

    #[test]
    fn log2_of_powers_and_large_values() {
        assert_eq!(log2_big(&BigUint::from(1u32)), 0.0);
        assert!((log2_big(&(BigUint::one() << 300u32)) - 300.0).abs() < 1e-12);
        let x = BigUint::from(3u32) << 1000u32;
        assert!((log2_big(&x) - (1000.0 + libm::log2(3.0))).abs() < 1e-9);
    }
}
