use num_bigint::BigUint;
use num_traits::One;

use crate::binom::binomial;

/// Integer Gilbert–Varshamov distance: the largest `d ≤ n` with
/// `Σ_{i=0}^{d−2} C(n−1, i) ≤ 2^{n−k}`.
pub fn gv_bound(n: usize, k: usize) -> usize {
    assert!(0 < k && k < n, "gv_bound needs 0 < k < n");
    let budget = BigUint::one() << (n - k);
    let mut sum = BigUint::one(); // i = 0 term, i.e. d = 2
    let mut d = 2;
    while d < n {
        sum += binomial(n as u64 - 1, d as u64 - 1);
        if sum > budget {
            break;
        }
        d += 1;
    }
    d.min(n)
}

/// Binary entropy `H(x) = −x·log2 x − (1−x)·log2(1−x)`.
pub fn binary_entropy(x: f64) -> f64 {
    if x <= 0.0 || x >= 1.0 {
        return 0.0;
    }
    -x * libm::log2(x) - (1.0 - x) * libm::log2(1.0 - x)
}

/// Asymptotic Gilbert–Varshamov distance `n · H⁻¹(1 − k/n)`, with `H⁻¹`
/// taken on `[0, 1/2]`. Fractional; reported next to the integer bound.
pub fn gv_distance_asymptotic(n: usize, k: usize) -> f64 {
    assert!(0 < k && k < n, "gv_distance_asymptotic needs 0 < k < n");
    let target = 1.0 - k as f64 / n as f64;
    let (mut lo, mut hi) = (0.0f64, 0.5f64);
    for _ in 0..100 {
        let mid = 0.5 * (lo + hi);
        if binary_entropy(mid) < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    n as f64 * 0.5 * (lo + hi)
}
