use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::Error;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Entry-by-entry sum of products.
fn naive_product(a: &BitMatrix, b: &BitMatrix) -> BitMatrix {
    BitMatrix::from_fn(a.rows(), b.cols(), |i, j| {
        (0..a.cols()).fold(false, |acc, l| acc ^ (a.get(i, l) & b.get(l, j)))
    })
}

/// Rank as log2 of the number of distinct vectors in the row span.
fn span_rank(a: &BitMatrix) -> usize {
    let mut span = BTreeSet::new();
    for mask in 0u32..(1 << a.rows()) {
        let mut acc = BitVector::zeros(a.cols());
        for i in 0..a.rows() {
            if mask >> i & 1 == 1 {
                acc ^= &a.row(i);
            }
        }
        span.insert(acc.words().to_vec());
    }
    span.len().trailing_zeros() as usize
}

#[test]
fn identity_is_neutral() {
    let a = random_matrix(6, 9, &mut rng(1));
    assert_eq!(BitMatrix::identity(6).mul(&a).unwrap(), a);
    assert_eq!(a.mul(&BitMatrix::identity(9)).unwrap(), a);
}

#[test]
fn product_matches_triple_loop() {
    let mut r = rng(2);
    for _ in 0..20 {
        let a = random_matrix(8, 8, &mut r);
        let b = random_matrix(8, 8, &mut r);
        assert_eq!(a.mul(&b).unwrap(), naive_product(&a, &b));
    }
    // word-boundary shapes
    let a = random_matrix(5, 130, &mut r);
    let b = random_matrix(130, 70, &mut r);
    assert_eq!(a.mul(&b).unwrap(), naive_product(&a, &b));
}

#[test]
fn product_dimension_mismatch() {
    let a = BitMatrix::zeros(2, 3);
    assert!(matches!(a.mul(&a), Err(Error::DimensionMismatch { .. })));
}

#[test]
fn rank_basics() {
    assert_eq!(BitMatrix::zeros(5, 7).rank(), 0);
    assert_eq!(BitMatrix::identity(12).rank(), 12);
    assert_eq!(BitMatrix::zeros(0, 3).rank(), 0);
}

#[test]
fn rank_of_every_2x2_matches_span_enumeration() {
    for bits in 0u8..16 {
        let m = BitMatrix::from_fn(2, 2, |i, j| bits >> (2 * i + j) & 1 == 1);
        assert_eq!(m.rank(), span_rank(&m), "matrix {m:?}");
    }
}

#[test]
fn inverse_examples() {
    assert_eq!(BitMatrix::identity(7).inverse().unwrap(), BitMatrix::identity(7));
    let m = BitMatrix::from_bit_rows(&[&[1, 1], &[0, 1]]);
    assert_eq!(m.inverse().unwrap(), m);
    let a = random_nonsingular(16, &mut rng(3));
    let inv = a.inverse().unwrap();
    assert_eq!(a.mul(&inv).unwrap(), BitMatrix::identity(16));
    assert_eq!(inv.mul(&a).unwrap(), BitMatrix::identity(16));
}

#[test]
fn inverse_errors() {
    let singular = BitMatrix::from_bit_rows(&[&[1, 1], &[1, 1]]);
    assert_eq!(singular.inverse(), Err(Error::SingularMatrix));
    assert!(matches!(
        BitMatrix::zeros(2, 3).inverse(),
        Err(Error::InvalidDimensions(_))
    ));
}

#[test]
fn left_kernel_examples() {
    assert_eq!(BitMatrix::identity(5).left_kernel().rows(), 0);
    assert_eq!(BitMatrix::zeros(4, 6).left_kernel(), BitMatrix::identity(4));

    let mut r = rng(4);
    let t = random_nonsingular(10, &mut r);
    let j = IndexSet::new(vec![1, 4, 6, 9], 10).unwrap();
    let tj = t.select_columns(&j).unwrap();
    let x = tj.left_kernel();
    assert_eq!(x.rows(), 6);
    assert!(x.mul(&tj).unwrap().is_zero());
    assert_eq!(x.rank(), 6);
}

#[test]
fn select_columns_examples() {
    let a = random_matrix(5, 8, &mut rng(5));
    assert_eq!(a.select_columns(&IndexSet::prefix(8)).unwrap(), a);

    let id = BitMatrix::identity(4);
    let s = id.select_columns(&IndexSet::new(vec![1, 3], 4).unwrap()).unwrap();
    assert_eq!(s, BitMatrix::from_bit_rows(&[&[0, 0], &[1, 0], &[0, 0], &[0, 1]]));

    let j = IndexSet::new(vec![0, 2, 7], 8).unwrap();
    let s = a.select_columns(&j).unwrap();
    for i in 0..5 {
        for (dst, &src) in j.iter().enumerate() {
            assert_eq!(s.get(i, dst), a.get(i, src));
        }
    }
    let bad = IndexSet::new(vec![8], 9).unwrap();
    assert!(matches!(a.select_columns(&bad), Err(Error::IndexOutOfRange { .. })));
}

#[test]
fn random_nonsingular_examples() {
    for seed in 0..5 {
        assert_eq!(random_nonsingular(1, &mut rng(seed)), BitMatrix::identity(1));
    }
    let a = random_nonsingular(8, &mut rng(6));
    assert_eq!(a.rank(), 8);
    assert_eq!(a, random_nonsingular(8, &mut rng(6)));
    assert_ne!(a, random_nonsingular(8, &mut rng(7)));
}

#[test]
fn random_full_column_rank_examples() {
    let sq = random_full_column_rank(9, 9, &mut rng(8)).unwrap();
    assert_eq!(sq, random_nonsingular(9, &mut rng(8)));
    assert_eq!(random_full_column_rank(10, 6, &mut rng(9)).unwrap().rank(), 6);
    let tall = random_full_column_rank(63, 39, &mut rng(10)).unwrap();
    assert_eq!((tall.rows(), tall.cols(), tall.rank()), (63, 39, 39));
    assert!(random_full_column_rank(3, 4, &mut rng(0)).is_err());
}

#[test]
fn permutation_matrix_examples() {
    assert_eq!(random_permutation_matrix(1, &mut rng(0)), BitMatrix::identity(1));
    let p = random_permutation_matrix(8, &mut rng(11));
    for i in 0..8 {
        assert_eq!(p.row(i).weight(), 1);
        assert_eq!(p.column(i).weight(), 1);
    }
    let v = random_vector(8, &mut rng(12));
    let back = v.mul_matrix(&p).unwrap().mul_matrix(&p.inverse().unwrap()).unwrap();
    assert_eq!(back, v);
    // the inverse of a permutation is its transpose
    assert_eq!(p.inverse().unwrap(), p.transpose());
}

#[test]
fn vector_of_weight() {
    let mut r = rng(13);
    for w in [0, 1, 17, 63] {
        assert_eq!(random_vector_of_weight(63, w, &mut r).weight(), w);
    }
}

#[test]
fn echelon_solves_left_systems() {
    let mut r = rng(14);
    let a = random_matrix(6, 20, &mut r);
    let ech = RowEchelon::new(&a);
    let x = random_vector(6, &mut r);
    let b = x.mul_matrix(&a).unwrap();
    let sol = ech.solve_left(&b).expect("b is in the row space");
    assert_eq!(sol.mul_matrix(&a).unwrap(), b);
    assert!(ech.contains(&b));
}

#[test]
fn pivot_columns_are_first_independent() {
    // column 1 duplicates column 0, so pivots skip it
    let g = BitMatrix::from_bit_rows(&[&[1, 1, 0, 1], &[0, 0, 1, 1]]);
    assert_eq!(RowEchelon::pivot_columns(&g), vec![0, 2]);
}

fn arb_matrix(rows: usize, cols: usize) -> impl Strategy<Value = BitMatrix> {
    proptest::collection::vec(any::<bool>(), rows * cols)
        .prop_map(move |bits| BitMatrix::from_fn(rows, cols, |i, j| bits[i * cols + j]))
}

fn dims() -> impl Strategy<Value = (usize, usize, usize, usize)> {
    (1usize..=16, 1usize..=16, 1usize..=16, 1usize..=16)
}

proptest! {
    #[test]
    fn product_is_associative_and_distributive(
        (a, b, c, d) in dims().prop_flat_map(|(p, q, r, s)| {
            (arb_matrix(p, q), arb_matrix(q, r), arb_matrix(r, s), arb_matrix(q, r))
        })
    ) {
        let left = a.mul(&b).unwrap().mul(&c).unwrap();
        let right = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        let dist = a.mul(&b.add(&d).unwrap()).unwrap();
        prop_assert_eq!(dist, a.mul(&b).unwrap().add(&a.mul(&d).unwrap()).unwrap());
    }

    #[test]
    fn kernel_dimension_and_annihilation(
        a in (1usize..=16, 1usize..=16).prop_flat_map(|(r, c)| arb_matrix(r, c))
    ) {
        let ker = a.left_kernel();
        prop_assert_eq!(ker.rows() + a.rank(), a.rows());
        prop_assert!(ker.mul(&a).unwrap().is_zero());
        let rker = a.right_kernel();
        prop_assert_eq!(rker.rows() + a.rank(), a.cols());
        prop_assert!(a.mul(&rker.transpose()).unwrap().is_zero());
    }

    #[test]
    fn inverse_is_involution(seed in any::<u64>(), n in 1usize..=16) {
        let a = random_nonsingular(n, &mut rng(seed));
        let inv = a.inverse().unwrap();
        prop_assert_eq!(inv.inverse().unwrap(), a);
    }

    #[test]
    fn column_selection_does_not_raise_rank(
        (a, picks) in (1usize..=12, 1usize..=12).prop_flat_map(|(r, c)| {
            (arb_matrix(r, c), proptest::collection::btree_set(0..c, 0..=c))
        })
    ) {
        let j = IndexSet::new(picks.into_iter().collect::<Vec<_>>(), a.cols()).unwrap();
        let s = a.select_columns(&j).unwrap();
        prop_assert!(s.rank() <= j.len().min(a.rank()));
    }

    #[test]
    fn random_generators_are_seed_deterministic(seed in any::<u64>()) {
        prop_assert_eq!(random_nonsingular(7, &mut rng(seed)), random_nonsingular(7, &mut rng(seed)));
        prop_assert_eq!(
            random_full_column_rank(9, 4, &mut rng(seed)).unwrap(),
            random_full_column_rank(9, 4, &mut rng(seed)).unwrap()
        );
        prop_assert_eq!(random_permutation_matrix(9, &mut rng(seed)), random_permutation_matrix(9, &mut rng(seed)));
        prop_assert_eq!(random_matrix(3, 70, &mut rng(seed)), random_matrix(3, 70, &mut rng(seed)));
    }
}
