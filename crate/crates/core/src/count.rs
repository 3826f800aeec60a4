//! Exact arbitrary-precision counting: binomials, the 2x2 path determinant,
//! the multiplicity sum, its closed form, and Krull dimension.

use num_bigint::BigUint;
use num_traits::{CheckedSub, One, Zero};

use crate::grid::{Cell, GridShape};

/// Binomial coefficient, total over the integers: zero whenever b < 0 or
/// b > a. The zero-outside-range convention is load-bearing — the pair
/// determinant's C(., i-2) entries must vanish at i = 1.
pub fn binomial(a: i64, b: i64) -> BigUint {
    if b < 0 || b > a {
        return BigUint::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigUint::one();
    for i in 0..b {
        acc = acc * BigUint::from((a - i) as u64) / BigUint::from((i + 1) as u64);
    }
    acc
}

/// Number of vertex-disjoint path pairs (1,1) -> (i,n), (2,1) -> (m,j):
/// det [[C(i+n-2, i-1), C(m+j-2, m-1)], [C(i+n-3, i-2), C(m+j-3, m-2)]].
pub fn lgv_pair_count(shape: GridShape, pivot: Cell) -> BigUint {
    let (m, n) = (shape.rows() as i64, shape.cols() as i64);
    let (i, j) = (pivot.row as i64, pivot.col as i64);
    let main = binomial(i + n - 2, i - 1) * binomial(m + j - 3, m - 2);
    let off = binomial(m + j - 2, m - 1) * binomial(i + n - 3, i - 2);
    main.checked_sub(&off)
        .expect("pair determinant is non-negative for in-grid pivots")
}

/// Sum over pivots (i,j) != (m,n) of (path count from x_{i,j} to x_{m,n})
/// times the pair determinant.
pub fn multiplicity_sum(shape: GridShape) -> BigUint {
    let (m, n) = (shape.rows(), shape.cols());
    let mut total = BigUint::zero();
    for i in 1..=m {
        for j in 1..=n {
            if (i, j) == (m, n) {
                continue;
            }
            let x_paths = binomial((m + n - i - j) as i64, (m - i) as i64);
            total += x_paths * lgv_pair_count(shape, Cell::new(i, j));
        }
    }
    total
}

/// C(n+m-2, m-1)^2.
pub fn multiplicity_closed(shape: GridShape) -> BigUint {
    let b = binomial(
        (shape.rows() + shape.cols() - 2) as i64,
        (shape.rows() - 1) as i64,
    );
    &b * &b
}

/// 2(m+n) - 2; the complex dimension is this minus 1.
pub fn krull_dimension(shape: GridShape) -> u32 {
    2 * (shape.rows() + shape.cols()) - 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::enumerate_nonintersecting_pairs;
    use proptest::prelude::*;

    fn shape(m: u32, n: u32) -> GridShape {
        GridShape::new(m, n).unwrap()
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(4, 2), BigUint::from(6u32));
        assert_eq!(binomial(0, 0), BigUint::from(1u32));
        assert_eq!(binomial(7, -1), BigUint::zero());
        assert_eq!(binomial(3, 5), BigUint::zero());
        assert_eq!(binomial(-2, 0), BigUint::zero());
    }

    #[test]
    fn lgv_values() {
        assert_eq!(lgv_pair_count(shape(2, 2), Cell::new(1, 1)), BigUint::one());
        assert_eq!(lgv_pair_count(shape(5, 7), Cell::new(1, 1)), BigUint::one());
        assert_eq!(lgv_pair_count(shape(2, 2), Cell::new(1, 2)), BigUint::one());
        assert_eq!(
            lgv_pair_count(shape(3, 3), Cell::new(2, 2)),
            BigUint::from(3u32)
        );
    }

    #[test]
    fn lgv_matches_exhaustive_pair_enumeration() {
        for (m, n) in [(2, 2), (2, 3), (2, 4), (3, 3), (3, 4), (4, 4)] {
            let s = shape(m, n);
            for i in 1..=m {
                for j in 1..=n {
                    if (i, j) == (m, n) {
                        continue;
                    }
                    let pairs =
                        enumerate_nonintersecting_pairs(s, Cell::new(i, n), Cell::new(m, j))
                            .unwrap();
                    assert_eq!(
                        BigUint::from(pairs.len()),
                        lgv_pair_count(s, Cell::new(i, j)),
                        "pivot ({i},{j}) on ({m},{n})"
                    );
                }
            }
        }
    }

    #[test]
    fn multiplicity_values() {
        assert_eq!(multiplicity_sum(shape(2, 2)), BigUint::from(4u32));
        assert_eq!(multiplicity_sum(shape(3, 3)), BigUint::from(36u32));
        assert_eq!(multiplicity_sum(shape(3, 4)), BigUint::from(100u32));
        assert_eq!(multiplicity_closed(shape(2, 2)), BigUint::from(4u32));
        assert_eq!(multiplicity_closed(shape(4, 4)), BigUint::from(400u32));
        assert_eq!(multiplicity_closed(shape(2, 5)), BigUint::from(25u32));
    }

    #[test]
    fn krull_dimension_values() {
        assert_eq!(krull_dimension(shape(2, 2)), 6);
        assert_eq!(krull_dimension(shape(3, 3)), 10);
        assert_eq!(krull_dimension(shape(2, 3)), 8);
    }

    #[test]
    fn sum_equals_closed_form_up_to_12() {
        for m in 2..=12u32 {
            for n in m..=12u32 {
                assert_eq!(
                    multiplicity_sum(shape(m, n)),
                    multiplicity_closed(shape(m, n)),
                    "({m},{n})"
                );
            }
        }
    }

    proptest! {
        #[test]
        fn binomial_symmetry_and_pascal(a in 0i64..60, b in 0i64..60) {
            prop_assume!(b <= a);
            prop_assert_eq!(binomial(a, b), binomial(a, a - b));
            if a >= 1 {
                prop_assert_eq!(
                    binomial(a, b),
                    binomial(a - 1, b - 1) + binomial(a - 1, b)
                );
            }
        }
    }
}
