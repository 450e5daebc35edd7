//! The right-justified Pascal matrix, its `x`-weighted family, the
//! eigenvector matrix `U` and the scaled diagonalizer `W`.
//!
//! All indices are 1-based: `i` is the row, `j` the column.

use crate::binomial::binom;
use crate::error::Result;
use crate::matrix::{IntMatrix, RingMatrix};
use crate::poly::IntPoly;
use crate::ring::RingElem;

fn parity_sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `R = (C(i-1, n-j))`: the first `n` rows of Pascal's triangle pushed
/// against the right edge.
pub fn build_r(n: usize) -> Result<IntMatrix> {
    let ni = n as i64;
    IntMatrix::from_fn(n, |i, j| binom(i as i64 - 1, ni - j as i64))
}

/// Exponent of `x` in entry `(i, j)` of `R(x)`.
pub fn rx_exponent(n: usize, i: usize, j: usize) -> i64 {
    i as i64 + j as i64 - n as i64 - 1
}

/// `R(x) = (C(i-1, n-j) x^(i+j-n-1))`.
///
/// A negative exponent only occurs when `n - j > i - 1`, where the binomial
/// vanishes, so every entry is a polynomial.
pub fn build_rx(n: usize) -> Result<RingMatrix> {
    let ni = n as i64;
    RingMatrix::from_fn(n, |i, j| {
        let c = binom(i as i64 - 1, ni - j as i64);
        let e = rx_exponent(n, i, j);
        if e < 0 {
            debug_assert!(num_traits::Zero::is_zero(&c));
            RingElem::default()
        } else {
            RingElem::from_poly(IntPoly::monomial(c, e as usize))
        }
    })
}

/// `u_ij = sum_{k=1}^{j} (-1)^(i-k) C(i-1, k-1) C(n-i, j-k) a^(2k-i-1)`.
pub fn u_entry(n: usize, i: usize, j: usize) -> RingElem {
    let (n, i, j) = (n as i64, i as i64, j as i64);
    let mut acc = RingElem::default();
    for k in 1..=j {
        let c = binom(i - 1, k - 1) * binom(n - i, j - k) * parity_sign(i - k);
        if c.sign() == num_bigint::Sign::NoSign {
            continue;
        }
        acc += &RingElem::from_int(c) * &RingElem::a_pow(2 * k - i - 1);
    }
    acc
}

/// Eigenvector matrix: column `j` is `u_j`.
pub fn build_u(n: usize) -> Result<RingMatrix> {
    RingMatrix::from_fn(n, |i, j| u_entry(n, i, j))
}

/// `w_ij = (-1)^j a^(n-j) sum_r (-1)^(i-r) C(i-1, r-1) C(n-i, j-r) a^(2r-i-1)`.
///
/// The sum runs over the support of `C(i-1, r-1)`, i.e. `r` in `1..=i`, and
/// the column factor is folded into each term's power of `a`.
pub fn w_entry(n: usize, i: usize, j: usize) -> RingElem {
    let (n, i, j) = (n as i64, i as i64, j as i64);
    let mut acc = RingElem::default();
    for r in 1..=i {
        let c = binom(i - 1, r - 1) * binom(n - i, j - r) * parity_sign(i - r + j);
        if c.sign() == num_bigint::Sign::NoSign {
            continue;
        }
        acc += &RingElem::from_int(c) * &RingElem::a_pow(n - j + 2 * r - i - 1);
    }
    acc
}

/// `W` from its own entry formula.
pub fn build_w(n: usize) -> Result<RingMatrix> {
    RingMatrix::from_fn(n, |i, j| w_entry(n, i, j))
}

/// `(-1)^j a^(n-j)`, the factor taking column `j` of `U` to column `j` of `W`.
pub fn column_scale(n: usize, j: usize) -> RingElem {
    RingElem::signed_a_pow(j as i64, n as i64 - j as i64)
}

/// `W` derived from `U` by column scaling; must agree with [`build_w`].
pub fn build_w_from_u(u: &RingMatrix) -> Result<RingMatrix> {
    let n = u.n();
    RingMatrix::from_fn(n, |i, j| &column_scale(n, j) * u.get(i, j))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use num_bigint::BigInt;

    fn int(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
        .unwrap()
    }

    fn golden(m: &RingMatrix) -> RingMatrix {
        m.apply_x(&crate::ring::XMode::one())
    }

    fn el(p: i64, q: i64) -> RingElem {
        &RingElem::from_int(p) + &(&RingElem::from_int(q) * &RingElem::a())
    }

    #[test]
    fn r_small_cases() {
        assert_eq!(build_r(1).unwrap(), int(&[&[1]]));
        assert_eq!(build_r(2).unwrap(), int(&[&[0, 1], &[1, 1]]));
        assert_eq!(
            build_r(3).unwrap(),
            int(&[&[0, 0, 1], &[0, 1, 1], &[1, 2, 1]])
        );
        assert_eq!(build_r(0), Err(Error::ZeroDimension));
    }

    #[test]
    fn r_shape() {
        for n in 1..=12 {
            let r = build_r(n).unwrap();
            for i in 1..=n {
                for j in 1..=n {
                    if i + j <= n {
                        assert_eq!(r.get(i, j), &BigInt::from(0));
                    }
                }
                assert_eq!(r.get(i, n + 1 - i), &BigInt::from(1));
                let row_sum: BigInt = r.rows().nth(i - 1).unwrap().iter().sum();
                assert_eq!(row_sum, BigInt::from(1) << (i - 1));
            }
        }
    }

    #[test]
    fn rx_small_cases() {
        let r2 = build_rx(2).unwrap();
        let expected = RingMatrix::from_rows(vec![
            vec![RingElem::default(), RingElem::from_int(1)],
            vec![RingElem::from_int(1), RingElem::x()],
        ])
        .unwrap();
        assert_eq!(r2, expected);
        assert_eq!(build_rx(1).unwrap(), RingMatrix::identity(1).unwrap());
        assert_eq!(build_rx(0), Err(Error::ZeroDimension));
    }

    #[test]
    fn rx_never_needs_negative_exponent() {
        for n in 1..=20 {
            for i in 1..=n {
                for j in 1..=n {
                    if rx_exponent(n, i, j) < 0 {
                        assert_eq!(binom(i as i64 - 1, (n - j) as i64), BigInt::from(0));
                    }
                }
            }
        }
    }

    #[test]
    fn rx_specializes_to_r() {
        for n in 1..=12 {
            assert_eq!(
                golden(&build_rx(n).unwrap()).to_int().unwrap(),
                build_r(n).unwrap()
            );
        }
    }

    #[test]
    fn u_small_cases() {
        assert_eq!(build_u(1).unwrap(), RingMatrix::identity(1).unwrap());
        let u2 = golden(&build_u(2).unwrap());
        // column 1: (1, -a^-1) = (1, 1 - a); column 2: (1, a)
        assert_eq!(u2.get(1, 1), &el(1, 0));
        assert_eq!(u2.get(2, 1), &el(1, -1));
        assert_eq!(u2.get(1, 2), &el(1, 0));
        assert_eq!(u2.get(2, 2), &el(0, 1));
        assert_eq!(build_u(0), Err(Error::ZeroDimension));
    }

    #[test]
    fn w_small_cases() {
        assert_eq!(
            build_w(1).unwrap(),
            RingMatrix::from_rows(vec![vec![el(-1, 0)]]).unwrap()
        );
        let w2 = golden(&build_w(2).unwrap());
        let expected =
            RingMatrix::from_rows(vec![vec![el(0, -1), el(1, 0)], vec![el(1, 0), el(0, 1)]])
                .unwrap();
        assert_eq!(w2, expected);
        // no reduction is needed for n = 2, so this holds symbolically too
        assert_eq!(build_w(2).unwrap(), expected);
    }

    #[test]
    fn w_matches_column_scaled_u() {
        for n in 1..=8 {
            let w = build_w(n).unwrap();
            assert_eq!(build_w_from_u(&build_u(n).unwrap()).unwrap(), w, "n={n}");
        }
    }
}
