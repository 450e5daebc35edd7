//! Dense square matrices over exact rings.
//!
//! Public indexing is 1-based, `(i, j)` with `1 <= i, j <= n`; storage is
//! row-major.

use std::fmt;
use std::ops::{AddAssign, Mul};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::decimal::Decimal;
use crate::error::{Error, Result};
use crate::ring::{RingElem, XMode};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SquareMatrix<T> {
    n: usize,
    entries: Vec<T>,
}

/// Matrix of arbitrary-precision integers.
pub type IntMatrix = SquareMatrix<BigInt>;

/// Matrix over `Z[x][a] / (a^2 - a x - 1)`.
pub type RingMatrix = SquareMatrix<RingElem>;

impl<T> SquareMatrix<T> {
    /// Fills entry `(i, j)` from `f(i, j)`, 1-based.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroDimension);
        }
        let mut entries = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                entries.push(f(i, j));
            }
        }
        Ok(SquareMatrix { n, entries })
    }

    pub fn try_from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Result<T>) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroDimension);
        }
        let mut entries = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                entries.push(f(i, j)?);
            }
        }
        Ok(SquareMatrix { n, entries })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::ZeroDimension);
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                left: n,
                right: bad.len(),
            });
        }
        Ok(SquareMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry `(i, j)`, 1-based. Panics outside `1..=n`.
    pub fn get(&self, i: usize, j: usize) -> &T {
        assert!(
            (1..=self.n).contains(&i) && (1..=self.n).contains(&j),
            "({i}, {j}) outside 1..={}",
            self.n
        );
        &self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        self.entries.chunks(self.n)
    }

    /// Column `j`, 1-based.
    pub fn column(&self, j: usize) -> Vec<&T> {
        (1..=self.n).map(|i| self.get(i, j)).collect()
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> SquareMatrix<U> {
        SquareMatrix {
            n: self.n,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self
    where
        T: Clone,
    {
        SquareMatrix::from_fn(self.n, |i, j| self.get(j, i).clone()).expect("n >= 1")
    }
}

impl<T> SquareMatrix<T>
where
    T: Clone + Zero + One + AddAssign<T>,
    for<'a> &'a T: Mul<&'a T, Output = T>,
{
    pub fn identity(n: usize) -> Result<Self> {
        Self::from_fn(n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn zeros(n: usize) -> Result<Self> {
        Self::from_fn(n, |_, _| T::zero())
    }

    /// Diagonal matrix with the given entries.
    pub fn diagonal(diag: &[T]) -> Result<Self> {
        Self::from_fn(diag.len(), |i, j| {
            if i == j {
                diag[i - 1].clone()
            } else {
                T::zero()
            }
        })
    }

    /// Naive cubic product.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.n != rhs.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: rhs.n,
            });
        }
        let n = self.n;
        Self::from_fn(n, |i, j| {
            let mut acc = T::zero();
            for k in 1..=n {
                let l = self.get(i, k);
                if l.is_zero() {
                    continue;
                }
                acc += l * rhs.get(k, j);
            }
            acc
        })
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|v| c * v)
    }

    pub fn trace(&self) -> T {
        let mut acc = T::zero();
        for i in 1..=self.n {
            acc += self.get(i, i).clone();
        }
        acc
    }

    pub fn is_identity(&self) -> bool
    where
        T: PartialEq,
    {
        self.rows().enumerate().all(|(r, row)| {
            row.iter()
                .enumerate()
                .all(|(c, v)| if r == c { v.is_one() } else { v.is_zero() })
        })
    }

    /// `self^e` by repeated squaring, `e >= 0`.
    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = Self::identity(self.n).expect("n >= 1");
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same dimension");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same dimension");
            }
        }
        acc
    }
}

/// `c * A` over the ring.
pub fn mat_scalar_mul(c: &RingElem, a: &RingMatrix) -> RingMatrix {
    a.scale(c)
}

/// `n x n` ring identity.
pub fn identity_matrix(n: usize) -> Result<RingMatrix> {
    RingMatrix::identity(n)
}

impl IntMatrix {
    /// Determinant by Bareiss fraction-free elimination.
    pub fn determinant(&self) -> BigInt {
        let n = self.n;
        let mut m: Vec<Vec<BigInt>> = self.rows().map(<[BigInt]>::to_vec).collect();
        let mut negate = false;
        let mut prev = BigInt::one();
        for k in 0..n {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                    Some(r) => {
                        m.swap(k, r);
                        negate = !negate;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    // Sylvester's identity makes this division exact
                    m[i][j] = v.div_floor(&prev);
                }
            }
            prev = m[k][k].clone();
        }
        let det = m[n - 1][n - 1].clone();
        if negate {
            -det
        } else {
            det
        }
    }

    /// Minor with row `i` and column `j` (1-based) deleted; `None` for 1x1.
    fn minor(&self, i: usize, j: usize) -> Option<IntMatrix> {
        if self.n == 1 {
            return None;
        }
        let rows = (1..=self.n)
            .filter(|&r| r != i)
            .map(|r| {
                (1..=self.n)
                    .filter(|&c| c != j)
                    .map(|c| self.get(r, c).clone())
                    .collect()
            })
            .collect();
        Some(IntMatrix::from_rows(rows).expect("square minor"))
    }

    /// Classical adjugate: transposed cofactor matrix.
    pub fn adjugate(&self) -> IntMatrix {
        IntMatrix::from_fn(self.n, |i, j| match self.minor(j, i) {
            None => BigInt::one(),
            Some(m) => {
                let d = m.determinant();
                if (i + j) % 2 == 0 {
                    d
                } else {
                    -d
                }
            }
        })
        .expect("n >= 1")
    }

    /// Integer inverse `adj(A) / det(A)` of a matrix with determinant +-1.
    pub fn inverse_unimodular(&self) -> Result<IntMatrix> {
        let det = self.determinant();
        if det.abs() != BigInt::one() {
            return Err(Error::NotUnimodular {
                det: det.to_string(),
            });
        }
        Ok(self.adjugate().map(|v| v * &det))
    }

    /// `A^m` for any integer `m`; negative powers need `|det A| = 1`.
    pub fn pow_signed(&self, m: i64) -> Result<IntMatrix> {
        if m >= 0 {
            Ok(self.pow(m as u64))
        } else {
            Ok(self.inverse_unimodular()?.pow(m.unsigned_abs()))
        }
    }

    /// Plain decimal CSV, one row per line.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(BigInt::to_string).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn from_csv(s: &str) -> Result<IntMatrix> {
        let rows = s
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| {
                l.split(',')
                    .map(|c| crate::decimal::parse_decimal(c.trim()))
                    .collect()
            })
            .collect::<Result<Vec<Vec<BigInt>>>>()?;
        IntMatrix::from_rows(rows)
    }

    /// Embeds into the ring as constants.
    pub fn to_ring(&self) -> RingMatrix {
        self.map(|v| RingElem::from_int(v.clone()))
    }
}

impl RingMatrix {
    /// Entrywise `x` substitution (identity for `XMode::Symbolic`).
    pub fn apply_x(&self, mode: &XMode) -> RingMatrix {
        match mode {
            XMode::Symbolic => self.clone(),
            XMode::Value(v) => self.map(|u| u.specialize(v)),
        }
    }

    /// The integer matrix this equals, if every entry is a plain integer.
    pub fn to_int(&self) -> Option<IntMatrix> {
        let entries = self
            .entries
            .iter()
            .map(RingElem::as_integer)
            .collect::<Option<Vec<_>>>()?;
        Some(SquareMatrix { n: self.n, entries })
    }

    /// Real matrix with `a` the positive root of `a^2 = a x + 1`.
    pub fn eval_numeric(&self, x: f64) -> nalgebra::DMatrix<f64> {
        nalgebra::DMatrix::from_fn(self.n, self.n, |r, c| {
            self.get(r + 1, c + 1).eval_numeric(x)
        })
    }
}

impl IntMatrix {
    pub fn eval_numeric(&self) -> nalgebra::DMatrix<f64> {
        use num_traits::ToPrimitive;
        nalgebra::DMatrix::from_fn(self.n, self.n, |r, c| {
            self.get(r + 1, c + 1).to_f64().unwrap_or(f64::NAN)
        })
    }
}

/// How a matrix entry type is written to JSON.
pub trait WireEntry: Sized {
    type Wire: Serialize + DeserializeOwned;

    fn to_wire(&self) -> Self::Wire;
    fn from_wire(w: Self::Wire) -> Self;
}

impl WireEntry for BigInt {
    type Wire = Decimal;

    fn to_wire(&self) -> Decimal {
        Decimal(self.clone())
    }

    fn from_wire(w: Decimal) -> Self {
        w.0
    }
}

impl WireEntry for RingElem {
    type Wire = RingElem;

    fn to_wire(&self) -> RingElem {
        self.clone()
    }

    fn from_wire(w: RingElem) -> Self {
        w
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixWire<W> {
    n: usize,
    entries: Vec<Vec<W>>,
}

/// `{"n": n, "entries": [[...], ...]}`, row-major.
impl<T: WireEntry> Serialize for SquareMatrix<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let entries = self
            .rows()
            .map(|r| r.iter().map(T::to_wire).collect())
            .collect();
        MatrixWire { n: self.n, entries }.serialize(serializer)
    }
}

impl<'de, T: WireEntry> Deserialize<'de> for SquareMatrix<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let wire = MatrixWire::<T::Wire>::deserialize(deserializer)?;
        if wire.entries.len() != wire.n {
            return Err(D::Error::custom(format!(
                "n = {} but {} rows given",
                wire.n,
                wire.entries.len()
            )));
        }
        let rows = wire
            .entries
            .into_iter()
            .map(|r| r.into_iter().map(T::from_wire).collect())
            .collect();
        SquareMatrix::from_rows(rows).map_err(D::Error::custom)
    }
}

impl<T: fmt::Display> fmt::Display for SquareMatrix<T> {
    /// Right-aligned columns.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(|v| v.to_string()).collect();
        render_grid(f, self.n, &cells)
    }
}

pub(crate) fn render_grid(f: &mut impl fmt::Write, n: usize, cells: &[String]) -> fmt::Result {
    let widths: Vec<usize> = (0..n)
        .map(|c| {
            (0..n)
                .map(|r| cells[r * n + c].chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    for r in 0..n {
        let line: Vec<String> = (0..n)
            .map(|c| format!("{:>w$}", cells[r * n + c], w = widths[c]))
            .collect();
        writeln!(f, "{}", line.join("  "))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn construction_errors() {
        assert_eq!(IntMatrix::identity(0), Err(Error::ZeroDimension));
        assert!(matches!(
            IntMatrix::from_rows(vec![vec![BigInt::one()], vec![]]),
            Err(Error::DimensionMismatch { .. })
        ));
        let a = int(&[&[1, 2], &[3, 4]]);
        let b = IntMatrix::identity(3).unwrap();
        assert_eq!(
            a.mul(&b),
            Err(Error::DimensionMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn products() {
        let a = int(&[&[1, 2], &[3, 4]]);
        assert_eq!(a.mul(&IntMatrix::identity(2).unwrap()).unwrap(), a);
        let r2 = int(&[&[0, 1], &[1, 1]]);
        assert_eq!(r2.mul(&r2).unwrap(), int(&[&[1, 1], &[1, 2]]));
        assert_eq!(r2.pow(10), int(&[&[34, 55], &[55, 89]]));
    }

    #[test]
    fn scalar_and_identity() {
        let a = RingMatrix::from_fn(2, |i, j| RingElem::a_pow(i as i64 - j as i64)).unwrap();
        assert_eq!(
            mat_scalar_mul(&RingElem::zero(), &a),
            RingMatrix::zeros(2).unwrap()
        );
        assert_eq!(mat_scalar_mul(&RingElem::one(), &a), a);
        assert_eq!(identity_matrix(3).unwrap().trace(), RingElem::from_int(3));
        assert!(identity_matrix(4).unwrap().is_identity());
    }

    #[test]
    fn determinant_and_inverse() {
        assert_eq!(int(&[&[7]]).determinant(), BigInt::from(7));
        assert_eq!(int(&[&[0, 1], &[1, 1]]).determinant(), BigInt::from(-1));
        assert_eq!(
            int(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 2]]).determinant(),
            BigInt::from(6)
        );
        assert_eq!(int(&[&[1, 2], &[2, 4]]).determinant(), BigInt::zero());
        // forced pivot swap
        assert_eq!(
            int(&[&[0, 0, 1], &[0, 1, 1], &[1, 2, 1]]).determinant(),
            BigInt::from(-1)
        );

        let r2 = int(&[&[0, 1], &[1, 1]]);
        assert_eq!(r2.inverse_unimodular().unwrap(), int(&[&[-1, 1], &[1, 0]]));
        assert!(int(&[&[2]]).inverse_unimodular().is_err());
        assert_eq!(int(&[&[-1]]).pow_signed(-3).unwrap(), int(&[&[-1]]));
    }

    #[test]
    fn csv_and_json() {
        let big: BigInt = "12345678901234567890".parse().unwrap();
        let a = IntMatrix::from_rows(vec![
            vec![BigInt::zero(), BigInt::from(-1)],
            vec![big, BigInt::from(2)],
        ])
        .unwrap();
        assert_eq!(a.to_csv(), "0,-1\n12345678901234567890,2\n");
        assert_eq!(IntMatrix::from_csv(&a.to_csv()).unwrap(), a);
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(
            json,
            r#"{"n":2,"entries":[["0","-1"],["12345678901234567890","2"]]}"#
        );
        assert_eq!(serde_json::from_str::<IntMatrix>(&json).unwrap(), a);
        assert!(serde_json::from_str::<IntMatrix>(r#"{"n":3,"entries":[["1"]]}"#).is_err());
        assert!(serde_json::from_str::<IntMatrix>(r#"{"n":0,"entries":[]}"#).is_err());

        let u = RingMatrix::from_fn(1, |_, _| RingElem::a()).unwrap();
        let json = serde_json::to_string(&u).unwrap();
        assert_eq!(json, r#"{"n":1,"entries":[[{"c0":[],"c1":["1"]}]]}"#);
    }

    #[test]
    fn grid_alignment() {
        let a = int(&[&[1, -10], &[100, 2]]);
        assert_eq!(a.to_string(), "  1  -10\n100    2\n");
    }
}
