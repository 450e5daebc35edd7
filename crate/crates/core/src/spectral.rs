//! Eigenpairs of `R(x)`, the involution `W^2 = (1 + a^2)^(n-1) I`, exact
//! integer powers of `R`, and floating-point diagonalization checks.
//!
//! With `W = U diag((-1)^j a^(n-j))` and `W^-1 = W / (1 + a^2)^(n-1)`,
//!
//! ```text
//! R^m = W diag(lambda_j^m) W / (1 + a^2)^(n-1)
//! ```
//!
//! for every integer `m`. Each eigenvalue is `+-` a power of the unit `a`, so
//! negative `m` needs no fractions; the single division at the end is done
//! exactly after fixing `x` to an integer.

use std::collections::BTreeMap;

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{IntMatrix, RingMatrix};
use crate::pascal::{build_r, build_rx, build_u, build_w, u_entry};
use crate::ring::{positive_root, RingElem, XMode};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EigenPair {
    /// 1-based.
    pub index: usize,
    pub lambda: RingElem,
    pub vector: Vec<RingElem>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerResult {
    pub n: usize,
    pub m: i64,
    pub x: BigInt,
    pub matrix: IntMatrix,
    /// `W diag(lambda^m) W` before division.
    pub raw: RingMatrix,
}

fn check_index(n: usize, j: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::ZeroDimension);
    }
    if !(1..=n).contains(&j) {
        return Err(Error::IndexOutOfRange { index: j as i64, n });
    }
    Ok(())
}

/// `lambda_j = (-1)^(n+j) a^(2j-n-1)`.
pub fn eigenvalue(n: usize, j: usize) -> Result<RingElem> {
    check_index(n, j)?;
    Ok(eigenvalue_power(n, j, 1))
}

/// `lambda_j^m` for any integer `m`.
fn eigenvalue_power(n: usize, j: usize, m: i64) -> RingElem {
    let (n, j) = (n as i64, j as i64);
    RingElem::signed_a_pow((n + j) * m, (2 * j - n - 1) * m)
}

pub fn eigenpair(n: usize, j: usize) -> Result<EigenPair> {
    let lambda = eigenvalue(n, j)?;
    let vector = (1..=n).map(|i| u_entry(n, i, j)).collect();
    Ok(EigenPair {
        index: j,
        lambda,
        vector,
    })
}

pub fn eigenpairs(n: usize) -> Result<Vec<EigenPair>> {
    if n == 0 {
        return Err(Error::ZeroDimension);
    }
    (1..=n).map(|j| eigenpair(n, j)).collect()
}

/// `R(x) u_p` against `lambda_p u_p`, exactly, in the chosen `x` mode.
pub fn verify_eigenpair(n: usize, p: usize, mode: &XMode) -> Result<bool> {
    let EigenPair { lambda, vector, .. } = eigenpair(n, p)?;
    let r = match mode {
        XMode::Symbolic => build_rx(n)?,
        XMode::Value(v) if v.is_one() => build_r(n)?.to_ring(),
        XMode::Value(_) => build_rx(n)?.apply_x(mode),
    };
    let u: Vec<RingElem> = vector.iter().map(|v| mode.apply(v)).collect();
    let lambda = mode.apply(&lambda);
    Ok((1..=n).all(|i| {
        let mut lhs = RingElem::default();
        for (k, uk) in u.iter().enumerate() {
            lhs += r.get(i, k + 1) * uk;
        }
        mode.apply(&lhs) == mode.apply(&(&lambda * &u[i - 1]))
    }))
}

/// `1 + a^2`.
pub fn involution_base() -> RingElem {
    &RingElem::one() + &RingElem::a_pow(2)
}

/// `W^2 = (1 + a^2)^(n-1) I`, exactly. `Symbolic` checks the identity over
/// `Z[x]`; a value checks it after substituting `x`.
pub fn verify_involution(n: usize, mode: &XMode) -> Result<bool> {
    let w = build_w(n)?.apply_x(mode);
    let sq = w.mul(&w)?.apply_x(mode);
    let scale = mode.apply(&involution_base().pow(n as u64 - 1));
    let expected = RingMatrix::identity(n)?.scale(&scale);
    Ok(sq == expected)
}

/// `R(x)^m` at `x = 1` through the diagonalization.
pub fn matrix_power_closed_form(n: usize, m: i64) -> Result<PowerResult> {
    matrix_power_closed_form_at(n, m, &BigInt::one())
}

/// `R(x)^m` at an integer `x` through the diagonalization. Every entry of
/// `W diag(lambda^m) W` must be an exact multiple of `(1 + a^2)^(n-1)` with
/// an integer quotient; anything else is reported as [`Error::NotDivisible`].
pub fn matrix_power_closed_form_at(n: usize, m: i64, x: &BigInt) -> Result<PowerResult> {
    if n == 0 {
        return Err(Error::ZeroDimension);
    }
    let mode = XMode::Value(x.clone());
    let w = build_w(n)?.apply_x(&mode);
    let scaled = RingMatrix::from_fn(n, |i, j| {
        mode.apply(&(w.get(i, j) * &eigenvalue_power(n, j, m)))
    })?;
    let raw = scaled.mul(&w)?.apply_x(&mode);
    let divisor = involution_base().pow(n as u64 - 1);
    let matrix = IntMatrix::try_from_fn(n, |i, j| {
        raw.get(i, j)
            .div_exact_at(&divisor, x)
            .and_then(|q| q.as_integer())
            .ok_or(Error::NotDivisible {
                i,
                j,
                exponent: n - 1,
            })
    })?;
    Ok(PowerResult {
        n,
        m,
        x: x.clone(),
        matrix,
        raw,
    })
}

/// Independent `R^m` at `x = 1`: repeated multiplication, or the adjugate
/// inverse for `m < 0`.
pub fn matrix_power_oracle(n: usize, m: i64) -> Result<IntMatrix> {
    build_r(n)?.pow_signed(m)
}

/// Independent `R(x)^m` at an integer `x`.
pub fn matrix_power_oracle_at(n: usize, m: i64, x: &BigInt) -> Result<IntMatrix> {
    let r = build_rx(n)?.apply_x(&XMode::Value(x.clone()));
    r.to_int().expect("R(x) has no a-component").pow_signed(m)
}

/// Floating-point residuals of the diagonalization with
/// `V = W / (1 + a^2)^((n-1)/2)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiagResidual {
    /// `max |V^2 - I|`.
    pub involution: f64,
    /// `max |V R V - diag(lambda)|`.
    pub similarity: f64,
}

impl DiagResidual {
    pub fn within(&self, tol: f64) -> bool {
        self.involution <= tol && self.similarity <= tol
    }

    pub fn max(&self) -> f64 {
        self.involution.max(self.similarity)
    }
}

fn max_abs_diff(a: &DMatrix<f64>, b: &DMatrix<f64>) -> f64 {
    (a - b).iter().fold(0.0, |acc: f64, v| acc.max(v.abs()))
}

/// The real matrix `V` at `x`.
pub fn numeric_v(n: usize, x: f64) -> Result<DMatrix<f64>> {
    let w = build_w(n)?.eval_numeric(x);
    let a = positive_root(x);
    let scale = (1.0 + a * a).powf((n as f64 - 1.0) / 2.0);
    Ok(w / scale)
}

pub fn verify_diagonalization_numeric(n: usize, x: f64) -> Result<DiagResidual> {
    let v = numeric_v(n, x)?;
    let r = build_rx(n)?.eval_numeric(x);
    let lambdas: Vec<f64> = (1..=n)
        .map(|j| eigenvalue_power(n, j, 1).eval_numeric(x))
        .collect();
    let diag = DMatrix::from_diagonal(&nalgebra::DVector::from_vec(lambdas));
    Ok(DiagResidual {
        involution: max_abs_diff(&(&v * &v), &DMatrix::identity(n, n)),
        similarity: max_abs_diff(&(&v * &r * &v), &diag),
    })
}

/// Smallest `|lambda_i - lambda_j|` over `i != j`; `+inf` for `n = 1`.
pub fn eigen_distinctness(n: usize, x: f64) -> Result<f64> {
    if n == 0 {
        return Err(Error::ZeroDimension);
    }
    let vals: Vec<f64> = (1..=n)
        .map(|j| eigenvalue_power(n, j, 1).eval_numeric(x))
        .collect();
    let mut gap = f64::INFINITY;
    for i in 0..n {
        for j in i + 1..n {
            gap = gap.min((vals[i] - vals[j]).abs());
        }
    }
    Ok(gap)
}

/// `|det U|` in floating point.
pub fn numeric_eigenvector_det(n: usize, x: f64) -> Result<f64> {
    Ok(build_u(n)?.eval_numeric(x).determinant().abs())
}

/// Default numeric tolerance for dimension `n`.
pub fn default_tolerance(n: usize) -> f64 {
    if n <= 8 {
        1e-9
    } else {
        1e-8
    }
}

/// One line of a verification run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub n: usize,
    pub params: BTreeMap<String, serde_json::Value>,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
}
