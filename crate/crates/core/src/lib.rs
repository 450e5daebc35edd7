//! Exact arithmetic and verification tools for the right-justified Pascal
//! matrix `R = (C(i-1, n-j))` and its one-parameter family `R(x)`.
//!
//! Everything symbolic lives in the ring `Z[x][a] / (a^2 - a x - 1)`: the
//! eigenvalues `(-1)^(n+j) a^(2j-n-1)`, the eigenvector matrix `U`, the scaled
//! diagonalizer `W` with `W^2 = (1 + a^2)^(n-1) I`, and closed-form integer
//! powers of `R` obtained from `R^m = W diag(lambda^m) W / (1 + a^2)^(n-1)`.
//! At `x = 1` the generator `a` is the golden ratio.

pub mod binomial;
pub mod cli;
pub mod decimal;
pub mod error;
pub mod matrix;
pub mod pascal;
pub mod poly;
pub mod ring;
pub mod spectral;

pub use binomial::{binom, IdentityId, IdentityReport, ParamBox, ParamRange};
pub use error::{Error, Result};
pub use matrix::{IntMatrix, RingMatrix, SquareMatrix};
pub use pascal::{build_r, build_rx, build_u, build_w};
pub use poly::IntPoly;
pub use ring::{RingElem, XMode};
pub use spectral::{EigenPair, PowerResult};
