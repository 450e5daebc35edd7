//! The ring `Z[x][a] / (a^2 - a x - 1)`.
//!
//! Because the modulus is monic of degree 2 in `a`, every element has a
//! unique representative `c0 + c1 a` with `c0, c1` in `Z[x]`. The generator
//! `a` is a unit: `a (a - x) = 1`, so negative powers of `a` stay inside the
//! ring. Its conjugate is `x - a` (the other root), which gives the norm
//! `N(c0 + c1 a) = c0^2 + x c0 c1 - c1^2` used for exact division once `x`
//! is fixed to an integer.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::poly::IntPoly;

/// `c0 + c1 a`, always reduced to degree at most 1 in `a`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RingElem {
    c0: IntPoly,
    c1: IntPoly,
}

impl RingElem {
    pub fn new(c0: IntPoly, c1: IntPoly) -> Self {
        RingElem { c0, c1 }
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        RingElem::new(IntPoly::constant(c), IntPoly::zero())
    }

    pub fn from_poly(c0: IntPoly) -> Self {
        RingElem::new(c0, IntPoly::zero())
    }

    /// The generator `a`.
    pub fn a() -> Self {
        RingElem::new(IntPoly::zero(), IntPoly::one())
    }

    /// The indeterminate `x` as a ring element.
    pub fn x() -> Self {
        RingElem::from_poly(IntPoly::x())
    }

    /// `a^-1 = a - x`.
    pub fn a_inv() -> Self {
        RingElem::new(-IntPoly::x(), IntPoly::one())
    }

    /// `a^e` for any signed `e`.
    pub fn a_pow(e: i64) -> Self {
        let base = if e >= 0 { Self::a() } else { Self::a_inv() };
        base.pow(e.unsigned_abs())
    }

    /// `(-1)^sign_exp * a^e`, the shape of every eigenvalue and column scale.
    pub fn signed_a_pow(sign_exp: i64, e: i64) -> Self {
        let p = Self::a_pow(e);
        if sign_exp.rem_euclid(2) == 1 {
            -p
        } else {
            p
        }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn c0(&self) -> &IntPoly {
        &self.c0
    }

    pub fn c1(&self) -> &IntPoly {
        &self.c1
    }

    pub fn is_zero(&self) -> bool {
        self.c0.is_zero() && self.c1.is_zero()
    }

    /// Image under `a -> x - a`.
    pub fn conj(&self) -> Self {
        RingElem::new(&self.c0 + &self.c1.shift(), -&self.c1)
    }

    /// `u * conj(u)`, an element of `Z[x]`.
    pub fn norm(&self) -> IntPoly {
        let c0c1 = &self.c0 * &self.c1;
        &(&(&self.c0 * &self.c0) + &c0c1.shift()) - &(&self.c1 * &self.c1)
    }

    /// Substitutes `x = value` in both coordinates. No further reduction is
    /// applied, so the result is read in `Z[a] / (a^2 - value a - 1)`.
    pub fn specialize(&self, value: &BigInt) -> Self {
        RingElem::new(
            IntPoly::constant(self.c0.eval(value)),
            IntPoly::constant(self.c1.eval(value)),
        )
    }

    /// Whether both coordinates are constant polynomials.
    pub fn is_specialized(&self) -> bool {
        self.c0.degree().unwrap_or(0) == 0 && self.c1.degree().unwrap_or(0) == 0
    }

    /// The plain integer this element equals, if its `a` part vanishes and
    /// its `x` part is constant.
    pub fn as_integer(&self) -> Option<BigInt> {
        if self.c1.is_zero() {
            self.c0.as_constant()
        } else {
            None
        }
    }

    /// Real value with `a` the positive root of `a^2 = a x + 1`.
    pub fn eval_numeric(&self, x: f64) -> f64 {
        let root = positive_root(x);
        self.c0.eval_f64(x) + self.c1.eval_f64(x) * root
    }

    /// Exact quotient `self / divisor` with `x` fixed to `x_value`, computed
    /// as `self * conj(divisor) / N(divisor)`. `None` when the divisor has
    /// zero norm or the quotient leaves the ring.
    pub fn div_exact_at(&self, divisor: &RingElem, x_value: &BigInt) -> Option<RingElem> {
        let norm = divisor.norm().eval(x_value);
        if norm.is_zero() {
            return None;
        }
        let num = (self * &divisor.conj()).specialize(x_value);
        let c0 = num.c0.as_constant()?;
        let c1 = num.c1.as_constant()?;
        let (q0, r0) = c0.div_rem(&norm);
        let (q1, r1) = c1.div_rem(&norm);
        if !r0.is_zero() || !r1.is_zero() {
            return None;
        }
        Some(RingElem::new(IntPoly::constant(q0), IntPoly::constant(q1)))
    }

    /// `p + q·a` when both coordinates are integers, otherwise
    /// `(p(x)) + (q(x))·a`. Zero parts and unit coefficients are elided,
    /// so `a`, `-a`, `1 - a` and `2 + 3·a` are all possible outputs.
    pub fn pretty(&self) -> String {
        if self.c1.is_zero() {
            return self.c0.to_string();
        }
        match (self.c0.as_constant(), self.c1.as_constant()) {
            (Some(p), Some(q)) => {
                let mag = q.abs();
                let a_part = if mag.is_one() {
                    "a".to_string()
                } else {
                    format!("{mag}·a")
                };
                match (p.is_zero(), q.is_negative()) {
                    (true, false) => a_part,
                    (true, true) => format!("-{a_part}"),
                    (false, false) => format!("{p} + {a_part}"),
                    (false, true) => format!("{p} - {a_part}"),
                }
            }
            _ => self.to_string(),
        }
    }
}

/// `(x + sqrt(x^2 + 4)) / 2`, written to avoid cancellation for negative x.
pub fn positive_root(x: f64) -> f64 {
    let s = (x * x + 4.0).sqrt();
    if x >= 0.0 {
        (x + s) / 2.0
    } else {
        2.0 / (s - x)
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) + ({})·a", self.c0, self.c1)
    }
}

impl From<i64> for RingElem {
    fn from(c: i64) -> Self {
        RingElem::from_int(c)
    }
}

impl Add<&RingElem> for &RingElem {
    type Output = RingElem;

    fn add(self, rhs: &RingElem) -> RingElem {
        RingElem::new(&self.c0 + &rhs.c0, &self.c1 + &rhs.c1)
    }
}

impl Sub<&RingElem> for &RingElem {
    type Output = RingElem;

    fn sub(self, rhs: &RingElem) -> RingElem {
        RingElem::new(&self.c0 - &rhs.c0, &self.c1 - &rhs.c1)
    }
}

impl Neg for &RingElem {
    type Output = RingElem;

    fn neg(self) -> RingElem {
        RingElem::new(-&self.c0, -&self.c1)
    }
}

impl Neg for RingElem {
    type Output = RingElem;

    fn neg(self) -> RingElem {
        -&self
    }
}

impl Mul<&RingElem> for &RingElem {
    type Output = RingElem;

    // (p0 + p1 a)(q0 + q1 a) = p0 q0 + p1 q1 + (p0 q1 + p1 q0 + x p1 q1) a
    fn mul(self, rhs: &RingElem) -> RingElem {
        let p1q1 = &self.c1 * &rhs.c1;
        let c0 = &(&self.c0 * &rhs.c0) + &p1q1;
        let c1 = &(&(&self.c0 * &rhs.c1) + &(&self.c1 * &rhs.c0)) + &p1q1.shift();
        RingElem::new(c0, c1)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<RingElem> for RingElem {
            type Output = RingElem;
            fn $method(self, rhs: RingElem) -> RingElem {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&RingElem> for RingElem {
            type Output = RingElem;
            fn $method(self, rhs: &RingElem) -> RingElem {
                (&self).$method(rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl AddAssign<RingElem> for RingElem {
    fn add_assign(&mut self, rhs: RingElem) {
        self.c0 += &rhs.c0;
        self.c1 += &rhs.c1;
    }
}

impl Zero for RingElem {
    fn zero() -> Self {
        RingElem::default()
    }

    fn is_zero(&self) -> bool {
        RingElem::is_zero(self)
    }
}

impl One for RingElem {
    fn one() -> Self {
        RingElem::from_int(1)
    }
}

/// How the indeterminate `x` is treated by a computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum XMode {
    /// Keep `x` as an indeterminate: results are identities in `Z[x]`.
    Symbolic,
    /// Fix `x` to an integer; `XMode::one()` is the golden-ratio case.
    Value(BigInt),
}

impl XMode {
    pub fn one() -> Self {
        XMode::Value(BigInt::one())
    }

    pub fn value(&self) -> Option<&BigInt> {
        match self {
            XMode::Symbolic => None,
            XMode::Value(v) => Some(v),
        }
    }

    pub fn apply(&self, u: &RingElem) -> RingElem {
        match self {
            XMode::Symbolic => u.clone(),
            XMode::Value(v) => u.specialize(v),
        }
    }
}

impl fmt::Display for XMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            XMode::Symbolic => f.write_str("symbolic"),
            XMode::Value(v) => write!(f, "{v}"),
        }
    }
}

impl std::str::FromStr for XMode {
    type Err = crate::error::Error;

    /// `symbolic` or a decimal integer.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "symbolic" {
            Ok(XMode::Symbolic)
        } else {
            crate::decimal::parse_decimal(s).map(XMode::Value)
        }
    }
}
