//! Generalized binomial coefficients and brute-force checks of the six
//! summation identities used in the eigenvector and involution proofs.
//!
//! `C(n, k)` is the falling factorial `n (n-1) ... (n-k+1) / k!` for `k >= 0`
//! and any integer `n`, and zero for `k < 0`. The symmetry law
//! `C(n, k) = C(n, n-k)` only holds for `n >= 0` and is never used here.
//!
//! Every identity is evaluated as an explicit finite sum. The summation
//! ranges are the exact supports of the summands, so nothing is truncated;
//! parameter triples whose sum would have infinite support are rejected.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::decimal;
use crate::error::{Error, Result};

/// Generalized binomial coefficient.
pub fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    // C(n, i+1) = C(n, i) (n - i) / (i + 1), exact at every step
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

fn sign(e: i64) -> BigInt {
    if e.rem_euclid(2) == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

fn delta(v: i64) -> BigInt {
    if v == 0 {
        BigInt::one()
    } else {
        BigInt::zero()
    }
}

/// `C(N-J, K)` against `sum_r (-1)^r C(N-r, K-r) C(J, r)`, `r` in `0..=K`.
pub fn check_star(n: i64, j: i64, k: i64) -> (BigInt, BigInt) {
    let lhs = binom(n - j, k);
    let rhs = (0..=k)
        .map(|r| sign(r) * binom(n - r, k - r) * binom(j, r))
        .sum();
    (lhs, rhs)
}

/// Trinomial revision: `C(I,J) C(J,K)` against `C(I,K) C(I-K, J-K)`.
pub fn check_trinomial(i: i64, j: i64, k: i64) -> (BigInt, BigInt) {
    (binom(i, j) * binom(j, k), binom(i, k) * binom(i - k, j - k))
}

/// Companion form: `C(I,J) C(J,K)` against `C(I,K) C(I-K, I-J)`.
///
/// Evaluated for every integer triple. For `I < 0` the right side relies on
/// the symmetry law with a negative upper index and disagrees with the left
/// side, e.g. `I = J = -1, K = 0` gives `0` against `1`.
pub fn check_trinomial_companion(i: i64, j: i64, k: i64) -> (BigInt, BigInt) {
    (binom(i, j) * binom(j, k), binom(i, k) * binom(i - k, i - j))
}

/// Vandermonde convolution: `sum_k C(M,k) C(N,L-k)` against `C(M+N, L)`.
///
/// With `M >= 0` the summands vanish outside `0..=min(M, L)`; with `N >= 0`
/// outside `max(0, L-N)..=L`. Both negative has infinite support.
pub fn check_vandermonde(m: i64, n: i64, l: i64) -> Result<(BigInt, BigInt)> {
    let support = if m >= 0 {
        0..=m.min(l)
    } else if n >= 0 {
        (l - n).max(0)..=l
    } else {
        return Err(Error::InfiniteSupport {
            identity: IdentityId::Vandermonde.name(),
            params: format!("M={m}, N={n}, L={l}"),
        });
    };
    let lhs = support.map(|k| binom(m, k) * binom(n, l - k)).sum();
    Ok((lhs, binom(m + n, l)))
}

/// `sum_{r=0}^{N} (-1)^r C(N, r)` against `delta(N, 0)`, for `N >= 0`.
pub fn check_alternating_delta(n: i64) -> Result<(BigInt, BigInt)> {
    if n < 0 {
        return Err(Error::Precondition {
            identity: IdentityId::AlternatingDelta.name(),
            reason: format!("N = {n} < 0 gives an infinite sum"),
        });
    }
    let lhs = (0..=n).map(|r| sign(r) * binom(n, r)).sum();
    Ok((lhs, delta(n)))
}

/// `sum_u (-1)^u C(N, L-u) C(N-L+u, u)` against `delta(L, 0)`, `u` in `0..=L`.
/// Holds for negative `N` as well.
pub fn check_double_delta(n: i64, l: i64) -> (BigInt, BigInt) {
    let lhs = (0..=l)
        .map(|u| sign(u) * binom(n, l - u) * binom(n - l + u, u))
        .sum();
    (lhs, delta(l))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum IdentityId {
    Star,
    Trinomial,
    TrinomialCompanion,
    Vandermonde,
    AlternatingDelta,
    DoubleDelta,
}

impl IdentityId {
    pub const ALL: [IdentityId; 6] = [
        IdentityId::Star,
        IdentityId::Trinomial,
        IdentityId::TrinomialCompanion,
        IdentityId::Vandermonde,
        IdentityId::AlternatingDelta,
        IdentityId::DoubleDelta,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::Star => "STAR",
            IdentityId::Trinomial => "TRINOMIAL",
            IdentityId::TrinomialCompanion => "TRINOMIAL_COMPANION",
            IdentityId::Vandermonde => "VANDERMONDE",
            IdentityId::AlternatingDelta => "ALTERNATING_DELTA",
            IdentityId::DoubleDelta => "DOUBLE_DELTA",
        }
    }

    /// Parameter names, in the order `evaluate` takes them.
    pub fn params(self) -> &'static [&'static str] {
        match self {
            IdentityId::Star => &["N", "J", "K"],
            IdentityId::Trinomial | IdentityId::TrinomialCompanion => &["I", "J", "K"],
            IdentityId::Vandermonde => &["M", "N", "L"],
            IdentityId::AlternatingDelta => &["N"],
            IdentityId::DoubleDelta => &["N", "L"],
        }
    }

    /// `(lhs, rhs)` at one lattice point. `args` follows `params()`.
    pub fn evaluate(self, args: &[i64]) -> Result<(BigInt, BigInt)> {
        if args.len() != self.params().len() {
            return Err(Error::Precondition {
                identity: self.name(),
                reason: format!(
                    "expected {} parameters, got {}",
                    self.params().len(),
                    args.len()
                ),
            });
        }
        match self {
            IdentityId::Star => Ok(check_star(args[0], args[1], args[2])),
            IdentityId::Trinomial => Ok(check_trinomial(args[0], args[1], args[2])),
            IdentityId::TrinomialCompanion => {
                Ok(check_trinomial_companion(args[0], args[1], args[2]))
            }
            IdentityId::Vandermonde => check_vandermonde(args[0], args[1], args[2]),
            IdentityId::AlternatingDelta => check_alternating_delta(args[0]),
            IdentityId::DoubleDelta => Ok(check_double_delta(args[0], args[1])),
        }
    }

    /// The sweep box used when no ranges are given.
    pub fn default_box(self) -> ParamBox {
        let r = |lo, hi| ParamRange { lo, hi };
        let ranges: Vec<ParamRange> = match self {
            IdentityId::AlternatingDelta => vec![r(0, 40)],
            IdentityId::DoubleDelta => vec![r(-8, 12), r(0, 12)],
            _ => vec![r(-6, 12); 3],
        };
        ParamBox::new(
            self,
            self.params()
                .iter()
                .map(|p| p.to_string())
                .zip(ranges)
                .collect(),
        )
        .expect("default boxes satisfy preconditions")
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    /// Accepts the wire names (`DOUBLE_DELTA`), kebab-case
    /// (`double-delta`), and the short forms `alternating`/`companion`.
    fn from_str(s: &str) -> Result<Self> {
        let norm = s.to_ascii_lowercase().replace('_', "-");
        Ok(match norm.as_str() {
            "star" => IdentityId::Star,
            "trinomial" => IdentityId::Trinomial,
            "trinomial-companion" | "companion" => IdentityId::TrinomialCompanion,
            "vandermonde" => IdentityId::Vandermonde,
            "alternating-delta" | "alternating" => IdentityId::AlternatingDelta,
            "double-delta" => IdentityId::DoubleDelta,
            _ => return Err(Error::Parse(format!("unknown identity {s:?}"))),
        })
    }
}

/// Inclusive integer range; serialized as `[lo, hi]`, parsed from `lo..hi`
/// or a single integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "[i64; 2]", try_from = "[i64; 2]")]
pub struct ParamRange {
    pub lo: i64,
    pub hi: i64,
}

impl ParamRange {
    pub fn new(lo: i64, hi: i64) -> Result<Self> {
        if lo > hi {
            return Err(Error::Parse(format!("empty range {lo}..{hi}")));
        }
        Ok(ParamRange { lo, hi })
    }

    pub fn len(&self) -> u64 {
        let span = (self.hi as i128 - self.lo as i128 + 1).max(0);
        u64::try_from(span).unwrap_or(u64::MAX)
    }

    pub fn is_empty(&self) -> bool {
        self.lo > self.hi
    }
}

impl From<ParamRange> for [i64; 2] {
    fn from(r: ParamRange) -> Self {
        [r.lo, r.hi]
    }
}

impl TryFrom<[i64; 2]> for ParamRange {
    type Error = Error;

    fn try_from([lo, hi]: [i64; 2]) -> Result<Self> {
        ParamRange::new(lo, hi)
    }
}

impl FromStr for ParamRange {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let int = |t: &str| {
            decimal::parse_decimal(t.trim())
                .ok()
                .and_then(|v| i64::try_from(v).ok())
                .ok_or_else(|| Error::Parse(format!("bad range bound {t:?} in {s:?}")))
        };
        match s.split_once("..") {
            Some((lo, hi)) => ParamRange::new(int(lo)?, int(hi)?),
            None => {
                let v = int(s)?;
                ParamRange::new(v, v)
            }
        }
    }
}

impl fmt::Display for ParamRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

/// One inclusive range per parameter of an identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParamBox {
    #[serde(skip)]
    identity: IdentityId,
    #[serde(flatten)]
    ranges: BTreeMap<String, ParamRange>,
}

/// Sweeps over boxes with more points than this are refused.
pub const MAX_BOX_POINTS: u64 = 50_000_000;

impl ParamBox {
    /// Validates the parameter names and the identity's box-level
    /// preconditions (`N >= 0` for the alternating sum).
    pub fn new(identity: IdentityId, ranges: BTreeMap<String, ParamRange>) -> Result<Self> {
        let expected = identity.params();
        if ranges.len() != expected.len() || !expected.iter().all(|p| ranges.contains_key(*p)) {
            return Err(Error::Precondition {
                identity: identity.name(),
                reason: format!(
                    "box must name exactly {:?}, got {:?}",
                    expected,
                    ranges.keys().collect::<Vec<_>>()
                ),
            });
        }
        if identity == IdentityId::AlternatingDelta && ranges["N"].lo < 0 {
            return Err(Error::Precondition {
                identity: identity.name(),
                reason: format!("N range {} includes negative values", ranges["N"]),
            });
        }
        let bx = ParamBox { identity, ranges };
        let points = bx
            .ranges
            .values()
            .try_fold(1u64, |acc, r| acc.checked_mul(r.len()));
        match points {
            Some(p) if p <= MAX_BOX_POINTS => Ok(bx),
            _ => Err(Error::Precondition {
                identity: identity.name(),
                reason: format!("box exceeds {MAX_BOX_POINTS} lattice points"),
            }),
        }
    }

    pub fn identity(&self) -> IdentityId {
        self.identity
    }

    pub fn ranges(&self) -> &BTreeMap<String, ParamRange> {
        &self.ranges
    }

    pub fn num_points(&self) -> u64 {
        self.ranges.values().map(ParamRange::len).product()
    }

    /// Ranges in the identity's parameter order.
    fn ordered(&self) -> Vec<ParamRange> {
        self.identity
            .params()
            .iter()
            .map(|p| self.ranges[*p])
            .collect()
    }

    /// All lattice points, last parameter varying fastest.
    pub fn points(&self) -> impl Iterator<Item = Vec<i64>> + '_ {
        let ranges = self.ordered();
        let mut next = Some(ranges.iter().map(|r| r.lo).collect::<Vec<_>>());
        std::iter::from_fn(move || {
            let cur = next.take()?;
            let mut succ = cur.clone();
            for d in (0..succ.len()).rev() {
                if succ[d] < ranges[d].hi {
                    succ[d] += 1;
                    next = Some(succ);
                    break;
                }
                succ[d] = ranges[d].lo;
            }
            Some(cur)
        })
    }
}

impl fmt::Display for ParamBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .identity
            .params()
            .iter()
            .map(|p| format!("{p}={}", self.ranges[*p]))
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// An identity at one parameter point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCase {
    pub identity_id: IdentityId,
    pub params: BTreeMap<String, i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityFailure {
    #[serde(flatten)]
    pub case: IdentityCase,
    #[serde(with = "decimal::bigint")]
    pub lhs: BigInt,
    #[serde(with = "decimal::bigint")]
    pub rhs: BigInt,
}

/// Outcome of evaluating an identity over a whole box.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity: IdentityId,
    #[serde(rename = "box")]
    pub param_box: BTreeMap<String, ParamRange>,
    /// Every lattice point in the box, including skipped ones.
    pub cases_checked: u64,
    /// Points outside the identity's domain, counted per reason.
    #[serde(default)]
    pub skipped: BTreeMap<String, u64>,
    pub failures: Vec<IdentityFailure>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn skipped_total(&self) -> u64 {
        self.skipped.values().sum()
    }

    /// Decodes a report and checks its internal consistency.
    pub fn from_json(s: &str) -> Result<Self> {
        let report: IdentityReport =
            serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let bx = ParamBox::new(report.identity, report.param_box.clone())?;
        if bx.num_points() != report.cases_checked {
            return Err(Error::Parse(format!(
                "cases_checked {} does not match box size {}",
                report.cases_checked,
                bx.num_points()
            )));
        }
        if report.skipped_total() > report.cases_checked {
            return Err(Error::Parse(
                "more skipped cases than lattice points".into(),
            ));
        }
        for failure in &report.failures {
            if failure.case.identity_id != report.identity {
                return Err(Error::Parse(
                    "failure belongs to a different identity".into(),
                ));
            }
        }
        Ok(report)
    }

    pub fn summary(&self) -> String {
        let ranges: Vec<String> = self
            .identity
            .params()
            .iter()
            .filter_map(|p| self.param_box.get(*p).map(|r| format!("{p}={r}")))
            .collect();
        format!(
            "{:<20} {:<28} cases={:<6} skipped={:<5} failures={}",
            self.identity.name(),
            ranges.join(" "),
            self.cases_checked,
            self.skipped_total(),
            self.failures.len()
        )
    }
}

/// Evaluates `bx.identity()` at every lattice point of `bx`.
pub fn sweep_identity(bx: &ParamBox) -> IdentityReport {
    let identity = bx.identity();
    let names = identity.params();
    let mut report = IdentityReport {
        identity,
        param_box: bx.ranges().clone(),
        cases_checked: 0,
        skipped: BTreeMap::new(),
        failures: Vec::new(),
    };
    for point in bx.points() {
        report.cases_checked += 1;
        match identity.evaluate(&point) {
            Ok((lhs, rhs)) if lhs != rhs => {
                let params = names.iter().map(|n| n.to_string()).zip(point).collect();
                report.failures.push(IdentityFailure {
                    case: IdentityCase {
                        identity_id: identity,
                        params,
                    },
                    lhs,
                    rhs,
                });
            }
            Ok(_) => {}
            Err(e) => {
                let reason = match e {
                    Error::InfiniteSupport { .. } => "infinite support".to_string(),
                    other => other.to_string(),
                };
                *report.skipped.entry(reason).or_default() += 1;
            }
        }
    }
    report
}
