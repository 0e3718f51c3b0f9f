//! The five routes to `A(n)`, the cumulated deficient binary digit sum.

use std::fmt;

use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::takagi::takagi_dyadic;

/// A sequence term or a per-integer digit deficit.
pub type SeqValue = i64;

/// Sequence index `n` with `0 <= n <= 2^60`.
///
/// The cap keeps every intermediate of the closed forms inside `i128`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SeqIndex(u64);

impl SeqIndex {
    pub const MAX: u64 = 1 << 60;
    pub const ZERO: SeqIndex = SeqIndex(0);

    pub fn new(n: u64) -> Result<Self> {
        if n > Self::MAX {
            return Err(Error::IndexTooLarge(n.into()));
        }
        Ok(Self(n))
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

impl TryFrom<u64> for SeqIndex {
    type Error = Error;

    fn try_from(n: u64) -> Result<Self> {
        Self::new(n)
    }
}

impl TryFrom<i128> for SeqIndex {
    type Error = Error;

    fn try_from(n: i128) -> Result<Self> {
        if n < 0 {
            return Err(Error::NegativeIndex(n));
        }
        match u64::try_from(n) {
            Ok(v) => Self::new(v),
            Err(_) => Err(Error::IndexTooLarge(n as u128)),
        }
    }
}

impl fmt::Display for SeqIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `floor(log2 n)` for `n >= 1`, so that `2^k <= n < 2^(k+1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct FloorLog(u32);

impl FloorLog {
    pub fn of(n: u64) -> Option<Self> {
        (n != 0).then(|| Self(u64::BITS - 1 - n.leading_zeros()))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

/// Position of the most significant set bit.
///
/// # Panics
///
/// Panics when `n == 0`.
pub fn floor_log2(n: u64) -> u32 {
    FloorLog::of(n).expect("floor_log2 of zero").get()
}

/// Number of ones minus number of zeros in the binary expansion of `m`.
pub fn deficient_digit_sum(m: u64) -> Result<SeqValue> {
    if m == 0 {
        return Err(Error::ZeroIndex);
    }
    let len = i64::from(u64::BITS - m.leading_zeros());
    Ok(2 * i64::from(m.count_ones()) - len)
}

/// Sums the per-integer deficits over `1..=n`.
pub fn cumulative_naive(n: SeqIndex) -> SeqValue {
    (1..=n.get())
        .map(|m| 2 * i64::from(m.count_ones()) - i64::from(u64::BITS - m.leading_zeros()))
        .sum()
}

/// Whether `m` belongs to the set `S_n`, i.e.
/// `(n - m) mod 2^(floor(log2 m) + 1) < 2^floor(log2 m)`.
pub fn s_membership(m: u64, n: u64) -> Result<bool> {
    if m == 0 || m > n {
        return Err(Error::MembershipRange { m, n });
    }
    Ok(member(m, n))
}

#[inline]
fn member(m: u64, n: u64) -> bool {
    let half = 1u64 << floor_log2(m);
    // modulus 2 * half is a power of two
    ((n - m) & (2 * half - 1)) < half
}

/// `|S_n|`, counted member by member.
pub fn cardinality_s(n: SeqIndex) -> SeqValue {
    let n = n.get();
    (1..=n).filter(|&m| member(m, n)).count() as SeqValue
}

/// Leading-bit descent: `A(n)` in `popcount(n)` steps.
pub fn compute_via_recurrence(n: SeqIndex) -> SeqValue {
    compute_via_recurrence_counted(n).0
}

/// Same as [`compute_via_recurrence`], also returning the number of descent
/// steps taken.
pub fn compute_via_recurrence_counted(n: SeqIndex) -> (SeqValue, u32) {
    let mut total: i128 = 0;
    let mut steps = 0;
    let mut cur = n.get();
    while cur != 0 {
        steps += 1;
        let k = floor_log2(cur);
        let top = 1i128 << k;
        let rest = cur - (1u64 << k);
        if rest == 0 {
            total += top - i128::from(k);
            break;
        }
        // A(rest + 2^k) = A(rest) + (rest+1)(j - k + 2) + 2^k - 2^(j+1), j = floor(log2 rest)
        let j = floor_log2(rest);
        total +=
            (i128::from(rest) + 1) * (i128::from(j) - i128::from(k) + 2) + top - (1i128 << (j + 1));
        cur = rest;
    }
    (narrow(total), steps)
}

/// Closed form through `tau((n+1) 2^-m - 1)` with `k = floor(log2 n)` and
/// `m = floor(log2(n+1))`. Returns 0 for `n = 0`.
pub fn compute_via_lemma2(n: SeqIndex) -> SeqValue {
    let n = n.get();
    if n == 0 {
        return 0;
    }
    let k = floor_log2(n);
    let m = floor_log2(n + 1);
    let xi = Dyadic::new(i128::from(n + 1) - (1i128 << m), m);
    let tau = takagi_dyadic(xi).expect("xi lies in [0, 1)");
    // tau has exponent <= m, so tau * 2^m is an integer
    let tau_scaled = tau
        .mul_pow2(m)
        .to_integer()
        .expect("tau(xi) * 2^m must be an integer");
    let nn = i128::from(n);
    let value = (nn + 1) * (i128::from(m) - i128::from(k) + 1) - (1i128 << (m + 1)) - tau_scaled
        + (1i128 << (k + 1))
        - 1;
    narrow(value)
}

/// `n - 2^k tau((n+1)/2^k - 1)` with `k = floor(log2 n)`. Returns 0 for `n = 0`.
pub fn compute_via_takagi(n: SeqIndex) -> SeqValue {
    let n = n.get();
    if n == 0 {
        return 0;
    }
    let k = floor_log2(n);
    let arg = Dyadic::new(i128::from(n + 1) - (1i128 << k), k);
    let tau = takagi_dyadic(arg).expect("argument lies in (0, 1]");
    let tau_scaled = tau
        .mul_pow2(k)
        .to_integer()
        .expect("2^k tau((n+1)/2^k - 1) must be an integer");
    narrow(i128::from(n) - tau_scaled)
}

fn narrow(value: i128) -> SeqValue {
    SeqValue::try_from(value).expect("sequence value exceeds i64")
}
