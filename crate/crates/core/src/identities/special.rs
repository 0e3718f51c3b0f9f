//! Special index sequences: half-value indices (A026644 without its leading
//! term), the Lichtenberg sequence A000975, interval minima and the `4^m`
//! fixed points.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::par::{self, Execution};
use crate::sequence::{compute_via_recurrence, SeqIndex, SeqValue};

pub const HALF_VALUE_LIMIT: u64 = 1 << 24;
pub const INTERVAL_K_MAX: u32 = 22;
pub const POWER4_M_MAX: u32 = 28;

fn value(n: u64) -> SeqValue {
    compute_via_recurrence(SeqIndex::new(n).expect("index within cap"))
}

fn bound(name: &'static str, value: u64, max: u64) -> Result<()> {
    if value > max {
        return Err(Error::ParameterBound { name, value, max });
    }
    Ok(())
}

/// Every `n` in `1..=limit` with `A(n) = n/2`.
pub fn half_value_indices(limit: u64) -> Result<Vec<u64>> {
    bound("limit", limit, HALF_VALUE_LIMIT)?;
    if limit == 0 {
        return Ok(Vec::new());
    }
    Ok(par::filter_range(Execution::default(), 1, limit, |n| {
        2 * value(n) == n as SeqValue
    }))
}

/// `a_j = a_(j-1) + 2 a_(j-2) + 2` from `2, 4`; `count` terms.
pub fn a026644_recurrence(count: usize) -> Result<Vec<u64>> {
    if count == 0 {
        return Err(Error::InvalidParameter("count must be positive".into()));
    }
    let mut out: Vec<u64> = Vec::with_capacity(count);
    for j in 0..count {
        let next = match j {
            0 => 2,
            1 => 4,
            _ => out[j - 1] + 2 * out[j - 2] + 2,
        };
        bound("term", next, SeqIndex::MAX)?;
        out.push(next);
    }
    Ok(out)
}

/// A000975: the half-value indices halved termwise.
pub fn lichtenberg(count: usize) -> Result<Vec<u64>> {
    Ok(a026644_recurrence(count)?
        .into_iter()
        .map(|t| t / 2)
        .collect())
}

/// Minimum of `A` over `[2^k, 2^(k+1))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalMinimum {
    pub k: u32,
    /// Smallest index attaining the minimum.
    pub argmin: u64,
    pub min: SeqValue,
    /// Every index attaining the minimum, ascending.
    pub argmins: Vec<u64>,
}

pub fn interval_minimum(k: u32) -> Result<IntervalMinimum> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be positive".into()));
    }
    bound("k", k.into(), INTERVAL_K_MAX.into())?;
    let lo = 1u64 << k;
    let (min, argmins) = par::argmin_range(Execution::default(), lo, 2 * lo - 1, value)
        .expect("interval is non-empty");
    Ok(IntervalMinimum {
        k,
        argmin: argmins[0],
        min,
        argmins,
    })
}

/// Index `(5 * 4^m - 2)/3` and the value `A` takes there, expected `4^m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedPoint {
    pub m: u32,
    pub index: u64,
    pub expected: SeqValue,
    pub value: SeqValue,
}

impl FixedPoint {
    pub fn holds(&self) -> bool {
        self.value == self.expected
    }
}

/// Fixed points for `m = 0..=m_max`. A mismatch is reported through
/// [`FixedPoint::holds`], never as a panic.
pub fn power4_fixed_points(m_max: u32) -> Result<Vec<FixedPoint>> {
    bound("mmax", m_max.into(), POWER4_M_MAX.into())?;
    Ok((0..=m_max)
        .map(|m| {
            let four_m = 1u64 << (2 * m);
            let numerator = 5 * four_m - 2;
            debug_assert_eq!(numerator % 3, 0);
            let index = numerator / 3;
            FixedPoint {
                m,
                index,
                expected: four_m as SeqValue,
                value: value(index),
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence::cumulative_naive;

    fn naive(n: u64) -> SeqValue {
        cumulative_naive(SeqIndex::new(n).unwrap())
    }

    #[test]
    fn half_value_examples() {
        assert_eq!(half_value_indices(10).unwrap(), [2, 4, 10]);
        let brute: Vec<u64> = (1..=100).filter(|&n| 2 * naive(n) == n as i64).collect();
        assert_eq!(brute, [2, 4, 10, 20, 42, 84]);
        assert_eq!(half_value_indices(100).unwrap(), brute);
        assert!(half_value_indices(1).unwrap().is_empty());
        assert!(half_value_indices(0).unwrap().is_empty());
        assert!(half_value_indices(HALF_VALUE_LIMIT + 1).is_err());
    }

    #[test]
    fn recurrence_examples() {
        assert_eq!(a026644_recurrence(3).unwrap(), [2, 4, 10]);
        assert_eq!(a026644_recurrence(5).unwrap(), [2, 4, 10, 20, 42]);
        assert_eq!(a026644_recurrence(1).unwrap(), [2]);
        assert!(a026644_recurrence(0).is_err());
        assert!(a026644_recurrence(200).is_err());
    }

    #[test]
    fn lichtenberg_examples() {
        assert_eq!(lichtenberg(3).unwrap(), [1, 2, 5]);
        assert_eq!(lichtenberg(5).unwrap(), [1, 2, 5, 10, 21]);
        assert_eq!(lichtenberg(1).unwrap(), [1]);
    }

    #[test]
    fn interval_minimum_examples() {
        let m = interval_minimum(1).unwrap();
        assert_eq!((m.argmin, m.min), (2, 1));
        let brute = (8..16u64).map(|n| (naive(n), n)).min().unwrap();
        assert_eq!(brute, (5, 8));
        let m = interval_minimum(3).unwrap();
        assert_eq!((m.argmin, m.min), (8, 5));
        assert_eq!(m.argmins, [8, 9, 10]);
        assert!(interval_minimum(0).is_err());
        assert!(interval_minimum(INTERVAL_K_MAX + 1).is_err());
    }

    #[test]
    fn fixed_point_examples() {
        let points = power4_fixed_points(3).unwrap();
        let pairs: Vec<_> = points.iter().map(|p| (p.index, p.value)).collect();
        assert_eq!(pairs, [(1, 1), (6, 4), (26, 16), (106, 64)]);
        assert_eq!(naive(6), 4);
        assert_eq!(naive(106), 64);
        assert!(points.iter().all(FixedPoint::holds));
        assert!(power4_fixed_points(POWER4_M_MAX).is_ok());
        assert!(power4_fixed_points(POWER4_M_MAX + 1).is_err());
    }
}
