use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::rational::Rational;

/// An exact dyadic rational `num / 2^exp` kept in lowest terms.
///
/// The numerator is odd unless the value is zero, in which case the exponent
/// is zero as well. Arithmetic is fixed-width; every value produced while
/// working with indices up to `2^60` fits comfortably, and overflow panics
/// rather than wrapping.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Dyadic {
    num: i128,
    exp: u32,
}

/// A dyadic value as written `num / 2^k`, without reducing the fraction.
///
/// Some bounds depend on the exponent of the written form rather than on the
/// reduced one, so this keeps `k` exactly as supplied.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DyadicRepr {
    pub num: i128,
    pub k: u32,
}

impl DyadicRepr {
    pub fn new(num: i128, k: u32) -> Self {
        Self { num, k }
    }

    pub fn value(self) -> Dyadic {
        Dyadic::new(self.num, self.k)
    }
}

impl Dyadic {
    pub const ZERO: Dyadic = Dyadic { num: 0, exp: 0 };
    pub const ONE: Dyadic = Dyadic { num: 1, exp: 0 };
    pub const HALF: Dyadic = Dyadic { num: 1, exp: 1 };

    pub fn new(num: i128, exp: u32) -> Self {
        if num == 0 {
            return Self::ZERO;
        }
        let shift = num.trailing_zeros().min(exp);
        Self {
            num: num >> shift,
            exp: exp - shift,
        }
    }

    pub fn from_int(value: i128) -> Self {
        Self { num: value, exp: 0 }
    }

    pub fn num(self) -> i128 {
        self.num
    }

    pub fn exp(self) -> u32 {
        self.exp
    }

    pub fn is_integer(self) -> bool {
        self.exp == 0
    }

    pub fn to_integer(self) -> Option<i128> {
        self.is_integer().then_some(self.num)
    }

    /// `self * 2^-shift`.
    pub fn div_pow2(self, shift: u32) -> Self {
        Self::new(self.num, self.exp + shift)
    }

    /// `self * 2^shift`.
    pub fn mul_pow2(self, shift: u32) -> Self {
        if shift <= self.exp {
            return Self::new(self.num, self.exp - shift);
        }
        Self::new(lift(self.num, shift - self.exp), 0)
    }

    pub fn mul_int(self, factor: i128) -> Self {
        let num = self
            .num
            .checked_mul(factor)
            .expect("dyadic arithmetic overflow");
        Self::new(num, self.exp)
    }

    pub fn to_rational(self) -> Rational {
        Rational::dyadic(self.num, self.exp)
    }

    /// Numerators of `self` and `other` over the common denominator `2^max(exp)`.
    fn aligned(self, other: Self) -> (i128, i128, u32) {
        let exp = self.exp.max(other.exp);
        (
            lift(self.num, exp - self.exp),
            lift(other.num, exp - other.exp),
            exp,
        )
    }
}

fn lift(num: i128, shift: u32) -> i128 {
    if num == 0 {
        return 0;
    }
    assert!(
        shift < 127 && num.unsigned_abs().leading_zeros() > shift + 1,
        "dyadic arithmetic overflow"
    );
    num << shift
}

impl Add for Dyadic {
    type Output = Dyadic;

    fn add(self, rhs: Dyadic) -> Dyadic {
        let (a, b, exp) = self.aligned(rhs);
        Dyadic::new(a.checked_add(b).expect("dyadic arithmetic overflow"), exp)
    }
}

impl Sub for Dyadic {
    type Output = Dyadic;

    fn sub(self, rhs: Dyadic) -> Dyadic {
        self + (-rhs)
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;

    fn neg(self) -> Dyadic {
        Dyadic {
            num: -self.num,
            exp: self.exp,
        }
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, _) = self.aligned(*other);
        a.cmp(&b)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<i64> for Dyadic {
    fn from(value: i64) -> Self {
        Dyadic::from_int(value.into())
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, 1u128 << self.exp)
        }
    }
}
