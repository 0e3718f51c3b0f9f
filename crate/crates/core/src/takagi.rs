//! Exact evaluation of the Takagi function
//! `tau(x) = sum_{i >= 0} s(2^i x) / 2^i`, with `s` the distance to the
//! nearest integer.
//!
//! At a dyadic `x = p / 2^e` every summand past index `e` vanishes. At any
//! other rational `x = p / q` the residues `2^i p mod q` are eventually
//! periodic, so the tail is a geometric series with a closed form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::dyadic::{Dyadic, DyadicRepr};
use crate::error::{Error, Result};
use crate::rational::{Interval, Rational};

/// Distance from `x` to the nearest integer, in `[0, 1/2]`.
pub fn dist_nearest_integer(x: &Rational) -> Rational {
    let frac = x.fract();
    let other = Rational::one() - frac.clone();
    frac.min(other)
}

/// `tau(x)` for a dyadic `x` in `[0, 1]`.
pub fn takagi_dyadic(x: Dyadic) -> Result<Dyadic> {
    takagi_dyadic_counted(x).map(|(value, _)| value)
}

/// [`takagi_dyadic`] plus the number of nonzero-index summands evaluated,
/// which always equals the exponent of `x`.
pub fn takagi_dyadic_counted(x: Dyadic) -> Result<(Dyadic, u32)> {
    if x < Dyadic::ZERO || x > Dyadic::ONE {
        return Err(Error::OutsideUnitInterval(x.to_string()));
    }
    let exp = x.exp();
    let num = x.num();
    // s(2^i x) / 2^i = min(r, 2^(e-i) - r) / 2^e with r = num mod 2^(e-i)
    let mut acc: i128 = 0;
    for i in 0..exp {
        let modulus = 1i128 << (exp - i);
        let r = num & (modulus - 1);
        acc += r.min(modulus - r);
    }
    Ok((Dyadic::new(acc, exp), exp))
}

/// `tau(x)` for a rational `x` in `[0, 1]`.
///
/// Writing the reduced denominator as `q = 2^a q'` with `q'` odd, the residue
/// orbit `2^i p mod q` has pre-period exactly `a` and is purely periodic from
/// there on, since doubling is invertible modulo `q'`. The period is found by
/// walking until the orbit returns to its first periodic residue.
pub fn takagi_rational(x: &Rational) -> Result<Rational> {
    if !x.in_unit_interval() {
        return Err(Error::OutsideUnitInterval(x.to_string()));
    }
    let (p, q) = (x.numer(), x.denom());
    let orbit = match (p.to_u64(), q.to_u64()) {
        (Some(p), Some(q)) if q < 1 << 62 => orbit_sums_u64(p, q),
        _ => orbit_sums_big(p, q),
    };
    Ok(orbit.evaluate(q))
}

/// Horner accumulations of the pre-periodic and periodic summand numerators.
struct OrbitSums {
    pre: BigInt,
    pre_len: usize,
    cycle: BigInt,
    cycle_len: usize,
}

impl OrbitSums {
    /// With `t_i = min(r_i, q - r_i)`, `pre = sum t_i 2^(mu-1-i)` and
    /// `cycle = sum t_(mu+j) 2^(lambda-1-j)`:
    /// `tau = 2 (pre (2^lambda - 1) + cycle) / (2^mu q (2^lambda - 1))`.
    fn evaluate(self, q: &BigInt) -> Rational {
        let period_den = (BigInt::one() << self.cycle_len) - 1;
        let num = (self.pre * &period_den + self.cycle) << 1usize;
        let den = (q * period_den) << self.pre_len;
        Rational::from_big(BigRational::new(num, den))
    }
}

fn orbit_sums_u64(p: u64, q: u64) -> OrbitSums {
    let pre_len = q.trailing_zeros() as usize;
    let mut r = p % q;
    let mut pre = BigInt::zero();
    for _ in 0..pre_len {
        pre = (pre << 1usize) + r.min(q - r);
        r = (r << 1usize) % q;
    }
    let start = r;
    let mut cycle = BigInt::zero();
    let mut cycle_len = 0;
    loop {
        cycle = (cycle << 1usize) + r.min(q - r);
        cycle_len += 1;
        r = (r << 1usize) % q;
        if r == start {
            break;
        }
    }
    OrbitSums {
        pre,
        pre_len,
        cycle,
        cycle_len,
    }
}

fn orbit_sums_big(p: &BigInt, q: &BigInt) -> OrbitSums {
    let pre_len = q.trailing_zeros().unwrap_or(0) as usize;
    let dist = |r: &BigInt| -> BigInt { r.clone().min(q - r) };
    let mut r = p.mod_floor(q);
    let mut pre = BigInt::zero();
    for _ in 0..pre_len {
        pre = (pre << 1usize) + dist(&r);
        r = (r << 1usize).mod_floor(q);
    }
    let start = r.clone();
    let mut cycle = BigInt::zero();
    let mut cycle_len = 0;
    loop {
        cycle = (cycle << 1usize) + dist(&r);
        cycle_len += 1;
        r = (r << 1usize).mod_floor(q);
        if r == start {
            break;
        }
    }
    OrbitSums {
        pre,
        pre_len,
        cycle,
        cycle_len,
    }
}

/// Encloses `tau(x)` between the first `terms` partial sum and that sum plus
/// `2^(1 - terms)`.
pub fn takagi_enclosure(x: &Rational, terms: u32) -> Result<Interval> {
    if terms == 0 {
        return Err(Error::InvalidParameter(
            "enclosure needs at least one term".into(),
        ));
    }
    if !x.in_unit_interval() {
        return Err(Error::OutsideUnitInterval(x.to_string()));
    }
    let q = x.denom();
    let mut r = x.numer().mod_floor(q);
    let mut horner = BigInt::zero();
    for _ in 0..terms {
        horner = (horner << 1usize) + r.clone().min(q - &r);
        r = (r << 1usize).mod_floor(q);
    }
    let partial = Rational::from_big(BigRational::new(horner, q << (terms - 1) as usize));
    let hi = partial.clone() + Rational::pow2(1 - i64::from(terms));
    Ok(Interval::new(partial, hi).expect("enclosure width is positive"))
}

/// Functional equations satisfied by `tau` on `[0, 1]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FunctionalEquation {
    /// `tau((x+1) 2^-m) = 2^-m (m (x+1) - 2x + tau(x))` for `m >= 1`.
    Scaling { m: u32 },
    /// `tau(x + 1/2) = 1/2 - 2x + tau(x)` for `x <= 1/2`.
    HalfShift,
    /// `tau(x) = tau(1 - x)`.
    Reflection,
    /// `tau(x/2) = x/2 + tau(x)/2`.
    Halving,
}

impl FunctionalEquation {
    /// Checks the equation at a dyadic point. `None` when `x` lies outside
    /// the equation's domain.
    pub fn check_dyadic(self, x: Dyadic) -> Result<Option<bool>> {
        let tau = |v: Dyadic| takagi_dyadic(v);
        let tx = tau(x)?;
        let holds = match self {
            Self::Scaling { m } => {
                if m == 0 {
                    return Ok(None);
                }
                let lhs = tau((x + Dyadic::ONE).div_pow2(m))?;
                let rhs = ((x + Dyadic::ONE).mul_int(m.into()) - x.mul_int(2) + tx).div_pow2(m);
                lhs == rhs
            }
            Self::HalfShift => {
                if x > Dyadic::HALF {
                    return Ok(None);
                }
                tau(x + Dyadic::HALF)? == Dyadic::HALF - x.mul_int(2) + tx
            }
            Self::Reflection => tau(Dyadic::ONE - x)? == tx,
            Self::Halving => tau(x.div_pow2(1))? == x.div_pow2(1) + tx.div_pow2(1),
        };
        Ok(Some(holds))
    }

    /// Checks the equation at a rational point through [`takagi_rational`].
    pub fn check_rational(self, x: &Rational) -> Result<Option<bool>> {
        let one = Rational::one();
        let half = Rational::pow2(-1);
        let tx = takagi_rational(x)?;
        let holds = match self {
            Self::Scaling { m } => {
                if m == 0 {
                    return Ok(None);
                }
                let scale = Rational::pow2(-i64::from(m));
                let shifted = x + &one;
                let lhs = takagi_rational(&(&shifted * &scale))?;
                let rhs = (shifted * i64::from(m) - x.clone() * 2 + tx) * scale;
                lhs == rhs
            }
            Self::HalfShift => {
                if x > &half {
                    return Ok(None);
                }
                takagi_rational(&(x + &half))? == half - x.clone() * 2 + tx
            }
            Self::Reflection => takagi_rational(&(&one - x))? == tx,
            Self::Halving => {
                let h = x * &half;
                takagi_rational(&h)? == h + tx * &half
            }
        };
        Ok(Some(holds))
    }
}

/// Conjunction of every functional equation applicable at `x`, with the
/// scaling equation taken at `m`.
pub fn check_functional_equations(x: Dyadic, m: u32) -> Result<bool> {
    if m == 0 {
        return Err(Error::InvalidParameter(
            "scaling exponent m must be positive".into(),
        ));
    }
    for eq in [
        FunctionalEquation::Scaling { m },
        FunctionalEquation::HalfShift,
        FunctionalEquation::Reflection,
        FunctionalEquation::Halving,
    ] {
        if eq.check_dyadic(x)? == Some(false) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `tau(n/2^k) <= (n/2^k + 1)/2 - 2^-(k+1)` for the representation
/// exactly as written.
pub fn tau_upper_bound_check(x: DyadicRepr) -> Result<bool> {
    let v = x.value();
    let bound = (v + Dyadic::ONE).div_pow2(1) - Dyadic::new(1, x.k + 1);
    Ok(takagi_dyadic(v)? <= bound)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn d(n: i128, e: u32) -> Dyadic {
        Dyadic::new(n, e)
    }

    /// Truncated series evaluated term by term with rational arithmetic.
    fn series(x: &Rational, terms: u32) -> Rational {
        let mut acc = Rational::zero();
        let mut y = x.clone();
        let mut w = Rational::one();
        for _ in 0..terms {
            acc = acc + dist_nearest_integer(&y) * &w;
            y = y * 2;
            w = w * &Rational::pow2(-1);
        }
        acc
    }

    #[test]
    fn distance_examples() {
        assert_eq!(dist_nearest_integer(&q(1, 2)), q(1, 2));
        assert_eq!(dist_nearest_integer(&q(7, 4)), q(1, 4));
        assert_eq!(dist_nearest_integer(&q(1, 3)), q(1, 3));
        assert_eq!(dist_nearest_integer(&q(-1, 3)), q(1, 3));
        assert_eq!(dist_nearest_integer(&q(5, 1)), Rational::zero());
    }

    #[test]
    fn dyadic_examples() {
        assert_eq!(takagi_dyadic(Dyadic::ZERO), Ok(Dyadic::ZERO));
        assert_eq!(takagi_dyadic(Dyadic::ONE), Ok(Dyadic::ZERO));
        for (x, expected) in [(d(1, 1), d(1, 1)), (d(1, 2), d(1, 1)), (d(3, 2), d(1, 1))] {
            assert_eq!(series(&x.to_rational(), x.exp()), expected.to_rational());
            assert_eq!(takagi_dyadic(x), Ok(expected));
        }
    }

    #[test]
    fn dyadic_domain() {
        assert!(takagi_dyadic(d(3, 1)).is_err());
        assert!(takagi_dyadic(d(-1, 3)).is_err());
    }

    #[test]
    fn dyadic_matches_series_and_counts_summands() {
        for e in 0..=10u32 {
            for n in 0..=(1i128 << e) {
                let x = d(n, e);
                let (value, count) = takagi_dyadic_counted(x).unwrap();
                assert_eq!(count, x.exp());
                assert_eq!(value.to_rational(), series(&x.to_rational(), x.exp()));
                assert!(value.exp() <= x.exp());
            }
        }
    }

    #[test]
    fn rational_examples() {
        // the orbit of 1/3 and 2/3 alternates with s = 1/3, so tau = (1/3) * 2
        let two_thirds = q(2, 3);
        assert_eq!(takagi_rational(&two_thirds), Ok(two_thirds.clone()));
        assert_eq!(takagi_rational(&q(1, 3)), Ok(two_thirds.clone()));
        let tail = Rational::pow2(-59);
        let approx = series(&q(1, 3), 60);
        assert!(approx <= two_thirds && two_thirds <= approx + tail);
    }

    #[test]
    fn rational_agrees_with_dyadic() {
        for e in 0..=9u32 {
            for n in 0..=(1i128 << e) {
                let x = d(n, e);
                assert_eq!(
                    takagi_rational(&x.to_rational()).unwrap(),
                    takagi_dyadic(x).unwrap().to_rational()
                );
            }
        }
    }

    #[test]
    fn rational_within_series_bounds() {
        for den in 1..=40i64 {
            for num in 0..=den {
                let x = q(num, den);
                let exact = takagi_rational(&x).unwrap();
                let partial = series(&x, 40);
                assert!(partial <= exact);
                assert!(exact <= partial + Rational::pow2(-40));
            }
        }
    }

    #[test]
    fn rational_big_denominator_path() {
        // denominator beyond u64 goes through the BigInt orbit
        let big = BigInt::from(3) << 70usize;
        let x = Rational::new(BigInt::one(), big).unwrap();
        let small = x.clone() * &Rational::pow2(70);
        let mut expected = takagi_rational(&small).unwrap();
        // tau(y/2) = y/2 + tau(y)/2 applied 70 times
        let mut y = small;
        for _ in 0..70 {
            y = y * &Rational::pow2(-1);
            expected = y.clone() + expected * &Rational::pow2(-1);
        }
        assert_eq!(takagi_rational(&x), Ok(expected));
    }

    #[test]
    fn rational_domain() {
        assert!(takagi_rational(&q(4, 3)).is_err());
        assert!(takagi_rational(&q(-1, 3)).is_err());
    }

    #[test]
    fn enclosure_examples() {
        let half = q(1, 2);
        let i = takagi_enclosure(&half, 1).unwrap();
        assert!(i.contains(&half));

        let two_thirds = q(2, 3);
        let i = takagi_enclosure(&two_thirds, 20).unwrap();
        assert_eq!(i.width(), Rational::pow2(-19));
        assert!(i.contains(&two_thirds));

        let i = takagi_enclosure(&q(1, 4), 2).unwrap();
        assert_eq!(i.lo(), &half);
        assert_eq!(i.hi(), &Rational::one());

        assert!(takagi_enclosure(&half, 0).is_err());
        assert!(takagi_enclosure(&q(3, 2), 4).is_err());
    }

    #[test]
    fn functional_equation_examples() {
        assert_eq!(check_functional_equations(Dyadic::ZERO, 1), Ok(true));
        assert_eq!(takagi_dyadic(d(3, 3)), Ok(d(5, 3)));
        assert_eq!(check_functional_equations(Dyadic::HALF, 2), Ok(true));
        assert!(check_functional_equations(Dyadic::HALF, 0).is_err());
    }

    #[test]
    fn half_shift_domain() {
        assert_eq!(
            FunctionalEquation::HalfShift.check_dyadic(d(3, 2)),
            Ok(None)
        );
        assert_eq!(
            FunctionalEquation::HalfShift.check_rational(&q(2, 3)),
            Ok(None)
        );
        assert_eq!(
            FunctionalEquation::HalfShift.check_rational(&q(1, 3)),
            Ok(Some(true))
        );
    }

    #[test]
    fn upper_bound_examples() {
        assert_eq!(tau_upper_bound_check(DyadicRepr::new(1, 1)), Ok(true));
        assert_eq!(tau_upper_bound_check(DyadicRepr::new(1, 2)), Ok(true));
        // equality at 1/2 and 1/4
        assert_eq!(takagi_dyadic(d(1, 2)), Ok(d(5, 3) - d(1, 3)));
        // the written exponent matters: 2/4 gives a weaker bound than 1/2
        assert_eq!(tau_upper_bound_check(DyadicRepr::new(2, 2)), Ok(true));
    }

    #[test]
    fn range_on_small_denominators() {
        let max = q(2, 3);
        for den in 1..=64i64 {
            for num in 0..=den {
                let t = takagi_rational(&q(num, den)).unwrap();
                assert!(!t.is_negative() && t <= max);
            }
        }
    }
}
