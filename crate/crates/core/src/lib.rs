//! Exact computation of the cumulated deficient binary digit sum (OEIS A268289)
//! together with exact evaluation of the Takagi (blancmange) function.
//!
//! The sequence `A(n)` is the running total, over `1..=n`, of the number of
//! `1` digits minus the number of `0` digits in each binary expansion. Five
//! independent routes compute it:
//!
//! * [`cumulative_naive`] sums the per-integer deficits directly,
//! * [`cardinality_s`] counts a congruence-defined set,
//! * [`compute_via_recurrence`] strips leading bits in `O(popcount(n))` steps,
//! * [`compute_via_lemma2`] and [`compute_via_takagi`] use closed forms in
//!   the Takagi function evaluated exactly on dyadic rationals.
//!
//! The [`identities`] module carries a catalog of affine index/value
//! identities and bounds, and sweeps each one exhaustively with exact
//! arithmetic.

mod dyadic;
mod error;
pub mod identities;
pub mod par;
mod rational;
mod sequence;
mod takagi;

pub use dyadic::{Dyadic, DyadicRepr};
pub use error::{Error, Result};
pub use rational::{Interval, Rational};
pub use sequence::{
    cardinality_s, compute_via_lemma2, compute_via_recurrence, compute_via_recurrence_counted,
    compute_via_takagi, cumulative_naive, deficient_digit_sum, floor_log2, s_membership, FloorLog,
    SeqIndex, SeqValue,
};
pub use takagi::{
    check_functional_equations, dist_nearest_integer, takagi_dyadic, takagi_dyadic_counted,
    takagi_enclosure, takagi_rational, tau_upper_bound_check, FunctionalEquation,
};
