//! Catalog of identities and bounds on `A(n)` and `tau`, swept exhaustively.
//!
//! Every [`IdentityDescriptor`] names a parameter space (powers of two with a
//! window `0 <= n <= 2^k`, an extra iteration count `m`, or a plain index
//! range) and a relation between exact values. [`verify`] enumerates every
//! parameter tuple inside the requested [`Limits`], evaluates both sides with
//! exact arithmetic and records each violation.

mod catalog;
mod special;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::par::{self, Execution};
use crate::rational::Rational;

pub use catalog::{catalog, lookup};
pub use special::{
    a026644_recurrence, half_value_indices, interval_minimum, lichtenberg, power4_fixed_points,
    FixedPoint, IntervalMinimum,
};

/// One parameter tuple. Unused parameters are `None`.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub struct Params {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
}

impl Params {
    fn k(&self) -> u32 {
        self.k.expect("parameter k")
    }

    fn m(&self) -> u32 {
        self.m.expect("parameter m")
    }

    fn n(&self) -> u64 {
        self.n.expect("parameter n")
    }
}

/// Shape of the swept parameter set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParamSpace {
    /// `0 <= k <= kmax`, `0 <= n <= 2^k`.
    Window,
    /// `1 <= k <= kmax`, `1 <= n < 2^k`.
    StrictWindow,
    /// `0 <= k <= kmax`, `0 <= m <= mmax`, `0 <= n <= 2^k`.
    WindowIterated,
    /// `0 <= n <= 2^kmax`.
    Indices,
}

/// Sweep bounds. Index-range spaces read `kmax` as `n <= 2^kmax`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    pub kmax: u32,
    pub mmax: u32,
}

impl Limits {
    pub const KMAX_CAP: u32 = 60;
    pub const MMAX_CAP: u32 = 30;

    pub fn new(kmax: u32, mmax: u32) -> Self {
        Self { kmax, mmax }
    }

    fn check(self) -> Result<()> {
        if self.kmax > Self::KMAX_CAP {
            return Err(Error::ParameterBound {
                name: "kmax",
                value: self.kmax.into(),
                max: Self::KMAX_CAP.into(),
            });
        }
        if self.mmax > Self::MMAX_CAP {
            return Err(Error::ParameterBound {
                name: "mmax",
                value: self.mmax.into(),
                max: Self::MMAX_CAP.into(),
            });
        }
        Ok(())
    }
}

/// Default sweep sizes.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Profile {
    /// `k <= 8` everywhere.
    Ci,
    #[default]
    Full,
}

impl Profile {
    pub const ENV_VAR: &'static str = "DEFICIT_TAKAGI_PROFILE";

    pub fn parse(value: &str) -> Option<Self> {
        match value {
            "ci" => Some(Self::Ci),
            "full" => Some(Self::Full),
            _ => None,
        }
    }

    /// Reads [`Profile::ENV_VAR`]; unset means [`Profile::Full`].
    pub fn from_env() -> Result<Self> {
        match std::env::var(Self::ENV_VAR) {
            Ok(v) => Self::parse(&v).ok_or_else(|| {
                Error::InvalidParameter(format!("{}={v} (expected ci or full)", Self::ENV_VAR))
            }),
            Err(_) => Ok(Self::Full),
        }
    }
}

/// How `A(n)` is evaluated inside a relation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Evaluator {
    Recurrence,
    Takagi,
    Cardinality,
}

impl Evaluator {
    pub fn eval(self, index: i128) -> Result<Rational> {
        use crate::sequence::{
            cardinality_s, compute_via_recurrence, compute_via_takagi, SeqIndex,
        };
        let n = SeqIndex::try_from(index)?;
        let v = match self {
            Self::Recurrence => compute_via_recurrence(n),
            Self::Takagi => compute_via_takagi(n),
            Self::Cardinality => cardinality_s(n),
        };
        Ok(Rational::from(v))
    }
}

pub type IndexFn = fn(&Params) -> i128;
pub type SidesFn = fn(&Params) -> Result<Option<Vec<Rational>>>;

/// Relation checked at each parameter tuple.
#[derive(Clone, Copy)]
pub enum Relation {
    /// `A(lhs) = offset + A(rhs)`.
    Affine {
        lhs: IndexFn,
        offset: IndexFn,
        rhs: IndexFn,
        evaluator: Evaluator,
    },
    /// All returned values equal. `None` skips the tuple.
    Equal(SidesFn),
    /// Returned values non-decreasing. `None` skips the tuple.
    Ascending(SidesFn),
}

/// A catalog entry.
#[derive(Clone)]
pub struct IdentityDescriptor {
    pub id: &'static str,
    pub statement: &'static str,
    pub space: ParamSpace,
    /// Limits used by [`Profile::Full`].
    pub defaults: Limits,
    pub relation: Relation,
    /// Added to the last side of an equality, subtracted from the last side
    /// of an inequality chain. Zero for genuine entries.
    pub perturbation: i64,
}

impl std::fmt::Debug for IdentityDescriptor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IdentityDescriptor")
            .field("id", &self.id)
            .field("statement", &self.statement)
            .field("space", &self.space)
            .field("defaults", &self.defaults)
            .field("perturbation", &self.perturbation)
            .finish()
    }
}

impl IdentityDescriptor {
    /// Copy of this entry whose right-hand side is off by one, for negative
    /// controls.
    pub fn corrupted(&self) -> Self {
        Self {
            perturbation: self.perturbation + 1,
            ..self.clone()
        }
    }

    pub fn limits(&self, profile: Profile) -> Limits {
        match profile {
            Profile::Full => self.defaults,
            Profile::Ci => Limits::new(self.defaults.kmax.min(8), self.defaults.mmax),
        }
    }

    fn params(&self, limits: Limits) -> Vec<Params> {
        let mut out = Vec::new();
        match self.space {
            ParamSpace::Window => {
                for k in 0..=limits.kmax {
                    out.extend((0..=1u64 << k).map(|n| Params {
                        k: Some(k),
                        m: None,
                        n: Some(n),
                    }));
                }
            }
            ParamSpace::StrictWindow => {
                for k in 1..=limits.kmax {
                    out.extend((1..1u64 << k).map(|n| Params {
                        k: Some(k),
                        m: None,
                        n: Some(n),
                    }));
                }
            }
            ParamSpace::WindowIterated => {
                for k in 0..=limits.kmax {
                    for m in 0..=limits.mmax {
                        out.extend((0..=1u64 << k).map(|n| Params {
                            k: Some(k),
                            m: Some(m),
                            n: Some(n),
                        }));
                    }
                }
            }
            ParamSpace::Indices => {
                out.extend((0..=1u64 << limits.kmax).map(|n| Params {
                    k: None,
                    m: None,
                    n: Some(n),
                }));
            }
        }
        out
    }

    fn ranges(&self, limits: Limits) -> Vec<ParamRange> {
        let r = |name: &str, lo: &str, hi: String| ParamRange {
            name: name.to_string(),
            lo: lo.to_string(),
            hi,
        };
        match self.space {
            ParamSpace::Window => vec![
                r("k", "0", limits.kmax.to_string()),
                r("n", "0", "2^k".into()),
            ],
            ParamSpace::StrictWindow => {
                vec![
                    r("k", "1", limits.kmax.to_string()),
                    r("n", "1", "2^k-1".into()),
                ]
            }
            ParamSpace::WindowIterated => vec![
                r("k", "0", limits.kmax.to_string()),
                r("m", "0", limits.mmax.to_string()),
                r("n", "0", "2^k".into()),
            ],
            ParamSpace::Indices => vec![r("n", "0", format!("2^{}", limits.kmax))],
        }
    }

    fn is_boundary(&self, p: &Params, limits: Limits) -> bool {
        let n = p.n();
        match self.space {
            ParamSpace::Window | ParamSpace::WindowIterated => n == 0 || n == 1 << p.k(),
            ParamSpace::StrictWindow => n == 1 || n == (1 << p.k()) - 1,
            ParamSpace::Indices => n == 0 || n == 1 << limits.kmax,
        }
    }

    /// Both sides at `p`, or `None` when `p` lies outside the relation's domain.
    fn sides(&self, p: &Params) -> Result<Option<(Vec<Rational>, bool)>> {
        let (mut sides, ascending) = match self.relation {
            Relation::Affine {
                lhs,
                offset,
                rhs,
                evaluator,
            } => {
                let left = evaluator.eval(lhs(p))?;
                let right = Rational::from(offset(p)) + evaluator.eval(rhs(p))?;
                (vec![left, right], false)
            }
            Relation::Equal(f) => match f(p)? {
                Some(v) => (v, false),
                None => return Ok(None),
            },
            Relation::Ascending(f) => match f(p)? {
                Some(v) => (v, true),
                None => return Ok(None),
            },
        };
        if self.perturbation != 0 {
            let last = sides.pop().expect("relation has sides");
            let shift = if ascending {
                -self.perturbation
            } else {
                self.perturbation
            };
            sides.push(last + shift);
        }
        Ok(Some((sides, ascending)))
    }
}

/// Inclusive range of one swept parameter; `hi` may depend on earlier ones.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamRange {
    pub name: String,
    pub lo: String,
    pub hi: String,
}

/// A violating tuple together with the two adjacent sides that disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub params: Params,
    pub lhs: String,
    pub rhs: String,
    /// The tuple sits at an endpoint of its range.
    pub boundary: bool,
}

/// Result of sweeping one descriptor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub id: String,
    pub ranges: Vec<ParamRange>,
    pub cases: u64,
    /// True iff at least one case was checked and none failed.
    pub pass: bool,
    pub counterexamples: Vec<Counterexample>,
}

impl IdentityReport {
    pub fn is_vacuous(&self) -> bool {
        self.cases == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// [`verify_with`] on the default execution mode.
pub fn verify(desc: &IdentityDescriptor, limits: Limits) -> Result<IdentityReport> {
    verify_with(desc, limits, Execution::default())
}

/// Sweeps `desc` over every tuple within `limits`.
///
/// Fails with an error, rather than a counterexample, when an index leaves
/// the supported range.
pub fn verify_with(
    desc: &IdentityDescriptor,
    limits: Limits,
    exec: Execution,
) -> Result<IdentityReport> {
    limits.check()?;
    let params = desc.params(limits);
    let outcomes = par::map(
        exec,
        &params,
        |p| -> Result<Option<Option<Counterexample>>> {
            let Some((sides, ascending)) = desc.sides(p)? else {
                return Ok(None);
            };
            let bad = sides
                .windows(2)
                .find(|w| if ascending { w[0] > w[1] } else { w[0] != w[1] });
            Ok(Some(bad.map(|w| Counterexample {
                params: *p,
                lhs: w[0].to_string(),
                rhs: w[1].to_string(),
                boundary: desc.is_boundary(p, limits),
            })))
        },
    );
    let mut cases = 0u64;
    let mut counterexamples = Vec::new();
    for outcome in outcomes {
        if let Some(checked) = outcome? {
            cases += 1;
            counterexamples.extend(checked);
        }
    }
    counterexamples.sort_by_key(|c| c.params);
    Ok(IdentityReport {
        id: desc.id.to_string(),
        ranges: desc.ranges(limits),
        cases,
        pass: cases > 0 && counterexamples.is_empty(),
        counterexamples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn window_case_counts() {
        let d = lookup("oeis6").unwrap();
        let report = verify(&d, Limits::new(10, 0)).unwrap();
        let expected: u64 = (0..=10).map(|k| (1u64 << k) + 1).sum();
        assert_eq!(report.cases, expected);
        assert!(report.pass);
    }

    #[test]
    fn corrupted_entry_fails_at_smallest_tuple() {
        let d = lookup("oeis6").unwrap().corrupted();
        let report = verify(&d, Limits::new(4, 0)).unwrap();
        assert!(!report.pass);
        assert_eq!(report.counterexamples.len() as u64, report.cases);
        let first = &report.counterexamples[0];
        assert_eq!(
            first.params,
            Params {
                k: Some(0),
                m: None,
                n: Some(0)
            }
        );
        assert!(first.boundary);
    }

    #[test]
    fn corrupted_inequality_fails() {
        for id in ["encadrement", "tau_major", "minor", "lemma_half"] {
            let d = lookup(id).unwrap().corrupted();
            let report = verify(&d, d.limits(Profile::Ci)).unwrap();
            assert!(!report.counterexamples.is_empty(), "{id}");
        }
    }

    #[test]
    fn empty_sweep_is_flagged() {
        let d = lookup("lemma1").unwrap();
        let report = verify(&d, Limits::new(0, 0)).unwrap();
        assert_eq!(report.cases, 0);
        assert!(report.is_vacuous());
        assert!(!report.pass);
    }

    #[test]
    fn limits_are_capped() {
        let d = lookup("oeis6").unwrap();
        assert!(matches!(
            verify(&d, Limits::new(61, 0)),
            Err(Error::ParameterBound { name: "kmax", .. })
        ));
        assert!(matches!(
            verify(&d, Limits::new(1, 31)),
            Err(Error::ParameterBound { name: "mmax", .. })
        ));
    }

    #[test]
    fn index_overflow_is_an_error() {
        // 2^(k+2m+1) with k = 2, m = 29 is far beyond 2^60
        let d = lookup("oeis10sum").unwrap();
        assert!(matches!(
            verify(&d, Limits::new(2, 29)),
            Err(Error::IndexTooLarge(_))
        ));
    }

    #[test]
    fn sequential_and_parallel_reports_match() {
        let d = lookup("oeis1").unwrap().corrupted();
        let limits = Limits::new(6, 0);
        assert_eq!(
            verify_with(&d, limits, Execution::Sequential).unwrap(),
            verify_with(&d, limits, Execution::Parallel).unwrap()
        );
    }

    #[test]
    fn json_round_trip() {
        let d = lookup("oeis14sum").unwrap().corrupted();
        let report = verify(&d, Limits::new(2, 1)).unwrap();
        let text = report.to_json();
        let parsed: IdentityReport = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed, report);
        assert_eq!(parsed.to_json(), text);
        let keys: Vec<_> = [
            "\"id\"",
            "\"ranges\"",
            "\"cases\"",
            "\"pass\"",
            "\"counterexamples\"",
        ]
        .iter()
        .map(|k| text.find(k).unwrap())
        .collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn profile_parsing() {
        assert_eq!(Profile::parse("ci"), Some(Profile::Ci));
        assert_eq!(Profile::parse("full"), Some(Profile::Full));
        assert_eq!(Profile::parse("fast"), None);
        let d = lookup("encadrement").unwrap();
        assert_eq!(d.limits(Profile::Ci).kmax, 8);
        assert_eq!(d.limits(Profile::Full).kmax, 16);
    }
}
