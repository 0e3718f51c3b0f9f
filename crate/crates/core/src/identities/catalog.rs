use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::sequence::floor_log2;
use crate::takagi::{takagi_dyadic, takagi_rational};

use super::{Evaluator, IdentityDescriptor, Limits, ParamSpace, Params, Relation};

fn p2(e: u32) -> i128 {
    1i128 << e
}

fn n(p: &Params) -> i128 {
    p.n().into()
}

fn a(index: i128) -> Result<Rational> {
    Evaluator::Recurrence.eval(index)
}

fn tau_of(num: i128, exp: u32) -> Result<Rational> {
    Ok(takagi_dyadic(Dyadic::new(num, exp))?.to_rational())
}

fn q(num: i128, den: i128) -> Rational {
    Rational::new(num, den).expect("nonzero denominator")
}

/// `(4^m - 1) / 3`, exact.
fn third_of_4m_minus_1(m: u32) -> i128 {
    let v = p2(2 * m) - 1;
    debug_assert_eq!(v % 3, 0);
    v / 3
}

fn affine(
    lhs: fn(&Params) -> i128,
    offset: fn(&Params) -> i128,
    rhs: fn(&Params) -> i128,
) -> Relation {
    Relation::Affine {
        lhs,
        offset,
        rhs,
        evaluator: Evaluator::Recurrence,
    }
}

fn entry(
    id: &'static str,
    statement: &'static str,
    space: ParamSpace,
    defaults: Limits,
    relation: Relation,
) -> IdentityDescriptor {
    IdentityDescriptor {
        id,
        statement,
        space,
        defaults,
        relation,
        perturbation: 0,
    }
}

const WIDE: Limits = Limits { kmax: 12, mmax: 0 };
const ITERATED: Limits = Limits { kmax: 8, mmax: 6 };

fn leading_bit_step(p: &Params) -> i128 {
    let (k, n) = (p.k(), n(p));
    let j = floor_log2(p.n());
    (n + 1) * (i128::from(j) - i128::from(k) + 2) + p2(k) - p2(j + 1)
}

fn digit0(p: &Params) -> Result<Option<Vec<Rational>>> {
    let n = p.n();
    if n < 2 {
        return Ok(None);
    }
    let k = floor_log2(n);
    let nn = i128::from(n);
    // n < 3 * 2^(k-1)
    if 2 * nn >= 3 * p2(k) {
        return Ok(None);
    }
    Ok(Some(vec![
        a(nn + p2(k - 1))?,
        a(nn)? + Rational::from(2 * (nn + 1) - p2(k + 1)),
    ]))
}

fn majorlink2(p: &Params) -> Result<Option<Vec<Rational>>> {
    let (k, n) = (p.k(), n(p));
    let xi = q(n, p2(k));
    let rhs = Rational::one() + xi - (a(n + p2(k) - 1)? + 1) / Rational::from(p2(k));
    Ok(Some(vec![tau_of(n, k)?, rhs]))
}

fn majorlink(p: &Params) -> Result<Option<Vec<Rational>>> {
    let (k, n) = (p.k(), n(p));
    let xi = q(n, p2(k));
    let rhs =
        Rational::from(2i64) + xi * 2 - (a(p2(k + 1) + p2(k) + n - 1)? + 1) / Rational::from(p2(k));
    Ok(Some(vec![tau_of(n, k)?, rhs]))
}

fn initial_identity(p: &Params) -> Result<Option<Vec<Rational>>> {
    let n = n(p);
    let m = floor_log2(p.n() + 1);
    // xi = (n+1) 2^-m - 1 = (n + 1 - 2^m) / 2^m
    let tau = tau_of(n + 1 - p2(m), m)?;
    let rhs = Rational::from(2 * n + 1) - tau * &Rational::from(p2(m));
    Ok(Some(vec![a(n + p2(m + 1))?, rhs]))
}

fn tau_scale_1(p: &Params) -> Result<Option<Vec<Rational>>> {
    let (k, m, n) = (p.k(), p.m(), n(p));
    let xi = q(n, p2(k));
    let four_m = Rational::from(p2(2 * m));
    let arg = q(1, 6) + (xi.clone() * 3 - 1) / (four_m.clone() * 6);
    let one = Rational::one();
    let lhs = one.clone() - takagi_rational(&arg)? * 2;
    let mid = (one.clone() - tau_of(n, k + 1)? * 2) / four_m.clone();
    let rhs = (one - xi - tau_of(n, k)?) / four_m;
    Ok(Some(vec![lhs, mid, rhs]))
}

fn tau_scale_2(p: &Params) -> Result<Option<Vec<Rational>>> {
    let (k, m, n) = (p.k(), p.m(), n(p));
    let xi = q(n, p2(k));
    let four_m = Rational::from(p2(2 * m));
    let two_thirds = q(2, 3);
    let arg = two_thirds.clone() + (q(1, 3) - xi) / four_m.clone();
    let lhs = two_thirds.clone() - takagi_rational(&arg)?;
    let rhs = (two_thirds - tau_of(p2(k) - n, k)?) / four_m;
    Ok(Some(vec![lhs, rhs]))
}

fn encadrement(p: &Params) -> Result<Option<Vec<Rational>>> {
    let n = n(p);
    Ok(Some(vec![q(n, 2), a(n)?, Rational::from(n)]))
}

fn tau_major(p: &Params) -> Result<Option<Vec<Rational>>> {
    let (k, n) = (p.k(), n(p));
    let xi = q(n, p2(k));
    let bound = (xi + 1) / Rational::from(2i64) - q(1, p2(k + 1));
    Ok(Some(vec![tau_of(n, k)?, bound]))
}

fn minor(p: &Params) -> Result<Option<Vec<Rational>>> {
    let n = p.n();
    if n == 0 {
        return Ok(None);
    }
    let k = floor_log2(n);
    let nn = i128::from(n);
    // n >= 3 * 2^(k-1)
    if 2 * nn < 3 * p2(k) {
        return Ok(None);
    }
    let bound = Rational::one() + q(3 * (nn - p2(k)), 2);
    Ok(Some(vec![bound, a(nn)?]))
}

fn lemma_half(p: &Params) -> Result<Option<Vec<Rational>>> {
    let n = p.n();
    // n = 2 is a genuine exception: A(2) = 1 but 2 < 3 * 2^0 - 1 fails
    if n < 4 {
        return Ok(None);
    }
    let nn = i128::from(n);
    if a(nn)? * 2 != Rational::from(nn) {
        return Ok(None);
    }
    let k = floor_log2(n);
    // n < 3 * 2^(k-1) - 1 over the integers
    Ok(Some(vec![
        Rational::from(nn),
        Rational::from(3 * p2(k - 1) - 2),
    ]))
}

/// Every entry, in a fixed order.
pub fn catalog() -> Vec<IdentityDescriptor> {
    use ParamSpace::*;
    vec![
        entry(
            "lemma1",
            "A(n+2^k) = A(n) + (n+1)(floor(log2 n)-k+2) + 2^k - 2^(floor(log2 n)+1), 1 <= n < 2^k",
            StrictWindow,
            WIDE,
            Relation::Affine {
                lhs: |p| n(p) + p2(p.k()),
                offset: leading_bit_step,
                rhs: n,
                evaluator: Evaluator::Takagi,
            },
        ),
        entry(
            "lemma3",
            "|S(n+2^k)| = |S(n)| + (n+1)(floor(log2 n)-k+2) + 2^k - 2^(floor(log2 n)+1), 1 <= n < 2^k",
            StrictWindow,
            WIDE,
            Relation::Affine {
                lhs: |p| n(p) + p2(p.k()),
                offset: leading_bit_step,
                rhs: n,
                evaluator: Evaluator::Cardinality,
            },
        ),
        entry(
            "digit0",
            "A(n+2^(j-1)) = A(n) + 2(n+1) - 2^(j+1), j = floor(log2 n), 2 <= n < 3*2^(j-1)",
            Indices,
            Limits::new(14, 0),
            Relation::Equal(digit0),
        ),
        entry(
            "majorlink2",
            "tau(n/2^k) = 1 + n/2^k - (1 + A(n+2^k-1))/2^k",
            Window,
            WIDE,
            Relation::Equal(majorlink2),
        ),
        entry(
            "initial_identity",
            "A(n+2^(m+1)) = 2n - 2^m tau((n+1)/2^m - 1) + 1, m = floor(log2(n+1))",
            Indices,
            WIDE,
            Relation::Equal(initial_identity),
        ),
        entry(
            "majorlink",
            "tau(n/2^k) = 2 + 2n/2^k - (1 + A(2^(k+1)+2^k+n-1))/2^k",
            Window,
            WIDE,
            Relation::Equal(majorlink),
        ),
        entry(
            "oeis1",
            "A(2^(k+2)-n-1) = 2^(k+1) - 4n + A(2^(k+1)+2^k+n-1)",
            Window,
            WIDE,
            affine(
                |p| p2(p.k() + 2) - n(p) - 1,
                |p| p2(p.k() + 1) - 4 * n(p),
                |p| p2(p.k() + 1) + p2(p.k()) + n(p) - 1,
            ),
        ),
        entry(
            "oeis2",
            "A(2^(k+2)+2^(k+1)+n-1) = 2^(k+1) - n + A(2^(k+1)+2^k+n-1)",
            Window,
            WIDE,
            affine(
                |p| p2(p.k() + 2) + p2(p.k() + 1) + n(p) - 1,
                |p| p2(p.k() + 1) - n(p),
                |p| p2(p.k() + 1) + p2(p.k()) + n(p) - 1,
            ),
        ),
        entry(
            "oeis4",
            "A(2^(k+1)-n-1) = 2^k - 2n + A(2^k+n-1)",
            Window,
            WIDE,
            affine(
                |p| p2(p.k() + 1) - n(p) - 1,
                |p| p2(p.k()) - 2 * n(p),
                |p| p2(p.k()) + n(p) - 1,
            ),
        ),
        entry(
            "oeis5",
            "A(2^(k+1)+n-1) = 2^k - n + A(2^k+n-1)",
            Window,
            WIDE,
            affine(
                |p| p2(p.k() + 1) + n(p) - 1,
                |p| p2(p.k()) - n(p),
                |p| p2(p.k()) + n(p) - 1,
            ),
        ),
        entry(
            "oeis6",
            "A(2^(k+1)+n-1) = n + A(2^(k+1)-n-1)",
            Window,
            WIDE,
            affine(|p| p2(p.k() + 1) + n(p) - 1, n, |p| p2(p.k() + 1) - n(p) - 1),
        ),
        entry(
            "oeis7",
            "A(2^(k+1)+2^k+n-1) = 2n + A(2^(k+1)+n-1)",
            Window,
            WIDE,
            affine(
                |p| p2(p.k() + 1) + p2(p.k()) + n(p) - 1,
                |p| 2 * n(p),
                |p| p2(p.k() + 1) + n(p) - 1,
            ),
        ),
        entry(
            "oeis3",
            "A(2^(k+1)+2^k+n-1) = 3n + A(2^(k+1)-n-1)",
            Window,
            WIDE,
            affine(
                |p| p2(p.k() + 1) + p2(p.k()) + n(p) - 1,
                |p| 3 * n(p),
                |p| p2(p.k() + 1) - n(p) - 1,
            ),
        ),
        entry(
            "oeis8",
            "A(2^(k+2)+2^k-n-1) = 2^k + n + A(2^(k+1)+n-1)",
            Window,
            WIDE,
            affine(
                |p| p2(p.k() + 2) + p2(p.k()) - n(p) - 1,
                |p| p2(p.k()) + n(p),
                |p| p2(p.k() + 1) + n(p) - 1,
            ),
        ),
        entry(
            "oeis9",
            "A(2^(k+3)+2^k+n-1) = 2^(k+2) + A(2^(k+1)+n-1)",
            Window,
            ITERATED,
            affine(
                |p| p2(p.k() + 3) + p2(p.k()) + n(p) - 1,
                |p| p2(p.k() + 2),
                |p| p2(p.k() + 1) + n(p) - 1,
            ),
        ),
        entry(
            "oeis11",
            "A(2^(k+3)-2^k-n-1) = 3*2^k + A(2^(k+1)-n-1)",
            Window,
            ITERATED,
            affine(
                |p| p2(p.k() + 3) - p2(p.k()) - n(p) - 1,
                |p| 3 * p2(p.k()),
                |p| p2(p.k() + 1) - n(p) - 1,
            ),
        ),
        entry(
            "oeis10sum",
            "A(2^(k+2m+1) + 2^k(4^m-1)/3 + n-1) = 2^(k+2)(4^m-1)/3 + A(2^(k+1)+n-1)",
            WindowIterated,
            ITERATED,
            affine(
                |p| p2(p.k() + 2 * p.m() + 1) + p2(p.k()) * third_of_4m_minus_1(p.m()) + n(p) - 1,
                |p| p2(p.k() + 2) * third_of_4m_minus_1(p.m()),
                |p| p2(p.k() + 1) + n(p) - 1,
            ),
        ),
        entry(
            "oeis12sum",
            "A(2^(k+2m+1) - 2^k(4^m-1)/3 - n-1) = 2^k(4^m-1) + A(2^(k+1)-n-1)",
            WindowIterated,
            ITERATED,
            affine(
                |p| p2(p.k() + 2 * p.m() + 1) - p2(p.k()) * third_of_4m_minus_1(p.m()) - n(p) - 1,
                |p| p2(p.k()) * (p2(2 * p.m()) - 1),
                |p| p2(p.k() + 1) - n(p) - 1,
            ),
        ),
        entry(
            "oeis14sum",
            "A(2^(k+m)+n-1) = 2^k(2^m-1) - mn + A(2^k+n-1)",
            WindowIterated,
            ITERATED,
            affine(
                |p| p2(p.k() + p.m()) + n(p) - 1,
                |p| p2(p.k()) * (p2(p.m()) - 1) - i128::from(p.m()) * n(p),
                |p| p2(p.k()) + n(p) - 1,
            ),
        ),
        entry(
            "oeis13sum",
            "A(2^(k+m+1)+2^(k+m)+n-1) = 2^(k+1)(2^m-1) - mn + A(2^(k+1)+2^k+n-1)",
            WindowIterated,
            ITERATED,
            affine(
                |p| p2(p.k() + p.m() + 1) + p2(p.k() + p.m()) + n(p) - 1,
                |p| p2(p.k() + 1) * (p2(p.m()) - 1) - i128::from(p.m()) * n(p),
                |p| p2(p.k() + 1) + p2(p.k()) + n(p) - 1,
            ),
        ),
        entry(
            "tau_scale_1",
            "1 - 2 tau(1/6 + (3x-1)/(6*4^m)) = (1 - 2 tau(x/2))/4^m = (1 - x - tau(x))/4^m, x = n/2^k",
            WindowIterated,
            Limits::new(10, 6),
            Relation::Equal(tau_scale_1),
        ),
        entry(
            "tau_scale_2",
            "2/3 - tau(2/3 + (1/3-x)/4^m) = (2/3 - tau(1-x))/4^m, x = n/2^k",
            WindowIterated,
            Limits::new(10, 6),
            Relation::Equal(tau_scale_2),
        ),
        entry(
            "encadrement",
            "n/2 <= A(n) <= n",
            Indices,
            Limits::new(16, 0),
            Relation::Ascending(encadrement),
        ),
        entry(
            "tau_major",
            "tau(n/2^k) <= (n/2^k + 1)/2 - 1/2^(k+1)",
            Window,
            WIDE,
            Relation::Ascending(tau_major),
        ),
        entry(
            "minor",
            "A(n) >= 1 + 3(n - 2^j)/2, j = floor(log2 n), n >= 3*2^(j-1)",
            Indices,
            Limits::new(14, 0),
            Relation::Ascending(minor),
        ),
        entry(
            "lemma_half",
            "A(n) = n/2 implies n < 3*2^(j-1) - 1, j = floor(log2 n) >= 2",
            Indices,
            Limits::new(16, 0),
            Relation::Ascending(lemma_half),
        ),
    ]
}

/// Catalog entry by id.
pub fn lookup(id: &str) -> Result<IdentityDescriptor> {
    catalog()
        .into_iter()
        .find(|d| d.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}
