//! Closed forms for the minimal maximal degree `d_n` of an `n`-element
//! positive basis on a set, and for the largest dimension inside `P_m`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::set::CompactSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum DnTag {
    /// `lambda > n/2`
    LambdaLarge,
    /// `lambda = floor(n/2)`, `n` even
    LambdaHalfEven,
    /// `lambda = floor(n/2)`, `n` odd
    LambdaHalfOdd,
    /// `1 <= lambda <= n/2 - 1`
    LambdaSmall,
    /// `lambda = 0`: the set is an interval
    Interval,
    /// finite set, `3 <= n <= #set`
    Finite,
    /// `n <= 2`
    SmallN,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DnBranch {
    pub tag: DnTag,
    pub degree: usize,
}

pub fn dn(omega: &CompactSet, n: usize) -> Result<DnBranch> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    if let Some(card) = omega.cardinality() {
        if n > card {
            return Err(Error::TooManyNodes { n, available: card });
        }
    }
    let branch = |tag, degree| Ok(DnBranch { tag, degree });
    if n <= 2 {
        return branch(DnTag::SmallN, n - 1);
    }
    if let Some(card) = omega.cardinality() {
        return branch(DnTag::Finite, if n < card { n } else { n - 1 });
    }
    let profile = omega.profile();
    let lambda = profile.lambda;
    let (tl, tr) = profile.thetas()?;
    let (tl, tr) = (tl as usize, tr as usize);
    if 2 * lambda > n {
        branch(DnTag::LambdaLarge, n)
    } else if lambda == n / 2 {
        if n.is_multiple_of(2) {
            branch(DnTag::LambdaHalfEven, n)
        } else {
            branch(DnTag::LambdaHalfOdd, n + tl * tr)
        }
    } else if lambda >= 1 {
        branch(DnTag::LambdaSmall, 2 * (n - 1 - lambda) + tl + tr)
    } else {
        branch(DnTag::Interval, 2 * n - 3)
    }
}

/// Largest `n` with `d_n <= m` on an infinite set.
///
/// For `m >= 2` this is the four-branch closed form in `lambda`, `m` and the
/// eccentric parities. For `m <= 1` the one- and two-element bases (degrees
/// 0 and 1) always fit while three elements never do, so the answer is
/// `m + 1` whatever `lambda` is.
pub fn max_dim(omega: &CompactSet, m: usize) -> Result<usize> {
    if !omega.is_infinite() {
        return Err(Error::FiniteSet);
    }
    if m <= 1 {
        return Ok(m + 1);
    }
    let profile = omega.profile();
    let lambda = profile.lambda;
    let (tl, tr) = profile.thetas()?;
    let (tl, tr) = (tl as usize, tr as usize);
    Ok(if m <= 2 * lambda {
        m
    } else if m == 2 * lambda + 1 {
        m - tl * tr
    } else if lambda >= 1 {
        (m - tl - tr) / 2 + 1 + lambda
    } else {
        (m + 3) / 2
    })
}
