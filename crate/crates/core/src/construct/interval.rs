//! Maximal positive bases of `P_m` restricted to an interval `[a, b]`.
//!
//! With `n = floor((m + 3) / 2)` nodes `a = t_1 < ... < t_n = b` the standard
//! family is
//!
//! ```text
//! b_1 = (t_n - x) prod_{1<i<n} (x - t_i)^2
//! b_k = (x - t_1)(t_n - x) prod_{1<i<n, i!=k} (x - t_i)^2
//! b_n = (x - t_1) prod_{1<i<n} (x - t_i)^2
//! ```
//!
//! For even `m` three more shapes reach the same dimension: anchored at `a`
//! only, at `b` only, or not anchored at all.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::family::BasisFamily;
use crate::error::{Error, Result};
use crate::nodes::NodeSystem;
use crate::poly::{FactoredPoly, Sign};
use crate::rational::{int, Rational};
use crate::set::CompactSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Variant {
    #[default]
    Standard,
    LeftAnchored,
    RightAnchored,
    Unanchored,
}

impl Variant {
    pub const ALL: [Variant; 4] = [
        Variant::Standard,
        Variant::LeftAnchored,
        Variant::RightAnchored,
        Variant::Unanchored,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Variant::Standard => "standard",
            Variant::LeftAnchored => "left-anchored",
            Variant::RightAnchored => "right-anchored",
            Variant::Unanchored => "unanchored",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let norm = s.to_ascii_lowercase().replace('_', "-");
        Variant::ALL
            .into_iter()
            .find(|v| v.name() == norm)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown variant `{s}`")))
    }
}

/// Number of basis elements for degree bound `m`.
pub fn interval_dimension(m: usize) -> usize {
    (m + 3) / 2
}

/// Equally spaced nodes from `a` to `b`.
pub fn interval_basis(a: &Rational, b: &Rational, m: usize, variant: Variant) -> Result<BasisFamily> {
    if m == 0 {
        return Err(Error::InvalidArgument("degree bound m must be at least 1".into()));
    }
    let n = interval_dimension(m);
    let step = (b - a) / int(n as i64 - 1);
    let nodes = (0..n).map(|i| a + &step * int(i as i64)).collect();
    interval_basis_with_nodes(a, b, m, variant, nodes)
}

pub fn interval_basis_with_nodes(
    a: &Rational,
    b: &Rational,
    m: usize,
    variant: Variant,
    nodes: Vec<Rational>,
) -> Result<BasisFamily> {
    if a >= b {
        return Err(Error::InvalidArgument("interval needs a < b".into()));
    }
    if m == 0 {
        return Err(Error::InvalidArgument("degree bound m must be at least 1".into()));
    }
    if variant != Variant::Standard && m % 2 == 1 {
        return Err(Error::BadVariantParity(variant.name()));
    }
    let n = interval_dimension(m);
    if nodes.len() != n {
        return Err(Error::InvalidArgument(format!("expected {n} nodes, got {}", nodes.len())));
    }
    let omega = CompactSet::interval(a.clone(), b.clone())?;
    let t = NodeSystem::within(&omega, nodes)?;
    let (first, last) = (t.t(1), t.t(n));
    let left_anchored = matches!(variant, Variant::Standard | Variant::LeftAnchored);
    let right_anchored = matches!(variant, Variant::Standard | Variant::RightAnchored);
    if left_anchored && first != a {
        return Err(Error::InvalidArgument(format!("{variant} needs t_1 = a")));
    }
    if right_anchored && last != b {
        return Err(Error::InvalidArgument(format!("{variant} needs t_n = b")));
    }

    // Anchored end nodes enter the other elements linearly, free ones squared.
    let mult = |i: usize| -> u32 {
        if (i == 1 && left_anchored) || (i == n && right_anchored) {
            1
        } else {
            2
        }
    };
    let polys = (1..=n)
        .map(|k| {
            let factors: Vec<(Rational, u32)> = (1..=n)
                .filter(|&i| i != k)
                .map(|i| (t.t(i).clone(), mult(i)))
                .collect();
            // (t_n - x) carries the sign
            let sign = if right_anchored && k != n { Sign::Minus } else { Sign::Plus };
            FactoredPoly::new(sign, factors).expect("positive multiplicities")
        })
        .collect();
    Ok(BasisFamily {
        omega_set: omega,
        nodes: t,
        polys,
    })
}
