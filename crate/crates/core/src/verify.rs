//! Checks that a family of polynomials is a positive basis of its span on a
//! set: every member is nonnegative there, every member has a node (a point
//! of the set where it alone is nonzero), and the members are independent.

use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::nonneg::negativity_witness;
use crate::poly::{rank, PolyError, Polynomial};
use crate::rational::{self, int, Rational};
use crate::set::CompactSet;
use crate::sturm::{real_roots, RealRoot, SturmSequence};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Accept,
    Reject,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Accept => "ACCEPT",
            Verdict::Reject => "REJECT",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "code", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Reason {
    Negative {
        index: usize,
        #[serde(with = "rational::serde_rat")]
        at: Rational,
    },
    NoExactNode {
        index: usize,
    },
    Dependent {
        rank: usize,
        size: usize,
    },
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Reason::Negative { index, at } => {
                write!(f, "NEGATIVE: element {index} is negative at {}", rational::format(at))
            }
            Reason::NoExactNode { index } => write!(f, "NO_EXACT_NODE: element {index} has no node in the set"),
            Reason::Dependent { rank, size } => write!(f, "DEPENDENT: rank {rank} < {size}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub nonneg_ok: Vec<bool>,
    pub nodes_found: Vec<Option<RealRoot>>,
    pub independent: bool,
    pub verdict: Verdict,
    pub reasons: Vec<Reason>,
}

impl VerifyReport {
    pub fn accepted(&self) -> bool {
        self.verdict == Verdict::Accept
    }
}

pub fn verify_positive_basis(omega: &CompactSet, polys: &[Polynomial]) -> Result<VerifyReport> {
    if polys.is_empty() {
        return Err(Error::InvalidArgument("empty family".into()));
    }
    if polys.iter().any(Polynomial::is_zero) {
        return Err(PolyError::ZeroPolynomial.into());
    }
    let mut reasons = Vec::new();

    let mut nonneg_ok = Vec::with_capacity(polys.len());
    for (index, p) in polys.iter().enumerate() {
        let w = negativity_witness(p, omega)?;
        nonneg_ok.push(w.is_none());
        if let Some(at) = w {
            reasons.push(Reason::Negative { index, at });
        }
    }

    let nodes_found: Vec<Option<RealRoot>> = (0..polys.len()).map(|k| find_node(omega, polys, k)).collect();
    reasons.extend(
        nodes_found
            .iter()
            .enumerate()
            .filter(|(_, n)| n.is_none())
            .map(|(index, _)| Reason::NoExactNode { index }),
    );

    let width = polys.iter().filter_map(Polynomial::degree).max().unwrap_or(0) + 1;
    let rows: Vec<Vec<Rational>> = polys.iter().map(|p| (0..width).map(|i| p.coeff(i)).collect()).collect();
    let r = rank(&rows);
    let independent = r == polys.len();
    if !independent {
        reasons.push(Reason::Dependent { rank: r, size: polys.len() });
    }

    Ok(VerifyReport {
        nonneg_ok,
        nodes_found,
        independent,
        verdict: if reasons.is_empty() { Verdict::Accept } else { Verdict::Reject },
        reasons,
    })
}

/// A point of `omega` where every member but `k` vanishes and `k` does not.
fn find_node(omega: &CompactSet, polys: &[Polynomial], k: usize) -> Option<RealRoot> {
    let pk = &polys[k];
    let others = polys.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, p)| p);
    let Some(g) = others.fold(None::<Polynomial>, |acc, p| Some(acc.map_or_else(|| p.monic(), |g| g.gcd(p))))
    else {
        return single_member_node(omega, pk);
    };
    if g.degree() == Some(0) {
        return None;
    }
    let h = g.gcd(pk).squarefree();
    let h_sturm = (h.degree() != Some(0)).then(|| SturmSequence::new(&h));
    for piece in omega.pieces() {
        let roots = real_roots(&g, &piece.lo, &piece.hi).expect("gcd of nonzero polynomials is nonzero");
        for root in roots {
            let ok = match &root {
                RealRoot::Exact { value } => !pk.eval(value).is_zero(),
                // the isolating interval holds exactly one root of g, so it
                // is a root of pk iff h has a root there
                RealRoot::Isolated { lo, hi } => h_sturm.as_ref().is_none_or(|s| s.count_half_open(lo, hi) == 0),
            };
            if ok {
                return Some(root);
            }
        }
    }
    None
}

fn single_member_node(omega: &CompactSet, p: &Polynomial) -> Option<RealRoot> {
    let d = p.degree().unwrap_or(0) as i64;
    omega
        .pieces()
        .iter()
        .flat_map(|piece| {
            let step = (&piece.hi - &piece.lo) / int(d + 2);
            let inner = if piece.is_point() { 0 } else { d + 2 };
            (0..=inner).map(move |i| &piece.lo + &step * int(i))
        })
        .find(|x| !p.eval(x).is_zero())
        .map(|value| RealRoot::Exact { value })
}
