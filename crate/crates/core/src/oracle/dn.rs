//! `d_n` by enumerating node patterns.
//!
//! The type of a node system only depends on how many nodes sit in each
//! piece and whether the piece endpoints are among them, so one concrete
//! system per pattern covers every possibility.

use std::collections::HashMap;

use serde::Serialize;

use super::tau::tau_oracle_canonical;
use crate::error::{Error, Result};
use crate::nodes::{omega_type, NodeSystem};
use crate::omega::OmegaSeq;
use crate::rational::{int, Rational};
use crate::set::{CompactSet, Piece};

pub const DEFAULT_PATTERN_LIMIT: usize = 200_000;

/// Nodes placed in one piece: endpoints taken and interior count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct PieceChoice {
    pub left: bool,
    pub interior: usize,
    pub right: bool,
}

impl PieceChoice {
    const EMPTY: PieceChoice = PieceChoice { left: false, interior: 0, right: false };

    fn count(&self, piece: &Piece) -> usize {
        if piece.is_point() {
            usize::from(self.left)
        } else {
            usize::from(self.left) + self.interior + usize::from(self.right)
        }
    }

    fn realize(&self, piece: &Piece, out: &mut Vec<Rational>) {
        if piece.is_point() {
            if self.left {
                out.push(piece.lo.clone());
            }
            return;
        }
        if self.left {
            out.push(piece.lo.clone());
        }
        let step = (&piece.hi - &piece.lo) / int(self.interior as i64 + 1);
        out.extend((1..=self.interior).map(|i| &piece.lo + &step * int(i as i64)));
        if self.right {
            out.push(piece.hi.clone());
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DnOracleResult {
    pub degree: usize,
    pub pattern: Vec<PieceChoice>,
    pub nodes: NodeSystem,
    pub omega: OmegaSeq,
    pub patterns_checked: usize,
}

/// Choices for one piece holding exactly `k` nodes, in increasing order.
fn choices(piece: &Piece, k: usize) -> Vec<PieceChoice> {
    if piece.is_point() {
        return match k {
            0 => vec![PieceChoice::EMPTY],
            1 => vec![PieceChoice { left: true, interior: 0, right: false }],
            _ => vec![],
        };
    }
    let mut out = Vec::new();
    for left in [false, true] {
        for right in [false, true] {
            let ends = usize::from(left) + usize::from(right);
            if ends <= k {
                out.push(PieceChoice { left, interior: k - ends, right });
            }
        }
    }
    out.sort();
    out
}

fn enumerate(
    pieces: &[Piece],
    remaining: usize,
    prefix: &mut Vec<PieceChoice>,
    visit: &mut dyn FnMut(&[PieceChoice]) -> Result<()>,
) -> Result<()> {
    let Some((first, rest)) = pieces.split_first() else {
        return if remaining == 0 { visit(prefix) } else { Ok(()) };
    };
    let cap = if first.is_point() { 1 } else { remaining };
    for k in 0..=cap.min(remaining) {
        for c in choices(first, k) {
            debug_assert_eq!(c.count(first), k);
            prefix.push(c);
            enumerate(rest, remaining - k, prefix, visit)?;
            prefix.pop();
        }
    }
    Ok(())
}

fn count_patterns(pieces: &[Piece], n: usize, limit: usize) -> usize {
    // ways[r] = number of patterns for the processed pieces using r nodes
    let mut ways = vec![0usize; n + 1];
    ways[0] = 1;
    for p in pieces {
        let mut next = vec![0usize; n + 1];
        for (used, &w) in ways.iter().enumerate() {
            if w == 0 {
                continue;
            }
            for k in 0..=n - used {
                let c = choices(p, k).len();
                next[used + k] = next[used + k].saturating_add(w.saturating_mul(c)).min(limit + 1);
            }
        }
        ways = next;
    }
    ways[n]
}

/// Minimum over all node patterns of `sigma(omega(t))`. For `n <= 4` every
/// `tau` entering the minimum is also recomputed by linear programming.
pub fn dn_oracle(omega: &CompactSet, n: usize, limit: usize) -> Result<DnOracleResult> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    if let Some(card) = omega.cardinality() {
        if n > card {
            return Err(Error::TooManyNodes { n, available: card });
        }
    }
    let pieces = omega.pieces();
    let total = count_patterns(pieces, n, limit);
    if total > limit {
        return Err(Error::TooLarge(limit));
    }
    let cross_check = n <= 4;
    let mut tau_cache: HashMap<OmegaSeq, usize> = HashMap::new();
    let mut best: Option<DnOracleResult> = None;
    let mut checked = 0;
    let mut visit = |pattern: &[PieceChoice]| -> Result<()> {
        checked += 1;
        let mut nodes = Vec::with_capacity(n);
        for (c, p) in pattern.iter().zip(pieces) {
            c.realize(p, &mut nodes);
        }
        let t = NodeSystem::within(omega, nodes)?;
        let w = omega_type(omega, &t)?;
        let mut sigma = 0;
        for j in 1..=n {
            let c = w.contract(j)?;
            let tau = c.tau();
            if cross_check {
                let lp = match tau_cache.get(&c) {
                    Some(&v) => v,
                    None => {
                        let v = tau_oracle_canonical(&c)?;
                        tau_cache.insert(c.clone(), v);
                        v
                    }
                };
                if lp != tau {
                    return Err(Error::Mismatch(format!("tau({c}): formula {tau}, linear program {lp}")));
                }
            }
            sigma = sigma.max(tau);
        }
        if best.as_ref().is_none_or(|b| sigma < b.degree) {
            best = Some(DnOracleResult {
                degree: sigma,
                pattern: pattern.to_vec(),
                nodes: t,
                omega: w,
                patterns_checked: 0,
            });
        }
        Ok(())
    };
    enumerate(pieces, n, &mut Vec::with_capacity(pieces.len()), &mut visit)?;
    let mut best = best.ok_or(Error::TooManyNodes { n, available: 0 })?;
    best.patterns_checked = checked;
    Ok(best)
}
