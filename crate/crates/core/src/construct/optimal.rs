//! A canonical node system reaching `d_n`.
//!
//! Built from a free family of holes chosen chain by chain (holes touching
//! through an isolated point form a chain; every second one of a chain is
//! taken). End chains of even length are shifted so the family avoids `a`
//! and `b`, which is possible exactly when the matching eccentric parity is 0.

use std::collections::BTreeSet;

use super::dn::{dn, DnTag};
use crate::error::Result;
use crate::nodes::NodeSystem;
use crate::rational::{int, midpoint, Rational};
use crate::set::{CompactSet, Hole, Piece};

/// Holes of the leftmost maximal free family, in increasing order.
pub fn free_family(omega: &CompactSet) -> Vec<Hole> {
    let holes = omega.holes();
    let pieces = omega.pieces();
    let mut picked = Vec::new();
    for (start, len) in omega.hole_chains() {
        let left_end = start == 0 && pieces[0].is_point();
        let offset = usize::from(left_end && len % 2 == 0);
        picked.extend((offset..len).step_by(2).map(|i| holes[start + i].clone()));
    }
    picked
}

fn interior_points(piece: &Piece, count: usize) -> impl Iterator<Item = Rational> + '_ {
    let step = (&piece.hi - &piece.lo) / int(count as i64 + 1);
    (1..=count).map(move |i| &piece.lo + &step * int(i as i64))
}

pub fn optimal_nodes(omega: &CompactSet, n: usize) -> Result<NodeSystem> {
    let branch = dn(omega, n)?;
    let pieces = omega.pieces();
    let (a, b) = (omega.min().clone(), omega.max().clone());

    let nodes: Vec<Rational> = match branch.tag {
        DnTag::SmallN if n == 1 => vec![a],
        DnTag::SmallN if omega.is_infinite() => vec![a, b],
        DnTag::SmallN | DnTag::Finite => pieces.iter().take(n).map(|p| p.lo.clone()).collect(),
        _ => {
            let family = free_family(omega);
            let endpoints = |hs: &[Hole]| -> BTreeSet<Rational> {
                hs.iter().flat_map(|h| [h.alpha.clone(), h.beta.clone()]).collect()
            };
            let lambda = family.len();
            let k = n / 2;
            let mut t: BTreeSet<Rational>;
            if n.is_multiple_of(2) && lambda >= k {
                t = endpoints(&family[..k]);
            } else if n % 2 == 1 && lambda > k {
                let avoiding: Vec<Hole> = family.into_iter().filter(|h| h.alpha != a).take(k).collect();
                t = endpoints(&avoiding);
                t.insert(a);
            } else if n % 2 == 1 && lambda == k {
                t = endpoints(&family);
                if !t.contains(&a) {
                    t.insert(a);
                } else if !t.contains(&b) {
                    t.insert(b);
                } else {
                    t.insert(midpoint(&fill_piece(omega).lo, &fill_piece(omega).hi));
                }
            } else {
                t = endpoints(&family);
                t.insert(a);
                t.insert(b);
                let missing = n - t.len();
                t.extend(interior_points(fill_piece(omega), missing));
            }
            t.into_iter().collect()
        }
    };
    debug_assert_eq!(nodes.len(), n);
    Ok(NodeSystem::within(omega, nodes)?)
}

fn fill_piece(omega: &CompactSet) -> &Piece {
    omega
        .pieces()
        .iter()
        .find(|p| !p.is_point())
        .expect("infinite set has a nondegenerate piece")
}
