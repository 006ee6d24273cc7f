//! Shared fixtures: a reproducible corpus of compact sets.
#![allow(dead_code)]

use posbasis::rational::{int, rat};
use posbasis::set::Piece;
use posbasis::{parse_set_expr, CompactSet, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 0x005e_ed0b_a515;

pub fn set(expr: &str) -> CompactSet {
    parse_set_expr(expr).unwrap_or_else(|e| panic!("{expr}: {e}"))
}

/// Sets whose values are pinned by hand.
pub fn pinned() -> Vec<CompactSet> {
    [
        "[0,1]",
        "[-1,1]",
        "[0,1] U [2,3]",
        "{0} U [1,2] U {3}",
        "{0} U {1} U [2,3]",
        "[0,1] U {2} U [3,4]",
        "{0} U {1} U {2} U {3}",
        "{0} U {1} U {2}",
        "[0,1/2] U {1} U {2} U [3,4]",
        "{-1} U [0,1] U [2,3] U {4}",
    ]
    .iter()
    .map(|e| set(e))
    .collect()
}

/// A random set of 1 to `max_pieces` pieces with small rational endpoints;
/// about a third of the pieces are points.
pub fn random_set(rng: &mut impl Rng, max_pieces: usize) -> CompactSet {
    let count = rng.gen_range(1..=max_pieces);
    let mut x: Rational = int(rng.gen_range(-3..=3));
    let mut pieces = Vec::with_capacity(count);
    for _ in 0..count {
        if rng.gen_bool(0.35) {
            pieces.push(Piece::point(x.clone()));
        } else {
            let len = rat(rng.gen_range(1..=4), rng.gen_range(1..=2));
            pieces.push(Piece::new(x.clone(), &x + &len));
            x += len;
        }
        x += rat(rng.gen_range(1..=3), rng.gen_range(1..=2));
    }
    CompactSet::canonicalize(pieces).expect("nonempty, ordered pieces")
}

/// Pinned sets followed by `count` random ones (at most 4 pieces each).
pub fn corpus(count: usize) -> Vec<CompactSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut out = pinned();
    out.extend((0..count).map(|_| random_set(&mut rng, 4)));
    out
}

pub fn rng(stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(SEED);
    r.set_stream(stream);
    r
}
