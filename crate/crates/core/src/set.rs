//! Compact subsets of the real line given as finite unions of closed
//! intervals and points, and their topological profile.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rational::{self, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SetError {
    #[error("a compact set needs at least one piece")]
    EmptySet,
    #[error("interval [{lo}, {hi}] has lo > hi")]
    BadInterval { lo: String, hi: String },
    #[error("finite set has no limit points")]
    NoLimitPoints,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Piece {
    pub lo: Rational,
    pub hi: Rational,
}

impl Piece {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        Piece { lo, hi }
    }

    pub fn point(x: Rational) -> Self {
        Piece { lo: x.clone(), hi: x }
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }
}

/// Sorted, pairwise disjoint, nonempty list of closed pieces separated by
/// gaps of positive length.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CompactSet {
    pieces: Vec<Piece>,
}

/// A bounded component `(alpha, beta)` of the complement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Hole {
    #[serde(with = "rational::serde_rat")]
    pub alpha: Rational,
    #[serde(with = "rational::serde_rat")]
    pub beta: Rational,
    pub left_piece: usize,
    pub right_piece: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TopoProfile {
    pub holes: Vec<Hole>,
    pub lambda: usize,
    /// `None` when the set is finite.
    pub theta_left: Option<u8>,
    pub theta_right: Option<u8>,
    #[serde(with = "rational::serde_rat_vec")]
    pub eccentric_left: Vec<Rational>,
    #[serde(with = "rational::serde_rat_vec")]
    pub eccentric_right: Vec<Rational>,
    #[serde(serialize_with = "ser_hull")]
    pub limit_point_hull: Option<(Rational, Rational)>,
    pub is_infinite: bool,
    pub cardinality: Option<usize>,
}

fn ser_hull<S: serde::Serializer>(h: &Option<(Rational, Rational)>, s: S) -> Result<S::Ok, S::Error> {
    match h {
        Some((a, b)) => [rational::format(a), rational::format(b)].serialize(s),
        None => s.serialize_none(),
    }
}

impl TopoProfile {
    pub fn thetas(&self) -> Result<(u8, u8), SetError> {
        match (self.theta_left, self.theta_right) {
            (Some(l), Some(r)) => Ok((l, r)),
            _ => Err(SetError::NoLimitPoints),
        }
    }
}

impl CompactSet {
    pub fn canonicalize(raw: Vec<Piece>) -> Result<Self, SetError> {
        if raw.is_empty() {
            return Err(SetError::EmptySet);
        }
        if let Some(p) = raw.iter().find(|p| p.lo > p.hi) {
            return Err(SetError::BadInterval {
                lo: rational::format(&p.lo),
                hi: rational::format(&p.hi),
            });
        }
        let mut raw = raw;
        raw.sort_by(|a, b| a.lo.cmp(&b.lo).then(a.hi.cmp(&b.hi)));
        let mut pieces: Vec<Piece> = Vec::with_capacity(raw.len());
        for p in raw {
            match pieces.last_mut() {
                Some(last) if p.lo <= last.hi => {
                    if p.hi > last.hi {
                        last.hi = p.hi;
                    }
                }
                _ => pieces.push(p),
            }
        }
        Ok(CompactSet { pieces })
    }

    pub fn interval(lo: Rational, hi: Rational) -> Result<Self, SetError> {
        Self::canonicalize(vec![Piece::new(lo, hi)])
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    pub fn min(&self) -> &Rational {
        &self.pieces[0].lo
    }

    pub fn max(&self) -> &Rational {
        &self.pieces[self.pieces.len() - 1].hi
    }

    pub fn is_infinite(&self) -> bool {
        self.pieces.iter().any(|p| !p.is_point())
    }

    /// Number of points, `None` when infinite.
    pub fn cardinality(&self) -> Option<usize> {
        (!self.is_infinite()).then_some(self.pieces.len())
    }

    pub fn contains(&self, x: &Rational) -> bool {
        let i = self.pieces.partition_point(|p| &p.hi < x);
        self.pieces.get(i).is_some_and(|p| p.contains(x))
    }

    /// Whether the open interval `(lo, hi)` meets the set; `None` bounds are
    /// infinite.
    pub fn meets_open(&self, lo: Option<&Rational>, hi: Option<&Rational>) -> bool {
        self.first_piece_meeting(lo, hi).is_some()
    }

    pub(crate) fn first_piece_meeting(&self, lo: Option<&Rational>, hi: Option<&Rational>) -> Option<&Piece> {
        self.pieces.iter().find(|p| {
            hi.is_none_or(|h| &p.lo < h) && lo.is_none_or(|l| &p.hi > l)
        })
    }

    pub fn holes(&self) -> Vec<Hole> {
        self.pieces
            .windows(2)
            .enumerate()
            .map(|(i, w)| Hole {
                alpha: w[0].hi.clone(),
                beta: w[1].lo.clone(),
                left_piece: i,
                right_piece: i + 1,
            })
            .collect()
    }

    /// Lengths of the maximal runs of holes whose closures touch, i.e. holes
    /// separated only by an isolated point. Returned as `(first_hole, len)`.
    pub fn hole_chains(&self) -> Vec<(usize, usize)> {
        let holes = self.pieces.len().saturating_sub(1);
        let mut chains = Vec::new();
        let mut start = 0;
        for h in 0..holes {
            let last = h + 1 == holes;
            // hole h and h+1 share the piece h+1 as endpoint
            if last || !self.pieces[h + 1].is_point() {
                chains.push((start, h + 1 - start));
                start = h + 1;
            }
        }
        chains
    }

    /// Largest number of holes with pairwise disjoint closures.
    pub fn lambda(&self) -> usize {
        self.hole_chains().iter().map(|&(_, len)| len.div_ceil(2)).sum()
    }

    pub fn profile(&self) -> TopoProfile {
        let holes = self.holes();
        let lambda = self.lambda();
        let first = self.pieces.iter().position(|p| !p.is_point());
        let last = self.pieces.iter().rposition(|p| !p.is_point());
        match (first, last) {
            (Some(f), Some(l)) => {
                let eccentric_left: Vec<Rational> = self.pieces[..f].iter().map(|p| p.lo.clone()).collect();
                let eccentric_right: Vec<Rational> =
                    self.pieces[l + 1..].iter().map(|p| p.lo.clone()).collect();
                TopoProfile {
                    holes,
                    lambda,
                    theta_left: Some((eccentric_left.len() % 2) as u8),
                    theta_right: Some((eccentric_right.len() % 2) as u8),
                    eccentric_left,
                    eccentric_right,
                    limit_point_hull: Some((self.pieces[f].lo.clone(), self.pieces[l].hi.clone())),
                    is_infinite: true,
                    cardinality: None,
                }
            }
            _ => TopoProfile {
                holes,
                lambda,
                theta_left: None,
                theta_right: None,
                eccentric_left: Vec::new(),
                eccentric_right: Vec::new(),
                limit_point_hull: None,
                is_infinite: false,
                cardinality: Some(self.pieces.len()),
            },
        }
    }
}

impl fmt::Display for CompactSet {
    /// Set-expression syntax, e.g. `[0,1] U {2}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.pieces.iter().enumerate() {
            if i > 0 {
                write!(f, " U ")?;
            }
            if p.is_point() {
                write!(f, "{{{}}}", rational::format(&p.lo))?;
            } else {
                write!(f, "[{},{}]", rational::format(&p.lo), rational::format(&p.hi))?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct SetJson {
    pieces: Vec<(String, String)>,
}

impl Serialize for CompactSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        SetJson {
            pieces: self
                .pieces
                .iter()
                .map(|p| (rational::format(&p.lo), rational::format(&p.hi)))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CompactSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let j = SetJson::deserialize(d)?;
        let pieces = j
            .pieces
            .iter()
            .map(|(lo, hi)| {
                Ok(Piece::new(
                    rational::parse(lo).map_err(D::Error::custom)?,
                    rational::parse(hi).map_err(D::Error::custom)?,
                ))
            })
            .collect::<Result<Vec<_>, D::Error>>()?;
        CompactSet::canonicalize(pieces).map_err(D::Error::custom)
    }
}
