//! Calculus of 0–1 node types.
//!
//! A node system of `n` points splits the line into `n + 1` gaps; the type
//! records with a 1 each gap that contains points of the set. Digits are
//! indexed `0..=n`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OmegaError {
    #[error("a type needs at least one digit")]
    Empty,
    #[error("invalid digit `{0}` (expected 0 or 1)")]
    BadDigit(char),
    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("a type without nodes has no contractions")]
    NoNodes,
}

/// Type of a node system. Length `n + 1` for `n` nodes; `n = 0` is allowed
/// so that contractions of single-node types stay representable.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OmegaSeq {
    bits: Vec<bool>,
}

impl OmegaSeq {
    pub fn new(bits: Vec<bool>) -> Result<Self, OmegaError> {
        if bits.is_empty() {
            return Err(OmegaError::Empty);
        }
        Ok(OmegaSeq { bits })
    }

    pub fn from_digits(digits: &[u8]) -> Result<Self, OmegaError> {
        digits
            .iter()
            .map(|&d| match d {
                0 => Ok(false),
                1 => Ok(true),
                other => Err(OmegaError::BadDigit(char::from(b'0' + other.min(9)))),
            })
            .collect::<Result<Vec<_>, _>>()
            .and_then(Self::new)
    }

    pub fn zeros(len: usize) -> Self {
        OmegaSeq { bits: vec![false; len.max(1)] }
    }

    pub fn ones(len: usize) -> Self {
        OmegaSeq { bits: vec![true; len.max(1)] }
    }

    /// Every 0–1 sequence of the given length, in counting order.
    pub fn all_of_len(len: usize) -> impl Iterator<Item = OmegaSeq> {
        assert!((1..usize::BITS as usize).contains(&len));
        (0u64..(1u64 << len)).map(move |m| OmegaSeq {
            bits: (0..len).map(|i| (m >> (len - 1 - i)) & 1 == 1).collect(),
        })
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Number of nodes.
    pub fn n(&self) -> usize {
        self.bits.len() - 1
    }

    pub fn count_n(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// Maximal zero blocks with a 1 on both sides, as `(start, len)`.
    pub fn inner_zero_blocks(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut i = 0;
        let b = &self.bits;
        while i < b.len() {
            if b[i] {
                i += 1;
                continue;
            }
            let start = i;
            while i < b.len() && !b[i] {
                i += 1;
            }
            if start > 0 && i < b.len() {
                out.push((start, i - start));
            }
        }
        out
    }

    /// Inner zero blocks of odd length.
    pub fn count_k(&self) -> usize {
        self.inner_zero_blocks().iter().filter(|(_, l)| l % 2 == 1).count()
    }

    pub fn nu(&self) -> usize {
        usize::from(self.bits.iter().all(|&b| !b))
    }

    /// Minimal degree of a nonzero polynomial vanishing at the nodes and
    /// nonnegative at one point of each 1-gap: `n - 1 + N - K + nu`.
    pub fn tau(&self) -> usize {
        let v = self.n() as isize - 1 + self.count_n() as isize - self.count_k() as isize + self.nu() as isize;
        debug_assert!(v >= 0);
        v as usize
    }

    /// Type after removing node `j` (1-based): digits `j-1` and `j` merge
    /// into a single 1.
    pub fn contract(&self, j: usize) -> Result<OmegaSeq, OmegaError> {
        let n = self.n();
        if j == 0 || j > n {
            return Err(OmegaError::IndexOutOfRange { index: j, n });
        }
        let mut bits = Vec::with_capacity(n);
        bits.extend_from_slice(&self.bits[..j - 1]);
        bits.push(true);
        bits.extend_from_slice(&self.bits[j + 1..]);
        Ok(OmegaSeq { bits })
    }

    /// `max_j tau(contract(j))`, straight from the definition.
    pub fn sigma(&self) -> Result<usize, OmegaError> {
        let n = self.n();
        if n == 0 {
            return Err(OmegaError::NoNodes);
        }
        Ok((1..=n)
            .map(|j| self.contract(j).expect("j in range").tau())
            .max()
            .expect("n >= 1"))
    }

    pub fn sigma_exception(&self) -> Option<SigmaException> {
        let b = &self.bits;
        let len = b.len();
        if b.iter().all(|&x| !x) {
            return Some(SigmaException::AllZero);
        }
        if b.iter().all(|&x| x) {
            return Some(SigmaException::AllOne);
        }
        let inner_ones = |r: &[bool]| !r.is_empty() && r.iter().all(|&x| x);
        if len >= 2 && !b[0] && b[1..].iter().all(|&x| x) {
            return Some(SigmaException::LeadingZero);
        }
        if len >= 2 && !b[len - 1] && b[..len - 1].iter().all(|&x| x) {
            return Some(SigmaException::TrailingZero);
        }
        if len >= 3 && !b[0] && !b[len - 1] && inner_ones(&b[1..len - 1]) {
            return Some(SigmaException::BothEndsZero);
        }
        None
    }

    /// Branch table for sigma: `n-1` for all zeros, `2n-2` for all ones or a
    /// single end zero, `2n-3` for zeros at both ends only, `tau` otherwise.
    pub fn sigma_closed(&self) -> Result<usize, OmegaError> {
        let n = self.n();
        if n == 0 {
            return Err(OmegaError::NoNodes);
        }
        Ok(match self.sigma_exception() {
            Some(SigmaException::AllZero) => n - 1,
            Some(SigmaException::AllOne | SigmaException::LeadingZero | SigmaException::TrailingZero) => 2 * n - 2,
            Some(SigmaException::BothEndsZero) => 2 * n - 3,
            None => self.tau(),
        })
    }
}

/// Shapes where sigma differs from tau.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SigmaException {
    AllZero,
    AllOne,
    LeadingZero,
    TrailingZero,
    BothEndsZero,
}

impl fmt::Display for OmegaSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            write!(f, "{}", if b { '1' } else { '0' })?;
        }
        Ok(())
    }
}

impl FromStr for OmegaSeq {
    type Err = OmegaError;

    /// Compact digit string such as `10010110001`; commas, spaces and
    /// surrounding parentheses are tolerated.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bits = s
            .chars()
            .filter(|c| !matches!(c, ',' | ' ' | '(' | ')'))
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(OmegaError::BadDigit(other)),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(bits)
    }
}

impl Serialize for OmegaSeq {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for OmegaSeq {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
