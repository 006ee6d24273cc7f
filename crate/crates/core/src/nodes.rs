//! Node systems, their type with respect to a set, and witness points.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::omega::OmegaSeq;
use crate::rational::{self, int, midpoint, Rational};
use crate::set::CompactSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NodeError {
    #[error("a node system needs at least one node")]
    Empty,
    #[error("nodes must be strictly increasing")]
    NotIncreasing,
    #[error("node {0} is not a point of the set")]
    NodeNotInSet(String),
    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("cannot remove the only node")]
    LastNode,
}

/// Strictly increasing nodes `t_1 < ... < t_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<String>", into = "Vec<String>")]
pub struct NodeSystem {
    nodes: Vec<Rational>,
}

impl NodeSystem {
    pub fn new(nodes: Vec<Rational>) -> Result<Self, NodeError> {
        if nodes.is_empty() {
            return Err(NodeError::Empty);
        }
        if nodes.windows(2).any(|w| w[0] >= w[1]) {
            return Err(NodeError::NotIncreasing);
        }
        Ok(NodeSystem { nodes })
    }

    /// Nodes `1, 2, ..., n`.
    pub fn canonical(n: usize) -> Self {
        NodeSystem {
            nodes: (1..=n as i64).map(int).collect(),
        }
    }

    /// Like [`NodeSystem::new`], additionally checking membership in `omega`.
    pub fn within(omega: &CompactSet, nodes: Vec<Rational>) -> Result<Self, NodeError> {
        let t = Self::new(nodes)?;
        t.check_in(omega)?;
        Ok(t)
    }

    pub fn check_in(&self, omega: &CompactSet) -> Result<(), NodeError> {
        match self.nodes.iter().find(|x| !omega.contains(x)) {
            Some(x) => Err(NodeError::NodeNotInSet(rational::format(x))),
            None => Ok(()),
        }
    }

    pub fn nodes(&self) -> &[Rational] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// 1-based access, `t_j`.
    pub fn t(&self, j: usize) -> &Rational {
        &self.nodes[j - 1]
    }

    /// Bounds of gap `j` in `0..=n`; `None` stands for minus or plus infinity.
    pub fn gap(&self, j: usize) -> (Option<&Rational>, Option<&Rational>) {
        let n = self.nodes.len();
        let lo = (j > 0).then(|| &self.nodes[j - 1]);
        let hi = (j < n).then(|| &self.nodes[j]);
        (lo, hi)
    }

    /// Drops `t_j` (1-based).
    pub fn remove_node(&self, j: usize) -> Result<NodeSystem, NodeError> {
        let n = self.nodes.len();
        if j == 0 || j > n {
            return Err(NodeError::IndexOutOfRange { index: j, n });
        }
        if n == 1 {
            return Err(NodeError::LastNode);
        }
        let mut nodes = self.nodes.clone();
        nodes.remove(j - 1);
        Ok(NodeSystem { nodes })
    }

    /// Node list with `t_j` removed, allowing the empty result.
    pub(crate) fn without(&self, j: usize) -> Vec<Rational> {
        let mut nodes = self.nodes.clone();
        nodes.remove(j - 1);
        nodes
    }
}

impl TryFrom<Vec<String>> for NodeSystem {
    type Error = String;
    fn try_from(v: Vec<String>) -> Result<Self, Self::Error> {
        let nodes = v
            .iter()
            .map(|s| rational::parse(s).map_err(|e| e.to_string()))
            .collect::<Result<Vec<_>, _>>()?;
        NodeSystem::new(nodes).map_err(|e| e.to_string())
    }
}

impl From<NodeSystem> for Vec<String> {
    fn from(t: NodeSystem) -> Self {
        t.nodes.iter().map(rational::format).collect()
    }
}

/// Witness points per gap: `Some(x_j)` exactly for gaps of digit 1.
pub type Witnesses = Vec<Option<Rational>>;

pub fn omega_type(omega: &CompactSet, t: &NodeSystem) -> Result<OmegaSeq, NodeError> {
    t.check_in(omega)?;
    let bits = (0..=t.len())
        .map(|j| {
            let (lo, hi) = t.gap(j);
            omega.meets_open(lo, hi)
        })
        .collect();
    Ok(OmegaSeq::new(bits).expect("n + 1 >= 2 digits"))
}

/// Canonical witness for each nonempty gap: the leftmost piece meeting the
/// open gap, its point if it is one, otherwise the midpoint of the closure
/// of the intersection.
pub fn witnesses(omega: &CompactSet, t: &NodeSystem) -> Result<Witnesses, NodeError> {
    t.check_in(omega)?;
    Ok((0..=t.len())
        .map(|j| {
            let (lo, hi) = t.gap(j);
            omega.first_piece_meeting(lo, hi).map(|p| {
                if p.is_point() {
                    return p.lo.clone();
                }
                let a = match lo {
                    Some(l) if l > &p.lo => l.clone(),
                    _ => p.lo.clone(),
                };
                let b = match hi {
                    Some(h) if h < &p.hi => h.clone(),
                    _ => p.hi.clone(),
                };
                midpoint(&a, &b)
            })
        })
        .collect())
}

/// Witnesses for a node system with no ambient set: `t_1 - 1`, the gap
/// midpoints and `t_n + 1`, kept only where `omega` has a 1.
pub fn free_witnesses(omega: &OmegaSeq, t: &[Rational]) -> Witnesses {
    let n = t.len();
    omega
        .bits()
        .iter()
        .enumerate()
        .map(|(j, &bit)| {
            bit.then(|| match (j, n) {
                (_, 0) => int(0),
                (0, _) => &t[0] - int(1),
                (j, n) if j == n => &t[n - 1] + int(1),
                (j, _) => midpoint(&t[j - 1], &t[j]),
            })
        })
        .collect()
}
