//! Minimal-degree polynomials vanishing at the nodes and nonnegative on
//! every gap of digit 1.
//!
//! The reduction runs in a fixed order: strip end zeros (each contributes
//! one linear factor at the outermost node), then remove the leftmost pair
//! of adjacent inner zeros (two linear factors, positive outside the pair),
//! and finish with the closed form for sequences whose zeros are isolated
//! and inner: `prod_{w_j = 0} (x - t_j)(x - t_{j+1}) * prod_{w_{i-1} w_i = 1} (x - t_i)^2`.

use crate::error::{Error, Result};
use crate::nodes::NodeSystem;
use crate::omega::OmegaSeq;
use crate::poly::{FactoredPoly, Sign};
use crate::rational::Rational;

pub fn extremal_poly(omega: &OmegaSeq, t: &NodeSystem) -> Result<FactoredPoly> {
    extremal_for_nodes(omega, t.nodes())
}

/// Same as [`extremal_poly`] but accepts an empty node list (`omega` of
/// length 1), which yields the constant 1.
pub fn extremal_for_nodes(omega: &OmegaSeq, t: &[Rational]) -> Result<FactoredPoly> {
    if omega.len() != t.len() + 1 {
        return Err(Error::LengthMismatch {
            omega: omega.len(),
            nodes: t.len(),
        });
    }
    let mut bits = omega.bits().to_vec();
    let mut nodes = t.to_vec();
    let mut sign = Sign::Plus;
    let mut factors = Vec::with_capacity(2 * nodes.len());

    while bits.len() > 1 && !bits[0] {
        bits.remove(0);
        factors.push((nodes.remove(0), 1));
    }
    while bits.len() > 1 && !bits[bits.len() - 1] {
        bits.pop();
        // t_n - x
        factors.push((nodes.pop().expect("one node per stripped digit"), 1));
        sign = sign.flip();
    }
    while let Some(j) = (1..bits.len().saturating_sub(1)).find(|&j| !bits[j] && !bits[j + 1]) {
        // gaps j, j+1 empty: drop t_j and t_{j+1}
        bits.drain(j..j + 2);
        let removed: Vec<Rational> = nodes.drain(j - 1..j + 1).collect();
        factors.extend(removed.into_iter().map(|r| (r, 1)));
    }

    let n = nodes.len();
    for (j, &bit) in bits.iter().enumerate() {
        if !bit && j >= 1 && j < n {
            factors.push((nodes[j - 1].clone(), 1));
            factors.push((nodes[j].clone(), 1));
        }
    }
    for i in 1..=n {
        if bits[i - 1] && bits[i] {
            factors.push((nodes[i - 1].clone(), 2));
        }
    }
    Ok(FactoredPoly::new(sign, factors).expect("positive multiplicities"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Polynomial;
    use crate::rational::int;

    fn run(w: &str, t: &[i64]) -> FactoredPoly {
        let t = NodeSystem::new(t.iter().map(|&x| int(x)).collect()).unwrap();
        extremal_poly(&w.parse().unwrap(), &t).unwrap()
    }

    #[test]
    fn small_cases() {
        assert_eq!(run("11", &[0]).expand(), Polynomial::from_ints(&[0, 0, 1]));
        assert_eq!(run("010", &[0, 1]).expand(), Polynomial::from_ints(&[0, 1, -1]));
        // x (x-1)^2
        assert_eq!(run("011", &[0, 1]).expand(), Polynomial::from_ints(&[0, 1, -2, 1]));
        let p = run("101", &[0, 1]);
        assert_eq!(p.expand(), Polynomial::from_ints(&[0, -1, 1]));
        assert_eq!(p.degree(), 2);
        assert_eq!(run("10", &[0]).expand(), Polynomial::from_ints(&[0, -1]));
        assert_eq!(run("00", &[0]).expand(), Polynomial::from_ints(&[0, 1]));
    }

    #[test]
    fn degree_matches_tau_on_worked_example() {
        let w: OmegaSeq = "10010110001".parse().unwrap();
        let t: Vec<i64> = (1..=10).collect();
        assert_eq!(run("10010110001", &t).degree(), w.tau());
    }

    #[test]
    fn empty_node_list() {
        let p = extremal_for_nodes(&"1".parse().unwrap(), &[]).unwrap();
        assert_eq!(p.expand(), Polynomial::one());
    }

    #[test]
    fn length_mismatch() {
        let t = NodeSystem::canonical(2);
        assert_eq!(
            extremal_poly(&"11".parse().unwrap(), &t),
            Err(Error::LengthMismatch { omega: 2, nodes: 2 })
        );
    }
}
