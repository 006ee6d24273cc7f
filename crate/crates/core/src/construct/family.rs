use num_traits::Signed;
use serde::{Deserialize, Serialize};

use super::extremal::extremal_for_nodes;
use crate::error::{Error, Result};
use crate::nodes::{omega_type, NodeSystem};
use crate::poly::{FactoredPoly, Polynomial, Sign};
use crate::rational::{self, Rational};
use crate::set::CompactSet;

/// `n` factored polynomials sharing the node system `nodes`: `polys[j]` is
/// positive at node `j` and vanishes at every other node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisFamily {
    pub omega_set: CompactSet,
    pub nodes: NodeSystem,
    pub polys: Vec<FactoredPoly>,
}

impl BasisFamily {
    pub fn expanded(&self) -> Vec<Polynomial> {
        self.polys.iter().map(FactoredPoly::expand).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.polys.iter().map(FactoredPoly::degree).max().unwrap_or(0)
    }

    /// Sigma of the node type with respect to the family's set.
    pub fn sigma(&self) -> Result<usize> {
        Ok(omega_type(&self.omega_set, &self.nodes)?.sigma()?)
    }

    pub fn to_json(&self) -> Result<BasisFamilyJson> {
        Ok(BasisFamilyJson {
            omega_set: self.omega_set.clone(),
            nodes: self.nodes.clone(),
            basis: self
                .polys
                .iter()
                .map(|f| BasisElementJson {
                    sign: f.sign().as_i8(),
                    factors: f
                        .factors()
                        .iter()
                        .map(|(r, m)| (rational::format(r), *m))
                        .collect(),
                    coeffs: f.expand(),
                    degree: f.degree(),
                })
                .collect(),
            max_degree: self.max_degree(),
            sigma: self.sigma()?,
        })
    }
}

/// Wire form of a [`BasisFamily`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisFamilyJson {
    pub omega_set: CompactSet,
    pub nodes: NodeSystem,
    pub basis: Vec<BasisElementJson>,
    pub max_degree: usize,
    pub sigma: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisElementJson {
    pub sign: i8,
    pub factors: Vec<(String, u32)>,
    pub coeffs: Polynomial,
    pub degree: usize,
}

impl BasisFamilyJson {
    /// Rebuilds the family, checking that factors and coefficients agree.
    pub fn into_family(self) -> Result<BasisFamily> {
        let mut polys = Vec::with_capacity(self.basis.len());
        for (i, el) in self.basis.into_iter().enumerate() {
            let sign = match el.sign {
                1 => Sign::Plus,
                -1 => Sign::Minus,
                s => return Err(Error::InvalidArgument(format!("basis[{i}].sign = {s}"))),
            };
            let factors = el
                .factors
                .iter()
                .map(|(r, m)| Ok((rational::parse(r).map_err(|e| Error::InvalidArgument(e.to_string()))?, *m)))
                .collect::<Result<Vec<_>>>()?;
            let f = FactoredPoly::new(sign, factors)?;
            if f.expand() != el.coeffs || f.degree() != el.degree {
                return Err(Error::InvalidArgument(format!(
                    "basis[{i}]: factors, coeffs and degree disagree"
                )));
            }
            polys.push(f);
        }
        Ok(BasisFamily {
            omega_set: self.omega_set,
            nodes: self.nodes,
            polys,
        })
    }
}

/// `b_j` = extremal polynomial of the contracted type on the nodes without
/// `t_j`, scaled so that `b_j(t_j) > 0`.
pub fn basis_for_nodes(omega: &CompactSet, t: &NodeSystem) -> Result<BasisFamily> {
    let w = omega_type(omega, t)?;
    let polys = (1..=t.len())
        .map(|j| {
            let f = extremal_for_nodes(&w.contract(j)?, &t.without(j))?;
            let at: Rational = f.eval(t.t(j));
            debug_assert!(!num_traits::Zero::is_zero(&at));
            Ok(if at.is_negative() { f.negate() } else { f })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BasisFamily {
        omega_set: omega.clone(),
        nodes: t.clone(),
        polys,
    })
}
