//! Constructions: extremal polynomials, node systems and basis families.

mod bernstein;
mod dn;
mod extremal;
mod family;
mod interval;
mod optimal;

pub use bernstein::{
    bernstein_basis_poly, degree_elevate, from_bernstein, lorentz_degree, lorentz_theorem_applies, to_bernstein,
    DEFAULT_LORENTZ_CAP,
};
pub use dn::{dn, max_dim, DnBranch, DnTag};
pub use extremal::{extremal_for_nodes, extremal_poly};
pub use family::{basis_for_nodes, BasisElementJson, BasisFamily, BasisFamilyJson};
pub use interval::{interval_basis, interval_basis_with_nodes, interval_dimension, Variant};
pub use optimal::{free_family, optimal_nodes};
