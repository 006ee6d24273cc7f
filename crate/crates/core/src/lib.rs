//! Exact positive polynomial bases on compact subsets of the real line.
//!
//! A finite family `b_1, ..., b_n` of polynomials is a positive basis of its
//! span on a compact set `Ω` when every polynomial of the span that is
//! nonnegative on `Ω` is a nonnegative combination of the `b_i`. The crate
//! computes the least maximal degree `d_n(Ω)` such a family can have, builds
//! families that reach it, and checks claimed families independently.
//!
//! Everything is exact: coefficients are arbitrary-precision rationals and
//! sign questions are settled with Sturm sequences.
//!
//! ```
//! use posbasis::{parse_set_expr, dn, optimal_nodes, basis_for_nodes, verify_positive_basis};
//!
//! let omega = parse_set_expr("{0} U [1,2] U {3}").unwrap();
//! assert_eq!(dn(&omega, 5).unwrap().degree, 6);
//! let t = optimal_nodes(&omega, 5).unwrap();
//! let family = basis_for_nodes(&omega, &t).unwrap();
//! assert_eq!(family.max_degree(), 6);
//! assert!(verify_positive_basis(&omega, &family.expanded()).unwrap().accepted());
//! ```

pub mod cli;
pub mod construct;
mod error;
pub mod nodes;
pub mod nonneg;
pub mod omega;
pub mod oracle;
pub mod parse;
pub mod poly;
pub mod rational;
pub mod schur;
pub mod set;
pub mod sturm;
pub mod verify;

pub use construct::{
    basis_for_nodes, bernstein_basis_poly, degree_elevate, dn, extremal_poly, from_bernstein, interval_basis,
    lorentz_degree, lorentz_theorem_applies, max_dim, optimal_nodes, to_bernstein, BasisFamily, BasisFamilyJson,
    DnBranch, DnTag, Variant,
};
pub use error::{Error, Result};
pub use nodes::{omega_type, witnesses, NodeSystem};
pub use nonneg::{is_nonneg_on, negativity_witness};
pub use omega::OmegaSeq;
pub use oracle::{cone_nontrivial, dn_oracle, lorentz_oracle, tau_oracle, ConeProblem};
pub use parse::parse_set_expr;
pub use poly::{FactoredPoly, Polynomial, Sign};
pub use rational::Rational;
pub use schur::schur_cohn_has_root_in_closed_unit_disk;
pub use set::{CompactSet, Piece, TopoProfile};
pub use sturm::{real_roots, sturm_sign_report, RealRoot, SignReport};
pub use verify::{verify_positive_basis, Verdict, VerifyReport};
