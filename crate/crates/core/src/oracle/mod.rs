//! Brute-force checks for the closed forms, independent of the constructions.

mod dn;
pub mod lp;
mod lorentz;
mod tau;

pub use dn::{dn_oracle, DnOracleResult, PieceChoice, DEFAULT_PATTERN_LIMIT};
pub use lorentz::lorentz_oracle;
pub use tau::{cone_nontrivial, tau_oracle, tau_oracle_canonical, ConeProblem};
