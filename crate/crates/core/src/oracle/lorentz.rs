use num_traits::Signed;

use crate::construct::to_bernstein;
use crate::error::Result;
use crate::poly::Polynomial;

/// All degree-`N` Bernstein coefficients of `p` are nonnegative, computed by
/// direct conversion rather than elevation.
pub fn lorentz_oracle(p: &Polynomial, big_n: usize) -> Result<bool> {
    Ok(!to_bernstein(p, big_n)?.iter().any(Signed::is_negative))
}
