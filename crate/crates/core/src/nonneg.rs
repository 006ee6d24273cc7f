//! Exact nonnegativity of a polynomial on a compact set.

use num_traits::Signed;

use crate::poly::{PolyError, Polynomial};
use crate::rational::Rational;
use crate::set::CompactSet;
use crate::sturm::sturm_sign_report;

/// A point of `omega` where `p` is negative, if there is one.
pub fn negativity_witness(p: &Polynomial, omega: &CompactSet) -> Result<Option<Rational>, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    for piece in omega.pieces() {
        if piece.is_point() {
            if p.eval(&piece.lo).is_negative() {
                return Ok(Some(piece.lo.clone()));
            }
        } else if let Some(x) = sturm_sign_report(p, &piece.lo, &piece.hi)?.negative_at {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

pub fn is_nonneg_on(p: &Polynomial, omega: &CompactSet) -> Result<bool, PolyError> {
    Ok(negativity_witness(p, omega)?.is_none())
}
