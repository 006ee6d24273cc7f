//! Unit-disk root location by the Schur–Cohn reduction.

use num_traits::Zero;

use crate::poly::{PolyError, Polynomial};
use crate::rational::Rational;

/// True iff every complex root of `f` lies in the open unit disk.
///
/// One reduction step replaces `f` of degree `d` by
/// `(a_d f(z) - a_0 f*(z)) / z`, where `f*` is the reversed polynomial.
/// When `|a_0| < |a_d|` this keeps the number of roots inside the disk
/// minus the root at zero; otherwise `f` cannot be stable. Roots on the
/// circle are shared by `f` and `f*` and so survive every step until the
/// coefficient test fails.
pub fn is_schur_stable(f: &Polynomial) -> Result<bool, PolyError> {
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let mut f = f.clone();
    while let Some(d) = f.degree() {
        if d == 0 {
            return Ok(true);
        }
        let a0 = f.coeff(0);
        let ad = f.coeff(d);
        if a0.clone() * &a0 >= ad.clone() * &ad {
            return Ok(false);
        }
        let next = &f.scale(&ad) - &reflect(&f, d).scale(&a0);
        debug_assert!(next.coeff(0).is_zero());
        f = Polynomial::new(next.coeffs().iter().skip(1).cloned().collect());
    }
    unreachable!("reduction never reaches the zero polynomial")
}

// z^d f(1/z) for the nominal degree d.
fn reflect(f: &Polynomial, d: usize) -> Polynomial {
    Polynomial::new((0..=d).map(|k| f.coeff(d - k)).collect::<Vec<Rational>>())
}

/// True iff `p` has a complex root `z` with `|z| <= 1`.
pub fn schur_cohn_has_root_in_closed_unit_disk(p: &Polynomial) -> Result<bool, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    if p.coeff(0).is_zero() {
        return Ok(true);
    }
    // Roots of the reversal are the reciprocals of the roots of p.
    Ok(!is_schur_stable(&p.reversed())?)
}
