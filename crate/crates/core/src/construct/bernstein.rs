//! Bernstein-type representations on `[-1, 1]` with the basis
//! `e_{N,k}(x) = (1 - x)^k (1 + x)^(N - k)`, and the Lorentz degree.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{PolyError, Polynomial};
use crate::rational::{int, Rational};
use crate::schur::schur_cohn_has_root_in_closed_unit_disk;
use crate::sturm::sturm_sign_report;

pub const DEFAULT_LORENTZ_CAP: usize = 256;

fn one_minus_x() -> Polynomial {
    Polynomial::from_ints(&[1, -1])
}

fn one_plus_x() -> Polynomial {
    Polynomial::from_ints(&[1, 1])
}

pub fn bernstein_basis_poly(big_n: usize, k: usize) -> Result<Polynomial> {
    if k > big_n {
        return Err(Error::IndexOutOfRange { index: k, max: big_n });
    }
    Ok(&one_minus_x().pow(k as u32) * &one_plus_x().pow((big_n - k) as u32))
}

/// Coefficients `a_0..a_N` with `p = sum a_k e_{N,k}`.
///
/// Uses `x^j = ((1+x) - (1-x))^j ((1+x) + (1-x))^(N-j) / 2^N`; in the
/// variable `s = (1-x)/(1+x)` this is the expansion of
/// `(1 - s)^j (1 + s)^(N-j) / 2^N`, whose `s^k` coefficient lands on `a_k`.
pub fn to_bernstein(p: &Polynomial, big_n: usize) -> Result<Vec<Rational>> {
    let degree = p.degree().unwrap_or(0);
    if big_n < degree {
        return Err(Error::DegreeTooLow { target: big_n, degree });
    }
    let scale = Rational::one() / int(2).pow(big_n as i32);
    let mut out = vec![Rational::zero(); big_n + 1];
    for (j, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let q = &one_minus_x().pow(j as u32) * &one_plus_x().pow((big_n - j) as u32);
        for (k, qk) in q.coeffs().iter().enumerate() {
            out[k] += c * qk * &scale;
        }
    }
    Ok(out)
}

pub fn from_bernstein(coeffs: &[Rational]) -> Polynomial {
    let big_n = coeffs.len().saturating_sub(1);
    coeffs
        .iter()
        .enumerate()
        .filter(|(_, a)| !a.is_zero())
        .fold(Polynomial::zero(), |acc, (k, a)| {
            &acc + &bernstein_basis_poly(big_n, k).expect("k <= N").scale(a)
        })
}

/// Same polynomial one degree up: multiply by `((1 - x) + (1 + x)) / 2`.
pub fn degree_elevate(coeffs: &[Rational]) -> Vec<Rational> {
    let half = Rational::new(1.into(), 2.into());
    let zero = Rational::zero();
    (0..=coeffs.len())
        .map(|k| {
            let hi = coeffs.get(k).unwrap_or(&zero);
            let lo = if k == 0 { &zero } else { &coeffs[k - 1] };
            (hi + lo) * &half
        })
        .collect()
}

fn check_admissible(p: &Polynomial) -> Result<()> {
    let report = sturm_sign_report(p, &int(-1), &int(1))?;
    let interior_root = report.roots.iter().any(|r| match r.exact() {
        Some(x) => x.abs() < Rational::one(),
        None => true,
    });
    if !report.nonneg || interior_root {
        return Err(Error::NotAdmissible);
    }
    Ok(())
}

/// Smallest `N >= deg p` whose Bernstein coefficients are all nonnegative.
pub fn lorentz_degree(p: &Polynomial, cap: usize) -> Result<usize> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial.into());
    }
    check_admissible(p)?;
    let mut big_n = p.degree().unwrap_or(0);
    if big_n > cap {
        return Err(Error::CapExceeded(cap));
    }
    let mut coeffs = to_bernstein(p, big_n)?;
    while coeffs.iter().any(Signed::is_negative) {
        if big_n == cap {
            return Err(Error::CapExceeded(cap));
        }
        coeffs = degree_elevate(&coeffs);
        big_n += 1;
    }
    Ok(big_n)
}

/// No root in the closed unit disk and positive on `[-1, 1]`.
pub fn lorentz_theorem_applies(p: &Polynomial) -> Result<bool> {
    if schur_cohn_has_root_in_closed_unit_disk(p)? {
        return Ok(false);
    }
    Ok(sturm_sign_report(p, &int(-1), &int(1))?.strict)
}
