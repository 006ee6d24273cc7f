//! Dense univariate polynomials over the rationals and their factored form.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rational::{self, int, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("root multiplicity must be at least 1")]
    ZeroMultiplicity,
}

/// Coefficients are stored lowest degree first. The zero polynomial is the
/// empty coefficient list; every other value has a nonzero last entry.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Polynomial {
    #[serde(with = "rational::serde_rat_vec")]
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `x - root`
    pub fn linear(root: &Rational) -> Self {
        Self::new(vec![-root.clone(), Rational::one()])
    }

    pub fn monomial(c: Rational, power: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); power + 1];
        coeffs[power] = c;
        Self::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * int(k as i64))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Euclidean division; panics when `divisor` is zero.
    pub fn div_rem(&self, divisor: &Polynomial) -> (Polynomial, Polynomial) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading().expect("nonzero divisor");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let q = &rem[k + dd] / lead;
            if q.is_zero() {
                continue;
            }
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &q * c;
            }
            quot[k] = q;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => self.scale(&(Rational::one() / l)),
            None => Self::zero(),
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.primitive_rational();
        }
        a.monic()
    }

    /// Squarefree part `p / gcd(p, p')`, made monic.
    pub fn squarefree(&self) -> Polynomial {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// Integer-coefficient multiple with coprime coefficients and positive
    /// leading coefficient.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let l = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(l.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let neg = ints.last().is_some_and(|c| c.is_negative());
        for c in ints.iter_mut() {
            *c = &*c / &g;
            if neg {
                *c = -&*c;
            }
        }
        ints
    }

    // Keeps remainder sequences from growing huge coefficients; only the
    // scale changes, never the sign of the leading coefficient.
    fn primitive_rational(&self) -> Polynomial {
        Self::new(
            self.primitive_integer()
                .into_iter()
                .map(Rational::from_integer)
                .collect(),
        )
        .scale(&Rational::from_integer(
            self.leading()
                .map(|l| if l.is_negative() { -BigInt::one() } else { BigInt::one() })
                .unwrap_or_else(BigInt::one),
        ))
    }

    /// Reversed coefficient list, `x^deg p(1/x)`.
    pub fn reversed(&self) -> Polynomial {
        let mut c = self.coeffs.clone();
        c.reverse();
        Self::new(c)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let coef = rational::format(&mag);
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{coef}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{coef}*x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{coef}*x^{k}")?,
            }
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

/// `sign * prod (x - root)^mult`, roots strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FactoredPoly {
    sign: Sign,
    factors: Vec<(Rational, u32)>,
}

impl FactoredPoly {
    /// Sorts the factors and merges repeated roots.
    pub fn new(sign: Sign, factors: Vec<(Rational, u32)>) -> Result<Self, PolyError> {
        if factors.iter().any(|(_, m)| *m == 0) {
            return Err(PolyError::ZeroMultiplicity);
        }
        let mut factors = factors;
        factors.sort_by(|a, b| a.0.cmp(&b.0));
        let mut merged: Vec<(Rational, u32)> = Vec::with_capacity(factors.len());
        for (r, m) in factors {
            match merged.last_mut() {
                Some((last, lm)) if *last == r => *lm += m,
                _ => merged.push((r, m)),
            }
        }
        Ok(FactoredPoly {
            sign,
            factors: merged,
        })
    }

    pub fn constant(sign: Sign) -> Self {
        FactoredPoly {
            sign,
            factors: Vec::new(),
        }
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn factors(&self) -> &[(Rational, u32)] {
        &self.factors
    }

    pub fn degree(&self) -> usize {
        self.factors.iter().map(|(_, m)| *m as usize).sum()
    }

    pub fn multiplicity(&self, root: &Rational) -> u32 {
        self.factors
            .iter()
            .find(|(r, _)| r == root)
            .map_or(0, |(_, m)| *m)
    }

    pub fn negate(&self) -> Self {
        FactoredPoly {
            sign: self.sign.flip(),
            factors: self.factors.clone(),
        }
    }

    /// Product with concatenated factor lists.
    pub fn product(&self, other: &FactoredPoly) -> FactoredPoly {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        FactoredPoly::new(self.sign.times(other.sign), factors).expect("multiplicities stay positive")
    }

    pub fn expand(&self) -> Polynomial {
        let mut p = Polynomial::constant(int(self.sign.as_i8() as i64));
        for (r, m) in &self.factors {
            p = &p * &Polynomial::linear(r).pow(*m);
        }
        p
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = int(self.sign.as_i8() as i64);
        for (r, m) in &self.factors {
            let d = x - r;
            for _ in 0..*m {
                acc *= &d;
            }
        }
        acc
    }
}

impl fmt::Display for FactoredPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign == Sign::Minus {
            write!(f, "-")?;
        }
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, (r, m)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if r.is_zero() {
                write!(f, "x")?;
            } else if r.is_negative() {
                write!(f, "(x + {})", rational::format(&-r))?;
            } else {
                write!(f, "(x - {})", rational::format(r))?;
            }
            if *m > 1 {
                write!(f, "^{m}")?;
            }
        }
        Ok(())
    }
}

/// Rank of a dense rational matrix by fraction-exact Gaussian elimination.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let cols = m.iter().map(Vec::len).max().unwrap_or(0);
    for row in m.iter_mut() {
        row.resize(cols, Rational::zero());
    }
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        let (top, rest) = m.split_at_mut(r + 1);
        for row in rest {
            if row[c].is_zero() {
                continue;
            }
            let f = &row[c] / &pivot;
            for (x, y) in row[c..cols].iter_mut().zip(&top[r][c..cols]) {
                *x -= &f * y;
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn expand_examples() {
        assert_eq!(FactoredPoly::constant(Sign::Plus).expand(), Polynomial::one());
        let f = FactoredPoly::new(Sign::Minus, vec![(int(0), 1), (int(1), 1)]).unwrap();
        assert_eq!(f.expand(), Polynomial::from_ints(&[0, 1, -1]));
        let g = FactoredPoly::new(Sign::Plus, vec![(int(0), 2), (int(1), 2)]).unwrap();
        assert_eq!(g.expand(), Polynomial::from_ints(&[0, 0, 1, -2, 1]));
        assert_eq!(g.degree(), 4);
    }

    #[test]
    fn eval_examples() {
        let p = Polynomial::from_ints(&[-1, 0, 1]);
        assert_eq!(p.eval(&int(1)), int(0));
        assert_eq!(p.eval(&int(2)), int(3));
        let q = Polynomial::new(vec![rat(1, 4), int(0), int(1)]);
        assert_eq!(q.eval(&int(0)), rat(1, 4));
    }

    #[test]
    fn zero_polynomial_is_canonical() {
        assert!(Polynomial::new(vec![int(0), int(0)]).is_zero());
        assert_eq!(Polynomial::new(vec![]), Polynomial::zero());
        assert_eq!(Polynomial::zero().degree(), None);
    }

    #[test]
    fn factored_merges_and_rejects_zero_mult() {
        let f = FactoredPoly::new(Sign::Plus, vec![(int(2), 1), (int(0), 1), (int(2), 2)]).unwrap();
        assert_eq!(f.factors(), &[(int(0), 1), (int(2), 3)]);
        assert_eq!(
            FactoredPoly::new(Sign::Plus, vec![(int(1), 0)]),
            Err(PolyError::ZeroMultiplicity)
        );
    }

    #[test]
    fn division_and_gcd() {
        let a = Polynomial::from_ints(&[-1, 0, 1]); // (x-1)(x+1)
        let b = Polynomial::from_ints(&[1, -2, 1]); // (x-1)^2
        assert_eq!(a.gcd(&b), Polynomial::from_ints(&[-1, 1]));
        let (q, r) = b.div_rem(&Polynomial::from_ints(&[-1, 1]));
        assert_eq!(q, Polynomial::from_ints(&[-1, 1]));
        assert!(r.is_zero());
        let cube = Polynomial::from_ints(&[-1, 1]).pow(3);
        assert_eq!(cube.squarefree(), Polynomial::from_ints(&[-1, 1]));
    }

    #[test]
    fn display_forms() {
        assert_eq!(Polynomial::from_ints(&[0, 1, -1]).to_string(), "-x^2 + x");
        let f = FactoredPoly::new(Sign::Minus, vec![(int(0), 1), (rat(-1, 2), 2)]).unwrap();
        assert_eq!(f.to_string(), "-(x + 1/2)^2*x");
    }

    #[test]
    fn rank_of_dependent_rows() {
        let rows = vec![vec![int(1), int(2)], vec![int(2), int(4)], vec![int(0), int(1)]];
        assert_eq!(rank(&rows), 2);
        assert_eq!(rank(&[vec![int(0), int(0)]]), 0);
    }
}
