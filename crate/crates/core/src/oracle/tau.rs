//! `tau` by linear programming: the smallest degree `D` for which some
//! nonzero `p = q * prod (x - t_i)` with `deg q <= D - n` is nonnegative at
//! every witness. Nothing about the shape of extremal polynomials is assumed.

use num_traits::{One, Signed, Zero};

use super::lp::{maximize, LpOutcome};
use crate::error::{Error, Result};
use crate::nodes::{free_witnesses, Witnesses};
use crate::omega::OmegaSeq;
use crate::poly::rank;
use crate::rational::{int, Rational};

/// The cone `{q in Q^dim : L_j(q) >= 0}` with one row per functional.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeProblem {
    pub dim: usize,
    pub rows: Vec<Vec<Rational>>,
}

/// Whether the cone contains a nonzero vector.
pub fn cone_nontrivial(c: &ConeProblem) -> bool {
    let d = c.dim;
    assert!(d >= 1, "cone dimension must be positive");
    if rank(&c.rows) < d {
        return true;
    }
    // q = u - v with 0 <= u, v <= 1; maximize sum_j L_j(q) with L_j(q) >= 0.
    let lift = |row: &[Rational]| -> Vec<Rational> { row.iter().cloned().chain(row.iter().map(|v| -v)).collect() };
    let mut a: Vec<Vec<Rational>> = c.rows.iter().map(|r| lift(r).iter().map(|v| -v).collect()).collect();
    let mut b = vec![Rational::zero(); c.rows.len()];
    for i in 0..2 * d {
        let mut e = vec![Rational::zero(); 2 * d];
        e[i] = Rational::one();
        a.push(e);
        b.push(Rational::one());
    }
    let sum: Vec<Rational> = (0..d).map(|i| c.rows.iter().map(|r| r[i].clone()).sum()).collect();
    match maximize(&lift(&sum), &a, &b) {
        LpOutcome::Optimal { value, .. } => value.is_positive(),
        LpOutcome::Unbounded => unreachable!("the box bounds every variable"),
    }
}

pub fn tau_oracle(omega: &OmegaSeq, t: &[Rational], x: &Witnesses) -> Result<usize> {
    let n = t.len();
    if omega.len() != n + 1 {
        return Err(Error::LengthMismatch { omega: omega.len(), nodes: n });
    }
    if x.len() != omega.len() {
        return Err(Error::InvalidArgument(format!("{} witnesses for {} gaps", x.len(), omega.len())));
    }
    let points: Vec<(i8, &Rational)> = omega
        .bits()
        .iter()
        .zip(x)
        .filter(|(&bit, _)| bit)
        .map(|(_, w)| {
            let w = w.as_ref().ok_or_else(|| Error::InvalidArgument("missing witness for a gap of digit 1".into()))?;
            let prod: Rational = t.iter().map(|ti| w - ti).product();
            if prod.is_zero() {
                return Err(Error::InvalidArgument("witness coincides with a node".into()));
            }
            Ok((if prod.is_negative() { -1 } else { 1 }, w))
        })
        .collect::<Result<_>>()?;
    // prod (x - t_i)^2 always works, so the loop ends by D = 2n
    for big_d in n..=2 * n {
        let dim = big_d - n + 1;
        let rows = points
            .iter()
            .map(|(s, w)| {
                let mut pw = int(i64::from(*s));
                (0..dim)
                    .map(|_| {
                        let v = pw.clone();
                        pw *= *w;
                        v
                    })
                    .collect()
            })
            .collect();
        if cone_nontrivial(&ConeProblem { dim, rows }) {
            return Ok(big_d);
        }
    }
    Err(Error::Mismatch(format!("no feasible degree up to {} for {omega}", 2 * n)))
}

/// Nodes `1..=n` with witnesses `t_1 - 1`, gap midpoints and `t_n + 1`.
pub fn tau_oracle_canonical(omega: &OmegaSeq) -> Result<usize> {
    let t: Vec<Rational> = (1..=omega.n() as i64).map(int).collect();
    tau_oracle(omega, &t, &free_witnesses(omega, &t))
}
