//! Dense-tableau simplex over the rationals with Bland's rule.

use num_traits::{Signed, Zero};

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { value: Rational, x: Vec<Rational> },
    Unbounded,
}

/// Maximizes `c.x` subject to `A x <= b`, `x >= 0`, for `b >= 0` (so the
/// slack basis is feasible and no phase one is needed).
pub fn maximize(c: &[Rational], a: &[Vec<Rational>], b: &[Rational]) -> LpOutcome {
    let (m, n) = (a.len(), c.len());
    assert!(b.iter().all(|v| !v.is_negative()), "right-hand side must be nonnegative");
    assert_eq!(b.len(), m);
    let width = n + m + 1;
    // rows 0..m constraints, row m the objective as `z - c.x = 0`
    let mut tab: Vec<Vec<Rational>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n);
            let mut r = row.clone();
            r.extend((0..m).map(|j| if i == j { Rational::from_integer(1.into()) } else { Rational::zero() }));
            r.push(b[i].clone());
            r
        })
        .collect();
    let mut obj: Vec<Rational> = c.iter().map(|v| -v).collect();
    obj.resize(width, Rational::zero());
    tab.push(obj);
    let mut basis: Vec<usize> = (n..n + m).collect();

    // Bland: lowest index with negative reduced cost enters
    while let Some(enter) = (0..n + m).find(|&j| tab[m][j].is_negative()) {
        let mut leave: Option<(usize, Rational)> = None;
        for i in 0..m {
            if tab[i][enter].is_positive() {
                let ratio = &tab[i][width - 1] / &tab[i][enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((row, _)) = leave else {
            return LpOutcome::Unbounded;
        };
        let piv = tab[row][enter].clone();
        for v in tab[row].iter_mut() {
            *v /= &piv;
        }
        let pivot_row = tab[row].clone();
        for (i, r) in tab.iter_mut().enumerate() {
            if i != row && !r[enter].is_zero() {
                let f = r[enter].clone();
                for (v, p) in r.iter_mut().zip(&pivot_row) {
                    *v -= &f * p;
                }
            }
        }
        basis[row] = enter;
    }

    let mut x = vec![Rational::zero(); n];
    for (i, &j) in basis.iter().enumerate() {
        if j < n {
            x[j] = tab[i][width - 1].clone();
        }
    }
    LpOutcome::Optimal {
        value: tab[m][width - 1].clone(),
        x,
    }
}
