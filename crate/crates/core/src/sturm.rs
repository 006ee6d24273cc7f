//! Exact real-root isolation and sign analysis on closed intervals.
//!
//! Roots are counted with the Sturm sequence of the squarefree part and
//! isolated by bisection. A rational root of an integer polynomial with
//! leading coefficient `L` has the form `A/L`, so once an isolating interval
//! is narrower than `1/L` the single candidate is tested exactly and the
//! root is reported as a rational whenever it is one.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::poly::{PolyError, Polynomial};
use crate::rational::{self, midpoint, signum, Rational};

/// A real root, either exact or isolated in the open interval `(lo, hi)`
/// whose endpoints are not roots.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RealRoot {
    Exact {
        #[serde(with = "rational::serde_rat")]
        value: Rational,
    },
    Isolated {
        #[serde(with = "rational::serde_rat")]
        lo: Rational,
        #[serde(with = "rational::serde_rat")]
        hi: Rational,
    },
}

impl RealRoot {
    pub fn exact(&self) -> Option<&Rational> {
        match self {
            RealRoot::Exact { value } => Some(value),
            RealRoot::Isolated { .. } => None,
        }
    }

    fn lower(&self) -> &Rational {
        match self {
            RealRoot::Exact { value } => value,
            RealRoot::Isolated { lo, .. } => lo,
        }
    }

    fn upper(&self) -> &Rational {
        match self {
            RealRoot::Exact { value } => value,
            RealRoot::Isolated { hi, .. } => hi,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignReport {
    /// `p >= 0` on the whole interval.
    pub nonneg: bool,
    /// `p > 0` on the whole interval.
    pub strict: bool,
    /// Distinct real roots in the closed interval, increasing.
    pub roots: Vec<RealRoot>,
    /// A point of the interval where `p < 0`, if any.
    #[serde(skip_serializing_if = "Option::is_none", with = "rational::serde_opt_rat")]
    pub negative_at: Option<Rational>,
}


/// Sturm sequence `p0 = p, p1 = p', p_{k+1} = -rem(p_{k-1}, p_k)`.
#[derive(Debug, Clone)]
pub struct SturmSequence {
    seq: Vec<Polynomial>,
}

impl SturmSequence {
    pub fn new(p: &Polynomial) -> Self {
        let mut seq = vec![p.clone()];
        let mut cur = p.derivative();
        while !cur.is_zero() {
            let prev = seq.last().expect("nonempty");
            let next = -&prev.div_rem(&cur).1;
            seq.push(cur);
            cur = next;
        }
        SturmSequence { seq }
    }

    pub fn variations(&self, x: &Rational) -> usize {
        let mut last = 0i8;
        let mut v = 0;
        for q in &self.seq {
            let s = signum(&q.eval(x));
            if s != 0 {
                if last != 0 && s != last {
                    v += 1;
                }
                last = s;
            }
        }
        v
    }

    /// Distinct roots in the half-open interval `(a, b]`.
    pub fn count_half_open(&self, a: &Rational, b: &Rational) -> usize {
        self.variations(a) - self.variations(b)
    }
}

struct Isolator {
    sf: Polynomial,
    sturm: SturmSequence,
    lead: BigInt,
}

impl Isolator {
    fn new(p: &Polynomial) -> Self {
        let sf = p.squarefree();
        let ints = sf.primitive_integer();
        let lead = ints.last().cloned().unwrap_or_else(BigInt::one).abs();
        let sturm = SturmSequence::new(&sf);
        Isolator { sf, sturm, lead }
    }

    fn is_root(&self, x: &Rational) -> bool {
        self.sf.eval(x).is_zero()
    }

    fn count_open(&self, a: &Rational, b: &Rational) -> usize {
        let c = self.sturm.count_half_open(a, b);
        if self.is_root(b) {
            c - 1
        } else {
            c
        }
    }

    fn isolate_open(&self, a: Rational, b: Rational, count: usize, out: &mut Vec<RealRoot>) {
        if count == 0 {
            return;
        }
        if count == 1 {
            out.push(self.single(a, b));
            return;
        }
        let m = midpoint(&a, &b);
        let left = self.count_open(&a, &m);
        let hit = self.is_root(&m);
        self.isolate_open(a, m.clone(), left, out);
        let right = count - left - usize::from(hit);
        if hit {
            out.push(RealRoot::Exact { value: m.clone() });
        }
        self.isolate_open(m, b, right, out);
    }

    // Exactly one root in (a, b).
    fn single(&self, mut a: Rational, mut b: Rational) -> RealRoot {
        let lead = Rational::from_integer(self.lead.clone());
        loop {
            if (&b - &a) * &lead < Rational::one() {
                let cand = Rational::new((&a * &lead).floor().to_integer() + 1, self.lead.clone());
                if cand < b && self.is_root(&cand) {
                    return RealRoot::Exact { value: cand };
                }
                return RealRoot::Isolated { lo: a, hi: b };
            }
            let m = midpoint(&a, &b);
            if self.is_root(&m) {
                return RealRoot::Exact { value: m };
            }
            if self.count_open(&a, &m) == 1 {
                b = m;
            } else {
                a = m;
            }
        }
    }
}

/// Distinct real roots of `p` in `[lo, hi]`, increasing.
pub fn real_roots(p: &Polynomial, lo: &Rational, hi: &Rational) -> Result<Vec<RealRoot>, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let mut out = Vec::new();
    if lo > hi {
        return Ok(out);
    }
    if p.degree() == Some(0) {
        return Ok(out);
    }
    let iso = Isolator::new(p);
    if iso.is_root(lo) {
        out.push(RealRoot::Exact { value: lo.clone() });
    }
    if lo == hi {
        return Ok(out);
    }
    let inner = iso.count_open(lo, hi);
    iso.isolate_open(lo.clone(), hi.clone(), inner, &mut out);
    if iso.is_root(hi) {
        out.push(RealRoot::Exact { value: hi.clone() });
    }
    Ok(out)
}

/// Sign behaviour of `p` on `[lo, hi]`.
pub fn sturm_sign_report(p: &Polynomial, lo: &Rational, hi: &Rational) -> Result<SignReport, PolyError> {
    assert!(lo <= hi, "sturm_sign_report needs lo <= hi");
    let roots = real_roots(p, lo, hi)?;
    // One sample per open component of [lo, hi] minus the roots.
    let mut samples = Vec::new();
    if roots.first().and_then(RealRoot::exact) != Some(lo) {
        samples.push(lo.clone());
    }
    for pair in roots.windows(2) {
        let (u, l) = (pair[0].upper(), pair[1].lower());
        samples.push(if u == l { u.clone() } else { midpoint(u, l) });
    }
    if roots.last().and_then(RealRoot::exact) != Some(hi) {
        samples.push(hi.clone());
    }
    let negative_at = samples.into_iter().find(|x| p.eval(x).is_negative());
    let nonneg = negative_at.is_none();
    Ok(SignReport {
        nonneg,
        strict: nonneg && roots.is_empty(),
        roots,
        negative_at,
    })
}

/// Shrinks an isolating interval of a root of `p` until it avoids every
/// rational in `avoid`. The root must be irrational or the call never ends;
/// callers only pass roots reported as [`RealRoot::Isolated`].
pub fn refine_away(p: &Polynomial, lo: &Rational, hi: &Rational, avoid: &[Rational]) -> (Rational, Rational) {
    let sf = p.squarefree();
    let (mut a, mut b) = (lo.clone(), hi.clone());
    let sa = signum(&sf.eval(&a));
    while avoid.iter().any(|x| &a < x && x < &b) {
        let m = midpoint(&a, &b);
        let sm = signum(&sf.eval(&m));
        debug_assert!(sm != 0);
        if sm == sa {
            a = m;
        } else {
            b = m;
        }
    }
    (a, b)
}
