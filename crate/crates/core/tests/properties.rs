mod common;

use num_traits::{Signed, Zero};
use posbasis::construct::{degree_elevate, extremal_poly, free_family, from_bernstein, DEFAULT_LORENTZ_CAP};
use posbasis::nodes::witnesses;
use posbasis::rational::{int, rat};
use posbasis::set::Piece;
use posbasis::sturm::SturmSequence;
use posbasis::{
    basis_for_nodes, is_nonneg_on, lorentz_degree, lorentz_theorem_applies, negativity_witness, omega_type,
    optimal_nodes, parse_set_expr, real_roots, schur_cohn_has_root_in_closed_unit_disk, sturm_sign_report,
    to_bernstein, verify_positive_basis, CompactSet, FactoredPoly, NodeSystem, Polynomial, Rational, RealRoot, Sign,
};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;
use rand::SeedableRng;

fn small_rat() -> impl Strategy<Value = Rational> {
    (-24i64..=24, 1i64..=6).prop_map(|(p, q)| rat(p, q))
}

fn poly(max_len: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(small_rat(), 1..=max_len)
        .prop_map(Polynomial::new)
        .prop_filter("nonzero", |p| !p.is_zero())
}

fn factored() -> impl Strategy<Value = FactoredPoly> {
    (any::<bool>(), prop::collection::vec((small_rat(), 1u32..=3), 0..4)).prop_map(|(neg, f)| {
        FactoredPoly::new(if neg { Sign::Minus } else { Sign::Plus }, f).unwrap()
    })
}

fn compact_set(max_pieces: usize) -> impl Strategy<Value = CompactSet> {
    any::<u64>().prop_map(move |seed| {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        common::random_set(&mut rng, max_pieces)
    })
}

/// Up to `max` distinct points of `omega`: piece endpoints and midpoints.
fn nodes_in(omega: &CompactSet, picks: &[usize], max: usize) -> Option<NodeSystem> {
    let mut cands: Vec<Rational> = omega
        .pieces()
        .iter()
        .flat_map(|p| {
            if p.is_point() {
                vec![p.lo.clone()]
            } else {
                let q = (&p.hi - &p.lo) / int(4);
                (0..=4).map(|i| &p.lo + &q * int(i)).collect()
            }
        })
        .collect();
    cands.dedup();
    let mut chosen: Vec<Rational> = picks.iter().take(max).map(|&i| cands[i % cands.len()].clone()).collect();
    chosen.sort();
    chosen.dedup();
    NodeSystem::within(omega, chosen).ok()
}

fn grid(piece: &Piece, steps: i64) -> Vec<Rational> {
    if piece.is_point() {
        return vec![piece.lo.clone()];
    }
    (0..=steps).map(|i| &piece.lo + (&piece.hi - &piece.lo) * int(i) / int(steps)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn expand_is_a_homomorphism(f in factored(), g in factored(), x in small_rat()) {
        prop_assert_eq!(f.product(&g).expand(), &f.expand() * &g.expand());
        prop_assert_eq!(f.eval(&x), f.expand().eval(&x));
    }

    #[test]
    fn roots_of_a_product_are_found_exactly(roots in prop::collection::btree_set(small_rat(), 1..5),
                                            lo in small_rat(), width in 0i64..10) {
        let f = FactoredPoly::new(Sign::Plus, roots.iter().map(|r| (r.clone(), 1)).collect()).unwrap();
        let hi = &lo + int(width);
        let found: Vec<Rational> = real_roots(&f.expand(), &lo, &hi).unwrap()
            .into_iter().map(|r| r.exact().cloned().expect("rational roots are exact")).collect();
        let expected: Vec<Rational> = roots.into_iter().filter(|r| &lo <= r && r <= &hi).collect();
        prop_assert_eq!(found, expected);
    }

    #[test]
    fn isolating_intervals_bracket_a_sign_change(p in poly(6), lo in small_rat()) {
        let hi = &lo + int(5);
        let sf = p.squarefree();
        let roots = real_roots(&p, &lo, &hi).unwrap();
        for w in roots.windows(2) {
            let upper = match &w[0] { RealRoot::Exact { value } => value, RealRoot::Isolated { hi, .. } => hi };
            let lower = match &w[1] { RealRoot::Exact { value } => value, RealRoot::Isolated { lo, .. } => lo };
            prop_assert!(upper <= lower);
        }
        for r in &roots {
            match r {
                RealRoot::Exact { value } => prop_assert!(p.eval(value).is_zero()),
                RealRoot::Isolated { lo, hi } => {
                    prop_assert!((sf.eval(lo) * sf.eval(hi)).is_negative());
                    prop_assert_eq!(SturmSequence::new(&sf).count_half_open(lo, hi), 1);
                }
            }
        }
        // sign changes on a grid never exceed the root count
        let g = grid(&Piece::new(lo.clone(), hi.clone()), 40);
        let signs: Vec<i8> = g.iter().map(|x| posbasis::rational::signum(&p.eval(x))).filter(|&s| s != 0).collect();
        let changes = signs.windows(2).filter(|w| w[0] != w[1]).count();
        prop_assert!(changes <= roots.len());
    }

    #[test]
    fn sign_report_agrees_with_sampling(p in poly(5), lo in small_rat(), width in 0i64..6) {
        let hi = &lo + int(width);
        let rep = sturm_sign_report(&p, &lo, &hi).unwrap();
        let g = grid(&Piece::new(lo.clone(), hi.clone()), 30);
        if rep.nonneg {
            prop_assert!(g.iter().all(|x| !p.eval(x).is_negative()));
        } else {
            let w = rep.negative_at.unwrap();
            prop_assert!(lo <= w && w <= hi && p.eval(&w).is_negative());
        }
        prop_assert_eq!(rep.strict, rep.nonneg && rep.roots.is_empty());
    }

    #[test]
    fn nonneg_on_set_agrees_with_sampling(p in poly(5), omega in compact_set(4)) {
        match negativity_witness(&p, &omega).unwrap() {
            Some(w) => prop_assert!(omega.contains(&w) && p.eval(&w).is_negative()),
            None => for piece in omega.pieces() {
                prop_assert!(grid(piece, 24).iter().all(|x| !p.eval(x).is_negative()));
            },
        }
    }

    #[test]
    fn schur_cohn_on_known_roots(outside in prop::collection::vec((11i64..40, any::<bool>()), 0..4),
                                inside in prop::option::of(-10i64..=10), c in 1i64..30) {
        // real roots of modulus > 1, optional root in [-1, 1], and x^2 + c/10
        let mut p = Polynomial::one();
        for (r, neg) in &outside {
            let r = rat(if *neg { -r } else { *r }, 10);
            p = &p * &Polynomial::linear(&r);
        }
        let quad = Polynomial::new(vec![rat(c, 10), int(0), int(1)]);
        p = &p * &quad;
        let expect_inside = c <= 10;
        if let Some(r) = inside {
            p = &p * &Polynomial::linear(&rat(r, 10));
        }
        prop_assert_eq!(schur_cohn_has_root_in_closed_unit_disk(&p).unwrap(), expect_inside || inside.is_some());
    }

    #[test]
    fn canonical_form_is_stable(omega in compact_set(5)) {
        let again = CompactSet::canonicalize(omega.pieces().to_vec()).unwrap();
        prop_assert_eq!(&again, &omega);
        prop_assert_eq!(parse_set_expr(&omega.to_string()).unwrap(), omega.clone());
        let json = serde_json::to_string(&omega).unwrap();
        prop_assert_eq!(serde_json::from_str::<CompactSet>(&json).unwrap(), omega);
    }

    #[test]
    fn lambda_is_the_largest_free_family(omega in compact_set(13)) {
        let holes = omega.holes();
        prop_assume!(holes.len() <= 12);
        let mut best = 0;
        for mask in 0u32..(1 << holes.len()) {
            let chosen: Vec<_> = (0..holes.len()).filter(|i| mask >> i & 1 == 1).map(|i| &holes[i]).collect();
            let free = chosen.iter().enumerate().all(|(i, a)| chosen[i + 1..].iter().all(|b| {
                // closures [alpha, beta] disjoint
                a.beta < b.alpha || b.beta < a.alpha
            }));
            if free {
                best = best.max(chosen.len());
            }
        }
        prop_assert_eq!(omega.lambda(), best);
        let fam = free_family(&omega);
        prop_assert_eq!(fam.len(), best);
        prop_assert!(fam.windows(2).all(|w| w[0].beta < w[1].alpha));
    }

    #[test]
    fn left_point_flips_left_parity(omega in compact_set(4)) {
        prop_assume!(omega.is_infinite());
        let (l, r) = omega.profile().thetas().unwrap();
        let mut pieces = omega.pieces().to_vec();
        pieces.insert(0, Piece::point(omega.min() - int(1)));
        let more = CompactSet::canonicalize(pieces).unwrap();
        prop_assert_eq!(more.profile().thetas().unwrap(), (1 - l, r));
    }

    #[test]
    fn removing_a_node_contracts_the_type(omega in compact_set(4), picks in prop::collection::vec(0usize..40, 2..7), j in 0usize..7) {
        let Some(t) = nodes_in(&omega, &picks, 6) else { return Ok(()) };
        prop_assume!(t.len() >= 2);
        let j = j % t.len() + 1;
        let w = omega_type(&omega, &t).unwrap();
        let smaller = t.remove_node(j).unwrap();
        prop_assert_eq!(omega_type(&omega, &smaller).unwrap(), w.contract(j).unwrap());
    }

    #[test]
    fn witnesses_sit_inside_their_gaps(omega in compact_set(4), picks in prop::collection::vec(0usize..40, 1..7)) {
        let Some(t) = nodes_in(&omega, &picks, 6) else { return Ok(()) };
        let w = omega_type(&omega, &t).unwrap();
        for (j, x) in witnesses(&omega, &t).unwrap().into_iter().enumerate() {
            prop_assert_eq!(x.is_some(), w.bits()[j]);
            if let Some(x) = x {
                prop_assert!(omega.contains(&x));
                let (lo, hi) = t.gap(j);
                prop_assert!(lo.is_none_or(|l| l < &x) && hi.is_none_or(|h| &x < h));
            }
        }
    }

    #[test]
    fn extremal_polynomials_are_nonnegative(omega in compact_set(4), picks in prop::collection::vec(0usize..40, 1..7)) {
        let Some(t) = nodes_in(&omega, &picks, 6) else { return Ok(()) };
        let w = omega_type(&omega, &t).unwrap();
        let p = extremal_poly(&w, &t).unwrap();
        prop_assert_eq!(p.degree(), w.tau());
        prop_assert!(t.nodes().iter().all(|x| p.eval(x).is_zero()));
        prop_assert!(is_nonneg_on(&p.expand(), &omega).unwrap());
        let fam = basis_for_nodes(&omega, &t).unwrap();
        prop_assert_eq!(fam.max_degree(), w.sigma().unwrap());
        prop_assert!(verify_positive_basis(&omega, &fam.expanded()).unwrap().accepted());
    }

    #[test]
    fn coefficients_are_recovered_at_the_nodes(omega in compact_set(4), n in 1usize..6,
                                               lambdas in prop::collection::vec(small_rat(), 6)) {
        prop_assume!(omega.cardinality().is_none_or(|c| n <= c));
        let t = optimal_nodes(&omega, n).unwrap();
        let fam = basis_for_nodes(&omega, &t).unwrap();
        let b = fam.expanded();
        let combo = b.iter().zip(&lambdas).fold(Polynomial::zero(), |acc, (bi, l)| &acc + &bi.scale(l));
        prop_assume!(!combo.is_zero());
        let all_nonneg = lambdas[..n].iter().all(|l| !l.is_negative());
        prop_assert_eq!(is_nonneg_on(&combo, &omega).unwrap(), all_nonneg);
        for (k, l) in lambdas[..n].iter().enumerate() {
            // p(t_k) = lambda_k b_k(t_k)
            prop_assert_eq!(combo.eval(t.t(k + 1)), l * b[k].eval(t.t(k + 1)));
            if l.is_negative() {
                prop_assert!(combo.eval(t.t(k + 1)).is_negative());
            }
        }
    }

    #[test]
    fn bernstein_round_trip_and_elevation(p in poly(6), extra in 0usize..4) {
        let big_n = p.degree().unwrap() + extra;
        let c = to_bernstein(&p, big_n).unwrap();
        prop_assert_eq!(c.len(), big_n + 1);
        prop_assert_eq!(from_bernstein(&c), p.clone());
        let up = degree_elevate(&c);
        prop_assert_eq!(&up, &to_bernstein(&p, big_n + 1).unwrap());
        if c.iter().all(|a| !a.is_negative()) {
            prop_assert!(up.iter().all(|a| !a.is_negative()));
        }
    }

    #[test]
    fn lorentz_theorem(roots in prop::collection::vec((11i64..50, any::<bool>()), 1..4), c in 11i64..40) {
        let mut p = Polynomial::new(vec![rat(c, 10), int(0), int(1)]);
        for (r, left) in roots {
            // a root outside [-1, 1], oriented so the factor is positive there
            let f = if left { Polynomial::new(vec![rat(r, 10), int(1)]) } else { Polynomial::new(vec![rat(r, 10), int(-1)]) };
            p = &p * &f;
        }
        prop_assert!(lorentz_theorem_applies(&p).unwrap());
        prop_assert_eq!(lorentz_degree(&p, DEFAULT_LORENTZ_CAP).unwrap(), p.degree().unwrap());
    }
}

#[test]
fn lorentz_degree_is_monotone_and_minimal() -> Result<(), TestCaseError> {
    use posbasis::lorentz_oracle;
    for (num, den) in [(1, 4), (1, 2), (1, 10), (3, 4)] {
        let p = Polynomial::new(vec![rat(num, den), int(0), int(1)]);
        let l = lorentz_degree(&p, DEFAULT_LORENTZ_CAP).unwrap();
        prop_assert!(lorentz_oracle(&p, l).unwrap());
        if l > 2 {
            prop_assert!(!lorentz_oracle(&p, l - 1).unwrap());
        }
        for n in 2..l + 5 {
            if lorentz_oracle(&p, n).unwrap() {
                prop_assert!(lorentz_oracle(&p, n + 1).unwrap());
            }
        }
    }
    Ok(())
}
