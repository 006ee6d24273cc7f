//! Closed forms against their brute-force oracles.

use posbasis::oracle::{dn_oracle, tau_oracle_canonical, DEFAULT_PATTERN_LIMIT};
use posbasis::{dn, parse_set_expr, OmegaSeq};

fn main() {
    let mut agree = 0;
    for len in 2..=6 {
        for w in OmegaSeq::all_of_len(len) {
            let lp = tau_oracle_canonical(&w).unwrap();
            assert_eq!(lp, w.tau(), "{w}");
            agree += 1;
        }
    }
    println!("tau: formula and linear program agree on {agree} types");

    for e in ["[0,1]", "{0} U [1,2] U {3}", "[0,1] U {2} U [3,4]", "{0} U {1} U {2} U {3}"] {
        let set = parse_set_expr(e).unwrap();
        for n in 3..=5 {
            let Ok(f) = dn(&set, n) else { continue };
            let o = dn_oracle(&set, n, DEFAULT_PATTERN_LIMIT).unwrap();
            println!(
                "{e:<24} n = {n}: formula {} oracle {} ({} patterns, best type {})",
                f.degree, o.degree, o.patterns_checked, o.omega
            );
        }
    }
}
