//! Parse compact sets and read off their hole structure.
//!
//!     cargo run --example set_profile -- "{0} U [1,2] U {3}"

use posbasis::{parse_set_expr, rational};

fn main() {
    let exprs: Vec<String> = std::env::args().skip(1).collect();
    let exprs = if exprs.is_empty() {
        vec!["[0,1]".into(), "{0} U [1,2] U {3}".into(), "[0,1] U {2} U {3} U [4,5]".into(), "{0} U {1} U {2}".into()]
    } else {
        exprs
    };
    for e in &exprs {
        let set = match parse_set_expr(e) {
            Ok(s) => s,
            Err(err) => {
                eprintln!("{e}: {err}");
                continue;
            }
        };
        let p = set.profile();
        println!("{set}");
        for h in &p.holes {
            println!("  hole ({}, {})", rational::format(&h.alpha), rational::format(&h.beta));
        }
        println!("  chains {:?}  lambda {}", set.hole_chains(), p.lambda);
        match p.thetas() {
            Ok((l, r)) => println!("  eccentric points: {} left, {} right  (theta {l}, {r})", p.eccentric_left.len(), p.eccentric_right.len()),
            Err(_) => println!("  finite, {} points", p.cardinality.unwrap_or(0)),
        }
    }
}
