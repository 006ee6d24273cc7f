//! The 0-1 type calculus: tau, its contractions and sigma.
//!
//!     cargo run --example types -- 10010110001

use posbasis::OmegaSeq;

fn main() {
    let text = std::env::args().nth(1).unwrap_or_else(|| "10010110001".into());
    let w: OmegaSeq = match text.parse() {
        Ok(w) => w,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    };
    println!("omega = {w}   n = {}  N = {}  K = {}  nu = {}", w.n(), w.count_n(), w.count_k(), w.nu());
    println!("tau   = {}", w.tau());
    for j in 1..=w.n() {
        let c = w.contract(j).unwrap();
        println!("  drop t_{j:<2} -> {c}  tau {}", c.tau());
    }
    match (w.sigma(), w.sigma_closed()) {
        (Ok(s), Ok(c)) => println!("sigma = {s} (closed form {c}, shape {:?})", w.sigma_exception()),
        (Err(e), _) | (_, Err(e)) => println!("sigma undefined: {e}"),
    }
}
