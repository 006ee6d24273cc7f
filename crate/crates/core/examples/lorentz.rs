//! Bernstein coefficients on [-1, 1] and the Lorentz degree.
//!
//!     cargo run --example lorentz -- 1/4 0 1

use posbasis::construct::DEFAULT_LORENTZ_CAP;
use posbasis::rational::{self, Rational};
use posbasis::{lorentz_degree, lorentz_theorem_applies, to_bernstein, Polynomial};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let coeffs: Vec<Rational> = if args.is_empty() {
        vec![rational::rat(1, 4), rational::int(0), rational::int(1)]
    } else {
        args.iter().map(|a| rational::parse(a).expect("rational coefficient")).collect()
    };
    let p = Polynomial::new(coeffs);
    println!("p = {p}");
    let degree = p.degree().unwrap_or(0);
    match lorentz_degree(&p, DEFAULT_LORENTZ_CAP) {
        Ok(l) => {
            for big_n in degree..=l {
                let c: Vec<String> = to_bernstein(&p, big_n).unwrap().iter().map(rational::format).collect();
                println!("  N = {big_n}: {}", c.join(", "));
            }
            println!("L(p) = {l}; Lorentz's theorem applies: {}", lorentz_theorem_applies(&p).unwrap());
        }
        Err(e) => println!("{e}"),
    }
}
