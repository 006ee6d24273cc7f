//! The maximal positive bases of P_m on an interval, in all four shapes.

use posbasis::construct::interval_basis;
use posbasis::rational::int;
use posbasis::{verify_positive_basis, Variant};

fn main() {
    for m in [3, 4, 5] {
        for v in Variant::ALL {
            match interval_basis(&int(0), &int(2), m, v) {
                Ok(fam) => {
                    let ok = verify_positive_basis(&fam.omega_set, &fam.expanded()).unwrap().accepted();
                    println!("m = {m}, {v}: {} elements, max degree {}, verified {ok}", fam.polys.len(), fam.max_degree());
                    for b in &fam.polys {
                        println!("    {b}");
                    }
                }
                Err(e) => println!("m = {m}, {v}: {e}"),
            }
        }
    }
}
