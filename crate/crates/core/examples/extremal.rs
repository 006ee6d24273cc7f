//! Least-degree polynomials vanishing at the nodes and nonnegative on the
//! nonempty gaps, for every type of a given length.

use posbasis::{extremal_poly, NodeSystem, OmegaSeq};

fn main() {
    let len: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let t = NodeSystem::canonical(len - 1);
    for w in OmegaSeq::all_of_len(len) {
        let p = extremal_poly(&w, &t).expect("lengths agree");
        println!("{w}  tau {:>2}  {p}", w.tau());
    }
}
