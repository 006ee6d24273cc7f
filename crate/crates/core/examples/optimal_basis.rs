//! Build a positive basis of least maximal degree and check it.
//!
//!     cargo run --example optimal_basis -- "[0,1/2] U {1} U {2} U [3,4]" 5

use posbasis::{basis_for_nodes, dn, omega_type, optimal_nodes, parse_set_expr, verify_positive_basis};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let set = parse_set_expr(&args.next().unwrap_or_else(|| "{0} U [1,2] U {3}".into()))?;
    let n: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(5);

    let branch = dn(&set, n)?;
    let t = optimal_nodes(&set, n)?;
    let w = omega_type(&set, &t)?;
    println!("set {set}, n = {n}: d_n = {} ({:?})", branch.degree, branch.tag);
    println!("nodes {:?}, type {w}, sigma {}", t.nodes().iter().map(ToString::to_string).collect::<Vec<_>>(), w.sigma()?);

    let family = basis_for_nodes(&set, &t)?;
    for (j, b) in family.polys.iter().enumerate() {
        println!("  b_{} = {b}", j + 1);
    }
    let report = verify_positive_basis(&set, &family.expanded())?;
    println!("max degree {}, verdict {}", family.max_degree(), report.verdict);
    Ok(())
}
