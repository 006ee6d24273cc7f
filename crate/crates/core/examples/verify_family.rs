//! The verifier on a positive basis and on three families that are not.

use posbasis::{parse_set_expr, verify_positive_basis, Polynomial};

fn main() {
    let cases = [
        ("[0,2]", vec![vec![2, -5, 4, -1], vec![0, 2, -1], vec![0, 1, -2, 1]], "interval basis, m = 3"),
        ("[-1,1]", vec![vec![1, -2, 1], vec![1, 0, -1], vec![1, 2, 1]], "Bernstein E_2"),
        ("[0,1]", vec![vec![0, 0, 1], vec![0, 0, 1]], "repeated member"),
        ("[0,1] U {2}", vec![vec![0, 1, -1], vec![0, 1]], "negative at 2"),
    ];
    for (set, coeffs, label) in cases {
        let set = parse_set_expr(set).unwrap();
        let polys: Vec<Polynomial> = coeffs.iter().map(|c| Polynomial::from_ints(c)).collect();
        let report = verify_positive_basis(&set, &polys).unwrap();
        println!("{label} on {set}: {}", report.verdict);
        for r in &report.reasons {
            println!("    {r}");
        }
    }
}
