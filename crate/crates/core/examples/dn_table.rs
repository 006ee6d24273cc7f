//! d_n and the largest positive-basis dimension in P_m for a few sets.

use posbasis::{dn, max_dim, parse_set_expr};

fn main() {
    for e in ["[0,1]", "[0,1] U [2,3]", "{0} U [1,2] U {3}", "[0,1] U {2} U [3,4] U [5,6]", "{0} U {1} U {2} U {3}"] {
        let set = parse_set_expr(e).unwrap();
        let row: Vec<String> = (1..=8)
            .map(|n| dn(&set, n).map(|b| b.degree.to_string()).unwrap_or_else(|_| "-".into()))
            .collect();
        println!("{e:<32} lambda {}  d_1..d_8: {}", set.lambda(), row.join(" "));
        if set.is_infinite() {
            let dims: Vec<String> = (0..=10).map(|m| max_dim(&set, m).unwrap().to_string()).collect();
            println!("{:<32} max dim for m = 0..10: {}", "", dims.join(" "));
        }
    }
}
