//! Exact root isolation, sign reports and the unit-disk test.

use posbasis::rational::int;
use posbasis::{is_nonneg_on, parse_set_expr, real_roots, schur_cohn_has_root_in_closed_unit_disk, Polynomial};

fn main() {
    // (3x - 1)(x^2 - 2)(x - 2)
    let p = &(&Polynomial::from_ints(&[-1, 3]) * &Polynomial::from_ints(&[-2, 0, 1])) * &Polynomial::from_ints(&[-2, 1]);
    println!("p = {p}");
    for r in real_roots(&p, &int(-3), &int(3)).unwrap() {
        println!("  {}", serde_json::to_string(&r).unwrap());
    }
    let set = parse_set_expr("[-1,0] U [1/3,1]").unwrap();
    println!("p >= 0 on {set}: {}", is_nonneg_on(&p, &set).unwrap());
    println!("root in closed unit disk: {}", schur_cohn_has_root_in_closed_unit_disk(&p).unwrap());
    let q = Polynomial::from_ints(&[2, 0, 1]);
    println!("{q}: root in closed unit disk: {}", schur_cohn_has_root_in_closed_unit_disk(&q).unwrap());
}
