// d_k for α = √(1 + √2): vanishing of the constant coordinate on odd k, the
// discriminant bound, and the set of k with d_k = d_1.

use normlds::dk::{conjecture9_scan, dk_bound_check, discriminant_power_basis, lastprop_scan};
use normlds::field::{FieldElement, ModuleBasis, NumberField};

fn run_example() {
    let k = NumberField::parse("x^4 - 2x^2 - 1").unwrap();
    println!("disc = {}", discriminant_power_basis(&k).unwrap());

    let scan = lastprop_scan(&k, 2, 41, true).unwrap();
    assert!(scan.vanishing);
    assert_eq!(scan.monogenic_ok, Some(true));
    println!("odd k ≤ 41: y1 = 0 and d_k = 1");

    let alpha = FieldElement::generator(&k);
    let ring = ModuleBasis::power_basis(&k);
    assert!(dk_bound_check(&alpha, &ring, 20).unwrap().iter().all(|r| r.holds));

    let hits = conjecture9_scan(&alpha, &ring, 30).unwrap();
    println!("k ≤ 30 with d_k = d_1: {:?} ({:?})", hits.hits, hits.class);
}

fn main() {
    run_example();
}
