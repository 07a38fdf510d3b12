// A linear form whose trace sequence collapses to zero, and the minimal
// order detector that tells it apart from a full-order coordinate sequence.

use normlds::basis::quartic_module_construct;
use normlds::coordseq::{generate, minimal_order};
use normlds::field::{trace_in_quadratic_extension, FieldElement, NumberField};
use num_bigint::BigInt;

fn run_example() {
    let k = NumberField::parse("x^4 - 10x^2 + 1").unwrap();
    let eta = FieldElement::generator(&k);
    let zero = FieldElement::zero(&k);
    let five = BigInt::from(5);
    // Tr over Q(√2, √3, √5) of √5·η^k
    let seq: Vec<BigInt> = (0..=20)
        .map(|e| trace_in_quadratic_extension(&zero, &eta.pow(e), &five).unwrap().to_integer())
        .collect();
    let degenerate = minimal_order(&seq).unwrap();
    println!("Tr(√5·η^k), k ≤ 20: all zero = {}, minimal order {}", seq.iter().all(|v| v == &BigInt::from(0)), degenerate.order);
    assert_eq!(degenerate.order, 0);

    let c = quartic_module_construct(&FieldElement::one(&k), &eta).unwrap();
    let x1 = generate(&FieldElement::one(&k), &eta, &c.basis, 20).unwrap().column(0);
    let full = minimal_order(&x1).unwrap();
    println!("x1 of the power-module basis: minimal order {}", full.order);
    assert_eq!(full.order, 4);
}

fn main() {
    run_example();
}
