// The basis of β·Z[η] for η = √2 + √3 and the Lucas closed forms of all
// four coordinate sequences.

use normlds::basis::{power_module_closed_form, quartic_module_construct};
use normlds::coordseq::{generate, verify_recurrence};
use normlds::field::{FieldElement, NumberField};

fn run_example() {
    let k = NumberField::parse("x^4 - 10x^2 + 1").unwrap();
    let eta = FieldElement::generator(&k);
    let beta = FieldElement::parse(&k, "1 + t").unwrap();
    let c = quartic_module_construct(&beta, &eta).unwrap();
    let report = generate(&beta, &eta, &c.basis, 40).unwrap();
    assert!(verify_recurrence(&report));

    for (i, w) in c.basis.vectors().iter().enumerate() {
        println!("w{} = {w}", i + 1);
    }
    for kk in 2..=40 {
        let closed = power_module_closed_form(&c.t_trace, kk as u64).unwrap();
        assert_eq!(report.terms[kk], closed.to_vec());
    }
    for (i, v) in report.lds.iter().enumerate() {
        println!("x{}: {:?}", i + 1, v);
    }
    assert!(report.lds[0].holds());
}

fn main() {
    run_example();
}
