// The Smith-form criterion and the explicit bases of Z[√m, √(m+1)].

use normlds::basis::{snf_criterion, sqrt_family, thm2_family_basis};
use normlds::coordseq::{generate, verify_lds};
use normlds::field::FieldElement;

fn run_example() {
    for m in [2, 5, 6, 7, 10] {
        let fam = sqrt_family(m).unwrap();
        let one = FieldElement::one(&fam.field);
        let crit = snf_criterion(&fam.surds, &one, &fam.eta).unwrap();
        let c = thm2_family_basis(m).unwrap();
        let x1 = generate(&one, &fam.eta, &c.basis, 100).unwrap().column(0);
        let verdict = verify_lds(&x1, 100).unwrap();
        println!(
            "m = {m}: δ = {:?}, χ₄ = {}, x1 starts {:?}, {verdict:?}",
            crit.deltas.iter().map(ToString::to_string).collect::<Vec<_>>(),
            crit.chi[3],
            x1[..4].iter().map(ToString::to_string).collect::<Vec<_>>()
        );
        assert!(verdict.holds());
        assert_eq!(x1[..4].to_vec(), c.expected_initial());
    }
    assert!(thm2_family_basis(3).is_err());
}

fn main() {
    run_example();
}
