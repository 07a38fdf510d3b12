// d_k(α) for α = 3 + 2√2: its order-4 recurrence, divisibility, and a
// basis of Z[√α] whose first coordinate sequence is d_k / d_1.

use normlds::dk::{dk_recurrence_check, match_prop_c, DkSequence};
use normlds::field::{FieldElement, ModuleBasis, NumberField};

fn run_example() {
    let k = NumberField::parse("x^2 - 2").unwrap();
    let ring = ModuleBasis::power_basis(&k);
    let alpha = FieldElement::parse(&k, "3 + 2t").unwrap();
    let seq = DkSequence::compute(&alpha, &ring, 40).unwrap();
    println!("d_1..d_8: {:?}", seq.terms[1..=8].iter().map(ToString::to_string).collect::<Vec<_>>());
    assert!(dk_recurrence_check(&seq, 40).unwrap());
    assert_eq!(seq.divisibility_failure(), None);

    let m = match_prop_c(&alpha, &ring, 30).unwrap();
    println!("basis over Z[t]/({}):", m.algebra);
    for w in m.basis.vectors() {
        println!("  {w}");
    }
    assert!(m.matches());
    println!("x1 = d_k / {} for k ≤ 30", m.d1);
}

fn main() {
    run_example();
}
