// Exact arithmetic in Q(√2 + √3): norms, traces, minimal polynomials,
// inverses, and coordinates over a module basis.

use normlds::field::{FieldElement, ModuleBasis, NumberField};
use num_rational::BigRational;

fn run_example() {
    let k = NumberField::parse("x^4 - 10x^2 + 1").unwrap();
    let eta = FieldElement::generator(&k);
    let sqrt2 = FieldElement::parse(&k, "-9/2*t + 1/2*t^3").unwrap();
    let sqrt3 = FieldElement::parse(&k, "11/2*t - 1/2*t^3").unwrap();
    assert_eq!(&sqrt2 + &sqrt3, eta);

    println!("field: {k}");
    println!("N(η) = {}, Tr(η²) = {}", eta.norm(), (&eta * &eta).trace());
    println!("min poly of √2: {}", sqrt2.min_poly().display_with('X'));
    assert_eq!(sqrt2.min_poly().to_integers().unwrap(), [-2, 0, 1].map(Into::into));

    let inv = eta.inverse().unwrap();
    println!("1/η = {inv}");
    assert!((&inv * &eta).is_one());

    // Z[√2, √3] contains elements with half-integral power-basis coordinates
    let ring = ModuleBasis::new(vec![
        FieldElement::one(&k),
        sqrt2.clone(),
        sqrt3.clone(),
        &sqrt2 * &sqrt3,
    ])
    .unwrap();
    let coords = ring.coords_of(&eta.pow(3)).unwrap();
    let shown: Vec<String> = coords.iter().map(ToString::to_string).collect();
    println!("η³ over 1, √2, √3, √6: {}", shown.join(", "));
    let want: Vec<BigRational> = [0, 11, 9, 0].map(|v: i64| BigRational::from_integer(v.into())).to_vec();
    assert_eq!(coords, want);
}

fn main() {
    run_example();
}
