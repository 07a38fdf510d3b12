// A basis of Z[√2] in which the first coordinate of β·(3 + 2√2)^k is a
// multiple of a Lucas sequence.

use normlds::basis::quad_construct;
use normlds::coordseq::generate;
use normlds::field::{FieldElement, ModuleBasis, NumberField};
use normlds::lucas::lucas_u;

fn run_example() {
    let k = NumberField::parse("x^2 - 2").unwrap();
    let module = ModuleBasis::power_basis(&k);
    let eps = FieldElement::parse(&k, "3 + 2t").unwrap();
    for beta in ["1", "t", "5 - 3t"] {
        let beta = FieldElement::parse(&k, beta).unwrap();
        let c = quad_construct(&module, &beta, &eps).unwrap();
        let x1 = generate(&beta, &eps, &c.basis, 12).unwrap().column(0);
        let p = c.lucas_params().unwrap();
        for (i, v) in x1.iter().enumerate() {
            assert_eq!(*v, &c.scale * lucas_u(&p, i as u64));
        }
        println!(
            "β = {beta}: basis [{}, {}], x1 = {} · u_k: {:?}",
            c.basis.vectors()[0],
            c.basis.vectors()[1],
            c.scale,
            x1.iter().take(6).map(ToString::to_string).collect::<Vec<_>>()
        );
    }
}

fn main() {
    run_example();
}
