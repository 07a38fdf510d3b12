// Determinants, Hermite and Smith forms with their unimodular witnesses,
// and completion of a primitive vector to a unimodular matrix.

use normlds::linalg::{complete_primitive, det, hnf_column, snf, IntMatrix};
use num_bigint::BigInt;

fn run_example() {
    let a = IntMatrix::from_i64(&[&[0, 0, 1, 0], &[1, 0, 0, 1], &[1, 0, 0, 0], &[11, 1, 0, 0]]);
    let d = det(&a).unwrap();
    println!("det A = {d}");
    assert_eq!(d.magnitude(), &1u32.into());

    let b = IntMatrix::from_i64(&[&[2, 1], &[0, 3]]);
    let h = hnf_column(&b).unwrap();
    println!("B·C = H with\nC =\n{}H =\n{}", h.c, h.h);
    assert_eq!(&b * &h.c, h.h);

    // 1, η, η², η³ over 1, √2, √3, √6 with η = √2 + √3
    let fam = IntMatrix::from_i64(&[&[1, 0, 0, 0], &[0, 1, 1, 0], &[5, 0, 0, 2], &[0, 11, 9, 0]]);
    let s = snf(&fam);
    println!("Smith diagonal: {:?}", s.d.iter().map(ToString::to_string).collect::<Vec<_>>());
    assert_eq!(&(&s.x * &fam) * &s.y, s.diagonal_matrix());
    assert_eq!(s.d, [1, 1, 2, 2].map(BigInt::from));

    let v: Vec<BigInt> = [0, 2, 2, 1].map(BigInt::from).to_vec();
    let c = complete_primitive(&v).unwrap();
    println!("completion of (0, 2, 2, 1):\n{c}");
    assert_eq!(c.column(0), v);
}

fn main() {
    run_example();
}
