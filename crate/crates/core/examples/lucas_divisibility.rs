// Lucas sequences, their fast evaluation, and the divisibility property.

use normlds::lucas::{check_identity_u2n1, lucas_u, LucasParams, LucasSequence};
use num_integer::Integer;

fn run_example() {
    let fib = LucasParams::new(1, -1).unwrap();
    let prefix = LucasSequence::generate(&fib, 10);
    println!("Fibonacci: {:?}", prefix.terms().iter().map(ToString::to_string).collect::<Vec<_>>());

    let p = LucasParams::new(10, 1).unwrap();
    let seq = LucasSequence::generate(&p, 121);
    for m in 1..=40usize {
        for n in 1..=120 / m {
            assert!(seq.terms()[m * n].is_multiple_of(&seq.terms()[m]));
        }
    }
    println!("u_m | u_mn for (P, Q) = (10, 1), mn ≤ 120");

    println!("u_200 for (10, 1) has {} digits", lucas_u(&p, 200).to_string().len());
    assert!((0..=50).all(|n| check_identity_u2n1(&p, n).unwrap()));
}

fn main() {
    run_example();
}
