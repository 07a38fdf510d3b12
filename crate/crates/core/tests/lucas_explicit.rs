use normlds::field::{FieldElement, NumberField};
use normlds::lucas::{lucas_u, LucasParams};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

proptest! {
    // u_k·(θ - θ̄) = θ^k - θ̄^k with θ, θ̄ the roots of X² - PX + Q
    #[test]
    fn binet_form(p in -15i64..15, q in -15i64..15, k in 0u64..90) {
        prop_assume!(p != 0 && q != 0 && num_integer::gcd(p, q) == 1);
        let field = NumberField::from_i64(&[q, -p, 1]);
        prop_assume!(field.is_ok());
        let field = field.unwrap();
        let theta = FieldElement::generator(&field);
        let conj = &FieldElement::from_integer(&field, p) - &theta;
        let params = LucasParams::new(p, q).unwrap();
        let u = BigRational::from_integer(lucas_u(&params, k));
        let lhs = (&theta - &conj).scale(&u);
        let rhs = &theta.pow(k) - &conj.pow(k);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn fast_path_matches_iteration(p in 1i64..20, q in -10i64..10, k in 60u64..140) {
        prop_assume!(q != 0 && num_integer::gcd(p, q) == 1);
        let params = LucasParams::new(p, q).unwrap();
        let (mut a, mut b) = (BigInt::from(0), BigInt::from(1));
        for _ in 0..k {
            let next = BigInt::from(p) * &b - BigInt::from(q) * &a;
            a = std::mem::replace(&mut b, next);
        }
        prop_assert_eq!(lucas_u(&params, k), a);
    }
}
