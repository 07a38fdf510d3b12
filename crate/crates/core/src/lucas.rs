//! Lucas sequences `u_0 = 0, u_1 = 1, u_{k+2} = P u_{k+1} - Q u_k`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Indices below this are computed by plain iteration.
const ITERATION_LIMIT: u64 = 64;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LucasParams {
    p: BigInt,
    q: BigInt,
}

impl LucasParams {
    /// Nonzero coprime `(P, Q)`.
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self> {
        let (p, q) = (p.into(), q.into());
        if p.is_zero() || q.is_zero() {
            return Err(Error::InvalidLucas(format!("parameters must be nonzero, got ({p}, {q})")));
        }
        if !p.gcd(&q).is_one() {
            return Err(Error::InvalidLucas(format!("parameters ({p}, {q}) are not coprime")));
        }
        Ok(Self { p, q })
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }
}

/// A generated prefix `u_0, …, u_{len-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LucasSequence {
    params: LucasParams,
    terms: Vec<BigInt>,
}

impl LucasSequence {
    pub fn generate(params: &LucasParams, len: usize) -> Self {
        let mut terms = Vec::with_capacity(len);
        let (mut a, mut b) = (BigInt::zero(), BigInt::one());
        for _ in 0..len {
            let next = &params.p * &b - &params.q * &a;
            terms.push(std::mem::replace(&mut a, std::mem::replace(&mut b, next)));
        }
        Self { params: params.clone(), terms }
    }

    pub fn params(&self) -> &LucasParams {
        &self.params
    }

    pub fn terms(&self) -> &[BigInt] {
        &self.terms
    }

    pub fn get(&self, k: usize) -> Option<&BigInt> {
        self.terms.get(k)
    }
}

type Mat2 = [[BigInt; 2]; 2];

fn mat_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    [
        [&a[0][0] * &b[0][0] + &a[0][1] * &b[1][0], &a[0][0] * &b[0][1] + &a[0][1] * &b[1][1]],
        [&a[1][0] * &b[0][0] + &a[1][1] * &b[1][0], &a[1][0] * &b[0][1] + &a[1][1] * &b[1][1]],
    ]
}

/// The companion matrix `[[P, -Q], [1, 0]]`.
pub fn companion(params: &LucasParams) -> Mat2 {
    [[params.p.clone(), -&params.q], [BigInt::one(), BigInt::zero()]]
}

/// `A^k` for the companion matrix, by binary exponentiation.
pub fn companion_power(params: &LucasParams, mut k: u64) -> Mat2 {
    let mut acc: Mat2 = [[BigInt::one(), BigInt::zero()], [BigInt::zero(), BigInt::one()]];
    let mut base = companion(params);
    while k > 0 {
        if k & 1 == 1 {
            acc = mat_mul(&acc, &base);
        }
        k >>= 1;
        if k > 0 {
            base = mat_mul(&base, &base);
        }
    }
    acc
}

/// `u_k`.
pub fn lucas_u(params: &LucasParams, k: u64) -> BigInt {
    if k < ITERATION_LIMIT {
        let (mut a, mut b) = (BigInt::zero(), BigInt::one());
        for _ in 0..k {
            let next = &params.p * &b - &params.q * &a;
            a = std::mem::replace(&mut b, next);
        }
        a
    } else {
        // lower-left entry of A^k
        let [_, [u, _]] = companion_power(params, k);
        u
    }
}

/// `a·u_n` for `k = 2n` and `a·(u_{n+1} + u_n)` for `k = 2n + 1`; requires
/// `Q = 1`.
pub fn odd_even_closed_form(params: &LucasParams, a: &BigInt, k: u64) -> Result<BigInt> {
    if !params.q.is_one() {
        return Err(Error::InvalidLucas(format!("closed form needs Q = 1, got Q = {}", params.q)));
    }
    let n = k / 2;
    let value = if k.is_multiple_of(2) {
        lucas_u(params, n)
    } else {
        lucas_u(params, n + 1) + lucas_u(params, n)
    };
    Ok(a * value)
}

/// Checks `u_{2n+1} = u_{n+1}² - u_n²`; requires `Q = 1`.
pub fn check_identity_u2n1(params: &LucasParams, n: u64) -> Result<bool> {
    if !params.q.is_one() {
        return Err(Error::InvalidLucas(format!("identity needs Q = 1, got Q = {}", params.q)));
    }
    let lhs = lucas_u(params, 2 * n + 1);
    let (a, b) = (lucas_u(params, n + 1), lucas_u(params, n));
    Ok(lhs == &a * &a - &b * &b)
}
