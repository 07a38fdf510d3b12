//! Basis constructions that make the first coordinate sequence of
//! `α(k) = β·η^k` a linear divisibility sequence.
//!
//! * [`quad_construct`]: real quadratic fields. A column Hermite form of the
//!   matrix carrying `β, βε` followed by the swap `[[1, 1], [1, 0]]` forces
//!   `x_1(0) = 0`, so `x_1` is a multiple of a Lucas sequence.
//! * [`quartic_module_construct`]: `β·Z[η]` for a quartic unit `η` whose
//!   square `ε` is a norm-one unit of a quadratic subfield. A fixed
//!   unimodular matrix gives `x_1` the initial terms `(0, 1, 1, T+1)`.
//! * [`snf_criterion`] / [`quartic_full_construct`]: the same initial terms
//!   (scaled by `δ_4`) over an arbitrary full module, decided and built from
//!   a Smith decomposition of the matrix carrying `β, βη, βη², βη³`.
//! * [`thm2_family_basis`]: the closed-form basis of `Z[√m, √(m+1)]`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::field::{is_positive_unit, FieldElement, ModuleBasis, NumberField};
use crate::linalg::{
    complete_primitive, det, ext_gcd, hnf_column, inverse_unimodular, snf, IntMatrix,
    SnfDecomposition,
};
use crate::lucas::{lucas_u, LucasParams};

/// Which construction produced an [`LdsConstruction`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Source {
    QuadraticHermite,
    QuarticPowerModule,
    QuarticFullModule,
    SqrtFamily,
}

impl Source {
    pub fn tag(self) -> &'static str {
        match self {
            Source::QuadraticHermite => "quadratic-hermite",
            Source::QuarticPowerModule => "quartic-power-module",
            Source::QuarticFullModule => "quartic-full-module",
            Source::SqrtFamily => "sqrt-family",
        }
    }
}

/// A basis `W` of a module together with the data fixing `x_1`'s initial
/// terms.
#[derive(Clone, Debug)]
pub struct LdsConstruction {
    /// The constructed basis `W`.
    pub basis: ModuleBasis,
    /// The basis `W` was derived from.
    pub input_basis: ModuleBasis,
    /// Row `i` expresses `w_i` over `input_basis`; unimodular.
    pub change: IntMatrix,
    /// The common factor `a` of the initial terms.
    pub scale: BigInt,
    /// `T = ε + ε̄` (the trace of the unit itself in the quadratic case).
    pub t_trace: BigInt,
    pub source: Source,
    pub beta: FieldElement,
    /// The unit whose powers are expanded (`ε` for quadratic, `η` for
    /// quartic constructions).
    pub unit: FieldElement,
}

impl LdsConstruction {
    /// The initial terms `x_1` is built to have: `(0, a)` for quadratic
    /// constructions and `(0, a, a, a(T+1))` for quartic ones.
    pub fn expected_initial(&self) -> Vec<BigInt> {
        let a = &self.scale;
        match self.source {
            Source::QuadraticHermite => vec![BigInt::zero(), a.clone()],
            _ => vec![BigInt::zero(), a.clone(), a.clone(), a * (&self.t_trace + 1)],
        }
    }

    /// Lucas parameters `(T, N(ε))` governing `x_1`.
    pub fn lucas_params(&self) -> Result<LucasParams> {
        let norm = match self.source {
            Source::QuadraticHermite => self.unit.norm(),
            _ => BigRational::one(),
        };
        LucasParams::new(self.t_trace.clone(), norm.to_integer())
    }
}

fn is_square(n: &BigInt) -> bool {
    !n.is_negative() && {
        let r = n.sqrt();
        &r * &r == *n
    }
}

fn integer(q: &BigRational, what: &str) -> Result<BigInt> {
    if q.is_integer() {
        Ok(q.to_integer())
    } else {
        Err(Error::NotIntegral(what.to_string()))
    }
}

/// Quadratic construction: `x_1(0) = 0` and `x_1(k) = a_22·u_k`.
pub fn quad_construct(
    tbasis: &ModuleBasis,
    beta: &FieldElement,
    eps: &FieldElement,
) -> Result<LdsConstruction> {
    let field = tbasis.field();
    if field.degree() != 2 {
        return Err(Error::Precondition("quadratic construction needs a quadratic field".into()));
    }
    let f = field.modulus();
    if (&f[1] * &f[1] - BigInt::from(4) * &f[0]) <= BigInt::zero() {
        return Err(Error::Precondition("field is not real quadratic".into()));
    }
    let beta_row = tbasis
        .integral_coords(beta)
        .map_err(|_| Error::NotIntegral(format!("β = {beta} is not in the module")))?;
    if !eps.norm().is_one() || !tbasis.is_multiplier(eps)? {
        return Err(Error::NotAUnit);
    }
    if eps.min_poly().degree() != Some(2) {
        return Err(Error::Precondition("ε must be a nontorsion unit".into()));
    }
    let beta_eps_row = tbasis.integral_coords(&beta.checked_mul(eps)?)?;
    let b = IntMatrix::from_rows(vec![beta_row, beta_eps_row])?;
    let hnf = hnf_column(&b).map_err(|_| Error::Singular)?;
    let a22 = hnf.h.get(1, 1).clone();

    // v = C^{-1} t, then w = [[1, 1], [1, 0]] v.
    let swap = IntMatrix::from_i64(&[&[1, 1], &[1, 0]]);
    let mut change = &swap * &inverse_unimodular(&hnf.c)?;
    let mut scale = a22;
    if scale.is_negative() {
        // w_1 -> -w_1 flips the sign of x_1
        for j in 0..2 {
            let v = -change.get(0, j);
            change.set(0, j, v);
        }
        scale = -scale;
    }
    let basis = tbasis.transform(&change)?;
    let t_trace = integer(&eps.trace(), "trace of ε")?;
    Ok(LdsConstruction {
        basis,
        input_basis: tbasis.clone(),
        change,
        scale,
        t_trace,
        source: Source::QuadraticHermite,
        beta: beta.clone(),
        unit: eps.clone(),
    })
}

/// Checks that `η` is a quartic unit whose square `ε` generates a quadratic
/// subfield with `N(ε) = 1`; returns `T = ε + ε̄`.
pub fn type_b_trace(eta: &FieldElement) -> Result<BigInt> {
    if eta.field().degree() != 4 {
        return Err(Error::NotTypeB("η must live in a quartic field".into()));
    }
    if eta.min_poly().degree() != Some(4) {
        return Err(Error::NotTypeB(format!("{eta} does not have degree 4")));
    }
    let eps = eta * eta;
    let p = eps.min_poly();
    if p.degree() != Some(2) {
        return Err(Error::NotTypeB("η² does not lie in a quadratic subfield".into()));
    }
    let coeffs = p
        .to_integers()
        .ok_or_else(|| Error::NotTypeB("η² is not an algebraic integer".into()))?;
    if !coeffs[0].is_one() {
        return Err(Error::NotTypeB(format!("N(η²) = {} instead of 1", coeffs[0])));
    }
    Ok(-&coeffs[1])
}

/// `A` with `A·(w_1, …, w_4)ᵀ = (β, βη, βη², βη³)ᵀ`.
pub fn power_module_matrix(t: &BigInt) -> IntMatrix {
    let mut a = IntMatrix::from_i64(&[&[0, 0, 1, 0], &[1, 0, 0, 1], &[1, 0, 0, 0], &[0, 1, 0, 0]]);
    a.set(3, 0, t + 1);
    a
}

/// Basis of `β·Z[η]` with `x_1` starting `(0, 1, 1, T+1)`.
pub fn quartic_module_construct(beta: &FieldElement, eta: &FieldElement) -> Result<LdsConstruction> {
    let t = type_b_trace(eta)?;
    if beta.is_zero() {
        return Err(Error::Precondition("β must be nonzero".into()));
    }
    let input = ModuleBasis::powers_of(beta, eta)?;
    let change = inverse_unimodular(&power_module_matrix(&t))?;
    let basis = input.transform(&change)?;
    Ok(LdsConstruction {
        basis,
        input_basis: input,
        change,
        scale: BigInt::one(),
        t_trace: t,
        source: Source::QuarticPowerModule,
        beta: beta.clone(),
        unit: eta.clone(),
    })
}

/// Closed forms of all four coordinates of `β·η^k` over the power-module
/// basis, valid for `k ≥ 2`.
pub fn power_module_closed_form(t: &BigInt, k: u64) -> Result<[BigInt; 4]> {
    if k < 2 {
        return Err(Error::Precondition("closed forms hold for k ≥ 2".into()));
    }
    let p = LucasParams::new(t.clone(), 1)?;
    let n = k / 2;
    let u = |i: u64| lucas_u(&p, i);
    Ok(if k.is_multiple_of(2) {
        [u(n), BigInt::zero(), -u(n - 1), BigInt::zero()]
    } else {
        [u(n + 1) + u(n), u(n), BigInt::zero(), -u(n - 1)]
    })
}

/// Smith-form data deciding whether a full module admits a basis with
/// `x_1` starting `(0, a, a, a(T+1))`.
#[derive(Clone, Debug)]
pub struct SnfCriterion {
    /// Rows: coordinates of `β, βη, βη², βη³` over the module basis.
    pub b: IntMatrix,
    pub snf: SnfDecomposition,
    pub chi: [BigInt; 4],
    pub deltas: [BigInt; 4],
    pub t_trace: BigInt,
    pub satisfied: bool,
}

impl SnfCriterion {
    /// `δ_4 / δ_1`.
    pub fn ratio(&self) -> BigInt {
        &self.deltas[3] / &self.deltas[0]
    }
}

/// Gcd of `values` with Bézout coefficients.
fn bezout(values: &[BigInt]) -> (BigInt, Vec<BigInt>) {
    let mut g = BigInt::zero();
    let mut coeffs: Vec<BigInt> = Vec::with_capacity(values.len());
    for v in values {
        let (ng, s, t) = ext_gcd(&g, v);
        for c in coeffs.iter_mut() {
            *c *= &s;
        }
        coeffs.push(t);
        g = ng;
    }
    (g, coeffs)
}

fn chi_of(x: &IntMatrix, i: usize, t: &BigInt) -> BigInt {
    x.get(i, 1) + x.get(i, 2) + (t + 1) * x.get(i, 3)
}

/// Computes the Smith decomposition of the matrix carrying
/// `β, βη, βη², βη³` and the gcd test on `χ_4`.
///
/// Row 4 of the left witness is only determined up to adding
/// `c·(δ_4/δ_i)·row_i` and sign; it is normalized so that `χ_4` is the
/// least nonnegative value in its class coprime to `δ_4/δ_1` when one
/// exists, which makes the verdict independent of the elimination order.
pub fn snf_criterion(
    tbasis: &ModuleBasis,
    beta: &FieldElement,
    eta: &FieldElement,
) -> Result<SnfCriterion> {
    let t = type_b_trace(eta)?;
    let powers = ModuleBasis::powers_of(beta, eta)?;
    let rows = powers
        .vectors()
        .iter()
        .enumerate()
        .map(|(j, p)| {
            tbasis
                .integral_coords(p)
                .map_err(|_| Error::NotIntegral(format!("β·η^{j} is not in the module")))
        })
        .collect::<Result<Vec<_>>>()?;
    criterion_from_matrix(IntMatrix::from_rows(rows)?, t)
}

/// The Smith-form test for an explicit 4×4 matrix `B` and trace `T`.
pub fn criterion_from_matrix(b: IntMatrix, t: BigInt) -> Result<SnfCriterion> {
    if b.rows() != 4 || b.cols() != 4 {
        return Err(Error::Dimension(format!("criterion needs a 4x4 matrix, got {}x{}", b.rows(), b.cols())));
    }
    let mut dec = snf(&b);
    if dec.d.iter().any(Zero::is_zero) {
        return Err(Error::Singular);
    }
    let deltas: [BigInt; 4] = dec.d.clone().try_into().expect("4x4 matrix");
    let ratio = &deltas[3] / &deltas[0];

    let chi_lower: Vec<BigInt> = (0..3).map(|i| chi_of(&dec.x, i, &t)).collect();
    let shifts: Vec<BigInt> = (0..3).map(|i| &deltas[3] / &deltas[i] * &chi_lower[i]).collect();
    let (g, bez) = bezout(&shifts);

    let mut chi4 = chi_of(&dec.x, 3, &t);
    if chi4.is_negative() {
        negate_row4(&mut dec);
        chi4 = -chi4;
    }
    if !g.is_zero() {
        let base = chi4.mod_floor(&g);
        let mut target = base.clone();
        let mut candidate = base;
        let mut steps = BigInt::zero();
        while steps < ratio {
            if candidate.gcd(&ratio).is_one() {
                target = candidate;
                break;
            }
            candidate += &g;
            steps += 1;
        }
        // target - chi4 = s·g = Σ s·bez_i·shift_i
        let s = (&target - &chi4) / &g;
        for i in 0..3 {
            let c = &s * &bez[i];
            if c.is_zero() {
                continue;
            }
            let row_factor = &c * (&deltas[3] / &deltas[i]);
            for j in 0..4 {
                let v = dec.x.get(3, j) + &row_factor * dec.x.get(i, j);
                dec.x.set(3, j, v);
            }
            for r in 0..4 {
                let v = dec.y.get(r, i) - &c * dec.y.get(r, 3);
                dec.y.set(r, i, v);
            }
        }
        chi4 = chi_of(&dec.x, 3, &t);
        debug_assert_eq!(chi4, target);
    }
    if &(&dec.x * &b) * &dec.y != dec.diagonal_matrix() {
        return Err(Error::Invariant("normalized Smith witness no longer diagonalizes B".into()));
    }
    let chi = [chi_lower[0].clone(), chi_lower[1].clone(), chi_lower[2].clone(), chi4];
    let satisfied = chi[3].gcd(&ratio).is_one();
    Ok(SnfCriterion { b, snf: dec, chi, deltas, t_trace: t, satisfied })
}

fn negate_row4(dec: &mut SnfDecomposition) {
    for j in 0..4 {
        let v = -dec.x.get(3, j);
        dec.x.set(3, j, v);
        let v = -dec.y.get(j, 3);
        dec.y.set(j, 3, v);
    }
}

/// Result of the full-module construction.
#[derive(Clone, Debug)]
pub enum FullConstruction {
    Built(Box<LdsConstruction>),
    /// The gcd test failed; no basis with the required initial terms exists.
    CriterionFailed(Box<SnfCriterion>),
}

impl FullConstruction {
    pub fn built(self) -> Option<LdsConstruction> {
        match self {
            FullConstruction::Built(c) => Some(*c),
            FullConstruction::CriterionFailed(_) => None,
        }
    }
}

/// Basis of the full module spanned by `tbasis` with `x_1` starting
/// `(0, δ_4, δ_4, δ_4(T+1))`, or the failing criterion.
pub fn quartic_full_construct(
    tbasis: &ModuleBasis,
    beta: &FieldElement,
    eta: &FieldElement,
) -> Result<FullConstruction> {
    let crit = snf_criterion(tbasis, beta, eta)?;
    if !crit.satisfied {
        return Ok(FullConstruction::CriterionFailed(Box::new(crit)));
    }
    let d = &crit.deltas;
    let c1: Vec<BigInt> = (0..3)
        .map(|i| &d[3] / &d[i] * &crit.chi[i])
        .chain(std::iter::once(crit.chi[3].clone()))
        .collect();
    let c = complete_primitive(&c1)
        .map_err(|e| Error::Invariant(format!("criterion holds but first column is not primitive: {e}")))?;
    let x_inv = inverse_unimodular(&crit.snf.x)?;
    let a = &(&x_inv * &IntMatrix::diagonal(d)) * &c;

    let t = &crit.t_trace;
    let expected = vec![BigInt::zero(), d[3].clone(), d[3].clone(), &d[3] * (t + 1)];
    if a.column(0) != expected {
        return Err(Error::Invariant(format!("first column of A is {:?}", a.column(0))));
    }
    let b_inv = crit.b.to_rational().inverse().ok_or(Error::Singular)?;
    let z = b_inv
        .mul(&a.to_rational())
        .to_integer()
        .ok_or_else(|| Error::Invariant("B^{-1}A is not integral".into()))?;
    if !det(&z)?.abs().is_one() {
        return Err(Error::Invariant("B^{-1}A is not unimodular".into()));
    }
    if z != &crit.snf.y * &c {
        return Err(Error::Invariant("B^{-1}A differs from Y·C".into()));
    }
    let change = inverse_unimodular(&z)?;
    let basis = tbasis.transform(&change)?;
    Ok(FullConstruction::Built(Box::new(LdsConstruction {
        basis,
        input_basis: tbasis.clone(),
        change,
        scale: d[3].clone(),
        t_trace: t.clone(),
        source: Source::QuarticFullModule,
        beta: beta.clone(),
        unit: eta.clone(),
    })))
}

/// The data of `M = Z[√m, √(m+1)]` inside `Q(η)`, `η = √m + √(m+1)`.
#[derive(Clone, Debug)]
pub struct SqrtFamily {
    pub m: BigInt,
    pub field: Arc<NumberField>,
    pub eta: FieldElement,
    /// `1, √m, √n, √(mn)` with `n = m + 1`.
    pub surds: ModuleBasis,
}

/// Builds `K = Q[X]/(X⁴ - 2(2m+1)X² + 1)` with the surds of `Z[√m, √(m+1)]`
/// written in powers of `η`.
pub fn sqrt_family(m: impl Into<BigInt>) -> Result<SqrtFamily> {
    let m = m.into();
    if m < BigInt::from(2) {
        return Err(Error::Precondition("m must be at least 2".into()));
    }
    let n = &m + 1;
    if is_square(&m) || is_square(&n) {
        return Err(Error::Precondition(format!("{m} or {n} is a perfect square")));
    }
    let two_m1 = BigInt::from(2) * &m + 1;
    let field = NumberField::new(vec![
        BigInt::one(),
        BigInt::zero(),
        -BigInt::from(2) * &two_m1,
        BigInt::zero(),
        BigInt::one(),
    ])?;
    let q = |v: BigInt, d: i64| BigRational::new(v, BigInt::from(d));
    let four_m = BigInt::from(4) * &m;
    // η² = (2m+1) + 2√(mn),  η³ = (4m+3)√m + (4m+1)√n
    let sqrt_mn = FieldElement::new(&field, vec![q(-&two_m1, 2), q(0.into(), 1), q(1.into(), 2), q(0.into(), 1)])?;
    let sqrt_m = FieldElement::new(&field, vec![q(0.into(), 1), q(-(&four_m + BigInt::one()), 2), q(0.into(), 1), q(1.into(), 2)])?;
    let sqrt_n = FieldElement::new(&field, vec![q(0.into(), 1), q(&four_m + BigInt::from(3), 2), q(0.into(), 1), q((-1).into(), 2)])?;
    let surds = ModuleBasis::new(vec![FieldElement::one(&field), sqrt_m, sqrt_n, sqrt_mn])?;
    let eta = FieldElement::generator(&field);
    Ok(SqrtFamily { m, field, eta, surds })
}

/// The closed-form basis `{√(mn), √m + √n - 2√(mn), √n, 1}` of
/// `Z[√m, √(m+1)]`, checked against [`quartic_full_construct`].
///
/// Here `T = 2(m+n) = 4m+2`, so `x_1` starts `(0, 2, 2, 2(4m+3))`.
pub fn thm2_family_basis(m: impl Into<BigInt>) -> Result<LdsConstruction> {
    let fam = sqrt_family(m)?;
    let m = &fam.m;
    let two = BigInt::from(2);
    let change = IntMatrix::from_i64(&[&[0, 0, 0, 1], &[0, 1, 1, -2], &[0, 0, 1, 0], &[1, 0, 0, 0]]);
    let basis = fam.surds.transform(&change)?;
    let beta = FieldElement::one(&fam.field);

    let built = quartic_full_construct(&fam.surds, &beta, &fam.eta)?
        .built()
        .ok_or_else(|| Error::Invariant("criterion fails on the √m, √(m+1) family".into()))?;
    if !built.basis.same_module(&basis)? {
        return Err(Error::Invariant("closed-form basis spans a different module".into()));
    }
    Ok(LdsConstruction {
        basis,
        input_basis: fam.surds.clone(),
        change,
        scale: two.clone(),
        t_trace: &two * (&two * m + 1),
        source: Source::SqrtFamily,
        beta,
        unit: fam.eta.clone(),
    })
}

/// Rows: `1, η, η², η³` over `1, √m, √(m+1), √(m(m+1))`, as integer data
/// for any `m`.
pub fn sqrt_family_matrix(m: &BigInt) -> IntMatrix {
    let z = BigInt::zero;
    let four_m = BigInt::from(4) * m;
    IntMatrix::from_rows(vec![
        vec![BigInt::one(), z(), z(), z()],
        vec![z(), BigInt::one(), BigInt::one(), z()],
        vec![BigInt::from(2) * m + 1, z(), z(), BigInt::from(2)],
        vec![z(), &four_m + 3, &four_m + 1, z()],
    ])
    .expect("4x4 rows")
}

/// `η` lies in the positive unit group of `Z[√m, √(m+1)]`.
pub fn sqrt_family_unit_check(fam: &SqrtFamily) -> Result<bool> {
    is_positive_unit(&fam.eta, &fam.surds)
}
