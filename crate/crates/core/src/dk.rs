//! `d_k(α) = max{d : α^k ≡ 1 mod d}` over a ring with a basis starting at 1.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::field::{FieldElement, ModuleBasis, NumberField};
use crate::linalg::{complete_primitive, det, inverse_unimodular, IntMatrix};

/// Coordinates of `α^k - 1` over `ringbasis`, whose first vector must be 1.
fn shifted_coords(power: &FieldElement, ringbasis: &ModuleBasis, k: usize) -> Result<Vec<BigInt>> {
    if !ringbasis.starts_with_one() {
        return Err(Error::RingBasisLacksOne);
    }
    let mut x = ringbasis
        .integral_coords(power)
        .map_err(|_| Error::NotIntegral(format!("α^{k} is not in the ring")))?;
    x[0] -= 1;
    Ok(x)
}

fn gcd_all(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

/// `gcd(x_1(k) - 1, x_2(k), …, x_n(k))`; 0 exactly when `α^k = 1`.
pub fn dk(alpha: &FieldElement, ringbasis: &ModuleBasis, k: usize) -> Result<BigInt> {
    Ok(gcd_all(&shifted_coords(&alpha.pow(k as u64), ringbasis, k)?))
}

/// `d_0, …, d_kmax` for one `α`.
#[derive(Clone, Debug)]
pub struct DkSequence {
    pub alpha: FieldElement,
    pub ringbasis: ModuleBasis,
    /// `terms[k] = d_k`; `d_0 = 0`.
    pub terms: Vec<BigInt>,
    /// `T = α + ᾱ` when `α` is a non-torsion quadratic unit of norm 1.
    pub t_trace: Option<BigInt>,
}

impl DkSequence {
    pub fn compute(alpha: &FieldElement, ringbasis: &ModuleBasis, kmax: usize) -> Result<Self> {
        let mut terms = Vec::with_capacity(kmax + 1);
        let mut power = FieldElement::one(alpha.field());
        for k in 0..=kmax {
            if k > 0 {
                power = power.checked_mul(alpha)?;
            }
            terms.push(gcd_all(&shifted_coords(&power, ringbasis, k)?));
        }
        Ok(Self {
            alpha: alpha.clone(),
            ringbasis: ringbasis.clone(),
            terms,
            t_trace: quadratic_unit_trace(alpha),
        })
    }

    pub fn kmax(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn get(&self, k: usize) -> Option<&BigInt> {
        self.terms.get(k)
    }

    /// Some `α^k = 1` with `1 ≤ k ≤ kmax`.
    pub fn is_torsion(&self) -> bool {
        self.terms.iter().skip(1).any(Zero::is_zero)
    }

    /// First pair `n | m` (both ≥ 1) with `d_n ∤ d_m`.
    pub fn divisibility_failure(&self) -> Option<(usize, usize)> {
        let kmax = self.kmax();
        for n in 1..=kmax {
            for m in (2 * n..=kmax).step_by(n) {
                let (a, b) = (&self.terms[n], &self.terms[m]);
                let ok = if a.is_zero() { b.is_zero() } else { b.is_multiple_of(a) };
                if !ok {
                    return Some((n, m));
                }
            }
        }
        None
    }
}

/// `T` for `α` with minimal polynomial `X² - TX + 1`, `|T| > 2`.
fn quadratic_unit_trace(alpha: &FieldElement) -> Option<BigInt> {
    let p = alpha.min_poly();
    if p.degree() != Some(2) {
        return None;
    }
    let c = p.to_integers()?;
    if !c[0].is_one() || c[1].abs() <= BigInt::from(2) {
        return None;
    }
    Some(-&c[1])
}

/// Checks `d_{k+4} = T·d_{k+2} - d_k` for `1 ≤ k ≤ kmax - 4`.
///
/// Refused unless `α` is a non-torsion quadratic unit of norm 1.
pub fn dk_recurrence_check(seq: &DkSequence, kmax: usize) -> Result<bool> {
    let t = seq.t_trace.as_ref().ok_or_else(|| {
        Error::Precondition("recurrence only applies to quadratic units of norm 1".into())
    })?;
    if kmax > seq.kmax() {
        return Err(Error::InsufficientTerms { needed: kmax + 1, have: seq.terms.len() });
    }
    let d = &seq.terms;
    Ok((1..=kmax.saturating_sub(4)).all(|k| d[k + 4] == t * &d[k + 2] - &d[k]))
}

/// A basis of `Z[η]`, `η² = α`, whose `x_1` reproduces `d_k(α)/d_1(α)`.
#[derive(Clone, Debug)]
pub struct DkBasisMatch {
    /// The ring `Z[X]/(X⁴ - TX² + 1)`, possibly not a field.
    pub algebra: std::sync::Arc<NumberField>,
    pub eta: FieldElement,
    pub basis: ModuleBasis,
    pub d1: BigInt,
    /// `x_1(k)` of `η^k` over `basis`.
    pub x1: Vec<BigInt>,
    /// `d_k / d_1`.
    pub target: Vec<BigInt>,
}

impl DkBasisMatch {
    pub fn matches(&self) -> bool {
        self.x1 == self.target
    }
}

/// Completes `(d_0, …, d_3)/d_1` to a unimodular matrix `A` and changes
/// basis from `{1, η, η², η³}` by `A⁻¹`, then compares `x_1` with
/// `d_k/d_1` for `k ≤ kmax`.
pub fn match_prop_c(alpha: &FieldElement, ringbasis: &ModuleBasis, kmax: usize) -> Result<DkBasisMatch> {
    let t = quadratic_unit_trace(alpha).ok_or_else(|| {
        Error::Precondition("α must be a non-torsion quadratic unit of norm 1".into())
    })?;
    if alpha.field().degree() != 2 {
        return Err(Error::Precondition("α must generate a quadratic field".into()));
    }
    let seq = DkSequence::compute(alpha, ringbasis, kmax.max(3))?;
    let d1 = seq.terms[1].clone();
    let a: Vec<BigInt> = seq.terms[..4].iter().map(|d| d / &d1).collect();
    if seq.terms[..4].iter().any(|d| !d.is_multiple_of(&d1)) {
        return Err(Error::Precondition("d_1 does not divide d_0..d_3".into()));
    }
    let a_mat = complete_primitive(&a).map_err(|_| {
        Error::Precondition(format!("(d_0, …, d_3)/d_1 = {a:?} is not primitive; construction inapplicable"))
    })?;
    let algebra = NumberField::algebra(vec![
        BigInt::one(),
        BigInt::zero(),
        -&t,
        BigInt::zero(),
        BigInt::one(),
    ])?;
    let eta = FieldElement::generator(&algebra);
    let basis = ModuleBasis::power_basis(&algebra).transform(&inverse_unimodular(&a_mat)?)?;
    let mut x1 = Vec::with_capacity(kmax + 1);
    let mut power = FieldElement::one(&algebra);
    for k in 0..=kmax {
        if k > 0 {
            power = power.checked_mul(&eta)?;
        }
        x1.push(basis.integral_coords(&power)?[0].clone());
    }
    let target = seq.terms[..=kmax].iter().map(|d| d / &d1).collect();
    Ok(DkBasisMatch { algebra, eta, basis, d1, x1, target })
}

/// Discriminant of a monic integer polynomial (lowest degree first) via the
/// Sylvester determinant of `f` and `f'`.
pub fn discriminant(f: &[BigInt]) -> Result<BigInt> {
    let n = f.len().checked_sub(1).filter(|&n| n >= 1).ok_or_else(|| {
        Error::InvalidPolynomial("discriminant needs degree at least 1".into())
    })?;
    if n == 1 {
        return Ok(BigInt::one());
    }
    let df: Vec<BigInt> = (1..=n).map(|i| &f[i] * BigInt::from(i)).collect();
    let size = 2 * n - 1;
    let mut s = IntMatrix::zeros(size, size);
    // rows hold coefficients highest degree first
    for r in 0..n - 1 {
        for (j, c) in f.iter().rev().enumerate() {
            s.set(r, r + j, c.clone());
        }
    }
    for r in 0..n {
        for (j, c) in df.iter().rev().enumerate() {
            s.set(n - 1 + r, r + j, c.clone());
        }
    }
    let res = det(&s)?;
    let sign = if (n * (n - 1) / 2) % 2 == 0 { BigInt::one() } else { -BigInt::one() };
    Ok(sign * res / &f[n])
}

/// `disc(1, θ, …, θ^{n-1})` for the generator `θ` of `field`.
pub fn discriminant_power_basis(field: &NumberField) -> Result<BigInt> {
    discriminant(field.modulus())
}

/// One index of a [`lastprop_scan`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VanishingRow {
    pub k: usize,
    /// Constant coordinate of `α^k` over `{1, α, …}`.
    pub y1: BigInt,
    /// `d̃_k` over `Z[α]`.
    pub d_tilde: BigInt,
}

#[derive(Clone, Debug)]
pub struct VanishingReport {
    pub t: usize,
    pub discriminant: BigInt,
    pub rows: Vec<VanishingRow>,
    /// Whether `y_1(k) = 0` on every scanned index.
    pub vanishing: bool,
    /// With a monogenic assertion, whether `d_k = 1` on every scanned index.
    pub monogenic_ok: Option<bool>,
}

/// Scans `k ≡ 1 (mod t)`, `k ≤ nmax`, for `f = X^n - s_1 X^{n-1} - … - s_n`
/// with `s_i = 0` whenever `t ∤ i`.
pub fn lastprop_scan(field: &NumberField, t: usize, nmax: usize, monogenic: bool) -> Result<VanishingReport> {
    let n = field.degree();
    if t == 0 || !n.is_multiple_of(t) {
        return Err(Error::Precondition(format!("t = {t} does not divide the degree {n}")));
    }
    let f = field.modulus();
    // s_i is minus the coefficient of X^{n-i}
    if let Some(i) = (1..=n).find(|i| i % t != 0 && !f[n - i].is_zero()) {
        return Err(Error::Precondition(format!("s_{i} = {} is nonzero but {t} ∤ {i}", -&f[n - i])));
    }
    let field = std::sync::Arc::new(field.clone());
    let alpha = FieldElement::generator(&field);
    let power_basis = ModuleBasis::power_basis(&field);
    let mut rows = Vec::new();
    for k in (1..=nmax).step_by(t) {
        let p = alpha.pow(k as u64);
        let y = power_basis.integral_coords(&p)?;
        let d_tilde = dk(&alpha, &power_basis, k)?;
        rows.push(VanishingRow { k, y1: y[0].clone(), d_tilde });
    }
    let vanishing = rows.iter().all(|r| r.y1.is_zero());
    // over a monogenic ring d_k and d̃_k coincide
    let monogenic_ok = monogenic.then(|| rows.iter().all(|r| r.d_tilde.is_one()));
    Ok(VanishingReport {
        t,
        discriminant: discriminant_power_basis(&field)?,
        rows,
        vanishing,
        monogenic_ok,
    })
}

/// `d_k` over a ring against `|Δ|·d̃_k` over `Z[α]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundRow {
    pub k: usize,
    pub d: BigInt,
    pub d_tilde: BigInt,
    pub holds: bool,
}

/// Compares `d_k(α)` over `ringbasis` with `|disc(1, α, …)|·d̃_k(α)` for
/// `1 ≤ k ≤ kmax`. `α` must generate the field.
pub fn dk_bound_check(alpha: &FieldElement, ringbasis: &ModuleBasis, kmax: usize) -> Result<Vec<BoundRow>> {
    let field = alpha.field();
    let mp = alpha.min_poly();
    if mp.degree() != Some(field.degree()) {
        return Err(Error::Precondition("α must generate the field".into()));
    }
    let coeffs = mp
        .to_integers()
        .ok_or_else(|| Error::NotIntegral("α is not an algebraic integer".into()))?;
    let disc = discriminant(&coeffs)?.abs();
    let one = FieldElement::one(field);
    let z_alpha = ModuleBasis::powers_of(&one, alpha)?;
    (1..=kmax)
        .map(|k| {
            let d = dk(alpha, ringbasis, k)?;
            let d_tilde = dk(alpha, &z_alpha, k)?;
            let holds = d <= &disc * &d_tilde;
            Ok(BoundRow { k, d, d_tilde, holds })
        })
        .collect()
}

/// Which hypothesis of the `d_k = d_1` infinitude conjecture applies,
/// checked for `r ≤ CONJ9_POWER_LIMIT`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Conj9Class {
    /// `[Q(α^r) : Q] ≥ 3` for every checked `r`.
    DegreeAtLeastThree,
    /// `[Q(α^r) : Q] ≥ 2` for every checked `r` and `N(α) ≠ ±1`.
    NonUnitDegreeTwo,
    Excluded,
}

pub const CONJ9_POWER_LIMIT: u64 = 12;

#[derive(Clone, Debug)]
pub struct Conj9Report {
    pub d1: BigInt,
    /// All `1 ≤ k ≤ kmax` with `d_k = d_1`.
    pub hits: Vec<usize>,
    pub kmax: usize,
    /// `hits.len() / kmax`.
    pub density: BigRational,
    pub class: Conj9Class,
}

/// Lists `k ≤ kmax` with `d_k = d_1`. Exploratory; no claim is made.
pub fn conjecture9_scan(alpha: &FieldElement, ringbasis: &ModuleBasis, kmax: usize) -> Result<Conj9Report> {
    let seq = DkSequence::compute(alpha, ringbasis, kmax.max(1))?;
    let d1 = seq.terms[1].clone();
    let hits: Vec<usize> = (1..=kmax).filter(|&k| seq.terms[k] == d1).collect();
    let density = if kmax == 0 {
        BigRational::zero()
    } else {
        BigRational::new(BigInt::from(hits.len()), BigInt::from(kmax))
    };
    Ok(Conj9Report { d1, hits, kmax, density, class: classify_conj9(alpha) })
}

fn classify_conj9(alpha: &FieldElement) -> Conj9Class {
    let min_degree = (1..=CONJ9_POWER_LIMIT)
        .map(|r| alpha.pow(r).min_poly().degree().unwrap_or(0))
        .min()
        .unwrap_or(0);
    let norm = alpha.norm();
    if min_degree >= 3 {
        Conj9Class::DegreeAtLeastThree
    } else if min_degree >= 2 && norm.abs() != BigRational::one() {
        Conj9Class::NonUnitDegreeTwo
    } else {
        Conj9Class::Excluded
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().copied().map(BigInt::from).collect()
    }

    fn sqrt2() -> (std::sync::Arc<NumberField>, ModuleBasis, FieldElement) {
        let k = NumberField::from_i64(&[-2, 0, 1]).unwrap();
        let alpha = FieldElement::parse(&k, "3 + 2t").unwrap();
        (k.clone(), ModuleBasis::power_basis(&k), alpha)
    }

    #[test]
    fn silver_ratio_terms() {
        let (_, ring, alpha) = sqrt2();
        let seq = DkSequence::compute(&alpha, &ring, 7).unwrap();
        assert_eq!(seq.terms, ints(&[0, 2, 4, 14, 24, 82, 140, 478]));
        assert_eq!(dk(&alpha, &ring, 3).unwrap(), BigInt::from(14));
        assert_eq!(seq.t_trace, Some(BigInt::from(6)));
        assert!(dk_recurrence_check(&seq, 7).unwrap());
    }

    #[test]
    fn torsion_and_bad_ring() {
        let (k, ring, _) = sqrt2();
        let one = FieldElement::one(&k);
        let seq = DkSequence::compute(&one, &ring, 5).unwrap();
        assert!(seq.is_torsion());
        assert!(seq.terms.iter().all(Zero::is_zero));
        assert!(matches!(dk_recurrence_check(&seq, 5), Err(Error::Precondition(_))));
        let shifted = ModuleBasis::parse(&k, &["t", "1"]).unwrap();
        assert!(matches!(dk(&one, &shifted, 1), Err(Error::RingBasisLacksOne)));
        let half = FieldElement::parse(&k, "1/2 t").unwrap();
        assert!(matches!(dk(&half, &ring, 1), Err(Error::NotIntegral(_))));
    }

    #[test]
    fn golden_unit_recurrence() {
        let k = NumberField::from_i64(&[-1, -1, 1]).unwrap();
        // t = (1+√5)/2, so (3+√5)/2 = 1 + t
        let alpha = FieldElement::parse(&k, "1 + t").unwrap();
        let seq = DkSequence::compute(&alpha, &ModuleBasis::power_basis(&k), 40).unwrap();
        assert_eq!(seq.t_trace, Some(BigInt::from(3)));
        assert!(dk_recurrence_check(&seq, 40).unwrap());
        assert_eq!(seq.divisibility_failure(), None);
    }

    #[test]
    fn quartic_unit_d3() {
        let k = NumberField::from_i64(&[-1, 0, -2, 0, 1]).unwrap();
        let alpha = FieldElement::generator(&k);
        assert_eq!(dk(&alpha, &ModuleBasis::power_basis(&k), 3).unwrap(), BigInt::one());
    }

    #[test]
    fn basis_reproduces_quotients() {
        let (_, ring, alpha) = sqrt2();
        let m = match_prop_c(&alpha, &ring, 30).unwrap();
        assert_eq!(m.d1, BigInt::from(2));
        assert!(!m.algebra.is_field());
        assert!(m.matches());
        assert_eq!(m.x1[..4].to_vec(), ints(&[0, 1, 2, 7]));

        let k3 = NumberField::from_i64(&[-3, 0, 1]).unwrap();
        let a3 = FieldElement::parse(&k3, "2 + t").unwrap();
        let m3 = match_prop_c(&a3, &ModuleBasis::power_basis(&k3), 30).unwrap();
        assert!(m3.d1.is_one());
        assert!(m3.algebra.is_field());
        assert!(m3.matches());
    }

    #[test]
    fn basis_match_refuses_torsion() {
        let (k, ring, _) = sqrt2();
        assert!(matches!(match_prop_c(&FieldElement::one(&k), &ring, 10), Err(Error::Precondition(_))));
    }

    #[test]
    fn discriminants() {
        assert_eq!(discriminant(&ints(&[-2, 0, 1])).unwrap(), BigInt::from(8));
        assert_eq!(discriminant(&ints(&[-1, 0, -2, 0, 1])).unwrap(), BigInt::from(-1024));
        assert_eq!(discriminant(&ints(&[1, 0, -10, 0, 1])).unwrap(), BigInt::from(147456));
        assert_eq!(discriminant(&ints(&[-2, 0, 0, 1])).unwrap(), BigInt::from(-108));
    }

    /// det(Tr(θ^{i+j})) as an independent discriminant oracle.
    fn trace_form_disc(field: &std::sync::Arc<NumberField>) -> BigInt {
        let n = field.degree();
        let theta = FieldElement::generator(field);
        let rows: Vec<Vec<BigRational>> = (0..n)
            .map(|i| (0..n).map(|j| theta.pow((i + j) as u64).trace()).collect())
            .collect();
        let m = crate::linalg::QMatrix::from_rows(rows).unwrap();
        m.det().unwrap().to_integer()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn discriminant_matches_trace_form(c0 in -9i64..9, c1 in -9i64..9, c2 in -9i64..9, c3 in -9i64..9) {
            let coeffs = [c0, c1, c2, c3, 1];
            if let Ok(k) = NumberField::from_i64(&coeffs) {
                prop_assert_eq!(discriminant_power_basis(&k).unwrap(), trace_form_disc(&k));
            }
        }

        #[test]
        fn d_is_maximal(a in -6i64..6, b in -6i64..6) {
            // brute force: (α^k - 1)/d is integral iff d | d_k
            let k = NumberField::from_i64(&[-2, 0, 1]).unwrap();
            let ring = ModuleBasis::power_basis(&k);
            let alpha = FieldElement::from_ints(&k, &[a, b]).unwrap();
            for kk in 1..=6usize {
                let d = dk(&alpha, &ring, kk).unwrap();
                let shifted = &alpha.pow(kk as u64) - &FieldElement::one(&k);
                let bound: u64 = if d.is_zero() { 16 } else { u64::try_from(&d * 2).unwrap_or(u64::MAX).min(2000) };
                for cand in 1..=bound {
                    let q = shifted.scale(&BigRational::new(BigInt::one(), BigInt::from(cand)));
                    let integral = ring.contains(&q);
                    let divides = d.is_multiple_of(&BigInt::from(cand));
                    prop_assert_eq!(integral, divides, "k = {}, d = {}", kk, cand);
                }
            }
        }

        #[test]
        fn d_divisibility(a in 1i64..8, b in 1i64..8) {
            let k = NumberField::from_i64(&[-3, 0, 1]).unwrap();
            let alpha = FieldElement::from_ints(&k, &[a, b]).unwrap();
            let seq = DkSequence::compute(&alpha, &ModuleBasis::power_basis(&k), 30).unwrap();
            prop_assert_eq!(seq.divisibility_failure(), None);
        }
    }

    #[test]
    fn vanishing_scan() {
        let k = NumberField::from_i64(&[-1, 0, -2, 0, 1]).unwrap();
        let r = lastprop_scan(&k, 2, 41, true).unwrap();
        assert_eq!(r.rows.len(), 21);
        assert!(r.vanishing);
        assert_eq!(r.monogenic_ok, Some(true));
        assert_eq!(r.discriminant, BigInt::from(-1024));

        let cube = NumberField::from_i64(&[-2, 0, 0, 1]).unwrap();
        let r = lastprop_scan(&cube, 3, 31, false).unwrap();
        assert!(r.vanishing);
        assert_eq!(r.rows.len(), 11);
        assert_eq!(r.monogenic_ok, None);

        let k10 = NumberField::from_i64(&[1, 0, -10, 0, 1]).unwrap();
        assert!(lastprop_scan(&k10, 2, 21, false).unwrap().vanishing);
        assert!(lastprop_scan(&k10, 3, 21, false).is_err());
        let odd = NumberField::from_i64(&[1, 1, -10, 0, 1]).unwrap();
        assert!(matches!(lastprop_scan(&odd, 2, 21, false), Err(Error::Precondition(_))));
    }

    #[test]
    fn bound_over_larger_ring() {
        let k = NumberField::from_i64(&[1, 0, -10, 0, 1]).unwrap();
        let ring = ModuleBasis::parse(&k, &["1", "-9/2*t + 1/2*t^3", "11/2*t - 1/2*t^3", "-5/2 + 1/2*t^2"])
            .unwrap();
        let rows = dk_bound_check(&FieldElement::generator(&k), &ring, 20).unwrap();
        assert!(rows.iter().all(|r| r.holds));
        assert!(rows.iter().all(|r| r.d_tilde.is_positive()));
    }

    #[test]
    fn conjecture_scan() {
        let k = NumberField::from_i64(&[-1, 0, -2, 0, 1]).unwrap();
        let r = conjecture9_scan(&FieldElement::generator(&k), &ModuleBasis::power_basis(&k), 60).unwrap();
        assert!((1..=60).step_by(2).all(|n| r.hits.contains(&n)));
        // α² = 1 + √2 is a quadratic unit
        assert_eq!(r.class, Conj9Class::Excluded);

        let (_, ring, alpha) = sqrt2();
        let r = conjecture9_scan(&alpha, &ring, 60).unwrap();
        assert_eq!(r.d1, BigInt::from(2));
        assert_eq!(r.class, Conj9Class::Excluded);
        assert!(r.hits.contains(&1));

        let cube = NumberField::from_i64(&[-2, 0, 0, 1]).unwrap();
        let t = FieldElement::parse(&cube, "1 + t").unwrap();
        let r = conjecture9_scan(&t, &ModuleBasis::power_basis(&cube), 20).unwrap();
        assert_eq!(r.class, Conj9Class::DegreeAtLeastThree);

        let k2 = NumberField::from_i64(&[-2, 0, 1]).unwrap();
        let r = conjecture9_scan(&FieldElement::parse(&k2, "1 + 2t").unwrap(), &ModuleBasis::power_basis(&k2), 10)
            .unwrap();
        assert_eq!(r.class, Conj9Class::NonUnitDegreeTwo);
    }
}
