//! Coordinate sequences of `α(k) = β·ε^k` over a module basis, and the
//! brute-force checks run on them: recurrence, minimal order, divisibility.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::field::{FieldElement, ModuleBasis};
use crate::linalg::QMatrix;
use crate::poly::RatPoly;

/// Homogeneous recurrence `x(k+d) = s_1 x(k+d-1) + … + s_d x(k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recurrence {
    coeffs: Vec<BigInt>,
}

impl Recurrence {
    /// From `s_1, …, s_d`.
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        Self { coeffs }
    }

    /// The recurrence whose characteristic polynomial is the monic integer
    /// polynomial `p`.
    pub fn from_charpoly(p: &RatPoly) -> Result<Self> {
        let ints = p
            .to_integers()
            .filter(|_| p.is_monic())
            .ok_or_else(|| Error::NotIntegral(format!("characteristic polynomial {p}")))?;
        let d = ints.len() - 1;
        Ok(Self { coeffs: (1..=d).map(|j| -&ints[d - j]).collect() })
    }

    /// `x(k+4) = T x(k+2) - x(k)`.
    pub fn order_four(t: &BigInt) -> Self {
        Self::new(vec![BigInt::zero(), t.clone(), BigInt::zero(), BigInt::from(-1)])
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Characteristic polynomial `X^d - s_1 X^{d-1} - … - s_d`.
    pub fn charpoly(&self) -> RatPoly {
        let d = self.order();
        let mut c: Vec<BigInt> = (0..d).map(|i| -&self.coeffs[d - 1 - i]).collect();
        c.push(1.into());
        RatPoly::from_ints(c)
    }

    fn next_term(&self, window: &[BigInt]) -> BigInt {
        let d = self.order();
        (1..=d).map(|j| &self.coeffs[j - 1] * &window[d - j]).sum()
    }

    /// Extends `initial` (at least `order` terms) to `len` terms.
    pub fn extend(&self, initial: &[BigInt], len: usize) -> Vec<BigInt> {
        let d = self.order();
        assert!(initial.len() >= d, "need {d} initial terms");
        let mut out = initial.to_vec();
        while out.len() < len {
            let next = self.next_term(&out[out.len() - d..]);
            out.push(next);
        }
        out.truncate(len.max(d));
        out
    }

    /// True if every window of the sequence satisfies the recurrence.
    pub fn holds_on(&self, seq: &[BigInt]) -> bool {
        let d = self.order();
        seq.windows(d + 1).all(|w| self.next_term(&w[..d]) == w[d])
    }
}

/// Least-order rational recurrence fitting a finite sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalRecurrence {
    pub order: usize,
    /// `s_1, …, s_order`.
    pub coeffs: Vec<BigRational>,
}

/// Smallest `m` such that some order-`m` recurrence with rational
/// coefficients fits every available term.
///
/// Order `m` is only accepted when at least `2m + 2` terms are available,
/// so that the fitted system is overdetermined.
pub fn minimal_order(column: &[BigInt]) -> Result<MinimalRecurrence> {
    let len = column.len();
    for m in 0.. {
        if len < 2 * m + 2 {
            return Err(Error::InsufficientTerms { needed: 2 * m + 2, have: len });
        }
        if m == 0 {
            if column.iter().all(Zero::is_zero) {
                return Ok(MinimalRecurrence { order: 0, coeffs: Vec::new() });
            }
            continue;
        }
        let eqs = len - m;
        let mut system = QMatrix::zeros(eqs, m);
        let mut rhs = Vec::with_capacity(eqs);
        for k in 0..eqs {
            for j in 1..=m {
                system.set(k, j - 1, BigRational::from_integer(column[k + m - j].clone()));
            }
            rhs.push(BigRational::from_integer(column[k + m].clone()));
        }
        if let Some(coeffs) = system.solve(&rhs) {
            return Ok(MinimalRecurrence { order: m, coeffs });
        }
    }
    unreachable!()
}

/// Outcome of a divisibility-sequence check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LdsVerdict {
    Holds,
    /// `b(n)` does not divide `b(m)` although `n | m`.
    Fails { n: usize, m: usize },
}

impl LdsVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, LdsVerdict::Holds)
    }
}

fn divides(a: &BigInt, b: &BigInt) -> bool {
    if a.is_zero() {
        b.is_zero()
    } else {
        b.is_multiple_of(a)
    }
}

/// Checks `b(n) | b(m)` for all `1 ≤ n | m ≤ nmax`, with `0 | b` only for
/// `b = 0`. Pairs are scanned by increasing `n`, then `m`.
pub fn verify_lds(column: &[BigInt], nmax: usize) -> Result<LdsVerdict> {
    if column.len() <= nmax {
        return Err(Error::InsufficientTerms { needed: nmax + 1, have: column.len() });
    }
    for n in 1..=nmax {
        for m in (2 * n..=nmax).step_by(n) {
            if !divides(&column[n], &column[m]) {
                return Ok(LdsVerdict::Fails { n, m });
            }
        }
    }
    Ok(LdsVerdict::Holds)
}

/// Minimal orders found per column against the characteristic degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Minimality {
    pub charpoly_degree: usize,
    /// `None` when the column was too short to decide.
    pub orders: Vec<Option<usize>>,
}

impl Minimality {
    /// Every column attains the full characteristic degree.
    pub fn all_full(&self) -> bool {
        self.orders.iter().all(|o| *o == Some(self.charpoly_degree))
    }
}

/// Coordinates of `β·ε^k`, `k = 0..=kmax`, plus their verification results.
#[derive(Clone, Debug)]
pub struct SequenceReport {
    pub beta: FieldElement,
    pub unit: FieldElement,
    pub basis: ModuleBasis,
    /// Row `k` holds `x_1(k), …, x_n(k)`.
    pub terms: Vec<Vec<BigInt>>,
    pub recurrence: Recurrence,
    pub minimality: Minimality,
    pub lds: Vec<LdsVerdict>,
}

impl SequenceReport {
    pub fn kmax(&self) -> usize {
        self.terms.len().saturating_sub(1)
    }

    pub fn width(&self) -> usize {
        self.terms.first().map_or(0, Vec::len)
    }

    /// Column `i` (zero-based), i.e. the sequence `x_{i+1}(k)`.
    pub fn column(&self, i: usize) -> Vec<BigInt> {
        self.terms.iter().map(|row| row[i].clone()).collect()
    }
}

/// Expands `β·ε^k` over `w` for `k = 0..=kmax`.
pub fn generate(
    beta: &FieldElement,
    eps: &FieldElement,
    w: &ModuleBasis,
    kmax: usize,
) -> Result<SequenceReport> {
    let recurrence = Recurrence::from_charpoly(&eps.min_poly())?;
    let mut terms = Vec::with_capacity(kmax + 1);
    let mut alpha = beta.clone();
    for k in 0..=kmax {
        if k > 0 {
            alpha = alpha.checked_mul(eps)?;
        }
        let row = w.integral_coords(&alpha).map_err(|_| {
            Error::NotIntegral(format!("coordinates of β·ε^{k}; β is outside the module or ε outside its coefficient ring"))
        })?;
        terms.push(row);
    }
    let n = w.len();
    let columns: Vec<Vec<BigInt>> =
        (0..n).map(|i| terms.iter().map(|row| row[i].clone()).collect()).collect();
    let minimality = Minimality {
        charpoly_degree: recurrence.order(),
        orders: columns.iter().map(|c| minimal_order(c).ok().map(|r| r.order)).collect(),
    };
    let lds = columns
        .iter()
        .map(|c| verify_lds(c, kmax))
        .collect::<Result<Vec<_>>>()?;
    Ok(SequenceReport {
        beta: beta.clone(),
        unit: eps.clone(),
        basis: w.clone(),
        terms,
        recurrence,
        minimality,
        lds,
    })
}

/// Every column satisfies the report's recurrence on all available windows.
pub fn verify_recurrence(report: &SequenceReport) -> bool {
    (0..report.width()).all(|i| report.recurrence.holds_on(&report.column(i)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::NumberField;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().copied().map(BigInt::from).collect()
    }

    #[test]
    fn recurrence_from_charpoly() {
        let r = Recurrence::from_charpoly(&RatPoly::from_ints([1, 0, -10, 0, 1])).unwrap();
        assert_eq!(r, Recurrence::order_four(&BigInt::from(10)));
        assert_eq!(r.charpoly(), RatPoly::from_ints([1, 0, -10, 0, 1]));
        let seq = r.extend(&ints(&[0, 1, 1, 11]), 8);
        assert_eq!(seq, ints(&[0, 1, 1, 11, 10, 109, 99, 1079]));
        assert!(r.holds_on(&seq));
    }

    #[test]
    fn minimal_order_examples() {
        let fib = ints(&[0, 1, 1, 2, 3, 5, 8, 13, 21, 34]);
        let r = minimal_order(&fib).unwrap();
        assert_eq!(r.order, 2);
        assert_eq!(minimal_order(&vec![BigInt::zero(); 6]).unwrap().order, 0);
        let x1 = Recurrence::order_four(&10.into()).extend(&ints(&[0, 1, 1, 11]), 20);
        assert_eq!(minimal_order(&x1).unwrap().order, 4);
        assert!(matches!(minimal_order(&ints(&[1, 2, 3])), Err(Error::InsufficientTerms { .. })));
    }

    #[test]
    fn lds_examples() {
        let identity: Vec<BigInt> = (0..=50).map(BigInt::from).collect();
        assert_eq!(verify_lds(&identity, 50).unwrap(), LdsVerdict::Holds);
        // shifted Fibonacci F(k+1): 1, 1, 2, 3, 5, ...
        let shifted = ints(&[1, 1, 2, 3, 5, 8, 13, 21]);
        assert_eq!(verify_lds(&shifted, 7).unwrap(), LdsVerdict::Fails { n: 2, m: 4 });
        // zero term at n = 2 with a nonzero multiple
        let z = ints(&[0, 1, 0, 1, 1]);
        assert_eq!(verify_lds(&z, 4).unwrap(), LdsVerdict::Fails { n: 2, m: 4 });
        assert!(verify_lds(&z, 5).is_err());
    }

    #[test]
    fn generate_over_sqrt2() {
        let k = NumberField::from_i64(&[-2, 0, 1]).unwrap();
        let w = ModuleBasis::power_basis(&k);
        let eps = FieldElement::parse(&k, "3 + 2t").unwrap();
        let report = generate(&FieldElement::one(&k), &eps, &w, 6).unwrap();
        assert_eq!(report.column(0)[..4], ints(&[1, 3, 17, 99]));
        assert_eq!(report.column(1)[..4], ints(&[0, 2, 12, 70]));
        assert!(verify_recurrence(&report));
        assert!(report.minimality.all_full());
    }

    #[test]
    fn generate_power_basis_indicators() {
        let k = NumberField::from_i64(&[1, 0, -10, 0, 1]).unwrap();
        let w = ModuleBasis::power_basis(&k);
        let t = FieldElement::generator(&k);
        let report = generate(&FieldElement::one(&k), &t, &w, 8).unwrap();
        for kk in 0..4 {
            for i in 0..4 {
                assert_eq!(report.terms[kk][i], BigInt::from((kk == i) as i64));
            }
        }
    }

    #[test]
    fn corrupted_report_fails_recurrence() {
        let k = NumberField::from_i64(&[-2, 0, 1]).unwrap();
        let w = ModuleBasis::power_basis(&k);
        let eps = FieldElement::parse(&k, "3 + 2t").unwrap();
        let mut report = generate(&FieldElement::one(&k), &eps, &w, 6).unwrap();
        report.terms[4][1] += 1;
        assert!(!verify_recurrence(&report));
    }

    #[test]
    fn zero_column_satisfies_recurrence() {
        let r = Recurrence::order_four(&7.into());
        assert!(r.holds_on(&vec![BigInt::zero(); 12]));
    }

    #[test]
    fn non_integral_coordinates_rejected() {
        let k = NumberField::from_i64(&[-2, 0, 1]).unwrap();
        let w = ModuleBasis::parse(&k, &["2", "2t"]).unwrap();
        let eps = FieldElement::parse(&k, "3 + 2t").unwrap();
        assert!(matches!(
            generate(&FieldElement::one(&k), &eps, &w, 4),
            Err(Error::NotIntegral(_))
        ));
    }
}
