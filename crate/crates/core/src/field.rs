//! Exact arithmetic in `Q[X]/(f)` for a monic integer polynomial `f` of
//! degree at most four.
//!
//! Elements are coordinate vectors over the power basis `1, θ, …, θ^{n-1}`.
//! Norms and traces come from the multiplication matrix, so nothing here
//! ever touches floating point.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::QMatrix;
use crate::poly::{parse_poly, RatPoly};

/// Symbol used when rendering elements and defining polynomials.
pub const GENERATOR: char = 't';

/// A number field `Q(θ)` given by the minimal polynomial of `θ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NumberField {
    /// Coefficients of the defining polynomial, lowest degree first.
    modulus: Vec<BigInt>,
    is_field: bool,
}

impl NumberField {
    /// Validates `coeffs` (lowest degree first) as a monic irreducible
    /// polynomial of degree 2 to 4.
    pub fn new(coeffs: Vec<BigInt>) -> Result<Arc<Self>> {
        let field = Self::checked_shape(coeffs)?;
        if let Some(reason) = reducibility_witness(&field.modulus) {
            return Err(Error::InvalidPolynomial(format!(
                "{} is reducible: {reason}",
                field.poly().display_with(GENERATOR)
            )));
        }
        Ok(Arc::new(Self { is_field: true, ..field }))
    }

    /// The quotient ring `Q[X]/(f)` without an irreducibility requirement.
    ///
    /// Ring operations, norms, traces and coordinate solves all remain exact;
    /// only inversion can fail on zero divisors.
    pub fn algebra(coeffs: Vec<BigInt>) -> Result<Arc<Self>> {
        let field = Self::checked_shape(coeffs)?;
        let is_field = reducibility_witness(&field.modulus).is_none();
        Ok(Arc::new(Self { is_field, ..field }))
    }

    pub fn from_i64(coeffs: &[i64]) -> Result<Arc<Self>> {
        Self::new(coeffs.iter().copied().map(BigInt::from).collect())
    }

    /// Parses a defining polynomial such as `"x^4-10x^2+1"`.
    pub fn parse(input: &str) -> Result<Arc<Self>> {
        let (poly, _) = parse_poly(input)?;
        let coeffs = poly.to_integers().ok_or_else(|| {
            Error::InvalidPolynomial("defining polynomial needs integer coefficients".into())
        })?;
        Self::new(coeffs)
    }

    fn checked_shape(coeffs: Vec<BigInt>) -> Result<Self> {
        let mut coeffs = coeffs;
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        let degree = coeffs.len().saturating_sub(1);
        if !(2..=4).contains(&degree) {
            return Err(Error::InvalidPolynomial(format!("degree {degree} outside 2..=4")));
        }
        if !coeffs[degree].is_one() {
            return Err(Error::InvalidPolynomial("polynomial is not monic".into()));
        }
        Ok(Self { modulus: coeffs, is_field: false })
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[BigInt] {
        &self.modulus
    }

    /// Whether the defining polynomial is irreducible.
    pub fn is_field(&self) -> bool {
        self.is_field
    }

    pub fn poly(&self) -> RatPoly {
        RatPoly::from_ints(self.modulus.iter().cloned())
    }

    /// Reduces an arbitrary rational polynomial modulo `f`.
    fn reduce(&self, mut coeffs: Vec<BigRational>) -> Vec<BigRational> {
        let n = self.degree();
        while coeffs.len() > n {
            let top = coeffs.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let shift = coeffs.len() - n;
            for (i, m) in self.modulus[..n].iter().enumerate() {
                coeffs[shift + i] -= &top * BigRational::from_integer(m.clone());
            }
        }
        coeffs.resize(n, BigRational::zero());
        coeffs
    }
}

impl fmt::Display for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.poly().display_with(GENERATOR))
    }
}

/// Returns a description of a factorization if `f` (monic, integer, degree
/// ≤ 4) is reducible over Q.
fn reducibility_witness(f: &[BigInt]) -> Option<String> {
    let degree = f.len() - 1;
    if degree == 1 {
        return None;
    }
    let constant = &f[0];
    if constant.is_zero() {
        return Some("root 0".into());
    }
    let divisors = signed_divisors(constant);
    for r in &divisors {
        let value = f.iter().rev().fold(BigInt::zero(), |acc, c| acc * r + c);
        if value.is_zero() {
            return Some(format!("root {r}"));
        }
    }
    if degree < 4 {
        return None;
    }
    // (x^2 + a x + b)(x^2 + c x + d) with b*d = f0, a + c = f3,
    // b + d + a c = f2, a d + b c = f1.
    let (f1, f2, f3) = (&f[1], &f[2], &f[3]);
    for b in &divisors {
        let d = constant / b;
        let ac = f2 - b - &d;
        let disc = f3 * f3 - BigInt::from(4) * &ac;
        if disc.is_negative() {
            continue;
        }
        let s = disc.sqrt();
        if &s * &s != disc {
            continue;
        }
        for a in [(f3 + &s), (f3 - &s)] {
            if a.is_odd() {
                continue;
            }
            let a = a / 2;
            let c = f3 - &a;
            if &a * &d + b * &c == *f1 {
                return Some(format!("(x^2 + {a}x + {b})(x^2 + {c}x + {d})"));
            }
        }
    }
    None
}

fn signed_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            small.push(d.clone());
            let other = &n / &d;
            if other != d {
                large.push(other);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small.iter().flat_map(|d| [d.clone(), -d]).collect()
}

/// An element of a [`NumberField`] in power-basis coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement {
    field: Arc<NumberField>,
    coords: Vec<BigRational>,
}

impl FieldElement {
    pub fn new(field: &Arc<NumberField>, coords: Vec<BigRational>) -> Result<Self> {
        if coords.len() != field.degree() {
            return Err(Error::Dimension(format!(
                "field of degree {} needs {} coordinates, got {}",
                field.degree(),
                field.degree(),
                coords.len()
            )));
        }
        Ok(Self { field: field.clone(), coords })
    }

    pub fn from_ints(field: &Arc<NumberField>, coords: &[i64]) -> Result<Self> {
        Self::new(field, coords.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn from_integer(field: &Arc<NumberField>, value: impl Into<BigInt>) -> Self {
        Self::from_rational(field, BigRational::from_integer(value.into()))
    }

    pub fn from_rational(field: &Arc<NumberField>, value: BigRational) -> Self {
        let mut coords = vec![BigRational::zero(); field.degree()];
        coords[0] = value;
        Self { field: field.clone(), coords }
    }

    /// The class of `poly` modulo the defining polynomial.
    pub fn from_poly(field: &Arc<NumberField>, poly: &RatPoly) -> Self {
        let coords = field.reduce(poly.coeffs().to_vec());
        Self { field: field.clone(), coords }
    }

    pub fn zero(field: &Arc<NumberField>) -> Self {
        Self::from_integer(field, 0)
    }

    pub fn one(field: &Arc<NumberField>) -> Self {
        Self::from_integer(field, 1)
    }

    /// The class of `X`, i.e. the generator θ.
    pub fn generator(field: &Arc<NumberField>) -> Self {
        Self::from_poly(field, &RatPoly::from_ints([0, 1]))
    }

    /// Parses an expression in the generator, e.g. `"2 + 3*t - t^3"`.
    pub fn parse(field: &Arc<NumberField>, input: &str) -> Result<Self> {
        let (poly, _) = parse_poly(input)?;
        Ok(Self::from_poly(field, &poly))
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    /// Power-basis coordinates as integers, if all are integral.
    pub fn integer_coords(&self) -> Option<Vec<BigInt>> {
        self.coords.iter().map(|c| c.is_integer().then(|| c.to_integer())).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(Zero::is_zero)
    }

    pub fn as_poly(&self) -> RatPoly {
        RatPoly::new(self.coords.clone())
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.field, &other.field) || self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        Ok(Self { field: self.field.clone(), coords })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect();
        Ok(Self { field: self.field.clone(), coords })
    }

    /// Product in the field: polynomial product reduced modulo `f`.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let n = self.field.degree();
        let mut prod = vec![BigRational::zero(); 2 * n - 1];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coords.iter().enumerate() {
                prod[i + j] += a * b;
            }
        }
        Ok(Self { field: self.field.clone(), coords: self.field.reduce(prod) })
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self { field: self.field.clone(), coords: self.coords.iter().map(|a| a * c).collect() }
    }

    pub fn pow(&self, mut k: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.field);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Multiplicative inverse via the extended Euclidean algorithm on
    /// polynomials.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::NotInvertible);
        }
        let (g, s, _) = self.as_poly().ext_gcd(&self.field.poly());
        if g.degree() != Some(0) {
            return Err(Error::NotInvertible);
        }
        Ok(Self::from_poly(&self.field, &s))
    }

    /// Matrix of multiplication by `self`; column `j` holds `self * θ^j`.
    pub fn multiplication_matrix(&self) -> QMatrix {
        let n = self.field.degree();
        let mut m = QMatrix::zeros(n, n);
        let theta = Self::generator(&self.field);
        let mut col = self.clone();
        for j in 0..n {
            for (i, c) in col.coords.iter().enumerate() {
                m.set(i, j, c.clone());
            }
            if j + 1 < n {
                col = &col * &theta;
            }
        }
        m
    }

    pub fn norm(&self) -> BigRational {
        self.multiplication_matrix().det().expect("multiplication matrix is square")
    }

    pub fn trace(&self) -> BigRational {
        self.multiplication_matrix().trace()
    }

    /// Monic minimal polynomial, found as the first linear dependency among
    /// `1, a, a², …`.
    pub fn min_poly(&self) -> RatPoly {
        let n = self.field.degree();
        let mut powers = vec![Self::one(&self.field)];
        for d in 1..=n {
            let next = &powers[d - 1] * self;
            let mut system = QMatrix::zeros(n, d);
            for (j, p) in powers.iter().enumerate() {
                for i in 0..n {
                    system.set(i, j, p.coords[i].clone());
                }
            }
            if let Some(c) = system.solve(&next.coords) {
                let mut coeffs: Vec<BigRational> = c.into_iter().map(|v| -v).collect();
                coeffs.push(BigRational::one());
                return RatPoly::new(coeffs);
            }
            powers.push(next);
        }
        // Over a field the characteristic polynomial of the multiplication
        // map always gives a dependency of degree ≤ n.
        unreachable!("no linear dependency among the first n+1 powers")
    }

    /// Evaluates a rational polynomial at this element.
    pub fn eval_poly(&self, p: &RatPoly) -> Self {
        p.coeffs().iter().rev().fold(Self::zero(&self.field), |acc, c| {
            &(&acc * self) + &Self::from_rational(&self.field, c.clone())
        })
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.as_poly().display_ascending(GENERATOR))
    }
}

impl Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        self.checked_add(rhs).expect("field mismatch in addition")
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self.checked_sub(rhs).expect("field mismatch in subtraction")
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        self.checked_mul(rhs).expect("field mismatch in multiplication")
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement {
            field: self.field.clone(),
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

/// A Q-basis of the field, typically a Z-basis of some module.
#[derive(Clone, Debug)]
pub struct ModuleBasis {
    field: Arc<NumberField>,
    vectors: Vec<FieldElement>,
    /// Maps power-basis coordinates to coordinates over `vectors`.
    to_basis: QMatrix,
}

impl PartialEq for ModuleBasis {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.vectors == other.vectors
    }
}

impl Eq for ModuleBasis {}

impl ModuleBasis {
    pub fn new(vectors: Vec<FieldElement>) -> Result<Self> {
        let field = vectors
            .first()
            .ok_or_else(|| Error::Dimension("empty basis".into()))?
            .field
            .clone();
        let n = field.degree();
        if vectors.len() != n {
            return Err(Error::Dimension(format!("basis needs {n} vectors, got {}", vectors.len())));
        }
        let mut m = QMatrix::zeros(n, n);
        for (j, v) in vectors.iter().enumerate() {
            v.same_field(&vectors[0])?;
            for i in 0..n {
                m.set(i, j, v.coords[i].clone());
            }
        }
        let to_basis = m.inverse().ok_or(Error::Singular)?;
        Ok(Self { field, vectors, to_basis })
    }

    /// `1, θ, …, θ^{n-1}`.
    pub fn power_basis(field: &Arc<NumberField>) -> Self {
        let theta = FieldElement::generator(field);
        Self::powers_of(&FieldElement::one(field), &theta).expect("power basis is nonsingular")
    }

    /// `β, βη, …, βη^{n-1}`, a basis of `β·Z[η]` when `η` has full degree.
    pub fn powers_of(beta: &FieldElement, eta: &FieldElement) -> Result<Self> {
        let n = beta.field.degree();
        let mut vectors = Vec::with_capacity(n);
        let mut cur = beta.clone();
        for k in 0..n {
            if k > 0 {
                cur = cur.checked_mul(eta)?;
            }
            vectors.push(cur.clone());
        }
        Self::new(vectors)
    }

    /// Parses one element expression per basis vector.
    pub fn parse(field: &Arc<NumberField>, exprs: &[&str]) -> Result<Self> {
        let vectors = exprs
            .iter()
            .map(|e| FieldElement::parse(field, e))
            .collect::<Result<Vec<_>>>()?;
        Self::new(vectors)
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn vectors(&self) -> &[FieldElement] {
        &self.vectors
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// Rational coordinates of `a` over this basis.
    pub fn coords_of(&self, a: &FieldElement) -> Result<Vec<BigRational>> {
        a.same_field(&self.vectors[0])?;
        Ok(self.to_basis.mul_vec(&a.coords))
    }

    /// Integer coordinates of `a`, or an error naming the element.
    pub fn integral_coords(&self, a: &FieldElement) -> Result<Vec<BigInt>> {
        let coords = self.coords_of(a)?;
        coords
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::NotIntegral(format!("{a} over the given basis")))
    }

    pub fn contains(&self, a: &FieldElement) -> bool {
        self.integral_coords(a).is_ok()
    }

    /// Linear combination `Σ c_i w_i`.
    pub fn combine(&self, coeffs: &[BigRational]) -> FieldElement {
        assert_eq!(coeffs.len(), self.vectors.len(), "coefficient count mismatch");
        self.vectors
            .iter()
            .zip(coeffs)
            .fold(FieldElement::zero(&self.field), |acc, (w, c)| &acc + &w.scale(c))
    }

    /// New basis `w_i = Σ_j m_ij t_j` where `t` is this basis.
    pub fn transform(&self, m: &crate::linalg::IntMatrix) -> Result<Self> {
        let n = self.vectors.len();
        if m.rows() != n || m.cols() != n {
            return Err(Error::Dimension(format!("need a {n}x{n} change of basis")));
        }
        let vectors = (0..n)
            .map(|i| {
                let row: Vec<BigRational> =
                    m.row(i).iter().map(|e| BigRational::from_integer(e.clone())).collect();
                self.combine(&row)
            })
            .collect();
        Self::new(vectors)
    }

    /// Rational matrix whose row `i` holds the coordinates of `other[i]`
    /// over this basis.
    pub fn matrix_of(&self, other: &ModuleBasis) -> Result<QMatrix> {
        let rows = other
            .vectors
            .iter()
            .map(|v| self.coords_of(v))
            .collect::<Result<Vec<_>>>()?;
        QMatrix::from_rows(rows)
    }

    /// Both bases span the same Z-module: the transition matrix is integral
    /// with determinant ±1.
    pub fn same_module(&self, other: &ModuleBasis) -> Result<bool> {
        let m = self.matrix_of(other)?;
        Ok(m.to_integer().is_some() && m.det()?.abs().is_one())
    }

    /// True when 1 lies in the span.
    pub fn contains_one(&self) -> bool {
        self.contains(&FieldElement::one(&self.field))
    }

    /// True when the first vector is exactly 1.
    pub fn starts_with_one(&self) -> bool {
        self.vectors[0].is_one()
    }

    /// `a` multiplies the module into itself.
    pub fn is_multiplier(&self, a: &FieldElement) -> Result<bool> {
        for w in &self.vectors {
            if !self.contains(&a.checked_mul(w)?) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// `a` has norm 1, lies in the ring spanned by `ring`, and multiplies that
/// ring into itself.
pub fn is_positive_unit(a: &FieldElement, ring: &ModuleBasis) -> Result<bool> {
    if !ring.contains_one() {
        return Err(Error::Precondition("ring basis does not contain 1".into()));
    }
    if !a.norm().is_one() {
        return Ok(false);
    }
    if !ring.contains(a) {
        return Ok(false);
    }
    ring.is_multiplier(a)
}

/// Trace of `a + b·√d` down to `Q` in the ring `K[Y]/(Y² - d)`: the trace of
/// its multiplication matrix `[[M_a, d·M_b], [M_b, M_a]]` over
/// `{e_i} ∪ {e_i·√d}`. Equals the field trace when `d` is not a square in `K`.
pub fn trace_in_quadratic_extension(a: &FieldElement, b: &FieldElement, d: &BigInt) -> Result<BigRational> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch);
    }
    let n = a.field().degree();
    let (ma, mb) = (a.multiplication_matrix(), b.multiplication_matrix());
    let dq = BigRational::from_integer(d.clone());
    let mut m = QMatrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            m.set(i, j, ma.get(i, j).clone());
            m.set(n + i, n + j, ma.get(i, j).clone());
            m.set(i, n + j, &dq * mb.get(i, j));
            m.set(n + i, j, mb.get(i, j).clone());
        }
    }
    Ok(m.trace())
}
