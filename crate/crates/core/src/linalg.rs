//! Exact integer and rational linear algebra.
//!
//! Everything here works on arbitrary-precision values: [`IntMatrix`] over
//! `BigInt` for the unimodular machinery (determinants, Hermite and Smith
//! normal forms with their transformation witnesses, primitive-vector
//! completion) and [`QMatrix`] over `BigRational` for solving the linear
//! systems that come up when changing bases inside a number field.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense integer matrix stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if rows * cols != entries.len() {
            return Err(Error::Dimension(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn diagonal(diag: &[BigInt]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n, n);
        for (i, d) in diag.iter().enumerate() {
            m.entries[i * n + i] = d.clone();
        }
        m
    }

    /// Builds a matrix from rows of small integers. Panics on ragged input.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let entries = rows.iter().flat_map(|row| row.iter().map(|&v| BigInt::from(v))).collect();
        Self { rows: r, cols: c, entries }
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(Self { rows: r, cols: c, entries: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    /// True when every entry strictly above the diagonal is zero.
    pub fn is_lower_triangular(&self) -> bool {
        (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self.get(i, j).is_zero()))
    }

    pub fn to_rational(&self) -> QMatrix {
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| BigRational::from_integer(e.clone())).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.entries.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.entries.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[dst] += factor * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let delta = self.get(src, j) * factor;
            self.entries[dst * self.cols + j] += delta;
        }
    }

    /// col[dst] += factor * col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let delta = self.get(i, src) * factor;
            self.entries[i * self.cols + dst] += delta;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let e = &mut self.entries[i * self.cols + j];
            *e = -std::mem::take(e);
        }
    }

    fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let e = &mut self.entries[i * self.cols + j];
            *e = -std::mem::take(e);
        }
    }

    /// Replaces columns (a, b) by (p*a + q*b, r*a + s*b).
    fn combine_cols(&mut self, a: usize, b: usize, [p, q, r, s]: [&BigInt; 4]) {
        for i in 0..self.rows {
            let ca = self.get(i, a).clone();
            let cb = self.get(i, b).clone();
            self.set(i, a, p * &ca + q * &cb);
            self.set(i, b, r * &ca + s * &cb);
        }
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out.entries[i * rhs.cols + j] += a * rhs.get(k, j);
                }
            }
        }
        out
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, e) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{e}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Extended gcd: returns `(g, s, t)` with `s*a + t*b = g` and `g >= 0`.
pub fn ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = a.extended_gcd(b);
    if e.gcd.is_negative() {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

/// Determinant by Bareiss fraction-free elimination.
pub fn det(m: &IntMatrix) -> Result<BigInt> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows, cols: m.cols });
    }
    let n = m.rows;
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a = m.clone();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a.get(k, k).is_zero() {
            match (k + 1..n).find(|&i| !a.get(i, k).is_zero()) {
                Some(i) => {
                    a.swap_rows(k, i);
                    negate = !negate;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j)) / &prev;
                a.set(i, j, v);
            }
        }
        prev = a.get(k, k).clone();
    }
    let d = a.get(n - 1, n - 1).clone();
    Ok(if negate { -d } else { d })
}

/// Column-style Hermite decomposition: `B * C = H` with `H` lower triangular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HnfDecomposition {
    pub h: IntMatrix,
    pub c: IntMatrix,
}

/// Column-style Hermite normal form of a full-row-rank matrix.
///
/// Pivots are positive and every entry left of a pivot is reduced into
/// `[0, pivot)`.
pub fn hnf_column(b: &IntMatrix) -> Result<HnfDecomposition> {
    if b.rows > b.cols {
        return Err(Error::RankDeficient);
    }
    let mut h = b.clone();
    let mut c = IntMatrix::identity(b.cols);
    for i in 0..b.rows {
        for j in i + 1..b.cols {
            if h.get(i, j).is_zero() {
                continue;
            }
            let (pa, pb) = (h.get(i, i).clone(), h.get(i, j).clone());
            let (g, s, t) = ext_gcd(&pa, &pb);
            let (qa, qb) = (&pa / &g, &pb / &g);
            let op = [&s, &t, &(-qb), &qa];
            h.combine_cols(i, j, op);
            c.combine_cols(i, j, op);
        }
        if h.get(i, i).is_zero() {
            return Err(Error::RankDeficient);
        }
        if h.get(i, i).is_negative() {
            h.negate_col(i);
            c.negate_col(i);
        }
        for j in 0..i {
            let q = h.get(i, j).div_floor(h.get(i, i));
            let neg = -q;
            h.add_col_multiple(j, i, &neg);
            c.add_col_multiple(j, i, &neg);
        }
    }
    Ok(HnfDecomposition { h, c })
}

/// Smith decomposition `X * B * Y = diag(d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfDecomposition {
    pub x: IntMatrix,
    pub d: Vec<BigInt>,
    pub y: IntMatrix,
}

impl SnfDecomposition {
    /// The `rows x cols` matrix carrying `d` on its diagonal.
    pub fn diagonal_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.x.rows, self.y.cols);
        for (i, d) in self.d.iter().enumerate() {
            m.set(i, i, d.clone());
        }
        m
    }

    /// Number of nonzero invariant factors.
    pub fn rank(&self) -> usize {
        self.d.iter().take_while(|d| !d.is_zero()).count()
    }
}

/// Smith normal form with unimodular witnesses; invariant factors are
/// nonnegative and form a divisibility chain.
pub fn snf(b: &IntMatrix) -> SnfDecomposition {
    let (r, c) = (b.rows, b.cols);
    let mut d = b.clone();
    let mut x = IntMatrix::identity(r);
    let mut y = IntMatrix::identity(c);
    let mut diag = Vec::with_capacity(r.min(c));

    'outer: for t in 0..r.min(c) {
        loop {
            let pivot = (t..r)
                .flat_map(|i| (t..c).map(move |j| (i, j)))
                .filter(|&(i, j)| !d.get(i, j).is_zero())
                .min_by(|&(i1, j1), &(i2, j2)| d.get(i1, j1).abs().cmp(&d.get(i2, j2).abs()));
            let Some((pi, pj)) = pivot else {
                break 'outer;
            };
            d.swap_rows(t, pi);
            x.swap_rows(t, pi);
            d.swap_cols(t, pj);
            y.swap_cols(t, pj);

            let mut clean = true;
            for i in t + 1..r {
                let q = -d.get(i, t).div_floor(d.get(t, t));
                d.add_row_multiple(i, t, &q);
                x.add_row_multiple(i, t, &q);
                clean &= d.get(i, t).is_zero();
            }
            for j in t + 1..c {
                let q = -d.get(t, j).div_floor(d.get(t, t));
                d.add_col_multiple(j, t, &q);
                y.add_col_multiple(j, t, &q);
                clean &= d.get(t, j).is_zero();
            }
            if !clean {
                continue;
            }
            let offender = (t + 1..r).find(|&i| {
                (t + 1..c).any(|j| !d.get(i, j).is_multiple_of(d.get(t, t)))
            });
            match offender {
                Some(i) => {
                    d.add_row_multiple(t, i, &BigInt::one());
                    x.add_row_multiple(t, i, &BigInt::one());
                }
                None => break,
            }
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            x.negate_row(t);
        }
        diag.push(d.get(t, t).clone());
    }
    diag.resize(r.min(c), BigInt::zero());
    SnfDecomposition { x, d: diag, y }
}

/// Completes a primitive vector to a unimodular matrix whose first column is
/// that vector.
///
/// The completion is deterministic: the vector is driven to `e_1` by
/// extended-gcd row operations folding each trailing entry into the first,
/// and the inverse of the accumulated transform is returned.
pub fn complete_primitive(v: &[BigInt]) -> Result<IntMatrix> {
    let n = v.len();
    if n == 0 {
        return Err(Error::Dimension("empty vector".into()));
    }
    let g = v.iter().fold(BigInt::zero(), |acc, e| acc.gcd(e));
    if !g.is_one() {
        return Err(Error::NotPrimitive { gcd: g });
    }
    let mut w = v.to_vec();
    // Inverse of the accumulated row transform, built by right-multiplying
    // the inverse of each elementary step.
    let mut inv = IntMatrix::identity(n);
    for i in (1..n).rev() {
        if w[i].is_zero() {
            continue;
        }
        let (g, s, t) = ext_gcd(&w[0], &w[i]);
        let a = &w[0] / &g;
        let b = &w[i] / &g;
        // step [[s, t], [-b, a]] on (w0, wi); its inverse is [[a, -t], [b, s]].
        inv.combine_cols(0, i, [&a, &b, &(-&t), &s]);
        w[0] = g;
        w[i] = BigInt::zero();
    }
    if w[0].is_negative() {
        inv.negate_col(0);
    }
    debug_assert_eq!(inv.column(0), v);
    Ok(inv)
}

/// Exact inverse of a matrix with determinant ±1.
pub fn inverse_unimodular(m: &IntMatrix) -> Result<IntMatrix> {
    let d = det(m)?;
    if d.abs() != BigInt::one() {
        return Err(Error::NotUnimodular { det: d });
    }
    let inv = m.to_rational().inverse().ok_or(Error::Singular)?;
    inv.to_integer()
        .ok_or_else(|| Error::Invariant("inverse of a unimodular matrix is not integral".into()))
}

/// Dense rational matrix stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![BigRational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(Self { rows: r, cols: c, entries: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigRational) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn trace(&self) -> BigRational {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn mul_vec(&self, v: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn mul(&self, rhs: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = QMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = out.get(i, j) + a * rhs.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Integer matrix if every entry is integral.
    pub fn to_integer(&self) -> Option<IntMatrix> {
        if !self.entries.iter().all(BigRational::is_integer) {
            return None;
        }
        Some(IntMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(BigRational::to_integer).collect(),
        })
    }

    pub fn det(&self) -> Result<BigRational> {
        if self.rows != self.cols {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut acc = BigRational::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a.get(i, k).is_zero()) else {
                return Ok(BigRational::zero());
            };
            if p != k {
                a.swap_rows(p, k);
                acc = -acc;
            }
            let pivot = a.get(k, k).clone();
            acc *= &pivot;
            for i in k + 1..n {
                let factor = a.get(i, k) / &pivot;
                if factor.is_zero() {
                    continue;
                }
                for j in k..n {
                    let v = a.get(i, j) - &factor * a.get(k, j);
                    a.set(i, j, v);
                }
            }
        }
        Ok(acc)
    }

    pub fn inverse(&self) -> Option<QMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = QMatrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, BigRational::one());
        }
        let pivots = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let mut inv = QMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug.get(i, n + j).clone());
            }
        }
        Some(inv)
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Some solution of `self * x = b`, or `None` when inconsistent. Free
    /// variables are set to zero.
    pub fn solve(&self, b: &[BigRational]) -> Option<Vec<BigRational>> {
        assert_eq!(b.len(), self.rows, "right-hand side length mismatch");
        let mut aug = QMatrix::zeros(self.rows, self.cols + 1);
        for (i, bi) in b.iter().enumerate() {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, bi.clone());
        }
        let pivots = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![BigRational::zero(); self.cols];
        for (row, &col) in pivots.iter().enumerate() {
            x[col] = aug.get(row, self.cols).clone();
        }
        Some(x)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.entries.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&i| !self.get(i, col).is_zero()) else {
                continue;
            };
            self.swap_rows(p, row);
            let inv = self.get(row, col).recip();
            for j in col..self.cols {
                let v = self.get(row, j) * &inv;
                self.set(row, j, v);
            }
            for i in 0..self.rows {
                if i == row || self.get(i, col).is_zero() {
                    continue;
                }
                let factor = self.get(i, col).clone();
                for j in col..self.cols {
                    let v = self.get(i, j) - &factor * self.get(row, j);
                    self.set(i, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().copied().map(BigInt::from).collect()
    }

    #[test]
    fn det_small_cases() {
        assert_eq!(det(&IntMatrix::identity(4)).unwrap(), bi(1));
        assert_eq!(det(&IntMatrix::from_i64(&[&[1, 1], &[1, 0]])).unwrap(), bi(-1));
        assert_eq!(det(&IntMatrix::from_i64(&[&[0, 1], &[1, 0]])).unwrap(), bi(-1));
        assert_eq!(det(&IntMatrix::from_i64(&[&[2, 4], &[1, 2]])).unwrap(), bi(0));
        assert_eq!(det(&IntMatrix::zeros(0, 0)).unwrap(), bi(1));
    }

    #[test]
    fn det_of_power_module_change_matrix_is_a_unit() {
        let t = 10;
        let a = IntMatrix::from_i64(&[&[0, 0, 1, 0], &[1, 0, 0, 1], &[1, 0, 0, 0], &[t + 1, 1, 0, 0]]);
        assert_eq!(det(&a).unwrap().abs(), bi(1));
    }

    #[test]
    fn det_rejects_rectangular() {
        assert!(matches!(
            det(&IntMatrix::zeros(2, 3)),
            Err(Error::NotSquare { rows: 2, cols: 3 })
        ));
    }

    #[test]
    fn hnf_identity_is_trivial() {
        let id = IntMatrix::identity(3);
        let dec = hnf_column(&id).unwrap();
        assert!(dec.h.is_identity());
        assert!(dec.c.is_identity());
    }

    #[test]
    fn hnf_two_by_two() {
        let b = IntMatrix::from_i64(&[&[2, 1], &[0, 3]]);
        let dec = hnf_column(&b).unwrap();
        assert_eq!(&b * &dec.c, dec.h);
        assert!(dec.h.is_lower_triangular());
        assert_eq!(det(&dec.c).unwrap().abs(), bi(1));
        // pivots positive, off-pivot entries reduced
        assert_eq!(dec.h, IntMatrix::from_i64(&[&[1, 0], &[3, 6]]));
    }

    #[test]
    fn hnf_rejects_rank_deficient() {
        let b = IntMatrix::from_i64(&[&[1, 2], &[2, 4]]);
        assert!(matches!(hnf_column(&b), Err(Error::RankDeficient)));
        assert!(matches!(hnf_column(&IntMatrix::zeros(3, 2)), Err(Error::RankDeficient)));
    }

    #[test]
    fn snf_sqrt_family_matrix() {
        let b = IntMatrix::from_i64(&[&[1, 0, 0, 0], &[0, 1, 1, 0], &[5, 0, 0, 2], &[0, 11, 9, 0]]);
        let s = snf(&b);
        assert_eq!(s.d, ints(&[1, 1, 2, 2]));
        assert_eq!(&(&s.x * &b) * &s.y, s.diagonal_matrix());
    }

    #[test]
    fn snf_identity_and_diag() {
        let s = snf(&IntMatrix::identity(4));
        assert_eq!(s.d, ints(&[1, 1, 1, 1]));
        let b = IntMatrix::diagonal(&ints(&[4, 6]));
        let s = snf(&b);
        // d1 = gcd of entries, d1*d2 = |det|
        assert_eq!(s.d, ints(&[2, 12]));
        assert_eq!(&(&s.x * &b) * &s.y, s.diagonal_matrix());
    }

    #[test]
    fn snf_zero_and_rectangular() {
        let s = snf(&IntMatrix::zeros(3, 3));
        assert_eq!(s.d, ints(&[0, 0, 0]));
        assert_eq!(s.rank(), 0);
        let b = IntMatrix::from_i64(&[&[2, 4, 6], &[4, 8, 13]]);
        let s = snf(&b);
        assert_eq!(&(&s.x * &b) * &s.y, s.diagonal_matrix());
        assert_eq!(s.d, ints(&[1, 2]));
    }

    #[test]
    fn complete_primitive_examples() {
        assert!(complete_primitive(&ints(&[1, 0, 0, 0])).unwrap().is_identity());

        let u = complete_primitive(&ints(&[0, 2, -4, 1])).unwrap();
        assert_eq!(u.column(0), ints(&[0, 2, -4, 1]));
        assert_eq!(det(&u).unwrap().abs(), bi(1));

        let u = complete_primitive(&ints(&[3, 5])).unwrap();
        assert_eq!(u.column(0), ints(&[3, 5]));
        assert_eq!(det(&u).unwrap().abs(), bi(1));
    }

    #[test]
    fn complete_primitive_rejects_imprimitive() {
        match complete_primitive(&ints(&[2, 4, 6])) {
            Err(Error::NotPrimitive { gcd }) => assert_eq!(gcd, bi(2)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn inverse_examples() {
        assert!(inverse_unimodular(&IntMatrix::identity(3)).unwrap().is_identity());
        let m = IntMatrix::from_i64(&[&[1, 1], &[1, 0]]);
        assert_eq!(inverse_unimodular(&m).unwrap(), IntMatrix::from_i64(&[&[0, 1], &[1, -1]]));
        assert!(matches!(
            inverse_unimodular(&IntMatrix::from_i64(&[&[2, 0], &[0, 1]])),
            Err(Error::NotUnimodular { .. })
        ));
    }

    #[test]
    fn inverse_of_sqrt_family_left_witness() {
        // left witness of the m = 2 Smith form from the construction literature
        let m = 2;
        let x = IntMatrix::from_i64(&[
            &[1, 0, 0, 0],
            &[0, 1, 0, 0],
            &[0, -4 * m - 1, 0, 1],
            &[-2 * m - 1, 0, 1, 0],
        ]);
        let inv = inverse_unimodular(&x).unwrap();
        assert!((&x * &inv).is_identity());
        assert!((&inv * &x).is_identity());
    }

    #[test]
    fn rational_solve_and_inverse() {
        let q = |n: i64, d: i64| BigRational::new(bi(n), bi(d));
        let m = QMatrix::from_rows(vec![vec![q(2, 1), q(1, 1)], vec![q(1, 1), q(3, 1)]]).unwrap();
        let x = m.solve(&[q(1, 1), q(2, 1)]).unwrap();
        assert_eq!(x, vec![q(1, 5), q(3, 5)]);
        assert_eq!(m.det().unwrap(), q(5, 1));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), QMatrix::identity(2));

        let singular = QMatrix::from_rows(vec![vec![q(1, 1), q(2, 1)], vec![q(2, 1), q(4, 1)]]).unwrap();
        assert!(singular.inverse().is_none());
        assert!(singular.solve(&[q(1, 1), q(3, 1)]).is_none());
        assert_eq!(singular.rank(), 1);
    }
}
