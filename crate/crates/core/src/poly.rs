//! Dense univariate polynomials over Q, plus the expression parser shared by
//! field and element input.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Polynomial with rational coefficients, lowest degree first, no trailing
/// zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints<I: Into<BigInt>>(coeffs: impl IntoIterator<Item = I>) -> Self {
        Self::new(coeffs.into_iter().map(|c| BigRational::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(coeff: BigRational, degree: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); degree + 1];
        coeffs[degree] = coeff;
        Self::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    /// Integer coefficients, if every coefficient is integral.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    pub fn add(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn scale(&self, c: &BigRational) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &RatPoly) -> RatPoly {
        if self.is_zero() || other.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::new(out)
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, divisor: &RatPoly) -> (RatPoly, RatPoly) {
        let dd = divisor.degree().expect("polynomial division by zero");
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let top = rem.len() - 1;
            let c = &rem[top] / &lead;
            if !c.is_zero() {
                let shift = top - dd;
                for (i, b) in divisor.coeffs.iter().enumerate() {
                    rem[shift + i] -= &c * b;
                }
                quot[shift] = c;
            }
            rem.pop();
        }
        (RatPoly::new(quot), RatPoly::new(rem))
    }

    /// Returns `(g, s, t)` with `s*self + t*other = g`, `g` monic (or zero).
    pub fn ext_gcd(&self, other: &RatPoly) -> (RatPoly, RatPoly, RatPoly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (RatPoly::from_ints([1]), RatPoly::zero());
        let (mut t0, mut t1) = (RatPoly::zero(), RatPoly::from_ints([1]));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s2 = s0.sub(&q.mul(&s1));
            let t2 = t0.sub(&q.mul(&t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        match r0.leading().cloned() {
            Some(lead) => {
                let inv = lead.recip();
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
            None => (r0, s0, t0),
        }
    }

    pub fn derivative(&self) -> RatPoly {
        RatPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    /// Renders highest degree first in the given variable.
    pub fn display_with(&self, var: char) -> String {
        let terms: Vec<(usize, &BigRational)> =
            self.coeffs.iter().enumerate().rev().filter(|(_, c)| !c.is_zero()).collect();
        render_terms(&terms, var)
    }

    /// Renders lowest degree first in the given variable.
    pub fn display_ascending(&self, var: char) -> String {
        let terms: Vec<(usize, &BigRational)> =
            self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        render_terms(&terms, var)
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with('X'))
    }
}

fn render_terms(terms: &[(usize, &BigRational)], var: char) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (idx, (deg, c)) in terms.iter().enumerate() {
        let negative = c.is_negative();
        if idx == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let mag = c.abs();
        let monomial = match deg {
            0 => String::new(),
            1 => var.to_string(),
            d => format!("{var}^{d}"),
        };
        if monomial.is_empty() {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&monomial);
        } else {
            out.push_str(&format!("{mag}*{monomial}"));
        }
    }
    out
}

/// Parses a polynomial expression in a single letter variable, such as
/// `"2 + 3*t - t^3"`, `"x^4-10x^2+1"` or `"1/2*t^2 - 5/2"`.
///
/// Whitespace is ignored. Coefficients are integers or fractions `p/q`; a
/// coefficient may be joined to the variable with `*` or directly. Returns
/// the polynomial and the variable letter used (if any).
pub fn parse_poly(input: &str) -> Result<(RatPoly, Option<char>)> {
    let chars: Vec<(usize, char)> =
        input.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
    let mut p = Parser { chars: &chars, pos: 0, end: input.len(), var: None };
    let poly = p.expression()?;
    Ok((poly, p.var))
}

struct Parser<'a> {
    chars: &'a [(usize, char)],
    pos: usize,
    end: usize,
    var: Option<char>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.end, |&(i, _)| i)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse { position: self.offset(), message: message.into() })
    }

    fn expression(&mut self) -> Result<RatPoly> {
        if self.peek().is_none() {
            return self.err("empty expression");
        }
        let mut acc = RatPoly::zero();
        let mut first = true;
        while self.peek().is_some() {
            let negative = match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    false
                }
                Some('-') => {
                    self.pos += 1;
                    true
                }
                Some(_) if first => false,
                Some(c) => return self.err(format!("expected '+' or '-', found '{c}'")),
                None => unreachable!(),
            };
            let term = self.term()?;
            acc = if negative { acc.sub(&term) } else { acc.add(&term) };
            first = false;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RatPoly> {
        let coeff = match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let c = self.rational()?;
                if self.peek() == Some('*') {
                    self.pos += 1;
                    if !self.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
                        return self.err("expected variable after '*'");
                    }
                }
                Some(c)
            }
            Some(c) if c.is_ascii_alphabetic() => None,
            Some(c) => return self.err(format!("unexpected '{c}'")),
            None => return self.err("expected a term"),
        };
        let degree = match self.peek() {
            Some(c) if c.is_ascii_alphabetic() => {
                match self.var {
                    Some(v) if v != c => {
                        return self.err(format!("mixed variables '{v}' and '{c}'"));
                    }
                    _ => self.var = Some(c),
                }
                self.pos += 1;
                if self.peek() == Some('^') {
                    self.pos += 1;
                    let e = self.integer()?;
                    usize::try_from(&e).map_err(|_| Error::Parse {
                        position: self.offset(),
                        message: "exponent out of range".into(),
                    })?
                } else {
                    1
                }
            }
            _ => 0,
        };
        let coeff = coeff.unwrap_or_else(BigRational::one);
        Ok(RatPoly::monomial(coeff, degree))
    }

    fn rational(&mut self) -> Result<BigRational> {
        let num = self.integer()?;
        if self.peek() == Some('/') {
            self.pos += 1;
            let den = self.integer()?;
            if den.is_zero() {
                return self.err("zero denominator");
            }
            Ok(BigRational::new(num, den))
        } else {
            Ok(BigRational::from_integer(num))
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        let digits: String = self.chars[start..self.pos].iter().map(|&(_, c)| c).collect();
        Ok(digits.parse().expect("ascii digits parse"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn parses_implicit_and_explicit_products() {
        let (p, var) = parse_poly("x^4-10x^2+1").unwrap();
        assert_eq!(p, RatPoly::from_ints([1, 0, -10, 0, 1]));
        assert_eq!(var, Some('x'));
        let (p, _) = parse_poly(" 2 + 3*t - t^3 ").unwrap();
        assert_eq!(p, RatPoly::from_ints([2, 3, 0, -1]));
        let (p, var) = parse_poly("-1/2*t^2 + 5/2").unwrap();
        assert_eq!(p, RatPoly::new(vec![q(5, 2), q(0, 1), q(-1, 2)]));
        assert_eq!(var, Some('t'));
        let (p, var) = parse_poly("7").unwrap();
        assert_eq!(p, RatPoly::from_ints([7]));
        assert_eq!(var, None);
    }

    #[test]
    fn parse_errors_carry_positions() {
        match parse_poly("1 + t + x") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 8),
            other => panic!("unexpected {other:?}"),
        }
        match parse_poly("t^") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_poly("").is_err());
        assert!(parse_poly("1/0").is_err());
        assert!(parse_poly("3 t 4").is_err());
        assert!(parse_poly("2*").is_err());
    }

    #[test]
    fn display_round_trips() {
        let p = RatPoly::new(vec![q(2, 1), q(-1, 3), q(0, 1), q(-1, 1)]);
        assert_eq!(p.display_ascending('t'), "2 - 1/3*t - t^3");
        assert_eq!(p.display_with('t'), "-t^3 - 1/3*t + 2");
        assert_eq!(parse_poly(&p.display_ascending('t')).unwrap().0, p);
        assert_eq!(parse_poly(&p.display_with('t')).unwrap().0, p);
        assert_eq!(RatPoly::zero().display_with('t'), "0");
    }

    #[test]
    fn division_and_gcd() {
        let f = RatPoly::from_ints([-2, 0, 1]);
        let g = RatPoly::from_ints([0, 1]);
        let (quot, rem) = f.div_rem(&g);
        assert_eq!(quot, RatPoly::from_ints([0, 1]));
        assert_eq!(rem, RatPoly::from_ints([-2]));
        let (d, s, t) = f.ext_gcd(&g);
        assert_eq!(d, RatPoly::from_ints([1]));
        assert_eq!(s.mul(&f).add(&t.mul(&g)), d);
    }
}
