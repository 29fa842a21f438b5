//! Weight vectors, Laurent polynomials in `z^μ`, and rank-generating polynomials.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Integer coordinates over the fundamental weights `ω_1, ..., ω_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct WeightVector(pub Vec<i64>);

impl WeightVector {
    pub fn zero(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        Self(v)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn scale(&self, c: i64) -> Self {
        Self(self.0.iter().map(|x| x * c).collect())
    }
}

impl Add for &WeightVector {
    type Output = WeightVector;
    fn add(self, rhs: &WeightVector) -> WeightVector {
        WeightVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &WeightVector {
    type Output = WeightVector;
    fn sub(self, rhs: &WeightVector) -> WeightVector {
        WeightVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", x)?;
        }
        f.write_str(")")
    }
}

/// Finite formal sum `Σ c_μ z^μ` with nonzero integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<WeightVector, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(mu: WeightVector) -> Self {
        let mut p = Self::zero();
        p.add_term(mu, BigInt::one());
        p
    }

    pub fn add_term(&mut self, mu: WeightVector, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(mu.clone()).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&mu);
        }
    }

    pub fn terms(&self) -> &BTreeMap<WeightVector, BigInt> {
        &self.terms
    }

    pub fn coefficient(&self, mu: &WeightVector) -> BigInt {
        self.terms.get(mu).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn map_exponents(&self, f: impl Fn(&WeightVector) -> WeightVector) -> Self {
        let mut out = Self::zero();
        for (mu, c) in &self.terms {
            out.add_term(f(mu), c.clone());
        }
        out
    }

    /// Sum of coefficients.
    pub fn total(&self) -> BigInt {
        self.terms.values().sum()
    }
}

impl FromIterator<WeightVector> for LaurentPoly {
    fn from_iter<I: IntoIterator<Item = WeightVector>>(iter: I) -> Self {
        let mut p = Self::zero();
        for mu in iter {
            p.add_term(mu, BigInt::one());
        }
        p
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (mu, c) in &rhs.terms {
            out.add_term(mu.clone(), c.clone());
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (mu, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{} * z^{}", c, mu)?;
        }
        Ok(())
    }
}

/// Polynomial in `q` with integer coefficients, trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QPolynomial {
    coeffs: Vec<BigInt>,
}

impl QPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    /// `1 + sign * q^d`.
    pub fn binomial(d: usize, sign: i64) -> Self {
        let mut c = vec![BigInt::zero(); d + 1];
        c[0] += 1;
        c[d] += sign;
        Self::new(c)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Exact quotient by `d`, or `InexactDivision`.
    pub fn div_exact(&self, d: &QPolynomial) -> Result<QPolynomial> {
        let dd = d.degree().ok_or(Error::InexactDivision)?;
        let lead = &d.coeffs[dd];
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return if self.is_zero() { Ok(Self::default()) } else { Err(Error::InexactDivision) };
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dd];
            if !(top % lead).is_zero() {
                return Err(Error::InexactDivision);
            }
            let c = top / lead;
            for (j, dj) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &c * dj;
            }
            quot[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision);
        }
        Ok(Self::new(quot))
    }

    pub fn is_symmetric(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    pub fn is_unimodal(&self) -> bool {
        let peak = self.coeffs.windows(2).take_while(|w| w[0] <= w[1]).count();
        self.coeffs[peak..].windows(2).all(|w| w[0] >= w[1])
    }
}

pub fn is_symmetric_unimodal(p: &QPolynomial) -> bool {
    p.is_symmetric() && p.is_unimodal()
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;
    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::default();
        }
        let mut c = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        QPolynomial::new(c)
    }
}

impl Add for &QPolynomial {
    type Output = QPolynomial;
    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let get = |p: &QPolynomial, i: usize| p.coeffs.get(i).cloned().unwrap_or_default();
        QPolynomial::new((0..n).map(|i| get(self, i) + get(rhs, i)).collect())
    }
}

impl Neg for &QPolynomial {
    type Output = QPolynomial;
    fn neg(self) -> QPolynomial {
        QPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            first = false;
            let a = c.abs();
            match d {
                0 => write!(f, "{}", a)?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{} ", a)?;
                    }
                    if d == 1 {
                        f.write_str("q")?;
                    } else {
                        write!(f, "q^{}", d)?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Gaussian binomial `[m choose k]_q`, built by successive exact divisions.
pub fn qbinomial(m: usize, k: usize) -> Result<QPolynomial> {
    if k > m {
        return Err(Error::InvalidObject(format!("qbinomial({}, {})", m, k)));
    }
    let mut p = QPolynomial::one();
    for i in 1..=k {
        p = (&p * &QPolynomial::binomial(m - k + i, -1)).div_exact(&QPolynomial::binomial(i, -1))?;
    }
    Ok(p)
}

/// `∏_{i=1}^n (1 + q^i)`.
pub fn shifted_product(n: usize) -> QPolynomial {
    (1..=n).fold(QPolynomial::one(), |acc, i| &acc * &QPolynomial::binomial(i, 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_binomials() {
        assert_eq!(qbinomial(2, 1).unwrap(), QPolynomial::from_i64(&[1, 1]));
        assert_eq!(qbinomial(4, 2).unwrap(), QPolynomial::from_i64(&[1, 1, 2, 1, 1]));
        assert_eq!(qbinomial(5, 0).unwrap(), QPolynomial::one());
    }

    #[test]
    fn exact_division() {
        let a = QPolynomial::from_i64(&[1, 0, -1]);
        let b = QPolynomial::from_i64(&[1, -1]);
        assert_eq!(a.div_exact(&b).unwrap(), QPolynomial::from_i64(&[1, 1]));
        assert_eq!(QPolynomial::from_i64(&[1, 0, 1]).div_exact(&b), Err(Error::InexactDivision));
    }

    #[test]
    fn display_forms() {
        assert_eq!(QPolynomial::from_i64(&[1, 1, 2]).to_string(), "1 + q + 2 q^2");
        assert_eq!(QPolynomial::from_i64(&[0, -1]).to_string(), "-q");
        let mut p = LaurentPoly::monomial(WeightVector(vec![0, -1]));
        p.add_term(WeightVector(vec![1, 0]), BigInt::from(2));
        assert_eq!(p.to_string(), "1 * z^(0,-1) + 2 * z^(1,0)");
    }

    #[test]
    fn symmetry_and_unimodality() {
        assert!(is_symmetric_unimodal(&QPolynomial::one()));
        assert!(is_symmetric_unimodal(&shifted_product(6)));
        assert!(!QPolynomial::from_i64(&[1, 2]).is_symmetric());
        assert!(!QPolynomial::from_i64(&[2, 1, 2]).is_unimodal());
    }

    #[test]
    fn laurent_cancellation() {
        let x = WeightVector(vec![1]);
        let mut p = LaurentPoly::monomial(x.clone());
        p.add_term(x, BigInt::from(-1));
        assert!(p.is_zero());
    }
}
