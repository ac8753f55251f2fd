//! Exact one-variable polynomial and truncated power-series arithmetic.
//!
//! [`QPoly`] is a sparse Laurent polynomial with arbitrary-precision integer
//! coefficients; [`TruncSeries`] is a dense power series known up to an
//! explicit order. Both are immutable values.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Sparse Laurent polynomial in `q` with exact integer coefficients.
///
/// No stored coefficient is zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    /// `coefficient · q^exponent`.
    pub fn monomial(coefficient: impl Into<BigInt>, exponent: i64) -> Self {
        let mut poly = Self::zero();
        poly.add_term(exponent, coefficient.into());
        poly
    }

    /// Builds `Σ coeffs[n] q^n`.
    pub fn from_coeffs<C: Into<BigInt>>(coeffs: impl IntoIterator<Item = C>) -> Self {
        Self::from_terms(coeffs.into_iter().enumerate().map(|(n, c)| (n as i64, c)))
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut poly = Self::zero();
        for (e, c) in terms {
            poly.add_term(e, c.into());
        }
        poly
    }

    fn add_term(&mut self, exponent: i64, coefficient: BigInt) {
        if coefficient.is_zero() {
            return;
        }
        let slot = self.terms.entry(exponent).or_insert_with(BigInt::zero);
        *slot += coefficient;
        if slot.is_zero() {
            self.terms.remove(&exponent);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `q^exponent`, zero when absent.
    pub fn coeff(&self, exponent: i64) -> BigInt {
        self.terms
            .get(&exponent)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn low_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Value at `q = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Truncates to a power series of the given order. Negative exponents
    /// are not representable in a power series.
    pub fn truncate(&self, order: u32) -> Result<TruncSeries> {
        if let Some(low) = self.low_degree() {
            if low < 0 {
                return Err(Error::Domain(format!(
                    "polynomial has a q^{low} term and is not a power series"
                )));
            }
        }
        let mut coeffs = vec![BigInt::zero(); order as usize + 1];
        for (e, c) in self.terms.range(..=i64::from(order)) {
            coeffs[*e as usize] = c.clone();
        }
        Ok(TruncSeries { order, coeffs })
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (e, c)) in self.terms().enumerate() {
            let negative = c.sign() == num_bigint::Sign::Minus;
            let magnitude = c.magnitude();
            match (n, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let unit = magnitude.is_one();
            match e {
                0 => write!(f, "{magnitude}")?,
                1 if unit => f.write_str("q")?,
                1 => write!(f, "{magnitude}q")?,
                _ if unit => write!(f, "q^{e}")?,
                _ => write!(f, "{magnitude}q^{e}")?,
            }
        }
        Ok(())
    }
}

impl Add for &QPoly {
    type Output = QPoly;

    fn add(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &QPoly {
    type Output = QPoly;

    fn sub(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Mul for &QPoly {
    type Output = QPoly;

    fn mul(self, rhs: &QPoly) -> QPoly {
        let mut out = QPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &QPoly {
    type Output = QPoly;

    fn neg(self) -> QPoly {
        QPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for QPoly {
            type Output = QPoly;

            fn $method(self, rhs: QPoly) -> QPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for QPoly {
    type Output = QPoly;

    fn neg(self) -> QPoly {
        -&self
    }
}

/// Power series `c₀ + c₁q + … + c_N q^N + O(q^{N+1})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncSeries {
    order: u32,
    coeffs: Vec<BigInt>,
}

impl TruncSeries {
    pub fn zero(order: u32) -> Self {
        Self {
            order,
            coeffs: vec![BigInt::zero(); order as usize + 1],
        }
    }

    pub fn one(order: u32) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// Takes the first `order + 1` coefficients, padding with zeros.
    pub fn from_coeffs<C: Into<BigInt>>(order: u32, coeffs: impl IntoIterator<Item = C>) -> Self {
        let mut s = Self::zero(order);
        for (slot, c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = c.into();
        }
        s
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^exponent`. Negative exponents are zero; exponents
    /// past the order are unknown and reported as [`Error::Truncated`].
    pub fn coeff(&self, exponent: i64) -> Result<BigInt> {
        if exponent < 0 {
            return Ok(BigInt::zero());
        }
        if exponent > i64::from(self.order) {
            return Err(Error::Truncated {
                exponent,
                order: self.order,
            });
        }
        Ok(self.coeffs[exponent as usize].clone())
    }

    /// Re-truncates to a lower order. Raising the order is not possible.
    pub fn with_order(&self, order: u32) -> Self {
        let order = order.min(self.order);
        Self {
            order,
            coeffs: self.coeffs[..=order as usize].to_vec(),
        }
    }

    /// Multiplies by `q^k`, `k ≥ 0`, keeping the order.
    pub fn shift(&self, k: u32) -> Self {
        let mut out = Self::zero(self.order);
        for (n, c) in self.coeffs.iter().enumerate() {
            let target = n + k as usize;
            if target > self.order as usize {
                break;
            }
            out.coeffs[target] = c.clone();
        }
        out
    }

    /// Multiplies in place by `1/(1 − q^step)`.
    fn divide_by_one_minus_power(&mut self, step: usize) {
        for n in step..self.coeffs.len() {
            let prev = self.coeffs[n - step].clone();
            self.coeffs[n] += prev;
        }
    }
}

impl Add for &TruncSeries {
    type Output = TruncSeries;

    fn add(self, rhs: &TruncSeries) -> TruncSeries {
        let order = self.order.min(rhs.order);
        TruncSeries {
            order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Mul for &TruncSeries {
    type Output = TruncSeries;

    fn mul(self, rhs: &TruncSeries) -> TruncSeries {
        let order = self.order.min(rhs.order);
        let mut out = TruncSeries::zero(order);
        let len = order as usize + 1;
        for (i, a) in self.coeffs.iter().take(len).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(len - i).enumerate() {
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }
}

impl Add for TruncSeries {
    type Output = TruncSeries;

    fn add(self, rhs: TruncSeries) -> TruncSeries {
        &self + &rhs
    }
}

impl Mul for TruncSeries {
    type Output = TruncSeries;

    fn mul(self, rhs: TruncSeries) -> TruncSeries {
        &self * &rhs
    }
}

/// The Gaussian binomial `[m, p]_q`, built row by row from
/// `[n, k] = [n−1, k−1] + q^k [n−1, k]`.
pub fn gaussian_binomial(m: i64, p: i64) -> Result<QPoly> {
    if m < 0 || p < 0 || p > m {
        return Err(Error::Domain(format!(
            "gaussian binomial [{m}, {p}] needs 0 <= p <= m"
        )));
    }
    let p = p as usize;
    // row[k] holds [n, k] for the current n.
    let mut row: Vec<QPoly> = vec![QPoly::zero(); p + 1];
    row[0] = QPoly::one();
    for n in 1..=m as usize {
        for k in (1..=p.min(n)).rev() {
            let next = &row[k - 1] + &row[k].shift(k as i64);
            row[k] = next;
        }
    }
    Ok(row.swap_remove(p))
}

/// `1/(q;q)_k = Π_{r=1}^{k} 1/(1 − q^r)` truncated at `order`.
pub fn q_pochhammer_inv(k: u32, order: u32) -> TruncSeries {
    let mut s = TruncSeries::one(order);
    for step in 1..=k as usize {
        if step > order as usize {
            break;
        }
        s.divide_by_one_minus_power(step);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(coeffs: &[i64]) -> QPoly {
        QPoly::from_coeffs(coeffs.iter().copied())
    }

    #[test]
    fn gaussian_examples() {
        assert_eq!(gaussian_binomial(2, 1).unwrap(), poly(&[1, 1]));
        assert_eq!(gaussian_binomial(4, 2).unwrap(), poly(&[1, 1, 2, 1, 1]));
        assert_eq!(gaussian_binomial(5, 0).unwrap(), QPoly::one());
        assert_eq!(gaussian_binomial(0, 0).unwrap(), QPoly::one());
    }

    #[test]
    fn gaussian_rejects_bad_input() {
        assert!(matches!(gaussian_binomial(2, 3), Err(Error::Domain(_))));
        assert!(matches!(gaussian_binomial(-1, 0), Err(Error::Domain(_))));
        assert!(matches!(gaussian_binomial(3, -1), Err(Error::Domain(_))));
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(q_pochhammer_inv(0, 5), TruncSeries::one(5));
        assert_eq!(
            q_pochhammer_inv(1, 4),
            TruncSeries::from_coeffs(4, [1, 1, 1, 1, 1])
        );
        assert_eq!(
            q_pochhammer_inv(2, 4),
            TruncSeries::from_coeffs(4, [1, 1, 2, 2, 3])
        );
    }

    #[test]
    fn ring_examples() {
        assert_eq!(&poly(&[1, 1]) * &poly(&[1, -1]), poly(&[1, 0, -1]));
        let p = poly(&[1, 0, 0, 2]);
        assert_eq!(p.coeff(3), BigInt::from(2));
        assert_eq!(p.coeff(1), BigInt::zero());
        assert_eq!(p.coeff(-7), BigInt::zero());
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn series_truncation_signal() {
        let s = q_pochhammer_inv(3, 6);
        assert_eq!(s.coeff(6).unwrap(), BigInt::from(7));
        assert_eq!(s.coeff(-1).unwrap(), BigInt::zero());
        assert_eq!(
            s.coeff(7),
            Err(Error::Truncated {
                exponent: 7,
                order: 6
            })
        );
    }

    #[test]
    fn mixed_orders_truncate_to_minimum() {
        let a = q_pochhammer_inv(1, 3);
        let b = q_pochhammer_inv(1, 8);
        assert_eq!((&a + &b).order(), 3);
        let prod = &a * &b;
        assert_eq!(prod.order(), 3);
        assert_eq!(prod.coefficients(), &[1, 2, 3, 4].map(BigInt::from)[..]);
    }

    #[test]
    fn display() {
        assert_eq!(std::format!("{}", poly(&[1, -1, 2])), "1 - q + 2q^2");
        assert_eq!(std::format!("{}", QPoly::monomial(-1, -2)), "-q^-2");
        assert_eq!(std::format!("{}", QPoly::zero()), "0");
    }

    #[test]
    fn laurent_polynomial_cannot_truncate() {
        assert!(QPoly::monomial(1, -1).truncate(3).is_err());
        let s = poly(&[1, 2, 3, 4]).truncate(2).unwrap();
        assert_eq!(s.coefficients(), &[1, 2, 3].map(BigInt::from)[..]);
    }
}
