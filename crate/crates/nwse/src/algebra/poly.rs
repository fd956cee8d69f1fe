use super::ExactScalar;
use crate::{Error, Result};

/// A univariate polynomial in the formal symbol `v` over `Q(sqrt(d))`.
///
/// Coefficients are stored by ascending power; the highest-index coefficient
/// is nonzero, and the empty list is zero.
#[derive(Clone, Debug, PartialEq)]
pub struct SymbolPoly {
    coeffs: Vec<ExactScalar>,
}

impl SymbolPoly {
    pub fn from_coeffs(mut coeffs: Vec<ExactScalar>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        SymbolPoly { coeffs }
    }

    pub fn zero() -> Self {
        SymbolPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(ExactScalar::one())
    }

    pub fn constant(c: ExactScalar) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The symbol `v` itself.
    pub fn symbol() -> Self {
        Self::monomial(ExactScalar::one(), 1)
    }

    /// `c * v^j`.
    pub fn monomial(c: ExactScalar, j: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![ExactScalar::zero(); j + 1];
        coeffs[j] = c;
        SymbolPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, j: usize) -> ExactScalar {
        self.coeffs.get(j).cloned().unwrap_or_else(ExactScalar::zero)
    }

    pub fn coeffs(&self) -> &[ExactScalar] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&ExactScalar> {
        self.coeffs.last()
    }

    /// The discriminant carried by the coefficients (1 if none uses a surd).
    pub fn disc(&self) -> u64 {
        self.coeffs
            .iter()
            .map(|c| c.disc())
            .find(|&d| d != 1)
            .unwrap_or(1)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|j| &self.coeff(j) + &other.coeff(j)).collect();
        Self::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        SymbolPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs =
            vec![ExactScalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Self::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &ExactScalar) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Euclidean division over the field: `self = q * div + r` with
    /// `deg r < deg div`.
    pub fn div_rem(&self, div: &Self) -> Result<(Self, Self)> {
        let dlead = div.leading().ok_or(Error::DivisionByZero)?;
        let dlead_inv = dlead.inv()?;
        let ddeg = div.degree().unwrap();
        let mut rem = self.clone();
        let mut quot = vec![ExactScalar::zero(); self.coeffs.len().saturating_sub(ddeg)];
        while let Some(rdeg) = rem.degree() {
            if rdeg < ddeg {
                break;
            }
            let factor = rem.leading().unwrap() * &dlead_inv;
            let shift = rdeg - ddeg;
            quot[shift] = factor.clone();
            rem = rem.sub(&div.mul(&Self::monomial(factor, shift)));
        }
        Ok((Self::from_coeffs(quot), rem))
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lead) => self.scale(&lead.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Monic greatest common divisor by the Euclidean algorithm over
    /// `Q(sqrt(d))`. By convention `gcd(0, 0) = 0` and `gcd(p, 0) = monic(p)`.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            // Re-normalize each round to keep rational coefficients small.
            let r = a.div_rem(&b).expect("nonzero divisor").1.monic();
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Formal derivative `d/dv`.
    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, c)| c * &ExactScalar::from_int(j as i64))
            .collect();
        Self::from_coeffs(coeffs)
    }

    /// Horner evaluation at a floating-point value of `v`.
    pub fn eval_f64(&self, v: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * v + c.to_f64())
    }
}
