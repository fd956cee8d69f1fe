use num::rational::BigRational;
use num::BigInt;

use super::{DerivationMode, ExactScalar, RingElement};
use crate::{Error, Result};

/// A truncated polynomial in `t` with [`RingElement`] coefficients.
///
/// `trunc` is the truncation order `N`: coefficients of `t^0 .. t^N` are
/// represented, everything above is discarded. `truncation_loss` records
/// whether an operation ever dropped a nonzero coefficient past `t^N`, so
/// reports can state through which order the result is trustworthy.
///
/// Equality ignores the loss flag: it compares mode, truncation order and
/// coefficients.
#[derive(Clone, Debug)]
pub struct TimeSeries {
    coeffs: Vec<RingElement>,
    trunc: usize,
    mode: DerivationMode,
    loss: bool,
}

impl TimeSeries {
    pub fn zero(mode: DerivationMode, trunc: usize) -> Self {
        TimeSeries {
            coeffs: Vec::new(),
            trunc,
            mode,
            loss: false,
        }
    }

    /// A series whose `t^0` coefficient is `elem`.
    pub fn constant(elem: RingElement, trunc: usize) -> Self {
        let mode = elem.mode().clone();
        Self::from_coeffs(vec![elem], mode, trunc).expect("single coefficient fits")
    }

    pub fn from_coeffs(
        coeffs: Vec<RingElement>,
        mode: DerivationMode,
        trunc: usize,
    ) -> Result<Self> {
        if coeffs.len() > trunc + 1 {
            return Err(Error::MismatchedOrder(coeffs.len() - 1, trunc));
        }
        for c in &coeffs {
            if c.mode() != &mode {
                return Err(Error::MismatchedMode);
            }
        }
        let mut s = TimeSeries {
            coeffs,
            trunc,
            mode,
            loss: false,
        };
        s.trim();
        Ok(s)
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeff(&self, j: usize) -> RingElement {
        self.coeffs
            .get(j)
            .cloned()
            .unwrap_or_else(|| RingElement::zero(self.mode.clone()))
    }

    pub fn coeffs(&self) -> &[RingElement] {
        &self.coeffs
    }

    /// Highest represented power with a nonzero coefficient.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    pub fn mode(&self) -> &DerivationMode {
        &self.mode
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn truncation_loss(&self) -> bool {
        self.loss
    }

    pub fn disc(&self) -> u64 {
        self.coeffs
            .iter()
            .map(|c| c.disc())
            .find(|&d| d != 1)
            .unwrap_or(1)
    }

    pub(crate) fn with_loss(mut self, loss: bool) -> Self {
        self.loss = loss;
        self
    }

    fn ensure_compat(&self, other: &Self) -> Result<()> {
        if self.mode != other.mode {
            return Err(Error::MismatchedMode);
        }
        if self.trunc != other.trunc {
            return Err(Error::MismatchedOrder(self.trunc, other.trunc));
        }
        match (self.disc(), other.disc()) {
            (a, b) if a == b => Ok(()),
            (1, _) | (_, 1) => Ok(()),
            (a, b) => Err(Error::MismatchedDiscriminant(a, b)),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.ensure_compat(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|j| self.coeff(j).checked_add(&other.coeff(j)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_coeffs(coeffs, self.mode.clone(), self.trunc)?
            .with_loss(self.loss || other.loss))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        TimeSeries {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
            trunc: self.trunc,
            mode: self.mode.clone(),
            loss: self.loss,
        }
    }

    /// Cauchy product truncated at `t^N`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.ensure_compat(other)?;
        let top = self.trunc;
        let mut coeffs = vec![RingElement::zero(self.mode.clone()); top + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j > top {
                    break;
                }
                coeffs[i + j] = coeffs[i + j].checked_add(&a.checked_mul(b)?)?;
            }
        }
        Ok(Self::from_coeffs(coeffs, self.mode.clone(), self.trunc)?
            .with_loss(self.loss || other.loss))
    }

    /// `u^m` by binary powering; `m >= 1`.
    pub fn pow(&self, m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidInput("series_pow requires m >= 1".into()));
        }
        let mut acc = self.clone();
        // Highest set bit below the leading one drives the square-and-multiply.
        let bits = 32 - m.leading_zeros();
        for shift in (0..bits - 1).rev() {
            acc = acc.mul(&acc)?;
            if (m >> shift) & 1 == 1 {
                acc = acc.mul(self)?;
            }
        }
        Ok(acc)
    }

    pub fn scale(&self, c: &RingElement) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| a.checked_mul(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_coeffs(coeffs, self.mode.clone(), self.trunc)?.with_loss(self.loss))
    }

    pub fn scale_rational(&self, r: &BigRational) -> Self {
        let c = ExactScalar::from_rational(r.clone());
        let coeffs = self.coeffs.iter().map(|a| a.scale(&c)).collect();
        Self::from_coeffs(coeffs, self.mode.clone(), self.trunc)
            .expect("scaling preserves shape")
            .with_loss(self.loss)
    }

    /// Integration from 0 to `t`: `c_j t^j -> c_j/(j+1) t^{j+1}`.
    ///
    /// A nonzero `t^N` coefficient would land past the truncation order; it
    /// is dropped and the loss flag is set.
    pub fn integrate_t(&self) -> Self {
        let mut loss = self.loss;
        let mut coeffs = vec![RingElement::zero(self.mode.clone())];
        for (j, c) in self.coeffs.iter().enumerate() {
            if j + 1 > self.trunc {
                if !c.is_zero() {
                    loss = true;
                }
                continue;
            }
            let inv = BigRational::new(BigInt::from(1), BigInt::from(j as i64 + 1));
            coeffs.push(c.scale(&ExactScalar::from_rational(inv)));
        }
        Self::from_coeffs(coeffs, self.mode.clone(), self.trunc)
            .expect("shifted coefficients fit")
            .with_loss(loss)
    }

    /// Formal `d/dt`. The result's truncation order drops by one: the input
    /// carries no information about the `t^N` coefficient's derivative.
    pub fn ddt(&self) -> Self {
        let trunc = self.trunc.saturating_sub(1);
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, c)| c.scale(&ExactScalar::from_int(j as i64)))
            .collect();
        Self::from_coeffs(coeffs, self.mode.clone(), trunc)
            .expect("derivative coefficients fit")
            .with_loss(self.loss)
    }

    /// Spatial derivative, applied coefficient-wise.
    pub fn ddx(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|c| c.ddx()).collect();
        Self::from_coeffs(coeffs, self.mode.clone(), self.trunc)
            .expect("ddx preserves shape")
            .with_loss(self.loss)
    }

    /// Re-truncates to a lower order, dropping higher coefficients.
    pub fn truncate_to(&self, trunc: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        let loss = self.loss
            || coeffs
                .iter()
                .skip(trunc + 1)
                .any(|c| !c.is_zero());
        coeffs.truncate(trunc + 1);
        Self::from_coeffs(coeffs, self.mode.clone(), trunc)
            .expect("truncated coefficients fit")
            .with_loss(loss)
    }

    /// Lowest power with a nonzero coefficient.
    pub fn leading_order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Horner evaluation in `t` of the numerically evaluated coefficients.
    ///
    /// Constant mode reads the symbol value from `v_value`; exponential mode
    /// computes `v = e^{kx}` and ignores `v_value`.
    pub fn eval_numeric(&self, x: f64, t: f64, v_value: f64) -> Result<f64> {
        let v = match &self.mode {
            DerivationMode::Constant => v_value,
            DerivationMode::Exponential(k) => {
                let k = num::ToPrimitive::to_f64(k).unwrap_or(f64::NAN);
                (k * x).exp()
            }
        };
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            let val = c
                .eval_f64(v)
                .ok_or(Error::EvaluationSingularity { x, t })?;
            acc = acc * t + val;
        }
        Ok(acc)
    }
}

impl PartialEq for TimeSeries {
    fn eq(&self, other: &Self) -> bool {
        self.mode == other.mode && self.trunc == other.trunc && self.coeffs == other.coeffs
    }
}
