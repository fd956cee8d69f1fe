use num::rational::BigRational;
use num::BigInt;

use super::{ExactScalar, SymbolPoly};
use crate::{Error, Result};

/// How the formal symbol `v` responds to `d/dx`.
#[derive(Clone, Debug, PartialEq)]
pub enum DerivationMode {
    /// `v` is a constant parameter (the benchmark `lambda`); `d/dx` kills it.
    Constant,
    /// `v = e^{kx}`; `d/dx` acts as `k * v * d/dv`.
    Exponential(BigRational),
}

impl DerivationMode {
    pub fn exponential(k: i64) -> Self {
        DerivationMode::Exponential(BigRational::from(BigInt::from(k)))
    }
}

/// A canonical rational function `num/den` of the symbol `v` over
/// `Q(sqrt(d))`, tagged with a derivation mode.
///
/// Canonical form: `gcd(num, den) = 1` and `den` monic; zero is `0/1`.
/// Constructors and operations maintain canonical form, so structural
/// equality is field equality.
#[derive(Clone, Debug, PartialEq)]
pub struct RingElement {
    num: SymbolPoly,
    den: SymbolPoly,
    mode: DerivationMode,
}

impl RingElement {
    pub fn new(num: SymbolPoly, den: SymbolPoly, mode: DerivationMode) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::canonical(num, den, mode))
    }

    fn canonical(num: SymbolPoly, den: SymbolPoly, mode: DerivationMode) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return RingElement {
                num: SymbolPoly::zero(),
                den: SymbolPoly::one(),
                mode,
            };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_rem(&g).expect("nonzero gcd").0,
                den.div_rem(&g).expect("nonzero gcd").0,
            )
        };
        let lead_inv = den
            .leading()
            .expect("nonzero denominator")
            .inv()
            .expect("nonzero leading coefficient");
        RingElement {
            num: num.scale(&lead_inv),
            den: den.scale(&lead_inv),
            mode,
        }
    }

    pub fn zero(mode: DerivationMode) -> Self {
        RingElement {
            num: SymbolPoly::zero(),
            den: SymbolPoly::one(),
            mode,
        }
    }

    pub fn one(mode: DerivationMode) -> Self {
        Self::from_scalar(ExactScalar::one(), mode)
    }

    /// The symbol `v` itself.
    pub fn symbol(mode: DerivationMode) -> Self {
        RingElement {
            num: SymbolPoly::symbol(),
            den: SymbolPoly::one(),
            mode,
        }
    }

    pub fn from_scalar(c: ExactScalar, mode: DerivationMode) -> Self {
        RingElement {
            num: SymbolPoly::constant(c),
            den: SymbolPoly::one(),
            mode,
        }
    }

    pub fn from_rational(r: BigRational, mode: DerivationMode) -> Self {
        Self::from_scalar(ExactScalar::from_rational(r), mode)
    }

    pub fn from_poly(num: SymbolPoly, mode: DerivationMode) -> Self {
        RingElement {
            num,
            den: SymbolPoly::one(),
            mode,
        }
    }

    pub fn num(&self) -> &SymbolPoly {
        &self.num
    }

    pub fn den(&self) -> &SymbolPoly {
        &self.den
    }

    pub fn mode(&self) -> &DerivationMode {
        &self.mode
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn disc(&self) -> u64 {
        match self.num.disc() {
            1 => self.den.disc(),
            d => d,
        }
    }

    fn ensure_compat(&self, other: &Self) -> Result<()> {
        if self.mode != other.mode {
            return Err(Error::MismatchedMode);
        }
        match (self.disc(), other.disc()) {
            (a, b) if a == b => Ok(()),
            (1, _) | (_, 1) => Ok(()),
            (a, b) => Err(Error::MismatchedDiscriminant(a, b)),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.ensure_compat(other)?;
        let num = self
            .num
            .mul(&other.den)
            .add(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        Ok(Self::canonical(num, den, self.mode.clone()))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.ensure_compat(other)?;
        Ok(Self::canonical(
            self.num.mul(&other.num),
            self.den.mul(&other.den),
            self.mode.clone(),
        ))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.checked_mul(&other.inv()?)
    }

    pub fn neg(&self) -> Self {
        RingElement {
            num: self.num.neg(),
            den: self.den.clone(),
            mode: self.mode.clone(),
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(
            self.den.clone(),
            self.num.clone(),
            self.mode.clone(),
        ))
    }

    pub fn scale(&self, c: &ExactScalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.mode.clone());
        }
        RingElement {
            num: self.num.scale(c),
            den: self.den.clone(),
            mode: self.mode.clone(),
        }
    }

    pub fn pow(&self, mut m: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.mode.clone());
        while m > 0 {
            if m & 1 == 1 {
                acc = &acc * &base;
            }
            m >>= 1;
            if m > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// The spatial derivative `d/dx`.
    ///
    /// Constant mode: zero. Exponential mode with `v = e^{kx}`: the chain
    /// rule gives `k * v * d/dv` applied to `num/den`.
    pub fn ddx(&self) -> Self {
        match &self.mode {
            DerivationMode::Constant => Self::zero(self.mode.clone()),
            DerivationMode::Exponential(k) => {
                let dnum = self
                    .num
                    .derivative()
                    .mul(&self.den)
                    .sub(&self.num.mul(&self.den.derivative()));
                let num = dnum
                    .mul(&SymbolPoly::symbol())
                    .scale(&ExactScalar::from_rational(k.clone()));
                let den = self.den.mul(&self.den);
                Self::canonical(num, den, self.mode.clone())
            }
        }
    }

    /// Numeric value at a floating-point `v`; `None` when the denominator
    /// vanishes there.
    pub fn eval_f64(&self, v: f64) -> Option<f64> {
        let den = self.den.eval_f64(v);
        if den.abs() < f64::MIN_POSITIVE {
            return None;
        }
        Some(self.num.eval_f64(v) / den)
    }
}

macro_rules! ring_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait for &RingElement {
            type Output = RingElement;
            fn $method(self, rhs: &RingElement) -> RingElement {
                self.$checked(rhs).expect("mismatched coefficient context")
            }
        }
    };
}

ring_binop!(Add, add, checked_add);
ring_binop!(Sub, sub, checked_sub);
ring_binop!(Mul, mul, checked_mul);

#[cfg(test)]
mod tests {
    use super::*;
    use num::One;

    fn c(n: i64) -> ExactScalar {
        ExactScalar::from_int(n)
    }

    fn poly(coeffs: &[i64]) -> SymbolPoly {
        SymbolPoly::from_coeffs(coeffs.iter().map(|&x| c(x)).collect())
    }

    #[test]
    fn cancels_common_factor() {
        // (v^2 - 1)/(v + 1) -> v - 1
        let e = RingElement::new(poly(&[-1, 0, 1]), poly(&[1, 1]), DerivationMode::Constant)
            .unwrap();
        assert_eq!(e.num(), &poly(&[-1, 1]));
        assert!(e.den().is_one());
    }

    #[test]
    fn content_removal_and_monic_denominator() {
        // (2v)/2 -> v
        let e =
            RingElement::new(poly(&[0, 2]), poly(&[2]), DerivationMode::Constant).unwrap();
        assert_eq!(e, RingElement::symbol(DerivationMode::Constant));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RingElement::new(poly(&[1]), SymbolPoly::zero(), DerivationMode::Constant),
            Err(Error::ZeroDenominator)
        );
    }

    #[test]
    fn canonicalize_is_idempotent() {
        let e = RingElement::new(poly(&[0, 2, 2]), poly(&[4, 4]), DerivationMode::Constant)
            .unwrap();
        let again =
            RingElement::new(e.num().clone(), e.den().clone(), e.mode().clone()).unwrap();
        assert_eq!(e, again);
    }

    #[test]
    fn ddx_constant_mode_is_zero() {
        let e = RingElement::symbol(DerivationMode::Constant).pow(2);
        assert!(e.ddx().is_zero());
    }

    #[test]
    fn ddx_exponential_quotient_rule() {
        // d/dx [e^x/(1+e^x)] = e^x/(1+e^x)^2
        let mode = DerivationMode::exponential(1);
        let e = RingElement::new(poly(&[0, 1]), poly(&[1, 1]), mode.clone()).unwrap();
        let expect = RingElement::new(poly(&[0, 1]), poly(&[1, 2, 1]), mode.clone()).unwrap();
        assert_eq!(e.ddx(), expect);
        // d/dx e^x = e^x
        let v = RingElement::symbol(mode.clone());
        assert_eq!(v.ddx(), v);
    }

    #[test]
    fn ddx_exponential_rate_scales_powers() {
        // mode v = e^{2x}: d/dx v^3 = 6 v^3
        let mode = DerivationMode::exponential(2);
        let e = RingElement::symbol(mode.clone()).pow(3);
        assert_eq!(e.ddx(), e.scale(&c(6)));
    }

    #[test]
    fn mode_mismatch_is_a_usage_error() {
        let a = RingElement::symbol(DerivationMode::Constant);
        let b = RingElement::symbol(DerivationMode::exponential(1));
        assert_eq!(a.checked_add(&b), Err(Error::MismatchedMode));
    }

    #[test]
    fn division_roundtrip() {
        let mode = DerivationMode::Constant;
        let p = RingElement::new(poly(&[1, 3]), poly(&[2, 0, 1]), mode.clone()).unwrap();
        let q = RingElement::new(poly(&[-1, 1, 1]), poly(&[5]), mode).unwrap();
        let r = (&p * &q).checked_div(&q).unwrap();
        assert_eq!(r, p);
        assert!(num::BigRational::one().is_one());
    }
}
