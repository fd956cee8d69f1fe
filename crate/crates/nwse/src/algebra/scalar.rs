use num::rational::BigRational;
use num::{BigInt, One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// An element `a + b*sqrt(d)` of the quadratic field `Q(sqrt(d))`.
///
/// The discriminant `d` is a square-free positive integer. Canonical form:
/// `d = 1` means pure-rational (the surd part is folded into the rational
/// part), and any element with zero surd part is normalized to `d = 1`, so
/// structural equality is field equality and pure rationals mix freely with
/// any discriminant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactScalar {
    rational: BigRational,
    surd: BigRational,
    disc: u64,
}

fn is_square_free(mut d: u64) -> bool {
    let mut p = 2u64;
    while p * p <= d {
        if d % (p * p) == 0 {
            return false;
        }
        while d % p == 0 {
            d /= p;
        }
        p += 1;
    }
    true
}

impl ExactScalar {
    /// Builds `rational + surd*sqrt(disc)`, normalizing to canonical form.
    pub fn new(rational: BigRational, surd: BigRational, disc: u64) -> Result<Self> {
        if disc == 0 || !is_square_free(disc) {
            return Err(Error::InvalidDiscriminant(disc));
        }
        if disc == 1 {
            // sqrt(1) = 1: fold the surd part into the rational part.
            return Ok(ExactScalar {
                rational: rational + surd,
                surd: BigRational::zero(),
                disc: 1,
            });
        }
        if surd.is_zero() {
            return Ok(ExactScalar {
                rational,
                surd,
                disc: 1,
            });
        }
        Ok(ExactScalar {
            rational,
            surd,
            disc,
        })
    }

    pub fn from_rational(r: BigRational) -> Self {
        ExactScalar {
            rational: r,
            surd: BigRational::zero(),
            disc: 1,
        }
    }

    /// `p/q` as a pure rational.
    pub fn from_frac(p: i64, q: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_frac(n, 1)
    }

    /// `r*sqrt(d)`.
    pub fn surd(r: BigRational, disc: u64) -> Result<Self> {
        Self::new(BigRational::zero(), r, disc)
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.rational
    }

    pub fn surd_part(&self) -> &BigRational {
        &self.surd
    }

    pub fn disc(&self) -> u64 {
        self.disc
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.surd.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.rational.is_one() && self.surd.is_zero()
    }

    /// The common discriminant of two operands; pure rationals (`d = 1`)
    /// merge with anything.
    fn merged_disc(&self, other: &Self) -> Result<u64> {
        match (self.disc, other.disc) {
            (a, b) if a == b => Ok(a),
            (1, b) => Ok(b),
            (a, 1) => Ok(a),
            (a, b) => Err(Error::MismatchedDiscriminant(a, b)),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let d = self.merged_disc(other)?;
        ExactScalar::new(
            &self.rational + &other.rational,
            &self.surd + &other.surd,
            d,
        )
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg())
    }

    /// `(a1 + b1 sqrt(d))(a2 + b2 sqrt(d)) = (a1 a2 + d b1 b2) + (a1 b2 + a2 b1) sqrt(d)`.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let d = self.merged_disc(other)?;
        let db = BigRational::from(BigInt::from(d));
        ExactScalar::new(
            &self.rational * &other.rational + &db * &self.surd * &other.surd,
            &self.rational * &other.surd + &other.rational * &self.surd,
            d,
        )
    }

    pub fn neg(&self) -> Self {
        ExactScalar {
            rational: -&self.rational,
            surd: -&self.surd,
            disc: self.disc,
        }
    }

    /// Multiplicative inverse `(a - b sqrt(d)) / (a^2 - d b^2)`.
    ///
    /// The norm `a^2 - d b^2` vanishes only at zero because `d` is
    /// square-free, so every nonzero element is invertible.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let db = BigRational::from(BigInt::from(self.disc));
        let norm = &self.rational * &self.rational - &db * &self.surd * &self.surd;
        debug_assert!(!norm.is_zero());
        ExactScalar::new(&self.rational / &norm, -&self.surd / &norm, self.disc)
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.checked_mul(&other.inv()?)
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.rational.to_f64().unwrap_or(f64::NAN);
        let b = self.surd.to_f64().unwrap_or(f64::NAN);
        a + b * (self.disc as f64).sqrt()
    }

    pub fn abs_cmp_key(&self) -> (BigRational, BigRational) {
        (self.rational.abs(), self.surd.abs())
    }
}

// Operator sugar for internal arithmetic. Contexts are validated at the
// RingElement / TimeSeries boundaries, so a mismatched discriminant here is
// a bug, not user input.
macro_rules! scalar_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait for &ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &ExactScalar) -> ExactScalar {
                self.$checked(rhs).expect("mismatched surd discriminant")
            }
        }
    };
}

scalar_binop!(Add, add, checked_add);
scalar_binop!(Sub, sub, checked_sub);
scalar_binop!(Mul, mul, checked_mul);

impl std::ops::Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar::neg(self)
    }
}
