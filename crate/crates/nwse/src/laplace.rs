//! Laplace-transform pipeline on truncated time series.
//!
//! The transform is applied only to polynomials in `t`, so the s-domain
//! image always lies on the span of `1/s^{j+1}`: a series with `t^j`
//! coefficient `c_j` maps to `sum_j c_j * j!/s^{j+1}`. Division by `s`
//! shifts the index, and the inverse transform reads the coefficients back.
//! The composition `L^{-1}[(1/s) L[u]]` equals integration from 0 to `t`
//! exactly — [`lt_integral`] is contractually equal to
//! [`TimeSeries::integrate_t`], and the equivalence is property-tested.
//!
//! The pipeline exists so the transform steps are individually inspectable;
//! the solver calls [`lt_integral`] rather than collapsing it away.

use num::rational::BigRational;
use num::BigInt;

use crate::algebra::{DerivationMode, ExactScalar, RingElement, TimeSeries};

/// The Laplace image of a truncated time series: `sum_j c_j * j!/s^{j+1}`.
///
/// `terms[j]` stores `c_j` (the factorial weight is implied by the index).
#[derive(Clone, Debug, PartialEq)]
pub struct SDomainSeries {
    terms: Vec<RingElement>,
    trunc: usize,
    mode: DerivationMode,
    loss: bool,
}

impl SDomainSeries {
    pub fn terms(&self) -> &[RingElement] {
        &self.terms
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    pub fn is_empty(&self) -> bool {
        self.terms.iter().all(|c| c.is_zero())
    }

    pub fn truncation_loss(&self) -> bool {
        self.loss
    }

    /// One term per line: `s^-(j+1): <ring-element * j!>`.
    pub fn render(&self) -> String {
        let mut lines: Vec<String> = self
            .terms
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| {
                let weight = ExactScalar::from_rational(BigRational::from(factorial(j)));
                format!("s^-{}: {}", j + 1, c.scale(&weight))
            })
            .collect();
        if lines.is_empty() {
            lines.push("s^-1: (0)".to_string());
        }
        lines.join("\n")
    }
}

fn factorial(j: usize) -> BigInt {
    (1..=j as u64).map(BigInt::from).product()
}

/// Forward transform: the `t^j` coefficient becomes the `j`-indexed term.
pub fn laplace(u: &TimeSeries) -> SDomainSeries {
    SDomainSeries {
        terms: u.coeffs().to_vec(),
        trunc: u.trunc(),
        mode: u.mode().clone(),
        loss: u.truncation_loss(),
    }
}

/// Division by `s`: index shift `j -> j+1` with the coefficient adjusted so
/// the represented function is `F/s`. The term at index `N` would leave the
/// representable range; it is dropped and the loss flag set.
pub fn div_by_s(f: &SDomainSeries) -> SDomainSeries {
    let mut loss = f.loss;
    let mut terms = vec![RingElement::zero(f.mode.clone())];
    for (j, c) in f.terms.iter().enumerate() {
        if j + 1 > f.trunc {
            if !c.is_zero() {
                loss = true;
            }
            continue;
        }
        // c * j!/s^{j+1} / s = (c/(j+1)) * (j+1)!/s^{j+2}
        let adjust = ExactScalar::from_rational(BigRational::new(
            BigInt::from(1),
            BigInt::from(j as u64 + 1),
        ));
        terms.push(c.scale(&adjust));
    }
    while terms.last().map_or(false, |c| c.is_zero()) {
        terms.pop();
    }
    SDomainSeries {
        terms,
        trunc: f.trunc,
        mode: f.mode.clone(),
        loss,
    }
}

/// Inverse transform: term `j` becomes the `t^j` coefficient.
pub fn inverse_laplace(f: &SDomainSeries) -> TimeSeries {
    TimeSeries::from_coeffs(f.terms.clone(), f.mode.clone(), f.trunc)
        .expect("s-domain terms fit the truncation order")
        .with_loss(f.loss)
}

/// `L^{-1}[(1/s) L[u]]` — the transform-domain realization of integration
/// from 0 to `t`. Contractually equal to [`TimeSeries::integrate_t`].
pub fn lt_integral(u: &TimeSeries) -> TimeSeries {
    inverse_laplace(&div_by_s(&laplace(u)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_ring, parse_series};

    fn mode() -> DerivationMode {
        DerivationMode::Constant
    }

    #[test]
    fn transform_of_constant_is_over_s() {
        // lambda -> lambda/s
        let u = TimeSeries::constant(parse_ring("(v)", &mode()).unwrap(), 3);
        let f = laplace(&u);
        assert_eq!(f.render(), "s^-1: (v)");
    }

    #[test]
    fn transform_of_t_squared() {
        // t^2 -> 2/s^3
        let u = parse_series("t^2: (1)", &mode(), 3).unwrap();
        assert_eq!(laplace(&u).render(), "s^-3: (2)");
    }

    #[test]
    fn transform_of_zero() {
        let u = TimeSeries::zero(mode(), 3);
        assert!(laplace(&u).is_empty());
        assert_eq!(laplace(&u).render(), "s^-1: (0)");
    }

    #[test]
    fn div_by_s_shifts_index() {
        // lambda/s -> lambda/s^2, i.e. lambda -> lambda t
        let u = TimeSeries::constant(parse_ring("(v)", &mode()).unwrap(), 3);
        let shifted = div_by_s(&laplace(&u));
        assert_eq!(shifted.render(), "s^-2: (v)");
        // 2/s^3 (image of t^2) -> 2/s^4
        let t2 = parse_series("t^2: (1)", &mode(), 3).unwrap();
        assert_eq!(div_by_s(&laplace(&t2)).render(), "s^-4: (2)");
    }

    #[test]
    fn div_by_s_of_empty_is_empty() {
        let f = laplace(&TimeSeries::zero(mode(), 3));
        assert!(div_by_s(&f).is_empty());
    }

    #[test]
    fn inverse_reads_coefficients_back() {
        // lambda/s^2 -> lambda t
        let u = TimeSeries::constant(parse_ring("(v)", &mode()).unwrap(), 3);
        let t = inverse_laplace(&div_by_s(&laplace(&u)));
        assert_eq!(t, u.integrate_t());
        // 2/s^4 -> t^3/3
        let t2 = parse_series("t^2: (1)", &mode(), 4).unwrap();
        let back = inverse_laplace(&div_by_s(&laplace(&t2)));
        assert_eq!(back, parse_series("t^3: (1/3)", &mode(), 4).unwrap());
    }

    #[test]
    fn roundtrip_is_identity() {
        let u = parse_series("t^0: (v)\nt^1: (2*v + v^2)\nt^3: (1/3)", &mode(), 5).unwrap();
        assert_eq!(inverse_laplace(&laplace(&u)), u);
    }

    #[test]
    fn lt_integral_matches_integrate_t() {
        let u = parse_series(
            "t^0: (2*v + v^2)\nt^1: (v)/(1 + v)\nt^2: (7)",
            &mode(),
            4,
        )
        .unwrap();
        assert_eq!(lt_integral(&u), u.integrate_t());
    }

    #[test]
    fn loss_flag_survives_the_pipeline() {
        // a nonzero t^N coefficient is dropped by division by s
        let u = parse_series("t^2: (v)", &mode(), 2).unwrap();
        let out = lt_integral(&u);
        assert!(out.is_zero());
        assert!(out.truncation_loss());
        assert_eq!(out, u.integrate_t());
        assert_eq!(out.truncation_loss(), u.integrate_t().truncation_loss());
    }
}
