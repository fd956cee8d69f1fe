//! Exact coefficient arithmetic.
//!
//! The tower, bottom up:
//!
//! * [`ExactScalar`] — elements `a + b*sqrt(d)` of the quadratic field
//!   `Q(sqrt(d))` over big rationals, with a shared square-free
//!   discriminant `d` per computation;
//! * [`SymbolPoly`] — univariate polynomials in the formal symbol `v` over
//!   `Q(sqrt(d))`;
//! * [`RingElement`] — canonical rational functions `num/den` of `v`,
//!   tagged with a [`DerivationMode`] that fixes how `d/dx` acts;
//! * [`TimeSeries`] — truncated polynomials in `t` with `RingElement`
//!   coefficients, the shape of the solver's iterates.
//!
//! All values are immutable after construction and all operations are pure;
//! everything here is safe to share across threads.

mod poly;
mod ring;
mod scalar;
mod series;
mod text;

pub use poly::SymbolPoly;
pub use ring::{DerivationMode, RingElement};
pub use scalar::ExactScalar;
pub use series::TimeSeries;
pub use text::{parse_poly, parse_rational, parse_ring, parse_scalar, parse_series};
