//! Semi-analytic solver for Newell-Whitehead-Segel type reaction-diffusion
//! equations
//!
//! ```text
//! u_t = a u_xx + b u - c u^n,    u(x, 0) = phi(x)
//! ```
//!
//! The solver produces truncated power series in `t` whose coefficients live
//! in an exact coefficient ring: rational functions of one formal symbol `v`
//! over the quadratic extension `Q(sqrt(d))`. The symbol carries a derivation
//! mode — either a constant parameter `lambda` (killed by `d/dx`) or
//! `v = e^{kx}` (where `d/dx` acts as `k v d/dv`) — which is enough to
//! represent the classical benchmark solutions exactly, surds included.
//!
//! The iteration itself goes through the Laplace domain: transform, divide by
//! `s`, invert, add the initial-condition term, repeat. On truncated
//! `t`-polynomials that roundtrip is exactly integration from 0 to `t`, and
//! the [`laplace`] module carries the property tests proving it.
//!
//! Every computed coefficient is cross-checked by independent oracles:
//! Taylor expansions of closed-form solutions obtained by power-series
//! division ([`oracle`]), an exact PDE residual ([`engine::residual`]), and a
//! method-of-lines RK4 reference integrator.
//!
//! See the crate examples for runnable tours of each capability; the `nwse`
//! binary exposes the same functionality as `case` / `solve` / `verify` /
//! `plot` subcommands.

pub mod algebra;
pub mod cases;
pub mod cli;
pub mod config;
pub mod engine;
pub mod laplace;
pub mod oracle;
pub mod verify;

mod error;

pub use error::{Error, Result};
