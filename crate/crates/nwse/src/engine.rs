//! The transform-iteration solver.
//!
//! For `u_t = a u_xx + b u - c u^n` with `u(x,0) = phi(x)` and a polynomial
//! source `h(x,t)`, the update is
//!
//! ```text
//! total <- H + L^{-1}[(1/s) L[a total_xx + b total - c total^n + h-part]]
//! ```
//!
//! with `H = phi + integral of h`. Each step is a contraction on truncated
//! series: after `k` iterations the partial sum agrees with the true
//! solution's Taylor series through `t^k` (one certified order per step).
//! Increments are reported as successive differences, which is algebraically
//! identical to accumulating explicit correction terms with the perturbation
//! parameter fixed at 1.

use num::rational::BigRational;
use num::{BigInt, Signed, Zero};

use crate::algebra::{DerivationMode, RingElement, TimeSeries};
use crate::laplace::lt_integral;
use crate::{Error, Result};

/// A fully specified problem: equation coefficients, nonlinearity power,
/// coefficient-ring context, initial condition, source, truncation order
/// `N` and iteration count `K`.
#[derive(Clone, Debug, PartialEq)]
pub struct ProblemSpec {
    /// Diffusion coefficient `a` (must be positive).
    pub diffusion: BigRational,
    /// Linear coefficient `b`.
    pub linear: BigRational,
    /// Nonlinear coefficient `c` in `-c u^n`.
    pub nonlinear: BigRational,
    /// Nonlinearity power `n >= 1`.
    pub power: u32,
    pub mode: DerivationMode,
    /// Surd discriminant shared by all coefficients.
    pub disc: u64,
    /// Initial condition `phi(x)` as a ring element.
    pub initial: RingElement,
    /// Source term `h(x,t)` as a truncated series (zero for the built-in
    /// cases).
    pub source: TimeSeries,
    /// Truncation order `N`.
    pub order: usize,
    /// Iteration count `K <= N`.
    pub iters: usize,
}

impl ProblemSpec {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        diffusion: BigRational,
        linear: BigRational,
        nonlinear: BigRational,
        power: u32,
        mode: DerivationMode,
        disc: u64,
        initial: RingElement,
        source: TimeSeries,
        order: usize,
        iters: usize,
    ) -> Result<Self> {
        if !diffusion.is_positive() {
            return Err(Error::InvalidInput(
                "the diffusion coefficient a must be positive".into(),
            ));
        }
        if power == 0 {
            return Err(Error::InvalidInput(
                "the nonlinearity power n must be a positive integer".into(),
            ));
        }
        if iters > order {
            return Err(Error::InvalidInput(format!(
                "iteration count K={iters} exceeds truncation order N={order}; \
                 iterations beyond N add no certified order"
            )));
        }
        if initial.mode() != &mode || source.mode() != &mode {
            return Err(Error::MismatchedMode);
        }
        let d_init = initial.disc();
        if d_init != 1 && d_init != disc {
            return Err(Error::MismatchedDiscriminant(d_init, disc));
        }
        if source.trunc() != order {
            return Err(Error::MismatchedOrder(source.trunc(), order));
        }
        Ok(ProblemSpec {
            diffusion,
            linear,
            nonlinear,
            power,
            mode,
            disc,
            initial,
            source,
            order,
            iters,
        })
    }

    /// Degenerate (linear) problems are accepted but flagged: the
    /// nonlinearity is absent when `n = 1` or `c = 0`.
    pub fn is_linear(&self) -> bool {
        self.power == 1 || self.nonlinear.is_zero()
    }

    fn ensure_context(&self, u: &TimeSeries) -> Result<()> {
        if u.mode() != &self.mode {
            return Err(Error::MismatchedMode);
        }
        if u.trunc() != self.order {
            return Err(Error::MismatchedOrder(u.trunc(), self.order));
        }
        let d = u.disc();
        if d != 1 && d != self.disc {
            return Err(Error::MismatchedDiscriminant(d, self.disc));
        }
        Ok(())
    }
}

/// Everything one solve produces: the increments `mu_0..mu_K`, the partial
/// sums, the certified order, and the residual diagnostics for the final
/// total.
#[derive(Clone, Debug)]
pub struct IterationReport {
    /// `mu_0 = H`, then one correction per iteration (zero once converged).
    pub increments: Vec<TimeSeries>,
    /// `totals[k] = totals[k-1] + increments[k]`.
    pub totals: Vec<TimeSeries>,
    /// Order through which the final total provably matches the true
    /// solution: `min(K, N)`.
    pub certified_order: usize,
    /// Whether any operation dropped a nonzero coefficient past `t^N`.
    pub truncation_loss: bool,
    /// Lowest power with a nonzero residual coefficient for the final
    /// total; `None` when the residual vanishes through `t^{N-1}`.
    pub residual_leading_order: Option<usize>,
}

impl IterationReport {
    pub fn final_total(&self) -> &TimeSeries {
        self.totals.last().expect("at least mu_0 is present")
    }
}

/// The equation's right-hand side `a u_xx + b u - c u^n`.
pub fn rhs_apply(u: &TimeSeries, spec: &ProblemSpec) -> Result<TimeSeries> {
    spec.ensure_context(u)?;
    let diffusion = u.ddx().ddx().scale_rational(&spec.diffusion);
    let linear = u.scale_rational(&spec.linear);
    let nonlinear = if u.is_zero() {
        TimeSeries::zero(spec.mode.clone(), spec.order)
    } else {
        u.pow(spec.power)?.scale_rational(&spec.nonlinear)
    };
    diffusion.add(&linear)?.sub(&nonlinear)
}

/// The fixed term `H = phi + L^{-1}[(1/s) L[h]]` of the iteration.
pub fn build_h(spec: &ProblemSpec) -> TimeSeries {
    let phi = TimeSeries::constant(spec.initial.clone(), spec.order);
    phi.add(&lt_integral(&spec.source))
        .expect("initial condition and source share the context")
}

/// The correction `mu_c = H - total + L^{-1}[(1/s) L[rhs(total)]]` for the
/// current partial sum (perturbation parameter fixed at 1).
pub fn correction(total: &TimeSeries, spec: &ProblemSpec) -> Result<TimeSeries> {
    let integrated = lt_integral(&rhs_apply(total, spec)?);
    build_h(spec).sub(total)?.add(&integrated)
}

/// Runs the iteration: `mu_0 = H`, then `K` corrections, with an early stop
/// when an increment vanishes identically through `t^N`.
pub fn solve(spec: &ProblemSpec) -> Result<IterationReport> {
    let mu0 = build_h(spec);
    let mut increments = vec![mu0.clone()];
    let mut totals = vec![mu0];
    for _ in 1..=spec.iters {
        let total = totals.last().unwrap();
        let corr = correction(total, spec)?;
        if corr.is_zero() {
            break;
        }
        let next = total.add(&corr)?;
        increments.push(corr);
        totals.push(next);
    }
    let truncation_loss = totals.last().unwrap().truncation_loss();
    let residual_leading_order = residual(totals.last().unwrap(), spec)?.leading_order();
    Ok(IterationReport {
        increments,
        totals,
        certified_order: spec.iters.min(spec.order),
        truncation_loss,
        residual_leading_order,
    })
}

/// `u_t - (a u_xx + b u - c u^n + h)`, truncated at `t^{N-1}` (the formal
/// `d/dt` knows nothing about the dropped `t^{N+1}` coefficient).
///
/// The source participates so that a true solution of the inhomogeneous
/// equation has zero residual.
pub fn residual(u: &TimeSeries, spec: &ProblemSpec) -> Result<TimeSeries> {
    spec.ensure_context(u)?;
    let cutoff = spec.order.saturating_sub(1);
    let rhs = rhs_apply(u, spec)?
        .add(&spec.source)?
        .truncate_to(cutoff);
    u.ddt().sub(&rhs)
}

/// Serializes a report: metadata header, then the increments and partial
/// sums in the canonical series text form.
pub fn render_report(spec: &ProblemSpec, report: &IterationReport) -> String {
    let mut out = render_header(spec, report);
    for (k, inc) in report.increments.iter().enumerate() {
        out.push_str(&format!("mu_{k}:\n{inc}\n"));
    }
    out
}

pub fn render_totals(spec: &ProblemSpec, report: &IterationReport) -> String {
    let mut out = render_header(spec, report);
    for (k, tot) in report.totals.iter().enumerate() {
        out.push_str(&format!("total_{k}:\n{tot}\n"));
    }
    out
}

fn render_header(spec: &ProblemSpec, report: &IterationReport) -> String {
    let mode = match &spec.mode {
        DerivationMode::Constant => "constant".to_string(),
        DerivationMode::Exponential(k) => format!("exponential k={k}"),
    };
    let residual = match report.residual_leading_order {
        Some(j) => j.to_string(),
        None => "none".to_string(),
    };
    use num::Signed;
    let nonlinear_term = if spec.nonlinear.is_negative() {
        format!("+ {}*u^{}", -&spec.nonlinear, spec.power)
    } else {
        format!("- {}*u^{}", spec.nonlinear, spec.power)
    };
    format!(
        "# equation: u_t = {}*u_xx + {}*u {nonlinear_term}\n\
         # mode: {mode}\n\
         # disc: {}\n\
         # phi: {}\n\
         # order: {}\n\
         # iters: {}\n\
         # linear: {}\n\
         # certified_order: {}\n\
         # truncation_loss: {}\n\
         # residual_leading_order: {residual}\n",
        spec.diffusion,
        spec.linear,
        spec.disc,
        spec.initial,
        spec.order,
        spec.iters,
        spec.is_linear(),
        report.certified_order,
        report.truncation_loss,
    )
}

pub(crate) fn big(n: i64) -> BigRational {
    BigRational::from(BigInt::from(n))
}
