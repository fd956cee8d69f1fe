//! Independent ground-truth generators.
//!
//! Two unrelated routes certify the solver's output:
//!
//! * **Taylor oracles** — closed-form exact solutions expanded by exact
//!   power-series division ([`exact_taylor_case1`] .. [`exact_taylor_case3`]),
//!   compared coefficient-by-coefficient in canonical form;
//! * **a numeric reference** — method-of-lines with second-order central
//!   differences in `x` and classical RK4 in `t`
//!   ([`rk4_reference`]), compared pointwise on a grid.
//!
//! The case II oracle uses the re-derived logistic closed form
//! `u = 2 lambda e^{2t} / (2 + 3 lambda (e^{2t} - 1))`: the published form
//! evaluates to `-lambda` at `t = 0` and cannot be the solution. The case
//! III oracle is the traveling wave `sqrt(2/3) e^{x+3t}/(1 + e^{x+3t})`
//! (amplitude `sqrt(2/3)`, width 1, speed 3), verified by substitution into
//! the PDE in the test suite before anything trusts it.

use num::rational::BigRational;
use num::BigInt;

use crate::algebra::{DerivationMode, ExactScalar, RingElement, TimeSeries};
use crate::cases::{sqrt_two_thirds, CaseId};
use crate::engine::ProblemSpec;
use crate::{Error, Result};

/// Truncated expansion of `e^{rate * t}`: `sum_{j<=N} rate^j/j! t^j`.
pub fn series_exp(rate: &ExactScalar, mode: DerivationMode, trunc: usize) -> TimeSeries {
    let mut coeffs = Vec::with_capacity(trunc + 1);
    let mut term = ExactScalar::one();
    for j in 0..=trunc {
        if j > 0 {
            let jr = ExactScalar::from_rational(BigRational::new(
                BigInt::from(1),
                BigInt::from(j as u64),
            ));
            term = term
                .checked_mul(rate)
                .and_then(|t| t.checked_mul(&jr))
                .expect("scalar context is uniform");
        }
        coeffs.push(RingElement::from_scalar(term.clone(), mode.clone()));
    }
    TimeSeries::from_coeffs(coeffs, mode, trunc).expect("coefficients fit")
}

/// Power-series long division: the unique `q` with `q * den = num` through
/// `t^N`. Requires an invertible constant term in `den`.
pub fn series_div(num: &TimeSeries, den: &TimeSeries) -> Result<TimeSeries> {
    let lead = den.coeff(0);
    if lead.is_zero() {
        return Err(Error::SingularDivision);
    }
    let lead_inv = lead.inv()?;
    let trunc = num.trunc();
    let mode = num.mode().clone();
    let mut quot: Vec<RingElement> = Vec::with_capacity(trunc + 1);
    for j in 0..=trunc {
        let mut acc = num.coeff(j);
        for (i, q) in quot.iter().enumerate() {
            acc = acc.checked_sub(&q.checked_mul(&den.coeff(j - i))?)?;
        }
        quot.push(acc.checked_mul(&lead_inv)?);
    }
    TimeSeries::from_coeffs(quot, mode, trunc)
}

/// Taylor expansion of the case I exact solution
/// `2 e^{2t} lambda / (2 + (1 - e^{2t}) lambda)`, coefficients polynomial
/// in `lambda`.
pub fn exact_taylor_case1(trunc: usize) -> TimeSeries {
    let mode = DerivationMode::Constant;
    let lam = RingElement::symbol(mode.clone());
    let two = ExactScalar::from_int(2);
    let e2t = series_exp(&two, mode.clone(), trunc);
    let num = e2t
        .scale(&lam.scale(&two))
        .expect("shared context");
    let one = TimeSeries::constant(RingElement::one(mode.clone()), trunc);
    let den = TimeSeries::constant(RingElement::from_scalar(two, mode.clone()), trunc)
        .add(&one.sub(&e2t).expect("shared context").scale(&lam).expect("shared context"))
        .expect("shared context");
    series_div(&num, &den).expect("denominator has constant term 2")
}

/// Taylor expansion of the re-derived case II logistic solution
/// `2 lambda e^{2t} / (2 + 3 lambda (e^{2t} - 1))`.
pub fn exact_taylor_case2(trunc: usize) -> TimeSeries {
    let mode = DerivationMode::Constant;
    let lam = RingElement::symbol(mode.clone());
    let two = ExactScalar::from_int(2);
    let e2t = series_exp(&two, mode.clone(), trunc);
    let num = e2t.scale(&lam.scale(&two)).expect("shared context");
    let one = TimeSeries::constant(RingElement::one(mode.clone()), trunc);
    let den = TimeSeries::constant(RingElement::from_scalar(two, mode.clone()), trunc)
        .add(
            &e2t.sub(&one)
                .expect("shared context")
                .scale(&lam.scale(&ExactScalar::from_int(3)))
                .expect("shared context"),
        )
        .expect("shared context");
    series_div(&num, &den).expect("denominator has constant term 2")
}

/// Taylor expansion of the case III traveling wave
/// `sqrt(2/3) v E / (1 + v E)` with `v = e^x`, `E = e^{3t}`, over
/// `Q(sqrt(6))(v)`.
pub fn exact_taylor_case3(trunc: usize) -> TimeSeries {
    let mode = DerivationMode::exponential(1);
    let v = RingElement::symbol(mode.clone());
    let e3t = series_exp(&ExactScalar::from_int(3), mode.clone(), trunc);
    let ve = e3t.scale(&v).expect("shared context");
    let num = ve
        .scale(&RingElement::from_scalar(sqrt_two_thirds(), mode.clone()))
        .expect("shared context");
    let den = TimeSeries::constant(RingElement::one(mode.clone()), trunc)
        .add(&ve)
        .expect("shared context");
    series_div(&num, &den).expect("denominator has constant term 1")
}

/// The Taylor oracle for a benchmark case.
pub fn exact_taylor(id: CaseId, trunc: usize) -> TimeSeries {
    match id {
        CaseId::I => exact_taylor_case1(trunc),
        CaseId::II => exact_taylor_case2(trunc),
        CaseId::III => exact_taylor_case3(trunc),
    }
}

/// Uniform evaluation grid parameters.
///
/// `nx` is the number of spatial points; `nt` the number of time steps
/// (`nt + 1` time levels including `t = 0`).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GridParams {
    pub x_min: f64,
    pub x_max: f64,
    pub nx: usize,
    pub t_max: f64,
    pub nt: usize,
}

impl GridParams {
    pub fn validate(&self) -> Result<()> {
        if self.nx == 0 || self.nt == 0 {
            return Err(Error::InvalidInput(
                "grid requires nx >= 1 points and nt >= 1 time steps".into(),
            ));
        }
        if !(self.x_min < self.x_max || self.nx == 1) {
            return Err(Error::InvalidInput("grid requires x_min < x_max".into()));
        }
        if !(self.t_max > 0.0) {
            return Err(Error::InvalidInput("grid requires t_max > 0".into()));
        }
        Ok(())
    }

    pub fn xs(&self) -> Vec<f64> {
        if self.nx == 1 {
            return vec![self.x_min];
        }
        let dx = (self.x_max - self.x_min) / (self.nx - 1) as f64;
        (0..self.nx).map(|i| self.x_min + dx * i as f64).collect()
    }

    pub fn ts(&self) -> Vec<f64> {
        let dt = self.t_max / self.nt as f64;
        (0..=self.nt).map(|j| dt * j as f64).collect()
    }
}

/// A numeric solution sampled on a uniform grid; `values[i][j] = u(x_i, t_j)`.
#[derive(Clone, Debug)]
pub struct GridSolution {
    pub xs: Vec<f64>,
    pub ts: Vec<f64>,
    pub values: Vec<Vec<f64>>,
}

impl GridSolution {
    /// CSV with header `x,t,u`, row-major with `t` outer and `x` inner,
    /// floats at 17 significant digits.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("x,t,u\n");
        for (j, t) in self.ts.iter().enumerate() {
            for (i, x) in self.xs.iter().enumerate() {
                out.push_str(&format!(
                    "{:.16e},{:.16e},{:.16e}\n",
                    x, t, self.values[i][j]
                ));
            }
        }
        out
    }

    pub fn max_abs(&self) -> f64 {
        self.values
            .iter()
            .flatten()
            .fold(0.0f64, |m, v| m.max(v.abs()))
    }
}

/// Boundary values for the reference integrator: `g(x, t)` at the two
/// endpoints. Built by the caller from the evaluated series (or a closed
/// form) so the truncated domain carries no artificial reflection.
pub type BoundaryFn<'a> = dyn Fn(f64, f64) -> f64 + 'a;

fn ode_rhs(spec: &ProblemSpec, u: f64) -> f64 {
    let b = num::ToPrimitive::to_f64(&spec.linear).unwrap();
    let c = num::ToPrimitive::to_f64(&spec.nonlinear).unwrap();
    b * u - c * u.powi(spec.power as i32)
}

/// Method-of-lines reference: central differences in `x`, classical RK4 in
/// `t`, Dirichlet boundaries from `boundary`.
///
/// Constant-mode problems are x-independent and collapse to a single
/// scalar ODE (an x-grid of one point at `x = 0`, with the symbol value
/// `lambda`). For spatial problems the requested output step is internally
/// subdivided to satisfy the explicit stability bound
/// `dt <= 0.9 * dx^2/(2a)`, so any output grid is integrable.
pub fn rk4_reference(
    spec: &ProblemSpec,
    grid: &GridParams,
    boundary: &BoundaryFn,
    lambda: f64,
) -> Result<GridSolution> {
    grid.validate()?;
    match spec.mode {
        DerivationMode::Constant => rk4_scalar(spec, grid, lambda),
        DerivationMode::Exponential(_) => rk4_spatial(spec, grid, boundary),
    }
}

fn rk4_scalar(spec: &ProblemSpec, grid: &GridParams, lambda: f64) -> Result<GridSolution> {
    let ts = grid.ts();
    let dt = grid.t_max / grid.nt as f64;
    let mut u = spec
        .initial
        .eval_f64(lambda)
        .ok_or(Error::EvaluationSingularity { x: 0.0, t: 0.0 })?;
    let mut values = vec![Vec::with_capacity(ts.len())];
    values[0].push(u);
    for step in 0..grid.nt {
        let k1 = ode_rhs(spec, u);
        let k2 = ode_rhs(spec, u + 0.5 * dt * k1);
        let k3 = ode_rhs(spec, u + 0.5 * dt * k2);
        let k4 = ode_rhs(spec, u + dt * k3);
        u += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if !u.is_finite() {
            return Err(Error::Divergence(ts[step + 1]));
        }
        values[0].push(u);
    }
    Ok(GridSolution {
        xs: vec![0.0],
        ts,
        values,
    })
}

fn rk4_spatial(
    spec: &ProblemSpec,
    grid: &GridParams,
    boundary: &BoundaryFn,
) -> Result<GridSolution> {
    let xs = grid.xs();
    let ts = grid.ts();
    let nx = xs.len();
    if nx < 3 {
        return Err(Error::InvalidInput(
            "spatial problems need at least 3 grid points".into(),
        ));
    }
    let dx = xs[1] - xs[0];
    let a = num::ToPrimitive::to_f64(&spec.diffusion).unwrap();
    let k_rate = match &spec.mode {
        DerivationMode::Exponential(k) => num::ToPrimitive::to_f64(k).unwrap(),
        DerivationMode::Constant => unreachable!("handled by rk4_scalar"),
    };

    // Explicit-scheme stability bound with a 0.9 safety factor; subdivide
    // the output step as needed.
    let dt_out = grid.t_max / grid.nt as f64;
    let dt_stable = 0.9 * dx * dx / (2.0 * a);
    let substeps = (dt_out / dt_stable).ceil().max(1.0) as usize;
    let dt = dt_out / substeps as f64;

    let mut u: Vec<f64> = xs
        .iter()
        .map(|&x| {
            spec.initial
                .eval_f64((k_rate * x).exp())
                .ok_or(Error::EvaluationSingularity { x, t: 0.0 })
        })
        .collect::<Result<_>>()?;
    let mut values: Vec<Vec<f64>> = (0..nx).map(|_| Vec::with_capacity(ts.len())).collect();
    for (i, row) in values.iter_mut().enumerate() {
        row.push(u[i]);
    }

    let inv_dx2 = 1.0 / (dx * dx);
    let rhs = |t: f64, u: &[f64], du: &mut [f64]| {
        du[0] = 0.0;
        du[nx - 1] = 0.0;
        for i in 1..nx - 1 {
            let left = if i == 1 { boundary(xs[0], t) } else { u[i - 1] };
            let right = if i == nx - 2 {
                boundary(xs[nx - 1], t)
            } else {
                u[i + 1]
            };
            du[i] = a * (left - 2.0 * u[i] + right) * inv_dx2 + ode_rhs(spec, u[i]);
        }
    };

    let mut k1 = vec![0.0; nx];
    let mut k2 = vec![0.0; nx];
    let mut k3 = vec![0.0; nx];
    let mut k4 = vec![0.0; nx];
    let mut stage = vec![0.0; nx];
    let mut t = 0.0;
    for step in 0..grid.nt {
        for _ in 0..substeps {
            rhs(t, &u, &mut k1);
            for i in 0..nx {
                stage[i] = u[i] + 0.5 * dt * k1[i];
            }
            rhs(t + 0.5 * dt, &stage, &mut k2);
            for i in 0..nx {
                stage[i] = u[i] + 0.5 * dt * k2[i];
            }
            rhs(t + 0.5 * dt, &stage, &mut k3);
            for i in 0..nx {
                stage[i] = u[i] + dt * k3[i];
            }
            rhs(t + dt, &stage, &mut k4);
            for i in 1..nx - 1 {
                u[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
            }
            t += dt;
            u[0] = boundary(xs[0], t);
            u[nx - 1] = boundary(xs[nx - 1], t);
        }
        // Land exactly on the output level to keep the grid uniform.
        t = dt_out * (step + 1) as f64;
        if u.iter().any(|v| !v.is_finite()) {
            return Err(Error::Divergence(t));
        }
        for (i, row) in values.iter_mut().enumerate() {
            row.push(u[i]);
        }
    }
    Ok(GridSolution { xs, ts, values })
}

/// Pointwise error summary of a series against a grid solution.
#[derive(Clone, Copy, Debug)]
pub struct CompareReport {
    pub max_abs: f64,
    pub rms: f64,
    pub points: usize,
}

/// Max-abs and RMS error of `eval_numeric(series)` against the grid,
/// restricted to `t <= t_trust`.
pub fn compare(
    series: &TimeSeries,
    grid: &GridSolution,
    v_value: f64,
    t_trust: f64,
) -> Result<CompareReport> {
    let mut max_abs = 0.0f64;
    let mut sum_sq = 0.0f64;
    let mut points = 0usize;
    for (j, &t) in grid.ts.iter().enumerate() {
        if t > t_trust {
            continue;
        }
        for (i, &x) in grid.xs.iter().enumerate() {
            let approx = series.eval_numeric(x, t, v_value)?;
            let diff = (approx - grid.values[i][j]).abs();
            max_abs = max_abs.max(diff);
            sum_sq += diff * diff;
            points += 1;
        }
    }
    let rms = if points > 0 {
        (sum_sq / points as f64).sqrt()
    } else {
        0.0
    };
    Ok(CompareReport {
        max_abs,
        rms,
        points,
    })
}
