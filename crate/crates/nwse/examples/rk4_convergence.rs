//! Empirical order check of the reference integrator: for case I (a scalar
//! ODE after the spatially constant ansatz) halving the step should cut the
//! error against the closed-form solution by about 2^4.
//!
//! Run: `cargo run --example rk4_convergence`

use nwse::cases::{exact_value, preset, CaseId};
use nwse::oracle::{rk4_reference, GridParams};

fn max_error(nt: usize) -> nwse::Result<f64> {
    let spec = preset(CaseId::I, 2, 2)?;
    let lambda = 0.1;
    let grid = GridParams {
        x_min: 0.0,
        x_max: 0.0,
        nx: 1,
        t_max: 1.0,
        nt,
    };
    let boundary = |_x: f64, _t: f64| 0.0; // unused in scalar mode
    let sol = rk4_reference(&spec, &grid, &boundary, lambda)?;
    let err = sol
        .ts
        .iter()
        .enumerate()
        .map(|(j, &t)| (sol.values[0][j] - exact_value(CaseId::I, 0.0, t, lambda)).abs())
        .fold(0.0f64, f64::max);
    Ok(err)
}

fn main() -> nwse::Result<()> {
    let mut prev: Option<f64> = None;
    for nt in [25, 50, 100, 200] {
        let err = max_error(nt)?;
        match prev {
            None => println!("nt = {nt:>4}: max error {err:.3e}"),
            Some(p) => println!(
                "nt = {nt:>4}: max error {err:.3e}  (ratio {:.1}, expect ~16)",
                p / err
            ),
        }
        prev = Some(err);
    }
    Ok(())
}
