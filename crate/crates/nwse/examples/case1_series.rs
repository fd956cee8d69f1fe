//! Solve benchmark case I (`u_t = 5 u_xx + 2u + u^2`, `u(x,0) = lambda`)
//! and print the per-iteration increments and partial sums.
//!
//! Run: `cargo run --example case1_series`

use nwse::cases::{preset, CaseId};
use nwse::engine::{render_report, render_totals, solve};

fn main() -> nwse::Result<()> {
    let spec = preset(CaseId::I, 6, 6)?;
    let report = solve(&spec)?;
    println!("{}", render_report(&spec, &report));
    println!("{}", render_totals(&spec, &report));
    println!(
        "certified order: {} (coefficients through t^{} are final)",
        report.certified_order, report.certified_order
    );
    Ok(())
}
