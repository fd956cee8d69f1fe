//! Check every benchmark case against its independent oracles: the Taylor
//! expansion of the known exact solution, and the formal PDE residual.
//!
//! Run: `cargo run --example oracle_check`

use nwse::cases::{preset, CaseId};
use nwse::engine::{residual, solve};
use nwse::oracle::exact_taylor;
use nwse::verify::first_coefficient_mismatch;

fn main() -> nwse::Result<()> {
    let order = 6;
    for id in CaseId::ALL {
        let spec = preset(id, order, order)?;
        let report = solve(&spec)?;
        let total = report.final_total();
        let oracle = exact_taylor(id, order);

        match first_coefficient_mismatch(total, &oracle, report.certified_order) {
            None => println!(
                "{id}: matches the exact-solution Taylor series through t^{}",
                report.certified_order
            ),
            Some((j, expected, got)) => println!(
                "{id}: MISMATCH at t^{j}: oracle {expected}, solver {got}"
            ),
        }

        let r = residual(total, &spec)?;
        match r.leading_order() {
            None => println!("{id}: residual vanishes through t^{}", order - 1),
            Some(j) => println!("{id}: residual first appears at t^{j}"),
        }
    }
    Ok(())
}
