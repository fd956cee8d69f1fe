//! Solve a problem that is not one of the built-in cases, defined by the
//! same JSON configuration the `solve` subcommand reads: a Fisher-type
//! equation `u_t = u_xx + u - u^2` with a sourced right-hand side.
//!
//! Run: `cargo run --example custom_problem`

use nwse::config::RunConfig;
use nwse::engine::{render_totals, solve};

const CONFIG: &str = r#"{
  "problem": {
    "a": "1", "b": "1", "c": "1", "n": 2,
    "mode": "constant",
    "phi": "(1/2*v)",
    "source": "t^0: (0)\nt^1: (v^2)",
    "order": 5, "iters": 5
  },
  "lambda_value": 0.25
}"#;

fn main() -> nwse::Result<()> {
    let cfg = RunConfig::from_json(CONFIG)?;
    let spec = cfg.build_spec()?;
    let report = solve(&spec)?;
    println!("{}", render_totals(&spec, &report));

    let u = report.final_total();
    println!("sampled values (lambda = {}):", cfg.lambda_value);
    for t in [0.0, 0.05, 0.1, 0.2] {
        let value = u.eval_numeric(0.0, t, cfg.lambda_value)?;
        println!("  u(t={t:>4}) = {value:.10}");
    }
    Ok(())
}
