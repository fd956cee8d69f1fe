//! The transform pipeline step by step: take a series to the s-domain,
//! divide by s, come back. On truncated t-polynomials the composite is
//! exactly term-wise integration, which the engine exploits.
//!
//! Run: `cargo run --example laplace_pipeline`

use nwse::algebra::{parse_series, DerivationMode};
use nwse::laplace::{div_by_s, inverse_laplace, laplace, lt_integral};

fn main() -> nwse::Result<()> {
    let mode = DerivationMode::Constant;
    let u = parse_series("t^0: (1)\nt^1: (2*v)\nt^2: (3*v^2)", &mode, 4)?;
    println!("u(t):\n{u}\n");

    let f = laplace(&u);
    println!("L[u](s):\n{}\n", f.render());

    let shifted = div_by_s(&f);
    println!("L[u]/s:\n{}\n", shifted.render());

    let integrated = inverse_laplace(&shifted);
    println!("L^-1[L[u]/s]:\n{integrated}\n");

    // the composite equals plain term-wise integration
    assert_eq!(lt_integral(&u), u.integrate_t());
    println!("lt_integral(u) == u.integrate_t(): verified");
    Ok(())
}
