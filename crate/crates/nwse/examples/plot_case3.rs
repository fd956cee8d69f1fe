//! Produce plot artifacts for case III: evaluate the order-6 series on an
//! (x, t) grid, write `solution.csv` and a gnuplot script overlaying the
//! exact traveling wave. Output lands in `out-case3/`.
//!
//! Run: `cargo run --example plot_case3`, then
//! `gnuplot -persist out-case3/plot.gp`

fn main() {
    let code = nwse::cli::run([
        "nwse", "plot", "III", "--order", "6", "--iters", "6", "--xmin", "-5", "--xmax", "5",
        "--nx", "51", "--tmax", "0.2", "--nt", "40", "--out", "out-case3",
    ]);
    if code == 0 {
        println!("wrote out-case3/solution.csv and out-case3/plot.gp");
    }
    std::process::exit(code);
}
