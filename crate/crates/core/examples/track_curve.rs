//! Numerical braid monodromy of a few local curves around the unit circle,
//! over the full loop and the half loop.
//!
//! ```text
//! cargo run --release --example track_curve -- "y^2 - x^3"
//! ```

use conic_pi1::tracker::{singular_values, track, CurvePoly, LoopSpec};

fn show(equation: &str) {
    let p = CurvePoly::parse(equation).unwrap();
    let lp = LoopSpec::unit();
    let full = track(&p, &lp, (0.0, 1.0)).unwrap();
    let half = track(&p, &lp, (0.5, 1.0)).unwrap();
    println!("{}", equation);
    println!("  singular values {:?}", singular_values(&p).unwrap());
    println!("  full loop  {}  permutation {}  min gap {:.2e}", full.braid, full.permutation, full.min_gap);
    println!("  half loop  {}", half.braid);
}

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    if args.is_empty() {
        for e in ["y^2 - x", "(y + x^2)*(y - x^2)", "y*(y^2 + x)*(y^2 - x)", "y*(y - x)*(y + x)"] {
            show(e);
        }
    } else {
        args.iter().for_each(|e| show(e));
    }
}
