//! A loop that terminates on every rational input but not on every real one.
//! The witness lives in `Q(√2)`; rational starts all exit.
//!
//! cargo run --example sqrt2_witness

use linloop::simulate::{run, run_in_field, sample_rational_inputs};
use linloop::witness::coordinate_strings;
use linloop::{decide, synthesize_witness, HomogeneousProgram};

fn main() -> linloop::Result<()> {
    let p = HomogeneousProgram::from_ints(&[&[0, 1], &[1, -2]], &[1, 0])?;
    let cert = decide(&p)?;
    println!("verdict: {}", cert.verdict);
    let ev = cert.failing_eigenvalue.expect("nonterminating");
    let w = synthesize_witness(&p, &ev)?;
    println!(
        "λ = {} with minimal polynomial {}",
        w.eigenvalue.describe(),
        w.eigenvalue.minpoly().display_in("λ")
    );
    println!("witness x = ({})", coordinate_strings(&w.vector).join(", "));
    println!(
        "{:?} on the witness",
        run_in_field(&p, &w.vector, &w.eigenvalue, 100)?
    );

    let mut longest = 0;
    for x in sample_rational_inputs(&p, 1000, 10, 1) {
        if let linloop::RunOutcome::TerminatedAt(k) = run(&p, &x, 1000)? {
            longest = longest.max(k);
        } else {
            println!("rational start {x:?} did not exit within 1000 steps");
        }
    }
    println!("1000 rational starts: longest run {longest} steps");
    Ok(())
}
