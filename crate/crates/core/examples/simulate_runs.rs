//! Exact bounded runs from rational starts.
//!
//! cargo run --example simulate_runs

use linloop::arith::rat_frac;
use linloop::simulate::{run, run_adaptive};
use linloop::HomogeneousProgram;

fn main() -> linloop::Result<()> {
    let p = HomogeneousProgram::from_ints(&[&[1, 1, 0], &[0, 1, 0], &[0, 0, -1]], &[0, 0, 1])?;
    let x = [rat_frac(0, 1), rat_frac(0, 1), rat_frac(1, 1)];
    println!("z flips sign: {:?}", run(&p, &x, 10)?);

    // A slowly shrinking rotation-like loop needs many steps.
    let q = HomogeneousProgram::from_ints(&[&[1, -1], &[1, 1]], &[1, 0])?;
    let y = [rat_frac(1, 1), rat_frac(-9, 10)];
    println!("rotation: {:?}", run_adaptive(&q, &y)?);
    Ok(())
}
