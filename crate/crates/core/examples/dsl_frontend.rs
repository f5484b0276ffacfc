//! From loop source to a decided homogeneous program: parsing, sequential
//! propagation and homogenization of an affine guard.
//!
//! cargo run --example dsl_frontend

use linloop::decide;
use linloop::frontend::{homogenize, lifted_variables, parse, propagate_sequential};

const SOURCES: [&str; 3] = [
    "while (z > 0) { x := x + y; z := -z; }",
    "vars x, y;\nwhile (x - y > 2) {\n    x := x + y;   // sequential: y sees the new x\n    y := x;\n}",
    "while (x > 5) { x := (1/2)x + 3; }",
];

fn main() -> linloop::Result<()> {
    for src in SOURCES {
        let source = parse(src)?;
        let sys = propagate_sequential(&source);
        let program = homogenize(&sys)?;
        println!("{source}");
        println!("  variables: {}", lifted_variables(&sys).join(", "));
        println!(
            "  update: {:?}",
            program
                .update()
                .row_vecs()
                .iter()
                .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>())
                .collect::<Vec<_>>()
        );
        println!(
            "  guard:  {:?}",
            program
                .guard()
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
        );
        let verdict = decide(&program)?.verdict;
        if sys.is_homogeneous() {
            println!("  verdict: {verdict}\n");
        } else {
            // The lifted loop lets the constant variable take any real value,
            // so only TERMINATING transfers back to the affine loop.
            println!("  verdict of the lifted loop: {verdict}\n");
        }
    }
    match parse("while (x > 0) { x := 0.5x; }") {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
