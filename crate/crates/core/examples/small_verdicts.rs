//! Three small loops: no positive eigenvalue, a Jordan block with a guard on
//! the harmless coordinate, and the same block with a guard on the growing one.
//!
//! cargo run --example small_verdicts

use linloop::{decide, HomogeneousProgram};

fn main() -> linloop::Result<()> {
    let a1: &[&[i64]] = &[&[1, 1, 0], &[0, 1, 0], &[0, 0, -1]];
    let cases: [(&str, &[&[i64]], &[i64]); 3] = [
        (
            "A = [[3,-2],[4,-1]], f = (3,-1)",
            &[&[3, -2], &[4, -1]],
            &[3, -1],
        ),
        ("A1, f = e3", a1, &[0, 0, 1]),
        ("A1, f = e2", a1, &[0, 1, 0]),
    ];
    for (name, a, f) in cases {
        let cert = decide(&HomogeneousProgram::from_ints(a, f)?)?;
        let eigen: Vec<String> = cert
            .positive_eigenvalues
            .iter()
            .map(|e| format!("{} (x{})", e.value.describe(), e.multiplicity))
            .collect();
        println!("{name}");
        println!("  χ = {}", cert.char_poly);
        println!("  positive eigenvalues: [{}]", eigen.join(", "));
        println!("  verdict: {}", cert.verdict);
    }
    Ok(())
}
