//! The 4×4 running example, step by step: eigenvalues, `(A − λI)^4` over
//! `Q(λ)`, its reduced echelon form, and the augmented membership test.
//!
//! cargo run --example golden_run

use linloop::arith::Field;
use linloop::decision::{generalized_eigenmatrix, row_space_contains, rref};
use linloop::{decide, HomogeneousProgram, Matrix, NumberFieldElement};

fn show(title: &str, m: &Matrix<NumberFieldElement>) {
    println!("{title}");
    for i in 0..m.rows() {
        let row: Vec<String> = m
            .row(i)
            .iter()
            .map(|x| format!("{:>12}", x.display_in("λ")))
            .collect();
        println!("  [{}]", row.join(" "));
    }
}

fn main() -> linloop::Result<()> {
    let p = HomogeneousProgram::from_ints(
        &[
            &[2, -1, 0, 0],
            &[-1, 2, -1, 0],
            &[0, -1, 2, 1],
            &[0, 0, 0, 2],
        ],
        &[-1, -1, 1, 1],
    )?;
    let cert = decide(&p)?;
    println!("χ_A = {}", cert.char_poly);
    for e in &cert.positive_eigenvalues {
        println!(
            "  λ = {} (multiplicity {})",
            e.value.describe(),
            e.multiplicity
        );
    }

    let top = &cert.positive_eigenvalues[0];
    let (field, m) = generalized_eigenmatrix(p.update(), &top.value)?;
    println!(
        "\nλ = {}, λ² = 4λ − 2 in Q(λ), so √2 = λ − 2",
        top.value.describe()
    );
    show("(A − λI)^4:", &m);
    show("rref:", &rref(&field, &m));

    let guard: Vec<_> = p.guard().iter().map(|g| field.from_rational(g)).collect();
    let test = row_space_contains(&field, &m, &guard)?;
    show("augmented with f:", &test.augmented);
    println!("pivot entry: {}, member: {}", test.pivot_entry, test.member);
    println!("\nverdict: {}", cert.verdict);
    Ok(())
}
