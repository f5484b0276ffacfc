//! Writes a decision certificate as JSON and re-checks it from scratch.
//!
//! cargo run --example certificate_check

use linloop::certificate::{verify, CertificateDoc};
use linloop::{decide, HomogeneousProgram};

fn main() -> linloop::Result<()> {
    let p = HomogeneousProgram::from_ints(&[&[2, 0, 0], &[0, 1, 1], &[0, 0, 1]], &[0, 1, -1])?;
    let doc = CertificateDoc::new(&p, &decide(&p)?);
    let json = doc.to_json();
    println!("{json}");

    let back = CertificateDoc::from_json(&json)?;
    println!("problems: {:?}", verify(&back)?);

    let mut forged = back;
    forged.verdict = "TERMINATING".into();
    println!("forged verdict problems: {:?}", verify(&forged)?);
    Ok(())
}
