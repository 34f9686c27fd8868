//! Cross-check a resolution configuration against honest p-adic counting:
//! the series of residue counts must equal the series expansion of the
//! formula with L evaluated at p.
//!
//! Run with: cargo run --example padic_comparison

use motzeta::cli::InputDocument;
use motzeta::padic::compare;

fn main() -> motzeta::Result<()> {
    let text = include_str!("data/padic_xy.json");
    let InputDocument::Padic(doc) = InputDocument::parse(text)? else {
        unreachable!("bundled document is a padic document")
    };
    let (poly, cfg, _registry) = doc.build()?;
    let report = compare(&poly, &cfg, doc.p, doc.n_max)?;
    println!("{report}");
    assert!(report.agrees());

    // a wrong multiplicity is caught by the same comparison
    let mut wrong = cfg.clone();
    wrong.components[0].n = motzeta::exact::Rational::from_int(2);
    let bad = compare(&poly, &wrong, doc.p, doc.n_max)?;
    println!("\nwith a deliberately wrong multiplicity:");
    println!("{bad}");
    assert!(!bad.agrees());
    Ok(())
}
