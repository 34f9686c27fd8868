//! Zeta functions of a divisor on the three-dimensional quadric cone,
//! built from an explicit resolution document.
//!
//! Run with: cargo run --example quadric_cone_divisor

use motzeta::cli::InputDocument;
use motzeta::stringy::consistency_check;
use motzeta::zeta::topological_zeta;

fn main() -> motzeta::Result<()> {
    let text = include_str!("data/quadric_cone.json");
    let InputDocument::Resolution(doc) = InputDocument::parse(text)? else {
        unreachable!("bundled document is a resolution document")
    };
    let (cfg, registry) = doc.build()?;
    cfg.validated()?;

    println!("log discrepancies of the pair:");
    for (name, a) in cfg.log_discrepancies() {
        println!("  a_{name} = {a}");
    }

    let z = topological_zeta(&cfg, "origin", &registry)?;
    println!("strata sum:");
    for t in &z.strata_sum {
        println!(
            "  {{{}}}: chi = {}",
            t.subset.join(", "),
            t.class
        );
    }
    println!("z = {}", z.reduced);

    let report = consistency_check(&cfg, "origin", &registry)?;
    println!("e = {}", report.e_top);
    println!("e_pair = {}", report.e_pair_top);
    Ok(())
}
