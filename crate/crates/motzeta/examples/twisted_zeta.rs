//! Zeta functions twisted by a differential form: per-component offsets
//! shift the discrepancy data nu -> nu + M and move the candidate poles.
//!
//! Run with: cargo run --example twisted_zeta

use std::collections::BTreeMap;

use motzeta::exact::Rational;
use motzeta::grothendieck::SymbolRegistry;
use motzeta::surface::{solve_graph, strata_config, two_vertex_germ};
use motzeta::zeta::{topological_zeta, zeta_with_form, Level};

fn main() -> motzeta::Result<()> {
    let registry = SymbolRegistry::new();
    let cfg = strata_config(&solve_graph(&two_vertex_germ(2, 3, 2, Rational::one()))?)?;

    let plain = topological_zeta(&cfg, "origin", &registry)?;
    println!("plain:   z = {}", plain.reduced);
    for p in &plain.pole_candidates {
        println!("  candidate s = {} from {}", p.value, p.component);
    }

    let mut offsets = BTreeMap::new();
    offsets.insert("Eg".to_string(), Rational::one());
    let twisted = zeta_with_form(&cfg, "origin", &offsets, Level::Topological, &registry)?;
    println!("twisted: z = {}", twisted.reduced);
    for p in &twisted.pole_candidates {
        println!("  candidate s = {} from {}", p.value, p.component);
    }

    // zero offsets are the identity twist
    let zero = zeta_with_form(
        &cfg,
        "origin",
        &BTreeMap::new(),
        Level::Topological,
        &registry,
    )?;
    assert!(zero.reduced.eq_as_fraction(&plain.reduced));
    Ok(())
}
