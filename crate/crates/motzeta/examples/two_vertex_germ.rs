//! Solve a normal surface germ given by a weighted dual graph and compute
//! its zeta functions and invariants over the origin.
//!
//! The germ: a rational curve of self-intersection -3 meeting a genus-2
//! curve of self-intersection -2, with one transverse divisor branch of
//! multiplicity 1 on the genus-2 curve.
//!
//! Run with: cargo run --example two_vertex_germ

use motzeta::exact::Rational;
use motzeta::grothendieck::SymbolRegistry;
use motzeta::stringy::consistency_check;
use motzeta::surface::{
    check_negative_definite, intersection_matrix, solve_graph, strata_config, two_vertex_germ,
};
use motzeta::zeta::{hodge_zeta, topological_zeta};

fn main() -> motzeta::Result<()> {
    let graph = two_vertex_germ(2, 3, 2, Rational::one());
    let m = intersection_matrix(&graph);
    println!("intersection matrix: {m:?}");
    println!("negative definite: {}", check_negative_definite(&m));

    let solved = solve_graph(&graph)?;
    for v in &graph.vertices {
        println!(
            "  {}: N = {}, nu = {}",
            v.name, solved.n[&v.name], solved.nu[&v.name]
        );
    }
    // This germ is tuned so that nu + N vanishes on the rational curve;
    // the limit definition of the invariants still produces finite values.
    assert!((&solved.nu["E0"] + &solved.n["E0"]).is_zero());

    let cfg = strata_config(&solved)?;
    let registry = SymbolRegistry::new();

    let z = topological_zeta(&cfg, "origin", &registry)?;
    println!("z = {}", z.reduced);
    for p in &z.pole_candidates {
        let status = if p.surviving { "surviving" } else { "cancelled" };
        println!("  pole candidate s = {} from {}: {status}", p.value, p.component);
    }

    let zh = hodge_zeta(&cfg, "origin", &registry)?;
    println!("Z (Hodge level) = {}", zh.reduced);

    let report = consistency_check(&cfg, "origin", &registry)?;
    println!("e       = {}", report.e_top);
    println!("E       = {}", report.e_hodge);
    println!("e_pair  = {}", report.e_pair_top);
    println!("E_pair  = {}", report.e_pair_hodge);
    for f in &report.flags {
        println!("note: {f}");
    }
    Ok(())
}
