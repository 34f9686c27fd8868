//! The affine cone over a smooth projective hypersurface, with the
//! divisor cut out by a general hyperplane through the vertex.
//!
//! Blowing up the vertex resolves the cone with a single exceptional
//! divisor isomorphic to the hypersurface itself; the zeta function is
//! assembled from two strata whose classes are Euler numbers of
//! hypersurfaces.
//!
//! Run with: cargo run --example cone_over_hypersurface

use motzeta::exact::Rational;
use motzeta::grothendieck::{hypersurface_euler, MotClass, SymbolRegistry};
use motzeta::resolution::{Component, ResolutionConfig, Stratum};
use motzeta::stringy::{kontsevich_e, pair_e};
use motzeta::zeta::topological_zeta;

fn cone_cfg(d: u32, a: u32, n: i64) -> ResolutionConfig {
    let mut cfg = ResolutionConfig::new(d, 1);
    cfg.components.push(Component::new(
        "E1",
        Rational::from_int(d as i64 + 1 - a as i64),
        Rational::from_int(n),
        true,
    ));
    cfg.components
        .push(Component::new("E", Rational::one(), Rational::from_int(n), false));
    let chi_total = hypersurface_euler(d, a);
    let chi_cut = hypersurface_euler(d - 1, a);
    let open = MotClass::one(1).scale(&(&chi_total - &chi_cut));
    let cut = MotClass::one(1).scale(&chi_cut);
    cfg.strata.push(Stratum::new(["E1".to_string()], open));
    cfg.strata
        .push(Stratum::new(["E1".to_string(), "E".to_string()], cut));
    cfg
}

fn main() -> motzeta::Result<()> {
    let registry = SymbolRegistry::new();
    for (d, a, n) in [(3u32, 2u32, 1i64), (3, 3, 1), (4, 2, 1), (5, 2, 2)] {
        let chi = hypersurface_euler(d, a);
        println!("degree {a} hypersurface in P^{d}: chi = {chi}, divisor multiplicity {n}");
        let cfg = cone_cfg(d, a, n);
        cfg.validated()?;
        let z = topological_zeta(&cfg, "X", &registry)?;
        println!("  z = {}", z.reduced);
        println!("  e = {}", kontsevich_e(&z)?);
        println!("  e_pair = {}", pair_e(&z)?);
    }
    Ok(())
}
