//! The D = 0 stringy path: for a log terminal variety the zeta function
//! is independent of s and its limit is the stringy invariant
//! L^-d sum [stratum] prod (L-1)/(L^nu - 1).
//!
//! The variety here is the cone over a smooth quadric surface, resolved
//! by one exceptional divisor with nu = 2 and class (L+1)^2.
//!
//! Run with: cargo run --example stringy_invariant

use motzeta::exact::Rational;
use motzeta::grothendieck::{MotClass, SymbolRegistry};
use motzeta::resolution::{Component, ResolutionConfig, Stratum};
use motzeta::stringy::{consistency_check, motivic_limit, LimitPoint};
use motzeta::zeta::motivic_zeta;

fn main() -> motzeta::Result<()> {
    let mut cfg = ResolutionConfig::new(3, 1);
    cfg.components.push(Component::new(
        "E",
        Rational::from_int(2),
        Rational::zero(),
        true,
    ));
    let l = MotClass::lclass(1);
    let one = MotClass::one(1);
    let quadric = l.add(&one).mul(&l.add(&one));
    let ambient = quadric.mul(&l.sub(&one)); // cone minus vertex fibers over the quadric
    cfg.strata
        .push(Stratum::new(Vec::<String>::new(), ambient));
    cfg.strata
        .push(Stratum::new(["E".to_string()], quadric));
    cfg.validated()?;

    let registry = SymbolRegistry::new();
    let z = motivic_zeta(&cfg, "X", &registry)?;
    println!("motivic zeta (constant in the zeta variable):");
    println!("  Z = {}", z.reduced);

    let stringy = motivic_limit(&z, LimitPoint::SOne)?;
    println!("stringy invariant = {stringy}");

    let report = consistency_check(&cfg, "X", &registry)?;
    println!("stringy E-function = {}", report.e_hodge);
    println!("stringy Euler number = {}", report.e_top);
    assert!(report.flags.is_empty());
    Ok(())
}
