//! Q-divisors: fractional branch weights and the scaling identity
//! z(c D, s) = z(D, c s).
//!
//! The same quadric-cone resolution as in `quadric_cone_divisor`, but the
//! two branches now carry weights 1/2 and 3/2, so the root order doubles
//! and the zeta function lives in fractional powers until it is reduced.
//!
//! Run with: cargo run --example fractional_weights

use motzeta::cli::scaled_zeta_matches;
use motzeta::exact::Rational;
use motzeta::grothendieck::{MotClass, SymbolRegistry};
use motzeta::resolution::{Component, ResolutionConfig, Stratum};
use motzeta::stringy::{pair_e, kontsevich_e};
use motzeta::zeta::topological_zeta;

fn weighted_cone(n_e: Rational, n_ep: Rational) -> ResolutionConfig {
    let n1 = &n_e + &n_ep;
    let n2 = &n_e + &(&n_ep + &n_ep);
    let mut cfg = ResolutionConfig::new(3, 2);
    cfg.w_names.insert("origin".to_string());
    cfg.components
        .push(Component::new("E1", Rational::from_int(2), n1, true));
    cfg.components
        .push(Component::new("E2", Rational::from_int(2), n2, true));
    cfg.components.push(Component::new("E", Rational::one(), n_e, false));
    cfg.components
        .push(Component::new("Ep", Rational::one(), n_ep, false));
    for (subset, chi) in [
        (vec!["E1", "E2"], -1),
        (vec!["E1", "E"], 1),
        (vec!["E1", "Ep"], 2),
        (vec!["E1", "E2", "E"], 1),
        (vec!["E1", "E2", "Ep"], 2),
    ] {
        let class = MotClass::from_int(2, chi);
        cfg.strata.push(
            Stratum::new(subset.iter().map(|s| s.to_string()), class.clone())
                .with_class_over("origin", class),
        );
    }
    cfg
}

fn main() -> motzeta::Result<()> {
    let registry = SymbolRegistry::new();
    let cfg = weighted_cone(Rational::ratio(1, 2), Rational::ratio(3, 2));
    cfg.validated()?;

    let z = topological_zeta(&cfg, "origin", &registry)?;
    println!("z = {}", z.reduced);
    println!("e = {}", kontsevich_e(&z)?);
    println!("e_pair = {}", pair_e(&z)?);

    // scaling the divisor by c rescales the variable: z(cD, s) = z(D, cs)
    for c in [Rational::ratio(1, 3), Rational::from_int(2), Rational::ratio(5, 7)] {
        let ok = scaled_zeta_matches(&cfg, &registry, "origin", &c)?;
        println!("scaling identity at c = {c}: {}", if ok { "holds" } else { "FAILS" });
        assert!(ok);
    }
    Ok(())
}
