//! The class-expression language and its two specializations.
//!
//! Run with: cargo run --example class_expressions

use motzeta::exact::{FracPoly, Rational, VarSet};
use motzeta::grothendieck::{parse_class, SymbolRegistry};

fn main() -> motzeta::Result<()> {
    let mut registry = SymbolRegistry::new();
    // register a named class by its Hodge polynomial: a K3-like surface
    let uv = VarSet::new(["u", "v"]);
    let m = |c: i64, eu: i64, ev: i64| {
        FracPoly::monomial(uv.clone(), 1, Rational::from_int(c), vec![eu, ev])
    };
    let mut k3 = m(1, 2, 2);
    for t in [m(1, 0, 0), m(20, 1, 1), m(1, 2, 0), m(1, 0, 2)] {
        k3 = &k3 + &t;
    }
    registry.register("K3", k3)?;

    for expr in [
        "(L-1)*C_2 + L^2",
        "L^(1/2) - 3",
        "C_0*C_1",
        "K3 - 2*L",
        "(L + 1)*(L + 1)",
    ] {
        let class = parse_class(expr, 2, &registry)?;
        let hodge = class.hodge_specialize(&registry)?;
        let euler = class.euler_specialize(&registry)?;
        println!("{expr}");
        println!("  canonical form: {class}");
        println!("  Hodge polynomial: {hodge}");
        println!("  Euler characteristic: {euler}");
    }

    // errors carry positions
    let err = parse_class("L + Mystery", 1, &registry).unwrap_err();
    println!("error example: {err}");
    Ok(())
}
