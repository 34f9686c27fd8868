//! Plain-text and LaTeX renderers for results.

use std::fmt::Write as _;

use crate::exact::{FracPoly, RatFrac, Rational, ValueOrInfinity};
use crate::stringy::InvariantReport;
use crate::zeta::{Level, ZetaResult};

/// Short symbol used for the zeta line at each level.
fn zeta_symbol(level: Level) -> &'static str {
    match level {
        Level::Motivic => "Z_mot",
        Level::Hodge => "Z",
        Level::Topological => "z",
    }
}

/// Human form of `nu + N s`, e.g. "2 + 3*s", "1 + s", "-1/5 + 1/5*s", "2".
pub fn linear_form(nu: &Rational, n: &Rational, star: bool) -> String {
    let times = if star { "*" } else { " " };
    let s_part = |n: &Rational| {
        if n.is_one() {
            "s".to_string()
        } else {
            format!("{n}{times}s")
        }
    };
    if n.is_zero() {
        return nu.to_string();
    }
    if nu.is_zero() {
        return if n.is_negative() {
            format!("-{}", s_part(&n.abs()))
        } else {
            s_part(n)
        };
    }
    if n.is_negative() {
        format!("{nu} - {}", s_part(&n.abs()))
    } else {
        format!("{nu} + {}", s_part(n))
    }
}

pub fn render_zeta_plain(z: &ZetaResult) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "level: {}   W: {}   dim: {}   root order: {}", z.level, z.w, z.dim, z.root_order);
    let _ = writeln!(out, "strata sum:");
    for t in &z.strata_sum {
        let subset = if t.subset.is_empty() {
            "{}".to_string()
        } else {
            format!("{{{}}}", t.subset.join(", "))
        };
        let factors = t
            .factors
            .iter()
            .map(|f| format!("({})", linear_form(&f.nu_eff, &f.n, true)))
            .collect::<Vec<_>>()
            .join("*");
        if factors.is_empty() {
            let _ = writeln!(out, "  {subset}: [{}]", t.class);
        } else {
            let _ = writeln!(out, "  {subset}: [{}] / {factors}", t.class);
        }
    }
    let _ = writeln!(out, "{} = {}", zeta_symbol(z.level), z.reduced);
    if !z.pole_candidates.is_empty() {
        let _ = writeln!(out, "pole candidates:");
        for p in &z.pole_candidates {
            let status = if p.surviving { "surviving" } else { "cancelled" };
            let _ = writeln!(out, "  s = {} ({}): {status}", p.value, p.component);
        }
    }
    out
}

pub fn render_invariants_plain(r: &InvariantReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "invariants:");
    let _ = writeln!(out, "  e = {}", r.e_top);
    let _ = writeln!(out, "  E = {}", short_value(&r.e_hodge));
    let _ = writeln!(out, "  e_pair = {}", r.e_pair_top);
    let _ = writeln!(out, "  E_pair = {}", short_value(&r.e_pair_hodge));
    let _ = writeln!(out, "  E_mot = {}", short_value(&r.motivic_e));
    let _ = writeln!(out, "  E_mot_pair = {}", short_value(&r.motivic_e_pair));
    if r.flags.is_empty() {
        let _ = writeln!(out, "  consistency: ok");
    } else {
        for f in &r.flags {
            let _ = writeln!(out, "  note: {f}");
        }
    }
    out
}

fn short_value(v: &ValueOrInfinity) -> String {
    v.to_string()
}

// --- LaTeX ---------------------------------------------------------------

pub fn latex_rational(r: &Rational) -> String {
    if r.is_integer() {
        format!("{}", r.numer())
    } else if r.is_negative() {
        format!("-\\frac{{{}}}{{{}}}", -r.numer(), r.denom())
    } else {
        format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom())
    }
}

pub fn latex_poly(p: &FracPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let mut first = true;
    for (m, c) in p.terms() {
        let neg = c.is_negative();
        let mag = c.abs();
        if first {
            if neg {
                out.push('-');
            }
            first = false;
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mut factors: Vec<String> = Vec::new();
        for (i, e) in m.0.iter().enumerate() {
            if *e == 0 {
                continue;
            }
            let name = &p.vars().names()[i];
            let shown = if name == "T" { "T".to_string() } else { name.clone() };
            let er = p.exponent_rational(*e);
            if er.is_one() {
                factors.push(shown);
            } else {
                factors.push(format!("{shown}^{{{er}}}"));
            }
        }
        if factors.is_empty() {
            out.push_str(&latex_rational(&mag));
        } else if mag.is_one() {
            out.push_str(&factors.join(" "));
        } else {
            let _ = write!(out, "{} \\, {}", latex_rational(&mag), factors.join(" "));
        }
    }
    out
}

pub fn latex_ratfrac(f: &RatFrac) -> String {
    if f.den_factors().is_empty() {
        return latex_poly(f.num());
    }
    let den = f
        .den_factors()
        .iter()
        .map(|d| format!("({})", latex_poly(d)))
        .collect::<Vec<_>>()
        .join("\\,");
    format!("\\frac{{{}}}{{{}}}", latex_poly(f.num()), den)
}

pub fn render_zeta_latex(z: &ZetaResult) -> String {
    let mut out = String::new();
    let lambda = match z.level {
        Level::Motivic => "L",
        Level::Hodge => "uv",
        Level::Topological => "",
    };
    let _ = writeln!(out, "% level: {}, W = {}", z.level, z.w);
    let mut sum = String::new();
    if z.level != Level::Topological {
        let _ = write!(sum, "({lambda})^{{-{}}} \\Big[ ", z.dim);
    }
    for (i, t) in z.strata_sum.iter().enumerate() {
        if i > 0 {
            sum.push_str(" + ");
        }
        let class = format!("{}", t.class);
        let _ = write!(sum, "\\left[{class}\\right]");
        for f in &t.factors {
            let form = linear_form(&f.nu_eff, &f.n, false);
            if z.level == Level::Topological {
                let _ = write!(sum, "\\frac{{1}}{{{form}}}");
            } else {
                let _ = write!(
                    sum,
                    "\\frac{{{lambda} - 1}}{{({lambda})^{{{form}}} - 1}}"
                );
            }
        }
    }
    if z.level != Level::Topological {
        sum.push_str(" \\Big]");
    }
    let _ = writeln!(out, "{}_{{W}} = {}", zeta_symbol(z.level), sum);
    let _ = writeln!(out, "= {}", latex_ratfrac(&z.reduced));
    out
}

pub fn render_invariants_latex(r: &InvariantReport) -> String {
    let v = |x: &ValueOrInfinity| -> String {
        match x {
            ValueOrInfinity::Infinity => "\\infty".to_string(),
            ValueOrInfinity::Finite(f) => match f.as_rational() {
                Some(q) => latex_rational(&q),
                None => format!(
                    "\\frac{{{}}}{{{}}}",
                    latex_poly(f.num()),
                    latex_poly(f.den())
                ),
            },
        }
    };
    let mut out = String::new();
    let _ = writeln!(out, "e = {}", v(&r.e_top));
    let _ = writeln!(out, "E = {}", v(&r.e_hodge));
    let _ = writeln!(out, "e_{{pair}} = {}", v(&r.e_pair_top));
    let _ = writeln!(out, "E_{{pair}} = {}", v(&r.e_pair_hodge));
    let _ = writeln!(out, "\\mathcal{{E}} = {}", v(&r.motivic_e));
    let _ = writeln!(out, "\\mathcal{{E}}_{{pair}} = {}", v(&r.motivic_e_pair));
    out
}
