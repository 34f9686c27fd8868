//! Zeta function assembly at the motivic, Hodge and topological levels.
//!
//! From a validated configuration and a named subvariety W the zeta
//! function is the stratified sum
//!
//! ```text
//!   Lambda^-d * sum_I [stratum_I over W] * prod_{i in I} (Lambda - 1) / (Lambda^(nu_i + s N_i) - 1)
//! ```
//!
//! with Lambda = L (motivic), uv (Hodge), and the Euler-characteristic
//! limit at the topological level where each factor degenerates to
//! `1/(nu_i + s N_i)`. Internally `T = Lambda^(-s/r)`, so every factor is
//! the binomial `1 - Lambda^(-nu_i) T^(r N_i)` with unit leading
//! coefficient and the whole sum is one rational function in T.
//!
//! Reduction at the topological and Hodge levels is full gcd reduction in
//! the main variable; at the motivic level only exact division by
//! denominator binomials is performed, because the symbolic class ring is
//! not a gcd domain under this representation.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{FracPoly, RatFrac, Rational, VarSet};
use crate::grothendieck::{MotClass, SymbolRegistry};
use crate::resolution::ResolutionConfig;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Level {
    Motivic,
    Hodge,
    Topological,
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Level::Motivic => write!(f, "motivic"),
            Level::Hodge => write!(f, "hodge"),
            Level::Topological => write!(f, "topological"),
        }
    }
}

/// One denominator factor of a stratum term: the data (nu_i + M_i, N_i)
/// of the component named `component`.
#[derive(Clone, Debug, PartialEq)]
pub struct FactorDesc {
    pub component: String,
    pub nu_eff: Rational,
    pub n: Rational,
}

/// The class of a stratum after specialization to the requested level.
#[derive(Clone, Debug, PartialEq)]
pub enum ClassView {
    Motivic(MotClass),
    Hodge(FracPoly),
    Topological(Rational),
}

impl fmt::Display for ClassView {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassView::Motivic(c) => write!(f, "{c}"),
            ClassView::Hodge(h) => write!(f, "{h}"),
            ClassView::Topological(e) => write!(f, "{e}"),
        }
    }
}

/// One contributing stratum of the zeta sum.
#[derive(Clone, Debug, PartialEq)]
pub struct StratumTerm {
    pub subset: Vec<String>,
    pub class: ClassView,
    pub factors: Vec<FactorDesc>,
}

/// A candidate pole -(nu_i + M_i)/N_i, flagged by whether some reduced
/// denominator factor still vanishes there.
#[derive(Clone, Debug, PartialEq)]
pub struct PoleCandidate {
    pub component: String,
    pub value: Rational,
    pub surviving: bool,
}

/// The zeta function at one level, in strata-sum and reduced form.
#[derive(Clone, Debug)]
pub struct ZetaResult {
    pub level: Level,
    pub w: String,
    pub dim: u32,
    pub root_order: u32,
    pub strata_sum: Vec<StratumTerm>,
    pub reduced: RatFrac,
    pub pole_candidates: Vec<PoleCandidate>,
}

impl ZetaResult {
    /// Equality of the underlying rational functions (cross-multiplied).
    pub fn eq_as_fraction(&self, other: &ZetaResult) -> bool {
        self.reduced.eq_as_fraction(&other.reduced)
    }
}

/// The topological zeta function over W, reduced in Q(s).
pub fn topological_zeta(
    cfg: &ResolutionConfig,
    w: &str,
    registry: &SymbolRegistry,
) -> Result<ZetaResult> {
    cfg.validated()?;
    check_w(cfg, w)?;
    let vars = VarSet::new(["s"]);
    let root = 1u32;
    let lin = |c: &crate::resolution::Component| -> FracPoly {
        // nu_eff + s * N
        let constant = FracPoly::constant(vars.clone(), root, c.nu_effective());
        let linear = FracPoly::monomial(vars.clone(), root, c.n.clone(), vec![1]);
        &constant + &linear
    };

    let mut terms: Vec<(Vec<String>, Rational)> = Vec::new();
    let mut strata_sum = Vec::new();
    let mut used: BTreeSet<String> = BTreeSet::new();
    for s in &cfg.strata {
        let class = s.class_for(w);
        let chi = Rational::from_bigint(class.euler_specialize(registry)?);
        if chi.is_zero() {
            continue;
        }
        let subset: Vec<String> = s.subset.iter().cloned().collect();
        used.extend(subset.iter().cloned());
        strata_sum.push(StratumTerm {
            subset: subset.clone(),
            class: ClassView::Topological(chi.clone()),
            factors: factor_descs(cfg, &subset),
        });
        terms.push((subset, chi));
    }

    let used: Vec<String> = used.into_iter().collect();
    let mut num = FracPoly::zero(vars.clone(), root);
    for (subset, chi) in &terms {
        let mut t = FracPoly::constant(vars.clone(), root, chi.clone());
        for name in &used {
            if !subset.contains(name) {
                t = &t * &lin(cfg.component(name).expect("validated"));
            }
        }
        num = &num + &t;
    }
    let den: Vec<FracPoly> = used
        .iter()
        .map(|name| lin(cfg.component(name).expect("validated")))
        .collect();

    let unreduced = RatFrac::new("s", num, den);
    let reduced = unreduced.reduce()?;
    assert!(
        reduced.eq_as_fraction(&unreduced),
        "reduction changed the zeta value"
    );
    let pole_candidates = top_pole_candidates(cfg, &reduced)?;
    Ok(ZetaResult {
        level: Level::Topological,
        w: w.to_string(),
        dim: cfg.dim,
        root_order: cfg.root_order,
        strata_sum,
        reduced,
        pole_candidates,
    })
}

/// The Hodge-level zeta function over W: a rational function in
/// `T = (uv)^(-s/r)` over Z[u^(1/r), v^(1/r)], fully gcd-reduced in T.
pub fn hodge_zeta(
    cfg: &ResolutionConfig,
    w: &str,
    registry: &SymbolRegistry,
) -> Result<ZetaResult> {
    cfg.validated()?;
    check_w(cfg, w)?;
    let vars = VarSet::new(["u", "v", "T"]);
    let root = cfg.root_order;

    let specialize = |class: &MotClass| -> Result<FracPoly> {
        Ok(class.hodge_specialize(registry)?.promote_vars(&vars))
    };
    let lambda_pow = |e: &Rational| -> FracPoly {
        // (uv)^e as a monomial; e is in (1/r)Z by validation.
        let numer = exponent_numer(e, root);
        FracPoly::monomial(vars.clone(), root, Rational::one(), vec![numer, numer, 0])
    };
    assemble_binomial_zeta(
        cfg,
        w,
        Level::Hodge,
        &vars,
        root,
        &specialize,
        &lambda_pow,
        |class| Ok(ClassView::Hodge(class.hodge_specialize(registry)?)),
        true,
    )
}

/// The motivic zeta function over W: a rational function in `T = L^(-s/r)`
/// over the class representation, reduced by exact division only.
pub fn motivic_zeta(
    cfg: &ResolutionConfig,
    w: &str,
    _registry: &SymbolRegistry,
) -> Result<ZetaResult> {
    cfg.validated()?;
    check_w(cfg, w)?;
    let vars = motivic_vars(cfg);
    let root = cfg.root_order;

    let specialize = |class: &MotClass| -> Result<FracPoly> { Ok(class.encode(&vars, root)) };
    let lambda_pow = |e: &Rational| -> FracPoly {
        let numer = exponent_numer(e, root);
        let mut exps = vec![0; vars.len()];
        exps[vars.index_of("L").unwrap()] = numer;
        FracPoly::monomial(vars.clone(), root, Rational::one(), exps)
    };
    assemble_binomial_zeta(
        cfg,
        w,
        Level::Motivic,
        &vars,
        root,
        &specialize,
        &lambda_pow,
        |class| Ok(ClassView::Motivic(class.clone())),
        false,
    )
}

/// Zeta with a form twist: identical assembly with nu_i replaced by
/// nu_i + offsets_i throughout; the validation rule is re-checked with the
/// twisted values.
pub fn zeta_with_form(
    cfg: &ResolutionConfig,
    w: &str,
    offsets: &BTreeMap<String, Rational>,
    level: Level,
    registry: &SymbolRegistry,
) -> Result<ZetaResult> {
    let twisted = cfg.with_offsets(offsets)?;
    match level {
        Level::Topological => topological_zeta(&twisted, w, registry),
        Level::Hodge => hodge_zeta(&twisted, w, registry),
        Level::Motivic => motivic_zeta(&twisted, w, registry),
    }
}

/// Variable set for the motivic encoding: L, T, then every symbol that
/// occurs in any stratum class (over any W).
pub fn motivic_vars(cfg: &ResolutionConfig) -> VarSet {
    let mut symbols = BTreeSet::new();
    for s in &cfg.strata {
        for sym in s.class_total.symbols() {
            symbols.insert(sym.print_name());
        }
        for c in s.class_over.values() {
            for sym in c.symbols() {
                symbols.insert(sym.print_name());
            }
        }
    }
    let mut names = vec!["L".to_string(), "T".to_string()];
    names.extend(symbols);
    VarSet::new(names)
}

fn check_w(cfg: &ResolutionConfig, w: &str) -> Result<()> {
    if !cfg.w_names.contains(w) {
        return Err(Error::Domain(format!(
            "unknown W `{w}` (declared: {})",
            cfg.w_names.iter().cloned().collect::<Vec<_>>().join(", ")
        )));
    }
    Ok(())
}

fn factor_descs(cfg: &ResolutionConfig, subset: &[String]) -> Vec<FactorDesc> {
    subset
        .iter()
        .map(|name| {
            let c = cfg.component(name).expect("validated");
            FactorDesc {
                component: name.clone(),
                nu_eff: c.nu_effective(),
                n: c.n.clone(),
            }
        })
        .collect()
}

/// Numerator of `e` over root order `r`; validation guarantees r*e is an
/// integer.
fn exponent_numer(e: &Rational, root: u32) -> i64 {
    let scaled = e * &Rational::from_int(root as i64);
    scaled
        .to_i64()
        .expect("validated exponent fits an integer numerator")
}

/// Common assembly for the two binomial levels (Hodge and motivic).
#[allow(clippy::too_many_arguments)]
fn assemble_binomial_zeta(
    cfg: &ResolutionConfig,
    w: &str,
    level: Level,
    vars: &VarSet,
    root: u32,
    specialize: &dyn Fn(&MotClass) -> Result<FracPoly>,
    lambda_pow: &dyn Fn(&Rational) -> FracPoly,
    class_view: impl Fn(&MotClass) -> Result<ClassView>,
    full_gcd: bool,
) -> Result<ZetaResult> {
    let t_idx = vars.index_of("T").expect("T variable");
    let one = FracPoly::one(vars.clone(), root);
    let lambda = lambda_pow(&Rational::one());

    // Factor data per component: B = 1 - Lambda^(-nu) T^(rN), and the
    // numerator part A = (Lambda - 1) Lambda^(-nu) T^(rN).
    let monomial_part = |c: &crate::resolution::Component| -> FracPoly {
        let lam = lambda_pow(&-c.nu_effective());
        let rn = exponent_numer(&c.n, root);
        let mut exps = vec![0; vars.len()];
        exps[t_idx] = rn * root as i64;
        let t_pow = FracPoly::monomial(vars.clone(), root, Rational::one(), exps);
        &lam * &t_pow
    };
    let binomial = |c: &crate::resolution::Component| -> FracPoly { &one - &monomial_part(c) };
    let a_part = |c: &crate::resolution::Component| -> FracPoly {
        &(&lambda - &one) * &monomial_part(c)
    };

    let mut terms: Vec<(Vec<String>, FracPoly)> = Vec::new();
    let mut strata_sum = Vec::new();
    let mut used: BTreeSet<String> = BTreeSet::new();
    for s in &cfg.strata {
        let class = s.class_for(w);
        if class.is_zero() {
            continue;
        }
        let specialized = specialize(&class)?;
        if specialized.is_zero() {
            continue;
        }
        let subset: Vec<String> = s.subset.iter().cloned().collect();
        used.extend(subset.iter().cloned());
        strata_sum.push(StratumTerm {
            subset: subset.clone(),
            class: class_view(&class)?,
            factors: factor_descs(cfg, &subset),
        });
        terms.push((subset, specialized));
    }

    let used: Vec<String> = used.into_iter().collect();
    // Lambda^(-d) prefactor.
    let prefactor = lambda_pow(&Rational::from_int(-(cfg.dim as i64)));
    let mut num = FracPoly::zero(vars.clone(), root);
    for (subset, specialized) in &terms {
        let mut t = specialized.clone();
        for name in &used {
            let c = cfg.component(name).expect("validated");
            if subset.contains(name) {
                t = &t * &a_part(c);
            } else {
                t = &t * &binomial(c);
            }
        }
        num = &num + &t;
    }
    num = &num * &prefactor;
    let den: Vec<FracPoly> = used
        .iter()
        .map(|name| binomial(cfg.component(name).expect("validated")))
        .collect();

    let unreduced = RatFrac::new("T", num, den);
    let reduced = if full_gcd {
        unreduced.reduce()?
    } else {
        unreduced.reduce_exact_division_only()?
    };
    assert!(
        reduced.eq_as_fraction(&unreduced),
        "reduction changed the zeta value"
    );
    let pole_candidates = binomial_pole_candidates(cfg, &reduced)?;
    Ok(ZetaResult {
        level,
        w: w.to_string(),
        dim: cfg.dim,
        root_order: root,
        strata_sum,
        reduced,
        pole_candidates,
    })
}

/// Pole candidates -(nu + M)/N for N != 0 at the topological level:
/// surviving iff some reduced denominator factor vanishes at s = value.
fn top_pole_candidates(cfg: &ResolutionConfig, reduced: &RatFrac) -> Result<Vec<PoleCandidate>> {
    let vars = reduced.num().vars().clone();
    let root = reduced.num().root_order();
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    for c in &cfg.components {
        if c.n.is_zero() {
            continue;
        }
        let value = &(-c.nu_effective()) / &c.n;
        let key = (c.name.clone(), value.clone());
        if !seen.insert(key) {
            continue;
        }
        let at = FracPoly::constant(vars.clone(), root, value.clone());
        let mut surviving = false;
        for f in reduced.den_factors() {
            if f.substitute("s", &at)?.is_zero() {
                surviving = true;
                break;
            }
        }
        out.push(PoleCandidate {
            component: c.name.clone(),
            value,
            surviving,
        });
    }
    Ok(out)
}

/// Pole candidates at the binomial levels: surviving iff some reduced
/// denominator factor vanishes under T -> Lambda^(-value/r).
fn binomial_pole_candidates(
    cfg: &ResolutionConfig,
    reduced: &RatFrac,
) -> Result<Vec<PoleCandidate>> {
    let root = reduced.num().root_order();
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    for c in &cfg.components {
        if c.n.is_zero() {
            continue;
        }
        let value = &(-c.nu_effective()) / &c.n;
        let key = (c.name.clone(), value.clone());
        if !seen.insert(key) {
            continue;
        }
        let mut surviving = false;
        for f in reduced.den_factors() {
            if factor_vanishes_at(f, &value, root)? {
                surviving = true;
                break;
            }
        }
        out.push(PoleCandidate {
            component: c.name.clone(),
            value,
            surviving,
        });
    }
    Ok(out)
}

/// Whether a denominator factor in T vanishes under the substitution
/// T -> Lambda^(-s0/r), where Lambda is uv at the Hodge level and L at the
/// motivic level (detected from the variable set).
pub fn factor_vanishes_at(factor: &FracPoly, s0: &Rational, root: u32) -> Result<bool> {
    use num_traits::ToPrimitive;
    // Promote the root order so that s0/r is representable.
    let q = s0
        .denom()
        .to_i64()
        .ok_or_else(|| Error::Domain("pole denominator too large".into()))? as u32;
    let fine = root
        .checked_mul(q)
        .ok_or_else(|| Error::Domain("root order overflow in pole check".into()))?;
    let f = factor.with_root_order(fine);
    let vars = f.vars().clone();
    // numerator of -s0/r over the fine root order
    let exp = &(-s0) / &Rational::from_int(root as i64);
    let numer = {
        let scaled = &exp * &Rational::from_int(fine as i64);
        scaled
            .to_i64()
            .ok_or_else(|| Error::Domain("pole exponent overflow".into()))?
    };
    let mut exps = vec![0; vars.len()];
    if let Some(ul) = vars.index_of("u") {
        exps[ul] = numer;
        exps[vars.index_of("v").expect("v variable")] = numer;
    } else {
        exps[vars.index_of("L").expect("L variable")] = numer;
    }
    let value = FracPoly::monomial(vars, fine, Rational::one(), exps);
    Ok(f.substitute_monomial("T", &value)?.is_zero())
}
