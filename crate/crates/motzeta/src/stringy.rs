//! Limit invariants of the zeta functions.
//!
//! Substituting `s -> 1` (that is, `T -> Lambda^(-1/r)`) in the reduced
//! zeta gives the divisor invariants E_W(D) and e_W(D); `s -> -1`
//! (`T -> Lambda^(1/r)`) gives the pair invariants E_W((X,D)) and
//! e_W((X,D)). Both admit the value infinity. At the motivic level the
//! membership test is: after exact-division reduction, every surviving
//! denominator binomial must stay nonzero under the substitution.
//!
//! The `u,v -> 1` limit of a finite Hodge value is evaluated along the
//! diagonal path `u^(1/r) = v^(1/r) = w`, reducing it to a univariate
//! limit; the Euler-level value cross-checks it.

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::exact::{FracPoly, FracValue, RatFrac, Rational, ValueOrInfinity, VarSet};
use crate::grothendieck::SymbolRegistry;
use crate::resolution::ResolutionConfig;
use crate::zeta::{self, Level, ZetaResult};

/// Which limit to take.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LimitPoint {
    /// s -> 1, the divisor ("Kontsevich") invariant.
    SOne,
    /// s -> -1, the pair invariant.
    SMinusOne,
}

impl LimitPoint {
    fn s_value(&self) -> Rational {
        match self {
            LimitPoint::SOne => Rational::one(),
            LimitPoint::SMinusOne => Rational::from_int(-1),
        }
    }
}

/// e_W(D): the limit of the topological zeta at s -> 1.
pub fn kontsevich_e(z: &ZetaResult) -> Result<ValueOrInfinity> {
    assert_eq!(z.level, Level::Topological);
    limit_topological(z, LimitPoint::SOne)
}

/// e_W((X,D)): the limit of the topological zeta at s -> -1.
pub fn pair_e(z: &ZetaResult) -> Result<ValueOrInfinity> {
    assert_eq!(z.level, Level::Topological);
    limit_topological(z, LimitPoint::SMinusOne)
}

fn limit_topological(z: &ZetaResult, at: LimitPoint) -> Result<ValueOrInfinity> {
    let vars = z.reduced.num().vars().clone();
    let root = z.reduced.num().root_order();
    let value = FracPoly::constant(vars, root, at.s_value());
    z.reduced.eval_limit("s", &value)
}

/// E_W(D): the limit of the Hodge zeta at s -> 1, i.e. the substitution
/// `T -> (uv)^(-1/r)` into the reduced form; infinity when the reduced
/// denominator vanishes there.
pub fn kontsevich_big_e(z: &ZetaResult) -> Result<ValueOrInfinity> {
    assert_eq!(z.level, Level::Hodge);
    limit_binomial(z, LimitPoint::SOne)
}

/// E_W((X,D)): the limit of the Hodge zeta at s -> -1
/// (`T -> (uv)^(1/r)`).
pub fn pair_big_e(z: &ZetaResult) -> Result<ValueOrInfinity> {
    assert_eq!(z.level, Level::Hodge);
    limit_binomial(z, LimitPoint::SMinusOne)
}

/// Motivic-level limits per the localization membership test: at s -> 1
/// every surviving factor `1 - L^(-nu - s N)` must have `nu + N != 0`
/// (at s -> -1, `nu != N`); otherwise the value is infinity.
pub fn motivic_limit(z: &ZetaResult, at: LimitPoint) -> Result<ValueOrInfinity> {
    assert_eq!(z.level, Level::Motivic);
    limit_binomial(z, at)
}

/// Shared limit path for the two binomial levels. The substitution target
/// is `T -> Lambda^(-s0/r)`; since the zeta is reduced, a vanishing
/// denominator factor with nonvanishing numerator signals infinity, except
/// that at the motivic level reduction is exact-division only, so a
/// vanishing factor there already means "outside the localization".
fn limit_binomial(z: &ZetaResult, at: LimitPoint) -> Result<ValueOrInfinity> {
    let s0 = at.s_value();
    let root = z.root_order;
    let reduced = &z.reduced;
    let vars = reduced.num().vars().clone();
    // T -> Lambda^(-s0/r): exponent numerator over root.
    let numer = (-&s0).to_i64().expect("s0 is +-1");
    let mut exps = vec![0; vars.len()];
    if let Some(u) = vars.index_of("u") {
        exps[u] = numer;
        exps[vars.index_of("v").expect("v variable")] = numer;
    } else {
        exps[vars.index_of("L").expect("L variable")] = numer;
    }
    let value = FracPoly::monomial(vars.clone(), root, Rational::one(), exps);

    let num_v = reduced.num().substitute_monomial("T", &value)?;
    let mut den_v = FracPoly::one(vars, root);
    let mut vanished = false;
    for f in reduced.den_factors() {
        let fv = f.substitute_monomial("T", &value)?;
        if fv.is_zero() {
            vanished = true;
        } else {
            den_v = &den_v * &fv;
        }
    }
    if vanished {
        if z.level == Level::Hodge && num_v.is_zero() {
            // Reduced Hodge fractions are coprime in T; a common zero
            // would contradict the gcd reduction.
            panic!("numerator and denominator of a reduced Hodge zeta vanish together");
        }
        return Ok(ValueOrInfinity::Infinity);
    }
    Ok(ValueOrInfinity::Finite(FracValue::new(num_v, den_v)))
}

/// Direct product formula `sum_I class_I * prod 1/(nu_i + N_i)` (or with
/// `a_i = nu_i - N_i` for the pair variant) at the Euler level; valid
/// whenever no denominator vanishes. Used as an independent route.
pub fn direct_euler_formula(
    cfg: &ResolutionConfig,
    w: &str,
    registry: &SymbolRegistry,
    at: LimitPoint,
) -> Result<Option<Rational>> {
    cfg.validated()?;
    let mut total = Rational::zero();
    for s in &cfg.strata {
        let chi = Rational::from_bigint(s.class_for(w).euler_specialize(registry)?);
        if chi.is_zero() {
            continue;
        }
        let mut term = chi;
        for name in &s.subset {
            let c = cfg.component(name).expect("validated");
            let d = match at {
                LimitPoint::SOne => &c.nu_effective() + &c.n,
                LimitPoint::SMinusOne => &c.nu_effective() - &c.n,
            };
            if d.is_zero() {
                return Ok(None);
            }
            term = &term / &d;
        }
        total = &total + &term;
    }
    Ok(Some(total))
}

/// Map a finite Hodge value onto the diagonal `u^(1/r) = v^(1/r) = w` and
/// take the limit w -> 1. Returns infinity when the limit diverges.
pub fn diagonal_euler_limit(value: &FracValue) -> Result<ValueOrInfinity> {
    let num = to_diagonal(value.num())?;
    let den = to_diagonal(value.den())?;
    if den.is_zero() {
        return Err(Error::Domain(
            "denominator collapses to zero on the diagonal".into(),
        ));
    }
    let f = RatFrac::new("w", num, vec![den]);
    let one = FracPoly::constant(f.num().vars().clone(), f.num().root_order(), Rational::one());
    f.eval_limit("w", &one)
}

/// Rewrite a (u, v) polynomial in the single diagonal variable w with
/// w^(1/r) exponent granularity: u^(a/r) v^(b/r) -> w^((a+b)/r).
fn to_diagonal(p: &FracPoly) -> Result<FracPoly> {
    let vars = p.vars().clone();
    let u = vars
        .index_of("u")
        .ok_or_else(|| Error::Domain("diagonal limit needs u, v variables".into()))?;
    let v = vars
        .index_of("v")
        .ok_or_else(|| Error::Domain("diagonal limit needs u, v variables".into()))?;
    if vars.names().iter().any(|n| n != "u" && n != "v" && n != "T") {
        return Err(Error::Domain(
            "diagonal limit applies to u, v values only".into(),
        ));
    }
    if let Some(t) = vars.index_of("T") {
        if p.terms().any(|(m, _)| m.0[t] != 0) {
            return Err(Error::Domain("diagonal limit applies after T is gone".into()));
        }
    }
    let wv = VarSet::new(["w"]);
    let mut out = FracPoly::zero(wv.clone(), p.root_order());
    for (m, c) in p.terms() {
        let e = m.0[u] + m.0[v];
        out = &out + &FracPoly::monomial(wv.clone(), p.root_order(), c.clone(), vec![e]);
    }
    Ok(out)
}

/// Evaluate the Euler specialization of a reduced Hodge zeta at a rational
/// sample point s0: substitute `T -> (uv)^(-s0/r)`, then take the diagonal
/// u,v -> 1 limit. Sample points must avoid the pole candidates.
pub fn euler_of_hodge_at(z: &ZetaResult, s0: &Rational) -> Result<ValueOrInfinity> {
    assert_eq!(z.level, Level::Hodge);
    let root = z.root_order;
    let q = s0
        .denom()
        .to_i64()
        .ok_or_else(|| Error::Domain("sample denominator too large".into()))? as u32;
    let fine = root
        .checked_mul(q)
        .ok_or_else(|| Error::Domain("root order overflow".into()))?;
    let vars = z.reduced.num().vars().clone();
    let numer = {
        let exp = &(-s0) / &Rational::from_int(root as i64);
        (&exp * &Rational::from_int(fine as i64))
            .to_i64()
            .ok_or_else(|| Error::Domain("sample exponent overflow".into()))?
    };
    let mut exps = vec![0; vars.len()];
    exps[vars.index_of("u").expect("u variable")] = numer;
    exps[vars.index_of("v").expect("v variable")] = numer;
    let value = FracPoly::monomial(vars, fine, Rational::one(), exps);

    let num_v = z.reduced.num().with_root_order(fine).substitute_monomial("T", &value)?;
    let mut den_v = FracPoly::one(num_v.vars().clone(), fine);
    for f in z.reduced.den_factors() {
        let fv = f.with_root_order(fine).substitute_monomial("T", &value)?;
        if fv.is_zero() {
            return Err(Error::Domain(format!(
                "sample point {s0} hits a denominator zero; pick another sample"
            )));
        }
        den_v = &den_v * &fv;
    }
    diagonal_euler_limit(&FracValue::new(num_v, den_v))
}

/// Why a report was flagged.
#[derive(Clone, Debug, PartialEq)]
pub enum ConsistencyFlag {
    /// E is infinite while e is finite: the limit definition of e keeps a
    /// value that the u,v -> 1 route would miss. Informational.
    HodgeInfiniteEulerFinite { which: &'static str },
    /// A genuine mismatch between the diagonal limit of E and e.
    EulerLimitMismatch {
        which: &'static str,
        from_hodge: Rational,
        from_topological: Rational,
    },
    /// The Hodge specialization of a finite motivic value disagrees with
    /// the finite Hodge value.
    MotivicHodgeMismatch { which: &'static str },
    /// Motivic and Hodge levels disagree about finiteness. The motivic
    /// membership test is coarser (exact division only), so this can flag
    /// configurations equal in the completed ring but not representationally.
    MotivicFinitenessMismatch { which: &'static str },
}

impl std::fmt::Display for ConsistencyFlag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ConsistencyFlag::HodgeInfiniteEulerFinite { which } => write!(
                f,
                "{which}: E = infinity while e is finite (limit definition keeps the value)"
            ),
            ConsistencyFlag::EulerLimitMismatch {
                which,
                from_hodge,
                from_topological,
            } => write!(
                f,
                "{which}: u,v -> 1 limit of E gives {from_hodge} but e = {from_topological}"
            ),
            ConsistencyFlag::MotivicHodgeMismatch { which } => {
                write!(f, "{which}: Hodge specialization of the motivic value disagrees")
            }
            ConsistencyFlag::MotivicFinitenessMismatch { which } => {
                write!(f, "{which}: motivic and Hodge levels disagree about finiteness")
            }
        }
    }
}

/// All six invariants of a configuration over W, with cross-checks.
#[derive(Clone, Debug)]
pub struct InvariantReport {
    pub e_top: ValueOrInfinity,
    pub e_hodge: ValueOrInfinity,
    pub e_pair_top: ValueOrInfinity,
    pub e_pair_hodge: ValueOrInfinity,
    pub motivic_e: ValueOrInfinity,
    pub motivic_e_pair: ValueOrInfinity,
    pub flags: Vec<ConsistencyFlag>,
}

/// Compute all six invariants and run the consistency checks:
/// the diagonal u,v -> 1 limit of each finite Hodge value must equal the
/// topological value, and the Hodge specialization of each finite motivic
/// value must match the Hodge value.
pub fn consistency_check(
    cfg: &ResolutionConfig,
    w: &str,
    registry: &SymbolRegistry,
) -> Result<InvariantReport> {
    let z_top = zeta::topological_zeta(cfg, w, registry)?;
    let z_hodge = zeta::hodge_zeta(cfg, w, registry)?;
    let z_mot = zeta::motivic_zeta(cfg, w, registry)?;

    let e_top = kontsevich_e(&z_top)?;
    let e_hodge = kontsevich_big_e(&z_hodge)?;
    let e_pair_top = pair_e(&z_top)?;
    let e_pair_hodge = pair_big_e(&z_hodge)?;
    let motivic_e = motivic_limit(&z_mot, LimitPoint::SOne)?;
    let motivic_e_pair = motivic_limit(&z_mot, LimitPoint::SMinusOne)?;

    let mut flags = Vec::new();
    check_pairing(&e_hodge, &e_top, "s -> 1", &mut flags)?;
    check_pairing(&e_pair_hodge, &e_pair_top, "s -> -1", &mut flags)?;
    check_motivic(&motivic_e, &e_hodge, registry, "s -> 1", &mut flags)?;
    check_motivic(&motivic_e_pair, &e_pair_hodge, registry, "s -> -1", &mut flags)?;

    Ok(InvariantReport {
        e_top,
        e_hodge,
        e_pair_top,
        e_pair_hodge,
        motivic_e,
        motivic_e_pair,
        flags,
    })
}

fn check_pairing(
    hodge: &ValueOrInfinity,
    top: &ValueOrInfinity,
    which: &'static str,
    flags: &mut Vec<ConsistencyFlag>,
) -> Result<()> {
    match (hodge, top) {
        (ValueOrInfinity::Finite(h), ValueOrInfinity::Finite(t)) => {
            let lim = diagonal_euler_limit(h)?;
            let t_rat = t
                .as_rational()
                .ok_or_else(|| Error::Domain("topological value is not rational".into()))?;
            match lim.as_rational() {
                Some(l) if l == t_rat => {}
                Some(l) => flags.push(ConsistencyFlag::EulerLimitMismatch {
                    which,
                    from_hodge: l,
                    from_topological: t_rat,
                }),
                None => flags.push(ConsistencyFlag::EulerLimitMismatch {
                    which,
                    from_hodge: Rational::zero(),
                    from_topological: t_rat,
                }),
            }
        }
        (ValueOrInfinity::Infinity, ValueOrInfinity::Finite(_)) => {
            flags.push(ConsistencyFlag::HodgeInfiniteEulerFinite { which });
        }
        _ => {}
    }
    Ok(())
}

fn check_motivic(
    motivic: &ValueOrInfinity,
    hodge: &ValueOrInfinity,
    registry: &SymbolRegistry,
    which: &'static str,
    flags: &mut Vec<ConsistencyFlag>,
) -> Result<()> {
    match (motivic, hodge) {
        (ValueOrInfinity::Finite(m), ValueOrInfinity::Finite(h)) => {
            let target = h.num().vars().clone();
            let mh_num = hodge_specialize_encoded(m.num(), registry)?.promote_vars(&target);
            let mh_den = hodge_specialize_encoded(m.den(), registry)?.promote_vars(&target);
            let cross_a = &mh_num * h.den();
            let cross_b = &mh_den * h.num();
            if cross_a != cross_b {
                flags.push(ConsistencyFlag::MotivicHodgeMismatch { which });
            }
        }
        (ValueOrInfinity::Infinity, ValueOrInfinity::Infinity) => {}
        _ => flags.push(ConsistencyFlag::MotivicFinitenessMismatch { which }),
    }
    Ok(())
}

/// Hodge-specialize a polynomial in the motivic encoding (variables L,
/// curve symbols, named symbols; no T) into (u, v).
pub fn hodge_specialize_encoded(p: &FracPoly, registry: &SymbolRegistry) -> Result<FracPoly> {
    use crate::grothendieck::MotClass;
    let vars = p.vars().clone();
    let root = p.root_order();
    let uv = VarSet::new(["u", "v"]);
    let r = root as i64;
    let mut out = FracPoly::zero(uv.clone(), root);
    for (m, c) in p.terms() {
        // rebuild the class term by term
        let mut class = MotClass::one(root);
        let mut l_num = 0i64;
        for (i, e) in m.0.iter().enumerate() {
            if *e == 0 {
                continue;
            }
            let name = &vars.names()[i];
            match name.as_str() {
                "L" => l_num = *e,
                "T" => {
                    return Err(Error::Domain(
                        "cannot Hodge-specialize a value still containing T".into(),
                    ))
                }
                _ => {
                    if *e % r != 0 || *e < 0 {
                        return Err(Error::Domain(format!(
                            "fractional symbol power {e}/{r} of `{name}`"
                        )));
                    }
                    let sym = if let Some(g) = name.strip_prefix("C_") {
                        MotClass::curve(root, g.parse().map_err(|_| {
                            Error::Domain(format!("bad curve symbol `{name}`"))
                        })?)
                    } else {
                        MotClass::named(root, name)
                    };
                    for _ in 0..(*e / r) {
                        class = class.mul(&sym);
                    }
                }
            }
        }
        class = class.mul(&MotClass::l_pow(root, l_num));
        let coeff_int = c
            .to_integer()
            .ok_or_else(|| Error::Domain("non-integer class coefficient".into()))?;
        let h = class.scale(&coeff_int).hodge_specialize(registry)?;
        out = &out + &h;
    }
    Ok(out)
}
