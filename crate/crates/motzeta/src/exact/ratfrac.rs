//! Reduced rational functions with factored denominators.
//!
//! A `RatFrac` keeps its denominator as a multiset of polynomial factors
//! rather than an expanded product: the zeta functions this crate computes
//! are naturally products of binomials, and the factored form preserves the
//! pole structure for reporting. Reduction cancels factor-by-factor via
//! exact division, falling back to a univariate gcd over the fraction field
//! of the remaining variables.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exact::poly::{FracPoly, Mono, VarSet};
use crate::exact::rational::Rational;

/// Univariate gcd of `p` and `q` in `var` over the fraction field of the
/// remaining variables, computed with a pseudo-remainder sequence.
///
/// The result is primitive: monomial content removed, integer-coprime
/// rational coefficients, positive leading coefficient in `var`.
pub fn gcd_univariate(p: &FracPoly, q: &FracPoly, var: &str) -> FracPoly {
    assert!(!p.is_zero() && !q.is_zero(), "gcd of zero polynomial");
    let vars = p.vars().clone();
    let root = p.root_order();

    // Split off var-monomial content so the Euclidean phase runs on
    // ordinary polynomials in `var`; the gcd picks up var^min(a,b).
    let ca = p.min_exponent_in(var).unwrap_or(0);
    let cb = q.min_exponent_in(var).unwrap_or(0);
    let shift = |f: &FracPoly, c: i64| {
        let idx = f.vars().index_of(var).expect("gcd variable missing");
        let mut m = vec![0; f.vars().len()];
        m[idx] = -c;
        f.mul_monomial(&Mono(m), &Rational::one())
    };
    let mut a = strip_content(&shift(p, ca), var);
    let mut b = strip_content(&shift(q, cb), var);
    if deg(&a, var) < deg(&b, var) {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = pseudo_rem(&a, &b, var);
        a = b;
        b = if r.is_zero() { r } else { strip_content(&r, var) };
    }
    let mut g = strip_content(&a, var);
    if main_var_leading_sign(&g, var) < 0 {
        g = -&g;
    }
    // Shared var-powers are genuine content only when both inputs are
    // ordinary polynomials in var; negative powers are Laurent units.
    let common = ca.min(cb).max(0);
    if common != 0 {
        let idx = vars.index_of(var).expect("gcd variable missing");
        let mut m = vec![0; vars.len()];
        m[idx] = common;
        g = g.mul_monomial(&Mono(m), &Rational::one());
    }
    let _ = root;
    g
}

fn deg(f: &FracPoly, var: &str) -> i64 {
    f.degree_in(var).unwrap_or(-1)
}

/// Sign of the leading coefficient viewed univariately in `var`
/// (the sign of beta in beta*s + alpha, or of alpha when beta = 0).
fn main_var_leading_sign(f: &FracPoly, var: &str) -> i32 {
    match f.univariate_in(var).iter().last() {
        None => 0,
        Some((_, lc)) => lc.leading_sign(),
    }
}


/// Remove monomial content (all variables) and rational content; the result
/// has integer-coprime coefficients. Sign is left alone.
fn strip_content(f: &FracPoly, _var: &str) -> FracPoly {
    if f.is_zero() {
        return f.clone();
    }
    let mc = f.monomial_content().unwrap();
    let rc = f.rational_content();
    f.div_monomial(&mc, &rc)
}

/// One full pseudo-remainder step: repeatedly kill the leading `var`-term
/// of `a` against `b`, multiplying through by lc(b) as needed.
fn pseudo_rem(a: &FracPoly, b: &FracPoly, var: &str) -> FracPoly {
    let db = deg(b, var);
    assert!(db >= 0, "pseudo_rem by zero");
    let b_uni = b.univariate_in(var);
    let lcb = b_uni.get(&db).expect("leading coefficient").clone();
    // When lc(b) is an invertible monomial the quotient steps divide
    // exactly (classic Euclid, no coefficient growth); otherwise scale the
    // remainder by lc(b) (pseudo-division).
    let lcb_unit = lcb
        .leading_term()
        .filter(|_| lcb.is_monomial())
        .map(|(m, c)| (m.clone(), c.clone()));
    let vars = a.vars().clone();
    let idx = vars.index_of(var).expect("variable missing");

    let mut r = a.clone();
    loop {
        let dr = deg(&r, var);
        if r.is_zero() || dr < db {
            return r;
        }
        let r_uni = r.univariate_in(var);
        let lcr = r_uni.get(&dr).expect("leading coefficient").clone();
        let mut shift = vec![0; vars.len()];
        shift[idx] = dr - db;
        let shifted = b.mul_monomial(&Mono(shift), &Rational::one());
        match &lcb_unit {
            Some((m, c)) => {
                let quot = lcr.div_monomial(m, c);
                r = &r - &(&shifted * &quot);
            }
            None => {
                r = &(&r * &lcb) - &(&shifted * &lcr);
            }
        }
    }
}

/// Exact e-th root of a rational, if one exists.
fn rational_nth_root(v: &Rational, e: u32) -> Option<Rational> {
    use num_traits::Signed;
    if e == 1 {
        return Some(v.clone());
    }
    if v.is_negative() && e.is_multiple_of(2) {
        return None;
    }
    let n = v.numer();
    let d = v.denom();
    let rn = n.abs().nth_root(e);
    let rd = d.nth_root(e);
    if num_traits::pow::pow(rn.clone(), e as usize) != n.abs()
        || num_traits::pow::pow(rd.clone(), e as usize) != *d
    {
        return None;
    }
    let sign = if v.is_negative() { -rn } else { rn };
    Some(Rational::new(sign, rd).expect("root of positive denominator"))
}

/// Partial cancellation against a binomial factor `alpha*var^k + beta`
/// whose two coefficients are monomials: enumerate its binomial divisors
/// `var^j - delta` (j | k, delta an exact root) and divide out the first
/// one that also divides the numerator. Complete for binomial-shaped
/// common factors, which is the only cancellation the zeta denominators
/// admit; runs in a handful of exact divisions.
fn binomial_partial_cancel(
    num: &FracPoly,
    factor: &FracPoly,
    var: &str,
) -> Option<(FracPoly, FracPoly)> {
    let uni = factor.univariate_in(var);
    if uni.len() != 2 {
        return None;
    }
    let (&k, alpha) = uni.iter().last().unwrap();
    let (&k0, beta) = uni.iter().next().unwrap();
    if k0 != 0 || k <= 0 || !alpha.is_monomial() || !beta.is_monomial() {
        return None;
    }
    let (am, ac) = alpha.leading_term().map(|(m, c)| (m.clone(), c.clone()))?;
    let (bm, bc) = beta.leading_term().map(|(m, c)| (m.clone(), c.clone()))?;
    // delta^(k/j) = -beta/alpha
    let t_coef = &(-&bc) / &ac;
    let t_exps: Vec<i64> = bm.0.iter().zip(&am.0).map(|(b, a)| b - a).collect();
    let vars = num.vars().clone();
    let root = num.root_order();
    let var_idx = vars.index_of(var)?;

    let mut divisors: Vec<i64> = (1..=k / 2).filter(|j| k % j == 0).collect();
    divisors.sort_unstable_by(|a, b| b.cmp(a));
    for j in divisors {
        let e = (k / j) as u32;
        if t_exps.iter().any(|x| x % (e as i64) != 0) {
            continue;
        }
        let Some(delta0) = rational_nth_root(&t_coef, e) else {
            continue;
        };
        let delta_exps: Vec<i64> = t_exps.iter().map(|x| x / e as i64).collect();
        let mut candidates = vec![delta0.clone()];
        if e.is_multiple_of(2) {
            candidates.push(-delta0);
        }
        for delta in candidates {
            let mut g_exps = vec![0; vars.len()];
            g_exps[var_idx] = j;
            let tj = FracPoly::monomial(vars.clone(), root, Rational::one(), g_exps);
            let dm = FracPoly::monomial(vars.clone(), root, delta, delta_exps.clone());
            let g = &tj - &dm;
            if let (Some(nq), Some(fq)) = (num.div_exact(&g), factor.div_exact(&g)) {
                return Some((nq, fq));
            }
        }
    }
    None
}

/// True when the factor, viewed univariately, is a binomial whose two
/// coefficients are monomials (the shape of all zeta denominators).
fn is_monomial_coefficient_binomial(f: &FracPoly, var: &str) -> bool {
    let uni = f.univariate_in(var);
    uni.len() <= 2 && uni.values().all(FracPoly::is_monomial)
}

/// A value that may be the distinguished symbol infinity.
#[derive(Clone, Debug)]
pub enum ValueOrInfinity {
    Finite(FracValue),
    Infinity,
}

impl ValueOrInfinity {
    pub fn is_infinite(&self) -> bool {
        matches!(self, ValueOrInfinity::Infinity)
    }

    pub fn finite(&self) -> Option<&FracValue> {
        match self {
            ValueOrInfinity::Finite(v) => Some(v),
            ValueOrInfinity::Infinity => None,
        }
    }

    /// The rational value when finite and constant.
    pub fn as_rational(&self) -> Option<Rational> {
        self.finite().and_then(FracValue::as_rational)
    }
}

impl PartialEq for ValueOrInfinity {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (ValueOrInfinity::Infinity, ValueOrInfinity::Infinity) => true,
            (ValueOrInfinity::Finite(a), ValueOrInfinity::Finite(b)) => a == b,
            _ => false,
        }
    }
}

impl fmt::Display for ValueOrInfinity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValueOrInfinity::Finite(v) => write!(f, "{v}"),
            ValueOrInfinity::Infinity => write!(f, "infinity"),
        }
    }
}

/// Quotient of two polynomials, as a value (denominator nonzero).
#[derive(Clone, Debug)]
pub struct FracValue {
    num: FracPoly,
    den: FracPoly,
}

impl FracValue {
    pub fn new(num: FracPoly, den: FracPoly) -> Self {
        assert!(!den.is_zero(), "FracValue with zero denominator");
        // Flatten when the division is exact; otherwise normalize the
        // denominator to content-free form.
        if let Some(q) = num.div_exact(&den) {
            let one = FracPoly::one(num.vars().clone(), num.root_order());
            return FracValue { num: q, den: one };
        }
        let mc = den.monomial_content().unwrap();
        let mut rc = den.rational_content();
        if den.leading_sign() < 0 {
            rc = -rc;
        }
        let den2 = den.div_monomial(&mc, &rc);
        let num2 = num.div_monomial(&mc, &rc);
        FracValue { num: num2, den: den2 }
    }

    pub fn from_poly(p: FracPoly) -> Self {
        let one = FracPoly::one(p.vars().clone(), p.root_order());
        FracValue { num: p, den: one }
    }

    pub fn from_rational(vars: VarSet, root: u32, r: Rational) -> Self {
        FracValue::from_poly(FracPoly::constant(vars, root, r))
    }

    pub fn num(&self) -> &FracPoly {
        &self.num
    }

    pub fn den(&self) -> &FracPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(&n / &d)
    }

    /// Equality as abstract fractions: num1*den2 == num2*den1, after
    /// aligning root orders.
    pub fn eq_as_fraction(&self, other: &FracValue) -> bool {
        let r = num_integer::lcm(self.num.root_order(), other.num.root_order());
        let a = (&self.num.with_root_order(r), &self.den.with_root_order(r));
        let b = (&other.num.with_root_order(r), &other.den.with_root_order(r));
        (a.0 * b.1) == (b.0 * a.1)
    }
}

impl PartialEq for FracValue {
    fn eq(&self, other: &Self) -> bool {
        self.eq_as_fraction(other)
    }
}

impl fmt::Display for FracValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{r}");
        }
        if self.den.as_constant().map(|c| c.is_one()).unwrap_or(false) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

/// Rational function with a factored denominator, univariate in
/// `main_var` over the remaining variables.
#[derive(Clone, Debug)]
pub struct RatFrac {
    main_var: String,
    num: FracPoly,
    den: Vec<FracPoly>,
    reduced: bool,
}

impl RatFrac {
    pub fn new(main_var: &str, num: FracPoly, den: Vec<FracPoly>) -> Self {
        assert!(
            num.vars().index_of(main_var).is_some(),
            "main variable `{main_var}` not in variable set"
        );
        RatFrac {
            main_var: main_var.to_string(),
            num,
            den,
            reduced: false,
        }
    }

    pub fn from_poly(main_var: &str, num: FracPoly) -> Self {
        let mut f = RatFrac::new(main_var, num, Vec::new());
        f.reduced = true;
        f
    }

    pub fn main_var(&self) -> &str {
        &self.main_var
    }

    pub fn num(&self) -> &FracPoly {
        &self.num
    }

    pub fn den_factors(&self) -> &[FracPoly] {
        &self.den
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// Mark as already reduced (used when reconstructing serialized
    /// results whose reduction happened before serialization).
    pub fn mark_reduced(&mut self) {
        self.reduced = true;
    }

    pub fn vars(&self) -> &VarSet {
        self.num.vars()
    }

    pub fn root_order(&self) -> u32 {
        self.num.root_order()
    }

    pub fn den_product(&self) -> FracPoly {
        let mut d = FracPoly::one(self.num.vars().clone(), self.num.root_order());
        for f in &self.den {
            d = &d * f;
        }
        d
    }

    pub fn as_value(&self) -> FracValue {
        FracValue::new(self.num.clone(), self.den_product())
    }

    /// Equality as abstract fractions (cross-multiplication), robust to
    /// differing root orders.
    pub fn eq_as_fraction(&self, other: &RatFrac) -> bool {
        self.as_value().eq_as_fraction(&other.as_value())
    }

    pub fn add(&self, other: &RatFrac) -> RatFrac {
        assert_eq!(self.main_var, other.main_var);
        let dp_self = self.den_product();
        let dp_other = other.den_product();
        let num = &(&self.num * &dp_other) + &(&other.num * &dp_self);
        let mut den = self.den.clone();
        den.extend(other.den.iter().cloned());
        RatFrac::new(&self.main_var, num, den)
    }

    pub fn sub(&self, other: &RatFrac) -> RatFrac {
        assert_eq!(self.main_var, other.main_var);
        let dp_self = self.den_product();
        let dp_other = other.den_product();
        let num = &(&self.num * &dp_other) - &(&other.num * &dp_self);
        let mut den = self.den.clone();
        den.extend(other.den.iter().cloned());
        RatFrac::new(&self.main_var, num, den)
    }

    pub fn mul(&self, other: &RatFrac) -> RatFrac {
        assert_eq!(self.main_var, other.main_var);
        let num = &self.num * &other.num;
        let mut den = self.den.clone();
        den.extend(other.den.iter().cloned());
        RatFrac::new(&self.main_var, num, den)
    }

    pub fn pow(&self, exp: u32) -> RatFrac {
        let mut acc = RatFrac::from_poly(
            &self.main_var,
            FracPoly::one(self.num.vars().clone(), self.num.root_order()),
        );
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    /// Full reduction: factor-by-factor exact division with gcd fallback.
    pub fn reduce(&self) -> Result<RatFrac> {
        self.reduce_inner(true)
    }

    /// Reduction restricted to exact division by whole denominator factors
    /// (no gcd): the only cancellation that is meaningful over a coefficient
    /// ring that is not a gcd domain (the symbolic class ring).
    pub fn reduce_exact_division_only(&self) -> Result<RatFrac> {
        self.reduce_inner(false)
    }

    fn reduce_inner(&self, use_gcd: bool) -> Result<RatFrac> {
        if self.reduced {
            return Ok(self.clone());
        }
        if self.den.iter().any(FracPoly::is_zero) {
            return Err(Error::Domain("zero denominator factor".into()));
        }
        // An identically zero numerator absorbs every factor.
        if self.num.is_zero() {
            let mut out = RatFrac::new(&self.main_var, self.num.clone(), Vec::new());
            out.reduced = true;
            return Ok(out);
        }
        let var = self.main_var.clone();
        let mut num = self.num.clone();
        let mut kept: Vec<FracPoly> = Vec::new();

        for f in &self.den {
            // Normalize the factor: monomial and rational content move to
            // the numerator side, leading coefficient made positive.
            let mc = f.monomial_content().unwrap();
            let mut rc = f.rational_content();
            let mut factor = f.div_monomial(&mc, &rc);
            if main_var_leading_sign(&factor, &var) < 0 {
                factor = -&factor;
                rc = -rc;
            }
            num = num.mul_monomial(
                &Mono(mc.0.iter().map(|e| -e).collect()),
                &rc.recip().expect("nonzero content"),
            );

            if factor.as_constant().map(|c| c.is_one()).unwrap_or(false) {
                continue;
            }

            // Cancel as much of this factor as possible against the
            // numerator, then keep the rest.
            let mut remaining = factor;
            loop {
                if num.is_zero() {
                    break;
                }
                if remaining.as_constant().map(|c| c.is_one()).unwrap_or(false) {
                    break;
                }
                if let Some(q) = num.div_exact(&remaining) {
                    num = q;
                    remaining =
                        FracPoly::one(num.vars().clone(), num.root_order());
                    break;
                }
                if !use_gcd || !remaining.involves(&var) {
                    break;
                }
                if let Some((nq, fq)) = binomial_partial_cancel(&num, &remaining, &var) {
                    num = nq;
                    remaining = fq;
                    continue;
                }
                if is_monomial_coefficient_binomial(&remaining, &var) {
                    // Binomial divisors are the only ones such a factor
                    // has over this coefficient ring; nothing to cancel.
                    break;
                }
                let g = gcd_univariate(&num, &remaining, &var);
                if deg(&g, &var) <= 0 {
                    break;
                }
                match (num.div_exact(&g), remaining.div_exact(&g)) {
                    (Some(nq), Some(fq)) => {
                        num = nq;
                        remaining = fq;
                    }
                    // A spurious coefficient content blocked the division;
                    // leave the factor uncancelled rather than guess.
                    _ => break,
                }
            }
            if !remaining.as_constant().map(|c| c.is_one()).unwrap_or(false) {
                // Renormalize the leftover factor.
                let mc2 = remaining.monomial_content().unwrap();
                let mut rc2 = remaining.rational_content();
                if main_var_leading_sign(&remaining, &var) < 0 {
                    rc2 = -rc2;
                }
                let fact2 = remaining.div_monomial(&mc2, &rc2);
                num = num.mul_monomial(
                    &Mono(mc2.0.iter().map(|e| -e).collect()),
                    &rc2.recip().expect("nonzero content"),
                );
                if !fact2.as_constant().map(|c| c.is_one()).unwrap_or(false) {
                    kept.push(fact2);
                }
            }
        }

        kept.sort_by(|a, b| {
            a.to_string().cmp(&b.to_string())
        });
        let mut out = RatFrac::new(&self.main_var, num, kept);
        out.reduced = true;
        Ok(out)
    }

    /// Substitute `value` for `var` after reduction; exact value when the
    /// denominator survives, infinity when only the denominator vanishes.
    ///
    /// `var` must be the main variable; `value` must not involve it.
    pub fn eval_limit(&self, var: &str, value: &FracPoly) -> Result<ValueOrInfinity> {
        assert_eq!(var, self.main_var, "eval_limit is taken in the main variable");
        if value.involves(var) {
            return Err(Error::Domain(format!(
                "eval_limit value for `{var}` mentions `{var}`"
            )));
        }
        let f = if self.reduced { self.clone() } else { self.reduce()? };
        let subst = |p: &FracPoly| -> Result<FracPoly> {
            if value.is_monomial() || value.as_constant().is_some() {
                if value.as_constant().map(|c| c.is_zero()).unwrap_or(false) {
                    p.substitute(var, value)
                } else {
                    p.substitute_monomial(var, value)
                }
            } else {
                p.substitute(var, value)
            }
        };
        let num_v = subst(&f.num)?;
        let mut den_v = FracPoly::one(f.num.vars().clone(), f.num.root_order());
        let mut den_vanished = false;
        for d in &f.den {
            let dv = subst(d)?;
            if dv.is_zero() {
                den_vanished = true;
            } else {
                den_v = &den_v * &dv;
            }
        }
        if den_vanished {
            if num_v.is_zero() {
                panic!(
                    "numerator and denominator vanish simultaneously after reduction \
                     (non-coprime reduced fraction)"
                );
            }
            return Ok(ValueOrInfinity::Infinity);
        }
        Ok(ValueOrInfinity::Finite(FracValue::new(num_v, den_v)))
    }

    /// Power-series coefficients in the main variable up to order `n_max`
    /// inclusive. The expanded denominator must have an invertible
    /// (monomial) constant term in the main variable; the numerator must
    /// not contain negative powers of it.
    pub fn series_coeffs(&self, n_max: usize) -> Result<Vec<FracPoly>> {
        let var = &self.main_var;
        let vars = self.num.vars().clone();
        let root = self.num.root_order();
        let r = root as i64;
        if self.num.min_exponent_in(var).unwrap_or(0) < 0 {
            return Err(Error::Domain(format!(
                "series numerator has negative powers of `{var}`"
            )));
        }
        let den = self.den_product();
        let den_uni = den.univariate_in(var);
        for d in den_uni.keys() {
            if d % r != 0 {
                return Err(Error::Domain(
                    "series denominator has fractional powers of the variable".into(),
                ));
            }
        }
        let num_uni = self.num.univariate_in(var);
        for d in num_uni.keys() {
            if d % r != 0 {
                return Err(Error::Domain(
                    "series numerator has fractional powers of the variable".into(),
                ));
            }
        }
        let d0 = den_uni
            .get(&0)
            .cloned()
            .ok_or_else(|| Error::Domain("denominator constant term is zero".into()))?;
        // The constant term must be invertible: a single monomial.
        if !d0.is_monomial() {
            return Err(Error::Domain(
                "denominator constant term is not invertible".into(),
            ));
        }
        let (d0m, d0c) = d0.leading_term().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let inv0 = |p: &FracPoly| -> FracPoly {
            p.div_monomial(&d0m, &d0c)
        };
        let get = |m: &BTreeMap<i64, FracPoly>, k: i64| -> FracPoly {
            m.get(&(k * r))
                .cloned()
                .unwrap_or_else(|| FracPoly::zero(vars.clone(), root))
        };
        let mut coeffs: Vec<FracPoly> = Vec::with_capacity(n_max + 1);
        for n in 0..=(n_max as i64) {
            let mut acc = get(&num_uni, n);
            for k in 1..=n {
                let dk = get(&den_uni, k);
                if dk.is_zero() {
                    continue;
                }
                acc = &acc - &(&dk * &coeffs[(n - k) as usize]);
            }
            coeffs.push(inv0(&acc));
        }
        Ok(coeffs)
    }
}

impl fmt::Display for RatFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        let num_s = format!("{}", self.num);
        if self.num.num_terms() > 1 {
            write!(f, "({num_s})")?;
        } else {
            write!(f, "{num_s}")?;
        }
        write!(f, " / ")?;
        if self.den.len() == 1 {
            if self.den[0].num_terms() <= 1 {
                write!(f, "{}", self.den[0])
            } else {
                write!(f, "({})", self.den[0])
            }
        } else {
            let parts: Vec<String> = self.den.iter().map(|d| format!("({d})")).collect();
            write!(f, "({})", parts.join("*"))
        }
    }
}
