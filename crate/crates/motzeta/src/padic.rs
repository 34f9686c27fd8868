//! Brute-force p-adic oracle.
//!
//! For an integer polynomial f the local zeta series has coefficients
//! `c_n = card(X_n) * p^(-(n+1)d)`, where `X_n` counts residues
//! `x in (Z/p^(n+1))^d` with `f(x) = 0 mod p^n` but not `mod p^(n+1)`.
//! The same series falls out of the resolution formula by evaluating the
//! strata classes at `L = p` and expanding the resulting rational function
//! in `t = p^(-s)`. Comparing the two series element-wise cross-checks a
//! configuration against honest counting.
//!
//! Only W = X is meaningful here (the series integrates over the whole
//! lattice), and only configurations with classes in Z[L] and integer
//! multiplicities are supported.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::{FracPoly, RatFrac, Rational, VarSet};
use crate::grothendieck::AtomicSymbol;
use crate::resolution::ResolutionConfig;

/// Enumeration guard: p^((n+1)d) residue vectors at most.
const ENUMERATION_GUARD: u64 = 100_000_000;

/// Sparse integer polynomial in `dimension` variables with nonnegative
/// exponents.
#[derive(Clone, Debug, PartialEq)]
pub struct IntPoly {
    pub dimension: usize,
    pub terms: Vec<(Vec<u32>, i64)>,
}

impl IntPoly {
    pub fn new(dimension: usize, terms: Vec<(Vec<u32>, i64)>) -> Result<Self> {
        for (exps, _) in &terms {
            if exps.len() != dimension {
                return Err(Error::Domain(format!(
                    "exponent vector {exps:?} does not match dimension {dimension}"
                )));
            }
        }
        Ok(IntPoly {
            dimension,
            terms: terms.into_iter().filter(|(_, c)| *c != 0).collect(),
        })
    }

    /// f(x) mod m, with coefficients reduced into [0, m).
    fn eval_mod(&self, x: &[u64], m: u64) -> u64 {
        let mut acc: u64 = 0;
        for (exps, c) in &self.terms {
            let mut t: u64 = c.rem_euclid(m as i64) as u64;
            for (xi, e) in x.iter().zip(exps) {
                for _ in 0..*e {
                    t = t * xi % m;
                }
            }
            acc = (acc + t) % m;
        }
        acc
    }
}

/// Count x in (Z/p^(n+1))^d with ord_p f(x) exactly n.
pub fn brute_card(f: &IntPoly, p: u64, n: u32) -> Result<u64> {
    let d = f.dimension as u32;
    let m = checked_pow(p, n + 1)?;
    let total = checked_pow(m, d)?;
    if total > ENUMERATION_GUARD {
        return Err(Error::Guard(format!(
            "enumeration of {total} residue vectors exceeds the {ENUMERATION_GUARD} guard"
        )));
    }
    let pn = checked_pow(p, n)?;
    let mut x = vec![0u64; f.dimension];
    let mut count = 0u64;
    loop {
        let v = f.eval_mod(&x, m);
        if v.is_multiple_of(pn) && v != 0 {
            count += 1;
        }
        // odometer over (Z/m)^d
        let mut i = 0;
        loop {
            if i == f.dimension {
                return Ok(count);
            }
            x[i] += 1;
            if x[i] < m {
                break;
            }
            x[i] = 0;
            i += 1;
        }
    }
}

fn checked_pow(base: u64, exp: u32) -> Result<u64> {
    base.checked_pow(exp)
        .ok_or_else(|| Error::Guard("modulus overflow".into()))
}

/// The series coefficients c_n = brute_card(f, p, n) * p^(-(n+1)d) for
/// n = 0..=n_max, as exact rationals.
pub fn igusa_series_brute(f: &IntPoly, p: u64, n_max: u32) -> Result<Vec<Rational>> {
    let mut out = Vec::with_capacity(n_max as usize + 1);
    for n in 0..=n_max {
        let card = brute_card(f, p, n)?;
        let denom = num_traits::pow::pow(
            BigInt::from(p),
            ((n + 1) as usize) * f.dimension,
        );
        let c = Rational::new(BigInt::from(card), denom)?;
        // measure bound: each coefficient is a probability mass
        assert!(
            c.cmp_value(&Rational::one()) != std::cmp::Ordering::Greater,
            "series coefficient exceeds 1"
        );
        out.push(c);
    }
    Ok(out)
}

/// Evaluate a class at L = p. Only classes in Z[L^(+/-1)] qualify.
fn class_at_prime(class: &crate::grothendieck::MotClass, p: u64) -> Result<Rational> {
    let root = class.root_order() as i64;
    let mut acc = Rational::zero();
    for (symbols, l_num, coeff) in class.term_views() {
        if !symbols.is_empty() {
            let name = match &symbols[0] {
                AtomicSymbol::Curve(g) => format!("C_{g}"),
                AtomicSymbol::Named(n) => n.clone(),
            };
            return Err(Error::Unsupported(format!(
                "class contains the opaque symbol `{name}`; the p-adic comparison needs classes in Z[L]"
            )));
        }
        if l_num % root != 0 {
            return Err(Error::Unsupported(
                "class has fractional powers of L".into(),
            ));
        }
        let e = l_num / root;
        let pw = if e >= 0 {
            Rational::from_bigint(num_traits::pow::pow(BigInt::from(p), e as usize))
        } else {
            Rational::new(
                BigInt::one(),
                num_traits::pow::pow(BigInt::from(p), (-e) as usize),
            )?
        };
        acc = &acc + &(&Rational::from_bigint(coeff.clone()) * &pw);
    }
    Ok(acc)
}

/// Build the local zeta function of the configuration at L = p as a
/// rational function in `t = p^(-s)` and expand it to `n_max` series
/// coefficients. Requires integer nu_i and N_i and classes in Z[L].
pub fn formula_series(cfg: &ResolutionConfig, p: u64, n_max: u32) -> Result<Vec<Rational>> {
    cfg.validated()?;
    for c in &cfg.components {
        if !c.nu_effective().is_integer() || !c.n.is_integer() {
            return Err(Error::Unsupported(format!(
                "component `{}` has non-integer data; the p-adic series needs integer nu and N",
                c.name
            )));
        }
    }
    let vars = VarSet::new(["t"]);
    let root = 1u32;
    let p_pow = |e: i64| -> Rational {
        if e >= 0 {
            Rational::from_bigint(num_traits::pow::pow(BigInt::from(p), e as usize))
        } else {
            Rational::new(BigInt::one(), num_traits::pow::pow(BigInt::from(p), (-e) as usize))
                .expect("positive power")
        }
    };
    // per component: numerator part (p-1) p^(-nu) t^N, denominator
    // 1 - p^(-nu) t^N
    let monomial_part = |name: &str| -> FracPoly {
        let c = cfg.component(name).expect("validated");
        let nu = c.nu_effective().to_i64().expect("integer checked");
        let n = c.n.to_i64().expect("integer checked");
        FracPoly::monomial(vars.clone(), root, p_pow(-nu), vec![n])
    };
    let one = FracPoly::one(vars.clone(), root);
    let pm1 = FracPoly::constant(vars.clone(), root, &p_pow(1) - &Rational::one());

    let mut used: Vec<String> = Vec::new();
    let mut terms: Vec<(Vec<String>, Rational)> = Vec::new();
    for s in &cfg.strata {
        let class = s.class_for("X");
        if class.is_zero() {
            continue;
        }
        let value = class_at_prime(&class, p)?;
        if value.is_zero() {
            continue;
        }
        let subset: Vec<String> = s.subset.iter().cloned().collect();
        for n in &subset {
            if !used.contains(n) {
                used.push(n.clone());
            }
        }
        terms.push((subset, value));
    }
    used.sort();

    let mut num = FracPoly::zero(vars.clone(), root);
    for (subset, value) in &terms {
        let mut t = FracPoly::constant(vars.clone(), root, value.clone());
        for name in &used {
            if subset.contains(name) {
                t = &t * &(&pm1 * &monomial_part(name));
            } else {
                t = &t * &(&one - &monomial_part(name));
            }
        }
        num = &num + &t;
    }
    num = num.scale(&p_pow(-(cfg.dim as i64)));
    let den: Vec<FracPoly> = used
        .iter()
        .map(|name| &one - &monomial_part(name))
        .collect();
    let f = RatFrac::new("t", num, den);
    let coeffs = f.series_coeffs(n_max as usize)?;
    coeffs
        .into_iter()
        .map(|c| {
            c.as_constant()
                .ok_or_else(|| Error::Domain("series coefficient is not constant".into()))
        })
        .collect()
}

/// Outcome of comparing the brute-force series with the formula series.
#[derive(Clone, Debug)]
pub struct CompareReport {
    pub p: u64,
    pub n_max: u32,
    pub brute: Vec<Rational>,
    pub formula: Vec<Rational>,
    pub first_mismatch: Option<u32>,
}

impl CompareReport {
    pub fn agrees(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

impl std::fmt::Display for CompareReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "p = {}, orders 0..={}", self.p, self.n_max)?;
        for (n, (b, fo)) in self.brute.iter().zip(&self.formula).enumerate() {
            let mark = if b == fo { "ok" } else { "MISMATCH" };
            writeln!(f, "  n = {n}: brute {b}  formula {fo}  {mark}")?;
        }
        match self.first_mismatch {
            None => write!(f, "series agree"),
            Some(n) => write!(f, "first mismatch at n = {n}"),
        }
    }
}

/// Element-wise exact comparison of the two series.
pub fn compare(f: &IntPoly, cfg: &ResolutionConfig, p: u64, n_max: u32) -> Result<CompareReport> {
    let brute = igusa_series_brute(f, p, n_max)?;
    let formula = formula_series(cfg, p, n_max)?;
    let first_mismatch = brute
        .iter()
        .zip(&formula)
        .position(|(a, b)| a != b)
        .map(|n| n as u32);
    Ok(CompareReport {
        p,
        n_max,
        brute,
        formula,
        first_mismatch,
    })
}
