//! Symbolic classes of varieties with Hodge and Euler specializations.
//!
//! Classes live in a free representation `Z[symbols][L^{±1/r}]`: finite
//! sums of integer multiples of a monomial in atomic symbols times a power
//! of `L` with exponent in `(1/r)Z`. Curve classes `C_g` are built in
//! (every surface-germ stratum class is Z-linear in 1, L, C_g); any other
//! variety enters as a registered named symbol carrying its Hodge
//! polynomial. Equality is representation equality after normalization;
//! the Hodge level is the arbiter for cross-checks.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{FracPoly, Rational, VarSet};

/// Atomic symbol: a smooth projective curve of genus `g`, or a registered
/// named class.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum AtomicSymbol {
    Curve(u32),
    Named(String),
}

impl AtomicSymbol {
    pub fn print_name(&self) -> String {
        match self {
            AtomicSymbol::Curve(g) => format!("C_{g}"),
            AtomicSymbol::Named(n) => n.clone(),
        }
    }
}

/// Registration data of a named symbol.
#[derive(Clone, Debug)]
pub struct RegisteredSymbol {
    pub hodge: FracPoly,
    pub euler: BigInt,
}

/// Append-only table of named symbols. Immutable after setup, hence safe
/// to share across threads.
#[derive(Clone, Debug, Default)]
pub struct SymbolRegistry {
    symbols: BTreeMap<String, RegisteredSymbol>,
}

const RESERVED_NAMES: &[&str] = &["L", "T", "u", "v", "s", "w"];

impl SymbolRegistry {
    pub fn new() -> Self {
        SymbolRegistry::default()
    }

    /// Register a named symbol by its Hodge polynomial in `u, v`.
    /// The Euler number is the value at `u = v = 1` and must be an integer.
    pub fn register(&mut self, name: &str, hodge: FracPoly) -> Result<()> {
        if RESERVED_NAMES.contains(&name) {
            return Err(Error::Domain(format!("symbol name `{name}` is reserved")));
        }
        if name.is_empty()
            || !name.chars().next().unwrap().is_ascii_alphabetic()
            || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
        {
            return Err(Error::Domain(format!(
                "symbol name `{name}` is not an identifier"
            )));
        }
        if self.symbols.contains_key(name) {
            return Err(Error::Domain(format!("symbol `{name}` already registered")));
        }
        let one_u = FracPoly::one(hodge.vars().clone(), hodge.root_order());
        let at_u1 = hodge.substitute_monomial("u", &one_u)?;
        let at_11 = at_u1.substitute_monomial("v", &one_u)?;
        let euler_rat = at_11
            .as_constant()
            .ok_or_else(|| Error::Domain("Hodge polynomial must specialize to a constant".into()))?;
        let euler = euler_rat.to_integer().ok_or_else(|| {
            Error::Domain(format!("H({name}; 1, 1) = {euler_rat} is not an integer"))
        })?;
        self.symbols
            .insert(name.to_string(), RegisteredSymbol { hodge, euler });
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<&RegisteredSymbol> {
        self.symbols.get(name)
    }

    pub fn names(&self) -> impl Iterator<Item = &String> {
        self.symbols.keys()
    }
}

/// Key of a class term: sorted multiset of symbols plus the L-exponent
/// numerator over the root order. Ordered with descending L-powers so
/// printing reads like a polynomial.
#[derive(Clone, PartialEq, Eq, Debug)]
struct TermKey {
    symbols: Vec<AtomicSymbol>,
    l_num: i64,
}

impl Ord for TermKey {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        // symbol-heavy terms first, then descending L-powers
        other
            .symbols
            .cmp(&self.symbols)
            .then(other.l_num.cmp(&self.l_num))
    }
}

impl PartialOrd for TermKey {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Element of the Grothendieck-ring representation `Z[symbols][L^{±1/r}]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MotClass {
    root: u32,
    terms: BTreeMap<TermKey, BigInt>,
}

impl MotClass {
    pub fn zero(root: u32) -> Self {
        assert!(root > 0);
        MotClass {
            root,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_int(root: u32, n: i64) -> Self {
        let mut c = MotClass::zero(root);
        c.insert(Vec::new(), 0, BigInt::from(n));
        c
    }

    pub fn one(root: u32) -> Self {
        MotClass::from_int(root, 1)
    }

    /// L to the power `numer/root`.
    pub fn l_pow(root: u32, numer: i64) -> Self {
        let mut c = MotClass::zero(root);
        c.insert(Vec::new(), numer, BigInt::from(1));
        c
    }

    pub fn lclass(root: u32) -> Self {
        MotClass::l_pow(root, root as i64)
    }

    /// Class of a smooth projective curve of genus g. The genus-0 curve
    /// is the projective line, whose class normalizes to `L + 1`; higher
    /// genera stay symbolic.
    pub fn curve(root: u32, genus: u32) -> Self {
        if genus == 0 {
            return MotClass::lclass(root).add(&MotClass::one(root));
        }
        let mut c = MotClass::zero(root);
        c.insert(vec![AtomicSymbol::Curve(genus)], 0, BigInt::from(1));
        c
    }

    pub fn named(root: u32, name: &str) -> Self {
        let mut c = MotClass::zero(root);
        c.insert(
            vec![AtomicSymbol::Named(name.to_string())],
            0,
            BigInt::from(1),
        );
        c
    }

    pub fn root_order(&self) -> u32 {
        self.root
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Iterate over `(symbols, L-exponent numerator, coefficient)`.
    pub fn term_views(&self) -> impl Iterator<Item = (&[AtomicSymbol], i64, &BigInt)> {
        self.terms.iter().map(|(k, c)| (k.symbols.as_slice(), k.l_num, c))
    }

    fn insert(&mut self, mut symbols: Vec<AtomicSymbol>, l_num: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        symbols.sort();
        let key = TermKey { symbols, l_num };
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + coeff;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    fn assert_root(&self, other: &MotClass) {
        assert_eq!(
            self.root, other.root,
            "class root order mismatch: {} vs {}",
            self.root, other.root
        );
    }

    pub fn add(&self, other: &MotClass) -> MotClass {
        self.assert_root(other);
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.insert(k.symbols.clone(), k.l_num, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MotClass) -> MotClass {
        self.assert_root(other);
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.insert(k.symbols.clone(), k.l_num, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> MotClass {
        MotClass::zero(self.root).sub(self)
    }

    pub fn mul(&self, other: &MotClass) -> MotClass {
        self.assert_root(other);
        let mut out = MotClass::zero(self.root);
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let mut symbols = ka.symbols.clone();
                symbols.extend(kb.symbols.iter().cloned());
                out.insert(symbols, ka.l_num + kb.l_num, ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, n: &BigInt) -> MotClass {
        let mut out = MotClass::zero(self.root);
        for (k, c) in &self.terms {
            out.insert(k.symbols.clone(), k.l_num, c * n);
        }
        out
    }

    /// Reinterpret with a larger root order (the old one must divide it).
    pub fn with_root_order(&self, new_root: u32) -> MotClass {
        assert!(new_root.is_multiple_of(self.root));
        let f = (new_root / self.root) as i64;
        let mut out = MotClass::zero(new_root);
        for (k, c) in &self.terms {
            out.insert(k.symbols.clone(), k.l_num * f, c.clone());
        }
        out
    }

    /// All distinct symbols occurring in the class.
    pub fn symbols(&self) -> Vec<AtomicSymbol> {
        let mut set = std::collections::BTreeSet::new();
        for k in self.terms.keys() {
            for s in &k.symbols {
                set.insert(s.clone());
            }
        }
        set.into_iter().collect()
    }

    /// Hodge specialization: `L -> uv` (fractional powers included),
    /// `C_g -> uv - g u - g v + 1`, named symbols to their registered
    /// polynomials. The result lives in `u, v` with the class root order.
    pub fn hodge_specialize(&self, registry: &SymbolRegistry) -> Result<FracPoly> {
        let vars = VarSet::new(["u", "v"]);
        let r = self.root;
        let mut out = FracPoly::zero(vars.clone(), r);
        for (k, c) in &self.terms {
            let mut term = FracPoly::monomial(
                vars.clone(),
                r,
                Rational::from_bigint(c.clone()),
                vec![k.l_num, k.l_num],
            );
            for s in &k.symbols {
                let h = match s {
                    AtomicSymbol::Curve(g) => curve_hodge(&vars, r, *g),
                    AtomicSymbol::Named(n) => {
                        let reg = registry
                            .get(n)
                            .ok_or_else(|| Error::Domain(format!("unregistered symbol `{n}`")))?;
                        promote_uv(&reg.hodge, &vars, r)?
                    }
                };
                term = &term * &h;
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// Euler specialization: `L -> 1`, `C_g -> 2 - 2g`, named symbols to
    /// their registered Euler numbers.
    pub fn euler_specialize(&self, registry: &SymbolRegistry) -> Result<BigInt> {
        let mut out = BigInt::zero();
        for (k, c) in &self.terms {
            let mut term = c.clone();
            for s in &k.symbols {
                let chi = match s {
                    AtomicSymbol::Curve(g) => BigInt::from(2) - BigInt::from(2 * *g),
                    AtomicSymbol::Named(n) => {
                        let reg = registry
                            .get(n)
                            .ok_or_else(|| Error::Domain(format!("unregistered symbol `{n}`")))?;
                        reg.euler.clone()
                    }
                };
                term *= chi;
            }
            out += term;
        }
        Ok(out)
    }

    /// Encode as a polynomial over the variable set `vars` (which must
    /// contain `L` and one variable per symbol), with root order `root`.
    pub fn encode(&self, vars: &VarSet, root: u32) -> FracPoly {
        assert!(root.is_multiple_of(self.root));
        let f = (root / self.root) as i64;
        let l_idx = vars.index_of("L").expect("encoding needs an L variable");
        let mut out = FracPoly::zero(vars.clone(), root);
        for (k, c) in &self.terms {
            let mut exps = vec![0; vars.len()];
            exps[l_idx] = k.l_num * f;
            for s in &k.symbols {
                let name = s.print_name();
                let idx = vars
                    .index_of(&name)
                    .unwrap_or_else(|| panic!("symbol variable `{name}` missing"));
                exps[idx] += root as i64;
            }
            out = &out
                + &FracPoly::monomial(vars.clone(), root, Rational::from_bigint(c.clone()), exps);
        }
        out
    }
}

/// H(curve of genus g) = uv - g u - g v + 1 (compact-support Hodge
/// polynomial of a smooth projective curve).
fn curve_hodge(vars: &VarSet, root: u32, genus: u32) -> FracPoly {
    let r = root as i64;
    let g = Rational::from_int(genus as i64);
    let m = |c: Rational, eu: i64, ev: i64| FracPoly::monomial(vars.clone(), root, c, vec![eu, ev]);
    let mut p = m(Rational::one(), r, r);
    p = &p + &m(-&g, r, 0);
    p = &p + &m(-&g, 0, r);
    &p + &m(Rational::one(), 0, 0)
}

/// Bring a registered Hodge polynomial onto the target (u, v) context.
fn promote_uv(h: &FracPoly, vars: &VarSet, root: u32) -> Result<FracPoly> {
    let aligned = if h.vars() == vars {
        h.clone()
    } else {
        h.promote_vars(vars)
    };
    if !root.is_multiple_of(aligned.root_order()) {
        return Err(Error::Domain(format!(
            "symbol root order {} does not divide class root order {root}",
            aligned.root_order()
        )));
    }
    Ok(aligned.with_root_order(root))
}

/// Euler characteristic of a smooth degree-`a` hypersurface in projective
/// `d`-space: `(1-a)((1-a)^d - 1)/a + d`; the division is exact.
pub fn hypersurface_euler(d: u32, a: u32) -> BigInt {
    assert!(d >= 2 && a >= 1);
    let one_minus_a = BigInt::from(1) - BigInt::from(a);
    let pow = num_traits::pow::pow(one_minus_a.clone(), d as usize);
    let numer = &one_minus_a * (&pow - BigInt::from(1));
    let (q, rem) = num_integer::Integer::div_rem(&numer, &BigInt::from(a));
    assert!(rem.is_zero(), "hypersurface Euler division must be exact");
    q + BigInt::from(d)
}

impl fmt::Display for MotClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in &self.terms {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = k.symbols.iter().map(|s| s.print_name()).collect();
            if k.l_num != 0 {
                let e = &Rational::from_int(k.l_num) / &Rational::from_int(self.root as i64);
                if e.is_one() {
                    factors.push("L".to_string());
                } else if e.is_integer() && e.is_positive() {
                    factors.push(format!("L^{e}"));
                } else {
                    factors.push(format!("L^({e})"));
                }
            }
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", mag, factors.join("*"))?;
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Class-expression parser
// ---------------------------------------------------------------------------

/// Parse a class expression.
///
/// Grammar: integers, `L`, `L^n`, `L^(p/q)` with `q | r`, `C_g`, registered
/// identifiers, `+ - *` and parentheses. Whitespace-insensitive; errors
/// carry the byte position.
pub fn parse_class(text: &str, root: u32, registry: &SymbolRegistry) -> Result<MotClass> {
    let mut p = ClassParser {
        bytes: text.as_bytes(),
        pos: 0,
        root,
        registry,
    };
    let c = p.parse_expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(c)
}

struct ClassParser<'a> {
    bytes: &'a [u8],
    pos: usize,
    root: u32,
    registry: &'a SymbolRegistry,
}

impl<'a> ClassParser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            position: self.pos,
            message: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(self.err(&format!("expected `{}`", b as char)))
        }
    }

    fn parse_expr(&mut self) -> Result<MotClass> {
        let mut acc = if self.eat(b'-') {
            self.parse_term()?.neg()
        } else {
            self.parse_term()?
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&self.parse_term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.parse_term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn parse_term(&mut self) -> Result<MotClass> {
        let mut acc = self.parse_factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = acc.mul(&self.parse_factor()?);
        }
        Ok(acc)
    }

    fn parse_factor(&mut self) -> Result<MotClass> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.parse_expr()?;
                self.expect(b')')?;
                Ok(inner)
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(self.parse_factor()?.neg())
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.parse_integer()?;
                Ok(MotClass::one(self.root).scale(&n))
            }
            Some(c) if c.is_ascii_alphabetic() => self.parse_symbol(),
            Some(c) => Err(self.err(&format!("unexpected character `{}`", c as char))),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn parse_integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        let s = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        s.parse::<BigInt>().map_err(|_| self.err("invalid integer"))
    }

    fn parse_signed_integer(&mut self) -> Result<BigInt> {
        let neg = self.eat(b'-');
        let n = self.parse_integer()?;
        Ok(if neg { -n } else { n })
    }

    fn parse_identifier(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len()
            && (self.bytes[self.pos].is_ascii_alphanumeric() || self.bytes[self.pos] == b'_')
        {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an identifier"));
        }
        Ok(std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .to_string())
    }

    fn parse_symbol(&mut self) -> Result<MotClass> {
        let id_pos = self.pos;
        let id = self.parse_identifier()?;
        if id == "L" {
            if self.peek() == Some(b'^') {
                self.pos += 1;
                let numer = self.parse_l_exponent()?;
                return Ok(MotClass::l_pow(self.root, numer));
            }
            return Ok(MotClass::lclass(self.root));
        }
        if let Some(g) = id.strip_prefix("C_") {
            let genus: u32 = g.parse().map_err(|_| Error::Parse {
                position: id_pos,
                message: format!("invalid curve genus in `{id}`"),
            })?;
            return Ok(MotClass::curve(self.root, genus));
        }
        if self.registry.get(&id).is_some() {
            return Ok(MotClass::named(self.root, &id));
        }
        Err(Error::Parse {
            position: id_pos,
            message: format!("unknown identifier `{id}`"),
        })
    }

    /// Exponent after `L^`: either a (signed) integer or `(p/q)` with
    /// `q | r`. Returns the numerator over the root order.
    fn parse_l_exponent(&mut self) -> Result<i64> {
        let r = self.root as i64;
        if self.eat(b'(') {
            let p = self.parse_signed_integer()?;
            let p = bigint_to_i64(&p).ok_or_else(|| self.err("exponent too large"))?;
            if self.eat(b'/') {
                let q_pos = self.pos;
                let q = self.parse_signed_integer()?;
                let q = bigint_to_i64(&q).filter(|q| *q > 0).ok_or(Error::Parse {
                    position: q_pos,
                    message: "exponent denominator must be a positive integer".into(),
                })?;
                if r % q != 0 {
                    return Err(Error::Parse {
                        position: q_pos,
                        message: format!(
                            "exponent denominator {q} does not divide root order {r}"
                        ),
                    });
                }
                self.expect(b')')?;
                Ok(p * (r / q))
            } else {
                self.expect(b')')?;
                Ok(p * r)
            }
        } else {
            let p = self.parse_signed_integer()?;
            let p = bigint_to_i64(&p).ok_or_else(|| self.err("exponent too large"))?;
            Ok(p * r)
        }
    }
}

fn bigint_to_i64(n: &BigInt) -> Option<i64> {
    use num_traits::ToPrimitive;
    n.to_i64()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reg() -> SymbolRegistry {
        SymbolRegistry::new()
    }

    #[test]
    fn parse_expansion() {
        // (L-1)*C_2 + L^2 -> {(1, {C_2}, 1), (-1, {C_2}, 0), (1, {}, 2)}
        let c = parse_class("(L-1)*C_2 + L^2", 1, &reg()).unwrap();
        let expected = MotClass::curve(1, 2)
            .mul(&MotClass::lclass(1).sub(&MotClass::one(1)))
            .add(&MotClass::l_pow(1, 2));
        assert_eq!(c, expected);
        assert_eq!(c.num_terms(), 3);
    }

    #[test]
    fn parse_fractional_l_power() {
        let c = parse_class("L^(1/2)", 2, &reg()).unwrap();
        assert_eq!(c, MotClass::l_pow(2, 1));
        // q must divide r
        assert!(parse_class("L^(1/3)", 2, &reg()).is_err());
    }

    #[test]
    fn parse_constant() {
        let c = parse_class("3", 1, &reg()).unwrap();
        assert_eq!(c, MotClass::from_int(1, 3));
    }

    #[test]
    fn parse_errors_carry_position() {
        match parse_class("L + Q", 1, &reg()) {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 4),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse_class("L + ", 1, &reg()).is_err());
        assert!(parse_class("(L", 1, &reg()).is_err());
    }

    #[test]
    fn print_parse_roundtrip() {
        let cases = [
            "(L-1)*C_2 + L^2",
            "L^(1/2) - 3",
            "2*C_0*L - C_1",
            "L^(-1)",
            "C_3*C_3 + 7",
        ];
        for text in cases {
            let c = parse_class(text, 2, &reg()).unwrap();
            let printed = c.to_string();
            let reparsed = parse_class(&printed, 2, &reg()).unwrap();
            assert_eq!(c, reparsed, "roundtrip failed for `{text}` -> `{printed}`");
        }
    }

    #[test]
    fn hodge_of_affine_line_plus_point() {
        // L + 1 -> uv + 1
        let c = parse_class("L + 1", 1, &reg()).unwrap();
        let h = c.hodge_specialize(&reg()).unwrap();
        assert_eq!(h.to_string(), "u*v + 1");
    }

    #[test]
    fn hodge_of_genus_two_curve() {
        // Ranks of compact-support cohomology of a genus-2 curve:
        // h^0 = 1 of type (0,0), h^1 has g of type (1,0) and g of (0,1),
        // h^2 = 1 of type (1,1); the signed sum is uv - 2u - 2v + 1.
        let c = MotClass::curve(1, 2);
        let h = c.hodge_specialize(&reg()).unwrap();
        assert_eq!(h.to_string(), "u*v - 2*u - 2*v + 1");
    }

    #[test]
    fn hodge_is_homomorphic_on_half_powers() {
        // (L-1)*L^(1/2) with r=2 -> u^(3/2)v^(3/2) - u^(1/2)v^(1/2)
        let c = parse_class("(L - 1)*L^(1/2)", 2, &reg()).unwrap();
        let h = c.hodge_specialize(&reg()).unwrap();
        assert_eq!(h.to_string(), "u^(3/2)*v^(3/2) - u^(1/2)*v^(1/2)");
    }

    #[test]
    fn euler_values() {
        let r = reg();
        assert_eq!(
            parse_class("L + 1", 1, &r)
                .unwrap()
                .euler_specialize(&r)
                .unwrap(),
            BigInt::from(2)
        );
        assert_eq!(
            MotClass::curve(1, 2).euler_specialize(&r).unwrap(),
            BigInt::from(-2)
        );
        assert_eq!(
            parse_class("(L-1)*C_1", 1, &r)
                .unwrap()
                .euler_specialize(&r)
                .unwrap(),
            BigInt::from(0)
        );
    }

    #[test]
    fn euler_is_hodge_at_one_one() {
        let r = reg();
        let cases = ["(L-1)*C_2 + L^2", "3", "C_0*C_2 - 5*L", "L^(1/2) + C_1"];
        for text in cases {
            let c = parse_class(text, 2, &r).unwrap();
            let h = c.hodge_specialize(&r).unwrap();
            let one = FracPoly::one(h.vars().clone(), h.root_order());
            let at_11 = h
                .substitute_monomial("u", &one)
                .unwrap()
                .substitute_monomial("v", &one)
                .unwrap();
            assert_eq!(
                at_11.as_constant().unwrap(),
                Rational::from_bigint(c.euler_specialize(&r).unwrap())
            );
        }
    }

    #[test]
    fn specializations_are_ring_homomorphisms() {
        use crate::rng::SplitMix64;
        let r = reg();
        let mut rng = SplitMix64::new(99);
        let rand_class = |rng: &mut SplitMix64| {
            let mut c = MotClass::zero(2);
            for _ in 0..(1 + rng.below(3)) {
                let coeff = BigInt::from(rng.range(-3, 3));
                let l = rng.range(-2, 4);
                let pick = rng.below(3);
                let base = match pick {
                    0 => MotClass::one(2),
                    1 => MotClass::curve(2, rng.below(3) as u32),
                    _ => MotClass::l_pow(2, 2),
                };
                c = c.add(&base.mul(&MotClass::l_pow(2, l)).scale(&coeff));
            }
            c
        };
        for _ in 0..25 {
            let a = rand_class(&mut rng);
            let b = rand_class(&mut rng);
            let hs = |c: &MotClass| c.hodge_specialize(&r).unwrap();
            assert_eq!(hs(&a.mul(&b)), &hs(&a) * &hs(&b));
            assert_eq!(hs(&a.add(&b)), &hs(&a) + &hs(&b));
            let es = |c: &MotClass| c.euler_specialize(&r).unwrap();
            assert_eq!(es(&a.mul(&b)), es(&a) * es(&b));
            assert_eq!(es(&a.add(&b)), es(&a) + es(&b));
        }
    }

    #[test]
    fn named_symbols_register_and_specialize() {
        let mut r = reg();
        let uv = VarSet::new(["u", "v"]);
        // the class of a smooth quadric surface: H = (uv)^2 + 2uv + 1
        let m =
            |c: i64, e: i64| FracPoly::monomial(uv.clone(), 1, Rational::from_int(c), vec![e, e]);
        let h = &(&m(1, 2) + &m(2, 1)) + &m(1, 0);
        r.register("Quad", h).unwrap();
        assert_eq!(r.get("Quad").unwrap().euler, BigInt::from(4));
        let c = parse_class("Quad - L^2", 1, &r).unwrap();
        assert_eq!(c.euler_specialize(&r).unwrap(), BigInt::from(3));
        // reserved and duplicate names rejected
        let h2 = FracPoly::one(uv.clone(), 1);
        assert!(r.register("L", h2.clone()).is_err());
        assert!(r.register("Quad", h2).is_err());
    }

    #[test]
    fn hypersurface_euler_values() {
        // degree 2 in P^3 is P^1 x P^1
        assert_eq!(hypersurface_euler(3, 2), BigInt::from(4));
        // (-2)((-2)^3 - 1)/3 + 3 = 9
        assert_eq!(hypersurface_euler(3, 3), BigInt::from(9));
        // a hyperplane in P^d is P^(d-1)
        for d in 2..8 {
            assert_eq!(hypersurface_euler(d, 1), BigInt::from(d));
        }
    }
}
