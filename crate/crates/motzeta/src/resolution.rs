//! Log-resolution input data: components with multiplicities and log
//! discrepancies, strata with classes, and named subvarieties W.
//!
//! The validation rule admits a component exactly when `nu > 0` or `N > 0`
//! (so every denominator `nu + s N` is nonzero); this is the per-component
//! criterion for supp D to contain the locus of log canonical
//! singularities.

use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::grothendieck::MotClass;

/// One irreducible component of the resolution divisor.
///
/// `nu` is the log discrepancy datum (K_Y = h*K_X + sum (nu_i - 1) E_i),
/// `n` the multiplicity in the pulled-back divisor, `offset` an optional
/// twist M_i replacing `nu_i` by `nu_i + M_i` throughout.
#[derive(Clone, Debug, PartialEq)]
pub struct Component {
    pub name: String,
    pub nu: Rational,
    pub n: Rational,
    pub exceptional: bool,
    pub offset: Rational,
}

impl Component {
    pub fn new(name: &str, nu: Rational, n: Rational, exceptional: bool) -> Self {
        Component {
            name: name.to_string(),
            nu,
            n,
            exceptional,
            offset: Rational::zero(),
        }
    }

    /// Effective log-discrepancy datum including the form twist.
    pub fn nu_effective(&self) -> Rational {
        &self.nu + &self.offset
    }
}

/// A locally closed stratum: the points lying on exactly the components
/// named in `subset`. `class_total` is its class over W = X; `class_over`
/// holds classes of the parts over the other named subvarieties (missing
/// entries mean the zero class).
#[derive(Clone, Debug, PartialEq)]
pub struct Stratum {
    pub subset: BTreeSet<String>,
    pub class_total: MotClass,
    pub class_over: BTreeMap<String, MotClass>,
}

impl Stratum {
    pub fn new(subset: impl IntoIterator<Item = String>, class_total: MotClass) -> Self {
        Stratum {
            subset: subset.into_iter().collect(),
            class_total,
            class_over: BTreeMap::new(),
        }
    }

    pub fn with_class_over(mut self, w: &str, class: MotClass) -> Self {
        self.class_over.insert(w.to_string(), class);
        self
    }

    /// The class over a named subvariety; "X" maps to the total class and
    /// missing entries to zero.
    pub fn class_for(&self, w: &str) -> MotClass {
        if w == "X" {
            return self.class_total.clone();
        }
        self.class_over
            .get(w)
            .cloned()
            .unwrap_or_else(|| MotClass::zero(self.class_total.root_order()))
    }
}

/// A validated-on-demand log-resolution configuration.
#[derive(Clone, Debug)]
pub struct ResolutionConfig {
    pub dim: u32,
    pub root_order: u32,
    pub components: Vec<Component>,
    pub strata: Vec<Stratum>,
    pub w_names: BTreeSet<String>,
}

impl ResolutionConfig {
    pub fn new(dim: u32, root_order: u32) -> Self {
        let mut w_names = BTreeSet::new();
        w_names.insert("X".to_string());
        ResolutionConfig {
            dim,
            root_order,
            components: Vec::new(),
            strata: Vec::new(),
            w_names,
        }
    }

    pub fn component(&self, name: &str) -> Option<&Component> {
        self.components.iter().find(|c| c.name == name)
    }

    /// Check every invariant; returns the list of violations (empty = ok).
    /// Never panics on bad input.
    pub fn validate(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.dim == 0 {
            out.push("dimension must be positive".to_string());
        }
        if self.root_order == 0 {
            out.push("root order must be positive".to_string());
        }
        let r = Rational::from_int(self.root_order.max(1) as i64);
        let mut names = BTreeSet::new();
        for c in &self.components {
            if !names.insert(c.name.clone()) {
                out.push(format!("duplicate component name `{}`", c.name));
            }
            if c.n.is_negative() {
                out.push(format!("component `{}` has N = {} < 0", c.name, c.n));
            }
            // supp D must contain the log canonical locus: nu > 0 or N > 0
            // for the twisted nu.
            let nu_eff = c.nu_effective();
            if !nu_eff.is_positive() && !c.n.is_positive() {
                out.push(format!(
                    "component `{}` violates the log-canonical-locus rule: nu = {} <= 0 and N = {} = 0",
                    c.name, nu_eff, c.n
                ));
            }
            for (label, v) in [("nu", &c.nu), ("N", &c.n), ("offset", &c.offset)] {
                if !(&r * v).is_integer() {
                    out.push(format!(
                        "component `{}`: r * {label} = {} * {} is not an integer",
                        c.name, self.root_order, v
                    ));
                }
            }
        }
        if !self.w_names.contains("X") {
            out.push("W names must contain `X`".to_string());
        }
        let mut seen_subsets = BTreeSet::new();
        for (i, s) in self.strata.iter().enumerate() {
            for n in &s.subset {
                if !names.contains(n) {
                    out.push(format!(
                        "stratum #{i} references unknown component `{n}`"
                    ));
                }
            }
            if !seen_subsets.insert(s.subset.clone()) {
                out.push(format!(
                    "duplicate stratum subset {{{}}}",
                    s.subset.iter().cloned().collect::<Vec<_>>().join(", ")
                ));
            }
            if s.class_total.root_order() != self.root_order {
                out.push(format!(
                    "stratum #{i} class has root order {} instead of {}",
                    s.class_total.root_order(),
                    self.root_order
                ));
            }
            for (w, c) in &s.class_over {
                if !self.w_names.contains(w) {
                    out.push(format!("stratum #{i} has a class over unknown W `{w}`"));
                }
                if c.root_order() != self.root_order {
                    out.push(format!(
                        "stratum #{i} class over `{w}` has root order {} instead of {}",
                        c.root_order(),
                        self.root_order
                    ));
                }
            }
        }
        out
    }

    pub fn validated(&self) -> Result<&Self> {
        let v = self.validate();
        if v.is_empty() {
            Ok(self)
        } else {
            Err(Error::Validation(v))
        }
    }

    /// Log discrepancies of the pair: a_i = nu_i - N_i per component.
    pub fn log_discrepancies(&self) -> BTreeMap<String, Rational> {
        self.components
            .iter()
            .map(|c| (c.name.clone(), &c.nu - &c.n))
            .collect()
    }

    /// Multiply all divisor multiplicities N_i by `factor` (the Q-divisor
    /// scaling D -> factor * D); nu_i are unchanged. The root order grows
    /// minimally so all scaled data stay in (1/r)Z.
    pub fn scale_divisor(&self, factor: &Rational) -> Result<ResolutionConfig> {
        if !factor.is_positive() {
            return Err(Error::Domain(format!(
                "divisor scale factor must be positive, got {factor}"
            )));
        }
        let mut new_root = self.root_order as i64;
        let mut need = |v: &Rational| {
            let d = v.denom().clone();
            if let Some(d) = num_traits::ToPrimitive::to_i64(&d) {
                new_root = new_root.lcm(&d);
            }
        };
        for c in &self.components {
            need(&(&c.n * factor));
            need(&c.nu);
            need(&c.offset);
        }
        let new_root = u32::try_from(new_root)
            .map_err(|_| Error::Domain("scaled root order overflows".into()))?;
        let mut out = ResolutionConfig::new(self.dim, new_root);
        out.w_names = self.w_names.clone();
        out.components = self
            .components
            .iter()
            .map(|c| Component {
                name: c.name.clone(),
                nu: c.nu.clone(),
                n: &c.n * factor,
                exceptional: c.exceptional,
                offset: c.offset.clone(),
            })
            .collect();
        out.strata = self
            .strata
            .iter()
            .map(|s| Stratum {
                subset: s.subset.clone(),
                class_total: s.class_total.with_root_order(new_root),
                class_over: s
                    .class_over
                    .iter()
                    .map(|(w, c)| (w.clone(), c.with_root_order(new_root)))
                    .collect(),
            })
            .collect();
        Ok(out)
    }

    /// A copy with per-component offsets added (form twist).
    pub fn with_offsets(&self, offsets: &BTreeMap<String, Rational>) -> Result<ResolutionConfig> {
        let r = Rational::from_int(self.root_order as i64);
        for (name, m) in offsets {
            if self.component(name).is_none() {
                return Err(Error::Domain(format!(
                    "offset given for unknown component `{name}`"
                )));
            }
            if !(&r * m).is_integer() {
                return Err(Error::Domain(format!(
                    "offset {m} for `{name}` is not in (1/{})Z",
                    self.root_order
                )));
            }
        }
        let mut out = self.clone();
        for c in &mut out.components {
            if let Some(m) = offsets.get(&c.name) {
                c.offset = &c.offset + m;
            }
        }
        Ok(out)
    }
}
