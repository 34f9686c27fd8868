//! Input documents.
//!
//! A document is a JSON object with exactly one of the keys `resolution`,
//! `dualgraph` or `padic`. Rationals are decimal-free "p/q" strings,
//! classes are class-expression strings; both stay exact across the
//! boundary.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{FracPoly, Rational, VarSet};
use crate::grothendieck::{parse_class, SymbolRegistry};
use crate::padic::IntPoly;
use crate::resolution::{Component, ResolutionConfig, Stratum};
use crate::surface::DualGraph;

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InputDocument {
    Resolution(ResolutionDoc),
    Dualgraph(DualGraphDoc),
    Padic(PadicDoc),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ResolutionDoc {
    pub dim: u32,
    pub root_order: u32,
    pub components: Vec<ComponentDoc>,
    pub strata: Vec<StratumDoc>,
    #[serde(rename = "W", default, skip_serializing_if = "Vec::is_empty")]
    pub w: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub symbols: Vec<SymbolDoc>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ComponentDoc {
    pub name: String,
    pub nu: String,
    #[serde(rename = "N")]
    pub n: String,
    pub exceptional: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub offset: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StratumDoc {
    pub subset: Vec<String>,
    pub class: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub class_over: BTreeMap<String, String>,
}

/// Declaration of a named symbol by its Hodge polynomial, given as exact
/// terms `coeff * u^u_exp * v^v_exp`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SymbolDoc {
    pub name: String,
    pub hodge: Vec<HodgeTermDoc>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HodgeTermDoc {
    #[serde(default = "zero_string")]
    pub u_exp: String,
    #[serde(default = "zero_string")]
    pub v_exp: String,
    pub coeff: String,
}

fn zero_string() -> String {
    "0".to_string()
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DualGraphDoc {
    pub vertices: Vec<VertexDoc>,
    #[serde(default)]
    pub edges: Vec<(String, String)>,
    #[serde(default)]
    pub arrows: Vec<ArrowDoc>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VertexDoc {
    pub name: String,
    pub genus: u32,
    pub kappa: i64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ArrowDoc {
    pub vertex: String,
    pub mult: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PadicDoc {
    pub poly: Vec<PolyTermDoc>,
    pub p: u64,
    pub n_max: u32,
    pub resolution: ResolutionDoc,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PolyTermDoc {
    pub exps: Vec<u32>,
    pub coeff: i64,
}

impl InputDocument {
    pub fn parse(text: &str) -> Result<InputDocument> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            position: 0,
            message: format!("invalid document: {e}"),
        })
    }
}

impl ResolutionDoc {
    /// Build the validated-on-demand configuration plus the symbol
    /// registry declared by the document.
    pub fn build(&self) -> Result<(ResolutionConfig, SymbolRegistry)> {
        let mut registry = SymbolRegistry::new();
        let uv = VarSet::new(["u", "v"]);
        for sym in &self.symbols {
            let mut h = FracPoly::zero(uv.clone(), self.root_order.max(1));
            for t in &sym.hodge {
                let ue = Rational::parse(&t.u_exp)?;
                let ve = Rational::parse(&t.v_exp)?;
                let c = Rational::parse(&t.coeff)?;
                let r = Rational::from_int(self.root_order.max(1) as i64);
                let to_num = |e: &Rational| -> Result<i64> {
                    (e * &r).to_i64().ok_or_else(|| {
                        Error::Parse {
                            position: 0,
                            message: format!(
                                "exponent {e} not in (1/{})Z in symbol `{}`",
                                self.root_order, sym.name
                            ),
                        }
                    })
                };
                h = &h
                    + &FracPoly::monomial(
                        uv.clone(),
                        self.root_order.max(1),
                        c,
                        vec![to_num(&ue)?, to_num(&ve)?],
                    );
            }
            registry.register(&sym.name, h)?;
        }

        let mut cfg = ResolutionConfig::new(self.dim, self.root_order);
        for w in &self.w {
            cfg.w_names.insert(w.clone());
        }
        for c in &self.components {
            let mut comp = Component::new(
                &c.name,
                Rational::parse(&c.nu)?,
                Rational::parse(&c.n)?,
                c.exceptional,
            );
            if let Some(off) = &c.offset {
                comp.offset = Rational::parse(off)?;
            }
            cfg.components.push(comp);
        }
        for s in &self.strata {
            let class = parse_class(&s.class, self.root_order, &registry)?;
            let mut stratum = Stratum::new(s.subset.iter().cloned(), class);
            for (w, expr) in &s.class_over {
                stratum
                    .class_over
                    .insert(w.clone(), parse_class(expr, self.root_order, &registry)?);
            }
            cfg.strata.push(stratum);
        }
        Ok((cfg, registry))
    }
}

impl DualGraphDoc {
    pub fn build(&self) -> Result<DualGraph> {
        let mut g = DualGraph::new();
        for v in &self.vertices {
            g.add_vertex(&v.name, v.genus, v.kappa);
        }
        for (a, b) in &self.edges {
            g.add_edge(a, b);
        }
        for a in &self.arrows {
            g.add_arrow(&a.vertex, Rational::parse(&a.mult)?);
        }
        g.check()?;
        Ok(g)
    }
}

impl PadicDoc {
    pub fn build(&self) -> Result<(IntPoly, ResolutionConfig, SymbolRegistry)> {
        let dim = self
            .poly
            .first()
            .map(|t| t.exps.len())
            .ok_or_else(|| Error::Parse {
                position: 0,
                message: "padic document needs a nonempty poly".into(),
            })?;
        let poly = IntPoly::new(
            dim,
            self.poly.iter().map(|t| (t.exps.clone(), t.coeff)).collect(),
        )?;
        let (cfg, registry) = self.resolution.build()?;
        Ok((poly, cfg, registry))
    }
}
