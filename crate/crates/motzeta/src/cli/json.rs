//! JSON mirrors of the result types.
//!
//! Every numeric field is an exact string ("p/q"); exponents serialize as
//! the actual rational exponent, so a document re-parsed from this output
//! reconstructs the identical result.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exact::{FracPoly, FracValue, RatFrac, Rational, ValueOrInfinity, VarSet};
use crate::grothendieck::MotClass;
use crate::stringy::InvariantReport;
use crate::zeta::{ClassView, FactorDesc, Level, PoleCandidate, StratumTerm, ZetaResult};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub root_order: u32,
    pub terms: Vec<PolyTermJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PolyTermJson {
    pub exps: Vec<String>,
    pub coeff: String,
}

impl PolyJson {
    pub fn from_poly(p: &FracPoly) -> Self {
        let root = Rational::from_int(p.root_order() as i64);
        PolyJson {
            vars: p.vars().names().to_vec(),
            root_order: p.root_order(),
            terms: p
                .terms()
                .map(|(m, c)| PolyTermJson {
                    exps: m
                        .0
                        .iter()
                        .map(|e| (&Rational::from_int(*e) / &root).to_string())
                        .collect(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
    }

    pub fn to_poly(&self) -> Result<FracPoly> {
        let vars = VarSet::new(self.vars.clone());
        let r = Rational::from_int(self.root_order as i64);
        let mut p = FracPoly::zero(vars.clone(), self.root_order);
        for t in &self.terms {
            let mut exps = Vec::with_capacity(t.exps.len());
            for e in &t.exps {
                let er = Rational::parse(e)?;
                let numer = (&er * &r).to_i64().ok_or_else(|| Error::Parse {
                    position: 0,
                    message: format!("exponent {e} not in (1/{})Z", self.root_order),
                })?;
                exps.push(numer);
            }
            let coeff = Rational::parse(&t.coeff)?;
            p = &p + &FracPoly::monomial(vars.clone(), self.root_order, coeff, exps);
        }
        Ok(p)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RatFracJson {
    pub main_var: String,
    pub num: PolyJson,
    pub den: Vec<PolyJson>,
}

impl RatFracJson {
    pub fn from_ratfrac(f: &RatFrac) -> Self {
        RatFracJson {
            main_var: f.main_var().to_string(),
            num: PolyJson::from_poly(f.num()),
            den: f.den_factors().iter().map(PolyJson::from_poly).collect(),
        }
    }

    pub fn to_ratfrac(&self) -> Result<RatFrac> {
        let num = self.num.to_poly()?;
        let den = self
            .den
            .iter()
            .map(|d| d.to_poly())
            .collect::<Result<Vec<_>>>()?;
        Ok(RatFrac::new(&self.main_var, num, den))
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ClassJson {
    pub root_order: u32,
    pub terms: Vec<ClassTermJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ClassTermJson {
    pub coeff: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub symbols: Vec<String>,
    #[serde(rename = "L_exp")]
    pub l_exp: String,
}

impl ClassJson {
    pub fn from_class(c: &MotClass) -> Self {
        let root = Rational::from_int(c.root_order() as i64);
        ClassJson {
            root_order: c.root_order(),
            terms: c
                .term_views()
                .map(|(symbols, l_num, coeff)| ClassTermJson {
                    coeff: coeff.to_string(),
                    symbols: symbols.iter().map(|s| s.print_name()).collect(),
                    l_exp: (&Rational::from_int(l_num) / &root).to_string(),
                })
                .collect(),
        }
    }

    pub fn to_class(&self) -> Result<MotClass> {
        let r = Rational::from_int(self.root_order as i64);
        let mut c = MotClass::zero(self.root_order);
        for t in &self.terms {
            let coeff = BigInt::from_str(&t.coeff).map_err(|_| Error::Parse {
                position: 0,
                message: format!("invalid class coefficient `{}`", t.coeff),
            })?;
            let l_exp = Rational::parse(&t.l_exp)?;
            let l_num = (&l_exp * &r).to_i64().ok_or_else(|| Error::Parse {
                position: 0,
                message: format!("L exponent {} not in (1/{})Z", t.l_exp, self.root_order),
            })?;
            // route curve symbols through the normalizing constructor so
            // that a literal C_0 folds to L + 1
            let mut term = MotClass::l_pow(self.root_order, l_num).scale(&coeff);
            for s in &t.symbols {
                let sym = if let Some(g) = s.strip_prefix("C_") {
                    MotClass::curve(
                        self.root_order,
                        g.parse().map_err(|_| Error::Parse {
                            position: 0,
                            message: format!("invalid curve symbol `{s}`"),
                        })?,
                    )
                } else {
                    MotClass::named(self.root_order, s)
                };
                term = term.mul(&sym);
            }
            c = c.add(&term);
        }
        Ok(c)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassViewJson {
    Motivic(ClassJson),
    Hodge(PolyJson),
    Euler(String),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FactorJson {
    pub component: String,
    pub nu: String,
    #[serde(rename = "N")]
    pub n: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StratumTermJson {
    pub subset: Vec<String>,
    pub class: ClassViewJson,
    pub factors: Vec<FactorJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PoleJson {
    pub component: String,
    pub value: String,
    pub surviving: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ZetaJson {
    pub level: String,
    #[serde(rename = "W")]
    pub w: String,
    pub dim: u32,
    pub root_order: u32,
    pub strata_sum: Vec<StratumTermJson>,
    pub reduced: RatFracJson,
    pub pole_candidates: Vec<PoleJson>,
}

impl ZetaJson {
    pub fn from_result(z: &ZetaResult) -> Self {
        ZetaJson {
            level: z.level.to_string(),
            w: z.w.clone(),
            dim: z.dim,
            root_order: z.root_order,
            strata_sum: z
                .strata_sum
                .iter()
                .map(|t| StratumTermJson {
                    subset: t.subset.clone(),
                    class: match &t.class {
                        ClassView::Motivic(c) => ClassViewJson::Motivic(ClassJson::from_class(c)),
                        ClassView::Hodge(h) => ClassViewJson::Hodge(PolyJson::from_poly(h)),
                        ClassView::Topological(e) => ClassViewJson::Euler(e.to_string()),
                    },
                    factors: t
                        .factors
                        .iter()
                        .map(|f| FactorJson {
                            component: f.component.clone(),
                            nu: f.nu_eff.to_string(),
                            n: f.n.to_string(),
                        })
                        .collect(),
                })
                .collect(),
            reduced: RatFracJson::from_ratfrac(&z.reduced),
            pole_candidates: z
                .pole_candidates
                .iter()
                .map(|p| PoleJson {
                    component: p.component.clone(),
                    value: p.value.to_string(),
                    surviving: p.surviving,
                })
                .collect(),
        }
    }

    pub fn to_result(&self) -> Result<ZetaResult> {
        let level = match self.level.as_str() {
            "motivic" => Level::Motivic,
            "hodge" => Level::Hodge,
            "topological" => Level::Topological,
            other => {
                return Err(Error::Parse {
                    position: 0,
                    message: format!("unknown level `{other}`"),
                })
            }
        };
        let strata_sum = self
            .strata_sum
            .iter()
            .map(|t| {
                let class = match &t.class {
                    ClassViewJson::Motivic(c) => ClassView::Motivic(c.to_class()?),
                    ClassViewJson::Hodge(h) => ClassView::Hodge(h.to_poly()?),
                    ClassViewJson::Euler(e) => ClassView::Topological(Rational::parse(e)?),
                };
                Ok(StratumTerm {
                    subset: t.subset.clone(),
                    class,
                    factors: t
                        .factors
                        .iter()
                        .map(|f| {
                            Ok(FactorDesc {
                                component: f.component.clone(),
                                nu_eff: Rational::parse(&f.nu)?,
                                n: Rational::parse(&f.n)?,
                            })
                        })
                        .collect::<Result<Vec<_>>>()?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let mut reduced = self.reduced.to_ratfrac()?;
        reduced.mark_reduced();
        Ok(ZetaResult {
            level,
            w: self.w.clone(),
            dim: self.dim,
            root_order: self.root_order,
            strata_sum,
            reduced,
            pole_candidates: self
                .pole_candidates
                .iter()
                .map(|p| {
                    Ok(PoleCandidate {
                        component: p.component.clone(),
                        value: Rational::parse(&p.value)?,
                        surviving: p.surviving,
                    })
                })
                .collect::<Result<Vec<_>>>()?,
        })
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ValueJson {
    Finite { num: PolyJson, den: PolyJson },
    Infinity,
}

impl ValueJson {
    pub fn from_value(v: &ValueOrInfinity) -> Self {
        match v {
            ValueOrInfinity::Finite(f) => ValueJson::Finite {
                num: PolyJson::from_poly(f.num()),
                den: PolyJson::from_poly(f.den()),
            },
            ValueOrInfinity::Infinity => ValueJson::Infinity,
        }
    }

    pub fn to_value(&self) -> Result<ValueOrInfinity> {
        Ok(match self {
            ValueJson::Finite { num, den } => {
                ValueOrInfinity::Finite(FracValue::new(num.to_poly()?, den.to_poly()?))
            }
            ValueJson::Infinity => ValueOrInfinity::Infinity,
        })
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InvariantsJson {
    pub e: ValueJson,
    #[serde(rename = "E")]
    pub e_hodge: ValueJson,
    pub e_pair: ValueJson,
    #[serde(rename = "E_pair")]
    pub e_pair_hodge: ValueJson,
    #[serde(rename = "E_mot")]
    pub motivic_e: ValueJson,
    #[serde(rename = "E_mot_pair")]
    pub motivic_e_pair: ValueJson,
    pub flags: Vec<String>,
}

impl InvariantsJson {
    pub fn from_report(r: &InvariantReport) -> Self {
        InvariantsJson {
            e: ValueJson::from_value(&r.e_top),
            e_hodge: ValueJson::from_value(&r.e_hodge),
            e_pair: ValueJson::from_value(&r.e_pair_top),
            e_pair_hodge: ValueJson::from_value(&r.e_pair_hodge),
            motivic_e: ValueJson::from_value(&r.motivic_e),
            motivic_e_pair: ValueJson::from_value(&r.motivic_e_pair),
            flags: r.flags.iter().map(|f| f.to_string()).collect(),
        }
    }
}
