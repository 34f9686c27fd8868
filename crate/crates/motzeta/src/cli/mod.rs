//! Command-line front end: input documents, commands, renderers.
//!
//! Exit codes: 0 success, 1 validation or assertion failure, 2 parse
//! error. All numbers cross the boundary as exact "p/q" strings.

pub mod doc;
pub mod json;
pub mod render;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::Error;
use crate::exact::Rational;
use crate::grothendieck::SymbolRegistry;
use crate::resolution::ResolutionConfig;
use crate::rng::SplitMix64;
use crate::surface::{
    blow_up, check_negative_definite, intersection_matrix, solve_graph, strata_config,
    BlowUpSite, DualGraph,
};
use crate::stringy;
use crate::zeta::{self, Level, ZetaResult};

pub use doc::InputDocument;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;

#[derive(Clone, Debug, Default)]
pub struct ZetaFlags {
    pub w: Option<String>,
    pub level: Option<Level>,
    pub latex: bool,
    pub json: bool,
}

#[derive(Clone, Debug)]
pub struct BlowupFlags {
    pub count: u32,
    pub max_depth: u32,
    pub seed: u64,
}

impl Default for BlowupFlags {
    fn default() -> Self {
        BlowupFlags {
            count: 100,
            max_depth: 5,
            seed: 1,
        }
    }
}

#[derive(Clone, Debug)]
pub enum Command {
    Zeta { input: String, flags: ZetaFlags },
    Surface { input: String, flags: ZetaFlags },
    BlowupTest { input: String, flags: BlowupFlags },
    PadicTest { input: String },
}

/// Run a command on a document text; returns the rendered output and the
/// process exit code.
pub fn execute(cmd: &Command) -> (String, i32) {
    let result = match cmd {
        Command::Zeta { input, flags } => cmd_zeta(input, flags),
        Command::Surface { input, flags } => cmd_surface(input, flags),
        Command::BlowupTest { input, flags } => cmd_blowup_test(input, flags),
        Command::PadicTest { input } => cmd_padic_test(input),
    };
    match result {
        Ok(out) => (out, EXIT_OK),
        Err(CmdError { output, error, code }) => {
            let mut full = output;
            if !full.is_empty() && !full.ends_with('\n') {
                full.push('\n');
            }
            let _ = writeln!(full, "error: {error}");
            (full, code)
        }
    }
}

struct CmdError {
    output: String,
    error: Error,
    code: i32,
}

impl From<Error> for CmdError {
    fn from(error: Error) -> Self {
        let code = match &error {
            Error::Parse { .. } => EXIT_PARSE,
            _ => EXIT_FAILURE,
        };
        CmdError {
            output: String::new(),
            error,
            code,
        }
    }
}

type CmdResult = std::result::Result<String, CmdError>;

fn wrong_kind(expected: &str) -> CmdError {
    CmdError::from(Error::Parse {
        position: 0,
        message: format!("expected a document of kind `{expected}`"),
    })
}

fn cmd_zeta(input: &str, flags: &ZetaFlags) -> CmdResult {
    let doc = InputDocument::parse(input)?;
    let InputDocument::Resolution(r) = doc else {
        return Err(wrong_kind("resolution"));
    };
    let (cfg, registry) = r.build()?;
    cfg.validated()?;
    let w = flags.w.clone().unwrap_or_else(|| "X".to_string());
    render_zeta_and_invariants(&cfg, &registry, &w, flags)
}

fn render_zeta_and_invariants(
    cfg: &ResolutionConfig,
    registry: &SymbolRegistry,
    w: &str,
    flags: &ZetaFlags,
) -> CmdResult {
    let level = flags.level.unwrap_or(Level::Topological);
    let z = match level {
        Level::Topological => zeta::topological_zeta(cfg, w, registry)?,
        Level::Hodge => zeta::hodge_zeta(cfg, w, registry)?,
        Level::Motivic => zeta::motivic_zeta(cfg, w, registry)?,
    };
    let report = stringy::consistency_check(cfg, w, registry)?;

    if flags.json {
        let payload = serde_json::json!({
            "zeta": json::ZetaJson::from_result(&z),
            "invariants": json::InvariantsJson::from_report(&report),
        });
        return Ok(format!(
            "{}\n",
            serde_json::to_string_pretty(&payload).expect("serializable")
        ));
    }
    let mut out = String::new();
    if flags.latex {
        out.push_str(&render::render_zeta_latex(&z));
        out.push_str(&render::render_invariants_latex(&report));
    } else {
        out.push_str(&render::render_zeta_plain(&z));
        out.push_str(&render::render_invariants_plain(&report));
    }
    Ok(out)
}

fn cmd_surface(input: &str, flags: &ZetaFlags) -> CmdResult {
    let doc = InputDocument::parse(input)?;
    let InputDocument::Dualgraph(d) = doc else {
        return Err(wrong_kind("dualgraph"));
    };
    let graph = d.build()?;
    let mut out = String::new();

    let m = intersection_matrix(&graph);
    let _ = writeln!(out, "intersection matrix:");
    for row in &m {
        let cells: Vec<String> = row.iter().map(|e| format!("{e:>3}")).collect();
        let _ = writeln!(out, "  [{}]", cells.join(" "));
    }
    let neg_def = check_negative_definite(&m);
    let _ = writeln!(out, "negative definite: {}", if neg_def { "yes" } else { "no" });
    if !neg_def {
        return Err(CmdError {
            output: out,
            error: Error::Domain("intersection matrix is not negative definite".into()),
            code: EXIT_FAILURE,
        });
    }

    let solved = solve_graph(&graph)?;
    for v in &graph.vertices {
        let _ = writeln!(
            out,
            "N_{name}={n} nu_{name}={nu}",
            name = v.name,
            n = solved.n[&v.name],
            nu = solved.nu[&v.name]
        );
    }
    for v in &graph.vertices {
        if (&solved.nu[&v.name] + &solved.n[&v.name]).is_zero() {
            let _ = writeln!(out, "note: nu_{0} + N_{0} = 0", v.name);
        }
    }

    let cfg = strata_config(&solved)?;
    let registry = SymbolRegistry::new();
    let _ = writeln!(out, "strata:");
    for s in &cfg.strata {
        let subset = if s.subset.is_empty() {
            "{}".to_string()
        } else {
            format!(
                "{{{}}}",
                s.subset.iter().cloned().collect::<Vec<_>>().join(", ")
            )
        };
        let _ = writeln!(
            out,
            "  {subset}: class {}, over origin {}",
            s.class_total,
            s.class_for("origin")
        );
    }

    let zeta_out = render_zeta_and_invariants(&cfg, &registry, "origin", flags)?;
    out.push_str(&zeta_out);
    Ok(out)
}

/// One random blow-up sequence; returns the transformed graph and the
/// human-readable site trail.
fn random_sequence(
    base: &DualGraph,
    depth: u32,
    rng: &mut SplitMix64,
) -> crate::error::Result<(DualGraph, Vec<String>)> {
    let mut g = base.clone();
    let mut trail = Vec::new();
    for _ in 0..depth {
        let mut sites: Vec<(BlowUpSite, String)> = Vec::new();
        for v in &g.vertices {
            sites.push((
                BlowUpSite::FreePoint(v.name.clone()),
                format!("free({})", v.name),
            ));
        }
        for (i, e) in g.edges.iter().enumerate() {
            sites.push((BlowUpSite::EdgePoint(i), format!("edge({},{})", e.0, e.1)));
        }
        for (i, a) in g.arrows.iter().enumerate() {
            sites.push((BlowUpSite::ArrowPoint(i), format!("arrow(at {})", a.vertex)));
        }
        let (site, label) = sites[rng.below(sites.len())].clone();
        g = blow_up(&g, &site)?;
        trail.push(label);
    }
    Ok((g, trail))
}

fn zetas_for_invariance(
    graph: &DualGraph,
    registry: &SymbolRegistry,
) -> crate::error::Result<Vec<ZetaResult>> {
    let cfg = strata_config(&solve_graph(graph)?)?;
    let mut out = Vec::new();
    for w in ["origin", "X"] {
        out.push(zeta::topological_zeta(&cfg, w, registry)?);
        out.push(zeta::hodge_zeta(&cfg, w, registry)?);
    }
    Ok(out)
}

fn cmd_blowup_test(input: &str, flags: &BlowupFlags) -> CmdResult {
    let doc = InputDocument::parse(input)?;
    let InputDocument::Dualgraph(d) = doc else {
        return Err(wrong_kind("dualgraph"));
    };
    let graph = d.build()?;
    let registry = SymbolRegistry::new();
    let base = zetas_for_invariance(&graph, &registry)?;

    let mut out = String::new();
    let _ = writeln!(
        out,
        "blow-up invariance: {} sequences, depth <= {}, seed {}",
        flags.count, flags.max_depth, flags.seed
    );
    let mut rng = SplitMix64::new(flags.seed);
    for i in 0..flags.count {
        let depth = 1 + rng.below(flags.max_depth.max(1) as usize) as u32;
        let (g, trail) = random_sequence(&graph, depth, &mut rng)?;
        let transformed = zetas_for_invariance(&g, &registry)?;
        let mut mismatch = None;
        for (a, b) in base.iter().zip(&transformed) {
            if !a.eq_as_fraction(b) {
                mismatch = Some(format!("level {} over W = {}", a.level, a.w));
                break;
            }
        }
        match mismatch {
            None => {
                let _ = writeln!(out, "  seq {i:>3}: depth {depth} [{}] ok", trail.join(", "));
            }
            Some(what) => {
                let _ = writeln!(
                    out,
                    "  seq {i:>3}: depth {depth} [{}] MISMATCH at {what}",
                    trail.join(", ")
                );
                return Err(CmdError {
                    output: out,
                    error: Error::Domain(format!(
                        "zeta changed under blow-up sequence [{}]",
                        trail.join(", ")
                    )),
                    code: EXIT_FAILURE,
                });
            }
        }
    }
    let _ = writeln!(out, "all {} sequences preserve the zeta", flags.count);
    Ok(out)
}

fn cmd_padic_test(input: &str) -> CmdResult {
    let doc = InputDocument::parse(input)?;
    let InputDocument::Padic(p) = doc else {
        return Err(wrong_kind("padic"));
    };
    let (poly, cfg, _registry) = p.build()?;
    cfg.validated()?;
    let report = crate::padic::compare(&poly, &cfg, p.p, p.n_max)?;
    let out = format!("{report}\n");
    if report.agrees() {
        Ok(out)
    } else {
        Err(CmdError {
            output: out,
            error: Error::Domain(format!(
                "series disagree first at n = {}",
                report.first_mismatch.unwrap()
            )),
            code: EXIT_FAILURE,
        })
    }
}

/// Scaling identity helper shared by tests and examples:
/// z(scale(cfg, c), s) must equal z(cfg, c s).
pub fn scaled_zeta_matches(
    cfg: &ResolutionConfig,
    registry: &SymbolRegistry,
    w: &str,
    c: &Rational,
) -> crate::error::Result<bool> {
    use crate::exact::{FracPoly, RatFrac};
    let base = zeta::topological_zeta(cfg, w, registry)?;
    let scaled = zeta::topological_zeta(&cfg.scale_divisor(c)?, w, registry)?;
    let vars = base.reduced.num().vars().clone();
    let cs = FracPoly::monomial(vars, 1, c.clone(), vec![1]);
    let num = base.reduced.num().substitute("s", &cs)?;
    let den = base
        .reduced
        .den_factors()
        .iter()
        .map(|f| f.substitute("s", &cs))
        .collect::<crate::error::Result<Vec<_>>>()?;
    let substituted = RatFrac::new("s", num, den);
    Ok(scaled.reduced.eq_as_fraction(&substituted))
}

/// Offsets parsed from `name=p/q` pairs (used by examples).
pub fn parse_offsets(pairs: &[String]) -> crate::error::Result<BTreeMap<String, Rational>> {
    let mut out = BTreeMap::new();
    for p in pairs {
        let (name, value) = p.split_once('=').ok_or_else(|| Error::Parse {
            position: 0,
            message: format!("offset `{p}` is not name=p/q"),
        })?;
        out.insert(name.trim().to_string(), Rational::parse(value)?);
    }
    Ok(out)
}
