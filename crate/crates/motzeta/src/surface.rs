//! Normal-surface-germ front end.
//!
//! A weighted dual graph records the resolution of a normal surface germ:
//! vertices are exceptional curves (genus, self-intersection -kappa),
//! edges are intersection points, arrows are strict-transform branches of
//! the divisor with their coefficients. The intersection matrix determines
//! the multiplicities N_i and log discrepancy data nu_i by exact linear
//! algebra, and from a solved graph we generate the stratified
//! configuration over the origin.
//!
//! Blow-ups of free, edge and arrow points are provided to exercise the
//! resolution independence of everything downstream.

use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::grothendieck::MotClass;
use crate::resolution::{Component, ResolutionConfig, Stratum};

#[derive(Clone, Debug, PartialEq)]
pub struct Vertex {
    pub name: String,
    pub genus: u32,
    /// Self-intersection is -kappa.
    pub kappa: i64,
}

/// A strict-transform branch of the divisor attached at `vertex` with
/// coefficient `mult` (positive).
#[derive(Clone, Debug, PartialEq)]
pub struct Arrow {
    pub vertex: String,
    pub mult: Rational,
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct DualGraph {
    pub vertices: Vec<Vertex>,
    /// Multiset of unordered vertex pairs; loops are not allowed.
    pub edges: Vec<(String, String)>,
    pub arrows: Vec<Arrow>,
}

impl DualGraph {
    pub fn new() -> Self {
        DualGraph::default()
    }

    pub fn add_vertex(&mut self, name: &str, genus: u32, kappa: i64) -> &mut Self {
        self.vertices.push(Vertex {
            name: name.to_string(),
            genus,
            kappa,
        });
        self
    }

    pub fn add_edge(&mut self, a: &str, b: &str) -> &mut Self {
        self.edges.push((a.to_string(), b.to_string()));
        self
    }

    pub fn add_arrow(&mut self, vertex: &str, mult: Rational) -> &mut Self {
        self.arrows.push(Arrow {
            vertex: vertex.to_string(),
            mult,
        });
        self
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.name == name)
    }

    pub fn check(&self) -> Result<()> {
        if self.vertices.is_empty() {
            return Err(Error::Graph("graph has no vertices".into()));
        }
        let mut names = BTreeSet::new();
        for v in &self.vertices {
            if !names.insert(v.name.clone()) {
                return Err(Error::Graph(format!("duplicate vertex `{}`", v.name)));
            }
        }
        for (a, b) in &self.edges {
            if a == b {
                return Err(Error::Graph(format!("loop at vertex `{a}`")));
            }
            for n in [a, b] {
                if !names.contains(n) {
                    return Err(Error::Graph(format!("edge references unknown vertex `{n}`")));
                }
            }
        }
        for ar in &self.arrows {
            if !names.contains(&ar.vertex) {
                return Err(Error::Graph(format!(
                    "arrow references unknown vertex `{}`",
                    ar.vertex
                )));
            }
            if !ar.mult.is_positive() {
                return Err(Error::Graph(format!(
                    "arrow at `{}` has nonpositive multiplicity {}",
                    ar.vertex, ar.mult
                )));
            }
        }
        // connectivity
        let mut seen = BTreeSet::new();
        let mut stack = vec![self.vertices[0].name.clone()];
        while let Some(n) = stack.pop() {
            if !seen.insert(n.clone()) {
                continue;
            }
            for (a, b) in &self.edges {
                if *a == n && !seen.contains(b) {
                    stack.push(b.clone());
                }
                if *b == n && !seen.contains(a) {
                    stack.push(a.clone());
                }
            }
        }
        if seen.len() != self.vertices.len() {
            return Err(Error::Graph("graph is not connected".into()));
        }
        Ok(())
    }

    /// Number of incident edge endpoints plus arrows at a vertex.
    pub fn valence(&self, name: &str) -> usize {
        let e = self
            .edges
            .iter()
            .filter(|(a, b)| a == name || b == name)
            .count();
        let a = self.arrows.iter().filter(|ar| ar.vertex == name).count();
        e + a
    }
}

/// Intersection matrix: diagonal -kappa_i, off-diagonal the number of
/// edges between the two vertices.
pub fn intersection_matrix(g: &DualGraph) -> Vec<Vec<i64>> {
    let n = g.vertices.len();
    let mut m = vec![vec![0i64; n]; n];
    for (i, v) in g.vertices.iter().enumerate() {
        m[i][i] = -v.kappa;
    }
    for (a, b) in &g.edges {
        let i = g.vertex_index(a).expect("checked edge");
        let j = g.vertex_index(b).expect("checked edge");
        m[i][j] += 1;
        m[j][i] += 1;
    }
    m
}

/// Leading-principal-minor test: negative definite iff (-1)^k det(M_k) > 0
/// for every k.
pub fn check_negative_definite(m: &[Vec<i64>]) -> bool {
    let n = m.len();
    for k in 1..=n {
        let sub: Vec<Vec<Rational>> = (0..k)
            .map(|i| (0..k).map(|j| Rational::from_int(m[i][j])).collect())
            .collect();
        let det = determinant(sub);
        let sign_ok = if k % 2 == 0 {
            det.is_positive()
        } else {
            det.is_negative()
        };
        if !sign_ok {
            return false;
        }
    }
    true
}

#[allow(clippy::needless_range_loop)]
fn determinant(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = Rational::one();
    for col in 0..n {
        let pivot = (col..n).find(|&row| !m[row][col].is_zero());
        let Some(pivot) = pivot else {
            return Rational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det = &det * &p;
        for row in (col + 1)..n {
            let f = &m[row][col] / &p;
            if f.is_zero() {
                continue;
            }
            for j in col..n {
                let sub = &f * &m[col][j];
                m[row][j] = &m[row][j] - &sub;
            }
        }
    }
    det
}

/// Exact Gaussian elimination; errors when the matrix is singular.
#[allow(clippy::needless_range_loop)]
fn solve_linear(mut m: Vec<Vec<Rational>>, mut rhs: Vec<Rational>) -> Result<Vec<Rational>> {
    let n = m.len();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&row| !m[row][col].is_zero())
            .ok_or_else(|| Error::Domain("singular intersection matrix".into()))?;
        m.swap(pivot, col);
        rhs.swap(pivot, col);
        let p = m[col][col].clone();
        for row in 0..n {
            if row == col {
                continue;
            }
            let f = &m[row][col] / &p;
            if f.is_zero() {
                continue;
            }
            for j in col..n {
                let sub = &f * &m[col][j];
                m[row][j] = &m[row][j] - &sub;
            }
            let sub = &f * &rhs[col];
            rhs[row] = &rhs[row] - &sub;
        }
    }
    Ok((0..n).map(|i| &rhs[i] / &m[i][i]).collect())
}

/// Graph with its exactly solved multiplicities and discrepancy data.
#[derive(Clone, Debug)]
pub struct SolvedGraph {
    pub graph: DualGraph,
    pub n: BTreeMap<String, Rational>,
    pub nu: BTreeMap<String, Rational>,
}

/// Solve (h*D) . E_j = 0 for the N_i: for every vertex j,
/// sum_i N_i (E_i . E_j) + (arrow load at j) = 0.
pub fn solve_multiplicities(g: &DualGraph) -> Result<BTreeMap<String, Rational>> {
    g.check()?;
    let m = intersection_matrix(g);
    if !check_negative_definite(&m) {
        return Err(Error::Domain(
            "intersection matrix is not negative definite".into(),
        ));
    }
    let mq: Vec<Vec<Rational>> = m
        .iter()
        .map(|row| row.iter().map(|&e| Rational::from_int(e)).collect())
        .collect();
    let rhs: Vec<Rational> = g
        .vertices
        .iter()
        .map(|v| {
            let mut load = Rational::zero();
            for ar in &g.arrows {
                if ar.vertex == v.name {
                    load = &load + &ar.mult;
                }
            }
            -load
        })
        .collect();
    let sol = solve_linear(mq, rhs)?;
    Ok(g.vertices
        .iter()
        .zip(sol)
        .map(|(v, x)| (v.name.clone(), x))
        .collect())
}

/// Solve the adjunction relations for the nu_i: for every vertex j,
/// sum_i (nu_i - 1)(E_i . E_j) = 2 g_j - 2 + kappa_j.
pub fn solve_discrepancies(g: &DualGraph) -> Result<BTreeMap<String, Rational>> {
    g.check()?;
    let m = intersection_matrix(g);
    if !check_negative_definite(&m) {
        return Err(Error::Domain(
            "intersection matrix is not negative definite".into(),
        ));
    }
    let mq: Vec<Vec<Rational>> = m
        .iter()
        .map(|row| row.iter().map(|&e| Rational::from_int(e)).collect())
        .collect();
    let rhs: Vec<Rational> = g
        .vertices
        .iter()
        .map(|v| Rational::from_int(2 * v.genus as i64 - 2 + v.kappa))
        .collect();
    // x_i = nu_i - 1
    let sol = solve_linear(mq, rhs)?;
    Ok(g.vertices
        .iter()
        .zip(sol)
        .map(|(v, x)| (v.name.clone(), &x + &Rational::one()))
        .collect())
}

pub fn solve_graph(g: &DualGraph) -> Result<SolvedGraph> {
    Ok(SolvedGraph {
        graph: g.clone(),
        n: solve_multiplicities(g)?,
        nu: solve_discrepancies(g)?,
    })
}

fn lcm_of_denominators(values: impl Iterator<Item = Rational>) -> Result<u32> {
    let mut r: i64 = 1;
    for v in values {
        let d = v
            .denom()
            .to_i64()
            .ok_or_else(|| Error::Domain("denominator too large for a root order".into()))?;
        r = r.lcm(&d);
    }
    u32::try_from(r).map_err(|_| Error::Domain("root order overflows".into()))
}

/// Distinct name for an arrow component, stable under blow-ups that move
/// the arrow.
fn arrow_component_name(idx: usize) -> String {
    format!("D{}", idx + 1)
}

/// Build the stratified germ configuration over the origin from a solved
/// graph.
///
/// Components: one per vertex (exceptional, solved nu and N) and one per
/// arrow (strict transform, nu = 1, N = mult). Strata: per vertex the open
/// part of its curve with class C_g - valence; per edge and per arrow a
/// point stratum with class 1; the ambient stratum carries class 0 (germ
/// invariants are local). Over "origin" every stratum containing an
/// exceptional component keeps its class; the rest get zero.
pub fn strata_config(sg: &SolvedGraph) -> Result<ResolutionConfig> {
    let g = &sg.graph;
    g.check()?;
    let root = lcm_of_denominators(
        sg.n.values()
            .chain(sg.nu.values())
            .cloned()
            .chain(g.arrows.iter().map(|a| a.mult.clone())),
    )?;
    let mut cfg = ResolutionConfig::new(2, root);
    cfg.w_names.insert("origin".to_string());

    for v in &g.vertices {
        cfg.components.push(Component::new(
            &v.name,
            sg.nu[&v.name].clone(),
            sg.n[&v.name].clone(),
            true,
        ));
    }
    for (i, ar) in g.arrows.iter().enumerate() {
        cfg.components.push(Component::new(
            &arrow_component_name(i),
            Rational::one(),
            ar.mult.clone(),
            false,
        ));
    }

    // Vertex strata: E_i minus its intersection points.
    for v in &g.vertices {
        let valence = g.valence(&v.name) as i64;
        let class = MotClass::curve(root, v.genus)
            .sub(&MotClass::from_int(root, valence));
        let s = Stratum::new([v.name.clone()], class.clone()).with_class_over("origin", class);
        cfg.strata.push(s);
    }
    // Edge point strata, merged per unordered pair (multi-edges stack up).
    let mut edge_count: BTreeMap<(String, String), i64> = BTreeMap::new();
    for (a, b) in &g.edges {
        let key = if a <= b {
            (a.clone(), b.clone())
        } else {
            (b.clone(), a.clone())
        };
        *edge_count.entry(key).or_insert(0) += 1;
    }
    for ((a, b), count) in edge_count {
        let class = MotClass::from_int(root, count);
        let s = Stratum::new([a, b], class.clone()).with_class_over("origin", class);
        cfg.strata.push(s);
    }
    // Arrow point strata.
    for (i, ar) in g.arrows.iter().enumerate() {
        let class = MotClass::one(root);
        let s = Stratum::new(
            [ar.vertex.clone(), arrow_component_name(i)],
            class.clone(),
        )
        .with_class_over("origin", class);
        cfg.strata.push(s);
    }
    // Ambient stratum: class 0 both in total and over the origin.
    cfg.strata.push(
        Stratum::new(Vec::<String>::new(), MotClass::zero(root))
            .with_class_over("origin", MotClass::zero(root)),
    );
    Ok(cfg)
}

/// A point to blow up.
#[derive(Clone, Debug, PartialEq)]
pub enum BlowUpSite {
    /// A free (smooth, non-intersection) point of the named vertex curve.
    FreePoint(String),
    /// The intersection point recorded by edge index.
    EdgePoint(usize),
    /// The point where the indexed arrow meets its vertex.
    ArrowPoint(usize),
}

/// Blow up one point of the resolution surface; returns the new graph.
///
/// The new vertex has genus 0 and kappa = 1; the curves through the blown
/// up point each gain 1 on kappa (self-intersection drops by one) and now
/// meet the new curve instead of each other.
pub fn blow_up(g: &DualGraph, site: &BlowUpSite) -> Result<DualGraph> {
    g.check()?;
    let mut out = g.clone();
    let mut fresh = out.vertices.len();
    let new_name = loop {
        let candidate = format!("b{fresh}");
        if out.vertex_index(&candidate).is_none() {
            break candidate;
        }
        fresh += 1;
    };
    match site {
        BlowUpSite::FreePoint(v) => {
            let idx = out
                .vertex_index(v)
                .ok_or_else(|| Error::Graph(format!("unknown vertex `{v}`")))?;
            out.vertices[idx].kappa += 1;
            out.add_vertex(&new_name, 0, 1);
            out.add_edge(&new_name, v);
        }
        BlowUpSite::EdgePoint(e) => {
            if *e >= out.edges.len() {
                return Err(Error::Graph(format!("edge index {e} out of range")));
            }
            let (a, b) = out.edges.remove(*e);
            let ia = out.vertex_index(&a).unwrap();
            let ib = out.vertex_index(&b).unwrap();
            out.vertices[ia].kappa += 1;
            out.vertices[ib].kappa += 1;
            out.add_vertex(&new_name, 0, 1);
            out.add_edge(&new_name, &a);
            out.add_edge(&new_name, &b);
        }
        BlowUpSite::ArrowPoint(a) => {
            if *a >= out.arrows.len() {
                return Err(Error::Graph(format!("arrow index {a} out of range")));
            }
            let old_vertex = out.arrows[*a].vertex.clone();
            let idx = out.vertex_index(&old_vertex).unwrap();
            out.vertices[idx].kappa += 1;
            out.add_vertex(&new_name, 0, 1);
            out.add_edge(&new_name, &old_vertex);
            out.arrows[*a].vertex = new_name;
        }
    }
    Ok(out)
}

/// Two-vertex germ family: genus-0 curve of self-intersection -kappa0
/// meeting a genus-g curve of self-intersection -kappag, with one arrow of
/// multiplicity `mult` at the second vertex.
pub fn two_vertex_germ(genus: u32, kappa0: i64, kappag: i64, mult: Rational) -> DualGraph {
    let mut g = DualGraph::new();
    g.add_vertex("E0", 0, kappa0);
    g.add_vertex("Eg", genus, kappag);
    g.add_edge("E0", "Eg");
    g.add_arrow("Eg", mult);
    g
}

/// Variant with the arrow at the genus-0 vertex.
pub fn two_vertex_germ_arrow_at_first(
    genus: u32,
    kappa0: i64,
    kappag: i64,
    mult: Rational,
) -> DualGraph {
    let mut g = DualGraph::new();
    g.add_vertex("E0", 0, kappa0);
    g.add_vertex("Eg", genus, kappag);
    g.add_edge("E0", "Eg");
    g.add_arrow("E0", mult);
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    fn germ_432() -> DualGraph {
        // genus 2, kappa0 = 3, kappag = 2, arrow multiplicity N = 2g - kappag - 1 = 1
        two_vertex_germ(2, 3, 2, Rational::one())
    }

    #[test]
    fn intersection_matrix_two_vertices() {
        let m = intersection_matrix(&germ_432());
        assert_eq!(m, vec![vec![-3, 1], vec![1, -2]]);
        let mut single = DualGraph::new();
        single.add_vertex("E", 0, 2);
        assert_eq!(intersection_matrix(&single), vec![vec![-2]]);
    }

    #[test]
    fn negative_definiteness_by_minors() {
        // minors -3, 5
        assert!(check_negative_definite(&[vec![-3, 1], vec![1, -2]]));
        // singular
        assert!(!check_negative_definite(&[vec![-1, 1], vec![1, -1]]));
        assert!(check_negative_definite(&[vec![-2]]));
        assert!(!check_negative_definite(&[vec![2]]));
    }

    #[test]
    fn solve_two_vertex_closed_forms() {
        // closed forms: N0 = N/(k0 kg - 1), Ng = k0 N/(k0 kg - 1),
        // nu0 = (-2g + kg + 1)/(k0 kg - 1), nug = (k0(1 - 2g) + 1)/(k0 kg - 1),
        // over the whole admissible grid k0 >= 2, kg >= 1
        for g in 1u32..=4 {
            for k0 in 2i64..=5 {
                for kg in 1i64..=4 {
                    let n = 2 * g as i64 - kg - 1;
                    if n <= 0 {
                        continue;
                    }
                    let graph = two_vertex_germ(g, k0, kg, Rational::from_int(n));
                    let det = k0 * kg - 1;
                    let nm = solve_multiplicities(&graph).unwrap();
                    assert_eq!(nm["E0"], Rational::ratio(n, det));
                    assert_eq!(nm["Eg"], Rational::ratio(k0 * n, det));
                    let nu = solve_discrepancies(&graph).unwrap();
                    assert_eq!(nu["E0"], Rational::ratio(-2 * g as i64 + kg + 1, det));
                    assert_eq!(nu["Eg"], Rational::ratio(k0 * (1 - 2 * g as i64) + 1, det));
                    // the choice of N forces nu0 + N0 = 0
                    assert!((&nu["E0"] + &nm["E0"]).is_zero());
                }
            }
        }
    }

    #[test]
    fn solve_genus_one_arrow_at_first_vertex() {
        // kappa0 = 3, kappa1 = 2, arrow multiplicity 2 at E0
        let graph = two_vertex_germ_arrow_at_first(1, 3, 2, Rational::from_int(2));
        let nm = solve_multiplicities(&graph).unwrap();
        assert_eq!(nm["E0"], Rational::ratio(4, 5));
        assert_eq!(nm["Eg"], Rational::ratio(2, 5));
        let nu = solve_discrepancies(&graph).unwrap();
        assert_eq!(nu["E0"], Rational::ratio(1, 5));
        assert_eq!(nu["Eg"], Rational::ratio(-2, 5));
        // nu1 + N1 = 0 at this multiplicity
        assert!((&nu["Eg"] + &nm["Eg"]).is_zero());
    }

    #[test]
    fn no_arrows_solves_to_zero_multiplicities() {
        let mut g = DualGraph::new();
        g.add_vertex("A", 0, 2);
        g.add_vertex("B", 0, 3);
        g.add_edge("A", "B");
        let nm = solve_multiplicities(&g).unwrap();
        assert!(nm.values().all(|v| v.is_zero()));
    }

    #[test]
    fn single_vertex_blowup_discrepancy() {
        // (nu - 1)(-1) = -1 so nu = 2
        let mut g = DualGraph::new();
        g.add_vertex("E", 0, 1);
        let nu = solve_discrepancies(&g).unwrap();
        assert_eq!(nu["E"], Rational::from_int(2));
    }

    #[test]
    fn non_negative_definite_rejected() {
        let mut g = DualGraph::new();
        g.add_vertex("A", 0, 1);
        g.add_vertex("B", 0, 1);
        g.add_edge("A", "B");
        assert!(solve_multiplicities(&g).is_err());
    }

    #[test]
    fn graph_validation() {
        let mut g = DualGraph::new();
        g.add_vertex("A", 0, 2);
        g.add_edge("A", "A");
        assert!(g.check().is_err());
        let mut g2 = DualGraph::new();
        g2.add_vertex("A", 0, 2);
        g2.add_vertex("B", 0, 2);
        assert!(g2.check().is_err()); // disconnected
        let mut g3 = DualGraph::new();
        g3.add_vertex("A", 0, 2);
        g3.add_arrow("Ghost", Rational::one());
        assert!(g3.check().is_err());
    }

    #[test]
    fn strata_classes_over_origin() {
        let sg = solve_graph(&germ_432()).unwrap();
        let cfg = strata_config(&sg).unwrap();
        assert!(cfg.validate().is_empty());
        assert_eq!(cfg.root_order, 5);
        let reg = crate::grothendieck::SymbolRegistry::new();
        let chi = |subset: &[&str]| {
            let want: BTreeSet<String> = subset.iter().map(|s| s.to_string()).collect();
            let s = cfg.strata.iter().find(|s| s.subset == want).unwrap();
            s.class_for("origin").euler_specialize(&reg).unwrap()
        };
        use num_bigint::BigInt;
        assert_eq!(chi(&["E0"]), BigInt::from(1));
        assert_eq!(chi(&["Eg"]), BigInt::from(-4)); // -2g with the two points removed
        assert_eq!(chi(&["E0", "Eg"]), BigInt::from(1));
        assert_eq!(chi(&["Eg", "D1"]), BigInt::from(1));
        assert_eq!(chi(&[]), BigInt::from(0));
    }

    #[test]
    fn isolated_vertex_stratum_class() {
        let mut g = DualGraph::new();
        g.add_vertex("E", 0, 2);
        let cfg = strata_config(&solve_graph(&g).unwrap()).unwrap();
        let s = cfg
            .strata
            .iter()
            .find(|s| s.subset.len() == 1)
            .unwrap();
        // full genus-0 curve: class C_0, i.e. Hodge polynomial uv + 1
        let reg = crate::grothendieck::SymbolRegistry::new();
        let h = s.class_total.hodge_specialize(&reg).unwrap();
        assert_eq!(h.to_string(), "u*v + 1");
    }

    #[test]
    fn blow_up_free_point_re_solves_to_plus_one() {
        let base = solve_graph(&germ_432()).unwrap();
        let up = blow_up(&base.graph, &BlowUpSite::FreePoint("E0".into())).unwrap();
        let solved = solve_graph(&up).unwrap();
        // oracle: discrepancy of the new curve is nu(E0) + 1, multiplicity N(E0)
        assert_eq!(solved.nu["b2"], &base.nu["E0"] + &Rational::one());
        assert_eq!(solved.n["b2"], base.n["E0"]);
        // old values are untouched
        assert_eq!(solved.nu["E0"], base.nu["E0"]);
        assert_eq!(solved.n["Eg"], base.n["Eg"]);
    }

    #[test]
    fn blow_up_edge_point_re_solves_to_sum() {
        let base = solve_graph(&germ_432()).unwrap();
        let up = blow_up(&base.graph, &BlowUpSite::EdgePoint(0)).unwrap();
        let solved = solve_graph(&up).unwrap();
        assert_eq!(solved.nu["b2"], &base.nu["E0"] + &base.nu["Eg"]);
        assert_eq!(solved.n["b2"], &base.n["E0"] + &base.n["Eg"]);
    }

    #[test]
    fn blow_up_arrow_point_re_solves() {
        // arrow multiplicity 2 at E0
        let g = two_vertex_germ_arrow_at_first(1, 3, 2, Rational::from_int(2));
        let base = solve_graph(&g).unwrap();
        let up = blow_up(&g, &BlowUpSite::ArrowPoint(0)).unwrap();
        let solved = solve_graph(&up).unwrap();
        // new curve picks up N(E0) + arrow multiplicity, nu(E0) + 1
        assert_eq!(solved.n["b2"], &base.n["E0"] + &Rational::from_int(2));
        assert_eq!(solved.nu["b2"], &base.nu["E0"] + &Rational::one());
        // the arrow now sits on the new curve
        assert_eq!(up.arrows[0].vertex, "b2");
    }

    #[test]
    fn terminal_history_has_discrepancies_at_least_two() {
        // blow-up histories over a smooth point: all genus 0, and every nu >= 2
        use crate::rng::SplitMix64;
        let mut rng = SplitMix64::new(5150);
        for _ in 0..20 {
            let mut g = DualGraph::new();
            g.add_vertex("b0", 0, 1);
            for _ in 0..rng.below(4) {
                let sites: Vec<BlowUpSite> = g
                    .vertices
                    .iter()
                    .map(|v| BlowUpSite::FreePoint(v.name.clone()))
                    .chain((0..g.edges.len()).map(BlowUpSite::EdgePoint))
                    .collect();
                let site = sites[rng.below(sites.len())].clone();
                g = blow_up(&g, &site).unwrap();
            }
            let nu = solve_discrepancies(&g).unwrap();
            for v in nu.values() {
                assert!(v.cmp_value(&Rational::from_int(2)) != std::cmp::Ordering::Less);
            }
        }
    }
}
