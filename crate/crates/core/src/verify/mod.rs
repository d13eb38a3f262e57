//! Small-graph enumeration, the fixture graphs, and a harness that checks
//! every identity of the crate on a given graph.

mod trees;

pub use trees::{
    canonical_tree_code, enumerate_trees, tree_conjecture_sweep, tree_isomorphism,
    TreeCollision, TreeSweepReport, TREE_CAP,
};

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bijection::{phi, phi_colored, psi, psi_colored};
use crate::budget::Budget;
use crate::chromatic::{
    acyclic_orientations, chi_poly, compatible_pair_count, compatible_orientations,
    is_log_concave, nbc_coefficients, poly_from_nbc_coefficients, reciprocity_value, ChiMethod,
};
use crate::coloring::{colorings_of, is_monochromatic_on};
use crate::csf::{compat_generating, x_all_subgraphs, x_bruteforce, x_nbc};
use crate::error::{invalid, Error, Result};
use crate::expansion::nbc_subsets;
use crate::graph::{EdgeSubset, Graph};
use crate::involution::verify_involution;
use crate::poly::IntPolynomial;
use crate::symfunc::{expand_monomials, omega, specialize, PSymFunc};

/// Largest vertex count accepted by [`enumerate_graphs`].
pub const GRAPH_CAP: usize = 7;

/// All `2^{C(n,2)}` labeled simple graphs on `n` vertices, with edges in
/// lexicographic order.
pub fn enumerate_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n > GRAPH_CAP {
        return Err(invalid(format!("graph enumeration is capped at n = {GRAPH_CAP}")));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    Ok((0..1u64 << pairs.len()).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &e)| e);
        Graph::new(n, edges).expect("distinct pairs")
    }))
}

/// `m` distinct edges chosen uniformly at random, in lexicographic order.
pub fn random_graph(n: usize, m: usize, seed: u64) -> Result<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    if m > pairs.len() {
        return Err(invalid(format!("{n} vertices admit at most {} edges", pairs.len())));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let chosen = sample(&mut rng, pairs.len(), m);
    Graph::from_edge_set(n, chosen.iter().map(|k| pairs[k]))
}

/// Each possible edge present independently with probability 1/2.
pub fn random_labeled_graph(n: usize, rng: &mut impl Rng) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(0.5))
        .collect();
    Graph::new(n, edges).expect("distinct pairs")
}

/// `count` independent draws of [`random_labeled_graph`], reproducible from
/// `seed`.
pub fn random_graph_sample(n: usize, count: usize, seed: u64) -> impl Iterator<Item = Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(move |_| random_labeled_graph(n, &mut rng))
}

/// The fixture graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedGraph {
    /// Vertices u=0, v=1, w=2, x=3 and edges uw < uv < vw < vx.
    Fig1,
    /// Two triangles sharing a vertex.
    Butterfly,
    /// A 4-cycle with a chord, plus a pendant edge at a vertex off the chord.
    Kite,
    /// A triangle with a pendant edge at each vertex.
    Net,
    /// A triangle with a pendant edge and a pendant 2-path at one vertex.
    X169,
}

impl NamedGraph {
    pub const ALL: [NamedGraph; 5] = [
        NamedGraph::Fig1,
        NamedGraph::Butterfly,
        NamedGraph::Kite,
        NamedGraph::Net,
        NamedGraph::X169,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedGraph::Fig1 => "fig1",
            NamedGraph::Butterfly => "butterfly",
            NamedGraph::Kite => "kite",
            NamedGraph::Net => "net",
            NamedGraph::X169 => "x169",
        }
    }
}

impl FromStr for NamedGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        NamedGraph::ALL
            .into_iter()
            .find(|g| g.name() == s)
            .ok_or_else(|| invalid(format!("unknown graph name {s:?}")))
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn named_graph(name: NamedGraph) -> Graph {
    let g = match name {
        NamedGraph::Fig1 => Graph::new(4, [(0, 2), (0, 1), (1, 2), (1, 3)]),
        //     1 - 3      0 is the shared vertex
        NamedGraph::Butterfly => {
            Graph::from_edge_set(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
        }
        // 4-cycle 0-1-2-3 with chord 1-3; pendant 4 hangs off 2
        NamedGraph::Kite => {
            Graph::from_edge_set(5, [(0, 1), (1, 2), (2, 3), (0, 3), (1, 3), (2, 4)])
        }
        NamedGraph::Net => {
            Graph::from_edge_set(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])
        }
        // triangle 0-1-2; 0-3 pendant; 0-4-5 pendant path
        NamedGraph::X169 => {
            Graph::from_edge_set(6, [(0, 1), (1, 2), (0, 2), (0, 3), (0, 4), (4, 5)])
        }
    };
    g.expect("fixture graphs are simple")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub status: CheckStatus,
    pub details: String,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Totals {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

impl Totals {
    pub fn merge(&mut self, other: &Totals) {
        self.pass += other.pass;
        self.fail += other.fail;
        self.skipped += other.skipped;
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub graph_id: String,
    pub checks: Vec<CheckResult>,
    pub totals: Totals,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.totals.fail == 0
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Names of the checks run by [`check_theorems`], in report order.
pub const CHECK_NAMES: [&str; 13] = [
    "chi_routes_agree",
    "csf_subgraphs_eq_nbc",
    "csf_specializes_to_chi",
    "involution",
    "csf_monomial_oracle",
    "acyclic_reciprocity",
    "compatible_reciprocity",
    "phi_psi_inverse",
    "colored_phi_psi_inverse",
    "omega_compatible_pairs",
    "nbc_coefficients",
    "log_concave",
    "tree_formula",
];

enum Outcome {
    Pass(String),
    Fail(String),
    NotApplicable(String),
}

fn pass_if(ok: bool, details: impl Into<String>) -> Outcome {
    if ok {
        Outcome::Pass(details.into())
    } else {
        Outcome::Fail(details.into())
    }
}

/// Runs every identity on `g`: agreement of the χ routes, both expansions
/// of `X`, specialization, the involution audit for `t ≤ t_max`, the
/// monomial oracles for `μ ≤ mu_max`, both reciprocity counts, the
/// bijections in both directions, the NBC coefficient sequence, and the
/// tree formula when `g` is a tree. A check whose enumeration exceeds the
/// budget is recorded as skipped.
pub fn check_theorems(g: &Graph, t_max: u32, mu_max: usize, budget: &Budget) -> VerificationReport {
    let mut checks = Vec::with_capacity(CHECK_NAMES.len());
    let mut chi_cache: Option<IntPolynomial> = None;
    let mut x_cache: Option<PSymFunc> = None;

    for name in CHECK_NAMES {
        let outcome = run_check(name, g, t_max, mu_max, budget, &mut chi_cache, &mut x_cache);
        let (status, details) = match outcome {
            Ok(Outcome::Pass(d)) => (CheckStatus::Pass, d),
            Ok(Outcome::Fail(d)) => (CheckStatus::Fail, d),
            Ok(Outcome::NotApplicable(d)) => (CheckStatus::Skipped, d),
            Err(e @ Error::BudgetExceeded { .. }) => (CheckStatus::Skipped, e.to_string()),
            Err(e) => (CheckStatus::Fail, e.to_string()),
        };
        checks.push(CheckResult {
            name,
            status,
            details,
        });
    }
    let mut totals = Totals::default();
    for c in &checks {
        match c.status {
            CheckStatus::Pass => totals.pass += 1,
            CheckStatus::Fail => totals.fail += 1,
            CheckStatus::Skipped => totals.skipped += 1,
        }
    }
    VerificationReport {
        graph_id: g.to_string(),
        checks,
        totals,
    }
}

fn run_check(
    name: &str,
    g: &Graph,
    t_max: u32,
    mu_max: usize,
    budget: &Budget,
    chi_cache: &mut Option<IntPolynomial>,
    x_cache: &mut Option<PSymFunc>,
) -> Result<Outcome> {
    let n = g.vertex_count();
    let mut chi = || -> Result<IntPolynomial> {
        if chi_cache.is_none() {
            *chi_cache = Some(chi_poly(g, ChiMethod::Nbc, budget)?);
        }
        Ok(chi_cache.clone().unwrap())
    };
    let mut x = || -> Result<PSymFunc> {
        if x_cache.is_none() {
            *x_cache = Some(x_nbc(g, budget)?);
        }
        Ok(x_cache.clone().unwrap())
    };

    Ok(match name {
        "chi_routes_agree" => {
            let reference = chi()?;
            let mut bad = Vec::new();
            for m in ChiMethod::ALL {
                if chi_poly(g, m, budget)? != reference {
                    bad.push(m.name());
                }
            }
            pass_if(bad.is_empty(), format!("chi = {reference}; disagreeing: {bad:?}"))
        }
        "csf_subgraphs_eq_nbc" => {
            let nbc = x()?;
            pass_if(x_all_subgraphs(g, budget)? == nbc, format!("X = {nbc}"))
        }
        "csf_specializes_to_chi" => {
            let s = specialize(&x()?);
            pass_if(s == chi()?, format!("specialized X = {s}"))
        }
        "involution" => {
            let mut failures = Vec::new();
            let mut pairs = 0;
            for t in 1..=t_max {
                let r = verify_involution(g, t, budget)?;
                pairs += r.pairs;
                failures.extend(r.failures.into_iter().map(|f| format!("t={t}: {f}")));
            }
            pass_if(
                failures.is_empty(),
                format!("{pairs} pairs checked for t <= {t_max}; {failures:?}"),
            )
        }
        "csf_monomial_oracle" => {
            let xg = x()?;
            let mut bad = Vec::new();
            for mu in 1..=mu_max {
                let brute = x_bruteforce(g, mu, budget)?;
                if expand_monomials(&xg, mu, budget)? != brute || !brute.is_symmetric() {
                    bad.push(mu);
                }
            }
            pass_if(bad.is_empty(), format!("mu <= {mu_max}; failing mu: {bad:?}"))
        }
        "acyclic_reciprocity" => {
            let count = BigInt::from(acyclic_orientations(g, budget)?.len());
            let expected = reciprocity_value(n, &chi()?, 1);
            pass_if(count == expected, format!("acyclic orientations {count}, (-1)^n chi(-1) = {expected}"))
        }
        "compatible_reciprocity" => {
            let chi = chi()?;
            let mut details = Vec::new();
            let mut ok = true;
            for t in 1..=t_max {
                let count = BigInt::from(compatible_pair_count(g, t, budget)?);
                let expected = reciprocity_value(n, &chi, t);
                ok &= count == expected;
                details.push(format!("t={t}: {count} vs {expected}"));
            }
            pass_if(ok, details.join("; "))
        }
        "phi_psi_inverse" => {
            let acyclic = acyclic_orientations(g, budget)?;
            let nbc: BTreeSet<EdgeSubset> = nbc_subsets(g, budget)?.into_iter().collect();
            let mut image = BTreeSet::new();
            let mut ok = true;
            for o in &acyclic {
                let s = phi(g, o)?;
                ok &= psi(g, &s)? == *o;
                image.insert(s);
            }
            for s in &nbc {
                ok &= phi(g, &psi(g, s)?)? == *s;
            }
            ok &= image == nbc;
            pass_if(ok, format!("{} acyclic orientations, {} NBC sets", acyclic.len(), nbc.len()))
        }
        "colored_phi_psi_inverse" => {
            let nbc = nbc_subsets(g, budget)?;
            let mut ok = true;
            let mut pairs = 0u64;
            for t in 1..=t_max {
                for k in colorings_of(n, t, budget)? {
                    let os = compatible_orientations(g, &k, budget)?;
                    let mut ss = BTreeSet::new();
                    for s in &nbc {
                        if is_monochromatic_on(g, s, &k)? {
                            ss.insert(s.clone());
                        }
                    }
                    let mut image = BTreeSet::new();
                    for o in &os {
                        let s = phi_colored(g, &k, o)?;
                        ok &= psi_colored(g, &k, &s)? == *o;
                        image.insert(s);
                    }
                    for s in &ss {
                        ok &= phi_colored(g, &k, &psi_colored(g, &k, s)?)? == *s;
                    }
                    ok &= image == ss;
                    pairs += os.len() as u64;
                }
            }
            pass_if(ok, format!("{pairs} compatible pairs for t <= {t_max}"))
        }
        "omega_compatible_pairs" => {
            let wx = omega(&x()?);
            let mut bad = Vec::new();
            for mu in 1..=mu_max {
                if compat_generating(g, mu, budget)? != expand_monomials(&wx, mu, budget)? {
                    bad.push(mu);
                }
            }
            pass_if(bad.is_empty(), format!("mu <= {mu_max}; failing mu: {bad:?}"))
        }
        "nbc_coefficients" => {
            let a = nbc_coefficients(g, budget)?;
            let rebuilt = poly_from_nbc_coefficients(n, &a);
            pass_if(rebuilt == chi()?, format!("a = {a:?}"))
        }
        "log_concave" => {
            let a = nbc_coefficients(g, budget)?;
            pass_if(is_log_concave(&a), format!("a = {a:?}"))
        }
        "tree_formula" => {
            if !g.is_tree() {
                Outcome::NotApplicable("not a tree".to_string())
            } else {
                let formula = tree_chromatic_polynomial(n);
                pass_if(chi()? == formula, format!("t(t-1)^{} = {formula}", n - 1))
            }
        }
        other => unreachable!("unknown check {other}"),
    })
}

/// `t (t-1)^{n-1}`.
pub fn tree_chromatic_polynomial(n: usize) -> IntPolynomial {
    assert!(n >= 1);
    &IntPolynomial::monomial(1) * &IntPolynomial::linear_root(1).pow(n as u32 - 1)
}

/// Side-by-side comparison of two graphs' chromatic symmetric functions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CsfComparison {
    pub left: String,
    pub right: String,
    pub csf_equal: bool,
    pub chi_equal: bool,
    pub left_degrees: Vec<usize>,
    pub right_degrees: Vec<usize>,
}

impl CsfComparison {
    /// Different degree sequences certify non-isomorphism.
    pub fn certified_non_isomorphic(&self) -> bool {
        self.left_degrees != self.right_degrees
    }
}

pub fn compare_csf(left: &Graph, right: &Graph, budget: &Budget) -> Result<CsfComparison> {
    let (xl, xr) = (x_nbc(left, budget)?, x_nbc(right, budget)?);
    Ok(CsfComparison {
        left: left.to_string(),
        right: right.to_string(),
        csf_equal: xl == xr,
        chi_equal: specialize(&xl) == specialize(&xr),
        left_degrees: left.degree_sequence(),
        right_degrees: right.degree_sequence(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_counts() {
        assert_eq!(enumerate_graphs(2).unwrap().count(), 2);
        assert_eq!(enumerate_graphs(3).unwrap().count(), 8);
        assert_eq!(enumerate_graphs(4).unwrap().count(), 64);
        assert!(enumerate_graphs(8).is_err());
        let first = enumerate_graphs(4).unwrap().last().unwrap();
        assert_eq!(first, Graph::complete(4));
    }

    #[test]
    fn fixtures() {
        let bf = named_graph(NamedGraph::Butterfly);
        assert_eq!((bf.vertex_count(), bf.edge_count()), (5, 6));
        let net = named_graph(NamedGraph::Net);
        assert_eq!((net.vertex_count(), net.edge_count()), (6, 6));
        assert_eq!(net.degree_sequence().iter().filter(|&&d| d == 1).count(), 3);
        let x = named_graph(NamedGraph::X169);
        assert_eq!((x.vertex_count(), x.edge_count()), (6, 6));
        let kite = named_graph(NamedGraph::Kite);
        assert_eq!((kite.vertex_count(), kite.edge_count()), (5, 6));
        let fig1 = named_graph(NamedGraph::Fig1);
        let closed = &(&IntPolynomial::monomial(1) * &IntPolynomial::linear_root(1).pow(2))
            * &IntPolynomial::linear_root(2);
        assert_eq!(chi_poly(&fig1, ChiMethod::Nbc, &Budget::default()).unwrap(), closed);
        for g in NamedGraph::ALL {
            assert_eq!(g.name().parse::<NamedGraph>().unwrap(), g);
        }
        assert!("petersen".parse::<NamedGraph>().is_err());
    }

    #[test]
    fn fig1_report_passes() {
        let r = check_theorems(&named_graph(NamedGraph::Fig1), 3, 3, &Budget::default());
        assert_eq!(r.checks.len(), CHECK_NAMES.len());
        assert_eq!(r.totals.fail, 0, "{r:#?}");
        assert_eq!(r.check("tree_formula").unwrap().status, CheckStatus::Skipped);
        assert_eq!(r.totals.pass, CHECK_NAMES.len() - 1);
    }

    #[test]
    fn tree_report_runs_tree_check() {
        let r = check_theorems(&Graph::path(4), 2, 2, &Budget::default());
        assert!(r.passed());
        assert_eq!(r.check("tree_formula").unwrap().status, CheckStatus::Pass);
    }

    #[test]
    fn budget_skips_are_recorded() {
        let tight = Budget {
            colorings: 10,
            subsets: 1 << 20,
        };
        let r = check_theorems(&named_graph(NamedGraph::Fig1), 3, 3, &tight);
        assert_eq!(r.totals.fail, 0);
        assert!(r.totals.skipped > 1);
        assert_eq!(r.check("involution").unwrap().status, CheckStatus::Skipped);
    }

    #[test]
    fn fixture_collisions() {
        let b = Budget::default();
        let bk = compare_csf(&named_graph(NamedGraph::Butterfly), &named_graph(NamedGraph::Kite), &b).unwrap();
        assert!(bk.csf_equal && bk.certified_non_isomorphic());
        assert_eq!(bk.left_degrees, [2, 2, 2, 2, 4]);
        assert_eq!(bk.right_degrees, [1, 2, 3, 3, 3]);
        let nx = compare_csf(&named_graph(NamedGraph::Net), &named_graph(NamedGraph::X169), &b).unwrap();
        assert!(nx.csf_equal && nx.certified_non_isomorphic());
        let fb = compare_csf(&named_graph(NamedGraph::Fig1), &named_graph(NamedGraph::Butterfly), &b).unwrap();
        assert!(!fb.csf_equal);
    }

    #[test]
    fn random_graphs_are_reproducible() {
        let a = random_graph(10, 20, 42).unwrap();
        assert_eq!(a, random_graph(10, 20, 42).unwrap());
        assert_eq!(a.edge_count(), 20);
        assert!(random_graph(4, 7, 0).is_err());
        let a: Vec<Graph> = random_graph_sample(6, 50, 7).collect();
        assert_eq!(a, random_graph_sample(6, 50, 7).collect::<Vec<_>>());
        assert!(a.iter().map(Graph::edge_count).collect::<BTreeSet<_>>().len() > 3);
    }
}
