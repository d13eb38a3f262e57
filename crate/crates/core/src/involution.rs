//! The sign-reversing involution on colored spanning subgraphs.
//!
//! The pairs `(S, κ)` with `κ` monochromatic on the components of `S` carry
//! sign `(-1)^{|S|}` and weight `x^κ`. Toggling the last monochromatic edge
//! of `κ` in `S` pairs them off, leaving exactly `(∅, κ)` with `κ` proper.

use num_bigint::BigInt;
use serde::Serialize;

use crate::budget::Budget;
use crate::chromatic::chi_count;
use crate::coloring::{colorings_of, is_monochromatic_on, Coloring};
use crate::csf::x_bruteforce;
use crate::error::{precondition, Result};
use crate::graph::{broken_circuits, EdgeSubset, Graph};
use crate::symfunc::MonomialMap;

/// A pair `(S, κ)` with `κ` constant across every edge of `S`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColoredSubgraph {
    subset: EdgeSubset,
    coloring: Coloring,
}

impl ColoredSubgraph {
    pub fn new(g: &Graph, subset: EdgeSubset, coloring: Coloring) -> Result<Self> {
        if !is_monochromatic_on(g, &subset, &coloring)? {
            return Err(precondition(format!(
                "coloring is not monochromatic on the components of {subset:?}"
            )));
        }
        Ok(ColoredSubgraph { subset, coloring })
    }

    pub fn subset(&self) -> &EdgeSubset {
        &self.subset
    }

    pub fn coloring(&self) -> &Coloring {
        &self.coloring
    }

    /// `(-1)^{|S|}`.
    pub fn sign(&self) -> i32 {
        if self.subset.len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

pub fn sign(p: &ColoredSubgraph) -> i32 {
    p.sign()
}

/// The largest edge whose endpoints share a color, if any.
pub fn last_monochromatic_edge(g: &Graph, k: &Coloring) -> Result<Option<usize>> {
    k.check(g)?;
    Ok((0..g.edge_count()).rev().find(|&i| {
        let (u, v) = g.edge(i);
        k.color(u) == k.color(v)
    }))
}

/// `ι(S, κ) = (S △ e, κ)` for the last monochromatic edge `e` of `κ`, or the
/// pair itself when `κ` is proper.
pub fn iota(g: &Graph, p: &ColoredSubgraph) -> Result<ColoredSubgraph> {
    if !is_monochromatic_on(g, &p.subset, &p.coloring)? {
        return Err(precondition("pair is not monochromatic on its subset"));
    }
    let mut out = p.clone();
    if let Some(e) = last_monochromatic_edge(g, &p.coloring)? {
        out.subset.toggle(e);
    }
    Ok(out)
}

/// Outcome of auditing `ι` over every pair with colors in `[t]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvolutionReport {
    pub t: u32,
    /// `|𝒮|`.
    pub pairs: u64,
    pub fixed_points: u64,
    /// Number of proper `[t]`-colorings, counted independently.
    pub proper_colorings: u64,
    /// Σ sign over all pairs.
    pub signed_sum: i64,
    /// Pairs whose subset contains a broken circuit.
    pub broken_circuit_pairs: u64,
    /// Whether Σ sign · x^κ matched the proper-coloring generating function.
    pub weighted_sum_matches: bool,
    pub failures: Vec<String>,
}

impl InvolutionReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Enumerates every pair `(S, κ)` with `κ ∈ [t]^V` and checks that `ι` is an
/// involution, reverses signs off its fixed points, fixes exactly the pairs
/// `(∅, proper κ)`, never changes `κ`, and keeps every broken circuit of `S`
/// inside `ι(S)`.
pub fn verify_involution(g: &Graph, t: u32, budget: &Budget) -> Result<InvolutionReport> {
    const MAX_FAILURES: usize = 20;
    let bcs = broken_circuits(g);
    let n = g.vertex_count();
    let mut report = InvolutionReport {
        t,
        pairs: 0,
        fixed_points: 0,
        proper_colorings: 0,
        signed_sum: 0,
        broken_circuit_pairs: 0,
        weighted_sum_matches: false,
        failures: Vec::new(),
    };
    let fail = |report: &mut InvolutionReport, msg: String| {
        if report.failures.len() < MAX_FAILURES {
            report.failures.push(msg);
        }
    };
    let mut weighted = MonomialMap::new(t as usize);

    for k in colorings_of(n, t, budget)? {
        let mono = k.monochromatic_edges(g);
        budget.check_subsets("monochromatic subsets", mono.len())?;
        if mono.is_empty() {
            report.proper_colorings += 1;
        }
        let mut kappa_sum = 0i64;
        for mask in 0..1u64 << mono.len() {
            let subset: EdgeSubset = mono
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &i)| i)
                .collect();
            let pair = ColoredSubgraph::new(g, subset, k.clone())?;
            report.pairs += 1;
            report.signed_sum += pair.sign() as i64;
            kappa_sum += pair.sign() as i64;

            let image = iota(g, &pair)?;
            let back = iota(g, &image)?;
            if back != pair {
                fail(&mut report, format!("iota(iota(p)) != p at S={:?} k={:?}", pair.subset, k.colors()));
            }
            if image.coloring != pair.coloring {
                fail(&mut report, format!("iota changed the coloring at S={:?}", pair.subset));
            }
            let fixed = image == pair;
            if fixed {
                report.fixed_points += 1;
                if !(pair.subset.is_empty() && mono.is_empty()) {
                    fail(&mut report, format!("unexpected fixed point S={:?} k={:?}", pair.subset, k.colors()));
                }
                if pair.sign() != 1 {
                    fail(&mut report, "fixed point with negative sign".to_string());
                }
            } else {
                if image.sign() != -pair.sign() {
                    fail(&mut report, format!("sign not reversed at S={:?} k={:?}", pair.subset, k.colors()));
                }
                if image.subset.len().abs_diff(pair.subset.len()) != 1 {
                    fail(&mut report, format!("iota changed more than one edge at S={:?}", pair.subset));
                }
            }
            let contained: Vec<&EdgeSubset> = bcs.iter().filter(|b| b.is_subset(&pair.subset)).collect();
            if !contained.is_empty() {
                report.broken_circuit_pairs += 1;
                if fixed {
                    fail(&mut report, format!("fixed point contains a broken circuit: S={:?}", pair.subset));
                }
                for b in contained {
                    if !b.is_subset(&image.subset) {
                        fail(&mut report, format!(
                            "broken circuit {b:?} lost: {:?} -> {:?} (k={:?})",
                            pair.subset, image.subset, k.colors()
                        ));
                    }
                }
            }
        }
        weighted.add_term(k.exponents(t as usize), BigInt::from(kappa_sum));
    }

    let proper = chi_count(g, t, budget)?;
    if BigInt::from(report.fixed_points) != BigInt::from(proper.clone()) {
        let msg = format!("|Fix| = {} but chi({t}) = {proper}", report.fixed_points);
        fail(&mut report, msg);
    }
    if BigInt::from(report.signed_sum) != BigInt::from(proper) {
        let msg = format!("signed sum {} differs from chi({t})", report.signed_sum);
        fail(&mut report, msg);
    }
    report.weighted_sum_matches = weighted == x_bruteforce(g, t as usize, budget)?;
    if !report.weighted_sum_matches {
        fail(&mut report, "signed weight sum differs from the proper-coloring generating function".to_string());
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{enumerate_graphs, named_graph, NamedGraph};

    fn col(c: &[u32]) -> Coloring {
        Coloring::new(c.to_vec()).unwrap()
    }

    #[test]
    fn signs() {
        let g = named_graph(NamedGraph::Fig1);
        let k = Coloring::constant(4, 1);
        let p = |idx: &[usize]| ColoredSubgraph::new(&g, idx.iter().copied().collect(), k.clone()).unwrap();
        assert_eq!(sign(&p(&[])), 1);
        assert_eq!(sign(&p(&[1])), -1);
        assert_eq!(sign(&p(&[1, 2])), 1);
        assert!(ColoredSubgraph::new(&g, EdgeSubset::from_indices([1]), col(&[3, 4, 1, 3])).is_err());
    }

    #[test]
    fn last_edge() {
        let g = named_graph(NamedGraph::Fig1);
        assert_eq!(last_monochromatic_edge(&g, &col(&[3, 3, 1, 4])).unwrap(), Some(1));
        assert_eq!(last_monochromatic_edge(&g, &col(&[3, 4, 1, 3])).unwrap(), None);
        assert_eq!(last_monochromatic_edge(&g, &Coloring::constant(4, 2)).unwrap(), Some(3));
    }

    #[test]
    fn iota_pairs_fig1() {
        let g = named_graph(NamedGraph::Fig1);
        let k = col(&[3, 3, 1, 4]);
        let with = ColoredSubgraph::new(&g, EdgeSubset::from_indices([1]), k.clone()).unwrap();
        let without = ColoredSubgraph::new(&g, EdgeSubset::new(), k).unwrap();
        assert_eq!(iota(&g, &with).unwrap(), without);
        assert_eq!(iota(&g, &without).unwrap(), with);
        let proper = ColoredSubgraph::new(&g, EdgeSubset::new(), col(&[3, 4, 1, 3])).unwrap();
        assert_eq!(iota(&g, &proper).unwrap(), proper);
    }

    #[test]
    fn audits() {
        let b = Budget::default();
        let r = verify_involution(&named_graph(NamedGraph::Fig1), 4, &b).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        assert_eq!(r.fixed_points, 72);
        let r = verify_involution(&Graph::edgeless(3), 2, &b).unwrap();
        assert_eq!((r.pairs, r.fixed_points), (8, 8));
        let r = verify_involution(&Graph::complete(3), 2, &b).unwrap();
        assert!(r.passed());
        assert_eq!(r.fixed_points, 0);
        for n in 1..=4 {
            for g in enumerate_graphs(n).unwrap() {
                for t in 1..=3 {
                    let r = verify_involution(&g, t, &b).unwrap();
                    assert!(r.passed(), "{g} t={t}: {:?}", r.failures);
                }
            }
        }
    }
}
