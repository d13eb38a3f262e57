//! The chromatic polynomial by several independent routes, and the
//! reciprocity counts at negative arguments.

use std::collections::BTreeSet;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::budget::Budget;
use crate::coloring::{colorings_of, is_compatible, is_proper, Coloring};
use crate::error::{invalid, Error, Result};
use crate::expansion::{walk_all_subsets, walk_nbc_subsets, ExpansionStats};
use crate::graph::Graph;
use crate::mixed::Orientation;
use crate::poly::IntPolynomial;

/// Which route computes the chromatic polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChiMethod {
    /// Count proper colorings at `t = 1..=n+1` and interpolate.
    Count,
    /// Signed sum over all spanning subgraphs.
    Subgraphs,
    /// Signed sum over NBC spanning subgraphs only.
    Nbc,
    /// Deletion–contraction recursion.
    DelCon,
}

impl ChiMethod {
    pub const ALL: [ChiMethod; 4] = [
        ChiMethod::Count,
        ChiMethod::Subgraphs,
        ChiMethod::Nbc,
        ChiMethod::DelCon,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ChiMethod::Count => "count",
            ChiMethod::Subgraphs => "subgraphs",
            ChiMethod::Nbc => "nbc",
            ChiMethod::DelCon => "delcon",
        }
    }
}

impl FromStr for ChiMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ChiMethod::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| invalid(format!("unknown method {s:?}")))
    }
}

pub fn chi_poly(g: &Graph, method: ChiMethod, budget: &Budget) -> Result<IntPolynomial> {
    match method {
        ChiMethod::Count => chi_poly_interpolated(g, budget),
        ChiMethod::Subgraphs => chi_poly_all_subgraphs(g, budget),
        ChiMethod::Nbc => chi_poly_nbc(g, budget),
        ChiMethod::DelCon => chi_poly_delcon(g, budget),
    }
}

/// Number of proper `[t]`-colorings, by enumeration.
pub fn chi_count(g: &Graph, t: u32, budget: &Budget) -> Result<BigUint> {
    let mut count = 0u64;
    for k in colorings_of(g.vertex_count(), t, budget)? {
        if is_proper(g, &k)? {
            count += 1;
        }
    }
    Ok(BigUint::from(count))
}

/// The polynomial through the brute-force counts at `t = 1, ..., n+1`, by
/// Newton forward differences.
pub fn chi_poly_interpolated(g: &Graph, budget: &Budget) -> Result<IntPolynomial> {
    let n = g.vertex_count();
    let mut diffs: Vec<BigInt> = (1..=n as u32 + 1)
        .map(|t| chi_count(g, t, budget).map(BigInt::from))
        .collect::<Result<_>>()?;
    // diffs[k] becomes Δ^k χ(1)
    for k in 1..diffs.len() {
        for j in (k..diffs.len()).rev() {
            diffs[j] = &diffs[j] - &diffs[j - 1];
        }
    }
    // χ(t) = Σ_k Δ^k χ(1) · C(t-1, k); scale by n! to stay integral.
    let n_fact: BigInt = (1..=n).map(BigInt::from).product();
    let mut acc = IntPolynomial::zero();
    let mut falling = IntPolynomial::from_i64(&[1]);
    let mut k_fact = BigInt::one();
    for (k, d) in diffs.iter().enumerate() {
        if k > 0 {
            falling = &falling * &IntPolynomial::linear_root(k as i64);
            k_fact *= k;
        }
        let scale = d * (&n_fact / &k_fact);
        acc = &acc + &(&falling * &IntPolynomial::new(vec![scale]));
    }
    Ok(IntPolynomial::new(
        acc.coeffs().iter().map(|c| c / &n_fact).collect(),
    ))
}

fn signed_poly(counts: Vec<i64>) -> IntPolynomial {
    IntPolynomial::new(counts.into_iter().map(BigInt::from).collect())
}

/// `Σ_{S ⊆ E} (-1)^{|S|} t^{c(S)}`.
pub fn chi_poly_all_subgraphs(g: &Graph, budget: &Budget) -> Result<IntPolynomial> {
    let mut counts = vec![0i64; g.vertex_count() + 1];
    walk_all_subsets(g, budget, |edges, uf| {
        counts[uf.set_count()] += if edges.len() % 2 == 0 { 1 } else { -1 };
    })?;
    Ok(signed_poly(counts))
}

/// `Σ_{S NBC} (-1)^{|S|} t^{c(S)}`, visiting only NBC subsets.
pub fn chi_poly_nbc(g: &Graph, budget: &Budget) -> Result<IntPolynomial> {
    Ok(chi_poly_nbc_with_stats(g, budget)?.0)
}

pub fn chi_poly_nbc_with_stats(
    g: &Graph,
    budget: &Budget,
) -> Result<(IntPolynomial, ExpansionStats)> {
    let mut counts = vec![0i64; g.vertex_count() + 1];
    let stats = walk_nbc_subsets(g, budget, |edges, uf| {
        counts[uf.set_count()] += if edges.len() % 2 == 0 { 1 } else { -1 };
    })?;
    Ok((signed_poly(counts), stats))
}

pub fn chi_poly_all_subgraphs_with_stats(
    g: &Graph,
    budget: &Budget,
) -> Result<(IntPolynomial, ExpansionStats)> {
    let mut counts = vec![0i64; g.vertex_count() + 1];
    let stats = walk_all_subsets(g, budget, |edges, uf| {
        counts[uf.set_count()] += if edges.len() % 2 == 0 { 1 } else { -1 };
    })?;
    Ok((signed_poly(counts), stats))
}

/// `χ(G) = χ(G - e) - χ(G / e)`, contracting to a simple graph each time.
pub fn chi_poly_delcon(g: &Graph, budget: &Budget) -> Result<IntPolynomial> {
    fn rec(
        n: usize,
        edges: &BTreeSet<(usize, usize)>,
        calls: &mut u64,
        limit: u64,
    ) -> Result<IntPolynomial> {
        *calls += 1;
        if *calls > limit {
            return Err(Error::BudgetExceeded {
                what: "deletion-contraction calls",
                needed: format!("more than {limit}"),
                limit,
            });
        }
        let Some(&(u, v)) = edges.iter().next_back() else {
            return Ok(IntPolynomial::monomial(n));
        };
        let mut deleted = edges.clone();
        deleted.remove(&(u, v));
        // Merge v into u, then shift the labels above v down by one.
        let relabel = |x: usize| {
            let x = if x == v { u } else { x };
            if x > v {
                x - 1
            } else {
                x
            }
        };
        let contracted: BTreeSet<(usize, usize)> = deleted
            .iter()
            .map(|&(a, b)| (relabel(a), relabel(b)))
            .filter(|(a, b)| a != b)
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        let d = rec(n, &deleted, calls, limit)?;
        let c = rec(n - 1, &contracted, calls, limit)?;
        Ok(&d - &c)
    }
    let edges: BTreeSet<(usize, usize)> = g.edges().iter().copied().collect();
    rec(g.vertex_count(), &edges, &mut 0, budget.subsets)
}

/// `a_k`: the number of NBC subsets with `k` edges, for `k = 0..n`
/// (a single `a_0 = 1` when `n = 0`). Then `χ(t) = Σ (-1)^k a_k t^{n-k}`.
pub fn nbc_coefficients(g: &Graph, budget: &Budget) -> Result<Vec<u64>> {
    let mut a = vec![0u64; g.vertex_count().max(1)];
    walk_nbc_subsets(g, budget, |edges, _| a[edges.len()] += 1)?;
    Ok(a)
}

/// Rebuilds `χ` from its NBC coefficient sequence.
pub fn poly_from_nbc_coefficients(n: usize, a: &[u64]) -> IntPolynomial {
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for (k, &ak) in a.iter().enumerate() {
        let c = BigInt::from(ak);
        coeffs[n - k] = if k % 2 == 0 { c } else { -c };
    }
    IntPolynomial::new(coeffs)
}

/// `a_k^2 ≥ a_{k-1} a_{k+1}` at every interior index.
pub fn is_log_concave(a: &[u64]) -> bool {
    a.windows(3)
        .all(|w| (w[1] as u128).pow(2) >= w[0] as u128 * w[2] as u128)
}

/// Every acyclic orientation of `g`, in mask order.
pub fn acyclic_orientations(g: &Graph, budget: &Budget) -> Result<Vec<Orientation>> {
    let m = g.edge_count();
    let total = budget.check_subsets("orientations", m)?;
    let mut out = Vec::new();
    for mask in 0..total {
        let o = Orientation::from_mask(m, mask);
        if o.is_acyclic(g)? {
            out.push(o);
        }
    }
    Ok(out)
}

pub fn acyclic_orientation_count(g: &Graph, budget: &Budget) -> Result<BigUint> {
    Ok(BigUint::from(acyclic_orientations(g, budget)?.len()))
}

/// Number of pairs `(O, κ)` with `O` acyclic and `κ ∈ [t]^V` compatible
/// with `O`, by enumeration.
pub fn compatible_pair_count(g: &Graph, t: u32, budget: &Budget) -> Result<BigUint> {
    let acyclic = acyclic_orientations(g, budget)?;
    let mut count = 0u64;
    for k in colorings_of(g.vertex_count(), t, budget)? {
        for o in &acyclic {
            if is_compatible(g, o, &k)? {
                count += 1;
            }
        }
    }
    Ok(BigUint::from(count))
}

/// `(-1)^n χ(-t)` from a polynomial.
pub fn reciprocity_value(n: usize, chi: &IntPolynomial, t: u32) -> BigInt {
    let v = chi.evaluate_i64(-(t as i64));
    if n.is_multiple_of(2) {
        v
    } else {
        -v
    }
}

/// The acyclic orientations compatible with `k`.
pub fn compatible_orientations(
    g: &Graph,
    k: &Coloring,
    budget: &Budget,
) -> Result<Vec<Orientation>> {
    let mut out = Vec::new();
    for o in acyclic_orientations(g, budget)? {
        if is_compatible(g, &o, k)? {
            out.push(o);
        }
    }
    Ok(out)
}
