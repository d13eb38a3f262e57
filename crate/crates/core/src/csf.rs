//! The chromatic symmetric function `X(G; x)` and its relatives.

use num_bigint::BigInt;
use num_traits::One;

use crate::budget::Budget;
use crate::chromatic::acyclic_orientations;
use crate::coloring::{colorings_of, is_compatible, is_proper};
use crate::error::Result;
use crate::expansion::{walk_all_subsets, walk_nbc_subsets};
use crate::graph::Graph;
use crate::symfunc::{MonomialMap, PSymFunc, Partition};

fn accumulate(
    walk: impl FnOnce(&mut dyn FnMut(&[usize], &mut crate::graph::UnionFind)) -> Result<()>,
) -> Result<PSymFunc> {
    let mut counts: std::collections::HashMap<Partition, i64> = Default::default();
    walk(&mut |edges, uf| {
        let lambda = Partition::from_sorted_sizes(&uf.set_sizes());
        *counts.entry(lambda).or_default() += if edges.len() % 2 == 0 { 1 } else { -1 };
    })?;
    Ok(PSymFunc::from_counts(counts))
}

/// `X(G) = Σ_{S ⊆ E} (-1)^{|S|} p_{λ(S)}`.
pub fn x_all_subgraphs(g: &Graph, budget: &Budget) -> Result<PSymFunc> {
    accumulate(|f| walk_all_subsets(g, budget, f).map(drop))
}

/// `X(G) = Σ_{S NBC} (-1)^{|S|} p_{λ(S)}`.
pub fn x_nbc(g: &Graph, budget: &Budget) -> Result<PSymFunc> {
    accumulate(|f| walk_nbc_subsets(g, budget, f).map(drop))
}

/// `Σ x^κ` over proper colorings `κ: V → [μ]`.
pub fn x_bruteforce(g: &Graph, mu: usize, budget: &Budget) -> Result<MonomialMap> {
    let mut out = MonomialMap::new(mu);
    for k in colorings_of(g.vertex_count(), mu as u32, budget)? {
        if is_proper(g, &k)? {
            out.add_term(k.exponents(mu), BigInt::one());
        }
    }
    Ok(out)
}

/// `Σ x^κ` over pairs `(O, κ)` with `O` acyclic and `κ: V → [μ]` compatible.
pub fn compat_generating(g: &Graph, mu: usize, budget: &Budget) -> Result<MonomialMap> {
    let acyclic = acyclic_orientations(g, budget)?;
    let mut out = MonomialMap::new(mu);
    for k in colorings_of(g.vertex_count(), mu as u32, budget)? {
        let mut hits = 0u64;
        for o in &acyclic {
            if is_compatible(g, o, &k)? {
                hits += 1;
            }
        }
        out.add_term(k.exponents(mu), BigInt::from(hits));
    }
    Ok(out)
}
