//! The two spanning-subgraph walks behind every expansion: all `2^m` edge
//! subsets, or only the NBC subsets found by a pruned backtracking search.

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{EdgeSubset, Graph, UnionFind};

/// Work done by one expansion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ExpansionStats {
    /// Complete edge subsets handed to the visitor.
    pub subsets: u64,
    /// Search-tree nodes, including the leaves; equals `subsets` for the
    /// full walk.
    pub nodes: u64,
}

/// Calls `visit(edges, components)` for every `S ⊆ E`, where `components`
/// is a union-find over the components of `(V, S)`.
pub(crate) fn walk_all_subsets(
    g: &Graph,
    budget: &Budget,
    mut visit: impl FnMut(&[usize], &mut UnionFind),
) -> Result<ExpansionStats> {
    let m = g.edge_count();
    let total = budget.check_subsets("spanning subgraphs", m)?;
    let mut edges = Vec::with_capacity(m);
    for mask in 0..total {
        edges.clear();
        let mut uf = UnionFind::new(g.vertex_count());
        let mut rest = mask;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let (u, v) = g.edge(i);
            uf.union(u, v);
            edges.push(i);
        }
        visit(&edges, &mut uf);
    }
    Ok(ExpansionStats {
        subsets: total,
        nodes: total,
    })
}

/// Calls `visit` for every NBC edge subset, in lexicographic order of the
/// inclusion decisions (edge 0 first, "exclude" before "include").
///
/// The search decides the edges in increasing order and keeps the invariant
/// that no undecided edge has its endpoints already joined by the chosen
/// ones. An edge is included only if that still holds afterwards, so every
/// leaf is NBC and no branch dies without reaching one.
pub(crate) fn walk_nbc_subsets(
    g: &Graph,
    budget: &Budget,
    mut visit: impl FnMut(&[usize], &mut UnionFind),
) -> Result<ExpansionStats> {
    struct Search<'a, F> {
        g: &'a Graph,
        limit: u64,
        stats: ExpansionStats,
        chosen: Vec<usize>,
        visit: F,
    }

    impl<F: FnMut(&[usize], &mut UnionFind)> Search<'_, F> {
        fn run(&mut self, i: usize, uf: &UnionFind) -> Result<()> {
            self.stats.nodes += 1;
            if self.stats.nodes > self.limit {
                return Err(Error::BudgetExceeded {
                    what: "NBC search nodes",
                    needed: format!("more than {}", self.limit),
                    limit: self.limit,
                });
            }
            let m = self.g.edge_count();
            if i == m {
                self.stats.subsets += 1;
                let mut leaf = uf.clone();
                (self.visit)(&self.chosen, &mut leaf);
                return Ok(());
            }
            self.run(i + 1, uf)?;

            let (u, v) = self.g.edge(i);
            let mut with = uf.clone();
            with.union(u, v);
            let blocked = self.g.edges()[i + 1..]
                .iter()
                .any(|&(a, b)| with.connected(a, b));
            if !blocked {
                self.chosen.push(i);
                self.run(i + 1, &with)?;
                self.chosen.pop();
            }
            Ok(())
        }
    }

    let mut search = Search {
        g,
        limit: budget.subsets,
        stats: ExpansionStats::default(),
        chosen: Vec::new(),
        visit: &mut visit,
    };
    search.run(0, &UnionFind::new(g.vertex_count()))?;
    Ok(search.stats)
}

/// Every NBC edge subset of `g`.
pub fn nbc_subsets(g: &Graph, budget: &Budget) -> Result<Vec<EdgeSubset>> {
    let mut out = Vec::new();
    walk_nbc_subsets(g, budget, |edges, _| {
        out.push(edges.iter().copied().collect())
    })?;
    Ok(out)
}
