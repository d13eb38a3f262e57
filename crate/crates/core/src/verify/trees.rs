//! Labeled tree enumeration, canonical forms of unlabeled trees, and the
//! sweep asking whether `X` separates non-isomorphic trees.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::budget::Budget;
use crate::csf::x_nbc;
use crate::error::{invalid, Result};
use crate::graph::Graph;
use crate::symfunc::{specialize, PSymFunc};

use super::tree_chromatic_polynomial;

/// Largest vertex count accepted by [`enumerate_trees`].
pub const TREE_CAP: usize = 10;

/// All `n^{n-2}` labeled trees on `n` vertices, decoded from Prüfer codes.
pub fn enumerate_trees(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n == 0 || n > TREE_CAP {
        return Err(invalid(format!("tree enumeration needs 1 <= n <= {TREE_CAP}")));
    }
    let len = n.saturating_sub(2);
    let total = (n as u64).pow(len as u32);
    Ok((0..total).map(move |mut code| {
        let mut seq = vec![0; len];
        for s in seq.iter_mut().rev() {
            *s = (code % n as u64) as usize;
            code /= n as u64;
        }
        prufer_decode(n, &seq)
    }))
}

fn prufer_decode(n: usize, seq: &[usize]) -> Graph {
    if n == 1 {
        return Graph::edgeless(1);
    }
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let leaf = (0..n).find(|&u| degree[u] == 1).expect("a leaf exists");
        edges.push((leaf, v));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edge_set(n, edges).expect("Prüfer decoding yields a simple tree")
}

fn centers(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            degree[leaf] = 0;
            for &u in &adj[leaf] {
                if degree[u] > 0 {
                    degree[u] -= 1;
                    if degree[u] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

fn rooted_code(adj: &[Vec<usize>], v: usize, parent: usize) -> Vec<u8> {
    let mut children: Vec<Vec<u8>> = adj[v]
        .iter()
        .filter(|&&c| c != parent)
        .map(|&c| rooted_code(adj, c, v))
        .collect();
    children.sort_unstable();
    let mut out = Vec::with_capacity(2 + children.iter().map(Vec::len).sum::<usize>());
    out.push(b'(');
    for c in children {
        out.extend(c);
    }
    out.push(b')');
    out
}

/// A string equal for two trees exactly when they are isomorphic: the
/// smallest parenthesized rooted code over the tree's centers.
pub fn canonical_tree_code(t: &Graph) -> Result<String> {
    if !t.is_tree() {
        return Err(invalid(format!("{t} is not a tree")));
    }
    let adj = t.adjacency();
    let code = centers(&adj)
        .into_iter()
        .map(|c| rooted_code(&adj, c, usize::MAX))
        .min()
        .expect("a tree has a center");
    Ok(String::from_utf8(code).expect("ascii"))
}

/// A vertex bijection `f` with `{u,v} ∈ E(a) ⇔ {f(u),f(v)} ∈ E(b)`, if the
/// trees are isomorphic.
pub fn tree_isomorphism(a: &Graph, b: &Graph) -> Result<Option<Vec<usize>>> {
    if canonical_tree_code(a)? != canonical_tree_code(b)? {
        return Ok(None);
    }
    let (adj_a, adj_b) = (a.adjacency(), b.adjacency());
    let ra = centers(&adj_a)
        .into_iter()
        .min_by_key(|&c| rooted_code(&adj_a, c, usize::MAX))
        .expect("center");
    let code_a = rooted_code(&adj_a, ra, usize::MAX);
    let rb = centers(&adj_b)
        .into_iter()
        .find(|&c| rooted_code(&adj_b, c, usize::MAX) == code_a)
        .expect("equal canonical codes");
    let mut map = vec![usize::MAX; a.vertex_count()];
    match_rooted(&adj_a, ra, usize::MAX, &adj_b, rb, usize::MAX, &mut map);
    Ok(Some(map))
}

fn match_rooted(
    adj_a: &[Vec<usize>],
    va: usize,
    pa: usize,
    adj_b: &[Vec<usize>],
    vb: usize,
    pb: usize,
    map: &mut [usize],
) {
    map[va] = vb;
    let sorted = |adj: &[Vec<usize>], v: usize, p: usize| {
        let mut cs: Vec<(Vec<u8>, usize)> = adj[v]
            .iter()
            .filter(|&&c| c != p)
            .map(|&c| (rooted_code(adj, c, v), c))
            .collect();
        cs.sort_unstable();
        cs
    };
    let (ca, cb) = (sorted(adj_a, va, pa), sorted(adj_b, vb, pb));
    for ((_, x), (_, y)) in ca.into_iter().zip(cb) {
        match_rooted(adj_a, x, va, adj_b, y, vb, map);
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeCollision {
    pub left: String,
    pub right: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeSweepReport {
    pub n: usize,
    pub labeled_trees: u64,
    pub isomorphism_classes: usize,
    /// Whether every class has `χ = t(t-1)^{n-1}`.
    pub chi_formula_holds: bool,
    /// Pairs of non-isomorphic trees (as edge lists) with equal `X`.
    pub collisions: Vec<TreeCollision>,
}

/// Groups all labeled trees on `n` vertices into isomorphism classes and
/// compares `X` across class representatives.
pub fn tree_conjecture_sweep(n: usize, budget: &Budget) -> Result<TreeSweepReport> {
    let mut classes: BTreeMap<String, Graph> = BTreeMap::new();
    let mut labeled = 0u64;
    for t in enumerate_trees(n)? {
        labeled += 1;
        let code = canonical_tree_code(&t)?;
        classes.entry(code).or_insert(t);
    }
    let formula = tree_chromatic_polynomial(n);
    let mut chi_formula_holds = true;
    let mut seen: Vec<(PSymFunc, &Graph)> = Vec::new();
    let mut collisions = Vec::new();
    for rep in classes.values() {
        let x = x_nbc(rep, budget)?;
        chi_formula_holds &= specialize(&x) == formula;
        if let Some((_, other)) = seen.iter().find(|(y, _)| *y == x) {
            collisions.push(TreeCollision {
                left: other.to_string(),
                right: rep.to_string(),
            });
        }
        seen.push((x, rep));
    }
    Ok(TreeSweepReport {
        n,
        labeled_trees: labeled,
        isomorphism_classes: classes.len(),
        chi_formula_holds,
        collisions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cayley_counts() {
        for n in 1..=7usize {
            let expected = if n == 1 { 1 } else { n.pow(n as u32 - 2) };
            let trees: Vec<Graph> = enumerate_trees(n).unwrap().collect();
            assert_eq!(trees.len(), expected);
            assert!(trees.iter().all(Graph::is_tree));
            let distinct: std::collections::BTreeSet<String> =
                trees.iter().map(|t| t.to_string()).collect();
            assert_eq!(distinct.len(), expected);
        }
        assert!(enumerate_trees(0).is_err());
    }

    #[test]
    fn unlabeled_counts() {
        let expected = [1, 1, 1, 2, 3, 6, 11, 23];
        for (i, &want) in expected.iter().enumerate() {
            let n = i + 1;
            let codes: std::collections::BTreeSet<String> = enumerate_trees(n)
                .unwrap()
                .map(|t| canonical_tree_code(&t).unwrap())
                .collect();
            assert_eq!(codes.len(), want, "n={n}");
        }
    }

    #[test]
    fn isomorphisms_are_edge_bijections() {
        let trees: Vec<Graph> = enumerate_trees(6).unwrap().step_by(37).collect();
        for a in &trees {
            for b in &trees {
                let Some(f) = tree_isomorphism(a, b).unwrap() else {
                    continue;
                };
                let mut image: Vec<(usize, usize)> = a
                    .edges()
                    .iter()
                    .map(|&(u, v)| (f[u].min(f[v]), f[u].max(f[v])))
                    .collect();
                image.sort_unstable();
                let mut target = b.edges().to_vec();
                target.sort_unstable();
                assert_eq!(image, target);
            }
        }
        let star = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(tree_isomorphism(&star, &Graph::path(4)).unwrap(), None);
        assert!(canonical_tree_code(&Graph::complete(3)).is_err());
    }

    #[test]
    fn small_sweep() {
        let r = tree_conjecture_sweep(6, &Budget::default()).unwrap();
        assert_eq!((r.labeled_trees, r.isomorphism_classes), (1296, 6));
        assert!(r.chi_formula_holds);
        assert!(r.collisions.is_empty());
    }
}
