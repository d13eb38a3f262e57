//! Simple graphs with a fixed total order on their edges, and the
//! spanning-subgraph machinery built on top of them.
//!
//! Edges are identified by their position in [`Graph::edges`]; position `i`
//! is the edge usually written `e_{i+1}`, and the order of positions is the
//! edge order used for broken circuits.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::error::{invalid, Result};
use crate::symfunc::Partition;

/// A simple, loop-free graph on vertices `0..n` whose edge sequence fixes
/// the edge order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    /// Endpoints stored as `(low, high)`.
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph keeping the given edge order.
    ///
    /// Endpoint order inside a pair is irrelevant; loops, duplicate edges and
    /// out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for (i, (u, v)) in edges.into_iter().enumerate() {
            if u >= n || v >= n {
                return Err(invalid(format!(
                    "edge {} = {{{u},{v}}} has an endpoint outside 0..{n}",
                    i + 1
                )));
            }
            if u == v {
                return Err(invalid(format!("edge {} is a loop at vertex {u}", i + 1)));
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(invalid(format!(
                    "edge {} = {{{},{}}} is repeated",
                    i + 1,
                    e.0,
                    e.1
                )));
            }
            out.push(e);
        }
        Ok(Graph { n, edges: out })
    }

    /// Builds a graph whose edge order is lexicographic in `(min, max)`.
    pub fn from_edge_set(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::new(n, edges)?;
        g.edges.sort_unstable();
        Ok(g)
    }

    pub fn edgeless(n: usize) -> Self {
        Graph { n, edges: Vec::new() }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|v| (0..v).map(move |u| (u, v)));
        Graph::from_edge_set(n, edges).expect("complete graph is simple")
    }

    pub fn path(n: usize) -> Self {
        Graph::new(n, (1..n).map(|v| (v - 1, v))).expect("path is simple")
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(invalid("a simple cycle needs at least 3 vertices"));
        }
        Graph::new(n, (0..n).map(|v| (v, (v + 1) % n)))
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Endpoints `(low, high)` of the edge at `index`.
    pub fn edge(&self, index: usize) -> (usize, usize) {
        self.edges[index]
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let e = (u.min(v), u.max(v));
        self.edges.iter().position(|&f| f == e)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg.sort_unstable();
        deg
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// The subgraph on the same vertex set whose edges are the given indices,
    /// in increasing index order. The new edge at position `k` is the old
    /// edge `indices[k]`.
    pub fn edge_subgraph(&self, indices: &[usize]) -> Graph {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        Graph {
            n: self.n,
            edges: indices.iter().map(|&i| self.edges[i]).collect(),
        }
    }

    pub fn all_edges(&self) -> EdgeSubset {
        EdgeSubset::from_indices(0..self.edge_count())
    }

    pub(crate) fn check_subset(&self, s: &EdgeSubset) -> Result<()> {
        match s.max_index() {
            Some(i) if i >= self.edge_count() => Err(invalid(format!(
                "edge index {} out of range for a graph with {} edges",
                i + 1,
                self.edge_count()
            ))),
            _ => Ok(()),
        }
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || component_count(self, &self.all_edges()).unwrap() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edge_count() + 1 == self.n && self.is_connected()
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} edges=[", self.n)?;
        for (i, (u, v)) in self.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("]")
    }
}

/// A set of edge indices, i.e. a spanning subgraph.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct EdgeSubset {
    // No trailing zero words, so derived equality is set equality.
    words: Vec<u64>,
}

impl EdgeSubset {
    pub fn new() -> Self {
        EdgeSubset::default()
    }

    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> Self {
        let mut s = EdgeSubset::new();
        for i in indices {
            s.insert(i);
        }
        s
    }

    /// Bit `i` of `mask` selects edge `i`.
    pub fn from_mask(mask: u64) -> Self {
        let mut s = EdgeSubset { words: vec![mask] };
        s.trim();
        s
    }

    /// The low 64 edges as a bitmask, or `None` if any index is ≥ 64.
    pub fn to_mask(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words
            .get(i / 64)
            .is_some_and(|w| w >> (i % 64) & 1 == 1)
    }

    pub fn insert(&mut self, i: usize) -> bool {
        let w = i / 64;
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        let was = self.words[w] >> (i % 64) & 1 == 1;
        self.words[w] |= 1 << (i % 64);
        !was
    }

    pub fn remove(&mut self, i: usize) -> bool {
        let was = self.contains(i);
        if was {
            self.words[i / 64] &= !(1 << (i % 64));
            self.trim();
        }
        was
    }

    /// Symmetric difference with the single edge `i`.
    pub fn toggle(&mut self, i: usize) {
        if !self.remove(i) {
            self.insert(i);
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_subset(&self, other: &EdgeSubset) -> bool {
        self.words.len() <= other.words.len()
            && self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * 64 + b)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn max_index(&self) -> Option<usize> {
        let last = *self.words.last()?;
        Some((self.words.len() - 1) * 64 + 63 - last.leading_zeros() as usize)
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }
}

impl FromIterator<usize> for EdgeSubset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        EdgeSubset::from_indices(iter)
    }
}

/// Ordered as sorted index sequences, lexicographically.
impl Ord for EdgeSubset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for EdgeSubset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Printed with 1-based edge labels, `{e1,e2}`.
impl fmt::Debug for EdgeSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "e{}", i + 1)?;
        }
        f.write_str("}")
    }
}

/// Disjoint-set forest with union by size and path halving.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
    sets: usize,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
            sets: n,
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the sets of `a` and `b`; returns false if they were already one.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.sets -= 1;
        true
    }

    pub fn connected(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }

    pub fn set_count(&self) -> usize {
        self.sets
    }

    /// Sizes of all sets, weakly decreasing.
    pub fn set_sizes(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = (0..self.parent.len())
            .filter(|&x| self.parent[x] == x)
            .map(|x| self.size[x])
            .collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        sizes
    }
}

/// A set partition of the vertices; blocks are sorted internally and
/// ordered by their minimum vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexPartition {
    blocks: Vec<Vec<usize>>,
}

impl VertexPartition {
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_of(&self, v: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.binary_search(&v).is_ok())
    }
}

fn union_find_of(g: &Graph, s: &EdgeSubset) -> Result<UnionFind> {
    g.check_subset(s)?;
    let mut uf = UnionFind::new(g.vertex_count());
    for i in s.iter() {
        let (u, v) = g.edge(i);
        uf.union(u, v);
    }
    Ok(uf)
}

/// Connected components of the spanning subgraph `(V, s)`.
pub fn components(g: &Graph, s: &EdgeSubset) -> Result<VertexPartition> {
    let mut uf = union_find_of(g, s)?;
    let mut root_block = vec![usize::MAX; g.vertex_count()];
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    // Visiting vertices in increasing order creates blocks by minimum vertex.
    for v in 0..g.vertex_count() {
        let r = uf.find(v);
        if root_block[r] == usize::MAX {
            root_block[r] = blocks.len();
            blocks.push(Vec::new());
        }
        blocks[root_block[r]].push(v);
    }
    Ok(VertexPartition { blocks })
}

/// `c(S)`, the number of components of `(V, s)`.
pub fn component_count(g: &Graph, s: &EdgeSubset) -> Result<usize> {
    Ok(union_find_of(g, s)?.set_count())
}

/// `λ(S)`: the component sizes of `(V, s)` in weakly decreasing order.
pub fn lambda_of(g: &Graph, s: &EdgeSubset) -> Result<Partition> {
    let sizes = union_find_of(g, s)?.set_sizes();
    Ok(Partition::from_sorted_sizes(&sizes))
}

pub fn is_forest(g: &Graph, s: &EdgeSubset) -> Result<bool> {
    g.check_subset(s)?;
    let mut uf = UnionFind::new(g.vertex_count());
    Ok(s.iter().all(|i| {
        let (u, v) = g.edge(i);
        uf.union(u, v)
    }))
}

/// True iff `s` contains no broken circuit.
///
/// `s` contains a broken circuit exactly when some edge `f = uv` has its
/// endpoints joined by the edges of `s` that precede `f`; sweeping the edges
/// in order with a union-find answers that for every `f` at once.
pub fn is_nbc(g: &Graph, s: &EdgeSubset) -> Result<bool> {
    g.check_subset(s)?;
    let mut uf = UnionFind::new(g.vertex_count());
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        if uf.connected(u, v) {
            return Ok(false);
        }
        if s.contains(i) {
            uf.union(u, v);
        }
    }
    Ok(true)
}

/// Edge sets of every cycle of `g`, sorted. Exponential; desk scale only.
pub fn cycles(g: &Graph) -> Vec<EdgeSubset> {
    let adj = g.adjacency();
    let mut found = BTreeSet::new();
    let mut on_path = vec![false; g.vertex_count()];
    let mut path_edges = Vec::new();

    // Each cycle is rooted at its minimum vertex and only extended through
    // larger vertices.
    fn extend(
        g: &Graph,
        adj: &[Vec<usize>],
        root: usize,
        at: usize,
        on_path: &mut [bool],
        path_edges: &mut Vec<usize>,
        found: &mut BTreeSet<EdgeSubset>,
    ) {
        for &w in &adj[at] {
            let e = g.edge_index(at, w).expect("adjacent vertices share an edge");
            if w == root && path_edges.len() >= 2 {
                let mut c = EdgeSubset::from_indices(path_edges.iter().copied());
                c.insert(e);
                found.insert(c);
            } else if w > root && !on_path[w] {
                on_path[w] = true;
                path_edges.push(e);
                extend(g, adj, root, w, on_path, path_edges, found);
                path_edges.pop();
                on_path[w] = false;
            }
        }
    }

    for root in 0..g.vertex_count() {
        on_path[root] = true;
        extend(g, &adj, root, root, &mut on_path, &mut path_edges, &mut found);
        on_path[root] = false;
    }
    found.into_iter().collect()
}

/// All broken circuits `C - max C`, deduplicated and sorted.
pub fn broken_circuits(g: &Graph) -> Vec<EdgeSubset> {
    let set: BTreeSet<EdgeSubset> = cycles(g)
        .into_iter()
        .map(|mut c| {
            let top = c.max_index().expect("cycles are nonempty");
            c.remove(top);
            c
        })
        .collect();
    set.into_iter().collect()
}
