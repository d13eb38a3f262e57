//! Mixed graphs (undirected edges plus arcs), orientations, and cycles in
//! the mixed sense: a closed path on more than one vertex that may walk an
//! edge in either direction but an arc only forwards.

use std::collections::BTreeSet;

use crate::error::{invalid, precondition, Result};
use crate::graph::{Graph, UnionFind};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MixedGraph {
    n: usize,
    /// Stored as `(low, high)`.
    edges: BTreeSet<(usize, usize)>,
    /// Stored as `(tail, head)`.
    arcs: BTreeSet<(usize, usize)>,
}

impl MixedGraph {
    /// Builds a mixed graph. A vertex pair may carry an edge and arcs at
    /// the same time (that is already a cycle); loops are rejected.
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
        arcs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let check = |u: usize, v: usize, what: &str| -> Result<()> {
            if u >= n || v >= n || u == v {
                return Err(invalid(format!(
                    "{what} ({u},{v}) is not a pair of distinct vertices in 0..{n}"
                )));
            }
            Ok(())
        };
        let mut e = BTreeSet::new();
        for (u, v) in edges {
            check(u, v, "edge")?;
            e.insert((u.min(v), u.max(v)));
        }
        let mut a = BTreeSet::new();
        for (u, v) in arcs {
            check(u, v, "arc")?;
            a.insert((u, v));
        }
        Ok(MixedGraph { n, edges: e, arcs: a })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.arcs.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn has_arc(&self, tail: usize, head: usize) -> bool {
        self.arcs.contains(&(tail, head))
    }

    /// True iff the mixed graph contains no cycle.
    ///
    /// Equivalent to: the undirected edges form a forest, and the digraph
    /// obtained by contracting every edge component to a point has no
    /// directed cycle and no loop.
    pub fn is_acyclic(&self) -> bool {
        acyclic_parts(self.n, self.edges.iter().copied(), self.arcs.iter().copied())
    }

    fn step_valid(&self, from: usize, step: Step) -> bool {
        match step {
            Step::Edge(to) => self.has_edge(from, to),
            Step::Arc(to) => self.has_arc(from, to),
        }
    }
}

/// The test behind [`MixedGraph::is_acyclic`], on raw edge and arc lists.
pub(crate) fn acyclic_parts(
    n: usize,
    edges: impl Iterator<Item = (usize, usize)>,
    arcs: impl Iterator<Item = (usize, usize)>,
) -> bool {
    let mut uf = UnionFind::new(n);
    for (u, v) in edges {
        if !uf.union(u, v) {
            return false;
        }
    }
    let comp: Vec<usize> = (0..n).map(|v| uf.find(v)).collect();
    let mut indeg = vec![0usize; n];
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (t, h) in arcs {
        let (ct, ch) = (comp[t], comp[h]);
        if ct == ch {
            return false;
        }
        out[ct].push(ch);
        indeg[ch] += 1;
    }
    // Kahn's algorithm over component representatives.
    let reps: Vec<usize> = (0..n).filter(|&v| comp[v] == v).collect();
    let mut stack: Vec<usize> = reps.iter().copied().filter(|&r| indeg[r] == 0).collect();
    let mut removed = 0;
    while let Some(r) = stack.pop() {
        removed += 1;
        for &h in &out[r] {
            indeg[h] -= 1;
            if indeg[h] == 0 {
                stack.push(h);
            }
        }
    }
    removed == reps.len()
}

/// `mixed_is_acyclic` as a free function.
pub fn mixed_is_acyclic(m: &MixedGraph) -> bool {
    m.is_acyclic()
}

/// One move of a walk: along an undirected edge or forwards along an arc,
/// to the named vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    Edge(usize),
    Arc(usize),
}

impl Step {
    pub fn target(self) -> usize {
        match self {
            Step::Edge(v) | Step::Arc(v) => v,
        }
    }

    pub fn is_arc(self) -> bool {
        matches!(self, Step::Arc(_))
    }
}

/// A walk `v0, c1, v1, ..., ck, vk`, stored as its start and its steps.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Walk {
    pub start: usize,
    pub steps: Vec<Step>,
}

impl Walk {
    pub fn new(start: usize, steps: Vec<Step>) -> Self {
        Walk { start, steps }
    }

    pub fn vertices(&self) -> Vec<usize> {
        std::iter::once(self.start)
            .chain(self.steps.iter().map(|s| s.target()))
            .collect()
    }

    pub fn is_closed(&self) -> bool {
        self.steps.last().is_none_or(|s| s.target() == self.start)
    }

    pub fn traverses_arc(&self) -> bool {
        self.steps.iter().any(|s| s.is_arc())
    }

    pub fn is_valid_in(&self, m: &MixedGraph) -> bool {
        if self.start >= m.vertex_count() {
            return false;
        }
        let mut at = self.start;
        for &s in &self.steps {
            if !m.step_valid(at, s) {
                return false;
            }
            at = s.target();
        }
        true
    }

    /// Whether this walk is a cycle of `m`: valid, closed, more than one
    /// vertex, and no repeated vertex, edge or arc apart from the shared
    /// first/last vertex.
    pub fn is_cycle_in(&self, m: &MixedGraph) -> bool {
        if !self.is_valid_in(m) || !self.is_closed() || self.steps.len() < 2 {
            return false;
        }
        let vs = self.vertices();
        let inner = &vs[..vs.len() - 1];
        if inner.iter().collect::<BTreeSet<_>>().len() != inner.len() {
            return false;
        }
        let mut used = BTreeSet::new();
        vs.windows(2).zip(&self.steps).all(|(w, s)| {
            let key = match s {
                Step::Edge(_) => (false, w[0].min(w[1]), w[0].max(w[1])),
                Step::Arc(_) => (true, w[0], w[1]),
            };
            used.insert(key)
        })
    }
}

/// Shortens a closed walk that traverses at least one arc down to a cycle.
///
/// While some vertex repeats (other than as first-and-last), the walk splits
/// into two shorter closed walks at that vertex, and one of them still
/// traverses an arc; that one is kept.
pub fn extract_cycle(m: &MixedGraph, walk: &Walk) -> Result<Walk> {
    if !walk.is_valid_in(m) {
        return Err(precondition("walk is not a walk of the mixed graph"));
    }
    if !walk.is_closed() {
        return Err(precondition("walk is not closed"));
    }
    if !walk.traverses_arc() {
        return Err(precondition("walk traverses no arc"));
    }
    let mut w = walk.clone();
    loop {
        let vs = w.vertices();
        let k = w.steps.len();
        let repeat = (0..k).find_map(|i| {
            ((i + 1)..=k)
                .find(|&j| vs[i] == vs[j] && !(i == 0 && j == k))
                .map(|j| (i, j))
        });
        let Some((i, j)) = repeat else {
            debug_assert!(w.is_cycle_in(m));
            return Ok(w);
        };
        let inner = Walk::new(vs[i], w.steps[i..j].to_vec());
        if inner.traverses_arc() {
            w = inner;
        } else {
            // Rotate so the outer part starts at v_j.
            let mut steps = w.steps[j..].to_vec();
            steps.extend_from_slice(&w.steps[..i]);
            w = Walk::new(vs[j], steps);
        }
    }
}

/// An orientation of every edge of a graph. Bit `i` is true when edge `i`
/// points from its lower endpoint to its higher one.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Orientation {
    direction: Vec<bool>,
}

impl Orientation {
    pub fn new(direction: Vec<bool>) -> Self {
        Orientation { direction }
    }

    /// Bit `i` of `mask` orients edge `i` low-to-high.
    pub fn from_mask(m: usize, mask: u64) -> Self {
        Orientation {
            direction: (0..m).map(|i| mask >> i & 1 == 1).collect(),
        }
    }

    pub fn all_low_to_high(m: usize) -> Self {
        Orientation {
            direction: vec![true; m],
        }
    }

    pub fn len(&self) -> usize {
        self.direction.len()
    }

    pub fn is_empty(&self) -> bool {
        self.direction.is_empty()
    }

    pub fn directions(&self) -> &[bool] {
        &self.direction
    }

    pub fn low_to_high(&self, i: usize) -> bool {
        self.direction[i]
    }

    /// `(tail, head)` of edge `i` of `g` under this orientation.
    pub fn arc(&self, g: &Graph, i: usize) -> (usize, usize) {
        let (lo, hi) = g.edge(i);
        if self.direction[i] {
            (lo, hi)
        } else {
            (hi, lo)
        }
    }

    pub(crate) fn check(&self, g: &Graph) -> Result<()> {
        if self.direction.len() != g.edge_count() {
            return Err(invalid(format!(
                "orientation has {} directions but the graph has {} edges",
                self.direction.len(),
                g.edge_count()
            )));
        }
        Ok(())
    }

    /// The all-arcs mixed graph.
    pub fn to_mixed(&self, g: &Graph) -> Result<MixedGraph> {
        self.check(g)?;
        MixedGraph::new(
            g.vertex_count(),
            [],
            (0..g.edge_count()).map(|i| self.arc(g, i)),
        )
    }

    pub fn is_acyclic(&self, g: &Graph) -> Result<bool> {
        self.check(g)?;
        let n = g.vertex_count();
        let mut out = vec![Vec::new(); n];
        let mut indegree = vec![0usize; n];
        for i in 0..g.edge_count() {
            let (tail, head) = self.arc(g, i);
            out[tail].push(head);
            indegree[head] += 1;
        }
        let mut ready: Vec<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
        let mut removed = 0;
        while let Some(v) = ready.pop() {
            removed += 1;
            for &w in &out[v] {
                indegree[w] -= 1;
                if indegree[w] == 0 {
                    ready.push(w);
                }
            }
        }
        Ok(removed == n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    // u=0, v=1, w=2, x=3
    #[test]
    fn fig3_orientation_is_acyclic() {
        let m = MixedGraph::new(4, [], [(2, 1), (2, 0), (1, 0), (1, 3)]).unwrap();
        assert!(m.is_acyclic());
    }

    #[test]
    fn simple_cases() {
        let forest = MixedGraph::new(4, [(0, 1), (1, 2), (1, 3)], []).unwrap();
        assert!(forest.is_acyclic());
        let tri = MixedGraph::new(3, [], [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(!tri.is_acyclic());
        let two_cycle = MixedGraph::new(3, [(0, 2), (1, 2)], [(0, 1)]).unwrap();
        assert!(!two_cycle.is_acyclic());
        let arc_and_edge = MixedGraph::new(2, [(0, 1)], [(0, 1)]).unwrap();
        assert!(!arc_and_edge.is_acyclic());
        let opposite = MixedGraph::new(2, [], [(0, 1), (1, 0)]).unwrap();
        assert!(!opposite.is_acyclic());
        assert!(MixedGraph::new(2, [], [(0, 0)]).is_err());
        assert!(MixedGraph::new(2, [(0, 2)], []).is_err());
    }

    /// Direct search for a cycle by extending paths; the oracle for
    /// `is_acyclic`.
    fn has_cycle_by_search(m: &MixedGraph) -> bool {
        fn moves(m: &MixedGraph, at: usize) -> Vec<Step> {
            let mut out = Vec::new();
            for v in 0..m.vertex_count() {
                if m.has_edge(at, v) {
                    out.push(Step::Edge(v));
                }
                if m.has_arc(at, v) {
                    out.push(Step::Arc(v));
                }
            }
            out
        }
        fn dfs(m: &MixedGraph, w: &mut Walk, limit: usize) -> bool {
            if w.steps.len() >= 2 && w.is_closed() {
                return w.is_cycle_in(m);
            }
            if w.steps.len() == limit {
                return false;
            }
            let at = w.steps.last().map_or(w.start, |s| s.target());
            for s in moves(m, at) {
                w.steps.push(s);
                let ok = dfs(m, w, limit);
                w.steps.pop();
                if ok {
                    return true;
                }
            }
            false
        }
        (0..m.vertex_count()).any(|v| dfs(m, &mut Walk::new(v, Vec::new()), 2 * m.vertex_count()))
    }

    fn mixed_from_codes(n: usize, codes: impl Iterator<Item = usize>) -> MixedGraph {
        // Per vertex pair, a 3-bit mask: edge, arc up, arc down.
        let (mut edges, mut arcs) = (Vec::new(), Vec::new());
        let pairs = (0..n).flat_map(|v| (0..v).map(move |u| (u, v)));
        for ((u, v), c) in pairs.zip(codes) {
            if c & 1 != 0 {
                edges.push((u, v));
            }
            if c & 2 != 0 {
                arcs.push((u, v));
            }
            if c & 4 != 0 {
                arcs.push((v, u));
            }
        }
        MixedGraph::new(n, edges, arcs).unwrap()
    }

    #[test]
    fn acyclicity_matches_search_up_to_four_vertices() {
        for n in 1..=4usize {
            let pairs = n * (n - 1) / 2;
            for code in 0..8usize.pow(pairs as u32) {
                let m = mixed_from_codes(n, (0..pairs).map(|k| code >> (3 * k) & 7));
                assert_eq!(m.is_acyclic(), !has_cycle_by_search(&m), "{m:?}");
            }
        }
    }

    #[test]
    fn orientation_acyclicity_matches_mixed_route() {
        for n in 0..=5 {
            for g in crate::verify::enumerate_graphs(n).unwrap() {
                let m = g.edge_count();
                for mask in 0..1u64 << m {
                    let o = Orientation::from_mask(m, mask);
                    assert_eq!(o.is_acyclic(&g).unwrap(), o.to_mixed(&g).unwrap().is_acyclic());
                }
            }
        }
    }

    #[test]
    fn extract_from_doubled_two_cycle() {
        // u=0, v=1: the cycle u, ->uv, v, vu, u walked twice
        let m = MixedGraph::new(2, [(0, 1)], [(0, 1)]).unwrap();
        let once = vec![Step::Arc(1), Step::Edge(0)];
        let cycle = Walk::new(0, once.clone());
        assert!(cycle.is_cycle_in(&m));
        assert_eq!(extract_cycle(&m, &cycle).unwrap(), cycle);
        let doubled = Walk::new(0, [once.clone(), once].concat());
        assert!(!doubled.is_cycle_in(&m));
        assert_eq!(extract_cycle(&m, &doubled).unwrap(), cycle);
        // the same pair walked along the edge twice is not a path
        assert!(!Walk::new(0, vec![Step::Edge(1), Step::Edge(0)]).is_cycle_in(&m));
    }

    #[test]
    fn extract_rejects_bad_walks() {
        let m = MixedGraph::new(3, [(0, 1)], [(1, 2)]).unwrap();
        let not_in_m = Walk::new(0, vec![Step::Arc(1), Step::Edge(0)]);
        assert!(extract_cycle(&m, &not_in_m).is_err());
        let no_arc = Walk::new(0, vec![Step::Edge(1), Step::Edge(0)]);
        assert!(extract_cycle(&m, &no_arc).is_err());
        let open = Walk::new(0, vec![Step::Edge(1), Step::Arc(2)]);
        assert!(extract_cycle(&m, &open).is_err());
    }

    fn arb_mixed() -> impl Strategy<Value = MixedGraph> {
        (2usize..=6).prop_flat_map(|n| {
            proptest::collection::vec(0usize..8, n * (n - 1) / 2)
                .prop_map(move |codes| mixed_from_codes(n, codes.into_iter()))
        })
    }

    /// A random closed walk: random moves from a random arc, then a shortest
    /// undirected-or-forward route home, when one exists.
    fn closed_walk(m: &MixedGraph, seed: &[u8]) -> Option<Walk> {
        let arcs: Vec<_> = m.arcs().collect();
        if arcs.is_empty() {
            return None;
        }
        let (t, h) = arcs[seed[0] as usize % arcs.len()];
        let mut steps = vec![Step::Arc(h)];
        let mut at = h;
        for &b in &seed[1..] {
            let mut opts = Vec::new();
            for v in 0..m.vertex_count() {
                if m.has_edge(at, v) {
                    opts.push(Step::Edge(v));
                }
                if m.has_arc(at, v) {
                    opts.push(Step::Arc(v));
                }
            }
            if opts.is_empty() {
                break;
            }
            let s = opts[b as usize % opts.len()];
            steps.push(s);
            at = s.target();
        }
        // BFS back to t
        let n = m.vertex_count();
        let mut prev: Vec<Option<(usize, Step)>> = vec![None; n];
        let mut seen = vec![false; n];
        let mut queue = std::collections::VecDeque::from([at]);
        seen[at] = true;
        while let Some(x) = queue.pop_front() {
            for v in 0..n {
                let s = if m.has_edge(x, v) {
                    Step::Edge(v)
                } else if m.has_arc(x, v) {
                    Step::Arc(v)
                } else {
                    continue;
                };
                if !seen[v] {
                    seen[v] = true;
                    prev[v] = Some((x, s));
                    queue.push_back(v);
                }
            }
        }
        if !seen[t] {
            return None;
        }
        let mut back = Vec::new();
        let mut x = t;
        while x != at {
            let (p, s) = prev[x].unwrap();
            back.push(s);
            x = p;
        }
        back.reverse();
        steps.extend(back);
        Some(Walk::new(t, steps))
    }

    proptest! {
        #[test]
        fn extracted_cycles_are_cycles(
            m in arb_mixed(),
            seed in proptest::collection::vec(any::<u8>(), 1..12),
        ) {
            if let Some(w) = closed_walk(&m, &seed) {
                prop_assert!(w.is_valid_in(&m) && w.is_closed() && w.traverses_arc());
                let c = extract_cycle(&m, &w).unwrap();
                prop_assert!(c.is_cycle_in(&m));
                prop_assert!(c.steps.len() <= w.steps.len());
                prop_assert!(!m.is_acyclic());
            }
        }
    }
}
