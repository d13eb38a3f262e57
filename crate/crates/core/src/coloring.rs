//! Vertex colorings by positive integers.

use num_bigint::BigUint;

use crate::budget::Budget;
use crate::error::{invalid, Result};
use crate::graph::{EdgeSubset, Graph};
use crate::mixed::Orientation;

/// A coloring `κ: V → {1, 2, ...}`, one color per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coloring(Vec<u32>);

impl Coloring {
    pub fn new(colors: Vec<u32>) -> Result<Self> {
        if let Some(v) = colors.iter().position(|&c| c == 0) {
            return Err(invalid(format!("vertex {v} has color 0; colors start at 1")));
        }
        Ok(Coloring(colors))
    }

    pub fn constant(n: usize, color: u32) -> Self {
        assert!(color >= 1);
        Coloring(vec![color; n])
    }

    pub fn colors(&self) -> &[u32] {
        &self.0
    }

    pub fn color(&self, v: usize) -> u32 {
        self.0[v]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_color(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub(crate) fn check(&self, g: &Graph) -> Result<()> {
        if self.0.len() != g.vertex_count() {
            return Err(invalid(format!(
                "coloring has {} entries but the graph has {} vertices",
                self.0.len(),
                g.vertex_count()
            )));
        }
        Ok(())
    }

    /// Exponent vector of the monomial `x^κ` over `vars` variables.
    pub fn exponents(&self, vars: usize) -> Vec<u32> {
        let mut e = vec![0; vars];
        for &c in &self.0 {
            e[c as usize - 1] += 1;
        }
        e
    }

    /// Indices of the edges whose endpoints share a color.
    pub fn monochromatic_edges(&self, g: &Graph) -> Vec<usize> {
        (0..g.edge_count())
            .filter(|&i| {
                let (u, v) = g.edge(i);
                self.0[u] == self.0[v]
            })
            .collect()
    }
}

pub fn is_proper(g: &Graph, k: &Coloring) -> Result<bool> {
    k.check(g)?;
    Ok(g.edges().iter().all(|&(u, v)| k.color(u) != k.color(v)))
}

/// True iff `κ` is constant on each component of `(V, s)`, which is the same
/// as being constant across every edge of `s`.
pub fn is_monochromatic_on(g: &Graph, s: &EdgeSubset, k: &Coloring) -> Result<bool> {
    k.check(g)?;
    g.check_subset(s)?;
    Ok(s.iter().all(|i| {
        let (u, v) = g.edge(i);
        k.color(u) == k.color(v)
    }))
}

/// Number of `[t]`-colorings monochromatic on the components of `s`: `t^c(S)`.
pub fn count_monochromatic_colorings(g: &Graph, s: &EdgeSubset, t: u32) -> Result<BigUint> {
    if t < 1 {
        return Err(invalid("t must be at least 1"));
    }
    let c = crate::graph::component_count(g, s)?;
    Ok(BigUint::from(t).pow(c as u32))
}

/// True iff every arc `u → v` of `o` has `κ(u) ≤ κ(v)`.
pub fn is_compatible(g: &Graph, o: &Orientation, k: &Coloring) -> Result<bool> {
    k.check(g)?;
    o.check(g)?;
    Ok((0..g.edge_count()).all(|i| {
        let (tail, head) = o.arc(g, i);
        k.color(tail) <= k.color(head)
    }))
}

/// All `t^n` colorings `V → [t]` in lexicographic order.
#[derive(Debug, Clone)]
pub struct Colorings {
    t: u32,
    next: Option<Vec<u32>>,
}

impl Iterator for Colorings {
    type Item = Coloring;

    fn next(&mut self) -> Option<Coloring> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        let mut i = succ.len();
        loop {
            if i == 0 {
                break;
            }
            i -= 1;
            if succ[i] < self.t {
                succ[i] += 1;
                self.next = Some(succ);
                break;
            }
            succ[i] = 1;
        }
        Some(Coloring(cur))
    }
}

pub fn enumerate_colorings(g: &Graph, t: u32, budget: &Budget) -> Result<Colorings> {
    colorings_of(g.vertex_count(), t, budget)
}

pub(crate) fn colorings_of(n: usize, t: u32, budget: &Budget) -> Result<Colorings> {
    if t < 1 {
        return Err(invalid("t must be at least 1"));
    }
    budget.check_colorings("colorings", t as u64, n)?;
    Ok(Colorings {
        t,
        next: Some(vec![1; n]),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::component_count;
    use crate::verify::{enumerate_graphs, named_graph, NamedGraph};

    fn fig1() -> Graph {
        named_graph(NamedGraph::Fig1)
    }

    fn col(c: &[u32]) -> Coloring {
        Coloring::new(c.to_vec()).unwrap()
    }

    #[test]
    fn fig1_colorings() {
        let g = fig1();
        // u, v, w, x
        assert!(is_proper(&g, &col(&[3, 4, 1, 3])).unwrap());
        assert!(!is_proper(&g, &col(&[3, 3, 1, 4])).unwrap());
        assert!(is_proper(&Graph::edgeless(3), &col(&[1, 1, 1])).unwrap());
        assert!(is_proper(&g, &col(&[1, 1, 1])).is_err());
        assert!(Coloring::new(vec![0, 1]).is_err());
    }

    #[test]
    fn monochromatic_on_subsets() {
        let g = fig1();
        let s23 = EdgeSubset::from_indices([1, 2]);
        assert!(is_monochromatic_on(&g, &EdgeSubset::new(), &col(&[1, 2, 3, 4])).unwrap());
        assert!(is_monochromatic_on(&g, &s23, &col(&[3, 3, 3, 1])).unwrap());
        assert!(!is_monochromatic_on(&g, &EdgeSubset::from_indices([1]), &col(&[3, 4, 1, 3])).unwrap());
        assert_eq!(count_monochromatic_colorings(&g, &s23, 4).unwrap(), BigUint::from(16u32));
        assert_eq!(
            count_monochromatic_colorings(&g, &EdgeSubset::new(), 3).unwrap(),
            BigUint::from(81u32)
        );
        assert_eq!(count_monochromatic_colorings(&g, &g.all_edges(), 5).unwrap(), BigUint::from(5u32));
        assert!(count_monochromatic_colorings(&g, &s23, 0).is_err());
    }

    #[test]
    fn fig3_compatibility() {
        let g = fig1();
        // arcs w->v, w->u, v->u, v->x with u=0, v=1, w=2, x=3
        let arcs = [(2, 0), (2, 1), (1, 0), (1, 3)];
        let dirs = (0..4)
            .map(|i| {
                let (lo, hi) = g.edge(i);
                arcs.contains(&(lo, hi))
            })
            .collect();
        let o = Orientation::new(dirs);
        assert!(is_compatible(&g, &o, &col(&[3, 3, 1, 4])).unwrap());
        assert!(is_compatible(&g, &o, &Coloring::constant(4, 2)).unwrap());
        let k2 = Graph::complete(2);
        assert!(!is_compatible(&k2, &Orientation::new(vec![true]), &col(&[2, 1])).unwrap());
    }

    #[test]
    fn enumeration_order_and_counts() {
        let b = Budget::default();
        let one: Vec<_> = enumerate_colorings(&Graph::edgeless(1), 2, &b).unwrap().collect();
        assert_eq!(one, vec![col(&[1]), col(&[2])]);
        let two: Vec<_> = enumerate_colorings(&Graph::edgeless(2), 2, &b).unwrap().collect();
        assert_eq!(two, vec![col(&[1, 1]), col(&[1, 2]), col(&[2, 1]), col(&[2, 2])]);
        let g = fig1();
        let all: Vec<_> = enumerate_colorings(&g, 3, &b).unwrap().collect();
        assert_eq!(all.len(), 81);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        // proper count checked against a direct filter on raw tuples
        let direct = (0..81u32)
            .filter(|code| {
                let c: Vec<u32> = (0..4).map(|k| code / 3u32.pow(3 - k) % 3).collect();
                g.edges().iter().all(|&(u, v)| c[u] != c[v])
            })
            .count();
        assert_eq!(all.iter().filter(|k| is_proper(&g, k).unwrap()).count(), direct);
        assert_eq!(enumerate_colorings(&Graph::edgeless(0), 3, &b).unwrap().count(), 1);
        let tight = Budget { colorings: 80, ..b };
        assert!(enumerate_colorings(&g, 3, &tight).is_err());
    }

    #[test]
    fn proper_and_monochromatic_only_on_empty_subset() {
        let b = Budget::default();
        for n in 1..=5 {
            for g in enumerate_graphs(n).unwrap() {
                let m = g.edge_count();
                let colorings: Vec<_> = enumerate_colorings(&g, 3, &b).unwrap().collect();
                for mask in 0..1u64 << m {
                    let s = EdgeSubset::from_mask(mask);
                    let mut mono = 0u64;
                    for k in &colorings {
                        let is_mono = is_monochromatic_on(&g, &s, k).unwrap();
                        if is_mono && is_proper(&g, k).unwrap() {
                            assert!(s.is_empty());
                        }
                        mono += is_mono as u64;
                    }
                    let c = component_count(&g, &s).unwrap() as u32;
                    assert_eq!(mono, 3u64.pow(c));
                }
            }
        }
    }

    #[test]
    fn relabeling_colors_keeps_properness() {
        use rand::seq::SliceRandom;
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let g = named_graph(NamedGraph::Net);
        for _ in 0..500 {
            let k = col(&(0..6).map(|_| rng.gen_range(1..=4)).collect::<Vec<_>>());
            let mut perm: Vec<u32> = (1..=4).collect();
            perm.shuffle(&mut rng);
            let relabeled = col(&k.colors().iter().map(|&c| perm[c as usize - 1]).collect::<Vec<_>>());
            assert_eq!(is_proper(&g, &k).unwrap(), is_proper(&g, &relabeled).unwrap());
        }
    }
}
