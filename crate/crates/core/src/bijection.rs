//! Bijections between acyclic orientations and NBC spanning subgraphs.
//!
//! The map is built one edge at a time. At stage `i` the first `i` edges
//! have been turned into "present or absent" (an NBC set) and the rest are
//! still arcs; each step either unorients the next arc or deletes it, and
//! the inverse step puts an orientation back. Each edge has a fixed
//! *normal* orientation, from its lower-numbered endpoint to its higher one.
//!
//! [`phi_colored`] and [`psi_colored`] extend this to pairs of an
//! orientation and a compatible coloring, one color class at a time.

use std::fmt;

use crate::coloring::{is_compatible, is_monochromatic_on, Coloring};
use crate::error::{invalid, precondition, Result};
use crate::graph::{is_nbc, EdgeSubset, Graph};
use crate::mixed::{acyclic_parts, MixedGraph, Orientation};

/// What a single edge looks like at some stage.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeState {
    Absent,
    Undirected,
    Normal,
    Abnormal,
}

/// The arc of edge `i` in its normal orientation, `(low, high)`.
pub fn normal_arc(g: &Graph, i: usize) -> Result<(usize, usize)> {
    if i >= g.edge_count() {
        return Err(invalid(format!("edge index {} out of range", i + 1)));
    }
    Ok(g.edge(i))
}

/// A member of the intermediate set at stage `stage`: edges before `stage`
/// are absent or undirected (and form an NBC set), edges from `stage` on are
/// arcs, and the whole mixed graph is acyclic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StagedMixed {
    stage: usize,
    states: Vec<EdgeState>,
}

impl StagedMixed {
    pub fn new(g: &Graph, stage: usize, states: Vec<EdgeState>) -> Result<Self> {
        let s = StagedMixed { stage, states };
        s.validate(g)?;
        Ok(s)
    }

    /// Stage 0: an acyclic orientation.
    pub fn from_orientation(g: &Graph, o: &Orientation) -> Result<Self> {
        o.check(g)?;
        let states = o
            .directions()
            .iter()
            .map(|&d| if d { EdgeState::Normal } else { EdgeState::Abnormal })
            .collect();
        StagedMixed::new(g, 0, states)
    }

    /// Stage `m`: an NBC set.
    pub fn from_nbc(g: &Graph, s: &EdgeSubset) -> Result<Self> {
        g.check_subset(s)?;
        let states = (0..g.edge_count())
            .map(|i| if s.contains(i) { EdgeState::Undirected } else { EdgeState::Absent })
            .collect();
        StagedMixed::new(g, g.edge_count(), states)
    }

    pub fn stage(&self) -> usize {
        self.stage
    }

    pub fn states(&self) -> &[EdgeState] {
        &self.states
    }

    pub fn undirected_edges(&self) -> EdgeSubset {
        self.states
            .iter()
            .enumerate()
            .filter(|(_, &s)| s == EdgeState::Undirected)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn to_mixed(&self, g: &Graph) -> MixedGraph {
        let mut edges = Vec::new();
        let mut arcs = Vec::new();
        for (i, s) in self.states.iter().enumerate() {
            let (lo, hi) = g.edge(i);
            match s {
                EdgeState::Absent => {}
                EdgeState::Undirected => edges.push((lo, hi)),
                EdgeState::Normal => arcs.push((lo, hi)),
                EdgeState::Abnormal => arcs.push((hi, lo)),
            }
        }
        MixedGraph::new(g.vertex_count(), edges, arcs).expect("graph edges are valid pairs")
    }

    fn is_acyclic(&self, g: &Graph) -> bool {
        let of = |want: EdgeState| {
            self.states
                .iter()
                .enumerate()
                .filter(move |(_, &s)| s == want)
                .map(|(i, _)| g.edge(i))
        };
        let arcs = of(EdgeState::Normal).chain(of(EdgeState::Abnormal).map(|(lo, hi)| (hi, lo)));
        acyclic_parts(g.vertex_count(), of(EdgeState::Undirected), arcs)
    }

    /// Checks every invariant of the stage.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let m = g.edge_count();
        if self.states.len() != m || self.stage > m {
            return Err(precondition(format!(
                "stage {} with {} edge states does not fit a graph with {m} edges",
                self.stage,
                self.states.len()
            )));
        }
        for (i, s) in self.states.iter().enumerate() {
            let decided = matches!(s, EdgeState::Absent | EdgeState::Undirected);
            if decided != (i < self.stage) {
                return Err(precondition(format!(
                    "edge e{} is {s:?} at stage {}",
                    i + 1,
                    self.stage
                )));
            }
        }
        if !is_nbc(g, &self.undirected_edges())? {
            return Err(precondition("undirected edges contain a broken circuit"));
        }
        if !self.is_acyclic(g) {
            return Err(precondition("mixed graph has a cycle"));
        }
        Ok(())
    }
}

impl fmt::Display for StagedMixed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "stage {}:", self.stage)?;
        for (i, s) in self.states.iter().enumerate() {
            let mark = match s {
                EdgeState::Absent => continue,
                EdgeState::Undirected => "-",
                EdgeState::Normal => "+",
                EdgeState::Abnormal => "~",
            };
            write!(f, " e{}{mark}", i + 1)?;
        }
        Ok(())
    }
}

/// How a forward step treated its arc.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PhiRule {
    /// Normal, and unorienting it leaves the mixed graph acyclic.
    Unoriented,
    /// Removed: the arc was abnormal.
    RemovedAbnormal,
    /// Removed: the arc was normal but unorienting it would close a cycle.
    RemovedWouldCycle,
}

/// How a backward step oriented its edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PsiRule {
    /// The edge was absent and the abnormal arc closes no cycle.
    Abnormal,
    /// Normal because the edge was present.
    NormalWasEdge,
    /// Normal because the abnormal arc would close a cycle.
    NormalWouldCycle,
}

fn phi_step_unchecked(g: &Graph, s: &StagedMixed) -> (StagedMixed, PhiRule) {
    let i = s.stage;
    let mut next = s.clone();
    next.stage += 1;
    let rule = match s.states[i] {
        EdgeState::Normal => {
            next.states[i] = EdgeState::Undirected;
            if next.is_acyclic(g) {
                PhiRule::Unoriented
            } else {
                next.states[i] = EdgeState::Absent;
                PhiRule::RemovedWouldCycle
            }
        }
        EdgeState::Abnormal => {
            next.states[i] = EdgeState::Absent;
            PhiRule::RemovedAbnormal
        }
        EdgeState::Absent | EdgeState::Undirected => unreachable!("validated stage"),
    };
    debug_assert!(next.validate(g).is_ok(), "{next}");
    (next, rule)
}

fn psi_step_unchecked(g: &Graph, s: &StagedMixed) -> (StagedMixed, PsiRule) {
    let i = s.stage - 1;
    let mut prev = s.clone();
    prev.stage -= 1;
    let rule = match s.states[i] {
        EdgeState::Undirected => {
            prev.states[i] = EdgeState::Normal;
            PsiRule::NormalWasEdge
        }
        EdgeState::Absent => {
            prev.states[i] = EdgeState::Abnormal;
            if prev.is_acyclic(g) {
                PsiRule::Abnormal
            } else {
                prev.states[i] = EdgeState::Normal;
                PsiRule::NormalWouldCycle
            }
        }
        EdgeState::Normal | EdgeState::Abnormal => unreachable!("validated stage"),
    };
    debug_assert!(prev.validate(g).is_ok(), "{prev}");
    (prev, rule)
}

/// Processes edge `e_{stage+1}`, taking stage `i-1` to stage `i`.
pub fn phi_step(g: &Graph, s: &StagedMixed) -> Result<(StagedMixed, PhiRule)> {
    s.validate(g)?;
    if s.stage == g.edge_count() {
        return Err(precondition("already at the last stage"));
    }
    Ok(phi_step_unchecked(g, s))
}

/// Re-orients edge `e_stage`, taking stage `i` back to stage `i-1`.
pub fn psi_step(g: &Graph, s: &StagedMixed) -> Result<(StagedMixed, PsiRule)> {
    s.validate(g)?;
    if s.stage == 0 {
        return Err(precondition("already at stage 0"));
    }
    Ok(psi_step_unchecked(g, s))
}

/// Every stage of the forward map, with the rule applied to reach it.
pub fn phi_trace(g: &Graph, o: &Orientation) -> Result<Vec<(StagedMixed, Option<PhiRule>)>> {
    if !o.is_acyclic(g)? {
        return Err(precondition("orientation is not acyclic"));
    }
    let mut cur = StagedMixed::from_orientation(g, o)?;
    let mut out = vec![(cur.clone(), None)];
    while cur.stage < g.edge_count() {
        let (next, rule) = phi_step_unchecked(g, &cur);
        out.push((next.clone(), Some(rule)));
        cur = next;
    }
    Ok(out)
}

/// Every stage of the backward map, starting from the NBC set.
pub fn psi_trace(g: &Graph, s: &EdgeSubset) -> Result<Vec<(StagedMixed, Option<PsiRule>)>> {
    if !is_nbc(g, s)? {
        return Err(precondition(format!("{s:?} is not NBC")));
    }
    let mut cur = StagedMixed::from_nbc(g, s)?;
    let mut out = vec![(cur.clone(), None)];
    while cur.stage > 0 {
        let (prev, rule) = psi_step_unchecked(g, &cur);
        out.push((prev.clone(), Some(rule)));
        cur = prev;
    }
    Ok(out)
}

/// Acyclic orientation ↦ NBC set.
pub fn phi(g: &Graph, o: &Orientation) -> Result<EdgeSubset> {
    let trace = phi_trace(g, o)?;
    Ok(trace.last().expect("trace is nonempty").0.undirected_edges())
}

/// NBC set ↦ acyclic orientation; inverse of [`phi`].
pub fn psi(g: &Graph, s: &EdgeSubset) -> Result<Orientation> {
    let trace = psi_trace(g, s)?;
    let first = &trace.last().expect("trace is nonempty").0;
    Ok(Orientation::new(
        first.states.iter().map(|&st| st == EdgeState::Normal).collect(),
    ))
}

/// Global indices of the edges inside each color class, keyed by color.
fn color_class_edges(g: &Graph, k: &Coloring) -> Vec<Vec<usize>> {
    let top = k.max_color() as usize;
    let mut classes = vec![Vec::new(); top + 1];
    for i in 0..g.edge_count() {
        let (u, v) = g.edge(i);
        if k.color(u) == k.color(v) {
            classes[k.color(u) as usize].push(i);
        }
    }
    classes.retain(|c| !c.is_empty());
    classes
}

/// `Φ`: applies [`phi`] inside every color class of `k` (with the edge order
/// restricted from `g`) and takes the union.
pub fn phi_colored(g: &Graph, k: &Coloring, o: &Orientation) -> Result<EdgeSubset> {
    if !is_compatible(g, o, k)? {
        return Err(precondition("orientation is not compatible with the coloring"));
    }
    if !o.is_acyclic(g)? {
        return Err(precondition("orientation is not acyclic"));
    }
    let mut out = EdgeSubset::new();
    for class in color_class_edges(g, k) {
        let sub = g.edge_subgraph(&class);
        let local = Orientation::new(class.iter().map(|&i| o.low_to_high(i)).collect());
        for j in phi(&sub, &local)?.iter() {
            out.insert(class[j]);
        }
    }
    Ok(out)
}

/// `Ψ`: edges between color classes point toward the larger color; inside
/// each class, [`psi`] orients the class's edges from `s ∩ E_i`.
pub fn psi_colored(g: &Graph, k: &Coloring, s: &EdgeSubset) -> Result<Orientation> {
    if !is_monochromatic_on(g, s, k)? {
        return Err(precondition("coloring is not monochromatic on the components of the subset"));
    }
    if !is_nbc(g, s)? {
        return Err(precondition(format!("{s:?} is not NBC")));
    }
    let mut dirs: Vec<bool> = g
        .edges()
        .iter()
        .map(|&(lo, hi)| k.color(lo) < k.color(hi))
        .collect();
    for class in color_class_edges(g, k) {
        let sub = g.edge_subgraph(&class);
        let local: EdgeSubset = class
            .iter()
            .enumerate()
            .filter(|(_, &i)| s.contains(i))
            .map(|(j, _)| j)
            .collect();
        let o = psi(&sub, &local)?;
        for (j, &i) in class.iter().enumerate() {
            dirs[i] = o.low_to_high(j);
        }
    }
    Ok(Orientation::new(dirs))
}
