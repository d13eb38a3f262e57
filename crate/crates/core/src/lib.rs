//! Exact chromatic polynomials and chromatic symmetric functions of small
//! simple graphs, together with the sign-reversing involution and the
//! acyclic-orientation ↔ NBC-subgraph bijections that explain their
//! expansions.
//!
//! Everything is computed by exhaustive enumeration over explicit objects,
//! so every routine is guarded by a [`Budget`]. Edges are ordered by their
//! position in the graph's edge list.
//!
//! ```
//! use chromabij::{chi_poly, named_graph, Budget, ChiMethod, NamedGraph};
//!
//! let g = named_graph(NamedGraph::Fig1);
//! let chi = chi_poly(&g, ChiMethod::Nbc, &Budget::default()).unwrap();
//! assert_eq!(chi.to_string(), "t^4 - 4t^3 + 5t^2 - 2t");
//! ```

pub mod bijection;
pub mod budget;
pub mod chromatic;
pub mod coloring;
pub mod csf;
pub mod error;
pub mod expansion;
pub mod graph;
pub mod involution;
pub mod mixed;
pub mod poly;
pub mod symfunc;
pub mod verify;

pub use bijection::{phi, phi_colored, phi_step, phi_trace, psi, psi_colored, psi_step, psi_trace};
pub use bijection::{EdgeState, PhiRule, PsiRule, StagedMixed};
pub use budget::{Budget, BUDGET_ENV};
pub use chromatic::{
    acyclic_orientation_count, acyclic_orientations, chi_count, chi_poly, compatible_pair_count,
    is_log_concave, nbc_coefficients, ChiMethod,
};
pub use coloring::{is_compatible, is_monochromatic_on, is_proper, Coloring};
pub use csf::{compat_generating, x_all_subgraphs, x_bruteforce, x_nbc};
pub use error::{Error, Result};
pub use expansion::nbc_subsets;
pub use graph::{
    broken_circuits, component_count, components, is_forest, is_nbc, lambda_of, EdgeSubset, Graph,
    UnionFind, VertexPartition,
};
pub use involution::{iota, verify_involution, ColoredSubgraph, InvolutionReport};
pub use mixed::{mixed_is_acyclic, MixedGraph, Orientation};
pub use poly::IntPolynomial;
pub use symfunc::{expand_monomials, omega, specialize, MonomialMap, PSymFunc, Partition};
pub use verify::{check_theorems, named_graph, NamedGraph, VerificationReport};

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
struct ReadmeDoctests;
