//! Digraphs, balanced bipartite graphs and the Z-mapping between them.
//!
//! A loopless digraph `D` on `1..=n` maps to the bipartite graph `Z(D)` with
//! parts `x_1..x_n`, `y_1..y_n` and an edge `x_u y_v` per arc `u → v`.
//! The crate provides the map and its inverse, exact Hamiltonicity and
//! matching solvers, degree-condition predicates, and a sweep engine that
//! checks hypothesis ⇒ conclusion claims over every small instance.
//!
//! ```
//! use zham_core::{zmap, unzmap, Digraph};
//!
//! let c3 = Digraph::directed_cycle(3).unwrap();
//! let g = zmap(&c3);
//! assert!(g.has_edge(1, 2) && g.has_edge(3, 1));
//! assert_eq!(unzmap(&g).unwrap(), c3);
//! ```

pub mod conditions;
pub mod cycle;
pub mod error;
pub mod format;
pub mod graph;
pub mod incidence;
pub mod solvers;
pub mod verifier;
pub mod zmap;

pub use conditions::{ConditionId, ConditionReport, OreThreshold, Violation};
pub use cycle::{check_cycle, is_hamiltonian_cycle, CycleKind, CycleWitness, Matching};
pub use error::GraphError;
pub use format::{parse_instance, Instance, ParseError};
pub use graph::{Arc, BipartiteGraph, Degree, Digraph, Graph, Side, MAX_GRAPH_ORDER, MAX_ORDER};
pub use incidence::IncidenceMatrix;
pub use solvers::{Budget, Outcome, SolveResult, DEFAULT_BUDGET};
pub use zmap::{ham_cycle_pullback, matching_pushforward, unzmap, zmap, CycleFactor, Pullback};
