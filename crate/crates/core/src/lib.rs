//! Probability measures on the spanning trees of multigraphs, computed in
//! exact rational arithmetic.
//!
//! Two families are implemented:
//!
//! * **Symmetric weights**: the fraction of all `|E|!` edge orderings (Hepp
//!   sectors) under which Kruskal's greedy algorithm returns a given tree
//!   ([`sector`]).
//! * **Partition tree weights**: for a non-trivial partition `Π` of the
//!   vertices, a tree's weight sums `∏ 1/k_p` over its admissible orderings,
//!   where `k_p` counts the edges crossing blocks after `p` contractions
//!   ([`trace`], [`weights`]).
//!
//! The all-singletons partition recovers the symmetric weights. [`psd`]
//! checks numerically that the contact matrices attached to every ordered
//! tree are positive semidefinite.
//!
//! ```
//! use treeweights_core::{fixtures, io, weights, Rational};
//!
//! let g = fixtures::kite();
//! let pi = io::parse_partition("v1|v2|v3,v4", &g).unwrap();
//! let report = weights::weight_distribution(&g, &pi).unwrap();
//! assert_eq!(report.total(), Rational::one());
//! ```

pub mod error;
pub mod fixtures;
pub mod graph;
pub mod io;
pub mod partition;
pub mod psd;
pub mod rational;
pub mod sector;
pub mod trace;
pub mod weights;

pub use error::{Error, Result};
pub use graph::{Edge, Multigraph, OrderedTree, Tree};
pub use partition::Partition;
pub use rational::Rational;
pub use trace::{build_trace, ContactIndexPair, ContractionTrace, Monomial};
pub use weights::{WeightReport, weight_distribution};
