//! Combinatorics of finite Weyl groups seen through their Bruhat posets.
//!
//! The crate computes, for an irreducible Dynkin diagram and a proper subset
//! `J` of its nodes:
//!
//! * the parabolic quotient `W^J` of minimal-length coset representatives,
//! * the descent system `(W^J, S^J)` with its ascent/descent structure and
//!   the `nu` statistics of the augmented poset,
//! * combinatorial smoothness of `J` (a pure diagram condition) together
//!   with the closed-form count of `|S^J|`,
//! * the cross-section lattice of the orbit polytope `Conv(W . lambda)` and
//!   its f- and h-vectors.
//!
//! Everything is exact integer arithmetic; no floating point, no convex
//! hulls. Groups are only ever enumerated through orbits of weight vectors,
//! so quotients of large groups stay cheap as long as `W^J` itself is small.

pub mod crosslattice;
pub mod descent;
pub mod dynkin;
pub mod error;
pub mod oracle;
pub mod parabolic;
pub mod smoothness;
pub mod weyl;

pub use crosslattice::{CrossSectionLattice, FaceVector, LatticeMember};
pub use descent::{AscentDescent, DescentSystem, EdgeSet, MultiPolynomial};
pub use dynkin::{DiagramType, DynkinDiagram, Family, Subset};
pub use error::Error;
pub use parabolic::{ParabolicQuotient, ParabolicSubgroup};
pub use smoothness::{SmoothnessReport, Violation, ViolationKind};
pub use weyl::{WeightVector, WeylElement, WeylGroup};

/// Default cap on the number of coset points enumerated by a single BFS.
pub const DEFAULT_BUDGET: u64 = 5_000_000;
