//! Exact combinatorics of transversals in rooted trees.
//!
//! A transversal is a set of nodes meeting every root-to-leaf path. This
//! crate computes the exact count vector `c(T, k)` for `k = 0..=n`, builds
//! the extremal caterpillar families, applies the two count-reducing tree
//! alterations (lift and shed), enumerates all rooted trees up to
//! isomorphism at desk scale, and exhaustively verifies the dominance
//! theorems over those classes with machine-readable reports.

pub mod counting;
pub mod enumeration;
pub mod transforms;
pub mod tree;
pub mod verification;

pub use counting::{
    binomial, count_by_enumeration, count_by_enumeration_with_limit, count_transversals, dominance,
    is_transversal, sandwich_check, CountError, CountVector, DominanceRelation, DominanceVerdict,
    SandwichCheck, DEFAULT_ORACLE_LIMIT,
};
pub use enumeration::{class_count, rooted_trees, EnumerationError, TreeClassConstraint};
pub use transforms::{
    lift, lift_witness, shed, shed_injection, shed_witness, valid_lift_pairs, valid_shed_pairs,
    TransformError, TransformKind, TransformStep,
};
pub use tree::{CanonicalCode, NodeId, RootedTree, TreeError};
pub use verification::{
    verify_boundary, verify_boundary_with, verify_lemmas, verify_sandwich, verify_theorem_leaves,
    verify_theorem_main, Verdict, VerificationError, VerificationReport, VerifyOptions,
    VerifyTarget, Violation,
};
