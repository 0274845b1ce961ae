//! The two count-reducing tree alterations.
//!
//! `lift` reparents a node `x` to a proper ancestor `y` of its parent;
//! `shed` reparents all children of an internal non-root node `x` to a leaf
//! `y` lying properly below a sibling of `x`. Both strictly reduce the
//! count vector in the dominance order. The explicit witness sets and the
//! transversal injection from the shed argument are exposed so the
//! verification harness can check every claim directly.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::tree::{NodeId, RootedTree, TreeError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("node {x} is the root")]
    XIsRoot { x: NodeId },
    #[error("node {y} is not a proper ancestor of the parent of node {x}")]
    YNotProperAncestorOfParent { x: NodeId, y: NodeId },
    #[error("shed needs an internal node, but {x} is a leaf")]
    XIsLeaf { x: NodeId },
    #[error("shed target {y} is not a leaf")]
    YNotLeaf { y: NodeId },
    #[error("shed target {y} is not a proper descendant of a sibling of {x}")]
    YNotBelowSibling { x: NodeId, y: NodeId },
    #[error("tree is not shed({x},{y}) of the base tree")]
    ShedMismatch { x: NodeId, y: NodeId },
    #[error(transparent)]
    Tree(#[from] TreeError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransformKind {
    Lift,
    Shed,
}

/// One applied alteration, keeping both endpoints for reporting.
#[derive(Debug, Clone)]
pub struct TransformStep {
    pub kind: TransformKind,
    pub x: NodeId,
    pub y: NodeId,
    pub before: RootedTree,
    pub after: RootedTree,
}

impl TransformStep {
    pub fn apply(
        kind: TransformKind,
        t: &RootedTree,
        x: NodeId,
        y: NodeId,
    ) -> Result<TransformStep, TransformError> {
        let after = match kind {
            TransformKind::Lift => lift(t, x, y)?,
            TransformKind::Shed => shed(t, x, y)?,
        };
        Ok(TransformStep {
            kind,
            x,
            y,
            before: t.clone(),
            after,
        })
    }
}

/// Reparents `x` to `y`, which must be a proper ancestor of `p(x)`.
pub fn lift(t: &RootedTree, x: NodeId, y: NodeId) -> Result<RootedTree, TransformError> {
    let px = t.parent(x)?.ok_or(TransformError::XIsRoot { x })?;
    if !t.is_proper_ancestor(y, px)? {
        return Err(TransformError::YNotProperAncestorOfParent { x, y });
    }
    let mut parents = t.parents().to_vec();
    parents[x - 1] = y;
    Ok(RootedTree::validate(parents)?)
}

/// Reparents every child of `x` to the leaf `y`; requires `x` non-root and
/// internal, and `y` a leaf properly below a sibling of `x`. Afterwards `x`
/// is a leaf and `y` is internal.
pub fn shed(t: &RootedTree, x: NodeId, y: NodeId) -> Result<RootedTree, TransformError> {
    let px = t.parent(x)?.ok_or(TransformError::XIsRoot { x })?;
    if t.is_leaf(x)? {
        return Err(TransformError::XIsLeaf { x });
    }
    if !t.is_leaf(y)? {
        return Err(TransformError::YNotLeaf { y });
    }
    if !is_properly_below_sibling(t, px, x, y)? {
        return Err(TransformError::YNotBelowSibling { x, y });
    }
    let mut parents = t.parents().to_vec();
    for z in 1..=t.node_count() {
        if parents[z - 1] == x {
            parents[z - 1] = y;
        }
    }
    Ok(RootedTree::validate(parents)?)
}

/// True iff some sibling of `x` (child of `px` other than `x`) is a proper
/// ancestor of `y`. A sibling itself never qualifies as `y`.
fn is_properly_below_sibling(
    t: &RootedTree,
    px: NodeId,
    x: NodeId,
    y: NodeId,
) -> Result<bool, TransformError> {
    let mut cur = t.parent(y)?;
    while let Some(a) = cur {
        if a != x && t.parent(a)? == Some(px) {
            return Ok(true);
        }
        cur = t.parent(a)?;
    }
    Ok(false)
}

/// The set `{p(x)} ∪ {leaves of T not descendants of p(x)}`.
///
/// It is a transversal of `T` and fails to be one in `lift(T, x, y)` for
/// every admissible `y`, certifying that the dominance drop is strict.
pub fn lift_witness(t: &RootedTree, x: NodeId) -> Result<BTreeSet<NodeId>, TransformError> {
    let px = t.parent(x)?.ok_or(TransformError::XIsRoot { x })?;
    witness_around(t, px)
}

/// The set `{p(y)} ∪ {leaves of T not descendants of p(y)}`, the transversal
/// of `T` with no preimage under the shed injection.
pub fn shed_witness(t: &RootedTree, y: NodeId) -> Result<BTreeSet<NodeId>, TransformError> {
    let py = t.parent(y)?.ok_or(TransformError::XIsRoot { x: y })?;
    witness_around(t, py)
}

fn witness_around(t: &RootedTree, anchor: NodeId) -> Result<BTreeSet<NodeId>, TransformError> {
    let below = t.descendants(anchor)?;
    let mut out: BTreeSet<NodeId> = t.leaves().difference(&below).copied().collect();
    out.insert(anchor);
    Ok(out)
}

/// The map `f` carrying transversals of `T' = shed(T, x, y)` to equal-size
/// transversals of `T`: the identity when `s_prime` meets the root-to-`y`
/// path, otherwise swap `x` out for `y`.
pub fn shed_injection(
    t: &RootedTree,
    t_prime: &RootedTree,
    x: NodeId,
    y: NodeId,
    s_prime: &BTreeSet<NodeId>,
) -> Result<BTreeSet<NodeId>, TransformError> {
    let expected = shed(t, x, y)?;
    if expected.parents() != t_prime.parents() {
        return Err(TransformError::ShedMismatch { x, y });
    }
    let n = t_prime.node_count();
    for &v in s_prime {
        if v == 0 || v > n {
            return Err(TreeError::NodeOutOfRange { node: v, n }.into());
        }
    }
    let meets_path = t_prime.root_path(y)?.iter().any(|v| s_prime.contains(v));
    if meets_path {
        Ok(s_prime.clone())
    } else {
        let mut out = s_prime.clone();
        out.remove(&x);
        out.insert(y);
        Ok(out)
    }
}

/// All `(x, y)` pairs on which `lift` is applicable, in ascending
/// lexicographic order.
pub fn valid_lift_pairs(t: &RootedTree) -> Vec<(NodeId, NodeId)> {
    let n = t.node_count();
    let mut pairs = Vec::new();
    for x in 1..=n {
        let Some(px) = t.parent(x).expect("valid node") else {
            continue;
        };
        for y in 1..=n {
            if t.is_proper_ancestor(y, px).expect("valid nodes") {
                pairs.push((x, y));
            }
        }
    }
    pairs
}

/// All `(x, y)` pairs on which `shed` is applicable, in ascending
/// lexicographic order.
pub fn valid_shed_pairs(t: &RootedTree) -> Vec<(NodeId, NodeId)> {
    let n = t.node_count();
    let leaves = t.leaves();
    let mut pairs = Vec::new();
    for x in 1..=n {
        let Some(px) = t.parent(x).expect("valid node") else {
            continue;
        };
        if leaves.contains(&x) {
            continue;
        }
        for &y in &leaves {
            if is_properly_below_sibling(t, px, x, y).expect("valid nodes") {
                pairs.push((x, y));
            }
        }
    }
    pairs
}
