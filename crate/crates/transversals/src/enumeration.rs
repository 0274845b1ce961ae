//! Exhaustive generation of rooted trees up to isomorphism.
//!
//! Trees are generated as canonical level sequences (root at level 1, each
//! node's level one above its parent's, subtrees in lexicographically
//! nonincreasing order) using the standard successor rule: find the last
//! entry above 2, locate the previous entry one level shallower, and repeat
//! the block between them to the end of the sequence. Each sequence is
//! decoded to a parent array in preorder, so exactly one representative per
//! isomorphism class is produced, in a fixed order.

use thiserror::Error;

use crate::tree::RootedTree;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("tree class needs n >= 1")]
    EmptyClass,
    #[error("max_children bound {d} outside 1..={max} for n = {n}")]
    BadChildBound { d: usize, n: usize, max: usize },
    #[error("max_leaves bound {m} outside 1..={max} for n = {n}")]
    BadLeafBound { m: usize, n: usize, max: usize },
}

/// The class of rooted trees on `n` nodes, optionally restricted by a bound
/// on children per node or on leaves.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TreeClassConstraint {
    pub n: usize,
    pub max_children: Option<usize>,
    pub max_leaves: Option<usize>,
}

impl TreeClassConstraint {
    pub fn unconstrained(n: usize) -> Self {
        TreeClassConstraint {
            n,
            max_children: None,
            max_leaves: None,
        }
    }

    pub fn with_max_children(mut self, d: usize) -> Self {
        self.max_children = Some(d);
        self
    }

    pub fn with_max_leaves(mut self, m: usize) -> Self {
        self.max_leaves = Some(m);
        self
    }

    pub fn check(&self) -> Result<(), EnumerationError> {
        if self.n == 0 {
            return Err(EnumerationError::EmptyClass);
        }
        if let Some(d) = self.max_children {
            if self.n < 2 || d < 1 || d > self.n - 1 {
                return Err(EnumerationError::BadChildBound {
                    d,
                    n: self.n,
                    max: self.n.saturating_sub(1),
                });
            }
        }
        if let Some(m) = self.max_leaves {
            if self.n < 2 || m < 1 || m > self.n - 1 {
                return Err(EnumerationError::BadLeafBound {
                    m,
                    n: self.n,
                    max: self.n.saturating_sub(1),
                });
            }
        }
        Ok(())
    }

    pub fn admits(&self, t: &RootedTree) -> bool {
        self.max_children.is_none_or(|d| t.max_children() <= d)
            && self.max_leaves.is_none_or(|m| t.leaf_count() <= m)
    }
}

/// Streams one representative per isomorphism class satisfying the
/// constraint, in canonical level-sequence order.
pub fn rooted_trees(constraint: TreeClassConstraint) -> Result<TreeClassIter, EnumerationError> {
    constraint.check()?;
    Ok(TreeClassIter {
        constraint,
        levels: (1..=constraint.n).collect(),
        exhausted: false,
    })
}

/// Number of isomorphism classes satisfying the constraint.
pub fn class_count(constraint: TreeClassConstraint) -> Result<usize, EnumerationError> {
    Ok(rooted_trees(constraint)?.count())
}

pub struct TreeClassIter {
    constraint: TreeClassConstraint,
    levels: Vec<usize>,
    exhausted: bool,
}

impl TreeClassIter {
    /// Successor rule for canonical level sequences. The path (all levels
    /// distinct) is first; the star (level 2 everywhere after the root) is
    /// last.
    fn advance(&mut self) {
        let n = self.levels.len();
        let Some(p) = (0..n).rev().find(|&i| self.levels[i] > 2) else {
            self.exhausted = true;
            return;
        };
        let q = (0..p)
            .rev()
            .find(|&i| self.levels[i] == self.levels[p] - 1)
            .expect("a shallower entry precedes any entry above level 2");
        for i in p..n {
            self.levels[i] = self.levels[i - (p - q)];
        }
    }

    fn current_tree(&self) -> RootedTree {
        let n = self.levels.len();
        let mut parents = vec![0usize; n];
        // last_at[level] = most recent preorder node seen at that level.
        let mut last_at = vec![0usize; n + 2];
        for (i, &level) in self.levels.iter().enumerate() {
            let node = i + 1;
            if level > 1 {
                parents[i] = last_at[level - 1];
            }
            last_at[level] = node;
        }
        RootedTree::validate(parents).expect("canonical level sequences decode to valid trees")
    }
}

impl Iterator for TreeClassIter {
    type Item = RootedTree;

    fn next(&mut self) -> Option<RootedTree> {
        while !self.exhausted {
            let t = self.current_tree();
            self.advance();
            if self.constraint.admits(&t) {
                return Some(t);
            }
        }
        None
    }
}
