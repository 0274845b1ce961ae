//! Rooted trees in parent-array form: validation, structural queries,
//! canonical codes for isomorphism testing, and the named tree families
//! (paths, stars, full caterpillars, leaf-bounded caterpillars).

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// 1-based node identifier. In the external text format the root is the
/// node whose parent entry is `0`.
pub type NodeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("parent array is empty")]
    Empty,
    #[error("no root: no entry carries the root sentinel 0")]
    NoRoot,
    #[error("multiple roots: nodes {first} and {second} both carry the root sentinel")]
    MultipleRoots { first: NodeId, second: NodeId },
    #[error("parent of node {node} is {parent}, outside 1..={n}")]
    ParentOutOfRange {
        node: NodeId,
        parent: usize,
        n: usize,
    },
    #[error("cycle through node {node}")]
    Cycle { node: NodeId },
    #[error("node {node} is outside 1..={n}")]
    NodeOutOfRange { node: NodeId, n: usize },
    #[error("invalid family parameters: {0}")]
    BadFamily(String),
    #[error("relabeling is not a permutation of 1..={n}")]
    BadPermutation { n: usize },
    #[error("unparsable token {0:?} in tree text")]
    BadToken(String),
}

/// A rooted tree on nodes `1..=n`, stored as a parent array.
///
/// Entry `i` (1-based) names the parent of node `i`; exactly one entry is
/// `0` and marks the root. Values are immutable after construction, so a
/// tree can be shared freely between threads.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RootedTree {
    parents: Vec<usize>,
    children: Vec<Vec<NodeId>>,
    root: NodeId,
}

impl RootedTree {
    /// Checks a raw parent array and builds a tree from it.
    ///
    /// The array does not need to be topologically ordered: a child's id may
    /// be smaller than its parent's. Zero roots, multiple roots, parent ids
    /// outside `1..=n`, and cycles are each rejected with a distinct error.
    pub fn validate(parents: Vec<usize>) -> Result<Self, TreeError> {
        let n = parents.len();
        if n == 0 {
            return Err(TreeError::Empty);
        }
        let mut root = None;
        for (i, &p) in parents.iter().enumerate() {
            let node = i + 1;
            if p == 0 {
                match root {
                    None => root = Some(node),
                    Some(first) => {
                        return Err(TreeError::MultipleRoots {
                            first,
                            second: node,
                        })
                    }
                }
            } else if p > n {
                return Err(TreeError::ParentOutOfRange { node, parent: p, n });
            }
        }
        let root = root.ok_or(TreeError::NoRoot)?;

        // Walk every parent chain once. 0 = unvisited, 1 = on the chain
        // currently being walked, 2 = known to reach the root.
        let mut state = vec![0u8; n + 1];
        state[root] = 2;
        for start in 1..=n {
            let mut chain = Vec::new();
            let mut v = start;
            while state[v] == 0 {
                state[v] = 1;
                chain.push(v);
                v = parents[v - 1];
            }
            if state[v] == 1 {
                return Err(TreeError::Cycle { node: v });
            }
            for u in chain {
                state[u] = 2;
            }
        }

        let mut children = vec![Vec::new(); n + 1];
        for (i, &p) in parents.iter().enumerate() {
            if p != 0 {
                children[p].push(i + 1);
            }
        }
        Ok(RootedTree {
            parents,
            children,
            root,
        })
    }

    /// Path on `n` nodes: node `i + 1` is the child of node `i`.
    pub fn path(n: usize) -> Result<Self, TreeError> {
        if n < 1 {
            return Err(TreeError::BadFamily("path needs n >= 1".into()));
        }
        Self::validate((0..n).collect())
    }

    /// Star on `n` nodes: nodes `2..=n` are children of node 1.
    pub fn star(n: usize) -> Result<Self, TreeError> {
        if n < 2 {
            return Err(TreeError::BadFamily(format!("star needs n >= 2, got {n}")));
        }
        let mut parents = vec![1; n];
        parents[0] = 0;
        Self::validate(parents)
    }

    /// Full caterpillar of degree `d` on `n` nodes (requires `1 <= d < n`).
    ///
    /// The spine has `t = ceil((n-1)/d)` nodes numbered `1..=t`, each the
    /// child of the previous one. Every spine node above the lowest carries
    /// `d - 1` leaf children (so it has exactly `d` children in total); the
    /// lowest spine node carries the remaining `1..=d` leaves. Leaves are
    /// numbered `t+1..=n` grouped by parent in spine order.
    pub fn full_caterpillar(n: usize, d: usize) -> Result<Self, TreeError> {
        if d < 1 || d >= n {
            return Err(TreeError::BadFamily(format!(
                "full caterpillar needs 1 <= d < n, got n = {n}, d = {d}"
            )));
        }
        let spine = (n - 2) / d + 1; // ceil((n-1)/d)
        let mut parents = vec![0usize; n];
        for i in 2..=spine {
            parents[i - 1] = i - 1;
        }
        let mut next = spine + 1;
        for i in 1..spine {
            for _ in 0..d - 1 {
                parents[next - 1] = i;
                next += 1;
            }
        }
        while next <= n {
            parents[next - 1] = spine;
            next += 1;
        }
        Self::validate(parents)
    }

    /// Caterpillar on `n` nodes where the root has `m` children and every
    /// other node has at most one child (requires `1 <= m < n`).
    ///
    /// The root's children are `2..=m+1`; nodes `m+2..=n` form a descending
    /// path hanging under node 2.
    pub fn leaf_caterpillar(n: usize, m: usize) -> Result<Self, TreeError> {
        if m < 1 || m >= n {
            return Err(TreeError::BadFamily(format!(
                "leaf caterpillar needs 1 <= m < n, got n = {n}, m = {m}"
            )));
        }
        let mut parents = vec![0usize; n];
        for i in 2..=m + 1 {
            parents[i - 1] = 1;
        }
        for i in m + 2..=n {
            parents[i - 1] = if i == m + 2 { 2 } else { i - 1 };
        }
        Self::validate(parents)
    }

    pub fn node_count(&self) -> usize {
        self.parents.len()
    }

    pub fn root(&self) -> NodeId {
        self.root
    }

    /// The raw parent array, in the external text-format convention.
    pub fn parents(&self) -> &[usize] {
        &self.parents
    }

    fn check_node(&self, v: NodeId) -> Result<(), TreeError> {
        if v == 0 || v > self.node_count() {
            Err(TreeError::NodeOutOfRange {
                node: v,
                n: self.node_count(),
            })
        } else {
            Ok(())
        }
    }

    /// Parent of `v`, or `None` for the root.
    pub fn parent(&self, v: NodeId) -> Result<Option<NodeId>, TreeError> {
        self.check_node(v)?;
        let p = self.parents[v - 1];
        Ok(if p == 0 { None } else { Some(p) })
    }

    /// Children of `v` in ascending node-id order.
    pub fn children(&self, v: NodeId) -> Result<&[NodeId], TreeError> {
        self.check_node(v)?;
        Ok(&self.children[v])
    }

    pub fn is_leaf(&self, v: NodeId) -> Result<bool, TreeError> {
        Ok(self.children(v)?.is_empty())
    }

    /// All leaves of the tree. In the single-node tree the root is a leaf.
    pub fn leaves(&self) -> BTreeSet<NodeId> {
        (1..=self.node_count())
            .filter(|&v| self.children[v].is_empty())
            .collect()
    }

    pub fn leaf_count(&self) -> usize {
        (1..=self.node_count())
            .filter(|&v| self.children[v].is_empty())
            .count()
    }

    /// Largest number of children over all nodes (0 for the single-node tree).
    pub fn max_children(&self) -> usize {
        (1..=self.node_count())
            .map(|v| self.children[v].len())
            .max()
            .unwrap_or(0)
    }

    /// True iff `a != b` and `a` lies on the path from the root to `b`.
    pub fn is_proper_ancestor(&self, a: NodeId, b: NodeId) -> Result<bool, TreeError> {
        self.check_node(a)?;
        self.check_node(b)?;
        let mut cur = self.parents[b - 1];
        while cur != 0 {
            if cur == a {
                return Ok(true);
            }
            cur = self.parents[cur - 1];
        }
        Ok(false)
    }

    /// All descendants of `v`, including `v` itself.
    pub fn descendants(&self, v: NodeId) -> Result<BTreeSet<NodeId>, TreeError> {
        self.check_node(v)?;
        let mut out = BTreeSet::new();
        let mut stack = vec![v];
        while let Some(u) = stack.pop() {
            out.insert(u);
            stack.extend(self.children[u].iter().copied());
        }
        Ok(out)
    }

    pub fn subtree_size(&self, v: NodeId) -> Result<usize, TreeError> {
        self.check_node(v)?;
        let mut count = 0;
        let mut stack = vec![v];
        while let Some(u) = stack.pop() {
            count += 1;
            stack.extend(self.children[u].iter().copied());
        }
        Ok(count)
    }

    /// Nodes on the path from the root down to `v`, inclusive.
    pub fn root_path(&self, v: NodeId) -> Result<Vec<NodeId>, TreeError> {
        self.check_node(v)?;
        let mut path = vec![v];
        let mut cur = self.parents[v - 1];
        while cur != 0 {
            path.push(cur);
            cur = self.parents[cur - 1];
        }
        path.reverse();
        Ok(path)
    }

    /// A traversal order in which every node appears after all of its
    /// descendants.
    pub fn post_order(&self) -> Vec<NodeId> {
        let mut order = Vec::with_capacity(self.node_count());
        let mut stack = vec![self.root];
        while let Some(v) = stack.pop() {
            order.push(v);
            stack.extend(self.children[v].iter().copied());
        }
        order.reverse();
        order
    }

    /// True iff deleting all leaves yields a rooted tree with exactly one
    /// leaf. Defined true for `n <= 2` (deleting the leaves of a 1- or
    /// 2-node tree leaves at most the bare root).
    ///
    /// Equivalently: no two internal nodes are siblings.
    pub fn is_caterpillar(&self) -> bool {
        let n = self.node_count();
        if n <= 2 {
            return true;
        }
        // Leaves of the leaf-deleted tree = internal nodes all of whose
        // children are leaves.
        let mut induced_leaves = 0;
        for v in 1..=n {
            if !self.children[v].is_empty()
                && self.children[v]
                    .iter()
                    .all(|&c| self.children[c].is_empty())
            {
                induced_leaves += 1;
            }
        }
        induced_leaves == 1
    }

    /// Canonical parenthesis code: equal codes exactly for isomorphic
    /// rooted trees. A leaf encodes as `()`; an internal node wraps the
    /// lexicographically sorted codes of its children.
    pub fn canonical_code(&self) -> CanonicalCode {
        let n = self.node_count();
        let mut codes: Vec<String> = vec![String::new(); n + 1];
        for v in self.post_order() {
            let mut parts: Vec<String> = self.children[v]
                .iter()
                .map(|&c| std::mem::take(&mut codes[c]))
                .collect();
            parts.sort();
            let mut code = String::with_capacity(2 + parts.iter().map(String::len).sum::<usize>());
            code.push('(');
            for p in &parts {
                code.push_str(p);
            }
            code.push(')');
            codes[v] = code;
        }
        CanonicalCode(std::mem::take(&mut codes[self.root]))
    }

    /// The same tree with node `i` renamed to `perm[i - 1]`. `perm` must be
    /// a permutation of `1..=n`.
    pub fn relabel(&self, perm: &[NodeId]) -> Result<RootedTree, TreeError> {
        let n = self.node_count();
        if perm.len() != n {
            return Err(TreeError::BadPermutation { n });
        }
        let mut seen = vec![false; n + 1];
        for &p in perm {
            if p == 0 || p > n || seen[p] {
                return Err(TreeError::BadPermutation { n });
            }
            seen[p] = true;
        }
        let mut parents = vec![0usize; n];
        for v in 1..=n {
            let pv = self.parents[v - 1];
            parents[perm[v - 1] - 1] = if pv == 0 { 0 } else { perm[pv - 1] };
        }
        Self::validate(parents)
    }
}

impl fmt::Display for RootedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parents {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for RootedTree {
    type Err = TreeError;

    /// Parses the one-line text format: `n` whitespace-separated integers,
    /// entry `i` the parent of node `i`, `0` marking the root.
    fn from_str(s: &str) -> Result<Self, TreeError> {
        let parents = s
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| TreeError::BadToken(tok.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::validate(parents)
    }
}

/// Canonical parenthesis encoding of a rooted tree; see
/// [`RootedTree::canonical_code`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(String);

impl CanonicalCode {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}
