//! Exact transversal counting.
//!
//! A transversal of a rooted tree is a set of nodes meeting every path from
//! the root to a leaf. `c(T, k)` is the number of transversals of size `k`.
//! Two independent counters are provided: a subset-enumeration oracle for
//! small trees and a subtree-polynomial dynamic program for production use.
//! All arithmetic is arbitrary precision; `c(T, k)` reaches `binom(n, k)`,
//! which overflows 64-bit integers well inside the supported range.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::tree::{NodeId, RootedTree, TreeError};

/// Largest node count the subset-enumeration oracle accepts by default.
pub const DEFAULT_ORACLE_LIMIT: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountError {
    #[error("subset enumeration supports at most {limit} nodes, tree has {n}")]
    OracleLimitExceeded { n: usize, limit: usize },
    #[error("count vectors are defined on different node counts ({left} vs {right})")]
    MismatchedNodeCounts { left: usize, right: usize },
    #[error("binomial index k = {k} out of range 0..={n}")]
    BinomialOutOfRange { n: usize, k: usize },
    #[error("sandwich bounds need n >= 2, tree has {n}")]
    SandwichNeedsTwoNodes { n: usize },
    #[error(transparent)]
    Tree(#[from] TreeError),
}

/// The exact count vector `c[k] = c(T, k)` for `k = 0..=n`.
///
/// `c[0]` is stored explicitly (it is always 0 for a nonempty tree) so the
/// vector is indexed directly by transversal size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountVector {
    counts: Vec<BigUint>,
}

impl CountVector {
    /// Wraps externally computed counts; `counts[k]` is the number of
    /// transversals of size `k`, so the length must be `n + 1`.
    pub fn from_counts(counts: Vec<BigUint>) -> Self {
        assert!(
            !counts.is_empty(),
            "a count vector has at least the k = 0 entry"
        );
        CountVector { counts }
    }

    pub fn node_count(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }
}

impl std::ops::Index<usize> for CountVector {
    type Output = BigUint;

    fn index(&self, k: usize) -> &BigUint {
        &self.counts[k]
    }
}

impl fmt::Display for CountVector {
    /// Comma-separated exact decimal integers, lowest index first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for c in &self.counts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
            first = false;
        }
        Ok(())
    }
}

/// How two count vectors on the same node count compare pointwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DominanceRelation {
    /// `A[k] >= B[k]` everywhere, strictly somewhere.
    StrictlySucceeds,
    Equal,
    /// `A[k] <= B[k]` everywhere, strictly somewhere.
    StrictlyPreceded,
    Incomparable,
}

/// Outcome of a dominance comparison, with the indices where the two
/// vectors differ strictly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominanceVerdict {
    pub relation: DominanceRelation,
    pub strict_indices: Vec<usize>,
}

impl fmt::Display for DominanceVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.relation {
            DominanceRelation::StrictlySucceeds => "strictly_succeeds",
            DominanceRelation::Equal => "equal",
            DominanceRelation::StrictlyPreceded => "strictly_preceded",
            DominanceRelation::Incomparable => "incomparable",
        };
        write!(f, "{name}")?;
        if !self.strict_indices.is_empty() {
            write!(f, " k=[")?;
            for (i, k) in self.strict_indices.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{k}")?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

/// Result of checking the binomial sandwich bounds on a count vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SandwichCheck {
    /// Both bounds hold for every `k = 1..=n-2`.
    pub holds: bool,
    /// `c[k] = binom(n, k)` for every `k = 1..=n-2`.
    pub all_upper_attained: bool,
    /// `c[k] = binom(n-1, k-1)` for every `k = 1..=n-2`.
    pub all_lower_attained: bool,
}

/// True iff every root-to-leaf path of `t` contains a member of `s`.
pub fn is_transversal(t: &RootedTree, s: &BTreeSet<NodeId>) -> Result<bool, CountError> {
    let n = t.node_count();
    for &v in s {
        if v == 0 || v > n {
            return Err(TreeError::NodeOutOfRange { node: v, n }.into());
        }
    }
    // covered[v]: every path from v to a leaf below it meets s.
    let mut covered = vec![false; n + 1];
    for v in t.post_order() {
        let kids = t.children(v)?;
        covered[v] = s.contains(&v) || (!kids.is_empty() && kids.iter().all(|&c| covered[c]));
    }
    Ok(covered[t.root()])
}

/// Brute-force oracle: counts transversals by enumerating all `2^n`
/// subsets. Refuses trees larger than [`DEFAULT_ORACLE_LIMIT`] nodes.
pub fn count_by_enumeration(t: &RootedTree) -> Result<CountVector, CountError> {
    count_by_enumeration_with_limit(t, DEFAULT_ORACLE_LIMIT)
}

/// Subset-enumeration oracle with a caller-chosen node limit (capped at 62
/// by the bitmask width).
pub fn count_by_enumeration_with_limit(
    t: &RootedTree,
    limit: usize,
) -> Result<CountVector, CountError> {
    let n = t.node_count();
    let limit = limit.min(62);
    if n > limit {
        return Err(CountError::OracleLimitExceeded { n, limit });
    }
    // Nodes in the subset are covered outright, so only internal nodes need
    // a propagation step: covered once all children are.
    let steps: Vec<(u64, u64)> = t
        .post_order()
        .into_iter()
        .filter_map(|v| {
            let kids = t.children(v).expect("valid node");
            if kids.is_empty() {
                return None;
            }
            let cm = kids.iter().fold(0u64, |acc, &c| acc | 1 << (c - 1));
            Some((1 << (v - 1), cm))
        })
        .collect();
    let root_bit = 1u64 << (t.root() - 1);
    let mut counts = vec![0u64; n + 1];
    for mask in 0..(1u64 << n) {
        let mut covered = mask;
        for &(bit, cm) in &steps {
            if covered & cm == cm {
                covered |= bit;
            }
        }
        if covered & root_bit != 0 {
            counts[mask.count_ones() as usize] += 1;
        }
    }
    Ok(CountVector {
        counts: counts.into_iter().map(BigUint::from).collect(),
    })
}

/// Production counter: subtree polynomials combined bottom-up.
///
/// For a node `v` with subtree size `s`, the generating polynomial of the
/// sets covering every path from `v` to a leaf below it is
///
/// ```text
/// P_v = x * (1 + x)^(s - 1) + prod over children w of P_w
/// ```
///
/// (a leaf has `P_v = x`). The first term counts covering sets containing
/// `v` — the rest of the subtree is then unconstrained — and the second
/// counts those avoiding `v`, which must cover every child's subtree.
/// The coefficients of `P_root` are exactly `c(T, 0..=n)`.
pub fn count_transversals(t: &RootedTree) -> CountVector {
    let n = t.node_count();
    let mut size = vec![0usize; n + 1];
    let mut poly: Vec<Vec<BigUint>> = vec![Vec::new(); n + 1];
    for v in t.post_order() {
        let kids = t.children(v).expect("valid node");
        if kids.is_empty() {
            size[v] = 1;
            poly[v] = vec![BigUint::zero(), BigUint::one()];
            continue;
        }
        let mut sz = 1;
        let mut without_v = vec![BigUint::one()];
        for &c in kids {
            sz += size[c];
            without_v = poly_mul(&without_v, &std::mem::take(&mut poly[c]));
        }
        size[v] = sz;
        // x * (1 + x)^(sz - 1), then add the child product (degree sz - 1).
        let mut coeffs = Vec::with_capacity(sz + 1);
        coeffs.push(BigUint::zero());
        coeffs.extend(binomial_row(sz - 1));
        for (k, q) in without_v.into_iter().enumerate() {
            coeffs[k] += q;
        }
        poly[v] = coeffs;
    }
    let counts = std::mem::take(&mut poly[t.root()]);
    debug_assert_eq!(counts.len(), n + 1);
    CountVector { counts }
}

/// Exact binomial coefficient; errors when `k > n`.
pub fn binomial(n: usize, k: usize) -> Result<BigUint, CountError> {
    if k > n {
        return Err(CountError::BinomialOutOfRange { n, k });
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 1..=k {
        acc = acc * BigUint::from(n - k + i) / BigUint::from(i);
    }
    Ok(acc)
}

/// Coefficients of `(1 + x)^m`, i.e. the `m`-th row of Pascal's triangle.
fn binomial_row(m: usize) -> Vec<BigUint> {
    let mut row = Vec::with_capacity(m + 1);
    row.push(BigUint::one());
    for i in 1..=m {
        let next = &row[i - 1] * BigUint::from(m - i + 1) / BigUint::from(i);
        row.push(next);
    }
    row
}

fn poly_mul(a: &[BigUint], b: &[BigUint]) -> Vec<BigUint> {
    let mut out = vec![BigUint::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    out
}

/// Checks `binom(n-1, k-1) <= c[k] <= binom(n, k)` for `k = 1..=n-2` and
/// reports whether each side is attained simultaneously at every such `k`.
pub fn sandwich_check(t: &RootedTree, cv: &CountVector) -> Result<SandwichCheck, CountError> {
    let n = t.node_count();
    if n < 2 {
        return Err(CountError::SandwichNeedsTwoNodes { n });
    }
    if cv.node_count() != n {
        return Err(CountError::MismatchedNodeCounts {
            left: n,
            right: cv.node_count(),
        });
    }
    let mut holds = true;
    let mut upper = true;
    let mut lower = true;
    for k in 1..=n - 2 {
        let lo = binomial(n - 1, k - 1).expect("k - 1 <= n - 1");
        let hi = binomial(n, k).expect("k <= n");
        let c = &cv[k];
        if *c < lo || *c > hi {
            holds = false;
        }
        if *c != hi {
            upper = false;
        }
        if *c != lo {
            lower = false;
        }
    }
    Ok(SandwichCheck {
        holds,
        all_upper_attained: upper,
        all_lower_attained: lower,
    })
}

/// Compares two count vectors under the pointwise dominance order.
pub fn dominance(a: &CountVector, b: &CountVector) -> Result<DominanceVerdict, CountError> {
    if a.node_count() != b.node_count() {
        return Err(CountError::MismatchedNodeCounts {
            left: a.node_count(),
            right: b.node_count(),
        });
    }
    let mut above = Vec::new();
    let mut below = Vec::new();
    for k in 0..=a.node_count() {
        match a[k].cmp(&b[k]) {
            std::cmp::Ordering::Greater => above.push(k),
            std::cmp::Ordering::Less => below.push(k),
            std::cmp::Ordering::Equal => {}
        }
    }
    let verdict = match (above.is_empty(), below.is_empty()) {
        (true, true) => DominanceVerdict {
            relation: DominanceRelation::Equal,
            strict_indices: vec![],
        },
        (false, true) => DominanceVerdict {
            relation: DominanceRelation::StrictlySucceeds,
            strict_indices: above,
        },
        (true, false) => DominanceVerdict {
            relation: DominanceRelation::StrictlyPreceded,
            strict_indices: below,
        },
        (false, false) => {
            let mut all: Vec<usize> = above;
            all.extend(below);
            all.sort_unstable();
            DominanceVerdict {
                relation: DominanceRelation::Incomparable,
                strict_indices: all,
            }
        }
    };
    Ok(verdict)
}
