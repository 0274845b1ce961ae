//! Exhaustive, reproducible verification of the count-vector theorems over
//! enumerated tree classes.
//!
//! Each target enumerates every isomorphism class in range, runs pure
//! checks per tree, and produces a machine-readable report. Work may be
//! partitioned across a worker pool; results are merged back in canonical
//! stream order, so the report content is identical at any worker count.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use num_bigint::BigUint;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::counting::{
    count_transversals, dominance, is_transversal, sandwich_check, CountVector, DominanceRelation,
};
use crate::enumeration::{rooted_trees, EnumerationError, TreeClassConstraint};
use crate::transforms::{
    lift, lift_witness, shed, shed_injection, shed_witness, valid_lift_pairs, valid_shed_pairs,
};
use crate::tree::{NodeId, RootedTree, TreeError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerificationError {
    #[error("target needs n >= {min}, got {got}")]
    RangeTooSmall { min: usize, got: usize },
    #[error("target sweeps all subsets and is capped at n <= {max}, got {got}")]
    RangeTooLarge { max: usize, got: usize },
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error(transparent)]
    Tree(#[from] TreeError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VerifyTarget {
    Boundary,
    Sandwich,
    TheoremMain,
    TheoremLeaves,
    Lemmas,
}

impl std::fmt::Display for VerifyTarget {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            VerifyTarget::Boundary => "boundary",
            VerifyTarget::Sandwich => "sandwich",
            VerifyTarget::TheoremMain => "theorem_main",
            VerifyTarget::TheoremLeaves => "theorem_leaves",
            VerifyTarget::Lemmas => "lemmas",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ReportParams {
    pub n: usize,
    pub d: Option<usize>,
    pub m: Option<usize>,
}

/// One falsified check: the offending tree(s), the indices involved, and
/// what was expected versus found.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub tree: String,
    pub other_tree: Option<String>,
    pub k: Vec<usize>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub target: VerifyTarget,
    pub params: ReportParams,
    pub trees_checked: u64,
    pub pairs_checked: u64,
    pub violations: Vec<Violation>,
    pub elapsed_ms: u64,
    pub verdict: Verdict,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Worker count and stop behavior for a verification run.
#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub jobs: usize,
    /// Stop at the first violating tree instead of collecting all
    /// violations (forces sequential processing).
    pub fail_fast: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            jobs: 1,
            fail_fast: false,
        }
    }
}

/// Checks `c(T, n) = 1` and `c(T, n-1) = n` over every class with
/// `2 <= n <= n_max`.
pub fn verify_boundary(
    n_max: usize,
    opts: &VerifyOptions,
) -> Result<VerificationReport, VerificationError> {
    verify_boundary_with(n_max, opts, &count_transversals)
}

/// [`verify_boundary`] with a swappable counter, the fault-injection point
/// for exercising the failure path of the harness.
pub fn verify_boundary_with(
    n_max: usize,
    opts: &VerifyOptions,
    counter: &(dyn Fn(&RootedTree) -> CountVector + Sync),
) -> Result<VerificationReport, VerificationError> {
    if n_max < 2 {
        return Err(VerificationError::RangeTooSmall { min: 2, got: n_max });
    }
    let started = Instant::now();
    let trees = collect_classes(2, n_max)?;
    let (trees_checked, _, violations) = run_over_trees(&trees, opts, |t| {
        let n = t.node_count();
        let cv = counter(t);
        let mut viols = Vec::new();
        if !cv[n].is_one() {
            viols.push(Violation {
                tree: t.to_string(),
                other_tree: None,
                k: vec![n],
                detail: format!("c(T,n) = {}, expected 1", cv[n]),
            });
        }
        if cv[n - 1] != BigUint::from(n) {
            viols.push(Violation {
                tree: t.to_string(),
                other_tree: None,
                k: vec![n - 1],
                detail: format!("c(T,n-1) = {}, expected {n}", cv[n - 1]),
            });
        }
        (0, viols)
    });
    Ok(finish(
        VerifyTarget::Boundary,
        ReportParams {
            n: n_max,
            d: None,
            m: None,
        },
        trees_checked,
        0,
        violations,
        started,
    ))
}

/// Checks the binomial sandwich bounds and both attainment
/// characterizations (all upper bounds attained iff one leaf; all lower
/// bounds attained iff `n - 1` leaves, in which case the root has `n - 1`
/// children) over every class with `3 <= n <= n_max`.
pub fn verify_sandwich(
    n_max: usize,
    opts: &VerifyOptions,
) -> Result<VerificationReport, VerificationError> {
    if n_max < 3 {
        return Err(VerificationError::RangeTooSmall { min: 3, got: n_max });
    }
    let started = Instant::now();
    let trees = collect_classes(3, n_max)?;
    let (trees_checked, _, violations) = run_over_trees(&trees, opts, |t| {
        let n = t.node_count();
        let cv = count_transversals(t);
        let sc = sandwich_check(t, &cv).expect("n >= 3");
        let mut viols = Vec::new();
        if !sc.holds {
            let mut ks = Vec::new();
            for k in 1..=n - 2 {
                let lo = crate::counting::binomial(n - 1, k - 1).expect("in range");
                let hi = crate::counting::binomial(n, k).expect("in range");
                if cv[k] < lo || cv[k] > hi {
                    ks.push(k);
                }
            }
            viols.push(Violation {
                tree: t.to_string(),
                other_tree: None,
                k: ks,
                detail: "c(T,k) escapes [binom(n-1,k-1), binom(n,k)]".to_string(),
            });
        }
        let leaf_count = t.leaf_count();
        if sc.all_upper_attained != (leaf_count == 1) {
            viols.push(Violation {
                tree: t.to_string(),
                other_tree: None,
                k: vec![],
                detail: format!(
                    "attainment: all_upper_attained = {}, but leaf_count = {leaf_count}",
                    sc.all_upper_attained
                ),
            });
        }
        if sc.all_lower_attained != (leaf_count == n - 1) {
            viols.push(Violation {
                tree: t.to_string(),
                other_tree: None,
                k: vec![],
                detail: format!(
                    "attainment: all_lower_attained = {}, but leaf_count = {leaf_count} (n = {n})",
                    sc.all_lower_attained
                ),
            });
        }
        if sc.all_lower_attained {
            let root_children = t.children(t.root()).expect("root is valid").len();
            if root_children != n - 1 {
                viols.push(Violation {
                    tree: t.to_string(),
                    other_tree: None,
                    k: vec![],
                    detail: format!(
                        "attainment: lower bounds attained but the root has {root_children} children, expected {}",
                        n - 1
                    ),
                });
            }
        }
        (0, viols)
    });
    Ok(finish(
        VerifyTarget::Sandwich,
        ReportParams {
            n: n_max,
            d: None,
            m: None,
        },
        trees_checked,
        0,
        violations,
        started,
    ))
}

/// Checks that the full caterpillar of degree `d` is the unique
/// dominance-minimum among trees on `n` nodes with at most `d` children
/// per node: every other class strictly dominates its count vector.
pub fn verify_theorem_main(
    n: usize,
    d: usize,
    opts: &VerifyOptions,
) -> Result<VerificationReport, VerificationError> {
    let reference = RootedTree::full_caterpillar(n, d)?;
    let constraint = TreeClassConstraint::unconstrained(n).with_max_children(d);
    verify_extremal(
        VerifyTarget::TheoremMain,
        ReportParams {
            n,
            d: Some(d),
            m: None,
        },
        constraint,
        reference,
        opts,
    )
}

/// Checks that the caterpillar whose root has `m` children (all other
/// nodes at most one child) is the unique dominance-minimum among trees on
/// `n` nodes with at most `m` leaves.
pub fn verify_theorem_leaves(
    n: usize,
    m: usize,
    opts: &VerifyOptions,
) -> Result<VerificationReport, VerificationError> {
    let reference = RootedTree::leaf_caterpillar(n, m)?;
    let constraint = TreeClassConstraint::unconstrained(n).with_max_leaves(m);
    verify_extremal(
        VerifyTarget::TheoremLeaves,
        ReportParams {
            n,
            d: None,
            m: Some(m),
        },
        constraint,
        reference,
        opts,
    )
}

fn verify_extremal(
    target: VerifyTarget,
    params: ReportParams,
    constraint: TreeClassConstraint,
    reference: RootedTree,
    opts: &VerifyOptions,
) -> Result<VerificationReport, VerificationError> {
    let started = Instant::now();
    let ref_cv = count_transversals(&reference);
    let ref_code = reference.canonical_code();
    let ref_text = reference.to_string();
    let trees: Vec<RootedTree> = rooted_trees(constraint)?.collect();

    let mut violations = Vec::new();
    let hits = trees
        .iter()
        .filter(|t| t.canonical_code() == ref_code)
        .count();
    if hits != 1 {
        violations.push(Violation {
            tree: ref_text.clone(),
            other_tree: None,
            k: vec![],
            detail: format!(
                "extremal tree appears {hits} times in the enumerated class, expected exactly once"
            ),
        });
    }

    let (trees_checked, _, mut tree_violations) = run_over_trees(&trees, opts, |t| {
        let cv = count_transversals(t);
        let mut viols = Vec::new();
        if t.canonical_code() == ref_code {
            if cv != ref_cv {
                viols.push(Violation {
                    tree: t.to_string(),
                    other_tree: Some(ref_text.clone()),
                    k: differing_indices(&cv, &ref_cv),
                    detail: format!(
                        "isomorphic to the extremal caterpillar but counts differ: {cv} vs {ref_cv}"
                    ),
                });
            }
        } else {
            let verdict = dominance(&cv, &ref_cv).expect("same node count");
            if verdict.relation != DominanceRelation::StrictlySucceeds {
                viols.push(Violation {
                    tree: t.to_string(),
                    other_tree: Some(ref_text.clone()),
                    k: verdict.strict_indices.clone(),
                    detail: format!(
                        "expected strict dominance over the extremal caterpillar, got {verdict}"
                    ),
                });
            }
        }
        (0, viols)
    });
    violations.append(&mut tree_violations);
    Ok(finish(
        target,
        params,
        trees_checked,
        0,
        violations,
        started,
    ))
}

/// Checks both alteration lemmas over every class with `n <= n_max` and
/// every applicable `(x, y)` pair: strict dominance, lift containment, the
/// injection's size preservation / landing set / injectivity, and both
/// witness constructions.
pub fn verify_lemmas(
    n_max: usize,
    opts: &VerifyOptions,
) -> Result<VerificationReport, VerificationError> {
    if n_max < 3 {
        return Err(VerificationError::RangeTooSmall { min: 3, got: n_max });
    }
    if n_max > 20 {
        return Err(VerificationError::RangeTooLarge {
            max: 20,
            got: n_max,
        });
    }
    let started = Instant::now();
    let trees = collect_classes(1, n_max)?;
    let (trees_checked, pairs_checked, violations) =
        run_over_trees(&trees, opts, check_lemmas_on_tree);
    Ok(finish(
        VerifyTarget::Lemmas,
        ReportParams {
            n: n_max,
            d: None,
            m: None,
        },
        trees_checked,
        pairs_checked,
        violations,
        started,
    ))
}

fn check_lemmas_on_tree(t: &RootedTree) -> (u64, Vec<Violation>) {
    let n = t.node_count();
    let cv = count_transversals(t);
    let base_table = transversal_table(t);
    let mut viols = Vec::new();
    let mut pairs = 0u64;

    for (x, y) in valid_lift_pairs(t) {
        pairs += 1;
        let lifted = lift(t, x, y).expect("enumerated pair satisfies the preconditions");
        let verdict = dominance(&cv, &count_transversals(&lifted)).expect("same node count");
        if verdict.relation != DominanceRelation::StrictlySucceeds {
            viols.push(Violation {
                tree: t.to_string(),
                other_tree: Some(lifted.to_string()),
                k: verdict.strict_indices.clone(),
                detail: format!("lemma_lift: dominance not strict for lift({x},{y}): {verdict}"),
            });
        }
        let lifted_table = transversal_table(&lifted);
        for mask in 0..1u64 << n {
            if lifted_table[mask as usize] && !base_table[mask as usize] {
                viols.push(Violation {
                    tree: t.to_string(),
                    other_tree: Some(lifted.to_string()),
                    k: vec![],
                    detail: format!(
                        "lemma_lift: {:?} covers lift({x},{y}) but not the base tree",
                        mask_to_set(mask)
                    ),
                });
                break;
            }
        }
        let witness = lift_witness(t, x).expect("x is not the root");
        if !is_transversal(t, &witness).expect("witness uses valid nodes") {
            viols.push(Violation {
                tree: t.to_string(),
                other_tree: None,
                k: vec![],
                detail: format!(
                    "lemma_lift: witness {witness:?} is not a transversal of the base tree"
                ),
            });
        }
        if is_transversal(&lifted, &witness).expect("witness uses valid nodes") {
            viols.push(Violation {
                tree: t.to_string(),
                other_tree: Some(lifted.to_string()),
                k: vec![],
                detail: format!("lemma_lift: witness {witness:?} still covers lift({x},{y})"),
            });
        }
    }

    for (x, y) in valid_shed_pairs(t) {
        pairs += 1;
        let shedded = shed(t, x, y).expect("enumerated pair satisfies the preconditions");
        let verdict = dominance(&cv, &count_transversals(&shedded)).expect("same node count");
        if verdict.relation != DominanceRelation::StrictlySucceeds {
            viols.push(Violation {
                tree: t.to_string(),
                other_tree: Some(shedded.to_string()),
                k: verdict.strict_indices.clone(),
                detail: format!("lemma_shed: dominance not strict for shed({x},{y}): {verdict}"),
            });
        }
        let witness = shed_witness(t, y).expect("y is not the root");
        if !is_transversal(t, &witness).expect("witness uses valid nodes") {
            viols.push(Violation {
                tree: t.to_string(),
                other_tree: None,
                k: vec![],
                detail: format!(
                    "lemma_shed: witness {witness:?} is not a transversal of the base tree"
                ),
            });
        }
        let witness_key: Vec<NodeId> = witness.iter().copied().collect();
        let shed_table = transversal_table(&shedded);
        let mut images: BTreeMap<Vec<NodeId>, BTreeSet<NodeId>> = BTreeMap::new();
        let mut witness_preimage = false;
        for mask in 0..1u64 << n {
            if !shed_table[mask as usize] {
                continue;
            }
            let s_prime = mask_to_set(mask);
            let image =
                shed_injection(t, &shedded, x, y, &s_prime).expect("shedded matches the pair");
            if image.len() != s_prime.len() {
                viols.push(Violation {
                    tree: t.to_string(),
                    other_tree: Some(shedded.to_string()),
                    k: vec![s_prime.len(), image.len()],
                    detail: format!("shed_injectivity: f({s_prime:?}) = {image:?} changes size"),
                });
            }
            if !is_transversal(t, &image).expect("image uses valid nodes") {
                viols.push(Violation {
                    tree: t.to_string(),
                    other_tree: Some(shedded.to_string()),
                    k: vec![],
                    detail: format!(
                        "shed_injectivity: f({s_prime:?}) = {image:?} is not a transversal of the base tree"
                    ),
                });
            }
            let key: Vec<NodeId> = image.iter().copied().collect();
            if key == witness_key {
                witness_preimage = true;
            }
            if let Some(prev) = images.insert(key, s_prime.clone()) {
                viols.push(Violation {
                    tree: t.to_string(),
                    other_tree: Some(shedded.to_string()),
                    k: vec![],
                    detail: format!(
                        "shed_injectivity: f({prev:?}) = f({s_prime:?}) for shed({x},{y})"
                    ),
                });
            }
        }
        if witness_preimage {
            viols.push(Violation {
                tree: t.to_string(),
                other_tree: Some(shedded.to_string()),
                k: vec![],
                detail: format!(
                    "lemma_shed: witness {witness:?} has a preimage under f for shed({x},{y})"
                ),
            });
        }
    }

    (pairs, viols)
}

fn collect_classes(n_min: usize, n_max: usize) -> Result<Vec<RootedTree>, EnumerationError> {
    let mut trees = Vec::new();
    for n in n_min..=n_max {
        trees.extend(rooted_trees(TreeClassConstraint::unconstrained(n))?);
    }
    Ok(trees)
}

/// Runs a pure per-tree check over the stream, sequentially or on a worker
/// pool, and merges results in stream order.
fn run_over_trees<F>(
    trees: &[RootedTree],
    opts: &VerifyOptions,
    check: F,
) -> (u64, u64, Vec<Violation>)
where
    F: Fn(&RootedTree) -> (u64, Vec<Violation>) + Sync,
{
    if opts.fail_fast {
        let mut pairs = 0;
        let mut checked = 0;
        for t in trees {
            checked += 1;
            let (p, v) = check(t);
            pairs += p;
            if !v.is_empty() {
                return (checked, pairs, v);
            }
        }
        return (checked, pairs, Vec::new());
    }
    let results: Vec<(u64, Vec<Violation>)> = if opts.jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .expect("worker pool");
        pool.install(|| trees.par_iter().map(&check).collect())
    } else {
        trees.iter().map(check).collect()
    };
    let mut pairs = 0;
    let mut violations = Vec::new();
    for (p, v) in results {
        pairs += p;
        violations.extend(v);
    }
    (trees.len() as u64, pairs, violations)
}

fn finish(
    target: VerifyTarget,
    params: ReportParams,
    trees_checked: u64,
    pairs_checked: u64,
    violations: Vec<Violation>,
    started: Instant,
) -> VerificationReport {
    let verdict = if violations.is_empty() {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    VerificationReport {
        target,
        params,
        trees_checked,
        pairs_checked,
        violations,
        elapsed_ms: started.elapsed().as_millis() as u64,
        verdict,
    }
}

fn differing_indices(a: &CountVector, b: &CountVector) -> Vec<usize> {
    (0..=a.node_count()).filter(|&k| a[k] != b[k]).collect()
}

/// `table[mask]` = is the node set encoded by `mask` a transversal.
fn transversal_table(t: &RootedTree) -> Vec<bool> {
    let n = t.node_count();
    assert!(n <= 25, "subset sweeps are only for desk-scale trees");
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
    (0..1u64 << n)
        .map(|mask| {
            let mut covered = mask;
            for &(bit, cm) in &steps {
                if covered & cm == cm {
                    covered |= bit;
                }
            }
            covered & root_bit != 0
        })
        .collect()
}

fn mask_to_set(mask: u64) -> BTreeSet<NodeId> {
    (0..64)
        .filter(|b| mask >> b & 1 == 1)
        .map(|b| b + 1)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn default_opts() -> VerifyOptions {
        VerifyOptions::default()
    }

    #[test]
    fn boundary_passes_and_counts_classes() {
        let report = verify_boundary(5, &default_opts()).unwrap();
        assert!(report.passed());
        assert_eq!(report.trees_checked, 16); // 1 + 2 + 4 + 9
        assert_eq!(report.pairs_checked, 0);
        assert!(report.violations.is_empty());

        let smallest = verify_boundary(2, &default_opts()).unwrap();
        assert!(smallest.passed());
        assert_eq!(smallest.trees_checked, 1);

        assert!(matches!(
            verify_boundary(1, &default_opts()),
            Err(VerificationError::RangeTooSmall { min: 2, got: 1 })
        ));
    }

    #[test]
    fn boundary_fault_injection_flags_every_tree() {
        let corrupt = |t: &RootedTree| {
            let cv = count_transversals(t);
            let mut counts = cv.counts().to_vec();
            let n = counts.len() - 1;
            counts[n] += 1u32; // c(T,n) forced to 2
            CountVector::from_counts(counts)
        };
        let report = verify_boundary_with(5, &default_opts(), &corrupt).unwrap();
        assert_eq!(report.verdict, Verdict::Fail);
        assert_eq!(report.violations.len(), 16);
        assert!(report
            .violations
            .iter()
            .all(|v| v.detail.contains("expected 1")));

        let fast = VerifyOptions {
            fail_fast: true,
            ..default_opts()
        };
        let report = verify_boundary_with(5, &fast, &corrupt).unwrap();
        assert_eq!(report.verdict, Verdict::Fail);
        assert_eq!(report.violations.len(), 1);
        assert_eq!(report.trees_checked, 1);
    }

    #[test]
    fn sandwich_passes_to_ten() {
        let report = verify_sandwich(10, &default_opts()).unwrap();
        assert!(report.passed(), "violations: {:?}", report.violations);
        assert!(matches!(
            verify_sandwich(2, &default_opts()),
            Err(VerificationError::RangeTooSmall { min: 3, got: 2 })
        ));
    }

    #[test]
    fn theorem_main_small_cases() {
        for (n, d) in [(5, 2), (4, 3), (7, 2), (6, 1), (6, 5)] {
            let report = verify_theorem_main(n, d, &default_opts()).unwrap();
            assert!(report.passed(), "n={n} d={d}: {:?}", report.violations);
            assert_eq!(report.params.d, Some(d));
        }
        assert!(verify_theorem_main(4, 4, &default_opts()).is_err());
        assert!(verify_theorem_main(4, 0, &default_opts()).is_err());
    }

    #[test]
    fn theorem_leaves_small_cases() {
        for (n, m) in [(5, 1), (5, 3), (6, 5), (7, 2)] {
            let report = verify_theorem_leaves(n, m, &default_opts()).unwrap();
            assert!(report.passed(), "n={n} m={m}: {:?}", report.violations);
        }
        assert!(verify_theorem_leaves(5, 5, &default_opts()).is_err());
    }

    #[test]
    fn theorem_extremes_agree_with_named_families() {
        // d = n-1 and m = n-1 both name the star; d = 1 and m = 1 the path.
        let star_code = RootedTree::star(6).unwrap().canonical_code();
        let path_code = RootedTree::path(6).unwrap().canonical_code();
        assert_eq!(
            RootedTree::full_caterpillar(6, 5).unwrap().canonical_code(),
            star_code
        );
        assert_eq!(
            RootedTree::leaf_caterpillar(6, 5).unwrap().canonical_code(),
            star_code
        );
        assert_eq!(
            RootedTree::full_caterpillar(6, 1).unwrap().canonical_code(),
            path_code
        );
        assert_eq!(
            RootedTree::leaf_caterpillar(6, 1).unwrap().canonical_code(),
            path_code
        );
        assert!(verify_theorem_main(6, 5, &default_opts()).unwrap().passed());
        assert!(verify_theorem_leaves(6, 1, &default_opts())
            .unwrap()
            .passed());
    }

    #[test]
    fn lemmas_pass_on_small_range() {
        let report = verify_lemmas(6, &default_opts()).unwrap();
        assert!(report.passed(), "violations: {:?}", report.violations);
        assert_eq!(report.trees_checked, 1 + 1 + 2 + 4 + 9 + 20);
        assert!(report.pairs_checked > 0);
        assert!(matches!(
            verify_lemmas(2, &default_opts()),
            Err(VerificationError::RangeTooSmall { min: 3, got: 2 })
        ));
        assert!(matches!(
            verify_lemmas(26, &default_opts()),
            Err(VerificationError::RangeTooLarge { max: 20, got: 26 })
        ));
    }

    #[test]
    fn star_has_no_pairs() {
        let star = RootedTree::star(7).unwrap();
        let (pairs, viols) = check_lemmas_on_tree(&star);
        assert_eq!(pairs, 0);
        assert!(viols.is_empty());
    }

    #[test]
    fn worker_count_does_not_change_reports() {
        let seq = verify_theorem_main(
            8,
            2,
            &VerifyOptions {
                jobs: 1,
                fail_fast: false,
            },
        )
        .unwrap();
        let par = verify_theorem_main(
            8,
            2,
            &VerifyOptions {
                jobs: 4,
                fail_fast: false,
            },
        )
        .unwrap();
        let strip = |r: &VerificationReport| {
            let mut v = r.to_json();
            v.as_object_mut().unwrap().remove("elapsed_ms");
            v
        };
        assert_eq!(strip(&seq), strip(&par));
    }

    #[test]
    fn report_json_matches_schema() {
        let report = verify_theorem_main(5, 2, &default_opts()).unwrap();
        let json = report.to_json();
        let obj = json.as_object().unwrap();
        let keys: Vec<&str> = obj.keys().map(String::as_str).collect();
        for key in [
            "target",
            "params",
            "trees_checked",
            "pairs_checked",
            "violations",
            "elapsed_ms",
            "verdict",
        ] {
            assert!(keys.contains(&key), "missing {key}");
        }
        assert_eq!(obj.len(), 7);
        assert_eq!(obj["target"], "theorem_main");
        assert_eq!(obj["verdict"], "pass");
        assert_eq!(obj["params"]["n"], 5);
        assert_eq!(obj["params"]["d"], 2);
        assert!(obj["params"]["m"].is_null());
        assert!(obj["violations"].as_array().unwrap().is_empty());
        assert!(obj["elapsed_ms"].is_u64());
    }

    #[test]
    fn violation_records_replay() {
        // Any reported vector in a violation detail must be reproducible.
        let corrupt = |t: &RootedTree| {
            let cv = count_transversals(t);
            let mut counts = cv.counts().to_vec();
            counts[1] += 1u32;
            CountVector::from_counts(counts)
        };
        let report = verify_boundary_with(3, &default_opts(), &corrupt).unwrap();
        for viol in &report.violations {
            let replayed: RootedTree = viol.tree.parse().unwrap();
            // The recorded tree is valid and re-countable.
            let _ = count_transversals(&replayed);
        }
    }
}
