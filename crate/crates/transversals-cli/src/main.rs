//! `transversals` — count, compare, transform, construct, enumerate, and
//! verify transversal counts of rooted trees from the command line.
//!
//! Trees are given in the one-line parent-array format: entry `i` is the
//! parent of node `i`, `0` marks the root (e.g. `"0 1 1 2 2"`).
//!
//! Exit codes: 0 on success, 1 when a `verify` run ends in a failing
//! verdict, 2 on usage or parse errors.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

use transversals::counting::{count_transversals, dominance, CountVector};
use transversals::enumeration::{rooted_trees, TreeClassConstraint};
use transversals::transforms::{TransformKind, TransformStep};
use transversals::tree::RootedTree;
use transversals::verification::{
    verify_boundary, verify_boundary_with, verify_lemmas, verify_sandwich, verify_theorem_leaves,
    verify_theorem_main, VerificationReport, VerifyOptions,
};

#[derive(Parser)]
#[command(
    name = "transversals",
    version,
    about = "Exact transversal counts in rooted trees: count, compare, transform, enumerate, verify"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the count vector c(T,0..=n) of a tree
    Count {
        /// Tree in parent-array format, e.g. "0 1 1 2 2"
        #[arg(long)]
        tree: String,
        /// Emit the tree as DOT instead of the plain vector
        #[arg(long, value_enum)]
        emit: Option<DotEmit>,
    },
    /// Compare the count vectors of two trees under the dominance order
    Compare {
        #[arg(long)]
        tree_a: String,
        #[arg(long)]
        tree_b: String,
    },
    /// Apply a lift or shed step and print the resulting parent array
    Transform {
        #[arg(long)]
        tree: String,
        #[arg(long, value_enum)]
        op: OpKind,
        /// Node to move (lift) or to strip of children (shed)
        #[arg(long)]
        x: usize,
        /// Lift destination / shed target leaf
        #[arg(long)]
        y: usize,
        #[arg(long, value_enum)]
        emit: Option<DotEmit>,
    },
    /// Print the extremal caterpillar of a tree class and its count vector
    #[command(group(ArgGroup::new("bound").required(true).args(["max_children", "max_leaves"])))]
    Extremal {
        #[arg(long)]
        n: usize,
        /// Bound on children per internal node (full caterpillar)
        #[arg(long)]
        max_children: Option<usize>,
        /// Bound on the number of leaves (root-heavy caterpillar)
        #[arg(long)]
        max_leaves: Option<usize>,
        #[arg(long, value_enum)]
        emit: Option<DotEmit>,
    },
    /// Stream one representative per isomorphism class, one per line
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_children: Option<usize>,
        #[arg(long)]
        max_leaves: Option<usize>,
        #[arg(long, value_enum, default_value_t = EnumerateEmit::Parents)]
        emit: EnumerateEmit,
    },
    /// Run an exhaustive check and write a JSON report; exits 1 on failure
    Verify {
        #[arg(long, value_enum)]
        target: TargetArg,
        #[arg(long)]
        n: usize,
        /// Children bound (theorem_main only)
        #[arg(long)]
        d: Option<usize>,
        /// Leaf bound (theorem_leaves only)
        #[arg(long)]
        m: Option<usize>,
        /// Upper end of the node-count range for range targets
        #[arg(long)]
        n_max: Option<usize>,
        /// Worker threads; the report content is identical at any count
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Stop at the first violating tree
        #[arg(long)]
        fail_fast: bool,
        /// Write the JSON report here instead of stdout
        #[arg(long)]
        report: Option<PathBuf>,
        /// Swap in a deliberately wrong counter (boundary only); exercises
        /// the failure path end to end
        #[arg(long, hide = true)]
        corrupt: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum DotEmit {
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum OpKind {
    Lift,
    Shed,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EnumerateEmit {
    Parents,
    Code,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
enum TargetArg {
    Boundary,
    Sandwich,
    TheoremMain,
    TheoremLeaves,
    Lemmas,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Count { tree, emit } => {
            let t = parse_tree(&tree)?;
            let cv = count_transversals(&t);
            match emit {
                Some(DotEmit::Dot) => println!("{}", to_dot(&t, Some(&cv))),
                None => println!("{cv}"),
            }
            Ok(0)
        }
        Command::Compare { tree_a, tree_b } => {
            let a = parse_tree(&tree_a)?;
            let b = parse_tree(&tree_b)?;
            let verdict = dominance(&count_transversals(&a), &count_transversals(&b))
                .context("trees are not comparable")?;
            println!("{verdict}");
            Ok(0)
        }
        Command::Transform {
            tree,
            op,
            x,
            y,
            emit,
        } => {
            let t = parse_tree(&tree)?;
            let kind = match op {
                OpKind::Lift => TransformKind::Lift,
                OpKind::Shed => TransformKind::Shed,
            };
            let step = TransformStep::apply(kind, &t, x, y)?;
            match emit {
                Some(DotEmit::Dot) => println!("{}", to_dot(&step.after, None)),
                None => println!("{}", step.after),
            }
            Ok(0)
        }
        Command::Extremal {
            n,
            max_children,
            max_leaves,
            emit,
        } => {
            let t = match (max_children, max_leaves) {
                (Some(d), None) => RootedTree::full_caterpillar(n, d)?,
                (None, Some(m)) => RootedTree::leaf_caterpillar(n, m)?,
                _ => unreachable!("clap enforces exactly one bound"),
            };
            let cv = count_transversals(&t);
            match emit {
                Some(DotEmit::Dot) => println!("{}", to_dot(&t, Some(&cv))),
                None => {
                    println!("{t}");
                    println!("{cv}");
                }
            }
            Ok(0)
        }
        Command::Enumerate {
            n,
            max_children,
            max_leaves,
            emit,
        } => {
            let mut constraint = TreeClassConstraint::unconstrained(n);
            if let Some(d) = max_children {
                constraint = constraint.with_max_children(d);
            }
            if let Some(m) = max_leaves {
                constraint = constraint.with_max_leaves(m);
            }
            let stdout = io::stdout();
            let mut out = io::BufWriter::new(stdout.lock());
            for t in rooted_trees(constraint)? {
                let write = match emit {
                    EnumerateEmit::Parents => writeln!(out, "{t}"),
                    EnumerateEmit::Code => writeln!(out, "{}", t.canonical_code()),
                };
                if let Err(err) = write {
                    // A closed downstream pipe is a normal way to stop the stream.
                    if err.kind() == io::ErrorKind::BrokenPipe {
                        return Ok(0);
                    }
                    return Err(err.into());
                }
            }
            if let Err(err) = out.flush() {
                if err.kind() != io::ErrorKind::BrokenPipe {
                    return Err(err.into());
                }
            }
            Ok(0)
        }
        Command::Verify {
            target,
            n,
            d,
            m,
            n_max,
            jobs,
            fail_fast,
            report,
            corrupt,
        } => {
            if jobs == 0 {
                bail!("--jobs must be at least 1");
            }
            let opts = VerifyOptions { jobs, fail_fast };
            let result = run_verify(target, n, d, m, n_max, corrupt, &opts)?;
            let json = result.to_json_string();
            match report {
                Some(path) => fs::write(&path, json + "\n")
                    .with_context(|| format!("cannot write report to {}", path.display()))?,
                None => println!("{json}"),
            }
            Ok(if result.passed() { 0 } else { 1 })
        }
    }
}

fn run_verify(
    target: TargetArg,
    n: usize,
    d: Option<usize>,
    m: Option<usize>,
    n_max: Option<usize>,
    corrupt: bool,
    opts: &VerifyOptions,
) -> Result<VerificationReport> {
    if corrupt && !matches!(target, TargetArg::Boundary) {
        bail!("--corrupt is only supported for --target boundary");
    }
    let range_end = n_max.unwrap_or(n);
    let reject_bounds = |which: &str| -> Result<()> {
        if d.is_some() || m.is_some() {
            bail!("--d and --m do not apply to --target {which}");
        }
        Ok(())
    };
    let report = match target {
        TargetArg::Boundary => {
            reject_bounds("boundary")?;
            if corrupt {
                let broken = |t: &RootedTree| {
                    let cv = count_transversals(t);
                    let mut counts = cv.counts().to_vec();
                    let len = counts.len();
                    counts[len - 1] += 1u32;
                    CountVector::from_counts(counts)
                };
                verify_boundary_with(range_end, opts, &broken)?
            } else {
                verify_boundary(range_end, opts)?
            }
        }
        TargetArg::Sandwich => {
            reject_bounds("sandwich")?;
            verify_sandwich(range_end, opts)?
        }
        TargetArg::Lemmas => {
            reject_bounds("lemmas")?;
            verify_lemmas(range_end, opts)?
        }
        TargetArg::TheoremMain => {
            if m.is_some() || n_max.is_some() {
                bail!("--m and --n-max do not apply to --target theorem_main");
            }
            let d = d.context("--target theorem_main requires --d")?;
            verify_theorem_main(n, d, opts)?
        }
        TargetArg::TheoremLeaves => {
            if d.is_some() || n_max.is_some() {
                bail!("--d and --n-max do not apply to --target theorem_leaves");
            }
            let m = m.context("--target theorem_leaves requires --m")?;
            verify_theorem_leaves(n, m, opts)?
        }
    };
    Ok(report)
}

fn parse_tree(text: &str) -> Result<RootedTree> {
    text.parse::<RootedTree>()
        .with_context(|| format!("invalid tree {text:?}"))
}

/// DOT rendering for figures; the count vector, when given, becomes the
/// graph label.
fn to_dot(t: &RootedTree, counts: Option<&CountVector>) -> String {
    let mut out = String::from("digraph tree {\n");
    if let Some(cv) = counts {
        out.push_str(&format!("  label=\"c = {cv}\";\n"));
    }
    for v in 1..=t.node_count() {
        out.push_str(&format!("  {v};\n"));
    }
    for v in 1..=t.node_count() {
        for &c in t.children(v).expect("valid node") {
            out.push_str(&format!("  {v} -> {c};\n"));
        }
    }
    out.push('}');
    out
}
