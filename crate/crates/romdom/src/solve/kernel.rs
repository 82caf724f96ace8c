//! Kernel number: how much slack the best total dominating set carries.
//!
//! For a minimum total dominating set D, the redundancy of D is |D| minus
//! the size of a smallest subset of D that still dominates the whole
//! graph. The kernel number k(G) is the maximum redundancy over all
//! minimum total dominating sets, and the kernel itself is the set of
//! vertices dropped from the maximizing D.

use super::{cover, Invariant, InvariantResult, Method, SolverBudget, Tracker, Witness};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;

/// The objects behind a kernel number: the chosen minimum total dominating
/// set, its smallest dominating subset, and their difference.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct KernelCertificate {
    pub d: VertexSet,
    pub d_prime: VertexSet,
    pub kernel: VertexSet,
}

/// All size-k subsets of `members`, ascending by bitset integer value.
fn subsets_by_value(n: usize, members: &[usize], k: usize) -> Vec<VertexSet> {
    let mut out = Vec::new();
    let mut pick = vec![0usize; k];
    fn rec(
        n: usize,
        members: &[usize],
        k: usize,
        start: usize,
        pick: &mut Vec<usize>,
        depth: usize,
        out: &mut Vec<VertexSet>,
    ) {
        if depth == k {
            out.push(VertexSet::from_members(n, pick.iter().copied()));
            return;
        }
        for i in start..=members.len() - (k - depth) {
            pick[depth] = members[i];
            rec(n, members, k, i + 1, pick, depth + 1, out);
        }
    }
    if k <= members.len() {
        rec(n, members, k, 0, &mut pick, 0, &mut out);
    }
    out.sort_by(|a, b| a.cmp_value(b));
    out
}

/// Smallest dominating subset of `d`, least by bitset value among the
/// smallest. `d` itself dominates, so this always succeeds.
fn min_dominating_subset(
    g: &Graph,
    d: &VertexSet,
    tracker: &mut Tracker,
) -> Result<VertexSet> {
    let members = d.members();
    let everything = VertexSet::full(g.order());
    for size in 1..=members.len() {
        for cand in subsets_by_value(g.order(), &members, size) {
            if tracker.tick().is_err() {
                return Err(tracker.exhausted(None));
            }
            if g.closed_neighborhood_of_set(&cand) == everything {
                return Ok(cand);
            }
        }
    }
    unreachable!("a total dominating set dominates itself")
}

/// Kernel number with the kernel as witness, plus the certificate that
/// produced it. Ties between total dominating sets go to the first in
/// bitset value order.
pub fn kernel_number(
    g: &Graph,
    budget: &SolverBudget,
) -> Result<(InvariantResult, KernelCertificate)> {
    if g.has_isolated_vertex() {
        return Err(Error::Undefined {
            invariant: "kernel_k",
            reason: "the graph has an isolated vertex".into(),
        });
    }
    let all = cover::enumerate_gamma_t_sets(g, budget)?;
    let mut tracker = Tracker::new(budget);
    let mut best: Option<(usize, KernelCertificate)> = None;
    for d in all {
        let d_prime = min_dominating_subset(g, &d, &mut tracker)?;
        let k = d.len() - d_prime.len();
        if best.as_ref().is_none_or(|(b, _)| k > *b) {
            let kernel = d.difference(&d_prime);
            best = Some((
                k,
                KernelCertificate {
                    d,
                    d_prime,
                    kernel,
                },
            ));
        }
    }
    let (value, cert) = best.expect("an isolate-free graph has a total dominating set");
    Ok((
        InvariantResult {
            invariant: Invariant::KernelK,
            value,
            witness: Witness::set(cert.kernel.clone()),
            nodes_explored: tracker.nodes,
            method: Method::BranchAndBound,
        },
        cert,
    ))
}
