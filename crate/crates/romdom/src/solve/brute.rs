//! Exhaustive oracles over 2^n subsets and 3^n labelings.
//!
//! Everything here works straight from the definitions and shares no
//! search logic with the branch and bound engines, so the two sides can
//! check each other. All entry points refuse graphs above the budget's
//! brute-force cap.

use super::{Invariant, InvariantResult, Method, SolverBudget, Tracker, Witness};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::labeling::{is_rdf, is_trdf, RomanLabeling};
use crate::set::VertexSet;

fn check_cap(g: &Graph, budget: &SolverBudget) -> Result<()> {
    if g.order() > budget.max_n_bruteforce || g.order() > 40 {
        return Err(Error::BudgetExceeded {
            nodes: 0,
            best: None,
        });
    }
    Ok(())
}

fn require_no_isolated(g: &Graph, invariant: &'static str) -> Result<()> {
    if g.has_isolated_vertex() {
        Err(Error::Undefined {
            invariant,
            reason: "the graph has an isolated vertex".into(),
        })
    } else {
        Ok(())
    }
}

fn set_from_mask(n: usize, mask: u64) -> VertexSet {
    VertexSet::from_members(n, (0..n).filter(|&v| mask >> v & 1 == 1))
}

/// Scans subsets in ascending mask order, which is ascending bitset value
/// order, so the first hit is the canonical witness.
fn min_subset_such_that(
    g: &Graph,
    budget: &SolverBudget,
    pred: impl Fn(&VertexSet) -> bool,
) -> Result<(VertexSet, u64)> {
    let n = g.order();
    let mut tracker = Tracker::new(budget);
    let mut best: Option<VertexSet> = None;
    for mask in 0..1u64 << n {
        if tracker.tick().is_err() {
            return Err(tracker.exhausted(best.as_ref().map(|s| s.len())));
        }
        let s = set_from_mask(n, mask);
        if best.as_ref().is_none_or(|b| s.len() < b.len()) && pred(&s) {
            best = Some(s);
        }
    }
    Ok((best.expect("the full vertex set satisfies the predicate"), tracker.nodes))
}

fn max_subset_such_that(
    g: &Graph,
    budget: &SolverBudget,
    pred: impl Fn(&VertexSet) -> bool,
) -> Result<(VertexSet, u64)> {
    let n = g.order();
    let mut tracker = Tracker::new(budget);
    let mut best: Option<VertexSet> = None;
    for mask in 0..1u64 << n {
        if tracker.tick().is_err() {
            return Err(tracker.exhausted(best.as_ref().map(|s| s.len())));
        }
        let s = set_from_mask(n, mask);
        if best.as_ref().is_none_or(|b| s.len() > b.len()) && pred(&s) {
            best = Some(s);
        }
    }
    Ok((best.expect("the empty set satisfies the predicate"), tracker.nodes))
}

fn result(invariant: Invariant, witness: VertexSet, nodes: u64) -> InvariantResult {
    InvariantResult {
        invariant,
        value: witness.len(),
        witness: Witness::set(witness),
        nodes_explored: nodes,
        method: Method::BruteForce,
    }
}

pub fn gamma_bf(g: &Graph, budget: &SolverBudget) -> Result<InvariantResult> {
    check_cap(g, budget)?;
    let full = VertexSet::full(g.order());
    let (w, nodes) =
        min_subset_such_that(g, budget, |s| g.closed_neighborhood_of_set(s) == full)?;
    Ok(result(Invariant::Gamma, w, nodes))
}

pub fn gamma_t_bf(g: &Graph, budget: &SolverBudget) -> Result<InvariantResult> {
    check_cap(g, budget)?;
    require_no_isolated(g, "gamma_t")?;
    let full = VertexSet::full(g.order());
    let (w, nodes) =
        min_subset_such_that(g, budget, |s| g.open_neighborhood_of_set(s) == full)?;
    Ok(result(Invariant::GammaT, w, nodes))
}

fn neighborhoods_pairwise_disjoint(g: &Graph, s: &VertexSet, closed: bool) -> bool {
    let mut seen = VertexSet::new(g.order());
    for v in s.iter() {
        let nv = if closed {
            g.closed_neighbors(v)
        } else {
            g.neighbors(v)
        };
        if nv.intersects(&seen) {
            return false;
        }
        seen.union_with(nv);
    }
    true
}

pub fn rho_bf(g: &Graph, budget: &SolverBudget) -> Result<InvariantResult> {
    check_cap(g, budget)?;
    let (w, nodes) =
        max_subset_such_that(g, budget, |s| neighborhoods_pairwise_disjoint(g, s, true))?;
    Ok(result(Invariant::Rho, w, nodes))
}

pub fn rho_o_bf(g: &Graph, budget: &SolverBudget) -> Result<InvariantResult> {
    check_cap(g, budget)?;
    require_no_isolated(g, "rho_o")?;
    let (w, nodes) =
        max_subset_such_that(g, budget, |s| neighborhoods_pairwise_disjoint(g, s, false))?;
    Ok(result(Invariant::RhoO, w, nodes))
}

/// Digits of `code` base 3, vertex 0 most significant, so ascending code
/// order is lexicographic labeling order.
fn labels_from_code(n: usize, mut code: u64) -> Vec<u8> {
    let mut labels = vec![0u8; n];
    for v in (0..n).rev() {
        labels[v] = (code % 3) as u8;
        code /= 3;
    }
    labels
}

/// Minimum-weight labeling accepted by `pred`, lexicographically least
/// among the minima. None if nothing is accepted.
fn min_labeling_such_that(
    g: &Graph,
    budget: &SolverBudget,
    pred: impl Fn(&RomanLabeling) -> Result<bool>,
) -> Result<(Option<(usize, RomanLabeling)>, u64)> {
    let n = g.order();
    let mut tracker = Tracker::new(budget);
    let mut best: Option<(usize, RomanLabeling)> = None;
    for code in 0..3u64.pow(n as u32) {
        if tracker.tick().is_err() {
            return Err(tracker.exhausted(best.as_ref().map(|(w, _)| *w)));
        }
        let labels = labels_from_code(n, code);
        let weight: usize = labels.iter().map(|&l| l as usize).sum();
        if best.as_ref().is_some_and(|(w, _)| weight >= *w) {
            continue;
        }
        let f = RomanLabeling::from_labels(labels)?;
        if pred(&f)? {
            best = Some((weight, f));
        }
    }
    Ok((best, tracker.nodes))
}

pub fn gamma_r_bf(g: &Graph, budget: &SolverBudget) -> Result<InvariantResult> {
    check_cap(g, budget)?;
    let (best, nodes) = min_labeling_such_that(g, budget, |f| is_rdf(g, f))?;
    let (value, f) = best.expect("the all-ones labeling is an RDF");
    Ok(InvariantResult {
        invariant: Invariant::GammaR,
        value,
        witness: Witness::labeling(f),
        nodes_explored: nodes,
        method: Method::BruteForce,
    })
}

pub fn gamma_tr_bf(g: &Graph, budget: &SolverBudget) -> Result<InvariantResult> {
    check_cap(g, budget)?;
    require_no_isolated(g, "gamma_tR")?;
    let (best, nodes) = min_labeling_such_that(g, budget, |f| is_trdf(g, f))?;
    let (value, f) = best.expect("the all-ones labeling is a TRDF without isolated vertices");
    Ok(InvariantResult {
        invariant: Invariant::GammaTR,
        value,
        witness: Witness::labeling(f),
        nodes_explored: nodes,
        method: Method::BruteForce,
    })
}

/// Minimum RDF weight with `v` pinned to `label`.
pub fn gamma_r_forced_bf(
    g: &Graph,
    v: usize,
    label: u8,
    budget: &SolverBudget,
) -> Result<(usize, RomanLabeling)> {
    check_cap(g, budget)?;
    g.check_vertex(v)?;
    if label > 2 {
        return Err(Error::InvalidWitness(format!(
            "label {} is outside 0..=2",
            label
        )));
    }
    let (best, _) =
        min_labeling_such_that(g, budget, |f| Ok(f.get(v) == label && is_rdf(g, f)?))?;
    best.ok_or_else(|| {
        Error::Infeasible(format!(
            "no Roman dominating function assigns {} to vertex {}",
            label, v
        ))
    })
}

/// Every minimum-weight RDF in lexicographic label order.
pub fn optimal_rdfs(g: &Graph, budget: &SolverBudget) -> Result<Vec<RomanLabeling>> {
    check_cap(g, budget)?;
    let value = gamma_r_bf(g, budget)?.value;
    let n = g.order();
    let mut tracker = Tracker::new(budget);
    let mut out = Vec::new();
    for code in 0..3u64.pow(n as u32) {
        if tracker.tick().is_err() {
            return Err(tracker.exhausted(Some(value)));
        }
        let labels = labels_from_code(n, code);
        if labels.iter().map(|&l| l as usize).sum::<usize>() != value {
            continue;
        }
        let f = RomanLabeling::from_labels(labels)?;
        if is_rdf(g, &f)? {
            out.push(f);
        }
    }
    Ok(out)
}
