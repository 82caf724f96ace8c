//! Packing numbers via maximum independent set on a conflict graph.
//!
//! Two vertices conflict when their (closed for rho, open for rho_o)
//! neighborhoods intersect; a packing is exactly an independent set of the
//! conflict relation.

use super::{Invariant, InvariantResult, Method, SolverBudget, Tracker, Witness};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;
use std::cmp::Ordering;

struct MisSearch<'a> {
    conflict: &'a [VertexSet],
    best: Option<(usize, VertexSet)>,
    tracker: Tracker,
}

impl<'a> MisSearch<'a> {
    fn record(&mut self, a: &VertexSet) {
        let size = a.len();
        let better = match &self.best {
            None => true,
            Some((b, w)) => size > *b || (size == *b && a.cmp_value(w) == Ordering::Less),
        };
        if better {
            self.best = Some((size, a.clone()));
        }
    }

    fn dfs(&mut self, chosen: VertexSet, open: VertexSet) -> Result<()> {
        if self.tracker.tick().is_err() {
            let best = self.best.as_ref().map(|(b, _)| *b);
            return Err(self.tracker.exhausted(best));
        }
        if open.is_empty() {
            self.record(&chosen);
            return Ok(());
        }
        if let Some((b, _)) = &self.best {
            // ties explored so the least maximum set wins
            if chosen.len() + open.len() < *b {
                return Ok(());
            }
        }
        // branch on the open vertex with the most open conflicts; vertices
        // with none are forced in
        let mut branch = None;
        for v in open.iter() {
            let k = self.conflict[v].intersection(&open).len();
            if k == 0 {
                let mut chosen2 = chosen.clone();
                chosen2.insert(v);
                let mut open2 = open.clone();
                open2.remove(v);
                return self.dfs(chosen2, open2);
            }
            if branch.as_ref().is_none_or(|(bk, bv)| k > *bk || (k == *bk && v < *bv)) {
                branch = Some((k, v));
            }
        }
        let (_, v) = branch.unwrap();
        // include v
        let mut chosen2 = chosen.clone();
        chosen2.insert(v);
        let mut open2 = open.clone();
        open2.remove(v);
        open2.subtract(&self.conflict[v]);
        self.dfs(chosen2, open2)?;
        // exclude v
        let mut open3 = open;
        open3.remove(v);
        self.dfs(chosen, open3)
    }
}

fn max_packing(
    g: &Graph,
    conflict: &[VertexSet],
    budget: &SolverBudget,
) -> Result<(usize, VertexSet, u64)> {
    let mut search = MisSearch {
        conflict,
        best: None,
        tracker: Tracker::new(budget),
    };
    search.dfs(VertexSet::new(g.order()), VertexSet::full(g.order()))?;
    let (value, witness) = search.best.expect("packing search always completes");
    Ok((value, witness, search.tracker.nodes))
}

fn conflict_rows(g: &Graph, closed: bool) -> Vec<VertexSet> {
    let n = g.order();
    let row = |v: usize| -> VertexSet {
        if closed {
            g.closed_neighbors(v).clone()
        } else {
            g.neighbors(v).clone()
        }
    };
    let rows: Vec<VertexSet> = g.vertices().map(row).collect();
    (0..n)
        .map(|u| {
            let mut c = VertexSet::new(n);
            for v in 0..n {
                if v != u && rows[u].intersects(&rows[v]) {
                    c.insert(v);
                }
            }
            c
        })
        .collect()
}

/// Packing number: maximum set with pairwise disjoint closed neighborhoods.
pub fn rho(g: &Graph, budget: &SolverBudget) -> Result<InvariantResult> {
    let conflict = conflict_rows(g, true);
    let (value, witness, nodes) = max_packing(g, &conflict, budget)?;
    Ok(InvariantResult {
        invariant: Invariant::Rho,
        value,
        witness: Witness::set(witness),
        nodes_explored: nodes,
        method: Method::BranchAndBound,
    })
}

/// Open packing number: pairwise disjoint open neighborhoods; undefined
/// when the graph has an isolated vertex.
pub fn rho_o(g: &Graph, budget: &SolverBudget) -> Result<InvariantResult> {
    if g.has_isolated_vertex() {
        return Err(Error::Undefined {
            invariant: "rho_o",
            reason: "the graph has an isolated vertex".into(),
        });
    }
    let conflict = conflict_rows(g, false);
    let (value, witness, nodes) = max_packing(g, &conflict, budget)?;
    Ok(InvariantResult {
        invariant: Invariant::RhoO,
        value,
        witness: Witness::set(witness),
        nodes_explored: nodes,
        method: Method::BranchAndBound,
    })
}
