//! Exact solvers for the seven invariants.
//!
//! Every solver is a deterministic single-threaded branch and bound (or a
//! capped brute-force enumerator in [`brute`]); repeated runs return the
//! same value, the same witness and the same node count. Witness ties are
//! broken toward the set that is least in [`VertexSet::cmp_value`] order.

mod cover;
mod kernel;
mod mis;
mod roman;
mod trdf;

pub mod brute;

pub use cover::{enumerate_gamma_t_sets, gamma, gamma_t, gamma_t_superset};
pub use kernel::{kernel_number, KernelCertificate};
pub use mis::{rho, rho_o};
pub use roman::{gamma_r, gamma_r_forced, gamma_r_with_hint};
pub use trdf::{enumerate_gamma_tr_functions, gamma_tr};

use crate::error::Error;
use crate::labeling::RomanLabeling;
use crate::set::VertexSet;
use serde::{Deserialize, Serialize};
use std::time::Instant;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SolverBudget {
    /// Branch-and-bound node limit per solver invocation.
    pub max_nodes: u64,
    /// Wall-clock limit per solver invocation, in seconds.
    pub max_seconds: f64,
    /// Order cap for the 2^n / 3^n enumerators in [`brute`].
    pub max_n_bruteforce: usize,
}

impl Default for SolverBudget {
    fn default() -> Self {
        SolverBudget {
            max_nodes: 100_000_000,
            max_seconds: 60.0,
            max_n_bruteforce: 14,
        }
    }
}

impl SolverBudget {
    pub fn unlimited() -> Self {
        SolverBudget {
            max_nodes: u64::MAX,
            max_seconds: f64::INFINITY,
            max_n_bruteforce: usize::MAX,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Invariant {
    Gamma,
    GammaT,
    Rho,
    RhoO,
    GammaR,
    GammaTR,
    KernelK,
}

impl Invariant {
    pub fn id(self) -> &'static str {
        match self {
            Invariant::Gamma => "gamma",
            Invariant::GammaT => "gamma_t",
            Invariant::Rho => "rho",
            Invariant::RhoO => "rho_o",
            Invariant::GammaR => "gamma_R",
            Invariant::GammaTR => "gamma_tR",
            Invariant::KernelK => "kernel_k",
        }
    }

    pub const ALL: [Invariant; 7] = [
        Invariant::Gamma,
        Invariant::GammaT,
        Invariant::Rho,
        Invariant::RhoO,
        Invariant::GammaR,
        Invariant::GammaTR,
        Invariant::KernelK,
    ];
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    BranchAndBound,
    BruteForce,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Set { vertices: VertexSet },
    Labeling { labeling: RomanLabeling },
}

impl Witness {
    pub fn set(vertices: VertexSet) -> Witness {
        Witness::Set { vertices }
    }

    pub fn labeling(labeling: RomanLabeling) -> Witness {
        Witness::Labeling { labeling }
    }

    pub fn as_set(&self) -> Option<&VertexSet> {
        match self {
            Witness::Set { vertices } => Some(vertices),
            Witness::Labeling { .. } => None,
        }
    }

    pub fn as_labeling(&self) -> Option<&RomanLabeling> {
        match self {
            Witness::Labeling { labeling } => Some(labeling),
            Witness::Set { .. } => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InvariantResult {
    pub invariant: Invariant,
    pub value: usize,
    pub witness: Witness,
    pub nodes_explored: u64,
    pub method: Method,
}

/// Node and wall-clock accounting shared by the search engines.
pub(crate) struct Tracker {
    pub nodes: u64,
    max_nodes: u64,
    start: Instant,
    max_seconds: f64,
}

impl Tracker {
    pub fn new(budget: &SolverBudget) -> Tracker {
        Tracker {
            nodes: 0,
            max_nodes: budget.max_nodes,
            start: Instant::now(),
            max_seconds: budget.max_seconds,
        }
    }

    /// Count one search node; Err(()) means the budget ran out.
    pub fn tick(&mut self) -> std::result::Result<(), ()> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(());
        }
        if self.nodes.is_multiple_of(4096)
            && self.start.elapsed().as_secs_f64() > self.max_seconds
        {
            return Err(());
        }
        Ok(())
    }

    pub fn exhausted(&self, best: Option<usize>) -> Error {
        Error::BudgetExceeded {
            nodes: self.nodes,
            best,
        }
    }
}

/// Candidate ordering used by every engine: descending degree, then index.
pub(crate) fn degree_order(g: &crate::graph::Graph) -> Vec<usize> {
    let mut order: Vec<usize> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order
}

/// Rank of each vertex in `degree_order` (lower rank = tried earlier).
pub(crate) fn degree_rank(g: &crate::graph::Graph) -> Vec<usize> {
    let order = degree_order(g);
    let mut rank = vec![0; order.len()];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }
    rank
}

pub(crate) fn sorted_by_rank(set: &VertexSet, rank: &[usize]) -> Vec<usize> {
    let mut vs = set.members();
    vs.sort_by_key(|&v| rank[v]);
    vs
}
