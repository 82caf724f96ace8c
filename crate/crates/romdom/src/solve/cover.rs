//! Minimum neighborhood-cover searches: domination and total domination.
//!
//! Both invariants are instances of one problem: pick a minimum set S so
//! that every vertex v has a pick inside cover[v], where cover[v] is N[v]
//! (domination) or N(v) (total domination). Because adjacency is symmetric,
//! cover[u] also tells which vertices a pick of u satisfies.

use super::{degree_rank, Invariant, InvariantResult, Method, SolverBudget, Tracker, Witness};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;
use std::cmp::Ordering;

struct CoverSearch<'a> {
    n: usize,
    cover: &'a [VertexSet],
    rank: &'a [usize],
    /// Best complete solution so far: (cardinality, picks).
    best: Option<(usize, VertexSet)>,
    /// When set, every optimal solution is recorded, not just the least one.
    all_optima: Option<Vec<VertexSet>>,
    tracker: Tracker,
}

impl<'a> CoverSearch<'a> {
    fn satisfied_by(&self, s: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new(self.n);
        for u in s.iter() {
            out.union_with(&self.cover[u]);
        }
        out
    }

    /// Greedy disjoint-cover packing: a lower bound on the picks still
    /// needed. Members with pairwise disjoint candidate sets cannot share a
    /// pick.
    fn packing_bound(&self, unsatisfied: &VertexSet) -> Result<usize> {
        let mut used = VertexSet::new(self.n);
        let mut count = 0;
        for v in unsatisfied.iter() {
            if self.cover[v].is_disjoint(&used) {
                used.union_with(&self.cover[v]);
                count += 1;
            }
        }
        Ok(count)
    }

    fn record(&mut self, s: &VertexSet) {
        let size = s.len();
        let better = match &self.best {
            None => true,
            Some((b, w)) => {
                size < *b || (size == *b && s.cmp_value(w) == Ordering::Less)
            }
        };
        if let Some(all) = &mut self.all_optima {
            match &self.best {
                Some((b, _)) if size > *b => return,
                Some((b, _)) if size == *b => {
                    all.push(s.clone());
                }
                _ => {
                    all.clear();
                    all.push(s.clone());
                }
            }
        }
        if better {
            self.best = Some((size, s.clone()));
        }
    }

    fn dfs(&mut self, s: VertexSet, satisfied: VertexSet, banned: VertexSet) -> Result<()> {
        if self.tracker.tick().is_err() {
            let best = self.best.as_ref().map(|(b, _)| *b);
            return Err(self.tracker.exhausted(best));
        }
        let unsatisfied = satisfied.complement();
        if unsatisfied.is_empty() {
            self.record(&s);
            return Ok(());
        }
        if let Some((b, _)) = &self.best {
            let bound = s.len() + self.packing_bound(&unsatisfied)?;
            // ties still explored: equal-size optima feed the witness order
            // and the all-optima listing
            if bound > *b {
                return Ok(());
            }
        }
        // branch on the unsatisfied vertex with the fewest usable picks
        let mut branch = None;
        for v in unsatisfied.iter() {
            let mut cands = self.cover[v].clone();
            cands.subtract(&banned);
            let k = cands.len();
            if k == 0 {
                return Ok(()); // dead: v can no longer be covered
            }
            if branch.as_ref().is_none_or(|(bk, _, _)| k < *bk) {
                branch = Some((k, v, cands));
            }
        }
        let (_, _, cands) = branch.unwrap();
        // children partition the solution space: child i picks u_i and bans
        // u_1..u_{i-1}, so no solution is visited twice
        let mut child_ban = banned;
        for u in super::sorted_by_rank(&cands, self.rank) {
            let mut s2 = s.clone();
            s2.insert(u);
            let mut sat2 = satisfied.clone();
            sat2.union_with(&self.cover[u]);
            self.dfs(s2, sat2, child_ban.clone())?;
            child_ban.insert(u);
        }
        Ok(())
    }
}

fn run_cover(
    g: &Graph,
    cover: &[VertexSet],
    forced: &VertexSet,
    budget: &SolverBudget,
    all_optima: bool,
) -> Result<(usize, VertexSet, Option<Vec<VertexSet>>, u64)> {
    let rank = degree_rank(g);
    let mut search = CoverSearch {
        n: g.order(),
        cover,
        rank: &rank,
        best: None,
        all_optima: if all_optima { Some(Vec::new()) } else { None },
        tracker: Tracker::new(budget),
    };
    let satisfied = search.satisfied_by(forced);
    search.dfs(forced.clone(), satisfied, VertexSet::new(g.order()))?;
    let (value, witness) = search.best.expect("cover search always completes");
    let mut all = search.all_optima;
    if let Some(list) = &mut all {
        list.sort_by(|a, b| a.cmp_value(b));
    }
    Ok((value, witness, all, search.tracker.nodes))
}

fn closed_rows(g: &Graph) -> Vec<VertexSet> {
    g.vertices().map(|v| g.closed_neighbors(v).clone()).collect()
}

fn open_rows(g: &Graph) -> Vec<VertexSet> {
    g.vertices().map(|v| g.neighbors(v).clone()).collect()
}

/// Domination number. Defined for every graph; isolated vertices force
/// themselves into the set.
pub fn gamma(g: &Graph, budget: &SolverBudget) -> Result<InvariantResult> {
    let rows = closed_rows(g);
    let (value, witness, _, nodes) =
        run_cover(g, &rows, &VertexSet::new(g.order()), budget, false)?;
    Ok(InvariantResult {
        invariant: Invariant::Gamma,
        value,
        witness: Witness::set(witness),
        nodes_explored: nodes,
        method: Method::BranchAndBound,
    })
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

/// Total domination number; undefined when the graph has an isolated vertex.
pub fn gamma_t(g: &Graph, budget: &SolverBudget) -> Result<InvariantResult> {
    require_no_isolated(g, "gamma_t")?;
    let rows = open_rows(g);
    let (value, witness, _, nodes) =
        run_cover(g, &rows, &VertexSet::new(g.order()), budget, false)?;
    Ok(InvariantResult {
        invariant: Invariant::GammaT,
        value,
        witness: Witness::set(witness),
        nodes_explored: nodes,
        method: Method::BranchAndBound,
    })
}

/// Minimum total dominating set containing `forced`.
pub fn gamma_t_superset(
    g: &Graph,
    forced: &VertexSet,
    budget: &SolverBudget,
) -> Result<(usize, VertexSet)> {
    require_no_isolated(g, "gamma_t")?;
    if forced.universe() != g.order() {
        return Err(Error::DimensionMismatch(format!(
            "forced set lives on universe {}, graph order is {}",
            forced.universe(),
            g.order()
        )));
    }
    let rows = open_rows(g);
    let (value, witness, _, _) = run_cover(g, &rows, forced, budget, false)?;
    Ok((value, witness))
}

/// Every minimum total dominating set, ascending in value order.
pub fn enumerate_gamma_t_sets(g: &Graph, budget: &SolverBudget) -> Result<Vec<VertexSet>> {
    require_no_isolated(g, "gamma_t")?;
    let rows = open_rows(g);
    let (_, _, all, _) = run_cover(g, &rows, &VertexSet::new(g.order()), budget, true)?;
    Ok(all.expect("all-optima mode"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    fn budget() -> SolverBudget {
        SolverBudget::default()
    }

    #[test]
    fn gamma_small_families() {
        for (fam, want) in [
            (Family::Path(4), 2),
            (Family::Path(5), 2),
            (Family::Cycle(8), 3),
            (Family::Complete(6), 1),
            (Family::Star(5), 1),
            (Family::CompleteBipartite(2, 3), 2),
            (Family::Path(1), 1),
        ] {
            let g = generate(fam).unwrap();
            let r = gamma(&g, &budget()).unwrap();
            assert_eq!(r.value, want, "gamma of {:?}", fam);
            let d = r.witness.as_set().unwrap();
            assert_eq!(d.len(), want);
            assert_eq!(g.closed_neighborhood_of_set(d).len(), g.order());
        }
    }

    #[test]
    fn gamma_witness_is_least() {
        // dominating pairs of P5 are {0,3}, {1,3}, {1,4}; {0,3} has the
        // smallest set value 2^0 + 2^3
        let p5 = generate(Family::Path(5)).unwrap();
        let r = gamma(&p5, &budget()).unwrap();
        assert_eq!(r.witness.as_set().unwrap().members(), vec![0, 3]);
    }

    #[test]
    fn gamma_t_small_families() {
        for (fam, want) in [
            (Family::Path(4), 2),
            (Family::Path(5), 3),
            (Family::Path(8), 4),
            (Family::Cycle(8), 4),
            (Family::Complete(5), 2),
            (Family::Star(4), 2),
        ] {
            let g = generate(fam).unwrap();
            let r = gamma_t(&g, &budget()).unwrap();
            assert_eq!(r.value, want, "gamma_t of {:?}", fam);
            let d = r.witness.as_set().unwrap();
            assert_eq!(g.open_neighborhood_of_set(d).len(), g.order());
        }
    }

    #[test]
    fn gamma_t_undefined_with_isolated_vertex() {
        let g = generate(Family::Path(1)).unwrap();
        assert!(matches!(
            gamma_t(&g, &budget()),
            Err(Error::Undefined { invariant: "gamma_t", .. })
        ));
    }

    #[test]
    fn p5_has_unique_gamma_t_set() {
        let p5 = generate(Family::Path(5)).unwrap();
        let all = enumerate_gamma_t_sets(&p5, &budget()).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].members(), vec![1, 2, 3]);
    }

    #[test]
    fn c8_gamma_t_sets_include_papers_example() {
        let c8 = generate(Family::Cycle(8)).unwrap();
        let all = enumerate_gamma_t_sets(&c8, &budget()).unwrap();
        assert!(all.iter().all(|d| d.len() == 4));
        assert!(all
            .iter()
            .any(|d| d.members() == vec![1, 2, 5, 6]));
        // every enumerated set really is total dominating
        for d in &all {
            assert_eq!(c8.open_neighborhood_of_set(d).len(), 8);
        }
    }

    #[test]
    fn superset_constraint_respected() {
        let p5 = generate(Family::Path(5)).unwrap();
        let forced = VertexSet::from_members(5, [0]);
        let (value, w) = gamma_t_superset(&p5, &forced, &budget()).unwrap();
        assert!(forced.is_subset(&w));
        assert_eq!(w.len(), value);
        assert_eq!(p5.open_neighborhood_of_set(&w).len(), 5);
        // forcing the leaf in costs one extra pick over gamma_t = 3
        assert_eq!(value, 4);
    }

    #[test]
    fn budget_exhaustion_reports_nodes() {
        let g = generate(Family::Cycle(12)).unwrap();
        let tiny = SolverBudget {
            max_nodes: 3,
            ..SolverBudget::default()
        };
        match gamma(&g, &tiny) {
            Err(Error::BudgetExceeded { nodes, .. }) => assert_eq!(nodes, 4),
            other => panic!("expected budget error, got {:?}", other),
        }
    }
}
