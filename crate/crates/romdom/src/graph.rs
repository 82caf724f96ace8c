//! Simple undirected graphs on dense vertex ids 0..n-1.
//!
//! Adjacency is stored as one bitset row per vertex; rows are immutable once
//! a graph is built. Closed neighborhood rows are precomputed because the
//! solvers hit them constantly.

use crate::error::{Error, Result};
use crate::set::VertexSet;
use std::fmt;

/// Order cap applied when graphs are built from user input. Products of
/// already-built graphs are exempt: they may exceed this freely.
pub const DEFAULT_MAX_ORDER: usize = 128;

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    closed: Vec<VertexSet>,
    m: usize,
    name: Option<String>,
}

impl Graph {
    pub fn build_from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        Graph::build_from_edges_with_limit(n, edges, DEFAULT_MAX_ORDER)
    }

    pub fn build_from_edges_with_limit(
        n: usize,
        edges: &[(usize, usize)],
        max_order: usize,
    ) -> Result<Graph> {
        if n > max_order {
            return Err(Error::GraphTooLarge {
                order: n,
                max: max_order,
            });
        }
        let mut adj = vec![VertexSet::new(n); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::InvalidVertex {
                        vertex: w,
                        order: n,
                    });
                }
            }
            if u == v {
                return Err(Error::LoopRejected(u));
            }
            // duplicate edges collapse silently
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph::from_adj(adj, None))
    }

    /// Internal assembly from finished adjacency rows (products, deletions).
    pub(crate) fn from_adj(adj: Vec<VertexSet>, name: Option<String>) -> Graph {
        let n = adj.len();
        let closed = adj
            .iter()
            .enumerate()
            .map(|(v, row)| {
                let mut c = row.clone();
                c.insert(v);
                c
            })
            .collect();
        let m = adj.iter().map(VertexSet::len).sum::<usize>() / 2;
        Graph {
            n,
            adj,
            closed,
            m,
            name,
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Graph {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// Name if set, otherwise an order/size summary.
    pub fn describe(&self) -> String {
        match &self.name {
            Some(s) => s.clone(),
            None => format!("graph(n={},m={})", self.n, self.m),
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.m
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                vertex: v,
                order: self.n,
            })
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.adj[u].contains(v)
    }

    /// Open neighborhood N(v) as a bitset row.
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    /// Closed neighborhood `N[v]`.
    pub fn closed_neighbors(&self, v: usize) -> &VertexSet {
        &self.closed[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// `N[S]` = union of closed neighborhoods over S.
    pub fn closed_neighborhood_of_set(&self, s: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new(self.n);
        for v in s.iter() {
            out.union_with(&self.closed[v]);
        }
        out
    }

    /// N(S) = union of open neighborhoods over S.
    pub fn open_neighborhood_of_set(&self, s: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new(self.n);
        for v in s.iter() {
            out.union_with(&self.adj[v]);
        }
        out
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.vertices().any(|v| self.adj[v].is_empty())
    }

    pub fn universal_vertices(&self) -> VertexSet {
        VertexSet::from_members(
            self.n,
            self.vertices().filter(|&v| self.degree(v) == self.n - 1),
        )
    }

    pub fn has_universal_vertex(&self) -> bool {
        !self.universal_vertices().is_empty()
    }

    /// True iff every component is a single edge.
    pub fn is_union_of_k2(&self) -> bool {
        self.n > 0 && self.vertices().all(|v| self.degree(v) == 1)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let mut seen = VertexSet::singleton(self.n, 0);
        let mut frontier = seen.clone();
        while !frontier.is_empty() {
            let mut next = self.open_neighborhood_of_set(&frontier);
            next.subtract(&seen);
            seen.union_with(&next);
            frontier = next;
        }
        seen.len() == self.n
    }

    /// Remove one vertex; survivors keep their relative order. The map sends
    /// old ids to new ids (None for the removed vertex).
    pub fn delete_vertex(&self, v: usize) -> Result<(Graph, Vec<Option<usize>>)> {
        self.check_vertex(v)?;
        if self.n == 1 {
            return Err(Error::WouldBeEmpty);
        }
        let map: Vec<Option<usize>> = (0..self.n)
            .map(|u| match u.cmp(&v) {
                std::cmp::Ordering::Less => Some(u),
                std::cmp::Ordering::Equal => None,
                std::cmp::Ordering::Greater => Some(u - 1),
            })
            .collect();
        let mut adj = vec![VertexSet::new(self.n - 1); self.n - 1];
        for u in 0..self.n {
            if u == v {
                continue;
            }
            let nu = map[u].unwrap();
            for w in self.adj[u].iter() {
                if w != v {
                    adj[nu].insert(map[w].unwrap());
                }
            }
        }
        let name = self.name.as_ref().map(|s| format!("{}-v{}", s, v));
        Ok((Graph::from_adj(adj, name), map))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}, edges: {:?})", self.describe(), self.edges())
    }
}

/// The families the CLI accepts inline and the tests lean on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Path P_n, n >= 1.
    Path(usize),
    /// Cycle C_n, n >= 3.
    Cycle(usize),
    /// Complete K_n, n >= 1.
    Complete(usize),
    /// Complete bipartite K_{s,t}, s,t >= 1. Side of size s first.
    CompleteBipartite(usize, usize),
    /// Star K_{1,n} with n >= 1 leaves; vertex 0 is the center.
    Star(usize),
}

pub fn generate(family: Family) -> Result<Graph> {
    let bad = |msg: String| Err(Error::InvalidFamilyParams(msg));
    let check_cap = |order: usize| {
        if order > DEFAULT_MAX_ORDER {
            Err(Error::GraphTooLarge {
                order,
                max: DEFAULT_MAX_ORDER,
            })
        } else {
            Ok(())
        }
    };
    match family {
        Family::Path(n) => {
            if n < 1 {
                return bad("path needs n >= 1".into());
            }
            check_cap(n)?;
            let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
            Ok(Graph::build_from_edges(n, &edges)?.with_name(format!("P{}", n)))
        }
        Family::Cycle(n) => {
            if n < 3 {
                return bad(format!("cycle needs n >= 3, got {}", n));
            }
            check_cap(n)?;
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Ok(Graph::build_from_edges(n, &edges)?.with_name(format!("C{}", n)))
        }
        Family::Complete(n) => {
            if n < 1 {
                return bad("complete graph needs n >= 1".into());
            }
            check_cap(n)?;
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    edges.push((u, v));
                }
            }
            Ok(Graph::build_from_edges(n, &edges)?.with_name(format!("K{}", n)))
        }
        Family::CompleteBipartite(s, t) => {
            if s < 1 || t < 1 {
                return bad(format!("complete bipartite needs s,t >= 1, got {},{}", s, t));
            }
            check_cap(s + t)?;
            let mut edges = Vec::new();
            for u in 0..s {
                for v in 0..t {
                    edges.push((u, s + v));
                }
            }
            Ok(Graph::build_from_edges(s + t, &edges)?.with_name(format!("K{},{}", s, t)))
        }
        Family::Star(leaves) => {
            if leaves < 1 {
                return bad("star needs at least one leaf".into());
            }
            check_cap(leaves + 1)?;
            let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
            Ok(Graph::build_from_edges(leaves + 1, &edges)?.with_name(format!("K1,{}", leaves)))
        }
    }
}
