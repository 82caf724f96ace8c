//! Direct (tensor) products and rooted products.
//!
//! Both use the row-major pair encoding (u,v) -> u*n_h + v, so a product
//! vertex decodes back to its factor pair with one divmod.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;

/// Bijection between factor pairs and product vertex ids.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProductIndexMap {
    pub n_g: usize,
    pub n_h: usize,
}

impl ProductIndexMap {
    pub fn encode(&self, u: usize, v: usize) -> usize {
        debug_assert!(u < self.n_g && v < self.n_h);
        u * self.n_h + v
    }

    pub fn decode(&self, p: usize) -> (usize, usize) {
        debug_assert!(p < self.n_g * self.n_h);
        (p / self.n_h, p % self.n_h)
    }

    pub fn product_order(&self) -> usize {
        self.n_g * self.n_h
    }
}

/// Direct product: (u,v) ~ (u',v') iff uu' in E(G) and vv' in E(H).
pub fn direct_product(g: &Graph, h: &Graph) -> (Graph, ProductIndexMap) {
    let map = ProductIndexMap {
        n_g: g.order(),
        n_h: h.order(),
    };
    let n = map.product_order();
    let mut adj = vec![VertexSet::new(n); n];
    for u in g.vertices() {
        for v in h.vertices() {
            let row = &mut adj[map.encode(u, v)];
            for up in g.neighbors(u).iter() {
                for vp in h.neighbors(v).iter() {
                    row.insert(up * map.n_h + vp);
                }
            }
        }
    }
    let name = format!("{} x {}", g.describe(), h.describe());
    (Graph::from_adj(adj, Some(name)), map)
}

/// Rooted product: one copy of H per vertex of G, the copy at x glued to x
/// by identifying the root v of H with x. Spine vertices (the glued roots)
/// inherit G's edges on top of their copy's edges.
#[derive(Debug, Clone)]
pub struct RootedProduct {
    pub graph: Graph,
    /// Root vertex of H that the gluing identifies with each G-vertex.
    pub root: usize,
    pub n_g: usize,
    pub n_h: usize,
}

impl RootedProduct {
    pub fn encode(&self, x: usize, w: usize) -> usize {
        debug_assert!(x < self.n_g && w < self.n_h);
        x * self.n_h + w
    }

    /// Product vertex -> (copy index in G, vertex of H inside the copy).
    pub fn decode(&self, p: usize) -> (usize, usize) {
        debug_assert!(p < self.n_g * self.n_h);
        (p / self.n_h, p % self.n_h)
    }

    /// The glued root of copy x, i.e. the image of x itself.
    pub fn spine_vertex(&self, x: usize) -> usize {
        self.encode(x, self.root)
    }

    pub fn spine(&self) -> VertexSet {
        VertexSet::from_members(
            self.graph.order(),
            (0..self.n_g).map(|x| self.spine_vertex(x)),
        )
    }

    /// All vertices of copy x (the spine vertex included).
    pub fn copy_vertices(&self, x: usize) -> VertexSet {
        VertexSet::from_members(
            self.graph.order(),
            (0..self.n_h).map(|w| self.encode(x, w)),
        )
    }
}

pub fn rooted_product(g: &Graph, h: &Graph, v: usize) -> Result<RootedProduct> {
    h.check_vertex(v)?;
    if g.order() < 2 || h.order() < 2 {
        return Err(Error::InvalidFamilyParams(
            "rooted product needs nontrivial factors (order >= 2)".into(),
        ));
    }
    let (n_g, n_h) = (g.order(), h.order());
    let n = n_g * n_h;
    let mut adj = vec![VertexSet::new(n); n];
    for x in g.vertices() {
        let base = x * n_h;
        for w in h.vertices() {
            for wp in h.neighbors(w).iter() {
                adj[base + w].insert(base + wp);
            }
        }
        for xp in g.neighbors(x).iter() {
            adj[base + v].insert(xp * n_h + v);
        }
    }
    let name = format!("{} o {} @{}", g.describe(), h.describe(), v);
    Ok(RootedProduct {
        graph: Graph::from_adj(adj, Some(name)),
        root: v,
        n_g,
        n_h,
    })
}
