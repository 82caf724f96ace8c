//! Exact Roman domination on graphs and their products.
//!
//! The crate computes domination-style invariants exactly: the domination
//! number, total domination number, packing and open packing numbers,
//! Roman and total Roman domination numbers, and the kernel number of a
//! graph. On top of the solvers it builds direct and rooted products,
//! materializes the labelings behind the product upper bounds, and checks
//! every computed bound against the exact values.
//!
//! Graphs are undirected and simple, stored as bitset adjacency rows, and
//! capped at 128 vertices by default. Every solver returns a witness (a
//! vertex set or a 0/1/2 labeling) that is canonical: least in bitset
//! integer order for sets, lexicographically least for labelings, so runs
//! are reproducible bit for bit.

pub mod analysis;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod labeling;
pub mod products;
pub mod set;
pub mod solve;

pub use analysis::{
    direct_bounds_report, known_bounds_suite, lemma_restriction_check, rooted_classify,
    rooted_sandwich_check, BoundEntry, BoundSide, BoundsReport, KnownBoundCheck,
    KnownBoundsReport, RestrictionReport, RootedCase, RootedCertificates, RootedClassification,
    SandwichReport, EXACT_DEFAULT_MAX_ORDER,
};
pub use constructions::{
    rooted_ub, ub_dom_total, ub_equal_domination, ub_equal_domination_dominating, ub_kernel,
    ub_trdf_dom, BoundId, ConstructedBound, RootedUbMode,
};
pub use error::{Error, Result};
pub use graph::{generate, Family, Graph, DEFAULT_MAX_ORDER};
pub use labeling::{is_rdf, is_trdf, restrict_to_copy, RomanLabeling};
pub use products::{direct_product, rooted_product, ProductIndexMap, RootedProduct};
pub use set::VertexSet;
pub use solve::{
    gamma, gamma_r, gamma_t, gamma_tr, kernel_number, rho, rho_o, Invariant, InvariantResult,
    KernelCertificate, Method, SolverBudget, Witness,
};
