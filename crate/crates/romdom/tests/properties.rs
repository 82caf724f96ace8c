//! Randomized properties: structural identities of the product operations,
//! sanity of every solver witness, agreement between the branch-and-bound
//! engines and the brute-force oracles, and the sandwich/trichotomy claims
//! on rooted products.

use proptest::prelude::*;
use romdom::solve::brute;
use romdom::solve::gamma_r_forced;
use romdom::*;

fn bits_graph(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for u in 0..n {
        for v in (u + 1)..n {
            if bits[k] {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::build_from_edges(n, &edges).unwrap()
}

fn arb_graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2)
            .prop_map(move |bits| bits_graph(n, &bits))
    })
}

fn arb_isolate_free(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    arb_graph(lo, hi).prop_filter("isolated vertex", |g| !g.has_isolated_vertex())
}

fn arb_graph_with_labeling(lo: usize, hi: usize) -> impl Strategy<Value = (Graph, RomanLabeling)> {
    arb_graph(lo, hi).prop_flat_map(|g| {
        let n = g.order();
        (
            Just(g),
            proptest::collection::vec(0u8..=2, n)
                .prop_map(|labels| RomanLabeling::from_labels(labels).unwrap()),
        )
    })
}

/// Greedy dominating set, independent of the solvers.
fn greedy_dominating(g: &Graph) -> VertexSet {
    let mut d = VertexSet::new(g.order());
    let mut covered = VertexSet::new(g.order());
    for v in 0..g.order() {
        if !covered.contains(v) {
            d.insert(v);
            covered.union_with(g.closed_neighbors(v));
        }
    }
    d
}

fn is_packing(g: &Graph, s: &VertexSet) -> bool {
    let members = s.members();
    members.iter().enumerate().all(|(i, &u)| {
        members[i + 1..]
            .iter()
            .all(|&v| g.closed_neighbors(u).is_disjoint(g.closed_neighbors(v)))
    })
}

fn is_open_packing(g: &Graph, s: &VertexSet) -> bool {
    let members = s.members();
    members.iter().enumerate().all(|(i, &u)| {
        members[i + 1..]
            .iter()
            .all(|&v| g.neighbors(u).is_disjoint(g.neighbors(v)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn direct_product_counts_and_commutativity(g in arb_graph(2, 6), h in arb_graph(2, 6)) {
        let (p, pm) = direct_product(&g, &h);
        prop_assert_eq!(p.order(), g.order() * h.order());
        prop_assert_eq!(p.size(), 2 * g.size() * h.size());
        let (q, qm) = direct_product(&h, &g);
        for u in 0..g.order() {
            for v in 0..h.order() {
                for u2 in 0..g.order() {
                    for v2 in 0..h.order() {
                        prop_assert_eq!(
                            p.has_edge(pm.encode(u, v), pm.encode(u2, v2)),
                            q.has_edge(qm.encode(v, u), qm.encode(v2, u2))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn rooted_product_shape(
        g in arb_graph(2, 6),
        h in arb_graph(2, 6),
        sel in any::<prop::sample::Index>(),
    ) {
        let v = sel.index(h.order());
        let rp = rooted_product(&g, &h, v).unwrap();
        prop_assert_eq!(rp.graph.order(), g.order() * h.order());
        prop_assert_eq!(rp.graph.size(), g.size() + g.order() * h.size());
        for x in 0..g.order() {
            for w in 0..h.order() {
                let expected = h.degree(w)
                    + if w == v { g.degree(x) } else { 0 };
                prop_assert_eq!(rp.graph.degree(rp.encode(x, w)), expected);
            }
        }
    }

    #[test]
    fn vertex_deletion_preserves_the_rest(
        g in arb_graph(2, 8),
        sel in any::<prop::sample::Index>(),
    ) {
        let v = sel.index(g.order());
        let (d, map) = g.delete_vertex(v).unwrap();
        prop_assert_eq!(d.order(), g.order() - 1);
        prop_assert_eq!(d.size(), g.size() - g.degree(v));
        for u in 0..g.order() {
            for w in 0..g.order() {
                if u == v || w == v || u == w {
                    continue;
                }
                prop_assert_eq!(
                    d.has_edge(map[u].unwrap(), map[w].unwrap()),
                    g.has_edge(u, w)
                );
            }
        }
    }

    #[test]
    fn total_roman_implies_roman((g, f) in arb_graph_with_labeling(2, 8)) {
        if is_trdf(&g, &f).unwrap() {
            prop_assert!(is_rdf(&g, &f).unwrap());
        }
    }

    #[test]
    fn twos_on_a_dominating_set_form_an_rdf(g in arb_graph(2, 10)) {
        let d = greedy_dominating(&g);
        let f = RomanLabeling::from_sets(g.order(), &VertexSet::new(g.order()), &d).unwrap();
        prop_assert!(is_rdf(&g, &f).unwrap());
    }

    #[test]
    fn copy_restrictions_partition_the_weight(
        g in arb_graph(2, 5),
        h in arb_graph(2, 5),
        sel in any::<prop::sample::Index>(),
        raw in proptest::collection::vec(0u8..=2, 25),
    ) {
        let v = sel.index(h.order());
        let rp = rooted_product(&g, &h, v).unwrap();
        let f = RomanLabeling::from_labels(raw[..rp.graph.order()].to_vec()).unwrap();
        let total: usize = (0..g.order())
            .map(|x| restrict_to_copy(&rp, &f, x).unwrap().weight())
            .sum();
        prop_assert_eq!(total, f.weight());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn invariant_chains_hold(g in arb_isolate_free(2, 8)) {
        let b = SolverBudget::default();
        let gam = gamma(&g, &b).unwrap().value;
        let gt = gamma_t(&g, &b).unwrap().value;
        let gr = gamma_r(&g, &b).unwrap().value;
        let gtr = gamma_tr(&g, &b).unwrap().value;
        let p = rho(&g, &b).unwrap().value;
        let po = rho_o(&g, &b).unwrap().value;
        prop_assert!(gam <= gr && gr <= 2 * gam);
        prop_assert!(gt <= gr);
        prop_assert!(gr <= gtr && gtr <= 3 * gam);
        prop_assert!(p <= gam);
        prop_assert!(po <= gt);
    }

    #[test]
    fn witnesses_certify_their_values(g in arb_isolate_free(2, 8)) {
        let b = SolverBudget::default();
        let full = VertexSet::full(g.order());

        let dom = gamma(&g, &b).unwrap();
        let d = dom.witness.as_set().unwrap();
        prop_assert_eq!(d.len(), dom.value);
        prop_assert_eq!(g.closed_neighborhood_of_set(d), full.clone());

        let tot = gamma_t(&g, &b).unwrap();
        let t = tot.witness.as_set().unwrap();
        prop_assert_eq!(t.len(), tot.value);
        prop_assert_eq!(g.open_neighborhood_of_set(t), full);

        let rom = gamma_r(&g, &b).unwrap();
        let f = rom.witness.as_labeling().unwrap();
        prop_assert_eq!(f.weight(), rom.value);
        prop_assert!(is_rdf(&g, f).unwrap());

        let trom = gamma_tr(&g, &b).unwrap();
        let f = trom.witness.as_labeling().unwrap();
        prop_assert_eq!(f.weight(), trom.value);
        prop_assert!(is_trdf(&g, f).unwrap());

        let pack = rho(&g, &b).unwrap();
        let s = pack.witness.as_set().unwrap();
        prop_assert_eq!(s.len(), pack.value);
        prop_assert!(is_packing(&g, s));

        let open = rho_o(&g, &b).unwrap();
        let s = open.witness.as_set().unwrap();
        prop_assert_eq!(s.len(), open.value);
        prop_assert!(is_open_packing(&g, s));

        let (kern, cert) = kernel_number(&g, &b).unwrap();
        prop_assert_eq!(cert.d.len(), tot.value);
        prop_assert_eq!(g.open_neighborhood_of_set(&cert.d), VertexSet::full(g.order()));
        prop_assert!(cert.d_prime.is_subset(&cert.d));
        prop_assert_eq!(
            g.closed_neighborhood_of_set(&cert.d_prime),
            VertexSet::full(g.order())
        );
        prop_assert_eq!(cert.d.difference(&cert.d_prime), cert.kernel.clone());
        prop_assert_eq!(kern.value, cert.kernel.len());
    }

    #[test]
    fn solvers_are_deterministic(g in arb_isolate_free(2, 8)) {
        let b = SolverBudget::default();
        prop_assert_eq!(gamma_r(&g, &b).unwrap(), gamma_r(&g, &b).unwrap());
        prop_assert_eq!(gamma_tr(&g, &b).unwrap(), gamma_tr(&g, &b).unwrap());
        prop_assert_eq!(gamma_t(&g, &b).unwrap(), gamma_t(&g, &b).unwrap());
    }

    #[test]
    fn engines_match_the_oracles(g in arb_graph(2, 7)) {
        let b = SolverBudget::default();
        prop_assert_eq!(gamma(&g, &b).unwrap().value, brute::gamma_bf(&g, &b).unwrap().value);
        prop_assert_eq!(rho(&g, &b).unwrap().value, brute::rho_bf(&g, &b).unwrap().value);
        prop_assert_eq!(gamma_r(&g, &b).unwrap().value, brute::gamma_r_bf(&g, &b).unwrap().value);
        if !g.has_isolated_vertex() {
            prop_assert_eq!(
                gamma_t(&g, &b).unwrap().value,
                brute::gamma_t_bf(&g, &b).unwrap().value
            );
            prop_assert_eq!(
                rho_o(&g, &b).unwrap().value,
                brute::rho_o_bf(&g, &b).unwrap().value
            );
            prop_assert_eq!(
                gamma_tr(&g, &b).unwrap().value,
                brute::gamma_tr_bf(&g, &b).unwrap().value
            );
        }
    }

    #[test]
    fn root_two_decision_matches_enumeration(
        g in arb_graph(2, 7),
        sel in any::<prop::sample::Index>(),
    ) {
        let b = SolverBudget::default();
        let v = sel.index(g.order());
        let opt = gamma_r(&g, &b).unwrap().value;
        let decided = gamma_r_forced(&g, v, 2, &b).unwrap().0 == opt;
        let enumerated = brute::optimal_rdfs(&g, &b)
            .unwrap()
            .iter()
            .any(|f| f.get(v) == 2);
        prop_assert_eq!(decided, enumerated);
    }

    #[test]
    fn deleting_a_vertex_costs_at_most_one(
        h in arb_graph(2, 8),
        sel in any::<prop::sample::Index>(),
    ) {
        let b = SolverBudget::default();
        let v = sel.index(h.order());
        let a = gamma_r(&h, &b).unwrap().value;
        let (hv, _) = h.delete_vertex(v).unwrap();
        prop_assert!(gamma_r(&hv, &b).unwrap().value + 1 >= a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn rooted_products_obey_the_trichotomy(
        g in arb_graph(2, 4),
        h in arb_graph(2, 5),
        sel in any::<prop::sample::Index>(),
    ) {
        let b = SolverBudget::default();
        let v = sel.index(h.order());
        let report = rooted_sandwich_check(&g, &h, v, &b).unwrap();
        prop_assert!(report.all_hold, "failed on {}", report.instance);
    }

    #[test]
    fn bound_reports_stay_consistent(
        g in arb_isolate_free(2, 4),
        h in arb_isolate_free(2, 4),
    ) {
        let b = SolverBudget::default();
        let report = direct_bounds_report(&g, &h, true, &b).unwrap();
        prop_assert!(report.all_consistent, "inconsistent on {}", report.instance);
        let exact = report.exact.unwrap();
        prop_assert!(report.best_lower().unwrap() <= exact);
        prop_assert!(exact <= report.best_upper().unwrap());
    }

    #[test]
    fn constructions_never_exceed_their_claims(
        g in arb_isolate_free(2, 5),
        h in arb_isolate_free(2, 5),
    ) {
        let b = SolverBudget::default();
        let ub1 = ub_trdf_dom(&g, &h, &b).unwrap();
        prop_assert!(ub1.weight() <= ub1.claimed_bound);
        let ub4 = ub_kernel(&g, &h, &b).unwrap();
        prop_assert!(ub4.weight() <= ub4.claimed_bound);
        let gt = gamma_t(&g, &b).unwrap().value * gamma_t(&h, &b).unwrap().value;
        prop_assert!(ub4.claimed_bound <= 2 * gt);
        let ub5 = ub_dom_total(&g, &h, &b).unwrap();
        prop_assert!(ub5.weight() <= ub5.claimed_bound);
        match ub_equal_domination(&g, &h, None, &b) {
            Ok(cb) => prop_assert!(cb.weight() <= cb.claimed_bound),
            Err(Error::HypothesisFailed(_)) => {}
            Err(e) => return Err(TestCaseError::fail(format!("unexpected error {e}"))),
        }
    }
}
