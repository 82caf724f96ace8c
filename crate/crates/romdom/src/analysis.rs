//! Bound reports and classification for Roman domination on products.
//!
//! The direct-product side evaluates every known lower and upper bound on
//! gamma_R(G x H), cross-checks them for consistency, and optionally pins
//! the exact value. The rooted-product side classifies gamma_R(G o_v H)
//! into one of three closed forms from root certificates alone and can
//! verify the sandwich and per-copy restriction arguments behind them.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::constructions::{
    ub_dom_total, ub_equal_domination, ub_equal_domination_dominating, ub_kernel, ub_trdf_dom,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::labeling::{is_rdf, restrict_to_copy, RomanLabeling};
use crate::products::{direct_product, rooted_product};
use crate::set::VertexSet;
use crate::solve::{
    gamma, gamma_r, gamma_r_forced, gamma_r_with_hint, gamma_t, gamma_tr, rho, rho_o,
    SolverBudget,
};

/// Default cap on product order for computing the exact value alongside
/// the bounds; larger instances report bounds only unless forced.
pub const EXACT_DEFAULT_MAX_ORDER: usize = 36;

/// Which side of the target value a bound entry sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundSide {
    Lower,
    Upper,
    Exact,
}

/// One evaluated bound. Entries are schema-stable: a bound whose
/// hypothesis fails is still listed, with `applicable = false` and no
/// value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundEntry {
    pub bound_id: String,
    pub side: BoundSide,
    pub value: Option<usize>,
    pub applicable: bool,
    pub formula: String,
}

impl BoundEntry {
    fn active(&self, side: BoundSide) -> Option<usize> {
        if self.applicable && self.side == side {
            self.value
        } else {
            None
        }
    }
}

/// Every bound on gamma_R(G x H) evaluated on one instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub instance: String,
    pub entries: Vec<BoundEntry>,
    /// Exact gamma_R of the product when computed (or pinned by a closed
    /// form).
    pub exact: Option<usize>,
    /// True when every applicable lower bound stays at or below every
    /// applicable upper bound and the exact value (when known) sits inside.
    pub all_consistent: bool,
}

impl BoundsReport {
    pub fn entry(&self, bound_id: &str) -> Option<&BoundEntry> {
        self.entries.iter().find(|e| e.bound_id == bound_id)
    }

    pub fn best_lower(&self) -> Option<usize> {
        self.entries
            .iter()
            .filter_map(|e| e.active(BoundSide::Lower))
            .max()
    }

    pub fn best_upper(&self) -> Option<usize> {
        self.entries
            .iter()
            .filter_map(|e| e.active(BoundSide::Upper))
            .min()
    }
}

fn is_complete(g: &Graph) -> bool {
    let n = g.order();
    g.size() == n * (n - 1) / 2
}

/// Exact gamma_R of a direct product of complete graphs, by order of the
/// smaller factor: 4 when it is 2, 5 when it is 3, 6 beyond.
fn complete_factors_closed_form(g: &Graph, h: &Graph) -> Option<usize> {
    if !is_complete(g) || !is_complete(h) {
        return None;
    }
    let r = g.order().min(h.order());
    match r {
        0 | 1 => None,
        2 => Some(4),
        3 => Some(5),
        _ => Some(6),
    }
}

/// Exact gamma_R = 6 when both factors have a universal vertex and at
/// least four vertices.
fn universal_factors_closed_form(g: &Graph, h: &Graph) -> Option<usize> {
    if g.order() >= 4 && h.order() >= 4 && g.has_universal_vertex() && h.has_universal_vertex() {
        Some(6)
    } else {
        None
    }
}

/// Lets an orientation of a hypothesis-gated bound drop out without
/// aborting the whole report.
fn unless_hypothesis<T>(r: Result<T>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::HypothesisFailed(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Evaluates every known bound on gamma_R(G x H) and cross-checks them.
///
/// With `compute_exact` the product is solved exactly, seeded by the best
/// constructed labeling; budget exhaustion then propagates as
/// `BudgetExceeded`. Errors with `Undefined` if either factor has an
/// isolated vertex.
pub fn direct_bounds_report(
    g: &Graph,
    h: &Graph,
    compute_exact: bool,
    budget: &SolverBudget,
) -> Result<BoundsReport> {
    for side in [g, h] {
        if side.has_isolated_vertex() {
            return Err(Error::Undefined {
                invariant: "direct product bounds",
                reason: format!("factor {} has an isolated vertex", side.describe()),
            });
        }
    }
    let instance = format!("{} x {}", g.describe(), h.describe());

    let gamma_g = gamma(g, budget)?.value;
    let gamma_h = gamma(h, budget)?.value;
    let gamma_t_g = gamma_t(g, budget)?.value;
    let gamma_t_h = gamma_t(h, budget)?.value;
    let gamma_r_g = gamma_r(g, budget)?.value;
    let gamma_r_h = gamma_r(h, budget)?.value;
    let rho_g = rho(g, budget)?.value;
    let rho_h = rho(h, budget)?.value;
    let rho_o_g = rho_o(g, budget)?.value;
    let rho_o_h = rho_o(h, budget)?.value;

    let mut entries = Vec::new();
    let mut construction_weights = Vec::new();

    entries.push(BoundEntry {
        bound_id: "LB1".into(),
        side: BoundSide::Lower,
        value: Some((rho_g * gamma_r_h).max(rho_h * gamma_r_g)),
        applicable: true,
        formula: "max{rho(G) gamma_R(H), rho(H) gamma_R(G)}".into(),
    });
    entries.push(BoundEntry {
        bound_id: "LB2".into(),
        side: BoundSide::Lower,
        value: Some((rho_o_g * gamma_t_h).min(rho_o_h * gamma_t_g)),
        applicable: true,
        formula: "min{rho_o(G) gamma_t(H), rho_o(H) gamma_t(G)}".into(),
    });

    let ub1 = ub_trdf_dom(g, h, budget)?;
    construction_weights.push(ub1.labeling.weight());
    entries.push(BoundEntry {
        bound_id: "UB1".into(),
        side: BoundSide::Upper,
        value: Some(ub1.claimed_bound),
        applicable: true,
        formula: "2 min{gamma(G) gamma_tR(H), gamma(H) gamma_tR(G)}".into(),
    });

    let mut ub2a = None;
    for (a, b) in [(g, h), (h, g)] {
        if let Some(cb) = unless_hypothesis(ub_equal_domination(a, b, None, budget))? {
            construction_weights.push(cb.labeling.weight());
            ub2a = Some(ub2a.map_or(cb.claimed_bound, |v: usize| v.min(cb.claimed_bound)));
        }
    }
    entries.push(BoundEntry {
        bound_id: "UB2a".into(),
        side: BoundSide::Upper,
        value: ub2a,
        applicable: ub2a.is_some(),
        formula: "2 gamma(H) (gamma_tR(G) - |V_2(f)|) over orientations with gamma_t = gamma"
            .into(),
    });

    let mut ub2b = None;
    for (a, b) in [(g, h), (h, g)] {
        if a.order() > budget.max_n_bruteforce {
            continue;
        }
        if let Some(cb) = unless_hypothesis(ub_equal_domination_dominating(a, b, budget))? {
            construction_weights.push(cb.labeling.weight());
            ub2b = Some(ub2b.map_or(cb.claimed_bound, |v: usize| v.min(cb.claimed_bound)));
        }
    }
    entries.push(BoundEntry {
        bound_id: "UB2b".into(),
        side: BoundSide::Upper,
        value: ub2b,
        applicable: ub2b.is_some(),
        formula: "2 gamma(H) (gamma_tR(G) - gamma(G)) when some optimum has dominating 2s".into(),
    });

    entries.push(BoundEntry {
        bound_id: "UB3".into(),
        side: BoundSide::Upper,
        value: Some((2 * gamma_t_g * gamma_t_h).min(6 * gamma_g * gamma_h)),
        applicable: true,
        formula: "min{2 gamma_t(G) gamma_t(H), 6 gamma(G) gamma(H)}".into(),
    });

    let ub4 = ub_kernel(g, h, budget)?;
    assert!(
        ub4.claimed_bound <= 2 * gamma_t_g * gamma_t_h,
        "the kernel bound can never exceed 2 gamma_t(G) gamma_t(H)"
    );
    construction_weights.push(ub4.labeling.weight());
    entries.push(BoundEntry {
        bound_id: "UB4".into(),
        side: BoundSide::Upper,
        value: Some(ub4.claimed_bound),
        applicable: true,
        formula: "2 gamma_t(G) gamma_t(H) - 2 k(G) k(H)".into(),
    });

    let ub5 = ub_dom_total(g, h, budget)?;
    construction_weights.push(ub5.labeling.weight());
    entries.push(BoundEntry {
        bound_id: "UB5".into(),
        side: BoundSide::Upper,
        value: Some(ub5.claimed_bound),
        applicable: true,
        formula: "min{gamma(G) (n(H) + gamma_t(H)), gamma(H) (n(G) + gamma_t(G))}".into(),
    });

    let closed_form = complete_factors_closed_form(g, h);
    let (cf_value, cf_formula) = match closed_form {
        Some(v) => (Some(v), "complete factors: 4, 5 or 6 by the smaller order"),
        None => match universal_factors_closed_form(g, h) {
            Some(v) => (Some(v), "universal vertices in both factors on >= 4 vertices"),
            None => (None, "no closed form applies"),
        },
    };
    entries.push(BoundEntry {
        bound_id: "CF".into(),
        side: BoundSide::Exact,
        value: cf_value,
        applicable: cf_value.is_some(),
        formula: cf_formula.into(),
    });

    let solved = if compute_exact {
        let (product, _) = direct_product(g, h);
        let hint = construction_weights.iter().copied().min();
        Some(gamma_r_with_hint(&product, hint, budget)?.value)
    } else {
        None
    };

    let report = BoundsReport {
        instance,
        exact: solved.or(cf_value),
        all_consistent: false,
        entries,
    };
    let lo = report.best_lower();
    let hi = report.best_upper();
    let mut consistent = match (lo, hi) {
        (Some(lo), Some(hi)) => lo <= hi,
        _ => true,
    };
    if let Some(x) = report.exact {
        consistent &= lo.is_none_or(|lo| lo <= x) && hi.is_none_or(|hi| x <= hi);
    }
    if let (Some(solved), Some(cf)) = (solved, cf_value) {
        consistent &= solved == cf;
    }
    Ok(BoundsReport {
        all_consistent: consistent,
        ..report
    })
}

/// The three closed forms gamma_R(G o_v H) can take.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RootedCase {
    /// n(G) gamma_R(H).
    #[serde(rename = "N_TIMES")]
    NTimes,
    /// gamma_R(G) + n(G) (gamma_R(H) - 1).
    #[serde(rename = "GAMMA_R_PLUS")]
    GammaRPlus,
    /// gamma(G) + n(G) (gamma_R(H) - 1).
    #[serde(rename = "GAMMA_PLUS")]
    GammaPlus,
}

impl fmt::Display for RootedCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RootedCase::NTimes => "N_TIMES",
            RootedCase::GammaRPlus => "GAMMA_R_PLUS",
            RootedCase::GammaPlus => "GAMMA_PLUS",
        };
        f.write_str(s)
    }
}

/// The factor invariants the classification is decided from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootedCertificates {
    pub gamma_r_h: usize,
    pub gamma_r_h_minus_v: usize,
    /// Some optimal labeling of H assigns 2 to the root.
    pub root2_achievable: bool,
    pub gamma_g: usize,
    pub gamma_r_g: usize,
    pub n_g: usize,
}

impl RootedCertificates {
    /// Value of the given case's formula on these certificates.
    pub fn case_value(&self, case: RootedCase) -> usize {
        let per_copy = self.n_g * (self.gamma_r_h - 1);
        match case {
            RootedCase::NTimes => self.n_g * self.gamma_r_h,
            RootedCase::GammaRPlus => self.gamma_r_g + per_copy,
            RootedCase::GammaPlus => self.gamma_g + per_copy,
        }
    }
}

/// Exact value of gamma_R(G o_v H) together with the closed form it obeys.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootedClassification {
    pub case: RootedCase,
    pub value: usize,
    pub certificates: RootedCertificates,
    /// True when the value was established by solving the product exactly
    /// rather than from the certificates alone.
    pub fallback: bool,
}

fn rooted_certificates(
    g: &Graph,
    h: &Graph,
    v: usize,
    budget: &SolverBudget,
) -> Result<RootedCertificates> {
    let a = gamma_r(h, budget)?.value;
    let (hv, _) = h.delete_vertex(v)?;
    let b = gamma_r(&hv, budget)?.value;
    assert!(
        b + 1 >= a,
        "deleting a vertex can lower gamma_R by at most one"
    );
    let (forced, _) = gamma_r_forced(h, v, 2, budget)?;
    let certs = RootedCertificates {
        gamma_r_h: a,
        gamma_r_h_minus_v: b,
        root2_achievable: forced == a,
        gamma_g: gamma(g, budget)?.value,
        gamma_r_g: gamma_r(g, budget)?.value,
        n_g: g.order(),
    };
    assert!(
        certs.case_value(RootedCase::GammaPlus) <= certs.case_value(RootedCase::GammaRPlus)
            && certs.case_value(RootedCase::GammaRPlus) <= certs.case_value(RootedCase::NTimes),
        "the three closed forms must be ordered"
    );
    Ok(certs)
}

/// Classifies gamma_R(G o_v H) from root certificates alone.
///
/// Writing a = gamma_R(H) and b = gamma_R(H - v): b >= a forces the value
/// n(G) a; with b = a - 1 the value is gamma(G) + n(G)(a - 1) exactly when
/// some optimal labeling of H assigns 2 to v, and
/// gamma_R(G) + n(G)(a - 1) otherwise. When G is a disjoint union of
/// edges the two latter characterizations do not apply, so the product is
/// solved exactly and matched against the formulas instead (`fallback`).
pub fn rooted_classify(
    g: &Graph,
    h: &Graph,
    v: usize,
    budget: &SolverBudget,
) -> Result<RootedClassification> {
    let rp = rooted_product(g, h, v)?;
    let certs = rooted_certificates(g, h, v, budget)?;
    let a = certs.gamma_r_h;
    let tight = certs.gamma_r_h_minus_v + 1 == a;

    let needs_fallback = g.is_union_of_k2() && !(tight && certs.root2_achievable);
    if needs_fallback {
        let exact = gamma_r_with_hint(&rp.graph, Some(certs.n_g * a), budget)?.value;
        for case in [
            RootedCase::GammaPlus,
            RootedCase::GammaRPlus,
            RootedCase::NTimes,
        ] {
            if certs.case_value(case) == exact {
                return Ok(RootedClassification {
                    case,
                    value: exact,
                    certificates: certs,
                    fallback: true,
                });
            }
        }
        return Err(Error::InvalidWitness(format!(
            "gamma_R of {} is {} which matches none of the three closed forms",
            rp.graph.describe(),
            exact
        )));
    }

    let case = if !tight {
        RootedCase::NTimes
    } else if certs.root2_achievable {
        RootedCase::GammaPlus
    } else {
        RootedCase::GammaRPlus
    };
    Ok(RootedClassification {
        case,
        value: certs.case_value(case),
        certificates: certs,
        fallback: false,
    })
}

/// Exact value of a rooted product checked against the sandwich
/// gamma(G) + n(G)(a - 1) <= gamma_R(G o_v H) <= n(G) a, the three-case
/// classification, and the classifier's prediction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SandwichReport {
    pub instance: String,
    pub lower: usize,
    pub upper: usize,
    pub exact: usize,
    pub classification: RootedClassification,
    pub in_sandwich: bool,
    pub in_trichotomy: bool,
    pub matches_classifier: bool,
    pub all_hold: bool,
}

/// Solves gamma_R(G o_v H) exactly and verifies every structural claim
/// about it.
pub fn rooted_sandwich_check(
    g: &Graph,
    h: &Graph,
    v: usize,
    budget: &SolverBudget,
) -> Result<SandwichReport> {
    let rp = rooted_product(g, h, v)?;
    let classification = rooted_classify(g, h, v, budget)?;
    let certs = classification.certificates;
    let exact = gamma_r_with_hint(&rp.graph, Some(certs.n_g * certs.gamma_r_h), budget)?.value;

    let lower = certs.case_value(RootedCase::GammaPlus);
    let upper = certs.case_value(RootedCase::NTimes);
    let in_sandwich = lower <= exact && exact <= upper;
    let in_trichotomy = [
        RootedCase::NTimes,
        RootedCase::GammaRPlus,
        RootedCase::GammaPlus,
    ]
    .iter()
    .any(|&c| certs.case_value(c) == exact);
    let matches_classifier = classification.value == exact;
    Ok(SandwichReport {
        instance: rp.graph.describe(),
        lower,
        upper,
        exact,
        classification,
        in_sandwich,
        in_trichotomy,
        matches_classifier,
        all_hold: in_sandwich && in_trichotomy && matches_classifier,
    })
}

/// Per-copy accounting of an optimal labeling of a rooted product.
///
/// For each spine vertex x, `per_copy_weights[x]` is the weight of the
/// restriction to copy x; `a_f` collects the copies weighing at least
/// gamma_R(H) and `b_f` those weighing exactly gamma_R(H) - 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictionReport {
    pub instance: String,
    pub gamma_r_h: usize,
    pub gamma_r_h_minus_v: usize,
    pub per_copy_weights: Vec<usize>,
    pub a_f: VertexSet,
    pub b_f: VertexSet,
    /// Every copy weighs at least gamma_R(H) - 1.
    pub per_copy_lower_holds: bool,
    /// Copies at exactly gamma_R(H) - 1 have a 0 at the spine and at most
    /// a total of 1 on the root's neighbors inside the copy.
    pub tight_copies_certified: bool,
    /// A copy at gamma_R(H) - 1 exists only when gamma_R(H - v) is
    /// gamma_R(H) - 1.
    pub b_f_implication_holds: bool,
    /// The per-copy weights add up to the labeling's weight.
    pub weights_sum_matches: bool,
    pub all_hold: bool,
}

/// Verifies the per-copy restriction argument on an optimal labeling `f`
/// of G o_v H. Errors with `InvalidWitness` when `f` is not an optimal
/// Roman dominating function of the product.
pub fn lemma_restriction_check(
    g: &Graph,
    h: &Graph,
    v: usize,
    f: &RomanLabeling,
    budget: &SolverBudget,
) -> Result<RestrictionReport> {
    let rp = rooted_product(g, h, v)?;
    if f.len() != rp.graph.order() {
        return Err(Error::DimensionMismatch(format!(
            "labeling has {} entries, {} has {} vertices",
            f.len(),
            rp.graph.describe(),
            rp.graph.order()
        )));
    }
    if !is_rdf(&rp.graph, f)? {
        return Err(Error::InvalidWitness(
            "the labeling is not a Roman dominating function of the rooted product".into(),
        ));
    }
    let exact = gamma_r_with_hint(&rp.graph, Some(f.weight()), budget)?.value;
    if f.weight() != exact {
        return Err(Error::InvalidWitness(format!(
            "the labeling weighs {} but gamma_R of the product is {}",
            f.weight(),
            exact
        )));
    }

    let a = gamma_r(h, budget)?.value;
    let (hv, _) = h.delete_vertex(v)?;
    let b = gamma_r(&hv, budget)?.value;

    let n_g = rp.n_g;
    let mut per_copy_weights = Vec::with_capacity(n_g);
    let mut a_f = VertexSet::new(n_g);
    let mut b_f = VertexSet::new(n_g);
    let mut per_copy_lower_holds = true;
    let mut tight_copies_certified = true;
    for x in 0..n_g {
        let fx = restrict_to_copy(&rp, f, x)?;
        let w = fx.weight();
        per_copy_weights.push(w);
        if w >= a {
            a_f.insert(x);
        } else if w + 1 == a {
            b_f.insert(x);
            let root_label = fx.get(v);
            let near_root: usize = h.neighbors(v).iter().map(|u| fx.get(u) as usize).sum();
            if root_label != 0 || near_root > 1 {
                tight_copies_certified = false;
            }
        } else {
            per_copy_lower_holds = false;
        }
    }
    let b_f_implication_holds = b_f.is_empty() || b + 1 == a;
    let weights_sum_matches = per_copy_weights.iter().sum::<usize>() == f.weight();
    let all_hold = per_copy_lower_holds
        && tight_copies_certified
        && b_f_implication_holds
        && weights_sum_matches;
    Ok(RestrictionReport {
        instance: rp.graph.describe(),
        gamma_r_h: a,
        gamma_r_h_minus_v: b,
        per_copy_weights,
        a_f,
        b_f,
        per_copy_lower_holds,
        tight_copies_certified,
        b_f_implication_holds,
        weights_sum_matches,
        all_hold,
    })
}

/// One inequality from the background theory, evaluated on an instance.
/// `holds` is `None` when the check was skipped under budget.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnownBoundCheck {
    pub id: String,
    pub formula: String,
    pub lhs: Option<usize>,
    pub rhs: Option<usize>,
    pub holds: Option<bool>,
}

/// Background inequalities evaluated on two factors and their direct
/// product.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnownBoundsReport {
    pub instance: String,
    pub checks: Vec<KnownBoundCheck>,
    /// True when the product-level checks ran out of budget and were
    /// recorded as skipped.
    pub product_skipped: bool,
    pub all_hold: bool,
}

/// Checks the background inequalities gamma_R <= gamma_tR <= 3 gamma and
/// gamma_t <= gamma_R on each factor, plus
/// gamma_tR(G x H) <= 2 gamma_t(G) gamma_t(H) and
/// gamma_t(G x H) >= min{rho_o(G) gamma_t(H), rho_o(H) gamma_t(G)} on the
/// product. Product-level checks are skipped (not failed) when the budget
/// runs out.
pub fn known_bounds_suite(g: &Graph, h: &Graph, budget: &SolverBudget) -> Result<KnownBoundsReport> {
    for side in [g, h] {
        if side.has_isolated_vertex() {
            return Err(Error::Undefined {
                invariant: "known bounds",
                reason: format!("factor {} has an isolated vertex", side.describe()),
            });
        }
    }
    let mut checks = Vec::new();
    let mut push = |id: String, formula: &str, lhs: Option<usize>, rhs: Option<usize>| {
        checks.push(KnownBoundCheck {
            id,
            formula: formula.into(),
            lhs,
            rhs,
            holds: match (lhs, rhs) {
                (Some(l), Some(r)) => Some(l <= r),
                _ => None,
            },
        });
    };

    let mut factor_values = Vec::new();
    for (tag, side) in [("G", g), ("H", h)] {
        let gam = gamma(side, budget)?.value;
        let gt = gamma_t(side, budget)?.value;
        let gr = gamma_r(side, budget)?.value;
        let gtr = gamma_tr(side, budget)?.value;
        push(
            format!("roman-vs-total-roman-{tag}"),
            "gamma_R <= gamma_tR",
            Some(gr),
            Some(gtr),
        );
        push(
            format!("total-roman-vs-3gamma-{tag}"),
            "gamma_tR <= 3 gamma",
            Some(gtr),
            Some(3 * gam),
        );
        push(
            format!("total-dom-vs-roman-{tag}"),
            "gamma_t <= gamma_R",
            Some(gt),
            Some(gr),
        );
        factor_values.push((gam, gt));
    }
    let (_, gt_g) = factor_values[0];
    let (_, gt_h) = factor_values[1];

    let (product, _) = direct_product(g, h);
    let rho_o_g = rho_o(g, budget)?.value;
    let rho_o_h = rho_o(h, budget)?.value;
    let mut product_skipped = false;
    let product_gtr = match gamma_tr(&product, budget) {
        Ok(res) => Some(res.value),
        Err(Error::BudgetExceeded { .. }) => {
            product_skipped = true;
            None
        }
        Err(e) => return Err(e),
    };
    push(
        "product-total-roman".into(),
        "gamma_tR(G x H) <= 2 gamma_t(G) gamma_t(H)",
        product_gtr,
        product_gtr.map(|_| 2 * gt_g * gt_h),
    );
    let product_gt = match gamma_t(&product, budget) {
        Ok(res) => Some(res.value),
        Err(Error::BudgetExceeded { .. }) => {
            product_skipped = true;
            None
        }
        Err(e) => return Err(e),
    };
    push(
        "product-total-dom".into(),
        "min{rho_o(G) gamma_t(H), rho_o(H) gamma_t(G)} <= gamma_t(G x H)",
        product_gt.map(|_| (rho_o_g * gt_h).min(rho_o_h * gt_g)),
        product_gt,
    );

    let all_hold = !checks.iter().any(|c| c.holds == Some(false));
    Ok(KnownBoundsReport {
        instance: format!("{} x {}", g.describe(), h.describe()),
        checks,
        product_skipped,
        all_hold,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    fn path(n: usize) -> Graph {
        generate(Family::Path(n)).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        generate(Family::Cycle(n)).unwrap()
    }

    fn complete(n: usize) -> Graph {
        generate(Family::Complete(n)).unwrap()
    }

    fn star(leaves: usize) -> Graph {
        generate(Family::Star(leaves)).unwrap()
    }

    fn spider() -> Graph {
        Graph::build_from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (3, 5)])
            .unwrap()
            .with_name("spider6")
    }

    fn union_of_k2(pairs: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (0..pairs).map(|i| (2 * i, 2 * i + 1)).collect();
        Graph::build_from_edges(2 * pairs, &edges).unwrap()
    }

    #[test]
    fn report_on_k2_times_c5_is_exact_and_consistent() {
        let b = SolverBudget::default();
        let report = direct_bounds_report(&complete(2), &cycle(5), true, &b).unwrap();
        // The product is a single 10-cycle.
        assert_eq!(report.exact, Some(7));
        assert!(report.all_consistent);
        assert_eq!(report.entry("LB1").unwrap().value, Some(4));
        assert!(report.best_lower().unwrap() <= 7);
        assert!(report.best_upper().unwrap() >= 7);
        // gamma_t(C5) = 3 != gamma(C5) and K2 fails it too.
        assert!(!report.entry("UB2a").unwrap().applicable);
        assert_eq!(report.entry("CF").unwrap().value, None);
    }

    #[test]
    fn report_entries_are_schema_stable() {
        let b = SolverBudget::default();
        let report = direct_bounds_report(&path(3), &path(3), false, &b).unwrap();
        let ids: Vec<&str> = report.entries.iter().map(|e| e.bound_id.as_str()).collect();
        assert_eq!(
            ids,
            ["LB1", "LB2", "UB1", "UB2a", "UB2b", "UB3", "UB4", "UB5", "CF"]
        );
        assert!(report.exact.is_none());
    }

    #[test]
    fn complete_factors_hit_their_closed_form() {
        let b = SolverBudget::default();
        for (r, t, want) in [(2, 5, 4), (3, 4, 5), (4, 4, 6), (4, 6, 6)] {
            let report = direct_bounds_report(&complete(r), &complete(t), true, &b).unwrap();
            assert_eq!(report.exact, Some(want), "K{} x K{}", r, t);
            assert_eq!(report.entry("CF").unwrap().value, Some(want));
            assert!(report.all_consistent);
        }
    }

    #[test]
    fn universal_factors_without_completeness_close_at_six() {
        let b = SolverBudget::default();
        // Stars have a universal vertex but are far from complete.
        let report = direct_bounds_report(&star(5), &complete(4), true, &b).unwrap();
        assert_eq!(report.entry("CF").unwrap().value, Some(6));
        assert_eq!(report.exact, Some(6));
        assert!(report.all_consistent);
    }

    #[test]
    fn sharp_ub2_shows_up_in_the_report() {
        let b = SolverBudget::default();
        let report = direct_bounds_report(&path(4), &path(4), true, &b).unwrap();
        assert_eq!(report.entry("UB2a").unwrap().value, Some(8));
        assert_eq!(report.exact, Some(8));
        assert!(report.all_consistent);
    }

    #[test]
    fn isolated_factors_are_rejected() {
        let b = SolverBudget::default();
        let lonely = Graph::build_from_edges(3, &[(0, 1)]).unwrap();
        assert!(matches!(
            direct_bounds_report(&lonely, &path(3), false, &b),
            Err(Error::Undefined { .. })
        ));
    }

    #[test]
    fn spider_root_changes_the_classification() {
        let b = SolverBudget::default();
        let h = spider();
        // Far leaf: optimal labelings can put 2 on the root.
        let leaf = rooted_classify(&path(4), &h, 0, &b).unwrap();
        assert_eq!(leaf.case, RootedCase::GammaPlus);
        assert_eq!(leaf.value, 2 + 4 * 3);
        assert!(!leaf.fallback);
        // Branch vertex: deleting it keeps gamma_R at 4, so every copy
        // pays full price.
        let branch = rooted_classify(&path(4), &h, 3, &b).unwrap();
        assert_eq!(branch.case, RootedCase::NTimes);
        assert_eq!(branch.value, 4 * 4);
    }

    #[test]
    fn path_leaf_root_lands_between_the_extremes() {
        let b = SolverBudget::default();
        let c = rooted_classify(&cycle(5), &path(4), 0, &b).unwrap();
        assert_eq!(c.case, RootedCase::GammaRPlus);
        assert_eq!(c.value, 4 + 5 * 2);
        assert!(!c.fallback);
    }

    #[test]
    fn union_of_edges_falls_back_to_exact_solving() {
        let b = SolverBudget::default();
        let g = union_of_k2(2);
        let c = rooted_classify(&g, &path(4), 0, &b).unwrap();
        assert!(c.fallback);
        // gamma_R(4 K2) = 4 and n a = 12 coincide with gamma_R + n(a - 1).
        assert_eq!(c.value, 4 + 4 * 2);
        assert_eq!(c.case, RootedCase::GammaRPlus);
        // The spider rooted at its far leaf accepts 2 on the root, so the
        // certificates decide without solving even for unions of edges.
        let c = rooted_classify(&g, &spider(), 0, &b).unwrap();
        assert!(!c.fallback);
        assert_eq!(c.case, RootedCase::GammaPlus);
    }

    #[test]
    fn sandwich_holds_on_small_rooted_products() {
        let b = SolverBudget::default();
        for (g, h, v) in [
            (path(4), spider(), 0),
            (path(4), spider(), 3),
            (cycle(5), path(4), 0),
            (complete(3), path(3), 1),
        ] {
            let report = rooted_sandwich_check(&g, &h, v, &b).unwrap();
            assert!(report.all_hold, "{}", report.instance);
        }
    }

    #[test]
    fn restriction_check_accepts_an_optimum_and_rejects_the_rest() {
        let b = SolverBudget::default();
        let g = path(4);
        let h = spider();
        let rp = rooted_product(&g, &h, 0).unwrap();
        let opt = gamma_r(&rp.graph, &b).unwrap();
        let f = opt.witness.as_labeling().unwrap().clone();
        let report = lemma_restriction_check(&g, &h, 0, &f, &b).unwrap();
        assert!(report.all_hold);
        assert_eq!(report.per_copy_weights.len(), 4);
        assert_eq!(
            report.a_f.len() + report.b_f.len(),
            4,
            "every copy weighs a or a - 1 at an optimum"
        );
        let heavy = RomanLabeling::constant(rp.graph.order(), 1).unwrap();
        assert!(matches!(
            lemma_restriction_check(&g, &h, 0, &heavy, &b),
            Err(Error::InvalidWitness(_))
        ));
    }

    #[test]
    fn known_bounds_hold_on_small_products() {
        let b = SolverBudget::default();
        for (g, h) in [
            (path(4), path(4)),
            (complete(3), cycle(5)),
            (star(3), complete(4)),
        ] {
            let report = known_bounds_suite(&g, &h, &b).unwrap();
            assert!(report.all_hold, "{}", report.instance);
            assert!(!report.product_skipped, "{}", report.instance);
            assert_eq!(report.checks.len(), 8);
        }
    }

    #[test]
    fn known_bounds_skip_product_checks_under_budget() {
        let budget = SolverBudget {
            max_nodes: 50,
            ..SolverBudget::default()
        };
        let report = known_bounds_suite(&path(4), &path(4), &budget);
        // Either the factor solves already blow the tiny budget (fine,
        // propagated), or the product checks get skipped.
        if let Ok(report) = report {
            assert!(report.product_skipped);
            assert!(report.all_hold);
        }
    }

    #[test]
    fn classification_serializes_with_stable_case_names() {
        let b = SolverBudget::default();
        let c = rooted_classify(&path(4), &spider(), 3, &b).unwrap();
        let json = serde_json::to_string(&c).unwrap();
        assert!(json.contains("\"N_TIMES\""));
        let back: RootedClassification = serde_json::from_str(&json).unwrap();
        assert_eq!(back, c);
    }
}
