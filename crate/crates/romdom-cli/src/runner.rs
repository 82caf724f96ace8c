//! Command implementations behind the `romdom` binary.
//!
//! Each function builds one [`Report`]; the binary renders it and maps
//! `consistency` / recorded errors to the exit status: 0 when everything
//! holds, 2 on a consistency failure, 1 on errors.

use anyhow::{Context, Result};
use clap::ValueEnum;
use serde_json::json;

use crate::formats::CorpusEntry;
use crate::jobs::run_indexed;
use crate::report::Report;
use romdom::solve::{gamma, gamma_r, gamma_t, gamma_tr, kernel_number, rho, rho_o};
use romdom::{
    direct_bounds_report, is_rdf, is_trdf, rooted_classify, rooted_sandwich_check, Error, Graph,
    InvariantResult, RomanLabeling, SolverBudget, EXACT_DEFAULT_MAX_ORDER,
};

/// A rendered report plus the number of per-instance errors recorded
/// inside it (batch mode records failures instead of aborting).
#[derive(Debug)]
pub struct Outcome {
    pub report: Report,
    pub recorded_errors: usize,
}

impl Outcome {
    /// A report from a command that either fully succeeds or errors out,
    /// so it never records per-instance failures.
    pub fn clean(report: Report) -> Outcome {
        Outcome {
            report,
            recorded_errors: 0,
        }
    }
}

fn witness_text(r: &InvariantResult) -> String {
    match &r.witness {
        romdom::Witness::Set { vertices } => format!("{:?}", vertices.members()),
        romdom::Witness::Labeling { labeling } => labeling.to_string(),
    }
}

fn invariant_row(r: &InvariantResult) -> serde_json::Value {
    json!({
        "invariant": r.invariant.id(),
        "value": r.value,
        "witness": r.witness,
        "witness_text": witness_text(r),
        "method": r.method,
        "nodes_explored": r.nodes_explored,
    })
}

/// All seven invariants with witnesses; undefined ones are listed with a
/// reason instead of failing the run. Consistency checks the standard
/// inequality chains between the computed values.
pub fn invariants_report(g: &Graph, instance: &str, budget: &SolverBudget) -> Result<Report> {
    let mut report = Report::new(instance);
    let mut defined = std::collections::HashMap::new();

    let run = |report: &mut Report,
                   defined: &mut std::collections::HashMap<&'static str, usize>,
                   result: romdom::Result<InvariantResult>|
     -> Result<()> {
        match result {
            Ok(r) => {
                defined.insert(r.invariant.id(), r.value);
                report.push(invariant_row(&r));
                Ok(())
            }
            Err(Error::Undefined { invariant, reason }) => {
                report.push(json!({
                    "invariant": invariant,
                    "undefined": true,
                    "reason": reason,
                }));
                Ok(())
            }
            Err(e) => Err(e.into()),
        }
    };

    run(&mut report, &mut defined, gamma(g, budget))?;
    run(&mut report, &mut defined, gamma_t(g, budget))?;
    run(&mut report, &mut defined, rho(g, budget))?;
    run(&mut report, &mut defined, rho_o(g, budget))?;
    run(&mut report, &mut defined, gamma_r(g, budget))?;
    run(&mut report, &mut defined, gamma_tr(g, budget))?;
    match kernel_number(g, budget) {
        Ok((r, cert)) => {
            defined.insert(r.invariant.id(), r.value);
            let mut row = invariant_row(&r);
            row["certificate"] = json!({
                "total_dominating_set": cert.d.members(),
                "min_dominating_subset": cert.d_prime.members(),
                "kernel": cert.kernel.members(),
            });
            report.push(row);
        }
        Err(Error::Undefined { invariant, reason }) => {
            report.push(json!({"invariant": invariant, "undefined": true, "reason": reason}));
        }
        Err(e) => return Err(e.into()),
    }

    report.consistency = invariant_chains_hold(&defined);
    Ok(report)
}

/// The inequality chains every value set must satisfy; checks apply only
/// when both sides are defined on the graph.
fn invariant_chains_hold(v: &std::collections::HashMap<&'static str, usize>) -> bool {
    let pairs_le = [
        ("rho", "gamma"),
        ("gamma", "gamma_R"),
        ("gamma", "gamma_t"),
        ("gamma_t", "gamma_R"),
        ("rho_o", "gamma_t"),
        ("gamma_R", "gamma_tR"),
    ];
    for (lo, hi) in pairs_le {
        if let (Some(a), Some(b)) = (v.get(lo), v.get(hi)) {
            if a > b {
                return false;
            }
        }
    }
    if let (Some(gr), Some(g)) = (v.get("gamma_R"), v.get("gamma")) {
        if *gr > 2 * g {
            return false;
        }
    }
    if let (Some(gtr), Some(g)) = (v.get("gamma_tR"), v.get("gamma")) {
        if *gtr > 3 * g {
            return false;
        }
    }
    if let (Some(k), Some(gt)) = (v.get("kernel_k"), v.get("gamma_t")) {
        if *k + 1 > *gt {
            return false;
        }
    }
    true
}

/// Bound report for a direct product. `exact`: `Some(true)` forces the
/// exact solve, `Some(false)` suppresses it, `None` solves exactly when
/// the product has at most [`EXACT_DEFAULT_MAX_ORDER`] vertices.
pub fn direct_bounds_cmd(
    g: &Graph,
    h: &Graph,
    instance: &str,
    exact: Option<bool>,
    budget: &SolverBudget,
) -> Result<Report> {
    let compute_exact = exact.unwrap_or(g.order() * h.order() <= EXACT_DEFAULT_MAX_ORDER);
    let bounds = direct_bounds_report(g, h, compute_exact, budget)?;
    let mut report = Report::new(instance);
    report.consistency = bounds.all_consistent;
    report.push(&bounds);
    Ok(report)
}

/// Rooted-product classification; with `check` the product is also solved
/// exactly and the classified value, sandwich and trichotomy are verified.
pub fn rooted_classify_cmd(
    g: &Graph,
    h: &Graph,
    root: usize,
    check: bool,
    instance: &str,
    budget: &SolverBudget,
) -> Result<Report> {
    let mut report = Report::new(instance);
    if check {
        let sandwich = rooted_sandwich_check(g, h, root, budget)?;
        report.consistency = sandwich.all_hold;
        report.push(json!({"classification": sandwich.classification}));
        report.push(json!({"sandwich_check": sandwich}));
    } else {
        let classification = rooted_classify(g, h, root, budget)?;
        report.push(json!({"classification": classification}));
    }
    Ok(report)
}

/// Validates a labeling file against a graph: weight, violations, and
/// (with `total`) the no-isolated-positives condition too. Consistency is
/// the validity verdict, so an invalid labeling exits with status 2.
pub fn verify_labeling_cmd(
    g: &Graph,
    f: &RomanLabeling,
    total: bool,
    instance: &str,
) -> Result<Report> {
    let mut report = Report::new(instance);
    let rdf_viol = romdom::labeling::rdf_violations(g, f)?;
    let valid_rdf = rdf_viol.is_empty();
    let mut row = json!({
        "weight": f.weight(),
        "valid_rdf": valid_rdf,
        "rdf_violations": rdf_viol,
    });
    let mut valid = valid_rdf;
    if total {
        let total_viol = romdom::labeling::total_violations(g, f)?;
        row["valid_trdf"] = json!(is_trdf(g, f)?);
        row["total_violations"] = json!(total_viol);
        valid = valid && total_viol.is_empty();
    } else {
        debug_assert_eq!(valid_rdf, is_rdf(g, f)?);
    }
    report.push(row);
    report.consistency = valid;
    Ok(report)
}

/// What to run per corpus line in batch mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BatchCommand {
    /// All seven invariants of each corpus graph.
    Invariants,
    /// Direct-product bounds of each corpus graph with the partner graph.
    DirectBounds,
    /// Rooted-product classification: each corpus graph as the base, the
    /// partner graph rooted at `--root`.
    RootedClassify,
}

/// Maps one command over a graph6 corpus with a fixed partner graph and
/// root, concurrently up to `jobs` threads. Per-instance failures
/// (including budget exhaustion) are recorded in the row and counted, not
/// fatal; rows keep input order.
#[allow(clippy::too_many_arguments)]
pub fn batch_cmd(
    corpus: &[CorpusEntry],
    command: BatchCommand,
    partner: Option<&Graph>,
    root: Option<usize>,
    exact: Option<bool>,
    jobs: usize,
    instance: &str,
    budget: &SolverBudget,
) -> Result<Outcome> {
    match command {
        BatchCommand::Invariants => {}
        BatchCommand::DirectBounds => {
            partner.context("direct-bounds in batch mode needs a partner graph")?;
        }
        BatchCommand::RootedClassify => {
            let h = partner.context("rooted-classify in batch mode needs a partner graph")?;
            let v = root.context("rooted-classify in batch mode needs --root")?;
            if v >= h.order() {
                anyhow::bail!(
                    "root {} out of range for the partner graph of order {}",
                    v,
                    h.order()
                );
            }
        }
    }

    let rows = run_indexed(corpus, jobs, |i, entry| {
        let sub = match command {
            BatchCommand::Invariants => invariants_report(&entry.graph, &entry.text, budget),
            BatchCommand::DirectBounds => {
                let h = partner.expect("validated above");
                direct_bounds_cmd(
                    &entry.graph,
                    h,
                    &format!("{} x {}", entry.text, h.describe()),
                    exact,
                    budget,
                )
            }
            BatchCommand::RootedClassify => {
                let h = partner.expect("validated above");
                let v = root.expect("validated above");
                rooted_classify_cmd(
                    &entry.graph,
                    h,
                    v,
                    true,
                    &format!("{} rooted {} at {}", entry.text, h.describe(), v),
                    budget,
                )
            }
        };
        match sub {
            Ok(r) => json!({
                "index": i,
                "line": entry.line,
                "instance": r.instance,
                "consistent": r.consistency,
                "results": r.results,
            }),
            Err(e) => json!({
                "index": i,
                "line": entry.line,
                "instance": entry.text,
                "error": format!("{:#}", e),
            }),
        }
    });

    let mut report = Report::new(instance);
    let mut recorded_errors = 0;
    for row in rows {
        if row.get("error").is_some() {
            recorded_errors += 1;
        } else if row["consistent"] != json!(true) {
            report.consistency = false;
        }
        report.results.push(row);
    }
    Ok(Outcome {
        report,
        recorded_errors,
    })
}

/// The full grid of products of complete graphs on 2..=6 vertices plus
/// the sharp small products, each solved exactly and compared with its
/// pinned value.
pub fn tables_cmd(budget: &SolverBudget) -> Result<Report> {
    use romdom::{generate, Family};

    let mut report = Report::new("reference tables");
    let mut all_match = true;

    for r in 2..=6usize {
        for t in r..=6usize {
            let g = generate(Family::Complete(r))?;
            let h = generate(Family::Complete(t))?;
            let bounds = direct_bounds_report(&g, &h, true, budget)?;
            let exact = bounds.exact;
            let closed_form = bounds.entry("CF").and_then(|e| e.value);
            let matches = exact.is_some() && exact == closed_form;
            all_match &= matches;
            report.push(json!({
                "table": "complete-grid",
                "r": r,
                "t": t,
                "exact": exact,
                "closed_form": closed_form,
                "matches": matches,
            }));
        }
    }

    let sharp: [(Family, Family, usize); 5] = [
        (Family::Complete(2), Family::Cycle(5), 7),
        (Family::Path(3), Family::Complete(3), 5),
        (Family::Path(3), Family::Complete(4), 5),
        (Family::Path(4), Family::Path(4), 8),
        (Family::Complete(2), Family::Complete(2), 4),
    ];
    for (gf, hf, expected) in sharp {
        let g = generate(gf)?;
        let h = generate(hf)?;
        let bounds = direct_bounds_report(&g, &h, true, budget)?;
        let exact = bounds.exact;
        let matches = exact == Some(expected);
        all_match &= matches;
        report.push(json!({
            "table": "sharp-examples",
            "g": g.describe(),
            "h": h.describe(),
            "exact": exact,
            "expected": expected,
            "matches": matches,
        }));
    }

    report.consistency = all_match;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use romdom::{generate, Family};

    fn budget() -> SolverBudget {
        SolverBudget::default()
    }

    #[test]
    fn invariants_cover_all_seven_on_a_cycle() {
        let g = generate(Family::Cycle(5)).unwrap();
        let r = invariants_report(&g, "C:5", &budget()).unwrap();
        assert_eq!(r.results.len(), 7);
        assert!(r.consistency);
        let ids: Vec<&str> = r
            .results
            .iter()
            .map(|row| row["invariant"].as_str().unwrap())
            .collect();
        assert_eq!(
            ids,
            ["gamma", "gamma_t", "rho", "rho_o", "gamma_R", "gamma_tR", "kernel_k"]
        );
        assert!(r.results.iter().all(|row| row.get("undefined").is_none()));
        assert_eq!(r.results[4]["value"], 4); // gamma_R(C5)
        assert!(r.results[6]["certificate"]["kernel"].is_array());
    }

    #[test]
    fn isolated_vertices_yield_undefined_rows_not_errors() {
        let g = Graph::build_from_edges(3, &[(0, 1)]).unwrap();
        let r = invariants_report(&g, "K2+K1", &budget()).unwrap();
        let undefined: Vec<&str> = r
            .results
            .iter()
            .filter(|row| row["undefined"] == serde_json::json!(true))
            .map(|row| row["invariant"].as_str().unwrap())
            .collect();
        assert_eq!(undefined, ["gamma_t", "rho_o", "gamma_tR", "kernel_k"]);
        assert!(r.consistency);
    }

    #[test]
    fn direct_bounds_solves_small_products_exactly() {
        let g = generate(Family::Complete(2)).unwrap();
        let h = generate(Family::Cycle(5)).unwrap();
        let r = direct_bounds_cmd(&g, &h, "K:2 x C:5", None, &budget()).unwrap();
        assert!(r.consistency);
        assert_eq!(r.results[0]["exact"], 7);
    }

    #[test]
    fn exact_flag_overrides_the_order_heuristic() {
        let g = generate(Family::Complete(2)).unwrap();
        let h = generate(Family::Cycle(5)).unwrap();
        let r = direct_bounds_cmd(&g, &h, "i", Some(false), &budget()).unwrap();
        assert_eq!(r.results[0]["exact"], serde_json::Value::Null);
    }

    #[test]
    fn rooted_classification_with_check_verifies_the_value() {
        let g = generate(Family::Path(5)).unwrap();
        let h = generate(Family::Path(4)).unwrap();
        let r = rooted_classify_cmd(&g, &h, 0, true, "P5 o P4 @ 0", &budget()).unwrap();
        assert!(r.consistency);
        assert_eq!(r.results[0]["classification"]["case"], "GAMMA_R_PLUS");
        assert_eq!(r.results[0]["classification"]["value"], 14);
        assert_eq!(r.results[1]["sandwich_check"]["exact"], 14);
    }

    #[test]
    fn labeling_verification_reports_violations() {
        let g = generate(Family::Path(3)).unwrap();
        let all_one = RomanLabeling::from_labels(vec![1, 1, 1]).unwrap();
        let r = verify_labeling_cmd(&g, &all_one, false, "P:3").unwrap();
        assert!(r.consistency);
        assert_eq!(r.results[0]["weight"], 3);

        let bad = RomanLabeling::from_labels(vec![0, 1, 0]).unwrap();
        let r = verify_labeling_cmd(&g, &bad, false, "P:3").unwrap();
        assert!(!r.consistency);
        assert_eq!(r.results[0]["rdf_violations"], serde_json::json!([0, 2]));

        // 2-1 on K2 is a valid RDF and TRDF; 2-0 fails the total condition.
        let k2 = generate(Family::Complete(2)).unwrap();
        let f = RomanLabeling::from_labels(vec![2, 0]).unwrap();
        let r = verify_labeling_cmd(&k2, &f, true, "K:2").unwrap();
        assert!(!r.consistency);
        assert_eq!(r.results[0]["valid_rdf"], true);
        assert_eq!(r.results[0]["valid_trdf"], false);
    }

    #[test]
    fn batch_runs_record_failures_without_aborting() {
        let corpus = vec![
            CorpusEntry {
                line: 1,
                text: "A_".into(),
                graph: generate(Family::Complete(2)).unwrap(),
            },
            CorpusEntry {
                line: 2,
                text: "A?".into(),
                graph: Graph::build_from_edges(2, &[]).unwrap(),
            },
        ];
        // gamma_tR on 2 isolated vertices is undefined (recorded in-row,
        // not an error), so use a starved budget to force a real failure.
        let starved = SolverBudget {
            max_nodes: 0,
            ..SolverBudget::default()
        };
        let out = batch_cmd(
            &corpus,
            BatchCommand::Invariants,
            None,
            None,
            None,
            2,
            "corpus",
            &starved,
        )
        .unwrap();
        assert_eq!(out.report.results.len(), 2);
        assert_eq!(out.recorded_errors, 2);
        assert_eq!(out.report.results[0]["index"], 0);
        assert_eq!(out.report.results[1]["index"], 1);
        assert!(out.report.results[0]["error"]
            .as_str()
            .unwrap()
            .contains("budget"));
    }

    #[test]
    fn batch_rooted_validates_the_root() {
        let corpus = vec![CorpusEntry {
            line: 1,
            text: "A_".into(),
            graph: generate(Family::Complete(2)).unwrap(),
        }];
        let h = generate(Family::Path(3)).unwrap();
        let err = batch_cmd(
            &corpus,
            BatchCommand::RootedClassify,
            Some(&h),
            Some(9),
            None,
            1,
            "corpus",
            &budget(),
        )
        .unwrap_err();
        assert!(err.to_string().contains("out of range"));
    }
}
