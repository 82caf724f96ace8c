//! `romdom`: exact Roman-domination invariants, direct-product bounds and
//! rooted-product classification from the command line.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};

use romdom_cli::formats::{load_corpus, load_graph, load_labeling};
use romdom_cli::report::{OutputFormat, Report};
use romdom_cli::runner::{
    batch_cmd, direct_bounds_cmd, invariants_report, rooted_classify_cmd, tables_cmd,
    verify_labeling_cmd, BatchCommand, Outcome,
};
use romdom::SolverBudget;

#[derive(Parser)]
#[command(
    name = "romdom",
    version,
    about = "Roman domination invariants, product bounds and classifications",
    long_about = "Computes domination-type graph invariants exactly, evaluates every \
known bound on the Roman domination number of a direct product, and classifies \
rooted products by their closed-form value. Graphs are given as graph6 strings, \
edge-list files, or family descriptors like P:4, C:8, K:5, Kst:3,3, Star:5."
)]
struct Cli {
    /// Branch-and-bound node limit per solver call.
    #[arg(long, global = true, default_value_t = 100_000_000)]
    budget_nodes: u64,

    /// Wall-clock limit per solver call, in seconds.
    #[arg(long, global = true, env = "ROMDOM_BUDGET_SECONDS", default_value_t = 60.0)]
    budget_seconds: f64,

    /// Report encoding (default: text; paper-tables defaults to csv).
    #[arg(long, global = true, value_enum)]
    format: Option<OutputFormat>,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ExactFlags {
    /// Solve the product exactly even when it is large.
    #[arg(long, overrides_with = "no_exact")]
    exact: bool,

    /// Skip the exact solve even when the product is small.
    #[arg(long, overrides_with = "exact")]
    no_exact: bool,
}

impl ExactFlags {
    fn resolve(&self) -> Option<bool> {
        match (self.exact, self.no_exact) {
            (true, _) => Some(true),
            (_, true) => Some(false),
            _ => None,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Compute all seven invariants of one graph, with witnesses.
    Invariants {
        /// Graph: family descriptor, file path, or graph6 string.
        graph: String,
    },

    /// Evaluate every bound on the Roman domination number of a direct
    /// product, and optionally its exact value.
    DirectBounds {
        /// First factor.
        g: String,
        /// Second factor.
        h: String,
        #[command(flatten)]
        exact: ExactFlags,
    },

    /// Classify a rooted product by its closed-form Roman domination
    /// value.
    RootedClassify {
        /// Base graph (one copy of H is glued to each of its vertices).
        g: String,
        /// Rooted graph.
        h: String,
        /// Root vertex in H.
        #[arg(long)]
        root: usize,
        /// Also solve the product exactly and verify the classification,
        /// the bound sandwich, and the trichotomy.
        #[arg(long)]
        check: bool,
    },

    /// Check a labeling file against a graph and report violations.
    VerifyLabeling {
        /// Graph the labeling refers to.
        graph: String,
        /// Labeling file: whitespace-separated digits 0, 1, 2.
        labeling: PathBuf,
        /// Additionally require positive labels to induce no isolated
        /// vertex.
        #[arg(long)]
        total: bool,
    },

    /// Map a command over every graph in a graph6 corpus file.
    Batch {
        /// Corpus: one graph6 string per line.
        corpus: PathBuf,
        /// What to run per graph.
        #[arg(long, value_enum)]
        command: BatchCommand,
        /// Partner graph for direct-bounds and rooted-classify.
        #[arg(long)]
        partner: Option<String>,
        /// Root vertex in the partner graph for rooted-classify.
        #[arg(long)]
        root: Option<usize>,
        /// Worker threads.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[command(flatten)]
        exact: ExactFlags,
    },

    /// Regenerate the reference tables: the complete-factors grid and the
    /// sharp small products, each solved exactly.
    PaperTables,
}

fn run(cli: &Cli) -> Result<Outcome> {
    let budget = SolverBudget {
        max_nodes: cli.budget_nodes,
        max_seconds: cli.budget_seconds,
        ..SolverBudget::default()
    };

    match &cli.command {
        Command::Invariants { graph } => {
            let g = load_graph(graph)?;
            Ok(Outcome::clean(invariants_report(&g, graph, &budget)?))
        }
        Command::DirectBounds { g, h, exact } => {
            let gg = load_graph(g)?;
            let hh = load_graph(h)?;
            let instance = format!("{} x {}", g, h);
            Ok(Outcome::clean(direct_bounds_cmd(
                &gg,
                &hh,
                &instance,
                exact.resolve(),
                &budget,
            )?))
        }
        Command::RootedClassify { g, h, root, check } => {
            let gg = load_graph(g)?;
            let hh = load_graph(h)?;
            let instance = format!("{} rooted {} at {}", g, h, root);
            Ok(Outcome::clean(rooted_classify_cmd(
                &gg, &hh, *root, *check, &instance, &budget,
            )?))
        }
        Command::VerifyLabeling {
            graph,
            labeling,
            total,
        } => {
            let g = load_graph(graph)?;
            let f = load_labeling(labeling)?;
            let instance = format!("{} with {}", graph, labeling.display());
            Ok(Outcome::clean(verify_labeling_cmd(&g, &f, *total, &instance)?))
        }
        Command::Batch {
            corpus,
            command,
            partner,
            root,
            jobs,
            exact,
        } => {
            let entries = load_corpus(corpus)?;
            let partner_graph = partner.as_deref().map(load_graph).transpose()?;
            batch_cmd(
                &entries,
                *command,
                partner_graph.as_ref(),
                *root,
                exact.resolve(),
                *jobs,
                &corpus.display().to_string(),
                &budget,
            )
        }
        Command::PaperTables => Ok(Outcome::clean(tables_cmd(&budget)?)),
    }
}

fn emit(cli: &Cli, report: &Report) -> Result<()> {
    let format = cli.format.unwrap_or(match cli.command {
        Command::PaperTables => OutputFormat::Csv,
        _ => OutputFormat::Text,
    });
    let rendered = report.render(format)?;
    match &cli.output {
        Some(path) => std::fs::write(path, rendered)
            .with_context(|| format!("writing {}", path.display()))?,
        None => print!("{}", rendered),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            if let Err(e) = emit(&cli, &outcome.report) {
                eprintln!("error: {:#}", e);
                return ExitCode::from(1);
            }
            if outcome.recorded_errors > 0 {
                eprintln!(
                    "error: {} instance(s) failed; see the report rows",
                    outcome.recorded_errors
                );
                ExitCode::from(1)
            } else if outcome.report.consistency {
                ExitCode::SUCCESS
            } else {
                eprintln!("consistency failure; see the report");
                ExitCode::from(2)
            }
        }
        Err(e) => {
            eprintln!("error: {:#}", e);
            ExitCode::from(1)
        }
    }
}
