//! End-to-end approximate Hamilton decomposition.
//!
//! With `k = 1` the driver runs in rounds: a random reservoir `W` is drawn,
//! path covers are built from a regular factor restricted to `U = V \ W`, and
//! each cover is closed into a Hamilton cycle through `W`. Used edges are
//! removed and the next round starts on what is left. With `k >= 2` the graph
//! is split into `k³` edge-disjoint subproblems first and each is handled once,
//! in parallel.

mod certificate;
mod completion;
mod sandwich;

pub use certificate::{verify_certificate, DecompositionCertificate, Verification, Violation};
pub use completion::{find_hamilton_decomposition, CompletionStage, ExactBacktracking, NoCompletion};
pub use sandwich::{sandwich_experiment, SANDWICH_MAX_N};

use std::collections::HashSet;
use std::time::Instant;

use rand::seq::SliceRandom;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::assembly::{complete_family_to_cycles, AssemblyError, CompletionOptions, HamiltonCycle, SEARCH_MAX_N};
use crate::graph::{Edge, OrientedGraph};
use crate::matching::{extract_oriented_r_factor, oriented_reg};
use crate::partition::{build_partition, PartitionFloors, PartitionReport};
use crate::pathcover::{build_path_cover_family, DirectedPath, PathCover, PathCoverFamily};
use crate::rng;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CompletionStageKind {
    None,
    #[default]
    ExactBacktracking,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunConfig {
    /// `1` for the round-based single-reservoir driver, otherwise the partition parameter.
    pub k: usize,
    pub eps: f64,
    /// Number of parts for the path covers; must be even.
    pub b: usize,
    /// Path bound per cover; defaults to `|W|/4`.
    pub a: Option<usize>,
    /// Covers requested per round or subproblem; defaults to the factor degree.
    pub t: Option<usize>,
    /// Allowed degree spread when sampling matchings.
    pub xi: usize,
    /// Share of vertices placed in the reservoir in single-reservoir mode.
    pub reservoir_fraction: f64,
    pub rounds: usize,
    /// Consecutive rounds without a new cycle before giving up.
    pub stall_rounds: usize,
    pub completion: CompletionOptions,
    pub partition_retries: usize,
    pub seed: u64,
    pub completion_stage: CompletionStageKind,
    pub min_semi_floor: usize,
    pub max_n: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            k: 1,
            eps: 0.3,
            b: 4,
            a: None,
            t: None,
            xi: 1,
            reservoir_fraction: 0.75,
            rounds: 400,
            stall_rounds: 5,
            completion: CompletionOptions::default(),
            partition_retries: 20,
            seed: 0,
            completion_stage: CompletionStageKind::default(),
            min_semi_floor: 0,
            max_n: 2000,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), PipelineError> {
        let bad = |m: &str| Err(PipelineError::InvalidConfig(m.to_string()));
        if self.k == 0 {
            return bad("k must be positive");
        }
        if !(self.eps > 0.0 && self.eps < 1.0) {
            return bad("eps must lie in (0, 1)");
        }
        if self.b < 2 || self.b % 2 != 0 {
            return bad("b must be even and at least 2");
        }
        if self.a == Some(0) || self.t == Some(0) {
            return bad("a and t must be positive");
        }
        if !(self.reservoir_fraction > 0.0 && self.reservoir_fraction < 1.0) {
            return bad("reservoir fraction must lie in (0, 1)");
        }
        if self.rounds == 0 || self.stall_rounds == 0 || self.partition_retries == 0 {
            return bad("round and retry budgets must be positive");
        }
        if self.completion.retries == 0 || self.completion.block_cap < 2 {
            return bad("completion needs at least one retry and a block cap of 2");
        }
        Ok(())
    }

    fn stage(&self) -> Box<dyn CompletionStage> {
        match self.completion_stage {
            CompletionStageKind::None => Box::new(NoCompletion),
            CompletionStageKind::ExactBacktracking => Box::new(ExactBacktracking::default()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    SingleReservoir,
    Partition,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StageTiming {
    pub stage: &'static str,
    pub seconds: f64,
}

/// One round (single-reservoir mode) or one subproblem (partition mode).
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct StepReport {
    pub index: usize,
    pub u_size: usize,
    pub w_size: usize,
    /// Degree of the regular factor the covers were drawn from.
    pub factor_degree: usize,
    pub b: usize,
    pub a: usize,
    pub requested_t: usize,
    /// Covers actually built (`t′`).
    pub achieved_t: usize,
    pub cycles: usize,
    pub diagnostics: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunReport {
    pub mode: Mode,
    pub n: usize,
    pub reg: usize,
    pub k: usize,
    /// `k / reg`, or 0 when `reg = 0`.
    pub ratio: f64,
    pub timings: Vec<StageTiming>,
    pub steps: Vec<StepReport>,
    pub partition: Option<PartitionReport>,
    pub completion_stage: &'static str,
    pub completion_cycles: usize,
    pub diagnostics: Vec<String>,
}

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("graph has {n} vertices, limit is {max}")]
    InputTooLarge { n: usize, max: usize },
    #[error("minimum semi-degree {min_semi} is below the floor {floor}")]
    SemiDegreeBelowFloor { min_semi: usize, floor: usize },
    #[error("{stage} stage failed: {message}")]
    StageFailure { stage: &'static str, message: String, partial: Box<(DecompositionCertificate, RunReport)> },
}

struct Run<'a> {
    g: &'a OrientedGraph,
    config: &'a RunConfig,
    reg: usize,
    cycles: Vec<HamiltonCycle>,
    used: HashSet<Edge>,
    timings: Vec<StageTiming>,
    steps: Vec<StepReport>,
    diagnostics: Vec<String>,
}

impl Run<'_> {
    fn remaining(&self) -> OrientedGraph {
        self.g.retain_edges(|u, v| !self.used.contains(&(u, v)))
    }

    fn add(&mut self, cycles: Vec<HamiltonCycle>) {
        for c in cycles {
            assert!(c.edges().all(|e| self.used.insert(e)), "cycles must be edge-disjoint");
            self.cycles.push(c);
        }
    }

    fn time<T>(&mut self, stage: &'static str, f: impl FnOnce(&mut Self) -> T) -> T {
        let start = Instant::now();
        let out = f(self);
        let seconds = start.elapsed().as_secs_f64();
        match self.timings.iter_mut().find(|t| t.stage == stage) {
            Some(t) => t.seconds += seconds,
            None => self.timings.push(StageTiming { stage, seconds }),
        }
        out
    }

    fn finish(self, mode: Mode, partition: Option<PartitionReport>, completion: (&'static str, usize)) -> (DecompositionCertificate, RunReport) {
        let cert = DecompositionCertificate::new(self.g, self.cycles, self.reg);
        let report = RunReport {
            mode,
            n: self.g.n(),
            reg: self.reg,
            k: cert.k,
            ratio: cert.ratio(),
            timings: self.timings,
            steps: self.steps,
            partition,
            completion_stage: completion.0,
            completion_cycles: completion.1,
            diagnostics: self.diagnostics,
        };
        (cert, report)
    }
}

/// Largest even number not above `min(b, u / 2)`.
fn effective_b(b: usize, u: usize) -> usize {
    let x = b.min(u / 2);
    x - x % 2
}

/// Covers built on a relabelled vertex set, mapped back through `labels`.
fn lift_family(family: &PathCoverFamily, labels: &[usize]) -> PathCoverFamily {
    let covers = family
        .covers
        .iter()
        .map(|c| PathCover {
            paths: c.paths.iter().map(|p| DirectedPath::new(p.vertices.iter().map(|&v| labels[v]).collect())).collect(),
        })
        .collect();
    PathCoverFamily { covers, a: family.a, t: family.t }
}

/// Completes as many covers as possible: a cover that fails is dropped and the
/// rest are resumed on the host minus the cycles already built.
fn complete_skipping(
    h: &OrientedGraph,
    u: &[usize],
    w: &[usize],
    mut family: PathCoverFamily,
    opts: &CompletionOptions,
    seed: u64,
    diagnostics: &mut Vec<String>,
) -> Vec<HamiltonCycle> {
    let mut out: Vec<HamiltonCycle> = Vec::new();
    let mut offset = 0;
    let mut host = h.clone();
    while !family.covers.is_empty() {
        match complete_family_to_cycles(&host, u, w, &family, opts, rng::derive(seed, offset as u64)) {
            Ok(cycles) => {
                out.extend(cycles);
                break;
            }
            Err(AssemblyError::PartialCompletion { completed, failed_index, cause }) => {
                diagnostics.push(format!("cover {}: {cause}", offset + failed_index));
                out.extend(completed);
                let used: HashSet<Edge> = out.iter().flat_map(|c| c.edges()).collect();
                host = h.retain_edges(|x, y| !used.contains(&(x, y)));
                family.covers.drain(..=failed_index);
                family.t = family.covers.len();
                offset += failed_index + 1;
            }
            Err(e) => {
                diagnostics.push(e.to_string());
                break;
            }
        }
    }
    out
}

/// Builds covers from `factor` (a graph on the local vertex set of `u`) and
/// closes them through `w` inside `host`.
#[allow(clippy::too_many_arguments)]
fn cover_and_complete(
    host: &OrientedGraph,
    factor: &OrientedGraph,
    factor_degree: usize,
    u: &[usize],
    w: &[usize],
    config: &RunConfig,
    seed: u64,
    index: usize,
) -> (StepReport, Vec<HamiltonCycle>) {
    let b = effective_b(config.b, u.len());
    // |W|/4, raised to the fewest paths an equipartition allows, capped at the |W|/2 blocks W can host.
    let fewest = if b >= 2 { u.len() - (b - 1) * (u.len() / b) } else { 1 };
    let a = config.a.unwrap_or((w.len() / 4).max(fewest).min(w.len() / 2).max(1));
    let requested_t = config.t.unwrap_or(factor_degree).max(1);
    let mut step = StepReport {
        index,
        u_size: u.len(),
        w_size: w.len(),
        factor_degree,
        b,
        a,
        requested_t,
        ..Default::default()
    };
    if b < 2 {
        step.diagnostics.push(format!("|U| = {} is too small for path covers", u.len()));
        return (step, Vec::new());
    }
    let outcome = match build_path_cover_family(factor, b, a, requested_t, config.xi, rng::derive(seed, 1)) {
        Ok(o) => o,
        Err(e) => {
            step.diagnostics.push(format!("path covers: {e}"));
            return (step, Vec::new());
        }
    };
    step.achieved_t = outcome.family.covers.len();
    let family = lift_family(&outcome.family, u);
    let cycles = complete_skipping(host, u, w, family, &config.completion, rng::derive(seed, 2), &mut step.diagnostics);
    step.cycles = cycles.len();
    (step, cycles)
}

fn single_reservoir(run: &mut Run) {
    let n = run.g.n();
    let cfg = run.config;
    // Leave at least four vertices outside W so that two parts of two fit, and
    // keep W within reach of the joint reservoir search.
    let w_size = ((cfg.reservoir_fraction * n as f64).round() as usize)
        .min(SEARCH_MAX_N)
        .min(n.saturating_sub(4))
        .max(1);
    let mut stalled = 0;
    for round in 0..cfg.rounds {
        let current = run.remaining();
        let found = run.time("factor", |_| {
            let d = oriented_reg(&current);
            (d > 0).then(|| {
                let f = extract_oriented_r_factor(&current, d).expect("reg value admits a factor");
                (d, OrientedGraph::new(n, f.edges).expect("factor edges are edges of G"))
            })
        });
        let Some((d, factor)) = found else {
            run.diagnostics.push(format!("round {round}: no regular factor left"));
            break;
        };

        let round_seed = rng::derive(cfg.seed, round as u64);
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut rng::seeded(round_seed));
        let (mut w, mut u) = (order[..w_size].to_vec(), order[w_size..].to_vec());
        w.sort_unstable();
        u.sort_unstable();
        let local = factor.induced(&u);

        let (step, cycles) = run.time("cover-and-complete", |_| {
            cover_and_complete(&current, &local.graph, d, &u, &w, cfg, round_seed, round)
        });
        let too_small = step.b < 2;
        stalled = if cycles.is_empty() { stalled + 1 } else { 0 };
        run.steps.push(step);
        run.add(cycles);
        if too_small || stalled >= cfg.stall_rounds {
            break;
        }
    }
}

fn partitioned(run: &mut Run) -> Result<PartitionReport, String> {
    let (g, cfg) = (run.g, run.config);
    let n = g.n();
    let factor = run.time("factor", |r| extract_oriented_r_factor(g, r.reg)).map_err(|e| e.to_string())?;
    let outcome = run
        .time("partition", |_| {
            build_partition(g, &factor, cfg.k, cfg.eps, cfg.seed, cfg.partition_retries, &PartitionFloors::default())
        })
        .map_err(|e| e.to_string())?;
    if !outcome.report.all_met {
        run.diagnostics.push("partition properties not all met; continuing with the best attempt".into());
    }
    let results: Vec<(StepReport, Vec<HamiltonCycle>)> = run.time("cover-and-complete", |_| {
        outcome
            .specs
            .par_iter()
            .map(|spec| {
                let h = spec.h_graph(n);
                let d = spec.d_graph(n);
                let degree = spec.stats.d_min_semi;
                let seed = rng::derive(cfg.seed ^ 0x5B_9A57, spec.index as u64);
                cover_and_complete(&h, &d.graph, degree, &spec.u, &spec.w, cfg, seed, spec.index)
            })
            .collect()
    });
    for (step, cycles) in results {
        run.steps.push(step);
        run.add(cycles);
    }
    Ok(outcome.report)
}

/// Finds edge-disjoint Hamilton cycles of `g`. Every returned certificate,
/// including the partial one inside `StageFailure`, passes [`verify_certificate`].
pub fn approximate_decomposition(
    g: &OrientedGraph,
    config: &RunConfig,
) -> Result<(DecompositionCertificate, RunReport), PipelineError> {
    config.validate()?;
    let n = g.n();
    if n > config.max_n {
        return Err(PipelineError::InputTooLarge { n, max: config.max_n });
    }
    let min_semi = g.degree_summary().min_semi;
    if min_semi < config.min_semi_floor {
        return Err(PipelineError::SemiDegreeBelowFloor { min_semi, floor: config.min_semi_floor });
    }
    let mut run = Run {
        g,
        config,
        reg: 0,
        cycles: Vec::new(),
        used: HashSet::new(),
        timings: Vec::new(),
        steps: Vec::new(),
        diagnostics: Vec::new(),
    };
    run.reg = run.time("reg", |_| oriented_reg(g));
    let mode = if config.k == 1 { Mode::SingleReservoir } else { Mode::Partition };
    let stage = config.stage();
    if run.reg == 0 {
        run.diagnostics.push("reg(G) = 0".into());
        return Ok(run.finish(mode, None, (stage.name(), 0)));
    }

    let mut partition = None;
    match mode {
        Mode::SingleReservoir => single_reservoir(&mut run),
        Mode::Partition => match partitioned(&mut run) {
            Ok(report) => partition = Some(report),
            Err(message) => {
                let partial = run.finish(mode, None, (stage.name(), 0));
                return Err(PipelineError::StageFailure { stage: "partition", message, partial: Box::new(partial) });
            }
        },
    }

    let leftover = run.remaining();
    let extra = run.time("completion", |_| stage.complete(&leftover));
    let added = extra.len();
    run.add(extra);
    Ok(run.finish(mode, partition, (stage.name(), added)))
}
