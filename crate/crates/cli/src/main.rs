use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hamdec::assembly::CompletionOptions;
use hamdec::counting::{
    bregman_maxdeg_bound, count_hamilton_cycles_exact, count_hamilton_decompositions_exact,
    count_hamilton_decompositions_ordered, decomposition_upper_bound, vdw_bound, LogCount,
};
use hamdec::graph::{edgelist, generators, RandomKind};
use hamdec::matching::{extract_oriented_r_factor, oriented_reg};
use hamdec::pipeline::{
    approximate_decomposition, sandwich_experiment, verify_certificate, CompletionStageKind, DecompositionCertificate,
    PipelineError, RunConfig, RunReport,
};
use hamdec::OrientedGraph;

const EXIT_VERIFY: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_STAGE: u8 = 3;

#[derive(Parser)]
#[command(name = "hamdec", version, about = "Hamilton decompositions of oriented graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Rotational,
    Transitive,
    Cycle,
    RandomTournament,
    RandomRegular,
}

#[derive(Clone, Copy, ValueEnum)]
enum Stage {
    None,
    ExactBacktracking,
}

#[derive(Subcommand)]
enum Command {
    /// Print a generated graph as an edge list.
    Generate {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        n: usize,
        /// Degree for random regular graphs.
        #[arg(long, default_value_t = 1)]
        r: usize,
        #[arg(long, env = "HAMDEC_SEED", default_value_t = 0)]
        seed: u64,
    },
    /// Print reg(G).
    Reg { graph: PathBuf },
    /// Print an r-regular spanning subgraph as an edge list.
    Factor {
        graph: PathBuf,
        #[arg(long)]
        r: usize,
    },
    /// Find edge-disjoint Hamilton cycles and print the certificate and report as JSON.
    Decompose {
        graph: PathBuf,
        #[arg(long, default_value_t = 0.3)]
        eps: f64,
        #[arg(long, env = "HAMDEC_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, default_value_t = 4)]
        b: usize,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long, default_value_t = 400)]
        rounds: usize,
        #[arg(long, default_value_t = 24)]
        block_cap: usize,
        #[arg(long, value_enum, default_value_t = Stage::ExactBacktracking)]
        completion: Stage,
        /// Also write the bare certificate here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a certificate against a graph; exits 1 on any violation.
    Verify { graph: PathBuf, certificate: PathBuf },
    /// Print the counting bounds for n and r.
    Bounds {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
    /// Count Hamilton cycles and Hamilton decompositions exactly.
    CountExact { graph: PathBuf },
    /// Lower, exact and upper decomposition counts of a small rotational tournament.
    Sandwich {
        #[arg(long)]
        n: usize,
    },
}

struct Failure {
    code: u8,
    message: String,
}

fn input<E: std::fmt::Display>(e: E) -> Failure {
    Failure { code: EXIT_INPUT, message: e.to_string() }
}

fn read_text(path: &Path) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(input)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))
    }
}

fn read_graph(path: &Path) -> Result<OrientedGraph, Failure> {
    let text = read_text(path)?;
    edgelist::parse(&text).map_err(|e| input(format!("{}: {e}", path.display())))
}

fn ln_json(c: &LogCount) -> Value {
    json!({ "ln": c.ln_opt(), "exact": c.exact.map(|x| x.to_string()) })
}

/// Writes to stdout, ignoring a closed pipe.
fn emit_text(text: &str) {
    let _ = io::stdout().write_all(text.as_bytes());
}

fn print_json(v: Value) {
    emit_text(&format!("{}\n", serde_json::to_string_pretty(&v).expect("serializable")));
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Generate { kind, n, r, seed } => {
            let g = match kind {
                Kind::Rotational => generators::rotational_tournament(n),
                Kind::Transitive => generators::transitive_tournament(n),
                Kind::Cycle => generators::directed_cycle(n),
                Kind::RandomTournament => generators::random_oriented(RandomKind::Tournament, n, seed),
                Kind::RandomRegular => generators::random_oriented(RandomKind::Regular(r), n, seed),
            }
            .map_err(input)?;
            emit_text(&edgelist::to_string(&g));
        }
        Command::Reg { graph } => emit_text(&format!("{}\n", oriented_reg(&read_graph(&graph)?))),
        Command::Factor { graph, r } => {
            let g = read_graph(&graph)?;
            let f = extract_oriented_r_factor(&g, r).map_err(|e| Failure { code: EXIT_STAGE, message: e.to_string() })?;
            let h = OrientedGraph::new(g.n(), f.edges).expect("factor edges lie in G");
            emit_text(&edgelist::to_string(&h));
        }
        Command::Decompose { graph, eps, seed, k, b, a, t, rounds, block_cap, completion, out } => {
            let g = read_graph(&graph)?;
            let config = RunConfig {
                k,
                eps,
                b,
                a,
                t,
                rounds,
                seed,
                completion: CompletionOptions { block_cap, ..Default::default() },
                completion_stage: match completion {
                    Stage::None => CompletionStageKind::None,
                    Stage::ExactBacktracking => CompletionStageKind::ExactBacktracking,
                },
                ..Default::default()
            };
            let emit = |cert: &DecompositionCertificate, report: &RunReport| -> Result<(), Failure> {
                if let Some(path) = &out {
                    let text = serde_json::to_string(cert).expect("serializable");
                    fs::write(path, text).map_err(|e| input(format!("{}: {e}", path.display())))?;
                }
                print_json(json!({ "certificate": cert, "report": report }));
                Ok(())
            };
            match approximate_decomposition(&g, &config) {
                Ok((cert, report)) => emit(&cert, &report)?,
                Err(PipelineError::StageFailure { stage, message, partial }) => {
                    emit(&partial.0, &partial.1)?;
                    return Err(Failure { code: EXIT_STAGE, message: format!("{stage} stage failed: {message}") });
                }
                Err(e) => return Err(input(e)),
            }
        }
        Command::Verify { graph, certificate } => {
            let g = read_graph(&graph)?;
            let value: Value = serde_json::from_str(&read_text(&certificate)?).map_err(input)?;
            let value = match value.get("certificate") {
                Some(inner) => inner.clone(),
                None => value,
            };
            let cert: DecompositionCertificate = serde_json::from_value(value).map_err(input)?;
            let verdict = verify_certificate(&g, &cert);
            print_json(json!(verdict));
            if !verdict.ok {
                return Err(Failure { code: EXIT_VERIFY, message: "certificate rejected".into() });
            }
        }
        Command::Bounds { n, r } => {
            let upper = decomposition_upper_bound(n, r).map_err(input)?;
            let bregman = bregman_maxdeg_bound(n, r).map_err(input)?;
            let vdw = vdw_bound(n, r).ok();
            print_json(json!({
                "n": n,
                "r": r,
                "decomposition_upper": ln_json(&upper),
                "bregman_maxdeg": ln_json(&bregman),
                "van_der_waerden": vdw.as_ref().map(ln_json),
            }));
        }
        Command::CountExact { graph } => {
            let g = read_graph(&graph)?;
            let cycles = count_hamilton_cycles_exact(&g).map_err(input)?;
            let canonical = count_hamilton_decompositions_exact(&g);
            let ordered = count_hamilton_decompositions_ordered(&g);
            let field = |r: &Result<LogCount, _>| match r {
                Ok(c) => ln_json(c),
                Err(e) => json!({ "error": format!("{e}") }),
            };
            print_json(json!({
                "n": g.n(),
                "hamilton_cycles": ln_json(&cycles),
                "decompositions": field(&canonical),
                "decompositions_ordered": field(&ordered),
            }));
        }
        Command::Sandwich { n } => {
            let report = sandwich_experiment(n).map_err(input)?;
            print_json(json!(report));
            if !report.sandwich_holds {
                return Err(Failure { code: EXIT_VERIFY, message: "sandwich violated".into() });
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("hamdec: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
