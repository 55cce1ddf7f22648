//! `twinless` command-line front end.
//!
//! Exit codes: 0 success, 1 usage error, 2 unreadable or malformed input,
//! 3 precondition violation (e.g. input not twinless strongly connected, or
//! an enumeration budget exceeded), 4 self-test failure.

mod report;
mod selftest;

use std::io::{Read, Write};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use twinless_core::blocks::{
    k_edge_twinless_blocks_bruteforce_with, tetb_alg1_matrix_detailed, tetb_alg2_refine_detailed,
    two_edge_blocks_with, two_edge_twinless_blocks_by,
};
use twinless_core::connectivity::{
    is_twinless_strongly_connected, strongly_connected_components,
    twinless_strongly_connected_components,
};
use twinless_core::cuts::{strong_bridges_with, twinless_bridges_with};
use twinless_core::exec::with_threads;
use twinless_core::graph::parse_edge_list;
use twinless_core::testkit::{oracle_two_edge_twinless_blocks_with, random_digraph, GeneratorConfig, Shape};
use twinless_core::{BlockSet, Digraph, Error, Execution, ParseMode, Partition, RefineMode, TetbMethod};

pub use report::AnalysisReport;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_SELFTEST: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "twinless", version, about = "Twinless connectivity analysis of directed graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Args)]
struct Common {
    /// Edge-list file, or `-` for standard input.
    #[arg(long, default_value = "-")]
    input: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Smallest class or block to report (default 1 for partitions, 2 for blocks).
    #[arg(long)]
    min_size: Option<usize>,
    /// List vertices outside every block as singleton blocks.
    #[arg(long)]
    include_singletons: bool,
    /// Worker threads; 1 runs sequentially.
    #[arg(long)]
    threads: Option<usize>,
    /// Drop duplicate arcs instead of rejecting them.
    #[arg(long)]
    lenient: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algorithm {
    Alg1,
    Alg2Safe,
    Alg2Faithful,
    Oracle,
}

impl Algorithm {
    fn name(self) -> &'static str {
        match self {
            Algorithm::Alg1 => "alg1",
            Algorithm::Alg2Safe => "alg2-safe",
            Algorithm::Alg2Faithful => "alg2-faithful",
            Algorithm::Oracle => "oracle",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ShapeArg {
    Any,
    #[value(alias = "sc")]
    StronglyConnected,
    #[value(alias = "tsc")]
    TwinlessStronglyConnected,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Strongly connected components.
    Scc(Common),
    /// Twinless strongly connected components.
    Tscc(Common),
    /// Arcs whose removal destroys strong connectivity.
    StrongBridges(Common),
    /// Arcs whose removal destroys twinless strong connectivity.
    TwinlessBridges(Common),
    /// 2-edge blocks of a strongly connected graph.
    #[command(name = "2-edge-blocks")]
    TwoEdgeBlocks(Common),
    /// 2-edge-twinless blocks.
    #[command(name = "2etb")]
    Tetb {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Algorithm::Alg2Safe)]
        algorithm: Algorithm,
    },
    /// k-edge-twinless blocks by exhaustive enumeration.
    Ketb {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        k: usize,
    },
    /// Print a seeded random graph as an edge list.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value_t = ShapeArg::Any)]
        shape: ShapeArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0.2)]
        twin_density: f64,
        #[arg(long)]
        max_twin_pairs: Option<usize>,
    },
    /// Check the bundled fixtures and random instances against the oracles.
    Selftest {
        #[arg(long, default_value_t = 200)]
        cases: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

enum Failure {
    Input(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(stderr, "{e}")
            } else {
                write!(stdout, "{e}")
            };
            return code;
        }
    };

    let outcome = match cli.command {
        Command::Gen {
            n,
            m,
            shape,
            seed,
            twin_density,
            max_twin_pairs,
        } => {
            let mut cfg = GeneratorConfig::new(n, m, seed)
                .shape(match shape {
                    ShapeArg::Any => Shape::Any,
                    ShapeArg::StronglyConnected => Shape::StronglyConnected,
                    ShapeArg::TwinlessStronglyConnected => Shape::TwinlessStronglyConnected,
                })
                .twin_density(twin_density);
            cfg.max_twin_pairs = max_twin_pairs;
            random_digraph(&cfg).map(|g| {
                let _ = writeln!(stdout, "{}", g.serialize());
            })
        }
        Command::Selftest { cases, seed } => {
            let passed = selftest::run(cases, seed, stdout);
            return if passed { EXIT_OK } else { EXIT_SELFTEST };
        }
        command => {
            return match analyze(command, stdin) {
                Ok((report, format)) => {
                    let _ = match format {
                        Format::Json => writeln!(stdout, "{}", report.to_json()),
                        Format::Text => write!(stdout, "{}", report.to_text()),
                    };
                    EXIT_OK
                }
                Err(Failure::Input(msg)) => {
                    let _ = writeln!(stderr, "error: {msg}");
                    EXIT_INPUT
                }
                Err(Failure::Core(e)) => {
                    let _ = writeln!(stderr, "error: {e}");
                    if e.is_parse() {
                        EXIT_INPUT
                    } else {
                        EXIT_PRECONDITION
                    }
                }
            };
        }
    };
    match outcome {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_PRECONDITION
        }
    }
}

fn read_graph(common: &Common, stdin: &mut dyn Read) -> Result<Digraph, Failure> {
    let text = if common.input == "-" {
        let mut s = String::new();
        stdin
            .read_to_string(&mut s)
            .map_err(|e| Failure::Input(format!("cannot read standard input: {e}")))?;
        s
    } else {
        std::fs::read_to_string(&common.input)
            .map_err(|e| Failure::Input(format!("cannot read {}: {e}", common.input)))?
    };
    let mode = if common.lenient {
        ParseMode::Lenient
    } else {
        ParseMode::Strict
    };
    Ok(parse_edge_list(&text, mode)?.graph)
}

fn label_sets(g: &Digraph, sets: &[Vec<usize>], min_size: usize) -> Vec<Vec<String>> {
    let mut out: Vec<Vec<String>> = sets
        .iter()
        .filter(|s| s.len() >= min_size)
        .map(|s| {
            let mut s = s.clone();
            g.sort_by_label(&mut s);
            s.into_iter().map(|v| g.label(v).to_owned()).collect()
        })
        .collect();
    report::sort_sets(&mut out);
    out
}

fn partition_section(g: &Digraph, p: &Partition, common: &Common) -> Vec<Vec<String>> {
    label_sets(g, p.classes(), common.min_size.unwrap_or(1))
}

fn block_section(g: &Digraph, b: &BlockSet, common: &Common) -> Vec<Vec<String>> {
    let mut sets: Vec<Vec<usize>> = b.blocks().to_vec();
    if common.include_singletons {
        sets.extend(b.uncovered(g.n()).into_iter().map(|v| vec![v]));
    }
    let min = if common.include_singletons {
        1
    } else {
        common.min_size.unwrap_or(2)
    };
    label_sets(g, &sets, min)
}

fn analyze(command: Command, stdin: &mut dyn Read) -> Result<(AnalysisReport, Format), Failure> {
    let (common, algorithm, k) = match &command {
        Command::Tetb { common, algorithm } => (common.clone(), Some(*algorithm), None),
        Command::Ketb { common, k } => (common.clone(), None, Some(*k)),
        Command::Scc(c)
        | Command::Tscc(c)
        | Command::StrongBridges(c)
        | Command::TwinlessBridges(c)
        | Command::TwoEdgeBlocks(c) => (c.clone(), None, None),
        Command::Gen { .. } | Command::Selftest { .. } => unreachable!("handled by run"),
    };
    let g = read_graph(&common, stdin)?;
    let started = Instant::now();
    let report = with_threads(common.threads, |exec| -> Result<AnalysisReport, Error> {
        match command {
            Command::Scc(_) => {
                let mut r = AnalysisReport::new(&g, "scc", "tarjan");
                r.classes = Some(partition_section(&g, &strongly_connected_components(&g), &common));
                Ok(r)
            }
            Command::Tscc(_) => {
                let mut r = AnalysisReport::new(&g, "tscc", "underlying-2ecc");
                let p = twinless_strongly_connected_components(&g);
                r.classes = Some(partition_section(&g, &p, &common));
                Ok(r)
            }
            Command::StrongBridges(_) => {
                let mut r = AnalysisReport::new(&g, "strong-bridges", "per-arc");
                let sb = strong_bridges_with(&g, exec)?;
                r.b_s = Some(sb.len());
                r.strong_bridges = Some(report::labeled_arcs(&g, &sb));
                Ok(r)
            }
            Command::TwinlessBridges(_) => {
                let mut r = AnalysisReport::new(&g, "twinless-bridges", "per-arc");
                let tb = twinless_bridges_with(&g, exec)?;
                r.b_t = Some(tb.len());
                r.twinless_bridges = Some(report::labeled_arcs(&g, &tb));
                Ok(r)
            }
            Command::TwoEdgeBlocks(_) => {
                let mut r = AnalysisReport::new(&g, "2-edge-blocks", "strong-bridge-refinement");
                r.blocks = Some(block_section(&g, &two_edge_blocks_with(&g, exec)?, &common));
                Ok(r)
            }
            Command::Tetb { .. } => {
                let algorithm = algorithm.expect("set for 2etb");
                let mut r = AnalysisReport::new(&g, "2etb", algorithm.name());
                let blocks = tetb(&g, algorithm, exec, &mut r)?;
                r.blocks = Some(block_section(&g, &blocks, &common));
                Ok(r)
            }
            Command::Ketb { .. } => {
                let k = k.expect("set for ketb");
                let mut r = AnalysisReport::new(&g, &format!("ketb-{k}"), "bruteforce");
                let blocks = k_edge_twinless_blocks_bruteforce_with(&g, k, exec)?;
                r.blocks = Some(block_section(&g, &blocks, &common));
                Ok(r)
            }
            Command::Gen { .. } | Command::Selftest { .. } => unreachable!("handled by run"),
        }
    });
    let mut report = report?;
    report.elapsed_ms = (started.elapsed().as_secs_f64() * 1e6).round() / 1e3;
    Ok((report, common.format))
}

/// Twinless strongly connected inputs are analysed directly (and report
/// bridge counts); other inputs are split into their TSCCs first.
fn tetb(g: &Digraph, algorithm: Algorithm, exec: Execution, r: &mut AnalysisReport) -> Result<BlockSet, Error> {
    if algorithm == Algorithm::Oracle {
        return oracle_two_edge_twinless_blocks_with(g, exec);
    }
    if !is_twinless_strongly_connected(g) {
        let method = match algorithm {
            Algorithm::Alg1 => TetbMethod::Matrix,
            Algorithm::Alg2Faithful => TetbMethod::Refine(RefineMode::Faithful),
            _ => TetbMethod::Refine(RefineMode::Safe),
        };
        return two_edge_twinless_blocks_by(g, method, exec);
    }
    match algorithm {
        Algorithm::Alg1 => {
            let out = tetb_alg1_matrix_detailed(g, exec)?;
            r.b_t = Some(out.twinless_bridges.len());
            Ok(out.blocks)
        }
        _ => {
            let mode = if algorithm == Algorithm::Alg2Faithful {
                RefineMode::Faithful
            } else {
                RefineMode::Safe
            };
            let out = tetb_alg2_refine_detailed(g, mode, exec)?;
            r.b_s = Some(out.strong_bridges.len());
            r.b_t = Some(out.twinless_bridges.len());
            Ok(out.blocks)
        }
    }
}
