//! `hetpath`: rainbow-path analysis of edge-colored graphs.
//!
//! Graphs are read in the edge-list text format (`n m` header, then
//! `u v c` lines) or its JSON mirror; the format is sniffed from the
//! content. All results go to stdout as JSON with fixed key order; logs and
//! errors go to stderr. Exit codes: 0 success, 1 verification failure,
//! 2 input error.

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};
use hetpath_core as core;
use serde::Serialize;
use std::fs;
use std::path::PathBuf;
use std::time::{Duration, Instant};

#[derive(Parser)]
#[command(name = "hetpath", version, about = "Rainbow-path analysis of edge-colored graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check whether the input is a complete graph with a Gallai coloring.
    CheckGallai {
        #[arg(long)]
        input: PathBuf,
    },
    /// Color degrees and color neighborhoods.
    ColorDegree {
        #[arg(long)]
        input: PathBuf,
        /// Report a single vertex instead of the whole graph.
        #[arg(long)]
        vertex: Option<usize>,
    },
    /// Build a rainbow u-path of length d^c(u) on a Gallai-colored
    /// complete graph.
    BuildPath {
        #[arg(long)]
        input: PathBuf,
        /// The anchor vertex u.
        #[arg(long)]
        vertex: usize,
        /// Emit one JSON line per step before the result.
        #[arg(long)]
        trace: bool,
        /// Skip the completeness / rainbow-triangle precheck.
        #[arg(long)]
        skip_precheck: bool,
    },
    /// Exact longest rainbow path search.
    LongestPath {
        #[arg(long)]
        input: PathBuf,
        /// Restrict the search to paths starting at this vertex.
        #[arg(long)]
        from: Option<usize>,
        #[arg(long)]
        max_nodes: Option<u64>,
        #[arg(long)]
        time_limit_ms: Option<u64>,
    },
    /// Endpoint analysis of a rainbow path against a claimed minimum
    /// color degree.
    Analyze {
        #[arg(long)]
        input: PathBuf,
        /// Comma-separated vertex ids, e.g. "0,3,2,4".
        #[arg(long)]
        path: String,
        #[arg(long)]
        k: usize,
    },
    /// Instance generators.
    Gen {
        #[command(subcommand)]
        family: GenCommand,
    },
    /// Run a verification suite and write its report.
    Verify {
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(core::SUITES))]
        suite: String,
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        report: PathBuf,
        #[arg(long)]
        max_nodes: Option<u64>,
        #[arg(long)]
        time_limit_ms: Option<u64>,
        /// Worker threads for the trial pool (default: all cores).
        #[arg(long)]
        threads: Option<usize>,
    },
}

#[derive(Subcommand)]
enum GenCommand {
    /// Extremal hypercube family G_k on 2^k vertices.
    Gk {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Random Gallai-colored complete graph.
    Gallai {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Rainbow-triangle-free graph with minimum color degree >= k.
    KgoodTf {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Complete graph with i.i.d. uniform colors.
    Uniform {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        colors: u32,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn main() {
    match run() {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(2);
        }
    }
}

fn load_graph(path: &PathBuf) -> Result<core::EdgeColoredGraph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    core::read_graph(&text).map_err(|e| anyhow!("{}: {e}", path.display()))
}

fn check_vertex(g: &core::EdgeColoredGraph, v: usize) -> Result<()> {
    if v >= g.vertex_count() {
        bail!("vertex {v} out of range (n = {})", g.vertex_count());
    }
    Ok(())
}

fn budget_from(max_nodes: Option<u64>, time_limit_ms: Option<u64>) -> core::SearchBudget {
    core::SearchBudget { max_nodes, time_limit: time_limit_ms.map(Duration::from_millis) }
}

fn emit<T: Serialize>(value: &T) -> Result<()> {
    println!("{}", serde_json::to_string(value)?);
    Ok(())
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct PathOutput<'a> {
    path: &'a [usize],
    colors: &'a [core::Color],
    length: usize,
}

fn run() -> Result<i32> {
    let cli = Cli::parse();
    match cli.command {
        Command::CheckGallai { input } => {
            let g = load_graph(&input)?;

            #[derive(Serialize)]
            #[serde(rename_all = "camelCase")]
            struct Out {
                n: usize,
                m: usize,
                complete: bool,
                rainbow_triangle: Option<(usize, usize, usize)>,
                gallai_complete: bool,
            }
            emit(&Out {
                n: g.vertex_count(),
                m: g.edge_count(),
                complete: g.is_complete(),
                rainbow_triangle: g.find_rainbow_triangle(),
                gallai_complete: g.is_gallai_complete(),
            })?;
            Ok(0)
        }

        Command::ColorDegree { input, vertex } => {
            let g = load_graph(&input)?;
            match vertex {
                Some(v) => {
                    check_vertex(&g, v)?;

                    #[derive(Serialize)]
                    #[serde(rename_all = "camelCase")]
                    struct Out {
                        vertex: usize,
                        color_degree: usize,
                        color_neighborhood: Vec<core::Color>,
                    }
                    emit(&Out {
                        vertex: v,
                        color_degree: g.color_degree(v),
                        color_neighborhood: g.color_neighborhood(v).into_iter().collect(),
                    })?;
                }
                None => {
                    #[derive(Serialize)]
                    #[serde(rename_all = "camelCase")]
                    struct Out {
                        n: usize,
                        color_degrees: Vec<usize>,
                        min: usize,
                        max: usize,
                    }
                    let degrees: Vec<usize> =
                        (0..g.vertex_count()).map(|v| g.color_degree(v)).collect();
                    emit(&Out {
                        n: g.vertex_count(),
                        min: degrees.iter().copied().min().unwrap_or(0),
                        max: degrees.iter().copied().max().unwrap_or(0),
                        color_degrees: degrees,
                    })?;
                }
            }
            Ok(0)
        }

        Command::BuildPath { input, vertex, trace, skip_precheck } => {
            let g = load_graph(&input)?;
            check_vertex(&g, vertex)?;
            let result = if skip_precheck {
                core::build_rainbow_u_path_unchecked(&g, vertex, trace)
            } else {
                core::build_rainbow_u_path(&g, vertex, trace)
            };
            let (path, steps) = result.map_err(|e| anyhow!("build-path: {e}"))?;
            if let Some(t) = steps {
                for step in &t.steps {
                    emit(step)?;
                }
            }

            #[derive(Serialize)]
            #[serde(rename_all = "camelCase")]
            struct Out<'a> {
                start: usize,
                path: &'a [usize],
                colors: &'a [core::Color],
                length: usize,
                color_degree: usize,
            }
            emit(&Out {
                start: vertex,
                path: path.vertices(),
                colors: path.colors(),
                length: path.len(),
                color_degree: g.color_degree(vertex),
            })?;
            Ok(0)
        }

        Command::LongestPath { input, from, max_nodes, time_limit_ms } => {
            let g = load_graph(&input)?;
            if g.vertex_count() == 0 {
                bail!("graph has no vertices");
            }
            if let Some(v) = from {
                check_vertex(&g, v)?;
            }
            let out = core::longest_rainbow_path(&g, from, &budget_from(max_nodes, time_limit_ms));

            #[derive(Serialize)]
            #[serde(rename_all = "camelCase")]
            struct Out<'a> {
                #[serde(flatten)]
                path: PathOutput<'a>,
                exact: bool,
                nodes: u64,
            }
            emit(&Out {
                path: PathOutput {
                    path: out.path.vertices(),
                    colors: out.path.colors(),
                    length: out.path.len(),
                },
                exact: out.exact,
                nodes: out.nodes,
            })?;
            Ok(0)
        }

        Command::Analyze { input, path, k } => {
            let g = load_graph(&input)?;
            let vertices: Vec<usize> = path
                .split(',')
                .map(|t| t.trim().parse().map_err(|_| anyhow!("bad vertex id `{t}` in --path")))
                .collect::<Result<_>>()?;
            let p = core::VertexPath::new(&g, vertices).map_err(|e| anyhow!("--path: {e}"))?;
            let analysis =
                core::analyze_endpoints(&g, &p, k).map_err(|e| anyhow!("analyze: {e}"))?;
            emit(&analysis)?;
            Ok(0)
        }

        Command::Gen { family } => {
            let (graph, output) = match family {
                GenCommand::Gk { k, output } => (core::gen_gk(k), output),
                GenCommand::Gallai { n, seed, output } => (core::gen_gallai_substitution(n, seed), output),
                GenCommand::KgoodTf { n, k, seed, output } => {
                    (core::gen_kgood_triangle_free(n, k, seed), output)
                }
                GenCommand::Uniform { n, colors, seed, output } => {
                    (core::gen_uniform_coloring(n, colors, seed), output)
                }
            };
            let graph = graph.map_err(|e| anyhow!("gen: {e}"))?;
            let as_json = output
                .as_ref()
                .is_some_and(|p| p.extension().is_some_and(|e| e == "json"));
            let text = if as_json {
                let mut t = core::write_json(&graph);
                t.push('\n');
                t
            } else {
                core::write_edge_list(&graph)
            };
            match output {
                Some(path) => fs::write(&path, text)
                    .with_context(|| format!("writing {}", path.display()))?,
                None => print!("{text}"),
            }
            Ok(0)
        }

        Command::Verify { suite, trials, seed, report, max_nodes, time_limit_ms, threads } => {
            if trials == 0 {
                bail!("--trials must be at least 1");
            }
            let budget = budget_from(max_nodes.or(Some(5_000_000)), time_limit_ms);
            let dump_dir = report.parent().map(PathBuf::from);
            let started = Instant::now();
            let run = || {
                core::run_suite_with_dumps(&suite, trials, seed, &budget, dump_dir.as_deref())
            };
            let outcome = match threads {
                Some(w) => rayon::ThreadPoolBuilder::new()
                    .num_threads(w)
                    .build()
                    .context("building worker pool")?
                    .install(run),
                None => run(),
            };
            let result = outcome.map_err(|e| anyhow!("verify: {e}"))?;
            fs::write(&report, result.to_json())
                .with_context(|| format!("writing {}", report.display()))?;
            eprintln!(
                "suite={} trials={} failures={} inconclusive={} elapsed={:.2}s report={}",
                suite,
                result.aggregate.trials,
                result.aggregate.failures,
                result.aggregate.inconclusive,
                started.elapsed().as_secs_f64(),
                report.display()
            );
            emit(&result.aggregate)?;
            Ok(if result.has_failures() { 1 } else { 0 })
        }
    }
}
