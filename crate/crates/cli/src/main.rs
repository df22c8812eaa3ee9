use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path as FsPath, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use seppath::bench::{parse_corpus, run_bench, to_csv};
use seppath::exact::{exact_min, ExactCaps};
use seppath::generators::{gnp, make_complete, make_hair_comb, make_ladder, make_path_graph, make_star, random_tree};
use seppath::strategies::{StrategyError, StrategyKind, StrategyOptions, DEFAULT_RETRIES};
use seppath::verify::{decode, verify, DecodeError};
use seppath::{Graph, PathSystem};

const DEFAULT_SEED: u64 = 0;

const EXIT_PARSE: u8 = 1;
const EXIT_STRATEGY: u8 = 2;
const EXIT_DECODE: u8 = 3;
const EXIT_NOT_SEPARATING: u8 = 4;

/// Build, check and decode separating path systems.
#[derive(Parser)]
#[command(name = "seppath", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a graph from a named family as an edge list.
    Gen {
        /// path, star, comb, ladder, complete, gnp or tree-random.
        family: String,
        /// Order parameter (number of columns for comb and ladder).
        n: usize,
        /// Edge probability, for gnp.
        p: Option<f64>,
        #[command(flatten)]
        seed: SeedArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a separating path system for a graph file ("-" for stdin).
    Construct {
        graph: PathBuf,
        #[command(flatten)]
        strategy: StrategyArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a path system against a graph and print the report as JSON.
    Verify {
        graph: PathBuf,
        system: PathBuf,
        /// Include per-edge signatures in the report.
        #[arg(long)]
        signatures: bool,
    },
    /// Name the faulty edge from the indices of the failed probe paths.
    Localize {
        graph: PathBuf,
        system: PathBuf,
        /// Failed path indices (0-based); none means every probe passed.
        failed: Vec<usize>,
    },
    /// Compute the minimum size of a separating path system exactly.
    Solve {
        graph: PathBuf,
        #[arg(long, default_value_t = ExactCaps::default().catalog)]
        catalog_cap: usize,
        #[arg(long, default_value_t = ExactCaps::default().nodes)]
        node_cap: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a strategy over a corpus and print CSV.
    ///
    /// Corpus specs look like `path:3..12`, `comb:2..10` or
    /// `gnp:60..120:p=0.5:step=20`; words may also be separated by spaces.
    Bench {
        #[arg(required = true)]
        corpus: Vec<String>,
        #[command(flatten)]
        strategy: StrategyArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct SeedArgs {
    #[arg(long, default_value_t = DEFAULT_SEED, conflicts_with = "entropy")]
    seed: u64,
    /// Draw a fresh seed and report it on stderr.
    #[arg(long)]
    entropy: bool,
}

impl SeedArgs {
    fn resolve(&self) -> u64 {
        if self.entropy {
            let seed = rand::random();
            eprintln!("seed {seed}");
            seed
        } else {
            self.seed
        }
    }
}

#[derive(Args)]
struct StrategyArgs {
    #[arg(long, default_value = "portfolio")]
    strategy: StrategyKind,
    /// Degree or density parameter in (0, 1].
    #[arg(long)]
    c: Option<f64>,
    /// Edge probability for the random strategy.
    #[arg(long)]
    p: Option<f64>,
    #[arg(long, default_value_t = DEFAULT_RETRIES)]
    max_retries: usize,
    #[command(flatten)]
    seed: SeedArgs,
}

impl StrategyArgs {
    fn options(&self) -> StrategyOptions {
        StrategyOptions {
            seed: self.seed.resolve(),
            c: self.c,
            p: self.p,
            max_retries: self.max_retries,
            ..StrategyOptions::default()
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_PARSE } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_PARSE)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Gen { family, n, p, seed, out } => {
            let g = generate(&family, n, p, seed.resolve())?;
            emit(out.as_deref(), &g.to_edge_list())?;
            Ok(0)
        }
        Command::Construct { graph, strategy, out } => {
            let g = read_graph(&graph)?;
            match strategy.strategy.run(&g, &strategy.options()) {
                Ok(o) => {
                    emit(out.as_deref(), &o.system.to_text())?;
                    eprintln!("strategy={} size={} verified={}", o.strategy_name, o.size, o.verified);
                    Ok(if o.verified { 0 } else { EXIT_STRATEGY })
                }
                Err(e) => {
                    eprintln!("{}: {e}", failure_stage(&e));
                    Ok(EXIT_STRATEGY)
                }
            }
        }
        Command::Verify { graph, system, signatures } => {
            let g = read_graph(&graph)?;
            let ps = read_system(&g, &system)?;
            let mut report = verify(&g, &ps)?;
            if !signatures {
                report.signatures.clear();
            }
            println!("{}", serde_json::to_string_pretty(&report)?);
            Ok(if report.separating { 0 } else { EXIT_NOT_SEPARATING })
        }
        Command::Localize { graph, system, failed } => {
            let g = read_graph(&graph)?;
            let ps = read_system(&g, &system)?;
            if let Some(&bad) = failed.iter().find(|&&i| i >= ps.len()) {
                bail!("path index {bad} is out of range for a system of {} paths", ps.len());
            }
            match decode(&g, &ps, &failed) {
                Ok(e) => {
                    let (u, v) = g.edge(e);
                    println!("{u} {v}");
                    Ok(0)
                }
                Err(DecodeError::NotSeparating(a, b)) => {
                    eprintln!("system does not separate edges {a} and {b}");
                    Ok(EXIT_NOT_SEPARATING)
                }
                Err(e) => {
                    eprintln!("{e}");
                    Ok(EXIT_DECODE)
                }
            }
        }
        Command::Solve {
            graph,
            catalog_cap,
            node_cap,
            out,
        } => {
            let g = read_graph(&graph)?;
            let caps = ExactCaps {
                catalog: catalog_cap,
                nodes: node_cap,
            };
            match exact_min(&g, caps) {
                Ok(r) => {
                    emit(out.as_deref(), &(serde_json::to_string_pretty(&r)? + "\n"))?;
                    Ok(0)
                }
                Err(e) => {
                    eprintln!("solver: {e}");
                    Ok(EXIT_STRATEGY)
                }
            }
        }
        Command::Bench { corpus, strategy, out } => {
            let specs = parse_corpus(&corpus.join(":").replace(":,", ",").replace(",:", ","))?;
            let rows = run_bench(&specs, strategy.strategy, &strategy.options())?;
            for r in rows.iter().filter(|r| r.error.is_some()) {
                eprintln!("{}: {}", r.graph, r.error.as_deref().unwrap());
            }
            emit(out.as_deref(), &to_csv(&rows))?;
            Ok(0)
        }
    }
}

fn failure_stage(e: &StrategyError) -> String {
    match e {
        StrategyError::Failed { stage, .. } => format!("strategy failed ({stage})"),
        StrategyError::Precondition(_) => "strategy not applicable (precondition)".into(),
        _ => "strategy failed".into(),
    }
}

fn generate(family: &str, n: usize, p: Option<f64>, seed: u64) -> Result<Graph> {
    let g = match family {
        "path" => make_path_graph(n)?,
        "star" => make_star(n)?,
        "comb" => make_hair_comb(n)?,
        "ladder" => make_ladder(n)?,
        "complete" => make_complete(n)?,
        "gnp" => gnp(n, p.context("gnp needs an edge probability")?, seed)?,
        "tree-random" | "tree" => random_tree(n, seed)?,
        other => bail!("unknown family `{other}`"),
    };
    Ok(g)
}

fn read_text(path: &FsPath) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn read_graph(path: &FsPath) -> Result<Graph> {
    Graph::parse(&read_text(path)?).with_context(|| format!("parsing graph {}", path.display()))
}

fn read_system(g: &Graph, path: &FsPath) -> Result<PathSystem> {
    PathSystem::parse(g, &read_text(path)?).with_context(|| format!("parsing path system {}", path.display()))
}

fn emit(out: Option<&FsPath>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}
