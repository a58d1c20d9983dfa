//! `rainbowconn`: generate colorings, run the detectors and searches on
//! coloring files, and verify the claim registry.
//!
//! Exit codes: 0 success, 1 a negative answer (pattern absent, statement
//! falsified, unexpected claim status), 2 usage or input errors.

use std::fs::File;
use std::io::{self, BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use rainbowconn::bipartite::{classify_k13_free, even_parts, gen_type_b, verify_background_spanning};
use rainbowconn::claims::{registry, run_claims, unexpected, RunOptions, DEFAULT_SAMPLES};
use rainbowconn::connectivity::{best_monochromatic_with, best_two_colored_with, largest_k_connected};
use rainbowconn::gallai::{
    gallai_partition, is_gallai, sample_gallai, sample_gallai_exact, verify_two_colored_2conn,
    verify_two_colored_3conn,
};
use rainbowconn::io::{read_coloring, write_coloring};
use rainbowconn::oracle::micro_crosscheck;
use rainbowconn::paths::{check_path_vector, longest_mono_cycle, longest_mono_path};
use rainbowconn::rainbow::find_rainbow;
use rainbowconn::{
    Check, ColorId, ColorMask, ColoredComplete, ConstructionId, ConstructionSpec, Host, Mode,
    Parallelism,
};

#[derive(Parser)]
#[command(name = "rainbowconn", version, about = "Rainbow patterns and monochromatic connectivity in edge-colored complete graphs")]
struct Cli {
    /// Run everything on one thread.
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write one of the named colorings.
    Gen(GenArgs),
    /// Look for a rainbow copy of a pattern.
    Detect {
        #[arg(long)]
        pattern: String,
        file: PathBuf,
    },
    /// Largest k-connected subgraph using one color, two colors or a mask.
    Kconn {
        #[arg(long)]
        k: usize,
        /// `mono`, `pairs`, or `mask=1,3`.
        #[arg(long, default_value = "mono")]
        colors: String,
        /// Exhaustive search instead of the bounded heuristic.
        #[arg(long)]
        exact: bool,
        file: PathBuf,
    },
    /// Gallai colorings: recognition, partitions, sampling, two-colored subgraphs.
    Gallai {
        #[command(subcommand)]
        command: GallaiCommand,
    },
    /// Colorings of complete bipartite graphs without a rainbow K1,3.
    Bipartite {
        #[command(subcommand)]
        command: BipartiteCommand,
    },
    /// Longest monochromatic path, or a path-length vector check.
    Paths(PathsArgs),
    /// Longest monochromatic cycle.
    Cycles {
        #[arg(long)]
        color: u16,
        file: PathBuf,
    },
    /// Run the claim registry.
    Verify {
        /// Glob over claim ids.
        #[arg(long, default_value = "*")]
        filter: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Instances per sampled claim.
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: u64,
        /// Also write the reports to this file as a JSON array.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Print claim ids and statements instead of running them.
        #[arg(long)]
        list: bool,
    },
    /// Compare the fast algorithms with brute-force oracles on tiny hosts.
    Crosscheck {
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        max_m: u16,
        /// Sample this many colorings per (n, m) instead of enumerating;
        /// hosts too large to enumerate are always sampled.
        #[arg(long)]
        samples: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args)]
struct GenArgs {
    /// R1, R2, F1, F2, F3, intro or counter4t.
    id: ConstructionId,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    /// The `t` of counter4t.
    #[arg(long)]
    tparam: Option<usize>,
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Print the part metadata as JSON.
    #[arg(long)]
    describe: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    #[value(name = "2conn")]
    TwoConn,
    #[value(name = "3conn")]
    ThreeConn,
}

#[derive(Subcommand)]
enum GallaiCommand {
    /// Exit 0 iff there is no rainbow triangle.
    Check { file: PathBuf },
    Partition { file: PathBuf },
    /// Random Gallai coloring of K_n.
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: u16,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Require every color to be used.
        #[arg(long)]
        exact: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Two-colored spanning 2-connected or (n-1)-vertex 3-connected subgraph.
    Verify {
        #[arg(long, value_enum)]
        property: Property,
        file: PathBuf,
    },
}

#[derive(Subcommand)]
enum BipartiteCommand {
    Classify { file: PathBuf },
    /// Random host with a background color and m - 1 blocks.
    GenB {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        m: usize,
        /// Probability that an in-block edge gets the block color.
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// The background color spans a k-connected subgraph.
    VerifyBackground {
        #[arg(long)]
        k: usize,
        file: PathBuf,
    },
}

#[derive(Args)]
#[command(args_conflicts_with_subcommands = true)]
struct PathsArgs {
    #[command(subcommand)]
    command: Option<PathsCommand>,
    #[arg(long)]
    color: Option<u16>,
    file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum PathsCommand {
    /// Some color i has a monochromatic path on a_i vertices.
    PathVector {
        /// Comma-separated lengths, one per color.
        #[arg(long, value_delimiter = ',')]
        a: Vec<usize>,
        file: PathBuf,
    },
}

fn load(path: &Path) -> Result<Host> {
    let f = File::open(path).with_context(|| format!("cannot open {}", path.display()))?;
    read_coloring(BufReader::new(f)).with_context(|| format!("cannot read {}", path.display()))
}

fn load_complete(path: &Path) -> Result<ColoredComplete> {
    match load(path)? {
        Host::Complete(c) => Ok(c),
        Host::Bipartite(_) => bail!("{} holds a bipartite coloring; a complete one is needed", path.display()),
    }
}

fn save(host: &Host, output: Option<&Path>) -> Result<()> {
    match output {
        Some(p) => {
            let f = File::create(p).with_context(|| format!("cannot create {}", p.display()))?;
            write_coloring(host, io::BufWriter::new(f))?;
        }
        None => write_coloring(host, io::stdout().lock())?,
    }
    Ok(())
}

fn print_json(v: &impl serde::Serialize) -> Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, v)?;
    writeln!(out)?;
    Ok(())
}

fn need(v: Option<usize>, flag: &str, id: ConstructionId) -> Result<usize> {
    v.ok_or_else(|| anyhow!("{id} needs --{flag}"))
}

fn spec_from(a: &GenArgs) -> Result<ConstructionSpec> {
    let id = a.id;
    Ok(match id {
        ConstructionId::Intro => ConstructionSpec::Intro {
            n: need(a.n, "n", id)?,
            k: need(a.k, "k", id)?,
        },
        ConstructionId::R1 => ConstructionSpec::R1 {
            n: need(a.n, "n", id)?,
            m: need(a.m, "m", id)?,
        },
        ConstructionId::R2 => ConstructionSpec::R2 {
            n: need(a.n, "n", id)?,
            m: need(a.m, "m", id)?,
        },
        ConstructionId::F1 | ConstructionId::F2 | ConstructionId::F3 => {
            let (s, t, m) = (need(a.s, "s", id)?, need(a.t, "t", id)?, need(a.m, "m", id)?);
            match id {
                ConstructionId::F1 => ConstructionSpec::F1 { s, t, m },
                ConstructionId::F2 => ConstructionSpec::F2 { s, t, m },
                _ => ConstructionSpec::F3 { s, t, m },
            }
        }
        ConstructionId::Counter4t => ConstructionSpec::Counter4t {
            t: need(a.tparam, "tparam", id)?,
            n: need(a.n, "n", id)?,
        },
    })
}

fn parse_colors(s: &str) -> Result<Vec<ColorId>> {
    s.split(',')
        .map(|c| {
            c.trim()
                .parse::<u16>()
                .map(ColorId)
                .map_err(|_| anyhow!("bad color `{c}`"))
        })
        .collect()
}

fn check_exit<W: serde::Serialize>(check: &Check<W>) -> Result<ExitCode> {
    print_json(check)?;
    Ok(if check.holds() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn run(cli: Cli) -> Result<ExitCode> {
    let par = if cli.sequential { Parallelism::Sequential } else { Parallelism::Parallel };
    match cli.command {
        Command::Gen(a) => {
            let c = spec_from(&a)?.build()?;
            if a.describe {
                print_json(&c.meta)?;
            }
            if a.output.is_some() || !a.describe {
                save(&c.host, a.output.as_deref())?;
            }
        }
        Command::Detect { pattern, file } => {
            let host = load(&file)?;
            let p = rainbowconn::parse_pattern(&pattern)?;
            match find_rainbow(&host, &p)? {
                Some(e) => print_json(&json!({ "pattern": p.name(), "embedding": e }))?,
                None => {
                    println!("rainbow-free");
                    return Ok(ExitCode::from(1));
                }
            }
        }
        Command::Kconn { k, colors, exact, file } => {
            let host = load(&file)?;
            let mode = if exact { Mode::Exact } else { Mode::Heuristic };
            let report = match colors.as_str() {
                "mono" => best_monochromatic_with(&host, k, mode, par)?.1,
                "pairs" => best_two_colored_with(&host, k, mode, par)?,
                other => {
                    let list = other
                        .strip_prefix("mask=")
                        .ok_or_else(|| anyhow!("--colors must be mono, pairs or mask=<list>"))?;
                    let mask = ColorMask::new(parse_colors(list)?)?;
                    largest_k_connected(&host, &mask, k, mode)?
                }
            };
            print_json(&report)?;
        }
        Command::Gallai { command } => match command {
            GallaiCommand::Check { file } => {
                let c = load_complete(&file)?;
                let gallai = is_gallai(&c);
                print_json(&json!({ "gallai": gallai }))?;
                if !gallai {
                    return Ok(ExitCode::from(1));
                }
            }
            GallaiCommand::Partition { file } => {
                let c = load_complete(&file)?;
                print_json(&gallai_partition(&c)?)?;
            }
            GallaiCommand::Sample { n, m, seed, exact, output } => {
                let c = if exact { sample_gallai_exact(n, m, seed)? } else { sample_gallai(n, m, seed)? };
                save(&c.into(), output.as_deref())?;
            }
            GallaiCommand::Verify { property, file } => {
                let c = load_complete(&file)?;
                let check = match property {
                    Property::TwoConn => verify_two_colored_2conn(&c)?,
                    Property::ThreeConn => verify_two_colored_3conn(&c)?,
                };
                return check_exit(&check);
            }
        },
        Command::Bipartite { command } => match command {
            BipartiteCommand::Classify { file } => {
                let host = load(&file)?;
                let b = host.as_bipartite().ok_or_else(|| anyhow!("a bipartite coloring is needed"))?;
                print_json(&classify_k13_free(b)?)?;
            }
            BipartiteCommand::GenB { s, t, m, p, seed, output } => {
                if m < 5 {
                    bail!("--m must be at least 5");
                }
                let (h, _) = gen_type_b(&even_parts(s, m - 1), &even_parts(t, m - 1), p, seed)?;
                save(&h.into(), output.as_deref())?;
            }
            BipartiteCommand::VerifyBackground { k, file } => {
                let host = load(&file)?;
                let b = host.as_bipartite().ok_or_else(|| anyhow!("a bipartite coloring is needed"))?;
                return check_exit(&verify_background_spanning(b, k)?);
            }
        },
        Command::Paths(a) => match a.command {
            Some(PathsCommand::PathVector { a, file }) => {
                let c = load_complete(&file)?;
                return check_exit(&check_path_vector(&c, &a)?);
            }
            None => {
                let color = a.color.ok_or_else(|| anyhow!("paths needs --color"))?;
                let file = a.file.ok_or_else(|| anyhow!("paths needs a coloring file"))?;
                print_json(&longest_mono_path(&load(&file)?, ColorId(color))?)?;
            }
        },
        Command::Cycles { color, file } => {
            print_json(&longest_mono_cycle(&load(&file)?, ColorId(color))?)?;
        }
        Command::Verify { filter, seed, samples, json, list } => {
            if list {
                for c in registry() {
                    println!("{:<40} {}", c.id, c.statement);
                }
                return Ok(ExitCode::SUCCESS);
            }
            let reports = run_claims(&filter, &RunOptions { seed, samples, par })?;
            for r in &reports {
                let mark = if r.is_expected() { "" } else { "  UNEXPECTED" };
                println!("{:<40} {:<5} {:>7} ms{mark}", r.claim_id, format!("{:?}", r.status).to_lowercase(), r.millis);
            }
            if let Some(path) = json {
                let f = File::create(&path).with_context(|| format!("cannot create {}", path.display()))?;
                serde_json::to_writer_pretty(io::BufWriter::new(f), &reports)?;
            }
            let bad = unexpected(&reports).len();
            println!("{} claims, {bad} unexpected", reports.len());
            if bad > 0 {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Crosscheck { max_n, max_m, samples, seed } => {
            if !(2..=8).contains(&max_n) || max_m < 1 {
                bail!("--max-n must lie in 2..=8 and --max-m must be positive");
            }
            let mut reports = Vec::new();
            for n in 2..=max_n {
                for m in 1..=max_m {
                    reports.push(micro_crosscheck(n, m, samples, seed, par));
                }
            }
            print_json(&reports)?;
            if reports.iter().any(|r| !r.agrees()) {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn is_broken_pipe(e: &(dyn std::error::Error + 'static)) -> bool {
    e.downcast_ref::<io::Error>().is_some_and(|e| e.kind() == io::ErrorKind::BrokenPipe)
        || e.downcast_ref::<serde_json::Error>().and_then(|e| e.io_error_kind()) == Some(io::ErrorKind::BrokenPipe)
        || matches!(e.downcast_ref::<rainbowconn::Error>(), Some(rainbowconn::Error::Io(io)) if io.kind() == io::ErrorKind::BrokenPipe)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) if e.chain().any(is_broken_pipe) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
