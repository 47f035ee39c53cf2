use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use bbrecomb::search::OutputFormat;
use bbrecomb::{
    builtin_pool, decode_name, golden_pool, load_pool, parse_rule_listing, rado_report, recombine,
    run, search, verify_catalog, CatalogEntry, Lineage, Machine, Pool, SearchConfig, StateCount,
    DEFAULT_STEP_LIMIT,
};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "bbrecomb", version, about = "Busy Beaver simulation and rule-table recombination")]
struct Cli {
    /// Number of machine states.
    #[arg(long, global = true, default_value_t = 5)]
    states: u32,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Simulate a machine given by name or catalog id.
    Run {
        machine: String,
        #[arg(long, default_value_t = DEFAULT_STEP_LIMIT)]
        step_limit: u64,
        /// Also print the counts with the final halting transition included.
        #[arg(long)]
        rado: bool,
    },
    /// Print the rule listing of a machine.
    Decode { machine: String },
    /// Read a rule listing and print the canonical name.
    Encode { rules_file: PathBuf },
    /// Recombine catalog machines at the given cuts.
    Recombine {
        /// Comma-separated catalog ids, first segment first.
        #[arg(long, value_delimiter = ',', required = true)]
        sources: Vec<String>,
        #[arg(long, value_delimiter = ',')]
        cuts: Vec<usize>,
        /// Pool file to resolve ids from, in addition to the built-in catalog.
        #[arg(long)]
        pool: Option<PathBuf>,
        /// Simulate the result with this step limit.
        #[arg(long)]
        step_limit: Option<u64>,
    },
    /// Enumerate every k-way recombination of a pool and simulate the results.
    Search {
        /// Pool file, or `builtin` for the seed catalog.
        #[arg(long, default_value = "builtin")]
        pool: String,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value_t = DEFAULT_STEP_LIMIT)]
        step_limit: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        filter_ones: Option<u64>,
        #[arg(long)]
        filter_steps: Option<u64>,
        /// Simulate every enumerated spec instead of each distinct machine once.
        #[arg(long)]
        no_dedup: bool,
        #[arg(long, value_enum, default_value_t = Format::Records)]
        format: Format,
    },
    /// List the catalog.
    Catalog {
        /// List the recombined machines instead of the seeds.
        #[arg(long)]
        golden: bool,
        /// Write the listing as a pool file.
        #[arg(long)]
        export: Option<PathBuf>,
    },
    /// Simulate catalog entries and compare against their recorded counts.
    Verify {
        #[arg(long, default_value_t = DEFAULT_STEP_LIMIT)]
        cap: u64,
        /// Verify a pool file instead of the built-in entries.
        #[arg(long)]
        pool: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Records,
    Csv,
}

impl From<Format> for OutputFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Records => OutputFormat::Records,
            Format::Csv => OutputFormat::Csv,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}

fn builtin_entries(states: StateCount) -> Result<Vec<CatalogEntry>> {
    if states != StateCount::BB5 {
        bail!("the built-in catalog holds 5-state machines; pass a pool file for --states {states}");
    }
    let mut entries = builtin_pool().entries().to_vec();
    entries.extend(golden_pool().entries().iter().cloned());
    Ok(entries)
}

/// Looks `text` up as a catalog id first, then parses it as a name.
fn resolve_machine(text: &str, states: StateCount) -> Result<Machine> {
    if states == StateCount::BB5 {
        if let Some(entry) = builtin_entries(states)?.into_iter().find(|e| e.id == text) {
            return Ok(entry.machine);
        }
    }
    decode_name(text, states).with_context(|| format!("cannot read machine {text:?}"))
}

fn load(path: &Path, states: StateCount) -> Result<Pool> {
    load_pool(path, states).with_context(|| format!("loading pool {}", path.display()))
}

fn execute(cli: Cli) -> Result<ExitCode> {
    let states = StateCount::new(cli.states)
        .with_context(|| format!("--states must be in 1..={}", StateCount::MAX))?;

    match cli.command {
        Command::Run {
            machine,
            step_limit,
            rado,
        } => {
            let m = resolve_machine(&machine, states)?;
            let outcome = run(&m, step_limit);
            println!("name:   {m}");
            println!("status: {}", outcome.status);
            println!("steps:  {}", outcome.steps);
            println!("ones:   {}", outcome.ones);
            println!("extent: {}", outcome.extent);
            if rado {
                let counts = rado_report(&outcome)?;
                println!("rado steps: {}", counts.steps);
                println!("rado ones:  {}", counts.ones);
            }
        }
        Command::Decode { machine } => {
            let m = resolve_machine(&machine, states)?;
            print!("{}", m.rule_listing());
        }
        Command::Encode { rules_file } => {
            let text = std::fs::read_to_string(&rules_file)
                .with_context(|| format!("reading {}", rules_file.display()))?;
            let m = parse_rule_listing(&text, states)
                .with_context(|| format!("in {}", rules_file.display()))?;
            println!("{m}");
        }
        Command::Recombine {
            sources,
            cuts,
            pool,
            step_limit,
        } => {
            let mut entries = if states == StateCount::BB5 {
                builtin_entries(states)?
            } else {
                Vec::new()
            };
            if let Some(path) = pool {
                entries.extend(load(&path, states)?.entries().iter().cloned());
            }
            let registry = Pool::new(entries)?;
            let picked = sources
                .iter()
                .map(|id| {
                    registry
                        .get(id)
                        .map(|e| &e.machine)
                        .with_context(|| format!("unknown source id {id:?}"))
                })
                .collect::<Result<Vec<_>>>()?;
            let m = recombine(&picked, &cuts)?;
            let lineage = Lineage::node(cuts, sources.iter().map(|s| Lineage::leaf(s.as_str())).collect());
            println!("name:    {m}");
            println!("lineage: {lineage}");
            if let Some(limit) = step_limit {
                let outcome = run(&m, limit);
                println!("status:  {}", outcome.status);
                println!("steps:   {}", outcome.steps);
                println!("ones:    {}", outcome.ones);
            }
        }
        Command::Search {
            pool,
            k,
            step_limit,
            jobs,
            out,
            filter_ones,
            filter_steps,
            no_dedup,
            format,
        } => {
            let pool = if pool == "builtin" {
                if states != StateCount::BB5 {
                    bail!("the built-in pool holds 5-state machines");
                }
                builtin_pool()
            } else {
                load(Path::new(&pool), states)?
            };
            let config = SearchConfig {
                arity: k,
                step_limit,
                jobs,
                dedup: !no_dedup,
                min_ones: filter_ones,
                min_steps: filter_steps,
            };
            let report = search(&pool, &config)?;
            report.write_to(&out, format.into())?;
            print!("{}", report.summary);
            println!("wrote {} records to {}", report.records.len(), out.display());
        }
        Command::Catalog { golden, export } => {
            if states != StateCount::BB5 {
                bail!("the built-in catalog holds 5-state machines");
            }
            let pool = if golden { golden_pool() } else { builtin_pool() };
            let text = pool.to_pool_file();
            match export {
                Some(path) => {
                    std::fs::write(&path, &text).with_context(|| format!("writing {}", path.display()))?;
                    println!("wrote {} entries to {}", pool.len(), path.display());
                }
                None => print!("{text}"),
            }
        }
        Command::Verify { cap, pool, jobs } => {
            let entries = match pool {
                Some(path) => load(&path, states)?.entries().to_vec(),
                None => builtin_entries(states)?,
            };
            let report = verify_catalog(&entries, cap, jobs.max(1));
            println!("{report}");
            if !report.all_ok() {
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
