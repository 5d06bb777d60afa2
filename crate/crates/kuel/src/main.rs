use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use kuel::formats::{parse_field_flag, AlgebraJson, FieldJson};
use kuel::input::{resolve, Subject};
use kuel::{acceptance, exit, exit_code, render, sweep};
use kuelshammer_core::families::list_families;
use kuelshammer_core::report::{analyze, compare};
use serde::Serialize;

/// Külshammer ideals, tower dimensions and related invariants of
/// finite-dimensional algebras over finite fields.
///
/// Inputs are registry names such as `Ln[n=4,j=1]` or `SD2B1[k=2,t=3,c=1]`,
/// JSON files, or inline JSON objects.
#[derive(Parser)]
#[command(name = "kuel", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build an algebra and print its structure constants.
    Build {
        /// Input; omit with --list-families.
        input: Option<String>,
        #[command(flatten)]
        common: Common,
        /// List the registry families and their parameter conditions.
        #[arg(long)]
        list_families: bool,
    },
    /// Compute the invariant report of one algebra.
    Report {
        input: String,
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        depth: Depth,
    },
    /// Compare two algebras invariant by invariant.
    Compare {
        left: String,
        right: String,
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        depth: Depth,
    },
    /// Run reports over a parameter grid of a registry family.
    Sweep {
        family: String,
        /// Axis `name=lo..hi` or `name=v1,v2,...`; repeat for more axes.
        #[arg(long = "grid", value_name = "AXIS")]
        grid: Vec<String>,
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        depth: Depth,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Run the acceptance suite.
    Selftest {
        /// Comma-separated criterion keys (substring match) or numbers.
        #[arg(long)]
        filter: Option<String>,
        /// Worker threads; 0 picks the number of cores.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Seed for the random samples of the property checks.
        #[arg(long, default_value_t = acceptance::DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Args)]
struct Common {
    /// Field, e.g. `p=2`, `p=2,e=2` or `p=2,e=2,mod=1,1,1`.
    #[arg(long)]
    field: Option<String>,
    /// Length bound for quiver documents (overrides the document's).
    #[arg(long)]
    bound: Option<usize>,
    #[arg(long, value_enum, default_value_t = Out::Json)]
    out: Out,
}

#[derive(Args)]
struct Depth {
    /// Tower depth; default runs to stabilization.
    #[arg(long)]
    depth: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Out {
    Json,
    Table,
}

impl Common {
    fn field(&self) -> Result<Option<FieldJson>> {
        self.field.as_deref().map(parse_field_flag).transpose()
    }

    fn resolve(&self, input: &str) -> Result<Subject> {
        resolve(input, self.field()?.as_ref(), self.bound)
    }
}

fn emit<T: Serialize>(out: Out, value: &T, table: impl FnOnce() -> String) -> Result<()> {
    match out {
        Out::Json => println!("{}", serde_json::to_string_pretty(value)?),
        Out::Table => print!("{}", table()),
    }
    Ok(())
}

#[derive(Serialize)]
struct FamilyListing {
    name: &'static str,
    params: Vec<&'static str>,
    conditions: &'static str,
    relations: &'static str,
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Build { input, common, list_families: list } => {
            if list {
                let fams: Vec<FamilyListing> = list_families()
                    .iter()
                    .map(|f| FamilyListing {
                        name: f.name,
                        params: f.params.iter().map(|p| p.name).collect(),
                        conditions: f.conditions,
                        relations: f.relations,
                    })
                    .collect();
                emit(common.out, &fams, || {
                    fams.iter()
                        .map(|f| format!("{:<8} [{}]  {}\n", f.name, f.params.join(","), f.conditions))
                        .collect()
                })?;
                return Ok(exit::OK);
            }
            let Some(input) = input else { bail!(UsageError("build needs an input or --list-families")) };
            let s = common.resolve(&input)?;
            emit(common.out, &AlgebraJson::from_algebra(&s.algebra), || render::algebra(&s.name, &s.algebra))?;
        }
        Command::Report { input, common, depth } => {
            let s = common.resolve(&input)?;
            let a = analyze(&s.name, &s.algebra, s.form.as_ref(), depth.depth)?;
            emit(common.out, &a.report, || render::report(&a.report))?;
        }
        Command::Compare { left, right, common, depth } => {
            let (x, y) = (common.resolve(&left)?, common.resolve(&right)?);
            x.algebra.field().ensure_same(y.algebra.field())?;
            let ax = analyze(&x.name, &x.algebra, x.form.as_ref(), depth.depth)?;
            let ay = analyze(&y.name, &y.algebra, y.form.as_ref(), depth.depth)?;
            let c = compare(&ax, &ay)?;
            emit(common.out, &c, || render::comparison(&c))?;
        }
        Command::Sweep { family, grid, common, depth, jobs } => {
            let Some(field) = common.field()? else { bail!(UsageError("sweep needs --field")) };
            let axes = grid.iter().map(|g| sweep::parse_axis(g)).collect::<Result<Vec<_>>>()?;
            let f = field.field()?;
            let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build()?;
            let cells = pool.install(|| sweep::sweep(&family, &axes, &f, depth.depth))?;
            emit(common.out, &cells, || render::sweep(&cells))?;
        }
        Command::Selftest { filter, jobs, seed } => {
            let results = acceptance::run(filter.as_deref(), jobs, seed)?;
            if results.is_empty() {
                bail!(UsageError("no criterion matches the filter"));
            }
            for r in &results {
                println!("{r}");
            }
            let failed = results.iter().filter(|r| !r.passed).count();
            println!("{} passed, {failed} failed", results.len() - failed);
            if failed > 0 {
                return Ok(exit::VALIDATION);
            }
        }
    }
    Ok(exit::OK)
}

#[derive(Debug)]
struct UsageError(&'static str);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.0)
    }
}

impl std::error::Error for UsageError {}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { exit::USAGE as u8 } else { exit::OK as u8 });
        }
    };
    let code = match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<UsageError>().is_some() {
                exit::USAGE
            } else {
                exit_code(&e)
            }
        }
    };
    ExitCode::from(code as u8)
}
