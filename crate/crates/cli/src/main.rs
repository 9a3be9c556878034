use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use gtrs::verify::{run_checks, Check, OracleMode};
use gtrs::{Fe, Field, GtrsSpec};
use serde_json::json;

mod catalog;
mod recipe;
mod scan;

use recipe::{Recipe, RecipeArgs};
use scan::{ScanJob, Sweep};

#[derive(Parser)]
#[command(
    name = "gtrs",
    version,
    about = "Construct and verify twisted Reed-Solomon codes"
)]
struct Cli {
    /// Field as p^m, optionally with modulus digits: 7^2:2,0,1
    #[arg(long, global = true)]
    field: Option<String>,
    /// Seed for sampled sweeps.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Oracles deciding each verdict: fast, brute or both.
    #[arg(long, global = true)]
    oracle: Option<String>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a code from a recipe and print its spec document.
    Construct {
        #[arg(value_enum)]
        recipe: Recipe,
        #[command(flatten)]
        args: RecipeArgs,
    },
    /// Verify a spec document (path or "-" for stdin).
    Verify {
        spec: PathBuf,
        /// Comma-separated subset of mds, grs, so, lcd.
        #[arg(long, default_value = "mds,grs,so,lcd")]
        checks: String,
    },
    /// Sweep one recipe parameter and print a CSV row per value.
    Scan {
        #[arg(value_enum)]
        recipe: Recipe,
        #[command(flatten)]
        args: RecipeArgs,
        #[arg(long, value_enum, default_value_t = Sweep::Eta)]
        sweep: Sweep,
        /// Sweep values: integers, ranges a..b, "nonzero" or "all".
        #[arg(long, default_value = "")]
        values: String,
        /// Keep a seeded random sample of this many values.
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value = "mds,grs,so,lcd")]
        checks: String,
        /// Write the CSV here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Encode a message with the code of a spec document.
    Encode {
        spec: PathBuf,
        /// k comma-separated elements.
        #[arg(long, value_delimiter = ',')]
        message: Vec<u64>,
    },
    /// Store and query verification reports.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Describe a field, and optionally one of its elements.
    FieldInfo {
        #[arg(long)]
        element: Option<u64>,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// Append reports (files, or stdin when none are given).
    Append {
        #[arg(long)]
        store: PathBuf,
        reports: Vec<PathBuf>,
    },
    /// Print stored reports matching every given filter.
    Query {
        #[arg(long)]
        store: PathBuf,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        mds: Option<bool>,
        #[arg(long)]
        grs: Option<bool>,
        #[arg(long)]
        so: Option<bool>,
        #[arg(long)]
        lcd: Option<bool>,
    },
}

fn read_input(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn read_spec(path: &Path) -> Result<GtrsSpec> {
    let text = read_input(path)?;
    GtrsSpec::from_json(&text).with_context(|| format!("parsing spec {}", path.display()))
}

fn parse_checks(s: &str) -> Result<Vec<Check>> {
    let mut checks: Vec<Check> = s
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(str::parse)
        .collect::<gtrs::Result<_>>()?;
    checks.sort();
    checks.dedup();
    Ok(checks)
}

fn field_arg(cli: &Cli) -> Result<Option<Field>> {
    cli.field
        .as_deref()
        .map(Field::parse)
        .transpose()
        .context("parsing --field")
}

fn oracle_arg(cli: &Cli, default: OracleMode) -> Result<OracleMode> {
    Ok(match cli.oracle.as_deref() {
        Some(s) => s.parse()?,
        None => default,
    })
}

fn field_info(field: &Field, element: Option<u64>) -> Result<serde_json::Value> {
    let mut info = json!({
        "field": field.spec_string(),
        "p": field.characteristic(),
        "m": field.degree(),
        "q": field.order(),
        "modulus": field.modulus(),
        "theta": field.theta().value(),
        "primitive_element": field.primitive_element().value(),
        "arithmetic": if field.has_tables() { "tables" } else { "polynomial" },
    });
    if let Some(x) = element {
        let a = field.elem(x)?;
        let nonzero = !a.is_zero();
        info["element"] = json!({
            "value": x,
            "digits": field.digits(a),
            "order": nonzero.then(|| field.mult_order(a)).transpose()?,
            "inverse": nonzero.then(|| field.inv(a).map(Fe::value)).transpose()?,
            "square": field.is_square(a),
            "sqrt": field.sqrt(a).map(Fe::value),
        });
    }
    Ok(info)
}

fn run(cli: &Cli) -> Result<ExitCode> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .context("configuring the thread pool")?;
    }
    let field = field_arg(cli)?;
    let stdout = io::stdout();
    match &cli.command {
        Command::Construct { recipe, args } => {
            let spec = args.build(*recipe, field.as_ref())?;
            writeln!(stdout.lock(), "{}", spec.to_json())?;
        }
        Command::Verify { spec, checks } => {
            let spec = read_spec(spec)?;
            let report = run_checks(
                &spec,
                &parse_checks(checks)?,
                oracle_arg(cli, OracleMode::Both)?,
            )?;
            writeln!(stdout.lock(), "{}", report.to_json())?;
            if !report.all_true() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Scan {
            recipe,
            args,
            sweep,
            values,
            sample,
            checks,
            out,
        } => {
            let mut values = scan::sweep_values(values, field.as_ref(), *sweep)?;
            if let Some(count) = sample {
                values = scan::sample_values(values, *count, cli.seed);
            }
            let job = ScanJob {
                recipe: *recipe,
                base: args,
                field: field.as_ref(),
                sweep: *sweep,
                values,
                checks: parse_checks(checks)?,
                oracle: oracle_arg(cli, OracleMode::Fast)?,
            };
            let summary = match out {
                Some(path) => scan::run_scan(
                    &job,
                    fs::File::create(path)
                        .with_context(|| format!("creating {}", path.display()))?,
                )?,
                None => scan::run_scan(&job, stdout.lock())?,
            };
            eprintln!(
                "rows={} built={} mds={} grs={} mds_and_grs={} so={} lcd={}",
                summary.rows,
                summary.built,
                summary.mds,
                summary.grs,
                summary.mds_grs,
                summary.so,
                summary.lcd
            );
        }
        Command::Encode { spec, message } => {
            let spec = read_spec(spec)?;
            let f = spec.field();
            if message.len() != spec.k() {
                bail!("message has {} symbols, k = {}", message.len(), spec.k());
            }
            let msg: Vec<Fe> = message
                .iter()
                .map(|&x| f.elem(x))
                .collect::<gtrs::Result<_>>()?;
            let word = spec.generator_matrix()?.encode(&msg)?;
            let text: Vec<String> = word.iter().map(|x| x.value().to_string()).collect();
            writeln!(stdout.lock(), "{}", text.join(","))?;
        }
        Command::Catalog { action } => match action {
            CatalogAction::Append { store, reports } => {
                let mut all = Vec::new();
                if reports.is_empty() {
                    all.extend(catalog::parse_reports(&read_input(Path::new("-"))?)?);
                }
                for path in reports {
                    let parsed = catalog::parse_reports(&read_input(path)?)
                        .with_context(|| format!("reading reports from {}", path.display()))?;
                    all.extend(parsed);
                }
                catalog::append(store, &all)?;
                eprintln!("appended {} report(s)", all.len());
            }
            CatalogAction::Query {
                store,
                n,
                k,
                mds,
                grs,
                so,
                lcd,
            } => {
                let filter = catalog::Filter {
                    field,
                    n: *n,
                    k: *k,
                    verdicts: [
                        (Check::Mds, *mds),
                        (Check::Grs, *grs),
                        (Check::SelfOrthogonal, *so),
                        (Check::Lcd, *lcd),
                    ]
                    .into_iter()
                    .filter_map(|(c, want)| want.map(|w| (c, w)))
                    .collect(),
                };
                let mut lock = stdout.lock();
                for report in catalog::load(store)?.iter().filter(|r| filter.matches(r)) {
                    writeln!(lock, "{}", report.to_json())?;
                }
            }
        },
        Command::FieldInfo { element } => {
            let Some(f) = field else {
                bail!("--field is required");
            };
            let info = field_info(&f, *element)?;
            writeln!(stdout.lock(), "{}", serde_json::to_string_pretty(&info)?)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
