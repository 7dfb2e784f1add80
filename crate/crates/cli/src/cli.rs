//! Argument parsing and dispatch, shared by the binary and the golden runner.

use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::acceptance::{self, DEFAULT_SEED};
use crate::commands::{self, DEFAULT_PRIME_BOUND};
use crate::report::{Check, Report};

#[derive(Debug, Parser)]
#[command(name = "euler-trace", version, about = "Exact trace and Euler characteristic reports")]
pub struct Cli {
    /// Machine-readable output (the default).
    #[arg(long, global = true, conflicts_with = "table")]
    pub json: bool,
    /// Aligned text tables.
    #[arg(long, global = true)]
    pub table: bool,
    /// Seed for the randomized sweeps.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classes, centralizers and power-conjugacy diagnostics of a finite group.
    Group {
        path: PathBuf,
        #[arg(long, default_value_t = DEFAULT_PRIME_BOUND)]
        prime_bound: u64,
    },
    /// The trace of an idempotent matrix over a group ring.
    Hs {
        path: PathBuf,
        /// Comma-separated subgroup elements (indices or labels).
        #[arg(long)]
        restrict: Option<String>,
        /// A second matrix to tensor with.
        #[arg(long)]
        tensor: Option<PathBuf>,
        /// Skip the idempotency requirement.
        #[arg(long)]
        raw: bool,
    },
    /// Fusion classes and Euler characteristics of a graph of finite groups.
    Graph {
        path: PathBuf,
        /// Compare both sides on every fusion class.
        #[arg(long)]
        verify: bool,
    },
    /// Evaluate a group expression, optionally at one mark.
    Expr {
        path: PathBuf,
        #[arg(long)]
        mark: Option<String>,
    },
    /// Build the group realizing a rational value at an involution.
    ConstructRho {
        #[arg(allow_hyphen_values = true)]
        rho: String,
    },
    /// Run the acceptance criteria and the golden reports.
    Selftest {
        /// Only criteria and goldens whose name contains this.
        #[arg(long)]
        filter: Option<String>,
        #[arg(long)]
        golden_dir: Option<PathBuf>,
        #[arg(long)]
        data_dir: Option<PathBuf>,
        /// Rewrite the golden files instead of comparing.
        #[arg(long)]
        bless: bool,
    },
}

pub fn default_data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data")
}

pub fn execute(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::Group { path, prime_bound } => commands::group_info(path, *prime_bound),
        Command::Hs {
            path,
            restrict,
            tensor,
            raw,
        } => commands::hs(path, restrict.as_deref(), tensor.as_deref(), *raw),
        Command::Graph { path, verify } => commands::graph(path, *verify),
        Command::Expr { path, mark } => commands::expr(path, mark.as_deref()),
        Command::ConstructRho { rho } => commands::construct_rho(rho),
        Command::Selftest {
            filter,
            golden_dir,
            data_dir,
            bless,
        } => {
            let data = data_dir.clone().unwrap_or_else(default_data_dir);
            let golden = golden_dir.clone().unwrap_or_else(|| data.join("golden"));
            selftest(filter.as_deref(), cli.seed, &data, &golden, *bless)
        }
    }
}

pub fn render(cli: &Cli, report: &Report) -> String {
    if cli.table {
        report.to_table()
    } else {
        report.to_json()
    }
}

/// One entry of `golden/manifest.json`. `{data}` in an argument expands to
/// the data directory.
struct Golden {
    name: String,
    args: Vec<String>,
    file: String,
}

fn read_manifest(golden: &Path) -> Result<Vec<Golden>> {
    let path = golden.join("manifest.json");
    let text =
        std::fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
    let v: Value = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    let entries = v["goldens"].as_array().context("manifest needs a \"goldens\" array")?;
    entries
        .iter()
        .map(|e| {
            let field = |k: &str| {
                e[k].as_str()
                    .map(str::to_string)
                    .with_context(|| format!("golden entry missing \"{k}\""))
            };
            let args = e["args"]
                .as_array()
                .context("golden entry missing \"args\"")?
                .iter()
                .map(|a| a.as_str().map(str::to_string).context("arguments are strings"))
                .collect::<Result<Vec<_>>>()?;
            Ok(Golden {
                name: field("name")?,
                args,
                file: field("file")?,
            })
        })
        .collect()
}

/// Renders the report a golden entry describes.
fn golden_output(entry: &Golden, data: &Path) -> Result<String> {
    let data = data.to_string_lossy();
    let args = std::iter::once("euler-trace".to_string())
        .chain(entry.args.iter().map(|a| a.replace("{data}", &data)));
    let cli = Cli::try_parse_from(args)?;
    let report = execute(&cli)?;
    Ok(render(&cli, &report))
}

pub fn selftest(
    filter: Option<&str>,
    seed: u64,
    data: &Path,
    golden: &Path,
    bless: bool,
) -> Result<Report> {
    let mut r = Report::new("selftest");
    r.result("seed", json!(seed));
    let mut summary = Vec::new();
    if !bless {
        for outcome in acceptance::run(filter, seed) {
            summary.push(json!({
                "criterion": outcome.id,
                "name": outcome.name,
                "status": if outcome.passed() { "pass" } else { "fail" },
                "checks": outcome.checks.len(),
            }));
            for mut c in outcome.checks {
                c.name = format!("[{}] {}", outcome.name, c.name);
                r.check(c);
            }
        }
        r.result("criteria", Value::Array(summary));
    }
    let mut goldens = Vec::new();
    for entry in read_manifest(golden)? {
        if filter.is_some_and(|f| !entry.name.contains(f)) {
            continue;
        }
        let path = golden.join(&entry.file);
        // error messages quote paths; keep them independent of the checkout
        let produced = golden_output(&entry, data)
            .unwrap_or_else(|e| format!("error: {e:#}\n"))
            .replace(data.to_string_lossy().as_ref(), "{data}");
        if bless {
            std::fs::write(&path, &produced)
                .with_context(|| format!("writing {}", path.display()))?;
            goldens.push(json!(entry.name));
            continue;
        }
        let expected = std::fs::read_to_string(&path).unwrap_or_default();
        let equal = produced == expected;
        r.check(Check::new(
            format!("[golden] {}", entry.name),
            format!("{} bytes produced", produced.len()),
            if equal {
                format!("{} bytes in {}", expected.len(), entry.file)
            } else {
                format!("{} bytes in {} (content differs)", expected.len(), entry.file)
            },
            equal,
            "byte-identical report",
        ));
        goldens.push(json!(entry.name));
    }
    r.result("goldens", Value::Array(goldens));
    Ok(r)
}
