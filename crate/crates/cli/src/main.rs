//! `qramsey` command-line front end.

mod config;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use qramsey::catalog::{Catalog, CatalogError, ObservableSpec, RuleTable, DEFAULT_PARTICLE};
use qramsey::fixtures::{discrepancy_summary, run_all, FIGURES};
use qramsey::graph::{audit, build_graph_from_specs, clique_report, export_dot, parse_claims, verify_r33, GraphError, GraphReport, Verdict};
use qramsey::interference::{decohered_pattern, entangled_pattern, pattern, CorrelationMatrix, InterferenceConfig, InterferenceError};
use qramsey::jacobi::{build_jacobi_hypergraph_from_specs, JacobiError};
use qramsey::oracle::{agreement_check, OracleError};
use serde::Serialize;

use config::AnalysisConfig;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Unclassifiable(CatalogError),
    #[error("{0} claim(s) refuted")]
    RefutedClaims(usize),
}

impl CliError {
    fn io(path: &Path, e: std::io::Error) -> Self {
        CliError::Usage(format!("{}: {e}", path.display()))
    }

    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Unclassifiable(_) => 2,
            CliError::RefutedClaims(_) => 3,
        }
    }
}

impl From<CatalogError> for CliError {
    fn from(e: CatalogError) -> Self {
        match e {
            CatalogError::Unclassifiable(..) => CliError::Unclassifiable(e),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::Catalog(c) => c.into(),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<JacobiError> for CliError {
    fn from(e: JacobiError) -> Self {
        match e {
            JacobiError::Catalog(c) => c.into(),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::Catalog(c) => c.into(),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<InterferenceError> for CliError {
    fn from(e: InterferenceError) -> Self {
        CliError::Usage(e.to_string())
    }
}

/// Commutation graphs of quantum observables.
#[derive(Debug, Parser)]
#[command(name = "qramsey", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Color every pair, list monochromatic triangles and maximal cliques.
    Analyze {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        out: GraphOutput,
    },
    /// Analyze and check a claims file against the derived colors.
    Audit {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        out: GraphOutput,
        /// Claims file; overrides a `claims` line in the config.
        #[arg(long)]
        claims: Option<PathBuf>,
        /// Exit with status 3 when any claim is refuted.
        #[arg(long)]
        strict_claims: bool,
    },
    /// Exhaustive R(3,3) certificate over all colorings of K6.
    Ramsey {
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Jacobi-identity status of every triple.
    Jacobi {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Compare symbolic colors against truncated-oscillator matrices.
    Oracle {
        #[command(flatten)]
        input: Input,
        /// Oscillator levels per axis.
        #[arg(long = "N", default_value_t = 8)]
        n: usize,
        /// Largest entry of a commutator still counted as zero.
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Screen intensity CSV for a multi-slit setup.
    Interfere {
        #[arg(long, default_value_t = 2)]
        slits: usize,
        /// Cross-term damping exponent.
        #[arg(long, conflicts_with = "correlation")]
        gamma: Option<f64>,
        /// Path-correlation entries, one `i j re im` per line (1-based, i < j).
        #[arg(long)]
        correlation: Option<PathBuf>,
        /// Write `pattern.csv` into this directory instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rebuild every figure graph with DOT, JSON and a discrepancy summary.
    Figures {
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        strict_claims: bool,
    },
}

#[derive(Debug, Args)]
struct Input {
    /// Comma-separated observable names.
    #[arg(long, value_delimiter = ',', conflicts_with = "config", required_unless_present = "config")]
    set: Vec<String>,
    #[arg(long)]
    config: Option<PathBuf>,
    /// Extra `pair a b red|green "# citation"` rules.
    #[arg(long)]
    rules: Option<PathBuf>,
    /// Let rule files replace built-in entries.
    #[arg(long)]
    allow_override: bool,
}

#[derive(Debug, Args)]
struct GraphOutput {
    #[arg(long)]
    dot: Option<PathBuf>,
    #[arg(long)]
    json: Option<PathBuf>,
}

struct Loaded {
    catalog: Catalog,
    specs: Vec<ObservableSpec>,
    claims: Option<PathBuf>,
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::io(path, e))
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn emit(text: &str, path: Option<&Path>) -> Result<(), CliError> {
    match path {
        Some(p) => write(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load(input: &Input) -> Result<Loaded, CliError> {
    let cfg = match &input.config {
        Some(path) => AnalysisConfig::load(path)?,
        None => AnalysisConfig::default(),
    };
    let rules_path = input.rules.as_ref().or(cfg.rule_overlays.as_ref());
    let mut rules = RuleTable::central_field();
    if let Some(path) = rules_path {
        rules = rules
            .with_overlay(&read(path)?, input.allow_override)
            .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    }
    let mut catalog = Catalog::with_rules(rules);
    let specs = if input.config.is_some() {
        cfg.specs(&mut catalog)?
    } else {
        input
            .set
            .iter()
            .map(|name| catalog.resolve(name.trim()))
            .collect::<Result<_, _>>()?
    };
    Ok(Loaded {
        catalog,
        specs,
        claims: cfg.claims,
    })
}

fn graph_outputs(loaded: &Loaded, out: &GraphOutput, claims: Option<&Path>) -> Result<usize, CliError> {
    let g = build_graph_from_specs(&loaded.specs, &loaded.catalog)?;
    let cliques = clique_report(&g);
    let discrepancies = match claims {
        Some(path) => {
            let parsed = parse_claims(&read(path)?).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
            Some(audit(&g, &parsed))
        }
        None => None,
    };
    if let Some(path) = &out.dot {
        write(path, &export_dot(&g, &cliques))?;
    }
    emit(&to_json(&GraphReport::new(&g, &cliques, discrepancies.as_ref())), out.json.as_deref())?;
    Ok(discrepancies.map_or(0, |d| d.count(Verdict::Refuted)))
}

fn parse_correlation(path: &Path, n: usize) -> Result<CorrelationMatrix, CliError> {
    let mut entries = Vec::new();
    for (idx, raw) in read(path)?.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = |m: &str| CliError::Usage(format!("{}:{}: {m}", path.display(), idx + 1));
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [i, j, re, im] = fields[..] else {
            return Err(bad("expected `i j re im`"));
        };
        let i: usize = i.parse().map_err(|_| bad("bad row index"))?;
        let j: usize = j.parse().map_err(|_| bad("bad column index"))?;
        let re: f64 = re.parse().map_err(|_| bad("bad real part"))?;
        let im: f64 = im.parse().map_err(|_| bad("bad imaginary part"))?;
        if i == 0 || j == 0 {
            return Err(bad("indices are 1-based"));
        }
        entries.push((i - 1, j - 1, Complex64::new(re, im)));
    }
    CorrelationMatrix::from_upper(n, &entries).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn create_dir(dir: &Path) -> Result<(), CliError> {
    std::fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Analyze { input, out } => {
            graph_outputs(&load(&input)?, &out, None)?;
        }
        Command::Audit {
            input,
            out,
            claims,
            strict_claims,
        } => {
            let loaded = load(&input)?;
            let claims = claims
                .or_else(|| loaded.claims.clone())
                .ok_or_else(|| CliError::Usage("audit needs --claims or a `claims` line in the config".into()))?;
            let refuted = graph_outputs(&loaded, &out, Some(&claims))?;
            if strict_claims && refuted > 0 {
                return Err(CliError::RefutedClaims(refuted));
            }
        }
        Command::Ramsey { json } => emit(&to_json(&verify_r33()), json.as_deref())?,
        Command::Jacobi { input, json } => {
            let loaded = load(&input)?;
            let h = build_jacobi_hypergraph_from_specs(&loaded.specs)?;
            emit(&to_json(&h), json.as_deref())?;
        }
        Command::Oracle { input, n, tol, json } => {
            let loaded = load(&input)?;
            if let Some(s) = loaded.specs.iter().find(|s| s.particle != DEFAULT_PARTICLE) {
                return Err(CliError::Usage(format!("oracle handles one particle; `{}` is on `{}`", s.name, s.particle)));
            }
            if !(tol >= 0.0) {
                return Err(CliError::Usage(format!("--tol must be non-negative, got {tol}")));
            }
            let names: Vec<&str> = loaded.specs.iter().map(|s| s.name.as_str()).collect();
            let report = agreement_check(&names, &loaded.catalog, n, tol)?;
            emit(&to_json(&report), json.as_deref())?;
        }
        Command::Interfere {
            slits,
            gamma,
            correlation,
            out,
        } => {
            let cfg = InterferenceConfig::reference(slits)?;
            let p = match (gamma, correlation) {
                (_, Some(path)) => entangled_pattern(&cfg, &parse_correlation(&path, slits)?)?,
                (Some(g), None) => decohered_pattern(&cfg, g)?,
                (None, None) => pattern(&cfg),
            };
            let path = match &out {
                Some(dir) => {
                    create_dir(dir)?;
                    Some(dir.join("pattern.csv"))
                }
                None => None,
            };
            emit(&p.to_csv(), path.as_deref())?;
        }
        Command::Figures { out, strict_claims } => {
            create_dir(&out)?;
            let runs = run_all(&Catalog::new())?;
            for run in runs.iter().filter(|r| FIGURES.iter().any(|f| f.id == r.id)) {
                write(&out.join(format!("{}.dot", run.id)), &export_dot(&run.graph, &run.cliques))?;
                let report = GraphReport::new(&run.graph, &run.cliques, Some(&run.audit));
                write(&out.join(format!("{}.json", run.id)), &to_json(&report))?;
            }
            let summary = discrepancy_summary(&runs);
            write(&out.join("discrepancy_summary.txt"), &summary)?;
            print!("{}", summary.lines().next().map(|l| format!("{l}\n")).unwrap_or_default());
            let refuted: usize = runs.iter().map(|r| r.audit.count(Verdict::Refuted)).sum();
            if strict_claims && refuted > 0 {
                return Err(CliError::RefutedClaims(refuted));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("qramsey: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
