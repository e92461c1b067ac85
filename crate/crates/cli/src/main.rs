//! `superlie`: characters of free Lie superalgebra modules, tableau counts,
//! and identity sweeps from the command line.

mod cache;
mod report;

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{ArgGroup, Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::{json, Value};
use superlie::partition::Partition;
use superlie::report::Status;
use superlie::superlie::{
    brute_force_lie_dim, super_bi_brandt_char, super_brandt_char, super_lie_module_char, super_witt_dim,
    SupportMatrix,
};
use superlie::symfunc::bisym::BiSymFunc;
use superlie::symfunc::{clear_caches, clear_char_tables, schur_expand};
use superlie::tableau::{maj_neg_generating_poly, stat_table, MajKind, DEFAULT_BUDGET};
use superlie::verify::{self, Profile, Suite};
use superlie::{Error, Result};

use crate::report::{render_json, render_text, Exit, Format, Outcome, RunReport};

#[derive(Debug, Parser)]
#[command(name = "superlie", version, about = "Free Lie superalgebra characters and identity checks")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,
    /// Include `elapsed_ms` in the report (makes output run-dependent).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Character of a super Lie module in the p and s bases.
    #[command(subcommand)]
    Char(CharKind),
    /// Dimension of the bidegree (n, m) part of the free Lie superalgebra
    /// on N even and N odd generators.
    Dim {
        n: u32,
        m: u32,
        #[arg(value_name = "N")]
        vars: u64,
        /// Also compute the dimension by bracketing and compare.
        #[arg(long)]
        oracle: bool,
    },
    /// Count super standard tableaux of shape λ by maj residue and negg.
    Count(CountArgs),
    /// Run an identity sweep.
    Verify(VerifyArgs),
    /// Manage the persistent character-table cache.
    #[command(subcommand)]
    Cache(CacheCommand),
}

#[derive(Debug, Subcommand)]
enum CharKind {
    /// ch 𝓛_{n,m}, the diagonal character.
    Lie { n: u32, m: u32 },
    /// The two-alphabet character of 𝓛̃_{n,m}.
    Bilie { n: u32, m: u32 },
    /// A higher super Lie module given by a support matrix.
    Higher {
        /// JSON triples `[[i, j, a], ...]`, inline or as a file path.
        #[arg(long)]
        matrix: String,
    },
}

#[derive(Debug, Args)]
struct CountArgs {
    /// Shape, written "(a,b,...)".
    lambda: Partition,
    #[arg(long = "mod", default_value_t = 1, conflicts_with = "gf")]
    modulus: u32,
    #[arg(long = "res", default_value_t = 0, conflicts_with = "gf")]
    residue: u32,
    /// Number of negative entries; all values are summed when omitted.
    #[arg(long = "neg", conflicts_with = "gf")]
    negg: Option<u32>,
    /// Print the (maj, negg) generating polynomial in q, t instead.
    #[arg(long)]
    gf: bool,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("size").args(["max_n", "max_degree", "max_total"])))]
struct VerifyArgs {
    suite: Suite,
    /// Size bound for suites indexed by n.
    #[arg(long)]
    max_n: Option<u32>,
    /// Size bound for suites indexed by the degree d.
    #[arg(long)]
    max_degree: Option<u32>,
    /// Size bound for suites indexed by n + m.
    #[arg(long)]
    max_total: Option<u32>,
    /// q-adic truncation for the specialization checks.
    #[arg(long)]
    qcap: Option<u32>,
    #[arg(long, default_value = "full")]
    profile: Profile,
}

#[derive(Debug, Subcommand)]
enum CacheCommand {
    /// Precompute and persist the S_k tables for k ≤ n.
    Warm {
        #[arg(long)]
        n: u32,
    },
    /// Delete the cache file and the in-memory tables.
    Clear,
}

fn number(b: &BigInt) -> Value {
    i64::try_from(b).map(Value::from).unwrap_or_else(|_| Value::String(b.to_string()))
}

fn char_lines(p: String, s: String) -> Vec<(String, String)> {
    vec![("p".into(), p), ("s".into(), s)]
}

fn cmd_char(kind: &CharKind) -> Result<Outcome> {
    let bi = |g: BiSymFunc| {
        let schur = g.bi_schur_expand();
        let diagonal = g.diagonal();
        let diagonal_s = schur_expand(&diagonal);
        let payload = json!({
            "p": g.to_string(),
            "s": schur.to_string(),
            "p_terms": g.to_json(),
            "s_terms": BiSymFunc::from_terms(schur.coeffs().clone()).to_json(),
            "diagonal_p": diagonal.to_string(),
            "diagonal_s": diagonal_s.to_symfunc().to_string(),
        });
        let mut text = char_lines(g.to_string(), schur.to_string());
        text.push(("diagonal p".into(), diagonal.to_string()));
        text.push(("diagonal s".into(), diagonal_s.to_symfunc().to_string()));
        Outcome::pass(payload, text)
    };
    Ok(match kind {
        CharKind::Lie { n, m } => {
            let f = super_brandt_char(*n, *m)?;
            let s = schur_expand(&f);
            let payload = json!({
                "p": f.to_string(),
                "s": s.to_symfunc().to_string(),
                "p_terms": f.to_json(),
                "s_terms": s.to_symfunc().to_json(),
            });
            Outcome::pass(payload, char_lines(f.to_string(), s.to_symfunc().to_string()))
        }
        CharKind::Bilie { n, m } => bi(super_bi_brandt_char(*n, *m)?),
        CharKind::Higher { matrix } => bi(super_lie_module_char(&read_matrix(matrix)?)?),
    })
}

/// Inline JSON when the argument looks like an array, else a file path.
fn read_matrix(arg: &str) -> Result<SupportMatrix> {
    if arg.trim_start().starts_with('[') {
        return SupportMatrix::from_json(arg);
    }
    let text = std::fs::read_to_string(arg)
        .map_err(|e| Error::Parse(format!("cannot read matrix file {arg}: {e}")))?;
    SupportMatrix::from_json(&text)
}

fn cmd_dim(n: u32, m: u32, vars: u64, oracle: bool) -> Result<Outcome> {
    let dim = super_witt_dim(n, m, vars)?;
    let mut payload = json!({ "dimension": number(&dim) });
    let mut text = vec![("dimension".to_string(), dim.to_string())];
    let mut status = Status::Pass;
    if oracle {
        let vars32 = u32::try_from(vars).map_err(|_| Error::Resource(format!("{vars} generators")))?;
        let brute = brute_force_lie_dim(n, m, vars32, vars32)?;
        let agree = BigInt::from(brute) == dim;
        payload["oracle"] = json!(brute);
        payload["match"] = json!(agree);
        text.push(("oracle".into(), brute.to_string()));
        text.push(("match".into(), agree.to_string()));
        if !agree {
            status = Status::Fail;
            payload["first_discrepancy"] = json!(format!("character gives {dim}, bracketing gives {brute}"));
        }
    }
    Ok(Outcome { status, payload, text, details: Vec::new() })
}

fn cmd_count(args: &CountArgs) -> Result<Outcome> {
    if args.gf {
        let gf = maj_neg_generating_poly(&args.lambda)?;
        let payload = json!({ "generating_function": gf.to_string(), "coefficients": gf });
        return Ok(Outcome::pass(payload, vec![("generating_function".into(), gf.to_string())]));
    }
    if args.modulus == 0 {
        return Err(Error::Domain("modulus must be at least 1".into()));
    }
    if args.residue >= args.modulus {
        return Err(Error::Domain(format!(
            "residue {} is not reduced modulo {}",
            args.residue, args.modulus
        )));
    }
    let table = stat_table(&args.lambda, MajKind::Maj, DEFAULT_BUDGET)?;
    let count: u64 = match args.negg {
        Some(k) => table.count_residue(args.modulus, args.residue, k),
        None => (0..=args.lambda.size())
            .map(|k| table.count_residue(args.modulus, args.residue, k))
            .sum(),
    };
    Ok(Outcome::pass(json!({ "count": count }), vec![("count".into(), count.to_string())]))
}

fn cmd_verify(args: &VerifyArgs) -> Result<Outcome> {
    let size = args.max_n.or(args.max_degree).or(args.max_total);
    let runs = verify::run(args.suite, args.profile, size, args.qcap)?;
    let status = runs.iter().map(|r| r.status()).fold(Status::Pass, |acc, s| match (acc, s) {
        (Status::Error, _) | (_, Status::Error) => Status::Error,
        (Status::Fail, _) | (_, Status::Fail) => Status::Fail,
        _ => Status::Pass,
    });
    let all: Vec<_> = runs.iter().flat_map(|r| &r.reports).collect();
    let failed: Vec<_> = all.iter().filter(|r| !r.is_pass()).collect();
    let suites: Vec<Value> = runs
        .iter()
        .map(|r| {
            json!({
                "suite": r.suite,
                "bounds": r.bounds,
                "status": r.status(),
                "reports": r.reports,
            })
        })
        .collect();
    let mut payload = json!({ "checks": all.len(), "failed": failed.len(), "suites": suites });
    if let Some(first) = failed.first() {
        payload["first_discrepancy"] = serde_json::to_value(first).expect("reports serialize");
    }
    let mut text = vec![("checks".to_string(), all.len().to_string()), ("failed".into(), failed.len().to_string())];
    for r in &runs {
        text.push((
            format!("suite {}", r.suite),
            format!(
                "{:?} ({} <= {}, q_cap {}, {} checks)",
                r.status(),
                r.suite.size_meaning(),
                r.bounds.size,
                r.bounds.q_cap,
                r.reports.len()
            )
            .to_lowercase(),
        ));
    }
    let details = failed
        .iter()
        .map(|r| {
            format!(
                "{:?} {} {}: {}",
                r.status,
                r.check,
                serde_json::to_string(&r.parameters).unwrap_or_default(),
                r.first_discrepancy.as_deref().unwrap_or("")
            )
        })
        .collect();
    Ok(Outcome { status, payload, text, details })
}

fn require_cache_path() -> Result<PathBuf> {
    cache::cache_path()
        .ok_or_else(|| Error::Domain("no cache location: set SUPERLIE_CACHE_DIR or HOME".into()))
}

fn cmd_cache(c: &CacheCommand) -> Result<Outcome> {
    let path = require_cache_path()?;
    match c {
        CacheCommand::Warm { n } => {
            if *n == 0 || *n > cache::MAX_WARM_N {
                return Err(Error::Resource(format!("cache warm accepts 1 <= n <= {}, got {n}", cache::MAX_WARM_N)));
            }
            let header = cache::warm(&path, *n).map_err(|e| Error::Resource(e.to_string()))?;
            let payload = json!({
                "path": path.display().to_string(),
                "format_version": header.format_version,
                "max_n": header.max_n,
                "digest": header.digest,
            });
            let text = vec![
                ("path".to_string(), path.display().to_string()),
                ("max_n".into(), header.max_n.to_string()),
                ("digest".into(), header.digest),
            ];
            Ok(Outcome::pass(payload, text))
        }
        CacheCommand::Clear => {
            let removed = cache::clear(&path).map_err(|e| Error::Resource(e.to_string()))?;
            clear_char_tables();
            clear_caches();
            let payload = json!({ "path": path.display().to_string(), "removed": removed });
            let text = vec![("path".to_string(), path.display().to_string()), ("removed".into(), removed.to_string())];
            Ok(Outcome::pass(payload, text))
        }
    }
}

fn describe(command: &Command) -> (String, BTreeMap<String, Value>) {
    let mut p = BTreeMap::new();
    let name = match command {
        Command::Char(kind) => {
            match kind {
                CharKind::Lie { n, m } | CharKind::Bilie { n, m } => {
                    p.insert("n".into(), json!(n));
                    p.insert("m".into(), json!(m));
                }
                CharKind::Higher { matrix } => {
                    p.insert("matrix".into(), json!(matrix));
                }
            }
            let kind = match kind {
                CharKind::Lie { .. } => "lie",
                CharKind::Bilie { .. } => "bilie",
                CharKind::Higher { .. } => "higher",
            };
            format!("char {kind}")
        }
        Command::Dim { n, m, vars, oracle } => {
            p.insert("n".into(), json!(n));
            p.insert("m".into(), json!(m));
            p.insert("N".into(), json!(vars));
            p.insert("oracle".into(), json!(oracle));
            "dim".into()
        }
        Command::Count(a) => {
            p.insert("lambda".into(), json!(a.lambda.to_string()));
            if a.gf {
                p.insert("gf".into(), json!(true));
            } else {
                p.insert("mod".into(), json!(a.modulus));
                p.insert("res".into(), json!(a.residue));
                p.insert("neg".into(), a.negg.map_or(Value::String("any".into()), |k| json!(k)));
            }
            "count".into()
        }
        Command::Verify(a) => {
            p.insert("suite".into(), json!(a.suite.name()));
            p.insert("profile".into(), json!(a.profile));
            if let Some(s) = a.max_n.or(a.max_degree).or(a.max_total) {
                p.insert("size".into(), json!(s));
            }
            if let Some(q) = a.qcap {
                p.insert("q_cap".into(), json!(q));
            }
            "verify".into()
        }
        Command::Cache(CacheCommand::Warm { n }) => {
            p.insert("n".into(), json!(n));
            "cache warm".into()
        }
        Command::Cache(CacheCommand::Clear) => "cache clear".into(),
    };
    (name, p)
}

fn dispatch(command: &Command) -> Result<Outcome> {
    match command {
        Command::Char(kind) => cmd_char(kind),
        Command::Dim { n, m, vars, oracle } => cmd_dim(*n, *m, *vars, *oracle),
        Command::Count(args) => cmd_count(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Cache(c) => cmd_cache(c),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    if !matches!(cli.command, Command::Cache(CacheCommand::Clear)) {
        if let Some(path) = cache::cache_path() {
            cache::load(&path);
        }
    }
    let (command, parameters) = describe(&cli.command);
    let (mut report, text, details, exit) = match dispatch(&cli.command) {
        Ok(out) => {
            let exit = Exit::of_status(out.status);
            let report = RunReport { command, parameters, status: out.status, payload: out.payload, elapsed_ms: None };
            (report, out.text, out.details, exit)
        }
        Err(e) => {
            eprintln!("error: {e}");
            let (report, exit) = RunReport::error(command, parameters, &e);
            (report, Vec::new(), Vec::new(), exit)
        }
    };
    if cli.timing {
        report.elapsed_ms = Some(u64::try_from(start.elapsed().as_millis()).unwrap_or(u64::MAX));
    }
    let rendered = match cli.format {
        Format::Json => render_json(&report),
        Format::Text => render_text(&report, &text, &details),
    };
    // A closed pipe (e.g. `| head`) is not an error worth a panic.
    let _ = writeln!(std::io::stdout().lock(), "{rendered}");
    debug_assert!(report.status != Status::Fail || report.payload.get("first_discrepancy").is_some());
    exit.into()
}
