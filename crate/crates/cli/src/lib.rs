//! Command-line front end for `condorcet-core`.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use condorcet_core::builder::BuildOutcome;
use condorcet_core::connectivity::connectivity_report_with;
use condorcet_core::domains::{is_maximal_condorcet, is_maximal_peak_pit};
use condorcet_core::enumerate::{
    census_csv, fold_isomorphic, maximal_domains, verify_theorem_1, verify_theorem_2, verify_theorem_3, CensusRow,
    EnumerateOptions, TheoremReport, VerifyOptions,
};
use condorcet_core::orders::alt_set;
use condorcet_core::paths::{enumerate_geodesics, paths_equivalent};
use condorcet_core::text::{parse_domain_file, DomainFile};
use condorcet_core::wiring::{parse_ascii, render_ascii, render_svg};
use condorcet_core::{
    build_geodesic_with, classify, is_peak_pit, Alphabet, BuildOptions, Domain, Error, Exec, Family, LinearOrder, Path,
    SwitchSeq,
};
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "condorcet", version, about = "Condorcet domains, never-conditions and geodesics")]
pub struct Cli {
    /// Worker threads; 1 runs everything on the calling thread
    #[arg(long, global = true, env = "CONDORCET_JOBS")]
    pub jobs: Option<usize>,

    /// Seed for every randomized step
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Labels for alternatives 0, 1, 2, ... when no domain file sets them
    #[arg(long, global = true)]
    pub alphabet: Option<String>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Condorcet,
    PeakPit,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum WiringFormat {
    Ascii,
    Svg,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Classify a domain file: never-conditions, maximality and connectivity as JSON
    Classify { file: PathBuf },

    /// List the maximal domains on n alternatives with their census flags
    Enumerate {
        #[arg(long)]
        n: usize,
        /// One canonical representative per relabeling class
        #[arg(long)]
        fold_iso: bool,
        #[arg(long, value_enum, default_value = "condorcet")]
        family: FamilyArg,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        /// Resume from and record progress in this file
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// Allow n = 6
        #[arg(long)]
        long_running: bool,
    },

    /// Check one of the three theorems on maximal domains
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        theorem: u8,
        /// Enumerate n = 5 fully instead of sampling
        #[arg(long)]
        exhaustive: bool,
        /// Random maximal domains to sample at n = 5
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },

    /// Build a geodesic between two orders of a peak-pit domain that keeps it peak-pit
    Build {
        #[arg(long)]
        domain: PathBuf,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        /// Alternatives to restrict to, e.g. `abd`; all by default
        #[arg(long)]
        subset: Option<String>,
        /// On an internal failure, fall back to brute-force search and say so
        #[arg(long)]
        oracle_fallback: bool,
        /// Print the recursion levels and normalization stages
        #[arg(long)]
        trace: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },

    /// List the geodesics between two orders
    Geodesics {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        /// Only geodesics inside this domain
        #[arg(long)]
        domain: Option<PathBuf>,
        /// Only geodesics that keep the domain peak-pit
        #[arg(long, requires = "domain")]
        peak_pit: bool,
        #[arg(long)]
        limit: Option<usize>,
    },

    /// Draw a switch sequence, or read one back from an ASCII drawing
    Wiring {
        /// Path written as `abc -> bac -> bca`
        #[arg(long, conflicts_with_all = ["from", "seq", "parse"])]
        path: Option<String>,
        /// Start order of `--seq`
        #[arg(long, requires = "seq")]
        from: Option<String>,
        /// Swaps written as `(a,b),(a,c)`
        #[arg(long, requires = "from")]
        seq: Option<String>,
        /// Parse an ASCII diagram file and print its switch sequence
        #[arg(long)]
        parse: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "ascii")]
        format: WiringFormat,
    },

    /// Whether two paths are equivalent under commuting disjoint swaps
    Equivalent { a: String, b: String },
}

/// How a command ended when it did not error.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Violation,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Pass => 0,
            Outcome::Violation => 1,
        }
    }
}

/// Exit code for an error: 1 for an internal construction failure, 2 otherwise.
pub fn error_exit_code(err: &anyhow::Error) -> i32 {
    match err.downcast_ref::<Error>() {
        Some(Error::ConstructionBug(_)) => 1,
        _ => 2,
    }
}

struct Ctx {
    exec: Exec,
    seed: u64,
    alphabet: Alphabet,
}

pub fn run(cli: Cli, out: &mut dyn Write) -> anyhow::Result<Outcome> {
    let exec = configure_jobs(cli.jobs)?;
    let alphabet = match &cli.alphabet {
        Some(s) => Alphabet::parse(s).context("bad --alphabet")?,
        None => Alphabet::default(),
    };
    let ctx = Ctx { exec, seed: cli.seed, alphabet };
    match cli.command {
        Command::Classify { file } => cmd_classify(&ctx, &file, out),
        Command::Enumerate { n, fold_iso, family, format, checkpoint, long_running } => {
            cmd_enumerate(&ctx, n, fold_iso, family, format, checkpoint, long_running, out)
        }
        Command::Verify { n, theorem, exhaustive, samples, checkpoint, format } => {
            let opts = VerifyOptions { exec: ctx.exec, exhaustive_n5: exhaustive, samples, seed: ctx.seed, checkpoint };
            cmd_verify(n, theorem, &opts, format, out)
        }
        Command::Build { domain, from, to, subset, oracle_fallback, trace, format } => {
            cmd_build(&domain, &from, &to, subset.as_deref(), oracle_fallback, trace, format, out)
        }
        Command::Geodesics { from, to, domain, peak_pit, limit } => {
            cmd_geodesics(&ctx, &from, &to, domain.as_deref(), peak_pit, limit, out)
        }
        Command::Wiring { path, from, seq, parse, format } => cmd_wiring(&ctx, path, from, seq, parse, format, out),
        Command::Equivalent { a, b } => {
            let (a, b) = (ctx.alphabet.parse_path(&a)?, ctx.alphabet.parse_path(&b)?);
            let eq = paths_equivalent(&a, &b);
            writeln!(out, "{}", if eq { "equivalent" } else { "not equivalent" })?;
            Ok(Outcome::Pass)
        }
    }
}

#[cfg(feature = "parallel")]
fn configure_jobs(jobs: Option<usize>) -> anyhow::Result<Exec> {
    match jobs {
        Some(0) => bail!("--jobs must be at least 1"),
        Some(1) => Ok(Exec::Sequential),
        Some(j) => {
            // A second call in the same process keeps the first pool.
            let _ = rayon::ThreadPoolBuilder::new().num_threads(j).build_global();
            Ok(Exec::Parallel)
        }
        None => Ok(Exec::Parallel),
    }
}

#[cfg(not(feature = "parallel"))]
fn configure_jobs(jobs: Option<usize>) -> anyhow::Result<Exec> {
    if jobs == Some(0) {
        bail!("--jobs must be at least 1");
    }
    Ok(Exec::Sequential)
}

fn read_domain(path: &std::path::Path) -> anyhow::Result<DomainFile> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let file = parse_domain_file(&text).with_context(|| format!("{}", path.display()))?;
    for w in &file.warnings {
        eprintln!("warning: {}: {w}", path.display());
    }
    Ok(file)
}

fn order_str(a: &Alphabet, o: &LinearOrder) -> String {
    a.format_order(o)
}

fn pair_json(a: &Alphabet, pair: Option<(LinearOrder, LinearOrder)>) -> Value {
    pair.map_or(Value::Null, |(x, y)| json!([order_str(a, &x), order_str(a, &y)]))
}

fn cmd_classify(ctx: &Ctx, file: &std::path::Path, out: &mut dyn Write) -> anyhow::Result<Outcome> {
    let DomainFile { alphabet: a, domain: d, .. } = read_domain(file)?;
    let c = classify(&d)?;
    let conn = connectivity_report_with(&d, ctx.exec);
    let conditions: Vec<Value> = c
        .conditions
        .iter()
        .map(|n| {
            json!({
                "triple": n.triple.0.iter().map(|&x| a.label(x)).collect::<String>(),
                "banned": a.label(n.banned).to_string(),
                "k": n.k,
            })
        })
        .collect();
    let report = json!({
        "alternatives": d.n(),
        "size": d.len(),
        "condorcet": c.is_condorcet,
        "peak_pit": c.is_peak_pit,
        "never_top": c.is_never_top,
        "never_bottom": c.is_never_bottom,
        "never_middle": c.is_never_middle,
        "maximal": c.is_condorcet && is_maximal_condorcet(&d)?,
        "maximal_peak_pit": c.is_peak_pit && is_maximal_peak_pit(&d)?,
        "connected": conn.connected,
        "directly_connected": conn.directly_connected,
        "disconnected_pair": pair_json(&a, conn.witness_disconnected_pair),
        "non_geodesic_pair": pair_json(&a, conn.witness_non_geodesic_pair),
        "conditions": conditions,
    });
    writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
    Ok(Outcome::Pass)
}

#[allow(clippy::too_many_arguments)]
fn cmd_enumerate(
    ctx: &Ctx,
    n: usize,
    fold_iso: bool,
    family: FamilyArg,
    format: Format,
    checkpoint: Option<PathBuf>,
    long_running: bool,
    out: &mut dyn Write,
) -> anyhow::Result<Outcome> {
    let family = match family {
        FamilyArg::Condorcet => Family::Condorcet,
        FamilyArg::PeakPit => Family::PeakPit,
    };
    let opts = EnumerateOptions { fold_iso, exec: ctx.exec, long_running, checkpoint };
    let labeled = maximal_domains(n, family, &opts)?;
    let domains = if fold_iso { fold_isomorphic(&labeled, ctx.exec) } else { labeled };
    let mut rows: Vec<CensusRow> = condorcet_core::par::map(ctx.exec, &domains, |d| CensusRow::new(d.clone()));
    rows.sort();
    let a = &ctx.alphabet;
    match format {
        Format::Csv | Format::Text => write!(out, "{}", census_csv(&rows, |o| order_str(a, o)))?,
        Format::Json => {
            let rows: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "domain": r.domain.iter().map(|o| order_str(a, o)).collect::<Vec<_>>(),
                        "size": r.size,
                        "peak_pit": r.peak_pit,
                        "connected": r.connected,
                        "directly_connected": r.directly_connected,
                        "maximal_condorcet": r.maximal_condorcet,
                        "maximal_peak_pit": r.maximal_peak_pit,
                    })
                })
                .collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&Value::Array(rows))?)?;
        }
    }
    Ok(Outcome::Pass)
}

fn cmd_verify(
    n: usize,
    theorem: u8,
    opts: &VerifyOptions,
    format: Format,
    out: &mut dyn Write,
) -> anyhow::Result<Outcome> {
    let rep: TheoremReport = match theorem {
        1 => verify_theorem_1(n, opts)?,
        2 => verify_theorem_2(n, opts)?,
        _ => verify_theorem_3(n, opts)?,
    };
    let a = Alphabet::default();
    let status = if rep.passed() { "PASS" } else { "FAIL" };
    match format {
        Format::Json => {
            let cex: Vec<Value> = rep
                .counterexamples
                .iter()
                .map(|c| json!({"domain": c.domain.iter().map(|o| order_str(&a, o)).collect::<Vec<_>>(), "reason": c.reason}))
                .collect();
            let v = json!({
                "theorem": rep.theorem,
                "n": rep.n,
                "exhaustive": rep.exhaustive,
                "checked": rep.checked,
                "status": status,
                "counterexamples": cex,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&v)?)?;
        }
        Format::Text | Format::Csv => {
            let mode = if rep.exhaustive { "exhaustive" } else { "sampled" };
            writeln!(out, "theorem {} n={} {status} ({} domains, {mode})", rep.theorem, rep.n, rep.checked)?;
            for c in &rep.counterexamples {
                let orders: Vec<String> = c.domain.iter().map(|o| order_str(&a, o)).collect();
                writeln!(out, "counterexample: {} ({})", orders.join(" "), c.reason)?;
            }
        }
    }
    Ok(if rep.passed() { Outcome::Pass } else { Outcome::Violation })
}

#[allow(clippy::too_many_arguments)]
fn cmd_build(
    domain: &std::path::Path,
    from: &str,
    to: &str,
    subset: Option<&str>,
    oracle_fallback: bool,
    trace: bool,
    format: Format,
    out: &mut dyn Write,
) -> anyhow::Result<Outcome> {
    let DomainFile { alphabet: a, domain: d, .. } = read_domain(domain)?;
    let (r, t) = (a.parse_order(from)?, a.parse_order(to)?);
    let subset = match subset {
        None => d.universe(),
        Some(s) => {
            let ids = s.chars().map(|c| a.id(c).with_context(|| format!("unknown label {c:?} in --subset")));
            alt_set(ids.collect::<anyhow::Result<Vec<_>>>()?)
        }
    };
    let BuildOutcome { geodesic, trace: levels, fallback } =
        build_geodesic_with(&d, &r, &t, subset, &BuildOptions { oracle_fallback })?;
    let db: Domain = d.restrict(subset)?;
    let keeps = is_peak_pit(&db.union(geodesic.orders().iter().copied())?);
    if let Some(reason) = &fallback {
        eprintln!("warning: construction failed ({reason}); answer found by brute-force search");
    }
    let seq = geodesic.switch_seq();
    match format {
        Format::Json => {
            let v = json!({
                "geodesic": geodesic.orders().iter().map(|o| order_str(&a, o)).collect::<Vec<_>>(),
                "swaps": a.format_seq(&seq),
                "is_geodesic": geodesic.is_geodesic(),
                "peak_pit": keeps,
                "fallback": fallback,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&v)?)?;
        }
        Format::Text | Format::Csv => {
            writeln!(out, "{}", a.format_path(&geodesic))?;
            writeln!(out, "swaps: {}", a.format_seq(&seq))?;
            writeln!(out, "geodesic: {}", if geodesic.is_geodesic() { "yes" } else { "no" })?;
            writeln!(out, "peak-pit with D_B: {}", if keeps { "yes" } else { "no" })?;
            if trace {
                for level in &levels {
                    let labels: String = condorcet_core::orders::alts_of(level.subset).map(|x| a.label(x)).collect();
                    write!(out, "level {labels}")?;
                    if let Some(z) = level.z {
                        write!(out, " z={}", a.label(z))?;
                    }
                    writeln!(out, " C={} C_NT={}", level.c.len(), level.c_nt.len())?;
                    for (stage, s) in &level.stages {
                        writeln!(out, "  {:<9} {}", stage.name(), a.format_seq(s))?;
                    }
                }
            }
        }
    }
    Ok(if geodesic.is_geodesic() && keeps { Outcome::Pass } else { Outcome::Violation })
}

fn cmd_geodesics(
    ctx: &Ctx,
    from: &str,
    to: &str,
    domain: Option<&std::path::Path>,
    peak_pit: bool,
    limit: Option<usize>,
    out: &mut dyn Write,
) -> anyhow::Result<Outcome> {
    let file = domain.map(read_domain).transpose()?;
    let a = file.as_ref().map_or(&ctx.alphabet, |f| &f.alphabet);
    let (r, t) = (a.parse_order(from)?, a.parse_order(to)?);
    let all: Vec<Path> = match &file {
        Some(f) if peak_pit => {
            if !is_peak_pit(&f.domain) {
                bail!("--peak-pit needs a peak-pit domain");
            }
            enumerate_geodesics(&r, &t, None)?
                .into_iter()
                .filter(|g| f.domain.union(g.orders().iter().copied()).map(|u| is_peak_pit(&u)).unwrap_or(false))
                .collect()
        }
        Some(f) => enumerate_geodesics(&r, &t, Some(&f.domain))?,
        None => enumerate_geodesics(&r, &t, None)?,
    };
    for g in all.iter().take(limit.unwrap_or(usize::MAX)) {
        writeln!(out, "{}", a.format_path(g))?;
    }
    eprintln!("{} geodesics", all.len());
    Ok(Outcome::Pass)
}

fn cmd_wiring(
    ctx: &Ctx,
    path: Option<String>,
    from: Option<String>,
    seq: Option<String>,
    parse: Option<PathBuf>,
    format: WiringFormat,
    out: &mut dyn Write,
) -> anyhow::Result<Outcome> {
    let a = &ctx.alphabet;
    if let Some(file) = parse {
        let text = fs::read_to_string(&file).with_context(|| format!("cannot read {}", file.display()))?;
        let s = parse_ascii(&text, a).with_context(|| format!("{}", file.display()))?;
        writeln!(out, "from: {}", a.format_order(&s.start))?;
        writeln!(out, "swaps: {}", a.format_seq(&s))?;
        return Ok(Outcome::Pass);
    }
    let s: SwitchSeq = match (path, from, seq) {
        (Some(p), _, _) => a.parse_path(&p)?.switch_seq(),
        (None, Some(f), Some(q)) => a.parse_seq(&a.parse_order(&f)?, &q)?,
        _ => bail!("give --path, or --from with --seq, or --parse"),
    };
    let text = match format {
        WiringFormat::Ascii => render_ascii(&s, a)?,
        WiringFormat::Svg => render_svg(&s, a)?,
    };
    write!(out, "{text}")?;
    Ok(Outcome::Pass)
}
