//! Command-line surface for the prime-gap verification toolkit.
//!
//! Subcommands: `table`, `verify`, `crossover`, `stats`, `chain`,
//! `simulate`, `dump`, `list`. Global flags select output format, worker
//! count, checkpoint path, and engine cap; a TOML-like `key = value`
//! config file can preload the same settings (flags win).
//!
//! Exit codes: 0 success, 2 counterexample, 3 inconclusive, 64 usage
//! error, 65 capacity error, 1 other failures.

mod output;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde_json::json;

use gapkit::analysis::{self, AnalyticInequalityId};
use gapkit::campaigns::{self, CampaignConfig, CampaignReport, PresetId};
use gapkit::cramer;
use gapkit::engine::{self, EngineConfig};
use gapkit::error::{Error, Result};
use gapkit::predicates::{EvalContext, PredicateId};

use output::{json_report, num, Csv, Format};

#[derive(Parser)]
#[command(name = "gapkit", version, about = "Prime-gap verification toolkit")]
struct Cli {
    /// Output format (default: table; simulate defaults to json).
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Worker threads for campaigns.
    #[arg(long, global = true)]
    workers: Option<usize>,

    /// Checkpoint file for campaigns.
    #[arg(long, global = true)]
    checkpoint: Option<PathBuf>,

    /// Hard cap on primes the engine may touch.
    #[arg(long, global = true, value_name = "CAP")]
    max_prime: Option<u64>,

    /// key = value settings file (keys: format, workers, checkpoint,
    /// max_prime); explicit flags override it.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the (n, p_n, p_n^(1/n)) table for the first `count` indices.
    Table {
        #[arg(long, default_value_t = 10)]
        count: u64,
        /// Decimal digits for the root column (half-even rounding).
        #[arg(long, default_value_t = 4)]
        precision: u8,
    },
    /// Verify a predicate over an index range or a named preset.
    Verify {
        /// Predicate id (see `gapkit list`); omit with --resume.
        predicate: Option<String>,
        #[arg(long)]
        from: Option<u64>,
        #[arg(long)]
        to: Option<u64>,
        /// Named range preset (see `gapkit list`).
        #[arg(long)]
        preset: Option<String>,
        /// Expand sierpinski-residual to its full range (minutes-scale).
        #[arg(long)]
        full: bool,
        /// Continue from the file given via --checkpoint.
        #[arg(long)]
        resume: bool,
        #[arg(long, value_name = "INDICES")]
        checkpoint_interval: Option<u64>,
        /// Evaluate the Farhadian bracket as a floor (off by default).
        #[arg(long)]
        farhadian_floor: bool,
        /// Also write the rendered report to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Locate the integer threshold of an auxiliary analytic inequality.
    Crossover {
        /// One of: a-axler-step, a-sqrt-n, a-oppermann, a-andrica.
        inequality: String,
        #[arg(long)]
        lo: u64,
        #[arg(long)]
        hi: u64,
    },
    /// Gap statistics.
    Stats {
        #[command(subcommand)]
        stat: StatsCommand,
    },
    /// Audit the Farhadian -> Nicholson -> Firoozbakht -> Forgues chain.
    Chain {
        #[arg(long)]
        to: u64,
    },
    /// Draw one sample of the 1/ln m random model.
    Simulate {
        #[arg(long)]
        limit: u64,
        #[arg(long)]
        seed: u64,
    },
    /// Dump primes or gap records as CSV.
    Dump {
        #[command(subcommand)]
        what: DumpCommand,
    },
    /// List predicate ids, analytic inequality ids, and presets.
    List,
}

#[derive(Subcommand)]
enum StatsCommand {
    /// Strictly increasing-gap records up to index `to`.
    Records {
        #[arg(long)]
        to: u64,
    },
    /// Running maximum of g_n/ln²(p_n) with reference constants.
    CramerRatio {
        #[arg(long)]
        to: u64,
    },
    /// Δ_n over the minimal-gap index set up to `to`.
    Zhang {
        #[arg(long)]
        to: u64,
    },
    /// π(x + ln(x)^λ) - π(x) and its normalizer.
    Maier {
        #[arg(long)]
        x: f64,
        #[arg(long)]
        lambda: f64,
    },
}

#[derive(Subcommand)]
enum DumpCommand {
    /// All primes up to the limit.
    Primes {
        #[arg(long)]
        limit: u64,
    },
    /// Gap records for n in [from, to].
    Gaps {
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
    },
}

fn main() -> ExitCode {
    // Die quietly when stdout is a closed pipe (e.g. `gapkit list | head`).
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 64,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Capacity { .. } => 65,
        Error::Domain(_)
        | Error::EmptyDomain(_)
        | Error::UnknownId(_)
        | Error::ArityMismatch { .. }
        | Error::EqualityDomain(_) => 64,
        Error::Inconclusive { .. } => 3,
        Error::TooManyFailures { .. } => 2,
        _ => 1,
    }
}

/// Settings merged from the optional config file and global flags.
struct Settings {
    format: Option<Format>,
    workers: usize,
    checkpoint: Option<PathBuf>,
    max_prime: u64,
}

fn load_settings(cli: &Cli) -> Result<Settings> {
    let mut format = None;
    let mut workers = 1usize;
    let mut checkpoint = None;
    let mut max_prime = engine::DEFAULT_HARD_CAP;
    if let Some(path) = &cli.config {
        for (key, value) in parse_config_file(path)? {
            match key.as_str() {
                "format" => {
                    format = Some(parse_format(&value)?);
                }
                "workers" => {
                    workers = value
                        .parse()
                        .map_err(|_| Error::Domain(format!("config: bad workers '{value}'")))?;
                }
                "checkpoint" => checkpoint = Some(PathBuf::from(value)),
                "max_prime" => {
                    max_prime = value
                        .parse()
                        .map_err(|_| Error::Domain(format!("config: bad max_prime '{value}'")))?;
                }
                other => {
                    return Err(Error::Domain(format!("config: unknown key '{other}'")));
                }
            }
        }
    }
    if let Some(f) = cli.format {
        format = Some(f);
    }
    if let Some(w) = cli.workers {
        workers = w;
    }
    if cli.checkpoint.is_some() {
        checkpoint = cli.checkpoint.clone();
    }
    if let Some(cap) = cli.max_prime {
        max_prime = cap;
    }
    Ok(Settings {
        format,
        workers: workers.max(1),
        checkpoint,
        max_prime,
    })
}

fn parse_config_file(path: &Path) -> Result<Vec<(String, String)>> {
    let raw = std::fs::read_to_string(path)
        .map_err(|e| Error::Domain(format!("config file {}: {e}", path.display())))?;
    let mut out = Vec::new();
    for (lineno, line) in raw.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(Error::Domain(format!(
                "config line {}: expected key = value",
                lineno + 1
            )));
        };
        out.push((key.trim().to_string(), value.trim().to_string()));
    }
    Ok(out)
}

fn parse_format(s: &str) -> Result<Format> {
    match s {
        "table" => Ok(Format::Table),
        "csv" => Ok(Format::Csv),
        "json" => Ok(Format::Json),
        _ => Err(Error::Domain(format!("unknown format '{s}'"))),
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let settings = load_settings(&cli)?;
    let engine_cfg = EngineConfig::with_cap(settings.max_prime);
    let started = Instant::now();
    match &cli.command {
        Command::Table { count, precision } => {
            cmd_table(*count, *precision, &settings, &engine_cfg, started)
        }
        Command::Verify {
            predicate,
            from,
            to,
            preset,
            full,
            resume,
            checkpoint_interval,
            farhadian_floor,
            out,
        } => cmd_verify(VerifyArgs {
            predicate: predicate.clone(),
            from: *from,
            to: *to,
            preset: preset.clone(),
            full: *full,
            resume: *resume,
            checkpoint_interval: *checkpoint_interval,
            farhadian_floor: *farhadian_floor,
            out: out.clone(),
            settings: &settings,
            engine_cfg: &engine_cfg,
            started,
        }),
        Command::Crossover { inequality, lo, hi } => {
            cmd_crossover(inequality, *lo, *hi, &settings, started)
        }
        Command::Stats { stat } => cmd_stats(stat, &settings, &engine_cfg, started),
        Command::Chain { to } => cmd_chain(*to, &settings, &engine_cfg, started),
        Command::Simulate { limit, seed } => cmd_simulate(*limit, *seed, &settings, started),
        Command::Dump { what } => cmd_dump(what, &settings, &engine_cfg, started),
        Command::List => cmd_list(),
    }
}

// ---------------------------------------------------------------------------
// table
// ---------------------------------------------------------------------------

fn cmd_table(
    count: u64,
    precision: u8,
    settings: &Settings,
    engine_cfg: &EngineConfig,
    started: Instant,
) -> Result<ExitCode> {
    if count < 1 {
        return Err(Error::Domain("table needs count >= 1".into()));
    }
    if !(1..=15).contains(&precision) {
        return Err(Error::Domain("table precision must be in 1..15".into()));
    }
    let last = engine::nth_prime(count, engine_cfg)?;
    let primes = engine::primes_up_to(last, engine_cfg)?;
    let prec = precision as usize;
    let rows: Vec<(u64, u64, String)> = primes
        .iter()
        .enumerate()
        .map(|(i, &p)| {
            let n = i as u64 + 1;
            let root = (p as f64).powf(1.0 / n as f64);
            (n, p, format!("{root:.prec$}"))
        })
        .collect();
    match settings.format.unwrap_or(Format::Table) {
        Format::Table => {
            println!("{:>6} {:>12} {:>12}", "n", "p_n", "p_n^(1/n)");
            for (n, p, root) in &rows {
                println!("{n:>6} {p:>12} {root:>12}");
            }
        }
        Format::Csv => {
            let mut csv = Csv::new("n,p_n,root");
            for (n, p, root) in &rows {
                csv.row(&[n.to_string(), p.to_string(), root.clone()]);
            }
            print!("{}", csv.finish());
        }
        Format::Json => {
            let rows: Vec<_> = rows
                .iter()
                .map(|(n, p, root)| json!({"n": n, "p_n": p, "root": root}))
                .collect();
            println!(
                "{}",
                json_report(
                    "table",
                    json!({"count": count, "precision": precision}),
                    json!({"rows": rows}),
                    started
                )
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyArgs<'a> {
    predicate: Option<String>,
    from: Option<u64>,
    to: Option<u64>,
    preset: Option<String>,
    full: bool,
    resume: bool,
    checkpoint_interval: Option<u64>,
    farhadian_floor: bool,
    out: Option<PathBuf>,
    settings: &'a Settings,
    engine_cfg: &'a EngineConfig,
    started: Instant,
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode> {
    let ctx = EvalContext {
        engine: args.engine_cfg.clone(),
        farhadian_floor: args.farhadian_floor,
        ..EvalContext::default()
    };

    let report = if args.resume {
        if args.predicate.is_some()
            || args.from.is_some()
            || args.to.is_some()
            || args.preset.is_some()
        {
            return Err(Error::Domain(
                "--resume takes the range from the checkpoint; drop predicate/--from/--to/--preset"
                    .into(),
            ));
        }
        let Some(path) = &args.settings.checkpoint else {
            return Err(Error::Domain("--resume needs --checkpoint PATH".into()));
        };
        campaigns::resume_campaign(path, args.settings.workers, &ctx)?
    } else {
        let mut config = match (&args.preset, &args.predicate) {
            (Some(preset), predicate) => {
                let preset = PresetId::parse(preset)?;
                let config = campaigns::expand_preset(preset, args.full);
                if let Some(p) = predicate {
                    let given = PredicateId::parse(p)?;
                    if given != config.predicate {
                        return Err(Error::Domain(format!(
                            "preset {preset} verifies '{}', not '{given}'",
                            config.predicate
                        )));
                    }
                }
                if args.from.is_some() || args.to.is_some() {
                    return Err(Error::Domain(
                        "give either --preset or --from/--to, not both".into(),
                    ));
                }
                config
            }
            (None, Some(predicate)) => {
                let id = PredicateId::parse(predicate)?;
                let (Some(from), Some(to)) = (args.from, args.to) else {
                    return Err(Error::Domain(
                        "verify needs --from and --to (or --preset)".into(),
                    ));
                };
                CampaignConfig::new(id, from, to)
            }
            (None, None) => {
                return Err(Error::Domain("verify needs a predicate id".into()));
            }
        };
        config.workers = args.settings.workers;
        config.checkpoint_path = args.settings.checkpoint.clone();
        if let Some(iv) = args.checkpoint_interval {
            config.checkpoint_interval = iv.max(1);
        }
        campaigns::run_campaign(&config, &ctx)?
    };

    let rendered = render_verify(
        &report,
        args.settings.format.unwrap_or(Format::Table),
        args.started,
    );
    print!("{rendered}");
    if let Some(out) = &args.out {
        std::fs::write(out, &rendered)?;
    }
    Ok(if !report.fails.is_empty() {
        ExitCode::from(2)
    } else if !report.inconclusive.is_empty() {
        ExitCode::from(3)
    } else {
        ExitCode::SUCCESS
    })
}

fn render_verify(report: &CampaignReport, format: Format, started: Instant) -> String {
    match format {
        Format::Table => {
            let mut s = String::new();
            s.push_str(&format!(
                "predicate: {}\nrange: {}..{}\nverified: {}  holds: {}  fails: {}  inconclusive: {}\n",
                report.predicate,
                report.from_n,
                report.to_n,
                report.verified_count,
                report.holds_count,
                report.fails.len(),
                report.inconclusive.len()
            ));
            for (n, v) in &report.fails {
                s.push_str(&format!(
                    "FAIL n={n} lhs={} rhs={} margin={} tier={}{}{}\n",
                    num(v.lhs_estimate),
                    num(v.rhs_estimate),
                    num(v.margin),
                    v.tier,
                    if v.below_domain { " below-domain" } else { "" },
                    v.detail
                        .as_deref()
                        .map(|d| format!(" ({d})"))
                        .unwrap_or_default(),
                ));
            }
            for (n, v) in &report.inconclusive {
                s.push_str(&format!(
                    "INCONCLUSIVE n={n} lhs={} rhs={}\n",
                    num(v.lhs_estimate),
                    num(v.rhs_estimate)
                ));
            }
            s.push_str(&format!(
                "status: {}\n",
                if report.is_clean() { "clean" } else { "dirty" }
            ));
            s
        }
        Format::Csv => {
            let mut csv = Csv::new("n,outcome,lhs,rhs,margin,tier");
            for (n, v) in &report.fails {
                csv.row(&[
                    n.to_string(),
                    "fails".into(),
                    num(v.lhs_estimate),
                    num(v.rhs_estimate),
                    num(v.margin),
                    v.tier.to_string(),
                ]);
            }
            for (n, v) in &report.inconclusive {
                csv.row(&[
                    n.to_string(),
                    "inconclusive".into(),
                    num(v.lhs_estimate),
                    num(v.rhs_estimate),
                    num(v.margin),
                    v.tier.to_string(),
                ]);
            }
            csv.finish()
        }
        Format::Json => {
            let canonical: serde_json::Value =
                serde_json::from_str(&report.canonical_json()).expect("canonical json parses");
            let mut s = json_report(
                "verify",
                json!({
                    "predicate": report.predicate,
                    "from_n": report.from_n,
                    "to_n": report.to_n,
                    "workers": report.workers,
                    "resumed_from": report.resumed_from,
                }),
                canonical,
                started,
            );
            s.push('\n');
            s
        }
    }
}

// ---------------------------------------------------------------------------
// crossover
// ---------------------------------------------------------------------------

fn cmd_crossover(
    inequality: &str,
    lo: u64,
    hi: u64,
    settings: &Settings,
    started: Instant,
) -> Result<ExitCode> {
    let id = AnalyticInequalityId::parse(inequality)?;
    let policy = gapkit::PrecisionPolicy::default();
    let result = analysis::find_crossover(id, lo, hi, &policy)?;
    match settings.format.unwrap_or(Format::Table) {
        Format::Table => {
            println!("{}", result.threshold_found);
        }
        Format::Csv => {
            let mut csv = Csv::new("inequality,threshold,last_failure,scan_lo,scan_hi");
            csv.row(&[
                id.as_str().to_string(),
                result.threshold_found.to_string(),
                result
                    .last_failure
                    .map(|v| v.to_string())
                    .unwrap_or_default(),
                result.scan_lo.to_string(),
                result.scan_hi.to_string(),
            ]);
            print!("{}", csv.finish());
        }
        Format::Json => {
            println!(
                "{}",
                json_report(
                    "crossover",
                    json!({"inequality": id.as_str(), "lo": lo, "hi": hi}),
                    serde_json::to_value(&result).expect("serializable"),
                    started
                )
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// stats
// ---------------------------------------------------------------------------

fn cmd_stats(
    stat: &StatsCommand,
    settings: &Settings,
    engine_cfg: &EngineConfig,
    started: Instant,
) -> Result<ExitCode> {
    match stat {
        StatsCommand::Records { to } => {
            let records = analysis::gap_records(*to, engine_cfg)?;
            match settings.format.unwrap_or(Format::Table) {
                Format::Table => {
                    println!("{:>10} {:>12} {:>12} {:>6}", "n", "p_n", "p_next", "gap");
                    for r in &records {
                        println!("{:>10} {:>12} {:>12} {:>6}", r.n, r.p_n, r.p_next, r.gap);
                    }
                }
                Format::Csv => {
                    let mut csv = Csv::new("n,p_n,p_next,gap");
                    for r in &records {
                        csv.row(&[
                            r.n.to_string(),
                            r.p_n.to_string(),
                            r.p_next.to_string(),
                            r.gap.to_string(),
                        ]);
                    }
                    print!("{}", csv.finish());
                }
                Format::Json => println!(
                    "{}",
                    json_report(
                        "stats/records",
                        json!({"to": to}),
                        serde_json::to_value(&records).expect("serializable"),
                        started
                    )
                ),
            }
        }
        StatsCommand::CramerRatio { to } => {
            let report = analysis::cramer_ratio_stats(*to, engine_cfg)?;
            match settings.format.unwrap_or(Format::Table) {
                Format::Table => {
                    println!(
                        "max ratio {} at n={} (p_n={}, gap={})",
                        num(report.max.ratio),
                        report.max.n,
                        report.max.p_n,
                        report.max.gap
                    );
                    println!(
                        "references: model limsup = 1, refined-model constant = {}",
                        num(report.reference_granville)
                    );
                    for r in &report.improvements {
                        println!("{:>10} {:>12} {:>6} {}", r.n, r.p_n, r.gap, num(r.ratio));
                    }
                }
                Format::Csv => {
                    let mut csv = Csv::new("n,p_n,gap,ratio");
                    for r in &report.improvements {
                        csv.row(&[
                            r.n.to_string(),
                            r.p_n.to_string(),
                            r.gap.to_string(),
                            num(r.ratio),
                        ]);
                    }
                    print!("{}", csv.finish());
                }
                Format::Json => println!(
                    "{}",
                    json_report(
                        "stats/cramer-ratio",
                        json!({"to": to}),
                        serde_json::to_value(&report).expect("serializable"),
                        started
                    )
                ),
            }
        }
        StatsCommand::Zhang { to } => {
            let report = analysis::zhang_subsequence_stat(*to, engine_cfg)?;
            match settings.format.unwrap_or(Format::Table) {
                Format::Table => {
                    println!(
                        "min gap {} over n in [2, {}]; {} indices, {} with positive delta ({}%)",
                        report.min_gap,
                        report.to_n,
                        report.entries.len(),
                        report.positive_count,
                        num(100.0 * report.positive_fraction)
                    );
                    if let Some(n0) = report.increasing_from_n {
                        println!("delta strictly increasing from n = {n0} onward");
                    }
                }
                Format::Csv => {
                    let mut csv = Csv::new("n,gap,delta");
                    for e in &report.entries {
                        csv.row(&[e.n.to_string(), e.gap.to_string(), num(e.delta)]);
                    }
                    print!("{}", csv.finish());
                }
                Format::Json => println!(
                    "{}",
                    json_report(
                        "stats/zhang",
                        json!({"to": to}),
                        serde_json::to_value(&report).expect("serializable"),
                        started
                    )
                ),
            }
        }
        StatsCommand::Maier { x, lambda } => {
            let w = analysis::maier_window_counts(*x, *lambda, engine_cfg)?;
            match settings.format.unwrap_or(Format::Table) {
                Format::Table => {
                    println!(
                        "window ({}, {}]: {} primes; normalizer ln(x)^(lambda-1) = {}",
                        num(w.x),
                        num(w.x + w.window_width),
                        w.count,
                        num(w.normalizer)
                    );
                }
                Format::Csv => {
                    let mut csv = Csv::new("x,lambda,count,normalizer");
                    csv.row(&[
                        num(w.x),
                        num(w.lambda),
                        w.count.to_string(),
                        num(w.normalizer),
                    ]);
                    print!("{}", csv.finish());
                }
                Format::Json => println!(
                    "{}",
                    json_report(
                        "stats/maier",
                        json!({"x": x, "lambda": lambda}),
                        serde_json::to_value(&w).expect("serializable"),
                        started
                    )
                ),
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// chain
// ---------------------------------------------------------------------------

fn cmd_chain(
    to: u64,
    settings: &Settings,
    engine_cfg: &EngineConfig,
    started: Instant,
) -> Result<ExitCode> {
    let ctx = EvalContext {
        engine: engine_cfg.clone(),
        ..EvalContext::default()
    };
    let report = analysis::chain_audit(to, &ctx)?;
    match settings.format.unwrap_or(Format::Table) {
        Format::Table => {
            println!("{} violations", report.violations.len());
            for v in &report.violations {
                println!(
                    "n={} {} holds but {} fails",
                    v.n, v.antecedent, v.consequent
                );
            }
        }
        Format::Csv => {
            let mut csv = Csv::new("n,antecedent,consequent");
            for v in &report.violations {
                csv.row(&[
                    v.n.to_string(),
                    v.antecedent.to_string(),
                    v.consequent.to_string(),
                ]);
            }
            print!("{}", csv.finish());
        }
        Format::Json => println!(
            "{}",
            json_report(
                "chain",
                json!({"to": to}),
                serde_json::to_value(&report).expect("serializable"),
                started
            )
        ),
    }
    Ok(if report.violations.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    })
}

// ---------------------------------------------------------------------------
// simulate
// ---------------------------------------------------------------------------

fn cmd_simulate(limit: u64, seed: u64, settings: &Settings, started: Instant) -> Result<ExitCode> {
    let sample = cramer::simulate(limit, seed)?;
    // A sample dump is machine-oriented: json unless asked otherwise.
    match settings.format.unwrap_or(Format::Json) {
        Format::Table => {
            println!(
                "seed {} limit {}: {} members, max gap {}, max ratio {}",
                sample.seed,
                sample.limit,
                sample.pseudo_prime_count,
                sample.max_gap,
                num(sample.max_ratio)
            );
        }
        Format::Csv => {
            let mut csv = Csv::new("left,gap,ratio");
            for p in &sample.ratio_trace {
                csv.row(&[p.left.to_string(), p.gap.to_string(), num(p.ratio)]);
            }
            print!("{}", csv.finish());
        }
        Format::Json => {
            println!(
                "{}",
                json_report(
                    "simulate",
                    json!({"limit": limit, "seed": seed}),
                    json!({
                        "sample": serde_json::to_value(&sample).expect("serializable"),
                        "expected_count": cramer::expected_pseudo_prime_count(limit),
                    }),
                    started
                )
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// dump
// ---------------------------------------------------------------------------

fn cmd_dump(
    what: &DumpCommand,
    settings: &Settings,
    engine_cfg: &EngineConfig,
    started: Instant,
) -> Result<ExitCode> {
    match what {
        DumpCommand::Primes { limit } => {
            let primes = engine::primes_up_to(*limit, engine_cfg)?;
            match settings.format.unwrap_or(Format::Csv) {
                Format::Json => println!(
                    "{}",
                    json_report(
                        "dump/primes",
                        json!({"limit": limit}),
                        json!({"primes": primes}),
                        started
                    )
                ),
                _ => {
                    let mut csv = Csv::new("p");
                    for p in primes {
                        csv.row(&[p.to_string()]);
                    }
                    print!("{}", csv.finish());
                }
            }
        }
        DumpCommand::Gaps { from, to } => {
            let records: Vec<_> = engine::gap_stream(*from, *to, engine_cfg)?.collect();
            match settings.format.unwrap_or(Format::Csv) {
                Format::Json => println!(
                    "{}",
                    json_report(
                        "dump/gaps",
                        json!({"from": from, "to": to}),
                        serde_json::to_value(&records).expect("serializable"),
                        started
                    )
                ),
                _ => {
                    let mut csv = Csv::new("n,p_n,p_next,gap");
                    for r in records {
                        csv.row(&[
                            r.n.to_string(),
                            r.p_n.to_string(),
                            r.p_next.to_string(),
                            r.gap.to_string(),
                        ]);
                    }
                    print!("{}", csv.finish());
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// list
// ---------------------------------------------------------------------------

fn cmd_list() -> Result<ExitCode> {
    println!("predicates:");
    for id in PredicateId::ALL {
        let spec = id.spec();
        println!(
            "  {:<20} n_min={:<8} {}",
            id.as_str(),
            spec.n_min,
            spec.formula
        );
    }
    println!("analytic inequalities (crossover):");
    for id in AnalyticInequalityId::ALL {
        println!(
            "  {:<20} claimed threshold {}",
            id.as_str(),
            id.claimed_threshold()
        );
    }
    println!("presets:");
    for preset in PresetId::ALL {
        let cfg = campaigns::expand_preset(preset, false);
        println!(
            "  {:<20} {} over {}..{}",
            preset.as_str(),
            cfg.predicate,
            cfg.from_n,
            cfg.to_n
        );
    }
    Ok(ExitCode::SUCCESS)
}
