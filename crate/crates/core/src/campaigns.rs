//! Range-verification campaigns: evaluate one predicate over an index
//! range with worker partitioning, atomic checkpoints, and counterexample
//! collection. Ships presets for the finite ranges that get delegated to
//! computer verification.
//!
//! Reports are deterministic for a fixed range regardless of worker count:
//! evaluation is pure per index and results merge in chunk order.

use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering as AtomicOrdering};
use std::sync::mpsc;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::engine;
use crate::error::{Error, Result};
use crate::kernel::{Outcome, Verdict};
use crate::predicates::{self, Arity, EvalContext, PredicateId};

pub const DEFAULT_CHECKPOINT_INTERVAL: u64 = 1_000_000;

/// A systematic failure signals an implementation bug, not mathematics.
const MAX_FAILURES: usize = 1000;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CampaignConfig {
    pub predicate: PredicateId,
    pub from_n: u64,
    pub to_n: u64,
    pub workers: usize,
    pub checkpoint_path: Option<PathBuf>,
    pub checkpoint_interval: u64,
}

impl CampaignConfig {
    pub fn new(predicate: PredicateId, from_n: u64, to_n: u64) -> CampaignConfig {
        CampaignConfig {
            predicate,
            from_n,
            to_n,
            workers: 1,
            checkpoint_path: None,
            checkpoint_interval: DEFAULT_CHECKPOINT_INTERVAL,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.from_n == 0 || self.from_n > self.to_n {
            return Err(Error::Domain(format!(
                "campaign range [{}, {}] invalid",
                self.from_n, self.to_n
            )));
        }
        if self.workers == 0 {
            return Err(Error::Domain("campaign needs at least one worker".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CampaignReport {
    pub predicate: PredicateId,
    pub from_n: u64,
    pub to_n: u64,
    pub workers: usize,
    pub verified_count: u64,
    pub holds_count: u64,
    pub fails: Vec<(u64, Verdict)>,
    pub inconclusive: Vec<(u64, Verdict)>,
    pub wall_time_ms: u128,
    pub resumed_from: Option<String>,
}

impl CampaignReport {
    /// Zero counterexamples and zero inconclusive verdicts.
    pub fn is_clean(&self) -> bool {
        self.fails.is_empty() && self.inconclusive.is_empty()
    }

    /// Canonical serialization for determinism comparisons: excludes
    /// timing, worker count, and resume lineage.
    pub fn canonical_json(&self) -> String {
        let v = serde_json::json!({
            "schema_version": 1,
            "predicate": self.predicate,
            "from_n": self.from_n,
            "to_n": self.to_n,
            "verified_count": self.verified_count,
            "holds_count": self.holds_count,
            "fails": self.fails,
            "inconclusive": self.inconclusive,
        });
        v.to_string()
    }
}

// ---------------------------------------------------------------------------
// Presets
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PresetId {
    /// gap-log2-minus1 over 10..=133114.
    Thm22Residual,
    /// gap-sqrt-index over 3645..=411780.
    Lem32Residual,
    /// sierpinski-rows over 2..=34122 (soft sub-cap 5000 by default).
    SierpinskiResidual,
    /// oppermann over 2..=74.
    OppermannSmall,
    /// andrica over 1..=9.
    AndricaSmall,
}

impl PresetId {
    pub const ALL: [PresetId; 5] = [
        PresetId::Thm22Residual,
        PresetId::Lem32Residual,
        PresetId::SierpinskiResidual,
        PresetId::OppermannSmall,
        PresetId::AndricaSmall,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PresetId::Thm22Residual => "thm22-residual",
            PresetId::Lem32Residual => "lem32-residual",
            PresetId::SierpinskiResidual => "sierpinski-residual",
            PresetId::OppermannSmall => "oppermann-small",
            PresetId::AndricaSmall => "andrica-small",
        }
    }

    pub fn parse(s: &str) -> Result<PresetId> {
        PresetId::ALL
            .iter()
            .copied()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| Error::UnknownId(format!("preset '{s}'")))
    }
}

impl std::fmt::Display for PresetId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Expand a preset to its campaign range. The Sierpinski residual defaults
/// to a 2..=5000 sub-cap; `full` runs the whole 2..=34122 range, a
/// minutes-scale job needing primes to ~1.165e9.
pub fn expand_preset(id: PresetId, full: bool) -> CampaignConfig {
    match id {
        PresetId::Thm22Residual => CampaignConfig::new(PredicateId::GapLog2Minus1, 10, 133_114),
        PresetId::Lem32Residual => CampaignConfig::new(PredicateId::GapSqrtIndex, 3645, 411_780),
        PresetId::SierpinskiResidual => CampaignConfig::new(
            PredicateId::SierpinskiRows,
            2,
            if full { 34_122 } else { 5000 },
        ),
        PresetId::OppermannSmall => CampaignConfig::new(PredicateId::Oppermann, 2, 74),
        PresetId::AndricaSmall => CampaignConfig::new(PredicateId::Andrica, 1, 9),
    }
}

// ---------------------------------------------------------------------------
// Checkpoints
// ---------------------------------------------------------------------------

#[derive(Debug, Serialize, Deserialize)]
struct CheckpointFile {
    schema_version: u32,
    predicate: String,
    from_n: u64,
    to_n: u64,
    verified_up_to: u64,
    fails: Vec<CheckpointFail>,
    updated_at: String,
}

#[derive(Debug, Serialize, Deserialize)]
struct CheckpointFail {
    n: u64,
    lhs: f64,
    rhs: f64,
}

fn write_checkpoint(
    path: &Path,
    config: &CampaignConfig,
    verified_up_to: u64,
    fails: &[(u64, Verdict)],
) -> Result<()> {
    let file = CheckpointFile {
        schema_version: 1,
        predicate: config.predicate.as_str().to_string(),
        from_n: config.from_n,
        to_n: config.to_n,
        verified_up_to,
        fails: fails
            .iter()
            .map(|(n, v)| CheckpointFail {
                n: *n,
                lhs: v.lhs_estimate,
                rhs: v.rhs_estimate,
            })
            .collect(),
        updated_at: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true),
    };
    let tmp = path.with_extension("tmp");
    std::fs::write(&tmp, serde_json::to_string_pretty(&file)?)?;
    std::fs::rename(&tmp, path)?;
    Ok(())
}

fn read_checkpoint(path: &Path) -> Result<CheckpointFile> {
    let raw = std::fs::read_to_string(path)
        .map_err(|e| Error::Checkpoint(format!("cannot read {}: {e}", path.display())))?;
    let file: CheckpointFile = serde_json::from_str(&raw)
        .map_err(|e| Error::Checkpoint(format!("cannot parse {}: {e}", path.display())))?;
    if file.schema_version != 1 {
        return Err(Error::Checkpoint(format!(
            "unsupported schema_version {}",
            file.schema_version
        )));
    }
    if file.from_n == 0 || file.from_n > file.to_n {
        return Err(Error::Checkpoint("inconsistent range".into()));
    }
    if file.verified_up_to + 1 < file.from_n || file.verified_up_to > file.to_n {
        return Err(Error::Checkpoint(format!(
            "verified_up_to {} outside [{}, {}]",
            file.verified_up_to,
            file.from_n - 1,
            file.to_n
        )));
    }
    Ok(file)
}

// ---------------------------------------------------------------------------
// Evaluation of one contiguous chunk
// ---------------------------------------------------------------------------

#[derive(Debug, Default)]
struct ChunkOutcome {
    holds: u64,
    fails: Vec<(u64, Verdict)>,
    inconclusive: Vec<(u64, Verdict)>,
}

impl ChunkOutcome {
    fn tally(&mut self, n: u64, v: Verdict) {
        match v.outcome {
            Outcome::Holds => self.holds += 1,
            Outcome::Fails => self.fails.push((n, v)),
            Outcome::Inconclusive => self.inconclusive.push((n, v)),
        }
    }
}

fn evaluate_chunk(
    predicate: PredicateId,
    from: u64,
    to: u64,
    ctx: &EvalContext,
) -> Result<ChunkOutcome> {
    let mut out = ChunkOutcome::default();
    match predicate.spec().arity {
        Arity::Index => {
            for rec in engine::gap_stream(from, to, &ctx.engine)? {
                let v = predicates::evaluate_on_record(predicate, &rec, ctx)?;
                out.tally(rec.n, v);
            }
        }
        Arity::Real => {
            // Stream pi(x) alongside x rather than recounting per point.
            let mut pi = engine::prime_count(from.saturating_sub(1), &ctx.engine)?;
            let mut primes = engine::primes_from(from.max(2), &ctx.engine).peekable();
            for x in from..=to {
                while primes.peek().is_some_and(|&p| p <= x) {
                    primes.next();
                    pi += 1;
                }
                let v = predicates::axler_verdict_with_pi(x, pi, ctx)?;
                out.tally(x, v);
            }
        }
        Arity::Interval => match predicate {
            PredicateId::SierpinskiRows => {
                let (holds, fails) = predicates::sierpinski_block(from, to, &ctx.engine)?;
                out.holds = holds;
                out.fails = fails;
            }
            PredicateId::Brocard => {
                for rec in engine::gap_stream(from, to, &ctx.engine)? {
                    let v = predicates::brocard_on_record(&rec, ctx)?;
                    out.tally(rec.n, v);
                }
            }
            _ => {
                for n in from..=to {
                    let v = predicates::evaluate_interval_predicate(predicate, n, ctx)?;
                    out.tally(n, v);
                }
            }
        },
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Runner
// ---------------------------------------------------------------------------

/// Run a campaign from scratch.
pub fn run_campaign(config: &CampaignConfig, ctx: &EvalContext) -> Result<CampaignReport> {
    run_internal(config, ctx, None)
}

/// Continue a campaign from its checkpoint file. The final report is
/// identical (canonically) to an uninterrupted run; recorded failures are
/// re-evaluated so their verdicts carry full detail.
pub fn resume_campaign(
    checkpoint_path: &Path,
    workers: usize,
    ctx: &EvalContext,
) -> Result<CampaignReport> {
    let file = read_checkpoint(checkpoint_path)?;
    let predicate = PredicateId::parse(&file.predicate)
        .map_err(|_| Error::Checkpoint(format!("unknown predicate '{}'", file.predicate)))?;
    let config = CampaignConfig {
        predicate,
        from_n: file.from_n,
        to_n: file.to_n,
        workers: workers.max(1),
        checkpoint_path: Some(checkpoint_path.to_path_buf()),
        checkpoint_interval: DEFAULT_CHECKPOINT_INTERVAL,
    };
    let mut prior_fails = Vec::with_capacity(file.fails.len());
    for f in &file.fails {
        let v = evaluate_any(predicate, f.n, ctx)?;
        if v.outcome != Outcome::Fails {
            return Err(Error::Checkpoint(format!(
                "recorded failure at n = {} does not fail on re-evaluation",
                f.n
            )));
        }
        prior_fails.push((f.n, v));
    }
    let resume = ResumeState {
        verified_up_to: file.verified_up_to,
        fails: prior_fails,
        id: format!("{}@{}", checkpoint_path.display(), file.verified_up_to),
    };
    run_internal(&config, ctx, Some(resume))
}

/// Evaluate any predicate at a single point, dispatching on arity.
pub fn evaluate_any(id: PredicateId, n: u64, ctx: &EvalContext) -> Result<Verdict> {
    match id.spec().arity {
        Arity::Index => predicates::evaluate_index_predicate(id, n, ctx),
        Arity::Real => predicates::evaluate_real_predicate(id, n, ctx),
        Arity::Interval => predicates::evaluate_interval_predicate(id, n, ctx),
    }
}

struct ResumeState {
    verified_up_to: u64,
    fails: Vec<(u64, Verdict)>,
    id: String,
}

fn run_internal(
    config: &CampaignConfig,
    ctx: &EvalContext,
    resume: Option<ResumeState>,
) -> Result<CampaignReport> {
    config.validate()?;
    let started = Instant::now();

    let (start_n, prior_fails, resumed_from) = match resume {
        Some(r) => (r.verified_up_to + 1, r.fails, Some(r.id)),
        None => (config.from_n, Vec::new(), None),
    };

    let mut fails = prior_fails;
    let mut inconclusive: Vec<(u64, Verdict)> = Vec::new();
    let mut holds_count = (start_n - config.from_n) - fails.len() as u64;

    if start_n <= config.to_n {
        let interval = config.checkpoint_interval.max(1);
        let range = config.to_n - start_n + 1;
        let chunk_size = interval
            .min((range / (config.workers as u64 * 4)).max(1024))
            .max(1);
        let chunks: Vec<(u64, u64)> = {
            let mut v = Vec::new();
            let mut lo = start_n;
            while lo <= config.to_n {
                let hi = (lo + chunk_size - 1).min(config.to_n);
                v.push((lo, hi));
                lo = hi + 1;
            }
            v
        };

        let next = AtomicUsize::new(0);
        let (tx, rx) = mpsc::channel::<(usize, Result<ChunkOutcome>)>();
        let n_workers = config.workers.min(chunks.len());

        std::thread::scope(|scope| -> Result<()> {
            for _ in 0..n_workers {
                let tx = tx.clone();
                let chunks = &chunks;
                let next = &next;
                scope.spawn(move || loop {
                    let i = next.fetch_add(1, AtomicOrdering::SeqCst);
                    if i >= chunks.len() {
                        break;
                    }
                    let (lo, hi) = chunks[i];
                    let res = evaluate_chunk(config.predicate, lo, hi, ctx);
                    if tx.send((i, res)).is_err() {
                        break;
                    }
                });
            }
            drop(tx);

            let mut pending: Vec<Option<ChunkOutcome>> = Vec::new();
            pending.resize_with(chunks.len(), || None);
            let mut merged = 0usize;
            let mut last_checkpoint = start_n - 1;
            let mut received = 0usize;
            while received < chunks.len() {
                let (i, res) = rx.recv().expect("workers alive until all chunks sent");
                pending[i] = Some(res?);
                received += 1;
                while merged < chunks.len() {
                    let Some(chunk) = pending[merged].take() else {
                        break;
                    };
                    holds_count += chunk.holds;
                    fails.extend(chunk.fails);
                    inconclusive.extend(chunk.inconclusive);
                    if fails.len() > MAX_FAILURES {
                        return Err(Error::TooManyFailures {
                            predicate: config.predicate.as_str().to_string(),
                            count: fails.len(),
                        });
                    }
                    let frontier = chunks[merged].1;
                    merged += 1;
                    if let Some(path) = &config.checkpoint_path {
                        let done = frontier == config.to_n;
                        if done || frontier - last_checkpoint >= interval {
                            write_checkpoint(path, config, frontier, &fails)?;
                            last_checkpoint = frontier;
                        }
                    }
                }
            }
            Ok(())
        })?;
    } else if let Some(path) = &config.checkpoint_path {
        // Already complete; refresh the checkpoint idempotently.
        write_checkpoint(path, config, config.to_n, &fails)?;
    }

    let verified_count = config.to_n - config.from_n + 1;
    debug_assert_eq!(
        verified_count,
        holds_count + fails.len() as u64 + inconclusive.len() as u64
    );
    Ok(CampaignReport {
        predicate: config.predicate,
        from_n: config.from_n,
        to_n: config.to_n,
        workers: config.workers,
        verified_count,
        holds_count,
        fails,
        inconclusive,
        wall_time_ms: started.elapsed().as_millis(),
        resumed_from,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> EvalContext {
        EvalContext::default()
    }

    #[test]
    fn preset_expansion_is_exact() {
        let c = expand_preset(PresetId::Thm22Residual, false);
        assert_eq!(
            (c.predicate, c.from_n, c.to_n),
            (PredicateId::GapLog2Minus1, 10, 133_114)
        );
        let c = expand_preset(PresetId::Lem32Residual, false);
        assert_eq!(
            (c.predicate, c.from_n, c.to_n),
            (PredicateId::GapSqrtIndex, 3645, 411_780)
        );
        let c = expand_preset(PresetId::OppermannSmall, false);
        assert_eq!(
            (c.predicate, c.from_n, c.to_n),
            (PredicateId::Oppermann, 2, 74)
        );
        let c = expand_preset(PresetId::AndricaSmall, false);
        assert_eq!(
            (c.predicate, c.from_n, c.to_n),
            (PredicateId::Andrica, 1, 9)
        );
        let c = expand_preset(PresetId::SierpinskiResidual, false);
        assert_eq!(
            (c.predicate, c.from_n, c.to_n),
            (PredicateId::SierpinskiRows, 2, 5000)
        );
        assert_eq!(
            expand_preset(PresetId::SierpinskiResidual, true).to_n,
            34_122
        );
        assert!(PresetId::parse("andrica-small").is_ok());
        assert!(PresetId::parse("nope").is_err());
    }

    #[test]
    fn andrica_small_runs_clean() {
        let report = run_campaign(&expand_preset(PresetId::AndricaSmall, false), &ctx()).unwrap();
        assert_eq!(report.holds_count, 9);
        assert!(report.is_clean());
        assert_eq!(report.verified_count, 9);
    }

    #[test]
    fn firoozbakht_first_ten() {
        let report = run_campaign(
            &CampaignConfig::new(PredicateId::Firoozbakht, 1, 10),
            &ctx(),
        )
        .unwrap();
        assert_eq!(report.holds_count, 10);
        assert!(report.is_clean());
    }

    #[test]
    fn axler_real_arity_streams_pi() {
        // The real-arity chunk path keeps a running prime count; it must
        // agree with a direct single-point evaluation.
        let cx = ctx();
        let report = run_campaign(
            &CampaignConfig::new(PredicateId::Axler, 1_772_201, 1_772_300),
            &cx,
        )
        .unwrap();
        assert!(report.is_clean());
        assert_eq!(report.holds_count, 100);
        let single =
            crate::predicates::evaluate_real_predicate(PredicateId::Axler, 1_772_300, &cx).unwrap();
        assert!(single.holds());
    }

    #[test]
    fn below_domain_probe_counts_as_fail() {
        let report = run_campaign(
            &CampaignConfig::new(PredicateId::GapLog2Minus1, 9, 9),
            &ctx(),
        )
        .unwrap();
        assert_eq!(report.fails.len(), 1);
        assert_eq!(report.fails[0].0, 9);
        assert!(report.fails[0].1.below_domain);
    }

    #[test]
    fn worker_counts_agree() {
        let mut reports = Vec::new();
        for workers in [1usize, 2, 8] {
            let mut cfg = CampaignConfig::new(PredicateId::Rosser, 1, 5000);
            cfg.workers = workers;
            reports.push(run_campaign(&cfg, &ctx()).unwrap().canonical_json());
        }
        assert_eq!(reports[0], reports[1]);
        assert_eq!(reports[0], reports[2]);
    }

    #[test]
    fn sierpinski_block_partitioning_is_invariant() {
        // The row scan runs per block; block boundaries must not change
        // any verdict.
        let mut reports = Vec::new();
        for workers in [1usize, 8] {
            let mut cfg = CampaignConfig::new(PredicateId::SierpinskiRows, 2, 3000);
            cfg.workers = workers;
            reports.push(run_campaign(&cfg, &ctx()).unwrap().canonical_json());
        }
        assert_eq!(reports[0], reports[1]);
    }

    #[test]
    fn checkpoint_resume_matches_uninterrupted() {
        let dir = tempfile::tempdir().unwrap();
        let cp = dir.path().join("rosser.ckpt");

        // Uninterrupted reference.
        let full = run_campaign(&CampaignConfig::new(PredicateId::Rosser, 1, 4000), &ctx())
            .unwrap()
            .canonical_json();

        // Simulate a kill at n = 1500 by writing the checkpoint a run would
        // have left behind, then resuming.
        let cfg = CampaignConfig {
            checkpoint_path: Some(cp.clone()),
            ..CampaignConfig::new(PredicateId::Rosser, 1, 4000)
        };
        write_checkpoint(&cp, &cfg, 1500, &[]).unwrap();
        let resumed = resume_campaign(&cp, 2, &ctx()).unwrap();
        assert_eq!(resumed.canonical_json(), full);
        assert!(resumed.resumed_from.is_some());

        // Resuming a complete checkpoint returns the same report unchanged.
        let resumed_again = resume_campaign(&cp, 1, &ctx()).unwrap();
        assert_eq!(resumed_again.canonical_json(), full);
    }

    #[test]
    fn corrupt_checkpoints_are_parse_errors() {
        let dir = tempfile::tempdir().unwrap();
        let cp = dir.path().join("bad.ckpt");
        std::fs::write(&cp, "{\"schema_version\": 1, \"predicate\": \"rosser\"").unwrap();
        assert!(matches!(
            resume_campaign(&cp, 1, &ctx()),
            Err(Error::Checkpoint(_))
        ));
        std::fs::write(
            &cp,
            serde_json::json!({
                "schema_version": 9,
                "predicate": "rosser",
                "from_n": 1,
                "to_n": 10,
                "verified_up_to": 5,
                "fails": [],
                "updated_at": "2020-01-01T00:00:00Z"
            })
            .to_string(),
        )
        .unwrap();
        assert!(matches!(
            resume_campaign(&cp, 1, &ctx()),
            Err(Error::Checkpoint(_))
        ));
    }

    #[test]
    fn checkpoint_written_during_run() {
        let dir = tempfile::tempdir().unwrap();
        let cp = dir.path().join("run.ckpt");
        let cfg = CampaignConfig {
            checkpoint_path: Some(cp.clone()),
            checkpoint_interval: 500,
            ..CampaignConfig::new(PredicateId::Rosser, 1, 2000)
        };
        let report = run_campaign(&cfg, &ctx()).unwrap();
        assert!(report.is_clean());
        let file = read_checkpoint(&cp).unwrap();
        assert_eq!(file.verified_up_to, 2000);
        assert_eq!(file.predicate, "rosser");
    }

    #[test]
    fn fails_recorded_with_witnesses() {
        // gap-sqrt-index fails at n = 217 (gap 34 after 1327).
        let report = run_campaign(
            &CampaignConfig::new(PredicateId::GapSqrtIndex, 210, 230),
            &ctx(),
        )
        .unwrap();
        assert!(report.fails.iter().any(|(n, _)| *n == 217));
    }
}
