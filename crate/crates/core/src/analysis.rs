//! Crossover finders for the auxiliary calculus inequalities, gap-record
//! and ratio statistics, the implication-chain audit, the minimal-gap
//! subsequence statistic, and short-interval prime counts.

use serde::{Deserialize, Serialize};

use crate::engine::{self, EngineConfig, GapRecord};
use crate::error::{Error, Result};
use crate::kernel::{decide_inequality, expr::Expr, Outcome, PrecisionPolicy};
use crate::predicates::{self, EvalContext, PredicateId};

/// Euler-Mascheroni constant to 20 significant digits. Display-only: it
/// feeds a reference line, never a verdict.
#[allow(clippy::excessive_precision)] // stated to 20 significant digits; f64 rounds
pub const EULER_MASCHERONI: f64 = 0.57721566490153286061;

/// Reference constant 2e^(-gamma) ≈ 1.1229 for the refined random model.
pub fn granville_constant() -> f64 {
    2.0 * (-EULER_MASCHERONI).exp()
}

// ---------------------------------------------------------------------------
// Analytic crossovers
// ---------------------------------------------------------------------------

/// Auxiliary inequalities in one real variable, scanned over integers.
/// Each carries the claimed threshold for cross-checking.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AnalyticInequalityId {
    /// (x+ln²x)/(ln x-1-1/ln x) < x/(ln x-1-1/ln x-1/ln²x), from x = 285967.
    AAxlerStep,
    /// ln²(n²)-ln(n²)-1 <= sqrt(n), from n = 411781.
    ASqrtN,
    /// x > ln²(x²+x), from x = 75.
    AOppermann,
    /// ln²x-ln x-1 < 2 sqrt(x)+1, from x = 1.
    AAndrica,
}

impl AnalyticInequalityId {
    pub const ALL: [AnalyticInequalityId; 4] = [
        AnalyticInequalityId::AAxlerStep,
        AnalyticInequalityId::ASqrtN,
        AnalyticInequalityId::AOppermann,
        AnalyticInequalityId::AAndrica,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            AnalyticInequalityId::AAxlerStep => "a-axler-step",
            AnalyticInequalityId::ASqrtN => "a-sqrt-n",
            AnalyticInequalityId::AOppermann => "a-oppermann",
            AnalyticInequalityId::AAndrica => "a-andrica",
        }
    }

    pub fn parse(s: &str) -> Result<AnalyticInequalityId> {
        AnalyticInequalityId::ALL
            .iter()
            .copied()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::UnknownId(format!("analytic inequality '{s}'")))
    }

    /// The threshold claimed in the source material, for cross-checks.
    pub fn claimed_threshold(self) -> u64 {
        match self {
            AnalyticInequalityId::AAxlerStep => 285_967,
            AnalyticInequalityId::ASqrtN => 411_781,
            AnalyticInequalityId::AOppermann => 75,
            AnalyticInequalityId::AAndrica => 1,
        }
    }

    fn formula(self, x: u64) -> Result<(Expr, Expr, bool)> {
        let xe = Expr::uint(x);
        Ok(match self {
            AnalyticInequalityId::AAxlerStep => {
                let ln = xe.clone().ln();
                let base = ln.clone() - Expr::int(1) - Expr::int(1) / ln.clone();
                let lhs = (xe.clone() + xe.clone().ln_sq()) / base.clone();
                let rhs = xe.clone() / (base - Expr::int(1) / xe.ln_sq());
                (lhs, rhs, true)
            }
            AnalyticInequalityId::ASqrtN => {
                let sq = x
                    .checked_mul(x)
                    .ok_or_else(|| Error::Domain(format!("n² overflows at n = {x}")))?;
                let n2 = Expr::uint(sq);
                let lhs = n2.clone().ln_sq() - n2.ln() - Expr::int(1);
                (lhs, xe.sqrt(), false)
            }
            AnalyticInequalityId::AOppermann => {
                let arg = x
                    .checked_mul(x)
                    .and_then(|s| s.checked_add(x))
                    .ok_or_else(|| Error::Domain(format!("x²+x overflows at x = {x}")))?;
                (Expr::uint(arg).ln_sq(), xe, true)
            }
            AnalyticInequalityId::AAndrica => {
                let lhs = xe.clone().ln_sq() - xe.clone().ln() - Expr::int(1);
                let rhs = Expr::int(2) * xe.sqrt() + Expr::int(1);
                (lhs, rhs, true)
            }
        })
    }
}

impl std::fmt::Display for AnalyticInequalityId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CrossoverResult {
    pub inequality: AnalyticInequalityId,
    /// Smallest integer in the window from which the inequality holds all
    /// the way to `scan_hi`.
    pub threshold_found: u64,
    pub last_failure: Option<u64>,
    pub scan_lo: u64,
    pub scan_hi: u64,
}

/// Linear integer scan: the functions are not assumed monotone near the
/// threshold, so every point is checked and stability through `scan_hi`
/// verified. Inconclusive kernel verdicts abort.
pub fn find_crossover(
    id: AnalyticInequalityId,
    scan_lo: u64,
    scan_hi: u64,
    policy: &PrecisionPolicy,
) -> Result<CrossoverResult> {
    if scan_lo < 2 {
        return Err(Error::Domain("crossover scans start at 2".into()));
    }
    if scan_lo > scan_hi {
        return Err(Error::Domain(format!(
            "crossover window [{scan_lo}, {scan_hi}] inverted"
        )));
    }
    let mut last_failure = None;
    let mut lo_outcome = None;
    let mut hi_outcome = Outcome::Inconclusive;
    for x in scan_lo..=scan_hi {
        let (lhs, rhs, strict) = id.formula(x)?;
        let v = decide_inequality(&lhs, &rhs, strict, policy)?;
        match v.outcome {
            Outcome::Holds => {}
            Outcome::Fails => last_failure = Some(x),
            Outcome::Inconclusive => return Err(Error::Inconclusive { at: x }),
        }
        if lo_outcome.is_none() {
            lo_outcome = Some(v.outcome);
        }
        hi_outcome = v.outcome;
    }
    if last_failure == Some(scan_hi) {
        return Err(Error::CrossoverNotFound {
            scan_lo,
            scan_hi,
            lo_outcome: outcome_str(lo_outcome.unwrap_or(Outcome::Inconclusive)),
            hi_outcome: outcome_str(hi_outcome),
        });
    }
    Ok(CrossoverResult {
        inequality: id,
        threshold_found: last_failure.map_or(scan_lo, |f| f + 1),
        last_failure,
        scan_lo,
        scan_hi,
    })
}

fn outcome_str(o: Outcome) -> &'static str {
    match o {
        Outcome::Holds => "holds",
        Outcome::Fails => "fails",
        Outcome::Inconclusive => "inconclusive",
    }
}

// ---------------------------------------------------------------------------
// Gap records and the Cramér ratio
// ---------------------------------------------------------------------------

/// Strictly increasing-gap subsequence up to index `to_n`: each returned
/// record's gap exceeds every earlier gap.
pub fn gap_records(to_n: u64, cfg: &EngineConfig) -> Result<Vec<GapRecord>> {
    if to_n < 1 {
        return Err(Error::Domain("gap_records needs to_n >= 1".into()));
    }
    let mut out = Vec::new();
    let mut best = 0u64;
    for rec in engine::gap_stream(1, to_n, cfg)? {
        if rec.gap > best {
            best = rec.gap;
            out.push(rec);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct RatioStat {
    pub n: u64,
    pub p_n: u64,
    pub gap: u64,
    /// g_n / ln²(p_n).
    pub ratio: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CramerRatioReport {
    pub to_n: u64,
    pub max: RatioStat,
    /// Running-maximum improvements in scan order.
    pub improvements: Vec<RatioStat>,
    /// The random model's predicted limsup.
    pub reference_model_limsup: f64,
    /// 2e^(-gamma), the refined-model lower suggestion.
    pub reference_granville: f64,
}

/// Maximum of g_n/ln²(p_n) over 2 <= n <= to_n plus the sequence of
/// running-max improvements.
pub fn cramer_ratio_stats(to_n: u64, cfg: &EngineConfig) -> Result<CramerRatioReport> {
    if to_n < 2 {
        return Err(Error::Domain("cramer_ratio_stats needs to_n >= 2".into()));
    }
    let mut improvements: Vec<RatioStat> = Vec::new();
    for rec in engine::gap_stream(2, to_n, cfg)? {
        let ratio = rec.gap as f64 / (rec.p_n as f64).ln().powi(2);
        if improvements.last().is_none_or(|b| ratio > b.ratio) {
            improvements.push(RatioStat {
                n: rec.n,
                p_n: rec.p_n,
                gap: rec.gap,
                ratio,
            });
        }
    }
    let max = *improvements.last().expect("range is non-empty");
    Ok(CramerRatioReport {
        to_n,
        max,
        improvements,
        reference_model_limsup: 1.0,
        reference_granville: granville_constant(),
    })
}

// ---------------------------------------------------------------------------
// Implication-chain audit
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ChainViolation {
    pub n: u64,
    pub antecedent: PredicateId,
    pub consequent: PredicateId,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ChainAuditReport {
    pub checked: u64,
    pub violations: Vec<ChainViolation>,
    /// Indices where some link could not be decided; listed, never flagged.
    pub inconclusive: Vec<(u64, PredicateId)>,
}

const CHAIN: [(PredicateId, PredicateId); 3] = [
    (PredicateId::Farhadian, PredicateId::Nicholson),
    (PredicateId::Nicholson, PredicateId::Firoozbakht),
    (PredicateId::Firoozbakht, PredicateId::Forgues),
];

/// Audit the implication chain on every record of the stream: flag any n
/// where an antecedent holds and its consequent fails.
pub fn chain_audit_over<I>(records: I, ctx: &EvalContext) -> Result<ChainAuditReport>
where
    I: IntoIterator<Item = GapRecord>,
{
    let mut checked = 0;
    let mut violations = Vec::new();
    let mut inconclusive = Vec::new();
    for rec in records {
        checked += 1;
        let far = predicates::evaluate_on_record(PredicateId::Farhadian, &rec, ctx)?;
        let nic = predicates::evaluate_on_record(PredicateId::Nicholson, &rec, ctx)?;
        let fir = predicates::evaluate_on_record(PredicateId::Firoozbakht, &rec, ctx)?;
        let forg = predicates::evaluate_on_record(PredicateId::Forgues, &rec, ctx)?;
        let by_id = |id: PredicateId| match id {
            PredicateId::Farhadian => &far,
            PredicateId::Nicholson => &nic,
            PredicateId::Firoozbakht => &fir,
            PredicateId::Forgues => &forg,
            _ => unreachable!(),
        };
        for (ante, cons) in CHAIN {
            let a = by_id(ante);
            let c = by_id(cons);
            if a.outcome == Outcome::Inconclusive {
                inconclusive.push((rec.n, ante));
                continue;
            }
            if c.outcome == Outcome::Inconclusive {
                inconclusive.push((rec.n, cons));
                continue;
            }
            if a.outcome == Outcome::Holds && c.outcome == Outcome::Fails {
                violations.push(ChainViolation {
                    n: rec.n,
                    antecedent: ante,
                    consequent: cons,
                });
            }
        }
    }
    Ok(ChainAuditReport {
        checked,
        violations,
        inconclusive,
    })
}

/// Audit over n = 5..=to_n (the shared stated domain of the chain's ends).
pub fn chain_audit(to_n: u64, ctx: &EvalContext) -> Result<ChainAuditReport> {
    if to_n < 5 {
        return Err(Error::Domain("chain_audit needs to_n >= 5".into()));
    }
    chain_audit_over(engine::gap_stream(5, to_n, &ctx.engine)?, ctx)
}

// ---------------------------------------------------------------------------
// Minimal-gap subsequence statistic
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct ZhangEntry {
    pub n: u64,
    pub gap: u64,
    /// Δ_n = (n+1)·ln(p_n) - n·ln(p_{n+1}); positive certifies the root
    /// inequality p_n^(n+1) > p_{n+1}^n at n.
    pub delta: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ZhangReport {
    pub to_n: u64,
    /// Smallest gap observed for n in [2, to_n]. This is the empirical
    /// stand-in for the liminf constant; whether it is the true liminf is
    /// not claimed (that is the twin-prime question).
    pub min_gap: u64,
    pub entries: Vec<ZhangEntry>,
    pub positive_count: u64,
    pub positive_fraction: f64,
    /// First n of the maximal strictly increasing suffix of deltas, if the
    /// sequence is eventually increasing within the window.
    pub increasing_from_n: Option<u64>,
}

/// Δ statistics over the minimal-gap index set Z within [2, to_n].
pub fn zhang_subsequence_stat(to_n: u64, cfg: &EngineConfig) -> Result<ZhangReport> {
    if to_n < 2 {
        return Err(Error::Domain(
            "zhang_subsequence_stat needs to_n >= 2".into(),
        ));
    }
    let mut min_gap = u64::MAX;
    for rec in engine::gap_stream(2, to_n, cfg)? {
        min_gap = min_gap.min(rec.gap);
    }
    let mut entries = Vec::new();
    for rec in engine::gap_stream(2, to_n, cfg)? {
        if rec.gap == min_gap {
            let delta = (rec.n as f64 + 1.0) * (rec.p_n as f64).ln()
                - rec.n as f64 * (rec.p_next as f64).ln();
            entries.push(ZhangEntry {
                n: rec.n,
                gap: rec.gap,
                delta,
            });
        }
    }
    let positive_count = entries.iter().filter(|e| e.delta > 0.0).count() as u64;
    let positive_fraction = positive_count as f64 / entries.len().max(1) as f64;
    let increasing_from_n = if entries.len() < 2 {
        entries.first().map(|e| e.n)
    } else {
        let mut start = 0;
        for j in 0..entries.len() - 1 {
            if entries[j].delta >= entries[j + 1].delta {
                start = j + 1;
            }
        }
        if start < entries.len() {
            Some(entries[start].n)
        } else {
            None
        }
    };
    Ok(ZhangReport {
        to_n,
        min_gap,
        entries,
        positive_count,
        positive_fraction,
        increasing_from_n,
    })
}

// ---------------------------------------------------------------------------
// Short-interval window counts
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MaierWindow {
    pub x: f64,
    pub lambda: f64,
    pub window_width: f64,
    /// π(x + ln(x)^λ) - π(x).
    pub count: u64,
    /// ln(x)^(λ-1).
    pub normalizer: f64,
}

/// Count primes in the window (x, x + ln(x)^λ] and the classical
/// normalizer. Descriptive statistic only.
pub fn maier_window_counts(x: f64, lambda: f64, cfg: &EngineConfig) -> Result<MaierWindow> {
    if x.is_nan() || x < 10.0 {
        return Err(Error::Domain("maier window needs x >= 10".into()));
    }
    if lambda.is_nan() || lambda <= 1.0 {
        return Err(Error::Domain("maier window needs lambda > 1".into()));
    }
    let width = x.ln().powf(lambda);
    let hi = x + width;
    if !hi.is_finite() || hi >= cfg.hard_cap as f64 {
        return Err(Error::Capacity {
            what: "maier window".into(),
            requested: if hi.is_finite() { hi as u64 } else { u64::MAX },
            cap: cfg.hard_cap,
        });
    }
    let count = engine::count_primes_between(x.floor() as u64, hi.floor() as u64, cfg)?;
    Ok(MaierWindow {
        x,
        lambda,
        window_width: width,
        count,
        normalizer: x.ln().powf(lambda - 1.0),
    })
}
