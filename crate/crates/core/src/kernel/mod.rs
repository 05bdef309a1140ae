//! Rigorous inequality decisions.
//!
//! An inequality between expressions is tried on up to three tiers:
//!
//! 1. **Float**: binary64 with a conservative accumulated error bound; the
//!    verdict stands only when the sides are separated by more than the
//!    bound.
//! 2. **ExactInteger**: pure rational comparisons (and root comparisons
//!    via cross-exponentiation) are settled exactly.
//! 3. **HighPrecision**: outward-rounded dyadic interval arithmetic at
//!    doubling precision, up to the policy cap.
//!
//! `Inconclusive` is returned only when the precision cap is exhausted, so
//! any `Holds`/`Fails` outcome is a certificate.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

mod dyadic;
mod exact;
pub mod expr;
mod float_eval;
mod interval;

pub use expr::Expr;

use crate::error::{Error, Result};
use interval::{eval_iv, Iv, IvError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Outcome {
    Holds,
    Fails,
    Inconclusive,
}

impl std::fmt::Display for Outcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Outcome::Holds => "holds",
            Outcome::Fails => "fails",
            Outcome::Inconclusive => "inconclusive",
        })
    }
}

/// Arithmetic level that certified a decision.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Tier {
    Float,
    HighPrecision,
    ExactInteger,
}

impl std::fmt::Display for Tier {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Tier::Float => "float",
            Tier::HighPrecision => "high-precision",
            Tier::ExactInteger => "exact-integer",
        })
    }
}

/// Outcome of one inequality decision, with witness values.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub outcome: Outcome,
    pub lhs_estimate: f64,
    pub rhs_estimate: f64,
    /// |lhs - rhs| as estimated; zero for inconclusive outcomes.
    pub margin: f64,
    pub tier: Tier,
    /// Set by predicate evaluation when probing below the stated domain.
    #[serde(default)]
    pub below_domain: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Verdict {
    pub(crate) fn new(outcome: Outcome, tier: Tier, lhs: f64, rhs: f64) -> Verdict {
        let lhs_estimate = sanitize(lhs);
        let rhs_estimate = sanitize(rhs);
        let margin = match outcome {
            Outcome::Inconclusive => 0.0,
            _ => sanitize((lhs_estimate - rhs_estimate).abs()),
        };
        Verdict {
            outcome,
            lhs_estimate,
            rhs_estimate,
            margin,
            tier,
            below_domain: false,
            detail: None,
        }
    }

    pub fn holds(&self) -> bool {
        self.outcome == Outcome::Holds
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Verdict {
        self.detail = Some(detail.into());
        self
    }
}

fn sanitize(x: f64) -> f64 {
    if x.is_finite() {
        x
    } else {
        0.0
    }
}

/// Controls the float-tier gate and the interval escalation ladder.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PrecisionPolicy {
    /// Assumed relative error per elementary float operation; deliberately
    /// far above 2^-52 so the float tier only certifies wide margins.
    pub float_margin_factor: f64,
    /// Interval precision ceiling in bits.
    pub max_precision_bits: u32,
    /// Precision multiplier per escalation step.
    pub escalation_factor: u32,
}

impl Default for PrecisionPolicy {
    fn default() -> Self {
        PrecisionPolicy {
            float_margin_factor: 1e-12,
            max_precision_bits: 4096,
            escalation_factor: 2,
        }
    }
}

impl PrecisionPolicy {
    pub fn validate(&self) -> Result<()> {
        if self.max_precision_bits < 64 {
            return Err(Error::Domain(
                "PrecisionPolicy: max_precision_bits must be >= 64".into(),
            ));
        }
        if self.escalation_factor < 2 {
            return Err(Error::Domain(
                "PrecisionPolicy: escalation_factor must be >= 2".into(),
            ));
        }
        if !(self.float_margin_factor.is_finite() && self.float_margin_factor > 0.0) {
            return Err(Error::Domain(
                "PrecisionPolicy: float_margin_factor must be positive and finite".into(),
            ));
        }
        Ok(())
    }
}

/// Decide `lhs < rhs` (strict) or `lhs <= rhs` (non-strict).
pub fn decide_inequality(
    lhs: &Expr,
    rhs: &Expr,
    strict: bool,
    policy: &PrecisionPolicy,
) -> Result<Verdict> {
    policy.validate()?;
    let (lv, le) = float_eval::eval_f64(lhs, policy.float_margin_factor)?;
    let (rv, re) = float_eval::eval_f64(rhs, policy.float_margin_factor)?;
    let errs = le + re;
    if rv - lv > errs {
        return Ok(Verdict::new(Outcome::Holds, Tier::Float, lv, rv));
    }
    if lv - rv > errs {
        return Ok(Verdict::new(Outcome::Fails, Tier::Float, lv, rv));
    }

    // Ties and near-ties between rational-only sides settle exactly.
    if let Some(ord) = exact::compare_rational(lhs, rhs, 1 << 12) {
        let outcome = match (ord, strict) {
            (Ordering::Less, _) => Outcome::Holds,
            (Ordering::Equal, false) => Outcome::Holds,
            (Ordering::Equal, true) => Outcome::Fails,
            (Ordering::Greater, _) => Outcome::Fails,
        };
        return Ok(Verdict::new(outcome, Tier::ExactInteger, lv, rv));
    }

    escalate_intervals(lhs, rhs, strict, policy, lv, rv)
}

/// Decide using the interval tier only; used to cross-check float verdicts.
pub fn decide_inequality_interval(
    lhs: &Expr,
    rhs: &Expr,
    strict: bool,
    policy: &PrecisionPolicy,
) -> Result<Verdict> {
    policy.validate()?;
    let lv = float_eval::eval_f64(lhs, policy.float_margin_factor)
        .map(|(v, _)| v)
        .unwrap_or(f64::NAN);
    let rv = float_eval::eval_f64(rhs, policy.float_margin_factor)
        .map(|(v, _)| v)
        .unwrap_or(f64::NAN);
    escalate_intervals(lhs, rhs, strict, policy, lv, rv)
}

fn escalate_intervals(
    lhs: &Expr,
    rhs: &Expr,
    strict: bool,
    policy: &PrecisionPolicy,
    lv: f64,
    rv: f64,
) -> Result<Verdict> {
    let mut prec: u32 = 128.min(policy.max_precision_bits);
    loop {
        let li = eval_iv(lhs, prec);
        let ri = eval_iv(rhs, prec);
        match (li, ri) {
            (Err(IvError::Domain(d)), _) | (_, Err(IvError::Domain(d))) => {
                return Err(Error::Domain(d));
            }
            (Ok(l), Ok(r)) => {
                if let Some(outcome) = interval_outcome(&l, &r, strict) {
                    let lhs_est = pick_estimate(lv, &l);
                    let rhs_est = pick_estimate(rv, &r);
                    return Ok(Verdict::new(outcome, Tier::HighPrecision, lhs_est, rhs_est));
                }
            }
            _ => {} // escalate
        }
        if prec >= policy.max_precision_bits {
            break;
        }
        prec = prec
            .saturating_mul(policy.escalation_factor)
            .min(policy.max_precision_bits);
    }
    Ok(Verdict::new(
        Outcome::Inconclusive,
        Tier::HighPrecision,
        lv,
        rv,
    ))
}

fn interval_outcome(l: &Iv, r: &Iv, strict: bool) -> Option<Outcome> {
    match l.hi.cmp(&r.lo) {
        Ordering::Less => return Some(Outcome::Holds),
        Ordering::Equal if !strict => return Some(Outcome::Holds),
        _ => {}
    }
    match l.lo.cmp(&r.hi) {
        Ordering::Greater => return Some(Outcome::Fails),
        Ordering::Equal if strict => return Some(Outcome::Fails),
        _ => {}
    }
    None
}

fn pick_estimate(float_value: f64, iv: &Iv) -> f64 {
    if float_value.is_finite() {
        float_value
    } else {
        iv.lo.to_f64_approx()
    }
}

// ---------------------------------------------------------------------------
// Root comparison
// ---------------------------------------------------------------------------

/// Ordering of p^(1/n) vs q^(1/m). Equality is impossible for valid inputs
/// and reported as an error.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RootOrdering {
    Less,
    Greater,
}

#[derive(Debug, Clone)]
pub struct RootComparison {
    pub ordering: RootOrdering,
    pub tier: Tier,
    pub lhs_estimate: f64,
    pub rhs_estimate: f64,
    pub margin: f64,
}

/// Compare p^(1/n) with q^(1/m): float first, exact cross-exponentiation
/// (p^m vs q^n) whenever the float margin cannot certify.
pub fn compare_roots_detailed(
    p: u64,
    n: u64,
    q: u64,
    m: u64,
    policy: &PrecisionPolicy,
) -> Result<RootComparison> {
    if p < 2 || q < 2 {
        return Err(Error::Domain(format!(
            "compare_roots: bases must be >= 2 (got {p}, {q})"
        )));
    }
    if n == 0 || m == 0 {
        return Err(Error::Domain(
            "compare_roots: root indices must be >= 1".into(),
        ));
    }
    if p == q && n == m {
        return Err(Error::EqualityDomain(format!("{p}^(1/{n}) vs itself")));
    }
    // Compare through logs: ln(p)/n vs ln(q)/m.
    let pf = policy.float_margin_factor;
    let lhs_log = Expr::uint(p).ln() / Expr::uint(n);
    let rhs_log = Expr::uint(q).ln() / Expr::uint(m);
    let (a, ea) = float_eval::eval_f64(&lhs_log, pf)?;
    let (b, eb) = float_eval::eval_f64(&rhs_log, pf)?;
    let lhs_estimate = (p as f64).powf(1.0 / n as f64);
    let rhs_estimate = (q as f64).powf(1.0 / m as f64);
    let errs = ea + eb;
    if b - a > errs {
        return Ok(RootComparison {
            ordering: RootOrdering::Less,
            tier: Tier::Float,
            lhs_estimate,
            rhs_estimate,
            margin: (lhs_estimate - rhs_estimate).abs(),
        });
    }
    if a - b > errs {
        return Ok(RootComparison {
            ordering: RootOrdering::Greater,
            tier: Tier::Float,
            lhs_estimate,
            rhs_estimate,
            margin: (lhs_estimate - rhs_estimate).abs(),
        });
    }
    let ordering = match exact::cross_power_ordering(p, n, q, m)? {
        Ordering::Less => RootOrdering::Less,
        Ordering::Greater => RootOrdering::Greater,
        Ordering::Equal => {
            return Err(Error::EqualityDomain(format!(
                "{p}^(1/{n}) equals {q}^(1/{m})"
            )));
        }
    };
    Ok(RootComparison {
        ordering,
        tier: Tier::ExactInteger,
        lhs_estimate,
        rhs_estimate,
        margin: (lhs_estimate - rhs_estimate).abs(),
    })
}

/// See [`compare_roots_detailed`]; returns just the ordering.
pub fn compare_roots(
    p: u64,
    n: u64,
    q: u64,
    m: u64,
    policy: &PrecisionPolicy,
) -> Result<RootOrdering> {
    compare_roots_detailed(p, n, q, m, policy).map(|c| c.ordering)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::expr::Expr as E;

    fn policy() -> PrecisionPolicy {
        PrecisionPolicy::default()
    }

    #[test]
    fn lemma_style_log_inequality() {
        // ln(3) - ln(2) > 1/3 : 0.4055 vs 0.3333
        let lhs = E::ratio(1, 3);
        let rhs = E::int(3).ln() - E::int(2).ln();
        let v = decide_inequality(&lhs, &rhs, true, &policy()).unwrap();
        assert_eq!(v.outcome, Outcome::Holds);
        assert_eq!(v.tier, Tier::Float);
        assert!((v.rhs_estimate - 0.405465).abs() < 1e-5);
        assert!((v.lhs_estimate - 0.333333).abs() < 1e-5);
    }

    #[test]
    fn strict_identity_fails_exactly() {
        let v = decide_inequality(&E::int(2), &E::int(2), true, &policy()).unwrap();
        assert_eq!(v.outcome, Outcome::Fails);
        assert_eq!(v.tier, Tier::ExactInteger);
        let v = decide_inequality(&E::int(2), &E::int(2), false, &policy()).unwrap();
        assert_eq!(v.outcome, Outcome::Holds);
        assert_eq!(v.tier, Tier::ExactInteger);
    }

    #[test]
    fn float_tier_decides_wide_margins() {
        // ln²(29) - ln(29) - 1 > 2, decided on the float tier (≈ 6.971 vs 2).
        let lhs = E::int(2);
        let rhs = E::int(29).ln_sq() - E::int(29).ln() - E::int(1);
        let v = decide_inequality(&lhs, &rhs, true, &policy()).unwrap();
        assert_eq!(v.outcome, Outcome::Holds);
        assert_eq!(v.tier, Tier::Float);
        assert!((v.rhs_estimate - 6.9714).abs() < 1e-3);
    }

    #[test]
    fn transcendental_tie_is_inconclusive() {
        // ln(4) == 2 ln(2): no precision separates them.
        let lhs = E::int(4).ln();
        let rhs = E::int(2) * E::int(2).ln();
        let p = PrecisionPolicy {
            max_precision_bits: 256,
            ..Default::default()
        };
        let v = decide_inequality(&lhs, &rhs, true, &p).unwrap();
        assert_eq!(v.outcome, Outcome::Inconclusive);
    }

    #[test]
    fn near_tie_resolves_with_more_precision() {
        // ln(4) < 2 ln(2) + 2^-80: inconclusive at 64 bits, holds at 4096.
        let lhs = E::int(4).ln();
        let rhs = E::int(2) * E::int(2).ln() + E::ratio(1, 1 << 62) * E::ratio(1, 1 << 18);
        let tight = PrecisionPolicy {
            max_precision_bits: 64,
            ..Default::default()
        };
        let v = decide_inequality(&lhs, &rhs, true, &tight).unwrap();
        assert_eq!(v.outcome, Outcome::Inconclusive);
        let roomy = PrecisionPolicy::default();
        let v = decide_inequality(&lhs, &rhs, true, &roomy).unwrap();
        assert_eq!(v.outcome, Outcome::Holds);
        assert_eq!(v.tier, Tier::HighPrecision);
    }

    #[test]
    fn domain_errors_surface() {
        assert!(matches!(
            decide_inequality(&E::int(0).ln(), &E::int(1), true, &policy()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn compare_roots_examples() {
        let p = policy();
        // 2 > sqrt(3)
        assert_eq!(
            compare_roots(2, 1, 3, 2, &p).unwrap(),
            RootOrdering::Greater
        );
        // 7^(1/4) > 11^(1/5)
        assert_eq!(
            compare_roots(7, 4, 11, 5, &p).unwrap(),
            RootOrdering::Greater
        );
        // Perfect-power equality is a caller bug.
        assert!(matches!(
            compare_roots(4, 2, 2, 1, &p),
            Err(Error::EqualityDomain(_))
        ));
        assert!(matches!(
            compare_roots(5, 3, 5, 3, &p),
            Err(Error::EqualityDomain(_))
        ));
    }

    #[test]
    fn interval_only_agrees_with_float_path() {
        let cases: Vec<(E, E, bool)> = vec![
            (E::int(10).ln(), E::int(3), true),
            (E::int(100).ln_sq(), E::int(22), false),
            (E::int(7).sqrt(), E::ratio(265, 100), true),
            (E::int(23).pow(E::ratio(21, 40)), E::int(6), true),
        ];
        for (lhs, rhs, strict) in cases {
            let full = decide_inequality(&lhs, &rhs, strict, &policy()).unwrap();
            let ivonly = decide_inequality_interval(&lhs, &rhs, strict, &policy()).unwrap();
            assert_eq!(full.outcome, ivonly.outcome, "{lhs} vs {rhs}");
        }
    }
}
