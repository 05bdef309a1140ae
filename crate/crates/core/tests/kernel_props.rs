//! Cross-tier properties of the inequality kernel.

use gapkit::error::Error;
use gapkit::kernel::{
    compare_roots, decide_inequality, decide_inequality_interval, expr::Expr, Outcome,
    PrecisionPolicy, RootOrdering,
};
use num_bigint::BigUint;
use rand_core::{RngCore, SeedableRng};

fn policy() -> PrecisionPolicy {
    PrecisionPolicy::default()
}

/// Float and high-precision tiers must agree on random integer-log
/// inequalities whose sides are far apart.
#[test]
fn tier_agreement_on_random_log_inequalities() {
    let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(0x9e3779b97f4a7c15);
    let p = policy();
    let mut checked = 0u32;
    while checked < 10_000 {
        let a = 2 + rng.next_u64() % 1_000_000;
        let b = 2 + rng.next_u64() % 1_000_000;
        let c = 1 + (rng.next_u64() % 20) as i64;
        let d = 1 + (rng.next_u64() % 20) as i64;
        let k = (rng.next_u64() % 41) as i64 - 20;
        // c·ln(a) vs d·ln(b) + k
        let lhs = Expr::int(c) * Expr::uint(a).ln();
        let rhs = Expr::int(d) * Expr::uint(b).ln() + Expr::int(k);
        let sep = (c as f64) * (a as f64).ln() - ((d as f64) * (b as f64).ln() + k as f64);
        if sep.abs() < 0.5 {
            continue; // only wide margins are in scope for this property
        }
        let full = decide_inequality(&lhs, &rhs, true, &p).unwrap();
        let pinned = decide_inequality_interval(&lhs, &rhs, true, &p).unwrap();
        assert_eq!(
            full.outcome, pinned.outcome,
            "tiers disagree on {c}·ln({a}) < {d}·ln({b}) + {k}"
        );
        assert_ne!(full.outcome, Outcome::Inconclusive);
        checked += 1;
    }
}

/// compare_roots agrees with exhaustive big-integer comparison for all
/// p, q <= 100 and n, m <= 20; exact equalities surface as errors.
#[test]
fn compare_roots_exhaustive_small() {
    let p = policy();
    for a in 2u64..=100 {
        for b in 2u64..=100 {
            for n in 1u64..=20 {
                for m in 1u64..=20 {
                    if a == b && n == m {
                        continue;
                    }
                    let lhs = BigUint::from(a).pow(m as u32);
                    let rhs = BigUint::from(b).pow(n as u32);
                    match compare_roots(a, n, b, m, &p) {
                        Ok(RootOrdering::Less) => {
                            assert!(lhs < rhs, "{a}^(1/{n}) vs {b}^(1/{m})");
                        }
                        Ok(RootOrdering::Greater) => {
                            assert!(lhs > rhs, "{a}^(1/{n}) vs {b}^(1/{m})");
                        }
                        Err(Error::EqualityDomain(_)) => {
                            assert_eq!(lhs, rhs, "{a}^(1/{n}) vs {b}^(1/{m})");
                        }
                        Err(e) => panic!("unexpected error: {e}"),
                    }
                }
            }
        }
    }
}

/// Raising max_precision_bits never flips Holds/Fails; it only resolves
/// Inconclusive.
#[test]
fn verdicts_monotone_in_precision_cap() {
    // ln(4) vs 2 ln(2) + 2^-k: a genuine near-tie family.
    for k in [40i64, 60, 90, 120, 300, 1000] {
        let lhs = Expr::int(4).ln();
        let bump = if k <= 62 {
            Expr::ratio(1, 1i64 << k)
        } else {
            // 2^-k as a product of in-range dyadic ratios
            let mut e = Expr::ratio(1, 1i64 << 62);
            let mut rest = k - 62;
            while rest > 0 {
                let step = rest.min(62);
                e = e * Expr::ratio(1, 1i64 << step);
                rest -= step;
            }
            e
        };
        let rhs = Expr::int(2) * Expr::int(2).ln() + bump;
        let mut last: Option<Outcome> = None;
        for bits in [64u32, 128, 256, 512, 1024, 2048, 4096] {
            let pol = PrecisionPolicy {
                max_precision_bits: bits,
                ..Default::default()
            };
            let v = decide_inequality(&lhs, &rhs, true, &pol).unwrap();
            if let Some(prev) = last {
                if prev != Outcome::Inconclusive {
                    assert_eq!(v.outcome, prev, "k = {k}, bits = {bits}");
                }
            }
            last = Some(v.outcome);
        }
        // With the full default cap the verdict must be decided (the gap
        // is 2^-k > 0, so the true answer is Holds).
        assert_eq!(last, Some(Outcome::Holds), "k = {k}");
    }
}

/// The strict/non-strict distinction is honored on exact ties at every
/// policy setting.
#[test]
fn exact_ties_respect_strictness() {
    let cases = [
        (Expr::int(2), Expr::int(2)),
        (Expr::ratio(21, 40), Expr::ratio(42, 80)),
        (Expr::int(3) * Expr::ratio(1, 7), Expr::ratio(3, 7)),
    ];
    for (lhs, rhs) in cases {
        let strict = decide_inequality(&lhs, &rhs, true, &policy()).unwrap();
        assert_eq!(strict.outcome, Outcome::Fails, "{lhs} < {rhs}");
        let loose = decide_inequality(&lhs, &rhs, false, &policy()).unwrap();
        assert_eq!(loose.outcome, Outcome::Holds, "{lhs} <= {rhs}");
    }
}
