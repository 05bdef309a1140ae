//! Cross-predicate properties: form equivalence, strength ordering, and
//! implication structure.

use gapkit::engine;
use gapkit::kernel::{Outcome, Tier};
use gapkit::predicates::{
    self, evaluate_interval_predicate, evaluate_on_record, EvalContext, PredicateId,
};

fn ctx() -> EvalContext {
    EvalContext::default()
}

/// Root form and gap form of the decreasing-roots predicate agree for all
/// n <= 10^4, and neither is ever inconclusive.
#[test]
fn firoozbakht_form_equivalence_to_1e4() {
    let c = ctx();
    for rec in engine::gap_stream(1, 10_000, &c.engine).unwrap() {
        let root = evaluate_on_record(PredicateId::Firoozbakht, &rec, &c).unwrap();
        let gap = predicates::firoozbakht_gap_form(&rec, &c).unwrap();
        assert_eq!(root.outcome, gap.outcome, "forms disagree at n = {}", rec.n);
        assert_ne!(root.outcome, Outcome::Inconclusive, "n = {}", rec.n);
        assert_ne!(gap.outcome, Outcome::Inconclusive, "n = {}", rec.n);
        assert!(
            matches!(root.tier, Tier::Float | Tier::ExactInteger),
            "unexpected tier at n = {}",
            rec.n
        );
    }
}

/// Subtracting a larger constant is a strictly stronger claim: wherever
/// the -1.17 form holds, the -1 form holds; wherever -1 holds, the plain
/// form holds.
#[test]
fn strength_ordering_to_1e4() {
    let c = ctx();
    for rec in engine::gap_stream(10, 10_000, &c.engine).unwrap() {
        let strong = evaluate_on_record(PredicateId::GapLog2Minus117, &rec, &c).unwrap();
        let mid = evaluate_on_record(PredicateId::GapLog2Minus1, &rec, &c).unwrap();
        let weak = evaluate_on_record(PredicateId::GapLog2, &rec, &c).unwrap();
        if strong.outcome == Outcome::Holds {
            assert_eq!(mid.outcome, Outcome::Holds, "n = {}", rec.n);
        }
        if mid.outcome == Outcome::Holds {
            assert_eq!(weak.outcome, Outcome::Holds, "n = {}", rec.n);
        }
    }
}

/// Adjacent Oppermann instances supply both halves of the strong Legendre
/// statement on the checked range.
#[test]
fn oppermann_implies_legendre_strong() {
    let c = ctx();
    let opp: Vec<bool> = (2..=301)
        .map(|n| {
            evaluate_interval_predicate(PredicateId::Oppermann, n, &c)
                .unwrap()
                .holds()
        })
        .collect();
    for n in 2u64..=300 {
        let here = opp[(n - 2) as usize];
        let next = opp[(n - 1) as usize];
        if here && next {
            let leg = evaluate_interval_predicate(PredicateId::LegendreStrong, n, &c).unwrap();
            assert_eq!(leg.outcome, Outcome::Holds, "legendre at n = {n}");
        }
        if n >= 3 {
            let prev = opp[(n - 3) as usize];
            if prev && here {
                let leg =
                    evaluate_interval_predicate(PredicateId::LegendreStrong, n - 1, &c).unwrap();
                assert_eq!(leg.outcome, Outcome::Holds, "legendre at n - 1 = {}", n - 1);
            }
        }
    }
}

/// Lemma bound: g/(g+p) < ln(p') - ln(p) for every record checked.
#[test]
fn lemma21_holds_over_sample() {
    let c = ctx();
    for rec in engine::gap_stream(1, 5000, &c.engine).unwrap() {
        let v = evaluate_on_record(PredicateId::Lemma21, &rec, &c).unwrap();
        assert_eq!(v.outcome, Outcome::Holds, "n = {}", rec.n);
    }
}

/// Interval predicates are exact-count decisions.
#[test]
fn interval_predicates_decide_exactly() {
    let c = ctx();
    for n in [2u64, 3, 10, 50, 74] {
        for id in [
            PredicateId::Oppermann,
            PredicateId::LegendreStrong,
            PredicateId::Brocard,
            PredicateId::SierpinskiRows,
        ] {
            let v = evaluate_interval_predicate(id, n, &c).unwrap();
            assert_eq!(v.tier, Tier::ExactInteger, "{id} at {n}");
            assert_ne!(v.outcome, Outcome::Inconclusive, "{id} at {n}");
        }
    }
}
