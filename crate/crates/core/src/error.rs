//! Shared error type for the toolkit.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A request whose domain is empty, e.g. `primes_up_to(1)`.
    #[error("empty domain: {0}")]
    EmptyDomain(String),

    /// Argument outside an operation's domain of definition.
    #[error("domain error: {0}")]
    Domain(String),

    /// A request would push the prime engine past its configured hard cap.
    #[error("capacity: {what} needs primes up to ~{requested}, cap is {cap}")]
    Capacity {
        what: String,
        requested: u64,
        cap: u64,
    },

    /// `compare_roots` called on two expressions that denote the same real.
    #[error("equality domain: {0} (caller bug: the two roots are equal)")]
    EqualityDomain(String),

    /// A predicate was evaluated with the wrong argument kind.
    #[error("arity mismatch: predicate {id} expects {expected} arity")]
    ArityMismatch {
        id: &'static str,
        expected: &'static str,
    },

    /// Checkpoint file missing, truncated, or of the wrong schema. Never
    /// silently restarts.
    #[error("checkpoint error: {0}")]
    Checkpoint(String),

    /// No crossover point inside the scanned window.
    #[error("no crossover in [{scan_lo}, {scan_hi}]: verdict at lo = {lo_outcome}, at hi = {hi_outcome}")]
    CrossoverNotFound {
        scan_lo: u64,
        scan_hi: u64,
        lo_outcome: &'static str,
        hi_outcome: &'static str,
    },

    /// An inequality could not be certified within the precision policy.
    #[error("inconclusive verdict at x = {at}; raise max_precision_bits")]
    Inconclusive { at: u64 },

    /// Campaign aborted: counterexample count points at an implementation
    /// error rather than mathematics.
    #[error("campaign aborted after {count} failures for {predicate}")]
    TooManyFailures { predicate: String, count: usize },

    #[error("unknown identifier: {0}")]
    UnknownId(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("serialization: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
