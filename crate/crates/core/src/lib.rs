//! Prime-gap verification toolkit.
//!
//! The crate verifies inequalities about prime gaps over finite ranges and
//! reports rigorously decided verdicts rather than raw floating-point
//! comparisons. It is organized as:
//!
//! - [`engine`]: segmented sieve for primes, gaps, and interval counts.
//! - [`kernel`]: three-tier inequality decisions (float with conservative
//!   error bounds, arbitrary-precision intervals, exact integers).
//! - [`predicates`]: the catalog of per-index and interval predicates
//!   (Firoozbakht, Andrica, Oppermann, Rosser/Dusart bounds, ...).
//! - [`campaigns`]: checkpointed, parallel range verification with presets
//!   for the finite ranges that are usually checked by computer.
//! - [`analysis`]: crossover finders for the auxiliary calculus
//!   inequalities, gap-record and ratio statistics, the implication-chain
//!   audit, and short-interval counts.
//! - [`cramer`]: the random model where `m` is "prime" with probability
//!   `1/ln m`, with gap-ratio statistics over simulated samples.

pub mod analysis;
pub mod campaigns;
pub mod cramer;
pub mod engine;
pub mod error;
pub mod kernel;
pub mod predicates;

pub use engine::{EngineConfig, GapRecord};
pub use error::{Error, Result};
pub use kernel::{Outcome, PrecisionPolicy, Tier, Verdict};
pub use predicates::{EvalContext, PredicateId};
