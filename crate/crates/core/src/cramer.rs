//! Random model of the primes: each integer m >= 3 is included
//! independently with probability 1/ln m (2 is always a member), and the
//! max-gap-to-ln² ratio is measured over the sampled set.
//!
//! Reproducibility contract: the generator is ChaCha12 keyed by the 64-bit
//! seed written little-endian and repeated four times to fill the 32-byte
//! key. One `next_u64` is drawn per candidate m = 3, 4, ..., limit in
//! order, mapped to [0, 1) via the top 53 bits. Identical (limit, seed)
//! reproduce the sample bit-for-bit.

use rand_chacha::ChaCha12Rng;
use rand_core::{RngCore, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Gap ratios are only measured once the gap's left endpoint reaches this
/// value; below it 1/ln²(left) is degenerate (the very first gaps would
/// dominate every sample with ratios > 2). Documented convention, not part
/// of the model itself.
pub const RATIO_LEFT_MIN: u64 = 100;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RatioTracePoint {
    /// Left endpoint of the gap.
    pub left: u64,
    pub gap: u64,
    /// gap / ln²(left).
    pub ratio: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CramerSample {
    pub seed: u64,
    pub limit: u64,
    pub pseudo_prime_count: u64,
    pub max_gap: u64,
    /// Maximum gap/ln²(left) over gaps with left >= RATIO_LEFT_MIN.
    pub max_ratio: f64,
    /// Running-maximum improvements of the ratio, in draw order.
    pub ratio_trace: Vec<RatioTracePoint>,
}

fn expand_seed(seed: u64) -> [u8; 32] {
    let le = seed.to_le_bytes();
    let mut key = [0u8; 32];
    for chunk in key.chunks_exact_mut(8) {
        chunk.copy_from_slice(&le);
    }
    key
}

fn unit_f64(bits: u64) -> f64 {
    (bits >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Draw one sample of the model up to `limit` (inclusive).
pub fn simulate(limit: u64, seed: u64) -> Result<CramerSample> {
    if limit < 100 {
        return Err(Error::Domain(
            "simulate needs limit >= 100 (gap ratios are meaningless below)".into(),
        ));
    }
    let mut rng = ChaCha12Rng::from_seed(expand_seed(seed));
    let mut prev = 2u64;
    let mut count = 1u64;
    let mut max_gap = 0u64;
    let mut max_ratio = 0.0f64;
    let mut trace = Vec::new();
    for m in 3..=limit {
        let u = unit_f64(rng.next_u64());
        if u < 1.0 / (m as f64).ln() {
            let gap = m - prev;
            max_gap = max_gap.max(gap);
            if prev >= RATIO_LEFT_MIN {
                let ratio = gap as f64 / (prev as f64).ln().powi(2);
                if ratio > max_ratio {
                    max_ratio = ratio;
                    trace.push(RatioTracePoint {
                        left: prev,
                        gap,
                        ratio,
                    });
                }
            }
            prev = m;
            count += 1;
        }
    }
    Ok(CramerSample {
        seed,
        limit,
        pseudo_prime_count: count,
        max_gap,
        max_ratio,
        ratio_trace: trace,
    })
}

/// Expected membership count: 1 (for the always-included 2) plus
/// sum over m = 3..=limit of 1/ln m.
pub fn expected_pseudo_prime_count(limit: u64) -> f64 {
    1.0 + (3..=limit).map(|m| 1.0 / (m as f64).ln()).sum::<f64>()
}
