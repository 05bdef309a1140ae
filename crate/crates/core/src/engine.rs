//! Prime engine: segmented sieve of Eratosthenes and the operations built
//! on it (`primes_up_to`, `nth_prime`, `prime_count`, `gap_stream`,
//! `count_primes_between`).
//!
//! The sieve stores odd numbers only, one bit each, and walks the range in
//! segments of a configurable size, so memory is O(segment) no matter how
//! far a scan goes. Everything else in the crate treats this module as the
//! single source of arithmetic truth.
//!
//! Indices are 1-based: `p_1 = 2`.

use std::sync::{Arc, RwLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default segment width in numbers (not bytes).
pub const DEFAULT_SEGMENT_SIZE: u64 = 1 << 20;

/// Default hard cap on any prime the engine will touch.
pub const DEFAULT_HARD_CAP: u64 = 1 << 31;

#[derive(Debug, Clone)]
pub struct EngineConfig {
    /// Numbers per sieve segment. Clamped to at least 1024.
    pub segment_size: u64,
    /// Refuse any request that needs primes beyond this bound.
    pub hard_cap: u64,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            segment_size: DEFAULT_SEGMENT_SIZE,
            hard_cap: DEFAULT_HARD_CAP,
        }
    }
}

impl EngineConfig {
    pub fn with_cap(hard_cap: u64) -> Self {
        EngineConfig {
            hard_cap,
            ..Default::default()
        }
    }

    fn seg(&self) -> u64 {
        self.segment_size.max(1024)
    }

    pub(crate) fn check_cap(&self, what: &str, requested: u64) -> Result<()> {
        if requested > self.hard_cap {
            Err(Error::Capacity {
                what: what.to_string(),
                requested,
                cap: self.hard_cap,
            })
        } else {
            Ok(())
        }
    }
}

/// One row of the prime/gap stream: consecutive primes `p_n < p_next` with
/// no prime strictly between them, and `gap = p_next - p_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GapRecord {
    pub n: u64,
    pub p_n: u64,
    pub p_next: u64,
    pub gap: u64,
}

// ---------------------------------------------------------------------------
// Base primes (primes up to sqrt of whatever we sieve), cached globally.
// ---------------------------------------------------------------------------

static BASE_CACHE: RwLock<Option<(u64, Arc<Vec<u32>>)>> = RwLock::new(None);

/// Plain odd-skipping sieve used only to seed segment sieving.
fn simple_sieve(limit: u64) -> Vec<u32> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut p = 2usize;
    while p * p <= n {
        if !composite[p] {
            let mut m = p * p;
            while m <= n {
                composite[m] = true;
                m += p;
            }
        }
        p += 1;
    }
    (2..=n)
        .filter(|&i| !composite[i])
        .map(|i| i as u32)
        .collect()
}

fn base_primes(limit: u64) -> Arc<Vec<u32>> {
    if let Some((covered, primes)) = BASE_CACHE.read().unwrap().as_ref() {
        if *covered >= limit {
            return Arc::clone(primes);
        }
    }
    let mut guard = BASE_CACHE.write().unwrap();
    if let Some((covered, primes)) = guard.as_ref() {
        if *covered >= limit {
            return Arc::clone(primes);
        }
    }
    let target = limit.max(1 << 16);
    let primes = Arc::new(simple_sieve(target));
    *guard = Some((target, Arc::clone(&primes)));
    primes
}

// ---------------------------------------------------------------------------
// Segments
// ---------------------------------------------------------------------------

/// Primality bitset over `[lo, hi)`. Only odd numbers are stored; `2` is
/// answered specially and even numbers are never prime here.
pub struct SieveSegment {
    lo: u64,
    hi: u64,
    first_odd: u64,
    nbits: u64,
    words: Vec<u64>,
}

impl SieveSegment {
    pub fn lo(&self) -> u64 {
        self.lo
    }

    pub fn hi(&self) -> u64 {
        self.hi
    }

    /// Whether `m` is prime; `m` must lie in `[lo, hi)`.
    pub fn is_prime(&self, m: u64) -> bool {
        debug_assert!(m >= self.lo && m < self.hi, "query outside segment");
        if m == 2 {
            return true;
        }
        if m < 3 || m.is_multiple_of(2) {
            return false;
        }
        let idx = (m - self.first_odd) / 2;
        self.words[(idx / 64) as usize] >> (idx % 64) & 1 == 1
    }

    /// Primes of the segment in ascending order.
    pub fn iter_primes(&self) -> impl Iterator<Item = u64> + '_ {
        let two = if self.lo <= 2 && 2 < self.hi {
            Some(2)
        } else {
            None
        };
        two.into_iter().chain(SegmentBitIter {
            seg: self,
            word_idx: 0,
            word: self.words.first().copied().unwrap_or(0),
        })
    }

    /// Number of primes `p` in the intersection of `[a, b)` with the segment.
    fn count_in(&self, a: u64, b: u64) -> u64 {
        let a = a.max(self.lo);
        let b = b.min(self.hi);
        if a >= b {
            return 0;
        }
        let mut count = 0;
        if a <= 2 && 2 < b {
            count += 1;
        }
        // Odd indices [ia, ib).
        let start_odd = (a.max(self.first_odd)) | 1;
        if start_odd >= b || self.nbits == 0 {
            return count;
        }
        let ia = (start_odd - self.first_odd) / 2;
        // Largest odd strictly below b; b > start_odd >= 3 here.
        let last_odd = if b.is_multiple_of(2) { b - 1 } else { b - 2 };
        if last_odd < start_odd {
            return count;
        }
        let ib = (last_odd - self.first_odd) / 2 + 1; // exclusive
        let ib = ib.min(self.nbits);
        count + count_bits_range(&self.words, ia, ib)
    }
}

fn count_bits_range(words: &[u64], from: u64, to: u64) -> u64 {
    if from >= to {
        return 0;
    }
    let (wa, ba) = ((from / 64) as usize, from % 64);
    let (wb, bb) = ((to / 64) as usize, to % 64);
    if wa == wb {
        let mask = (u64::MAX << ba) & (u64::MAX >> (64 - bb));
        return (words[wa] & mask).count_ones() as u64;
    }
    let mut count = (words[wa] & (u64::MAX << ba)).count_ones() as u64;
    for w in &words[wa + 1..wb] {
        count += w.count_ones() as u64;
    }
    if bb > 0 {
        count += (words[wb] & (u64::MAX >> (64 - bb))).count_ones() as u64;
    }
    count
}

struct SegmentBitIter<'a> {
    seg: &'a SieveSegment,
    word_idx: usize,
    word: u64,
}

impl Iterator for SegmentBitIter<'_> {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        loop {
            if self.word != 0 {
                let tz = self.word.trailing_zeros() as u64;
                self.word &= self.word - 1;
                return Some(self.seg.first_odd + 2 * (self.word_idx as u64 * 64 + tz));
            }
            self.word_idx += 1;
            if self.word_idx >= self.seg.words.len() {
                return None;
            }
            self.word = self.seg.words[self.word_idx];
        }
    }
}

/// Sieve the segment `[lo, hi)` given base primes covering `sqrt(hi - 1)`.
fn sieve_segment(lo: u64, hi: u64, base: &[u32]) -> SieveSegment {
    debug_assert!(hi > lo);
    let first_odd = if lo <= 3 { 3 } else { lo | 1 };
    let nbits = if hi > first_odd {
        (hi - first_odd).div_ceil(2)
    } else {
        0
    };
    let nwords = nbits.div_ceil(64) as usize;
    let mut words = vec![u64::MAX; nwords];
    if nbits % 64 != 0 && nwords > 0 {
        words[nwords - 1] = u64::MAX >> (64 - nbits % 64);
    }
    for &bp in base {
        let p = bp as u64;
        if p == 2 {
            continue;
        }
        if p.saturating_mul(p) >= hi {
            break;
        }
        // First odd multiple of p in range, at least p^2.
        let mut s = first_odd.div_ceil(p) * p;
        if s.is_multiple_of(2) {
            s += p;
        }
        s = s.max(p * p);
        if s >= hi {
            continue;
        }
        let mut idx = (s - first_odd) / 2;
        while idx < nbits {
            words[(idx / 64) as usize] &= !(1u64 << (idx % 64));
            idx += p;
        }
    }
    SieveSegment {
        lo,
        hi,
        first_odd,
        nbits,
        words,
    }
}

// ---------------------------------------------------------------------------
// Streaming prime iterator
// ---------------------------------------------------------------------------

/// Unbounded ascending prime stream starting from the first prime >= `start`.
/// Pulls one segment at a time; callers stop it.
pub(crate) struct PrimeIter {
    segment_size: u64,
    next_lo: u64,
    seg: Option<SieveSegment>,
    word_idx: usize,
    word: u64,
    pending_two: bool,
}

impl PrimeIter {
    pub(crate) fn starting_at(start: u64, segment_size: u64) -> PrimeIter {
        PrimeIter {
            segment_size: segment_size.max(1024),
            next_lo: start.max(3) & !1, // even base so first_odd lands right
            seg: None,
            word_idx: 0,
            word: 0,
            pending_two: start <= 2,
        }
    }

    fn load_next_segment(&mut self) {
        let lo = self.next_lo;
        let hi = lo + self.segment_size;
        self.next_lo = hi;
        let base = base_primes((hi - 1).isqrt() + 1);
        let seg = sieve_segment(lo, hi, &base);
        self.word_idx = 0;
        self.word = seg.words.first().copied().unwrap_or(0);
        self.seg = Some(seg);
    }
}

impl Iterator for PrimeIter {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if self.pending_two {
            self.pending_two = false;
            return Some(2);
        }
        loop {
            if self.seg.is_none() {
                self.load_next_segment();
            }
            let seg = self.seg.as_ref().unwrap();
            if self.word != 0 {
                let tz = self.word.trailing_zeros() as u64;
                self.word &= self.word - 1;
                return Some(seg.first_odd + 2 * (self.word_idx as u64 * 64 + tz));
            }
            self.word_idx += 1;
            if self.word_idx < seg.words.len() {
                self.word = seg.words[self.word_idx];
            } else {
                self.seg = None;
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

/// All primes `<= limit`, ascending.
pub fn primes_up_to(limit: u64, cfg: &EngineConfig) -> Result<Vec<u64>> {
    if limit < 2 {
        return Err(Error::EmptyDomain(format!(
            "primes_up_to({limit}): no primes below 2"
        )));
    }
    cfg.check_cap("primes_up_to", limit)?;
    let estimate = if limit > 16 {
        (limit as f64 / (limit as f64).ln() * 1.15) as usize
    } else {
        8
    };
    let mut out = Vec::with_capacity(estimate);
    for p in PrimeIter::starting_at(2, cfg.seg()) {
        if p > limit {
            break;
        }
        out.push(p);
    }
    Ok(out)
}

/// Conservative upper bound for the n-th prime used to size sieve runs:
/// `n (ln n + ln ln n)` for `n >= 6`, constant below.
pub(crate) fn nth_prime_upper_bound(n: u64) -> u64 {
    if n < 6 {
        return 13;
    }
    let nf = n as f64;
    let l = nf.ln();
    (nf * (l + l.ln())).ceil() as u64 + 16
}

/// The n-th prime, 1-based (`nth_prime(1) = 2`).
pub fn nth_prime(n: u64, cfg: &EngineConfig) -> Result<u64> {
    if n == 0 {
        return Err(Error::Domain("nth_prime(0): indices are 1-based".into()));
    }
    cfg.check_cap("nth_prime", nth_prime_upper_bound(n))?;
    let seg_size = cfg.seg();
    let mut counted = 0u64;
    let mut lo = 0u64;
    loop {
        let hi = lo + seg_size;
        let base = base_primes((hi - 1).isqrt() + 1);
        let seg = sieve_segment(lo, hi, &base);
        let here = seg.count_in(lo, hi);
        if counted + here >= n {
            let want = n - counted;
            let mut seen = 0;
            for p in seg.iter_primes() {
                seen += 1;
                if seen == want {
                    return Ok(p);
                }
            }
            unreachable!("count/iter disagreement in segment");
        }
        counted += here;
        lo = hi;
    }
}

/// Prime-counting function π(x): number of primes `<= x`.
pub fn prime_count(x: u64, cfg: &EngineConfig) -> Result<u64> {
    if x < 2 {
        return Ok(0);
    }
    cfg.check_cap("prime_count", x)?;
    Ok(count_in_closed_range(2, x, cfg))
}

/// Number of primes p with `a < p <= b` (half-open on the left).
pub fn count_primes_between(a: u64, b: u64, cfg: &EngineConfig) -> Result<u64> {
    if a > b {
        return Err(Error::Domain(format!(
            "count_primes_between({a}, {b}): inverted interval"
        )));
    }
    cfg.check_cap("count_primes_between", b)?;
    if b < 2 {
        return Ok(0);
    }
    Ok(count_in_closed_range(a + 1, b, cfg))
}

/// Count primes in the closed range `[a, b]` by segment popcounts.
fn count_in_closed_range(a: u64, b: u64, cfg: &EngineConfig) -> u64 {
    if a > b {
        return 0;
    }
    let seg_size = cfg.seg();
    let mut count = 0;
    let mut lo = a.saturating_sub(1) & !1; // even floor keeps odd indexing aligned
    while lo <= b {
        let hi = (lo + seg_size).min(b + 1).max(lo + 1);
        let base = base_primes((hi - 1).isqrt() + 1);
        let seg = sieve_segment(lo, hi, &base);
        count += seg.count_in(a, b + 1);
        if hi > b {
            break;
        }
        lo = hi;
    }
    count
}

/// Streaming iterator of `GapRecord`s for `n = from_n..=to_n`.
pub struct GapStream {
    iter: PrimeIter,
    n: u64,
    to_n: u64,
    cur_p: u64,
}

impl Iterator for GapStream {
    type Item = GapRecord;

    fn next(&mut self) -> Option<GapRecord> {
        if self.n > self.to_n {
            return None;
        }
        let q = self.iter.next()?;
        let rec = GapRecord {
            n: self.n,
            p_n: self.cur_p,
            p_next: q,
            gap: q - self.cur_p,
        };
        self.cur_p = q;
        self.n += 1;
        Some(rec)
    }
}

/// Gap records for `n = from_n..=to_n`, in order, O(segment) memory.
pub fn gap_stream(from_n: u64, to_n: u64, cfg: &EngineConfig) -> Result<GapStream> {
    if from_n == 0 || from_n > to_n {
        return Err(Error::Domain(format!(
            "gap_stream({from_n}, {to_n}): need 1 <= from_n <= to_n"
        )));
    }
    cfg.check_cap("gap_stream", nth_prime_upper_bound(to_n + 1))?;
    let p_from = nth_prime(from_n, cfg)?;
    Ok(GapStream {
        iter: PrimeIter::starting_at(p_from + 1, cfg.seg()),
        n: from_n,
        to_n,
        cur_p: p_from,
    })
}

/// Ascending primes starting at the first prime >= `start`; unbounded, the
/// caller stops the stream. Used by scan-style consumers in this crate.
pub(crate) fn primes_from(start: u64, cfg: &EngineConfig) -> PrimeIter {
    PrimeIter::starting_at(start, cfg.seg())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_prime_td(m: u64) -> bool {
        if m < 2 {
            return false;
        }
        let mut d = 2;
        while d * d <= m {
            if m.is_multiple_of(d) {
                return false;
            }
            d += 1;
        }
        true
    }

    #[test]
    fn segment_matches_trial_division() {
        let base = base_primes(1 << 8);
        for (lo, hi) in [(0, 100), (89, 127), (1000, 1100), (2, 3), (47, 48)] {
            let seg = sieve_segment(lo, hi, &base);
            for m in lo..hi {
                assert_eq!(seg.is_prime(m), is_prime_td(m), "m = {m} in [{lo}, {hi})");
            }
            let listed: Vec<u64> = seg.iter_primes().collect();
            let expect: Vec<u64> = (lo..hi).filter(|&m| is_prime_td(m)).collect();
            assert_eq!(listed, expect, "segment [{lo}, {hi})");
        }
    }

    #[test]
    fn segment_count_in_subranges() {
        let base = base_primes(1 << 8);
        let seg = sieve_segment(0, 1000, &base);
        for (a, b, expect) in [(0, 10, 4), (10, 30, 6), (4, 10, 2), (20, 26, 1)] {
            assert_eq!(seg.count_in(a, b), expect, "count [{a}, {b})");
        }
    }

    #[test]
    fn primes_up_to_small() {
        let cfg = EngineConfig::default();
        assert_eq!(primes_up_to(10, &cfg).unwrap(), vec![2, 3, 5, 7]);
        assert_eq!(primes_up_to(2, &cfg).unwrap(), vec![2]);
        let p29 = primes_up_to(29, &cfg).unwrap();
        assert_eq!(p29.len(), 10);
        assert_eq!(*p29.last().unwrap(), 29);
        assert!(matches!(primes_up_to(1, &cfg), Err(Error::EmptyDomain(_))));
        let tight = EngineConfig::with_cap(100);
        assert!(matches!(
            primes_up_to(101, &tight),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn nth_prime_small() {
        let cfg = EngineConfig::default();
        assert_eq!(nth_prime(1, &cfg).unwrap(), 2);
        assert_eq!(nth_prime(4, &cfg).unwrap(), 7);
        assert_eq!(nth_prime(10, &cfg).unwrap(), 29);
        assert_eq!(nth_prime(1000, &cfg).unwrap(), 7919);
        assert!(matches!(nth_prime(0, &cfg), Err(Error::Domain(_))));
    }

    #[test]
    fn prime_count_small() {
        let cfg = EngineConfig::default();
        assert_eq!(prime_count(0, &cfg).unwrap(), 0);
        assert_eq!(prime_count(1, &cfg).unwrap(), 0);
        assert_eq!(prime_count(2, &cfg).unwrap(), 1);
        assert_eq!(prime_count(100, &cfg).unwrap(), 25);
        assert_eq!(prime_count(1000, &cfg).unwrap(), 168);
    }

    #[test]
    fn count_between_examples() {
        let cfg = EngineConfig::default();
        assert_eq!(count_primes_between(4, 9, &cfg).unwrap(), 2); // 5, 7
        assert_eq!(count_primes_between(9, 25, &cfg).unwrap(), 5); // 11..23
        assert_eq!(count_primes_between(20, 25, &cfg).unwrap(), 1); // 23
        assert_eq!(count_primes_between(7, 7, &cfg).unwrap(), 0); // (7, 7] empty
        assert_eq!(count_primes_between(6, 7, &cfg).unwrap(), 1); // 7 included
        assert!(matches!(
            count_primes_between(9, 4, &cfg),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn gap_stream_examples() {
        let cfg = EngineConfig::default();
        let gaps: Vec<u64> = gap_stream(1, 4, &cfg).unwrap().map(|r| r.gap).collect();
        assert_eq!(gaps, vec![1, 2, 2, 4]); // 2,3,5,7,11

        let rec: Vec<GapRecord> = gap_stream(9, 9, &cfg).unwrap().collect();
        assert_eq!(
            rec,
            vec![GapRecord {
                n: 9,
                p_n: 23,
                p_next: 29,
                gap: 6
            }]
        );

        assert!(matches!(gap_stream(5, 4, &cfg), Err(Error::Domain(_))));
        assert!(matches!(gap_stream(0, 4, &cfg), Err(Error::Domain(_))));
    }

    #[test]
    fn gap_records_parity_invariant() {
        let cfg = EngineConfig::default();
        for rec in gap_stream(1, 500, &cfg).unwrap() {
            assert!(rec.p_next > rec.p_n && rec.p_n >= 2);
            assert!(rec.gap >= 1);
            if rec.n == 1 {
                assert_eq!(rec.gap, 1);
            } else {
                assert_eq!(rec.gap % 2, 0, "gap odd at n = {}", rec.n);
            }
        }
    }

    #[test]
    fn upper_bound_really_bounds() {
        let cfg = EngineConfig::default();
        for n in [1u64, 2, 5, 6, 10, 100, 1229, 10_000] {
            let p = nth_prime(n, &cfg).unwrap();
            assert!(
                p <= nth_prime_upper_bound(n),
                "bound too small at n = {n}: p = {p}"
            );
        }
    }

    #[test]
    fn segment_boundaries_do_not_drop_primes() {
        // Force tiny segments so boundaries land mid-range.
        let cfg = EngineConfig {
            segment_size: 1024,
            ..Default::default()
        };
        let got = primes_up_to(5000, &cfg).unwrap();
        let expect: Vec<u64> = (2..=5000).filter(|&m| is_prime_td(m)).collect();
        assert_eq!(got, expect);
    }
}
