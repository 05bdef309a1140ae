//! High-precision interval tier: outward-rounded dyadic intervals with
//! enclosures for ln, exp, sqrt, and real powers.
//!
//! Every operation returns an interval guaranteed to contain the exact real
//! result. Series truncation errors are bounded explicitly and widened into
//! the enclosure, so a separated comparison at this tier is a certificate.

use std::cmp::Ordering;

use crate::kernel::dyadic::{Dir, Dyadic};
use crate::kernel::expr::Expr;

/// Why an interval evaluation could not produce an enclosure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum IvError {
    /// Argument certainly outside the function's domain; no precision helps.
    Domain(String),
    /// Enclosure too wide to evaluate (e.g. ln of an interval straddling
    /// zero, division by an interval containing zero, oversized exponent).
    /// Escalating precision may resolve it.
    Escalate,
}

#[derive(Debug, Clone)]
pub(crate) struct Iv {
    pub lo: Dyadic,
    pub hi: Dyadic,
}

impl Iv {
    pub fn point(v: Dyadic) -> Iv {
        Iv {
            lo: v.clone(),
            hi: v,
        }
    }

    pub fn from_i64(v: i64) -> Iv {
        Iv::point(Dyadic::from_i64(v))
    }

    pub fn from_ratio(num: i64, den: i64, prec: u32) -> Iv {
        let n = Dyadic::from_i64(num);
        let d = Dyadic::from_i64(den);
        Iv {
            lo: n.div(&d, prec, Dir::Down),
            hi: n.div(&d, prec, Dir::Up),
        }
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// Largest absolute endpoint, for truncation bookkeeping.
    fn mag_hi(&self) -> Dyadic {
        let la = self.lo.abs();
        let ha = self.hi.abs();
        if la.cmp(&ha) == Ordering::Greater {
            la
        } else {
            ha
        }
    }

    pub fn add(&self, other: &Iv, prec: u32) -> Iv {
        Iv {
            lo: self.lo.add(&other.lo).round(prec, Dir::Down),
            hi: self.hi.add(&other.hi).round(prec, Dir::Up),
        }
    }

    pub fn sub(&self, other: &Iv, prec: u32) -> Iv {
        Iv {
            lo: self.lo.sub(&other.hi).round(prec, Dir::Down),
            hi: self.hi.sub(&other.lo).round(prec, Dir::Up),
        }
    }

    pub fn mul(&self, other: &Iv, prec: u32) -> Iv {
        let candidates = [
            self.lo.mul(&other.lo),
            self.lo.mul(&other.hi),
            self.hi.mul(&other.lo),
            self.hi.mul(&other.hi),
        ];
        let mut lo = candidates[0].clone();
        let mut hi = candidates[0].clone();
        for c in &candidates[1..] {
            if c.cmp(&lo) == Ordering::Less {
                lo = c.clone();
            }
            if c.cmp(&hi) == Ordering::Greater {
                hi = c.clone();
            }
        }
        Iv {
            lo: lo.round(prec, Dir::Down),
            hi: hi.round(prec, Dir::Up),
        }
    }

    pub fn div(&self, other: &Iv, prec: u32) -> Result<Iv, IvError> {
        if other.contains_zero() {
            if other.lo.is_zero() && other.hi.is_zero() {
                return Err(IvError::Domain("division by zero".into()));
            }
            return Err(IvError::Escalate);
        }
        let mut lo: Option<Dyadic> = None;
        let mut hi: Option<Dyadic> = None;
        for a in [&self.lo, &self.hi] {
            for b in [&other.lo, &other.hi] {
                let d = a.div(b, prec, Dir::Down);
                let u = a.div(b, prec, Dir::Up);
                lo = Some(match lo {
                    None => d,
                    Some(cur) => {
                        if d.cmp(&cur) == Ordering::Less {
                            d
                        } else {
                            cur
                        }
                    }
                });
                hi = Some(match hi {
                    None => u,
                    Some(cur) => {
                        if u.cmp(&cur) == Ordering::Greater {
                            u
                        } else {
                            cur
                        }
                    }
                });
            }
        }
        Ok(Iv {
            lo: lo.unwrap(),
            hi: hi.unwrap(),
        })
    }

    pub fn sqrt(&self, prec: u32) -> Result<Iv, IvError> {
        if self.hi.is_negative() {
            return Err(IvError::Domain("sqrt of negative value".into()));
        }
        if self.lo.is_negative() {
            return Err(IvError::Escalate);
        }
        Ok(Iv {
            lo: self.lo.sqrt(prec, Dir::Down),
            hi: self.hi.sqrt(prec, Dir::Up),
        })
    }

    /// ln over the interval; monotone, so endpoints suffice.
    pub fn ln(&self, prec: u32) -> Result<Iv, IvError> {
        if !self.hi.is_positive() {
            return Err(IvError::Domain("ln of non-positive value".into()));
        }
        if !self.lo.is_positive() {
            return Err(IvError::Escalate);
        }
        let lo = scalar_ln(&self.lo, prec);
        let hi = scalar_ln(&self.hi, prec);
        Ok(Iv {
            lo: lo.lo,
            hi: hi.hi,
        })
    }

    pub fn exp(&self, prec: u32) -> Result<Iv, IvError> {
        let lo = scalar_exp(&self.lo, prec)?;
        let hi = scalar_exp(&self.hi, prec)?;
        Ok(Iv {
            lo: lo.lo,
            hi: hi.hi,
        })
    }

    /// Real power with positive base: exp(exponent * ln(base)).
    pub fn pow(&self, exponent: &Iv, prec: u32) -> Result<Iv, IvError> {
        let l = self.ln(prec)?;
        l.mul(exponent, prec).exp(prec)
    }
}

/// Enclosure of ln(2) at the given working precision, via 2·atanh(1/3).
fn ln2(prec: u32) -> Iv {
    let t = Iv::from_ratio(1, 3, prec);
    atanh_series(&t, prec).mul(&Iv::from_i64(2), prec)
}

/// atanh(t) = t + t³/3 + t⁵/5 + ... for 0 <= t <= 1/3 (interval-safe).
///
/// The truncation remainder after the last added term T_k (degree 2k+1) is
/// bounded by T_{k+1} / (1 - t²) <= 2·T_{k+1} since t² <= 1/9.
fn atanh_series(t: &Iv, prec: u32) -> Iv {
    debug_assert!(!t.lo.is_negative());
    let eps = Dyadic::pow2(-(prec as i64) - 4);
    let t2 = t.mul(t, prec);
    let mut sum = t.clone();
    let mut power = t.clone();
    let mut k: i64 = 1;
    loop {
        power = power.mul(&t2, prec);
        let term = power
            .div(&Iv::from_i64(2 * k + 1), prec)
            .expect("odd denominator is nonzero");
        if term.hi.cmp(&eps) != Ordering::Greater {
            // Remaining tail, all positive terms.
            let tail = term.hi.mul(&Dyadic::from_i64(2));
            sum = Iv {
                lo: sum.lo,
                hi: sum.hi.add(&tail).round(prec, Dir::Up),
            };
            return sum;
        }
        sum = sum.add(&term, prec);
        k += 1;
    }
}

/// Enclosure of ln(x) for a positive dyadic scalar.
///
/// Reduces x = m·2^k with m in [1, 2), then ln x = k·ln2 + 2·atanh((m-1)/(m+1)).
pub(crate) fn scalar_ln(x: &Dyadic, prec: u32) -> Iv {
    assert!(x.is_positive(), "scalar_ln needs a positive argument");
    let wprec = prec + 32;
    let k = x.floor_log2();
    let m = Dyadic::from_big(x.m.clone(), -(x.bits() as i64 - 1));
    let one = Dyadic::from_i64(1);
    let ln_m = if m.cmp(&one) == Ordering::Equal {
        Iv::point(Dyadic::zero())
    } else {
        let num = Iv::point(m.sub(&one));
        let den = Iv::point(m.add(&one));
        let t = num.div(&den, wprec).expect("m + 1 > 0");
        atanh_series(&t, wprec).mul(&Iv::from_i64(2), wprec)
    };
    let scaled = ln2(wprec).mul(&Iv::from_i64(k), wprec);
    let total = scaled.add(&ln_m, wprec);
    Iv {
        lo: total.lo.round(prec + 8, Dir::Down),
        hi: total.hi.round(prec + 8, Dir::Up),
    }
}

/// Enclosure of exp(x) for a dyadic scalar.
///
/// Argument reduction r = x / 2^s with |r| <= 2^-4 (exact), Taylor series
/// with an explicit remainder bound, then s squarings.
pub(crate) fn scalar_exp(x: &Dyadic, prec: u32) -> Result<Iv, IvError> {
    if x.is_zero() {
        return Ok(Iv::from_i64(1));
    }
    let wprec = prec + 64;
    let k = x.floor_log2();
    if k > 24 {
        // exp(2^24) has ~2^24 bits of integer part; nothing in this crate
        // needs it and precision will not help, so hand back escalation
        // which bottoms out as an Inconclusive verdict.
        return Err(IvError::Escalate);
    }
    let s = (k + 5).max(0) as u32;
    let r = Iv::point(Dyadic::from_big(x.m.clone(), x.e - s as i64));
    let eps = Dyadic::pow2(-(wprec as i64) - 4);

    let mut sum = Iv::from_i64(1);
    let mut term = Iv::from_i64(1);
    let mut i: i64 = 1;
    loop {
        term = term
            .mul(&r, wprec)
            .div(&Iv::from_i64(i), wprec)
            .expect("factorial denominator nonzero");
        let mag = term.mag_hi();
        if mag.cmp(&eps) != Ordering::Greater {
            // |tail| <= |term| * 1/(1 - 2^-4) <= 2|term|; sign unknown.
            let tail = mag.mul(&Dyadic::from_i64(2));
            sum = Iv {
                lo: sum.lo.sub(&tail).round(wprec, Dir::Down),
                hi: sum.hi.add(&tail).round(wprec, Dir::Up),
            };
            break;
        }
        sum = sum.add(&term, wprec);
        i += 1;
    }
    for _ in 0..s {
        sum = sum.mul(&sum, wprec);
    }
    Ok(Iv {
        lo: sum.lo.round(prec + 8, Dir::Down),
        hi: sum.hi.round(prec + 8, Dir::Up),
    })
}

/// Evaluate an expression to an enclosure at the given precision.
pub(crate) fn eval_iv(expr: &Expr, prec: u32) -> Result<Iv, IvError> {
    match expr {
        Expr::Int(v) => Ok(Iv::from_i64(*v)),
        Expr::Ratio(n, d) => Ok(Iv::from_ratio(*n, *d, prec)),
        Expr::Add(a, b) => Ok(eval_iv(a, prec)?.add(&eval_iv(b, prec)?, prec)),
        Expr::Sub(a, b) => Ok(eval_iv(a, prec)?.sub(&eval_iv(b, prec)?, prec)),
        Expr::Mul(a, b) => Ok(eval_iv(a, prec)?.mul(&eval_iv(b, prec)?, prec)),
        Expr::Div(a, b) => eval_iv(a, prec)?.div(&eval_iv(b, prec)?, prec),
        Expr::Ln(a) => eval_iv(a, prec)?.ln(prec),
        Expr::Exp(a) => eval_iv(a, prec)?.exp(prec),
        Expr::Sqrt(a) => eval_iv(a, prec)?.sqrt(prec),
        Expr::Pow(a, b) => eval_iv(a, prec)?.pow(&eval_iv(b, prec)?, prec),
    }
}
