//! Dyadic fractions `m * 2^e` over `BigInt`, with directed rounding.
//!
//! This is the scalar type underneath the high-precision interval tier.
//! Addition, subtraction, and multiplication are exact; rounding happens
//! only when a result is trimmed back to the working precision, and the
//! direction is always explicit so interval endpoints stay outward-safe.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Dir {
    Down,
    Up,
}

#[derive(Debug, Clone)]
pub(crate) struct Dyadic {
    pub m: BigInt,
    pub e: i64,
}

impl Dyadic {
    pub fn zero() -> Dyadic {
        Dyadic {
            m: BigInt::zero(),
            e: 0,
        }
    }

    pub fn from_i64(v: i64) -> Dyadic {
        Dyadic {
            m: BigInt::from(v),
            e: 0,
        }
    }

    pub fn from_big(m: BigInt, e: i64) -> Dyadic {
        Dyadic { m, e }
    }

    /// 2^e as a dyadic.
    pub fn pow2(e: i64) -> Dyadic {
        Dyadic {
            m: BigInt::from(1),
            e,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.m.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.m.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.m.is_negative()
    }

    /// Magnitude bits of the mantissa.
    pub fn bits(&self) -> u64 {
        self.m.magnitude().bits()
    }

    /// Exponent of the leading bit: value ∈ [2^k, 2^(k+1)) for positive
    /// values. Zero input is a caller bug.
    pub fn floor_log2(&self) -> i64 {
        debug_assert!(!self.is_zero());
        self.bits() as i64 - 1 + self.e
    }

    fn normalize(mut self) -> Dyadic {
        if self.m.is_zero() {
            self.e = 0;
            return self;
        }
        let tz = self.m.trailing_zeros().unwrap_or(0);
        if tz > 0 {
            self.m >>= tz;
            self.e += tz as i64;
        }
        self
    }

    /// Trim the mantissa to at most `prec` bits, rounding in `dir`
    /// (Down = toward -inf, Up = toward +inf). Exact when it already fits.
    pub fn round(self, prec: u32, dir: Dir) -> Dyadic {
        let bits = self.bits();
        if bits <= prec as u64 {
            return self.normalize();
        }
        let k = (bits - prec as u64) as i64;
        let divisor = BigInt::from(1) << (k as u64);
        let m = match dir {
            Dir::Down => self.m.div_floor(&divisor),
            Dir::Up => self.m.div_ceil(&divisor),
        };
        Dyadic { m, e: self.e + k }.normalize()
    }

    /// Exact sum.
    pub fn add(&self, other: &Dyadic) -> Dyadic {
        let e = self.e.min(other.e);
        let ma = &self.m << ((self.e - e) as u64);
        let mb = &other.m << ((other.e - e) as u64);
        Dyadic { m: ma + mb, e }
    }

    /// Exact difference.
    pub fn sub(&self, other: &Dyadic) -> Dyadic {
        self.add(&other.neg())
    }

    /// Exact product.
    pub fn mul(&self, other: &Dyadic) -> Dyadic {
        Dyadic {
            m: &self.m * &other.m,
            e: self.e + other.e,
        }
    }

    pub fn neg(&self) -> Dyadic {
        Dyadic {
            m: -&self.m,
            e: self.e,
        }
    }

    pub fn abs(&self) -> Dyadic {
        Dyadic {
            m: self.m.abs(),
            e: self.e,
        }
    }

    pub fn cmp(&self, other: &Dyadic) -> Ordering {
        let d = self.sub(other);
        if d.m.is_zero() {
            Ordering::Equal
        } else if d.m.is_negative() {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }

    /// Directed quotient with roughly `prec + 2` significant bits.
    pub fn div(&self, other: &Dyadic, prec: u32, dir: Dir) -> Dyadic {
        assert!(!other.is_zero(), "dyadic division by zero");
        if self.is_zero() {
            return Dyadic::zero();
        }
        let target = prec as u64 + 2;
        let extra = (other.bits() + target).saturating_sub(self.bits());
        let num = &self.m << extra;
        let q = match dir {
            Dir::Down => num.div_floor(&other.m),
            Dir::Up => num.div_ceil(&other.m),
        };
        Dyadic {
            m: q,
            e: self.e - other.e - extra as i64,
        }
        .round(prec, dir)
    }

    /// Directed square root; input must be non-negative.
    pub fn sqrt(&self, prec: u32, dir: Dir) -> Dyadic {
        assert!(!self.is_negative(), "dyadic sqrt of negative value");
        if self.is_zero() {
            return Dyadic::zero();
        }
        let target = 2 * (prec as u64 + 2);
        let mut shift = target.saturating_sub(self.bits());
        if (self.e - shift as i64) % 2 != 0 {
            shift += 1;
        }
        let scaled = &self.m << shift;
        let root = scaled.sqrt();
        let e = (self.e - shift as i64) / 2;
        let m = match dir {
            Dir::Down => root,
            Dir::Up => {
                if &root * &root == scaled {
                    root
                } else {
                    root + 1
                }
            }
        };
        Dyadic { m, e }.round(prec, dir)
    }

    /// Nearest-ish f64 for reporting; not used in any decision.
    pub fn to_f64_approx(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let bits = self.bits();
        let (m, e) = if bits > 53 {
            let k = bits - 53;
            (self.m.clone() >> k, self.e + k as i64)
        } else {
            (self.m.clone(), self.e)
        };
        let mf = i64::try_from(&m).map(|v| v as f64).unwrap_or(f64::NAN);
        mf * (e as f64).exp2()
    }
}
