//! Exact tier: bounded rational evaluation and big-integer
//! cross-exponentiation for pure power comparisons.

use std::cmp::Ordering;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{Pow, Zero};

use crate::error::{Error, Result};
use crate::kernel::expr::Expr;

/// Evaluate an expression exactly as a rational, refusing transcendental
/// nodes and anything whose numerator+denominator would exceed the bit
/// budget. `None` means "not decidable on this tier", not an error.
pub(crate) fn eval_rational(expr: &Expr, budget_bits: u64) -> Option<BigRational> {
    let r = match expr {
        Expr::Int(v) => BigRational::from_integer((*v).into()),
        Expr::Ratio(n, d) => BigRational::new((*n).into(), (*d).into()),
        Expr::Add(a, b) => eval_rational(a, budget_bits)? + eval_rational(b, budget_bits)?,
        Expr::Sub(a, b) => eval_rational(a, budget_bits)? - eval_rational(b, budget_bits)?,
        Expr::Mul(a, b) => eval_rational(a, budget_bits)? * eval_rational(b, budget_bits)?,
        Expr::Div(a, b) => {
            let d = eval_rational(b, budget_bits)?;
            if d.is_zero() {
                return None; // the float tier reports the domain error
            }
            eval_rational(a, budget_bits)? / d
        }
        Expr::Pow(base, exponent) => {
            let k = match **exponent {
                Expr::Int(k) if k.unsigned_abs() <= 1024 => k as i32,
                _ => return None,
            };
            let b = eval_rational(base, budget_bits)?;
            if k < 0 && b.is_zero() {
                return None;
            }
            b.pow(k)
        }
        Expr::Ln(_) | Expr::Exp(_) | Expr::Sqrt(_) => return None,
    };
    let size = r.numer().magnitude().bits() + r.denom().magnitude().bits();
    if size > budget_bits {
        None
    } else {
        Some(r)
    }
}

/// Exact ordering of two rational-only expressions, if both qualify.
pub(crate) fn compare_rational(lhs: &Expr, rhs: &Expr, budget_bits: u64) -> Option<Ordering> {
    let l = eval_rational(lhs, budget_bits)?;
    let r = eval_rational(rhs, budget_bits)?;
    Some(l.cmp(&r))
}

/// Ordering of p^(1/n) vs q^(1/m) through the exact integers p^m vs q^n.
pub(crate) fn cross_power_ordering(p: u64, n: u64, q: u64, m: u64) -> Result<Ordering> {
    let n32 = u32::try_from(n)
        .map_err(|_| Error::Domain(format!("root index {n} too large for exact comparison")))?;
    let m32 = u32::try_from(m)
        .map_err(|_| Error::Domain(format!("root index {m} too large for exact comparison")))?;
    let lhs = BigUint::from(p).pow(m32);
    let rhs = BigUint::from(q).pow(n32);
    Ok(lhs.cmp(&rhs))
}
