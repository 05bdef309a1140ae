//! Float tier: binary64 evaluation with a conservative running error bound.
//!
//! Each node propagates `(value, err)` where `err` bounds the absolute
//! distance to the true real value, assuming every elementary operation is
//! off by at most a relative `per_op` (the policy's `float_margin_factor`,
//! a deliberately generous multiple of 2^-52). The bound is a cheap gate:
//! when an inequality's sides are closer than the summed bounds, the kernel
//! escalates to interval arithmetic instead of trusting the floats.

use crate::error::{Error, Result};
use crate::kernel::expr::Expr;

const F64_EXACT_INT: f64 = 9_007_199_254_740_992.0; // 2^53

/// Evaluate to `(value, absolute error bound)`.
///
/// Returns `Err` only for certain domain violations (ln/sqrt of a
/// non-positive value, division by exact zero). Situations the float tier
/// merely cannot bound (argument interval straddles zero, overflow) come
/// back with an infinite error bound so the caller escalates.
pub(crate) fn eval_f64(expr: &Expr, per_op: f64) -> Result<(f64, f64)> {
    match expr {
        Expr::Int(k) => {
            let v = *k as f64;
            let err = if k.unsigned_abs() as f64 <= F64_EXACT_INT {
                0.0
            } else {
                v.abs() * per_op
            };
            Ok((v, err))
        }
        Expr::Ratio(n, d) => {
            let v = *n as f64 / *d as f64;
            Ok((v, v.abs() * per_op))
        }
        Expr::Add(a, b) => {
            let (x, ex) = eval_f64(a, per_op)?;
            let (y, ey) = eval_f64(b, per_op)?;
            let v = x + y;
            Ok((v, ex + ey + v.abs() * per_op))
        }
        Expr::Sub(a, b) => {
            let (x, ex) = eval_f64(a, per_op)?;
            let (y, ey) = eval_f64(b, per_op)?;
            let v = x - y;
            Ok((v, ex + ey + v.abs() * per_op))
        }
        Expr::Mul(a, b) => {
            let (x, ex) = eval_f64(a, per_op)?;
            let (y, ey) = eval_f64(b, per_op)?;
            let v = x * y;
            Ok((v, x.abs() * ey + y.abs() * ex + ex * ey + v.abs() * per_op))
        }
        Expr::Div(a, b) => {
            let (x, ex) = eval_f64(a, per_op)?;
            let (y, ey) = eval_f64(b, per_op)?;
            if y == 0.0 && ey == 0.0 {
                return Err(Error::Domain(format!("division by zero in {expr}")));
            }
            let v = x / y;
            if y.abs() <= 2.0 * ey {
                return Ok((v, f64::INFINITY));
            }
            Ok((v, (ex + v.abs() * ey) / (y.abs() - ey) + v.abs() * per_op))
        }
        Expr::Ln(a) => {
            let (x, ex) = eval_f64(a, per_op)?;
            if x + ex <= 0.0 {
                return Err(Error::Domain(format!("ln of non-positive value in {expr}")));
            }
            if x - ex <= 0.0 {
                return Ok((f64::NAN, f64::INFINITY));
            }
            let v = x.ln();
            Ok((v, ex / (x - ex) + (v.abs() + 1.0) * per_op))
        }
        Expr::Exp(a) => {
            let (x, ex) = eval_f64(a, per_op)?;
            if x > 700.0 {
                return Ok((f64::INFINITY, f64::INFINITY));
            }
            let v = x.exp();
            let err = if ex.is_finite() {
                v * ex.exp_m1() + v * per_op
            } else {
                f64::INFINITY
            };
            Ok((v, err))
        }
        Expr::Sqrt(a) => {
            let (x, ex) = eval_f64(a, per_op)?;
            if x + ex < 0.0 {
                return Err(Error::Domain(format!("sqrt of negative value in {expr}")));
            }
            let v = x.max(0.0).sqrt();
            if x - ex < 0.0 {
                // Interval touches zero: exact only at x = 0 with no error.
                if x == 0.0 && ex == 0.0 {
                    return Ok((0.0, 0.0));
                }
                return Ok((v, f64::INFINITY));
            }
            Ok((
                v,
                ex / (2.0 * (x - ex).sqrt().max(f64::MIN_POSITIVE)) + v * per_op,
            ))
        }
        Expr::Pow(base, exponent) => {
            let (b, eb) = eval_f64(base, per_op)?;
            let (c, ec) = eval_f64(exponent, per_op)?;
            if b + eb <= 0.0 {
                return Err(Error::Domain(format!(
                    "power of non-positive base in {expr}"
                )));
            }
            if b - eb <= 0.0 {
                return Ok((f64::NAN, f64::INFINITY));
            }
            // Treated as exp(c * ln b) for the error model.
            let t = b.ln();
            let et = eb / (b - eb) + (t.abs() + 1.0) * per_op;
            let u = c * t;
            let eu = c.abs() * et + t.abs() * ec + et * ec + u.abs() * per_op;
            if u > 700.0 {
                return Ok((f64::INFINITY, f64::INFINITY));
            }
            let v = u.exp();
            let err = if eu.is_finite() {
                v * eu.exp_m1() + v * per_op
            } else {
                f64::INFINITY
            };
            Ok((v, err))
        }
    }
}
