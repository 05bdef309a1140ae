//! Expression tree for the inequality kernel.
//!
//! Expressions are built from integer and rational literals with
//! `+ - * /`, `ln`, `exp`, `sqrt`, and real powers of positive arguments.
//! Operator overloads are provided so predicate formulas read like the
//! inequalities they encode.

use std::fmt;
use std::ops;

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Int(i64),
    /// Rational literal; denominator kept positive, never zero.
    Ratio(i64, i64),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Ln(Box<Expr>),
    Exp(Box<Expr>),
    Sqrt(Box<Expr>),
    Pow(Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn int(v: i64) -> Expr {
        Expr::Int(v)
    }

    /// Literal for an engine-sized value (primes, indices, counts).
    pub fn uint(v: u64) -> Expr {
        Expr::Int(i64::try_from(v).expect("literal exceeds i64"))
    }

    pub fn ratio(num: i64, den: i64) -> Expr {
        assert!(den != 0, "rational literal with zero denominator");
        if den < 0 {
            Expr::Ratio(-num, -den)
        } else {
            Expr::Ratio(num, den)
        }
    }

    pub fn ln(self) -> Expr {
        Expr::Ln(Box::new(self))
    }

    pub fn exp(self) -> Expr {
        Expr::Exp(Box::new(self))
    }

    pub fn sqrt(self) -> Expr {
        Expr::Sqrt(Box::new(self))
    }

    pub fn pow(self, exponent: Expr) -> Expr {
        Expr::Pow(Box::new(self), Box::new(exponent))
    }

    /// ln²(x) as ln(x)·ln(x).
    pub fn ln_sq(self) -> Expr {
        let l = self.ln();
        l.clone() * l
    }

    /// Euler's number as exp(1).
    pub fn e() -> Expr {
        Expr::int(1).exp()
    }
}

impl From<i64> for Expr {
    fn from(v: i64) -> Expr {
        Expr::Int(v)
    }
}

impl From<u64> for Expr {
    fn from(v: u64) -> Expr {
        Expr::uint(v)
    }
}

impl ops::Add for Expr {
    type Output = Expr;
    fn add(self, rhs: Expr) -> Expr {
        Expr::Add(Box::new(self), Box::new(rhs))
    }
}

impl ops::Sub for Expr {
    type Output = Expr;
    fn sub(self, rhs: Expr) -> Expr {
        Expr::Sub(Box::new(self), Box::new(rhs))
    }
}

impl ops::Mul for Expr {
    type Output = Expr;
    fn mul(self, rhs: Expr) -> Expr {
        Expr::Mul(Box::new(self), Box::new(rhs))
    }
}

impl ops::Div for Expr {
    type Output = Expr;
    fn div(self, rhs: Expr) -> Expr {
        Expr::Div(Box::new(self), Box::new(rhs))
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(v) => write!(f, "{v}"),
            Expr::Ratio(n, d) => write!(f, "{n}/{d}"),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Sub(a, b) => write!(f, "({a} - {b})"),
            Expr::Mul(a, b) => write!(f, "({a} * {b})"),
            Expr::Div(a, b) => write!(f, "({a} / {b})"),
            Expr::Ln(a) => write!(f, "ln({a})"),
            Expr::Exp(a) => write!(f, "exp({a})"),
            Expr::Sqrt(a) => write!(f, "sqrt({a})"),
            Expr::Pow(a, b) => write!(f, "({a})^({b})"),
        }
    }
}
