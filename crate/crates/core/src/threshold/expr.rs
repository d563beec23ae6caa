//! Threshold expression trees and their exact integer semantics.

use std::fmt;

use super::logratio;
use super::ThresholdError;

/// Rounding mode of a rational scale node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rounding {
    Ceil,
    Floor,
}

/// A nondecreasing-candidate function of the universe size `n`.
///
/// Every node evaluates to a natural number. Subtraction truncates at zero,
/// so every expression is total on `n >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Expr {
    Const(u128),
    /// The universe size `n`.
    Var,
    Add(Box<Expr>, Box<Expr>),
    /// `max(0, a - b)`.
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    /// `ceil(num/den * inner)` or `floor(num/den * inner)`; `den > 0`.
    Scale {
        num: u128,
        den: u128,
        rounding: Rounding,
        inner: Box<Expr>,
    },
    /// `ceil(log2(x))`, with `ceil(log2(0)) = ceil(log2(1)) = 0`.
    Log2Ceil(Box<Expr>),
    /// `ceil(sqrt(x))`.
    SqrtCeil(Box<Expr>),
    /// `ceil(num / max(1, log2(arg)))` with the real-valued logarithm.
    LogRatio { num: Box<Expr>, arg: Box<Expr> },
    Min(Box<Expr>, Box<Expr>),
    Max(Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn constant(k: u128) -> Self {
        Expr::Const(k)
    }

    pub fn n() -> Self {
        Expr::Var
    }

    pub fn add(a: Expr, b: Expr) -> Self {
        Expr::Add(Box::new(a), Box::new(b))
    }

    pub fn sub(a: Expr, b: Expr) -> Self {
        Expr::Sub(Box::new(a), Box::new(b))
    }

    pub fn mul(a: Expr, b: Expr) -> Self {
        Expr::Mul(Box::new(a), Box::new(b))
    }

    /// Panics if `den == 0`; the parser reports that case as an error instead.
    pub fn scale(num: u128, den: u128, rounding: Rounding, inner: Expr) -> Self {
        assert!(den > 0, "rational scale with zero denominator");
        Expr::Scale {
            num,
            den,
            rounding,
            inner: Box::new(inner),
        }
    }

    pub fn log2_ceil(x: Expr) -> Self {
        Expr::Log2Ceil(Box::new(x))
    }

    pub fn sqrt_ceil(x: Expr) -> Self {
        Expr::SqrtCeil(Box::new(x))
    }

    pub fn log_ratio(num: Expr, arg: Expr) -> Self {
        Expr::LogRatio {
            num: Box::new(num),
            arg: Box::new(arg),
        }
    }

    pub fn min(a: Expr, b: Expr) -> Self {
        Expr::Min(Box::new(a), Box::new(b))
    }

    pub fn max(a: Expr, b: Expr) -> Self {
        Expr::Max(Box::new(a), Box::new(b))
    }

    /// Exact value at `n`. Overflow of the 128-bit intermediate range is an
    /// error, never a wrap.
    pub fn eval(&self, n: u64) -> Result<u128, ThresholdError> {
        let overflow = || ThresholdError::Overflow { n };
        Ok(match self {
            Expr::Const(k) => *k,
            Expr::Var => n as u128,
            Expr::Add(a, b) => a.eval(n)?.checked_add(b.eval(n)?).ok_or_else(overflow)?,
            Expr::Sub(a, b) => a.eval(n)?.saturating_sub(b.eval(n)?),
            Expr::Mul(a, b) => a.eval(n)?.checked_mul(b.eval(n)?).ok_or_else(overflow)?,
            Expr::Scale {
                num,
                den,
                rounding,
                inner,
            } => {
                let scaled = inner.eval(n)?.checked_mul(*num).ok_or_else(overflow)?;
                match rounding {
                    Rounding::Ceil => scaled.div_ceil(*den),
                    Rounding::Floor => scaled / den,
                }
            }
            Expr::Log2Ceil(x) => ceil_log2(x.eval(n)?),
            Expr::SqrtCeil(x) => ceil_sqrt(x.eval(n)?),
            Expr::LogRatio { num, arg } => {
                let x = num.eval(n)?;
                let y = arg.eval(n)?;
                logratio::ceil_div_log2(x, y).map_err(|bits| ThresholdError::Precision { n, bits })?
            }
            Expr::Min(a, b) => a.eval(n)?.min(b.eval(n)?),
            Expr::Max(a, b) => a.eval(n)?.max(b.eval(n)?),
        })
    }

    /// Value of a subexpression that does not mention `n`.
    pub fn constant_value(&self) -> Option<u128> {
        if self.mentions_n() {
            None
        } else {
            self.eval(1).ok()
        }
    }

    pub fn mentions_n(&self) -> bool {
        match self {
            Expr::Const(_) => false,
            Expr::Var => true,
            Expr::Scale { inner, .. } => inner.mentions_n(),
            Expr::Log2Ceil(x) | Expr::SqrtCeil(x) => x.mentions_n(),
            Expr::Add(a, b)
            | Expr::Sub(a, b)
            | Expr::Mul(a, b)
            | Expr::Min(a, b)
            | Expr::Max(a, b)
            | Expr::LogRatio { num: a, arg: b } => a.mentions_n() || b.mentions_n(),
        }
    }

    /// True when every node preserves monotonicity, which makes the whole
    /// expression nondecreasing in `n`. Subtraction qualifies only with a
    /// constant subtrahend; the log-ratio node never does.
    pub fn is_structurally_monotone(&self) -> bool {
        match self {
            Expr::Const(_) | Expr::Var => true,
            Expr::Sub(a, b) => a.is_structurally_monotone() && !b.mentions_n(),
            Expr::LogRatio { num, arg } => !num.mentions_n() && !arg.mentions_n(),
            Expr::Scale { inner, .. } => inner.is_structurally_monotone(),
            Expr::Log2Ceil(x) | Expr::SqrtCeil(x) => x.is_structurally_monotone(),
            Expr::Add(a, b) | Expr::Mul(a, b) | Expr::Min(a, b) | Expr::Max(a, b) => {
                a.is_structurally_monotone() && b.is_structurally_monotone()
            }
        }
    }

    fn is_additive(&self) -> bool {
        matches!(self, Expr::Add(..) | Expr::Sub(..))
    }
}

pub fn ceil_log2(x: u128) -> u128 {
    if x <= 1 {
        0
    } else {
        (128 - (x - 1).leading_zeros()) as u128
    }
}

pub fn ceil_sqrt(x: u128) -> u128 {
    let r = x.isqrt();
    if r * r < x {
        r + 1
    } else {
        r
    }
}

// Printing is the inverse of parsing: `parse(e.to_string()) == e`.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Const(k) => write!(f, "{k}"),
            Expr::Var => write!(f, "n"),
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                let op = if matches!(self, Expr::Add(..)) { '+' } else { '-' };
                if b.is_additive() {
                    write!(f, "{a} {op} ({b})")
                } else {
                    write!(f, "{a} {op} {b}")
                }
            }
            Expr::Mul(a, b) => {
                if a.is_additive() {
                    write!(f, "({a})")?;
                } else {
                    write!(f, "{a}")?;
                }
                if b.is_additive() || matches!(**b, Expr::Mul(..)) {
                    write!(f, "*({b})")
                } else {
                    write!(f, "*{b}")
                }
            }
            Expr::Scale {
                num,
                den,
                rounding,
                inner,
            } => {
                let name = match rounding {
                    Rounding::Ceil => "ceil",
                    Rounding::Floor => "floor",
                };
                if *den == 1 {
                    write!(f, "{name}({num} * {inner})")
                } else {
                    write!(f, "{name}({num}/{den} * {inner})")
                }
            }
            Expr::Log2Ceil(x) => write!(f, "ceil(log2({x}))"),
            Expr::SqrtCeil(x) => write!(f, "ceil(sqrt({x}))"),
            Expr::LogRatio { num, arg } => write!(f, "ceil({num} / log2({arg}))"),
            Expr::Min(a, b) => write!(f, "min({a}, {b})"),
            Expr::Max(a, b) => write!(f, "max({a}, {b})"),
        }
    }
}
