//! Threshold functions `f : N -> N`: parsing, exact evaluation, inversion,
//! validation and asymptotic classification.

mod asymptotic;
mod classify;
mod expr;
mod logratio;
mod parse;

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

pub use classify::{classify, dichotomy_verdict, Assumption, Case, Certainty, FunctionClass, Reason, Verdict};
pub use expr::{ceil_log2, ceil_sqrt, Expr, Rounding};

/// Largest `n` probed by inversion and the classifier's doubling schedule.
pub const HORIZON: u64 = 1 << 40;

/// Dense validation range `1..=DENSE_LIMIT`.
pub const DENSE_LIMIT: u64 = 4096;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ThresholdError {
    #[error("syntax error at offset {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("zero denominator in rational scale at offset {pos}")]
    ZeroDenominator { pos: usize },
    #[error("arithmetic overflow while evaluating f({n})")]
    Overflow { n: u64 },
    #[error("f({n}) could not be certified within {bits} bits of precision")]
    Precision { n: u64, bits: u64 },
    #[error("threshold functions are defined for n >= 1")]
    ZeroSize,
    #[error("f({n}) = {value} exceeds n + 1")]
    AboveNPlusOne { n: u64, value: u128 },
    #[error("f is not nondecreasing: f({n}) = {value} > f({next}) = {next_value}")]
    NotMonotone {
        n: u64,
        value: u128,
        next: u64,
        next_value: u128,
    },
}

type OpaqueFn = dyn Fn(u64) -> u128 + Send + Sync;

#[derive(Clone)]
enum Body {
    Dsl(Expr),
    Opaque { eval: Arc<OpaqueFn>, poly_time: bool },
}

/// A threshold function: a DSL expression, or a user-declared opaque
/// function whose classification is always empirical.
#[derive(Clone)]
pub struct Threshold {
    source: String,
    body: Body,
}

impl Threshold {
    pub fn parse(source: &str) -> Result<Self, ThresholdError> {
        let expr = parse::parse(source)?;
        Ok(Threshold {
            source: source.trim().to_string(),
            body: Body::Dsl(expr),
        })
    }

    pub fn from_expr(expr: Expr) -> Self {
        Threshold {
            source: expr.to_string(),
            body: Body::Dsl(expr),
        }
    }

    /// Escape hatch for functions outside the DSL. `poly_time` is the caller's
    /// declaration of whether `f(n)` is computable in time polynomial in `n`.
    pub fn opaque(name: &str, poly_time: bool, eval: impl Fn(u64) -> u128 + Send + Sync + 'static) -> Self {
        Threshold {
            source: name.to_string(),
            body: Body::Opaque {
                eval: Arc::new(eval),
                poly_time,
            },
        }
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn expr(&self) -> Option<&Expr> {
        match &self.body {
            Body::Dsl(e) => Some(e),
            Body::Opaque { .. } => None,
        }
    }

    /// Every DSL function is polynomial-time computable.
    pub fn is_poly_time(&self) -> bool {
        match &self.body {
            Body::Dsl(_) => true,
            Body::Opaque { poly_time, .. } => *poly_time,
        }
    }

    pub fn eval(&self, n: u64) -> Result<u128, ThresholdError> {
        if n == 0 {
            return Err(ThresholdError::ZeroSize);
        }
        match &self.body {
            Body::Dsl(e) => e.eval(n),
            Body::Opaque { eval, .. } => Ok(eval(n)),
        }
    }

    /// Least `q >= 1` with `f(q) >= h`, or `None` when `f` stays below `h` up to
    /// [`HORIZON`]. Exponential then binary search; exact for nondecreasing
    /// `f`. If `f` has dips (see [`Validation::max_dip`]) the result is still a
    /// crossing point, `f(q - 1) < h <= f(q)`.
    pub fn inverse(&self, h: u128) -> Result<Option<u64>, ThresholdError> {
        if self.eval(1)? >= h {
            return Ok(Some(1));
        }
        // f(lo) < h throughout
        let mut lo = 1u64;
        let mut hi = 2u64;
        while self.eval(hi)? < h {
            if hi == HORIZON {
                return Ok(None);
            }
            lo = hi;
            hi = (hi * 2).min(HORIZON);
        }
        while hi - lo > 1 {
            let mid = lo + (hi - lo) / 2;
            if self.eval(mid)? >= h {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        Ok(Some(hi))
    }

    /// Samples `1..=4096` and `p - 1, p, p + 1` for every power of two `p` up
    /// to [`HORIZON`].
    ///
    /// `f(n) <= n + 1` may fail only for `n <= SLACK`: such values make the
    /// quantifier false exactly as `n + 1` does. Monotonicity is checked up to
    /// small, temporary dips: no sample may fall below an earlier maximum `m`
    /// by more than `max(SLACK, ceil(sqrt(m)))`, and the samples around
    /// [`HORIZON`] must reach every earlier sample. This admits integer
    /// renderings such as `n - 2*ceil(log2(n))`, which drop by one after each
    /// power of two.
    pub fn validate(&self) -> Result<Validation, ThresholdError> {
        let mut samples: Vec<u64> = (1..=DENSE_LIMIT).collect();
        let mut p = DENSE_LIMIT * 2;
        while p <= HORIZON {
            samples.extend([p - 1, p, p + 1]);
            p *= 2;
        }
        let mut first_above: Option<(u64, u128)> = None;
        let mut peak: Option<(u64, u128)> = None;
        let mut max_dip = 0u128;
        let mut worst: Option<(u64, u128, u64, u128)> = None;
        for &n in &samples {
            let value = self.eval(n)?;
            if value > n as u128 + 1 {
                first_above.get_or_insert((n, value));
                if n > SLACK {
                    let (n, value) = first_above.unwrap();
                    return Err(ThresholdError::AboveNPlusOne { n, value });
                }
            }
            match peak {
                Some((m, top)) if top > value => {
                    let dip = top - value;
                    if dip > max_dip {
                        max_dip = dip;
                        worst = Some((m, top, n, value));
                    }
                    if dip > (SLACK as u128).max(ceil_sqrt(top)) {
                        return Err(ThresholdError::NotMonotone {
                            n: m,
                            value: top,
                            next: n,
                            next_value: value,
                        });
                    }
                }
                _ => peak = Some((n, value)),
            }
        }
        // dips must be temporary: the largest samples sit at the horizon
        let tail = &samples[samples.len() - 3..];
        if let Some((m, top)) = peak.filter(|(m, _)| !tail.contains(m)) {
            let mut best = (tail[0], self.eval(tail[0])?);
            for &n in &tail[1..] {
                let v = self.eval(n)?;
                if v > best.1 {
                    best = (n, v);
                }
            }
            let (n, value) = best;
            if value < top {
                return Err(ThresholdError::NotMonotone {
                    n: m,
                    value: top,
                    next: n,
                    next_value: value,
                });
            }
        }
        Ok(Validation {
            monotone_proved: self.expr().is_some_and(Expr::is_structurally_monotone),
            max_dip,
            dip_at: worst.map(|(m, _, n, _)| (m, n)),
        })
    }
}

/// Tolerance of [`Threshold::validate`] for small-`n` values above `n + 1`
/// and for dips below the running maximum.
pub const SLACK: u64 = 64;

/// Outcome of [`Threshold::validate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Validation {
    /// Monotonicity holds for all `n`, not just the sampled ones.
    pub monotone_proved: bool,
    /// Largest drop of a sample below an earlier sample; 0 if the samples
    /// are nondecreasing.
    pub max_dip: u128,
    /// First sample pair `(m, n)`, `m < n`, realising `max_dip`.
    pub dip_at: Option<(u64, u64)>,
}

impl fmt::Debug for Threshold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.body {
            Body::Dsl(e) => f.debug_tuple("Threshold").field(e).finish(),
            Body::Opaque { poly_time, .. } => f
                .debug_struct("Threshold")
                .field("opaque", &self.source)
                .field("poly_time", poly_time)
                .finish(),
        }
    }
}

impl fmt::Display for Threshold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.source)
    }
}
