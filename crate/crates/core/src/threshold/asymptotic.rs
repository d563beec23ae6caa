//! Symbolic asymptotics over the expression tree.
//!
//! Every recognised expression is summarised as either eventually bounded
//! or `Theta(coef * n^exp * log2(n)^log)`. Anything outside the recognised
//! patterns yields `None`, and the classifier falls back to sampling.

use std::cmp::Ordering;

use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, Zero};

use super::expr::Expr;

pub(crate) type Q = Ratio<i128>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Asym {
    /// Eventually bounded by a constant (includes eventually zero).
    Bounded,
    /// `Theta(coef * n^exp * log^log n)` with `(exp, log) > (0, 0)`. `coef` is
    /// the exact leading coefficient when known.
    Grows { exp: Q, log: Q, coef: Option<Q> },
}

impl Asym {
    fn grows(exp: Q, log: Q, coef: Option<Q>) -> Self {
        Asym::Grows { exp, log, coef }
    }

    pub(crate) fn linear() -> Self {
        Asym::grows(Q::one(), Q::zero(), Some(Q::one()))
    }

    pub(crate) fn order(&self) -> (Q, Q) {
        match self {
            Asym::Bounded => (Q::zero(), Q::zero()),
            Asym::Grows { exp, log, .. } => (*exp, *log),
        }
    }

    pub(crate) fn coef(&self) -> Option<Q> {
        match self {
            Asym::Bounded => None,
            Asym::Grows { coef, .. } => *coef,
        }
    }

    fn cmp_order(&self, other: &Asym) -> Ordering {
        self.order().cmp(&other.order())
    }

    fn with_coef(&self, coef: Option<Q>) -> Self {
        match self {
            Asym::Bounded => Asym::Bounded,
            Asym::Grows { exp, log, .. } => Asym::grows(*exp, *log, coef),
        }
    }
}

fn both<T>(a: Option<T>, b: Option<T>, f: impl FnOnce(T, T) -> Option<T>) -> Option<T> {
    f(a?, b?)
}

fn to_q(k: u128) -> Option<Q> {
    i128::try_from(k).ok().map(Q::from_integer)
}

/// Sum of two nonnegative quantities.
fn sum(a: Asym, b: Asym) -> Asym {
    match a.cmp_order(&b) {
        Ordering::Greater => a,
        Ordering::Less => b,
        Ordering::Equal => {
            let coef = both(a.coef(), b.coef(), |x, y| x.checked_add(&y));
            a.with_coef(coef)
        }
    }
}

/// `max(0, a - b)` for nonnegative `a`, `b`. `None` when leading terms cancel.
fn difference(a: Asym, b: Asym) -> Option<Asym> {
    match (&a, &b) {
        (Asym::Bounded, _) => Some(Asym::Bounded),
        (_, Asym::Bounded) => Some(a),
        _ => match a.cmp_order(&b) {
            Ordering::Greater => Some(a),
            Ordering::Less => Some(Asym::Bounded),
            Ordering::Equal => {
                let (ca, cb) = (a.coef()?, b.coef()?);
                match ca.cmp(&cb) {
                    Ordering::Greater => Some(a.with_coef(ca.checked_sub(&cb))),
                    Ordering::Less => Some(Asym::Bounded),
                    Ordering::Equal => None,
                }
            }
        },
    }
}

fn extremum(a: Asym, b: Asym, take_max: bool) -> Asym {
    match a.cmp_order(&b) {
        Ordering::Greater => {
            if take_max {
                a
            } else {
                b
            }
        }
        Ordering::Less => {
            if take_max {
                b
            } else {
                a
            }
        }
        Ordering::Equal => {
            let coef = both(a.coef(), b.coef(), |x, y| Some(if take_max { x.max(y) } else { x.min(y) }));
            a.with_coef(coef)
        }
    }
}

fn rational_sqrt(q: Q) -> Option<Q> {
    let root = |v: i128| -> Option<i128> {
        if v < 0 {
            return None;
        }
        let r = (v as u128).isqrt() as i128;
        (r * r == v).then_some(r)
    };
    Some(Q::new(root(*q.numer())?, root(*q.denom())?))
}

/// Leading-order summary of `e`, or `None` when no rule applies.
pub(crate) fn growth(e: &Expr) -> Option<Asym> {
    if !e.mentions_n() {
        return Some(Asym::Bounded);
    }
    match e {
        Expr::Const(_) => Some(Asym::Bounded),
        Expr::Var => Some(Asym::linear()),
        Expr::Add(a, b) => Some(sum(growth(a)?, growth(b)?)),
        Expr::Sub(a, b) => difference(growth(a)?, growth(b)?),
        Expr::Mul(a, b) => {
            for (c, other) in [(a, b), (b, a)] {
                if let Some(k) = c.constant_value() {
                    if k == 0 {
                        return Some(Asym::Bounded);
                    }
                    let g = growth(other)?;
                    let coef = both(g.coef(), to_q(k), |x, y| x.checked_mul(&y));
                    return Some(g.with_coef(coef));
                }
            }
            match (growth(a)?, growth(b)?) {
                (
                    Asym::Grows {
                        exp: ea,
                        log: la,
                        coef: ca,
                    },
                    Asym::Grows {
                        exp: eb,
                        log: lb,
                        coef: cb,
                    },
                ) => Some(Asym::grows(ea + eb, la + lb, both(ca, cb, |x, y| x.checked_mul(&y)))),
                // a bounded factor might tend to zero
                _ => None,
            }
        }
        Expr::Scale { num, den, inner, .. } => {
            if *num == 0 {
                return Some(Asym::Bounded);
            }
            let g = growth(inner)?;
            let factor = both(to_q(*num), to_q(*den), |p, q| p.checked_div(&q));
            let coef = both(g.coef(), factor, |x, y| x.checked_mul(&y));
            Some(g.with_coef(coef))
        }
        Expr::Log2Ceil(x) => match growth(x)? {
            Asym::Bounded => Some(Asym::Bounded),
            // log2(c * n^a * log^b n) = a * log2 n + o(log n)
            Asym::Grows { exp, .. } if exp > Q::zero() => Some(Asym::grows(Q::zero(), Q::one(), Some(exp))),
            // iterated logarithms are not represented
            Asym::Grows { .. } => None,
        },
        Expr::SqrtCeil(x) => match growth(x)? {
            Asym::Bounded => Some(Asym::Bounded),
            Asym::Grows { exp, log, coef } => {
                let half = Q::new(1, 2);
                Some(Asym::grows(exp * half, log * half, coef.and_then(rational_sqrt)))
            }
        },
        Expr::LogRatio { num, arg } => {
            let g = growth(num)?;
            match (g, growth(arg)?) {
                (Asym::Bounded, _) => Some(Asym::Bounded),
                (Asym::Grows { exp, log, coef }, Asym::Grows { exp: ea, .. }) if ea > Q::zero() => {
                    let coef = coef.and_then(|c| Some(c / ea));
                    let out = Asym::grows(exp, log - Q::one(), coef);
                    // (0, 1) / log collapses to a bounded quantity
                    if out.order() <= (Q::zero(), Q::zero()) {
                        Some(Asym::Bounded)
                    } else {
                        Some(out)
                    }
                }
                _ => None,
            }
        }
        Expr::Min(a, b) => Some(extremum(growth(a)?, growth(b)?, false)),
        Expr::Max(a, b) => Some(extremum(growth(a)?, growth(b)?, true)),
    }
}

/// Growth of `n - f(n)` for an `f` whose leading term is exactly `n`.
/// `Bounded` here is an upper bound only: the deficit may be negative.
pub(crate) fn deficit(e: &Expr) -> Option<Asym> {
    let is_unit_linear = |x: &Expr| growth(x).map(|g| g.order() == (Q::one(), Q::zero()) && g.coef() == Some(Q::one()));
    match e {
        Expr::Var => Some(Asym::Bounded),
        Expr::Add(a, b) => {
            let (lin, rest) = if is_unit_linear(a) == Some(true) { (a, b) } else { (b, a) };
            let d = deficit(lin)?;
            let g = growth(rest)?;
            match (&d, &g) {
                (_, Asym::Bounded) => Some(d),
                (Asym::Bounded, _) => Some(Asym::Bounded),
                _ => match d.cmp_order(&g) {
                    Ordering::Greater => Some(d),
                    Ordering::Less => Some(Asym::Bounded),
                    Ordering::Equal => {
                        let (cd, cg) = (d.coef()?, g.coef()?);
                        match cd.cmp(&cg) {
                            Ordering::Greater => Some(d.with_coef(cd.checked_sub(&cg))),
                            Ordering::Less => Some(Asym::Bounded),
                            Ordering::Equal => None,
                        }
                    }
                },
            }
        }
        Expr::Sub(a, b) => Some(sum(deficit(a)?, growth(b)?)),
        Expr::Mul(a, b) => {
            if a.constant_value() == Some(1) {
                deficit(b)
            } else if b.constant_value() == Some(1) {
                deficit(a)
            } else {
                None
            }
        }
        Expr::Scale { num, den, inner, .. } if num == den => deficit(inner),
        Expr::Min(a, b) => {
            let (da, db) = (deficit(a)?, deficit(b)?);
            Some(extremum(da, db, true))
        }
        Expr::Max(a, b) => match (deficit(a), deficit(b)) {
            (Some(da), Some(db)) => Some(extremum(da, db, false)),
            (Some(Asym::Bounded), None) | (None, Some(Asym::Bounded)) => Some(Asym::Bounded),
            _ => None,
        },
        _ => None,
    }
}
