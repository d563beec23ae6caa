//! Four-way asymptotic case distinction and the resulting tractability
//! verdict.
//!
//! Classification first tries the symbolic rules in [`super::asymptotic`].
//! When none applies it falls back to the doubling schedule
//! `n = 2, 4, ..., 2^40` and reports the result as empirical. Witness
//! constants are always read off the same schedule; at `n = 2^j` the
//! logarithm is exactly `j`.

use std::fmt;

use num_rational::Ratio;
use num_traits::{One, Zero};

use super::asymptotic::{deficit, growth, Asym, Q};
use super::{Threshold, ThresholdError, HORIZON};

/// Largest witness constant tried for the near-`n` case.
pub const MAX_WITNESS_CONSTANT: u64 = 64;

const SCHEDULE_LEN: u32 = 40;
/// Exponent from which the schedule counts as "sufficiently large n".
const TAIL_FROM: u32 = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Case {
    /// `f(n) <= c` for all sampled `n >= n0`.
    Bounded { c: u128, n0: u64 },
    /// Unbounded and `o(n)`. `schedule` holds `(n, floor(n / f(n)))`, a
    /// sampled witness for the diverging divisor `s(n)`.
    SublinearUnbounded { schedule: Vec<(u64, u128)> },
    /// `Omega(n)` but `n - f(n)` outgrows every `c log n`.
    /// `linear_constant` is the least `f(n)/n` on the sampled tail and
    /// `divergence` holds `(n, floor((n - f(n)) / log2 n))`.
    LinearFarFromN {
        linear_constant: Ratio<u128>,
        divergence: Vec<(u64, u128)>,
    },
    /// `f(n) >= n - c log2 n` for all sampled `n >= n0`. `None` when no
    /// `c <= 64` works on the sample.
    NearN { c: Option<u64>, n0: Option<u64> },
}

impl Case {
    pub fn number(&self) -> u8 {
        match self {
            Case::Bounded { .. } => 1,
            Case::SublinearUnbounded { .. } => 2,
            Case::LinearFarFromN { .. } => 3,
            Case::NearN { .. } => 4,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Certainty {
    /// A symbolic rule fired.
    Proved,
    /// Only sampled evidence up to `horizon`.
    Empirical { horizon: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctionClass {
    pub case: Case,
    pub certainty: Certainty,
    pub poly_time: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Reason {
    ConstantLogBounded,
    NotPolyComputable,
    SublinearUnboundedEth,
    LinearNotClbEth,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Assumption {
    /// Exponential Time Hypothesis.
    Eth,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Verdict {
    pub tractable: bool,
    pub reason: Reason,
    pub assumption: Option<Assumption>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Bounded,
    Sublinear,
    LinearFar,
    NearN,
}

fn symbolic_kind(expr: &super::Expr) -> Option<Kind> {
    let g = growth(expr)?;
    let linear = (Q::one(), Q::zero());
    match g {
        Asym::Bounded => Some(Kind::Bounded),
        _ if g.order() < linear => Some(Kind::Sublinear),
        _ if g.order() == linear => {
            let coef = g.coef()?;
            if coef < Q::one() {
                return Some(Kind::LinearFar);
            }
            if coef > Q::one() {
                return None;
            }
            let d = deficit(expr)?;
            if d.order() <= (Q::zero(), Q::one()) {
                Some(Kind::NearN)
            } else if d.order() < linear {
                Some(Kind::LinearFar)
            } else {
                None
            }
        }
        _ => None,
    }
}

struct Samples {
    // (j, 2^j, f(2^j)) for j = 1..=40
    points: Vec<(u32, u64, u128)>,
}

impl Samples {
    fn take(f: &Threshold) -> Result<Self, ThresholdError> {
        let points = (1..=SCHEDULE_LEN)
            .map(|j| {
                let n = 1u64 << j;
                f.eval(n).map(|v| (j, n, v))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Samples { points })
    }

    fn tail(&self) -> impl Iterator<Item = &(u32, u64, u128)> {
        self.points.iter().filter(|(j, _, _)| *j >= TAIL_FROM)
    }

    fn value_at(&self, j: u32) -> u128 {
        self.points[(j - 1) as usize].2
    }

    /// Least sampled `n` from which `holds` is true through the end of the
    /// schedule, provided it covers the whole tail.
    fn onset(&self, holds: impl Fn(u32, u64, u128) -> bool) -> Option<u64> {
        let mut onset = None;
        for &(j, n, v) in self.points.iter().rev() {
            if !holds(j, n, v) {
                break;
            }
            onset = Some((j, n));
        }
        onset.filter(|(j, _)| *j <= TAIL_FROM).map(|(_, n)| n)
    }

    fn bounded_witness(&self) -> Case {
        let c = self.value_at(SCHEDULE_LEN);
        let n0 = self.onset(|_, _, v| v <= c).unwrap_or(2);
        Case::Bounded { c, n0 }
    }

    fn near_n_witness(&self) -> Option<(u64, u64)> {
        (0..=MAX_WITNESS_CONSTANT).find_map(|c| {
            self.onset(|j, n, v| v + (c as u128) * (j as u128) >= n as u128)
                .map(|n0| (c, n0))
        })
    }

    fn sublinear_witness(&self) -> Case {
        let schedule = self
            .points
            .iter()
            .filter(|(_, _, v)| *v > 0)
            .map(|&(_, n, v)| (n, n as u128 / v))
            .collect();
        Case::SublinearUnbounded { schedule }
    }

    fn deficit_over_log(&self) -> Vec<(u64, u128)> {
        self.points
            .iter()
            .map(|&(j, n, v)| (n, (n as u128).saturating_sub(v) / j as u128))
            .collect()
    }

    fn linear_far_witness(&self) -> Case {
        let linear_constant = self
            .tail()
            .map(|&(_, n, v)| Ratio::new(v, n as u128))
            .min()
            .unwrap_or_else(Ratio::zero);
        Case::LinearFarFromN {
            linear_constant,
            divergence: self.deficit_over_log(),
        }
    }

    fn empirical_kind(&self) -> Kind {
        let last = self.value_at(SCHEDULE_LEN);
        if self.tail().all(|&(_, _, v)| v == last) {
            return Kind::Bounded;
        }
        if self.near_n_witness().is_some() {
            return Kind::NearN;
        }
        // f(n)/n kept at least 3/4 of its value between 2^20 and 2^40
        let mid = self.value_at(TAIL_FROM);
        if 4 * last < 3 * (1u128 << (SCHEDULE_LEN - TAIL_FROM)) * mid {
            return Kind::Sublinear;
        }
        let per_log = self.deficit_over_log();
        let (d_mid, d_last) = (per_log[29].1, per_log[39].1);
        if d_last > MAX_WITNESS_CONSTANT as u128 && d_last > d_mid {
            Kind::LinearFar
        } else {
            Kind::NearN
        }
    }
}

/// Assigns `f` to exactly one of the four cases. Validates `f` first.
pub fn classify(f: &Threshold) -> Result<FunctionClass, ThresholdError> {
    f.validate()?;
    let samples = Samples::take(f)?;
    let symbolic = f.expr().and_then(symbolic_kind);
    let certainty = match symbolic {
        Some(_) => Certainty::Proved,
        None => Certainty::Empirical { horizon: HORIZON },
    };
    let case = match symbolic.unwrap_or_else(|| samples.empirical_kind()) {
        Kind::Bounded => samples.bounded_witness(),
        Kind::Sublinear => samples.sublinear_witness(),
        Kind::LinearFar => samples.linear_far_witness(),
        Kind::NearN => {
            let witness = samples.near_n_witness();
            Case::NearN {
                c: witness.map(|w| w.0),
                n0: witness.map(|w| w.1),
            }
        }
    };
    Ok(FunctionClass {
        case,
        certainty,
        poly_time: f.is_poly_time(),
    })
}

/// Tractable exactly for the constant-log-bounded cases. Intractability of
/// the other two cases is conditional on the ETH; a function that is not
/// polynomial-time computable is intractable unconditionally.
pub fn dichotomy_verdict(class: &FunctionClass) -> Verdict {
    if !class.poly_time {
        return Verdict {
            tractable: false,
            reason: Reason::NotPolyComputable,
            assumption: None,
        };
    }
    let (tractable, reason) = match class.case {
        Case::Bounded { .. } | Case::NearN { .. } => (true, Reason::ConstantLogBounded),
        Case::SublinearUnbounded { .. } => (false, Reason::SublinearUnboundedEth),
        Case::LinearFarFromN { .. } => (false, Reason::LinearNotClbEth),
    };
    Verdict {
        tractable,
        reason,
        assumption: (!tractable).then_some(Assumption::Eth),
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Case::Bounded { c, n0 } => write!(f, "Case1_Bounded c={c} n0={n0}"),
            Case::SublinearUnbounded { schedule } => {
                write!(f, "Case2_SublinearUnbounded")?;
                if let Some((n, s)) = schedule.last() {
                    write!(f, " s({n})={s}")?;
                }
                Ok(())
            }
            Case::LinearFarFromN {
                linear_constant,
                divergence,
            } => {
                write!(f, "Case3_LinearButFarFromN linear_constant={linear_constant}")?;
                if let Some((n, d)) = divergence.last() {
                    write!(f, " (n-f(n))/log2(n)@{n}={d}")?;
                }
                Ok(())
            }
            Case::NearN { c: Some(c), n0 } => {
                write!(f, "Case4_NearN c={c}")?;
                if let Some(n0) = n0 {
                    write!(f, " n0={n0}")?;
                }
                Ok(())
            }
            Case::NearN { c: None, .. } => write!(f, "Case4_NearN c>{MAX_WITNESS_CONSTANT} (unknown)"),
        }
    }
}

impl fmt::Display for Certainty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certainty::Proved => write!(f, "proved"),
            Certainty::Empirical { horizon } => write!(f, "empirical (N_max={horizon})"),
        }
    }
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Reason::ConstantLogBounded => "ConstantLogBounded",
            Reason::NotPolyComputable => "NotPolyComputable",
            Reason::SublinearUnboundedEth => "SublinearUnbounded_ETH",
            Reason::LinearNotClbEth => "LinearNotCLB_ETH",
        })
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.tractable {
            write!(f, "tractable ({})", self.reason)
        } else {
            match self.assumption {
                Some(Assumption::Eth) => write!(f, "intractable under ETH ({})", self.reason),
                None => write!(f, "intractable ({})", self.reason),
            }
        }
    }
}
