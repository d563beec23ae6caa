//! Exact `ceil(x / max(1, log2 y))` over the integers.
//!
//! The answer is the least `m` with `y^m >= 2^x`. When `y` is a power of two
//! that is a plain ceiling division. Otherwise `y^m` is never a power of two,
//! so the comparison against `2^x` is decided by bracketing `y^m` between a
//! truncated lower bound and a rounded-up upper bound, doubling the mantissa
//! width until the bracket excludes `2^x`.

use num_bigint::BigUint;
use num_traits::{One, Zero};

const START_BITS: u64 = 128;
const MAX_BITS: u64 = 1 << 15;

/// `Err(bits)` means the comparison stayed undecided at `bits` of precision.
pub(crate) fn ceil_div_log2(x: u128, y: u128) -> Result<u128, u64> {
    if x == 0 {
        return Ok(0);
    }
    if y <= 2 {
        return Ok(x);
    }
    let floor_log = (127 - y.leading_zeros()) as u128;
    if y.is_power_of_two() {
        return Ok(x.div_ceil(floor_log));
    }
    // floor_log < log2 y < floor_log + 1, so the answer lies in [lo, hi].
    let mut lo = x.div_ceil(floor_log + 1);
    let mut hi = x.div_ceil(floor_log);
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if power_reaches(y, mid, x)? {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    Ok(lo)
}

/// Decides `y^m >= 2^x` for `y` not a power of two and `m >= 1`.
fn power_reaches(y: u128, m: u128, x: u128) -> Result<bool, u64> {
    let mut bits = START_BITS;
    while bits <= MAX_BITS {
        let lower = Bracket::power(y, m, bits, false);
        if lower.at_least_pow2(x) {
            return Ok(true);
        }
        let upper = Bracket::power(y, m, bits, true);
        if upper.below_pow2(x) {
            return Ok(false);
        }
        bits *= 2;
    }
    Err(MAX_BITS)
}

/// `mantissa * 2^exponent`, with the mantissa kept to a fixed width.
struct Bracket {
    mantissa: BigUint,
    exponent: u128,
}

impl Bracket {
    fn power(base: u128, mut m: u128, bits: u64, round_up: bool) -> Self {
        let mut acc = Bracket {
            mantissa: BigUint::one(),
            exponent: 0,
        };
        let mut sq = Bracket {
            mantissa: BigUint::from(base),
            exponent: 0,
        };
        while m > 0 {
            if m & 1 == 1 {
                acc = acc.mul(&sq, bits, round_up);
            }
            m >>= 1;
            if m > 0 {
                sq = sq.mul(&sq, bits, round_up);
            }
        }
        acc
    }

    fn mul(&self, other: &Bracket, bits: u64, round_up: bool) -> Self {
        let mut mantissa = &self.mantissa * &other.mantissa;
        let mut exponent = self.exponent + other.exponent;
        let width = mantissa.bits();
        if width > bits {
            let shift = width - bits;
            let kept = &mantissa >> shift;
            let exact = (&kept << shift) == mantissa;
            mantissa = kept;
            if round_up && !exact {
                mantissa += 1u32;
            }
            exponent += shift as u128;
        }
        Bracket { mantissa, exponent }
    }

    fn at_least_pow2(&self, x: u128) -> bool {
        !self.mantissa.is_zero() && self.mantissa.bits() as u128 + self.exponent > x
    }

    fn below_pow2(&self, x: u128) -> bool {
        self.mantissa.bits() as u128 + self.exponent <= x
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // Independent route: exact big-integer powers.
    fn brute(x: u128, y: u128) -> u128 {
        if y <= 2 {
            return x;
        }
        let target = BigUint::one() << (x as usize);
        let yb = BigUint::from(y);
        let mut m = 0u128;
        let mut p = BigUint::one();
        while p < target {
            p *= &yb;
            m += 1;
        }
        m
    }

    #[test]
    fn matches_exact_powers_on_a_grid() {
        for y in 0u128..70 {
            for x in 0u128..300 {
                assert_eq!(ceil_div_log2(x, y).unwrap(), brute(x, y), "x={x} y={y}");
            }
        }
    }

    #[test]
    fn n_over_log_n_small_values() {
        // ceil(n / log2 n): n=3 -> 3/1.585 = 1.89, n=5 -> 2.15, n=10 -> 3.01
        assert_eq!(ceil_div_log2(3, 3).unwrap(), 2);
        assert_eq!(ceil_div_log2(5, 5).unwrap(), 3);
        assert_eq!(ceil_div_log2(10, 10).unwrap(), 4);
        assert_eq!(ceil_div_log2(16, 16).unwrap(), 4);
    }

    #[test]
    fn large_arguments_terminate() {
        let n = (1u128 << 40) + 12345;
        let v = ceil_div_log2(n, n).unwrap();
        // 40 < log2 n < 41
        assert!(v >= n.div_ceil(41) && v <= n.div_ceil(40));
    }

    proptest::proptest! {
        #[test]
        fn agrees_with_big_integer_powers(x in 0u128..1500, y in 3u128..5000) {
            proptest::prop_assert_eq!(ceil_div_log2(x, y).unwrap(), brute(x, y));
        }
    }
}
