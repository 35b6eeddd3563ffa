//! Exact integer helpers shared by the counting modules.
//!
//! Counts are `u128`. Every multiplication and addition on a count goes
//! through a checked helper so an overflow surfaces as [`Error::Overflow`]
//! instead of wrapping.

use num_integer::Integer;

use crate::error::{Error, Result};

/// An exact non-negative count.
pub type Count = u128;

/// Binomial coefficient with the zero convention: `C(a, b) = 0` whenever
/// `a < 0`, `b < 0` or `b > a`.
///
/// ```
/// use symcycle::arith::binomial;
/// assert_eq!(binomial(5, 2).unwrap(), 10);
/// assert_eq!(binomial(3, 5).unwrap(), 0);
/// assert_eq!(binomial(-1, 0).unwrap(), 0);
/// ```
pub fn binomial(a: i64, b: i64) -> Result<Count> {
    if a < 0 || b < 0 || b > a {
        return Ok(0);
    }
    let b = b.min(a - b) as u128;
    let a = a as u128;
    let mut acc: u128 = 1;
    for i in 1..=b {
        // acc * (a - b + i) / i is exact; divide out the gcd first so the
        // intermediate product stays as small as possible.
        let num = a - b + i;
        let g = acc.gcd(&i);
        let (acc_r, den) = (acc / g, i / g);
        let num_r = num / den;
        debug_assert_eq!(num % den, 0);
        acc = acc_r
            .checked_mul(num_r)
            .ok_or(Error::Overflow("binomial"))?;
    }
    Ok(acc)
}

/// Signed view of [`binomial`], for closed forms that mix binomials with
/// signed linear factors.
pub fn binomial_signed(a: i64, b: i64) -> Result<i128> {
    let v = binomial(a, b)?;
    i128::try_from(v).map_err(|_| Error::Overflow("binomial"))
}

pub fn mul(a: Count, b: Count) -> Result<Count> {
    a.checked_mul(b).ok_or(Error::Overflow("count product"))
}

pub fn add(a: Count, b: Count) -> Result<Count> {
    a.checked_add(b).ok_or(Error::Overflow("count sum"))
}

pub fn mul_signed(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or(Error::Overflow("signed product"))
}

pub fn add_signed(a: i128, b: i128) -> Result<i128> {
    a.checked_add(b).ok_or(Error::Overflow("signed sum"))
}

/// `x / d`, erroring if the division is not exact.
pub fn exact_div(x: i64, d: i64) -> Result<i64> {
    if x.rem_euclid(d) != 0 {
        return Err(Error::Parity {
            numerator: x,
            denominator: d,
        });
    }
    Ok(x.div_euclid(d))
}

/// Converts a signed closed-form value to a count. A negative value means the
/// formula was evaluated outside the region where it counts anything.
pub fn to_count(v: i128) -> Result<Count> {
    Count::try_from(v).map_err(|_| Error::Domain(format!("closed form evaluated to {v} < 0")))
}
