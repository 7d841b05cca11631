//! Checked integer and rational arithmetic.
//!
//! Every coefficient in the crate is an `i64` (or a `Ratio<i64>` for the
//! log-Fano inputs); any overflow is reported as [`Error::Overflow`] instead
//! of wrapping.

use num_rational::Rational64;
use num_traits::CheckedAdd as _;
use num_traits::CheckedMul as _;
use num_traits::CheckedSub as _;

use crate::error::{Error, Result};

pub(crate) fn add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow)
}

pub(crate) fn sub(a: i64, b: i64) -> Result<i64> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

pub(crate) fn mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

pub(crate) fn neg(a: i64) -> Result<i64> {
    a.checked_neg().ok_or(Error::Overflow)
}

/// `acc + c * x`, checked.
pub(crate) fn add_mul(acc: i64, c: i64, x: i64) -> Result<i64> {
    add(acc, mul(c, x)?)
}

pub(crate) fn sum<I: IntoIterator<Item = i64>>(values: I) -> Result<i64> {
    let mut acc = 0i64;
    for v in values {
        acc = add(acc, v)?;
    }
    Ok(acc)
}

pub(crate) fn radd(a: Rational64, b: Rational64) -> Result<Rational64> {
    a.checked_add(&b).ok_or(Error::Overflow)
}

pub(crate) fn rsub(a: Rational64, b: Rational64) -> Result<Rational64> {
    a.checked_sub(&b).ok_or(Error::Overflow)
}

pub(crate) fn rmul(a: Rational64, b: Rational64) -> Result<Rational64> {
    a.checked_mul(&b).ok_or(Error::Overflow)
}

pub(crate) fn i128_mul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

pub(crate) fn i128_sub(a: i128, b: i128) -> Result<i128> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overflow_is_detected() {
        assert_eq!(add(i64::MAX, 1), Err(Error::Overflow));
        assert_eq!(mul(i64::MAX, 2), Err(Error::Overflow));
        assert_eq!(neg(i64::MIN), Err(Error::Overflow));
        assert_eq!(add(2, 3), Ok(5));
    }
}
