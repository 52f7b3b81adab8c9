//! Bernoulli numbers and the Laurent coefficients of `tanh` and `coth`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{binomial, factorial, BigRational};

/// `B_0 ..= B_m`, with `B_1 = -1/2`.
pub fn bernoulli_table(m: usize) -> Vec<BigRational> {
    let mut b: Vec<BigRational> = Vec::with_capacity(m + 1);
    b.push(BigRational::one());
    for n in 1..=m {
        // sum_{j=0}^{n} C(n+1, j) B_j = 0
        let mut acc = BigRational::zero();
        for (j, bj) in b.iter().enumerate() {
            acc += bj * BigRational::from_integer(binomial(n as i64 + 1, j as i64));
        }
        b.push(-acc / BigRational::from_integer(BigInt::from(n + 1)));
    }
    b
}

pub fn bernoulli(m: usize) -> BigRational {
    bernoulli_table(m).pop().expect("table is never empty")
}

fn pow2(e: usize) -> BigInt {
    BigInt::one() << e
}

fn check_odd(m: i64, allow_minus_one: bool) -> Result<usize> {
    if (m >= 1 && m % 2 == 1) || (allow_minus_one && m == -1) {
        Ok(((m + 1) / 2) as usize)
    } else {
        Err(Error::InvalidSeriesIndex(m))
    }
}

/// `[z^m] tanh z` for odd `m >= 1`.
pub fn tanh_coeff(m: i64) -> Result<BigRational> {
    let j = check_odd(m, false)?;
    let b = bernoulli(2 * j);
    let scale = pow2(2 * j) * (pow2(2 * j) - 1u32);
    Ok(b * BigRational::new(scale, factorial(2 * j as u32)))
}

/// `[z^m] coth z` for `m = -1` or odd `m >= 1`.
pub fn coth_coeff(m: i64) -> Result<BigRational> {
    let j = check_odd(m, true)?;
    let b = bernoulli(2 * j);
    Ok(b * BigRational::new(pow2(2 * j), factorial(2 * j as u32)))
}

/// Coefficients `[z^(2j-1)]` for `j = 0..=jmax` of `tanh` (`j = 0` entry is zero)
/// or `coth`, sharing one Bernoulli table.
pub(crate) fn odd_coefficients(jmax: usize, coth: bool) -> Vec<BigRational> {
    let b = bernoulli_table(2 * jmax);
    (0..=jmax)
        .map(|j| {
            let base = &b[2 * j] * BigRational::new(pow2(2 * j), factorial(2 * j as u32));
            if coth {
                base
            } else {
                base * BigRational::from_integer(pow2(2 * j) - 1u32)
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use std::string::ToString;

    #[test]
    fn first_bernoulli_numbers() {
        assert_eq!(bernoulli(0), ratio(1, 1));
        assert_eq!(bernoulli(1), ratio(-1, 2));
        assert_eq!(bernoulli(2), ratio(1, 6));
        assert_eq!(bernoulli(4), ratio(-1, 30));
        assert_eq!(bernoulli(3), ratio(0, 1));
        assert_eq!(bernoulli(12), ratio(-691, 2730));
    }

    #[test]
    fn small_series_coefficients() {
        assert_eq!(tanh_coeff(1).unwrap(), ratio(1, 1));
        assert_eq!(tanh_coeff(3).unwrap(), ratio(-1, 3));
        assert_eq!(tanh_coeff(5).unwrap(), ratio(2, 15));
        assert_eq!(coth_coeff(-1).unwrap(), ratio(1, 1));
        assert_eq!(coth_coeff(1).unwrap(), ratio(1, 3));
        assert_eq!(coth_coeff(3).unwrap(), ratio(-1, 45));
    }

    #[test]
    fn invalid_indices() {
        assert_eq!(tanh_coeff(2), Err(Error::InvalidSeriesIndex(2)));
        assert_eq!(tanh_coeff(-1), Err(Error::InvalidSeriesIndex(-1)));
        assert_eq!(coth_coeff(0), Err(Error::InvalidSeriesIndex(0)));
        assert_eq!(coth_coeff(-3), Err(Error::InvalidSeriesIndex(-3)));
        assert_eq!(Error::InvalidSeriesIndex(2).to_string(), "invalid series index 2");
    }

    #[test]
    fn shared_table_matches() {
        let t = odd_coefficients(6, false);
        let c = odd_coefficients(6, true);
        assert!(t[0].is_zero());
        for j in 1..=6 {
            assert_eq!(t[j], tanh_coeff(2 * j as i64 - 1).unwrap());
            assert_eq!(c[j], coth_coeff(2 * j as i64 - 1).unwrap());
        }
        assert_eq!(c[0], coth_coeff(-1).unwrap());
    }
}
