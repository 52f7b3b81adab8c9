//! Big rationals and the integer helpers the formulas lean on.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub use num_rational::BigRational;

/// Builds a reduced fraction with a positive denominator.
pub fn rat_normalize(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<BigRational> {
    let den = den.into();
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    // `Ratio::new` reduces and moves the sign onto the numerator.
    Ok(BigRational::new(num.into(), den))
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn factorial(n: u32) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Binomial coefficient, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn pow2_f64(e: i64) -> f64 {
    if e >= -1022 {
        f64::from_bits(((e + 1023) as u64) << 52)
    } else {
        f64::from_bits(1u64 << (e + 1074))
    }
}

/// Rounds a rational to the nearest `f64`, ties to even.
pub fn to_f64_nearest(r: &BigRational) -> Result<f64> {
    if r.is_zero() {
        return Ok(0.0);
    }
    let negative = r.is_negative();
    let p: BigUint = r.numer().abs().to_biguint().expect("abs is nonnegative");
    let q: BigUint = r.denom().to_biguint().expect("denominator is positive");

    // floor(log2(p/q))
    let e0 = p.bits() as i64 - q.bits() as i64;
    let ge = if e0 >= 0 { p >= (&q << (e0 as u64)) } else { (&p << ((-e0) as u64)) >= q };
    let exp = if ge { e0 } else { e0 - 1 };
    if exp > 1023 {
        return Err(Error::Overflow);
    }
    let ulp = (exp - 52).max(-1074);
    let (num, den) = if ulp <= 0 { (p << ((-ulp) as u64), q) } else { (p, q << (ulp as u64)) };
    let (mut m, rem) = num.div_rem(&den);
    let twice = rem << 1u32;
    if twice > den || (twice == den && m.is_odd()) {
        m += 1u32;
    }
    let mantissa = m.to_u64().expect("mantissa fits in 54 bits") as f64;
    let value = mantissa * pow2_f64(ulp);
    if value.is_infinite() {
        return Err(Error::Overflow);
    }
    Ok(if negative { -value } else { value })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::string::ToString;

    #[test]
    fn normalizes() {
        assert_eq!(rat_normalize(2, 4).unwrap(), ratio(1, 2));
        let r = rat_normalize(3, -6).unwrap();
        assert_eq!(r.numer(), &BigInt::from(-1));
        assert_eq!(r.denom(), &BigInt::from(2));
        let z = rat_normalize(0, 7).unwrap();
        assert_eq!(z.numer(), &BigInt::zero());
        assert_eq!(z.denom(), &BigInt::one());
    }

    #[test]
    fn zero_denominator() {
        assert_eq!(rat_normalize(1, 0), Err(Error::DivisionByZero));
        assert_eq!(Error::DivisionByZero.to_string(), "division by zero");
    }

    #[test]
    fn rounding_matches_ieee_division() {
        for (a, b) in [(1i64, 3i64), (2, 3), (-7, 11), (1, 10), (355, 113), (1 << 60, 3)] {
            assert_eq!(to_f64_nearest(&ratio(a, b)).unwrap(), a as f64 / b as f64);
        }
        // 2^53 + 1 is a tie between 2^53 and 2^53 + 2; even wins.
        let tie = BigRational::from_integer(BigInt::from((1u64 << 53) + 1));
        assert_eq!(to_f64_nearest(&tie).unwrap(), 9007199254740992.0);
    }

    #[test]
    fn extreme_magnitudes() {
        let big = BigRational::from_integer(BigInt::one() << 1100u32);
        assert_eq!(to_f64_nearest(&big), Err(Error::Overflow));
        let tiny = BigRational::new(BigInt::one(), BigInt::one() << 1074u32);
        assert_eq!(to_f64_nearest(&tiny).unwrap(), f64::from_bits(1));
        let max = BigRational::from_integer(BigInt::from((1u64 << 53) - 1) << 971u32);
        assert_eq!(to_f64_nearest(&max).unwrap(), f64::MAX);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(5, 7), BigInt::zero());
        assert_eq!(binomial(40, 20), BigInt::from(137846528820u64));
        assert_eq!(factorial(10), BigInt::from(3628800));
    }
}
