//! Expected external and internal angle sums of beta' simplices at `alpha = 1`
//! and `beta = n/2`.

use alloc::vec::Vec;

use num_bigint::BigInt;

use super::Arrays;
use crate::error::{Error, Result};
use crate::gamma::beta_prime_constant;
use crate::pi_number::PiNumber;
use crate::rational::{binomial, factorial, int, BigRational};

fn check(what: &'static str, n: u32, k: u32) -> Result<()> {
    if k >= 1 && k <= n {
        Ok(())
    } else {
        Err(Error::OutOfRange { what, n: n as i64, k: k as i64 })
    }
}

/// `(m-1)^2 A[m-2, j]`, with the conventions `0^2 A[-1,-1] = 2/pi` and
/// `A[-1, j] = 0` otherwise at `m = 1`.
pub fn weighted_a<A: Arrays + ?Sized>(arr: &A, m: u32, j: i32) -> PiNumber {
    assert!(m >= 1, "weighted_a needs m >= 1");
    if m == 1 {
        return if j == -1 { PiNumber::monomial(int(2), -2) } else { PiNumber::zero() };
    }
    let sq = int((m as i64 - 1) * (m as i64 - 1));
    arr.a(m - 2, j).scale(&sq)
}

/// Expected sum of external angles at `k`-vertex faces, `I~_{n,k}(1)`.
pub fn i_tilde_bb<A: Arrays + ?Sized>(arr: &A, n: u32, k: u32) -> Result<PiNumber> {
    check("external angle sum", n, k)?;
    let lead = BigRational::new(factorial(n), BigInt::from(k));
    let v = &beta_prime_constant(k).shift(2 * (k as i32 - n as i32)) * &arr.b(n, k);
    v.scale(&lead).expect_integral()
}

/// Expected sum of internal angles at `k`-vertex faces, `J~_{n,k}(n/2)`,
/// in closed form.
pub fn j_tilde_bb<A: Arrays + ?Sized>(arr: &A, n: u32, k: u32) -> Result<PiNumber> {
    check("internal angle sum", n, k)?;
    let lead = BigRational::new(BigInt::from(n), factorial(k) * 2);
    let c = beta_prime_constant(n);
    let v = PiNumber::pi_pow(k as i32 - n as i32).checked_div(&c)?.scale(&lead);
    (&v * &weighted_a(arr, n, k as i32 - 2)).expect_integral()
}

/// `J~_{n,k}(n/2)` by solving the Gauss-Bonnet system
/// `J_{n,k} = C(n,k)/2 - sum_{s>=1} I_{n,n-2s}(1) J_{n-2s,k}` upwards from `J_{k,k} = 1`.
pub fn j_tilde_recursive<A: Arrays + ?Sized>(arr: &A, n: u32, k: u32) -> Result<PiNumber> {
    check("internal angle sum", n, k)?;
    // values[i] holds J_{m,k} for m = base + 2i
    let base = if (n - k).is_multiple_of(2) { k } else { k + 1 };
    let mut values: Vec<PiNumber> = Vec::new();
    for m in (base..=n).step_by(2) {
        let v = if m == k {
            PiNumber::one()
        } else {
            let half = BigRational::new(binomial(m as i64, k as i64), BigInt::from(2));
            let mut acc = PiNumber::rational(half);
            for (i, lower) in values.iter().enumerate() {
                let sub = base + 2 * i as u32;
                acc -= &(&i_tilde_bb(arr, m, sub)? * lower);
            }
            acc
        };
        values.push(v);
    }
    Ok(values.pop().expect("range contains n"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrays::ArrayCache;
    use crate::rational::ratio;

    #[test]
    fn external_examples() {
        let c = ArrayCache::new();
        for n in 1..=12 {
            assert_eq!(i_tilde_bb(&c, n, n).unwrap(), PiNumber::one(), "n = {n}");
        }
        assert_eq!(i_tilde_bb(&c, 2, 1).unwrap(), PiNumber::one());
        assert_eq!(i_tilde_bb(&c, 3, 2).unwrap(), PiNumber::rational(ratio(3, 2)));
        assert!(i_tilde_bb(&c, 3, 0).is_err());
        assert!(i_tilde_bb(&c, 3, 4).is_err());
    }

    #[test]
    fn internal_examples() {
        let c = ArrayCache::new();
        for n in 1..=12 {
            assert_eq!(j_tilde_bb(&c, n, n).unwrap(), PiNumber::one(), "n = {n}");
            if n >= 2 {
                assert_eq!(j_tilde_bb(&c, n, n - 1).unwrap(), PiNumber::rational(ratio(n as i64, 2)));
            }
        }
        assert_eq!(j_tilde_bb(&c, 1, 1).unwrap(), PiNumber::one());
        assert!(j_tilde_bb(&c, 2, 3).is_err());
    }

    #[test]
    fn recursive_agrees() {
        let c = ArrayCache::new();
        assert_eq!(j_tilde_recursive(&c, 2, 2).unwrap(), PiNumber::one());
        assert_eq!(j_tilde_recursive(&c, 4, 2).unwrap(), j_tilde_bb(&c, 4, 2).unwrap());
        assert_eq!(j_tilde_recursive(&c, 9, 5).unwrap(), j_tilde_bb(&c, 9, 5).unwrap());
    }
}
