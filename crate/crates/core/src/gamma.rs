//! Gamma function at half-integers, and the beta' normalising constant.

use num_bigint::BigInt;
use num_traits::One;

use crate::pi_number::PiNumber;
use crate::rational::{factorial, BigRational};

/// `Gamma(m / 2)` for `m >= 1`: rational for even `m`, a rational multiple
/// of `sqrt(pi)` for odd `m`.
pub fn gamma_half(m: u32) -> PiNumber {
    assert!(m >= 1, "Gamma(m/2) needs m >= 1");
    if m.is_multiple_of(2) {
        PiNumber::integer(factorial(m / 2 - 1))
    } else {
        // Gamma(j + 1/2) = (2j)! / (4^j j!) * sqrt(pi)
        let j = (m - 1) / 2;
        let c = BigRational::new(factorial(2 * j), (BigInt::one() << (2 * j)) * factorial(j));
        PiNumber::monomial(c, 1)
    }
}

/// `c~_{1,(k+1)/2} = Gamma((k+1)/2) / (sqrt(pi) Gamma(k/2))`, the density
/// constant of the one-dimensional beta' law with `beta = (k+1)/2`.
pub fn beta_prime_constant(k: u32) -> PiNumber {
    let num = gamma_half(k + 1);
    let den = &gamma_half(k) * &PiNumber::sqrt_pi_pow(1);
    num.checked_div(&den).expect("Gamma values are monomials")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn known_values() {
        assert_eq!(gamma_half(1), PiNumber::sqrt_pi_pow(1));
        assert_eq!(gamma_half(4), PiNumber::one());
        assert_eq!(gamma_half(3), PiNumber::monomial(ratio(1, 2), 1));
        assert_eq!(gamma_half(2), PiNumber::one());
        assert_eq!(gamma_half(10), PiNumber::integer(24));
    }

    #[test]
    fn functional_equation() {
        for m in 1..=40u32 {
            let lhs = gamma_half(m + 2);
            let rhs = gamma_half(m).scale(&ratio(m as i64, 2));
            assert_eq!(lhs, rhs, "m = {m}");
        }
    }

    #[test]
    fn beta_prime_constants() {
        assert_eq!(beta_prime_constant(1), PiNumber::monomial(int(1), -2));
        assert_eq!(beta_prime_constant(2), PiNumber::rational(ratio(1, 2)));
        for k in 1..=20 {
            assert!(beta_prime_constant(k).is_integral());
        }
    }
}
