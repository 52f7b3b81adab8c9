use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `Q_n(x) = prod (1 + j^2 x^2)` over `1 <= j <= n-1` with `j` of parity opposite to `n`.
///
/// Only the even-power coefficients are stored: `coeffs[i]` is `[x^(2i)] Q_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QnPolynomial {
    n: u32,
    coeffs: Vec<BigInt>,
}

impl QnPolynomial {
    pub fn new(n: u32) -> Self {
        let mut coeffs = vec![BigInt::one()];
        let start = if n.is_multiple_of(2) { 1 } else { 2 };
        for j in (start..n).step_by(2) {
            let sq = BigInt::from(j) * j;
            let mut next = coeffs.clone();
            next.push(BigInt::zero());
            for (i, c) in coeffs.iter().enumerate() {
                next[i + 1] += c * &sq;
            }
            coeffs = next;
        }
        Self { n, coeffs }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of linear factors in `x^2`, i.e. `floor(n/2)`.
    pub fn factor_count(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn degree(&self) -> usize {
        2 * self.factor_count()
    }

    /// `[x^k] Q_n` for any integer `k`.
    pub fn coeff(&self, k: i64) -> BigInt {
        if k < 0 || k % 2 != 0 {
            return BigInt::zero();
        }
        self.coeffs.get((k / 2) as usize).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn even_coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }
}

impl fmt::Display for QnPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, " + {c}x^2")?,
                _ => write!(f, " + {c}x^{}", 2 * i)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::string::ToString;

    fn coeffs(n: u32) -> Vec<i64> {
        QnPolynomial::new(n).even_coeffs().iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn small_polynomials() {
        assert_eq!(coeffs(0), [1]);
        assert_eq!(coeffs(1), [1]);
        assert_eq!(coeffs(2), [1, 1]);
        assert_eq!(coeffs(4), [1, 10, 9]);
        assert_eq!(coeffs(6), [1, 35, 259, 225]);
        assert_eq!(QnPolynomial::new(4).to_string(), "1 + 10x^2 + 9x^4");
    }

    #[test]
    fn shape() {
        for n in 0..30u32 {
            let q = QnPolynomial::new(n);
            assert_eq!(q.factor_count(), (n / 2) as usize);
            assert_eq!(q.degree(), if n % 2 == 0 { n as usize } else { n.saturating_sub(1) as usize });
            assert!(q.even_coeffs().iter().all(|c| c > &BigInt::zero()));
            assert_eq!(q.coeff(-2), BigInt::zero());
            assert_eq!(q.coeff(1), BigInt::zero());
        }
    }
}
