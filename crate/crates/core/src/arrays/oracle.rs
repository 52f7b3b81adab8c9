//! `A[n,k]` for `0 <= k <= n` rebuilt only from its characterising properties:
//! the boundary column, the two diagonals, the recurrence in `n` and the
//! Euler-type closure for `k = 1`. No series expansion is involved.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use crate::gamma::gamma_half;
use crate::pi_number::PiNumber;
use crate::rational::{factorial, BigRational};

fn diagonal(n: u32) -> PiNumber {
    // 2^-n (n!)^2 / Gamma(n/2 + 1)^2
    let fact = factorial(n);
    let num = BigRational::new(&fact * &fact, BigInt::one() << n as usize);
    let g = gamma_half(n + 2);
    PiNumber::rational(num).checked_div(&(&g * &g)).expect("Gamma values are monomials")
}

/// Rows `0..=nmax` of the triangle.
pub fn oracle_rows(nmax: u32) -> Vec<Vec<PiNumber>> {
    let half_pi = PiNumber::monomial(BigRational::new(1.into(), 2.into()), 2);
    let mut rows: Vec<Vec<PiNumber>> = Vec::with_capacity(nmax as usize + 1);
    for n in 0..=nmax {
        let len = n as usize + 1;
        let mut row = alloc::vec![PiNumber::zero(); len];
        row[0] = PiNumber::one();
        if n >= 1 {
            row[n as usize] = diagonal(n);
            row[n as usize - 1] = &half_pi * &row[n as usize];
        }
        if n >= 4 {
            let prev = &rows[n as usize - 2];
            let sq = BigRational::from_integer(BigInt::from((n - 1) * (n - 1)));
            for k in 2..=(n as usize - 2) {
                row[k] = &prev[k] + &prev[k - 2].scale(&sq);
            }
        }
        if n >= 3 {
            // pi A[n,1] = (-1)^(n-1) + 1 + sum_{k>=2} (-1)^k pi^k/k! A[n,k]
            let mut acc = PiNumber::integer(if n % 2 == 1 { 2 } else { 0 });
            for (k, v) in row.iter().enumerate().skip(2) {
                let c = BigRational::new(if k % 2 == 0 { 1.into() } else { (-1).into() }, factorial(k as u32));
                acc += v.shift(2 * k as i32).scale(&c);
            }
            row[1] = acc.shift(-2);
        }
        rows.push(row);
    }
    rows
}

/// `A[n,k]` for `n >= 1`, `0 <= k <= n` via [`oracle_rows`].
pub fn a_value_oracle(n: u32, k: u32) -> PiNumber {
    assert!(k <= n, "oracle covers 0 <= k <= n");
    oracle_rows(n).swap_remove(n as usize).swap_remove(k as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrays::a_value;
    use crate::text::parse_pi;

    #[test]
    fn oracle_examples() {
        assert_eq!(a_value_oracle(2, 2), PiNumber::one());
        assert_eq!(a_value_oracle(5, 4), PiNumber::integer(64));
        assert_eq!(a_value_oracle(5, 5), parse_pi("128/pi").unwrap());
        assert_eq!(a_value_oracle(8, 3), parse_pi("987*pi - 3229/6*pi^3 + 735/16*pi^5").unwrap());
    }

    #[test]
    fn oracle_matches_series() {
        let rows = oracle_rows(10);
        for (n, row) in rows.iter().enumerate() {
            for (k, v) in row.iter().enumerate() {
                assert_eq!(*v, a_value(n as u32, k as i32), "A[{n},{k}]");
            }
        }
    }
}
