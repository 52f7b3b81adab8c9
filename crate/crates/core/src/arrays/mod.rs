//! The arrays `A[n,k]` and `B{n,k}` together with the angle sums built on them.
//!
//! `A[n,k]` is the coefficient of `x^k` in `Q_n(x)` (even `k`) or in `Q_n(x)`
//! times the Laurent expansion of `tanh(pi/2x)` (even `n`) or `coth(pi/2x)`
//! (odd `n`). `B{n,k}` is the normalised sine moment
//! `1/((k-1)!(n-k)!) * int_0^pi sin(x)^(k-1) x^(n-k) dx`.

mod angles;
mod oracle;
mod qpoly;

use alloc::collections::BTreeMap;
use core::cell::RefCell;

use num_bigint::BigInt;
use num_traits::One;

use crate::pi_number::PiNumber;
use crate::rational::{factorial, int, BigRational};
use crate::series::odd_coefficients;

pub use angles::{i_tilde_bb, j_tilde_bb, j_tilde_recursive, weighted_a};
pub use oracle::{a_value_oracle, oracle_rows};
pub use qpoly::QnPolynomial;

/// Source of `A` and `B` values.
///
/// Every closed form is written against this trait so that the identity
/// suite can run on a deliberately corrupted source.
pub trait Arrays {
    /// `A[n,k]` for `n >= 0` and any integer `k`.
    fn a(&self, n: u32, k: i32) -> PiNumber;
    /// `B{n,k}` for `n >= 1`, `k >= 0`.
    fn b(&self, n: u32, k: u32) -> PiNumber;
}

impl<T: Arrays + ?Sized> Arrays for &T {
    fn a(&self, n: u32, k: i32) -> PiNumber {
        (**self).a(n, k)
    }
    fn b(&self, n: u32, k: u32) -> PiNumber {
        (**self).b(n, k)
    }
}

/// `[x^k] Q_n(x) * M(x)` computed from scratch.
pub fn a_value(n: u32, k: i32) -> PiNumber {
    compute_a(&QnPolynomial::new(n), k)
}

fn compute_a(q: &QnPolynomial, k: i32) -> PiNumber {
    let k = k as i64;
    if k % 2 == 0 {
        return PiNumber::integer(q.coeff(k));
    }
    let deg = q.degree() as i64;
    let coth = q.n() % 2 == 1;
    let mut out = PiNumber::zero();
    if coth {
        // the (2/pi) x term of coth(pi/2x)
        let c = q.coeff(k - 1);
        out += PiNumber::monomial(BigRational::from_integer(c * 2), -2);
    }
    // terms c_m (pi/2)^m x^(-m), m = 2j - 1, paired with x^(k+m) in Q_n
    if deg - k >= 1 {
        let jmax = ((deg - k + 1) / 2) as usize;
        let table = odd_coefficients(jmax, coth);
        for (j, c) in table.iter().enumerate().skip(1) {
            let m = 2 * j as i64 - 1;
            let qc = q.coeff(k + m);
            let scale = BigRational::new(qc, BigInt::one() << m as usize);
            out += PiNumber::monomial(c * scale, 2 * m as i32);
        }
    }
    out
}

/// `int_0^pi x^m sin x dx` by `I_m = pi^m - m(m-1) I_(m-2)`.
pub fn sin_moment(m: u32) -> PiNumber {
    ArrayCache::new().sin_moment(m)
}

/// `B{n,k}` from a fresh cache.
pub fn b_value(n: u32, k: u32) -> PiNumber {
    ArrayCache::new().b(n, k)
}

/// Memoised [`Arrays`] implementation.
///
/// Interior mutability makes this `!Sync`; share it by giving each thread
/// its own cache.
#[derive(Default)]
pub struct ArrayCache {
    q: RefCell<BTreeMap<u32, QnPolynomial>>,
    a: RefCell<BTreeMap<(u32, i32), PiNumber>>,
    b: RefCell<BTreeMap<(u32, u32), PiNumber>>,
    sin: RefCell<BTreeMap<u32, PiNumber>>,
}

impl ArrayCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn q_poly(&self, n: u32) -> QnPolynomial {
        self.q.borrow_mut().entry(n).or_insert_with(|| QnPolynomial::new(n)).clone()
    }

    pub fn sin_moment(&self, m: u32) -> PiNumber {
        if let Some(v) = self.sin.borrow().get(&m) {
            return v.clone();
        }
        let v = match m {
            0 => PiNumber::integer(2),
            1 => PiNumber::pi_pow(1),
            _ => {
                let prev = self.sin_moment(m - 2);
                &PiNumber::pi_pow(m as i32) - &prev.scale(&int(m as i64 * (m as i64 - 1)))
            }
        };
        self.sin.borrow_mut().insert(m, v.clone());
        v
    }

    /// Number of memoised entries across all tables.
    pub fn len(&self) -> usize {
        self.a.borrow().len() + self.b.borrow().len() + self.sin.borrow().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn compute_b(&self, n: u32, k: u32) -> PiNumber {
        assert!(n >= 1, "B{{n,k}} needs n >= 1");
        if k > n {
            return PiNumber::zero();
        }
        if k <= 1 {
            return PiNumber::monomial(BigRational::new(BigInt::one(), factorial(n)), 2 * n as i32);
        }
        if k == 2 {
            let inv = BigRational::new(BigInt::one(), factorial(n - 2));
            return self.sin_moment(n - 2).scale(&inv);
        }
        // B{n,k} = (B{n-2,k-2} - B{n-2,k}) / (k-1)^2
        let diff = &self.b(n - 2, k - 2) - &self.b(n - 2, k);
        let sq = (k as i64 - 1) * (k as i64 - 1);
        diff.scale(&BigRational::new(BigInt::one(), BigInt::from(sq)))
    }
}

impl Arrays for ArrayCache {
    fn a(&self, n: u32, k: i32) -> PiNumber {
        if let Some(v) = self.a.borrow().get(&(n, k)) {
            return v.clone();
        }
        let v = compute_a(&self.q_poly(n), k);
        self.a.borrow_mut().insert((n, k), v.clone());
        v
    }

    fn b(&self, n: u32, k: u32) -> PiNumber {
        if let Some(v) = self.b.borrow().get(&(n, k)) {
            return v.clone();
        }
        let v = self.compute_b(n, k);
        self.b.borrow_mut().insert((n, k), v.clone());
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use crate::text::parse_pi;

    fn p(s: &str) -> PiNumber {
        parse_pi(s).unwrap()
    }

    #[test]
    fn a_examples() {
        assert_eq!(a_value(6, 4), PiNumber::integer(259));
        assert_eq!(a_value(3, 1), p("2/pi + 2/3*pi"));
        assert_eq!(a_value(4, 1), p("5*pi - 3/8*pi^3"));
        assert_eq!(a_value(14, 14), PiNumber::integer(18261468225u64));
        assert_eq!(a_value(1, 1), p("2/pi"));
        assert_eq!(a_value(2, 1), p("1/2*pi"));
        for n in 0..20 {
            assert_eq!(a_value(n, 0), PiNumber::one());
        }
    }

    #[test]
    fn a_outside_triangle() {
        for n in 0..12u32 {
            for k in (n as i32 + 1)..(n as i32 + 6) {
                assert!(a_value(n, k).is_zero(), "A[{n},{k}]");
            }
            for k in [-2, -4, -6] {
                assert!(a_value(n, k).is_zero());
            }
        }
        // negative odd k: [x^-1] coth(pi/2x) = (1/3)(pi/2)
        assert_eq!(a_value(1, -1), p("1/6*pi"));
        assert_eq!(a_value(0, -1), p("1/2*pi"));
    }

    #[test]
    fn sine_moments() {
        assert_eq!(sin_moment(0), PiNumber::integer(2));
        assert_eq!(sin_moment(1), PiNumber::pi_pow(1));
        assert_eq!(sin_moment(2), p("-4 + pi^2"));
        assert_eq!(sin_moment(3), p("-6*pi + pi^3"));
    }

    #[test]
    fn b_examples() {
        assert_eq!(b_value(4, 2), p("-2 + 1/2*pi^2"));
        assert_eq!(b_value(3, 3), p("1/4*pi"));
        assert_eq!(b_value(6, 4), PiNumber::rational(ratio(-40, 162)) + p("1/18*pi^2"));
        assert!(b_value(5, 6).is_zero());
        assert_eq!(b_value(3, 0), p("1/6*pi^3"));
        assert_eq!(b_value(3, 1), p("1/6*pi^3"));
    }

    #[test]
    fn cache_agrees_with_fresh() {
        let cache = ArrayCache::new();
        for n in 1..12u32 {
            for k in -3..=(n as i32 + 1) {
                let first = cache.a(n, k);
                assert_eq!(first, cache.a(n, k));
                assert_eq!(first, a_value(n, k));
            }
            for k in 0..=n + 1 {
                let first = cache.b(n, k);
                assert_eq!(first, cache.b(n, k));
                assert_eq!(first, b_value(n, k));
            }
        }
        assert!(!cache.is_empty());
    }
}
