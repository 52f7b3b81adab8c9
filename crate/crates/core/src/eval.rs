//! Correctly rounded floating-point evaluation of exact numbers.
//!
//! Values such as `B{200, 3}` or `P(10)` are sums of huge terms that cancel
//! almost completely, so pi is bracketed in fixed point and the bracket is
//! tightened until both ends round to the same double.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::pi_number::PiNumber;
use crate::rational::{to_f64_nearest, BigRational};

const GUARD: u64 = 64;
const START_BITS: u64 = 128;
const MAX_BITS: u64 = 1 << 22;

fn arctan_recip(x: u32, w: u64) -> BigInt {
    // sum_k (-1)^k / ((2k+1) x^(2k+1)) scaled by 2^w, truncating each term
    let one = BigInt::one() << w;
    let x2 = BigInt::from(x) * x;
    let mut power = one / x;
    let mut sum = BigInt::zero();
    let mut k = 0u64;
    while !power.is_zero() {
        let term = &power / (2 * k + 1);
        if k.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &x2;
        k += 1;
    }
    sum
}

/// Lower and upper bounds of `pi * 2^bits`.
pub fn pi_bounds(bits: u64) -> (BigInt, BigInt) {
    let w = bits + GUARD;
    let approx = (arctan_recip(5, w) << 4u32) - (arctan_recip(239, w) << 2u32);
    // truncation error is far below 2^32 units for any precision used here
    let slack = BigInt::one() << 32u32;
    let lo = (&approx - &slack) >> GUARD;
    let hi = ((&approx + &slack) >> GUARD) + 1;
    (lo, hi)
}

fn div_floor(a: &BigInt, b: &BigInt) -> BigInt {
    a.div_floor(b)
}

fn div_ceil(a: &BigInt, b: &BigInt) -> BigInt {
    -((-a).div_floor(b))
}

/// Bracketed fixed-point powers of sqrt(pi), scaled by 2^w.
struct PowerTable {
    w: u64,
    // positive powers: index t holds bounds on pi^(t/2)
    pos: alloc::vec::Vec<(BigInt, BigInt)>,
    // negative powers: index t holds bounds on pi^(-t/2)
    neg: alloc::vec::Vec<(BigInt, BigInt)>,
}

impl PowerTable {
    fn new(w: u64, max_pos: usize, max_neg: usize) -> Self {
        let (pi_lo, pi_hi) = pi_bounds(w);
        let scale = BigInt::one() << w;
        let shifted = |v: &BigInt| v << w;
        let s_lo = shifted(&pi_lo).sqrt();
        let s_hi = shifted(&pi_hi).sqrt() + 1;
        let one = scale.clone();
        let mut pos = alloc::vec![(one.clone(), one.clone())];
        for t in 1..=max_pos {
            let (lo, hi) = &pos[t - 1];
            let next = (div_floor(&(lo * &s_lo), &scale), div_ceil(&(hi * &s_hi), &scale));
            pos.push(next);
        }
        let square = BigInt::one() << (2 * w);
        let r_lo = div_floor(&square, &s_hi);
        let r_hi = div_ceil(&square, &s_lo);
        let mut neg = alloc::vec![(one.clone(), one)];
        for t in 1..=max_neg {
            let (lo, hi) = &neg[t - 1];
            let next = (div_floor(&(lo * &r_lo), &scale), div_ceil(&(hi * &r_hi), &scale));
            neg.push(next);
        }
        Self { w, pos, neg }
    }

    fn bounds(&self, twice_exp: i32) -> &(BigInt, BigInt) {
        if twice_exp >= 0 {
            &self.pos[twice_exp as usize]
        } else {
            &self.neg[(-twice_exp) as usize]
        }
    }
}

fn bracket(x: &PiNumber, table: &PowerTable) -> (BigInt, BigInt) {
    let mut lo = BigInt::zero();
    let mut hi = BigInt::zero();
    for (e, c) in x.terms() {
        let (p_lo, p_hi) = table.bounds(e);
        let num = c.numer();
        let den = c.denom();
        if num.is_positive() {
            lo += div_floor(&(num * p_lo), den);
            hi += div_ceil(&(num * p_hi), den);
        } else {
            lo += div_floor(&(num * p_hi), den);
            hi += div_ceil(&(num * p_lo), den);
        }
    }
    (lo, hi)
}

impl PiNumber {
    /// Nearest double to the exact value.
    pub fn eval_f64(&self) -> Result<f64> {
        if let Some(r) = self.as_rational() {
            return to_f64_nearest(&r);
        }
        let max_pos = self.max_exponent().unwrap_or(0).max(0) as usize;
        let max_neg = (-self.min_exponent().unwrap_or(0)).max(0) as usize;
        let mut w = START_BITS;
        loop {
            let table = PowerTable::new(w, max_pos, max_neg);
            let (lo, hi) = bracket(self, &table);
            let den = BigInt::one() << table.w;
            let a = to_f64_nearest(&BigRational::new(lo, den.clone()));
            let b = to_f64_nearest(&BigRational::new(hi, den));
            match (a, b) {
                (Ok(a), Ok(b)) if a == b => return Ok(a),
                (Err(Error::Overflow), Err(Error::Overflow)) => return Err(Error::Overflow),
                _ if w >= MAX_BITS => return Err(Error::Overflow),
                _ => w *= 2,
            }
        }
    }
}
