//! Exact numbers in the Laurent ring Q[pi^(1/2), pi^(-1/2)].

use alloc::collections::btree_map::{BTreeMap, Entry};
use core::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::BigRational;

/// A finite sum `sum_e c_e * pi^e` over half-integer exponents `e`.
///
/// Terms are keyed by `2e`. Zero coefficients are never stored, so two
/// numbers are equal exactly when their term maps are.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PiNumber {
    terms: BTreeMap<i32, BigRational>,
}

impl PiNumber {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::rational(BigRational::one())
    }

    pub fn rational(c: BigRational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Self::rational(BigRational::from_integer(n.into()))
    }

    /// `c * pi^(twice_exp / 2)`.
    pub fn monomial(c: BigRational, twice_exp: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(twice_exp, c);
        }
        Self { terms }
    }

    /// `pi^e` for an integer exponent.
    pub fn pi_pow(e: i32) -> Self {
        Self::monomial(BigRational::one(), 2 * e)
    }

    /// `pi^(twice_exp / 2)`.
    pub fn sqrt_pi_pow(twice_exp: i32) -> Self {
        Self::monomial(BigRational::one(), twice_exp)
    }

    /// Collects `(2e, c)` pairs, merging repeated exponents.
    pub fn from_terms<I: IntoIterator<Item = (i32, BigRational)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    fn add_term(&mut self, twice_exp: i32, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(twice_exp) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Terms as `(2e, coefficient)` in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, &BigRational)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// Number of non-zero terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, twice_exp: i32) -> BigRational {
        self.terms.get(&twice_exp).cloned().unwrap_or_else(BigRational::zero)
    }

    /// The rational value, if this number has no pi-dependence.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    /// `(c, 2e)` if this is a single nonzero term.
    pub fn as_monomial(&self) -> Option<(&BigRational, i32)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (c, *e))
        } else {
            None
        }
    }

    /// True when only integer powers of pi occur.
    pub fn is_integral(&self) -> bool {
        self.terms.keys().all(|e| e % 2 == 0)
    }

    pub fn expect_integral(self) -> Result<Self> {
        if self.is_integral() {
            Ok(self)
        } else {
            Err(Error::NonIntegralExponent)
        }
    }

    pub fn min_exponent(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(e, a)| (*e, a * c)).collect() }
    }

    /// Multiplies by `pi^(twice_exp / 2)`.
    pub fn shift(&self, twice_exp: i32) -> Self {
        Self { terms: self.terms.iter().map(|(e, a)| (e + twice_exp, a.clone())).collect() }
    }

    /// Reciprocal of a monomial.
    pub fn recip(&self) -> Result<Self> {
        match self.as_monomial() {
            Some((c, e)) => Ok(Self::monomial(c.recip(), -e)),
            None if self.is_zero() => Err(Error::DivisionByZero),
            None => Err(Error::NotMonomial),
        }
    }

    /// Division by a monomial; the ring has no general inverse.
    pub fn checked_div(&self, divisor: &PiNumber) -> Result<Self> {
        Ok(self * &divisor.recip()?)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }
}

impl From<BigRational> for PiNumber {
    fn from(c: BigRational) -> Self {
        Self::rational(c)
    }
}

impl From<i64> for PiNumber {
    fn from(n: i64) -> Self {
        Self::integer(n)
    }
}

impl<'a> Add<&'a PiNumber> for &'a PiNumber {
    type Output = PiNumber;
    fn add(self, rhs: &PiNumber) -> PiNumber {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&PiNumber> for PiNumber {
    fn add_assign(&mut self, rhs: &PiNumber) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&PiNumber> for PiNumber {
    fn sub_assign(&mut self, rhs: &PiNumber) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl<'a> Sub<&'a PiNumber> for &'a PiNumber {
    type Output = PiNumber;
    fn sub(self, rhs: &PiNumber) -> PiNumber {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a> Mul<&'a PiNumber> for &'a PiNumber {
    type Output = PiNumber;
    fn mul(self, rhs: &PiNumber) -> PiNumber {
        let mut out = PiNumber::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl MulAssign<&PiNumber> for PiNumber {
    fn mul_assign(&mut self, rhs: &PiNumber) {
        *self = &*self * rhs;
    }
}

impl Neg for &PiNumber {
    type Output = PiNumber;
    fn neg(self) -> PiNumber {
        PiNumber { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl Neg for PiNumber {
    type Output = PiNumber;
    fn neg(mut self) -> PiNumber {
        for c in self.terms.values_mut() {
            *c = -core::mem::take(c);
        }
        self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<PiNumber> for PiNumber {
            type Output = PiNumber;
            fn $m(self, rhs: PiNumber) -> PiNumber { (&self).$m(&rhs) }
        }
        impl $tr<&PiNumber> for PiNumber {
            type Output = PiNumber;
            fn $m(self, rhs: &PiNumber) -> PiNumber { (&self).$m(rhs) }
        }
        impl $tr<PiNumber> for &PiNumber {
            type Output = PiNumber;
            fn $m(self, rhs: PiNumber) -> PiNumber { self.$m(&rhs) }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl AddAssign<PiNumber> for PiNumber {
    fn add_assign(&mut self, rhs: PiNumber) {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl SubAssign<PiNumber> for PiNumber {
    fn sub_assign(&mut self, rhs: PiNumber) {
        *self -= &rhs;
    }
}

impl Mul<&BigRational> for &PiNumber {
    type Output = PiNumber;
    fn mul(self, rhs: &BigRational) -> PiNumber {
        self.scale(rhs)
    }
}

impl Mul<BigRational> for PiNumber {
    type Output = PiNumber;
    fn mul(self, rhs: BigRational) -> PiNumber {
        self.scale(&rhs)
    }
}

impl core::iter::Sum for PiNumber {
    fn sum<I: Iterator<Item = PiNumber>>(iter: I) -> Self {
        iter.fold(PiNumber::zero(), |mut acc, x| {
            acc += x;
            acc
        })
    }
}

impl core::fmt::Debug for PiNumber {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "PiNumber({self})")
    }
}
