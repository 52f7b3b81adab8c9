//! Closed-form expectations for the Poisson zero polytope `Z_d` and for the
//! spherical hull `C_n ∩ S^d_+` of `n` uniform points on the upper half-sphere.
//!
//! Several quantities are also given by a structurally different second
//! formula (`zero_cell_vertices`, `barany_facets`, `f_vector_d_plus_2`,
//! `expected_edges`, Dehn-Sommerville closure) so that the shared `A`/`B`
//! substrate can be cross-checked.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::arrays::{weighted_a, Arrays};
use crate::error::{Error, Result};
use crate::gamma::gamma_half;
use crate::pi_number::PiNumber;
use crate::rational::{binomial, factorial, int, BigRational};

/// Expected f-vector `(E f_0, ..., E f_{d-1})`; `f_d = 1` is implicit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FVectorExact {
    dim: u32,
    entries: Vec<PiNumber>,
}

impl FVectorExact {
    pub fn new(dim: u32, entries: Vec<PiNumber>) -> Self {
        assert_eq!(entries.len(), dim as usize, "an f-vector of a {dim}-polytope has {dim} entries");
        Self { dim, entries }
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn entries(&self) -> &[PiNumber] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<PiNumber> {
        self.entries
    }

    pub fn get(&self, k: usize) -> &PiNumber {
        &self.entries[k]
    }

    /// `sum_{k=0}^{d} (-1)^k f_k` with `f_d = 1`; equals one for every polytope.
    pub fn euler_sum(&self) -> PiNumber {
        let mut acc = PiNumber::integer(if self.dim.is_multiple_of(2) { 1 } else { -1 });
        for (k, f) in self.entries.iter().enumerate() {
            if k % 2 == 0 {
                acc += f;
            } else {
                acc -= f;
            }
        }
        acc
    }

    pub fn to_f64(&self) -> Result<Vec<f64>> {
        self.entries.iter().map(PiNumber::eval_f64).collect()
    }
}

fn pi_over_factorial(power: i32, fact: u32) -> PiNumber {
    PiNumber::monomial(BigRational::new(BigInt::one(), factorial(fact)), 2 * power)
}

fn rat(n: BigInt) -> BigRational {
    BigRational::from_integer(n)
}

/// `E f_l(Z_d) = pi^(d-l)/(d-l)! * A[d, d-l]`.
pub fn zero_cell_f_vector<A: Arrays + ?Sized>(arr: &A, d: u32) -> FVectorExact {
    assert!(d >= 1, "dimension must be positive");
    let entries = (0..d)
        .map(|l| {
            let c = d - l;
            &pi_over_factorial(c as i32, c) * &arr.a(d, c as i32)
        })
        .collect();
    FVectorExact::new(d, entries)
}

/// `kappa_d^2 = pi^d / Gamma(d/2 + 1)^2`, squared volume of the unit ball.
fn unit_ball_volume_squared(d: u32) -> PiNumber {
    let g = gamma_half(d + 2);
    PiNumber::pi_pow(d as i32).checked_div(&(&g * &g)).expect("Gamma values are monomials")
}

/// `E f_0(Z_d) = d! kappa_d^2 / 2^d`, independently of `A`.
pub fn zero_cell_vertices(d: u32) -> PiNumber {
    assert!(d >= 1, "dimension must be positive");
    let c = BigRational::new(factorial(d), BigInt::one() << d as usize);
    unit_ball_volume_squared(d).scale(&c).expect_integral().expect("Gamma squares cancel half powers")
}

/// `E f_{d-2}(Z_d) = C(d+1, 3) pi^2 / 2`.
pub fn zero_cell_ridges(d: u32) -> PiNumber {
    assert!(d >= 2, "ridges need d >= 2");
    PiNumber::monomial(BigRational::new(binomial(d as i64 + 1, 3), BigInt::from(2)), 4)
}

/// Expected `l`-th intrinsic volume of the zero cell at intensity `gamma`.
pub fn zero_cell_intrinsic_volume<A: Arrays + ?Sized>(
    arr: &A,
    d: u32,
    l: u32,
    gamma: &BigRational,
) -> Result<PiNumber> {
    if d == 0 || l > d {
        return Err(Error::OutOfRange { what: "intrinsic volume", n: d as i64, k: l as i64 });
    }
    if !gamma.is_positive() {
        return Err(Error::OutOfRange { what: "intensity must be positive", n: d as i64, k: l as i64 });
    }
    let two_pi = PiNumber::monomial(gamma.recip() * int(2), 2);
    let ratio = gamma_half(d + 1).checked_div(&gamma_half(d))?;
    let last = gamma_half(l + 2).scale(&BigRational::new(BigInt::one(), factorial(l)));
    let v = &(&(&two_pi * &ratio).pow(l) * &last) * &arr.a(d, l as i32);
    v.expect_integral()
}

/// `lim_n E f_k(C_n ∩ S^d_+) = pi^(k+1)/(k+1)! * A[d, k+1]`.
pub fn limit_f_vector<A: Arrays + ?Sized>(arr: &A, d: u32) -> FVectorExact {
    assert!(d >= 1, "dimension must be positive");
    let entries = (0..d).map(|k| &pi_over_factorial(k as i32 + 1, k + 1) * &arr.a(d, k as i32 + 1)).collect();
    FVectorExact::new(d, entries)
}

fn check_sample(n: u32, d: u32) -> Result<()> {
    if d == 0 || n <= d {
        Err(Error::DegenerateSampleSize { n, d })
    } else {
        Ok(())
    }
}

/// `E f_k(C_n ∩ S^d_+)` for a single `k`.
pub fn half_sphere_f<A: Arrays + ?Sized>(arr: &A, n: u32, d: u32, k: u32) -> Result<PiNumber> {
    check_sample(n, d)?;
    if k >= d {
        return Err(Error::OutOfRange { what: "face dimension", n: d as i64, k: k as i64 });
    }
    let mut sum = PiNumber::zero();
    let mut m = d;
    while m > k {
        sum += &arr.b(n, m) * &weighted_a(arr, m, k as i32 - 1);
        if m < 2 {
            break;
        }
        m -= 2;
    }
    let lead = PiNumber::monomial(BigRational::new(factorial(n), factorial(k + 1)), 2 * (k as i32 + 1 - n as i32));
    Ok(&lead * &sum)
}

/// Expected f-vector of the spherical hull of `n` uniform points on `S^d_+`.
pub fn half_sphere_f_vector<A: Arrays + ?Sized>(arr: &A, n: u32, d: u32) -> Result<FVectorExact> {
    check_sample(n, d)?;
    let entries = (0..d).map(|k| half_sphere_f(arr, n, d, k)).collect::<Result<_>>()?;
    Ok(FVectorExact::new(d, entries))
}

/// Surface area of the unit sphere in `R^m`, `2 pi^(m/2) / Gamma(m/2)`.
fn sphere_area(m: u32) -> PiNumber {
    PiNumber::monomial(int(2), m as i32).checked_div(&gamma_half(m)).expect("Gamma values are monomials")
}

/// Expected facet number by the sine-integral formula
/// `C(n,d) (2 w_d / w_{d+1}) int_0^pi sin^(d-1)(x) (x/pi)^(n-d) dx`.
pub fn barany_facets<A: Arrays + ?Sized>(arr: &A, n: u32, d: u32) -> Result<PiNumber> {
    check_sample(n, d)?;
    // int_0^pi sin^(d-1) x^(n-d) = (d-1)! (n-d)! B{n,d}
    let integral = arr.b(n, d).scale(&rat(factorial(d - 1) * factorial(n - d))).shift(-2 * (n as i32 - d as i32));
    let ratio = sphere_area(d).scale(&int(2)).checked_div(&sphere_area(d + 1))?;
    (&ratio * &integral).scale(&rat(binomial(n as i64, d as i64))).expect_integral()
}

/// `sqrt(pi) Gamma((m+2)/2) / Gamma((m+3)/2) = int_0^pi sin^(m+1) x dx`.
fn sine_power_integral(m: u32) -> PiNumber {
    (&gamma_half(m + 2) * &PiNumber::sqrt_pi_pow(1))
        .checked_div(&gamma_half(m + 3))
        .expect("Gamma values are monomials")
}

fn d_plus_correction<A: Arrays + ?Sized>(arr: &A, d: u32, k: u32, extra: u32) -> Result<PiNumber> {
    if d == 0 || k >= d {
        return Err(Error::OutOfRange { what: "face dimension", n: d as i64, k: k as i64 });
    }
    let gamma_ratio = match extra {
        2 => sine_power_integral(d),
        _ => (&gamma_half(d + 4) * &PiNumber::sqrt_pi_pow(1)).checked_div(&gamma_half(d + 3))?,
    };
    let lead = BigRational::new(BigInt::from(d + extra), factorial(k + 1));
    let sq = int((d as i64 + 1) * (d as i64 + 1));
    let v = &gamma_ratio.shift(2 * (k as i32 - d as i32 - 1)) * &arr.a(d, k as i32 - 1);
    v.scale(&(lead * sq)).expect_integral()
}

/// `E f_k(C_{d+2} ∩ S^d_+)` via the simplified two-point-excess formula.
pub fn f_vector_d_plus_2<A: Arrays + ?Sized>(arr: &A, d: u32, k: u32) -> Result<PiNumber> {
    let corr = d_plus_correction(arr, d, k, 2)?;
    Ok(&PiNumber::integer(binomial(d as i64 + 2, k as i64 + 1)) - &corr)
}

/// `E f_k(C_{d+3} ∩ S^d_+)`.
pub fn f_vector_d_plus_3<A: Arrays + ?Sized>(arr: &A, d: u32, k: u32) -> Result<PiNumber> {
    let corr = d_plus_correction(arr, d, k, 3)?;
    Ok(&PiNumber::integer(binomial(d as i64 + 3, k as i64 + 1)) - &corr)
}

/// `E f_1(C_n ∩ S^d_+) = (1/2) n! pi^(2-n) sum_{m = d-2s >= 2} (m-1)^2 B{n,m}`.
pub fn expected_edges<A: Arrays + ?Sized>(arr: &A, n: u32, d: u32) -> Result<PiNumber> {
    check_sample(n, d)?;
    if d < 2 {
        return Err(Error::OutOfRange { what: "edges need d >= 2", n: n as i64, k: d as i64 });
    }
    let mut sum = PiNumber::zero();
    let mut m = d;
    while m >= 2 {
        sum += arr.b(n, m).scale(&int((m as i64 - 1) * (m as i64 - 1)));
        m -= 2;
    }
    let lead = BigRational::new(factorial(n), BigInt::from(2));
    Ok(sum.scale(&lead).shift(2 * (2 - n as i32)))
}

/// Normalised expected solid angle `E alpha(C_n)` of the random cone.
pub fn expected_solid_angle<A: Arrays + ?Sized>(arr: &A, n: u32, d: u32) -> Result<PiNumber> {
    check_sample(n, d)?;
    let mut sum = PiNumber::zero();
    for m in ((d + 2)..=(n + 1)).step_by(2) {
        sum += &arr.b(n + 1, m) * &weighted_a(arr, m, -1);
    }
    let lead = BigRational::new(factorial(n), BigInt::from(2));
    Ok(sum.scale(&lead).shift(-2 * n as i32))
}

/// Probability that `d+2` uniform points on `S^d_+` span a spherical simplex.
pub fn sylvester_probability<A: Arrays + ?Sized>(arr: &A, d: u32) -> PiNumber {
    assert!(d >= 1, "dimension must be positive");
    let lead = int((d as i64 + 2) * (d as i64 + 1) * (d as i64 + 1));
    let v = &sine_power_integral(d).shift(-2 * (d as i32 + 1)) * &arr.a(d, -1);
    v.scale(&lead).expect_integral().expect("half powers cancel")
}

/// Grassmann-angle constant `B_{k,d} = pi^k A[d,k] / 2`.
pub fn grassmann_constant<A: Arrays + ?Sized>(arr: &A, k: u32, d: u32) -> Result<PiNumber> {
    if k < 1 || k > d {
        return Err(Error::OutOfRange { what: "Grassmann constant", n: k as i64, k: d as i64 });
    }
    Ok(arr.a(d, k as i32).shift(2 * k as i32).scale(&BigRational::new(1.into(), 2.into())))
}

/// `C_*(d) = pi w_{d+1} A[d,1] / 2`.
pub fn c_star<A: Arrays + ?Sized>(arr: &A, d: u32) -> PiNumber {
    assert!(d >= 1, "dimension must be positive");
    let omega = sphere_area(d + 1);
    (&omega.shift(2) * &arr.a(d, 1))
        .scale(&BigRational::new(1.into(), 2.into()))
        .expect_integral()
        .expect("half powers cancel")
}

/// Number of `k`-faces of the `d`-dimensional crosspolytope, `2^(k+1) C(d, k+1)`.
pub fn cover_efron_limit(k: u32, d: u32) -> BigInt {
    binomial(d as i64, k as i64 + 1) << (k as usize + 1)
}

/// Completes an f-vector of a simple `d`-polytope from its even-codimension
/// entries using `f_l = sum_{i<=l} (-1)^i C(d-i, d-l) f_i`.
///
/// `partial[l]` is `E f_l` for `l < d`; entries with odd `d - l` may be
/// `None`. Entries that are present are checked against the relations.
pub fn dehn_sommerville_closure(d: u32, partial: &[Option<PiNumber>]) -> Result<FVectorExact> {
    assert!(d >= 1, "dimension must be positive");
    let d_us = d as usize;
    if partial.len() != d_us {
        return Err(Error::MissingEntry(partial.len().min(d_us)));
    }
    let mut f: Vec<Option<PiNumber>> = partial.to_vec();
    f.push(Some(PiNumber::one()));
    for (l, v) in f.iter().enumerate() {
        if (d_us - l).is_multiple_of(2) && v.is_none() {
            return Err(Error::MissingEntry(l));
        }
    }
    let coef = |i: usize, l: usize| -> BigRational {
        let c = rat(binomial((d_us - i) as i64, (d_us - l) as i64));
        if i.is_multiple_of(2) {
            c
        } else {
            -c
        }
    };
    // Odd l gives 2 f_l = sum_{i<l} (-1)^i C(d-i, d-l) f_i. For even d the
    // unknown is f_l itself, for odd d it is f_{l-1}.
    let mut solved = f.clone();
    for l in (1..=d_us).step_by(2) {
        let unknown = if d.is_multiple_of(2) { l } else { l - 1 };
        let mut rest = PiNumber::zero();
        for (i, fi) in solved.iter().enumerate().take(l) {
            if i == unknown {
                continue;
            }
            let fi = fi.as_ref().ok_or(Error::MissingEntry(i))?;
            rest += fi.scale(&coef(i, l));
        }
        let value = if unknown == l {
            rest.scale(&BigRational::new(1.into(), 2.into()))
        } else {
            // 2 f_l - rest = coef(l-1, l) f_{l-1}
            let fl = solved[l].as_ref().ok_or(Error::MissingEntry(l))?;
            (&fl.scale(&int(2)) - &rest).scale(&coef(unknown, l).recip())
        };
        if let Some(given) = &f[unknown] {
            if *given != value {
                return Err(Error::Inconsistent(unknown));
            }
        }
        solved[unknown] = Some(value);
    }
    let solved: Vec<PiNumber> = solved.into_iter().map(|v| v.expect("all entries solved")).collect();
    for l in 0..=d_us {
        let mut rhs = PiNumber::zero();
        for (i, fi) in solved.iter().enumerate().take(l + 1) {
            rhs += fi.scale(&coef(i, l));
        }
        if rhs != solved[l] {
            return Err(Error::Inconsistent(l));
        }
    }
    let mut entries = solved;
    entries.pop();
    Ok(FVectorExact::new(d, entries))
}
