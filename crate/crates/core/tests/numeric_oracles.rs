use crofton_core::arrays::{b_value, sin_moment, ArrayCache, Arrays};
use crofton_core::series::{coth_coeff, tanh_coeff};
use crofton_core::{parse_pi, BigRational, PiNumber};
use num_bigint::BigInt;
use num_traits::{One, Zero};

fn fact(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, i| a * i)
}

/// `num / den` as power series truncated at `len` terms.
fn divide(num: &[BigRational], den: &[BigRational], len: usize) -> Vec<BigRational> {
    let mut q = vec![BigRational::zero(); len];
    for i in 0..len {
        let mut acc = num.get(i).cloned().unwrap_or_else(BigRational::zero);
        for (j, qj) in q.iter().enumerate().take(i) {
            if let Some(d) = den.get(i - j) {
                acc -= qj * d;
            }
        }
        q[i] = acc / &den[0];
    }
    q
}

#[test]
fn tanh_and_coth_match_series_division() {
    const LEN: usize = 44;
    let sinh: Vec<BigRational> = (0..LEN)
        .map(|i| if i % 2 == 1 { BigRational::new(1.into(), fact(i as u32)) } else { BigRational::zero() })
        .collect();
    let cosh: Vec<BigRational> = (0..LEN)
        .map(|i| if i % 2 == 0 { BigRational::new(1.into(), fact(i as u32)) } else { BigRational::zero() })
        .collect();
    let tanh = divide(&sinh, &cosh, LEN);
    // z coth z = cosh z / (sinh z / z)
    let sinh_over_z: Vec<BigRational> = sinh[1..].to_vec();
    let z_coth = divide(&cosh, &sinh_over_z, LEN - 1);
    for m in (1..=41i64).step_by(2) {
        assert_eq!(tanh_coeff(m).unwrap(), tanh[m as usize], "tanh m={m}");
        assert_eq!(coth_coeff(m).unwrap(), z_coth[m as usize + 1], "coth m={m}");
    }
    assert_eq!(coth_coeff(-1).unwrap(), z_coth[0]);
    assert!(tanh_coeff(2).is_err());
    assert!(coth_coeff(-3).is_err());
}

fn integrate(f: impl Fn(f64) -> f64) -> f64 {
    let out = quadrature::double_exponential::integrate(f, 0.0, std::f64::consts::PI, 1e-14);
    out.integral
}

fn rel_err(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

#[test]
fn b_matches_quadrature() {
    let cache = ArrayCache::new();
    for n in 1..=12u32 {
        for k in 1..=n {
            let exact = cache.b(n, k).eval_f64().unwrap();
            let scale = 1.0 / (fact(k - 1) * fact(n - k)).to_string().parse::<f64>().unwrap();
            let num = scale * integrate(|x| x.sin().powi(k as i32 - 1) * x.powi((n - k) as i32));
            assert!(rel_err(exact, num) < 1e-10, "B{{{n},{k}}}: {exact} vs {num}");
            assert_eq!(b_value(n, k), cache.b(n, k));
        }
    }
}

#[test]
fn sin_moments_match_quadrature() {
    for m in 0..=20u32 {
        let exact = sin_moment(m).eval_f64().unwrap();
        let num = integrate(|x| x.sin() * x.powi(m as i32));
        assert!(rel_err(exact, num) < 1e-11, "m={m}: {exact} vs {num}");
    }
}

/// `pi` to 60 digits as a rational, the independent comparison point.
fn pi60() -> BigRational {
    let digits = "3141592653589793238462643383279502884197169399375105820974944";
    let num: BigInt = digits.parse().unwrap();
    BigRational::new(num, BigInt::from(10).pow(60))
}

fn eval_with(x: &PiNumber, pi: &BigRational) -> f64 {
    let mut acc = BigRational::zero();
    for (two_e, c) in x.terms() {
        assert_eq!(two_e % 2, 0, "integral powers only");
        let e = two_e / 2;
        let p = if e >= 0 { pi.pow(e) } else { pi.pow(-e).recip() };
        acc += c * p;
    }
    let n: f64 = acc.numer().to_string().parse().unwrap();
    let d: f64 = acc.denom().to_string().parse().unwrap();
    if n.is_finite() && d.is_finite() {
        return n / d;
    }
    // very large numerator and denominator: scale both down first
    let shift = acc.denom().bits().saturating_sub(900);
    let n: f64 = (acc.numer() >> shift).to_string().parse().unwrap();
    let d: f64 = (acc.denom() >> shift).to_string().parse().unwrap();
    n / d
}

fn ulps(a: f64, b: f64) -> u64 {
    (a.to_bits() as i64 - b.to_bits() as i64).unsigned_abs()
}

#[test]
fn float_evaluation_against_sixty_digit_pi() {
    let pi = pi60();
    let cache = ArrayCache::new();
    let mut samples: Vec<PiNumber> = Vec::new();
    for n in 1..=14u32 {
        for k in -1..=n as i32 {
            samples.push(cache.a(n, k));
        }
        for k in 1..=n {
            samples.push(cache.b(n, k));
        }
    }
    samples.push(parse_pi("24/pi^2 - 2").unwrap());
    for x in samples.iter().filter(|x| !x.is_zero()) {
        let v = x.eval_f64().unwrap();
        let w = eval_with(x, &pi);
        assert!(ulps(v, w) <= 4, "{x}: {v} vs {w}");
    }
}
