//! Exact identity checks between the special arrays and the closed forms.
//!
//! Every family is generic over [`Arrays`] so that a deliberately corrupted
//! array source can be fed through the same checks.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::arrays::{a_value_oracle, i_tilde_bb, j_tilde_bb, j_tilde_recursive, weighted_a, Arrays};
use crate::closed_forms::{
    barany_facets, dehn_sommerville_closure, expected_edges, expected_solid_angle, f_vector_d_plus_2,
    f_vector_d_plus_3, half_sphere_f_vector, limit_f_vector, zero_cell_f_vector, zero_cell_ridges, zero_cell_vertices,
    FVectorExact,
};
use crate::pi_number::PiNumber;
use crate::rational::{binomial, factorial, int, BigRational};

/// Outcome of one identity family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyReport {
    pub name: &'static str,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl FamilyReport {
    fn new(name: &'static str) -> Self {
        Self { name, checked: 0, failures: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn expect_eq(&mut self, lhs: &PiNumber, rhs: &PiNumber, at: impl FnOnce() -> String) {
        self.checked += 1;
        if lhs != rhs {
            self.failures.push(format!("{}: {} != {}", at(), lhs, rhs));
        }
    }

    fn expect_ok<T>(&mut self, r: crate::Result<T>, at: impl FnOnce() -> String) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.checked += 1;
                self.failures.push(format!("{}: {}", at(), e));
                None
            }
        }
    }
}

/// Largest `n` used for families that involve the internal angle sums.
pub const ANGLE_FAMILY_CAP: u32 = 12;
/// Largest `n` used for the `A` versus oracle-rows comparison.
pub const ORACLE_CAP: u32 = 14;

fn pi_over_factorial(power: u32) -> PiNumber {
    PiNumber::monomial(BigRational::new(BigInt::from(1), factorial(power)), 2 * power as i32)
}

/// `A[n+2,k] - A[n,k] = (n+1)^2 A[n,k-2]`.
pub fn a_recurrence<A: Arrays + ?Sized>(arr: &A, max_n: u32) -> FamilyReport {
    let mut r = FamilyReport::new("A recurrence");
    for n in 0..=max_n {
        for k in -3..=(n as i32 + 2) {
            let lhs = &arr.a(n + 2, k) - &arr.a(n, k);
            let rhs = arr.a(n, k - 2).scale(&int(((n + 1) * (n + 1)) as i64));
            r.expect_eq(&lhs, &rhs, || format!("n={n} k={k}"));
        }
    }
    r
}

/// `B{n,k-2} - B{n,k} = (k-1)^2 B{n+2,k}`.
pub fn b_recurrence<A: Arrays + ?Sized>(arr: &A, max_n: u32) -> FamilyReport {
    let mut r = FamilyReport::new("B recurrence");
    for n in 1..=max_n {
        for k in 2..=(n + 2) {
            let lhs = &arr.b(n, k - 2) - &arr.b(n, k);
            let rhs = arr.b(n + 2, k).scale(&int(((k - 1) * (k - 1)) as i64));
            r.expect_eq(&lhs, &rhs, || format!("n={n} k={k}"));
        }
    }
    r
}

/// Same-parity sum `sum_{m = n-2s >= lo} B{n,m} (m-1)^2 A[m-2,k-2]`.
fn parity_sum<A: Arrays + ?Sized>(arr: &A, n: u32, top: u32, lo: u32, k: u32) -> PiNumber {
    let mut acc = PiNumber::zero();
    let mut m = top as i64;
    while m >= lo as i64 && m >= 1 {
        acc += &arr.b(n, m as u32) * &weighted_a(arr, m as u32, k as i32 - 2);
        m -= 2;
    }
    acc
}

/// The basic identity for even `k < n`.
pub fn basic_identity<A: Arrays + ?Sized>(arr: &A, max_n: u32) -> FamilyReport {
    let mut r = FamilyReport::new("basic identity (even k)");
    for n in 1..=max_n {
        for k in (2..n).step_by(2) {
            let lhs = parity_sum(arr, n, n, k, k);
            r.expect_eq(&lhs, &pi_over_factorial(n - k), || format!("n={n} k={k}"));
        }
    }
    r
}

/// Both parity classes of the basic identity without the parity restriction,
/// plus the combined sum and the alternating sum `2 delta_{nk}`.
pub fn complementing_identities<A: Arrays + ?Sized>(arr: &A, max_n: u32) -> FamilyReport {
    let mut r = FamilyReport::new("complementing identities");
    for n in 1..=max_n {
        for k in 1..=n {
            let same = parity_sum(arr, n, n, k, k);
            let other = parity_sum(arr, n, n - 1, k, k);
            let target = pi_over_factorial(n - k);
            if k < n {
                r.expect_eq(&same, &target, || format!("same parity n={n} k={k}"));
                r.expect_eq(&other, &target, || format!("other parity n={n} k={k}"));
            }
            let total = &same + &other;
            r.expect_eq(&total, &target.scale(&int(2)), || format!("sum n={n} k={k}"));
            let alternating = &same - &other;
            let delta = if n == k { PiNumber::integer(2) } else { PiNumber::zero() };
            r.expect_eq(&alternating, &delta, || format!("alternating n={n} k={k}"));
        }
    }
    r
}

/// Gauss-Bonnet type relations between external and internal angle sums at
/// `beta = n/2`, over both parities of the intermediate face dimension.
pub fn gauss_bonnet<A: Arrays + ?Sized>(arr: &A, max_n: u32) -> FamilyReport {
    let mut r = FamilyReport::new("Gauss-Bonnet relations");
    for n in 1..=max_n.min(ANGLE_FAMILY_CAP) {
        for k in 1..n {
            let half_binom = PiNumber::rational(BigRational::new(binomial(n as i64, k as i64), BigInt::from(2)));
            for offset in 0..2u32 {
                let mut acc = PiNumber::zero();
                let mut m = (n - offset) as i64;
                let mut ok = true;
                while m >= k as i64 {
                    let mu = m as u32;
                    let i = i_tilde_bb(arr, n, mu);
                    let j = j_tilde_bb(arr, mu, k);
                    match (i, j) {
                        (Ok(i), Ok(j)) => acc += &i * &j,
                        (Err(e), _) | (_, Err(e)) => {
                            r.checked += 1;
                            r.failures.push(format!("n={n} m={mu} k={k}: {e}"));
                            ok = false;
                            break;
                        }
                    }
                    m -= 2;
                }
                if ok {
                    r.expect_eq(&acc, &half_binom, || format!("n={n} k={k} offset={offset}"));
                }
            }
        }
    }
    r
}

/// Coefficient extraction against the independent oracle rows.
pub fn a_oracle<A: Arrays + ?Sized>(arr: &A, max_n: u32) -> FamilyReport {
    let mut r = FamilyReport::new("A versus oracle rows");
    for n in 1..=max_n.min(ORACLE_CAP) {
        for k in 0..=n {
            r.expect_eq(&arr.a(n, k as i32), &a_value_oracle(n, k), || format!("n={n} k={k}"));
        }
    }
    r
}

/// Internal angle sums: explicit formula against the recursive solution.
pub fn j_oracle<A: Arrays + ?Sized>(arr: &A, max_n: u32) -> FamilyReport {
    let mut r = FamilyReport::new("internal angles versus recursion");
    for n in 1..=max_n.min(ANGLE_FAMILY_CAP) {
        for k in 1..=n {
            let at = || format!("n={n} k={k}");
            let Some(bb) = r.expect_ok(j_tilde_bb(arr, n, k), at) else { continue };
            let Some(rec) = r.expect_ok(j_tilde_recursive(arr, n, k), at) else { continue };
            r.expect_eq(&bb, &rec, at);
        }
    }
    r
}

fn reversed(f: &FVectorExact) -> FVectorExact {
    let mut e = f.entries().to_vec();
    e.reverse();
    FVectorExact::new(f.dim(), e)
}

/// Half-sphere f-vectors for `d+1 <= n <= max_n`, `d <= max_d`.
fn half_sphere_vectors<A: Arrays + ?Sized>(
    arr: &A,
    r: &mut FamilyReport,
    max_n: u32,
    max_d: u32,
) -> Vec<(u32, FVectorExact)> {
    let mut out = Vec::new();
    for d in 1..=max_d {
        for n in (d + 1)..=max_n {
            if let Some(f) = r.expect_ok(half_sphere_f_vector(arr, n, d), || format!("n={n} d={d}")) {
                out.push((n, f));
            }
        }
    }
    out
}

/// Euler relation for the zero cell, the limit and every half-sphere hull.
pub fn euler<A: Arrays + ?Sized>(arr: &A, max_n: u32) -> FamilyReport {
    let mut r = FamilyReport::new("Euler relation");
    let one = PiNumber::one();
    for d in 1..=max_n {
        r.expect_eq(&zero_cell_f_vector(arr, d).euler_sum(), &one, || format!("zero cell d={d}"));
        r.expect_eq(&limit_f_vector(arr, d).euler_sum(), &one, || format!("limit d={d}"));
    }
    for (n, f) in half_sphere_vectors(arr, &mut r, max_n, max_n.min(8)) {
        r.expect_eq(&f.euler_sum(), &one, || format!("half-sphere n={n} d={}", f.dim()));
    }
    r
}

/// Rebuilds each f-vector from its even-codimension entries.
pub fn dehn_sommerville<A: Arrays + ?Sized>(arr: &A, max_n: u32) -> FamilyReport {
    let mut r = FamilyReport::new("Dehn-Sommerville closure");
    let check = |r: &mut FamilyReport, simple: FVectorExact, label: String| {
        let d = simple.dim();
        let partial: Vec<Option<PiNumber>> = simple
            .entries()
            .iter()
            .enumerate()
            .map(|(l, v)| if (d as usize - l).is_multiple_of(2) { Some(v.clone()) } else { None })
            .collect();
        let label2 = label.clone();
        if let Some(c) = r.expect_ok(dehn_sommerville_closure(d, &partial), || label) {
            r.checked += 1;
            if c != simple {
                r.failures.push(format!("{label2}: closure disagrees"));
            }
        }
    };
    for d in 1..=max_n {
        check(&mut r, zero_cell_f_vector(arr, d), format!("zero cell d={d}"));
        check(&mut r, reversed(&limit_f_vector(arr, d)), format!("limit d={d}"));
    }
    for (n, f) in half_sphere_vectors(arr, &mut r, max_n, max_n.min(8)) {
        let d = f.dim();
        check(&mut r, reversed(&f), format!("half-sphere n={n} d={d}"));
    }
    r
}

/// `2 f_1 = d f_0` for the simple zero cell, and the dual relation
/// `2 f_{d-2} = d f_{d-1}` for the simplicial limit and half-sphere hulls.
pub fn edge_vertex<A: Arrays + ?Sized>(arr: &A, max_n: u32) -> FamilyReport {
    let mut r = FamilyReport::new("2 f_1 = d f_0");
    let rel = |r: &mut FamilyReport, f: &FVectorExact, lo: usize, hi: usize, label: String| {
        let d = f.dim() as i64;
        r.expect_eq(&f.get(hi).scale(&int(2)), &f.get(lo).scale(&int(d)), || label);
    };
    for d in 2..=max_n {
        let z = zero_cell_f_vector(arr, d);
        rel(&mut r, &z, 0, 1, format!("zero cell d={d}"));
        let l = limit_f_vector(arr, d);
        let top = d as usize - 1;
        rel(&mut r, &l, top, top - 1, format!("limit d={d}"));
    }
    for (n, f) in half_sphere_vectors(arr, &mut r, max_n, max_n.min(8)) {
        let top = f.dim() as usize - 1;
        if top >= 1 {
            rel(&mut r, &f, top, top - 1, format!("half-sphere n={n} d={}", f.dim()));
        }
    }
    r
}

/// Half-sphere f-vectors against the independently derived closed forms.
pub fn closed_form_cross_checks<A: Arrays + ?Sized>(arr: &A, max_n: u32) -> FamilyReport {
    let mut r = FamilyReport::new("closed-form cross-checks");
    for d in 1..=max_n {
        let z = zero_cell_f_vector(arr, d);
        r.expect_eq(z.get(0), &zero_cell_vertices(d), || format!("zero cell vertices d={d}"));
        if d >= 2 {
            r.expect_eq(z.get(d as usize - 2), &zero_cell_ridges(d), || format!("zero cell ridges d={d}"));
        }
    }
    let max_d = max_n.min(6);
    for d in 1..=max_d {
        for n in [d + 2, d + 3] {
            let Some(f) = r.expect_ok(half_sphere_f_vector(arr, n, d), || format!("n={n} d={d}")) else {
                continue;
            };
            for k in 0..d {
                let closed = if n == d + 2 { f_vector_d_plus_2(arr, d, k) } else { f_vector_d_plus_3(arr, d, k) };
                if let Some(c) = r.expect_ok(closed, || format!("n={n} d={d} k={k}")) {
                    r.expect_eq(f.get(k as usize), &c, || format!("n={n} d={d} k={k}"));
                }
            }
        }
        for n in (d + 1)..=max_n.max(d + 1) {
            let at = || format!("facets n={n} d={d}");
            let Some(f) = r.expect_ok(half_sphere_f_vector(arr, n, d), at) else { continue };
            if let Some(b) = r.expect_ok(barany_facets(arr, n, d), at) {
                r.expect_eq(f.get(d as usize - 1), &b, at);
            }
            if d >= 2 {
                if let Some(e) = r.expect_ok(expected_edges(arr, n, d), at) {
                    r.expect_eq(f.get(1), &e, || format!("edges n={n} d={d}"));
                }
            }
        }
    }
    r
}

/// `(n+1) - E f_0(C_{n+1}) = 2 (n+1) E alpha(C_n)`.
pub fn efron<A: Arrays + ?Sized>(arr: &A, max_n: u32) -> FamilyReport {
    let mut r = FamilyReport::new("Efron identity");
    for d in 1..=max_n.min(5) {
        for n in (d + 1)..=max_n {
            let at = || format!("n={n} d={d}");
            let Some(f) = r.expect_ok(half_sphere_f_vector(arr, n + 1, d), at) else { continue };
            let Some(alpha) = r.expect_ok(expected_solid_angle(arr, n, d), at) else { continue };
            let lhs = &PiNumber::integer(n as i64 + 1) - f.get(0);
            let rhs = alpha.scale(&int(2 * (n as i64 + 1)));
            r.expect_eq(&lhs, &rhs, at);
        }
    }
    r
}

/// Every family, in a fixed order.
pub fn verify_all<A: Arrays + ?Sized>(arr: &A, max_n: u32) -> Vec<FamilyReport> {
    Vec::from([
        a_recurrence(arr, max_n),
        b_recurrence(arr, max_n),
        basic_identity(arr, max_n),
        complementing_identities(arr, max_n),
        gauss_bonnet(arr, max_n),
        a_oracle(arr, max_n),
        j_oracle(arr, max_n),
        euler(arr, max_n),
        dehn_sommerville(arr, max_n),
        edge_vertex(arr, max_n),
        closed_form_cross_checks(arr, max_n),
        efron(arr, max_n),
    ])
}
