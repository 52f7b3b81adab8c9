use crofton::montecarlo::*;
use minilp::{ComparisonOp, OptimizationDirection, Problem};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use statrs::distribution::{ChiSquared, ContinuousCDF};

/// Whether some affine function vanishes on `subset` and is at least one on
/// every other point, decided by linear programming.
fn supported(points: &[Vec<f64>], subset: &[usize]) -> bool {
    let d = points[0].len();
    let mut lp = Problem::new(OptimizationDirection::Minimize);
    let vars: Vec<_> = (0..=d).map(|_| lp.add_var(0.0, (f64::NEG_INFINITY, f64::INFINITY))).collect();
    for (i, p) in points.iter().enumerate() {
        let mut row: Vec<_> = p.iter().enumerate().map(|(j, &x)| (vars[j], x)).collect();
        row.push((vars[d], 1.0));
        if subset.contains(&i) {
            lp.add_constraint(&row[..], ComparisonOp::Eq, 0.0);
        } else {
            lp.add_constraint(&row[..], ComparisonOp::Ge, 1.0);
        }
    }
    lp.solve().is_ok()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

fn lp_f_vector(points: &[Vec<f64>]) -> Vec<u64> {
    let d = points[0].len();
    (1..=d).map(|k| subsets(points.len(), k).iter().filter(|s| supported(points, s)).count() as u64).collect()
}

fn random_points(rng: &mut ChaCha8Rng, n: usize, d: usize) -> Vec<Vec<f64>> {
    (0..n).map(|_| (0..d).map(|_| rng.random_range(-1.0..1.0)).collect()).collect()
}

#[test]
fn hull_matches_linear_programming_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let pts = random_points(&mut rng, 8, 3);
    assert_eq!(hull_f_vector(&pts, 3).unwrap(), lp_f_vector(&pts));
    for (n, d) in [(6, 2), (9, 2), (7, 3), (10, 3), (8, 4)] {
        for _ in 0..5 {
            let pts = random_points(&mut rng, n, d);
            assert_eq!(hull_f_vector(&pts, d).unwrap(), lp_f_vector(&pts), "n={n} d={d}");
        }
    }
}

#[test]
fn sampled_hulls_satisfy_euler() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for d in 2..=5usize {
        for n in [d + 1, d + 3, 12] {
            for _ in 0..40 {
                let pts: Vec<_> = (0..n).map(|_| sample_projected(d, &mut rng).1).collect();
                let f = hull_f_vector(&pts, d).unwrap();
                let euler: i64 =
                    f.iter().enumerate().map(|(k, &x)| if k % 2 == 0 { x as i64 } else { -(x as i64) }).sum();
                assert_eq!(euler, 1 - if d % 2 == 0 { 1 } else { -1 }, "{f:?}");
                if d == 2 {
                    assert_eq!(f[0], f[1]);
                }
                if n == d + 1 {
                    assert_eq!(f.iter().sum::<u64>(), (1 << (d + 1)) - 2);
                }
            }
        }
    }
}

#[test]
fn projected_radius_follows_the_beta_prime_law() {
    // For d = 2, P(|y| <= r) = 1 - 1/sqrt(1 + r^2).
    const BINS: usize = 20;
    const SAMPLES: usize = 100_000;
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let mut counts = [0usize; BINS];
    for _ in 0..SAMPLES {
        let (_, y) = sample_projected(2, &mut rng);
        let r2: f64 = y.coords().iter().map(|x| x * x).sum();
        let u = 1.0 - 1.0 / (1.0 + r2).sqrt();
        counts[((u * BINS as f64) as usize).min(BINS - 1)] += 1;
    }
    let expected = SAMPLES as f64 / BINS as f64;
    let chi2: f64 = counts.iter().map(|&c| (c as f64 - expected).powi(2) / expected).sum();
    let p = 1.0 - ChiSquared::new((BINS - 1) as f64).unwrap().cdf(chi2);
    assert!(p > 1e-3, "chi2 = {chi2}, p = {p}");
}

#[test]
fn mean_height_on_the_half_sphere() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let xs: Vec<f64> = (0..100_000).map(|_| sample_half_sphere(2, &mut rng).coords()[0]).collect();
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    let sd = (xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0)).sqrt();
    assert!((mean - 0.5).abs() < 3.0 * sd / n.sqrt(), "mean {mean}");
}

#[test]
fn reports_do_not_depend_on_thread_count() {
    let run = |threads| {
        rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap().install(|| {
            (
                estimate_f_vector(9, 3, 1500, 3).unwrap().without_timing(),
                estimate_solid_angle(6, 2, 1500, 3).unwrap().without_timing(),
                estimate_sylvester(3, 1500, 3).unwrap().without_timing(),
            )
        })
    };
    assert_eq!(run(1), run(4));
}

#[test]
fn solid_angle_grows_towards_one_half() {
    let small = estimate_solid_angle(4, 2, 20_000, 1).unwrap().quantities[0].mean;
    let large = estimate_solid_angle(10, 2, 20_000, 1).unwrap().quantities[0].mean;
    assert!(small < large && large < 0.5, "{small} {large}");
}
