use std::time::Instant;

use crofton_core::arrays::ArrayCache;
use crofton_core::closed_forms::{expected_solid_angle, half_sphere_f_vector, sylvester_probability};
use crofton_core::PiNumber;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use super::hull::{cone_contains, hull_faces, HullError, MAX_DIM, MAX_POINTS};
use super::report::{EmpiricalFVector, QuantityEstimate, SimulationReport};
use super::sampling::{sample_half_sphere, sample_projected};

/// Recorded in every report. Trial `t` draws from a ChaCha8 generator seeded
/// with `seed_from_u64(seed)` on stream `t`.
pub const RNG_NAME: &str = "ChaCha8";
pub const MIN_TRIALS: u64 = 100;
/// Rejected-trial rate above which a warning is logged.
pub const REJECTION_ALARM: f64 = 1e-3;
const MAX_ATTEMPTS: u32 = 1000;

#[derive(Debug, Error)]
pub enum SimulationError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error(transparent)]
    Exact(#[from] crofton_core::Error),
}

fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Runs independent trials in parallel, drawing again whenever a trial hits
/// a degenerate or undecidable configuration.
fn run_trials<F>(dim: usize, trials: u64, seed: u64, trial: F) -> (EmpiricalFVector, u64)
where
    F: Fn(&mut ChaCha8Rng) -> Result<Vec<u64>, HullError> + Sync,
{
    (0..trials)
        .into_par_iter()
        .fold(
            || (EmpiricalFVector::new(dim), 0u64),
            |(mut acc, mut rejected), t| {
                let mut rng = trial_rng(seed, t);
                for attempt in 1..=MAX_ATTEMPTS {
                    match trial(&mut rng) {
                        Ok(v) => {
                            acc.push(&v);
                            return (acc, rejected);
                        }
                        Err(e) => {
                            rejected += 1;
                            assert!(attempt < MAX_ATTEMPTS, "trial {t} rejected {MAX_ATTEMPTS} times: {e}");
                        }
                    }
                }
                unreachable!()
            },
        )
        .reduce(|| (EmpiricalFVector::new(dim), 0), |(a, ra), (b, rb)| (a.merge(&b), ra + rb))
}

fn check_trials(trials: u64) -> Result<(), SimulationError> {
    if trials < MIN_TRIALS {
        return Err(SimulationError::InvalidParameters(format!("need at least {MIN_TRIALS} trials, got {trials}")));
    }
    Ok(())
}

fn check_hull_size(points: u32, d: u32) -> Result<(), SimulationError> {
    if d < 1 || d as usize > MAX_DIM {
        return Err(SimulationError::InvalidParameters(format!("dimension must be in 1..={MAX_DIM}, got {d}")));
    }
    if points < d + 1 || points as usize > MAX_POINTS {
        return Err(SimulationError::InvalidParameters(format!(
            "hull needs between d+1 = {} and {MAX_POINTS} points, got {points}",
            d + 1
        )));
    }
    Ok(())
}

fn log_rejections(name: &str, trials: u64, rejected: u64) {
    let rate = rejected as f64 / trials as f64;
    if rate > REJECTION_ALARM {
        log::warn!("{name}: rejected-trial rate {rate:.2e} exceeds {REJECTION_ALARM:e}");
    } else if rejected > 0 {
        log::info!("{name}: {rejected} rejected trials");
    }
}

fn float(x: &PiNumber) -> Result<f64, SimulationError> {
    Ok(x.eval_f64()?)
}

/// Empirical f-vector of the spherical hull of `n` uniform points on `S^d_+`.
pub fn estimate_f_vector(n: u32, d: u32, trials: u64, seed: u64) -> Result<SimulationReport, SimulationError> {
    check_trials(trials)?;
    check_hull_size(n, d)?;
    let exact = half_sphere_f_vector(&ArrayCache::new(), n, d)?;
    let start = Instant::now();
    let (du, nu) = (d as usize, n as usize);
    let (acc, rejected) = run_trials(du, trials, seed, |rng| {
        let pts: Vec<_> = (0..nu).map(|_| sample_projected(du, rng).1).collect();
        hull_faces(&pts, du).map(|h| h.f_vector())
    });
    log_rejections("fvector", trials, rejected);
    let quantities = (0..du)
        .map(|k| Ok(QuantityEstimate::new(k as u32, acc.mean(k), acc.stderr(k), float(exact.get(k))?)))
        .collect::<Result<_, SimulationError>>()?;
    Ok(SimulationReport {
        estimator: "fvector".into(),
        n,
        d,
        trials,
        seed,
        rng: RNG_NAME.into(),
        quantities,
        rejected_trials: rejected,
        seconds: start.elapsed().as_secs_f64(),
    })
}

/// Frequency with which one of `d+2` uniform points lies in the positive hull
/// of the other `d+1`, that is, with which their spherical hull is a simplex.
pub fn estimate_sylvester(d: u32, trials: u64, seed: u64) -> Result<SimulationReport, SimulationError> {
    check_trials(trials)?;
    check_hull_size(d + 2, d)?;
    let exact = float(&sylvester_probability(&ArrayCache::new(), d))?;
    let start = Instant::now();
    let du = d as usize;
    let (acc, rejected) = run_trials(1, trials, seed, |rng| {
        let pts: Vec<_> = (0..du + 2).map(|_| sample_half_sphere(du, rng)).collect();
        let mut hit = false;
        for i in 0..pts.len() {
            let others: Vec<_> = pts.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, p)| p).collect();
            hit |= cone_contains(&others, &pts[i])?;
        }
        Ok(vec![hit as u64])
    });
    log_rejections("sylvester", trials, rejected);
    Ok(SimulationReport {
        estimator: "sylvester".into(),
        n: d + 2,
        d,
        trials,
        seed,
        rng: RNG_NAME.into(),
        quantities: vec![QuantityEstimate::new(0, acc.mean(0), acc.stderr(0), exact)],
        rejected_trials: rejected,
        seconds: start.elapsed().as_secs_f64(),
    })
}

/// Normalised solid angle of the cone spanned by `n` uniform points, as half
/// the frequency with which a fresh point falls inside it. A fresh point is
/// inside exactly when it is not a vertex of the hull of all `n+1` points.
pub fn estimate_solid_angle(n: u32, d: u32, trials: u64, seed: u64) -> Result<SimulationReport, SimulationError> {
    check_trials(trials)?;
    check_hull_size(n + 1, d)?;
    if n < d + 1 {
        return Err(SimulationError::InvalidParameters(format!("need n >= d+1, got n = {n}, d = {d}")));
    }
    let exact = float(&expected_solid_angle(&ArrayCache::new(), n, d)?)?;
    let start = Instant::now();
    let (du, nu) = (d as usize, n as usize);
    let (acc, rejected) = run_trials(1, trials, seed, |rng| {
        let pts: Vec<_> = (0..=nu).map(|_| sample_projected(du, rng).1).collect();
        let h = hull_faces(&pts, du)?;
        Ok(vec![!h.is_vertex(nu) as u64])
    });
    log_rejections("angle", trials, rejected);
    Ok(SimulationReport {
        estimator: "angle".into(),
        n,
        d,
        trials,
        seed,
        rng: RNG_NAME.into(),
        quantities: vec![QuantityEstimate::new(0, acc.mean(0) / 2.0, acc.stderr(0) / 2.0, exact)],
        rejected_trials: rejected,
        seconds: start.elapsed().as_secs_f64(),
    })
}
