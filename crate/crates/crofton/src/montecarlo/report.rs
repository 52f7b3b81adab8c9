use serde::{Deserialize, Serialize};

/// Exact integer sums of per-trial outcomes, so that merging partial
/// results in any order gives identical statistics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmpiricalFVector {
    dim: usize,
    trials: u64,
    sums: Vec<u128>,
    sums_sq: Vec<u128>,
}

impl EmpiricalFVector {
    pub fn new(dim: usize) -> Self {
        Self { dim, trials: 0, sums: vec![0; dim], sums_sq: vec![0; dim] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn trials(&self) -> u64 {
        self.trials
    }

    pub fn push(&mut self, outcome: &[u64]) {
        assert_eq!(outcome.len(), self.dim);
        self.trials += 1;
        for (k, &v) in outcome.iter().enumerate() {
            self.sums[k] += v as u128;
            self.sums_sq[k] += (v as u128) * (v as u128);
        }
    }

    pub fn merge(mut self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        self.trials += other.trials;
        for k in 0..self.dim {
            self.sums[k] += other.sums[k];
            self.sums_sq[k] += other.sums_sq[k];
        }
        self
    }

    pub fn mean(&self, k: usize) -> f64 {
        self.sums[k] as f64 / self.trials as f64
    }

    /// Sample standard deviation over `sqrt(trials)`; zero for a single trial.
    pub fn stderr(&self, k: usize) -> f64 {
        let t = self.trials as u128;
        if t < 2 {
            return 0.0;
        }
        // t * sum(x^2) - (sum x)^2 is exact and non-negative
        let num = t * self.sums_sq[k] - self.sums[k] * self.sums[k];
        let var = num as f64 / (t as f64 * (t - 1) as f64);
        (var / t as f64).sqrt()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuantityEstimate {
    pub k: u32,
    pub mean: f64,
    pub stderr: f64,
    pub exact_float: f64,
    /// `(mean - exact) / stderr`. Zero-variance estimates score `0` when
    /// they hit the exact value and `None` otherwise.
    pub z: Option<f64>,
}

impl QuantityEstimate {
    pub fn new(k: u32, mean: f64, stderr: f64, exact_float: f64) -> Self {
        let z = if stderr > 0.0 {
            Some((mean - exact_float) / stderr)
        } else if (mean - exact_float).abs() <= 1e-12 * exact_float.abs().max(1.0) {
            Some(0.0)
        } else {
            None
        };
        Self { k, mean, stderr, exact_float, z }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SimulationReport {
    pub estimator: String,
    pub n: u32,
    pub d: u32,
    pub trials: u64,
    pub seed: u64,
    pub rng: String,
    pub quantities: Vec<QuantityEstimate>,
    pub rejected_trials: u64,
    /// Wall-clock time; the only field that is not reproducible.
    pub seconds: f64,
}

impl SimulationReport {
    /// Largest `|z|`, or `None` when some quantity has no defined score.
    pub fn max_abs_z(&self) -> Option<f64> {
        self.quantities.iter().try_fold(0.0f64, |m, q| q.z.map(|z| m.max(z.abs())))
    }

    /// True when every quantity has `|z| <= threshold`.
    pub fn within(&self, threshold: f64) -> bool {
        self.max_abs_z().is_some_and(|z| z <= threshold)
    }

    /// Copy with the timing zeroed, for reproducibility comparisons.
    pub fn without_timing(&self) -> Self {
        Self { seconds: 0.0, ..self.clone() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn statistics() {
        let mut e = EmpiricalFVector::new(2);
        for v in [1, 2, 3, 4] {
            e.push(&[v, 7]);
        }
        assert_eq!(e.mean(0), 2.5);
        // sample variance 5/3
        assert!((e.stderr(0) - (5.0f64 / 3.0 / 4.0).sqrt()).abs() < 1e-15);
        assert_eq!(e.stderr(1), 0.0);
        let mut a = EmpiricalFVector::new(2);
        let mut b = EmpiricalFVector::new(2);
        a.push(&[1, 7]);
        a.push(&[2, 7]);
        b.push(&[3, 7]);
        b.push(&[4, 7]);
        assert_eq!(b.clone().merge(&a), e);
        assert_eq!(a.merge(&b), e);
    }

    #[test]
    fn z_scores() {
        assert_eq!(QuantityEstimate::new(0, 1.0, 0.0, 1.0).z, Some(0.0));
        assert_eq!(QuantityEstimate::new(0, 1.0, 0.0, 2.0).z, None);
        assert_eq!(QuantityEstimate::new(0, 1.5, 0.25, 1.0).z, Some(2.0));
    }

    #[test]
    fn json_shape() {
        let r = SimulationReport {
            estimator: "sylvester".into(),
            n: 4,
            d: 2,
            trials: 10,
            seed: 1,
            rng: "ChaCha8".into(),
            quantities: vec![QuantityEstimate::new(0, 0.5, 0.1, 0.4317)],
            rejected_trials: 0,
            seconds: 0.25,
        };
        let v: serde_json::Value = serde_json::to_value(&r).unwrap();
        for key in ["estimator", "n", "d", "trials", "seed", "rng", "quantities", "rejected_trials", "seconds"] {
            assert!(v.get(key).is_some(), "{key}");
        }
        for key in ["k", "mean", "stderr", "exact_float", "z"] {
            assert!(v["quantities"][0].get(key).is_some(), "{key}");
        }
        let back: SimulationReport = serde_json::from_value(v).unwrap();
        assert_eq!(back, r);
        assert!(!r.within(0.5));
        assert!(r.within(1.0));
    }
}
