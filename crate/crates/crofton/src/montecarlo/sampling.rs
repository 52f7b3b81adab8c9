//! Uniform points on the upper half-sphere and their gnomonic images.

use rand::Rng;
use rand_distr::StandardNormal;

/// Points with `x_0` at or below this are too close to the equator to
/// project and are drawn again.
pub const POLE_THRESHOLD: f64 = 1e-9;

/// A unit vector in `R^(d+1)` with non-negative first coordinate.
#[derive(Clone, Debug, PartialEq)]
pub struct PointOnHalfSphere {
    coords: Vec<f64>,
}

impl PointOnHalfSphere {
    /// Checks the unit-norm and upper-half invariants.
    pub fn new(coords: Vec<f64>) -> Option<Self> {
        let norm = coords.iter().map(|x| x * x).sum::<f64>().sqrt();
        if coords.len() >= 2 && (norm - 1.0).abs() <= 1e-12 && coords[0] >= 0.0 {
            Some(Self { coords })
        } else {
            None
        }
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    /// Dimension `d` of the sphere, one less than the ambient dimension.
    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }
}

impl AsRef<[f64]> for PointOnHalfSphere {
    fn as_ref(&self) -> &[f64] {
        &self.coords
    }
}

/// Gnomonic image `(x_1, ..., x_d) / x_0` in `R^d`.
#[derive(Clone, Debug, PartialEq)]
pub struct ProjectedPoint {
    coords: Vec<f64>,
}

impl ProjectedPoint {
    pub fn new(coords: Vec<f64>) -> Self {
        assert!(coords.iter().all(|x| x.is_finite()), "projected coordinates must be finite");
        Self { coords }
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }
}

impl AsRef<[f64]> for ProjectedPoint {
    fn as_ref(&self) -> &[f64] {
        &self.coords
    }
}

/// Uniform point on `S^d_+`: normalised standard Gaussian with the first
/// coordinate reflected to be non-negative.
pub fn sample_half_sphere<R: Rng + ?Sized>(d: usize, rng: &mut R) -> PointOnHalfSphere {
    assert!(d >= 1, "dimension must be positive");
    let mut coords = vec![0.0; d + 1];
    loop {
        for c in coords.iter_mut() {
            *c = rng.sample(StandardNormal);
        }
        let norm = coords.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 0.0 {
            for c in coords.iter_mut() {
                *c /= norm;
            }
            coords[0] = coords[0].abs();
            return PointOnHalfSphere { coords };
        }
    }
}

/// `None` when the point lies within [`POLE_THRESHOLD`] of the boundary.
pub fn gnomonic_project(p: &PointOnHalfSphere) -> Option<ProjectedPoint> {
    let x0 = p.coords[0];
    if x0 <= POLE_THRESHOLD {
        return None;
    }
    Some(ProjectedPoint { coords: p.coords[1..].iter().map(|x| x / x0).collect() })
}

/// Samples until the point is projectable.
pub fn sample_projected<R: Rng + ?Sized>(d: usize, rng: &mut R) -> (PointOnHalfSphere, ProjectedPoint) {
    loop {
        let p = sample_half_sphere(d, rng);
        if let Some(q) = gnomonic_project(&p) {
            return (p, q);
        }
    }
}

/// Inverse of the gnomonic map, `(1, y) / |(1, y)|`.
pub fn lift(y: &[f64]) -> Vec<f64> {
    let norm = (1.0 + y.iter().map(|x| x * x).sum::<f64>()).sqrt();
    std::iter::once(1.0 / norm).chain(y.iter().map(|x| x / norm)).collect()
}
