//! Monte Carlo estimates of the same expectations, computed from explicit
//! random samples on the upper half-sphere.

mod estimators;
mod hull;
mod report;
mod sampling;

pub use estimators::{
    estimate_f_vector, estimate_solid_angle, estimate_sylvester, SimulationError, MIN_TRIALS, REJECTION_ALARM, RNG_NAME,
};
pub use hull::{
    cone_contains, hull_f_vector, hull_faces, HullError, HullFaces, CONE_TOL, MAX_DIM, MAX_POINTS, SUPPORT_TOL,
    TIE_FACTOR,
};
pub use report::{EmpiricalFVector, QuantityEstimate, SimulationReport};
pub use sampling::{
    gnomonic_project, lift, sample_half_sphere, sample_projected, PointOnHalfSphere, ProjectedPoint, POLE_THRESHOLD,
};
