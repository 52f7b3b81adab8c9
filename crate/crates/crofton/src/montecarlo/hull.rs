//! Face enumeration of small simplicial convex hulls by brute force over
//! vertex subsets.
//!
//! Points in `R^d` are lifted to unit vectors `(1, y) / |(1, y)|`, so every
//! affine hyperplane becomes a linear one and signed distances are measured
//! between unit vectors. A `d`-subset spans a facet when every other point
//! lies strictly on one side of its hyperplane.

use std::collections::HashSet;

use nalgebra::{DMatrix, DVector};
use thiserror::Error;

use super::sampling::lift;

/// Support test tolerance on normalised signed distances.
pub const SUPPORT_TOL: f64 = 1e-9;
/// Tolerance on cone coefficients.
pub const CONE_TOL: f64 = 1e-10;
/// Distances or coefficients within this multiple of the tolerance are
/// treated as undecidable.
pub const TIE_FACTOR: f64 = 10.0;
pub const MAX_POINTS: usize = 25;
pub const MAX_DIM: usize = 8;

#[derive(Clone, Copy, Debug, Error, PartialEq, Eq)]
pub enum HullError {
    #[error("degenerate configuration")]
    Degenerate,
    #[error("near-tie in a support or membership test")]
    NearTie,
    #[error("need at least d+1 = {needed} points, got {got}")]
    TooFewPoints { needed: usize, got: usize },
    #[error("brute-force enumeration is capped at n <= {MAX_POINTS}, d <= {MAX_DIM} (got n = {n}, d = {d})")]
    TooLarge { n: usize, d: usize },
}

/// Facets of a simplicial hull as vertex bitmasks over the input order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HullFaces {
    dim: usize,
    facets: Vec<u32>,
}

impl HullFaces {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn facets(&self) -> &[u32] {
        &self.facets
    }

    /// Union of all facet vertex sets.
    pub fn vertex_mask(&self) -> u32 {
        self.facets.iter().fold(0, |a, f| a | f)
    }

    pub fn is_vertex(&self, i: usize) -> bool {
        self.vertex_mask() & (1 << i) != 0
    }

    /// `(f_0, ..., f_{d-1})`, counting `k`-faces as distinct `(k+1)`-subsets
    /// of facet vertex sets.
    pub fn f_vector(&self) -> Vec<u64> {
        let d = self.dim;
        let mut faces: Vec<HashSet<u32>> = vec![HashSet::new(); d];
        for &facet in &self.facets {
            let verts: Vec<u32> = (0..32).filter(|i| facet & (1 << i) != 0).collect();
            for sub in 1u32..(1 << verts.len()) {
                let mut mask = 0;
                for (j, v) in verts.iter().enumerate() {
                    if sub & (1 << j) != 0 {
                        mask |= 1 << v;
                    }
                }
                faces[sub.count_ones() as usize - 1].insert(mask);
            }
        }
        faces.iter().map(|s| s.len() as u64).collect()
    }
}

fn det(m: &DMatrix<f64>) -> f64 {
    if m.nrows() == 0 {
        1.0
    } else {
        m.determinant()
    }
}

/// Unit normal of the linear hyperplane spanned by `d` vectors in `R^(d+1)`,
/// or `None` if they are (numerically) dependent.
fn hyperplane_normal(rows: &[&[f64]]) -> Option<Vec<f64>> {
    let d = rows.len();
    let m = DMatrix::from_fn(d, d + 1, |i, j| rows[i][j]);
    let mut normal: Vec<f64> = (0..=d)
        .map(|j| {
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            sign * det(&m.clone().remove_column(j))
        })
        .collect();
    let norm = normal.iter().map(|x| x * x).sum::<f64>().sqrt();
    if norm < 1e-12 {
        return None;
    }
    normal.iter_mut().for_each(|x| *x /= norm);
    Some(normal)
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Calls `f` with every `k`-subset of `0..n` as an index slice.
fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> Result<(), HullError>) -> Result<(), HullError> {
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx)?;
        let mut i = k;
        while i > 0 && idx[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return Ok(());
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Facets of the convex hull of `points` in `R^d`.
pub fn hull_faces<P: AsRef<[f64]>>(points: &[P], d: usize) -> Result<HullFaces, HullError> {
    let n = points.len();
    if d == 0 || n < d + 1 {
        return Err(HullError::TooFewPoints { needed: d + 1, got: n });
    }
    if n > MAX_POINTS || d > MAX_DIM {
        return Err(HullError::TooLarge { n, d });
    }
    let lifted: Vec<Vec<f64>> = points
        .iter()
        .map(|p| {
            assert_eq!(p.as_ref().len(), d, "point dimension mismatch");
            lift(p.as_ref())
        })
        .collect();
    let tie = TIE_FACTOR * SUPPORT_TOL;
    let mut facets = Vec::new();
    let mut in_subset = vec![false; n];
    for_each_subset(n, d, |subset| {
        let rows: Vec<&[f64]> = subset.iter().map(|&i| lifted[i].as_slice()).collect();
        for &i in subset {
            in_subset[i] = true;
        }
        let verdict = (|| {
            let Some(normal) = hyperplane_normal(&rows) else {
                return Ok(false);
            };
            let (mut pos, mut neg, mut near) = (false, false, false);
            for (j, v) in lifted.iter().enumerate() {
                if in_subset[j] {
                    continue;
                }
                let s = dot(&normal, v);
                if s > tie {
                    pos = true;
                } else if s < -tie {
                    neg = true;
                } else {
                    near = true;
                }
                if pos && neg {
                    return Ok(false);
                }
            }
            if near {
                Err(HullError::NearTie)
            } else {
                Ok(true)
            }
        })();
        for &i in subset {
            in_subset[i] = false;
        }
        if verdict? {
            facets.push(subset.iter().fold(0u32, |m, &i| m | (1 << i)));
        }
        Ok(())
    })?;
    if facets.is_empty() {
        return Err(HullError::Degenerate);
    }
    Ok(HullFaces { dim: d, facets })
}

/// Integer f-vector `(f_0, ..., f_{d-1})` of the convex hull of `points`.
pub fn hull_f_vector<P: AsRef<[f64]>>(points: &[P], d: usize) -> Result<Vec<u64>, HullError> {
    hull_faces(points, d).map(|h| h.f_vector())
}

/// Whether `query` lies in the positive hull of `generators`.
///
/// With as many generators as coordinates the coefficients are exact
/// solutions; otherwise a least-squares fit is used and a residual above
/// [`SUPPORT_TOL`] means the query is outside the span.
pub fn cone_contains<P: AsRef<[f64]>, Q: AsRef<[f64]>>(generators: &[P], query: Q) -> Result<bool, HullError> {
    let q = query.as_ref();
    let dim = q.len();
    let m = generators.len();
    if m == 0 {
        return Ok(q.iter().all(|&x| x == 0.0));
    }
    let g = DMatrix::from_fn(dim, m, |i, j| generators[j].as_ref()[i]);
    let rhs = DVector::from_column_slice(q);
    let lambda = if m == dim {
        g.clone().lu().solve(&rhs).ok_or(HullError::Degenerate)?
    } else {
        let lam = g.clone().svd(true, true).solve(&rhs, 1e-14).map_err(|_| HullError::Degenerate)?;
        if (&g * &lam - &rhs).norm() > SUPPORT_TOL {
            return Ok(false);
        }
        lam
    };
    let min = lambda.iter().cloned().fold(f64::INFINITY, f64::min);
    if !min.is_finite() {
        return Err(HullError::Degenerate);
    }
    if (min + CONE_TOL).abs() <= TIE_FACTOR * CONE_TOL {
        return Err(HullError::NearTie);
    }
    Ok(min >= -CONE_TOL)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn simplex_f(d: usize) -> Vec<u64> {
        (1..=d).map(|k| binom(d + 1, k)).collect()
    }

    fn binom(n: usize, k: usize) -> u64 {
        (0..k).fold(1u64, |a, i| a * (n - i) as u64 / (i as u64 + 1))
    }

    #[test]
    fn octahedron() {
        let mut pts = Vec::new();
        for i in 0..3 {
            for s in [1.0, -1.0] {
                let mut p = vec![0.0; 3];
                p[i] = s;
                pts.push(p);
            }
        }
        assert_eq!(hull_f_vector(&pts, 3).unwrap(), [6, 12, 8]);
    }

    #[test]
    fn simplices() {
        assert_eq!(hull_f_vector(&[[0.0], [1.0]], 1).unwrap(), [2]);
        let tri = [[0.0, 0.0], [1.0, 0.0], [0.2, 0.9]];
        assert_eq!(hull_f_vector(&tri, 2).unwrap(), simplex_f(2));
        let tet = [[0.0, 0.0, 0.0], [1.0, 0.1, 0.0], [0.3, 1.0, 0.2], [0.1, 0.2, 1.0]];
        assert_eq!(hull_f_vector(&tet, 3).unwrap(), simplex_f(3));
    }

    #[test]
    fn interior_points_are_not_vertices() {
        let pts = [[0.0, 0.0], [4.0, 0.0], [0.0, 4.0], [1.0, 1.0], [3.9, 3.9]];
        let h = hull_faces(&pts, 2).unwrap();
        assert_eq!(h.f_vector(), [4, 4]);
        assert!(!h.is_vertex(3));
        assert!(h.is_vertex(4));
    }

    #[test]
    fn errors() {
        assert_eq!(hull_f_vector(&[[0.0, 0.0], [1.0, 1.0]], 2), Err(HullError::TooFewPoints { needed: 3, got: 2 }));
        let line = [[0.0, 0.0], [1.0, 1.0], [2.0, 2.0]];
        assert!(hull_f_vector(&line, 2).is_err());
        // a point on an edge cannot be classified
        let tie = [[0.0, 0.0], [2.0, 0.0], [0.0, 2.0], [1.0, 0.0]];
        assert_eq!(hull_f_vector(&tie, 2), Err(HullError::NearTie));
        let many = vec![[0.0]; 26];
        assert!(matches!(hull_f_vector(&many, 1), Err(HullError::TooLarge { .. })));
    }

    #[test]
    fn cone_membership() {
        assert_eq!(cone_contains(&[[1.0, 1.0], [1.0, -1.0]], [1.0, 0.0]), Ok(true));
        assert_eq!(cone_contains(&[[1.0, 1.0], [1.0, -1.0]], [0.0, 1.0]), Ok(false));
        assert_eq!(cone_contains(&[[1.0, 0.0]], [0.0, 1.0]), Ok(false));
        assert_eq!(cone_contains(&[[1.0, 0.0]], [2.0, 0.0]), Ok(true));
        assert_eq!(cone_contains(&[[1.0, 0.0], [0.0, 1.0]], [1.0, 0.0]), Err(HullError::NearTie));
        assert_eq!(cone_contains(&[[1.0, 1.0], [2.0, 2.0]], [1.0, 0.0]), Err(HullError::Degenerate));
    }
}
