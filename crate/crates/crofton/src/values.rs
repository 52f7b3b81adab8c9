//! Named quantities that `crofton value` can evaluate.

use std::fmt::Write;

use crofton_core::arrays::{i_tilde_bb, j_tilde_bb, ArrayCache, Arrays};
use crofton_core::closed_forms::{
    barany_facets, c_star, cover_efron_limit, expected_edges, expected_solid_angle, grassmann_constant, half_sphere_f,
    limit_f_vector, sylvester_probability, zero_cell_f_vector, zero_cell_intrinsic_volume,
};
use crofton_core::{parse_pi, BigRational, PiNumber};
use thiserror::Error;

/// Parameters above this are refused to keep evaluation interactive.
pub const PARAM_CAP: i64 = 64;

#[derive(Debug, Error)]
pub enum ValueError {
    #[error("unknown quantity {0:?}")]
    Unknown(String),
    #[error("{name} takes parameters {params}")]
    Arity { name: &'static str, params: &'static str },
    #[error("invalid parameter {0:?}")]
    BadParam(String),
    #[error(transparent)]
    Exact(#[from] crofton_core::Error),
}

type Eval = fn(&ArrayCache, &[i64], Option<&BigRational>) -> Result<PiNumber, ValueError>;

pub struct Quantity {
    pub name: &'static str,
    pub params: &'static str,
    pub about: &'static str,
    arity: usize,
    /// Accepts one trailing rational parameter.
    rational_tail: bool,
    eval: Eval,
}

fn at_least(x: i64, lo: i64, what: &str) -> Result<u32, ValueError> {
    if x < lo || x > PARAM_CAP {
        return Err(ValueError::BadParam(format!("{what} = {x} must lie in {lo}..={PARAM_CAP}")));
    }
    Ok(x as u32)
}

fn face_index(k: i64, d: u32) -> Result<usize, ValueError> {
    if k < 0 || k >= d as i64 {
        return Err(ValueError::BadParam(format!("k = {k} must lie in 0..{d}")));
    }
    Ok(k as usize)
}

pub const REGISTRY: &[Quantity] = &[
    Quantity {
        name: "A",
        params: "n k",
        about: "coefficient array A[n,k] (k may be negative)",
        arity: 2,
        rational_tail: false,
        eval: |c, p, _| {
            let k = i32::try_from(p[1]).map_err(|_| ValueError::BadParam(p[1].to_string()))?;
            Ok(c.a(at_least(p[0], 0, "n")?, k))
        },
    },
    Quantity {
        name: "B",
        params: "n k",
        about: "sine-moment array B{n,k}",
        arity: 2,
        rational_tail: false,
        eval: |c, p, _| Ok(c.b(at_least(p[0], 0, "n")?, at_least(p[1], 0, "k")?)),
    },
    Quantity {
        name: "I",
        params: "n k",
        about: "expected external angle sum at k-vertex faces of a beta' simplex",
        arity: 2,
        rational_tail: false,
        eval: |c, p, _| Ok(i_tilde_bb(c, at_least(p[0], 1, "n")?, at_least(p[1], 1, "k")?)?),
    },
    Quantity {
        name: "J",
        params: "n k",
        about: "expected internal angle sum at k-vertex faces of a beta' simplex",
        arity: 2,
        rational_tail: false,
        eval: |c, p, _| Ok(j_tilde_bb(c, at_least(p[0], 1, "n")?, at_least(p[1], 1, "k")?)?),
    },
    Quantity {
        name: "zero-cell",
        params: "d k",
        about: "expected number of k-faces of the Poisson zero cell",
        arity: 2,
        rational_tail: false,
        eval: |c, p, _| {
            let d = at_least(p[0], 1, "d")?;
            Ok(zero_cell_f_vector(c, d).get(face_index(p[1], d)?).clone())
        },
    },
    Quantity {
        name: "intrinsic-volume",
        params: "d l [gamma]",
        about: "expected l-th intrinsic volume of the zero cell at intensity gamma (default 1)",
        arity: 2,
        rational_tail: true,
        eval: |c, p, g| {
            let one = BigRational::from_integer(1.into());
            let d = at_least(p[0], 1, "d")?;
            Ok(zero_cell_intrinsic_volume(c, d, at_least(p[1], 0, "l")?, g.unwrap_or(&one))?)
        },
    },
    Quantity {
        name: "half-sphere",
        params: "n d k",
        about: "expected number of k-faces of the hull of n uniform points on the upper half-sphere",
        arity: 3,
        rational_tail: false,
        eval: |c, p, _| {
            let d = at_least(p[1], 1, "d")?;
            let k = face_index(p[2], d)? as u32;
            Ok(half_sphere_f(c, at_least(p[0], 1, "n")?, d, k)?)
        },
    },
    Quantity {
        name: "limit",
        params: "d k",
        about: "limit of the expected number of k-faces as n grows",
        arity: 2,
        rational_tail: false,
        eval: |c, p, _| {
            let d = at_least(p[0], 1, "d")?;
            Ok(limit_f_vector(c, d).get(face_index(p[1], d)?).clone())
        },
    },
    Quantity {
        name: "facets",
        params: "n d",
        about: "expected facet number via the sine-integral formula",
        arity: 2,
        rational_tail: false,
        eval: |c, p, _| Ok(barany_facets(c, at_least(p[0], 1, "n")?, at_least(p[1], 1, "d")?)?),
    },
    Quantity {
        name: "edges",
        params: "n d",
        about: "expected edge number of the half-sphere hull",
        arity: 2,
        rational_tail: false,
        eval: |c, p, _| Ok(expected_edges(c, at_least(p[0], 1, "n")?, at_least(p[1], 1, "d")?)?),
    },
    Quantity {
        name: "solid-angle",
        params: "n d",
        about: "expected normalised solid angle of the cone spanned by n uniform points",
        arity: 2,
        rational_tail: false,
        eval: |c, p, _| Ok(expected_solid_angle(c, at_least(p[0], 1, "n")?, at_least(p[1], 1, "d")?)?),
    },
    Quantity {
        name: "sylvester",
        params: "d",
        about: "probability that d+2 uniform points on the upper half-sphere span a simplex",
        arity: 1,
        rational_tail: false,
        eval: |c, p, _| Ok(sylvester_probability(c, at_least(p[0], 1, "d")?)),
    },
    Quantity {
        name: "grassmann",
        params: "k d",
        about: "Grassmann angle constant pi^k A[d,k] / 2",
        arity: 2,
        rational_tail: false,
        eval: |c, p, _| Ok(grassmann_constant(c, at_least(p[0], 0, "k")?, at_least(p[1], 1, "d")?)?),
    },
    Quantity {
        name: "c-star",
        params: "d",
        about: "first-order constant of the facet number as n grows",
        arity: 1,
        rational_tail: false,
        eval: |c, p, _| Ok(c_star(c, at_least(p[0], 1, "d")?)),
    },
    Quantity {
        name: "cover-efron",
        params: "k d",
        about: "number of k-faces of the d-dimensional crosspolytope",
        arity: 2,
        rational_tail: false,
        eval: |_, p, _| {
            let d = at_least(p[1], 1, "d")?;
            face_index(p[0], d)?;
            Ok(PiNumber::integer(cover_efron_limit(p[0] as u32, d)))
        },
    },
];

pub fn lookup(name: &str) -> Option<&'static Quantity> {
    REGISTRY.iter().find(|q| q.name.eq_ignore_ascii_case(name))
}

/// One line per quantity: name, parameters and description.
pub fn registry_listing() -> String {
    let mut out = String::new();
    for q in REGISTRY {
        writeln!(out, "  {:<18} {:<14} {}", q.name, q.params, q.about).unwrap();
    }
    out
}

/// Evaluates `name` with textual parameters.
pub fn evaluate(cache: &ArrayCache, name: &str, args: &[String]) -> Result<PiNumber, ValueError> {
    let q = lookup(name).ok_or_else(|| ValueError::Unknown(name.to_string()))?;
    let extra = args.len().checked_sub(q.arity);
    let tail = match extra {
        Some(0) => None,
        Some(1) if q.rational_tail => {
            let r = parse_pi(&args[q.arity])
                .ok()
                .and_then(|x| x.as_rational())
                .ok_or_else(|| ValueError::BadParam(args[q.arity].clone()))?;
            Some(r)
        }
        _ => return Err(ValueError::Arity { name: q.name, params: q.params }),
    };
    let ints = args[..q.arity]
        .iter()
        .map(|s| s.parse::<i64>().map_err(|_| ValueError::BadParam(s.clone())))
        .collect::<Result<Vec<_>, _>>()?;
    (q.eval)(cache, &ints, tail.as_ref())
}
