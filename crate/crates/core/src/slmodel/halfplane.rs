//! `SL_2(R)` acting on the upper half-plane by linear fractional maps.

use nalgebra::Matrix2;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::tolerance::TAU_NUM;
use crate::error::{Error, Result};

/// `(az + b) / (cz + d)`
pub fn moebius(g: &Matrix2<f64>, z: Complex64) -> Result<Complex64> {
    let det = g.determinant();
    if (det - 1.0).abs() > TAU_NUM {
        return Err(Error::DeterminantNotOne(det));
    }
    if !(z.im > 0.0) || !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::NotInHalfPlane(z.to_string()));
    }
    let (a, b, c, d) = (g[(0, 0)], g[(0, 1)], g[(1, 0)], g[(1, 1)]);
    Ok((z * a + b) / (z * c + d))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OrbitKind {
    K,
    A,
    N,
}

impl std::str::FromStr for OrbitKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "K" | "k" => Ok(OrbitKind::K),
            "A" | "a" => Ok(OrbitKind::A),
            "N" | "n" => Ok(OrbitKind::N),
            _ => Err(format!("unknown orbit `{s}`, expected K, A or N")),
        }
    }
}

/// `K(s)`, `A(t)` or `N(u)`.
pub fn subgroup_element(kind: OrbitKind, param: f64) -> Matrix2<f64> {
    match kind {
        OrbitKind::K => {
            let (s, c) = param.sin_cos();
            Matrix2::new(c, s, -s, c)
        }
        OrbitKind::A => Matrix2::new(param.exp(), 0.0, 0.0, (-param).exp()),
        OrbitKind::N => Matrix2::new(1.0, param, 0.0, 1.0),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OrbitPoint {
    pub param: f64,
    pub re: f64,
    pub im: f64,
}

/// Images of `base` under the one-parameter subgroup at each parameter.
pub fn orbit_points(kind: OrbitKind, base: Complex64, params: &[f64]) -> Result<Vec<OrbitPoint>> {
    params
        .iter()
        .map(|&p| {
            let z = moebius(&subgroup_element(kind, p), base)?;
            Ok(OrbitPoint {
                param: p,
                re: z.re,
                im: z.im,
            })
        })
        .collect()
}
