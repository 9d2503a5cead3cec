use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use super::tolerance::TAU_NUM;
use crate::error::{Error, Result};

/// `g = k a n` with `k` in `SO_n`, `a` positive diagonal of determinant one
/// and `n` unit upper triangular.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IwasawaFactors {
    #[serde(with = "super::rows")]
    pub k: DMatrix<f64>,
    #[serde(with = "super::rows")]
    pub a: DMatrix<f64>,
    #[serde(with = "super::rows")]
    pub n: DMatrix<f64>,
}

impl IwasawaFactors {
    pub fn product(&self) -> DMatrix<f64> {
        &self.k * &self.a * &self.n
    }

    /// `max |g - k a n|` over all entries.
    pub fn reconstruction_error(&self, g: &DMatrix<f64>) -> f64 {
        (g - self.product()).amax()
    }

    /// Largest of the deviations of `k`, `a`, `n` from their shape
    /// constraints.
    pub fn shape_defect(&self) -> f64 {
        let m = self.k.nrows();
        let orth = (self.k.transpose() * &self.k - DMatrix::identity(m, m)).amax();
        let det_k = (self.k.determinant() - 1.0).abs();
        let mut off = 0.0f64;
        for i in 0..m {
            for j in 0..m {
                if i != j {
                    off = off.max(self.a[(i, j)].abs());
                }
                if i > j {
                    off = off.max(self.n[(i, j)].abs());
                }
            }
            off = off.max((self.n[(i, i)] - 1.0).abs());
            if self.a[(i, i)] <= 0.0 {
                return f64::INFINITY;
            }
        }
        let det_a = (self.a.diagonal().product() - 1.0).abs();
        orth.max(det_k).max(off).max(det_a)
    }
}

/// Iwasawa factorization by Gram-Schmidt on the columns of `g`, run twice
/// per column for stability.
pub fn iwasawa_group(g: &DMatrix<f64>) -> Result<IwasawaFactors> {
    if !g.is_square() {
        return Err(Error::NotSquare {
            rows: g.nrows(),
            cols: g.ncols(),
        });
    }
    let m = g.nrows();
    let det = g.determinant();
    if !det.is_finite() || (det - 1.0).abs() > TAU_NUM {
        return Err(Error::DeterminantNotOne(det));
    }

    let mut q = DMatrix::<f64>::zeros(m, m);
    let mut r = DMatrix::<f64>::zeros(m, m);
    for j in 0..m {
        let mut v: DVector<f64> = g.column(j).into_owned();
        let scale = v.norm();
        for _ in 0..2 {
            for i in 0..j {
                let c = q.column(i).dot(&v);
                r[(i, j)] += c;
                v.axpy(-c, &q.column(i), 1.0);
            }
        }
        let norm = v.norm();
        if norm <= 1e-12 * scale.max(f64::MIN_POSITIVE) {
            return Err(Error::Singular);
        }
        r[(j, j)] = norm;
        q.set_column(j, &(v / norm));
    }

    let diag = r.diagonal();
    let a = DMatrix::from_diagonal(&diag);
    let mut n = r;
    for i in 0..m {
        let d = diag[i];
        n.row_mut(i).iter_mut().for_each(|x| *x /= d);
        n[(i, i)] = 1.0;
    }
    Ok(IwasawaFactors { k: q, a, n })
}
