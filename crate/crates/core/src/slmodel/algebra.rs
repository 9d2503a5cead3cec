use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use super::tolerance::TAU_ALG;
use super::{same_size, MatrixElement, Tag};
use crate::error::{Error, Result};
use crate::rootsys::Root;

/// Basis of `sl_n(R)`: `E_ij` for `i != j` in row-major order, then
/// `H_i = E_ii - E_{i+1,i+1}` for `i = 1..n-1`.
pub fn basis(n: usize) -> Vec<MatrixElement> {
    let mut out = Vec::with_capacity(n * n - 1);
    for i in 0..n {
        for j in 0..n {
            if i != j {
                out.push(MatrixElement::unit(n, i, j));
            }
        }
    }
    for i in 0..n - 1 {
        let mut d = vec![0.0; n];
        d[i] = 1.0;
        d[i + 1] = -1.0;
        out.push(MatrixElement::diagonal(&d));
    }
    out
}

/// Coordinates of a traceless matrix in [`basis`]. The `H` coefficients are
/// partial sums of the diagonal.
pub fn basis_coordinates(x: &DMatrix<f64>) -> DVector<f64> {
    let n = x.nrows();
    let mut c = DVector::zeros(n * n - 1);
    let mut k = 0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                c[k] = x[(i, j)];
                k += 1;
            }
        }
    }
    let mut partial = 0.0;
    for i in 0..n - 1 {
        partial += x[(i, i)];
        c[k + i] = partial;
    }
    c
}

pub fn from_basis_coordinates(n: usize, c: &DVector<f64>) -> MatrixElement {
    let mut m = DMatrix::zeros(n, n);
    let mut k = 0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                m[(i, j)] = c[k];
                k += 1;
            }
        }
    }
    for i in 0..n - 1 {
        m[(i, i)] += c[k + i];
        m[(i + 1, i + 1)] -= c[k + i];
    }
    MatrixElement::raw(m, Some(Tag::G))
}

fn require_traceless(x: &MatrixElement) -> Result<()> {
    let t = x.trace().abs();
    if t > TAU_ALG * x.norm().max(1.0) {
        return Err(Error::TagViolation {
            tag: "g".into(),
            defect: t,
        });
    }
    Ok(())
}

/// `[X, Y] = XY - YX`
pub fn bracket(x: &MatrixElement, y: &MatrixElement) -> Result<MatrixElement> {
    same_size(x, y)?;
    require_traceless(x)?;
    require_traceless(y)?;
    Ok(bracket_unchecked(x.matrix(), y.matrix()))
}

pub(crate) fn bracket_unchecked(x: &DMatrix<f64>, y: &DMatrix<f64>) -> MatrixElement {
    MatrixElement::raw(x * y - y * x, Some(Tag::G))
}

/// Matrix of `ad(X)` over [`basis`].
pub fn ad_matrix(x: &MatrixElement) -> Result<DMatrix<f64>> {
    require_traceless(x)?;
    let n = x.size();
    let b = basis(n);
    let mut ad = DMatrix::zeros(b.len(), b.len());
    for (j, e) in b.iter().enumerate() {
        let col = basis_coordinates(bracket_unchecked(x.matrix(), e.matrix()).matrix());
        ad.set_column(j, &col);
    }
    Ok(ad)
}

/// `B(X, Y) = tr(ad X ad Y)`, from the ad matrices.
pub fn killing_form(x: &MatrixElement, y: &MatrixElement) -> Result<f64> {
    same_size(x, y)?;
    Ok((ad_matrix(x)? * ad_matrix(y)?).trace())
}

/// `2n tr(XY)` on `sl_n(R)`.
pub fn killing_form_closed(x: &MatrixElement, y: &MatrixElement) -> Result<f64> {
    same_size(x, y)?;
    Ok(2.0 * x.size() as f64 * (x.matrix() * y.matrix()).trace())
}

/// `<X, Y> = -B(X, theta Y) = 2n tr(X Y^T)`
pub fn metric(x: &MatrixElement, y: &MatrixElement) -> Result<f64> {
    same_size(x, y)?;
    Ok(2.0 * x.size() as f64 * x.matrix().dot(y.matrix()))
}

/// Skew-symmetric (`k`) and symmetric (`p`) parts.
pub fn cartan_split(x: &MatrixElement) -> Result<(MatrixElement, MatrixElement)> {
    require_traceless(x)?;
    let m = x.matrix();
    let mt = m.transpose();
    let k = MatrixElement::raw((m - &mt) * 0.5, Some(Tag::K));
    let p = MatrixElement::raw((m + &mt) * 0.5, Some(Tag::P));
    Ok((k, p))
}

/// A component of the restricted root space decomposition; `root` is
/// `None` for the `g_0 = a` part.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RootComponent {
    pub root: Option<Root>,
    pub component: MatrixElement,
}

/// Splits `X` into its diagonal part and the `E_ij` components, one per
/// root `e_i - e_j`. Zero components are omitted.
pub fn restricted_root_decompose(x: &MatrixElement) -> Result<Vec<RootComponent>> {
    require_traceless(x)?;
    let n = x.size();
    let m = x.matrix();
    let mut out = Vec::new();
    let diag: Vec<f64> = (0..n).map(|i| m[(i, i)]).collect();
    if diag.iter().any(|&d| d != 0.0) {
        out.push(RootComponent {
            root: None,
            component: MatrixElement::raw(
                DMatrix::from_diagonal(&DVector::from_vec(diag)),
                Some(Tag::A),
            ),
        });
    }
    for i in 0..n {
        for j in 0..n {
            if i != j && m[(i, j)] != 0.0 {
                let mut c = DMatrix::zeros(n, n);
                c[(i, j)] = m[(i, j)];
                let mut v = vec![0; n];
                v[i] = 1;
                v[j] = -1;
                out.push(RootComponent {
                    root: Some(Root::from_integers(&v)?),
                    component: MatrixElement::raw(c, Some(if i < j { Tag::N } else { Tag::G })),
                });
            }
        }
    }
    Ok(out)
}
