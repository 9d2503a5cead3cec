//! Matrix model of `g = sl_{r+1}(R)` and `M = SL_{r+1}(R)/SO_{r+1}`.
//!
//! Elements are dense `(r+1) x (r+1)` real matrices. The Cartan involution
//! is `theta(X) = -X^T`, `a` is the traceless diagonal matrices and `n` the
//! strictly upper triangular ones, and the metric is
//! `<X, Y> = -B(X, theta Y) = 2(r+1) tr(X Y^T)`.

mod algebra;
mod halfplane;
mod iwasawa;
mod sampling;
mod subspace;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use algebra::{
    ad_matrix, basis, basis_coordinates, bracket, cartan_split, from_basis_coordinates,
    killing_form, killing_form_closed, metric, restricted_root_decompose, RootComponent,
};
pub use halfplane::{moebius, orbit_points, subgroup_element, OrbitKind, OrbitPoint};
pub use iwasawa::{iwasawa_group, IwasawaFactors};
pub use sampling::{random_sl, random_traceless, rng, DEFAULT_SEED};
pub use subspace::{
    a_lower_phi, a_upper_phi, block_partition, build_s_phi_v, build_s_phi_v_with,
    cartan_subalgebra, default_ell_choice, is_lie_triple, n_phi, nilpotent, non_lie_triple_example,
    p_lambda, p_phi, p_phi_s, q_phi_blocks, root_pair, LieTripleReport, Subspace,
};

/// Tolerances for floating-point checks.
pub mod tolerance {
    /// Identities that hold exactly on integer-entry bases.
    pub const TAU_ALG: f64 = 1e-12;
    /// Factorization round trips on random matrices.
    pub const TAU_NUM: f64 = 1e-10;
}

use tolerance::TAU_ALG;

/// Subspace of `sl_{r+1}(R)` an element claims to lie in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Tag {
    G,
    K,
    P,
    A,
    N,
    QPhi,
    SPhiV,
}

impl Tag {
    pub fn name(self) -> &'static str {
        match self {
            Tag::G => "g",
            Tag::K => "k",
            Tag::P => "p",
            Tag::A => "a",
            Tag::N => "n",
            Tag::QPhi => "q_phi",
            Tag::SPhiV => "s_phi_v",
        }
    }

    /// Largest entry violating the shape constraint of the tag.
    fn defect(self, m: &DMatrix<f64>) -> f64 {
        let n = m.nrows();
        let trace = m.trace().abs();
        let mut worst: f64 = trace;
        for i in 0..n {
            for j in 0..n {
                let d = match self {
                    Tag::K => (m[(i, j)] + m[(j, i)]).abs(),
                    Tag::P => (m[(i, j)] - m[(j, i)]).abs(),
                    Tag::A if i != j => m[(i, j)].abs(),
                    Tag::N if i >= j => m[(i, j)].abs(),
                    Tag::SPhiV if i > j => m[(i, j)].abs(),
                    _ => 0.0,
                };
                worst = worst.max(d);
            }
        }
        worst
    }
}

impl std::fmt::Display for Tag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// A square real matrix, optionally tagged with the subspace it belongs to.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "ElementRecord", into = "ElementRecord")]
pub struct MatrixElement {
    entries: DMatrix<f64>,
    tag: Option<Tag>,
}

#[derive(Serialize, Deserialize)]
struct ElementRecord {
    rows: Vec<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    tag: Option<Tag>,
}

impl From<MatrixElement> for ElementRecord {
    fn from(e: MatrixElement) -> Self {
        ElementRecord {
            rows: e.to_rows(),
            tag: e.tag,
        }
    }
}

impl TryFrom<ElementRecord> for MatrixElement {
    type Error = Error;

    fn try_from(r: ElementRecord) -> Result<Self> {
        let m = matrix_from_rows(&r.rows)?;
        match r.tag {
            Some(t) => MatrixElement::tagged(m, t),
            None => MatrixElement::new(m),
        }
    }
}

impl MatrixElement {
    pub fn new(entries: DMatrix<f64>) -> Result<Self> {
        if !entries.is_square() {
            return Err(Error::NotSquare {
                rows: entries.nrows(),
                cols: entries.ncols(),
            });
        }
        Ok(MatrixElement { entries, tag: None })
    }

    /// Checks the constraint of `tag` (traceless plus shape) to `TAU_ALG`.
    pub fn tagged(entries: DMatrix<f64>, tag: Tag) -> Result<Self> {
        let e = MatrixElement::new(entries)?;
        let defect = tag.defect(&e.entries);
        if defect > TAU_ALG {
            return Err(Error::TagViolation {
                tag: tag.name().into(),
                defect,
            });
        }
        Ok(MatrixElement {
            tag: Some(tag),
            ..e
        })
    }

    pub(crate) fn raw(entries: DMatrix<f64>, tag: Option<Tag>) -> Self {
        MatrixElement { entries, tag }
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        MatrixElement::new(matrix_from_rows(rows)?)
    }

    pub fn zeros(size: usize) -> Self {
        MatrixElement::raw(DMatrix::zeros(size, size), None)
    }

    /// Elementary matrix `E_ij` (0-based).
    pub fn unit(size: usize, i: usize, j: usize) -> Self {
        let mut m = DMatrix::zeros(size, size);
        m[(i, j)] = 1.0;
        let tag = if i < j { Some(Tag::N) } else { Some(Tag::G) };
        MatrixElement::raw(m, tag)
    }

    pub fn diagonal(d: &[f64]) -> Self {
        let m = DMatrix::from_diagonal(&nalgebra::DVector::from_column_slice(d));
        let tag = (d.iter().sum::<f64>().abs() <= TAU_ALG).then_some(Tag::A);
        MatrixElement::raw(m, tag)
    }

    pub fn size(&self) -> usize {
        self.entries.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.entries
    }

    pub fn into_matrix(self) -> DMatrix<f64> {
        self.entries
    }

    pub fn tag(&self) -> Option<Tag> {
        self.tag
    }

    pub fn with_tag(self, tag: Tag) -> Result<Self> {
        MatrixElement::tagged(self.entries, tag)
    }

    pub fn untagged(self) -> Self {
        MatrixElement { tag: None, ..self }
    }

    pub fn transpose(&self) -> Self {
        MatrixElement::raw(self.entries.transpose(), None)
    }

    pub fn scale(&self, c: f64) -> Self {
        MatrixElement::raw(&self.entries * c, self.tag)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        same_size(self, other)?;
        let tag = if self.tag == other.tag {
            self.tag
        } else {
            None
        };
        Ok(MatrixElement::raw(&self.entries + &other.entries, tag))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        same_size(self, other)?;
        let tag = if self.tag == other.tag {
            self.tag
        } else {
            None
        };
        Ok(MatrixElement::raw(&self.entries - &other.entries, tag))
    }

    pub fn trace(&self) -> f64 {
        self.entries.trace()
    }

    /// Frobenius norm.
    pub fn norm(&self) -> f64 {
        self.entries.norm()
    }

    /// Largest absolute entry.
    pub fn max_abs(&self) -> f64 {
        self.entries.amax()
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        self.entries
            .row_iter()
            .map(|r| r.iter().copied().collect())
            .collect()
    }
}

pub(crate) fn same_size(a: &MatrixElement, b: &MatrixElement) -> Result<()> {
    if a.size() != b.size() {
        return Err(Error::SizeMismatch {
            left: a.size(),
            right: b.size(),
        });
    }
    Ok(())
}

/// Serde adapter writing a square matrix as a list of rows.
pub(crate) mod rows {
    use nalgebra::DMatrix;
    use serde::{de::Error as _, Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(m: &DMatrix<f64>, s: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<f64>> = m.row_iter().map(|r| r.iter().copied().collect()).collect();
        rows.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<DMatrix<f64>, D::Error> {
        let rows = Vec::<Vec<f64>>::deserialize(d)?;
        super::matrix_from_rows(&rows).map_err(D::Error::custom)
    }
}

pub fn matrix_from_rows(rows: &[Vec<f64>]) -> Result<DMatrix<f64>> {
    let n = rows.len();
    if let Some(bad) = rows.iter().find(|r| r.len() != n) {
        return Err(Error::NotSquare {
            rows: n,
            cols: bad.len(),
        });
    }
    Ok(DMatrix::from_fn(n, n, |i, j| rows[i][j]))
}
