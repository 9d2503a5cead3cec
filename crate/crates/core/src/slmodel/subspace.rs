use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use super::algebra::bracket_unchecked;
use super::tolerance::TAU_ALG;
use super::{MatrixElement, Tag};
use crate::error::{Error, Result};
use crate::foliate::is_orthogonal;
use crate::parabolic::{root_subsystem, PhiSubset};
use crate::rootsys::{dynkin_diagram, Root};
use crate::spacecat::SpaceDescriptor;

/// Relative size below which a vector counts as lying in a span.
const DEPENDENCE: f64 = 1e-10;

/// A linear subspace of `n x n` matrices given by an independent basis.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "SubspaceRecord", into = "SubspaceRecord")]
pub struct Subspace {
    label: String,
    size: usize,
    basis: Vec<MatrixElement>,
    #[serde(skip)]
    ortho: Vec<DVector<f64>>,
}

#[derive(Serialize, Deserialize)]
struct SubspaceRecord {
    label: String,
    size: usize,
    basis: Vec<MatrixElement>,
}

impl From<Subspace> for SubspaceRecord {
    fn from(s: Subspace) -> Self {
        SubspaceRecord {
            label: s.label,
            size: s.size,
            basis: s.basis,
        }
    }
}

impl TryFrom<SubspaceRecord> for Subspace {
    type Error = Error;

    fn try_from(r: SubspaceRecord) -> Result<Self> {
        Subspace::new(r.label, r.size, r.basis)
    }
}

fn flatten(m: &DMatrix<f64>) -> DVector<f64> {
    DVector::from_column_slice(m.as_slice())
}

/// Removes the components along `ortho` (twice, for stability).
fn reject(ortho: &[DVector<f64>], v: &DVector<f64>) -> DVector<f64> {
    let mut w = v.clone();
    for _ in 0..2 {
        for q in ortho {
            let c = q.dot(&w);
            w.axpy(-c, q, 1.0);
        }
    }
    w
}

impl Subspace {
    /// Fails with `LinearlyDependent` when the basis has a redundant element.
    pub fn new(label: impl Into<String>, size: usize, basis: Vec<MatrixElement>) -> Result<Self> {
        let mut ortho: Vec<DVector<f64>> = Vec::with_capacity(basis.len());
        for b in &basis {
            if b.size() != size {
                return Err(Error::SizeMismatch {
                    left: size,
                    right: b.size(),
                });
            }
            let v = flatten(b.matrix());
            let w = reject(&ortho, &v);
            let norm = w.norm();
            if norm <= DEPENDENCE * v.norm() || norm == 0.0 {
                return Err(Error::LinearlyDependent);
            }
            ortho.push(w / norm);
        }
        Ok(Subspace {
            label: label.into(),
            size,
            basis,
            ortho,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[MatrixElement] {
        &self.basis
    }

    /// Length, in the metric `2n tr(X Y^T)`, of the part of `x` orthogonal
    /// to the subspace.
    pub fn residual(&self, x: &DMatrix<f64>) -> f64 {
        let w = reject(&self.ortho, &flatten(x));
        (2.0 * self.size as f64).sqrt() * w.norm()
    }

    pub fn contains(&self, x: &MatrixElement) -> bool {
        x.size() == self.size && self.residual(x.matrix()) <= TAU_ALG * x.norm().max(1.0)
    }

    /// Largest residual of `[X, Y]` over pairs of basis elements.
    pub fn bracket_closure_residual(&self) -> f64 {
        let mut worst = 0.0f64;
        for (i, x) in self.basis.iter().enumerate() {
            for y in &self.basis[i + 1..] {
                let b = bracket_unchecked(x.matrix(), y.matrix());
                worst = worst.max(self.residual(b.matrix()));
            }
        }
        worst
    }

    /// Whether the two subspaces coincide.
    pub fn same_span(&self, other: &Subspace) -> bool {
        self.size == other.size
            && self.dim() == other.dim()
            && other.basis.iter().all(|b| self.contains(b))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LieTripleReport {
    pub holds: bool,
    pub residual: f64,
}

/// Checks `[[S, S], S] ⊆ S` on all basis triples. The basis must consist of
/// symmetric matrices.
pub fn is_lie_triple(s: &Subspace) -> Result<LieTripleReport> {
    for (k, b) in s.basis().iter().enumerate() {
        let m = b.matrix();
        if (m - m.transpose()).amax() > TAU_ALG {
            return Err(Error::NotSymmetric(k));
        }
    }
    let basis = s.basis();
    let mut residual = 0.0f64;
    for (i, x) in basis.iter().enumerate() {
        for y in &basis[i + 1..] {
            let xy = bracket_unchecked(x.matrix(), y.matrix());
            for z in basis {
                let t = bracket_unchecked(xy.matrix(), z.matrix());
                residual = residual.max(s.residual(t.matrix()));
            }
        }
    }
    Ok(LieTripleReport {
        holds: residual <= TAU_ALG,
        residual,
    })
}

/// `span{(E_12 + E_21)/2, diag(1, 0, -1)}` in `sl_3(R)`: symmetric, but
/// `[[H, X], X] = diag(1/2, -1/2, 0)` leaves the span.
pub fn non_lie_triple_example() -> Subspace {
    let mut x = DMatrix::zeros(3, 3);
    x[(0, 1)] = 0.5;
    x[(1, 0)] = 0.5;
    let h = DMatrix::from_diagonal(&DVector::from_vec(vec![1.0, 0.0, -1.0]));
    Subspace::new("non-example", 3, vec![tagged(x, Tag::P), tagged(h, Tag::A)])
        .expect("independent")
}

fn sl_rank(space: &SpaceDescriptor) -> Result<usize> {
    if !space.is_sl_model() {
        return Err(Error::NotSlModel(space.ascii().to_string()));
    }
    Ok(space.rank())
}

/// `(i, j)`, 0-based, for the root `e_i - e_j` of `A_r`.
pub fn root_pair(root: &Root) -> (usize, usize) {
    let s = root.scaled();
    let i = s.iter().position(|&x| x > 0).expect("A-type root");
    let j = s.iter().position(|&x| x < 0).expect("A-type root");
    (i, j)
}

fn tagged(m: DMatrix<f64>, tag: Tag) -> MatrixElement {
    MatrixElement::raw(m, Some(tag))
}

fn h(n: usize, i: usize) -> MatrixElement {
    let mut m = DMatrix::zeros(n, n);
    m[(i, i)] = 1.0;
    m[(i + 1, i + 1)] = -1.0;
    tagged(m, Tag::A)
}

fn e(n: usize, i: usize, j: usize, tag: Tag) -> MatrixElement {
    let mut m = DMatrix::zeros(n, n);
    m[(i, j)] = 1.0;
    tagged(m, tag)
}

/// `p_lambda = R (E_ij + E_ji)` for `lambda = e_i - e_j`.
pub fn p_lambda(n: usize, root: &Root) -> MatrixElement {
    let (i, j) = root_pair(root);
    let mut m = DMatrix::zeros(n, n);
    m[(i, j)] = 1.0;
    m[(j, i)] = 1.0;
    tagged(m, Tag::P)
}

/// Traceless diagonal matrices of size `r + 1`.
pub fn cartan_subalgebra(r: usize) -> Subspace {
    let n = r + 1;
    Subspace::new("a", n, (0..r).map(|i| h(n, i)).collect()).expect("independent")
}

/// Strictly upper triangular matrices of size `r + 1`.
pub fn nilpotent(r: usize) -> Subspace {
    let n = r + 1;
    let mut b = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            b.push(e(n, i, j, Tag::N));
        }
    }
    Subspace::new("n", n, b).expect("independent")
}

/// Blocks of consecutive matrix indices: `i` and `i+1` share a block
/// exactly when `alpha_{i+1}` is in `Phi` (0-based `i`).
pub fn block_partition(r: usize, phi: &PhiSubset) -> Vec<Vec<usize>> {
    let mut blocks = vec![vec![0]];
    for i in 1..=r {
        if phi.contains(i) {
            blocks.last_mut().expect("nonempty").push(i);
        } else {
            blocks.push(vec![i]);
        }
    }
    blocks
}

/// `a_Phi`: the common kernel of `Phi` in `a`, i.e. traceless diagonals
/// constant on each block.
pub fn a_lower_phi(space: &SpaceDescriptor, phi: &PhiSubset) -> Result<Subspace> {
    let r = sl_rank(space)?;
    let n = r + 1;
    let blocks = block_partition(r, phi);
    let mut b = Vec::new();
    for w in blocks.windows(2) {
        let mut m = DMatrix::zeros(n, n);
        for &i in &w[0] {
            m[(i, i)] = w[1].len() as f64;
        }
        for &i in &w[1] {
            m[(i, i)] = -(w[0].len() as f64);
        }
        b.push(tagged(m, Tag::A));
    }
    Subspace::new("a_Phi", n, b)
}

/// `a^Phi`, spanned by `H_alpha` for `alpha` in `Phi`.
pub fn a_upper_phi(space: &SpaceDescriptor, phi: &PhiSubset) -> Result<Subspace> {
    let r = sl_rank(space)?;
    let n = r + 1;
    Subspace::new(
        "a^Phi",
        n,
        phi.indices().iter().map(|&i| h(n, i - 1)).collect(),
    )
}

fn phi_pos_roots(space: &SpaceDescriptor, phi: &PhiSubset) -> Result<Vec<Root>> {
    Ok(root_subsystem(space, phi)?.1)
}

/// `p_Phi = a + sum over Sigma_Phi^+ of p_lambda`.
pub fn p_phi(space: &SpaceDescriptor, phi: &PhiSubset) -> Result<Subspace> {
    let r = sl_rank(space)?;
    let n = r + 1;
    let mut b: Vec<MatrixElement> = cartan_subalgebra(r).basis().to_vec();
    b.extend(phi_pos_roots(space, phi)?.iter().map(|l| p_lambda(n, l)));
    Subspace::new("p_Phi", n, b)
}

/// `p_Phi^s = a^Phi + sum over Sigma_Phi^+ of p_lambda`.
pub fn p_phi_s(space: &SpaceDescriptor, phi: &PhiSubset) -> Result<Subspace> {
    let r = sl_rank(space)?;
    let n = r + 1;
    let mut b: Vec<MatrixElement> = a_upper_phi(space, phi)?.basis().to_vec();
    b.extend(phi_pos_roots(space, phi)?.iter().map(|l| p_lambda(n, l)));
    Subspace::new("p_Phi^s", n, b)
}

/// `n_Phi`: root spaces of `Sigma^+ \ Sigma_Phi^+`.
pub fn n_phi(space: &SpaceDescriptor, phi: &PhiSubset) -> Result<Subspace> {
    let r = sl_rank(space)?;
    let n = r + 1;
    let rs = space.root_system();
    let inner = phi_pos_roots(space, phi)?;
    let mut b = Vec::new();
    for l in rs.positive().iter().filter(|l| !inner.contains(l)) {
        let (i, j) = root_pair(l);
        b.push(e(n, i, j, Tag::N));
    }
    Subspace::new("n_Phi", n, b)
}

/// `q_Phi` as the block upper triangular traceless matrices for the block
/// structure of `Phi`. Built from the blocks alone, without root data.
pub fn q_phi_blocks(space: &SpaceDescriptor, phi: &PhiSubset) -> Result<Subspace> {
    let r = sl_rank(space)?;
    let n = r + 1;
    let blocks = block_partition(r, phi);
    let block_of: Vec<usize> = (0..n)
        .map(|i| blocks.iter().position(|b| b.contains(&i)).expect("covered"))
        .collect();
    let mut b: Vec<MatrixElement> = (0..r).map(|i| h(n, i)).collect();
    for i in 0..n {
        for j in 0..n {
            if i != j && block_of[i] <= block_of[j] {
                b.push(e(n, i, j, Tag::QPhi));
            }
        }
    }
    Subspace::new("q_Phi", n, b)
}

/// `E_{i,i+1}` spanning `g_alpha_i`, for each `alpha_i` in `Phi`.
pub fn default_ell_choice(space: &SpaceDescriptor, phi: &PhiSubset) -> Result<Vec<MatrixElement>> {
    let r = sl_rank(space)?;
    Ok(phi
        .indices()
        .iter()
        .map(|&i| e(r + 1, i - 1, i, Tag::N))
        .collect())
}

/// `s_{Phi,V} = a^Phi + V + sum over alpha in Phi of (g_alpha - l_alpha) + n_Phi`
/// with `V` spanned by the first `dim_v` basis vectors of `a_Phi`.
/// `ell_choice` defaults to [`default_ell_choice`].
pub fn build_s_phi_v(
    space: &SpaceDescriptor,
    phi: &PhiSubset,
    dim_v: usize,
    ell_choice: Option<&[MatrixElement]>,
) -> Result<Subspace> {
    check_orthogonal(space, phi)?;
    let max = space.rank() - phi.len();
    if dim_v > max {
        return Err(Error::DimVOutOfRange { dim_v, max });
    }
    let v: Vec<MatrixElement> = a_lower_phi(space, phi)?.basis()[..dim_v].to_vec();
    build_s_phi_v_with(space, phi, &v, ell_choice)
}

fn check_orthogonal(space: &SpaceDescriptor, phi: &PhiSubset) -> Result<()> {
    sl_rank(space)?;
    PhiSubset::new(space.rank(), phi.indices().iter().copied())?;
    if !is_orthogonal(&dynkin_diagram(&space.root_system()), phi) {
        return Err(Error::NotOrthogonal(phi.indices().to_vec()));
    }
    Ok(())
}

/// As [`build_s_phi_v`] with an explicit basis of `V ⊆ a_Phi`.
pub fn build_s_phi_v_with(
    space: &SpaceDescriptor,
    phi: &PhiSubset,
    v_basis: &[MatrixElement],
    ell_choice: Option<&[MatrixElement]>,
) -> Result<Subspace> {
    check_orthogonal(space, phi)?;
    let r = space.rank();
    let n = r + 1;
    let max = r - phi.len();
    if v_basis.len() > max {
        return Err(Error::DimVOutOfRange {
            dim_v: v_basis.len(),
            max,
        });
    }
    let a_phi = a_lower_phi(space, phi)?;
    for x in v_basis {
        if !a_phi.contains(x) {
            return Err(Error::TagViolation {
                tag: "a_Phi".into(),
                defect: a_phi.residual(x.matrix()),
            });
        }
    }

    let defaults = default_ell_choice(space, phi)?;
    let ells = ell_choice.unwrap_or(&defaults);
    if ells.len() != phi.len() {
        return Err(Error::InvalidLineChoice(ells.len()));
    }

    let mut basis: Vec<MatrixElement> = a_upper_phi(space, phi)?.basis().to_vec();
    basis.extend(v_basis.iter().cloned());
    for ((&alpha, ell), g_alpha) in phi.indices().iter().zip(ells).zip(&defaults) {
        // g_alpha is the line through E_{i,i+1}
        let line = Subspace::new("g_alpha", n, vec![g_alpha.clone()])?;
        if ell.size() != n || ell.max_abs() == 0.0 || !line.contains(ell) {
            return Err(Error::InvalidLineChoice(alpha));
        }
        let ell_space = Subspace::new("l_alpha", n, vec![ell.clone()])?;
        for g in line.basis() {
            if ell_space.residual(g.matrix()) > TAU_ALG {
                basis.push(g.clone());
            }
        }
    }
    basis.extend(n_phi(space, phi)?.basis().iter().cloned());
    let basis = basis
        .into_iter()
        .map(|b| MatrixElement::raw(b.into_matrix(), Some(Tag::SPhiV)))
        .collect();

    let s = Subspace::new(format!("s_{{{phi},{}}}", v_basis.len()), n, basis)?;
    let defect = s.bracket_closure_residual();
    if defect > TAU_ALG {
        return Err(Error::TagViolation {
            tag: "s_phi_v".into(),
            defect,
        });
    }
    Ok(s)
}
