//! Parabolic subalgebras `q_Phi = m_Phi + a_Phi + n_Phi` attached to subsets
//! of simple roots, and the horospherical decomposition
//! `M = F_Phi^s x E^(r - r_Phi) x N_Phi`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact;
use crate::rootsys::{dynkin_diagram, Family, Root, RootSystem};
use crate::spacecat::{multiplicity_sum, space_dimension, SimpleMultiplicity, SpaceDescriptor};

/// A subset of the simple roots, by 1-based index.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PhiSubset(Vec<usize>);

impl PhiSubset {
    /// Sorts and deduplicates `indices` and checks them against `rank`.
    pub fn new(rank: usize, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut v: Vec<usize> = indices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        if let Some(&bad) = v.iter().find(|&&i| i == 0 || i > rank) {
            return Err(Error::InvalidRootIndex { index: bad, rank });
        }
        Ok(PhiSubset(v))
    }

    pub fn empty() -> Self {
        PhiSubset(Vec::new())
    }

    pub fn full(rank: usize) -> Self {
        PhiSubset((1..=rank).collect())
    }

    /// Parses `"1,3"`; the empty string and `"-"` give the empty set.
    pub fn parse(rank: usize, s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "-" || s == "{}" {
            return Ok(PhiSubset::empty());
        }
        let s = s.trim_start_matches('{').trim_end_matches('}');
        let mut out = Vec::new();
        for part in s.split(',') {
            let part = part.trim();
            let idx = part
                .parse::<usize>()
                .map_err(|_| Error::InvalidRootIndex { index: 0, rank })?;
            out.push(idx);
        }
        PhiSubset::new(rank, out)
    }

    /// Every subset of `{1..rank}`, in lexicographic order of index lists.
    pub fn all(rank: usize) -> Vec<PhiSubset> {
        let mut out: Vec<PhiSubset> = (0u32..(1 << rank))
            .map(|mask| PhiSubset((1..=rank).filter(|i| mask >> (i - 1) & 1 == 1).collect()))
            .collect();
        out.sort();
        out
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    /// Image under a diagram automorphism given as a list of images.
    pub fn permuted(&self, perm: &[usize]) -> PhiSubset {
        let mut v: Vec<usize> = self.0.iter().map(|&i| perm[i - 1]).collect();
        v.sort_unstable();
        PhiSubset(v)
    }
}

impl std::fmt::Display for PhiSubset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

fn check_phi(space: &SpaceDescriptor, phi: &PhiSubset) -> Result<()> {
    PhiSubset::new(space.rank(), phi.indices().iter().copied()).map(|_| ())
}

fn subsystem_of(rs: &RootSystem, phi: &PhiSubset) -> (Vec<Root>, Vec<Root>) {
    if phi.is_empty() {
        return (Vec::new(), Vec::new());
    }
    let cols: Vec<&[i32]> = phi
        .indices()
        .iter()
        .map(|&i| rs.simple()[i - 1].scaled())
        .collect();
    let all: Vec<Root> = rs
        .roots()
        .iter()
        .filter(|l| exact::solve_in_span(&cols, l.scaled()).is_some())
        .cloned()
        .collect();
    let pos = rs
        .positive()
        .iter()
        .filter(|l| all.binary_search(l).is_ok())
        .cloned()
        .collect();
    (all, pos)
}

/// `(Sigma_Phi, Sigma_Phi^+)`: roots in the span of `Phi`, and the positive ones.
pub fn root_subsystem(space: &SpaceDescriptor, phi: &PhiSubset) -> Result<(Vec<Root>, Vec<Root>)> {
    check_phi(space, phi)?;
    Ok(subsystem_of(&space.root_system(), phi))
}

/// Dimension data of `q_Phi`. Entries depending on `dim k_0` are `None`
/// when the catalog has no value for it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParabolicData {
    pub space: String,
    pub phi: PhiSubset,
    pub rank: usize,
    pub rank_phi: usize,
    pub sigma_phi: Vec<Root>,
    pub sigma_phi_pos: Vec<Root>,
    pub dim_a_phi: usize,
    /// `dim a^Phi = r_Phi`
    pub dim_a_upper_phi: usize,
    pub dim_n_phi: usize,
    pub dim_p_phi: usize,
    pub dim_p_phi_s: usize,
    pub dim_l_phi: Option<usize>,
    pub dim_m_phi: Option<usize>,
    pub dim_q_phi: Option<usize>,
    pub dim_k_phi: Option<usize>,
    pub dim_g_phi: Option<usize>,
    pub dim_z_phi: Option<usize>,
}

pub fn parabolic_data(space: &SpaceDescriptor, phi: &PhiSubset) -> Result<ParabolicData> {
    check_phi(space, phi)?;
    let rs = space.root_system();
    let mf = space.multiplicity_function();
    let (sigma_phi, sigma_phi_pos) = subsystem_of(&rs, phi);
    let r = space.rank();
    let r_phi = phi.len();

    let n_roots = rs.positive().iter().filter(|l| !sigma_phi_pos.contains(l));
    let dim_n_phi = multiplicity_sum(&mf, n_roots);
    let sum_phi = multiplicity_sum(&mf, &sigma_phi);
    let sum_phi_pos = multiplicity_sum(&mf, &sigma_phi_pos);

    let k0 = space.dim_k0().map(|d| d as usize);
    let dim_l_phi = k0.map(|k0| k0 + r + sum_phi);
    let dim_m_phi = dim_l_phi.map(|l| l - (r - r_phi));
    // z_Phi sits inside k_0, so it vanishes together with k_0; otherwise
    // neither z_Phi nor g_Phi can be read off the root data.
    let split = k0 == Some(0);

    Ok(ParabolicData {
        space: space.ascii().to_string(),
        phi: phi.clone(),
        rank: r,
        rank_phi: r_phi,
        dim_a_phi: r - r_phi,
        dim_a_upper_phi: r_phi,
        dim_n_phi,
        dim_p_phi: r + sum_phi_pos,
        dim_p_phi_s: r_phi + sum_phi_pos,
        dim_l_phi,
        dim_m_phi,
        dim_q_phi: dim_l_phi.map(|l| l + dim_n_phi),
        dim_k_phi: k0.map(|k0| k0 + sum_phi_pos),
        dim_g_phi: split.then(|| r_phi + sum_phi),
        dim_z_phi: split.then_some(0),
        sigma_phi,
        sigma_phi_pos,
    })
}

/// A factor of `F_Phi^s`, one per connected component of `Phi`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryFactor {
    pub component_indices: Vec<usize>,
    pub rank: usize,
    pub name: String,
    pub dim: usize,
}

pub fn boundary_components(
    space: &SpaceDescriptor,
    phi: &PhiSubset,
) -> Result<Vec<BoundaryFactor>> {
    check_phi(space, phi)?;
    let rs = space.root_system();
    let mf = space.multiplicity_function();
    let dd = dynkin_diagram(&rs);
    let mut out = Vec::new();
    for comp in dd.components(phi.indices()) {
        let sub = PhiSubset(comp.clone());
        let (_, pos) = subsystem_of(&rs, &sub);
        let s = comp.len();
        let dim = s + multiplicity_sum(&mf, &pos);
        let a_type_split = comp
            .iter()
            .all(|&i| space.simple_mults()[i - 1] == SimpleMultiplicity::Single(1))
            && is_a_type(&rs, &comp, &pos);
        let name = if a_type_split {
            format!("SL_{{{}}}(R)/SO_{{{}}}", s + 1, s + 1)
        } else {
            format!("unnamed rank-{s} factor")
        };
        out.push(BoundaryFactor {
            component_indices: comp,
            rank: s,
            name,
            dim,
        });
    }
    Ok(out)
}

/// A connected sub-diagram is of type `A_s` exactly when its positive
/// subsystem has `s(s+1)/2` roots, all of one length.
fn is_a_type(rs: &RootSystem, comp: &[usize], pos: &[Root]) -> bool {
    let s = comp.len();
    if rs.family() == Family::A {
        return true;
    }
    let len = rs.simple()[comp[0] - 1].scaled_norm2();
    pos.len() == s * (s + 1) / 2 && pos.iter().all(|l| l.scaled_norm2() == len)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HorosphericalData {
    pub space: String,
    pub phi: PhiSubset,
    pub factors: Vec<BoundaryFactor>,
    pub dim_fs: usize,
    pub dim_euclidean: usize,
    pub dim_n: usize,
    pub dim_m: usize,
}

pub fn horospherical(space: &SpaceDescriptor, phi: &PhiSubset) -> Result<HorosphericalData> {
    let factors = boundary_components(space, phi)?;
    let pd = parabolic_data(space, phi)?;
    Ok(HorosphericalData {
        space: space.ascii().to_string(),
        phi: phi.clone(),
        dim_fs: factors.iter().map(|f| f.dim).sum(),
        dim_euclidean: pd.dim_a_phi,
        dim_n: pd.dim_n_phi,
        dim_m: space_dimension(space),
        factors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spacecat::catalog_lookup;

    fn sl5() -> SpaceDescriptor {
        catalog_lookup("SL5").unwrap()
    }

    fn phi(ix: &[usize]) -> PhiSubset {
        PhiSubset::new(4, ix.iter().copied()).unwrap()
    }

    #[test]
    fn subsystems_in_a4() {
        let (all, pos) = root_subsystem(&sl5(), &phi(&[])).unwrap();
        assert!(all.is_empty() && pos.is_empty());
        let (all, pos) = root_subsystem(&sl5(), &phi(&[1, 3])).unwrap();
        assert_eq!((all.len(), pos.len()), (4, 2));
        let (all, _) = root_subsystem(&sl5(), &phi(&[1, 2])).unwrap();
        assert_eq!(all.len(), 6);
    }

    #[test]
    fn sl5_parabolic_dimensions() {
        let d = parabolic_data(&sl5(), &phi(&[])).unwrap();
        assert_eq!((d.dim_n_phi, d.dim_q_phi), (10, Some(14)));
        let d = parabolic_data(&sl5(), &phi(&[1, 3])).unwrap();
        assert_eq!(d.dim_n_phi, 8);
        assert_eq!(d.dim_l_phi, Some(8));
        assert_eq!(d.dim_m_phi, Some(6));
        assert_eq!(d.dim_q_phi, Some(16));
        let d = parabolic_data(&sl5(), &PhiSubset::full(4)).unwrap();
        assert_eq!(d.dim_q_phi, Some(24));
        assert_eq!(d.dim_a_phi, 0);
    }

    #[test]
    fn missing_k0_leaves_n_and_a() {
        let d = parabolic_data(&catalog_lookup("SU(4,2)").unwrap(), &PhiSubset::empty()).unwrap();
        assert_eq!(d.dim_l_phi, None);
        assert_eq!(d.dim_q_phi, None);
        assert_eq!(d.dim_a_phi, 2);
        // 2 * 2 (e_i +- e_j) + 2 * 4 (e_i) + 2 * 1 (2 e_i)
        assert_eq!(d.dim_n_phi, 14);
    }

    #[test]
    fn horospherical_examples() {
        let h = horospherical(&sl5(), &phi(&[])).unwrap();
        assert_eq!((h.dim_fs, h.dim_euclidean, h.dim_n), (0, 4, 10));
        let h = horospherical(&sl5(), &phi(&[1, 3])).unwrap();
        assert_eq!((h.dim_fs, h.dim_euclidean, h.dim_n), (4, 2, 8));
        assert!(h.factors.iter().all(|f| f.name == "SL_{2}(R)/SO_{2}"));
        let h = horospherical(&sl5(), &phi(&[1, 2])).unwrap();
        assert_eq!(h.factors.len(), 1);
        assert_eq!(h.factors[0].name, "SL_{3}(R)/SO_{3}");
        assert_eq!((h.dim_fs, h.dim_euclidean, h.dim_n), (5, 2, 7));
    }

    #[test]
    fn boundary_factor_names() {
        let f = boundary_components(&sl5(), &phi(&[1, 4])).unwrap();
        assert_eq!(f.iter().map(|f| f.dim).collect::<Vec<_>>(), vec![2, 2]);
        let f = boundary_components(&sl5(), &phi(&[2, 3])).unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(f[0].dim, 5);
        assert!(boundary_components(&sl5(), &PhiSubset::empty())
            .unwrap()
            .is_empty());

        // B_2 split: {1,2} is not of type A
        let so = catalog_lookup("SOo(3,2)").unwrap();
        let f = boundary_components(&so, &PhiSubset::full(2)).unwrap();
        assert_eq!(f[0].name, "unnamed rank-2 factor");
        assert_eq!(f[0].dim, 6);
        // a long-root A_1 inside B_2 is still SL_2(R)/SO_2
        let f = boundary_components(&so, &PhiSubset::new(2, [1]).unwrap()).unwrap();
        assert_eq!(f[0].name, "SL_{2}(R)/SO_{2}");
        // non-split multiplicities are never named
        let f = boundary_components(
            &catalog_lookup("SL3(C)").unwrap(),
            &PhiSubset::new(2, [1]).unwrap(),
        )
        .unwrap();
        assert_eq!(f[0].name, "unnamed rank-1 factor");
        assert_eq!(f[0].dim, 3);
    }

    #[test]
    fn phi_parsing() {
        assert_eq!(PhiSubset::parse(4, "3,1").unwrap(), phi(&[1, 3]));
        assert_eq!(PhiSubset::parse(4, "").unwrap(), PhiSubset::empty());
        assert!(PhiSubset::parse(4, "5").is_err());
        assert!(PhiSubset::parse(4, "0").is_err());
        assert!(PhiSubset::parse(4, "a").is_err());
        assert_eq!(PhiSubset::all(3).len(), 8);
        assert_eq!(phi(&[1, 3]).to_string(), "{1,3}");
    }
}
