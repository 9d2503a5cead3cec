//! Hyperpolar homogeneous foliations `F_{Phi,V}`: orthogonal subsets of the
//! simple roots, the hyperbolic spaces `F_alpha H^{n_alpha}` they determine,
//! and the enumeration of representatives keyed by (orbit of `Phi`, `dim V`).

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::parabolic::{parabolic_data, PhiSubset};
use crate::rootsys::{diagram_automorphisms, dynkin_diagram, DynkinDiagram};
use crate::spacecat::{space_dimension, SpaceDescriptor};

/// Label attached to enumerations: the classes are normal forms, and
/// pairwise non-congruence is not checked.
pub const CLASS_LABEL: &str = "representatives, uniqueness unverified";

/// All independent vertex sets of the diagram, including the empty set,
/// in lexicographic order of their index lists.
pub fn orthogonal_subsets(dd: &DynkinDiagram) -> Vec<PhiSubset> {
    let r = dd.rank;
    let mut out = Vec::new();
    let mut cur = Vec::new();
    extend_independent(dd, r, 1, &mut cur, &mut out);
    out.sort();
    out
}

fn extend_independent(
    dd: &DynkinDiagram,
    r: usize,
    next: usize,
    cur: &mut Vec<usize>,
    out: &mut Vec<PhiSubset>,
) {
    out.push(PhiSubset::new(r, cur.iter().copied()).expect("indices in range"));
    for v in next..=r {
        if cur.iter().all(|&u| !dd.adjacent(u, v)) {
            cur.push(v);
            extend_independent(dd, r, v + 1, cur, out);
            cur.pop();
        }
    }
}

pub fn is_orthogonal(dd: &DynkinDiagram, phi: &PhiSubset) -> bool {
    let ix = phi.indices();
    ix.iter()
        .enumerate()
        .all(|(k, &a)| ix[k + 1..].iter().all(|&b| !dd.adjacent(a, b)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum NormedAlgebra {
    R,
    C,
    H,
    O,
}

impl NormedAlgebra {
    pub fn real_dim(self) -> usize {
        match self {
            NormedAlgebra::R => 1,
            NormedAlgebra::C => 2,
            NormedAlgebra::H => 4,
            NormedAlgebra::O => 8,
        }
    }
}

impl std::fmt::Display for NormedAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            NormedAlgebra::R => "R",
            NormedAlgebra::C => "C",
            NormedAlgebra::H => "H",
            NormedAlgebra::O => "O",
        };
        f.write_str(s)
    }
}

/// The totally geodesic hyperbolic space `F_alpha H^n` through `o`
/// determined by a simple root.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HyperbolicFactor {
    pub alpha_index: usize,
    pub algebra: NormedAlgebra,
    pub n: usize,
    pub real_dim: usize,
}

impl std::fmt::Display for HyperbolicFactor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}H^{}", self.algebra, self.n)
    }
}

pub fn hyperbolic_factor(space: &SpaceDescriptor, alpha_index: usize) -> Result<HyperbolicFactor> {
    let r = space.rank();
    if alpha_index == 0 || alpha_index > r {
        return Err(Error::InvalidRootIndex {
            index: alpha_index,
            rank: r,
        });
    }
    let sm = space.simple_mults()[alpha_index - 1];
    let m = sm.single() as usize;
    let (algebra, n) = match sm.double() {
        None => (NormedAlgebra::R, m + 1),
        Some(1) => (NormedAlgebra::C, m / 2 + 1),
        Some(3) => (NormedAlgebra::H, m / 4 + 1),
        Some(7) => (NormedAlgebra::O, 2),
        Some(d) => {
            return Err(Error::InvalidMultiplicities(format!(
                "m_2alpha = {d} does not determine a hyperbolic space"
            )))
        }
    };
    Ok(HyperbolicFactor {
        alpha_index,
        algebra,
        n,
        real_dim: 1 + m + sm.double().unwrap_or(0) as usize,
    })
}

/// A representative `F_{Phi,V}` of a congruence class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FoliationClass {
    pub space: String,
    pub rank: usize,
    pub phi: PhiSubset,
    /// All orthogonal subsets equivalent to `phi` under diagram automorphisms.
    pub orbit: Vec<PhiSubset>,
    pub dim_v: usize,
    pub leaf_dim: usize,
    pub codim: usize,
    pub trivial: bool,
    pub factors: Vec<HyperbolicFactor>,
    pub dim_n_phi: usize,
}

impl FoliationClass {
    pub fn rank_phi(&self) -> usize {
        self.phi.len()
    }
}

/// `r_Phi + (r - r_Phi - dim V)`
pub fn foliation_codimension(fc: &FoliationClass) -> usize {
    fc.rank_phi() + (fc.rank - fc.rank_phi() - fc.dim_v)
}

/// Orbits of the orthogonal subsets under diagram automorphisms, each
/// sorted, with the lexicographically least member first.
pub fn phi_orbits(dd: &DynkinDiagram) -> Vec<Vec<PhiSubset>> {
    let autos = diagram_automorphisms(dd);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for phi in orthogonal_subsets(dd) {
        if seen.contains(&phi) {
            continue;
        }
        let orbit: BTreeSet<PhiSubset> = autos.iter().map(|p| phi.permuted(p)).collect();
        seen.extend(orbit.iter().cloned());
        out.push(orbit.into_iter().collect());
    }
    out
}

/// Builds the class with the given `Phi` and `dim V`.
pub fn foliation_class(
    space: &SpaceDescriptor,
    phi: &PhiSubset,
    dim_v: usize,
) -> Result<FoliationClass> {
    let dd = dynkin_diagram(&space.root_system());
    if !is_orthogonal(&dd, phi) {
        return Err(Error::NotOrthogonal(phi.indices().to_vec()));
    }
    let r = space.rank();
    let max = r - phi.len();
    if dim_v > max {
        return Err(Error::DimVOutOfRange { dim_v, max });
    }
    let orbit: BTreeSet<PhiSubset> = diagram_automorphisms(&dd)
        .iter()
        .map(|p| phi.permuted(p))
        .collect();
    let factors = phi
        .indices()
        .iter()
        .map(|&i| hyperbolic_factor(space, i))
        .collect::<Result<Vec<_>>>()?;
    let dim_n_phi = parabolic_data(space, phi)?.dim_n_phi;
    let leaf_dim = factors.iter().map(|f| f.real_dim - 1).sum::<usize>() + dim_v + dim_n_phi;
    let codim = space_dimension(space) - leaf_dim;
    Ok(FoliationClass {
        space: space.ascii().to_string(),
        rank: r,
        phi: phi.clone(),
        orbit: orbit.into_iter().collect(),
        dim_v,
        leaf_dim,
        codim,
        trivial: codim == 0,
        factors,
        dim_n_phi,
    })
}

/// One class per (orbit of orthogonal `Phi`, `dim V`), ordered by
/// `(r_Phi, Phi, dim V)`. The single-leaf class is dropped unless
/// `include_trivial` is set.
pub fn enumerate_foliations(
    space: &SpaceDescriptor,
    include_trivial: bool,
) -> Result<Vec<FoliationClass>> {
    let dd = dynkin_diagram(&space.root_system());
    let mut out = Vec::new();
    for orbit in phi_orbits(&dd) {
        let phi = &orbit[0];
        for dim_v in 0..=(space.rank() - phi.len()) {
            let fc = foliation_class(space, phi, dim_v)?;
            if include_trivial || !fc.trivial {
                out.push(fc);
            }
        }
    }
    out.sort_by(|a, b| (a.rank_phi(), &a.phi, a.dim_v).cmp(&(b.rank_phi(), &b.phi, b.dim_v)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{build_root_system, Family};
    use crate::spacecat::catalog_lookup;

    fn diagram(f: Family, r: usize) -> DynkinDiagram {
        dynkin_diagram(&build_root_system(f, r).unwrap())
    }

    #[test]
    fn independent_sets_of_paths() {
        assert_eq!(orthogonal_subsets(&diagram(Family::A, 1)).len(), 2);
        assert_eq!(orthogonal_subsets(&diagram(Family::A, 4)).len(), 8);
        // D4: the centre or any subset of the three leaves
        assert_eq!(orthogonal_subsets(&diagram(Family::D, 4)).len(), 9);
    }

    #[test]
    fn hyperbolic_factors() {
        let sl5 = catalog_lookup("SL5").unwrap();
        for i in 1..=4 {
            let h = hyperbolic_factor(&sl5, i).unwrap();
            assert_eq!((h.algebra, h.n, h.real_dim), (NormedAlgebra::R, 2, 2));
        }
        let f4 = catalog_lookup("F4(-20)").unwrap();
        let h = hyperbolic_factor(&f4, 1).unwrap();
        assert_eq!((h.algebra, h.n, h.real_dim), (NormedAlgebra::O, 2, 16));
        let su = catalog_lookup("SU(5,2)").unwrap();
        let h = hyperbolic_factor(&su, 2).unwrap();
        assert_eq!((h.algebra, h.n, h.real_dim), (NormedAlgebra::C, 4, 8));
        let sp = catalog_lookup("Sp(3,1)").unwrap();
        let h = hyperbolic_factor(&sp, 1).unwrap();
        assert_eq!((h.algebra, h.n), (NormedAlgebra::H, 3));
        assert!(hyperbolic_factor(&sp, 2).is_err());
    }

    #[test]
    fn sl5_enumeration() {
        let sl5 = catalog_lookup("SL5").unwrap();
        let dd = dynkin_diagram(&sl5.root_system());
        let reps: Vec<Vec<usize>> = phi_orbits(&dd)
            .iter()
            .map(|o| o[0].indices().to_vec())
            .collect();
        assert_eq!(reps, vec![vec![], vec![1], vec![1, 3], vec![1, 4], vec![2]]);
        assert_eq!(enumerate_foliations(&sl5, true).unwrap().len(), 19);
        let classes = enumerate_foliations(&sl5, false).unwrap();
        assert_eq!(classes.len(), 18);
        let codim_one: Vec<(Vec<usize>, usize)> = classes
            .iter()
            .filter(|c| c.codim == 1)
            .map(|c| (c.phi.indices().to_vec(), c.dim_v))
            .collect();
        assert_eq!(codim_one, vec![(vec![], 3), (vec![1], 3), (vec![2], 3)]);
    }

    #[test]
    fn codimension_formula() {
        let sl5 = catalog_lookup("SL5").unwrap();
        let fc = foliation_class(&sl5, &PhiSubset::new(4, [1, 3]).unwrap(), 1).unwrap();
        assert_eq!(fc.leaf_dim, 11);
        assert_eq!(foliation_codimension(&fc), 3);
        assert_eq!(fc.codim, 3);
        let fc = foliation_class(&sl5, &PhiSubset::empty(), 0).unwrap();
        assert_eq!(foliation_codimension(&fc), 4);
        assert!(foliation_class(&sl5, &PhiSubset::new(4, [1, 2]).unwrap(), 0).is_err());
        assert!(foliation_class(&sl5, &PhiSubset::new(4, [1]).unwrap(), 4).is_err());
    }

    #[test]
    fn rank_one_has_two_classes() {
        for name in ["SOo(5,1)", "SU(4,1)", "Sp(3,1)", "F4(-20)"] {
            let d = catalog_lookup(name).unwrap();
            let cs = enumerate_foliations(&d, false).unwrap();
            assert_eq!(cs.len(), 2, "{name}");
            assert!(cs.iter().all(|c| c.codim == 1));
        }
    }
}
