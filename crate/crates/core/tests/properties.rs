//! Invariants checked on generated inputs.

use std::sync::LazyLock;

use liefoliate::foliate::{enumerate_foliations, foliation_codimension, orthogonal_subsets};
use liefoliate::parabolic::{horospherical, parabolic_data, PhiSubset};
use liefoliate::rootsys::{build_root_system, diagram_automorphisms, dynkin_diagram, reflect};
use liefoliate::slmodel::{
    self, bracket, build_s_phi_v, build_s_phi_v_with, default_ell_choice, is_lie_triple,
    iwasawa_group, killing_form, moebius, subgroup_element, MatrixElement, OrbitKind,
};
use liefoliate::spacecat::{root_multiplicity, space_dimension, Catalog};
use liefoliate::{Family, RootSystem, SpaceDescriptor};
use nalgebra::DMatrix;
use num_complex::Complex64;
use proptest::prelude::*;

static SYSTEMS: LazyLock<Vec<RootSystem>> = LazyLock::new(|| {
    let mut v = Vec::new();
    for f in Family::ALL {
        match f.fixed_rank() {
            Some(r) => v.push(build_root_system(f, r).unwrap()),
            None => {
                for r in f.rank_range().0..=6 {
                    v.push(build_root_system(f, r).unwrap());
                }
            }
        }
    }
    v
});

static SPACES: LazyLock<Vec<SpaceDescriptor>> = LazyLock::new(|| Catalog::global().instances(5, 3));

fn sl(r: usize) -> SpaceDescriptor {
    Catalog::global().instantiate("sl-real", r, None).unwrap()
}

fn traceless(seed: u64, n: usize) -> [MatrixElement; 3] {
    let mut rng = slmodel::rng(seed);
    [(); 3].map(|_| slmodel::random_traceless(&mut rng, n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reflections_are_involutive_and_close(sys in 0..SYSTEMS.len(), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>()) {
        let rs = &SYSTEMS[sys];
        let l = a.get(rs.roots());
        let x = b.get(rs.roots());
        let img = reflect(l, x).unwrap();
        prop_assert!(rs.contains(&img));
        prop_assert_eq!(reflect(l, &img).unwrap(), x.clone());
        prop_assert_eq!(reflect(l, l).unwrap(), l.neg());
    }

    #[test]
    fn expansions_have_uniform_sign(sys in 0..SYSTEMS.len(), a in any::<prop::sample::Index>()) {
        let rs = &SYSTEMS[sys];
        let l = a.get(rs.roots());
        let c = rs.simple_expansion(l).unwrap();
        let pos = c.iter().all(|&x| x >= 0);
        let neg = c.iter().all(|&x| x <= 0);
        prop_assert!(pos || neg);
        prop_assert_eq!(pos, rs.is_positive(l));
    }

    #[test]
    fn automorphisms_form_a_group(sys in 0..SYSTEMS.len()) {
        let autos = diagram_automorphisms(&dynkin_diagram(&SYSTEMS[sys]));
        let r = SYSTEMS[sys].rank();
        prop_assert_eq!(&autos[0], &(1..=r).collect::<Vec<_>>());
        for p in &autos {
            for q in &autos {
                let pq: Vec<usize> = (0..r).map(|i| p[q[i] - 1]).collect();
                prop_assert!(autos.contains(&pq));
            }
            let mut inv = vec![0; r];
            for (i, &x) in p.iter().enumerate() {
                inv[x - 1] = i + 1;
            }
            prop_assert!(autos.contains(&inv));
        }
    }

    #[test]
    fn multiplicities_are_weyl_invariant(sp in 0..SPACES.len(), a in any::<prop::sample::Index>(), k in any::<prop::sample::Index>()) {
        let d = &SPACES[sp];
        let rs = d.root_system();
        let l = a.get(rs.roots());
        let alpha = k.get(rs.simple());
        let m = root_multiplicity(d, l).unwrap();
        prop_assert!(m >= 1);
        prop_assert_eq!(root_multiplicity(d, &reflect(alpha, l).unwrap()).unwrap(), m);
        prop_assert_eq!(root_multiplicity(d, &l.neg()).unwrap(), m);
    }

    #[test]
    fn horospherical_conservation(sp in 0..SPACES.len(), mask in any::<u32>()) {
        let d = &SPACES[sp];
        let phi = PhiSubset::new(d.rank(), (1..=d.rank()).filter(|i| mask >> (i - 1) & 1 == 1)).unwrap();
        let h = horospherical(d, &phi).unwrap();
        prop_assert_eq!(h.dim_fs + h.dim_euclidean + h.dim_n, space_dimension(d));
        let p = parabolic_data(d, &phi).unwrap();
        prop_assert_eq!(p.dim_p_phi, p.dim_p_phi_s + p.dim_a_phi);
        prop_assert_eq!(p.dim_a_phi + p.dim_a_upper_phi, d.rank());
        if let (Some(l), Some(m), Some(q)) = (p.dim_l_phi, p.dim_m_phi, p.dim_q_phi) {
            prop_assert_eq!(q, l + p.dim_n_phi);
            prop_assert_eq!(l, m + p.dim_a_phi);
        }
    }

    #[test]
    fn parabolics_grow_with_phi(sp in 0..SPACES.len(), mask in any::<u32>(), extra in any::<u32>()) {
        let d = &SPACES[sp];
        let r = d.rank();
        let small = PhiSubset::new(r, (1..=r).filter(|i| mask >> (i - 1) & 1 == 1)).unwrap();
        let big = PhiSubset::new(r, (1..=r).filter(|i| (mask | extra) >> (i - 1) & 1 == 1)).unwrap();
        let (a, b) = (parabolic_data(d, &small).unwrap(), parabolic_data(d, &big).unwrap());
        prop_assert!(b.dim_n_phi <= a.dim_n_phi);
        prop_assert!(b.dim_p_phi_s >= a.dim_p_phi_s);
        prop_assert!(b.sigma_phi.len() >= a.sigma_phi.len());
    }

    #[test]
    fn foliation_classes_are_consistent(sp in 0..SPACES.len()) {
        let d = &SPACES[sp];
        let dd = dynkin_diagram(&d.root_system());
        let orth = orthogonal_subsets(&dd);
        let classes = enumerate_foliations(d, true).unwrap();
        let dim = space_dimension(d);
        for c in &classes {
            prop_assert_eq!(c.codim, foliation_codimension(c));
            prop_assert_eq!(c.leaf_dim + c.codim, dim);
            prop_assert!(c.orbit.contains(&c.phi));
            prop_assert!(c.orbit.iter().all(|p| orth.contains(p)));
            prop_assert_eq!(&c.orbit[0], &c.phi);
        }
        let covered: usize = classes.iter().filter(|c| c.dim_v == 0).map(|c| c.orbit.len()).sum();
        prop_assert_eq!(covered, orth.len());
        prop_assert_eq!(classes.iter().filter(|c| c.trivial).count(), 1);
        let keys: Vec<_> = classes.iter().map(|c| (c.rank_phi(), c.phi.clone(), c.dim_v)).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        prop_assert_eq!(keys, sorted);
    }

    #[test]
    fn jacobi_identity(seed in any::<u64>(), n in 2usize..=6) {
        let [x, y, z] = traceless(seed, n);
        let b = |a: &MatrixElement, c: &MatrixElement| bracket(a, c).unwrap();
        let s = b(&x, &b(&y, &z)).matrix() + b(&y, &b(&z, &x)).matrix() + b(&z, &b(&x, &y)).matrix();
        prop_assert!(s.amax() < 1e-12, "{}", s.amax());
    }

    #[test]
    fn killing_is_invariant_and_closed(seed in any::<u64>(), n in 2usize..=5) {
        let [x, y, z] = traceless(seed, n);
        let b = |a: &MatrixElement, c: &MatrixElement| killing_form(a, c).unwrap();
        let lhs = b(&bracket(&z, &x).unwrap(), &y) + b(&x, &bracket(&z, &y).unwrap());
        let scale = 1.0 + x.norm() * y.norm() * z.norm();
        prop_assert!(lhs.abs() < 1e-12 * scale * (n * n) as f64, "{lhs}");
        let closed = slmodel::killing_form_closed(&x, &y).unwrap();
        prop_assert!((b(&x, &y) - closed).abs() < 1e-9);
        prop_assert!((b(&x, &y) - b(&y, &x)).abs() < 1e-9);
    }

    #[test]
    fn cartan_split_parts(seed in any::<u64>(), n in 2usize..=6) {
        let [x, ..] = traceless(seed, n);
        let (k, p) = slmodel::cartan_split(&x).unwrap();
        prop_assert!((k.matrix() + k.matrix().transpose()).amax() == 0.0);
        prop_assert!((p.matrix() - p.matrix().transpose()).amax() == 0.0);
        prop_assert!((k.add(&p).unwrap().matrix() - x.matrix()).amax() < 1e-15);
        // B is negative on k and positive on p
        if k.norm() > 1e-6 {
            prop_assert!(killing_form(&k, &k).unwrap() < 0.0);
        }
        if p.norm() > 1e-6 {
            prop_assert!(killing_form(&p, &p).unwrap() > 0.0);
        }
    }

    #[test]
    fn iwasawa_round_trip(seed in any::<u64>(), n in 2usize..=7) {
        let g = slmodel::random_sl(&mut slmodel::rng(seed), n);
        let f = iwasawa_group(&g).unwrap();
        prop_assert!(f.reconstruction_error(&g) < 1e-10);
        prop_assert!(f.shape_defect() < 1e-10);
        let again = iwasawa_group(&f.product()).unwrap();
        prop_assert!((&again.k - &f.k).amax() < 1e-10);
        prop_assert!((&again.a - &f.a).amax() < 1e-10);
        prop_assert!((&again.n - &f.n).amax() < 1e-10);
    }

    #[test]
    fn s_phi_v_is_a_subalgebra(r in 1usize..=5, pick in any::<prop::sample::Index>(), v in any::<prop::sample::Index>(), c in 0.25f64..4.0) {
        let d = sl(r);
        let orth = orthogonal_subsets(&dynkin_diagram(&d.root_system()));
        let phi = pick.get(&orth);
        let dim_v = v.index(r - phi.len() + 1);
        let s = build_s_phi_v(&d, phi, dim_v, None).unwrap();
        prop_assert!(s.bracket_closure_residual() < 1e-12);
        let fc = liefoliate::foliate::foliation_class(&d, phi, dim_v).unwrap();
        prop_assert_eq!(s.dim(), space_dimension(&d) - fc.codim);
        let scaled: Vec<MatrixElement> = default_ell_choice(&d, phi).unwrap().iter().map(|e| e.scale(-c)).collect();
        let t = build_s_phi_v(&d, phi, dim_v, Some(&scaled)).unwrap();
        prop_assert_eq!(t.dim(), s.dim());
        prop_assert!(t.bracket_closure_residual() < 1e-12);
        let a_phi = slmodel::a_lower_phi(&d, phi).unwrap();
        let v_basis: Vec<MatrixElement> = a_phi.basis()[a_phi.dim() - dim_v..].to_vec();
        let u = build_s_phi_v_with(&d, phi, &v_basis, None).unwrap();
        prop_assert_eq!(u.dim(), s.dim());
        prop_assert!(u.bracket_closure_residual() < 1e-12);
    }

    #[test]
    fn lie_triples_from_phi(r in 1usize..=5, mask in any::<u32>()) {
        let d = sl(r);
        let phi = PhiSubset::new(r, (1..=r).filter(|i| mask >> (i - 1) & 1 == 1)).unwrap();
        for s in [slmodel::p_phi(&d, &phi), slmodel::p_phi_s(&d, &phi), slmodel::a_lower_phi(&d, &phi)] {
            let s = s.unwrap();
            if s.dim() > 0 {
                let rep = is_lie_triple(&s).unwrap();
                prop_assert!(rep.holds && rep.residual < 1e-12);
            }
        }
    }

    #[test]
    fn moebius_is_an_action(s in -3.0f64..3.0, t in -3.0f64..3.0, x in -5.0f64..5.0, y in 0.1f64..5.0) {
        let z = Complex64::new(x, y);
        let g = subgroup_element(OrbitKind::K, s) * subgroup_element(OrbitKind::A, t);
        let h = subgroup_element(OrbitKind::N, x);
        let lhs = moebius(&(g * h), z).unwrap();
        let rhs = moebius(&g, moebius(&h, z).unwrap()).unwrap();
        prop_assert!((lhs - rhs).norm() < 1e-9 * (1.0 + lhs.norm()));
        prop_assert!(lhs.im > 0.0);
        let n = moebius(&subgroup_element(OrbitKind::N, s), z).unwrap();
        prop_assert!((n.im - z.im).abs() < 1e-12);
        let k = moebius(&subgroup_element(OrbitKind::K, s), Complex64::i()).unwrap();
        prop_assert!((k - Complex64::i()).norm() < 1e-12);
    }

    #[test]
    fn phi_subsets_print_and_parse(r in 1usize..=8, mask in any::<u32>()) {
        let phi = PhiSubset::new(r, (1..=r).filter(|i| mask >> (i - 1) & 1 == 1)).unwrap();
        prop_assert_eq!(PhiSubset::parse(r, &phi.to_string()).unwrap(), phi.clone());
        let json = serde_json::to_string(&phi).unwrap();
        prop_assert_eq!(serde_json::from_str::<PhiSubset>(&json).unwrap(), phi);
    }

    #[test]
    fn records_survive_json(sp in 0..SPACES.len(), mask in any::<u32>()) {
        let d = &SPACES[sp];
        let json = serde_json::to_string(d).unwrap();
        prop_assert_eq!(&serde_json::from_str::<SpaceDescriptor>(&json).unwrap(), d);
        let phi = PhiSubset::new(d.rank(), (1..=d.rank()).filter(|i| mask >> (i - 1) & 1 == 1)).unwrap();
        let p = parabolic_data(d, &phi).unwrap();
        let json = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<liefoliate::parabolic::ParabolicData>(&json).unwrap(), p);
        let rs = d.root_system();
        let json = serde_json::to_string(&rs).unwrap();
        prop_assert_eq!(serde_json::from_str::<RootSystem>(&json).unwrap(), rs);
    }
}

fn unit(n: usize, i: usize, j: usize) -> DMatrix<f64> {
    DMatrix::from_fn(n, n, |a, b| if (a, b) == (i, j) { 1.0 } else { 0.0 })
}

#[test]
fn brackets_respect_root_grading() {
    for n in 2..=6 {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .collect();
        for &(i, j) in &pairs {
            for &(k, l) in &pairs {
                let x = MatrixElement::new(unit(n, i, j)).unwrap();
                let y = MatrixElement::new(unit(n, k, l)).unwrap();
                let got = bracket(&x, &y).unwrap().into_matrix();
                // e_i - e_j + e_k - e_l is a root only when j = k or l = i
                let mut want = DMatrix::zeros(n, n);
                if j == k {
                    want += unit(n, i, l);
                }
                if l == i {
                    want -= unit(n, k, j);
                }
                assert_eq!(got, want, "[E{i}{j}, E{k}{l}]");
                let lambda: Vec<f64> = (0..n)
                    .map(|c| (c == i) as i32 as f64 - (c == j) as i32 as f64)
                    .collect();
                let mu: Vec<f64> = (0..n)
                    .map(|c| (c == k) as i32 as f64 - (c == l) as i32 as f64)
                    .collect();
                let h = DMatrix::from_fn(n, n, |a, b| {
                    if a == b {
                        (a as f64 + 1.0).powi(2)
                    } else {
                        0.0
                    }
                });
                let h = &h - DMatrix::identity(n, n) * (h.trace() / n as f64);
                let weight: f64 = (0..n).map(|c| h[(c, c)] * (lambda[c] + mu[c])).sum();
                let ad = &h * &got - &got * &h;
                assert!((ad - &got * weight).amax() < 1e-12);
            }
        }
    }
}

#[test]
fn derived_algebra_of_an_is_n() {
    for r in 1..=6 {
        let n = r + 1;
        let mut an: Vec<MatrixElement> = (0..r)
            .map(|i| {
                let mut d = vec![0.0; n];
                d[i] = 1.0;
                d[i + 1] = -1.0;
                MatrixElement::diagonal(&d)
            })
            .collect();
        for i in 0..n {
            for j in i + 1..n {
                an.push(MatrixElement::new(unit(n, i, j)).unwrap());
            }
        }
        let mut cols = Vec::new();
        for x in &an {
            for y in &an {
                let b = bracket(x, y).unwrap().into_matrix();
                for a in 0..n {
                    for c in 0..=a {
                        assert_eq!(b[(a, c)], 0.0);
                    }
                }
                cols.push(b);
            }
        }
        let m = DMatrix::from_fn(n * n, cols.len(), |i, j| cols[j][i]);
        assert_eq!(m.rank(1e-9), n * (n - 1) / 2, "r = {r}");
    }
}
