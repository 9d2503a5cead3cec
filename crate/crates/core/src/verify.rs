//! Invariant suites run by `liefoliate verify`. Each check reports a name,
//! a pass flag and a one-line detail.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::foliate::{enumerate_foliations, orthogonal_subsets, phi_orbits};
use crate::parabolic::{horospherical, parabolic_data, PhiSubset};
use crate::rootsys::{
    build_root_system, diagram_automorphisms, dynkin_diagram, reflect, Arrow, Family, RootSystem,
};
use crate::slmodel::{self, tolerance, MatrixElement};
use crate::spacecat::{root_multiplicity, space_dimension, Catalog};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    All,
    Rootsys,
    Spacecat,
    Parabolic,
    Foliate,
    Slmodel,
}

impl Suite {
    pub const PARTS: [Suite; 5] = [
        Suite::Rootsys,
        Suite::Spacecat,
        Suite::Parabolic,
        Suite::Foliate,
        Suite::Slmodel,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Rootsys => "rootsys",
            Suite::Spacecat => "spacecat",
            Suite::Parabolic => "parabolic",
            Suite::Foliate => "foliate",
            Suite::Slmodel => "slmodel",
        }
    }
}

impl std::str::FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        std::iter::once(Suite::All)
            .chain(Suite::PARTS)
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub suite: String,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

struct Recorder {
    suite: Suite,
    out: Vec<CheckResult>,
}

impl Recorder {
    fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.out.push(CheckResult {
            suite: self.suite.name().to_string(),
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }
}

/// Runs a suite; `All` runs every part in order.
pub fn run_suite(suite: Suite, seed: u64) -> Vec<CheckResult> {
    if suite == Suite::All {
        return Suite::PARTS
            .iter()
            .flat_map(|&s| run_suite(s, seed))
            .collect();
    }
    let mut rec = Recorder {
        suite,
        out: Vec::new(),
    };
    match suite {
        Suite::Rootsys => rootsys_checks(&mut rec),
        Suite::Spacecat => spacecat_checks(&mut rec),
        Suite::Parabolic => parabolic_checks(&mut rec),
        Suite::Foliate => foliate_checks(&mut rec),
        Suite::Slmodel => slmodel_checks(&mut rec, seed),
        Suite::All => unreachable!(),
    }
    rec.out
}

pub(crate) fn constructible_systems(max_classical: usize) -> Vec<RootSystem> {
    let mut out = Vec::new();
    for f in Family::ALL {
        match f.fixed_rank() {
            Some(r) => out.push(build_root_system(f, r).expect("fixed rank")),
            None => {
                for r in 1..=max_classical {
                    if let Ok(rs) = build_root_system(f, r) {
                        out.push(rs);
                    }
                }
            }
        }
    }
    out
}

fn rootsys_checks(rec: &mut Recorder) {
    let expected = |f: Family, r: usize| -> usize {
        match f {
            Family::A => r * (r + 1),
            Family::B | Family::C => 2 * r * r,
            Family::D => 2 * r * (r - 1),
            Family::BC => 2 * r * r + 2 * r,
            Family::E6 => 72,
            Family::E7 => 126,
            Family::E8 => 240,
            Family::F4 => 48,
            Family::G2 => 12,
        }
    };
    for rs in constructible_systems(8) {
        let (f, r) = (rs.family(), rs.rank());
        let label = format!("{f}{r}");
        let count_ok =
            rs.roots().len() == expected(f, r) && rs.positive().len() * 2 == rs.roots().len();
        rec.check(
            format!("root count {label}"),
            count_ok,
            format!("|Sigma| = {}", rs.roots().len()),
        );

        let closed = rs.roots().iter().all(|l| {
            rs.roots()
                .iter()
                .all(|m| reflect(l, m).is_ok_and(|img| rs.contains(&img)))
        });
        rec.check(format!("Weyl closure {label}"), closed, "");

        let uniform = rs.roots().iter().all(|l| match rs.simple_expansion(l) {
            Some(c) => {
                let nonneg = c.iter().all(|&x| x >= 0);
                let nonpos = c.iter().all(|&x| x <= 0);
                (nonneg || nonpos) && nonneg == rs.is_positive(l)
            }
            None => false,
        });
        rec.check(format!("simple expansion {label}"), uniform, "");

        let dd = dynkin_diagram(&rs);
        let autos = diagram_automorphisms(&dd);
        let set: BTreeSet<Vec<usize>> = autos.iter().cloned().collect();
        let compose =
            |p: &[usize], q: &[usize]| -> Vec<usize> { q.iter().map(|&x| p[x - 1]).collect() };
        let group = autos.iter().all(|p| {
            let mut inv = vec![0; p.len()];
            for (k, &x) in p.iter().enumerate() {
                inv[x - 1] = k + 1;
            }
            set.contains(&inv) && autos.iter().all(|q| set.contains(&compose(p, q)))
        }) && autos
            .first()
            .is_some_and(|id| id.iter().enumerate().all(|(k, &x)| x == k + 1));
        rec.check(
            format!("automorphism group {label}"),
            group,
            format!("order {}", autos.len()),
        );

        let doubles_ok = dd
            .vertices
            .iter()
            .all(|v| v.double_circle == (f == Family::BC && v.index == r));
        let arrows_ok = dd
            .edges
            .iter()
            .all(|e| (e.lines >= 2) == (e.arrow != Arrow::None));
        rec.check(
            format!("diagram decorations {label}"),
            doubles_ok && arrows_ok,
            "",
        );
    }
}

fn spacecat_checks(rec: &mut Recorder) {
    for d in Catalog::global().instances(6, 4) {
        let dim = space_dimension(&d);
        let rs = d.root_system();
        rec.check(
            format!("dim M > rank for {}", d.ascii()),
            dim > d.rank(),
            format!("dim {dim}"),
        );
        if d.rank() <= 4 {
            let invariant = rs.roots().iter().all(|l| {
                let m = root_multiplicity(&d, l).expect("root");
                rs.roots().iter().all(|mu| {
                    let img = reflect(mu, l).expect("root");
                    root_multiplicity(&d, &img) == Ok(m)
                })
            });
            rec.check(
                format!("Weyl-invariant multiplicities {}", d.ascii()),
                invariant,
                "",
            );
        }
        if d.is_split() {
            rec.check(
                format!("split dimension {}", d.ascii()),
                dim == d.rank() + rs.positive().len(),
                "",
            );
        }
    }
}

fn parabolic_checks(rec: &mut Recorder) {
    for d in Catalog::global().instances(5, 3) {
        let r = d.rank();
        if r > 5 {
            continue;
        }
        let mut conserved = true;
        let mut monotone = true;
        let subsets = PhiSubset::all(r);
        let data: Vec<_> = subsets
            .iter()
            .map(|p| parabolic_data(&d, p).expect("valid subset"))
            .collect();
        for p in &subsets {
            let h = horospherical(&d, p).expect("valid subset");
            conserved &= h.dim_fs + h.dim_euclidean + h.dim_n == h.dim_m;
        }
        for (i, a) in subsets.iter().enumerate() {
            for (j, b) in subsets.iter().enumerate() {
                if a.indices().iter().all(|&x| b.contains(x)) {
                    monotone &= data[i].dim_n_phi >= data[j].dim_n_phi
                        && data[i].dim_a_phi >= data[j].dim_a_phi;
                }
            }
        }
        rec.check(
            format!("horospherical conservation {}", d.ascii()),
            conserved,
            "",
        );
        rec.check(format!("monotonicity {}", d.ascii()), monotone, "");

        let dd = dynkin_diagram(&d.root_system());
        let autos = diagram_automorphisms(&dd);
        let orbits: BTreeSet<Vec<PhiSubset>> = subsets
            .iter()
            .map(|p| {
                let o: BTreeSet<PhiSubset> = autos.iter().map(|a| p.permuted(a)).collect();
                o.into_iter().collect()
            })
            .collect();
        let total: usize = orbits.iter().map(Vec::len).sum();
        rec.check(
            format!("2^r parabolic subsets {}", d.ascii()),
            subsets.len() == 1 << r && total == subsets.len(),
            format!("{} orbits", orbits.len()),
        );

        if d.is_sl_model() {
            let agree = subsets.iter().zip(&data).all(|(p, pd)| {
                slmodel::q_phi_blocks(&d, p).is_ok_and(|q| Some(q.dim()) == pd.dim_q_phi)
            });
            rec.check(format!("q_Phi block count {}", d.ascii()), agree, "");
        }
    }
}

fn fibonacci(k: usize) -> usize {
    let (mut a, mut b) = (0usize, 1usize);
    for _ in 0..k {
        (a, b) = (b, a + b);
    }
    a
}

fn foliate_checks(rec: &mut Recorder) {
    for r in 1..=12 {
        let dd = dynkin_diagram(&build_root_system(Family::A, r).expect("A_r"));
        let n = orthogonal_subsets(&dd).len();
        rec.check(
            format!("orthogonal subsets of A{r}"),
            n == fibonacci(r + 2),
            format!("{n}"),
        );
    }
    let cat = Catalog::global();
    let sl5 = cat.lookup("SL5").expect("catalog");
    let dd = dynkin_diagram(&sl5.root_system());
    let orbits = phi_orbits(&dd);
    let classes = enumerate_foliations(&sl5, false).expect("SL5");
    rec.check(
        "SL5 classes",
        orbits.len() == 5 && classes.len() == 18,
        format!(
            "{} orbits, {} nontrivial classes",
            orbits.len(),
            classes.len()
        ),
    );
    for d in cat.instances(4, 3) {
        let cs = enumerate_foliations(&d, true).expect("enumerate");
        let dim = space_dimension(&d);
        let sums = cs
            .iter()
            .all(|c| c.codim + c.leaf_dim == dim && c.trivial == (c.codim == 0));
        let dd = dynkin_diagram(&d.root_system());
        let orbit_total: usize = phi_orbits(&dd).iter().map(Vec::len).sum();
        rec.check(
            format!("class invariants {}", d.ascii()),
            sums && orbit_total == orthogonal_subsets(&dd).len(),
            "",
        );
        if d.rank() == 1 {
            let n = cs.iter().filter(|c| !c.trivial).count();
            rec.check(
                format!("rank-one classes {}", d.ascii()),
                n == 2,
                format!("{n}"),
            );
        }
        if d.is_sl_model() {
            let ok = cs.iter().all(|c| {
                slmodel::build_s_phi_v(&d, &c.phi, c.dim_v, None)
                    .is_ok_and(|s| s.dim() == dim - c.codim)
            });
            rec.check(format!("s_Phi,V subalgebras {}", d.ascii()), ok, "");
        }
    }
}

fn slmodel_checks(rec: &mut Recorder, seed: u64) {
    let mut rng = slmodel::rng(seed);
    for r in 1..=6 {
        let n = r + 1;
        let mut worst_b = 0.0f64;
        let mut worst_jacobi = 0.0f64;
        for _ in 0..20 {
            let x = slmodel::random_traceless(&mut rng, n);
            let y = slmodel::random_traceless(&mut rng, n);
            let z = slmodel::random_traceless(&mut rng, n);
            let b = slmodel::killing_form(&x, &y).expect("traceless");
            let c = slmodel::killing_form_closed(&x, &y).expect("same size");
            worst_b = worst_b.max((b - c).abs());
            let br =
                |a: &MatrixElement, b: &MatrixElement| slmodel::bracket(a, b).expect("traceless");
            let j = br(&x, &br(&y, &z))
                .add(&br(&y, &br(&z, &x)))
                .and_then(|s| s.add(&br(&z, &br(&x, &y))))
                .expect("same size");
            worst_jacobi = worst_jacobi.max(j.max_abs());
        }
        rec.check(
            format!("Killing closed form sl{n}"),
            worst_b < 1e-9,
            format!("max dev {worst_b:.2e}"),
        );
        rec.check(
            format!("Jacobi sl{n}"),
            worst_jacobi < tolerance::TAU_ALG,
            format!("{worst_jacobi:.2e}"),
        );

        let mut worst = 0.0f64;
        let mut ok = true;
        for _ in 0..100 {
            let g = slmodel::random_sl(&mut rng, n);
            match slmodel::iwasawa_group(&g) {
                Ok(f) => {
                    worst = worst.max(f.reconstruction_error(&g));
                    ok &= f.shape_defect() < tolerance::TAU_NUM;
                }
                Err(_) => ok = false,
            }
        }
        rec.check(
            format!("Iwasawa round trip SL{n}"),
            ok && worst < tolerance::TAU_NUM,
            format!("max error {worst:.2e}"),
        );
    }
    for r in 1..=5 {
        let n = r + 1;
        rec.check(
            format!("root space grading sl{n}"),
            root_grading_holds(n),
            "",
        );
        rec.check(
            format!("[a+n, a+n] = n in sl{n}"),
            derived_is_nilradical(r),
            "",
        );
        let (neg_k, pos_p) = killing_signature(n);
        rec.check(
            format!("Killing form definite on k and p, sl{n}"),
            neg_k && pos_p,
            "",
        );
        let mut worst = 0.0f64;
        for _ in 0..20 {
            let x = slmodel::random_traceless(&mut rng, n);
            let y = slmodel::random_traceless(&mut rng, n);
            let z = slmodel::random_traceless(&mut rng, n);
            let b = |a: &MatrixElement, c: &MatrixElement| {
                slmodel::killing_form(a, c).expect("traceless")
            };
            let br =
                |a: &MatrixElement, c: &MatrixElement| slmodel::bracket(a, c).expect("traceless");
            let lhs = b(&br(&z, &x), &y) + b(&x, &br(&z, &y));
            worst = worst.max(lhs.abs() / (1.0 + x.norm() * y.norm() * z.norm()));
        }
        rec.check(
            format!("ad-invariance of B, sl{n}"),
            worst < 1e-12 * (n * n) as f64,
            format!("{worst:.2e}"),
        );
    }
    let cat = Catalog::global();
    for r in 1..=5 {
        let d = cat.lookup(&format!("SL{}", r + 1)).expect("catalog");
        let mut worst = 0.0f64;
        let mut ok = true;
        for p in PhiSubset::all(r) {
            for s in [
                slmodel::p_phi(&d, &p),
                slmodel::p_phi_s(&d, &p),
                slmodel::a_lower_phi(&d, &p),
            ] {
                match s.and_then(|s| slmodel::is_lie_triple(&s)) {
                    Ok(rep) => {
                        ok &= rep.holds;
                        worst = worst.max(rep.residual);
                    }
                    Err(_) => ok = false,
                }
            }
        }
        rec.check(
            format!("Lie triple systems SL{}", r + 1),
            ok,
            format!("max residual {worst:.2e}"),
        );
    }
    let bad = slmodel::is_lie_triple(&slmodel::non_lie_triple_example());
    rec.check(
        "Lie triple non-example fails",
        bad.is_ok_and(|r| !r.holds && r.residual > 0.1),
        "",
    );
    let i = num_complex::Complex64::new(0.0, 1.0);
    let grid: Vec<f64> = (0..=60).map(|k| -3.0 + 0.1 * k as f64).collect();
    let k_ok = slmodel::orbit_points(slmodel::OrbitKind::K, i, &grid).is_ok_and(|pts| {
        pts.iter()
            .all(|p| p.re.abs() < 1e-12 && (p.im - 1.0).abs() < 1e-12)
    });
    let a_ok = slmodel::orbit_points(slmodel::OrbitKind::A, i, &grid).is_ok_and(|pts| {
        pts.iter()
            .all(|p| p.re.abs() < 1e-12 && (p.im - (2.0 * p.param).exp()).abs() < 1e-12)
    });
    let n_ok = slmodel::orbit_points(
        slmodel::OrbitKind::N,
        num_complex::Complex64::new(0.5, 1.7),
        &grid,
    )
    .is_ok_and(|pts| pts.iter().all(|p| (p.im - 1.7).abs() < 1e-12));
    rec.check("half-plane orbits", k_ok && a_ok && n_ok, "");
}

/// `[g_lambda, g_mu]` lies in `g_{lambda+mu}` for all pairs of root vectors.
fn root_grading_holds(n: usize) -> bool {
    let roots: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    roots.iter().all(|&(i, j)| {
        roots.iter().all(|&(k, l)| {
            let mut sum = vec![0i32; n];
            sum[i] += 1;
            sum[j] -= 1;
            sum[k] += 1;
            sum[l] -= 1;
            let br = slmodel::bracket(&MatrixElement::unit(n, i, j), &MatrixElement::unit(n, k, l))
                .expect("traceless");
            let parts = slmodel::restricted_root_decompose(&br).expect("traceless");
            let is_root = sum.iter().filter(|&&c| c == 1).count() == 1
                && sum.iter().filter(|&&c| c == -1).count() == 1
                && sum.iter().all(|&c| c.abs() <= 1);
            let zero = sum.iter().all(|&c| c == 0);
            parts.iter().all(|p| match &p.root {
                None => zero,
                Some(root) => is_root && root.scaled().iter().zip(&sum).all(|(a, b)| *a == 2 * b),
            })
        })
    })
}

/// Brackets of `a + n` span exactly `n`.
fn derived_is_nilradical(r: usize) -> bool {
    let a = slmodel::cartan_subalgebra(r);
    let nil = slmodel::nilpotent(r);
    let basis: Vec<&MatrixElement> = a.basis().iter().chain(nil.basis()).collect();
    let mut cols = Vec::new();
    for x in &basis {
        for y in &basis {
            let b = slmodel::bracket(x, y).expect("traceless");
            if !nil.contains(&b) {
                return false;
            }
            cols.push(b.matrix().iter().copied().collect::<Vec<f64>>());
        }
    }
    let m = nalgebra::DMatrix::from_fn(cols[0].len(), cols.len(), |i, j| cols[j][i]);
    m.rank(1e-9) == nil.dim()
}

/// Gram matrices of `B` on the standard bases of `k` and `p`.
fn killing_signature(n: usize) -> (bool, bool) {
    let mut k = Vec::new();
    let mut p = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let e = MatrixElement::unit(n, i, j);
            let f = MatrixElement::unit(n, j, i);
            k.push(e.sub(&f).expect("same size"));
            p.push(e.add(&f).expect("same size"));
        }
    }
    for i in 0..n - 1 {
        let mut d = vec![0.0; n];
        d[i] = 1.0;
        d[i + 1] = -1.0;
        p.push(MatrixElement::diagonal(&d));
    }
    let gram = |b: &[MatrixElement]| {
        let g = nalgebra::DMatrix::from_fn(b.len(), b.len(), |i, j| {
            slmodel::killing_form(&b[i], &b[j]).expect("traceless")
        });
        g.symmetric_eigenvalues()
    };
    let neg = k.is_empty() || gram(&k).iter().all(|&e| e < 0.0);
    let pos = gram(&p).iter().all(|&e| e > 0.0);
    (neg, pos)
}
