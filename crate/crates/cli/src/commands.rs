use liefoliate::foliate::{enumerate_foliations, CLASS_LABEL};
use liefoliate::parabolic::{horospherical, parabolic_data, PhiSubset};
use liefoliate::rootsys::{build_root_system, dynkin_diagram, Arrow, Root};
use liefoliate::slmodel::{self, MatrixElement, Subspace};
use liefoliate::spacecat::{space_dimension, Catalog, SimpleMultiplicity};
use liefoliate::verify::run_suite;
use liefoliate::{Family, SpaceDescriptor};
use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::render::{self, opt};
use crate::{
    CatalogCmd, Cli, Command, Failure, FamilyRank, FoliationsCmd, Format, Rendered, RootsysCmd,
    SlmodelCmd, SpacePhi,
};

type Out = Result<Rendered, Failure>;

fn ok(text: String) -> Out {
    Ok(Rendered { text, status: 0 })
}

fn unsupported(format: Format, what: &str) -> Failure {
    let f = match format {
        Format::Table => "table",
        Format::Json => "json",
        Format::Dot => "dot",
        Format::Csv => "csv",
    };
    Failure::Usage(format!("--format {f} is not available for {what}"))
}

pub(crate) fn dispatch(cli: &Cli, seed: u64) -> Out {
    let f = cli.format;
    match &cli.command {
        Command::Rootsys(RootsysCmd::Show(fr)) => rootsys_show(fr, f),
        Command::Rootsys(RootsysCmd::Dynkin(fr)) => rootsys_dynkin(fr, f),
        Command::Catalog(CatalogCmd::List) => catalog_list(f),
        Command::Catalog(CatalogCmd::Show { space }) => catalog_show(space, f),
        Command::Parabolic(sp) => parabolic(sp, f),
        Command::Horospherical(sp) => horo(sp, f),
        Command::Foliations(FoliationsCmd::Enumerate {
            space,
            include_trivial,
            codim,
        }) => foliations(space, *include_trivial, *codim, f),
        Command::Slmodel(cmd) => slmodel_cmd(cmd, f, seed),
        Command::Verify { suite } => {
            if matches!(f, Format::Dot) {
                return Err(unsupported(f, "verify"));
            }
            let results = run_suite(*suite, seed);
            let status = if results.iter().all(|r| r.passed) {
                0
            } else {
                1
            };
            let rows: Vec<Vec<String>> = results
                .iter()
                .map(|r| {
                    vec![
                        if r.passed { "PASS" } else { "FAIL" }.to_string(),
                        r.suite.clone(),
                        r.name.clone(),
                        r.detail.clone(),
                    ]
                })
                .collect();
            let text = match f {
                Format::Json => render::json(&results)?,
                Format::Csv => render::csv(&["result", "suite", "check", "detail"], &rows)?,
                _ => {
                    let failed = results.iter().filter(|r| !r.passed).count();
                    let mut t = render::table(&["result", "suite", "check", "detail"], &rows);
                    t.push_str(&format!("\n{} checks, {failed} failed\n", results.len()));
                    t
                }
            };
            Ok(Rendered { text, status })
        }
    }
}

fn resolve_rank(fr: &FamilyRank) -> Result<usize, Failure> {
    match (fr.rank, fr.family.fixed_rank()) {
        (Some(r), _) => Ok(r),
        (None, Some(r)) => Ok(r),
        (None, None) => Err(Failure::Usage(format!(
            "--rank is required for family {}",
            fr.family
        ))),
    }
}

fn coords(root: &Root) -> String {
    let c: Vec<String> = root.coords().iter().map(|q| q.to_string()).collect();
    format!("({})", c.join(","))
}

fn rootsys_show(fr: &FamilyRank, f: Format) -> Out {
    let rs = build_root_system(fr.family, resolve_rank(fr)?)?;
    match f {
        Format::Json => ok(render::json(&rs)?),
        Format::Csv => {
            let rows: Vec<Vec<String>> = rs
                .roots()
                .iter()
                .map(|l| {
                    let simple = rs
                        .simple()
                        .iter()
                        .position(|s| s == l)
                        .map_or(String::new(), |i| (i + 1).to_string());
                    vec![
                        coords(l),
                        rs.is_positive(l).to_string(),
                        simple,
                        l.scaled_norm2().to_string(),
                    ]
                })
                .collect();
            ok(render::csv(
                &["root", "positive", "simple_index", "scaled_norm2"],
                &rows,
            )?)
        }
        Format::Table => {
            let mut t = render::fields(&[
                ("family", rs.family().to_string()),
                ("rank", rs.rank().to_string()),
                ("ambient dim", rs.ambient_dim().to_string()),
                ("roots", rs.roots().len().to_string()),
                ("positive", rs.positive().len().to_string()),
                ("length classes", rs.length_classes().len().to_string()),
            ]);
            t.push('\n');
            let rows: Vec<Vec<String>> = rs
                .simple()
                .iter()
                .enumerate()
                .map(|(i, l)| vec![format!("alpha_{}", i + 1), coords(l)])
                .collect();
            t.push_str(&render::table(&["simple", "coordinates"], &rows));
            ok(t)
        }
        Format::Dot => Err(unsupported(f, "rootsys show")),
    }
}

fn rootsys_dynkin(fr: &FamilyRank, f: Format) -> Out {
    let dd = dynkin_diagram(&build_root_system(fr.family, resolve_rank(fr)?)?);
    match f {
        Format::Json => ok(render::json(&dd)?),
        Format::Dot => ok(dd.to_dot()),
        Format::Table => {
            let double: Vec<String> = dd
                .vertices
                .iter()
                .filter(|v| v.double_circle)
                .map(|v| v.index.to_string())
                .collect();
            let mut t = render::fields(&[
                ("diagram", dd.label()),
                ("vertices", dd.vertices.len().to_string()),
                (
                    "double circles",
                    if double.is_empty() {
                        "-".into()
                    } else {
                        double.join(",")
                    },
                ),
            ]);
            t.push('\n');
            let rows: Vec<Vec<String>> = dd
                .edges
                .iter()
                .map(|e| {
                    let arrow = match e.arrow {
                        Arrow::None => "-".to_string(),
                        Arrow::IToJ => format!("{} -> {}", e.i, e.j),
                        Arrow::JToI => format!("{} -> {}", e.j, e.i),
                    };
                    vec![e.i.to_string(), e.j.to_string(), e.lines.to_string(), arrow]
                })
                .collect();
            t.push_str(&render::table(&["i", "j", "lines", "arrow"], &rows));
            for n in &dd.notes {
                t.push_str(&format!("note: {n}\n"));
            }
            ok(t)
        }
        Format::Csv => Err(unsupported(f, "rootsys dynkin")),
    }
}

/// A catalog series as exported by `catalog list`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogRecord {
    pub id: String,
    pub family: Family,
    pub display: String,
    pub ascii: String,
    pub rank_min: usize,
    pub rank_fixed: Option<usize>,
    pub n_min: Option<usize>,
    pub multiplicities: String,
    pub note: Option<String>,
}

fn catalog_list(f: Format) -> Out {
    let records: Vec<CatalogRecord> = Catalog::global()
        .entries()
        .iter()
        .map(|e| {
            let (rank_min, rank_fixed) = e.rank_range();
            CatalogRecord {
                id: e.id().to_string(),
                family: e.family(),
                display: e.display_template().to_string(),
                ascii: e.ascii_template().to_string(),
                rank_min,
                rank_fixed,
                n_min: e.n_min(),
                multiplicities: e.pattern().to_string(),
                note: e.note().map(str::to_string),
            }
        })
        .collect();
    let headers = [
        "id",
        "ascii",
        "display",
        "family",
        "ranks",
        "multiplicities",
    ];
    let rows: Vec<Vec<String>> = records
        .iter()
        .map(|r| {
            let ranks = match r.rank_fixed {
                Some(k) => k.to_string(),
                None => format!(">= {}", r.rank_min),
            };
            vec![
                r.id.clone(),
                r.ascii.clone(),
                r.display.clone(),
                r.family.to_string(),
                ranks,
                r.multiplicities.clone(),
            ]
        })
        .collect();
    match f {
        Format::Json => ok(render::json(&records)?),
        Format::Csv => ok(render::csv(&headers, &rows)?),
        Format::Table => ok(render::table(&headers, &rows)),
        Format::Dot => Err(unsupported(f, "catalog list")),
    }
}

fn mult_string(m: &[SimpleMultiplicity]) -> String {
    let parts: Vec<String> = m
        .iter()
        .map(|x| match x {
            SimpleMultiplicity::Single(a) => a.to_string(),
            SimpleMultiplicity::Pair(a, b) => format!("({a},{b})"),
        })
        .collect();
    format!("({})", parts.join(","))
}

fn lookup(name: &str) -> Result<SpaceDescriptor, Failure> {
    Ok(Catalog::global().lookup(name)?)
}

fn catalog_show(space: &str, f: Format) -> Out {
    let d = lookup(space)?;
    match f {
        Format::Json => ok(render::json(&d)?),
        Format::Table => {
            let mut pairs = vec![
                ("name", d.name().to_string()),
                ("ascii", d.ascii().to_string()),
                ("series", d.entry().to_string()),
                ("family", d.family().to_string()),
                ("rank", d.rank().to_string()),
                ("multiplicities", mult_string(d.simple_mults())),
                ("dim k_0", opt(d.dim_k0().map(|k| k as usize))),
                ("dim M", space_dimension(&d).to_string()),
            ];
            if let Some(n) = d.note() {
                pairs.push(("note", n.to_string()));
            }
            ok(render::fields(&pairs))
        }
        _ => Err(unsupported(f, "catalog show")),
    }
}

fn phis(d: &SpaceDescriptor, phi: Option<&str>) -> Result<Vec<PhiSubset>, Failure> {
    Ok(match phi {
        Some(s) => vec![PhiSubset::parse(d.rank(), s)?],
        None => PhiSubset::all(d.rank()),
    })
}

fn parabolic(sp: &SpacePhi, f: Format) -> Out {
    let d = lookup(&sp.space)?;
    let data = phis(&d, sp.phi.as_deref())?
        .iter()
        .map(|p| parabolic_data(&d, p))
        .collect::<liefoliate::Result<Vec<_>>>()?;
    let headers = [
        "phi",
        "r_phi",
        "dim a_phi",
        "dim n_phi",
        "dim p_phi",
        "dim p_phi^s",
        "dim l_phi",
        "dim m_phi",
        "dim q_phi",
        "dim k_phi",
        "dim g_phi",
        "dim z_phi",
    ];
    let rows: Vec<Vec<String>> = data
        .iter()
        .map(|p| {
            vec![
                p.phi.to_string(),
                p.rank_phi.to_string(),
                p.dim_a_phi.to_string(),
                p.dim_n_phi.to_string(),
                p.dim_p_phi.to_string(),
                p.dim_p_phi_s.to_string(),
                opt(p.dim_l_phi),
                opt(p.dim_m_phi),
                opt(p.dim_q_phi),
                opt(p.dim_k_phi),
                opt(p.dim_g_phi),
                opt(p.dim_z_phi),
            ]
        })
        .collect();
    match f {
        Format::Json if sp.phi.is_some() => ok(render::json(&data[0])?),
        Format::Json => ok(render::json(&data)?),
        Format::Csv => ok(render::csv(&headers, &rows)?),
        Format::Table => {
            let mut t = format!("{}  rank {}\n\n", d.name(), d.rank());
            t.push_str(&render::table(&headers, &rows));
            ok(t)
        }
        Format::Dot => Err(unsupported(f, "parabolic")),
    }
}

fn horo(sp: &SpacePhi, f: Format) -> Out {
    let d = lookup(&sp.space)?;
    let data = phis(&d, sp.phi.as_deref())?
        .iter()
        .map(|p| horospherical(&d, p))
        .collect::<liefoliate::Result<Vec<_>>>()?;
    let headers = ["phi", "factors", "dim F^s", "dim E", "dim N", "dim M"];
    let rows: Vec<Vec<String>> = data
        .iter()
        .map(|h| {
            let names: Vec<&str> = h.factors.iter().map(|b| b.name.as_str()).collect();
            vec![
                h.phi.to_string(),
                if names.is_empty() {
                    "-".to_string()
                } else {
                    names.join(" x ")
                },
                h.dim_fs.to_string(),
                h.dim_euclidean.to_string(),
                h.dim_n.to_string(),
                h.dim_m.to_string(),
            ]
        })
        .collect();
    match f {
        Format::Json if sp.phi.is_some() => ok(render::json(&data[0])?),
        Format::Json => ok(render::json(&data)?),
        Format::Csv => ok(render::csv(&headers, &rows)?),
        Format::Table => {
            let mut t = format!("{}  rank {}\n\n", d.name(), d.rank());
            t.push_str(&render::table(&headers, &rows));
            ok(t)
        }
        Format::Dot => Err(unsupported(f, "horospherical")),
    }
}

fn foliations(space: &str, include_trivial: bool, codim: Option<usize>, f: Format) -> Out {
    let d = lookup(space)?;
    let classes: Vec<_> = enumerate_foliations(&d, include_trivial)?
        .into_iter()
        .filter(|c| codim.is_none_or(|k| c.codim == k))
        .collect();
    let headers = ["phi", "orbit", "dim V", "leaf dim", "codim", "factors"];
    let rows: Vec<Vec<String>> = classes
        .iter()
        .map(|c| {
            let orbit: Vec<String> = c.orbit.iter().map(|p| p.to_string()).collect();
            let factors: Vec<String> = c.factors.iter().map(|h| h.to_string()).collect();
            vec![
                c.phi.to_string(),
                orbit.join(" "),
                c.dim_v.to_string(),
                c.leaf_dim.to_string(),
                c.codim.to_string(),
                if factors.is_empty() {
                    "-".to_string()
                } else {
                    factors.join(" x ")
                },
            ]
        })
        .collect();
    match f {
        Format::Json => ok(render::json(&classes)?),
        Format::Csv => ok(render::csv(&headers, &rows)?),
        Format::Table => {
            let mut t = format!(
                "{}  rank {}  dim {}\n\n",
                d.name(),
                d.rank(),
                space_dimension(&d)
            );
            t.push_str(&render::table(&headers, &rows));
            t.push_str(&format!("\n{} classes ({CLASS_LABEL})\n", classes.len()));
            ok(t)
        }
        Format::Dot => Err(unsupported(f, "foliations")),
    }
}

/// `slmodel iwasawa` output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IwasawaReport {
    pub g: Vec<Vec<f64>>,
    pub k: Vec<Vec<f64>>,
    pub a: Vec<Vec<f64>>,
    pub n: Vec<Vec<f64>>,
    pub reconstruction_error: f64,
    pub shape_defect: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KillingSample {
    pub ad_trace: f64,
    pub closed_form: f64,
}

/// `slmodel killing` output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KillingReport {
    pub size: usize,
    pub samples: Vec<KillingSample>,
    pub max_abs_difference: f64,
}

/// `slmodel check-lie-triple` output.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LieTripleCheck {
    pub size: usize,
    pub dim: usize,
    pub holds: bool,
    pub residual: f64,
}

fn rows_of(m: &DMatrix<f64>) -> Vec<Vec<f64>> {
    m.row_iter().map(|r| r.iter().copied().collect()).collect()
}

fn parse_json<T: for<'de> Deserialize<'de>>(flag: &str, s: &str) -> Result<T, Failure> {
    serde_json::from_str(s).map_err(|e| Failure::Usage(format!("{flag}: {e}")))
}

fn parse_matrix(flag: &str, s: &str) -> Result<DMatrix<f64>, Failure> {
    let rows: Vec<Vec<f64>> = parse_json(flag, s)?;
    Ok(slmodel::matrix_from_rows(&rows)?)
}

fn check_size(rank: Option<usize>, size: usize) -> Result<(), Failure> {
    match rank {
        Some(r) if r + 1 != size => Err(liefoliate::Error::SizeMismatch {
            left: r + 1,
            right: size,
        }
        .into()),
        _ => Ok(()),
    }
}

fn need_rank(rank: Option<usize>) -> Result<usize, Failure> {
    match rank {
        Some(r) if r >= 1 => Ok(r),
        Some(_) => Err(Failure::Usage("--rank must be at least 1".into())),
        None => Err(Failure::Usage(
            "--rank is required without explicit matrices".into(),
        )),
    }
}

fn slmodel_cmd(cmd: &SlmodelCmd, f: Format, seed: u64) -> Out {
    if matches!(f, Format::Dot) {
        return Err(unsupported(f, "slmodel"));
    }
    match cmd {
        SlmodelCmd::Iwasawa { rank, matrix } => {
            let g = match matrix {
                Some(s) => {
                    let g = parse_matrix("--matrix", s)?;
                    check_size(*rank, g.nrows())?;
                    g
                }
                None => {
                    let r = need_rank(*rank)?;
                    slmodel::random_sl(&mut slmodel::rng(seed), r + 1)
                }
            };
            let fac = slmodel::iwasawa_group(&g)?;
            let rep = IwasawaReport {
                g: rows_of(&g),
                k: rows_of(&fac.k),
                a: rows_of(&fac.a),
                n: rows_of(&fac.n),
                reconstruction_error: fac.reconstruction_error(&g),
                shape_defect: fac.shape_defect(),
            };
            match f {
                Format::Json => ok(render::json(&rep)?),
                Format::Table => {
                    let mut t = String::new();
                    for (name, m) in [("g", &rep.g), ("k", &rep.k), ("a", &rep.a), ("n", &rep.n)] {
                        t.push_str(&format!("{name} =\n{}", render::matrix(m)));
                    }
                    t.push_str(&format!(
                        "max |g - kan| = {:e}\nshape defect  = {:e}\n",
                        rep.reconstruction_error, rep.shape_defect
                    ));
                    ok(t)
                }
                _ => Err(unsupported(f, "slmodel iwasawa")),
            }
        }
        SlmodelCmd::Killing {
            rank,
            samples,
            x,
            y,
        } => {
            let pairs: Vec<(MatrixElement, MatrixElement)> = match (x, y) {
                (Some(x), Some(y)) => {
                    let x = MatrixElement::new(parse_matrix("--x", x)?)?;
                    let y = MatrixElement::new(parse_matrix("--y", y)?)?;
                    check_size(*rank, x.size())?;
                    vec![(x, y)]
                }
                _ => {
                    let n = need_rank(*rank)? + 1;
                    let mut rng = slmodel::rng(seed);
                    (0..*samples)
                        .map(|_| {
                            let a = slmodel::random_traceless(&mut rng, n);
                            let b = slmodel::random_traceless(&mut rng, n);
                            (a, b)
                        })
                        .collect()
                }
            };
            let mut out = Vec::with_capacity(pairs.len());
            for (a, b) in &pairs {
                out.push(KillingSample {
                    ad_trace: slmodel::killing_form(a, b)?,
                    closed_form: slmodel::killing_form_closed(a, b)?,
                });
            }
            let rep = KillingReport {
                size: pairs.first().map_or(rank.unwrap_or(0) + 1, |p| p.0.size()),
                max_abs_difference: out
                    .iter()
                    .map(|s| (s.ad_trace - s.closed_form).abs())
                    .fold(0.0, f64::max),
                samples: out,
            };
            let rows: Vec<Vec<String>> = rep
                .samples
                .iter()
                .map(|s| {
                    vec![
                        format!("{:.12e}", s.ad_trace),
                        format!("{:.12e}", s.closed_form),
                        format!("{:e}", (s.ad_trace - s.closed_form).abs()),
                    ]
                })
                .collect();
            let headers = ["tr(ad X ad Y)", "2n tr(XY)", "difference"];
            match f {
                Format::Json => ok(render::json(&rep)?),
                Format::Csv => ok(render::csv(&headers, &rows)?),
                _ => {
                    let mut t = render::table(&headers, &rows);
                    t.push_str(&format!("\nmax difference {:e}\n", rep.max_abs_difference));
                    ok(t)
                }
            }
        }
        SlmodelCmd::CheckLieTriple { basis } => {
            let mats: Vec<Vec<Vec<f64>>> = parse_json("--basis", basis)?;
            if mats.is_empty() {
                return Err(Failure::Usage("--basis: empty list".into()));
            }
            let elems = mats
                .iter()
                .map(|m| MatrixElement::from_rows(m))
                .collect::<liefoliate::Result<Vec<_>>>()?;
            let size = elems[0].size();
            let s = Subspace::new("basis", size, elems)?;
            let rep = slmodel::is_lie_triple(&s)?;
            let out = LieTripleCheck {
                size,
                dim: s.dim(),
                holds: rep.holds,
                residual: rep.residual,
            };
            match f {
                Format::Json => ok(render::json(&out)?),
                Format::Table => ok(render::fields(&[
                    ("dim", out.dim.to_string()),
                    ("lie triple", out.holds.to_string()),
                    ("residual", format!("{:e}", out.residual)),
                ])),
                _ => Err(unsupported(f, "slmodel check-lie-triple")),
            }
        }
        SlmodelCmd::Halfplane {
            orbit,
            samples,
            from,
            to,
            base,
        } => {
            let z = parse_point(base)?;
            let params: Vec<f64> = match *samples {
                0 => Vec::new(),
                1 => vec![*from],
                k => (0..k)
                    .map(|i| from + (to - from) * i as f64 / (k - 1) as f64)
                    .collect(),
            };
            let pts = slmodel::orbit_points(*orbit, z, &params)?;
            let rows: Vec<Vec<String>> = pts
                .iter()
                .map(|p| vec![p.param.to_string(), p.re.to_string(), p.im.to_string()])
                .collect();
            match f {
                Format::Json => ok(render::json(&pts)?),
                Format::Csv => ok(render::csv(&["param", "re", "im"], &rows)?),
                _ => ok(render::table(&["param", "re", "im"], &rows)),
            }
        }
    }
}

fn parse_point(s: &str) -> Result<Complex64, Failure> {
    let bad = || Failure::Usage(format!("--base `{s}`: expected `re,im`"));
    let (re, im) = s.split_once(',').ok_or_else(bad)?;
    let re: f64 = re.trim().parse().map_err(|_| bad())?;
    let im: f64 = im.trim().parse().map_err(|_| bad())?;
    Ok(Complex64::new(re, im))
}
