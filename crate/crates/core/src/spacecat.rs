//! Catalog of irreducible symmetric spaces of noncompact type with the
//! multiplicities of their simple restricted roots, and the dimension
//! calculus built on it.
//!
//! The catalog ships as `data/catalog.toml`. Each record is a series
//! parametrised by the rank `r` and, for some series, an extra parameter `n`.
//! Names on the command line use a flat ASCII grammar (`SL5`, `SOo(5,2)`,
//! `SU(3,1)`, `F4(-20)`, ...); display names follow the usual notation
//! (`SL_{5}(R)/SO_{5}`).

use std::collections::BTreeMap;
use std::fmt;
use std::sync::LazyLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{build_root_system, Family, Root, RootSystem};

const CATALOG_TOML: &str = include_str!("../data/catalog.toml");

static CATALOG: LazyLock<Catalog> =
    LazyLock::new(|| Catalog::from_toml(CATALOG_TOML).expect("bundled catalog is valid"));

/// Multiplicity of a simple root; the pair form `(m_alpha, m_2alpha)` occurs
/// only for the last simple root of a BC system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SimpleMultiplicity {
    Single(u32),
    Pair(u32, u32),
}

impl SimpleMultiplicity {
    pub fn single(self) -> u32 {
        match self {
            SimpleMultiplicity::Single(m) | SimpleMultiplicity::Pair(m, _) => m,
        }
    }

    pub fn double(self) -> Option<u32> {
        match self {
            SimpleMultiplicity::Single(_) => None,
            SimpleMultiplicity::Pair(_, d) => Some(d),
        }
    }
}

impl fmt::Display for SimpleMultiplicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimpleMultiplicity::Single(m) => write!(f, "{m}"),
            SimpleMultiplicity::Pair(m, d) => write!(f, "({m},{d})"),
        }
    }
}

/// A symmetric space of the catalog at a concrete rank.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SpaceRecord", into = "SpaceRecord")]
pub struct SpaceDescriptor {
    name: String,
    ascii: String,
    entry: String,
    family: Family,
    rank: usize,
    n: Option<u32>,
    simple_mults: Vec<SimpleMultiplicity>,
    dim_k0: Option<u32>,
    note: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct SpaceRecord {
    name: String,
    ascii: String,
    entry: String,
    family: Family,
    rank: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    n: Option<u32>,
    simple_mults: Vec<SimpleMultiplicity>,
    dim_k0: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    note: Option<String>,
}

impl From<SpaceDescriptor> for SpaceRecord {
    fn from(d: SpaceDescriptor) -> Self {
        SpaceRecord {
            name: d.name,
            ascii: d.ascii,
            entry: d.entry,
            family: d.family,
            rank: d.rank,
            n: d.n,
            simple_mults: d.simple_mults,
            dim_k0: d.dim_k0,
            note: d.note,
        }
    }
}

impl TryFrom<SpaceRecord> for SpaceDescriptor {
    type Error = Error;

    fn try_from(r: SpaceRecord) -> Result<Self> {
        let d = SpaceDescriptor {
            name: r.name,
            ascii: r.ascii,
            entry: r.entry,
            family: r.family,
            rank: r.rank,
            n: r.n,
            simple_mults: r.simple_mults,
            dim_k0: r.dim_k0,
            note: r.note,
        };
        d.validate()?;
        Ok(d)
    }
}

impl SpaceDescriptor {
    /// A descriptor outside the catalog, e.g. for experiments with
    /// multiplicity data. The same invariants as catalog entries apply.
    pub fn custom(
        name: impl Into<String>,
        family: Family,
        rank: usize,
        simple_mults: Vec<SimpleMultiplicity>,
        dim_k0: Option<u32>,
    ) -> Result<Self> {
        let name = name.into();
        let d = SpaceDescriptor {
            ascii: name.clone(),
            entry: "custom".into(),
            name,
            family,
            rank,
            n: None,
            simple_mults,
            dim_k0,
            note: None,
        };
        d.validate()?;
        Ok(d)
    }

    fn validate(&self) -> Result<()> {
        let rs = build_root_system(self.family, self.rank)?;
        if self.simple_mults.len() != self.rank {
            return Err(Error::InvalidMultiplicities(format!(
                "expected {} simple multiplicities, got {}",
                self.rank,
                self.simple_mults.len()
            )));
        }
        for (k, m) in self.simple_mults.iter().enumerate() {
            if m.single() == 0 || m.double() == Some(0) {
                return Err(Error::InvalidMultiplicities(
                    "multiplicities must be positive".into(),
                ));
            }
            let is_last = k + 1 == self.rank;
            match (m.double(), self.family == Family::BC && is_last) {
                (Some(d), true) if ![1, 3, 7].contains(&d) => {
                    return Err(Error::InvalidMultiplicities(format!(
                        "m_2alpha must be 1, 3 or 7, got {d}"
                    )))
                }
                (None, true) => {
                    return Err(Error::InvalidMultiplicities(
                        "BC systems need (m_alpha, m_2alpha) on the last simple root".into(),
                    ))
                }
                (Some(_), false) => {
                    return Err(Error::InvalidMultiplicities(format!(
                        "alpha_{} has no double root",
                        k + 1
                    )))
                }
                _ => {}
            }
        }
        self.multiplicity_function_for(&rs).map(|_| ())
    }

    /// Display name, e.g. `SL_{5}(R)/SO_{5}`.
    pub fn name(&self) -> &str {
        &self.name
    }

    /// Command-line name, e.g. `SL5`.
    pub fn ascii(&self) -> &str {
        &self.ascii
    }

    /// Identifier of the catalog series this space belongs to.
    pub fn entry(&self) -> &str {
        &self.entry
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn series_parameter(&self) -> Option<u32> {
        self.n
    }

    pub fn simple_mults(&self) -> &[SimpleMultiplicity] {
        &self.simple_mults
    }

    /// Dimension of the centralizer of `a` in `k`; `None` when the catalog has
    /// no value for this space.
    pub fn dim_k0(&self) -> Option<u32> {
        self.dim_k0
    }

    pub fn note(&self) -> Option<&str> {
        self.note.as_deref()
    }

    /// All simple multiplicities equal to one and the system reduced.
    pub fn is_split(&self) -> bool {
        self.family.is_reduced()
            && self
                .simple_mults
                .iter()
                .all(|m| *m == SimpleMultiplicity::Single(1))
    }

    /// Whether this is the matrix-model space `SL_{r+1}(R)/SO_{r+1}`.
    pub fn is_sl_model(&self) -> bool {
        self.entry == "sl-real"
    }

    pub fn root_system(&self) -> RootSystem {
        build_root_system(self.family, self.rank)
            .expect("descriptor rank validated on construction")
    }

    pub fn multiplicity_function(&self) -> MultiplicityFunction {
        self.multiplicity_function_for(&self.root_system())
            .expect("descriptor validated on construction")
    }

    fn multiplicity_function_for(&self, rs: &RootSystem) -> Result<MultiplicityFunction> {
        let mut by_class: BTreeMap<i64, u32> = BTreeMap::new();
        let mut assign = |class: i64, m: u32| -> Result<()> {
            match by_class.insert(class, m) {
                Some(old) if old != m => Err(Error::InvalidMultiplicities(format!(
                    "roots of equal length carry different multiplicities ({old} and {m})"
                ))),
                _ => Ok(()),
            }
        };
        for (alpha, m) in rs.simple().iter().zip(&self.simple_mults) {
            assign(alpha.scaled_norm2(), m.single())?;
            if let Some(d) = m.double() {
                assign(4 * alpha.scaled_norm2(), d)?;
            }
        }
        for class in rs.length_classes() {
            if !by_class.contains_key(&class) {
                return Err(Error::InvalidMultiplicities(format!(
                    "no multiplicity for roots of scaled squared length {class}"
                )));
            }
        }
        Ok(MultiplicityFunction { by_class })
    }
}

impl fmt::Display for SpaceDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}{}: (", self.name, self.family, self.rank)?;
        for (k, m) in self.simple_mults.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, ")]")
    }
}

/// Multiplicities of all roots, keyed by squared length (scaled units).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicityFunction {
    by_class: BTreeMap<i64, u32>,
}

impl MultiplicityFunction {
    /// Multiplicity of a root, looked up by its length class.
    pub fn of(&self, root: &Root) -> Option<u32> {
        self.by_class.get(&root.scaled_norm2()).copied()
    }

    pub fn classes(&self) -> impl Iterator<Item = (i64, u32)> + '_ {
        self.by_class.iter().map(|(&k, &v)| (k, v))
    }
}

/// Multiplicity `m_lambda` of a root of the space's restricted root system.
pub fn root_multiplicity(space: &SpaceDescriptor, lambda: &Root) -> Result<u32> {
    let rs = space.root_system();
    if !rs.contains(lambda) {
        return Err(Error::NotARoot(lambda.to_string()));
    }
    Ok(space
        .multiplicity_function_for(&rs)?
        .of(lambda)
        .expect("every length class carries a multiplicity"))
}

/// Sum of multiplicities over a set of roots.
pub(crate) fn multiplicity_sum<'a>(
    mf: &MultiplicityFunction,
    roots: impl IntoIterator<Item = &'a Root>,
) -> usize {
    roots
        .into_iter()
        .map(|l| mf.of(l).expect("root of the space") as usize)
        .sum()
}

/// `dim M = dim a + dim n = r + sum over positive roots of m_lambda`.
pub fn space_dimension(space: &SpaceDescriptor) -> usize {
    let rs = space.root_system();
    let mf = space.multiplicity_function();
    space.rank() + multiplicity_sum(&mf, rs.positive())
}

/// Parses and evaluates `catalog.toml` placeholders.
mod template {
    use crate::error::{Error, Result};

    /// `c + r_coef * r + n_coef * n`
    #[derive(Debug, Clone, Copy, PartialEq, Eq)]
    pub struct LinExpr {
        c: i64,
        r: i64,
        n: i64,
    }

    impl LinExpr {
        pub fn parse(s: &str) -> Result<Self> {
            let mut e = LinExpr { c: 0, r: 0, n: 0 };
            let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
            if s.is_empty() {
                return Err(Error::Catalog("empty expression".into()));
            }
            let mut terms = Vec::new();
            let mut cur = String::new();
            for ch in s.chars() {
                if (ch == '+' || ch == '-') && !cur.is_empty() {
                    terms.push(std::mem::take(&mut cur));
                }
                cur.push(ch);
            }
            terms.push(cur);
            for t in terms {
                let (sign, body) = match t.strip_prefix('-') {
                    Some(rest) => (-1, rest),
                    None => (1, t.strip_prefix('+').unwrap_or(&t)),
                };
                let (digits, var) = body.split_at(body.find(['r', 'n']).unwrap_or(body.len()));
                let coef = if digits.is_empty() {
                    1
                } else {
                    digits
                        .parse::<i64>()
                        .map_err(|_| Error::Catalog(format!("bad expression `{s}`")))?
                };
                match var {
                    "" => e.c += sign * coef,
                    "r" => e.r += sign * coef,
                    "n" => e.n += sign * coef,
                    _ => return Err(Error::Catalog(format!("bad expression `{s}`"))),
                }
            }
            Ok(e)
        }

        pub fn eval(&self, r: i64, n: i64) -> i64 {
            self.c + self.r * r + self.n * n
        }
    }

    #[derive(Debug, Clone, PartialEq, Eq)]
    enum Segment {
        Lit(String),
        Expr(LinExpr),
    }

    #[derive(Debug, Clone, PartialEq, Eq)]
    pub struct Template {
        segments: Vec<Segment>,
        source: String,
    }

    impl Template {
        pub fn parse(s: &str) -> Result<Self> {
            let mut segments = Vec::new();
            let mut rest = s;
            while let Some(open) = rest.find('<') {
                if open > 0 {
                    segments.push(Segment::Lit(rest[..open].to_string()));
                }
                let close = rest[open..]
                    .find('>')
                    .ok_or_else(|| Error::Catalog(format!("unclosed placeholder in `{s}`")))?;
                segments.push(Segment::Expr(LinExpr::parse(
                    &rest[open + 1..open + close],
                )?));
                rest = &rest[open + close + 1..];
            }
            if !rest.is_empty() {
                segments.push(Segment::Lit(rest.to_string()));
            }
            Ok(Template {
                segments,
                source: s.to_string(),
            })
        }

        pub fn source(&self) -> &str {
            &self.source
        }

        /// Same template with every literal passed through `f`.
        pub fn map_literals(&self, f: impl Fn(&str) -> String) -> Template {
            Template {
                segments: self
                    .segments
                    .iter()
                    .map(|s| match s {
                        Segment::Lit(l) => Segment::Lit(f(l)),
                        e => e.clone(),
                    })
                    .collect(),
                source: self.source.clone(),
            }
        }

        pub fn render(&self, r: i64, n: i64) -> String {
            self.segments
                .iter()
                .map(|s| match s {
                    Segment::Lit(l) => l.clone(),
                    Segment::Expr(e) => e.eval(r, n).to_string(),
                })
                .collect()
        }

        /// Matches `input` literally, capturing a digit run for every
        /// placeholder. Returns `(expression, captured value)` pairs.
        pub fn capture(&self, input: &str) -> Option<Vec<(LinExpr, i64)>> {
            let mut rest = input;
            let mut out = Vec::new();
            for seg in &self.segments {
                match seg {
                    Segment::Lit(l) => rest = rest.strip_prefix(l.as_str())?,
                    Segment::Expr(e) => {
                        let len = rest.bytes().take_while(u8::is_ascii_digit).count();
                        if len == 0 {
                            return None;
                        }
                        out.push((*e, rest[..len].parse().ok()?));
                        rest = &rest[len..];
                    }
                }
            }
            rest.is_empty().then_some(out)
        }
    }
}

use template::{LinExpr, Template};

#[derive(Debug, Deserialize)]
struct RawCatalog {
    space: Vec<RawEntry>,
}

#[derive(Debug, Deserialize)]
struct RawEntry {
    id: String,
    display: String,
    ascii: String,
    family: Family,
    rank: RawRange,
    n: Option<RawRange>,
    mults: RawMults,
    dim_k0: Option<u32>,
    note: Option<String>,
}

#[derive(Debug, Deserialize)]
struct RawRange {
    min: Option<usize>,
    fixed: Option<usize>,
}

#[derive(Debug, Deserialize)]
struct RawMults {
    body: Option<String>,
    last: Option<String>,
    list: Option<Vec<u32>>,
    double: Option<String>,
}

#[derive(Debug, Clone)]
enum MultPattern {
    Series { body: LinExpr, last: LinExpr },
    Fixed(Vec<u32>),
}

/// One series of the catalog, e.g. `SL_{r+1}(R)/SO_{r+1}` for all `r >= 1`.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    id: String,
    display: Template,
    ascii: Template,
    family: Family,
    rank_min: usize,
    rank_fixed: Option<usize>,
    n_min: Option<usize>,
    mults: MultPattern,
    double: Option<LinExpr>,
    dim_k0: Option<u32>,
    note: Option<String>,
    pattern: String,
}

impl CatalogEntry {
    fn from_raw(raw: RawEntry) -> Result<Self> {
        let bad = |msg: &str| Error::Catalog(format!("{}: {msg}", raw.id));
        let mults = match (&raw.mults.list, &raw.mults.last) {
            (Some(list), None) => MultPattern::Fixed(list.clone()),
            (None, Some(last)) => MultPattern::Series {
                body: LinExpr::parse(raw.mults.body.as_deref().unwrap_or(last))?,
                last: LinExpr::parse(last)?,
            },
            _ => return Err(bad("mults needs either `list` or `last`")),
        };
        let double = raw
            .mults
            .double
            .as_deref()
            .map(LinExpr::parse)
            .transpose()?;
        let rank_min = raw
            .rank
            .fixed
            .or(raw.rank.min)
            .ok_or_else(|| bad("rank range"))?;
        if !raw.family.accepts_rank(rank_min) {
            return Err(bad("rank outside the family's range"));
        }
        let pattern = pattern_string(&raw.mults, raw.rank.fixed);
        Ok(CatalogEntry {
            display: Template::parse(&raw.display)?,
            ascii: Template::parse(&raw.ascii)?,
            family: raw.family,
            rank_min,
            rank_fixed: raw.rank.fixed,
            n_min: raw.n.map(|n| n.min.or(n.fixed).unwrap_or(1)),
            mults,
            double,
            dim_k0: raw.dim_k0,
            note: raw.note,
            pattern,
            id: raw.id,
        })
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Display-name template with `<expr>` placeholders.
    pub fn display_template(&self) -> &str {
        self.display.source()
    }

    pub fn ascii_template(&self) -> &str {
        self.ascii.source()
    }

    /// Multiplicity pattern as printed in tables, e.g. `(2,…,2,(2n,1))`.
    pub fn pattern(&self) -> &str {
        &self.pattern
    }

    pub fn rank_range(&self) -> (usize, Option<usize>) {
        (self.rank_min, self.rank_fixed)
    }

    pub fn n_min(&self) -> Option<usize> {
        self.n_min
    }

    pub fn note(&self) -> Option<&str> {
        self.note.as_deref()
    }

    fn accepts(&self, rank: usize, n: Option<usize>) -> bool {
        let rank_ok = rank >= self.rank_min && self.rank_fixed.is_none_or(|f| f == rank);
        let n_ok = match (self.n_min, n) {
            (Some(min), Some(n)) => n >= min,
            (None, None) => true,
            _ => false,
        };
        rank_ok && n_ok
    }

    /// The space of this series at the given parameters.
    pub fn instantiate(&self, rank: usize, n: Option<usize>) -> Result<SpaceDescriptor> {
        if !self.accepts(rank, n) {
            let mut valid = match self.rank_fixed {
                Some(f) => format!("r = {f}"),
                None => format!("r >= {}", self.rank_min),
            };
            if let Some(m) = self.n_min {
                valid.push_str(&format!(", n >= {m}"));
            }
            return Err(Error::UnknownSpace {
                name: format!("{} (r = {rank}, n = {n:?})", self.display.source()),
                valid,
            });
        }
        let (ri, ni) = (rank as i64, n.unwrap_or(0) as i64);
        let eval = |e: &LinExpr| -> Result<u32> {
            u32::try_from(e.eval(ri, ni))
                .map_err(|_| Error::InvalidMultiplicities("negative multiplicity".into()))
        };
        let singles: Vec<u32> = match &self.mults {
            MultPattern::Fixed(list) => list.clone(),
            MultPattern::Series { body, last } => {
                let mut v = vec![eval(body)?; rank - 1];
                v.push(eval(last)?);
                v
            }
        };
        let mut simple_mults: Vec<SimpleMultiplicity> = singles
            .into_iter()
            .map(SimpleMultiplicity::Single)
            .collect();
        if let Some(d) = &self.double {
            let last = simple_mults.last_mut().expect("rank >= 1");
            *last = SimpleMultiplicity::Pair(last.single(), eval(d)?);
        }
        let mut desc = SpaceDescriptor {
            name: self.display.render(ri, ni),
            ascii: self.ascii.render(ri, ni),
            entry: self.id.clone(),
            family: self.family,
            rank,
            n: n.map(|v| v as u32),
            simple_mults,
            dim_k0: self.dim_k0,
            note: self.note.clone(),
        };
        if desc.dim_k0.is_none() && desc.is_split() {
            desc.dim_k0 = Some(0);
        }
        desc.validate()?;
        Ok(desc)
    }

    /// Solves a captured placeholder list for `(r, n)`.
    fn solve(&self, captured: &[(LinExpr, i64)]) -> Option<(usize, Option<usize>)> {
        let bound = captured.iter().map(|&(_, v)| v).max().unwrap_or(0).max(0) as usize + 1;
        let ranks: Vec<usize> = match self.rank_fixed {
            Some(f) => vec![f],
            None => (self.rank_min..=bound.max(self.rank_min)).collect(),
        };
        let ns: Vec<Option<usize>> = match self.n_min {
            Some(min) => (min..=bound.max(min)).map(Some).collect(),
            None => vec![None],
        };
        for &r in &ranks {
            for &n in &ns {
                let ok = captured
                    .iter()
                    .all(|&(e, v)| e.eval(r as i64, n.unwrap_or(0) as i64) == v);
                if ok && self.accepts(r, n) {
                    return Some((r, n));
                }
            }
        }
        None
    }
}

fn pattern_string(m: &RawMults, fixed_rank: Option<usize>) -> String {
    let wrap_last = |last: String| match &m.double {
        Some(d) => format!("({last},{d})"),
        None => last,
    };
    match (&m.list, &m.last) {
        (Some(list), _) => {
            let mut items: Vec<String> = list.iter().map(u32::to_string).collect();
            if let Some(last) = items.pop() {
                items.push(wrap_last(last));
            }
            format!("({})", items.join(","))
        }
        (None, Some(last)) if fixed_rank == Some(1) => format!("({})", wrap_last(last.clone())),
        (None, Some(last)) => {
            let body = m.body.clone().unwrap_or_else(|| last.clone());
            format!("({body},…,{body},{})", wrap_last(last.clone()))
        }
        _ => String::new(),
    }
}

fn normalize_name(s: &str) -> String {
    s.chars()
        .filter(|c| !c.is_whitespace() && *c != '{' && *c != '}' && *c != '$' && *c != '\\')
        .map(|c| match c {
            'ℝ' => 'R',
            'ℂ' => 'C',
            'ℍ' => 'H',
            '𝕆' => 'O',
            c => c,
        })
        .collect()
}

pub struct Catalog {
    entries: Vec<CatalogEntry>,
}

impl Catalog {
    /// The bundled catalog.
    pub fn global() -> &'static Catalog {
        &CATALOG
    }

    pub fn from_toml(src: &str) -> Result<Self> {
        let raw: RawCatalog = toml::from_str(src).map_err(|e| Error::Catalog(e.to_string()))?;
        let entries = raw
            .space
            .into_iter()
            .map(CatalogEntry::from_raw)
            .collect::<Result<Vec<_>>>()?;
        Ok(Catalog { entries })
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn entry(&self, id: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.id == id)
    }

    /// Looks a space up by ASCII name (`SL5`, `SOo(5,2)`) or by display name
    /// (`SL_5(R)/SO_5`, `F_4^{-20}/Spin_9`).
    pub fn lookup(&self, name: &str) -> Result<SpaceDescriptor> {
        let trimmed = name.trim();
        for e in &self.entries {
            if let Some((r, n)) = e.ascii.capture(trimmed).and_then(|c| e.solve(&c)) {
                return e.instantiate(r, n);
            }
        }
        let norm = normalize_name(trimmed);
        for e in &self.entries {
            let t = e.display.map_literals(normalize_name);
            if let Some((r, n)) = t.capture(&norm).and_then(|c| e.solve(&c)) {
                return e.instantiate(r, n);
            }
        }
        Err(Error::UnknownSpace {
            name: name.to_string(),
            valid: self
                .entries
                .iter()
                .map(|e| e.ascii.source())
                .collect::<Vec<_>>()
                .join(", "),
        })
    }

    /// Instantiates a series given by id or display template.
    pub fn instantiate(
        &self,
        series: &str,
        rank: usize,
        n: Option<usize>,
    ) -> Result<SpaceDescriptor> {
        let key = normalize_name(series);
        let entry = self
            .entries
            .iter()
            .find(|e| {
                e.id == series || normalize_name(e.display.source()) == key || {
                    // accept the template with bare parameter names, e.g. `Sp_{r,r}/Sp_r Sp_r`
                    let bare = e.display.source().replace(['<', '>'], "");
                    normalize_name(&bare) == key
                }
            })
            .ok_or_else(|| Error::UnknownSpace {
                name: series.to_string(),
                valid: self
                    .entries
                    .iter()
                    .map(|e| e.id.as_str())
                    .collect::<Vec<_>>()
                    .join(", "),
            })?;
        entry.instantiate(rank, n)
    }

    /// Every space of the catalog with `r <= max_rank` and `n <= max_n`.
    pub fn instances(&self, max_rank: usize, max_n: usize) -> Vec<SpaceDescriptor> {
        let mut out = Vec::new();
        for e in &self.entries {
            let ranks: Vec<usize> = match e.rank_fixed {
                Some(f) => vec![f],
                None => (e.rank_min..=max_rank).collect(),
            };
            let ns: Vec<Option<usize>> = match e.n_min {
                Some(min) => (min..=max_n.max(min)).map(Some).collect(),
                None => vec![None],
            };
            for &r in &ranks {
                for &n in &ns {
                    if let Ok(d) = e.instantiate(r, n) {
                        out.push(d);
                    }
                }
            }
        }
        out
    }
}

/// Shorthand for `Catalog::global().lookup(name)`.
pub fn catalog_lookup(name: &str) -> Result<SpaceDescriptor> {
    Catalog::global().lookup(name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use SimpleMultiplicity::{Pair, Single};

    #[test]
    fn bundled_catalog_parses() {
        assert_eq!(Catalog::global().entries().len(), 33);
    }

    #[test]
    fn lookup_by_display_and_ascii() {
        let a = catalog_lookup("SL_5(R)/SO_5").unwrap();
        let b = catalog_lookup("SL5").unwrap();
        assert_eq!(a, b);
        assert_eq!(a.family(), Family::A);
        assert_eq!(a.rank(), 4);
        assert_eq!(a.simple_mults(), &[Single(1); 4]);
        assert_eq!(a.dim_k0(), Some(0));
    }

    #[test]
    fn instantiate_by_template() {
        let d = Catalog::global()
            .instantiate("Sp_{r,r}/Sp_r Sp_r", 2, None)
            .unwrap();
        assert_eq!(d.family(), Family::C);
        assert_eq!(d.simple_mults(), &[Single(4), Single(3)]);
        assert_eq!(d, catalog_lookup("Sp(2,2)").unwrap());
    }

    #[test]
    fn octonionic_plane() {
        let d = catalog_lookup("F_4^{-20}/Spin_9").unwrap();
        assert_eq!(d.family(), Family::BC);
        assert_eq!(d.rank(), 1);
        assert_eq!(d.simple_mults(), &[Pair(8, 7)]);
        assert_eq!(d.dim_k0(), None);
    }

    #[test]
    fn ascii_grammar_disambiguates() {
        let cases = [
            ("SOo(4,1)", Family::A, 1),
            ("SOo(5,2)", Family::B, 2),
            ("SOo(4,4)", Family::D, 4),
            ("SU(3,1)", Family::BC, 1),
            ("SU(3,3)", Family::C, 3),
            ("SO7(C)", Family::B, 3),
            ("SO8(C)", Family::D, 4),
            ("SO6(H)", Family::C, 3),
            ("SO7(H)", Family::BC, 3),
            ("Sp(3,1)", Family::BC, 1),
            ("E6(-14)", Family::BC, 2),
        ];
        for (name, fam, r) in cases {
            let d = catalog_lookup(name).unwrap();
            assert_eq!((d.family(), d.rank()), (fam, r), "{name}");
            assert_eq!(d.ascii(), name);
        }
    }

    #[test]
    fn unknown_names_list_valid_entries() {
        for bad in ["SL1", "SOo(2,2)", "Sp(1,1)", "SOo(2,1)", "X7", ""] {
            match catalog_lookup(bad) {
                Err(Error::UnknownSpace { valid, .. }) => assert!(valid.contains("SL<r+1>")),
                other => panic!("{bad}: {other:?}"),
            }
        }
    }

    #[test]
    fn typo_correction_is_recorded() {
        let d = catalog_lookup("SL3(C)").unwrap();
        assert_eq!(d.name(), "SL_{3}(C)/SU_{3}");
        assert!(d.note().unwrap().contains("r=1"));
    }

    #[test]
    fn root_multiplicities() {
        let sl5 = catalog_lookup("SL5").unwrap();
        let l = Root::from_integers(&[1, 0, -1, 0, 0]).unwrap();
        assert_eq!(root_multiplicity(&sl5, &l).unwrap(), 1);

        let so = catalog_lookup("SOo(7,3)").unwrap();
        for i in 0..3 {
            let mut v = vec![0; 3];
            v[i] = 1;
            assert_eq!(
                root_multiplicity(&so, &Root::from_integers(&v).unwrap()).unwrap(),
                4
            );
        }

        let su = catalog_lookup("SU(5,2)").unwrap();
        let two_e1 = Root::from_integers(&[2, 0]).unwrap();
        assert_eq!(root_multiplicity(&su, &two_e1).unwrap(), 1);
        let e1 = Root::from_integers(&[1, 0]).unwrap();
        assert_eq!(root_multiplicity(&su, &e1).unwrap(), 6);

        let not_root = Root::from_integers(&[3, 0]).unwrap();
        assert!(matches!(
            root_multiplicity(&su, &not_root),
            Err(Error::NotARoot(_))
        ));
    }

    #[test]
    fn dimensions() {
        assert_eq!(space_dimension(&catalog_lookup("SL5").unwrap()), 14);
        for n in 2..8u32 {
            // complex hyperbolic n-space
            let d = catalog_lookup(&format!("SU({n},1)")).unwrap();
            assert_eq!(space_dimension(&d), 2 * n as usize);
            // real hyperbolic (n+1)-space
            let h = catalog_lookup(&format!("SOo({},1)", n + 1)).unwrap();
            assert_eq!(space_dimension(&h), n as usize + 1);
        }
        assert_eq!(space_dimension(&catalog_lookup("F4(-20)").unwrap()), 16);
    }

    #[test]
    fn custom_descriptor_validation() {
        assert!(
            SpaceDescriptor::custom("x", Family::B, 2, vec![Single(1), Single(2)], None).is_ok()
        );
        // long and short roots mixed up in F4
        assert!(SpaceDescriptor::custom(
            "x",
            Family::F4,
            4,
            vec![Single(1), Single(2), Single(2), Single(2)],
            None
        )
        .is_err());
        assert!(SpaceDescriptor::custom("x", Family::BC, 1, vec![Pair(2, 2)], None).is_err());
        assert!(SpaceDescriptor::custom("x", Family::BC, 1, vec![Single(2)], None).is_err());
        assert!(SpaceDescriptor::custom("x", Family::A, 2, vec![Single(1)], None).is_err());
        assert!(SpaceDescriptor::custom("x", Family::A, 1, vec![Single(0)], None).is_err());
    }

    #[test]
    fn pattern_strings() {
        let c = Catalog::global();
        assert_eq!(
            c.entry("su-indefinite").unwrap().pattern(),
            "(2,…,2,(2n,1))"
        );
        assert_eq!(c.entry("e6-minus14").unwrap().pattern(), "(6,(8,1))");
        assert_eq!(c.entry("f4-minus20").unwrap().pattern(), "((8,7))");
        assert_eq!(c.entry("real-hyperbolic").unwrap().pattern(), "(n)");
        assert_eq!(c.entry("so-indefinite").unwrap().pattern(), "(1,…,1,n)");
    }

    #[test]
    fn instance_names_are_unambiguous() {
        let all = Catalog::global().instances(6, 4);
        for d in &all {
            assert_eq!(&catalog_lookup(d.ascii()).unwrap(), d, "{}", d.ascii());
        }
    }
}
