//! Restricted root systems of the ten irreducible families, their simple
//! roots, Weyl reflections and Dynkin diagrams.
//!
//! Coordinates are stored scaled by two so that the half-integer vectors of
//! the E-series and F4 are exact integers. A stored coordinate `c` stands for
//! the real number `c / 2`.

mod dynkin;
mod families;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{self, Rational};

pub use dynkin::{diagram_automorphisms, dynkin_diagram, Arrow, DynkinDiagram, Edge, Vertex};

/// Scale factor between stored coordinates and actual coordinates.
pub const SCALE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E6,
    E7,
    E8,
    F4,
    G2,
    BC,
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E6,
        Family::E7,
        Family::E8,
        Family::F4,
        Family::G2,
        Family::BC,
    ];

    /// Smallest admissible rank and, for exceptional families, the only one.
    pub fn rank_range(self) -> (usize, Option<usize>) {
        match self {
            Family::A | Family::BC => (1, None),
            Family::B | Family::C => (2, None),
            Family::D => (3, None),
            Family::E6 => (6, Some(6)),
            Family::E7 => (7, Some(7)),
            Family::E8 => (8, Some(8)),
            Family::F4 => (4, Some(4)),
            Family::G2 => (2, Some(2)),
        }
    }

    pub fn accepts_rank(self, rank: usize) -> bool {
        let (lo, hi) = self.rank_range();
        rank >= lo && hi.is_none_or(|h| rank == h)
    }

    fn valid_ranks(self) -> String {
        match self.rank_range() {
            (lo, None) => format!("r >= {lo}"),
            (_, Some(r)) => format!("r = {r}"),
        }
    }

    pub fn is_reduced(self) -> bool {
        self != Family::BC
    }

    /// Fixed rank of an exceptional family.
    pub fn fixed_rank(self) -> Option<usize> {
        self.rank_range().1
    }

    pub fn ambient_dim(self, rank: usize) -> usize {
        match self {
            Family::A => rank + 1,
            Family::B | Family::C | Family::D | Family::BC => rank,
            Family::E6 | Family::E7 | Family::E8 => 8,
            Family::F4 => 4,
            Family::G2 => 3,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E6 => "E6",
            Family::E7 => "E7",
            Family::E8 => "E8",
            Family::F4 => "F4",
            Family::G2 => "G2",
            Family::BC => "BC",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.to_string().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

/// A nonzero vector of the ambient space, coordinates scaled by [`SCALE`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i32>", into = "Vec<i32>")]
pub struct Root(Vec<i32>);

impl Root {
    pub fn from_scaled(coords: Vec<i32>) -> Result<Self> {
        if coords.iter().all(|&c| c == 0) {
            return Err(Error::ZeroRoot);
        }
        Ok(Root(coords))
    }

    /// Builds a root from integer (unscaled) coordinates.
    pub fn from_integers(coords: &[i32]) -> Result<Self> {
        Self::from_scaled(coords.iter().map(|c| c * SCALE).collect())
    }

    pub fn scaled(&self) -> &[i32] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// Actual coordinates as rationals.
    pub fn coords(&self) -> Vec<Rational> {
        self.0
            .iter()
            .map(|&c| Rational::new(i64::from(c), i64::from(SCALE)))
            .collect()
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    pub fn scale_by(&self, k: i32) -> Option<Root> {
        Root::from_scaled(self.0.iter().map(|c| c * k).collect()).ok()
    }

    /// Squared length in scaled units (four times the true squared length).
    pub fn scaled_norm2(&self) -> i64 {
        scaled_dot(&self.0, &self.0)
    }
}

impl From<Root> for Vec<i32> {
    fn from(r: Root) -> Self {
        r.0
    }
}

impl TryFrom<Vec<i32>> for Root {
    type Error = Error;

    fn try_from(v: Vec<i32>) -> Result<Self> {
        Root::from_scaled(v)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

fn scaled_dot(a: &[i32], b: &[i32]) -> i64 {
    a.iter()
        .zip(b)
        .map(|(&x, &y)| i64::from(x) * i64::from(y))
        .sum()
}

/// Euclidean pairing of two roots.
pub fn inner(lambda: &Root, mu: &Root) -> Result<Rational> {
    if lambda.dim() != mu.dim() {
        return Err(Error::DimensionMismatch {
            left: lambda.dim(),
            right: mu.dim(),
        });
    }
    let s = i64::from(SCALE);
    Ok(Rational::new(scaled_dot(&lambda.0, &mu.0), s * s))
}

/// Weyl reflection `s_lambda(x) = x - 2 <x, lambda> / |lambda|^2 * lambda`.
pub fn reflect(lambda: &Root, x: &Root) -> Result<Root> {
    if lambda.dim() != x.dim() {
        return Err(Error::DimensionMismatch {
            left: lambda.dim(),
            right: x.dim(),
        });
    }
    let num = 2 * scaled_dot(&x.0, &lambda.0);
    let den = lambda.scaled_norm2();
    let coeff = Rational::new(num, den);
    let mut out = Vec::with_capacity(x.dim());
    for (&xi, &li) in x.0.iter().zip(&lambda.0) {
        let v = Rational::from_integer(i64::from(xi)) - coeff * i64::from(li);
        if !v.is_integer() {
            return Err(Error::NonIntegralReflection);
        }
        let v = i32::try_from(v.to_integer()).map_err(|_| Error::NonIntegralReflection)?;
        out.push(v);
    }
    Root::from_scaled(out)
}

/// A restricted root system with a chosen set of simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RootSystemRecord", into = "RootSystemRecord")]
pub struct RootSystem {
    family: Family,
    rank: usize,
    ambient_dim: usize,
    roots: Vec<Root>,
    positive: Vec<Root>,
    simple: Vec<Root>,
}

/// JSON shape of a root system. Deserializing rebuilds the system from
/// family and rank and rejects records whose roots disagree.
#[derive(Debug, Clone, Serialize, Deserialize)]
struct RootSystemRecord {
    family: Family,
    rank: usize,
    ambient_dim: usize,
    scale: i32,
    roots: Vec<Root>,
    positive: Vec<Root>,
    simple: Vec<Root>,
}

impl From<RootSystem> for RootSystemRecord {
    fn from(rs: RootSystem) -> Self {
        RootSystemRecord {
            family: rs.family,
            rank: rs.rank,
            ambient_dim: rs.ambient_dim,
            scale: SCALE,
            roots: rs.roots,
            positive: rs.positive,
            simple: rs.simple,
        }
    }
}

impl TryFrom<RootSystemRecord> for RootSystem {
    type Error = Error;

    fn try_from(rec: RootSystemRecord) -> Result<Self> {
        let rs = build_root_system(rec.family, rec.rank)?;
        if rec.scale != SCALE
            || rec.ambient_dim != rs.ambient_dim
            || rec.roots != rs.roots
            || rec.positive != rs.positive
            || rec.simple != rs.simple
        {
            return Err(Error::Catalog(format!(
                "root system record for {}{} does not match its definition",
                rec.family, rec.rank
            )));
        }
        Ok(rs)
    }
}

/// Builds the root system of `family` at `rank` with the simple roots used
/// throughout this crate.
pub fn build_root_system(family: Family, rank: usize) -> Result<RootSystem> {
    if !family.accepts_rank(rank) {
        return Err(Error::InvalidRank {
            family,
            rank,
            valid: family.valid_ranks(),
        });
    }
    let data = families::construct(family, rank);
    let set: BTreeSet<Root> = data.roots.into_iter().collect();
    debug_assert_eq!(
        set,
        data.positive
            .iter()
            .cloned()
            .chain(data.positive.iter().map(Root::neg))
            .collect::<BTreeSet<_>>()
    );
    Ok(RootSystem {
        family,
        rank,
        ambient_dim: family.ambient_dim(rank),
        roots: set.into_iter().collect(),
        positive: data.positive,
        simple: data.simple,
    })
}

impl RootSystem {
    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// All roots, sorted.
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn positive(&self) -> &[Root] {
        &self.positive
    }

    pub fn simple(&self) -> &[Root] {
        &self.simple
    }

    /// Simple root `alpha_i`, 1-based.
    pub fn simple_root(&self, index: usize) -> Result<&Root> {
        if index == 0 || index > self.rank {
            return Err(Error::InvalidRootIndex {
                index,
                rank: self.rank,
            });
        }
        Ok(&self.simple[index - 1])
    }

    pub fn contains(&self, v: &Root) -> bool {
        self.roots.binary_search(v).is_ok()
    }

    pub fn is_positive(&self, v: &Root) -> bool {
        self.positive.contains(v)
    }

    /// Coefficients of `v` in the basis of simple roots, when integral.
    pub fn simple_expansion(&self, v: &Root) -> Option<Vec<i64>> {
        let cols: Vec<&[i32]> = self.simple.iter().map(Root::scaled).collect();
        exact::integer_coefficients(&cols, v.scaled())
    }

    /// Distinct squared lengths occurring in the system, in scaled units.
    pub fn length_classes(&self) -> Vec<i64> {
        let set: BTreeSet<i64> = self.roots.iter().map(Root::scaled_norm2).collect();
        set.into_iter().collect()
    }

    /// Whether `2 * alpha_i` is a root.
    pub fn simple_root_doubles(&self, index: usize) -> Result<bool> {
        let a = self.simple_root(index)?;
        Ok(a.scale_by(2).is_some_and(|d| self.contains(&d)))
    }
}
