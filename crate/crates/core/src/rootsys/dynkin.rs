use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{Family, Root, RootSystem};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vertex {
    /// 1-based simple root index.
    pub index: usize,
    /// Set when `2 * alpha_index` is also a root.
    pub double_circle: bool,
}

/// Arrow decoration of an edge, pointing from the longer to the shorter root.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Arrow {
    None,
    IToJ,
    JToI,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub i: usize,
    pub j: usize,
    pub lines: u8,
    pub arrow: Arrow,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DynkinDiagram {
    pub family: Family,
    pub rank: usize,
    pub vertices: Vec<Vertex>,
    /// Edges with `i < j`, in lexicographic order.
    pub edges: Vec<Edge>,
    /// Rendering remarks that the structural data does not capture.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

/// `4 <a,b>^2 / (<a,a> <b,b>)`, i.e. `4 cos^2` of the angle between `a` and `b`.
fn line_count(a: &Root, b: &Root) -> u8 {
    let dot: i64 = a
        .scaled()
        .iter()
        .zip(b.scaled())
        .map(|(&x, &y)| i64::from(x) * i64::from(y))
        .sum();
    let num = 4 * dot * dot;
    let den = a.scaled_norm2() * b.scaled_norm2();
    debug_assert_eq!(
        num % den,
        0,
        "simple roots meet at a crystallographic angle"
    );
    u8::try_from(num / den).expect("at most three lines")
}

pub fn dynkin_diagram(rs: &RootSystem) -> DynkinDiagram {
    let simple = rs.simple();
    let vertices = (1..=rs.rank())
        .map(|index| Vertex {
            index,
            double_circle: rs.simple_root_doubles(index).unwrap_or(false),
        })
        .collect();

    let mut edges = Vec::new();
    for i in 0..simple.len() {
        for j in (i + 1)..simple.len() {
            let lines = line_count(&simple[i], &simple[j]);
            if lines == 0 {
                continue;
            }
            let (li, lj) = (simple[i].scaled_norm2(), simple[j].scaled_norm2());
            let arrow = match li.cmp(&lj) {
                std::cmp::Ordering::Greater => Arrow::IToJ,
                std::cmp::Ordering::Less => Arrow::JToI,
                std::cmp::Ordering::Equal => Arrow::None,
            };
            edges.push(Edge {
                i: i + 1,
                j: j + 1,
                lines,
                arrow,
            });
        }
    }

    let mut notes = Vec::new();
    if rs.family() == Family::BC && rs.rank() >= 2 {
        let r = rs.rank();
        notes.push(format!(
            "reference figure draws a double-headed double arrow between alpha_{} and (alpha_{r}, 2 alpha_{r}); \
             rendered here as an arrow toward the short root alpha_{r}",
            r - 1
        ));
    }

    DynkinDiagram {
        family: rs.family(),
        rank: rs.rank(),
        vertices,
        edges,
        notes,
    }
}

impl DynkinDiagram {
    /// Number of lines between two vertices (1-based), 0 when not joined.
    pub fn lines(&self, a: usize, b: usize) -> u8 {
        let (i, j) = if a < b { (a, b) } else { (b, a) };
        self.edges
            .iter()
            .find(|e| e.i == i && e.j == j)
            .map_or(0, |e| e.lines)
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.lines(a, b) > 0
    }

    /// Whether an arrow points from vertex `from` to vertex `to`.
    pub fn arrow_from_to(&self, from: usize, to: usize) -> bool {
        self.edges.iter().any(|e| {
            (e.i == from && e.j == to && e.arrow == Arrow::IToJ)
                || (e.j == from && e.i == to && e.arrow == Arrow::JToI)
        })
    }

    pub fn neighbours(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|e| {
                if e.i == v {
                    Some(e.j)
                } else if e.j == v {
                    Some(e.i)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Connected components of the subdiagram spanned by `subset`.
    pub fn components(&self, subset: &[usize]) -> Vec<Vec<usize>> {
        let mut seen = vec![false; subset.len()];
        let mut out = Vec::new();
        for start in 0..subset.len() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![subset[start]];
            let mut stack = vec![start];
            while let Some(k) = stack.pop() {
                for (m, &v) in subset.iter().enumerate() {
                    if !seen[m] && self.adjacent(subset[k], v) {
                        seen[m] = true;
                        comp.push(v);
                        stack.push(m);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out.sort();
        out
    }

    /// `A4`, `BC3`, `F4`: the rank is omitted for exceptional families.
    pub fn label(&self) -> String {
        match self.family.fixed_rank() {
            Some(_) => self.family.to_string(),
            None => format!("{}{}", self.family, self.rank),
        }
    }

    /// Graphviz rendering. Double-circle vertices get `peripheries=2`;
    /// edges carry their line count and an arrowhead toward the shorter root.
    pub fn to_dot(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "digraph \"{}\" {{", self.label());
        let _ = writeln!(s, "  rankdir=LR;");
        let _ = writeln!(s, "  node [shape=circle, label=\"\"];");
        for note in &self.notes {
            let _ = writeln!(s, "  // {note}");
        }
        for v in &self.vertices {
            let mut attrs = format!("xlabel=\"α{}\"", v.index);
            if v.double_circle {
                attrs.push_str(", peripheries=2");
            }
            let _ = writeln!(s, "  a{} [{attrs}];", v.index);
        }
        for e in &self.edges {
            let (from, to, dir) = match e.arrow {
                Arrow::None => (e.i, e.j, "none"),
                Arrow::IToJ => (e.i, e.j, "forward"),
                Arrow::JToI => (e.j, e.i, "forward"),
            };
            let _ = writeln!(
                s,
                "  a{from} -> a{to} [dir={dir}, label=\"{}\", penwidth={}];",
                e.lines, e.lines
            );
        }
        s.push_str("}\n");
        s
    }
}

/// All vertex permutations preserving decorations, line counts and arrows.
///
/// Permutations are returned as images of `1..=rank` (entry `k` is the image
/// of vertex `k + 1`), sorted lexicographically, so the identity comes first.
pub fn diagram_automorphisms(dd: &DynkinDiagram) -> Vec<Vec<usize>> {
    let n = dd.vertices.len();
    let double: Vec<bool> = dd.vertices.iter().map(|v| v.double_circle).collect();
    let mut lines = vec![vec![0u8; n]; n];
    let mut arrow = vec![vec![false; n]; n];
    for e in &dd.edges {
        let (i, j) = (e.i - 1, e.j - 1);
        lines[i][j] = e.lines;
        lines[j][i] = e.lines;
        match e.arrow {
            Arrow::IToJ => arrow[i][j] = true,
            Arrow::JToI => arrow[j][i] = true,
            Arrow::None => {}
        }
    }

    let mut out = Vec::new();
    let mut image = Vec::with_capacity(n);
    let mut used = vec![false; n];
    extend_automorphism(&double, &lines, &arrow, &mut image, &mut used, &mut out);
    out
}

fn extend_automorphism(
    double: &[bool],
    lines: &[Vec<u8>],
    arrow: &[Vec<bool>],
    image: &mut Vec<usize>,
    used: &mut [bool],
    out: &mut Vec<Vec<usize>>,
) {
    let n = double.len();
    let k = image.len();
    if k == n {
        out.push(image.iter().map(|v| v + 1).collect());
        return;
    }
    for cand in 0..n {
        if used[cand] || double[cand] != double[k] {
            continue;
        }
        let consistent = (0..k).all(|m| {
            let pm = image[m];
            lines[k][m] == lines[cand][pm]
                && arrow[k][m] == arrow[cand][pm]
                && arrow[m][k] == arrow[pm][cand]
        });
        if consistent {
            used[cand] = true;
            image.push(cand);
            extend_automorphism(double, lines, arrow, image, used, out);
            image.pop();
            used[cand] = false;
        }
    }
}
